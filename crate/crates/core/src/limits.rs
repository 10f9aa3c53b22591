/// Caps on the exponential enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest vertex count for minimal-cover enumeration.
    pub max_minimal_cover_vertices: usize,
    /// Largest vertex count for the exhaustive strong-cover scan.
    pub max_strong_cover_vertices: usize,
    /// Largest number of splitting steps the decomposition oracle may take.
    pub oracle_max_steps: usize,
}

/// Environment variable overriding both vertex caps.
pub const MAX_N_ENV: &str = "ORIENTED_IDEAL_MAX_N";

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_minimal_cover_vertices: 24,
            max_strong_cover_vertices: 20,
            oracle_max_steps: 1 << 22,
        }
    }
}

impl Limits {
    /// Both vertex caps set to `n`.
    pub fn with_max_n(self, n: usize) -> Self {
        Limits {
            max_minimal_cover_vertices: n,
            max_strong_cover_vertices: n,
            ..self
        }
    }

    /// Defaults, with the vertex caps taken from `ORIENTED_IDEAL_MAX_N` when
    /// it holds a number.
    pub fn from_env() -> Self {
        match std::env::var(MAX_N_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            Some(n) => Limits::default().with_max_n(n),
            None => Limits::default(),
        }
    }
}
