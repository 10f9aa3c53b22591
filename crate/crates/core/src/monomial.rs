//! Exact monomial-ideal arithmetic over variables `0, 1, ..`.
//!
//! Nothing here knows about graphs; variable names are only supplied when
//! rendering.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial as a sparse exponent vector, sorted by variable, with every
/// stored exponent positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(usize, u32)>,
}

impl Monomial {
    /// The monomial 1.
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: usize) -> Self {
        Monomial::power(v, 1)
    }

    /// `x_v^e`; `e = 0` gives 1.
    pub fn power(v: usize, e: u32) -> Self {
        Monomial {
            exps: if e == 0 { vec![] } else { vec![(v, e)] },
        }
    }

    /// Builds a monomial from `(variable, exponent)` pairs; repeated
    /// variables multiply.
    pub fn from_pairs(pairs: &[(usize, u32)]) -> Result<Self> {
        pairs.iter().try_fold(Monomial::one(), |acc, &(v, e)| {
            acc.mul(&Monomial::power(v, e))
        })
    }

    /// `(variable, exponent)` pairs in variable order.
    pub fn exponents(&self) -> &[(usize, u32)] {
        &self.exps
    }

    pub fn exponent(&self, v: usize) -> u32 {
        match self.exps.binary_search_by_key(&v, |&(u, _)| u) {
            Ok(i) => self.exps[i].1,
            Err(_) => 0,
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| u64::from(e)).sum()
    }

    pub fn support(&self) -> Vec<usize> {
        self.exps.iter().map(|&(v, _)| v).collect()
    }

    /// `Some((v, e))` when the monomial is `x_v^e` with `e > 0`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        match self.exps.as_slice() {
            [single] => Some(*single),
            _ => None,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        let mut theirs = other.exps.iter().peekable();
        'outer: for &(v, e) in &self.exps {
            while let Some(&&(u, f)) = theirs.peek() {
                theirs.next();
                match u.cmp(&v) {
                    Ordering::Less => continue,
                    Ordering::Equal if f >= e => continue 'outer,
                    _ => return false,
                }
            }
            return false;
        }
        true
    }

    fn merge(
        &self,
        other: &Monomial,
        mut combine: impl FnMut(u32, u32) -> Option<u32>,
    ) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() || j < other.exps.len() {
            let a = self.exps.get(i).copied();
            let b = other.exps.get(j).copied();
            let (v, e) = match (a, b) {
                (Some((u, e)), Some((w, f))) if u == w => {
                    i += 1;
                    j += 1;
                    (u, combine(e, f)?)
                }
                (Some((u, e)), Some((w, _))) if u < w => {
                    i += 1;
                    (u, combine(e, 0)?)
                }
                (Some((u, e)), None) => {
                    i += 1;
                    (u, combine(e, 0)?)
                }
                (_, Some((w, f))) => {
                    j += 1;
                    (w, combine(0, f)?)
                }
                (None, None) => unreachable!(),
            };
            if e > 0 {
                exps.push((v, e));
            }
        }
        Some(Monomial { exps })
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.merge(other, |a, b| a.checked_add(b))
            .ok_or(Error::ExponentOverflow)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| Some(a.max(b))).unwrap()
    }

    /// `self / other`, if `other` divides `self`.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        self.merge(other, |a, b| a.checked_sub(b))
    }

    /// Product of the support variables.
    pub fn radical(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&(v, _)| (v, 1)).collect(),
        }
    }

    pub fn display<'a, S: AsRef<str>>(&'a self, names: &'a [S]) -> impl fmt::Display + 'a {
        MonomialDisplay { m: self, names }
    }
}

/// Lexicographic order with `x_0 > x_1 > ..`, largest first: at the first
/// variable where the exponents differ, the larger exponent sorts earlier.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.exps.get(i), other.exps.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Less,
                (None, Some(_)) => return Ordering::Greater,
                (Some(&(u, e)), Some(&(w, f))) => match u.cmp(&w) {
                    Ordering::Less => return Ordering::Less,
                    Ordering::Greater => return Ordering::Greater,
                    Ordering::Equal => match f.cmp(&e) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        unequal => return unequal,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct MonomialDisplay<'a, S> {
    m: &'a Monomial,
    names: &'a [S],
}

fn var_name<S: AsRef<str>>(names: &[S], v: usize) -> String {
    names
        .get(v)
        .map_or_else(|| format!("x{}", v + 1), |s| s.as_ref().to_string())
}

fn write_power<S: AsRef<str>>(
    f: &mut fmt::Formatter<'_>,
    names: &[S],
    v: usize,
    e: u32,
) -> fmt::Result {
    if e == 1 {
        write!(f, "{}", var_name(names, v))
    } else {
        write!(f, "{}^{}", var_name(names, v), e)
    }
}

impl<S: AsRef<str>> fmt::Display for MonomialDisplay<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return f.write_str("1");
        }
        for (i, &(v, e)) in self.m.exps.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write_power(f, self.names, v, e)?;
        }
        Ok(())
    }
}

/// A proper monomial ideal held by its minimal generators in canonical
/// order. No generators means the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero() -> Self {
        MonomialIdeal::default()
    }

    /// The ideal generated by `gens`, reduced to minimal generators.
    /// Fails with [`Error::UnitIdeal`] if a generator is 1.
    pub fn new(gens: Vec<Monomial>) -> Result<Self> {
        if gens.iter().any(Monomial::is_one) {
            return Err(Error::UnitIdeal);
        }
        Ok(Self::minimalize(gens))
    }

    fn minimalize(mut gens: Vec<Monomial>) -> Self {
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        for m in gens {
            if !kept.iter().any(|k| k.divides(&m)) {
                kept.push(m);
            }
        }
        kept.sort();
        MonomialIdeal { gens: kept }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_subset(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// `I ∩ J`: pairwise lcms of generators, minimalized.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let lcms = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)))
            .collect();
        Self::minimalize(lcms)
    }

    /// `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        Self::minimalize(self.gens.iter().chain(&other.gens).cloned().collect())
    }

    /// `I + (m)` for a monomial `m ≠ 1`.
    pub fn with_generator(&self, m: Monomial) -> Result<MonomialIdeal> {
        if m.is_one() {
            return Err(Error::UnitIdeal);
        }
        let mut gens = self.gens.clone();
        gens.push(m);
        Ok(Self::minimalize(gens))
    }

    pub fn radical(&self) -> MonomialIdeal {
        Self::minimalize(self.gens.iter().map(Monomial::radical).collect())
    }

    /// The pure-power form, when every minimal generator is a power of a
    /// single variable.
    pub fn as_irreducible(&self) -> Option<IrreducibleIdeal> {
        let powers = self
            .gens
            .iter()
            .map(Monomial::as_pure_power)
            .collect::<Option<Vec<_>>>()?;
        Some(
            IrreducibleIdeal::from_powers(powers)
                .expect("minimal pure powers use distinct variables"),
        )
    }

    /// CAS syntax: `ideal(x1^3*x2, x2^4*x3)`; the zero ideal is `ideal(0)`.
    pub fn display<'a, S: AsRef<str>>(&'a self, names: &'a [S]) -> impl fmt::Display + 'a {
        IdealDisplay { ideal: self, names }
    }
}

/// Equality of canonical generator sets.
pub fn ideal_equals(a: &MonomialIdeal, b: &MonomialIdeal) -> bool {
    a == b
}

struct IdealDisplay<'a, S> {
    ideal: &'a MonomialIdeal,
    names: &'a [S],
}

impl<S: AsRef<str>> fmt::Display for IdealDisplay<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ideal.is_zero() {
            return f.write_str("ideal(0)");
        }
        f.write_str("ideal(")?;
        for (i, g) in self.ideal.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(self.names))?;
        }
        f.write_str(")")
    }
}

/// An ideal `(x_{i1}^{a1}, .., x_{is}^{as})` generated by pure powers of
/// distinct variables. The empty list is the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IrreducibleIdeal {
    powers: Vec<(usize, u32)>,
}

impl IrreducibleIdeal {
    /// Fails if a variable repeats or an exponent is zero (a unit generator).
    pub fn from_powers(mut powers: Vec<(usize, u32)>) -> Result<Self> {
        powers.sort_unstable();
        if powers.iter().any(|&(_, e)| e == 0) {
            return Err(Error::UnitIdeal);
        }
        if let Some(w) = powers.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::RepeatedVariable(w[0].0));
        }
        Ok(IrreducibleIdeal { powers })
    }

    /// `(variable, exponent)` pairs in variable order.
    pub fn powers(&self) -> &[(usize, u32)] {
        &self.powers
    }

    pub fn support(&self) -> Vec<usize> {
        self.powers.iter().map(|&(v, _)| v).collect()
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal {
            gens: self
                .powers
                .iter()
                .map(|&(v, e)| Monomial::power(v, e))
                .collect(),
        }
    }

    /// Inclusion of irreducible ideals: every `x^a` here has some `x^b`
    /// with `b ≤ a` in `other`.
    pub fn is_subset(&self, other: &IrreducibleIdeal) -> bool {
        self.powers.iter().all(|&(v, a)| {
            other
                .powers
                .binary_search_by_key(&v, |&(u, _)| u)
                .is_ok_and(|i| other.powers[i].1 <= a)
        })
    }

    /// Component text form: `(x1^3,x3,x4^2)`; the zero ideal is `(0)`.
    pub fn display<'a, S: AsRef<str>>(&'a self, names: &'a [S]) -> impl fmt::Display + 'a {
        ComponentDisplay { ideal: self, names }
    }
}

/// Number of variables in the support, which is the height of the radical.
pub fn support_height(p: &IrreducibleIdeal) -> usize {
    p.powers.len()
}

/// Canonical order: by support (size, then lexicographic), then exponents.
impl Ord for IrreducibleIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.powers
            .len()
            .cmp(&other.powers.len())
            .then_with(|| self.support().cmp(&other.support()))
            .then_with(|| self.powers.cmp(&other.powers))
    }
}

impl PartialOrd for IrreducibleIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct ComponentDisplay<'a, S> {
    ideal: &'a IrreducibleIdeal,
    names: &'a [S],
}

impl<S: AsRef<str>> fmt::Display for ComponentDisplay<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ideal.powers.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, &(v, e)) in self.ideal.powers.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write_power(f, self.names, v, e)?;
        }
        f.write_str(")")
    }
}

/// Joins components as `(x1,x3) ∩ (x2^2,x3)`.
pub fn display_decomposition<S: AsRef<str>>(
    components: &[IrreducibleIdeal],
    names: &[S],
) -> String {
    components
        .iter()
        .map(|c| c.display(names).to_string())
        .collect::<Vec<_>>()
        .join(" ∩ ")
}

/// Intersection of all `components`; the zero ideal for an empty list is
/// never needed, so an empty list is a caller bug.
pub fn intersect_all(components: &[IrreducibleIdeal]) -> MonomialIdeal {
    let mut iter = components.iter();
    let first = iter.next().expect("at least one component").to_ideal();
    iter.fold(first, |acc, c| acc.intersect(&c.to_ideal()))
}

/// Irredundant irreducible decomposition by generator splitting.
///
/// If some minimal generator `m` is not a pure power, write `m = u·v` with
/// `u` the power of its first variable and recurse on `I + (u)` and
/// `I + (v)`. Ideals whose generators are all pure powers are irreducible.
/// Redundant components are dropped by testing each against the
/// intersection of the others. Output is canonically sorted.
pub fn irreducible_decomposition_oracle(
    ideal: &MonomialIdeal,
    max_steps: usize,
) -> Result<Vec<IrreducibleIdeal>> {
    let mut steps = 0;
    let mut components = split(ideal, &mut steps, max_steps)?;
    components.sort();
    components.dedup();
    let mut i = 0;
    while i < components.len() && components.len() > 1 {
        let others: Vec<IrreducibleIdeal> = components
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, c)| c.clone())
            .collect();
        if intersect_all(&others).is_subset(&components[i].to_ideal()) {
            components.remove(i);
        } else {
            i += 1;
        }
    }
    Ok(components)
}

fn split(
    ideal: &MonomialIdeal,
    steps: &mut usize,
    max_steps: usize,
) -> Result<Vec<IrreducibleIdeal>> {
    *steps += 1;
    if *steps > max_steps {
        return Err(Error::OracleBudget(max_steps));
    }
    let Some(pivot) = ideal.gens.iter().find(|m| m.as_pure_power().is_none()) else {
        return Ok(vec![ideal
            .as_irreducible()
            .expect("all generators are pure powers")]);
    };
    let (v, e) = pivot.exps[0];
    let head = Monomial::power(v, e);
    let tail = pivot.quotient(&head).expect("head divides pivot");
    let mut out = split(&ideal.with_generator(head)?, steps, max_steps)?;
    out.extend(split(&ideal.with_generator(tail)?, steps, max_steps)?);
    Ok(keep_minimal(out))
}

/// Keeps the inclusion-minimal ideals, without duplicates.
fn keep_minimal(mut list: Vec<IrreducibleIdeal>) -> Vec<IrreducibleIdeal> {
    list.sort();
    list.dedup();
    let keep: Vec<bool> = list
        .iter()
        .enumerate()
        .map(|(i, q)| {
            !list
                .iter()
                .enumerate()
                .any(|(j, p)| j != i && p.is_subset(q))
        })
        .collect();
    list.into_iter()
        .zip(keep)
        .filter_map(|(q, k)| k.then_some(q))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(pairs: &[(usize, u32)]) -> Monomial {
        Monomial::from_pairs(pairs).unwrap()
    }

    fn ideal(gens: &[&[(usize, u32)]]) -> MonomialIdeal {
        MonomialIdeal::new(gens.iter().map(|p| mono(p)).collect()).unwrap()
    }

    fn irr(powers: &[(usize, u32)]) -> IrreducibleIdeal {
        IrreducibleIdeal::from_powers(powers.to_vec()).unwrap()
    }

    const NAMES: [&str; 5] = ["x1", "x2", "x3", "x4", "x5"];

    #[test]
    fn divisibility_and_products() {
        let a = mono(&[(0, 1), (1, 2)]);
        let b = mono(&[(0, 2), (1, 2), (3, 1)]);
        assert!(a.divides(&b) && !b.divides(&a));
        assert!(Monomial::one().divides(&a));
        assert!(!mono(&[(2, 1)]).divides(&a));
        assert_eq!(a.mul(&a).unwrap(), mono(&[(0, 2), (1, 4)]));
        assert_eq!(
            a.lcm(&mono(&[(1, 1), (2, 3)])),
            mono(&[(0, 1), (1, 2), (2, 3)])
        );
        assert_eq!(b.quotient(&a).unwrap(), mono(&[(0, 1), (3, 1)]));
        assert!(a.quotient(&b).is_none());
        let big = Monomial::power(0, u32::MAX);
        assert_eq!(big.mul(&Monomial::var(0)), Err(Error::ExponentOverflow));
    }

    #[test]
    fn minimal_generators() {
        assert_eq!(
            ideal(&[&[(0, 1), (1, 1)], &[(0, 1), (1, 2)]]).generators(),
            &[mono(&[(0, 1), (1, 1)])]
        );
        let i = ideal(&[&[(0, 3)], &[(2, 1)], &[(3, 2)], &[(2, 1), (3, 1)]]);
        assert_eq!(
            i.generators(),
            &[mono(&[(0, 3)]), mono(&[(2, 1)]), mono(&[(3, 2)])]
        );
        assert_eq!(
            MonomialIdeal::new(vec![Monomial::one()]),
            Err(Error::UnitIdeal)
        );
    }

    #[test]
    fn canonical_order_and_rendering() {
        // generators given in scrambled order come back in lex order
        let i = ideal(&[
            &[(3, 2), (4, 1)],
            &[(2, 1), (4, 2)],
            &[(1, 4), (2, 1)],
            &[(2, 5), (3, 1)],
            &[(0, 3), (1, 1)],
        ]);
        assert_eq!(
            i.display(&NAMES).to_string(),
            "ideal(x1^3*x2, x2^4*x3, x3^5*x4, x3*x5^2, x4^2*x5)"
        );
        assert_eq!(
            MonomialIdeal::zero().display(&NAMES).to_string(),
            "ideal(0)"
        );
        assert_eq!(
            irr(&[(3, 2), (0, 3), (2, 1)]).display(&NAMES).to_string(),
            "(x1^3,x3,x4^2)"
        );
        assert_eq!(
            IrreducibleIdeal::default().display(&NAMES).to_string(),
            "(0)"
        );
    }

    #[test]
    fn membership() {
        let i = ideal(&[&[(1, 2)], &[(2, 1)]]);
        assert!(i.contains(&mono(&[(1, 1), (2, 5)])));
        assert!(!i.contains(&Monomial::one()));
        assert!(!i.contains(&mono(&[(1, 1), (3, 4)])));
    }

    #[test]
    fn intersections() {
        let a = ideal(&[&[(0, 1)]]);
        let b = ideal(&[&[(1, 4)]]);
        assert_eq!(a.intersect(&b), ideal(&[&[(0, 1), (1, 4)]]));
        let e = ideal(&[&[(0, 1), (1, 2)], &[(1, 1), (2, 5)]]);
        assert_eq!(e.intersect(&e), e);
        assert!(ideal_equals(
            &e.intersect(&MonomialIdeal::zero()),
            &MonomialIdeal::zero()
        ));
    }

    #[test]
    fn radicals() {
        let e2 = ideal(&[&[(0, 1), (1, 2)], &[(1, 1), (2, 5)], &[(2, 1), (3, 7)]]);
        assert_eq!(
            e2.radical(),
            ideal(&[&[(0, 1), (1, 1)], &[(1, 1), (2, 1)], &[(2, 1), (3, 1)]])
        );
        assert_eq!(
            ideal(&[&[(0, 3)], &[(2, 1)], &[(3, 2)]]).radical(),
            ideal(&[&[(0, 1)], &[(2, 1)], &[(3, 1)]])
        );
        assert_eq!(e2.radical().radical(), e2.radical());
    }

    #[test]
    fn irreducibility() {
        let i = ideal(&[&[(0, 3)], &[(2, 1)], &[(3, 2)]]);
        assert_eq!(i.as_irreducible(), Some(irr(&[(0, 3), (2, 1), (3, 2)])));
        assert_eq!(ideal(&[&[(0, 1), (1, 1)]]).as_irreducible(), None);
        assert_eq!(
            ideal(&[&[(0, 1)], &[(0, 2)]]).as_irreducible(),
            Some(irr(&[(0, 1)]))
        );
        assert!(IrreducibleIdeal::from_powers(vec![(0, 1), (0, 2)]).is_err());
    }

    #[test]
    fn heights() {
        assert_eq!(support_height(&irr(&[(0, 1), (2, 1)])), 2);
        assert_eq!(
            support_height(&irr(&[(0, 3), (1, 4), (2, 5), (3, 2), (4, 2)])),
            5
        );
        assert_eq!(support_height(&IrreducibleIdeal::default()), 0);
    }

    #[test]
    fn oracle_on_single_generator() {
        let i = ideal(&[&[(0, 1), (1, 4)]]);
        let d = irreducible_decomposition_oracle(&i, 1000).unwrap();
        assert_eq!(d, vec![irr(&[(0, 1)]), irr(&[(1, 4)])]);
    }

    #[test]
    fn oracle_budget() {
        let i = ideal(&[&[(0, 1), (1, 1)], &[(1, 1), (2, 1)], &[(2, 1), (3, 1)]]);
        assert_eq!(
            irreducible_decomposition_oracle(&i, 2),
            Err(Error::OracleBudget(2))
        );
    }

    #[test]
    fn oracle_on_zero_ideal() {
        let d = irreducible_decomposition_oracle(&MonomialIdeal::zero(), 10).unwrap();
        assert_eq!(d, vec![IrreducibleIdeal::default()]);
    }

    #[test]
    fn irreducible_inclusion() {
        assert!(irr(&[(0, 1)]).is_subset(&irr(&[(0, 1), (1, 1)])));
        assert!(irr(&[(0, 3)]).is_subset(&irr(&[(0, 2)])));
        assert!(!irr(&[(0, 2)]).is_subset(&irr(&[(0, 3)])));
        assert!(!irr(&[(2, 1)]).is_subset(&irr(&[(0, 1)])));
    }
}
