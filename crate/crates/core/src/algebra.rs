//! Monomials, pure-difference binomials and the monomial orders used
//! throughout: grevlex, grevlex with an adjoined smallest variable, and an
//! elimination order with a leading block of variables.
//!
//! Variables are stored in descending order: index 0 is the largest
//! variable.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::semigroup::SallyParams;

/// Ordered variable labels with their weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VariableSet {
    labels: Vec<String>,
    weights: Vec<u64>,
}

impl VariableSet {
    pub fn new(labels: Vec<String>, weights: Vec<u64>) -> Result<Self> {
        if labels.len() != weights.len() {
            return Err(Error::InvalidArgument(
                "labels and weights differ in length".into(),
            ));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::InvalidArgument(format!("duplicate label {l}")));
            }
            if l.is_empty() || !l.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::InvalidArgument(format!("bad label {l:?}")));
            }
        }
        Ok(VariableSet { labels, weights })
    }

    /// `x_i` for `i in {0..e-1} \ {m,n}`, weighted by `e + i`.
    pub fn sally(p: SallyParams) -> Self {
        let idx = p.indices();
        VariableSet {
            labels: idx.iter().map(|i| format!("x{i}")).collect(),
            weights: idx.iter().map(|&i| (p.e + i) as u64).collect(),
        }
    }

    /// Variables `x0..x{k-1}` weighted by the given semigroup generators.
    pub fn for_generators(gens: &[u64]) -> Self {
        VariableSet {
            labels: (0..gens.len()).map(|i| format!("x{i}")).collect(),
            weights: gens.to_vec(),
        }
    }

    /// Appends `label` as the new smallest variable.
    pub fn with_trailing(&self, label: &str, weight: u64) -> Result<Self> {
        let mut labels = self.labels.clone();
        let mut weights = self.weights.clone();
        labels.push(label.to_string());
        weights.push(weight);
        VariableSet::new(labels, weights)
    }

    /// Prepends `label` as the new largest variable.
    pub fn with_leading(&self, label: &str, weight: u64) -> Result<Self> {
        let mut labels = vec![label.to_string()];
        let mut weights = vec![weight];
        labels.extend(self.labels.iter().cloned());
        weights.extend(self.weights.iter().copied());
        VariableSet::new(labels, weights)
    }

    /// Drops the variable at `pos`.
    pub fn without(&self, pos: usize) -> Self {
        let mut labels = self.labels.clone();
        let mut weights = self.weights.clone();
        labels.remove(pos);
        weights.remove(pos);
        VariableSet { labels, weights }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Position of `x{i}`.
    pub fn x(&self, i: u32) -> Option<usize> {
        self.position(&format!("x{i}"))
    }

    pub fn weight(&self, mono: &Monomial) -> u64 {
        mono.exps
            .iter()
            .zip(&self.weights)
            .map(|(&e, &w)| e as u64 * w)
            .sum()
    }

    /// Monomial from `(label, exponent)` pairs.
    pub fn monomial(&self, powers: &[(&str, u32)]) -> Result<Monomial> {
        let mut m = Monomial::one(self.len());
        for &(label, e) in powers {
            let pos = self
                .position(label)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown variable {label}")))?;
            m.exps[pos] = m.exps[pos].checked_add(e).ok_or(Error::Overflow)?;
        }
        Ok(m)
    }
}

/// Exponent vector indexed parallel to a [`VariableSet`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: SmallVec<[u32; 16]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn variable(nvars: usize, pos: usize, power: u32) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[pos] = power;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn exponent(&self, pos: usize) -> u32 {
        self.exps[pos]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Bit `i` set iff variable `i` occurs (first 64 variables).
    pub fn support(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |acc, (i, _)| acc | (1u64 << (i & 63)))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect(),
        }
    }

    /// Product; panics on exponent overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("exponent overflow")
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(b).ok_or(Error::Overflow)?);
        }
        Ok(Monomial { exps })
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(b)?);
        }
        Some(Monomial { exps })
    }

    /// Multiplies by one variable in place.
    pub fn mul_var(&self, pos: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[pos] += 1;
        m
    }

    /// Removes the variable at `pos` (its exponent must be zero to keep
    /// the monomial meaningful).
    pub fn without(&self, pos: usize) -> Monomial {
        let mut m = self.clone();
        m.exps.remove(pos);
        m
    }

    /// Inserts a new variable with the given exponent at `pos`.
    pub fn with_inserted(&self, pos: usize, exp: u32) -> Monomial {
        let mut m = self.clone();
        m.exps.insert(pos, exp);
        m
    }

    pub fn render(&self, vs: &VariableSet) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(vs.labels[i].clone()),
                _ => parts.push(format!("{}^{}", vs.labels[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    pub fn parse(vs: &VariableSet, text: &str) -> Result<Monomial> {
        let text = text.trim();
        let mut m = Monomial::one(vs.len());
        if text == "1" {
            return Ok(m);
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let (name, power) = match factor.split_once('^') {
                Some((name, p)) => (
                    name.trim(),
                    p.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                ),
                None => (factor, 1),
            };
            let pos = vs
                .position(name)
                .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
            m.exps[pos] = m.exps[pos].checked_add(power).ok_or(Error::Overflow)?;
        }
        Ok(m)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial{:?}", self.exps.as_slice())
    }
}

/// The three monomial orders in use.
///
/// `Grevlex` and `GrevlexExtended` compare identically; the extended kind
/// marks a ring with the homogenising variable adjoined as the smallest
/// variable. `Elimination` ranks by grevlex on the first `block` variables
/// and breaks ties by grevlex on the rest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    Grevlex,
    GrevlexExtended,
    Elimination { block: usize },
}

impl MonomialOrder {
    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::GrevlexExtended => "grevlex_extended".into(),
            MonomialOrder::Elimination { block } => format!("elimination({block})"),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match *self {
            MonomialOrder::Grevlex | MonomialOrder::GrevlexExtended => grevlex(&a.exps, &b.exps),
            MonomialOrder::Elimination { block } => grevlex(&a.exps[..block], &b.exps[..block])
                .then_with(|| grevlex(&a.exps[block..], &b.exps[block..])),
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    if da != db {
        return da.cmp(&db);
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            // larger exponent in the smallest differing variable is smaller
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

/// Compares two monomials, rejecting mismatched variable counts.
pub fn compare(order: MonomialOrder, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::InvalidArgument(format!(
            "monomials over {} and {} variables",
            a.nvars(),
            b.nvars()
        )));
    }
    if let MonomialOrder::Elimination { block } = order {
        if block > a.nvars() {
            return Err(Error::InvalidArgument("elimination block too large".into()));
        }
    }
    Ok(order.cmp(a, b))
}

/// A pure difference `lead - trail` with `lead > trail`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    lead: Monomial,
    trail: Monomial,
}

impl Binomial {
    /// Orients `u - v`; `None` when `u == v` (the zero polynomial).
    pub fn new(order: MonomialOrder, u: Monomial, v: Monomial) -> Option<Binomial> {
        match order.cmp(&u, &v) {
            Ordering::Equal => None,
            Ordering::Greater => Some(Binomial { lead: u, trail: v }),
            Ordering::Less => Some(Binomial { lead: v, trail: u }),
        }
    }

    pub fn lead(&self) -> &Monomial {
        &self.lead
    }

    pub fn trail(&self) -> &Monomial {
        &self.trail
    }

    pub fn into_parts(self) -> (Monomial, Monomial) {
        (self.lead, self.trail)
    }

    pub fn is_weight_balanced(&self, vs: &VariableSet) -> bool {
        vs.weight(&self.lead) == vs.weight(&self.trail)
    }

    /// Reorients under another order on the same variables.
    pub fn reoriented(&self, order: MonomialOrder) -> Binomial {
        Binomial::new(order, self.lead.clone(), self.trail.clone()).expect("lead != trail")
    }

    pub fn render(&self, vs: &VariableSet) -> String {
        format!("{} - {}", self.lead.render(vs), self.trail.render(vs))
    }

    /// Parses `u - v` and orients it under `order`.
    pub fn parse(vs: &VariableSet, order: MonomialOrder, text: &str) -> Result<Binomial> {
        let (u, v) = text
            .split_once(" - ")
            .or_else(|| text.split_once('-'))
            .ok_or_else(|| Error::Parse(format!("expected `u - v`, got {text:?}")))?;
        let u = Monomial::parse(vs, u)?;
        let v = Monomial::parse(vs, v)?;
        Binomial::new(order, u, v).ok_or_else(|| Error::Parse("zero binomial".into()))
    }
}

/// `make_binomial`: orient `u - v`, `None` for the zero polynomial.
pub fn make_binomial(order: MonomialOrder, u: Monomial, v: Monomial) -> Option<Binomial> {
    Binomial::new(order, u, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn vs3() -> VariableSet {
        VariableSet::for_generators(&[5, 8, 9])
    }

    #[test]
    fn grevlex_ties_break_on_smallest_variable() {
        let vs = vs3();
        let a = vs.monomial(&[("x0", 1), ("x2", 1)]).unwrap();
        let b = vs.monomial(&[("x1", 2)]).unwrap();
        assert_eq!(MonomialOrder::Grevlex.cmp(&a, &b), Ordering::Less);
        assert_eq!(MonomialOrder::Grevlex.cmp(&a, &a), Ordering::Equal);
    }

    #[test]
    fn degree_dominates() {
        let p = SallyParams::new(10, 6, 7).unwrap();
        let vs = VariableSet::sally(p);
        let a = vs.monomial(&[("x0", 2), ("x5", 1), ("x9", 1)]).unwrap();
        let b = vs.monomial(&[("x8", 3)]).unwrap();
        assert_eq!(compare(MonomialOrder::Grevlex, &a, &b).unwrap(), Ordering::Greater);
        assert_eq!(vs.weight(&a), 54);
        assert_eq!(vs.weight(&b), 54);
        let a2 = vs.monomial(&[("x0", 2), ("x5", 1)]).unwrap();
        // 2e + (2e - 5) = 4e - 5
        assert_eq!(vs.weight(&a2), 35);
        assert_eq!(vs.weight(&Monomial::one(vs.len())), 0);
    }

    #[test]
    fn mismatched_variables_rejected() {
        let a = Monomial::one(3);
        let b = Monomial::one(4);
        assert!(compare(MonomialOrder::Grevlex, &a, &b).is_err());
    }

    #[test]
    fn make_binomial_orients() {
        let p = SallyParams::new(5, 1, 2).unwrap();
        let vs = VariableSet::sally(p);
        let u = vs.monomial(&[("x4", 2)]).unwrap();
        let v = vs.monomial(&[("x0", 2), ("x3", 1)]).unwrap();
        let b = make_binomial(MonomialOrder::Grevlex, u.clone(), v).unwrap();
        assert_eq!(b.render(&vs), "x0^2*x3 - x4^2");
        assert!(make_binomial(MonomialOrder::Grevlex, u.clone(), u).is_none());

        let vsy = vs.with_trailing("y", 0).unwrap();
        let u = vsy.monomial(&[("x3", 4)]).unwrap();
        let v = vsy.monomial(&[("x0", 1), ("x4", 3)]).unwrap();
        let b = make_binomial(MonomialOrder::GrevlexExtended, v, u).unwrap();
        assert_eq!(b.render(&vsy), "x3^4 - x0*x4^3");
    }

    #[test]
    fn text_round_trip() {
        let p = SallyParams::new(5, 1, 2).unwrap();
        let vs = VariableSet::sally(p).with_trailing("y", 0).unwrap();
        for s in ["x0^2*x3 - x4^2*y", "x0^5 - x3^2*x4*y^2", "x3 - 1"] {
            let b = Binomial::parse(&vs, MonomialOrder::GrevlexExtended, s).unwrap();
            assert_eq!(b.render(&vs), s);
        }
        assert!(Binomial::parse(&vs, MonomialOrder::Grevlex, "x0 - z").is_err());
        assert!(Binomial::parse(&vs, MonomialOrder::Grevlex, "x0 - x0").is_err());
    }

    #[test]
    fn elimination_ranks_block_first() {
        let vs = VariableSet::for_generators(&[4, 7]).with_leading("t", 1).unwrap();
        let order = MonomialOrder::Elimination { block: 1 };
        let t = vs.monomial(&[("t", 1)]).unwrap();
        let big = vs.monomial(&[("x0", 30)]).unwrap();
        assert_eq!(order.cmp(&big, &t), Ordering::Less);
    }

    fn mono(n: usize) -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u32..5, n).prop_map(|v| Monomial::from_exponents(&v))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn grevlex_total_and_multiplicative(u in mono(6), v in mono(6), w in mono(6)) {
            let o = MonomialOrder::Grevlex;
            if u != v {
                let uv = o.cmp(&u, &v);
                prop_assert_ne!(uv, Ordering::Equal);
                prop_assert_eq!(o.cmp(&v, &u), uv.reverse());
                prop_assert_eq!(o.cmp(&u.mul(&w), &v.mul(&w)), uv);
            }
            if u.degree() < v.degree() {
                prop_assert_eq!(o.cmp(&u, &v), Ordering::Less);
            }
            prop_assert_ne!(o.cmp(&Monomial::one(6), &u.mul(&w)), Ordering::Greater);
        }

        #[test]
        fn elimination_total_and_multiplicative(u in mono(6), v in mono(6), w in mono(6)) {
            let o = MonomialOrder::Elimination { block: 1 };
            if u != v {
                let uv = o.cmp(&u, &v);
                prop_assert_ne!(uv, Ordering::Equal);
                prop_assert_eq!(o.cmp(&u.mul(&w), &v.mul(&w)), uv);
            }
            if u.exponent(0) == 0 && v.exponent(0) > 0 {
                prop_assert_eq!(o.cmp(&u, &v), Ordering::Less);
            }
        }

        #[test]
        fn weight_is_additive(u in mono(3), v in mono(3)) {
            let vs = vs3();
            prop_assert_eq!(vs.weight(&u.mul(&v)), vs.weight(&u) + vs.weight(&v));
        }

        #[test]
        fn render_parse_round_trip(u in mono(3), v in mono(3)) {
            let vs = vs3();
            if let Some(b) = Binomial::new(MonomialOrder::Grevlex, u, v) {
                let text = b.render(&vs);
                prop_assert_eq!(Binomial::parse(&vs, MonomialOrder::Grevlex, &text).unwrap(), b);
            }
        }
    }
}
