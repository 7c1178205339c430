//! Defining ideals of numerical semigroups computed by eliminating `t`
//! from `x_i - t^(a_i)`. This path uses nothing but the semigroup's
//! generators.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::{Binomial, Monomial, MonomialOrder, VariableSet};
use crate::error::{Error, Result};
use crate::groebner::{homogenize, Buchberger, GroebnerBasis};
use crate::limits::Limits;
use crate::semigroup::NumericalSemigroup;

fn check_vars(s: &NumericalSemigroup, vs: &VariableSet) -> Result<()> {
    if vs.weights() != s.generators() {
        return Err(Error::InvalidArgument(
            "variable weights must equal the minimal generators".into(),
        ));
    }
    Ok(())
}

/// Reduced basis of `(x_i - t^(a_i))` in the ring `t > x_0 > ...` under
/// the elimination order. Weight of `t` is 1.
pub fn elimination_basis(
    s: &NumericalSemigroup,
    vs: &VariableSet,
    limits: Limits,
) -> Result<GroebnerBasis> {
    check_vars(s, vs)?;
    let ring = vs.with_leading("t", 1)?;
    let order = MonomialOrder::Elimination { block: 1 };
    let k = ring.len();
    let gens: Vec<Binomial> = s
        .generators()
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let x = Monomial::variable(k, i + 1, 1);
            let t = Monomial::variable(k, 0, a as u32);
            Binomial::new(order, x, t).expect("distinct")
        })
        .collect();
    Buchberger::new(order, &ring).limits(limits).run(&gens)
}

/// Reduced grevlex basis of the defining (toric) ideal of `s`.
pub fn defining_ideal(s: &NumericalSemigroup, vs: &VariableSet, limits: Limits) -> Result<GroebnerBasis> {
    let elim = elimination_basis(s, vs, limits)?;
    let survivors: Vec<Binomial> = elim
        .elements()
        .iter()
        .filter(|b| b.lead().exponent(0) == 0 && b.trail().exponent(0) == 0)
        .map(|b| {
            Binomial::new(MonomialOrder::Grevlex, b.lead().without(0), b.trail().without(0))
                .expect("distinct")
        })
        .collect();
    if !elim.monomial_generators().is_empty() {
        return Err(Error::InvalidArgument(
            "elimination produced a monomial; the input is not toric".into(),
        ));
    }
    Buchberger::new(MonomialOrder::Grevlex, vs).limits(limits).run(&survivors)
}

/// Defining ideal of the projective closure: the homogenisation of the
/// grevlex basis by a new smallest variable `y`.
pub fn projective_defining_ideal(
    s: &NumericalSemigroup,
    vs: &VariableSet,
    limits: Limits,
) -> Result<GroebnerBasis> {
    homogenize(&defining_ideal(s, vs, limits)?, "y")
}

struct UnionFind {
    ids: HashMap<Monomial, usize>,
    parent: Vec<usize>,
}

impl UnionFind {
    fn new() -> Self {
        UnionFind {
            ids: HashMap::new(),
            parent: Vec::new(),
        }
    }

    fn id(&mut self, m: Monomial) -> usize {
        let next = self.parent.len();
        let id = *self.ids.entry(m).or_insert(next);
        if id == next {
            self.parent.push(next);
        }
        id
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// A minimal generating set extracted from a weight-homogeneous Groebner
/// basis by graded Nakayama.
///
/// Elements are scanned by ascending weight. At weight `w` every candidate
/// is reduced modulo a basis of the ideal spanned by the accepted elements
/// of smaller weight (truncated at `w`). The reduced pure differences
/// `u - v` span a graphic subspace, so a candidate is independent of the
/// ones already accepted at this weight exactly when `u` and `v` are not
/// yet connected.
pub fn minimal_generators(gb: &GroebnerBasis, limits: Limits) -> Result<Vec<Binomial>> {
    let vs = gb.variables();
    let order = gb.order();
    let mut by_weight: BTreeMap<u64, Vec<&Binomial>> = BTreeMap::new();
    for b in gb.elements() {
        if !b.is_weight_balanced(vs) {
            return Err(Error::InvalidArgument("basis is not weight-homogeneous".into()));
        }
        by_weight.entry(vs.weight(b.lead())).or_default().push(b);
    }
    let mut accepted: Vec<Binomial> = Vec::new();
    for (w, level) in by_weight {
        let lower = Buchberger::new(order, vs)
            .limits(limits)
            .weight_bound(w)
            .run(&accepted)?;
        let mut uf = UnionFind::new();
        let mut fresh = Vec::new();
        for b in level {
            let Some((u, v)) = lower.reduce_difference(b.lead(), b.trail()) else {
                continue;
            };
            let (u, v) = (u.expect("pure"), v.expect("pure"));
            let (iu, iv) = (uf.id(u), uf.id(v));
            if uf.union(iu, iv) {
                fresh.push(b.clone());
            }
        }
        accepted.extend(fresh);
    }
    Ok(accepted)
}

/// `mu`: the number of minimal generators.
pub fn minimal_generator_count(gb: &GroebnerBasis, limits: Limits) -> Result<usize> {
    Ok(minimal_generators(gb, limits)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{sally_semigroup, SallyParams};

    fn render(gb: &GroebnerBasis) -> Vec<String> {
        gb.elements().iter().map(|b| b.render(gb.variables())).collect()
    }

    #[test]
    fn two_generator_semigroups_are_principal() {
        let s = NumericalSemigroup::minimalize(&[4, 7]).unwrap();
        let vs = VariableSet::sally(SallyParams::new(4, 1, 2).unwrap());
        let gb = defining_ideal(&s, &vs, Limits::default()).unwrap();
        assert_eq!(render(&gb), vec!["x0^7 - x3^4"]);
        let h = projective_defining_ideal(&s, &vs, Limits::default()).unwrap();
        assert_eq!(render(&h), vec!["x0^7 - x3^4*y^3"]);

        let s = NumericalSemigroup::minimalize(&[2, 3]).unwrap();
        let vs = VariableSet::for_generators(&[2, 3]);
        let gb = defining_ideal(&s, &vs, Limits::default()).unwrap();
        assert_eq!(render(&gb), vec!["x0^3 - x1^2"]);
    }

    #[test]
    fn sally_5_1_2_minimal_generators() {
        let p = SallyParams::new(5, 1, 2).unwrap();
        let s = sally_semigroup(p);
        let vs = VariableSet::sally(p);
        let gb = defining_ideal(&s, &vs, Limits::default()).unwrap();
        let mins = minimal_generators(&gb, Limits::default()).unwrap();
        let mut text: Vec<String> = mins.iter().map(|b| b.render(&vs)).collect();
        text.sort();
        let mut expected = vec!["x0^2*x3 - x4^2", "x0^3*x4 - x3^3", "x0^5 - x3^2*x4"];
        expected.sort();
        assert_eq!(text, expected);
    }

    #[test]
    fn weight_balance_and_primality_smoke() {
        for e in 4..=8 {
            for p in SallyParams::all_for(e) {
                let s = sally_semigroup(p);
                let vs = VariableSet::sally(p);
                let gb = defining_ideal(&s, &vs, Limits::default()).unwrap();
                assert!(gb.is_weight_balanced());
                for b in gb.elements() {
                    assert!(b.lead().is_coprime(b.trail()), "{p}: {}", b.render(&vs));
                }
                let elim = elimination_basis(&s, &vs, Limits::default()).unwrap();
                assert!(elim.is_weight_balanced());
                assert_eq!(gb, defining_ideal(&s, &vs, Limits::default()).unwrap());
            }
        }
    }

    #[test]
    fn mu_counts_for_m_equal_one() {
        for (n, expected) in [(4, 27), (2, 26)] {
            let p = SallyParams::new(10, 1, n).unwrap();
            let gb = defining_ideal(&sally_semigroup(p), &VariableSet::sally(p), Limits::default())
                .unwrap();
            assert_eq!(minimal_generator_count(&gb, Limits::default()).unwrap(), expected);
        }
    }

    #[test]
    fn rejects_mismatched_weights() {
        let s = NumericalSemigroup::minimalize(&[4, 7]).unwrap();
        let vs = VariableSet::for_generators(&[4, 9]);
        assert!(defining_ideal(&s, &vs, Limits::default()).is_err());
    }
}
