//! Buchberger's algorithm for ideals generated by pure-difference
//! binomials, optionally mixed with monomials.
//!
//! The normal form of `u - v` is `nf(u) - nf(v)`: reducing a monomial by a
//! pure difference yields another monomial, and reducing it by a monomial
//! generator yields zero. Pure-difference inputs therefore never leave the
//! class of pure differences and monomials.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};

use serde::{Deserialize, Serialize};

use crate::algebra::{Binomial, Monomial, MonomialOrder, VariableSet};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// `lead - trail`, or the monomial `lead` when `trail` is `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Poly {
    lead: Monomial,
    trail: Option<Monomial>,
}

impl Poly {
    fn from_pair(order: MonomialOrder, u: Option<Monomial>, v: Option<Monomial>) -> Option<Poly> {
        match (u, v) {
            (None, None) => None,
            (Some(m), None) | (None, Some(m)) => Some(Poly { lead: m, trail: None }),
            (Some(u), Some(v)) => Binomial::new(order, u, v).map(|b| {
                let (lead, trail) = b.into_parts();
                Poly {
                    lead,
                    trail: Some(trail),
                }
            }),
        }
    }
}

/// Reduced Groebner basis of a binomial (or binomial + monomial) ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    vars: VariableSet,
    elements: Vec<Binomial>,
    monomials: Vec<Monomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn variables(&self) -> &VariableSet {
        &self.vars
    }

    /// Binomial elements sorted by lead.
    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    /// Monomial elements; empty for toric ideals.
    pub fn monomial_generators(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.elements.len() + self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Minimal monomial generators of the initial ideal, sorted under the
    /// basis order.
    pub fn initial_generators(&self) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = self
            .elements
            .iter()
            .map(|b| b.lead().clone())
            .chain(self.monomials.iter().cloned())
            .collect();
        out.sort_by(|a, b| self.order.cmp(a, b));
        out
    }

    fn polys(&self) -> Vec<Poly> {
        self.elements
            .iter()
            .map(|b| Poly {
                lead: b.lead().clone(),
                trail: Some(b.trail().clone()),
            })
            .chain(self.monomials.iter().map(|m| Poly {
                lead: m.clone(),
                trail: None,
            }))
            .collect()
    }

    /// Normal form of a monomial; `None` when it reduces to zero.
    pub fn reduce_monomial(&self, m: &Monomial) -> Option<Monomial> {
        let polys = self.polys();
        let mut reducer = Reducer::new(self.order, &polys, u64::MAX);
        reducer.reduce(m.clone()).expect("unbounded reduction")
    }

    /// Normal form of `u - v`, as `(nf(u), nf(v))` with zero sides `None`.
    /// Returns `None` when the whole difference reduces to zero.
    pub fn reduce_difference(
        &self,
        u: &Monomial,
        v: &Monomial,
    ) -> Option<(Option<Monomial>, Option<Monomial>)> {
        let a = self.reduce_monomial(u);
        let b = self.reduce_monomial(v);
        if a == b {
            None
        } else {
            Some((a, b))
        }
    }

    /// Ideal membership of `f` via its normal form.
    pub fn contains(&self, f: &Binomial) -> bool {
        self.reduce_difference(f.lead(), f.trail()).is_none()
    }

    /// Whether some initial generator divides `m`.
    pub fn in_initial_ideal(&self, m: &Monomial) -> bool {
        self.elements.iter().any(|b| b.lead().divides(m)) || self.monomials.iter().any(|g| g.divides(m))
    }

    /// Every generator is a pure difference of monomials of equal weight.
    pub fn is_weight_balanced(&self) -> bool {
        self.monomials.is_empty() && self.elements.iter().all(|b| b.is_weight_balanced(&self.vars))
    }

    #[cfg(test)]
    pub(crate) fn from_parts(
        order: MonomialOrder,
        vars: VariableSet,
        elements: Vec<Binomial>,
        monomials: Vec<Monomial>,
    ) -> Self {
        GroebnerBasis {
            order,
            vars,
            elements,
            monomials,
        }
    }

    pub fn to_document(&self) -> GroebnerDocument {
        GroebnerDocument {
            order: self.order.name(),
            variables: self.vars.labels().to_vec(),
            elements: self
                .elements
                .iter()
                .map(|b| ElementText {
                    lead: b.lead().render(&self.vars),
                    trail: b.trail().render(&self.vars),
                })
                .collect(),
            monomials: self.monomials.iter().map(|m| m.render(&self.vars)).collect(),
        }
    }
}

/// JSON form of a Groebner basis: canonical text of each element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerDocument {
    pub order: String,
    pub variables: Vec<String>,
    pub elements: Vec<ElementText>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub monomials: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementText {
    pub lead: String,
    pub trail: String,
}

struct Reducer<'a> {
    order: MonomialOrder,
    basis: &'a [Poly],
    supports: Vec<u64>,
    steps: u64,
    max_steps: u64,
}

impl<'a> Reducer<'a> {
    fn new(order: MonomialOrder, basis: &'a [Poly], max_steps: u64) -> Self {
        Reducer {
            order,
            basis,
            supports: basis.iter().map(|p| p.lead.support()).collect(),
            steps: 0,
            max_steps,
        }
    }

    fn reduce(&mut self, mut m: Monomial) -> Result<Option<Monomial>> {
        'outer: loop {
            let sm = m.support();
            for (p, &s) in self.basis.iter().zip(&self.supports) {
                if s & !sm != 0 || !p.lead.divides(&m) {
                    continue;
                }
                self.steps += 1;
                if self.steps > self.max_steps {
                    return Err(Error::ResourceLimit(format!(
                        "more than {} reduction steps",
                        self.max_steps
                    )));
                }
                match &p.trail {
                    None => return Ok(None),
                    Some(t) => {
                        let q = m.checked_div(&p.lead).expect("lead divides m");
                        let next = q.checked_mul(t)?;
                        debug_assert_eq!(self.order.cmp(&next, &m), Ordering::Less);
                        m = next;
                        continue 'outer;
                    }
                }
            }
            return Ok(Some(m));
        }
    }
}

/// Configurable Buchberger run.
#[derive(Clone, Debug)]
pub struct Buchberger<'a> {
    order: MonomialOrder,
    vars: &'a VariableSet,
    limits: Limits,
    weight_bound: Option<u64>,
}

impl<'a> Buchberger<'a> {
    pub fn new(order: MonomialOrder, vars: &'a VariableSet) -> Self {
        Buchberger {
            order,
            vars,
            limits: Limits::default(),
            weight_bound: None,
        }
    }

    pub fn limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    /// Only S-pairs whose lcm has weight at most `bound` are processed.
    /// For weight-homogeneous inputs the result is a Groebner basis in
    /// all weights up to `bound`.
    pub fn weight_bound(mut self, bound: u64) -> Self {
        self.weight_bound = Some(bound);
        self
    }

    pub fn run(&self, gens: &[Binomial]) -> Result<GroebnerBasis> {
        self.run_mixed(gens, &[])
    }

    pub fn run_mixed(&self, gens: &[Binomial], monomials: &[Monomial]) -> Result<GroebnerBasis> {
        for g in gens {
            if g.lead().nvars() != self.vars.len() {
                return Err(Error::InvalidArgument("generator over wrong variable set".into()));
            }
        }
        let input: Vec<Poly> = gens
            .iter()
            .map(|b| Poly {
                lead: b.lead().clone(),
                trail: Some(b.trail().clone()),
            })
            .chain(monomials.iter().map(|m| Poly {
                lead: m.clone(),
                trail: None,
            }))
            .collect();
        let basis = self.complete(input)?;
        Ok(self.interreduce(basis))
    }

    fn complete(&self, input: Vec<Poly>) -> Result<Vec<Poly>> {
        let order = self.order;
        let mut basis: Vec<Poly> = Vec::new();
        let mut supports: Vec<u64> = Vec::new();
        let mut queue: BinaryHeap<Reverse<(u32, u64, usize, usize)>> = BinaryHeap::new();
        let mut pending: HashSet<(usize, usize)> = HashSet::new();
        let mut steps = 0u64;

        let push = |p: Poly,
                    basis: &mut Vec<Poly>,
                    supports: &mut Vec<u64>,
                    queue: &mut BinaryHeap<Reverse<(u32, u64, usize, usize)>>,
                    pending: &mut HashSet<(usize, usize)>|
         -> Result<()> {
            let k = basis.len();
            if k >= self.limits.max_basis_elements {
                return Err(Error::ResourceLimit(format!(
                    "basis exceeds {} elements",
                    self.limits.max_basis_elements
                )));
            }
            for (i, q) in basis.iter().enumerate() {
                let l = q.lead.lcm(&p.lead);
                queue.push(Reverse((l.degree(), self.vars.weight(&l), i, k)));
                pending.insert((i, k));
            }
            supports.push(p.lead.support());
            basis.push(p);
            Ok(())
        };

        for p in input {
            push(p, &mut basis, &mut supports, &mut queue, &mut pending)?;
        }

        while let Some(Reverse((_, lcm_weight, i, j))) = queue.pop() {
            pending.remove(&(i, j));
            if let Some(bound) = self.weight_bound {
                if lcm_weight > bound {
                    continue;
                }
            }
            let (f, g) = (&basis[i], &basis[j]);
            if f.trail.is_none() && g.trail.is_none() {
                continue;
            }
            if f.lead.is_coprime(&g.lead) {
                continue;
            }
            let l = f.lead.lcm(&g.lead);
            let sl = l.support();
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && supports[k] & !sl == 0
                    && basis[k].lead.divides(&l)
                    && !pending.contains(&(i.min(k), i.max(k)))
                    && !pending.contains(&(j.min(k), j.max(k)))
            });
            if chain {
                continue;
            }
            let side = |p: &Poly| {
                p.trail
                    .as_ref()
                    .map(|t| l.checked_div(&p.lead).expect("lead divides lcm").mul(t))
            };
            let (a, b) = (side(f), side(g));
            let mut reducer = Reducer::new(order, &basis, self.limits.max_reduction_steps - steps);
            let a = match a {
                Some(m) => reducer.reduce(m)?,
                None => None,
            };
            let b = match b {
                Some(m) => reducer.reduce(m)?,
                None => None,
            };
            steps += reducer.steps;
            if a == b {
                continue;
            }
            if let Some(p) = Poly::from_pair(order, a, b) {
                push(p, &mut basis, &mut supports, &mut queue, &mut pending)?;
            }
        }
        Ok(basis)
    }

    fn interreduce(&self, basis: Vec<Poly>) -> GroebnerBasis {
        let order = self.order;
        let mut sorted = basis;
        // ties on the lead: monomials first
        sorted.sort_by(|a, b| {
            order
                .cmp(&a.lead, &b.lead)
                .then_with(|| a.trail.is_some().cmp(&b.trail.is_some()))
        });
        let mut minimal: Vec<Poly> = Vec::new();
        for p in sorted {
            if minimal.iter().any(|q| q.lead.divides(&p.lead)) {
                continue;
            }
            minimal.push(p);
        }
        let mut elements = Vec::new();
        let mut monomials = Vec::new();
        let mut reducer = Reducer::new(order, &minimal, u64::MAX);
        for p in &minimal {
            let trail = match &p.trail {
                Some(t) => reducer.reduce(t.clone()).expect("unbounded"),
                None => None,
            };
            match trail {
                Some(t) => {
                    let b = Binomial::new(order, p.lead.clone(), t).expect("trail below lead");
                    debug_assert_eq!(b.lead(), &p.lead);
                    elements.push(b);
                }
                None => monomials.push(p.lead.clone()),
            }
        }
        reducer.steps = 0;
        elements.sort_by(|a, b| order.cmp(a.lead(), b.lead()));
        monomials.sort_by(|a, b| order.cmp(a, b));
        GroebnerBasis {
            order,
            vars: self.vars.clone(),
            elements,
            monomials,
        }
    }
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Binomial], order: MonomialOrder, vars: &VariableSet) -> Result<GroebnerBasis> {
    Buchberger::new(order, vars).run(gens)
}

/// S-pair `(L / lead f) trail f - (L / lead g) trail g` with `L` the lcm of
/// the leads.
pub fn spair(f: &Binomial, g: &Binomial, order: MonomialOrder) -> Option<Binomial> {
    let l = f.lead().lcm(g.lead());
    let a = l.checked_div(f.lead()).unwrap().mul(f.trail());
    let b = l.checked_div(g.lead()).unwrap().mul(g.trail());
    Binomial::new(order, a, b)
}

/// Fully reduces a monomial by a list of oriented binomials.
pub fn normal_form_monomial(target: &Monomial, basis: &[Binomial], order: MonomialOrder) -> Monomial {
    let polys: Vec<Poly> = basis
        .iter()
        .map(|b| Poly {
            lead: b.lead().clone(),
            trail: Some(b.trail().clone()),
        })
        .collect();
    Reducer::new(order, &polys, u64::MAX)
        .reduce(target.clone())
        .expect("unbounded")
        .expect("pure differences never reduce a monomial to zero")
}

/// Normal form of a binomial: `None` when it reduces to zero.
pub fn normal_form(target: &Binomial, basis: &[Binomial], order: MonomialOrder) -> Option<Binomial> {
    let a = normal_form_monomial(target.lead(), basis, order);
    let b = normal_form_monomial(target.trail(), basis, order);
    Binomial::new(order, a, b)
}

/// Whether every pairwise S-pair of `gens` reduces to zero modulo `gens`.
pub fn is_groebner(gens: &[Binomial], order: MonomialOrder) -> bool {
    first_nonreducing_pair(gens, order).is_none()
}

/// First pair `(i, j)` whose S-pair has a nonzero normal form.
pub fn first_nonreducing_pair(gens: &[Binomial], order: MonomialOrder) -> Option<(usize, usize)> {
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if let Some(s) = spair(&gens[i], &gens[j], order) {
                if normal_form(&s, gens, order).is_some() {
                    return Some((i, j));
                }
            }
        }
    }
    None
}

/// Homogenises a grevlex basis with a new smallest variable `y`:
/// `lead - trail` becomes `lead - trail * y^(deg lead - deg trail)`.
pub fn homogenize(gb: &GroebnerBasis, y: &str) -> Result<GroebnerBasis> {
    if gb.order != MonomialOrder::Grevlex {
        return Err(Error::InvalidArgument("homogenization expects a grevlex basis".into()));
    }
    let vars = gb.vars.with_trailing(y, 0)?;
    let pos = vars.len() - 1;
    let order = MonomialOrder::GrevlexExtended;
    let elements = gb
        .elements
        .iter()
        .map(|b| {
            let gap = b.lead().degree() - b.trail().degree();
            let lead = b.lead().with_inserted(pos, 0);
            let trail = b.trail().with_inserted(pos, gap);
            Binomial::new(order, lead, trail).expect("distinct")
        })
        .collect::<Vec<_>>();
    for (b, h) in gb.elements.iter().zip(&elements) {
        debug_assert_eq!(&b.lead().with_inserted(pos, 0), h.lead());
    }
    let monomials = gb.monomials.iter().map(|m| m.with_inserted(pos, 0)).collect();
    Ok(GroebnerBasis {
        order,
        vars,
        elements,
        monomials,
    })
}
