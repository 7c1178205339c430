//! Cohen-Macaulay and Gorenstein classification, CM type and
//! Castelnuovo-Mumford regularity of the projective closures.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{Binomial, Monomial, MonomialOrder, VariableSet};
use crate::error::{Error, Result};
use crate::families::full_family;
use crate::groebner::{homogenize, Buchberger, GroebnerBasis};
use crate::limits::Limits;
use crate::semigroup::{sally_semigroup, SallyParams};
use crate::toric_oracle;

/// Which construction supplies the Groebner basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Engine {
    /// Complete the explicit families (only for `e >= 10`).
    Family,
    /// Elimination from the semigroup generators.
    Oracle,
    /// Both, with an agreement check.
    Both,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Family => "family",
            Engine::Oracle => "oracle",
            Engine::Both => "both",
        })
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "family" => Ok(Engine::Family),
            "oracle" => Ok(Engine::Oracle),
            "both" => Ok(Engine::Both),
            other => Err(Error::Parse(format!("unknown engine {other:?}"))),
        }
    }
}

/// A monomial quotient of finite length with its binomial Groebner basis.
#[derive(Clone, Debug)]
pub struct ArtinianQuotient {
    basis: GroebnerBasis,
    layers: Vec<Vec<Monomial>>,
}

/// Standard monomials of `gb` grouped by degree, scanning upward until a
/// layer is empty. Standard monomials are closed under division, so every
/// one is reached from a standard monomial of degree one less.
fn standard_layers(gb: &GroebnerBasis, limits: Limits) -> Result<Vec<Vec<Monomial>>> {
    let k = gb.variables().len();
    let one = Monomial::one(k);
    let mut layers = Vec::new();
    let mut current: Vec<Monomial> = if gb.in_initial_ideal(&one) { vec![] } else { vec![one] };
    while !current.is_empty() {
        if layers.len() as u32 > limits.max_layer_degree {
            return Err(Error::NotArtinian(limits.max_layer_degree));
        }
        let mut next = BTreeSet::new();
        for m in &current {
            for v in 0..k {
                let u = m.mul_var(v);
                if !gb.in_initial_ideal(&u) {
                    next.insert(u);
                }
            }
        }
        layers.push(current);
        current = next.into_iter().collect();
        current.sort_by(|a, b| gb.order().cmp(a, b));
    }
    Ok(layers)
}

impl ArtinianQuotient {
    /// Quotient by a Groebner basis whose initial ideal has finite colength.
    pub fn new(basis: GroebnerBasis, limits: Limits) -> Result<Self> {
        let layers = standard_layers(&basis, limits)?;
        Ok(ArtinianQuotient { basis, layers })
    }

    /// Quotient of the ideal generated by `gb` and the variables at
    /// `adjoined`.
    pub fn adjoining(gb: &GroebnerBasis, adjoined: &[usize], limits: Limits) -> Result<Self> {
        let k = gb.variables().len();
        let mut monos: Vec<Monomial> = gb.monomial_generators().to_vec();
        for &v in adjoined {
            if v >= k {
                return Err(Error::InvalidArgument(format!("no variable at position {v}")));
            }
            monos.push(Monomial::variable(k, v, 1));
        }
        let basis = Buchberger::new(gb.order(), gb.variables())
            .limits(limits)
            .run_mixed(gb.elements(), &monos)?;
        Self::new(basis, limits)
    }

    pub fn variables(&self) -> &VariableSet {
        self.basis.variables()
    }

    pub fn basis(&self) -> &GroebnerBasis {
        &self.basis
    }

    pub fn initial_generators(&self) -> Vec<Monomial> {
        self.basis.initial_generators()
    }

    pub fn standard_monomials(&self) -> &[Vec<Monomial>] {
        &self.layers
    }

    pub fn hilbert_function(&self) -> Vec<u64> {
        self.layers.iter().map(|l| l.len() as u64).collect()
    }

    pub fn dimension(&self) -> u64 {
        self.hilbert_function().iter().sum()
    }

    /// Largest degree of a nonzero element, `None` for the zero ring.
    pub fn top_degree(&self) -> Option<u32> {
        self.layers.len().checked_sub(1).map(|d| d as u32)
    }

    /// Product of two standard monomials in the quotient.
    pub fn multiply(&self, a: &Monomial, b: &Monomial) -> Option<Monomial> {
        self.basis.reduce_monomial(&a.mul(b))
    }

    /// Dimension of the socle `{f : x_v f = 0 for all v}`, by exact rank
    /// of the stacked multiplication maps.
    pub fn socle_dimension(&self) -> usize {
        let basis: Vec<&Monomial> = self.layers.iter().flatten().collect();
        let index: BTreeMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let dim = basis.len();
        let k = self.variables().len();
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        for v in 0..k {
            let mut block = vec![vec![BigRational::zero(); dim]; dim];
            let mut used = false;
            for (c, m) in basis.iter().enumerate() {
                if let Some(img) = self.basis.reduce_monomial(&m.mul_var(v)) {
                    block[index[&img]][c] += BigRational::one();
                    used = true;
                }
            }
            if used {
                rows.extend(block.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
            }
        }
        dim - rank(rows, dim)
    }
}

/// Rank over the rationals by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<BigRational>>, ncols: usize) -> usize {
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        let lead: Vec<BigRational> = rows[r].iter().map(|x| x / &pivot).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&lead) {
                    *x -= &f * y;
                }
            }
        }
        rows[r] = lead;
        r += 1;
    }
    r
}

/// `dim_K K[x]/(J + (x_i : i in adjoined))` where `J` is the ideal of `gb`.
pub fn artinian_dimension(gb: &GroebnerBasis, adjoined: &[usize], limits: Limits) -> Result<u64> {
    Ok(ArtinianQuotient::adjoining(gb, adjoined, limits)?.dimension())
}

/// Same as [`artinian_dimension`] for an arbitrary generating set.
pub fn artinian_dimension_of(
    gens: &[Binomial],
    vars: &VariableSet,
    adjoined: &[usize],
    limits: Limits,
) -> Result<u64> {
    let gb = Buchberger::new(MonomialOrder::Grevlex, vars).limits(limits).run(gens)?;
    artinian_dimension(&gb, adjoined, limits)
}

/// Affine grevlex basis of `I_S(e,m,n)` from the chosen engine, together
/// with the engine that actually produced it. Below `e = 10` the family
/// engine routes to the oracle.
pub fn affine_basis(p: SallyParams, engine: Engine, limits: Limits) -> Result<(GroebnerBasis, Engine)> {
    let vs = VariableSet::sally(p);
    let oracle = || toric_oracle::defining_ideal(&sally_semigroup(p), &vs, limits);
    let family = || -> Result<GroebnerBasis> {
        let fam = full_family(p)?;
        Buchberger::new(MonomialOrder::Grevlex, &vs).limits(limits).run(&fam.all())
    };
    match engine {
        Engine::Oracle => Ok((oracle()?, Engine::Oracle)),
        _ if p.e < 10 => Ok((oracle()?, Engine::Oracle)),
        Engine::Family => Ok((family()?, Engine::Family)),
        Engine::Both => {
            let (a, b) = (family()?, oracle()?);
            if a != b {
                return Err(Error::EngineMismatch(format!("{p}: reduced bases differ")));
            }
            Ok((a, Engine::Both))
        }
    }
}

/// Position of `x_{e-1}`, the last affine variable.
fn last_x(gb: &GroebnerBasis) -> usize {
    gb.variables()
        .labels()
        .iter()
        .rposition(|l| l.starts_with('x'))
        .expect("an x variable")
}

/// Minimal generators of the initial ideal that the last affine variable
/// divides. Empty exactly when the projective closure is Cohen-Macaulay.
pub fn cm_obstructions(gb: &GroebnerBasis) -> Vec<Monomial> {
    let v = last_x(gb);
    gb.initial_generators()
        .into_iter()
        .filter(|m| m.exponent(v) > 0)
        .collect()
}

pub fn is_cm_basis(gb: &GroebnerBasis) -> bool {
    cm_obstructions(gb).is_empty()
}

pub fn is_projectively_cm(p: SallyParams, engine: Engine, limits: Limits) -> Result<bool> {
    Ok(is_cm_basis(&affine_basis(p, engine, limits)?.0))
}

/// Kunz: the semigroup ring is Gorenstein iff the semigroup is symmetric.
pub fn is_affine_gorenstein(s: &crate::semigroup::NumericalSemigroup) -> bool {
    s.is_symmetric()
}

/// The projective coordinate ring modulo `y` and `x_{e-1}`.
pub fn artinian_reduction(gb: &GroebnerBasis, limits: Limits) -> Result<ArtinianQuotient> {
    let h = homogenize(gb, "y")?;
    let y = h.variables().len() - 1;
    ArtinianQuotient::adjoining(&h, &[y, last_x(gb)], limits)
}

/// CM type of the projective closure.
pub fn projective_socle_dimension(p: SallyParams, engine: Engine, limits: Limits) -> Result<usize> {
    let (gb, _) = affine_basis(p, engine, limits)?;
    socle_dimension_of(p, &gb, limits)
}

fn socle_dimension_of(p: SallyParams, gb: &GroebnerBasis, limits: Limits) -> Result<usize> {
    if !is_cm_basis(gb) {
        return Err(Error::NotCohenMacaulay(format!("{p}: CM type is not defined here")));
    }
    Ok(artinian_reduction(gb, limits)?.socle_dimension())
}

/// Degree-by-degree pieces of a regularity computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityData {
    /// Degrees of the standard monomials spanning `(J : x_{e-1}) / J`,
    /// where `J = I + (y)`; empty in the Cohen-Macaulay case.
    pub colon_degrees: Vec<u32>,
    /// Hilbert function of the quotient by `J + (x_{e-1})`.
    pub artinian_hilbert: Vec<u64>,
    pub regularity: u32,
}

/// Regularity of the projective coordinate ring.
///
/// With `B = K[x,y]/(I + (y))` and `l = x_{e-1}` (a parameter on `B`),
/// `reg = max(end(0 :_B l), end(B/lB))`. Since `l` is the smallest
/// remaining variable, the colon's initial ideal is `in(J) : l`; its
/// standard part is reached upward from `g / l` for the minimal
/// generators `g` of `in(J)` divisible by `l`.
pub fn regularity_data(gb: &GroebnerBasis, limits: Limits) -> Result<RegularityData> {
    let h = homogenize(gb, "y")?;
    let y = h.variables().len() - 1;
    let l = last_x(gb);
    let ymono = Monomial::variable(h.variables().len(), y, 1);
    let jb = Buchberger::new(h.order(), h.variables())
        .limits(limits)
        .run_mixed(h.elements(), &[ymono])?;
    let k = jb.variables().len();

    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut frontier: Vec<Monomial> = jb
        .initial_generators()
        .into_iter()
        .filter(|g| g.exponent(l) > 0)
        .map(|g| g.checked_div(&Monomial::variable(k, l, 1)).expect("divisible"))
        .collect();
    while let Some(u) = frontier.pop() {
        if jb.in_initial_ideal(&u) || !seen.insert(u.clone()) {
            continue;
        }
        if u.degree() > limits.max_layer_degree {
            return Err(Error::NotArtinian(limits.max_layer_degree));
        }
        for v in 0..k {
            frontier.push(u.mul_var(v));
        }
    }
    let mut colon_degrees: Vec<u32> = seen.iter().map(|u| u.degree()).collect();
    colon_degrees.sort_unstable();

    let q = ArtinianQuotient::adjoining(&jb, &[l], limits)?;
    let top = q.top_degree().unwrap_or(0);
    let regularity = colon_degrees.last().copied().unwrap_or(0).max(top);
    Ok(RegularityData {
        colon_degrees,
        artinian_hilbert: q.hilbert_function(),
        regularity,
    })
}

pub fn regularity(p: SallyParams, engine: Engine, limits: Limits) -> Result<u32> {
    Ok(regularity_data(&affine_basis(p, engine, limits)?.0, limits)?.regularity)
}

/// A binomial of the ideal whose lead is divisible by `x_{e-1}` but whose
/// lead divided by `x_{e-1}` is standard: a certificate that the
/// projective closure is not Cohen-Macaulay.
pub fn non_cm_witness(gb: &GroebnerBasis) -> Option<Binomial> {
    let obstructions = cm_obstructions(gb);
    gb.elements()
        .iter()
        .find(|b| obstructions.contains(b.lead()))
        .cloned()
}

/// Which engine produced each derived field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sources {
    pub mu: Engine,
    pub groebner: Engine,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub e: u32,
    pub m: u32,
    pub n: u32,
    pub mu: usize,
    pub frobenius: i64,
    pub symmetric: bool,
    pub affine_gorenstein: bool,
    pub projectively_cm: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cm_type: Option<usize>,
    pub projective_gorenstein: bool,
    /// Computed for every case; the closed-form values only cover the
    /// Cohen-Macaulay ones.
    pub regularity: u32,
    pub artinian_hilbert: Vec<u64>,
    pub source: Sources,
}

impl ClassificationReport {
    pub const CSV_HEADER: &'static str =
        "e,m,n,mu,frobenius,symmetric,affine_gorenstein,projectively_cm,cm_type,projective_gorenstein,regularity,source";

    pub fn params(&self) -> SallyParams {
        SallyParams::new(self.e, self.m, self.n).expect("validated")
    }

    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.e,
            self.m,
            self.n,
            self.mu,
            self.frobenius,
            self.symmetric,
            self.affine_gorenstein,
            self.projectively_cm,
            self.cm_type.map(|t| t.to_string()).unwrap_or_default(),
            self.projective_gorenstein,
            self.regularity,
            self.source.groebner,
        )
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let mut line = |k: &str, v: String| s.push_str(&format!("{k:<22}{v}\n"));
        line("params", format!("({},{},{})", self.e, self.m, self.n));
        line("mu", self.mu.to_string());
        line("frobenius", self.frobenius.to_string());
        line("symmetric", self.symmetric.to_string());
        line("affine_gorenstein", self.affine_gorenstein.to_string());
        line("projectively_cm", self.projectively_cm.to_string());
        line("cm_type", self.cm_type.map(|t| t.to_string()).unwrap_or_else(|| "-".into()));
        line("projective_gorenstein", self.projective_gorenstein.to_string());
        line("regularity", self.regularity.to_string());
        line("artinian_hilbert", format!("{:?}", self.artinian_hilbert));
        line("source", self.source.groebner.to_string());
        s
    }
}

/// Every invariant of `S(e,m,n)` and its projective closure.
pub fn classify(p: SallyParams, engine: Engine, limits: Limits) -> Result<ClassificationReport> {
    let s = sally_semigroup(p);
    let (gb, used) = affine_basis(p, engine, limits)?;
    let nakayama = || toric_oracle::minimal_generator_count(&gb, limits);
    let (mu, mu_source) = match used {
        Engine::Oracle => (nakayama()?, Engine::Oracle),
        Engine::Family => (full_family(p)?.base.len(), Engine::Family),
        Engine::Both => {
            let (a, b) = (full_family(p)?.base.len(), nakayama()?);
            if a != b {
                return Err(Error::EngineMismatch(format!("{p}: family has {a} generators, mu = {b}")));
            }
            (a, Engine::Both)
        }
    };
    let cm = is_cm_basis(&gb);
    let cm_type = if cm { Some(socle_dimension_of(p, &gb, limits)?) } else { None };
    let reg = regularity_data(&gb, limits)?;
    let symmetric = s.is_symmetric();
    Ok(ClassificationReport {
        e: p.e,
        m: p.m,
        n: p.n,
        mu,
        frobenius: s.frobenius(),
        symmetric,
        affine_gorenstein: symmetric,
        projectively_cm: cm,
        cm_type,
        projective_gorenstein: cm_type == Some(1),
        regularity: reg.regularity,
        artinian_hilbert: reg.artinian_hilbert,
        source: Sources {
            mu: mu_source,
            groebner: used,
        },
    })
}
