//! The check chain behind `sallytype verify`.

use sallytype_core::algebra::{Binomial, Monomial, MonomialOrder};
use sallytype_core::analysis::{self, ArtinianQuotient, Engine};
use sallytype_core::families::{full_family, standard_monomial_catalog};
use sallytype_core::groebner::{first_nonreducing_pair, Buchberger};
use sallytype_core::{toric_oracle, Limits, Result, SallyParams};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass(String),
    Fail(String),
    Skip(String),
}

pub struct Claim {
    pub name: &'static str,
    pub verdict: Verdict,
}

fn claim(name: &'static str, ok: bool, pass: String, fail: String) -> Claim {
    Claim {
        name,
        verdict: if ok { Verdict::Pass(pass) } else { Verdict::Fail(fail) },
    }
}

pub fn run(p: SallyParams, limits: Limits) -> Result<Vec<Claim>> {
    let fam = full_family(p)?;
    let vs = &fam.variables;
    let (gb, _) = analysis::affine_basis(p, Engine::Oracle, limits)?;
    let excluded = p.m + 4 == p.e && p.n + 3 == p.e;
    let mut out = Vec::new();

    let unsound = fam.base.iter().chain(&fam.extras).find(|t| !gb.contains(&t.binomial));
    out.push(claim(
        "soundness",
        unsound.is_none(),
        format!("{} elements lie in the ideal", fam.base.len() + fam.extras.len()),
        unsound.map(|t| format!("{} [{}]", t.binomial.render(vs), t.provenance)).unwrap_or_default(),
    ));

    let base = fam.base_binomials();
    let dim = analysis::artinian_dimension_of(&base, vs, &[0], limits)?;
    out.push(claim(
        "gastinger",
        dim == p.e as u64,
        format!("dim = {dim}"),
        format!("dim = {dim}, expected {}", p.e),
    ));

    let mut redundant = None;
    for i in 0..base.len() {
        let others: Vec<Binomial> = base.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, b)| b.clone()).collect();
        if Buchberger::new(MonomialOrder::Grevlex, vs).limits(limits).run(&others)?.contains(&base[i]) {
            redundant = Some(i);
            break;
        }
    }
    let mu = toric_oracle::minimal_generator_count(&gb, limits)?;
    out.push(claim(
        "minimality",
        redundant.is_none() && mu == base.len(),
        format!("{} generators, mu = {mu}", base.len()),
        match redundant {
            Some(i) => format!("redundant: {}", fam.base[i].provenance),
            None => format!("{} generators, mu = {mu}", base.len()),
        },
    ));

    let all = fam.all();
    if excluded {
        out.push(Claim {
            name: "groebner",
            verdict: Verdict::Skip("(m,n) = (e-4,e-3) is outside the claim".into()),
        });
        out.push(Claim {
            name: "leads-free-of-last",
            verdict: Verdict::Skip("(m,n) = (e-4,e-3) is outside the claim".into()),
        });
    } else {
        let pair = first_nonreducing_pair(&all, MonomialOrder::Grevlex);
        let reduced = Buchberger::new(MonomialOrder::Grevlex, vs).limits(limits).run(&all)?;
        out.push(claim(
            "groebner",
            pair.is_none() && reduced == gb,
            "completion is a Groebner basis equal to the oracle's after reduction".into(),
            match pair {
                Some((i, j)) => {
                    let tag = |k: usize| {
                        fam.base.iter().chain(&fam.extras).nth(k).map(|t| t.provenance.clone()).unwrap_or_default()
                    };
                    format!("S-pair of [{}] and [{}] does not reduce to zero", tag(i), tag(j))
                }
                None => "reduced basis differs from the oracle".into(),
            },
        ));
        let last = vs.len() - 1;
        let bad = fam.base.iter().chain(&fam.extras).find(|t| t.binomial.lead().exponent(last) > 0);
        out.push(claim(
            "leads-free-of-last",
            bad.is_none(),
            format!("no lead divisible by x{}", p.e - 1),
            bad.map(|t| t.provenance.clone()).unwrap_or_default(),
        ));
    }

    if p.e == 10 && !excluded {
        let k = vs.len();
        let mut monos: Vec<Monomial> = all.iter().map(|b| b.lead().clone()).collect();
        monos.push(Monomial::variable(k, k - 1, 1));
        let mb = Buchberger::new(MonomialOrder::Grevlex, vs).limits(limits).run_mixed(&[], &monos)?;
        let q = ArtinianQuotient::new(mb, limits)?;
        let cat = standard_monomial_catalog(p);
        let layer = |d: usize| -> Vec<Monomial> {
            let mut v: Vec<Monomial> = q
                .standard_monomials()
                .get(d)
                .map(|l| l.iter().map(|m| m.without(k - 1)).collect())
                .unwrap_or_default();
            v.sort_by(|a, b| MonomialOrder::Grevlex.cmp(a, b));
            v
        };
        let ok = layer(2) == cat.degree2 && layer(3) == cat.degree3 && q.standard_monomials().len() <= 4;
        out.push(claim(
            "standard-monomials",
            ok,
            format!("hilbert {:?} matches the listed monomials", q.hilbert_function()),
            format!("hilbert {:?} differs from the listed monomials", q.hilbert_function()),
        ));
    } else if p.e == 10 {
        out.push(Claim {
            name: "standard-monomials",
            verdict: Verdict::Skip("(m,n) = (e-4,e-3) is outside the claim".into()),
        });
    }
    Ok(out)
}
