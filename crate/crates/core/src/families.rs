//! Explicit generating sets of `I_S(e,m,n)` and the extra elements that
//! complete them to grevlex Groebner bases.
//!
//! Every element carries a provenance tag naming the family or table row it
//! was emitted from. Index intervals `[a, b]` are inclusive and empty when
//! `a > b`.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::algebra::{Binomial, Monomial, MonomialOrder, VariableSet};
use crate::error::{Error, Result};
use crate::semigroup::SallyParams;

/// One emitted binomial together with the clause that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tagged {
    pub binomial: Binomial,
    pub provenance: String,
}

#[derive(Clone, Debug)]
pub struct FamilyGenerators {
    pub params: SallyParams,
    pub variables: VariableSet,
    /// The minimal generating set.
    pub base: Vec<Tagged>,
    /// Elements added to complete `base` to a Groebner basis.
    pub extras: Vec<Tagged>,
    /// Set when the Groebner-basis claim does not cover these parameters.
    pub warning: Option<String>,
    /// Transcription problems: absent variables, unbalanced or zero
    /// binomials. Always empty for `e >= 10`.
    pub issues: Vec<String>,
}

impl FamilyGenerators {
    pub fn base_binomials(&self) -> Vec<Binomial> {
        self.base.iter().map(|t| t.binomial.clone()).collect()
    }

    pub fn extra_binomials(&self) -> Vec<Binomial> {
        self.extras.iter().map(|t| t.binomial.clone()).collect()
    }

    /// `base` followed by `extras`.
    pub fn all(&self) -> Vec<Binomial> {
        let mut v = self.base_binomials();
        v.extend(self.extra_binomials());
        v
    }

    pub fn to_document(&self) -> FamilyDocument {
        let row = |t: &Tagged| TaggedText {
            binomial: t.binomial.render(&self.variables),
            provenance: t.provenance.clone(),
        };
        FamilyDocument {
            params: self.params.to_string(),
            base: self.base.iter().map(row).collect(),
            extras: self.extras.iter().map(row).collect(),
            warning: self.warning.clone(),
            issues: self.issues.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TaggedText {
    pub binomial: String,
    pub provenance: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyDocument {
    pub params: String,
    pub base: Vec<TaggedText>,
    pub extras: Vec<TaggedText>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub issues: Vec<String>,
}

/// Inclusive integer interval, empty when `a > b`.
pub fn interval(a: i64, b: i64) -> std::ops::RangeInclusive<i64> {
    a..=b
}

/// Collects binomials given as index lists (`[0, 0, 3]` is `x0^2*x3`).
struct Builder {
    p: SallyParams,
    vs: VariableSet,
    out: Vec<Tagged>,
    seen: HashSet<Binomial>,
    issues: Vec<String>,
}

impl Builder {
    fn new(p: SallyParams) -> Self {
        Builder {
            p,
            vs: VariableSet::sally(p),
            out: Vec::new(),
            seen: HashSet::new(),
            issues: Vec::new(),
        }
    }

    fn mono(&self, idx: &[i64]) -> std::result::Result<Monomial, String> {
        let mut exps = vec![0u32; self.vs.len()];
        for &i in idx {
            let pos = u32::try_from(i)
                .ok()
                .filter(|&i| i < self.p.e)
                .and_then(|i| self.vs.x(i))
                .ok_or_else(|| format!("x{i} is not a variable"))?;
            exps[pos] += 1;
        }
        Ok(Monomial::from_exponents(&exps))
    }

    fn add(&mut self, tag: String, lhs: &[i64], rhs: &[i64]) {
        let (u, v) = match (self.mono(lhs), self.mono(rhs)) {
            (Ok(u), Ok(v)) => (u, v),
            (Err(e), _) | (_, Err(e)) => {
                self.issues.push(format!("{tag}: {e}"));
                return;
            }
        };
        if self.vs.weight(&u) != self.vs.weight(&v) {
            self.issues.push(format!("{tag}: not weight-balanced"));
            return;
        }
        let Some(b) = Binomial::new(MonomialOrder::Grevlex, u, v) else {
            self.issues.push(format!("{tag}: zero binomial"));
            return;
        };
        if self.seen.insert(b.clone()) {
            self.out.push(Tagged {
                binomial: b,
                provenance: tag,
            });
        }
    }

    fn family(
        &mut self,
        name: &str,
        js: impl IntoIterator<Item = i64>,
        f: impl Fn(i64) -> (Vec<i64>, Vec<i64>),
    ) {
        for j in js {
            let (l, r) = f(j);
            self.add(format!("{name}, j={j}"), &l, &r);
        }
    }

    fn singles(&mut self, name: &str, items: &[(&[i64], &[i64])]) {
        for (k, (l, r)) in items.iter().enumerate() {
            self.add(format!("{name} #{}", k + 1), l, r);
        }
    }
}

/// Matrix columns: (top, bottom) as index lists.
type Column = (Vec<i64>, Vec<i64>);

fn minors(b: &mut Builder, name: &str, cols: &[Column], first_only: bool) {
    for p in 0..cols.len() {
        for q in p + 1..cols.len() {
            if first_only && p != 0 {
                break;
            }
            let (tp, bp) = &cols[p];
            let (tq, bq) = &cols[q];
            let l: Vec<i64> = tp.iter().chain(bq).copied().collect();
            let r: Vec<i64> = tq.iter().chain(bp).copied().collect();
            b.add(format!("{name} minor (cols {},{})", p + 1, q + 1), &l, &r);
        }
    }
}

fn a_n_columns(e: i64, n: i64) -> Vec<Column> {
    let mut cols: Vec<Column> = interval(2, n - 2)
        .chain(interval(n + 1, e - 2))
        .map(|i| (vec![i], vec![i + 1]))
        .collect();
    cols.push((vec![e - 1], vec![0, 0]));
    cols
}

fn b_n_columns(e: i64, n: i64) -> Vec<Column> {
    if n == 2 {
        let mut cols = vec![(vec![0], vec![3])];
        cols.extend(interval(3, e - 4).map(|i| (vec![i], vec![i + 3])));
        cols.push((vec![e - 3], vec![0, 0]));
        return cols;
    }
    let mut cols = vec![(vec![0], vec![2])];
    cols.extend(
        interval(2, e - 3)
            .filter(|&i| i != n - 2 && i != n)
            .map(|i| (vec![i], vec![i + 2])),
    );
    // the closing column (x_{e-2}, x_0^2) only exists while x_{e-2} does
    if n != e - 2 {
        cols.push((vec![e - 2], vec![0, 0]));
    }
    cols
}

fn require(p: SallyParams, ok: bool, reason: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParams {
            e: p.e,
            m: p.m,
            n: p.n,
            reason: reason.into(),
        })
    }
}

/// `(J_n, K_n)`: all 2x2 minors of `A_n`, and the minors of `B_n` that
/// use its first column.
pub fn matrix_minors_m1(p: SallyParams) -> Result<(Vec<Tagged>, Vec<Tagged>)> {
    require(p, p.m == 1, "requires m = 1")?;
    let (e, n) = (p.e as i64, p.n as i64);
    let mut b = Builder::new(p);
    minors(&mut b, "A_n", &a_n_columns(e, n), false);
    let j = std::mem::take(&mut b.out);
    minors(&mut b, "B_n", &b_n_columns(e, n), true);
    let k = std::mem::take(&mut b.out);
    if !b.issues.is_empty() {
        return Err(Error::InvalidArgument(b.issues.join("; ")));
    }
    Ok((j, k))
}

/// Which shape of `L_{e,n}` applies (m = 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LShape {
    Two,
    Three,
    Four,
    Middle,
    EMinus3,
    EMinus2,
}

fn l_shapes(e: i64, n: i64) -> Vec<LShape> {
    let mut v = Vec::new();
    let checks = [
        (n == 2, LShape::Two),
        (n == 3, LShape::Three),
        (n == 4, LShape::Four),
        ((5..=e - 4).contains(&n), LShape::Middle),
        (n == e - 3, LShape::EMinus3),
        (n == e - 2, LShape::EMinus2),
    ];
    for (ok, s) in checks {
        if ok {
            v.push(s);
        }
    }
    v
}

fn emit_l(b: &mut Builder, shape: LShape, e: i64, n: i64) {
    match shape {
        LShape::Two => {}
        LShape::Three => {
            b.family("L[n=3] x4*x(4+i) - x2*x(6+i)", interval(0, e - 7), |i| {
                (vec![4, 4 + i], vec![2, 6 + i])
            });
            b.singles("L[n=3]", &[(&[0, 0, 2], &[4, e - 2])]);
        }
        LShape::Four => {
            b.family("L[n=4] x5*x(5+i) - x3*x(7+i)", interval(0, e - 8), |i| {
                (vec![5, 5 + i], vec![3, 7 + i])
            });
            b.singles(
                "L[n=4]",
                &[
                    (&[3, 3], &[0, 6]),
                    (&[0, 0, 3], &[5, e - 2]),
                    (&[0, 2, 2], &[5, e - 1]),
                    (&[2, 2, 2], &[7, e - 1]),
                ],
            );
        }
        LShape::Middle => {
            b.family("L[5<=n<=e-4] x(n+1)*x(n+1+i) - x(n-1)*x(n+3+i)", interval(0, e - n - 4), |i| {
                (vec![n + 1, n + 1 + i], vec![n - 1, n + 3 + i])
            });
            b.family("L[5<=n<=e-4] x(n-1)*x(n-1-i) - x(n+1)*x(n-3-i)", interval(0, n - 5), |i| {
                (vec![n - 1, n - 1 - i], vec![n + 1, n - 3 - i])
            });
            b.singles(
                "L[5<=n<=e-4]",
                &[
                    (&[n - 1, 3], &[n + 2, 0]),
                    (&[0, 0, n - 1], &[n + 1, e - 2]),
                    (&[0, 2, n - 2], &[n + 1, e - 1]),
                ],
            );
        }
        LShape::EMinus3 => {
            b.family("L[n=e-3] x(e-4)*x(e-4-i) - x(e-2)*x(e-6-i)", interval(0, e - 8), |i| {
                (vec![e - 4, e - 4 - i], vec![e - 2, e - 6 - i])
            });
            b.singles(
                "L[n=e-3]",
                &[
                    (&[e - 4, 3], &[0, e - 1]),
                    (&[0, 0, e - 4], &[e - 2, e - 2]),
                    (&[0, 2, e - 5], &[e - 2, e - 1]),
                ],
            );
        }
        LShape::EMinus2 => {
            b.family("L[n=e-2] x(e-3)*x(e-3-i) - x(e-1)*x(e-5-i)", interval(0, e - 7), |i| {
                (vec![e - 3, e - 3 - i], vec![e - 1, e - 5 - i])
            });
            b.singles("L[n=e-2]", &[(&[0, 0, 0], &[3, e - 3]), (&[0, 2, e - 4], &[e - 1, e - 1])]);
        }
    }
}

fn pick<T: Copy + fmt::Debug>(p: SallyParams, matches: Vec<T>, what: &str) -> Result<T> {
    match matches.as_slice() {
        [one] => Ok(*one),
        [first, ..] if p.e < 10 => Ok(*first),
        [] => Err(Error::InvalidParams {
            e: p.e,
            m: p.m,
            n: p.n,
            reason: format!("no {what} applies"),
        }),
        many => panic!("{p}: ambiguous {what} dispatch: {many:?}"),
    }
}

/// The shape of `L_{e,n}` selected for `p` (m = 1).
pub fn l_shape(p: SallyParams) -> Result<LShape> {
    require(p, p.m == 1, "requires m = 1")?;
    pick(p, l_shapes(p.e as i64, p.n as i64), "L-shape")
}

fn finish(b: Builder) -> Result<(Vec<Tagged>, Vec<String>)> {
    if b.p.e >= 10 && !b.issues.is_empty() {
        return Err(Error::InvalidArgument(b.issues.join("; ")));
    }
    Ok((b.out, b.issues))
}

fn base_m1(p: SallyParams) -> Result<(Vec<Tagged>, Vec<String>)> {
    require(p, p.m == 1, "requires m = 1")?;
    let (e, n) = (p.e as i64, p.n as i64);
    let shape = l_shape(p)?;
    let mut b = Builder::new(p);
    minors(&mut b, "A_n", &a_n_columns(e, n), false);
    minors(&mut b, "B_n", &b_n_columns(e, n), true);
    emit_l(&mut b, shape, e, n);
    finish(b)
}

/// `J_n ∪ K_n ∪ L_{e,n}` for `m = 1`.
pub fn gens_m1(p: SallyParams) -> Result<Vec<Tagged>> {
    Ok(base_m1(p)?.0)
}

/// The shape of `K_{m,n}` for `m >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KShape {
    M2N3,
    M2N4,
    M2N5,
    M2Middle,
    M2EMinus3,
    M2EMinus2,
    M3N4,
    Consecutive,
    EMinus5EMinus4,
    EMinus4EMinus3,
    EMinus3EMinus2,
    GapTwo,
    EMinus5EMinus3,
    EMinus4EMinus2,
    Wide,
    WideEMinus3,
    WideEMinus2,
}

impl KShape {
    pub const ALL: [KShape; 17] = [
        KShape::M2N3,
        KShape::M2N4,
        KShape::M2N5,
        KShape::M2Middle,
        KShape::M2EMinus3,
        KShape::M2EMinus2,
        KShape::M3N4,
        KShape::Consecutive,
        KShape::EMinus5EMinus4,
        KShape::EMinus4EMinus3,
        KShape::EMinus3EMinus2,
        KShape::GapTwo,
        KShape::EMinus5EMinus3,
        KShape::EMinus4EMinus2,
        KShape::Wide,
        KShape::WideEMinus3,
        KShape::WideEMinus2,
    ];

    fn applies(self, e: i64, m: i64, n: i64) -> bool {
        match self {
            KShape::M2N3 => m == 2 && n == 3,
            KShape::M2N4 => m == 2 && n == 4,
            KShape::M2N5 => m == 2 && n == 5,
            KShape::M2Middle => m == 2 && 6 <= n && n <= e - 4,
            KShape::M2EMinus3 => m == 2 && n == e - 3,
            KShape::M2EMinus2 => m == 2 && n == e - 2,
            KShape::M3N4 => m == 3 && n == 4,
            KShape::Consecutive => n == m + 1 && 4 <= m && m <= e - 6,
            KShape::EMinus5EMinus4 => m == e - 5 && n == e - 4,
            KShape::EMinus4EMinus3 => m == e - 4 && n == e - 3,
            KShape::EMinus3EMinus2 => m == e - 3 && n == e - 2,
            KShape::GapTwo => n == m + 2 && 3 <= m && m <= e - 6,
            KShape::EMinus5EMinus3 => m == e - 5 && n == e - 3,
            KShape::EMinus4EMinus2 => m == e - 4 && n == e - 2,
            KShape::Wide => m >= 3 && m + 2 < n && n <= e - 4,
            KShape::WideEMinus3 => m >= 3 && m + 2 < n && n == e - 3,
            KShape::WideEMinus2 => m >= 3 && m + 2 < n && n == e - 2,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            KShape::M2N3 => "K[m=2,n=3]",
            KShape::M2N4 => "K[m=2,n=4]",
            KShape::M2N5 => "K[m=2,n=5]",
            KShape::M2Middle => "K[m=2,6<=n<=e-4]",
            KShape::M2EMinus3 => "K[m=2,n=e-3]",
            KShape::M2EMinus2 => "K[m=2,n=e-2]",
            KShape::M3N4 => "K[m=3,n=4]",
            KShape::Consecutive => "K[n=m+1,4<=m<=e-6]",
            KShape::EMinus5EMinus4 => "K[m=e-5,n=e-4]",
            KShape::EMinus4EMinus3 => "K[m=e-4,n=e-3]",
            KShape::EMinus3EMinus2 => "K[m=e-3,n=e-2]",
            KShape::GapTwo => "K[n=m+2,3<=m<=e-6]",
            KShape::EMinus5EMinus3 => "K[m=e-5,n=e-3]",
            KShape::EMinus4EMinus2 => "K[m=e-4,n=e-2]",
            KShape::Wide => "K[m>=3,m+2<n<=e-4]",
            KShape::WideEMinus3 => "K[m>=3,m+2<n=e-3]",
            KShape::WideEMinus2 => "K[m>=3,m+2<n=e-2]",
        }
    }
}

/// Every `K`-shape whose condition holds; exactly one for `e >= 10`.
pub fn k_shapes_matching(p: SallyParams) -> Vec<KShape> {
    let (e, m, n) = (p.e as i64, p.m as i64, p.n as i64);
    KShape::ALL.into_iter().filter(|s| s.applies(e, m, n)).collect()
}

pub fn k_shape(p: SallyParams) -> Result<KShape> {
    require(p, p.m >= 2, "requires m >= 2")?;
    pick(p, k_shapes_matching(p), "K-shape")
}

fn emit_k(b: &mut Builder, shape: KShape, e: i64, m: i64, n: i64) {
    let tag = shape.label();
    let name = |s: &str| format!("{tag} {s}");
    // recurring one-parameter families
    let f1 = |b: &mut Builder, js: Vec<i64>| {
        b.family(&name("x(m+1)*x(m+1+j) - x(m-1)*x(m+3+j)"), js, |j| {
            (vec![m + 1, m + 1 + j], vec![m - 1, m + 3 + j])
        })
    };
    let n_up = |b: &mut Builder| {
        b.family(&name("x(n+1)*x(n+1+j) - x(n-1)*x(n+3+j)"), interval(0, e - n - 4), |j| {
            (vec![n + 1, n + 1 + j], vec![n - 1, n + 3 + j])
        })
    };
    let n_up_wide = |b: &mut Builder| {
        b.family(&name("x(n+1)*x(n+1+j) - x(n-2)*x(n+4+j)"), interval(0, e - n - 5), |j| {
            (vec![n + 1, n + 1 + j], vec![n - 2, n + 4 + j])
        })
    };
    let n_down = |b: &mut Builder, js: Vec<i64>| {
        b.family(&name("x(n-1)*x(n-1-j) - x(n+1)*x(n-3-j)"), js, |j| {
            (vec![n - 1, n - 1 - j], vec![n + 1, n - 3 - j])
        })
    };
    let n_down_skip = |b: &mut Builder| {
        b.family(&name("x(n-1)*x(n-3-j) - x(n+1)*x(n-5-j)"), interval(0, n - 5), |j| {
            (vec![n - 1, n - 3 - j], vec![n + 1, n - 5 - j])
        })
    };
    let m_down = |b: &mut Builder| {
        b.family(&name("x(m-1)*x(m-1-j) - x(m+1)*x(m-3-j)"), interval(0, m - 3), |j| {
            (vec![m - 1, m - 1 - j], vec![m + 1, m - 3 - j])
        })
    };
    let m_down_wide = |b: &mut Builder| {
        b.family(&name("x(m-1)*x(m-1-j) - x(m+2)*x(m-4-j)"), interval(0, m - 4), |j| {
            (vec![m - 1, m - 1 - j], vec![m + 2, m - 4 - j])
        })
    };
    let except = |a: i64, z: i64, skip: &[i64]| -> Vec<i64> {
        interval(a, z).filter(|j| !skip.contains(j)).collect()
    };
    let single = |b: &mut Builder, s: &str, l: &[i64], r: &[i64]| b.add(name(s), l, r);
    let trios = |b: &mut Builder, items: &[(&[i64], &[i64])]| b.singles(&name("degree-3"), items);

    match shape {
        KShape::M2N3 => {
            n_up_wide(b);
            trios(
                b,
                &[
                    (&[0, 0, m - 1], &[m + 3, e - 4]),
                    (&[0, 1, m - 1], &[m + 3, e - 3]),
                    (&[1, 1, 1], &[4, e - 1]),
                ],
            );
        }
        KShape::M2N4 => {
            f1(b, except(0, e - m - 4, &[1]));
            n_up(b);
            trios(
                b,
                &[
                    (&[0, 0, m - 1], &[m + 1, e - 2]),
                    (&[0, 1, m - 1], &[m + 1, e - 1]),
                    (&[0, 1, n - 1], &[n + 2, e - 2]),
                    (&[0, 0, n - 1], &[n + 2, e - 3]),
                    (&[1, 1, 1], &[6, e - 3]),
                    (&[1, 1, n - 1], &[n + 2, e - 1]),
                ],
            );
        }
        KShape::M2N5 => {
            single(b, "x(m+1)^2 - x(m-2)*x(m+4)", &[m + 1, m + 1], &[m - 2, m + 4]);
            f1(b, except(1, e - m - 4, &[2]));
            n_up(b);
            single(b, "x(n-1)^2 - x(n+2)*x(n-4)", &[n - 1, n - 1], &[n + 2, n - 4]);
            trios(
                b,
                &[
                    (&[0, 1, n - 1], &[n + 2, e - 2]),
                    (&[0, 0, n - 1], &[n + 2, e - 3]),
                    (&[1, 1, n - 1], &[n + 2, e - 1]),
                    (&[0, 0, m - 1], &[m + 2, e - 3]),
                    (&[0, 1, m - 1], &[m + 2, e - 2]),
                    (&[1, 1, 1], &[4, e - 1]),
                ],
            );
        }
        KShape::M2Middle => {
            single(b, "x(m+1)*x(n-2) - x0*x(n+1)", &[m + 1, n - 2], &[0, n + 1]);
            f1(b, except(0, e - m - 4, &[n - m - 1, n - m - 3]));
            n_up(b);
            n_down(b, interval(0, n - m - 4).collect());
            single(b, "x(n-1)*x(m+2) - x(n+2)*x(m-1)", &[n - 1, m + 2], &[n + 2, m - 1]);
            trios(
                b,
                &[
                    (&[0, 1, n - 1], &[n + 2, e - 2]),
                    (&[0, 0, n - 1], &[n + 2, e - 3]),
                    (&[0, 0, m - 1], &[m + 2, e - 3]),
                    (&[0, 1, m - 1], &[m + 2, e - 2]),
                    (&[1, 1, 1], &[4, e - 1]),
                ],
            );
        }
        KShape::M2EMinus3 => {
            single(b, "x(m+1)*x(n-2) - x0*x(n+1)", &[m + 1, n - 2], &[0, n + 1]);
            f1(b, except(0, e - m - 5, &[n - m - 3]));
            n_down(b, interval(0, n - m - 4).collect());
            single(b, "x(n-1)*x(m+2) - x(n+2)*x(m-1)", &[n - 1, m + 2], &[n + 2, m - 1]);
            trios(
                b,
                &[
                    (&[0, 1, n - 1], &[n + 1, e - 1]),
                    (&[0, 0, n - 1], &[n + 1, e - 2]),
                    (&[0, 0, m - 1], &[m + 3, e - 4]),
                    (&[0, 1, m - 1], &[m + 2, e - 2]),
                    (&[1, 1, 1], &[4, e - 1]),
                ],
            );
        }
        KShape::M2EMinus2 => {
            single(b, "x(m+1)*x(n-2) - x0*x(n+1)", &[m + 1, n - 2], &[0, n + 1]);
            f1(b, except(0, e - m - 4, &[n - m - 3]));
            n_down(b, interval(0, n - m - 4).collect());
            trios(
                b,
                &[
                    (&[0, 1, n - 1], &[n + 1, e - 1]),
                    (&[0, 0, m - 1], &[m + 2, e - 3]),
                    (&[0, 1, m - 1], &[m + 3, e - 3]),
                    (&[1, 1, 1], &[4, e - 1]),
                ],
            );
        }
        KShape::M3N4 => {
            n_up_wide(b);
            trios(
                b,
                &[
                    (&[0, 0, m - 1], &[m + 3, e - 4]),
                    (&[0, 1, m - 1], &[m + 3, e - 3]),
                    (&[0, 2, n - 2], &[n + 2, e - 2]),
                    (&[2, 2, 1], &[6, e - 1]),
                    (&[2, 2, 2], &[7, e - 1]),
                ],
            );
        }
        KShape::Consecutive | KShape::EMinus5EMinus4 => {
            if shape == KShape::Consecutive {
                n_up_wide(b);
            }
            m_down_wide(b);
            trios(
                b,
                &[
                    (&[0, 0, m - 1], &[m + 2, e - 3]),
                    (&[0, 1, m - 1], &[m + 2, e - 2]),
                    (&[0, 2, n - 2], &[n + 2, e - 2]),
                ],
            );
        }
        KShape::EMinus4EMinus3 => {
            m_down_wide(b);
            trios(b, &[(&[0, 1, m - 1], &[m + 2, e - 2]), (&[0, 2, n - 2], &[n + 2, e - 2])]);
        }
        KShape::EMinus3EMinus2 => {
            m_down_wide(b);
            trios(b, &[(&[0, 2, n - 2], &[n + 1, e - 1])]);
        }
        KShape::GapTwo => {
            f1(b, except(0, e - m - 4, &[1]));
            n_up(b);
            n_down_skip(b);
            m_down(b);
            trios(
                b,
                &[
                    (&[0, 0, m - 1], &[m + 1, e - 2]),
                    (&[0, 1, m - 1], &[m + 1, e - 1]),
                    (&[0, 1, n - 1], &[n + 2, e - 2]),
                    (&[0, 0, n - 1], &[n + 2, e - 3]),
                ],
            );
        }
        KShape::EMinus5EMinus3 | KShape::EMinus4EMinus2 => {
            single(b, "x(m+1)^2 - x(m-1)*x(m+3)", &[m + 1, m + 1], &[m - 1, m + 3]);
            n_down_skip(b);
            m_down(b);
            if shape == KShape::EMinus5EMinus3 {
                trios(
                    b,
                    &[
                        (&[0, 0, m - 1], &[m + 1, e - 2]),
                        (&[0, 1, m - 1], &[m + 1, e - 1]),
                        (&[0, 1, n - 1], &[n + 2, e - 2]),
                        (&[0, 0, n - 1], &[n + 1, e - 2]),
                    ],
                );
            } else {
                trios(b, &[(&[0, 1, m - 1], &[m + 1, e - 1]), (&[0, 1, n - 1], &[n + 1, e - 1])]);
            }
        }
        KShape::Wide | KShape::WideEMinus3 | KShape::WideEMinus2 => {
            // the printed form x(m+1)*x(n-m-5) - x(m-2)*x(n-m-2) has a
            // negative index whenever n < m + 5; the m = 2 pattern
            // x(m+1)*x(n-2) - x(m-2)*x(n+1) is used instead
            single(b, "x(m+1)*x(n-2) - x(m-2)*x(n+1)", &[m + 1, n - 2], &[m - 2, n + 1]);
            if shape == KShape::WideEMinus2 {
                f1(b, except(0, e - m - 4, &[n - m - 3]));
            } else {
                f1(b, except(0, e - m - 4, &[n - m - 1, n - m - 3]));
            }
            if shape == KShape::Wide {
                n_up(b);
            }
            n_down(b, except(0, n - 3, &[n - m - 1, n - m - 2, n - m - 3]));
            if shape != KShape::WideEMinus2 {
                single(b, "x(n-1)*x(m+2) - x(n+2)*x(m-1)", &[n - 1, m + 2], &[n + 2, m - 1]);
            }
            m_down(b);
            match shape {
                KShape::Wide => trios(
                    b,
                    &[
                        (&[0, 0, m - 1], &[m + 2, e - 3]),
                        (&[0, 1, m - 1], &[m + 2, e - 2]),
                        (&[0, 1, n - 1], &[n + 2, e - 2]),
                        (&[0, 0, n - 1], &[n + 2, e - 3]),
                    ],
                ),
                KShape::WideEMinus3 => trios(
                    b,
                    &[
                        (&[0, 0, m - 1], &[m + 1, e - 2]),
                        (&[0, 1, m - 1], &[m + 1, e - 1]),
                        (&[0, 1, n - 1], &[n + 2, e - 2]),
                        (&[0, 0, n - 1], &[n + 1, e - 2]),
                    ],
                ),
                _ => trios(
                    b,
                    &[
                        (&[0, 0, m - 1], &[m + 2, e - 3]),
                        (&[0, 1, m - 1], &[m + 1, e - 1]),
                        (&[0, 1, n - 1], &[n + 1, e - 1]),
                    ],
                ),
            }
        }
    }
}

fn a_mn_columns(e: i64, m: i64, n: i64) -> Vec<Column> {
    let mut cols: Vec<Column> = interval(0, m - 2)
        .chain(interval(m + 1, n - 2))
        .chain(interval(n + 1, e - 2))
        .map(|i| (vec![i], vec![i + 1]))
        .collect();
    cols.push((vec![e - 1], vec![0, 0]));
    cols
}

fn base_m_ge2(p: SallyParams) -> Result<(Vec<Tagged>, Vec<String>)> {
    let shape = k_shape(p)?;
    let (e, m, n) = (p.e as i64, p.m as i64, p.n as i64);
    let mut b = Builder::new(p);
    minors(&mut b, "A_{m,n}", &a_mn_columns(e, m, n), false);
    emit_k(&mut b, shape, e, m, n);
    finish(b)
}

/// `J_{m,n} ∪ K_{m,n}` for `m >= 2`.
pub fn gens_m_ge2(p: SallyParams) -> Result<Vec<Tagged>> {
    Ok(base_m_ge2(p)?.0)
}

/// Row of the completion table selected for `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtrasRow {
    M1Empty,
    M1N4,
    M1Middle,
    M1EMinus3,
    M2N3,
    M2N4Or5,
    M2Middle,
    M2EMinus3,
    M2EMinus2,
    MidConsecutive,
    MidOther,
    MidEMinus3,
    MidEMinus2,
    EMinus5EMinus4,
    EMinus5EMinus3,
    EMinus5EMinus2,
    EMinus4EMinus3,
    EMinus4EMinus2,
    EMinus3EMinus2,
}

impl ExtrasRow {
    pub fn label(self) -> &'static str {
        match self {
            ExtrasRow::M1Empty => "G'[m=1,n in {2,3,e-2}]",
            ExtrasRow::M1N4 => "G'[m=1,n=4]",
            ExtrasRow::M1Middle => "G'[m=1,n=[5,e-4]]",
            ExtrasRow::M1EMinus3 => "G'[m=1,n=e-3]",
            ExtrasRow::M2N3 => "G'[m=2,n=3]",
            ExtrasRow::M2N4Or5 => "G'[m=2,n in {4,5}]",
            ExtrasRow::M2Middle => "G'[m=2,n=[6,e-4]]",
            ExtrasRow::M2EMinus3 => "G'[m=2,n=e-3]",
            ExtrasRow::M2EMinus2 => "G'[m=2,n=e-2]",
            ExtrasRow::MidConsecutive => "G'[m=[3,e-6],n=m+1<e-3]",
            ExtrasRow::MidOther => "G'[m=[3,e-6],n<e-3,n!=m+1]",
            ExtrasRow::MidEMinus3 => "G'[m=[3,e-6],n=e-3]",
            ExtrasRow::MidEMinus2 => "G'[m=[3,e-6],n=e-2]",
            ExtrasRow::EMinus5EMinus4 => "G'[m=e-5,n=e-4]",
            ExtrasRow::EMinus5EMinus3 => "G'[m=e-5,n=e-3]",
            ExtrasRow::EMinus5EMinus2 => "G'[m=e-5,n=e-2]",
            ExtrasRow::EMinus4EMinus3 => "G'[m=e-4,n=e-3]",
            ExtrasRow::EMinus4EMinus2 => "G'[m=e-4,n=e-2]",
            ExtrasRow::EMinus3EMinus2 => "G'[m=e-3,n=e-2]",
        }
    }
}

fn extras_rows(e: i64, m: i64, n: i64) -> Vec<ExtrasRow> {
    use ExtrasRow::*;
    let mid = 3 <= m && m <= e - 6;
    let checks = [
        (m == 1 && (n == 2 || n == 3 || n == e - 2), M1Empty),
        (m == 1 && n == 4, M1N4),
        (m == 1 && 5 <= n && n <= e - 4, M1Middle),
        (m == 1 && n == e - 3, M1EMinus3),
        (m == 2 && n == 3, M2N3),
        (m == 2 && (n == 4 || n == 5), M2N4Or5),
        (m == 2 && 6 <= n && n <= e - 4, M2Middle),
        (m == 2 && n == e - 3, M2EMinus3),
        (m == 2 && n == e - 2, M2EMinus2),
        (mid && n < e - 3 && n == m + 1, MidConsecutive),
        (mid && n < e - 3 && n != m + 1, MidOther),
        (mid && n == e - 3, MidEMinus3),
        (mid && n == e - 2, MidEMinus2),
        (m == e - 5 && n == e - 4, EMinus5EMinus4),
        (m == e - 5 && n == e - 3, EMinus5EMinus3),
        (m == e - 5 && n == e - 2, EMinus5EMinus2),
        (m == e - 4 && n == e - 3, EMinus4EMinus3),
        (m == e - 4 && n == e - 2, EMinus4EMinus2),
        (m == e - 3 && n == e - 2, EMinus3EMinus2),
    ];
    checks.into_iter().filter(|c| c.0).map(|c| c.1).collect()
}

pub fn extras_row(p: SallyParams) -> Result<ExtrasRow> {
    pick(p, extras_rows(p.e as i64, p.m as i64, p.n as i64), "completion row")
}

fn emit_extras(b: &mut Builder, row: ExtrasRow, e: i64, m: i64, n: i64) {
    use ExtrasRow::*;
    let items: Vec<(Vec<i64>, Vec<i64>)> = match row {
        M1Empty | EMinus4EMinus2 | EMinus3EMinus2 => vec![],
        M1N4 => vec![
            (vec![0, 5, e - 2], vec![2, 2, e - 1]),
            (vec![2, 2, e - 2], vec![0, 3, e - 1]),
        ],
        M1Middle => vec![(vec![0, n + 1, e - 2], vec![2, n - 2, e - 1])],
        M1EMinus3 => vec![
            (vec![e - 2, e - 2, e - 2], vec![e - 4, e - 1, e - 1]),
            (vec![2, e - 2, e - 2], vec![0, e - 1, e - 1]),
            (vec![0, e - 2, e - 2], vec![2, e - 5, e - 1]),
        ],
        M2N3 => vec![(vec![0, 4, e - 3], vec![1, 1, e - 1])],
        M2N4Or5 => vec![
            (vec![0, 3, e - 2], vec![1, 1, e - 1]),
            (vec![0, n + 1, e - 2], vec![1, n - 1, e - 1]),
        ],
        M2Middle => vec![
            (vec![0, n + 1, e - 2], vec![1, n - 1, e - 1]),
            (vec![0, 3, e - 2], vec![1, 1, e - 1]),
            (vec![1, 1, n - 1], vec![n + 2, e - 1]),
        ],
        M2EMinus3 => vec![
            (vec![e - 2, e - 2, e - 2], vec![e - 4, e - 1, e - 1]),
            (vec![3, e - 2, e - 2], vec![1, e - 1, e - 1]),
            (vec![0, e - 2, e - 2], vec![1, e - 4, e - 1]),
            (vec![0, 3, e - 2], vec![1, 1, e - 1]),
            (vec![1, 1, e - 4], vec![e - 1, e - 1]),
        ],
        M2EMinus2 => vec![
            (vec![0, 4, e - 3], vec![1, 1, e - 1]),
            (vec![1, 1, e - 3], vec![0, 0, e - 1]),
        ],
        MidConsecutive => vec![
            (vec![0, m + 2, e - 3], vec![1, m - 1, e - 1]),
            (vec![0, n + 1, e - 2], vec![2, n - 2, e - 1]),
        ],
        MidOther => vec![
            (vec![0, m + 1, e - 2], vec![1, m - 1, e - 1]),
            (vec![0, n + 1, e - 2], vec![1, n - 1, e - 1]),
        ],
        MidEMinus3 => vec![
            (vec![e - 2, e - 2, e - 2], vec![e - 4, e - 1, e - 1]),
            (vec![m + 1, e - 2, e - 2], vec![m - 1, e - 1, e - 1]),
            (vec![0, e - 2, e - 2], vec![1, e - 4, e - 1]),
            (vec![0, m + 1, e - 2], vec![1, m - 1, e - 1]),
        ],
        MidEMinus2 => vec![(vec![0, m + 2, e - 3], vec![1, m - 1, e - 1])],
        EMinus5EMinus4 => vec![
            (vec![e - 3, e - 3, e - 2], vec![e - 6, e - 1, e - 1]),
            (vec![0, e - 3, e - 2], vec![2, e - 6, e - 1]),
            (vec![e - 3, e - 3, e - 3], vec![e - 7, e - 1, e - 1]),
            (vec![0, e - 3, e - 3], vec![1, e - 6, e - 1]),
        ],
        EMinus5EMinus3 => vec![
            (vec![e - 2, e - 2, e - 2], vec![e - 4, e - 1, e - 1]),
            (vec![e - 4, e - 2, e - 2], vec![e - 6, e - 1, e - 1]),
            (vec![0, e - 2, e - 2], vec![1, e - 4, e - 1]),
            (vec![0, e - 4, e - 2], vec![1, e - 6, e - 1]),
        ],
        EMinus5EMinus2 => vec![
            (vec![e - 3, e - 3, e - 3], vec![e - 7, e - 1, e - 1]),
            (vec![1, e - 3, e - 3], vec![0, e - 4, e - 1]),
            (vec![0, e - 3, e - 3], vec![1, e - 6, e - 1]),
        ],
        EMinus4EMinus3 => vec![
            (vec![0, e - 2, e - 2], vec![2, e - 5, e - 1]),
            (vec![0, 0, e - 5, e - 1], vec![e - 2, e - 2, e - 2]),
            (vec![e - 2, e - 2, e - 2, e - 2], vec![e - 5, e - 1, e - 1, e - 1]),
        ],
    };
    let _ = (m, n);
    for (k, (l, r)) in items.iter().enumerate() {
        b.add(format!("{} #{}", row.label(), k + 1), l, r);
    }
}

/// The completion elements for `p`.
pub fn gb_extras(p: SallyParams) -> Result<Vec<Tagged>> {
    Ok(extras_with_issues(p)?.0)
}

fn extras_with_issues(p: SallyParams) -> Result<(Vec<Tagged>, Vec<String>)> {
    let row = extras_row(p)?;
    let mut b = Builder::new(p);
    emit_extras(&mut b, row, p.e as i64, p.m as i64, p.n as i64);
    finish(b)
}

/// The generating set together with its completion.
pub fn full_family(p: SallyParams) -> Result<FamilyGenerators> {
    let (base, mut issues) = if p.m == 1 { base_m1(p)? } else { base_m_ge2(p)? };
    let (extras_raw, more) = extras_with_issues(p)?;
    issues.extend(more);
    let in_base: HashSet<&Binomial> = base.iter().map(|t| &t.binomial).collect();
    let extras: Vec<Tagged> = extras_raw
        .into_iter()
        .filter(|t| !in_base.contains(&t.binomial))
        .collect();
    let warning = if p.e < 10 {
        Some("below e = 10 the families carry no guarantee".to_string())
    } else if p.m + 4 == p.e && p.n + 3 == p.e {
        Some("(m,n) = (e-4,e-3): the union is not claimed to be a Groebner basis".to_string())
    } else {
        None
    };
    Ok(FamilyGenerators {
        params: p,
        variables: VariableSet::sally(p),
        base,
        extras,
        warning,
        issues,
    })
}

/// Standard monomials of degrees 2 and 3 expected modulo the leads of the
/// completed family and `x_{e-1}`, listed over the ring without `x_{e-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardCatalog {
    pub variables: VariableSet,
    pub degree2: Vec<Monomial>,
    pub degree3: Vec<Monomial>,
}

pub fn standard_monomial_catalog(p: SallyParams) -> StandardCatalog {
    let (e, m, n) = (p.e as i64, p.m as i64, p.n as i64);
    let full = VariableSet::sally(p);
    let vs = full.without(full.len() - 1);
    let present: Vec<i64> = p.indices().into_iter().map(i64::from).filter(|&i| i != e - 1).collect();
    let has = |i: i64| present.contains(&i);
    let mono = |idx: &[i64]| {
        let mut exps = vec![0u32; vs.len()];
        for &i in idx {
            exps[vs.x(i as u32).expect("present")] += 1;
        }
        Monomial::from_exponents(&exps)
    };

    let mut pairs: Vec<(i64, i64)> = Vec::new();
    if m == 1 {
        pairs.push((2, e - 2));
        pairs.push((2, n - 2));
        if n == 2 {
            pairs.push((n + 1, e - 3));
        }
        pairs.push((n + 1, e - 2));
        if n == e - 2 {
            pairs.push((3, e - 3));
        }
    } else {
        pairs.push((m + 1, e - 2));
        if n == m + 1 {
            pairs.push((n + 1, e - 3));
        }
        pairs.push((n + 1, e - 2));
        pairs.push((1, m - 1));
        if n == m + 1 {
            pairs.push((2, m - 1));
        }
        pairs.push((1, n - 1));
        if n == e - 2 {
            pairs.push((m + 2, n - 1));
        }
    }
    let mut degree2: Vec<Monomial> = present.iter().map(|&j| mono(&[0, j])).collect();
    for (i, j) in pairs {
        let (i, j) = (i.min(j), i.max(j));
        if has(i) && has(j) {
            degree2.push(mono(&[i, j]));
        }
    }

    let mut squares: Vec<i64> = Vec::new();
    if n == e - 2 {
        match m {
            _ if m == e - 3 => squares.push(e - 4),
            _ if m == e - 4 => squares.extend([e - 5, e - 3]),
            _ if m <= e - 5 => squares.push(e - 3),
            _ => {}
        }
    }
    let mut triples: Vec<(i64, i64)> = Vec::new();
    if m == 1 && 3 <= n && n <= e - 3 {
        triples.push((2, e - 2));
    }
    if (m, n) == (1, 2) || (m, n) == (1, e - 2) {
        triples.push((3, e - 3));
    }
    if (m, n) == (1, 2) {
        triples.push((3, e - 2));
    }
    if (m, n) == (1, 3) || (m, n) == (2, 3) {
        triples.push((4, e - 2));
    }
    if (m, n) == (e - 3, e - 2) {
        triples.push((1, e - 4));
    }
    let mut degree3: Vec<Monomial> = Vec::new();
    for j in squares {
        if has(j) {
            degree3.push(mono(&[0, 0, j]));
        }
    }
    for (j, k) in triples {
        if has(j) && has(k) {
            degree3.push(mono(&[0, j, k]));
        }
    }
    for list in [&mut degree2, &mut degree3] {
        list.sort_by(|a, b| MonomialOrder::Grevlex.cmp(a, b));
        list.dedup();
    }
    StandardCatalog {
        variables: vs,
        degree2,
        degree3,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(e: u32, m: u32, n: u32) -> SallyParams {
        SallyParams::new(e, m, n).unwrap()
    }

    fn texts(v: &[Tagged], vs: &VariableSet) -> Vec<String> {
        v.iter().map(|t| t.binomial.render(vs)).collect()
    }

    #[test]
    fn intervals_are_inclusive() {
        assert_eq!(interval(0, 0).count(), 1);
        assert_eq!(interval(0, -1).count(), 0);
        assert_eq!(interval(2, 5).collect::<Vec<_>>(), vec![2, 3, 4, 5]);
    }

    #[test]
    fn dispatch_is_total_and_unique() {
        for e in 10..=14 {
            for q in SallyParams::all_for(e) {
                if q.m == 1 {
                    assert_eq!(l_shapes(e as i64, q.n as i64).len(), 1, "{q}");
                } else {
                    assert_eq!(k_shapes_matching(q).len(), 1, "{q}");
                }
                assert_eq!(extras_rows(e as i64, q.m as i64, q.n as i64).len(), 1, "{q}");
            }
        }
    }

    #[test]
    fn a5_adjacent_minor() {
        let q = p(10, 1, 5);
        let (j, _) = matrix_minors_m1(q).unwrap();
        let vs = VariableSet::sally(q);
        let t = texts(&j, &vs);
        assert!(t.contains(&"x3^2 - x2*x4".to_string()), "{t:?}");
        assert!(j.iter().all(|x| x.binomial.is_weight_balanced(&vs)));
        // A_5 has columns x2,x3,x6,x7,x8,x9: 6 columns, 15 minors
        assert_eq!(j.len(), 15);
        let last = vs.x(0).unwrap();
        assert!(j
            .iter()
            .filter(|x| x.provenance.ends_with(",6)"))
            .all(|x| x.binomial.lead().exponent(last) + x.binomial.trail().exponent(last) >= 2));
    }

    #[test]
    fn counts_for_m_equal_one() {
        assert!(gens_m1(p(10, 4, 5)).is_err());
        assert_eq!(gens_m1(p(10, 1, 4)).unwrap().len(), 27);
        assert_eq!(gens_m1(p(12, 1, 7)).unwrap().len(), 43);
    }

    #[test]
    fn listed_members() {
        let q = p(10, 1, 3);
        let vs = VariableSet::sally(q);
        assert!(texts(&gens_m1(q).unwrap(), &vs).contains(&"x0^2*x2 - x4*x8".to_string()));

        let q = p(10, 2, 3);
        let vs = VariableSet::sally(q);
        assert!(texts(&gens_m_ge2(q).unwrap(), &vs).contains(&"x1^3 - x4*x9".to_string()));

        let q = p(10, 7, 8);
        let vs = VariableSet::sally(q);
        assert!(texts(&gens_m_ge2(q).unwrap(), &vs).contains(&"x0*x2*x6 - x9^2".to_string()));
    }

    #[test]
    fn extras_rows_examples() {
        assert!(gb_extras(p(10, 1, 2)).unwrap().is_empty());
        let q = p(10, 1, 6);
        let vs = VariableSet::sally(q);
        assert_eq!(texts(&gb_extras(q).unwrap(), &vs), vec!["x0*x7*x8 - x2*x4*x9"]);
        let q = p(10, 5, 6);
        let vs = VariableSet::sally(q);
        let t = texts(&gb_extras(q).unwrap(), &vs);
        assert_eq!(t.len(), 4);
        assert!(t.contains(&"x7^3 - x3*x9^2".to_string()), "{t:?}");
    }

    #[test]
    fn warning_only_for_excluded_pair() {
        for e in 10..=12 {
            for q in SallyParams::all_for(e) {
                let f = full_family(q).unwrap();
                assert_eq!(f.warning.is_some(), q.m + 4 == e && q.n + 3 == e, "{q}");
                assert!(f.issues.is_empty(), "{q}: {:?}", f.issues);
            }
        }
    }

    #[test]
    fn base_has_no_duplicates_or_dividing_leads() {
        for e in 10..=12 {
            for q in SallyParams::all_for(e) {
                let f = full_family(q).unwrap();
                let leads: Vec<&Monomial> = f.base.iter().map(|t| t.binomial.lead()).collect();
                for (i, a) in leads.iter().enumerate() {
                    for (j, b) in leads.iter().enumerate() {
                        assert!(i == j || !a.divides(b), "{q}: {} | {}", f.base[i].provenance, f.base[j].provenance);
                    }
                }
            }
        }
    }

    #[test]
    fn small_e_is_constructible() {
        for e in 6..=9 {
            for q in SallyParams::all_for(e) {
                let f = full_family(q).unwrap();
                assert!(f.warning.is_some());
            }
        }
    }

    #[test]
    fn catalog_h2_for_10_2_5() {
        let c = standard_monomial_catalog(p(10, 2, 5));
        // seven x0*x_j plus x3*x8, x6*x8, x1^2, x1*x4
        assert_eq!(c.degree2.len(), 11);
    }
}
