//! Numerical semigroups: minimal generators, membership, Frobenius number
//! and symmetry, plus the Sally-type family `S(e,m,n)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A numerical semigroup given by its minimal generating set.
///
/// The membership table covers `[0, frobenius + max generator]`; every
/// integer beyond the table is a member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    membership: Vec<bool>,
    frobenius: i64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `raw`, discarding redundant
    /// generators.
    pub fn minimalize(raw: &[u64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::InvalidArgument("empty generator list".into()));
        }
        if raw.contains(&0) {
            return Err(Error::InvalidArgument("generators must be positive".into()));
        }
        let g = raw.iter().fold(0, |acc, &a| gcd(acc, a));
        if g != 1 {
            return Err(Error::NotNumericalSemigroup(g));
        }
        let mut sorted = raw.to_vec();
        sorted.sort_unstable();
        sorted.dedup();

        let largest = *sorted.last().unwrap() as usize;
        // reach[k]: k is a combination of the generators accepted so far
        let mut reach = vec![false; largest + 1];
        reach[0] = true;
        let mut generators = Vec::new();
        for &a in &sorted {
            if reach[a as usize] {
                continue;
            }
            generators.push(a);
            let a = a as usize;
            for k in a..=largest {
                if reach[k - a] {
                    reach[k] = true;
                }
            }
        }

        // The Frobenius number is below multiplicity * max generator.
        let bound = (generators[0] * *generators.last().unwrap()) as usize;
        let sieve = sieve(&generators, bound);
        let frobenius = sieve.iter().rposition(|&b| !b).map_or(-1, |f| f as i64);
        let table_len = (frobenius + *generators.last().unwrap() as i64 + 1) as usize;
        let membership = sieve[..table_len.min(sieve.len())].to_vec();
        Ok(NumericalSemigroup {
            generators,
            membership,
            frobenius,
        })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    pub fn width(&self) -> u64 {
        self.generators.last().unwrap() - self.generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn contains(&self, k: i64) -> bool {
        if k < 0 {
            return false;
        }
        if k > self.frobenius {
            return true;
        }
        self.membership[k as usize]
    }

    /// The gaps `N \ S` in increasing order.
    pub fn gaps(&self) -> Vec<i64> {
        (0..=self.frobenius).filter(|&k| !self.contains(k)).collect()
    }

    /// `F(S) - s` lies in `S` for every gap `s`.
    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius;
        (0..=f).all(|s| self.contains(s) != self.contains(f - s))
    }

    /// Symmetry via the gap count: `F` odd and `#gaps = (F + 1) / 2`.
    pub fn is_symmetric_by_gap_count(&self) -> bool {
        let f = self.frobenius;
        if f < 0 {
            return true;
        }
        f % 2 == 1 && self.gaps().len() as i64 == (f + 1) / 2
    }
}

fn sieve(generators: &[u64], bound: usize) -> Vec<bool> {
    let mut reach = vec![false; bound + 1];
    reach[0] = true;
    for &a in generators {
        let a = a as usize;
        for k in a..=bound {
            if reach[k - a] {
                reach[k] = true;
            }
        }
    }
    reach
}

/// Parameters `(e, m, n)` of `S(e,m,n)`, with `e >= 4` and
/// `1 <= m < n <= e - 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SallyParams {
    pub e: u32,
    pub m: u32,
    pub n: u32,
}

impl SallyParams {
    pub fn new(e: u32, m: u32, n: u32) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidParams {
            e,
            m,
            n,
            reason: reason.to_string(),
        };
        if e < 4 {
            return Err(invalid("e must be at least 4"));
        }
        if m < 1 || m >= n {
            return Err(invalid("need 1 <= m < n"));
        }
        if n + 2 > e {
            return Err(invalid("need n <= e - 2"));
        }
        Ok(SallyParams { e, m, n })
    }

    /// All valid parameter triples with the given `e`, ordered by `(m, n)`.
    pub fn all_for(e: u32) -> Vec<SallyParams> {
        let mut out = Vec::new();
        if e < 4 {
            return out;
        }
        for m in 1..e - 2 {
            for n in m + 1..=e - 2 {
                out.push(SallyParams { e, m, n });
            }
        }
        out
    }

    /// Surviving variable indices `{0, ..., e-1} \ {m, n}`, ascending.
    pub fn indices(&self) -> Vec<u32> {
        (0..self.e).filter(|&i| i != self.m && i != self.n).collect()
    }

    pub fn has_index(&self, i: u32) -> bool {
        i < self.e && i != self.m && i != self.n
    }

    /// Generators `e + i` for the surviving indices.
    pub fn generators(&self) -> Vec<u64> {
        self.indices().iter().map(|&i| (self.e + i) as u64).collect()
    }
}

impl std::fmt::Display for SallyParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.e, self.m, self.n)
    }
}

/// `S(e,m,n) = <{e, ..., 2e-1} \ {e+m, e+n}>`.
pub fn sally_semigroup(p: SallyParams) -> NumericalSemigroup {
    let s = NumericalSemigroup::minimalize(&p.generators())
        .expect("Sally-type generators always have gcd 1");
    assert_eq!(s.multiplicity(), p.e as u64);
    assert_eq!(s.width(), (p.e - 1) as u64);
    assert_eq!(s.embedding_dimension(), (p.e - 2) as usize);
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent representability check by bounded enumeration.
    fn representable(gens: &[u64], k: u64) -> bool {
        fn go(gens: &[u64], k: u64) -> bool {
            match gens.split_first() {
                None => k == 0,
                Some((&a, rest)) => (0..=k / a).any(|c| go(rest, k - c * a)),
            }
        }
        go(gens, k)
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let s = NumericalSemigroup::minimalize(&[4, 7, 8, 11]).unwrap();
        assert_eq!(s.generators(), &[4, 7]);
    }

    #[test]
    fn whole_naturals() {
        let s = NumericalSemigroup::minimalize(&[1]).unwrap();
        assert_eq!(s.generators(), &[1]);
        assert_eq!(s.frobenius(), -1);
        assert!(s.is_symmetric());
    }

    #[test]
    fn frobenius_of_two_generators() {
        let s = NumericalSemigroup::minimalize(&[4, 7]).unwrap();
        let brute = (0..4 * 7).rev().find(|&k| !representable(&[4, 7], k)).unwrap();
        assert_eq!(brute, 17);
        assert_eq!(s.frobenius(), 17);
        assert_eq!(s.frobenius(), 4 * 7 - 4 - 7);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            NumericalSemigroup::minimalize(&[4, 6]),
            Err(Error::NotNumericalSemigroup(2))
        ));
        assert!(matches!(
            NumericalSemigroup::minimalize(&[]),
            Err(Error::InvalidArgument(_))
        ));
        assert!(SallyParams::new(3, 1, 2).is_err());
        assert!(SallyParams::new(10, 3, 3).is_err());
        assert!(SallyParams::new(10, 0, 3).is_err());
        assert!(SallyParams::new(10, 3, 9).is_err());
    }

    #[test]
    fn sally_examples() {
        let s = sally_semigroup(SallyParams::new(4, 1, 2).unwrap());
        assert_eq!(s.generators(), &[4, 7]);
        let s = sally_semigroup(SallyParams::new(5, 1, 2).unwrap());
        assert_eq!(s.generators(), &[5, 8, 9]);
        let s = sally_semigroup(SallyParams::new(10, 1, 2).unwrap());
        assert_eq!(s.frobenius(), 22);
    }

    #[test]
    fn symmetry_examples() {
        let s = NumericalSemigroup::minimalize(&[4, 7]).unwrap();
        assert!(s.is_symmetric());
        let s = NumericalSemigroup::minimalize(&[2, 3]).unwrap();
        assert!(s.is_symmetric());
        let s = sally_semigroup(SallyParams::new(10, 1, 4).unwrap());
        assert!(!s.is_symmetric());
    }

    #[test]
    fn sally_invariants_up_to_20() {
        for e in 4..=20 {
            for p in SallyParams::all_for(e) {
                let s = sally_semigroup(p);
                let f = s.frobenius();
                assert!(!s.contains(f));
                for k in 1..=*s.generators().last().unwrap() as i64 {
                    assert!(s.contains(f + k));
                }
                if e <= 12 {
                    assert_eq!(s.is_symmetric(), s.is_symmetric_by_gap_count(), "{p}");
                }
            }
        }
    }

    #[test]
    fn frobenius_for_m_equal_one() {
        for e in 5..=20 {
            for n in 2..=e - 2 {
                let s = sally_semigroup(SallyParams::new(e, 1, n).unwrap());
                let expected = match n {
                    2 => 2 * e + 2,
                    3 => 2 * e + 3,
                    _ => 2 * e + 1,
                };
                assert_eq!(s.frobenius(), expected as i64, "e={e} n={n}");
            }
        }
    }

    #[test]
    fn membership_matches_brute_force() {
        let s = sally_semigroup(SallyParams::new(7, 2, 4).unwrap());
        for k in 0..60u64 {
            assert_eq!(s.contains(k as i64), representable(s.generators(), k), "{k}");
        }
    }
}
