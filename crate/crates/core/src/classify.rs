//! Representation type of Hecke algebras of classical type, decided from
//! Poincare polynomials and the explicit case lists.
//!
//! All divisibility questions "(x - q)^k divides P_W(x)" at a primitive
//! e-th root of unity q are answered exactly through the factored form of
//! the Poincare polynomials: a factor `x^k - 1` contributes one to the
//! multiplicity iff `e | k`, so q is never materialized as a field element.

use crate::exactpoly::{gauss_quotient, IntPoly, PolyError};
use crate::partitions::{bipartitions_of, Partition};
use crate::reptype::RepType;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("rank {rank} is not allowed for family {family}")]
    BadRank { family: char, rank: u64 },
    #[error(
        "e must be at least 2 (q = 1 is the group-algebra case, which this tool does not decide)"
    )]
    BadConfig,
    #[error("{0} is not an e-core for e = {1}")]
    NotACore(Partition, u32),
    #[error("n = {n} is incompatible with the core of size {core} modulo e = {e}")]
    BadWeight { n: u64, core: u64, e: u32 },
    #[error("cannot parse Weyl group spec `{0}`")]
    Parse(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Irreducible classical factors. `A(n)` is the symmetric group on `n`
/// letters (rank n-1 diagram), `B(n)` the hyperoctahedral group, `D(n)`
/// its index-two subgroup with `n >= 4`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Family {
    A,
    B,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::D => 'D',
        }
    }
}

/// A product of irreducible classical Weyl groups.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeylSpec {
    factors: Vec<(Family, u64)>,
}

impl WeylSpec {
    pub fn new(factors: Vec<(Family, u64)>) -> Result<Self, ClassifyError> {
        if factors.is_empty() {
            return Err(ClassifyError::Parse("empty factor list".into()));
        }
        for &(family, rank) in &factors {
            let ok = match family {
                Family::A | Family::B => rank >= 1,
                Family::D => rank >= 4,
            };
            if !ok {
                return Err(ClassifyError::BadRank {
                    family: family.letter(),
                    rank,
                });
            }
        }
        Ok(WeylSpec { factors })
    }

    pub fn single(family: Family, rank: u64) -> Result<Self, ClassifyError> {
        Self::new(vec![(family, rank)])
    }

    pub fn factors(&self) -> &[(Family, u64)] {
        &self.factors
    }

    /// Parses `B4xA3xD5`.
    pub fn parse(text: &str) -> Result<Self, ClassifyError> {
        let mut factors = vec![];
        for part in text.split(['x', 'X']) {
            let part = part.trim();
            let (fam, rank) = part.split_at(1.min(part.len()));
            let family = match fam {
                "A" | "a" => Family::A,
                "B" | "b" => Family::B,
                "D" | "d" => Family::D,
                _ => return Err(ClassifyError::Parse(text.into())),
            };
            let rank: u64 = rank
                .parse()
                .map_err(|_| ClassifyError::Parse(text.into()))?;
            factors.push((family, rank));
        }
        WeylSpec::new(factors)
    }

    /// Exponent lists: each factor's Poincare polynomial is the product of
    /// `(x^k - 1)/(x - 1)` over its list.
    fn exponents(&self) -> Vec<u64> {
        let mut out = vec![];
        for &(family, n) in &self.factors {
            match family {
                Family::A => out.extend(1..=n),
                Family::B => out.extend((1..=n).map(|k| 2 * k)),
                Family::D => {
                    out.push(n);
                    out.extend((1..n).map(|k| 2 * k));
                }
            }
        }
        out
    }
}

impl std::fmt::Display for WeylSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(fam, n)| format!("{}{}", fam.letter(), n))
            .collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// The length generating function, assembled by exact division.
pub fn poincare(w: &WeylSpec) -> IntPoly {
    let x_minus_one = IntPoly::from_i64(&[-1, 1]);
    let mut p = IntPoly::one();
    for k in w.exponents() {
        let factor =
            gauss_quotient(&IntPoly::xn_minus_one(k), &x_minus_one).expect("x - 1 divides x^k - 1");
        p = &p * &factor;
    }
    p
}

/// Multiplicity of the e-th cyclotomic polynomial in the Poincare
/// polynomial: each `x^k - 1` contributes once iff `e | k`. This equals
/// the (x - q)-adic valuation at any primitive e-th root of unity q.
pub fn phi_multiplicity(w: &WeylSpec, e: u32) -> u64 {
    assert!(e >= 2);
    w.exponents().iter().filter(|&&k| k % e as u64 == 0).count() as u64
}

/// The e-th cyclotomic polynomial, by recursive exact division of
/// `x^e - 1` by the lower cyclotomics. Test oracle for
/// [`phi_multiplicity`], exposed for the divisibility cross-checks.
pub fn cyclotomic(e: u64) -> IntPoly {
    assert!(e >= 1);
    let mut p = IntPoly::xn_minus_one(e);
    for d in 1..e {
        if e.is_multiple_of(d) {
            p = p
                .exact_div(&cyclotomic(d))
                .expect("cyclotomic division is exact");
        }
    }
    p
}

/// Type A at rank `n` (the symmetric group on `n` letters) with quantum
/// characteristic `e`.
pub fn rep_type_a(n: u64, e: u32) -> Result<RepType, ClassifyError> {
    if e < 2 {
        return Err(ClassifyError::BadConfig);
    }
    if n < 1 {
        return Err(ClassifyError::BadRank {
            family: 'A',
            rank: n,
        });
    }
    Ok(if n < e as u64 {
        RepType::Semisimple
    } else if n < 2 * e as u64 {
        RepType::Finite
    } else if e == 2 && (n == 4 || n == 5) {
        RepType::Tame
    } else {
        RepType::Wild
    })
}

/// Relation between the two parameters of the rank-n type-B algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QRelation {
    /// The second parameter avoids the q-power line: Morita-reduces to
    /// products of type A factors.
    Separated,
    /// Second parameter `-q^f`, normalized into `0 <= f <= e/2`.
    Related(u32),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TwoParamSpec {
    pub n: u64,
    pub e: u32,
    pub q_relation: QRelation,
}

impl TwoParamSpec {
    pub fn new(n: u64, e: u32, q_relation: QRelation) -> Result<Self, ClassifyError> {
        if e < 2 || n < 1 {
            return Err(ClassifyError::BadConfig);
        }
        let q_relation = match q_relation {
            QRelation::Separated => QRelation::Separated,
            // Fold an arbitrary exponent into the fundamental window.
            QRelation::Related(f) => {
                let f = f % e;
                QRelation::Related(if 2 * f > e { e - f } else { f })
            }
        };
        Ok(TwoParamSpec { n, e, q_relation })
    }
}

/// Semisimplicity certificate for the related-parameter case: when every
/// bipartition of `n` has a residue content shared with no other, every
/// block is a single Specht module and the algebra is semisimple. The
/// converse direction is not claimed; uncertified cases report finite.
fn related_semisimple_certificate(n: u64, e: u32, f: u32) -> bool {
    let mut contents: Vec<Vec<u64>> = bipartitions_of(n)
        .iter()
        .map(|bp| bp.content_multiset(e, f))
        .collect();
    let total = contents.len();
    contents.sort();
    contents.dedup();
    contents.len() == total
}

/// The two-parameter case lists.
pub fn rep_type_two_param(s: &TwoParamSpec) -> RepType {
    let n = s.n;
    let e = s.e as u64;
    match s.q_relation {
        QRelation::Separated => {
            if n < e {
                RepType::Semisimple
            } else if s.e >= 3 {
                if n < 2 * e {
                    RepType::Finite
                } else {
                    RepType::Wild
                }
            } else if n < 4 {
                RepType::Finite
            } else if n == 4 || n == 5 {
                RepType::Tame
            } else {
                RepType::Wild
            }
        }
        QRelation::Related(f) => {
            if s.e >= 3 {
                let bound = e.min(2 * f as u64 + 4).min(2 * e - 2 * f as u64 + 4);
                if n < bound {
                    if related_semisimple_certificate(n, s.e, f) {
                        RepType::Semisimple
                    } else {
                        RepType::Finite
                    }
                } else if f == 0 && (4..e.min(9)).contains(&n) {
                    RepType::Tame
                } else {
                    RepType::Wild
                }
            } else if n == 1 {
                if related_semisimple_certificate(n, s.e, f) {
                    RepType::Semisimple
                } else {
                    RepType::Finite
                }
            } else if n == 2 || (n == 3 && f == 1) {
                RepType::Tame
            } else {
                RepType::Wild
            }
        }
    }
}

/// One-parameter dispatch: type A directly, type B through the parameter
/// relation forced by the parity of `e`, type D by its own case analysis.
pub fn rep_type_one_param(family: Family, n: u64, e: u32) -> Result<RepType, ClassifyError> {
    if e < 2 {
        return Err(ClassifyError::BadConfig);
    }
    match family {
        Family::A => rep_type_a(n, e),
        Family::B => {
            if n < 1 {
                return Err(ClassifyError::BadRank {
                    family: 'B',
                    rank: n,
                });
            }
            let relation = if e % 2 == 1 {
                QRelation::Separated
            } else {
                // -q = q^(e/2 + 1), renormalized into the window.
                QRelation::Related(e / 2 + 1)
            };
            Ok(rep_type_two_param(&TwoParamSpec::new(n, e, relation)?))
        }
        Family::D => {
            if n < 4 {
                return Err(ClassifyError::BadRank {
                    family: 'D',
                    rank: n,
                });
            }
            let spec = WeylSpec::single(Family::D, n)?;
            let semisimple = phi_multiplicity(&spec, e) == 0;
            Ok(if semisimple {
                RepType::Semisimple
            } else if e % 2 == 1 {
                if n < 2 * e as u64 {
                    RepType::Finite
                } else {
                    RepType::Wild
                }
            } else if e == 2 {
                RepType::Wild
            } else if n < e as u64 {
                RepType::Finite
            } else {
                RepType::Wild
            })
        }
    }
}

/// The general Poincare-polynomial rule: with `m` the multiplicity of the
/// e-th cyclotomic factor, the algebra is semisimple for `m = 0`, finite
/// for `m <= 1`, tame exactly at `e = 2, m = 2`, and wild beyond.
pub fn rep_type_general(w: &WeylSpec, e: u32) -> Result<RepType, ClassifyError> {
    if e < 2 {
        return Err(ClassifyError::BadConfig);
    }
    let m = phi_multiplicity(w, e);
    Ok(match (e, m) {
        (_, 0) => RepType::Semisimple,
        (_, 1) => RepType::Finite,
        (2, 2) => RepType::Tame,
        _ => RepType::Wild,
    })
}

/// Names of the decision rules backing a verdict, for machine-readable
/// output.
pub fn rule_citations(two_param: Option<&TwoParamSpec>) -> Vec<&'static str> {
    match two_param {
        None => vec!["poincare-divisibility"],
        Some(s) => match s.q_relation {
            QRelation::Separated => vec!["separated-parameters", "type-a-block-weights"],
            QRelation::Related(_) => vec!["related-parameters"],
        },
    }
}

/// Block-level classification in type A by the weight of the block's core.
pub fn block_rep_type_a(core: &Partition, n: u64, e: u32) -> Result<RepType, ClassifyError> {
    if e < 2 {
        return Err(ClassifyError::BadConfig);
    }
    let (k, w) = core.e_core_and_weight(e);
    if k != *core {
        return Err(ClassifyError::NotACore(core.clone(), e));
    }
    let _ = w;
    if n < core.size() || !(n - core.size()).is_multiple_of(e as u64) {
        return Err(ClassifyError::BadWeight {
            n,
            core: core.size(),
            e,
        });
    }
    let weight = (n - core.size()) / e as u64;
    Ok(if weight == 0 {
        RepType::Semisimple
    } else if weight == 1 {
        RepType::Finite
    } else if e == 2 && weight == 2 {
        RepType::Tame
    } else {
        RepType::Wild
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn spec(s: &str) -> WeylSpec {
        WeylSpec::parse(s).unwrap()
    }

    #[test]
    fn poincare_small_groups() {
        assert_eq!(poincare(&spec("A2")), IntPoly::from_i64(&[1, 1]));
        assert_eq!(poincare(&spec("B2")), IntPoly::from_i64(&[1, 2, 2, 2, 1]));
        let squared = poincare(&spec("A2xA2"));
        assert_eq!(squared, IntPoly::from_i64(&[1, 2, 1]));
        // Coefficient sums are group orders.
        assert_eq!(poincare(&spec("A4")).eval_one(), BigInt::from(24));
        assert_eq!(poincare(&spec("B3")).eval_one(), BigInt::from(48));
        assert_eq!(poincare(&spec("D4")).eval_one(), BigInt::from(192));
    }

    #[test]
    fn phi_multiplicity_against_polynomial_division() {
        for e in 2u32..=8 {
            let phi = cyclotomic(e as u64);
            for text in [
                "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10", "B1", "B2", "B3",
                "B4", "B5", "B6", "D4", "D5", "D6", "A2xA2", "B2xA3", "D4xB2", "A3xA3xA2",
            ] {
                let w = spec(text);
                let mut p = poincare(&w);
                let mut count = 0u64;
                while let Ok(q) = p.exact_div(&phi) {
                    count += 1;
                    p = q;
                }
                assert_eq!(phi_multiplicity(&w, e), count, "{text} at e = {e}");
            }
        }
    }

    #[test]
    fn phi_multiplicity_closed_forms() {
        assert_eq!(phi_multiplicity(&spec("A4"), 2), 2);
        for n in 1..=10u64 {
            for e in 2..=8u32 {
                assert_eq!(phi_multiplicity(&spec(&format!("A{n}")), e), n / e as u64);
            }
        }
        // Odd e in type B: multiplicity at least 2 iff n >= 2e.
        for e in [3u32, 5, 7] {
            for n in 1..=20u64 {
                let m = phi_multiplicity(&spec(&format!("B{n}")), e);
                assert_eq!(m >= 2, n >= 2 * e as u64, "B{n} at e = {e}");
            }
        }
        // Multiplicativity over factors.
        for e in 2..=8u32 {
            let combined = phi_multiplicity(&spec("B4xA3xD5"), e);
            let parts = phi_multiplicity(&spec("B4"), e)
                + phi_multiplicity(&spec("A3"), e)
                + phi_multiplicity(&spec("D5"), e);
            assert_eq!(combined, parts);
        }
    }

    #[test]
    fn rep_type_a_examples() {
        assert_eq!(rep_type_a(4, 2).unwrap(), RepType::Tame);
        assert_eq!(rep_type_a(5, 3).unwrap(), RepType::Finite);
        assert_eq!(rep_type_a(6, 2).unwrap(), RepType::Wild);
        assert_eq!(rep_type_a(2, 3).unwrap(), RepType::Semisimple);
    }

    #[test]
    fn two_param_examples() {
        let t = |n, e, rel| rep_type_two_param(&TwoParamSpec::new(n, e, rel).unwrap());
        assert_eq!(t(5, 3, QRelation::Separated), RepType::Finite);
        assert_eq!(t(5, 7, QRelation::Related(0)), RepType::Tame);
        assert_eq!(t(3, 2, QRelation::Related(1)), RepType::Tame);
        assert_eq!(t(2, 5, QRelation::Related(2)), RepType::Semisimple);
        assert_eq!(t(1, 2, QRelation::Related(0)), RepType::Finite);
        assert_eq!(t(1, 2, QRelation::Related(1)), RepType::Semisimple);
        assert_eq!(t(4, 2, QRelation::Separated), RepType::Tame);
        assert_eq!(t(6, 2, QRelation::Separated), RepType::Wild);
        // The window renormalization folds f into 0..=e/2.
        let s = TwoParamSpec::new(3, 6, QRelation::Related(4)).unwrap();
        assert_eq!(s.q_relation, QRelation::Related(2));
    }

    #[test]
    fn one_param_examples() {
        assert_eq!(rep_type_one_param(Family::D, 4, 2).unwrap(), RepType::Wild);
        assert_eq!(rep_type_one_param(Family::B, 2, 2).unwrap(), RepType::Tame);
        // Finite per the n < 2e clause, and in fact semisimple: no factor
        // of the Poincare polynomial vanishes at a primitive 7th root.
        let d5 = rep_type_one_param(Family::D, 5, 7).unwrap();
        assert_eq!(d5.trichotomy(), RepType::Finite);
        assert_eq!(d5, RepType::Semisimple);
        assert_eq!(
            rep_type_one_param(Family::D, 3, 2),
            Err(ClassifyError::BadRank {
                family: 'D',
                rank: 3
            })
        );
    }

    #[test]
    fn general_examples() {
        assert_eq!(
            rep_type_general(&spec("A2xA2xA2"), 2).unwrap(),
            RepType::Wild
        );
        assert_eq!(rep_type_general(&spec("B2"), 2).unwrap(), RepType::Tame);
        assert_eq!(rep_type_general(&spec("A4"), 3).unwrap(), RepType::Finite);
        assert_eq!(
            rep_type_general(&spec("A2"), 5).unwrap(),
            RepType::Semisimple
        );
    }

    #[test]
    fn general_agrees_with_one_param_on_single_factors() {
        for e in 2u32..=8 {
            for n in 1..=12u64 {
                for family in [Family::A, Family::B, Family::D] {
                    if family == Family::D && n < 4 {
                        continue;
                    }
                    let w = WeylSpec::single(family, n).unwrap();
                    let lhs = rep_type_general(&w, e).unwrap();
                    let rhs = rep_type_one_param(family, n, e).unwrap();
                    assert_eq!(lhs, rhs, "{family:?} n = {n}, e = {e}");
                }
            }
        }
    }

    #[test]
    fn wild_is_monotone_in_rank() {
        for e in 2u32..=8 {
            for family in [Family::A, Family::B, Family::D] {
                let mut seen_wild = false;
                let lo = if family == Family::D { 4 } else { 1 };
                for n in lo..=20u64 {
                    let t = rep_type_one_param(family, n, e).unwrap();
                    if seen_wild {
                        assert_eq!(t, RepType::Wild, "{family:?} n = {n}, e = {e}");
                    }
                    seen_wild |= t == RepType::Wild;
                }
            }
        }
    }

    #[test]
    fn no_tame_beyond_e_two_in_one_param() {
        // The two-parameter tame windows need f = 0, which the
        // one-parameter specializations only reach at e = 2.
        for e in 3u32..=8 {
            for family in [Family::A, Family::B, Family::D] {
                let lo = if family == Family::D { 4 } else { 1 };
                for n in lo..=20u64 {
                    assert_ne!(rep_type_one_param(family, n, e).unwrap(), RepType::Tame);
                }
            }
        }
    }

    #[test]
    fn block_rep_type_examples() {
        assert_eq!(
            block_rep_type_a(&Partition::empty(), 4, 2).unwrap(),
            RepType::Tame
        );
        let one = Partition::new(vec![1]).unwrap();
        assert_eq!(block_rep_type_a(&one, 5, 2).unwrap(), RepType::Tame);
        assert_eq!(block_rep_type_a(&one, 1, 2).unwrap(), RepType::Semisimple);
        assert_eq!(block_rep_type_a(&one, 3, 2).unwrap(), RepType::Finite);
        // (2,1) is a 2-core but (2) is not.
        let two = Partition::new(vec![2]).unwrap();
        assert_eq!(
            block_rep_type_a(&two, 4, 2),
            Err(ClassifyError::NotACore(two, 2))
        );
        let core21 = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(
            block_rep_type_a(&core21, 4, 2),
            Err(ClassifyError::BadWeight {
                n: 4,
                core: 3,
                e: 2
            })
        );
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(spec("B4xA3xD5").to_string(), "B4xA3xD5");
        assert!(WeylSpec::parse("Q3").is_err());
        assert!(WeylSpec::parse("D3").is_err());
        assert!(WeylSpec::parse("").is_err());
    }
}
