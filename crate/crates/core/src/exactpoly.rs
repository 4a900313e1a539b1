//! Exact integer-coefficient polynomial arithmetic.
//!
//! [`LaurentPoly`] is a sparse Laurent polynomial in the indeterminate `v`
//! with `BigInt` coefficients; it carries the coefficients of Fock-space
//! vectors and canonical basis elements. [`IntPoly`] is a dense ordinary
//! polynomial used for Poincare polynomials, where exact quotients of
//! products of `x^k - 1` are the only division that ever happens.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("division leaves a nonzero remainder")]
    NonExactDivision,
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// Sparse Laurent polynomial over the integers, kept in canonical form:
/// no zero coefficients are stored, so equality is map equality.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, BigInt::one())
    }

    /// `c * v^k`, dropping the term if `c == 0`.
    pub fn monomial(exp: i64, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    /// `v^k`.
    pub fn v_power(exp: i64) -> Self {
        Self::monomial(exp, BigInt::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(0, BigInt::from(n))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn insert_add(&mut self, exp: i64, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// The substitution `v -> v^-1`; an involution and a ring homomorphism.
    pub fn bar(&self) -> Self {
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            out.terms.insert(-e, c.clone());
        }
        out
    }

    /// Sum of all coefficients, i.e. the evaluation at `v = 1`.
    pub fn eval_one(&self) -> BigInt {
        let mut s = BigInt::zero();
        for c in self.terms.values() {
            s += c;
        }
        s
    }

    pub fn shifted(&self, by: i64) -> Self {
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            out.terms.insert(e + by, c.clone());
        }
        out
    }

    /// True when every monomial has strictly positive exponent.
    pub fn in_v_times_zv(&self) -> bool {
        self.terms.keys().all(|e| *e > 0)
    }

    /// The bar-symmetric part that must be cancelled when reducing a
    /// coefficient into `v Z[v]`: the constant term plus, for every
    /// negative-exponent term `c v^-k`, the symmetric pair `c (v^k + v^-k)`.
    pub fn bar_symmetric_excess(&self) -> Self {
        let mut out = LaurentPoly::monomial(0, self.coeff(0));
        for (e, c) in &self.terms {
            if *e < 0 {
                out.insert_add(*e, c);
                out.insert_add(-e, c);
            }
        }
        out
    }

    /// Exact division, defined when `den` divides `self` in `Z[v, v^-1]`.
    pub fn exact_div(&self, den: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
        if den.is_zero() {
            return Err(PolyError::NonExactDivision);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        // Shift both to ordinary polynomials and divide; the unit v^k is
        // restored at the end.
        let a_shift = self.min_exp().unwrap();
        let b_shift = den.min_exp().unwrap();
        let num = IntPoly::from_laurent_shifted(self, a_shift);
        let div = IntPoly::from_laurent_shifted(den, b_shift);
        let q = num.exact_div(&div)?;
        Ok(q.to_laurent().shifted(a_shift - b_shift))
    }

    /// The balanced quantum integer `[k] = v^{k-1} + v^{k-3} + ... + v^{1-k}`.
    pub fn quantum_int(k: u64) -> Self {
        let mut out = LaurentPoly::zero();
        let k = k as i64;
        let mut e = 1 - k;
        while e < k {
            out.terms.insert(e, BigInt::one());
            e += 2;
        }
        out
    }

    /// `[m]! = [1][2]...[m]`.
    pub fn quantum_factorial(m: u64) -> Self {
        let mut out = LaurentPoly::one();
        for k in 1..=m {
            out = &out * &Self::quantum_int(k);
        }
        out
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(*e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            let neg = -c.clone();
            out.insert_add(*e, &neg);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            out.terms.insert(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let prod = c1 * c2;
                out.insert_add(e1 + e2, &prod);
            }
        }
        out
    }
}

/// Rendering follows the `a_k*v^k` grammar with ascending exponents,
/// e.g. `1 + 2v + v^2`, `v^-1 + -v`. The parser accepts exactly this.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let unit_coeff = c.magnitude().is_one();
            let sign = if c.is_negative() { "-" } else { "" };
            match (*e, unit_coeff) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "{sign}v")?,
                (1, false) => write!(f, "{c}v")?,
                (_, true) => write!(f, "{sign}v^{e}")?,
                (_, false) => write!(f, "{c}v^{e}")?,
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for LaurentPoly {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, PolyError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(PolyError::Parse("empty input".into()));
        }
        if s == "0" {
            return Ok(LaurentPoly::zero());
        }
        let mut out = LaurentPoly::zero();
        for term in s.split(" + ") {
            let term = term.trim();
            let (coeff_str, exp): (&str, i64) = match term.find('v') {
                None => (term, 0),
                Some(pos) => {
                    let head = &term[..pos];
                    let tail = &term[pos + 1..];
                    let exp = if tail.is_empty() {
                        1
                    } else if let Some(e) = tail.strip_prefix('^') {
                        e.parse::<i64>()
                            .map_err(|_| PolyError::Parse(format!("bad exponent in `{term}`")))?
                    } else {
                        return Err(PolyError::Parse(format!("bad term `{term}`")));
                    };
                    (head, exp)
                }
            };
            let coeff_str = coeff_str.trim_end_matches('*');
            let coeff: BigInt = match coeff_str {
                "" => BigInt::one(),
                "-" => -BigInt::one(),
                _ => coeff_str
                    .parse()
                    .map_err(|_| PolyError::Parse(format!("bad coefficient in `{term}`")))?,
            };
            out.insert_add(exp, &coeff);
        }
        Ok(out)
    }
}

/// Dense integer polynomial with `coeffs[k]` the coefficient of `x^k`;
/// the top coefficient is nonzero unless the polynomial is zero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly::from_coeffs(vec![BigInt::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x^n - 1`.
    pub fn xn_minus_one(n: u64) -> Self {
        let mut coeffs = vec![BigInt::zero(); n as usize + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n as usize] = BigInt::one();
        Self::from_coeffs(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    fn from_laurent_shifted(p: &LaurentPoly, shift: i64) -> Self {
        let mut coeffs = vec![];
        for (e, c) in p.terms() {
            let idx = (e - shift) as usize;
            if coeffs.len() <= idx {
                coeffs.resize(idx + 1, BigInt::zero());
            }
            coeffs[idx] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    fn to_laurent(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.insert_add(k as i64, c);
            }
        }
        out
    }

    /// Exact quotient; errs with [`PolyError::NonExactDivision`] when the
    /// remainder is nonzero or a leading-coefficient division fails over `Z`.
    pub fn exact_div(&self, den: &IntPoly) -> Result<IntPoly, PolyError> {
        if den.is_zero() {
            return Err(PolyError::NonExactDivision);
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let dd = den.degree().unwrap();
        let lead = den.coeffs.last().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() < den.coeffs.len() {
            return Err(PolyError::NonExactDivision);
        }
        let qdeg = rem.len() - den.coeffs.len();
        let mut q = vec![BigInt::zero(); qdeg + 1];
        for k in (0..=qdeg).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (qc, r) = num_integer::div_rem(top, lead.clone());
            if !r.is_zero() {
                return Err(PolyError::NonExactDivision);
            }
            for (j, dc) in den.coeffs.iter().enumerate() {
                let sub = dc * &qc;
                rem[k + j] -= sub;
            }
            q[k] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::NonExactDivision);
        }
        Ok(IntPoly::from_coeffs(q))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let unit = c.magnitude().is_one();
            let sign = if c.is_negative() { "-" } else { "" };
            match (k, unit) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "{sign}x")?,
                (1, false) => write!(f, "{c}x")?,
                (_, true) => write!(f, "{sign}x^{k}")?,
                (_, false) => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Exact polynomial quotient used to assemble Poincare polynomials from
/// products of `(x^k - 1)/(x - 1)` factors.
pub fn gauss_quotient(num: &IntPoly, den: &IntPoly) -> Result<IntPoly, PolyError> {
    num.exact_div(den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(&lp("v") + &lp("v^-1"), lp("v^-1 + v"));
        assert_eq!(&lp("1 + v") + &lp("-v"), lp("1"));
        assert_eq!(&lp("2v^2") + &lp("3v^2"), lp("5v^2"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&lp("1 + v") * &lp("1 + v"), lp("1 + 2v + v^2"));
        assert_eq!(&lp("v") * &lp("v^-1"), LaurentPoly::one());
        assert_eq!(&lp("1 + 5v^3") * &LaurentPoly::zero(), LaurentPoly::zero());
    }

    #[test]
    fn bar_examples() {
        assert_eq!(lp("v").bar(), lp("v^-1"));
        assert_eq!(lp("1 + 2v").bar(), lp("1 + 2v^-1"));
    }

    #[test]
    fn eval_one_examples() {
        assert_eq!(lp("1 + v + v^2").eval_one(), BigInt::from(3));
        assert_eq!(lp("v^-1 + -v").eval_one(), BigInt::zero());
        assert_eq!(LaurentPoly::zero().eval_one(), BigInt::zero());
    }

    #[test]
    fn gauss_quotient_examples() {
        let q = gauss_quotient(
            &IntPoly::from_i64(&[-1, 0, 1]),
            &IntPoly::from_i64(&[-1, 1]),
        );
        assert_eq!(q.unwrap(), IntPoly::from_i64(&[1, 1]));
        let q = gauss_quotient(&IntPoly::xn_minus_one(4), &IntPoly::from_i64(&[-1, 1]));
        assert_eq!(q.unwrap(), IntPoly::from_i64(&[1, 1, 1, 1]));
        let q = gauss_quotient(&IntPoly::xn_minus_one(3), &IntPoly::from_i64(&[-2, 1]));
        assert_eq!(q, Err(PolyError::NonExactDivision));
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(LaurentPoly::quantum_int(2), lp("v^-1 + v"));
        assert_eq!(LaurentPoly::quantum_int(1), lp("1"));
        assert_eq!(
            LaurentPoly::quantum_factorial(3),
            &lp("v^-1 + v") * &lp("v^-2 + 1 + v^2")
        );
    }

    #[test]
    fn display_round_trip_edge_cases() {
        for s in [
            "0",
            "1",
            "-1",
            "v",
            "-v",
            "v^-1 + -v",
            "1 + 2v + v^2",
            "-3v^-2 + 7",
        ] {
            let p = lp(s);
            assert_eq!(lp(&p.to_string()), p);
        }
    }

    fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-6i64..7, -9i64..10), 0..6).prop_map(|terms| {
            let mut p = LaurentPoly::zero();
            for (e, c) in terms {
                p.insert_add(e, &BigInt::from(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn bar_is_ring_hom_and_involution(a in arb_laurent(), b in arb_laurent()) {
            prop_assert_eq!(a.bar().bar(), a.clone());
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
            prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
        }

        #[test]
        fn eval_one_is_multiplicative(a in arb_laurent(), b in arb_laurent()) {
            prop_assert_eq!((&a * &b).eval_one(), a.eval_one() * b.eval_one());
        }

        #[test]
        fn display_round_trips(a in arb_laurent()) {
            let s = a.to_string();
            prop_assert_eq!(s.parse::<LaurentPoly>().unwrap(), a);
        }

        #[test]
        fn exact_div_inverts_mul(a in arb_laurent(), b in arb_laurent()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
        }
    }
}
