//! Exact coefficient arithmetic: integer Laurent polynomials in the formal
//! parameter `q`, and the group ring of a cocharacter lattice used by
//! character computations.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A finitely supported map from integer exponents to integers: an element
/// of `Z[q^{±1}]`. No zero coefficients are ever stored.
#[derive(Clone, PartialEq, Eq, Default, PartialOrd, Ord, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    /// The class of the parameter itself, `q`.
    pub fn q() -> Self {
        LaurentPoly::monomial(1, 1)
    }

    pub fn q_pow(exp: i64) -> Self {
        LaurentPoly::monomial(exp, 1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        LaurentPoly::monomial(0, c)
    }

    pub fn monomial<T: Into<BigInt>>(exp: i64, c: T) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        LaurentPoly { coeffs }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// duplicates and dropping zeros.
    pub fn from_pairs<T: Into<BigInt>>(pairs: impl IntoIterator<Item = (i64, T)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in pairs {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(0).is_one()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterates terms in ascending exponent order (the canonical order).
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Multiplies by the monomial `c·q^exp` in place.
    pub fn shift_scale<T: Into<BigInt>>(&self, exp: i64, c: T) -> Self {
        let c = c.into();
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, k)| (*e + exp, k * &c))
                .collect(),
        }
    }

    /// Exact division in `Z[q^{±1}]`: returns `c` with `self = other · c`,
    /// or `NotDivisible`.
    pub fn divide_exact(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::NotDivisible("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        // Long division from the top exponent. Laurent units q^k are
        // invertible, so only the polynomial part can obstruct.
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        let lead_exp = other.max_exp().unwrap();
        let lead_coeff = other.coeff(lead_exp);
        while !rem.is_zero() {
            let re = rem.max_exp().unwrap();
            let rc = rem.coeff(re);
            let (d, m) = num_integer_div_rem(&rc, &lead_coeff);
            if !m.is_zero() {
                return Err(Error::NotDivisible(format!(
                    "leading coefficient {} does not divide {}",
                    lead_coeff, rc
                )));
            }
            let step = LaurentPoly::monomial(re - lead_exp, d);
            rem = rem.sub(&step.mul(other));
            quot = quot.add(&step);
            if let Some(new_max) = rem.max_exp() {
                if new_max >= re {
                    return Err(Error::NotDivisible("division does not terminate".into()));
                }
            }
        }
        Ok(quot)
    }

    /// True iff all exponents are nonnegative, i.e. the element lies in `Z[q]`.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().map_or(true, |e| e >= 0)
    }

    /// Evaluates at an integer value of `q`. A ring homomorphism `Z[q^{±1}] → Q`
    /// restricted to inputs where it lands in `Z`; for `q0 = 0` negative
    /// exponents are rejected.
    pub fn eval(&self, q0: i64) -> Result<BigInt> {
        let q0 = BigInt::from(q0);
        let mut acc = BigInt::zero();
        for (e, c) in self.terms() {
            if e >= 0 {
                acc += c * q0.pow(e as u32);
            } else {
                // q0^e with e < 0 must be exact over Z: only q0 = ±1 qualifies.
                let pow = q0.pow((-e) as u32);
                if pow.is_zero() {
                    return Err(Error::NotDivisible(
                        "cannot evaluate negative exponent at q=0".into(),
                    ));
                }
                let (d, m) = num_integer_div_rem(c, &pow);
                if !m.is_zero() {
                    return Err(Error::NotDivisible(format!(
                        "evaluation of q^{} term at q={} is not integral",
                        e, q0
                    )));
                }
                acc += d;
            }
        }
        Ok(acc)
    }
}

/// Truncated division with remainder, sign-agnostic exactness check.
fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    let d = a / b;
    let m = a - &d * b;
    (d, m)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one();
            match (e, unit_coeff) {
                (0, _) => write!(f, "{}", mag)?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{}*q", mag)?,
                (_, true) => write!(f, "q^{}", e)?,
                (_, false) => write!(f, "{}*q^{}", mag, e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An element of the group ring `Z[X_*(T)]`: a finitely supported map from
/// lattice vectors to integers. Multiplication is convolution over lattice
/// addition. Keys are ordered lexicographically, which is a total group
/// order on `Z^n`; the maximal key is the leading term used by division.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GroupRingElement {
    coeffs: BTreeMap<Vec<i64>, BigInt>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        GroupRingElement::default()
    }

    pub fn basis(v: Vec<i64>) -> Self {
        GroupRingElement::term(v, 1)
    }

    pub fn term<T: Into<BigInt>>(v: Vec<i64>, c: T) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(v, c);
        }
        GroupRingElement { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, v: &[i64]) -> BigInt {
        self.coeffs.get(v).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add_term(&mut self, v: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(v) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (v, c) in other.terms() {
            out.add_term(v.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (v, c) in other.terms() {
            out.add_term(v.clone(), -c.clone());
        }
        out
    }

    pub fn scale<T: Into<BigInt>>(&self, c: T) -> Self {
        let c = c.into();
        if c.is_zero() {
            return GroupRingElement::zero();
        }
        GroupRingElement {
            coeffs: self
                .coeffs
                .iter()
                .map(|(v, k)| (v.clone(), k * &c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = GroupRingElement::zero();
        for (v1, c1) in self.terms() {
            for (v2, c2) in other.terms() {
                let sum: Vec<i64> = v1.iter().zip(v2).map(|(a, b)| a + b).collect();
                out.add_term(sum, c1 * c2);
            }
        }
        out
    }

    /// Applies a map to every exponent vector (e.g. a Weyl group matrix).
    pub fn map_support(&self, f: impl Fn(&[i64]) -> Vec<i64>) -> Self {
        let mut out = GroupRingElement::zero();
        for (v, c) in self.terms() {
            out.add_term(f(v), c.clone());
        }
        out
    }

    fn leading(&self) -> Option<(&Vec<i64>, &BigInt)> {
        self.coeffs.iter().next_back()
    }

    /// Exact division: returns `c` with `self = other · c`, or `NotDivisible`.
    /// Uses lexicographic leading terms; terminates because each step strictly
    /// lowers the leading term, and errs out past an iteration cap so an
    /// upstream mistake cannot hang.
    pub fn divide_exact(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::NotDivisible("group ring division by zero".into()));
        }
        let (lv, lc) = other.leading().unwrap();
        let lv = lv.clone();
        let lc = lc.clone();
        let mut rem = self.clone();
        let mut quot = GroupRingElement::zero();
        let cap = 1_000_000usize;
        for _ in 0..cap {
            if rem.is_zero() {
                return Ok(quot);
            }
            let (rv, rc) = rem.leading().unwrap();
            let step_v: Vec<i64> = rv.iter().zip(&lv).map(|(a, b)| a - b).collect();
            let (d, m) = num_integer_div_rem(rc, &lc);
            if m != BigInt::zero() {
                return Err(Error::NotDivisible(
                    "group ring leading coefficient does not divide".into(),
                ));
            }
            let step = GroupRingElement::term(step_v, d);
            rem = rem.sub(&step.mul(other));
            quot = quot.add(&step);
        }
        Err(Error::NotDivisible(
            "group ring division exceeded iteration cap".into(),
        ))
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (v, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*e{:?}", c, v)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn monomial_inverse_cancels() {
        let p = LaurentPoly::q().mul(&LaurentPoly::q_pow(-1));
        assert!(p.is_one());
    }

    #[test]
    fn square_of_q_minus_one() {
        let qm1 = LaurentPoly::q().sub(&LaurentPoly::one());
        let sq = qm1.mul(&qm1);
        assert_eq!(sq, LaurentPoly::from_pairs(vec![(2, 1), (1, -2), (0, 1)]));
    }

    #[test]
    fn poincare_product() {
        let a = LaurentPoly::from_pairs(vec![(0, 1), (1, 1)]);
        let b = LaurentPoly::from_pairs(vec![(0, 1), (1, 1), (2, 1)]);
        let ab = a.mul(&b);
        assert_eq!(
            ab,
            LaurentPoly::from_pairs(vec![(0, 1), (1, 2), (2, 2), (3, 1)])
        );
    }

    #[test]
    fn divide_exact_polynomial() {
        let num = LaurentPoly::from_pairs(vec![(2, 1), (0, -1)]); // q^2 - 1
        let den = LaurentPoly::from_pairs(vec![(1, 1), (0, -1)]); // q - 1
        let q = num.divide_exact(&den).unwrap();
        assert_eq!(q, LaurentPoly::from_pairs(vec![(1, 1), (0, 1)]));
    }

    #[test]
    fn divide_exact_laurent_semantics() {
        // (q+1)/q is exact over Laurent polynomials: 1 + q^{-1}.
        let num = LaurentPoly::from_pairs(vec![(1, 1), (0, 1)]);
        let den = LaurentPoly::q();
        let q = num.divide_exact(&den).unwrap();
        assert_eq!(q, LaurentPoly::from_pairs(vec![(0, 1), (-1, 1)]));
        assert!(!q.is_polynomial());
    }

    #[test]
    fn divide_zero_numerator() {
        let z = LaurentPoly::zero().divide_exact(&LaurentPoly::q()).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn divide_rejects_inexact() {
        let num = LaurentPoly::from_pairs(vec![(1, 1), (0, 1)]); // q + 1
        let den = LaurentPoly::from_pairs(vec![(1, 1), (0, 1), (-1, 1)]);
        assert!(num.divide_exact(&den).is_err());
    }

    #[test]
    fn is_polynomial_flags() {
        assert!(LaurentPoly::from_pairs(vec![(1, 1), (0, 1)]).is_polynomial());
        assert!(!LaurentPoly::q_pow(-1).is_polynomial());
        assert!(LaurentPoly::zero().is_polynomial());
    }

    #[test]
    fn eval_examples() {
        let p = LaurentPoly::from_pairs(vec![(1, 1), (0, 1)]);
        assert_eq!(p.eval(2).unwrap(), BigInt::from(3));
        assert_eq!(p.eval(1).unwrap(), BigInt::from(2));
        assert_eq!(LaurentPoly::zero().eval(7).unwrap(), BigInt::from(0));
    }

    #[test]
    fn group_ring_basis_products() {
        let a = GroupRingElement::basis(vec![1, 0]);
        let b = GroupRingElement::basis(vec![0, -2]);
        assert_eq!(a.mul(&b), GroupRingElement::basis(vec![1, -2]));
    }

    #[test]
    fn group_ring_divide() {
        // (e^2 - e^-2) / (e^1 - e^-1) = e^1 + e^-1 in rank one.
        let num = GroupRingElement::basis(vec![2]).sub(&GroupRingElement::basis(vec![-2]));
        let den = GroupRingElement::basis(vec![1]).sub(&GroupRingElement::basis(vec![-1]));
        let q = num.divide_exact(&den).unwrap();
        assert_eq!(
            q,
            GroupRingElement::basis(vec![1]).add(&GroupRingElement::basis(vec![-1]))
        );
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-6i64..=6, -9i64..=9), 0..6)
            .prop_map(LaurentPoly::from_pairs)
    }

    proptest! {
        #[test]
        fn eval_is_ring_hom(a in arb_poly(), b in arb_poly(), q0 in 1i64..=5) {
            let lhs = a.mul(&b).eval(q0).unwrap();
            let rhs = a.eval(q0).unwrap() * b.eval(q0).unwrap();
            prop_assert_eq!(lhs, rhs);
            let lhs = a.add(&b).eval(q0).unwrap();
            let rhs = a.eval(q0).unwrap() + b.eval(q0).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn divide_undoes_multiply(b in arb_poly(), c in arb_poly()) {
            prop_assume!(!b.is_zero());
            let prod = b.mul(&c);
            let back = prod.divide_exact(&b).unwrap();
            prop_assert_eq!(back, c);
        }

        #[test]
        fn mul_commutes_and_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }
    }
}
