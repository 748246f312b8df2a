//! Exact univariate polynomials over the integers and the rationals.
//!
//! Coefficients are stored lowest degree first and kept normalized: no
//! trailing zeros, so the zero polynomial has an empty coefficient vector.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// A polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_i64s(&[1])
    }

    /// `x`
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `p(-x)`
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn to_rational(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Space-separated decimal coefficients, lowest degree first.
    pub fn render(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self.coeffs.iter().map(BigInt::to_string).collect();
        parts.join(" ")
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly[{}]", self.render())
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// A polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "RatPoly[{}]", parts.join(" "))
    }
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Scales to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lead) => Self::new(self.coeffs.iter().map(|c| c / lead).collect()),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let lead = divisor.leading().expect("division by zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::default(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + dd];
            if top.is_zero() {
                continue;
            }
            let factor = top / lead;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &factor * d;
            }
            quot[shift] = factor;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Square-free decomposition by Yun's algorithm.
    ///
    /// Returns monic `(factor, multiplicity)` pairs with pairwise coprime,
    /// square-free factors such that `self` is a scalar multiple of the
    /// product of `factor^multiplicity`. Constant factors are omitted.
    pub fn square_free_decomposition(&self) -> Vec<(RatPoly, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0);
        let mut c = df.exact_div(&a0);
        let mut d = &c - &b.derivative();
        let mut multiplicity = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), multiplicity));
            }
            b = b.exact_div(&a);
            c = d.exact_div(&a);
            d = &c - &b.derivative();
            multiplicity += 1;
        }
        out
    }

    /// The monic square-free part: product of the distinct irreducible factors.
    pub fn square_free_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        self.exact_div(&self.gcd(&self.derivative())).monic()
    }
}

impl<'a> Sub<&'a RatPoly> for &'a RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigRational::zero();
        RatPoly::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) - rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

/// A Sturm chain `p0, p1 = p0', p_{k+1} = -rem(p_{k-1}, p_k)` of a
/// square-free polynomial.
#[derive(Debug, Clone)]
pub struct SturmSequence {
    chain: Vec<RatPoly>,
}

impl SturmSequence {
    /// Builds the chain on the square-free part of `p`.
    pub fn new(p: &RatPoly) -> Self {
        let p0 = p.square_free_part();
        let mut chain = vec![p0.clone()];
        let p1 = p0.derivative();
        if !p1.is_zero() {
            chain.push(p1);
            loop {
                let len = chain.len();
                let (_, r) = chain[len - 2].div_rem(&chain[len - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(RatPoly::new(r.coeffs.iter().map(|c| -c).collect()));
            }
        }
        Self { chain }
    }

    /// Sign changes along the chain at `x`, skipping zeros.
    pub fn variations(&self, x: &BigRational) -> usize {
        let mut last: Option<bool> = None;
        let mut count = 0;
        for p in &self.chain {
            let v = p.eval(x);
            if v.is_zero() {
                continue;
            }
            let positive = v.is_positive();
            if last.is_some_and(|l| l != positive) {
                count += 1;
            }
            last = Some(positive);
        }
        count
    }

    /// Distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_in(&self, lo: &BigRational, hi: &BigRational) -> usize {
        if lo >= hi || self.chain[0].degree().unwrap_or(0) == 0 {
            return 0;
        }
        self.variations(lo) - self.variations(hi)
    }
}

/// Distinct real roots of `p` in `(lo, hi]`.
pub fn count_distinct_roots(p: &RatPoly, lo: &BigRational, hi: &BigRational) -> usize {
    SturmSequence::new(p).count_in(lo, hi)
}

/// Real roots of `p` in `(lo, hi]` counted with multiplicity.
pub fn count_roots_with_multiplicity(p: &RatPoly, lo: &BigRational, hi: &BigRational) -> usize {
    p.square_free_decomposition()
        .iter()
        .map(|(f, m)| *m as usize * count_distinct_roots(f, lo, hi))
        .sum()
}

/// Exact integer division helper that panics on a nonzero remainder.
pub(crate) fn exact_div_int(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    assert!(r.is_zero(), "inexact integer division {a} / {b}");
    q
}

/// `num/den` as a rational.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl From<&IntPoly> for RatPoly {
    fn from(p: &IntPoly) -> Self {
        p.to_rational()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn r(n: i64) -> BigRational {
        ratio(n, 1)
    }

    #[test]
    fn arithmetic() {
        let a = ip(&[-5, 0, 1]);
        assert_eq!(a.pow(3), ip(&[-125, 0, 75, 0, -15, 0, 1]));
        assert_eq!(&a * &ip(&[0, 1]), ip(&[0, -5, 0, 1]));
        assert_eq!(&a - &a, IntPoly::zero());
        assert_eq!(a.reflect(), a);
        assert_eq!(ip(&[0, 1]).reflect(), ip(&[0, -1]));
        assert_eq!(a.eval(&BigInt::from(3)), BigInt::from(4));
        assert_eq!(IntPoly::zero().render(), "0");
        assert_eq!(a.render(), "-5 0 1");
    }

    #[test]
    fn division_and_gcd() {
        let a = ip(&[-1, 0, 1]).to_rational(); // (x-1)(x+1)
        let b = ip(&[1, 2, 1]).to_rational(); // (x+1)^2
        assert_eq!(a.gcd(&b), ip(&[1, 1]).to_rational());
        let (q, rem) = b.div_rem(&a);
        assert_eq!(q, ip(&[1]).to_rational());
        assert_eq!(rem, ip(&[2, 2]).to_rational());
    }

    #[test]
    fn yun_decomposition() {
        // x (x^2 - 5)^2 (x - 1)^3
        let p = &(&ip(&[0, 1]) * &ip(&[-5, 0, 1]).pow(2)) * &ip(&[-1, 1]).pow(3);
        let parts = p.to_rational().square_free_decomposition();
        assert_eq!(
            parts,
            vec![
                (ip(&[0, 1]).to_rational(), 1),
                (ip(&[-5, 0, 1]).to_rational(), 2),
                (ip(&[-1, 1]).to_rational(), 3),
            ]
        );
        let sf = p.to_rational().square_free_part();
        assert_eq!(
            sf,
            (&(&ip(&[0, 1]) * &ip(&[-5, 0, 1])) * &ip(&[-1, 1])).to_rational()
        );
    }

    #[test]
    fn sturm_counts() {
        let p = ip(&[-1, 0, 1]).to_rational();
        assert_eq!(count_distinct_roots(&p, &r(0), &r(2)), 1);
        assert_eq!(count_distinct_roots(&p, &r(-2), &r(2)), 2);
        // half-open: right endpoint counts, left does not
        assert_eq!(count_distinct_roots(&p, &r(-1), &r(1)), 1);
        assert_eq!(count_distinct_roots(&p, &r(1), &r(2)), 0);

        let cube = ip(&[-5, 0, 1]).pow(3).to_rational();
        assert_eq!(count_distinct_roots(&cube, &r(2), &r(3)), 1);
        assert_eq!(count_roots_with_multiplicity(&cube, &r(2), &r(3)), 3);
        assert_eq!(count_roots_with_multiplicity(&cube, &r(-3), &r(3)), 6);

        let q = (&ip(&[0, 1]) * &ip(&[-5, 0, 1]).pow(2)).to_rational();
        assert_eq!(count_distinct_roots(&q, &ratio(-1, 2), &ratio(1, 2)), 1);
        assert_eq!(count_roots_with_multiplicity(&q, &r(-3), &r(3)), 5);
    }

    #[test]
    fn constants_have_no_roots() {
        let c = ip(&[7]).to_rational();
        assert_eq!(count_distinct_roots(&c, &r(-10), &r(10)), 0);
        assert!(c.square_free_decomposition().is_empty());
    }
}
