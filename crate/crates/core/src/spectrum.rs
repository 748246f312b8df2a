//! Exact characteristic polynomials and spectral symmetry.
//!
//! Everything here is integer- or rational-exact. Eigenvalues are never
//! approximated: symmetry is read off the coefficient parity, multiplicities
//! come from square-free decomposition, and locations from Sturm chains.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::matrix::SeidelMatrix;
use crate::poly::{self, IntPoly, SturmSequence};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("characteristic polynomial of order {n} needs {expected} coefficients, got {actual}")]
    WrongLength {
        n: usize,
        expected: usize,
        actual: usize,
    },
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("coefficient of x^(n-1) is {0}, but a Seidel matrix has trace zero")]
    NonzeroTrace(BigInt),
    #[error("invalid coefficient {0:?}")]
    InvalidCoefficient(String),
}

/// `det(xI - S)` for a Seidel matrix `S` of order `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CharPolynomial {
    poly: IntPoly,
    order: usize,
}

impl CharPolynomial {
    /// Wraps coefficients (lowest degree first), checking monicity and the
    /// vanishing `x^(n-1)` coefficient.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self, PolyError> {
        let order = coeffs.len().saturating_sub(1);
        if coeffs.is_empty() {
            return Err(PolyError::WrongLength {
                n: 0,
                expected: 1,
                actual: 0,
            });
        }
        if !coeffs[order].is_one() {
            return Err(PolyError::NotMonic);
        }
        if order >= 1 && !coeffs[order - 1].is_zero() {
            return Err(PolyError::NonzeroTrace(coeffs[order - 1].clone()));
        }
        Ok(Self {
            poly: IntPoly::new(coeffs),
            order,
        })
    }

    /// Parses the space-separated render format.
    pub fn parse(text: &str) -> Result<Self, PolyError> {
        let coeffs = text
            .split_ascii_whitespace()
            .map(|t| {
                t.parse::<BigInt>()
                    .map_err(|_| PolyError::InvalidCoefficient(t.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_coeffs(coeffs)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficients, lowest degree first, exactly `order + 1` of them.
    pub fn coeffs(&self) -> Vec<BigInt> {
        (0..=self.order).map(|i| self.poly.coeff(i)).collect()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.poly.coeff(i)
    }

    pub fn as_poly(&self) -> &IntPoly {
        &self.poly
    }

    /// `p(-x) = (-1)^n p(x)`, i.e. every coefficient of the wrong parity vanishes.
    pub fn is_symmetric_spectrum(&self) -> bool {
        self.poly
            .coeffs()
            .iter()
            .enumerate()
            .all(|(i, c)| (i % 2 == self.order % 2) || c.is_zero())
    }

    /// `(-1)^n` times the constant coefficient.
    pub fn determinant(&self) -> BigInt {
        let c0 = self.poly.coeff(0);
        if self.order % 2 == 1 {
            -c0
        } else {
            c0
        }
    }

    /// Multiplicity of the eigenvalue 0.
    pub fn zero_multiplicity(&self) -> usize {
        self.poly
            .coeffs()
            .iter()
            .take_while(|c| c.is_zero())
            .count()
    }

    /// Distinct eigenvalues in `(lo, hi]`.
    pub fn count_roots_in_interval(&self, lo: &BigRational, hi: &BigRational) -> usize {
        poly::count_distinct_roots(&self.poly.to_rational(), lo, hi)
    }

    /// Eigenvalues in `(lo, hi]` counted with multiplicity.
    pub fn count_roots_with_multiplicity(&self, lo: &BigRational, hi: &BigRational) -> usize {
        poly::count_roots_with_multiplicity(&self.poly.to_rational(), lo, hi)
    }

    /// True iff the polynomial is `(x^2 - (n-1))^(n/2)` for the given even `n`.
    pub fn certify_conference_spectrum(&self, n: usize) -> bool {
        if n % 2 == 1 || n != self.order {
            return false;
        }
        let quadratic = IntPoly::new(vec![-BigInt::from(n - 1), BigInt::zero(), BigInt::one()]);
        quadratic.pow((n / 2) as u32) == self.poly
    }

    /// True iff the polynomial is `x (x^2 - (m-1))^((m-1)/2)` where `m = n + 1`
    /// is the order of the conference matrix the `n × n` submatrix came from.
    pub fn certify_deleted_conference_spectrum(&self) -> bool {
        let n = self.order;
        if n.is_multiple_of(2) {
            return false;
        }
        let quadratic = IntPoly::new(vec![-BigInt::from(n), BigInt::zero(), BigInt::one()]);
        &IntPoly::x() * &quadratic.pow(((n - 1) / 2) as u32) == self.poly
    }

    /// Space-separated decimal coefficients from degree 0 upward.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self.coeffs().iter().map(BigInt::to_string).collect();
        parts.join(" ")
    }

    pub fn summary(&self) -> SpectrumSummary {
        SpectrumSummary::new(self)
    }
}

impl fmt::Debug for CharPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharPolynomial[{}]", self.render())
    }
}

impl fmt::Display for CharPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Characteristic polynomial by the Faddeev–LeVerrier recurrence.
///
/// With `M_0 = 0` and `c_n = 1`, for `k = 1..=n`:
/// `M_k = S M_{k-1} + c_{n-k+1} I` and `c_{n-k} = -tr(S M_k) / k`.
/// Every division is exact over the integers. `S` has entries in `{0, ±1}`,
/// so the products reduce to signed sums of big integers.
pub fn char_poly(s: &SeidelMatrix) -> CharPolynomial {
    let n = s.order();
    // Row i of S split into positive and negative column lists.
    let (plus, minus): (Vec<Vec<usize>>, Vec<Vec<usize>>) = (0..n)
        .map(|i| {
            let row = s.row(i);
            (
                (0..n).filter(|&j| row[j] == 1).collect(),
                (0..n).filter(|&j| row[j] == -1).collect(),
            )
        })
        .unzip();

    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // M_1 = I
    let mut m: Vec<BigInt> = (0..n * n)
        .map(|t| {
            if t / n == t % n {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
        .collect();
    let mut sm = vec![BigInt::zero(); n * n];

    for k in 1..=n {
        if k > 1 {
            // M_k = S M_{k-1} + c_{n-k+1} I, with S M_{k-1} still held in `sm`
            std::mem::swap(&mut m, &mut sm);
            for i in 0..n {
                m[i * n + i] += &coeffs[n - k + 1];
            }
        }
        // sm = S * M_k
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigInt::zero();
                for &l in &plus[i] {
                    acc += &m[l * n + j];
                }
                for &l in &minus[i] {
                    acc -= &m[l * n + j];
                }
                sm[i * n + j] = acc;
            }
        }
        let trace: BigInt = (0..n).map(|i| &sm[i * n + i]).sum();
        coeffs[n - k] = -poly::exact_div_int(&trace, &BigInt::from(k));
    }

    CharPolynomial {
        poly: IntPoly::new(coeffs),
        order: n,
    }
}

/// Exact spectral facts derived from a characteristic polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumSummary {
    pub is_symmetric: bool,
    pub det: BigInt,
    pub eigenvalue_zero_multiplicity: usize,
    /// Nonempty unit intervals `(j, j+1]` covering `(-n, n]`.
    pub interval_counts: Vec<IntervalCount>,
}

/// Eigenvalues inside the half-open interval `(lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalCount {
    pub lo: BigRational,
    pub hi: BigRational,
    pub distinct: usize,
    pub with_multiplicity: usize,
}

impl SpectrumSummary {
    /// Eigenvalues of a Seidel matrix of order `n` lie in `[-(n-1), n-1]`, so
    /// the unit intervals `(j, j+1]` for `-n <= j < n` cover every root.
    pub fn new(p: &CharPolynomial) -> Self {
        let n = p.order() as i64;
        let rational = p.as_poly().to_rational();
        let factors = rational.square_free_decomposition();
        let chains: Vec<(SturmSequence, u32)> = factors
            .iter()
            .map(|(f, m)| (SturmSequence::new(f), *m))
            .collect();
        let full = SturmSequence::new(&rational);

        let mut interval_counts = Vec::new();
        for j in -n..n {
            let lo = poly::ratio(j, 1);
            let hi = poly::ratio(j + 1, 1);
            let distinct = full.count_in(&lo, &hi);
            if distinct == 0 {
                continue;
            }
            let with_multiplicity = chains
                .iter()
                .map(|(c, m)| *m as usize * c.count_in(&lo, &hi))
                .sum();
            interval_counts.push(IntervalCount {
                lo,
                hi,
                distinct,
                with_multiplicity,
            });
        }
        Self {
            is_symmetric: p.is_symmetric_spectrum(),
            det: p.determinant(),
            eigenvalue_zero_multiplicity: p.zero_multiplicity(),
            interval_counts,
        }
    }

    /// Distinct real eigenvalues.
    pub fn distinct_roots(&self) -> usize {
        self.interval_counts.iter().map(|c| c.distinct).sum()
    }
}

impl fmt::Display for IntervalCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}]: {} distinct, {} with multiplicity",
            self.lo, self.hi, self.distinct, self.with_multiplicity
        )
    }
}
