//! Paley conference matrices over prime fields.

use thiserror::Error;

use crate::matrix::{MatrixError, SeidelMatrix};

/// Largest modulus accepted by [`PrimeField::new`] (exclusive).
pub const MAX_PRIME: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("2 is not an odd prime")]
    EvenPrime,
    #[error("{0} exceeds the supported modulus bound 2^20")]
    TooLarge(u64),
    #[error(
        "{0} is congruent to 3 mod 4: -1 is a non-square, so the Paley matrix \
         would be skew-symmetric rather than symmetric"
    )]
    SkewSymmetric(u64),
}

/// Failure of the exact test `C C^T = (n-1) I`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("(C C^T)[{row}][{col}] = {value}, expected {expected}")]
pub struct ConferenceError {
    pub row: usize,
    pub col: usize,
    pub value: i64,
    pub expected: i64,
}

/// The prime field `GF(p)` for an odd prime `p < 2^20`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Checks primality by trial division.
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p >= MAX_PRIME {
            return Err(FieldError::TooLarge(p));
        }
        if p == 2 {
            return Err(FieldError::EvenPrime);
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// The Legendre symbol of `a`, by Euler's criterion `a^((p-1)/2) mod p`.
    pub fn quadratic_character(&self, a: u64) -> i8 {
        let a = a % self.p;
        if a == 0 {
            return 0;
        }
        match mod_pow(a, (self.p - 1) / 2, self.p) {
            1 => 1,
            r => {
                debug_assert_eq!(r, self.p - 1);
                -1
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// A Seidel matrix known to satisfy `C C^T = (n-1) I`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConferenceMatrix {
    inner: SeidelMatrix,
}

impl ConferenceMatrix {
    /// Validates the conference property exactly.
    ///
    /// On failure, reports the first offending entry of `C C^T` in row-major
    /// order over the upper triangle (diagonal included).
    pub fn new(s: SeidelMatrix) -> Result<Self, ConferenceError> {
        let n = s.order();
        for i in 0..n {
            let ri = s.row(i);
            for j in i..n {
                let rj = s.row(j);
                let value: i64 = ri.iter().zip(rj).map(|(&a, &b)| i64::from(a * b)).sum();
                let expected = if i == j { n as i64 - 1 } else { 0 };
                if value != expected {
                    return Err(ConferenceError {
                        row: i,
                        col: j,
                        value,
                        expected,
                    });
                }
            }
        }
        Ok(Self { inner: s })
    }

    pub fn matrix(&self) -> &SeidelMatrix {
        &self.inner
    }

    pub fn into_inner(self) -> SeidelMatrix {
        self.inner
    }

    pub fn order(&self) -> usize {
        self.inner.order()
    }
}

impl AsRef<SeidelMatrix> for ConferenceMatrix {
    fn as_ref(&self) -> &SeidelMatrix {
        &self.inner
    }
}

pub fn validate_conference(s: SeidelMatrix) -> Result<ConferenceMatrix, ConferenceError> {
    ConferenceMatrix::new(s)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PaleyError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("constructed matrix failed validation: {0}")]
    Validation(#[from] ConferenceError),
}

/// The symmetric Paley conference matrix of order `p + 1`.
///
/// Index 0 is the border vertex, joined with `+1` to everything. Index
/// `x + 1` stands for the field element `x`, and the core block is
/// `C[x+1][y+1] = χ(x - y)`.
pub fn paley_conference(field: PrimeField) -> Result<ConferenceMatrix, PaleyError> {
    let p = field.modulus();
    if p % 4 != 1 {
        return Err(FieldError::SkewSymmetric(p).into());
    }
    let n = p as usize + 1;
    let s = SeidelMatrix::from_upper_triangle(n, |i, j| {
        if i == 0 {
            1
        } else {
            let diff = (i as u64 + p - j as u64) % p;
            field.quadratic_character(diff)
        }
    })?;
    Ok(ConferenceMatrix::new(s)?)
}

/// [`paley_conference`] from a raw modulus.
pub fn paley_conference_for_prime(p: u64) -> Result<ConferenceMatrix, PaleyError> {
    paley_conference(PrimeField::new(p)?)
}
