//! Independent reference algorithms for cross-checking.
//!
//! Nothing here shares code with the main paths: determinants come from
//! fraction-free Bareiss elimination, characteristic polynomials from exact
//! interpolation of `det(kI - S)`, and equivalence from trying every
//! switching and permutation. All of it is exponential or slow and meant
//! for small orders only.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::matrix::SeidelMatrix;

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                let q = &num / &prev;
                debug_assert!((&q * &prev) == num, "Bareiss division must be exact");
                a[i][j] = q;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// `det(x I - S)` evaluated at the integer `x`.
pub fn char_poly_at(s: &SeidelMatrix, x: i64) -> BigInt {
    let n = s.order();
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let diag = if i == j { x } else { 0 };
                    BigInt::from(diag - i64::from(s.get(i, j)))
                })
                .collect()
        })
        .collect();
    bareiss_determinant(rows)
}

/// Characteristic polynomial coefficients (lowest degree first) by
/// evaluating at `0..=n` and interpolating with Newton divided differences.
pub fn char_poly_by_interpolation(s: &SeidelMatrix) -> Vec<BigInt> {
    let n = s.order();
    let xs: Vec<i64> = (0..=n as i64).collect();
    let mut dd: Vec<BigRational> = xs
        .iter()
        .map(|&x| BigRational::from_integer(char_poly_at(s, x)))
        .collect();
    for level in 1..=n {
        for i in (level..=n).rev() {
            let width = BigRational::from_integer(BigInt::from(xs[i] - xs[i - level]));
            dd[i] = (&dd[i] - &dd[i - 1]) / width;
        }
    }
    // Horner expansion of the Newton form.
    let mut coeffs = vec![BigRational::zero(); n + 1];
    for i in (0..=n).rev() {
        // coeffs = coeffs * (x - xs[i]) + dd[i]
        let shift = BigRational::from_integer(BigInt::from(xs[i]));
        let mut next = vec![BigRational::zero(); n + 1];
        for d in 0..=n {
            if d < n {
                next[d + 1] += &coeffs[d];
            }
            next[d] -= &coeffs[d] * &shift;
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    coeffs
        .into_iter()
        .map(|c| {
            assert!(
                c.is_integer(),
                "interpolated coefficient {c} is not integral"
            );
            c.to_integer()
        })
        .collect()
}

fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    // Heap's algorithm
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Least upper-triangle code over the whole switching-isomorphism orbit,
/// found by trying all `2^n` sign vectors and `n!` permutations.
pub fn brute_force_orbit_key(s: &SeidelMatrix) -> u64 {
    let n = s.order();
    let mut best = u64::MAX;
    for mask in 0u64..(1 << n) {
        let sign = |i: usize| if (mask >> i) & 1 == 1 { -1i8 } else { 1 };
        for_each_permutation(n, |perm| {
            let mut code = 0u64;
            let mut bit = 0;
            for a in 0..n {
                for b in a + 1..n {
                    let (i, j) = (perm[a], perm[b]);
                    if sign(i) * s.get(i, j) * sign(j) == -1 {
                        code |= 1 << bit;
                    }
                    bit += 1;
                }
            }
            best = best.min(code);
        });
    }
    best
}

/// True iff some switching followed by some permutation maps `a` onto `b`.
pub fn brute_force_equivalent(a: &SeidelMatrix, b: &SeidelMatrix) -> bool {
    let n = a.order();
    if n != b.order() {
        return false;
    }
    for mask in 0u64..(1 << n) {
        let sign = |i: usize| if (mask >> i) & 1 == 1 { -1i8 } else { 1 };
        let mut found = false;
        for_each_permutation(n, |perm| {
            if found {
                return;
            }
            found = (0..n).all(|x| {
                (0..n).all(|y| {
                    let (i, j) = (perm[x], perm[y]);
                    sign(i) * a.get(i, j) * sign(j) == b.get(x, y)
                })
            });
        });
        if found {
            return true;
        }
    }
    false
}
