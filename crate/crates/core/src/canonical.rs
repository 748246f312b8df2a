//! Switching-isomorphism: canonical forms and equivalence testing.
//!
//! Switching at the neighbours of a vertex `v` turns row `v` into all `+1`.
//! What is left is a graph on the other `n - 1` vertices, and the matrix can
//! be rebuilt from it. So two Seidel matrices are switching-isomorphic iff
//! for some pair of vertices the residual graphs are isomorphic. Taking the
//! least canonical residual over all choices of `v` gives a complete
//! invariant.
//!
//! Graph canonical labeling uses individualization and equitable-partition
//! refinement, exploring every leaf of the search tree and keeping the
//! lexicographically least adjacency string. There is no automorphism
//! pruning, so the cost grows quickly with highly symmetric graphs; it is
//! intended for orders up to about 16.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;

use crate::matrix::{MatrixError, SeidelMatrix, SwitchingVector};

/// A complete invariant of switching-isomorphism.
///
/// `bits` holds the upper triangle (row-major, `1` = edge) of the least
/// canonical residual graph, packed most significant bit first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of meaningful bits: `(n-1)(n-2)/2`.
    pub fn bit_len(&self) -> usize {
        residual_bits(self.n)
    }

    /// Bit `t` of the residual upper triangle.
    pub fn bit(&self, t: usize) -> bool {
        (self.bits[t / 64] >> (63 - t % 64)) & 1 == 1
    }

    /// `"<n>:<hex>"`, hex digits covering the bit string padded with zeros
    /// to a whole number of nibbles (at least one digit).
    pub fn to_hex(&self) -> String {
        let nibbles = self.bit_len().div_ceil(4).max(1);
        let mut out = format!("{}:", self.n);
        for t in 0..nibbles {
            let word = self.bits.get(t / 16).copied().unwrap_or(0);
            let nib = (word >> (60 - 4 * (t % 16))) & 0xf;
            out.push(char::from_digit(nib as u32, 16).unwrap());
        }
        out
    }

    /// Rebuilds a representative matrix: vertex 0 is the normalized vertex
    /// and vertices `1..n` carry the residual graph.
    pub fn representative(&self) -> SeidelMatrix {
        let mut t = 0;
        SeidelMatrix::from_upper_triangle(self.n, |i, _| {
            if i == 0 {
                return 1;
            }
            let edge = self.bit(t);
            t += 1;
            if edge {
                -1
            } else {
                1
            }
        })
        .expect("order is positive")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

fn residual_bits(n: usize) -> usize {
    let m = n.saturating_sub(1);
    m * m.saturating_sub(1) / 2
}

/// Switches so that row `v` is `+1` everywhere off the diagonal.
pub fn normalize_at_vertex(s: &SeidelMatrix, v: usize) -> Result<SeidelMatrix, MatrixError> {
    let n = s.order();
    if v >= n {
        return Err(MatrixError::IndexOutOfRange { index: v, n });
    }
    let mut signs = s.row(v).to_vec();
    signs[v] = 1;
    s.apply_switching(&SwitchingVector::new(signs)?)
}

/// Dense graph used inside the canonical labeling search.
struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    /// Residual graph of `s` after normalizing at `v`: vertices are the
    /// indices other than `v`, edges where the normalized entry is `-1`.
    fn residual(s: &SeidelMatrix, v: usize) -> Self {
        let others: Vec<usize> = (0..s.order()).filter(|&u| u != v).collect();
        let m = others.len();
        let row_v = s.row(v);
        let mut adj = vec![false; m * m];
        for (a, &x) in others.iter().enumerate() {
            for (b, &y) in others.iter().enumerate() {
                if a != b {
                    // entry after switching by d[j] = s[v][j]
                    adj[a * m + b] = row_v[x] * s.get(x, y) * row_v[y] == -1;
                }
            }
        }
        Self { n: m, adj }
    }

    #[inline]
    fn has(&self, a: usize, b: usize) -> bool {
        self.adj[a * self.n + b]
    }

    /// Splits cells by neighbour counts into each splitter cell until stable.
    /// New subcells are ordered by increasing count, so the result depends
    /// only on the isomorphism type of the graph and the input partition.
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        'outer: loop {
            for s in 0..cells.len() {
                let splitter = cells[s].clone();
                let mut next = Vec::with_capacity(cells.len() + 1);
                let mut split = false;
                for cell in cells.iter() {
                    if cell.len() == 1 {
                        next.push(cell.clone());
                        continue;
                    }
                    let mut keyed: Vec<(usize, usize)> = cell
                        .iter()
                        .map(|&u| (splitter.iter().filter(|&&w| self.has(u, w)).count(), u))
                        .collect();
                    keyed.sort_unstable();
                    let mut start = 0;
                    for i in 1..=keyed.len() {
                        if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                            next.push(keyed[start..i].iter().map(|&(_, u)| u).collect());
                            start = i;
                        }
                    }
                    if keyed[0].0 != keyed[keyed.len() - 1].0 {
                        split = true;
                    }
                }
                if split {
                    *cells = next;
                    continue 'outer;
                }
            }
            return;
        }
    }

    /// Writes the upper-triangle bits under `order` into `out`, aborting as
    /// soon as the prefix exceeds `best`. Returns the comparison with `best`.
    fn encode_against(
        &self,
        order: &[usize],
        best: Option<&[u64]>,
        out: &mut Vec<u64>,
    ) -> Ordering {
        let words = residual_bits(self.n + 1).div_ceil(64);
        out.clear();
        out.resize(words, 0);
        let mut t = 0;
        let mut state = if best.is_some() {
            Ordering::Equal
        } else {
            Ordering::Less
        };
        for i in 0..self.n {
            let oi = order[i];
            for &oj in &order[i + 1..] {
                if self.has(oi, oj) {
                    out[t / 64] |= 1 << (63 - t % 64);
                }
                t += 1;
                if t % 64 == 0 && state == Ordering::Equal {
                    state = out[t / 64 - 1].cmp(&best.unwrap()[t / 64 - 1]);
                    if state == Ordering::Greater {
                        return state;
                    }
                }
            }
        }
        if state == Ordering::Equal && t % 64 != 0 {
            state = out[t / 64].cmp(&best.unwrap()[t / 64]);
        }
        state
    }

    /// Least adjacency bit-string over all leaves of the search tree.
    fn canonical_bits(&self) -> Vec<u64> {
        let mut best: Option<Vec<u64>> = None;
        let mut scratch = Vec::new();
        if self.n == 0 {
            return Vec::new();
        }
        let mut cells = vec![(0..self.n).collect::<Vec<_>>()];
        self.refine(&mut cells);
        self.search(cells, &mut best, &mut scratch);
        best.unwrap_or_default()
    }

    fn search(&self, cells: Vec<Vec<usize>>, best: &mut Option<Vec<u64>>, scratch: &mut Vec<u64>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            if self.encode_against(&order, best.as_deref(), scratch) == Ordering::Less {
                *best = Some(scratch.clone());
            }
            return;
        };
        for &u in &cells[target] {
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![u]);
            child.push(cells[target].iter().copied().filter(|&w| w != u).collect());
            child.extend_from_slice(&cells[target + 1..]);
            self.refine(&mut child);
            self.search(child, best, scratch);
        }
    }
}

/// Canonical form under switching and simultaneous permutation.
///
/// Each vertex choice is handled independently (in parallel) and the
/// minimum is taken, so the result does not depend on scheduling.
pub fn canonical_form(s: &SeidelMatrix) -> CanonicalForm {
    let n = s.order();
    let bits = (0..n)
        .into_par_iter()
        .map(|v| Graph::residual(s, v).canonical_bits())
        .min()
        .unwrap_or_default();
    CanonicalForm { n, bits }
}

/// Single-threaded [`canonical_form`], for callers already running in parallel.
pub fn canonical_form_sequential(s: &SeidelMatrix) -> CanonicalForm {
    let n = s.order();
    let bits = (0..n)
        .map(|v| Graph::residual(s, v).canonical_bits())
        .min()
        .unwrap_or_default();
    CanonicalForm { n, bits }
}

/// Switching-isomorphism test. Matrices of different orders are never
/// equivalent.
pub fn are_equivalent(a: &SeidelMatrix, b: &SeidelMatrix) -> bool {
    a.order() == b.order() && canonical_form(a) == canonical_form(b)
}
