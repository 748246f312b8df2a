//! Seidel matrices, graphs, switchings and the plain-text matrix format.
//!
//! A Seidel matrix of order `n` is a symmetric matrix with zero diagonal and
//! `±1` off the diagonal. It encodes a simple graph on `n` vertices: `-1`
//! marks an edge, `+1` a non-edge.
//!
//! All types here validate on construction and are immutable afterwards.

use std::fmt;

use thiserror::Error;

/// Errors raised when building or combining matrices.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix order must be at least 1")]
    EmptyOrder,
    #[error("expected {expected} entries for order {n}, got {actual}")]
    WrongEntryCount {
        n: usize,
        expected: usize,
        actual: usize,
    },
    #[error("nonzero diagonal entry at ({index},{index})")]
    NonzeroDiagonal { index: usize },
    #[error("off-diagonal entry at ({row},{col}) is {value}, expected -1 or +1")]
    InvalidOffDiagonal { row: usize, col: usize, value: i8 },
    #[error("entries at ({row},{col}) and ({col},{row}) differ")]
    Asymmetric { row: usize, col: usize },
    #[error("dimension mismatch: matrix has order {expected}, argument has length {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("switching vector entry {index} is {value}, expected -1 or +1")]
    InvalidSign { index: usize, value: i8 },
    #[error("index set is empty")]
    EmptyIndexSet,
    #[error("index {index} out of range for order {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("index set is not strictly increasing at position {position}")]
    UnsortedIndexSet { position: usize },
    #[error("not a permutation of 0..{n}")]
    InvalidPermutation { n: usize },
}

/// Errors raised while parsing the matrix file format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line 1: missing order header")]
    MissingHeader,
    #[error("line 1: invalid order {0:?}")]
    InvalidOrder(String),
    #[error("expected {expected} matrix rows, found {found}")]
    WrongRowCount { expected: usize, found: usize },
    #[error("line {line}: row {row} has {found} characters, expected {expected}")]
    WrongLineLength {
        line: usize,
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: invalid character {ch:?} at ({row},{col})")]
    InvalidCharacter {
        line: usize,
        row: usize,
        col: usize,
        ch: char,
    },
    #[error("nonzero diagonal entry at ({index},{index})")]
    NonzeroDiagonal { index: usize },
    #[error("zero off-diagonal entry at ({row},{col})")]
    ZeroOffDiagonal { row: usize, col: usize },
    #[error("asymmetric entries at ({row},{col}) and ({col},{row})")]
    Asymmetric { row: usize, col: usize },
    #[error("missing trailing newline")]
    MissingTrailingNewline,
}

/// A symmetric `{0, ±1}` matrix with zero diagonal and nonzero off-diagonal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SeidelMatrix {
    n: usize,
    entries: Vec<i8>,
}

impl SeidelMatrix {
    /// Builds a matrix from row-major entries, checking every invariant.
    pub fn new(n: usize, entries: Vec<i8>) -> Result<Self, MatrixError> {
        if n == 0 {
            return Err(MatrixError::EmptyOrder);
        }
        if entries.len() != n * n {
            return Err(MatrixError::WrongEntryCount {
                n,
                expected: n * n,
                actual: entries.len(),
            });
        }
        for i in 0..n {
            for j in 0..n {
                let value = entries[i * n + j];
                if i == j {
                    if value != 0 {
                        return Err(MatrixError::NonzeroDiagonal { index: i });
                    }
                } else if value != 1 && value != -1 {
                    return Err(MatrixError::InvalidOffDiagonal {
                        row: i,
                        col: j,
                        value,
                    });
                } else if i < j && value != entries[j * n + i] {
                    return Err(MatrixError::Asymmetric { row: i, col: j });
                }
            }
        }
        Ok(Self { n, entries })
    }

    /// Builds a matrix from a slice of rows.
    pub fn from_rows<R: AsRef<[i8]>>(rows: &[R]) -> Result<Self, MatrixError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            let row = row.as_ref();
            if row.len() != n {
                return Err(MatrixError::WrongEntryCount {
                    n,
                    expected: n * n,
                    actual: n * row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        Self::new(n, entries)
    }

    /// The Seidel matrix of the edgeless graph (all `+1` off the diagonal).
    pub fn edgeless(n: usize) -> Result<Self, MatrixError> {
        Self::from_upper_triangle(n, |_, _| 1)
    }

    /// Builds a matrix from a function of `(i, j)` with `i < j`.
    ///
    /// The closure must return `±1`; the lower triangle mirrors it.
    pub fn from_upper_triangle<F>(n: usize, mut f: F) -> Result<Self, MatrixError>
    where
        F: FnMut(usize, usize) -> i8,
    {
        if n == 0 {
            return Err(MatrixError::EmptyOrder);
        }
        let mut entries = vec![0i8; n * n];
        for i in 0..n {
            for j in i + 1..n {
                let v = f(i, j);
                entries[i * n + j] = v;
                entries[j * n + i] = v;
            }
        }
        Self::new(n, entries)
    }

    /// Decodes matrix number `code` among the `2^(n(n-1)/2)` Seidel matrices of
    /// order `n`. Bit `t` of `code` (upper triangle, row-major) set means `-1`.
    pub fn from_code(n: usize, code: u64) -> Result<Self, MatrixError> {
        let mut bit = 0;
        Self::from_upper_triangle(n, |_, _| {
            let v = if (code >> bit) & 1 == 1 { -1 } else { 1 };
            bit += 1;
            v
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[i8] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    /// `D S D` for the diagonal sign matrix `D` given by `d`.
    pub fn apply_switching(&self, d: &SwitchingVector) -> Result<Self, MatrixError> {
        if d.len() != self.n {
            return Err(MatrixError::DimensionMismatch {
                expected: self.n,
                actual: d.len(),
            });
        }
        let n = self.n;
        let signs = d.signs();
        let entries = (0..n * n)
            .map(|t| signs[t / n] * self.entries[t] * signs[t % n])
            .collect();
        Ok(Self { n, entries })
    }

    /// The principal submatrix on the given rows/columns.
    pub fn principal_submatrix(&self, keep: &IndexSet) -> Result<Self, MatrixError> {
        if let Some(&last) = keep.as_slice().last() {
            if last >= self.n {
                return Err(MatrixError::IndexOutOfRange {
                    index: last,
                    n: self.n,
                });
            }
        }
        Ok(self.submatrix_unchecked(keep.as_slice()))
    }

    /// Principal submatrix from indices already known to be sorted and in range.
    pub(crate) fn submatrix_unchecked(&self, keep: &[usize]) -> Self {
        let k = keep.len();
        let mut entries = Vec::with_capacity(k * k);
        for &a in keep {
            let row = self.row(a);
            entries.extend(keep.iter().map(|&b| row[b]));
        }
        Self { n: k, entries }
    }

    /// Simultaneous row/column permutation: `result[a][b] = self[perm[a]][perm[b]]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self, MatrixError> {
        let n = self.n;
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(MatrixError::InvalidPermutation { n });
        }
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(MatrixError::InvalidPermutation { n });
            }
        }
        let mut entries = Vec::with_capacity(n * n);
        for &a in perm {
            let row = self.row(a);
            entries.extend(perm.iter().map(|&b| row[b]));
        }
        Ok(Self { n, entries })
    }

    /// `-S`, the Seidel matrix of the complementary graph.
    pub fn negated(&self) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|&v| -v).collect(),
        }
    }

    /// Renders in the matrix file format.
    pub fn render(&self) -> String {
        let mut out = String::with_capacity((self.n + 1) * (self.n + 1) + 8);
        out.push_str(&self.n.to_string());
        out.push('\n');
        for i in 0..self.n {
            out.extend(self.row(i).iter().map(|&v| match v {
                0 => '0',
                1 => '+',
                _ => '-',
            }));
            out.push('\n');
        }
        out
    }

    /// Parses the matrix file format.
    ///
    /// Line 1 holds the decimal order `n`, followed by `n` lines of exactly
    /// `n` characters from `0`, `+`, `-`. The trailing newline is mandatory.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        if text.is_empty() {
            return Err(ParseError::MissingHeader);
        }
        if !text.ends_with('\n') {
            return Err(ParseError::MissingTrailingNewline);
        }
        let mut lines = text[..text.len() - 1].split('\n');
        let header = lines.next().ok_or(ParseError::MissingHeader)?;
        if header.is_empty() || !header.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseError::InvalidOrder(header.to_string()));
        }
        let n: usize = header
            .parse()
            .map_err(|_| ParseError::InvalidOrder(header.to_string()))?;
        if n == 0 {
            return Err(ParseError::InvalidOrder(header.to_string()));
        }

        let rows: Vec<&str> = lines.collect();
        if rows.len() != n {
            return Err(ParseError::WrongRowCount {
                expected: n,
                found: rows.len(),
            });
        }
        let mut entries = Vec::with_capacity(n * n);
        for (row, line) in rows.iter().enumerate() {
            let line_no = row + 2;
            let mut count = 0;
            for (col, ch) in line.chars().enumerate() {
                let v = match ch {
                    '0' => 0,
                    '+' => 1,
                    '-' => -1,
                    _ => {
                        return Err(ParseError::InvalidCharacter {
                            line: line_no,
                            row,
                            col,
                            ch,
                        })
                    }
                };
                if col < n {
                    entries.push(v);
                }
                count += 1;
            }
            if count != n {
                return Err(ParseError::WrongLineLength {
                    line: line_no,
                    row,
                    expected: n,
                    found: count,
                });
            }
        }

        for i in 0..n {
            for j in 0..n {
                let v = entries[i * n + j];
                if i == j {
                    if v != 0 {
                        return Err(ParseError::NonzeroDiagonal { index: i });
                    }
                } else if v == 0 {
                    return Err(ParseError::ZeroOffDiagonal { row: i, col: j });
                } else if i < j && v != entries[j * n + i] {
                    return Err(ParseError::Asymmetric { row: i, col: j });
                }
            }
        }
        Ok(Self { n, entries })
    }
}

impl fmt::Debug for SeidelMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeidelMatrix({:?})", self.render())
    }
}

impl fmt::Display for SeidelMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// A vector of `±1` signs describing the diagonal switching matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SwitchingVector {
    signs: Vec<i8>,
}

impl SwitchingVector {
    pub fn new(signs: Vec<i8>) -> Result<Self, MatrixError> {
        if let Some((index, &value)) = signs.iter().enumerate().find(|(_, &s)| s != 1 && s != -1) {
            return Err(MatrixError::InvalidSign { index, value });
        }
        Ok(Self { signs })
    }

    /// All `+1`: the identity switching.
    pub fn identity(n: usize) -> Self {
        Self { signs: vec![1; n] }
    }

    /// Bit `i` of `mask` set means `signs[i] = -1`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Self {
            signs: (0..n)
                .map(|i| if (mask >> i) & 1 == 1 { -1 } else { 1 })
                .collect(),
        }
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }
}

/// A sorted, duplicate-free, nonempty set of matrix indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    /// Accepts only strictly increasing, nonempty sequences.
    pub fn new(indices: Vec<usize>) -> Result<Self, MatrixError> {
        if indices.is_empty() {
            return Err(MatrixError::EmptyIndexSet);
        }
        if let Some(position) = indices.windows(2).position(|w| w[0] >= w[1]) {
            return Err(MatrixError::UnsortedIndexSet {
                position: position + 1,
            });
        }
        Ok(Self(indices))
    }

    /// Sorts and deduplicates arbitrary input.
    pub fn from_unsorted(mut indices: Vec<usize>) -> Result<Self, MatrixError> {
        indices.sort_unstable();
        indices.dedup();
        Self::new(indices)
    }

    /// `{0, …, n-1}`.
    pub fn full(n: usize) -> Result<Self, MatrixError> {
        Self::new((0..n).collect())
    }

    /// All indices below `n` except `skip`.
    pub fn all_but(n: usize, skip: usize) -> Result<Self, MatrixError> {
        Self::new((0..n).filter(|&i| i != skip).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Hyphen-joined decimal rendering, e.g. `0-2-5`.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        parts.join("-")
    }
}

/// A simple undirected graph stored as a dense boolean adjacency matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adjacency: Vec<bool>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adjacency: vec![false; n * n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    /// Builds a graph from an edge list; loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, MatrixError> {
        let mut g = Self::empty(n);
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(MatrixError::IndexOutOfRange { index: v, n });
                }
            }
            if a == b {
                return Err(MatrixError::NonzeroDiagonal { index: a });
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        self.adjacency[a * self.n + b] = true;
        self.adjacency[b * self.n + a] = true;
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a * self.n + b]
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().filter(|&&e| e).count() / 2
    }

    /// The Seidel matrix: `-1` for edges, `+1` for non-edges.
    pub fn seidel_matrix(&self) -> Result<SeidelMatrix, MatrixError> {
        SeidelMatrix::from_upper_triangle(
            self.n,
            |i, j| if self.is_adjacent(i, j) { -1 } else { 1 },
        )
    }
}

impl From<&SeidelMatrix> for SimpleGraph {
    fn from(s: &SeidelMatrix) -> Self {
        Self {
            n: s.n,
            adjacency: s.entries.iter().map(|&v| v == -1).collect(),
        }
    }
}

/// Convenience wrapper around [`SimpleGraph::seidel_matrix`].
pub fn seidel_from_graph(g: &SimpleGraph) -> Result<SeidelMatrix, MatrixError> {
    g.seidel_matrix()
}

pub fn graph_from_seidel(s: &SeidelMatrix) -> SimpleGraph {
    SimpleGraph::from(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i8]]) -> SeidelMatrix {
        SeidelMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn graph_conversion() {
        assert_eq!(
            SimpleGraph::empty(2).seidel_matrix().unwrap(),
            m(&[&[0, 1], &[1, 0]])
        );
        let edge = SimpleGraph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(edge.seidel_matrix().unwrap(), m(&[&[0, -1], &[-1, 0]]));
        let k3 = SimpleGraph::complete(3).seidel_matrix().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(k3.get(i, j), if i == j { 0 } else { -1 });
            }
        }
        assert_eq!(
            graph_from_seidel(&m(&[&[0, 1], &[1, 0]])),
            SimpleGraph::empty(2)
        );
        assert_eq!(graph_from_seidel(&m(&[&[0, -1], &[-1, 0]])), edge);
    }

    #[test]
    fn construction_rejects_bad_entries() {
        assert_eq!(SeidelMatrix::new(0, vec![]), Err(MatrixError::EmptyOrder));
        assert_eq!(
            SeidelMatrix::from_rows(&[[1i8, 1], [1, 0]]),
            Err(MatrixError::NonzeroDiagonal { index: 0 })
        );
        assert_eq!(
            SeidelMatrix::from_rows(&[[0i8, 0], [0, 0]]),
            Err(MatrixError::InvalidOffDiagonal {
                row: 0,
                col: 1,
                value: 0
            })
        );
        assert_eq!(
            SeidelMatrix::from_rows(&[[0i8, 1], [-1, 0]]),
            Err(MatrixError::Asymmetric { row: 0, col: 1 })
        );
    }

    #[test]
    fn switching_examples() {
        let s = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(s.apply_switching(&SwitchingVector::identity(2)).unwrap(), s);
        let d = SwitchingVector::new(vec![1, -1]).unwrap();
        assert_eq!(s.apply_switching(&d).unwrap(), m(&[&[0, -1], &[-1, 0]]));
        let p3 = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)])
            .unwrap()
            .seidel_matrix()
            .unwrap();
        let minus = SwitchingVector::new(vec![-1; 3]).unwrap();
        assert_eq!(p3.apply_switching(&minus).unwrap(), p3);
        assert_eq!(
            s.apply_switching(&SwitchingVector::identity(3)),
            Err(MatrixError::DimensionMismatch {
                expected: 2,
                actual: 3
            })
        );
        assert!(SwitchingVector::new(vec![1, 0]).is_err());
    }

    #[test]
    fn submatrix_examples() {
        let s = SeidelMatrix::from_code(4, 0b101101).unwrap();
        assert_eq!(
            s.principal_submatrix(&IndexSet::full(4).unwrap()).unwrap(),
            s
        );
        let one = s
            .principal_submatrix(&IndexSet::new(vec![0]).unwrap())
            .unwrap();
        assert_eq!(one.order(), 1);
        assert_eq!(one.entries(), &[0]);
        assert_eq!(
            s.principal_submatrix(&IndexSet::new(vec![1, 4]).unwrap()),
            Err(MatrixError::IndexOutOfRange { index: 4, n: 4 })
        );
        assert_eq!(IndexSet::new(vec![]), Err(MatrixError::EmptyIndexSet));
        assert_eq!(
            IndexSet::new(vec![0, 2, 2]),
            Err(MatrixError::UnsortedIndexSet { position: 2 })
        );
        assert_eq!(IndexSet::new(vec![0, 3, 11]).unwrap().render(), "0-3-11");
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            SeidelMatrix::parse("2\n0+\n+0\n").unwrap(),
            m(&[&[0, 1], &[1, 0]])
        );
        assert_eq!(
            SeidelMatrix::parse("2\n0-\n-0\n").unwrap(),
            m(&[&[0, -1], &[-1, 0]])
        );
        assert_eq!(
            SeidelMatrix::parse("2\n0+\n-0\n"),
            Err(ParseError::Asymmetric { row: 0, col: 1 })
        );
    }

    #[test]
    fn parse_errors_are_distinct() {
        use ParseError::*;
        let cases: &[(&str, ParseError)] = &[
            ("", MissingHeader),
            ("2\n0+\n+0", MissingTrailingNewline),
            ("x\n", InvalidOrder("x".into())),
            ("0\n", InvalidOrder("0".into())),
            (
                "2\n0+\n",
                WrongRowCount {
                    expected: 2,
                    found: 1,
                },
            ),
            (
                "2\n0+\n+0\n\n",
                WrongRowCount {
                    expected: 2,
                    found: 3,
                },
            ),
            (
                "2\n0+\n+00\n",
                WrongLineLength {
                    line: 3,
                    row: 1,
                    expected: 2,
                    found: 3,
                },
            ),
            (
                "2\n0 \n+0\n",
                InvalidCharacter {
                    line: 2,
                    row: 0,
                    col: 1,
                    ch: ' ',
                },
            ),
            (
                "2\n0+\r\n+0\n",
                InvalidCharacter {
                    line: 2,
                    row: 0,
                    col: 2,
                    ch: '\r',
                },
            ),
            ("2\n++\n++\n", NonzeroDiagonal { index: 0 }),
            ("2\n00\n00\n", ZeroOffDiagonal { row: 0, col: 1 }),
        ];
        for (text, err) in cases {
            assert_eq!(
                &SeidelMatrix::parse(text).unwrap_err(),
                err,
                "input {text:?}"
            );
        }
    }

    #[test]
    fn render_is_canonical() {
        let s = SeidelMatrix::parse("003\n0+-\n+0+\n-+0\n").unwrap();
        assert_eq!(s.render(), "3\n0+-\n+0+\n-+0\n");
    }

    fn seidel_strategy(max_n: usize) -> impl Strategy<Value = SeidelMatrix> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(prop_oneof![Just(1i8), Just(-1i8)], n * (n - 1) / 2).prop_map(
                move |bits| {
                    let mut it = bits.into_iter();
                    SeidelMatrix::from_upper_triangle(n, |_, _| it.next().unwrap()).unwrap()
                },
            )
        })
    }

    fn with_signs(max_n: usize) -> impl Strategy<Value = (SeidelMatrix, SwitchingVector)> {
        seidel_strategy(max_n).prop_flat_map(|s| {
            let n = s.order();
            (
                Just(s),
                proptest::collection::vec(prop_oneof![Just(1i8), Just(-1i8)], n),
            )
                .prop_map(|(s, d)| (s, SwitchingVector::new(d).unwrap()))
        })
    }

    proptest! {
        #[test]
        fn parse_render_round_trip(s in seidel_strategy(12)) {
            let text = s.render();
            let back = SeidelMatrix::parse(&text).unwrap();
            prop_assert_eq!(back.render(), text);
            prop_assert_eq!(back, s);
        }

        #[test]
        fn graph_round_trip(s in seidel_strategy(10)) {
            prop_assert_eq!(graph_from_seidel(&s).seidel_matrix().unwrap(), s);
        }

        #[test]
        fn switching_is_valid_involution((s, d) in with_signs(10)) {
            let once = s.apply_switching(&d).unwrap();
            // re-validate through the checked constructor
            prop_assert!(SeidelMatrix::new(once.order(), once.entries().to_vec()).is_ok());
            prop_assert_eq!(once.apply_switching(&d).unwrap(), s);
        }

        #[test]
        fn submatrix_commutes_with_switching((s, d) in with_signs(10), mask in any::<u16>()) {
            let n = s.order();
            let keep: Vec<usize> = (0..n).filter(|i| (mask >> i) & 1 == 1).collect();
            prop_assume!(!keep.is_empty());
            let restricted = SwitchingVector::new(keep.iter().map(|&i| d.signs()[i]).collect()).unwrap();
            let keep = IndexSet::new(keep).unwrap();
            let a = s.apply_switching(&d).unwrap().principal_submatrix(&keep).unwrap();
            let b = s.principal_submatrix(&keep).unwrap().apply_switching(&restricted).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}
