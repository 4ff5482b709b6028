//! Exact matrices over an incline and the structural predicates used by the
//! factorization theory: the signed-determinant split, submatrix machinery,
//! almost principal 2x2 enumeration, diagonal dominance and TN2.

use crate::algebra::Incline;
use crate::error::{Error, Result};
use crate::value::Value;

/// Default cap on the side of permutation-sum determinants (8! = 40320 terms).
pub const DEFAULT_DET_CAP: usize = 8;

/// A strictly increasing set of 1-based row/column positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.is_empty() || indices.windows(2).any(|w| w[0] >= w[1]) || indices[0] == 0 {
            return Err(Error::IndexOutOfBounds(format!(
                "{indices:?} is not a strictly increasing 1-based index set"
            )));
        }
        Ok(IndexSet(indices))
    }

    pub fn pair(a: usize, b: usize) -> Self {
        debug_assert!(a < b && a >= 1);
        IndexSet(vec![a, b])
    }

    pub fn full(n: usize) -> Self {
        IndexSet((1..=n).collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::fmt::Display for IndexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// The two halves of a semiring determinant: `⊕` of permutation products
/// over even permutations (`det_plus`) and over odd ones (`det_minus`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetSplit {
    pub det_plus: Value,
    pub det_minus: Value,
}

/// An almost principal 2x2 submatrix with its determinant split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApmEntry {
    pub alpha: IndexSet,
    pub beta: IndexSet,
    pub det: DetSplit,
}

/// A refuted TN2 check: the 2x2 submatrix on `rows`/`cols` has
/// `det_plus < det_minus` (more precisely, not `det_plus >= det_minus`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tn2Violation {
    pub rows: IndexSet,
    pub cols: IndexSet,
    pub det: DetSplit,
}

/// Which side an almost principal 2x2 submatrix shares: left shares the
/// larger index, right shares the smaller.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ApmSide {
    Left,
    Right,
}

/// An exact matrix bound to a single incline algebra. Immutable; all
/// operations are pure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    algebra: Incline,
    rows: usize,
    cols: usize,
    entries: Vec<Value>,
}

impl Matrix {
    /// Build a matrix from row-major entries, validating that every entry
    /// belongs to `algebra` and that the dimensions are positive.
    pub fn new(algebra: Incline, rows: usize, cols: usize, entries: Vec<Value>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(format!(
                "dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        for v in &entries {
            algebra.check_member(v)?;
        }
        Ok(Matrix {
            algebra,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(algebra: Incline, rows: Vec<Vec<Value>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Matrix::new(algebra, r, c, rows.into_iter().flatten().collect())
    }

    /// Build an `n x m` matrix from an entry function over 0-based indices.
    pub fn from_fn(
        algebra: Incline,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Value,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix::new(algebra, rows, cols, entries)
    }

    pub fn algebra(&self) -> &Incline {
        &self.algebra
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at 0-based position. Panics out of range.
    pub fn get(&self, i: usize, j: usize) -> &Value {
        &self.entries[i * self.cols + j]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub(crate) fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// `None` if symmetric, else the first asymmetric 1-based pair.
    pub fn symmetry_defect(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((1, 1));
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self.get(i, j) != self.get(j, i) {
                    return Some((i + 1, j + 1));
                }
            }
        }
        None
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && self.symmetry_defect().is_none()
    }

    /// The Gram matrix `B Bᵀ` of `self = B`: entry `(i,j)` is
    /// `⊕_k b_ik ⊗ b_jk`. Always symmetric.
    pub fn gram(&self) -> Matrix {
        let alg = &self.algebra;
        let n = self.rows;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = alg.zero();
                for k in 0..self.cols {
                    acc = alg.add(&acc, &alg.mul(self.get(i, k), self.get(j, k)));
                }
                entries.push(acc);
            }
        }
        Matrix {
            algebra: alg.clone(),
            rows: n,
            cols: n,
            entries,
        }
    }

    /// Determinant split with the default side cap.
    pub fn det_split(&self) -> Result<DetSplit> {
        self.det_split_with_cap(DEFAULT_DET_CAP)
    }

    /// `det_plus`/`det_minus` by explicit permutation enumeration with
    /// parity tracking. Semirings admit no cancellation shortcuts, so the
    /// side is capped (`cap!` terms).
    pub fn det_split_with_cap(&self, cap: usize) -> Result<DetSplit> {
        self.require_square()?;
        let n = self.rows;
        if n > cap {
            return Err(Error::DeterminantCap { side: n, cap });
        }
        let alg = self.algebra.clone();
        let mut det_plus = alg.zero();
        let mut det_minus = alg.zero();
        let mut used = vec![false; n];
        // Depth-first over column choices per row; parity accumulates the
        // inversions introduced by each choice. Zero products are pruned:
        // they contribute nothing to an idempotent ⊕.
        #[allow(clippy::too_many_arguments)]
        fn go(
            m: &Matrix,
            alg: &Incline,
            row: usize,
            used: &mut [bool],
            odd: bool,
            product: &Value,
            det_plus: &mut Value,
            det_minus: &mut Value,
        ) {
            let n = m.rows;
            if row == n {
                if odd {
                    *det_minus = alg.add(det_minus, product);
                } else {
                    *det_plus = alg.add(det_plus, product);
                }
                return;
            }
            for col in 0..n {
                if used[col] {
                    continue;
                }
                let term = alg.mul(product, m.get(row, col));
                if row + 1 < n && alg.is_zero(&term) {
                    continue;
                }
                let inversions = used.iter().skip(col + 1).filter(|&&u| u).count();
                used[col] = true;
                go(
                    m,
                    alg,
                    row + 1,
                    used,
                    odd ^ (inversions % 2 == 1),
                    &term,
                    det_plus,
                    det_minus,
                );
                used[col] = false;
            }
        }
        go(
            self,
            &alg,
            0,
            &mut used,
            false,
            &alg.one(),
            &mut det_plus,
            &mut det_minus,
        );
        Ok(DetSplit {
            det_plus,
            det_minus,
        })
    }

    /// The submatrix `A[alpha|beta]`: entry `(i,j)` is `a[alpha_i][beta_j]`.
    pub fn submatrix(&self, alpha: &IndexSet, beta: &IndexSet) -> Result<Matrix> {
        if alpha.len() != beta.len() {
            return Err(Error::DimensionMismatch(format!(
                "index sets {alpha} and {beta} differ in size"
            )));
        }
        for (set, bound) in [(alpha, self.rows), (beta, self.cols)] {
            if set.indices().iter().any(|&i| i > bound) {
                return Err(Error::IndexOutOfBounds(set.to_string()));
            }
        }
        let k = alpha.len();
        let mut entries = Vec::with_capacity(k * k);
        for &i in alpha.indices() {
            for &j in beta.indices() {
                entries.push(self.get(i - 1, j - 1).clone());
            }
        }
        Ok(Matrix {
            algebra: self.algebra.clone(),
            rows: k,
            cols: k,
            entries,
        })
    }

    fn apm_det(&self, i: usize, j: usize, k: usize, side: ApmSide) -> DetSplit {
        // Left:  rows {i,k}, cols {j,k} with i,j < k — split of
        //        [[a_ij, a_ik], [a_kj, a_kk]].
        // Right: rows {k,i}, cols {k,j} with i,j > k — split of
        //        [[a_kk, a_kj], [a_ik, a_ij]].
        let alg = &self.algebra;
        match side {
            ApmSide::Left => DetSplit {
                det_plus: alg.mul(self.get(i, j), self.get(k, k)),
                det_minus: alg.mul(self.get(i, k), self.get(k, j)),
            },
            ApmSide::Right => DetSplit {
                det_plus: alg.mul(self.get(k, k), self.get(i, j)),
                det_minus: alg.mul(self.get(k, j), self.get(i, k)),
            },
        }
    }

    fn apm_entry(&self, i: usize, j: usize, k: usize, side: ApmSide) -> ApmEntry {
        let (alpha, beta) = match side {
            ApmSide::Left => (IndexSet::pair(i + 1, k + 1), IndexSet::pair(j + 1, k + 1)),
            ApmSide::Right => (IndexSet::pair(k + 1, i + 1), IndexSet::pair(k + 1, j + 1)),
        };
        ApmEntry {
            alpha,
            beta,
            det: self.apm_det(i, j, k, side),
        }
    }

    /// All left (or right) almost principal 2x2 submatrices with their
    /// determinant splits, enumerated by ascending shared index, then row
    /// partner, then column partner.
    pub fn almost_principal_2x2(&self, side: ApmSide) -> Result<Vec<ApmEntry>> {
        self.require_square()?;
        let n = self.rows;
        let mut out = Vec::new();
        for k in 0..n {
            let partners: Vec<usize> = match side {
                ApmSide::Left => (0..k).collect(),
                ApmSide::Right => ((k + 1)..n).collect(),
            };
            for &i in &partners {
                for &j in &partners {
                    if i != j {
                        out.push(self.apm_entry(i, j, k, side));
                    }
                }
            }
        }
        Ok(out)
    }

    /// The maximal (in index order) almost principal 2x2 submatrix whose
    /// `det_plus >= det_minus` fails, or `None` if the condition holds
    /// throughout.
    pub fn almost_principal_violation(&self, side: ApmSide) -> Result<Option<ApmEntry>> {
        self.require_square()?;
        let alg = &self.algebra;
        let n = self.rows;
        for k in (0..n).rev() {
            let partners: Vec<usize> = match side {
                ApmSide::Left => (0..k).rev().collect(),
                ApmSide::Right => ((k + 1)..n).rev().collect(),
            };
            for &i in &partners {
                for &j in &partners {
                    if i == j {
                        continue;
                    }
                    let det = self.apm_det(i, j, k, side);
                    if !alg.le(&det.det_minus, &det.det_plus) {
                        return Ok(Some(self.apm_entry(i, j, k, side)));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Diagonal dominance in the incline sense: every `a_ii` dominates the
    /// `⊕` (least upper bound) of its off-diagonal row. The empty `⊕` is `𝟎`,
    /// so a 1x1 matrix is always dominant.
    pub fn is_diagonally_dominant(&self) -> Result<bool> {
        self.require_square()?;
        let alg = &self.algebra;
        for i in 0..self.rows {
            let mut off = alg.zero();
            for j in 0..self.cols {
                if j != i {
                    off = alg.add(&off, self.get(i, j));
                }
            }
            if !alg.le(&off, self.get(i, i)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// TN2 check: `a_ij ⊗ a_kl >= a_il ⊗ a_kj` for all `i<k`, `j<l`.
    /// On failure returns the maximal violating index tuple. Rectangular
    /// matrices are allowed.
    pub fn tn2_violation(&self) -> Option<Tn2Violation> {
        let alg = &self.algebra;
        for i in (0..self.rows).rev() {
            for k in ((i + 1)..self.rows).rev() {
                for j in (0..self.cols).rev() {
                    for l in ((j + 1)..self.cols).rev() {
                        let det_plus = alg.mul(self.get(i, j), self.get(k, l));
                        let det_minus = alg.mul(self.get(i, l), self.get(k, j));
                        if !alg.le(&det_minus, &det_plus) {
                            return Some(Tn2Violation {
                                rows: IndexSet::pair(i + 1, k + 1),
                                cols: IndexSet::pair(j + 1, l + 1),
                                det: DetSplit {
                                    det_plus,
                                    det_minus,
                                },
                            });
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_tn2(&self) -> bool {
        self.tn2_violation().is_none()
    }

    pub fn transpose(&self) -> Matrix {
        let mut entries = Vec::with_capacity(self.rows * self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Matrix {
            algebra: self.algebra.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// Row permutation `P B`: row `i` of the result is row `perm[i]` of `self`.
    pub fn permute_rows(&self, perm: &[usize]) -> Result<Matrix> {
        if perm.len() != self.rows {
            return Err(Error::DimensionMismatch("permutation length".into()));
        }
        Matrix::from_fn(self.algebra.clone(), self.rows, self.cols, |i, j| {
            self.get(perm[i], j).clone()
        })
    }

    /// Symmetric relabeling `P A Pᵀ`: entry `(i,j)` of the result is
    /// `a[perm[i]][perm[j]]`.
    pub fn permute_symmetric(&self, perm: &[usize]) -> Result<Matrix> {
        self.require_square()?;
        if perm.len() != self.rows {
            return Err(Error::DimensionMismatch("permutation length".into()));
        }
        Matrix::from_fn(self.algebra.clone(), self.rows, self.cols, |i, j| {
            self.get(perm[i], perm[j]).clone()
        })
    }

    /// Pretty literal grid, mostly for diagnostics and tests.
    pub fn to_literals(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.algebra.format_value(self.get(i, j)))
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{mat, mm};

    #[test]
    fn gram_of_rank_one_column() {
        let alg = Incline::max_plus();
        let b = mat(&alg, &[&["-2"], &["-3"]]);
        let g = b.gram();
        assert_eq!(g, mat(&alg, &[&["-4", "-5"], &["-5", "-6"]]));
    }

    #[test]
    fn gram_of_identity_pattern() {
        for alg in [Incline::boolean(), Incline::max_min(), Incline::max_plus()] {
            let one = alg.one();
            let zero = alg.zero();
            let b = Matrix::from_fn(alg.clone(), 3, 3, |i, j| {
                if i == j {
                    one.clone()
                } else {
                    zero.clone()
                }
            })
            .unwrap();
            assert_eq!(b.gram(), b);
        }
    }

    #[test]
    fn gram_by_hand_on_maxmin_rows() {
        let alg = Incline::max_min();
        // b rows (1, 0, 1/2) and (1/4, 3/4, 1/2)
        let b = mat(&alg, &[&["1", "0", "1/2"], &["1/4", "3/4", "1/2"]]);
        let g = b.gram();
        // (1,1): max(min(1,1), min(0,0), min(1/2,1/2)) = 1
        assert_eq!(g.get(0, 0), &mm("1"));
        // (1,2): max(min(1,1/4), min(0,3/4), min(1/2,1/2)) = 1/2
        assert_eq!(g.get(0, 1), &mm("1/2"));
        assert_eq!(g.get(1, 0), &mm("1/2"));
        // (2,2): max(1/4, 3/4, 1/2) = 3/4
        assert_eq!(g.get(1, 1), &mm("3/4"));
    }

    #[test]
    fn det_split_2x2_example() {
        let alg = Incline::max_min();
        let a = mat(&alg, &[&["1/4", "1/2"], &["1/2", "3/4"]]);
        let d = a.det_split().unwrap();
        assert_eq!(d.det_plus, mm("1/4"));
        assert_eq!(d.det_minus, mm("1/2"));
    }

    #[test]
    fn det_split_1x1_has_zero_minus() {
        let alg = Incline::max_plus();
        let a = mat(&alg, &[&["-2"]]);
        let d = a.det_split().unwrap();
        assert_eq!(d.det_plus, alg.parse_value("-2").unwrap());
        assert_eq!(d.det_minus, alg.zero());
    }

    #[test]
    fn det_split_3x3_constant() {
        // All entries 1/2: every permutation product is 1/2, three even and
        // three odd permutations.
        let alg = Incline::max_min();
        let a = Matrix::from_fn(alg.clone(), 3, 3, |_, _| mm("1/2")).unwrap();
        let d = a.det_split().unwrap();
        assert_eq!(d.det_plus, mm("1/2"));
        assert_eq!(d.det_minus, mm("1/2"));
    }

    #[test]
    fn det_split_respects_cap() {
        let alg = Incline::boolean();
        let a = Matrix::from_fn(alg.clone(), 3, 3, |_, _| alg.one()).unwrap();
        assert!(matches!(
            a.det_split_with_cap(2),
            Err(Error::DeterminantCap { side: 3, cap: 2 })
        ));
    }

    #[test]
    fn submatrix_selects_rows_and_cols() {
        let alg = Incline::max_min();
        let a = mat(
            &alg,
            &[
                &["1", "1/4", "1/2", "0"],
                &["1/4", "3/4", "1/2", "0"],
                &["1/2", "1/2", "3/4", "0"],
                &["0", "0", "0", "0"],
            ],
        );
        let sub = a
            .submatrix(&IndexSet::pair(2, 3), &IndexSet::pair(1, 3))
            .unwrap();
        assert_eq!(sub, mat(&alg, &[&["1/4", "1/2"], &["1/2", "3/4"]]));
        let full = IndexSet::full(4);
        assert_eq!(a.submatrix(&full, &full).unwrap(), a);
        let b = mat(&alg, &[&["0", "1/4"], &["1/2", "3/4"]]);
        let one = b
            .submatrix(
                &IndexSet::new(vec![1]).unwrap(),
                &IndexSet::new(vec![2]).unwrap(),
            )
            .unwrap();
        assert_eq!(one, mat(&alg, &[&["1/4"]]));
    }

    #[test]
    fn submatrix_checks_sizes_and_bounds() {
        let alg = Incline::boolean();
        let a = Matrix::from_fn(alg.clone(), 2, 2, |_, _| alg.one()).unwrap();
        assert!(a
            .submatrix(&IndexSet::pair(1, 2), &IndexSet::new(vec![1]).unwrap())
            .is_err());
        assert!(a
            .submatrix(&IndexSet::pair(1, 3), &IndexSet::pair(1, 2))
            .is_err());
    }

    #[test]
    fn almost_principal_lists_for_3x3() {
        let alg = Incline::max_min();
        let a = mat(
            &alg,
            &[
                &["3/4", "1/4", "1/2"],
                &["1/4", "1/2", "1/5"],
                &["1/2", "1/5", "1"],
            ],
        );
        let left = a.almost_principal_2x2(ApmSide::Left).unwrap();
        assert_eq!(left.len(), 2);
        // Both left submatrices share index 3: det_plus = a33 ⊗ a12,
        // det_minus = a13 ⊗ a23 for symmetric input.
        for e in &left {
            assert_eq!(e.det.det_plus, mm("1/4"));
            assert_eq!(e.det.det_minus, mm("1/5"));
        }
        let alphas: Vec<_> = left.iter().map(|e| e.alpha.indices().to_vec()).collect();
        assert!(alphas.contains(&vec![1, 3]) && alphas.contains(&vec![2, 3]));

        let right = a.almost_principal_2x2(ApmSide::Right).unwrap();
        assert_eq!(right.len(), 2);
        // Right submatrices share index 1: det_plus = a11 ⊗ a23.
        for e in &right {
            assert_eq!(e.det.det_plus, mm("1/5"));
            assert_eq!(e.det.det_minus, mm("1/4"));
        }
        let pairs: Vec<_> = right
            .iter()
            .map(|e| (e.alpha.indices().to_vec(), e.beta.indices().to_vec()))
            .collect();
        assert!(pairs.contains(&(vec![1, 3], vec![1, 2])));
        assert!(pairs.contains(&(vec![1, 2], vec![1, 3])));
    }

    #[test]
    fn almost_principal_empty_for_2x2() {
        let alg = Incline::boolean();
        let a = Matrix::from_fn(alg.clone(), 2, 2, |_, _| alg.one()).unwrap();
        assert!(a.almost_principal_2x2(ApmSide::Left).unwrap().is_empty());
        assert!(a.almost_principal_2x2(ApmSide::Right).unwrap().is_empty());
    }

    #[test]
    fn diagonal_dominance_cases() {
        let mp = Incline::max_plus();
        let a = mat(&mp, &[&["-4", "-5"], &["-5", "-6"]]);
        assert!(!a.is_diagonally_dominant().unwrap());

        let mm_alg = Incline::max_min();
        let b = mat(
            &mm_alg,
            &[
                &["3/4", "0", "1/4"],
                &["0", "1/2", "1/2"],
                &["1/4", "1/2", "1"],
            ],
        );
        assert!(b.is_diagonally_dominant().unwrap());

        let id = Matrix::from_fn(mm_alg.clone(), 3, 3, |i, j| {
            if i == j {
                mm_alg.one()
            } else {
                mm_alg.zero()
            }
        })
        .unwrap();
        assert!(id.is_diagonally_dominant().unwrap());
    }

    #[test]
    fn tn2_all_equal_matrix_holds() {
        let alg = Incline::max_min();
        let a = Matrix::from_fn(alg.clone(), 3, 4, |_, _| mm("1/3")).unwrap();
        assert!(a.is_tn2());
    }

    #[test]
    fn tn2_simple_2x2() {
        let alg = Incline::max_min();
        let a = mat(&alg, &[&["1", "1/2"], &["1/2", "1/2"]]);
        assert!(a.is_tn2());
    }

    #[test]
    fn tn2_violation_on_section4_matrix() {
        let alg = Incline::max_min();
        let a = mat(
            &alg,
            &[
                &["1", "1/4", "1/2", "0"],
                &["1/4", "3/4", "1/2", "0"],
                &["1/2", "1/2", "3/4", "0"],
                &["0", "0", "0", "0"],
            ],
        );
        let v = a.tn2_violation().expect("TN2 must fail");
        assert_eq!(v.rows.indices(), &[2, 3]);
        assert_eq!(v.cols.indices(), &[1, 3]);
        assert_eq!(v.det.det_plus, mm("1/4"));
        assert_eq!(v.det.det_minus, mm("1/2"));
        let w = a
            .almost_principal_violation(ApmSide::Left)
            .unwrap()
            .expect("left APM must fail");
        assert_eq!(w.alpha.indices(), &[2, 3]);
        assert_eq!(w.beta.indices(), &[1, 3]);
        assert_eq!(w.det.det_plus, mm("1/4"));
        assert_eq!(w.det.det_minus, mm("1/2"));
    }

    #[test]
    fn entries_must_belong_to_the_algebra() {
        let alg = Incline::max_min();
        let err = Matrix::from_rows(alg, vec![vec![Value::Bool(true)]]).unwrap_err();
        assert!(matches!(err, Error::CarrierMismatch { .. }));
    }
}
