//! Complete positivity over normal inclines: the entry-local test, DMD
//! normalization, the pairwise fallback decomposition, and the bounded
//! support-3 decomposition.
//!
//! Over a normal incline, a symmetric matrix is completely positive exactly
//! when every 2x2 principal submatrix has `det_plus >= det_minus`, i.e.
//! `a_ii ⊗ a_jj >= a_ij ⊗ a_ij`. The constructions here turn that local
//! certificate into an explicit `A = ⊕_j b_j b_jᵀ` with at most
//! `max{n, ⌊n²/4⌋}` factors, each of support at most 3 for `n >= 4`.

use crate::algebra::Incline;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::value::Value;

/// Verdict of the complete-positivity test, with a refuting principal
/// 2x2 pair (1-based) when negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CpVerdict {
    Cp,
    NotCp { i: usize, j: usize },
}

impl CpVerdict {
    pub fn is_cp(&self) -> bool {
        matches!(self, CpVerdict::Cp)
    }
}

/// The `A = D M D` normalization: `D` is the diagonal of square roots of
/// the diagonal of `A`, and `M` is symmetric with unit diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalization {
    /// `D_i = sqrt(a_ii)`.
    pub diagonal: Vec<Value>,
    /// `M`: unit diagonal, `m_ij = residual(a_ij, sqrt(a_ii) ⊗ sqrt(a_jj))`.
    pub core: Matrix,
}

/// An ordered list of rank-one factor vectors `b_j` with support metadata:
/// represents `A = ⊕_j b_j b_jᵀ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CpDecomposition {
    pub algebra: Incline,
    /// Side of the target matrix.
    pub n: usize,
    /// Factor vectors, each of length `n`.
    pub factors: Vec<Vec<Value>>,
    /// Number of nonzero entries of each factor.
    pub supports: Vec<usize>,
    /// Audit record of the internal symmetric relabeling: the original
    /// 1-based row indices in the order the construction consumed them
    /// (identity when no relabeling happened). Factors are always stored
    /// in the original row order, so the gram of the factors reproduces
    /// the target directly.
    pub permutation: Vec<usize>,
}

impl CpDecomposition {
    fn from_factors(
        algebra: Incline,
        n: usize,
        factors: Vec<Vec<Value>>,
        permutation: Vec<usize>,
    ) -> Self {
        let supports = factors
            .iter()
            .map(|f| f.iter().filter(|v| !algebra.is_zero(v)).count())
            .collect();
        CpDecomposition {
            algebra,
            n,
            factors,
            supports,
            permutation,
        }
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn max_support(&self) -> usize {
        self.supports.iter().copied().max().unwrap_or(0)
    }
}

/// Gram matrix `⊕_j b_j b_jᵀ` of a factor list, as row-major entries.
pub(crate) fn gram_of_factors(alg: &Incline, n: usize, factors: &[Vec<Value>]) -> Vec<Value> {
    let mut acc = vec![alg.zero(); n * n];
    for f in factors {
        for i in 0..n {
            if alg.is_zero(&f[i]) {
                continue;
            }
            for j in 0..n {
                let term = alg.mul(&f[i], &f[j]);
                acc[i * n + j] = alg.add(&acc[i * n + j], &term);
            }
        }
    }
    acc
}

/// Test complete positivity of a symmetric matrix over a normal (or
/// regular LI) incline: every 2x2 principal submatrix must satisfy
/// `a_ii ⊗ a_jj >= a_ij ⊗ a_ij`. On failure reports the maximal violating
/// pair in index order.
pub fn is_cp(a: &Matrix) -> Result<CpVerdict> {
    a.require_square()?;
    let alg = a.algebra();
    if !(alg.normal() || alg.regular()) {
        return Err(Error::UnsupportedCarrier {
            requirement: "normal or regular",
            carrier: alg.kind_name(),
        });
    }
    if let Some((i, j)) = a.symmetry_defect() {
        return Err(Error::NotSymmetric { i, j });
    }
    let n = a.rows();
    for i in (0..n).rev() {
        for j in ((i + 1)..n).rev() {
            let lhs = alg.mul(a.get(i, j), a.get(j, i));
            let rhs = alg.mul(a.get(i, i), a.get(j, j));
            if !alg.le(&lhs, &rhs) {
                return Ok(CpVerdict::NotCp { i: i + 1, j: j + 1 });
            }
        }
    }
    Ok(CpVerdict::Cp)
}

/// The regular-incline characterization: over a multiplicatively idempotent
/// carrier with residuals, a matrix is completely positive iff it is
/// symmetric and diagonally dominant. Agrees with [`is_cp`] on symmetric
/// input.
pub fn is_cp_regular(a: &Matrix) -> Result<bool> {
    a.require_square()?;
    let alg = a.algebra();
    if !alg.regular() {
        return Err(Error::UnsupportedCarrier {
            requirement: "regular",
            carrier: alg.kind_name(),
        });
    }
    Ok(a.is_symmetric() && a.is_diagonally_dominant()?)
}

fn require_cp(a: &Matrix) -> Result<()> {
    match is_cp(a)? {
        CpVerdict::Cp => Ok(()),
        CpVerdict::NotCp { i, j } => Err(Error::NotCompletelyPositive { i, j }),
    }
}

/// Zero-diagonal forcing: if `a_ii = 𝟎` and `A` is CP, the whole row is `𝟎`
/// (condition (3) plus the unique square root of `𝟎`).
fn check_zero_diagonal_forcing(a: &Matrix) -> Result<()> {
    let alg = a.algebra();
    for i in 0..a.rows() {
        if alg.is_zero(a.get(i, i)) {
            for j in 0..a.cols() {
                if !alg.is_zero(a.get(i, j)) {
                    return Err(Error::Internal(format!(
                        "zero diagonal row {} holds a nonzero entry at column {}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Factor `A = D M D` with `D = diag(sqrt(a_11), ..., sqrt(a_nn))` and `M`
/// symmetric with unit diagonal. Requires `A` completely positive.
pub fn normalize(a: &Matrix) -> Result<Normalization> {
    require_cp(a)?;
    check_zero_diagonal_forcing(a)?;
    let alg = a.algebra().clone();
    let n = a.rows();
    let diagonal: Vec<Value> = (0..n).map(|i| alg.sqrt(a.get(i, i))).collect();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            if i == j {
                row.push(alg.one());
                continue;
            }
            let bound = alg.mul(&diagonal[i], &diagonal[j]);
            // Follows from condition (3) and monotone multiplicative roots.
            if !alg.le(a.get(i, j), &bound) {
                return Err(Error::Internal(format!(
                    "entry ({},{}) exceeds the product of diagonal roots",
                    i + 1,
                    j + 1
                )));
            }
            row.push(alg.residual_in(a.get(i, j), &bound));
        }
        rows.push(row);
    }
    Ok(Normalization {
        diagonal,
        core: Matrix::from_rows(alg, rows)?,
    })
}

/// Indices with a nonzero diagonal entry; the complement is reinserted as
/// zero rows in any decomposition.
fn nonzero_diagonal(a: &Matrix) -> Vec<usize> {
    let alg = a.algebra();
    (0..a.rows())
        .filter(|&i| !alg.is_zero(a.get(i, i)))
        .collect()
}

fn principal_submatrix(a: &Matrix, kept: &[usize]) -> Result<Matrix> {
    Matrix::from_fn(a.algebra().clone(), kept.len(), kept.len(), |i, j| {
        a.get(kept[i], kept[j]).clone()
    })
}

/// Expand a factor over the stripped index set back to full length.
fn expand_factor(alg: &Incline, n: usize, kept: &[usize], local: &[Value]) -> Vec<Value> {
    let mut full = vec![alg.zero(); n];
    for (r, v) in local.iter().enumerate() {
        full[kept[r]] = v.clone();
    }
    full
}

fn identity_permutation(n: usize) -> Vec<usize> {
    (1..=n).collect()
}

/// The pairwise decomposition behind the DMD equivalence: for each pair
/// `k < l` of the unit-diagonal core, three columns — `sqrt(m_kl)` at rows
/// `k,l`, `𝟏` at `k`, `𝟏` at `l` — all scaled by `D`. At most
/// `3·n(n−1)/2` factors; all-zero columns are dropped and duplicate
/// columns deduplicated (sound because `⊕` is idempotent).
pub fn pairwise_decompose(a: &Matrix) -> Result<CpDecomposition> {
    require_cp(a)?;
    check_zero_diagonal_forcing(a)?;
    let alg = a.algebra().clone();
    let n = a.rows();
    let kept = nonzero_diagonal(a);
    let mut factors: Vec<Vec<Value>> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let mut push = |factors: &mut Vec<Vec<Value>>, f: Vec<Value>| {
        if f.iter().all(|v| alg.is_zero(v)) {
            return;
        }
        if seen.insert(f.clone()) {
            factors.push(f);
        }
    };
    if kept.len() == 1 {
        let i = kept[0];
        let mut f = vec![alg.zero(); n];
        f[i] = alg.sqrt(a.get(i, i));
        push(&mut factors, f);
    } else if !kept.is_empty() {
        let stripped = principal_submatrix(a, &kept)?;
        let norm = normalize(&stripped)?;
        let d = &norm.diagonal;
        let m = &norm.core;
        let n_s = kept.len();
        for k in 0..n_s {
            for l in (k + 1)..n_s {
                let root = alg.sqrt(m.get(k, l));
                let mut c1 = vec![alg.zero(); n_s];
                c1[k] = alg.mul(&d[k], &root);
                c1[l] = alg.mul(&d[l], &root);
                let mut c2 = vec![alg.zero(); n_s];
                c2[k] = d[k].clone();
                let mut c3 = vec![alg.zero(); n_s];
                c3[l] = d[l].clone();
                for c in [c1, c2, c3] {
                    push(&mut factors, expand_factor(&alg, n, &kept, &c));
                }
            }
        }
    }
    Ok(CpDecomposition::from_factors(
        alg,
        n,
        factors,
        identity_permutation(n),
    ))
}

/// `max{n, ⌊n²/4⌋}`: the factor-count bound realized by [`djl_decompose`].
pub fn cp_rank_upper_bound(n: usize) -> usize {
    n.max(n * n / 4)
}

struct DjlBuilder<'a> {
    alg: &'a Incline,
    n_stripped: usize,
    factors: Vec<Vec<Value>>,
    order: Vec<usize>,
}

impl<'a> DjlBuilder<'a> {
    /// Strict order on a totally ordered carrier.
    fn lt(&self, x: &Value, y: &Value) -> bool {
        x != y && self.alg.le(x, y)
    }

    fn sparse(&self, entries: &[(usize, Value)], map: &[usize]) -> Vec<Value> {
        let mut f = vec![self.alg.zero(); self.n_stripped];
        for (local, v) in entries {
            f[map[*local]] = v.clone();
        }
        f
    }

    fn emit(&mut self, entries: &[(usize, Value)], map: &[usize]) {
        let f = self.sparse(entries, map);
        self.factors.push(f);
    }

    fn check(&self, ok: bool, what: &str) -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(Error::Internal(format!(
                "support-3 construction invariant failed: {what}"
            )))
        }
    }

    /// Decompose a symmetric unit-diagonal matrix, given as a local grid
    /// plus the map from local indices to stripped-matrix rows.
    #[allow(clippy::needless_range_loop)]
    fn run(&mut self, m: Vec<Vec<Value>>, map: Vec<usize>) -> Result<()> {
        let alg = self.alg;
        let one = alg.one();
        let n = map.len();
        match n {
            0 => return Ok(()),
            1 => {
                self.emit(&[(0, one)], &map);
                self.order.push(map[0]);
                return Ok(());
            }
            2 => {
                self.emit(&[(0, one.clone()), (1, m[0][1].clone())], &map);
                self.emit(&[(1, one)], &map);
                self.order.extend([map[0], map[1]]);
                return Ok(());
            }
            3 => {
                self.emit(&[(0, one.clone()), (1, m[0][1].clone())], &map);
                self.emit(&[(1, one.clone()), (2, m[1][2].clone())], &map);
                self.emit(&[(0, m[0][2].clone()), (2, one)], &map);
                self.order.extend([map[0], map[1], map[2]]);
                return Ok(());
            }
            _ => {}
        }

        // Relabel so the globally smallest off-diagonal entry sits at (1,3)
        // and the row-1 maximum at (1,2); ties lexicographic.
        let (mut p, mut q) = (0, 1);
        for i in 0..n {
            for j in 0..n {
                if i != j && self.lt(&m[i][j], &m[p][q]) {
                    (p, q) = (i, j);
                }
            }
        }
        let mut r2 = usize::MAX;
        for j in 0..n {
            if j != p && j != q && (r2 == usize::MAX || self.lt(&m[p][r2], &m[p][j])) {
                r2 = j;
            }
        }
        let mut sigma = vec![p, r2, q];
        sigma.extend((0..n).filter(|&i| i != p && i != q && i != r2));
        let mm: Vec<Vec<Value>> = sigma
            .iter()
            .map(|&i| sigma.iter().map(|&j| m[i][j].clone()).collect())
            .collect();
        let map: Vec<usize> = sigma.iter().map(|&i| map[i]).collect();
        let m = mm;

        // The "will not affect" inequalities the construction relies on.
        self.check(
            alg.le(&alg.mul(&m[0][1], &m[0][2]), &m[1][2]),
            "a12 ⊗ a13 <= a23",
        )?;
        let aux_ok = |i: usize| alg.le(&alg.mul(&m[0][i], &m[1][i]), &m[0][1]);

        match n {
            4 => {
                self.emit(
                    &[(0, one.clone()), (1, m[0][1].clone()), (2, m[0][2].clone())],
                    &map,
                );
                self.emit(&[(1, one.clone()), (2, m[1][2].clone())], &map);
                self.emit(&[(2, one.clone()), (3, m[2][3].clone())], &map);
                self.check(aux_ok(3), "a14 ⊗ a24 <= a12")?;
                self.emit(
                    &[(0, m[0][3].clone()), (1, m[1][3].clone()), (3, one)],
                    &map,
                );
                self.order.extend_from_slice(&map);
                Ok(())
            }
            5 => {
                self.emit(
                    &[(0, one.clone()), (1, m[0][1].clone()), (2, m[0][2].clone())],
                    &map,
                );
                self.emit(&[(1, one.clone()), (2, m[1][2].clone())], &map);
                for i in [3, 4] {
                    self.check(aux_ok(i), "a1i ⊗ a2i <= a12")?;
                    self.emit(
                        &[(0, m[0][i].clone()), (1, m[1][i].clone()), (i, one.clone())],
                        &map,
                    );
                }
                // Tail block on locals {2,3,4}; split on the smallest of
                // m[2][3], m[2][4], m[3][4]. A tie goes to the first case.
                let tail_corner_smallest =
                    self.lt(&m[3][4], &m[2][3]) && self.lt(&m[3][4], &m[2][4]);
                if !tail_corner_smallest {
                    self.check(
                        alg.le(&alg.mul(&m[2][3], &m[2][4]), &m[3][4]),
                        "a34 ⊗ a35 <= a45",
                    )?;
                    self.emit(
                        &[(2, one.clone()), (3, m[2][3].clone()), (4, m[2][4].clone())],
                        &map,
                    );
                    self.emit(&[(3, m[3][4].clone()), (4, one)], &map);
                } else {
                    self.emit(
                        &[(2, one.clone()), (3, m[2][3].clone()), (4, m[3][4].clone())],
                        &map,
                    );
                    self.emit(
                        &[(2, m[2][4].clone()), (3, m[3][4].clone()), (4, one)],
                        &map,
                    );
                }
                self.order.extend_from_slice(&map);
                Ok(())
            }
            _ => {
                self.emit(
                    &[(0, one.clone()), (1, m[0][1].clone()), (2, m[0][2].clone())],
                    &map,
                );
                self.emit(&[(1, one.clone()), (2, m[1][2].clone())], &map);
                for i in 3..n {
                    self.check(aux_ok(i), "a1i ⊗ a2i <= a12")?;
                    self.emit(
                        &[(0, m[0][i].clone()), (1, m[1][i].clone()), (i, one.clone())],
                        &map,
                    );
                }
                self.order.extend([map[0], map[1]]);
                let sub: Vec<Vec<Value>> = (2..n)
                    .map(|i| (2..n).map(|j| m[i][j].clone()).collect())
                    .collect();
                self.run(sub, map[2..].to_vec())
            }
        }
    }
}

/// The bounded support-3 decomposition for totally ordered normal carriers:
/// at most `max{n, ⌊n²/4⌋}` rank-one factors, each of support at most 3
/// when `n >= 4`. Base cases handle sides up to 5 directly; larger sides
/// peel two rows per step and recurse.
pub fn djl_decompose(a: &Matrix) -> Result<CpDecomposition> {
    let alg = a.algebra().clone();
    if !(alg.totally_ordered() && alg.normal()) {
        return Err(Error::UnsupportedCarrier {
            requirement: "totally ordered normal",
            carrier: alg.kind_name(),
        });
    }
    require_cp(a)?;
    check_zero_diagonal_forcing(a)?;
    let n = a.rows();
    let kept = nonzero_diagonal(a);
    let mut factors: Vec<Vec<Value>> = Vec::new();
    let mut order: Vec<usize> = Vec::new();
    if !kept.is_empty() {
        let stripped = principal_submatrix(a, &kept)?;
        let norm = normalize(&stripped)?;
        let n_s = kept.len();
        let grid: Vec<Vec<Value>> = (0..n_s)
            .map(|i| (0..n_s).map(|j| norm.core.get(i, j).clone()).collect())
            .collect();
        let mut builder = DjlBuilder {
            alg: &alg,
            n_stripped: n_s,
            factors: Vec::new(),
            order: Vec::new(),
        };
        builder.run(grid, (0..n_s).collect())?;
        for f in &mut builder.factors {
            for (r, v) in f.iter_mut().enumerate() {
                *v = alg.mul(&norm.diagonal[r], v);
            }
        }
        factors = builder
            .factors
            .iter()
            .map(|f| expand_factor(&alg, n, &kept, f))
            .collect();
        order = builder.order;
    }
    let mut permutation: Vec<usize> = order.iter().map(|&r| kept[r] + 1).collect();
    permutation.extend((0..n).filter(|i| !kept.contains(i)).map(|i| i + 1));
    Ok(CpDecomposition::from_factors(alg, n, factors, permutation))
}

/// Check that a decomposition reproduces `A` exactly and that its recorded
/// supports are correct.
pub fn verify_decomposition(a: &Matrix, dec: &CpDecomposition) -> Result<bool> {
    if a.algebra() != &dec.algebra {
        return Err(Error::AlgebraMismatch);
    }
    a.require_square()?;
    if a.rows() != dec.n {
        return Err(Error::DimensionMismatch(format!(
            "matrix side {} but decomposition is for side {}",
            a.rows(),
            dec.n
        )));
    }
    if dec.supports.len() != dec.factors.len() {
        return Err(Error::DimensionMismatch(
            "supports and factors differ in length".into(),
        ));
    }
    let alg = a.algebra();
    for f in &dec.factors {
        if f.len() != dec.n {
            return Err(Error::DimensionMismatch(
                "factor length differs from the matrix side".into(),
            ));
        }
        for v in f {
            alg.check_member(v)?;
        }
    }
    for (f, &s) in dec.factors.iter().zip(&dec.supports) {
        if f.iter().filter(|v| !alg.is_zero(v)).count() != s {
            return Ok(false);
        }
    }
    let gram = gram_of_factors(alg, dec.n, &dec.factors);
    for i in 0..dec.n {
        for j in 0..dec.n {
            if &gram[i * dec.n + j] != a.get(i, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
