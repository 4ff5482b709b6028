//! Independent brute-force ground truth: exact CP-rank by exhaustive factor
//! search over a finite value set, triangular-factor existence proofs by
//! exhaustion, and rank-bound tightness candidates.
//!
//! Searches restrict factor entries to a generated subincline of the
//! matrix entries. For multiplicatively idempotent carriers that
//! restriction loses nothing: any factorization can be retracted onto the
//! subincline entry by entry. For max-plus and max-times the restriction
//! is sound but not complete, so "not found" over a truncated carrier is
//! reported as such rather than as nonexistence.

use std::collections::BTreeSet;

use crate::algebra::Incline;
use crate::cp::gram_of_factors;
use crate::error::{Error, Result};
use crate::factor::TriMode;
use crate::matrix::Matrix;
use crate::value::Value;

/// Budgets for the exhaustive searches. The defaults keep paper-scale
/// instances (Boolean side 4, max-min side 3) in the milliseconds range;
/// exceeding them is an honest resource error.
#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Cap on the searched value set.
    pub max_carrier: usize,
    /// Cap on the matrix side.
    pub max_side: usize,
    /// Cap on the requested factor width.
    pub max_width: usize,
    /// Cap on explored search nodes.
    pub node_budget: u64,
    /// Closure rounds for [`generated_subincline`] on carriers where the
    /// closure may not terminate.
    pub closure_rounds: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_carrier: 8,
            max_side: 5,
            max_width: 8,
            node_budget: 10_000_000,
            closure_rounds: 3,
        }
    }
}

/// A finite value set closed (or closed up to a round cap) under the
/// carrier operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subincline {
    pub algebra: Incline,
    /// Canonically ordered member list.
    pub values: Vec<Value>,
    /// True when the round cap was hit before reaching a fixed point.
    pub truncated: bool,
}

fn closure_round(alg: &Incline, set: &BTreeSet<Value>) -> Vec<Value> {
    let mut fresh = Vec::new();
    let mut emit = |v: Value, set: &BTreeSet<Value>| {
        if !set.contains(&v) && !fresh.contains(&v) {
            fresh.push(v);
        }
    };
    for x in set {
        emit(alg.sqrt(x), set);
        for y in set {
            emit(alg.add(x, y), set);
            emit(alg.mul(x, y), set);
            if alg.le(x, y) {
                emit(alg.residual_in(x, y), set);
            }
        }
    }
    fresh
}

/// The smallest set containing `seeds`, `𝟎`, `𝟏`, closed under `⊕`, `⊗`,
/// square roots and residuals. Finite carriers and idempotent
/// multiplication close in a few rounds; for max-plus/max-times the
/// closure is iterated `rounds` times and flagged truncated if a fixed
/// point was not reached.
pub fn generated_subincline(alg: &Incline, seeds: &[Value], rounds: usize) -> Result<Subincline> {
    for v in seeds {
        alg.check_member(v)?;
    }
    let mut set: BTreeSet<Value> = seeds.iter().cloned().collect();
    set.insert(alg.zero());
    set.insert(alg.one());
    let mut closed = false;
    for _ in 0..rounds {
        let fresh = closure_round(alg, &set);
        if fresh.is_empty() {
            closed = true;
            break;
        }
        set.extend(fresh);
    }
    if !closed {
        closed = closure_round(alg, &set).is_empty();
    }
    Ok(Subincline {
        algebra: alg.clone(),
        values: set.into_iter().collect(),
        truncated: !closed,
    })
}

/// Outcome of an exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    /// A witness was found at the recorded width.
    Found { width: usize },
    /// Every candidate up to the requested width was enumerated.
    Exhausted,
    /// The node budget ran out; the transcript is partial.
    BudgetExceeded,
}

/// A machine-checkable record of an exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchTranscript {
    pub algebra: Incline,
    /// The value set searched, canonically ordered.
    pub carrier: Vec<Value>,
    /// Whether the carrier restriction is known incomplete.
    pub carrier_truncated: bool,
    pub widths_tried: Vec<usize>,
    pub outcome: SearchOutcome,
    /// Factor columns (CP-rank search) or factor rows (triangular search).
    pub witness: Option<Vec<Vec<Value>>>,
    pub nodes_explored: u64,
}

impl SearchTranscript {
    pub fn found_width(&self) -> Option<usize> {
        match self.outcome {
            SearchOutcome::Found { width } => Some(width),
            _ => None,
        }
    }
}

/// The value set a factor search draws entries from: matrix entries, their
/// square roots, `𝟎`, `𝟏`, closed under the operations where the closure
/// terminates (always for regular carriers; otherwise flagged truncated).
fn search_values(a: &Matrix, opts: &SearchOptions) -> Result<Subincline> {
    let alg = a.algebra().clone();
    let mut seeds = Vec::new();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let v = a.get(i, j).clone();
            seeds.push(alg.sqrt(&v));
            seeds.push(v);
        }
    }
    let rounds = if alg.regular() {
        // Idempotent multiplication closes quickly; rounds only bound
        // pathological lattices.
        opts.closure_rounds.max(8)
    } else {
        0
    };
    generated_subincline(&alg, &seeds, rounds)
}

struct Budget {
    nodes: u64,
    limit: u64,
}

impl Budget {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.nodes <= self.limit
    }
}

/// Exact CP-rank by exhaustive search: the smallest `k <= max_width` such
/// that some `n x k` matrix over the searched value set has `B Bᵀ = A`.
/// Columns satisfy the entrywise bound `b_i ⊗ b_j <= a_ij` and are chosen
/// in a fixed canonical order, so transcripts are deterministic.
pub fn brute_force_cp_rank(
    a: &Matrix,
    max_width: usize,
    opts: &SearchOptions,
) -> Result<SearchTranscript> {
    a.require_square()?;
    if let Some((i, j)) = a.symmetry_defect() {
        return Err(Error::NotSymmetric { i, j });
    }
    if a.rows() > opts.max_side {
        return Err(Error::SearchLimit(format!(
            "side {} exceeds the cap {}",
            a.rows(),
            opts.max_side
        )));
    }
    if max_width > opts.max_width {
        return Err(Error::SearchLimit(format!(
            "width {} exceeds the cap {}",
            max_width, opts.max_width
        )));
    }
    let alg = a.algebra().clone();
    let n = a.rows();
    let sub = search_values(a, opts)?;
    // Only values that can sit in some row survive: b ⊗ b <= a_ii.
    let mut values: Vec<Value> = sub
        .values
        .iter()
        .filter(|v| (0..n).any(|i| alg.le(&alg.mul(v, v), a.get(i, i))))
        .cloned()
        .collect();
    values.reverse();
    if values.len() > opts.max_carrier {
        return Err(Error::SearchLimit(format!(
            "carrier set of {} values exceeds the cap {}",
            values.len(),
            opts.max_carrier
        )));
    }

    let mut budget = Budget {
        nodes: 0,
        limit: opts.node_budget,
    };
    let mut transcript = SearchTranscript {
        algebra: alg.clone(),
        carrier: values.clone(),
        carrier_truncated: sub.truncated,
        widths_tried: Vec::new(),
        outcome: SearchOutcome::Exhausted,
        witness: None,
        nodes_explored: 0,
    };

    let zero_matrix = (0..n).all(|i| (0..n).all(|j| alg.is_zero(a.get(i, j))));
    if zero_matrix {
        transcript.widths_tried.push(0);
        transcript.outcome = SearchOutcome::Found { width: 0 };
        transcript.witness = Some(Vec::new());
        return Ok(transcript);
    }

    // Enumerate all admissible columns in descending canonical order.
    let mut columns: Vec<Vec<Value>> = Vec::new();
    fn gen_columns(
        alg: &Incline,
        a: &Matrix,
        values: &[Value],
        prefix: &mut Vec<Value>,
        budget: &mut Budget,
        out: &mut Vec<Vec<Value>>,
    ) -> bool {
        let n = a.rows();
        if prefix.len() == n {
            if prefix.iter().any(|v| !alg.is_zero(v)) {
                out.push(prefix.clone());
            }
            return true;
        }
        let row = prefix.len();
        'next: for v in values {
            if !budget.tick() {
                return false;
            }
            for (i, u) in prefix.iter().enumerate() {
                if !alg.le(&alg.mul(u, v), a.get(i, row)) {
                    continue 'next;
                }
            }
            if !alg.le(&alg.mul(v, v), a.get(row, row)) {
                continue;
            }
            prefix.push(v.clone());
            let ok = gen_columns(alg, a, values, prefix, budget, out);
            prefix.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    let within = gen_columns(&alg, a, &values, &mut Vec::new(), &mut budget, &mut columns);
    if !within {
        transcript.outcome = SearchOutcome::BudgetExceeded;
        transcript.nodes_explored = budget.nodes;
        return Ok(transcript);
    }

    // Upper-triangle targets and each column's contribution to them.
    let targets: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let goal: Vec<Value> = targets.iter().map(|&(i, j)| a.get(i, j).clone()).collect();
    let terms: Vec<Vec<Value>> = columns
        .iter()
        .map(|c| {
            targets
                .iter()
                .map(|&(i, j)| alg.mul(&c[i], &c[j]))
                .collect()
        })
        .collect();
    // reach[c][t]: ⊕ of term t over columns c.. — used to prune branches
    // that can no longer attain a target.
    let mut reach = vec![vec![alg.zero(); targets.len()]; columns.len() + 1];
    for c in (0..columns.len()).rev() {
        for t in 0..targets.len() {
            reach[c][t] = alg.add(&reach[c + 1][t], &terms[c][t]);
        }
    }

    struct Cover<'a> {
        alg: &'a Incline,
        goal: &'a [Value],
        terms: &'a [Vec<Value>],
        reach: &'a [Vec<Value>],
        budget: &'a mut Budget,
        chosen: Vec<usize>,
        witness: Option<Vec<usize>>,
        exceeded: bool,
    }

    impl Cover<'_> {
        #[allow(clippy::needless_range_loop)]
        fn dfs(&mut self, start: usize, acc: &[Value], slots: usize) {
            if self.witness.is_some() || self.exceeded {
                return;
            }
            if !self.budget.tick() {
                self.exceeded = true;
                return;
            }
            if acc == self.goal {
                self.witness = Some(self.chosen.clone());
                return;
            }
            if slots == 0 {
                return;
            }
            for t in 0..self.goal.len() {
                if self.alg.add(&acc[t], &self.reach[start][t]) != self.goal[t] {
                    return;
                }
            }
            for c in start..self.terms.len() {
                let mut next = acc.to_vec();
                let mut grew = false;
                for t in 0..next.len() {
                    let v = self.alg.add(&next[t], &self.terms[c][t]);
                    if v != next[t] {
                        grew = true;
                        next[t] = v;
                    }
                }
                if !grew {
                    continue;
                }
                self.chosen.push(c);
                self.dfs(c + 1, &next, slots - 1);
                self.chosen.pop();
                if self.witness.is_some() || self.exceeded {
                    return;
                }
            }
        }
    }

    let zero_acc = vec![alg.zero(); targets.len()];
    for k in 1..=max_width {
        transcript.widths_tried.push(k);
        let mut cover = Cover {
            alg: &alg,
            goal: &goal,
            terms: &terms,
            reach: &reach,
            budget: &mut budget,
            chosen: Vec::new(),
            witness: None,
            exceeded: false,
        };
        cover.dfs(0, &zero_acc, k);
        if let Some(ids) = cover.witness {
            let factors: Vec<Vec<Value>> = ids.iter().map(|&c| columns[c].clone()).collect();
            transcript.outcome = SearchOutcome::Found {
                width: factors.len(),
            };
            transcript.witness = Some(factors);
            transcript.nodes_explored = budget.nodes;
            return Ok(transcript);
        }
        if cover.exceeded {
            transcript.outcome = SearchOutcome::BudgetExceeded;
            transcript.nodes_explored = budget.nodes;
            return Ok(transcript);
        }
    }
    transcript.outcome = SearchOutcome::Exhausted;
    transcript.nodes_explored = budget.nodes;
    Ok(transcript)
}

/// Exhaustive existence test for the triangular factorizations: whether any
/// upper (`UL`) or lower (`LU`) triangular matrix over the searched value
/// set has `gram = A`. An exhausted search over a non-truncated carrier of
/// a regular incline is a nonexistence proof over the whole carrier.
pub fn brute_force_triangular_exists(
    a: &Matrix,
    mode: TriMode,
    opts: &SearchOptions,
) -> Result<SearchTranscript> {
    a.require_square()?;
    if let Some((i, j)) = a.symmetry_defect() {
        return Err(Error::NotSymmetric { i, j });
    }
    if a.rows() > opts.max_side {
        return Err(Error::SearchLimit(format!(
            "side {} exceeds the cap {}",
            a.rows(),
            opts.max_side
        )));
    }
    let alg = a.algebra().clone();
    let n = a.rows();
    let sub = search_values(a, opts)?;
    if sub.values.len() > opts.max_carrier {
        return Err(Error::SearchLimit(format!(
            "carrier set of {} values exceeds the cap {}",
            sub.values.len(),
            opts.max_carrier
        )));
    }
    // Row-wise candidates: an entry of row i must satisfy v ⊗ v <= a_ii.
    let row_values: Vec<Vec<Value>> = (0..n)
        .map(|i| {
            let mut vs: Vec<Value> = sub
                .values
                .iter()
                .filter(|v| alg.le(&alg.mul(v, v), a.get(i, i)))
                .cloned()
                .collect();
            vs.reverse();
            vs
        })
        .collect();
    // Cells of the triangular support in row-major order.
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| {
            (0..n).filter_map(move |j| {
                let keep = match mode {
                    TriMode::Ul => j >= i,
                    TriMode::Lu => j <= i,
                };
                keep.then_some((i, j))
            })
        })
        .collect();

    let mut budget = Budget {
        nodes: 0,
        limit: opts.node_budget,
    };
    let mut grid: Vec<Vec<Value>> = (0..n).map(|_| vec![alg.zero(); n]).collect();
    let mut witness: Option<Vec<Vec<Value>>> = None;
    let mut exceeded = false;

    fn row_done(alg: &Incline, a: &Matrix, grid: &[Vec<Value>], r: usize) -> bool {
        for i in 0..=r {
            let mut acc = alg.zero();
            for (x, y) in grid[i].iter().zip(&grid[r]) {
                acc = alg.add(&acc, &alg.mul(x, y));
            }
            if &acc != a.get(i, r) {
                return false;
            }
        }
        true
    }

    #[allow(clippy::too_many_arguments, clippy::needless_range_loop)]
    fn dfs(
        alg: &Incline,
        a: &Matrix,
        cells: &[(usize, usize)],
        row_values: &[Vec<Value>],
        pos: usize,
        grid: &mut Vec<Vec<Value>>,
        budget: &mut Budget,
        witness: &mut Option<Vec<Vec<Value>>>,
        exceeded: &mut bool,
    ) {
        if witness.is_some() || *exceeded {
            return;
        }
        if pos == cells.len() {
            *witness = Some(grid.clone());
            return;
        }
        let (r, c) = cells[pos];
        let row_completes = pos + 1 == cells.len() || cells[pos + 1].0 != r;
        'next: for v in &row_values[r] {
            if !budget.tick() {
                *exceeded = true;
                return;
            }
            // Partial bound: any same-column pair must stay below a_ir.
            for i in 0..r {
                if !alg.le(&alg.mul(&grid[i][c], v), a.get(i, r)) {
                    continue 'next;
                }
            }
            grid[r][c] = v.clone();
            let ok = !row_completes || row_done(alg, a, grid, r);
            if ok {
                dfs(
                    alg,
                    a,
                    cells,
                    row_values,
                    pos + 1,
                    grid,
                    budget,
                    witness,
                    exceeded,
                );
            }
            grid[r][c] = alg.zero();
            if witness.is_some() || *exceeded {
                return;
            }
        }
    }

    dfs(
        &alg,
        a,
        &cells,
        &row_values,
        0,
        &mut grid,
        &mut budget,
        &mut witness,
        &mut exceeded,
    );

    let outcome = if witness.is_some() {
        SearchOutcome::Found { width: n }
    } else if exceeded {
        SearchOutcome::BudgetExceeded
    } else {
        SearchOutcome::Exhausted
    };
    Ok(SearchTranscript {
        algebra: alg,
        carrier: sub.values,
        carrier_truncated: sub.truncated,
        widths_tried: vec![n],
        outcome,
        witness,
        nodes_explored: budget.nodes,
    })
}

/// The Boolean `n`-cycle-with-loops adjacency matrix, the tightness
/// candidate for the `⌊n²/4⌋` rank bound. Callers pair it with
/// [`brute_force_cp_rank`] to measure its exact CP-rank (for Boolean
/// matrices that is the minimum clique edge-and-loop cover of the graph).
pub fn djl_tightness_witness(n: usize) -> Result<Matrix> {
    if n < 4 {
        return Err(Error::DimensionMismatch(format!(
            "cycle witness needs side at least 4, got {n}"
        )));
    }
    let alg = Incline::boolean();
    Matrix::from_fn(alg.clone(), n, n, |i, j| {
        let d = (n + i - j) % n;
        if d == 0 || d == 1 || d == n - 1 {
            alg.one()
        } else {
            alg.zero()
        }
    })
}

/// Check a CP-rank witness: every column obeys the entry bounds and the
/// gram of the columns reproduces `A`.
pub fn verify_search_witness(a: &Matrix, factors: &[Vec<Value>]) -> bool {
    let alg = a.algebra();
    let n = a.rows();
    if factors.iter().any(|f| f.len() != n) {
        return false;
    }
    let gram = gram_of_factors(alg, n, factors);
    (0..n).all(|i| (0..n).all(|j| &gram[i * n + j] == a.get(i, j)))
}
