//! Instance and solution data model.
//!
//! An [`Instance`] is an equality-form integer program
//! `min { cᵀx : Ax = b, x ∈ Z≥0ⁿ }` with an `m×n` integer matrix `A`, a
//! declared entry bound `Δ ≥ 2` with `|A[i][j]| ≤ Δ`, right-hand side `b`
//! and cost vector `c`. All numeric fields are arbitrary-precision integers;
//! solver hot paths downgrade to machine words only after proving the values
//! fit.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InstanceError {
    #[error("instance must have at least one row and one column")]
    EmptyDimensions,
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("right-hand side has {found} entries, expected {expected}")]
    BadRhsLength { expected: usize, found: usize },
    #[error("cost vector has {found} entries, expected {expected}")]
    BadCostLength { expected: usize, found: usize },
    #[error("delta must be at least 2, got {0}")]
    DeltaBelowTwo(BigInt),
    #[error("delta {delta} is smaller than the max absolute matrix entry {max_abs}")]
    DeltaTooSmall { delta: BigInt, max_abs: BigInt },
}

/// An equality-form integer program `min { cᵀx : Ax = b, x ≥ 0, x integer }`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    m: usize,
    n: usize,
    a: Vec<Vec<BigInt>>,
    b: Vec<BigInt>,
    c: Vec<BigInt>,
    delta: BigInt,
}

impl Instance {
    /// Build a validated instance. `delta` is the declared entry bound; pass
    /// `None` to infer `max(2, max|A[i][j]|)`. An explicit `delta` must be at
    /// least 2 and at least the true max absolute entry.
    pub fn new(
        a: Vec<Vec<BigInt>>,
        b: Vec<BigInt>,
        c: Vec<BigInt>,
        delta: Option<BigInt>,
    ) -> Result<Self, InstanceError> {
        let m = a.len();
        if m == 0 {
            return Err(InstanceError::EmptyDimensions);
        }
        let n = a[0].len();
        if n == 0 {
            return Err(InstanceError::EmptyDimensions);
        }
        for (i, row) in a.iter().enumerate() {
            if row.len() != n {
                return Err(InstanceError::RaggedRow {
                    row: i + 1,
                    expected: n,
                    found: row.len(),
                });
            }
        }
        if b.len() != m {
            return Err(InstanceError::BadRhsLength {
                expected: m,
                found: b.len(),
            });
        }
        if c.len() != n {
            return Err(InstanceError::BadCostLength {
                expected: n,
                found: c.len(),
            });
        }
        let max_abs = a
            .iter()
            .flatten()
            .map(|v| v.abs())
            .max()
            .unwrap_or_else(BigInt::zero);
        let delta = match delta {
            Some(d) => {
                if d < BigInt::from(2) {
                    return Err(InstanceError::DeltaBelowTwo(d));
                }
                if d < max_abs {
                    return Err(InstanceError::DeltaTooSmall { delta: d, max_abs });
                }
                d
            }
            None => max_abs.max(BigInt::from(2)),
        };
        Ok(Instance { m, n, a, b, c, delta })
    }

    /// Convenience constructor from machine integers (used heavily in tests).
    pub fn from_i64(a: &[&[i64]], b: &[i64], c: &[i64]) -> Result<Self, InstanceError> {
        let a = a
            .iter()
            .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        let b = b.iter().map(|&v| BigInt::from(v)).collect();
        let c = c.iter().map(|&v| BigInt::from(v)).collect();
        Instance::new(a, b, c, None)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> &[Vec<BigInt>] {
        &self.a
    }

    pub fn b(&self) -> &[BigInt] {
        &self.b
    }

    pub fn c(&self) -> &[BigInt] {
        &self.c
    }

    pub fn delta(&self) -> &BigInt {
        &self.delta
    }

    /// Column `j` as an owned vector of length `m`.
    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.m).map(|i| self.a[i][j].clone()).collect()
    }

    /// `A·x` for a length-`n` vector.
    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.n, "vector length mismatch");
        self.a
            .iter()
            .map(|row| row.iter().zip(x).map(|(a, v)| a * v).sum())
            .collect()
    }

    /// `cᵀx`, exact.
    pub fn objective_of(&self, x: &[BigInt]) -> BigInt {
        assert_eq!(x.len(), self.n, "vector length mismatch");
        self.c.iter().zip(x).map(|(c, v)| c * v).sum()
    }

    /// Same instance with the right-hand side replaced.
    pub fn with_rhs(&self, b: Vec<BigInt>) -> Instance {
        assert_eq!(b.len(), self.m);
        Instance { b, ..self.clone() }
    }

    /// Same instance with the cost vector replaced by zero (feasibility form).
    pub fn with_zero_cost(&self) -> Instance {
        Instance {
            c: vec![BigInt::zero(); self.n],
            ..self.clone()
        }
    }
}

/// A nonnegative integer solution together with its exact objective value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionVec {
    pub x: Vec<BigInt>,
    pub objective: BigInt,
}

impl SolutionVec {
    pub fn new(x: Vec<BigInt>, inst: &Instance) -> Self {
        let objective = inst.objective_of(&x);
        SolutionVec { x, objective }
    }

    pub fn zero(n: usize) -> Self {
        SolutionVec {
            x: vec![BigInt::zero(); n],
            objective: BigInt::zero(),
        }
    }

    /// Coordinate-wise sum; objectives add exactly.
    pub fn add(&self, other: &SolutionVec) -> SolutionVec {
        assert_eq!(self.x.len(), other.x.len());
        SolutionVec {
            x: self
                .x
                .iter()
                .zip(&other.x)
                .map(|(a, b)| a + b)
                .collect(),
            objective: &self.objective + &other.objective,
        }
    }

    pub fn l1(&self) -> BigInt {
        self.x.iter().map(|v| v.abs()).sum()
    }
}

/// Outcome of a solve: optimal with a witness, infeasible, or unbounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveStatus {
    Optimal(SolutionVec),
    Infeasible,
    Unbounded,
}

impl SolveStatus {
    pub fn name(&self) -> &'static str {
        match self {
            SolveStatus::Optimal(_) => "OPTIMAL",
            SolveStatus::Infeasible => "INFEASIBLE",
            SolveStatus::Unbounded => "UNBOUNDED",
        }
    }
}

/// Solver instrumentation counters.
///
/// `nodes_expanded` counts branching-node entries plus bounded-search nodes;
/// `max_depth` counts support-halving frames only (an equivalent-kernel
/// evaluation is one frame); `peak_live_words` counts one word per tracked
/// integer slot in live solver-owned frames. Wall time is recorded by the
/// pipeline entry points.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Metrics {
    pub nodes_expanded: u64,
    pub max_depth: u64,
    pub peak_live_words: u64,
    pub elapsed_ms: u64,
    live_words: u64,
    cur_depth: u64,
}

impl Metrics {
    pub fn new() -> Self {
        Metrics::default()
    }

    pub(crate) fn node(&mut self) {
        self.nodes_expanded += 1;
    }

    pub(crate) fn enter_frame(&mut self, words: u64) {
        self.live_words += words;
        if self.live_words > self.peak_live_words {
            self.peak_live_words = self.live_words;
        }
    }

    pub(crate) fn exit_frame(&mut self, words: u64) {
        debug_assert!(self.live_words >= words);
        self.live_words -= words;
    }

    pub(crate) fn enter_level(&mut self) {
        self.cur_depth += 1;
        if self.cur_depth > self.max_depth {
            self.max_depth = self.cur_depth;
        }
    }

    pub(crate) fn exit_level(&mut self) {
        debug_assert!(self.cur_depth > 0);
        self.cur_depth -= 1;
    }

    /// Associative merge for parallel folds: counts add, peaks take the max.
    pub fn merge(&mut self, other: &Metrics) {
        self.nodes_expanded += other.nodes_expanded;
        self.max_depth = self.max_depth.max(other.max_depth);
        self.peak_live_words = self.peak_live_words.max(other.peak_live_words);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_is_inferred_and_clamped_to_two() {
        let inst = Instance::from_i64(&[&[1, 1]], &[2], &[1, 1]).unwrap();
        assert_eq!(inst.delta(), &BigInt::from(2));
        let inst = Instance::from_i64(&[&[3, -5]], &[2], &[1, 1]).unwrap();
        assert_eq!(inst.delta(), &BigInt::from(5));
    }

    #[test]
    fn explicit_delta_is_validated() {
        let a = vec![vec![BigInt::from(3)]];
        let err = Instance::new(a.clone(), vec![BigInt::from(1)], vec![BigInt::from(1)], Some(BigInt::from(2)))
            .unwrap_err();
        assert!(matches!(err, InstanceError::DeltaTooSmall { .. }));
        let err = Instance::new(a, vec![BigInt::from(1)], vec![BigInt::from(1)], Some(BigInt::from(1)))
            .unwrap_err();
        assert!(matches!(err, InstanceError::DeltaBelowTwo(_)));
    }

    #[test]
    fn apply_and_objective_are_exact() {
        let inst = Instance::from_i64(&[&[1, 2], &[0, -1]], &[4, -2], &[3, -1]).unwrap();
        let x = vec![BigInt::from(0), BigInt::from(2)];
        assert_eq!(inst.apply(&x), vec![BigInt::from(4), BigInt::from(-2)]);
        assert_eq!(inst.objective_of(&x), BigInt::from(-2));
    }

    #[test]
    fn metrics_frames_track_peak() {
        let mut m = Metrics::new();
        m.enter_frame(10);
        m.enter_frame(5);
        m.exit_frame(5);
        m.enter_frame(3);
        assert_eq!(m.peak_live_words, 15);
        m.exit_frame(3);
        m.exit_frame(10);
    }
}
