//! Leslie matrices and age-structured population projection.
//!
//! A [`LeslieMatrix`] holds per-class fertilities `F_1..F_k` and
//! survival probabilities `P_1..P_{k-1}`. Its dense form has the
//! fertilities along the first row, the survivals on the sub-diagonal,
//! and zeros everywhere else. One projection step maps a
//! [`PopulationVector`] `n` to `A·n`, optionally followed by adding an
//! [`ImmigrationVector`] (whose entries may be negative, i.e. net
//! emigration).
//!
//! Age classes are labelled 1-based everywhere a class index appears in
//! an error message, matching the usual demographic convention; storage
//! is 0-based.

use thiserror::Error;

/// Default convergence tolerance for [`LeslieMatrix::dominant_eigen`].
pub const DEFAULT_EIGEN_TOL: f64 = 1e-10;

/// Default iteration cap for [`LeslieMatrix::dominant_eigen`].
pub const DEFAULT_EIGEN_MAX_ITER: usize = 100_000;

/// Errors from vector/matrix construction, projection, or eigen analysis.
///
/// All age-class and parameter indices in messages are 1-based.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum LeslieError {
    #[error("at least one age class is required")]
    NoAgeClasses,
    #[error("{what} entry at age class {age_class} is not finite")]
    NonFiniteEntry { what: &'static str, age_class: usize },
    #[error("population entry at age class {age_class} is negative ({value})")]
    NegativeEntry { age_class: usize, value: f64 },
    #[error("expected {expected} survival probabilities for {classes} age classes, got {found}")]
    SurvivalLength {
        classes: usize,
        expected: usize,
        found: usize,
    },
    #[error("fertility negative at index {index} ({value})")]
    NegativeFertility { index: usize, value: f64 },
    #[error("fertility not finite at index {index}")]
    NonFiniteFertility { index: usize },
    #[error("survival outside [0,1] at index {index} ({value})")]
    SurvivalOutOfRange { index: usize, value: f64 },
    #[error("dimension mismatch: matrix has {classes} age classes, {what} has {found}")]
    DimensionMismatch {
        classes: usize,
        what: &'static str,
        found: usize,
    },
    #[error("projected population negative at age class {age_class} ({value})")]
    NegativePopulation { age_class: usize, value: f64 },
    #[error("step {step}: {source}")]
    AtStep {
        step: usize,
        #[source]
        source: Box<LeslieError>,
    },
    #[error("no convergence after {iterations} iterations (last residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("iteration limit must be at least 1")]
    BadMaxIter,
    #[error("dense grid must be square and non-empty")]
    NotSquare,
    #[error("dense grid has a nonzero entry outside the first row and sub-diagonal at row {row}, column {column}")]
    NotLeslieShaped { row: usize, column: usize },
}

/// Per-age-class population counts, in thousands of individuals.
///
/// Entry `i` (0-based) is the count for age class `i + 1`. Entries are
/// finite and non-negative; the vector is never empty.
#[derive(Debug, Clone, PartialEq)]
pub struct PopulationVector {
    counts: Vec<f64>,
}

impl PopulationVector {
    /// Validates and wraps per-class counts.
    pub fn new(counts: Vec<f64>) -> Result<Self, LeslieError> {
        if counts.is_empty() {
            return Err(LeslieError::NoAgeClasses);
        }
        for (i, &c) in counts.iter().enumerate() {
            if !c.is_finite() {
                return Err(LeslieError::NonFiniteEntry {
                    what: "population",
                    age_class: i + 1,
                });
            }
            if c < 0.0 {
                return Err(LeslieError::NegativeEntry {
                    age_class: i + 1,
                    value: c,
                });
            }
        }
        Ok(Self { counts })
    }

    /// Number of age classes.
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    /// Always false; an empty vector cannot be constructed.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.counts
    }

    /// Total population summed over all age classes.
    pub fn total(&self) -> f64 {
        self.counts.iter().sum()
    }
}

/// Per-age-class net migration flows, in thousands per projection
/// interval. Negative entries mean net emigration.
#[derive(Debug, Clone, PartialEq)]
pub struct ImmigrationVector {
    flows: Vec<f64>,
}

impl ImmigrationVector {
    /// Validates and wraps per-class flows. Entries may be negative but
    /// must be finite.
    pub fn new(flows: Vec<f64>) -> Result<Self, LeslieError> {
        if flows.is_empty() {
            return Err(LeslieError::NoAgeClasses);
        }
        for (i, &f) in flows.iter().enumerate() {
            if !f.is_finite() {
                return Err(LeslieError::NonFiniteEntry {
                    what: "immigration",
                    age_class: i + 1,
                });
            }
        }
        Ok(Self { flows })
    }

    pub fn len(&self) -> usize {
        self.flows.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.flows
    }
}

/// What to do when a projection step yields a negative count (possible
/// when immigration entries are negative).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NegativePolicy {
    /// Fail with [`LeslieError::NegativePopulation`] naming the first
    /// offending age class.
    #[default]
    Error,
    /// Floor each negative count at zero.
    ClampToZero,
}

/// Dominant eigenpair of a Leslie matrix.
///
/// `lambda` is the asymptotic per-interval growth factor and
/// `stable_distribution` the matching eigenvector normalized to sum 1
/// (the long-run share of each age class).
#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    pub lambda: f64,
    pub stable_distribution: Vec<f64>,
    pub iterations: usize,
    pub residual: f64,
}

/// A k-class Leslie projection matrix, stored as its defining
/// parameters rather than a dense grid.
#[derive(Debug, Clone, PartialEq)]
pub struct LeslieMatrix {
    fertilities: Vec<f64>,
    survivals: Vec<f64>,
}

impl LeslieMatrix {
    /// Builds a matrix from fertilities `F_1..F_k` (each ≥ 0) and
    /// survival probabilities `P_1..P_{k-1}` (each in `[0, 1]`).
    pub fn new(fertilities: Vec<f64>, survivals: Vec<f64>) -> Result<Self, LeslieError> {
        if fertilities.is_empty() {
            return Err(LeslieError::NoAgeClasses);
        }
        if survivals.len() != fertilities.len() - 1 {
            return Err(LeslieError::SurvivalLength {
                classes: fertilities.len(),
                expected: fertilities.len() - 1,
                found: survivals.len(),
            });
        }
        for (i, &f) in fertilities.iter().enumerate() {
            if !f.is_finite() {
                return Err(LeslieError::NonFiniteFertility { index: i + 1 });
            }
            if f < 0.0 {
                return Err(LeslieError::NegativeFertility {
                    index: i + 1,
                    value: f,
                });
            }
        }
        for (i, &p) in survivals.iter().enumerate() {
            if !(0.0..=1.0).contains(&p) {
                return Err(LeslieError::SurvivalOutOfRange {
                    index: i + 1,
                    value: p,
                });
            }
        }
        Ok(Self {
            fertilities,
            survivals,
        })
    }

    /// Extracts `(F, P)` from a dense grid, rejecting grids that are
    /// not square or carry nonzero entries off the first row and
    /// sub-diagonal. Inverse of [`to_dense`](Self::to_dense).
    pub fn from_dense(grid: &[Vec<f64>]) -> Result<Self, LeslieError> {
        let k = grid.len();
        if k == 0 || grid.iter().any(|row| row.len() != k) {
            return Err(LeslieError::NotSquare);
        }
        for (i, row) in grid.iter().enumerate().skip(1) {
            for (j, &v) in row.iter().enumerate() {
                if j + 1 != i && v != 0.0 {
                    return Err(LeslieError::NotLeslieShaped {
                        row: i + 1,
                        column: j + 1,
                    });
                }
            }
        }
        let fertilities = grid[0].clone();
        let survivals = (1..k).map(|i| grid[i][i - 1]).collect();
        Self::new(fertilities, survivals)
    }

    /// Number of age classes k.
    pub fn classes(&self) -> usize {
        self.fertilities.len()
    }

    pub fn fertilities(&self) -> &[f64] {
        &self.fertilities
    }

    pub fn survivals(&self) -> &[f64] {
        &self.survivals
    }

    /// Expands to the dense k×k grid: fertilities along row 1,
    /// survivals on the sub-diagonal, zero elsewhere.
    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let k = self.classes();
        let mut grid = vec![vec![0.0; k]; k];
        grid[0].copy_from_slice(&self.fertilities);
        for (i, &p) in self.survivals.iter().enumerate() {
            grid[i + 1][i] = p;
        }
        grid
    }

    /// `A·v` using the Leslie structure directly.
    fn apply(&self, v: &[f64]) -> Vec<f64> {
        let k = self.classes();
        let mut out = vec![0.0; k];
        out[0] = self
            .fertilities
            .iter()
            .zip(v)
            .map(|(f, x)| f * x)
            .sum();
        for (i, &p) in self.survivals.iter().enumerate() {
            out[i + 1] = p * v[i];
        }
        out
    }

    /// One projection step `A·n + imm`, failing on any negative result.
    pub fn project_once(
        &self,
        population: &PopulationVector,
        immigration: Option<&ImmigrationVector>,
    ) -> Result<PopulationVector, LeslieError> {
        self.project_once_with(population, immigration, NegativePolicy::Error)
    }

    /// One projection step with an explicit negative-count policy.
    pub fn project_once_with(
        &self,
        population: &PopulationVector,
        immigration: Option<&ImmigrationVector>,
        policy: NegativePolicy,
    ) -> Result<PopulationVector, LeslieError> {
        let k = self.classes();
        if population.len() != k {
            return Err(LeslieError::DimensionMismatch {
                classes: k,
                what: "population vector",
                found: population.len(),
            });
        }
        if let Some(imm) = immigration {
            if imm.len() != k {
                return Err(LeslieError::DimensionMismatch {
                    classes: k,
                    what: "immigration vector",
                    found: imm.len(),
                });
            }
        }
        let mut next = self.apply(population.as_slice());
        if let Some(imm) = immigration {
            for (x, &flow) in next.iter_mut().zip(imm.as_slice()) {
                *x += flow;
            }
        }
        match policy {
            NegativePolicy::Error => {
                if let Some(i) = next.iter().position(|&x| x < 0.0) {
                    return Err(LeslieError::NegativePopulation {
                        age_class: i + 1,
                        value: next[i],
                    });
                }
            }
            NegativePolicy::ClampToZero => {
                for x in &mut next {
                    if *x < 0.0 {
                        *x = 0.0;
                    }
                }
            }
        }
        PopulationVector::new(next)
    }

    /// Iterated projection: element 0 is the initial state, element
    /// `t + 1` is one step applied to element `t` with the same
    /// immigration vector every interval. `steps` may be 0, in which
    /// case only the initial state is returned.
    pub fn project_trajectory(
        &self,
        initial: &PopulationVector,
        immigration: Option<&ImmigrationVector>,
        steps: u32,
    ) -> Result<Vec<PopulationVector>, LeslieError> {
        self.project_trajectory_with(initial, immigration, steps, NegativePolicy::Error)
    }

    /// Iterated projection with an explicit negative-count policy.
    /// Failures carry the 1-based index of the failing step.
    pub fn project_trajectory_with(
        &self,
        initial: &PopulationVector,
        immigration: Option<&ImmigrationVector>,
        steps: u32,
        policy: NegativePolicy,
    ) -> Result<Vec<PopulationVector>, LeslieError> {
        let mut trajectory = Vec::with_capacity(steps as usize + 1);
        trajectory.push(initial.clone());
        for step in 1..=steps {
            let current = trajectory.last().expect("trajectory is non-empty");
            let next = self
                .project_once_with(current, immigration, policy)
                .map_err(|e| LeslieError::AtStep {
                    step: step as usize,
                    source: Box::new(e),
                })?;
            trajectory.push(next);
        }
        Ok(trajectory)
    }

    /// Dominant eigenvalue and stable age distribution.
    ///
    /// Power iteration runs on `A + I` with a uniform start vector and
    /// 1-norm normalization, and `lambda` is recovered by subtracting
    /// the shift. The shift makes the dominant eigenvalue strictly
    /// dominant for irreducible Leslie matrices, which are often
    /// imprimitive (fertility concentrated in late classes) and would
    /// make raw iteration oscillate.
    ///
    /// Converges when `‖A·w − λw‖∞ ≤ tol·max(1, λ)`; fails with
    /// [`LeslieError::NoConvergence`] otherwise, which can happen for
    /// reducible matrices (e.g. a zero survival cutting off every
    /// fertile class).
    pub fn dominant_eigen(&self, tol: f64, max_iter: usize) -> Result<EigenResult, LeslieError> {
        if tol.is_nan() || tol <= 0.0 {
            return Err(LeslieError::BadTolerance(tol));
        }
        if max_iter == 0 {
            return Err(LeslieError::BadMaxIter);
        }
        let k = self.classes();
        let mut w = vec![1.0 / k as f64; k];
        let mut residual = f64::INFINITY;
        for iteration in 1..=max_iter {
            // One step of (A + I) with 1-norm renormalization. The sum
            // is at least 1 because w is a distribution and A·w ≥ 0.
            let aw = self.apply(&w);
            let total: f64 = aw.iter().zip(&w).map(|(a, b)| a + b).sum();
            for (wi, ai) in w.iter_mut().zip(&aw) {
                *wi = (ai + *wi) / total;
            }
            let aw = self.apply(&w);
            let lambda: f64 = aw.iter().sum();
            residual = aw
                .iter()
                .zip(&w)
                .map(|(a, b)| (a - lambda * b).abs())
                .fold(0.0, f64::max);
            if residual <= tol * lambda.max(1.0) {
                return Ok(EigenResult {
                    lambda,
                    stable_distribution: w,
                    iterations: iteration,
                    residual,
                });
            }
        }
        Err(LeslieError::NoConvergence {
            iterations: max_iter,
            residual,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn pop(v: &[f64]) -> PopulationVector {
        PopulationVector::new(v.to_vec()).unwrap()
    }

    fn imm(v: &[f64]) -> ImmigrationVector {
        ImmigrationVector::new(v.to_vec()).unwrap()
    }

    fn la_0() -> LeslieMatrix {
        LeslieMatrix::new(vec![0.0, 2.0, 1.0], vec![0.2, 0.4]).unwrap()
    }

    fn la_s() -> LeslieMatrix {
        LeslieMatrix::new(vec![0.0, 3.0, 1.0], vec![0.4, 0.6]).unwrap()
    }

    #[test]
    fn make_valid_three_class_matrix() {
        let m = la_0();
        assert_eq!(m.classes(), 3);
        assert_eq!(m.fertilities(), &[0.0, 2.0, 1.0]);
        assert_eq!(m.survivals(), &[0.2, 0.4]);
    }

    #[test]
    fn make_single_class_matrix() {
        let m = LeslieMatrix::new(vec![0.0], vec![]).unwrap();
        assert_eq!(m.classes(), 1);
        assert_eq!(m.to_dense(), vec![vec![0.0]]);
    }

    #[test]
    fn survival_above_one_is_rejected_with_index() {
        let err = LeslieMatrix::new(vec![0.0, 2.0, 1.0], vec![0.2, 1.4]).unwrap_err();
        assert_eq!(
            err,
            LeslieError::SurvivalOutOfRange {
                index: 2,
                value: 1.4
            }
        );
        assert!(err.to_string().contains("survival outside [0,1] at index 2"));
    }

    #[test]
    fn negative_fertility_is_rejected_with_index() {
        let err = LeslieMatrix::new(vec![0.0, -2.0, 1.0], vec![0.2, 0.4]).unwrap_err();
        assert_eq!(
            err,
            LeslieError::NegativeFertility {
                index: 2,
                value: -2.0
            }
        );
    }

    #[test]
    fn survival_count_mismatch_is_rejected() {
        let err = LeslieMatrix::new(vec![0.0, 2.0, 1.0], vec![0.2]).unwrap_err();
        assert_eq!(
            err,
            LeslieError::SurvivalLength {
                classes: 3,
                expected: 2,
                found: 1
            }
        );
    }

    #[test]
    fn to_dense_layout() {
        assert_eq!(
            la_0().to_dense(),
            vec![
                vec![0.0, 2.0, 1.0],
                vec![0.2, 0.0, 0.0],
                vec![0.0, 0.4, 0.0],
            ]
        );
        let lb_s = LeslieMatrix::new(vec![0.0, 6.0, 2.0], vec![0.6, 0.8]).unwrap();
        assert_eq!(
            lb_s.to_dense(),
            vec![
                vec![0.0, 6.0, 2.0],
                vec![0.6, 0.0, 0.0],
                vec![0.0, 0.8, 0.0],
            ]
        );
    }

    #[test]
    fn from_dense_round_trip() {
        let m = la_s();
        assert_eq!(LeslieMatrix::from_dense(&m.to_dense()).unwrap(), m);
    }

    #[test]
    fn from_dense_rejects_off_pattern_entries() {
        let mut grid = la_0().to_dense();
        grid[2][2] = 0.5;
        assert_eq!(
            LeslieMatrix::from_dense(&grid).unwrap_err(),
            LeslieError::NotLeslieShaped { row: 3, column: 3 }
        );
    }

    #[test]
    fn project_once_with_immigration() {
        // Hand multiply: LA_S · (30,35,25) = (130,12,21), plus (5,10,10).
        let next = la_s()
            .project_once(&pop(&[30.0, 35.0, 25.0]), Some(&imm(&[5.0, 10.0, 10.0])))
            .unwrap();
        assert_eq!(next.as_slice(), &[135.0, 22.0, 31.0]);
        assert_eq!(next.total(), 188.0);
    }

    #[test]
    fn project_once_zero_population() {
        let next = la_0().project_once(&pop(&[0.0, 0.0, 0.0]), None).unwrap();
        assert_eq!(next.as_slice(), &[0.0, 0.0, 0.0]);
    }

    #[test]
    fn project_once_with_net_emigration() {
        let next = la_s()
            .project_once(&pop(&[30.0, 35.0, 25.0]), Some(&imm(&[-5.0, 0.0, 0.0])))
            .unwrap();
        assert_eq!(next.as_slice(), &[125.0, 12.0, 21.0]);
        assert_eq!(next.total(), 158.0);
    }

    #[test]
    fn project_once_reports_first_negative_class() {
        let err = la_0()
            .project_once(&pop(&[1.0, 0.0, 0.0]), Some(&imm(&[-10.0, -10.0, 0.0])))
            .unwrap_err();
        assert_eq!(
            err,
            LeslieError::NegativePopulation {
                age_class: 1,
                value: -10.0
            }
        );
    }

    #[test]
    fn project_once_clamps_when_asked() {
        let next = la_0()
            .project_once_with(
                &pop(&[1.0, 0.0, 0.0]),
                Some(&imm(&[-10.0, -10.0, 0.0])),
                NegativePolicy::ClampToZero,
            )
            .unwrap();
        assert_eq!(next.as_slice(), &[0.0, 0.0, 0.0]);
    }

    #[test]
    fn project_once_dimension_mismatch() {
        let err = la_0().project_once(&pop(&[1.0, 2.0]), None).unwrap_err();
        assert_eq!(
            err,
            LeslieError::DimensionMismatch {
                classes: 3,
                what: "population vector",
                found: 2
            }
        );
    }

    #[test]
    fn trajectory_starts_at_initial_state() {
        let traj = la_0()
            .project_trajectory(&pop(&[30.0, 35.0, 25.0]), None, 1)
            .unwrap();
        assert_eq!(traj.len(), 2);
        assert_eq!(traj[0].as_slice(), &[30.0, 35.0, 25.0]);
        assert_eq!(traj[1].as_slice(), &[95.0, 6.0, 14.0]);
    }

    #[test]
    fn trajectory_single_class_replacement_by_immigration() {
        let m = LeslieMatrix::new(vec![0.0], vec![]).unwrap();
        let traj = m
            .project_trajectory(&pop(&[7.0]), Some(&imm(&[3.0])), 2)
            .unwrap();
        let states: Vec<&[f64]> = traj.iter().map(|p| p.as_slice()).collect();
        assert_eq!(states, vec![&[7.0][..], &[3.0][..], &[3.0][..]]);
    }

    #[test]
    fn trajectory_error_names_failing_step() {
        let m = LeslieMatrix::new(vec![0.5], vec![]).unwrap();
        // 20 → 4 → -4: the second step goes negative.
        let err = m
            .project_trajectory(&pop(&[20.0]), Some(&imm(&[-6.0])), 3)
            .unwrap_err();
        match err {
            LeslieError::AtStep { step, source } => {
                assert_eq!(step, 2);
                assert_eq!(
                    *source,
                    LeslieError::NegativePopulation {
                        age_class: 1,
                        value: -4.0
                    }
                );
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn totals() {
        assert_eq!(pop(&[135.0, 22.0, 31.0]).total(), 188.0);
        assert_eq!(pop(&[0.0, 0.0, 0.0]).total(), 0.0);
        assert_eq!(pop(&[255.0, 58.0, 62.0]).total(), 375.0);
    }

    #[test]
    fn eigen_two_class_exact() {
        // Characteristic polynomial λ² − F₂P₁ = λ² − 1, so λ = 1 with
        // eigenvector (2, 1): A·(2,1) = (2,1).
        let m = LeslieMatrix::new(vec![0.0, 2.0], vec![0.5]).unwrap();
        let r = m.dominant_eigen(DEFAULT_EIGEN_TOL, DEFAULT_EIGEN_MAX_ITER).unwrap();
        assert_relative_eq!(r.lambda, 1.0, max_relative = 1e-10);
        assert_relative_eq!(r.stable_distribution[0], 2.0 / 3.0, max_relative = 1e-10);
        assert_relative_eq!(r.stable_distribution[1], 1.0 / 3.0, max_relative = 1e-10);
        assert!(r.residual <= DEFAULT_EIGEN_TOL * r.lambda.max(1.0));
    }

    #[test]
    fn eigen_three_class_declining_population() {
        // Largest real root of λ³ − 0.4λ − 0.08 = 0 is ≈ 0.7155.
        let r = la_0()
            .dominant_eigen(DEFAULT_EIGEN_TOL, DEFAULT_EIGEN_MAX_ITER)
            .unwrap();
        assert!(r.lambda > 0.715 && r.lambda < 0.716, "lambda = {}", r.lambda);
        let sum: f64 = r.stable_distribution.iter().sum();
        assert!((sum - 1.0).abs() <= 1e-12);
        assert!(r.stable_distribution.iter().all(|&x| x >= 0.0));
    }

    #[test]
    fn eigen_single_class() {
        let m = LeslieMatrix::new(vec![0.5], vec![]).unwrap();
        let r = m.dominant_eigen(DEFAULT_EIGEN_TOL, DEFAULT_EIGEN_MAX_ITER).unwrap();
        assert_eq!(r.lambda, 0.5);
        assert_eq!(r.stable_distribution, vec![1.0]);
        assert_eq!(r.iterations, 1);
    }

    #[test]
    fn eigen_reports_non_convergence() {
        // No fertile class is reachable, so the iteration crawls toward
        // the zero eigenvalue and cannot hit a 1e-10 residual in 50 steps.
        let m = LeslieMatrix::new(vec![0.0, 0.0], vec![1.0]).unwrap();
        let err = m.dominant_eigen(1e-10, 50).unwrap_err();
        match err {
            LeslieError::NoConvergence {
                iterations,
                residual,
            } => {
                assert_eq!(iterations, 50);
                assert!(residual > 0.0);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn eigen_rejects_bad_parameters() {
        assert_eq!(
            la_0().dominant_eigen(0.0, 10).unwrap_err(),
            LeslieError::BadTolerance(0.0)
        );
        assert_eq!(
            la_0().dominant_eigen(1e-10, 0).unwrap_err(),
            LeslieError::BadMaxIter
        );
    }

    #[test]
    fn population_vector_validation() {
        assert_eq!(
            PopulationVector::new(vec![]).unwrap_err(),
            LeslieError::NoAgeClasses
        );
        assert_eq!(
            PopulationVector::new(vec![1.0, -2.0]).unwrap_err(),
            LeslieError::NegativeEntry {
                age_class: 2,
                value: -2.0
            }
        );
        assert_eq!(
            PopulationVector::new(vec![f64::NAN]).unwrap_err(),
            LeslieError::NonFiniteEntry {
                what: "population",
                age_class: 1
            }
        );
    }

    #[test]
    fn immigration_vector_allows_negative_but_not_infinite() {
        assert!(ImmigrationVector::new(vec![-5.0, 0.0, 0.0]).is_ok());
        assert_eq!(
            ImmigrationVector::new(vec![0.0, f64::INFINITY]).unwrap_err(),
            LeslieError::NonFiniteEntry {
                what: "immigration",
                age_class: 2
            }
        );
    }
}
