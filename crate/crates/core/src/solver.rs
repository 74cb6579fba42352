//! Multistart nonlinear least-squares feasibility search over axis-tangent
//! circle configurations.
//!
//! A [`ConstraintSystem`] holds tangency equalities `(t_j − t_i)² = 4·r_i·r_j`
//! together with hinge-penalized ordering and disjointness inequalities over
//! the variables `(t_i, r_i)`. [`solve_feasibility`] runs independent damped
//! gradient-descent restarts from seeded random starts and reports the best
//! residual found. Feasible control systems solve to ~0; the induced and
//! symmetric configurations exhibit a positive residual floor.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chains::{
    expected_side, AxisTangentCircle, ChainError, ConfigKind, OctupleConfig, INDUCED_PAIRS,
    SYMMETRIC_EXTRA_PAIRS,
};
use crate::geom::Side;

#[derive(Debug, Error, PartialEq)]
pub enum SolverError {
    #[error("unknown system kind: {0}")]
    UnknownKind(String),
    #[error("assignment does not match the system's variables")]
    DimensionMismatch,
    #[error("invalid system: {0}")]
    InvalidSystem(String),
}

/// Relative ordering margin: consecutive abscissas must be separated by at
/// least this fraction of the span. It doubles as a quantitative surrogate
/// for the strict inequalities of the configurations, so it also sets the
/// scale of the residual floor on infeasible systems.
pub const DEFAULT_ORDERING_MARGIN: f64 = 1e-4;

/// The canned constraint systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SystemKind {
    /// Eight circles, touching pairs (1,4), (2,7), (3,6), (5,8).
    Induced,
    /// Eight circles, all eight touching pairs.
    Symmetric,
    /// The four top-side circles 2, 3, 6, 7 with their chain tangencies;
    /// a feasible control system.
    SingleChainTop,
}

impl SystemKind {
    pub fn parse(s: &str) -> Result<Self, SolverError> {
        match s {
            "induced" => Ok(SystemKind::Induced),
            "symmetric" => Ok(SystemKind::Symmetric),
            "single-chain" | "single_chain_top" | "single-chain-top" => {
                Ok(SystemKind::SingleChainTop)
            }
            other => Err(SolverError::UnknownKind(other.to_string())),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SystemKind::Induced => "induced",
            SystemKind::Symmetric => "symmetric",
            SystemKind::SingleChainTop => "single-chain",
        }
    }
}

/// Equality and inequality residual terms over variables `(t_i, r_i)`.
///
/// All pair entries are 1-based circle indices drawn from `indices`. The
/// first and last variables are pinned to `t = 0` and `t = 1` during solving
/// to fix the similarity gauge; residual evaluation itself is
/// scale-invariant (terms are normalized by the squared span).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstraintSystem {
    pub name: String,
    /// Strictly increasing 1-based circle indices.
    pub indices: Vec<usize>,
    /// Touching pairs: `(t_j − t_i)² − 4·r_i·r_j = 0`.
    pub touching: Vec<(usize, usize)>,
    /// Ordering pairs `(i, j)`: `t_j − t_i ≥ margin·span`, hinge-penalized.
    pub ordering: Vec<(usize, usize)>,
    /// Disjointness pairs: `(t_j − t_i)² − 4·r_i·r_j ≥ 0`, hinge-penalized.
    pub disjoint: Vec<(usize, usize)>,
    /// Relative ordering margin.
    pub margin: f64,
}

/// Values for all `(t_i, r_i)` of a system, aligned with its `indices`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Assignment {
    pub indices: Vec<usize>,
    pub t: Vec<f64>,
    pub r: Vec<f64>,
}

impl Assignment {
    /// Flattens an eight-circle configuration into assignment form.
    pub fn from_octuple(cfg: &OctupleConfig) -> Self {
        Assignment {
            indices: (1..=8).collect(),
            t: cfg.circles.iter().map(|c| c.t).collect(),
            r: cfg.circles.iter().map(|c| c.r).collect(),
        }
    }

    /// Rebuilds an eight-circle configuration (sides follow the fixed index
    /// rule). The assignment must carry all eight circles.
    pub fn to_octuple(&self, kind: ConfigKind) -> Result<OctupleConfig, ChainError> {
        if self.indices != (1..=8).collect::<Vec<_>>()
            || self.t.len() != 8
            || self.r.len() != 8
        {
            return Err(ChainError::NotSymmetric(
                "assignment must carry circles 1..8".into(),
            ));
        }
        let circles: [AxisTangentCircle; 8] = std::array::from_fn(|i| {
            AxisTangentCircle::new(self.t[i], self.r[i], expected_side(i + 1))
        });
        OctupleConfig::new(circles, kind)
    }
}

/// Best assignment found by [`solve_feasibility`] and its residual norm.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveResult {
    pub system: String,
    pub best: Assignment,
    /// Root-sum-square of the residual vector at `best`.
    pub residual: f64,
    pub restarts_used: u32,
    pub seed: u64,
}

/// Same-side non-touching pairs among the given indices.
fn disjoint_pairs(indices: &[usize], touching: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for side in [Side::Below, Side::Above] {
        let group: Vec<usize> = indices
            .iter()
            .copied()
            .filter(|&i| expected_side(i) == side)
            .collect();
        for a in 0..group.len() {
            for b in a + 1..group.len() {
                let pair = (group[a], group[b]);
                if !touching.contains(&pair) && !touching.contains(&(pair.1, pair.0)) {
                    out.push(pair);
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Builds one of the canned systems.
pub fn build_constraint_system(kind: SystemKind) -> ConstraintSystem {
    let (indices, touching): (Vec<usize>, Vec<(usize, usize)>) = match kind {
        SystemKind::Induced => ((1..=8).collect(), INDUCED_PAIRS.to_vec()),
        SystemKind::Symmetric => {
            let mut pairs = INDUCED_PAIRS.to_vec();
            pairs.extend_from_slice(&SYMMETRIC_EXTRA_PAIRS);
            ((1..=8).collect(), pairs)
        }
        SystemKind::SingleChainTop => {
            (vec![2, 3, 6, 7], vec![(2, 3), (3, 6), (6, 7), (2, 7)])
        }
    };
    let ordering: Vec<(usize, usize)> = indices.windows(2).map(|w| (w[0], w[1])).collect();
    let disjoint = match kind {
        SystemKind::SingleChainTop => Vec::new(),
        _ => disjoint_pairs(&indices, &touching),
    };
    ConstraintSystem {
        name: kind.name().to_string(),
        indices,
        touching,
        ordering,
        disjoint,
        margin: DEFAULT_ORDERING_MARGIN,
    }
}

/// Builds a system with explicit constraint lists.
pub fn custom_system(
    name: &str,
    indices: Vec<usize>,
    touching: Vec<(usize, usize)>,
    ordering: Vec<(usize, usize)>,
    disjoint: Vec<(usize, usize)>,
    margin: f64,
) -> Result<ConstraintSystem, SolverError> {
    if indices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(SolverError::InvalidSystem(
            "indices must be strictly increasing".into(),
        ));
    }
    for &(i, j) in touching.iter().chain(&ordering).chain(&disjoint) {
        if !indices.contains(&i) || !indices.contains(&j) {
            return Err(SolverError::InvalidSystem(format!(
                "pair ({i}, {j}) references a missing variable"
            )));
        }
    }
    if !(margin > 0.0) {
        return Err(SolverError::InvalidSystem("margin must be positive".into()));
    }
    Ok(ConstraintSystem {
        name: name.to_string(),
        indices,
        touching,
        ordering,
        disjoint,
        margin,
    })
}

impl ConstraintSystem {
    fn position(&self, index: usize) -> usize {
        self.indices
            .iter()
            .position(|&i| i == index)
            .expect("pair indices are validated at construction")
    }

    /// Evaluates the residual vector at an assignment: touching terms raw,
    /// inequality terms hinged, everything normalized by the squared span.
    pub fn residuals(&self, a: &Assignment) -> Result<Vec<f64>, SolverError> {
        if a.indices != self.indices
            || a.t.len() != self.indices.len()
            || a.r.len() != self.indices.len()
        {
            return Err(SolverError::DimensionMismatch);
        }
        let n = self.indices.len();
        let mut out = Vec::with_capacity(self.touching.len() + self.ordering.len() + self.disjoint.len());
        if n == 0 {
            return Ok(out);
        }
        let span = (a.t[n - 1] - a.t[0]).abs().max(f64::MIN_POSITIVE);
        let span_sq = span * span;
        for &(i, j) in &self.touching {
            let (pi, pj) = (self.position(i), self.position(j));
            let dt = a.t[pj] - a.t[pi];
            out.push((dt * dt - 4.0 * a.r[pi] * a.r[pj]) / span_sq);
        }
        for &(i, j) in &self.ordering {
            let (pi, pj) = (self.position(i), self.position(j));
            let violation = self.margin * span - (a.t[pj] - a.t[pi]);
            out.push(violation.max(0.0) / span_sq);
        }
        for &(i, j) in &self.disjoint {
            let (pi, pj) = (self.position(i), self.position(j));
            let dt = a.t[pj] - a.t[pi];
            let violation = 4.0 * a.r[pi] * a.r[pj] - dt * dt;
            out.push(violation.max(0.0) / span_sq);
        }
        Ok(out)
    }

    /// Root-sum-square residual at an assignment.
    pub fn residual_norm(&self, a: &Assignment) -> Result<f64, SolverError> {
        let res = self.residuals(a)?;
        Ok(res.iter().map(|v| v * v).sum::<f64>().sqrt())
    }
}

/// Internal descent state: pinned endpoint abscissas, free interior
/// abscissas, and log-radii (keeping radii positive).
struct DescentProblem<'a> {
    sys: &'a ConstraintSystem,
    /// Resolved (position, position) pairs for each constraint class.
    touching: Vec<(usize, usize)>,
    ordering: Vec<(usize, usize)>,
    disjoint: Vec<(usize, usize)>,
}

impl<'a> DescentProblem<'a> {
    fn new(sys: &'a ConstraintSystem) -> Self {
        let resolve = |pairs: &[(usize, usize)]| {
            pairs
                .iter()
                .map(|&(i, j)| (sys.position(i), sys.position(j)))
                .collect::<Vec<_>>()
        };
        DescentProblem {
            sys,
            touching: resolve(&sys.touching),
            ordering: resolve(&sys.ordering),
            disjoint: resolve(&sys.disjoint),
        }
    }

    fn n(&self) -> usize {
        self.sys.indices.len()
    }

    /// Squared residual norm. `t` has the pinned values in place; `u` holds
    /// log-radii. The span is 1 by the pinning, so no normalization terms
    /// appear in the gradient.
    fn energy(&self, t: &[f64], u: &[f64]) -> f64 {
        let margin = self.sys.margin;
        let mut f = 0.0;
        for &(pi, pj) in &self.touching {
            let dt = t[pj] - t[pi];
            let g = dt * dt - 4.0 * (u[pi] + u[pj]).exp();
            f += g * g;
        }
        for &(pi, pj) in &self.ordering {
            let h = (margin - (t[pj] - t[pi])).max(0.0);
            f += h * h;
        }
        for &(pi, pj) in &self.disjoint {
            let dt = t[pj] - t[pi];
            let h = (4.0 * (u[pi] + u[pj]).exp() - dt * dt).max(0.0);
            f += h * h;
        }
        f
    }

    /// Gradient of [`Self::energy`] with respect to interior abscissas and
    /// all log-radii.
    fn gradient(&self, t: &[f64], u: &[f64], gt: &mut [f64], gu: &mut [f64]) {
        let margin = self.sys.margin;
        gt.iter_mut().for_each(|v| *v = 0.0);
        gu.iter_mut().for_each(|v| *v = 0.0);
        for &(pi, pj) in &self.touching {
            let dt = t[pj] - t[pi];
            let prod = (u[pi] + u[pj]).exp();
            let g = dt * dt - 4.0 * prod;
            let c = 2.0 * g;
            gt[pi] += c * (-2.0 * dt);
            gt[pj] += c * (2.0 * dt);
            // d/du of -4·e^{u_i+u_j} is -4·prod for both variables.
            gu[pi] += c * (-4.0 * prod);
            gu[pj] += c * (-4.0 * prod);
        }
        for &(pi, pj) in &self.ordering {
            let h = margin - (t[pj] - t[pi]);
            if h > 0.0 {
                let c = 2.0 * h;
                gt[pi] += c;
                gt[pj] -= c;
            }
        }
        for &(pi, pj) in &self.disjoint {
            let dt = t[pj] - t[pi];
            let prod = (u[pi] + u[pj]).exp();
            let h = 4.0 * prod - dt * dt;
            if h > 0.0 {
                let c = 2.0 * h;
                gt[pi] += c * (2.0 * dt);
                gt[pj] += c * (-2.0 * dt);
                gu[pi] += c * (4.0 * prod);
                gu[pj] += c * (4.0 * prod);
            }
        }
        // Pinned endpoints carry no gradient.
        gt[0] = 0.0;
        let n = self.n();
        gt[n - 1] = 0.0;
    }
}

/// Derives an independent RNG stream for restart `k` of a run seeded with
/// `seed` (splitmix64 finalizer).
fn restart_seed(seed: u64, k: u32) -> u64 {
    let mut z = seed ^ (u64::from(k).wrapping_add(1)).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Runs `restarts` independent damped gradient-descent runs with
/// backtracking line search, each from a seeded random start (ordered
/// abscissas mapped onto [0, 1], log-uniform radii in [1e−2, 1e2]), and
/// returns the best assignment found. Bit-reproducible for fixed inputs;
/// stops early once the residual is far below every assertion threshold.
pub fn solve_feasibility(
    sys: &ConstraintSystem,
    seed: u64,
    restarts: u32,
    iterations: u32,
) -> SolveResult {
    assert!(restarts >= 1 && iterations >= 1, "budgets must be positive");
    let problem = DescentProblem::new(sys);
    let n = problem.n();

    let mut best_t: Vec<f64> = Vec::new();
    let mut best_u: Vec<f64> = Vec::new();
    let mut best_f = f64::INFINITY;
    let mut used = 0;

    for k in 0..restarts {
        used = k + 1;
        if n == 0 {
            best_f = 0.0;
            break;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(restart_seed(seed, k));
        // Ordered random abscissas affinely mapped so the endpoints pin to
        // 0 and 1.
        let mut t: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
        t.sort_by(f64::total_cmp);
        let (lo, hi) = (t[0], t[n - 1]);
        if hi - lo > 1e-9 {
            let inv = 1.0 / (hi - lo);
            for v in &mut t {
                *v = (*v - lo) * inv;
            }
        } else {
            for (i, v) in t.iter_mut().enumerate() {
                *v = i as f64 / (n - 1).max(1) as f64;
            }
        }
        t[0] = 0.0;
        t[n - 1] = 1.0;
        let mut u: Vec<f64> = (0..n)
            .map(|_| rng.gen_range(-2.0..2.0) * std::f64::consts::LN_10)
            .collect();

        let f = descend(&problem, &mut t, &mut u, iterations);
        if f < best_f {
            best_f = f;
            best_t = t;
            best_u = u;
        }
        if best_f.sqrt() < 1e-13 {
            break;
        }
    }

    let best = Assignment {
        indices: sys.indices.clone(),
        t: best_t,
        r: best_u.iter().map(|&v| v.exp()).collect(),
    };
    let residual = if n == 0 { 0.0 } else { best_f.max(0.0).sqrt() };
    SolveResult {
        system: sys.name.clone(),
        best,
        residual,
        restarts_used: used,
        seed,
    }
}

/// Damped gradient descent with Armijo backtracking; returns the final
/// energy. The first and last abscissas stay pinned.
fn descend(problem: &DescentProblem, t: &mut [f64], u: &mut [f64], iterations: u32) -> f64 {
    let n = t.len();
    let mut gt = vec![0.0; n];
    let mut gu = vec![0.0; n];
    let mut trial_t = vec![0.0; n];
    let mut trial_u = vec![0.0; n];
    let mut f = problem.energy(t, u);
    let mut alpha = 1e-2;
    for _ in 0..iterations {
        if f < 1e-28 {
            break;
        }
        problem.gradient(t, u, &mut gt, &mut gu);
        let gnorm2: f64 = gt.iter().chain(gu.iter()).map(|g| g * g).sum();
        if gnorm2 < 1e-32 {
            break;
        }
        let mut step = alpha;
        let mut accepted = false;
        for _ in 0..70 {
            for i in 0..n {
                trial_t[i] = t[i] - step * gt[i];
                // Keep log-radii in a sane band so exp stays finite.
                trial_u[i] = (u[i] - step * gu[i]).clamp(-60.0, 60.0);
            }
            let f_new = problem.energy(&trial_t, &trial_u);
            if f_new <= f - 1e-4 * step * gnorm2 {
                t.copy_from_slice(&trial_t);
                u.copy_from_slice(&trial_u);
                f = f_new;
                alpha = (step * 2.0).min(1e3);
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::{build_chain, Side};

    #[test]
    fn canned_system_shapes() {
        let induced = build_constraint_system(SystemKind::Induced);
        assert_eq!(induced.touching.len(), 4);
        assert_eq!(induced.ordering.len(), 7);
        let expect: Vec<(usize, usize)> = vec![
            (1, 5),
            (1, 8),
            (2, 3),
            (2, 6),
            (3, 7),
            (4, 5),
            (4, 8),
            (6, 7),
        ];
        assert_eq!(induced.disjoint, expect);

        let symmetric = build_constraint_system(SystemKind::Symmetric);
        assert_eq!(symmetric.touching.len(), 8);
        assert_eq!(
            symmetric.disjoint,
            vec![(1, 5), (2, 6), (3, 7), (4, 8)]
        );

        let chain = build_constraint_system(SystemKind::SingleChainTop);
        assert_eq!(chain.indices, vec![2, 3, 6, 7]);
        assert_eq!(chain.touching.len(), 4);
        assert!(chain.disjoint.is_empty());
    }

    #[test]
    fn exact_chain_has_tiny_residuals() {
        let sys = build_constraint_system(SystemKind::SingleChainTop);
        let quad = build_chain(1.0, 2.0, 0.0, 1.0, Side::Above).unwrap();
        let a = Assignment {
            indices: vec![2, 3, 6, 7],
            t: quad.iter().map(|c| c.t).collect(),
            r: quad.iter().map(|c| c.r).collect(),
        };
        let res = sys.residuals(&a).unwrap();
        assert!(res.iter().all(|v| v.abs() <= 1e-12), "residuals: {res:?}");
    }

    #[test]
    fn unordered_assignment_trips_hinge() {
        let sys = build_constraint_system(SystemKind::SingleChainTop);
        let a = Assignment {
            indices: vec![2, 3, 6, 7],
            t: vec![0.0, 0.6, 0.4, 1.0],
            r: vec![1.0, 1.0, 1.0, 1.0],
        };
        let res = sys.residuals(&a).unwrap();
        // Ordering hinge for the (3,6) gap must be strictly positive.
        assert!(res[5] > 0.0, "residuals: {res:?}");
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let sys = build_constraint_system(SystemKind::SingleChainTop);
        let a = Assignment {
            indices: vec![1, 2, 3],
            t: vec![0.0, 0.5, 1.0],
            r: vec![1.0, 1.0, 1.0],
        };
        assert_eq!(sys.residuals(&a), Err(SolverError::DimensionMismatch));
    }

    #[test]
    fn gradient_matches_finite_differences() {
        let sys = build_constraint_system(SystemKind::Symmetric);
        let problem = DescentProblem::new(&sys);
        let n = 8;
        let t: Vec<f64> = vec![0.0, 0.11, 0.27, 0.4, 0.52, 0.63, 0.8, 1.0];
        let u: Vec<f64> = vec![0.3, -0.2, 0.8, -0.5, 0.1, 0.0, -0.7, 0.4];
        let mut gt = vec![0.0; n];
        let mut gu = vec![0.0; n];
        problem.gradient(&t, &u, &mut gt, &mut gu);
        let h = 1e-7;
        for i in 0..n {
            let mut tp = t.clone();
            let mut tm = t.clone();
            tp[i] += h;
            tm[i] -= h;
            let fd = (problem.energy(&tp, &u) - problem.energy(&tm, &u)) / (2.0 * h);
            let expect = if i == 0 || i == n - 1 { 0.0 } else { fd };
            assert!(
                (gt[i] - expect).abs() < 1e-5 * (1.0 + fd.abs()),
                "t[{i}]: analytic {} vs fd {}",
                gt[i],
                fd
            );
            let mut up = u.clone();
            let mut um = u.clone();
            up[i] += h;
            um[i] -= h;
            let fd = (problem.energy(&t, &up) - problem.energy(&t, &um)) / (2.0 * h);
            assert!(
                (gu[i] - fd).abs() < 1e-5 * (1.0 + fd.abs()),
                "u[{i}]: analytic {} vs fd {}",
                gu[i],
                fd
            );
        }
    }

    #[test]
    fn control_chain_solves() {
        let sys = build_constraint_system(SystemKind::SingleChainTop);
        let result = solve_feasibility(&sys, 1, 20, 2000);
        assert!(
            result.residual < 1e-10,
            "control residual {}",
            result.residual
        );
        assert!(result.best.r.iter().all(|&r| r > 0.0));
    }

    #[test]
    fn determinism_and_monotone_restarts() {
        let sys = build_constraint_system(SystemKind::Symmetric);
        let a = solve_feasibility(&sys, 7, 6, 300);
        let b = solve_feasibility(&sys, 7, 6, 300);
        assert_eq!(a, b);
        let more = solve_feasibility(&sys, 7, 12, 300);
        assert!(more.residual <= a.residual);
    }

    #[test]
    fn symmetric_residuals_never_all_vanish() {
        use rand::{Rng, SeedableRng};
        let sys = build_constraint_system(SystemKind::Symmetric);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let mut t: Vec<f64> = (0..8).map(|_| rng.gen_range(-3.0..3.0)).collect();
            t.sort_by(f64::total_cmp);
            let r: Vec<f64> = (0..8).map(|_| 10f64.powf(rng.gen_range(-2.0..2.0))).collect();
            let a = Assignment {
                indices: (1..=8).collect(),
                t,
                r,
            };
            assert!(sys.residual_norm(&a).unwrap() > 0.0);
        }
        // Even the best assignment the solver can find keeps a residual.
        let best = solve_feasibility(&sys, 2, 10, 400);
        assert!(best.residual > 0.0);
    }

    #[test]
    fn zero_constraint_system_is_trivially_feasible() {
        let sys = custom_system("empty", vec![1, 2], vec![], vec![], vec![], 1e-4).unwrap();
        let result = solve_feasibility(&sys, 3, 2, 10);
        assert_eq!(result.residual, 0.0);
    }

    #[test]
    fn octuple_assignment_roundtrip() {
        let top = build_chain(1.0, 1.0, 0.0, 1.0, Side::Above).unwrap();
        let bottom = build_chain(1.7, 1.7, -0.5, 1.0, Side::Below).unwrap();
        let cfg = crate::chains::OctupleConfig::from_chains(
            &top,
            &bottom,
            crate::chains::ConfigKind::Symmetric,
        )
        .unwrap();
        let a = Assignment::from_octuple(&cfg);
        let back = a.to_octuple(crate::chains::ConfigKind::Symmetric).unwrap();
        assert_eq!(back, cfg);
        let short = Assignment {
            indices: vec![2, 3, 6, 7],
            t: vec![0.0; 4],
            r: vec![1.0; 4],
        };
        assert!(short.to_octuple(crate::chains::ConfigKind::Symmetric).is_err());
    }

    #[test]
    fn custom_system_validates_pairs() {
        assert!(matches!(
            custom_system("bad", vec![1, 2], vec![(1, 3)], vec![], vec![], 1e-4),
            Err(SolverError::InvalidSystem(_))
        ));
    }
}
