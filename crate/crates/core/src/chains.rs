//! Algebra of circles tangent to a common axis.
//!
//! Two circles on the same side of the x-axis, tangent to it at `t_a` and
//! `t_b` with radii `r_a`, `r_b`, touch each other exactly when
//! `|t_b − t_a| = 2√(r_a·r_b)`. Everything in this module unwinds from that
//! identity: the inner/outer tangent-circle constructions, the gap law of
//! four-circle chains (`m·n = ℓ·r`), and the certificate showing that the
//! eight-circle touching configurations are mutually inconsistent.

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use crate::geom::{axis_tangent_to_circle, AxisTangentCircle, Side};

#[derive(Debug, Error, PartialEq)]
pub enum ChainError {
    #[error("radius must be positive (got {0})")]
    NonpositiveRadius(f64),
    #[error("gap lengths must be positive (got {0})")]
    NonpositiveInput(f64),
    #[error("circles must lie on the same side of the axis")]
    SideMismatch,
    #[error("no outer tangent circle: left radius {0} does not exceed right radius {1}")]
    NoOuterSolution(f64, f64),
    #[error("not a tangent chain: pair ({0}, {1}) has relative residual {2:e}")]
    NotAChain(usize, usize, f64),
    #[error("configuration has wrong sides for index {0}")]
    WrongSide(usize),
    #[error("touching pair ({0}, {1}) exceeds tolerance: relative residual {2:e}")]
    TangencyViolated(usize, usize, f64),
    #[error("abscissas are not strictly ordered at index {0}")]
    NotOrdered(usize),
    #[error("configuration is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("rebuilt configuration is not strictly ordered between indices {0} and {1}")]
    OrderViolation(usize, usize),
}

/// Center-to-center abscissa gap of two touching same-side axis-tangent
/// circles: `2√(r_a·r_b)`.
pub fn tangent_gap(r_a: f64, r_b: f64) -> Result<f64, ChainError> {
    if !(r_a > 0.0) {
        return Err(ChainError::NonpositiveRadius(r_a));
    }
    if !(r_b > 0.0) {
        return Err(ChainError::NonpositiveRadius(r_b));
    }
    Ok(2.0 * (r_a * r_b).sqrt())
}

/// Relative tangency residual of a same-side pair: `|Δt² − 4·r_a·r_b|`
/// normalized by `scale²`.
pub fn tangency_residual(a: &AxisTangentCircle, b: &AxisTangentCircle, scale: f64) -> f64 {
    let dt = b.t - a.t;
    (dt * dt - 4.0 * a.r * b.r).abs() / (scale * scale)
}

/// The circle between `a` and `b` tangent to both and to the axis.
///
/// With `a.t < b.t` the solution satisfies `√r = (b.t − a.t)/(2(√r_a + √r_b))`
/// and sits strictly between the two.
pub fn inner_tangent_circle(
    a: &AxisTangentCircle,
    b: &AxisTangentCircle,
) -> Result<AxisTangentCircle, ChainError> {
    if a.side != b.side {
        return Err(ChainError::SideMismatch);
    }
    if !(a.r > 0.0) {
        return Err(ChainError::NonpositiveRadius(a.r));
    }
    if !(b.r > 0.0) {
        return Err(ChainError::NonpositiveRadius(b.r));
    }
    let span = b.t - a.t;
    if !(span > 0.0) {
        return Err(ChainError::NotOrdered(0));
    }
    let sqrt_r = span / (2.0 * (a.r.sqrt() + b.r.sqrt()));
    let r = sqrt_r * sqrt_r;
    let t = a.t + tangent_gap(a.r, r)?;
    Ok(AxisTangentCircle::new(t, r, a.side))
}

/// The circle beyond `b` tangent to `a`, `b` and the axis, which exists only
/// when `a` is strictly larger: `√r = (b.t − a.t)/(2(√r_a − √r_b))`.
pub fn outer_tangent_circle(
    a: &AxisTangentCircle,
    b: &AxisTangentCircle,
) -> Result<AxisTangentCircle, ChainError> {
    if a.side != b.side {
        return Err(ChainError::SideMismatch);
    }
    if !(a.r > 0.0) {
        return Err(ChainError::NonpositiveRadius(a.r));
    }
    if !(b.r > 0.0) {
        return Err(ChainError::NonpositiveRadius(b.r));
    }
    let span = b.t - a.t;
    if !(span > 0.0) {
        return Err(ChainError::NotOrdered(0));
    }
    let gap = a.r.sqrt() - b.r.sqrt();
    if gap <= crate::geom::epsilon() * a.r.sqrt().max(b.r.sqrt()) {
        return Err(ChainError::NoOuterSolution(a.r, b.r));
    }
    let sqrt_r = span / (2.0 * gap);
    let r = sqrt_r * sqrt_r;
    let t = b.t + tangent_gap(b.r, r)?;
    Ok(AxisTangentCircle::new(t, r, a.side))
}

/// The four abscissa gaps of a tangent four-chain: `ℓ = t₂−t₁`,
/// `m = t₃−t₂`, `r = t₄−t₃`, and the span `n = ℓ + m + r`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChainGaps {
    pub l: f64,
    pub m: f64,
    pub r: f64,
    pub n: f64,
}

/// Checks that four same-side, t-ordered circles form a tangent chain with
/// touching pairs (1,2), (2,3), (3,4) and (1,4), and returns its gaps.
///
/// `tol` is a relative tolerance on the tangency residuals, measured against
/// the chain span squared.
pub fn chain_gaps_check(
    quad: &[AxisTangentCircle; 4],
    tol: f64,
) -> Result<ChainGaps, ChainError> {
    for w in quad.windows(2) {
        if w[0].side != w[1].side {
            return Err(ChainError::SideMismatch);
        }
    }
    for (i, w) in quad.windows(2).enumerate() {
        if !(w[1].t > w[0].t) {
            return Err(ChainError::NotOrdered(i + 1));
        }
    }
    let span = quad[3].t - quad[0].t;
    for &(i, j) in &[(0usize, 1usize), (1, 2), (2, 3), (0, 3)] {
        let res = tangency_residual(&quad[i], &quad[j], span);
        if res > tol {
            return Err(ChainError::NotAChain(i + 1, j + 1, res));
        }
    }
    Ok(ChainGaps {
        l: quad[1].t - quad[0].t,
        m: quad[2].t - quad[1].t,
        r: quad[3].t - quad[2].t,
        n: span,
    })
}

/// The middle gap of a tangent four-chain with outer gaps `ℓ` and `r`: the
/// unique positive root `m` of `ℓ·r = m(ℓ + m + r)`,
/// `m = (−(ℓ+r) + √((ℓ+r)² + 4ℓr)) / 2`.
pub fn middle_gap(l: f64, r: f64) -> Result<f64, ChainError> {
    if !(l > 0.0) {
        return Err(ChainError::NonpositiveInput(l));
    }
    if !(r > 0.0) {
        return Err(ChainError::NonpositiveInput(r));
    }
    let s = l + r;
    Ok((-s + (s * s + 4.0 * l * r).sqrt()) / 2.0)
}

/// Partial derivatives `(∂m/∂ℓ, ∂m/∂r)` of [`middle_gap`]; both strictly
/// positive for positive arguments.
pub fn middle_gap_gradient(l: f64, r: f64) -> Result<(f64, f64), ChainError> {
    if !(l > 0.0) {
        return Err(ChainError::NonpositiveInput(l));
    }
    if !(r > 0.0) {
        return Err(ChainError::NonpositiveInput(r));
    }
    let s = l + r;
    let root = (s * s + 4.0 * l * r).sqrt();
    Ok((
        0.5 * ((l + 3.0 * r) / root - 1.0),
        0.5 * ((r + 3.0 * l) / root - 1.0),
    ))
}

/// Builds a tangent four-chain with outer gaps `ℓ`, `r`, anchored at
/// `(anchor_t, anchor_r)`. All four tangencies hold by construction: the
/// middle gap is [`middle_gap`]`(ℓ, r)` and radii follow
/// `r_{i+1} = gap² / (4·r_i)`.
pub fn build_chain(
    l: f64,
    r: f64,
    anchor_t: f64,
    anchor_r: f64,
    side: Side,
) -> Result<[AxisTangentCircle; 4], ChainError> {
    if !(anchor_r > 0.0) {
        return Err(ChainError::NonpositiveInput(anchor_r));
    }
    let m = middle_gap(l, r)?;
    let t1 = anchor_t;
    let t2 = t1 + l;
    let t3 = t2 + m;
    let t4 = t3 + r;
    let r1 = anchor_r;
    let r2 = l * l / (4.0 * r1);
    let r3 = m * m / (4.0 * r2);
    let r4 = r * r / (4.0 * r3);
    Ok([
        AxisTangentCircle::new(t1, r1, side),
        AxisTangentCircle::new(t2, r2, side),
        AxisTangentCircle::new(t3, r3, side),
        AxisTangentCircle::new(t4, r4, side),
    ])
}

/// Which touching pairs an eight-circle configuration must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConfigKind {
    /// Touching pairs (1,4), (2,7), (3,6), (5,8).
    Induced,
    /// The induced pairs plus (1,8), (4,5), (2,3), (6,7).
    Symmetric,
}

/// Touching pairs required by the induced configuration, 1-based.
pub const INDUCED_PAIRS: [(usize, usize); 4] = [(1, 4), (2, 7), (3, 6), (5, 8)];

/// Additional touching pairs required by the symmetric configuration.
pub const SYMMETRIC_EXTRA_PAIRS: [(usize, usize); 4] = [(1, 8), (4, 5), (2, 3), (6, 7)];

/// All touching pairs required by `kind`.
pub fn required_pairs(kind: ConfigKind) -> Vec<(usize, usize)> {
    let mut pairs = INDUCED_PAIRS.to_vec();
    if kind == ConfigKind::Symmetric {
        pairs.extend_from_slice(&SYMMETRIC_EXTRA_PAIRS);
    }
    pairs
}

/// The side circle `i` (1-based) must lie on: 2, 3, 6, 7 above the axis and
/// 1, 4, 5, 8 below.
pub fn expected_side(index: usize) -> Side {
    match index {
        2 | 3 | 6 | 7 => Side::Above,
        1 | 4 | 5 | 8 => Side::Below,
        _ => panic!("circle index out of range: {index}"),
    }
}

/// Eight axis-tangent circles indexed 1..8 with the fixed side assignment,
/// plus the set of touching pairs they are meant to satisfy. The x-axis
/// itself plays the role of the ninth circle of the arrangement.
///
/// Construction enforces sides and finiteness; strict t-ordering and the
/// tangency residuals are checked by the operations that need them, so that
/// approximate (solver-produced) configurations remain expressible.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OctupleConfig {
    pub circles: [AxisTangentCircle; 8],
    pub kind: ConfigKind,
}

impl OctupleConfig {
    pub fn new(circles: [AxisTangentCircle; 8], kind: ConfigKind) -> Result<Self, ChainError> {
        for (i, c) in circles.iter().enumerate() {
            if !(c.r > 0.0) {
                return Err(ChainError::NonpositiveRadius(c.r));
            }
            if !c.t.is_finite() {
                return Err(ChainError::NonpositiveInput(c.t));
            }
            if c.side != expected_side(i + 1) {
                return Err(ChainError::WrongSide(i + 1));
            }
        }
        Ok(OctupleConfig { circles, kind })
    }

    /// Assembles a configuration from a top chain (circles 2, 3, 6, 7 in
    /// chain order) and a bottom chain (circles 1, 4, 5, 8).
    pub fn from_chains(
        top: &[AxisTangentCircle; 4],
        bottom: &[AxisTangentCircle; 4],
        kind: ConfigKind,
    ) -> Result<Self, ChainError> {
        let circles = [
            bottom[0], top[0], top[1], bottom[1], bottom[2], top[2], top[3], bottom[3],
        ];
        OctupleConfig::new(circles, kind)
    }

    /// 1-based accessor.
    pub fn circle(&self, index: usize) -> &AxisTangentCircle {
        &self.circles[index - 1]
    }

    /// Abscissa span `t₈ − t₁`.
    pub fn span(&self) -> f64 {
        self.circles[7].t - self.circles[0].t
    }

    /// Checks strict t-ordering, returning the first offending index.
    pub fn check_ordering(&self) -> Result<(), ChainError> {
        for i in 0..7 {
            if !(self.circles[i + 1].t > self.circles[i].t) {
                return Err(ChainError::NotOrdered(i + 2));
            }
        }
        Ok(())
    }

    /// Largest relative tangency residual over the touching pairs required
    /// by this configuration's kind.
    pub fn max_tangency_residual(&self) -> f64 {
        let span = self.span().abs().max(f64::MIN_POSITIVE);
        required_pairs(self.kind)
            .iter()
            .map(|&(i, j)| tangency_residual(self.circle(i), self.circle(j), span))
            .fold(0.0, f64::max)
    }
}

/// What happened to each replaced circle during [`symmetrize`], along with
/// the ordering relations the replacement is expected to satisfy on exact
/// input.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SymmetrizeReport {
    /// `(old r₁, new r₁, old t₁, new t₁)` if circle 1 had to be enlarged to
    /// dominate circle 5.
    pub enlarged_c1: Option<(f64, f64, f64, f64)>,
    /// `(index, old t, new t)` for each replaced circle (3, 7, 4, 8).
    pub replaced: Vec<(usize, f64, f64)>,
    /// `t₃' < t₃` held.
    pub top_inner_moved_left: bool,
    /// `t₆ < t₇' < t₇` held.
    pub top_outer_between: bool,
    /// `t₄' < t₄` held.
    pub bottom_inner_moved_left: bool,
    /// `t₅ < t₈' < t₈` held.
    pub bottom_outer_between: bool,
    /// Whether the rebuilt configuration is strictly t-ordered across both
    /// sides. With exact tangencies this can essentially never hold (the
    /// contradiction certificate quantifies why), so it is reported rather
    /// than enforced.
    pub output_strictly_ordered: bool,
}

/// Rebuilds an (approximately) induced configuration into a symmetric one:
/// circles 2 and 6 stay fixed and 3, 7 are replaced by the inner and outer
/// circles tangent to both; below the axis, circle 1 is enlarged if needed
/// until it dominates circle 5, then 4 and 8 are replaced likewise.
///
/// The replacement tangencies are exact by construction. The ordering
/// relations claimed for exact input are reported, not asserted; the same
/// goes for cross-side interleaving of the output, which exact tangencies
/// rule out. Only a within-side ordering failure (which the constructions
/// themselves prevent) is an `OrderViolation` error.
pub fn symmetrize(
    cfg: &OctupleConfig,
    tol: f64,
) -> Result<(OctupleConfig, SymmetrizeReport), ChainError> {
    if cfg.kind != ConfigKind::Induced {
        return Err(ChainError::NotSymmetric(
            "symmetrize expects an induced configuration".into(),
        ));
    }
    cfg.check_ordering()?;
    let span = cfg.span();
    for &(i, j) in &INDUCED_PAIRS {
        let res = tangency_residual(cfg.circle(i), cfg.circle(j), span);
        if res > tol {
            return Err(ChainError::TangencyViolated(i, j, res));
        }
    }

    let c = &cfg.circles;
    let (c2, c3, c6, c7) = (c[1], c[2], c[5], c[6]);
    let (mut c1, c4, c5, c8) = (c[0], c[3], c[4], c[7]);

    let c3_new = inner_tangent_circle(&c2, &c6)?;
    let c7_new = outer_tangent_circle(&c2, &c6)?;

    // Enlarge circle 1 if it does not dominate circle 5, preserving its
    // tangency to circle 4 and to the axis. Smallest enlargement beyond a
    // fixed relative margin.
    const MARGIN: f64 = 1e-6;
    let mut enlarged = None;
    if c1.r <= c5.r * (1.0 + MARGIN) {
        let new_r = c5.r * (1.0 + MARGIN);
        let new_t = c4.t - tangent_gap(new_r, c4.r)?;
        enlarged = Some((c1.r, new_r, c1.t, new_t));
        c1 = AxisTangentCircle::new(new_t, new_r, Side::Below);
    }

    let c4_new = inner_tangent_circle(&c1, &c5)?;
    let c8_new = outer_tangent_circle(&c1, &c5)?;

    let out = OctupleConfig::new(
        [c1, c2, c3_new, c4_new, c5, c6, c7_new, c8_new],
        ConfigKind::Symmetric,
    )?;
    // Within-side orderings must survive the rebuild.
    for &(i, j) in &[(2usize, 3usize), (3, 6), (6, 7), (1, 4), (4, 5), (5, 8)] {
        if !(out.circle(j).t > out.circle(i).t) {
            return Err(ChainError::OrderViolation(i, j));
        }
    }

    let report = SymmetrizeReport {
        enlarged_c1: enlarged,
        replaced: vec![
            (3, c3.t, c3_new.t),
            (7, c7.t, c7_new.t),
            (4, c4.t, c4_new.t),
            (8, c8.t, c8_new.t),
        ],
        top_inner_moved_left: c3_new.t < c3.t,
        top_outer_between: c6.t < c7_new.t && c7_new.t < c7.t,
        bottom_inner_moved_left: c4_new.t < c4.t,
        bottom_outer_between: c5.t < c8_new.t && c8_new.t < c8.t,
        output_strictly_ordered: out.check_ordering().is_ok(),
    };
    Ok((out, report))
}

/// The two mutually exclusive bounds a symmetric configuration places on its
/// middle gaps, and by how much the configuration violates one of them.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ContradictionReport {
    /// Measured `t₆ − t₃`.
    pub m_top: f64,
    /// Measured `t₅ − t₄`.
    pub m_bottom: f64,
    /// `middle_gap(ℓ', r') − middle_gap(ℓ, r) > 0`: the amount by which the
    /// bottom middle gap must exceed the top one under the chain gap law.
    pub monotonicity_bound: f64,
    /// `m_top − m_bottom = (t₄−t₃) + (t₆−t₅)`: the amount by which the top
    /// middle gap must exceed the bottom one under strict nesting.
    pub nesting_bound: f64,
    /// Which of the two bounds the configuration violates.
    pub violated: String,
    /// Violation magnitude; positive for every admissible input.
    pub magnitude: f64,
}

/// Certifies the inconsistency of a (near-)symmetric configuration.
///
/// Writing `ℓ = t₃−t₂`, `r = t₇−t₆` for the top chain and `ℓ' = t₄−t₁`,
/// `r' = t₈−t₅` for the bottom one, the chain gap law forces
/// `m_top = middle_gap(ℓ,r) < middle_gap(ℓ',r') = m_bottom` (strict
/// monotonicity, since `ℓ < ℓ'` and `r < r'`), while nesting
/// `t₃ < t₄ ≤ t₅ < t₆` forces `m_top > m_bottom`. No input can satisfy both;
/// the report quantifies whichever bound the input violates.
pub fn contradiction_certificate(
    cfg: &OctupleConfig,
    tol: f64,
) -> Result<ContradictionReport, ChainError> {
    if cfg.kind != ConfigKind::Symmetric {
        return Err(ChainError::NotSymmetric(
            "certificate expects a symmetric configuration".into(),
        ));
    }
    let span = cfg.span();
    if !(span > 0.0) {
        return Err(ChainError::NotOrdered(8));
    }
    let residual = cfg.max_tangency_residual();
    if residual > tol {
        return Err(ChainError::NotSymmetric(format!(
            "tangency residual {residual:e} exceeds tolerance {tol:e}"
        )));
    }
    let t = |i: usize| cfg.circle(i).t;
    // Per-chain orderings needed for the gap quantities to be meaningful.
    // The interleaving t₅ < t₆ is deliberately NOT required: its failure is
    // one of the conflicts this certificate reports.
    for &(i, j) in &[
        (1usize, 2usize),
        (2, 3),
        (3, 4),
        (4, 5),
        (5, 8),
        (3, 6),
        (6, 7),
        (7, 8),
    ] {
        if !(t(j) > t(i)) {
            return Err(ChainError::NotOrdered(j));
        }
    }
    let l_top = t(3) - t(2);
    let r_top = t(7) - t(6);
    let l_bot = t(4) - t(1);
    let r_bot = t(8) - t(5);
    if !(l_top < l_bot) {
        return Err(ChainError::NotOrdered(4));
    }
    if !(r_top < r_bot) {
        return Err(ChainError::NotOrdered(8));
    }
    let m_top = t(6) - t(3);
    let m_bottom = t(5) - t(4);
    let monotonicity_bound = middle_gap(l_bot, r_bot)? - middle_gap(l_top, r_top)?;
    let nesting_bound = m_top - m_bottom;

    // An input with exact chain tangencies has m_top = middle_gap(ℓ,r) and
    // m_bottom = middle_gap(ℓ',r'), so the two violations below cannot both
    // vanish: their sum is nesting_bound + monotonicity_bound > 0.
    let monotonicity_violation = (nesting_bound + monotonicity_bound).max(0.0);
    let nesting_violation = (-nesting_bound).max(0.0);
    let (violated, magnitude) = if nesting_violation > monotonicity_violation {
        (
            format!(
                "nesting: t3 < t4 <= t5 < t6 requires m_top > m_bottom, but m_top - m_bottom = {:.6}",
                nesting_bound
            ),
            nesting_violation,
        )
    } else {
        (
            format!(
                "monotonicity: the gap law requires m_bottom - m_top >= {:.6}, but m_top - m_bottom = {:.6}",
                monotonicity_bound, nesting_bound
            ),
            monotonicity_violation,
        )
    };
    Ok(ContradictionReport {
        m_top,
        m_bottom,
        monotonicity_bound,
        nesting_bound,
        violated,
        magnitude,
    })
}
