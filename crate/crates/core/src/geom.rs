//! Inversive-geometry kernel: points, generalized circles, intersection
//! classification and Möbius transformations.
//!
//! Everything here works with one global *relative* tolerance (see
//! [`epsilon`]); geometric predicates scale it by the local magnitude of the
//! operands so that touching-vs-crossing decisions behave the same at any
//! scale.

use std::sync::atomic::{AtomicU64, Ordering};

use num_complex::Complex64;
use thiserror::Error;

/// Bits of the current global tolerance; 0 means "unset, use the default".
static EPS_BITS: AtomicU64 = AtomicU64::new(0);

const DEFAULT_EPSILON: f64 = 1e-9;

/// The global relative tolerance used by geometric predicates.
pub fn epsilon() -> f64 {
    let bits = EPS_BITS.load(Ordering::Relaxed);
    if bits == 0 {
        DEFAULT_EPSILON
    } else {
        f64::from_bits(bits)
    }
}

/// Overrides the global relative tolerance. Panics unless `eps` is a finite
/// positive number.
pub fn set_epsilon(eps: f64) {
    assert!(eps.is_finite() && eps > 0.0, "tolerance must be positive");
    EPS_BITS.store(eps.to_bits(), Ordering::Relaxed);
}

#[derive(Debug, Error, PartialEq)]
pub enum GeomError {
    #[error("the two loci coincide within tolerance")]
    CoincidentCircles,
    #[error("degenerate point triple: two of the points coincide")]
    DegeneratePoints,
    #[error("radius must be positive (got {0})")]
    NonpositiveRadius(f64),
    #[error("Möbius coefficients are singular (|ad - bc| = {0:e})")]
    DegenerateMap(f64),
}

/// A point of the plane. Coordinates are expected to be finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dist(&self, other: &Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    fn to_complex(self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }

    fn from_complex(z: Complex64) -> Self {
        Point { x: z.re, y: z.im }
    }
}

/// A point of the extended plane: either finite or the point at infinity.
///
/// Möbius maps send the pole to infinity, and transported representations
/// may legitimately contain it, so infinity is a value rather than an error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedPoint {
    Finite(Point),
    Infinity,
}

impl ExtendedPoint {
    pub fn finite(self) -> Option<Point> {
        match self {
            ExtendedPoint::Finite(p) => Some(p),
            ExtendedPoint::Infinity => None,
        }
    }
}

/// A circle or a line, the two shapes closed under Möbius transformations.
///
/// Lines carry a unit normal `(a, b)` and offset `c`, with locus
/// `a·x + b·y = c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeneralizedCircle {
    Circle { center: Point, radius: f64 },
    Line { a: f64, b: f64, c: f64 },
}

impl GeneralizedCircle {
    pub fn circle(center: Point, radius: f64) -> Self {
        GeneralizedCircle::Circle { center, radius }
    }

    /// Line with normal `(a, b)` (not necessarily unit) and offset `c`.
    /// The normal is rescaled to unit length and the sign is normalized so
    /// that `a > 0`, or `a == 0` and `b > 0`.
    pub fn line(a: f64, b: f64, c: f64) -> Self {
        let n = a.hypot(b);
        assert!(n > 0.0, "line normal must be nonzero");
        let (mut a, mut b, mut c) = (a / n, b / n, c / n);
        if a < 0.0 || (a == 0.0 && b < 0.0) {
            a = -a;
            b = -b;
            c = -c;
        }
        GeneralizedCircle::Line { a, b, c }
    }

    pub fn is_line(&self) -> bool {
        matches!(self, GeneralizedCircle::Line { .. })
    }

    /// Signed distance-like magnitude of a point from the locus: for circles
    /// `||p - center| - r|`, for lines the perpendicular distance.
    pub fn locus_distance(&self, p: &Point) -> f64 {
        match self {
            GeneralizedCircle::Circle { center, radius } => (center.dist(p) - radius).abs(),
            GeneralizedCircle::Line { a, b, c } => (a * p.x + b * p.y - c).abs(),
        }
    }

    /// A magnitude representative of the locus near `p`, used to scale the
    /// relative tolerance in on-locus tests.
    fn local_scale(&self, p: &Point) -> f64 {
        match self {
            GeneralizedCircle::Circle { center, radius } => radius.max(center.dist(p)).max(1e-300),
            GeneralizedCircle::Line { c, .. } => c.abs().max(p.x.hypot(p.y)).max(1.0),
        }
    }

    /// Whether `p` lies on the locus within the global relative tolerance.
    pub fn contains_point(&self, p: &Point) -> bool {
        self.locus_distance(p) <= epsilon() * self.local_scale(p)
    }

    /// The tangent direction of the locus at `p` (assumed on the locus), in
    /// counterclockwise traversal for circles and in the direction of
    /// increasing abscissa parameter for lines.
    pub fn tangent_at(&self, p: &Point) -> (f64, f64) {
        match self {
            GeneralizedCircle::Circle { center, .. } => {
                let (dx, dy) = (p.x - center.x, p.y - center.y);
                let n = dx.hypot(dy).max(1e-300);
                (-dy / n, dx / n)
            }
            GeneralizedCircle::Line { a, b, .. } => (-b, *a),
        }
    }

    /// Signed curvature at a point when traversed in direction `dir`:
    /// `+1/r` when the center lies to the left of `dir`, `-1/r` to the
    /// right, `0` for lines. Used to order tangent arc-ends around a vertex.
    pub fn signed_curvature(&self, p: &Point, dir: (f64, f64)) -> f64 {
        match self {
            GeneralizedCircle::Circle { center, radius } => {
                let to_center = (center.x - p.x, center.y - p.y);
                let cross = dir.0 * to_center.1 - dir.1 * to_center.0;
                if cross >= 0.0 {
                    1.0 / radius
                } else {
                    -1.0 / radius
                }
            }
            GeneralizedCircle::Line { .. } => 0.0,
        }
    }
}

/// Classification of how two distinct generalized circles meet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IntersectionClass {
    /// No common point, neither locus inside the other.
    DisjointOutside,
    /// No common point, one circle strictly inside the other.
    DisjointNested,
    /// Exactly one common point.
    Touching(Point),
    /// Exactly two common points.
    Crossing(Point, Point),
}

impl IntersectionClass {
    pub fn tag(&self) -> &'static str {
        match self {
            IntersectionClass::DisjointOutside => "disjoint-outside",
            IntersectionClass::DisjointNested => "disjoint-nested",
            IntersectionClass::Touching(_) => "touching",
            IntersectionClass::Crossing(_, _) => "crossing",
        }
    }

    pub fn points(&self) -> Vec<Point> {
        match self {
            IntersectionClass::Touching(p) => vec![*p],
            IntersectionClass::Crossing(p, q) => vec![*p, *q],
            _ => Vec::new(),
        }
    }
}

/// Classifies the intersection of two generalized circles.
///
/// Touching is decided within the global relative tolerance scaled by the
/// local magnitude (max of radii and center distance), so a pair constructed
/// tangent stays tangent after well-conditioned transformations.
pub fn classify_intersection(
    c1: &GeneralizedCircle,
    c2: &GeneralizedCircle,
) -> Result<IntersectionClass, GeomError> {
    use GeneralizedCircle::*;
    match (c1, c2) {
        (Circle { center: p1, radius: r1 }, Circle { center: p2, radius: r2 }) => {
            classify_circle_circle(p1, *r1, p2, *r2)
        }
        (Circle { center, radius }, Line { a, b, c })
        | (Line { a, b, c }, Circle { center, radius }) => {
            classify_circle_line(center, *radius, *a, *b, *c)
        }
        (Line { a: a1, b: b1, c: c1 }, Line { a: a2, b: b2, c: c2 }) => {
            classify_line_line(*a1, *b1, *c1, *a2, *b2, *c2)
        }
    }
}

fn classify_circle_circle(
    p1: &Point,
    r1: f64,
    p2: &Point,
    r2: f64,
) -> Result<IntersectionClass, GeomError> {
    let d = p1.dist(p2);
    let scale = r1.max(r2).max(d);
    let tol = epsilon() * scale;
    if d <= tol && (r1 - r2).abs() <= tol {
        return Err(GeomError::CoincidentCircles);
    }
    let outer = d - (r1 + r2);
    let inner = d - (r1 - r2).abs();
    if outer.abs() <= tol {
        // External tangency: the touching point sits between the centers.
        let t = r1 / d;
        return Ok(IntersectionClass::Touching(Point::new(
            p1.x + t * (p2.x - p1.x),
            p1.y + t * (p2.y - p1.y),
        )));
    }
    if inner.abs() <= tol && d > tol {
        // Internal tangency: on the ray from the larger center through the
        // smaller one, at the larger radius.
        let (big, r_big) = if r1 >= r2 { (p1, r1) } else { (p2, r2) };
        let other = if r1 >= r2 { p2 } else { p1 };
        let t = r_big / d;
        return Ok(IntersectionClass::Touching(Point::new(
            big.x + t * (other.x - big.x),
            big.y + t * (other.y - big.y),
        )));
    }
    if outer > 0.0 {
        return Ok(IntersectionClass::DisjointOutside);
    }
    if inner < 0.0 {
        return Ok(IntersectionClass::DisjointNested);
    }
    // Proper crossing: foot along the center line plus symmetric offsets.
    let ux = (p2.x - p1.x) / d;
    let uy = (p2.y - p1.y) / d;
    let t = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    let h_sq = (r1 * r1 - t * t).max(0.0);
    let h = h_sq.sqrt();
    let foot = Point::new(p1.x + t * ux, p1.y + t * uy);
    Ok(IntersectionClass::Crossing(
        Point::new(foot.x - h * uy, foot.y + h * ux),
        Point::new(foot.x + h * uy, foot.y - h * ux),
    ))
}

fn classify_circle_line(
    center: &Point,
    r: f64,
    a: f64,
    b: f64,
    c: f64,
) -> Result<IntersectionClass, GeomError> {
    let signed = a * center.x + b * center.y - c;
    let dist = signed.abs();
    let tol = epsilon() * r.max(dist);
    let foot = Point::new(center.x - signed * a, center.y - signed * b);
    if (dist - r).abs() <= tol {
        return Ok(IntersectionClass::Touching(foot));
    }
    if dist > r {
        return Ok(IntersectionClass::DisjointOutside);
    }
    let h = (r * r - signed * signed).max(0.0).sqrt();
    // Tangent direction of the line.
    let (tx, ty) = (-b, a);
    Ok(IntersectionClass::Crossing(
        Point::new(foot.x - h * tx, foot.y - h * ty),
        Point::new(foot.x + h * tx, foot.y + h * ty),
    ))
}

fn classify_line_line(
    a1: f64,
    b1: f64,
    c1: f64,
    a2: f64,
    b2: f64,
    c2: f64,
) -> Result<IntersectionClass, GeomError> {
    let det = a1 * b2 - b1 * a2;
    let scale = c1.abs().max(c2.abs()).max(1.0);
    if det.abs() <= epsilon() {
        // Parallel. Normals are unit and sign-free up to direction.
        let same_dir = a1 * a2 + b1 * b2 > 0.0;
        let offset_gap = if same_dir { (c1 - c2).abs() } else { (c1 + c2).abs() };
        if offset_gap <= epsilon() * scale {
            return Err(GeomError::CoincidentCircles);
        }
        return Ok(IntersectionClass::DisjointOutside);
    }
    // Two non-parallel lines share exactly one point of the plane.
    let x = (c1 * b2 - b1 * c2) / det;
    let y = (a1 * c2 - c1 * a2) / det;
    Ok(IntersectionClass::Touching(Point::new(x, y)))
}

/// Fits the generalized circle through three pairwise distinct points;
/// collinear triples yield a line.
pub fn circle_through_points(
    p1: &Point,
    p2: &Point,
    p3: &Point,
) -> Result<GeneralizedCircle, GeomError> {
    let d12 = p1.dist(p2);
    let d13 = p1.dist(p3);
    let d23 = p2.dist(p3);
    let scale = d12.max(d13).max(d23);
    let tol = epsilon() * scale;
    if d12 <= tol || d13 <= tol || d23 <= tol {
        return Err(GeomError::DegeneratePoints);
    }
    // Twice the signed triangle area; zero means collinear.
    let cross = (p2.x - p1.x) * (p3.y - p1.y) - (p2.y - p1.y) * (p3.x - p1.x);
    if cross.abs() <= epsilon() * scale * scale {
        let (dx, dy) = (p2.x - p1.x, p2.y - p1.y);
        let line = GeneralizedCircle::line(-dy, dx, -dy * p1.x + dx * p1.y);
        return Ok(line);
    }
    let sq = |p: &Point| p.x * p.x + p.y * p.y;
    let d = 2.0 * cross;
    let ux = (sq(p1) * (p2.y - p3.y) + sq(p2) * (p3.y - p1.y) + sq(p3) * (p1.y - p2.y)) / d;
    let uy = (sq(p1) * (p3.x - p2.x) + sq(p2) * (p1.x - p3.x) + sq(p3) * (p2.x - p1.x)) / d;
    let center = Point::new(ux, uy);
    let radius = (center.dist(p1) + center.dist(p2) + center.dist(p3)) / 3.0;
    Ok(GeneralizedCircle::circle(center, radius))
}

/// An orientation-preserving fractional linear map `z ↦ (az + b)/(cz + d)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusMap {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl MobiusMap {
    /// Builds a map, rejecting (near-)singular coefficient quadruples.
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self, GeomError> {
        let det = a * d - b * c;
        let scale = a.norm().max(b.norm()).max(c.norm()).max(d.norm());
        if det.norm() <= 1e-12 * scale * scale {
            return Err(GeomError::DegenerateMap(det.norm()));
        }
        Ok(MobiusMap { a, b, c, d })
    }

    pub fn identity() -> Self {
        MobiusMap {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
            c: Complex64::new(0.0, 0.0),
            d: Complex64::new(1.0, 0.0),
        }
    }

    /// The inverse map (coefficient adjugate; the scalar factor cancels).
    pub fn inverse(&self) -> Self {
        MobiusMap {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &MobiusMap) -> Self {
        MobiusMap {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
    }

    /// The finite pole (preimage of infinity), if any. Affine maps (`c = 0`)
    /// have their pole at infinity.
    pub fn pole(&self) -> Option<Point> {
        if self.c.norm() == 0.0 {
            None
        } else {
            Some(Point::from_complex(-self.d / self.c))
        }
    }

    pub fn is_affine(&self) -> bool {
        self.c.norm() == 0.0
    }
}

/// Which side of the x-axis an axis-tangent circle sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Side {
    Above,
    Below,
}

impl Side {
    pub fn sign(&self) -> f64 {
        match self {
            Side::Above => 1.0,
            Side::Below => -1.0,
        }
    }
}

/// A circle tangent to the x-axis at `(t, 0)` with radius `r > 0`, lying
/// above or below the axis.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct AxisTangentCircle {
    pub t: f64,
    pub r: f64,
    pub side: Side,
}

impl AxisTangentCircle {
    pub fn new(t: f64, r: f64, side: Side) -> Self {
        AxisTangentCircle { t, r, side }
    }
}

/// Embeds an axis-tangent circle as a plane circle: center `(t, ±r)`,
/// radius `r`.
pub fn axis_tangent_to_circle(c: &AxisTangentCircle) -> Result<GeneralizedCircle, GeomError> {
    if !(c.r > 0.0) {
        return Err(GeomError::NonpositiveRadius(c.r));
    }
    Ok(GeneralizedCircle::circle(
        Point::new(c.t, c.side.sign() * c.r),
        c.r,
    ))
}

/// The map `z ↦ 1/(z − p)`, sending `p` to infinity.
pub fn mobius_to_infinity(p: &Point) -> MobiusMap {
    MobiusMap {
        a: Complex64::new(0.0, 0.0),
        b: Complex64::new(1.0, 0.0),
        c: Complex64::new(1.0, 0.0),
        d: -p.to_complex(),
    }
}

/// Applies a Möbius map to a point of the extended plane.
pub fn mobius_apply_point(m: &MobiusMap, p: &Point) -> ExtendedPoint {
    let z = p.to_complex();
    let denom = m.c * z + m.d;
    let denom_scale = m.c.norm() * z.norm() + m.d.norm();
    if denom.norm() <= epsilon() * denom_scale || denom.norm() == 0.0 {
        return ExtendedPoint::Infinity;
    }
    ExtendedPoint::Finite(Point::from_complex((m.a * z + m.b) / denom))
}

/// Applies a Möbius map to the point at infinity.
pub fn mobius_apply_infinity(m: &MobiusMap) -> ExtendedPoint {
    if m.c.norm() == 0.0 {
        ExtendedPoint::Infinity
    } else {
        ExtendedPoint::Finite(Point::from_complex(m.a / m.c))
    }
}

/// Three sample points of a locus, spread apart and avoiding a forbidden
/// point (the map's pole) by the widest possible margin.
fn sample_points(g: &GeneralizedCircle, avoid: Option<Point>) -> [Point; 3] {
    match g {
        GeneralizedCircle::Circle { center, radius } => {
            // Base the sampling frame on the direction away from the
            // avoided point so all samples stay far from it.
            let base = match avoid {
                Some(p) if p.dist(center) > 0.0 => {
                    (p.y - center.y).atan2(p.x - center.x) + std::f64::consts::PI
                }
                _ => 0.0,
            };
            let mut out = [Point::new(0.0, 0.0); 3];
            for (i, offs) in [-2.0, 0.0, 2.0].iter().enumerate() {
                let theta = base + offs * std::f64::consts::FRAC_PI_3;
                out[i] = Point::new(
                    center.x + radius * theta.cos(),
                    center.y + radius * theta.sin(),
                );
            }
            out
        }
        GeneralizedCircle::Line { a, b, c } => {
            let foot = Point::new(a * c, b * c);
            let (tx, ty) = (-b, *a);
            let step = c.abs().max(1.0);
            // Park the samples away from the avoided point's projection.
            let proj = avoid.map(|p| (p.x - foot.x) * tx + (p.y - foot.y) * ty);
            let offsets: [f64; 3] = match proj {
                Some(s) => [s + 3.0 * step, s + 5.0 * step, s - 3.0 * step],
                None => [-step, 0.0, step],
            };
            let mut out = [Point::new(0.0, 0.0); 3];
            for (i, s) in offsets.iter().enumerate() {
                out[i] = Point::new(foot.x + s * tx, foot.y + s * ty);
            }
            out
        }
    }
}

/// Transports a generalized circle through a Möbius map by mapping three
/// sample points and refitting. The image is a line exactly when the
/// pre-image passes through the map's pole (within tolerance); lines also map
/// to lines under affine maps since both pass through infinity.
pub fn mobius_apply_gcircle(
    m: &MobiusMap,
    g: &GeneralizedCircle,
) -> Result<GeneralizedCircle, GeomError> {
    let pole = m.pole();
    let through_pole = match (&pole, g.is_line()) {
        (Some(p), _) => g.contains_point(p),
        (None, passes_infinity) => passes_infinity,
    };
    let samples = sample_points(g, pole);
    let mut images = Vec::with_capacity(3);
    for s in &samples {
        match mobius_apply_point(m, s) {
            ExtendedPoint::Finite(q) => images.push(q),
            // Samples are placed away from the pole; hitting infinity here
            // means the locus degenerates at this scale.
            ExtendedPoint::Infinity => return Err(GeomError::DegenerateMap(0.0)),
        }
    }
    if through_pole {
        // The image passes through infinity: fit the line through two images.
        let (p, q) = (images[0], images[2]);
        let (dx, dy) = (q.x - p.x, q.y - p.y);
        if dx.hypot(dy) == 0.0 {
            return Err(GeomError::DegeneratePoints);
        }
        Ok(GeneralizedCircle::line(-dy, dx, -dy * p.x + dx * p.y))
    } else {
        circle_through_points(&images[0], &images[1], &images[2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(x: f64, y: f64) -> GeneralizedCircle {
        GeneralizedCircle::circle(Point::new(x, y), 1.0)
    }

    #[test]
    fn disjoint_units() {
        let class = classify_intersection(&unit(0.0, 0.0), &unit(3.0, 0.0)).unwrap();
        assert_eq!(class, IntersectionClass::DisjointOutside);
    }

    #[test]
    fn crossing_units() {
        // x² + y² = 1 and (x-1)² + y² = 1 meet at (1/2, ±√3/2).
        let class = classify_intersection(&unit(0.0, 0.0), &unit(1.0, 0.0)).unwrap();
        let pts = class.points();
        assert_eq!(pts.len(), 2);
        let root3 = 3f64.sqrt() / 2.0;
        let mut ys: Vec<f64> = pts.iter().map(|p| p.y).collect();
        ys.sort_by(f64::total_cmp);
        assert!((pts[0].x - 0.5).abs() < 1e-12 && (pts[1].x - 0.5).abs() < 1e-12);
        assert!((ys[0] + root3).abs() < 1e-12 && (ys[1] - root3).abs() < 1e-12);
    }

    #[test]
    fn internal_tangency() {
        let big = GeneralizedCircle::circle(Point::new(0.0, 0.0), 2.0);
        let small = unit(1.0, 0.0);
        match classify_intersection(&big, &small).unwrap() {
            IntersectionClass::Touching(p) => {
                assert!((p.x - 2.0).abs() < 1e-12 && p.y.abs() < 1e-12);
            }
            other => panic!("expected touching, got {other:?}"),
        }
    }

    #[test]
    fn nested_and_coincident() {
        let big = GeneralizedCircle::circle(Point::new(0.0, 0.0), 5.0);
        assert_eq!(
            classify_intersection(&big, &unit(0.5, 0.0)).unwrap(),
            IntersectionClass::DisjointNested
        );
        assert_eq!(
            classify_intersection(&unit(0.0, 0.0), &unit(0.0, 0.0)),
            Err(GeomError::CoincidentCircles)
        );
    }

    #[test]
    fn classify_is_symmetric() {
        let pairs = [
            (unit(0.0, 0.0), unit(1.0, 0.0)),
            (unit(0.0, 0.0), unit(3.0, 0.0)),
            (unit(0.0, 0.0), GeneralizedCircle::circle(Point::new(1.5, 0.3), 0.4)),
            (unit(0.0, 0.0), GeneralizedCircle::line(0.0, 1.0, 0.2)),
        ];
        for (a, b) in &pairs {
            let ab = classify_intersection(a, b).unwrap();
            let ba = classify_intersection(b, a).unwrap();
            assert_eq!(ab.tag(), ba.tag());
        }
    }

    #[test]
    fn line_tangency() {
        // Unit circle resting on the x-axis.
        let c = GeneralizedCircle::circle(Point::new(3.0, 1.0), 1.0);
        let axis = GeneralizedCircle::line(0.0, 1.0, 0.0);
        match classify_intersection(&c, &axis).unwrap() {
            IntersectionClass::Touching(p) => {
                assert!((p.x - 3.0).abs() < 1e-12 && p.y.abs() < 1e-12);
            }
            other => panic!("expected touching, got {other:?}"),
        }
    }

    #[test]
    fn three_point_fit() {
        let g = circle_through_points(
            &Point::new(1.0, 0.0),
            &Point::new(0.0, 1.0),
            &Point::new(-1.0, 0.0),
        )
        .unwrap();
        match g {
            GeneralizedCircle::Circle { center, radius } => {
                assert!(center.dist(&Point::new(0.0, 0.0)) < 1e-12);
                assert!((radius - 1.0).abs() < 1e-12);
            }
            _ => panic!("expected a circle"),
        }

        let g = circle_through_points(
            &Point::new(0.0, 0.0),
            &Point::new(4.0, 0.0),
            &Point::new(0.0, 4.0),
        )
        .unwrap();
        match g {
            GeneralizedCircle::Circle { center, radius } => {
                assert!(center.dist(&Point::new(2.0, 2.0)) < 1e-12);
                assert!((radius - 8f64.sqrt()).abs() < 1e-12);
            }
            _ => panic!("expected a circle"),
        }

        // Collinear points give the line through them.
        let g = circle_through_points(
            &Point::new(0.0, 0.0),
            &Point::new(1.0, 0.0),
            &Point::new(2.0, 0.0),
        )
        .unwrap();
        assert!(g.is_line());
        assert!(g.contains_point(&Point::new(7.0, 0.0)));

        assert_eq!(
            circle_through_points(
                &Point::new(0.0, 0.0),
                &Point::new(0.0, 0.0),
                &Point::new(1.0, 0.0)
            ),
            Err(GeomError::DegeneratePoints)
        );
    }

    #[test]
    fn inversion_map_points() {
        let m = mobius_to_infinity(&Point::new(0.0, 0.0));
        assert_eq!(
            mobius_apply_point(&m, &Point::new(0.0, 0.0)),
            ExtendedPoint::Infinity
        );
        let img = mobius_apply_point(&m, &Point::new(2.0, 0.0)).finite().unwrap();
        assert!(img.dist(&Point::new(0.5, 0.0)) < 1e-12);
        let img = mobius_apply_point(&m, &Point::new(0.5, 0.0)).finite().unwrap();
        assert!(img.dist(&Point::new(2.0, 0.0)) < 1e-12);

        // 1/((2+i) - (1+i)) = 1.
        let m = mobius_to_infinity(&Point::new(1.0, 1.0));
        let img = mobius_apply_point(&m, &Point::new(2.0, 1.0)).finite().unwrap();
        assert!(img.dist(&Point::new(1.0, 0.0)) < 1e-12);

        let id = MobiusMap::identity();
        let img = mobius_apply_point(&id, &Point::new(3.0, 4.0)).finite().unwrap();
        assert!(img.dist(&Point::new(3.0, 4.0)) < 1e-12);
    }

    #[test]
    fn inversion_transports_circle_to_circle() {
        // z ↦ 1/z sends the circle centered (2,0), r=1 to center (2/3,0), r=1/3:
        // the real-axis points 1 and 3 map to 1 and 1/3.
        let m = mobius_to_infinity(&Point::new(0.0, 0.0));
        let g = GeneralizedCircle::circle(Point::new(2.0, 0.0), 1.0);
        match mobius_apply_gcircle(&m, &g).unwrap() {
            GeneralizedCircle::Circle { center, radius } => {
                assert!(center.dist(&Point::new(2.0 / 3.0, 0.0)) < 1e-12);
                assert!((radius - 1.0 / 3.0).abs() < 1e-12);
            }
            _ => panic!("expected a circle"),
        }
    }

    #[test]
    fn inversion_transports_circle_through_pole_to_line() {
        // The circle centered (1,0), r=1 passes through 0; its image under
        // z ↦ 1/z is the vertical line x = 1/2.
        let m = mobius_to_infinity(&Point::new(0.0, 0.0));
        let g = GeneralizedCircle::circle(Point::new(1.0, 0.0), 1.0);
        let img = mobius_apply_gcircle(&m, &g).unwrap();
        match img {
            GeneralizedCircle::Line { a, b, c } => {
                assert!((a - 1.0).abs() < 1e-9);
                assert!(b.abs() < 1e-9);
                assert!((c - 0.5).abs() < 1e-9);
            }
            _ => panic!("expected a line"),
        }
    }

    #[test]
    fn transport_away_from_pole_keeps_kind() {
        let m = mobius_to_infinity(&Point::new(5.0, 5.0));
        let g = GeneralizedCircle::circle(Point::new(0.0, 0.0), 1.0);
        assert!(!mobius_apply_gcircle(&m, &g).unwrap().is_line());
    }

    #[test]
    fn compose_and_inverse() {
        let m = MobiusMap::new(
            Complex64::new(1.0, 2.0),
            Complex64::new(0.5, -0.25),
            Complex64::new(0.0, 1.0),
            Complex64::new(2.0, 0.0),
        )
        .unwrap();
        let round = m.inverse().compose(&m);
        for p in [Point::new(0.3, -0.7), Point::new(10.0, 4.0)] {
            let img = mobius_apply_point(&round, &p).finite().unwrap();
            assert!(img.dist(&p) < 1e-9);
        }
    }

    #[test]
    fn epsilon_override_roundtrip() {
        // Store the default explicitly so the bits path is exercised without
        // perturbing concurrently running tests.
        assert_eq!(epsilon(), 1e-9);
        set_epsilon(1e-9);
        assert_eq!(epsilon(), 1e-9);
    }

    #[test]
    fn axis_tangent_embedding() {
        let above = AxisTangentCircle::new(2.0, 0.5, Side::Above);
        match axis_tangent_to_circle(&above).unwrap() {
            GeneralizedCircle::Circle { center, radius } => {
                assert!(center.dist(&Point::new(2.0, 0.5)) == 0.0);
                assert_eq!(radius, 0.5);
            }
            _ => panic!("expected a circle"),
        }
        let below = AxisTangentCircle::new(2.0, 0.5, Side::Below);
        match axis_tangent_to_circle(&below).unwrap() {
            GeneralizedCircle::Circle { center, .. } => {
                assert!(center.dist(&Point::new(2.0, -0.5)) == 0.0);
            }
            _ => panic!("expected a circle"),
        }
        // The embedded circle is tangent to the axis at (t, 0).
        let axis = GeneralizedCircle::line(0.0, 1.0, 0.0);
        let g = axis_tangent_to_circle(&above).unwrap();
        match classify_intersection(&g, &axis).unwrap() {
            IntersectionClass::Touching(p) => assert!(p.dist(&Point::new(2.0, 0.0)) < 1e-12),
            other => panic!("expected touching, got {other:?}"),
        }
        assert_eq!(
            axis_tangent_to_circle(&AxisTangentCircle::new(0.0, 0.0, Side::Above)),
            Err(GeomError::NonpositiveRadius(0.0))
        );
    }
}
