//! Circle sets, contact-graph extraction and representation verification.
//!
//! A circle set represents a 4-regular plane multigraph when its pairwise
//! touching/crossing points map bijectively onto the vertices and the arcs
//! between consecutive points realize the edges. [`extract_contact_graph`]
//! computes that structure (rejecting triple points, free circles and
//! coincident members), [`verify_representation`] compares it against a
//! target multigraph up to abstract multigraph isomorphism, and
//! [`transport`] moves a whole set through a Möbius map.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::{
    classify_intersection, epsilon, mobius_apply_gcircle, GeneralizedCircle, IntersectionClass,
    MobiusMap, Point,
};
use crate::graphs::{isomorphic, PlaneMultigraph};

/// Reserved member id for the at-most-one line of a set.
pub const LINE_ID: &str = "line";

#[derive(Debug, Error)]
pub enum ReprError {
    #[error("duplicate member id: {0}")]
    DuplicateId(String),
    #[error("a circle set may contain at most one line member")]
    TooManyLines,
    #[error("members {0} and {1} coincide")]
    CoincidentMembers(String, String),
    #[error("point ({x:.6}, {y:.6}) lies on more than two members")]
    TriplePoint { x: f64, y: f64 },
    #[error("member {0} intersects nothing")]
    FreeCircle(String),
    #[error("unknown member id: {0}")]
    UnknownId(String),
    #[error("the map's pole lies on member {0}")]
    PoleOnCircle(String),
    #[error("invalid member {id}: {reason}")]
    InvalidMember { id: String, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A collection of circles (plus at most one line) with unique ids.
#[derive(Debug, Clone, PartialEq)]
pub struct CircleSet {
    members: Vec<(String, GeneralizedCircle)>,
}

impl CircleSet {
    pub fn new(members: Vec<(String, GeneralizedCircle)>) -> Result<Self, ReprError> {
        let mut seen = HashSet::new();
        let mut lines = 0;
        for (id, shape) in &members {
            if !seen.insert(id.clone()) {
                return Err(ReprError::DuplicateId(id.clone()));
            }
            match shape {
                GeneralizedCircle::Line { .. } => lines += 1,
                GeneralizedCircle::Circle { center, radius } => {
                    if !(*radius > 0.0) || !center.is_finite() {
                        return Err(ReprError::InvalidMember {
                            id: id.clone(),
                            reason: "circle must have a finite center and positive radius".into(),
                        });
                    }
                }
            }
        }
        if lines > 1 {
            return Err(ReprError::TooManyLines);
        }
        Ok(CircleSet { members })
    }

    pub fn members(&self) -> &[(String, GeneralizedCircle)] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&GeneralizedCircle> {
        self.members
            .iter()
            .find(|(mid, _)| mid == id)
            .map(|(_, g)| g)
    }

    /// Removes the listed members. Unknown ids are an error.
    pub fn without(&self, ids: &HashSet<String>) -> Result<CircleSet, ReprError> {
        for id in ids {
            if self.get(id).is_none() {
                return Err(ReprError::UnknownId(id.clone()));
            }
        }
        Ok(CircleSet {
            members: self
                .members
                .iter()
                .filter(|(id, _)| !ids.contains(id))
                .cloned()
                .collect(),
        })
    }

    /// A magnitude representative of the whole set, for point clustering.
    fn scale(&self) -> f64 {
        self.members
            .iter()
            .map(|(_, g)| match g {
                GeneralizedCircle::Circle { center, radius } => {
                    center.x.abs().max(center.y.abs()) + radius
                }
                GeneralizedCircle::Line { c, .. } => c.abs(),
            })
            .fold(1.0, f64::max)
    }

    // --- JSON (stable external format) ---

    pub fn to_json_string(&self) -> String {
        let mut circles: Vec<CircleDto> = Vec::new();
        let mut line = None;
        for (id, g) in &self.members {
            match g {
                GeneralizedCircle::Circle { center, radius } => circles.push(CircleDto {
                    id: id.clone(),
                    cx: center.x,
                    cy: center.y,
                    r: *radius,
                }),
                GeneralizedCircle::Line { a, b, c } => {
                    line = Some(LineDto {
                        a: *a,
                        b: *b,
                        c: *c,
                    })
                }
            }
        }
        circles.sort_by(|a, b| a.id.cmp(&b.id));
        serde_json::to_string_pretty(&CircleSetDto { circles, line })
            .expect("circle-set serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Self, ReprError> {
        let dto: CircleSetDto = serde_json::from_str(s).map_err(|e| ReprError::InvalidMember {
            id: "<input>".into(),
            reason: e.to_string(),
        })?;
        let mut members: Vec<(String, GeneralizedCircle)> = dto
            .circles
            .into_iter()
            .map(|c| {
                (
                    c.id,
                    GeneralizedCircle::circle(Point::new(c.cx, c.cy), c.r),
                )
            })
            .collect();
        if let Some(l) = dto.line {
            if l.a == 0.0 && l.b == 0.0 {
                return Err(ReprError::InvalidMember {
                    id: LINE_ID.into(),
                    reason: "line normal must be nonzero".into(),
                });
            }
            members.push((LINE_ID.to_string(), GeneralizedCircle::line(l.a, l.b, l.c)));
        }
        CircleSet::new(members)
    }
}

#[derive(Serialize, Deserialize)]
struct CircleDto {
    id: String,
    cx: f64,
    cy: f64,
    r: f64,
}

#[derive(Serialize, Deserialize)]
struct LineDto {
    a: f64,
    b: f64,
    c: f64,
}

#[derive(Serialize, Deserialize)]
struct CircleSetDto {
    circles: Vec<CircleDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    line: Option<LineDto>,
}

/// A touching or crossing point of exactly two members.
#[derive(Debug, Clone)]
pub struct ContactPoint {
    pub location: Point,
    pub members: (String, String),
    pub touching: bool,
}

/// One arc of a member between two consecutive contact points.
#[derive(Debug, Clone)]
pub struct ArcInfo {
    pub edge: String,
    pub member: String,
    pub from: usize,
    pub to: usize,
}

/// The contact structure of a circle set: its intersection points, the arcs
/// around each member, and the induced 4-regular plane multigraph (vertices
/// `p1, p2, …`, edges `a1, a2, …`, rotations from the arc directions).
#[derive(Debug, Clone)]
pub struct ContactStructure {
    pub points: Vec<ContactPoint>,
    pub arcs: Vec<ArcInfo>,
    /// Per member: its contact points in counterclockwise order (by
    /// abscissa for the line member).
    pub member_cycles: BTreeMap<String, Vec<usize>>,
    pub graph: PlaneMultigraph,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let root = self.find(self.0[x]);
            self.0[x] = root;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Computes all pairwise intersections, clusters coincident points, and
/// derives the contact multigraph. Fails on coincident members, on any
/// point incident to three or more members, and on members that intersect
/// nothing.
pub fn extract_contact_graph(cs: &CircleSet) -> Result<ContactStructure, ReprError> {
    let members = cs.members();
    let scale = cs.scale();
    let tol = epsilon() * scale;

    // Raw intersection events: (point, member indices, touching).
    struct Event {
        p: Point,
        pair: (usize, usize),
        touching: bool,
    }
    let mut events = Vec::new();
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let class = classify_intersection(&members[i].1, &members[j].1).map_err(|_| {
                ReprError::CoincidentMembers(members[i].0.clone(), members[j].0.clone())
            })?;
            match class {
                IntersectionClass::Touching(p) => events.push(Event {
                    p,
                    pair: (i, j),
                    touching: true,
                }),
                IntersectionClass::Crossing(p, q) => {
                    events.push(Event {
                        p,
                        pair: (i, j),
                        touching: false,
                    });
                    events.push(Event {
                        p: q,
                        pair: (i, j),
                        touching: false,
                    });
                }
                _ => {}
            }
        }
    }

    // Cluster events within tolerance.
    let mut dsu = Dsu::new(events.len());
    for a in 0..events.len() {
        for b in a + 1..events.len() {
            if events[a].p.dist(&events[b].p) <= tol {
                dsu.union(a, b);
            }
        }
    }
    let mut cluster_of = vec![usize::MAX; events.len()];
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    for e in 0..events.len() {
        let root = dsu.find(e);
        if cluster_of[root] == usize::MAX {
            cluster_of[root] = clusters.len();
            clusters.push(Vec::new());
        }
        cluster_of[e] = cluster_of[root];
        clusters[cluster_of[root]].push(e);
    }

    let mut points = Vec::with_capacity(clusters.len());
    for cluster in &clusters {
        let mut incident: Vec<usize> = cluster
            .iter()
            .flat_map(|&e| [events[e].pair.0, events[e].pair.1])
            .collect();
        incident.sort_unstable();
        incident.dedup();
        let centroid = Point::new(
            cluster.iter().map(|&e| events[e].p.x).sum::<f64>() / cluster.len() as f64,
            cluster.iter().map(|&e| events[e].p.y).sum::<f64>() / cluster.len() as f64,
        );
        if incident.len() > 2 {
            return Err(ReprError::TriplePoint {
                x: centroid.x,
                y: centroid.y,
            });
        }
        let touching = events[cluster[0]].touching;
        points.push(ContactPoint {
            location: centroid,
            members: (
                members[incident[0]].0.clone(),
                members[incident[1]].0.clone(),
            ),
            touching,
        });
    }

    // Per member: contact points sorted around the locus.
    let mut member_points: Vec<Vec<(f64, usize)>> = vec![Vec::new(); members.len()];
    for (ci, cluster) in clusters.iter().enumerate() {
        let mut incident: HashSet<usize> = HashSet::new();
        for &e in cluster {
            incident.insert(events[e].pair.0);
            incident.insert(events[e].pair.1);
        }
        for &m in &incident {
            let key = match &members[m].1 {
                GeneralizedCircle::Circle { center, .. } => {
                    (points[ci].location.y - center.y).atan2(points[ci].location.x - center.x)
                }
                GeneralizedCircle::Line { a, b, .. } => {
                    // Abscissa along the direction (-b, a).
                    -b * points[ci].location.x + a * points[ci].location.y
                }
            };
            member_points[m].push((key, ci));
        }
    }
    for (m, pts) in member_points.iter().enumerate() {
        if pts.is_empty() {
            return Err(ReprError::FreeCircle(members[m].0.clone()));
        }
    }

    // Build the graph: a vertex per point, an arc per consecutive pair.
    let mut graph = PlaneMultigraph::new();
    let vertex_name = |i: usize| format!("p{}", i + 1);
    for i in 0..points.len() {
        graph
            .add_vertex(&vertex_name(i))
            .expect("fresh point names");
    }
    let mut arcs: Vec<ArcInfo> = Vec::new();
    let mut member_cycles = BTreeMap::new();
    // Arc ends incident to each point, with departure direction and signed
    // curvature for the rotation order.
    let mut ends_at: Vec<Vec<(f64, f64, usize, u8)>> = vec![Vec::new(); points.len()];
    for (m, pts) in member_points.iter_mut().enumerate() {
        pts.sort_by(|a, b| a.0.total_cmp(&b.0));
        let shape = &members[m].1;
        let cycle: Vec<usize> = pts.iter().map(|&(_, ci)| ci).collect();
        member_cycles.insert(members[m].0.clone(), cycle.clone());
        let k = cycle.len();
        for idx in 0..k {
            let from = cycle[idx];
            let to = cycle[(idx + 1) % k];
            let edge_idx = arcs.len();
            let name = format!("a{}", edge_idx + 1);
            graph
                .add_edge(&name, &vertex_name(from), &vertex_name(to))
                .expect("fresh arc names");
            arcs.push(ArcInfo {
                edge: name,
                member: members[m].0.clone(),
                from,
                to,
            });
            // Departure end (end 0) leaves `from` along the forward tangent;
            // the arrival end (end 1) leaves `to` along the reverse tangent.
            let (tx, ty) = shape.tangent_at(&points[from].location);
            let kappa = shape.signed_curvature(&points[from].location, (tx, ty));
            ends_at[from].push((ty.atan2(tx), kappa, edge_idx, 0));
            let (tx, ty) = shape.tangent_at(&points[to].location);
            let (rx, ry) = (-tx, -ty);
            let kappa = shape.signed_curvature(&points[to].location, (rx, ry));
            ends_at[to].push((ry.atan2(rx), kappa, edge_idx, 1));
        }
    }

    // Rotation at each point: counterclockwise by departure angle; ends of
    // touching members share a direction and are ordered by curvature
    // (bending right comes first).
    const ANGLE_TOL: f64 = 1e-6;
    for (pi, ends) in ends_at.iter_mut().enumerate() {
        ends.sort_by(|a, b| a.0.total_cmp(&b.0));
        // Rotate so no near-equal angle group straddles the list boundary.
        let n = ends.len();
        if n > 1 {
            let mut best_gap = (ends[0].0 + std::f64::consts::TAU) - ends[n - 1].0;
            let mut cut = 0;
            for i in 1..n {
                let gap = ends[i].0 - ends[i - 1].0;
                if gap > best_gap {
                    best_gap = gap;
                    cut = i;
                }
            }
            ends.rotate_left(cut);
            // Now sort each near-equal angle run by curvature.
            let mut i = 0;
            while i < n {
                let mut j = i + 1;
                while j < n {
                    let diff = (ends[j].0 - ends[j - 1].0).rem_euclid(std::f64::consts::TAU);
                    if diff.min(std::f64::consts::TAU - diff) <= ANGLE_TOL {
                        j += 1;
                    } else {
                        break;
                    }
                }
                ends[i..j].sort_by(|a, b| a.1.total_cmp(&b.1));
                i = j;
            }
        }
        let order: Vec<(String, u8)> = ends
            .iter()
            .map(|&(_, _, e, which)| (arcs[e].edge.clone(), which))
            .collect();
        let order_refs: Vec<(&str, u8)> = order.iter().map(|(n, e)| (n.as_str(), *e)).collect();
        graph
            .set_rotation(&vertex_name(pi), &order_refs)
            .expect("ends enumerate each arc end once");
    }

    Ok(ContactStructure {
        points,
        arcs,
        member_cycles,
        graph,
    })
}

/// Why a verification failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FailureReason {
    TriplePoint,
    FreeCircle,
    NotIsomorphic,
    CoincidentCircles,
}

/// Per-digon realization facts (for digons of the target whose endpoints do
/// not form a 2-cut, a valid representation must realize them by touching
/// circles with consecutive parallel arcs).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DigonCheck {
    pub target_pair: (String, String),
    pub endpoints_form_two_cut: bool,
    pub arcs_consecutive_at_both: bool,
    pub endpoints_touching: (bool, bool),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub ok: bool,
    /// Contact-point vertex → target vertex, when isomorphic.
    pub mapping: Option<HashMap<String, String>>,
    pub failure_reason: Option<FailureReason>,
    /// Detail accompanying the failure (offending member or point).
    pub failure_detail: Option<String>,
    pub digons: Vec<DigonCheck>,
    /// Set when a pruning deletion left a structure that would need the
    /// arc-replacement surgery (free circle or mismatched contact graph).
    pub surgery_needed: bool,
}

impl VerificationReport {
    fn failure(reason: FailureReason, detail: String) -> Self {
        VerificationReport {
            ok: false,
            mapping: None,
            failure_reason: Some(reason),
            failure_detail: Some(detail),
            digons: Vec::new(),
            surgery_needed: false,
        }
    }
}

impl std::fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.ok {
            write!(f, "ok: contact graph matches the target")?;
        } else {
            write!(
                f,
                "failed: {:?}{}",
                self.failure_reason,
                self.failure_detail
                    .as_deref()
                    .map(|d| format!(" ({d})"))
                    .unwrap_or_default()
            )?;
        }
        for d in &self.digons {
            write!(
                f,
                "\ndigon {}-{}: two_cut={} consecutive={} touching=({}, {})",
                d.target_pair.0,
                d.target_pair.1,
                d.endpoints_form_two_cut,
                d.arcs_consecutive_at_both,
                d.endpoints_touching.0,
                d.endpoints_touching.1
            )?;
        }
        Ok(())
    }
}

/// Extracts the contact graph of `cs` and tests whether it is isomorphic to
/// `target` as an abstract multigraph. Extraction failures are folded into
/// the report. For each digon of the target, the report also records
/// whether its two arcs are consecutive in both endpoint rotations and
/// whether the endpoints are touching points.
pub fn verify_representation(cs: &CircleSet, target: &PlaneMultigraph) -> VerificationReport {
    let contact = match extract_contact_graph(cs) {
        Ok(c) => c,
        Err(ReprError::TriplePoint { x, y }) => {
            return VerificationReport::failure(
                FailureReason::TriplePoint,
                format!("point ({x:.6}, {y:.6})"),
            )
        }
        Err(ReprError::FreeCircle(id)) => {
            return VerificationReport::failure(FailureReason::FreeCircle, id)
        }
        Err(ReprError::CoincidentMembers(a, b)) => {
            return VerificationReport::failure(FailureReason::CoincidentCircles, format!("{a}, {b}"))
        }
        Err(other) => {
            return VerificationReport::failure(FailureReason::NotIsomorphic, other.to_string())
        }
    };
    let mapping = match isomorphic(&contact.graph, target) {
        Some(m) => m,
        None => {
            return VerificationReport::failure(
                FailureReason::NotIsomorphic,
                "contact graph is not isomorphic to the target".into(),
            )
        }
    };

    // Digon bookkeeping on the matched structure.
    let inverse: HashMap<&str, &str> = mapping.iter().map(|(k, v)| (v.as_str(), k.as_str())).collect();
    let mut digons = Vec::new();
    let target_vertices: Vec<String> = target.vertex_names().map(str::to_string).collect();
    for (ai, a) in target_vertices.iter().enumerate() {
        for b in target_vertices.iter().skip(ai + 1) {
            if target.multiplicity(a, b).unwrap_or(0) != 2 {
                continue;
            }
            let pa = inverse[a.as_str()];
            let pb = inverse[b.as_str()];
            let two_cut = target.disconnects(&[a, b]).unwrap_or(false);
            let parallel: Vec<&ArcInfo> = contact
                .arcs
                .iter()
                .filter(|arc| {
                    let (u, v) = (format!("p{}", arc.from + 1), format!("p{}", arc.to + 1));
                    (u == pa && v == pb) || (u == pb && v == pa)
                })
                .collect();
            let mut consecutive = parallel.len() == 2;
            if consecutive {
                for p in [pa, pb] {
                    let rot = contact.graph.rotation(p).expect("vertex exists");
                    let positions: Vec<usize> = rot
                        .iter()
                        .enumerate()
                        .filter(|(_, (e, _))| parallel.iter().any(|arc| arc.edge == *e))
                        .map(|(i, _)| i)
                        .collect();
                    let adjacent = positions.len() == 2
                        && ((positions[1] - positions[0] == 1)
                            || (positions[0] == 0 && positions[1] == rot.len() - 1));
                    consecutive &= adjacent;
                }
            }
            let idx_of = |name: &str| name[1..].parse::<usize>().unwrap() - 1;
            digons.push(DigonCheck {
                target_pair: (a.clone(), b.clone()),
                endpoints_form_two_cut: two_cut,
                arcs_consecutive_at_both: consecutive,
                endpoints_touching: (
                    contact.points[idx_of(pa)].touching,
                    contact.points[idx_of(pb)].touching,
                ),
            });
        }
    }
    VerificationReport {
        ok: true,
        mapping: Some(mapping),
        failure_reason: None,
        failure_detail: None,
        digons,
        surgery_needed: false,
    }
}

/// Applies a Möbius map to every member. The map's pole must avoid all
/// members (a pole on a member would blow it up into a line through
/// infinity mid-set).
pub fn transport(cs: &CircleSet, m: &MobiusMap) -> Result<CircleSet, ReprError> {
    if let Some(pole) = m.pole() {
        for (id, g) in cs.members() {
            if g.contains_point(&pole) {
                return Err(ReprError::PoleOnCircle(id.clone()));
            }
        }
    }
    let mut out = Vec::with_capacity(cs.len());
    for (id, g) in cs.members() {
        let image = mobius_apply_gcircle(m, g).map_err(|e| ReprError::InvalidMember {
            id: id.clone(),
            reason: e.to_string(),
        })?;
        out.push((id.clone(), image));
    }
    CircleSet::new(out)
}

/// Deletes the listed members and re-verifies the remainder against
/// `expected`. Only the deletion branch of gadget pruning is performed; if
/// the deletion leaves a member whose arcs would need geometric replacement
/// (surfacing as a free circle or a contact-graph mismatch), the report says
/// so via `surgery_needed`.
pub fn prune_circles(
    cs: &CircleSet,
    ids: &HashSet<String>,
    expected: &PlaneMultigraph,
) -> Result<(CircleSet, VerificationReport), ReprError> {
    let remaining = cs.without(ids)?;
    let mut report = verify_representation(&remaining, expected);
    if matches!(
        report.failure_reason,
        Some(FailureReason::FreeCircle) | Some(FailureReason::NotIsomorphic)
    ) {
        report.surgery_needed = true;
    }
    Ok((remaining, report))
}

// --- SVG rendering ---

fn svg_bounds(cs: &CircleSet) -> (f64, f64, f64, f64) {
    let mut lo_x = f64::INFINITY;
    let mut lo_y = f64::INFINITY;
    let mut hi_x = f64::NEG_INFINITY;
    let mut hi_y = f64::NEG_INFINITY;
    for (_, g) in cs.members() {
        if let GeneralizedCircle::Circle { center, radius } = g {
            lo_x = lo_x.min(center.x - radius);
            lo_y = lo_y.min(center.y - radius);
            hi_x = hi_x.max(center.x + radius);
            hi_y = hi_y.max(center.y + radius);
        }
    }
    if !lo_x.is_finite() {
        (0.0, 0.0, 100.0, 100.0)
    } else {
        let pad = 0.1 * (hi_x - lo_x).max(hi_y - lo_y).max(1.0);
        (lo_x - pad, lo_y - pad, hi_x + pad, hi_y + pad)
    }
}

/// Writes an SVG drawing of the set: circles and the line member as
/// strokes, pairwise intersection points as dots (touching points green,
/// crossing points red).
pub fn render_svg<W: Write>(cs: &CircleSet, out: &mut W) -> Result<(), ReprError> {
    let (lo_x, lo_y, hi_x, hi_y) = svg_bounds(cs);
    let extent = (hi_x - lo_x).max(hi_y - lo_y);
    let stroke = extent / 200.0;
    let dot = extent / 80.0;
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{lo_x} {lo_y} {} {}\">",
        hi_x - lo_x,
        hi_y - lo_y
    )?;
    // Flip the y-axis so the drawing matches plane coordinates.
    writeln!(
        out,
        "  <g transform=\"translate(0 {}) scale(1 -1)\">",
        lo_y + hi_y
    )?;
    for (id, g) in cs.members() {
        match g {
            GeneralizedCircle::Circle { center, radius } => writeln!(
                out,
                "    <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"#335577\" stroke-width=\"{stroke}\"><title>{id}</title></circle>",
                center.x, center.y, radius
            )?,
            GeneralizedCircle::Line { a, b, c } => {
                // Clip the line to the viewport via its foot and direction.
                let foot = (a * c, b * c);
                let dir = (-b, *a);
                let reach = 2.0 * extent;
                writeln!(
                    out,
                    "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#335577\" stroke-width=\"{stroke}\"><title>{id}</title></line>",
                    foot.0 - reach * dir.0,
                    foot.1 - reach * dir.1,
                    foot.0 + reach * dir.0,
                    foot.1 + reach * dir.1
                )?
            }
        }
    }
    // Dots straight from pairwise classification, so even sets the
    // extractor rejects (triple points) still render.
    let members = cs.members();
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            if let Ok(class) = classify_intersection(&members[i].1, &members[j].1) {
                let (color, pts) = match &class {
                    IntersectionClass::Touching(_) => ("#22aa77", class.points()),
                    IntersectionClass::Crossing(_, _) => ("#dd3333", class.points()),
                    _ => continue,
                };
                for p in pts {
                    writeln!(
                        out,
                        "    <circle cx=\"{}\" cy=\"{}\" r=\"{dot}\" fill=\"{color}\"/>",
                        p.x, p.y
                    )?;
                }
            }
        }
    }
    writeln!(out, "  </g>")?;
    writeln!(out, "</svg>")?;
    Ok(())
}

/// Writes an SVG drawing of a multigraph: vertices on a circle, parallel
/// edges and loops as curved paths.
pub fn render_graph_svg<W: Write>(g: &PlaneMultigraph, out: &mut W) -> Result<(), ReprError> {
    let names: Vec<String> = g.vertex_names().map(str::to_string).collect();
    let n = names.len().max(1);
    let radius = 100.0;
    let pos: HashMap<&str, (f64, f64)> = names
        .iter()
        .enumerate()
        .map(|(i, name)| {
            let angle = std::f64::consts::TAU * i as f64 / n as f64;
            (name.as_str(), (radius * angle.cos(), radius * angle.sin()))
        })
        .collect();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-130 -130 260 260\">"
    )?;
    let mut seen: HashMap<(String, String), usize> = HashMap::new();
    for e in g.edge_names().map(str::to_string).collect::<Vec<_>>() {
        let (u, v) = g.edge_ends(&e).expect("edge exists");
        let (ux, uy) = pos[u.as_str()];
        if u == v {
            let k = *seen
                .entry((u.clone(), v.clone()))
                .and_modify(|k| *k += 1)
                .or_insert(0);
            let r = 8.0 + 5.0 * k as f64;
            writeln!(
                out,
                "  <circle cx=\"{}\" cy=\"{}\" r=\"{r}\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>",
                ux * 1.08,
                uy * 1.08
            )?;
            continue;
        }
        let (vx, vy) = pos[v.as_str()];
        let key = if u < v { (u.clone(), v.clone()) } else { (v.clone(), u.clone()) };
        let k = *seen.entry(key).and_modify(|k| *k += 1).or_insert(0);
        // Bow parallel edges apart.
        let (mx, my) = ((ux + vx) / 2.0, (uy + vy) / 2.0);
        let (dx, dy) = (vx - ux, vy - uy);
        let len = dx.hypot(dy).max(1e-9);
        let offset = 10.0 * ((k as f64 + 1.0) / 2.0).ceil() * if k % 2 == 0 { 1.0 } else { -1.0 };
        let (cx, cy) = (mx - dy / len * offset, my + dx / len * offset);
        writeln!(
            out,
            "  <path d=\"M {ux} {uy} Q {cx} {cy} {vx} {vy}\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>"
        )?;
    }
    for name in &names {
        let (x, y) = pos[name.as_str()];
        writeln!(out, "  <circle cx=\"{x}\" cy=\"{y}\" r=\"2.5\" fill=\"#222\"/>")?;
    }
    writeln!(out, "</svg>")?;
    Ok(())
}

/// Renders a circle set to a file.
pub fn render_svg_file(cs: &CircleSet, path: &Path) -> Result<(), ReprError> {
    let mut buf = Vec::new();
    render_svg(cs, &mut buf)?;
    std::fs::write(path, buf)?;
    Ok(())
}
