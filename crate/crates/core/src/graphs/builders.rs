//! Constructions: the octahedron, the octahedral mini-gadget and
//! mini-bigadget, the order-12 base multigraph, the two order-68
//! counterexamples, and gadget pruning.
//!
//! Rotation systems are derived from explicit straight-line drawings:
//! each builder places its vertices in the plane and sorts the incident
//! edge-ends by direction. Parallel edges carry a small signed angular
//! bulge so each digon's two ends stay consecutive, bounding a lens face.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{GraphError, PlaneMultigraph};

/// Builds a plane multigraph from a straight-line(ish) drawing: vertices
/// with coordinates and edges with a signed angular bulge (radians). An
/// edge `u → v` with bulge `β` leaves `u` at `angle(u→v) + β` and leaves
/// `v` at `angle(v→u) − β`, like a circular arc bending left of `u→v`.
fn embed(
    vertices: &[(&str, f64, f64)],
    edges: &[(&str, &str, &str, f64)],
) -> Result<PlaneMultigraph, GraphError> {
    let mut g = PlaneMultigraph::new();
    for &(name, _, _) in vertices {
        g.add_vertex(name)?;
    }
    for &(name, u, v, _) in edges {
        g.add_edge(name, u, v)?;
    }
    let coord = |name: &str| {
        vertices
            .iter()
            .find(|(n, _, _)| *n == name)
            .map(|&(_, x, y)| (x, y))
            .expect("endpoint placed")
    };
    for &(vname, x, y) in vertices {
        let mut ends: Vec<(f64, String, u8)> = Vec::new();
        for &(ename, u, v, bulge) in edges {
            if u == vname {
                let (tx, ty) = coord(v);
                ends.push(((ty - y).atan2(tx - x) + bulge, ename.to_string(), 0));
            }
            if v == vname {
                let (tx, ty) = coord(u);
                ends.push(((ty - y).atan2(tx - x) - bulge, ename.to_string(), 1));
            }
        }
        ends.sort_by(|a, b| a.0.total_cmp(&b.0));
        let order: Vec<(&str, u8)> = ends.iter().map(|(_, n, e)| (n.as_str(), *e)).collect();
        g.set_rotation(vname, &order)?;
    }
    Ok(g)
}

const COS60: f64 = 0.5;
const SIN60: f64 = 0.866_025_403_784_438_6;

/// The octahedron: 6 vertices, 12 edges, 4-regular, 3-connected, eight
/// triangular faces. Drawn as an inner triangle `x1 x2 x3` inside an outer
/// triangle `y1 y2 y3`.
pub fn build_octahedron() -> PlaneMultigraph {
    let vertices = [
        ("x1", 1.0, 0.0),
        ("x2", -COS60, SIN60),
        ("x3", -COS60, -SIN60),
        ("y1", 1.5, 3.0 * SIN60),
        ("y2", -3.0, 0.0),
        ("y3", 1.5, -3.0 * SIN60),
    ];
    let edges = [
        ("i1", "x1", "x2", 0.0),
        ("i2", "x2", "x3", 0.0),
        ("i3", "x3", "x1", 0.0),
        ("o1", "y1", "y2", 0.0),
        ("o2", "y2", "y3", 0.0),
        ("o3", "y3", "y1", 0.0),
        ("s11", "x1", "y1", 0.0),
        ("s13", "x1", "y3", 0.0),
        ("s21", "x2", "y1", 0.0),
        ("s22", "x2", "y2", 0.0),
        ("s32", "x3", "y2", 0.0),
        ("s33", "x3", "y3", 0.0),
    ];
    embed(&vertices, &edges).expect("static octahedron drawing is valid")
}

/// The octahedral mini-gadget: the octahedron with one outer edge replaced
/// by a path of length 2. Returns the graph and its degree-2 attachment
/// vertex, which lies on the outer face.
pub fn build_mini_gadget_octahedral() -> (PlaneMultigraph, String) {
    let mut g = build_octahedron();
    g.subdivide_edge_named("o1", "a1", "o1a", "o1b")
        .expect("octahedron has edge o1");
    (g, "a1".to_string())
}

/// The octahedral mini-bigadget: the octahedron with one vertex split into
/// two degree-2 vertices along its rotation (a planar vertex split), giving
/// 7 vertices and 12 edges, 4-regular except the two attachment vertices,
/// which share a face.
pub fn build_mini_bigadget_octahedral() -> (PlaneMultigraph, String, String) {
    // The split vertex y1 of the octahedron becomes a1 (keeping the edges
    // toward y2 and x2) and a2 (keeping those toward x1 and y3), placed at
    // slightly separated positions so the drawing stays crossing-free.
    let vertices = [
        ("x1", 1.0, 0.0),
        ("x2", -COS60, SIN60),
        ("x3", -COS60, -SIN60),
        ("a1", 1.256, 2.424),
        ("a2", 1.471, 2.299),
        ("y2", -3.0, 0.0),
        ("y3", 1.5, -3.0 * SIN60),
    ];
    let edges = [
        ("i1", "x1", "x2", 0.0),
        ("i2", "x2", "x3", 0.0),
        ("i3", "x3", "x1", 0.0),
        ("o1", "a1", "y2", 0.0),
        ("o2", "y2", "y3", 0.0),
        ("o3", "y3", "a2", 0.0),
        ("s11", "x1", "a2", 0.0),
        ("s13", "x1", "y3", 0.0),
        ("s21", "x2", "a1", 0.0),
        ("s22", "x2", "y2", 0.0),
        ("s32", "x3", "y2", 0.0),
        ("s33", "x3", "y3", 0.0),
    ];
    let g = embed(&vertices, &edges).expect("static mini-bigadget drawing is valid");
    (g, "a1".to_string(), "a2".to_string())
}

/// Semantic labels of the base multigraph: the 8-cycle vertices, the red
/// vertices (each incident to two digons), the connected cycle-vertex pairs,
/// and per red vertex the edge ids of its two digons.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BaseLabels {
    pub cycle: [String; 8],
    pub red: [String; 4],
    pub pairs: [(usize, usize); 4],
    /// `digons[k][0]` joins `v_a`–red, `digons[k][1]` joins red–`v_b`.
    pub digons: [[[String; 2]; 2]; 4],
}

/// The base multigraph: an 8-cycle `v1 … v8` with four pairs of
/// neighbouring digons attached at `(v1,v4)`, `(v2,v7)`, `(v3,v6)` and
/// `(v5,v8)` through four red vertices. Order 12, size 24, 4-regular,
/// 2-connected but not 3-connected, and not circle representable.
pub fn build_base_multigraph_m() -> (PlaneMultigraph, BaseLabels) {
    let pos = |deg: f64, radius: f64| -> (f64, f64) {
        let rad = deg.to_radians();
        (radius * rad.cos(), radius * rad.sin())
    };
    let mut vertices: Vec<(String, f64, f64)> = Vec::new();
    for i in 0..8 {
        let (x, y) = pos(45.0 * i as f64, 1.0);
        vertices.push((format!("v{}", i + 1), x, y));
    }
    // The (1,4) and (5,8) digon pairs bend around the outside of the cycle;
    // (2,7) and (3,6) nest inside it.
    let red_spots = [
        ("u14", pos(67.5, 1.8)),
        ("u27", pos(337.5, 0.5)),
        ("u36", pos(157.5, 0.5)),
        ("u58", pos(247.5, 1.8)),
    ];
    for (name, (x, y)) in red_spots {
        vertices.push((name.to_string(), x, y));
    }

    let mut edges: Vec<(String, String, String, f64)> = Vec::new();
    for i in 1..=8usize {
        let j = i % 8 + 1;
        edges.push((format!("c{i}"), format!("v{i}"), format!("v{j}"), 0.0));
    }
    let pairs = [(1usize, 4usize), (2, 7), (3, 6), (5, 8)];
    const BULGE: f64 = 0.1;
    let mut digons: Vec<[[String; 2]; 2]> = Vec::new();
    for (k, &(a, b)) in pairs.iter().enumerate() {
        let red = red_spots[k].0;
        let stem = format!("d{a}{b}");
        let side_a = [format!("{stem}a1"), format!("{stem}a2")];
        let side_b = [format!("{stem}b1"), format!("{stem}b2")];
        edges.push((side_a[0].clone(), format!("v{a}"), red.to_string(), BULGE));
        edges.push((side_a[1].clone(), format!("v{a}"), red.to_string(), -BULGE));
        edges.push((side_b[0].clone(), red.to_string(), format!("v{b}"), BULGE));
        edges.push((side_b[1].clone(), red.to_string(), format!("v{b}"), -BULGE));
        digons.push([side_a, side_b]);
    }

    let vert_refs: Vec<(&str, f64, f64)> = vertices
        .iter()
        .map(|(n, x, y)| (n.as_str(), *x, *y))
        .collect();
    let edge_refs: Vec<(&str, &str, &str, f64)> = edges
        .iter()
        .map(|(n, u, v, b)| (n.as_str(), u.as_str(), v.as_str(), *b))
        .collect();
    let g = embed(&vert_refs, &edge_refs).expect("static base drawing is valid");

    let labels = BaseLabels {
        cycle: std::array::from_fn(|i| format!("v{}", i + 1)),
        red: std::array::from_fn(|k| red_spots[k].0.to_string()),
        pairs,
        digons: digons.try_into().expect("four digon pairs"),
    };
    (g, labels)
}

/// Which gadget family the order-68 counterexample uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CounterexampleVariant {
    /// One subdivision per digon, one octahedral mini-gadget each; the
    /// attachment vertices are cut vertices.
    Gadget,
    /// One doubly-subdivided edge per digon, one octahedral mini-bigadget
    /// spanning each subdivision pair; 2-connected.
    Bigadget,
}

impl CounterexampleVariant {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "gadget" => Some(CounterexampleVariant::Gadget),
            "bigadget" => Some(CounterexampleVariant::Bigadget),
            _ => None,
        }
    }
}

/// Labels of one gadget-subgraph of a counterexample: the red vertex `w`,
/// its two cycle neighbours `v1`, `v2`, the attachment vertices `w1`, `w2`
/// (plus `w1'`, `w2'` in the bigadget case), and the vertex sets of the two
/// mini-(bi)gadgets, each including its attachment vertex or vertices.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GadgetInstance {
    pub w: String,
    pub v1: String,
    pub v2: String,
    pub w1: String,
    pub w2: String,
    pub w1_prime: Option<String>,
    pub w2_prime: Option<String>,
    pub mini_vertices: [Vec<String>; 2],
}

/// Identifies a mini-bigadget's two attachment vertices with a host
/// degree-2 pair. The relative orientation of the second identification is
/// chosen so the rotation system stays planar (one of the two mirror
/// gluings always does).
fn attach_bigadget(
    g: &mut PlaneMultigraph,
    host_a: &str,
    host_b: &str,
    gadget: &PlaneMultigraph,
    attach_a: &str,
    attach_b: &str,
    prefix: &str,
) -> Result<(), GraphError> {
    g.absorb(gadget, prefix)?;
    g.merge_degree2(host_a, &format!("{prefix}{attach_a}"), false)?;
    let mut trial = g.clone();
    trial.merge_degree2(host_b, &format!("{prefix}{attach_b}"), false)?;
    if trial.is_connected()
        && (trial.order() as i64) - (trial.size() as i64) + (trial.face_count() as i64) == 2
    {
        *g = trial;
        return Ok(());
    }
    g.merge_degree2(host_b, &format!("{prefix}{attach_b}"), true)?;
    debug_assert_eq!(
        (g.order() as i64) - (g.size() as i64) + (g.face_count() as i64),
        2,
        "one of the two mirror gluings must be planar"
    );
    Ok(())
}

/// Builds a simple 4-regular planar graph of order 68 that is not circle
/// representable, from the base multigraph: one edge of each digon is
/// subdivided (once or twice depending on the variant) and an octahedral
/// mini-(bi)gadget is attached at the new degree-2 vertices. Returns the
/// graph and the four gadget-subgraph instances (two mini-gadgets each).
pub fn build_counterexample_68(
    variant: CounterexampleVariant,
) -> (PlaneMultigraph, Vec<GadgetInstance>) {
    let (mut g, labels) = build_base_multigraph_m();
    let mut instances = Vec::with_capacity(4);
    match variant {
        CounterexampleVariant::Gadget => {
            let (mini, attach) = build_mini_gadget_octahedral();
            let interior: Vec<String> = mini
                .vertex_names()
                .filter(|&n| n != attach)
                .map(str::to_string)
                .collect();
            for (k, &(a, b)) in labels.pairs.iter().enumerate() {
                let mut minis: Vec<Vec<String>> = Vec::with_capacity(2);
                let mut subs: Vec<String> = Vec::with_capacity(2);
                for side in 0..2 {
                    let tag = ['a', 'b'][side];
                    let edge = &labels.digons[k][side][0];
                    let sv = format!("s{a}{b}{tag}");
                    g.subdivide_edge_named(edge, &sv, &format!("{edge}a"), &format!("{edge}b"))
                        .expect("digon edge exists");
                    let prefix = format!("g{a}{b}{tag}.");
                    g.attach_at_degree2(&sv, &mini, &attach, &prefix)
                        .expect("attachment vertices have degree 2");
                    let mut set = vec![sv.clone()];
                    set.extend(interior.iter().map(|n| format!("{prefix}{n}")));
                    minis.push(set);
                    subs.push(sv);
                }
                instances.push(GadgetInstance {
                    w: labels.red[k].clone(),
                    v1: format!("v{a}"),
                    v2: format!("v{b}"),
                    w1: subs[0].clone(),
                    w2: subs[1].clone(),
                    w1_prime: None,
                    w2_prime: None,
                    mini_vertices: [minis[0].clone(), minis[1].clone()],
                });
            }
        }
        CounterexampleVariant::Bigadget => {
            let (mini, attach_a, attach_b) = build_mini_bigadget_octahedral();
            let interior: Vec<String> = mini
                .vertex_names()
                .filter(|&n| n != attach_a && n != attach_b)
                .map(str::to_string)
                .collect();
            for (k, &(a, b)) in labels.pairs.iter().enumerate() {
                let mut minis: Vec<Vec<String>> = Vec::with_capacity(2);
                let mut near_v: Vec<String> = Vec::with_capacity(2);
                let mut near_w: Vec<String> = Vec::with_capacity(2);
                for side in 0..2 {
                    let tag = ['a', 'b'][side];
                    let edge = &labels.digons[k][side][0];
                    // Replace the edge by a path of length 3. For side 0 the
                    // edge runs v_a → red, so the first subdivision sits next
                    // to the cycle vertex; for side 1 it runs red → v_b, so
                    // it sits next to the red vertex.
                    let mid1 = format!("s{a}{b}{tag}1");
                    let mid2 = format!("s{a}{b}{tag}2");
                    g.subdivide_edge_named(edge, &mid1, &format!("{edge}a"), &format!("{edge}b"))
                        .expect("digon edge exists");
                    g.subdivide_edge_named(
                        &format!("{edge}b"),
                        &mid2,
                        &format!("{edge}ba"),
                        &format!("{edge}bb"),
                    )
                    .expect("half edge exists");
                    let (vside, wside) = if side == 0 {
                        (mid1.clone(), mid2.clone())
                    } else {
                        (mid2.clone(), mid1.clone())
                    };
                    let prefix = format!("g{a}{b}{tag}.");
                    attach_bigadget(&mut g, &vside, &wside, &mini, &attach_a, &attach_b, &prefix)
                        .expect("attachment vertices have degree 2");
                    let mut set = vec![vside.clone(), wside.clone()];
                    set.extend(interior.iter().map(|n| format!("{prefix}{n}")));
                    minis.push(set);
                    near_v.push(vside);
                    near_w.push(wside);
                }
                instances.push(GadgetInstance {
                    w: labels.red[k].clone(),
                    v1: format!("v{a}"),
                    v2: format!("v{b}"),
                    w1: near_v[0].clone(),
                    w2: near_v[1].clone(),
                    w1_prime: Some(near_w[0].clone()),
                    w2_prime: Some(near_w[1].clone()),
                    mini_vertices: [minis[0].clone(), minis[1].clone()],
                });
            }
        }
    }
    (g, instances)
}

/// Removes one mini-(bi)gadget of an instance (`which` is 1 or 2) together
/// with all incident edges, and bridges the hole with a possibly parallel
/// edge from the corresponding cycle vertex to the red vertex, restoring the
/// digon. The bridge edge takes over the vacated rotation slots, so
/// 4-regularity and planarity survive.
pub fn prune_mini_gadget(
    g: &PlaneMultigraph,
    inst: &GadgetInstance,
    which: u8,
) -> Result<PlaneMultigraph, GraphError> {
    if which != 1 && which != 2 {
        return Err(GraphError::InvalidInstance(format!(
            "mini-gadget selector must be 1 or 2, got {which}"
        )));
    }
    let set = &inst.mini_vertices[(which - 1) as usize];
    let keep_v = if which == 1 { &inst.v1 } else { &inst.v2 };
    for name in set.iter().chain([&inst.w, keep_v]) {
        if !g.has_vertex(name) {
            return Err(GraphError::InvalidInstance(format!(
                "vertex {name} is not in the graph"
            )));
        }
    }
    let removed: HashSet<String> = set.iter().cloned().collect();
    let mut out = g.clone();
    let bridge = out.fresh_edge_name("p");
    out.excise_and_bridge(&removed, keep_v, &inst.w, &bridge)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::isomorphic;

    #[test]
    fn octahedron_shape() {
        let g = build_octahedron();
        let report = g.validate();
        assert_eq!(report.order, 6);
        assert_eq!(report.size, 12);
        assert!(report.regular4);
        assert!(report.simple);
        assert!(report.euler_ok, "face count: {}", g.face_count());
        assert_eq!(g.face_count(), 8);
        assert!(report.three_connected);
    }

    #[test]
    fn mini_gadget_shape() {
        let (g, attach) = build_mini_gadget_octahedral();
        let report = g.validate();
        assert_eq!(report.order, 7);
        assert_eq!(report.size, 13);
        assert!(report.euler_ok);
        assert_eq!(g.degree(&attach).unwrap(), 2);
        let mut degrees: Vec<usize> = g
            .vertex_names()
            .map(|v| g.degree(v).unwrap())
            .collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![2, 4, 4, 4, 4, 4, 4]);
        // Removing the attach vertex leaves the octahedron frame connected.
        let idx = g
            .vertex_names()
            .position(|n| n == attach)
            .expect("attach present");
        assert!(g.connected_without(&[idx]));
    }

    #[test]
    fn mini_bigadget_shape() {
        let (g, a1, a2) = build_mini_bigadget_octahedral();
        let report = g.validate();
        assert_eq!(report.order, 7);
        assert_eq!(report.size, 12);
        assert!(report.euler_ok, "face count: {}", g.face_count());
        assert!(report.simple);
        assert_eq!(g.degree(&a1).unwrap(), 2);
        assert_eq!(g.degree(&a2).unwrap(), 2);
        let fours = g
            .vertex_names()
            .filter(|&v| g.degree(v).unwrap() == 4)
            .count();
        assert_eq!(fours, 5);
    }

    #[test]
    fn base_multigraph_shape() {
        let (g, labels) = build_base_multigraph_m();
        let report = g.validate();
        assert_eq!(report.order, 12);
        assert_eq!(report.size, 24);
        assert!(report.regular4);
        assert!(!report.simple);
        assert!(report.euler_ok, "face count: {}", g.face_count());
        assert_eq!(g.face_count(), 14);
        assert!(report.two_connected);
        assert!(!report.three_connected);
        // The pair {v1, v4} isolates the red vertex between them.
        assert!(g.disconnects(&["v1", "v4"]).unwrap());
        // Each digon really is a parallel pair.
        for (k, red) in labels.red.iter().enumerate() {
            let (a, b) = labels.pairs[k];
            assert_eq!(g.multiplicity(&format!("v{a}"), red).unwrap(), 2);
            assert_eq!(g.multiplicity(red, &format!("v{b}")).unwrap(), 2);
        }
    }

    #[test]
    fn subdividing_all_digons_gives_simple_graph() {
        let (mut g, labels) = build_base_multigraph_m();
        for k in 0..4 {
            for side in 0..2 {
                let edge = labels.digons[k][side][0].clone();
                g.subdivide_edge(&edge).unwrap();
            }
        }
        let report = g.validate();
        assert_eq!(report.order, 20);
        assert_eq!(report.size, 32);
        assert!(report.simple);
        assert!(report.euler_ok);
    }

    #[test]
    fn counterexample_gadget_variant() {
        let (g, instances) = build_counterexample_68(CounterexampleVariant::Gadget);
        let report = g.validate();
        assert_eq!(report.order, 68);
        assert_eq!(report.size, 136);
        assert!(report.regular4);
        assert!(report.simple);
        assert!(report.euler_ok);
        assert!(!report.two_connected);
        assert_eq!(instances.len(), 4);
        for inst in &instances {
            assert_eq!(inst.mini_vertices[0].len(), 7);
            assert_eq!(inst.mini_vertices[1].len(), 7);
        }
    }

    #[test]
    fn counterexample_bigadget_variant() {
        let (g, instances) = build_counterexample_68(CounterexampleVariant::Bigadget);
        let report = g.validate();
        assert_eq!(report.order, 68);
        assert_eq!(report.size, 136);
        assert!(report.regular4);
        assert!(report.simple);
        assert!(report.euler_ok);
        assert!(report.two_connected);
        assert!(!report.three_connected);
        assert_eq!(instances.len(), 4);
        for inst in &instances {
            assert!(inst.w1_prime.is_some() && inst.w2_prime.is_some());
            assert_eq!(inst.mini_vertices[0].len(), 7);
        }
    }

    #[test]
    fn prune_single_gadget() {
        let (g, instances) = build_counterexample_68(CounterexampleVariant::Gadget);
        let pruned = prune_mini_gadget(&g, &instances[0], 1).unwrap();
        let report = pruned.validate();
        assert_eq!(report.order, 61);
        assert_eq!(report.size, 122);
        assert!(report.regular4);
        assert!(report.euler_ok);
        // The digon is restored: v1 and the red vertex are doubly joined.
        assert_eq!(
            pruned
                .multiplicity(&instances[0].v1, &instances[0].w)
                .unwrap(),
            2
        );
    }

    #[test]
    fn prune_all_gadgets_restores_base() {
        for variant in [CounterexampleVariant::Gadget, CounterexampleVariant::Bigadget] {
            let (mut g, instances) = build_counterexample_68(variant);
            for inst in &instances {
                for which in [1u8, 2u8] {
                    g = prune_mini_gadget(&g, inst, which).unwrap();
                    assert!(g.validate().regular4, "{variant:?} lost 4-regularity");
                }
            }
            let (base, _) = build_base_multigraph_m();
            assert!(
                isomorphic(&g, &base).is_some(),
                "{variant:?} prune did not restore the base multigraph"
            );
        }
    }

    #[test]
    fn single_subdivide_attach_prune_roundtrip() {
        let (mut g, labels) = build_base_multigraph_m();
        let edge = labels.digons[0][0][0].clone();
        let sv = g.subdivide_edge(&edge).unwrap();
        assert_eq!((g.order(), g.size()), (13, 25));
        let (mini, attach) = build_mini_gadget_octahedral();
        g.attach_at_degree2(&sv, &mini, &attach, "q.").unwrap();
        assert_eq!((g.order(), g.size()), (19, 38));
        assert!(g.validate().euler_ok);

        let mut set = vec![sv.clone()];
        set.extend(
            mini.vertex_names()
                .filter(|&n| n != attach)
                .map(|n| format!("q.{n}")),
        );
        let inst = GadgetInstance {
            w: labels.red[0].clone(),
            v1: "v1".into(),
            v2: "v4".into(),
            w1: sv,
            w2: String::new(),
            w1_prime: None,
            w2_prime: None,
            mini_vertices: [set, Vec::new()],
        };
        let pruned = prune_mini_gadget(&g, &inst, 1).unwrap();
        let (base, _) = build_base_multigraph_m();
        assert!(isomorphic(&pruned, &base).is_some());
    }

    #[test]
    fn prune_rejects_bad_instance() {
        let (g, instances) = build_counterexample_68(CounterexampleVariant::Gadget);
        let mut inst = instances[0].clone();
        inst.mini_vertices[0].push("nonexistent".into());
        assert!(matches!(
            prune_mini_gadget(&g, &inst, 1),
            Err(GraphError::InvalidInstance(_))
        ));
        assert!(matches!(
            prune_mini_gadget(&g, &instances[0], 3),
            Err(GraphError::InvalidInstance(_))
        ));
    }
}
