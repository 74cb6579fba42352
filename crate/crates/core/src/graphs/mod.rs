//! Plane multigraphs with rotation systems.
//!
//! A [`PlaneMultigraph`] stores vertices, an edge multiset (loops and
//! parallel edges allowed) and, for each vertex, the counterclockwise cyclic
//! order of its incident edge-ends. The rotation system encodes a surface
//! embedding; tracing its faces and checking `V − E + F = 2` certifies that
//! the embedding is planar. Vertices and edges carry persistent string ids
//! so parallel edges stay distinguishable in rotations and serialization.

mod builders;
mod iso;

pub use builders::{
    build_base_multigraph_m, build_counterexample_68, build_mini_bigadget_octahedral,
    build_mini_gadget_octahedral, build_octahedron, prune_mini_gadget, BaseLabels,
    CounterexampleVariant, GadgetInstance,
};
pub use iso::isomorphic;

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum GraphError {
    #[error("duplicate vertex id: {0}")]
    DuplicateVertex(String),
    #[error("duplicate edge id: {0}")]
    DuplicateEdge(String),
    #[error("unknown vertex id: {0}")]
    UnknownVertex(String),
    #[error("no such edge: {0}")]
    NoSuchEdge(String),
    #[error("vertex {vertex} has degree {degree}, expected {expected}")]
    DegreeMismatch {
        vertex: String,
        degree: usize,
        expected: usize,
    },
    #[error("invalid rotation at {0}: {1}")]
    InvalidRotation(String, String),
    #[error("invalid gadget instance: {0}")]
    InvalidInstance(String),
    #[error("malformed graph data: {0}")]
    Parse(String),
}

/// One end of an edge: `end` is 0 at `ends[0]` and 1 at `ends[1]`. A loop
/// contributes both of its ends to the same vertex's rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeEnd {
    pub edge: usize,
    pub end: u8,
}

#[derive(Debug, Clone, PartialEq)]
struct EdgeRec {
    name: String,
    ends: [usize; 2],
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct PlaneMultigraph {
    verts: Vec<String>,
    vert_idx: HashMap<String, usize>,
    edges: Vec<EdgeRec>,
    edge_idx: HashMap<String, usize>,
    rot: Vec<Vec<EdgeEnd>>,
}

/// Structural facts about a graph, as produced by [`PlaneMultigraph::validate`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub order: usize,
    pub size: usize,
    pub regular4: bool,
    pub simple: bool,
    /// `V − E + F = 2` with faces traced from the rotation system (and the
    /// graph connected), certifying a plane embedding.
    pub euler_ok: bool,
    pub two_connected: bool,
    pub three_connected: bool,
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "order={} size={} regular4={} simple={} euler_ok={} two_connected={} three_connected={}",
            self.order, self.size, self.regular4, self.simple, self.euler_ok,
            self.two_connected, self.three_connected
        )
    }
}

impl PlaneMultigraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn order(&self) -> usize {
        self.verts.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_names(&self) -> impl Iterator<Item = &str> {
        self.verts.iter().map(String::as_str)
    }

    pub fn edge_names(&self) -> impl Iterator<Item = &str> {
        self.edges.iter().map(|e| e.name.as_str())
    }

    pub fn has_vertex(&self, name: &str) -> bool {
        self.vert_idx.contains_key(name)
    }

    pub fn has_edge(&self, name: &str) -> bool {
        self.edge_idx.contains_key(name)
    }

    /// Endpoint names of an edge.
    pub fn edge_ends(&self, name: &str) -> Result<(String, String), GraphError> {
        let idx = self.edge_index(name)?;
        let e = &self.edges[idx];
        Ok((self.verts[e.ends[0]].clone(), self.verts[e.ends[1]].clone()))
    }

    fn vertex_index(&self, name: &str) -> Result<usize, GraphError> {
        self.vert_idx
            .get(name)
            .copied()
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    fn edge_index(&self, name: &str) -> Result<usize, GraphError> {
        self.edge_idx
            .get(name)
            .copied()
            .ok_or_else(|| GraphError::NoSuchEdge(name.to_string()))
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<usize, GraphError> {
        if self.vert_idx.contains_key(name) {
            return Err(GraphError::DuplicateVertex(name.to_string()));
        }
        let idx = self.verts.len();
        self.verts.push(name.to_string());
        self.vert_idx.insert(name.to_string(), idx);
        self.rot.push(Vec::new());
        Ok(idx)
    }

    /// Adds an edge, appending its ends to the endpoint rotations in call
    /// order. Builders that need a specific embedding fix rotations
    /// afterwards with [`Self::set_rotation`].
    pub fn add_edge(&mut self, name: &str, u: &str, v: &str) -> Result<usize, GraphError> {
        if self.edge_idx.contains_key(name) {
            return Err(GraphError::DuplicateEdge(name.to_string()));
        }
        let ui = self.vertex_index(u)?;
        let vi = self.vertex_index(v)?;
        let idx = self.edges.len();
        self.edges.push(EdgeRec {
            name: name.to_string(),
            ends: [ui, vi],
        });
        self.edge_idx.insert(name.to_string(), idx);
        self.rot[ui].push(EdgeEnd { edge: idx, end: 0 });
        self.rot[vi].push(EdgeEnd { edge: idx, end: 1 });
        Ok(idx)
    }

    pub fn degree(&self, name: &str) -> Result<usize, GraphError> {
        Ok(self.rot[self.vertex_index(name)?].len())
    }

    /// Replaces the rotation at `v`. The entries must be exactly the
    /// edge-ends currently incident to `v`, as `(edge name, end)` pairs.
    pub fn set_rotation(&mut self, v: &str, order: &[(&str, u8)]) -> Result<(), GraphError> {
        let vi = self.vertex_index(v)?;
        let mut ends = Vec::with_capacity(order.len());
        for &(name, end) in order {
            let e = self.edge_index(name)?;
            if end > 1 || self.edges[e].ends[end as usize] != vi {
                return Err(GraphError::InvalidRotation(
                    v.to_string(),
                    format!("end {end} of edge {name} is not at this vertex"),
                ));
            }
            ends.push(EdgeEnd { edge: e, end });
        }
        let mut current: Vec<EdgeEnd> = self.rot[vi].clone();
        let mut proposed = ends.clone();
        current.sort_unstable_by_key(|e| (e.edge, e.end));
        proposed.sort_unstable_by_key(|e| (e.edge, e.end));
        if current != proposed {
            return Err(GraphError::InvalidRotation(
                v.to_string(),
                "rotation is not a permutation of the incident edge-ends".into(),
            ));
        }
        self.rot[vi] = ends;
        Ok(())
    }

    /// Rotation at `v` as `(edge name, end)` pairs, in stored cyclic order.
    pub fn rotation(&self, v: &str) -> Result<Vec<(String, u8)>, GraphError> {
        let vi = self.vertex_index(v)?;
        Ok(self.rot[vi]
            .iter()
            .map(|ee| (self.edges[ee.edge].name.clone(), ee.end))
            .collect())
    }

    /// The vertex at the other end of an edge-end.
    fn other_end_vertex(&self, ee: EdgeEnd) -> usize {
        self.edges[ee.edge].ends[1 - ee.end as usize]
    }

    pub fn neighbors(&self, v: &str) -> Result<Vec<String>, GraphError> {
        let vi = self.vertex_index(v)?;
        Ok(self.rot[vi]
            .iter()
            .map(|&ee| self.verts[self.other_end_vertex(ee)].clone())
            .collect())
    }

    /// Number of faces traced from the rotation system. Each directed edge
    /// belongs to exactly one face orbit: after arriving at a vertex, the
    /// walk leaves along the next edge-end counterclockwise.
    pub fn face_count(&self) -> usize {
        let mut pos: HashMap<(usize, u8), (usize, usize)> = HashMap::new();
        for (v, ends) in self.rot.iter().enumerate() {
            for (i, ee) in ends.iter().enumerate() {
                pos.insert((ee.edge, ee.end), (v, i));
            }
        }
        let mut visited = vec![[false; 2]; self.edges.len()];
        let mut faces = 0;
        for start_e in 0..self.edges.len() {
            for start_d in 0..2usize {
                if visited[start_e][start_d] {
                    continue;
                }
                faces += 1;
                let (mut e, mut d) = (start_e, start_d);
                loop {
                    visited[e][d] = true;
                    let arrival = 1 - d;
                    let (v, i) = pos[&(e, arrival as u8)];
                    let deg = self.rot[v].len();
                    let next = self.rot[v][(i + 1) % deg];
                    e = next.edge;
                    d = next.end as usize;
                    if e == start_e && d == start_d {
                        break;
                    }
                }
            }
        }
        faces
    }

    /// Connectivity ignoring the vertices in `removed` (indices).
    fn connected_without(&self, removed: &[usize]) -> bool {
        let n = self.verts.len();
        let mut blocked = vec![false; n];
        for &r in removed {
            blocked[r] = true;
        }
        let start = match (0..n).find(|&v| !blocked[v]) {
            Some(v) => v,
            None => return true,
        };
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &ee in &self.rot[v] {
                let w = self.other_end_vertex(ee);
                if !blocked[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n - removed.len()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_without(&[])
    }

    /// Whether removing the named vertices disconnects the rest.
    pub fn disconnects(&self, names: &[&str]) -> Result<bool, GraphError> {
        let mut removed = Vec::with_capacity(names.len());
        for name in names {
            removed.push(self.vertex_index(name)?);
        }
        Ok(!self.connected_without(&removed))
    }

    /// Computes the structural report: order, size, 4-regularity,
    /// simplicity, the Euler check from face tracing, and 2-/3-connectivity
    /// by exhaustive 1- and 2-cut search (fine up to order ~100).
    pub fn validate(&self) -> ValidationReport {
        let order = self.order();
        let size = self.size();
        let regular4 = self.rot.iter().all(|r| r.len() == 4);
        let mut simple = true;
        let mut seen_pairs = HashSet::new();
        for e in &self.edges {
            if e.ends[0] == e.ends[1] {
                simple = false;
                break;
            }
            let key = (e.ends[0].min(e.ends[1]), e.ends[0].max(e.ends[1]));
            if !seen_pairs.insert(key) {
                simple = false;
                break;
            }
        }
        let connected = order > 0 && self.is_connected();
        let euler_ok = connected
            && (order as i64) - (size as i64) + (self.face_count() as i64) == 2;
        let mut two_connected = connected && order >= 2;
        if two_connected && order >= 3 {
            for v in 0..order {
                if !self.connected_without(&[v]) {
                    two_connected = false;
                    break;
                }
            }
        }
        let mut three_connected = two_connected && order >= 4;
        if three_connected {
            'outer: for v in 0..order {
                for w in v + 1..order {
                    if !self.connected_without(&[v, w]) {
                        three_connected = false;
                        break 'outer;
                    }
                }
            }
        }
        ValidationReport {
            order,
            size,
            regular4,
            simple,
            euler_ok,
            two_connected,
            three_connected,
        }
    }

    /// First unused name of the form `{prefix}{k}`, `k ≥ 1`.
    fn fresh_vertex_name(&self, prefix: &str) -> String {
        let mut k = 1usize;
        loop {
            let name = format!("{prefix}{k}");
            if !self.vert_idx.contains_key(&name) {
                return name;
            }
            k += 1;
        }
    }

    fn fresh_edge_name(&self, prefix: &str) -> String {
        let mut k = 1usize;
        loop {
            let name = format!("{prefix}{k}");
            if !self.edge_idx.contains_key(&name) {
                return name;
            }
            k += 1;
        }
    }

    /// Replaces edge `e = {u, v}` by a path of length 2 through a fresh
    /// degree-2 vertex, updating the endpoint rotations in place. Returns
    /// the new vertex's name.
    pub fn subdivide_edge(&mut self, edge: &str) -> Result<String, GraphError> {
        let name = self.fresh_vertex_name("s");
        let ea = format!("{edge}a");
        let eb = format!("{edge}b");
        self.subdivide_edge_named(edge, &name, &ea, &eb)?;
        Ok(name)
    }

    /// As [`Self::subdivide_edge`] with explicit names: `edge = {u, v}`
    /// becomes `first = {u, mid}` and `second = {mid, v}`.
    pub fn subdivide_edge_named(
        &mut self,
        edge: &str,
        mid: &str,
        first: &str,
        second: &str,
    ) -> Result<(), GraphError> {
        let e = self.edge_index(edge)?;
        if self.edge_idx.contains_key(first) {
            return Err(GraphError::DuplicateEdge(first.to_string()));
        }
        if self.edge_idx.contains_key(second) {
            return Err(GraphError::DuplicateEdge(second.to_string()));
        }
        let [u, v] = self.edges[e].ends;
        let mid_idx = self.add_vertex(mid)?;

        // Reuse the old edge record slot for `first` and append `second`,
        // so the replacement can slot into the rotations in place.
        let first_idx = e;
        self.edge_idx.remove(edge);
        self.edges[e] = EdgeRec {
            name: first.to_string(),
            ends: [u, mid_idx],
        };
        self.edge_idx.insert(first.to_string(), first_idx);
        let second_idx = self.edges.len();
        self.edges.push(EdgeRec {
            name: second.to_string(),
            ends: [mid_idx, v],
        });
        self.edge_idx.insert(second.to_string(), second_idx);

        // u keeps `first` end 0 in place of the old end 0; v gets `second`
        // end 1 in place of the old end 1.
        let slot = self.rot[u]
            .iter()
            .position(|&ee| ee == EdgeEnd { edge: e, end: 0 })
            .expect("end present");
        self.rot[u][slot] = EdgeEnd { edge: first_idx, end: 0 };
        let slot = self.rot[v]
            .iter()
            .position(|&ee| ee == EdgeEnd { edge: e, end: 1 })
            .expect("end present");
        self.rot[v][slot] = EdgeEnd { edge: second_idx, end: 1 };
        self.rot[mid_idx] = vec![
            EdgeEnd { edge: first_idx, end: 1 },
            EdgeEnd { edge: second_idx, end: 0 },
        ];
        Ok(())
    }

    /// Disjoint union: copies `other` into `self` with `prefix` prepended to
    /// its vertex and edge names, preserving rotations.
    pub fn absorb(&mut self, other: &PlaneMultigraph, prefix: &str) -> Result<(), GraphError> {
        let base = self.verts.len();
        for name in &other.verts {
            self.add_vertex(&format!("{prefix}{name}"))?;
        }
        let edge_base = self.edges.len();
        for e in &other.edges {
            if self.edge_idx.contains_key(&format!("{prefix}{}", e.name)) {
                return Err(GraphError::DuplicateEdge(format!("{prefix}{}", e.name)));
            }
            let idx = self.edges.len();
            self.edges.push(EdgeRec {
                name: format!("{prefix}{}", e.name),
                ends: [base + e.ends[0], base + e.ends[1]],
            });
            self.edge_idx.insert(format!("{prefix}{}", e.name), idx);
        }
        for (v, ends) in other.rot.iter().enumerate() {
            self.rot[base + v] = ends
                .iter()
                .map(|&ee| EdgeEnd {
                    edge: edge_base + ee.edge,
                    end: ee.end,
                })
                .collect();
        }
        Ok(())
    }

    /// Identifies two degree-2 vertices of this graph, keeping `u`'s name.
    /// The merged rotation interleaves the blocks as `[u₀, v₀, v₁, u₁]`
    /// (or with `v`'s block reversed when `flip` is set, selecting the
    /// mirror embedding of the absorbed part).
    pub fn merge_degree2(&mut self, u: &str, v: &str, flip: bool) -> Result<(), GraphError> {
        let ui = self.vertex_index(u)?;
        let vi = self.vertex_index(v)?;
        if ui == vi {
            return Err(GraphError::InvalidInstance("cannot merge a vertex with itself".into()));
        }
        for (name, idx) in [(u, ui), (v, vi)] {
            if self.rot[idx].len() != 2 {
                return Err(GraphError::DegreeMismatch {
                    vertex: name.to_string(),
                    degree: self.rot[idx].len(),
                    expected: 2,
                });
            }
        }
        let mut v_ends = self.rot[vi].clone();
        if flip {
            v_ends.reverse();
        }
        let u_ends = self.rot[ui].clone();
        self.rot[ui] = vec![u_ends[0], v_ends[0], v_ends[1], u_ends[1]];
        // Re-point v's edge ends at u, then drop v.
        for ee in v_ends {
            self.edges[ee.edge].ends[ee.end as usize] = ui;
        }
        self.rot[vi].clear();
        self.remove_isolated_vertex(vi);
        Ok(())
    }

    fn remove_isolated_vertex(&mut self, vi: usize) {
        debug_assert!(self.rot[vi].is_empty());
        let name = self.verts.remove(vi);
        self.vert_idx.remove(&name);
        self.rot.remove(vi);
        for e in &mut self.edges {
            for end in &mut e.ends {
                if *end > vi {
                    *end -= 1;
                }
            }
        }
        for idx in self.vert_idx.values_mut() {
            if *idx > vi {
                *idx -= 1;
            }
        }
    }

    /// Glues `other` onto this graph by identifying the degree-2 vertex `u`
    /// here with the degree-2 vertex `a` there. The merged vertex keeps
    /// `u`'s name and ends up with degree 4; `other`'s names are imported
    /// with `prefix`.
    pub fn attach_at_degree2(
        &mut self,
        u: &str,
        other: &PlaneMultigraph,
        a: &str,
        prefix: &str,
    ) -> Result<(), GraphError> {
        if self.degree(u)? != 2 {
            return Err(GraphError::DegreeMismatch {
                vertex: u.to_string(),
                degree: self.degree(u)?,
                expected: 2,
            });
        }
        if other.degree(a)? != 2 {
            return Err(GraphError::DegreeMismatch {
                vertex: a.to_string(),
                degree: other.degree(a)?,
                expected: 2,
            });
        }
        self.absorb(other, prefix)?;
        self.merge_degree2(u, &format!("{prefix}{a}"), false)
    }

    /// Removes a set of vertices together with all incident edges, and adds
    /// one fresh edge between `keep_a` and `keep_b` that takes over the
    /// rotation slots previously pointing into the removed set. Exactly one
    /// incident edge of each of `keep_a`, `keep_b` may lead into the removed
    /// set, and no other outside vertex may touch it.
    pub fn excise_and_bridge(
        &mut self,
        removed: &HashSet<String>,
        keep_a: &str,
        keep_b: &str,
        new_edge: &str,
    ) -> Result<(), GraphError> {
        if self.edge_idx.contains_key(new_edge) {
            return Err(GraphError::DuplicateEdge(new_edge.to_string()));
        }
        let mut removed_idx = HashSet::new();
        for name in removed {
            removed_idx.insert(self.vertex_index(name)?);
        }
        let ka = self.vertex_index(keep_a)?;
        let kb = self.vertex_index(keep_b)?;
        if removed_idx.contains(&ka) || removed_idx.contains(&kb) {
            return Err(GraphError::InvalidInstance(
                "bridge endpoints must not be removed".into(),
            ));
        }
        // Every edge into the removed set must come from keep_a or keep_b,
        // once each.
        let mut slot_a = None;
        let mut slot_b = None;
        for (v, ends) in self.rot.iter().enumerate() {
            if removed_idx.contains(&v) {
                continue;
            }
            for (i, &ee) in ends.iter().enumerate() {
                if removed_idx.contains(&self.other_end_vertex(ee)) {
                    let slot = if v == ka {
                        &mut slot_a
                    } else if v == kb {
                        &mut slot_b
                    } else {
                        return Err(GraphError::InvalidInstance(format!(
                            "vertex {} touches the removed set",
                            self.verts[v]
                        )));
                    };
                    if slot.is_some() {
                        return Err(GraphError::InvalidInstance(format!(
                            "vertex {} has several edges into the removed set",
                            self.verts[v]
                        )));
                    }
                    *slot = Some(i);
                }
            }
        }
        let (slot_a, slot_b) = match (slot_a, slot_b) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(GraphError::InvalidInstance(
                    "bridge endpoints do not both touch the removed set".into(),
                ))
            }
        };

        // Rebuild without removed vertices/edges; the fresh bridge edge
        // occupies the vacated rotation slots.
        let mut out = PlaneMultigraph::new();
        for (v, name) in self.verts.iter().enumerate() {
            if !removed_idx.contains(&v) {
                out.add_vertex(name)?;
            }
        }
        let mut edge_map: HashMap<usize, usize> = HashMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            if removed_idx.contains(&e.ends[0]) || removed_idx.contains(&e.ends[1]) {
                continue;
            }
            let idx = out.edges.len();
            out.edges.push(EdgeRec {
                name: e.name.clone(),
                ends: [
                    out.vert_idx[&self.verts[e.ends[0]]],
                    out.vert_idx[&self.verts[e.ends[1]]],
                ],
            });
            out.edge_idx.insert(e.name.clone(), idx);
            edge_map.insert(i, idx);
        }
        let bridge_idx = out.edges.len();
        out.edges.push(EdgeRec {
            name: new_edge.to_string(),
            ends: [out.vert_idx[keep_a], out.vert_idx[keep_b]],
        });
        out.edge_idx.insert(new_edge.to_string(), bridge_idx);

        for (v, ends) in self.rot.iter().enumerate() {
            if removed_idx.contains(&v) {
                continue;
            }
            let nv = out.vert_idx[&self.verts[v]];
            let mut new_ends = Vec::with_capacity(ends.len());
            for (i, &ee) in ends.iter().enumerate() {
                if v == ka && i == slot_a {
                    new_ends.push(EdgeEnd { edge: bridge_idx, end: 0 });
                } else if v == kb && i == slot_b {
                    new_ends.push(EdgeEnd { edge: bridge_idx, end: 1 });
                } else if let Some(&ne) = edge_map.get(&ee.edge) {
                    new_ends.push(EdgeEnd { edge: ne, end: ee.end });
                } else {
                    unreachable!("non-bridge slot pointing into removed set");
                }
            }
            out.rot[nv] = new_ends;
        }
        *self = out;
        Ok(())
    }

    /// Adjacency multiplicity between two vertices by name (loops counted
    /// once per loop edge).
    pub fn multiplicity(&self, u: &str, v: &str) -> Result<usize, GraphError> {
        let ui = self.vertex_index(u)?;
        let vi = self.vertex_index(v)?;
        Ok(self
            .edges
            .iter()
            .filter(|e| {
                (e.ends[0] == ui && e.ends[1] == vi) || (e.ends[0] == vi && e.ends[1] == ui)
            })
            .count())
    }

    // --- JSON (stable external format) ---

    /// Serializes to the stable JSON format: sorted vertex and edge lists
    /// plus per-vertex rotations written as `"<edge><+|->"` entries, where
    /// `+` is the end at the edge's first endpoint.
    pub fn to_json_string(&self) -> String {
        let mut vertices: Vec<String> = self.verts.clone();
        vertices.sort();
        let mut edges: Vec<EdgeDto> = self
            .edges
            .iter()
            .map(|e| EdgeDto {
                id: e.name.clone(),
                ends: [
                    self.verts[e.ends[0]].clone(),
                    self.verts[e.ends[1]].clone(),
                ],
            })
            .collect();
        edges.sort_by(|a, b| a.id.cmp(&b.id));
        let mut rotation = BTreeMap::new();
        for (v, ends) in self.rot.iter().enumerate() {
            let entries: Vec<String> = ends
                .iter()
                .map(|ee| {
                    format!(
                        "{}{}",
                        self.edges[ee.edge].name,
                        if ee.end == 0 { '+' } else { '-' }
                    )
                })
                .collect();
            rotation.insert(self.verts[v].clone(), entries);
        }
        let dto = GraphDto {
            vertices,
            edges,
            rotation,
        };
        serde_json::to_string_pretty(&dto).expect("graph serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Self, GraphError> {
        let dto: GraphDto =
            serde_json::from_str(s).map_err(|e| GraphError::Parse(e.to_string()))?;
        let mut g = PlaneMultigraph::new();
        for v in &dto.vertices {
            g.add_vertex(v)?;
        }
        for e in &dto.edges {
            g.add_edge(&e.id, &e.ends[0], &e.ends[1])?;
        }
        for (v, entries) in &dto.rotation {
            let mut order = Vec::with_capacity(entries.len());
            for entry in entries {
                let (name, sign) = entry.split_at(entry.len() - 1);
                let end = match sign {
                    "+" => 0u8,
                    "-" => 1u8,
                    _ => {
                        return Err(GraphError::Parse(format!(
                            "rotation entry {entry} must end in + or -"
                        )))
                    }
                };
                order.push((name, end));
            }
            let order_refs: Vec<(&str, u8)> = order.iter().map(|(n, e)| (*n, *e)).collect();
            g.set_rotation(v, &order_refs)?;
        }
        Ok(g)
    }
}

#[derive(Serialize, Deserialize)]
struct EdgeDto {
    id: String,
    ends: [String; 2],
}

#[derive(Serialize, Deserialize)]
struct GraphDto {
    vertices: Vec<String>,
    edges: Vec<EdgeDto>,
    rotation: BTreeMap<String, Vec<String>>,
}
