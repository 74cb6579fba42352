//! Abstract multigraph isomorphism by color refinement plus backtracking.
//!
//! Rotation systems are ignored: two graphs are isomorphic when some vertex
//! bijection preserves edge multiplicities (including loops). Refinement
//! colors are computed jointly over both graphs so equal structure gets
//! equal colors, then a backtracking search matches color classes.

use std::collections::{BTreeMap, HashMap};

use super::PlaneMultigraph;

struct AdjData {
    names: Vec<String>,
    /// Multiplicity to each distinct neighbor (self excluded).
    neighbors: Vec<Vec<(usize, usize)>>,
    loops: Vec<usize>,
}

fn adjacency(g: &PlaneMultigraph) -> AdjData {
    let names: Vec<String> = g.vertex_names().map(str::to_string).collect();
    let index: HashMap<&str, usize> = names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), i))
        .collect();
    let n = names.len();
    let mut mult = vec![HashMap::<usize, usize>::new(); n];
    let mut loops = vec![0usize; n];
    for e in g.edge_names().map(str::to_string).collect::<Vec<_>>() {
        let (u, v) = g.edge_ends(&e).expect("edge exists");
        let (ui, vi) = (index[u.as_str()], index[v.as_str()]);
        if ui == vi {
            loops[ui] += 1;
        } else {
            *mult[ui].entry(vi).or_default() += 1;
            *mult[vi].entry(ui).or_default() += 1;
        }
    }
    let neighbors = mult
        .into_iter()
        .map(|m| {
            let mut v: Vec<(usize, usize)> = m.into_iter().collect();
            v.sort_unstable();
            v
        })
        .collect();
    AdjData {
        names,
        neighbors,
        loops,
    }
}

/// One joint refinement round; returns the new colors for both graphs and
/// the number of distinct colors.
fn refine_round(
    g: &AdjData,
    h: &AdjData,
    cg: &[usize],
    ch: &[usize],
) -> (Vec<usize>, Vec<usize>, usize) {
    let key = |data: &AdjData, colors: &[usize], v: usize| {
        let mut nbr: Vec<(usize, usize)> = data.neighbors[v]
            .iter()
            .map(|&(w, m)| (m, colors[w]))
            .collect();
        nbr.sort_unstable();
        (colors[v], data.loops[v], nbr)
    };
    let mut table: BTreeMap<(usize, usize, Vec<(usize, usize)>), usize> = BTreeMap::new();
    let mut keys_g = Vec::with_capacity(cg.len());
    for v in 0..cg.len() {
        keys_g.push(key(g, cg, v));
    }
    let mut keys_h = Vec::with_capacity(ch.len());
    for v in 0..ch.len() {
        keys_h.push(key(h, ch, v));
    }
    // Insert in a deterministic global order so both graphs share ids.
    let mut all: Vec<&(usize, usize, Vec<(usize, usize)>)> =
        keys_g.iter().chain(keys_h.iter()).collect();
    all.sort();
    for k in all {
        let next = table.len();
        table.entry(k.clone()).or_insert(next);
    }
    let ng = keys_g.iter().map(|k| table[k]).collect();
    let nh = keys_h.iter().map(|k| table[k]).collect();
    let count = table.len();
    (ng, nh, count)
}

fn histograms_match(cg: &[usize], ch: &[usize]) -> bool {
    let mut a = HashMap::<usize, usize>::new();
    let mut b = HashMap::<usize, usize>::new();
    for &c in cg {
        *a.entry(c).or_default() += 1;
    }
    for &c in ch {
        *b.entry(c).or_default() += 1;
    }
    a == b
}

/// Finds a vertex bijection preserving edge multiplicities, if one exists.
pub fn isomorphic(
    g: &PlaneMultigraph,
    h: &PlaneMultigraph,
) -> Option<HashMap<String, String>> {
    if g.order() != h.order() || g.size() != h.size() {
        return None;
    }
    let ga = adjacency(g);
    let ha = adjacency(h);
    let n = ga.names.len();
    if n == 0 {
        return Some(HashMap::new());
    }

    let mut cg = vec![0usize; n];
    let mut ch = vec![0usize; n];
    let mut distinct = 1usize;
    loop {
        let (ng, nh, count) = refine_round(&ga, &ha, &cg, &ch);
        if !histograms_match(&ng, &nh) {
            return None;
        }
        let stable = count == distinct;
        cg = ng;
        ch = nh;
        distinct = count;
        if stable || distinct == n {
            break;
        }
    }

    // Backtracking over color classes, smallest class first.
    let mut class_size = HashMap::<usize, usize>::new();
    for &c in &cg {
        *class_size.entry(c).or_default() += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (class_size[&cg[v]], cg[v], v));

    let mut mapping = vec![usize::MAX; n]; // g index -> h index
    let mut used = vec![false; n];

    fn compatible(
        ga: &AdjData,
        ha: &AdjData,
        mapping: &[usize],
        placed: &[usize],
        v: usize,
        w: usize,
    ) -> bool {
        if ga.loops[v] != ha.loops[w] {
            return false;
        }
        let mult_g = |a: usize, b: usize| {
            ga.neighbors[a]
                .iter()
                .find(|&&(x, _)| x == b)
                .map_or(0, |&(_, m)| m)
        };
        let mult_h = |a: usize, b: usize| {
            ha.neighbors[a]
                .iter()
                .find(|&&(x, _)| x == b)
                .map_or(0, |&(_, m)| m)
        };
        placed
            .iter()
            .all(|&p| mult_g(v, p) == mult_h(w, mapping[p]))
    }

    fn search(
        ga: &AdjData,
        ha: &AdjData,
        cg: &[usize],
        ch: &[usize],
        order: &[usize],
        depth: usize,
        mapping: &mut [usize],
        used: &mut [bool],
        placed: &mut Vec<usize>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for w in 0..ch.len() {
            if used[w] || ch[w] != cg[v] {
                continue;
            }
            if !compatible(ga, ha, mapping, placed, v, w) {
                continue;
            }
            mapping[v] = w;
            used[w] = true;
            placed.push(v);
            if search(ga, ha, cg, ch, order, depth + 1, mapping, used, placed) {
                return true;
            }
            placed.pop();
            used[w] = false;
            mapping[v] = usize::MAX;
        }
        false
    }

    let mut placed = Vec::with_capacity(n);
    if !search(
        &ga, &ha, &cg, &ch, &order, 0, &mut mapping, &mut used, &mut placed,
    ) {
        return None;
    }
    Some(
        (0..n)
            .map(|v| (ga.names[v].clone(), ha.names[mapping[v]].clone()))
            .collect(),
    )
}
