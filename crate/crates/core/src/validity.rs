//! Map validity: simplicity, closed 2-cell faces, wheel neighborhoods and
//! 3-connectivity.
//!
//! An embedding is polyhedral exactly when it is a wheel-neighborhood
//! embedding, so [`check_polyhedral`] decides polyhedrality locally and uses
//! the independent 3-connectivity and closed-2-cell checks only as a
//! consistency cross-check.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::ValidityError;
use crate::graph::Graph;
use crate::surface_map::MapTopology;

/// Evidence for a failed check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Loop {
        edge: usize,
    },
    ParallelEdges {
        edges: (usize, usize),
        ends: (usize, usize),
    },
    LowDegree {
        vertex: usize,
        degree: usize,
    },
    FaceRepeatsVertex {
        face: usize,
        vertex: usize,
    },
    NotWheel {
        vertex: usize,
        reason: String,
    },
    CutPair {
        a: usize,
        b: usize,
    },
    Disconnected,
    TooFewVertices {
        vertices: usize,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Loop { edge } => write!(f, "edge {edge} is a loop"),
            Witness::ParallelEdges { edges, ends } => write!(
                f,
                "edges {} and {} both join vertices {} and {}",
                edges.0, edges.1, ends.0, ends.1
            ),
            Witness::LowDegree { vertex, degree } => {
                write!(f, "vertex {vertex} has degree {degree}")
            }
            Witness::FaceRepeatsVertex { face, vertex } => {
                write!(f, "face {face} visits vertex {vertex} more than once")
            }
            Witness::NotWheel { vertex, reason } => {
                write!(
                    f,
                    "neighborhood of vertex {vertex} is not a wheel: {reason}"
                )
            }
            Witness::CutPair { a, b } => write!(f, "removing {{{a}, {b}}} disconnects the graph"),
            Witness::Disconnected => write!(f, "graph is disconnected"),
            Witness::TooFewVertices { vertices } => {
                write!(f, "{vertices} vertices; 3-connectivity needs at least 4")
            }
        }
    }
}

/// Returns `(simple, min_degree_ok, witnesses)`.
pub fn check_simple_map(top: &MapTopology) -> (bool, bool, Vec<Witness>) {
    let rs = top.rotation_system();
    let mut witnesses = Vec::new();
    let mut seen: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for e in 0..rs.num_edges() {
        let (a, b) = rs.endpoints(e);
        if a == b {
            witnesses.push(Witness::Loop { edge: e });
            continue;
        }
        let key = (a.min(b), a.max(b));
        if let Some(&first) = seen.get(&key) {
            witnesses.push(Witness::ParallelEdges {
                edges: (first, e),
                ends: key,
            });
        } else {
            seen.insert(key, e);
        }
    }
    let simple = witnesses.is_empty();
    let mut min_degree_ok = true;
    for v in 0..rs.num_vertices() {
        if rs.degree(v) < 3 {
            min_degree_ok = false;
            witnesses.push(Witness::LowDegree {
                vertex: v,
                degree: rs.degree(v),
            });
        }
    }
    (simple, min_degree_ok, witnesses)
}

/// True iff no facial walk repeats a vertex.
pub fn check_closed_2cell(top: &MapTopology) -> (bool, Option<Witness>) {
    for (f, walk) in top.faces().iter().enumerate() {
        let mut seen = BTreeSet::new();
        for &v in &walk.vertices {
            if !seen.insert(v) {
                return (
                    false,
                    Some(Witness::FaceRepeatsVertex { face: f, vertex: v }),
                );
            }
        }
    }
    (true, None)
}

/// True iff the faces around every vertex form a wheel with at least three
/// spokes and a possibly subdivided rim.
///
/// At each vertex `v`: the corner faces are pairwise distinct, consecutive
/// corner faces share exactly the spoke between them, and the face edges
/// not meeting `v` form one simple cycle avoiding `v`.
pub fn check_wheel_neighborhood(top: &MapTopology) -> (bool, Option<Witness>) {
    let (closed, witness) = check_closed_2cell(top);
    if !closed {
        return (false, witness);
    }
    let face_edges: Vec<BTreeSet<usize>> = top
        .faces()
        .iter()
        .map(|w| w.darts.iter().map(|d| d.edge).collect())
        .collect();
    for v in 0..top.num_vertices() {
        if let Err(reason) = wheel_at(top, &face_edges, v) {
            return (false, Some(Witness::NotWheel { vertex: v, reason }));
        }
    }
    (true, None)
}

fn wheel_at(top: &MapTopology, face_edges: &[BTreeSet<usize>], v: usize) -> Result<(), String> {
    let rs = top.rotation_system();
    let corners = top.corner_faces(v);
    let deg = corners.len();
    if deg < 3 {
        return Err(format!("only {deg} spokes"));
    }
    let distinct: BTreeSet<usize> = corners.iter().copied().collect();
    if distinct.len() != deg {
        return Err("a face meets the vertex at two corners".into());
    }
    let rot = rs.rotation(v);
    for p in 0..deg {
        let (f, g) = (corners[p], corners[(p + 1) % deg]);
        let spoke = rot[(p + 1) % deg].edge;
        let common: Vec<usize> = face_edges[f]
            .intersection(&face_edges[g])
            .copied()
            .collect();
        if common != [spoke] {
            return Err(format!(
                "faces {f} and {g} share edges {common:?}, expected only spoke {spoke}"
            ));
        }
    }

    let mut rim_degree: BTreeMap<usize, usize> = BTreeMap::new();
    let mut rim_adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut rim_edges = BTreeSet::new();
    for &f in corners {
        for &e in &face_edges[f] {
            let (a, b) = rs.endpoints(e);
            if a == v || b == v {
                continue;
            }
            if !rim_edges.insert(e) {
                return Err(format!("rim edge {e} lies on two faces at the vertex"));
            }
            for (x, y) in [(a, b), (b, a)] {
                *rim_degree.entry(x).or_insert(0) += 1;
                rim_adj.entry(x).or_default().push(y);
            }
        }
    }
    if let Some((&x, &d)) = rim_degree.iter().find(|(_, &d)| d != 2) {
        return Err(format!("rim vertex {x} has rim degree {d}"));
    }
    for d in rot {
        let u = rs.vertex_of(d.opposite());
        if !rim_degree.contains_key(&u) {
            return Err(format!("spoke end {u} is not on the rim"));
        }
    }
    // Connected and 2-regular means a single cycle.
    let start = *rim_adj.keys().next().ok_or("empty rim")?;
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for &y in &rim_adj[&x] {
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    if seen.len() != rim_adj.len() {
        return Err("rim splits into several cycles".into());
    }
    Ok(())
}

fn connected_without(graph: &Graph, removed: &[usize]) -> bool {
    let n = graph.num_vertices();
    let Some(start) = (0..n).find(|v| !removed.contains(v)) else {
        return true;
    };
    let mut seen = vec![false; n];
    for &r in removed {
        seen[r] = true;
    }
    seen[start] = true;
    let mut reached = 1;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &w in graph.neighbors(v) {
            let w = w as usize;
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    reached == n - removed.len()
}

/// Articulation points of `graph - removed`, assumed connected, by an
/// iterative lowpoint DFS.
fn articulation_points(graph: &Graph, removed: usize) -> Vec<bool> {
    let n = graph.num_vertices();
    let root = if removed == 0 { 1 } else { 0 };
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut cut = vec![false; n];
    let mut root_children = 0;
    disc[removed] = 0;
    disc[root] = 1;
    low[root] = 1;
    let mut time = 2;
    // (vertex, parent, next neighbor index)
    let mut stack = vec![(root, usize::MAX, 0usize)];
    while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
        let neighbors = graph.neighbors(v);
        if *next < neighbors.len() {
            let w = neighbors[*next] as usize;
            *next += 1;
            if w == removed || w == parent {
                continue;
            }
            if disc[w] == usize::MAX {
                disc[w] = time;
                low[w] = time;
                time += 1;
                if v == root {
                    root_children += 1;
                }
                stack.push((w, v, 0));
            } else {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if parent != usize::MAX {
                low[parent] = low[parent].min(low[v]);
                if parent != root && low[v] >= disc[parent] {
                    cut[parent] = true;
                }
            }
        }
    }
    cut[root] = root_children > 1;
    cut
}

/// 3-connectivity: for every vertex `a`, `graph - a` must be connected
/// with no articulation point. The witness is the lexicographically first
/// separating pair.
///
/// Graphs on fewer than four vertices are not 3-connected; `K4` is.
pub fn check_3_connected(graph: &Graph) -> (bool, Option<Witness>) {
    let n = graph.num_vertices();
    if n < 4 {
        return (false, Some(Witness::TooFewVertices { vertices: n }));
    }
    if !connected_without(graph, &[]) {
        return (false, Some(Witness::Disconnected));
    }
    for a in 0..n {
        if !connected_without(graph, &[a]) {
            // `a` alone separates; pair it with the first vertex that keeps
            // the rest disconnected.
            let b = (0..n)
                .find(|&b| b != a && !connected_without(graph, &[a, b]))
                .expect("n >= 4 and a is a cut vertex");
            return (
                false,
                Some(Witness::CutPair {
                    a: a.min(b),
                    b: a.max(b),
                }),
            );
        }
        // Any articulation point below `a` would have been found earlier.
        if let Some(b) = articulation_points(graph, a).iter().position(|&c| c) {
            return (
                false,
                Some(Witness::CutPair {
                    a: a.min(b),
                    b: a.max(b),
                }),
            );
        }
    }
    (true, None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidityReport {
    pub is_simple: bool,
    pub min_degree_ok: bool,
    pub closed_2cell: bool,
    pub wheel_neighborhood: bool,
    pub three_connected: bool,
    pub polyhedral: bool,
    pub witnesses: Vec<Witness>,
}

/// Runs every check and decides polyhedrality by the wheel condition.
///
/// Returns [`ValidityError::Inconsistent`] if a wheel-neighborhood
/// embedding fails the 3-connectivity or closed-2-cell check.
pub fn check_polyhedral(top: &MapTopology) -> Result<ValidityReport, ValidityError> {
    let (is_simple, min_degree_ok, mut witnesses) = check_simple_map(top);
    let (closed_2cell, w) = check_closed_2cell(top);
    witnesses.extend(w);
    let (wheel_neighborhood, w) = check_wheel_neighborhood(top);
    if closed_2cell {
        witnesses.extend(w);
    }
    let graph = Graph::from_rotation_system(top.rotation_system());
    let (three_connected, w) = check_3_connected(&graph);
    witnesses.extend(w);

    if wheel_neighborhood && !three_connected {
        return Err(ValidityError::Inconsistent(
            "the graph is not 3-connected".into(),
        ));
    }
    if wheel_neighborhood && !closed_2cell {
        return Err(ValidityError::Inconsistent(
            "a facial walk repeats a vertex".into(),
        ));
    }
    Ok(ValidityReport {
        is_simple,
        min_degree_ok,
        closed_2cell,
        wheel_neighborhood,
        three_connected,
        polyhedral: wheel_neighborhood,
        witnesses,
    })
}
