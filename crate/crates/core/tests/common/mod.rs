//! Corpus, perturbations and brute-force oracles shared by the integration
//! tests. Nothing here calls into the algorithms under test.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use polymap_core::generators::{hex_klein, hex_torus, k7_torus, tetrahedron, tri_torus, truncate};
use polymap_core::{Graph, RotationSystem, Sign};
use rand::Rng;

pub type EdgeList = (usize, Vec<(usize, usize)>);

/// Named base maps followed by their truncations.
pub fn corpus() -> Vec<(String, RotationSystem)> {
    let mut base = vec![("tetrahedron".to_string(), tetrahedron())];
    for p in 3..=5 {
        for q in 3..=5 {
            base.push((format!("hex_torus({p},{q})"), hex_torus(p, q).unwrap()));
        }
    }
    base.push(("tri_torus(3,3)".into(), tri_torus(3, 3).unwrap()));
    base.push(("k7_torus".into(), k7_torus()));
    base.push(("hex_klein(3,3)".into(), hex_klein(3, 3).unwrap()));
    let truncated: Vec<_> = base
        .iter()
        .map(|(name, rs)| (format!("truncate({name})"), truncate(rs)))
        .collect();
    base.extend(truncated);
    base
}

#[derive(Clone, Copy, Debug)]
pub enum Perturbation {
    /// Swap two positions in one vertex's rotation.
    Swap {
        vertex: usize,
        i: usize,
        j: usize,
    },
    FlipSign {
        edge: usize,
    },
    /// Reverse one rotation and flip the signs of its edges.
    Reorient {
        vertex: usize,
    },
}

/// Applies `op` with indices reduced modulo the relevant sizes.
pub fn perturb(rs: &RotationSystem, op: Perturbation) -> RotationSystem {
    let mut rotations = rs.edge_rotations();
    let mut signature = rs.signature().to_vec();
    match op {
        Perturbation::Swap { vertex, i, j } => {
            let rot = &mut rotations[vertex % rs.num_vertices()];
            let len = rot.len();
            rot.swap(i % len, j % len);
        }
        Perturbation::FlipSign { edge } => {
            let e = edge % signature.len();
            signature[e] = signature[e].flip();
        }
        Perturbation::Reorient { vertex } => {
            let v = vertex % rs.num_vertices();
            rotations[v].reverse();
            for &e in &rotations[v] {
                // A loop at v has both ends here and keeps its sign.
                if rs.endpoints(e).0 != rs.endpoints(e).1 {
                    signature[e] = signature[e].flip();
                }
            }
        }
    }
    RotationSystem::with_labels(rs.labels().to_vec(), rotations, signature)
        .expect("perturbation keeps darts and connectivity")
}

pub fn random_perturbation(rng: &mut impl Rng) -> Perturbation {
    match rng.gen_range(0..3) {
        0 => Perturbation::Swap {
            vertex: rng.gen(),
            i: rng.gen(),
            j: rng.gen(),
        },
        1 => Perturbation::FlipSign { edge: rng.gen() },
        _ => Perturbation::Reorient { vertex: rng.gen() },
    }
}

/// Renumbers vertices by `perm` (old index -> new index).
pub fn relabel(rs: &RotationSystem, perm: &[usize]) -> RotationSystem {
    let old = rs.edge_rotations();
    let mut rotations = vec![Vec::new(); old.len()];
    let mut labels = vec![String::new(); old.len()];
    for (v, rot) in old.into_iter().enumerate() {
        rotations[perm[v]] = rot;
        labels[perm[v]] = rs.label(v).to_string();
    }
    RotationSystem::with_labels(labels, rotations, rs.signature().to_vec()).unwrap()
}

pub fn all_positive(rs: &RotationSystem) -> bool {
    rs.signature().iter().all(|s| *s == Sign::Positive)
}

/// Random connected simple graph: a random spanning tree plus extra edges
/// with probability `p`.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> EdgeList {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) && !edges.contains(&(a, b)) {
                edges.push((a, b));
            }
        }
    }
    (n, edges)
}

pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in edges {
        if a != b {
            adj[a][b] = true;
            adj[b][a] = true;
        }
    }
    adj
}

/// Adjacency of the underlying simple graph, read off the edge endpoints.
pub fn map_adjacency(rs: &RotationSystem) -> Vec<Vec<bool>> {
    let edges: Vec<_> = (0..rs.num_edges()).map(|e| rs.endpoints(e)).collect();
    adjacency(rs.num_vertices(), &edges)
}

pub fn graph_of(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges.iter().copied())
}

pub fn petersen() -> EdgeList {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    (10, edges)
}

pub fn complete(n: usize) -> EdgeList {
    let edges = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    (n, edges)
}

pub fn cycle(n: usize) -> EdgeList {
    (n, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

/// All sequences of `n + 1` distinct vertices joined consecutively by
/// edges, or `None` once there are more than `limit` of them.
pub fn naive_paths(adj: &[Vec<bool>], n: usize, limit: usize) -> Option<Vec<Vec<usize>>> {
    fn extend(
        adj: &[Vec<bool>],
        len: usize,
        limit: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) -> bool {
        if cur.len() == len {
            out.push(cur.clone());
            return out.len() <= limit;
        }
        let last = *cur.last().unwrap();
        for w in 0..adj.len() {
            if adj[last][w] && !cur.contains(&w) {
                cur.push(w);
                let ok = extend(adj, len, limit, cur, out);
                cur.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    let mut out = Vec::new();
    for v in 0..adj.len() {
        if !extend(adj, n + 1, limit, &mut vec![v], &mut out) {
            return None;
        }
    }
    Some(out)
}

/// Successors by the definition: drop the tail, append a neighbor of the
/// head that is not an inner vertex.
pub fn naive_steps(adj: &[Vec<bool>], path: &[usize]) -> Vec<Vec<usize>> {
    let head = *path.last().unwrap();
    let inner = &path[1..path.len() - 1];
    (0..adj.len())
        .filter(|&w| adj[head][w] && !inner.contains(&w))
        .map(|w| {
            let mut next = path[1..].to_vec();
            next.push(w);
            next
        })
        .collect()
}

/// `Some(verdict)` if there are at most `limit` paths: true iff at least one
/// path exists and every path reaches every other.
pub fn naive_transferable(adj: &[Vec<bool>], n: usize, limit: usize) -> Option<(bool, usize)> {
    let paths = naive_paths(adj, n, limit)?;
    if paths.is_empty() {
        return Some((false, 0));
    }
    let index: HashMap<&[usize], usize> = paths
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let succ: Vec<Vec<usize>> = paths
        .iter()
        .map(|p| {
            naive_steps(adj, p)
                .iter()
                .map(|q| index[q.as_slice()])
                .collect()
        })
        .collect();
    for start in 0..paths.len() {
        let mut seen = vec![false; paths.len()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut count = 1;
        while let Some(i) = queue.pop_front() {
            for &j in &succ[i] {
                if !seen[j] {
                    seen[j] = true;
                    count += 1;
                    queue.push_back(j);
                }
            }
        }
        if count != paths.len() {
            return Some((false, paths.len()));
        }
    }
    Some((true, paths.len()))
}

/// Whether the graph stays connected after deleting `removed`.
pub fn connected_without(adj: &[Vec<bool>], removed: &[usize]) -> bool {
    let n = adj.len();
    let Some(start) = (0..n).find(|v| !removed.contains(v)) else {
        return true;
    };
    let mut seen: Vec<bool> = (0..n).map(|v| removed.contains(&v)).collect();
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for w in 0..n {
            if adj[v][w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Vertex-disjoint `s`-`t` paths, by unit-capacity augmenting paths on the
/// split graph.
fn local_connectivity(adj: &[Vec<bool>], s: usize, t: usize) -> usize {
    let n = adj.len();
    // Node 2v is v_in, 2v + 1 is v_out.
    let size = 2 * n;
    let mut cap = vec![vec![0i32; size]; size];
    let mut near: Vec<Vec<usize>> = vec![Vec::new(); size];
    let mut link = |a: usize, b: usize, c: i32, cap: &mut Vec<Vec<i32>>| {
        cap[a][b] = c;
        near[a].push(b);
        near[b].push(a);
    };
    for (v, row) in adj.iter().enumerate() {
        let c = if v == s || v == t { n as i32 } else { 1 };
        link(2 * v, 2 * v + 1, c, &mut cap);
        for (w, &joined) in row.iter().enumerate() {
            if joined {
                link(2 * v + 1, 2 * w, 1, &mut cap);
            }
        }
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    loop {
        let mut parent = vec![usize::MAX; size];
        parent[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &v in &near[u] {
                if cap[u][v] > 0 && parent[v] == usize::MAX {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if parent[sink] == usize::MAX {
            return flow;
        }
        let mut v = sink;
        while v != source {
            let u = parent[v];
            cap[u][v] -= 1;
            cap[v][u] += 1;
            v = u;
        }
        flow += 1;
    }
}

/// 3-connectivity by Menger: at least 4 vertices, and every non-adjacent
/// pair joined by 3 internally disjoint paths. A complete graph qualifies
/// iff it has at least 4 vertices.
pub fn three_connected_by_flow(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    if n < 4 {
        return false;
    }
    for s in 0..n {
        for t in s + 1..n {
            if !adj[s][t] && local_connectivity(adj, s, t) < 3 {
                return false;
            }
        }
    }
    true
}
