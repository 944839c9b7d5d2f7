//! Path transferability.
//!
//! A directed `n`-path takes a step by dropping its tail and appending a
//! neighbor of its head that is not an inner vertex (the old tail is
//! allowed). The graph is `n`-transferable when it has at least one
//! `n`-path and every `n`-path can reach every other by steps, i.e. the
//! transfer digraph on all `n`-paths is strongly connected.
//!
//! States are stored as fixed-width rows of a flat `u32` array in
//! lexicographic order, which is exactly the order depth-first enumeration
//! produces. Successor lookup is a binary search over that array, so state
//! indices are canonical and independent of how the enumeration is run.

use std::fmt::Write as _;

use crate::error::TransferError;
pub use crate::graph::Graph;

/// Default cap on the number of states materialized for one `n`.
pub const DEFAULT_STATE_BUDGET: usize = 5_000_000;

/// Default cap on search-tree nodes for the exhaustive path searches.
pub const DEFAULT_SEARCH_BUDGET: u64 = 200_000_000;

/// A directed simple path `v0 ... vn`; `v0` is the tail and `vn` the head.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathState {
    vertices: Vec<u32>,
}

impl PathState {
    pub fn new(graph: &Graph, vertices: Vec<usize>) -> Result<Self, TransferError> {
        if vertices.len() < 2 {
            return Err(TransferError::ZeroLength);
        }
        for (i, &v) in vertices.iter().enumerate() {
            if v >= graph.num_vertices() {
                return Err(TransferError::UnknownVertex(v));
            }
            if vertices[..i].contains(&v) {
                return Err(TransferError::InvalidPath(format!("vertex {v} repeats")));
            }
        }
        for w in vertices.windows(2) {
            if !graph.is_adjacent(w[0], w[1]) {
                return Err(TransferError::InvalidPath(format!(
                    "{} and {} are not adjacent",
                    w[0], w[1]
                )));
            }
        }
        Ok(PathState {
            vertices: vertices.into_iter().map(|v| v as u32).collect(),
        })
    }

    fn from_raw(vertices: &[u32]) -> Self {
        PathState {
            vertices: vertices.to_vec(),
        }
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.vertices.iter().map(|&v| v as usize).collect()
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn tail(&self) -> usize {
        self.vertices[0] as usize
    }

    pub fn head(&self) -> usize {
        *self.vertices.last().unwrap() as usize
    }

    pub fn inner(&self) -> &[u32] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        PathState { vertices }
    }

    /// Comma-joined vertex ids, optionally through a label table.
    pub fn to_string_with(&self, labels: Option<&[String]>) -> String {
        join_path(&self.vertices, labels)
    }
}

fn join_path(vertices: &[u32], labels: Option<&[String]>) -> String {
    let mut out = String::new();
    for (i, &v) in vertices.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        match labels {
            Some(l) => out.push_str(&l[v as usize]),
            None => write!(out, "{v}").unwrap(),
        }
    }
    out
}

/// Calls `f` with each legal step target from `path`, ascending.
#[inline]
fn for_each_target(graph: &Graph, path: &[u32], mut f: impl FnMut(u32)) {
    let head = *path.last().unwrap();
    let inner = &path[1..path.len() - 1];
    for &v in graph.neighbors(head as usize) {
        if !inner.contains(&v) {
            f(v);
        }
    }
}

/// All paths reachable from `path` in one step, ordered by the new head.
pub fn steps(graph: &Graph, path: &PathState) -> Vec<PathState> {
    let mut out = Vec::new();
    for_each_target(graph, &path.vertices, |v| {
        let mut next = path.vertices[1..].to_vec();
        next.push(v);
        out.push(PathState { vertices: next });
    });
    out
}

/// Every directed `n`-path, lexicographically sorted.
#[derive(Clone, Debug)]
pub struct StateSet {
    width: usize,
    flat: Vec<u32>,
}

impl StateSet {
    /// Path length `n` (edges).
    pub fn path_length(&self) -> usize {
        self.width - 1
    }

    pub fn len(&self) -> usize {
        self.flat.len() / self.width
    }

    pub fn is_empty(&self) -> bool {
        self.flat.is_empty()
    }

    pub fn get(&self, i: usize) -> &[u32] {
        &self.flat[i * self.width..(i + 1) * self.width]
    }

    pub fn state(&self, i: usize) -> PathState {
        PathState::from_raw(self.get(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u32]> {
        self.flat.chunks_exact(self.width)
    }

    pub fn index_of(&self, path: &[u32]) -> Option<usize> {
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(path) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }
}

/// Enumerates all directed simple paths with `n` edges.
///
/// Fails with [`TransferError::Budget`] once more than `budget` states
/// have been found.
pub fn enumerate_paths(graph: &Graph, n: usize, budget: usize) -> Result<StateSet, TransferError> {
    if n == 0 {
        return Err(TransferError::ZeroLength);
    }
    let width = n + 1;
    let mut flat = Vec::new();
    let mut path = Vec::with_capacity(width);
    let mut on_path = vec![false; graph.num_vertices()];
    let mut count = 0usize;

    fn extend(
        graph: &Graph,
        width: usize,
        path: &mut Vec<u32>,
        on_path: &mut [bool],
        flat: &mut Vec<u32>,
        count: &mut usize,
        budget: usize,
    ) -> bool {
        if path.len() == width {
            *count += 1;
            if *count > budget {
                return false;
            }
            flat.extend_from_slice(path);
            return true;
        }
        let head = *path.last().unwrap() as usize;
        for &w in graph.neighbors(head) {
            if on_path[w as usize] {
                continue;
            }
            on_path[w as usize] = true;
            path.push(w);
            let ok = extend(graph, width, path, on_path, flat, count, budget);
            path.pop();
            on_path[w as usize] = false;
            if !ok {
                return false;
            }
        }
        true
    }

    for start in 0..graph.num_vertices() {
        path.push(start as u32);
        on_path[start] = true;
        let ok = extend(
            graph,
            width,
            &mut path,
            &mut on_path,
            &mut flat,
            &mut count,
            budget,
        );
        path.pop();
        on_path[start] = false;
        if !ok {
            return Err(TransferError::Budget { n, budget, count });
        }
    }
    Ok(StateSet { width, flat })
}

/// Strongly connected components of the transfer digraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SccSummary {
    pub count: usize,
    /// Component index per state; components are numbered in the order
    /// Tarjan's algorithm completes them (sinks of the condensation first).
    pub component_of: Vec<u32>,
    pub largest: usize,
    /// Components with no arc leaving them.
    pub sinks: usize,
    /// Components with no arc entering them.
    pub sources: usize,
}

/// The transfer digraph on all `n`-paths, in compressed adjacency form.
#[derive(Clone, Debug)]
pub struct TransferDigraph {
    pub states: StateSet,
    offsets: Vec<usize>,
    targets: Vec<u32>,
    pub scc: SccSummary,
}

impl TransferDigraph {
    pub fn build(graph: &Graph, n: usize, budget: usize) -> Result<Self, TransferError> {
        let states = enumerate_paths(graph, n, budget)?;
        let mut offsets = Vec::with_capacity(states.len() + 1);
        let mut targets = Vec::with_capacity(states.len() * 2);
        let mut buf = vec![0u32; n + 1];
        offsets.push(0);
        for path in states.iter() {
            buf[..n].copy_from_slice(&path[1..]);
            for_each_target(graph, path, |v| {
                buf[n] = v;
                let j = states
                    .index_of(&buf)
                    .expect("successor of an n-path is an n-path");
                targets.push(j as u32);
            });
            offsets.push(targets.len());
        }
        let scc = strongly_connected(&offsets, &targets);
        Ok(TransferDigraph {
            states,
            offsets,
            targets,
            scc,
        })
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn num_arcs(&self) -> usize {
        self.targets.len()
    }

    pub fn successors(&self, i: usize) -> &[u32] {
        &self.targets[self.offsets[i]..self.offsets[i + 1]]
    }

    pub fn is_strongly_connected(&self) -> bool {
        !self.states.is_empty() && self.scc.count == 1
    }

    /// Graphviz `digraph` with states written as comma-joined vertex ids.
    pub fn to_dot(&self, labels: Option<&[String]>) -> String {
        let mut out = format!("digraph transfer_n{} {{\n", self.states.path_length());
        for i in 0..self.num_states() {
            let from = join_path(self.states.get(i), labels);
            let succ = self.successors(i);
            if succ.is_empty() {
                writeln!(out, "  \"{from}\";").unwrap();
            }
            for &j in succ {
                let to = join_path(self.states.get(j as usize), labels);
                writeln!(out, "  \"{from}\" -> \"{to}\";").unwrap();
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Iterative Tarjan over a CSR digraph.
fn strongly_connected(offsets: &[usize], targets: &[u32]) -> SccSummary {
    const UNSEEN: u32 = u32::MAX;
    let n = offsets.len() - 1;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<u32> = Vec::new();
    let mut component_of = vec![UNSEEN; n];
    let mut sizes: Vec<usize> = Vec::new();
    // (node, next arc offset)
    let mut call: Vec<(u32, usize)> = Vec::new();
    let mut counter = 0u32;

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root as u32, offsets[root]));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root as u32);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut arc)) = call.last_mut() {
            let v = v as usize;
            if *arc < offsets[v + 1] {
                let w = targets[*arc] as usize;
                *arc += 1;
                if index[w] == UNSEEN {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w as u32);
                    on_stack[w] = true;
                    call.push((w as u32, offsets[w]));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                let parent = parent as usize;
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let id = sizes.len() as u32;
                let mut size = 0;
                loop {
                    let w = stack.pop().unwrap() as usize;
                    on_stack[w] = false;
                    component_of[w] = id;
                    size += 1;
                    if w == v {
                        break;
                    }
                }
                sizes.push(size);
            }
        }
    }

    let count = sizes.len();
    let mut has_out = vec![false; count];
    let mut has_in = vec![false; count];
    for v in 0..n {
        let cv = component_of[v] as usize;
        for &w in &targets[offsets[v]..offsets[v + 1]] {
            let cw = component_of[w as usize] as usize;
            if cv != cw {
                has_out[cv] = true;
                has_in[cw] = true;
            }
        }
    }
    SccSummary {
        count,
        component_of,
        largest: sizes.iter().copied().max().unwrap_or(0),
        sinks: has_out.iter().filter(|&&b| !b).count(),
        sources: has_in.iter().filter(|&&b| !b).count(),
    }
}

/// Outcome for a single path length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NVerdict {
    Transferable {
        states: usize,
    },
    NoPaths,
    Disconnected {
        states: usize,
        components: usize,
        sinks: usize,
        sources: usize,
    },
    /// Enumeration hit the state budget; no verdict.
    BudgetExceeded {
        budget: usize,
    },
}

impl NVerdict {
    pub fn is_transferable(&self) -> bool {
        matches!(self, NVerdict::Transferable { .. })
    }

    pub fn states(&self) -> Option<usize> {
        match self {
            NVerdict::Transferable { states } | NVerdict::Disconnected { states, .. } => {
                Some(*states)
            }
            NVerdict::NoPaths => Some(0),
            NVerdict::BudgetExceeded { .. } => None,
        }
    }
}

fn verdict_of(digraph: &TransferDigraph) -> NVerdict {
    let states = digraph.num_states();
    if states == 0 {
        NVerdict::NoPaths
    } else if digraph.is_strongly_connected() {
        NVerdict::Transferable { states }
    } else {
        NVerdict::Disconnected {
            states,
            components: digraph.scc.count,
            sinks: digraph.scc.sinks,
            sources: digraph.scc.sources,
        }
    }
}

/// Decides `n`-transferability. Budget overruns are returned as errors.
pub fn is_n_transferable(
    graph: &Graph,
    n: usize,
    budget: usize,
) -> Result<NVerdict, TransferError> {
    Ok(verdict_of(&TransferDigraph::build(graph, n, budget)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferabilityResult {
    /// Largest evaluated `n` that is transferable, 0 if none.
    pub value: usize,
    /// Verdict for `n = 1, 2, ...` in order.
    pub per_n: Vec<(usize, NVerdict)>,
    /// Last `n` evaluated.
    pub search_bound: usize,
    /// True when the state budget stopped the sweep before `max_n`.
    pub truncated: bool,
}

impl TransferabilityResult {
    pub fn verdict(&self, n: usize) -> Option<&NVerdict> {
        self.per_n.iter().find(|(m, _)| *m == n).map(|(_, v)| v)
    }
}

/// Sweeps `n = 1..=max_n` and reports the largest transferable `n`.
///
/// No monotonicity in `n` is assumed; every length is decided on its own.
/// If the budget is exceeded at some `n`, that `n` is recorded as
/// [`NVerdict::BudgetExceeded`] and the sweep stops there.
pub fn transferability(graph: &Graph, max_n: usize, budget: usize) -> TransferabilityResult {
    let mut per_n = Vec::new();
    let mut truncated = false;
    for n in 1..=max_n {
        match TransferDigraph::build(graph, n, budget) {
            Ok(digraph) => per_n.push((n, verdict_of(&digraph))),
            Err(_) => {
                per_n.push((n, NVerdict::BudgetExceeded { budget }));
                truncated = true;
                break;
            }
        }
    }
    let value = per_n
        .iter()
        .filter(|(_, v)| v.is_transferable())
        .map(|(n, _)| *n)
        .max()
        .unwrap_or(0);
    TransferabilityResult {
        value,
        search_bound: per_n.last().map(|(n, _)| *n).unwrap_or(0),
        per_n,
        truncated,
    }
}

/// An `n`-path with no legal step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StuckWitness {
    pub path: PathState,
    pub anchor: Option<usize>,
}

/// Looks for an `n`-path whose head has all its neighbors inside the path.
///
/// Candidate heads are tried by increasing distance from `anchor` (or in
/// vertex order without one). For each head the path is grown backwards
/// from it and pruned as soon as the head's missing neighbors can no longer
/// fit into the remaining inner positions.
pub fn find_stuck(
    graph: &Graph,
    n: usize,
    anchor: Option<usize>,
    search_budget: u64,
) -> Result<Option<StuckWitness>, TransferError> {
    if n == 0 {
        return Err(TransferError::ZeroLength);
    }
    let nv = graph.num_vertices();
    let mut heads: Vec<usize> = (0..nv).collect();
    if let Some(a) = anchor {
        if a >= nv {
            return Err(TransferError::UnknownVertex(a));
        }
        let dist = graph.distances_from(a);
        heads.sort_by_key(|&v| (dist[v], v));
    }

    struct Search<'g> {
        graph: &'g Graph,
        n: usize,
        head_neighbors: &'g [u32],
        seq: Vec<u32>,
        on_path: Vec<bool>,
        nodes: u64,
        budget: u64,
    }

    impl Search<'_> {
        // seq[0] is the head, seq[k] the vertex k steps back towards the tail.
        fn grow(&mut self) -> Result<bool, TransferError> {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(TransferError::SearchBudget {
                    budget: self.budget,
                });
            }
            let filled = self.seq.len() - 1;
            let missing = self
                .head_neighbors
                .iter()
                .filter(|&&w| !self.on_path[w as usize])
                .count();
            // Inner positions are seq[1..n]; seq[n] is the tail.
            let inner_left = (self.n - 1).saturating_sub(filled);
            if missing > inner_left {
                return Ok(false);
            }
            if filled == self.n {
                // The tail must not be a neighbor of the head.
                let tail = *self.seq.last().unwrap();
                return Ok(missing == 0 && !self.head_neighbors.contains(&tail));
            }
            let last = *self.seq.last().unwrap() as usize;
            let graph = self.graph;
            for &w in graph.neighbors(last) {
                if self.on_path[w as usize] {
                    continue;
                }
                self.on_path[w as usize] = true;
                self.seq.push(w);
                if self.grow()? {
                    return Ok(true);
                }
                self.seq.pop();
                self.on_path[w as usize] = false;
            }
            Ok(false)
        }
    }

    let mut nodes = 0u64;
    for head in heads {
        let mut search = Search {
            graph,
            n,
            head_neighbors: graph.neighbors(head),
            seq: vec![head as u32],
            on_path: vec![false; nv],
            nodes,
            budget: search_budget,
        };
        search.on_path[head] = true;
        let found = search.grow()?;
        nodes = search.nodes;
        if found {
            let mut vertices = search.seq;
            vertices.reverse();
            return Ok(Some(StuckWitness {
                path: PathState { vertices },
                anchor,
            }));
        }
    }
    Ok(None)
}

/// Exact length (in edges) of a longest simple path, by exhaustive search.
///
/// Branches are cut when the vertices still reachable from the head cannot
/// beat the best length found. Stops early on a Hamiltonian path.
pub fn longest_path_bound(graph: &Graph, search_budget: u64) -> Result<usize, TransferError> {
    let nv = graph.num_vertices();
    if nv == 0 {
        return Ok(0);
    }
    struct Search<'g> {
        graph: &'g Graph,
        on_path: Vec<bool>,
        mark: Vec<u32>,
        stamp: u32,
        queue: Vec<u32>,
        best: usize,
        nodes: u64,
        budget: u64,
    }

    impl Search<'_> {
        fn reachable_unvisited(&mut self, from: usize) -> usize {
            self.stamp += 1;
            self.queue.clear();
            self.queue.push(from as u32);
            self.mark[from] = self.stamp;
            let mut count = 0;
            let mut i = 0;
            while i < self.queue.len() {
                let v = self.queue[i] as usize;
                i += 1;
                for &w in self.graph.neighbors(v) {
                    let w = w as usize;
                    if !self.on_path[w] && self.mark[w] != self.stamp {
                        self.mark[w] = self.stamp;
                        count += 1;
                        self.queue.push(w as u32);
                    }
                }
            }
            count
        }

        fn dfs(&mut self, head: usize, len: usize) -> Result<(), TransferError> {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(TransferError::SearchBudget {
                    budget: self.budget,
                });
            }
            self.best = self.best.max(len);
            if self.best == self.on_path.len() - 1 {
                return Ok(());
            }
            if len + self.reachable_unvisited(head) <= self.best {
                return Ok(());
            }
            let graph = self.graph;
            for &w in graph.neighbors(head) {
                let w = w as usize;
                if self.on_path[w] {
                    continue;
                }
                self.on_path[w] = true;
                self.dfs(w, len + 1)?;
                self.on_path[w] = false;
                if self.best == self.on_path.len() - 1 {
                    return Ok(());
                }
            }
            Ok(())
        }
    }

    let mut search = Search {
        graph,
        on_path: vec![false; nv],
        mark: vec![0; nv],
        stamp: 0,
        queue: Vec::with_capacity(nv),
        best: 0,
        nodes: 0,
        budget: search_budget,
    };
    for start in 0..nv {
        search.on_path[start] = true;
        search.dfs(start, 0)?;
        search.on_path[start] = false;
        if search.best == nv - 1 {
            break;
        }
    }
    Ok(search.best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(g: &Graph, v: &[usize]) -> PathState {
        PathState::new(g, v.to_vec()).unwrap()
    }

    #[test]
    fn k4_three_path_has_one_successor() {
        let g = Graph::complete(4);
        let next = steps(&g, &path(&g, &[0, 1, 2, 3]));
        assert_eq!(next, vec![path(&g, &[1, 2, 3, 0])]);
    }

    #[test]
    fn one_paths_may_reverse() {
        let g = Graph::cycle(5);
        let next = steps(&g, &path(&g, &[1, 2]));
        assert_eq!(next, vec![path(&g, &[2, 1]), path(&g, &[2, 3])]);
    }

    #[test]
    fn blocked_head_has_no_steps() {
        // Head 3 of 0-1-2-3 in K4 minus edge 0-3 only sees inner vertices.
        let g = Graph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert!(steps(&g, &path(&g, &[0, 1, 2, 3])).is_empty());
    }

    #[test]
    fn invalid_paths_are_rejected() {
        let g = Graph::cycle(5);
        assert!(PathState::new(&g, vec![0, 2]).is_err());
        assert!(PathState::new(&g, vec![0, 1, 0]).is_err());
        assert!(PathState::new(&g, vec![0]).is_err());
        assert!(PathState::new(&g, vec![0, 9]).is_err());
    }

    #[test]
    fn state_counts() {
        let k4 = Graph::complete(4);
        assert_eq!(enumerate_paths(&k4, 3, 100).unwrap().len(), 24);
        assert_eq!(enumerate_paths(&k4, 4, 100).unwrap().len(), 0);
        assert_eq!(enumerate_paths(&Graph::cycle(5), 1, 100).unwrap().len(), 10);
        assert_eq!(
            enumerate_paths(&k4, 3, 10).unwrap_err(),
            TransferError::Budget {
                n: 3,
                budget: 10,
                count: 11
            }
        );
        assert_eq!(
            enumerate_paths(&k4, 0, 10).unwrap_err(),
            TransferError::ZeroLength
        );
    }

    #[test]
    fn states_are_sorted_and_searchable() {
        let set = enumerate_paths(&Graph::complete(5), 3, 1000).unwrap();
        let rows: Vec<&[u32]> = set.iter().collect();
        assert!(rows.windows(2).all(|w| w[0] < w[1]));
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(set.index_of(row), Some(i));
        }
        assert_eq!(set.index_of(&[0, 0, 0, 0]), None);
    }

    #[test]
    fn k4_rotations_split_into_six_cycles() {
        let g = Graph::complete(4);
        let d = TransferDigraph::build(&g, 3, 1000).unwrap();
        assert_eq!(d.num_states(), 24);
        assert_eq!(d.scc.count, 6);
        assert_eq!(d.scc.largest, 4);
        assert!(!is_n_transferable(&g, 3, 1000).unwrap().is_transferable());
    }

    #[test]
    fn k4_transferability_is_two() {
        let r = transferability(&Graph::complete(4), 4, 1000);
        assert_eq!(r.value, 2);
        assert_eq!(r.verdict(4), Some(&NVerdict::NoPaths));
        assert!(!r.truncated);
    }

    #[test]
    fn cycle_is_only_one_transferable() {
        let r = transferability(&Graph::cycle(5), 4, 1000);
        assert_eq!(r.value, 1);
        for n in 2..=4 {
            assert!(!r.verdict(n).unwrap().is_transferable());
        }
    }

    #[test]
    fn budget_truncates_the_sweep() {
        let r = transferability(&Graph::complete(5), 4, 50);
        assert!(r.truncated);
        assert_eq!(r.search_bound, 2);
        assert_eq!(r.verdict(2), Some(&NVerdict::BudgetExceeded { budget: 50 }));
    }

    #[test]
    fn stuck_paths() {
        let k4 = Graph::complete(4);
        assert_eq!(find_stuck(&k4, 3, None, 1000).unwrap(), None);
        assert_eq!(
            find_stuck(&Graph::complete(6), 2, None, 10_000).unwrap(),
            None
        );
        let g = Graph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        let w = find_stuck(&g, 3, Some(3), 1000).unwrap().unwrap();
        assert!(steps(&g, &w.path).is_empty());
        assert_eq!(w.path.head(), 3);
        assert_eq!(w.anchor, Some(3));
    }

    #[test]
    fn longest_paths() {
        assert_eq!(longest_path_bound(&Graph::complete(4), 1000).unwrap(), 3);
        assert_eq!(longest_path_bound(&Graph::cycle(5), 1000).unwrap(), 4);
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]);
        assert_eq!(longest_path_bound(&star, 1000).unwrap(), 2);
    }

    #[test]
    fn dot_export_lists_every_arc() {
        let g = Graph::cycle(3);
        let d = TransferDigraph::build(&g, 1, 100).unwrap();
        let dot = d.to_dot(None);
        assert!(dot.starts_with("digraph transfer_n1 {"));
        assert_eq!(dot.matches("->").count(), d.num_arcs());
        assert!(dot.contains("\"0,1\" -> \"1,0\";"));
    }
}
