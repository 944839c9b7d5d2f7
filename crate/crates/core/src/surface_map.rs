//! Signed rotation systems and the facial structure they induce.
//!
//! A [`RotationSystem`] stores, for every vertex, the cyclic order of the
//! darts (edge ends) leaving it, plus a sign per edge. An edge with sign `-1`
//! reverses the local orientation when crossed, which is how embeddings in
//! non-orientable surfaces are described. All-positive signatures give the
//! usual orientable rotation systems.
//!
//! [`MapTopology`] is derived once from a rotation system and holds the
//! facial walks, the Euler characteristic, orientability and all incidence
//! tables (with multiplicity) that the downstream checks consume.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::MapError;

/// One end of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub edge: usize,
    pub end: u8,
}

impl Dart {
    pub fn new(edge: usize, end: u8) -> Self {
        debug_assert!(end < 2);
        Dart { edge, end }
    }

    /// Dense index `2 * edge + end`; darts order by this index.
    pub fn index(self) -> usize {
        2 * self.edge + self.end as usize
    }

    pub fn from_index(index: usize) -> Self {
        Dart {
            edge: index / 2,
            end: (index % 2) as u8,
        }
    }

    /// The other end of the same edge.
    pub fn opposite(self) -> Self {
        Dart {
            edge: self.edge,
            end: 1 - self.end,
        }
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.edge, self.end)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }
}

/// A connected graph with a cyclic dart order at each vertex and an edge
/// signature.
///
/// Darts are assigned canonically on construction: scanning vertices in
/// order and each rotation from its first entry, the first occurrence of an
/// edge becomes end 0 and the second becomes end 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    labels: Vec<String>,
    rotations: Vec<Vec<Dart>>,
    signature: Vec<Sign>,
    dart_vertex: Vec<usize>,
    dart_position: Vec<usize>,
}

impl RotationSystem {
    /// Builds a rotation system from per-vertex cyclic lists of edge ids.
    ///
    /// Edge ids must be `0..signature.len()` and each must occur exactly
    /// twice overall. Vertices are labelled `0`, `1`, ...
    pub fn new(rotations: Vec<Vec<usize>>, signature: Vec<Sign>) -> Result<Self, MapError> {
        let labels = (0..rotations.len()).map(|v| v.to_string()).collect();
        Self::with_labels(labels, rotations, signature)
    }

    pub fn with_labels(
        labels: Vec<String>,
        rotations: Vec<Vec<usize>>,
        signature: Vec<Sign>,
    ) -> Result<Self, MapError> {
        if rotations.is_empty() {
            return Err(MapError::NoVertices);
        }
        if labels.len() != rotations.len() {
            return Err(MapError::LabelCount {
                labels: labels.len(),
                vertices: rotations.len(),
            });
        }
        let num_edges = signature.len();
        let mut seen = vec![0usize; num_edges];
        for (v, rot) in rotations.iter().enumerate() {
            if rot.is_empty() {
                return Err(MapError::EmptyRotation { vertex: v });
            }
            for &e in rot {
                if e >= num_edges {
                    return Err(MapError::SignatureLength {
                        expected: e + 1,
                        got: num_edges,
                    });
                }
                seen[e] += 1;
            }
        }
        for (edge, &count) in seen.iter().enumerate() {
            match count {
                2 => {}
                1 => return Err(MapError::MissingDart { edge }),
                _ => return Err(MapError::DartCount { edge, count }),
            }
        }

        let mut taken = vec![false; num_edges];
        let mut dart_vertex = vec![0; 2 * num_edges];
        let mut dart_position = vec![0; 2 * num_edges];
        let darts: Vec<Vec<Dart>> = rotations
            .iter()
            .enumerate()
            .map(|(v, rot)| {
                rot.iter()
                    .enumerate()
                    .map(|(pos, &e)| {
                        let dart = Dart::new(e, taken[e] as u8);
                        taken[e] = true;
                        dart_vertex[dart.index()] = v;
                        dart_position[dart.index()] = pos;
                        dart
                    })
                    .collect()
            })
            .collect();

        let rs = RotationSystem {
            labels,
            rotations: darts,
            signature,
            dart_vertex,
            dart_position,
        };
        rs.check_connected()?;
        Ok(rs)
    }

    fn check_connected(&self) -> Result<(), MapError> {
        let n = self.num_vertices();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &d in &self.rotations[v] {
                let w = self.vertex_of(d.opposite());
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        match seen.iter().position(|&s| !s) {
            Some(vertex) => Err(MapError::Disconnected { vertex }),
            None => Ok(()),
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.rotations.len()
    }

    pub fn num_edges(&self) -> usize {
        self.signature.len()
    }

    pub fn num_darts(&self) -> usize {
        2 * self.signature.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<Dart>] {
        &self.rotations
    }

    /// Rotations as plain edge-id lists, the form accepted by [`RotationSystem::new`].
    pub fn edge_rotations(&self) -> Vec<Vec<usize>> {
        self.rotations
            .iter()
            .map(|rot| rot.iter().map(|d| d.edge).collect())
            .collect()
    }

    pub fn signature(&self) -> &[Sign] {
        &self.signature
    }

    pub fn sign(&self, edge: usize) -> Sign {
        self.signature[edge]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    pub fn vertex_of(&self, dart: Dart) -> usize {
        self.dart_vertex[dart.index()]
    }

    pub fn position_of(&self, dart: Dart) -> usize {
        self.dart_position[dart.index()]
    }

    /// Next dart in the cyclic rotation at the dart's vertex.
    pub fn succ(&self, dart: Dart) -> Dart {
        let rot = &self.rotations[self.vertex_of(dart)];
        rot[(self.position_of(dart) + 1) % rot.len()]
    }

    pub fn pred(&self, dart: Dart) -> Dart {
        let rot = &self.rotations[self.vertex_of(dart)];
        let len = rot.len();
        rot[(self.position_of(dart) + len - 1) % len]
    }

    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        (
            self.vertex_of(Dart::new(edge, 0)),
            self.vertex_of(Dart::new(edge, 1)),
        )
    }

    pub fn is_loop(&self, edge: usize) -> bool {
        let (a, b) = self.endpoints(edge);
        a == b
    }

    /// Sorted, deduplicated neighbor lists of the underlying simple graph
    /// (loops dropped, parallel edges merged).
    pub fn simple_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_vertices()];
        for e in 0..self.num_edges() {
            let (a, b) = self.endpoints(e);
            if a != b {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    /// Reverses the rotation at `v` and flips the sign of every non-loop
    /// edge at `v`. The result describes the same embedding.
    pub fn reorient_vertex(&self, v: usize) -> Result<Self, MapError> {
        if v >= self.num_vertices() {
            return Err(MapError::UnknownVertex(v));
        }
        let mut rotations = self.edge_rotations();
        rotations[v].reverse();
        let mut signature = self.signature.clone();
        for d in &self.rotations[v] {
            if !self.is_loop(d.edge) {
                signature[d.edge] = signature[d.edge].flip();
            }
        }
        // Each non-loop edge was visited once above.
        Self::with_labels(self.labels.clone(), rotations, signature)
    }
}

/// The closed walk around one face, listed by the darts it leaves along.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacialWalk {
    pub darts: Vec<Dart>,
    pub vertices: Vec<usize>,
    /// `corners[k]` is the `(vertex, rotation position)` of the angle the
    /// walk turns through at `vertices[k]`. Position `p` is the angle between
    /// rotation entries `p` and `p + 1`.
    pub corners: Vec<(usize, usize)>,
}

impl FacialWalk {
    pub fn degree(&self) -> usize {
        self.darts.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeClass {
    Weak,
    SemiWeak,
    Normal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceClass {
    Minor,
    Six,
    Major,
}

impl FaceClass {
    pub fn of_degree(degree: usize) -> Self {
        match degree {
            0..=5 => FaceClass::Minor,
            6 => FaceClass::Six,
            _ => FaceClass::Major,
        }
    }
}

fn state_index(dart: Dart, sign: Sign) -> usize {
    2 * dart.index() + (!sign.is_positive()) as usize
}

/// Partitions every (dart, side) pair into facial walks.
///
/// Walk state is a dart to leave along plus the current local orientation.
/// Crossing an edge multiplies the orientation by its sign; on arrival the
/// walk turns to the rotation successor under positive orientation and to
/// the predecessor under negative orientation. Faces are emitted in order of
/// their smallest (dart, orientation) state, so a face always starts at its
/// smallest dart when that dart can be entered positively.
pub fn trace_faces(rs: &RotationSystem) -> Vec<FacialWalk> {
    let mut used = vec![false; 2 * rs.num_darts()];
    let mut faces = Vec::new();
    for idx in 0..rs.num_darts() {
        for start_sign in [Sign::Positive, Sign::Negative] {
            let start = Dart::from_index(idx);
            if used[state_index(start, start_sign)] {
                continue;
            }
            let mut darts = Vec::new();
            let mut vertices = Vec::new();
            let mut arrival_corners = Vec::new();
            let (mut dart, mut sign) = (start, start_sign);
            loop {
                let edge_sign = rs.sign(dart.edge);
                debug_assert!(!used[state_index(dart, sign)]);
                used[state_index(dart, sign)] = true;
                // The same side walked backwards.
                used[state_index(dart.opposite(), sign.times(edge_sign).flip())] = true;
                darts.push(dart);
                vertices.push(rs.vertex_of(dart));

                let arrived = dart.opposite();
                let arrived_sign = sign.times(edge_sign);
                let next = if arrived_sign.is_positive() {
                    rs.succ(arrived)
                } else {
                    rs.pred(arrived)
                };
                let corner = if arrived_sign.is_positive() {
                    rs.position_of(arrived)
                } else {
                    rs.position_of(next)
                };
                arrival_corners.push((rs.vertex_of(arrived), corner));
                dart = next;
                sign = arrived_sign;
                if dart == start && sign == start_sign {
                    break;
                }
            }
            // The arrival corner of step k is the turning corner of step k + 1.
            arrival_corners.rotate_right(1);
            faces.push(FacialWalk {
                darts,
                vertices,
                corners: arrival_corners,
            });
        }
    }
    faces
}

/// Facial structure and incidence tables of an embedded graph.
#[derive(Clone, Debug)]
pub struct MapTopology {
    rs: RotationSystem,
    faces: Vec<FacialWalk>,
    euler_characteristic: i64,
    orientable: bool,
    face_degrees: Vec<usize>,
    corner_faces: Vec<Vec<usize>>,
    edge_faces: Vec<[usize; 2]>,
}

/// Builds the topology of a rotation system.
pub fn topology(rs: &RotationSystem) -> MapTopology {
    MapTopology::new(rs.clone())
}

impl MapTopology {
    pub fn new(rs: RotationSystem) -> Self {
        let faces = trace_faces(&rs);
        let face_degrees: Vec<usize> = faces.iter().map(FacialWalk::degree).collect();

        let mut corner_faces: Vec<Vec<usize>> = (0..rs.num_vertices())
            .map(|v| vec![usize::MAX; rs.degree(v)])
            .collect();
        let mut edge_sides: Vec<Vec<usize>> = vec![Vec::with_capacity(2); rs.num_edges()];
        for (f, walk) in faces.iter().enumerate() {
            for &(v, pos) in &walk.corners {
                debug_assert_eq!(corner_faces[v][pos], usize::MAX);
                corner_faces[v][pos] = f;
            }
            for d in &walk.darts {
                edge_sides[d.edge].push(f);
            }
        }
        let edge_faces = edge_sides
            .into_iter()
            .map(|sides| {
                debug_assert_eq!(sides.len(), 2);
                [sides[0], sides[1]]
            })
            .collect();

        let euler_characteristic =
            rs.num_vertices() as i64 - rs.num_edges() as i64 + faces.len() as i64;
        let orientable = is_orientable(&rs);
        MapTopology {
            rs,
            faces,
            euler_characteristic,
            orientable,
            face_degrees,
            corner_faces,
            edge_faces,
        }
    }

    pub fn rotation_system(&self) -> &RotationSystem {
        &self.rs
    }

    pub fn faces(&self) -> &[FacialWalk] {
        &self.faces
    }

    pub fn face(&self, f: usize) -> Result<&FacialWalk, MapError> {
        self.faces.get(f).ok_or(MapError::UnknownFace(f))
    }

    pub fn num_vertices(&self) -> usize {
        self.rs.num_vertices()
    }

    pub fn num_edges(&self) -> usize {
        self.rs.num_edges()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// `V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.euler_characteristic
    }

    pub fn is_orientable(&self) -> bool {
        self.orientable
    }

    pub fn vertex_degree(&self, v: usize) -> usize {
        self.rs.degree(v)
    }

    pub fn vertex_degrees(&self) -> Vec<usize> {
        (0..self.num_vertices())
            .map(|v| self.rs.degree(v))
            .collect()
    }

    pub fn face_degree(&self, f: usize) -> usize {
        self.face_degrees[f]
    }

    pub fn face_degrees(&self) -> &[usize] {
        &self.face_degrees
    }

    /// Face at each corner of `v`, in rotation order. A face meeting `v`
    /// several times appears once per corner.
    pub fn corner_faces(&self, v: usize) -> &[usize] {
        &self.corner_faces[v]
    }

    /// Vertex-face incidences of `v` with multiplicity.
    pub fn vertex_face_multiplicity(&self, v: usize) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for &f in &self.corner_faces[v] {
            *counts.entry(f).or_insert(0) += 1;
        }
        counts
    }

    /// Faces on the two sides of an edge (equal if the edge borders one face twice).
    pub fn edge_faces(&self, e: usize) -> [usize; 2] {
        self.edge_faces[e]
    }

    pub fn edge_endpoints(&self, e: usize) -> (usize, usize) {
        self.rs.endpoints(e)
    }

    /// Ascending face degrees around `v`, one entry per corner.
    pub fn vertex_type(&self, v: usize) -> Result<Vec<usize>, MapError> {
        if v >= self.num_vertices() {
            return Err(MapError::UnknownVertex(v));
        }
        let mut degrees: Vec<usize> = self.corner_faces[v]
            .iter()
            .map(|&f| self.face_degrees[f])
            .collect();
        degrees.sort_unstable();
        Ok(degrees)
    }

    pub fn classify_edge(&self, e: usize) -> Result<EdgeClass, MapError> {
        if e >= self.num_edges() {
            return Err(MapError::UnknownEdge(e));
        }
        let (a, b) = self.rs.endpoints(e);
        let cubic = (self.rs.degree(a) == 3) as u8 + (self.rs.degree(b) == 3) as u8;
        Ok(match cubic {
            2 => EdgeClass::Weak,
            1 => EdgeClass::SemiWeak,
            _ => EdgeClass::Normal,
        })
    }

    pub fn face_class(&self, f: usize) -> Result<FaceClass, MapError> {
        self.face_degrees
            .get(f)
            .map(|&d| FaceClass::of_degree(d))
            .ok_or(MapError::UnknownFace(f))
    }
}

/// Spanning-tree sign normalization: force tree edges to `+`, then the
/// embedding is orientable iff no edge is left negative.
fn is_orientable(rs: &RotationSystem) -> bool {
    let n = rs.num_vertices();
    let mut flip: Vec<Option<Sign>> = vec![None; n];
    flip[0] = Some(Sign::Positive);
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        let fv = flip[v].unwrap();
        for &d in rs.rotation(v) {
            let w = rs.vertex_of(d.opposite());
            if flip[w].is_none() {
                flip[w] = Some(fv.times(rs.sign(d.edge)));
                queue.push_back(w);
            }
        }
    }
    (0..rs.num_edges()).all(|e| {
        let (a, b) = rs.endpoints(e);
        flip[a]
            .unwrap()
            .times(flip[b].unwrap())
            .times(rs.sign(e))
            .is_positive()
    })
}
