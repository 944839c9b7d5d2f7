//! Deterministic constructors for the standard test maps and truncation.
//!
//! Lattice maps label vertices by `(row, column, parity)` flattened
//! row-major, so vertex `v` of `hex_torus(p, q)` is
//! `((row * q) + column) * 2 + parity`.

use std::collections::BTreeMap;

use crate::error::MapError;
use crate::surface_map::{RotationSystem, Sign};

/// Builds a simple-graph rotation system from neighbor rotations.
///
/// Edge ids are assigned in order of first appearance when scanning
/// vertices ascending and each rotation in order. `sign(u, v)` is queried
/// once per edge with `u < v`.
fn from_neighbor_rotations(
    rotations: &[Vec<usize>],
    sign: impl Fn(usize, usize) -> Sign,
) -> Result<RotationSystem, MapError> {
    let mut ids: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut signature = Vec::new();
    let mut edge_rotations = Vec::with_capacity(rotations.len());
    for (v, rot) in rotations.iter().enumerate() {
        let mut edges = Vec::with_capacity(rot.len());
        for &w in rot {
            let key = (v.min(w), v.max(w));
            let next = ids.len();
            let id = *ids.entry(key).or_insert_with(|| {
                signature.push(sign(key.0, key.1));
                next
            });
            edges.push(id);
        }
        edge_rotations.push(edges);
    }
    RotationSystem::new(edge_rotations, signature)
}

fn check_params(p: usize, q: usize) -> Result<(), MapError> {
    if p < 3 || q < 3 {
        return Err(MapError::Parameters { p, q });
    }
    Ok(())
}

/// The tetrahedron with its planar rotation.
pub fn tetrahedron() -> RotationSystem {
    from_neighbor_rotations(
        &[vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]],
        |_, _| Sign::Positive,
    )
    .expect("tetrahedron is well formed")
}

/// Hexagonal map on the torus with `p * q` hexagons.
///
/// Vertices are the two sublattices `A(i, j)` (parity 0) and `B(i, j)`
/// (parity 1) of the honeycomb, indices mod `(p, q)`. `B(i, j)` is joined to
/// `A(i, j)`, `A(i + 1, j)` and `A(i, j + 1)`.
pub fn hex_torus(p: usize, q: usize) -> Result<RotationSystem, MapError> {
    check_params(p, q)?;
    let a = |i: usize, j: usize| ((i % p) * q + (j % q)) * 2;
    let b = |i: usize, j: usize| a(i, j) + 1;
    let mut rotations = vec![Vec::new(); 2 * p * q];
    for i in 0..p {
        for j in 0..q {
            // Counter-clockwise in the plane drawing.
            rotations[a(i, j)] = vec![b(i, j), b(i + p - 1, j), b(i, j + q - 1)];
            rotations[b(i, j)] = vec![a(i + 1, j), a(i, j + 1), a(i, j)];
        }
    }
    from_neighbor_rotations(&rotations, |_, _| Sign::Positive)
}

/// Triangulated torus grid: `p * q` vertices of degree 6.
pub fn tri_torus(p: usize, q: usize) -> Result<RotationSystem, MapError> {
    check_params(p, q)?;
    let at = |i: usize, j: usize| (i % p) * q + (j % q);
    let mut rotations = vec![Vec::new(); p * q];
    for i in 0..p {
        for j in 0..q {
            let (ip, im, jp, jm) = (i + 1, i + p - 1, j + 1, j + q - 1);
            rotations[at(i, j)] = vec![
                at(ip, j),
                at(i, jp),
                at(im, jp),
                at(im, j),
                at(i, jm),
                at(ip, jm),
            ];
        }
    }
    from_neighbor_rotations(&rotations, |_, _| Sign::Positive)
}

/// `K7` on the torus: vertex `i` rotates `i+1, i+3, i+2, i+6, i+4, i+5` (mod 7).
pub fn k7_torus() -> RotationSystem {
    let rotations: Vec<Vec<usize>> = (0..7)
        .map(|i| [1, 3, 2, 6, 4, 5].iter().map(|k| (i + k) % 7).collect())
        .collect();
    from_neighbor_rotations(&rotations, |_, _| Sign::Positive).expect("K7 is well formed")
}

/// Hexagonal map on the Klein bottle.
///
/// Built as a brick wall with `q` rows and `2p` columns: every vertex has
/// its two horizontal neighbors and one vertical neighbor (up when
/// `row + column` is even). Columns wrap normally. The top row is glued to
/// the bottom row through a reflection of the columns, and the edges across
/// that seam carry sign `-1`.
pub fn hex_klein(p: usize, q: usize) -> Result<RotationSystem, MapError> {
    check_params(p, q)?;
    let (rows, cols) = (q, 2 * p);
    // The reflection must preserve the brick parity pattern across the seam.
    let reflect = |c: usize| {
        if rows % 2 == 0 {
            (cols - c) % cols
        } else {
            cols - 1 - c
        }
    };
    let at = |r: usize, c: usize| r * cols + c;
    let mut rotations = vec![Vec::new(); rows * cols];
    let mut seam = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let east = at(r, (c + 1) % cols);
            let west = at(r, (c + cols - 1) % cols);
            rotations[at(r, c)] = if (r + c) % 2 == 0 {
                let north = if r + 1 == rows {
                    let w = at(0, reflect(c));
                    seam.push((at(r, c).min(w), at(r, c).max(w)));
                    w
                } else {
                    at(r + 1, c)
                };
                vec![east, north, west]
            } else {
                let south = if r == 0 {
                    at(rows - 1, reflect(c))
                } else {
                    at(r - 1, c)
                };
                vec![east, west, south]
            };
        }
    }
    from_neighbor_rotations(&rotations, |u, v| {
        if seam.contains(&(u, v)) {
            Sign::Negative
        } else {
            Sign::Positive
        }
    })
}

/// Truncation: every vertex of degree `d` becomes a `d`-cycle of new
/// vertices, one per dart.
///
/// New vertex numbering follows the darts in rotation order (vertex 0's
/// darts first). Original edges keep their ids and signs; polygon edges are
/// positive and numbered after them. The new vertex on dart `d_i` rotates
/// `(original edge, polygon edge to d_{i+1}, polygon edge to d_{i-1})`.
pub fn truncate(rs: &RotationSystem) -> RotationSystem {
    let mut corner = vec![0usize; rs.num_darts()];
    let mut next_vertex = 0;
    for v in 0..rs.num_vertices() {
        for d in rs.rotation(v) {
            corner[d.index()] = next_vertex;
            next_vertex += 1;
        }
    }
    let mut signature: Vec<Sign> = rs.signature().to_vec();
    let mut rotations = vec![Vec::with_capacity(3); next_vertex];
    for v in 0..rs.num_vertices() {
        let rot = rs.rotation(v);
        let len = rot.len();
        let first_polygon_edge = signature.len();
        signature.extend(std::iter::repeat_n(Sign::Positive, len));
        for (i, d) in rot.iter().enumerate() {
            // Polygon edge i joins d_i and d_{i+1}.
            let forward = first_polygon_edge + i;
            let backward = first_polygon_edge + (i + len - 1) % len;
            rotations[corner[d.index()]] = vec![d.edge, forward, backward];
        }
    }
    RotationSystem::new(rotations, signature).expect("truncation of a valid rotation system")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface_map::topology;

    fn counts(rs: &RotationSystem) -> (usize, usize, usize, i64) {
        let top = topology(rs);
        (
            top.num_vertices(),
            top.num_edges(),
            top.num_faces(),
            top.euler_characteristic(),
        )
    }

    #[test]
    fn lattice_sizes() {
        assert_eq!(counts(&hex_torus(3, 3).unwrap()), (18, 27, 9, 0));
        assert_eq!(counts(&hex_torus(4, 3).unwrap()), (24, 36, 12, 0));
        assert_eq!(counts(&tri_torus(3, 3).unwrap()), (9, 27, 18, 0));
        assert_eq!(counts(&tri_torus(4, 4).unwrap()).3, 0);
        assert_eq!(counts(&k7_torus()), (7, 21, 14, 0));
        assert_eq!(counts(&hex_klein(3, 3).unwrap()), (18, 27, 9, 0));
        assert_eq!(counts(&hex_klein(3, 4).unwrap()).3, 0);
    }

    #[test]
    fn small_parameters_are_rejected() {
        assert_eq!(hex_torus(2, 2), Err(MapError::Parameters { p: 2, q: 2 }));
        assert_eq!(tri_torus(2, 3), Err(MapError::Parameters { p: 2, q: 3 }));
        assert_eq!(hex_klein(2, 2), Err(MapError::Parameters { p: 2, q: 2 }));
    }

    #[test]
    fn truncation_counts() {
        let t = truncate(&hex_torus(3, 3).unwrap());
        assert_eq!(counts(&t), (54, 81, 27, 0));
        let top = topology(&t);
        let mut degrees = top.face_degrees().to_vec();
        degrees.sort_unstable();
        assert_eq!(&degrees[..18], &[3; 18]);
        assert_eq!(&degrees[18..], &[12; 9]);
        assert_eq!(counts(&truncate(&tetrahedron())), (12, 18, 8, 2));
    }

    #[test]
    fn truncation_preserves_orientability() {
        let klein = hex_klein(3, 3).unwrap();
        let top = topology(&truncate(&klein));
        assert!(!top.is_orientable());
        assert_eq!(top.euler_characteristic(), 0);
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(hex_torus(4, 5).unwrap(), hex_torus(4, 5).unwrap());
        assert_eq!(truncate(&k7_torus()), truncate(&k7_torus()));
    }
}
