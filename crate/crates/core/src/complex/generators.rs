//! Standard fixture complexes. Vertices are labelled from 1.

use super::{Face, SimplicialComplex};

fn subsets_of_size(n: u32, k: usize) -> Vec<Face> {
    fn rec(start: u32, n: u32, k: usize, cur: &mut Face, out: &mut Vec<Face>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// The full simplex `Δ^k` on vertices `1..=k+1`.
pub fn simplex(k: usize) -> SimplicialComplex {
    SimplicialComplex::from_faces([(1..=k as u32 + 1).collect()])
}

/// `∂Δ^d`: the boundary of the `d`-simplex, a `(d-1)`-sphere on `d+1` vertices.
pub fn boundary_simplex(d: usize) -> SimplicialComplex {
    assert!(d >= 1, "boundary_simplex needs d >= 1");
    SimplicialComplex::from_faces(subsets_of_size(d as u32 + 1, d))
}

/// Boundary of the `d`-dimensional cross-polytope: vertices `2i-1` and `2i`
/// are antipodal, and a facet picks one vertex from each pair.
pub fn cross_polytope_boundary(d: usize) -> SimplicialComplex {
    assert!(d >= 1, "cross_polytope_boundary needs d >= 1");
    let mut facets = Vec::with_capacity(1 << d);
    for mask in 0u32..(1 << d) {
        facets.push((0..d as u32).map(|i| 2 * i + 1 + ((mask >> i) & 1)).collect());
    }
    SimplicialComplex::from_faces(facets)
}

/// Möbius-Kühnel 7-vertex torus: facet orbits `{i,i+1,i+3}` and
/// `{i,i+2,i+3}` mod 7, relabelled to `1..=7`.
pub fn kuehnel_torus() -> SimplicialComplex {
    let mut facets = Vec::with_capacity(14);
    for i in 0..7u32 {
        facets.push(vec![i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1]);
        facets.push(vec![i % 7 + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1]);
    }
    SimplicialComplex::from_faces(facets)
}

/// The 6-vertex real projective plane (the hemi-icosahedron).
pub fn real_projective_plane() -> SimplicialComplex {
    SimplicialComplex::from_faces(
        [[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6], [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6]]
            .map(|f| f.to_vec()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f_counts(c: &SimplicialComplex) -> Vec<usize> {
        (1..=c.krull_dim()).map(|s| c.faces_of_size(s).len()).collect()
    }

    #[test]
    fn fixture_face_counts() {
        assert_eq!(f_counts(&boundary_simplex(3)), vec![4, 6, 4]);
        assert_eq!(f_counts(&cross_polytope_boundary(3)), vec![6, 12, 8]);
        assert_eq!(f_counts(&kuehnel_torus()), vec![7, 21, 14]);
        assert_eq!(f_counts(&real_projective_plane()), vec![6, 15, 10]);
        assert_eq!(f_counts(&simplex(2)), vec![3, 3, 1]);
    }

    #[test]
    fn torus_and_rp2_are_closed_surfaces() {
        // Every edge lies in exactly two triangles.
        for c in [kuehnel_torus(), real_projective_plane()] {
            for e in c.faces_of_size(2) {
                let n = c.facets().iter().filter(|f| super::super::is_subset(e, f)).count();
                assert_eq!(n, 2, "edge {e:?}");
            }
        }
    }
}
