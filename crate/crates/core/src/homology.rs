//! Reduced simplicial homology over a field and the classifications built on
//! it: homology manifolds and spheres, Cohen-Macaulay (Reisner), Gorenstein*,
//! Buchsbaum and orientability.

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::linalg::sparse_rank;

/// Reduced Betti numbers `β̃_i` for `-1 <= i <= D`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiProfile {
    pub field: FieldSpec,
    /// `betti[i + 1] = β̃_i`.
    pub betti: Vec<usize>,
}

impl BettiProfile {
    /// `β̃_i`, zero outside the stored range.
    pub fn get(&self, i: isize) -> usize {
        if i < -1 {
            return 0;
        }
        self.betti.get((i + 1) as usize).copied().unwrap_or(0)
    }

    /// `Σ (-1)^i β̃_i`.
    pub fn euler(&self) -> i64 {
        self.betti.iter().enumerate().map(|(k, &b)| if k % 2 == 1 { b as i64 } else { -(b as i64) }).sum()
    }

    /// True when this is the profile of a `dim`-sphere (`dim = -1` is `{∅}`).
    pub fn is_sphere_of_dim(&self, dim: isize) -> bool {
        self.betti.iter().enumerate().all(|(k, &b)| b == usize::from(k as isize - 1 == dim)) && self.get(dim) == 1
    }

    pub fn is_zero(&self) -> bool {
        self.betti.iter().all(|&b| b == 0)
    }
}

/// Reduced Euler characteristic `Σ_{i >= -1} (-1)^i f_i` from face counts.
pub fn reduced_euler(complex: &SimplicialComplex) -> i64 {
    if complex.is_void() {
        return 0;
    }
    (0..=complex.krull_dim())
        .map(|s| {
            let n = complex.faces_of_size(s).len() as i64;
            if s % 2 == 1 {
                n
            } else {
                -n
            }
        })
        .sum()
}

/// Rank of the augmented boundary map from faces of size `s` to size `s - 1`.
fn boundary_rank<F: Field>(complex: &SimplicialComplex, field: &F, s: usize) -> usize {
    if s == 0 {
        return 0;
    }
    let lower = complex.faces_of_size(s - 1);
    let upper = complex.faces_of_size(s);
    if lower.is_empty() || upper.is_empty() {
        return 0;
    }
    let one = field.one();
    let minus = field.neg(&one);
    let rows = upper
        .iter()
        .map(|f| {
            let mut row: Vec<(usize, F::Elem)> = (0..f.len())
                .map(|k| {
                    let mut g = f.clone();
                    g.remove(k);
                    let col = complex.face_position(&g).expect("boundary faces are faces");
                    (col, if k % 2 == 0 { one.clone() } else { minus.clone() })
                })
                .collect();
            row.sort_by_key(|e| e.0);
            row
        })
        .collect();
    sparse_rank(field, lower.len(), rows)
}

/// Reduced homology from ranks of the augmented chain complex.
pub fn reduced_betti<F: Field>(complex: &SimplicialComplex, field: &F) -> BettiProfile {
    if complex.is_void() {
        return BettiProfile { field: field.spec(), betti: Vec::new() };
    }
    let top = complex.krull_dim();
    // ranks[s] = rank of ∂ out of size-s faces; sizes 0..=top+1.
    let ranks: Vec<usize> = (0..=top + 1).map(|s| boundary_rank(complex, field, s)).collect();
    let betti = (0..=top).map(|s| complex.faces_of_size(s).len() - ranks[s] - ranks[s + 1]).collect();
    BettiProfile { field: field.spec(), betti }
}

/// Every link of a nonempty face of a pure complex of dimension `D` has the
/// homology of `S^{D - |σ|}`.
pub fn is_homology_manifold<F: Field>(complex: &SimplicialComplex, field: &F) -> Result<bool> {
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    let dim = complex.dim();
    for s in 1..=complex.krull_dim() {
        for face in complex.faces_of_size(s) {
            let link = complex.link(face)?;
            let want = dim - s as isize;
            if link.dim() != want || !reduced_betti(&link, field).is_sphere_of_dim(want) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn is_homology_sphere<F: Field>(complex: &SimplicialComplex, field: &F) -> Result<bool> {
    Ok(is_homology_manifold(complex, field)? && reduced_betti(complex, field).is_sphere_of_dim(complex.dim()))
}

/// Reisner: `β̃_i(lk σ) = 0` for `i < dim lk σ`, over all faces including `∅`.
pub fn is_cohen_macaulay<F: Field>(complex: &SimplicialComplex, field: &F) -> bool {
    if complex.is_void() {
        return true;
    }
    complex.all_faces().all(|face| {
        let link = complex.link(face).expect("face of the complex");
        let b = reduced_betti(&link, field);
        (-1..link.dim()).all(|i| b.get(i) == 0)
    })
}

/// Gorenstein* is equivalent to being a homology sphere; non-pure input is
/// simply not Gorenstein*.
pub fn is_gorenstein_star<F: Field>(complex: &SimplicialComplex, field: &F) -> bool {
    complex.is_pure() && is_homology_sphere(complex, field).unwrap_or(false)
}

/// Pure, with every link of a nonempty face Cohen-Macaulay.
pub fn is_buchsbaum<F: Field>(complex: &SimplicialComplex, field: &F) -> bool {
    if !complex.is_pure() {
        return false;
    }
    complex
        .all_faces()
        .filter(|f| !f.is_empty())
        .all(|face| is_cohen_macaulay(&complex.link(face).expect("face of the complex"), field))
}

/// Orientability of a connected homology manifold, read off as `β̃_D = 1`
/// over the given field.
pub fn is_orientable<F: Field>(complex: &SimplicialComplex, field: &F) -> Result<bool> {
    if !complex.is_pure() || !is_homology_manifold(complex, field)? {
        return Err(Error::NotAManifold);
    }
    if !complex.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(reduced_betti(complex, field).get(complex.dim()) == 1)
}

/// All classification flags at once, as reported by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub field: FieldSpec,
    pub pure: bool,
    pub connected: bool,
    pub betti: Vec<usize>,
    pub homology_manifold: bool,
    pub homology_sphere: bool,
    pub cohen_macaulay: bool,
    pub gorenstein_star: bool,
    pub buchsbaum: bool,
    /// `None` when the complex is not a connected homology manifold.
    pub orientable: Option<bool>,
}

pub fn classify<F: Field>(complex: &SimplicialComplex, field: &F) -> Classification {
    let pure = complex.is_pure();
    let homology_manifold = pure && is_homology_manifold(complex, field).unwrap_or(false);
    let betti = reduced_betti(complex, field);
    let homology_sphere = homology_manifold && betti.is_sphere_of_dim(complex.dim());
    Classification {
        field: field.spec(),
        pure,
        connected: complex.is_connected(),
        betti: betti.betti.clone(),
        homology_manifold,
        homology_sphere,
        cohen_macaulay: is_cohen_macaulay(complex, field),
        gorenstein_star: homology_sphere,
        buchsbaum: is_buchsbaum(complex, field),
        orientable: is_orientable(complex, field).ok(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{boundary_simplex, cross_polytope_boundary, kuehnel_torus, real_projective_plane};
    use crate::field::{PrimeField, Rationals};

    fn sc(f: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_faces(f.iter().map(|x| x.to_vec()))
    }

    #[test]
    fn betti_of_fixtures() {
        let q = Rationals;
        assert_eq!(reduced_betti(&boundary_simplex(3), &q).betti, vec![0, 0, 0, 1]);
        assert_eq!(reduced_betti(&sc(&[&[1], &[2]]), &q).betti, vec![0, 1]);
        assert_eq!(reduced_betti(&kuehnel_torus(), &q).betti, vec![0, 0, 2, 1]);
        assert_eq!(reduced_betti(&SimplicialComplex::empty_face(), &q).betti, vec![1]);
    }

    #[test]
    fn euler_consistency() {
        let q = Rationals;
        for c in [boundary_simplex(4), cross_polytope_boundary(3), kuehnel_torus(), real_projective_plane()] {
            assert_eq!(reduced_betti(&c, &q).euler(), reduced_euler(&c));
        }
    }

    #[test]
    fn rp2_depends_on_characteristic() {
        let rp2 = real_projective_plane();
        assert_eq!(reduced_betti(&rp2, &Rationals).betti, vec![0, 0, 0, 0]);
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(reduced_betti(&rp2, &f2).betti, vec![0, 0, 1, 1]);
        assert!(!is_orientable(&rp2, &Rationals).unwrap());
        assert!(is_orientable(&rp2, &f2).unwrap());
    }

    #[test]
    fn manifolds_and_spheres() {
        let q = Rationals;
        for d in 1..=4 {
            assert!(is_homology_sphere(&boundary_simplex(d + 1), &q).unwrap());
        }
        let t = kuehnel_torus();
        assert!(is_homology_manifold(&t, &q).unwrap());
        assert!(!is_homology_sphere(&t, &q).unwrap());
        let two_triangles = sc(&[&[1, 2, 3], &[2, 3, 4]]);
        assert!(!is_homology_manifold(&two_triangles, &q).unwrap());
        assert_eq!(is_homology_manifold(&sc(&[&[1, 2], &[3]]), &q), Err(Error::NotPure));
    }

    #[test]
    fn cohen_macaulay_and_friends() {
        let q = Rationals;
        assert!(is_cohen_macaulay(&boundary_simplex(3), &q));
        assert!(!is_cohen_macaulay(&kuehnel_torus(), &q));
        assert!(!is_cohen_macaulay(&sc(&[&[1, 2], &[3, 4]]), &q));
        assert!(is_buchsbaum(&kuehnel_torus(), &q));
        assert!(is_buchsbaum(&cross_polytope_boundary(3), &q));
        assert!(!is_buchsbaum(&sc(&[&[1, 2, 3], &[3, 4]]), &q));
        let cone = boundary_simplex(2).cone();
        assert!(!is_gorenstein_star(&cone, &q));
        assert!(is_gorenstein_star(&cross_polytope_boundary(3), &q));
    }

    #[test]
    fn cone_kills_homology() {
        let q = Rationals;
        for c in [kuehnel_torus(), sc(&[&[1, 2], &[3]]), real_projective_plane()] {
            assert!(reduced_betti(&c.cone(), &q).is_zero());
        }
    }

    #[test]
    fn orientability_needs_a_manifold() {
        let q = Rationals;
        assert!(is_orientable(&kuehnel_torus(), &q).unwrap());
        assert!(is_orientable(&boundary_simplex(3), &q).unwrap());
        assert_eq!(is_orientable(&sc(&[&[1, 2, 3], &[2, 3, 4]]), &q), Err(Error::NotAManifold));
        let disjoint = SimplicialComplex::from_faces(
            boundary_simplex(2)
                .facets()
                .iter()
                .cloned()
                .chain(boundary_simplex(2).shifted(10).facets().iter().cloned()),
        );
        assert_eq!(is_orientable(&disjoint, &q), Err(Error::NotConnected));
    }
}
