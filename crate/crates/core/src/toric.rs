//! Complete simplicial fans and the even Betti numbers of their toric
//! varieties, computed as the graded dimensions of `Q[Δ_Σ]/J` where `J` is
//! generated by the linear forms `Σ_i λ_{ji} x_i` read off the rays.
//!
//! Text format:
//!
//! ```text
//! # CP^2
//! 2
//! 1 0
//! 0 1
//! -1 -1
//!
//! 1 2
//! 2 3
//! 1 3
//! ```
//!
//! The first line is the ambient dimension, then one ray per line, a blank
//! line, then one cone per line as 1-based ray indices. `#` starts a comment.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::homology::is_homology_sphere;
use crate::lefschetz::{find_wle_for_system, WlpCertificate};
use crate::linalg::{det, rank, Matrix};
use crate::ring::{artinian_reduction, LinearSystem};
use crate::vectors::{is_m_sequence, GradedVector, MCheck, VectorKind};

/// A simplicial fan in `R^dim` given by primitive ray generators and its
/// cones as sets of 1-based ray indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FanWire", into = "FanWire")]
pub struct Fan {
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub cones: Vec<Face>,
    /// Notes about input that was normalized, such as non-primitive rays.
    pub warnings: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct FanWire {
    dim: usize,
    rays: Vec<Vec<i64>>,
    cones: Vec<Vec<u32>>,
}

impl TryFrom<FanWire> for Fan {
    type Error = Error;

    fn try_from(w: FanWire) -> Result<Self> {
        Fan::new(w.dim, w.rays, w.cones)
    }
}

impl From<Fan> for FanWire {
    fn from(f: Fan) -> Self {
        FanWire { dim: f.dim, rays: f.rays, cones: f.cones }
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFan(msg.into())
}

impl Fan {
    /// Checks shapes and indices and divides every ray by the gcd of its
    /// entries. Completeness is checked separately by [`Fan::validate`].
    pub fn new(dim: usize, rays: Vec<Vec<i64>>, cones: Vec<Vec<u32>>) -> Result<Fan> {
        if dim == 0 {
            return Err(invalid("ambient dimension must be positive"));
        }
        let mut warnings = Vec::new();
        let mut prim = Vec::with_capacity(rays.len());
        for (k, ray) in rays.into_iter().enumerate() {
            if ray.len() != dim {
                return Err(invalid(format!("ray {} has {} entries, expected {dim}", k + 1, ray.len())));
            }
            let g = ray.iter().fold(0i64, |g, x| g.gcd(x));
            if g == 0 {
                return Err(invalid(format!("ray {} is zero", k + 1)));
            }
            if g != 1 {
                warnings.push(format!("ray {} divided by {g} to make it primitive", k + 1));
            }
            prim.push(ray.iter().map(|x| x / g).collect());
        }
        let mut out = Vec::with_capacity(cones.len());
        for mut cone in cones {
            cone.sort_unstable();
            cone.dedup();
            if let Some(&bad) = cone.iter().find(|&&i| i == 0 || i as usize > prim.len()) {
                return Err(invalid(format!("cone refers to ray {bad}, but there are {} rays", prim.len())));
            }
            out.push(cone);
        }
        out.sort();
        out.dedup();
        let fan = Fan { dim, rays: prim, cones: out, warnings };
        for cone in &fan.cones {
            if fan.cone_rank(cone) != cone.len() {
                return Err(invalid(format!("cone {cone:?} is not simplicial")));
            }
        }
        Ok(fan)
    }

    fn cone_rank(&self, cone: &[u32]) -> usize {
        if cone.is_empty() {
            return 0;
        }
        let q = Rationals;
        let rows = cone.iter().map(|&i| self.rays[i as usize - 1].iter().map(|&x| q.from_i64(x)).collect()).collect();
        rank(&q, &Matrix::from_rows(self.dim, rows).expect("rays have length dim"))
    }

    /// The complex whose faces are the ray sets of cones.
    pub fn complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_faces(self.cones.iter().cloned())
    }

    /// `d×m` matrix with column `i` the `i`-th ray, over Q.
    pub fn ray_system(&self) -> LinearSystem<BigRational> {
        let q = Rationals;
        let complex = self.complex();
        let rows = (0..self.dim)
            .map(|j| complex.vertices().iter().map(|&v| q.from_i64(self.rays[v as usize - 1][j])).collect())
            .collect();
        LinearSystem::new(complex.vertices().to_vec(), Matrix::from_rows(complex.num_vertices(), rows).expect("shape"))
    }

    /// Completeness proxy: maximal cones are `dim`-dimensional, every
    /// `(dim-1)`-cone lies in exactly two of them, on opposite sides of its
    /// span, every ray is used, and the underlying complex is a rational
    /// homology `(dim-1)`-sphere.
    pub fn validate(&self) -> Result<()> {
        let complex = self.complex();
        if complex.num_vertices() != self.rays.len() {
            return Err(invalid("some ray lies in no cone"));
        }
        if !complex.is_pure() || complex.krull_dim() != self.dim {
            return Err(invalid(format!("maximal cones must all have {} rays", self.dim)));
        }
        let q = Rationals;
        for ridge in complex.faces_of_size(self.dim - 1) {
            let sides: Vec<u32> = complex
                .facets()
                .iter()
                .filter(|f| ridge.iter().all(|v| f.binary_search(v).is_ok()))
                .map(|f| *f.iter().find(|v| ridge.binary_search(v).is_err()).expect("facet is larger"))
                .collect();
            if sides.len() != 2 {
                return Err(invalid(format!("cone {ridge:?} borders {} maximal cones, expected 2", sides.len())));
            }
            let sign = |apex: u32| -> Result<bool> {
                let rows = ridge
                    .iter()
                    .chain(std::iter::once(&apex))
                    .map(|&i| self.rays[i as usize - 1].iter().map(|&x| q.from_i64(x)).collect())
                    .collect();
                Ok(det(&q, &Matrix::from_rows(self.dim, rows)?)?.is_positive())
            };
            if sign(sides[0])? == sign(sides[1])? {
                return Err(invalid(format!("the two maximal cones at {ridge:?} overlap")));
            }
        }
        if !is_homology_sphere(&complex, &q)? {
            return Err(invalid("underlying complex is not a homology sphere"));
        }
        Ok(())
    }

    /// Inserts the ray through the sum of the rays of `cone` and subdivides
    /// every cone containing it.
    pub fn stellar_subdivision(&self, cone: &[u32]) -> Result<Fan> {
        let complex = self.complex();
        let mut c = cone.to_vec();
        c.sort_unstable();
        if c.is_empty() || !complex.contains_face(&c) {
            return Err(invalid(format!("{cone:?} is not a cone")));
        }
        if complex.max_label() as usize != self.rays.len() {
            return Err(invalid("the last ray lies in no cone"));
        }
        let mut rays = self.rays.clone();
        rays.push((0..self.dim).map(|j| c.iter().map(|&i| self.rays[i as usize - 1][j]).sum()).collect());
        let sub = complex.stellar_subdivision(&c)?;
        Fan::new(self.dim, rays, sub.facets().to_vec())
    }

    pub fn parse(text: &str) -> Result<Fan> {
        let err = |line: usize, message: String| Error::Parse { line, message };
        let mut dim = None;
        let mut rays = Vec::new();
        let mut cones = Vec::new();
        let mut in_cones = false;
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            if raw.trim().is_empty() {
                if dim.is_some() && !rays.is_empty() {
                    in_cones = true;
                }
                continue;
            }
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let Some(d) = dim else {
                let d = body.parse::<usize>().map_err(|e| err(line_no, format!("bad dimension {body:?}: {e}")))?;
                dim = Some(d);
                continue;
            };
            if in_cones {
                let cone = body
                    .split_whitespace()
                    .map(|t| t.parse::<u32>().map_err(|e| err(line_no, format!("bad ray index {t:?}: {e}"))))
                    .collect::<Result<Vec<_>>>()?;
                cones.push(cone);
            } else {
                let ray = body
                    .split_whitespace()
                    .map(|t| t.parse::<i64>().map_err(|e| err(line_no, format!("bad coordinate {t:?}: {e}"))))
                    .collect::<Result<Vec<_>>>()?;
                if ray.len() != d {
                    return Err(err(line_no, format!("ray has {} coordinates, expected {d}", ray.len())));
                }
                rays.push(ray);
            }
        }
        let dim = dim.ok_or_else(|| err(0, "missing dimension header".into()))?;
        Fan::new(dim, rays, cones)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.dim);
        for r in &self.rays {
            out.push_str(&r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
            out.push('\n');
        }
        out.push('\n');
        for c in &self.cones {
            out.push_str(&c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
            out.push('\n');
        }
        out
    }
}

/// `Δ_Σ` of a complete simplicial fan.
pub fn underlying_complex(fan: &Fan) -> Result<SimplicialComplex> {
    fan.validate()?;
    Ok(fan.complex())
}

/// Dimensions of `H^{2i}(X_Σ; Q)` for `i = 0..=d`, using the ray forms
/// themselves as the linear system.
pub fn toric_betti(fan: &Fan) -> Result<GradedVector> {
    let complex = underlying_complex(fan)?;
    let q = artinian_reduction(&complex, &fan.ray_system(), &Rationals)?;
    Ok(GradedVector::new(VectorKind::Betti, q.dims().into_iter().map(BigInt::from).collect()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricReport {
    pub betti: GradedVector,
    /// `(1, μ_1 - μ_0, ..., μ_⌊d/2⌋ - μ_⌊d/2⌋-1)`.
    pub differences: GradedVector,
    pub m_check: MCheck,
    pub symmetric: bool,
    /// Sum of the even Betti numbers and the number of maximal cones.
    #[serde(with = "crate::vectors::wire")]
    pub total: BigInt,
    pub maximal_cones: usize,
}

pub fn toric_m_check(fan: &Fan) -> Result<ToricReport> {
    let betti = toric_betti(fan)?;
    let e = &betti.entries;
    let d = e.len() - 1;
    let differences = GradedVector::new(
        VectorKind::G,
        (0..=d / 2).map(|i| if i == 0 { e[0].clone() } else { &e[i] - &e[i - 1] }).collect(),
    );
    let m_check = is_m_sequence(&differences.entries);
    let symmetric = (0..=d).all(|i| e[i] == e[d - i]);
    let total = e.iter().sum();
    let maximal_cones = fan.complex().facets().len();
    Ok(ToricReport { betti, differences, m_check, symmetric, total, maximal_cones })
}

/// Searches `ω` over Q with `Θ` pinned to the ray forms.
pub fn toric_wle(fan: &Fan, seed: u64, max_tries: usize) -> Result<WlpCertificate> {
    let complex = underlying_complex(fan)?;
    find_wle_for_system(&complex, &fan.ray_system(), &Rationals, seed, max_tries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vectors::small;

    fn cp2() -> Fan {
        Fan::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, -1]], vec![vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap()
    }

    fn p1xp1() -> Fan {
        Fan::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]],
            vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]],
        )
        .unwrap()
    }

    #[test]
    fn projective_plane_and_product() {
        assert_eq!(underlying_complex(&cp2()).unwrap().facets().len(), 3);
        assert_eq!(small(&toric_betti(&cp2()).unwrap()), [1, 1, 1]);
        assert_eq!(small(&toric_betti(&p1xp1()).unwrap()), [1, 2, 1]);
        let r = toric_m_check(&p1xp1()).unwrap();
        assert_eq!(small(&r.differences), [1, 1]);
        assert!(r.m_check.is_m && r.symmetric);
        assert_eq!(r.total, BigInt::from(r.maximal_cones));
        assert!(toric_wle(&p1xp1(), 0, 5).unwrap().is_wle());
    }

    #[test]
    fn line() {
        let f = Fan::new(1, vec![vec![1], vec![-1]], vec![vec![1], vec![2]]).unwrap();
        assert_eq!(small(&toric_betti(&f).unwrap()), [1, 1]);
        let half = Fan::new(1, vec![vec![1]], vec![vec![1]]).unwrap();
        assert!(matches!(toric_betti(&half), Err(Error::InvalidFan(_))));
    }

    #[test]
    fn bad_fans() {
        assert!(matches!(Fan::new(2, vec![vec![0, 0]], vec![]), Err(Error::InvalidFan(_))));
        assert!(matches!(Fan::new(2, vec![vec![1, 0], vec![2, 0]], vec![vec![1, 2]]), Err(Error::InvalidFan(_))));
        // Two cones on the same side of the ray (1, 0).
        let folded = Fan::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, 1], vec![1, 1]],
            vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]],
        )
        .unwrap();
        assert!(matches!(folded.validate(), Err(Error::InvalidFan(_))));
    }

    #[test]
    fn primitivization_warns() {
        let f = Fan::new(1, vec![vec![3], vec![-1]], vec![vec![1], vec![2]]).unwrap();
        assert_eq!(f.rays[0], [1]);
        assert_eq!(f.warnings.len(), 1);
    }

    #[test]
    fn text_and_json_round_trip() {
        let text = "# CP^2\n2\n1 0\n0 1\n-1 -1  # last ray\n\n1 2\n2 3\n1 3\n";
        let f = Fan::parse(text).unwrap();
        assert_eq!(f, cp2());
        assert_eq!(Fan::parse(&f.to_text()).unwrap(), f);
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(serde_json::from_str::<Fan>(&json).unwrap(), f);
        assert_eq!(
            Fan::parse("2\n1 0 0\n"),
            Err(Error::Parse { line: 2, message: "ray has 3 coordinates, expected 2".into() })
        );
    }

    #[test]
    fn blow_up_adds_one_class() {
        let f = cp2();
        let g = f.stellar_subdivision(&[1, 2]).unwrap();
        assert_eq!(g.rays[3], [1, 1]);
        let (a, b) = (toric_m_check(&f).unwrap(), toric_m_check(&g).unwrap());
        assert_eq!(small(&b.betti), [1, 2, 1]);
        assert_eq!(&b.total - &a.total, BigInt::from(b.maximal_cones - a.maximal_cones));
    }
}
