//! Finite abstract simplicial complexes in canonical facet form.
//!
//! A complex is stored as its set of facets (maximal faces), each a strictly
//! increasing list of vertex labels, and the facet list itself sorted
//! lexicographically. Two complexes are equal exactly when they have the same
//! faces. Every operation returns a new complex.

mod generators;
mod moves;
mod walk;

pub use generators::{boundary_simplex, cross_polytope_boundary, kuehnel_torus, real_projective_plane, simplex};
pub use moves::{apply_bistellar, find_bistellar_moves, BistellarMove};
pub use walk::{random_pachner_walk, WalkPolicy, WalkStep};

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// A face: strictly increasing vertex labels.
pub type Face = Vec<u32>;

#[derive(Debug, Default)]
struct FaceIndex {
    /// `by_size[s]` lists the faces with `s` vertices in lexicographic order.
    by_size: Vec<Vec<Face>>,
    position: Vec<HashMap<Face, usize>>,
}

/// A finite simplicial complex.
///
/// The void complex (no faces at all) has no facets; the complex `{∅}` has
/// the single empty facet.
pub struct SimplicialComplex {
    facets: Vec<Face>,
    vertices: Vec<u32>,
    index: OnceLock<FaceIndex>,
}

impl Clone for SimplicialComplex {
    fn clone(&self) -> Self {
        SimplicialComplex { facets: self.facets.clone(), vertices: self.vertices.clone(), index: OnceLock::new() }
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl std::hash::Hash for SimplicialComplex {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.facets.hash(state);
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex").field("facets", &self.facets).finish()
    }
}

pub(crate) fn is_subset(a: &[u32], b: &[u32]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

fn canonical_face(mut f: Face) -> Face {
    f.sort_unstable();
    f.dedup();
    f
}

fn union(a: &[u32], b: &[u32]) -> Face {
    let mut out: Face = a.iter().chain(b).copied().collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn minus(a: &[u32], b: &[u32]) -> Face {
    a.iter().copied().filter(|x| b.binary_search(x).is_err()).collect()
}

/// Calls `visit` for every subset of `face` (as a sorted list).
pub(crate) fn for_each_subset(face: &[u32], mut visit: impl FnMut(Face)) {
    let n = face.len();
    assert!(n < 32, "faces with 32 or more vertices are not supported");
    for mask in 0u32..(1 << n) {
        let sub: Face = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| face[i]).collect();
        visit(sub);
    }
}

impl SimplicialComplex {
    /// Builds the complex generated by `faces`: non-maximal entries are
    /// dropped and everything is put in canonical order.
    pub fn from_faces<I: IntoIterator<Item = Face>>(faces: I) -> Self {
        let mut fs: Vec<Face> = faces.into_iter().map(canonical_face).collect();
        fs.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        fs.dedup();
        let mut kept: Vec<Face> = Vec::with_capacity(fs.len());
        for f in fs {
            if !kept.iter().any(|k| k.len() > f.len() && is_subset(&f, k)) {
                kept.push(f);
            }
        }
        kept.sort();
        let vertices: BTreeSet<u32> = kept.iter().flatten().copied().collect();
        SimplicialComplex { facets: kept, vertices: vertices.into_iter().collect(), index: OnceLock::new() }
    }

    /// The complex `{∅}` whose only face is the empty face.
    pub fn empty_face() -> Self {
        SimplicialComplex::from_faces([Vec::new()])
    }

    /// The void complex with no faces.
    pub fn void() -> Self {
        SimplicialComplex::from_faces(std::iter::empty())
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension `D` (largest face size minus one); `-1` for `{∅}` and the void complex.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1
    }

    /// `d = D + 1`, the Krull dimension of the face ring.
    pub fn krull_dim(&self) -> usize {
        (self.dim() + 1) as usize
    }

    pub fn max_label(&self) -> u32 {
        self.vertices.last().copied().unwrap_or(0)
    }

    pub fn is_pure(&self) -> bool {
        let mut sizes = self.facets.iter().map(|f| f.len());
        match sizes.next() {
            None => true,
            Some(s) => sizes.all(|t| t == s),
        }
    }

    fn index(&self) -> &FaceIndex {
        self.index.get_or_init(|| {
            let top = self.facets.iter().map(|f| f.len()).max().unwrap_or(0);
            let mut sets: Vec<HashSet<Face>> = vec![HashSet::new(); top + 1];
            if !self.facets.is_empty() {
                for f in &self.facets {
                    for_each_subset(f, |s| {
                        sets[s.len()].insert(s);
                    });
                }
            }
            let mut by_size = Vec::with_capacity(sets.len());
            let mut position = Vec::with_capacity(sets.len());
            for set in sets {
                let mut v: Vec<Face> = set.into_iter().collect();
                v.sort();
                position.push(v.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect());
                by_size.push(v);
            }
            FaceIndex { by_size, position }
        })
    }

    /// Faces with exactly `size` vertices (dimension `size - 1`), in lexicographic order.
    pub fn faces_of_size(&self, size: usize) -> &[Face] {
        self.index().by_size.get(size).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// `F_i`: faces of dimension `i`.
    pub fn faces_of_dim(&self, i: isize) -> &[Face] {
        if i < -1 {
            return &[];
        }
        self.faces_of_size((i + 1) as usize)
    }

    /// All faces including the empty face, by increasing size.
    pub fn all_faces(&self) -> impl Iterator<Item = &Face> {
        self.index().by_size.iter().flatten()
    }

    /// Position of `face` within [`Self::faces_of_size`].
    pub fn face_position(&self, face: &[u32]) -> Option<usize> {
        self.index().position.get(face.len())?.get(face).copied()
    }

    pub fn contains_face(&self, face: &[u32]) -> bool {
        let f = canonical_face(face.to_vec());
        if f.len() != face.len() {
            return false;
        }
        self.face_position(&f).is_some()
    }

    fn require_face(&self, face: &[u32]) -> Result<Face> {
        let f = canonical_face(face.to_vec());
        if f.len() != face.len() || self.face_position(&f).is_none() {
            return Err(Error::NotAFace(face.to_vec()));
        }
        Ok(f)
    }

    /// `lk_σ Δ = {τ ∈ Δ : τ ∪ σ ∈ Δ, τ ∩ σ = ∅}`.
    pub fn link(&self, face: &[u32]) -> Result<SimplicialComplex> {
        let s = self.require_face(face)?;
        Ok(SimplicialComplex::from_faces(self.facets.iter().filter(|f| is_subset(&s, f)).map(|f| minus(f, &s))))
    }

    /// `st_σ Δ = {τ ∈ Δ : τ ∪ σ ∈ Δ}`, the closure of the facets through σ.
    pub fn star(&self, face: &[u32]) -> Result<SimplicialComplex> {
        let s = self.require_face(face)?;
        Ok(SimplicialComplex::from_faces(self.facets.iter().filter(|f| is_subset(&s, f)).cloned()))
    }

    /// `Δ - σ = {τ ∈ Δ : σ ⊄ τ}`.
    pub fn deletion(&self, face: &[u32]) -> Result<SimplicialComplex> {
        let s = self.require_face(face)?;
        let mut out = Vec::new();
        for f in &self.facets {
            if is_subset(&s, f) {
                for v in &s {
                    out.push(f.iter().copied().filter(|x| x != v).collect());
                }
            } else {
                out.push(f.clone());
            }
        }
        Ok(SimplicialComplex::from_faces(out))
    }

    /// Induced subcomplex on the given vertex set.
    pub fn induced(&self, vertices: &[u32]) -> SimplicialComplex {
        let keep: HashSet<u32> = vertices.iter().copied().collect();
        SimplicialComplex::from_faces(
            self.facets.iter().map(|f| f.iter().copied().filter(|v| keep.contains(v)).collect()),
        )
    }

    /// `Δ * Δ'` for complexes on disjoint vertex sets.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        if let Some(v) = self.vertices.iter().find(|v| other.vertices.binary_search(v).is_ok()) {
            return Err(Error::VertexCollision(*v));
        }
        let mut out = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in &self.facets {
            for b in &other.facets {
                out.push(union(a, b));
            }
        }
        Ok(SimplicialComplex::from_faces(out))
    }

    /// Cone with a fresh apex labelled `max_label + 1`.
    pub fn cone(&self) -> SimplicialComplex {
        let apex = self.max_label() + 1;
        self.join(&SimplicialComplex::from_faces([vec![apex]])).expect("apex label is fresh")
    }

    /// Stellar subdivision `(Δ \ st_σ) ∪ C(∂σ * lk_σ)` with apex `max_label + 1`.
    /// A vertex subdivides to the same complex.
    pub fn stellar_subdivision(&self, face: &[u32]) -> Result<SimplicialComplex> {
        if face.is_empty() {
            return Err(Error::EmptyFace);
        }
        let s = self.require_face(face)?;
        if s.len() == 1 {
            return Ok(self.clone());
        }
        let apex = self.max_label() + 1;
        let mut out = Vec::new();
        for f in &self.facets {
            if is_subset(&s, f) {
                let lk = minus(f, &s);
                for v in &s {
                    let mut g: Face = s.iter().copied().filter(|x| x != v).collect();
                    g.extend_from_slice(&lk);
                    g.push(apex);
                    out.push(g);
                }
            } else {
                out.push(f.clone());
            }
        }
        Ok(SimplicialComplex::from_faces(out))
    }

    /// Renames vertices through `map`; labels not in the map are kept.
    pub fn relabel(&self, map: &HashMap<u32, u32>) -> SimplicialComplex {
        SimplicialComplex::from_faces(self.facets.iter().map(|f| f.iter().map(|v| *map.get(v).unwrap_or(v)).collect()))
    }

    /// Shifts every label by `offset`.
    pub fn shifted(&self, offset: u32) -> SimplicialComplex {
        SimplicialComplex::from_faces(self.facets.iter().map(|f| f.iter().map(|v| v + offset).collect()))
    }

    /// Connected components of the 1-skeleton, by union-find.
    pub fn num_components(&self) -> usize {
        let pos: HashMap<u32, usize> = self.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for f in &self.facets {
            for w in f.windows(2) {
                let (a, b) = (find(&mut parent, pos[&w[0]]), find(&mut parent, pos[&w[1]]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        (0..parent.len()).filter(|&i| find(&mut parent, i) == i).count()
    }

    pub fn is_connected(&self) -> bool {
        self.num_components() <= 1
    }

    /// True when the complex is the boundary of the simplex on its vertex set.
    pub fn is_simplex_boundary(&self) -> bool {
        let n = self.vertices.len();
        n >= 1 && self.facets.len() == n && self.facets.iter().all(|f| f.len() == n - 1)
    }
}
