use serde::{Deserialize, Serialize};

use super::{is_subset, minus, Face, SimplicialComplex};
use crate::error::{Error, Result};

/// A bistellar `i`-move `χ_σ`: the star of `face` (whose link is the boundary
/// of the simplex on `replacement`) is replaced by `∂face * replacement`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BistellarMove {
    pub index: usize,
    pub face: Face,
    /// `i + 1` vertices; for a 0-move the single fresh vertex.
    pub replacement: Face,
}

impl BistellarMove {
    /// The move `χ_τ` undoing this one in a complex of dimension `dim`.
    pub fn reverse(&self, dim: usize) -> BistellarMove {
        BistellarMove { index: dim - self.index, face: self.replacement.clone(), replacement: self.face.clone() }
    }
}

fn link_is_simplex_boundary(link: &SimplicialComplex, i: usize) -> bool {
    if i == 0 {
        return link == &SimplicialComplex::empty_face();
    }
    link.num_vertices() == i + 1 && link.is_simplex_boundary()
}

/// All bistellar `i`-moves of a pure complex of dimension `D`, `0 <= i <= D`.
/// For `i = 0` every facet gives a move introducing vertex `max_label + 1`.
pub fn find_bistellar_moves(complex: &SimplicialComplex, i: usize) -> Result<Vec<BistellarMove>> {
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    let dim = complex.dim();
    if dim < 0 || i as isize > dim {
        return Err(Error::BadIndex(i));
    }
    let dim = dim as usize;
    if i == 0 {
        let fresh = complex.max_label() + 1;
        return Ok(complex
            .facets()
            .iter()
            .map(|f| BistellarMove { index: 0, face: f.clone(), replacement: vec![fresh] })
            .collect());
    }
    let mut out = Vec::new();
    for sigma in complex.faces_of_size(dim - i + 1) {
        let facets_through: Vec<&Face> = complex.facets().iter().filter(|f| is_subset(sigma, f)).collect();
        // The link of σ is ∂Δ^i exactly when σ lies in i+1 facets whose
        // complements cover i+1 vertices.
        if facets_through.len() != i + 1 {
            continue;
        }
        let link = SimplicialComplex::from_faces(facets_through.iter().map(|f| minus(f, sigma)));
        if !link_is_simplex_boundary(&link, i) {
            continue;
        }
        let tau = link.vertices().to_vec();
        if complex.contains_face(&tau) {
            continue;
        }
        out.push(BistellarMove { index: i, face: sigma.clone(), replacement: tau });
    }
    Ok(out)
}

/// Applies `χ_σ Δ = (Δ \ st_σ Δ) ∪ (∂σ * Δ^i)`.
pub fn apply_bistellar(complex: &SimplicialComplex, mv: &BistellarMove) -> Result<SimplicialComplex> {
    let invalid = |m: &str| Error::InvalidMove(m.to_string());
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    let dim = complex.dim();
    if dim < 0 || mv.index as isize > dim {
        return Err(invalid("index exceeds dimension"));
    }
    let dim = dim as usize;
    let mut sigma = mv.face.clone();
    sigma.sort_unstable();
    let mut tau = mv.replacement.clone();
    tau.sort_unstable();
    if sigma.len() != dim - mv.index + 1 || tau.len() != mv.index + 1 {
        return Err(invalid("face sizes do not match the move index"));
    }
    if !complex.contains_face(&sigma) {
        return Err(invalid("face is not in the complex"));
    }
    let link = complex.link(&sigma)?;
    if mv.index == 0 {
        if link != SimplicialComplex::empty_face() {
            return Err(invalid("0-move face is not a facet"));
        }
        if complex.vertices().binary_search(&tau[0]).is_ok() {
            return Err(invalid("0-move vertex is not fresh"));
        }
    } else if !link_is_simplex_boundary(&link, mv.index) || link.vertices() != tau.as_slice() {
        return Err(invalid("link is not the boundary of the replacement simplex"));
    }
    if mv.index > 0 && complex.contains_face(&tau) {
        return Err(invalid("replacement set is already a face"));
    }
    let mut facets: Vec<Face> = complex.facets().iter().filter(|f| !is_subset(&sigma, f)).cloned().collect();
    for v in &sigma {
        let mut g: Face = sigma.iter().copied().filter(|x| x != v).collect();
        g.extend_from_slice(&tau);
        facets.push(g);
    }
    Ok(SimplicialComplex::from_faces(facets))
}
