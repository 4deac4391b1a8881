use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::moves::{apply_bistellar, find_bistellar_moves, BistellarMove};
use super::SimplicialComplex;
use crate::error::{Error, Result};

/// How a random walk picks its next bistellar move.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkPolicy {
    /// Relative weight of each move index; `None` picks uniformly among all
    /// valid moves of all indices.
    pub index_weights: Option<Vec<u32>>,
    /// Never undo the previous move.
    pub exclude_reverse: bool,
}

impl Default for WalkPolicy {
    fn default() -> Self {
        WalkPolicy { index_weights: None, exclude_reverse: true }
    }
}

impl WalkPolicy {
    /// Only moves of the given index.
    pub fn only(index: usize) -> Self {
        let mut w = vec![0; index + 1];
        w[index] = 1;
        WalkPolicy { index_weights: Some(w), exclude_reverse: true }
    }
}

/// One complex on a walk, with the move that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkStep {
    pub complex: SimplicialComplex,
    pub mv: Option<BistellarMove>,
}

/// A seeded random sequence of bistellar moves starting at `seed`.
///
/// The result has `steps + 1` entries; the first is `seed` itself.
pub fn random_pachner_walk(
    seed: &SimplicialComplex,
    steps: usize,
    rng_seed: u64,
    policy: &WalkPolicy,
) -> Result<Vec<WalkStep>> {
    if !seed.is_pure() {
        return Err(Error::NotPure);
    }
    let dim = seed.dim();
    if dim < 0 {
        return Err(Error::NoMoveAvailable);
    }
    let dim = dim as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut out = vec![WalkStep { complex: seed.clone(), mv: None }];
    for _ in 0..steps {
        let current = &out.last().expect("walk is nonempty").complex;
        let undo = out.last().and_then(|s| s.mv.as_ref()).map(|m| m.reverse(dim));
        let mut by_index: Vec<Vec<BistellarMove>> = Vec::with_capacity(dim + 1);
        for i in 0..=dim {
            let wanted = policy.index_weights.as_ref().is_none_or(|w| w.get(i).copied().unwrap_or(0) > 0);
            let mut moves = if wanted { find_bistellar_moves(current, i)? } else { Vec::new() };
            if policy.exclude_reverse {
                if let Some(u) = &undo {
                    moves.retain(|m| m.index != u.index || m.face != u.face || m.replacement != u.replacement);
                }
            }
            by_index.push(moves);
        }
        let chosen = match &policy.index_weights {
            None => {
                let total: usize = by_index.iter().map(Vec::len).sum();
                if total == 0 {
                    return Err(Error::NoMoveAvailable);
                }
                let mut k = rng.gen_range(0..total);
                let mut pick = None;
                for moves in &by_index {
                    if k < moves.len() {
                        pick = Some(moves[k].clone());
                        break;
                    }
                    k -= moves.len();
                }
                pick.expect("index within total")
            }
            Some(weights) => {
                let eff: Vec<u64> = by_index
                    .iter()
                    .enumerate()
                    .map(|(i, m)| if m.is_empty() { 0 } else { weights.get(i).copied().unwrap_or(0) as u64 })
                    .collect();
                let total: u64 = eff.iter().sum();
                if total == 0 {
                    return Err(Error::NoMoveAvailable);
                }
                let mut k = rng.gen_range(0..total);
                let mut idx = 0;
                for (i, w) in eff.iter().enumerate() {
                    if k < *w {
                        idx = i;
                        break;
                    }
                    k -= w;
                }
                let moves = &by_index[idx];
                moves[rng.gen_range(0..moves.len())].clone()
            }
        };
        let next = apply_bistellar(current, &chosen)?;
        out.push(WalkStep { complex: next, mv: Some(chosen) });
    }
    Ok(out)
}
