//! Face-number invariants: f-, h- and g-vectors, Macaulay pseudopowers and
//! M-sequences, and the inequality checks built on them.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::{BistellarMove, SimplicialComplex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VectorKind {
    F,
    H,
    G,
    HPrime,
    HDoublePrime,
    GDoublePrime,
    Betti,
    Hilbert,
}

/// An integer sequence indexed by degree (or dimension, for f-vectors).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedVector {
    pub kind: VectorKind,
    #[serde(with = "wire::vec")]
    pub entries: Vec<BigInt>,
}

impl GradedVector {
    pub fn new(kind: VectorKind, entries: Vec<BigInt>) -> Self {
        GradedVector { kind, entries }
    }

    pub fn from_i64s(kind: VectorKind, entries: &[i64]) -> Self {
        GradedVector { kind, entries: entries.iter().map(|&v| BigInt::from(v)).collect() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&BigInt> {
        self.entries.get(i)
    }

    /// Comma-separated entries, the CLI wire format.
    pub fn to_csv(&self) -> String {
        self.entries.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for GradedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_csv())
    }
}

/// Integers on the wire: a JSON number when it fits in `i64`, otherwise a
/// decimal string.
pub mod wire {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Int {
        Small(i64),
        Big(String),
    }

    impl From<&BigInt> for Int {
        fn from(v: &BigInt) -> Self {
            v.to_i64().map_or_else(|| Int::Big(v.to_string()), Int::Small)
        }
    }

    impl Int {
        fn into_big<E: serde::de::Error>(self) -> Result<BigInt, E> {
            match self {
                Int::Small(v) => Ok(BigInt::from(v)),
                Int::Big(s) => s.parse().map_err(E::custom),
            }
        }
    }

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        Int::from(v).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        Int::deserialize(d)?.into_big()
    }

    pub mod vec {
        use super::*;

        pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
            s.collect_seq(v.iter().map(Int::from))
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
            Vec::<Int>::deserialize(d)?.into_iter().map(Int::into_big).collect()
        }
    }
}

/// `C(n, k)` by the multiplicative formula with exact division.
pub fn binomial(n: &BigUint, k: usize) -> BigUint {
    let kk = BigUint::from(k);
    if kk > *n {
        return BigUint::zero();
    }
    let k = if BigUint::from(2 * k) > *n {
        // Symmetry keeps the loop short when k is close to n.
        let rest = n - &kk;
        usize::try_from(&rest).unwrap_or(k)
    } else {
        k
    };
    let mut acc = BigUint::one();
    for t in 0..k {
        acc *= n - BigUint::from(t);
        acc /= BigUint::from(t + 1);
    }
    acc
}

/// Signed binomial for small non-negative arguments.
pub fn binomial_i(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    BigInt::from(binomial(&BigUint::from(n as u64), k as usize))
}

/// f-vector `(f_0, ..., f_D)`; `f_{-1} = 1` is implicit.
pub fn f_vector(complex: &SimplicialComplex) -> GradedVector {
    let d = complex.krull_dim();
    GradedVector::new(VectorKind::F, (1..=d).map(|s| BigInt::from(complex.faces_of_size(s).len())).collect())
}

/// `h_i = Σ_j (-1)^{i-j} C(d-j, d-i) f_{j-1}` for `0 <= i <= d`.
pub fn f_to_h(f: &GradedVector, d: usize) -> Result<GradedVector> {
    if f.len() != d {
        return Err(Error::LengthMismatch { expected: d, got: f.len() });
    }
    let fm1 = |j: usize| if j == 0 { BigInt::one() } else { f.entries[j - 1].clone() };
    let mut h = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let mut acc = BigInt::zero();
        for j in 0..=i {
            let term = binomial_i((d - j) as i64, (d - i) as i64) * fm1(j);
            if (i - j) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        h.push(acc);
    }
    Ok(GradedVector::new(VectorKind::H, h))
}

/// `f_{i-1} = Σ_j C(d-j, d-i) h_j` for `1 <= i <= d`.
pub fn h_to_f(h: &GradedVector, d: usize) -> Result<GradedVector> {
    if h.len() != d + 1 {
        return Err(Error::LengthMismatch { expected: d + 1, got: h.len() });
    }
    let f =
        (1..=d).map(|i| (0..=i).map(|j| binomial_i((d - j) as i64, (d - i) as i64) * &h.entries[j]).sum()).collect();
    Ok(GradedVector::new(VectorKind::F, f))
}

pub fn h_vector(complex: &SimplicialComplex) -> GradedVector {
    let d = complex.krull_dim();
    f_to_h(&f_vector(complex), d).expect("f-vector has length d")
}

/// `g_0 = h_0`, `g_i = h_i - h_{i-1}` for `1 <= i <= ⌊d/2⌋`.
pub fn g_vector(h: &GradedVector) -> GradedVector {
    if h.is_empty() {
        return GradedVector::new(VectorKind::G, Vec::new());
    }
    let d = h.len() - 1;
    let mut g = vec![h.entries[0].clone()];
    for i in 1..=d / 2 {
        g.push(&h.entries[i] - &h.entries[i - 1]);
    }
    GradedVector::new(VectorKind::G, g)
}

/// The `i`-binomial expansion `a = C(a_i, i) + ... + C(a_j, j)` with
/// `a_i > ... > a_j >= j >= 1`, as `(a_k, k)` pairs by decreasing `k`.
/// Computed greedily; empty for `a = 0`.
pub fn binomial_expansion(a: &BigUint, i: usize) -> Result<Vec<(BigUint, usize)>> {
    if i < 1 {
        return Err(Error::BadIndex(i));
    }
    let mut rest = a.clone();
    let mut out = Vec::new();
    let mut k = i;
    while !rest.is_zero() && k >= 1 {
        // Largest n with C(n, k) <= rest; C(k, k) = 1 <= rest.
        let mut lo = BigUint::from(k);
        let mut hi = BigUint::from(k + 1);
        while binomial(&hi, k) <= rest {
            lo = hi.clone();
            hi = &hi * 2u32;
        }
        while &hi - &lo > BigUint::one() {
            let mid: BigUint = (&lo + &hi) / 2u32;
            if binomial(&mid, k) <= rest {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        rest -= binomial(&lo, k);
        out.push((lo, k));
        k -= 1;
    }
    Ok(out)
}

/// Macaulay's `i`-th pseudopower `a^<i>`; `0^<i> = 0`.
pub fn pseudopower(a: &BigUint, i: usize) -> Result<BigUint> {
    let exp = binomial_expansion(a, i)?;
    Ok(exp.iter().map(|(n, k)| binomial(&(n + 1u32), k + 1)).sum())
}

/// Outcome of an M-sequence test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MCheck {
    pub is_m: bool,
    /// First index at which the defining inequalities fail.
    pub failure: Option<usize>,
}

/// `k_0 = 1` and `0 <= k_{i+1} <= k_i^<i>` for all `i >= 1`.
pub fn is_m_sequence(k: &[BigInt]) -> MCheck {
    let fail = |i| MCheck { is_m: false, failure: Some(i) };
    match k.first() {
        None => return MCheck { is_m: true, failure: None },
        Some(k0) if !k0.is_one() => return fail(0),
        _ => {}
    }
    if k.len() > 1 && k[1].is_negative() {
        return fail(1);
    }
    for i in 1..k.len().saturating_sub(1) {
        let next = &k[i + 1];
        if next.is_negative() {
            return fail(i + 1);
        }
        let bound = pseudopower(k[i].magnitude(), i).expect("i >= 1");
        if next.magnitude() > &bound {
            return fail(i + 1);
        }
    }
    MCheck { is_m: true, failure: None }
}

/// The three conditions of the g-theorem, reported separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GConditions {
    /// `h_i = h_{d-i}`.
    pub dehn_sommerville: bool,
    /// `1 = h_0 <= h_1 <= ... <= h_⌊d/2⌋`.
    pub unimodal: bool,
    /// The g-vector is an M-vector.
    pub g_is_m: bool,
}

impl GConditions {
    pub fn all(&self) -> bool {
        self.dehn_sommerville && self.unimodal && self.g_is_m
    }
}

pub fn check_g_conditions(h: &GradedVector) -> GConditions {
    let e = &h.entries;
    if e.is_empty() {
        return GConditions { dehn_sommerville: true, unimodal: false, g_is_m: false };
    }
    let d = e.len() - 1;
    let dehn_sommerville = (0..=d).all(|i| e[i] == e[d - i]);
    let unimodal = e[0].is_one() && (1..=d / 2).all(|i| e[i - 1] <= e[i]);
    let g_is_m = is_m_sequence(&g_vector(h).entries).is_m;
    GConditions { dehn_sommerville, unimodal, g_is_m }
}

/// The Grünbaum-Kalai-Sarkaria inequality `f_D <= (D + 2) f_{D-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GksReport {
    pub dim: isize,
    #[serde(with = "wire")]
    pub lhs: BigInt,
    #[serde(with = "wire")]
    pub rhs: BigInt,
    pub holds: bool,
}

/// Evaluates the inequality at the complex's top dimension. This says
/// nothing about embeddability.
pub fn gks_inequality(complex: &SimplicialComplex) -> GksReport {
    let dim = complex.dim();
    let f = |i: isize| -> BigInt {
        if i == -1 {
            BigInt::from(if complex.is_void() { 0 } else { 1 })
        } else if i < -1 {
            BigInt::zero()
        } else {
            BigInt::from(complex.faces_of_dim(i).len())
        }
    };
    let lhs = f(dim);
    let rhs = BigInt::from(dim + 2) * f(dim - 1);
    let holds = lhs <= rhs;
    GksReport { dim, lhs, rhs, holds }
}

/// Result of checking one step against Pachner's g-vector law.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PachnerCheck {
    pub index: usize,
    #[serde(with = "wire::vec")]
    pub g_before: Vec<BigInt>,
    #[serde(with = "wire::vec")]
    pub g_after: Vec<BigInt>,
    /// Entry of g that the move changes, and by how much.
    pub changed: Option<(usize, i32)>,
}

/// Expected g-change for a `k`-move on a `dim`-dimensional manifold: a
/// `k`-move with `k <= ⌊(dim-1)/2⌋` raises `g_{k+1}` by one, its reverse
/// lowers it, and the middle move of an even-dimensional manifold changes
/// nothing.
pub fn expected_g_change(dim: usize, k: usize) -> Option<(usize, i32)> {
    if 2 * k < dim {
        Some((k + 1, 1))
    } else if 2 * k == dim {
        None
    } else {
        Some((dim - k + 1, -1))
    }
}

pub fn pachner_g_delta(
    before: &SimplicialComplex,
    after: &SimplicialComplex,
    mv: &BistellarMove,
) -> Result<PachnerCheck> {
    let dim = before.dim();
    if dim < 0 || after.dim() != dim {
        return Err(Error::LawViolated("move changed the dimension".into()));
    }
    let g0 = g_vector(&h_vector(before)).entries;
    let g1 = g_vector(&h_vector(after)).entries;
    let changed = expected_g_change(dim as usize, mv.index);
    let mut expected = g0.clone();
    if let Some((i, delta)) = changed {
        expected[i] += delta;
    }
    if expected != g1 {
        return Err(Error::LawViolated(format!(
            "{}-move took g from {:?} to {:?}, expected {:?}",
            mv.index,
            g0.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            g1.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            expected.iter().map(|x| x.to_string()).collect::<Vec<_>>()
        )));
    }
    Ok(PachnerCheck { index: mv.index, g_before: g0, g_after: g1, changed })
}

/// Parses a comma-separated integer list as produced by [`GradedVector::to_csv`].
pub fn parse_csv(kind: VectorKind, s: &str) -> Result<GradedVector> {
    let entries = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .enumerate()
        .map(|(i, t)| {
            t.trim().parse::<BigInt>().map_err(|e| Error::Parse { line: 1, message: format!("entry {i}: {e}") })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedVector::new(kind, entries))
}

/// Converts to `i64`s, for tests and reports on small values.
pub fn small(v: &GradedVector) -> Vec<i64> {
    v.entries
        .iter()
        .map(|e| {
            let (sign, digits) = e.to_u64_digits();
            let m = digits.first().copied().unwrap_or(0) as i64;
            if sign == Sign::Minus {
                -m
            } else {
                m
            }
        })
        .collect()
}
