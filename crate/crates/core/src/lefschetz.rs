//! Weak Lefschetz elements of `k[Δ]/Θ` and the manifold invariants built on
//! the same quotient: Schenzel's `h'`, Kalai's `h''`/`g''` and the socle of a
//! homology manifold.
//!
//! A linear form `ω` is a weak Lefschetz element when every map
//! `·ω: (k[Δ]/Θ)_i → (k[Δ]/Θ)_{i+1}`, `i < d`, is injective or surjective.
//! Verdicts always come from exact ranks.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::{apply_bistellar, boundary_simplex, simplex, BistellarMove, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::homology::{
    is_buchsbaum, is_cohen_macaulay, is_gorenstein_star, is_homology_sphere, is_orientable, reduced_betti,
};
use crate::linalg::{random_vector, rank, Matrix};
use crate::ring::{
    artinian_reduction, artinian_reduction_upto, is_generic, is_lsop, random_lsop, GradedQuotient, LinearSystem,
    LSOP_RETRIES,
};
use crate::vectors::{binomial_i, h_vector, is_m_sequence, GradedVector, MCheck, VectorKind};
use crate::with_field;

/// RNG stream used to extend `Θ` and `ω` to vertices created by a move.
const TRANSFER_STREAM: u64 = 1 << 32;

/// The generator for trial `trial` of a seeded search: one ChaCha stream per
/// trial, so trials are independent of each other and of their order.
pub fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapVerdict {
    Bijective,
    Injective,
    Surjective,
    Neither,
}

impl MapVerdict {
    fn classify(rank: usize, source: usize, target: usize) -> Self {
        match (rank == source, rank == target) {
            (true, true) => MapVerdict::Bijective,
            (true, false) => MapVerdict::Injective,
            (false, true) => MapVerdict::Surjective,
            (false, false) => MapVerdict::Neither,
        }
    }

    pub fn passes(self) -> bool {
        self != MapVerdict::Neither
    }
}

/// Rank data of `·ω` out of one degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeVerdict {
    pub degree: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub verdict: MapVerdict,
}

/// `(Θ, ω)` parsed back from a certificate.
pub type Decoded<E> = (LinearSystem<E>, Vec<E>);

/// A pair `(ω, Θ)` with the verdict of `·ω` in every degree `i < d`.
///
/// Entries are stored in the canonical text form of their field (`a/b` or
/// `a` over Q, a residue in `[0, p)` over `F_p`), so a certificate can be
/// re-checked bit for bit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WlpCertificate {
    pub field: FieldSpec,
    pub seed: Option<u64>,
    /// Trials used by the search that produced this pair (1-based).
    pub tries: usize,
    /// Whether every maximal minor of `Θ` checked was nonzero.
    pub generic: bool,
    pub vertices: Vec<u32>,
    pub theta: Vec<Vec<String>>,
    pub omega: Vec<String>,
    pub dims: Vec<usize>,
    pub verdicts: Vec<DegreeVerdict>,
    pub certified_over_q: bool,
}

impl WlpCertificate {
    pub fn is_wle(&self) -> bool {
        self.verdicts.iter().all(|v| v.verdict.passes())
    }

    pub fn failing_degrees(&self) -> Vec<usize> {
        self.verdicts.iter().filter(|v| !v.verdict.passes()).map(|v| v.degree).collect()
    }

    /// Parses `Θ` and `ω` back over `field`, which must match the
    /// certificate's own field.
    pub fn decode<F: Field>(&self, field: &F) -> Result<Decoded<F::Elem>> {
        if field.spec() != self.field {
            return Err(Error::InvalidField(format!("certificate is over {}, not {}", self.field, field.spec())));
        }
        self.decode_with(|s| field.parse(s))
    }

    fn decode_with<E: Clone>(&self, parse: impl Fn(&str) -> Result<E>) -> Result<Decoded<E>> {
        let m = self.vertices.len();
        let rows = self
            .theta
            .iter()
            .map(|r| r.iter().map(|s| parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let theta = Matrix::from_rows(m, rows)?;
        let omega = self.omega.iter().map(|s| parse(s)).collect::<Result<Vec<_>>>()?;
        if omega.len() != m {
            return Err(Error::LengthMismatch { expected: m, got: omega.len() });
        }
        Ok((LinearSystem::new(self.vertices.clone(), theta), omega))
    }
}

fn verdicts<F: Field>(q: &GradedQuotient<F>, omega: &[F::Elem]) -> Result<Vec<DegreeVerdict>> {
    (0..q.top_degree())
        .map(|i| {
            let map = q.multiplication_map(omega, i)?;
            let r = rank(q.field(), &map);
            let (source_dim, target_dim) = (q.dim(i), q.dim(i + 1));
            Ok(DegreeVerdict {
                degree: i,
                source_dim,
                target_dim,
                rank: r,
                verdict: MapVerdict::classify(r, source_dim, target_dim),
            })
        })
        .collect()
}

fn certificate<F: Field>(
    q: &GradedQuotient<F>,
    omega: &[F::Elem],
    seed: Option<u64>,
    tries: usize,
    generic: bool,
) -> Result<WlpCertificate> {
    let f = q.field();
    let sys = q.system();
    Ok(WlpCertificate {
        field: f.spec(),
        seed,
        tries,
        generic,
        vertices: sys.vertices.clone(),
        theta: sys.theta.to_rows().iter().map(|r| r.iter().map(|x| f.format(x)).collect()).collect(),
        omega: omega.iter().map(|x| f.format(x)).collect(),
        dims: q.dims(),
        verdicts: verdicts(q, omega)?,
        certified_over_q: false,
    })
}

/// Verdicts of `·ω` in every degree below `d`, for a Cohen-Macaulay complex.
/// The certificate is returned whether or not `ω` passes; see
/// [`WlpCertificate::is_wle`].
pub fn check_wle<F: Field>(
    complex: &SimplicialComplex,
    system: &LinearSystem<F::Elem>,
    omega: &[F::Elem],
    field: &F,
) -> Result<WlpCertificate> {
    if !is_lsop(complex, system, field)? {
        return Err(Error::NotLsop);
    }
    if !is_cohen_macaulay(complex, field) {
        return Err(Error::NotCohenMacaulay);
    }
    let q = artinian_reduction(complex, system, field)?;
    certificate(&q, omega, None, 1, is_generic(field, &system.theta).generic)
}

/// Surjectivity of `·ω` from degree `⌊d/2⌋` to `⌊d/2⌋ + 1`, which decides
/// the weak Lefschetz property for Gorenstein* complexes.
pub fn check_wle_middle<F: Field>(
    complex: &SimplicialComplex,
    system: &LinearSystem<F::Elem>,
    omega: &[F::Elem],
    field: &F,
) -> Result<bool> {
    if !is_gorenstein_star(complex, field) {
        return Err(Error::NotGorensteinStar);
    }
    let d = complex.krull_dim();
    let mid = d / 2;
    if mid + 1 > d {
        return Ok(true);
    }
    let q = artinian_reduction_upto(complex, system, field, mid + 1)?;
    let map = q.multiplication_map(omega, mid)?;
    Ok(rank(field, &map) == q.dim(mid + 1))
}

/// Seeded search for a weak Lefschetz element: each trial samples an
/// l.s.o.p. `Θ`, then `ω`, from its own RNG stream.
pub fn find_wle<F: Field>(
    complex: &SimplicialComplex,
    field: &F,
    seed: u64,
    max_tries: usize,
) -> Result<WlpCertificate> {
    if !is_cohen_macaulay(complex, field) {
        return Err(Error::NotCohenMacaulay);
    }
    for trial in 0..max_tries {
        let mut rng = trial_rng(seed, trial);
        let system = match random_lsop(complex, field, &mut rng) {
            Ok(s) => s,
            Err(Error::GenericityExhausted(_)) => continue,
            Err(e) => return Err(e),
        };
        let omega = random_vector(field, complex.num_vertices(), &mut rng);
        let q = artinian_reduction(complex, &system, field)?;
        let generic = is_generic(field, &system.theta).generic;
        let cert = certificate(&q, &omega, Some(seed), trial + 1, generic)?;
        if cert.is_wle() {
            return Ok(cert);
        }
    }
    Err(Error::SearchExhausted(max_tries))
}

/// Seeded search for `ω` with `Θ` held fixed.
pub fn find_wle_for_system<F: Field>(
    complex: &SimplicialComplex,
    system: &LinearSystem<F::Elem>,
    field: &F,
    seed: u64,
    max_tries: usize,
) -> Result<WlpCertificate> {
    let q = artinian_reduction(complex, system, field)?;
    let generic = is_generic(field, &system.theta).generic;
    for trial in 0..max_tries {
        let omega = random_vector(field, complex.num_vertices(), &mut trial_rng(seed, trial));
        let cert = certificate(&q, &omega, Some(seed), trial + 1, generic)?;
        if cert.is_wle() {
            return Ok(cert);
        }
    }
    Err(Error::SearchExhausted(max_tries))
}

/// Recomputes a certificate's verdicts over its own field.
pub fn verify_certificate(complex: &SimplicialComplex, cert: &WlpCertificate) -> Result<WlpCertificate> {
    with_field!(cert.field, f => {
        let (system, omega) = cert.decode(f)?;
        let q = artinian_reduction(complex, &system, f)?;
        let mut out = certificate(&q, &omega, cert.seed, cert.tries, is_generic(f, &system.theta).generic)?;
        out.certified_over_q = cert.certified_over_q && cert.field == FieldSpec::Rational;
        Ok(out)
    })
}

/// Re-runs a certificate over Q. Residues mod `p` are lifted to the integers
/// in `(-p/2, p/2]`; a lift of an l.s.o.p. mod `p` is an l.s.o.p. over Q,
/// since its facet minors are nonzero mod `p`.
pub fn certify_over_q(complex: &SimplicialComplex, cert: &WlpCertificate) -> Result<WlpCertificate> {
    let q = Rationals;
    let (system, omega) = match cert.field {
        FieldSpec::Rational => cert.decode(&q)?,
        FieldSpec::Prime(p) => {
            let pf = PrimeField::new(p)?;
            cert.decode_with(|s| Ok(BigRational::from_integer(pf.lift(pf.parse(s)?))))?
        }
    };
    let quotient = artinian_reduction(complex, &system, &q)?;
    let mut out = certificate(&quotient, &omega, cert.seed, cert.tries, is_generic(&q, &system.theta).generic)?;
    out.certified_over_q = out.is_wle();
    Ok(out)
}

/// Outcome of carrying a weak Lefschetz element across a bistellar move.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferReport {
    #[serde(rename = "move")]
    pub mv: BistellarMove,
    /// `d = 2n + 1` and the move has index `n`.
    pub middle: bool,
    /// Vertex whose variable repaired `ω`; `None` when `ω` was kept as is.
    pub variable: Option<u32>,
    /// `ω + t·x_variable` is the new element; `Some(0)` when `ω` itself
    /// still works, `None` after a fallback search.
    pub t: Option<u64>,
    /// Nonzero values of `t` tried.
    pub tried: usize,
    pub fallback: bool,
    pub certificate: WlpCertificate,
}

/// Carries a certified `(ω, Θ)` from `before` to `χ_σ(before)`.
///
/// `Θ` and `ω` keep their values on surviving vertices; a vertex created by
/// the move gets fresh random values. If `ω` fails on the new complex, the
/// candidates `ω + t·x_v` are scanned for `t = 1, 2, ..., d·h_n + 1` and
/// `v` running over the replacement face of the move in increasing order.
pub fn wle_transfer(before: &SimplicialComplex, cert: &WlpCertificate, mv: &BistellarMove) -> Result<TransferReport> {
    with_field!(cert.field, f => transfer_in(before, cert, mv, f))
}

fn transfer_in<F: Field>(
    before: &SimplicialComplex,
    cert: &WlpCertificate,
    mv: &BistellarMove,
    field: &F,
) -> Result<TransferReport> {
    if !cert.is_wle() {
        return Err(Error::HypothesisViolated("certificate is not a weak Lefschetz element".into()));
    }
    if cert.vertices != before.vertices() {
        return Err(Error::HypothesisViolated("certificate belongs to a different vertex set".into()));
    }
    let after = apply_bistellar(before, mv)?;
    let (system, omega) = cert.decode(field)?;
    let d = before.krull_dim();
    let middle = d % 2 == 1 && mv.index == d / 2;

    let old: HashMap<u32, usize> = cert.vertices.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let fresh = after.vertices().iter().any(|v| !old.contains_key(v));
    let mut rng = ChaCha8Rng::seed_from_u64(cert.seed.unwrap_or(0));
    rng.set_stream(TRANSFER_STREAM);
    let mut extended = None;
    for _ in 0..LSOP_RETRIES {
        let mut columns = Vec::with_capacity(after.num_vertices());
        let mut new_omega = Vec::with_capacity(after.num_vertices());
        for v in after.vertices() {
            match old.get(v) {
                Some(&k) => {
                    columns.push(system.theta.column(k));
                    new_omega.push(omega[k].clone());
                }
                None => {
                    columns.push(random_vector(field, d, &mut rng));
                    new_omega.push(field.random(&mut rng));
                }
            }
        }
        let theta = Matrix::from_rows(d, columns)?.transpose();
        let sys = LinearSystem::new(after.vertices().to_vec(), theta);
        if is_lsop(&after, &sys, field)? {
            extended = Some((sys, new_omega));
            break;
        }
        if !fresh {
            break;
        }
    }
    let (sys, omega) = extended.ok_or(Error::NotLsop)?;
    let q = artinian_reduction(&after, &sys, field)?;
    let generic = is_generic(field, &sys.theta).generic;
    let report = |variable, t, tried, certificate| TransferReport {
        mv: mv.clone(),
        middle,
        variable,
        t,
        tried,
        fallback: false,
        certificate,
    };

    let base = certificate(&q, &omega, cert.seed, cert.tries, generic)?;
    if base.is_wle() {
        return Ok(report(None, Some(0), 0, base));
    }
    let n = d / 2;
    let bound = (d * q.dim(n) + 1) as u64;
    let mut replacement = mv.replacement.clone();
    replacement.sort_unstable();
    let mut tried = 0;
    for v in replacement {
        let Ok(p) = after.vertices().binary_search(&v) else { continue };
        for t in 1..=bound {
            let mut candidate = omega.clone();
            candidate[p] = field.add(&candidate[p], &field.from_i64(t as i64));
            tried += 1;
            let c = certificate(&q, &candidate, cert.seed, cert.tries, generic)?;
            if c.is_wle() {
                return Ok(report(Some(v), Some(t), tried, c));
            }
        }
    }
    Err(Error::TransferFailed { tried })
}

/// [`wle_transfer`], falling back to a fresh [`find_wle`] on the new complex
/// when the scan fails or `Θ` does not extend.
pub fn wle_transfer_or_search(
    before: &SimplicialComplex,
    cert: &WlpCertificate,
    mv: &BistellarMove,
    max_tries: usize,
) -> Result<TransferReport> {
    let tried = match wle_transfer(before, cert, mv) {
        Ok(r) => return Ok(r),
        Err(Error::TransferFailed { tried }) => tried,
        Err(Error::NotLsop) => 0,
        Err(e) => return Err(e),
    };
    let after = apply_bistellar(before, mv)?;
    let d = before.krull_dim();
    let certificate = with_field!(cert.field, f => find_wle(&after, f, cert.seed.unwrap_or(0), max_tries)?);
    Ok(TransferReport {
        mv: mv.clone(),
        middle: d % 2 == 1 && mv.index == d / 2,
        variable: None,
        t: None,
        tried,
        fallback: true,
        certificate,
    })
}

/// Generic `·ω` from degree 1 to degree 2 on a connected homology manifold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidityReport {
    pub field: FieldSpec,
    pub seed: u64,
    /// Quotient dimensions in degrees 0, 1, 2.
    pub dims: Vec<usize>,
    pub rank: usize,
    pub injective: bool,
    /// `dims[0] <= dims[1] <= dims[2]`.
    pub monotone: bool,
    /// The complex has dimension at least 3.
    pub hypothesis_met: bool,
}

pub fn rigidity_check<F: Field>(complex: &SimplicialComplex, field: &F, seed: u64) -> Result<RigidityReport> {
    if !complex.is_pure() || !crate::homology::is_homology_manifold(complex, field)? {
        return Err(Error::NotAManifold);
    }
    if !complex.is_connected() {
        return Err(Error::NotConnected);
    }
    if complex.krull_dim() < 2 {
        return Err(Error::HypothesisViolated("degree 2 needs dimension at least 1".into()));
    }
    let mut rng = trial_rng(seed, 0);
    let system = random_lsop(complex, field, &mut rng)?;
    let omega = random_vector(field, complex.num_vertices(), &mut rng);
    let q = artinian_reduction_upto(complex, &system, field, 2)?;
    let r = rank(field, &q.multiplication_map(&omega, 1)?);
    let dims = q.dims();
    Ok(RigidityReport {
        field: field.spec(),
        seed,
        injective: r == dims[1],
        monotone: dims[0] <= dims[1] && dims[1] <= dims[2],
        rank: r,
        dims,
        hypothesis_met: complex.dim() >= 3,
    })
}

/// Nonvanishing of face monomials in the top degree of a ball-like join.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceMonomialReport {
    pub field: FieldSpec,
    pub seed: u64,
    pub facets: Vec<Face>,
    pub degree: usize,
    /// Dimension of the quotient in `degree`; 1 when the lemma applies.
    pub degree_dim: usize,
    pub checked: usize,
    /// Faces whose monomial vanishes.
    pub failures: Vec<Face>,
}

impl FaceMonomialReport {
    pub fn holds(&self) -> bool {
        self.degree_dim == 1 && self.failures.is_empty()
    }
}

fn face_monomials_nonzero<F: Field>(
    complex: SimplicialComplex,
    faces: Vec<Face>,
    degree: usize,
    field: &F,
    seed: u64,
) -> Result<FaceMonomialReport> {
    let mut rng = trial_rng(seed, 0);
    let system = random_lsop(&complex, field, &mut rng)?;
    let q = artinian_reduction_upto(&complex, &system, field, degree)?;
    let mut failures = Vec::new();
    for face in &faces {
        if q.face_monomial_class(face)?.iter().all(|x| field.is_zero(x)) {
            failures.push(face.clone());
        }
    }
    Ok(FaceMonomialReport {
        field: field.spec(),
        seed,
        degree,
        degree_dim: q.dim(degree),
        checked: faces.len(),
        failures,
        facets: complex.facets().to_vec(),
    })
}

/// In `Δ = Δ^i * ∂Δ^j` with generic `Θ`, every face monomial of degree `j`
/// is nonzero, and the degree-`j` piece is one-dimensional.
pub fn lemma35_check<F: Field>(i: usize, j: usize, field: &F, seed: u64) -> Result<FaceMonomialReport> {
    if j == 0 {
        return Err(Error::HypothesisViolated("j must be at least 1".into()));
    }
    let sphere = boundary_simplex(j);
    let complex = simplex(i).shifted(sphere.max_label()).join(&sphere)?;
    let faces = complex.faces_of_size(j).to_vec();
    face_monomials_nonzero(complex, faces, j, field, seed)
}

/// For a homology `(j-1)`-sphere `L` and a vertex `v` whose link is the
/// boundary of a simplex, every degree-`j` face monomial of `Δ^i * L`
/// through `v` is nonzero.
pub fn lemma36_check<F: Field>(
    i: usize,
    sphere: &SimplicialComplex,
    v: u32,
    field: &F,
    seed: u64,
) -> Result<FaceMonomialReport> {
    if sphere.is_void() || sphere.dim() < 0 || !is_homology_sphere(sphere, field)? {
        return Err(Error::HypothesisViolated("L is not a homology sphere".into()));
    }
    if sphere.vertices().binary_search(&v).is_err() {
        return Err(Error::HypothesisViolated(format!("{v} is not a vertex of L")));
    }
    let j = sphere.krull_dim();
    let link = sphere.link(&[v])?;
    let simplex_link = if j == 1 {
        link == SimplicialComplex::empty_face()
    } else {
        link.num_vertices() == j && link.is_simplex_boundary()
    };
    if !simplex_link {
        return Err(Error::HypothesisViolated(format!("link of {v} is not the boundary of a simplex")));
    }
    let complex = simplex(i).shifted(sphere.max_label()).join(sphere)?;
    let faces = complex.faces_of_size(j).iter().filter(|f| f.binary_search(&v).is_ok()).cloned().collect();
    face_monomials_nonzero(complex, faces, j, field, seed)
}

/// `h'_i = h_i - C(d, i) Σ_{j=1}^{i-1} (-1)^j β̃_{i-j-1}`.
pub fn schenzel_h_prime(h: &GradedVector, betti: &[usize]) -> GradedVector {
    let d = h.len().saturating_sub(1) as i64;
    let b = |k: i64| BigInt::from(if k < -1 { 0 } else { betti.get((k + 1) as usize).copied().unwrap_or(0) });
    let entries = h
        .entries
        .iter()
        .enumerate()
        .map(|(i, hi)| {
            let i = i as i64;
            let mut sum = BigInt::from(0);
            for j in 1..i {
                let term = b(i - j - 1);
                if j % 2 == 0 {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            hi - binomial_i(d, i) * sum
        })
        .collect();
    GradedVector::new(VectorKind::HPrime, entries)
}

/// `h''_i = h'_i - C(d, i) β̃_{i-1}` for `i < d`, and `h''_d = h'_d`.
pub fn kalai_h_doubleprime(h_prime: &GradedVector, betti: &[usize]) -> GradedVector {
    let d = h_prime.len().saturating_sub(1);
    let entries = h_prime
        .entries
        .iter()
        .enumerate()
        .map(|(i, hi)| {
            if i == d || i == 0 {
                return hi.clone();
            }
            let b = betti.get(i).copied().unwrap_or(0);
            hi - binomial_i(d as i64, i as i64) * BigInt::from(b)
        })
        .collect();
    GradedVector::new(VectorKind::HDoublePrime, entries)
}

/// `g''_i = h''_i - h''_{i-1}` for `0 <= i <= ⌊d/2⌋`.
pub fn g_from_h_doubleprime(h2: &GradedVector) -> GradedVector {
    let d = h2.len().saturating_sub(1);
    let e = &h2.entries;
    let entries = (0..=d / 2).take(e.len()).map(|i| if i == 0 { e[0].clone() } else { &e[i] - &e[i - 1] }).collect();
    GradedVector::new(VectorKind::GDoublePrime, entries)
}

/// `h'` computed from quotient dimensions and from Schenzel's formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HPrimeReport {
    pub field: FieldSpec,
    pub seed: u64,
    pub betti: Vec<usize>,
    pub h: GradedVector,
    pub ring: GradedVector,
    pub formula: GradedVector,
}

/// Both computations of `h'` for a Buchsbaum complex; they must agree.
pub fn h_prime<F: Field>(complex: &SimplicialComplex, field: &F, seed: u64) -> Result<HPrimeReport> {
    if !is_buchsbaum(complex, field) {
        return Err(Error::NotBuchsbaum);
    }
    let betti = reduced_betti(complex, field).betti;
    let h = h_vector(complex);
    let formula = schenzel_h_prime(&h, &betti);
    let mut rng = trial_rng(seed, 0);
    let system = random_lsop(complex, field, &mut rng)?;
    let q = artinian_reduction(complex, &system, field)?;
    let ring = GradedVector::new(VectorKind::HPrime, q.dims().into_iter().map(BigInt::from).collect());
    for (i, (r, f)) in ring.entries.iter().zip(&formula.entries).enumerate() {
        if r != f {
            return Err(Error::SchenzelMismatch { degree: i, ring: r.to_string(), formula: f.to_string() });
        }
    }
    Ok(HPrimeReport { field: field.spec(), seed, betti, h, ring, formula })
}

pub fn h_doubleprime<F: Field>(complex: &SimplicialComplex, field: &F, seed: u64) -> Result<GradedVector> {
    let r = h_prime(complex, field, seed)?;
    Ok(kalai_h_doubleprime(&r.ring, &r.betti))
}

pub fn g_doubleprime<F: Field>(complex: &SimplicialComplex, field: &F, seed: u64) -> Result<GradedVector> {
    Ok(g_from_h_doubleprime(&h_doubleprime(complex, field, seed)?))
}

/// Socle dimensions of an orientable homology manifold and the pairing on
/// the quotient by the socle below the top degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SocleReport {
    pub field: FieldSpec,
    pub seed: u64,
    pub betti: Vec<usize>,
    pub dims: Vec<usize>,
    pub socle: Vec<usize>,
    /// `C(d, i) β̃_{i-1}` for `1 <= i <= d - 1`, zero elsewhere.
    pub expected_socle: Vec<usize>,
    pub quotient_dims: Vec<usize>,
    /// Rank of the pairing of degrees `j` and `d - j` into degree `d`.
    pub pairing_ranks: Vec<usize>,
    pub nondegenerate: bool,
}

/// Checks `dim Soc_i = C(d, i) β̃_{i-1}` for `0 < i < d`, then the pairing of
/// `A/I` with `I` the socle below degree `d`.
pub fn novik_swartz_check<F: Field>(complex: &SimplicialComplex, field: &F, seed: u64) -> Result<SocleReport> {
    if is_orientable(complex, field) != Ok(true) {
        return Err(Error::NotOrientableManifold);
    }
    let d = complex.krull_dim();
    let betti = reduced_betti(complex, field).betti;
    let mut rng = trial_rng(seed, 0);
    let system = random_lsop(complex, field, &mut rng)?;
    let q = artinian_reduction(complex, &system, field)?;
    let dims = q.dims();
    let socle = q.socle().dims;
    let expected_socle: Vec<usize> = (0..=d)
        .map(|i| {
            if i == 0 || i == d {
                return 0;
            }
            let c: usize = binomial_i(d as i64, i as i64).try_into().expect("binomial fits in usize");
            c * betti[i]
        })
        .collect();
    for i in 1..d {
        if socle[i] != expected_socle[i] {
            return Err(Error::FormulaMismatch(format!(
                "socle in degree {i} has dimension {}, expected {}",
                socle[i], expected_socle[i]
            )));
        }
    }
    if dims[d] != 1 {
        return Err(Error::FormulaMismatch(format!("top degree has dimension {}", dims[d])));
    }
    let quotient_dims: Vec<usize> = (0..=d).map(|i| if i == d { dims[i] } else { dims[i] - socle[i] }).collect();
    let mut pairing_ranks = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let k = d - j;
        let mut rows = Vec::with_capacity(dims[j]);
        for face in q.basis(j) {
            let row = (0..dims[k])
                .map(|b| {
                    let mut e = vec![field.zero(); dims[k]];
                    e[b] = field.one();
                    let top = if j == 0 { e } else { q.multiply_by_monomial(k, &e, &face)? };
                    Ok(top[0].clone())
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        let r = if rows.is_empty() || dims[k] == 0 { 0 } else { rank(field, &Matrix::from_rows(dims[k], rows)?) };
        pairing_ranks.push(r);
    }
    let nondegenerate =
        (0..=d).all(|j| pairing_ranks[j] == quotient_dims[j] && quotient_dims[j] == quotient_dims[d - j]);
    Ok(SocleReport {
        field: field.spec(),
        seed,
        betti,
        dims,
        socle,
        expected_socle,
        quotient_dims,
        pairing_ranks,
        nondegenerate,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KalaiReport {
    pub h_doubleprime: GradedVector,
    pub g_doubleprime: GradedVector,
    pub m_check: MCheck,
}

/// `g''` of a Buchsbaum complex and whether it is an M-vector.
pub fn kalai_g_check<F: Field>(complex: &SimplicialComplex, field: &F, seed: u64) -> Result<KalaiReport> {
    let h2 = h_doubleprime(complex, field, seed)?;
    let g2 = g_from_h_doubleprime(&h2);
    let m_check = is_m_sequence(&g2.entries);
    Ok(KalaiReport { h_doubleprime: h2, g_doubleprime: g2, m_check })
}
