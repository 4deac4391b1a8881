//! Stanley-Reisner rings `k[Δ]` and their Artinian reductions `k[Δ]/Θ`.
//!
//! Degree `i` of `k[Δ]/Θ` is spanned by the squarefree face monomials, and
//! the relations among them are spanned by the products `ψ·x_τ` with `τ` a
//! face of size `i - 1` and `ψ ∈ span Θ` vanishing on `τ` (the linear stress
//! conditions). These are echelonized over the faces of size `i` in
//! lexicographic order; the non-pivot faces are the standard monomials.
//!
//! Products leaving the squarefree basis are rewritten modulo `Θ`: if
//! `M = x_v M'` has support `σ` with `v` repeated, the l.s.o.p. property gives
//! a form `c ∈ span Θ` with `c|_σ = x_v`, so `M ≡ -Σ_{u ∈ lk σ} c_u x_u M'`,
//! whose terms have strictly larger support.

use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{det, kernel_basis, random_matrix, rank, solve, EchelonBasis, Matrix, Rref};
use crate::vectors::{binomial_i, h_vector, GradedVector, VectorKind};

/// Resampling budget for [`random_lsop`].
pub const LSOP_RETRIES: usize = 32;

/// Linear forms `θ_1..θ_d` as the rows of `M_Θ`, with columns indexed by the
/// complex's vertices in increasing order, plus an optional extra form `ω`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem<E> {
    pub vertices: Vec<u32>,
    pub theta: Matrix<E>,
    pub omega: Option<Vec<E>>,
}

impl<E: Clone> LinearSystem<E> {
    pub fn new(vertices: Vec<u32>, theta: Matrix<E>) -> Self {
        LinearSystem { vertices, theta, omega: None }
    }

    pub fn with_omega(mut self, omega: Vec<E>) -> Self {
        self.omega = Some(omega);
        self
    }

    pub fn num_forms(&self) -> usize {
        self.theta.rows()
    }

    fn check_shape(&self, complex: &SimplicialComplex) -> Result<()> {
        if self.vertices != complex.vertices() || self.theta.cols() != self.vertices.len() {
            return Err(Error::ShapeMismatch(format!(
                "system on {} columns for a complex with {} vertices",
                self.theta.cols(),
                complex.num_vertices()
            )));
        }
        if self.theta.rows() != complex.krull_dim() {
            return Err(Error::ShapeMismatch(format!(
                "{} forms for a complex of Krull dimension {}",
                self.theta.rows(),
                complex.krull_dim()
            )));
        }
        Ok(())
    }
}

/// Random `d×m` systems until one is an l.s.o.p.
pub fn random_lsop<F: Field, R: Rng + ?Sized>(
    complex: &SimplicialComplex,
    field: &F,
    rng: &mut R,
) -> Result<LinearSystem<F::Elem>> {
    let d = complex.krull_dim();
    for _ in 0..LSOP_RETRIES {
        let sys = LinearSystem::new(complex.vertices().to_vec(), random_matrix(field, d, complex.num_vertices(), rng));
        if is_lsop(complex, &sys, field)? {
            return Ok(sys);
        }
    }
    Err(Error::GenericityExhausted(LSOP_RETRIES))
}

/// `Θ` is an l.s.o.p. iff its restriction to every facet has full rank.
pub fn is_lsop<F: Field>(complex: &SimplicialComplex, system: &LinearSystem<F::Elem>, field: &F) -> Result<bool> {
    system.check_shape(complex)?;
    let pos = positions(complex);
    Ok(complex.facets().iter().all(|facet| {
        let cols: Vec<usize> = facet.iter().map(|v| pos[v]).collect();
        rank(field, &system.theta.select_columns(&cols)) == facet.len()
    }))
}

fn positions(complex: &SimplicialComplex) -> HashMap<u32, usize> {
    complex.vertices().iter().enumerate().map(|(i, &v)| (v, i)).collect()
}

/// Outcome of the all-minors genericity test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericityReport {
    pub generic: bool,
    /// All `C(m, d)` minors were checked; otherwise a random sample was.
    pub exhaustive: bool,
    pub minors_checked: usize,
}

/// Above this many minors the check samples instead of enumerating.
pub const EXHAUSTIVE_MINOR_LIMIT: u128 = 100_000;
pub const SAMPLED_MINORS: usize = 10_000;

fn choose_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc.saturating_mul((n - t) as u128) / (t as u128 + 1);
        if acc > EXHAUSTIVE_MINOR_LIMIT * 1000 {
            return u128::MAX;
        }
    }
    acc
}

/// Every `d×d` minor of `M_Θ` is nonsingular.
pub fn is_generic<F: Field>(field: &F, theta: &Matrix<F::Elem>) -> GenericityReport {
    let (d, m) = (theta.rows(), theta.cols());
    let nonsingular = |cols: &[usize]| -> bool {
        let minor = theta.select_columns(cols);
        !field.is_zero(&det(field, &minor).expect("square minor"))
    };
    if d > m {
        return GenericityReport { generic: false, exhaustive: true, minors_checked: 0 };
    }
    if choose_u128(m, d) <= EXHAUSTIVE_MINOR_LIMIT {
        let mut cols: Vec<usize> = (0..d).collect();
        let mut checked = 0;
        loop {
            checked += 1;
            if !nonsingular(&cols) {
                return GenericityReport { generic: false, exhaustive: true, minors_checked: checked };
            }
            // Next combination in lexicographic order.
            let Some(k) = (0..d).rev().find(|&k| cols[k] < m - d + k) else {
                break;
            };
            cols[k] += 1;
            for t in k + 1..d {
                cols[t] = cols[t - 1] + 1;
            }
        }
        return GenericityReport { generic: true, exhaustive: true, minors_checked: checked };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for checked in 1..=SAMPLED_MINORS {
        let mut cols = sample(&mut rng, m, d).into_vec();
        cols.sort_unstable();
        if !nonsingular(&cols) {
            return GenericityReport { generic: false, exhaustive: false, minors_checked: checked };
        }
    }
    GenericityReport { generic: true, exhaustive: false, minors_checked: SAMPLED_MINORS }
}

/// A monomial as its non-decreasing list of vertex labels.
type Monomial = Vec<u32>;

fn support(m: &[u32]) -> Face {
    let mut s = m.to_vec();
    s.dedup();
    s
}

fn insert_sorted(m: &[u32], v: u32) -> Monomial {
    let mut out = m.to_vec();
    let at = out.partition_point(|&x| x <= v);
    out.insert(at, v);
    out
}

/// Per-face data for rewriting: the link vertices of `σ`, and for each
/// `v ∈ σ` the values on them of the form `c ∈ span Θ` with `c|_σ = x_v`.
struct FaceDual<E> {
    link: Vec<u32>,
    coeff: Vec<Vec<E>>,
}

/// Monomial normal forms modulo `Θ` in the squarefree basis.
struct Rewriter<'a, F: Field> {
    field: &'a F,
    complex: &'a SimplicialComplex,
    theta: &'a Matrix<F::Elem>,
    pos: HashMap<u32, usize>,
    duals: HashMap<Face, Rc<FaceDual<F::Elem>>>,
    memo: HashMap<Monomial, Rc<Vec<F::Elem>>>,
}

impl<'a, F: Field> Rewriter<'a, F> {
    fn new(field: &'a F, complex: &'a SimplicialComplex, theta: &'a Matrix<F::Elem>) -> Self {
        Rewriter { field, complex, theta, pos: positions(complex), duals: HashMap::new(), memo: HashMap::new() }
    }

    fn dual(&mut self, sigma: &[u32]) -> Result<Rc<FaceDual<F::Elem>>> {
        if let Some(d) = self.duals.get(sigma) {
            return Ok(d.clone());
        }
        let f = self.field;
        let link: Vec<u32> = self
            .complex
            .vertices()
            .iter()
            .copied()
            .filter(|u| sigma.binary_search(u).is_err() && self.complex.contains_face(&insert_sorted(sigma, *u)))
            .collect();
        let d = self.theta.rows();
        // Rows of Θ_σ^T: the columns of M_Θ on σ.
        let a = Matrix::from_rows(d, sigma.iter().map(|v| self.theta.column(self.pos[v])).collect())?;
        let mut coeff = Vec::with_capacity(sigma.len());
        for k in 0..sigma.len() {
            let mut e = vec![f.zero(); sigma.len()];
            e[k] = f.one();
            let y = solve(f, &a, &e)?.ok_or(Error::NotLsop)?;
            coeff.push(
                link.iter()
                    .map(|u| {
                        let col = self.pos[u];
                        let mut acc = f.zero();
                        for (j, yj) in y.iter().enumerate() {
                            if !f.is_zero(yj) {
                                acc = f.add(&acc, &f.mul(yj, self.theta.get(j, col)));
                            }
                        }
                        acc
                    })
                    .collect(),
            );
        }
        let out = Rc::new(FaceDual { link, coeff });
        self.duals.insert(sigma.to_vec(), out.clone());
        Ok(out)
    }

    /// Normal form of a face-support monomial, as coordinates over the
    /// squarefree faces of the same size.
    fn nf(&mut self, mon: &[u32]) -> Result<Rc<Vec<F::Elem>>> {
        let f = self.field;
        let width = self.complex.faces_of_size(mon.len()).len();
        let repeated = mon.windows(2).position(|w| w[0] == w[1]);
        let Some(at) = repeated else {
            let mut out = vec![f.zero(); width];
            let p = self.complex.face_position(mon).expect("squarefree monomial on a face");
            out[p] = f.one();
            return Ok(Rc::new(out));
        };
        if let Some(r) = self.memo.get(mon) {
            return Ok(r.clone());
        }
        let sigma = support(mon);
        let v = mon[at];
        let k = sigma.binary_search(&v).expect("v in support");
        let mut rest = mon.to_vec();
        rest.remove(at);
        let dual = self.dual(&sigma)?;
        let mut out = vec![f.zero(); width];
        for (t, &u) in dual.link.iter().enumerate() {
            let c = &dual.coeff[k][t];
            if f.is_zero(c) {
                continue;
            }
            let child = self.nf(&insert_sorted(&rest, u))?;
            for (o, x) in out.iter_mut().zip(child.iter()) {
                if !f.is_zero(x) {
                    // o -= c * x
                    f.sub_mul_assign(o, c, x);
                }
            }
        }
        let out = Rc::new(out);
        self.memo.insert(mon.to_vec(), out.clone());
        Ok(out)
    }

    /// Rows `ψ·x_τ` over the squarefree faces of size `|τ| + 1`, for `ψ`
    /// running over a basis of the forms in `span Θ` that vanish on `τ`.
    fn vanishing_rows(&mut self, tau: &[u32], faces: &[Face]) -> Result<Vec<Vec<F::Elem>>> {
        let f = self.field;
        let d = self.theta.rows();
        let link = if tau.is_empty() { self.complex.vertices().to_vec() } else { self.dual(tau)?.link.clone() };
        let a = Matrix::from_rows(d, tau.iter().map(|v| self.theta.column(self.pos[v])).collect())?;
        let ker = kernel_basis(f, &a);
        let cols: Vec<(usize, usize)> = link
            .iter()
            .map(|&u| {
                let p = faces.binary_search(&insert_sorted(tau, u)).expect("τ ∪ u is a face");
                (self.pos[&u], p)
            })
            .collect();
        let mut out = Vec::with_capacity(ker.cols());
        for k in 0..ker.cols() {
            let mut row = vec![f.zero(); faces.len()];
            for &(col, p) in &cols {
                let mut acc = f.zero();
                for j in 0..d {
                    let y = ker.get(j, k);
                    if !f.is_zero(y) {
                        acc = f.add(&acc, &f.mul(y, self.theta.get(j, col)));
                    }
                }
                row[p] = acc;
            }
            out.push(row);
        }
        Ok(out)
    }
}

/// One graded piece of the quotient.
#[derive(Debug, Clone)]
struct Degree<E> {
    /// Squarefree faces of this size, in lexicographic order.
    faces: Vec<Face>,
    /// Number of face-support monomials of this degree.
    monomials: usize,
    relations: Rref<E>,
    /// Indices into `faces` of the standard monomials.
    basis: Vec<usize>,
}

/// `k[Δ]/Θ` with explicit bases and multiplication tables.
#[derive(Debug, Clone)]
pub struct GradedQuotient<F: Field> {
    field: F,
    complex: SimplicialComplex,
    system: LinearSystem<F::Elem>,
    degrees: Vec<Degree<F::Elem>>,
    /// `mult[i][p][b]`: class of `x_p · (basis element b of degree i)`.
    mult: Vec<Vec<Vec<Vec<F::Elem>>>>,
}

/// Builds every degree `0..=d` of `k[Δ]/Θ`.
pub fn artinian_reduction<F: Field>(
    complex: &SimplicialComplex,
    system: &LinearSystem<F::Elem>,
    field: &F,
) -> Result<GradedQuotient<F>> {
    artinian_reduction_upto(complex, system, field, complex.krull_dim())
}

/// Builds degrees `0..=top` only (`top <= d`); multiplication is available
/// out of degrees below `top`.
pub fn artinian_reduction_upto<F: Field>(
    complex: &SimplicialComplex,
    system: &LinearSystem<F::Elem>,
    field: &F,
    top: usize,
) -> Result<GradedQuotient<F>> {
    if !is_lsop(complex, system, field)? {
        return Err(Error::NotLsop);
    }
    let d = complex.krull_dim();
    if top > d {
        return Err(Error::DegreeOutOfRange(top));
    }
    let theta = &system.theta;
    let mut rw = Rewriter::new(field, complex, theta);

    let mut degrees = vec![Degree {
        faces: vec![Vec::new()],
        monomials: 1,
        relations: EchelonBasis::new(field.clone(), 1).finish(),
        basis: vec![0],
    }];
    let spanning = hilbert_function(complex, top);
    for i in 1..=top {
        let faces = complex.faces_of_size(i).to_vec();
        let mut ech = EchelonBasis::new(field.clone(), faces.len());
        for tau in complex.faces_of_size(i - 1) {
            if ech.is_full() {
                break;
            }
            for row in rw.vanishing_rows(tau, &faces)? {
                ech.insert(row)?;
            }
        }
        let relations = ech.finish();
        let basis = relations.free_columns();
        let monomials = spanning.entries[i].to_usize().expect("spanning size fits in usize");
        degrees.push(Degree { faces, monomials, relations, basis });
    }

    let mut mult = Vec::with_capacity(top);
    for i in 0..top {
        let (lo, hi) = (&degrees[i], &degrees[i + 1]);
        let mut per_vertex = Vec::with_capacity(complex.num_vertices());
        for &v in complex.vertices() {
            let mut cols = Vec::with_capacity(lo.basis.len());
            for &b in &lo.basis {
                let sigma = &lo.faces[b];
                let prod = insert_sorted(sigma, v);
                if !complex.contains_face(&support(&prod)) {
                    cols.push(vec![field.zero(); hi.basis.len()]);
                    continue;
                }
                let mut vec = rw.nf(&prod)?.as_ref().clone();
                hi.relations.reduce(field, &mut vec);
                cols.push(hi.basis.iter().map(|&c| vec[c].clone()).collect());
            }
            per_vertex.push(cols);
        }
        mult.push(per_vertex);
    }

    Ok(GradedQuotient { field: field.clone(), complex: complex.clone(), system: system.clone(), degrees, mult })
}

impl<F: Field> GradedQuotient<F> {
    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn system(&self) -> &LinearSystem<F::Elem> {
        &self.system
    }

    /// Highest degree built.
    pub fn top_degree(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn dim(&self, i: usize) -> usize {
        self.degrees.get(i).map_or(0, |d| d.basis.len())
    }

    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.basis.len()).collect()
    }

    pub fn dims_vector(&self) -> GradedVector {
        GradedVector::new(VectorKind::Hilbert, self.dims().into_iter().map(BigInt::from).collect())
    }

    /// Standard monomials of degree `i` (squarefree faces).
    pub fn basis(&self, i: usize) -> Vec<Face> {
        self.degrees.get(i).map_or_else(Vec::new, |d| d.basis.iter().map(|&b| d.faces[b].clone()).collect())
    }

    /// Number of face-support monomials of degree `i`, squarefree or not.
    pub fn spanning_size(&self, i: usize) -> usize {
        self.degrees.get(i).map_or(0, |d| d.monomials)
    }

    /// Rank of the degree-`i` relation space inside the span of all
    /// face-support monomials: `spanning_size(i) - dim(i)`.
    pub fn relation_rank(&self, i: usize) -> usize {
        self.spanning_size(i) - self.dim(i)
    }

    fn check_degree(&self, i: usize) -> Result<()> {
        if i >= self.top_degree() {
            return Err(Error::DegreeOutOfRange(i));
        }
        Ok(())
    }

    /// Class of a combination of squarefree faces of size `i`.
    pub fn reduce_squarefree(&self, i: usize, coords: &[F::Elem]) -> Result<Vec<F::Elem>> {
        let deg = self.degrees.get(i).ok_or(Error::DegreeOutOfRange(i))?;
        if coords.len() != deg.faces.len() {
            return Err(Error::LengthMismatch { expected: deg.faces.len(), got: coords.len() });
        }
        let mut v = coords.to_vec();
        deg.relations.reduce(&self.field, &mut v);
        Ok(deg.basis.iter().map(|&c| v[c].clone()).collect())
    }

    /// Class of `x_σ` in the degree-`|σ|` basis.
    pub fn face_monomial_class(&self, face: &[u32]) -> Result<Vec<F::Elem>> {
        if !self.complex.contains_face(face) {
            return Err(Error::NotAFace(face.to_vec()));
        }
        let mut f = face.to_vec();
        f.sort_unstable();
        let i = f.len();
        let deg = self.degrees.get(i).ok_or(Error::DegreeOutOfRange(i))?;
        let p = deg.faces.binary_search(&f).expect("face listed");
        let mut e = vec![self.field.zero(); deg.faces.len()];
        e[p] = self.field.one();
        self.reduce_squarefree(i, &e)
    }

    /// Multiplies a degree-`i` class by the variable of vertex `v`.
    pub fn multiply_by_vertex(&self, i: usize, class: &[F::Elem], v: u32) -> Result<Vec<F::Elem>> {
        self.check_degree(i)?;
        let p = self.complex.vertices().binary_search(&v).map_err(|_| Error::NotAFace(vec![v]))?;
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim(i + 1)];
        for (c, col) in class.iter().zip(&self.mult[i][p]) {
            if f.is_zero(c) {
                continue;
            }
            for (o, x) in out.iter_mut().zip(col) {
                if !f.is_zero(x) {
                    *o = f.add(o, &f.mul(c, x));
                }
            }
        }
        Ok(out)
    }

    /// Multiplies a degree-`i` class by a monomial given as a vertex list.
    pub fn multiply_by_monomial(&self, i: usize, class: &[F::Elem], monomial: &[u32]) -> Result<Vec<F::Elem>> {
        let mut cur = class.to_vec();
        for (k, &v) in monomial.iter().enumerate() {
            cur = self.multiply_by_vertex(i + k, &cur, v)?;
        }
        Ok(cur)
    }

    /// Matrix of `·ω` from degree `i` to degree `i + 1`, columns indexed by
    /// the degree-`i` basis.
    pub fn multiplication_map(&self, omega: &[F::Elem], i: usize) -> Result<Matrix<F::Elem>> {
        self.check_degree(i)?;
        let m = self.complex.num_vertices();
        if omega.len() != m {
            return Err(Error::LengthMismatch { expected: m, got: omega.len() });
        }
        let f = &self.field;
        let (rows, cols) = (self.dim(i + 1), self.dim(i));
        let mut out = Matrix::zeros(f, rows, cols);
        for (p, w) in omega.iter().enumerate() {
            if f.is_zero(w) {
                continue;
            }
            for (b, col) in self.mult[i][p].iter().enumerate() {
                for (r, x) in col.iter().enumerate() {
                    if !f.is_zero(x) {
                        let cur = out.get(r, b).clone();
                        out.set(r, b, f.add(&cur, &f.mul(w, x)));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Socle dimensions and bases in every built degree. The top degree of a
    /// full reduction is entirely socle.
    pub fn socle(&self) -> Socle<F::Elem> {
        let f = &self.field;
        let mut dims = Vec::with_capacity(self.degrees.len());
        let mut bases = Vec::with_capacity(self.degrees.len());
        for i in 0..=self.top_degree() {
            let n = self.dim(i);
            let basis = if i == self.top_degree() {
                Matrix::identity(f, n)
            } else {
                let blocks: Vec<Matrix<F::Elem>> = self.mult[i]
                    .iter()
                    .map(|cols| {
                        let mut mtx = Matrix::zeros(f, self.dim(i + 1), n);
                        for (b, col) in cols.iter().enumerate() {
                            for (r, x) in col.iter().enumerate() {
                                mtx.set(r, b, x.clone());
                            }
                        }
                        mtx
                    })
                    .collect();
                let stacked = Matrix::vstack(n, &blocks).expect("blocks share width");
                kernel_basis(f, &stacked)
            };
            dims.push(basis.cols());
            bases.push(basis);
        }
        Socle { dims, bases }
    }
}

/// `Soc_i` for each degree; `bases[i]` holds basis vectors as columns.
#[derive(Debug, Clone)]
pub struct Socle<E> {
    pub dims: Vec<usize>,
    pub bases: Vec<Matrix<E>>,
}

/// `dim k[Δ]_i = Σ_{∅≠σ∈Δ} C(i-1, |σ|-1)` for `i = 0..=i_max`.
pub fn hilbert_function(complex: &SimplicialComplex, i_max: usize) -> GradedVector {
    let mut out = Vec::with_capacity(i_max + 1);
    for i in 0..=i_max {
        if i == 0 {
            out.push(BigInt::from(if complex.is_void() { 0 } else { 1 }));
            continue;
        }
        let mut acc = BigInt::zero();
        for s in 1..=complex.krull_dim() {
            acc += binomial_i(i as i64 - 1, s as i64 - 1) * BigInt::from(complex.faces_of_size(s).len());
        }
        out.push(acc);
    }
    GradedVector::new(VectorKind::Hilbert, out)
}

/// `(h_0 + h_1 λ + ... + h_d λ^d) / (1 - λ)^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: GradedVector,
    pub denominator_exp: usize,
}

impl HilbertSeries {
    /// Power-series coefficients through `λ^n`.
    pub fn expand(&self, n: usize) -> Vec<BigInt> {
        let d = self.denominator_exp as i64;
        (0..=n as i64)
            .map(|i| {
                self.numerator
                    .entries
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j as i64 <= i)
                    .map(|(j, h)| {
                        let k = i - j as i64;
                        // Coefficient of λ^k in (1-λ)^{-d}.
                        let c = if d == 0 { BigInt::from(u8::from(k == 0)) } else { binomial_i(k + d - 1, d - 1) };
                        c * h
                    })
                    .sum()
            })
            .collect()
    }
}

impl std::fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut num = String::new();
        for (j, h) in self.numerator.entries.iter().enumerate().filter(|(_, h)| !h.is_zero()) {
            let mag = h.magnitude();
            if num.is_empty() {
                if h.is_negative() {
                    num.push('-');
                }
            } else {
                num.push_str(if h.is_negative() { " - " } else { " + " });
            }
            let coeff = if j > 0 && mag.is_one() { String::new() } else { mag.to_string() };
            let power = match j {
                0 => String::new(),
                1 => "λ".to_string(),
                _ => format!("λ^{j}"),
            };
            num.push_str(&coeff);
            num.push_str(&power);
        }
        if num.is_empty() {
            num.push('0');
        }
        write!(f, "({num})/(1-λ)^{}", self.denominator_exp)
    }
}

pub fn hilbert_series(complex: &SimplicialComplex) -> HilbertSeries {
    HilbertSeries { numerator: h_vector(complex), denominator_exp: complex.krull_dim() }
}
