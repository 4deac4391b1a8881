//! Oracles shared by the integration tests. None of them calls into the ring
//! module: quotients are built from dense Macaulay matrices over every
//! face-supported monomial.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use wlpkit::complex::{boundary_simplex, cross_polytope_boundary, SimplicialComplex};
use wlpkit::field::Field;
use wlpkit::linalg::{rank, rref, Matrix, Rref};

/// `h_i` as the coefficient of `t^{d-i}` in `Σ_i f_{i-1} (t-1)^{d-i}`.
pub fn h_by_polynomial(f: &[BigInt]) -> Vec<BigInt> {
    let d = f.len();
    let mut poly = vec![BigInt::from(0); d + 1];
    for i in 0..=d {
        let fi = if i == 0 { BigInt::from(1) } else { f[i - 1].clone() };
        // (t-1)^e by repeated multiplication.
        let e = d - i;
        let mut p = vec![BigInt::from(1)];
        for _ in 0..e {
            let mut q = vec![BigInt::from(0); p.len() + 1];
            for (k, c) in p.iter().enumerate() {
                q[k + 1] += c;
                q[k] -= c;
            }
            p = q;
        }
        for (k, c) in p.iter().enumerate() {
            poly[k] += &fi * c;
        }
    }
    (0..=d).map(|i| poly[d - i].clone()).collect()
}

/// Face counts by expanding every facet into all of its subsets.
pub fn brute_f_vector(complex: &SimplicialComplex) -> Vec<usize> {
    let mut faces: BTreeSet<Vec<u32>> = BTreeSet::new();
    for facet in complex.facets() {
        for mask in 1u32..(1 << facet.len()) {
            faces.insert(facet.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &v)| v).collect());
        }
    }
    let d = complex.krull_dim();
    (1..=d).map(|s| faces.iter().filter(|f| f.len() == s).count()).collect()
}

/// Number of degree-`i` monomials whose support is a face, by enumeration.
pub fn count_face_monomials(complex: &SimplicialComplex, i: usize) -> usize {
    face_monomials(complex, i).len()
}

fn support(m: &[u32]) -> Vec<u32> {
    let mut s = m.to_vec();
    s.dedup();
    s
}

/// Degree-`i` monomials with face support, as sorted multisets.
pub fn face_monomials(complex: &SimplicialComplex, i: usize) -> Vec<Vec<u32>> {
    fn rec(c: &SimplicialComplex, start: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for (k, &v) in c.vertices().iter().enumerate().skip(start) {
            cur.push(v);
            if c.contains_face(&support(cur)) {
                rec(c, k, left - 1, cur, out);
            }
            cur.pop();
        }
    }
    if complex.is_void() {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(complex, 0, i, &mut Vec::new(), &mut out);
    out
}

/// `k[Δ]/(Θ)` in degrees `0..=top` from Macaulay matrices: the relations in
/// degree `i` are `θ_j · m` for every face-supported monomial `m` of degree
/// `i - 1`, with products leaving the face ring dropped.
pub struct DenseQuotient<F: Field> {
    pub field: F,
    vertices: Vec<u32>,
    pub monomials: Vec<Vec<Vec<u32>>>,
    index: Vec<HashMap<Vec<u32>, usize>>,
    relations: Vec<Rref<F::Elem>>,
    pub dims: Vec<usize>,
}

impl<F: Field> DenseQuotient<F> {
    /// `theta` has one row per form and one column per vertex, in increasing
    /// vertex order.
    pub fn new(complex: &SimplicialComplex, theta: &Matrix<F::Elem>, field: &F, top: usize) -> Self {
        let vertices = complex.vertices().to_vec();
        let monomials: Vec<Vec<Vec<u32>>> = (0..=top).map(|i| face_monomials(complex, i)).collect();
        let index: Vec<HashMap<Vec<u32>, usize>> =
            monomials.iter().map(|ms| ms.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect()).collect();
        let mut q =
            DenseQuotient { field: field.clone(), vertices, monomials, index, relations: Vec::new(), dims: Vec::new() };
        for i in 0..=top {
            let mut rows = Vec::new();
            if i > 0 {
                for m in &q.monomials[i - 1] {
                    for j in 0..theta.rows() {
                        rows.push(q.times_form(m, theta.row(j), i));
                    }
                }
            }
            let cols = q.monomials[i].len();
            let r = rref(field, &Matrix::from_rows(cols, rows).expect("row length"));
            q.dims.push(cols - r.rank());
            q.relations.push(r);
        }
        q
    }

    /// Coordinates of `m · Σ_v c_v x_v` among degree-`i` monomials.
    fn times_form(&self, m: &[u32], form: &[F::Elem], i: usize) -> Vec<F::Elem> {
        let f = &self.field;
        let mut row = vec![f.zero(); self.monomials[i].len()];
        for (k, &v) in self.vertices.iter().enumerate() {
            if f.is_zero(&form[k]) {
                continue;
            }
            let mut prod = m.to_vec();
            prod.push(v);
            prod.sort_unstable();
            if let Some(&p) = self.index[i].get(&prod) {
                row[p] = f.add(&row[p], &form[k]);
            }
        }
        row
    }

    /// Rank of `·ω` from degree `i` to degree `i + 1 <= top`.
    pub fn multiplication_rank(&self, omega: &[F::Elem], i: usize) -> usize {
        let f = &self.field;
        let cols = self.monomials[i + 1].len();
        let rel = &self.relations[i + 1];
        let mut rows = rel.matrix.to_rows();
        for m in &self.monomials[i] {
            rows.push(self.times_form(m, omega, i + 1));
        }
        rank(f, &Matrix::from_rows(cols, rows).expect("row length")) - rel.rank()
    }

    /// Whether the monomial (a sorted vertex multiset) vanishes in the quotient.
    pub fn is_zero_class(&self, monomial: &[u32]) -> bool {
        let f = &self.field;
        let i = monomial.len();
        let Some(&p) = self.index[i].get(monomial) else { return true };
        let mut e = vec![f.zero(); self.monomials[i].len()];
        e[p] = f.one();
        self.relations[i].reduce(f, &mut e);
        e.iter().all(|x| f.is_zero(x))
    }

    /// `dim Soc_i`: classes killed by every variable, for `i < top`.
    pub fn socle_dim(&self, i: usize) -> usize {
        let f = &self.field;
        let rel = &self.relations[i + 1];
        let free = rel.free_columns();
        let n = self.vertices.len();
        let mut rows = Vec::with_capacity(self.monomials[i].len());
        for m in &self.monomials[i] {
            let mut row = Vec::with_capacity(n * free.len());
            for k in 0..n {
                let mut e = vec![f.zero(); n];
                e[k] = f.one();
                let mut image = self.times_form(m, &e, i + 1);
                rel.reduce(f, &mut image);
                row.extend(free.iter().map(|&c| image[c].clone()));
            }
            rows.push(row);
        }
        let r = rank(f, &Matrix::from_rows(n * free.len(), rows).expect("row length"));
        self.monomials[i].len() - r - self.relations[i].rank()
    }
}

/// `∂Δ^a * ∂Δ^b` with the second factor relabelled past the first.
pub fn sphere_join(a: usize, b: usize) -> SimplicialComplex {
    let x = boundary_simplex(a);
    x.join(&boundary_simplex(b).shifted(x.max_label())).expect("disjoint labels")
}

/// The sphere fixtures: `∂Δ^n` for `n <= 6`, cross-polytopes up to
/// dimension 4 and joins `∂Δ^a * ∂Δ^b` with `a + b <= 5`.
pub fn sphere_fixtures() -> Vec<(String, SimplicialComplex)> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push((format!("boundary simplex {n}"), boundary_simplex(n)));
    }
    for n in 1..=4 {
        out.push((format!("cross-polytope {n}"), cross_polytope_boundary(n)));
    }
    for a in 1..=4 {
        for b in 1..=5 - a {
            out.push((format!("join {a}*{b}"), sphere_join(a, b)));
        }
    }
    out
}
