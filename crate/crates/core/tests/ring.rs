mod common;

use std::collections::HashMap;

use num_bigint::BigInt;
use wlpkit::complex::{
    boundary_simplex, cross_polytope_boundary, kuehnel_torus, random_pachner_walk, real_projective_plane,
    SimplicialComplex, WalkPolicy,
};
use wlpkit::field::{Field, PrimeField, Rationals};
use wlpkit::lefschetz::trial_rng;
use wlpkit::linalg::random_vector;
use wlpkit::ring::{artinian_reduction, hilbert_function, hilbert_series, random_lsop, LinearSystem};
use wlpkit::vectors::{h_vector, small};

use common::{count_face_monomials, sphere_fixtures, DenseQuotient};

fn walk_spheres() -> Vec<SimplicialComplex> {
    let walk = random_pachner_walk(&boundary_simplex(3), 12, 7, &WalkPolicy::default()).unwrap();
    walk.into_iter().step_by(4).map(|s| s.complex).collect()
}

fn fixtures() -> Vec<SimplicialComplex> {
    let mut out: Vec<SimplicialComplex> = sphere_fixtures().into_iter().map(|(_, c)| c).collect();
    out.push(kuehnel_torus());
    out.push(real_projective_plane());
    out.extend(walk_spheres());
    out
}

#[test]
fn hilbert_function_counts_face_monomials() {
    for c in fixtures() {
        let d = c.krull_dim();
        let hf = hilbert_function(&c, d + 3);
        let series = hilbert_series(&c).expand(d + 3);
        assert_eq!(hf.entries, series);
        if c.num_vertices() <= 8 {
            for i in 0..=d + 3 {
                assert_eq!(hf.entries[i], BigInt::from(count_face_monomials(&c, i)));
            }
        }
    }
}

#[test]
fn dims_agree_with_dense_quotient() {
    let f = PrimeField::new(32003).unwrap();
    let mut cases = vec![boundary_simplex(3), cross_polytope_boundary(3), kuehnel_torus(), real_projective_plane()];
    cases.extend(walk_spheres());
    for (seed, c) in cases.iter().enumerate() {
        let sys = random_lsop(c, &f, &mut trial_rng(seed as u64, 0)).unwrap();
        let q = artinian_reduction(c, &sys, &f).unwrap();
        let dense = DenseQuotient::new(c, &sys.theta, &f, c.krull_dim());
        assert_eq!(q.dims(), dense.dims);
        let omega = random_vector(&f, c.num_vertices(), &mut trial_rng(seed as u64, 1));
        for i in 0..c.krull_dim() {
            let r = wlpkit::linalg::rank(&f, &q.multiplication_map(&omega, i).unwrap());
            assert_eq!(r, dense.multiplication_rank(&omega, i), "degree {i}");
        }
    }
}

#[test]
fn dims_do_not_depend_on_vertex_order() {
    let f = PrimeField::default();
    for c in [cross_polytope_boundary(3), kuehnel_torus(), boundary_simplex(4)] {
        let n = c.max_label();
        let map: HashMap<u32, u32> = c.vertices().iter().map(|&v| (v, n + 1 - v)).collect();
        let r = c.relabel(&map);
        let a = artinian_reduction(&c, &random_lsop(&c, &f, &mut trial_rng(3, 0)).unwrap(), &f).unwrap();
        let b = artinian_reduction(&r, &random_lsop(&r, &f, &mut trial_rng(3, 0)).unwrap(), &f).unwrap();
        assert_eq!(a.dims(), b.dims());
    }
}

#[test]
fn spheres_have_one_dimensional_socle_on_top() {
    let f = PrimeField::default();
    for (_, c) in sphere_fixtures().into_iter().filter(|(_, c)| c.num_vertices() <= 8) {
        let sys = random_lsop(&c, &f, &mut trial_rng(11, 0)).unwrap();
        let q = artinian_reduction(&c, &sys, &f).unwrap();
        let d = c.krull_dim();
        let mut expect = vec![0; d + 1];
        expect[d] = 1;
        assert_eq!(q.socle().dims, expect);
        assert_eq!(q.dims(), small(&h_vector(&c)).iter().map(|&x| x as usize).collect::<Vec<_>>());
    }
}

#[test]
fn multiplication_commutes() {
    let f = Rationals;
    let c = cross_polytope_boundary(3);
    let sys = random_lsop(&c, &f, &mut trial_rng(5, 0)).unwrap();
    let q = artinian_reduction(&c, &sys, &f).unwrap();
    let one = vec![f.one()];
    for &u in c.vertices() {
        for &v in c.vertices() {
            let uv = q.multiply_by_monomial(0, &one, &[u, v]).unwrap();
            let vu = q.multiply_by_monomial(0, &one, &[v, u]).unwrap();
            assert_eq!(uv, vu);
            if u < v && c.contains_face(&[u, v]) {
                assert_eq!(uv, q.face_monomial_class(&[u, v]).unwrap());
            }
        }
    }
}

#[test]
fn linear_forms_vanish() {
    let f = PrimeField::default();
    let c = kuehnel_torus();
    let sys = random_lsop(&c, &f, &mut trial_rng(9, 0)).unwrap();
    let q = artinian_reduction(&c, &sys, &f).unwrap();
    for i in 0..2 {
        for b in 0..q.dim(i) {
            for j in 0..sys.num_forms() {
                let image = q.multiplication_map(sys.theta.row(j), i).unwrap().column(b);
                assert!(image.iter().all(|x| f.is_zero(x)));
            }
        }
    }
}

#[test]
fn non_lsop_is_rejected() {
    let f = Rationals;
    let c = boundary_simplex(2);
    let theta =
        wlpkit::linalg::Matrix::from_rows(3, vec![vec![f.one(), f.one(), f.zero()], vec![f.one(), f.one(), f.zero()]])
            .unwrap();
    let sys = LinearSystem::new(c.vertices().to_vec(), theta);
    assert!(matches!(artinian_reduction(&c, &sys, &f), Err(wlpkit::Error::NotLsop)));
}
