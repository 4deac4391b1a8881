mod common;

use rand::Rng;
use wlpkit::complex::{
    apply_bistellar, boundary_simplex, cross_polytope_boundary, find_bistellar_moves, kuehnel_torus,
    random_pachner_walk, real_projective_plane, SimplicialComplex, WalkPolicy,
};
use wlpkit::field::{Field, PrimeField, Rationals};
use wlpkit::io::{parse_certificate, write_certificate};
use wlpkit::lefschetz::{
    check_wle, check_wle_middle, find_wle, h_prime, kalai_g_check, novik_swartz_check, rigidity_check, trial_rng,
    verify_certificate, wle_transfer_or_search,
};
use wlpkit::linalg::random_vector;
use wlpkit::ring::random_lsop;
use wlpkit::vectors::{check_g_conditions, h_vector, small};
use wlpkit::Error;

use common::DenseQuotient;

fn walk(start: SimplicialComplex, steps: usize, seed: u64) -> Vec<SimplicialComplex> {
    random_pachner_walk(&start, steps, seed, &WalkPolicy::default()).unwrap().into_iter().map(|s| s.complex).collect()
}

#[test]
fn middle_shortcut_matches_full_check() {
    let f = PrimeField::new(101).unwrap();
    let mut spheres = walk(boundary_simplex(3), 10, 4);
    spheres.push(cross_polytope_boundary(3));
    spheres.push(cross_polytope_boundary(4));
    let mut failures = 0;
    for (k, c) in spheres.iter().enumerate() {
        for s in 0..6 {
            let mut rng = trial_rng(k as u64, s);
            let sys = random_lsop(c, &f, &mut rng).unwrap();
            let omega = match s {
                0 => vec![f.zero(); c.num_vertices()],
                1 => {
                    let mut w = vec![f.zero(); c.num_vertices()];
                    w[0] = f.one();
                    w
                }
                2 => sys.theta.row(0).to_vec(),
                _ => random_vector(&f, c.num_vertices(), &mut rng),
            };
            let full = check_wle(c, &sys, &omega, &f).unwrap().is_wle();
            assert_eq!(check_wle_middle(c, &sys, &omega, &f).unwrap(), full);
            failures += usize::from(!full);
        }
    }
    assert!(failures > 0);
}

#[test]
fn verdict_ranks_match_dense_quotient() {
    let f = PrimeField::new(32003).unwrap();
    for (k, c) in walk(boundary_simplex(3), 8, 9).into_iter().enumerate() {
        let cert = find_wle(&c, &f, k as u64, 5).unwrap();
        let (sys, omega) = cert.decode(&f).unwrap();
        let dense = DenseQuotient::new(&c, &sys.theta, &f, c.krull_dim());
        assert_eq!(cert.dims, dense.dims);
        for v in &cert.verdicts {
            assert_eq!(v.rank, dense.multiplication_rank(&omega, v.degree));
        }
    }
}

#[test]
fn walk_spheres_satisfy_g_conditions() {
    for c in walk(boundary_simplex(4), 25, 5) {
        assert!(check_g_conditions(&h_vector(&c)).all());
    }
}

#[test]
fn schenzel_over_q() {
    let q = Rationals;
    for seed in 0..5 {
        let r = h_prime(&kuehnel_torus(), &q, seed).unwrap();
        assert_eq!(small(&r.ring), [1, 4, 10, 1]);
        assert_eq!(r.ring, r.formula);
        let p = h_prime(&real_projective_plane(), &q, seed).unwrap();
        assert_eq!(p.ring.entries, p.h.entries);
    }
    // Over F_2 the projective plane has homology, and the formula moves h_3.
    let f2 = PrimeField::new(2).unwrap();
    let p = h_prime(&real_projective_plane(), &f2, 0).unwrap();
    assert_eq!((small(&p.h), small(&p.ring)), (vec![1, 3, 6, 0], vec![1, 3, 6, 1]));
}

#[test]
fn non_buchsbaum_is_rejected() {
    let pinched = SimplicialComplex::from_faces([vec![1, 2, 3], vec![1, 4, 5]]);
    assert_eq!(h_prime(&pinched, &Rationals, 0), Err(Error::NotBuchsbaum));
    assert_eq!(novik_swartz_check(&pinched, &Rationals, 0).map(|_| ()), Err(Error::NotOrientableManifold));
}

#[test]
fn socle_formula_survives_moves() {
    let f = PrimeField::default();
    let mut t = kuehnel_torus();
    let mut rng = trial_rng(21, 0);
    for _ in 0..3 {
        let moves = find_bistellar_moves(&t, 0).unwrap();
        t = apply_bistellar(&t, &moves[rng.gen_range(0..moves.len())]).unwrap();
    }
    let flips = find_bistellar_moves(&t, 1).unwrap();
    t = apply_bistellar(&t, &flips[0]).unwrap();
    let r = novik_swartz_check(&t, &f, 2).unwrap();
    assert_eq!(r.socle, [0, 0, 6, 1]);
    assert!(r.nondegenerate);
    let k = kalai_g_check(&t, &f, 2).unwrap();
    assert!(k.m_check.is_m);
    // Three new vertices raise g''_1 from 3 to 6.
    assert_eq!(small(&k.g_doubleprime), [1, 6]);
}

#[test]
fn socle_matches_dense_quotient_on_torus() {
    let f = PrimeField::new(32003).unwrap();
    let t = kuehnel_torus();
    let sys = random_lsop(&t, &f, &mut trial_rng(0, 0)).unwrap();
    let dense = DenseQuotient::new(&t, &sys.theta, &f, 3);
    assert_eq!(dense.dims, [1, 4, 10, 1]);
    assert_eq!((dense.socle_dim(1), dense.socle_dim(2)), (0, 6));
    let r = novik_swartz_check(&t, &f, 0).unwrap();
    assert_eq!(&r.socle[1..3], [0, 6]);
}

#[test]
fn rigidity_on_torus_and_three_sphere() {
    let f = PrimeField::default();
    let sphere = walk(boundary_simplex(4), 10, 3).pop().unwrap();
    for seed in 0..3 {
        let t = rigidity_check(&kuehnel_torus(), &f, seed).unwrap();
        assert!(t.injective && t.monotone);
        assert!(!t.hypothesis_met);
        let s = rigidity_check(&sphere, &f, seed).unwrap();
        assert!(s.injective && s.hypothesis_met);
    }
    let two_circles =
        SimplicialComplex::from_faces([vec![1, 2], vec![2, 3], vec![1, 3], vec![4, 5], vec![5, 6], vec![4, 6]]);
    assert_eq!(rigidity_check(&two_circles, &f, 0).map(|_| ()), Err(Error::NotConnected));
}

#[test]
fn certificates_round_trip_and_reverify() {
    let f = PrimeField::default();
    let c = walk(boundary_simplex(4), 6, 8).pop().unwrap();
    let cert = find_wle(&c, &f, 8, 5).unwrap();
    let text = write_certificate(&cert);
    let back = parse_certificate(&text).unwrap();
    assert_eq!(back, cert);
    assert_eq!(verify_certificate(&c, &back).unwrap(), cert);
    let mut bad = cert.clone();
    bad.omega.pop();
    assert!(matches!(parse_certificate(&write_certificate(&bad)), Err(Error::Parse { .. })));
}

#[test]
fn transfer_along_a_walk() {
    let f = PrimeField::default();
    let steps = random_pachner_walk(&boundary_simplex(3), 15, 12, &WalkPolicy::default()).unwrap();
    let mut cert = find_wle(&steps[0].complex, &f, 12, 5).unwrap();
    for pair in steps.windows(2) {
        let mv = pair[1].mv.as_ref().unwrap();
        let r = wle_transfer_or_search(&pair[0].complex, &cert, mv, 5).unwrap();
        let again = verify_certificate(&pair[1].complex, &r.certificate).unwrap();
        assert!(again.is_wle());
        cert = r.certificate;
    }
}
