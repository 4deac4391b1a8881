use num_bigint::BigInt;
use wlpkit::toric::{toric_betti, toric_m_check, toric_wle, underlying_complex, Fan};
use wlpkit::vectors::{f_vector, small};
use wlpkit::Error;

const CP2: &str = "2\n1 0\n0 1\n-1 -1\n\n1 2\n2 3\n1 3\n";
const P1XP1: &str = "2\n1 0\n0 1\n-1 0\n0 -1\n\n1 2\n2 3\n3 4\n1 4\n";
// CP^3: the standard basis and minus their sum.
const CP3: &str = "3\n1 0 0\n0 1 0\n0 0 1\n-1 -1 -1\n\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n";

fn fans() -> Vec<Fan> {
    let mut out: Vec<Fan> = [CP2, P1XP1, CP3].iter().map(|t| Fan::parse(t).unwrap()).collect();
    // Hirzebruch surface F_1 as the blow-up of CP^2 at a fixed point.
    out.push(out[0].stellar_subdivision(&[1, 2]).unwrap());
    out.push(out[2].stellar_subdivision(&[1, 2, 3]).unwrap());
    out.push(out[2].stellar_subdivision(&[1, 2]).unwrap());
    out
}

#[test]
fn known_betti_numbers() {
    assert_eq!(small(&toric_betti(&Fan::parse(CP2).unwrap()).unwrap()), [1, 1, 1]);
    assert_eq!(small(&toric_betti(&Fan::parse(P1XP1).unwrap()).unwrap()), [1, 2, 1]);
    assert_eq!(small(&toric_betti(&Fan::parse(CP3).unwrap()).unwrap()), [1, 1, 1, 1]);
}

#[test]
fn totals_symmetry_and_m_vectors() {
    for fan in fans() {
        let r = toric_m_check(&fan).unwrap();
        assert!(r.symmetric && r.m_check.is_m, "{fan:?}");
        let c = underlying_complex(&fan).unwrap();
        assert_eq!(r.total, f_vector(&c).entries.last().unwrap().clone());
        assert_eq!(r.total, BigInt::from(r.maximal_cones));
    }
}

#[test]
fn subdivision_adds_the_new_cones() {
    let base = Fan::parse(CP3).unwrap();
    for cone in [vec![1, 2, 3], vec![1, 4], vec![2, 3]] {
        let sub = base.stellar_subdivision(&cone).unwrap();
        let (a, b) = (toric_m_check(&base).unwrap(), toric_m_check(&sub).unwrap());
        assert_eq!(&b.total - &a.total, BigInt::from(b.maximal_cones - a.maximal_cones));
    }
}

#[test]
fn weak_lefschetz_for_the_ray_system() {
    for fan in fans() {
        let cert = toric_wle(&fan, 0, 5).unwrap();
        assert!(cert.is_wle());
        assert_eq!(cert.theta.len(), fan.dim);
        for (j, row) in cert.theta.iter().enumerate() {
            let rays: Vec<String> = fan.rays.iter().map(|r| r[j].to_string()).collect();
            assert_eq!(row, &rays);
        }
    }
}

#[test]
fn incomplete_fans_are_rejected() {
    let half = Fan::parse("2\n1 0\n0 1\n-1 -1\n\n1 2\n2 3\n").unwrap();
    assert!(matches!(toric_betti(&half), Err(Error::InvalidFan(_))));
    let unused = Fan::parse("2\n1 0\n0 1\n-1 -1\n1 1\n\n1 2\n2 3\n1 3\n").unwrap();
    assert!(matches!(toric_betti(&unused), Err(Error::InvalidFan(_))));
    assert!(matches!(Fan::parse("2\n1 0\n0 1\n\n1 3\n"), Err(Error::InvalidFan(_))));
    assert!(matches!(Fan::parse("x\n"), Err(Error::Parse { line: 1, .. })));
}
