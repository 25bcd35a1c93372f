use dtl_diagram::weights::{boundary_omega_zeta, bulk_omega, zeta_of_x};
use dtl_diagram::ActionTable;
use dtl_field::Fe;
use dtl_patterns::{LinkPattern, Side};
use dtl_qkz::solve_ground_state;
use dtl_transfer::*;

fn unit(n: usize, s: usize) -> Vec<Fe> {
    let mut v = vec![Fe::zero(); n];
    v[s] = Fe::one();
    v
}

fn rmat(l: usize, i: usize, a: &Fe, b: &Fe) -> TransferMatrix {
    let t = ActionTable::new(l).unwrap();
    let w = bulk_omega(a, b);
    let one = Fe::one();
    let cols = (0..t.size()).map(|s| t.rcheck_apply(i, &unit(t.size(), s), &w, &one, &one)).collect();
    TransferMatrix::from_columns(l, cols)
}

fn kmat(l: usize, side: Side, z: &Fe, zeta: &Fe) -> TransferMatrix {
    let t = ActionTable::new(l).unwrap();
    let (k, _) = boundary_omega_zeta(z, zeta).unwrap();
    let one = Fe::one();
    let cols = (0..t.size()).map(|s| t.k_apply(side, &unit(t.size(), s), &k, &one)).collect();
    TransferMatrix::from_columns(l, cols)
}

/// Equal up to one nonzero scalar.
fn proportional(a: &TransferMatrix, b: &TransferMatrix) -> bool {
    let mut r: Option<Fe> = None;
    for (ra, rb) in a.entries.iter().zip(&b.entries) {
        for (x, y) in ra.iter().zip(rb) {
            if x.is_zero() != y.is_zero() {
                return false;
            }
            if x.is_zero() {
                continue;
            }
            let q = x.checked_div(y).unwrap();
            match &r {
                None => r = Some(q),
                Some(r0) if *r0 != q => return false,
                _ => {}
            }
        }
    }
    r.is_some()
}

fn sample(l: usize) -> Params {
    let z = [Fe::frac(2, 3), Fe::frac(-5, 7), Fe::frac(4, 11)];
    Params::new(Fe::frac(3, 4), z[..l].to_vec(), Fe::frac(1, 5), Fe::frac(-4, 3))
}

#[test]
fn transfer_matrices_commute() {
    for l in 1..=2 {
        let p = sample(l);
        let a = build_transfer_matrix(&p).unwrap();
        let b = build_transfer_matrix(&p.with_t(Fe::frac(-7, 2))).unwrap();
        assert_eq!(a.mul(&b), b.mul(&a), "L={l}");
    }
}

#[test]
fn r_intertwines_swapped_rapidities() {
    let p = sample(2);
    let t = build_transfer_matrix(&p).unwrap();
    let mut ps = p.clone();
    ps.z.swap(0, 1);
    let ts = build_transfer_matrix(&ps).unwrap();
    let r = rmat(2, 1, &p.z[0], &p.z[1]);
    assert_eq!(ts.mul(&r), r.mul(&t));
}

#[test]
fn boundary_intertwines_up_to_scalar() {
    let p = sample(2);
    let t = build_transfer_matrix(&p).unwrap();

    let mut pl = p.clone();
    pl.z[0] = p.z[0].inv().unwrap();
    let tl = build_transfer_matrix(&pl).unwrap();
    let k = kmat(2, Side::Left, &p.z[0], &p.zeta_l);
    assert!(proportional(&k.mul(&t), &tl.mul(&k)));

    let mut pr = p.clone();
    pr.z[1] = p.z[1].inv().unwrap();
    let tr = build_transfer_matrix(&pr).unwrap();
    let k = kmat(2, Side::Right, &p.z[1].inv().unwrap(), &p.zeta_r);
    assert!(proportional(&k.mul(&t), &tr.mul(&k)));
    // and the wrong orientation does not
    assert!(!proportional(&k.mul(&tr), &t.mul(&k)));
}

#[test]
fn column_sums_are_constant() {
    for l in 1..=2 {
        let p = sample(l);
        let cs = build_transfer_matrix(&p).unwrap().column_sums();
        assert!(cs.iter().all(|c| *c == cs[0]), "L={l}");
        assert!(!cs[0].is_zero());
        assert!(!expected_column_sum(&p).unwrap().is_zero());
    }
}

fn eigen_point(gs: &dtl_qkz::GroundState, t: Fe, xl: Fe, z: Vec<Fe>, xr: Fe) -> (TransferMatrix, Vec<Fe>) {
    let p = Params::new(t, z.clone(), zeta_of_x(&xl).unwrap(), zeta_of_x(&xr).unwrap());
    let mut pt = vec![xl];
    pt.extend(z);
    pt.push(xr);
    (build_transfer_matrix(&p).unwrap(), gs.eval(&pt).unwrap())
}

#[test]
fn ground_state_is_eigenvector() {
    let pts: [(i64, i64); 5] = [(2, 3), (-3, 5), (7, 2), (1, 9), (-5, 4)];
    for l in 1..=3 {
        let gs = solve_ground_state(l).unwrap();
        let npts = if l == 3 { 1 } else { pts.len() };
        for (k, (a, b)) in pts.iter().take(npts).enumerate() {
            let z = (0..l).map(|i| Fe::frac(a + i as i64, b + 2 * i as i64)).collect();
            let (t, v) = eigen_point(&gs, Fe::frac(*b, a + 10), Fe::frac(3, 7 + k as i64), z, Fe::frac(-2, 5));
            let rep = eigen_check(&t, &v).unwrap_or_else(|e| panic!("L={l} point {k}: {e}"));
            assert!(!rep.lambda.is_zero());
        }
    }
}

#[test]
fn perturbed_vector_is_rejected() {
    let gs = solve_ground_state(2).unwrap();
    let (t, mut v) = eigen_point(&gs, Fe::frac(5, 3), Fe::frac(3, 7), vec![Fe::frac(2, 9), Fe::frac(-1, 4)], Fe::frac(-2, 5));
    assert!(eigen_check(&t, &v).is_ok());
    let r = LinkPattern::zeros(2).rank();
    v[r] = &v[r] * &Fe::int(2);
    assert!(matches!(eigen_check(&t, &v), Err(TransferError::NotAnEigenvector(_))));
}

#[test]
fn glue_of_empty_state_size_one() {
    let p = sample(1);
    let w = RowWeights::omega(&p).unwrap();
    let out = glue_diagrams(&w, &LinkPattern::zeros(1), &p.n, &p.n0).unwrap();
    assert!(!out.is_empty());
    let t = build_transfer_matrix(&p).unwrap();
    for (q, v) in out {
        assert_eq!(t.entries[q.rank()][LinkPattern::zeros(1).rank()], v);
    }
}

#[test]
fn mismatched_weights_are_rejected() {
    let w = RowWeights::omega(&sample(1)).unwrap();
    assert!(matches!(
        glue_diagrams(&w, &LinkPattern::zeros(2), &Fe::one(), &Fe::one()),
        Err(TransferError::Mismatch(_))
    ));
}

#[test]
fn size_guard() {
    let p = Params::new(Fe::int(2), vec![Fe::int(3); 6], Fe::int(1), Fe::int(1));
    assert!(matches!(build_transfer_matrix(&p), Err(TransferError::SizeLimitExceeded(6))));
}
