use std::collections::HashMap;

use dtl_diagram::weights::*;
use dtl_diagram::*;
use dtl_field::Fe;
use dtl_patterns::{enumerate_patterns, LinkPattern, Partner, Side};
use dtl_poly::{LaurentPoly, VarSet};

fn lp(s: &str) -> LinkPattern {
    s.parse().unwrap()
}

fn kind(k: u8) -> PlaquetteKind {
    PlaquetteKind::new(k).unwrap()
}

fn delta(l: usize, p: &LinkPattern) -> Vec<Fe> {
    let mut v = vec![Fe::zero(); 3usize.pow(l as u32)];
    v[p.rank()] = Fe::one();
    v
}

fn samples() -> Vec<(Fe, Fe)> {
    vec![
        (Fe::frac(2, 3), Fe::frac(-5, 7)),
        (Fe::ints(1, 2), Fe::frac(3, 11)),
        (Fe::int(3), Fe::ints(-2, 1)),
    ]
}

#[test]
fn rho1_inserts_arch() {
    assert_eq!(plaquette_action(kind(1), 1, &lp("0,0")), Some((lp("1,-1"), Closures::NONE)));
}

#[test]
fn rho8_on_arch_closes_a_loop() {
    assert_eq!(plaquette_action(kind(8), 1, &lp("1,-1")), Some((lp("1,-1"), Closures { loops: 1, lines: 0 })));
}

#[test]
fn rho3_on_boundary_lines_closes_a_line() {
    assert_eq!(plaquette_action(kind(3), 1, &lp("-1,1")), Some((lp("0,0"), Closures { loops: 0, lines: 1 })));
}

#[test]
fn occupation_mismatch_is_empty() {
    assert_eq!(plaquette_action(kind(1), 1, &lp("1,-1")), None);
    assert_eq!(plaquette_action(kind(9), 1, &lp("0,1")), None);
}

#[test]
fn rho5_and_rho6_transport_lines() {
    assert_eq!(plaquette_action(kind(5), 2, &lp("1,-1,0")).unwrap().0, lp("1,0,-1"));
    assert_eq!(plaquette_action(kind(6), 1, &lp("0,-1,1")).unwrap().0, lp("-1,0,1"));
}

#[test]
fn join_reconnects_partners() {
    let (q, c) = plaquette_action(kind(3), 2, &lp("1,-1,1,-1")).unwrap();
    assert_eq!((q, c), (lp("1,0,0,-1"), Closures::NONE));
    let (q, _) = plaquette_action(kind(3), 2, &lp("0,-1,1,0")).unwrap();
    assert_eq!(q, lp("0,0,0,0"));
    let (q, _) = plaquette_action(kind(8), 2, &lp("-1,-1,1,1")).unwrap();
    assert_eq!(q, lp("-1,1,-1,1"));
}

#[test]
fn rho3_preimages_of_empty_pair() {
    let pre = plaquette_preimages(kind(3), 1, &lp("0,0")).unwrap();
    let m: HashMap<LinkPattern, Closures> = pre.into_iter().collect();
    assert_eq!(m.len(), 4);
    assert_eq!(m[&lp("1,-1")], Closures { loops: 1, lines: 0 });
    for p in ["-1,1", "-1,-1", "1,1"] {
        assert_eq!(m[&lp(p)], Closures { loops: 0, lines: 1 });
    }
}

#[test]
fn rho8_preimages() {
    assert!(plaquette_preimages(kind(8), 1, &lp("0,0")).unwrap().is_empty());
    assert!(plaquette_preimages(kind(8), 1, &lp("-1,1")).unwrap().is_empty());
    let pre = plaquette_preimages(kind(8), 1, &lp("1,-1")).unwrap();
    assert!(pre.contains(&(lp("1,-1"), Closures { loops: 1, lines: 0 })));
}

#[test]
fn preimages_invert_the_action() {
    for l in 2..=4 {
        let pats = enumerate_patterns(l).unwrap();
        for i in 1..l {
            for k in PlaquetteKind::all() {
                for p in &pats {
                    if let Some((q, c)) = plaquette_action(k, i, p) {
                        assert!(plaquette_preimages(k, i, &q).unwrap().contains(&(p.clone(), c)));
                    }
                }
                for t in &pats {
                    for (p, c) in plaquette_preimages(k, i, t).unwrap() {
                        assert_eq!(plaquette_action(k, i, &p), Some((t.clone(), c)));
                    }
                }
            }
        }
    }
}

#[test]
fn images_are_valid_patterns_with_conserved_ends() {
    // a plaquette never changes how many lines reach each wall, except by closing them
    for l in 2..=5 {
        for p in enumerate_patterns(l).unwrap() {
            let walls = |p: &LinkPattern| {
                p.partners().iter().filter(|x| matches!(x, Partner::Left | Partner::Right)).count()
            };
            for i in 1..l {
                for k in PlaquetteKind::all() {
                    if let Some((q, c)) = plaquette_action(k, i, &p) {
                        assert_eq!(walls(&p), walls(&q) + 2 * c.lines as usize, "{k:?} {i} {p}");
                    }
                }
            }
        }
    }
}

#[test]
fn rcheck_arch_and_r9_components() {
    let t = ActionTable::new(2).unwrap();
    let (n, n0) = (Fe::int(3), Fe::int(5));
    for (a, b) in samples() {
        let w = bulk_omega(&a, &b);
        let out = t.rcheck_apply(1, &delta(2, &lp("0,0")), &w, &n, &n0);
        assert_eq!(out[lp("1,-1").rank()], w[0]);
        assert_eq!(out[lp("0,0").rank()], w[6]);
        let out = t.rcheck_apply(1, &delta(2, &lp("-1,-1")), &w, &n, &n0);
        assert_eq!(out[lp("-1,-1").rank()], w[8]);
        assert_eq!(out[lp("0,0").rank()], &w[2] * &n0);
        assert_eq!(out[lp("1,-1").rank()], &w[7] * &n0);
    }
}

#[test]
fn bulk_weights_are_stochastic() {
    for l in 2..=4 {
        let t = ActionTable::new(l).unwrap();
        for (a, b) in samples() {
            let w = bulk_omega(&a, &b);
            let norm = bulk_norm(&a, &b);
            for i in 1..l {
                // every basis pattern: the weights of its images add up to W
                for src in 0..t.size() {
                    let mut s = Fe::zero();
                    for k in PlaquetteKind::all() {
                        if t.bulk(i, k)[src].is_some() {
                            s = s + &w[k.id() as usize - 1];
                        }
                    }
                    assert_eq!(s, norm);
                }
            }
        }
    }
}

#[test]
fn dual_action_on_all_ones_is_w() {
    // with components pushed forward, the all-ones covector is the left eigenvector
    let t = ActionTable::new(3).unwrap();
    let one = Fe::one();
    for (a, b) in samples() {
        let w = bulk_omega(&a, &b);
        for i in 1..3 {
            let mut col = vec![Fe::zero(); t.size()];
            for src in 0..t.size() {
                col[src] = t.rcheck_apply(i, &delta_rank(t.size(), src), &w, &one, &one).into_iter().fold(Fe::zero(), |x, y| x + y);
            }
            assert!(col.iter().all(|c| *c == bulk_norm(&a, &b)));
        }
    }
}

fn delta_rank(size: usize, r: usize) -> Vec<Fe> {
    let mut v = vec![Fe::zero(); size];
    v[r] = Fe::one();
    v
}

#[test]
fn omega_table_identities() {
    let z = Fe::frac(7, 4);
    let r = bulk_omega_ratio(&z);
    assert!(r[0] == r[1] && r[1] == r[2] && r[2] == r[3]);
    assert!(r[4] == r[5] && r[5] == r[6]);
    let (k, _) = boundary_omega_zeta(&z, &Fe::frac(2, 9)).unwrap();
    assert_eq!(k[0], k[1]);
}

#[test]
fn left_boundary_action_table() {
    let t = ActionTable::new(2).unwrap();
    let n0 = Fe::int(5);
    let (z, zeta) = (Fe::frac(3, 5), Fe::ints(1, 3));
    let (k, _) = boundary_omega_zeta(&z, &zeta).unwrap();
    let k: [Fe; 5] = k;
    let out = t.k_apply(Side::Left, &delta(2, &lp("0,-1")), &k, &n0);
    assert_eq!(out[lp("-1,-1").rank()], k[0]);
    assert_eq!(out[lp("0,-1").rank()], k[2]);
    let out = t.k_apply(Side::Left, &delta(2, &lp("1,-1")), &k, &n0);
    assert_eq!(out[lp("0,-1").rank()], k[1]);
    assert_eq!(out[lp("-1,-1").rank()], k[3]);
    assert_eq!(out[lp("1,-1").rank()], k[4]);
    // a left-attached line at site 1 closes against the wall
    let out = t.k_apply(Side::Left, &delta(2, &lp("-1,0")), &k, &n0);
    assert_eq!(out[lp("0,0").rank()], &k[1] * &n0);
}

#[test]
fn boundary_weights_are_stochastic() {
    for l in 1..=4 {
        let t = ActionTable::new(l).unwrap();
        for (z, zeta) in samples() {
            let (k, u) = boundary_omega_zeta(&z, &zeta).unwrap();
            for side in [Side::Left, Side::Right] {
                for src in 0..t.size() {
                    let s = BoundaryKind::all(side)
                        .filter(|b| t.boundary(*b)[src].is_some())
                        .fold(Fe::zero(), |acc, b| acc + &k[b.id() as usize - 1]);
                    assert_eq!(s, u);
                }
            }
        }
    }
}

#[test]
fn x_form_matches_zeta_form() {
    let v = VarSet::aux(&["z", "x"]);
    let zp = LaurentPoly::var(&v, 0, 1);
    let xp = LaurentPoly::var(&v, 1, 1);
    let (kp, up) = boundary_omega_x(&zp, &xp);
    for (z, x) in samples() {
        let zeta = zeta_of_x(&x).unwrap();
        let (k, u) = boundary_omega_zeta(&z, &zeta).unwrap();
        let scale = &(&zeta * &(&z * &z)) * &(&x * &x + Fe::one()).powu(2);
        let pt = [z.clone(), x.clone()];
        for j in 0..5 {
            assert_eq!(kp[j].eval(&pt).unwrap(), &k[j] * &scale);
        }
        assert_eq!(up.eval(&pt).unwrap(), &u * &scale);
    }
}

#[test]
fn generic_bulk_weights_reduce_at_omega() {
    let w = Fe::omega();
    for (z, _) in samples() {
        let g = bulk_generic(&w, &z);
        let o = bulk_omega_ratio(&z);
        let f = &(&w * &w) * &(&z * &z - Fe::one());
        for k in 0..9 {
            assert_eq!(g[k], &o[k] * &f, "r{}", k + 1);
        }
    }
}

#[test]
fn generic_boundary_weights_reduce_at_omega() {
    let w = Fe::omega();
    for (z, zeta) in samples() {
        // the omega table's zeta corresponds to xi = -2 w zeta
        let xi = &(&Fe::int(-2) * &w) * &zeta;
        let g = boundary_generic(&w, &z, &xi, &Fe::one()).unwrap();
        let (o, _) = boundary_omega_zeta(&z, &zeta).unwrap();
        let f = g[2].checked_div(&o[2]).unwrap();
        for k in 0..5 {
            assert_eq!(g[k], &o[k] * &f, "k{}", k + 1);
        }
    }
}

#[test]
fn factorization_at_the_r9_zero() {
    // Rcheck_i(z/w, z w) = (w^2+w) z^2 S_i M_i on lp_2 and lp_3
    let w = Fe::omega();
    let (n, n0) = (Fe::int(3), Fe::frac(-2, 7));
    for l in 2..=3 {
        let t = ActionTable::new(l).unwrap();
        for (z, _) in samples() {
            let a = &z * &w.inv().unwrap();
            let b = &z * &w;
            let r = bulk_omega(&a, &b);
            assert!(r[8].is_zero());
            let c = &arch_coeff() * &(&z * &z);
            for i in 1..l {
                for src in 0..t.size() {
                    let v = delta_rank(t.size(), src);
                    let lhs = t.rcheck_apply(i, &v, &r, &n, &n0);
                    let rhs: Vec<Fe> =
                        split_apply(i, l - 1, &merge_join_apply(i, l, &v, &n, &n0)).into_iter().map(|x| &x * &c).collect();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn wrong_prefactor_breaks_factorization() {
    let w = Fe::omega();
    let z = Fe::frac(5, 3);
    let t = ActionTable::new(2).unwrap();
    let r = bulk_omega(&(&z * &w.inv().unwrap()), &(&z * &w));
    let one = Fe::one();
    let v = delta(2, &lp("0,0"));
    let lhs = t.rcheck_apply(1, &v, &r, &one, &one);
    let rhs: Vec<Fe> = split_apply(1, 1, &merge_join_apply(1, 2, &v, &one, &one)).into_iter().map(|x| &x * &(&z * &z)).collect();
    assert_ne!(lhs, rhs);
}

#[test]
fn merge_then_split_is_twice_identity() {
    for l in 1..=3 {
        let size = 3usize.pow(l as u32);
        for src in 0..size {
            let v = delta_rank(size, src);
            for i in 1..=l {
                let twice: Vec<Fe> = v.iter().map(|x| x * &Fe::int(2)).collect();
                assert_eq!(merge_apply(i, l + 1, &split_apply(i, l, &v)), twice);
                let one = Fe::one();
                assert_eq!(merge_join_apply(i, l + 1, &split_apply(i, l, &v), &one, &one), twice);
            }
        }
    }
}

#[test]
fn merge_examples() {
    let v = delta(2, &lp("1,-1"));
    assert_eq!(merge_apply(1, 2, &v), delta(1, &lp("0")));
    assert!(merge_apply(1, 2, &delta(2, &lp("1,1"))).iter().all(|x| x.is_zero()));
    assert_eq!(merge_pattern(2, &lp("1,0,-1")), Some(lp("1,-1")));
    assert_eq!(merge_pattern(1, &lp("-1,1,0")), None);
}

#[test]
fn split_preserves_wall_attachments() {
    for l in 1..=3 {
        for p in enumerate_patterns(l).unwrap() {
            let walls = |p: &LinkPattern| {
                let pr = p.partners();
                (pr.iter().filter(|x| **x == Partner::Left).count(), pr.iter().filter(|x| **x == Partner::Right).count())
            };
            for i in 1..=l {
                for q in split_pattern(i, &p) {
                    assert_eq!(walls(&q), walls(&p));
                }
            }
        }
    }
}

fn l1_components() -> (LaurentPoly, LaurentPoly, LaurentPoly) {
    let v = VarSet::standard(1);
    let (xl, z, xr) = (LaurentPoly::var(&v, 0, 1), LaurentPoly::var(&v, 1, 1), LaurentPoly::var(&v, 2, 1));
    let one = LaurentPoly::one(&v);
    let w = Fe::omega();
    let inv = |i: usize| LaurentPoly::var(&v, i, -1);
    let m = &(&xr + &z.scale(&w)) * &(&(&z * &xr).scale(&w) + &one);
    let psi_m = (&(&m * &inv(1)) * &inv(2)).scale(&w);
    let p = &(&xl.scale(&w) + &z) * &(&(&z * &xl) + &one.scale(&w));
    let psi_p = (&(&p * &inv(1)) * &inv(0)).scale(&w);
    let s = &(&(&(&(&z * &xl) * &xl) * &xr) + &(&(&(&z * &z) * &xl) * &xr))
        + &(&(&(&(&z * &xl) * &xr) * &xr) + &(&(&xl * &xr) + &(&(&z * &xl) + &(&z * &xr))));
    let psi_0 = (&(&(&s * &inv(0)) * &inv(1)) * &inv(2)).scale(&(&w * &w));
    (psi_m, psi_0, psi_p)
}

#[test]
fn gamma_relates_l1_components() {
    let (psi_m, psi_0, psi_p) = l1_components();
    assert_eq!(&gamma_apply(Side::Left, &psi_0).unwrap() - &psi_p, psi_m);
    assert_eq!(&gamma_apply(Side::Right, &psi_0).unwrap() - &psi_m, psi_p);
}

#[test]
fn mu_kills_the_omega_factor() {
    let v = VarSet::standard(2);
    let f = &LaurentPoly::var(&v, 1, 1).scale(&Fe::omega()) + &LaurentPoly::var(&v, 2, 1);
    assert!(mu_apply(1, &f).unwrap().is_zero());
    let c = LaurentPoly::constant(&v, Fe::frac(3, 2));
    assert_eq!(mu_apply(1, &c).unwrap(), LaurentPoly::constant(&VarSet::standard(1), Fe::frac(3, 2)));
    // x_r moves down with the sites
    let xr = LaurentPoly::var(&v, 3, 1);
    assert_eq!(mu_apply(1, &xr).unwrap(), LaurentPoly::var(&VarSet::standard(1), 2, 1));
    assert!(mu_apply(2, &c).is_err());
}

#[test]
fn eta_delta_on_simple_inputs() {
    let v = VarSet::standard(2);
    let z1 = LaurentPoly::var(&v, 1, 1);
    let z2 = LaurentPoly::var(&v, 2, 1);
    let sym = &(&z1 * &z2) + &LaurentPoly::var(&v, 0, 2);
    assert_eq!(eta_apply(1, &sym).unwrap(), sym);
    let c = LaurentPoly::constant(&v, Fe::int(7));
    assert_eq!(delta_apply(1, &c).unwrap(), c);
}

#[test]
fn eta_is_an_involution_on_eta_images() {
    let v = VarSet::standard(2);
    let z1 = LaurentPoly::var(&v, 1, 1);
    let z2 = LaurentPoly::var(&v, 2, 1);
    let f = &(&z2 * &z2) - &(&z1 * &z1);
    let g = eta_apply(1, &f).unwrap();
    assert_eq!(eta_apply(1, &g).unwrap(), f);
}

#[test]
fn factor_f_at_l1() {
    let v = VarSet::standard(1);
    let f = factor_f(1, &v);
    let pt = [Fe::int(2), Fe::int(3), Fe::int(5)];
    let (xl, z, xr) = (&pt[0], &pt[1], &pt[2]);
    let t = |a: &Fe, b: &Fe| &(&(a + b) * &(&(a * b) + &Fe::one())) * &(a * b).inv().unwrap();
    assert_eq!(f.eval(&pt).unwrap(), &t(z, xl) * &t(z, xr));
}

fn pattern_of(p: &LinkPattern) -> Vec<Fe> {
    delta(p.len(), p)
}

#[test]
fn glue_agrees_with_local_actions() {
    // cap(p), a plaquette on sites (2,3), then a left boundary piece on site 1
    let (n, n0) = (Fe::int(3), Fe::frac(5, 2));
    let t = ActionTable::new(3).unwrap();
    let rw: [Fe; 9] = std::array::from_fn(|k| Fe::int(2 + k as i64 * 3));
    let kw: [Fe; 5] = std::array::from_fn(|k| Fe::frac(1 + k as i64, 7));
    for p in enumerate_patterns(3).unwrap() {
        let mut b = DiagramBuilder::new();
        let cap = b.add(Piece::cap(&p, &Fe::one()));
        let pl = b.add(Piece::plaquette(&rw));
        let kl = b.add(Piece::boundary(Side::Left, &kw));
        b.link((cap, 1), (pl, 0)).link((cap, 2), (pl, 1)).link((cap, 0), (kl, 0));
        b.external((kl, 1));
        b.external((pl, 3));
        b.external((pl, 2));
        let d = b.build().unwrap();
        let got: HashMap<LinkPattern, Fe> =
            d.evaluate(&n, &n0).into_iter().map(|(c, w)| (c.to_pattern().unwrap(), w)).collect();
        let mid = t.rcheck_apply(2, &pattern_of(&p), &rw, &n, &n0);
        let want = t.k_apply(Side::Left, &mid, &kw, &n0);
        for (r, w) in want.iter().enumerate() {
            let q = LinkPattern::unrank(3, r);
            assert_eq!(got.get(&q).cloned().unwrap_or_else(Fe::zero), *w, "{p} -> {q}");
        }
    }
}

#[test]
fn glue_rejects_dangling_ports() {
    let mut b: DiagramBuilder<Fe> = DiagramBuilder::new();
    let rw: [Fe; 9] = std::array::from_fn(|_| Fe::one());
    let pl = b.add(Piece::plaquette(&rw));
    b.external((pl, 0));
    assert!(matches!(b.build(), Err(DiagramError::PortMismatch(0, 1))));
}

#[test]
fn glue_counts_loops() {
    // two plaquettes stacked: rho1 under rho3 closes a loop
    let mut rw: [Fe; 9] = std::array::from_fn(|_| Fe::zero());
    rw[0] = Fe::one();
    let mut top: [Fe; 9] = std::array::from_fn(|_| Fe::zero());
    top[2] = Fe::one();
    let mut b = DiagramBuilder::new();
    let lo = b.add(Piece::plaquette(&rw));
    let hi = b.add(Piece::plaquette(&top));
    b.link((lo, 3), (hi, 0)).link((lo, 2), (hi, 1));
    for p in [(lo, 0), (lo, 1), (hi, 3), (hi, 2)] {
        b.external(p);
    }
    let d = b.build().unwrap();
    let out = d.evaluate(&Fe::int(7), &Fe::one());
    assert_eq!(out.len(), 1);
    assert_eq!(out.values().next().unwrap(), &Fe::int(7));
}
