//! Checks on solved ground states.

use std::collections::BTreeMap;

use dtl_diagram::weights::{boundary_omega_zeta, bulk_norm, bulk_omega, zeta_of_x};
use dtl_diagram::{factor_f, merge_pattern, mu_apply, ActionTable, BoundaryKind, PlaquetteKind};
use dtl_field::Fe;
use dtl_patterns::{LinkPattern, Side};
use dtl_poly::LaurentPoly;
use dtl_qkz::{fully_nested_component, partition_sum, solve_ground_state, GroundState};
use dtl_transfer::{build_transfer_matrix, eigen_check, Params};

use crate::golden::{embedded, reference};
use crate::{params, Report, Sampler};

/// Embedded golden components, parsed.
pub fn golden_components(l: usize) -> Option<Vec<(LinkPattern, LaurentPoly)>> {
    let g = embedded(l)?;
    let vars = dtl_poly::VarSet::standard(l);
    g.components
        .iter()
        .map(|(k, j)| Some((k.parse().ok()?, LaurentPoly::from_json(&vars, j).ok()?)))
        .collect()
}

/// Solve sizes 1 and 2 and compare with the embedded golden vectors under
/// canonical serialization. The embedded file must also agree with the
/// hand-written reference it was generated from.
pub fn verify_golden() -> Report {
    let mut rep = Report::new("golden", 0, 0);
    for l in 1..=2 {
        let Some(gold) = golden_components(l) else {
            rep.fail(params([("L", l.to_string())]), "embedded golden file unreadable");
            continue;
        };
        let want: BTreeMap<String, Vec<u8>> =
            reference(l).iter().map(|(p, f)| (p.to_string(), f.canonical_bytes())).collect();
        let got: BTreeMap<String, Vec<u8>> = gold.iter().map(|(p, f)| (p.to_string(), f.canonical_bytes())).collect();
        if got != want {
            rep.fail(params([("L", l.to_string())]), "embedded golden file differs from the reference");
        }
        let gs = match solve_ground_state(l) {
            Ok(g) => g,
            Err(e) => {
                rep.fail(params([("L", l.to_string())]), format!("solve: {e}"));
                continue;
            }
        };
        for (p, f) in &gold {
            rep.samples += 1;
            if gs.get(p).canonical_bytes() != f.canonical_bytes() {
                rep.fail(params([("L", l.to_string())]), format!("component {p}"));
            }
        }
    }
    rep
}

/// Every qKZ equation, exactly.
pub fn verify_qkz(gs: &GroundState) -> Report {
    let mut rep = Report::new(format!("qkz L={}", gs.l), 0, 0);
    match gs.verify() {
        Ok(q) => {
            rep.samples = q.equations;
            for f in q.failures {
                rep.fail(params([("L", gs.l.to_string())]), format!("{} at {}", f.equation, f.pattern));
            }
        }
        Err(e) => rep.fail(params([("L", gs.l.to_string())]), e.to_string()),
    }
    rep
}

/// `mu_i psi_p = F_i psi_{M_i p}`, or zero when the merge discards `p`.
pub fn verify_recurrence(big: &GroundState, small: &GroundState, i: usize) -> Report {
    let mut rep = Report::new(format!("recurrence L={}->{} i={i}", big.l, small.l), 0, big.components.len());
    if big.l != small.l + 1 || i == 0 || i > small.l {
        rep.fail(params([("i", i.to_string())]), "sizes or site out of range");
        return rep;
    }
    let f = factor_f(i, &small.vars);
    let mut cases = [0usize; 5];
    for (p, c) in big.patterns() {
        let got = match mu_apply(i, c) {
            Ok(g) => g,
            Err(e) => {
                rep.fail(params([("pattern", p.to_string())]), e.to_string());
                continue;
            }
        };
        let (a, b) = (p.get(i), p.get(i + 1));
        let case = match (a, b) {
            (1, -1) => 1,
            (0, 0) => 4,
            (_, 0) => 2,
            (0, _) => 3,
            _ => 0,
        };
        cases[case] += 1;
        let want = match merge_pattern(i, &p) {
            Some(q) => &f * small.get(&q),
            None => LaurentPoly::zero(&small.vars),
        };
        if got != want {
            rep.fail(params([("pattern", p.to_string())]), format!("mu_{i} psi_{p}"));
        }
    }
    rep.note(format!(
        "patterns by case: vanishing {}, arch {}, (v,0) {}, (0,v) {}, (0,0) {}",
        cases[0], cases[1], cases[2], cases[3], cases[4]
    ));
    rep
}

/// `T Psi = lambda Psi` at random exact points and `ts` values of `t`.
/// `lambda` is compared with the common column sum of `T`; their ratio is 1
/// for every `t`.
pub fn verify_eigen(gs: &GroundState, samples: usize, ts: usize, seed: u64) -> Report {
    let mut rep = Report::new(format!("eigen L={}", gs.l), seed, samples);
    let l = gs.l;
    let res = dtl_par::map_range(samples, |k| {
        let mut s = Sampler::for_sample(seed, k);
        let xl = s.rat();
        let xr = s.rat();
        let z: Vec<Fe> = (0..l).map(|_| s.rat()).collect();
        let mut pt = vec![xl.clone()];
        pt.extend(z.iter().cloned());
        pt.push(xr.clone());
        let mut p = params([("x_l", xl.to_string()), ("x_r", xr.to_string())]);
        for (i, zi) in z.iter().enumerate() {
            p.insert(format!("z{}", i + 1), zi.to_string());
        }
        let v = gs.eval(&pt).map_err(|e| (p.clone(), e.to_string()))?;
        let zl = zeta_of_x(&xl).map_err(|e| (p.clone(), e.to_string()))?;
        let zr = zeta_of_x(&xr).map_err(|e| (p.clone(), e.to_string()))?;
        for j in 0..ts {
            let t = s.rat();
            p.insert(format!("t{}", j + 1), t.to_string());
            let m = build_transfer_matrix(&Params::new(t.clone(), z.clone(), zl.clone(), zr.clone()))
                .map_err(|e| (p.clone(), e.to_string()))?;
            let ev = eigen_check(&m, &v).map_err(|e| (p.clone(), format!("t={t}: {e}")))?;
            let cs = m.column_sums();
            if ev.lambda != cs[0] {
                return Err((p, format!("t={t}: eigenvalue differs from the column sum")));
            }
        }
        Ok(())
    });
    for r in res {
        if let Err((p, e)) = r {
            rep.fail(p, e);
        }
    }
    rep
}

/// Images of every basis pattern weigh `W` in the bulk and `U` at each
/// wall, for every size up to `max_l`.
pub fn verify_stochasticity(max_l: usize, samples: usize, seed: u64) -> Report {
    let mut rep = Report::new(format!("stochasticity L<={max_l}"), seed, samples);
    let tables: Vec<ActionTable> = (1..=max_l).map(|l| ActionTable::new(l).expect("small size")).collect();
    let res = dtl_par::map_range(samples, |k| {
        let mut s = Sampler::for_sample(seed, k);
        let (a, b) = (s.rat(), s.rat());
        let (z, zeta) = (s.rat(), s.rat());
        let p = params([("a", a.to_string()), ("b", b.to_string()), ("z", z.to_string()), ("zeta", zeta.to_string())]);
        let r = bulk_omega(&a, &b);
        let norm = bulk_norm(&a, &b);
        let (kw, u) = boundary_omega_zeta(&z, &zeta).map_err(|e| (p.clone(), e.to_string()))?;
        for (li, t) in tables.iter().enumerate() {
            let l = li + 1;
            for src in 0..t.size() {
                for i in 1..l {
                    let sum = PlaquetteKind::all()
                        .filter(|kind| t.bulk(i, *kind)[src].is_some())
                        .fold(Fe::zero(), |acc, kind| acc + &r[kind.id() as usize - 1]);
                    if sum != norm {
                        return Err((p, format!("bulk L={l} i={i} on {}", LinkPattern::unrank(l, src))));
                    }
                }
                for side in [Side::Left, Side::Right] {
                    let sum = BoundaryKind::all(side)
                        .filter(|b| t.boundary(*b)[src].is_some())
                        .fold(Fe::zero(), |acc, b| acc + &kw[b.id() as usize - 1]);
                    if sum != u {
                        return Err((p, format!("{side:?} wall L={l} on {}", LinkPattern::unrank(l, src))));
                    }
                }
            }
        }
        Ok(())
    });
    for r in res {
        if let Err((p, e)) = r {
            rep.fail(p, e);
        }
    }
    rep
}

/// The fully nested component carries `prod_{i<j} (w z_i + z_j)`, and the
/// sum of all components is symmetric in the `z`. Whether that sum is a
/// constant multiple of the empty-pattern component is recorded, not asserted.
pub fn verify_structure(gs: &GroundState) -> Report {
    let l = gs.l;
    let mut rep = Report::new(format!("structure L={l}"), 0, 1);
    let w = LaurentPoly::constant(&gs.vars, Fe::omega());
    let mut f = gs.get(&LinkPattern::from_slice(&vec![-1; l])).clone();
    if f != fully_nested_component(l, Side::Left) {
        rep.fail(params([("L", l.to_string())]), "fully nested component differs from the product formula");
    }
    for i in 1..=l {
        for j in i + 1..=l {
            let d = &(&w * &LaurentPoly::var(&gs.vars, i, 1)) + &LaurentPoly::var(&gs.vars, j, 1);
            match f.try_div(&d) {
                Some(q) => f = q,
                None => rep.fail(params([("L", l.to_string())]), format!("no factor (w z{i} + z{j})")),
            }
        }
    }
    let (_, pr) = partition_sum(gs);
    if !pr.symmetric {
        rep.fail(params([("L", l.to_string())]), "sum of components is not symmetric");
    }
    rep.note(match &pr.ratio {
        Some(c) => format!("Z_L / psi_empty = {c} (constant)"),
        None => "Z_L / psi_empty is not a constant".to_string(),
    });
    rep
}
