//! The factorization of `Rcheck` at the point where `r_9` vanishes, and the
//! merge identity `M R R = (z^2 - t^2) R M` as diagram sums.

use std::collections::HashMap;

use dtl_diagram::weights::{arch_coeff, bulk_omega};
use dtl_diagram::{
    first_difference, merge_join_apply, split_apply, ActionTable, Choice, Connectivity, Diagram, DiagramBuilder, End, Inner,
    Piece,
};
use dtl_field::Fe;
use dtl_patterns::LinkPattern;

use crate::{params, Report, Sampler};

/// `Rcheck_i(z/w, z w) = c (w^2+w) z^2 S_i M_i` on every basis pattern of
/// `lp_2` and `lp_3`; `c = 1` is the identity, anything else a control.
pub fn verify_factorization(samples: usize, seed: u64, scale: &Fe) -> Report {
    let mut rep = Report::new("factorization", seed, samples);
    let w = Fe::omega();
    let one = Fe::one();
    let tables: Vec<ActionTable> = (2..=3).map(|l| ActionTable::new(l).expect("small size")).collect();
    let res = dtl_par::map_range(samples, |k| {
        let z = Sampler::for_sample(seed, k).rat();
        let a = &z * &w.inv().expect("nonzero");
        let b = &z * &w;
        let r = bulk_omega(&a, &b);
        let p = params([("z", z.to_string())]);
        if !r[8].is_zero() {
            return Some((p, "r9 does not vanish".to_string()));
        }
        let c = &(&arch_coeff() * &(&z * &z)) * scale;
        for t in &tables {
            let l = (t.size() as f64).log(3.0).round() as usize;
            for i in 1..l {
                for src in 0..t.size() {
                    let mut v = vec![Fe::zero(); t.size()];
                    v[src] = one.clone();
                    let lhs = t.rcheck_apply(i, &v, &r, &one, &one);
                    let rhs: Vec<Fe> =
                        split_apply(i, l - 1, &merge_join_apply(i, l, &v, &one, &one)).iter().map(|x| x * &c).collect();
                    if lhs != rhs {
                        return Some((p, format!("L={l} i={i} on {}", LinkPattern::unrank(l, src))));
                    }
                }
            }
        }
        None
    });
    for r in res.into_iter().flatten() {
        rep.fail(r.0, r.1);
    }
    rep
}

/// Merge piece: ports `0, 1` below, `2` above.
fn merge_piece() -> Piece<Fe> {
    let mk = |inner: Vec<Inner>, tag| Choice { inner, weight: Fe::one(), tag };
    let f = Inner::Free;
    Piece {
        ports: 3,
        choices: vec![
            mk(vec![f, f, f], 0),
            mk(vec![Inner::Port(1), Inner::Port(0), f], 1),
            mk(vec![Inner::Port(2), f, Inner::Port(0)], 2),
            mk(vec![f, Inner::Port(2), Inner::Port(1)], 3),
        ],
    }
}

/// Plaquette ports as the auxiliary line sees them: west, south, east, north.
const WEST: u8 = 0;
const SOUTH: u8 = 1;
const EAST: u8 = 2;
const NORTH: u8 = 3;

type Table = HashMap<Connectivity, Fe>;

/// Left side: the auxiliary line crosses `z/w` then `z w`, then the two tops merge.
/// External ports: west, south 1, south 2, east, top.
fn merge_lhs(t: &Fe, z: &Fe) -> Diagram<Fe> {
    let w = Fe::omega();
    let mut b = DiagramBuilder::new();
    let p1 = b.add(Piece::plaquette(&bulk_omega(t, &(z * &w.inv().expect("nonzero")))));
    let p2 = b.add(Piece::plaquette(&bulk_omega(t, &(z * &w))));
    let m = b.add(merge_piece());
    b.link((p1, EAST), (p2, WEST));
    b.link((p1, NORTH), (m, 0)).link((p2, NORTH), (m, 1));
    b.external((p1, WEST));
    b.external((p1, SOUTH));
    b.external((p2, SOUTH));
    b.external((p2, EAST));
    b.external((m, 2));
    b.build().expect("complete wiring")
}

/// Right side: the two bottoms merge, then the line crosses `z`.
fn merge_rhs(t: &Fe, z: &Fe) -> Table {
    let mut b = DiagramBuilder::new();
    let m = b.add(merge_piece());
    let p = b.add(Piece::plaquette(&bulk_omega(t, z)));
    b.link((m, 2), (p, SOUTH));
    b.external((p, WEST));
    b.external((m, 0));
    b.external((m, 1));
    b.external((p, EAST));
    b.external((p, NORTH));
    let one = Fe::one();
    b.build().expect("complete wiring").evaluate(&one, &one)
}

fn port_name(j: usize) -> &'static str {
    ["west", "south1", "south2", "east", "top"][j]
}

/// Both bottom edges occupied and not joined to each other: absent on the right.
fn split_bottom(c: &Connectivity) -> bool {
    let (a, b) = (c.ends[1], c.ends[2]);
    a != End::Free && b != End::Free && a != End::External(2)
}

fn describe_ports(c: &Connectivity) -> String {
    c.ends
        .iter()
        .enumerate()
        .map(|(j, e)| match e {
            End::Free => format!("{}:-", port_name(j)),
            End::External(k) => format!("{}:{}", port_name(j), port_name(*k)),
            End::Wall(s) => format!("{}:{s:?}", port_name(j)),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Compare `M R R` with `(z^2 - t^2) R M` in every external sector, check the
/// all-empty sector against `(t^2 - z^2)^2`, and check that the sectors with
/// both bottom edges on different lines, which the right side lacks, receive
/// nonzero terms that cancel.
pub fn verify_merge_identity(samples: usize, seed: u64) -> Report {
    let mut rep = Report::new("merge", seed, samples);
    let one = Fe::one();
    let res = dtl_par::map_range(samples, |k| {
        let mut s = Sampler::for_sample(seed, k);
        let t = s.rat();
        let z = s.rat_where(|z| *z != t && *z != -t.clone());
        let p = params([("t", t.to_string()), ("z", z.to_string())]);
        let d = merge_lhs(&t, &z);
        let lhs = d.evaluate(&one, &one);
        let f = &(&z * &z) - &(&t * &t);
        let rhs: Table = merge_rhs(&t, &z).into_iter().map(|(c, v)| (c, &v * &f)).collect();
        if let Some(c) = first_difference(&lhs, &rhs) {
            return Err((p, describe_ports(&c)));
        }
        let empty = Connectivity { ends: vec![End::Free; 5] };
        let e = &(&t * &t) - &(&z * &z);
        if lhs.get(&empty) != Some(&(&e * &e)) {
            return Err((p, "all-empty sector".into()));
        }
        let mut cancelled = 0usize;
        d.for_each(|sel, w| {
            if !w.is_zero() && split_bottom(&d.connectivity(sel).0) {
                cancelled += 1;
            }
        });
        if let Some(c) = lhs.keys().find(|c| split_bottom(c)) {
            return Err((p, format!("uncancelled sector {}", describe_ports(c))));
        }
        Ok(cancelled)
    });
    let mut cancelled = 0;
    for r in res {
        match r {
            Ok(n) => cancelled += n,
            Err((p, e)) => rep.fail(p, e),
        }
    }
    rep.note(format!("{cancelled} nonzero terms in split-bottom sectors cancelled"));
    if cancelled == 0 && rep.pass {
        rep.fail(Default::default(), "no terms in the split-bottom sectors; cancellation not exercised");
    }
    rep
}
