//! Yang-Baxter and boundary Yang-Baxter equations with generic-`q` weights,
//! compared as connectivity tables of diagram sums.

use std::collections::HashMap;

use dtl_diagram::weights::{boundary_generic, bulk_generic, bulk_omega, loop_weight};
use dtl_diagram::{first_difference, Connectivity};
use dtl_field::{FieldError, Fe};
use dtl_patterns::Side;

use crate::chain::{chain_table, describe, Op, Weights};
use crate::{params, Report, Sampler};

/// Generic weights at one sample.
pub struct Generic {
    pub q: Fe,
    /// rationalized boundary parameter
    pub xi: Fe,
    pub n0: Fe,
    /// scale applied to `r_7`, for negative controls
    pub r7_scale: Fe,
}

impl Weights for Generic {
    fn bulk(&self, a: &Fe, b: &Fe) -> Result<[Fe; 9], FieldError> {
        let mut r = bulk_generic(&self.q, &b.checked_div(a)?);
        r.swap(0, 1);
        r.swap(2, 3);
        r[6] = &r[6] * &self.r7_scale;
        Ok(r)
    }

    fn boundary(&self, side: Side, z: &Fe) -> Result<[Fe; 5], FieldError> {
        // the right wall is the mirror image: it sees the inverse rapidity
        match side {
            Side::Left => boundary_generic(&self.q, z, &self.xi, &self.n0),
            Side::Right => boundary_generic(&self.q, &z.inv()?, &self.xi, &self.n0),
        }
    }
}

/// Omega weights in homogeneous form.
pub struct Omega;

impl Weights for Omega {
    fn bulk(&self, a: &Fe, b: &Fe) -> Result<[Fe; 9], FieldError> {
        Ok(bulk_omega(a, b))
    }

    fn boundary(&self, _side: Side, _z: &Fe) -> Result<[Fe; 5], FieldError> {
        unreachable!("bulk only")
    }
}

fn ok_q(q: &Fe) -> bool {
    // q^4 = 1 makes every weight degenerate
    !(&q.powu(4) - &Fe::one()).is_zero()
}

#[derive(Clone, Debug)]
pub struct YbeOptions {
    pub samples: usize,
    pub seed: u64,
    /// sample `q` (otherwise `q = omega`)
    pub generic: bool,
    pub r7_scale: Fe,
}

impl YbeOptions {
    pub fn new(samples: usize, seed: u64) -> Self {
        YbeOptions { samples, seed, generic: true, r7_scale: Fe::one() }
    }
}

/// Total degree of the cleared identity in `(q, x, y, z)`: three weights of
/// degree 4 in the rapidities and 10 in `q`, at most one closed loop (`q^4 n`
/// has degree 8).
pub const YBE_DEGREE: u32 = 3 * 4 + 3 * 10 + 8;

fn ybe_sides() -> (Vec<Op>, Vec<Op>) {
    // R2(z/y) R1(z/x) R2(y/x) = R1(y/x) R2(z/x) R1(z/y), listed bottom first
    (vec![Op::R(1), Op::R(0), Op::R(1)], vec![Op::R(0), Op::R(1), Op::R(0)])
}

pub fn verify_ybe(opts: &YbeOptions) -> Report {
    let name = if opts.generic { "ybe" } else { "ybe-omega" };
    let mut rep = Report::new(name, opts.seed, opts.samples);
    rep.degree_bound = Some(YBE_DEGREE);
    let (lhs, rhs) = ybe_sides();
    let results = dtl_par::map_range(opts.samples, |k| {
        let mut s = Sampler::for_sample(opts.seed, k);
        let q = if opts.generic { s.rat_where(ok_q) } else { Fe::omega() };
        let raps = [s.rat(), s.rat(), s.rat()];
        let w = Generic { q: q.clone(), xi: Fe::zero(), n0: Fe::one(), r7_scale: opts.r7_scale.clone() };
        let n = loop_weight(&q).expect("q nonzero");
        let one = Fe::one();
        let a = chain_table(3, &raps, &lhs, &w, &n, &one, &one).expect("sampled away from poles");
        let b = chain_table(3, &raps, &rhs, &w, &n, &one, &one).expect("sampled away from poles");
        let p = params([
            ("q", q.to_string()),
            ("x", raps[0].to_string()),
            ("y", raps[1].to_string()),
            ("z", raps[2].to_string()),
        ]);
        first_difference(&a, &b).map(|c| (p, describe(&c, 3)))
    });
    for r in results.into_iter().flatten() {
        rep.fail(r.0, r.1);
    }
    rep
}

#[derive(Clone, Debug)]
pub struct BybOptions {
    pub side: Side,
    pub samples: usize,
    pub seed: u64,
    /// weight of a line with both ends on this wall, as a multiple of `n0`;
    /// `None` means exactly `n0`
    pub same_side: Option<Fe>,
    /// sample the boundary parameter as zero
    pub zero_zeta: bool,
}

impl BybOptions {
    pub fn new(side: Side, samples: usize, seed: u64) -> Self {
        BybOptions { side, samples, seed, same_side: None, zero_zeta: false }
    }
}

/// Bound for the cleared identity in `(q, z, w, xi, n0)`: bulk weights at
/// `w/z` and `1/(wz)` (degrees 4 and 8 in the rapidities, 10 each in `q`),
/// two boundary weights (at most 13 each), and at most two closed curves.
pub const BYB_DEGREE: u32 = (4 + 10) + (8 + 10) + 2 * 13 + 2 * 8;

fn byb_sides(side: Side) -> (Vec<Op>, Vec<Op>) {
    // right: R(w/z) K(z) R(1/(wz)) K(w) = K(w) R(1/(wz)) K(z) R(w/z), rapidities (z, w)
    let k = Op::K(side);
    let r = Op::R(0);
    (vec![k, r, k, r], vec![r, k, r, k])
}

fn byb_rapidities(side: Side, z: &Fe, w: &Fe) -> Vec<Fe> {
    match side {
        Side::Right => vec![z.clone(), w.clone()],
        Side::Left => vec![w.clone(), z.clone()],
    }
}

type Table = HashMap<Connectivity, Fe>;

fn byb_tables(side: Side, g: &Generic, z: &Fe, w: &Fe, same: &Fe) -> Result<(Table, Table), FieldError> {
    let (lhs, rhs) = byb_sides(side);
    let raps = byb_rapidities(side, z, w);
    let n = loop_weight(&g.q)?;
    let a = chain_table(2, &raps, &lhs, g, &n, &g.n0, same)?;
    let b = chain_table(2, &raps, &rhs, g, &n, &g.n0, same)?;
    Ok((a, b))
}

pub fn verify_byb(opts: &BybOptions) -> Report {
    let name = match opts.side {
        Side::Left => "byb-left",
        Side::Right => "byb-right",
    };
    let mut rep = Report::new(name, opts.seed, opts.samples);
    rep.degree_bound = Some(BYB_DEGREE);
    let results = dtl_par::map_range(opts.samples, |k| {
        let mut s = Sampler::for_sample(opts.seed, k);
        let q = s.rat_where(ok_q);
        let (z, w) = (s.rat(), s.rat());
        let xi = if opts.zero_zeta { Fe::zero() } else { s.rat() };
        let n0 = s.rat();
        let same = match &opts.same_side {
            None => n0.clone(),
            Some(c) => c * &n0,
        };
        let g = Generic { q: q.clone(), xi: xi.clone(), n0: n0.clone(), r7_scale: Fe::one() };
        let p = params([
            ("q", q.to_string()),
            ("z", z.to_string()),
            ("w", w.to_string()),
            ("xi", xi.to_string()),
            ("n0", n0.to_string()),
        ]);
        match byb_tables(opts.side, &g, &z, &w, &same) {
            Ok((a, b)) => first_difference(&a, &b).map(|c| (p, describe(&c, 2))),
            Err(e) => Some((p, format!("pole: {e}"))),
        }
    });
    for r in results.into_iter().flatten() {
        rep.fail(r.0, r.1);
    }
    rep
}

/// Does the boundary equation still hold when same-wall lines weigh `c n0`?
/// Runs the check for each `c` and reports which ones pass.
pub fn byb_same_side_experiment(samples: usize, seed: u64, factors: &[Fe]) -> Report {
    let mut rep = Report::new("byb-same-side-n0", seed, samples);
    for c in factors {
        for side in [Side::Left, Side::Right] {
            let mut o = BybOptions::new(side, samples, seed);
            o.same_side = Some(c.clone());
            let r = verify_byb(&o);
            rep.note(format!("same-wall line weight {c}*n0, {side:?}: {}", if r.pass { "holds" } else { "fails" }));
            if c.is_one() && !r.pass {
                rep.fail(r.counterexample.map(|x| x.params).unwrap_or_default(), "convention n0 breaks the equation");
            }
        }
    }
    rep
}
