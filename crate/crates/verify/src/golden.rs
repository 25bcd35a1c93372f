//! Reference components for sizes 1 and 2, written out by hand, and the
//! embedded canonical JSON generated from them.

use std::collections::BTreeMap;
use std::sync::Arc;

use dtl_field::Fe;
use dtl_patterns::{LinkPattern, Side};
use dtl_poly::{elementary_symmetric, LaurentPoly, PolyJson, VarSet};
use dtl_qkz::fully_nested_component;

pub const GOLDEN_L1: &str = include_str!("../golden/psi1.json");
pub const GOLDEN_L2: &str = include_str!("../golden/psi2.json");

#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct GoldenJson {
    #[serde(rename = "L")]
    pub l: usize,
    pub components: BTreeMap<String, PolyJson>,
}

struct Build {
    vars: Arc<VarSet>,
}

impl Build {
    fn v(&self, i: usize) -> LaurentPoly {
        LaurentPoly::var(&self.vars, i, 1)
    }
    fn c(&self, a: i64, b: i64) -> LaurentPoly {
        LaurentPoly::constant(&self.vars, Fe::ints(a, b))
    }
    fn e(&self, m: i64, over: &[usize]) -> LaurentPoly {
        elementary_symmetric(&self.vars, m, over)
    }
    /// `x_l^-a z_1^-b .. x_r^-d`
    fn den(&self, e: &[i16]) -> LaurentPoly {
        e.iter().enumerate().fold(self.c(1, 0), |acc, (i, &k)| &acc * &LaurentPoly::var(&self.vars, i, -k))
    }
    /// `E_2 + E_1 E_3` over `over`
    fn e213(&self, over: &[usize]) -> LaurentPoly {
        &self.e(2, over) + &(&self.e(1, over) * &self.e(3, over))
    }
}

fn prod(fs: &[&LaurentPoly]) -> LaurentPoly {
    fs[1..].iter().fold(fs[0].clone(), |a, f| &a * *f)
}

/// Size-1 components.
pub fn reference_l1() -> Vec<(LinkPattern, LaurentPoly)> {
    let k = Build { vars: VarSet::standard(1) };
    let (xl, z, xr) = (k.v(0), k.v(1), k.v(2));
    let (w, one) = (k.c(0, 1), k.c(1, 0));
    let m1 = prod(&[&w, &(&xr + &(&w * &z)), &(&(&(&w * &z) * &xr) + &one), &k.den(&[0, 1, 1])]);
    let p1 = prod(&[&w, &(&(&w * &xl) + &z), &(&(&z * &xl) + &w), &k.den(&[1, 1, 0])]);
    let zero = prod(&[&k.c(-1, 1), &k.e213(&[0, 1, 2]), &k.den(&[1, 1, 1])]);
    vec![(LinkPattern::from_slice(&[-1]), m1), (LinkPattern::from_slice(&[1]), p1), (LinkPattern::from_slice(&[0]), zero)]
}

/// The five listed size-2 components.
pub fn reference_l2() -> Vec<(LinkPattern, LaurentPoly)> {
    let k = Build { vars: VarSet::standard(2) };
    let (xl, z1, z2, xr) = (k.v(0), k.v(1), k.v(2), k.v(3));
    let (w, w2, one) = (k.c(0, 1), k.c(-1, 1), k.c(1, 0));
    let wp1 = &w + &one;
    let sq = |p: &LaurentPoly| p * p;
    let left_pair = &(&(&w * &xl) + &z1) * &(&(&z1 * &xl) + &w);
    let right_pair = &(&xr + &(&w * &z2)) * &(&(&(&w * &z2) * &xr) + &one);
    let all = [0, 1, 2, 3];
    let e31 = &k.e(3, &all) + &(&k.e(1, &all) * &k.e(4, &all));

    let p1m1 = prod(&[&left_pair, &right_pair, &e31, &k.den(&[2, 2, 2, 2])]);

    let t1 = prod(&[&z1, &(&one + &sq(&z2)), &k.e213(&[0, 1, 3])]);
    let t2a = prod(&[&(&sq(&z1) + &one), &xl, &(&xr + &z1), &(&(&z1 * &xr) + &one)]);
    let t2b = prod(&[
        &z1,
        &(&sq(&xl) + &one),
        &(&prod(&[&wp1, &xr, &(&sq(&z1) - &w2)]) + &(&z1 * &(&sq(&xr) + &one))),
    ]);
    let p0m1 = prod(&[&w, &right_pair, &k.den(&[1, 2, 2, 2]), &(&t1 + &(&z2 * &(&t2a + &t2b)))]);

    let u1 = prod(&[&z2, &(&one + &sq(&z1)), &k.e213(&[0, 2, 3])]);
    let u2a = prod(&[&z2, &(&sq(&xl) + &one), &(&xr + &z2), &(&(&z2 * &xr) + &one)]);
    let u2b = &xl
        * &(&prod(&[&wp1, &z2, &(&sq(&xr) + &one), &(&one - &(&w2 * &sq(&z2)))]) + &prod(&[&sq(&(&sq(&z2) + &one)), &xr]));
    let p10 = prod(&[&w, &left_pair, &k.den(&[2, 2, 2, 1]), &(&u1 + &(&z1 * &(&u2a + &u2b)))]);

    let v1 = prod(&[&wp1, &xl, &xr, &(&one + &prod(&[&z1, &z1, &z2, &z2]))]);
    let v2 = prod(&[&(&z1 + &z2), &(&(&(&prod(&[&w, &xl, &xr, &xr]) + &prod(&[&xl, &xl, &xr])) + &(&w * &xl)) + &xr)]);
    let quad = &(&(&(&prod(&[&xl, &xl, &xr, &xr]) + &(&xl * &xr)) + &sq(&xl)) + &sq(&xr)) + &one;
    let v3 = prod(&[&wp1, &z1, &z2, &quad]);
    let v4 = prod(&[&z1, &z2, &(&z1 + &z2), &(&(&(&prod(&[&w, &xl, &xl, &xr]) + &prod(&[&xl, &xr, &xr])) + &xl) + &(&w * &xr))]);
    let m11 = prod(&[
        &w,
        &(&(&z1 * &z2) + &one),
        &(&(&w * &z1) + &z2),
        &k.den(&[1, 2, 2, 1]),
        &(&(&(&v1 + &v2) + &v3) + &v4),
    ]);

    let e = |m| k.e(m, &all);
    let e2 = &(&(&(&e(2) - &e(4)) + &(&e(1) * &e(3))) + &(&e(2) * &e(4)));
    let p00 = prod(&[&w2, &e31, e2, &k.den(&[2, 2, 2, 2])]);

    let lp = LinkPattern::from_slice;
    vec![(lp(&[1, -1]), p1m1), (lp(&[0, -1]), p0m1), (lp(&[1, 0]), p10), (lp(&[-1, 1]), m11), (lp(&[0, 0]), p00)]
}

/// Everything pinned for size `l`: the reference components, and at size 2
/// also both fully nested components.
pub fn reference(l: usize) -> Vec<(LinkPattern, LaurentPoly)> {
    match l {
        1 => reference_l1(),
        2 => {
            let mut v = reference_l2();
            v.push((LinkPattern::from_slice(&[-1, -1]), fully_nested_component(2, Side::Left)));
            v.push((LinkPattern::from_slice(&[1, 1]), fully_nested_component(2, Side::Right)));
            v
        }
        _ => Vec::new(),
    }
}

pub fn golden_json(l: usize) -> GoldenJson {
    GoldenJson { l, components: reference(l).into_iter().map(|(p, f)| (p.to_string(), f.to_json())).collect() }
}

/// Canonical text of the golden file for size `l`.
pub fn golden_text(l: usize) -> String {
    let mut s = serde_json::to_string_pretty(&golden_json(l)).expect("serializable");
    s.push('\n');
    s
}

pub fn embedded(l: usize) -> Option<GoldenJson> {
    let text = match l {
        1 => GOLDEN_L1,
        2 => GOLDEN_L2,
        _ => return None,
    };
    serde_json::from_str(text).ok()
}
