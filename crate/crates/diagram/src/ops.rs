//! Scalar operators on components.

use std::sync::Arc;

use dtl_field::Fe;
use dtl_patterns::Side;
use dtl_poly::{LaurentPoly, Mono, PolyError, VarSet};

use crate::weights::{boundary_omega_x, bulk_norm, bulk_omega};

/// Number of bulk sites in a standard variable set.
fn sites(f: &LaurentPoly) -> usize {
    f.vars().bulk_count()
}

fn z(vars: &Arc<VarSet>, i: usize) -> LaurentPoly {
    LaurentPoly::var(vars, i, 1)
}

/// `tau_i`: exchange `z_i` and `z_{i+1}`.
pub fn tau_apply(i: usize, f: &LaurentPoly) -> LaurentPoly {
    f.swap(i, i + 1)
}

/// `sigma_l` (`z_1 -> 1/z_1`) or `sigma_r` (`z_L -> 1/z_L`).
pub fn sigma_apply(side: Side, f: &LaurentPoly) -> LaurentPoly {
    match side {
        Side::Left => f.invert_var(1),
        Side::Right => f.invert_var(sites(f)),
    }
}

/// `mu_i`: `z_i -> omega z_i`, `z_{i+1} -> z_i/omega`, later sites shift down.
/// Takes a polynomial over `VarSet::standard(L+1)`.
pub fn mu_apply(i: usize, f: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
    let big = sites(f);
    if i == 0 || i >= big {
        return Err(PolyError::UnknownVariable(format!("z{}", i + 1)));
    }
    let g = f.scale_var_omega(i, 1).scale_var_omega(i + 1, -1);
    let small = VarSet::standard(big - 1);
    let map: Vec<Option<usize>> = (0..big + 2)
        .map(|j| Some(if j <= i { j } else { j - 1 }))
        .collect();
    g.reindex(&small, &map)
}

/// `eta_i = W/r_5 (tau_i - 1) + 1`.
pub fn eta_apply(i: usize, f: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
    let v = f.vars();
    let (a, b) = (z(v, i), z(v, i + 1));
    let w = bulk_norm(&a, &b);
    let r5 = &bulk_omega(&a, &b)[4];
    let num = &w * &(&tau_apply(i, f) - f);
    Ok(&num.exact_div(r5)? + f)
}

/// `delta_i = (W tau_i - r_7)/r_1`.
pub fn delta_apply(i: usize, f: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
    let v = f.vars();
    let (a, b) = (z(v, i), z(v, i + 1));
    let r = bulk_omega(&a, &b);
    let num = &(&bulk_norm(&a, &b) * &tau_apply(i, f)) - &(&r[6] * f);
    num.exact_div(&r[0])
}

/// Boundary weights and `U` for one side in the `x` form, at site 1 or `L`.
pub fn boundary_weights_poly(side: Side, vars: &Arc<VarSet>) -> Result<([LaurentPoly; 5], LaurentPoly), PolyError> {
    let (zv, xv) = match side {
        Side::Left => (LaurentPoly::var(vars, vars.bulk(1)?, 1), LaurentPoly::var(vars, vars.left()?, 1)),
        Side::Right => (
            LaurentPoly::var(vars, vars.bulk(vars.bulk_count())?, -1),
            LaurentPoly::var(vars, vars.right()?, 1),
        ),
    };
    Ok(boundary_omega_x(&zv, &xv))
}

/// `gamma = (U sigma - k_3)/k_2` on the given side.
pub fn gamma_apply(side: Side, f: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
    let (k, u) = boundary_weights_poly(side, f.vars())?;
    let num = &(&u * &sigma_apply(side, f)) - &(&k[2] * f);
    num.exact_div(&k[1])
}

/// `F_i = prod_{0 <= j != i <= L+1} (z_i+z_j)(z_i z_j+1)/(z_i z_j)` over
/// `VarSet::standard(L)`, where `z_0 = x_l` and `z_{L+1} = x_r`.
pub fn factor_f(i: usize, vars: &Arc<VarSet>) -> LaurentPoly {
    factor_f_parts(i, vars).iter().fold(LaurentPoly::one(vars), |a, f| &a * f)
}

/// The binomial and monomial factors of `F_i`, unexpanded.
pub fn factor_f_parts(i: usize, vars: &Arc<VarSet>) -> Vec<LaurentPoly> {
    let l = vars.bulk_count();
    let zi = z(vars, i);
    let mut out = Vec::new();
    for j in 0..=l + 1 {
        if j == i {
            continue;
        }
        let zj = z(vars, j);
        let prod = &zi * &zj;
        out.push(&zi + &zj);
        out.push(&prod + &LaurentPoly::one(vars));
        out.push(LaurentPoly::monomial(vars, Mono::var(i, -1).mul(&Mono::var(j, -1)), Fe::one()));
    }
    out
}
