//! Weight tables. The omega tables are written over any [`Ring`], so the
//! same formulas serve exact samples and symbolic components.

use dtl_field::Fe;
use dtl_poly::Ring;

fn w() -> Fe {
    Fe::omega()
}

fn w2() -> Fe {
    Fe::omega().powu(2)
}

/// `omega^2 + omega`
pub fn arch_coeff() -> Fe {
    w2() + w()
}

/// Bulk weights `r_1..r_9` of `R(z_i, z_{i+1})` at `q = omega`, homogenized
/// in `a = z_i`, `b = z_{i+1}`.
pub fn bulk_omega<R: Ring>(a: &R, b: &R) -> [R; 9] {
    let ab = a.r_mul(b).r_scale(&arch_coeff());
    let d = b.r_sq().r_sub(&a.r_sq());
    let r8 = a.r_scale(&w()).r_add(b).r_mul(&b.r_scale(&w2()).r_add(a)).r_neg();
    let r9 = a.r_scale(&w2()).r_add(b).r_mul(&b.r_scale(&w()).r_add(a));
    [ab.clone(), ab.clone(), ab.clone(), ab, d.clone(), d.clone(), d, r8, r9]
}

/// Row normalization `W(a, b) = (omega a + b)(omega^2 a + b)`.
pub fn bulk_norm<R: Ring>(a: &R, b: &R) -> R {
    a.r_scale(&w()).r_add(b).r_mul(&a.r_scale(&w2()).r_add(b))
}

/// Bulk weights at `q = omega` as functions of the single ratio `z`.
pub fn bulk_omega_ratio(z: &Fe) -> [Fe; 9] {
    bulk_omega(&Fe::one(), z)
}

/// Coefficients of `1, zeta, zeta^2` in `zeta z^2 k_i` for `k_1..k_5`, then `U`.
fn boundary_coeffs<R: Ring>(z: &R) -> [[R; 3]; 6] {
    let zero = z.r_zero();
    let one = z.r_one();
    let z2 = z.r_sq();
    let z2m1 = z2.r_sub(&one);
    let w1 = Fe::one() + w();
    let k12 = z2m1.r_mul(z).r_scale(&-w1.clone());
    let k3 = z2.r_sq().r_sub(&z2).r_add(&one).r_scale(&w());
    let k4 = z2m1.r_mul(&one.r_scale(&w()).r_sub(&z2)).r_scale(&-w1);
    let k5 = z2.r_sub(&one.r_scale(&w())).r_sq().r_neg();
    // U = -(A1 zeta + A0)(B1 zeta + B0)
    let a1 = one.r_scale(&w()).r_sub(&z2);
    let a0 = z.clone();
    let b1 = z2.r_scale(&w()).r_sub(&one);
    let b0 = z.r_neg();
    let u = [
        a0.r_mul(&b0).r_neg(),
        a1.r_mul(&b0).r_add(&a0.r_mul(&b1)).r_neg(),
        a1.r_mul(&b1).r_neg(),
    ];
    [
        [zero.clone(), k12.clone(), zero.clone()],
        [zero.clone(), k12, zero.clone()],
        [z2.clone(), zero.clone(), k3],
        [zero.clone(), zero.clone(), k4],
        [z2, zero, k5],
        u,
    ]
}

/// Left boundary weights `k_1..k_5` and the normalization `U` at `q = omega`,
/// at exact `z` and `zeta`.
pub fn boundary_omega_zeta(z: &Fe, zeta: &Fe) -> Result<([Fe; 5], Fe), dtl_field::FieldError> {
    let cs = boundary_coeffs(z);
    let scale = (zeta * &(z * z)).inv()?;
    let ev = |c: &[Fe; 3]| (&c[0] + &(&c[1] * zeta) + &c[2] * &(zeta * zeta)) * &scale;
    Ok(([ev(&cs[0]), ev(&cs[1]), ev(&cs[2]), ev(&cs[3]), ev(&cs[4])], ev(&cs[5])))
}

/// Left boundary weights and `U` in the `x` parametrization, all multiplied by
/// the common factor `zeta z^2 (x^2+1)^2 = omega x z^2 (x^2+1)`.
/// Pass `z = 1/z_L` and `x = x_r` for the right boundary.
pub fn boundary_omega_x<R: Ring>(z: &R, x: &R) -> ([R; 5], R) {
    let cs = boundary_coeffs(z);
    let c = x.r_sq().r_add(&x.r_one());
    let c2 = c.r_sq();
    let wxc = x.r_mul(&c).r_scale(&w());
    let w2x2 = x.r_sq().r_scale(&w2());
    let ev = |k: &[R; 3]| k[0].r_mul(&c2).r_add(&k[1].r_mul(&wxc)).r_add(&k[2].r_mul(&w2x2));
    ([ev(&cs[0]), ev(&cs[1]), ev(&cs[2]), ev(&cs[3]), ev(&cs[4])], ev(&cs[5]))
}

/// `zeta = omega x/(x^2+1)`.
pub fn zeta_of_x(x: &Fe) -> Result<Fe, dtl_field::FieldError> {
    Ok(&(Fe::omega() * x) * &(x * x + Fe::one()).inv()?)
}

/// An `x` with `zeta_of_x(x) = zeta`, if one lies in the field. The two
/// solutions are `x` and `1/x`; the one built from `Fe::sqrt` is returned.
pub fn x_of_zeta(zeta: &Fe) -> Option<Fe> {
    if zeta.is_zero() {
        return Some(Fe::zero());
    }
    let w = Fe::omega();
    let d = (&w * &w - Fe::int(4) * zeta * zeta).sqrt()?;
    (w + d).checked_div(&(Fe::int(2) * zeta)).ok()
}

/// Loop weight `n = -(q^4 + q^-4)`.
pub fn loop_weight(q: &Fe) -> Result<Fe, dtl_field::FieldError> {
    let q4 = q.powu(4);
    Ok(-(&q4 + &q4.inv()?))
}

/// Generic-`q` bulk weights `r_1..r_9` at ratio `z`.
pub fn bulk_generic(q: &Fe, z: &Fe) -> [Fe; 9] {
    let one = Fe::one();
    let z2 = z * z;
    let (q2, q3, q4) = (q.powu(2), q.powu(3), q.powu(4));
    let (q6, q8) = (q.powu(6), q.powu(8));
    let q4m1 = &q4 - &one;
    let r1 = -(&(&q4m1 * z) * &(&q6 - &z2));
    let r2 = -(&(&(&q3 * &q4m1) * z) * &(&z2 - &one));
    let r5 = -(&(&q2 * &(&z2 - &one)) * &(&q6 - &z2));
    let r7 = &(&q8 + &(&q2 * &(&z2 * &z2))) - &(&(&(&q2 + &one) * &(&(&q8 - &q4) + &one)) * &z2);
    let r8 = &(&q4 * &(&z2 - &one)) * &(&q2 - &z2);
    let r9 = -(&(&q4 - &z2) * &(&q6 - &z2));
    [r1.clone(), r2.clone(), r1, r2, r5.clone(), r5, r7, r8, r9]
}

/// Generic-`q` left boundary weights `k_1..k_5` at `z`, multiplied by the
/// common factor `8 q^{5/2} z^3 / i` and written through `xi = i zeta q^{1/2}`
/// so that every entry is rational for rational `q`, `z`, `xi`, `n_0`.
pub fn boundary_generic(q: &Fe, z: &Fe, xi: &Fe, n0: &Fe) -> Result<[Fe; 5], dtl_field::FieldError> {
    let one = Fe::one();
    let z2 = z * z;
    let (q2, q3, q4) = (q.powu(2), q.powu(3), q.powu(4));
    let qinv = q.inv()?;
    let zeta2 = -(&(xi * xi) * &qinv);
    let four = Fe::int(4);
    let k1 = &(&(&Fe::int(2) * xi) * &(&q4 - &one)) * &(&(&z2 * &z2 - one.clone()) * z);
    let k3 = &(&(&(&zeta2 * n0) * &(q - &z2)) * &(&(&q3 - &z2) * &(&(q * &z2) - &one)))
        + &(&(&four * &(&q2 + &one)) * &(&z2 * &(&(&q3 * &z2) - &one)));
    let k4 = &(&zeta2 * &(&q4 - &one)) * &(&(&(&z2 * &z2) - &one) * &(q - &z2));
    let qz = q - &z2;
    let k5 = &(&q3 - &z2) * &(&(&(&zeta2 * n0) * &(&qz * &qz)) + &(&(&four * &(&q2 + &one)) * &z2));
    Ok([k1.clone(), k1, k3, k4, k5])
}
