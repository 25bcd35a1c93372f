//! Fully nested components and the nested families `pi_i = 0^i (-1)^(L-i)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use dtl_diagram::weights::{boundary_omega_x, bulk_norm, bulk_omega};
use dtl_diagram::{factor_f, factor_f_parts};
use dtl_field::Fe;
use dtl_patterns::Side;
use dtl_poly::{LaurentPoly, Mono, VarSet};

use crate::QkzError;

/// Normalization `omega^(2 - L(L+1)/2)` of both fully nested components.
pub fn psi_star(l: usize) -> Fe {
    let e = 2 - (l * (l + 1) / 2) as i64;
    Fe::omega().pow(e).expect("omega is invertible")
}

/// Factors whose product is the fully nested component; `mu`/`sigma` act on them one by one.
pub fn fully_nested_factors(l: usize, side: Side) -> Vec<LaurentPoly> {
    let vars = VarSet::standard(l);
    let w = Fe::omega();
    let z = |i: usize| LaurentPoly::var(&vars, i, 1);
    let one = LaurentPoly::one(&vars);
    // left: z_1..z_L, x_r ; right: x_l, z_1..z_L
    let idx: Vec<usize> = match side {
        Side::Left => (1..=l + 1).collect(),
        Side::Right => (0..=l).collect(),
    };
    let mut out = vec![LaurentPoly::constant(&vars, psi_star(l))];
    for (s, &i) in idx.iter().enumerate() {
        for &j in &idx[s + 1..] {
            out.push(&z(i).scale(&w) + &z(j));
            let p = &z(i) * &z(j);
            out.push(match side {
                Side::Left => &one + &p.scale(&w),
                Side::Right => &one.scale(&w) + &p,
            });
            out.push(LaurentPoly::monomial(&vars, Mono::var(i, -1).mul(&Mono::var(j, -1)), Fe::one()));
        }
    }
    out
}

/// `psi_{pi_0}` (left) or `psi_{pi~_0}` (right).
pub fn fully_nested_component(l: usize, side: Side) -> LaurentPoly {
    let vars = VarSet::standard(l);
    fully_nested_factors(l, side).iter().fold(LaurentPoly::one(&vars), |a, f| &a * f)
}

/// `F_i` over `VarSet::standard(L)`.
pub fn proportionality_factor(i: usize, l: usize) -> LaurentPoly {
    factor_f(i, &VarSet::standard(l))
}

/// Mirror image: `x_l <-> x_r`, `z_j -> 1/z_{L+1-j}`. Maps left objects to right ones.
pub fn reflect_poly(f: &LaurentPoly) -> LaurentPoly {
    let l = f.vars().bulk_count();
    let map: Vec<Option<usize>> = (0..l + 2).map(|j| Some(l + 1 - j)).collect();
    let mut g = f.reindex(f.vars(), &map).expect("same variable set");
    for j in 1..=l {
        g = g.invert_var(j);
    }
    g
}

/// Ring map sending source variable `j` to `c_j m_j`, a scaled monomial over
/// `VarSet::standard(target)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonoMap {
    target: usize,
    /// auxiliary variables after `x_r` in the target
    naux: usize,
    images: Vec<(Mono, Fe)>,
}

impl MonoMap {
    pub fn identity(l: usize) -> Self {
        MonoMap { target: l, naux: 0, images: (0..l + 2).map(|j| (Mono::var(j, 1), Fe::one())).collect() }
    }

    /// `z_a <-> z_{a+1}` on size `l`.
    pub fn tau(l: usize, a: usize) -> Self {
        let mut m = Self::identity(l);
        m.images.swap(a, a + 1);
        m
    }

    /// `z_1 -> 1/z_1` on size `l`.
    pub fn sigma_left(l: usize) -> Self {
        let mut m = Self::identity(l);
        m.images[1] = (Mono::var(1, -1), Fe::one());
        m
    }

    /// `mu_1`: from size `l+1` to size `l`, `z_1 -> w z_1`, `z_2 -> z_1/w`, later sites shift down.
    pub fn mu_first(l: usize) -> Self {
        let w = Fe::omega();
        let mut images = vec![(Mono::var(0, 1), Fe::one()), (Mono::var(1, 1), w.clone())];
        images.push((Mono::var(1, 1), w.inv().expect("omega is invertible")));
        images.extend((2..=l + 1).map(|j| (Mono::var(j, 1), Fe::one())));
        MonoMap { target: l, naux: 0, images }
    }

    pub fn source_len(&self) -> usize {
        self.images.len()
    }

    fn image_of(&self, m: &Mono) -> (Mono, Fe) {
        let mut out = Mono::ONE;
        let mut c = Fe::one();
        for (j, (mj, cj)) in self.images.iter().enumerate() {
            let e = m.0[j];
            if e == 0 {
                continue;
            }
            for k in 0..self.target + 2 + self.naux {
                out.0[k] += e * mj.0[k];
            }
            if !cj.is_one() {
                c = &c * &cj.pow(e as i64).expect("nonzero image coefficient");
            }
        }
        (out, c)
    }

    pub fn target_vars(&self) -> Arc<VarSet> {
        let names: Vec<String> = (1..=self.naux).map(|k| format!("t{k}")).collect();
        let names: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        VarSet::standard_with_aux(self.target, &names)
    }

    pub fn apply(&self, f: &LaurentPoly) -> LaurentPoly {
        f.map_terms(&self.target_vars(), |m| self.image_of(m))
    }

    /// Split into `back . deferred` where `deferred` sends source variable `j`
    /// to a new auxiliary variable and `back` puts the old image in its place.
    pub fn defer(&self, j: usize) -> (MonoMap, MonoMap) {
        let n = self.target + 2 + self.naux;
        let mut deferred = self.clone();
        deferred.naux += 1;
        deferred.images[j] = (Mono::var(n, 1), Fe::one());
        let mut images: Vec<(Mono, Fe)> = (0..n).map(|k| (Mono::var(k, 1), Fe::one())).collect();
        images.push(self.images[j].clone());
        (deferred, MonoMap { target: self.target, naux: self.naux, images })
    }

    /// `self` after `inner`: `x -> self(inner(x))`.
    pub fn compose(&self, inner: &MonoMap) -> MonoMap {
        let images = inner
            .images
            .iter()
            .map(|(m, c)| {
                let (m2, c2) = self.image_of(m);
                (m2, c * &c2)
            })
            .collect();
        MonoMap { target: self.target, naux: self.naux, images }
    }
}

/// Memo of nested components across sizes, stored already specialized.
///
/// Components of size `L+1` enter only through monomial maps down to size `L`,
/// so every intermediate polynomial lives over the final variable set.
#[derive(Default)]
pub struct NestedCache {
    map: Mutex<HashMap<(usize, usize, MonoMap), Arc<LaurentPoly>>>,
}

impl NestedCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `psi_{pi_i}` at size `L`, left family.
    pub fn get(&self, l: usize, i: usize) -> Result<Arc<LaurentPoly>, QkzError> {
        self.spec(l, i, &MonoMap::identity(l))
    }

    /// `phi(psi_{pi_i})` for `psi` of size `l`.
    pub fn spec(&self, l: usize, i: usize, phi: &MonoMap) -> Result<Arc<LaurentPoly>, QkzError> {
        if i > l {
            return Err(QkzError::BadIndex(i, l));
        }
        let key = (l, i, phi.clone());
        if let Some(p) = self.map.lock().expect("lock").get(&key) {
            return Ok(p.clone());
        }
        let identity = MonoMap::identity(l);
        let p = Arc::new(if i == 0 {
            let vars = phi.target_vars();
            self.factors0(l, phi).iter().fold(LaurentPoly::one(&vars), |a, f| &a * f)
        } else if l <= phi.target && *phi != identity {
            // nothing collapses; map the full polynomial
            phi.apply(&*self.spec(l, i, &identity)?)
        } else {
            self.step(l, i, phi)?
        });
        // deep intermediates are seldom reused and dominate memory
        if l <= phi.target + 1 {
            self.map.lock().expect("lock").insert(key, p.clone());
        }
        Ok(p)
    }

    /// `phi(eta_{a_1} ... eta_{a_k} psi_{pi_i})`, `etas[0]` outermost.
    fn chain(&self, l: usize, i: usize, etas: &[usize], phi: &MonoMap) -> Result<LaurentPoly, QkzError> {
        let Some((&a, rest)) = etas.split_first() else {
            return Ok((*self.spec(l, i, phi)?).clone());
        };
        let vars = phi.target_vars();
        let img = |j: usize| LaurentPoly::monomial(&vars, phi.images[j].0, phi.images[j].1.clone());
        let (za, zb) = (img(a), img(a + 1));
        let r5 = bulk_omega(&za, &zb)[4].clone();
        if r5.is_zero() {
            // the quotient is a limit here; keep z_{a+1} free until after the division
            let (deferred, back) = phi.defer(a + 1);
            return Ok(back.apply(&self.chain(l, i, etas, &deferred)?));
        }
        let swapped = phi.compose(&MonoMap::tau(l, a));
        let (g, gt) = dtl_par::join(|| self.chain(l, i, rest, phi), || self.chain(l, i, rest, &swapped));
        let (g, gt) = (g?, gt?);
        let num = &bulk_norm(&za, &zb) * &(&gt - &g);
        Ok(&num.exact_div(&r5)? + &g)
    }

    /// A variable whose image makes `phi(F_1)` or `phi(k_4(w z_1))` vanish.
    fn degenerate(&self, l: usize, phi: &MonoMap) -> Option<usize> {
        let vars = VarSet::standard(l);
        let one = LaurentPoly::one(&vars);
        let z = |j: usize| LaurentPoly::var(&vars, j, 1);
        for j in (0..=l + 1).filter(|&j| j != 1) {
            let zero_sum = phi.apply(&(&z(1) + &z(j))).is_zero();
            if zero_sum || phi.apply(&(&(&z(1) * &z(j)) + &one)).is_zero() {
                return Some(j);
            }
        }
        let wz = z(1).scale(&Fe::omega());
        let (k, _) = boundary_omega_x(&wz, &z(0));
        phi.apply(&k[3]).is_zero().then_some(0)
    }

    /// `psi_{0,alpha} = (U(w z_1) mu_1 sigma_1 psi_{-1,-1,alpha} - F_1 k_1(w z_1) psi_{-1,alpha}) / (F_1 k_4(w z_1))`
    /// with `alpha = 0^(i-1) (-1)^(L-i)`, pushed through `phi`.
    fn step(&self, l: usize, i: usize, phi: &MonoMap) -> Result<LaurentPoly, QkzError> {
        if i == 1 {
            return self.first_step(l, phi);
        }
        let vars = VarSet::standard(l);
        // where phi kills F_1 or k_4 the recurrence says 0 = 0; keep that variable free
        if let Some(j) = self.degenerate(l, phi) {
            let (deferred, back) = phi.defer(j);
            return Ok(back.apply(&*self.spec(l, i, &deferred)?));
        }
        let lift = phi.compose(&MonoMap::mu_first(l).compose(&MonoMap::sigma_left(l + 1)));
        // psi_{-1,alpha} at size L (first line of pi_{i-1} moved from site i to site 1)
        // and psi_{-1,-1,alpha} at size L+1 under mu_1 sigma_1
        let down: Vec<usize> = (1..i).collect();
        let up: Vec<usize> = (2..=i).chain(1..i).collect();
        let (small, lifted) =
            dtl_par::join(|| self.chain(l, i - 1, &down, phi), || self.chain(l + 1, i - 1, &up, &lift));
        let (small, mut lifted) = (small?, lifted?);
        let wz = LaurentPoly::var(&vars, 1, 1).scale(&Fe::omega());
        let (k, u) = boundary_omega_x(&wz, &LaurentPoly::var(&vars, 0, 1));
        // num/F_1 = (u/B)(lifted/A) - k_1 small, for F_1 = A B C with A | lifted, B | u, then /C
        let mut u = phi.apply(&u);
        let mut rest = LaurentPoly::one(&phi.target_vars());
        let mut rest_parts = Vec::new();
        for f in factor_f_parts(1, &vars) {
            let f = phi.apply(&f);
            if let Some(q) = lifted.try_div(&f) {
                lifted = q;
            } else if let Some(q) = u.try_div(&f) {
                u = q;
            } else {
                rest = &rest * &f;
                rest_parts.push(f);
            }
        }
        let mut num = &(&u * &lifted) - &(&(&rest * &phi.apply(&k[0])) * &small);
        for f in &rest_parts {
            num = num.exact_div(f)?;
        }
        Ok(num.exact_div(&phi.apply(&k[3]))?)
    }

    /// `i = 1`: everything except `u` is a product of small factors, so `F_1`
    /// cancels before `phi` is applied.
    fn first_step(&self, l: usize, phi: &MonoMap) -> Result<LaurentPoly, QkzError> {
        let vars = VarSet::standard(l);
        let lift = MonoMap::mu_first(l).compose(&MonoMap::sigma_left(l + 1));
        let mut lifted = self.factors0(l + 1, &lift);
        let wz = LaurentPoly::var(&vars, 1, 1).scale(&Fe::omega());
        let (k, mut u) = boundary_omega_x(&wz, &LaurentPoly::var(&vars, 0, 1));
        let mut rest: Vec<LaurentPoly> = Vec::new();
        for f in factor_f_parts(1, &vars) {
            if let Some((j, q)) = lifted.iter().enumerate().find_map(|(j, g)| monomial_ratio(g, &f).map(|q| (j, q))) {
                lifted[j] = q;
            } else if let Some((j, q)) = lifted.iter().enumerate().find_map(|(j, g)| g.try_div(&f).map(|q| (j, q))) {
                lifted[j] = q;
            } else if let Some(q) = u.try_div(&f) {
                u = q;
            } else {
                rest.push(f);
            }
        }
        let tvars = phi.target_vars();
        let prod = |fs: &[LaurentPoly]| fs.iter().fold(LaurentPoly::one(&tvars), |a, f| &a * &phi.apply(f));
        let rest_img: Vec<LaurentPoly> = rest.iter().map(|f| phi.apply(f)).collect();
        let den = phi.apply(&k[3]);
        if den.is_zero() || rest_img.iter().any(|f| f.is_zero()) {
            return Err(QkzError::Degenerate);
        }
        let mut num = &(&phi.apply(&u) * &prod(&lifted)) - &(&(&prod(&rest) * &phi.apply(&k[0])) * &prod(&self.factors0_src(l)));
        for f in &rest_img {
            num = num.exact_div(f)?;
        }
        Ok(num.exact_div(&den)?)
    }

    fn factors0_src(&self, l: usize) -> Vec<LaurentPoly> {
        fully_nested_factors(l, Side::Left)
    }

    /// Factors of `phi(psi_{pi_0})`.
    fn factors0(&self, l: usize, phi: &MonoMap) -> Vec<LaurentPoly> {
        fully_nested_factors(l, Side::Left).iter().map(|f| phi.apply(f)).collect()
    }
}

/// `g / f` when it is a single scaled monomial.
fn monomial_ratio(g: &LaurentPoly, f: &LaurentPoly) -> Option<LaurentPoly> {
    if g.len() != f.len() || f.is_zero() {
        return None;
    }
    let (gm, gc) = g.lead()?;
    let (fm, fc) = f.lead()?;
    let m = gm.div(fm);
    let c = gc * &fc.inv().ok()?;
    (&f.mul_term(&m, &c) == g).then(|| LaurentPoly::monomial(g.vars(), m, c))
}

/// `psi_{pi_i}` at size `L` with a fresh cache.
pub fn nested_family(l: usize, i: usize) -> Result<LaurentPoly, QkzError> {
    Ok((*NestedCache::new().get(l, i)?).clone())
}
