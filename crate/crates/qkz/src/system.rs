//! The qKZ system as a list of linear equations between components.
//!
//! Equation for pattern `p`: `lhs * op(psi_p) = sum_q coeff_q * psi_q`.

use dtl_diagram::ops::boundary_weights_poly;
use dtl_diagram::weights::{bulk_norm, bulk_omega};
use dtl_diagram::{sigma_apply, tau_apply, ActionTable, BoundaryKind, PlaquetteKind};
use dtl_field::Fe;
use dtl_patterns::{LinkPattern, Side};
use dtl_poly::{LaurentPoly, VarSet};

use crate::QkzError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum EqKind {
    /// exchange at sites `(i, i+1)`
    Bulk(usize),
    Left,
    Right,
}

impl EqKind {
    pub fn apply(&self, f: &LaurentPoly) -> LaurentPoly {
        match *self {
            EqKind::Bulk(i) => tau_apply(i, f),
            EqKind::Left => sigma_apply(Side::Left, f),
            EqKind::Right => sigma_apply(Side::Right, f),
        }
    }
}

impl std::fmt::Display for EqKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EqKind::Bulk(i) => write!(f, "bulk({i},{})", i + 1),
            EqKind::Left => write!(f, "left"),
            EqKind::Right => write!(f, "right"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Equation {
    pub kind: EqKind,
    /// rank of the pattern on the left
    pub target: usize,
    pub lhs: LaurentPoly,
    /// `(rank, coefficient)`, one entry per distinct rank
    pub rhs: Vec<(usize, LaurentPoly)>,
}

impl Equation {
    pub fn coeff(&self, r: usize) -> Option<&LaurentPoly> {
        self.rhs.iter().find(|(q, _)| *q == r).map(|(_, c)| c)
    }
}

fn collect(
    size: usize,
    images: impl Iterator<Item = (usize, usize, LaurentPoly)>,
) -> Vec<Vec<(usize, LaurentPoly)>> {
    let mut rhs: Vec<Vec<(usize, LaurentPoly)>> = vec![Vec::new(); size];
    for (src, dst, w) in images {
        match rhs[dst].iter_mut().find(|(q, _)| *q == src) {
            Some((_, c)) => *c = &*c + &w,
            None => rhs[dst].push((src, w)),
        }
    }
    for r in rhs.iter_mut() {
        r.retain(|(_, c)| !c.is_zero());
        r.sort_by_key(|(q, _)| *q);
    }
    rhs
}

/// All bulk and boundary equations at `n = n_0 = 1`, boundary weights in the `x` form.
pub fn equations(l: usize) -> Result<Vec<Equation>, QkzError> {
    let vars = VarSet::standard(l);
    let table = ActionTable::new(l)?;
    let size = table.size();
    let mut out = Vec::new();
    for i in 1..l {
        let a = LaurentPoly::var(&vars, i, 1);
        let b = LaurentPoly::var(&vars, i + 1, 1);
        let w = bulk_omega(&a, &b);
        let norm = bulk_norm(&a, &b);
        let images = PlaquetteKind::all().flat_map(|k| {
            let wk = w[k.id() as usize - 1].clone();
            table.bulk(i, k).iter().enumerate().filter_map(move |(src, img)| {
                img.map(|(dst, c)| (src, dst, wk.scale(&c.weight(&Fe::one(), &Fe::one()))))
            })
        });
        for (t, rhs) in collect(size, images).into_iter().enumerate() {
            out.push(Equation { kind: EqKind::Bulk(i), target: t, lhs: norm.clone(), rhs });
        }
    }
    for side in [Side::Left, Side::Right] {
        let (k, u) = boundary_weights_poly(side, &vars)?;
        let images = BoundaryKind::all(side).flat_map(|b| {
            let wk = k[b.id() as usize - 1].clone();
            table.boundary(b).iter().enumerate().filter_map(move |(src, img)| {
                img.map(|(dst, c)| (src, dst, wk.scale(&c.weight(&Fe::one(), &Fe::one()))))
            })
        });
        let kind = if side == Side::Left { EqKind::Left } else { EqKind::Right };
        for (t, rhs) in collect(size, images).into_iter().enumerate() {
            out.push(Equation { kind, target: t, lhs: u.clone(), rhs });
        }
    }
    Ok(out)
}

/// One failed equation.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct QkzFailure {
    pub equation: String,
    pub pattern: String,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct QkzReport {
    pub l: usize,
    pub equations: usize,
    pub pass: bool,
    pub failures: Vec<QkzFailure>,
}

/// Check every equation on a full table of components.
pub fn verify_components(l: usize, comps: &[LaurentPoly]) -> Result<QkzReport, QkzError> {
    let eqs = equations(l)?;
    let bad = dtl_par::map_slice(&eqs, |e| {
        let mut acc = &e.lhs * &e.kind.apply(&comps[e.target]);
        for (q, c) in &e.rhs {
            acc = &acc - &(c * &comps[*q]);
        }
        (!acc.is_zero()).then(|| QkzFailure {
            equation: e.kind.to_string(),
            pattern: LinkPattern::unrank(l, e.target).to_string(),
        })
    });
    let failures: Vec<QkzFailure> = bad.into_iter().flatten().collect();
    Ok(QkzReport { l, equations: eqs.len(), pass: failures.is_empty(), failures })
}
