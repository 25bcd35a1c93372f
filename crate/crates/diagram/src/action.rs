//! Action of plaquettes, boundary pieces and the merge/split maps on link patterns,
//! and the induced action on component tables.

use dtl_field::Fe;
use dtl_patterns::{enumerate_patterns, LinkPattern, Partner, PatternError, Side};
use dtl_poly::Ring;

use crate::kinds::{BoundaryKind, BoundaryShape, PlaquetteKind};

/// Closed curves produced by one local move.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Closures {
    pub loops: u8,
    /// Lines with both ends on the vertical boundaries (either side).
    pub lines: u8,
}

impl Closures {
    pub const NONE: Closures = Closures { loops: 0, lines: 0 };

    pub fn weight(&self, n: &Fe, n0: &Fe) -> Fe {
        let mut w = Fe::one();
        for _ in 0..self.loops {
            w = &w * n;
        }
        for _ in 0..self.lines {
            w = &w * n0;
        }
        w
    }
}

/// Remove the occupied sites `i`, `j` and join the two line ends they carried.
fn join(p: &LinkPattern, i: usize, j: usize) -> (LinkPattern, Closures) {
    let part = p.partners();
    let (a, b) = (part[i - 1], part[j - 1]);
    let mut q = p.clone();
    q.set(i, 0);
    q.set(j, 0);
    if a == Partner::Site(j) {
        return (q, Closures { loops: 1, lines: 0 });
    }
    let wall = |x: Partner| match x {
        Partner::Left => Some(Side::Left),
        Partner::Right => Some(Side::Right),
        _ => None,
    };
    match (a, b) {
        (Partner::Site(s), Partner::Site(t)) => {
            q.set(s.min(t), 1);
            q.set(s.max(t), -1);
            (q, Closures::NONE)
        }
        (Partner::Site(s), other) | (other, Partner::Site(s)) => {
            let side = wall(other).expect("occupied site has a partner");
            q.set(s, side.attach_value());
            (q, Closures::NONE)
        }
        _ => (q, Closures { loops: 0, lines: 1 }),
    }
}

/// `rho^(k)` acting on sites `i, i+1` (1-based). `None` when the bottom
/// occupation does not fit the kind.
pub fn plaquette_action(kind: PlaquetteKind, i: usize, p: &LinkPattern) -> Option<(LinkPattern, Closures)> {
    assert!(i >= 1 && i < p.len(), "site index out of range");
    let (a, b) = (p.get(i), p.get(i + 1));
    if (a != 0, b != 0) != kind.bottom() {
        return None;
    }
    let mut q = p.clone();
    let mut c = Closures::NONE;
    match kind.id() {
        1 => {
            q.set(i, 1);
            q.set(i + 1, -1);
        }
        2 | 4 | 7 | 9 => {}
        3 => (q, c) = join(p, i, i + 1),
        5 => {
            q.set(i, 0);
            q.set(i + 1, a);
        }
        6 => {
            q.set(i, b);
            q.set(i + 1, 0);
        }
        _ => {
            (q, c) = join(p, i, i + 1);
            q.set(i, 1);
            q.set(i + 1, -1);
        }
    }
    Some((q, c))
}

/// Every `p'` with `rho^(k) p' = target`, by exhaustive scan.
pub fn plaquette_preimages(
    kind: PlaquetteKind,
    i: usize,
    target: &LinkPattern,
) -> Result<Vec<(LinkPattern, Closures)>, PatternError> {
    let mut out = Vec::new();
    for p in enumerate_patterns(target.len())? {
        if let Some((q, c)) = plaquette_action(kind, i, &p) {
            if &q == target {
                out.push((p, c));
            }
        }
    }
    Ok(out)
}

/// `kappa^(k)` on the first (left) or last (right) site.
pub fn kappa_action(kind: BoundaryKind, p: &LinkPattern) -> Option<(LinkPattern, Closures)> {
    let s = match kind.side {
        Side::Left => 1,
        Side::Right => p.len(),
    };
    let att = kind.side.attach_value();
    let v = p.get(s);
    if (v != 0) != kind.bottom() {
        return None;
    }
    let mut q = p.clone();
    let mut c = Closures::NONE;
    match kind.shape() {
        BoundaryShape::Empty | BoundaryShape::Through => {}
        BoundaryShape::TopToWall => q.set(s, att),
        BoundaryShape::BottomToWall | BoundaryShape::BothToWall => {
            q.set(s, 0);
            match p.partners()[s - 1] {
                Partner::Site(e) => q.set(e, att),
                _ => c.lines = 1,
            }
            if kind.shape() == BoundaryShape::BothToWall {
                q.set(s, att);
            }
        }
    }
    Some((q, c))
}

/// Merge sites `i, i+1` of a size `L+1` pattern into site `i`, following the
/// component correspondence of the recurrence: `(1,-1)`, `(0,0)` give 0,
/// `(v,0)`, `(0,v)` give `v`, and `(-1,±1)`, `(1,1)` have no image.
pub fn merge_pattern(i: usize, p: &LinkPattern) -> Option<LinkPattern> {
    let (a, b) = (p.get(i), p.get(i + 1));
    let v = match (a, b) {
        (1, -1) | (0, 0) => 0,
        (x, 0) => x,
        (0, y) => y,
        _ => return None,
    };
    let mut e = p.entries().to_vec();
    e.remove(i);
    e[i - 1] = v;
    Some(LinkPattern::from_slice(&e))
}

/// Images of site `i` under the split map: `0 -> (0,0), (1,-1)`; `v -> (v,0), (0,v)`.
pub fn split_pattern(i: usize, p: &LinkPattern) -> Vec<LinkPattern> {
    let v = p.get(i);
    let pairs: &[(i8, i8)] = if v == 0 { &[(0, 0), (1, -1)] } else { &[(v, 0), (0, v)] };
    pairs
        .iter()
        .map(|&(x, y)| {
            let mut e = p.entries().to_vec();
            e[i - 1] = x;
            e.insert(i, y);
            LinkPattern::from_slice(&e)
        })
        .collect()
}

/// Image rank and closures per source rank, `None` where the action vanishes.
type Column = Vec<Option<(usize, Closures)>>;

/// Precomputed actions on `lp_L` indexed by pattern rank.
#[derive(Clone, Debug)]
pub struct ActionTable {
    pub l: usize,
    /// `bulk[i-1][k-1][rank]`
    bulk: Vec<Vec<Column>>,
    /// `boundary[side][k-1][rank]`, side 0 = left
    boundary: [Vec<Column>; 2],
}

impl ActionTable {
    pub fn new(l: usize) -> Result<Self, PatternError> {
        let pats = enumerate_patterns(l)?;
        let bulk = (1..l)
            .map(|i| {
                PlaquetteKind::all()
                    .map(|k| {
                        pats.iter()
                            .map(|p| plaquette_action(k, i, p).map(|(q, c)| (q.rank(), c)))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let side = |s: Side| {
            BoundaryKind::all(s)
                .map(|k| pats.iter().map(|p| kappa_action(k, p).map(|(q, c)| (q.rank(), c))).collect())
                .collect()
        };
        Ok(ActionTable { l, bulk, boundary: [side(Side::Left), side(Side::Right)] })
    }

    pub fn size(&self) -> usize {
        3usize.pow(self.l as u32)
    }

    pub fn bulk(&self, i: usize, kind: PlaquetteKind) -> &[Option<(usize, Closures)>] {
        &self.bulk[i - 1][kind.id() as usize - 1]
    }

    pub fn boundary(&self, kind: BoundaryKind) -> &[Option<(usize, Closures)>] {
        let s = if kind.side == Side::Left { 0 } else { 1 };
        &self.boundary[s][kind.id() as usize - 1]
    }

    /// `(R_i v)_pi = sum_k r_k sum_{rho_k pi' = pi} c v_pi'`.
    pub fn rcheck_apply<R: Ring>(&self, i: usize, v: &[R], weights: &[R; 9], n: &Fe, n0: &Fe) -> Vec<R> {
        assert_eq!(v.len(), self.size());
        let mut out: Vec<R> = v.iter().map(|x| x.r_zero()).collect();
        for k in PlaquetteKind::all() {
            let w = &weights[k.id() as usize - 1];
            for (src, img) in self.bulk(i, k).iter().enumerate() {
                if let Some((dst, c)) = img {
                    if v[src].r_is_zero() {
                        continue;
                    }
                    let term = w.r_mul(&v[src]).r_scale(&c.weight(n, n0));
                    out[*dst] = out[*dst].r_add(&term);
                }
            }
        }
        out
    }

    /// Boundary analogue of [`ActionTable::rcheck_apply`].
    pub fn k_apply<R: Ring>(&self, side: Side, v: &[R], weights: &[R; 5], n0: &Fe) -> Vec<R> {
        assert_eq!(v.len(), self.size());
        let one = Fe::one();
        let mut out: Vec<R> = v.iter().map(|x| x.r_zero()).collect();
        for k in BoundaryKind::all(side) {
            let w = &weights[k.id() as usize - 1];
            for (src, img) in self.boundary(k).iter().enumerate() {
                if let Some((dst, c)) = img {
                    if v[src].r_is_zero() {
                        continue;
                    }
                    let term = w.r_mul(&v[src]).r_scale(&c.weight(&one, n0));
                    out[*dst] = out[*dst].r_add(&term);
                }
            }
        }
        out
    }
}

/// Merge a table over `lp_{L+1}` into one over `lp_L` (components with no image are dropped).
pub fn merge_apply<R: Ring>(i: usize, big_l: usize, v: &[R]) -> Vec<R> {
    let small = 3usize.pow(big_l as u32 - 1);
    assert_eq!(v.len(), small * 3);
    let zero = v[0].r_zero();
    let mut out = vec![zero; small];
    for (r, x) in v.iter().enumerate() {
        let p = LinkPattern::unrank(big_l, r);
        if let Some(q) = merge_pattern(i, &p) {
            out[q.rank()] = out[q.rank()].r_add(x);
        }
    }
    out
}

/// Split a table over `lp_L` into one over `lp_{L+1}`.
pub fn split_apply<R: Ring>(i: usize, l: usize, v: &[R]) -> Vec<R> {
    let big = 3usize.pow(l as u32 + 1);
    assert_eq!(v.len() * 3, big);
    let zero = v[0].r_zero();
    let mut out = vec![zero; big];
    for (r, x) in v.iter().enumerate() {
        let p = LinkPattern::unrank(l, r);
        for q in split_pattern(i, &p) {
            out[q.rank()] = out[q.rank()].r_add(x);
        }
    }
    out
}

/// Diagrammatic merge of sites `i, i+1`: empty pair gives an empty site, an
/// occupied pair is joined by a little arch, a single line passes through.
pub fn merge_join_action(i: usize, p: &LinkPattern) -> (LinkPattern, Closures) {
    let (a, b) = (p.get(i), p.get(i + 1));
    let (q, c) = if a != 0 && b != 0 { join(p, i, i + 1) } else { (p.clone(), Closures::NONE) };
    let mut e = q.entries().to_vec();
    e[i - 1] = if a != 0 && b != 0 { 0 } else { a + b };
    e.remove(i);
    (LinkPattern::from_slice(&e), c)
}

/// Push a table over `lp_{L+1}` through [`merge_join_action`].
pub fn merge_join_apply<R: Ring>(i: usize, big_l: usize, v: &[R], n: &Fe, n0: &Fe) -> Vec<R> {
    let small = 3usize.pow(big_l as u32 - 1);
    assert_eq!(v.len(), small * 3);
    let mut out = vec![v[0].r_zero(); small];
    for (r, x) in v.iter().enumerate() {
        if x.r_is_zero() {
            continue;
        }
        let (q, c) = merge_join_action(i, &LinkPattern::unrank(big_l, r));
        let k = q.rank();
        out[k] = out[k].r_add(&x.r_scale(&c.weight(n, n0)));
    }
    out
}
