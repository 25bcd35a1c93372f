//! Planar gluing of local pieces with port bookkeeping.
//!
//! A [`Diagram`] is a set of pieces, each carrying a list of weighted
//! [`Choice`]s, plus links identifying ports of different pieces and a list
//! of external ports. Evaluation sums over all occupation-consistent choices
//! and collects the weight by the connectivity seen at the external ports.

use std::collections::HashMap;

use dtl_field::Fe;
use dtl_patterns::{LinkPattern, Partner, Side};
use dtl_poly::Ring;

use crate::kinds::{BoundaryKind, BoundaryShape, PlaquetteKind};
use crate::DiagramError;

/// What a port is connected to inside its piece.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Inner {
    Free,
    Port(u8),
    Wall(Side),
}

/// One admissible configuration of a piece.
#[derive(Clone, Debug)]
pub struct Choice<R> {
    pub inner: Vec<Inner>,
    pub weight: R,
    /// kind id, for reporting
    pub tag: u8,
}

impl<R> Choice<R> {
    fn occupied(&self, port: u8) -> bool {
        self.inner[port as usize] != Inner::Free
    }
}

#[derive(Clone, Debug)]
pub struct Piece<R> {
    pub ports: usize,
    pub choices: Vec<Choice<R>>,
}

fn inner_from_pairs(ports: usize, pairs: &[(u8, u8)]) -> Vec<Inner> {
    let mut v = vec![Inner::Free; ports];
    for &(a, b) in pairs {
        v[a as usize] = Inner::Port(b);
        v[b as usize] = Inner::Port(a);
    }
    v
}

impl<R: Ring> Piece<R> {
    /// Plaquette with ports `BL, BR, TR, TL` and weights `r_1..r_9`.
    pub fn plaquette(weights: &[R; 9]) -> Self {
        let choices = PlaquetteKind::all()
            .map(|k| Choice { inner: inner_from_pairs(4, k.pairs()), weight: weights[k.id() as usize - 1].clone(), tag: k.id() })
            .filter(|c| !c.weight.r_is_zero())
            .collect();
        Piece { ports: 4, choices }
    }

    /// Boundary piece with ports `0 = bottom`, `1 = top` and weights `k_1..k_5`.
    pub fn boundary(side: Side, weights: &[R; 5]) -> Self {
        let choices = BoundaryKind::all(side)
            .map(|k| {
                let inner = match k.shape() {
                    BoundaryShape::Empty => vec![Inner::Free, Inner::Free],
                    BoundaryShape::TopToWall => vec![Inner::Free, Inner::Wall(side)],
                    BoundaryShape::BottomToWall => vec![Inner::Wall(side), Inner::Free],
                    BoundaryShape::BothToWall => vec![Inner::Wall(side), Inner::Wall(side)],
                    BoundaryShape::Through => vec![Inner::Port(1), Inner::Port(0)],
                };
                Choice { inner, weight: weights[k.id() as usize - 1].clone(), tag: k.id() }
            })
            .filter(|c| !c.weight.r_is_zero())
            .collect();
        Piece { ports: 2, choices }
    }

    /// Fixed connectivity of a link pattern; port `j` is site `j+1`.
    pub fn cap(p: &LinkPattern, unit: &R) -> Self {
        let inner = p
            .partners()
            .into_iter()
            .map(|x| match x {
                Partner::Empty => Inner::Free,
                Partner::Site(s) => Inner::Port(s as u8 - 1),
                Partner::Left => Inner::Wall(Side::Left),
                Partner::Right => Inner::Wall(Side::Right),
            })
            .collect();
        Piece { ports: p.len(), choices: vec![Choice { inner, weight: unit.r_one(), tag: 0 }] }
    }
}

/// A port: `(piece, port)`.
pub type PortRef = (usize, u8);

/// Where an external port leads.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    Free,
    External(usize),
    Wall(Side),
}

/// Connectivity of the external ports; `ends[j]` describes external port `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Connectivity {
    pub ends: Vec<End>,
}

impl Connectivity {
    /// Read external ports as the sites of a link pattern (in order).
    pub fn to_pattern(&self) -> Result<LinkPattern, DiagramError> {
        let mut e = vec![0i8; self.ends.len()];
        for (j, end) in self.ends.iter().enumerate() {
            e[j] = match *end {
                End::Free => 0,
                End::Wall(s) => s.attach_value(),
                End::External(k) if k > j => 1,
                End::External(_) => -1,
            };
        }
        let p = LinkPattern::from_slice(&e);
        let back: Vec<End> = p
            .partners()
            .into_iter()
            .map(|x| match x {
                Partner::Empty => End::Free,
                Partner::Site(s) => End::External(s - 1),
                Partner::Left => End::Wall(Side::Left),
                Partner::Right => End::Wall(Side::Right),
            })
            .collect();
        if back != self.ends {
            return Err(DiagramError::NotPlanar);
        }
        Ok(p)
    }
}

#[derive(Clone, Debug)]
pub struct Diagram<R> {
    pieces: Vec<Piece<R>>,
    /// for every (piece, port): the linked port, or the external index
    across: Vec<Vec<Option<Across>>>,
    externals: Vec<PortRef>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Across {
    Link(PortRef),
    Ext(usize),
}

/// Builder: add pieces, then link ports and declare externals.
#[derive(Clone, Debug, Default)]
pub struct DiagramBuilder<R> {
    pieces: Vec<Piece<R>>,
    links: Vec<(PortRef, PortRef)>,
    externals: Vec<PortRef>,
}

impl<R: Ring> DiagramBuilder<R> {
    pub fn new() -> Self {
        DiagramBuilder { pieces: Vec::new(), links: Vec::new(), externals: Vec::new() }
    }

    pub fn add(&mut self, p: Piece<R>) -> usize {
        self.pieces.push(p);
        self.pieces.len() - 1
    }

    pub fn link(&mut self, a: PortRef, b: PortRef) -> &mut Self {
        self.links.push((a, b));
        self
    }

    /// Declare the next external port; returns its index.
    pub fn external(&mut self, a: PortRef) -> usize {
        self.externals.push(a);
        self.externals.len() - 1
    }

    pub fn build(self) -> Result<Diagram<R>, DiagramError> {
        let mut across: Vec<Vec<Option<Across>>> = self.pieces.iter().map(|p| vec![None; p.ports]).collect();
        let mut put = |r: PortRef, v: Across| -> Result<(), DiagramError> {
            let slot = across
                .get_mut(r.0)
                .and_then(|x| x.get_mut(r.1 as usize))
                .ok_or(DiagramError::PortMismatch(r.0, r.1))?;
            if slot.is_some() {
                return Err(DiagramError::PortMismatch(r.0, r.1));
            }
            *slot = Some(v);
            Ok(())
        };
        for &(a, b) in &self.links {
            put(a, Across::Link(b))?;
            put(b, Across::Link(a))?;
        }
        for (j, &a) in self.externals.iter().enumerate() {
            put(a, Across::Ext(j))?;
        }
        for (pi, ports) in across.iter().enumerate() {
            for (q, a) in ports.iter().enumerate() {
                if a.is_none() {
                    return Err(DiagramError::PortMismatch(pi, q as u8));
                }
            }
        }
        Ok(Diagram { pieces: self.pieces, across, externals: self.externals })
    }
}

/// Loop and boundary-line counts of one configuration.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Closed {
    pub loops: u32,
    pub lines: u32,
    /// of `lines`, those with both ends on the same wall
    pub same_side: u32,
}

impl<R: Ring> Diagram<R> {
    pub fn externals(&self) -> usize {
        self.externals.len()
    }

    /// Enumerate every consistent configuration: `f(choices, weight)`.
    pub fn for_each(&self, mut f: impl FnMut(&[usize], &R)) {
        let n = self.pieces.len();
        if n == 0 {
            return;
        }
        // links to earlier pieces, checked when the later piece is chosen
        let back: Vec<Vec<(u8, PortRef)>> = (0..n)
            .map(|pi| {
                self.across[pi]
                    .iter()
                    .enumerate()
                    .filter_map(|(q, a)| match a {
                        Some(Across::Link(r)) if r.0 < pi => Some((q as u8, *r)),
                        _ => None,
                    })
                    .collect()
            })
            .collect();
        let mut sel = vec![0usize; n];
        let mut acc: Vec<R> = Vec::with_capacity(n);
        self.dfs(0, &back, &mut sel, &mut acc, &mut f);
    }

    fn dfs(
        &self,
        pi: usize,
        back: &[Vec<(u8, PortRef)>],
        sel: &mut Vec<usize>,
        acc: &mut Vec<R>,
        f: &mut impl FnMut(&[usize], &R),
    ) {
        if pi == self.pieces.len() {
            f(sel, acc.last().expect("nonempty"));
            return;
        }
        'c: for (ci, c) in self.pieces[pi].choices.iter().enumerate() {
            for &(q, (pj, qj)) in &back[pi] {
                if c.occupied(q) != self.pieces[pj].choices[sel[pj]].occupied(qj) {
                    continue 'c;
                }
            }
            sel[pi] = ci;
            let w = match acc.last() {
                Some(prev) => prev.r_mul(&c.weight),
                None => c.weight.clone(),
            };
            acc.push(w);
            self.dfs(pi + 1, back, sel, acc, f);
            acc.pop();
        }
    }

    /// Connectivity and closed-curve counts of one configuration.
    pub fn connectivity(&self, sel: &[usize]) -> (Connectivity, Closed) {
        let inner = |r: PortRef| self.pieces[r.0].choices[sel[r.0]].inner[r.1 as usize];
        let mut seen: Vec<Vec<bool>> = self.pieces.iter().map(|p| vec![false; p.ports]).collect();
        // walk from port r, leaving through its inner connection
        let walk = |start: PortRef, seen: &mut Vec<Vec<bool>>| -> End {
            let mut r = start;
            loop {
                seen[r.0][r.1 as usize] = true;
                let nxt = match inner(r) {
                    Inner::Wall(s) => return End::Wall(s),
                    Inner::Port(q) => (r.0, q),
                    Inner::Free => unreachable!("walked into a free port"),
                };
                seen[nxt.0][nxt.1 as usize] = true;
                match self.across[nxt.0][nxt.1 as usize] {
                    Some(Across::Ext(j)) => return End::External(j),
                    Some(Across::Link(o)) => r = o,
                    None => unreachable!("validated"),
                }
            }
        };
        let mut ends = vec![End::Free; self.externals.len()];
        for (j, &e) in self.externals.iter().enumerate() {
            if inner(e) != Inner::Free {
                ends[j] = walk(e, &mut seen);
            }
        }
        let mut closed = Closed::default();
        for pi in 0..self.pieces.len() {
            for q in 0..self.pieces[pi].ports as u8 {
                if seen[pi][q as usize] {
                    continue;
                }
                match inner((pi, q)) {
                    Inner::Free => {}
                    Inner::Wall(s) => {
                        // a chain starting at a wall ends at a wall
                        let end = match self.across[pi][q as usize] {
                            Some(Across::Link(o)) => {
                                seen[pi][q as usize] = true;
                                walk(o, &mut seen)
                            }
                            _ => unreachable!("external ports already walked"),
                        };
                        closed.lines += 1;
                        if end == End::Wall(s) {
                            closed.same_side += 1;
                        }
                    }
                    Inner::Port(_) => {}
                }
            }
        }
        // what is left occupied and unseen lies on closed loops
        for pi in 0..self.pieces.len() {
            for q in 0..self.pieces[pi].ports as u8 {
                if seen[pi][q as usize] || inner((pi, q)) == Inner::Free {
                    continue;
                }
                let mut r = (pi, q);
                loop {
                    seen[r.0][r.1 as usize] = true;
                    let Inner::Port(p2) = inner(r) else { unreachable!("loop through a wall") };
                    seen[r.0][p2 as usize] = true;
                    match self.across[r.0][p2 as usize] {
                        Some(Across::Link(o)) if !seen[o.0][o.1 as usize] => r = o,
                        _ => break,
                    }
                }
                closed.loops += 1;
            }
        }
        (Connectivity { ends }, closed)
    }

    /// Sum of weights by external connectivity; loops weigh `n`, lines between
    /// walls weigh `n0`.
    pub fn evaluate(&self, n: &Fe, n0: &Fe) -> HashMap<Connectivity, R> {
        self.evaluate_split(n, n0, n0)
    }

    /// As [`Diagram::evaluate`], with lines returning to the wall they
    /// started from weighted `same` instead.
    pub fn evaluate_split(&self, n: &Fe, n0: &Fe, same: &Fe) -> HashMap<Connectivity, R> {
        let mut out: HashMap<Connectivity, R> = HashMap::new();
        self.for_each(|sel, w| {
            let (c, cl) = self.connectivity(sel);
            let s = &(&n.powu(cl.loops) * &n0.powu(cl.lines - cl.same_side)) * &same.powu(cl.same_side);
            let term = w.r_scale(&s);
            match out.get_mut(&c) {
                Some(v) => *v = v.r_add(&term),
                None => {
                    out.insert(c, term);
                }
            }
        });
        out.retain(|_, v| !v.r_is_zero());
        out
    }
}

/// Compare two connectivity tables; returns the first differing key.
pub fn first_difference<R: Ring + PartialEq>(
    a: &HashMap<Connectivity, R>,
    b: &HashMap<Connectivity, R>,
) -> Option<Connectivity> {
    let mut keys: Vec<&Connectivity> = a.keys().chain(b.keys()).collect();
    keys.sort();
    keys.dedup();
    for k in keys {
        let d = match (a.get(k), b.get(k)) {
            (Some(x), Some(y)) => x != y,
            (Some(x), None) | (None, Some(x)) => !x.r_is_zero(),
            (None, None) => false,
        };
        if d {
            return Some(k.clone());
        }
    }
    None
}
