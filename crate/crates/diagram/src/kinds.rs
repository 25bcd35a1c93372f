//! Local pieces. Plaquette ports are numbered counter-clockwise from the
//! bottom left: 0 = BL, 1 = BR, 2 = TR, 3 = TL. Boundary pieces have
//! 0 = bottom, 1 = top.

use dtl_patterns::Side;

pub const BL: u8 = 0;
pub const BR: u8 = 1;
pub const TR: u8 = 2;
pub const TL: u8 = 3;

/// One of the nine plaquettes `rho^(1..9)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaquetteKind(u8);

impl PlaquetteKind {
    pub fn new(id: u8) -> Option<Self> {
        (1..=9).contains(&id).then_some(PlaquetteKind(id))
    }

    pub fn id(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = PlaquetteKind> {
        (1..=9).map(PlaquetteKind)
    }

    /// Internal connections between ports.
    pub fn pairs(self) -> &'static [(u8, u8)] {
        match self.0 {
            1 => &[(TL, TR)],
            2 => &[(BL, TL)],
            3 => &[(BL, BR)],
            4 => &[(BR, TR)],
            5 => &[(BL, TR)],
            6 => &[(BR, TL)],
            7 => &[],
            8 => &[(BL, BR), (TL, TR)],
            _ => &[(BL, TL), (BR, TR)],
        }
    }

    /// Occupation of (BL, BR, TL, TR).
    pub fn occupation(self) -> (bool, bool, bool, bool) {
        let used = |p: u8| self.pairs().iter().any(|&(a, b)| a == p || b == p);
        (used(BL), used(BR), used(TL), used(TR))
    }

    /// Bottom occupation pattern the kind accepts.
    pub fn bottom(self) -> (bool, bool) {
        let o = self.occupation();
        (o.0, o.1)
    }
}

/// One of the five boundary pieces `kappa^(1..5)` on a given side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoundaryKind {
    id: u8,
    pub side: Side,
}

/// What a boundary piece does with its two ports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryShape {
    /// nothing
    Empty,
    /// top line goes into the wall
    TopToWall,
    /// bottom line goes into the wall
    BottomToWall,
    /// both go into the wall, separately
    BothToWall,
    /// bottom connected to top
    Through,
}

impl BoundaryKind {
    pub fn new(id: u8, side: Side) -> Option<Self> {
        (1..=5).contains(&id).then_some(BoundaryKind { id, side })
    }

    pub fn id(self) -> u8 {
        self.id
    }

    pub fn all(side: Side) -> impl Iterator<Item = BoundaryKind> {
        (1..=5).map(move |id| BoundaryKind { id, side })
    }

    pub fn shape(self) -> BoundaryShape {
        match self.id {
            1 => BoundaryShape::TopToWall,
            2 => BoundaryShape::BottomToWall,
            3 => BoundaryShape::Empty,
            4 => BoundaryShape::BothToWall,
            _ => BoundaryShape::Through,
        }
    }

    /// Whether the bottom port must be occupied.
    pub fn bottom(self) -> bool {
        matches!(self.shape(), BoundaryShape::BottomToWall | BoundaryShape::BothToWall | BoundaryShape::Through)
    }
}
