use dtl_field::Fe;

use crate::LaurentPoly;

/// Minimal commutative-ring surface shared by field elements and polynomials,
/// so weight formulas are written once for numeric and symbolic use.
pub trait Ring: Clone + Send + Sync {
    /// Constant `c` in the same context as `self`.
    fn r_const(&self, c: Fe) -> Self;
    fn r_add(&self, o: &Self) -> Self;
    fn r_sub(&self, o: &Self) -> Self;
    fn r_mul(&self, o: &Self) -> Self;
    fn r_scale(&self, c: &Fe) -> Self;
    fn r_is_zero(&self) -> bool;

    fn r_neg(&self) -> Self {
        self.r_scale(&Fe::int(-1))
    }
    fn r_zero(&self) -> Self {
        self.r_const(Fe::zero())
    }
    fn r_one(&self) -> Self {
        self.r_const(Fe::one())
    }
    fn r_sq(&self) -> Self {
        self.r_mul(self)
    }
}

impl Ring for Fe {
    fn r_const(&self, c: Fe) -> Fe {
        c
    }
    fn r_add(&self, o: &Fe) -> Fe {
        self + o
    }
    fn r_sub(&self, o: &Fe) -> Fe {
        self - o
    }
    fn r_mul(&self, o: &Fe) -> Fe {
        self * o
    }
    fn r_scale(&self, c: &Fe) -> Fe {
        self * c
    }
    fn r_is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl Ring for LaurentPoly {
    fn r_const(&self, c: Fe) -> Self {
        LaurentPoly::constant(self.vars(), c)
    }
    fn r_add(&self, o: &Self) -> Self {
        self + o
    }
    fn r_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn r_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn r_scale(&self, c: &Fe) -> Self {
        self.scale(c)
    }
    fn r_is_zero(&self) -> bool {
        self.is_zero()
    }
}
