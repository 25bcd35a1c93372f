use crate::vars::MAX_VARS;

pub type Exp = i16;

/// Exponent vector; unused trailing slots stay zero. Ordering is lexicographic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Mono(pub [Exp; MAX_VARS]);

impl Mono {
    pub const ONE: Mono = Mono([0; MAX_VARS]);

    pub fn from_slice(e: &[i64]) -> Mono {
        let mut m = Mono::ONE;
        for (i, &x) in e.iter().enumerate() {
            m.0[i] = Exp::try_from(x).expect("exponent out of range");
        }
        m
    }

    pub fn var(i: usize, e: Exp) -> Mono {
        let mut m = Mono::ONE;
        m.0[i] = e;
        m
    }

    #[inline]
    pub fn mul(&self, o: &Mono) -> Mono {
        let mut r = [0; MAX_VARS];
        for (k, slot) in r.iter_mut().enumerate() {
            *slot = self.0[k].checked_add(o.0[k]).expect("exponent overflow");
        }
        Mono(r)
    }

    #[inline]
    pub fn div(&self, o: &Mono) -> Mono {
        let mut r = [0; MAX_VARS];
        for (k, slot) in r.iter_mut().enumerate() {
            *slot = self.0[k].checked_sub(o.0[k]).expect("exponent overflow");
        }
        Mono(r)
    }

    pub fn inv(&self) -> Mono {
        Mono::ONE.div(self)
    }

    pub fn exps(&self, n: usize) -> &[Exp] {
        &self.0[..n]
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }
}
