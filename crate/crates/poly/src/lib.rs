//! Multivariate Laurent polynomials over Q(w).
//!
//! Terms are kept sorted by exponent vector (lexicographic, variable index
//! order) with no zero coefficients, so structural equality is equality.

mod mono;
mod ring;
mod vars;

pub use mono::{Exp, Mono};
pub use ring::Ring;
pub use vars::{Role, VarSet, MAX_VARS};

use dtl_field::{omega_pow, Fe};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials live over different variable sets")]
    VarSetMismatch,
    #[error("division leaves a nonzero remainder")]
    RemainderNonZero,
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("variable {0} is zero but appears with a negative exponent")]
    ZeroAtNegativeExponent(String),
    #[error("bad variable set: {0}")]
    BadVarSet(String),
    #[error("malformed polynomial: {0}")]
    Malformed(String),
}

#[derive(Clone)]
pub struct LaurentPoly {
    vars: Arc<VarSet>,
    terms: Vec<(Mono, Fe)>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, o: &Self) -> bool {
        same_vars(&self.vars, &o.vars) && self.terms == o.terms
    }
}

impl Eq for LaurentPoly {}

fn same_vars(a: &Arc<VarSet>, b: &Arc<VarSet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Substitution rules for a single variable.
#[derive(Clone, Debug)]
pub enum Subst {
    /// `v -> c v`
    Scale(Fe),
    /// `v -> 1/v`
    Invert,
    /// `v -> other`
    Rename(usize),
    /// exchange `v` and `other`
    Swap(usize),
}

/// Generators for [`LaurentPoly::is_symmetric`].
#[derive(Clone, Copy, Debug)]
pub enum SymOp {
    Swap(usize, usize),
    Invert(usize),
}

impl LaurentPoly {
    pub fn zero(vars: &Arc<VarSet>) -> Self {
        LaurentPoly { vars: vars.clone(), terms: Vec::new() }
    }

    pub fn constant(vars: &Arc<VarSet>, c: Fe) -> Self {
        Self::monomial(vars, Mono::ONE, c)
    }

    pub fn one(vars: &Arc<VarSet>) -> Self {
        Self::constant(vars, Fe::one())
    }

    pub fn monomial(vars: &Arc<VarSet>, m: Mono, c: Fe) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        LaurentPoly { vars: vars.clone(), terms }
    }

    /// `v_i^e`.
    pub fn var(vars: &Arc<VarSet>, i: usize, e: Exp) -> Self {
        assert!(i < vars.len(), "variable index out of range");
        Self::monomial(vars, Mono::var(i, e), Fe::one())
    }

    pub fn var_named(vars: &Arc<VarSet>, name: &str) -> Result<Self, PolyError> {
        Ok(Self::var(vars, vars.index(name)?, 1))
    }

    /// Build from arbitrary terms (duplicates summed, zeros dropped).
    pub fn from_terms(vars: &Arc<VarSet>, terms: impl IntoIterator<Item = (Mono, Fe)>) -> Self {
        let mut v: Vec<(Mono, Fe)> = terms.into_iter().collect();
        v.sort_by_key(|a| a.0);
        LaurentPoly { vars: vars.clone(), terms: combine_sorted(v) }
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn terms(&self) -> &[(Mono, Fe)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == Mono::ONE)
    }

    /// Constant coefficient when the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Fe> {
        match self.terms.as_slice() {
            [] => Some(Fe::zero()),
            [(m, c)] if *m == Mono::ONE => Some(c.clone()),
            _ => None,
        }
    }

    pub fn lead(&self) -> Option<&(Mono, Fe)> {
        self.terms.last()
    }

    fn check(&self, o: &Self) -> Result<(), PolyError> {
        if same_vars(&self.vars, &o.vars) {
            Ok(())
        } else {
            Err(PolyError::VarSetMismatch)
        }
    }

    pub fn arith(&self, o: &Self, op: PolyOp) -> Result<Self, PolyError> {
        self.check(o)?;
        Ok(match op {
            PolyOp::Add => self.merge(o, false),
            PolyOp::Sub => self.merge(o, true),
            PolyOp::Mul => self.mul_unchecked(o),
        })
    }

    fn merge(&self, o: &Self, negate: bool) -> Self {
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, if negate { -&b[j].1 } else { b[j].1.clone() }));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            out.push((t.0, if negate { -&t.1 } else { t.1.clone() }));
        }
        LaurentPoly { vars: self.vars.clone(), terms: out }
    }

    fn mul_unchecked(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(&self.vars);
        }
        let (big, small) = if self.len() >= o.len() { (self, o) } else { (o, self) };
        if small.len() <= 24 {
            // shifted copies stay sorted; merge them in one by one
            let mut acc = big.mul_term(&small.terms[0].0, &small.terms[0].1);
            for (m, c) in &small.terms[1..] {
                acc = acc.merge(&big.mul_term(m, c), false);
            }
            return acc;
        }
        let mut map: HashMap<Mono, Fe> = HashMap::with_capacity(big.len() * 2);
        for (m1, c1) in &big.terms {
            for (m2, c2) in &small.terms {
                let m = m1.mul(m2);
                let p = c1 * c2;
                match map.get_mut(&m) {
                    Some(slot) => *slot += &p,
                    None => {
                        map.insert(m, p);
                    }
                }
            }
        }
        let mut v: Vec<(Mono, Fe)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_by_key(|a| a.0);
        LaurentPoly { vars: self.vars.clone(), terms: v }
    }

    /// Multiply by `c * m`.
    pub fn mul_term(&self, m: &Mono, c: &Fe) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let terms = self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc * c)).collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    pub fn scale(&self, c: &Fe) -> Self {
        self.mul_term(&Mono::ONE, c)
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (*m, -c)).collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        for _ in 0..k {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Smallest and largest exponent of variable `i` (0,0 for the zero polynomial).
    pub fn degree_range(&self, i: usize) -> (Exp, Exp) {
        let mut lo = Exp::MAX;
        let mut hi = Exp::MIN;
        for (m, _) in &self.terms {
            lo = lo.min(m.0[i]);
            hi = hi.max(m.0[i]);
        }
        if self.terms.is_empty() {
            (0, 0)
        } else {
            (lo, hi)
        }
    }

    /// Exact quotient `self / d`.
    pub fn exact_div(&self, d: &Self) -> Result<Self, PolyError> {
        self.check(d)?;
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(&self.vars));
        }
        if d.len() == 1 {
            let (m, c) = &d.terms[0];
            return Ok(self.mul_term(&m.inv(), &c.inv().expect("nonzero coefficient")));
        }
        let n = self.nvars();
        // box containing every exponent vector of an exact quotient
        let mut qlo = [0 as Exp; MAX_VARS];
        let mut qhi = [0 as Exp; MAX_VARS];
        for i in 0..n {
            let (plo, phi) = self.degree_range(i);
            let (dlo, dhi) = d.degree_range(i);
            qlo[i] = plo - dlo;
            qhi[i] = phi - dhi;
            if qlo[i] > qhi[i] {
                return Err(PolyError::RemainderNonZero);
            }
        }
        let (dm, dc) = d.terms.last().expect("nonzero divisor");
        let dinv = dc.inv().expect("nonzero coefficient");
        let floor = self.terms[0].0.div(&d.terms[0].0);
        let mut rem: BTreeMap<Mono, Fe> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Mono, Fe)> = Vec::new();
        while let Some((rm, rc)) = rem.pop_last() {
            let qm = rm.div(dm);
            if qm < floor || (0..n).any(|i| qm.0[i] < qlo[i] || qm.0[i] > qhi[i]) {
                return Err(PolyError::RemainderNonZero);
            }
            let qc = &rc * &dinv;
            for (tm, tc) in &d.terms[..d.terms.len() - 1] {
                let m = tm.mul(&qm);
                let p = &qc * tc;
                match rem.get_mut(&m) {
                    Some(slot) => {
                        *slot -= &p;
                        if slot.is_zero() {
                            rem.remove(&m);
                        }
                    }
                    None => {
                        rem.insert(m, -p);
                    }
                }
            }
            quot.push((qm, qc));
        }
        quot.reverse();
        Ok(LaurentPoly { vars: self.vars.clone(), terms: quot })
    }

    /// `Some(q)` if `d` divides exactly.
    pub fn try_div(&self, d: &Self) -> Option<Self> {
        self.exact_div(d).ok()
    }

    /// Apply a per-monomial rewrite `m -> (m', c)`.
    pub fn map_terms(&self, vars: &Arc<VarSet>, mut f: impl FnMut(&Mono) -> (Mono, Fe)) -> Self {
        Self::from_terms(
            vars,
            self.terms.iter().map(|(m, c)| {
                let (m2, k) = f(m);
                (m2, c * &k)
            }),
        )
    }

    pub fn substitute(&self, var: usize, rule: &Subst) -> Result<Self, PolyError> {
        let n = self.nvars();
        if var >= n {
            return Err(PolyError::UnknownVariable(format!("#{var}")));
        }
        let other_ok = |o: usize| {
            if o < n {
                Ok(())
            } else {
                Err(PolyError::UnknownVariable(format!("#{o}")))
            }
        };
        Ok(match rule {
            Subst::Scale(c) => {
                // cache c^e
                let mut cache: HashMap<Exp, Fe> = HashMap::new();
                self.map_terms(&self.vars, |m| {
                    let e = m.0[var];
                    let k = cache
                        .entry(e)
                        .or_insert_with(|| c.pow(e as i64).expect("scale by a nonzero element"))
                        .clone();
                    (*m, k)
                })
            }
            Subst::Invert => self.map_terms(&self.vars, |m| {
                let mut m2 = *m;
                m2.0[var] = -m2.0[var];
                (m2, Fe::one())
            }),
            Subst::Rename(o) => {
                other_ok(*o)?;
                self.map_terms(&self.vars, |m| {
                    let mut m2 = *m;
                    if *o != var {
                        m2.0[*o] += m2.0[var];
                        m2.0[var] = 0;
                    }
                    (m2, Fe::one())
                })
            }
            Subst::Swap(o) => {
                other_ok(*o)?;
                self.map_terms(&self.vars, |m| {
                    let mut m2 = *m;
                    m2.0.swap(var, *o);
                    (m2, Fe::one())
                })
            }
        })
    }

    pub fn substitute_named(&self, name: &str, rule: &Subst) -> Result<Self, PolyError> {
        self.substitute(self.vars.index(name)?, rule)
    }

    /// Scale `v_i -> w^k v_i`; cheaper than a general scale.
    pub fn scale_var_omega(&self, i: usize, k: i64) -> Self {
        self.map_terms(&self.vars, |m| (*m, omega_pow(k * m.0[i] as i64)))
    }

    pub fn swap(&self, i: usize, j: usize) -> Self {
        self.substitute(i, &Subst::Swap(j)).expect("valid indices")
    }

    pub fn invert_var(&self, i: usize) -> Self {
        self.substitute(i, &Subst::Invert).expect("valid index")
    }

    /// Move to another variable set: column `j` goes to `map[j]` (summed on
    /// collision). A `None` column must carry only zero exponents.
    pub fn reindex(&self, vars: &Arc<VarSet>, map: &[Option<usize>]) -> Result<Self, PolyError> {
        assert_eq!(map.len(), self.nvars());
        for (m, _) in &self.terms {
            for (j, t) in map.iter().enumerate() {
                if t.is_none() && m.0[j] != 0 {
                    return Err(PolyError::UnknownVariable(self.vars.names()[j].clone()));
                }
                if let Some(t) = t {
                    if *t >= vars.len() {
                        return Err(PolyError::UnknownVariable(format!("#{t}")));
                    }
                }
            }
        }
        Ok(self.map_terms(vars, |m| {
            let mut r = Mono::ONE;
            for (j, t) in map.iter().enumerate() {
                if let Some(t) = t {
                    r.0[*t] += m.0[j];
                }
            }
            (r, Fe::one())
        }))
    }

    /// Exact value at a point given per variable (same order as the variable set).
    pub fn eval(&self, point: &[Fe]) -> Result<Fe, PolyError> {
        let n = self.nvars();
        if point.len() != n {
            return Err(PolyError::Malformed(format!("point has {} values, need {n}", point.len())));
        }
        let mut tables: Vec<(Exp, Vec<Fe>)> = Vec::with_capacity(n);
        for (i, x) in point.iter().enumerate() {
            let (lo, hi) = self.degree_range(i);
            if lo < 0 && x.is_zero() {
                return Err(PolyError::ZeroAtNegativeExponent(self.vars.names()[i].clone()));
            }
            let mut t = Vec::with_capacity((hi - lo + 1) as usize);
            if x.is_zero() {
                t.extend((lo..=hi).map(|e| if e == 0 { Fe::one() } else { Fe::zero() }));
            } else {
                let mut cur = x.pow(lo as i64).expect("nonzero");
                for _ in lo..=hi {
                    t.push(cur.clone());
                    cur = &cur * x;
                }
            }
            tables.push((lo, t));
        }
        let mut acc = Fe::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, (lo, t)) in tables.iter().enumerate() {
                let e = m.0[i];
                if e != 0 {
                    v = &v * &t[(e - lo) as usize];
                }
            }
            acc += &v;
        }
        Ok(acc)
    }

    /// Evaluate from a name -> value map; missing names are an error.
    pub fn eval_named(&self, point: &[(&str, Fe)]) -> Result<Fe, PolyError> {
        let mut vals = vec![None; self.nvars()];
        for (name, v) in point {
            vals[self.vars.index(name)?] = Some(v.clone());
        }
        let vals: Vec<Fe> = vals
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| PolyError::UnknownVariable(self.vars.names()[i].clone())))
            .collect::<Result<_, _>>()?;
        self.eval(&vals)
    }

    /// Substitute values for some variables, keeping the rest symbolic.
    pub fn eval_partial(&self, values: &[Option<Fe>]) -> Result<Self, PolyError> {
        assert_eq!(values.len(), self.nvars());
        let mut cache: HashMap<(usize, Exp), Fe> = HashMap::new();
        for (i, v) in values.iter().enumerate() {
            if let Some(x) = v {
                if x.is_zero() && self.degree_range(i).0 < 0 {
                    return Err(PolyError::ZeroAtNegativeExponent(self.vars.names()[i].clone()));
                }
            }
        }
        let mut terms = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            let mut m2 = *m;
            let mut k = c.clone();
            for (i, v) in values.iter().enumerate() {
                if let Some(x) = v {
                    let e = m.0[i];
                    if e != 0 {
                        let p = cache.entry((i, e)).or_insert_with(|| x.pow(e as i64).expect("nonzero"));
                        k = &k * &*p;
                    }
                    m2.0[i] = 0;
                }
            }
            terms.push((m2, k));
        }
        Ok(Self::from_terms(&self.vars, terms))
    }

    pub fn is_symmetric(&self, group: &[SymOp]) -> bool {
        group.iter().all(|g| {
            let img = match *g {
                SymOp::Swap(i, j) => self.swap(i, j),
                SymOp::Invert(i) => self.invert_var(i),
            };
            img == *self
        })
    }

    /// Deterministic serialization (canonical JSON, compact).
    pub fn canonical_bytes(&self) -> Vec<u8> {
        serde_json::to_vec(&self.to_json()).expect("serializable")
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            vars: self.vars.names().to_vec(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    exp: m.exps(self.nvars()).iter().map(|&e| e as i64).collect(),
                    coeff: c.clone(),
                })
                .collect(),
        }
    }

    /// Parse against a known variable set; names must match it.
    pub fn from_json(vars: &Arc<VarSet>, j: &PolyJson) -> Result<Self, PolyError> {
        if j.vars.as_slice() != vars.names() {
            return Err(PolyError::VarSetMismatch);
        }
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            if t.exp.len() != vars.len() {
                return Err(PolyError::Malformed("exponent vector length".into()));
            }
            if t.exp.iter().any(|&e| e.abs() > Exp::MAX as i64) {
                return Err(PolyError::Malformed("exponent out of range".into()));
            }
            terms.push((Mono::from_slice(&t.exp), t.coeff.clone()));
        }
        Ok(Self::from_terms(vars, terms))
    }
}

fn combine_sorted(v: Vec<(Mono, Fe)>) -> Vec<(Mono, Fe)> {
    let mut out: Vec<(Mono, Fe)> = Vec::with_capacity(v.len());
    for (m, c) in v {
        match out.last_mut() {
            Some(last) if last.0 == m => last.1 += &c,
            _ => {
                if let Some(last) = out.last() {
                    if last.1.is_zero() {
                        out.pop();
                    }
                }
                out.push((m, c));
            }
        }
    }
    if out.last().is_some_and(|t| t.1.is_zero()) {
        out.pop();
    }
    out
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TermJson {
    pub exp: Vec<i64>,
    pub coeff: Fe,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

/// `poly_arith` entry point.
pub fn poly_arith(p: &LaurentPoly, q: &LaurentPoly, op: PolyOp) -> Result<LaurentPoly, PolyError> {
    p.arith(q, op)
}

/// Elementary symmetric polynomial `E_m` in the listed variables; zero for `m > len`.
pub fn elementary_symmetric(vars: &Arc<VarSet>, m: i64, over: &[usize]) -> LaurentPoly {
    if m < 0 || m as usize > over.len() {
        return LaurentPoly::zero(vars);
    }
    // Newton-style build: E(v + y) = E(v) + y E_{m-1}(v)
    let m = m as usize;
    let mut e: Vec<LaurentPoly> = vec![LaurentPoly::one(vars)];
    e.extend((0..m).map(|_| LaurentPoly::zero(vars)));
    for &y in over {
        let yv = LaurentPoly::var(vars, y, 1);
        for k in (1..=m).rev() {
            e[k] = &e[k] + &(&e[k - 1] * &yv);
        }
    }
    e.swap_remove(m)
}

/// `num / den` kept unreduced until [`RationalExpr::reduce_to_poly`].
#[derive(Clone, Debug, PartialEq)]
pub struct RationalExpr {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl RationalExpr {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, PolyError> {
        num.check(&den)?;
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(RationalExpr { num, den })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let den = LaurentPoly::one(p.vars());
        RationalExpr { num: p, den }
    }

    pub fn add(&self, o: &Self) -> Result<Self, PolyError> {
        if self.den == o.den {
            return Self::new(self.num.arith(&o.num, PolyOp::Add)?, self.den.clone());
        }
        Self::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }

    pub fn sub(&self, o: &Self) -> Result<Self, PolyError> {
        self.add(&RationalExpr { num: o.num.neg(), den: o.den.clone() })
    }

    pub fn mul(&self, o: &Self) -> Result<Self, PolyError> {
        Self::new(self.num.arith(&o.num, PolyOp::Mul)?, &self.den * &o.den)
    }

    pub fn div(&self, o: &Self) -> Result<Self, PolyError> {
        Self::new(&self.num * &o.den, self.den.arith(&o.num, PolyOp::Mul)?)
    }

    pub fn reduce_to_poly(&self) -> Result<LaurentPoly, PolyError> {
        self.num.exact_div(&self.den)
    }

    /// Cross-multiplied equality.
    pub fn equals(&self, o: &Self) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }

    pub fn eval(&self, point: &[Fe]) -> Result<Fe, PolyError> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(self.num.eval(point)?.checked_div(&d).expect("nonzero"))
    }
}

macro_rules! poly_ops {
    ($tr:ident, $f:ident, $op:expr) => {
        impl<'a> std::ops::$tr<&'a LaurentPoly> for &'a LaurentPoly {
            type Output = LaurentPoly;
            /// Panics when the variable sets differ; use [`LaurentPoly::arith`] to get an error instead.
            fn $f(self, o: &LaurentPoly) -> LaurentPoly {
                self.arith(o, $op).expect("same variable set")
            }
        }
        impl std::ops::$tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, o: LaurentPoly) -> LaurentPoly {
                (&self).$f(&o)
            }
        }
        impl<'a> std::ops::$tr<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, o: &LaurentPoly) -> LaurentPoly {
                (&self).$f(o)
            }
        }
        impl<'a> std::ops::$tr<LaurentPoly> for &'a LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, o: LaurentPoly) -> LaurentPoly {
                self.$f(&o)
            }
        }
    };
}
poly_ops!(Add, add, PolyOp::Add);
poly_ops!(Sub, sub, PolyOp::Sub);
poly_ops!(Mul, mul, PolyOp::Mul);

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(self)
    }
}

impl std::ops::Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(&self)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (i, &e) in m.exps(self.nvars()).iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*{}", self.vars.names()[i])?,
                    _ => write!(f, "*{}^{}", self.vars.names()[i], e)?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() > 12 {
            write!(f, "LaurentPoly({} terms)", self.len())
        } else {
            write!(f, "LaurentPoly({self})")
        }
    }
}
