//! Worklist solver: resolve every equation that has exactly one unknown
//! component, until the table is full or no such equation remains.

use dtl_patterns::{LinkPattern, Side};
use dtl_poly::{LaurentPoly, VarSet};

use crate::nested::{reflect_poly, NestedCache};
use crate::system::{equations, EqKind, Equation};
use crate::{GroundState, QkzError};

/// How a component was obtained.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Source {
    Seed(String),
    /// solved from the equation of `kind` at pattern `at`
    Equation { kind: EqKind, at: String, unknown_on_left: bool },
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct Step {
    pub pattern: String,
    pub source: Source,
}

/// Which seeds to start from and which equations may be used.
#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// nested components `pi_i` (and their mirrors) for `i` in this list
    pub seeds: Vec<usize>,
    pub mirror_seeds: bool,
    /// also solve for the component on the left of an equation when it is the only unknown
    pub solve_left: bool,
}

impl SolveOptions {
    /// Nested families `pi_0 .. pi_{L-1}` on both sides, single unknowns on the right only.
    pub fn full(l: usize) -> Self {
        SolveOptions { seeds: (0..l).collect(), mirror_seeds: true, solve_left: false }
    }
}

pub struct Solver {
    pub l: usize,
    eqs: Vec<Equation>,
    pub known: Vec<Option<LaurentPoly>>,
    pub log: Vec<Step>,
    solve_left: bool,
}

enum Plan {
    Right { eq: usize, unknown: usize },
    Left { eq: usize },
}

impl Solver {
    pub fn new(l: usize, solve_left: bool) -> Result<Self, QkzError> {
        let eqs = equations(l)?;
        Ok(Solver { l, eqs, known: vec![None; 3usize.pow(l as u32)], log: Vec::new(), solve_left })
    }

    pub fn seed(&mut self, p: &LinkPattern, f: LaurentPoly, label: &str) {
        let r = p.rank();
        if self.known[r].is_none() {
            self.known[r] = Some(f);
            self.log.push(Step { pattern: p.to_string(), source: Source::Seed(label.to_string()) });
        }
    }

    pub fn unknown(&self) -> Vec<LinkPattern> {
        (0..self.known.len()).filter(|&r| self.known[r].is_none()).map(|r| LinkPattern::unrank(self.l, r)).collect()
    }

    fn plan(&self) -> Vec<(usize, Plan)> {
        let mut out: Vec<(usize, Plan)> = Vec::new();
        let mut taken = vec![false; self.known.len()];
        let single = |e: &Equation| {
            let mut unk = e.rhs.iter().map(|(q, _)| *q).filter(|&q| self.known[q].is_none());
            let first = unk.next();
            if unk.next().is_some() {
                None
            } else {
                Some(first)
            }
        };
        // right-hand unknowns first; they only need one exact division
        for (ei, e) in self.eqs.iter().enumerate() {
            if let (Some(Some(u)), true) = (single(e), self.known[e.target].is_some()) {
                if !taken[u] {
                    taken[u] = true;
                    out.push((u, Plan::Right { eq: ei, unknown: u }));
                }
            }
        }
        if !self.solve_left {
            return out;
        }
        for (ei, e) in self.eqs.iter().enumerate() {
            let t = e.target;
            if self.known[t].is_some() || taken[t] {
                continue;
            }
            match single(e) {
                Some(None) => {}
                Some(Some(u)) if u == t => {}
                _ => continue,
            }
            taken[t] = true;
            out.push((t, Plan::Left { eq: ei }));
        }
        out
    }

    fn execute(&self, plan: &Plan) -> Result<Option<LaurentPoly>, QkzError> {
        let get = |q: usize| self.known[q].as_ref().expect("known");
        match *plan {
            Plan::Right { eq, unknown } => {
                let e = &self.eqs[eq];
                let mut acc = &e.lhs * &e.kind.apply(get(e.target));
                let mut coef = None;
                for (q, c) in &e.rhs {
                    if *q == unknown {
                        coef = Some(c);
                    } else {
                        acc = &acc - &(c * get(*q));
                    }
                }
                let coef = coef.expect("unknown appears on the right");
                Ok(Some(acc.exact_div(coef)?))
            }
            Plan::Left { eq } => {
                // lhs f' = c f + g  and its image  lhs' f = c' f' + g'
                let e = &self.eqs[eq];
                let zero = LaurentPoly::zero(&e.lhs.vars().clone());
                let c = e.coeff(e.target).cloned().unwrap_or(zero.clone());
                let mut g = zero;
                for (q, w) in &e.rhs {
                    if *q != e.target {
                        g = &g + &(w * get(*q));
                    }
                }
                let den = &(&e.lhs * &e.kind.apply(&e.lhs)) - &(&c * &e.kind.apply(&c));
                if den.is_zero() {
                    return Ok(None);
                }
                let num = &(&e.lhs * &e.kind.apply(&g)) + &(&e.kind.apply(&c) * &g);
                Ok(Some(num.exact_div(&den)?))
            }
        }
    }

    /// One parallel round; returns how many components were found.
    pub fn round(&mut self) -> Result<usize, QkzError> {
        let plans = self.plan();
        let results = dtl_par::map_slice(&plans, |(_, p)| self.execute(p));
        let mut n = 0;
        for ((r, p), res) in plans.into_iter().zip(results) {
            let Some(f) = res? else { continue };
            let (eq, left) = match p {
                Plan::Right { eq, .. } => (eq, false),
                Plan::Left { eq } => (eq, true),
            };
            let e = &self.eqs[eq];
            self.log.push(Step {
                pattern: LinkPattern::unrank(self.l, r).to_string(),
                source: Source::Equation {
                    kind: e.kind,
                    at: LinkPattern::unrank(self.l, e.target).to_string(),
                    unknown_on_left: left,
                },
            });
            self.known[r] = Some(f);
            n += 1;
        }
        Ok(n)
    }

    pub fn run(&mut self) -> Result<(), QkzError> {
        while self.round()? > 0 {}
        let missing = self.unknown();
        if missing.is_empty() {
            Ok(())
        } else {
            Err(QkzError::StuckIncomplete(missing.iter().map(|p| p.to_string()).collect()))
        }
    }

    pub fn into_ground_state(self) -> Result<GroundState, QkzError> {
        let vars = VarSet::standard(self.l);
        let comps = self.known.into_iter().map(|c| c.ok_or(QkzError::Incomplete)).collect::<Result<Vec<_>, _>>()?;
        Ok(GroundState { l: self.l, vars, components: comps, log: self.log })
    }
}

/// Seed a solver with nested families as requested.
pub fn seeded_solver(l: usize, opts: &SolveOptions, cache: &NestedCache) -> Result<Solver, QkzError> {
    let mut s = Solver::new(l, opts.solve_left)?;
    for &i in &opts.seeds {
        if i > l {
            continue;
        }
        let f = cache.get(l, i)?;
        let p = dtl_patterns::nested_pattern(i, l, Side::Left)?;
        if opts.mirror_seeds {
            let q = dtl_patterns::nested_pattern(i, l, Side::Right)?;
            s.seed(&q, reflect_poly(&f), &format!("mirror pi_{i}"));
        }
        s.seed(&p, (*f).clone(), &format!("pi_{i}"));
    }
    Ok(s)
}

/// Solve with the given options.
pub fn solve_with(l: usize, opts: &SolveOptions, cache: &NestedCache) -> Result<GroundState, QkzError> {
    if l == 0 || l > 5 {
        return Err(QkzError::SizeLimit(l));
    }
    let mut s = seeded_solver(l, opts, cache)?;
    s.run()?;
    s.into_ground_state()
}

/// Ground state of size `L`.
pub fn solve_ground_state(l: usize) -> Result<GroundState, QkzError> {
    solve_with(l, &SolveOptions::full(l), &NestedCache::new())
}
