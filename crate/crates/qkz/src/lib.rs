//! Ground state of the dilute Temperley-Lieb loop model with open boundaries
//! at `n = n_0 = 1`, as Laurent polynomials in `x_l, z_1..z_L, x_r`.

pub mod nested;
pub mod solve;
pub mod system;

use std::collections::BTreeMap;
use std::sync::Arc;

use dtl_field::Fe;
use dtl_patterns::{LinkPattern, PatternError};
use dtl_poly::{LaurentPoly, PolyError, PolyJson, VarSet};

pub use nested::{
    fully_nested_component, nested_family, proportionality_factor, psi_star, reflect_poly, NestedCache,
};
pub use solve::{solve_ground_state, solve_with, SolveOptions, Solver, Source, Step};
pub use system::{equations, verify_components, EqKind, Equation, QkzFailure, QkzReport};

#[derive(Debug, thiserror::Error)]
pub enum QkzError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error("no equation with a single unknown; missing {0:?}")]
    StuckIncomplete(Vec<String>),
    #[error("component table incomplete")]
    Incomplete,
    #[error("index {0} out of range for L = {1}")]
    BadIndex(usize, usize),
    #[error("L = {0} outside the supported range 1..=5")]
    SizeLimit(usize),
    #[error("recurrence degenerates at this specialization")]
    Degenerate,
    #[error("malformed ground state json: {0}")]
    Json(String),
}

#[derive(Clone, Debug)]
pub struct GroundState {
    pub l: usize,
    pub vars: Arc<VarSet>,
    /// indexed by pattern rank
    pub components: Vec<LaurentPoly>,
    pub log: Vec<Step>,
}

/// Text of the normalization convention stored with every exported state.
pub const NORMALIZATION: &str = "psi_pi0 = psi_pi0~ = w^(2 - L(L+1)/2) times the product formula";

#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
pub struct GroundStateJson {
    #[serde(rename = "L")]
    pub l: usize,
    pub normalization: String,
    pub vars: Vec<String>,
    /// keyed by pattern text, e.g. `"-1,0,1"`
    pub components: BTreeMap<String, PolyJson>,
}

impl GroundState {
    pub fn from_components(l: usize, components: Vec<LaurentPoly>) -> Self {
        GroundState { l, vars: VarSet::standard(l), components, log: Vec::new() }
    }

    pub fn get(&self, p: &LinkPattern) -> &LaurentPoly {
        &self.components[p.rank()]
    }

    pub fn patterns(&self) -> impl Iterator<Item = (LinkPattern, &LaurentPoly)> {
        self.components.iter().enumerate().map(|(r, c)| (LinkPattern::unrank(self.l, r), c))
    }

    pub fn verify(&self) -> Result<QkzReport, QkzError> {
        verify_components(self.l, &self.components)
    }

    pub fn to_json(&self) -> GroundStateJson {
        GroundStateJson {
            l: self.l,
            normalization: NORMALIZATION.to_string(),
            vars: self.vars.names().to_vec(),
            components: self.patterns().map(|(p, c)| (p.to_string(), c.to_json())).collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serializable")
    }

    pub fn from_json(j: &GroundStateJson) -> Result<Self, QkzError> {
        let vars = VarSet::standard(j.l);
        if j.vars != vars.names() {
            return Err(QkzError::Json("variable names".into()));
        }
        let mut comps = vec![None; 3usize.pow(j.l as u32)];
        for (key, poly) in &j.components {
            let p: LinkPattern = key.parse()?;
            if p.len() != j.l {
                return Err(QkzError::Json(format!("pattern {p} has the wrong length")));
            }
            comps[p.rank()] = Some(LaurentPoly::from_json(&vars, poly)?);
        }
        let comps = comps.into_iter().map(|c| c.ok_or(QkzError::Incomplete)).collect::<Result<Vec<_>, _>>()?;
        Ok(GroundState { l: j.l, vars, components: comps, log: Vec::new() })
    }

    pub fn from_json_str(s: &str) -> Result<Self, QkzError> {
        let j: GroundStateJson = serde_json::from_str(s).map_err(|e| QkzError::Json(e.to_string()))?;
        Self::from_json(&j)
    }

    /// Values of all components at one point `(x_l, z_1.., x_r)`.
    pub fn eval(&self, point: &[Fe]) -> Result<Vec<Fe>, QkzError> {
        Ok(self.components.iter().map(|c| c.eval(point)).collect::<Result<Vec<_>, _>>()?)
    }
}

/// `Z_L` and whether `Z_L / psi_{0..0}` is a constant.
#[derive(Clone, Debug, serde::Serialize)]
pub struct PartitionReport {
    pub l: usize,
    pub terms: usize,
    /// the constant, when the ratio is one
    pub ratio: Option<String>,
    pub symmetric: bool,
}

pub fn partition_sum(gs: &GroundState) -> (LaurentPoly, PartitionReport) {
    let z = gs.components.iter().fold(LaurentPoly::zero(&gs.vars), |a, c| &a + c);
    let empty = gs.get(&LinkPattern::zeros(gs.l));
    let ratio = z.try_div(empty).and_then(|q| q.as_constant()).map(|c| c.to_string());
    let symmetric = (1..gs.l).all(|i| z.swap(i, i + 1) == z);
    let rep = PartitionReport { l: gs.l, terms: z.len(), ratio, symmetric };
    (z, rep)
}
