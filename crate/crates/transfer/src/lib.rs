//! Double-row transfer matrix `T(t | z_1..z_L; zeta_l, zeta_r)` built by
//! gluing plaquettes at exact sample points.
//!
//! Geometry: row 1 carries the auxiliary line from west to east through
//! `R(t, z_i)`, turns at `K_r`, comes back through `R(z_i, 1/t)` and closes
//! through `K_l` onto the west edge of row 1.

use dtl_diagram::weights::{boundary_omega_zeta, bulk_omega};
use dtl_diagram::{DiagramBuilder, DiagramError, Piece};
use dtl_field::{FieldError, Fe};
use dtl_patterns::{enumerate_patterns, LinkPattern, PatternError, Side};

#[derive(Debug, thiserror::Error)]
pub enum TransferError {
    #[error("L = {0} exceeds the supported size 5")]
    SizeLimitExceeded(usize),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error("component {0} breaks the eigenvector relation")]
    NotAnEigenvector(String),
    #[error("parameter mismatch: {0}")]
    Mismatch(String),
}

/// Exact sample point.
#[derive(Clone, Debug, PartialEq)]
pub struct Params {
    pub t: Fe,
    pub z: Vec<Fe>,
    pub zeta_l: Fe,
    pub zeta_r: Fe,
    pub n: Fe,
    pub n0: Fe,
}

impl Params {
    pub fn new(t: Fe, z: Vec<Fe>, zeta_l: Fe, zeta_r: Fe) -> Self {
        Params { t, z, zeta_l, zeta_r, n: Fe::one(), n0: Fe::one() }
    }

    pub fn l(&self) -> usize {
        self.z.len()
    }

    pub fn with_t(&self, t: Fe) -> Self {
        Params { t, ..self.clone() }
    }
}

/// Local weights used by one transfer matrix; overridable for experiments.
#[derive(Clone, Debug)]
pub struct RowWeights {
    pub row1: Vec<[Fe; 9]>,
    pub row2: Vec<[Fe; 9]>,
    pub k_r: [Fe; 5],
    pub k_l: [Fe; 5],
}

impl RowWeights {
    pub fn omega(p: &Params) -> Result<Self, TransferError> {
        let tinv = p.t.inv()?;
        let row1 = p.z.iter().map(|z| bulk_omega(&p.t, z)).collect();
        let row2 = p.z.iter().map(|z| bulk_omega(z, &tinv)).collect();
        let (k_r, _) = boundary_omega_zeta(&tinv, &p.zeta_r)?;
        let (k_l, _) = boundary_omega_zeta(&-p.t.clone(), &p.zeta_l)?;
        Ok(RowWeights { row1, row2, k_r, k_l })
    }
}

/// Dense `3^L x 3^L` matrix; `entries[out][in]`.
#[derive(Clone, Debug, PartialEq)]
pub struct TransferMatrix {
    pub l: usize,
    pub entries: Vec<Vec<Fe>>,
}

impl TransferMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn apply(&self, v: &[Fe]) -> Vec<Fe> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(v).fold(Fe::zero(), |a, (x, y)| if y.is_zero() || x.is_zero() { a } else { a + &(x * y) }))
            .collect()
    }

    pub fn mul(&self, o: &TransferMatrix) -> TransferMatrix {
        let n = self.size();
        let entries = dtl_par::map_range(n, |i| {
            (0..n)
                .map(|j| (0..n).fold(Fe::zero(), |a, k| {
                    let (x, y) = (&self.entries[i][k], &o.entries[k][j]);
                    if x.is_zero() || y.is_zero() { a } else { a + &(x * y) }
                }))
                .collect()
        });
        TransferMatrix { l: self.l, entries }
    }

    /// Sums over each column.
    pub fn column_sums(&self) -> Vec<Fe> {
        let n = self.size();
        (0..n).map(|j| (0..n).fold(Fe::zero(), |a, i| a + &self.entries[i][j])).collect()
    }

    pub fn from_columns(l: usize, cols: Vec<Vec<Fe>>) -> Self {
        let n = cols.len();
        let entries = (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect();
        TransferMatrix { l, entries }
    }
}

/// Images of one basis pattern under the double row, with weights.
pub fn glue_diagrams(w: &RowWeights, state: &LinkPattern, n: &Fe, n0: &Fe) -> Result<Vec<(LinkPattern, Fe)>, TransferError> {
    let l = state.len();
    if w.row1.len() != l || w.row2.len() != l {
        return Err(TransferError::Mismatch(format!("{} columns for a size {l} pattern", w.row1.len())));
    }
    let mut b = DiagramBuilder::new();
    let cap = b.add(Piece::cap(state, &Fe::one()));
    // row 1 ports: BL = west, BR = south, TR = east, TL = north
    let r1: Vec<usize> = w.row1.iter().map(|x| b.add(Piece::plaquette(x))).collect();
    // row 2 ports: BL = south, BR = east, TR = north, TL = west
    let r2: Vec<usize> = w.row2.iter().map(|x| b.add(Piece::plaquette(x))).collect();
    let kr = b.add(Piece::boundary(Side::Right, &w.k_r));
    let kl = b.add(Piece::boundary(Side::Left, &w.k_l));
    for i in 0..l {
        b.link((cap, i as u8), (r1[i], 1));
        b.link((r1[i], 3), (r2[i], 0));
        if i + 1 < l {
            b.link((r1[i], 2), (r1[i + 1], 0));
            b.link((r2[i + 1], 3), (r2[i], 1));
        }
    }
    b.link((r1[l - 1], 2), (kr, 0)).link((kr, 1), (r2[l - 1], 1));
    b.link((r2[0], 3), (kl, 0)).link((kl, 1), (r1[0], 0));
    for &p in &r2 {
        b.external((p, 2));
    }
    let d = b.build()?;
    let mut out = Vec::new();
    for (c, v) in d.evaluate(n, n0) {
        out.push((c.to_pattern()?, v));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Full matrix from explicit local weights.
pub fn build_from_weights(l: usize, w: &RowWeights, n: &Fe, n0: &Fe) -> Result<TransferMatrix, TransferError> {
    if l > 5 {
        return Err(TransferError::SizeLimitExceeded(l));
    }
    let pats = enumerate_patterns(l)?;
    let cols = dtl_par::map_slice(&pats, |p| -> Result<Vec<Fe>, TransferError> {
        let mut col = vec![Fe::zero(); pats.len()];
        for (q, v) in glue_diagrams(w, p, n, n0)? {
            col[q.rank()] = v;
        }
        Ok(col)
    });
    let cols = cols.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(TransferMatrix::from_columns(l, cols))
}

pub fn build_transfer_matrix(p: &Params) -> Result<TransferMatrix, TransferError> {
    if p.l() > 5 {
        return Err(TransferError::SizeLimitExceeded(p.l()));
    }
    build_from_weights(p.l(), &RowWeights::omega(p)?, &p.n, &p.n0)
}

/// Result of an eigenvector check.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenReport {
    pub lambda: Fe,
}

/// `T v = lambda v` for some `lambda`.
pub fn eigen_check(t: &TransferMatrix, v: &[Fe]) -> Result<EigenReport, TransferError> {
    if v.len() != t.size() {
        return Err(TransferError::Mismatch(format!("vector of length {}", v.len())));
    }
    let tv = t.apply(v);
    let pivot = v.iter().position(|x| !x.is_zero()).ok_or_else(|| TransferError::Mismatch("zero vector".into()))?;
    let lambda = tv[pivot].checked_div(&v[pivot])?;
    for (r, (a, b)) in tv.iter().zip(v).enumerate() {
        if *a != &lambda * b {
            return Err(TransferError::NotAnEigenvector(LinkPattern::unrank(t.l, r).to_string()));
        }
    }
    Ok(EigenReport { lambda })
}

/// Column normalization `prod_i W(t, z_i) W(z_i, 1/t) * U_l(1/t) * U_r` for the omega weights.
pub fn expected_column_sum(p: &Params) -> Result<Fe, TransferError> {
    let tinv = p.t.inv()?;
    let mut s = Fe::one();
    for z in &p.z {
        s = s * &dtl_diagram::weights::bulk_norm(&p.t, z) * &dtl_diagram::weights::bulk_norm(z, &tinv);
    }
    let (_, ul) = boundary_omega_zeta(&-p.t.clone(), &p.zeta_l)?;
    let (_, ur) = boundary_omega_zeta(&tinv, &p.zeta_r)?;
    Ok(s * &ul * &ur)
}
