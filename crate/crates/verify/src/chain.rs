//! Products of local operators drawn as one diagram.
//!
//! Operators are listed in the order they act (bottom first). Rapidities are
//! tracked per site: a bulk operator on `(i, i+1)` reads `(z_i, z_{i+1})` and
//! swaps them, a boundary operator reads the edge rapidity and inverts it.

use std::collections::HashMap;

use dtl_diagram::{Connectivity, DiagramBuilder, Piece};
use dtl_field::{FieldError, Fe};
use dtl_patterns::Side;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    /// bulk operator on sites `i, i+1` (0-based `i`)
    R(usize),
    K(Side),
}

/// Weight tables as functions of the rapidities they see.
pub trait Weights {
    fn bulk(&self, a: &Fe, b: &Fe) -> Result<[Fe; 9], FieldError>;
    fn boundary(&self, side: Side, z: &Fe) -> Result<[Fe; 5], FieldError>;
}

/// Connectivity table of the product. External ports: bottoms `0..l`, then tops `l..2l`.
pub fn chain_table(
    l: usize,
    rapidities: &[Fe],
    ops: &[Op],
    w: &dyn Weights,
    n: &Fe,
    n0: &Fe,
    same: &Fe,
) -> Result<HashMap<Connectivity, Fe>, FieldError> {
    let mut raps = rapidities.to_vec();
    let mut b = DiagramBuilder::new();
    let mut bottom: Vec<Option<(usize, u8)>> = vec![None; l];
    let mut top: Vec<Option<(usize, u8)>> = vec![None; l];
    let mut attach = |b: &mut DiagramBuilder<Fe>, site: usize, port: (usize, u8), top: &[Option<(usize, u8)>]| {
        match top[site] {
            Some(t) => {
                b.link(t, port);
            }
            None => bottom[site] = Some(port),
        }
    };
    for op in ops {
        match *op {
            Op::R(i) => {
                let p = b.add(Piece::plaquette(&w.bulk(&raps[i], &raps[i + 1])?));
                attach(&mut b, i, (p, 0), &top);
                attach(&mut b, i + 1, (p, 1), &top);
                top[i] = Some((p, 3));
                top[i + 1] = Some((p, 2));
                raps.swap(i, i + 1);
            }
            Op::K(side) => {
                let s = if side == Side::Left { 0 } else { l - 1 };
                let p = b.add(Piece::boundary(side, &w.boundary(side, &raps[s])?));
                attach(&mut b, s, (p, 0), &top);
                top[s] = Some((p, 1));
                raps[s] = raps[s].inv()?;
            }
        }
    }
    for port in bottom.iter().chain(top.iter()) {
        b.external(port.expect("every site is touched by some operator"));
    }
    let d = b.build().expect("chain wiring is complete");
    Ok(d.evaluate_split(n, n0, same))
}

/// Human-readable connectivity: `ends` with bottoms `b1..` and tops `t1..`.
pub fn describe(c: &Connectivity, l: usize) -> String {
    let name = |j: usize| if j < l { format!("b{}", j + 1) } else { format!("t{}", j - l + 1) };
    let parts: Vec<String> = c
        .ends
        .iter()
        .enumerate()
        .map(|(j, e)| match e {
            dtl_diagram::End::Free => format!("{}:-", name(j)),
            dtl_diagram::End::External(k) => format!("{}:{}", name(j), name(*k)),
            dtl_diagram::End::Wall(s) => format!("{}:{:?}", name(j), s),
        })
        .collect();
    parts.join(" ")
}
