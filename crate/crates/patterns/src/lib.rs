//! Link patterns: ternary sequences over {-1, 0, 1}.
//!
//! Sites are numbered from 1, like the rapidities `z_1..z_L`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

pub const MAX_L: usize = 8;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("size {0} exceeds the limit {MAX_L}")]
    SizeLimitExceeded(usize),
    #[error("patterns of different length")]
    LengthMismatch,
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("cannot parse pattern: {0}")]
    Parse(String),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinkPattern(Vec<i8>);

/// Where the line leaving a site ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Partner {
    Empty,
    Site(usize),
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    /// Entry value of a site attached to this boundary.
    pub fn attach_value(self) -> i8 {
        match self {
            Side::Left => -1,
            Side::Right => 1,
        }
    }

    pub fn partner(self) -> Partner {
        match self {
            Side::Left => Partner::Left,
            Side::Right => Partner::Right,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Matching {
    pub arches: Vec<(usize, usize)>,
    pub left_attached: Vec<usize>,
    pub right_attached: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    NE,
    E,
    SE,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyckPath {
    pub steps: Vec<Step>,
    pub heights: Vec<i32>,
}

impl LinkPattern {
    pub fn new(entries: Vec<i8>) -> Result<Self, PatternError> {
        if entries.iter().any(|&v| !(-1..=1).contains(&v)) {
            return Err(PatternError::Parse(format!("{entries:?}")));
        }
        Ok(LinkPattern(entries))
    }

    pub fn from_slice(e: &[i8]) -> Self {
        Self::new(e.to_vec()).expect("entries in {-1,0,1}")
    }

    pub fn zeros(l: usize) -> Self {
        LinkPattern(vec![0; l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }

    /// Entry at 1-based site `i`.
    pub fn get(&self, i: usize) -> i8 {
        self.0[i - 1]
    }

    pub fn set(&mut self, i: usize, v: i8) {
        self.0[i - 1] = v;
    }

    pub fn occupied(&self, i: usize) -> bool {
        self.0[i - 1] != 0
    }

    /// Position in lexicographic order of `lp_L` (with -1 < 0 < 1).
    pub fn rank(&self) -> usize {
        self.0.iter().fold(0, |acc, &v| acc * 3 + (v + 1) as usize)
    }

    pub fn unrank(l: usize, mut idx: usize) -> Self {
        let mut e = vec![0i8; l];
        for slot in e.iter_mut().rev() {
            *slot = (idx % 3) as i8 - 1;
            idx /= 3;
        }
        LinkPattern(e)
    }

    /// Partner of every site, by the stack scan: a -1 closes the most recent
    /// open 1, otherwise it goes to the left boundary; open 1s go right.
    pub fn partners(&self) -> Vec<Partner> {
        let mut out = vec![Partner::Empty; self.len()];
        let mut stack: Vec<usize> = Vec::new();
        for (k, &v) in self.0.iter().enumerate() {
            let site = k + 1;
            match v {
                1 => stack.push(site),
                -1 => match stack.pop() {
                    Some(j) => {
                        out[k] = Partner::Site(j);
                        out[j - 1] = Partner::Site(site);
                    }
                    None => out[k] = Partner::Left,
                },
                _ => {}
            }
        }
        for j in stack {
            out[j - 1] = Partner::Right;
        }
        out
    }

    pub fn matching(&self) -> Matching {
        let mut m = Matching::default();
        for (k, p) in self.partners().into_iter().enumerate() {
            let site = k + 1;
            match p {
                Partner::Site(j) if j > site => m.arches.push((site, j)),
                Partner::Left => m.left_attached.push(site),
                Partner::Right => m.right_attached.push(site),
                _ => {}
            }
        }
        m
    }

    pub fn to_dyck_path(&self) -> DyckPath {
        let mut heights = vec![0i32];
        let steps = self
            .0
            .iter()
            .map(|&v| {
                heights.push(heights.last().unwrap() + v as i32);
                match v {
                    1 => Step::NE,
                    -1 => Step::SE,
                    _ => Step::E,
                }
            })
            .collect();
        DyckPath { steps, heights }
    }

    pub fn from_dyck_path(d: &DyckPath) -> Self {
        LinkPattern(
            d.steps
                .iter()
                .map(|s| match s {
                    Step::NE => 1,
                    Step::E => 0,
                    Step::SE => -1,
                })
                .collect(),
        )
    }

    /// Mirror image: site order reversed and signs flipped.
    pub fn reflect(&self) -> Self {
        LinkPattern(self.0.iter().rev().map(|&v| -v).collect())
    }

    /// The nonzero entries in order; the invariant of an equivalence class.
    pub fn skeleton(&self) -> Vec<i8> {
        self.0.iter().copied().filter(|&v| v != 0).collect()
    }

    /// Exchange sites `i` and `i+1`.
    pub fn swapped(&self, i: usize) -> Self {
        let mut e = self.0.clone();
        e.swap(i - 1, i);
        LinkPattern(e)
    }
}

impl fmt::Display for LinkPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for LinkPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for LinkPattern {
    type Err = PatternError;
    fn from_str(s: &str) -> Result<Self, PatternError> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}');
        let mut e = Vec::new();
        for part in s.split(',') {
            let v: i8 = part.trim().parse().map_err(|_| PatternError::Parse(s.to_string()))?;
            e.push(v);
        }
        LinkPattern::new(e)
    }
}

/// All `3^L` patterns in lexicographic order.
pub fn enumerate_patterns(l: usize) -> Result<Vec<LinkPattern>, PatternError> {
    if l == 0 || l > MAX_L {
        return Err(PatternError::SizeLimitExceeded(l));
    }
    Ok((0..3usize.pow(l as u32)).map(|k| LinkPattern::unrank(l, k)).collect())
}

/// `p1 ⪯ p2`: the height profile of `p1` lies weakly above that of `p2`.
/// The all `-1` pattern is the maximum.
pub fn path_leq(p1: &LinkPattern, p2: &LinkPattern) -> Result<bool, PatternError> {
    if p1.len() != p2.len() {
        return Err(PatternError::LengthMismatch);
    }
    let (h1, h2) = (p1.to_dyck_path().heights, p2.to_dyck_path().heights);
    Ok(h1.iter().zip(&h2).all(|(a, b)| a >= b))
}

/// Patterns sharing the nonzero skeleton of `p`, each with a shortest chain of
/// adjacent moves `i` (exchanging a 0 at `i` or `i+1` with its neighbour)
/// leading from `p` to it. Sorted by pattern.
pub fn equivalence_class(p: &LinkPattern) -> Vec<(LinkPattern, Vec<usize>)> {
    let mut seen: BTreeMap<LinkPattern, Vec<usize>> = BTreeMap::new();
    let mut queue = VecDeque::new();
    seen.insert(p.clone(), Vec::new());
    queue.push_back(p.clone());
    while let Some(cur) = queue.pop_front() {
        let chain = seen[&cur].clone();
        for i in 1..cur.len() {
            let (a, b) = (cur.get(i), cur.get(i + 1));
            if (a == 0) != (b == 0) {
                let next = cur.swapped(i);
                if !seen.contains_key(&next) {
                    let mut c = chain.clone();
                    c.push(i);
                    seen.insert(next.clone(), c);
                    queue.push_back(next);
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// Left: `0^i (-1)^(L-i)`. Right: `1^(L-i) 0^i`, the mirror image of the left one.
pub fn nested_pattern(i: usize, l: usize, side: Side) -> Result<LinkPattern, PatternError> {
    if i > l {
        return Err(PatternError::IndexOutOfRange(i));
    }
    let left: Vec<i8> = (0..l).map(|k| if k < i { 0 } else { -1 }).collect();
    let p = LinkPattern(left);
    Ok(match side {
        Side::Left => p,
        Side::Right => p.reflect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_round_trip() {
        for k in 0..81 {
            assert_eq!(LinkPattern::unrank(4, k).rank(), k);
        }
    }

    #[test]
    fn parse_and_print() {
        let p: LinkPattern = "-1,0,1".parse().unwrap();
        assert_eq!(p.entries(), &[-1, 0, 1]);
        assert_eq!(p.to_string(), "-1,0,1");
        assert!("2,0".parse::<LinkPattern>().is_err());
    }
}
