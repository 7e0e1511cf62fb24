//! Named extremal families, membership in the maximizer classes, closed-form
//! extremal values of `ZC1*`, and exhaustive extremal search over trees.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::enumerate::{enumerate_trees, EnumSpec};
use crate::indices;
use crate::{Error, Graph, Result, TreeCode};

/// Default largest order accepted by exhaustive searches.
pub const DEFAULT_SCALE_GUARD: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Path,
    Star,
    Complete,
    Ct0,
    Ct1,
    Ct2,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Star => "star",
            FamilyKind::Complete => "complete",
            FamilyKind::Ct0 => "ct0",
            FamilyKind::Ct1 => "ct1",
            FamilyKind::Ct2 => "ct2",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "path" => FamilyKind::Path,
            "star" => FamilyKind::Star,
            "complete" => FamilyKind::Complete,
            "ct0" => FamilyKind::Ct0,
            "ct1" => FamilyKind::Ct1,
            "ct2" => FamilyKind::Ct2,
            other => return Err(Error::UnknownName(other.to_string())),
        })
    }
}

/// The three classes of maximum-`ZC1*` chemical trees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MaxClass {
    /// `n ≡ 0 (mod 3)`, `n ≥ 9`: a single degree-2 vertex with a pendent
    /// neighbor, all other degrees 1 or 4.
    Ct0,
    /// `n ≡ 1 (mod 3)`, `n ≥ 7`: a single degree-3 vertex with two pendent
    /// neighbors, all other degrees 1 or 4.
    Ct1,
    /// `n ≡ 2 (mod 3)`, `n ≥ 8`: all degrees 1 or 4.
    Ct2,
}

impl MaxClass {
    /// The class that can occur at order `n`, if any.
    pub fn for_order(n: usize) -> Option<MaxClass> {
        match n % 3 {
            0 if n >= 9 => Some(MaxClass::Ct0),
            1 if n >= 7 => Some(MaxClass::Ct1),
            2 if n >= 8 => Some(MaxClass::Ct2),
            _ => None,
        }
    }
}

fn check_order(kind: FamilyKind, n: usize) -> Result<()> {
    let (residue, min) = match kind {
        FamilyKind::Path | FamilyKind::Star | FamilyKind::Complete => {
            return if n >= 1 {
                Ok(())
            } else {
                Err(Error::OrderOutOfRange(format!("{kind} needs n >= 1")))
            };
        }
        FamilyKind::Ct0 => (0, 9),
        FamilyKind::Ct1 => (1, 7),
        FamilyKind::Ct2 => (2, 8),
    };
    if n % 3 != residue {
        return Err(Error::OrderOutOfRange(format!(
            "{kind} needs n ≡ {residue} (mod 3), got n = {n}"
        )));
    }
    if n < min {
        return Err(Error::OrderOutOfRange(format!(
            "{kind} needs n >= {min}, got n = {n}"
        )));
    }
    Ok(())
}

/// One deterministic representative of a family.
///
/// The maximizer classes are built as caterpillars: a path of degree-4
/// spine vertices `0..k`, the special degree-2 or degree-3 vertex (if any)
/// hung off spine vertex 0, and leaves filling every remaining slot.
pub fn construct_family(kind: FamilyKind, n: usize) -> Result<Graph> {
    check_order(kind, n)?;
    let (spine, special_children) = match kind {
        FamilyKind::Path => return Ok(Graph::path(n)),
        FamilyKind::Star => return Ok(Graph::star(n)),
        FamilyKind::Complete => return Ok(Graph::complete(n)),
        FamilyKind::Ct0 => ((n - 3) / 3, Some(1)),
        FamilyKind::Ct1 => ((n - 4) / 3, Some(2)),
        FamilyKind::Ct2 => ((n - 2) / 3, None),
    };
    let mut edges = Vec::with_capacity(n - 1);
    let mut degree = vec![0usize; spine];
    for v in 1..spine {
        edges.push((v - 1, v));
        degree[v - 1] += 1;
        degree[v] += 1;
    }
    let mut next = spine;
    if let Some(leaves) = special_children {
        let special = next;
        next += 1;
        edges.push((0, special));
        degree[0] += 1;
        for _ in 0..leaves {
            edges.push((special, next));
            next += 1;
        }
    }
    for (v, &d) in degree.iter().enumerate() {
        for _ in d..4 {
            edges.push((v, next));
            next += 1;
        }
    }
    debug_assert_eq!(next, n);
    Graph::from_edges(&edges, Some(n))
}

/// Which maximizer class a chemical tree belongs to, if any. Rejects
/// non-trees and trees with a vertex of degree above 4.
pub fn classify_max_family(tree: &Graph) -> Result<Option<MaxClass>> {
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    let d = tree.degrees();
    let max = d.max_degree();
    if max > 4 {
        return Err(Error::DegreeTooLarge {
            found: max,
            limit: 4,
        });
    }
    let n = tree.order();
    let d = &d;
    let of_degree = |k: usize| (0..n).filter(move |&v| d[v] == k);
    let pendent_neighbors = |v: usize| tree.neighbors(v).iter().filter(|&&u| d[u] == 1).count();
    let twos: Vec<usize> = of_degree(2).collect();
    let threes: Vec<usize> = of_degree(3).collect();
    if of_degree(0).next().is_some() {
        return Ok(None);
    }
    let class = match (twos.as_slice(), threes.as_slice()) {
        ([], []) => Some(MaxClass::Ct2),
        ([u], []) if pendent_neighbors(*u) >= 1 => Some(MaxClass::Ct0),
        ([], [u]) if pendent_neighbors(*u) >= 2 => Some(MaxClass::Ct1),
        _ => None,
    };
    Ok(class.filter(|&c| MaxClass::for_order(n) == Some(c)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    /// `4n − 10`, the minimum over trees (attained by the path), `n ≥ 4`.
    MinTree,
    /// `(n − 1)(n − 2)`, the value of the star, `n ≥ 2`.
    Star,
    /// Maximum over chemical trees, `n ≥ 7`: `10(n − 4)` when `n ≡ 0, 1
    /// (mod 3)`, otherwise `2(5n − 19)`.
    MaxChemical,
}

pub fn closed_form(n: usize, which: ClosedForm) -> Result<u64> {
    let (min, value) = match which {
        ClosedForm::MinTree => (4, (4 * n).saturating_sub(10)),
        ClosedForm::Star => (2, n.saturating_sub(1) * n.saturating_sub(2)),
        ClosedForm::MaxChemical => (
            7,
            if n % 3 == 2 {
                2 * (5 * n).saturating_sub(19)
            } else {
                10 * n.saturating_sub(4)
            },
        ),
    };
    if n < min {
        return Err(Error::OrderOutOfRange(format!(
            "{which:?} closed form needs n >= {min}, got n = {n}"
        )));
    }
    Ok(value as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Objective {
    Zc1Star,
    M1,
    M2,
    Zc1,
    Zc2,
}

impl Objective {
    pub fn evaluate(self, g: &Graph) -> u64 {
        match self {
            Objective::Zc1Star => indices::zc1_star(g),
            Objective::M1 => indices::m1(g),
            Objective::M2 => indices::m2(g),
            Objective::Zc1 => indices::zc1(g),
            Objective::Zc2 => indices::zc2(g),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Objective::Zc1Star => "zc1star",
            Objective::M1 => "m1",
            Objective::M2 => "m2",
            Objective::Zc1 => "zc1",
            Objective::Zc2 => "zc2",
        }
    }
}

impl FromStr for Objective {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "zc1star" => Objective::Zc1Star,
            "m1" => Objective::M1,
            "m2" => Objective::M2,
            "zc1" => Objective::Zc1,
            "zc2" => Objective::Zc2,
            other => return Err(Error::UnknownName(other.to_string())),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Min,
    Max,
}

impl Direction {
    pub fn name(self) -> &'static str {
        match self {
            Direction::Min => "min",
            Direction::Max => "max",
        }
    }
}

impl FromStr for Direction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(Direction::Min),
            "max" => Ok(Direction::Max),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

/// Upper limit on the order of exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScaleGuard(Option<usize>);

impl Default for ScaleGuard {
    fn default() -> Self {
        ScaleGuard(Some(DEFAULT_SCALE_GUARD))
    }
}

impl ScaleGuard {
    pub fn new(limit: usize) -> Self {
        ScaleGuard(Some(limit))
    }

    /// No limit at all.
    pub fn disabled() -> Self {
        ScaleGuard(None)
    }

    pub fn limit(&self) -> Option<usize> {
        self.0
    }

    pub fn check(&self, n: usize) -> Result<()> {
        match self.0 {
            Some(limit) if n > limit => Err(Error::ScaleGuard { n, limit }),
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalResult {
    pub n: usize,
    pub max_degree: Option<usize>,
    pub objective: Objective,
    pub direction: Direction,
    pub value: u64,
    /// Every optimal tree, in enumeration order.
    pub witnesses: Vec<TreeCode>,
}

/// Exact optimum of `objective` over all trees of order `n` with maximum
/// degree at most `max_degree`.
pub fn brute_force_extremal(
    n: usize,
    max_degree: Option<usize>,
    objective: Objective,
    direction: Direction,
    guard: ScaleGuard,
) -> Result<ExtremalResult> {
    guard.check(n)?;
    let codes: Vec<TreeCode> = enumerate_trees(EnumSpec::new(n, max_degree)).collect();
    let values: Vec<u64> = codes
        .par_iter()
        .map(|c| objective.evaluate(&c.decode()))
        .collect();
    let best = match direction {
        Direction::Min => values.iter().min(),
        Direction::Max => values.iter().max(),
    }
    .copied()
    .ok_or(Error::NoCandidates)?;
    let witnesses = codes
        .into_iter()
        .zip(values)
        .filter(|&(_, v)| v == best)
        .map(|(c, _)| c)
        .collect();
    Ok(ExtremalResult {
        n,
        max_degree,
        objective,
        direction,
        value: best,
        witnesses,
    })
}
