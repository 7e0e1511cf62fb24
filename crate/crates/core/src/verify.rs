//! Machine checks of the identities, bounds and extremal results for `ZC1*`.
//!
//! Each check produces a [`BoundCheck`]: both sides as exact rationals, the
//! relation that must hold between them and, where the underlying result
//! has an "equality iff" clause, whether equality is expected for this
//! input. [`run_suite`] runs everything over enumerated chemical trees, a
//! fixed panel of paths, stars, cycles and complete graphs, and optionally
//! seeded random connected graphs.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::code::canonical_tree_code;
use crate::enumerate::{enumerate_trees, EnumSpec};
use crate::extremal::{
    brute_force_extremal, classify_max_family, closed_form, ClosedForm, Direction, MaxClass,
    Objective, ScaleGuard,
};
use crate::indices::{self, m1, m2, partition_counts, zc1_star, zc1_star_edge};
use crate::{Error, Exact, Graph, Result, TreeCode};

/// Smallest `n_max` accepted by [`run_suite`].
pub const MIN_SUITE_ORDER: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = ">=")]
    Ge,
}

impl Relation {
    pub fn holds(self, lhs: &Exact, rhs: &Exact) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Lt => lhs < rhs,
            Relation::Le => lhs <= rhs,
            Relation::Gt => lhs > rhs,
            Relation::Ge => lhs >= rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Gt => ">",
            Relation::Ge => ">=",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// One evaluated inequality or identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: String,
    pub lhs: Exact,
    pub rhs: Exact,
    pub relation: Relation,
    /// `lhs relation rhs` is satisfied.
    pub holds: bool,
    /// Whether equality should occur, for results with an iff clause.
    pub equality_expected: Option<bool>,
    pub equality_observed: bool,
    /// Tree the check was evaluated on, when it is about one tree.
    pub witness: Option<TreeCode>,
    pub detail: Option<String>,
}

impl BoundCheck {
    pub fn new(
        name: impl Into<String>,
        lhs: Exact,
        rhs: Exact,
        relation: Relation,
        equality_expected: Option<bool>,
    ) -> Self {
        BoundCheck {
            name: name.into(),
            holds: relation.holds(&lhs, &rhs),
            equality_observed: lhs == rhs,
            lhs,
            rhs,
            relation,
            equality_expected,
            witness: None,
            detail: None,
        }
    }

    fn ints(name: impl Into<String>, lhs: u64, rhs: u64, relation: Relation) -> Self {
        BoundCheck::new(name, int(lhs), int(rhs), relation, None)
    }

    fn with_witness(mut self, witness: &TreeCode) -> Self {
        self.witness = Some(witness.clone());
        self
    }

    fn with_detail(mut self, detail: String) -> Self {
        self.detail = Some(detail);
        self
    }

    /// The relation holds and, if an equality condition applies, equality
    /// occurs exactly when expected.
    pub fn passed(&self) -> bool {
        self.holds
            && self
                .equality_expected
                .is_none_or(|e| e == self.equality_observed)
    }
}

fn int(x: u64) -> Exact {
    Exact::from_integer(x as i64)
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

fn require_bound_domain(g: &Graph) -> Result<()> {
    require_connected(g)?;
    if g.order() < 2 {
        return Err(Error::OrderOutOfRange("bound needs n >= 2".into()));
    }
    Ok(())
}

/// `ZC1*` in vertex form equals its edge form.
pub fn check_edge_form(g: &Graph) -> BoundCheck {
    BoundCheck::ints("edge-form", zc1_star(g), zc1_star_edge(g), Relation::Eq)
}

/// `ZC1* = 2·M2 − M1` on triangle- and quadrangle-free graphs, and
/// `ZC1* < 2·M2 − M1` otherwise.
pub fn check_identity(g: &Graph) -> Result<BoundCheck> {
    require_connected(g)?;
    let free = g.is_triangle_and_quadrangle_free();
    let lhs = int(zc1_star(g));
    let rhs = int(2 * m2(g)) - int(m1(g));
    let relation = if free { Relation::Eq } else { Relation::Lt };
    Ok(BoundCheck::new("identity", lhs, rhs, relation, Some(free)))
}

/// `M2 ≥ ½ Σ d(v)(d(v) + τ(v))`, with equality iff the graph has no
/// triangle and no quadrangle.
pub fn check_yamaguchi(g: &Graph) -> Result<BoundCheck> {
    require_connected(g)?;
    Ok(BoundCheck::new(
        "yamaguchi",
        int(m2(g)),
        indices::yamaguchi_rhs(g),
        Relation::Ge,
        Some(g.is_triangle_and_quadrangle_free()),
    ))
}

/// `M2 ≤ 2m² − (n−1)mδ + ½(δ−1)M1`, with equality claimed iff the graph is
/// a star or complete.
pub fn check_m2_upper(g: &Graph) -> Result<BoundCheck> {
    require_bound_domain(g)?;
    Ok(BoundCheck::new(
        "m2-upper",
        int(m2(g)),
        indices::m2_upper_rhs(g),
        Relation::Le,
        Some(g.is_star() || g.is_complete()),
    ))
}

/// `ZC1* ≤ 4m² − 2(n−1)mδ + (δ−2)M1` for triangle- and quadrangle-free
/// graphs, with equality claimed iff the graph is a star.
pub fn check_zc1star_upper(g: &Graph) -> Result<BoundCheck> {
    require_bound_domain(g)?;
    if !g.is_triangle_and_quadrangle_free() {
        return Err(Error::NotTriangleQuadrangleFree);
    }
    Ok(BoundCheck::new(
        "zc1star-upper",
        int(zc1_star(g)),
        indices::zc1_star_upper_rhs(g),
        Relation::Le,
        Some(g.is_star()),
    ))
}

fn require_chemical_tree(t: &Graph) -> Result<()> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let max = t.max_degree();
    if max > 4 {
        return Err(Error::DegreeTooLarge {
            found: max,
            limit: 4,
        });
    }
    Ok(())
}

/// The linear system relating `n_i` and `x_{a,b}` on a chemical tree, one
/// check per equation.
pub fn check_degree_system(t: &Graph) -> Result<Vec<BoundCheck>> {
    require_chemical_tree(t)?;
    let n = t.order() as u64;
    let p = partition_counts(t);
    let ni = |i: usize| p.n(i) as u64;
    let mut out = vec![
        BoundCheck::ints(
            "degree-system.vertex-count",
            (0..=4).map(ni).sum(),
            n,
            Relation::Eq,
        ),
        BoundCheck::ints(
            "degree-system.degree-sum",
            (1..=4).map(|i| i as u64 * ni(i)).sum(),
            2 * (n - 1),
            Relation::Eq,
        ),
    ];
    for j in 1..=4usize {
        let incident: u64 = (1..=4)
            .filter(|&i| i != j)
            .map(|i| p.x(j, i) as u64)
            .sum::<u64>()
            + 2 * p.x(j, j) as u64;
        out.push(BoundCheck::ints(
            format!("degree-system.incidence-{j}"),
            incident,
            j as u64 * ni(j),
            Relation::Eq,
        ));
    }
    // n = 1 has no edges and degree 0; the eliminated form needs n >= 2.
    if n >= 2 {
        out.push(BoundCheck::ints(
            "degree-system.eliminated",
            (2..=4).map(|i| (i as u64 - 1) * ni(i)).sum(),
            n - 2,
            Relation::Eq,
        ));
    }
    Ok(out)
}

/// Structural properties of every maximum-`ZC1*` chemical tree of order `n`,
/// one check per (property, maximizer). The degree-2 properties apply from
/// `n = 5`, the rest from `n = 7`.
pub fn check_structure_lemmas(n: usize, guard: ScaleGuard) -> Result<Vec<BoundCheck>> {
    if n < 5 {
        return Err(Error::OrderOutOfRange(format!(
            "structure checks need n >= 5, got n = {n}"
        )));
    }
    let best = brute_force_extremal(n, Some(4), Objective::Zc1Star, Direction::Max, guard)?;
    let mut out = Vec::new();
    for code in &best.witnesses {
        let t = code.decode();
        let d = t.degrees();
        let pendent = |v: usize| t.neighbors(v).iter().filter(|&&u| d[u] == 1).count();
        let twos: Vec<usize> = (0..n).filter(|&v| d[v] == 2).collect();
        let threes: Vec<usize> = (0..n).filter(|&v| d[v] == 3).collect();
        let count = |xs: &[usize]| xs.len() as u64;
        let mut checks = vec![
            BoundCheck::ints("lemma.deg2-at-most-one", count(&twos), 1, Relation::Le),
            BoundCheck::ints(
                "lemma.deg2-has-pendent-neighbor",
                twos.iter().filter(|&&v| pendent(v) == 0).count() as u64,
                0,
                Relation::Eq,
            ),
        ];
        if n >= 7 {
            checks.extend([
                BoundCheck::ints("lemma.deg3-at-most-one", count(&threes), 1, Relation::Le),
                BoundCheck::ints(
                    "lemma.no-deg2-with-deg3",
                    count(&twos) * count(&threes),
                    0,
                    Relation::Eq,
                ),
                BoundCheck::ints(
                    "lemma.deg3-has-two-pendent-neighbors",
                    threes.iter().filter(|&&v| pendent(v) < 2).count() as u64,
                    0,
                    Relation::Eq,
                ),
            ]);
        }
        out.extend(checks.into_iter().map(|c| c.with_witness(code)));
    }
    Ok(out)
}

fn join_codes<'a>(codes: impl IntoIterator<Item = &'a TreeCode>) -> String {
    codes
        .into_iter()
        .map(|c| format!("[{c}]"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn symmetric_difference(a: &[TreeCode], b: &[TreeCode]) -> usize {
    let a: HashSet<&TreeCode> = a.iter().collect();
    let b: HashSet<&TreeCode> = b.iter().collect();
    a.symmetric_difference(&b).count()
}

/// Extremal results at order `n`: the path is the unique minimizer with
/// value `4n − 10` (over chemical trees, and over all trees for `n ≤ 9`);
/// for `n ≥ 7` the maximizers are exactly the classified trees and attain
/// the closed-form maximum.
pub fn check_extremal_theorems(n: usize, guard: ScaleGuard) -> Result<Vec<BoundCheck>> {
    if n < 5 {
        return Err(Error::OrderOutOfRange(format!(
            "extremal checks need n >= 5, got n = {n}"
        )));
    }
    guard.check(n)?;
    let path = [canonical_tree_code(&Graph::path(n))?];
    let mut out = Vec::new();

    let mut minimum = |suffix: &str, max_degree: Option<usize>| -> Result<()> {
        let r = brute_force_extremal(n, max_degree, Objective::Zc1Star, Direction::Min, guard)?;
        out.push(BoundCheck::ints(
            format!("extremal.min-value{suffix}"),
            r.value,
            closed_form(n, ClosedForm::MinTree)?,
            Relation::Eq,
        ));
        out.push(
            BoundCheck::ints(
                format!("extremal.min-witnesses-equal-path{suffix}"),
                symmetric_difference(&r.witnesses, &path) as u64,
                0,
                Relation::Eq,
            )
            .with_detail(format!("witnesses {}", join_codes(&r.witnesses))),
        );
        Ok(())
    };
    minimum("", Some(4))?;
    if n <= crate::enumerate::ORACLE_MAX_ORDER {
        minimum("-all-trees", None)?;
    }
    out.push(BoundCheck::ints(
        "extremal.path-below-star",
        closed_form(n, ClosedForm::MinTree)?,
        closed_form(n, ClosedForm::Star)?,
        Relation::Lt,
    ));

    if n >= 7 {
        let r = brute_force_extremal(n, Some(4), Objective::Zc1Star, Direction::Max, guard)?;
        out.push(BoundCheck::ints(
            "extremal.max-value",
            r.value,
            closed_form(n, ClosedForm::MaxChemical)?,
            Relation::Eq,
        ));
        let classified: Vec<TreeCode> = enumerate_trees(EnumSpec::chemical(n))
            .filter(|c| matches!(classify_max_family(&c.decode()), Ok(Some(_))))
            .collect();
        out.push(
            BoundCheck::ints(
                "extremal.max-witnesses-equal-class",
                symmetric_difference(&r.witnesses, &classified) as u64,
                0,
                Relation::Eq,
            )
            .with_detail(format!(
                "witnesses {}; classified {}",
                join_codes(&r.witnesses),
                join_codes(&classified)
            )),
        );
        let expected = MaxClass::for_order(n);
        let mismatched = r
            .witnesses
            .iter()
            .filter(|c| classify_max_family(&c.decode()).ok().flatten() != expected)
            .count();
        out.push(BoundCheck::ints(
            "extremal.max-witness-class",
            mismatched as u64,
            0,
            Relation::Eq,
        ));
    }
    Ok(out)
}

/// `ZC1*` values of all chemical trees on 4, 5 and 6 vertices.
pub fn table1_values(n: usize) -> Option<&'static [u64]> {
    match n {
        4 => Some(&[6, 6]),
        5 => Some(&[10, 12, 12]),
        6 => Some(&[14, 16, 18, 20, 20]),
        _ => None,
    }
}

/// Compares the multiset of `ZC1*` over enumerated chemical trees of order
/// `n ∈ {4, 5, 6}` with the tabulated values.
pub fn check_table1(n: usize) -> Result<BoundCheck> {
    let expected = table1_values(n)
        .ok_or_else(|| Error::OrderOutOfRange(format!("table covers n = 4..=6, got {n}")))?;
    let mut observed: Vec<u64> = enumerate_trees(EnumSpec::chemical(n))
        .map(|c| zc1_star(&c.decode()))
        .collect();
    observed.sort_unstable();
    let mut missing = expected.to_vec();
    let mut extra = 0u64;
    for v in &observed {
        match missing.iter().position(|e| e == v) {
            Some(i) => {
                missing.swap_remove(i);
            }
            None => extra += 1,
        }
    }
    let fmt = |xs: &[u64]| xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
    Ok(
        BoundCheck::ints("table1", extra + missing.len() as u64, 0, Relation::Eq).with_detail(
            format!(
                "observed {{{}}} expected {{{}}}",
                fmt(&observed),
                fmt(expected)
            ),
        ),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckFamily {
    EdgeForm,
    Identity,
    Yamaguchi,
    DegreeSystem,
    M2Upper,
    Zc1StarUpper,
    Lemmas,
    Extremal,
    Table1,
}

impl CheckFamily {
    pub const ALL: [CheckFamily; 9] = [
        CheckFamily::EdgeForm,
        CheckFamily::Identity,
        CheckFamily::Yamaguchi,
        CheckFamily::DegreeSystem,
        CheckFamily::M2Upper,
        CheckFamily::Zc1StarUpper,
        CheckFamily::Lemmas,
        CheckFamily::Extremal,
        CheckFamily::Table1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckFamily::EdgeForm => "edge-form",
            CheckFamily::Identity => "identity",
            CheckFamily::Yamaguchi => "yamaguchi",
            CheckFamily::DegreeSystem => "degree-system",
            CheckFamily::M2Upper => "m2-upper",
            CheckFamily::Zc1StarUpper => "zc1star-upper",
            CheckFamily::Lemmas => "lemmas",
            CheckFamily::Extremal => "extremal",
            CheckFamily::Table1 => "table1",
        }
    }
}

impl FromStr for CheckFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckFamily::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub n_max: usize,
    pub checks: BTreeSet<CheckFamily>,
    /// Seed for random connected graphs; `None` disables them.
    pub random_seed: Option<u64>,
    pub random_count: usize,
    pub guard: ScaleGuard,
}

impl SuiteConfig {
    /// All check families, no random graphs, default scale guard.
    pub fn new(n_max: usize) -> Self {
        SuiteConfig {
            n_max,
            checks: CheckFamily::ALL.into_iter().collect(),
            random_seed: None,
            random_count: 200,
            guard: ScaleGuard::default(),
        }
    }

    pub fn with_checks(mut self, checks: impl IntoIterator<Item = CheckFamily>) -> Self {
        self.checks = checks.into_iter().collect();
        self
    }

    pub fn with_random(mut self, seed: u64) -> Self {
        self.random_seed = Some(seed);
        self
    }

    fn wants(&self, family: CheckFamily) -> bool {
        self.checks.contains(&family)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub order: usize,
    pub check: String,
    pub status: Status,
    pub relation: Option<Relation>,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    /// Level sequence, panel graph name, or edge list of the input.
    pub subject: String,
    /// Extra context, or why a check was skipped.
    pub reason: Option<String>,
}

impl CheckRecord {
    fn from_check(order: usize, subject: &str, check: BoundCheck) -> Self {
        let status = if check.passed() {
            Status::Pass
        } else {
            Status::Fail
        };
        let mut reason = check.detail;
        if status == Status::Fail && check.holds {
            reason = Some(format!(
                "equality expected={} observed={}",
                check.equality_expected.unwrap_or(false),
                check.equality_observed
            ));
        }
        CheckRecord {
            order,
            subject: check
                .witness
                .map_or_else(|| subject.to_string(), |w| w.to_string()),
            check: check.name,
            status,
            relation: Some(check.relation),
            lhs: Some(check.lhs.to_string()),
            rhs: Some(check.rhs.to_string()),
            reason,
        }
    }

    fn skipped(order: usize, check: &str, subject: &str, err: &Error) -> Self {
        CheckRecord {
            order,
            check: check.to_string(),
            status: Status::Skip,
            relation: None,
            lhs: None,
            rhs: None,
            subject: subject.to_string(),
            reason: Some(err.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    /// Sorted by (order, check, subject).
    pub records: Vec<CheckRecord>,
}

impl VerificationReport {
    /// Failed records.
    pub fn counterexamples(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn passed(&self) -> bool {
        self.counterexamples().next().is_none()
    }

    pub fn totals(&self) -> Totals {
        let mut t = Totals::default();
        for r in &self.records {
            match r.status {
                Status::Pass => t.pass += 1,
                Status::Fail => t.fail += 1,
                Status::Skip => t.skip += 1,
            }
        }
        t
    }
}

fn push_single(
    out: &mut Vec<CheckRecord>,
    order: usize,
    subject: &str,
    name: &str,
    result: Result<BoundCheck>,
) {
    out.push(match result {
        Ok(check) => CheckRecord::from_check(order, subject, check),
        Err(e) => CheckRecord::skipped(order, name, subject, &e),
    });
}

fn push_many(
    out: &mut Vec<CheckRecord>,
    order: usize,
    subject: &str,
    name: &str,
    result: Result<Vec<BoundCheck>>,
) {
    match result {
        Ok(checks) => out.extend(
            checks
                .into_iter()
                .map(|c| CheckRecord::from_check(order, subject, c)),
        ),
        Err(e) => out.push(CheckRecord::skipped(order, name, subject, &e)),
    }
}

/// Checks that apply to any connected graph.
fn graph_checks(config: &SuiteConfig, g: &Graph, subject: &str) -> Vec<CheckRecord> {
    let n = g.order();
    let mut out = Vec::new();
    if config.wants(CheckFamily::EdgeForm) {
        out.push(CheckRecord::from_check(n, subject, check_edge_form(g)));
    }
    if config.wants(CheckFamily::Identity) {
        push_single(&mut out, n, subject, "identity", check_identity(g));
    }
    if config.wants(CheckFamily::Yamaguchi) {
        push_single(&mut out, n, subject, "yamaguchi", check_yamaguchi(g));
    }
    if config.wants(CheckFamily::M2Upper) {
        push_single(&mut out, n, subject, "m2-upper", check_m2_upper(g));
    }
    if config.wants(CheckFamily::Zc1StarUpper) {
        push_single(
            &mut out,
            n,
            subject,
            "zc1star-upper",
            check_zc1star_upper(g),
        );
    }
    out
}

/// Paths, stars, cycles and complete graphs on 3 to 8 vertices.
pub fn panel() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 3..=8 {
        out.push((format!("P{n}"), Graph::path(n)));
        out.push((format!("S{n}"), Graph::star(n)));
        out.push((format!("C{n}"), Graph::cycle(n).expect("n >= 3")));
        out.push((format!("K{n}"), Graph::complete(n)));
    }
    out
}

/// Connected graphs on 3..=10 vertices with edge probability ½, drawn by
/// rejection. Deterministic for a given seed.
pub fn random_connected_graphs(seed: u64, count: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(3..=10);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let g = Graph::from_edges(&edges, Some(n)).expect("simple by construction");
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

fn edge_subject(index: usize, g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    format!(
        "random-{index:03} n={} edges={}",
        g.order(),
        edges.join(",")
    )
}

/// Runs every selected check family up to order `n_max`.
pub fn run_suite(config: &SuiteConfig) -> Result<VerificationReport> {
    let n_max = config.n_max;
    if n_max < MIN_SUITE_ORDER {
        return Err(Error::OrderOutOfRange(format!(
            "suite needs n_max >= {MIN_SUITE_ORDER}, got {n_max}"
        )));
    }
    config.guard.check(n_max)?;

    let trees: Vec<TreeCode> = (1..=n_max)
        .flat_map(|n| enumerate_trees(EnumSpec::chemical(n)))
        .collect();
    let mut records: Vec<CheckRecord> = trees
        .par_iter()
        .flat_map_iter(|code| {
            let g = code.decode();
            let subject = code.to_string();
            let mut out = graph_checks(config, &g, &subject);
            if config.wants(CheckFamily::DegreeSystem) {
                push_many(
                    &mut out,
                    g.order(),
                    &subject,
                    "degree-system",
                    check_degree_system(&g),
                );
            }
            out
        })
        .collect();

    for (name, g) in panel() {
        records.extend(graph_checks(config, &g, &name));
    }

    if let Some(seed) = config.random_seed {
        let graphs = random_connected_graphs(seed, config.random_count);
        records.par_extend(
            graphs
                .par_iter()
                .enumerate()
                .flat_map_iter(|(i, g)| graph_checks(config, g, &edge_subject(i, g))),
        );
    }

    let per_order: Vec<Vec<CheckRecord>> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut out = Vec::new();
            let subject = format!("chemical-trees n={n}");
            if config.wants(CheckFamily::Table1) && table1_values(n).is_some() {
                push_single(&mut out, n, &subject, "table1", check_table1(n));
            }
            if config.wants(CheckFamily::Lemmas) && n >= 5 {
                push_many(
                    &mut out,
                    n,
                    &subject,
                    "lemmas",
                    check_structure_lemmas(n, config.guard),
                );
            }
            if config.wants(CheckFamily::Extremal) && n >= 5 {
                push_many(
                    &mut out,
                    n,
                    &subject,
                    "extremal",
                    check_extremal_theorems(n, config.guard),
                );
            }
            out
        })
        .collect();
    records.extend(per_order.into_iter().flatten());

    records.sort_by(|a, b| {
        (a.order, &a.check, &a.subject, a.status, &a.lhs, &a.rhs)
            .cmp(&(b.order, &b.check, &b.subject, b.status, &b.lhs, &b.rhs))
    });
    Ok(VerificationReport { records })
}
