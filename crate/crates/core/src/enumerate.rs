//! Enumeration of unlabeled trees under a maximum-degree bound.
//!
//! Trees are generated directly in canonical form. A unicentroidal tree on
//! `n` vertices is a root carrying a multiset of canonical rooted subtrees,
//! each with at most `(n - 1) / 2` vertices; a bicentroidal tree is an
//! unordered pair of rooted trees on `n / 2` vertices joined at their roots.
//! The degree bound is applied while the rooted pieces are built, so no
//! over-degree tree is ever materialized.
//!
//! [`prufer_oracle`] reaches the same set independently by canonicalizing
//! every labeled tree.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use crate::code::canonical_tree_code;
use crate::{Error, Graph, Result, TreeCode};

/// Largest order accepted by [`prufer_oracle`].
pub const ORACLE_MAX_ORDER: usize = 9;

/// Order and degree bound of an enumeration. `max_degree = None` means
/// unbounded; `Some(4)` gives chemical trees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumSpec {
    pub n: usize,
    pub max_degree: Option<usize>,
}

impl EnumSpec {
    pub fn new(n: usize, max_degree: Option<usize>) -> Self {
        EnumSpec { n, max_degree }
    }

    pub fn chemical(n: usize) -> Self {
        EnumSpec::new(n, Some(4))
    }

    fn cap(&self) -> usize {
        self.max_degree.unwrap_or(usize::MAX)
    }

    fn admits(&self, g: &Graph) -> bool {
        self.max_degree.is_none_or(|d| g.max_degree() <= d)
    }
}

/// Canonical rooted trees, every vertex having at most `child_cap` children.
struct RootedPool {
    /// All trees built so far, descending by level sequence.
    trees: Vec<Rooted>,
    built_up_to: usize,
    child_cap: usize,
}

struct Rooted {
    levels: Vec<u32>,
}

impl Rooted {
    fn size(&self) -> usize {
        self.levels.len()
    }
}

impl RootedPool {
    fn new(child_cap: usize) -> Self {
        RootedPool {
            trees: vec![Rooted { levels: vec![0] }],
            built_up_to: 1,
            child_cap,
        }
    }

    fn grow_to(&mut self, size: usize) {
        while self.built_up_to < size {
            let s = self.built_up_to + 1;
            let mut fresh = Vec::new();
            for_each_multiset(&self.trees, s - 1, s - 1, self.child_cap, &mut |children| {
                fresh.push(Rooted {
                    levels: attach(children.iter().map(|&i| &self.trees[i].levels[..])),
                });
            });
            self.trees.extend(fresh);
            self.trees.sort_unstable_by(|a, b| b.levels.cmp(&a.levels));
            self.built_up_to = s;
        }
    }
}

/// Calls `emit` with every non-increasing index list into `pool` whose
/// sizes sum to `total`, using at most `slots` entries, each of size at most
/// `max_piece`.
fn for_each_multiset(
    pool: &[Rooted],
    total: usize,
    max_piece: usize,
    slots: usize,
    emit: &mut dyn FnMut(&[usize]),
) {
    fn rec(
        pool: &[Rooted],
        start: usize,
        remaining: usize,
        max_piece: usize,
        slots: usize,
        current: &mut Vec<usize>,
        emit: &mut dyn FnMut(&[usize]),
    ) {
        if remaining == 0 {
            emit(current);
            return;
        }
        if slots == 0 {
            return;
        }
        for i in start..pool.len() {
            let s = pool[i].size();
            if s > remaining || s > max_piece {
                continue;
            }
            current.push(i);
            rec(pool, i, remaining - s, max_piece, slots - 1, current, emit);
            current.pop();
        }
    }
    rec(pool, 0, total, max_piece, slots, &mut Vec::new(), emit);
}

/// Root followed by the given child sequences (already in descending order),
/// each shifted one level down.
fn attach<'a>(children: impl Iterator<Item = &'a [u32]>) -> Vec<u32> {
    let mut seq = vec![0];
    for child in children {
        seq.extend(child.iter().map(|d| d + 1));
    }
    seq
}

/// Splits a rooted level sequence into its child blocks (depths relative to
/// each child).
fn child_blocks(levels: &[u32]) -> Vec<Vec<u32>> {
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    for &d in &levels[1..] {
        if d == 1 {
            blocks.push(Vec::new());
        }
        blocks
            .last_mut()
            .expect("depth 1 opens a block")
            .push(d - 1);
    }
    blocks
}

/// Roots the bicentroidal tree at `a`'s root, with `b` hanging below it.
fn join(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut blocks = child_blocks(a);
    blocks.push(b.to_vec());
    blocks.sort_unstable_by(|x, y| y.cmp(x));
    attach(blocks.iter().map(Vec::as_slice))
}

/// Every isomorphism class of trees matching `spec`, once each, as canonical
/// codes in descending lexicographic order.
pub fn enumerate_trees(spec: EnumSpec) -> impl Iterator<Item = TreeCode> {
    let mut codes = generate(spec);
    codes.sort_unstable_by(|a, b| b.cmp(a));
    codes
        .into_iter()
        .map(|levels| TreeCode::new(levels).expect("generated sequences are valid"))
}

fn generate(spec: EnumSpec) -> Vec<Vec<u32>> {
    let n = spec.n;
    let cap = spec.cap();
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![vec![0]];
    }
    if cap == 0 {
        return Vec::new();
    }
    let mut pool = RootedPool::new(cap - 1);
    let half = n / 2;
    pool.grow_to(half.max(1));

    let mut out = Vec::new();
    // Unicentroidal: every branch at the root is smaller than n / 2.
    let limit = (n - 1) / 2;
    for_each_multiset(&pool.trees, n - 1, limit, cap, &mut |children| {
        out.push(attach(children.iter().map(|&i| &pool.trees[i].levels[..])));
    });
    // Bicentroidal: two halves of exactly n / 2 vertices.
    if n.is_multiple_of(2) {
        let halves: Vec<&[u32]> = pool
            .trees
            .iter()
            .filter(|t| t.size() == half)
            .map(|t| &t.levels[..])
            .collect();
        for (i, a) in halves.iter().enumerate() {
            for b in &halves[i..] {
                out.push(join(a, b).max(join(b, a)));
            }
        }
    }
    out
}

/// Decodes a Prüfer sequence over `0..n` into its labeled tree.
pub(crate) fn prufer_decode(seq: &[usize], n: usize) -> Graph {
    debug_assert_eq!(seq.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).expect("a leaf exists");
    let mut leaf = ptr;
    for &x in seq {
        edges.push((leaf, x));
        degree[x] -= 1;
        if x < ptr && degree[x] == 1 {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    // Vertex n - 1 is never removed.
    edges.push((leaf, n - 1));
    Graph::from_edges(&edges, Some(n)).expect("Prüfer decoding yields a simple tree")
}

/// Canonical codes of all trees matching `spec`, found by decoding every one
/// of the `n^(n-2)` Prüfer sequences.
pub fn prufer_oracle(spec: EnumSpec) -> Result<BTreeSet<TreeCode>> {
    let n = spec.n;
    if n > ORACLE_MAX_ORDER {
        return Err(Error::ScaleGuard {
            n,
            limit: ORACLE_MAX_ORDER,
        });
    }
    let single = |g: Graph| -> BTreeSet<TreeCode> {
        if spec.admits(&g) {
            BTreeSet::from([canonical_tree_code(&g).expect("tree")])
        } else {
            BTreeSet::new()
        }
    };
    match n {
        0 => return Ok(BTreeSet::new()),
        1 => return Ok(single(Graph::empty(1))),
        2 => return Ok(single(Graph::path(2))),
        _ => {}
    }
    let len = n - 2;
    // A vertex appearing k times in the sequence has degree k + 1.
    let max_repeat = spec.cap().saturating_sub(1);
    let found: HashSet<TreeCode> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut local = HashSet::new();
            let mut seq = vec![0usize; len];
            seq[0] = first;
            let mut counts = vec![0usize; n];
            loop {
                counts.iter_mut().for_each(|c| *c = 0);
                for &x in &seq {
                    counts[x] += 1;
                }
                if counts.iter().all(|&c| c <= max_repeat) {
                    let g = prufer_decode(&seq, n);
                    local.insert(canonical_tree_code(&g).expect("tree"));
                }
                // Odometer over positions 1..len.
                let mut pos = len;
                loop {
                    pos -= 1;
                    if pos == 0 {
                        return local;
                    }
                    seq[pos] += 1;
                    if seq[pos] < n {
                        break;
                    }
                    seq[pos] = 0;
                }
            }
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(found.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize, d: Option<usize>) -> usize {
        enumerate_trees(EnumSpec::new(n, d)).count()
    }

    #[test]
    fn chemical_counts() {
        let counts: Vec<usize> = (1..=12).map(|n| count(n, Some(4))).collect();
        // Alkane carbon skeletons; the first values match the 2, 3, 5 of the
        // four-, five- and six-vertex chemical trees.
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 5, 9, 18, 35, 75, 159, 355]);
    }

    #[test]
    fn unbounded_counts() {
        let counts: Vec<usize> = (1..=12).map(|n| count(n, None)).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]);
        assert_eq!(count(6, Some(5)), 6);
    }

    #[test]
    fn degenerate_specs() {
        assert_eq!(count(0, Some(4)), 0);
        assert_eq!(count(1, Some(1)), 1);
        assert_eq!(count(2, Some(1)), 1);
        assert_eq!(count(3, Some(1)), 0);
        assert_eq!(count(5, Some(2)), 1);
    }

    #[test]
    fn stream_order_and_uniqueness() {
        let codes: Vec<TreeCode> = enumerate_trees(EnumSpec::chemical(11)).collect();
        for w in codes.windows(2) {
            assert!(w[0] > w[1], "strictly descending");
        }
        let six: Vec<String> = enumerate_trees(EnumSpec::chemical(6))
            .map(|c| c.to_string())
            .collect();
        assert_eq!(
            six,
            [
                "0 1 2 3 1 2",
                "0 1 2 3 1 1",
                "0 1 2 2 1 1",
                "0 1 2 1 2 1",
                "0 1 2 1 1 1"
            ]
        );
    }

    #[test]
    fn emitted_trees_are_canonical_and_bounded() {
        for n in 1..=11 {
            for d in [Some(2), Some(3), Some(4), None] {
                for code in enumerate_trees(EnumSpec::new(n, d)) {
                    let g = code.decode();
                    assert!(g.is_tree());
                    assert_eq!(g.order(), n);
                    if let Some(d) = d {
                        assert!(g.max_degree() <= d);
                    }
                    assert_eq!(canonical_tree_code(&g).unwrap(), code);
                }
            }
        }
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(prufer_oracle(EnumSpec::chemical(5)).unwrap().len(), 3);
        assert_eq!(prufer_oracle(EnumSpec::new(3, Some(2))).unwrap().len(), 1);
        assert_eq!(prufer_oracle(EnumSpec::chemical(8)).unwrap().len(), 18);
        assert!(matches!(
            prufer_oracle(EnumSpec::chemical(10)),
            Err(Error::ScaleGuard { .. })
        ));
    }

    #[test]
    fn generator_matches_oracle() {
        for n in 1..=8 {
            for d in [Some(2), Some(3), Some(4), None] {
                let spec = EnumSpec::new(n, d);
                let generated: BTreeSet<TreeCode> = enumerate_trees(spec).collect();
                assert_eq!(generated, prufer_oracle(spec).unwrap(), "n={n} d={d:?}");
            }
        }
    }

    #[test]
    fn prufer_decode_known() {
        // [3, 3, 3] is the star centered at 3.
        let g = prufer_decode(&[3, 3, 3], 5);
        assert_eq!(g.degree(3), 4);
        let g = prufer_decode(&[1, 2], 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
    }
}
