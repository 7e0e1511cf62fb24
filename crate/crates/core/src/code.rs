//! Canonical level-sequence codes for unlabeled trees.
//!
//! A level sequence lists vertex depths in preorder. The canonical code of a
//! tree roots it at its centroid and orders children so that the sequence is
//! lexicographically maximal; a bicentroidal tree takes the larger of its two
//! rootings. Two trees get equal codes iff they are isomorphic.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Graph, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeCode(Vec<u32>);

impl TreeCode {
    /// Validates a level sequence: non-empty, starts at 0, every later depth
    /// is at least 1 and at most one more than its predecessor.
    pub fn new(levels: Vec<u32>) -> Result<Self> {
        validate_levels(&levels)?;
        Ok(TreeCode(levels))
    }

    pub fn levels(&self) -> &[u32] {
        &self.0
    }

    /// Number of vertices of the encoded tree.
    pub fn order(&self) -> usize {
        self.0.len()
    }

    /// The encoded tree, vertices numbered in preorder.
    pub fn decode(&self) -> Graph {
        let mut ancestors: Vec<usize> = Vec::new();
        let mut edges = Vec::with_capacity(self.0.len().saturating_sub(1));
        for (v, &depth) in self.0.iter().enumerate() {
            ancestors.truncate(depth as usize);
            if let Some(&parent) = ancestors.last() {
                edges.push((parent, v));
            }
            ancestors.push(v);
        }
        Graph::from_edges(&edges, Some(self.0.len())).expect("level sequence decodes to a tree")
    }
}

fn validate_levels(levels: &[u32]) -> Result<()> {
    match levels.first() {
        None => return Err(Error::MalformedLevels("empty sequence".into())),
        Some(&0) => {}
        Some(&d) => {
            return Err(Error::MalformedLevels(format!(
                "first depth is {d}, expected 0"
            )))
        }
    }
    for (i, pair) in levels.windows(2).enumerate() {
        let (prev, cur) = (pair[0], pair[1]);
        if cur == 0 {
            return Err(Error::MalformedLevels(format!(
                "second root at position {}",
                i + 1
            )));
        }
        if cur > prev + 1 {
            return Err(Error::MalformedLevels(format!(
                "depth jumps from {prev} to {cur} at position {}",
                i + 1
            )));
        }
    }
    Ok(())
}

/// Decodes a raw level sequence.
pub fn decode(levels: &[u32]) -> Result<Graph> {
    Ok(TreeCode::new(levels.to_vec())?.decode())
}

impl fmt::Display for TreeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for TreeCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let levels = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|_| Error::MalformedLevels(format!("`{tok}` is not a depth")))
            })
            .collect::<Result<Vec<_>>>()?;
        TreeCode::new(levels)
    }
}

/// Canonical code of a tree; rejects anything that is not a tree.
pub fn canonical_tree_code(tree: &Graph) -> Result<TreeCode> {
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    let code = centroids(tree)
        .into_iter()
        .map(|c| rooted_code(tree, c))
        .max()
        .expect("a tree has at least one centroid");
    Ok(TreeCode(code))
}

impl TryFrom<&Graph> for TreeCode {
    type Error = Error;

    fn try_from(tree: &Graph) -> Result<Self> {
        canonical_tree_code(tree)
    }
}

/// Preorder from `root` together with the parent of each vertex
/// (the root is its own parent).
fn preorder(tree: &Graph, root: usize) -> (Vec<usize>, Vec<usize>) {
    let n = tree.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    parent[root] = root;
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        order.push(v);
        for &u in tree.neighbors(v) {
            if u != parent[v] {
                parent[u] = v;
                stack.push(u);
            }
        }
    }
    (order, parent)
}

fn centroids(tree: &Graph) -> Vec<usize> {
    let n = tree.order();
    let (order, parent) = preorder(tree, 0);
    let mut size = vec![1usize; n];
    let mut heaviest = vec![0usize; n];
    for &v in order.iter().rev() {
        if v != parent[v] {
            let p = parent[v];
            size[p] += size[v];
            heaviest[p] = heaviest[p].max(size[v]);
        }
    }
    let load: Vec<usize> = (0..n).map(|v| heaviest[v].max(n - size[v])).collect();
    let best = *load.iter().min().expect("non-empty tree");
    (0..n).filter(|&v| load[v] == best).collect()
}

/// Lexicographically maximal level sequence of `tree` rooted at `root`.
fn rooted_code(tree: &Graph, root: usize) -> Vec<u32> {
    let (order, parent) = preorder(tree, root);
    let mut codes: Vec<Vec<u32>> = vec![Vec::new(); tree.order()];
    for &v in order.iter().rev() {
        let mut children: Vec<Vec<u32>> = tree
            .neighbors(v)
            .iter()
            .filter(|&&u| u != parent[v])
            .map(|&u| std::mem::take(&mut codes[u]))
            .collect();
        children.sort_unstable_by(|a, b| b.cmp(a));
        let mut seq = Vec::with_capacity(1 + children.iter().map(Vec::len).sum::<usize>());
        seq.push(0);
        for child in &children {
            seq.extend(child.iter().map(|d| d + 1));
        }
        codes[v] = seq;
    }
    std::mem::take(&mut codes[root])
}

#[cfg(test)]
mod tests {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    fn code(g: &Graph) -> Vec<u32> {
        canonical_tree_code(g).unwrap().levels().to_vec()
    }

    /// Exhaustive isomorphism test over all vertex bijections.
    fn isomorphic(a: &Graph, b: &Graph) -> bool {
        fn search(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let v = map.len();
            if v == a.order() {
                return true;
            }
            for w in 0..b.order() {
                if used[w] || a.degree(v) != b.degree(w) {
                    continue;
                }
                let consistent = a
                    .neighbors(v)
                    .iter()
                    .filter(|&&u| u < v)
                    .all(|&u| b.neighbors(w).contains(&map[u]));
                let back = b.neighbors(w).iter().filter(|&&x| used[x]).count()
                    == a.neighbors(v).iter().filter(|&&u| u < v).count();
                if consistent && back {
                    map.push(w);
                    used[w] = true;
                    if search(a, b, map, used) {
                        return true;
                    }
                    used[w] = false;
                    map.pop();
                }
            }
            false
        }
        a.order() == b.order()
            && a.size() == b.size()
            && search(a, b, &mut Vec::new(), &mut vec![false; b.order()])
    }

    #[test]
    fn small_codes() {
        assert_eq!(code(&Graph::path(3)), vec![0, 1, 1]);
        assert_eq!(code(&Graph::star(5)), vec![0, 1, 1, 1, 1]);
        assert_eq!(code(&Graph::path(1)), vec![0]);
        assert_eq!(code(&Graph::path(2)), vec![0, 1]);
        // P4 is bicentroidal; both rootings give 0 1 2 1.
        assert_eq!(code(&Graph::path(4)), vec![0, 1, 2, 1]);
    }

    #[test]
    fn rejects_non_trees() {
        assert_eq!(
            canonical_tree_code(&Graph::cycle(5).unwrap()),
            Err(Error::NotATree)
        );
        let forest = Graph::from_edges(&[(0, 1), (2, 3)], None).unwrap();
        assert_eq!(canonical_tree_code(&forest), Err(Error::NotATree));
    }

    #[test]
    fn decode_examples() {
        assert!(isomorphic(
            &decode(&[0, 1, 1, 1, 1]).unwrap(),
            &Graph::star(5)
        ));
        assert!(isomorphic(&decode(&[0, 1, 2, 3]).unwrap(), &Graph::path(4)));
        // Spider with legs 1, 1, 2 centered at a degree-3 vertex.
        let spider = Graph::from_edges(&[(0, 1), (0, 2), (0, 3), (3, 4)], None).unwrap();
        let chair = decode(&[0, 1, 2, 2, 1]).unwrap();
        assert!(isomorphic(&chair, &spider));
        assert_eq!(code(&chair), code(&spider));
    }

    #[test]
    fn decode_rejects_malformed() {
        assert!(matches!(decode(&[]), Err(Error::MalformedLevels(_))));
        assert!(matches!(decode(&[0, 2]), Err(Error::MalformedLevels(_))));
        assert!(matches!(decode(&[1, 2]), Err(Error::MalformedLevels(_))));
        assert!(matches!(decode(&[0, 1, 0]), Err(Error::MalformedLevels(_))));
        assert!("0 1 x".parse::<TreeCode>().is_err());
    }

    #[test]
    fn text_round_trip() {
        let c: TreeCode = "0 1 2 2 1".parse().unwrap();
        assert_eq!(c.to_string(), "0 1 2 2 1");
    }

    #[test]
    fn relabeling_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let trees = [
            Graph::path(9),
            Graph::star(7),
            decode(&[0, 1, 2, 3, 2, 1, 2, 2, 1]).unwrap(),
            decode(&[0, 1, 2, 2, 2, 1, 2, 2, 2, 1]).unwrap(),
            decode(&[0, 1, 2, 3, 4, 1, 2, 3, 4]).unwrap(),
        ];
        for t in &trees {
            let expected = code(t);
            let mut perm: Vec<usize> = (0..t.order()).collect();
            for _ in 0..150 {
                perm.shuffle(&mut rng);
                assert_eq!(code(&t.relabel(&perm)), expected);
            }
        }
    }

    #[test]
    fn codes_separate_isomorphism_classes() {
        // Every labeled tree on up to 7 vertices via Prüfer sequences; the
        // code partition must agree with pairwise exhaustive isomorphism.
        for n in 3..=7usize {
            let mut reps: Vec<(Vec<u32>, Graph)> = Vec::new();
            let total = n.pow(n as u32 - 2);
            for idx in 0..total {
                let mut seq = Vec::with_capacity(n - 2);
                let mut x = idx;
                for _ in 0..n - 2 {
                    seq.push(x % n);
                    x /= n;
                }
                let g = crate::enumerate::prufer_decode(&seq, n);
                let c = code(&g);
                let same: Vec<_> = reps.iter().filter(|(rc, _)| *rc == c).collect();
                assert!(same.len() <= 1);
                if let Some((_, r)) = same.first() {
                    assert!(isomorphic(r, &g));
                } else {
                    for (_, r) in &reps {
                        assert!(!isomorphic(r, &g));
                    }
                    reps.push((c, g));
                }
            }
        }
    }

    #[test]
    fn decode_then_encode_is_isomorphic() {
        for levels in [
            vec![0, 1, 2, 3, 3, 2, 1, 1],
            vec![0, 1, 1, 2, 3, 4, 5],
            vec![0, 1, 2, 1, 2, 1, 2, 1, 2],
        ] {
            let g = decode(&levels).unwrap();
            let back = canonical_tree_code(&g).unwrap().decode();
            assert!(isomorphic(&g, &back));
        }
    }
}
