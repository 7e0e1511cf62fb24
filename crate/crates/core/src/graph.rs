//! Finite simple undirected graphs with dense vertex ids `0..n`.

use std::collections::BTreeSet;
use std::ops::Deref;

use crate::{Error, Result};

/// Immutable simple undirected graph. Neighbor lists are sorted and free of
/// duplicates and self-loops.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

/// Per-vertex degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeVector(Vec<usize>);

/// Per-vertex connection numbers (count of vertices at distance exactly 2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionVector(Vec<usize>);

impl Deref for DegreeVector {
    type Target = [usize];
    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl Deref for ConnectionVector {
    type Target = [usize];
    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl DegreeVector {
    /// Minimum degree δ, or `None` for the null graph.
    pub fn min_degree(&self) -> Option<usize> {
        self.0.iter().copied().min()
    }

    pub fn max_degree(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Vertices of degree zero.
    pub fn isolated(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&v| self.0[v] == 0).collect()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl ConnectionVector {
    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

/// Builds a graph from unordered vertex pairs. Without `n`, the order is the
/// largest id plus one (zero for no edges).
pub fn build_graph(edges: &[(usize, usize)], n: Option<usize>) -> Result<Graph> {
    Graph::from_edges(edges, n)
}

impl Graph {
    pub fn from_edges(edges: &[(usize, usize)], n: Option<usize>) -> Result<Self> {
        let order = match n {
            Some(n) => n,
            None => edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0),
        };
        let mut seen = BTreeSet::new();
        let mut adjacency = vec![Vec::new(); order];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for id in [u, v] {
                if id >= order {
                    return Err(Error::VertexOutOfRange { id, n: order });
                }
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge(key.0, key.1));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            adjacency,
            edge_count: seen.len(),
        })
    }

    /// Graph on `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Path `0-1-…-(n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(&edges, Some(n)).expect("path edges are simple")
    }

    /// Star with center 0.
    pub fn star(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Self::from_edges(&edges, Some(n)).expect("star edges are simple")
    }

    /// Cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::OrderOutOfRange(format!(
                "cycle needs n >= 3, got {n}"
            )));
        }
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::from_edges(&edges, Some(n))
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_edges(&edges, Some(n)).expect("complete graph edges are simple")
    }

    /// Vertex count n.
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    /// Edge count m.
    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn degrees(&self) -> DegreeVector {
        DegreeVector(self.adjacency.iter().map(Vec::len).collect())
    }

    /// Connection numbers by neighbor-of-neighbor union.
    pub fn connection_numbers(&self) -> ConnectionVector {
        let n = self.order();
        let mut stamp = vec![usize::MAX; n];
        let mut tau = vec![0; n];
        for v in 0..n {
            stamp[v] = v;
            for &u in &self.adjacency[v] {
                stamp[u] = v;
            }
            let mut count = 0;
            for &u in &self.adjacency[v] {
                for &w in &self.adjacency[u] {
                    if stamp[w] != v {
                        stamp[w] = v;
                        count += 1;
                    }
                }
            }
            tau[v] = count;
        }
        ConnectionVector(tau)
    }

    /// False for the null graph.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.adjacency[v] {
                if !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    stack.push(u);
                }
            }
        }
        reached == n
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.size() + 1 == self.order() && self.is_connected()
    }

    /// True iff the graph has no 3-cycle and no 4-cycle.
    ///
    /// Equivalent to: from every vertex `v`, the 2-walks that do not return
    /// to `v` end at pairwise distinct non-neighbors of `v`.
    pub fn is_triangle_and_quadrangle_free(&self) -> bool {
        let n = self.order();
        let mut stamp = vec![usize::MAX; n];
        for v in 0..n {
            for &u in &self.adjacency[v] {
                stamp[u] = v;
            }
            for &u in &self.adjacency[v] {
                for &w in &self.adjacency[u] {
                    if w == v {
                        continue;
                    }
                    if stamp[w] == v {
                        return false;
                    }
                    stamp[w] = v;
                }
            }
        }
        true
    }

    /// `Sₙ` for some n ≥ 2: a tree with a vertex adjacent to all others.
    pub fn is_star(&self) -> bool {
        let n = self.order();
        n >= 2 && self.is_tree() && self.adjacency.iter().any(|l| l.len() == n - 1)
    }

    /// `Kₙ` for some n ≥ 1.
    pub fn is_complete(&self) -> bool {
        let n = self.order();
        n >= 1 && self.adjacency.iter().all(|l| l.len() == n - 1)
    }

    /// Returns the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation length");
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(&edges, Some(self.order())).expect("relabeling preserves simplicity")
    }
}

#[cfg(test)]
mod tests {
    use std::collections::VecDeque;

    use super::*;

    /// All-pairs BFS oracle for connection numbers.
    fn tau_by_bfs(g: &Graph) -> Vec<usize> {
        let n = g.order();
        (0..n)
            .map(|s| {
                let mut dist = vec![usize::MAX; n];
                dist[s] = 0;
                let mut queue = VecDeque::from([s]);
                while let Some(v) = queue.pop_front() {
                    for &u in g.neighbors(v) {
                        if dist[u] == usize::MAX {
                            dist[u] = dist[v] + 1;
                            queue.push_back(u);
                        }
                    }
                }
                dist.iter().filter(|&&d| d == 2).count()
            })
            .collect()
    }

    /// Brute-force short-cycle oracle: looks for 3- and 4-cycles directly.
    fn has_short_cycle(g: &Graph) -> bool {
        let n = g.order();
        let adj = |a: usize, b: usize| g.neighbors(a).contains(&b);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if a == b || b == c || a == c {
                        continue;
                    }
                    if adj(a, b) && adj(b, c) && adj(c, a) {
                        return true;
                    }
                    for d in 0..n {
                        if [a, b, c].contains(&d) {
                            continue;
                        }
                        if adj(a, b) && adj(b, c) && adj(c, d) && adj(d, a) {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    fn two_edges() -> Graph {
        Graph::from_edges(&[(0, 1), (2, 3)], None).unwrap()
    }

    #[test]
    fn build_examples() {
        let p4 = build_graph(&[(0, 1), (1, 2), (2, 3)], None).unwrap();
        assert_eq!((p4.order(), p4.size()), (4, 3));
        let single = build_graph(&[], Some(1)).unwrap();
        assert_eq!((single.order(), single.size()), (1, 0));
        assert_eq!(build_graph(&[], None).unwrap().order(), 0);
        assert_eq!(build_graph(&[(0, 0)], None), Err(Error::SelfLoop(0)));
        assert_eq!(
            build_graph(&[(0, 1), (1, 0)], None),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            build_graph(&[(0, 3)], Some(3)),
            Err(Error::VertexOutOfRange { id: 3, n: 3 })
        );
    }

    #[test]
    fn degree_examples() {
        assert_eq!(&*Graph::star(5).degrees(), &[4, 1, 1, 1, 1]);
        assert_eq!(&*Graph::path(4).degrees(), &[1, 2, 2, 1]);
        assert_eq!(&*Graph::cycle(5).unwrap().degrees(), &[2; 5]);
        let g = Graph::from_edges(&[(0, 1)], Some(3)).unwrap();
        assert_eq!(g.degrees().isolated(), vec![2]);
        assert_eq!(g.degrees().min_degree(), Some(0));
    }

    #[test]
    fn connection_number_examples() {
        assert_eq!(&*Graph::star(5).connection_numbers(), &[0, 3, 3, 3, 3]);
        assert_eq!(&*Graph::complete(4).connection_numbers(), &[0; 4]);
        let p5 = Graph::path(5);
        assert_eq!(tau_by_bfs(&p5), vec![1, 1, 2, 1, 1]);
        assert_eq!(&*p5.connection_numbers(), &[1, 1, 2, 1, 1]);
    }

    #[test]
    fn tree_predicate() {
        assert!(Graph::path(6).is_tree());
        assert!(!Graph::cycle(5).unwrap().is_tree());
        assert!(!two_edges().is_tree());
        assert!(Graph::empty(1).is_tree());
        assert!(!Graph::empty(0).is_tree());
    }

    #[test]
    fn short_cycle_predicate() {
        assert!(Graph::path(7).is_triangle_and_quadrangle_free());
        assert!(Graph::star(6).is_triangle_and_quadrangle_free());
        assert!(!Graph::cycle(4).unwrap().is_triangle_and_quadrangle_free());
        assert!(!Graph::cycle(3).unwrap().is_triangle_and_quadrangle_free());
        assert!(Graph::cycle(5).unwrap().is_triangle_and_quadrangle_free());
        assert!(!Graph::complete(4).is_triangle_and_quadrangle_free());
    }

    #[test]
    fn star_and_complete_predicates() {
        assert!(Graph::star(5).is_star());
        assert!(Graph::path(3).is_star());
        assert!(!Graph::path(4).is_star());
        assert!(Graph::complete(4).is_complete());
        assert!(!Graph::cycle(4).unwrap().is_complete());
        assert!(Graph::cycle(3).unwrap().is_complete());
    }

    mod props {
        use proptest::prelude::*;

        use super::*;

        fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
            (1..=max_n).prop_flat_map(|n| {
                let pairs: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .collect();
                let k = pairs.len();
                proptest::collection::vec(any::<bool>(), k).prop_map(move |mask| {
                    let edges: Vec<_> = pairs
                        .iter()
                        .zip(&mask)
                        .filter(|(_, &keep)| keep)
                        .map(|(&e, _)| e)
                        .collect();
                    Graph::from_edges(&edges, Some(n)).unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn tau_matches_bfs(g in arb_graph(9)) {
                prop_assert_eq!(g.connection_numbers().into_vec(), tau_by_bfs(&g));
            }

            #[test]
            fn tau_sum_counts_distance_two_pairs_twice(g in arb_graph(9)) {
                let tau = g.connection_numbers();
                let bfs = tau_by_bfs(&g);
                let total: usize = tau.iter().sum();
                prop_assert_eq!(total % 2, 0);
                prop_assert_eq!(total, bfs.iter().sum::<usize>());
            }

            #[test]
            fn tau_bounded_by_two_walks(g in arb_graph(9)) {
                let d = g.degrees();
                let tau = g.connection_numbers();
                let free = g.is_triangle_and_quadrangle_free();
                for v in 0..g.order() {
                    let walks: usize = g.neighbors(v).iter().map(|&u| d[u] - 1).sum();
                    prop_assert!(tau[v] <= walks);
                    prop_assert!(tau[v] + d[v] < g.order());
                    if free {
                        prop_assert_eq!(tau[v], walks);
                    }
                }
            }

            #[test]
            fn short_cycle_predicate_matches_oracle(g in arb_graph(7)) {
                prop_assert_eq!(g.is_triangle_and_quadrangle_free(), !has_short_cycle(&g));
            }

            #[test]
            fn degree_sum_is_twice_size(g in arb_graph(10)) {
                prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
                prop_assert_eq!(g.edges().count(), g.size());
            }
        }
    }
}
