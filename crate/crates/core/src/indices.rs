//! Degree- and connection-number-based topological indices.
//!
//! Vertex forms and edge forms are computed independently so that each can
//! serve as a check on the other.

use std::collections::BTreeMap;
use std::fmt;

use crate::{scalar, ConnectionVector, DegreeVector, Error, Graph, Result, Scalar};

/// First Zagreb index, `Σ d(v)²`.
pub fn m1(g: &Graph) -> u64 {
    g.degrees().iter().map(|&d| sq(d)).sum()
}

/// First Zagreb index in edge form, `Σ_{uv} (d(u) + d(v))`.
pub fn m1_edge_form(g: &Graph) -> u64 {
    let d = g.degrees();
    g.edges().map(|(u, v)| (d[u] + d[v]) as u64).sum()
}

/// Second Zagreb index, `Σ_{uv} d(u)·d(v)`.
pub fn m2(g: &Graph) -> u64 {
    let d = g.degrees();
    m2_with(g, &d)
}

/// Modified first Zagreb connection index, `Σ d(v)·τ(v)`.
pub fn zc1_star(g: &Graph) -> u64 {
    zc1_star_with(&g.degrees(), &g.connection_numbers())
}

/// `ZC1*` in edge form, `Σ_{uv} (τ(u) + τ(v))`.
pub fn zc1_star_edge(g: &Graph) -> u64 {
    let tau = g.connection_numbers();
    g.edges().map(|(u, v)| (tau[u] + tau[v]) as u64).sum()
}

/// First Zagreb connection index, `Σ τ(v)²`.
pub fn zc1(g: &Graph) -> u64 {
    g.connection_numbers().iter().map(|&t| sq(t)).sum()
}

/// Second Zagreb connection index, `Σ_{uv} τ(u)·τ(v)`.
pub fn zc2(g: &Graph) -> u64 {
    zc2_with(g, &g.connection_numbers())
}

fn sq(x: usize) -> u64 {
    (x as u64) * (x as u64)
}

fn m2_with(g: &Graph, d: &DegreeVector) -> u64 {
    g.edges().map(|(u, v)| (d[u] * d[v]) as u64).sum()
}

fn zc1_star_with(d: &DegreeVector, tau: &ConnectionVector) -> u64 {
    d.iter()
        .zip(tau.iter())
        .map(|(&d, &t)| (d * t) as u64)
        .sum()
}

fn zc2_with(g: &Graph, tau: &ConnectionVector) -> u64 {
    g.edges().map(|(u, v)| (tau[u] * tau[v]) as u64).sum()
}

/// Edge weight `φ(a, b)` over the connection numbers of an edge's ends.
pub enum PhiFunction<S> {
    /// `a + b`
    Sum,
    /// `a · b`
    Product,
    Custom(Box<dyn Fn(usize, usize) -> S + Send + Sync>),
}

impl<S> fmt::Debug for PhiFunction<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhiFunction::Sum => f.write_str("Sum"),
            PhiFunction::Product => f.write_str("Product"),
            PhiFunction::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

impl<S: Scalar> PhiFunction<S> {
    pub fn custom(f: impl Fn(usize, usize) -> S + Send + Sync + 'static) -> Self {
        PhiFunction::Custom(Box::new(f))
    }

    pub fn eval(&self, a: usize, b: usize) -> S {
        match self {
            PhiFunction::Sum => scalar((a + b) as u64),
            PhiFunction::Product => scalar((a * b) as u64),
            PhiFunction::Custom(f) => f(a, b),
        }
    }
}

/// Bond-incident connection-number index `Σ_{a≤b} y(a,b)·φ(a,b)`, where
/// `y(a,b)` counts edges whose ends have connection numbers `a` and `b`.
///
/// Rejects `φ` if it is asymmetric or negative on a pair that occurs.
pub fn bic<S: Scalar>(g: &Graph, phi: &PhiFunction<S>) -> Result<S> {
    let counts = connection_edge_counts(g, &g.connection_numbers());
    let limit = g.order().saturating_sub(2);
    let mut total = S::zero();
    for (&(a, b), &y) in &counts {
        if b > limit {
            return Err(Error::InvalidPhi(format!(
                "connection number {b} outside 0..={limit}"
            )));
        }
        let w = phi.eval(a, b);
        if w != phi.eval(b, a) {
            return Err(Error::InvalidPhi(format!("phi({a},{b}) != phi({b},{a})")));
        }
        if w < S::zero() {
            return Err(Error::InvalidPhi(format!("phi({a},{b}) is negative")));
        }
        total = total + scalar::<S>(y as u64) * w;
    }
    Ok(total)
}

/// Vertex counts by degree and edge counts by degree / connection-number
/// pairs. Pair keys are stored with `a <= b`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartitionCounts {
    pub degree_counts: BTreeMap<usize, usize>,
    pub degree_edge_counts: BTreeMap<(usize, usize), usize>,
    pub connection_edge_counts: BTreeMap<(usize, usize), usize>,
}

impl PartitionCounts {
    /// `n_a`, zero when absent.
    pub fn n(&self, degree: usize) -> usize {
        self.degree_counts.get(&degree).copied().unwrap_or(0)
    }

    /// `x_{a,b}`, in either argument order.
    pub fn x(&self, a: usize, b: usize) -> usize {
        let key = (a.min(b), a.max(b));
        self.degree_edge_counts.get(&key).copied().unwrap_or(0)
    }

    /// `y_{a,b}`, in either argument order.
    pub fn y(&self, a: usize, b: usize) -> usize {
        let key = (a.min(b), a.max(b));
        self.connection_edge_counts.get(&key).copied().unwrap_or(0)
    }
}

fn pair_counts(g: &Graph, label: &[usize]) -> BTreeMap<(usize, usize), usize> {
    let mut out = BTreeMap::new();
    for (u, v) in g.edges() {
        let (a, b) = (label[u], label[v]);
        *out.entry((a.min(b), a.max(b))).or_insert(0) += 1;
    }
    out
}

fn connection_edge_counts(g: &Graph, tau: &ConnectionVector) -> BTreeMap<(usize, usize), usize> {
    pair_counts(g, tau)
}

pub fn partition_counts(g: &Graph) -> PartitionCounts {
    partitions_with(g, &g.degrees(), &g.connection_numbers())
}

fn partitions_with(g: &Graph, d: &DegreeVector, tau: &ConnectionVector) -> PartitionCounts {
    let mut degree_counts = BTreeMap::new();
    for &k in d.iter() {
        *degree_counts.entry(k).or_insert(0) += 1;
    }
    PartitionCounts {
        degree_counts,
        degree_edge_counts: pair_counts(g, d),
        connection_edge_counts: connection_edge_counts(g, tau),
    }
}

/// Every index of one graph together with its partition counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexReport {
    pub n: usize,
    pub m: usize,
    pub degrees: Vec<usize>,
    pub connection_numbers: Vec<usize>,
    pub m1: u64,
    pub m2: u64,
    pub zc1_star: u64,
    pub zc1: u64,
    pub zc2: u64,
    pub partitions: PartitionCounts,
    pub triangle_quadrangle_free: bool,
}

pub fn index_report(g: &Graph) -> IndexReport {
    let d = g.degrees();
    let tau = g.connection_numbers();
    let report = IndexReport {
        n: g.order(),
        m: g.size(),
        m1: d.iter().map(|&x| sq(x)).sum(),
        m2: m2_with(g, &d),
        zc1_star: zc1_star_with(&d, &tau),
        zc1: tau.iter().map(|&t| sq(t)).sum(),
        zc2: zc2_with(g, &tau),
        partitions: partitions_with(g, &d, &tau),
        triangle_quadrangle_free: g.is_triangle_and_quadrangle_free(),
        degrees: d.into_vec(),
        connection_numbers: tau.into_vec(),
    };
    debug_assert_eq!(report.zc1_star, zc1_star_edge(g));
    debug_assert_eq!(report.m1, m1_edge_form(g));
    report
}

/// Right-hand side of `M2 ≥ ½ Σ d(v)(d(v) + τ(v))`, valid for connected graphs.
pub fn yamaguchi_rhs<S: Scalar>(g: &Graph) -> S {
    let d = g.degrees();
    let tau = g.connection_numbers();
    let twice: u64 = d
        .iter()
        .zip(tau.iter())
        .map(|(&d, &t)| (d * (d + t)) as u64)
        .sum();
    scalar::<S>(twice) / scalar::<S>(2)
}

/// Right-hand side of `M2 ≤ 2m² − (n−1)mδ + ½(δ−1)M1`.
pub fn m2_upper_rhs<S: Scalar>(g: &Graph) -> S {
    let (n, m, delta, m1) = bound_inputs::<S>(g);
    let one = S::one();
    let two = scalar::<S>(2);
    two * m * m - (n - one) * m * delta + (delta - one) * m1 / two
}

/// Right-hand side of `ZC1* ≤ 4m² − 2(n−1)mδ + (δ−2)M1`.
pub fn zc1_star_upper_rhs<S: Scalar>(g: &Graph) -> S {
    let (n, m, delta, m1) = bound_inputs::<S>(g);
    let one = S::one();
    let two = scalar::<S>(2);
    scalar::<S>(4) * m * m - two * (n - one) * m * delta + (delta - two) * m1
}

fn bound_inputs<S: Scalar>(g: &Graph) -> (S, S, S, S) {
    let delta = g.degrees().min_degree().unwrap_or(0);
    (
        scalar(g.order() as u64),
        scalar(g.size() as u64),
        scalar(delta as u64),
        scalar(m1(g)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Exact, Real};

    fn p5() -> Graph {
        Graph::path(5)
    }

    #[test]
    fn m1_examples() {
        assert_eq!(m1(&Graph::star(5)), 20);
        assert_eq!(m1(&p5()), 14);
        for n in 3..9 {
            assert_eq!(m1(&Graph::star(n)), (n * (n - 1)) as u64);
            assert_eq!(m1(&Graph::cycle(n).unwrap()), 4 * n as u64);
        }
    }

    #[test]
    fn m2_examples() {
        assert_eq!(m2(&Graph::star(5)), 16);
        assert_eq!(m2(&p5()), 12);
        assert_eq!(m2(&Graph::complete(4)), 54);
    }

    #[test]
    fn zc1_star_examples() {
        assert_eq!(zc1_star(&p5()), 10);
        for n in 4..12 {
            assert_eq!(zc1_star(&Graph::path(n)), 4 * n as u64 - 10);
            assert_eq!(zc1_star(&Graph::star(n)), ((n - 1) * (n - 2)) as u64);
            assert_eq!(zc1_star(&Graph::complete(n)), 0);
        }
        assert_eq!(zc1_star(&Graph::star(5)), 12);
    }

    #[test]
    fn zc1_star_edge_examples() {
        assert_eq!(zc1_star_edge(&p5()), 10);
        assert_eq!(zc1_star_edge(&Graph::star(6)), 20);
        assert_eq!(zc1_star_edge(&Graph::empty(4)), 0);
    }

    #[test]
    fn zc1_examples() {
        assert_eq!(zc1(&Graph::complete(5)), 0);
        assert_eq!(zc1(&Graph::path(4)), 4);
        assert_eq!(zc1(&Graph::star(5)), 36);
    }

    #[test]
    fn zc2_examples() {
        assert_eq!(zc2(&Graph::star(7)), 0);
        assert_eq!(zc2(&Graph::cycle(5).unwrap()), 20);
        // τ(P5) = [1,1,2,1,1]: 1·1 + 1·2 + 2·1 + 1·1.
        assert_eq!(zc2(&p5()), 6);
    }

    #[test]
    fn bic_examples() {
        assert_eq!(bic::<Real>(&p5(), &PhiFunction::Sum).unwrap(), 10.0);
        assert_eq!(
            bic::<Real>(&Graph::cycle(5).unwrap(), &PhiFunction::Product).unwrap(),
            20.0
        );
        let zero = PhiFunction::custom(|_, _| 0.0);
        assert_eq!(bic::<Real>(&Graph::complete(5), &zero).unwrap(), 0.0);
        assert_eq!(bic::<Real>(&p5(), &zero).unwrap(), 0.0);
        let exact: Exact = bic(&p5(), &PhiFunction::Sum).unwrap();
        assert_eq!(exact, Exact::from_integer(10));
    }

    #[test]
    fn bic_rejects_bad_phi() {
        let asym = PhiFunction::custom(|a, b| (2 * a + b) as f64);
        assert!(matches!(bic(&p5(), &asym), Err(Error::InvalidPhi(_))));
        let neg = PhiFunction::custom(|_, _| -1.0);
        assert!(matches!(bic(&p5(), &neg), Err(Error::InvalidPhi(_))));
        // Asymmetry on pairs that do not occur is not detectable and not an error.
        let off = PhiFunction::custom(|a, b| if a + b > 10 { (a * 3 + b) as f64 } else { 1.0 });
        assert_eq!(bic(&p5(), &off).unwrap(), 4.0);
    }

    #[test]
    fn partition_examples() {
        let p4 = partition_counts(&Graph::path(4));
        assert_eq!((p4.x(1, 2), p4.x(2, 2)), (2, 1));
        assert_eq!(p4.degree_edge_counts.len(), 2);
        let s5 = partition_counts(&Graph::star(5));
        assert_eq!((s5.n(1), s5.n(4)), (4, 1));
        assert_eq!(s5.x(4, 1), 4);
        assert_eq!(s5.y(3, 0), 4);
    }

    #[test]
    fn m1_edge_form_examples() {
        assert_eq!(m1_edge_form(&Graph::path(4)), 10);
        assert_eq!(m1_edge_form(&Graph::star(5)), 20);
        let with_isolated = Graph::from_edges(&[(0, 1), (1, 2), (2, 3)], Some(5)).unwrap();
        assert_eq!(m1_edge_form(&with_isolated), 10);
        assert_eq!(m1(&with_isolated), 10);
    }

    #[test]
    fn report_examples() {
        let r = index_report(&p5());
        assert_eq!((r.n, r.m), (5, 4));
        assert_eq!((r.m1, r.m2, r.zc1_star, r.zc1, r.zc2), (14, 12, 10, 8, 6));
        assert!(r.triangle_quadrangle_free);

        let k4 = index_report(&Graph::complete(4));
        assert_eq!(
            (k4.m1, k4.m2, k4.zc1_star, k4.zc1, k4.zc2),
            (36, 54, 0, 0, 0)
        );
        assert!(!k4.triangle_quadrangle_free);

        let one = index_report(&Graph::empty(1));
        assert_eq!(
            (one.m1, one.m2, one.zc1_star, one.zc1, one.zc2),
            (0, 0, 0, 0, 0)
        );
    }

    #[test]
    fn bound_formulas_agree_across_scalars() {
        for g in [
            Graph::star(5),
            Graph::complete(4),
            Graph::path(4),
            Graph::cycle(7).unwrap(),
        ] {
            let exact: Exact = m2_upper_rhs(&g);
            let real: Real = m2_upper_rhs(&g);
            assert_eq!(*exact.numer() as f64 / *exact.denom() as f64, real);
            let exact: Exact = yamaguchi_rhs(&g);
            let real: Real = yamaguchi_rhs(&g);
            assert_eq!(*exact.numer() as f64 / *exact.denom() as f64, real);
        }
        assert_eq!(
            m2_upper_rhs::<Exact>(&Graph::path(4)),
            Exact::from_integer(9)
        );
        assert_eq!(
            zc1_star_upper_rhs::<Exact>(&Graph::star(5)),
            Exact::from_integer(12)
        );
        assert_eq!(zc1_star_upper_rhs::<Exact>(&p5()), Exact::from_integer(18));
    }

    mod props {
        use proptest::prelude::*;

        use super::*;

        fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
            (1..=max_n).prop_flat_map(|n| {
                let pairs: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .collect();
                proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
                    let edges: Vec<_> = pairs
                        .iter()
                        .zip(&mask)
                        .filter(|(_, &k)| k)
                        .map(|(&e, _)| e)
                        .collect();
                    Graph::from_edges(&edges, Some(n)).unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn vertex_and_edge_forms_agree(g in arb_graph(10)) {
                prop_assert_eq!(zc1_star(&g), zc1_star_edge(&g));
                prop_assert_eq!(m1(&g), m1_edge_form(&g));
            }

            #[test]
            fn bic_specializes(g in arb_graph(10)) {
                prop_assert_eq!(bic::<Exact>(&g, &PhiFunction::Sum).unwrap(),
                    Exact::from_integer(zc1_star_edge(&g) as i64));
                prop_assert_eq!(bic::<Exact>(&g, &PhiFunction::Product).unwrap(),
                    Exact::from_integer(zc2(&g) as i64));
            }

            #[test]
            fn two_walk_inequality(g in arb_graph(10)) {
                // ZC1* ≤ 2·M2 − M1, with equality iff no triangle or quadrangle.
                let lhs = zc1_star(&g);
                let rhs = 2 * m2(&g) - m1(&g);
                prop_assert!(lhs <= rhs);
                prop_assert_eq!(lhs == rhs, g.is_triangle_and_quadrangle_free());
            }

            #[test]
            fn partition_totals(g in arb_graph(10)) {
                let p = partition_counts(&g);
                prop_assert_eq!(p.degree_counts.values().sum::<usize>(), g.order());
                let weighted: usize = p.degree_counts.iter().map(|(d, c)| d * c).sum();
                prop_assert_eq!(weighted, 2 * g.size());
                prop_assert_eq!(p.degree_edge_counts.values().sum::<usize>(), g.size());
                prop_assert_eq!(p.connection_edge_counts.values().sum::<usize>(), g.size());
            }
        }
    }
}
