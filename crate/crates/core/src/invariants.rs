//! Resistance- and distance-based invariants, each by more than one route
//! where one exists.
//!
//! Routes never share code paths with the quantity they check: distances use
//! BFS only, resistances use grounded-Laplacian solves only, and the spectral
//! routes read everything off characteristic polynomial coefficients.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::decomposition::{
    block_reciprocal_eigensum, decompose, nonzero_root_product, reciprocal_nonzero_eigensum,
    root_product, DecompositionBundle,
};
use crate::error::{Error, Result};
use crate::graph::{ChainGraph, VertexId};
use crate::matrix::{
    char_poly, cofactor_det, int, laplacian, normalized_similar, LuFactors, Rational,
};

/// Default edge cap for the deletion-contraction oracle (enough for `O_1`).
pub const DEFAULT_EDGE_CAP: usize = 14;

/// Resistance between `u` and `v`: ground `v`, inject a unit current at `u`
/// and read the potential at `u`.
pub fn effective_resistance(g: &ChainGraph, u: VertexId, v: VertexId) -> Result<Rational> {
    let ui = g.index_of(u)?;
    let vi = g.index_of(v)?;
    if ui == vi {
        return Err(Error::SameVertex(u.to_string()));
    }
    let grounded = laplacian(g).without(vi)?;
    let pos = if ui < vi { ui } else { ui - 1 };
    let mut b = vec![Rational::zero(); grounded.rows()];
    b[pos] = Rational::one();
    let x = LuFactors::new(&grounded)?.solve(&b)?;
    Ok(x[pos].clone())
}

/// All pairwise resistances from one factorisation of the Laplacian grounded
/// at the last vertex `(3n+1)'`.
#[derive(Clone, Debug)]
pub struct ResistanceMatrix {
    values: Vec<Vec<Rational>>,
}

impl ResistanceMatrix {
    pub fn new(g: &ChainGraph) -> Result<Self> {
        let n = g.vertex_count();
        let ground = n - 1;
        let lu = LuFactors::new(&laplacian(g).without(ground)?)?;
        // columns of the grounded inverse G; r(i, j) = G_ii + G_jj - 2 G_ij
        let columns: Vec<Vec<Rational>> = (0..ground)
            .into_par_iter()
            .map(|j| lu.inverse_column(j))
            .collect::<Result<_>>()?;
        let mut values = vec![vec![Rational::zero(); n]; n];
        for i in 0..ground {
            for j in 0..i {
                let r = &columns[i][i] + &columns[j][j] - int(2) * &columns[j][i];
                values[i][j] = r.clone();
                values[j][i] = r;
            }
            values[i][ground] = columns[i][i].clone();
            values[ground][i] = columns[i][i].clone();
        }
        Ok(ResistanceMatrix { values })
    }

    pub fn get(&self, a: usize, b: usize) -> &Rational {
        &self.values[a][b]
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    fn pair_sum(&self, weight: impl Fn(usize, usize) -> i64) -> Rational {
        let mut total = Rational::zero();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                total += &self.values[i][j] * int(weight(i, j));
            }
        }
        total
    }

    /// `Σ_{edges} r(u, v)`; equals `|V| - 1` for a connected graph.
    pub fn edge_sum(&self, g: &ChainGraph) -> Rational {
        g.edges()
            .iter()
            .fold(Rational::zero(), |acc, &(a, b)| acc + &self.values[a][b])
    }
}

/// `Kf = Σ_{i<j} r_ij`.
pub fn kirchhoff_resistance_route(g: &ChainGraph) -> Result<Rational> {
    Ok(ResistanceMatrix::new(g)?.pair_sum(|_, _| 1))
}

/// `Kf = 2(3n+1) (Σ 1/α_i + Σ 1/β_j)` over the nonzero spectra of `L_A` and
/// `L_S`.
pub fn kirchhoff_block_route(g: &ChainGraph, bundle: &DecompositionBundle) -> Result<Rational> {
    let alpha = reciprocal_nonzero_eigensum(&char_poly(&bundle.l_a)?)?;
    let beta = block_reciprocal_eigensum(&bundle.l_s)?;
    Ok(int(g.vertex_count() as i64) * (alpha + beta))
}

/// `Kf = N Σ 1/μ_k` over the nonzero Laplacian spectrum.
pub fn kirchhoff_full_spectrum_route(g: &ChainGraph) -> Result<Rational> {
    let mu = reciprocal_nonzero_eigensum(&char_poly(&laplacian(g))?)?;
    Ok(int(g.vertex_count() as i64) * mu)
}

/// Both spectral sub-routes; they must agree.
pub fn kirchhoff_spectral_route(g: &ChainGraph) -> Result<Rational> {
    let block = kirchhoff_block_route(g, &decompose(g)?)?;
    let full = kirchhoff_full_spectrum_route(g)?;
    agree("Kf", ("spectral_blocks", &block), ("spectral_full", &full))?;
    Ok(block)
}

/// `Kf* = Σ_{i<j} d_i d_j r_ij`.
pub fn mult_kirchhoff_resistance_route(g: &ChainGraph) -> Result<Rational> {
    let degrees = g.degrees();
    Ok(ResistanceMatrix::new(g)?.pair_sum(|i, j| (degrees[i] * degrees[j]) as i64))
}

/// `Kf* = 2m (Σ 1/λ_i + Σ 1/δ_j)` over the nonzero spectra of `𝓛_A` and
/// `𝓛_S`.
pub fn mult_kirchhoff_block_route(
    g: &ChainGraph,
    bundle: &DecompositionBundle,
) -> Result<Rational> {
    let lambda = reciprocal_nonzero_eigensum(&char_poly(&bundle.nl_a_similar)?)?;
    let delta = block_reciprocal_eigensum(&bundle.nl_s)?;
    Ok(int(2 * g.edge_count() as i64) * (lambda + delta))
}

/// `Kf* = 2m Σ 1/λ_k` over the nonzero normalized Laplacian spectrum.
pub fn mult_kirchhoff_full_spectrum_route(g: &ChainGraph) -> Result<Rational> {
    let lambda = reciprocal_nonzero_eigensum(&char_poly(&normalized_similar(g))?)?;
    Ok(int(2 * g.edge_count() as i64) * lambda)
}

pub fn mult_kirchhoff_spectral_route(g: &ChainGraph) -> Result<Rational> {
    let block = mult_kirchhoff_block_route(g, &decompose(g)?)?;
    let full = mult_kirchhoff_full_spectrum_route(g)?;
    agree("Kf*", ("spectral_blocks", &block), ("spectral_full", &full))?;
    Ok(block)
}

/// `Σ_j d(v, j)` for every vertex `v`.
pub fn distance_sums(g: &ChainGraph) -> Vec<u64> {
    (0..g.vertex_count())
        .map(|v| g.bfs_distances(v).iter().map(|&d| d as u64).sum())
        .collect()
}

/// `d_v Σ_j d_j d(v, j)` for every vertex `v`.
pub fn weighted_distance_sums(g: &ChainGraph) -> Vec<u64> {
    let degrees = g.degrees();
    (0..g.vertex_count())
        .map(|v| {
            let inner: u64 = g
                .bfs_distances(v)
                .iter()
                .zip(&degrees)
                .map(|(&d, &deg)| d as u64 * deg as u64)
                .sum();
            inner * degrees[v] as u64
        })
        .collect()
}

/// `W = Σ_{i<j} d_ij` by BFS from every vertex.
pub fn wiener(g: &ChainGraph) -> u64 {
    distance_sums(g).iter().sum::<u64>() / 2
}

/// `Gut = Σ_{i<j} d_i d_j d_ij` by BFS from every vertex.
pub fn gutman(g: &ChainGraph) -> u64 {
    weighted_distance_sums(g).iter().sum::<u64>() / 2
}

fn to_integer(value: Rational, what: &str) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegerCount(format!("{what} = {value}")))
    }
}

/// Any cofactor of `L`; the last vertex is deleted.
pub fn spanning_trees_matrix_tree(g: &ChainGraph) -> Result<BigInt> {
    let l = laplacian(g);
    to_integer(cofactor_det(&l, l.rows() - 1)?, "matrix-tree cofactor")
}

/// `τ = Π d_i · Π_{λ ≠ 0} λ / (2m)` with the normalized eigenvalue product
/// read off the block polynomials.
pub fn spanning_trees_product_route(g: &ChainGraph) -> Result<BigInt> {
    let bundle = decompose(g)?;
    let degree_product = g.degrees().iter().fold(BigInt::one(), |acc, &d| acc * d);
    let lambda = nonzero_root_product(&char_poly(&bundle.nl_a_similar)?)?;
    let delta = root_product(&char_poly(&bundle.nl_s)?);
    let tau =
        Rational::from_integer(degree_product) * lambda * delta / int(2 * g.edge_count() as i64);
    to_integer(tau, "eigenvalue product route")
}

/// `τ(G) = τ(G - e) + τ(G / e)` on the graph's edges, as a multigraph.
pub fn spanning_trees_deletion_contraction(g: &ChainGraph, edge_cap: usize) -> Result<BigInt> {
    if g.edge_count() > edge_cap {
        return Err(Error::EdgeCapExceeded {
            edges: g.edge_count(),
            cap: edge_cap,
        });
    }
    Ok(count_spanning_trees(g.vertex_count(), g.edges()))
}

/// Spanning trees of a multigraph on `vertex_count` vertices by
/// deletion-contraction. Loops are ignored. Exponential in the edge count.
pub fn count_spanning_trees(vertex_count: usize, edges: &[(usize, usize)]) -> BigInt {
    let edges: Vec<(usize, usize)> = edges.iter().copied().filter(|(a, b)| a != b).collect();
    if vertex_count <= 1 {
        return BigInt::from(vertex_count);
    }
    if !connected(vertex_count, &edges) {
        return BigInt::zero();
    }
    delete_contract(vertex_count, edges)
}

fn delete_contract(vertex_count: usize, edges: Vec<(usize, usize)>) -> BigInt {
    if vertex_count == 1 {
        return BigInt::one();
    }
    if edges.len() + 1 < vertex_count || !connected(vertex_count, &edges) {
        return BigInt::zero();
    }
    let (a, b) = edges[0];
    let rest: Vec<(usize, usize)> = edges[1..].to_vec();
    // contract b into a and renumber the last vertex into b's slot
    let last = vertex_count - 1;
    let relabel = |v: usize| {
        let v = if v == b { a } else { v };
        if v == last {
            b
        } else {
            v
        }
    };
    let contracted: Vec<(usize, usize)> = rest
        .iter()
        .map(|&(x, y)| (relabel(x), relabel(y)))
        .filter(|(x, y)| x != y)
        .collect();
    delete_contract(vertex_count, rest) + delete_contract(vertex_count - 1, contracted)
}

fn connected(vertex_count: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..vertex_count).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = vertex_count;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            components -= 1;
        }
    }
    components == 1
}

fn agree(invariant: &str, a: (&str, &Rational), b: (&str, &Rational)) -> Result<()> {
    if a.1 == b.1 {
        Ok(())
    } else {
        Err(Error::RouteDisagreement {
            invariant: invariant.to_string(),
            route_a: a.0.to_string(),
            value_a: a.1.to_string(),
            route_b: b.0.to_string(),
            value_b: b.1.to_string(),
        })
    }
}

/// Per-invariant list of `(route, value)` pairs.
pub type Routes = BTreeMap<&'static str, Vec<(&'static str, Rational)>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub n: u32,
    pub kf: Rational,
    pub kf_star: Rational,
    pub wiener: u64,
    pub gutman: u64,
    pub tau: BigInt,
    /// Edge count.
    pub m: usize,
    pub routes: Routes,
}

/// Runs every route and insists they agree.
pub fn full_report(g: &ChainGraph) -> Result<InvariantReport> {
    full_report_with_cap(g, DEFAULT_EDGE_CAP)
}

pub fn full_report_with_cap(g: &ChainGraph, edge_cap: usize) -> Result<InvariantReport> {
    let bundle = decompose(g)?;
    let resistances = ResistanceMatrix::new(g)?;
    let degrees = g.degrees();

    let mut routes = Routes::new();
    routes.insert(
        "kf",
        vec![
            ("resistance", resistances.pair_sum(|_, _| 1)),
            ("spectral_blocks", kirchhoff_block_route(g, &bundle)?),
            ("spectral_full", kirchhoff_full_spectrum_route(g)?),
        ],
    );
    routes.insert(
        "kf_star",
        vec![
            (
                "resistance",
                resistances.pair_sum(|i, j| (degrees[i] * degrees[j]) as i64),
            ),
            ("spectral_blocks", mult_kirchhoff_block_route(g, &bundle)?),
            ("spectral_full", mult_kirchhoff_full_spectrum_route(g)?),
        ],
    );
    let mut tau_routes = vec![
        (
            "matrix_tree",
            Rational::from_integer(spanning_trees_matrix_tree(g)?),
        ),
        (
            "eigenvalue_product",
            Rational::from_integer(spanning_trees_product_route(g)?),
        ),
    ];
    if g.edge_count() <= edge_cap {
        tau_routes.push((
            "deletion_contraction",
            Rational::from_integer(spanning_trees_deletion_contraction(g, edge_cap)?),
        ));
    }
    routes.insert("tau", tau_routes);
    let w = wiener(g);
    let gut = gutman(g);
    routes.insert("wiener", vec![("bfs", int(w as i64))]);
    routes.insert("gutman", vec![("bfs", int(gut as i64))]);

    for (name, list) in &routes {
        let (first_route, first) = &list[0];
        for (route, value) in &list[1..] {
            agree(name, (first_route, first), (route, value))?;
        }
    }

    let first = |key: &str| routes[key][0].1.clone();
    Ok(InvariantReport {
        n: g.n(),
        kf: first("kf"),
        kf_star: first("kf_star"),
        tau: first("tau").to_integer(),
        wiener: w,
        gutman: gut,
        m: g.edge_count(),
        routes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::rat;

    #[test]
    fn kirchhoff_small_values() {
        let cases = [
            (1, rat(18, 1)),
            (2, rat(238, 3)),
            (3, rat(635, 3)),
            (4, rat(442, 1)),
        ];
        for (n, kf) in cases {
            let g = ChainGraph::build(n).unwrap();
            assert_eq!(kirchhoff_resistance_route(&g).unwrap(), kf, "n={n}");
            assert_eq!(kirchhoff_spectral_route(&g).unwrap(), kf, "n={n}");
        }
    }

    #[test]
    fn mult_kirchhoff_small_values() {
        let cases = [
            (1, rat(213, 1)),
            (2, rat(1118, 1)),
            (3, rat(9670, 3)),
            (5, rat(13063, 1)),
        ];
        for (n, value) in cases {
            let g = ChainGraph::build(n).unwrap();
            assert_eq!(mult_kirchhoff_spectral_route(&g).unwrap(), value, "n={n}");
            if n <= 3 {
                assert_eq!(mult_kirchhoff_resistance_route(&g).unwrap(), value, "n={n}");
            }
        }
    }

    #[test]
    fn distance_indices_for_one_octagon() {
        let g = ChainGraph::build(1).unwrap();
        assert_eq!(wiener(&g), 46);
        assert_eq!(gutman(&g), 542);
        assert_eq!(distance_sums(&g)[0], 13);
        // pair (1, 2) alone contributes 3 * 4 * 1
        assert_eq!(g.degree(0) * g.degree(1), 12);
    }

    #[test]
    fn spanning_tree_routes() {
        let g = ChainGraph::build(1).unwrap();
        assert_eq!(spanning_trees_matrix_tree(&g).unwrap(), BigInt::from(1024));
        assert_eq!(
            spanning_trees_product_route(&g).unwrap(),
            BigInt::from(1024)
        );
        assert_eq!(
            spanning_trees_deletion_contraction(&g, 14).unwrap(),
            BigInt::from(1024)
        );
        let g = ChainGraph::build(2).unwrap();
        assert_eq!(
            spanning_trees_matrix_tree(&g).unwrap(),
            BigInt::from(786432)
        );
        assert!(matches!(
            spanning_trees_deletion_contraction(&g, DEFAULT_EDGE_CAP),
            Err(Error::EdgeCapExceeded { edges: 27, cap: 14 })
        ));
        let g = ChainGraph::build(3).unwrap();
        assert_eq!(
            spanning_trees_product_route(&g).unwrap(),
            BigInt::from(603979776u64)
        );
    }

    #[test]
    fn deletion_contraction_on_tiny_graphs() {
        assert_eq!(count_spanning_trees(2, &[(0, 1)]), BigInt::from(1));
        assert_eq!(
            count_spanning_trees(3, &[(0, 1), (1, 2), (0, 2)]),
            BigInt::from(3)
        );
        assert_eq!(
            count_spanning_trees(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]),
            BigInt::from(16)
        );
        assert_eq!(count_spanning_trees(2, &[(0, 1), (0, 1)]), BigInt::from(2));
        assert_eq!(count_spanning_trees(3, &[(0, 1)]), BigInt::from(0));
        assert_eq!(count_spanning_trees(1, &[(0, 0)]), BigInt::from(1));
    }

    #[test]
    fn single_pair_resistance_matches_table() {
        let g = ChainGraph::build(1).unwrap();
        let table = ResistanceMatrix::new(&g).unwrap();
        for a in 0..8 {
            for b in 0..8 {
                if a == b {
                    continue;
                }
                let r = effective_resistance(&g, g.label(a), g.label(b)).unwrap();
                assert_eq!(&r, table.get(a, b));
            }
        }
        assert!(matches!(
            effective_resistance(&g, VertexId::v1(1), VertexId::v1(1)),
            Err(Error::SameVertex(_))
        ));
    }

    #[test]
    fn report_for_two_octagons() {
        let r = full_report(&ChainGraph::build(2).unwrap()).unwrap();
        assert_eq!(r.kf, rat(238, 3));
        assert_eq!(r.kf_star, rat(1118, 1));
        assert_eq!(r.tau, BigInt::from(786432));
        assert_eq!(r.m, 27);
        assert!(r.routes.values().all(|v| !v.is_empty()));
        assert_eq!(r.routes["tau"].len(), 2);
    }

    #[test]
    fn mirrored_mutation_keeps_routes_consistent() {
        // dropping a mirrored pair of crossed edges keeps the mirror symmetry,
        // so every route still runs and they agree with each other
        let g = ChainGraph::build(1).unwrap();
        let edges: Vec<_> = g
            .edge_labels()
            .into_iter()
            .filter(|&(a, b)| {
                let cross = |x: VertexId, y: VertexId| {
                    (x == VertexId::v1(1) && y == VertexId::v2(2))
                        || (x == VertexId::v2(1) && y == VertexId::v1(2))
                };
                !(cross(a, b) || cross(b, a))
            })
            .collect();
        let mutated = ChainGraph::from_edges(1, &edges).unwrap();
        let r = full_report(&mutated).unwrap();
        assert_ne!(r.kf, rat(18, 1));
        assert_eq!(r.m, 12);
    }
}
