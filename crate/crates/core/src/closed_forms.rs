//! Closed-form polynomials for `O_n`, checked against the computed values.
//!
//! The Kirchhoff, degree-Kirchhoff and spanning-tree formulas hold exactly.
//! The stored Wiener and Gutman cubics do not; they are evaluated
//! as given, compared against BFS, and a corrected cubic is fitted from the
//! BFS values.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};
use rayon::prelude::*;

use crate::decomposition::{
    decompose, leading_principal_minors, reciprocal_eigensum_diagonal, reciprocal_nonzero_eigensum,
};
use crate::error::{Error, Result};
use crate::graph::ChainGraph;
use crate::invariants::{
    distance_sums, gutman, kirchhoff_block_route, kirchhoff_full_spectrum_route,
    mult_kirchhoff_block_route, mult_kirchhoff_full_spectrum_route,
    spanning_trees_deletion_contraction, spanning_trees_matrix_tree, spanning_trees_product_route,
    weighted_distance_sums, wiener, ResistanceMatrix, DEFAULT_EDGE_CAP,
};
use crate::matrix::{
    char_poly, int, principal_minor_sum_enumerated, rat, Rational, RationalMatrix,
};

macro_rules! formulas {
    ($($variant:ident => $name:literal),* $(,)?) => {
        /// Every closed form the catalogue can evaluate.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Formula {
            $($variant),*
        }

        impl Formula {
            pub const ALL: &'static [Formula] = &[$(Formula::$variant),*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Formula::$variant => $name),*
                }
            }
        }

        impl FromStr for Formula {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(Formula::$variant),)*
                    other => Err(Error::UnknownFormula(other.to_string())),
                }
            }
        }
    };
}

formulas! {
    KfThm11 => "kf_thm11",
    KfstarThm13 => "kfstar_thm13",
    TauThm14 => "tau_thm14",
    Fact1 => "fact1",
    Fact2 => "fact2",
    Fact3 => "fact3",
    Fact4 => "fact4",
    Lemma32 => "lemma32",
    Lemma42 => "lemma42",
    Eq36 => "eq36",
    Eq49 => "eq49",
    G1 => "g1",
    G2 => "g2",
    G3 => "g3",
    G4 => "g4",
    G1Summand => "g1_summand",
    G2Summand => "g2_summand",
    G3Summand => "g3_summand",
    G4Summand => "g4_summand",
    F1 => "f1",
    F2 => "f2",
    F3 => "f3",
    F4 => "f4",
    PaperWiener => "paper_wiener",
    PaperGutman => "paper_gutman",
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn poly(n: i64, coeffs: &[i64]) -> Rational {
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, &c| acc * int(n) + int(c))
}

fn tenth_power(exp: i64) -> Rational {
    Pow::pow(rat(1, 10), exp as i32)
}

fn two_pow(exp: i64) -> Rational {
    Rational::from_integer(BigInt::from(2).pow(exp as u32))
}

/// `Σ_{k=1}^{upper} 2k`, zero for an empty range.
fn even_sum(upper: i64) -> i64 {
    if upper <= 0 {
        0
    } else {
        upper * (upper + 1)
    }
}

/// Evaluates a closed form at `n >= 1`.
pub fn evaluate(formula: Formula, n: i64) -> Result<Rational> {
    if n < 1 {
        return Err(Error::InvalidChainLength(n));
    }
    let value = match formula {
        Formula::KfThm11 => poly(n, &[4, 26, 51, 27]) / int(6),
        Formula::KfstarThm13 => poly(n, &[8, 204, 559, 507]) / int(6),
        Formula::TauThm14 => {
            let three = BigInt::from(3).pow((n - 1) as u32);
            two_pow(8 * n + 2) * Rational::from_integer(three)
        }
        Formula::Fact1 => int(3 * n + 1) * two_pow(3 * n),
        Formula::Fact2 => int(n * (3 * n + 1) * (3 * n + 2)) * two_pow(3 * n - 2),
        Formula::Fact3 => int(13 * n + 1) / int(18) * tenth_power(n - 1),
        Formula::Fact4 => poly(n, &[0, 22, 39, 169]) / int(72) * tenth_power(n - 1),
        Formula::Lemma32 => int(n * (3 * n + 2)) / int(4),
        Formula::Lemma42 => poly(n, &[0, 22, 39, 169]) / int(4 * (13 * n + 1)),
        Formula::Eq36 => int(2 * n + 1) / int(3),
        Formula::Eq49 => int(17 * n + 4) / int(6),
        Formula::G1 => poly(n, &[1, 3, 9]),
        Formula::G2 => int(2 * n) * poly(n, &[1, 3, 3]),
        Formula::G3 => int(n) * poly(n, &[1, 3, 6]),
        Formula::G4 => poly(n, &[-1, 1, -6, 6]),
        Formula::G1Summand => int(1 + even_sum(3 * n)),
        Formula::G2Summand => int((1..=n)
            .map(|s| 2 + even_sum(3 * s - 2) + even_sum(3 * n + 2 - 3 * s))
            .sum()),
        Formula::G3Summand => int((1..=n)
            .map(|s| 2 + even_sum(3 * s - 1) + even_sum(3 * n + 1 - 3 * s))
            .sum()),
        Formula::G4Summand => int((1..n)
            .map(|s| 1 + even_sum(3 * s) + even_sum(3 * n - 3 * s))
            .sum()),
        Formula::F1 => int(9) * poly(n, &[1, 1, 13]),
        Formula::F2 => int(4) * poly(n, &[8, 9, 15, 26]),
        Formula::F3 => int(4) * poly(n, &[8, -3, 3, 26]),
        Formula::F4 => int(5) * poly(n, &[5, 10, -36, 26]),
        Formula::PaperWiener => poly(n, &[1, 10, 21, 18]),
        Formula::PaperGutman => poly(n, &[107, 92, 126, 338]),
    };
    Ok(value)
}

pub fn evaluate_by_name(name: &str, n: i64) -> Result<Rational> {
    evaluate(name.parse()?, n)
}

/// `τ(O_n) = 2^{8n+2} 3^{n-1}` as an integer.
pub fn tau_closed_form(n: i64) -> Result<BigInt> {
    Ok(evaluate(Formula::TauThm14, n)?.to_integer())
}

/// Exact cubic `c_0 + c_1 n + c_2 n^2 + c_3 n^3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cubic {
    pub coeffs: [Rational; 4],
}

impl Cubic {
    pub fn eval(&self, n: i64) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * int(n) + c)
    }

    pub fn leading(&self) -> &Rational {
        &self.coeffs[3]
    }
}

impl fmt::Display for Cubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            let body = match power {
                0 => format!("{mag}"),
                1 => format!("{mag}n"),
                p => format!("{mag}n^{p}"),
            };
            terms.push((sign, body));
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (sign, body)) in terms.iter().enumerate() {
            match (i, *sign) {
                (0, "-") => write!(f, "-{body}")?,
                (0, _) => write!(f, "{body}")?,
                (_, s) => write!(f, " {s} {body}")?,
            }
        }
        Ok(())
    }
}

/// Interpolates a cubic through the first four points and requires every
/// further point to lie on it. The leading coefficient must be nonzero.
pub fn fit_cubic(points: &[(i64, Rational)]) -> Result<Cubic> {
    if points.len() < 4 {
        return Err(Error::Fit(format!(
            "need at least 4 points, got {}",
            points.len()
        )));
    }
    let mut xs: Vec<i64> = points.iter().map(|p| p.0).collect();
    xs.sort_unstable();
    if xs.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Fit("n values must be distinct".into()));
    }
    // Vandermonde solve on the first four points
    let base = &points[..4];
    let vandermonde = RationalMatrix::from_fn(4, 4, |i, j| Pow::pow(int(base[i].0), j as u32));
    let rhs: Vec<Rational> = base.iter().map(|p| p.1.clone()).collect();
    let c = crate::matrix::solve(&vandermonde, &rhs)?;
    let cubic = Cubic {
        coeffs: [c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()],
    };
    if cubic.leading().is_zero() {
        return Err(Error::Fit("data has degree below 3".into()));
    }
    for (x, y) in &points[4..] {
        if &cubic.eval(*x) != y {
            return Err(Error::Fit(format!(
                "point n={x} value {y} is off the cubic (predicts {})",
                cubic.eval(*x)
            )));
        }
    }
    Ok(cubic)
}

pub fn fit_cubic_integers(points: &[(i64, u64)]) -> Result<Cubic> {
    let points: Vec<(i64, Rational)> = points.iter().map(|&(n, v)| (n, int(v as i64))).collect();
    fit_cubic(&points)
}

/// Number of chain lengths whose BFS values feed the corrected cubics.
pub const FIT_RANGE: i64 = 8;

/// Corrected Wiener cubic fitted to BFS values for `n = 1..=8`.
pub fn fitted_wiener_cubic() -> Result<Cubic> {
    let points = (1..=FIT_RANGE)
        .map(|n| Ok((n, wiener(&ChainGraph::build(n)?))))
        .collect::<Result<Vec<_>>>()?;
    fit_cubic_integers(&points)
}

/// Corrected Gutman cubic fitted to BFS values for `n = 1..=8`.
pub fn fitted_gutman_cubic() -> Result<Cubic> {
    let points = (1..=FIT_RANGE)
        .map(|n| Ok((n, gutman(&ChainGraph::build(n)?))))
        .collect::<Result<Vec<_>>>()?;
    fit_cubic_integers(&points)
}

/// Per-type distance sums over row-one vertices, grouped the way the
/// per-vertex sums are written: vertex 1, vertices `3s-1`, vertices `3s`,
/// interior vertices `3s+1`.
pub fn per_type_sums(g: &ChainGraph, per_vertex: &[u64]) -> [u64; 4] {
    let mut out = [0u64; 4];
    let last = g.row_len();
    for position in 1..=last {
        let slot = if position == 1 {
            Some(0)
        } else if position == last {
            None // mirror of vertex 1, counted through the factor 2 on g_1
        } else {
            match position % 3 {
                2 => Some(1),
                0 => Some(2),
                _ => Some(3),
            }
        };
        if let Some(slot) = slot {
            out[slot] += per_vertex[position - 1];
        }
    }
    out
}

/// A closed form compared against the value it should describe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub formula: Formula,
    pub n: u32,
    pub closed: Rational,
    pub computed: Rational,
}

impl Comparison {
    pub fn matches(&self) -> bool {
        self.closed == self.computed
    }
}

/// Per-type Wiener and Gutman sums from BFS against `g_1..g_4` (closed and
/// summand forms) and `f_1..f_4`.
pub fn per_type_comparisons(g: &ChainGraph) -> Result<Vec<Comparison>> {
    let n = g.n() as i64;
    let w = per_type_sums(g, &distance_sums(g));
    let f = per_type_sums(g, &weighted_distance_sums(g));
    let table = [
        (Formula::G1, w[0]),
        (Formula::G2, w[1]),
        (Formula::G3, w[2]),
        (Formula::G4, w[3]),
        (Formula::G1Summand, w[0]),
        (Formula::G2Summand, w[1]),
        (Formula::G3Summand, w[2]),
        (Formula::G4Summand, w[3]),
        (Formula::F1, f[0]),
        (Formula::F2, f[1]),
        (Formula::F3, f[2]),
        (Formula::F4, f[3]),
    ];
    table
        .iter()
        .map(|&(formula, computed)| {
            Ok(Comparison {
                formula,
                n: g.n(),
                closed: evaluate(formula, n)?,
                computed: int(computed as i64),
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    /// Known-wrong closed form; reported but does not fail the run.
    Warn,
    /// Informational comparison.
    Info,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Warn => "WARN",
            Status::Info => "INFO",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub n: Option<u32>,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn with_status(&self, status: Status) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(move |c| c.status == status)
    }

    pub fn find(&self, name: &str, n: Option<u32>) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name && c.n == n)
    }
}

/// Chain lengths up to which the brute-force minor enumeration runs inside
/// verification.
pub const BRUTE_FORCE_MAX_N: u32 = 4;

struct Collector {
    n: u32,
    checks: Vec<Check>,
}

impl Collector {
    fn push(&mut self, name: &str, status: Status, detail: String) {
        self.checks.push(Check {
            name: name.to_string(),
            n: Some(self.n),
            status,
            detail,
        });
    }

    fn exact(&mut self, name: &str, expected: &Rational, actual: &Rational) {
        if expected == actual {
            self.push(name, Status::Pass, format!("{actual}"));
        } else {
            self.push(
                name,
                Status::Fail,
                format!("expected {expected}, computed {actual}"),
            );
        }
    }

    fn flag(&mut self, name: &str, ok: bool, detail: String) {
        self.push(name, if ok { Status::Pass } else { Status::Fail }, detail);
    }

    fn run(&mut self, name: &str, f: impl FnOnce(&mut Self) -> Result<()>) {
        if let Err(e) = f(self) {
            self.push(name, Status::Fail, e.to_string());
        }
    }
}

/// Verifies every closed form and identity for `n = 1..=n_max` on `O_n`.
pub fn verify_theorems(n_max: u32) -> VerificationReport {
    verify_theorems_with(n_max, DEFAULT_EDGE_CAP, &|n| ChainGraph::build(n as i64))
}

/// As [`verify_theorems`] with a custom graph builder, so broken chains can
/// be pushed through the same checks.
pub fn verify_theorems_with(
    n_max: u32,
    edge_cap: usize,
    builder: &(dyn Fn(u32) -> Result<ChainGraph> + Sync),
) -> VerificationReport {
    let per_n: Vec<Vec<Check>> = (1..=n_max)
        .into_par_iter()
        .map(|n| verify_one(n, edge_cap, builder))
        .collect();
    let mut checks: Vec<Check> = per_n.into_iter().flatten().collect();

    let mut fitted = |name: &str, cubic: Result<Cubic>, leading: i64| {
        let check = match cubic {
            Ok(c) if c.leading() == &int(leading) => Check {
                name: name.to_string(),
                n: None,
                status: Status::Pass,
                detail: format!("corrected cubic {c} interpolates BFS for n=1..{FIT_RANGE}"),
            },
            Ok(c) => Check {
                name: name.to_string(),
                n: None,
                status: Status::Fail,
                detail: format!("fitted {c}, leading coefficient should be {leading}"),
            },
            Err(e) => Check {
                name: name.to_string(),
                n: None,
                status: Status::Fail,
                detail: e.to_string(),
            },
        };
        checks.push(check);
    };
    fitted("fitted_wiener_cubic", fitted_wiener_cubic(), 18);
    fitted("fitted_gutman_cubic", fitted_gutman_cubic(), 338);
    VerificationReport { checks }
}

fn verify_one(
    n: u32,
    edge_cap: usize,
    builder: &(dyn Fn(u32) -> Result<ChainGraph> + Sync),
) -> Vec<Check> {
    let mut c = Collector {
        n,
        checks: Vec::new(),
    };
    let ni = n as i64;
    let g = match builder(n) {
        Ok(g) => g,
        Err(e) => {
            c.push("build", Status::Fail, e.to_string());
            return c.checks;
        }
    };
    let bundle = match decompose(&g) {
        Ok(b) => b,
        Err(e) => {
            c.push("decompose", Status::Fail, e.to_string());
            return c.checks;
        }
    };
    let ev = |f: Formula| evaluate(f, ni).expect("n >= 1");

    c.run("factorization", |c| {
        let ok = crate::decomposition::factorization_holds(&g, &bundle)?;
        c.flag(
            "factorization",
            ok,
            "P_L = P_LA P_LS and normalized analogue".into(),
        );
        Ok(())
    });

    c.run("ls_spectrum", |c| {
        let mut expected = vec![int(4); 3 * n as usize + 1];
        for k in 1..n as usize {
            expected[3 * k] = int(6);
        }
        let ok = bundle.l_s == RationalMatrix::from_diagonal(&expected);
        c.flag(
            "ls_spectrum",
            ok,
            format!("L_S = diag(4^{}, 6^{})", 2 * n + 2, n - 1),
        );
        let mut expected = vec![int(1); 3 * n as usize + 1];
        expected[0] = rat(4, 3);
        expected[3 * n as usize] = rat(4, 3);
        for k in 1..n as usize {
            expected[3 * k] = rat(6, 5);
        }
        let ok = bundle.nl_s == RationalMatrix::from_diagonal(&expected);
        c.flag(
            "nls_spectrum",
            ok,
            format!("nL_S = diag((4/3)^2, 1^{}, (6/5)^{})", 2 * n, n - 1),
        );
        Ok(())
    });

    c.run("facts", |c| {
        let pa = char_poly(&bundle.l_a)?;
        let pn = char_poly(&bundle.nl_a_similar)?;
        let order = 3 * n as usize;
        c.exact("fact1", &ev(Formula::Fact1), &pa.principal_minor_sum(order));
        c.exact(
            "fact2",
            &ev(Formula::Fact2),
            &pa.principal_minor_sum(order - 1),
        );
        c.exact("fact3", &ev(Formula::Fact3), &pn.principal_minor_sum(order));
        c.exact(
            "fact4",
            &ev(Formula::Fact4),
            &pn.principal_minor_sum(order - 1),
        );
        if n <= BRUTE_FORCE_MAX_N {
            let e = principal_minor_sum_enumerated;
            c.exact(
                "fact1_enumerated",
                &ev(Formula::Fact1),
                &e(&bundle.l_a, order)?,
            );
            c.exact(
                "fact2_enumerated",
                &ev(Formula::Fact2),
                &e(&bundle.l_a, order - 1)?,
            );
            c.exact(
                "fact3_enumerated",
                &ev(Formula::Fact3),
                &e(&bundle.nl_a_similar, order)?,
            );
            c.exact(
                "fact4_enumerated",
                &ev(Formula::Fact4),
                &e(&bundle.nl_a_similar, order - 1)?,
            );
        }
        c.exact(
            "lemma32",
            &ev(Formula::Lemma32),
            &reciprocal_nonzero_eigensum(&pa)?,
        );
        c.exact(
            "lemma42",
            &ev(Formula::Lemma42),
            &reciprocal_nonzero_eigensum(&pn)?,
        );
        c.exact(
            "eq36",
            &ev(Formula::Eq36),
            &reciprocal_eigensum_diagonal(&bundle.l_s)?,
        );
        c.exact(
            "eq49",
            &ev(Formula::Eq49),
            &reciprocal_eigensum_diagonal(&bundle.nl_s)?,
        );
        Ok(())
    });

    c.run("leading_minor_recurrences", |c| {
        let (ok, detail) = check_leading_minors(&bundle.l_a, &bundle.nl_a_similar, n)?;
        c.flag("leading_minor_recurrences", ok, detail);
        Ok(())
    });

    c.run("kf", |c| {
        let block = kirchhoff_block_route(&g, &bundle)?;
        let full = kirchhoff_full_spectrum_route(&g)?;
        let resistance = ResistanceMatrix::new(&g)?;
        let by_resistance = resistance_pair_sum(&g, &resistance, false);
        c.exact("kf_thm11", &ev(Formula::KfThm11), &block);
        c.exact("kf_routes_full_spectrum", &block, &full);
        c.exact("kf_routes_resistance", &block, &by_resistance);

        let block = mult_kirchhoff_block_route(&g, &bundle)?;
        let full = mult_kirchhoff_full_spectrum_route(&g)?;
        let by_resistance = resistance_pair_sum(&g, &resistance, true);
        c.exact("kfstar_thm13", &ev(Formula::KfstarThm13), &block);
        c.exact("kfstar_routes_full_spectrum", &block, &full);
        c.exact("kfstar_routes_resistance", &block, &by_resistance);

        c.exact(
            "foster_identity",
            &int(g.vertex_count() as i64 - 1),
            &resistance.edge_sum(&g),
        );
        Ok(())
    });

    c.run("tau", |c| {
        let closed = ev(Formula::TauThm14);
        let mt = Rational::from_integer(spanning_trees_matrix_tree(&g)?);
        let prod = Rational::from_integer(spanning_trees_product_route(&g)?);
        c.exact("tau_thm14", &closed, &mt);
        c.exact("tau_routes_product", &mt, &prod);
        if g.edge_count() <= edge_cap {
            let dc = Rational::from_integer(spanning_trees_deletion_contraction(&g, edge_cap)?);
            c.exact("tau_routes_deletion_contraction", &mt, &dc);
        }
        Ok(())
    });

    c.run("distance_indices", |c| {
        for (formula, computed) in [
            (Formula::PaperWiener, wiener(&g)),
            (Formula::PaperGutman, gutman(&g)),
        ] {
            let closed = ev(formula);
            let computed = int(computed as i64);
            if closed == computed {
                c.push(formula.name(), Status::Pass, format!("{computed}"));
            } else {
                c.push(
                    formula.name(),
                    Status::Warn,
                    format!("stored cubic gives {closed}, BFS gives {computed}"),
                );
            }
        }
        for cmp in per_type_comparisons(&g)? {
            let verdict = if cmp.matches() {
                "matches"
            } else {
                "differs from"
            };
            c.push(
                &format!("{}_per_type", cmp.formula),
                Status::Info,
                format!("closed form {} {verdict} BFS {}", cmp.closed, cmp.computed),
            );
        }
        Ok(())
    });

    c.checks
}

fn resistance_pair_sum(g: &ChainGraph, r: &ResistanceMatrix, weighted: bool) -> Rational {
    let degrees = g.degrees();
    let mut total = Rational::zero();
    for i in 0..g.vertex_count() {
        for j in i + 1..g.vertex_count() {
            let w = if weighted {
                (degrees[i] * degrees[j]) as i64
            } else {
                1
            };
            total += r.get(i, j) * int(w);
        }
    }
    total
}

/// Leading principal minors of a symmetric tridiagonal matrix from its
/// diagonal and squared off-diagonal, by the continuant recurrence.
pub fn continuant_minors(diag: &[Rational], off_squared: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::one()];
    for k in 0..diag.len() {
        let next = if k == 0 {
            diag[0].clone()
        } else {
            &diag[k] * &out[k] - &off_squared[k - 1] * &out[k - 1]
        };
        out.push(next);
    }
    out
}

/// Leading minors of `L_A` are `2^i` for `i <= 3n` and satisfy
/// `w_i = 4 w_{i-1} - 4 w_{i-2}`; those of the normalized block are the
/// `(1/10)^k` geometric forms and agree with the minors of the symmetric
/// normalized block (continuant with squared off-diagonals).
pub fn check_leading_minors(
    l_a: &RationalMatrix,
    nl_a_similar: &RationalMatrix,
    n: u32,
) -> Result<(bool, String)> {
    let top = 3 * n as usize;
    let w = leading_principal_minors(l_a)?;
    for i in 0..=top {
        if w[i] != two_pow(i as i64) {
            return Ok((false, format!("w_{i} = {} != 2^{i}", w[i])));
        }
        if i >= 3 && w[i] != int(4) * &w[i - 1] - int(4) * &w[i - 2] {
            return Ok((false, format!("w_{i} breaks w_i = 4w_(i-1) - 4w_(i-2)")));
        }
    }
    let m = leading_principal_minors(nl_a_similar)?;
    for k in 0..=n as i64 {
        let scale = tenth_power(k);
        let forms = [
            (3 * k, rat(5, 3) * &scale, k >= 1),
            (3 * k + 1, rat(2, 3) * &scale, k < n as i64),
            (3 * k + 2, rat(1, 3) * &scale, k < n as i64),
        ];
        for (i, expected, applies) in forms {
            if applies && m[i as usize] != expected {
                return Ok((false, format!("m_{i} = {} != {expected}", m[i as usize])));
            }
        }
    }
    // symmetric normalized block: diagonal a_ii/d_i, squared off-diagonal
    // a_{i,i+1}^2/(d_i d_{i+1})
    let dim = l_a.rows();
    let degrees: Vec<Rational> = (0..dim)
        .map(|i| &l_a[(i, i)] / &nl_a_similar[(i, i)])
        .collect();
    let diag: Vec<Rational> = (0..dim).map(|i| nl_a_similar[(i, i)].clone()).collect();
    let off: Vec<Rational> = (0..dim.saturating_sub(1))
        .map(|i| &l_a[(i, i + 1)] * &l_a[(i, i + 1)] / (&degrees[i] * &degrees[i + 1]))
        .collect();
    let tridiagonal =
        (0..dim).all(|i| (0..dim).all(|j| i.abs_diff(j) <= 1 || l_a[(i, j)].is_zero()));
    if !tridiagonal {
        return Ok((false, "L_A is not tridiagonal".into()));
    }
    if continuant_minors(&diag, &off) != m {
        return Ok((
            false,
            "minors of D^-1 L_A differ from the symmetric normalized block".into(),
        ));
    }
    Ok((
        true,
        format!("w_i = 2^i for i <= {top}; m_i geometric forms hold"),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioRow {
    pub n: u32,
    pub kf: Rational,
    pub wiener: u64,
    pub kf_star: Rational,
    pub gutman: u64,
    pub kf_over_wiener: Rational,
    pub kfstar_over_gutman: Rational,
}

/// `Kf/W` and `Kf*/Gut` for `n = 1..=n_max` from computed invariants: the
/// block spectral routes and BFS.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioSeries {
    pub rows: Vec<RatioRow>,
}

impl RatioSeries {
    /// `|ratio - 1/4|` strictly decreases along the series, for both ratios.
    pub fn strictly_approaching_quarter(&self) -> bool {
        let quarter = rat(1, 4);
        let gaps = |f: fn(&RatioRow) -> &Rational| -> Vec<Rational> {
            self.rows.iter().map(|r| (f(r) - &quarter).abs()).collect()
        };
        let a = gaps(|r| &r.kf_over_wiener);
        let b = gaps(|r| &r.kfstar_over_gutman);
        a.windows(2).all(|w| w[1] < w[0]) && b.windows(2).all(|w| w[1] < w[0])
    }
}

pub fn ratio_row(n: u32) -> Result<RatioRow> {
    let g = ChainGraph::build(n as i64)?;
    let bundle = decompose(&g)?;
    let kf = kirchhoff_block_route(&g, &bundle)?;
    let kf_star = mult_kirchhoff_block_route(&g, &bundle)?;
    let w = wiener(&g);
    let gut = gutman(&g);
    Ok(RatioRow {
        n,
        kf_over_wiener: &kf / int(w as i64),
        kfstar_over_gutman: &kf_star / int(gut as i64),
        kf,
        wiener: w,
        kf_star,
        gutman: gut,
    })
}

pub fn ratio_series(n_max: u32) -> Result<RatioSeries> {
    let rows = (1..=n_max)
        .into_par_iter()
        .map(ratio_row)
        .collect::<Result<Vec<_>>>()?;
    Ok(RatioSeries { rows })
}

/// Ratios from the closed-form Kirchhoff indices over the fitted distance
/// cubics, for `n` beyond direct computation.
pub fn extrapolated_ratios(
    n: i64,
    wiener_fit: &Cubic,
    gutman_fit: &Cubic,
) -> Result<(Rational, Rational)> {
    let kf = evaluate(Formula::KfThm11, n)?;
    let kfs = evaluate(Formula::KfstarThm13, n)?;
    Ok((kf / wiener_fit.eval(n), kfs / gutman_fit.eval(n)))
}
