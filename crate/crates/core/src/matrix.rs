//! Dense exact-rational linear algebra.
//!
//! Everything here is exact: entries are [`Rational`] (arbitrary precision,
//! always reduced), determinants go through fraction-free Bareiss elimination
//! on integer rows, and characteristic polynomials are computed by Hessenberg
//! reduction over the rationals.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::ChainGraph;

pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RationalMatrix { rows, cols, data }
    }

    pub fn from_diagonal(diag: &[Rational]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    /// Builds a matrix from integer rows. Panics on ragged input.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| int(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<Rational> {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .collect()
    }

    pub fn trace(&self) -> Rational {
        self.diagonal()
            .into_iter()
            .fold(Rational::zero(), |acc, d| acc + d)
    }

    pub fn row_sums(&self) -> Vec<Rational> {
        (0..self.rows)
            .map(|i| self.row(i).iter().fold(Rational::zero(), |acc, x| acc + x))
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Submatrix keeping the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| {
            self[(rows[i], cols[j])].clone()
        })
    }

    pub fn principal_submatrix(&self, keep: &[usize]) -> Self {
        self.submatrix(keep, keep)
    }

    /// Leading principal submatrix of order `k` (first `k` rows and columns).
    pub fn leading(&self, k: usize) -> Self {
        let keep: Vec<usize> = (0..k).collect();
        self.principal_submatrix(&keep)
    }

    /// Removes row and column `index`.
    pub fn without(&self, index: usize) -> Result<Self> {
        let dim = self.require_square()?;
        if index >= dim {
            return Err(Error::IndexOutOfRange { index, dim });
        }
        let keep: Vec<usize> = (0..dim).filter(|&i| i != index).collect();
        Ok(self.principal_submatrix(&keep))
    }

    pub fn scale_rows(&self, factors: &[Rational]) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| &factors[i] * &self[(i, j)])
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Rows scaled to integers: returns the integer rows and, per row, the
    /// positive factor that was multiplied in.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
        let mut out = Vec::with_capacity(self.rows);
        let mut scales = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let row = self.row(i);
            let scale = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            out.push(
                row.iter()
                    .map(|x| x.numer() * (&scale / x.denom()))
                    .collect(),
            );
            scales.push(scale);
        }
        (out, scales)
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;

    fn add(self, rhs: Self) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RationalMatrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &rhs[(i, j)])
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;

    fn sub(self, rhs: Self) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RationalMatrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &rhs[(i, j)])
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;

    fn mul(self, rhs: Self) -> RationalMatrix {
        assert_eq!(self.cols, rhs.rows);
        RationalMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(Rational::zero(), |acc, k| {
                acc + &self[(i, k)] * &rhs[(k, j)]
            })
        })
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// `det(xI - M)` as ascending coefficients `c_0, …, c_N` with `c_N = 1`.
///
/// Relation to the other common conventions:
/// - the sum of all order-`k` principal minors of `M` is `(-1)^k c_{N-k}`;
/// - writing a singular `P(x) = x (x^{N-1} + a_1 x^{N-2} + … + a_{N-1})`
///   gives `a_k = c_{N-k}`, so `a_{N-1} = c_1` and `a_{N-2} = c_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<Rational>,
}

impl CharPoly {
    /// Wraps ascending coefficients; the leading one must be 1.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(
            coeffs.last().is_some_and(One::is_one),
            "characteristic polynomials are monic"
        );
        CharPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Sum of the order-`k` principal minors of the underlying matrix.
    pub fn principal_minor_sum(&self, order: usize) -> Rational {
        let c = self.coeff(self.degree() - order);
        if order.is_even() {
            c
        } else {
            -c
        }
    }

    pub fn product(&self, other: &CharPoly) -> CharPoly {
        CharPoly {
            coeffs: poly_mul(&self.coeffs, &other.coeffs),
        }
    }
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Fraction-free Gaussian elimination. Consumes an integer matrix.
fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let v = &row[j] * pivot - &lead * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
            row[k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

pub fn determinant(m: &RationalMatrix) -> Result<Rational> {
    m.require_square()?;
    let (rows, scales) = m.integer_rows();
    let scale = scales.iter().fold(BigInt::one(), |acc, s| acc * s);
    Ok(Rational::new(bareiss(rows), scale))
}

/// Textbook Laplace expansion along the first row. Exponential; used only as
/// an oracle for small matrices.
pub fn determinant_by_expansion(m: &RationalMatrix) -> Result<Rational> {
    let dim = m.require_square()?;
    if dim == 0 {
        return Ok(Rational::one());
    }
    if dim == 1 {
        return Ok(m[(0, 0)].clone());
    }
    let mut total = Rational::zero();
    for j in 0..dim {
        if m[(0, j)].is_zero() {
            continue;
        }
        let rows: Vec<usize> = (1..dim).collect();
        let cols: Vec<usize> = (0..dim).filter(|&c| c != j).collect();
        let minor = determinant_by_expansion(&m.submatrix(&rows, &cols))?;
        let term = &m[(0, j)] * minor;
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// Characteristic polynomial by reduction to upper Hessenberg form with
/// elementary similarity transforms, followed by the Hessenberg recurrence.
pub fn char_poly(m: &RationalMatrix) -> Result<CharPoly> {
    let n = m.require_square()?;
    let mut h: Vec<Vec<Rational>> = (0..n).map(|i| m.row(i).to_vec()).collect();

    for col in 0..n.saturating_sub(2) {
        let target = col + 1;
        let Some(p) = (target..n).find(|&i| !h[i][col].is_zero()) else {
            continue;
        };
        if p != target {
            h.swap(p, target);
            for row in h.iter_mut() {
                row.swap(p, target);
            }
        }
        let pivot = h[target][col].clone();
        for i in target + 1..n {
            if h[i][col].is_zero() {
                continue;
            }
            let u = &h[i][col] / &pivot;
            // row_i -= u * row_target
            let (upper, lower) = h.split_at_mut(i);
            let src = &upper[target];
            for (dst, s) in lower[0].iter_mut().zip(src).skip(col) {
                if !s.is_zero() {
                    *dst -= &u * s;
                }
            }
            // col_target += u * col_i
            for row in h.iter_mut() {
                if !row[i].is_zero() {
                    let add = &u * &row[i];
                    row[target] += add;
                }
            }
        }
    }

    // p_0 = 1; p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1}^{k} h_{j,j-1}) p_{i-1}
    // (1-based k and i in the comment, 0-based below)
    let mut polys: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    for k in 0..n {
        let prev = &polys[k];
        let mut next = vec![Rational::zero(); k + 2];
        for (d, c) in prev.iter().enumerate() {
            next[d + 1] += c;
            next[d] -= c * &h[k][k];
        }
        let mut sub = Rational::one();
        for i in (0..k).rev() {
            sub *= &h[i + 1][i];
            if sub.is_zero() {
                break;
            }
            if h[i][k].is_zero() {
                continue;
            }
            let factor = &sub * &h[i][k];
            for (d, c) in polys[i].iter().enumerate() {
                next[d] -= c * &factor;
            }
        }
        polys.push(next);
    }
    Ok(CharPoly::from_coeffs(polys.pop().unwrap()))
}

/// Characteristic polynomial by exact determinants at `x = 0..=N` and Newton
/// interpolation. Independent of [`char_poly`]; slower.
pub fn char_poly_by_interpolation(m: &RationalMatrix) -> Result<CharPoly> {
    let n = m.require_square()?;
    let xs: Vec<Rational> = (0..=n as i64).map(int).collect();
    let mut ys = Vec::with_capacity(n + 1);
    for x in &xs {
        let shifted = RationalMatrix::from_fn(n, n, |i, j| {
            let v = -m[(i, j)].clone();
            if i == j {
                v + x
            } else {
                v
            }
        });
        ys.push(determinant(&shifted)?);
    }
    // divided differences in place
    let mut coef = ys;
    for level in 1..=n {
        for i in (level..=n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // expand Newton form to monomials
    let mut poly = vec![coef[n].clone()];
    for i in (0..n).rev() {
        let mut next = vec![Rational::zero(); poly.len() + 1];
        for (d, c) in poly.iter().enumerate() {
            next[d + 1] += c;
            next[d] -= c * &xs[i];
        }
        next[0] += &coef[i];
        poly = next;
    }
    Ok(CharPoly::from_coeffs(poly))
}

/// LU factorisation with row pivoting, kept for repeated solves.
#[derive(Clone, Debug)]
pub struct LuFactors {
    dim: usize,
    // L below the diagonal (unit diagonal implied), U on and above
    lu: Vec<Vec<Rational>>,
    perm: Vec<usize>,
}

impl LuFactors {
    pub fn new(m: &RationalMatrix) -> Result<Self> {
        let dim = m.require_square()?;
        let mut lu: Vec<Vec<Rational>> = (0..dim).map(|i| m.row(i).to_vec()).collect();
        let mut perm: Vec<usize> = (0..dim).collect();
        for k in 0..dim {
            let p = (k..dim)
                .find(|&i| !lu[i][k].is_zero())
                .ok_or(Error::Singular { stage: k })?;
            if p != k {
                lu.swap(p, k);
                perm.swap(p, k);
            }
            let (top, bottom) = lu.split_at_mut(k + 1);
            let pivot_row = &top[k];
            for row in bottom.iter_mut() {
                if row[k].is_zero() {
                    continue;
                }
                let factor = &row[k] / &pivot_row[k];
                for j in k + 1..dim {
                    if !pivot_row[j].is_zero() {
                        row[j] -= &factor * &pivot_row[j];
                    }
                }
                row[k] = factor;
            }
        }
        Ok(LuFactors { dim, lu, perm })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn solve(&self, b: &[Rational]) -> Result<Vec<Rational>> {
        if b.len() != self.dim {
            return Err(Error::Dimension(format!(
                "right-hand side has length {}, system has dimension {}",
                b.len(),
                self.dim
            )));
        }
        let mut y: Vec<Rational> = self.perm.iter().map(|&p| b[p].clone()).collect();
        for i in 0..self.dim {
            for j in 0..i {
                if !self.lu[i][j].is_zero() && !y[j].is_zero() {
                    let t = &self.lu[i][j] * &y[j];
                    y[i] -= t;
                }
            }
        }
        for i in (0..self.dim).rev() {
            for j in i + 1..self.dim {
                if !self.lu[i][j].is_zero() && !y[j].is_zero() {
                    let t = &self.lu[i][j] * &y[j];
                    y[i] -= t;
                }
            }
            y[i] = &y[i] / &self.lu[i][i];
        }
        Ok(y)
    }

    /// Column `j` of the inverse.
    pub fn inverse_column(&self, j: usize) -> Result<Vec<Rational>> {
        let mut e = vec![Rational::zero(); self.dim];
        e[j] = Rational::one();
        self.solve(&e)
    }
}

pub fn solve(m: &RationalMatrix, b: &[Rational]) -> Result<Vec<Rational>> {
    LuFactors::new(m)?.solve(b)
}

/// Largest dimension for which [`principal_minor_sum_enumerated`] runs.
pub const MINOR_ENUMERATION_CAP: usize = 16;

/// Sum of all `order x order` principal minors, by enumerating subsets.
pub fn principal_minor_sum_enumerated(m: &RationalMatrix, order: usize) -> Result<Rational> {
    let dim = m.require_square()?;
    if order > dim {
        return Err(Error::OrderOutOfRange { order, dim });
    }
    if dim > MINOR_ENUMERATION_CAP {
        return Err(Error::EnumerationTooLarge {
            dim,
            cap: MINOR_ENUMERATION_CAP,
        });
    }
    let mut total = Rational::zero();
    let mut subset: Vec<usize> = (0..order).collect();
    loop {
        total += determinant(&m.principal_submatrix(&subset))?;
        // next combination in lexicographic order
        let mut i = order;
        loop {
            if i == 0 {
                return Ok(total);
            }
            i -= 1;
            if subset[i] < dim - order + i {
                break;
            }
        }
        subset[i] += 1;
        for j in i + 1..order {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

/// Sum of all `order x order` principal minors. Orders `0`, `N-1` and `N`
/// work at any size; the rest enumerate subsets and respect
/// [`MINOR_ENUMERATION_CAP`].
pub fn principal_minor_sum(m: &RationalMatrix, order: usize) -> Result<Rational> {
    let dim = m.require_square()?;
    match order {
        o if o > dim => Err(Error::OrderOutOfRange { order, dim }),
        0 => Ok(Rational::one()),
        o if o == dim => determinant(m),
        o if o + 1 == dim => Ok(char_poly(m)?.principal_minor_sum(o)),
        _ => principal_minor_sum_enumerated(m, order),
    }
}

/// Determinant with row and column `index` deleted.
pub fn cofactor_det(m: &RationalMatrix, index: usize) -> Result<Rational> {
    determinant(&m.without(index)?)
}

/// `L = D - A`, vertices in the graph's internal order.
pub fn laplacian(g: &ChainGraph) -> RationalMatrix {
    let n = g.vertex_count();
    let mut l = RationalMatrix::zeros(n, n);
    for v in 0..n {
        l[(v, v)] = int(g.degree(v) as i64);
    }
    for &(a, b) in g.edges() {
        l[(a, b)] = int(-1);
        l[(b, a)] = int(-1);
    }
    l
}

/// `D^{-1} L`. Similar to the normalized Laplacian `D^{-1/2} L D^{-1/2}`
/// (conjugate by `D^{1/2}`) so it has the same characteristic polynomial,
/// while staying rational.
pub fn normalized_similar(g: &ChainGraph) -> RationalMatrix {
    let inv_degrees: Vec<Rational> = g.degrees().into_iter().map(|d| rat(1, d as i64)).collect();
    laplacian(g).scale_rows(&inv_degrees)
}

/// Exact two-decimal rendering, rounding halves away from zero.
pub fn two_decimals(value: &Rational) -> String {
    decimal(value, 2)
}

/// Exact fixed-point rendering with `places` decimals, rounding halves away
/// from zero.
pub fn decimal(value: &Rational, places: u32) -> String {
    let scale = BigInt::from(10).pow(places);
    let scaled = value * Rational::from_integer(scale.clone());
    let magnitude = scaled.abs();
    let floor = magnitude.floor().to_integer();
    let frac = &magnitude - Rational::from_integer(floor.clone());
    let rounded = if frac >= rat(1, 2) { floor + 1 } else { floor };
    let (whole, part) = rounded.div_rem(&scale);
    let sign = if value.is_negative() && !rounded_is_zero(&whole, &part) {
        "-"
    } else {
        ""
    };
    if places == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{:0width$}", part, width = places as usize)
    }
}

fn rounded_is_zero(whole: &BigInt, part: &BigInt) -> bool {
    whole.is_zero() && part.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn la_n1() -> RationalMatrix {
        RationalMatrix::from_i64_rows(&[
            vec![2, -2, 0, 0],
            vec![-2, 4, -2, 0],
            vec![0, -2, 4, -2],
            vec![0, 0, -2, 2],
        ])
    }

    #[test]
    fn determinants_of_small_blocks() {
        let w3 = la_n1().leading(3);
        assert_eq!(determinant(&w3).unwrap(), int(8));
        let x2 = RationalMatrix::from_i64_rows(&[vec![4, -2], vec![-2, 4]]);
        assert_eq!(determinant(&x2).unwrap(), int(12));
        assert_eq!(determinant(&RationalMatrix::identity(5)).unwrap(), int(1));
        assert_eq!(determinant(&RationalMatrix::zeros(0, 0)).unwrap(), int(1));
        assert!(matches!(
            determinant(&RationalMatrix::zeros(2, 3)),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn determinant_needs_row_swap() {
        let m = RationalMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(determinant(&m).unwrap(), int(-1));
        let m = RationalMatrix::from_fn(2, 2, |i, j| rat(1 + i as i64, 2 + j as i64));
        // [[1/2, 1/3], [1, 2/3]] is singular
        assert_eq!(determinant(&m).unwrap(), int(0));
    }

    #[test]
    fn char_poly_of_la_at_one_octagon() {
        let p = char_poly(&la_n1()).unwrap();
        assert!(p.coeff(0).is_zero());
        assert_eq!(p.coeff(1).abs(), int(32));
        assert_eq!(p.coeff(2).abs(), int(40));
        assert_eq!(p.coeff(3), int(-12));
        assert_eq!(p, char_poly_by_interpolation(&la_n1()).unwrap());
    }

    #[test]
    fn char_poly_of_zero_matrix() {
        let p = char_poly(&RationalMatrix::zeros(2, 2)).unwrap();
        assert_eq!(p.coeffs(), &[int(0), int(0), int(1)]);
        assert_eq!(char_poly(&RationalMatrix::zeros(0, 0)).unwrap().degree(), 0);
        assert!(char_poly(&RationalMatrix::zeros(1, 2)).is_err());
    }

    #[test]
    fn solve_and_singular_errors() {
        let b = vec![int(3), rat(-1, 2), int(7)];
        assert_eq!(solve(&RationalMatrix::identity(3), &b).unwrap(), b);
        let z = RationalMatrix::zeros(1, 1);
        let err = solve(&z, &[int(1)]).unwrap_err();
        assert_eq!(err, Error::Singular { stage: 0 });
        assert!(err.to_string().contains("stage 0"));
    }

    #[test]
    fn principal_minor_sums() {
        assert_eq!(principal_minor_sum(&la_n1(), 3).unwrap(), int(32));
        assert_eq!(
            principal_minor_sum_enumerated(&la_n1(), 3).unwrap(),
            int(32)
        );
        assert_eq!(principal_minor_sum(&la_n1(), 2).unwrap(), int(40));
        assert_eq!(principal_minor_sum(&la_n1(), 0).unwrap(), int(1));
        assert_eq!(principal_minor_sum(&la_n1(), 1).unwrap(), int(12));
        assert!(matches!(
            principal_minor_sum(&la_n1(), 5),
            Err(Error::OrderOutOfRange { order: 5, dim: 4 })
        ));
        let big = RationalMatrix::identity(17);
        assert!(matches!(
            principal_minor_sum(&big, 3),
            Err(Error::EnumerationTooLarge { .. })
        ));
        assert_eq!(principal_minor_sum(&big, 16).unwrap(), int(17));
    }

    #[test]
    fn cofactors_of_small_laplacians() {
        let g = ChainGraph::build(1).unwrap();
        let l = laplacian(&g);
        for i in 0..8 {
            assert_eq!(cofactor_det(&l, i).unwrap(), int(1024), "cofactor {i}");
        }
        let p2 = RationalMatrix::from_i64_rows(&[vec![1, -1], vec![-1, 1]]);
        assert_eq!(cofactor_det(&p2, 0).unwrap(), int(1));
        assert!(matches!(
            cofactor_det(&p2, 2),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn laplacian_of_one_octagon() {
        let g = ChainGraph::build(1).unwrap();
        let l = laplacian(&g);
        let diag: Vec<Rational> = [3, 4, 4, 3, 3, 4, 4, 3].iter().map(|&d| int(d)).collect();
        assert_eq!(l.diagonal(), diag);
        assert!(l.is_symmetric());
        assert!(l.row_sums().iter().all(Zero::is_zero));
        // (1, 2') is a crossed edge
        assert_eq!(l[(0, 5)], int(-1));
    }

    #[test]
    fn normalized_similar_of_one_octagon() {
        let g = ChainGraph::build(1).unwrap();
        let m = normalized_similar(&g);
        assert_eq!(m[(0, 0)], int(1));
        assert_eq!(m[(0, 1)], rat(-1, 3));
        assert!(m.row_sums().iter().all(Zero::is_zero));
        for n in 1..=3 {
            let g = ChainGraph::build(n).unwrap();
            assert_eq!(normalized_similar(&g).trace(), int(6 * n + 2));
        }
    }

    #[test]
    fn two_decimal_rendering() {
        assert_eq!(two_decimals(&rat(238, 3)), "79.33");
        assert_eq!(two_decimals(&rat(635, 3)), "211.67");
        assert_eq!(two_decimals(&int(18)), "18.00");
        assert_eq!(two_decimals(&rat(1, 200)), "0.01");
        assert_eq!(two_decimals(&rat(-1, 200)), "-0.01");
        assert_eq!(two_decimals(&rat(1, 1000)), "0.00");
        assert_eq!(two_decimals(&rat(-1, 1000)), "0.00");
        assert_eq!(decimal(&rat(9, 23), 6), "0.391304");
        assert_eq!(decimal(&rat(5, 2), 0), "3");
        assert_eq!(decimal(&rat(-5, 8), 1), "-0.6");
    }
}
