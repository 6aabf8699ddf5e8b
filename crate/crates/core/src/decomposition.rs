//! Block diagonalisation of the Laplacian along the mirror involution.
//!
//! With row one first and row two second, `L = [[B, C], [C, B]]` where
//! `B = L_{V1V1}` and `C = L_{V1V2}`. Conjugating by the orthogonal
//! `(1/√2) [[I, I], [I, -I]]` gives `diag(B + C, B - C)`; the transform is
//! never formed, only the two blocks. The normalized Laplacian splits the same
//! way. Its rational stand-in `D^{-1} L` has blocks `D_1^{-1} B` and
//! `D_1^{-1} C`, because mirrored vertices share a degree.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::ChainGraph;
use crate::matrix::{char_poly, laplacian, normalized_similar, CharPoly, Rational, RationalMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionBundle {
    pub l_v1v1: RationalMatrix,
    pub l_v1v2: RationalMatrix,
    /// `L_A = L_{V1V1} + L_{V1V2}`, carries the zero eigenvalue.
    pub l_a: RationalMatrix,
    /// `L_S = L_{V1V1} - L_{V1V2}`, diagonal for these chains.
    pub l_s: RationalMatrix,
    /// `D_1^{-1} L_A`, similar to the normalized `𝓛_A`.
    pub nl_a_similar: RationalMatrix,
    /// `D_1^{-1} L_S`, equal to `𝓛_S` since both are diagonal.
    pub nl_s: RationalMatrix,
}

/// Splits `L(O_n)` into its symmetric and antisymmetric blocks.
///
/// Fails if the graph is not mirror symmetric with row one first.
pub fn decompose(g: &ChainGraph) -> Result<DecompositionBundle> {
    let l = laplacian(g);
    let h = g.row_len();
    let first: Vec<usize> = (0..h).collect();
    let second: Vec<usize> = (h..2 * h).collect();
    let l_v1v1 = l.submatrix(&first, &first);
    let l_v1v2 = l.submatrix(&first, &second);
    if l.submatrix(&second, &second) != l_v1v1 || l.submatrix(&second, &first) != l_v1v2 {
        return Err(Error::Construction(
            "Laplacian blocks are not mirror symmetric (L_V1V1 != L_V2V2 or L_V1V2 != L_V2V1)"
                .into(),
        ));
    }
    let l_a = &l_v1v1 + &l_v1v2;
    let l_s = &l_v1v1 - &l_v1v2;
    let inv_deg: Vec<Rational> = l_v1v1.diagonal().iter().map(|d| d.recip()).collect();
    let nl_a_similar = l_a.scale_rows(&inv_deg);
    let nl_s = l_s.scale_rows(&inv_deg);
    Ok(DecompositionBundle {
        l_v1v1,
        l_v1v2,
        l_a,
        l_s,
        nl_a_similar,
        nl_s,
    })
}

/// Checks `P_L = P_{L_A} P_{L_S}` and the normalized analogue for a given
/// bundle. Exact coefficient equality.
pub fn factorization_holds(g: &ChainGraph, bundle: &DecompositionBundle) -> Result<bool> {
    let full = char_poly(&laplacian(g))?;
    let split = char_poly(&bundle.l_a)?.product(&char_poly(&bundle.l_s)?);
    if full != split {
        return Ok(false);
    }
    let full = char_poly(&normalized_similar(g))?;
    let split = char_poly(&bundle.nl_a_similar)?.product(&char_poly(&bundle.nl_s)?);
    Ok(full == split)
}

pub fn verify_factorization(g: &ChainGraph) -> Result<bool> {
    factorization_holds(g, &decompose(g)?)
}

/// `Σ 1/r` over the nonzero roots of a polynomial with a simple root at zero.
///
/// With `p(x) = x q(x)`, the sum is `-q'(0)/q(0) = -c_2/c_1`. In the
/// `a_k` notation (`a_{N-1} = c_1`, `a_{N-2} = c_2`) this is
/// `(-1)^{N-2} a_{N-2} / ((-1)^{N-1} a_{N-1})`.
pub fn reciprocal_nonzero_eigensum(p: &CharPoly) -> Result<Rational> {
    if !p.coeff(0).is_zero() {
        return Err(Error::ZeroMultiplicity(
            "constant coefficient is nonzero".into(),
        ));
    }
    let c1 = p.coeff(1);
    if c1.is_zero() {
        return Err(Error::ZeroMultiplicity("zero is a repeated root".into()));
    }
    Ok(-p.coeff(2) / c1)
}

/// `Σ 1/d_ii` for a diagonal matrix with nonzero diagonal.
pub fn reciprocal_eigensum_diagonal(m: &RationalMatrix) -> Result<Rational> {
    if !m.is_diagonal() {
        return Err(Error::NotInvertibleDiagonal { index: 0 });
    }
    m.diagonal()
        .iter()
        .enumerate()
        .try_fold(Rational::zero(), |acc, (i, d)| {
            if d.is_zero() {
                Err(Error::NotInvertibleDiagonal { index: i })
            } else {
                Ok(acc + d.recip())
            }
        })
}

/// `Σ 1/r` over all roots of a polynomial with nonzero constant term:
/// `-c_1/c_0`.
pub fn reciprocal_eigensum(p: &CharPoly) -> Result<Rational> {
    let c0 = p.coeff(0);
    if c0.is_zero() {
        return Err(Error::ZeroMultiplicity("zero is a root".into()));
    }
    Ok(-p.coeff(1) / c0)
}

/// `Σ 1/r` over the spectrum of the symmetric-part block, taking the
/// diagonal shortcut when the block is diagonal.
pub fn block_reciprocal_eigensum(m: &RationalMatrix) -> Result<Rational> {
    if m.is_diagonal() {
        reciprocal_eigensum_diagonal(m)
    } else {
        reciprocal_eigensum(&char_poly(m)?)
    }
}

/// Product of the nonzero roots of a polynomial with a simple root at zero:
/// `(-1)^{N-1} c_1`.
pub fn nonzero_root_product(p: &CharPoly) -> Result<Rational> {
    if !p.coeff(0).is_zero() || p.coeff(1).is_zero() {
        return Err(Error::ZeroMultiplicity(
            "expected a simple root at zero".into(),
        ));
    }
    let c1 = p.coeff(1);
    Ok(if (p.degree() - 1).is_even() { c1 } else { -c1 })
}

/// Product of all roots: `(-1)^N c_0`.
pub fn root_product(p: &CharPoly) -> Rational {
    let c0 = p.coeff(0);
    if p.degree().is_even() {
        c0
    } else {
        -c0
    }
}

/// Leading principal minors `det M_0 = 1, det M_1, …, det M_N`.
pub fn leading_principal_minors(m: &RationalMatrix) -> Result<Vec<Rational>> {
    let dim = m.rows();
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let mut out = vec![Rational::one()];
    for k in 1..=dim {
        out.push(crate::matrix::determinant(&m.leading(k))?);
    }
    Ok(out)
}
