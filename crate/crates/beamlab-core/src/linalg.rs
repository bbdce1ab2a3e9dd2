//! Dense complex linear algebra helpers.
//!
//! Thin wrappers around nalgebra specialised to the Hermitian matrices
//! this crate lives on. Unitaries are always produced by exponentiating
//! an anti-Hermitian generator through its eigendecomposition, which
//! keeps them exactly unitary regardless of truncation.

use nalgebra::{Complex, DMatrix, DVector};

use crate::error::{Error, Result};

pub type C64 = Complex<f64>;
pub type CMat = DMatrix<C64>;
pub type CVec = DVector<C64>;

pub fn c(re: f64, im: f64) -> C64 {
    Complex::new(re, im)
}

pub fn cr(re: f64) -> C64 {
    Complex::new(re, 0.0)
}

/// Largest entry-wise |a - b|.
pub fn max_abs_diff(a: &CMat, b: &CMat) -> f64 {
    debug_assert_eq!(a.shape(), b.shape());
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Largest entry-wise |a - a^dagger|.
pub fn hermiticity_defect(a: &CMat) -> f64 {
    let n = a.nrows();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((a[(i, j)] - a[(j, i)].conj()).norm());
        }
    }
    worst
}

pub fn trace(a: &CMat) -> C64 {
    a.diagonal().iter().sum()
}

/// Tr[a b] without forming the product matrix.
pub fn trace_product(a: &CMat, b: &CMat) -> C64 {
    debug_assert_eq!(a.ncols(), b.nrows());
    let n = a.nrows();
    let mut acc = C64::new(0.0, 0.0);
    for i in 0..n {
        for k in 0..a.ncols() {
            acc += a[(i, k)] * b[(k, i)];
        }
    }
    acc
}

/// Eigendecomposition of a Hermitian matrix. Returns eigenvalues in
/// ascending order with matching eigenvector columns.
pub fn eigh(m: &CMat) -> Result<(Vec<f64>, CMat)> {
    if m.nrows() != m.ncols() {
        return Err(Error::DimensionMismatch(format!(
            "eigh needs a square matrix, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    let se = m.clone().symmetric_eigen();
    let n = se.eigenvalues.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| se.eigenvalues[i].partial_cmp(&se.eigenvalues[j]).unwrap());
    let vals: Vec<f64> = order.iter().map(|&i| se.eigenvalues[i]).collect();
    let mut vecs = CMat::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        vecs.set_column(dst, &se.eigenvectors.column(src));
    }
    Ok((vals, vecs))
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn eigvalsh(m: &CMat) -> Result<Vec<f64>> {
    Ok(eigh(m)?.0)
}

/// exp(G) for an anti-Hermitian generator G (G^dagger = -G).
///
/// Writes G = iH with H Hermitian and diagonalizes H, so the result is
/// exactly unitary. Errors if G is not anti-Hermitian to 1e-10.
pub fn expm_antihermitian(g: &CMat) -> Result<CMat> {
    let n = g.nrows();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            worst = worst.max((g[(i, j)] + g[(j, i)].conj()).norm());
        }
    }
    if worst > 1e-10 {
        return Err(Error::Numerical(format!(
            "generator is not anti-Hermitian (defect {worst:.3e})"
        )));
    }
    // H = -iG is Hermitian; exp(G) = exp(iH) = V e^{i lambda} V^dagger.
    let h = g.map(|z| c(0.0, -1.0) * z);
    let (vals, vecs) = eigh(&h)?;
    let mut phased = vecs.clone();
    for (k, &lam) in vals.iter().enumerate() {
        let phase = c(0.0, lam).exp();
        for r in 0..n {
            phased[(r, k)] *= phase;
        }
    }
    Ok(&phased * vecs.adjoint())
}

/// Kronecker product with row index i1*dim2 + i2.
pub fn kron(a: &CMat, b: &CMat) -> CMat {
    a.kronecker(b)
}

/// Fidelity-style overlap <psi| rho |psi>.
pub fn pure_overlap(psi: &CVec, rho: &CMat) -> f64 {
    let v = rho * psi;
    psi.dotc(&v).re
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigh_recovers_hermitian_matrix() {
        let m = CMat::from_row_slice(
            2,
            2,
            &[c(2.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(3.0, 0.0)],
        );
        let (vals, vecs) = eigh(&m).unwrap();
        assert!(vals[0] <= vals[1]);
        let diag = CMat::from_diagonal(&CVec::from_iterator(2, vals.iter().map(|&v| cr(v))));
        let rebuilt = &vecs * diag * vecs.adjoint();
        assert!(max_abs_diff(&rebuilt, &m) < 1e-12);
    }

    #[test]
    fn expm_of_antihermitian_is_unitary() {
        let g = CMat::from_row_slice(
            2,
            2,
            &[c(0.0, 0.3), c(0.5, 0.2), c(-0.5, 0.2), c(0.0, -0.7)],
        );
        let u = expm_antihermitian(&g).unwrap();
        let id = CMat::identity(2, 2);
        assert!(max_abs_diff(&(&u * u.adjoint()), &id) < 1e-12);
    }

    #[test]
    fn expm_rejects_non_antihermitian() {
        let g = CMat::identity(2, 2);
        assert!(expm_antihermitian(&g).is_err());
    }
}
