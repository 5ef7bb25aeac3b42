//! Dense complex matrix helpers shared across the crate.
//!
//! Everything here operates on small matrices (dimension at most
//! `(d+1)^2` for prime `d <= 7`), so dense `nalgebra` storage is used
//! throughout.

use nalgebra::DMatrix;
use num_complex::Complex64;

/// Dense complex matrix.
pub type CMatrix = DMatrix<Complex64>;
/// Dense complex column vector.
pub type CVector = nalgebra::DVector<Complex64>;

/// Shorthand complex constructor.
#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `n x n` complex identity.
pub fn identity(n: usize) -> CMatrix {
    CMatrix::identity(n, n)
}

/// Largest entrywise absolute difference between two matrices.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape(), "shape mismatch");
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Largest entrywise modulus of a matrix.
pub fn max_abs(a: &CMatrix) -> f64 {
    a.iter().map(|x| x.norm()).fold(0.0, f64::max)
}

/// Deviation from Hermiticity, `max |A - A^dag|`.
pub fn hermiticity_defect(a: &CMatrix) -> f64 {
    max_abs_diff(a, &a.adjoint())
}

/// Deviation from unitarity, `max |A^dag A - 1|`.
pub fn unitarity_defect(a: &CMatrix) -> f64 {
    let n = a.nrows();
    max_abs_diff(&(a.adjoint() * a), &identity(n))
}

/// Real part of the trace; imaginary part is returned alongside so
/// callers can assert it vanishes.
pub fn trace_parts(a: &CMatrix) -> (f64, f64) {
    let t = a.trace();
    (t.re, t.im)
}

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// The input is Hermitized as `(A + A^dag)/2` before the solve; callers
/// are expected to have checked the Hermiticity defect beforehand.
pub fn hermitian_eigenvalues(a: &CMatrix) -> Vec<f64> {
    let h = (a + a.adjoint()).scale(0.5);
    let mut eigs: Vec<f64> = h.symmetric_eigenvalues().iter().copied().collect();
    eigs.sort_by(|x, y| x.partial_cmp(y).expect("non-finite eigenvalue"));
    eigs
}

/// Kronecker product `a (x) b`.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermitian_eigenvalues_of_pauli_x() {
        let x = CMatrix::from_row_slice(2, 2, &[c64(0., 0.), c64(1., 0.), c64(1., 0.), c64(0., 0.)]);
        let eigs = hermitian_eigenvalues(&x);
        assert!((eigs[0] + 1.0).abs() < 1e-12);
        assert!((eigs[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn hermitian_eigenvalues_complex_entries() {
        // sigma_y has eigenvalues -1, 1
        let y = CMatrix::from_row_slice(2, 2, &[c64(0., 0.), c64(0., -1.), c64(0., 1.), c64(0., 0.)]);
        let eigs = hermitian_eigenvalues(&y);
        assert!((eigs[0] + 1.0).abs() < 1e-12);
        assert!((eigs[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn kron_dimensions() {
        let a = identity(2);
        let b = identity(3);
        assert_eq!(kron(&a, &b).shape(), (6, 6));
    }
}
