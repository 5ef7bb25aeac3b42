//! Mutually unbiased bases for prime dimension and the unitaries built
//! from their rank-1 projectors.
//!
//! For `d = 2` the three Pauli eigenbases are hardcoded; for odd prime
//! `d` the computational basis is completed by the `d` quadratic-phase
//! bases with components `omega^(m j^2 + k j) / sqrt(d)`. Every
//! construction is re-verified numerically before it is returned, so a
//! formula regression cannot silently corrupt downstream results.

use crate::linalg::{c64, identity, max_abs_diff, unitarity_defect, CMatrix, CVector};
use num_complex::Complex64;
use std::f64::consts::TAU;

/// Tolerance for exact-algebra identities at `d <= 7`.
pub const ALGEBRA_TOL: f64 = 1e-12;

/// Errors from MUB and unitary construction.
#[derive(Debug, Clone, thiserror::Error)]
pub enum MubError {
    #[error("dimension must be a prime >= 2, got {0}")]
    NonPrimeDimension(usize),
    #[error("MUB construction failed numerical self-check: {0}")]
    ConstructionFailure(String),
    #[error("basis index {index} out of range for {count} bases")]
    IndexOutOfRange { index: usize, count: usize },
}

/// Validated prime dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dim(usize);

impl Dim {
    pub fn new(d: usize) -> Result<Dim, MubError> {
        if d >= 2 && is_prime(d) {
            Ok(Dim(d))
        } else {
            Err(MubError::NonPrimeDimension(d))
        }
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0
    }

    /// Number of bases / channel eigenvalue slots, `d + 1`.
    #[inline]
    pub fn num_bases(self) -> usize {
        self.0 + 1
    }
}

impl std::fmt::Display for Dim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// A maximal family of `d + 1` mutually unbiased bases.
///
/// Basis `alpha` is stored as a `d x d` matrix whose columns are the
/// basis vectors.
#[derive(Debug, Clone)]
pub struct MubFamily {
    dim: Dim,
    bases: Vec<CMatrix>,
}

impl MubFamily {
    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn bases(&self) -> &[CMatrix] {
        &self.bases
    }

    /// Column `k` of basis `alpha` (0-based slot index).
    pub fn vector(&self, alpha: usize, k: usize) -> CVector {
        CVector::from_column_slice(self.bases[alpha].column(k).as_slice())
    }

    /// Largest deviation of `|<psi_k^a | psi_l^b>|^2` from its target
    /// value: `delta_kl` within one basis, `1/d` across bases.
    pub fn unbiasedness_deviation(&self) -> f64 {
        let d = self.dim.get();
        let inv_d = 1.0 / d as f64;
        let mut worst = 0.0f64;
        for (a, basis_a) in self.bases.iter().enumerate() {
            for (b, basis_b) in self.bases.iter().enumerate() {
                let overlaps = basis_a.adjoint() * basis_b;
                for k in 0..d {
                    for l in 0..d {
                        let sq = overlaps[(k, l)].norm_sqr();
                        let target = if a == b {
                            if k == l {
                                1.0
                            } else {
                                0.0
                            }
                        } else {
                            inv_d
                        };
                        worst = worst.max((sq - target).abs());
                    }
                }
            }
        }
        worst
    }
}

/// Build the maximal MUB family for prime `d`.
pub fn build_mubs(dim: Dim) -> Result<MubFamily, MubError> {
    let d = dim.get();
    let bases = if d == 2 { qubit_bases() } else { odd_prime_bases(d) };
    let family = MubFamily { dim, bases };
    let deviation = family.unbiasedness_deviation();
    if deviation > ALGEBRA_TOL {
        return Err(MubError::ConstructionFailure(format!(
            "unbiasedness deviation {deviation:.3e} exceeds {ALGEBRA_TOL:.0e} for d = {d}"
        )));
    }
    Ok(family)
}

/// Pauli eigenbases in the order (sigma_z, sigma_x, sigma_y).
fn qubit_bases() -> Vec<CMatrix> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    vec![
        // computational basis = sigma_z eigenbasis
        CMatrix::from_column_slice(2, 2, &[c64(1., 0.), c64(0., 0.), c64(0., 0.), c64(1., 0.)]),
        // sigma_x eigenbasis
        CMatrix::from_column_slice(2, 2, &[c64(s, 0.), c64(s, 0.), c64(s, 0.), c64(-s, 0.)]),
        // sigma_y eigenbasis
        CMatrix::from_column_slice(2, 2, &[c64(s, 0.), c64(0., s), c64(s, 0.), c64(0., -s)]),
    ]
}

/// Computational basis plus the `d` quadratic-phase bases
/// `psi_k^(m)(j) = omega^(m j^2 + k j) / sqrt(d)` for odd prime `d`.
fn odd_prime_bases(d: usize) -> Vec<CMatrix> {
    let mut bases = Vec::with_capacity(d + 1);
    bases.push(identity(d));
    let norm = 1.0 / (d as f64).sqrt();
    for m in 0..d {
        let mut basis = CMatrix::zeros(d, d);
        for k in 0..d {
            for j in 0..d {
                let exponent = ((m * j * j + k * j) % d) as f64;
                let phase = TAU * exponent / d as f64;
                basis[(j, k)] = Complex64::from_polar(norm, phase);
            }
        }
        bases.push(basis);
    }
    bases
}

/// The unitaries `U_alpha = sum_l omega^l P_l^(alpha)`.
#[derive(Debug, Clone)]
pub struct UnitaryFamily {
    dim: Dim,
    unitaries: Vec<CMatrix>,
}

impl UnitaryFamily {
    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn unitaries(&self) -> &[CMatrix] {
        &self.unitaries
    }

    pub fn unitary(&self, alpha: usize) -> Result<&CMatrix, MubError> {
        self.unitaries.get(alpha).ok_or(MubError::IndexOutOfRange {
            index: alpha,
            count: self.unitaries.len(),
        })
    }

    /// `U_alpha^k` by repeated multiplication (`k < d`, so this stays cheap).
    pub fn power(&self, alpha: usize, k: usize) -> Result<CMatrix, MubError> {
        let u = self.unitary(alpha)?;
        let mut acc = identity(self.dim.get());
        for _ in 0..k {
            acc = &acc * u;
        }
        Ok(acc)
    }
}

/// Build the `d + 1` unitaries from a verified MUB family.
pub fn build_unitaries(family: &MubFamily) -> Result<UnitaryFamily, MubError> {
    let d = family.dim().get();
    let omega_powers: Vec<Complex64> = (0..d)
        .map(|l| Complex64::from_polar(1.0, TAU * l as f64 / d as f64))
        .collect();
    let mut unitaries = Vec::with_capacity(d + 1);
    for basis in family.bases() {
        let mut u = CMatrix::zeros(d, d);
        for l in 0..d {
            let col = basis.column(l);
            // omega^l |psi_l><psi_l|
            for r in 0..d {
                for c in 0..d {
                    u[(r, c)] += omega_powers[l] * col[r] * col[c].conj();
                }
            }
        }
        unitaries.push(u);
    }
    let out = UnitaryFamily {
        dim: family.dim(),
        unitaries,
    };
    for (alpha, u) in out.unitaries.iter().enumerate() {
        let defect = unitarity_defect(u);
        if defect > ALGEBRA_TOL {
            return Err(MubError::ConstructionFailure(format!(
                "U_{alpha} unitarity defect {defect:.3e}"
            )));
        }
        let pow_defect = max_abs_diff(&out.power(alpha, d)?, &identity(d));
        if pow_defect > ALGEBRA_TOL {
            return Err(MubError::ConstructionFailure(format!(
                "U_{alpha}^{d} deviates from identity by {pow_defect:.3e}"
            )));
        }
    }
    Ok(out)
}

/// The conjugation map `sum_{k=1}^{d-1} U_alpha^k rho (U_alpha^k)^dag`.
///
/// The power `k` runs on both sides of `rho`; this is the reading under
/// which `U_beta^k` are eigenoperators with eigenvalue `d - 1` for
/// `beta = alpha` and `-1` otherwise.
pub fn conjugation_map(u: &UnitaryFamily, alpha: usize, rho: &CMatrix) -> Result<CMatrix, MubError> {
    let d = u.dim().get();
    u.unitary(alpha)?;
    let mut out = CMatrix::zeros(d, d);
    for k in 1..d {
        let uk = u.power(alpha, k)?;
        out += &uk * rho * uk.adjoint();
    }
    Ok(out)
}

/// Generator block `L_alpha[rho] = (1/d) (U_alpha[rho] - (d-1) rho)`.
pub fn generator_block(u: &UnitaryFamily, alpha: usize, rho: &CMatrix) -> Result<CMatrix, MubError> {
    let d = u.dim().get() as f64;
    let conj = conjugation_map(u, alpha, rho)?;
    Ok((conj - rho.scale(d - 1.0)).unscale(d))
}
