//! Triangular completely positive factorizations.
//!
//! If every left (right) almost principal 2x2 submatrix of a CP matrix has
//! `det_plus >= det_minus`, the normalized core factors as `U Uᵀ` with `U`
//! upper triangular (`C Cᵀ` lower triangular). The converse fails, so a
//! failed precondition is reported as a refusal, never as impossibility —
//! impossibility proofs live in the brute-force oracle. Every 3x3 CP matrix
//! over a totally ordered normal carrier admits at least one of the two
//! factorizations, and symmetric TN2 matrices admit both.

use crate::cp::{is_cp, normalize, CpVerdict};
use crate::error::{Error, Result};
use crate::matrix::{ApmEntry, ApmSide, Matrix, Tn2Violation};
use crate::value::Value;

/// Direction of a triangular factorization: `UL` means `A = U Uᵀ` with `U`
/// upper triangular, `LU` means `A = C Cᵀ` with `C` lower triangular.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriMode {
    Ul,
    Lu,
}

impl TriMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            TriMode::Ul => "UL",
            TriMode::Lu => "LU",
        }
    }
}

/// A verifiable triangular factorization: `gram(factor) = A` with `factor`
/// triangular in the declared direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularCertificate {
    pub mode: TriMode,
    pub factor: Matrix,
}

/// Result of a triangular factorization attempt. A refusal means the
/// almost-principal precondition failed at the reported submatrix; the
/// matrix may still be factorizable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorOutcome {
    Factored(TriangularCertificate),
    Refused(ApmEntry),
}

impl FactorOutcome {
    pub fn certificate(self) -> Option<TriangularCertificate> {
        match self {
            FactorOutcome::Factored(c) => Some(c),
            FactorOutcome::Refused(_) => None,
        }
    }

    pub fn is_factored(&self) -> bool {
        matches!(self, FactorOutcome::Factored(_))
    }
}

/// Result of the TN2 double factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tn2Outcome {
    Both {
        ul: TriangularCertificate,
        lu: TriangularCertificate,
    },
    Refused(Tn2Violation),
}

fn require_cp(a: &Matrix) -> Result<()> {
    match is_cp(a)? {
        CpVerdict::Cp => Ok(()),
        CpVerdict::NotCp { i, j } => Err(Error::NotCompletelyPositive { i, j }),
    }
}

/// Build the triangular factor of the stripped, normalized core, scaled by
/// `D`, and re-embedded over the zero rows.
fn build_triangular(a: &Matrix, mode: TriMode) -> Result<Matrix> {
    let alg = a.algebra().clone();
    let n = a.rows();
    let kept: Vec<usize> = (0..n).filter(|&i| !alg.is_zero(a.get(i, i))).collect();
    let local: Vec<Option<usize>> = {
        let mut v = vec![None; n];
        for (li, &i) in kept.iter().enumerate() {
            v[i] = Some(li);
        }
        v
    };
    let (diagonal, core) = if kept.is_empty() {
        (Vec::new(), None)
    } else {
        let stripped = Matrix::from_fn(alg.clone(), kept.len(), kept.len(), |i, j| {
            a.get(kept[i], kept[j]).clone()
        })?;
        let norm = normalize(&stripped)?;
        (norm.diagonal, Some(norm.core))
    };
    let factor = Matrix::from_fn(alg.clone(), n, n, |i, j| {
        let (Some(li), Some(lj)) = (local[i], local[j]) else {
            return alg.zero();
        };
        let wrong_side = match mode {
            TriMode::Ul => li > lj,
            TriMode::Lu => li < lj,
        };
        if wrong_side {
            alg.zero()
        } else if li == lj {
            diagonal[li].clone()
        } else {
            alg.mul(&diagonal[li], core.as_ref().unwrap().get(li, lj))
        }
    })?;
    // The theorem guarantees gram(factor) = A once the precondition holds;
    // a mismatch here means the algebra flags lied.
    let gram = factor.gram();
    if &gram != a {
        return Err(Error::Internal(format!(
            "{} construction failed to reproduce the matrix",
            mode.as_str()
        )));
    }
    Ok(factor)
}

/// Upper-triangular factorization `A = U Uᵀ`, available when `A` is CP and
/// every left almost principal 2x2 submatrix has `det_plus >= det_minus`.
pub fn ul_factor(a: &Matrix) -> Result<FactorOutcome> {
    require_cp(a)?;
    if let Some(v) = a.almost_principal_violation(ApmSide::Left)? {
        return Ok(FactorOutcome::Refused(v));
    }
    Ok(FactorOutcome::Factored(TriangularCertificate {
        mode: TriMode::Ul,
        factor: build_triangular(a, TriMode::Ul)?,
    }))
}

/// Lower-triangular factorization `A = C Cᵀ`, available when `A` is CP and
/// every right almost principal 2x2 submatrix has `det_plus >= det_minus`.
pub fn lu_factor(a: &Matrix) -> Result<FactorOutcome> {
    require_cp(a)?;
    if let Some(v) = a.almost_principal_violation(ApmSide::Right)? {
        return Ok(FactorOutcome::Refused(v));
    }
    Ok(FactorOutcome::Factored(TriangularCertificate {
        mode: TriMode::Lu,
        factor: build_triangular(a, TriMode::Lu)?,
    }))
}

/// The 3x3 dichotomy: every 3x3 CP matrix over a totally ordered normal
/// carrier is LU- or UL-completely positive. Dispatches on the inequality
/// `a_11 ⊗ a_23 >= a_12 ⊗ a_13` (the right-APM condition), preferring LU
/// when both directions apply.
pub fn factor_3x3(a: &Matrix) -> Result<TriangularCertificate> {
    a.require_square()?;
    if a.rows() != 3 {
        return Err(Error::DimensionMismatch(format!(
            "expected a 3x3 matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let alg = a.algebra();
    if !(alg.totally_ordered() && alg.normal()) {
        return Err(Error::UnsupportedCarrier {
            requirement: "totally ordered normal",
            carrier: alg.kind_name(),
        });
    }
    require_cp(a)?;
    let holds = |lhs: &Value, rhs: &Value| alg.le(lhs, rhs);
    let i1 = holds(
        &alg.mul(a.get(0, 1), a.get(0, 2)),
        &alg.mul(a.get(0, 0), a.get(1, 2)),
    );
    let i2 = holds(
        &alg.mul(a.get(0, 1), a.get(1, 2)),
        &alg.mul(a.get(1, 1), a.get(0, 2)),
    );
    let i3 = holds(
        &alg.mul(a.get(0, 2), a.get(1, 2)),
        &alg.mul(a.get(2, 2), a.get(0, 1)),
    );
    if [i1, i2, i3].iter().filter(|&&b| b).count() < 2 {
        return Err(Error::Internal(
            "fewer than two of the three 3x3 inequalities hold for a CP matrix".into(),
        ));
    }
    let outcome = if i1 { lu_factor(a)? } else { ul_factor(a)? };
    match outcome {
        FactorOutcome::Factored(cert) => Ok(cert),
        FactorOutcome::Refused(v) => Err(Error::Internal(format!(
            "3x3 dispatch refused at {}|{} despite the dichotomy",
            v.alpha, v.beta
        ))),
    }
}

/// Check triangularity in the declared direction and `gram(factor) = A`.
pub fn verify_triangular(a: &Matrix, cert: &TriangularCertificate) -> Result<bool> {
    if a.algebra() != cert.factor.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    a.require_square()?;
    cert.factor.require_square()?;
    if a.rows() != cert.factor.rows() {
        return Err(Error::DimensionMismatch(format!(
            "matrix side {} but factor side {}",
            a.rows(),
            cert.factor.rows()
        )));
    }
    let alg = a.algebra();
    let n = a.rows();
    for i in 0..n {
        for j in 0..n {
            let wrong_side = match cert.mode {
                TriMode::Ul => i > j,
                TriMode::Lu => i < j,
            };
            if wrong_side && !alg.is_zero(cert.factor.get(i, j)) {
                return Ok(false);
            }
        }
    }
    Ok(&cert.factor.gram() == a)
}

/// Both triangular factorizations of a symmetric TN2 matrix. TN2 implies
/// complete positivity and both almost-principal conditions, so a refusal
/// carries the violating 2x2 submatrix instead.
pub fn tn2_both(a: &Matrix) -> Result<Tn2Outcome> {
    a.require_square()?;
    let alg = a.algebra();
    if !alg.normal() {
        return Err(Error::UnsupportedCarrier {
            requirement: "normal",
            carrier: alg.kind_name(),
        });
    }
    if let Some((i, j)) = a.symmetry_defect() {
        return Err(Error::NotSymmetric { i, j });
    }
    if let Some(v) = a.tn2_violation() {
        return Ok(Tn2Outcome::Refused(v));
    }
    let ul = match ul_factor(a)? {
        FactorOutcome::Factored(c) => c,
        FactorOutcome::Refused(v) => {
            return Err(Error::Internal(format!(
                "TN2 held but the left condition failed at {}|{}",
                v.alpha, v.beta
            )))
        }
    };
    let lu = match lu_factor(a)? {
        FactorOutcome::Factored(c) => c,
        FactorOutcome::Refused(v) => {
            return Err(Error::Internal(format!(
                "TN2 held but the right condition failed at {}|{}",
                v.alpha, v.beta
            )))
        }
    };
    Ok(Tn2Outcome::Both { ul, lu })
}
