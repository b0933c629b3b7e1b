//! Abstract matrix-basis symbols `b_{mn}` and their rewrite rules.
//!
//! Symbols are unnormalized, `b̃_{mn} = √(m!n!θ^{m+n}) b_{mn}`, so creation
//! steps carry factor 1 and the `√(θ(m+1))` lives in the level shift.
//! Lowering powers `k`, `l` record `a^k⋆b_{mn}⋆ā^l` (the Λ states).

use serde::{Deserialize, Serialize};

use super::{paper_energy, EnergyKind};
use crate::algebra::{NormTag, TwistedElement};
use crate::error::StateError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixBasisElement {
    pub m: u32,
    pub n: u32,
    /// left lowering power `k` in `a^k⋆b_{mn}`
    pub k: u32,
    /// right lowering power `l` in `b_{mn}⋆ā^l`
    pub l: u32,
    pub prefactor: TwistedElement,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixBasisOp {
    /// `ā⋆b`
    RaiseLeft,
    /// `b⋆a`
    RaiseRight,
    /// `a⋆b`
    LowerLeft,
    /// `b⋆ā`
    LowerRight,
    /// `H⋆b`
    HLeft,
    /// `b⋆H`
    HRight,
}

impl MatrixBasisElement {
    pub fn new(m: u32, n: u32) -> Self {
        Self { m, n, k: 0, l: 0, prefactor: TwistedElement::one() }
    }

    pub fn norm_tag(&self) -> NormTag {
        NormTag { m: self.m, n: self.n }
    }

    pub fn is_zero(&self) -> bool {
        self.prefactor.is_zero()
    }

    fn with_prefactor(&self, factor: &TwistedElement) -> Self {
        Self { prefactor: &self.prefactor * factor, ..self.clone() }
    }
}

/// Applies one rewrite rule; returns the new symbol and the scalar factor
/// the rule produced (already folded into the new prefactor).
pub fn matrix_basis_action(
    op: MatrixBasisOp,
    b: &MatrixBasisElement,
) -> Result<(MatrixBasisElement, TwistedElement), StateError> {
    let no_rule = |what: &str| StateError::NoRewrite(format!("{what} on {b:?}"));
    let ladder_op = matches!(
        op,
        MatrixBasisOp::RaiseLeft | MatrixBasisOp::RaiseRight | MatrixBasisOp::LowerLeft | MatrixBasisOp::LowerRight
    );
    // a star product with a coordinate-dependent prefactor does not factor out
    if ladder_op && !b.prefactor.is_coordinate_free() {
        return Err(StateError::NonScalarPrefactor);
    }
    let one = TwistedElement::one();
    match op {
        MatrixBasisOp::RaiseLeft => {
            if b.k > 0 {
                return Err(no_rule("creation after lowering"));
            }
            Ok((MatrixBasisElement { m: b.m + 1, ..b.clone() }, one))
        }
        MatrixBasisOp::RaiseRight => {
            if b.l > 0 {
                return Err(no_rule("creation after lowering"));
            }
            Ok((MatrixBasisElement { n: b.n + 1, ..b.clone() }, one))
        }
        MatrixBasisOp::LowerLeft => {
            if b.m == 0 && b.k == 0 {
                let zero = TwistedElement::zero();
                return Ok((b.with_prefactor(&zero), zero));
            }
            if b.k >= b.m {
                return Err(no_rule("lowering past the top level"));
            }
            Ok((MatrixBasisElement { k: b.k + 1, ..b.clone() }, one))
        }
        MatrixBasisOp::LowerRight => {
            if b.n == 0 && b.l == 0 {
                let zero = TwistedElement::zero();
                return Ok((b.with_prefactor(&zero), zero));
            }
            if b.l >= b.n {
                return Err(no_rule("lowering past the top level"));
            }
            Ok((MatrixBasisElement { l: b.l + 1, ..b.clone() }, one))
        }
        MatrixBasisOp::HLeft => {
            let kind = if b.k == 0 { EnergyKind::RightM { m: b.m } } else { EnergyKind::LambdaMkR { m: b.m, k: b.k } };
            let e = paper_energy(kind)?;
            Ok((b.with_prefactor(&e), e))
        }
        MatrixBasisOp::HRight => {
            let kind = if b.l == 0 { EnergyKind::LeftN { n: b.n } } else { EnergyKind::LambdaNlL { n: b.n, l: b.l } };
            let e = paper_energy(kind)?;
            Ok((b.with_prefactor(&e), e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn creation_and_annihilation() {
        let b00 = MatrixBasisElement::new(0, 0);
        let (b10, f) = matrix_basis_action(MatrixBasisOp::RaiseLeft, &b00).unwrap();
        assert_eq!((b10.m, b10.n), (1, 0));
        assert_eq!(f, TwistedElement::one());
        assert_eq!(b10.norm_tag(), NormTag { m: 1, n: 0 });
        let (z, f) = matrix_basis_action(MatrixBasisOp::LowerLeft, &b00).unwrap();
        assert!(z.is_zero() && f.is_zero());
        let (z, _) = matrix_basis_action(MatrixBasisOp::LowerRight, &b00).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn hamiltonian_rules() {
        let b = MatrixBasisElement::new(3, 2);
        let (_, e) = matrix_basis_action(MatrixBasisOp::HLeft, &b).unwrap();
        assert_eq!(e, paper_energy(EnergyKind::RightM { m: 3 }).unwrap());
        let (after, e) = matrix_basis_action(MatrixBasisOp::HRight, &b).unwrap();
        assert_eq!(e, paper_energy(EnergyKind::LeftN { n: 2 }).unwrap());
        assert_eq!(matrix_basis_action(MatrixBasisOp::RaiseLeft, &after), Err(StateError::NonScalarPrefactor));
    }

    #[test]
    fn lambda_states() {
        let mut b = MatrixBasisElement::new(2, 1);
        for _ in 0..2 {
            b = matrix_basis_action(MatrixBasisOp::LowerLeft, &b).unwrap().0;
        }
        assert!(matrix_basis_action(MatrixBasisOp::LowerLeft, &b).is_err());
        let (_, e) = matrix_basis_action(MatrixBasisOp::HLeft, &b).unwrap();
        assert_eq!(e, paper_energy(EnergyKind::Lambda11R { m: 2 }).unwrap());
    }
}
