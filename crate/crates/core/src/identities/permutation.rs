//! Reduction of Γ₂ and Γ₃ integrals to Γ₁ by permuting exponents.

use serde::Serialize;

use super::Region;
use crate::rational::Q;
use crate::symbolic::AlgExpr;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Reduction {
    pub region: Region,
    pub triple: [Q; 3],
    /// `(−1)^x` read as `e(x/2)`.
    pub phase: AlgExpr,
}

/// `∫_{Γᵢ} (ξ+η−1)^{α1−1} ξ^{α2−1} η^{α3−1} = phase · ∫_{Γ₁}` with the returned triple.
/// Γ₂ uses `ξ = η′, η = 1 − ξ′ − η′`; Γ₃ uses `ξ = 1 − ξ″ − η″, η = ξ″`.
pub fn permutation_reduction(region: Region, t: [Q; 3]) -> Reduction {
    let [a1, a2, a3] = t;
    let two = Q::from_integer(2);
    let (triple, phase) = match region {
        Region::Gamma1 => (t, AlgExpr::one()),
        Region::Gamma2 => ([a3, a1, a2], AlgExpr::unity((a1 + a3) / two)),
        Region::Gamma3 => ([a2, a3, a1], AlgExpr::unity((a1 + a2) / two)),
    };
    Reduction { region: Region::Gamma1, triple, phase }
}
