//! Torsion formulas for homotopy equivalences and invertible cobordisms,
//! as standalone operations on Whitehead classes.
//!
//! Induced isomorphisms are modeled as group automorphisms t -> t^a of the
//! fixed cyclic group; the manifold dimension enters only through the sign
//! (-1)^n in the duality and norm formulas.

use crate::error::Result;
use crate::group_ring::inverse_mod;
use crate::whitehead::WhiteheadClass;

/// Carries the manifold dimension n, which drives the sign (-1)^n.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DimensionContext {
    dim: usize,
}

impl DimensionContext {
    pub fn new(dim: usize) -> Self {
        assert!(dim >= 1, "manifold dimension must be >= 1");
        Self { dim }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// (-1)^n as a sign on classes: identity for even n, negation for odd n.
    fn signed(&self, c: &WhiteheadClass) -> WhiteheadClass {
        if self.dim.is_multiple_of(2) {
            c.clone()
        } else {
            c.negate()
        }
    }
}

/// tau(g o f) = tau(f) + (f_*)^{-1}(tau(g)).
pub fn compose_homotopy_torsion(
    tau_f: &WhiteheadClass,
    tau_g: &WhiteheadClass,
    f_star_inverse: i64,
) -> Result<WhiteheadClass> {
    tau_f.add(&tau_g.push_forward(f_star_inverse)?)
}

/// tau(f x id_Z) = chi(Z) . tau(f).
pub fn product_with_space(tau: &WhiteheadClass, euler_char: i64) -> WhiteheadClass {
    tau.scale(euler_char)
}

/// tau(W o W', M) = tau(W, M) + h_*(tau(W', N)).
pub fn compose_cobordism_torsion(
    tau_w: &WhiteheadClass,
    tau_wp: &WhiteheadClass,
    h_star: i64,
) -> Result<WhiteheadClass> {
    tau_w.add(&tau_wp.push_forward(h_star)?)
}

/// Torsion of the dual cobordism, measured at the other end: the duality
/// formula h_*(tau(W, N)) = (-1)^n conj(tau(W, M)) solved for tau(W, N).
pub fn dual_torsion(
    tau: &WhiteheadClass,
    ctx: DimensionContext,
    h_star: i64,
) -> Result<WhiteheadClass> {
    let n = tau.group().order();
    let h_inv = inverse_mod(h_star, n)?;
    ctx.signed(&tau.bar()).push_forward(h_inv as i64)
}

/// tau + (-1)^n conj(tau); its image is the subgroup N(M) of torsions of
/// cobordisms of the form W o dual(W).
pub fn norm_element(tau: &WhiteheadClass, ctx: DimensionContext) -> WhiteheadClass {
    tau.add(&ctx.signed(&tau.bar())).expect("same group")
}

/// Difference of torsions across a concordance X between two invertible
/// cobordisms: the concordance contributes tau(X) + (-1)^n conj(tau(X)),
/// with the fixed end-identification acting as the identity in this model.
pub fn concordance_residue(sigma_x: &WhiteheadClass, ctx: DimensionContext) -> WhiteheadClass {
    norm_element(sigma_x, ctx)
}
