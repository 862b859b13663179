//! Tri-valued answers with literature anchors.
//!
//! The theorem landscape is dimension-dependent and partly open; a boolean
//! cannot encode that honestly. Every verdict carries a citation, and open
//! answers cite the open question they defer to.

use std::fmt;

/// {Yes, No, Open}.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
    Open,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::Yes => "yes",
            Answer::No => "no",
            Answer::Open => "open",
        })
    }
}

/// An answer plus the result it rests on, with an optional caveat such as
/// "relative to the Bass-unit subgroup".
#[derive(Clone, PartialEq, Eq, Debug, serde::Serialize)]
pub struct Verdict {
    pub answer: Answer,
    pub citation: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub caveat: Option<String>,
}

impl Verdict {
    pub fn yes(citation: &'static str) -> Self {
        Self::new(Answer::Yes, citation)
    }

    pub fn no(citation: &'static str) -> Self {
        Self::new(Answer::No, citation)
    }

    pub fn open(citation: &'static str) -> Self {
        Self::new(Answer::Open, citation)
    }

    fn new(answer: Answer, citation: &'static str) -> Self {
        assert!(!citation.is_empty(), "verdicts must carry a citation");
        Self {
            answer,
            citation,
            caveat: None,
        }
    }

    pub fn with_caveat(mut self, caveat: impl Into<String>) -> Self {
        self.caveat = Some(caveat.into());
        self
    }

    pub fn caveat_if(self, condition: bool, caveat: impl Into<String>) -> Self {
        if condition {
            self.with_caveat(caveat)
        } else {
            self
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}  [{}]", self.answer, self.citation)?;
        if let Some(c) = &self.caveat {
            write!(f, "  ({c})")?;
        }
        Ok(())
    }
}

/// The anchor registry: every citation a verdict can carry lives here, so
/// tests can assert that no verdict invents its own wording.
pub mod citations {
    pub const INVERTIBLE_IS_H: &str =
        "an invertible cobordism is an h-cobordism (both ends are homotopy retracts of the whole)";
    pub const H_IS_INVERTIBLE_OFF_DIM3: &str = "h-cobordisms are invertible in dimension >= 5 (torsion realization), dimension 4 (Stallings), and trivially in dimension <= 2";
    pub const H_INVERTIBLE_DIM3_OPEN: &str =
        "whether every smooth h-cobordism between closed 3-manifolds is invertible is an open question";

    pub const TORSION_BIJECTION_DIM_GE5: &str = "for dimension >= 5, Whitehead torsion is a complete invariant of invertible cobordisms over M (h-cobordism classification; Wh(M) bijection)";
    pub const B_SINGLETON_DIM_LE2: &str = "over a manifold of dimension <= 2 every invertible cobordism is a product (classification of surfaces; Perelman's theorem for spherical ends)";
    pub const TORSION_SEPARATES: &str =
        "Whitehead torsion is an invariant of the cobordism class; unequal torsions separate";
    pub const SMOOTH_POINCARE_DIM4: &str =
        "equivalent to the smooth Poincare conjecture in dimension 4";
    pub const B_DIM4_OPEN: &str =
        "invertible cobordisms over a closed 4-manifold are not classified (torsion is onto Wh(M) but injectivity is unknown)";
    pub const B_DIM3_OPEN: &str = "invertible cobordisms over a closed 3-manifold are not classified; nontrivial s-cobordisms exist";

    pub const DECOMPOSABLE_TORSION_DIM_GE5: &str = "for dimension >= 5 an R-diffeomorphism is decomposable iff its torsion vanishes (s-cobordism theorem of Barden, Mazur and Stallings)";
    pub const DECOMPOSABLE_DIM_LE2: &str =
        "every R-diffeomorphism over a manifold of dimension <= 2 is decomposable";
    pub const DECOMPOSABLE_DIM3_OPEN: &str = "decomposability in dimension 3 rests on the open invertibility question for 3-dimensional h-cobordisms (torsion vanishes for closed orientable geometric 3-manifolds, by Kwasik and Schultz)";

    pub const C_DECOMPOSABLE_DIM_GE5: &str = "for dimension >= 5 an R-diffeomorphism is c-decomposable iff its torsion lies in N(M) = {tau + (-1)^n conj(tau)}";
    pub const C_DECOMPOSABLE_FROM_DECOMPOSABLE: &str =
        "decomposable implies c-decomposable (isotopy refines concordance)";

    pub const N_CONTAINS_ZERO: &str =
        "N(M) is a subgroup of Wh(M) (image of tau -> tau + (-1)^n conj(tau)); it contains zero";
    pub const N_ODD_TRIVIAL_INVOLUTION: &str =
        "trivial involution and odd dimension give N(M) = 0; membership means zero torsion";
    pub const N_EVEN_TRIVIAL_INVOLUTION: &str = "trivial involution and even dimension give N(M) = 2 Wh(M); membership is evenness of the basis coordinates";
    pub const N_LATTICE_MEMBERSHIP: &str = "membership in N(M) decided by exact integer linear algebra over the norm images of the generators";

    pub const INERTIAL_FROM_NORM: &str = "W o dual(W) is inertial, so N(M) = {tau + (-1)^n conj(tau)} is contained in I(M)";
    pub const INERTIAL_SELF_CONJUGATE: &str = "a torsion with sigma = (-1)^n conj(sigma) is inertial (regular-neighborhood realization); for even-dimensional orientable manifolds with finite abelian fundamental group this is all of Wh(M), the involution being trivial by Bak's theorem";
    pub const INERTIAL_OPEN: &str = "I(M) is not a subgroup of Wh(M) in general and is not determined by the symbolic data (products of lens spaces and spheres realize I(M) = 0 with Wh(M) infinite)";

    pub const STABILIZATION_UNIT_REPRESENTATIVE: &str = "every class in this calculus carries a 1 x 1 unit representative; in general GL_2 suffices for finite fundamental groups (Vaserstein), so connected sums with at most two copies of S^r x S^{n-r} stabilize";

    pub const RDIFF_DIM_LE2: &str =
        "closed manifolds of dimension <= 2 are R-diffeomorphic iff diffeomorphic (classification of surfaces)";
    pub const RDIFF_DIM3_ORIENTABLE: &str = "closed orientable 3-manifolds are R-diffeomorphic iff diffeomorphic (Turaev's theorem plus geometrization)";
    pub const RDIFF_DIM3_NONORIENTABLE_OPEN: &str = "open for non-orientable closed 3-manifolds (the splitting theorem for homotopy equivalences fails; known only for P^2-irreducible ones)";
    pub const RDIFF_DIM4_TOP: &str = "R-diffeomorphic closed 4-manifolds with poly-(finite or cyclic) fundamental group and Wh = 0 are homeomorphic (topological s-cobordism theorem; Freedman and Quinn)";
    pub const RDIFF_DIM4_TOP_OPEN: &str = "in dimension 4 the homeomorphism conclusion needs a good fundamental group and vanishing Wh; otherwise unsettled";
    pub const RDIFF_DIM4_SMOOTH_OPEN: &str = "smooth classification in dimension 4 is unsettled; homeomorphic smooth 4-manifolds with H_1(M; Z_2) = 0 are R-diffeomorphic, yet one homeomorphism class can contain infinitely many diffeomorphism classes (Fintushel and Stern)";
    pub const RDIFF_WH_ZERO_DIM_GE5: &str = "R-diffeomorphic closed manifolds of dimension >= 5 with Wh(M) = 0 are diffeomorphic (h- and s-cobordism theorems)";
    pub const RDIFF_INERTIA_ALL: &str = "for even dimension >= 6, orientable with finite abelian fundamental group, I(M) = Wh(M) (self-conjugate torsions are inertial), and I(M) = Wh(M) holds iff every manifold R-diffeomorphic to M is diffeomorphic to M";
    pub const RDIFF_INERTIA_OPEN: &str = "decidable exactly when I(M) = Wh(M), and the inertial set is not computable from the symbolic data";

    /// Everything a verdict may cite, for the registry invariant.
    pub const ALL: &[&str] = &[
        INVERTIBLE_IS_H,
        H_IS_INVERTIBLE_OFF_DIM3,
        H_INVERTIBLE_DIM3_OPEN,
        TORSION_BIJECTION_DIM_GE5,
        B_SINGLETON_DIM_LE2,
        TORSION_SEPARATES,
        SMOOTH_POINCARE_DIM4,
        B_DIM4_OPEN,
        B_DIM3_OPEN,
        DECOMPOSABLE_TORSION_DIM_GE5,
        DECOMPOSABLE_DIM_LE2,
        DECOMPOSABLE_DIM3_OPEN,
        C_DECOMPOSABLE_DIM_GE5,
        C_DECOMPOSABLE_FROM_DECOMPOSABLE,
        N_CONTAINS_ZERO,
        N_ODD_TRIVIAL_INVOLUTION,
        N_EVEN_TRIVIAL_INVOLUTION,
        N_LATTICE_MEMBERSHIP,
        INERTIAL_FROM_NORM,
        INERTIAL_SELF_CONJUGATE,
        INERTIAL_OPEN,
        STABILIZATION_UNIT_REPRESENTATIVE,
        RDIFF_DIM_LE2,
        RDIFF_DIM3_ORIENTABLE,
        RDIFF_DIM3_NONORIENTABLE_OPEN,
        RDIFF_DIM4_TOP,
        RDIFF_DIM4_TOP_OPEN,
        RDIFF_DIM4_SMOOTH_OPEN,
        RDIFF_WH_ZERO_DIM_GE5,
        RDIFF_INERTIA_ALL,
        RDIFF_INERTIA_OPEN,
    ];
}
