//! The decision layer: decomposability, c-decomposability, N(M)-membership,
//! inertial status, the structure of D(M) and D_c(M), stabilization bounds,
//! and the rule table for what R-diffeomorphism implies in each dimension.

use std::fmt;

use num_integer::Integer;

use crate::cobordism::{InvertibleCobordism, ManifoldProfile};
use crate::error::{Error, Result};
use crate::torsion::{norm_element, DimensionContext};
use crate::verdict::{citations, Answer, Verdict};
use crate::whitehead::{
    express_in_generators, generators, rank, ExpressOutcome, GeneratorRegistry, GeneratorSet,
    WhiteheadClass,
};
use crate::zmatrix;

const SUBGROUP_CAVEAT: &str = "relative to the Bass-unit subgroup of finite index";
const OUTSIDE_SUBGROUP_CAVEAT: &str =
    "the class lies outside the computable Bass-unit subgroup; no decision relative to the known generators";

/// Abstract abelian group: free part plus cyclic torsion summands.
#[derive(Clone, PartialEq, Eq, Debug, serde::Serialize)]
pub struct GroupStructure {
    pub free_rank: usize,
    /// Orders of cyclic torsion summands, sorted ascending.
    pub torsion_factors: Vec<u64>,
    pub exactness: Exactness,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Exactness {
    Exact,
    FiniteIndexSubgroup,
}

impl GroupStructure {
    fn new(free_rank: usize, mut torsion_factors: Vec<u64>, exact: bool) -> Self {
        torsion_factors.sort_unstable();
        Self {
            free_rank,
            torsion_factors,
            exactness: if exact {
                Exactness::Exact
            } else {
                Exactness::FiniteIndexSubgroup
            },
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion_factors.is_empty()
    }
}

impl fmt::Display for GroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion_factors {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" x "))
        }
    }
}

fn involution_trivial_on(gens: &GeneratorSet) -> bool {
    gens.classes.iter().all(|g| &g.bar() == g)
}

/// Is sigma in N(M) = {tau + (-1)^n conj(tau)}?
///
/// With trivial involution on the generators, N(M) is 0 for odd dimension and
/// 2 Wh(M) for even dimension, so membership is zero-ness respectively parity
/// of the basis coordinates. Otherwise the norm images of the generators span
/// an integer lattice in generator coordinates and membership is decided by
/// exact integer linear algebra. Verdicts are relative to the generated
/// subgroup whenever the generating set is not a known basis.
pub fn in_n_subgroup(
    sigma: &WhiteheadClass,
    ctx: DimensionContext,
    gens: &GeneratorSet,
    precision_digits: u32,
) -> Result<Verdict> {
    let inexact = !gens.exact_basis;
    if sigma.is_zero() {
        return Ok(Verdict::yes(citations::N_CONTAINS_ZERO));
    }
    if involution_trivial_on(gens) {
        if ctx.dim() % 2 == 1 {
            // N(M) = 0; sigma is nonzero
            return Ok(Verdict::no(citations::N_ODD_TRIVIAL_INVOLUTION));
        }
        return match express_in_generators(sigma, &gens.classes, precision_digits)? {
            ExpressOutcome::InSpan(coords) => {
                let all_even = coords.iter().all(|c| c.is_even());
                let v = if all_even {
                    Verdict::yes(citations::N_EVEN_TRIVIAL_INVOLUTION)
                } else {
                    Verdict::no(citations::N_EVEN_TRIVIAL_INVOLUTION)
                };
                Ok(v.caveat_if(inexact, SUBGROUP_CAVEAT))
            }
            ExpressOutcome::NotInSpan => {
                if gens.exact_basis {
                    return Err(Error::InconsistentBasis(
                        "a class escaped a supposedly exact basis".into(),
                    ));
                }
                Ok(Verdict::open(citations::N_EVEN_TRIVIAL_INVOLUTION)
                    .with_caveat(OUTSIDE_SUBGROUP_CAVEAT))
            }
        };
    }

    // Nontrivial involution: sigma must be an integer combination of the
    // norm images eta_i = g_i + (-1)^n conj(g_i).
    let mut columns = Vec::with_capacity(gens.classes.len());
    for g in &gens.classes {
        let eta = norm_element(g, ctx);
        match express_in_generators(&eta, &gens.classes, precision_digits)? {
            ExpressOutcome::InSpan(coords) => columns.push(coords),
            ExpressOutcome::NotInSpan => {
                if gens.exact_basis {
                    return Err(Error::InconsistentBasis(
                        "a norm image escaped a supposedly exact basis".into(),
                    ));
                }
                return Ok(Verdict::open(citations::N_LATTICE_MEMBERSHIP).with_caveat(format!(
                    "the norm image of a generator lies outside the computable subgroup; {SUBGROUP_CAVEAT}"
                )));
            }
        }
    }
    let target = match express_in_generators(sigma, &gens.classes, precision_digits)? {
        ExpressOutcome::InSpan(coords) => coords,
        ExpressOutcome::NotInSpan => {
            if gens.exact_basis {
                return Err(Error::InconsistentBasis(
                    "a class escaped a supposedly exact basis".into(),
                ));
            }
            return Ok(
                Verdict::open(citations::N_LATTICE_MEMBERSHIP).with_caveat(OUTSIDE_SUBGROUP_CAVEAT)
            );
        }
    };
    match zmatrix::solve_in_lattice(&columns, &target) {
        Some(exponents) => {
            // exact confirmation in the group ring
            let mut acc = WhiteheadClass::zero(sigma.group());
            for (g, e) in gens.classes.iter().zip(&exponents) {
                acc = acc.add(&norm_element(g, ctx).scale_big(e))?;
            }
            if &acc != sigma {
                return Err(Error::InconsistentBasis(
                    "lattice solution failed exact verification".into(),
                ));
            }
            Ok(Verdict::yes(citations::N_LATTICE_MEMBERSHIP).caveat_if(inexact, SUBGROUP_CAVEAT))
        }
        None => Ok(Verdict::no(citations::N_LATTICE_MEMBERSHIP).caveat_if(inexact, SUBGROUP_CAVEAT)),
    }
}

/// Is the R-diffeomorphism represented by W decomposable (isotopic to a
/// product)? Dimension gates: always for dim <= 2; equivalent to zero torsion
/// for dim >= 5; open in dimension 3; in dimension 4 nonzero torsion
/// obstructs and zero torsion leaves the question open.
pub fn decide_decomposable(w: &InvertibleCobordism) -> Verdict {
    let dim = w.dim();
    let zero = w.torsion().is_zero();
    match dim {
        0..=2 => Verdict::yes(citations::DECOMPOSABLE_DIM_LE2),
        3 => {
            if !zero {
                // products have zero torsion in every dimension
                Verdict::no(citations::TORSION_SEPARATES)
            } else {
                Verdict::open(citations::DECOMPOSABLE_DIM3_OPEN)
            }
        }
        4 => {
            if !zero {
                Verdict::no(citations::TORSION_SEPARATES)
            } else if w.source().pi.order() == 1 {
                Verdict::open(citations::SMOOTH_POINCARE_DIM4)
            } else {
                Verdict::open(citations::B_DIM4_OPEN)
            }
        }
        _ => {
            if zero {
                Verdict::yes(citations::DECOMPOSABLE_TORSION_DIM_GE5)
            } else {
                Verdict::no(citations::DECOMPOSABLE_TORSION_DIM_GE5)
            }
        }
    }
}

/// Is the R-diffeomorphism represented by W c-decomposable (concordant to a
/// product)? For dim >= 5 this is membership of the torsion in N(M); below,
/// decomposability implies it and everything else is open.
pub fn decide_c_decomposable(
    w: &InvertibleCobordism,
    gens: &GeneratorSet,
    precision_digits: u32,
) -> Result<Verdict> {
    let dim = w.dim();
    if dim >= 5 {
        let inner = in_n_subgroup(
            w.torsion(),
            DimensionContext::new(dim),
            gens,
            precision_digits,
        )?;
        let mut v = match inner.answer {
            Answer::Yes => Verdict::yes(citations::C_DECOMPOSABLE_DIM_GE5),
            Answer::No => Verdict::no(citations::C_DECOMPOSABLE_DIM_GE5),
            Answer::Open => Verdict::open(citations::C_DECOMPOSABLE_DIM_GE5),
        };
        v.caveat = inner.caveat;
        return Ok(v);
    }
    let dec = decide_decomposable(w);
    Ok(match dec.answer {
        Answer::Yes => Verdict::yes(citations::C_DECOMPOSABLE_FROM_DECOMPOSABLE),
        _ => Verdict::open(dec.citation),
    })
}

/// The structure of D(M), the set of R-diffeomorphisms onto M x R up to
/// decomposable equivalence: in bijection with Wh(pi_1 M) for dim >= 5.
pub fn d_structure(
    m: &ManifoldProfile,
    registry: &GeneratorRegistry,
    precision_digits: u32,
) -> Result<GroupStructure> {
    if m.dim < 5 {
        return Err(Error::DimensionTooLow {
            required: 5,
            actual: m.dim,
        });
    }
    let set = generators(m.pi, registry, precision_digits)?;
    Ok(GroupStructure::new(
        rank(m.pi.order()),
        Vec::new(),
        set.exact_basis,
    ))
}

/// The structure of D_c(M) = Wh(M)/N(M) for dim >= 5: Wh itself in odd
/// dimension (N = 0), Wh/2Wh in even dimension. Requires the involution to be
/// trivial on the generators; no exact bases are known otherwise.
pub fn dc_structure(
    m: &ManifoldProfile,
    registry: &GeneratorRegistry,
    precision_digits: u32,
) -> Result<GroupStructure> {
    if m.dim < 5 {
        return Err(Error::DimensionTooLow {
            required: 5,
            actual: m.dim,
        });
    }
    let set = generators(m.pi, registry, precision_digits)?;
    if !involution_trivial_on(&set) {
        return Err(Error::NontrivialInvolution(
            "Wh(M)/N(M) with a nontrivial involution needs an exact basis and Smith reduction, \
             and none is known for such groups"
                .into(),
        ));
    }
    let r = rank(m.pi.order());
    if m.dim % 2 == 1 {
        Ok(GroupStructure::new(r, Vec::new(), set.exact_basis))
    } else {
        Ok(GroupStructure::new(0, vec![2; r], set.exact_basis))
    }
}

/// Is sigma the torsion of an inertial cobordism (both ends diffeomorphic)?
/// Yes when sigma lies in N(M) or when sigma = (-1)^n conj(sigma); otherwise
/// open, because I(M) is not a subgroup and not determined by this data.
pub fn inertial_status(
    sigma: &WhiteheadClass,
    m: &ManifoldProfile,
    gens: &GeneratorSet,
    precision_digits: u32,
) -> Result<Verdict> {
    if m.dim < 5 {
        return Err(Error::DimensionTooLow {
            required: 5,
            actual: m.dim,
        });
    }
    let ctx = DimensionContext::new(m.dim);
    let in_n = in_n_subgroup(sigma, ctx, gens, precision_digits)?;
    if in_n.answer == Answer::Yes {
        let mut v = Verdict::yes(citations::INERTIAL_FROM_NORM);
        v.caveat = in_n.caveat;
        return Ok(v);
    }
    let self_conjugate = {
        let signed_bar = if m.dim.is_multiple_of(2) {
            sigma.bar()
        } else {
            sigma.bar().negate()
        };
        &signed_bar == sigma
    };
    if self_conjugate {
        return Ok(Verdict::yes(citations::INERTIAL_SELF_CONJUGATE));
    }
    Ok(Verdict::open(citations::INERTIAL_OPEN))
}

/// The stabilization bound carried by a class: the size of its general-linear
/// representative.
#[derive(Clone, Debug, serde::Serialize)]
pub struct StabilizationBound {
    pub gl_size: usize,
    pub citation: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

/// Every class here is represented by a unit, a 1 x 1 matrix.
pub fn stabilization_bound(
    sigma: &WhiteheadClass,
    m: &ManifoldProfile,
) -> Result<StabilizationBound> {
    if m.dim < 5 {
        return Err(Error::DimensionTooLow {
            required: 5,
            actual: m.dim,
        });
    }
    Ok(StabilizationBound {
        gl_size: 1,
        citation: citations::STABILIZATION_UNIT_REPRESENTATIVE,
        note: sigma.is_zero().then_some(
            "the zero class is the torsion of the trivial cobordism, which needs no stabilization",
        ),
    })
}

/// What a conclusion of `r_diffeo_conclusion` asserts about the pair (M, N).
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Conclusion {
    Diffeomorphic,
    Homeomorphic,
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conclusion::Diffeomorphic => "diffeomorphic",
            Conclusion::Homeomorphic => "homeomorphic",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, serde::Serialize)]
pub struct LabeledVerdict {
    pub conclusion: Conclusion,
    #[serde(flatten)]
    pub verdict: Verdict,
}

fn conclude(conclusion: Conclusion, verdict: Verdict) -> LabeledVerdict {
    LabeledVerdict {
        conclusion,
        verdict,
    }
}

/// Given that M and N are invertibly cobordant (the caller's hypothesis,
/// equivalent to M x R diffeomorphic to N x R), emit every applicable
/// conclusion with its citation.
pub fn r_diffeo_conclusion(
    m: &ManifoldProfile,
    n: &ManifoldProfile,
) -> Result<Vec<LabeledVerdict>> {
    if m.dim != n.dim || m.pi != n.pi {
        return Err(Error::IncompatibleProfiles(format!(
            "invertibly cobordant manifolds share dimension and fundamental group; got {:?} and {:?}",
            m.name, n.name
        )));
    }
    let wh_trivial = rank(m.pi.order()) == 0;
    let out = match m.dim {
        0..=2 => vec![conclude(
            Conclusion::Diffeomorphic,
            Verdict::yes(citations::RDIFF_DIM_LE2),
        )],
        3 => {
            if m.orientable && n.orientable {
                vec![conclude(
                    Conclusion::Diffeomorphic,
                    Verdict::yes(citations::RDIFF_DIM3_ORIENTABLE),
                )]
            } else {
                vec![conclude(
                    Conclusion::Diffeomorphic,
                    Verdict::open(citations::RDIFF_DIM3_NONORIENTABLE_OPEN),
                )]
            }
        }
        4 => {
            let top = if m.is_poly_finite_or_cyclic() && wh_trivial {
                Verdict::yes(citations::RDIFF_DIM4_TOP)
            } else {
                Verdict::open(citations::RDIFF_DIM4_TOP_OPEN)
            };
            vec![
                conclude(Conclusion::Homeomorphic, top),
                conclude(
                    Conclusion::Diffeomorphic,
                    Verdict::open(citations::RDIFF_DIM4_SMOOTH_OPEN),
                ),
            ]
        }
        _ => {
            if wh_trivial {
                vec![conclude(
                    Conclusion::Diffeomorphic,
                    Verdict::yes(citations::RDIFF_WH_ZERO_DIM_GE5),
                )]
            } else if m.dim.is_multiple_of(2) && m.orientable && n.orientable {
                vec![conclude(
                    Conclusion::Diffeomorphic,
                    Verdict::yes(citations::RDIFF_INERTIA_ALL),
                )]
            } else {
                vec![conclude(
                    Conclusion::Diffeomorphic,
                    Verdict::open(citations::RDIFF_INERTIA_OPEN),
                )]
            }
        }
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cobordism::{identity_cobordism, ManifoldFlags};
    use crate::group_ring::CyclicGroupSpec;
    use crate::text::parse_element;

    fn z5() -> CyclicGroupSpec {
        CyclicGroupSpec::orientable(5).unwrap()
    }

    fn sigma() -> WhiteheadClass {
        WhiteheadClass::from_unit(parse_element("1 - t - t^4", z5()).unwrap()).unwrap()
    }

    fn gens5() -> GeneratorSet {
        generators(z5(), &GeneratorRegistry::shipped(), 50).unwrap()
    }

    fn profile(dim: usize, n: usize) -> ManifoldProfile {
        ManifoldProfile::new(
            "M",
            dim,
            CyclicGroupSpec::orientable(n).unwrap(),
            true,
            ManifoldFlags::default(),
        )
        .unwrap()
    }

    fn sigma_cob(dim: usize) -> InvertibleCobordism {
        InvertibleCobordism::new(
            profile(dim, 5),
            ManifoldProfile::new(
                "N",
                dim,
                z5(),
                true,
                ManifoldFlags::default(),
            )
            .unwrap(),
            sigma(),
            1,
        )
        .unwrap()
    }

    #[test]
    fn in_n_examples() {
        let even = DimensionContext::new(6);
        let odd = DimensionContext::new(5);
        // sigma has odd coordinate 1: not in 2 Wh
        assert_eq!(
            in_n_subgroup(&sigma(), even, &gens5(), 50).unwrap().answer,
            Answer::No
        );
        // 2 sigma = norm_element(sigma) for even dimension
        assert_eq!(
            in_n_subgroup(&sigma().scale(2), even, &gens5(), 50)
                .unwrap()
                .answer,
            Answer::Yes
        );
        assert_eq!(
            in_n_subgroup(&WhiteheadClass::zero(z5()), even, &gens5(), 50)
                .unwrap()
                .answer,
            Answer::Yes
        );
        // odd dimension: N = 0
        assert_eq!(
            in_n_subgroup(&sigma(), odd, &gens5(), 50).unwrap().answer,
            Answer::No
        );
    }

    #[test]
    fn in_n_caveats_for_bass_subgroups() {
        let z7 = CyclicGroupSpec::orientable(7).unwrap();
        let set = generators(z7, &GeneratorRegistry::shipped(), 50).unwrap();
        assert!(!set.exact_basis);
        let even = DimensionContext::new(6);
        let g0 = set.classes[0].clone();
        let v = in_n_subgroup(&g0.scale(2), even, &set, 50).unwrap();
        assert_eq!(v.answer, Answer::Yes);
        assert_eq!(v.caveat.as_deref(), Some(SUBGROUP_CAVEAT));
        let v = in_n_subgroup(&g0, even, &set, 50).unwrap();
        assert_eq!(v.answer, Answer::No);
        assert_eq!(v.caveat.as_deref(), Some(SUBGROUP_CAVEAT));
    }

    #[test]
    fn in_n_norm_images_are_members() {
        // image membership is tautological
        let even = DimensionContext::new(6);
        let odd = DimensionContext::new(7);
        for ctx in [even, odd] {
            for c in [sigma(), sigma().scale(-3), WhiteheadClass::zero(z5())] {
                let eta = norm_element(&c, ctx);
                assert_eq!(
                    in_n_subgroup(&eta, ctx, &gens5(), 50).unwrap().answer,
                    Answer::Yes,
                    "norm of {c} at dim parity {}",
                    ctx.dim()
                );
            }
        }
    }

    #[test]
    fn in_n_with_nontrivial_involution() {
        // epsilon = -1 on Z/8 twists the involution off the identity, so
        // membership goes through the integer lattice of norm images
        let g8 = CyclicGroupSpec::new(8, -1).unwrap();
        let set = generators(g8, &GeneratorRegistry::empty(), 50).unwrap();
        assert_eq!(set.classes.len(), 1);
        let g = set.classes[0].clone();
        assert_ne!(g.bar(), g);
        for dim in [5usize, 6] {
            let ctx = DimensionContext::new(dim);
            let eta = norm_element(&g, ctx);
            assert_eq!(
                in_n_subgroup(&eta, ctx, &set, 50).unwrap().answer,
                Answer::Yes,
                "norm image at dim {dim}"
            );
            let v = in_n_subgroup(&g, ctx, &set, 50).unwrap();
            assert_eq!(v.answer, Answer::No, "generator itself at dim {dim}");
            assert!(v.caveat.is_some());
        }
        // even dimension: g + bar(g) collapses to the zero class here
        assert!(norm_element(&g, DimensionContext::new(6)).is_zero());
    }

    #[test]
    fn decomposable_dimension_gates() {
        assert_eq!(decide_decomposable(&sigma_cob(6)).answer, Answer::No);
        let id6 = identity_cobordism(&profile(6, 5));
        assert_eq!(decide_decomposable(&id6).answer, Answer::Yes);
        let id2 = identity_cobordism(&profile(2, 1));
        assert_eq!(decide_decomposable(&id2).answer, Answer::Yes);
        let id3 = identity_cobordism(&profile(3, 1));
        let v3 = decide_decomposable(&id3);
        assert_eq!(v3.answer, Answer::Open);
        assert_eq!(v3.citation, citations::DECOMPOSABLE_DIM3_OPEN);
        let s4 = identity_cobordism(&profile(4, 1));
        let v4 = decide_decomposable(&s4);
        assert_eq!(v4.answer, Answer::Open);
        assert_eq!(v4.citation, citations::SMOOTH_POINCARE_DIM4);
        assert_eq!(decide_decomposable(&sigma_cob(4)).answer, Answer::No);
    }

    #[test]
    fn c_decomposable_examples() {
        // dim 6 (even): sigma not in N
        let v = decide_c_decomposable(&sigma_cob(6), &gens5(), 50).unwrap();
        assert_eq!(v.answer, Answer::No);
        // dim 5 (odd): N = 0 and sigma != 0
        let v = decide_c_decomposable(&sigma_cob(5), &gens5(), 50).unwrap();
        assert_eq!(v.answer, Answer::No);
        // torsion 0, dim 7
        let id7 = identity_cobordism(&profile(7, 5));
        assert_eq!(
            decide_c_decomposable(&id7, &gens5(), 50).unwrap().answer,
            Answer::Yes
        );
        // low dimension: implied by decomposability
        let id2 = identity_cobordism(&profile(2, 1));
        let v = decide_c_decomposable(&id2, &gens5(), 50).unwrap();
        assert_eq!(v.answer, Answer::Yes);
        assert_eq!(v.citation, citations::C_DECOMPOSABLE_FROM_DECOMPOSABLE);
        let id3 = identity_cobordism(&profile(3, 1));
        assert_eq!(
            decide_c_decomposable(&id3, &gens5(), 50).unwrap().answer,
            Answer::Open
        );
    }

    #[test]
    fn d_structure_examples() {
        let reg = GeneratorRegistry::shipped();
        let d = d_structure(&profile(6, 5), &reg, 50).unwrap();
        assert_eq!(d.free_rank, 1);
        assert!(d.torsion_factors.is_empty());
        assert_eq!(d.exactness, Exactness::Exact);
        assert_eq!(d.to_string(), "Z");

        let d1 = d_structure(&profile(6, 1), &reg, 50).unwrap();
        assert!(d1.is_trivial());
        assert_eq!(d1.to_string(), "0");

        let d7 = d_structure(&profile(6, 7), &reg, 50).unwrap();
        assert_eq!(d7.free_rank, 2);
        assert_eq!(d7.exactness, Exactness::FiniteIndexSubgroup);

        assert!(matches!(
            d_structure(&profile(4, 5), &reg, 50),
            Err(Error::DimensionTooLow { .. })
        ));
    }

    #[test]
    fn dc_structure_examples() {
        let reg = GeneratorRegistry::shipped();
        let odd = dc_structure(&profile(5, 5), &reg, 50).unwrap();
        assert_eq!(odd.to_string(), "Z");
        let even = dc_structure(&profile(6, 5), &reg, 50).unwrap();
        assert_eq!(even.to_string(), "Z/2");
        let trivial = dc_structure(&profile(6, 1), &reg, 50).unwrap();
        assert!(trivial.is_trivial());
    }

    #[test]
    fn inertial_examples() {
        // even dim, orientable Z/5: every class self-conjugate
        let v = inertial_status(&sigma(), &profile(6, 5), &gens5(), 50).unwrap();
        assert_eq!(v.answer, Answer::Yes);
        // odd dim, sigma != 0: open
        let v = inertial_status(&sigma(), &profile(5, 5), &gens5(), 50).unwrap();
        assert_eq!(v.answer, Answer::Open);
        // zero class: in N
        let v = inertial_status(&WhiteheadClass::zero(z5()), &profile(5, 5), &gens5(), 50).unwrap();
        assert_eq!(v.answer, Answer::Yes);
        assert!(matches!(
            inertial_status(&sigma(), &profile(4, 5), &gens5(), 50),
            Err(Error::DimensionTooLow { .. })
        ));
    }

    #[test]
    fn stabilization_examples() {
        let b = stabilization_bound(&sigma(), &profile(6, 5)).unwrap();
        assert_eq!(b.gl_size, 1);
        assert!(b.note.is_none());
        let b = stabilization_bound(&WhiteheadClass::zero(z5()), &profile(6, 5)).unwrap();
        assert_eq!(b.gl_size, 1);
        assert!(b.note.is_some());
        let z7 = CyclicGroupSpec::orientable(7).unwrap();
        let g = generators(z7, &GeneratorRegistry::shipped(), 50).unwrap();
        let b = stabilization_bound(
            &g.classes[1],
            &ManifoldProfile::new("M7", 8, z7, true, ManifoldFlags::default()).unwrap(),
        )
        .unwrap();
        assert_eq!(b.gl_size, 1);
    }

    #[test]
    fn r_diffeo_examples() {
        let reg = [
            // dim 3 orientable: diffeomorphic
            (profile(3, 1), profile(3, 1), Answer::Yes),
            // dim 6 simply connected: diffeomorphic
            (profile(6, 1), profile(6, 1), Answer::Yes),
            // dim 5, Z/5: open
            (profile(5, 5), profile(5, 5), Answer::Open),
            // dim 6, Z/5 orientable: I(M) = Wh(M) decides
            (profile(6, 5), profile(6, 5), Answer::Yes),
        ];
        for (m, n, expected) in reg {
            let out = r_diffeo_conclusion(&m, &n).unwrap();
            let diffeo = out
                .iter()
                .find(|lv| lv.conclusion == Conclusion::Diffeomorphic)
                .expect("diffeomorphic conclusion present");
            assert_eq!(diffeo.verdict.answer, expected, "dim {}", m.dim);
        }

        // dim 4, simply connected: homeomorphic yes, smooth open
        let out = r_diffeo_conclusion(&profile(4, 1), &profile(4, 1)).unwrap();
        assert_eq!(out.len(), 2);
        assert_eq!(out[0].conclusion, Conclusion::Homeomorphic);
        assert_eq!(out[0].verdict.answer, Answer::Yes);
        assert_eq!(out[1].verdict.answer, Answer::Open);

        // dim 4 with Wh != 0: both open
        let out = r_diffeo_conclusion(&profile(4, 5), &profile(4, 5)).unwrap();
        assert!(out.iter().all(|lv| lv.verdict.answer == Answer::Open));

        assert!(r_diffeo_conclusion(&profile(4, 5), &profile(5, 5)).is_err());
    }

    #[test]
    fn every_citation_is_registered() {
        let mut produced: Vec<&'static str> = vec![
            decide_decomposable(&sigma_cob(6)).citation,
            decide_decomposable(&sigma_cob(3)).citation,
            decide_c_decomposable(&sigma_cob(6), &gens5(), 50)
                .unwrap()
                .citation,
            in_n_subgroup(&sigma(), DimensionContext::new(6), &gens5(), 50)
                .unwrap()
                .citation,
            inertial_status(&sigma(), &profile(6, 5), &gens5(), 50)
                .unwrap()
                .citation,
        ];
        for (m, n) in [
            (profile(3, 1), profile(3, 1)),
            (profile(4, 1), profile(4, 1)),
            (profile(6, 5), profile(6, 5)),
        ] {
            for lv in r_diffeo_conclusion(&m, &n).unwrap() {
                produced.push(lv.verdict.citation);
            }
        }
        for c in produced {
            assert!(
                citations::ALL.contains(&c),
                "citation not in registry: {c}"
            );
        }
    }

    #[test]
    fn dc_index_matches_membership_count() {
        // for Z/5 even dimension, Wh/N = Z/2: among {0, s, 2s, 3s} exactly
        // the even multiples are members
        let even = DimensionContext::new(6);
        let members = (0..4)
            .filter(|&k| {
                in_n_subgroup(&sigma().scale(k), even, &gens5(), 50)
                    .unwrap()
                    .answer
                    == Answer::Yes
            })
            .count();
        assert_eq!(members, 2);
        let dc = dc_structure(&profile(6, 5), &GeneratorRegistry::shipped(), 50).unwrap();
        assert_eq!(dc.torsion_factors, vec![2]);
    }
}
