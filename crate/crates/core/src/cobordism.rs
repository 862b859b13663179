//! The symbolic category of invertible cobordisms: objects are manifold
//! profiles, morphisms are (torsion, identification) pairs.
//!
//! A morphism from M to N records the Whitehead torsion tau(W, M), measured
//! at the source, and the class of the induced identification
//! h_*: pi_1 N -> pi_1 M as a group automorphism t -> t^a. For dimension >= 5
//! the torsion classifies cobordisms over M; in lower dimensions equality
//! questions surface as Open verdicts instead of pretending the pair is
//! complete.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group_ring::{inverse_mod, reduce_mod, CyclicGroupSpec};
use crate::torsion::{compose_cobordism_torsion, dual_torsion, DimensionContext};
use crate::verdict::{citations, Verdict};
use crate::whitehead::WhiteheadClass;

/// Optional topological facts about a profile that gate some theorems.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldFlags {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h1_z2_zero: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poly_finite_or_cyclic_pi1: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub geometric_3mfld: Option<bool>,
}

impl ManifoldFlags {
    pub fn is_empty(&self) -> bool {
        self.h1_z2_zero.is_none()
            && self.poly_finite_or_cyclic_pi1.is_none()
            && self.geometric_3mfld.is_none()
    }
}

/// Symbolic stand-in for a closed connected manifold.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ManifoldProfile {
    pub name: String,
    pub dim: usize,
    pub pi: CyclicGroupSpec,
    pub orientable: bool,
    pub flags: ManifoldFlags,
}

impl ManifoldProfile {
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        pi: CyclicGroupSpec,
        orientable: bool,
        flags: ManifoldFlags,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::IncompatibleProfiles(
                "manifold dimension must be >= 1".into(),
            ));
        }
        if orientable && pi.epsilon() != 1 {
            return Err(Error::IncompatibleProfiles(
                "an orientable profile requires the trivial orientation character (epsilon = +1)"
                    .into(),
            ));
        }
        Ok(Self {
            name: name.into(),
            dim,
            pi,
            orientable,
            flags,
        })
    }

    /// Fundamental group poly-(finite or cyclic)? Finite cyclic groups always
    /// are; an explicit flag can only withhold the fact.
    pub fn is_poly_finite_or_cyclic(&self) -> bool {
        self.flags.poly_finite_or_cyclic_pi1.unwrap_or(true)
    }

    fn same_underlying(&self, other: &Self) -> bool {
        self.dim == other.dim && self.pi == other.pi && self.orientable == other.orientable
    }
}

/// A morphism of the invertible-cobordism category.
#[derive(Clone, PartialEq, Debug)]
pub struct InvertibleCobordism {
    source: ManifoldProfile,
    target: ManifoldProfile,
    torsion: WhiteheadClass,
    ident: u64,
}

impl InvertibleCobordism {
    pub fn new(
        source: ManifoldProfile,
        target: ManifoldProfile,
        torsion: WhiteheadClass,
        ident: i64,
    ) -> Result<Self> {
        if !source.same_underlying(&target) {
            return Err(Error::IncompatibleProfiles(format!(
                "source {:?} and target {:?} must share dimension, fundamental group and orientability",
                source.name, target.name
            )));
        }
        if torsion.group() != source.pi {
            return Err(Error::GroupMismatch(
                torsion.group().order(),
                torsion.group().epsilon(),
                source.pi.order(),
                source.pi.epsilon(),
            ));
        }
        let n = source.pi.order();
        let ident_red = reduce_mod(ident, n);
        inverse_mod(ident, n)?; // gcd check
        Ok(Self {
            source,
            target,
            torsion,
            ident: ident_red,
        })
    }

    pub fn source(&self) -> &ManifoldProfile {
        &self.source
    }

    pub fn target(&self) -> &ManifoldProfile {
        &self.target
    }

    /// tau(W, M), measured at the source.
    pub fn torsion(&self) -> &WhiteheadClass {
        &self.torsion
    }

    /// The automorphism parameter a of h_*: t -> t^a.
    pub fn ident(&self) -> u64 {
        self.ident
    }

    pub fn dim(&self) -> usize {
        self.source.dim
    }

    fn dimension_context(&self) -> DimensionContext {
        DimensionContext::new(self.source.dim)
    }

    /// W o W': torsion tau(W) + h_*(tau(W')), identification composed.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.target != other.source {
            return Err(Error::EndpointMismatch(format!(
                "target {:?} does not match source {:?}",
                self.target.name, other.source.name
            )));
        }
        let torsion =
            compose_cobordism_torsion(&self.torsion, &other.torsion, self.ident as i64)?;
        let n = self.source.pi.order();
        let ident = (self.ident as u128 * other.ident as u128 % n as u128) as u64;
        Self::new(self.source.clone(), other.target.clone(), torsion, ident as i64)
    }

    /// The two-sided inverse: both composites have zero torsion and trivial
    /// identification.
    pub fn inverse(&self) -> Self {
        let n = self.source.pi.order();
        let ident_inv = inverse_mod(self.ident as i64, n).expect("stored ident is coprime");
        let torsion = self
            .torsion
            .push_forward(ident_inv as i64)
            .expect("coprime")
            .negate();
        Self::new(
            self.target.clone(),
            self.source.clone(),
            torsion,
            ident_inv as i64,
        )
        .expect("profiles already compatible")
    }

    /// The dual cobordism: ends swapped, torsion by the duality formula.
    pub fn dual(&self) -> Self {
        let torsion = dual_torsion(&self.torsion, self.dimension_context(), self.ident as i64)
            .expect("stored ident is coprime");
        let n = self.source.pi.order();
        let ident_inv = inverse_mod(self.ident as i64, n).expect("stored ident is coprime");
        Self::new(
            self.target.clone(),
            self.source.clone(),
            torsion,
            ident_inv as i64,
        )
        .expect("profiles already compatible")
    }

    /// An invertible cobordism with vanishing torsion is an s-cobordism.
    pub fn is_s_cobordism(&self) -> bool {
        self.torsion.is_zero()
    }
}

/// 1_M = [M x I, M x {0}, M x {1}]: zero torsion, trivial identification.
pub fn identity_cobordism(m: &ManifoldProfile) -> InvertibleCobordism {
    InvertibleCobordism::new(m.clone(), m.clone(), WhiteheadClass::zero(m.pi), 1)
        .expect("identity data is always valid")
}

/// The mapping cylinder of a diffeomorphism f: M -> N: zero torsion, carrying
/// the identification f_*.
pub fn mapping_cylinder(
    m: &ManifoldProfile,
    n: &ManifoldProfile,
    f_star: i64,
) -> Result<InvertibleCobordism> {
    if !m.same_underlying(n) {
        return Err(Error::IncompatibleProfiles(format!(
            "a diffeomorphism needs profiles {:?} and {:?} to share dimension, fundamental group and orientability",
            m.name, n.name
        )));
    }
    InvertibleCobordism::new(m.clone(), n.clone(), WhiteheadClass::zero(m.pi), f_star)
}

/// Every modeled cobordism is invertible, hence an h-cobordism.
pub fn is_h_cobordism(_w: &InvertibleCobordism) -> Verdict {
    Verdict::yes(citations::INVERTIBLE_IS_H)
}

/// Whether an h-cobordism of the given dimension must be invertible.
pub fn h_cobordism_converse(dim: usize) -> Verdict {
    if dim == 3 {
        Verdict::open(citations::H_INVERTIBLE_DIM3_OPEN)
    } else {
        Verdict::yes(citations::H_IS_INVERTIBLE_OFF_DIM3)
    }
}

/// Do two invertible cobordisms from the same manifold represent the same
/// class over M (cobordant rel source)?
pub fn same_class_in_bm(w1: &InvertibleCobordism, w2: &InvertibleCobordism) -> Result<Verdict> {
    if w1.source != w2.source {
        return Err(Error::EndpointMismatch(format!(
            "classes over M compare cobordisms with the same source; got {:?} and {:?}",
            w1.source.name, w2.source.name
        )));
    }
    let dim = w1.dim();
    let equal = w1.torsion == w2.torsion;
    Ok(match (dim, equal) {
        (0..=2, _) => Verdict::yes(citations::B_SINGLETON_DIM_LE2),
        (d, true) if d >= 5 => Verdict::yes(citations::TORSION_BIJECTION_DIM_GE5),
        (d, false) if d >= 5 => Verdict::no(citations::TORSION_BIJECTION_DIM_GE5),
        (_, false) => Verdict::no(citations::TORSION_SEPARATES),
        (4, true) => {
            if w1.source.pi.order() == 1 && w1.torsion.is_zero() {
                Verdict::open(citations::SMOOTH_POINCARE_DIM4)
            } else {
                Verdict::open(citations::B_DIM4_OPEN)
            }
        }
        (_, true) => Verdict::open(citations::B_DIM3_OPEN),
    })
}

/// Wire format for cobordism description files.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileDto {
    pub name: String,
    pub dim: usize,
    pub n: usize,
    pub epsilon: i8,
    pub orientable: bool,
    #[serde(default, skip_serializing_if = "ManifoldFlags::is_empty")]
    pub flags: ManifoldFlags,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CobordismDto {
    pub source: ProfileDto,
    pub target: ProfileDto,
    pub torsion: String,
    pub ident: i64,
}

impl From<&ManifoldProfile> for ProfileDto {
    fn from(p: &ManifoldProfile) -> Self {
        Self {
            name: p.name.clone(),
            dim: p.dim,
            n: p.pi.order(),
            epsilon: p.pi.epsilon(),
            orientable: p.orientable,
            flags: p.flags,
        }
    }
}

impl TryFrom<ProfileDto> for ManifoldProfile {
    type Error = Error;

    fn try_from(d: ProfileDto) -> Result<Self> {
        let pi = CyclicGroupSpec::new(d.n, d.epsilon)?;
        ManifoldProfile::new(d.name, d.dim, pi, d.orientable, d.flags)
    }
}

impl From<&InvertibleCobordism> for CobordismDto {
    fn from(w: &InvertibleCobordism) -> Self {
        Self {
            source: (&w.source).into(),
            target: (&w.target).into(),
            torsion: w.torsion.rep().to_string(),
            ident: w.ident as i64,
        }
    }
}

impl TryFrom<CobordismDto> for InvertibleCobordism {
    type Error = Error;

    fn try_from(d: CobordismDto) -> Result<Self> {
        let source: ManifoldProfile = d.source.try_into()?;
        let target: ManifoldProfile = d.target.try_into()?;
        let element = crate::text::parse_element(&d.torsion, source.pi)?;
        let torsion = WhiteheadClass::from_unit(element)?;
        InvertibleCobordism::new(source, target, torsion, d.ident)
    }
}
