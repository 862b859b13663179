//! The Whitehead group Wh(Z/n), computed with unit representatives.
//!
//! For finite cyclic groups SK_1 of the integral group ring vanishes
//! (Bass-Milnor-Serre) and Wh(Z/n) is torsion-free of rank
//! floor(n/2) + 1 - d(n) (Bass), so every class is represented by a unit of
//! Z[Z/n] and two units represent the same class iff they differ by a trivial
//! unit ±t^k. These two classical facts are the only mathematical inputs not
//! re-verified at runtime; everything else is checked exactly.

use std::collections::BTreeMap;
use std::fmt;

use astro_float::BigFloat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group_ring::{CyclicGroupSpec, GroupRingElement};
use crate::numeric;

/// An element of Wh(Z/n): a unit of Z[Z/n] modulo the trivial units ±t^k.
/// Written additively; the zero class is the class of 1.
#[derive(Clone, Eq, Debug)]
pub struct WhiteheadClass {
    rep: GroupRingElement,
}

impl WhiteheadClass {
    /// The class of a unit. Errors when the element is not a unit.
    pub fn from_unit(u: GroupRingElement) -> Result<Self> {
        let det = u.circulant_determinant();
        if !det.abs().is_one() {
            return Err(Error::NotAUnit {
                n: u.group().order(),
                determinant: det,
            });
        }
        Ok(Self::from_unit_unchecked(u))
    }

    /// For internal use where unit-ness is guaranteed algebraically
    /// (products, inverses, involutions and automorphisms of units).
    fn from_unit_unchecked(u: GroupRingElement) -> Self {
        Self {
            rep: normalize_rep(u),
        }
    }

    pub fn zero(group: CyclicGroupSpec) -> Self {
        Self::from_unit_unchecked(GroupRingElement::one(group))
    }

    pub fn group(&self) -> CyclicGroupSpec {
        self.rep.group()
    }

    /// The normalized unit representative.
    pub fn rep(&self) -> &GroupRingElement {
        &self.rep
    }

    /// True iff the representative is a trivial unit ±t^k.
    pub fn is_zero(&self) -> bool {
        self.rep.is_trivial_unit()
    }

    /// Group law (unit multiplication underneath).
    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self::from_unit_unchecked(self.rep.mul(&other.rep)?))
    }

    pub fn negate(&self) -> Self {
        Self::from_unit_unchecked(self.rep.invert_unit().expect("representative is a unit"))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.negate())
    }

    /// m-fold sum (representative power).
    pub fn scale(&self, m: i64) -> Self {
        self.scale_big(&BigInt::from(m))
    }

    pub(crate) fn scale_big(&self, m: &BigInt) -> Self {
        let group = self.group();
        let base = if m.is_negative() {
            self.rep.invert_unit().expect("representative is a unit")
        } else {
            self.rep.clone()
        };
        let mut exp = m.abs();
        let mut acc = GroupRingElement::one(group);
        let mut sq = base;
        let two = BigInt::from(2);
        while !exp.is_zero() {
            if exp.is_odd() {
                acc = acc.mul(&sq).expect("same group");
            }
            exp /= &two;
            if !exp.is_zero() {
                sq = sq.mul(&sq).expect("same group");
            }
        }
        Self::from_unit_unchecked(acc)
    }

    /// The involution tau -> tau-bar induced by t^k -> omega(t^k) t^{-k}.
    pub fn bar(&self) -> Self {
        Self::from_unit_unchecked(self.rep.involution())
    }

    /// The automorphism of Wh induced by t -> t^a, gcd(a, n) = 1.
    pub fn push_forward(&self, a: i64) -> Result<Self> {
        Ok(Self::from_unit_unchecked(self.rep.apply_automorphism(a)?))
    }

    /// Character-log embedding: (log |chi_k(rep)|) for k = 1 .. floor(n/2).
    /// Advisory only; never the basis of a decision.
    pub fn log_vector(&self, precision_digits: u32) -> Vec<BigFloat> {
        numeric::char_log_norms(&self.rep, precision_digits)
    }
}

impl PartialEq for WhiteheadClass {
    /// Exact class equality: representatives differ by a trivial unit, i.e.
    /// one is a signed rotation of the other. Equivalent to the quotient
    /// rep1 * invert_unit(rep2) being some ±t^k, but with no arithmetic;
    /// the equivalence is property-tested against the quotient route.
    fn eq(&self, other: &Self) -> bool {
        if self.group() != other.group() {
            return false;
        }
        let n = self.group().order();
        let a = self.rep.coeffs();
        let b = other.rep.coeffs();
        (0..n).any(|k| {
            (0..n).all(|j| a[j] == b[(n + j - k) % n])
                || (0..n).all(|j| a[j] == -(&b[(n + j - k) % n]))
        })
    }
}

impl fmt::Display for WhiteheadClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.rep)
    }
}

/// Canonical representative: multiply by the trivial unit ±t^k with the
/// smallest k >= 0 that puts a nonzero coefficient in degree zero, sign fixed
/// so that coefficient is positive. Every trivial unit normalizes to 1.
fn normalize_rep(u: GroupRingElement) -> GroupRingElement {
    let n = u.group().order();
    let k = (0..n)
        .find(|&k| !u.coeff((n - k) % n).is_zero())
        .expect("unit representatives are nonzero");
    let mut rotated = u
        .mul(&GroupRingElement::generator_power(u.group(), k))
        .expect("same group");
    if rotated.coeff(0).is_negative() {
        rotated = rotated.neg();
    }
    rotated
}

/// The Bass cyclic unit (1 + t + ... + t^{a-1})^m + ((1 - a^m)/n) (1 + t + ... + t^{n-1})
/// with m the multiplicative order of a mod n. Requires 1 < a < n, gcd(a, n) = 1.
/// The result is verified to be a unit before returning.
pub fn bass_unit(a: i64, group: CyclicGroupSpec) -> Result<GroupRingElement> {
    let n = group.order();
    if a <= 1 || (a as u128) >= (n as u128) || BigInt::from(a).gcd(&BigInt::from(n)) != BigInt::one()
    {
        return Err(Error::BassUnitRange { a, n });
    }
    let a = a as usize;
    let m = multiplicative_order(a, n);

    let base = GroupRingElement::from_coeffs(
        group,
        (0..n)
            .map(|k| if k < a { BigInt::one() } else { BigInt::zero() })
            .collect(),
    )?;
    let mut pow = GroupRingElement::one(group);
    for _ in 0..m {
        pow = pow.mul(&base)?;
    }
    let a_m = BigInt::from(a).pow(m as u32);
    let num = BigInt::one() - &a_m;
    let (corr, rem) = num.div_rem(&BigInt::from(n));
    assert!(rem.is_zero(), "n must divide a^m - 1 by choice of m");
    let correction = GroupRingElement::from_coeffs(group, vec![corr; n])?;
    let u = pow.add(&correction)?;

    let det = u.circulant_determinant();
    if !det.abs().is_one() {
        return Err(Error::BassUnitNotUnit {
            a: a as i64,
            n,
            determinant: det,
        });
    }
    Ok(u)
}

fn multiplicative_order(a: usize, n: usize) -> usize {
    let mut m = 1usize;
    let mut p = a % n;
    while p != 1 {
        p = (p * a) % n;
        m += 1;
        assert!(m <= n, "order search exceeded n; a and n are not coprime");
    }
    m
}

fn divisor_count(n: usize) -> usize {
    (1..=n).filter(|d| n.is_multiple_of(*d)).count()
}

/// Free rank of Wh(Z/n): floor(n/2) + 1 - d(n). Zero exactly for
/// n in {1, 2, 3, 4, 6}.
pub fn rank(n: usize) -> usize {
    assert!(n >= 1);
    n / 2 + 1 - divisor_count(n)
}

/// Ordered pool of Bass cyclic units whose classes generate a finite-index
/// subgroup of Wh(Z/n): the full-order units for 1 < a < n first, then their
/// Galois conjugates t -> t^j, then the same construction inside each cyclic
/// subgroup C_d (d | n) embedded along t -> t^{n/d}. The units with a < n/2
/// alone do not reach the full rank for composite n (first failure at
/// n = 10); the conjugates and subgroup levels are required.
fn bass_pool(group: CyclicGroupSpec) -> Vec<GroupRingElement> {
    let n = group.order();
    let mut pool = Vec::new();

    let primaries: Vec<GroupRingElement> = (2..n as i64)
        .filter(|&a| gcd_usize(a as usize, n) == 1)
        .map(|a| bass_unit(a, group).expect("primary range is valid"))
        .collect();
    pool.extend(primaries.iter().cloned());
    for j in 2..n as i64 {
        if gcd_usize(j as usize, n) != 1 {
            continue;
        }
        for u in &primaries {
            pool.push(u.apply_automorphism(j).expect("j is coprime"));
        }
    }

    let mut divisors: Vec<usize> = (2..n)
        .filter(|d| n.is_multiple_of(*d) && rank(*d) > 0)
        .collect();
    divisors.sort_unstable_by(|a, b| b.cmp(a));
    for d in divisors {
        let sub = CyclicGroupSpec::new(d, 1).expect("d >= 1");
        let sub_primaries: Vec<GroupRingElement> = (2..d as i64)
            .filter(|&a| gcd_usize(a as usize, d) == 1)
            .map(|a| bass_unit(a, sub).expect("primary range is valid"))
            .collect();
        for j in 1..d as i64 {
            if gcd_usize(j as usize, d) != 1 {
                continue;
            }
            for u in &sub_primaries {
                let conj = u.apply_automorphism(j).expect("j is coprime");
                pool.push(embed_subgroup(&conj, group));
            }
        }
    }
    pool
}

fn gcd_usize(a: usize, b: usize) -> usize {
    a.gcd(&b)
}

/// Image of an element of Z[C_d] under the ring inclusion C_d = <t^{n/d}> of
/// Z[C_n]: coefficient j moves to index j * (n/d).
fn embed_subgroup(x: &GroupRingElement, target: CyclicGroupSpec) -> GroupRingElement {
    let d = x.group().order();
    let n = target.order();
    assert!(n.is_multiple_of(d));
    let stride = n / d;
    let mut coeffs = vec![BigInt::zero(); n];
    for (j, c) in x.coeffs().iter().enumerate() {
        coeffs[(j * stride) % n] = c.clone();
    }
    GroupRingElement::from_coeffs(target, coeffs).expect("length n by construction")
}

/// Greedy maximal independent subset of the Bass pool, by numeric lattice
/// rank at the requested precision, stopping once `target_rank` classes are
/// found. Returns the classes and the rank reached. A target of zero sweeps
/// the whole pool, so that "the lattice has rank zero" is itself checked.
fn independent_bass_classes(
    group: CyclicGroupSpec,
    target_rank: usize,
    precision_digits: u32,
) -> (Vec<WhiteheadClass>, usize) {
    let mut acc = numeric::RankAccumulator::new(precision_digits);
    let mut out = Vec::new();
    for u in bass_pool(group) {
        let v = numeric::char_log_norms(&u, precision_digits);
        if acc.try_add(&v) {
            out.push(WhiteheadClass::from_unit_unchecked(u));
            if target_rank > 0 && acc.rank() == target_rank {
                break;
            }
        }
    }
    let r = acc.rank();
    (out, r)
}

/// Numeric rank of the Bass-unit log-lattice, cross-validated against the
/// closed form. A mismatch is a hard error: it signals a bug, not bad input.
pub fn cross_validated_rank(n: usize, precision_digits: u32) -> Result<usize> {
    let closed = rank(n);
    let group = CyclicGroupSpec::new(n, 1)?;
    let (classes, lattice) = independent_bass_classes(group, closed, precision_digits);
    if lattice != closed {
        return Err(Error::RankValidation {
            n,
            closed,
            lattice,
        });
    }
    // Exact confirmation in the group ring for small ranks: each selected
    // generator is exactly nonzero, and for rank 2 neither expresses in the
    // other (the numeric guess is refuted by exact arithmetic).
    if (1..=2).contains(&closed) {
        for c in &classes {
            if c.is_zero() {
                return Err(Error::InconsistentBasis(format!(
                    "n = {n}: a numerically independent generator is exactly the zero class"
                )));
            }
        }
        if closed == 2 {
            for (a, b) in [(0usize, 1usize), (1, 0)] {
                if let ExpressOutcome::InSpan(_) = express_in_generators(
                    &classes[a],
                    std::slice::from_ref(&classes[b]),
                    precision_digits,
                )? {
                    return Err(Error::InconsistentBasis(format!(
                        "n = {n}: numerically independent generators are exactly dependent"
                    )));
                }
            }
        }
    }
    Ok(lattice)
}

/// A generating set for (a finite-index subgroup of) Wh(Z/n).
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub classes: Vec<WhiteheadClass>,
    /// True when the classes are a known basis of the full group; false when
    /// they only generate the Bass-unit subgroup of finite index.
    pub exact_basis: bool,
}

#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
struct RegistryEntry {
    generators: Vec<String>,
    exact_basis: bool,
}

/// Known generator bases, keyed by group order. The shipped default carries
/// the classical n = 5 basis {1 - t - t^4}.
#[derive(Clone, Debug, Default)]
pub struct GeneratorRegistry {
    entries: BTreeMap<usize, RegistryEntry>,
}

const SHIPPED_REGISTRY: &str = include_str!("../data/registry.json");

impl GeneratorRegistry {
    pub fn shipped() -> Self {
        Self::from_json(SHIPPED_REGISTRY).expect("shipped registry is valid")
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// JSON document mapping n (as string) to {generators, exact_basis}.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: BTreeMap<String, RegistryEntry> =
            serde_json::from_str(text).map_err(|e| Error::Registry(e.to_string()))?;
        let mut entries = BTreeMap::new();
        for (k, v) in raw {
            let n: usize = k
                .parse()
                .map_err(|_| Error::Registry(format!("bad group order key {k:?}")))?;
            if n == 0 {
                return Err(Error::Registry("group order key must be >= 1".into()));
            }
            entries.insert(n, v);
        }
        Ok(Self { entries })
    }

    pub fn contains(&self, n: usize) -> bool {
        self.entries.contains_key(&n)
    }

    /// Parse and validate the entry for n over the given group, if present:
    /// all generators must be units, and an exact basis must have independent
    /// log-vectors, exactly rank(n) of them.
    fn classes_for(
        &self,
        group: CyclicGroupSpec,
        precision_digits: u32,
    ) -> Result<Option<GeneratorSet>> {
        let n = group.order();
        let Some(entry) = self.entries.get(&n) else {
            return Ok(None);
        };
        let mut classes = Vec::with_capacity(entry.generators.len());
        for s in &entry.generators {
            let el = crate::text::parse_element(s, group)?;
            classes.push(WhiteheadClass::from_unit(el)?);
        }
        if entry.exact_basis && classes.len() != rank(n) {
            return Err(Error::Registry(format!(
                "entry for n = {n} claims an exact basis with {} generators but rank is {}",
                classes.len(),
                rank(n)
            )));
        }
        let vecs: Vec<Vec<BigFloat>> = classes
            .iter()
            .map(|c| c.log_vector(precision_digits))
            .collect();
        if numeric::numeric_rank(&vecs, precision_digits) != classes.len() {
            return Err(Error::Registry(format!(
                "registry generators for n = {n} have dependent log-vectors"
            )));
        }
        Ok(Some(GeneratorSet {
            classes,
            exact_basis: entry.exact_basis,
        }))
    }
}

/// Generators of Wh(Z/n): the registry entry when present, otherwise a
/// maximal independent set of Bass-unit classes flagged as a finite-index
/// subgroup. The empty set is an exact basis when the rank is zero.
pub fn generators(
    group: CyclicGroupSpec,
    registry: &GeneratorRegistry,
    precision_digits: u32,
) -> Result<GeneratorSet> {
    if let Some(set) = registry.classes_for(group, precision_digits)? {
        return Ok(set);
    }
    let n = group.order();
    let target = rank(n);
    if target == 0 {
        return Ok(GeneratorSet {
            classes: Vec::new(),
            exact_basis: true,
        });
    }
    let (classes, reached) = independent_bass_classes(group, target, precision_digits);
    if reached != target {
        return Err(Error::RankValidation {
            n,
            closed: target,
            lattice: reached,
        });
    }
    Ok(GeneratorSet {
        classes,
        exact_basis: false,
    })
}

/// Result of expressing a class in a generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExpressOutcome {
    /// Exponent vector e with c = sum_i e_i g_i, verified exactly.
    InSpan(Vec<BigInt>),
    /// The class is not in the integer span of the generators.
    NotInSpan,
}

/// Solve log_vector(c) ~ sum_i e_i log_vector(g_i) by least squares, round to
/// integers, then verify exactly in the group ring. A verified answer is
/// exact; NotInSpan is reported only when the numeric solution is far from
/// integral (the generators are independent, so the real solution is unique).
/// Distances inside the ambiguity zone produce a precision error instead.
pub fn express_in_generators(
    c: &WhiteheadClass,
    gens: &[WhiteheadClass],
    precision_digits: u32,
) -> Result<ExpressOutcome> {
    for g in gens {
        if g.group() != c.group() {
            return Err(Error::GroupMismatch(
                c.group().order(),
                c.group().epsilon(),
                g.group().order(),
                g.group().epsilon(),
            ));
        }
    }
    if gens.is_empty() {
        return Ok(if c.is_zero() {
            ExpressOutcome::InSpan(Vec::new())
        } else {
            ExpressOutcome::NotInSpan
        });
    }

    let basis: Vec<Vec<BigFloat>> = gens
        .iter()
        .map(|g| g.log_vector(precision_digits))
        .collect();
    let target = c.log_vector(precision_digits);
    let sol = numeric::lstsq_round(&basis, &target, precision_digits)?;

    if verify_combination(c, gens, &sol.rounded)? {
        return Ok(ExpressOutcome::InSpan(sol.rounded));
    }

    let mut ctx = numeric::NumCtx::new(precision_digits as usize + 8);
    let ambiguous = ctx.parse(numeric::AMBIGUITY_BOUND);
    if numeric::gt(&sol.max_round_dist, &ambiguous) || numeric::gt(&sol.residual_inf, &ambiguous) {
        Ok(ExpressOutcome::NotInSpan)
    } else {
        Err(Error::PrecisionInsufficient(format!(
            "coordinates of the class sit within {} of integers (max deviation {}) yet the rounded \
             combination fails exact verification; raise the precision",
            numeric::AMBIGUITY_BOUND,
            numeric::display_float(&sol.max_round_dist),
        )))
    }
}

/// Exact check that c = sum_i e_i g_i in Wh.
fn verify_combination(
    c: &WhiteheadClass,
    gens: &[WhiteheadClass],
    exponents: &[BigInt],
) -> Result<bool> {
    let mut acc = WhiteheadClass::zero(c.group());
    for (g, e) in gens.iter().zip(exponents) {
        acc = acc.add(&g.scale_big(e))?;
    }
    Ok(&acc == c)
}
