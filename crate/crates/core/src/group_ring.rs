//! Exact arithmetic in the integral group ring Z[Z/n].
//!
//! Elements are stored as length-n coefficient vectors over arbitrary-precision
//! integers, index k holding the coefficient of t^k where t generates Z/n.
//! The orientation character omega: Z/n -> {±1} is determined by a single sign
//! epsilon = omega(t); epsilon = -1 is only consistent when n is even.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::zmatrix;

/// A finite cyclic group Z/n together with an orientation character.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CyclicGroupSpec {
    n: usize,
    epsilon: i8,
}

impl CyclicGroupSpec {
    /// `n >= 1`; `epsilon` must be `+1` or `-1`, and `-1` requires even `n`.
    pub fn new(n: usize, epsilon: i8) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("group order must be >= 1".into()));
        }
        if epsilon != 1 && epsilon != -1 {
            return Err(Error::InvalidGroup(format!(
                "epsilon must be +1 or -1, got {epsilon}"
            )));
        }
        if epsilon == -1 && !n.is_multiple_of(2) {
            return Err(Error::InvalidGroup(format!(
                "epsilon = -1 requires even group order, got n = {n}"
            )));
        }
        Ok(Self { n, epsilon })
    }

    /// Z/n with the trivial orientation character.
    pub fn orientable(n: usize) -> Result<Self> {
        Self::new(n, 1)
    }

    /// The trivial group (n = 1).
    pub fn trivial() -> Self {
        Self { n: 1, epsilon: 1 }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn epsilon(&self) -> i8 {
        self.epsilon
    }

    /// omega(t^k) = epsilon^k.
    pub fn omega(&self, k: usize) -> i8 {
        if self.epsilon == 1 || k.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self != other {
            return Err(Error::GroupMismatch(
                self.n,
                self.epsilon,
                other.n,
                other.epsilon,
            ));
        }
        Ok(())
    }
}

/// An element of Z[Z/n]: coefficient k belongs to t^k.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupRingElement {
    group: CyclicGroupSpec,
    coeffs: Vec<BigInt>,
}

impl GroupRingElement {
    pub fn from_coeffs(group: CyclicGroupSpec, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::InvalidGroup(format!(
                "coefficient vector has length {}, expected {}",
                coeffs.len(),
                group.order()
            )));
        }
        Ok(Self { group, coeffs })
    }

    pub fn from_i64_coeffs(group: CyclicGroupSpec, coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(group, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(group: CyclicGroupSpec) -> Self {
        Self {
            group,
            coeffs: vec![BigInt::zero(); group.order()],
        }
    }

    pub fn one(group: CyclicGroupSpec) -> Self {
        Self::generator_power(group, 0)
    }

    /// t^k (exponent reduced mod n).
    pub fn generator_power(group: CyclicGroupSpec, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); group.order()];
        coeffs[k % group.order()] = BigInt::one();
        Self { group, coeffs }
    }

    /// 1 + t + ... + t^{n-1}.
    pub fn norm_sum(group: CyclicGroupSpec) -> Self {
        Self {
            group,
            coeffs: vec![BigInt::one(); group.order()],
        }
    }

    pub fn group(&self) -> CyclicGroupSpec {
        self.group
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k % self.group.order()]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Coefficientwise sum. Errors on mismatched groups.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.group.check_same(&other.group)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            group: self.group,
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            group: self.group,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Cyclic-convolution product: t^a * t^b = t^{(a+b) mod n}.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.group.check_same(&other.group)?;
        let n = self.group.order();
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[(i + j) % n] += a * b;
            }
        }
        Ok(Self {
            group: self.group,
            coeffs: out,
        })
    }

    /// Sum of coefficients (image under the ring map sending t to 1).
    pub fn augmentation(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// The involution induced by t^k -> omega(t^k) t^{-k}:
    /// coefficient k of the result is omega(t^{n-k}) * c_{(n-k) mod n}.
    pub fn involution(&self) -> Self {
        let n = self.group.order();
        let mut out = vec![BigInt::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            let j = (n - k) % n;
            out[j] = if self.group.omega(k) == 1 {
                c.clone()
            } else {
                -c
            };
        }
        Self {
            group: self.group,
            coeffs: out,
        }
    }

    /// Exact determinant of the n x n circulant matrix of multiplication by
    /// this element on Z^n. Multiplicative; |det| = 1 characterizes units.
    pub fn circulant_determinant(&self) -> BigInt {
        let n = self.group.order();
        let m = zmatrix::IntMat::from_fn(n, n, |i, j| self.coeffs[(n + i - j) % n].clone());
        m.determinant()
    }

    /// True iff multiplication by this element is invertible over Z.
    pub fn is_unit(&self) -> bool {
        self.circulant_determinant().abs().is_one()
    }

    /// Exact inverse of a unit, verified by convolution before returning.
    pub fn invert_unit(&self) -> Result<Self> {
        let n = self.group.order();
        let det = self.circulant_determinant();
        if !det.abs().is_one() {
            return Err(Error::NotAUnit {
                n,
                determinant: det,
            });
        }
        // Cramer on C y = e_0: with det = ±1 every solution entry is an integer.
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let m = zmatrix::IntMat::from_fn(n, n, |r, j| {
                if j == i {
                    if r == 0 {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                } else {
                    self.coeffs[(n + r - j) % n].clone()
                }
            });
            coeffs.push(m.determinant() * &det);
        }
        let inv = Self {
            group: self.group,
            coeffs,
        };
        let check = self.mul(&inv)?;
        assert!(check.is_one(), "unit inversion failed exact verification");
        Ok(inv)
    }

    /// The ring automorphism induced by t -> t^a, gcd(a, n) = 1.
    /// Coefficient k moves to index (a k) mod n.
    pub fn apply_automorphism(&self, a: i64) -> Result<Self> {
        let n = self.group.order();
        let a_red = reduce_mod(a, n);
        if BigInt::from(a_red).gcd(&BigInt::from(n)) != BigInt::one() {
            return Err(Error::NotCoprime { a, n });
        }
        let mut out = vec![BigInt::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[(a_red as usize * k) % n] = c.clone();
        }
        Ok(Self {
            group: self.group,
            coeffs: out,
        })
    }

    /// Some((sign, k)) iff the element is a trivial unit ±t^k: exactly one
    /// nonzero coefficient, equal to ±1.
    pub fn trivial_unit_parts(&self) -> Option<(i8, usize)> {
        let mut found: Option<(i8, usize)> = None;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if found.is_some() {
                return None;
            }
            if c.is_one() {
                found = Some((1, k));
            } else if (-c).is_one() {
                found = Some((-1, k));
            } else {
                return None;
            }
        }
        found
    }

    pub fn is_trivial_unit(&self) -> bool {
        self.trivial_unit_parts().is_some()
    }
}

/// Reduce an integer automorphism parameter into 0..n.
pub(crate) fn reduce_mod(a: i64, n: usize) -> u64 {
    let n = n as i64;
    a.rem_euclid(n) as u64
}

/// Inverse of a mod n (gcd(a, n) = 1 required).
pub(crate) fn inverse_mod(a: i64, n: usize) -> Result<u64> {
    let a_red = BigInt::from(reduce_mod(a, n));
    let nn = BigInt::from(n);
    let e = a_red.extended_gcd(&nn);
    if !e.gcd.is_one() {
        return Err(Error::NotCoprime { a, n });
    }
    let inv = e.x.mod_floor(&nn);
    Ok(u64::try_from(inv).expect("reduced residue fits in u64"))
}
