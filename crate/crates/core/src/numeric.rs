//! High-precision numerics for the character-logarithm embedding.
//!
//! Everything here is advisory: positive decisions made from these values are
//! always re-verified exactly in the group ring before they count.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::group_ring::GroupRingElement;

/// Default output precision in decimal digits.
pub const DEFAULT_PRECISION_DIGITS: u32 = 50;

/// Lattice coordinates within this distance of an integer round confidently.
pub const ROUNDING_TOLERANCE: &str = "1e-20";

/// Distances between the rounding tolerance and this bound are treated as
/// numerically ambiguous rather than as evidence of non-membership.
pub const AMBIGUITY_BOUND: &str = "1e-10";

const RM: RoundingMode = RoundingMode::ToEven;

pub(crate) struct NumCtx {
    pub p: usize,
    cc: Consts,
}

fn bits_for_digits(digits: usize) -> usize {
    // 10 bits per 3 decimal digits plus guard bits, bucketed to whole words
    // so trig-table cache entries are shared across nearby coefficient sizes
    (digits * 10 / 3 + 96).next_multiple_of(64)
}

impl NumCtx {
    pub fn new(digits: usize) -> Self {
        Self {
            p: bits_for_digits(digits),
            cc: Consts::new().expect("constants cache"),
        }
    }

    pub fn pi(&mut self) -> BigFloat {
        self.cc.pi(self.p, RM)
    }

    pub fn bigint(&mut self, x: &BigInt) -> BigFloat {
        self.parse(&x.to_string())
    }

    pub fn int(&self, x: i64) -> BigFloat {
        BigFloat::from_i64(x, self.p)
    }

    pub fn parse(&mut self, s: &str) -> BigFloat {
        BigFloat::parse(s, Radix::Dec, self.p, RM, &mut self.cc)
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.p, RM)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.p, RM)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.p, RM)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.p, RM)
    }

    pub fn ln(&mut self, a: &BigFloat) -> BigFloat {
        a.ln(self.p, RM, &mut self.cc)
    }

    pub fn cos(&mut self, a: &BigFloat) -> BigFloat {
        a.cos(self.p, RM, &mut self.cc)
    }

    pub fn sin(&mut self, a: &BigFloat) -> BigFloat {
        a.sin(self.p, RM, &mut self.cc)
    }

    pub fn dot(&self, a: &[BigFloat], b: &[BigFloat]) -> BigFloat {
        let mut acc = self.int(0);
        for (x, y) in a.iter().zip(b) {
            acc = self.add(&acc, &self.mul(x, y));
        }
        acc
    }
}

pub(crate) fn gt(a: &BigFloat, b: &BigFloat) -> bool {
    matches!(a.cmp(b), Some(o) if o > 0)
}

type TrigTables = std::rc::Rc<(Vec<BigFloat>, Vec<BigFloat>)>;

fn root_tables(n: usize, ctx: &mut NumCtx) -> TrigTables {
    use std::cell::RefCell;
    use std::collections::HashMap;
    use std::rc::Rc;
    thread_local! {
        static CACHE: RefCell<HashMap<(usize, usize), TrigTables>> = RefCell::new(HashMap::new());
    }
    CACHE.with(|cache| {
        if let Some(t) = cache.borrow().get(&(n, ctx.p)) {
            return Rc::clone(t);
        }
        // cos/sin of 2 pi r / n for r = 0..n
        let two_pi = {
            let pi = ctx.pi();
            ctx.add(&pi, &pi)
        };
        let n_f = ctx.int(n as i64);
        let mut cos_table = Vec::with_capacity(n);
        let mut sin_table = Vec::with_capacity(n);
        for r in 0..n {
            let ang = ctx.div(&ctx.mul(&two_pi, &ctx.int(r as i64)), &n_f);
            cos_table.push(ctx.cos(&ang));
            sin_table.push(ctx.sin(&ang));
        }
        let t = Rc::new((cos_table, sin_table));
        cache.borrow_mut().insert((n, ctx.p), Rc::clone(&t));
        t
    })
}

/// (log |chi_k(x)|) for k = 1 .. floor(n/2), where chi_k sends t to the k-th
/// n-th root of unity. Working precision is raised above the requested digit
/// count by the decimal size of the coefficients, because the character sums
/// cancel down from coefficient scale to unit scale.
pub(crate) fn char_log_norms(x: &GroupRingElement, digits: u32) -> Vec<BigFloat> {
    let n = x.group().order();
    let coeff_len = x
        .coeffs()
        .iter()
        .map(|c| c.abs().to_string().len())
        .max()
        .unwrap_or(1);
    let mut ctx = NumCtx::new(digits as usize + coeff_len + n.to_string().len() + 8);
    let tables = root_tables(n, &mut ctx);
    let (cos_table, sin_table) = (&tables.0, &tables.1);

    let mut out = Vec::with_capacity(n / 2);
    let half = ctx.parse("0.5");
    for k in 1..=n / 2 {
        let mut re = ctx.int(0);
        let mut im = ctx.int(0);
        for (j, c) in x.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cf = ctx.bigint(c);
            let r = (j * k) % n;
            re = ctx.add(&re, &ctx.mul(&cf, &cos_table[r]));
            im = ctx.add(&im, &ctx.mul(&cf, &sin_table[r]));
        }
        let norm2 = ctx.add(&ctx.mul(&re, &re), &ctx.mul(&im, &im));
        assert!(
            !norm2.is_zero() && !norm2.is_negative(),
            "character value vanished; log embedding is only defined for units"
        );
        let ln = ctx.ln(&norm2);
        out.push(ctx.mul(&ln, &half));
    }
    out
}

/// Incremental numeric rank of a growing set of vectors, by modified
/// Gram-Schmidt with the rounding tolerance applied to residual norms.
pub(crate) struct RankAccumulator {
    ctx: NumCtx,
    basis: Vec<Vec<BigFloat>>,
    tol2: BigFloat,
}

impl RankAccumulator {
    pub fn new(digits: u32) -> Self {
        let mut ctx = NumCtx::new(digits as usize + 8);
        let tol = ctx.parse(ROUNDING_TOLERANCE);
        let tol2 = ctx.mul(&tol, &tol);
        Self {
            ctx,
            basis: Vec::new(),
            tol2,
        }
    }

    /// Adds the vector to the basis iff it increases the numeric rank.
    pub fn try_add(&mut self, v: &[BigFloat]) -> bool {
        let mut w: Vec<BigFloat> = v.to_vec();
        for b in &self.basis {
            let coeff = self.ctx.div(&self.ctx.dot(&w, b), &self.ctx.dot(b, b));
            for (wi, bi) in w.iter_mut().zip(b) {
                *wi = self.ctx.sub(wi, &self.ctx.mul(&coeff, bi));
            }
        }
        let norm2 = self.ctx.dot(&w, &w);
        if gt(&norm2, &self.tol2) {
            self.basis.push(w);
            true
        } else {
            false
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

pub(crate) fn numeric_rank(vectors: &[Vec<BigFloat>], digits: u32) -> usize {
    let mut acc = RankAccumulator::new(digits);
    for v in vectors {
        acc.try_add(v);
    }
    acc.rank()
}

pub(crate) struct Lstsq {
    pub rounded: Vec<BigInt>,
    pub max_round_dist: BigFloat,
    pub residual_inf: BigFloat,
}

/// Least squares for `sum_i e_i basis[i] ~ target` via the normal equations,
/// followed by rounding each coordinate to the nearest integer.
/// Errors when the basis is numerically dependent (singular normal matrix).
pub(crate) fn lstsq_round(
    basis: &[Vec<BigFloat>],
    target: &[BigFloat],
    digits: u32,
) -> crate::error::Result<Lstsq> {
    let k = basis.len();
    let mut ctx = NumCtx::new(digits as usize + 8);
    let pivot_floor = {
        let t = ctx.parse(ROUNDING_TOLERANCE);
        ctx.mul(&t, &t)
    };
    // normal equations G e = r
    let mut g: Vec<Vec<BigFloat>> = (0..k)
        .map(|i| (0..k).map(|j| ctx.dot(&basis[i], &basis[j])).collect())
        .collect();
    let mut r: Vec<BigFloat> = (0..k).map(|i| ctx.dot(&basis[i], target)).collect();

    // Gaussian elimination with partial pivoting
    for col in 0..k {
        let piv = (col..k)
            .max_by(|&a, &b| {
                g[a][col]
                    .abs()
                    .cmp(&g[b][col].abs())
                    .unwrap_or(0)
                    .cmp(&0)
            })
            .expect("nonempty pivot range");
        g.swap(col, piv);
        r.swap(col, piv);
        if !gt(&g[col][col].abs(), &pivot_floor) {
            return Err(crate::error::Error::InconsistentBasis(
                "generator log-vectors are numerically dependent".into(),
            ));
        }
        let pivot_row = g[col].clone();
        for row in col + 1..k {
            let f = ctx.div(&g[row][col], &pivot_row[col]);
            for (j, pv) in pivot_row.iter().enumerate().skip(col) {
                g[row][j] = ctx.sub(&g[row][j], &ctx.mul(&f, pv));
            }
            r[row] = ctx.sub(&r[row], &ctx.mul(&f, &r[col]));
        }
    }
    let mut e = vec![ctx.int(0); k];
    for col in (0..k).rev() {
        let mut acc = r[col].clone();
        for j in col + 1..k {
            acc = ctx.sub(&acc, &ctx.mul(&g[col][j], &e[j]));
        }
        e[col] = ctx.div(&acc, &g[col][col]);
    }

    // round and measure
    let mut rounded = Vec::with_capacity(k);
    let mut max_dist = ctx.int(0);
    for ei in &e {
        let (z, dist) = round_to_bigint(ei, &ctx);
        if gt(&dist, &max_dist) {
            max_dist = dist;
        }
        rounded.push(z);
    }

    // residual of the real solution, sup norm
    let dim = target.len();
    let mut residual = ctx.int(0);
    for row in 0..dim {
        let mut fit = ctx.int(0);
        for (i, b) in basis.iter().enumerate() {
            fit = ctx.add(&fit, &ctx.mul(&e[i], &b[row]));
        }
        let d = ctx.sub(&fit, &target[row]).abs();
        if gt(&d, &residual) {
            residual = d;
        }
    }

    Ok(Lstsq {
        rounded,
        max_round_dist: max_dist,
        residual_inf: residual,
    })
}

/// Nearest integer to a BigFloat, with the distance to it.
/// Parses the decimal scientific representation, so it is exact as long as
/// the float carries more mantissa digits than the integer part needs.
pub(crate) fn round_to_bigint(x: &BigFloat, ctx: &NumCtx) -> (BigInt, BigFloat) {
    let z = bigint_nearest(x);
    let zf = {
        // re-embed exactly: |z| always fits well inside working precision here
        let mut tmp = NumCtx::new(z.abs().to_string().len() + 40);
        tmp.p = ctx.p.max(tmp.p);
        tmp.bigint(&z)
    };
    let dist = ctx.sub(x, &zf).abs();
    (z, dist)
}

fn bigint_nearest(x: &BigFloat) -> BigInt {
    let s = format!("{x}");
    parse_sci_to_bigint_nearest(&s)
}

/// Parse a decimal scientific-notation string ("-d.ddddde-7") to the nearest
/// integer. Half-way cases round away from zero; callers treat anything that
/// far from an integer as out of the confident zone anyway.
fn parse_sci_to_bigint_nearest(s: &str) -> BigInt {
    let s = s.trim();
    if s == "0" || s == "0.0" || s == "-0.0" {
        return BigInt::from(0);
    }
    let (mant, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().expect("exponent")),
        None => (s, 0),
    };
    let negative = mant.starts_with('-');
    let mant = mant.trim_start_matches(['-', '+']);
    let (int_part, frac_part) = match mant.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mant, ""),
    };
    let digits: String = format!("{int_part}{frac_part}");
    // value = digits * 10^(exp - frac_part.len())
    let shift = exp - frac_part.len() as i64;
    let mag = if shift >= 0 {
        digits.parse::<BigInt>().expect("digits") * BigInt::from(10).pow(shift as u32)
    } else {
        let cut = digits.len() as i64 + shift; // number of digits before the point
        if cut <= 0 {
            // |x| < 1: rounds to 0 unless the first significant digit makes it >= 0.5
            if cut == 0 && digits.as_bytes().first().is_some_and(|&d| d >= b'5') {
                BigInt::from(1)
            } else {
                BigInt::from(0)
            }
        } else {
            let cut = cut as usize;
            let head = digits[..cut].parse::<BigInt>().expect("digits");
            let round_up = digits.as_bytes().get(cut).is_some_and(|&d| d >= b'5');
            if round_up {
                head + 1
            } else {
                head
            }
        }
    };
    if negative {
        -mag
    } else {
        mag
    }
}

/// Lossy short decimal form used for reports (about 15 significant digits);
/// identical in text and JSON output paths.
pub fn display_float(x: &BigFloat) -> String {
    let s = format!("{x}");
    match s.parse::<f64>() {
        Ok(v) => format!("{v:.12e}"),
        Err(_) => s,
    }
}
