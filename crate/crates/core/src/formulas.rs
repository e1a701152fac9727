//! Exact evaluation of the induced 4-cycle counting formulas for the nested
//! blow-ups of C4 and Θ(2,2,2).
//!
//! For both families this module provides the non-edge closed forms, the
//! level recurrence for `T_N` with its per-term breakdown, the three partial
//! sums `Q_N`, `R_N`, `S_N` of the unrolled recurrence (as literal sums and as
//! geometric-series closed forms), and the closed form of `T_N` in two
//! variants: the coefficients given in the theorem statements and the ones
//! obtained at the end of the derivations. The two variants disagree; both are
//! evaluated over exact rationals so the disagreement is observable.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::FormulaError;

/// Arbitrary-precision non-negative integer.
pub type ExactInt = BigUint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    C4,
    Theta222,
}

impl Family {
    pub fn base_order(self) -> u32 {
        match self {
            Family::C4 => 4,
            Family::Theta222 => 5,
        }
    }

    /// Induced 4-cycles in the base graph.
    pub fn base_count(self) -> u32 {
        match self {
            Family::C4 => 1,
            Family::Theta222 => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::C4 => "c4",
            Family::Theta222 => "theta222",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaVariant {
    /// Coefficients as printed in the theorem statement.
    StatedTheorem,
    /// Coefficients reached at the end of the proof.
    DerivedProof,
}

impl FormulaVariant {
    pub const ALL: [FormulaVariant; 2] = [FormulaVariant::StatedTheorem, FormulaVariant::DerivedProof];
}

/// A rational number kept with the denominator the formula was written with.
///
/// Equality compares values, so `5670/5670 == 1/1`. `Display` prints the
/// integer when the division is exact and the unreduced `p/q` otherwise.
#[derive(Debug, Clone)]
pub struct ExactRational {
    numerator: BigInt,
    denominator: BigUint,
}

impl ExactRational {
    pub fn new(numerator: BigInt, denominator: BigUint) -> Self {
        assert!(!denominator.is_zero(), "zero denominator");
        ExactRational {
            numerator,
            denominator,
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn denominator(&self) -> &BigUint {
        &self.denominator
    }

    pub fn is_integer(&self) -> bool {
        (self.numerator.magnitude() % &self.denominator).is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.numerator.is_negative()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer()
            .then(|| &self.numerator / BigInt::from(self.denominator.clone()))
    }

    /// `Some(n)` iff the value is a non-negative integer.
    pub fn to_exact_int(&self) -> Option<ExactInt> {
        self.to_integer().and_then(|i| i.to_biguint())
    }

    /// Same value in lowest terms.
    pub fn reduced(&self) -> ExactRational {
        let g = self.numerator.magnitude().gcd(&self.denominator);
        ExactRational {
            numerator: &self.numerator / BigInt::from(g.clone()),
            denominator: &self.denominator / g,
        }
    }

    pub fn equals_int(&self, value: &ExactInt) -> bool {
        self.to_exact_int().as_ref() == Some(value)
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.reduced();
        r.numerator.to_f64().unwrap_or(f64::NAN) / r.denominator.to_f64().unwrap_or(f64::NAN)
    }
}

impl PartialEq for ExactRational {
    fn eq(&self, other: &Self) -> bool {
        &self.numerator * BigInt::from(other.denominator.clone())
            == &other.numerator * BigInt::from(self.denominator.clone())
    }
}

impl Eq for ExactRational {}

impl From<ExactInt> for ExactRational {
    fn from(value: ExactInt) -> Self {
        ExactRational::new(BigInt::from(value), BigUint::one())
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_integer() {
            Some(i) => write!(f, "{i}"),
            None => write!(f, "{}/{}", self.numerator, self.denominator),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError(String);

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational {:?}", self.0)
    }
}

impl std::error::Error for ParseRationalError {}

impl FromStr for ExactRational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_owned());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d.parse::<BigUint>().map_err(|_| err())?),
            None => (s, BigUint::one()),
        };
        if den.is_zero() {
            return Err(err());
        }
        Ok(ExactRational::new(num.parse().map_err(|_| err())?, den))
    }
}

/// The summands of one recurrence step, by the shape of the 4-cycles they
/// count in `G_N` relative to its blobs (the copies of `G_{N-1}`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermBreakdown {
    /// Cycles lying entirely inside one blob.
    pub copies_term: ExactInt,
    /// One vertex in each of four blobs.
    pub all_blob_term: ExactInt,
    /// A non-edge of one blob plus one vertex in each of two further blobs.
    pub one_nonedge_term: ExactInt,
    /// A non-edge in each of two adjacent blobs.
    pub two_nonedge_term: ExactInt,
}

impl TermBreakdown {
    pub fn total(&self) -> ExactInt {
        &self.copies_term + &self.all_blob_term + &self.one_nonedge_term + &self.two_nonedge_term
    }
}

/// A partial sum evaluated both ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumPair {
    pub summation: ExactInt,
    pub closed: ExactInt,
}

impl SumPair {
    pub fn agrees(&self) -> bool {
        self.summation == self.closed
    }
}

/// `T_N = Q_N + R_N + S_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialSums {
    pub q: SumPair,
    pub r: SumPair,
    pub s: SumPair,
}

impl PartialSums {
    pub fn all_agree(&self) -> bool {
        self.q.agrees() && self.r.agrees() && self.s.agrees()
    }

    /// Sum of the literal summation forms.
    pub fn total(&self) -> ExactInt {
        &self.q.summation + &self.r.summation + &self.s.summation
    }
}

fn pow(base: u32, exp: u32) -> ExactInt {
    num_traits::pow(BigUint::from(base), exp as usize)
}

fn ipow(base: u32, exp: u32) -> BigInt {
    BigInt::from(pow(base, exp))
}

/// `Σ_{i=lo}^{hi} term(i)`, zero when `lo > hi`.
fn sum_range(lo: u32, hi: u32, term: impl Fn(u32) -> ExactInt) -> ExactInt {
    (lo..=hi).map(term).sum()
}

fn choose2(x: &ExactInt) -> ExactInt {
    if x.is_zero() {
        return ExactInt::zero();
    }
    (x * (x - 1u32)) >> 1
}

fn div_exact(context: &'static str, dividend: BigInt, divisor: u32) -> Result<ExactInt, FormulaError> {
    let (q, r) = dividend.div_rem(&BigInt::from(divisor));
    if !r.is_zero() || q.sign() == Sign::Minus {
        return Err(FormulaError::InexactDivision {
            context,
            dividend: dividend.to_string(),
            divisor: divisor.to_string(),
        });
    }
    Ok(q.to_biguint().expect("non-negative"))
}

/// `n_N`, the order of `G_N`.
pub fn order(family: Family, level: u32) -> ExactInt {
    pow(family.base_order(), level + 1)
}

// ---------------------------------------------------------------------------
// Non-edges and edges

/// `m^c_N = 4^{N+1} (4^{N+1} - 1) / 6` for the C4 family, cross-checked
/// against `C(4^{N+1}, 2) - 4^{N+1} Σ_{i=0}^{N} 4^i`.
pub fn c4_nonedges_closed(level: u32) -> ExactInt {
    let closed = c4_nonedges_quotient_form(level);
    let binomial = c4_nonedges_binomial_form(level);
    assert_eq!(closed, binomial, "C4 non-edge forms disagree at level {level}");
    closed
}

pub fn c4_nonedges_quotient_form(level: u32) -> ExactInt {
    let v = ipow(4, level + 1);
    div_exact("C4 non-edges", &v * (&v - 1), 6).expect("4^k (4^k - 1) is divisible by 6")
}

pub fn c4_nonedges_binomial_form(level: u32) -> ExactInt {
    let v = pow(4, level + 1);
    choose2(&v) - c4_edges_closed(level)
}

/// `|E(G_N)| = 4^{N+1} Σ_{i=0}^{N} 4^i` for the C4 family.
pub fn c4_edges_closed(level: u32) -> ExactInt {
    pow(4, level + 1) * sum_range(0, level, |i| pow(4, i))
}

/// `m^c_N = 5^N (5^{N+1} - 1)` for the Θ(2,2,2) family, cross-checked
/// against `4 · 5^N Σ_{i=0}^{N} 5^i`.
pub fn theta_nonedges_closed(level: u32) -> ExactInt {
    let closed = pow(5, level) * (pow(5, level + 1) - 1u32);
    assert_eq!(
        closed,
        theta_nonedges_sum_form(level),
        "Θ non-edge forms disagree at level {level}"
    );
    closed
}

pub fn theta_nonedges_sum_form(level: u32) -> ExactInt {
    4u32 * pow(5, level) * sum_range(0, level, |i| pow(5, i))
}

/// `|E(G_N)| = 6 · 5^N Σ_{i=0}^{N} 5^i` for the Θ(2,2,2) family.
pub fn theta_edges_closed(level: u32) -> ExactInt {
    6u32 * pow(5, level) * sum_range(0, level, |i| pow(5, i))
}

pub fn nonedges_closed(family: Family, level: u32) -> ExactInt {
    match family {
        Family::C4 => c4_nonedges_closed(level),
        Family::Theta222 => theta_nonedges_closed(level),
    }
}

pub fn edges_closed(family: Family, level: u32) -> ExactInt {
    match family {
        Family::C4 => c4_edges_closed(level),
        Family::Theta222 => theta_edges_closed(level),
    }
}

// ---------------------------------------------------------------------------
// Recurrence

/// One step `T_{k-1} -> T_k`, `k >= 1`.
fn recurrence_step(family: Family, level: u32, prev: &ExactInt) -> TermBreakdown {
    debug_assert!(level >= 1);
    // Vertices per blob and non-edges per blob at this level.
    let blob = pow(family.base_order(), level);
    let m = nonedges_closed(family, level - 1);
    let blob2 = &blob * &blob;
    match family {
        Family::C4 => TermBreakdown {
            copies_term: 4u32 * prev,
            all_blob_term: &blob2 * &blob2,
            one_nonedge_term: 4u32 * &m * &blob2,
            two_nonedge_term: 4u32 * &m * &m,
        },
        Family::Theta222 => TermBreakdown {
            copies_term: 5u32 * prev,
            all_blob_term: 3u32 * &blob2 * &blob2,
            one_nonedge_term: 9u32 * &m * &blob2,
            two_nonedge_term: 6u32 * &m * &m,
        },
    }
}

/// `T_N` by iterating the recurrence from `T_0`, together with the
/// breakdown of the last step (`None` at `N = 0`).
pub fn recurrence_with_breakdown(family: Family, level: u32) -> (ExactInt, Option<TermBreakdown>) {
    let mut t = ExactInt::from(family.base_count());
    let mut last = None;
    for k in 1..=level {
        let step = recurrence_step(family, k, &t);
        t = step.total();
        last = Some(step);
    }
    (t, last)
}

pub fn recurrence_t(family: Family, level: u32) -> ExactInt {
    recurrence_with_breakdown(family, level).0
}

pub fn c4_recurrence_t(level: u32) -> ExactInt {
    recurrence_t(Family::C4, level)
}

pub fn theta_recurrence_t(level: u32) -> ExactInt {
    recurrence_t(Family::Theta222, level)
}

// ---------------------------------------------------------------------------
// Partial sums

pub fn c4_partial_sums(level: u32) -> Result<PartialSums, FormulaError> {
    let n = level;
    let m = c4_nonedges_closed;

    let q_sum = pow(4, n) * sum_range(0, n, |i| pow(4, 3 * i));
    let r_sum = sum_range(1, n, |i| pow(4, n + i + 1) * m(i - 1));
    let s_sum = sum_range(1, n, |i| {
        let mc = m(n - i);
        pow(4, i) * &mc * &mc
    });

    let (x, x2, x3) = (ipow(4, n), ipow(4, 2 * n), ipow(4, 3 * n));
    let q_closed = div_exact("C4 Q_N", &x * (64 * &x3 - 1), 63)?;
    let r_closed = div_exact("C4 R_N", ipow(4, n + 1) * (320 * &x3 - 336 * &x2 + 16), 1890)?;
    let s_closed = div_exact(
        "C4 S_N",
        ipow(4, n + 1) * (80 * &x3 - 168 * &x2 + 105 * &x - 17),
        2835,
    )?;

    Ok(PartialSums {
        q: SumPair { summation: q_sum, closed: q_closed },
        r: SumPair { summation: r_sum, closed: r_closed },
        s: SumPair { summation: s_sum, closed: s_closed },
    })
}

pub fn theta_partial_sums(level: u32) -> Result<PartialSums, FormulaError> {
    let n = level;
    let m = theta_nonedges_closed;

    let q_sum = 3u32 * pow(5, n) * sum_range(0, n, |i| pow(5, 3 * i));
    let r_sum = 6u32
        * sum_range(1, n, |i| {
            let mc = m(n - i);
            pow(5, i - 1) * &mc * &mc
        });
    let s_sum = 9u32 * sum_range(1, n, |i| pow(5, n + i) * m(i - 1));

    let (x, x2, x3) = (ipow(5, n), ipow(5, 2 * n), ipow(5, 3 * n));
    let q_closed = div_exact("Θ Q_N", 3 * &x * (125 * &x3 - 1), 124)?;
    let r_closed = div_exact("Θ R_N", &x * (150 * &x3 - 310 * &x2 + 186 * &x - 26), 620)?;
    let s_closed = div_exact("Θ S_N", 3 * &x * (750 * &x3 - 775 * &x2 + 25), 1240)?;

    Ok(PartialSums {
        q: SumPair { summation: q_sum, closed: q_closed },
        r: SumPair { summation: r_sum, closed: r_closed },
        s: SumPair { summation: s_sum, closed: s_closed },
    })
}

pub fn partial_sums(family: Family, level: u32) -> Result<PartialSums, FormulaError> {
    match family {
        Family::C4 => c4_partial_sums(level),
        Family::Theta222 => theta_partial_sums(level),
    }
}

// ---------------------------------------------------------------------------
// Closed forms of T_N

pub fn c4_closed_t(level: u32, variant: FormulaVariant) -> ExactRational {
    let x = ipow(4, level);
    let (x2, x3) = (ipow(4, 2 * level), ipow(4, 3 * level));
    let numerator = match variant {
        FormulaVariant::StatedTheorem => 8 * &x * (1280 * &x3 + 672 * &x2 + 105 * &x - 713),
        FormulaVariant::DerivedProof => &x * (10240 * &x3 - 5376 * &x2 + 840 * &x - 34),
    };
    ExactRational::new(numerator, BigUint::from(5670u32))
}

pub fn theta_closed_t(level: u32, variant: FormulaVariant) -> ExactRational {
    let x = ipow(5, level);
    let (x2, x3) = (ipow(5, 2 * level), ipow(5, 3 * level));
    let constant = match variant {
        FormulaVariant::StatedTheorem => 3877,
        FormulaVariant::DerivedProof => 7,
    };
    let numerator = &x * (6300 * &x3 - 2945 * &x2 + 372 * &x - constant);
    ExactRational::new(numerator, BigUint::from(1240u32))
}

pub fn closed_t(family: Family, level: u32, variant: FormulaVariant) -> ExactRational {
    match family {
        Family::C4 => c4_closed_t(level, variant),
        Family::Theta222 => theta_closed_t(level, variant),
    }
}
