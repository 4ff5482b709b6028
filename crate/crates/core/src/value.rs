//! Exact carrier elements.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// One exact element of an incline carrier.
///
/// The variant doubles as the carrier tag; values of different variants are
/// never combinable. All payloads are exact: rationals are arbitrary
/// precision, the max-times carrier stores the exponent `t` of `(1/2)^t`
/// so that multiplication is exponent addition and square roots halve the
/// exponent, and chain/lattice elements are indices into their carrier's
/// description.
///
/// The derived `Ord` is structural and used only for canonical storage
/// (sets, deterministic enumeration). The algebraic order is
/// [`crate::algebra::Incline::leq`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Value {
    /// Boolean carrier element.
    Bool(bool),
    /// Max-min carrier: a rational in `[0, 1]`.
    MaxMin(BigRational),
    /// Max-plus carrier: a rational in `[-inf, 0]`; `None` is `-inf`.
    MaxPlus(Option<BigRational>),
    /// Max-times carrier in exponent form: `Some(t)` encodes `(1/2)^t`
    /// with `t >= 0`; `None` is the zero element.
    MaxTimes(Option<BigRational>),
    /// Chain carrier: level index, `0` is the bottom.
    Chain(u64),
    /// Lattice carrier: node index into the lattice table.
    Lattice(usize),
}

impl Value {
    /// Name of the carrier family this value belongs to.
    pub fn carrier_name(&self) -> &'static str {
        match self {
            Value::Bool(_) => "boolean",
            Value::MaxMin(_) => "maxmin",
            Value::MaxPlus(_) => "maxplus",
            Value::MaxTimes(_) => "maxtimes",
            Value::Chain(_) => "chain",
            Value::Lattice(_) => "lattice",
        }
    }
}

/// Parse an exact rational from `p`, `p/q` or decimal notation (`-0.25`).
pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = |reason: &str| Error::InvalidValue {
        carrier: "rational",
        reason: format!("{reason}: {s:?}"),
    };
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad("bad numerator"))?;
        let d: BigInt = den.trim().parse().map_err(|_| bad("bad denominator"))?;
        if d.is_zero() {
            return Err(bad("zero denominator"));
        }
        Ok(BigRational::new(n, d))
    } else if let Some((int, frac)) = s.split_once('.') {
        let sign = if int.trim_start().starts_with('-') {
            -1
        } else {
            1
        };
        let i: BigInt = if int.trim() == "-" {
            BigInt::zero()
        } else {
            int.trim().parse().map_err(|_| bad("bad integer part"))?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("bad fractional part"));
        }
        let f: BigInt = frac.parse().map_err(|_| bad("bad fractional part"))?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let abs = BigRational::new(i.abs() * &scale + f, scale);
        Ok(if sign < 0 { -abs } else { abs })
    } else {
        let n: BigInt = s.parse().map_err(|_| bad("not a rational"))?;
        Ok(BigRational::from_integer(n))
    }
}

/// Canonical display for an exact rational: lowest terms, `p` when the
/// denominator is one, `p/q` otherwise.
pub(crate) fn format_rational(r: &BigRational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
