//! Incline algebras: the six built-in carriers and their operations.
//!
//! An incline is a semilattice-ordered semiring in which addition is the
//! least upper bound and products shrink (`x ⊗ y ≤ x` and `x ⊗ y ≤ y`).
//! Every built-in carrier here is *normal*: it has `𝟎` and `𝟏`, unique
//! square roots, residuals witnessing `x ≤ y ⇒ x = y ⊗ z`, and the
//! arithmetic-geometric inequality.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::value::{format_rational, parse_rational, Value};

/// Explicit join/meet tables for a finite bounded distributive lattice.
///
/// Tables are indexed by element position; `elements` carries the display
/// names. Checked construction validates the lattice laws; see
/// [`Incline::lattice`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeTable {
    elements: Vec<String>,
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
    totally_ordered: bool,
}

impl LatticeTable {
    fn new(elements: Vec<String>, join: Vec<Vec<usize>>, meet: Vec<Vec<usize>>) -> Result<Self> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::InvalidLattice("no elements".into()));
        }
        for (name, table) in [("join", &join), ("meet", &meet)] {
            if table.len() != n || table.iter().any(|row| row.len() != n) {
                return Err(Error::InvalidLattice(format!(
                    "{name} table is not {n}x{n}"
                )));
            }
            for (i, row) in table.iter().enumerate() {
                for (j, &e) in row.iter().enumerate() {
                    if e >= n {
                        return Err(Error::InvalidLattice(format!(
                            "{name}[{i}][{j}] = {e} is out of range"
                        )));
                    }
                }
            }
        }
        // 𝟎 and 𝟏 must exist even for tables that skip law validation,
        // otherwise the algebra has no identities to operate with.
        let bottom = (0..n)
            .find(|&b| (0..n).all(|a| join[b][a] == a))
            .ok_or_else(|| Error::InvalidLattice("no least element".into()))?;
        let top = (0..n)
            .find(|&t| (0..n).all(|a| meet[t][a] == a))
            .ok_or_else(|| Error::InvalidLattice("no greatest element".into()))?;
        let totally_ordered = (0..n).all(|a| (0..n).all(|b| join[a][b] == a || join[a][b] == b));
        Ok(LatticeTable {
            elements,
            join,
            meet,
            bottom,
            top,
            totally_ordered,
        })
    }

    /// Validate the bounded distributive lattice laws, returning the first
    /// broken law with a witness triple.
    fn validate(&self) -> Result<()> {
        let n = self.elements.len();
        let witness = |ids: &[usize]| {
            ids.iter()
                .map(|&i| self.elements[i].clone())
                .collect::<Vec<_>>()
                .join(", ")
        };
        for a in 0..n {
            if self.join[a][a] != a || self.meet[a][a] != a {
                return Err(Error::InvalidLattice(format!(
                    "idempotence fails at {}",
                    witness(&[a])
                )));
            }
            for b in 0..n {
                if self.join[a][b] != self.join[b][a] || self.meet[a][b] != self.meet[b][a] {
                    return Err(Error::InvalidLattice(format!(
                        "commutativity fails at {}",
                        witness(&[a, b])
                    )));
                }
                if self.join[a][self.meet[a][b]] != a || self.meet[a][self.join[a][b]] != a {
                    return Err(Error::InvalidLattice(format!(
                        "absorption fails at {}",
                        witness(&[a, b])
                    )));
                }
                for c in 0..n {
                    if self.join[self.join[a][b]][c] != self.join[a][self.join[b][c]]
                        || self.meet[self.meet[a][b]][c] != self.meet[a][self.meet[b][c]]
                    {
                        return Err(Error::InvalidLattice(format!(
                            "associativity fails at {}",
                            witness(&[a, b, c])
                        )));
                    }
                    if self.meet[a][self.join[b][c]] != self.join[self.meet[a][b]][self.meet[a][c]]
                    {
                        return Err(Error::InvalidLattice(format!(
                            "distributivity fails at {}",
                            witness(&[a, b, c])
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn join_table(&self) -> &[Vec<usize>] {
        &self.join
    }

    pub fn meet_table(&self) -> &[Vec<usize>] {
        &self.meet
    }
}

/// Carrier family of an [`Incline`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kind {
    Boolean,
    MaxMin,
    MaxPlus,
    MaxTimes,
    Chain { size: u64 },
    Lattice(Arc<LatticeTable>),
}

/// An incline algebra: a carrier description plus its operations.
///
/// Values are immutable and every operation is pure, so algebras may be
/// shared freely across threads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Incline {
    kind: Kind,
}

impl Incline {
    /// The two-element Boolean carrier `{𝟎, 𝟏}` with or/and.
    pub fn boolean() -> Self {
        Incline {
            kind: Kind::Boolean,
        }
    }

    /// Rationals in `[0, 1]` with max/min.
    pub fn max_min() -> Self {
        Incline { kind: Kind::MaxMin }
    }

    /// Rationals in `[-inf, 0]` with max/plus.
    pub fn max_plus() -> Self {
        Incline {
            kind: Kind::MaxPlus,
        }
    }

    /// The interval `[0, 1]` with max/times, stored in exponent form:
    /// a value is `(1/2)^t` for a nonnegative rational `t`, plus a
    /// distinguished zero. This realizes the carrier exactly, without
    /// irrational intermediate values.
    pub fn max_times() -> Self {
        Incline {
            kind: Kind::MaxTimes,
        }
    }

    /// A totally ordered chain with `size >= 2` levels, bottom `0` and
    /// top `size - 1`, displayed as the rationals `i/(size-1)`.
    pub fn chain(size: u64) -> Result<Self> {
        if size < 2 {
            return Err(Error::InvalidValue {
                carrier: "chain",
                reason: format!("chain needs at least 2 levels, got {size}"),
            });
        }
        Ok(Incline {
            kind: Kind::Chain { size },
        })
    }

    /// A finite bounded distributive lattice given by explicit join/meet
    /// tables. The lattice laws (idempotence, commutativity, associativity,
    /// absorption, distributivity) and the existence of `𝟎` and `𝟏` are
    /// validated here.
    pub fn lattice(
        elements: Vec<String>,
        join: Vec<Vec<usize>>,
        meet: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let table = LatticeTable::new(elements, join, meet)?;
        table.validate()?;
        Ok(Incline {
            kind: Kind::Lattice(Arc::new(table)),
        })
    }

    /// Like [`Incline::lattice`] but skipping the lattice-law validation
    /// (table shapes and the existence of `𝟎`/`𝟏` are still required).
    /// Intended for feeding deliberately broken tables to the law checker.
    pub fn lattice_unchecked(
        elements: Vec<String>,
        join: Vec<Vec<usize>>,
        meet: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let table = LatticeTable::new(elements, join, meet)?;
        Ok(Incline {
            kind: Kind::Lattice(Arc::new(table)),
        })
    }

    pub fn kind(&self) -> &Kind {
        &self.kind
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            Kind::Boolean => "boolean",
            Kind::MaxMin => "maxmin",
            Kind::MaxPlus => "maxplus",
            Kind::MaxTimes => "maxtimes",
            Kind::Chain { .. } => "chain",
            Kind::Lattice(_) => "lattice",
        }
    }

    /// Whether the algebraic order is total.
    pub fn totally_ordered(&self) -> bool {
        match &self.kind {
            Kind::Lattice(t) => t.totally_ordered,
            _ => true,
        }
    }

    /// Whether multiplication is idempotent (`x ⊗ x = x`).
    pub fn regular(&self) -> bool {
        matches!(
            self.kind,
            Kind::Boolean | Kind::MaxMin | Kind::Chain { .. } | Kind::Lattice(_)
        )
    }

    /// Whether the carrier is a normal incline (identities, LI-property,
    /// unique square roots, AG-property). True for every built-in.
    pub fn normal(&self) -> bool {
        true
    }

    /// Whether the carrier has finitely many elements.
    pub fn is_finite(&self) -> bool {
        matches!(
            self.kind,
            Kind::Boolean | Kind::Chain { .. } | Kind::Lattice(_)
        )
    }

    /// All elements of a finite carrier in canonical order; `None` for the
    /// infinite carriers.
    pub fn enumerate(&self) -> Option<Vec<Value>> {
        match &self.kind {
            Kind::Boolean => Some(vec![Value::Bool(false), Value::Bool(true)]),
            Kind::Chain { size } => Some((0..*size).map(Value::Chain).collect()),
            Kind::Lattice(t) => Some((0..t.elements.len()).map(Value::Lattice).collect()),
            _ => None,
        }
    }

    /// The additive identity `𝟎`, the least element.
    pub fn zero(&self) -> Value {
        match &self.kind {
            Kind::Boolean => Value::Bool(false),
            Kind::MaxMin => Value::MaxMin(BigRational::zero()),
            Kind::MaxPlus => Value::MaxPlus(None),
            Kind::MaxTimes => Value::MaxTimes(None),
            Kind::Chain { .. } => Value::Chain(0),
            Kind::Lattice(t) => Value::Lattice(t.bottom),
        }
    }

    /// The multiplicative identity `𝟏`, the greatest element.
    pub fn one(&self) -> Value {
        match &self.kind {
            Kind::Boolean => Value::Bool(true),
            Kind::MaxMin => Value::MaxMin(BigRational::one()),
            Kind::MaxPlus => Value::MaxPlus(Some(BigRational::zero())),
            Kind::MaxTimes => Value::MaxTimes(Some(BigRational::zero())),
            Kind::Chain { size } => Value::Chain(size - 1),
            Kind::Lattice(t) => Value::Lattice(t.top),
        }
    }

    pub fn is_zero(&self, v: &Value) -> bool {
        *v == self.zero()
    }

    pub fn is_one(&self, v: &Value) -> bool {
        *v == self.one()
    }

    /// Whether `v` is an element of this carrier.
    pub fn contains(&self, v: &Value) -> bool {
        match (&self.kind, v) {
            (Kind::Boolean, Value::Bool(_)) => true,
            (Kind::MaxMin, Value::MaxMin(r)) => !r.is_negative() && *r <= BigRational::one(),
            (Kind::MaxPlus, Value::MaxPlus(None)) => true,
            (Kind::MaxPlus, Value::MaxPlus(Some(r))) => !r.is_positive(),
            (Kind::MaxTimes, Value::MaxTimes(None)) => true,
            (Kind::MaxTimes, Value::MaxTimes(Some(t))) => !t.is_negative(),
            (Kind::Chain { size }, Value::Chain(i)) => i < size,
            (Kind::Lattice(t), Value::Lattice(i)) => *i < t.elements.len(),
            _ => false,
        }
    }

    pub(crate) fn check_member(&self, v: &Value) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::CarrierMismatch {
                expected: self.kind_name(),
                found: v.carrier_name(),
            })
        }
    }

    fn check_pair(&self, x: &Value, y: &Value) -> Result<()> {
        self.check_member(x)?;
        self.check_member(y)
    }

    /// `x ⊕ y`: the least upper bound.
    pub fn oplus(&self, x: &Value, y: &Value) -> Result<Value> {
        self.check_pair(x, y)?;
        Ok(self.add(x, y))
    }

    /// `x ⊗ y`: the semigroup product; always below both factors.
    pub fn otimes(&self, x: &Value, y: &Value) -> Result<Value> {
        self.check_pair(x, y)?;
        Ok(self.mul(x, y))
    }

    /// The algebraic order: `x ≤ y` iff `x ⊕ y = y`. Total exactly when
    /// [`Incline::totally_ordered`].
    pub fn leq(&self, x: &Value, y: &Value) -> Result<bool> {
        self.check_pair(x, y)?;
        Ok(self.le(x, y))
    }

    /// The unique `c` with `c ⊗ c = x`.
    pub fn sqrt_of(&self, x: &Value) -> Result<Value> {
        self.check_member(x)?;
        Ok(self.sqrt(x))
    }

    /// A `z` with `y ⊗ z = x`, defined whenever `x ≤ y`. The choice is
    /// canonical per carrier: `z = x` for the multiplicatively idempotent
    /// carriers, exponent/offset subtraction for max-plus and max-times
    /// (with `z = 𝟏` when `y = 𝟎`).
    pub fn residual(&self, x: &Value, y: &Value) -> Result<Value> {
        self.check_pair(x, y)?;
        if !self.le(x, y) {
            return Err(Error::ResidualUndefined {
                x: self.format_value(x),
                y: self.format_value(y),
            });
        }
        Ok(self.residual_in(x, y))
    }

    // Internal untagged operations. Matrices validate entries at
    // construction, so these never see a foreign value.

    pub(crate) fn add(&self, x: &Value, y: &Value) -> Value {
        match (x, y) {
            (Value::Bool(a), Value::Bool(b)) => Value::Bool(*a || *b),
            (Value::MaxMin(a), Value::MaxMin(b)) => Value::MaxMin(a.max(b).clone()),
            (Value::MaxPlus(a), Value::MaxPlus(b)) => match (a, b) {
                (None, _) => Value::MaxPlus(b.clone()),
                (_, None) => Value::MaxPlus(a.clone()),
                (Some(a), Some(b)) => Value::MaxPlus(Some(a.max(b).clone())),
            },
            // (1/2)^s ⊕ (1/2)^t is the larger value, i.e. the smaller exponent.
            (Value::MaxTimes(a), Value::MaxTimes(b)) => match (a, b) {
                (None, _) => Value::MaxTimes(b.clone()),
                (_, None) => Value::MaxTimes(a.clone()),
                (Some(s), Some(t)) => Value::MaxTimes(Some(s.min(t).clone())),
            },
            (Value::Chain(a), Value::Chain(b)) => Value::Chain(*a.max(b)),
            (Value::Lattice(a), Value::Lattice(b)) => match &self.kind {
                Kind::Lattice(t) => Value::Lattice(t.join[*a][*b]),
                _ => unreachable!("lattice value outside lattice algebra"),
            },
            _ => unreachable!("carrier mismatch after validation"),
        }
    }

    pub(crate) fn mul(&self, x: &Value, y: &Value) -> Value {
        match (x, y) {
            (Value::Bool(a), Value::Bool(b)) => Value::Bool(*a && *b),
            (Value::MaxMin(a), Value::MaxMin(b)) => Value::MaxMin(a.min(b).clone()),
            (Value::MaxPlus(a), Value::MaxPlus(b)) => match (a, b) {
                (Some(a), Some(b)) => Value::MaxPlus(Some(a + b)),
                _ => Value::MaxPlus(None),
            },
            (Value::MaxTimes(a), Value::MaxTimes(b)) => match (a, b) {
                (Some(s), Some(t)) => Value::MaxTimes(Some(s + t)),
                _ => Value::MaxTimes(None),
            },
            (Value::Chain(a), Value::Chain(b)) => Value::Chain(*a.min(b)),
            (Value::Lattice(a), Value::Lattice(b)) => match &self.kind {
                Kind::Lattice(t) => Value::Lattice(t.meet[*a][*b]),
                _ => unreachable!("lattice value outside lattice algebra"),
            },
            _ => unreachable!("carrier mismatch after validation"),
        }
    }

    pub(crate) fn le(&self, x: &Value, y: &Value) -> bool {
        self.add(x, y) == *y
    }

    pub(crate) fn sqrt(&self, x: &Value) -> Value {
        match x {
            Value::MaxPlus(Some(r)) => {
                Value::MaxPlus(Some(r / BigRational::from_integer(2.into())))
            }
            Value::MaxTimes(Some(t)) => {
                Value::MaxTimes(Some(t / BigRational::from_integer(2.into())))
            }
            // Regular carriers: every element is its own root. The bottoms
            // of max-plus/max-times are forced by uniqueness.
            _ => x.clone(),
        }
    }

    pub(crate) fn residual_in(&self, x: &Value, y: &Value) -> Value {
        match (x, y) {
            (Value::Bool(a), Value::Bool(b)) => {
                if *b {
                    Value::Bool(*a)
                } else {
                    Value::Bool(true)
                }
            }
            (Value::MaxPlus(a), Value::MaxPlus(b)) => match (a, b) {
                (_, None) => Value::MaxPlus(Some(BigRational::zero())),
                (None, Some(_)) => Value::MaxPlus(None),
                (Some(a), Some(b)) => Value::MaxPlus(Some(a - b)),
            },
            (Value::MaxTimes(a), Value::MaxTimes(b)) => match (a, b) {
                (_, None) => Value::MaxTimes(Some(BigRational::zero())),
                (None, Some(_)) => Value::MaxTimes(None),
                (Some(s), Some(t)) => Value::MaxTimes(Some(s - t)),
            },
            // Max-min, chain and lattice: z = x always satisfies y ⊗ z = x
            // when x ≤ y.
            _ => x.clone(),
        }
    }

    /// Parse a value literal in this carrier's syntax.
    ///
    /// Boolean `0`/`1`; max-min and chain `p/q`; max-plus `p/q` (nonpositive)
    /// or `-inf`; max-times `pow:p/q` (nonnegative exponent) or `0`; lattice
    /// literals are element names. Rationals also accept decimal notation,
    /// which converts exactly.
    pub fn parse_value(&self, s: &str) -> Result<Value> {
        let s = s.trim();
        match &self.kind {
            Kind::Boolean => match s {
                "0" => Ok(Value::Bool(false)),
                "1" => Ok(Value::Bool(true)),
                _ => Err(Error::InvalidValue {
                    carrier: "boolean",
                    reason: format!("expected \"0\" or \"1\", got {s:?}"),
                }),
            },
            Kind::MaxMin => {
                let r = parse_rational(s)?;
                if r.is_negative() || r > BigRational::one() {
                    return Err(Error::InvalidValue {
                        carrier: "maxmin",
                        reason: format!("{s} is outside [0, 1]"),
                    });
                }
                Ok(Value::MaxMin(r))
            }
            Kind::MaxPlus => {
                if s == "-inf" {
                    return Ok(Value::MaxPlus(None));
                }
                let r = parse_rational(s)?;
                if r.is_positive() {
                    return Err(Error::InvalidValue {
                        carrier: "maxplus",
                        reason: format!("{s} is positive"),
                    });
                }
                Ok(Value::MaxPlus(Some(r)))
            }
            Kind::MaxTimes => {
                if s == "0" {
                    return Ok(Value::MaxTimes(None));
                }
                let t = s.strip_prefix("pow:").ok_or_else(|| Error::InvalidValue {
                    carrier: "maxtimes",
                    reason: format!("expected \"0\" or \"pow:p/q\", got {s:?}"),
                })?;
                let t = parse_rational(t)?;
                if t.is_negative() {
                    return Err(Error::InvalidValue {
                        carrier: "maxtimes",
                        reason: format!("negative exponent in {s:?}"),
                    });
                }
                Ok(Value::MaxTimes(Some(t)))
            }
            Kind::Chain { size } => {
                let r = parse_rational(s)?;
                if r.is_negative() || r > BigRational::one() {
                    return Err(Error::InvalidValue {
                        carrier: "chain",
                        reason: format!("{s} is outside [0, 1]"),
                    });
                }
                // The level i of a k-chain displays as i/(k-1); accept only
                // exact levels.
                let scaled = &r * BigRational::from_integer(BigInt::from(size - 1));
                if !scaled.is_integer() {
                    return Err(Error::InvalidValue {
                        carrier: "chain",
                        reason: format!("{s} is not a level of a {size}-element chain"),
                    });
                }
                let idx: u64 = scaled
                    .to_integer()
                    .try_into()
                    .map_err(|_| Error::InvalidValue {
                        carrier: "chain",
                        reason: format!("{s} overflows the chain index"),
                    })?;
                Ok(Value::Chain(idx))
            }
            Kind::Lattice(t) => match t.elements.iter().position(|e| e == s) {
                Some(i) => Ok(Value::Lattice(i)),
                None => Err(Error::InvalidValue {
                    carrier: "lattice",
                    reason: format!("{s:?} is not a lattice element"),
                }),
            },
        }
    }

    /// Canonical literal for a value of this carrier.
    pub fn format_value(&self, v: &Value) -> String {
        match (v, &self.kind) {
            (Value::Bool(b), _) => if *b { "1" } else { "0" }.to_string(),
            (Value::MaxMin(r), _) => format_rational(r),
            (Value::MaxPlus(None), _) => "-inf".to_string(),
            (Value::MaxPlus(Some(r)), _) => format_rational(r),
            (Value::MaxTimes(None), _) => "0".to_string(),
            (Value::MaxTimes(Some(t)), _) => format!("pow:{}", format_rational(t)),
            (Value::Chain(i), Kind::Chain { size }) => {
                format_rational(&BigRational::new(BigInt::from(*i), BigInt::from(size - 1)))
            }
            (Value::Lattice(i), Kind::Lattice(t)) => t
                .elements
                .get(*i)
                .cloned()
                .unwrap_or_else(|| format!("#{i}")),
            (v, _) => format!("{v:?}"),
        }
    }

    /// Draw a random element, exactly. Rationals use numerators and
    /// denominators bounded by `max_denominator`; the bottoms of max-plus
    /// and max-times are drawn with a small fixed weight.
    pub fn sample_value<R: Rng>(&self, rng: &mut R, max_denominator: u64) -> Value {
        let max_den = max_denominator.max(1);
        match &self.kind {
            Kind::Boolean => Value::Bool(rng.gen_bool(0.5)),
            Kind::MaxMin => {
                let q = rng.gen_range(1..=max_den);
                let p = rng.gen_range(0..=q);
                Value::MaxMin(BigRational::new(p.into(), q.into()))
            }
            Kind::MaxPlus => {
                if rng.gen_range(0..16) == 0 {
                    Value::MaxPlus(None)
                } else {
                    let q = rng.gen_range(1..=max_den);
                    let p = rng.gen_range(0..=max_den);
                    Value::MaxPlus(Some(-BigRational::new(p.into(), q.into())))
                }
            }
            Kind::MaxTimes => {
                if rng.gen_range(0..16) == 0 {
                    Value::MaxTimes(None)
                } else {
                    let q = rng.gen_range(1..=max_den);
                    let p = rng.gen_range(0..=max_den);
                    Value::MaxTimes(Some(BigRational::new(p.into(), q.into())))
                }
            }
            Kind::Chain { size } => Value::Chain(rng.gen_range(0..*size)),
            Kind::Lattice(t) => Value::Lattice(rng.gen_range(0..t.elements.len())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::divisor_lattice;

    fn mm(s: &str) -> Value {
        Incline::max_min().parse_value(s).unwrap()
    }

    fn mp(s: &str) -> Value {
        Incline::max_plus().parse_value(s).unwrap()
    }

    #[test]
    fn oplus_is_lub() {
        let a = Incline::max_min();
        assert_eq!(a.oplus(&mm("1/4"), &mm("3/4")).unwrap(), mm("3/4"));
        let p = Incline::max_plus();
        assert_eq!(p.oplus(&mp("-5"), &mp("-2")).unwrap(), mp("-2"));
        let b = Incline::boolean();
        assert_eq!(
            b.oplus(&Value::Bool(false), &Value::Bool(false)).unwrap(),
            Value::Bool(false)
        );
    }

    #[test]
    fn otimes_examples() {
        let a = Incline::max_min();
        assert_eq!(a.otimes(&mm("1/4"), &mm("3/4")).unwrap(), mm("1/4"));
        let p = Incline::max_plus();
        assert_eq!(p.otimes(&mp("-2"), &mp("-3")).unwrap(), mp("-5"));
        let t = Incline::max_times();
        assert_eq!(
            t.otimes(
                &t.parse_value("pow:1").unwrap(),
                &t.parse_value("pow:2").unwrap()
            )
            .unwrap(),
            t.parse_value("pow:3").unwrap()
        );
    }

    #[test]
    fn leq_agrees_with_oplus() {
        let p = Incline::max_plus();
        assert!(p.leq(&mp("-5"), &mp("-2")).unwrap());
        assert!(!p.leq(&mp("-2"), &mp("-5")).unwrap());
        // In the divisor lattice of 30, 2 and 3 are incomparable.
        let l = divisor_lattice(30);
        let two = l.parse_value("2").unwrap();
        let three = l.parse_value("3").unwrap();
        assert!(!l.leq(&two, &three).unwrap());
        assert!(!l.leq(&three, &two).unwrap());
        for alg in [
            Incline::boolean(),
            Incline::max_min(),
            Incline::max_plus(),
            Incline::max_times(),
            Incline::chain(4).unwrap(),
            divisor_lattice(30),
        ] {
            assert!(alg.leq(&alg.zero(), &alg.one()).unwrap());
            assert!(alg.leq(&alg.zero(), &alg.zero()).unwrap());
        }
    }

    #[test]
    fn sqrt_examples() {
        let p = Incline::max_plus();
        assert_eq!(p.sqrt_of(&mp("-4")).unwrap(), mp("-2"));
        assert_eq!(p.sqrt_of(&p.zero()).unwrap(), p.zero());
        let a = Incline::max_min();
        assert_eq!(a.sqrt_of(&mm("7/10")).unwrap(), mm("7/10"));
        let t = Incline::max_times();
        assert_eq!(
            t.sqrt_of(&t.parse_value("pow:3").unwrap()).unwrap(),
            t.parse_value("pow:3/2").unwrap()
        );
        assert_eq!(t.sqrt_of(&t.zero()).unwrap(), t.zero());
    }

    #[test]
    fn residual_examples() {
        let p = Incline::max_plus();
        assert_eq!(p.residual(&mp("-5"), &mp("-2")).unwrap(), mp("-3"));
        let a = Incline::max_min();
        assert_eq!(a.residual(&mm("3/10"), &mm("7/10")).unwrap(), mm("3/10"));
        let b = Incline::boolean();
        assert_eq!(
            b.residual(&Value::Bool(false), &Value::Bool(false))
                .unwrap(),
            Value::Bool(true)
        );
        // Undefined when x is not below y.
        assert!(matches!(
            a.residual(&mm("7/10"), &mm("3/10")),
            Err(Error::ResidualUndefined { .. })
        ));
    }

    #[test]
    fn carrier_mismatch_is_usage_error() {
        let a = Incline::max_min();
        let err = a.oplus(&mm("1/2"), &mp("-1")).unwrap_err();
        assert!(matches!(err, Error::CarrierMismatch { .. }));
        assert_eq!(err.class(), crate::error::ErrorClass::Usage);
    }

    #[test]
    fn chain_levels_parse_and_format() {
        let c = Incline::chain(3).unwrap();
        assert_eq!(c.parse_value("1/2").unwrap(), Value::Chain(1));
        assert_eq!(c.parse_value("0").unwrap(), Value::Chain(0));
        assert_eq!(c.parse_value("1").unwrap(), Value::Chain(2));
        assert!(c.parse_value("1/3").is_err());
        assert_eq!(c.format_value(&Value::Chain(1)), "1/2");
    }

    #[test]
    fn lattice_construction_validates() {
        // Swapping one meet entry of the divisor lattice of 6 breaks the laws.
        let divs = ["1", "2", "3", "6"].map(String::from).to_vec();
        let join = vec![
            vec![0, 1, 2, 3],
            vec![1, 1, 3, 3],
            vec![2, 3, 2, 3],
            vec![3, 3, 3, 3],
        ];
        let mut meet = vec![
            vec![0, 0, 0, 0],
            vec![0, 1, 0, 1],
            vec![0, 0, 2, 2],
            vec![0, 1, 2, 3],
        ];
        assert!(Incline::lattice(divs.clone(), join.clone(), meet.clone()).is_ok());
        meet[1][2] = 1;
        meet[2][1] = 1;
        let err = Incline::lattice(divs.clone(), join.clone(), meet.clone()).unwrap_err();
        assert!(matches!(err, Error::InvalidLattice(_)));
        // The unchecked constructor accepts it so the law checker can refute it.
        assert!(Incline::lattice_unchecked(divs, join, meet).is_ok());
    }

    #[test]
    fn flags_match_carriers() {
        assert!(Incline::boolean().regular() && Incline::boolean().totally_ordered());
        assert!(Incline::max_plus().totally_ordered() && !Incline::max_plus().regular());
        assert!(Incline::max_times().totally_ordered() && !Incline::max_times().regular());
        let l = divisor_lattice(30);
        assert!(l.regular() && !l.totally_ordered());
        for alg in [Incline::boolean(), Incline::max_plus(), l] {
            assert!(alg.normal());
        }
    }

    #[test]
    fn algebras_and_values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Incline>();
        assert_send_sync::<Value>();
    }

    #[test]
    fn maxplus_literals() {
        let p = Incline::max_plus();
        assert_eq!(p.format_value(&p.zero()), "-inf");
        assert_eq!(p.parse_value("-inf").unwrap(), p.zero());
        assert!(p.parse_value("1/2").is_err());
        assert_eq!(p.format_value(&mp("-5/2")), "-5/2");
    }
}
