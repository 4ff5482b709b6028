//! Axiom checking for incline carriers: exhaustive over finite carriers,
//! seeded sampling over infinite ones.
//!
//! The suite covers the incline axioms (semilattice addition, semigroup
//! multiplication, distributivity, absorption), the identities and bounds,
//! the normal-incline properties (square roots, residuals, the
//! arithmetic-geometric inequality and the sum-of-squares identity it
//! implies), plus idempotent multiplication on regular carriers and
//! comparability on totally ordered ones.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::Incline;
use crate::error::{Error, Result};
use crate::value::Value;

/// Default bound on sampled numerators/denominators.
pub const DEFAULT_SAMPLE_DENOMINATOR: u64 = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LawMode {
    /// Check every triple of a finite carrier.
    Exhaustive,
    /// Check `samples` seeded random triples.
    Sampled { samples: u64, seed: u64 },
}

/// One law's verdict: pass/fail, the number of triples checked, and a
/// counterexample triple on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawCheck {
    pub law: &'static str,
    pub cases: u64,
    pub pass: bool,
    pub counterexample: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub carrier: String,
    pub mode: String,
    pub checks: Vec<LawCheck>,
}

impl LawReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&LawCheck> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

type LawFn = fn(&Incline, &Value, &Value, &Value) -> bool;

fn laws_for(alg: &Incline) -> Vec<(&'static str, LawFn)> {
    let mut laws: Vec<(&'static str, LawFn)> = vec![
        ("oplus-idempotent", |a, x, _, _| a.add(x, x) == *x),
        ("oplus-commutative", |a, x, y, _| a.add(x, y) == a.add(y, x)),
        ("oplus-associative", |a, x, y, z| {
            a.add(&a.add(x, y), z) == a.add(x, &a.add(y, z))
        }),
        ("otimes-commutative", |a, x, y, _| {
            a.mul(x, y) == a.mul(y, x)
        }),
        ("otimes-associative", |a, x, y, z| {
            a.mul(&a.mul(x, y), z) == a.mul(x, &a.mul(y, z))
        }),
        ("otimes-distributes-over-oplus", |a, x, y, z| {
            a.mul(x, &a.add(y, z)) == a.add(&a.mul(x, y), &a.mul(x, z))
        }),
        ("absorption", |a, x, y, _| a.add(x, &a.mul(x, y)) == *x),
        ("zero-annihilates", |a, x, _, _| {
            a.mul(&a.zero(), x) == a.zero()
        }),
        ("zero-identity-for-oplus", |a, x, _, _| {
            a.add(&a.zero(), x) == *x
        }),
        ("one-identity-for-otimes", |a, x, _, _| {
            a.mul(&a.one(), x) == *x
        }),
        ("one-absorbs-oplus", |a, x, _, _| {
            a.add(&a.one(), x) == a.one()
        }),
        ("bounds", |a, x, _, _| {
            a.le(&a.zero(), x) && a.le(x, &a.one())
        }),
        ("product-below-factors", |a, x, y, _| {
            let p = a.mul(x, y);
            a.le(&p, x) && a.le(&p, y)
        }),
        ("sqrt-squares-back", |a, x, _, _| {
            let r = a.sqrt(x);
            a.mul(&r, &r) == *x
        }),
        ("sqrt-multiplicative", |a, x, y, _| {
            a.sqrt(&a.mul(x, y)) == a.mul(&a.sqrt(x), &a.sqrt(y))
        }),
        ("sqrt-monotone", |a, x, y, _| {
            let above = a.add(x, y);
            a.le(&a.sqrt(x), &a.sqrt(&above)) && (!a.le(x, y) || a.le(&a.sqrt(x), &a.sqrt(y)))
        }),
        ("sqrt-of-square", |a, x, _, _| a.sqrt(&a.mul(x, x)) == *x),
        ("sqrt-unique", |a, x, y, _| {
            a.mul(x, x) != a.mul(y, y) || x == y
        }),
        ("residual-recovers", |a, x, y, _| {
            let above = a.add(x, y);
            let fresh = a.residual_in(x, &above);
            let recovered = a.mul(&above, &fresh) == *x;
            let direct = !a.le(x, y) || a.mul(y, &a.residual_in(x, y)) == *x;
            recovered && direct
        }),
        ("ag-inequality", |a, x, y, _| {
            a.le(&a.mul(x, y), &a.add(&a.mul(x, x), &a.mul(y, y)))
        }),
        ("sum-of-squares", |a, x, y, _| {
            let s = a.add(x, y);
            a.mul(&s, &s) == a.add(&a.mul(x, x), &a.mul(y, y))
        }),
    ];
    if alg.regular() {
        laws.push(("otimes-idempotent", |a, x, _, _| a.mul(x, x) == *x));
    }
    if alg.totally_ordered() {
        laws.push(("total-order", |a, x, y, _| a.le(x, y) || a.le(y, x)));
    }
    laws
}

struct LawState {
    law: &'static str,
    f: LawFn,
    cases: u64,
    counterexample: Option<Vec<String>>,
}

fn run<I: Iterator<Item = (Value, Value, Value)>>(alg: &Incline, triples: I) -> Vec<LawCheck> {
    let mut states: Vec<LawState> = laws_for(alg)
        .into_iter()
        .map(|(law, f)| LawState {
            law,
            f,
            cases: 0,
            counterexample: None,
        })
        .collect();
    for (x, y, z) in triples {
        for s in &mut states {
            s.cases += 1;
            if s.counterexample.is_none() && !(s.f)(alg, &x, &y, &z) {
                s.counterexample = Some(vec![
                    alg.format_value(&x),
                    alg.format_value(&y),
                    alg.format_value(&z),
                ]);
            }
        }
    }
    states
        .into_iter()
        .map(|s| LawCheck {
            law: s.law,
            cases: s.cases,
            pass: s.counterexample.is_none(),
            counterexample: s.counterexample,
        })
        .collect()
}

/// Check the incline and normal-incline laws on `alg`, exhaustively over
/// all element triples of a finite carrier or on seeded random triples.
/// Failures report the first counterexample triple encountered per law.
pub fn check_axioms(alg: &Incline, mode: LawMode) -> Result<LawReport> {
    let checks = match mode {
        LawMode::Exhaustive => {
            let elems = alg.enumerate().ok_or(Error::UnsupportedCarrier {
                requirement: "finite",
                carrier: alg.kind_name(),
            })?;
            let triples = elems.iter().flat_map(|x| {
                let elems = &elems;
                elems
                    .iter()
                    .flat_map(move |y| elems.iter().map(move |z| (x.clone(), y.clone(), z.clone())))
            });
            run(alg, triples)
        }
        LawMode::Sampled { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let triples = (0..samples).map(|_| {
                (
                    alg.sample_value(&mut rng, DEFAULT_SAMPLE_DENOMINATOR),
                    alg.sample_value(&mut rng, DEFAULT_SAMPLE_DENOMINATOR),
                    alg.sample_value(&mut rng, DEFAULT_SAMPLE_DENOMINATOR),
                )
            });
            run(alg, triples)
        }
    };
    Ok(LawReport {
        carrier: alg.kind_name().to_string(),
        mode: match mode {
            LawMode::Exhaustive => "exhaustive".to_string(),
            LawMode::Sampled { .. } => "sampled".to_string(),
        },
        checks,
    })
}
