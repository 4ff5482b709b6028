//! Shared helpers for unit tests.

use crate::algebra::Incline;
use crate::matrix::Matrix;
use crate::value::Value;

/// The divisor lattice of `n` under lcm/gcd, a bounded distributive lattice.
pub(crate) fn divisor_lattice(n: u64) -> Incline {
    let divs: Vec<u64> = (1..=n).filter(|&d| n.is_multiple_of(d)).collect();
    let idx = |v: u64| divs.iter().position(|&d| d == v).unwrap();
    let join = divs
        .iter()
        .map(|&a| {
            divs.iter()
                .map(|&b| idx(a / num_integer::gcd(a, b) * b))
                .collect()
        })
        .collect();
    let meet = divs
        .iter()
        .map(|&a| divs.iter().map(|&b| idx(num_integer::gcd(a, b))).collect())
        .collect();
    Incline::lattice(divs.iter().map(|d| d.to_string()).collect(), join, meet).unwrap()
}

/// Parse a literal grid into a matrix over `alg`.
pub(crate) fn mat(alg: &Incline, rows: &[&[&str]]) -> Matrix {
    let parsed = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| alg.parse_value(s).unwrap())
                .collect::<Vec<_>>()
        })
        .collect();
    Matrix::from_rows(alg.clone(), parsed).unwrap()
}

/// Max-min literal shorthand.
pub(crate) fn mm(s: &str) -> Value {
    Incline::max_min().parse_value(s).unwrap()
}
