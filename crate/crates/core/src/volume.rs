//! Closed-form volume constants of Seifert-fibered geometries, as exact
//! rational multiples of π².

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::ratlin::{int, Rational};

/// `4 χ² / |e|`: coefficient of π² for base orbifold Euler characteristic `χ`
/// and Euler number `e ≠ 0`.
pub fn seifert_volume(chi: &Rational, e: &Rational) -> Result<Rational> {
    if e.is_zero() {
        return Err(Error::ZeroEuler);
    }
    Ok(int(4) * chi * chi / e.abs())
}

/// `4 n² |e|`: coefficient of π² for the universal-cover geometry.
pub fn sl2tilde_volume(n: i64, e: &Rational) -> Rational {
    int(4) * int(n) * int(n) * e.abs()
}

/// `"p/q · π²"`, or `"0"` for a vanishing coefficient.
pub fn format_pi_squared(c: &Rational) -> String {
    if c.is_zero() {
        "0".to_string()
    } else {
        format!("{c} · π²")
    }
}
