//! Smallest power of a fixed-angle rotation that lands near the identity.
//!
//! `U = exp(iϖ ẽ_I)` has `U^N = exp(iNϖ ẽ_I)`, so we want the least `N ≥ 1`
//! with `Nϖ` within `ε` of a multiple of `2π`. With `x = ϖ / 2π`, the
//! record minima of `‖Nx‖` (distance to the nearest integer) occur exactly at
//! the convergent denominators of `x`, so the first convergent denominator
//! meeting the bound is the minimal `N`.

use std::f64::consts::TAU;

use crate::error::{Error, Result};

/// Default largest `N` considered.
pub const DEFAULT_CAP: u64 = 1_000_000_000_000;

/// Largest `N` the brute-force fallback will scan.
const BRUTE_FORCE_LIMIT: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PowerResult {
    pub n: u64,
    /// `Nϖ` reduced into `(−π, π]`; `U^N = exp(i·residual·ẽ_I)`.
    pub signed_residual: f64,
}

impl PowerResult {
    pub fn residual(&self) -> f64 {
        self.signed_residual.abs()
    }
}

/// `Nϖ` reduced into `(−π, π]`.
pub fn reduced_angle(n: u64, angle: f64) -> f64 {
    let r = (n as f64 * angle).rem_euclid(TAU);
    if r > std::f64::consts::PI {
        r - TAU
    } else {
        r
    }
}

/// Least `N ≥ 1` with `|reduced_angle(N, ϖ)| < ε`.
pub fn irrational_power(angle: f64, eps: f64, cap: u64) -> Result<PowerResult> {
    if eps.is_nan() || eps <= 0.0 || !angle.is_finite() {
        return Err(Error::Precondition(format!(
            "tolerance must be positive and the angle finite (got ε = {eps}, ϖ = {angle})"
        )));
    }
    let hit = |n: u64| {
        let r = reduced_angle(n, angle);
        (r.abs() < eps).then_some(PowerResult { n, signed_residual: r })
    };

    let x = (angle / TAU).rem_euclid(1.0);
    // q_{k-2}, q_{k-1}
    let (mut q_prev, mut q) = (0u64, 1u64);
    let mut rem = x;
    loop {
        if q > cap {
            return Err(Error::CapExceeded(cap));
        }
        if let Some(found) = hit(q) {
            return Ok(found);
        }
        if rem == 0.0 {
            break;
        }
        let inv = 1.0 / rem;
        if !inv.is_finite() || inv > cap as f64 {
            break;
        }
        let a = inv.floor();
        rem = inv - a;
        let next = (a as u64).checked_mul(q).and_then(|v| v.checked_add(q_prev));
        match next {
            Some(next) => (q_prev, q) = (q, next),
            None => return Err(Error::CapExceeded(cap)),
        }
    }
    // The expansion ran out of floating-point precision before meeting the
    // bound; scan directly.
    brute_force_power(angle, eps, cap.min(BRUTE_FORCE_LIMIT))
}

/// Linear scan over `N = 1, 2, …`; the reference the convergent search is
/// checked against.
pub fn brute_force_power(angle: f64, eps: f64, cap: u64) -> Result<PowerResult> {
    (1..=cap)
        .find_map(|n| {
            let r = reduced_angle(n, angle);
            (r.abs() < eps).then_some(PowerResult { n, signed_residual: r })
        })
        .ok_or(Error::CapExceeded(cap))
}
