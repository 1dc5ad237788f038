//! Exact arithmetic on single basis elements of `Cl(m, C)` with every
//! generator squaring to `+1`.
//!
//! A basis element `Γ_I` is the ordered product of the generators named by
//! the index set `I`. Any two basis elements either commute or anticommute,
//! and the product of two scaled basis elements is again a single scaled
//! basis element. That closure is what lets the rest of the crate reason
//! about Lie closures by label instead of by matrix.

mod element;
mod label;
mod text;

pub use element::{Coefficient, Phase, ScaledElement};
pub use label::{labels_commute, reorder_sign, BasisLabel, MAX_GENERATORS};
pub use text::{format_coefficient, parse_coefficient, parse_element};

/// `s` in `ẽ_I = i^s Γ_I`, the smallest power of `i` making the square `+1`.
///
/// `Γ_I² = (-1)^{k(k-1)/2}` for order `k`, so `s = k(k-1)/2 mod 2`.
pub fn hermitian_phase(order: usize) -> Phase {
    Phase::new(((order * order.saturating_sub(1)) / 2 % 2) as u8)
}
