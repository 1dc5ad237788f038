use std::fmt;
use std::ops::Mul;

use super::label::{labels_commute, reorder_sign, BasisLabel, MAX_GENERATORS};
use crate::error::{Error, Result};

/// The scalar `i^m`, `m` taken mod 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn new(m: u8) -> Self {
        Phase(m % 4)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn conj(self) -> Self {
        Phase((4 - self.0) % 4)
    }

    pub fn negate(self) -> Self {
        self * Phase::MINUS_ONE
    }

    /// `(re, im)` of `i^m`.
    pub fn to_complex(self) -> (f64, f64) {
        match self.0 {
            0 => (1.0, 0.0),
            1 => (0.0, 1.0),
            2 => (-1.0, 0.0),
            _ => (0.0, -1.0),
        }
    }
}

impl Mul for Phase {
    type Output = Phase;

    fn mul(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) % 4)
    }
}

/// An exact nonzero scalar `i^m · 2^p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Coefficient {
    pub phase: Phase,
    pub pow2: i32,
}

impl Coefficient {
    pub const ONE: Coefficient = Coefficient {
        phase: Phase::ONE,
        pow2: 0,
    };

    pub fn new(phase: Phase, pow2: i32) -> Self {
        Coefficient { phase, pow2 }
    }

    pub fn inverse(self) -> Self {
        Coefficient {
            phase: self.phase.conj(),
            pow2: -self.pow2,
        }
    }

    pub fn to_complex(self) -> (f64, f64) {
        let (re, im) = self.phase.to_complex();
        let scale = 2f64.powi(self.pow2);
        (re * scale, im * scale)
    }
}

impl Mul for Coefficient {
    type Output = Coefficient;

    fn mul(self, rhs: Coefficient) -> Coefficient {
        Coefficient {
            phase: self.phase * rhs.phase,
            pow2: self.pow2 + rhs.pow2,
        }
    }
}

/// `i^m · 2^p · Γ_label` over a fixed ambient generator count, or exact zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ScaledElement {
    ambient: usize,
    coeff: Option<Coefficient>,
    label: BasisLabel,
}

impl ScaledElement {
    pub fn new(ambient: usize, coeff: Coefficient, label: BasisLabel) -> Result<Self> {
        if ambient > MAX_GENERATORS {
            return Err(Error::AmbientTooLarge(ambient));
        }
        label.check_range(ambient)?;
        Ok(ScaledElement {
            ambient,
            coeff: Some(coeff),
            label,
        })
    }

    /// `Γ_label` with unit coefficient.
    pub fn basis(ambient: usize, label: BasisLabel) -> Result<Self> {
        ScaledElement::new(ambient, Coefficient::ONE, label)
    }

    /// The generator `Γ_k`.
    pub fn generator(ambient: usize, k: usize) -> Result<Self> {
        if k >= ambient {
            return Err(Error::IndexOutOfRange { index: k, ambient });
        }
        ScaledElement::basis(ambient, BasisLabel::generator(k))
    }

    /// `ẽ_label = i^s Γ_label` with `s` chosen so that `ẽ² = +1`.
    pub fn hermitized(ambient: usize, label: BasisLabel) -> Result<Self> {
        let phase = super::hermitian_phase(label.order());
        ScaledElement::new(ambient, Coefficient::new(phase, 0), label)
    }

    pub fn unit(ambient: usize) -> Self {
        ScaledElement {
            ambient,
            coeff: Some(Coefficient::ONE),
            label: BasisLabel::UNIT,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        ScaledElement {
            ambient,
            coeff: None,
            label: BasisLabel::UNIT,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// `None` for the zero element.
    pub fn coefficient(&self) -> Option<Coefficient> {
        self.coeff
    }

    pub fn label(&self) -> BasisLabel {
        self.label
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_none()
    }

    pub fn scaled(self, by: Coefficient) -> Self {
        ScaledElement {
            coeff: self.coeff.map(|c| c * by),
            ..self
        }
    }

    fn same_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            })
        }
    }

    /// Exact product; the label is the symmetric difference of the inputs.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        let (Some(a), Some(b)) = (self.coeff, other.coeff) else {
            return Ok(ScaledElement::zero(self.ambient));
        };
        let mut coeff = a * b;
        if reorder_sign(self.label, other.label) {
            coeff.phase = coeff.phase.negate();
        }
        Ok(ScaledElement {
            ambient: self.ambient,
            coeff: Some(coeff),
            label: self.label.symmetric_difference(other.label),
        })
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self.is_zero() || other.is_zero() || labels_commute(self.label, other.label))
    }

    /// `ab − ba`: exact zero when the pair commutes, else `2ab`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        if self.commutes_with(other)? {
            return Ok(ScaledElement::zero(self.ambient));
        }
        Ok(self.product(other)?.scaled(Coefficient::new(Phase::ONE, 1)))
    }

    /// The coefficient `c` with `self = c · ẽ_label`, `None` for zero.
    pub fn relative_to_hermitized(&self) -> Option<Coefficient> {
        let s = super::hermitian_phase(self.label.order());
        self.coeff.map(|c| c * Coefficient::new(s.conj(), 0))
    }
}

impl fmt::Display for ScaledElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.coeff {
            None => f.write_str("0"),
            Some(c) => {
                super::text::write_prefix(f, c)?;
                write!(f, "{}", self.label)
            }
        }
    }
}

impl fmt::Debug for ScaledElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (ambient {})", self, self.ambient)
    }
}
