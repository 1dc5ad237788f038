use crate::clifford::{parse_element, BasisLabel, ScaledElement, MAX_GENERATORS};
use crate::error::{Error, Result};

/// A nonempty list of nonzero scaled elements over one ambient count, with
/// distinct labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    ambient: usize,
    elements: Vec<ScaledElement>,
}

impl GeneratorSet {
    pub fn new(ambient: usize, elements: Vec<ScaledElement>) -> Result<Self> {
        if ambient > MAX_GENERATORS {
            return Err(Error::AmbientTooLarge(ambient));
        }
        if elements.is_empty() {
            return Err(Error::InvalidGenerators("empty generator set".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for e in &elements {
            if e.ambient() != ambient {
                return Err(Error::AmbientMismatch {
                    left: ambient,
                    right: e.ambient(),
                });
            }
            if e.is_zero() {
                return Err(Error::InvalidGenerators("zero element".into()));
            }
            if !seen.insert(e.label()) {
                return Err(Error::InvalidGenerators(format!("duplicate label {}", e.label())));
            }
        }
        Ok(GeneratorSet { ambient, elements })
    }

    /// Parses whitespace- or list-separated element texts.
    pub fn parse<S: AsRef<str>>(ambient: usize, texts: &[S]) -> Result<Self> {
        let elements = texts
            .iter()
            .map(|t| parse_element(t.as_ref(), ambient))
            .collect::<Result<Vec<_>>>()?;
        GeneratorSet::new(ambient, elements)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn elements(&self) -> &[ScaledElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = BasisLabel> + '_ {
        self.elements.iter().map(|e| e.label())
    }

    /// Returns a copy with `extra` appended.
    pub fn with(&self, extra: ScaledElement) -> Result<Self> {
        let mut elements = self.elements.clone();
        elements.push(extra);
        GeneratorSet::new(self.ambient, elements)
    }

    /// `{Γ_0, …, Γ_{m−1}}`.
    pub fn generators_only(ambient: usize) -> Result<Self> {
        let elements = (0..ambient)
            .map(|k| ScaledElement::generator(ambient, k))
            .collect::<Result<Vec<_>>>()?;
        GeneratorSet::new(ambient, elements)
    }

    /// The generators plus the hermitized element `ẽ_extra`.
    pub fn with_extra(ambient: usize, extra: BasisLabel) -> Result<Self> {
        GeneratorSet::generators_only(ambient)?.with(ScaledElement::hermitized(ambient, extra)?)
    }

    /// `{Γ_0, …, Γ_{m−1}, ẽ_{012}}`.
    pub fn with_triple(ambient: usize) -> Result<Self> {
        if ambient < 4 {
            return Err(Error::Precondition(format!(
                "the order-3 extra element needs an ambient of at least 4, got {ambient}"
            )));
        }
        GeneratorSet::with_extra(ambient, BasisLabel::from_indices([0, 1, 2])?)
    }

    /// `{Γ_0, ẽ_{01}, ẽ_{12}, …, ẽ_{m−2,m−1}}`, the nearest-neighbour chain.
    pub fn neighbour_chain(ambient: usize) -> Result<Self> {
        if ambient < 2 {
            return Err(Error::Precondition(format!(
                "the chain needs an ambient of at least 2, got {ambient}"
            )));
        }
        let mut elements = vec![ScaledElement::generator(ambient, 0)?];
        for l in 1..ambient {
            elements.push(ScaledElement::hermitized(
                ambient,
                BasisLabel::from_indices([l - 1, l])?,
            )?);
        }
        GeneratorSet::new(ambient, elements)
    }

    /// The chain plus `ẽ_{012}`.
    pub fn local_set(ambient: usize) -> Result<Self> {
        if ambient < 4 {
            return Err(Error::Precondition(format!(
                "the order-3 extra element needs an ambient of at least 4, got {ambient}"
            )));
        }
        GeneratorSet::neighbour_chain(ambient)?.with(ScaledElement::hermitized(
            ambient,
            BasisLabel::from_indices([0, 1, 2])?,
        )?)
    }
}
