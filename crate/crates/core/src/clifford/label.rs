use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest ambient generator count a [`BasisLabel`] can address.
pub const MAX_GENERATORS: usize = 128;

/// A set of generator indices naming the basis element `Γ_I`.
///
/// Stored as a bitmask; bit `k` set means generator `k` is a factor. The
/// empty set is the unit element. Ordering is canonical: first by order
/// (number of factors), then lexicographically on the ascending index list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct BasisLabel(u128);

impl BasisLabel {
    pub const UNIT: BasisLabel = BasisLabel(0);

    pub fn from_bits(bits: u128) -> Self {
        BasisLabel(bits)
    }

    /// Builds a label from indices given in any order; duplicates are rejected.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Result<Self> {
        let mut bits = 0u128;
        for index in indices {
            if index >= MAX_GENERATORS {
                return Err(Error::IndexOutOfRange {
                    index,
                    ambient: MAX_GENERATORS,
                });
            }
            let bit = 1u128 << index;
            if bits & bit != 0 {
                return Err(Error::DuplicateIndex(index));
            }
            bits |= bit;
        }
        Ok(BasisLabel(bits))
    }

    /// The single-generator label `{k}`.
    pub fn generator(k: usize) -> Self {
        assert!(k < MAX_GENERATORS, "generator index {k} out of range");
        BasisLabel(1u128 << k)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn order(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_unit(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, index: usize) -> bool {
        index < MAX_GENERATORS && self.0 >> index & 1 == 1
    }

    /// Ascending generator indices.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let k = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(k)
        })
    }

    /// One past the highest index, or 0 for the unit.
    pub fn span(self) -> usize {
        MAX_GENERATORS - self.0.leading_zeros() as usize
    }

    pub fn fits(self, ambient: usize) -> bool {
        self.span() <= ambient
    }

    pub(crate) fn check_range(self, ambient: usize) -> Result<()> {
        if self.fits(ambient) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: self.span() - 1,
                ambient,
            })
        }
    }

    pub fn symmetric_difference(self, other: BasisLabel) -> BasisLabel {
        BasisLabel(self.0 ^ other.0)
    }

    pub fn intersection(self, other: BasisLabel) -> BasisLabel {
        BasisLabel(self.0 & other.0)
    }

    pub fn is_subset(self, other: BasisLabel) -> bool {
        self.0 & !other.0 == 0
    }

    /// All `2^ambient` labels in canonical order.
    pub fn all(ambient: usize) -> Vec<BasisLabel> {
        assert!(ambient < 32, "enumerating 2^{ambient} labels is not supported");
        let mut labels: Vec<_> = (0u128..1 << ambient).map(BasisLabel).collect();
        labels.sort();
        labels
    }

    /// All labels of the given order in canonical order.
    pub fn of_order(ambient: usize, order: usize) -> Vec<BasisLabel> {
        BasisLabel::all(ambient)
            .into_iter()
            .filter(|l| l.order() == order)
            .collect()
    }
}

impl Ord for BasisLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.order().cmp(&other.order()) {
            Ordering::Equal if self.0 != other.0 => {
                // Lists agree below the lowest differing bit; whoever owns
                // that index is lexicographically first.
                let d = (self.0 ^ other.0).trailing_zeros();
                if self.0 >> d & 1 == 1 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            ord => ord,
        }
    }
}

impl PartialOrd for BasisLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("e[")?;
        for (i, k) in self.indices().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parity of the transpositions needed to sort the concatenation `a ++ b`.
///
/// Counts pairs `(x ∈ a, y ∈ b)` with `x > y`. Shared indices meet after
/// the same moves and cancel with `+1` since every generator squares to one.
pub fn reorder_sign(a: BasisLabel, b: BasisLabel) -> bool {
    let mut parity = 0u32;
    for y in b.indices() {
        let above = a.0.checked_shr(y as u32 + 1).unwrap_or(0);
        parity ^= above.count_ones() & 1;
    }
    parity == 1
}

/// `Γ_a Γ_b = Γ_b Γ_a` iff `|a|·|b| − |a∩b|` is even.
pub fn labels_commute(a: BasisLabel, b: BasisLabel) -> bool {
    let shared = a.intersection(b).order();
    (a.order() * b.order() + shared).is_multiple_of(2)
}
