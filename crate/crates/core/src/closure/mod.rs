//! Commutator closure over basis labels.
//!
//! The commutator of two scaled basis elements is zero or a single scaled
//! basis element, so the Lie algebra generated by a set of basis elements is
//! spanned by the labels reachable through nonvanishing commutators. The
//! closure is computed breadth-first: layer `d + 1` holds the labels first
//! produced by a pair with at least one member in layer `d`. Every label
//! keeps the canonically smallest such parent pair, which makes derivations
//! minimal-depth and independent of thread count.

mod certificate;
mod sets;

use std::collections::{BTreeMap, BTreeSet, HashSet};

pub use certificate::{Certificate, Step};
pub use sets::GeneratorSet;

use crate::clifford::{labels_commute, BasisLabel, ScaledElement};
use crate::error::{Error, Result};
use crate::exec::Exec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    /// The commutator value (or the generator itself) carried by this label.
    pub value: ScaledElement,
    pub depth: usize,
    /// `(a, b)` with `a < b` canonically and `[value(a), value(b)] = value`.
    pub parents: Option<(BasisLabel, BasisLabel)>,
}

/// Reached labels with their first-discovery provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureResult {
    ambient: usize,
    nodes: BTreeMap<BasisLabel, Node>,
}

/// Computes the commutator closure of `gens`.
pub fn close(gens: &GeneratorSet, exec: Exec) -> ClosureResult {
    let ambient = gens.ambient();
    let mut nodes: BTreeMap<BasisLabel, Node> = gens
        .elements()
        .iter()
        .map(|e| {
            let node = Node {
                value: *e,
                depth: 0,
                parents: None,
            };
            (e.label(), node)
        })
        .collect();

    let mut frontier: Vec<BasisLabel> = nodes.keys().copied().collect();
    let mut depth = 0;
    while !frontier.is_empty() {
        depth += 1;
        let known: Vec<BasisLabel> = nodes.keys().copied().collect();
        let in_frontier: HashSet<BasisLabel> = frontier.iter().copied().collect();
        let reached: HashSet<BasisLabel> = known.iter().copied().collect();

        let per_label = exec.map(&frontier, |&f| {
            let mut found = Vec::new();
            for &k in &known {
                // Pairs inside the frontier are visited once, from the larger side.
                if in_frontier.contains(&k) && k > f {
                    continue;
                }
                if labels_commute(f, k) {
                    continue;
                }
                let label = f.symmetric_difference(k);
                if !reached.contains(&label) {
                    found.push((label, f.min(k), f.max(k)));
                }
            }
            found
        });

        let mut discovered: BTreeMap<BasisLabel, (BasisLabel, BasisLabel)> = BTreeMap::new();
        for (label, a, b) in per_label.into_iter().flatten() {
            discovered
                .entry(label)
                .and_modify(|pair| *pair = (*pair).min((a, b)))
                .or_insert((a, b));
        }

        frontier = discovered.keys().copied().collect();
        for (label, (a, b)) in discovered {
            let value = nodes[&a]
                .value
                .commutator(&nodes[&b].value)
                .expect("generator set shares one ambient");
            debug_assert_eq!(value.label(), label);
            nodes.insert(
                label,
                Node {
                    value,
                    depth,
                    parents: Some((a, b)),
                },
            );
        }
    }
    ClosureResult { ambient, nodes }
}

/// Reported dimension of the closure of `gens`; see [`ClosureResult::dimension`].
pub fn dimension(gens: &GeneratorSet, exec: Exec) -> usize {
    close(gens, exec).dimension()
}

pub fn is_universal(gens: &GeneratorSet, exec: Exec) -> Result<bool> {
    close(gens, exec).is_universal()
}

/// Number of labels outside the center: all but the unit for even ambient,
/// all but the unit and the top element for odd ambient.
fn noncentral_count(ambient: usize) -> Option<u128> {
    let total = 1u128.checked_shl(ambient as u32).filter(|_| ambient < 128)?;
    Some(if ambient.is_multiple_of(2) {
        total - 1
    } else {
        total - 2
    })
}

impl ClosureResult {
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Reached labels in canonical order.
    pub fn reached(&self) -> impl Iterator<Item = BasisLabel> + '_ {
        self.nodes.keys().copied()
    }

    pub fn contains(&self, label: BasisLabel) -> bool {
        self.nodes.contains_key(&label)
    }

    pub fn node(&self, label: BasisLabel) -> Option<&Node> {
        self.nodes.get(&label)
    }

    pub fn nodes(&self) -> impl Iterator<Item = (BasisLabel, &Node)> + '_ {
        self.nodes.iter().map(|(l, n)| (*l, n))
    }

    /// Number of reached labels: the dimension of the generated Lie algebra.
    pub fn lie_dimension(&self) -> usize {
        self.nodes.len()
    }

    /// Whether every non-central label is reached.
    pub fn spans_noncentral(&self) -> bool {
        let top = self.top_label();
        let noncentral = self.nodes.keys().filter(|l| !l.is_unit() && Some(**l) != top).count() as u128;
        noncentral_count(self.ambient) == Some(noncentral)
    }

    fn top_label(&self) -> Option<BasisLabel> {
        (self.ambient % 2 == 1).then(|| BasisLabel::from_bits((1u128 << self.ambient) - 1))
    }

    /// Whether the global-phase direction is counted by [`Self::dimension`].
    ///
    /// Commutators never produce the unit, so a closure can at most reach the
    /// traceless labels. When it reaches all of them beyond the order ≤ 2
    /// spin algebra, the gates generate the full unitary group up to a global
    /// phase, and the reported dimension is that of `u(2^n)`.
    pub fn phase_adjoined(&self) -> bool {
        !self.contains(BasisLabel::UNIT) && self.spans_noncentral() && self.nodes.keys().any(|l| l.order() >= 3)
    }

    /// The dimension reported for the generated gate algebra.
    ///
    /// Equal to [`Self::lie_dimension`], plus one for the global phase when
    /// [`Self::phase_adjoined`] holds. Generators alone give the spin
    /// algebra of dimension `m(m+1)/2`; sets with a third-order element give `4^n`.
    pub fn dimension(&self) -> usize {
        self.lie_dimension() + usize::from(self.phase_adjoined())
    }

    /// `dimension == 4^n`; only defined for even ambient.
    pub fn is_universal(&self) -> Result<bool> {
        if self.ambient % 2 == 1 {
            return Err(Error::OddAmbient(self.ambient));
        }
        let full = 1u128.checked_shl(self.ambient as u32).filter(|_| self.ambient < 128);
        Ok(full == Some(self.dimension() as u128))
    }

    /// Largest order among reached labels.
    pub fn max_order(&self) -> usize {
        self.nodes.keys().map(|l| l.order()).max().unwrap_or(0)
    }

    /// Recomputes every pairwise commutator; returns the first pair whose
    /// commutator label is missing, if any.
    pub fn audit(&self, exec: Exec) -> Option<(BasisLabel, BasisLabel, BasisLabel)> {
        let labels: Vec<BasisLabel> = self.nodes.keys().copied().collect();
        let reached: BTreeSet<BasisLabel> = labels.iter().copied().collect();
        exec.map(&labels, |&a| {
            labels.iter().find_map(|&b| {
                let c = a.symmetric_difference(b);
                (!labels_commute(a, b) && !reached.contains(&c)).then_some((a, b, c))
            })
        })
        .into_iter()
        .flatten()
        .next()
    }

    /// Minimal-depth derivation of `target` from the initial generators.
    pub fn certificate(&self, target: BasisLabel) -> Result<Certificate> {
        Certificate::extract(self, target)
    }

    /// The reached values as a generator set, for re-closing.
    pub fn as_generators(&self) -> GeneratorSet {
        GeneratorSet::new(self.ambient, self.nodes.values().map(|n| n.value).collect())
            .expect("reached values are nonzero with distinct labels")
    }
}

/// `certificate(gens, target)`: closes `gens` and extracts a derivation.
pub fn certificate(gens: &GeneratorSet, target: BasisLabel, exec: Exec) -> Result<Certificate> {
    close(gens, exec).certificate(target)
}
