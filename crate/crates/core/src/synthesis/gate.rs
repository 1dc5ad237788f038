use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use crate::clifford::{parse_element, BasisLabel};
use crate::error::{Error, Result};
use crate::matrix::{hermitized_factorization, represent_hermitized, ComplexMatrix};

/// `U = exp(iτ ẽ_I) = cos τ · 𝟙 + i sin τ · ẽ_I`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Gate {
    pub label: BasisLabel,
    pub angle: f64,
    pub qubits: usize,
}

impl Gate {
    pub fn new(label: BasisLabel, angle: f64, qubits: usize) -> Result<Self> {
        label.check_range(2 * qubits)?;
        Ok(Gate { label, angle, qubits })
    }

    /// Closed-form matrix.
    pub fn matrix(&self) -> ComplexMatrix {
        let dim = 1 << self.qubits;
        let h = represent_hermitized(self.label, self.qubits).expect("range checked on construction");
        ComplexMatrix::identity(dim).scale(Complex64::new(self.angle.cos(), 0.0))
            + h.scale(Complex64::new(0.0, self.angle.sin()))
    }

    /// `m · U` in `O(4^n)`, using that `ẽ_I` has one nonzero per row.
    pub fn apply_right(&self, m: &ComplexMatrix) -> ComplexMatrix {
        let dim = m.dim();
        assert_eq!(dim, 1 << self.qubits, "dimension mismatch");
        let f = hermitized_factorization(self.label, self.qubits);
        let (c, s) = (self.angle.cos(), self.angle.sin());
        let i_s = Complex64::new(0.0, s);
        let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
        for row in 0..dim {
            for j in 0..dim {
                entries[row * dim + j] += m.get(row, j) * c;
            }
        }
        // (m ẽ)[r, j^x] = m[r, j] · ẽ[j, j^x]
        for j in 0..dim {
            let (col, value) = f.row_entry(j);
            let v = value * i_s;
            for row in 0..dim {
                entries[row * dim + col] += m.get(row, j) * v;
            }
        }
        ComplexMatrix::from_row_major(dim, &entries)
    }
}

impl fmt::Display for Gate {
    /// `gate <label> <angle>`, angle with 17 significant digits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gate {} {:.16e}", self.label, self.angle)
    }
}

/// Gates listed left to right as a matrix product `U_0 · U_1 · …`.
#[derive(Clone, Debug, PartialEq)]
pub struct GateSequence {
    pub qubits: usize,
    pub gates: Vec<Gate>,
    /// Operator-norm distance to the target, when there is one.
    pub error: Option<f64>,
}

impl GateSequence {
    pub fn new(qubits: usize, gates: Vec<Gate>) -> Self {
        GateSequence {
            qubits,
            gates,
            error: None,
        }
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn realized(&self) -> ComplexMatrix {
        self.gates
            .iter()
            .fold(ComplexMatrix::identity(1 << self.qubits), |acc, g| g.apply_right(&acc))
    }

    /// Records the distance of the realized product to `target`.
    pub fn measure(mut self, target: &ComplexMatrix, metric: ErrorMetric) -> Self {
        self.error = Some(metric.distance(&self.realized(), target));
        self
    }

    /// Merges runs of same-label gates, `exp(iaẽ)exp(ibẽ) = exp(i(a+b)ẽ)`,
    /// and drops zero-angle gates. The realized product is unchanged.
    pub fn compact(&self) -> Self {
        let mut gates: Vec<Gate> = Vec::with_capacity(self.gates.len());
        for g in &self.gates {
            match gates.last_mut() {
                Some(last) if last.label == g.label => last.angle += g.angle,
                _ => gates.push(*g),
            }
            if gates.last().is_some_and(|l| l.angle == 0.0) {
                gates.pop();
            }
        }
        GateSequence {
            qubits: self.qubits,
            gates,
            error: self.error,
        }
    }

    /// Number of gates per label, for reporting.
    pub fn label_counts(&self) -> BTreeMap<BasisLabel, usize> {
        let mut counts = BTreeMap::new();
        for g in &self.gates {
            *counts.entry(g.label).or_default() += 1;
        }
        counts
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for g in &self.gates {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        if let Some(e) = self.error {
            out.push_str(&format!("error {e:.16e}\n"));
        }
        out
    }

    pub fn from_text(text: &str, qubits: usize) -> Result<Self> {
        let mut gates = Vec::new();
        let mut error = None;
        for (line_no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |message: String| Error::Parse {
                column: 1,
                message: format!("line {}: {message}", line_no + 1),
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields[..] {
                ["gate", label, angle] => {
                    let label = parse_element(label, 2 * qubits)
                        .map_err(|e| bad(e.to_string()))?
                        .label();
                    let angle: f64 = angle.parse().map_err(|_| bad(format!("bad angle `{angle}`")))?;
                    gates.push(Gate::new(label, angle, qubits)?);
                }
                ["error", value] => {
                    error = Some(value.parse().map_err(|_| bad(format!("bad error `{value}`")))?);
                }
                _ => return Err(bad(format!("unrecognized line `{line}`"))),
            }
        }
        Ok(GateSequence { qubits, gates, error })
    }
}

/// How realized products are compared with targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ErrorMetric {
    /// `‖U − V‖`.
    #[default]
    PhaseSensitive,
    /// `min_φ ‖U − e^{iφ} V‖`.
    PhaseInvariant,
}

impl ErrorMetric {
    pub fn distance(self, a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
        match self {
            ErrorMetric::PhaseSensitive => a.distance(b),
            ErrorMetric::PhaseInvariant => a.phase_invariant_distance(b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(ix: &[usize]) -> BasisLabel {
        BasisLabel::from_indices(ix.iter().copied()).unwrap()
    }

    #[test]
    fn apply_right_matches_dense_product() {
        let m = Gate::new(label(&[0, 3]), 0.4, 2).unwrap().matrix();
        for l in BasisLabel::all(4) {
            let g = Gate::new(l, -1.3, 2).unwrap();
            assert!(g.apply_right(&m).max_abs_diff(&(&m * &g.matrix())) < 1e-14);
        }
    }

    #[test]
    fn compact_merges_runs() {
        let g = |ix: &[usize], a| Gate::new(label(ix), a, 2).unwrap();
        let seq = GateSequence::new(
            2,
            vec![g(&[0], 0.1), g(&[0], 0.2), g(&[1], 0.3), g(&[1], -0.3), g(&[0], 0.4)],
        );
        let c = seq.compact();
        assert_eq!(c.len(), 1);
        assert_eq!(c.gates[0].label, label(&[0]));
        assert!((c.gates[0].angle - 0.7).abs() < 1e-15);
        assert!(c.realized().max_abs_diff(&seq.realized()) < 1e-14);
    }

    #[test]
    fn sequence_text_round_trip() {
        let seq = GateSequence {
            qubits: 2,
            gates: vec![
                Gate::new(label(&[0]), 0.1, 2).unwrap(),
                Gate::new(label(&[1, 2, 3]), -std::f64::consts::PI / 3.0, 2).unwrap(),
            ],
            error: Some(1.25e-3),
        };
        let text = seq.to_text();
        assert!(text.starts_with("gate e[0] 1.0000000000000001e-1\n"), "{text}");
        assert_eq!(GateSequence::from_text(&text, 2).unwrap(), seq);
        assert!(GateSequence::from_text("gate e[7] 0.1", 2).is_err());
        assert!(GateSequence::from_text("gates e[0] 0.1", 2).is_err());
    }
}
