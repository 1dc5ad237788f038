//! Replayable commutator derivations.
//!
//! Text form, one record per line:
//!
//! ```text
//! certificate ambient 4 target e[0,1,2,3]
//! gen e[3]
//! gen i*e[0,1,2]
//! e[0,1,2,3] := [e[3], e[0,1,2]] * -i*2^1
//! terminal -i*2^1
//! ```
//!
//! A step `L := [A, B] * c` states `[v(A), v(B)] = c · Γ_L`, where `v` is the
//! generator value for `gen` labels and the step value otherwise. The
//! `terminal` scalar `t` states `v(target) = t · ẽ_target`.

use std::collections::BTreeSet;
use std::fmt;

use super::ClosureResult;
use crate::clifford::{format_coefficient, parse_coefficient, parse_element, BasisLabel, Coefficient, ScaledElement};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub result: BasisLabel,
    pub left: BasisLabel,
    pub right: BasisLabel,
    pub coefficient: Coefficient,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub ambient: usize,
    pub target: BasisLabel,
    /// Initial generators the derivation uses, in canonical label order.
    pub generators: Vec<ScaledElement>,
    /// Topologically ordered: by depth, then canonical label.
    pub steps: Vec<Step>,
    pub terminal: Coefficient,
}

impl Certificate {
    pub(super) fn extract(closure: &ClosureResult, target: BasisLabel) -> Result<Self> {
        let not_in_closure = || Error::NotInClosure {
            target: target.to_string(),
            dimension: closure.dimension(),
        };
        let target_node = closure.node(target).ok_or_else(not_in_closure)?;

        let mut needed = BTreeSet::new();
        let mut stack = vec![target];
        while let Some(label) = stack.pop() {
            if !needed.insert(label) {
                continue;
            }
            if let Some((a, b)) = closure.node(label).and_then(|n| n.parents) {
                stack.push(a);
                stack.push(b);
            }
        }

        let mut generators = Vec::new();
        let mut steps = Vec::new();
        for &label in &needed {
            let node = closure.node(label).expect("ancestors are reached");
            match node.parents {
                None => generators.push(node.value),
                Some((left, right)) => steps.push((
                    node.depth,
                    Step {
                        result: label,
                        left,
                        right,
                        coefficient: node.value.coefficient().expect("nonzero commutator"),
                    },
                )),
            }
        }
        steps.sort_by_key(|(depth, step)| (*depth, step.result));

        Ok(Certificate {
            ambient: closure.ambient(),
            target,
            generators,
            steps: steps.into_iter().map(|(_, s)| s).collect(),
            terminal: target_node
                .value
                .relative_to_hermitized()
                .expect("reached values are nonzero"),
        })
    }

    pub fn depth(&self) -> usize {
        self.steps.len()
    }

    /// Replays the steps symbolically and checks every recorded coefficient.
    pub fn replay(&self) -> Result<ScaledElement> {
        let mut values: std::collections::HashMap<BasisLabel, ScaledElement> =
            self.generators.iter().map(|g| (g.label(), *g)).collect();
        for step in &self.steps {
            let get = |l: BasisLabel| {
                values
                    .get(&l)
                    .copied()
                    .ok_or_else(|| Error::InvalidGenerators(format!("{l} used before it is derived")))
            };
            let value = get(step.left)?.commutator(&get(step.right)?)?;
            let expected = ScaledElement::new(self.ambient, step.coefficient, step.result)?;
            if value != expected {
                return Err(Error::InvalidGenerators(format!(
                    "step {} evaluates to {value}, recorded {expected}",
                    step.result
                )));
            }
            values.insert(step.result, value);
        }
        let value = values
            .get(&self.target)
            .copied()
            .ok_or_else(|| Error::InvalidGenerators(format!("target {} never derived", self.target)))?;
        let hermitized = ScaledElement::hermitized(self.ambient, self.target)?;
        if value != hermitized.scaled(self.terminal) {
            return Err(Error::InvalidGenerators(format!(
                "target evaluates to {value}, terminal scalar says {}",
                hermitized.scaled(self.terminal)
            )));
        }
        Ok(value)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let at = |line: usize, e: Error| match e {
            Error::Parse { column, message } => Error::Parse {
                column,
                message: format!("line {line}: {message}"),
            },
            other => other,
        };
        let bad = |line: usize, message: &str| Error::Parse {
            column: 1,
            message: format!("line {line}: {message}"),
        };

        let (line_no, header) = lines.next().ok_or_else(|| bad(1, "empty certificate"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let ["certificate", "ambient", ambient, "target", target] = fields[..] else {
            return Err(bad(line_no, "expected `certificate ambient <m> target <label>`"));
        };
        let ambient: usize = ambient.parse().map_err(|_| bad(line_no, "ambient is not an integer"))?;
        let target = parse_element(target, ambient).map_err(|e| at(line_no, e))?.label();

        let mut generators = Vec::new();
        let mut steps = Vec::new();
        let mut terminal = None;
        for (line_no, line) in lines {
            if let Some(rest) = line.strip_prefix("gen ") {
                generators.push(parse_element(rest, ambient).map_err(|e| at(line_no, e))?);
            } else if let Some(rest) = line.strip_prefix("terminal ") {
                terminal = Some(parse_coefficient(rest).map_err(|e| at(line_no, e))?);
            } else {
                let (result, rest) = line
                    .split_once(" := [")
                    .ok_or_else(|| bad(line_no, "expected `L := [A, B] * c`"))?;
                let (pair, coeff) = rest
                    .split_once("] * ")
                    .ok_or_else(|| bad(line_no, "expected `] * c`"))?;
                let (left, right) = pair
                    .split_once("], ")
                    .map(|(l, r)| (format!("{l}]"), r.to_string()))
                    .ok_or_else(|| bad(line_no, "expected `[A, B]`"))?;
                let label = |t: &str| parse_element(t, ambient).map(|e| e.label());
                steps.push(Step {
                    result: label(result).map_err(|e| at(line_no, e))?,
                    left: label(&left).map_err(|e| at(line_no, e))?,
                    right: label(&right).map_err(|e| at(line_no, e))?,
                    coefficient: parse_coefficient(coeff).map_err(|e| at(line_no, e))?,
                });
            }
        }
        Ok(Certificate {
            ambient,
            target,
            generators,
            steps,
            terminal: terminal.ok_or_else(|| bad(line_no, "missing `terminal` line"))?,
        })
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "certificate ambient {} target {}", self.ambient, self.target)?;
        for g in &self.generators {
            writeln!(f, "gen {g}")?;
        }
        for s in &self.steps {
            writeln!(
                f,
                "{} := [{}, {}] * {}",
                s.result,
                s.left,
                s.right,
                format_coefficient(s.coefficient)
            )?;
        }
        writeln!(f, "terminal {}", format_coefficient(self.terminal))
    }
}
