use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use cliffgate::clifford::{labels_commute, parse_element, BasisLabel, ScaledElement};
use cliffgate::closure::{close, Certificate, GeneratorSet};
use cliffgate::exec::Exec;
use cliffgate::matrix::oracle::{replay_certificate, run_suite, HomomorphismReport};
use cliffgate::matrix::{represent, represent_hermitized, ComplexMatrix};
use cliffgate::synthesis::{irrational_power, synthesize, twoqubit_gateset, CoefficientVector, ErrorMetric};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::args::{GeneratorInput, Metric, Preset};
use crate::error::{CliError, CliResult};
use crate::output::Out;

/// Largest ambient at which certificates are replayed with dense matrices.
const REPLAY_AMBIENT_LIMIT: usize = 12;

/// Above this many reached labels the list is hidden unless asked for.
const LABEL_LIST_LIMIT: usize = 64;

pub struct Ctx {
    pub exec: Exec,
    pub max_ambient: usize,
    pub max_qubits: usize,
}

impl Ctx {
    fn check_ambient(&self, ambient: usize) -> CliResult<()> {
        if ambient > self.max_ambient {
            return Err(CliError::SizeCap(format!(
                "ambient {ambient} exceeds --max-ambient {}",
                self.max_ambient
            )));
        }
        Ok(())
    }

    fn check_qubits(&self, qubits: usize) -> CliResult<()> {
        if qubits > self.max_qubits {
            return Err(CliError::SizeCap(format!(
                "{qubits} qubits exceeds --max-qubits {}",
                self.max_qubits
            )));
        }
        Ok(())
    }
}

fn positive(x: f64) -> bool {
    x.is_finite() && x > 0.0
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn generator_set(ctx: &Ctx, input: &GeneratorInput) -> CliResult<GeneratorSet> {
    let ambient = input.ambient;
    ctx.check_ambient(ambient)?;
    if ambient == 0 {
        return Err(CliError::Usage("ambient must be at least 1".into()));
    }
    if let Some(preset) = input.preset {
        if !input.generators.is_empty() {
            return Err(CliError::Usage("give either --preset or generators, not both".into()));
        }
        return Ok(match preset {
            Preset::Generators => GeneratorSet::generators_only(ambient),
            Preset::Triple => GeneratorSet::with_triple(ambient),
            Preset::Chain => GeneratorSet::neighbour_chain(ambient),
            Preset::Twoqubit => GeneratorSet::local_set(ambient),
        }?);
    }

    // (where, text) pairs so parse errors can point at their source.
    let mut items: Vec<(String, String)> = input
        .generators
        .iter()
        .enumerate()
        .map(|(k, s)| (format!("argument {}", k + 1), s.clone()))
        .collect();
    if let Some(path) = &input.from {
        for (k, line) in read(path)?.lines().enumerate() {
            let line = line.trim();
            if !line.is_empty() && !line.starts_with('#') {
                items.push((format!("{}: line {}", path.display(), k + 1), line.to_string()));
            }
        }
    }
    if items.is_empty() {
        return Err(CliError::Usage("no generators given".into()));
    }
    let elements = items
        .iter()
        .map(|(place, text)| {
            parse_element(text, ambient).map_err(|source| CliError::Located {
                context: place.clone(),
                source,
            })
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(GeneratorSet::new(ambient, elements)?)
}

fn universal_text(c: &cliffgate::closure::ClosureResult) -> &'static str {
    match c.is_universal() {
        Ok(true) => "true",
        _ => "false",
    }
}

pub fn closure(ctx: &Ctx, out: &mut Out, input: &GeneratorInput, labels: bool, no_labels: bool) -> CliResult<()> {
    let gens = generator_set(ctx, input)?;
    let c = close(&gens, ctx.exec);
    let dim = c.dimension();
    out.line(format!("dim={dim} universal={}", universal_text(&c)));
    let odd = gens.ambient() % 2 == 1;
    if out.records() {
        out.record(
            "closure",
            &[
                ("ambient", gens.ambient().to_string()),
                ("generators", gens.len().to_string()),
                ("labels", c.lie_dimension().to_string()),
                ("max_order", c.max_order().to_string()),
            ],
        );
    } else {
        out.line(format!(
            "ambient {}, {} generators, {} labels reached, max order {}",
            gens.ambient(),
            gens.len(),
            c.lie_dimension(),
            c.max_order()
        ));
        if odd {
            out.line("odd ambient: the top element is central, so universality does not apply");
        }
    }
    let show = labels || (!no_labels && c.lie_dimension() <= LABEL_LIST_LIMIT);
    if show {
        for (label, node) in c.nodes() {
            if out.records() {
                let parents = node
                    .parents
                    .map(|(a, b)| format!("{a},{b}"))
                    .unwrap_or_else(|| "-".into());
                out.record(
                    "label",
                    &[
                        ("id", label.to_string()),
                        ("depth", node.depth.to_string()),
                        ("value", node.value.to_string()),
                        ("parents", parents),
                    ],
                );
            } else {
                out.line(format!("  {:<24} depth {}", node.value.to_string(), node.depth));
            }
        }
    } else if !out.records() && !no_labels {
        out.line(format!("({} labels not listed; pass --labels)", c.lie_dimension()));
    }
    Ok(())
}

pub fn certify(ctx: &Ctx, out: &mut Out, input: &GeneratorInput, target: &str, tolerance: f64) -> CliResult<()> {
    if !positive(tolerance) {
        return Err(CliError::Usage("--tolerance must be positive".into()));
    }
    let gens = generator_set(ctx, input)?;
    let target = parse_element(target, gens.ambient())
        .map_err(|source| CliError::Located {
            context: "target".into(),
            source,
        })?
        .label();
    let c = close(&gens, ctx.exec);
    let cert = c.certificate(target)?;
    out.line(cert.to_string().trim_end());
    // Independent of the closure engine: re-derive every step symbolically.
    Certificate::parse(&cert.to_string())?.replay()?;

    let ambient = gens.ambient();
    if ambient % 2 == 1 {
        out.line("replay skipped: odd ambient has no faithful gamma-matrix representation");
    } else if ambient > REPLAY_AMBIENT_LIMIT || ambient / 2 > ctx.max_qubits {
        out.line(format!(
            "replay skipped: ambient {ambient} is above the matrix limit {}",
            REPLAY_AMBIENT_LIMIT.min(2 * ctx.max_qubits)
        ));
    } else {
        let dev = replay_certificate(&cert)?;
        let ok = dev <= tolerance;
        if out.records() {
            out.record(
                "replay",
                &[
                    ("steps", cert.steps.len().to_string()),
                    ("depth", cert.depth().to_string()),
                    ("max_deviation", out.num(dev)),
                    ("pass", ok.to_string()),
                ],
            );
        } else {
            out.line(format!(
                "replay: {} steps, depth {}, max deviation {} ({})",
                cert.steps.len(),
                cert.depth(),
                out.num(dev),
                if ok { "ok" } else { "FAILED" }
            ));
        }
        if !ok {
            return Err(CliError::Verification(format!(
                "matrix replay deviates by {dev:e} > {tolerance:e}"
            )));
        }
    }
    Ok(())
}

struct Property {
    name: &'static str,
    value: f64,
    pass: bool,
}

/// Random-sample version of the oracle suite: `(hermiticity, square, homomorphism)`.
fn sampled_checks(qubits: usize, samples: usize, seed: u64) -> CliResult<(f64, f64, HomomorphismReport)> {
    let ambient = 2 * qubits;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = HomomorphismReport::default();
    let (mut herm, mut square) = (0.0f64, 0.0f64);
    let zero = ComplexMatrix::zeros(1 << qubits);
    let id = ComplexMatrix::identity(1 << qubits);
    for _ in 0..samples {
        let a = ScaledElement::basis(ambient, BasisLabel::from_bits(rng.gen_range(0..1u128 << ambient)))?;
        let b = ScaledElement::basis(ambient, BasisLabel::from_bits(rng.gen_range(0..1u128 << ambient)))?;
        let h = represent_hermitized(a.label(), qubits)?;
        herm = herm.max(h.hermitian_defect());
        square = square.max((&h * &h).max_abs_diff(&id));
        let (ma, mb) = (represent(&a, qubits)?, represent(&b, qubits)?);
        let prod = represent(&a.product(&b)?, qubits)?;
        r.product_defect = r.product_defect.max(prod.max_abs_diff(&(&ma * &mb)));
        let dense_comm = ma.commutator(&mb);
        let comm = represent(&a.commutator(&b)?, qubits)?;
        r.commutator_defect = r.commutator_defect.max(comm.max_abs_diff(&dense_comm));
        let comm_zero = dense_comm.max_abs_diff(&zero) < 1e-12;
        let anti_zero = ma.anticommutator(&mb).max_abs_diff(&zero) < 1e-12;
        r.commute_mismatches += usize::from(comm_zero != labels_commute(a.label(), b.label()));
        r.dichotomy_failures += usize::from(comm_zero == anti_zero);
        r.pairs += 1;
    }
    Ok((herm, square, r))
}

pub fn verify_rep(
    ctx: &Ctx,
    out: &mut Out,
    qubits: usize,
    tolerance: f64,
    samples: Option<usize>,
    seed: u64,
) -> CliResult<()> {
    if qubits == 0 {
        return Err(CliError::Usage("need at least 1 qubit".into()));
    }
    if !positive(tolerance) {
        return Err(CliError::Usage("--tolerance must be positive".into()));
    }
    ctx.check_qubits(qubits)?;
    let props = match samples {
        None => {
            let s = run_suite(qubits, ctx.exec)?;
            vec![
                ("clifford_relations", s.clifford_relations),
                ("trace_orthogonality", s.trace_orthogonality),
                ("hermiticity", s.hermiticity),
                ("hermitized_square", s.hermitized_square),
                ("product", s.homomorphism.product_defect),
                ("commutator", s.homomorphism.commutator_defect),
                ("commute_mismatches", s.homomorphism.commute_mismatches as f64),
                ("dichotomy_failures", s.homomorphism.dichotomy_failures as f64),
            ]
        }
        Some(k) => {
            let (herm, square, h) = sampled_checks(qubits, k, seed)?;
            vec![
                (
                    "clifford_relations",
                    cliffgate::matrix::oracle::clifford_relation_defect(qubits)?,
                ),
                ("hermiticity", herm),
                ("hermitized_square", square),
                ("product", h.product_defect),
                ("commutator", h.commutator_defect),
                ("commute_mismatches", h.commute_mismatches as f64),
                ("dichotomy_failures", h.dichotomy_failures as f64),
            ]
        }
    };
    let props: Vec<Property> = props
        .into_iter()
        .map(|(name, value)| Property {
            name,
            value,
            pass: value <= tolerance,
        })
        .collect();
    for p in &props {
        if out.records() {
            out.record(
                "property",
                &[
                    ("name", p.name.into()),
                    ("value", out.num(p.value)),
                    ("pass", p.pass.to_string()),
                ],
            );
        } else {
            out.line(format!(
                "{:<22} {}  {}",
                p.name,
                if p.pass { "PASS" } else { "FAIL" },
                out.num(p.value)
            ));
        }
    }
    let failed: Vec<_> = props.iter().filter(|p| !p.pass).map(|p| p.name).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(failed.join(", ")))
    }
}

pub fn gateset(ctx: &Ctx, out: &mut Out, qubits: usize) -> CliResult<()> {
    ctx.check_qubits(qubits)?;
    let report = twoqubit_gateset(qubits, ctx.exec)?;
    for e in &report.entries {
        let support: Vec<String> = e.support.iter().map(|q| q.to_string()).collect();
        if out.records() {
            out.record(
                "gate",
                &[
                    ("element", e.element.to_string()),
                    ("pauli", e.factorization.to_string()),
                    ("support", support.join(",")),
                    ("local", e.is_local().to_string()),
                ],
            );
        } else {
            out.line(format!(
                "{:<16} {:<10} support {{{}}}",
                e.element.to_string(),
                e.factorization.to_string(),
                support.join(",")
            ));
        }
    }
    out.line(format!(
        "dim={} universal={} local={}",
        report.closure_dimension,
        report.universal,
        report.all_local()
    ));
    Ok(())
}

pub struct SynthArgs<'a> {
    pub input: &'a Path,
    pub steps: usize,
    pub qubits: Option<usize>,
    pub output: Option<&'a Path>,
    pub metric: Metric,
    pub tolerance: f64,
}

pub fn synth(ctx: &Ctx, out: &mut Out, args: SynthArgs<'_>) -> CliResult<()> {
    if args.steps == 0 {
        return Err(CliError::Usage("--steps must be at least 1".into()));
    }
    let h = ComplexMatrix::from_text(&read(args.input)?).map_err(|source| CliError::Located {
        context: args.input.display().to_string(),
        source,
    })?;
    let dim = h.dim();
    if dim == 0 || !dim.is_power_of_two() {
        return Err(cliffgate::Error::Precondition(format!("matrix size {dim} is not a power of two")).into());
    }
    let inferred = dim.trailing_zeros() as usize;
    let qubits = args.qubits.unwrap_or(inferred);
    if qubits != inferred {
        return Err(cliffgate::Error::DimensionMismatch {
            expected: 1 << qubits,
            actual: dim,
        }
        .into());
    }
    ctx.check_qubits(qubits)?;
    let defect = h.hermitian_defect();
    if defect > args.tolerance {
        return Err(cliffgate::Error::NotHermitian(defect).into());
    }
    let metric = match args.metric {
        Metric::Phase => ErrorMetric::PhaseSensitive,
        Metric::Invariant => ErrorMetric::PhaseInvariant,
    };
    let raw = synthesize(&h, args.steps, qubits, metric)?;
    let target = cliffgate::matrix::expm_hermitian(&h, 1.0)?;
    let seq = raw.compact().measure(&target, metric);
    let error = seq.error.unwrap_or(0.0);
    match args.output {
        Some(path) => write(path, &seq.to_text())?,
        None => {
            for line in seq.to_text().lines() {
                out.line(line);
            }
        }
    }
    if out.records() {
        out.record(
            "synth",
            &[
                ("qubits", qubits.to_string()),
                ("steps", args.steps.to_string()),
                ("gates", seq.len().to_string()),
                ("error", out.num(error)),
            ],
        );
    } else {
        out.line(format!(
            "{} gates for {} qubits, {} steps, error {}",
            seq.len(),
            qubits,
            args.steps,
            out.num(error)
        ));
    }
    Ok(())
}

/// Parses `1.25`, `pi`, `-pi/2`, `2*pi/3`, `atan(3/4)`.
pub fn parse_angle(text: &str) -> Result<f64, String> {
    let t = text.trim();
    if let Ok(x) = t.parse::<f64>() {
        return Ok(x);
    }
    if let Some(inner) = t.strip_prefix("atan(").and_then(|r| r.strip_suffix(')')) {
        let v = match inner.split_once('/') {
            Some((a, b)) => num(a)? / num(b)?,
            None => num(inner)?,
        };
        return Ok(v.atan());
    }
    let (sign, body) = match t.strip_prefix('-') {
        Some(rest) => (-1.0, rest),
        None => (1.0, t),
    };
    let (numer, denom) = match body.split_once('/') {
        Some((n, d)) => (n, num(d)?),
        None => (body, 1.0),
    };
    let factor = match numer.strip_suffix("pi") {
        Some("") => 1.0,
        Some(k) => num(k.strip_suffix('*').unwrap_or(k))?,
        None => return Err(format!("cannot read angle `{text}`")),
    };
    Ok(sign * factor * std::f64::consts::PI / denom)
}

fn num(s: &str) -> Result<f64, String> {
    s.trim().parse().map_err(|_| format!("bad number `{s}`"))
}

pub fn power(out: &mut Out, angle: &str, tolerance: f64, cap: u64) -> CliResult<()> {
    let angle = parse_angle(angle).map_err(CliError::Usage)?;
    if !positive(tolerance) {
        return Err(CliError::Usage(format!("tolerance must be positive, got {tolerance}")));
    }
    if cap == 0 {
        return Err(CliError::Usage("--cap must be at least 1".into()));
    }
    let r = irrational_power(angle, tolerance, cap)?;
    if out.records() {
        out.record(
            "power",
            &[
                ("angle", out.num(angle)),
                ("tolerance", out.num(tolerance)),
                ("n", r.n.to_string()),
                ("residual", out.num(r.residual())),
                ("signed_residual", out.num(r.signed_residual)),
            ],
        );
    } else {
        out.line(format!(
            "N={} residual={} (N*angle = {} mod 2pi)",
            r.n,
            out.num(r.residual()),
            out.num(r.signed_residual)
        ));
    }
    Ok(())
}

pub fn random_h(
    ctx: &Ctx,
    out: &mut Out,
    qubits: usize,
    seed: u64,
    normalize: bool,
    output: Option<&Path>,
) -> CliResult<()> {
    if qubits == 0 {
        return Err(CliError::Usage("need at least 1 qubit".into()));
    }
    ctx.check_qubits(qubits)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coeffs: BTreeMap<BasisLabel, f64> = BasisLabel::all(2 * qubits)
        .into_iter()
        .filter(|l| !l.is_unit())
        .map(|l| (l, rng.gen_range(-1.0..1.0)))
        .collect();
    if normalize {
        let norm = coeffs.values().map(|a| a * a).sum::<f64>().sqrt();
        coeffs.values_mut().for_each(|a| *a /= norm);
    }
    let text = CoefficientVector::new(qubits, coeffs)?.hamiltonian().to_text();
    match output {
        Some(path) => write(path, &text)?,
        None => text.lines().for_each(|l| out.line(l)),
    }
    Ok(())
}
