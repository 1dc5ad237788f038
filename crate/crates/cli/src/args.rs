use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "cliffgate",
    version,
    about = "Clifford-algebra Lie closure, certificates and gate synthesis"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output style: aligned text with 6 significant digits, or one
    /// `key=value` record per line at full precision.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,

    /// Worker threads for parallel sweeps (1 runs sequentially).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Largest ambient generator count accepted by symbolic commands.
    #[arg(long, default_value_t = 64, global = true)]
    pub max_ambient: usize,

    /// Largest qubit count accepted by dense-matrix commands.
    #[arg(long, default_value_t = 6, global = true)]
    pub max_qubits: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Human,
    Records,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    /// Γ_0 … Γ_{m-1}
    Generators,
    /// Generators plus ẽ_{012}
    Triple,
    /// Γ_0 with the nearest-neighbour pairs ẽ_{l-1,l}
    Chain,
    /// The chain plus ẽ_{012}
    Twoqubit,
}

#[derive(Args, Debug, Clone)]
pub struct GeneratorInput {
    /// Ambient generator count (2n for n qubits).
    #[arg(short = 'm', long)]
    pub ambient: usize,

    /// Generators as element text, e.g. `e[0]` `i*e[0,1,2]`.
    pub generators: Vec<String>,

    /// Read generators from a file, one per line.
    #[arg(long, conflicts_with = "preset")]
    pub from: Option<PathBuf>,

    /// Use a built-in generator set instead of listing elements.
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Metric {
    /// ‖U − V‖
    Phase,
    /// min over global phase of ‖U − e^{iφ}V‖
    Invariant,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Lie closure dimension and universality of a generator set.
    Closure {
        #[command(flatten)]
        input: GeneratorInput,

        /// Always list reached labels (by default only when there are at most 64).
        #[arg(long, conflicts_with = "no_labels")]
        labels: bool,

        /// Never list reached labels.
        #[arg(long)]
        no_labels: bool,
    },

    /// Nested-commutator derivation of a target label.
    Certify {
        #[command(flatten)]
        input: GeneratorInput,

        /// Target element, e.g. `e[0,1,2,3]`.
        #[arg(short, long)]
        target: String,

        /// Allowed matrix replay deviation.
        #[arg(long, default_value_t = 1e-10)]
        tolerance: f64,
    },

    /// Check the gamma-matrix representation against the symbolic algebra.
    VerifyRep {
        #[arg(short = 'n', long)]
        qubits: usize,

        #[arg(long, default_value_t = 1e-12)]
        tolerance: f64,

        /// Check this many random label pairs instead of all of them.
        #[arg(long)]
        samples: Option<usize>,

        #[arg(long, default_value_t = 0)]
        seed: u64,
    },

    /// The 2n+1 local generators with their Pauli forms.
    Gateset {
        #[arg(short = 'n', long)]
        qubits: usize,
    },

    /// Product-formula circuit for exp(iH) from a Hermitian matrix file.
    Synth {
        /// Matrix text file: one row per line, entries `re,im`.
        input: PathBuf,

        /// Number of product-formula repetitions.
        #[arg(short = 'N', long, default_value_t = 16)]
        steps: usize,

        /// Qubit count; inferred from the matrix size when omitted.
        #[arg(short = 'n', long)]
        qubits: Option<usize>,

        /// Where to write the gate sequence.
        #[arg(short, long)]
        output: Option<PathBuf>,

        /// Error metric used for the reported distance.
        #[arg(long, value_enum, default_value_t = Metric::Phase)]
        metric: Metric,

        /// Largest Hermiticity defect accepted.
        #[arg(long, default_value_t = 1e-10)]
        tolerance: f64,
    },

    /// Least N with exp(iϖẽ)^N within ε of the identity.
    Power {
        /// Angle ϖ in radians; `pi`, `pi/2`, `2*pi/3` and `atan(3/4)` forms are accepted.
        #[arg(long, allow_hyphen_values = true)]
        angle: String,

        /// Angular tolerance ε.
        #[arg(long, alias = "eps", allow_hyphen_values = true)]
        tolerance: f64,

        /// Largest N searched.
        #[arg(long, default_value_t = cliffgate::synthesis::DEFAULT_CAP)]
        cap: u64,
    },

    /// Write a seeded random Hermitian matrix in the matrix text format.
    RandomH {
        #[arg(short = 'n', long)]
        qubits: usize,

        #[arg(long, default_value_t = 0)]
        seed: u64,

        /// Scale so the coefficient vector has unit Euclidean norm.
        #[arg(long)]
        normalize: bool,

        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}
