use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zetalab_core::moments::MomentKind;

#[derive(Parser, Debug)]
#[command(
    name = "zetalab",
    version,
    about = "Numerical laboratory for the sixth moment of zeta"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Upper limit of the divisor sieve.
    #[arg(long, global = true, default_value_t = 2_000_000)]
    pub sieve_limit: usize,

    /// Worker threads for panel quadrature (default: all cores).
    #[arg(long, global = true, env = "ZETALAB_WORKERS")]
    pub workers: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct Height {
    /// Upper limit of integration.
    #[arg(short = 'T', long = "T", default_value_t = 1e4)]
    pub t: f64,
}

#[derive(Args, Debug, Clone)]
pub struct Weighted {
    #[command(flatten)]
    pub height: Height,

    /// Length exponent: N = T^theta.
    #[arg(long, default_value_t = 0.25)]
    pub theta: f64,

    /// Coefficients of the weight P, constant term first.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        default_value = "1"
    )]
    pub poly: Vec<f64>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    M1,
    M2,
    M3,
    I1,
    I2,
    Kn,
    Jn,
    Cross,
    Chi3,
    Diagonal,
    Jara,
}

impl From<KindArg> for MomentKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::M1 => MomentKind::M1,
            KindArg::M2 => MomentKind::M2,
            KindArg::M3 => MomentKind::M3,
            KindArg::I1 => MomentKind::I1,
            KindArg::I2 => MomentKind::I2,
            KindArg::Kn => MomentKind::KN,
            KindArg::Jn => MomentKind::JN,
            KindArg::Cross => MomentKind::Cross,
            KindArg::Chi3 => MomentKind::Chi3,
            KindArg::Diagonal => MomentKind::Diagonal,
            KindArg::Jara => MomentKind::Jara,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// a_3 by both methods and the constants 42/9!, 28/9!, 14/9!.
    Constants,
    /// The moment int_1^T |zeta|^(2k).
    Moment {
        #[arg(short, long, default_value_t = 3)]
        k: u32,
        #[command(flatten)]
        height: Height,
    },
    /// I_1, I_2 and the defect |I_2 - conj(I_1)| / |I_1|.
    IdentityCheck {
        #[command(flatten)]
        height: Height,
    },
    /// K_N(T) against its main term.
    Ktheorem(Weighted),
    /// J_N(T) against its main term.
    Jtheorem(Weighted),
    /// The cross term 2 Re int chi(1-s) D(1-s) D(s)^2.
    Cross {
        #[command(flatten)]
        height: Height,
    },
    /// The chi^3 term 2 Re int chi(1-s)^3 D(s)^3.
    Chi3 {
        #[command(flatten)]
        height: Height,
    },
    /// int |zeta|^4 |sum_{n <= T^theta} n^(it)|^2.
    Jara {
        #[command(flatten)]
        height: Height,
        #[arg(long, default_value_t = 0.5)]
        theta: f64,
    },
    /// Normalised error of the approximate functional equation.
    AfeSurvey {
        #[arg(long, default_value_t = 10.0)]
        t0: f64,
        #[arg(long, default_value_t = 5000.0)]
        t1: f64,
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
    /// Shifted correlation sums of d_3.
    Correlate {
        #[arg(short, long)]
        x: u64,
        #[arg(long, default_value_t = 10)]
        h_max: u64,
    },
    /// Z(t) on a uniform grid, optionally written to a sample cache.
    ZetaGrid {
        #[arg(long)]
        t0: f64,
        #[arg(long)]
        t1: f64,
        #[arg(long)]
        dt: f64,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// One integral kind over several heights with fitted log-log slopes.
    Trend {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_delimiter = ',', default_value = "1000,10000,100000")]
        heights: Vec<f64>,
        #[arg(long, default_value_t = 0.25)]
        theta: f64,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            default_value = "1"
        )]
        poly: Vec<f64>,
    },
}
