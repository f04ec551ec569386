//! Command-line surface and the validated run configuration.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qdft_core::eigen::PhaseConvention;
use qdft_core::periodize::TruncationPolicy;
use qdft_core::{RealQParams, RootOfUnityParams};
use serde::Serialize;

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "qdft",
    version,
    about = "Eigenvectors of the finite Fourier transform from periodized q-Hermite functions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Relative truncation tolerance for lattice sums.
    #[arg(long, global = true, env = "QDFT_EPS")]
    pub eps: Option<f64>,

    /// Report file; standard output when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Periodized Hermite functions as DFT eigenvectors, with a rank report.
    Mehta {
        #[arg(long = "N")]
        size: usize,
    },
    /// The vectors f_n, F_n, G_n at q = exp(2πij/M) and their residuals.
    Qeigen(QeigenArgs),
    /// The identity battery.
    Verify(VerifyArgs),
    /// Discrete orthogonality weights on the zeros of T_M.
    Weights {
        #[arg(long)]
        j: i64,
        #[arg(long = "M")]
        m: i64,
    },
}

#[derive(Debug, Args)]
pub struct QeigenArgs {
    #[arg(long = "N")]
    pub size: usize,
    #[arg(long = "n-max", default_value_t = 4)]
    pub n_max: usize,
    #[arg(long)]
    pub j: i64,
    #[arg(long = "M")]
    pub m: i64,
    /// Which phase's F_n and G_n are written out; residuals cover both.
    #[arg(long, value_enum, default_value_t = Phase::Pi4)]
    pub phase: Phase,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Transform size for the finite identities (default: 5 and 8).
    #[arg(long = "N")]
    pub size: Option<usize>,
    #[arg(long = "n-max")]
    pub n_max: Option<usize>,
    #[arg(long)]
    pub j: Option<i64>,
    /// Root order; alone it selects every co-prime j.
    #[arg(long = "M")]
    pub m: Option<i64>,
    /// Real deformation parameter in (0, 1).
    #[arg(long)]
    pub q: Option<f64>,
    /// Restrict the battery; repeatable or comma separated.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub only: Vec<Identity>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Phase {
    /// e^{iπn/4}
    Pi4,
    /// e^{iπn/8}
    Pi8,
}

impl Phase {
    pub fn convention(self) -> PhaseConvention {
        match self {
            Phase::Pi4 => PhaseConvention::PiOver4,
            Phase::Pi8 => PhaseConvention::PiOver8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Phase::Pi4 => "pi4",
            Phase::Pi8 => "pi8",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    Dft,
    Hermite,
    Transform,
    SelfDual,
    RealBranch,
    RootBranch,
    CosPower,
    Chebyshev,
    Factorization,
    FinitePair,
    Conjugate,
    Limit,
}

impl Identity {
    pub const ALL: [Identity; 12] = [
        Identity::Dft,
        Identity::Hermite,
        Identity::Transform,
        Identity::SelfDual,
        Identity::RealBranch,
        Identity::RootBranch,
        Identity::CosPower,
        Identity::Chebyshev,
        Identity::Factorization,
        Identity::FinitePair,
        Identity::Conjugate,
        Identity::Limit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Dft => "dft",
            Identity::Hermite => "hermite",
            Identity::Transform => "transform",
            Identity::SelfDual => "self-dual",
            Identity::RealBranch => "real-branch",
            Identity::RootBranch => "root-branch",
            Identity::CosPower => "cos-power",
            Identity::Chebyshev => "chebyshev",
            Identity::Factorization => "factorization",
            Identity::FinitePair => "finite-pair",
            Identity::Conjugate => "conjugate",
            Identity::Limit => "limit",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandKind {
    Mehta,
    Qeigen,
    Verify,
    Weights,
}

/// Deformation parameters of a run. The root and real branches never mix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Deformation {
    None,
    /// `M` given alone: every co-prime `j`.
    Order(u32),
    Root(RootOfUnityParams),
    Real(RealQParams),
}

/// A validated run.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: CommandKind,
    #[serde(rename = "N")]
    pub size: Option<usize>,
    pub n_max: Option<usize>,
    pub j: Option<u32>,
    #[serde(rename = "M")]
    pub m: Option<u32>,
    pub q_real: Option<f64>,
    pub eps: f64,
    pub output_path: Option<PathBuf>,
    pub format: Format,
    pub phase: Option<Phase>,
    pub only: Vec<Identity>,
    #[serde(skip)]
    pub deformation: Deformation,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let eps = match cli.eps {
            Some(eps) if !(eps.is_finite() && eps > 0.0) => {
                return Err(CliError::Usage(format!("--eps must be a positive finite number, got {eps}")))
            }
            Some(eps) => eps,
            None => TruncationPolicy::default().eps,
        };
        let mut config = RunConfig {
            command: CommandKind::Mehta,
            size: None,
            n_max: None,
            j: None,
            m: None,
            q_real: None,
            eps,
            output_path: cli.out,
            format: cli.format,
            phase: None,
            only: Vec::new(),
            deformation: Deformation::None,
        };
        match cli.command {
            Command::Mehta { size } => {
                config.size = Some(positive_size(size)?);
            }
            Command::Qeigen(args) => {
                config.command = CommandKind::Qeigen;
                config.size = Some(positive_size(args.size)?);
                config.n_max = Some(args.n_max);
                config.phase = Some(args.phase);
                config.set_root(RootOfUnityParams::new(args.j, args.m).map_err(CliError::usage)?);
            }
            Command::Weights { j, m } => {
                config.command = CommandKind::Weights;
                config.set_root(RootOfUnityParams::coprime(j, m).map_err(CliError::usage)?);
            }
            Command::Verify(args) => {
                config.command = CommandKind::Verify;
                config.size = args.size.map(positive_size).transpose()?;
                config.n_max = args.n_max;
                let mut only = args.only;
                only.sort();
                only.dedup();
                config.only = only;
                match (args.j, args.m, args.q) {
                    (None, None, None) => {}
                    (Some(_), _, Some(_)) | (_, Some(_), Some(_)) => {
                        return Err(CliError::Usage("--q cannot be combined with --j/--M".into()))
                    }
                    (None, None, Some(q)) => {
                        let params = RealQParams::from_q(q).map_err(CliError::usage)?;
                        config.q_real = Some(q);
                        config.deformation = Deformation::Real(params);
                    }
                    (Some(_), None, None) => return Err(CliError::Usage("--j needs --M".into())),
                    (None, Some(m), None) => {
                        if m < 2 {
                            return Err(CliError::Usage(format!("--M must be at least 2, got {m}")));
                        }
                        let m = u32::try_from(m).map_err(|_| CliError::Usage(format!("--M too large: {m}")))?;
                        config.m = Some(m);
                        config.deformation = Deformation::Order(m);
                    }
                    (Some(j), Some(m), None) => {
                        config.set_root(RootOfUnityParams::coprime(j, m).map_err(CliError::usage)?);
                    }
                }
            }
        }
        Ok(config)
    }

    fn set_root(&mut self, params: RootOfUnityParams) {
        self.j = Some(params.j());
        self.m = Some(params.order());
        self.deformation = Deformation::Root(params);
    }

    pub fn policy(&self) -> TruncationPolicy {
        TruncationPolicy::with_eps(self.eps)
    }

    pub fn root(&self) -> Option<RootOfUnityParams> {
        match self.deformation {
            Deformation::Root(p) => Some(p),
            _ => None,
        }
    }

    /// Whether the battery should run `identity`.
    pub fn selects(&self, identity: Identity) -> bool {
        self.only.is_empty() || self.only.contains(&identity)
    }
}

fn positive_size(size: usize) -> Result<usize, CliError> {
    if size == 0 {
        Err(CliError::Usage("--N must be at least 1".into()))
    } else {
        Ok(size)
    }
}
