use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use wmfock_core::partitions::DEFAULT_ENUMERATION_BOUND;
use wmfock_core::transforms::DEFAULT_LADDER_TOLERANCE;

#[derive(Debug, Parser)]
#[command(name = "wmfock", version, about = "Monotone convolution powers of the semicircle law")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,

    /// Seed for randomized checks.
    #[arg(long, default_value_t = 42, global = true)]
    pub seed: u64,

    /// Largest n for which NC_2(2n) or Fock-space walks are enumerated.
    #[arg(long, env = "WMFOCK_ENUM_BOUND", default_value_t = DEFAULT_ENUMERATION_BOUND, global = true)]
    pub enum_bound: usize,

    /// Residual above which a Stieltjes limit counts as unconverged.
    #[arg(long, default_value_t = DEFAULT_LADDER_TOLERANCE, global = true)]
    pub ladder_tolerance: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Even moments d_0^(m), ..., d_n^(m).
    Moments {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long)]
        n: usize,
    },
    /// Monotone cumulants r_1, ..., r_k of the semicircle law.
    Cumulants {
        #[arg(long, default_value_t = 20)]
        k: usize,
    },
    /// d_n^(m) as a polynomial in m.
    Poly {
        #[arg(long)]
        n: usize,
    },
    /// Density of the m-th power sampled on a grid.
    Density {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long, allow_hyphen_values = true)]
        x_min: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        x_max: Option<f64>,
        #[arg(long, default_value_t = 201)]
        samples: usize,
    },
    /// Support endpoints a_1, ..., a_M with their bound checks.
    Support {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m_max: u32,
    },
    /// Jacobi coefficients and monic orthogonal polynomials.
    Orthopoly {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..), default_value_t = 2)]
        m: u32,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Cross-checks between independent computations.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        /// Seeded trials for the independence laws.
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
    /// SVG plot of the density of the m-th power.
    Plot {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long, default_value_t = 401)]
        samples: usize,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyTarget {
    Partitions,
    Fock,
    Transforms,
    All,
}

impl VerifyTarget {
    pub fn name(self) -> &'static str {
        match self {
            VerifyTarget::Partitions => "partitions",
            VerifyTarget::Fock => "fock",
            VerifyTarget::Transforms => "transforms",
            VerifyTarget::All => "all",
        }
    }
}
