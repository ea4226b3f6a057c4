use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nilhom::hom_count::Method;

#[derive(Parser, Debug)]
#[command(name = "nilhom", version, about = "Nilpotent tuples in SU(2), SO(3), U(2) and F2 spectral-sequence algebra")]
pub struct Cli {
    /// Tab-separated output instead of JSON.
    #[arg(long, global = true)]
    pub tsv: bool,

    /// Worker threads for enumeration; 0 means all available cores.
    #[arg(long, global = true, env = "NILHOM_WORKERS", default_value_t = 0)]
    pub workers: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count components of spaces of commuting-up-to-nilpotence tuples.
    Components {
        #[arg(value_enum)]
        target: ComponentTarget,
        #[command(flatten)]
        size: Size,
    },
    /// Count the pieces of the stable splitting.
    Summands {
        #[arg(value_enum)]
        target: SummandTarget,
        #[arg(short = 'k', value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(short = 'q', value_parser = clap::value_parser!(u32).range(2..))]
        q: u32,
        #[arg(long, default_value = "formula", value_parser = parse_method)]
        method: Method,
    },
    /// Group-theoretic data.
    Group {
        #[command(subcommand)]
        action: GroupAction,
    },
    /// Poset of maximal subgroups of nilpotency class below R.
    Poset {
        /// e.g. Q16 or Q2^4
        group: String,
        #[arg(short = 'r')]
        r: u32,
    },
    /// Groebner-basis computations on an ideal file.
    Gb {
        #[arg(value_enum)]
        op: GbOp,
        #[arg(long)]
        ring: PathBuf,
        /// A polynomial, or the label of one in the file.
        #[arg(long)]
        poly: Option<String>,
        #[arg(long, default_value_t = 10)]
        maxdeg: u32,
    },
    /// Spectral-sequence pages.
    Spectral {
        #[command(subcommand)]
        which: SpectralCase,
        #[arg(long, default_value_t = 10, global = true)]
        maxdeg: u32,
    },
    /// Run built-in checks.
    Verify {
        #[arg(value_enum)]
        what: VerifyWhat,
    },
}

#[derive(Args, Debug)]
pub struct Size {
    #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    #[arg(short = 'q', value_parser = clap::value_parser!(u32).range(2..))]
    pub q: u32,
    #[arg(long, default_value = "formula", value_parser = parse_method)]
    pub method: Method,
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: nilhom::Error| e.to_string())
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum ComponentTarget {
    Su2,
    So3,
    U2,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum SummandTarget {
    Su2,
    So3,
}

#[derive(Subcommand, Debug)]
pub enum GroupAction {
    Info {
        /// e.g. Q16, Q2^4, C2^3, D2^3
        group: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum GbOp {
    Basis,
    Reduce,
    Colon,
    Hilbert,
}

#[derive(Subcommand, Debug)]
pub enum SpectralCase {
    /// Total space Bcom Q_{2^N}.
    Bcom {
        #[arg(value_parser = clap::value_parser!(u32).range(3..=12))]
        n: u32,
    },
    /// The extension for B(3, Q16).
    B3q16,
    /// An extension read from an ideal file with `k:` and optional
    /// `sq1k:` and `d5:` lines.
    File {
        #[arg(long)]
        ring: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum VerifyWhat {
    Appendix,
    All,
}
