//! `tiedbox`: enumeration, presentation checks, algebra arithmetic and the verification matrix.

mod commands;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tiedbox::presentations::Preset;
use tiedbox::report::Format;

/// Exit status for malformed invocations.
pub const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "tiedbox", version, about = "Exact computations with ramified monoids and tied-boxed algebras")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Seed for every randomized step (sampling, probabilistic ranks).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Lines)]
    pub format: FormatArg,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Budget profile: quick caps the verification matrix at n = 3.
    #[arg(long, global = true, value_enum, env = "TIEDBOX_PROFILE", default_value_t = ProfileArg::Full)]
    pub profile: ProfileArg,
    /// Knuth–Bendix rule limit.
    #[arg(long, global = true, default_value_t = 20_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_rules: u64,
    /// Knuth–Bendix critical-pair limit.
    #[arg(long, global = true, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_reductions: u64,
    /// Largest set enumerated or basis built before a row is reported inconclusive.
    #[arg(long, global = true, default_value_t = 2_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_elements: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Lines,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProfileArg {
    Quick,
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MonoidArg {
    Symmetric,
    Jones,
    Brauer,
    Partition,
    RSymmetric,
    RJones,
    RBrauer,
    RPartition,
    BrSymmetric,
    BrJones,
    BrBrauer,
    BrPartition,
    SrSymmetric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Bt,
    Bh,
    Btl,
    Hecke,
    Tl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CellularArg {
    Hecke,
    Tl,
    Bh,
    Btl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TensorArg {
    Bt,
    Bh,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PairsArg {
    Generators,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NormalFormArg {
    BrSymmetric,
    SrSymmetric,
    BrBrauer,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count (and optionally list) the elements of a diagram or ramified monoid.
    Enumerate {
        #[arg(long, value_enum)]
        monoid: MonoidArg,
        #[arg(long)]
        n: usize,
        /// Emit one record per element.
        #[arg(long)]
        list: bool,
    },
    /// Check a presentation against its monoid: homomorphism, surjectivity, normal-form count.
    PresentCheck {
        /// One of pn, brauer, rsn, brsn, brsn-z, srsn, brjn, brbrn, brbrn-abstract.
        #[arg(long)]
        preset: Preset,
        #[arg(long)]
        n: usize,
        /// Replace the preset's relations by the `u = v` lines of this file.
        #[arg(long)]
        relations: Option<PathBuf>,
        /// Print the presentation to stderr.
        #[arg(long)]
        print: bool,
    },
    /// Basis dimensions against the closed formulas.
    Dim {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
    /// Multiply generators, e.g. `multiply --algebra bh --n 3 e1 z2 z1`.
    Multiply {
        #[arg(long, value_enum)]
        algebra: FamilyArg,
        #[arg(long)]
        n: usize,
        /// Generator names (`g1`, `g1^-1`, `e2`, `z1`, `d1`, `h1`, `u1`) or `1`.
        #[arg(required = true)]
        factors: Vec<String>,
        /// Tensor-space colours for the oracle check (bt and bh); defaults to n.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Build a Murphy-type cellular basis and check it.
    Cellular {
        #[arg(long, value_enum)]
        algebra: CellularArg,
        #[arg(long)]
        n: usize,
        /// Check the multiplication axiom: exhaustively for n ≤ 3, by sampling above.
        #[arg(long)]
        check_axioms: bool,
        #[arg(long, default_value_t = 60)]
        samples: usize,
    },
    /// Defining relations, faithfulness rank and products in the tensor representation.
    RepCheck {
        #[arg(long, value_enum)]
        algebra: TensorArg,
        #[arg(long)]
        n: usize,
        /// Colours; at least n.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_enum, default_value_t = PairsArg::Generators)]
        pairs: PairsArg,
    },
    /// Completeness, centrality, orthogonality of the Möbius idempotents.
    IdempotentCheck {
        #[arg(long, value_enum)]
        algebra: TensorArg,
        #[arg(long)]
        n: usize,
        /// Flip the Möbius signs off the diagonal (negative control).
        #[arg(long)]
        corrupt_mobius: bool,
    },
    /// Centers of R(S_n) and BR(S_n).
    Center {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        list: bool,
    },
    /// Normal forms of ramified partitions.
    NormalForm {
        #[arg(long, value_enum)]
        monoid: NormalFormArg,
        #[arg(long)]
        n: usize,
        /// A single element, `left ; right`.
        #[arg(long)]
        element: Option<String>,
        /// Reduced word for the permutation part, e.g. "2 1 3 2 3".
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        list: bool,
    },
    /// The whole verification matrix.
    VerifyAll {
        /// Run only these criteria (1–10).
        #[arg(long = "criterion")]
        criteria: Vec<usize>,
        #[arg(long)]
        corrupt_mobius: bool,
    },
}

impl FormatArg {
    fn format(self) -> Format {
        match self {
            FormatArg::Lines => Format::Lines,
            FormatArg::Table => Format::Table,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let start = Instant::now();
    let report = match commands::run(&cli) {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("tiedbox: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let text = report.render(cli.common.format.format());
    let written = match &cli.common.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("tiedbox: cannot write report: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    let status = report.status();
    eprintln!("{}: {:?} in {:.3}s", report.command, status, start.elapsed().as_secs_f64());
    ExitCode::from(status.exit_code() as u8)
}
