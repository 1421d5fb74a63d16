mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "gradreg", version, about = "Weighted regularities of graded algebras and modules")]
pub struct Cli {
    /// Degree window.
    #[arg(long, global = true, default_value_t = 16, value_parser = clap::value_parser!(u32).range(2..))]
    pub dmax: u32,
    /// Homological window.
    #[arg(long, global = true, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
    pub hmax: u64,
    /// Coefficient field (`Q` or `F<p>`), overriding the one in the file.
    #[arg(long, global = true)]
    pub field: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Gröbner cache directory; GRADREG_CACHE takes precedence.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RegKind {
    Tor,
    Ext,
    Cm,
    As,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(clap::Args, Debug)]
pub struct ModuleArgs {
    /// Algebra file.
    pub algebra: PathBuf,
    /// `k`, `A`, `A/(f, g, ...)` or a module file.
    #[arg(long, default_value = "k")]
    pub module: String,
    #[arg(long, value_enum, default_value_t = SideArg::Left)]
    pub side: SideArg,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Gröbner basis and graded dimensions.
    Gb { algebra: PathBuf },
    /// Graded dimensions of the algebra.
    Hilbert { algebra: PathBuf },
    /// Betti table of a minimal free resolution.
    Betti(ModuleArgs),
    /// A weighted regularity at one or more weights.
    Reg {
        #[arg(value_enum)]
        kind: RegKind,
        #[command(flatten)]
        target: ModuleArgs,
        /// `xi0,xi1`, or `classic`, `pdim`, `sup`.
        #[arg(long, required = true)]
        xi: Vec<String>,
    },
    /// Depth via local duality.
    Depth(ModuleArgs),
    /// Projective dimension.
    Pdim(ModuleArgs),
    /// Backelin rate of the algebra.
    Rate { algebra: PathBuf },
    /// Slope of the algebra.
    Slope { algebra: PathBuf },
    /// Koszulness of the algebra through the window.
    Koszul { algebra: PathBuf },
    /// Presentation of a Veronese subalgebra.
    Veronese {
        algebra: PathBuf,
        #[arg(long)]
        d: u32,
        /// Veronese degree through which generators are complete.
        #[arg(long)]
        gen_bound: Option<u32>,
        /// Veronese degree through which relations are complete.
        #[arg(long)]
        rel_bound: Option<u32>,
    },
    /// Presentation of the subalgebra generated by some elements.
    Subalgebra {
        algebra: PathBuf,
        /// Comma-separated homogeneous elements.
        #[arg(long, required = true, value_delimiter = ',')]
        gens: Vec<String>,
        #[arg(long)]
        gen_bound: Option<u32>,
        #[arg(long)]
        rel_bound: Option<u32>,
    },
    /// Artin–Schelter regularity and type.
    Astype { algebra: PathBuf },
    /// The bound `c` for `𝕜_A` from a resolution of `A` over `T`.
    Bound58 {
        /// The algebra `A`.
        algebra: PathBuf,
        /// Algebra file of `T`.
        #[arg(long)]
        via: PathBuf,
        /// Comma-separated images of the generators of `T` in `A`;
        /// by generator names when omitted.
        #[arg(long, value_delimiter = ',')]
        images: Option<Vec<String>>,
    },
    /// Run verification suites on the built-in corpus.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.body);
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("gradreg: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
