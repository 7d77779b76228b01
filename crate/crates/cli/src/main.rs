//! `nilrad`: curvature of nilradicals of parabolic subalgebras.
//!
//! Characteristic elements are comma-separated coefficients in Bourbaki node
//! order, e.g. `0,1,0,0` for `H^2` on F4:
//!
//! ```text
//! A_r  1 - 2 - ... - r          B_r  1 - ... - (r-1) => r
//! C_r  1 - ... - (r-1) <= r     D_r  1 - ... - (r-2) < (r-1), r
//! E_r  1 - 3 - 4 - 5 - ... - r, with 2 attached to 4
//! F4   1 - 2 => 3 - 4           G2   1 <= 2 (node 1 short)
//! BC_r like B_r, node r carrying the doubled root 2α_r
//! ```

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nilrad_core::catalog::{load_catalog, Catalog};
use nilrad_core::curvature::einstein_verdict;
use nilrad_core::gradation::{enumerate_gradations, make_gradation, EnumerateOptions};
use nilrad_core::oracle::{build_model, compare_with_symbolic};
use nilrad_core::report::{
    analysis_csv, AnalysisDocument, EnumerationDocument, ListingDocument, OracleDocument,
    TableDocument, SCHEMA,
};
use nilrad_core::table::exceptional_table;
use nilrad_core::Error;
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "nilrad",
    version,
    about = "Ricci curvature of nilradicals of parabolic subalgebras"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Extra catalog entries (TOML, one `[[algebra]]` table per entry).
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    /// Print nothing; report through the exit code only.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// List the catalog.
    ListAlgebras,
    /// Analyze one gradation.
    Analyze {
        algebra: String,
        /// Characteristic coefficients, e.g. `1,0`.
        coeffs: String,
    },
    /// Analyze every gradation up to diagram automorphisms.
    Enumerate {
        algebra: String,
        /// Keep only gradations of kind at most this.
        #[arg(long)]
        max_kind: Option<u32>,
        /// Coefficient bound; above 1 also lists gradations not of type α₀.
        #[arg(long, default_value_t = 1)]
        max_coeff: u32,
    },
    /// Kind-3 and kind-4 Einstein gradations of the exceptional restricted root systems.
    PaperTable,
    /// Compare the symbolic engine with explicit sl_n structure constants.
    OracleCheck {
        n: usize,
        /// Block sizes, e.g. `1,2,1`.
        blocks: String,
        /// Largest accepted n.
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
}

enum Failure {
    /// Bad input: exit code 2.
    Input(String),
    /// A check did not pass: exit code 1.
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Consistency(_) => Failure::Verification(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

struct Output {
    format: Format,
    quiet: bool,
}

impl Output {
    fn emit<T: Serialize>(
        &self,
        doc: &T,
        text: impl FnOnce() -> String,
        csv: impl FnOnce() -> String,
    ) {
        if self.quiet {
            return;
        }
        let s = match self.format {
            Format::Text => text(),
            Format::Json => serde_json::to_string_pretty(doc).expect("documents serialize") + "\n",
            Format::Csv => csv(),
        };
        print!("{s}");
    }
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, Failure> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<T>()
                .map_err(|_| Failure::Input(format!("bad {what} `{text}`")))
        })
        .collect()
}

fn load(path: Option<&PathBuf>) -> Result<Catalog, Failure> {
    let mut catalog = Catalog::builtin();
    if let Some(p) = path {
        let text =
            fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
        catalog.extend(load_catalog(&text)?)?;
    }
    Ok(catalog)
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let catalog = load(cli.catalog.as_ref())?;
    let out = Output {
        format: cli.format,
        quiet: cli.quiet,
    };
    match &cli.command {
        Command::ListAlgebras => {
            let doc = ListingDocument::new(catalog.entries());
            out.emit(&doc, || doc.to_text(), || doc.to_csv());
        }
        Command::Analyze { algebra, coeffs } => {
            let entry = catalog.lookup(algebra)?;
            let rrd = entry.to_root_data()?;
            let coeffs: Vec<u32> = parse_list(coeffs, "coefficient vector")?;
            let g = make_gradation(&rrd, &coeffs)?;
            let doc = AnalysisDocument::new(&rrd, &einstein_verdict(&g)?);
            out.emit(&doc, || doc.to_text(), || analysis_csv(&doc));
        }
        Command::Enumerate {
            algebra,
            max_kind,
            max_coeff,
        } => {
            let entry = catalog.lookup(algebra)?;
            let rrd = entry.to_root_data()?;
            let opts = EnumerateOptions {
                alpha0_only: *max_coeff <= 1,
                max_coefficient: *max_coeff,
                max_kind: *max_kind,
            };
            let gradations = enumerate_gradations(&rrd, &opts)
                .iter()
                .map(|g| Ok(AnalysisDocument::new(&rrd, &einstein_verdict(g)?)))
                .collect::<Result<Vec<_>, Error>>()?;
            let doc = EnumerationDocument {
                schema: SCHEMA.to_string(),
                algebra: entry.name.clone(),
                system: entry.label(),
                gradations,
            };
            out.emit(&doc, || doc.to_text(), || doc.to_csv());
        }
        Command::PaperTable => {
            let rows = exceptional_table(&catalog)?;
            let doc = TableDocument::new(&rows);
            out.emit(&doc, || doc.to_text(), || doc.to_csv());
            if let Some(r) = rows.iter().find(|r| !r.einstein) {
                return Err(Failure::Verification(format!(
                    "{} is not Einstein",
                    r.line()
                )));
            }
        }
        Command::OracleCheck { n, blocks, max_n } => {
            let blocks: Vec<usize> = parse_list(blocks, "block list")?;
            if blocks.iter().sum::<usize>() != *n {
                return Err(Failure::Input(format!(
                    "blocks {blocks:?} do not sum to {n}"
                )));
            }
            if *n > *max_n {
                return Err(Failure::Input(format!("n = {n} exceeds --max-n {max_n}")));
            }
            let model = build_model(&blocks)?;
            let doc = OracleDocument::new(&compare_with_symbolic(&model)?);
            out.emit(&doc, || doc.to_text(), || doc.to_csv());
            if !doc.passed {
                return Err(Failure::Verification("oracle mismatch".into()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("nilrad: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("nilrad: {msg}");
            ExitCode::from(2)
        }
    }
}
