use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

use commands::Outcome;

/// Exact checks and constructions for BiHom-associative dialgebras.
///
/// Exit status: 0 when every check passed, 1 when checks ran and found
/// violations, 2 on input or usage errors.
#[derive(Parser, Debug)]
#[command(name = "dialg", version)]
pub struct Cli {
    /// Scalar field for verbs that support it.
    #[arg(long, global = true, value_enum, default_value_t = Field::Q)]
    pub field: Field,
    /// Human-readable report instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    pub text: bool,
    /// JSON report (the default).
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Field {
    Q,
    Gf2,
    Gf3,
}

impl Field {
    pub fn name(self) -> &'static str {
        match self {
            Field::Q => "q",
            Field::Gf2 => "gf2",
            Field::Gf3 => "gf3",
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Commutation of the maps and the five associativity axioms.
    Check {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// Whether a linear map is a dialgebra morphism.
    Morphism {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        target: PathBuf,
    },
    /// Builds a twisted algebra and verifies it.
    Twist(TwistArgs),
    /// Checks an operator against its defining identities, or searches for
    /// all of them over a finite field.
    Operator(OperatorArgs),
    /// Bracket algebras: the Leibniz functor, the LR bracket, the commutator
    /// of an associative algebra, or a bracket file.
    Bracket(BracketArgs),
    /// The Poisson dialgebra of a regular dialgebra.
    Poisson {
        #[arg(long)]
        algebra: PathBuf,
        /// Use the untwisted commutator `x ⊣ y − y ⊢ x`.
        #[arg(long)]
        plain: bool,
    },
    /// The thirty action equalities and the Leibniz functor comparison.
    Action {
        #[arg(long)]
        action: PathBuf,
    },
    /// Second cohomology with values in a module.
    Cohomology(CohomologyArgs),
    /// `(α^k, β^l)`-derivations.
    Derive {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        k: i32,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        l: i32,
        /// Test one operator instead of computing the whole space.
        #[arg(long)]
        op: Option<PathBuf>,
    },
    /// The built-in classification tables.
    Corpus {
        #[command(subcommand)]
        action: CorpusCommand,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TwistKind {
    Yau,
    RotaBaxter,
    Nijenhuis,
    Averaging,
    Centroid,
}

#[derive(Args, Debug)]
pub struct TwistArgs {
    #[arg(long)]
    pub algebra: PathBuf,
    #[arg(long, value_enum)]
    pub kind: TwistKind,
    /// First operator (`α′` for yau, `φ` for centroid).
    #[arg(long)]
    pub op: PathBuf,
    /// Second operator (`β′` for yau, `ψ` for centroid).
    #[arg(long)]
    pub op2: Option<PathBuf>,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub k: i32,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub l: i32,
    /// Also write the result to this file.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OperatorKind {
    RotaBaxter,
    Nijenhuis,
    Averaging,
    Centroid,
}

#[derive(Args, Debug)]
pub struct OperatorArgs {
    #[arg(long)]
    pub algebra: PathBuf,
    #[arg(long, value_enum)]
    pub kind: OperatorKind,
    #[arg(long, required_unless_present = "search")]
    pub op: Option<PathBuf>,
    /// Enumerate every operator of this kind (finite fields, n ≤ 3).
    #[arg(long, conflicts_with = "op")]
    pub search: bool,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub k: i32,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub l: i32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BracketKindArg {
    Lb,
    Lr,
    Lie,
}

#[derive(Args, Debug)]
pub struct BracketArgs {
    #[arg(long, required_unless_present = "bracket")]
    pub algebra: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = BracketKindArg::Lb)]
    pub kind: BracketKindArg,
    /// Check a `lie` or `leibniz` file directly.
    #[arg(long, conflicts_with = "algebra")]
    pub bracket: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CohomologyArgs {
    #[arg(long)]
    pub algebra: PathBuf,
    /// Module file; without it, the module of this dimension with identity maps.
    #[arg(long)]
    pub module: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub trivial: usize,
    /// Check this cochain pair.
    #[arg(long)]
    pub cochains: Option<PathBuf>,
    /// Decide whether the extensions by `--cochains` and this pair are equivalent.
    #[arg(long, requires = "cochains")]
    pub against: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum CorpusCommand {
    /// Entry ids with dimensions and parameters.
    List,
    /// Checks every entry and prints the full report.
    Verify {
        #[arg(long, default_value = "default")]
        profile: String,
    },
    /// One entry in the dialgebra text format.
    Export {
        id: String,
        #[arg(long, default_value = "default")]
        profile: String,
        /// Parameter override, `name=value`.
        #[arg(long = "param")]
        params: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.render(&cli));
            ExitCode::from(if out.pass { 0 } else { 1 })
        }
        Err(commands::Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(commands::Failure::Violation(out)) => {
            print!("{}", out.render(&cli));
            ExitCode::from(1)
        }
    }
}

impl Outcome {
    fn render(&self, cli: &Cli) -> String {
        // exports are files first
        let raw = self.command == "corpus export" && !cli.json;
        if cli.text || raw {
            self.text.clone()
        } else {
            let mut v = serde_json::json!({
                "schema_version": dialgebra::corpus::REPORT_SCHEMA,
                "command": self.command,
                "field": cli.field.name(),
                "pass": self.pass,
            });
            if let (Some(obj), serde_json::Value::Object(extra)) = (v.as_object_mut(), &self.json) {
                for (k, val) in extra {
                    obj.entry(k.clone()).or_insert_with(|| val.clone());
                }
            }
            let mut s = serde_json::to_string_pretty(&v).expect("json");
            s.push('\n');
            s
        }
    }
}
