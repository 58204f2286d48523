use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use pencilcount::genus1::Method;
use pencilcount::verify::Suite;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodArg {
    Schubert,
    Laurent,
    Polynomial,
    Series,
    All,
}

impl MethodArg {
    pub fn methods(self) -> Vec<Method> {
        match self {
            MethodArg::Schubert => vec![Method::Schubert],
            MethodArg::Laurent => vec![Method::Laurent],
            MethodArg::Polynomial => vec![Method::Polynomial],
            MethodArg::Series => vec![Method::Series],
            MethodArg::All => Method::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteArg {
    All,
    Schubert,
    Laurent,
    Duality,
    Recursion,
    Degeneration,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Schubert => Suite::Schubert,
            SuiteArg::Laurent => Suite::Laurent,
            SuiteArg::Duality => Suite::Duality,
            SuiteArg::Recursion => Suite::Recursion,
            SuiteArg::Degeneration => Suite::Degeneration,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "pencilcount",
    version,
    about = "Exact counts of pencils with prescribed ramification"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads for table and verify.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Degree-d covers of P^1 by P^1 with ramification at general points.
    Genus0 {
        #[arg(long)]
        degree: i64,
        #[arg(long, value_delimiter = ',', required = true)]
        ram: Vec<i64>,
    },
    /// Pencils on an elliptic curve: one fixed and three moving points.
    Genus1 {
        #[arg(long, value_delimiter = ',', required = true)]
        ram: Vec<i64>,
        /// Checked against the degree implied by the orders.
        #[arg(long)]
        degree: Option<i64>,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
    },
    /// Weighted genus-1 count.
    Weighted {
        #[arg(long, value_delimiter = ',', required = true)]
        ram: Vec<i64>,
        /// Require vanishing exactly (0, d1) at the fixed point.
        #[arg(long)]
        fixed_first: bool,
    },
    /// General curve of genus g via degeneration.
    Genusg(GenusG),
    /// Every on-shell tuple of one degree with its count.
    Table {
        #[arg(long)]
        genus: i64,
        #[arg(long)]
        degree: i64,
        /// Emit every permutation instead of one row per sorted tuple.
        #[arg(long)]
        ordered: bool,
    },
    /// Run the invariant suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 7)]
        max_degree: i64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct GenusG {
    #[arg(long)]
    pub genus: i64,
    #[arg(long)]
    pub degree: i64,
    #[arg(long, value_delimiter = ',')]
    pub fixed: Vec<i64>,
    #[arg(long, value_delimiter = ',')]
    pub moving: Vec<i64>,
    #[arg(long)]
    pub weighted: bool,
}

/// Flattened description of one invocation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Query {
    pub subcommand: String,
    pub genus: Option<i64>,
    pub degree: Option<i64>,
    pub fixed: Vec<i64>,
    pub moving: Vec<i64>,
    pub method: Option<MethodArg>,
    pub format: Format,
    pub weighted: bool,
    pub fixed_first: bool,
    pub ordered: bool,
    pub suite: Option<SuiteArg>,
    pub max_degree: Option<i64>,
}

impl Query {
    fn blank(subcommand: &str, format: Format) -> Self {
        Self {
            subcommand: subcommand.to_string(),
            genus: None,
            degree: None,
            fixed: Vec::new(),
            moving: Vec::new(),
            method: None,
            format,
            weighted: false,
            fixed_first: false,
            ordered: false,
            suite: None,
            max_degree: None,
        }
    }

    /// Genus-1 orders split as the fixed point followed by the moving ones.
    fn split_ram(ram: &[i64]) -> (Vec<i64>, Vec<i64>) {
        match ram.split_first() {
            Some((first, rest)) => (vec![*first], rest.to_vec()),
            None => (Vec::new(), Vec::new()),
        }
    }

    pub fn from_command(command: &Command, format: Format) -> Self {
        match command {
            Command::Genus0 { degree, ram } => Self {
                genus: Some(0),
                degree: Some(*degree),
                fixed: ram.clone(),
                ..Self::blank("genus0", format)
            },
            Command::Genus1 {
                ram,
                degree,
                method,
            } => {
                let (fixed, moving) = Self::split_ram(ram);
                Self {
                    genus: Some(1),
                    degree: *degree,
                    fixed,
                    moving,
                    method: Some(*method),
                    ..Self::blank("genus1", format)
                }
            }
            Command::Weighted { ram, fixed_first } => {
                let (fixed, moving) = Self::split_ram(ram);
                Self {
                    genus: Some(1),
                    fixed,
                    moving,
                    fixed_first: *fixed_first,
                    ..Self::blank("weighted", format)
                }
            }
            Command::Genusg(g) => Self {
                genus: Some(g.genus),
                degree: Some(g.degree),
                fixed: g.fixed.clone(),
                moving: g.moving.clone(),
                weighted: g.weighted,
                ..Self::blank("genusg", format)
            },
            Command::Table {
                genus,
                degree,
                ordered,
            } => Self {
                genus: Some(*genus),
                degree: Some(*degree),
                ordered: *ordered,
                ..Self::blank("table", format)
            },
            Command::Verify { suite, max_degree } => Self {
                suite: Some(*suite),
                max_degree: Some(*max_degree),
                ..Self::blank("verify", format)
            },
        }
    }

    /// The genus-1 orders `(d1, d2, d3, d4)`.
    pub fn ram(&self) -> Vec<i64> {
        self.fixed.iter().chain(&self.moving).copied().collect()
    }

    /// Command-line arguments (without the program name) reproducing this query.
    pub fn to_args(&self) -> Vec<String> {
        let mut args = vec![self.subcommand.clone()];
        let mut push = |flag: &str, value: String| {
            args.push(format!("--{flag}"));
            args.push(value);
        };
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        match self.subcommand.as_str() {
            "genus0" => {
                push("degree", self.degree.unwrap_or_default().to_string());
                push("ram", join(&self.fixed));
            }
            "genus1" | "weighted" => {
                push("ram", join(&self.ram()));
                if let Some(d) = self.degree {
                    push("degree", d.to_string());
                }
                if let Some(m) = self.method {
                    push("method", value_name(m));
                }
            }
            "genusg" => {
                push("genus", self.genus.unwrap_or_default().to_string());
                push("degree", self.degree.unwrap_or_default().to_string());
                if !self.fixed.is_empty() {
                    push("fixed", join(&self.fixed));
                }
                if !self.moving.is_empty() {
                    push("moving", join(&self.moving));
                }
            }
            "table" => {
                push("genus", self.genus.unwrap_or_default().to_string());
                push("degree", self.degree.unwrap_or_default().to_string());
            }
            "verify" => {
                if let Some(s) = self.suite {
                    push("suite", value_name(s));
                }
                if let Some(d) = self.max_degree {
                    push("max-degree", d.to_string());
                }
            }
            _ => {}
        }
        push("format", value_name(self.format));
        for (on, flag) in [
            (self.weighted, "--weighted"),
            (self.fixed_first, "--fixed-first"),
            (self.ordered, "--ordered"),
        ] {
            if on {
                args.push(flag.to_string());
            }
        }
        args
    }
}

fn value_name<T: ValueEnum>(v: T) -> String {
    v.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}
