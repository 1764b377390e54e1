//! Command-line interface: build posets, derive their ideals and
//! complexes, print Betti tables, run structural checks, and drive the
//! verification suites.

use clap::{Args, Parser, Subcommand, ValueEnum};
use posetal::complex::{facet_complex, stanley_reisner, SimplicialComplex};
use posetal::homology::reduced_homology;
use posetal::ideal::{ld_ideal, path_ideal, SquarefreeIdeal};
use posetal::invariants::{
    is_sequentially_cm, is_simplicial_forest, is_simplicial_tree, HochsterEngine,
};
use posetal::linalg::FieldSpec;
use posetal::poset::{LabeledPoset, Poset, PosetJson};
use posetal::verify::{self, ReportSet, TheoremId, VerifyReport};
use serde::Serialize;
use std::error::Error;
use std::fs;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "posetal",
    version,
    about = "Exact path-ideal and chain-ideal computations for finite posets"
)]
struct Cli {
    /// Coefficient field: gf<p> for a prime field or qq for the rationals.
    #[arg(long, global = true, default_value = "gf32003")]
    field: FieldSpec,

    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for the verification driver (0 uses all cores).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct or inspect a poset.
    Poset {
        #[command(subcommand)]
        verb: PosetVerb,
    },
    /// Build ideals from a poset, or decompose one.
    Ideal {
        #[command(subcommand)]
        verb: IdealVerb,
    },
    /// Simplicial complexes attached to an ideal, and their homology.
    Complex {
        #[command(subcommand)]
        verb: ComplexVerb,
    },
    /// Graded Betti table of the quotient by an ideal.
    Betti {
        #[command(flatten)]
        source: IdealSource,
        /// Print the table as CSV rows i,j,value.
        #[arg(long)]
        csv: bool,
    },
    /// Structural checks on an ideal.
    Check {
        #[command(subcommand)]
        verb: CheckVerb,
    },
    /// Recompute closed-form statements by brute force and compare.
    Verify {
        /// Theorem ids to check, or "all".
        #[arg(default_value = "all")]
        ids: Vec<String>,
    },
}

#[derive(Subcommand)]
enum PosetVerb {
    /// Print a poset as JSON.
    Build {
        #[command(flatten)]
        source: PosetSource,
    },
    /// Print a human-readable summary of a poset.
    Show {
        #[command(flatten)]
        source: PosetSource,
    },
}

#[derive(Subcommand)]
enum IdealVerb {
    /// Path ideal generated by saturated chains of --t vertices.
    Path {
        #[command(flatten)]
        poset: PosetSource,
        /// Number of vertices in each saturated chain.
        #[arg(long)]
        t: usize,
    },
    /// Chain ideal in the arc variables of the labeled poset.
    Ld {
        #[command(flatten)]
        poset: PosetSource,
    },
    /// Primary decomposition into minimal variable primes.
    Decompose {
        #[command(flatten)]
        source: IdealSource,
    },
}

#[derive(Subcommand)]
enum ComplexVerb {
    /// Stanley-Reisner complex of the ideal.
    Sr {
        #[command(flatten)]
        source: IdealSource,
    },
    /// Facet complex generated by the ideal's generator supports.
    Facet {
        #[command(flatten)]
        source: IdealSource,
    },
    /// Reduced homology of the Stanley-Reisner complex.
    Homology {
        #[command(flatten)]
        source: IdealSource,
        /// Use the facet complex instead.
        #[arg(long)]
        facet: bool,
    },
}

#[derive(Subcommand)]
enum CheckVerb {
    /// Is the facet complex a simplicial forest (and a tree)?
    Forest {
        #[command(flatten)]
        source: IdealSource,
    },
    /// Is the quotient Cohen-Macaulay over the chosen field?
    Cm {
        #[command(flatten)]
        source: IdealSource,
    },
    /// Is the quotient sequentially Cohen-Macaulay over the chosen field?
    Seqcm {
        #[command(flatten)]
        source: IdealSource,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Chain,
    Antichain,
    Cycle,
    Diamond,
    Grid,
}

#[derive(Args)]
struct PosetSource {
    /// JSON input file, or "-" for standard input.
    #[arg(long, conflicts_with = "family")]
    input: Option<String>,

    /// Built-in family instead of a file.
    #[arg(long, value_enum)]
    family: Option<Family>,

    /// Size parameter for chain, antichain, diamond, and grid.
    #[arg(long)]
    n: Option<usize>,

    /// First chain length of a cycle.
    #[arg(long)]
    m: Option<usize>,

    /// Second chain length of a cycle.
    #[arg(long)]
    r: Option<usize>,
}

impl PosetSource {
    fn resolve(&self) -> Result<Poset, Box<dyn Error>> {
        Ok(self.resolve_labeled()?.poset().clone())
    }

    fn resolve_labeled(&self) -> Result<LabeledPoset, Box<dyn Error>> {
        if let Some(path) = &self.input {
            let json: PosetJson = serde_json::from_str(&read_input(path)?)?;
            return Ok(LabeledPoset::with_lex_labels(Poset::from_json(&json)?));
        }
        let family = self
            .family
            .ok_or("pass --family or --input to choose a poset")?;
        let n = || self.n.ok_or("this family needs --n");
        Ok(match family {
            Family::Chain => LabeledPoset::with_lex_labels(Poset::chain(n()?)?),
            Family::Antichain => LabeledPoset::with_lex_labels(Poset::antichain(n()?)?),
            Family::Cycle => {
                let m = self.m.ok_or("cycle needs --m")?;
                let r = self.r.ok_or("cycle needs --r")?;
                LabeledPoset::with_lex_labels(Poset::cycle(m, r)?)
            }
            Family::Diamond => LabeledPoset::diamond(n()?)?,
            Family::Grid => LabeledPoset::grid(n()?)?,
        })
    }
}

#[derive(Args)]
struct IdealSource {
    #[command(flatten)]
    poset: PosetSource,

    /// Build the path ideal for saturated chains of this many vertices.
    #[arg(long)]
    t: Option<usize>,

    /// Build the chain ideal of the labeled poset.
    #[arg(long, conflicts_with = "t")]
    ld: bool,
}

impl IdealSource {
    fn resolve(&self) -> Result<SquarefreeIdeal, Box<dyn Error>> {
        if self.ld {
            return Ok(ld_ideal(&self.poset.resolve_labeled()?)?);
        }
        if let Some(t) = self.t {
            return Ok(path_ideal(&self.poset.resolve()?, t)?);
        }
        if let Some(path) = &self.poset.input {
            let json = serde_json::from_str(&read_input(path)?)?;
            return Ok(SquarefreeIdeal::from_json(&json)?);
        }
        Err(
            "pass --t T or --ld to build an ideal from the poset source, \
             or --input with a serialized ideal"
                .into(),
        )
    }
}

fn read_input(path: &str) -> Result<String, Box<dyn Error>> {
    if path == "-" {
        Ok(std::io::read_to_string(std::io::stdin())?)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Box<dyn Error>> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn show_poset(poset: &Poset) {
    println!("poset on {} elements", poset.n_elements());
    let covers: Vec<String> = poset
        .covers()
        .iter()
        .map(|&(a, b)| format!("{} < {}", poset.label(a), poset.label(b)))
        .collect();
    println!(
        "covers: {}",
        if covers.is_empty() {
            "none".into()
        } else {
            covers.join(", ")
        }
    );
    println!("graded: {}", poset.is_graded());
    println!("forest: {}", poset.is_forest_poset());
    let chains = poset.maximal_chains();
    println!("maximal chains ({}):", chains.len());
    for c in chains {
        println!("  {c}");
    }
}

fn show_complex(label: &str, ideal: &SquarefreeIdeal, complex: &SimplicialComplex) {
    let dim = complex.dim().map_or("void".to_string(), |d| d.to_string());
    println!("{label} on {} vertices, dim {dim}", complex.n_vertices());
    println!("facets ({}):", complex.facets().len());
    for &f in complex.facets() {
        println!("  {{{}}}", join_names(ideal, f));
    }
    println!("f-vector: {:?}", complex.f_vector());
}

fn join_names(ideal: &SquarefreeIdeal, mask: u64) -> String {
    if mask == 0 {
        return String::new();
    }
    posetal::poset::bits(mask)
        .map(|v| ideal.var_names()[v].as_str())
        .collect::<Vec<_>>()
        .join(",")
}

fn print_reports(reports: &[VerifyReport]) {
    for r in reports {
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!(
            "{:<20} {}  {:>3} cases  {:>7} ms",
            r.theorem,
            status,
            r.cases.len(),
            r.wall_ms
        );
        for c in r.cases.iter().filter(|c| !c.pass) {
            println!(
                "    {}: expected {}, computed {}",
                c.label, c.expected, c.computed
            );
        }
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    if failed == 0 {
        println!("all {} suites passed", reports.len());
    } else {
        println!("{failed} of {} suites failed", reports.len());
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Box<dyn Error>> {
    let field = cli.field;
    match &cli.command {
        Command::Poset { verb } => match verb {
            PosetVerb::Build { source } => print_json(&source.resolve()?.to_json())?,
            PosetVerb::Show { source } => {
                let poset = source.resolve()?;
                if cli.json {
                    print_json(&poset.to_json())?;
                } else {
                    show_poset(&poset);
                }
            }
        },
        Command::Ideal { verb } => match verb {
            IdealVerb::Path { poset, t } => {
                let ideal = path_ideal(&poset.resolve()?, *t)?;
                if cli.json {
                    print_json(&ideal.to_json())?;
                } else {
                    println!("{ideal}");
                }
            }
            IdealVerb::Ld { poset } => {
                let ideal = ld_ideal(&poset.resolve_labeled()?)?;
                if cli.json {
                    print_json(&ideal.to_json())?;
                } else {
                    println!("{ideal}");
                }
            }
            IdealVerb::Decompose { source } => {
                let ideal = source.resolve()?;
                let components = ideal.primary_decomposition()?;
                if cli.json {
                    let sets: Vec<Vec<usize>> = components
                        .iter()
                        .map(|&c| posetal::poset::bits(c).map(|v| v + 1).collect())
                        .collect();
                    print_json(&sets)?;
                } else {
                    println!("{} minimal primes:", components.len());
                    for &c in &components {
                        println!("  ({})", join_names(&ideal, c));
                    }
                }
            }
        },
        Command::Complex { verb } => match verb {
            ComplexVerb::Sr { source } => {
                let ideal = source.resolve()?;
                let complex = stanley_reisner(&ideal);
                if cli.json {
                    print_json(&complex.to_json())?;
                } else {
                    show_complex("Stanley-Reisner complex", &ideal, &complex);
                }
            }
            ComplexVerb::Facet { source } => {
                let ideal = source.resolve()?;
                let complex = facet_complex(&ideal)?;
                if cli.json {
                    print_json(&complex.to_json())?;
                } else {
                    show_complex("facet complex", &ideal, &complex);
                }
            }
            ComplexVerb::Homology { source, facet } => {
                let ideal = source.resolve()?;
                let complex = if *facet {
                    facet_complex(&ideal)?
                } else {
                    stanley_reisner(&ideal)
                };
                let profile = reduced_homology(&complex, field);
                if cli.json {
                    print_json(&profile.to_json())?;
                } else {
                    println!("reduced homology over {field}: {profile}");
                }
            }
        },
        Command::Betti { source, csv } => {
            let ideal = source.resolve()?;
            let table = HochsterEngine::new(field).betti_table(&ideal);
            if cli.json {
                print_json(&table.to_json())?;
            } else if *csv {
                print!("{}", table.to_csv());
            } else {
                println!("{table}");
            }
        }
        Command::Check { verb } => {
            #[derive(Serialize)]
            struct CheckOut {
                check: &'static str,
                field: String,
                verdict: bool,
                tree: Option<bool>,
            }
            let (name, source) = match verb {
                CheckVerb::Forest { source } => ("forest", source),
                CheckVerb::Cm { source } => ("cm", source),
                CheckVerb::Seqcm { source } => ("seqcm", source),
            };
            let ideal = source.resolve()?;
            let (verdict, tree) = match verb {
                CheckVerb::Forest { .. } => {
                    let complex = facet_complex(&ideal)?;
                    (
                        is_simplicial_forest(&complex),
                        Some(is_simplicial_tree(&complex)),
                    )
                }
                CheckVerb::Cm { .. } => {
                    (HochsterEngine::new(field).is_cohen_macaulay(&ideal), None)
                }
                CheckVerb::Seqcm { .. } => (is_sequentially_cm(&ideal, field), None),
            };
            if cli.json {
                print_json(&CheckOut {
                    check: name,
                    field: field.to_string(),
                    verdict,
                    tree,
                })?;
            } else {
                match verb {
                    CheckVerb::Forest { .. } => {
                        println!("simplicial forest: {verdict}");
                        println!("simplicial tree: {}", tree.unwrap());
                    }
                    CheckVerb::Cm { .. } => println!("cohen-macaulay over {field}: {verdict}"),
                    CheckVerb::Seqcm { .. } => {
                        println!("sequentially cohen-macaulay over {field}: {verdict}")
                    }
                }
            }
        }
        Command::Verify { ids } => {
            let reports = if ids.iter().any(|s| s == "all") {
                verify::run_all(field)
            } else {
                let theorems: Vec<TheoremId> = ids
                    .iter()
                    .map(|s| s.parse::<TheoremId>())
                    .collect::<Result<_, _>>()?;
                theorems.iter().map(|&t| verify::run(t, field)).collect()
            };
            let all_passed = reports.iter().all(|r| r.passed);
            if cli.json {
                print_json(&ReportSet::new(field, reports))?;
            } else {
                print_reports(&reports);
            }
            if !all_passed {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
