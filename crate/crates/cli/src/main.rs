use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;
use zeckendorf_core::oracle::{certify, CertifyConfig};
use zeckendorf_core::solver::render_tree;
use zeckendorf_core::{
    decode, density, encode, solve_block, solve_positional, tree, DigitBlock, Execution, TreeNode, ZeckError,
};

#[derive(Parser, Debug)]
#[command(
    name = "zeck",
    version,
    about = "Zeckendorf expansions and the closed forms of their digit-block classes",
    long_about = "Zeckendorf expansions and the closed forms of their digit-block classes.\n\n\
Digit blocks are written most significant digit first, as on the Fibonacci tree: \
\"100\" means w2 w1 w0 = 1 0 0, i.e. the expansion ends in ...100. Blocks containing \"11\" are rejected.",
    allow_negative_numbers = true
)]
struct Cli {
    /// Output format.
    #[arg(long, short, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tsv,
    /// One JSON record per line.
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Zeckendorf digits of N.
    Encode {
        #[arg(value_parser = parse_nat)]
        n: BigUint,
    },
    /// Value of a Zeckendorf digit string (MSB first, leading zeros allowed).
    Decode { digits: String },
    /// Numbers whose expansion ends with the block W.
    Block {
        #[arg(value_parser = parse_block)]
        w: DigitBlock,
        #[arg(long, default_value_t = 10)]
        terms: u64,
    },
    /// Numbers whose expansion has the block W at digit position K.
    Position {
        #[arg(value_parser = parse_block)]
        w: DigitBlock,
        k: usize,
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
    /// Exact density of the block W at position K.
    Density {
        #[arg(value_parser = parse_block)]
        w: DigitBlock,
        #[arg(default_value_t = 0)]
        k: usize,
    },
    /// The Fibonacci tree of blocks down to length D.
    Tree { depth: usize },
    /// Check every closed form against brute-force enumeration.
    Verify {
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        #[arg(long, default_value_t = 200)]
        terms: usize,
        #[arg(long, default_value_t = 100_000)]
        bound: u64,
        /// Run single-threaded.
        #[arg(long)]
        sequential: bool,
    },
}

fn parse_nat(s: &str) -> Result<BigUint, String> {
    s.parse::<BigUint>().map_err(|_| format!("{s:?} is not a natural number"))
}

fn parse_block(s: &str) -> Result<DigitBlock, String> {
    let w: DigitBlock = s.parse().map_err(|e: ZeckError| e.to_string())?;
    if w.is_empty() {
        return Err("digit block must be non-empty".into());
    }
    Ok(w)
}

/// Outcome of a command: 0 ok, 1 verification failed, 2 bad input.
enum Outcome {
    Ok,
    Failed,
    Invalid(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Outcome::Ok => ExitCode::SUCCESS,
        Outcome::Failed => ExitCode::from(1),
        Outcome::Invalid(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn run(cli: &Cli) -> Outcome {
    let fmt = cli.format;
    match &cli.command {
        Command::Encode { n } => {
            let z = encode(n);
            match fmt {
                Format::Json => println!("{}", json!({ "n": n.to_string(), "zeckendorf": z.to_string() })),
                _ => println!("{z}"),
            }
        }
        Command::Decode { digits } => {
            let n = match decode(digits) {
                Ok(n) => n,
                Err(e) => return Outcome::Invalid(e.to_string()),
            };
            match fmt {
                Format::Json => println!("{}", json!({ "zeckendorf": digits, "n": n.to_string() })),
                _ => println!("{n}"),
            }
        }
        Command::Block { w, terms } => {
            let sol = match solve_block(w) {
                Ok(s) => s,
                Err(e) => return Outcome::Invalid(e.to_string()),
            };
            match fmt {
                Format::Text => {
                    let note = if sol.exceptional { "  (exceptional)" } else { "" };
                    println!("{}  {}  {}{note}", sol.word, sol.compound_label(), sol.gbs);
                    println!("terms: {}", join(&sol.terms(*terms)));
                }
                Format::Tsv => {
                    println!("# {}\t{}\t{}", sol.word, sol.compound_label(), sol.gbs);
                    println!("n\tR(n)");
                    for (i, v) in sol.terms(*terms).iter().enumerate() {
                        println!("{}\t{v}", i + 1);
                    }
                }
                Format::Json => println!("{}", serde_json::to_string(&sol.record(*terms)).expect("serializable")),
            }
        }
        Command::Position { w, k, terms } => {
            let set = match solve_positional(w, *k) {
                Ok(s) => s,
                Err(e) => return Outcome::Invalid(e.to_string()),
            };
            let merged = match set.enumerate(*terms) {
                Ok(m) => m,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Outcome::Failed;
                }
            };
            let branches: Vec<String> = set.branches().iter().map(|b| b.to_string()).collect();
            match fmt {
                Format::Text => {
                    println!("{w} at k={k}: {} branches", branches.len());
                    for b in &branches {
                        println!("  {b}");
                    }
                    println!("terms: {}", join(&merged));
                }
                Format::Tsv => {
                    println!("# {w}\t{k}\t{}", branches.join("\t"));
                    println!("n\tR(n)");
                    for (i, v) in merged.iter().enumerate() {
                        println!("{}\t{v}", i + 1);
                    }
                }
                Format::Json => {
                    let terms: Vec<String> = merged.iter().map(|v| v.to_string()).collect();
                    println!("{}", json!({ "word": w.to_string(), "k": k, "branches": branches, "terms": terms }));
                }
            }
        }
        Command::Density { w, k } => {
            let d = match density(w, *k) {
                Ok(d) => d,
                Err(e) => return Outcome::Invalid(e.to_string()),
            };
            match fmt {
                Format::Text => println!("{}·φ^{} = {} ≈ {:.10}", d.coeff, d.exponent, d.value, d.value.to_f64()),
                Format::Tsv => {
                    println!("coeff\texponent\ta\tb\tdecimal");
                    let r = d.record();
                    println!("{}\t{}\t{}\t{}\t{}", r.coeff, r.exponent, r.a, r.b, r.decimal);
                }
                Format::Json => {
                    let mut v = serde_json::to_value(d.record()).expect("serializable");
                    v["word"] = json!(w.to_string());
                    v["k"] = json!(k);
                    println!("{v}");
                }
            }
        }
        Command::Tree { depth } => {
            let root = match tree(*depth) {
                Ok(t) => t,
                Err(e) => return Outcome::Invalid(e.to_string()),
            };
            match fmt {
                Format::Text => print!("{}", render_tree(&root)),
                Format::Tsv => {
                    println!("depth\tword\tcompound\tgbs");
                    print_tree_rows(&root, &mut |s| {
                        println!("{}\t{}\t{}\t{}", s.word.len(), s.word, s.compound_label(), s.gbs)
                    });
                }
                Format::Json => print_tree_rows(&root, &mut |s| {
                    println!("{}", serde_json::to_string(&s.record(0)).expect("serializable"))
                }),
            }
        }
        Command::Verify { depth, k_max, terms, bound, sequential } => {
            let config = CertifyConfig {
                depth: *depth,
                k_max: *k_max,
                n_terms: *terms,
                bound: *bound,
                execution: if *sequential { Execution::Sequential } else { Execution::default() },
                ..CertifyConfig::default()
            };
            let report = certify(&config);
            match fmt {
                Format::Text => println!("{report}"),
                Format::Tsv => {
                    println!("check\tparams\tstatus");
                    for c in &report.checks {
                        println!("{}\t{}\t{:?}", c.name, c.params, c.status);
                    }
                }
                Format::Json => {
                    for c in &report.checks {
                        println!("{}", serde_json::to_string(c).expect("serializable"));
                    }
                    println!("{}", json!({ "passed": report.passed, "failed": report.failed }));
                }
            }
            if !report.is_success() {
                return Outcome::Failed;
            }
        }
    }
    Outcome::Ok
}

fn print_tree_rows(node: &TreeNode, emit: &mut dyn FnMut(&zeckendorf_core::BlockSolution)) {
    emit(&node.solution);
    for c in &node.children {
        print_tree_rows(c, emit);
    }
}
