//! Command-line front end for the loop braid library.
//!
//! Words are quoted single arguments over the tokens `s<i>`, `s<i>^-1`,
//! `r<i>`, `t<i>`, separated by spaces; `1` is the empty word. Boolean
//! commands print `true` or `false` on the first line and exit 0 for true,
//! 1 for false. Structured commands print one JSON document. Parse and
//! index errors exit 2 with a one-line diagnostic naming the bad token.

use clap::{Parser, Subcommand};
use loopbraid::{
    check_certificate, closure_invariants, random_word, relation_suite, search_witness, BraidWord,
    SearchConfig, Verdict,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::process;

#[derive(Parser)]
#[command(
    name = "loopbraid",
    version,
    about = "Exact extended loop braid calculations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether two words are the same group element.
    Eq {
        /// Number of strands.
        #[arg(short)]
        n: usize,
        w1: String,
        w2: String,
    },
    /// Closure invariants of a closable word, as JSON.
    Invariants {
        #[arg(short)]
        n: usize,
        word: String,
    },
    /// Whether the word's closure has even wen count on every component.
    Closable {
        #[arg(short)]
        n: usize,
        word: String,
    },
    /// Refute conjugacy by class functions or search for a conjugating
    /// witness up to the given radius.
    Conj {
        #[arg(short)]
        n: usize,
        /// Maximum conjugator letter length to search.
        #[arg(long)]
        radius: usize,
        /// Cap on distinct search states before giving up.
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
        w1: String,
        w2: String,
    },
    /// Re-verify a claimed conjugator: does gamma w1 gamma^-1 equal w2?
    Certify {
        #[arg(short)]
        n: usize,
        w1: String,
        w2: String,
        gamma: String,
    },
    /// Factor a word as an ascending wen prefix times a wen-free tail.
    Nf {
        #[arg(short)]
        n: usize,
        word: String,
    },
    /// Replay every defining relation through the free-group action.
    Selftest {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Emit a reproducible pseudorandom word.
    Random {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        len: usize,
        #[arg(long)]
        seed: u64,
    },
}

fn parse_word(n: usize, text: &str) -> Result<BraidWord, i32> {
    BraidWord::parse(n, text).map_err(|e| {
        eprintln!("error: {e}");
        2
    })
}

fn bool_line(value: bool) -> i32 {
    println!("{value}");
    if value {
        0
    } else {
        1
    }
}

fn run() -> i32 {
    let cli = Cli::parse();
    match cli.command {
        Command::Eq { n, w1, w2 } => {
            let (a, b) = match (parse_word(n, &w1), parse_word(n, &w2)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(code), _) | (_, Err(code)) => return code,
            };
            bool_line(a.equivalent(&b))
        }
        Command::Invariants { n, word } => {
            let w = match parse_word(n, &word) {
                Ok(w) => w,
                Err(code) => return code,
            };
            match closure_invariants(&w) {
                Ok(inv) => {
                    println!(
                        "{}",
                        serde_json::to_string(&inv).expect("invariants serialize")
                    );
                    0
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    2
                }
            }
        }
        Command::Closable { n, word } => match parse_word(n, &word) {
            Ok(w) => bool_line(loopbraid::is_closable(&w)),
            Err(code) => code,
        },
        Command::Conj {
            n,
            radius,
            budget,
            w1,
            w2,
        } => {
            let (a, b) = match (parse_word(n, &w1), parse_word(n, &w2)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(code), _) | (_, Err(code)) => return code,
            };
            let cfg = SearchConfig {
                radius,
                node_budget: budget,
            };
            let verdict = search_witness(&a, &b, &cfg);
            println!(
                "{}",
                serde_json::to_string(&verdict.export()).expect("verdict serializes")
            );
            match verdict {
                Verdict::Conjugate { .. } => 0,
                Verdict::Distinguished(_) => 1,
                Verdict::Unknown { .. } => 3,
            }
        }
        Command::Certify { n, w1, w2, gamma } => {
            let (a, b, g) = match (
                parse_word(n, &w1),
                parse_word(n, &w2),
                parse_word(n, &gamma),
            ) {
                (Ok(a), Ok(b), Ok(g)) => (a, b, g),
                (Err(code), _, _) | (_, Err(code), _) | (_, _, Err(code)) => return code,
            };
            bool_line(check_certificate(&a, &b, &g))
        }
        Command::Nf { n, word } => {
            let w = match parse_word(n, &word) {
                Ok(w) => w,
                Err(code) => return code,
            };
            let (prefix, alpha) = w.tau_normal_form();
            println!(
                "{}",
                serde_json::json!({
                    "pi_tau": prefix.to_string(),
                    "alpha": alpha.to_string(),
                })
            );
            0
        }
        Command::Selftest { max_n } => {
            if max_n == 0 {
                eprintln!("error: --max-n must be at least 1");
                return 2;
            }
            let mut ok = true;
            for n in 1..=max_n {
                let report = relation_suite(n);
                if report.all_pass() {
                    println!("n={n}: {} relation checks, all pass", report.checks.len());
                } else {
                    ok = false;
                    println!("{report}");
                }
            }
            if ok {
                0
            } else {
                1
            }
        }
        Command::Random { n, len, seed } => {
            if n == 0 {
                eprintln!("error: at least one strand is required");
                return 2;
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let word = random_word(n, len, &mut rng);
            println!("{word}");
            println!(
                "{}",
                serde_json::json!({
                    "n": n,
                    "len": len,
                    "seed": seed,
                    "word": word.to_string(),
                })
            );
            0
        }
    }
}

fn main() {
    process::exit(run());
}
