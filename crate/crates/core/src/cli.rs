//! `treesep` command-line front end. Exit codes: 0 for success or a true
//! verdict, 1 for a false verdict, 2 for errors, 3 when a search bound is
//! exhausted.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use treesep::bottomup::{minimize, Dbta};
use treesep::grammar::CnfGrammar;
use treesep::obfuscation::{kop_nta, obf_alphabet};
use treesep::rotation::{comb_dfa, extract_separator, find_rotation_term, Extraction, RotationSearch};
use treesep::trees::{encode_xml, enumerate_trees, parse_term, parse_tree};
use treesep::walking::{dfs_from_dfa, format_trace, to_dbta, Dtwa, Outcome};
use treesep::words::{format_word, random_dfa, verify_separator, Dfa};
use treesep::{RankedAlphabet, Symbol};

#[derive(Parser, Debug)]
#[command(name = "treesep", version, about = "Tree automata and regular separators")]
struct Cli {
    /// Write the main output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Sexpr,
    Xml,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a walking automaton on a tree; exit 0 iff it accepts.
    Run {
        dtwa: PathBuf,
        tree: PathBuf,
        /// Print every visited configuration.
        #[arg(long)]
        trace: bool,
    },
    /// Bottom-up automaton for the obfuscation of a grammar.
    Kop { grammar: PathBuf },
    /// Depth-first-search walking automaton reading the leaf word with a DFA.
    Dfs {
        dfa: PathBuf,
        /// Ranked alphabet of the trees, e.g. "a/2 c/0 p/0 q/0". Defaults to
        /// the DFA letters plus a/2 and c/0.
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Convert a walking automaton to a bottom-up automaton.
    ToDbta {
        dtwa: PathBuf,
        /// Minimize the result.
        #[arg(long)]
        minimize: bool,
    },
    /// Minimize a bottom-up automaton.
    Minimize { dbta: PathBuf },
    /// Search for a rotation term; exit 3 if none is found within the bound.
    FindRotation {
        dbta: PathBuf,
        #[arg(long, default_value_t = 9, value_parser = positive)]
        bound: usize,
    },
    /// Word automaton reading combs of a binary term.
    CombDfa {
        dbta: PathBuf,
        /// Binary term over a and c, e.g. "a(*,*)".
        #[arg(long)]
        term: String,
        /// Word letters, comma or space separated. Defaults to the leaf
        /// letters of the automaton other than c.
        #[arg(long)]
        letters: Option<String>,
    },
    /// Check that a DFA separates two grammars; exit 0 iff it does.
    Verify { dfa: PathBuf, g: PathBuf, h: PathBuf },
    /// Extract and verify a word separator from a walking automaton.
    Extract {
        dtwa: PathBuf,
        g: PathBuf,
        h: PathBuf,
        #[arg(long, default_value_t = 9, value_parser = positive)]
        bound: usize,
    },
    /// Print a tree as an s-expression or in its XML encoding.
    Encode {
        tree: PathBuf,
        #[arg(long, value_enum, default_value = "xml")]
        format: Format,
    },
    /// List all trees over an alphabet up to a size.
    Enumerate {
        #[arg(long)]
        alphabet: String,
        #[arg(long, value_parser = positive)]
        max_size: usize,
    },
    /// Seeded random DFA.
    RandomDfa {
        #[arg(long, value_parser = positive)]
        states: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value = "p q")]
        letters: String,
    },
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(format!("`{s}` is not a positive integer")),
    }
}

fn read<T>(path: &Path) -> Result<T>
where
    T: FromStr<Err = treesep::Error>,
{
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    text.parse().with_context(|| format!("{}", path.display()))
}

fn letters(list: &str) -> Vec<Symbol> {
    list.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(Symbol::new)
        .collect()
}

/// Output text and exit status of a command.
struct Reply {
    text: String,
    code: u8,
}

impl Reply {
    fn ok(text: impl Into<String>) -> Self {
        Reply { text: text.into(), code: 0 }
    }

    fn verdict(text: impl Into<String>, holds: bool) -> Self {
        Reply {
            text: text.into(),
            code: if holds { 0 } else { 1 },
        }
    }
}

fn execute(command: Command) -> Result<Reply> {
    Ok(match command {
        Command::Run { dtwa, tree, trace } => {
            let w: Dtwa = read(&dtwa)?;
            let src = fs::read_to_string(&tree).with_context(|| format!("cannot read {}", tree.display()))?;
            let t = parse_tree(&src).with_context(|| format!("{}", tree.display()))?;
            let (outcome, steps) = w.run_traced(&t)?;
            let mut text = format!("{} after {} steps\n", outcome.outcome, outcome.steps);
            if trace {
                text.push_str(&format_trace(&w, &steps));
            }
            Reply::verdict(text, outcome.outcome == Outcome::Accept)
        }
        Command::Kop { grammar } => {
            let g: CnfGrammar = read(&grammar)?;
            Reply::ok(kop_nta(&g)?.to_string())
        }
        Command::Dfs { dfa, alphabet } => {
            let k: Dfa = read(&dfa)?;
            let sigma = match alphabet {
                Some(s) => s.parse::<RankedAlphabet>()?,
                None => obf_alphabet(k.alphabet())?,
            };
            Reply::ok(dfs_from_dfa(&k, &sigma)?.to_string())
        }
        Command::ToDbta { dtwa, minimize: min } => {
            let w: Dtwa = read(&dtwa)?;
            let d = to_dbta(&w);
            Reply::ok(if min { minimize(&d) } else { d }.to_string())
        }
        Command::Minimize { dbta } => {
            let a: Dbta = read(&dbta)?;
            Reply::ok(minimize(&a).to_string())
        }
        Command::FindRotation { dbta, bound } => {
            let a: Dbta = read(&dbta)?;
            match find_rotation_term(&a, bound)? {
                RotationSearch::Found(w) => Reply::ok(format!(
                    "term: {}\nsize: {}\nfingerprint: {}\n",
                    w.term, w.found_at_size, w.fingerprint
                )),
                RotationSearch::Exhausted { bound } => Reply {
                    text: format!("no rotation term with at most {bound} nodes\n"),
                    code: 3,
                },
            }
        }
        Command::CombDfa { dbta, term, letters: chosen } => {
            let a: Dbta = read(&dbta)?;
            let t = parse_term(&term).context("--term")?;
            let gamma = match chosen {
                Some(s) => letters(&s),
                None => a.alphabet().leaf_letters().filter(|x| x.as_str() != "c").cloned().collect(),
            };
            Reply::ok(comb_dfa(&a, &t, &gamma)?.to_string())
        }
        Command::Verify { dfa, g, h } => {
            let k: Dfa = read(&dfa)?;
            let (g, h): (CnfGrammar, CnfGrammar) = (read(&g)?, read(&h)?);
            let r = verify_separator(&k, &g, &h)?;
            let mut text = format!("separates: {}\n", r.separates);
            if let Some(w) = &r.violation_g {
                text.push_str(&format!("rejected word of G: {}\n", format_word(w)));
            }
            if let Some(w) = &r.violation_h {
                text.push_str(&format!("accepted word of H: {}\n", format_word(w)));
            }
            Reply::verdict(text, r.separates)
        }
        Command::Extract { dtwa, g, h, bound } => {
            let w: Dtwa = read(&dtwa)?;
            let (g, h): (CnfGrammar, CnfGrammar) = (read(&g)?, read(&h)?);
            let e = extract_separator(&w, &g, &h, bound)?;
            let code = match &e {
                Extraction::Done(r) if r.verified() => 0,
                Extraction::Done(_) => 1,
                Extraction::Exhausted { .. } => 3,
            };
            Reply {
                text: e.to_json() + "\n",
                code,
            }
        }
        Command::Encode { tree, format } => {
            let src = fs::read_to_string(&tree).with_context(|| format!("cannot read {}", tree.display()))?;
            let t = parse_tree(&src).with_context(|| format!("{}", tree.display()))?;
            Reply::ok(match format {
                Format::Xml => encode_xml(&t),
                Format::Sexpr => t.to_string(),
            } + "\n")
        }
        Command::Enumerate { alphabet, max_size } => {
            let sigma: RankedAlphabet = alphabet.parse()?;
            let mut text = String::new();
            for t in enumerate_trees(&sigma, max_size) {
                text.push_str(&format!("{t}\n"));
            }
            Reply::ok(text)
        }
        Command::RandomDfa { states, seed, letters: chosen } => {
            let gamma = letters(&chosen);
            if gamma.is_empty() {
                bail!("--letters is empty");
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Reply::ok(random_dfa(&mut rng, states, &gamma).to_string())
        }
    })
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = execute(cli.command).and_then(|reply| {
        match &cli.out {
            Some(path) => fs::write(path, &reply.text).with_context(|| format!("cannot write {}", path.display()))?,
            None => print!("{}", reply.text),
        }
        Ok(reply.code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
