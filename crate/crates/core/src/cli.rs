//! The `trimatrix` command line.
//!
//! Exit codes: 0 on success or a confirmed property, 1 on a refuted
//! property, 2 on usage or input errors. `-` reads a file argument from
//! standard input.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::Path;

use clap::{Parser, Subcommand};

use crate::catalog;
use crate::complex::{vertex_star, Triangulation, VertexLabel};
use crate::cycles::{classify_realization, MAX_ORACLE_N};
use crate::error::Error;
use crate::intersection::{
    extend_to_simplicial, intersection_matrix, is_intersection_preserving, ExtensionResult,
    IntersectionMatrix, TriangleBijection,
};
use crate::reconstruct::{reconstruct_with, ReconstructOptions, DEFAULT_NODE_LIMIT};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "trimatrix",
    version,
    about = "Intersection matrices of closed-surface triangulations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the intersection matrix of a `.tri` file as `.imat`.
    Matrix { input: String },
    /// Rebuild a triangulation from an `.imat` file.
    Reconstruct {
        input: String,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        node_limit: u64,
    },
    /// Decide whether a triangle bijection preserves intersections.
    CheckMap {
        source: String,
        target: String,
        /// File (or `-`) holding one line of image indices, or the indices inline.
        bijection: String,
    },
    /// Try to extend a triangle bijection to a simplicial isomorphism.
    Extend {
        source: String,
        target: String,
        bijection: String,
    },
    /// Classify the star of a vertex as a cycle realization.
    ClassifyLink {
        input: String,
        #[arg(long)]
        vertex: String,
    },
    /// Enumerate all n-cycle realizations up to `--max-n` and check the three-type list.
    VerifyLemma {
        #[arg(long, default_value_t = MAX_ORACLE_N)]
        max_n: usize,
    },
    /// Run every corpus check.
    VerifyCorpus {
        #[arg(long, default_value_t = MAX_ORACLE_N)]
        max_n: usize,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
    },
    /// Print a catalog entry as `.tri`.
    Gen {
        #[arg(long)]
        name: String,
    },
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Io<'_> {
    fn read_source(&mut self, arg: &str) -> Result<String, String> {
        if arg == "-" {
            if self.stdin_used {
                return Err("standard input can only be read once".into());
            }
            self.stdin_used = true;
            let mut text = String::new();
            self.stdin
                .read_to_string(&mut text)
                .map_err(|e| format!("reading standard input: {e}"))?;
            return Ok(text);
        }
        std::fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))
    }

    fn triangulation(&mut self, arg: &str) -> Result<Triangulation, String> {
        let text = self.read_source(arg)?;
        Triangulation::parse(&text).map_err(|e| format!("{arg}: {e}"))
    }

    fn bijection(&mut self, arg: &str) -> Result<TriangleBijection, String> {
        let text = if arg == "-" || Path::new(arg).exists() {
            self.read_source(arg)?
        } else {
            arg.to_string()
        };
        TriangleBijection::parse(&text).map_err(|e| format!("bijection {arg}: {e}"))
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let mut io = Io {
        stdin,
        stdin_used: false,
    };
    match execute(cli.command, &mut io) {
        Ok((code, text)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, io: &mut Io<'_>) -> Result<(i32, String), String> {
    let err = |e: Error| e.to_string();
    match command {
        Command::Matrix { input } => {
            let k = io.triangulation(&input)?;
            Ok((EXIT_OK, intersection_matrix(&k).to_imat_string()))
        }
        Command::Reconstruct { input, node_limit } => {
            let text = io.read_source(&input)?;
            let m = IntersectionMatrix::parse(&text).map_err(|e| format!("{input}: {e}"))?;
            let r = reconstruct_with(&m, ReconstructOptions { node_limit }).map_err(err)?;
            let mut text = r.complex.to_tri_string();
            text.push_str(&format!(
                "# ambiguity: {} (solutions: {}, all isomorphic: {})\n",
                r.ambiguity, r.solution_count, r.all_solutions_isomorphic
            ));
            Ok((EXIT_OK, text))
        }
        Command::CheckMap {
            source,
            target,
            bijection,
        } => {
            let k = io.triangulation(&source)?;
            let k2 = io.triangulation(&target)?;
            let f = io.bijection(&bijection)?;
            if is_intersection_preserving(&k, &k2, &f).map_err(err)? {
                Ok((EXIT_OK, "yes\n".into()))
            } else {
                Ok((EXIT_REFUTED, "no\n".into()))
            }
        }
        Command::Extend {
            source,
            target,
            bijection,
        } => {
            let k = io.triangulation(&source)?;
            let k2 = io.triangulation(&target)?;
            let f = io.bijection(&bijection)?;
            match extend_to_simplicial(&k, &k2, &f).map_err(err)? {
                ExtensionResult::Extended(map) => {
                    let mut text = String::from("Extended\n");
                    for (x, y) in map {
                        text.push_str(&format!("{x} -> {y}\n"));
                    }
                    Ok((EXIT_OK, text))
                }
                ExtensionResult::NonExtendable(x) => {
                    Ok((EXIT_REFUTED, format!("NonExtendable {x}\n")))
                }
            }
        }
        Command::ClassifyLink { input, vertex } => {
            let k = io.triangulation(&input)?;
            let v = VertexLabel::new(vertex).map_err(err)?;
            let star = vertex_star(&k, &v).map_err(err)?;
            let triangles: Vec<_> = star.iter().map(|&i| k.triangles()[i].clone()).collect();
            match classify_realization(&triangles) {
                Ok(class) => Ok((EXIT_OK, format!("{class}\n"))),
                Err(e @ Error::UnclassifiedRealization(_)) => Ok((EXIT_REFUTED, format!("{e}\n"))),
                Err(e) => Err(e.to_string()),
            }
        }
        Command::VerifyLemma { max_n } => {
            if !(3..=MAX_ORACLE_N).contains(&max_n) {
                return Err(Error::CycleLength(max_n, "3 <= n <= 8").to_string());
            }
            let rows = verify::lemma_table(max_n).map_err(err)?;
            let holds = rows
                .iter()
                .all(|r| r.trichotomy_holds && r.classifier_agrees);
            let code = if holds { EXIT_OK } else { EXIT_REFUTED };
            Ok((code, verify::render_lemma_table(&rows)))
        }
        Command::VerifyCorpus { max_n, seed } => {
            if !(3..=MAX_ORACLE_N).contains(&max_n) {
                return Err(Error::CycleLength(max_n, "3 <= n <= 8").to_string());
            }
            let checks = verify::run_corpus(max_n, seed);
            let mut text = String::new();
            for c in &checks {
                text.push_str(&c.to_string());
                text.push('\n');
            }
            let passed = checks.iter().filter(|c| c.passed).count();
            text.push_str(&format!("{passed}/{} checks passed\n", checks.len()));
            let code = if passed == checks.len() {
                EXIT_OK
            } else {
                EXIT_REFUTED
            };
            Ok((code, text))
        }
        Command::Gen { name } => {
            let k = catalog::standard(&name)
                .map_err(|e| format!("{e}; known: {}", catalog::names().join(", ")))?;
            Ok((EXIT_OK, k.to_tri_string()))
        }
    }
}
