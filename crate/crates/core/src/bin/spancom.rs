use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use spancom::edge_list;
use spancom::graph::{AttachmentShape, Graph, UnicyclicGraph};
use spancom::report::{closed_form_report, graph_report, to_json};
use spancom::trees::{count_spanning_trees_kirchhoff, enumerate_spanning_trees};
use spancom::verify::{verify_sweep, Fault, VerifyOptions};
use spancom::UnicyclicParams;

const EXIT_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(name = "spancom", version, about = "Spanning simplicial complexes of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the edge list of a uni-cyclic graph U_{n,m}
    Gen {
        #[command(flatten)]
        params: GenParams,
        /// Write to this file instead of stdout
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// List the spanning trees of a graph
    Trees {
        #[command(flatten)]
        source: Source,
        /// Print only the matrix-tree count
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// JSON summary: f-vector, h-vector, Hilbert series, shiftedness, shelling
    Report {
        #[command(flatten)]
        source: Source,
        /// Evaluate the U_{n,m} closed forms only (needs --n and --m)
        #[arg(long)]
        closed_form: bool,
        /// Accepted for symmetry; reports are always JSON
        #[arg(long)]
        json: bool,
    },
    /// Check every closed form against enumeration for 3 <= m <= n <= N_MAX
    Verify {
        #[arg(default_value_t = 9)]
        n_max: usize,
        #[arg(long, default_value_t = 12)]
        expand_to: usize,
        #[arg(long)]
        json: bool,
        #[arg(long, hide = true)]
        inject_fault: Option<Fault>,
    },
}

#[derive(Args)]
struct GenParams {
    #[arg(value_name = "N")]
    pos_n: Option<usize>,
    #[arg(value_name = "M")]
    pos_m: Option<usize>,
    #[arg(value_name = "ATTACHMENT")]
    pos_attachment: Option<AttachmentShape>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// chain, star or seed:K
    #[arg(long)]
    attachment: Option<AttachmentShape>,
}

#[derive(Args)]
struct Source {
    /// Edge-list file ("-" for stdin)
    #[arg(value_name = "PATH")]
    pos_input: Option<PathBuf>,
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    attachment: Option<AttachmentShape>,
}

struct Failure {
    code: u8,
    msg: String,
}

fn input_error(msg: impl ToString) -> Failure {
    Failure {
        code: EXIT_INPUT,
        msg: msg.to_string(),
    }
}

impl GenParams {
    fn resolve(&self) -> Result<(usize, usize, AttachmentShape), Failure> {
        let n = self.n.or(self.pos_n).ok_or_else(|| input_error("missing n"))?;
        let m = self.m.or(self.pos_m).ok_or_else(|| input_error("missing m"))?;
        let shape = self
            .attachment
            .or(self.pos_attachment)
            .unwrap_or(AttachmentShape::Chain);
        Ok((n, m, shape))
    }
}

impl Source {
    fn params(&self) -> Result<Option<(usize, usize)>, Failure> {
        match (self.n, self.m) {
            (Some(n), Some(m)) => Ok(Some((n, m))),
            (None, None) => Ok(None),
            _ => Err(input_error("--n and --m must be given together")),
        }
    }

    fn graph(&self) -> Result<Graph, Failure> {
        if let Some(path) = self.input.as_ref().or(self.pos_input.as_ref()) {
            let text = if path.as_os_str() == "-" {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s).map_err(input_error)?;
                s
            } else {
                fs::read_to_string(path)
                    .map_err(|e| input_error(format!("{}: {e}", path.display())))?
            };
            return edge_list::parse(&text).map_err(input_error);
        }
        match self.params()? {
            Some((n, m)) => {
                let shape = self.attachment.unwrap_or(AttachmentShape::Chain);
                UnicyclicGraph::with_shape(n, m, shape)
                    .map(UnicyclicGraph::into_base)
                    .map_err(input_error)
            }
            None => Err(input_error("give an edge-list file or --n and --m")),
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let mut stdout = io::stdout().lock();
    let mut emit = |s: &str| stdout.write_all(s.as_bytes()).map_err(input_error);
    match cli.command {
        Command::Gen { params, output } => {
            let (n, m, shape) = params.resolve()?;
            let u = UnicyclicGraph::with_shape(n, m, shape).map_err(input_error)?;
            let text = format!(
                "# U_{{{n},{m}}} attachment={}\n{}",
                shape.name(),
                edge_list::serialize(u.base())
            );
            match output {
                Some(path) => {
                    fs::write(&path, text)
                        .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
                    emit(&format!("n={n} m={m}\n"))?;
                }
                None => {
                    emit(&text)?;
                    eprintln!("n={n} m={m}");
                }
            }
        }
        Command::Trees {
            source,
            count_only,
            json,
        } => {
            let g = source.graph()?;
            if count_only {
                let count = count_spanning_trees_kirchhoff(&g).map_err(input_error)?;
                emit(&format!("{count}\n"))?;
            } else {
                let trees = enumerate_spanning_trees(&g).map_err(input_error)?;
                if json {
                    let doc = json!({ "count": trees.len(), "trees": trees.trees() });
                    emit(&to_json(&doc))?;
                } else {
                    for t in trees.trees() {
                        let labels: Vec<String> = t.iter().map(usize::to_string).collect();
                        emit(&format!("{}\n", labels.join(" ")))?;
                    }
                    emit(&format!("count: {}\n", trees.len()))?;
                }
            }
        }
        Command::Report {
            source,
            closed_form,
            json: _,
        } => {
            let doc = if closed_form {
                let (n, m) = source
                    .params()?
                    .ok_or_else(|| input_error("--closed-form needs --n and --m"))?;
                closed_form_report(UnicyclicParams::new(n, m).map_err(input_error)?)
            } else {
                graph_report(&source.graph()?).map_err(input_error)?
            };
            emit(&to_json(&doc))?;
        }
        Command::Verify {
            n_max,
            expand_to,
            json,
            inject_fault,
        } => {
            let opts = VerifyOptions {
                n_max,
                expand_to,
                fault: inject_fault,
                ..Default::default()
            };
            let reports = verify_sweep(&opts);
            let overall = reports.iter().all(|r| r.overall);
            if json {
                let doc = json!({ "overall": overall, "reports": reports });
                emit(&to_json(&doc))?;
            } else {
                for r in &reports {
                    let p = &r.params;
                    let failed: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
                    let status = if failed.is_empty() {
                        "ok".to_string()
                    } else {
                        format!("FAILED {}", failed.join(", "))
                    };
                    emit(&format!("U({},{}) {:<6} {}\n", p.n, p.m, p.shape, status))?;
                }
                let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
                emit(&format!(
                    "{} cells, {checks} checks: {}\n",
                    reports.len(),
                    if overall { "all passed" } else { "FAILURES" }
                ))?;
            }
            if !overall {
                return Err(Failure {
                    code: EXIT_FAILED,
                    msg: "verification failed".into(),
                });
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("spancom: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
