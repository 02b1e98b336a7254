//! `cmgraph`: command-line front end. Every subcommand prints JSON on
//! standard output. Exit status is 0 on success, 1 when a yes/no check comes
//! out false, and 2 on usage or input errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cmgraph_core::complex::{parse_vertex_sets, DEFAULT_SHELLING_BUDGET};
use cmgraph_core::fixtures::{fixture_text, FIXTURE_NAMES};
use cmgraph_core::graph::{find_odd_hole, independence_number, is_perfect, is_unmixed, maximal_independent_sets};
use cmgraph_core::{
    basic_clique_cover, class_g_membership, cm_characteristic_profile, independence_complex, is_shellable,
    perfect_r_matchings, reduced_betti, FieldSpec, Graph, ShellingOutcome, SimplicialComplex, VertexSet,
};
use cmgraph_harness::report::{run_suite, Suite};
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(name = "cmgraph", version, about = "Cohen-Macaulay and cover deciders for small graphs")]
struct Cli {
    /// Indent JSON output for reading.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Edge-list file, or `-` for standard input.
    graph: PathBuf,
    /// Write the JSON result here instead of standard output.
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct Chars {
    /// Field characteristic: 0 or a prime. Repeatable.
    #[arg(long = "char", value_name = "P")]
    chars: Vec<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Cohen-Macaulayness of the edge ring, one report per characteristic.
    Cm {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        chars: Chars,
    },
    /// Whether all maximal independent sets have one size.
    Unmixed {
        #[command(flatten)]
        input: Input,
    },
    /// Whether neither the graph nor its complement has an odd hole.
    Perfect {
        #[command(flatten)]
        input: Input,
    },
    /// Shellability of the independence complex.
    Shellable {
        #[command(flatten)]
        input: Input,
        /// Read a facet list instead of an edge list.
        #[arg(long)]
        complex: bool,
        /// Cap on facet-order extensions tried.
        #[arg(long, default_value_t = DEFAULT_SHELLING_BUDGET)]
        budget: u64,
    },
    /// f-vector and reduced Betti numbers of the independence complex.
    Homology {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        chars: Chars,
        /// Read a facet list instead of an edge list.
        #[arg(long)]
        complex: bool,
    },
    /// Perfect r-matchings in lexicographic order.
    Matchings {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        r: u64,
        /// Stop after this many matchings.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Basic clique cover of a given clique cover, or of a minimum one.
    Cover {
        #[command(flatten)]
        input: Input,
        /// Clique list in facet-list format, used in file order.
        cover: Option<PathBuf>,
    },
    /// Membership in the class of graphs covered by α cliques.
    Classg {
        #[command(flatten)]
        input: Input,
    },
    /// Exhaustive theorem checks over enumerated graphs.
    Harness {
        suite: SuiteName,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        r: Option<u64>,
        /// Largest vertex count enumerated.
        #[arg(long)]
        n_max: Option<usize>,
        #[command(flatten)]
        chars: Chars,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        /// Line-delimited JSON report, one line per graph.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Writes a bundled graph.
    Fixtures {
        name: String,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    Main,
    ClassG,
    Parts,
    Bipartite,
    Implications,
    Converse,
}

#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            eprintln!("cmgraph: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn read_graph(input: &Input) -> Result<Graph, Failure> {
    let text = read_input(&input.graph)?;
    Graph::parse(&text).map_err(|e| Failure(format!("{}: {e}", input.graph.display())))
}

fn read_complex(input: &Input, as_complex: bool) -> Result<SimplicialComplex, Failure> {
    if !as_complex {
        return Ok(independence_complex(&read_graph(input)?));
    }
    let text = read_input(&input.graph)?;
    SimplicialComplex::parse(&text).map_err(|e| Failure(format!("{}: {e}", input.graph.display())))
}

fn fields(chars: &Chars, default: &[u64]) -> Result<Vec<FieldSpec>, Failure> {
    let list = if chars.chars.is_empty() { default } else { &chars.chars };
    list.iter().map(|&p| FieldSpec::new(p).map_err(Failure::from)).collect()
}

fn render(value: &impl Serialize, pretty: bool) -> Result<String, Failure> {
    let mut s = if pretty { serde_json::to_string_pretty(value)? } else { serde_json::to_string(value)? };
    s.push('\n');
    Ok(s)
}

fn write_to(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn emit(value: &impl Serialize, pretty: bool, output: Option<&Path>) -> Result<(), Failure> {
    let text = render(value, pretty)?;
    match output {
        Some(path) => write_to(path, &text),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Outcome {
    let pretty = cli.pretty;
    match cli.command {
        Command::Cm { input, chars } => {
            let g = read_graph(&input)?;
            let profile = cm_characteristic_profile(&g, &fields(&chars, &[0, 2, 3])?);
            emit(&profile, pretty, input.output.as_deref())?;
            // false only if no requested characteristic gives CM
            Ok(verdict(profile.iter().any(|r| r.is_cm)))
        }
        Command::Unmixed { input } => {
            let g = read_graph(&input)?;
            let mut sizes: Vec<usize> = maximal_independent_sets(&g).iter().map(|s| s.len()).collect();
            sizes.sort_unstable();
            sizes.dedup();
            let unmixed = is_unmixed(&g);
            emit(&json!({"unmixed": unmixed, "maximal_independent_set_sizes": sizes}), pretty, input.output.as_deref())?;
            Ok(verdict(unmixed))
        }
        Command::Perfect { input } => {
            let g = read_graph(&input)?;
            let perfect = is_perfect(&g);
            let hole = find_odd_hole(&g);
            let antihole = find_odd_hole(&g.complement());
            emit(&json!({"perfect": perfect, "odd_hole": hole, "odd_antihole": antihole}), pretty, input.output.as_deref())?;
            Ok(verdict(perfect))
        }
        Command::Shellable { input, complex, budget } => {
            let c = read_complex(&input, complex)?;
            let outcome = if c.is_pure() { Some(is_shellable(&c, budget)?) } else { None };
            let value = match &outcome {
                Some(o) => {
                    let mut v = serde_json::to_value(o)?;
                    v["pure"] = json!(true);
                    v
                }
                None => json!({"status": "not_shellable", "pure": false}),
            };
            emit(&value, pretty, input.output.as_deref())?;
            Ok(verdict(!matches!(outcome, None | Some(ShellingOutcome::NotShellable))))
        }
        Command::Homology { input, chars, complex } => {
            let c = read_complex(&input, complex)?;
            let betti: Vec<_> = fields(&chars, &[0, 2, 3])?
                .into_iter()
                .map(|f| json!({"characteristic": f, "betti": reduced_betti(&c, f)}))
                .collect();
            let value = json!({"dimension": c.dimension(), "pure": c.is_pure(), "f_vector": c.f_vector(), "betti": betti});
            emit(&value, pretty, input.output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Matchings { input, r, limit } => {
            let g = read_graph(&input)?;
            let found = perfect_r_matchings(&g, r as usize, limit);
            let lists: Vec<&Vec<VertexSet>> = found.iter().map(|m| &m.cliques).collect();
            emit(&lists, pretty, input.output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Cover { input, cover } => {
            let g = read_graph(&input)?;
            let cliques = match cover {
                Some(path) => {
                    let (n, sets) = parse_vertex_sets(&read_input(&path)?)
                        .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
                    if n != g.n() {
                        return Err(Failure(format!(
                            "{}: cover is over {n} vertices but the graph has {}",
                            path.display(),
                            g.n()
                        )));
                    }
                    sets
                }
                None => match class_g_membership(&g) {
                    Some(c) => c.cliques().to_vec(),
                    None => {
                        emit(&json!({"cover": null, "basic": null}), pretty, input.output.as_deref())?;
                        return Ok(verdict(false));
                    }
                },
            };
            let basic = basic_clique_cover(&g, &cliques)?;
            let value = json!({"cover": cliques, "basic": basic.cliques, "dropped_empty": basic.dropped_empty});
            emit(&value, pretty, input.output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Classg { input } => {
            let g = read_graph(&input)?;
            let cover = class_g_membership(&g);
            let value = json!({"class_g": cover.is_some(), "alpha": independence_number(&g), "cover": cover});
            emit(&value, pretty, input.output.as_deref())?;
            Ok(verdict(cover.is_some()))
        }
        Command::Harness { suite, r, n_max, chars, jobs, output } => {
            let r = r.unwrap_or(2) as usize;
            let suite = match suite {
                SuiteName::Main => Suite::Main { r },
                SuiteName::ClassG => Suite::ClassG { r },
                SuiteName::Parts => Suite::Parts { r },
                SuiteName::Bipartite => Suite::Bipartite,
                SuiteName::Implications => Suite::Implications,
                SuiteName::Converse => Suite::Converse { r },
            };
            let n_max = n_max.unwrap_or(match suite {
                Suite::Implications => 7,
                Suite::Bipartite => 8,
                _ if r == 2 => 8,
                _ => 9,
            });
            let fields = fields(&chars, &[0, 2])?;
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Some(j) = jobs {
                pool = pool.num_threads(j);
            }
            let run = pool.build()?.install(|| run_suite(suite, n_max, &fields))?;
            if let Some(path) = output {
                let mut buf = Vec::new();
                run.write_jsonl(&mut buf)?;
                fs::write(&path, buf).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
            }
            emit(&run, pretty, None)?;
            Ok(verdict(run.all_hold()))
        }
        Command::Fixtures { name, output } => {
            let text = fixture_text(&name).ok_or_else(|| {
                Failure(format!("unknown fixture {name:?}; available: {}", FIXTURE_NAMES.join(", ")))
            })?;
            match output {
                Some(path) => {
                    write_to(&path, text)?;
                    emit(&json!({"fixture": name, "path": path}), pretty, None)?;
                }
                None => emit(&json!({"fixture": name, "edge_list": text}), pretty, None)?,
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
