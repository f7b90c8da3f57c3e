use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use holant_core::eval::{holant, EvalOptions, MethodChoice, DEFAULT_BUDGET};
use holant_core::fingerprint::{classify, DEFAULT_BOUND};
use holant_core::hombasis::{
    dedekind_interpolate, hom_expansion, tensor_product, CatalogueCaps, HomExpansion,
};
use holant_core::reductions::{
    bridge_lift, build_codeword_instance, build_factor_instance, find_bridge_gadget,
    gen_regular_connected, hitting_set_holant, holant_to_vcsp, pad_gadget, pm_gadget_graph,
    pm_gadget_hyper, vcsp_to_holant, PmMode, DEFAULT_BRIDGE_SEARCH_EDGES,
};
use holant_core::{
    build_grid, canonical_form, eval::holant_bruteforce_with, Execution, HolantError, Signature,
    SignatureGrid,
};
use serde_json::{json, Value};
use thiserror::Error;

use crate::doc::{parse_instance, DocError, Instance, InstanceDocument};
use crate::examples;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Document(#[from] DocError),
    #[error("cannot read input: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Compute(#[from] HolantError),
}

impl CliError {
    /// 2 for budget and cap guards, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Compute(e) if e.is_guard() => 2,
            _ => 1,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Document(_) | CliError::Json(_) => "document",
            CliError::Io(_) => "io",
            CliError::Compute(e) if e.is_guard() => "guard",
            CliError::Compute(_) => "compute",
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "holant",
    version,
    about = "Exact evaluation and reductions for parameterised Holant problems"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone, Copy)]
pub struct Guards {
    /// Largest number of subsets (or search nodes) a brute-force step may visit.
    #[arg(long, env = "HOLANT_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Largest number of edges in enumerated pattern catalogues.
    #[arg(long, default_value_t = 4)]
    pub cap: usize,
}

impl Guards {
    fn caps(&self) -> CatalogueCaps {
        CatalogueCaps {
            max_edges: self.cap,
            ..CatalogueCaps::default()
        }
    }

    fn echo(&self) -> Value {
        json!({ "budget": self.budget, "cap": self.cap })
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MethodArg {
    Auto,
    Brute,
    Fpt,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum GadgetMode {
    /// Pad every edge of a uniform grid up to arity `d`.
    Pad,
    /// Replace edges by a searched bridge gadget of arity `d`.
    Bridge,
    /// Perfect matchings of the grid's graph, via its single signature.
    PmGraph,
    /// Perfect matchings of a uniform hypergraph grid; needs s(0) = 0.
    PmZeroSig,
    /// As above, for signatures with s(0) ≠ 0 and s(1) = s(2) = 0.
    PmSizeForced,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum GenerateMode {
    /// A connected `b`-regular `d`-uniform hypergraph.
    Regular,
    /// The smallest bridge gadget of arity `d`.
    Bridge,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate Holant(Ω, k) for a grid or VCSP document.
    Eval {
        /// Document path; `-` or omitted reads standard input.
        input: Option<PathBuf>,
        /// Number of chosen edges; overrides the document's `k`.
        #[arg(long)]
        k: Option<usize>,
        /// `auto` classifies first; `fpt` needs a T1 signature set.
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Largest fingerprint index examined by the classifier.
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
        #[command(flatten)]
        guards: Guards,
    },
    /// Classify a signature set (or the signatures used by a grid).
    Classify {
        /// Document path; `-` or omitted reads standard input.
        input: Option<PathBuf>,
        /// Largest fingerprint index examined by the classifier.
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// Homomorphism-basis expansion of Holant(·, k) for a signature set.
    Expand {
        /// Document path; `-` or omitted reads standard input.
        input: Option<PathBuf>,
        /// Number of chosen edges.
        #[arg(long)]
        k: usize,
        /// Arity of the target hypergraphs.
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[command(flatten)]
        guards: Guards,
    },
    /// Recover X ↦ Holant(G ⊗ X, k) as a combination of homomorphism counts.
    Interpolate {
        /// Document path; `-` or omitted reads standard input.
        input: Option<PathBuf>,
        /// Number of chosen edges; overrides the document's `k`.
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        guards: Guards,
    },
    /// Translate between document kinds: vcsp ↔ grid, hypergraph → hitting-set
    /// (or factor) grid, matrix-mod-p → codeword grid.
    Translate {
        /// Document path; `-` or omitted reads standard input.
        input: Option<PathBuf>,
        /// Number of chosen edges; overrides the document's `k`.
        #[arg(long)]
        k: Option<usize>,
        /// Degree set for a factor instance, e.g. `0,1`.
        #[arg(long, value_delimiter = ',')]
        degrees: Option<Vec<usize>>,
    },
    /// Apply a gadget to a grid and emit its certificate.
    Gadget {
        /// Document path; `-` or omitted reads standard input.
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        mode: GadgetMode,
        /// Target arity for `pad` and `bridge`.
        #[arg(long)]
        d: Option<usize>,
        /// Number of chosen edges; overrides the document's `k`.
        #[arg(long)]
        k: Option<usize>,
        /// Check the certificate by brute force.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        guards: Guards,
    },
    /// Generate regular connected hypergraphs or bridge gadgets.
    Generate {
        #[arg(long, value_enum)]
        mode: GenerateMode,
        /// Edge arity.
        #[arg(long)]
        d: usize,
        /// Vertex degree of the regular construction.
        #[arg(long, default_value_t = 1)]
        b: usize,
        /// Size index of the regular construction.
        #[arg(long, default_value_t = 2)]
        size: usize,
        /// Edge bound for the bridge search.
        #[arg(long, default_value_t = DEFAULT_BRIDGE_SEARCH_EDGES)]
        cap: usize,
    },
    /// Print a built-in example document, or all of them keyed by name.
    Examples { name: Option<String> },
}

fn read_input(path: &Option<PathBuf>) -> Result<String, CliError> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => text = std::fs::read_to_string(p)?,
        _ => {
            std::io::stdin().read_to_string(&mut text)?;
        }
    }
    Ok(text)
}

/// One document, or a JSON array of documents answered by an array of results.
fn for_each_document<F>(text: &str, mut f: F) -> Result<Value, CliError>
where
    F: FnMut(InstanceDocument) -> Result<Value, CliError>,
{
    if text.trim_start().starts_with('[') {
        let items: Vec<Value> = serde_json::from_str(text)?;
        let out = items
            .into_iter()
            .map(|v| {
                InstanceDocument::from_value(v)
                    .map_err(CliError::from)
                    .and_then(&mut f)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Value::Array(out))
    } else {
        f(parse_instance(text)?)
    }
}

fn want_k(flag: Option<usize>, doc: Option<usize>) -> Result<usize, CliError> {
    flag.or(doc)
        .ok_or_else(|| CliError::Usage("no k given: pass --k or put `k` in the document".into()))
}

fn grid_of(doc: &InstanceDocument, k: Option<usize>) -> Result<(SignatureGrid, usize), CliError> {
    match &doc.instance {
        Instance::Grid(g) => Ok((g.clone(), want_k(k, doc.k)?)),
        Instance::Vcsp(v) => {
            let (g, vk) = vcsp_to_holant(v)?;
            Ok((g, k.unwrap_or(vk)))
        }
        other => Err(CliError::Usage(format!(
            "expected a grid or vcsp document, got {:?}",
            other.kind()
        ))),
    }
}

fn palette_of(doc: &InstanceDocument) -> Result<Vec<Signature>, CliError> {
    match &doc.instance {
        Instance::Signatures(s) => Ok(s.clone()),
        Instance::Grid(g) => Ok(g
            .used_signatures()
            .into_iter()
            .map(|i| g.palette()[i].clone())
            .collect()),
        other => Err(CliError::Usage(format!(
            "expected a signatures or grid document, got {:?}",
            other.kind()
        ))),
    }
}

fn expansion_json(e: &HomExpansion) -> Result<Value, CliError> {
    let terms = e
        .terms
        .iter()
        .map(|(f, c)| Ok(json!({ "pattern": canonical_form(f)?.to_string(), "coefficient": c })))
        .collect::<Result<Vec<_>, HolantError>>()?;
    Ok(json!({ "k": e.k, "rank": e.rank, "terms": terms }))
}

/// `Holant(G ⊗ X, k)`, with `(u, x)` carrying the signature of `u`.
fn tensor_oracle(
    grid: &SignatureGrid,
    k: usize,
    budget: u64,
    x: &holant_core::Hypergraph,
) -> holant_core::Result<holant_core::ExactScalar> {
    let product = tensor_product(&grid.graph().clone().without_colours(), x)?;
    let nx = x.n();
    let assignment = (0..product.n())
        .map(|v| grid.assignment()[v / nx.max(1)])
        .collect();
    let g = build_grid(product, grid.palette().to_vec(), assignment)?;
    Ok(holant_bruteforce_with(&g, k, budget, Execution::Parallel)?.value)
}

fn single_signature(grid: &SignatureGrid) -> Result<Signature, CliError> {
    match grid.used_signatures().as_slice() {
        [i] => Ok(grid.palette()[*i].clone()),
        _ => Err(CliError::Usage(
            "this gadget needs a grid with exactly one signature in use".into(),
        )),
    }
}

/// Runs a parsed command; `stdin_text` stands in for standard input when given.
pub fn run(cli: Cli, stdin_text: Option<&str>) -> Result<Value, CliError> {
    let input = |path: &Option<PathBuf>| -> Result<String, CliError> {
        match (path, stdin_text) {
            (None, Some(t)) => Ok(t.to_string()),
            _ => read_input(path),
        }
    };
    match cli.command {
        Command::Eval {
            input: path,
            k,
            method,
            bound,
            guards,
        } => {
            let text = input(&path)?;
            let choice = match method {
                MethodArg::Auto => MethodChoice::Auto,
                MethodArg::Brute => MethodChoice::Brute,
                MethodArg::Fpt => MethodChoice::Fpt,
            };
            let opts = EvalOptions {
                budget: guards.budget,
                bound,
                ..EvalOptions::default()
            };
            for_each_document(&text, |doc| {
                let (grid, k) = grid_of(&doc, k)?;
                log::info!(
                    "evaluating k = {k} on {} vertices, {} edges",
                    grid.n(),
                    grid.graph().num_edges()
                );
                let r = holant(&grid, k, choice, &opts)?;
                let mut out = serde_json::to_value(&r)?;
                out["k"] = json!(k);
                out["guards"] = json!({ "budget": guards.budget, "bound": bound });
                Ok(out)
            })
        }
        Command::Classify { input: path, bound } => {
            let text = input(&path)?;
            for_each_document(&text, |doc| {
                let t = classify(&palette_of(&doc)?, bound)?;
                Ok(serde_json::to_value(&t)?)
            })
        }
        Command::Expand {
            input: path,
            k,
            d,
            guards,
        } => {
            let text = input(&path)?;
            for_each_document(&text, |doc| {
                let e = hom_expansion(k, &palette_of(&doc)?, d, &guards.caps())?;
                let mut out = expansion_json(&e)?;
                out["guards"] = guards.echo();
                Ok(out)
            })
        }
        Command::Interpolate {
            input: path,
            k,
            guards,
        } => {
            let text = input(&path)?;
            for_each_document(&text, |doc| {
                let (grid, k) = grid_of(&doc, k)?;
                if !grid.is_simple() {
                    return Err(CliError::Usage(
                        "interpolation needs a grid without repeated edges".into(),
                    ));
                }
                let r = grid
                    .uniformity()
                    .ok_or_else(|| CliError::Usage("interpolation needs a uniform grid".into()))?;
                let e = dedekind_interpolate(
                    |x| tensor_oracle(&grid, k, guards.budget, x),
                    k,
                    r,
                    &guards.caps(),
                )?;
                let mut out = expansion_json(&e)?;
                out["guards"] = guards.echo();
                Ok(out)
            })
        }
        Command::Translate {
            input: path,
            k,
            degrees,
        } => {
            let text = input(&path)?;
            for_each_document(&text, |doc| {
                let translated = match (&doc.instance, &degrees) {
                    (Instance::Vcsp(v), _) => {
                        let (g, vk) = vcsp_to_holant(v)?;
                        InstanceDocument::new(Instance::Grid(g), Some(k.unwrap_or(vk)))
                    }
                    (Instance::Grid(g), _) => {
                        let kk = k.or(doc.k).unwrap_or(0);
                        InstanceDocument::new(Instance::Vcsp(holant_to_vcsp(g, kk)), None)
                    }
                    (Instance::Hypergraph(h), Some(ds)) => {
                        let (g, kk) = build_factor_instance(h, ds, want_k(k, doc.k)?)?;
                        InstanceDocument::new(Instance::Grid(g), Some(kk))
                    }
                    (Instance::Hypergraph(h), None) => {
                        let red = hitting_set_holant(h, want_k(k, doc.k)?)?;
                        InstanceDocument::new(Instance::Grid(red.grid), Some(red.k))
                    }
                    (Instance::MatrixModP(m), _) => {
                        let (g, kk) = build_codeword_instance(m, want_k(k, doc.k)?)?;
                        InstanceDocument::new(Instance::Grid(g), Some(kk))
                    }
                    (Instance::Signatures(_), _) => {
                        return Err(CliError::Usage("signature sets have no translation".into()));
                    }
                };
                Ok(translated.to_value())
            })
        }
        Command::Gadget {
            input: path,
            mode,
            d,
            k,
            verify,
            guards,
        } => {
            let text = input(&path)?;
            for_each_document(&text, |doc| {
                let Instance::Grid(grid) = &doc.instance else {
                    return Err(CliError::Usage("gadgets apply to grid documents".into()));
                };
                let need_d = || d.ok_or_else(|| CliError::Usage("this mode needs --d".into()));
                let mut out = match mode {
                    GadgetMode::Pad | GadgetMode::Bridge => {
                        let k = want_k(k, doc.k)?;
                        let cert = match mode {
                            GadgetMode::Pad => pad_gadget(grid, k, need_d()?)?,
                            _ => bridge_lift(
                                grid,
                                k,
                                &find_bridge_gadget(need_d()?, DEFAULT_BRIDGE_SEARCH_EDGES)?,
                            )?,
                        };
                        let mut v = serde_json::to_value(&cert)?;
                        if verify {
                            v["verification"] = serde_json::to_value(cert.verify(guards.budget)?)?;
                        }
                        v
                    }
                    _ => {
                        let s = single_signature(grid)?;
                        let cert = match mode {
                            GadgetMode::PmGraph => pm_gadget_graph(grid.graph(), &s)?,
                            GadgetMode::PmZeroSig => {
                                pm_gadget_hyper(grid.graph(), &s, PmMode::ZeroSig)?
                            }
                            _ => pm_gadget_hyper(grid.graph(), &s, PmMode::SizeForced)?,
                        };
                        let mut v = serde_json::to_value(&cert)?;
                        if verify {
                            v["verification"] = serde_json::to_value(cert.verify(guards.budget)?)?;
                        }
                        v
                    }
                };
                out["guards"] = guards.echo();
                Ok(out)
            })
        }
        Command::Generate {
            mode,
            d,
            b,
            size,
            cap,
        } => {
            let h = match mode {
                GenerateMode::Regular => gen_regular_connected(d, b, size)?,
                GenerateMode::Bridge => find_bridge_gadget(d, cap)?.graph,
            };
            Ok(InstanceDocument::new(Instance::Hypergraph(h), None).to_value())
        }
        Command::Examples { name } => match name {
            Some(n) => examples::example(&n).map(|d| d.to_value()).ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown example `{n}`; known: {}",
                    examples::NAMES.join(", ")
                ))
            }),
            None => {
                let all: serde_json::Map<String, Value> = examples::NAMES
                    .iter()
                    .map(|n| {
                        (
                            n.to_string(),
                            examples::example(n).expect("listed example").to_value(),
                        )
                    })
                    .collect();
                Ok(Value::Object(all))
            }
        },
    }
}

/// Outcome of one invocation: exit code plus the text for each stream.
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` and runs the command. Usage errors exit with 1, guard
/// violations with 2.
pub fn execute<I, T>(args: I, stdin_text: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: e.to_string(),
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: e.to_string(),
                },
            };
        }
    };
    match run(cli, stdin_text) {
        Ok(v) => Outcome {
            code: 0,
            stdout: format!("{}\n", serde_json::to_string_pretty(&v).expect("json")),
            stderr: String::new(),
        },
        Err(e) => {
            let body = json!({ "error": { "kind": e.kind(), "message": e.to_string() } });
            Outcome {
                code: e.exit_code(),
                stdout: format!("{body}\n"),
                stderr: format!("error: {e}\n"),
            }
        }
    }
}
