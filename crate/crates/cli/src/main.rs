//! `sexpand` — S-expansions of Lie algebras by finite abelian semigroups.
//!
//! Exit codes: 0 success, 1 domain error (non-associative input, failed
//! lookups, ...), 2 usage error.

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use sexpand_core::survey::{read_csv_rows, write_csv_header, write_csv_row, SurveyReport};
use sexpand_core::*;

#[derive(Parser)]
#[command(
    name = "sexpand",
    version,
    about = "S-expansions of Lie algebras by finite abelian semigroups"
)]
struct Cli {
    /// Worker threads for enumeration and surveys (default: all cores)
    #[arg(long, global = true, value_name = "K")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a multiplication table for associativity and commutativity
    Check {
        /// Table file (`order <n>` header plus n rows)
        file: PathBuf,
    },
    /// Print the zero element of a table, or `none`
    Zero { file: PathBuf },
    /// Print the selector boxes (the adjoint representation) of a table
    Selector { file: PathBuf },
    /// Find a relabeling carrying the first table onto the second
    Iso {
        file_a: PathBuf,
        file_b: PathBuf,
        /// Search for an anti-isomorphism instead
        #[arg(long)]
        anti: bool,
        /// Print every witness instead of the lexicographically first
        #[arg(long)]
        all: bool,
        /// Also print the inverse of each witness
        #[arg(long)]
        inverse: bool,
    },
    /// List all resonant decompositions S = S0 u S1 of a semigroup
    Resonances { file: PathBuf },
    /// Print the adjoint boxes of a Lie algebra
    Adjoint {
        /// Built-in name (sl2, sl2cw, solv2, so3, abelianN) or algebra file
        #[arg(long)]
        algebra: String,
    },
    /// Enumerate all non-equivalent semigroups of an order
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Keep only the commutative classes (ids preserved)
        #[arg(long)]
        commutative: bool,
        /// Quotient by isomorphism only, not by anti-isomorphism
        #[arg(long = "iso-only")]
        iso_only: bool,
        /// Output path (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Emit JSON instead of the text catalog format
        #[arg(long)]
        json: bool,
    },
    /// Expand an algebra by a semigroup; optionally extract the resonant
    /// subalgebra and/or the zero-element reduction
    Expand {
        /// Built-in name (sl2, sl2cw, solv2, so3, abelianN) or algebra file
        #[arg(long)]
        algebra: String,
        /// `<order>:<id>` (catalog entry), `se:N`, `sm:N`, or a table file
        #[arg(long)]
        semigroup: String,
        /// Resonant data, e.g. "S0=1 2 3,S1=1 4 5,V0=1,V1=2 3"
        #[arg(long)]
        resonance: Option<String>,
        /// Remove the zero-element sector
        #[arg(long)]
        reduce: bool,
        /// Comma-separated parts: commut, sc, metric, adjoint
        #[arg(long, default_value = "commut")]
        show: String,
        /// Catalog file to resolve `<order>:<id>` from (enumerated otherwise)
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Also write the effective constants and metric as JSON
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Census over all commutative semigroups of an order: dimension, exact
    /// Killing-Cartan determinant, eigenvalue signature and class flags
    Survey {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        order: usize,
        /// Comma-separated modes: full, res, red, resred
        #[arg(long, default_value = "full,res,red,resred")]
        modes: String,
        /// Graded split of the algebra, e.g. "V0=1,V1=2 3" (defaults exist
        /// for the built-ins)
        #[arg(long)]
        decomposition: Option<String>,
        /// CSV output path (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Continue an interrupted scan: completed ids in the output file
        /// are kept, the last (possibly partial) id is redone
        #[arg(long)]
        resume: bool,
        /// Catalog file for the order (enumerated otherwise)
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Also write rows and summary as JSON
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Eigenvalue signatures of the semigroup metric over a catalog order
    Profile {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

enum CliError {
    /// wrong invocation: exit 2
    Usage(String),
    /// domain failure: exit 1
    Domain(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

type CliResult<T = ()> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn main() -> ExitCode {
    // die quietly when the output pipe closes (e.g. `sexpand ... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        // a failure here only means a pool already exists
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global();
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Check { file } => {
            let t = load_table(&file)?;
            println!(
                "{}",
                if t.is_associative() {
                    "associative"
                } else {
                    "not associative"
                }
            );
            println!(
                "{}",
                if t.is_commutative() {
                    "commutative"
                } else {
                    "not commutative"
                }
            );
            Ok(())
        }
        Command::Zero { file } => {
            let t = load_table(&file)?;
            match t.find_zero() {
                Some(z) => println!("{z}"),
                None => println!("none"),
            }
            Ok(())
        }
        Command::Selector { file } => {
            let t = load_table(&file)?;
            print!("{}", t.selector().show());
            Ok(())
        }
        Command::Iso {
            file_a,
            file_b,
            anti,
            all,
            inverse,
        } => {
            let a = load_table(&file_a)?;
            let b = load_table(&file_b)?;
            let witnesses = match (anti, all) {
                (false, false) => find_isomorphism(&a, &b).into_iter().collect(),
                (false, true) => find_isomorphisms(&a, &b),
                (true, false) => find_anti_isomorphism(&a, &b).into_iter().collect(),
                (true, true) => find_anti_isomorphisms(&a, &b),
            };
            if witnesses.is_empty() {
                println!("none");
            } else {
                for w in witnesses {
                    println!("{w}");
                    if inverse {
                        println!("inverse: {}", w.inverse());
                    }
                }
            }
            Ok(())
        }
        Command::Resonances { file } => {
            let t = load_table(&file)?;
            if !t.is_associative() {
                return Err(CliError::Domain("table is not associative".into()));
            }
            let pairs = find_all_resonances(&t);
            for (k, p) in pairs.iter().enumerate() {
                println!("Resonance #{}", k + 1);
                println!("S0: {}", p.s0);
                println!("S1: {}", p.s1);
            }
            println!("{} resonances", pairs.len());
            Ok(())
        }
        Command::Adjoint { algebra } => {
            let g = load_algebra(&algebra)?;
            print!("{}", g.show_adjoint());
            Ok(())
        }
        Command::Enumerate {
            order,
            commutative,
            iso_only,
            output,
            json,
        } => {
            let equivalence = if iso_only {
                Equivalence::IsoOnly
            } else {
                Equivalence::IsoAndAnti
            };
            let mut cat = enumerate(order, equivalence)?;
            if commutative {
                cat = cat.filter_commutative();
            }
            let mut w = open_output(output.as_deref())?;
            if json {
                let value = catalog_json(&cat);
                writeln!(w, "{value:#}").map_err(|e| CliError::Domain(e.to_string()))?;
            } else {
                cat.write_to(&mut w)
                    .map_err(|e| CliError::Domain(e.to_string()))?;
            }
            w.flush().map_err(|e| CliError::Domain(e.to_string()))?;
            Ok(())
        }
        Command::Expand {
            algebra,
            semigroup,
            resonance,
            reduce,
            show,
            catalog,
            json,
        } => {
            let g = load_algebra(&algebra)?;
            let t = load_semigroup(&semigroup, catalog.as_deref())?;
            let mut e = expand(&g, &t)?;
            if let Some(spec) = &resonance {
                let fields = parse_assignments(spec)?;
                let pick = |key: &str| -> CliResult<&Vec<usize>> {
                    fields
                        .get(key)
                        .ok_or_else(|| usage(format!("--resonance needs `{key}=...`")))
                };
                let p = ResonantPair::new(
                    Subset::new(t.order(), pick("S0")?)?,
                    Subset::new(t.order(), pick("S1")?)?,
                )?;
                let d = SubspaceDecomposition::from_members(g.dim(), pick("V0")?, pick("V1")?)?;
                e = e.resonant_subalgebra(&p, &d)?;
            }
            if reduce {
                e = e.zero_reduce()?;
            }
            for part in show.split(',') {
                match part.trim() {
                    "commut" => print!("{}", e.render(RenderWhat::Commutators)),
                    "sc" => print!("{}", e.render(RenderWhat::Constants)),
                    "adjoint" => print!("{}", e.render(RenderWhat::AdjointBoxes)),
                    "metric" => {
                        let m = e.kc_metric()?;
                        println!(
                            "Killing-Cartan metric ({} mode, dim {}):",
                            e.mode(),
                            e.dim()
                        );
                        print!("{}", m.show());
                        println!("determinant: {}", format_rational(&m.determinant()));
                    }
                    other => return Err(usage(format!("unknown --show part `{other}`"))),
                }
            }
            if let Some(path) = json {
                let value = expansion_json(&e)?;
                fs::write(&path, format!("{value:#}\n"))
                    .map_err(|err| CliError::Domain(format!("{}: {err}", path.display())))?;
            }
            Ok(())
        }
        Command::Survey {
            algebra,
            order,
            modes,
            decomposition,
            output,
            resume,
            catalog,
            json,
        } => survey_command(SurveyArgs {
            algebra,
            order,
            modes,
            decomposition,
            output,
            resume,
            catalog,
            json,
        }),
        Command::Profile {
            order,
            catalog,
            output,
        } => {
            let cat = commutative_catalog(order, catalog.as_deref())?;
            let profile = compactness_profile(&cat)?;
            let mut w = open_output(output.as_deref())?;
            writeln!(w, "id,n_pos,n_neg,n_zero").map_err(|e| CliError::Domain(e.to_string()))?;
            for (id, sig) in profile {
                writeln!(w, "{id},{},{},{}", sig.n_pos, sig.n_neg, sig.n_zero)
                    .map_err(|e| CliError::Domain(e.to_string()))?;
            }
            w.flush().map_err(|e| CliError::Domain(e.to_string()))?;
            Ok(())
        }
    }
}

fn load_table(path: &Path) -> CliResult<CayleyTable> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))?;
    Ok(CayleyTable::parse_named(
        &text,
        &path.display().to_string(),
    )?)
}

fn load_algebra(spec: &str) -> CliResult<StructureConstants> {
    if let Some(g) = StructureConstants::builtin(spec) {
        return Ok(g);
    }
    let path = Path::new(spec);
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Domain(format!("{spec}: {e} (not a built-in algebra either)")))?;
    if text.trim_start().starts_with('{') {
        return algebra_from_json(&text, spec);
    }
    Ok(StructureConstants::parse_named(&text, spec)?)
}

/// JSON mirror of the algebra text format:
/// `{"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "value": "-2"}, ...]}`.
fn algebra_from_json(text: &str, spec: &str) -> CliResult<StructureConstants> {
    let bad = |msg: String| CliError::Domain(format!("{spec}: {msg}"));
    let v: serde_json::Value =
        serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let dim = v["dim"]
        .as_u64()
        .ok_or_else(|| bad("missing numeric `dim`".into()))? as usize;
    let mut g = StructureConstants::new(dim);
    let brackets = v["brackets"]
        .as_array()
        .ok_or_else(|| bad("missing `brackets` array".into()))?;
    for (at, b) in brackets.iter().enumerate() {
        let index = |key: &str| {
            b[key]
                .as_u64()
                .map(|x| x as usize)
                .ok_or_else(|| bad(format!("bracket {at}: missing numeric `{key}`")))
        };
        let (i, j, k) = (index("i")?, index("j")?, index("k")?);
        let value = match &b["value"] {
            serde_json::Value::String(s) => s
                .parse()
                .map_err(|_| bad(format!("bracket {at}: bad value `{s}`")))?,
            serde_json::Value::Number(n) if n.is_i64() => {
                num_rational::BigRational::from_integer(n.as_i64().unwrap().into())
            }
            other => return Err(bad(format!("bracket {at}: bad value `{other}`"))),
        };
        g.set_bracket(i, j, k, value)
            .map_err(|e| bad(format!("bracket {at}: {e}")))?;
    }
    Ok(g)
}

/// `<order>:<id>`, `se:N`, `sm:N`, or a table file path.
fn load_semigroup(spec: &str, catalog_path: Option<&Path>) -> CliResult<CayleyTable> {
    if let Some((head, tail)) = spec.split_once(':') {
        if head == "se" {
            let n: usize = tail
                .parse()
                .map_err(|_| usage(format!("bad family spec `{spec}`")))?;
            return Ok(CayleyTable::se_family(n)?);
        }
        if head == "sm" {
            let n: usize = tail
                .parse()
                .map_err(|_| usage(format!("bad family spec `{spec}`")))?;
            return Ok(CayleyTable::sm_family(n)?);
        }
        if let (Ok(order), Ok(id)) = (head.parse::<usize>(), tail.parse::<u32>()) {
            let cat = match catalog_path {
                Some(p) => {
                    let cat = Catalog::load(p)?;
                    if cat.order() != order {
                        return Err(usage(format!(
                            "catalog {} holds order {}, not {order}",
                            p.display(),
                            cat.order()
                        )));
                    }
                    cat
                }
                None => enumerate(order, Equivalence::IsoAndAnti)?,
            };
            return Ok(cat.get_by_id(id)?.clone());
        }
    }
    load_table(Path::new(spec))
}

/// Parses "S0=1 2 3,S1=1 4 5,..." — fields split on commas, members on
/// spaces or `+`.
fn parse_assignments(spec: &str) -> CliResult<BTreeMap<String, Vec<usize>>> {
    let mut out = BTreeMap::new();
    for field in spec.split(',') {
        let (name, values) = field
            .split_once('=')
            .ok_or_else(|| usage(format!("expected `NAME=members` in `{field}`")))?;
        let members: Vec<usize> = values
            .split(|c: char| c == '+' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse()
                    .map_err(|_| usage(format!("bad member `{s}` in `{field}`")))
            })
            .collect::<CliResult<_>>()?;
        out.insert(name.trim().to_string(), members);
    }
    Ok(out)
}

fn open_output(path: Option<&Path>) -> CliResult<Box<dyn Write>> {
    match path {
        Some(p) => {
            let f = fs::File::create(p)
                .map_err(|e| CliError::Domain(format!("{}: {e}", p.display())))?;
            Ok(Box::new(BufWriter::new(f)))
        }
        None => Ok(Box::new(BufWriter::new(std::io::stdout()))),
    }
}

fn commutative_catalog(order: usize, catalog_path: Option<&Path>) -> CliResult<Catalog> {
    let cat = match catalog_path {
        Some(p) => {
            let cat = Catalog::load(p)?;
            if cat.order() != order {
                return Err(usage(format!(
                    "catalog {} holds order {}, not {order}",
                    p.display(),
                    cat.order()
                )));
            }
            cat
        }
        None => enumerate(order, Equivalence::IsoAndAnti)?,
    };
    Ok(cat.filter_commutative())
}

struct SurveyArgs {
    algebra: String,
    order: usize,
    modes: String,
    decomposition: Option<String>,
    output: Option<PathBuf>,
    resume: bool,
    catalog: Option<PathBuf>,
    json: Option<PathBuf>,
}

fn survey_command(args: SurveyArgs) -> CliResult {
    let g = load_algebra(&args.algebra)?;
    let modes: Vec<Mode> = args
        .modes
        .split(',')
        .map(|m| Mode::parse(m.trim()).ok_or_else(|| usage(format!("unknown mode `{m}`"))))
        .collect::<CliResult<_>>()?;
    let needs_d = modes.contains(&Mode::Resonant) || modes.contains(&Mode::ResonantReduced);
    let d = match &args.decomposition {
        Some(spec) => {
            let fields = parse_assignments(spec)?;
            let v0 = fields
                .get("V0")
                .ok_or_else(|| usage("--decomposition needs V0=..."))?;
            let v1 = fields
                .get("V1")
                .ok_or_else(|| usage("--decomposition needs V1=..."))?;
            Some(SubspaceDecomposition::from_members(g.dim(), v0, v1)?)
        }
        None => default_decomposition(&args.algebra),
    };
    if needs_d && d.is_none() {
        return Err(usage(
            "resonant modes need --decomposition \"V0=...,V1=...\"",
        ));
    }

    let cat = commutative_catalog(args.order, args.catalog.as_deref())?;

    // ids already on disk from an interrupted run; the highest one may be
    // incomplete and is redone
    let mut done: Vec<u32> = Vec::new();
    if args.resume {
        let out_path = args
            .output
            .as_deref()
            .ok_or_else(|| usage("--resume needs --output"))?;
        if out_path.exists() {
            let text = fs::read_to_string(out_path)
                .map_err(|e| CliError::Domain(format!("{}: {e}", out_path.display())))?;
            let mut rows = read_csv_rows(text.as_bytes(), &out_path.display().to_string())?;
            if let Some(&last) = rows.iter().map(|r| &r.id).max() {
                rows.retain(|r| r.id != last);
                done = rows.iter().map(|r| r.id).collect();
                done.dedup();
                let mut w = BufWriter::new(
                    fs::File::create(out_path)
                        .map_err(|e| CliError::Domain(format!("{}: {e}", out_path.display())))?,
                );
                write_csv_header(&mut w).map_err(|e| CliError::Domain(e.to_string()))?;
                for r in &rows {
                    write_csv_row(&mut w, r).map_err(|e| CliError::Domain(e.to_string()))?;
                }
                w.flush().map_err(|e| CliError::Domain(e.to_string()))?;
            }
        }
    }

    let append = args.resume && args.output.as_deref().is_some_and(Path::exists);
    let mut w: Box<dyn Write> = match args.output.as_deref() {
        Some(p) => {
            let f = fs::OpenOptions::new()
                .create(true)
                .append(append)
                .write(true)
                .open(p)
                .map_err(|e| CliError::Domain(format!("{}: {e}", p.display())))?;
            Box::new(BufWriter::new(f))
        }
        None => Box::new(BufWriter::new(std::io::stdout())),
    };
    if !append {
        write_csv_header(&mut w).map_err(|e| CliError::Domain(e.to_string()))?;
    }

    // stream in id batches so long scans are resumable
    let todo = cat.subset(|t| !done.contains(&t.id.unwrap_or(0)));
    let mut all_rows = Vec::new();
    let mut failures = 0usize;
    let batch = 32usize;
    let mut start = 0usize;
    while start < todo.len() {
        let ids: Vec<u32> = todo
            .tables()
            .iter()
            .skip(start)
            .take(batch)
            .map(|t| t.id.unwrap_or(0))
            .collect();
        let chunk = todo.subset(|t| ids.contains(&t.id.unwrap_or(0)));
        let report = census(&g, &args.algebra, d.as_ref(), &chunk, &modes)?;
        for f in &report.failures {
            eprintln!(
                "warning: id {} mode {} resonance {:?} failed: {}",
                f.id, f.mode, f.resonance_index, f.message
            );
            failures += 1;
        }
        for r in &report.rows {
            write_csv_row(&mut w, r).map_err(|e| CliError::Domain(e.to_string()))?;
        }
        w.flush().map_err(|e| CliError::Domain(e.to_string()))?;
        all_rows.extend(report.rows);
        start += batch;
    }
    drop(w);

    // final aggregates are recomputed from the complete row set
    let full_rows = match args.output.as_deref() {
        Some(p) => {
            let text = fs::read_to_string(p)
                .map_err(|e| CliError::Domain(format!("{}: {e}", p.display())))?;
            read_csv_rows(text.as_bytes(), &p.display().to_string())?
        }
        None => all_rows,
    };
    let lists = scan_resonances(&cat);
    let report = SurveyReport {
        algebra: args.algebra.clone(),
        order: args.order,
        semigroups: cat.len(),
        with_zero: scan_zero(&cat).len(),
        with_resonance: lists.len(),
        resonances: lists.iter().map(|(_, rs)| rs.len()).sum(),
        rows: full_rows,
        failures: Vec::new(),
    };
    let summary_to_stderr = args.output.is_none();
    let summary = report.summary();
    if summary_to_stderr {
        eprint!("{summary}");
    } else {
        print!("{summary}");
    }
    if failures > 0 {
        eprintln!("warning: {failures} rows failed and were omitted from the CSV");
    }

    if let Some(path) = &args.json {
        let value = survey_json(&report);
        fs::write(path, format!("{value:#}\n"))
            .map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn default_decomposition(algebra: &str) -> Option<SubspaceDecomposition> {
    match algebra {
        "sl2" | "sl2cw" | "so3" => Some(SubspaceDecomposition::sl2_default()),
        "solv2" => Some(SubspaceDecomposition::solv2_default()),
        _ => None,
    }
}

fn catalog_json(cat: &Catalog) -> serde_json::Value {
    serde_json::json!({
        "format": "semigroup-catalog",
        "version": 1,
        "order": cat.order(),
        "count": cat.len(),
        "equivalence": cat.equivalence().as_str(),
        "tables": cat.iter().map(|t| serde_json::json!({
            "id": t.id,
            "rows": (1..=t.order()).map(|a| t.row(a)).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

fn expansion_json(e: &ExpandedAlgebra) -> CliResult<serde_json::Value> {
    let m = e.kc_metric()?;
    let dim = e.dim();
    Ok(serde_json::json!({
        "base_dim": e.base_dim(),
        "sg_order": e.sg_order(),
        "mode": e.mode().as_str(),
        "dim": dim,
        "retained": e.retained().iter().map(|&(i, a)| vec![i, a]).collect::<Vec<_>>(),
        "constants": e.effective_constants().nonzero_brackets().iter().map(|(i, j, k, v)| {
            serde_json::json!({"i": i, "j": j, "k": k, "value": format_rational(v)})
        }).collect::<Vec<_>>(),
        "metric": {
            "entries": (1..=dim).map(|i| {
                (1..=dim).map(|j| format_rational(m.get(i, j))).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
            "determinant": format_rational(&m.determinant()),
        },
    }))
}

fn survey_json(report: &SurveyReport) -> serde_json::Value {
    serde_json::json!({
        "algebra": report.algebra,
        "order": report.order,
        "semigroups": report.semigroups,
        "with_zero": report.with_zero,
        "with_resonance": report.with_resonance,
        "resonances": report.resonances,
        "pss": Mode::ALL.iter()
            .filter(|m| report.rows.iter().any(|r| r.mode == **m))
            .map(|m| (m.as_str().to_string(), report.pss(*m)))
            .collect::<BTreeMap<String, usize>>(),
        "rows": report.rows.iter().map(|r| serde_json::json!({
            "id": r.id,
            "mode": r.mode.as_str(),
            "resonance_index": r.resonance_index,
            "dim": r.dim,
            "det": format_rational(&r.det),
            "n_pos": r.sig.n_pos,
            "n_neg": r.sig.n_neg,
            "n_zero": r.sig.n_zero,
            "semisimple": r.semisimple,
            "compact": r.compact,
            "abelian": r.abelian,
            "solvable": r.solvable,
            "nilpotent": r.nilpotent,
        })).collect::<Vec<_>>(),
    })
}
