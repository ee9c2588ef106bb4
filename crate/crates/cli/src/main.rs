use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use asw_core::arc::{auroux_triangle, end_algebra_of_collection, fan_collection, swinging_collection, Collection};
use asw_core::auslander::{auslander_summands, ot12_module, verify_auslander_step};
use asw_core::complex::hom_table;
use asw_core::derived::{mutate, projective_collection, staircase_collection, staircase_object, tilting_check, total_dims, twist, Side};
use asw_core::io;
use asw_core::rep::{dominant_dimension, ext, global_dimension, injective, projective, simple, Representation};
use asw_core::suites::{run_suite, Range, SUITES};
use asw_core::zoo::{build_a, build_alternating, build_g, build_ghat, parse_tuple};
use asw_core::{Algebra, Error, Field};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "asw", version, about = "Exact computations with higher Auslander algebras of type A and their arc models")]
struct Cli {
    /// Characteristic of the ground field: 0 for the rationals or a prime. ASW_FIELD overrides it.
    #[arg(long = "char", global = true, default_value_t = 0)]
    characteristic: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build algebras of the zoo.
    Zoo {
        #[command(subcommand)]
        action: ZooCmd,
    },
    /// Query a zoo algebra.
    Alg {
        #[command(subcommand)]
        action: AlgCmd,
    },
    /// Module computations over A(n,d).
    Rep {
        #[command(subcommand)]
        action: RepCmd,
    },
    /// Complexes of projectives over A(n,d).
    Derived {
        #[command(subcommand)]
        action: DerivedCmd,
    },
    /// Arc collections in the disk with stops.
    Arc {
        #[command(subcommand)]
        action: ArcCmd,
    },
    /// Run a named verification suite.
    Verify {
        /// Suite name; `list` prints the available suites.
        suite: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_d: Option<usize>,
        /// Include the wall time in the report (makes it non-reproducible).
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export a target: `<family>:<n>,<d>[:cartan]`, `swinging:<n>,<d>`, `fan:<n>,<d>` or
    /// `staircase:<n>,<d>:<I>`.
    Export {
        target: String,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Read a JSON file and write it back in canonical form.
    Import {
        #[arg(value_enum)]
        kind: ImportKind,
        file: PathBuf,
        /// Algebra file the representation or complex refers to.
        #[arg(long)]
        algebra: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    A,
    G,
    Ghat,
    Alt,
}

#[derive(Clone, Copy, ValueEnum)]
enum ImportKind {
    Algebra,
    Rep,
    Complex,
    Collection,
}

#[derive(Clone, Copy, ValueEnum)]
enum ArcFamily {
    Swinging,
    Fan,
}

#[derive(Args, Clone, Copy)]
struct FamilyArgs {
    #[arg(long, value_enum, default_value = "a")]
    family: Family,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    d: usize,
}

#[derive(Args, Clone, Copy)]
struct Nd {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    d: usize,
}

#[derive(Subcommand)]
enum ZooCmd {
    Build {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum AlgCmd {
    Cartan {
        #[command(flatten)]
        fam: FamilyArgs,
    },
    Dims {
        #[command(flatten)]
        fam: FamilyArgs,
    },
    Gabriel {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long)]
        dot: bool,
    },
    Export {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum RepCmd {
    /// `Ext^i(X, Y)` for modules named `P:<v>`, `I:<v>`, `S:<v>` or `M:<J>`.
    Ext {
        #[command(flatten)]
        nd: Nd,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    Gldim {
        #[command(flatten)]
        nd: Nd,
    },
    Domdim {
        #[command(flatten)]
        nd: Nd,
    },
    AuslanderStep {
        #[command(flatten)]
        nd: Nd,
    },
}

#[derive(Subcommand)]
enum DerivedCmd {
    /// Mutate the exceptional collection of projectives at position `k` (1-based).
    Mutate {
        #[command(flatten)]
        nd: Nd,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        right: bool,
    },
    /// Twist of the projective at vertex `x` by the projective at vertex `e`.
    Twist {
        #[command(flatten)]
        nd: Nd,
        #[arg(long)]
        e: String,
        #[arg(long)]
        x: String,
    },
    Staircase {
        #[command(flatten)]
        nd: Nd,
        #[arg(long)]
        i: String,
    },
    Tilting {
        #[command(flatten)]
        nd: Nd,
    },
}

#[derive(Subcommand)]
enum ArcCmd {
    /// Degree 0 endomorphism algebra (tame collections) or Hom cohomology table.
    End {
        #[arg(long, value_enum, default_value = "swinging")]
        family: ArcFamily,
        #[command(flatten)]
        nd: Nd,
    },
    Triangle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        k: usize,
        /// Background arcs as `a-b,c-d`.
        #[arg(long, default_value = "")]
        background: String,
    },
}

enum Failure {
    Verification(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

type Out = Result<(), Failure>;

fn field_of(cli: &Cli) -> Result<Field, Failure> {
    match std::env::var("ASW_FIELD") {
        Ok(s) if !s.trim().is_empty() => Ok(Field::parse(&s)?),
        _ => Ok(Field::from_char(cli.characteristic)?),
    }
}

fn build(field: Field, f: FamilyArgs) -> asw_core::Result<Algebra> {
    match f.family {
        Family::A => build_a(field, f.n, f.d),
        Family::G => build_g(field, f.n, f.d),
        Family::Ghat => build_ghat(field, f.n, f.d),
        Family::Alt => build_alternating(field, f.n),
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Out {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn emit_json(v: &Value, out: &Option<PathBuf>) -> Out {
    emit(&io::to_string(v), out)
}

fn vertex(alg: &Algebra, name: &str) -> Result<usize, Failure> {
    alg.vertex_index(name).ok_or_else(|| Failure::Usage(format!("no vertex named {name:?}")))
}

fn module(alg: &Algebra, nd: Nd, desc: &str) -> Result<Representation, Failure> {
    let (kind, arg) = desc.split_once(':').ok_or_else(|| Failure::Usage(format!("module {desc:?} is not KIND:ARG")))?;
    Ok(match kind {
        "P" => projective(alg, vertex(alg, arg)?),
        "I" => injective(alg, vertex(alg, arg)?),
        "S" => simple(alg, vertex(alg, arg)?),
        "M" => {
            let j = parse_tuple(arg)?;
            if j.first() == Some(&1) {
                auslander_summands(alg, nd.n, nd.d)?
                    .into_iter()
                    .find(|s| s.0 == asw_core::zoo::tuple_name(&j))
                    .ok_or_else(|| Failure::Usage(format!("no summand {arg}")))?
                    .1
            } else {
                ot12_module(alg, nd.n, nd.d, &j)?
            }
        }
        _ => return Err(Failure::Usage(format!("unknown module kind {kind:?}"))),
    })
}

fn parse_nd(s: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Usage(format!("expected <n>,<d>, got {s:?}"));
    let (n, d) = s.split_once(',').ok_or_else(bad)?;
    Ok((n.trim().parse().map_err(|_| bad())?, d.trim().parse().map_err(|_| bad())?))
}

fn export(field: Field, target: &str, dot: bool, out: &Option<PathBuf>) -> Out {
    let parts: Vec<&str> = target.split(':').collect();
    let unknown = || Failure::Usage(Error::UnknownTarget(target.to_string()).to_string());
    let family = match parts[0].to_ascii_lowercase().as_str() {
        "a" => Some(Family::A),
        "g" => Some(Family::G),
        "ghat" => Some(Family::Ghat),
        "alt" => Some(Family::Alt),
        _ => None,
    };
    if parts.len() < 2 {
        return Err(unknown());
    }
    let (n, d) = parse_nd(parts[1])?;
    if let Some(family) = family {
        let alg = build(field, FamilyArgs { family, n, d })?;
        return match (parts.get(2), dot) {
            (None, true) => emit(&io::gabriel_dot(&alg), out),
            (None, false) => emit_json(&io::algebra_to_json(&alg), out),
            (Some(&"cartan"), _) => emit_json(&json!({ "vertices": alg.vertices, "cartan": alg.cartan() }), out),
            _ => Err(unknown()),
        };
    }
    match (parts[0], parts.get(2)) {
        ("swinging", None) => emit_json(&io::collection_to_json(&swinging_collection(n, d)?), out),
        ("fan", None) => emit_json(&io::collection_to_json(&fan_collection(n, d)?), out),
        ("staircase", Some(i)) => {
            let alg = build_a(field, n, d)?;
            let (c, _) = staircase_object(&alg, n, d, &parse_tuple(i)?)?;
            emit_json(&io::complex_to_json(&alg, &c), out)
        }
        _ => Err(unknown()),
    }
}

fn read_json(p: &PathBuf) -> Result<Value, Failure> {
    Ok(serde_json::from_str(&std::fs::read_to_string(p)?)?)
}

fn arc_end(field: Field, coll: &Collection) -> Result<Value, Failure> {
    if coll.is_tame() {
        let end = end_algebra_of_collection(coll, field)?;
        return Ok(json!({ "collection": io::collection_to_json(coll), "end": io::algebra_to_json(&end) }));
    }
    let table = coll.hom_table(field)?;
    let names: Vec<String> = (0..coll.objects.len()).map(|k| coll.name(k)).collect();
    let dims: Vec<Vec<&Vec<(i64, usize)>>> = table.iter().map(|r| r.iter().map(|h| &h.dims).collect()).collect();
    Ok(json!({ "collection": io::collection_to_json(coll), "names": names, "hom": dims }))
}

fn run(cli: Cli) -> Out {
    let field = field_of(&cli)?;
    match cli.cmd {
        Cmd::Zoo { action: ZooCmd::Build { fam, out } } => {
            let alg = build(field, fam)?;
            match &out {
                Some(p) => {
                    std::fs::write(p, io::to_string(&io::algebra_to_json(&alg)))?;
                    emit_json(&json!({ "out": p, "vertices": alg.num_vertices(), "dim": alg.dim() }), &None)
                }
                None => emit_json(&io::algebra_to_json(&alg), &None),
            }
        }
        Cmd::Alg { action } => match action {
            AlgCmd::Cartan { fam } => {
                let alg = build(field, fam)?;
                emit_json(&json!({ "vertices": alg.vertices, "cartan": alg.cartan() }), &None)
            }
            AlgCmd::Dims { fam } => {
                let alg = build(field, fam)?;
                emit_json(&json!({ "vertices": alg.num_vertices(), "arrows": alg.arrows.len(), "dim": alg.dim() }), &None)
            }
            AlgCmd::Gabriel { fam, dot } => {
                let alg = build(field, fam)?;
                if dot {
                    emit(&io::gabriel_dot(&alg), &None)
                } else {
                    let g = alg.gabriel();
                    let arrows: Vec<[&String; 2]> = g.arrows.iter().map(|&(a, b)| [&g.vertices[a], &g.vertices[b]]).collect();
                    emit_json(&json!({ "vertices": g.vertices, "arrows": arrows, "relations": g.relation_profile }), &None)
                }
            }
            AlgCmd::Export { fam, dot, out } => {
                let alg = build(field, fam)?;
                if dot {
                    emit(&io::gabriel_dot(&alg), &out)
                } else {
                    emit_json(&io::algebra_to_json(&alg), &out)
                }
            }
        },
        Cmd::Rep { action } => match action {
            RepCmd::Ext { nd, i, x, y } => {
                let alg = build_a(field, nd.n, nd.d)?;
                let (mx, my) = (module(&alg, nd, &x)?, module(&alg, nd, &y)?);
                emit_json(&json!({ "i": i, "x": x, "y": y, "dim": ext(&alg, &mx, &my, i)? }), &None)
            }
            RepCmd::Gldim { nd } => emit_json(&json!({ "gldim": global_dimension(&build_a(field, nd.n, nd.d)?)? }), &None),
            RepCmd::Domdim { nd } => emit_json(&json!({ "domdim": dominant_dimension(&build_a(field, nd.n, nd.d)?)? }), &None),
            RepCmd::AuslanderStep { nd } => {
                let (step, iso) = verify_auslander_step(nd.n, nd.d, field)?;
                let v = json!({
                    "summands": step.summands.iter().map(|s| &s.0).collect::<Vec<_>>(),
                    "expected_count": step.expected_count,
                    "cluster_tilting": step.cluster_tilting,
                    "end_dim": step.end.dim(),
                    "isomorphic_to_next": iso,
                });
                emit_json(&v, &None)?;
                if !iso || !step.cluster_tilting.vanishing {
                    return Err(Failure::Verification(format!("End of the cluster tilting module of A({},{}) is not A({},{})", nd.n, nd.d, nd.n + 1, nd.d + 1)));
                }
                Ok(())
            }
        },
        Cmd::Derived { action } => match action {
            DerivedCmd::Mutate { nd, k, right } => {
                let alg = build_a(field, nd.n, nd.d)?;
                let (order, coll) = projective_collection(&alg);
                let side = if right { Side::Right } else { Side::Left };
                let m = mutate(&alg, &coll, k, side)?;
                let table = total_dims(&hom_table(&alg, &m)?);
                let names: Vec<&String> = order.iter().map(|&v| &alg.vertices[v]).collect();
                let objs: Vec<Value> = m.iter().map(|c| io::complex_to_json(&alg, c)).collect();
                emit_json(&json!({ "order": names, "hom_dims": table, "objects": objs }), &None)
            }
            DerivedCmd::Twist { nd, e, x } => {
                let alg = build_a(field, nd.n, nd.d)?;
                let p = |v| asw_core::complex::ProjComplex::projective(&alg, v);
                let t = twist(&alg, &p(vertex(&alg, &e)?), &p(vertex(&alg, &x)?))?;
                emit_json(&io::complex_to_json(&alg, &t), &None)
            }
            DerivedCmd::Staircase { nd, i } => {
                let alg = build_a(field, nd.n, nd.d)?;
                let (c, info) = staircase_object(&alg, nd.n, nd.d, &parse_tuple(&i)?)?;
                emit_json(&json!({ "arcs": info, "complex": io::complex_to_json(&alg, &c) }), &None)
            }
            DerivedCmd::Tilting { nd } => {
                let alg = build_a(field, nd.n, nd.d)?;
                let (objs, labels) = staircase_collection(&alg, nd.n, nd.d)?;
                let r = tilting_check(&alg, nd.n, nd.d, &objs, &labels)?;
                emit_json(&serde_json::to_value(&r)?, &None)?;
                if !r.passed() {
                    return Err(Failure::Verification(format!("staircase objects are not tilting with End G({},{})", nd.n, nd.d)));
                }
                Ok(())
            }
        },
        Cmd::Arc { action } => match action {
            ArcCmd::End { family, nd } => {
                let coll = match family {
                    ArcFamily::Swinging => swinging_collection(nd.n, nd.d)?,
                    ArcFamily::Fan => fan_collection(nd.n, nd.d)?,
                };
                emit_json(&arc_end(field, &coll)?, &None)
            }
            ArcCmd::Triangle { n, i, j, k, background } => {
                let mut bg = Vec::new();
                for p in background.split(',').filter(|s| !s.trim().is_empty()) {
                    let (a, b) = p.split_once('-').ok_or_else(|| Failure::Usage(format!("background arc {p:?} is not a-b")))?;
                    let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| Failure::Usage(format!("bad component {s:?}")));
                    bg.push((parse(a)?, parse(b)?));
                }
                let t = auroux_triangle(n, i, j, k, &bg, field)?;
                emit_json(&serde_json::to_value(&t)?, &None)?;
                if !t.passed {
                    return Err(Failure::Verification(format!("cone of L_{i}{j} -> L_{i}{k} does not match L_{j}{k}")));
                }
                Ok(())
            }
        },
        Cmd::Verify { suite, n, d, max_n, max_d, timing, out } => {
            if suite == "list" {
                let list: Vec<Value> = SUITES.iter().map(|(s, c)| json!({ "suite": s, "claim": c })).collect();
                return emit_json(&Value::Array(list), &out);
            }
            let start = Instant::now();
            let mut report = run_suite(&suite, field, Range { n, d, max_n, max_d })?;
            if timing {
                report.wall_ms = Some(start.elapsed().as_millis());
            }
            emit_json(&serde_json::to_value(&report)?, &out)?;
            for c in report.failures() {
                eprintln!("FAIL {} {}: {}", report.suite, c.name, c.witness);
            }
            if !report.passed() {
                return Err(Failure::Verification(format!("suite {} failed: {}", report.suite, report.claim)));
            }
            Ok(())
        }
        Cmd::Export { target, dot, out } => export(field, &target, dot, &out),
        Cmd::Import { kind, file, algebra } => {
            let v = read_json(&file)?;
            let alg = || -> Result<Algebra, Failure> {
                let p = algebra.as_ref().ok_or_else(|| Failure::Usage("--algebra is required".into()))?;
                Ok(io::algebra_from_json(&read_json(p)?)?)
            };
            let back = match kind {
                ImportKind::Algebra => io::algebra_to_json(&io::algebra_from_json(&v)?),
                ImportKind::Rep => {
                    let a = alg()?;
                    io::rep_to_json(&a, &io::rep_from_json(&a, &v)?)
                }
                ImportKind::Complex => {
                    let a = alg()?;
                    io::complex_to_json(&a, &io::complex_from_json(&a, &v)?)
                }
                ImportKind::Collection => io::collection_to_json(&io::collection_from_json(&v)?),
            };
            emit_json(&back, &None)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
