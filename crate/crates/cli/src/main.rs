use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::Value;

use comical::boxcat::BoxOperator;
use comical::category::FiniteCategory;
use comical::cubeset::{self, cube_label, is_comical, CubicalArrow, MarkedCubicalSet};
use comical::gray::{leibniz, tensor, TensorMode};
use comical::homotopy::ho1;
use comical::io::{arrow_to_json, object_to_json, parse_arrow, parse_object};
use comical::operator::Operator;
use comical::presheaf::{default_node_limit, has_rlp, Arrow, Presheaf, SearchOptions};
use comical::simpset::{self, leibniz_s, pair_product, precomplicial_reflect, MarkedSimplicialSet, ProductKind};
use comical::suites::{run_suite, SuiteParams, SUITES};
use comical::triangulate::{monoidal_comparison, triangulate};

#[derive(Parser)]
#[command(name = "comical", version, about = "Marked cubical sets, Gray tensors and triangulation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of a box operator word.
    Boxnf {
        word: String,
        /// Source dimension; defaults to the least admissible one.
        #[arg(long)]
        src: Option<usize>,
    },
    /// Gray tensor product of two marked cubical sets.
    Tensor {
        #[arg(long, default_value = "lax")]
        mode: TensorMode,
        a: PathBuf,
        b: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Leibniz tensor of two cubical monomorphisms.
    Leibniz {
        #[arg(long, default_value = "lax")]
        mode: TensorMode,
        f: PathBuf,
        g: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Triangulate a marked cubical set.
    Triangulate {
        x: PathBuf,
        /// Skip the pre-complicial reflection.
        #[arg(long)]
        raw: bool,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Check that triangulation is strong monoidal on a pair of objects.
    Compare {
        #[arg(long, default_value = "lax")]
        mode: TensorMode,
        x: PathBuf,
        y: PathBuf,
    },
    /// Pre-complicial reflection of a marked simplicial set.
    Reflect {
        s: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Gray tensor of marked simplicial sets.
    Sgray {
        s: PathBuf,
        t: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Cartesian product of marked simplicial sets.
    Sprod {
        s: PathBuf,
        t: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Leibniz product of two simplicial monomorphisms.
    Sleibniz {
        #[arg(long, default_value = "gray")]
        kind: ProductKind,
        f: PathBuf,
        g: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Right lifting of a marked simplicial set against a monomorphism.
    Srlp { s: PathBuf, f: PathBuf },
    /// Right lifting of a marked cubical set against a monomorphism, or
    /// against the comical generators up to a dimension.
    Rlp {
        x: PathBuf,
        f: Option<PathBuf>,
        #[arg(long)]
        comical: Option<usize>,
        /// Include the Rezk maps.
        #[arg(long)]
        saturated: bool,
    },
    /// Homotopy category of a marked cubical set.
    Ho1 { x: PathBuf },
    /// Write a standard object or arrow.
    Make {
        /// One of: cube, boundary, marked-cube, open-box, comical-cube,
        /// comical-open-box, box-inclusion, boundary-inclusion, marker,
        /// marking-extension, simplex, horn, complicial, horn-inclusion,
        /// simplex-marker, prime, double-prime, simplex-marking-extension,
        /// nerve-chain, nerve-iso, nerve-square.
        kind: String,
        params: Vec<usize>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Run a verification suite, or all of them.
    Suite {
        name: String,
        #[arg(long)]
        max_dim: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
        #[arg(short)]
        o: Option<PathBuf>,
    },
}

fn read<T>(path: &Path, parse: impl Fn(&str) -> comical::Result<T>) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse(&text).with_context(|| format!("loading {}", path.display()))
}

fn cubical(path: &Path) -> Result<MarkedCubicalSet> {
    read(path, parse_object)
}

fn simplicial(path: &Path) -> Result<MarkedSimplicialSet> {
    read(path, parse_object)
}

fn emit(text: &str, o: Option<&Path>) -> Result<()> {
    match o {
        Some(p) => fs::write(p, format!("{text}\n")).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            match writeln!(out, "{text}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
                _ => Ok(()),
            }
        }
    }
}

fn emit_json(v: &Value, o: Option<&Path>) -> Result<()> {
    emit(&serde_json::to_string_pretty(v)?, o)
}

fn need(params: &[usize], n: usize, kind: &str) -> Result<()> {
    if params.len() != n {
        bail!("`{kind}` takes {n} numeric parameters, got {}", params.len());
    }
    Ok(())
}

fn sign(e: usize) -> Result<u8> {
    match e {
        0 | 1 => Ok(e as u8),
        _ => bail!("sign must be 0 or 1, got {e}"),
    }
}

fn make(kind: &str, p: &[usize]) -> Result<Value> {
    let object = |x: &MarkedCubicalSet| object_to_json(x);
    let v = match kind {
        "cube" | "boundary" | "marked-cube" | "boundary-inclusion" | "marker" => {
            need(p, 1, kind)?;
            let n = p[0];
            match kind {
                "cube" => object(&cubeset::cube(n)),
                "boundary" => object(&cubeset::boundary(n)),
                "marked-cube" => object(&cubeset::marked_cube(n)),
                "boundary-inclusion" => arrow_to_json(&cubeset::boundary_inclusion(n)),
                _ => arrow_to_json(&cubeset::marker(n)),
            }
        }
        "open-box" | "comical-cube" | "comical-open-box" | "box-inclusion" | "marking-extension" => {
            need(p, 3, kind)?;
            let (n, k, e) = (p[0], p[1], sign(p[2])?);
            match kind {
                "open-box" => object(&cubeset::open_box(n, k, e)?),
                "comical-cube" => object(&cubeset::comical_cube(n, k, e)?),
                "comical-open-box" => object(&cubeset::comical_open_box(n, k, e)?),
                "box-inclusion" => arrow_to_json(&cubeset::comical_box_inclusion(n, k, e)?),
                _ => arrow_to_json(&cubeset::marking_extension_pair(n, k, e)?),
            }
        }
        "simplex" | "simplex-marker" => {
            need(p, 1, kind)?;
            match kind {
                "simplex" => object_to_json(&simpset::simplex(p[0])),
                _ => arrow_to_json(&simpset::marker(p[0])),
            }
        }
        "horn" | "complicial" | "horn-inclusion" | "prime" | "double-prime" | "simplex-marking-extension" => {
            need(p, 2, kind)?;
            let (n, k) = (p[0], p[1]);
            match kind {
                "horn" => object_to_json(&simpset::horn(n, k)?),
                "complicial" => object_to_json(&simpset::complicial(n, k)?),
                "horn-inclusion" => arrow_to_json(&simpset::horn_inclusion(n, k)?),
                "prime" => object_to_json(&simpset::prime(n, k)?),
                "double-prime" => object_to_json(&simpset::double_prime(n, k)?),
                _ => arrow_to_json(&simpset::marking_extension(n, k)?),
            }
        }
        "nerve-chain" => {
            need(p, 2, kind)?;
            object(&cubeset::cubical_nerve(&FiniteCategory::chain(p[0]), p[1])?)
        }
        "nerve-iso" | "nerve-square" => {
            need(p, 1, kind)?;
            let c = if kind == "nerve-iso" { FiniteCategory::free_isomorphism() } else { FiniteCategory::commuting_square() };
            object(&cubeset::cubical_nerve(&c, p[0])?)
        }
        _ => bail!("unknown object kind `{kind}`"),
    };
    Ok(v)
}

fn print_lift<O: Operator>(x: &Presheaf<O>, f: &Arrow<O>, name: &str) -> bool {
    if !f.is_mono() {
        println!("{name}: not a monomorphism");
        return false;
    }
    let r = has_rlp(x, f, &SearchOptions::default());
    if r.holds {
        println!("{name}: lifts");
    } else if r.overflow {
        println!("{name}: undecided (search budget exhausted)");
    } else {
        println!("{name}: fails");
        if let Some(u) = r.counterexample {
            for (a, c) in u.assign.iter().enumerate() {
                println!("  {} ↦ {}", f.src.id(a), cube_label(x, c));
            }
        }
    }
    r.holds
}

fn print_ho1(x: &MarkedCubicalSet) -> Result<()> {
    let h = ho1(x)?;
    let c = &h.category;
    println!("objects: {}", c.objects.join(", "));
    println!("arrows:");
    for (a, data) in c.arrows.iter().enumerate() {
        let reps: Vec<String> = h.members[a].iter().map(|m| cube_label(x, m)).collect();
        println!("  {}: {} → {}  [{}]", data.name, c.objects[data.src], c.objects[data.tgt], reps.join(", "));
    }
    println!("composition:");
    let mut table: Vec<_> = c.compose.iter().filter(|((g, f), _)| !c.identities.contains(g) && !c.identities.contains(f)).collect();
    table.sort();
    for ((g, f), h) in table {
        println!("  {} ∘ {} = {}", c.arrows[*g].name, c.arrows[*f].name, c.arrows[*h].name);
    }
    Ok(())
}

fn suite(name: &str, max_dim: Option<usize>, seed: u64, json: bool, o: Option<&Path>) -> Result<bool> {
    let names: Vec<&str> = if name == "all" { SUITES.to_vec() } else { vec![name] };
    let params = SuiteParams { max_dim, seed, node_limit: default_node_limit() };
    let mut reports = Vec::new();
    for n in names {
        reports.push(run_suite(n, &params)?);
    }
    let ok = reports.iter().all(|r| r.passed());
    let text = if json {
        let v = if reports.len() == 1 { serde_json::to_value(&reports[0])? } else { serde_json::to_value(&reports)? };
        serde_json::to_string_pretty(&v)?
    } else {
        reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n")
    };
    emit(&text, o)?;
    Ok(ok)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Boxnf { word, src } => {
            let op = BoxOperator::parse(&word, src)?;
            println!("{op}");
        }
        Command::Tensor { mode, a, b, o } => {
            let p = tensor(&cubical(&a)?, &cubical(&b)?, mode);
            emit_json(&object_to_json(&p.object), o.as_deref())?;
        }
        Command::Leibniz { mode, f, g, o } => {
            let f: CubicalArrow = read(&f, parse_arrow)?;
            let g: CubicalArrow = read(&g, parse_arrow)?;
            emit_json(&arrow_to_json(&leibniz(&f, &g, mode)?.arrow), o.as_deref())?;
        }
        Command::Triangulate { x, raw, o } => {
            let t = triangulate(&cubical(&x)?, !raw);
            emit_json(&object_to_json(&t.object), o.as_deref())?;
        }
        Command::Compare { mode, x, y } => {
            let c = monoidal_comparison(&cubical(&x)?, &cubical(&y)?, mode)?;
            println!("iso: {}", c.iso);
            if let Some(m) = c.mismatch {
                println!("mismatch: {m}");
            }
            return Ok(c.iso);
        }
        Command::Reflect { s, o } => {
            emit_json(&object_to_json(&precomplicial_reflect(&simplicial(&s)?)), o.as_deref())?;
        }
        Command::Sgray { s, t, o } => {
            let p = pair_product(&simplicial(&s)?, &simplicial(&t)?, ProductKind::Gray);
            emit_json(&object_to_json(&p.object), o.as_deref())?;
        }
        Command::Sprod { s, t, o } => {
            let p = pair_product(&simplicial(&s)?, &simplicial(&t)?, ProductKind::Cartesian);
            emit_json(&object_to_json(&p.object), o.as_deref())?;
        }
        Command::Sleibniz { kind, f, g, o } => {
            let f = read(&f, parse_arrow)?;
            let g = read(&g, parse_arrow)?;
            emit_json(&arrow_to_json(&leibniz_s(&f, &g, kind)?.arrow), o.as_deref())?;
        }
        Command::Srlp { s, f } => {
            let x = simplicial(&s)?;
            let f = read(&f, parse_arrow)?;
            return Ok(print_lift(&x, &f, "lifting"));
        }
        Command::Rlp { x, f, comical, saturated } => {
            let x = cubical(&x)?;
            return match (f, comical) {
                (Some(f), None) => {
                    let f = read(&f, parse_arrow)?;
                    Ok(print_lift(&x, &f, "lifting"))
                }
                (None, Some(dim)) => {
                    let r = is_comical(&x, dim, saturated, &SearchOptions::default())?;
                    for c in &r.checks {
                        let verdict = if c.holds { "lifts" } else if c.overflow { "undecided" } else { "fails" };
                        println!("{}: {verdict}", c.name);
                        for (a, img) in c.counterexample.iter().flatten() {
                            println!("  {a} ↦ {img}");
                        }
                    }
                    Ok(r.passed())
                }
                _ => bail!("give either an arrow file or --comical DIM"),
            };
        }
        Command::Ho1 { x } => print_ho1(&cubical(&x)?)?,
        Command::Make { kind, params, o } => emit_json(&make(&kind, &params)?, o.as_deref())?,
        Command::Suite { name, max_dim, seed, json, o } => return suite(&name, max_dim, seed, json, o.as_deref()),
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
