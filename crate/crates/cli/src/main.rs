//! Command-line front end: enumeration, statistics, maps, tables, series
//! and the verification checks. All output is machine-readable.

use std::process::ExitCode;

use ascent::bijection::NamedBijection;
use ascent::check::{run_check, CheckName, CheckParams, CheckReport};
use ascent::decomp::{DecompMap, Direction};
use ascent::enumerate::{enumerate_with, Limits};
use ascent::genfun::{
    fishburn_series, interpolate_g, parse_rational, series_asczero, series_g, series_zeromax, AsczeroVariant,
    SpecPoint, TruncSeries, DEFAULT_ORDER,
};
use ascent::stats::{marker, perm_stats, scalar_stats, set_stats, MarkerKind};
use ascent::table::{dist_table, TableCache};
use ascent::{ClassId, Error, Obj, Perm, Seq};
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "ascent", version, about = "Ascent sequences: enumeration, statistics, bijections and generating functions")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Fishburn,
    #[value(name = "G")]
    G,
    Zeromax,
    Asczero1,
    Asczero2,
}

#[derive(Subcommand)]
enum Command {
    /// List every member of a class, in lexicographic order.
    Enumerate {
        #[arg(long)]
        class: ClassId,
        #[arg(short, long)]
        n: usize,
        /// Only members extending this comma-separated prefix.
        #[arg(long)]
        prefix: Option<String>,
    },
    /// Statistics of one sequence, or of one permutation with --perm.
    Stats {
        object: String,
        #[arg(long)]
        perm: bool,
    },
    /// Apply a decomposition map or a named bijection.
    Apply {
        #[arg(long)]
        map: String,
        #[arg(long, default_value = "forward")]
        direction: Direction,
        /// Side index of a pair input (or of the pair a map consumes).
        #[arg(long)]
        side: Option<u32>,
        /// Emit every intermediate sequence.
        #[arg(long)]
        trace: bool,
        object: String,
    },
    /// Joint distribution of statistics over a class.
    Table {
        #[arg(long)]
        class: ClassId,
        #[arg(short, long)]
        n: usize,
        /// Comma-separated statistic names.
        #[arg(long, value_delimiter = ',', required = true)]
        stats: Vec<ascent::stats::StatName>,
        /// Skip the on-disk table cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Truncated generating-function coefficients.
    Series {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long, default_value = "1")]
        x: String,
        #[arg(long, default_value = "1")]
        q: String,
        #[arg(long, default_value = "1")]
        u: String,
        #[arg(long, default_value = "1")]
        z: String,
        /// Evaluate at seeded random points instead of the given markers.
        #[arg(long)]
        seed: Option<u64>,
        /// Number of random points when --seed is given.
        #[arg(long, default_value_t = 1)]
        points: usize,
        /// Reconstruct full coefficient polynomials of G (orders up to 7).
        #[arg(long)]
        interpolate: bool,
    },
    /// Run a named check, or `all`.
    Check {
        #[arg(long, default_value = "all")]
        name: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        points: Option<usize>,
    },
}

/// Exit codes: 0 pass, 1 failed check or internal error, 2 usage, 3 limit.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Usage(_) | Error::Parse(_) | Error::Domain(_) | Error::Inadmissible(_) => 2,
        Error::ResourceLimit(_) => 3,
        Error::Contract(_) | Error::Io(_) | Error::Json(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("ascent: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn print_csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) {
    println!("{}", header.join(","));
    for r in rows {
        let fields: Vec<String> = r.iter().map(|f| csv_field(f)).collect();
        println!("{}", fields.join(","));
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json value serializes"));
}

fn run(cli: Cli) -> Result<u8, Error> {
    let fmt = cli.format;
    match cli.command {
        Command::Enumerate { class, n, prefix } => {
            let prefix: Vec<u32> = match prefix {
                Some(p) => p.parse::<Seq>()?.into_values(),
                None => Vec::new(),
            };
            let objs: Vec<String> = enumerate_with(class, n, &prefix, &Limits::default())?.map(|o| o.to_string()).collect();
            match fmt {
                Format::Json => print_json(&json!(objs)),
                Format::Csv => print_csv(&["object"], objs.into_iter().map(|o| vec![o])),
            }
        }
        Command::Stats { object, perm } => stats(fmt, &object, perm)?,
        Command::Apply {
            map,
            direction,
            side,
            trace,
            object,
        } => apply(fmt, &map, direction, side, trace, &object)?,
        Command::Table { class, n, stats, no_cache } => {
            let t = if no_cache {
                dist_table(class, n, &stats)?
            } else {
                TableCache::from_env().get_or_compute(class, n, &stats)?
            };
            match fmt {
                Format::Json => println!("{}", t.to_json()),
                Format::Csv => {
                    let mut header: Vec<&str> = stats.iter().map(|s| s.name()).collect();
                    header.push("count");
                    print_csv(
                        &header,
                        t.counts.iter().map(|(k, v)| k.iter().map(u32::to_string).chain([v.to_string()]).collect()),
                    );
                }
            }
        }
        Command::Series {
            which,
            order,
            x,
            q,
            u,
            z,
            seed,
            points,
            interpolate,
        } => {
            if interpolate {
                if !matches!(which, Which::G) {
                    return Err(Error::Usage("--interpolate applies to --which G only".into()));
                }
                return interpolated(fmt, order);
            }
            let base = SpecPoint {
                x: parse_rational(&x)?,
                q: parse_rational(&q)?,
                u: parse_rational(&u)?,
                z: parse_rational(&z)?,
                w: parse_rational("1")?,
            };
            let pts = match seed {
                None => vec![base],
                Some(s) => {
                    let mut rng = ChaCha8Rng::seed_from_u64(s);
                    let ok = |p: &SpecPoint| !matches!(which, Which::G) || p.admissible_for_g();
                    (0..points).map(|_| SpecPoint::random(&mut rng, ok)).collect()
                }
            };
            let mut results = Vec::new();
            for p in &pts {
                results.push((p.clone(), series(which, order, p)?));
            }
            match (fmt, seed) {
                (Format::Json, None) => print_json(&serde_json::to_value(&results[0].1)?),
                (Format::Json, Some(_)) => print_json(&json!(results
                    .iter()
                    .map(|(p, s)| json!({"point": p, "coefficients": s}))
                    .collect::<Vec<_>>())),
                (Format::Csv, _) => print_csv(
                    &["x", "q", "u", "z", "k", "coefficient"],
                    results.iter().flat_map(|(p, s)| {
                        s.coeffs().iter().enumerate().map(move |(k, c)| {
                            vec![p.x.to_string(), p.q.to_string(), p.u.to_string(), p.z.to_string(), k.to_string(), c.to_string()]
                        })
                    }),
                ),
            }
        }
        Command::Check {
            name,
            max_n,
            order,
            seed,
            points,
        } => {
            let names: Vec<CheckName> = if name == "all" {
                CheckName::ALL.to_vec()
            } else {
                name.split(',').map(str::parse).collect::<Result<_, _>>()?
            };
            let params = CheckParams {
                max_n,
                order,
                points,
                seed,
            };
            let mut reports: Vec<CheckReport> = Vec::new();
            for c in names {
                reports.push(run_check(c, params)?);
            }
            match fmt {
                Format::Json => print_json(&serde_json::to_value(&reports)?),
                Format::Csv => print_csv(
                    &["name", "verdict", "elapsed_ms", "summary", "counterexample"],
                    reports.iter().map(|r| {
                        vec![
                            r.name.clone(),
                            if r.passed() { "pass" } else { "fail" }.to_string(),
                            r.elapsed_ms.to_string(),
                            r.summary.clone(),
                            r.counterexample.as_ref().map(|c| c.to_string()).unwrap_or_default(),
                        ]
                    }),
                ),
            }
            if reports.iter().any(|r| !r.passed()) {
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn series(which: Which, order: usize, p: &SpecPoint) -> Result<TruncSeries, Error> {
    match which {
        Which::Fishburn => fishburn_series(order),
        Which::G => series_g(order, p),
        Which::Zeromax => series_zeromax(order, &p.q, &p.z),
        Which::Asczero1 => series_asczero(order, &p.u, &p.z, AsczeroVariant::Primitive),
        Which::Asczero2 => series_asczero(order, &p.u, &p.z, AsczeroVariant::Alternative),
    }
}

fn interpolated(fmt: Format, order: usize) -> Result<u8, Error> {
    let polys = interpolate_g(order)?;
    let rows = polys.iter().enumerate().flat_map(|(n, poly)| {
        poly.iter().map(move |(e, c)| (n, *e, c.to_string()))
    });
    match fmt {
        Format::Json => print_json(&json!(rows
            .map(|(n, e, c)| json!({"n": n, "rep": e[0], "max": e[1], "asc": e[2], "zero": e[3], "coefficient": c}))
            .collect::<Vec<_>>())),
        Format::Csv => print_csv(
            &["n", "rep", "max", "asc", "zero", "coefficient"],
            rows.map(|(n, e, c)| vec![n.to_string(), e[0].to_string(), e[1].to_string(), e[2].to_string(), e[3].to_string(), c]),
        ),
    }
    Ok(0)
}

fn stats(fmt: Format, object: &str, perm: bool) -> Result<(), Error> {
    let value = if perm {
        let p: Perm = object.parse()?;
        serde_json::to_value(perm_stats(&p))?
    } else {
        let s: Seq = object.parse()?;
        let mut markers = serde_json::Map::new();
        for kind in [MarkerKind::Ealm, MarkerKind::Mpair, MarkerKind::Zpair, MarkerKind::Mpos, MarkerKind::Zpos] {
            if let Ok(v) = marker(&s, kind) {
                markers.insert(format!("{kind:?}").to_lowercase(), json!(v));
            }
        }
        let mut v = serde_json::to_value(scalar_stats(&s)?)?;
        let obj = v.as_object_mut().expect("stats serialize as an object");
        obj.extend(markers);
        obj.insert("sets".into(), serde_json::to_value(set_stats(&s)?)?);
        v
    };
    match fmt {
        Format::Json => print_json(&value),
        Format::Csv => {
            let obj = value.as_object().expect("stats serialize as an object");
            let flat: Vec<(String, String)> = obj
                .iter()
                .flat_map(|(k, v)| match v {
                    Value::Object(inner) => inner.iter().map(|(k2, v2)| (k2.clone(), v2.to_string())).collect::<Vec<_>>(),
                    other => vec![(k.clone(), other.to_string())],
                })
                .collect();
            print_csv(&["statistic", "value"], flat.into_iter().map(|(k, v)| vec![k, v]));
        }
    }
    Ok(())
}

fn apply(fmt: Format, map: &str, direction: Direction, side: Option<u32>, trace: bool, object: &str) -> Result<(), Error> {
    if let Ok(m) = map.parse::<DecompMap>() {
        let s: Seq = object.parse()?;
        if trace {
            let rows: Vec<String> = m.trace(&s, direction, side)?.iter().map(|r| format!("({r})")).collect();
            match fmt {
                Format::Json => print_json(&json!(rows)),
                Format::Csv => print_csv(&["row"], rows.into_iter().map(|r| vec![r])),
            }
            return Ok(());
        }
        let r = m.apply(&s, direction, side)?;
        match fmt {
            Format::Json => print_json(&serde_json::to_value(&r)?),
            Format::Csv => print_csv(
                &["output", "side_index"],
                [vec![r.output.to_string(), r.side_index.map(|i| i.to_string()).unwrap_or_default()]],
            ),
        }
        return Ok(());
    }
    let b: NamedBijection = map
        .parse()
        .map_err(|_| Error::Usage(format!("unknown map {map:?}")))?;
    if trace || side.is_some() || direction != Direction::Forward {
        return Err(Error::Usage(format!("{b} takes no --trace, --side or --direction; use the *_inv map instead")));
    }
    let out: Obj = b.apply_str(object)?;
    match fmt {
        Format::Json => print_json(&json!({"output": out.to_string()})),
        Format::Csv => print_csv(&["output"], [vec![out.to_string()]]),
    }
    Ok(())
}
