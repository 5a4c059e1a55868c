//! The `splitkit` command line. [`run`] takes explicit input and output
//! streams so tests can drive it in-process.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 input
//! parse or domain error.

use std::io::{BufRead, Write};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::biject::{
    split_to_cover, split_to_poset, split_to_xy, unbalanced_split_to_xy, BijectionPair, LeastIndex,
    MapId, Mapped,
};
use crate::canon::Canonize;
use crate::classify::{
    balance, loyal_elements, loyal_vertices_split, omega_alpha, poset_support, s_max_partition,
    xy_isolates_universals, Balance,
};
use crate::enumerate::{enumerate, enumerate_split, enumerate_xy, Census, MAX_ENUM_N};
use crate::error::{Error, Result};
use crate::model::{iter_bits, to_json_value, ClassTag, Object};
use crate::verify::{
    verify_balance, verify_choice_independence, verify_compilation, verify_counts,
    verify_roundtrip, verify_triangle, SuiteResult,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "splitkit",
    version,
    about = "Split graphs and their relatives: census, balance, bijections, compilation"
)]
struct Cli {
    /// Worker threads for enumeration, verification and batch maps.
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Print every unlabeled object of a class on n points.
    Enumerate {
        #[arg(long)]
        class: ClassTag,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = BalanceFilter::All)]
        balance: BalanceFilter,
        /// XY only: drop graphs with an isolated Y-vertex.
        #[arg(long)]
        no_y_isolates: bool,
        #[arg(long)]
        count_only: bool,
        /// Defaults to g6 for split graphs, json otherwise.
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Balance and structure of each object read from stdin.
    Classify {
        /// Reject lines of any other class.
        #[arg(long)]
        class: Option<ClassTag>,
    },
    /// Apply a bijection (or, with --compile, a compilation map) to each stdin line.
    Map {
        /// split, cover, xy, poset, or split-shift (unbalanced split graphs on one more vertex).
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        inverse: bool,
        #[arg(long, value_enum)]
        compile: Option<Direction>,
        /// Target size for --compile up.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Apply a compilation map to each stdin line.
    Compile {
        #[arg(long)]
        class: ClassTag,
        #[arg(long, value_enum)]
        direction: Direction,
        /// Target size; required for up.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Run property suites and print one JSON report per suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long)]
        max_n: usize,
        /// Restrict roundtrip/balance to one pair (e.g. split-cover, xy-shift).
        #[arg(long)]
        pair: Option<BijectionPair>,
        /// Restrict compilation to one class.
        #[arg(long)]
        class: Option<ClassTag>,
        /// Restrict choice to one map (e.g. cover_to_split, compile_poset_down).
        #[arg(long)]
        map: Option<MapId>,
    },
    /// One row per split graph on n vertices with its images in every class.
    Gallery {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BalanceFilter {
    All,
    Balanced,
    Unbalanced,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    G6,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Down,
    Up,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Roundtrip,
    Balance,
    Compilation,
    Choice,
    Counts,
    Triangle,
    All,
}

/// A command outcome that maps to an exit code.
enum Fail {
    Usage(String),
    Input(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::Unsupported { .. } | Error::ClassMismatch { .. } => Fail::Usage(e.to_string()),
            other => Fail::Input(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Fail {
    fn from(e: std::io::Error) -> Self {
        Fail::Input(e.to_string())
    }
}

type CmdResult = std::result::Result<i32, Fail>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, S>(args: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return EXIT_OK;
            }
            eprint!("{e}");
            return EXIT_USAGE;
        }
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = cli.workers {
        if w == 0 {
            eprintln!("error: --workers must be at least 1");
            return EXIT_USAGE;
        }
        builder = builder.num_threads(w);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let lines = match cli.cmd {
        Cmd::Classify { .. } | Cmd::Map { .. } | Cmd::Compile { .. } => match input_lines(stdin) {
            Ok(l) => l,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_INPUT;
            }
        },
        _ => Vec::new(),
    };
    let mut buf = Vec::new();
    let outcome = pool.install(|| dispatch(cli.cmd, lines, &mut buf));
    if stdout.write_all(&buf).and_then(|_| stdout.flush()).is_err() {
        return EXIT_INPUT;
    }
    match outcome {
        Ok(code) => code,
        Err(Fail::Usage(m)) => {
            eprintln!("error: {m}");
            EXIT_USAGE
        }
        Err(Fail::Input(m)) => {
            eprintln!("error: {m}");
            EXIT_INPUT
        }
    }
}

fn dispatch(cmd: Cmd, lines: Lines, out: &mut Vec<u8>) -> CmdResult {
    match cmd {
        Cmd::Enumerate {
            class,
            n,
            balance,
            no_y_isolates,
            count_only,
            format,
        } => cmd_enumerate(class, n, balance, no_y_isolates, count_only, format, out),
        Cmd::Classify { class } => cmd_classify(class, lines, out),
        Cmd::Map {
            from,
            to,
            inverse,
            compile,
            n,
        } => {
            let (from, to) = if inverse { (to, from) } else { (from, to) };
            let map = resolve_map(&from, &to, compile)?;
            cmd_map(map, n, lines, out)
        }
        Cmd::Compile {
            class,
            direction,
            n,
        } => {
            let map = compile_map(class, direction);
            cmd_map(map, n, lines, out)
        }
        Cmd::Verify {
            suite,
            max_n,
            pair,
            class,
            map,
        } => cmd_verify(suite, max_n, pair, class, map, out),
        Cmd::Gallery { n, json } => cmd_gallery(n, json, out),
    }
}

fn cmd_enumerate(
    class: ClassTag,
    n: usize,
    filter: BalanceFilter,
    no_y_isolates: bool,
    count_only: bool,
    format: Option<Format>,
    out: &mut dyn Write,
) -> CmdResult {
    let format = format.unwrap_or(if class == ClassTag::Split {
        Format::G6
    } else {
        Format::Json
    });
    if format == Format::G6 && class != ClassTag::Split {
        return Err(Fail::Usage(format!(
            "g6 format is only available for split graphs, not {class}"
        )));
    }
    if no_y_isolates && class != ClassTag::Xy {
        return Err(Fail::Usage(
            "--no-y-isolates applies to --class xy only".into(),
        ));
    }
    // The header carries the counts, so the census is built before printing.
    let census = if class == ClassTag::Xy {
        enumerate_xy(n, no_y_isolates)?
    } else {
        enumerate(class, n)?
    };
    let wanted = match filter {
        BalanceFilter::All => None,
        BalanceFilter::Balanced => Some(true),
        BalanceFilter::Unbalanced => Some(false),
    };
    let entries: Vec<_> = census.filtered(wanted).collect();
    let shown = Census::from_entries(class, n, entries.iter().map(|&e| e.clone()).collect());
    writeln!(out, "{}", shown.header())?;
    if !count_only {
        for e in &shown.entries {
            match format {
                Format::G6 => writeln!(out, "{}", e.object.serialize())?,
                Format::Json => writeln!(out, "{}", to_json_value(&e.object))?,
            }
        }
    }
    Ok(EXIT_OK)
}

type Lines = Vec<(usize, String)>;

/// Numbered non-blank, non-comment lines.
fn input_lines(stdin: &mut dyn BufRead) -> std::io::Result<Lines> {
    let mut v = Vec::new();
    for (i, line) in stdin.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if !t.is_empty() && !t.starts_with('#') {
            v.push((i + 1, t.to_string()));
        }
    }
    Ok(v)
}

fn error_record(line: usize, e: &Error) -> Value {
    json!({ "line": line, "error": e.to_string() })
}

fn mask_list(mask: u64) -> Vec<usize> {
    iter_bits(mask).collect()
}

fn balance_fields(b: Balance) -> Value {
    json!({
        "balance": b.as_str(),
        "witness": b.witness().map(|w| json!({ "kind": w.kind(), "id": w.id() })),
    })
}

fn classify_one(obj: &Object) -> Result<Value> {
    let b = balance(obj)?;
    let mut v = balance_fields(b);
    let m = v.as_object_mut().expect("object");
    m.insert("class".into(), obj.class().as_str().into());
    m.insert("key".into(), obj.canonical_key().hex().into());
    match obj {
        Object::Split(g) => {
            let oa = omega_alpha(g)?;
            let p = s_max_partition(g)?;
            m.insert("omega".into(), oa.omega.into());
            m.insert("alpha".into(), oa.alpha.into());
            m.insert(
                "s_max_partition".into(),
                json!({ "k": p.k_vertices(), "s": p.s_vertices() }),
            );
            m.insert("loyal".into(), mask_list(loyal_vertices_split(g)?).into());
        }
        Object::Cover(c) => {
            m.insert("loyal".into(), json!(loyal_elements(c)));
        }
        Object::Xy(g) => {
            let (_, uni) = xy_isolates_universals(g);
            m.insert("universals".into(), mask_list(uni).into());
        }
        Object::Poset(p) => {
            let (full, partial) = poset_support(p);
            m.insert("full_support".into(), mask_list(full).into());
            m.insert("partial_support".into(), mask_list(partial).into());
        }
    }
    Ok(v)
}

fn cmd_classify(class: Option<ClassTag>, lines: Lines, out: &mut dyn Write) -> CmdResult {
    let results: Vec<Value> = lines
        .par_iter()
        .map(|(i, text)| {
            let r = Object::parse_line(text).and_then(|o| match class {
                Some(c) if c != o.class() => Err(Error::ClassMismatch {
                    expected: c,
                    found: o.class(),
                }),
                _ => classify_one(&o),
            });
            match r {
                Ok(mut v) => {
                    v.as_object_mut()
                        .expect("object")
                        .insert("line".into(), (*i).into());
                    v
                }
                Err(e) => error_record(*i, &e),
            }
        })
        .collect();
    emit_records(results, out)
}

fn emit_records(records: Vec<Value>, out: &mut dyn Write) -> CmdResult {
    let mut code = EXIT_OK;
    for r in records {
        if r.get("error").is_some() {
            code = EXIT_INPUT;
        }
        writeln!(out, "{r}")?;
    }
    Ok(code)
}

fn resolve_map(
    from: &str,
    to: &str,
    compile: Option<Direction>,
) -> std::result::Result<MapId, Fail> {
    if let Some(d) = compile {
        if from != to {
            return Err(Fail::Usage(
                "--compile needs --from and --to to name the same class".into(),
            ));
        }
        let class: ClassTag = from
            .parse()
            .map_err(|e: Error| Fail::Usage(e.to_string()))?;
        return Ok(compile_map(class, d));
    }
    let map = match (from, to) {
        ("split", "cover") => MapId::SplitToCover,
        ("cover", "split") => MapId::CoverToSplit,
        ("split", "xy") => MapId::SplitToXy,
        ("xy", "split") => MapId::XyToSplit,
        ("split", "poset") => MapId::SplitToPoset,
        ("poset", "split") => MapId::PosetToSplit,
        ("xy", "split-shift") => MapId::XyToUnbalancedSplit,
        ("split-shift", "xy") => MapId::UnbalancedSplitToXy,
        ("cover", "poset") => MapId::CoverToPoset,
        ("poset", "cover") => MapId::PosetToCover,
        ("xy", "cover") => MapId::XyToCover,
        ("cover", "xy") => MapId::CoverToXy,
        ("xy", "poset") => MapId::XyToPoset,
        ("poset", "xy") => MapId::PosetToXy,
        _ => return Err(Fail::Usage(format!("no map from {from} to {to}"))),
    };
    Ok(map)
}

fn compile_map(class: ClassTag, d: Direction) -> MapId {
    match d {
        Direction::Down => MapId::CompileDown(class),
        Direction::Up => MapId::CompileUp(class),
    }
}

fn map_record(line: usize, map: MapId, m: &Mapped<Object>) -> Value {
    let choices: Vec<Value> = m
        .report
        .choices
        .iter()
        .map(|c| json!({ "point": c.point.name(), "index": c.index, "admissible": c.admissible }))
        .collect();
    json!({
        "line": line,
        "output": to_json_value(&m.output),
        "report": {
            "map": map.name(),
            "input_key": m.report.input_key.hex(),
            "output_key": m.report.output_key.hex(),
            "choices": choices,
        },
    })
}

fn cmd_map(map: MapId, n: Option<usize>, lines: Lines, out: &mut dyn Write) -> CmdResult {
    let target = match (map, n) {
        (MapId::CompileUp(_), None) => {
            return Err(Fail::Usage("--n is required for compiling up".into()))
        }
        (_, n) => n.unwrap_or(0),
    };
    let results: Vec<Value> = lines
        .par_iter()
        .map(|(i, text)| {
            match Object::parse_line(text).and_then(|o| map.apply(&o, target, &mut LeastIndex)) {
                Ok(m) => map_record(*i, map, &m),
                Err(e) => error_record(*i, &e),
            }
        })
        .collect();
    emit_records(results, out)
}

fn cmd_verify(
    suite: Suite,
    max_n: usize,
    pair: Option<BijectionPair>,
    class: Option<ClassTag>,
    map: Option<MapId>,
    out: &mut dyn Write,
) -> CmdResult {
    let pairs = |all: &[BijectionPair]| pair.map_or_else(|| all.to_vec(), |p| vec![p]);
    // The shift pairs XY-graphs on n points with split graphs on n + 1.
    let pair_n = |p: BijectionPair| {
        if p == BijectionPair::XyShift {
            max_n.saturating_sub(1)
        } else {
            max_n
        }
    };
    let mut results: Vec<SuiteResult> = Vec::new();
    let wants = |s: Suite| suite == s || (suite == Suite::All && s != Suite::Triangle);
    if wants(Suite::Roundtrip) {
        for p in pairs(&BijectionPair::ALL) {
            results.push(verify_roundtrip(p, pair_n(p))?);
        }
    }
    if wants(Suite::Balance) {
        for p in pairs(&BijectionPair::ALL) {
            results.push(verify_balance(p, pair_n(p))?);
        }
    }
    if wants(Suite::Compilation) {
        for c in class.map_or_else(|| ClassTag::ALL.to_vec(), |c| vec![c]) {
            for n in 0..=max_n {
                results.push(verify_compilation(c, n)?);
            }
        }
    }
    if wants(Suite::Choice) {
        for m in map.map_or_else(MapId::all, |m| vec![m]) {
            let n = if m == MapId::XyToUnbalancedSplit {
                max_n.saturating_sub(1)
            } else {
                max_n
            };
            results.push(verify_choice_independence(m, n)?);
        }
    }
    if wants(Suite::Counts) {
        let r = verify_counts(max_n)?;
        if let Some(rows) = r.data.as_ref().and_then(Value::as_array) {
            writeln!(out, "# n split balanced unbalanced cumulative xy_all")?;
            for row in rows {
                writeln!(
                    out,
                    "# {} {} {} {} {} {}",
                    row["n"],
                    row["split"]["total"],
                    row["split"]["balanced"],
                    row["split"]["unbalanced"],
                    row["cumulative"],
                    row["xy_all"]
                )?;
            }
        }
        results.push(r);
    }
    if suite == Suite::Triangle {
        results.push(verify_triangle(max_n)?);
    }
    let mut code = EXIT_OK;
    for r in &results {
        if r.fails_run() {
            code = EXIT_FAILED;
        }
        writeln!(out, "{}", r.to_json())?;
    }
    Ok(code)
}

struct GalleryRow {
    balance: Balance,
    split: Object,
    key: String,
    cover: Object,
    poset: Object,
    xy: Object,
    shift: Option<Object>,
}

fn gallery_rows(n: usize) -> Result<Vec<GalleryRow>> {
    let census = enumerate_split(n)?;
    let mut rows = census
        .entries
        .par_iter()
        .map(|e| {
            let g = e.object.as_split()?;
            let b = e.balance.expect("split graphs always have a balance");
            let shift = if b.is_balanced() {
                None
            } else {
                Some(unbalanced_split_to_xy(g)?.output.into())
            };
            Ok(GalleryRow {
                balance: b,
                split: e.object.clone(),
                key: e.key.hex(),
                cover: split_to_cover(g)?.output.into(),
                poset: split_to_poset(g)?.output.into(),
                xy: split_to_xy(g)?.output.into(),
                shift,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    // Unbalanced first; within a group the census (key) order is kept.
    rows.sort_by_key(|r| r.balance.is_balanced());
    Ok(rows)
}

fn cmd_gallery(n: usize, as_json: bool, out: &mut dyn Write) -> CmdResult {
    if n > MAX_ENUM_N {
        return Err(Error::Unsupported {
            what: "gallery",
            n,
            bound: MAX_ENUM_N,
        }
        .into());
    }
    let rows = gallery_rows(n)?;
    let unb = rows.iter().filter(|r| !r.balance.is_balanced()).count();
    writeln!(
        out,
        "# gallery n={n} rows={} balanced={} unbalanced={unb}",
        rows.len(),
        rows.len() - unb
    )?;
    for (i, r) in rows.iter().enumerate() {
        if as_json {
            let v = json!({
                "row": i + 1,
                "balance": r.balance.as_str(),
                "key": r.key,
                "split": to_json_value(&r.split),
                "cover": to_json_value(&r.cover),
                "poset": to_json_value(&r.poset),
                "xy": to_json_value(&r.xy),
                "shift_xy": r.shift.as_ref().map(to_json_value),
            });
            writeln!(out, "{v}")?;
        } else {
            let shift = r
                .shift
                .as_ref()
                .map_or_else(|| "-".to_string(), Object::serialize);
            writeln!(
                out,
                "{:>3}  {:<10}  {:<8}  {}  {}  {}  {}",
                i + 1,
                r.balance.as_str(),
                r.split.serialize(),
                r.cover.serialize(),
                r.poset.serialize(),
                r.xy.serialize(),
                shift
            )?;
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String) {
        let mut out = Vec::new();
        let argv = std::iter::once("splitkit").chain(args.iter().copied());
        let code = run(argv, &mut input.as_bytes(), &mut out);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn enumerate_counts() {
        let (c, o) = call(
            &["enumerate", "--class", "split", "--n", "4", "--count-only"],
            "",
        );
        assert_eq!(c, 0);
        assert!(o.contains("count=9 balanced=1 unbalanced=8"), "{o}");
        let (_, o) = call(
            &["enumerate", "--class", "xy", "--n", "3", "--count-only"],
            "",
        );
        assert!(o.contains("count=8"), "{o}");
        let (_, o) = call(
            &["enumerate", "--class", "poset", "--n", "0", "--count-only"],
            "",
        );
        assert!(o.contains("count=1"), "{o}");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(
            call(
                &[
                    "enumerate",
                    "--class",
                    "cover",
                    "--n",
                    "3",
                    "--format",
                    "g6"
                ],
                ""
            )
            .0,
            EXIT_USAGE
        );
        assert_eq!(
            call(&["enumerate", "--class", "split", "--n", "9"], "").0,
            EXIT_USAGE
        );
        assert_eq!(call(&["bogus"], "").0, EXIT_USAGE);
        assert_eq!(
            call(&["map", "--from", "split", "--to", "banana"], "").0,
            EXIT_USAGE
        );
    }

    #[test]
    fn classify_lines() {
        let (c, o) = call(&["classify"], "Ch\n");
        assert_eq!(c, 0);
        let v: Value = serde_json::from_str(o.trim()).unwrap();
        assert_eq!(
            (
                v["balance"].as_str(),
                v["omega"].as_u64(),
                v["alpha"].as_u64()
            ),
            (Some("balanced"), Some(2), Some(2))
        );
        let (c, o) = call(
            &["classify"],
            "Ch\nCh\n{\"class\":\"cover\",\"n\":3,\"sets\":[[0,1],[0,1,2]]}\n",
        );
        assert_eq!(c, EXIT_INPUT);
        assert!(o.lines().nth(2).unwrap().contains("not minimal"), "{o}");
        // C4.
        let (c, o) = call(&["classify"], "Cl\n");
        assert_eq!(c, EXIT_INPUT);
        assert!(o.contains("not a split graph"), "{o}");
    }

    #[test]
    fn map_and_compile() {
        let p3 = crate::canon::canon_graph(&crate::model::Graph::path(3))
            .key
            .hex();
        let (c, o) = call(&["map", "--from", "split", "--to", "cover"], "Bg\n");
        assert_eq!(c, 0, "{o}");
        let v: Value = serde_json::from_str(o.trim()).unwrap();
        let cover = crate::model::SetCover::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        assert_eq!(
            v["report"]["output_key"],
            crate::canon::canon_cover(&cover).hex()
        );
        let (c, o) = call(
            &["map", "--from", "xy", "--to", "split-shift"],
            "{\"class\":\"xy\",\"nx\":1,\"ny\":1,\"edges\":[[0,0]]}\n",
        );
        assert_eq!(c, 0, "{o}");
        assert!(o.contains(&p3), "{o}");
        let (c, _) = call(
            &[
                "map",
                "--from",
                "split",
                "--to",
                "split",
                "--compile",
                "down",
            ],
            "Ch\n",
        );
        assert_eq!(c, EXIT_INPUT);
        let (c, o) = call(
            &["compile", "--class", "split", "--direction", "down"],
            "Cs\n",
        );
        assert_eq!(c, 0, "{o}");
        assert!(o.contains(&p3), "{o}");
        let (c, o) = call(
            &[
                "compile",
                "--class",
                "poset",
                "--direction",
                "up",
                "--n",
                "2",
            ],
            "{\"class\":\"poset\",\"n0\":0,\"n1\":0,\"below\":[]}\n",
        );
        assert_eq!(c, 0, "{o}");
        assert!(o.contains("\"n0\":2"), "{o}");
        let (_, o) = call(
            &["compile", "--class", "split", "--direction", "down"],
            "@\n",
        );
        assert!(o.contains("\"output\":\"?\""), "{o}");
    }

    #[test]
    fn verify_and_gallery() {
        let (c, o) = call(&["verify", "--suite", "counts", "--max-n", "6"], "");
        assert_eq!(c, 0, "{o}");
        assert!(o.contains("# 6 56 18 38 38 94"), "{o}");
        let (c, _) = call(&["verify", "--suite", "roundtrip", "--max-n", "0"], "");
        assert_eq!(c, 0);
        let (c, o) = call(&["gallery", "--n", "4"], "");
        assert_eq!(c, 0);
        assert_eq!(o.lines().count(), 10);
        assert!(o.lines().last().unwrap().contains("balanced"));
        assert_eq!(call(&["gallery", "--n", "1"], "").1.lines().count(), 2);
        assert_eq!(call(&["gallery", "--n", "3"], "").1.lines().count(), 5);
    }
}
