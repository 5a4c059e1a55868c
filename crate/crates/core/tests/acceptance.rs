//! The acceptance criteria, one pass/fail line each. Runs without the test
//! harness so the lines always reach stdout.

use std::collections::HashMap;
use std::time::Instant;

use splitkit::biject::{BijectionPair, MapId};
use splitkit::canon::{canon_matrix, is_isomorphic, Canonize};
use splitkit::enumerate::{count_table, enumerate, enumerate_split, enumerate_xy, naive_oracle};
use splitkit::model::{BitMatrix, ClassTag, Graph, Object};
use splitkit::verify::{
    verify_balance, verify_choice_independence, verify_compilation, verify_roundtrip, SuiteResult,
    UNBALANCED_SPLIT_COUNTS,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let argv = std::iter::once("splitkit").chain(args.iter().copied());
    let code = splitkit::cli::run(argv, &mut std::io::empty(), &mut out);
    (code, String::from_utf8(out).expect("utf-8 output"))
}

fn suites(results: Vec<SuiteResult>) -> Outcome {
    let checked: usize = results.iter().map(|r| r.checked).sum();
    match results.iter().find(|r| !r.passed()) {
        None => Ok(format!(
            "{} suites, {checked} objects checked, 0 failures",
            results.len()
        )),
        Some(r) => Err(r.to_json()),
    }
}

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn err(e: splitkit::Error) -> String {
    e.to_string()
}

fn c1_split_totals() -> Outcome {
    let start = Instant::now();
    let expected = [1, 1, 2, 4, 9, 21, 56, 164];
    let totals: Vec<usize> = (0..=7)
        .map(|n| enumerate_split(n).map(|c| c.len()))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    check(totals == expected, || format!("totals {totals:?}"))?;
    for n in 0..=3 {
        let oracle = naive_oracle(ClassTag::Split, n).map_err(err)?;
        let census = enumerate_split(n).map_err(err)?;
        check(oracle.keys() == census.keys(), || {
            format!("oracle disagrees at n={n}")
        })?;
    }
    // total(n) = unbalanced(n + 1) - unbalanced(n), from the compilation identity.
    for n in 5..=7 {
        let derived = UNBALANCED_SPLIT_COUNTS[n] - UNBALANCED_SPLIT_COUNTS[n - 1];
        check(totals[n] == derived, || {
            format!("n={n}: {} vs derived {derived}", totals[n])
        })?;
    }
    let secs = start.elapsed().as_secs_f64();
    check(secs <= 300.0, || format!("took {secs:.1}s"))?;
    Ok(format!("totals n=0..7 {totals:?} in {secs:.2}s"))
}

fn c2_unbalanced() -> Outcome {
    let got: Vec<usize> = (1..=8)
        .map(|n| enumerate_split(n).map(|c| c.unbalanced))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    check(got == UNBALANCED_SPLIT_COUNTS, || {
        format!("unbalanced {got:?}")
    })?;
    Ok(format!("unbalanced n=1..8 {got:?}"))
}

fn c3_cross_class() -> Outcome {
    let table = count_table(6).map_err(err)?;
    for r in &table {
        check(r.classes_agree(), || format!("{r:?}"))?;
    }
    let cols: Vec<_> = table
        .iter()
        .map(|r| (r.split.total, r.split.balanced, r.split.unbalanced))
        .collect();
    Ok(format!("(total, balanced, unbalanced) n=0..6 {cols:?}"))
}

fn c4_gallery() -> Outcome {
    let (code, out) = cli(&["gallery", "--n", "4"]);
    check(code == 0, || format!("gallery exit {code}"))?;
    let rows: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
    let status = |r: &&str| r.split_whitespace().nth(1).map(str::to_string);
    let unb = rows
        .iter()
        .filter(|r| status(r).as_deref() == Some("unbalanced"))
        .count();
    let bal: Vec<&&str> = rows
        .iter()
        .filter(|r| status(r).as_deref() == Some("balanced"))
        .collect();
    check(rows.len() == 9 && unb == 8 && bal.len() == 1, || {
        out.clone()
    })?;
    check(rows[..8].iter().all(|r| r.contains("unbalanced")), || {
        "unbalanced rows not first".into()
    })?;
    let g6 = bal[0]
        .split_whitespace()
        .nth(2)
        .ok_or("missing graph column")?;
    let g = Object::parse_line(g6).map_err(err)?;
    check(
        is_isomorphic(&g, &Object::Split(Graph::path(4))) == Ok(true),
        || format!("balanced row {g6} is not P4"),
    )?;
    let (code, out) = cli(&["enumerate", "--class", "xy", "--n", "3"]);
    let objects = out.lines().filter(|l| !l.starts_with('#')).count();
    check(code == 0 && objects == 8, || {
        format!("xy n=3 gave {objects} objects")
    })?;
    Ok(format!("gallery 9 rows, 8 unbalanced, balanced row {g6} isomorphic to P4; xy n=3 has {objects} objects"))
}

fn c5_roundtrip() -> Outcome {
    let mut results = Vec::new();
    for pair in BijectionPair::ALL {
        let max_n = if pair == BijectionPair::XyShift { 5 } else { 6 };
        results.push(verify_roundtrip(pair, max_n).map_err(err)?);
    }
    suites(results)
}

fn c6_balance() -> Outcome {
    let results = BijectionPair::BALANCED
        .iter()
        .map(|&p| verify_balance(p, 6))
        .collect::<Result<Vec<_>, _>>();
    suites(results.map_err(err)?)
}

fn c7_compilation() -> Outcome {
    let mut results = Vec::new();
    for class in ClassTag::ALL {
        let mut cumulative = 0;
        for n in 0..=6 {
            results.push(verify_compilation(class, n).map_err(err)?);
            let census = enumerate(class, n).map_err(err)?;
            if n > 0 {
                check(cumulative == census.unbalanced, || {
                    format!("{class} n={n}: {cumulative} != {}", census.unbalanced)
                })?;
            }
            cumulative += census.len();
        }
    }
    suites(results)
}

fn c8_choices() -> Outcome {
    let mut results = Vec::new();
    for map in MapId::all() {
        results.push(verify_choice_independence(map, 5).map_err(err)?);
    }
    let seqs: u64 = results
        .iter()
        .filter_map(|r| r.data.as_ref()?["choice_sequences"].as_u64())
        .sum();
    suites(results).map(|s| format!("{s}; n <= 5, {seqs} choice sequences"))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Least edge code over all relabelings.
fn graph_orbit(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let n = g.n();
    perms
        .iter()
        .map(|p| {
            edges.iter().fold(0u64, |c, &(u, v)| {
                let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                c | 1 << (a * n + b)
            })
        })
        .min()
        .unwrap()
}

fn matrix_orbit(m: &BitMatrix, rp: &[Vec<usize>], cp: &[Vec<usize>]) -> u64 {
    let c = m.cols();
    let ones: Vec<(usize, usize)> = (0..m.rows())
        .flat_map(|i| (0..c).map(move |j| (i, j)))
        .filter(|&(i, j)| m.get(i, j))
        .collect();
    let mut best = u64::MAX;
    for r in rp {
        for s in cp {
            best = best.min(
                ones.iter()
                    .fold(0u64, |code, &(i, j)| code | 1 << (r[i] * c + s[j])),
            );
        }
    }
    best
}

/// The key partition and the orbit partition coincide when each key maps to
/// one orbit and each orbit to one key.
fn same_partition<K: std::hash::Hash + Eq + Clone>(
    pairs: impl Iterator<Item = (K, u64)>,
) -> Result<usize, String> {
    let (mut by_key, mut by_orbit) = (HashMap::new(), HashMap::new());
    let mut count = 0;
    for (k, o) in pairs {
        count += 1;
        if *by_key.entry(k.clone()).or_insert(o) != o {
            return Err("one key covers two orbits".into());
        }
        if *by_orbit.entry(o).or_insert(k.clone()) != k {
            return Err("one orbit has two keys".into());
        }
    }
    Ok(count)
}

fn c9_canon() -> Outcome {
    let mut graphs = 0;
    for n in 0..=6 {
        let perms = permutations(n);
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let all = (0..1u64 << pairs.len()).map(|code| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| code >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(n, &edges);
            (g.canonical_key(), graph_orbit(&g, &perms))
        });
        graphs += same_partition(all).map_err(|e| format!("graphs n={n}: {e}"))?;
    }
    let mut matrices = 0;
    for r in 0..=4 {
        for c in 0..=4 {
            let (rp, cp) = (permutations(r), permutations(c));
            let all = (0..1u64 << (r * c)).map(|code| {
                let rows = (0..r).map(|i| (code >> (i * c)) & ((1 << c) - 1)).collect();
                let m = BitMatrix::from_rows(c, rows);
                (canon_matrix(&m).bits, matrix_orbit(&m, &rp, &cp))
            });
            matrices += same_partition(all).map_err(|e| format!("matrices {r}x{c}: {e}"))?;
        }
    }
    Ok(format!(
        "{graphs} labeled graphs n<=6, {matrices} matrices up to 4x4"
    ))
}

fn c10_determinism() -> Outcome {
    let commands: [&[&str]; 7] = [
        &["enumerate", "--class", "split", "--n", "7"],
        &["enumerate", "--class", "cover", "--n", "6"],
        &["enumerate", "--class", "xy", "--n", "6"],
        &["enumerate", "--class", "poset", "--n", "6"],
        &["verify", "--suite", "all", "--max-n", "5"],
        &["verify", "--suite", "triangle", "--max-n", "5"],
        &["gallery", "--n", "6"],
    ];
    for cmd in commands {
        let outs: Vec<(i32, String)> = ["1", "8"]
            .iter()
            .map(|w| {
                let mut args = vec!["--workers", w];
                args.extend_from_slice(cmd);
                cli(&args)
            })
            .collect();
        check(outs[0] == outs[1], || {
            format!("{cmd:?} differs between 1 and 8 workers")
        })?;
        check(outs[0].0 == 0, || format!("{cmd:?} exited {}", outs[0].0))?;
    }
    let wide = enumerate_xy(7, false).map_err(err)?;
    let narrow = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| enumerate_xy(7, false));
    check(Ok(wide) == narrow, || {
        "enumerate_xy(7) differs on one thread".into()
    })?;
    Ok(format!(
        "{} commands byte-identical with 1 and 8 workers",
        commands.len()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("split census totals n=0..7", c1_split_totals),
        ("unbalanced split counts n=1..8", c2_unbalanced),
        ("cross-class equality n<=6", c3_cross_class),
        ("four-vertex gallery and xy n=3", c4_gallery),
        ("round trips, seven pairs", c5_roundtrip),
        ("balance preservation, six pairs", c6_balance),
        ("compilation, four classes n<=6", c7_compilation),
        ("choice independence", c8_choices),
        ("canonical keys vs brute-force orbits", c9_canon),
        ("determinism across worker counts", c10_determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match f() {
            Ok(detail) => println!(
                "criterion {:>2} PASS  {name}: {detail} [{:.2}s]",
                i + 1,
                start.elapsed().as_secs_f64()
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
