//! Acceptance suite. Prints one PASS/FAIL line per criterion, with its items
//! indented below, and exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use signed_spectra::atlas::{enumerate_switching_classes, enumerate_underlying, scan, ScanFilters, ScanOptions};
use signed_spectra::invariants::{
    balanced_cliques, frustration_index, motzkin_straus_value, random_l1_vector, triangle_counts,
    weighted_form_value,
};
use signed_spectra::linalg::det_exact;
use signed_spectra::spectra::{
    adjacency_matrix, adjacency_spectrum, cycle_spectrum, incidence_matrix, laplacian_matrix,
    laplacian_spectrum, Orientation,
};
use signed_spectra::tol::TAU_DET;
use signed_spectra::{generate, to_sgr, Family, FamilySpec, Sign, SignedGraph, SwitchingFunction, TheoremId, Verdict};

type Criterion = (&'static str, fn() -> Vec<Item>);

struct Item {
    name: String,
    ok: bool,
    note: String,
}

fn item(name: impl Into<String>, ok: bool, note: impl Into<String>) -> Item {
    Item {
        name: name.into(),
        ok,
        note: note.into(),
    }
}

fn gen(f: Family, p: &[usize]) -> SignedGraph {
    generate(&FamilySpec::new(f, p)).unwrap()
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn census(n_max: usize) -> Vec<SignedGraph> {
    (1..=n_max)
        .flat_map(|n| enumerate_underlying(n).unwrap())
        .flat_map(|u| enumerate_switching_classes(&u).unwrap())
        .collect()
}

// criterion 1

fn named_values() -> Vec<Item> {
    let mut items = Vec::new();
    let limit = Duration::from_secs(1);

    let (l1, t) = timed(|| adjacency_spectrum(&gen(Family::Fig4Gamma2, &[])).unwrap().largest());
    items.push(item(
        "lambda_1(fig4_gamma2) ~ 2.391 (1e-3)",
        (l1 - 2.391).abs() < 1e-3 && t < limit,
        format!("got {l1:.6}"),
    ));

    for (variant, want) in [(1, 1.629), (2, 1.732)] {
        let (l2, t) = timed(|| adjacency_spectrum(&gen(Family::H2Variant, &[variant])).unwrap().values[1]);
        items.push(item(
            format!("lambda_2(h2_variant {variant}) ~ {want} (1e-3)"),
            (l2 - want).abs() < 1e-3 && t < limit,
            format!("got {l2:.6}"),
        ));
    }

    let (k4, t) = timed(|| {
        let g = gen(Family::K4OneNegative, &[]);
        let s = adjacency_spectrum(&g).unwrap();
        let (eps, _) = frustration_index(&g).unwrap();
        (s.largest(), s.smallest(), balanced_cliques(&g).omega_b, eps, triangle_counts(&g))
    });
    let (l1, l4, omega, eps, (tp, tn)) = k4;
    let r5 = 5f64.sqrt();
    items.push(item(
        "k4_one_negative: lambda_1 = |lambda_4| = sqrt 5 (1e-9), omega_b = 3, eps = 1, t+ = t- = 2",
        (l1 - r5).abs() < 1e-9 && (l4.abs() - r5).abs() < 1e-9 && omega == 3 && eps == 1 && tp == 2 && tn == 2 && t < limit,
        format!("lambda_1 {l1:.12}, lambda_4 {l4:.12}, omega_b {omega}, eps {eps}, t {tp}/{tn}"),
    ));

    let (worst, t) = timed(|| {
        let mut worst = 0f64;
        for n in 3..=12 {
            for r in 0..=n {
                let a = adjacency_spectrum(&gen(Family::SignedCycle, &[n, r])).unwrap().values;
                let b = cycle_spectrum(n, r).unwrap().values;
                worst = a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(worst, f64::max);
            }
        }
        worst
    });
    items.push(item(
        "cycle_spectrum vs eigensolver, 3 <= n <= 12, 0 <= r <= n (1e-9)",
        worst < 1e-9 && t < limit,
        format!("max deviation {worst:.2e}"),
    ));
    items
}

// criterion 2

fn exhaustive_scans() -> Vec<Item> {
    let connected = ScanFilters {
        connected_only: true,
        ..Default::default()
    };
    let unbalanced = ScanFilters {
        unbalanced_only: true,
        ..Default::default()
    };
    let runs = [
        (TheoremId::Ad1, ScanFilters::default()),
        (TheoremId::Ad2, ScanFilters::default()),
        (TheoremId::KanLemma, ScanFilters::default()),
        (TheoremId::LapDegreeSums, connected),
        (TheoremId::Lp1, ScanFilters::default()),
        (TheoremId::Grone, connected),
        (TheoremId::BalancingDeletion, unbalanced),
        (TheoremId::CorollaryMu1, ScanFilters::default()),
        (TheoremId::CorollaryMu1mu2, ScanFilters::default()),
        (TheoremId::BoundComparison, ScanFilters::default()),
    ];
    runs.into_iter()
        .map(|(t, filters)| {
            let options = ScanOptions {
                filters,
                ..Default::default()
            };
            let out = scan(t, 6, &options, None).unwrap();
            let s = &out.summary;
            let v = s.count(Verdict::Violation);
            item(
                format!("{t} at n <= 6: zero violations"),
                v == 0,
                format!(
                    "{} graphs; holds {}, equality {}, exceptional {}, near_tie {}, hypothesis_fail {}, violation {v}",
                    s.graphs,
                    s.count(Verdict::Holds),
                    s.count(Verdict::Equality),
                    s.count(Verdict::Exceptional),
                    s.count(Verdict::NearTie),
                    s.count(Verdict::HypothesisFail),
                ),
            )
        })
        .collect()
}

// criterion 3

/// Sign consistency by BFS 2-colouring of the signs.
fn oracle_balanced(g: &SignedGraph) -> bool {
    let n = g.order();
    let mut colour: Vec<Option<i64>> = vec![None; n];
    for root in 0..n {
        if colour[root].is_some() {
            continue;
        }
        colour[root] = Some(1);
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for w in 0..n {
                let s = g.entry(u, w);
                if s == 0 {
                    continue;
                }
                let want = colour[u].unwrap() * s;
                match colour[w] {
                    None => {
                        colour[w] = Some(want);
                        stack.push(w);
                    }
                    Some(c) if c != want => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// Balanced; non-isolated part complete multipartite with 2 parts, or with
/// >= 3 parts of one size.
fn oracle_ad1_family(g: &SignedGraph) -> bool {
    if g.size() == 0 || !oracle_balanced(g) {
        return false;
    }
    let active: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) > 0).collect();
    let apart = |a: usize, b: usize| a != b && !g.is_adjacent(a, b);
    for &a in &active {
        for &b in &active {
            for &c in &active {
                if a != c && apart(a, b) && apart(b, c) && !apart(a, c) {
                    return false;
                }
            }
        }
    }
    let mut sizes = Vec::new();
    let mut seen = BTreeSet::new();
    for &a in &active {
        if seen.insert(a) {
            let part: Vec<usize> = active.iter().copied().filter(|&b| apart(a, b)).collect();
            seen.extend(part.iter().copied());
            sizes.push(part.len() + 1);
        }
    }
    sizes.len() == 2 || sizes.iter().all(|&s| s == sizes[0])
}

/// Non-isolated part is a 5-cycle whose sign product is positive.
fn oracle_pentagon(g: &SignedGraph) -> bool {
    let active: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) > 0).collect();
    if active.len() != 5 || g.size() != 5 || active.iter().any(|&v| g.degree(v) != 2) {
        return false;
    }
    // walk the cycle from the first active vertex
    let (mut prev, mut cur, mut steps, mut product) = (usize::MAX, active[0], 0, 1);
    loop {
        let next = (0..g.order()).find(|&w| w != prev && g.is_adjacent(cur, w)).unwrap();
        product *= g.entry(cur, next);
        prev = cur;
        cur = next;
        steps += 1;
        if cur == active[0] {
            break;
        }
    }
    steps == 5 && product == 1
}

fn verdict_set(t: TheoremId, n_max: usize, options: &ScanOptions, v: Verdict) -> BTreeSet<String> {
    scan(t, n_max, options, None)
        .unwrap()
        .records
        .into_iter()
        .filter(|r| r.report.verdict == v)
        .map(|r| to_sgr(&r.graph))
        .collect()
}

fn censuses() -> Vec<Item> {
    let mut items = Vec::new();

    let found = verdict_set(TheoremId::Ad1, 6, &ScanOptions::default(), Verdict::Equality);
    let expected: BTreeSet<String> = census(6).iter().filter(|g| oracle_ad1_family(g)).map(to_sgr).collect();
    items.push(item(
        "ad1 equality verdicts at n <= 6 = balanced complete bipartite / regular multipartite (+ isolated)",
        found == expected,
        format!("{} equality verdicts, {} family members, {} in common", found.len(), expected.len(), found.intersection(&expected).count()),
    ));

    let options = ScanOptions {
        filters: ScanFilters {
            nonbipartite_only: true,
            ..Default::default()
        },
        allow_n7: true,
        ..Default::default()
    };
    let found = verdict_set(TheoremId::Ad2, 7, &options, Verdict::Exceptional);
    let expected: BTreeSet<String> = census(7).iter().filter(|g| oracle_pentagon(g)).map(to_sgr).collect();
    items.push(item(
        "ad2 exceptional verdicts at n <= 7 = class of (C5,+) plus isolated vertices",
        found == expected && found.len() == 3,
        format!("{} exceptional verdicts, {} class members", found.len(), expected.len()),
    ));
    items
}

// criterion 4

fn variational() -> Vec<Item> {
    let graphs = census(5);
    let mut worst_ms = 0f64;
    let mut worst_f = f64::MIN;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for (i, g) in graphs.iter().enumerate() {
        let cliques = balanced_cliques(g);
        let target = 1.0 - 1.0 / cliques.omega_b as f64;
        let (value, _) = motzkin_straus_value(g, 50, i as u64).unwrap();
        worst_ms = worst_ms.max((value - target).abs());
        if g.size() > 0 {
            for _ in 0..10_000 {
                let x = random_l1_vector(g.order(), &mut rng);
                worst_f = worst_f.max(weighted_form_value(g, &cliques, &x));
            }
        }
    }
    vec![
        item(
            format!("max x^T A x over the L1 sphere = 1 - 1/omega_b within 1e-6 ({} graphs, 50 restarts)", graphs.len()),
            worst_ms <= 1e-6,
            format!("max deviation {worst_ms:.2e}"),
        ),
        item(
            "weighted form F(x) <= 1 + 1e-6 over 10^4 random L1 vectors per graph",
            worst_f <= 1.0 + 1e-6,
            format!("max F {worst_f:.9}"),
        ),
    ]
}

// criterion 5

fn signed_graph(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0u8..3, n * (n - 1) / 2).prop_map(move |cells| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges = pairs.zip(cells).filter(|&(_, c)| c > 0).map(|((u, v), c)| {
                (u, v, if c == 1 { Sign::Positive } else { Sign::Negative })
            });
            SignedGraph::from_edge_list(n, edges).unwrap()
        })
    })
}

fn bits(max_n: usize) -> impl Strategy<Value = (SignedGraph, Vec<bool>, Vec<bool>)> {
    signed_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), prop::collection::vec(any::<bool>(), n), prop::collection::vec(any::<bool>(), n))
    })
}

fn set(b: &[bool]) -> Vec<usize> {
    (0..b.len()).filter(|&i| b[i]).collect()
}

fn check(cond: bool, what: &str) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(what.to_string()))
    }
}

fn property<S: Strategy>(name: &str, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Item {
    let config = Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    let ran = AtomicUsize::new(0);
    let result = runner.run(&strategy, |v| {
        ran.fetch_add(1, Ordering::Relaxed);
        test(v)
    });
    let ran = ran.into_inner();
    match result {
        Ok(()) => item(name, ran >= 1000, format!("{ran} cases")),
        Err(e) => item(name, false, format!("{e} after {ran} cases")),
    }
}

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

fn structural() -> Vec<Item> {
    vec![
        property("switching involution and composition", bits(8), |(g, a, b)| {
            let (s, t) = (set(&a), set(&b));
            check(g.switch(&s).unwrap().switch(&s).unwrap() == g, "involution")?;
            let n = g.order();
            let (fa, fb) = (SwitchingFunction::from_set(n, &s).unwrap(), SwitchingFunction::from_set(n, &t).unwrap());
            check(
                g.switch_by(&fa).unwrap().switch_by(&fb).unwrap() == g.switch_by(&fa.compose(&fb)).unwrap(),
                "composition",
            )
        }),
        property("spectra invariant under switching (1e-8)", bits(8), |(g, a, _)| {
            let h = g.switch(&set(&a)).unwrap();
            check(close(&adjacency_spectrum(&g).unwrap().values, &adjacency_spectrum(&h).unwrap().values, 1e-8), "adjacency")?;
            check(close(&laplacian_spectrum(&g).unwrap().values, &laplacian_spectrum(&h).unwrap().values, 1e-8), "laplacian")
        }),
        property(
            "P P^T = L for random orientations (exact)",
            (signed_graph(8), prop::collection::vec(any::<bool>(), 28)),
            |(g, heads)| {
                let mut i = 0;
                let o = Orientation::from_fn(&g, |u, v| {
                    i += 1;
                    if heads[i - 1] { u } else { v }
                })
                .unwrap();
                let p = incidence_matrix(&g, &o).unwrap();
                check(p.matmul(&p.transpose()) == laplacian_matrix(&g), "P P^T != L")
            },
        ),
        property("trace(A^3) = 6 (t+ - t-) (exact)", signed_graph(8), |g| {
            let a = adjacency_matrix(&g);
            let (tp, tn) = triangle_counts(&g);
            check(a.matmul(&a).matmul(&a).trace() == 6 * (tp as i64 - tn as i64), "trace")
        }),
        property("det L = 0 iff balanced, connected graphs (exact and tau_det)", signed_graph(7), |g| {
            if !g.is_connected() {
                return Ok(());
            }
            let balanced = g.is_balanced().balanced;
            check((det_exact(&laplacian_matrix(&g)).unwrap() == 0) == balanced, "exact determinant")?;
            check((laplacian_spectrum(&g).unwrap().smallest() < TAU_DET) == balanced, "smallest eigenvalue")
        }),
        property("vertex-deletion and edge-insertion interlacing (1e-8)", bits(8), |(g, a, b)| {
            let n = g.order();
            let big = adjacency_spectrum(&g).unwrap().values;
            if n >= 2 {
                let v = a.iter().position(|&x| x).unwrap_or(0);
                let keep: Vec<usize> = (0..n).filter(|&w| w != v).collect();
                let small = adjacency_spectrum(&g.induced(&keep).unwrap()).unwrap().values;
                for i in 0..n - 1 {
                    check(big[i] + 1e-8 >= small[i] && small[i] + 1e-8 >= big[i + 1], "vertex deletion")?;
                }
            }
            let missing: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| !g.is_adjacent(u, v))
                .collect();
            if let Some(&(u, v)) = missing.get(set(&b).len() % missing.len().max(1)) {
                let sign = if a.first() == Some(&true) { Sign::Negative } else { Sign::Positive };
                let before = laplacian_spectrum(&g).unwrap().values;
                let after = laplacian_spectrum(&g.insert_edge(u, v, sign).unwrap()).unwrap().values;
                for i in 0..n {
                    check(after[i] + 1e-8 >= before[i], "edge insertion, upper")?;
                    if i + 1 < n {
                        check(before[i] + 1e-8 >= after[i + 1], "edge insertion, lower")?;
                    }
                }
            }
            Ok(())
        }),
        property("switching-class counts = 2^(m - n + c)", signed_graph(6), |g| {
            let reps = enumerate_switching_classes(&g).unwrap();
            let want = 1usize << (g.size() + g.components().len() - g.order());
            let distinct: BTreeSet<SignedGraph> = reps.iter().map(|r| r.canonical_form().0).collect();
            check(reps.len() == want && distinct.len() == want, "class count")
        }),
    ]
}

// criterion 6

fn determinism() -> Vec<Item> {
    let run = |t: TheoremId, jobs: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_sgs"))
            .args(["verify", t.as_str(), "--nmax", "5", "--jobs", jobs])
            .output()
            .expect("run sgs");
        (out.status.code(), out.stdout)
    };
    TheoremId::ALL
        .into_iter()
        .map(|t| {
            let (c1, a) = run(t, "1");
            let (c8, b) = run(t, "8");
            item(
                format!("verify {t} --nmax 5: --jobs 1 and --jobs 8 byte-identical"),
                a == b && c1 == c8 && c1 == Some(0),
                format!("{} bytes, exit {c1:?}/{c8:?}", a.len()),
            )
        })
        .collect()
}

fn main() {
    let criteria: [Criterion; 6] = [
        ("named-value regressions", named_values),
        ("exhaustive theorem scans, n <= 6", exhaustive_scans),
        ("equality and exception censuses", censuses),
        ("variational suite, n <= 5", variational),
        ("structural invariants (property tests)", structural),
        ("determinism across worker counts", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (items, t) = timed(run);
        let ok = items.iter().all(|it| it.ok);
        failed += usize::from(!ok);
        println!("criterion {} {name}: {} ({:.1}s)", i + 1, if ok { "PASS" } else { "FAIL" }, t.as_secs_f64());
        for it in &items {
            let note = if it.note.is_empty() { String::new() } else { format!(" -- {}", it.note) };
            println!("    [{}] {}{note}", if it.ok { "pass" } else { "FAIL" }, it.name);
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
