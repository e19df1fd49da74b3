//! Acceptance suite. Prints one `PASS`/`FAIL` line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use seqrec::code::alist::write_alist;
use seqrec::code::{binomial_prefix_sum, optimal_rate, verify_seq_recovery, VerifyMode};
use seqrec::construct::{run_pipeline, BaseSpec, PipelineConfig, PipelineOutput};
use seqrec::graph::random::{gnp, random_biregular, random_regular};
use seqrec::graph::{bipartite_double_cover, edge_color};
use seqrec::group::{cayley_girth, FiniteGroup, GeneratorSet};
use seqrec::lift::{
    cayley_voltage_lift, count_g_cycles_through_edge, double_cover_lift, greedy_voltage_lift, matching_lift,
    LiftResult,
};
use seqrec::{Graph, Layer};

const LIFT_CASES: usize = 200;
const CYCLE_GRAPHS: usize = 120;
const EXHAUSTIVE_LIMIT: u128 = 1_000_000;
const SAMPLED_PATTERNS: u64 = 100_000;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: &[String], ok: String) -> Outcome {
    if failures.is_empty() {
        Outcome { pass: true, detail: ok }
    } else {
        let shown: Vec<&str> = failures.iter().take(5).map(String::as_str).collect();
        Outcome {
            pass: false,
            detail: format!("{} failure(s): {}", failures.len(), shown.join("; ")),
        }
    }
}

/// Rate bound recomputed with plain integers.
fn rate_oracle(r: u128, t: u32) -> (u128, u128) {
    let s = t / 2;
    let (num, den) = if t.is_multiple_of(2) {
        let top = r.pow(s);
        (top, top + 2 * (0..s).map(|j| r.pow(j)).sum::<u128>())
    } else {
        let top = r.pow(s + 1);
        (top, top + 2 * (1..=s).map(|j| r.pow(j)).sum::<u128>() + 1)
    };
    let mut a = num;
    let mut b = den;
    while b != 0 {
        (a, b) = (b, a % b);
    }
    (num / a, den / a)
}

fn criterion_1() -> Outcome {
    let expected = [((3, 2), (3, 5)), ((3, 4), (9, 17)), ((3, 3), (9, 16)), ((4, 5), (64, 105))];
    let mut failures = Vec::new();
    for ((r, t), (p, q)) in expected {
        let lib = optimal_rate(r, t);
        if lib != Ratio::new(p, q) {
            failures.push(format!("({r},{t}): library {lib}, expected {p}/{q}"));
        }
        let (a, b) = rate_oracle(r as u128, t as u32);
        if (a, b) != (p as u128, q as u128) {
            failures.push(format!("({r},{t}): recomputed {a}/{b}, expected {p}/{q}"));
        }
    }
    outcome(&failures, "3/5, 9/17, 9/16, 64/105 exact".into())
}

struct Instance {
    label: String,
    out: PipelineOutput,
}

fn instances() -> Vec<Instance> {
    let specs: [(usize, usize, BaseSpec); 9] = [
        (3, 2, BaseSpec::Auto),
        (3, 2, BaseSpec::Petersen),
        (3, 3, BaseSpec::Auto),
        (3, 3, BaseSpec::K43),
        (3, 4, BaseSpec::Auto),
        (3, 4, BaseSpec::Petersen),
        (3, 5, BaseSpec::Auto),
        (4, 2, BaseSpec::Auto),
        (4, 3, BaseSpec::Auto),
    ];
    specs
        .into_iter()
        .map(|(r, t, base)| {
            let mut cfg = PipelineConfig::new(r, t);
            cfg.base = base;
            cfg.budget = 0;
            let out = run_pipeline(&cfg).unwrap_or_else(|e| panic!("({r},{t}) {base}: {e}"));
            Instance {
                label: format!("({r},{t}) {base}"),
                out,
            }
        })
        .collect()
}

fn criterion_2(inst: &[Instance]) -> Outcome {
    let mut failures = Vec::new();
    let mut seen = Vec::new();
    for i in inst {
        let code = &i.out.code;
        let n = code.n();
        let k = n - common::rank(n, &code.h.rows);
        let (p, q) = rate_oracle(code.r as u128, code.t as u32);
        // k/n == p/q without division
        if (k as u128) * q != (n as u128) * p {
            failures.push(format!("{}: k/n = {k}/{n}, optimal {p}/{q}", i.label));
        }
        if i.out.rate.k != k || !i.out.rate.equals_optimal {
            failures.push(format!("{}: library reports k = {}", i.label, i.out.rate.k));
        }
        seen.push(format!("{} {k}/{n}", i.label));
    }
    outcome(&failures, seen.join(", "))
}

fn criterion_3(inst: &[Instance]) -> Outcome {
    let mut failures = Vec::new();
    let mut seen = Vec::new();
    for i in inst {
        let t = i.out.config.t;
        let layered = common::girth(&i.out.lifted.layered.graph);
        let code_graph = common::girth(&i.out.code_graph.graph);
        if layered.is_some_and(|g| g < t + 1) || code_graph != layered {
            failures.push(format!("{}: girth {layered:?} / {code_graph:?}, need {}", i.label, t + 1));
        }
        if i.out.girth.finite() != layered {
            failures.push(format!("{}: library girth {} disagrees", i.label, i.out.girth));
        }
        seen.push(format!("{} g={}", i.label, layered.map_or("inf".into(), |g| g.to_string())));
    }
    outcome(&failures, seen.join(", "))
}

fn criterion_4(inst: &[Instance]) -> Outcome {
    let mut failures = Vec::new();
    let mut seen = Vec::new();
    for i in inst {
        let code = &i.out.code;
        let (n, t) = (code.n(), code.t);
        let exhaustive = binomial_prefix_sum(n, t) <= EXHAUSTIVE_LIMIT;
        let budget = if exhaustive { EXHAUSTIVE_LIMIT as u64 } else { SAMPLED_PATTERNS };
        let report = verify_seq_recovery(code, t, budget, 0);
        let expected_mode = if exhaustive { VerifyMode::Exhaustive } else { VerifyMode::Sampled };
        if report.mode != expected_mode || report.failure_count != 0 || report.patterns == 0 {
            failures.push(format!("{}: {report}", i.label));
        }
        if !exhaustive && report.patterns < SAMPLED_PATTERNS {
            failures.push(format!("{}: only {} sampled patterns", i.label, report.patterns));
        }
        // second route: the local peeler over all patterns, or a seeded sample
        let mut local_fail = 0usize;
        let mut local_checked = 0usize;
        if exhaustive {
            for size in 1..=t {
                common::subsets(n, size, |e| {
                    local_checked += 1;
                    if !common::peels(&code.h.rows, n, e) {
                        local_fail += 1;
                    }
                });
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            for _ in 0..20_000 {
                let e = rand::seq::index::sample(&mut rng, n, t).into_vec();
                local_checked += 1;
                if !common::peels(&code.h.rows, n, &e) {
                    local_fail += 1;
                }
            }
        }
        if local_fail > 0 {
            failures.push(format!("{}: local peeler failed {local_fail} of {local_checked}", i.label));
        }
        seen.push(format!("{}: {report}", i.label));
    }
    outcome(&failures, seen.join(", "))
}

fn tag_layers(g: &mut Graph, rng: &mut ChaCha8Rng) {
    for v in 0..g.order() {
        let layer = match rng.gen_range(0..4) {
            0 => None,
            1 => Some(Layer::L0),
            2 => Some(Layer::Dummy),
            _ => Some(Layer::U(rng.gen_range(0..3))),
        };
        g.set_layer(v, layer);
    }
}

fn check_lift(name: &str, case: usize, base: &Graph, lift: &LiftResult, failures: &mut Vec<String>) {
    if let Err(e) = common::is_covering(base, &lift.graph, lift.multiplier) {
        failures.push(format!("{name} case {case}: {e}"));
    }
    for v in 0..lift.graph.order() {
        if lift.graph.degree(v) != base.degree(v / lift.multiplier) {
            failures.push(format!("{name} case {case}: degree of {v} changed"));
            break;
        }
    }
}

fn criterion_5() -> Outcome {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut counts = [0usize; 4];

    // double cover on odd girth
    while counts[0] < LIFT_CASES {
        let mut g = gnp(rng.gen_range(3..14), rng.gen_range(0.2..0.7), &mut rng);
        let Some(before) = common::girth(&g).filter(|k| k % 2 == 1) else {
            continue;
        };
        tag_layers(&mut g, &mut rng);
        let case = counts[0];
        counts[0] += 1;
        let lift = double_cover_lift(&g).expect("odd girth");
        check_lift("double cover", case, &g, &lift, &mut failures);
        let after = common::girth(&lift.graph);
        if after.is_some_and(|a| a < before + 1) || !lift.graph.is_bipartite() {
            failures.push(format!("double cover case {case}: girth {before} -> {after:?}"));
        }
    }

    // greedy voltage lift on even girth with |H| above the cycle bound
    while counts[1] < LIFT_CASES {
        let g = match rng.gen_range(0..3) {
            0 => random_regular(2 * rng.gen_range(3..8), 3, &mut rng, 50),
            1 => random_biregular(6, 2, 4, 3, &mut rng, 50),
            _ => random_regular(rng.gen_range(5..9), 4, &mut rng, 50).map(|g| bipartite_double_cover(&g)),
        };
        let Some(mut g) = g else { continue };
        let Some(before) = common::girth(&g).filter(|k| k % 2 == 0) else {
            continue;
        };
        tag_layers(&mut g, &mut rng);
        let case = counts[1];
        counts[1] += 1;
        let bound = (g.max_degree() - 1).pow(before as u32 / 2);
        let h = FiniteGroup::cyclic(bound + 1 + rng.gen_range(0..3));
        match greedy_voltage_lift(&g, &h) {
            Ok(lift) => {
                check_lift("greedy", case, &g, &lift, &mut failures);
                let after = common::girth(&lift.graph);
                if after.is_some_and(|a| a < before + 1) {
                    failures.push(format!("greedy case {case}: girth {before} -> {after:?}"));
                }
            }
            Err(e) => failures.push(format!("greedy case {case}: {e}")),
        }
    }

    // Cayley voltage lift against the girth of Cay(H, S)
    let s5 = FiniteGroup::symmetric(5, 200).unwrap();
    while counts[2] < LIFT_CASES {
        let mut g = gnp(rng.gen_range(2..10), rng.gen_range(0.2..0.6), &mut rng);
        let colors = edge_color(&g).num_colors();
        let h = if rng.gen_bool(0.5) {
            FiniteGroup::cyclic(rng.gen_range(2 * colors + 2..60))
        } else {
            s5.clone()
        };
        let mut pool: Vec<_> = h.elements().filter(|&e| e != h.identity()).collect();
        let mut picked = Vec::new();
        while picked.len() < 2 * colors && !pool.is_empty() {
            let e = pool.swap_remove(rng.gen_range(0..pool.len()));
            picked.push(e);
            if let Some(p) = pool.iter().position(|&x| x == h.inv(e)) {
                picked.push(pool.swap_remove(p));
            }
        }
        let s = GeneratorSet::new(&h, &picked).unwrap();
        let Ok(lift) = ({
            tag_layers(&mut g, &mut rng);
            cayley_voltage_lift(&g, &h, &s)
        }) else {
            continue;
        };
        let case = counts[2];
        counts[2] += 1;
        check_lift("cayley", case, &g, &lift, &mut failures);
        let cg = cayley_girth(&h, &s).finite();
        let after = common::girth(&lift.graph);
        if let (Some(c), Some(a)) = (cg, after) {
            if a < c {
                failures.push(format!("cayley case {case}: lift girth {a} < Cayley girth {c}"));
            }
        } else if cg.is_none() && after.is_some() {
            failures.push(format!("cayley case {case}: Cayley graph is a forest but the lift is not"));
        }
    }

    // matching lift against the companion's girth
    while counts[3] < LIFT_CASES {
        let mut g = gnp(rng.gen_range(2..9), rng.gen_range(0.2..0.6), &mut rng);
        if g.max_degree() == 0 || g.max_degree() > 3 {
            continue;
        }
        let d = g.max_degree() + 1;
        let Some(companion) = random_regular(2 * rng.gen_range(d..d + 5), d, &mut rng, 100) else {
            continue;
        };
        tag_layers(&mut g, &mut rng);
        let case = counts[3];
        counts[3] += 1;
        match matching_lift(&g, &companion) {
            Ok(lift) => {
                check_lift("matching", case, &g, &lift, &mut failures);
                let cg = common::girth(&companion).unwrap();
                if common::girth(&lift.graph).is_some_and(|a| a < cg) {
                    failures.push(format!("matching case {case}: below companion girth {cg}"));
                }
            }
            Err(e) => failures.push(format!("matching case {case}: {e}")),
        }
    }
    outcome(
        &failures,
        format!(
            "{} double-cover, {} greedy, {} Cayley, {} matching cases",
            counts[0], counts[1], counts[2], counts[3]
        ),
    )
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut graphs = 0;
    let mut edges = 0;
    while graphs < CYCLE_GRAPHS {
        let d = rng.gen_range(3..5);
        let n = 2 * rng.gen_range(d..d + 6);
        let Some(g) = random_regular(n, d, &mut rng, 100) else { continue };
        let Some(k) = common::girth(&g).filter(|k| k % 2 == 0) else { continue };
        graphs += 1;
        let bound = (d - 1).pow(k as u32 / 2);
        for (u, v) in g.edges() {
            edges += 1;
            let lib = count_g_cycles_through_edge(&g, u, v);
            let oracle = common::cycles_through(&g, u, v, k);
            if lib != oracle || lib > bound {
                failures.push(format!("n={n} d={d} g={k} edge {u}-{v}: {lib} cycles (oracle {oracle}), bound {bound}"));
            }
        }
    }
    outcome(&failures, format!("{graphs} graphs, {edges} edges, no count above the bound"))
}

fn criterion_7(inst: &[Instance]) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0usize;
    let mut gaps = 0usize;
    let mut labels = Vec::new();
    for i in inst.iter().filter(|i| i.out.code.n() <= 20) {
        let code = &i.out.code;
        let n = code.n();
        labels.push(i.label.clone());
        for size in 1..=code.t + 1 {
            common::subsets(n, size, |e| {
                checked += 1;
                let peeled = seqrec::code::peel(code, e).is_ok();
                let solvable = common::solvable(&code.h.rows, e);
                if peeled && !solvable {
                    failures.push(format!("{}: {e:?} peeled but not solvable", i.label));
                }
                if peeled != common::peels(&code.h.rows, n, e) {
                    failures.push(format!("{}: {e:?} library and local peelers disagree", i.label));
                }
                if !peeled && solvable {
                    gaps += 1;
                }
            });
        }
    }
    if labels.is_empty() {
        failures.push("no instance with n <= 20".into());
    }
    outcome(
        &failures,
        format!(
            "{checked} patterns on {}; {gaps} solvable but not peelable",
            labels.join(", ")
        ),
    )
}

fn criterion_8(inst: &[Instance]) -> Outcome {
    let mut failures = Vec::new();
    let mut seen = Vec::new();
    for i in inst {
        let (n, r, t) = (i.out.code.n() as u128, i.out.config.r as u128, i.out.config.t as u32);
        let manifest = i.out.manifest_text();
        if n * n < r.pow(t + 1) || !manifest.contains("moore_floor_met: true\n") {
            failures.push(format!("{}: n = {n} below r^((t+1)/2)", i.label));
        }
        let stages: Vec<String> = i
            .out
            .lifted
            .lift
            .stages
            .iter()
            .map(|s| format!("{} x{}", s.method, s.multiplier))
            .collect();
        let breakdown = if stages.is_empty() { "no lift".to_string() } else { stages.join(" then ") };
        seen.push(format!("{} n={n} [{breakdown}]", i.label));
    }
    outcome(&failures, seen.join(", "))
}

fn criterion_9() -> Outcome {
    let mut failures = Vec::new();
    for (r, t, base, seed) in [(3, 4, BaseSpec::Random, 11), (3, 5, BaseSpec::Auto, 0), (4, 2, BaseSpec::Circulant, 3)] {
        let run = || {
            let mut cfg = PipelineConfig::new(r, t);
            cfg.base = base;
            cfg.seed = seed;
            cfg.budget = 2_000;
            let out = run_pipeline(&cfg).unwrap();
            (write_alist(&out.code.h), out.manifest_text())
        };
        let (a1, m1) = run();
        let (a2, m2) = run();
        if a1 != a2 || m1 != m2 {
            failures.push(format!("({r},{t}) {base} seed {seed} differs between runs"));
        }
    }
    outcome(&failures, "alist and manifest byte-identical across runs".into())
}

fn main() -> ExitCode {
    let mut all_pass = true;
    let mut report = |id: usize, name: &str, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let o = f();
        all_pass &= o.pass;
        println!(
            "{} {id}. {name}: {} ({:.1}s)",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            start.elapsed().as_secs_f64()
        );
    };
    let inst = instances();
    report(1, "rate formulas", &mut criterion_1);
    report(2, "end-to-end rate optimality", &mut || criterion_2(&inst));
    report(3, "girth guarantee", &mut || criterion_3(&inst));
    report(4, "sequential recovery", &mut || criterion_4(&inst));
    report(5, "lift invariants", &mut criterion_5);
    report(6, "cycle-count bound", &mut criterion_6);
    report(7, "decoder vs brute-force solvability", &mut || criterion_7(&inst));
    report(8, "block-length floor", &mut || criterion_8(&inst));
    report(9, "determinism", &mut criterion_9);
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
