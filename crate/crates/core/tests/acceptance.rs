//! Exit criteria. Runs without the libtest harness so that every criterion
//! prints exactly one PASS/FAIL line; the process fails if any criterion does.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use colorpack::generate::{generate, GenSpec, Skew};
use colorpack::oracle::optimal_bins_unseeded;
use colorpack::predict::{predicted_bins, CaseTag};
use colorpack::scaling::{run_bench, Branch};
use colorpack::{discrepancy, solve, validate_packing, zero_sequence, Instance, WeightMode};

const SWEEP_MAX_ITEMS: usize = 10;
const SWEEP_CAPACITIES: std::ops::RangeInclusive<usize> = 0..=6;
const RANDOM_INSTANCES: usize = 10_000;
const DOUBLING_RATIO_LIMIT: f64 = 2.5;
const MILLION_LIMIT: Duration = Duration::from_secs(2);

struct Outcome {
    id: &'static str,
    title: &'static str,
    failures: Vec<String>,
    detail: String,
}

fn report(outcomes: &[Outcome]) -> bool {
    let mut ok = true;
    for o in outcomes {
        let status = if o.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!("[{status}] {} {}: {}", o.id, o.title, o.detail);
        for f in o.failures.iter().take(10) {
            println!("       - {f}");
        }
        ok &= o.failures.is_empty();
    }
    ok
}

fn named(capacity: usize, counts: &[usize]) -> Instance {
    let names = ["A", "B", "C", "D", "E", "F"];
    Instance::new(capacity, names.iter().copied().zip(counts.iter().copied())).unwrap()
}

/// Every vector of `k` positive counts with total at most `max_items`.
fn compositions(k: usize, max_items: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, budget: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        let still = k - prefix.len() - 1;
        for c in 1..=budget.saturating_sub(still) {
            prefix.push(c);
            rec(k, budget - c, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, max_items, &mut Vec::new(), &mut out);
    out
}

fn sweep() -> Vec<Instance> {
    let mut all = Vec::new();
    for k in 2..=4 {
        for counts in compositions(k, SWEEP_MAX_ITEMS) {
            for l in SWEEP_CAPACITIES {
                all.push(named(l, &counts));
            }
        }
    }
    all
}

fn label(i: &Instance) -> String {
    format!("L={} counts={:?}", i.capacity(), i.counts())
}

/// Seeded instances covering every closed-form case in equal measure.
fn stratified_random() -> Vec<Instance> {
    let targets = [
        CaseTag::SingleBin,
        CaseTag::DiscrepancyBound,
        CaseTag::CapacityBound,
        CaseTag::CapacityOne,
        CaseTag::EvenCombine,
        CaseTag::OddReducible,
        CaseTag::OddSingletons,
    ];
    let mut out = Vec::with_capacity(RANDOM_INSTANCES);
    let mut seed = 0u64;
    let mut draws = colorpack::generate::Draws::new(0x5eed);
    for i in 0..RANDOM_INSTANCES {
        let target = targets[i % targets.len()];
        loop {
            seed += 1;
            let colors = 2 + draws.below(5);
            let items = 2 + draws.below(300);
            let (capacity, skew) = match target {
                CaseTag::SingleBin => (0, Skew::Balanced),
                CaseTag::DiscrepancyBound => (0, Skew::MaxHeavy),
                CaseTag::CapacityBound => (2 + draws.below(9), Skew::Balanced),
                CaseTag::CapacityOne => (1, Skew::Uniform),
                CaseTag::EvenCombine => (2 + 2 * draws.below(6), Skew::MaxHeavy),
                _ => (3 + 2 * draws.below(5), Skew::MaxHeavy),
            };
            let spec = GenSpec {
                colors,
                items,
                capacity,
                seed,
                skew,
            };
            let Ok(g) = generate(&spec) else { continue };
            if predicted_bins(&g.instance).case == target {
                out.push(g.instance);
                break;
            }
        }
    }
    out
}

fn criterion_golden() -> Outcome {
    type Golden<'a> = (usize, &'a [(&'a str, usize)], usize);
    let cases: [Golden; 7] = [
        (0, &[("W", 3), ("B", 2), ("Y", 2), ("R", 1)], 1),
        (0, &[("W", 8), ("B", 2), ("Y", 2)], 4),
        (3, &[("W", 4), ("B", 3), ("Y", 2)], 3),
        (6, &[("W", 15), ("B", 4), ("Y", 3), ("G", 3)], 5),
        (5, &[("W", 11), ("B", 2), ("Y", 2), ("G", 3)], 4),
        (5, &[("W", 10), ("B", 4), ("Y", 2), ("G", 2)], 4),
        (5, &[("W", 15), ("B", 3), ("Y", 2), ("G", 2)], 8),
    ];
    let start = Instant::now();
    let mut failures = Vec::new();
    for (capacity, colors, want) in cases {
        let i = Instance::new(capacity, colors.iter().copied()).unwrap();
        let p = solve(&i).unwrap();
        if p.bin_count() != want {
            failures.push(format!(
                "{}: {} bins, want {want}",
                label(&i),
                p.bin_count()
            ));
        }
        if !validate_packing(&i, &p).is_valid() {
            failures.push(format!("{}: invalid packing", label(&i)));
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(1) {
        failures.push(format!("took {elapsed:?}"));
    }
    Outcome {
        id: "C1",
        title: "golden examples",
        detail: format!("7 instances, exact counts, {elapsed:?}"),
        failures,
    }
}

fn criterion_oracle(instances: &[Instance]) -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for i in instances {
        let solved = solve(i).unwrap().bin_count();
        let best = optimal_bins_unseeded(i, SWEEP_MAX_ITEMS).unwrap();
        if solved != best {
            failures.push(format!("{}: solver {solved}, oracle {best}", label(i)));
        }
    }
    Outcome {
        id: "C2",
        title: "oracle equivalence",
        detail: format!(
            "{} instances (k in 2..=4, n <= {SWEEP_MAX_ITEMS}, L in 0..=6), {} mismatches, {:?}",
            instances.len(),
            failures.len(),
            start.elapsed()
        ),
        failures,
    }
}

fn criterion_predictor(sweep: &[Instance], random: &[Instance]) -> Outcome {
    let mut failures = Vec::new();
    let mut per_case: BTreeMap<&'static str, usize> = BTreeMap::new();
    for i in sweep.iter().chain(random) {
        let predicted = predicted_bins(i);
        *per_case.entry(predicted.case.as_str()).or_default() += 1;
        let solved = solve(i).unwrap().bin_count();
        if predicted.total != solved {
            failures.push(format!(
                "{} ({}): predicted {}, solver {solved}",
                label(i),
                predicted.case,
                predicted.total
            ));
        }
    }
    let cases: Vec<String> = per_case.iter().map(|(k, v)| format!("{k}={v}")).collect();
    Outcome {
        id: "C3",
        title: "predictor equivalence",
        detail: format!(
            "{} sweep + {} random; {}",
            sweep.len(),
            random.len(),
            cases.join(" ")
        ),
        failures,
    }
}

fn criterion_validity(groups: &[&[Instance]]) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for i in groups.iter().flat_map(|g| g.iter()) {
        let p = solve(i).unwrap();
        let r = validate_packing(i, &p);
        checked += 1;
        if !r.is_valid() {
            failures.push(format!("{}: {:?}", label(i), r.violations));
        }
    }
    Outcome {
        id: "C4",
        title: "validity and conservation",
        detail: format!("{checked} packings validated"),
        failures,
    }
}

fn criterion_zero_formula(instances: &[Instance]) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for i in instances.iter().filter(|i| i.mode() == WeightMode::Zero) {
        checked += 1;
        let want = discrepancy(i).max(1) as usize;
        let got = solve(i).unwrap().bin_count();
        if got != want {
            failures.push(format!("{}: {got} bins, max(1, D) = {want}", label(i)));
        }
    }
    Outcome {
        id: "C5",
        title: "zero-weight formula",
        detail: format!("{checked} zero-weight instances"),
        failures,
    }
}

fn criterion_linear_time() -> Outcome {
    let mut failures = Vec::new();
    let sizes = [100_000, 200_000, 400_000, 800_000];
    let mut worst: f64 = 0.0;
    match run_bench(&sizes, 5, 0xbe9c, &Branch::ALL) {
        Ok(report) => {
            for s in &report.summaries {
                for (step, &r) in s.ratios.iter().enumerate() {
                    worst = worst.max(r);
                    if r > DOUBLING_RATIO_LIMIT {
                        failures.push(format!(
                            "{}: ratio {r:.2} between n={} and n={}",
                            s.branch.as_str(),
                            sizes[step],
                            sizes[step + 1]
                        ));
                    }
                }
            }
        }
        Err(e) => failures.push(e.to_string()),
    }
    let mut slowest = Duration::ZERO;
    for branch in Branch::ALL {
        let i = branch.instance(1_000_000, 0xbe9c);
        let start = Instant::now();
        let p = solve(&i).unwrap();
        let t = start.elapsed();
        slowest = slowest.max(t);
        if t >= MILLION_LIMIT {
            failures.push(format!("{}: n = 10^6 took {t:?}", branch.as_str()));
        }
        if !validate_packing(&i, &p).is_valid() {
            failures.push(format!("{}: n = 10^6 packing invalid", branch.as_str()));
        }
    }
    Outcome {
        id: "C6",
        title: "linear time",
        detail: format!(
            "worst doubling ratio {worst:.2} (limit {DOUBLING_RATIO_LIMIT}), slowest n=10^6 solve {slowest:?}"
        ),
        failures,
    }
}

fn criterion_never_stuck(sweep: &[Instance]) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut seen = std::collections::HashSet::new();
    for i in sweep.iter().filter(|i| discrepancy(i) <= 0) {
        if !seen.insert(i.counts().to_vec()) {
            continue;
        }
        checked += 1;
        if let Err(e) = zero_sequence(i.counts()) {
            failures.push(format!("{}: {e}", label(i)));
        }
    }
    let mut random = 0;
    let mut seed = 0;
    while random < RANDOM_INSTANCES {
        seed += 1;
        let spec = GenSpec {
            colors: 2 + (seed as usize % 7),
            items: 2 + (seed as usize * 7919) % 500,
            capacity: 0,
            seed,
            skew: Skew::Balanced,
        };
        let Ok(g) = generate(&spec) else { continue };
        random += 1;
        if let Err(e) = zero_sequence(g.instance.counts()) {
            failures.push(format!("{}: {e}", label(&g.instance)));
        }
    }
    Outcome {
        id: "C7",
        title: "never-stuck alternation",
        detail: format!("{checked} sweep vectors with D <= 0 + {random} balanced random"),
        failures,
    }
}

fn criterion_leftover_correction() -> Outcome {
    let i = Instance::new(6, [("W", 15), ("B", 4), ("Y", 3), ("G", 3)]).unwrap();
    let p = predicted_bins(&i);
    let even = p.even.expect("even case");
    let uncorrected = even.total_without_absorption();
    let solved = solve(&i).unwrap().bin_count();
    let mut failures = Vec::new();
    if p.total != 5 || solved != 5 {
        failures.push(format!(
            "corrected total {}, solver {solved}, want 5",
            p.total
        ));
    }
    if uncorrected != 6 {
        failures.push(format!("uncorrected total {uncorrected}, want 6"));
    }
    Outcome {
        id: "C8",
        title: "leftover-singleton correction",
        detail: format!(
            "corrected X={} total={}, uncorrected total={uncorrected}",
            even.leftover_singles, p.total
        ),
        failures,
    }
}

fn main() {
    // `cargo test -- --list` and friends pass arguments; honour a filter-free
    // listing so tooling does not run the whole suite.
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    let sweep = sweep();
    let random = stratified_random();
    let golden = criterion_golden();
    let outcomes = [
        golden,
        criterion_oracle(&sweep),
        criterion_predictor(&sweep, &random),
        criterion_validity(&[&sweep, &random]),
        criterion_zero_formula(&sweep),
        criterion_linear_time(),
        criterion_never_stuck(&sweep),
        criterion_leftover_correction(),
    ];
    if !report(&outcomes) {
        std::process::exit(1);
    }
}
