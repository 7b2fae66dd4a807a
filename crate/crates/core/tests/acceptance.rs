//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::process::ExitCode;
use std::thread::available_parallelism;
use std::time::{Duration, Instant};

use permdom::oracle::Oracle;
use permdom::verify::{self, Check, EXTENSION_SAMPLES, EXTENSION_SEED};

struct Criterion {
    id: usize,
    title: &'static str,
    limit: Option<Duration>,
}

fn report(c: &Criterion, check: permdom::Result<Check>, elapsed: Duration) -> bool {
    let (ok, detail) = match check {
        Ok(check) => (check.passed(), check.to_string()),
        Err(e) => (false, format!("error: {e}")),
    };
    let in_time = c.limit.is_none_or(|l| elapsed <= l);
    let status = if ok && in_time { "PASS" } else { "FAIL" };
    let budget = c.limit.map(|l| format!(" limit {}s", l.as_secs())).unwrap_or_default();
    println!("criterion {:>2} {status}: {} ({:.2}s{budget}) :: {detail}", c.id, c.title, elapsed.as_secs_f64());
    ok && in_time
}

fn main() -> ExitCode {
    let serial = Oracle::new();
    let jobs = available_parallelism().map_or(1, |n| n.get()).min(8);
    let parallel = Oracle::new().with_jobs(jobs);

    let mut all_ok = true;
    let mut run = |c: Criterion, f: &mut dyn FnMut() -> permdom::Result<Check>| {
        let start = Instant::now();
        let check = f();
        all_ok &= report(&c, check, start.elapsed());
    };

    // Criterion 1 builds the tallies single-threaded; later criteria reuse them.
    let mut reports = Vec::new();
    run(
        Criterion { id: 1, title: "singleton recursion vs enumeration, n<=8", limit: Some(Duration::from_secs(120)) },
        &mut || {
            reports = verify::tallies(&serial, 8)?;
            Ok(verify::singleton_recursion(&reports))
        },
    );
    run(Criterion { id: 2, title: "strong fixed point identities, n<=8", limit: None }, &mut || {
        Ok(verify::strong_fixed_points(&reports))
    });
    run(Criterion { id: 3, title: "closed forms, r=2..5, k=0..40", limit: None }, &mut || {
        Ok(verify::closed_forms(40))
    });
    run(Criterion { id: 4, title: "polynomial lifting, r<=7, k=1..40", limit: None }, &mut || {
        Ok(verify::polynomial_lifting(7, 40))
    });
    run(
        Criterion { id: 5, title: "pair counts by adjacency, n<=7", limit: Some(Duration::from_secs(300)) },
        &mut || verify::pair_counts(&parallel, 7),
    );
    run(Criterion { id: 6, title: "efficient domination counts, n<=7, |A|=2..5", limit: None }, &mut || {
        verify::efficient_counts(&parallel, 7, 2..=5)
    });
    run(Criterion { id: 7, title: "singleton dominating set counts, n<=8", limit: None }, &mut || {
        verify::singleton_dominator_counts(&parallel, 8)
    });
    run(Criterion { id: 8, title: "disconnected formula and g=c+d, n<=8", limit: None }, &mut || {
        verify::disconnected_formula(&reports)
    });
    run(Criterion { id: 9, title: "comb uniqueness n in {6,8}, validity n<=12", limit: None }, &mut || {
        verify::comb_extremality(&parallel, &[6, 8], 12)
    });
    run(Criterion { id: 10, title: "extension preserves domination number", limit: None }, &mut || {
        Ok(verify::extension(EXTENSION_SEED, EXTENSION_SAMPLES, 3..=9))
    });
    run(Criterion { id: 11, title: "connected witness for every feasible (n,k), n<=12", limit: None }, &mut || {
        Ok(verify::existence(12))
    });
    run(Criterion { id: 12, title: "heuristic dominates; optimality soft gate 90%", limit: None }, &mut || {
        verify::heuristic(&parallel, 8)
    });
    run(Criterion { id: 13, title: "structural properties on all of S_n, n<=7", limit: None }, &mut || {
        verify::structure_suite(&parallel, 7)
    });

    if all_ok {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: some criteria failed");
        ExitCode::FAILURE
    }
}
