//! Multi-worker arrowing driver.
//!
//! The search is partitioned into independent jobs (color prefixes for plain
//! DFS, green classes for turan-first) pulled from a shared queue. Workers
//! share nothing but a monotone "counterexample found" flag and merge their
//! statistics at join. The verdict is worker-count-independent; which
//! counterexample is returned is only deterministic with one worker.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use berge_core::search::{
    decide_arrowing, run_job, split_jobs, ArrowingProblem, SearchError, SearchOutcome, Verdict,
};
use berge_core::ColoredHypergraph;

/// Decides an arrowing instance, honoring `worker_count`, and fills in wall
/// time on the returned statistics.
pub fn decide(problem: &ArrowingProblem) -> Result<SearchOutcome, SearchError> {
    let start = Instant::now();
    let mut outcome = if problem.worker_count <= 1 {
        decide_arrowing(problem)?
    } else {
        decide_parallel(problem)?
    };
    outcome.stats.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(outcome)
}

fn decide_parallel(problem: &ArrowingProblem) -> Result<SearchOutcome, SearchError> {
    problem.validate()?;
    let (jobs, split_stats) = split_jobs(problem, problem.worker_count * 4)?;
    let abort = AtomicBool::new(false);
    let next = AtomicUsize::new(0);
    let found: Mutex<Option<ColoredHypergraph>> = Mutex::new(None);
    let stats = Mutex::new(split_stats);
    let failure: Mutex<Option<SearchError>> = Mutex::new(None);

    std::thread::scope(|scope| {
        for _ in 0..problem.worker_count {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= jobs.len() || abort.load(Ordering::Relaxed) {
                    break;
                }
                match run_job(problem, &jobs[i], Some(&abort)) {
                    Ok((cex, job_stats)) => {
                        stats.lock().unwrap().merge(&job_stats);
                        if let Some(cex) = cex {
                            let mut slot = found.lock().unwrap();
                            if slot.is_none() {
                                *slot = Some(cex);
                            }
                            abort.store(true, Ordering::SeqCst);
                            break;
                        }
                    }
                    Err(e) => {
                        let mut slot = failure.lock().unwrap();
                        if slot.is_none() {
                            *slot = Some(e);
                        }
                        abort.store(true, Ordering::SeqCst);
                        break;
                    }
                }
            });
        }
    });

    if let Some(e) = failure.into_inner().unwrap() {
        return Err(e);
    }
    let stats = stats.into_inner().unwrap();
    let verdict = match found.into_inner().unwrap() {
        Some(cex) => Verdict::Counterexample(cex),
        None => Verdict::Arrows,
    };
    Ok(SearchOutcome { verdict, stats })
}

#[cfg(test)]
mod tests {
    use super::*;
    use berge_core::FamilySpec;

    #[test]
    fn parallel_verdicts_match_sequential() {
        for n in [4, 5] {
            for workers in [2, 4] {
                let specs = vec![FamilySpec::Cycle(4), FamilySpec::Cycle(4), FamilySpec::Cycle(3)];
                let sequential = decide(&ArrowingProblem::new(n, specs.clone())).unwrap();
                let parallel =
                    decide(&ArrowingProblem::new(n, specs).with_workers(workers)).unwrap();
                assert_eq!(
                    sequential.verdict.arrows(),
                    parallel.verdict.arrows(),
                    "n={n} workers={workers}"
                );
            }
        }
    }

    #[test]
    fn parallel_turan_first_agrees_too() {
        use berge_core::search::Strategy;
        let specs = vec![FamilySpec::Cycle(5), FamilySpec::Cycle(5), FamilySpec::Cycle(3)];
        for n in [5, 6] {
            let problem = ArrowingProblem::new(n, specs.clone()).with_strategy(Strategy::TuranFirst);
            let sequential = decide(&problem).unwrap();
            let parallel = decide(&problem.clone().with_workers(3)).unwrap();
            assert_eq!(sequential.verdict.arrows(), parallel.verdict.arrows(), "n={n}");
        }
    }
}
