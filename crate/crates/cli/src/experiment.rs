//! Ratio experiment harness: seeded trials, CSV report, and the summary
//! line. Identical settings produce identical report bytes; trials draw
//! from independent RNG streams, so any worker count gives the same rows.

use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};

use anyhow::Result;

use udg_dom::approx::{total_dominating_set, total_roman_function, verify_tds, verify_trdf};
use udg_dom::exact::{exact_min_tds, exact_min_trdf};
use udg_dom::generator::{self, DEFAULT_RETRY_CAP};

use crate::{ApproxProblem, Violation};

pub struct RatioSettings {
    pub problem: ApproxProblem,
    pub trials: usize,
    pub n: usize,
    pub width: f64,
    pub height: f64,
    pub radius: f64,
    pub seed: u64,
    pub exact_limit: Option<usize>,
    pub out: PathBuf,
}

struct TrialRow {
    trial: usize,
    n: usize,
    edges: usize,
    approx: usize,
    exact: Option<usize>,
    verified: bool,
}

/// Worker count from `UDG_DOM_WORKERS`; single-threaded by default.
pub fn worker_count() -> usize {
    std::env::var("UDG_DOM_WORKERS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&w| w >= 1)
        .unwrap_or(1)
}

/// Applies `f` to every item, on `workers` threads when asked, returning
/// results in input order regardless of scheduling.
pub fn parallel_map<T, R, F>(items: &[T], workers: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    if workers <= 1 || items.len() <= 1 {
        return items.iter().map(f).collect();
    }
    let next = AtomicUsize::new(0);
    let mut indexed: Vec<(usize, R)> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers.min(items.len()))
            .map(|_| {
                scope.spawn(|| {
                    let mut local = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= items.len() {
                            break;
                        }
                        local.push((i, f(&items[i])));
                    }
                    local
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    indexed.sort_by_key(|(i, _)| *i);
    indexed.into_iter().map(|(_, r)| r).collect()
}

fn bound_for(problem: ApproxProblem) -> (usize, usize, &'static str) {
    match problem {
        ApproxProblem::Tds => (1291, 180, "1291/180"),
        ApproxProblem::Trds => (2171, 360, "2171/360"),
    }
}

fn run_trial(settings: &RatioSettings, trial: usize, exact_limit: usize) -> Result<TrialRow> {
    let mut rng = generator::trial_rng(settings.seed, trial as u64);
    let g = generator::sample_without_isolated(
        &mut rng,
        settings.n,
        settings.width,
        settings.height,
        settings.radius,
        DEFAULT_RETRY_CAP,
    )?;
    let within_limit = settings.n <= exact_limit;
    let (approx, exact, verified) = match settings.problem {
        ApproxProblem::Tds => {
            let s = total_dominating_set(&g)?;
            let exact = if within_limit {
                Some(exact_min_tds(&g, exact_limit)?.objective)
            } else {
                None
            };
            (s.len(), exact, verify_tds(&g, &s))
        }
        ApproxProblem::Trds => {
            let f = total_roman_function(&g)?;
            let exact = if within_limit {
                Some(exact_min_trdf(&g, exact_limit, false)?.objective)
            } else {
                None
            };
            (f.weight(), exact, verify_trdf(&g, &f))
        }
    };
    Ok(TrialRow {
        trial,
        n: settings.n,
        edges: g.edge_count(),
        approx,
        exact,
        verified,
    })
}

pub fn run_ratio(settings: RatioSettings) -> Result<()> {
    let exact_limit = settings.exact_limit.unwrap_or(match settings.problem {
        ApproxProblem::Tds => 18,
        ApproxProblem::Trds => 14,
    });
    let (bound_num, bound_den, bound_str) = bound_for(settings.problem);

    let trials: Vec<usize> = (0..settings.trials).collect();
    let rows = parallel_map(&trials, worker_count(), |&trial| {
        run_trial(&settings, trial, exact_limit)
    });

    let mut csv = String::from("trial,n,edges,approx,exact,ratio,bound,verified\n");
    let mut violations = Vec::new();
    let mut max_ratio = f64::NEG_INFINITY;
    let mut ratio_sum = 0.0;
    let mut ratio_count = 0usize;

    for row in &rows {
        let row = match row {
            Ok(r) => r,
            Err(e) => return Err(anyhow::anyhow!("trial failed: {e}")),
        };
        let (exact_field, ratio_field) = match row.exact {
            Some(exact) => {
                let ratio = row.approx as f64 / exact as f64;
                max_ratio = max_ratio.max(ratio);
                ratio_sum += ratio;
                ratio_count += 1;
                // the bound is checked in integers, never in floats
                if row.approx * bound_den > bound_num * exact {
                    violations.push(format!(
                        "trial {}: ratio {}/{} exceeds {}",
                        row.trial, row.approx, exact, bound_str
                    ));
                }
                (exact.to_string(), format!("{ratio:.6}"))
            }
            None => ("NA".to_string(), "NA".to_string()),
        };
        if !row.verified {
            violations.push(format!("trial {}: verifier failed", row.trial));
        }
        csv.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            row.trial,
            row.n,
            row.edges,
            row.approx,
            exact_field,
            ratio_field,
            bound_str,
            row.verified
        ));
    }

    let summary = if ratio_count > 0 {
        format!(
            "# summary max_ratio={:.6} mean_ratio={:.6} trials_with_exact={}",
            max_ratio,
            ratio_sum / ratio_count as f64,
            ratio_count
        )
    } else {
        "# summary no exact objectives within limit".to_string()
    };
    csv.push_str(&summary);
    csv.push('\n');

    std::fs::write(&settings.out, csv)?;
    println!("{summary}");

    if violations.is_empty() {
        Ok(())
    } else {
        Err(Violation(violations.join("; ")).into())
    }
}
