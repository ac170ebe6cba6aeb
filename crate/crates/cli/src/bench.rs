//! Measured versus predicted operation counts for the direct route.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use faulhaber_core::{direct_coefficients, OpCounter};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub p: usize,
    pub measured: OpCounter,
    pub predicted: OpCounter,
    pub elapsed: Duration,
}

impl BenchRow {
    pub fn matches(&self) -> bool {
        self.measured == self.predicted
    }
}

/// `0` followed by `1, 2, 3, 5` times powers of ten up to `p_max`, plus `p_max`.
pub fn schedule(p_max: usize) -> Vec<usize> {
    let mut out = vec![0];
    let mut decade = 1usize;
    'outer: loop {
        for m in [1, 2, 3, 5] {
            match decade.checked_mul(m) {
                Some(p) if p <= p_max => out.push(p),
                _ => break 'outer,
            }
        }
        decade = match decade.checked_mul(10) {
            Some(d) => d,
            None => break,
        };
    }
    if out.last() != Some(&p_max) {
        out.push(p_max);
    }
    out
}

pub fn measure(p: usize) -> BenchRow {
    let mut measured = OpCounter::new();
    let start = Instant::now();
    direct_coefficients(p, Some(&mut measured));
    let elapsed = start.elapsed();
    let q = p as u64;
    BenchRow {
        p,
        measured,
        predicted: OpCounter {
            additions: OpCounter::predicted_additions(q),
            multiplications: OpCounter::predicted_multiplications(q),
        },
        elapsed,
    }
}

pub fn run_bench(p_max: usize) -> Vec<BenchRow> {
    schedule(p_max).into_iter().map(measure).collect()
}

pub fn render(rows: &[BenchRow]) -> String {
    let mut out = format!(
        "{:>8} {:>14} {:>14} {:>14} {:>14} {:>12}\n",
        "p", "additions", "pred_add", "multiplications", "pred_mul", "time_us"
    );
    for r in rows {
        writeln!(
            out,
            "{:>8} {:>14} {:>14} {:>14} {:>14} {:>12}",
            r.p,
            r.measured.additions,
            r.predicted.additions,
            r.measured.multiplications,
            r.predicted.multiplications,
            r.elapsed.as_micros()
        )
        .unwrap();
    }
    out
}
