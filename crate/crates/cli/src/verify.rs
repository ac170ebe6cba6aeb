//! Cross-verification of the three coefficient routes, the operation counts,
//! and the Bernoulli-polynomial identities.

use std::fmt;
use std::ops::RangeInclusive;

use faulhaber_core::bernoulli::{check_identity_i, check_identity_ii, check_identity_iii};
use faulhaber_core::{direct_coefficients, CoefficientRow, Method, OpCounter, Rational};
use rayon::prelude::*;

/// Perturbs one direct-route coefficient before comparison. Test hook.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fault {
    pub p: usize,
    /// Power of `n` whose coefficient gets 1 added.
    pub index: usize,
}

impl std::str::FromStr for Fault {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (p, j) = s
            .split_once(':')
            .ok_or_else(|| format!("expected P:INDEX, got {s:?}"))?;
        let p = p.parse().map_err(|_| format!("bad degree {p:?}"))?;
        let index = j.parse().map_err(|_| format!("bad index {j:?}"))?;
        Ok(Fault { p, index })
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Worker threads; `None` uses the rayon default.
    pub jobs: Option<usize>,
    pub fault: Option<Fault>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub p: usize,
    pub pair: (Method, Method),
    /// Power of `n` of the first differing coefficient.
    pub index: usize,
    pub left: Option<Rational>,
    pub right: Option<Rational>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
}

impl Tally {
    fn record(&mut self, ok: bool) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
    }

    fn merge(self, other: Tally) -> Tally {
        Tally {
            passed: self.passed + other.passed,
            failed: self.failed + other.failed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpCountCheck {
    pub p: usize,
    pub measured: OpCounter,
    pub ok: bool,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub p_range: RangeInclusive<usize>,
    pub paths_compared: Vec<Method>,
    pub mismatches: Vec<Mismatch>,
    pub op_count_checks: Vec<OpCountCheck>,
    /// Degrees whose direct row breaks a structural invariant, with the reason.
    pub invariant_failures: Vec<(usize, String)>,
    pub identity_i: Tally,
    pub identity_ii: Tally,
    pub identity_iii: Tally,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
            && self.invariant_failures.is_empty()
            && self.op_count_checks.iter().all(|c| c.ok)
            && [self.identity_i, self.identity_ii, self.identity_iii]
                .iter()
                .all(|t| t.failed == 0)
    }
}

/// Degrees checked for `f_{p-1}(n) = (B_p(n+1) - B_p(0))/p`. The relation
/// is false at `p = 1`, where the right side is `n + 1`.
pub const IDENTITY_I_DEGREES: RangeInclusive<usize> = 2..=30;
pub const IDENTITY_I_POINTS: RangeInclusive<u64> = 1..=20;
pub const IDENTITY_II_DEGREES: RangeInclusive<usize> = 0..=30;
pub const IDENTITY_II_ENDPOINTS: [&str; 5] = ["0", "1", "1/2", "-1", "2"];
pub const IDENTITY_III_DEGREES: RangeInclusive<usize> = 2..=30;
pub const IDENTITY_III_POINTS: RangeInclusive<u64> = 0..=20;

struct DegreeResult {
    mismatches: Vec<Mismatch>,
    op_check: OpCountCheck,
    invariant: Option<String>,
}

fn first_difference(a: &CoefficientRow, b: &CoefficientRow) -> Option<usize> {
    let (x, y) = (a.coeffs(), b.coeffs());
    (0..x.len().max(y.len()))
        .find(|&k| x.get(k) != y.get(k))
        .map(|k| k + 1)
}

fn check_degree(p: usize, fault: Option<Fault>) -> DegreeResult {
    let mut counter = OpCounter::new();
    let mut direct = direct_coefficients(p, Some(&mut counter));
    if let Some(f) = fault.filter(|f| f.p == p) {
        let mut cs = direct.into_coeffs();
        if let Some(c) = f.index.checked_sub(1).and_then(|k| cs.get_mut(k)) {
            *c = &*c + Rational::one();
        }
        direct = CoefficientRow::new(cs).expect("non-empty");
    }

    let mut mismatches = Vec::new();
    for other in [Method::Lemma, Method::Bernoulli] {
        let pair = (Method::Direct, other);
        match other.coefficients(p) {
            Ok(row) => {
                if let Some(index) = first_difference(&direct, &row) {
                    mismatches.push(Mismatch {
                        p,
                        pair,
                        index,
                        left: direct.coefficient(index).cloned(),
                        right: row.coefficient(index).cloned(),
                        error: None,
                    });
                }
            }
            Err(e) => mismatches.push(Mismatch {
                p,
                pair,
                index: 0,
                left: None,
                right: None,
                error: Some(e.to_string()),
            }),
        }
    }

    DegreeResult {
        mismatches,
        op_check: OpCountCheck {
            p,
            measured: counter,
            ok: counter.matches_prediction(p as u64),
        },
        invariant: direct.check_invariants().err(),
    }
}

fn identity_tallies() -> (Tally, Tally, Tally) {
    let one = IDENTITY_I_DEGREES
        .into_par_iter()
        .map(|p| {
            let mut t = Tally::default();
            for n in IDENTITY_I_POINTS {
                t.record(check_identity_i(p, n).unwrap_or(false));
            }
            t
        })
        .reduce(Tally::default, Tally::merge);

    let ends: Vec<Rational> = IDENTITY_II_ENDPOINTS
        .iter()
        .map(|s| s.parse().expect("literal endpoint"))
        .collect();
    let two = IDENTITY_II_DEGREES
        .into_par_iter()
        .map(|i| {
            let mut t = Tally::default();
            for a in &ends {
                for b in &ends {
                    t.record(check_identity_ii(i, a, b));
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge);

    let three = IDENTITY_III_DEGREES
        .into_par_iter()
        .map(|i| {
            let mut t = Tally::default();
            for n in IDENTITY_III_POINTS {
                t.record(check_identity_iii(i, n).unwrap_or(false));
            }
            t
        })
        .reduce(Tally::default, Tally::merge);

    (one, two, three)
}

fn run_inner(p_max: usize, fault: Option<Fault>) -> VerifyReport {
    let mut results: Vec<(usize, DegreeResult)> = (0..=p_max)
        .into_par_iter()
        .map(|p| (p, check_degree(p, fault)))
        .collect();
    results.sort_by_key(|(p, _)| *p);

    let (identity_i, identity_ii, identity_iii) = identity_tallies();

    let mut report = VerifyReport {
        p_range: 0..=p_max,
        paths_compared: Method::ALL.to_vec(),
        mismatches: Vec::new(),
        op_count_checks: Vec::with_capacity(results.len()),
        invariant_failures: Vec::new(),
        identity_i,
        identity_ii,
        identity_iii,
    };
    for (p, r) in results {
        report.mismatches.extend(r.mismatches);
        report.op_count_checks.push(r.op_check);
        if let Some(why) = r.invariant {
            report.invariant_failures.push((p, why));
        }
    }
    report
}

pub fn run_verify(p_max: usize, options: &VerifyOptions) -> VerifyReport {
    match options.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(|| run_inner(p_max, options.fault)),
        None => run_inner(p_max, options.fault),
    }
}

fn show(x: &Option<Rational>) -> String {
    x.as_ref()
        .map_or_else(|| "-".to_string(), Rational::to_string)
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = self.paths_compared.iter().map(|m| m.name()).collect();
        writeln!(
            f,
            "verify p={}..={} paths={}",
            self.p_range.start(),
            self.p_range.end(),
            names.join(",")
        )?;
        writeln!(f, "mismatches: {}", self.mismatches.len())?;
        for m in &self.mismatches {
            match &m.error {
                Some(e) => writeln!(
                    f,
                    "  p={} {}/{}: {}",
                    m.p,
                    m.pair.0.name(),
                    m.pair.1.name(),
                    e
                )?,
                None => writeln!(
                    f,
                    "  p={} {}/{} differ at a_{}: {} vs {}",
                    m.p,
                    m.pair.0.name(),
                    m.pair.1.name(),
                    m.index,
                    show(&m.left),
                    show(&m.right)
                )?,
            }
        }
        let ok = self.op_count_checks.iter().filter(|c| c.ok).count();
        writeln!(f, "op counts: {}/{} match", ok, self.op_count_checks.len())?;
        for c in self.op_count_checks.iter().filter(|c| !c.ok) {
            writeln!(
                f,
                "  p={} measured {}+/{}* predicted {}+/{}*",
                c.p,
                c.measured.additions,
                c.measured.multiplications,
                OpCounter::predicted_additions(c.p as u64),
                OpCounter::predicted_multiplications(c.p as u64)
            )?;
        }
        writeln!(
            f,
            "row invariants: {} violations",
            self.invariant_failures.len()
        )?;
        for (_, why) in &self.invariant_failures {
            writeln!(f, "  {why}")?;
        }
        for (name, t) in [
            ("I", self.identity_i),
            ("II", self.identity_ii),
            ("III", self.identity_iii),
        ] {
            writeln!(
                f,
                "identity {name}: {} passed, {} failed",
                t.passed, t.failed
            )?;
        }
        write!(f, "result: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clean_run_passes() {
        let r = run_verify(8, &VerifyOptions::default());
        assert!(r.passed(), "{r}");
        assert_eq!(r.op_count_checks.len(), 9);
        assert_eq!(r.identity_i.passed, 29 * 20);
        assert_eq!(r.identity_ii.passed, 31 * 25);
        assert_eq!(r.identity_iii.passed, 29 * 21);
    }

    #[test]
    fn single_row_run() {
        let r = run_verify(
            0,
            &VerifyOptions {
                jobs: Some(1),
                fault: None,
            },
        );
        assert!(r.passed());
        assert_eq!(r.p_range, 0..=0);
    }

    #[test]
    fn fault_is_located() {
        let opts = VerifyOptions {
            jobs: Some(2),
            fault: Some(Fault { p: 4, index: 2 }),
        };
        let r = run_verify(6, &opts);
        assert!(!r.passed());
        assert_eq!(r.mismatches.len(), 2);
        for m in &r.mismatches {
            assert_eq!((m.p, m.index), (4, 2));
            assert_eq!(m.pair.0, Method::Direct);
        }
        assert_eq!(r.invariant_failures.len(), 1);
        let text = r.to_string();
        assert!(text.contains("p=4 direct/lemma differ at a_2"), "{text}");
        assert!(text.ends_with("result: FAIL"));
    }

    #[test]
    fn fault_parsing() {
        assert_eq!("3:2".parse::<Fault>(), Ok(Fault { p: 3, index: 2 }));
        assert!("3".parse::<Fault>().is_err());
        assert!("x:1".parse::<Fault>().is_err());
    }
}
