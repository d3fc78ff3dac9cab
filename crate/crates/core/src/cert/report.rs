use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par::Exec;

/// Outcome of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// One point (or symbolic scope) where the two sides differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub point: String,
    pub lhs: String,
    pub rhs: String,
}

const MAX_TEXT: usize = 4000;

fn clip(text: String) -> String {
    if text.len() <= MAX_TEXT {
        return text;
    }
    let mut cut = MAX_TEXT;
    while !text.is_char_boundary(cut) {
        cut -= 1;
    }
    format!("{}... ({} bytes)", &text[..cut], text.len())
}

impl Failure {
    pub fn new(point: impl Into<String>, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Self {
        Failure { point: point.into(), lhs: clip(lhs.to_string()), rhs: clip(rhs.to_string()) }
    }

    pub fn error(point: impl Into<String>, err: &Error) -> Self {
        Failure { point: point.into(), lhs: "error".into(), rhs: clip(err.to_string()) }
    }
}

/// Structured result of an identity or grid check. `grid` is `[0, 0]` for
/// symbolic checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub status: Status,
    pub grid: [i64; 2],
    pub failures: Vec<Failure>,
    pub ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Builds a report from failures: pass iff there are none.
    pub fn from_failures(check: impl Into<String>, grid: [i64; 2], failures: Vec<Failure>, start: Instant) -> Self {
        let status = if failures.is_empty() { Status::Pass } else { Status::Fail };
        VerificationReport { check: check.into(), status, grid, failures, ms: start.elapsed().as_millis() as u64 }
    }

    /// A check that is run for the record only; its mismatch is kept in `failures`.
    pub fn informational(mut self) -> Self {
        if self.status == Status::Fail {
            self.status = Status::Skipped;
        }
        self
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<7} {}", self.status, self.check)?;
        if self.grid != [0, 0] {
            write!(f, " [grid {}x{}]", self.grid[0], self.grid[1])?;
        }
        write!(f, " ({} ms)", self.ms)?;
        for x in self.failures.iter().take(3) {
            write!(f, "\n        at {}: {} != {}", x.point, short(&x.lhs), short(&x.rhs))?;
        }
        if self.failures.len() > 3 {
            write!(f, "\n        ... {} more", self.failures.len() - 3)?;
        }
        Ok(())
    }
}

fn short(s: &str) -> String {
    if s.len() <= 120 {
        s.to_string()
    } else {
        let mut cut = 117;
        while !s.is_char_boundary(cut) {
            cut -= 1;
        }
        format!("{}...", &s[..cut])
    }
}

/// Compares two values symbolically.
pub fn check_equal<T: PartialEq + fmt::Display>(check: &str, lhs: &T, rhs: &T) -> VerificationReport {
    let start = Instant::now();
    let failures = if lhs == rhs { Vec::new() } else { vec![Failure::new("symbolic", lhs, rhs)] };
    VerificationReport::from_failures(check, [0, 0], failures, start)
}

/// Compares values computed by a fallible closure.
pub fn check_equal_with<T, F>(check: &str, f: F) -> VerificationReport
where
    T: PartialEq + fmt::Display,
    F: FnOnce() -> Result<(T, T)>,
{
    let start = Instant::now();
    let failures = match f() {
        Ok((l, r)) if l == r => Vec::new(),
        Ok((l, r)) => vec![Failure::new("symbolic", l, r)],
        Err(e) => vec![Failure::error("symbolic", &e)],
    };
    VerificationReport::from_failures(check, [0, 0], failures, start)
}

/// Runs a boolean check; `detail` describes the failure.
pub fn check_that(check: &str, ok: Result<bool>, detail: impl FnOnce() -> (String, String)) -> VerificationReport {
    let start = Instant::now();
    let failures = match ok {
        Ok(true) => Vec::new(),
        Ok(false) => {
            let (l, r) = detail();
            vec![Failure::new("symbolic", l, r)]
        }
        Err(e) => vec![Failure::error("symbolic", &e)],
    };
    VerificationReport::from_failures(check, [0, 0], failures, start)
}

/// Evaluates `f` at every point (in parallel under `exec`) and collects the
/// points where the two returned sides differ, in point order.
pub fn check_points<R, F>(check: &str, grid: [i64; 2], points: &[Vec<i64>], exec: Exec, f: F) -> VerificationReport
where
    R: PartialEq + fmt::Display + Send,
    F: Fn(&[i64]) -> Result<(R, R)> + Sync + Send,
{
    let start = Instant::now();
    let results = exec.map(points, |p| (p.clone(), f(p)));
    let mut failures = Vec::new();
    for (p, r) in results {
        let at = format!("{:?}", p);
        match r {
            Ok((l, r)) if l == r => {}
            Ok((l, r)) => failures.push(Failure::new(at, l, r)),
            Err(e) => failures.push(Failure::error(at, &e)),
        }
    }
    VerificationReport::from_failures(check, grid, failures, start)
}

/// `(m, n)` for `1 <= m <= gm`, `1 <= n <= gn`.
pub fn color_grid(grid: [i64; 2]) -> Vec<Vec<i64>> {
    (1..=grid[0]).flat_map(|m| (1..=grid[1]).map(move |n| vec![m, n])).collect()
}

/// `(m, n, i)` with `(m, n)` in the color grid and `0 <= i <= min(m, n) + extra`.
pub fn summand_grid(grid: [i64; 2], extra: i64) -> Vec<Vec<i64>> {
    color_grid(grid).into_iter().flat_map(|p| (0..=p[0].min(p[1]) + extra).map(move |i| vec![p[0], p[1], i])).collect()
}
