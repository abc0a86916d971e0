//! Pass/fail bookkeeping for the acceptance target.

use std::time::{Duration, Instant};

/// Result of one criterion; `Err` carries the reason it failed.
pub type Check = Result<String, String>;

#[derive(Debug, Default)]
pub struct Ledger {
    failed: Vec<u32>,
}

impl Ledger {
    /// Runs `f`, enforces the runtime limit and prints one line.
    pub fn run(&mut self, id: u32, title: &str, limit: Duration, f: impl FnOnce() -> Check) {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > limit => Err(format!("{detail}; over time limit {limit:?}")),
            other => other,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("criterion {id} [{title}]: {tag} ({elapsed:.2?}) {detail}");
        if outcome.is_err() {
            self.failed.push(id);
        }
    }

    pub fn failed(&self) -> &[u32] {
        &self.failed
    }
}

/// `Ok(())` when `cond` holds, else the message.
pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}
