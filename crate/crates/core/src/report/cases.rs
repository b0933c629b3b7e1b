//! Small builders shared by the suites.

use std::fmt::Display;

use rand_chacha::ChaCha8Rng;

use crate::algebra::{RootTwoScaled, TwistedElement};
use crate::conformance::ConformanceCase;
use crate::sample::rng_for;

/// A unit of work producing one or more cases; jobs run concurrently.
pub(crate) type Job = Box<dyn Fn() -> Vec<ConformanceCase> + Send + Sync>;

pub(crate) fn one(f: impl Fn() -> ConformanceCase + Send + Sync + 'static) -> Job {
    Box::new(move || vec![f()])
}

pub(crate) fn many(f: impl Fn() -> Vec<ConformanceCase> + Send + Sync + 'static) -> Job {
    Box::new(f)
}

pub(crate) fn exact<E: Display>(id: impl Into<String>, anchor: &str, r: Result<TwistedElement, E>) -> ConformanceCase {
    let id = id.into();
    match r {
        Ok(res) => ConformanceCase::exact(id, anchor, res),
        Err(e) => ConformanceCase::error(id, anchor, e),
    }
}

pub(crate) fn exact_scaled<E: Display>(
    id: impl Into<String>,
    anchor: &str,
    r: Result<RootTwoScaled, E>,
) -> ConformanceCase {
    let id = id.into();
    match r {
        Ok(res) => ConformanceCase::exact_scaled(id, anchor, res),
        Err(e) => ConformanceCase::error(id, anchor, e),
    }
}

/// One drawn sample: its residual and a description of the inputs.
pub(crate) type Drawn = Result<(TwistedElement, String), String>;

/// Runs `samples` seeded draws; the first nonzero residual becomes the
/// FAIL residual, with the inputs in the note.
pub(crate) fn property(
    id: impl Into<String>,
    anchor: &str,
    seed: u64,
    samples: usize,
    check: impl Fn(&mut ChaCha8Rng) -> Drawn,
) -> ConformanceCase {
    let id = id.into();
    let mut rng = rng_for(seed, &id);
    for i in 0..samples {
        match check(&mut rng) {
            Ok((r, _)) if r.is_zero() => {}
            Ok((r, inputs)) => {
                return ConformanceCase::exact(id, anchor, r)
                    .with_note(format!("counterexample at sample {}/{samples}: {inputs}", i + 1));
            }
            Err(e) => {
                return ConformanceCase::error(id, anchor, e).with_note(format!("sample {}/{samples}", i + 1));
            }
        }
    }
    ConformanceCase::check(id, anchor, true, format!("{samples} seeded samples"))
}

/// Draws every sample and records each result as INFO (used where no
/// claim is made).
pub(crate) fn observed(id: &str, anchor: &str, value: Result<TwistedElement, impl Display>) -> ConformanceCase {
    match value {
        Ok(v) => ConformanceCase::info(id, anchor, v),
        Err(e) => ConformanceCase::error(id, anchor, e).informational(),
    }
}
