//! Refusal threshold for the size of a single degree.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_RESOURCE_CAP: usize = 1_000_000;

/// Environment variable consulted when no explicit cap has been set.
pub const RESOURCE_CAP_ENV: &str = "ENTWINED_MAX_DIM";

static OVERRIDE: AtomicUsize = AtomicUsize::new(0);

/// Largest dimension allowed for any single component or cochain space.
pub fn resource_cap() -> usize {
    match OVERRIDE.load(Ordering::Relaxed) {
        0 => std::env::var(RESOURCE_CAP_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .filter(|&n: &usize| n > 0)
            .unwrap_or(DEFAULT_RESOURCE_CAP),
        n => n,
    }
}

/// Process-wide override; `0` restores the default lookup.
pub fn set_resource_cap(cap: usize) {
    OVERRIDE.store(cap, Ordering::Relaxed);
}

pub(crate) fn check_cap(degree: usize, dim: usize) -> Result<()> {
    let cap = resource_cap();
    if dim > cap {
        Err(Error::ResourceCap { degree, dim, cap })
    } else {
        Ok(())
    }
}
