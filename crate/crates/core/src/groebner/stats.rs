//! Process-wide counters for Gröbner basis work.

use std::sync::atomic::{AtomicU64, Ordering};

static PAIRS: AtomicU64 = AtomicU64::new(0);
static ZERO_REDUCTIONS: AtomicU64 = AtomicU64::new(0);
static BASIS_ELEMENTS: AtomicU64 = AtomicU64::new(0);

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GbStats {
    pub pairs: u64,
    pub zero_reductions: u64,
    pub basis_elements: u64,
}

pub(crate) fn record_pair() {
    PAIRS.fetch_add(1, Ordering::Relaxed);
}

pub(crate) fn record_zero_reduction() {
    ZERO_REDUCTIONS.fetch_add(1, Ordering::Relaxed);
}

pub(crate) fn record_basis_element() {
    BASIS_ELEMENTS.fetch_add(1, Ordering::Relaxed);
}

pub fn snapshot() -> GbStats {
    GbStats {
        pairs: PAIRS.load(Ordering::Relaxed),
        zero_reductions: ZERO_REDUCTIONS.load(Ordering::Relaxed),
        basis_elements: BASIS_ELEMENTS.load(Ordering::Relaxed),
    }
}
