//! A params-scoped context holding memo caches and an operation counter.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

use crate::error::Result;
use crate::horocyclic::BaseTable;
use crate::params::GroupParams;

/// Entry point for all algorithms on one group `BS(p, q)`.
///
/// Caches (the small-integer llnf table and integer norms) are filled lazily
/// and are internally synchronized, so a `Group` can be shared across threads.
#[derive(Debug)]
pub struct Group {
    params: GroupParams,
    base: OnceLock<BaseTable>,
    norms: Mutex<HashMap<BigInt, u64>>,
    ops: AtomicU64,
}

impl Group {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        Ok(Group::from_params(GroupParams::new(p, q)?))
    }

    pub fn from_params(params: GroupParams) -> Self {
        Group {
            params,
            base: OnceLock::new(),
            norms: Mutex::new(HashMap::new()),
            ops: AtomicU64::new(0),
        }
    }

    #[inline]
    pub fn params(&self) -> &GroupParams {
        &self.params
    }

    /// Arithmetic operations counted since construction or the last reset.
    pub fn ops(&self) -> u64 {
        self.ops.load(Ordering::Relaxed)
    }

    pub fn reset_ops(&self) {
        self.ops.store(0, Ordering::Relaxed);
    }

    #[inline]
    pub(crate) fn tick(&self, n: u64) {
        self.ops.fetch_add(n, Ordering::Relaxed);
    }

    /// The table of llnf(ρ) for `|ρ| <= r + q`, built on first use.
    pub fn base_table(&self) -> &BaseTable {
        self.base.get_or_init(|| BaseTable::build(&self.params))
    }

    pub(crate) fn cached_norm(&self, n: &BigInt) -> Option<u64> {
        self.norms
            .lock()
            .expect("norm cache poisoned")
            .get(n)
            .copied()
    }

    pub(crate) fn store_norm(&self, n: BigInt, v: u64) {
        let mut m = self.norms.lock().expect("norm cache poisoned");
        if m.len() > 1 << 20 {
            m.clear();
        }
        m.insert(n, v);
    }
}
