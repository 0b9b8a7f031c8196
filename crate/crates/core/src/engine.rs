use crate::arith::{to_integer, ExactInteger, ExactRational};
use crate::error::{Error, Result};
use crate::memo::{InvariantKey, MemoStore};

/// Entry point for every invariant computation. Holds the shared memo store;
/// the per-family operations live in their own modules as `impl Engine` blocks.
#[derive(Debug, Default)]
pub struct Engine {
    memo: MemoStore,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_store(memo: MemoStore) -> Self {
        Self { memo }
    }

    pub fn store(&self) -> &MemoStore {
        &self.memo
    }

    pub(crate) fn memo(&self, key: InvariantKey, compute: impl FnOnce() -> ExactRational) -> ExactRational {
        self.memo.get_or_compute(key, compute)
    }
}

pub(crate) fn expect_integer(key: InvariantKey, value: &ExactRational) -> Result<ExactInteger> {
    to_integer(value).ok_or_else(|| Error::NotIntegral {
        key,
        value: crate::arith::format_rational(value),
    })
}
