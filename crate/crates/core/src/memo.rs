//! Memoization keyed by invariant instance, plus the line-oriented cache file.
//!
//! Cache lines look like `family;p1,p2,...;value` where the value is a decimal
//! integer or a reduced `p/q` fraction. Loading is all-or-nothing.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::io;
use std::path::Path;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::arith::{format_rational, parse_rational, ExactRational};

/// Formula variant for the cuspidal recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum CuspVariant {
    /// Obtained by equating the two boundary expansions term by term.
    #[default]
    Derivation,
    /// The closed form as stated alongside the main theorem.
    Theorem,
}

impl CuspVariant {
    pub fn name(self) -> &'static str {
        match self {
            CuspVariant::Derivation => "derivation",
            CuspVariant::Theorem => "theorem",
        }
    }
}

impl std::str::FromStr for CuspVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "derivation" => Ok(CuspVariant::Derivation),
            "theorem" => Ok(CuspVariant::Theorem),
            other => Err(format!("unknown variant `{other}`")),
        }
    }
}

/// Identifies one memoized invariant instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvariantKey {
    Kontsevich { d: i64, m: i64 },
    /// One-point integral with a single power of the cotangent class.
    PhiPsi { d: i64, j: i64, m: i64 },
    Tangency { d1: i64, d2: i64, m1: i64, m2: i64, n: i64 },
    Cusp { variant: CuspVariant, d: i64, m: i64, n: i64 },
    CuspTangent { m1: i64, m2: i64, n: i64 },
    E6 { n: i64 },
}

impl InvariantKey {
    pub fn family(&self) -> &'static str {
        match self {
            InvariantKey::Kontsevich { .. } => "N",
            InvariantKey::PhiPsi { .. } => "PHI1",
            InvariantKey::Tangency { .. } => "T",
            InvariantKey::Cusp { variant: CuspVariant::Derivation, .. } => "C",
            InvariantKey::Cusp { variant: CuspVariant::Theorem, .. } => "CTHM",
            InvariantKey::CuspTangent { .. } => "CT",
            InvariantKey::E6 { .. } => "E6",
        }
    }

    pub fn params(&self) -> Vec<i64> {
        match *self {
            InvariantKey::Kontsevich { d, m } => vec![d, m],
            InvariantKey::PhiPsi { d, j, m } => vec![d, j, m],
            InvariantKey::Tangency { d1, d2, m1, m2, n } => vec![d1, d2, m1, m2, n],
            InvariantKey::Cusp { d, m, n, .. } => vec![d, m, n],
            InvariantKey::CuspTangent { m1, m2, n } => vec![m1, m2, n],
            InvariantKey::E6 { n } => vec![n],
        }
    }

    pub fn from_parts(family: &str, p: &[i64]) -> Option<Self> {
        let key = match (family, p) {
            ("N", &[d, m]) => InvariantKey::Kontsevich { d, m },
            ("PHI1", &[d, j, m]) => InvariantKey::PhiPsi { d, j, m },
            ("T", &[d1, d2, m1, m2, n]) => InvariantKey::Tangency { d1, d2, m1, m2, n },
            ("C", &[d, m, n]) => InvariantKey::Cusp { variant: CuspVariant::Derivation, d, m, n },
            ("CTHM", &[d, m, n]) => InvariantKey::Cusp { variant: CuspVariant::Theorem, d, m, n },
            ("CT", &[m1, m2, n]) => InvariantKey::CuspTangent { m1, m2, n },
            ("E6", &[n]) => InvariantKey::E6 { n },
            _ => return None,
        };
        Some(key)
    }
}

impl fmt::Display for InvariantKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(i64::to_string).collect();
        write!(f, "{}({})", self.family(), params.join(","))
    }
}

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache i/o: {0}")]
    Io(#[from] io::Error),
    #[error("malformed cache line {line}: {reason}")]
    Malformed { line: usize, reason: String },
}

type Cell = Arc<OnceLock<ExactRational>>;

/// Thread-safe get-or-compute store.
///
/// Each key owns a once-cell, so concurrent callers asking for the same key
/// block on a single computation. The outer lock is only held while looking up
/// the cell, which lets a computation recurse into other keys.
#[derive(Debug, Default)]
pub struct MemoStore {
    cells: Mutex<HashMap<InvariantKey, Cell>>,
}

impl MemoStore {
    pub fn new() -> Self {
        Self::default()
    }

    fn cell(&self, key: InvariantKey) -> Cell {
        let mut cells = self.cells.lock().expect("memo lock poisoned");
        cells.entry(key).or_default().clone()
    }

    pub fn get_or_compute(
        &self,
        key: InvariantKey,
        compute: impl FnOnce() -> ExactRational,
    ) -> ExactRational {
        self.cell(key).get_or_init(compute).clone()
    }

    pub fn get(&self, key: &InvariantKey) -> Option<ExactRational> {
        let cells = self.cells.lock().expect("memo lock poisoned");
        cells.get(key).and_then(|c| c.get().cloned())
    }

    /// Stores `value` unless the key already holds one.
    pub fn insert(&self, key: InvariantKey, value: ExactRational) {
        let _ = self.cell(key).set(value);
    }

    pub fn len(&self) -> usize {
        let cells = self.cells.lock().expect("memo lock poisoned");
        cells.values().filter(|c| c.get().is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All computed entries, sorted by key.
    pub fn entries(&self) -> Vec<(InvariantKey, ExactRational)> {
        let cells = self.cells.lock().expect("memo lock poisoned");
        let mut out: Vec<_> = cells
            .iter()
            .filter_map(|(k, c)| c.get().map(|v| (*k, v.clone())))
            .collect();
        out.sort_by_key(|a| a.0);
        out
    }

    pub fn to_cache_string(&self) -> String {
        let mut out = String::new();
        for (key, value) in self.entries() {
            let params: Vec<String> = key.params().iter().map(i64::to_string).collect();
            out.push_str(&format!(
                "{};{};{}\n",
                key.family(),
                params.join(","),
                format_rational(&value)
            ));
        }
        out
    }

    /// Parses cache text and, only if every line is valid, merges it in.
    /// Returns the number of records read.
    pub fn load_str(&self, text: &str) -> Result<usize, CacheError> {
        let records = parse_cache(text)?;
        let count = records.len();
        for (key, value) in records {
            self.insert(key, value);
        }
        Ok(count)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), CacheError> {
        fs::write(path, self.to_cache_string())?;
        Ok(())
    }

    pub fn load(&self, path: impl AsRef<Path>) -> Result<usize, CacheError> {
        let text = fs::read_to_string(path)?;
        self.load_str(&text)
    }
}

fn parse_cache(text: &str) -> Result<Vec<(InvariantKey, ExactRational)>, CacheError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let malformed = |reason: &str| CacheError::Malformed { line, reason: reason.to_string() };
        if raw.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = raw.split(';').collect();
        let [family, params, value] = fields[..] else {
            return Err(malformed("expected `family;params;value`"));
        };
        let params: Vec<i64> = if params.is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|p| p.trim().parse::<i64>())
                .collect::<Result<_, _>>()
                .map_err(|_| malformed("non-integer parameter"))?
        };
        let key = InvariantKey::from_parts(family.trim(), &params)
            .ok_or_else(|| malformed("unknown family or wrong parameter count"))?;
        let value = parse_rational(value).ok_or_else(|| malformed("value is not a decimal rational"))?;
        out.push((key, value));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{frac, int};

    #[test]
    fn get_or_compute_runs_once() {
        let store = MemoStore::new();
        let key = InvariantKey::E6 { n: 0 };
        let mut calls = 0;
        let a = store.get_or_compute(key, || {
            calls += 1;
            int(147)
        });
        let b = store.get_or_compute(key, || unreachable!());
        assert_eq!(a, b);
        assert_eq!(calls, 1);
        assert_eq!(store.len(), 1);
    }

    #[test]
    fn concurrent_callers_share_one_value() {
        let store = Arc::new(MemoStore::new());
        let key = InvariantKey::Kontsevich { d: 3, m: 8 };
        let counter = Arc::new(std::sync::atomic::AtomicUsize::new(0));
        std::thread::scope(|s| {
            for _ in 0..8 {
                let store = &store;
                let counter = &counter;
                s.spawn(move || {
                    store.get_or_compute(key, || {
                        counter.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                        int(12)
                    })
                });
            }
        });
        assert_eq!(counter.load(std::sync::atomic::Ordering::SeqCst), 1);
        assert_eq!(store.get(&key), Some(int(12)));
    }

    #[test]
    fn cache_text_round_trip() {
        let store = MemoStore::new();
        store.insert(InvariantKey::Kontsevich { d: 3, m: 8 }, int(12));
        store.insert(InvariantKey::PhiPsi { d: 2, j: 1, m: 4 }, frac(-7, 4));
        store.insert(InvariantKey::Cusp { variant: CuspVariant::Theorem, d: 3, m: 7, n: 0 }, int(-1086));
        let text = store.to_cache_string();
        assert_eq!(text, "N;3,8;12\nPHI1;2,1,4;-7/4\nCTHM;3,7,0;-1086\n");

        let again = MemoStore::new();
        assert_eq!(again.load_str(&text).unwrap(), 3);
        assert_eq!(again.to_cache_string(), text);
    }

    #[test]
    fn empty_cache_loads() {
        let store = MemoStore::new();
        assert_eq!(store.load_str("").unwrap(), 0);
        assert!(store.is_empty());
    }

    #[test]
    fn malformed_line_aborts_without_partial_apply() {
        let store = MemoStore::new();
        let err = store.load_str("N;1,2;1\nC;3,7;24\n").unwrap_err();
        match err {
            CacheError::Malformed { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(store.is_empty());

        for bad in ["N;1,2", "X;1;1", "N;1,x;1", "N;1,2;1.5", "N;1,2;2/4"] {
            assert!(matches!(
                MemoStore::new().load_str(bad),
                Err(CacheError::Malformed { line: 1, .. })
            ), "{bad}");
        }
    }

    #[test]
    fn key_display() {
        let key = InvariantKey::Tangency { d1: 1, d2: 2, m1: 2, m2: 4, n: 0 };
        assert_eq!(key.to_string(), "T(1,2,2,4,0)");
    }
}
