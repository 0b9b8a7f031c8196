//! Table builders for each invariant family.
//!
//! Keys are enumerated in a fixed order; values may be evaluated concurrently
//! but rows are always assembled in key order.

use rayon::prelude::*;

use crate::arith::ExactInteger;
use crate::engine::Engine;
use crate::error::Result;
use crate::memo::CuspVariant;
use crate::report::{Cell, Table};

/// Largest degree considered cheap; callers may warn beyond it.
pub const COMFORTABLE_MAX_DEGREE: i64 = 12;
pub const DEFAULT_CUSP_DMAX: i64 = 9;
pub const DEFAULT_TANGENCY_DMAX: i64 = 7;

fn evaluate<K, F>(keys: &[K], parallel: bool, f: F) -> Result<Vec<ExactInteger>>
where
    K: Sync,
    F: Fn(&K) -> Result<ExactInteger> + Sync,
{
    if parallel {
        keys.par_iter().map(&f).collect()
    } else {
        keys.iter().map(&f).collect()
    }
}

pub fn kontsevich_table(engine: &Engine, dmax: i64, parallel: bool) -> Result<Table> {
    let keys: Vec<i64> = (1..=dmax).collect();
    let values = evaluate(&keys, parallel, |&d| engine.kontsevich_n(d, 3 * d - 1))?;
    let mut t = Table::new(&["d", "m", "value"]);
    for (d, v) in keys.into_iter().zip(values) {
        t.push(vec![Cell::Index(d), Cell::Index(3 * d - 1), Cell::Big(v.to_string())]);
    }
    Ok(t)
}

/// `C^d_{3d-2-n}(n)` for `d` in `3..=dmax` and each requested `n`.
pub fn cusp_table(engine: &Engine, variant: CuspVariant, dmax: i64, ns: &[i64], parallel: bool) -> Result<Table> {
    let keys: Vec<(i64, i64)> = ns.iter().flat_map(|&n| (3..=dmax).map(move |d| (d, n))).collect();
    let values = evaluate(&keys, parallel, |&(d, n)| engine.cusp_count_with(variant, d, 3 * d - 2 - n, n))?;
    let mut t = Table::new(&["d", "m", "n", "value"]);
    for ((d, n), v) in keys.into_iter().zip(values) {
        t.push(vec![Cell::Index(d), Cell::Index(3 * d - 2 - n), Cell::Index(n), Cell::Big(v.to_string())]);
    }
    Ok(t)
}

/// Nonzero tangency counts with `d1 + d2 <= dmax` for each requested `n`.
pub fn tangency_table(engine: &Engine, dmax: i64, ns: &[i64], parallel: bool) -> Result<Table> {
    let mut keys = Vec::new();
    for &n in ns {
        for total in 2..=dmax {
            for d1 in 1..total {
                let d2 = total - d1;
                for m1 in 0..=3 * d1 {
                    let m2 = 3 * total - 3 - n - m1;
                    if (0..=3 * d2).contains(&m2) {
                        keys.push((d1, d2, m1, m2, n));
                    }
                }
            }
        }
    }
    let values = evaluate(&keys, parallel, |&(d1, d2, m1, m2, n)| engine.tangency_count(d1, d2, m1, m2, n))?;
    let mut t = Table::new(&["d1", "d2", "m1", "m2", "n", "value"]);
    for ((d1, d2, m1, m2, n), v) in keys.into_iter().zip(values) {
        if v != ExactInteger::from(0) {
            t.push(vec![
                Cell::Index(d1),
                Cell::Index(d2),
                Cell::Index(m1),
                Cell::Index(m2),
                Cell::Index(n),
                Cell::Big(v.to_string()),
            ]);
        }
    }
    Ok(t)
}

/// Cuspidal cubic plus tangent line counts, laid out like the reference table.
pub fn cusp_tangent_table(engine: &Engine, ns: &[i64]) -> Result<Table> {
    let mut t = Table::new(&["m1", "m2", "n", "value"]);
    for &n in ns {
        for m2 in (0..=2).rev() {
            let m1 = 7 - n - m2;
            if m1 < 0 {
                continue;
            }
            let v = engine.cusp_tangent_line_count(m1, m2, n)?;
            t.push(vec![Cell::Index(m1), Cell::Index(m2), Cell::Index(n), Cell::Big(v.to_string())]);
        }
    }
    Ok(t)
}
