//! Embedded reference values.

use std::fmt;
use std::str::FromStr;

use crate::arith::ExactInteger;
use crate::engine::Engine;
use crate::error::Result;
use crate::memo::CuspVariant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    N,
    C,
    T,
    E6,
    CT,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::N, Family::C, Family::T, Family::E6, Family::CT];

    pub fn arity(self) -> usize {
        match self {
            Family::N => 2,
            Family::C => 3,
            Family::T => 5,
            Family::E6 => 1,
            Family::CT => 3,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Family::N => "N",
            Family::C => "C",
            Family::T => "T",
            Family::E6 => "E6",
            Family::CT => "CT",
        }
    }

    pub fn evaluate(self, engine: &Engine, variant: CuspVariant, p: &[i64]) -> Result<ExactInteger> {
        assert_eq!(p.len(), self.arity(), "{self} takes {} parameters", self.arity());
        match self {
            Family::N => engine.kontsevich_n(p[0], p[1]),
            Family::C => engine.cusp_count_with(variant, p[0], p[1], p[2]),
            Family::T => engine.tangency_count(p[0], p[1], p[2], p[3], p[4]),
            Family::E6 => engine.e6_quartic_count(p[0]),
            Family::CT => engine.cusp_tangent_line_count(p[0], p[1], p[2]),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = String;

    /// Accepts both the short tags and the CLI family names.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "n" => Ok(Family::N),
            "c" | "cusp" => Ok(Family::C),
            "t" | "tangency" => Ok(Family::T),
            "e6" => Ok(Family::E6),
            "ct" | "cusp-tangent" => Ok(Family::CT),
            other => Err(format!("unknown family `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenRecord {
    pub family: Family,
    pub params: &'static [i64],
    pub expected: &'static str,
    pub source: &'static str,
}

impl GoldenRecord {
    pub fn expected_value(&self) -> ExactInteger {
        self.expected.parse().expect("golden values are decimal integers")
    }
}

const SRC_N: &str = "rational plane curves through 3d-1 points";
const SRC_C0: &str = "free cusp, C^d_{3d-2}(0)";
const SRC_C1: &str = "cusp on a line, C^d_{3d-3}(1)";
const SRC_C2: &str = "cusp at a point, C^d_{3d-4}(2)";
const SRC_T0: &str = "tangent two-component curves, free node";
const SRC_T1: &str = "tangent two-component curves, node on a line";
const SRC_CT: &str = "cuspidal cubic with a line tangent to the cusp branch";
const SRC_E6: &str = "rational quartics with an E6 point";

macro_rules! golden {
    ($family:ident, $src:expr, [$([$($p:expr),*] => $v:expr),* $(,)?]) => {
        &[$(GoldenRecord { family: Family::$family, params: &[$($p),*], expected: $v, source: $src }),*]
    };
}

const N_RECORDS: &[GoldenRecord] = golden!(N, SRC_N, [
    [1, 2] => "1",
    [2, 5] => "1",
    [3, 8] => "12",
    [4, 11] => "620",
    [5, 14] => "87304",
]);

const C0_RECORDS: &[GoldenRecord] = golden!(C, SRC_C0, [
    [3, 7, 0] => "24",
    [4, 10, 0] => "2304",
    [5, 13, 0] => "435168",
    [6, 16, 0] => "156153600",
    [7, 19, 0] => "97424784000",
    [8, 22, 0] => "97958336523264",
    [9, 25, 0] => "149437059373232640",
]);

const C1_RECORDS: &[GoldenRecord] = golden!(C, SRC_C1, [
    [3, 6, 1] => "12",
    [4, 9, 1] => "864",
    [5, 12, 1] => "130896",
    [6, 15, 1] => "39223584",
    [7, 18, 1] => "21009319488",
    [8, 21, 1] => "18506708865792",
    [9, 24, 1] => "25119941440608000",
]);

const C2_RECORDS: &[GoldenRecord] = golden!(C, SRC_C2, [
    [3, 5, 2] => "2",
    [4, 8, 2] => "102",
    [5, 11, 2] => "12024",
    [6, 14, 2] => "2953656",
    [7, 17, 2] => "1341437280",
    [8, 20, 2] => "1026019929312",
    [9, 23, 2] => "1230836838698880",
]);

const T0_RECORDS: &[GoldenRecord] = golden!(T, SRC_T0, [
    [1, 2, 2, 4, 0] => "2",
    [1, 3, 2, 7, 0] => "36",
    [1, 4, 2, 10, 0] => "2184",
    [1, 5, 2, 13, 0] => "335792",
    [2, 2, 5, 4, 0] => "6",
    [2, 3, 5, 7, 0] => "96",
    [2, 4, 5, 10, 0] => "5608",
    [2, 5, 5, 13, 0] => "846192",
]);

const T1_RECORDS: &[GoldenRecord] = golden!(T, SRC_T1, [
    [1, 2, 2, 3, 1] => "1",
    [1, 3, 2, 6, 1] => "10",
    [1, 4, 2, 9, 1] => "428",
    [1, 5, 2, 12, 1] => "51040",
    [2, 2, 5, 3, 1] => "2",
    [2, 3, 5, 6, 1] => "20",
    [2, 4, 5, 9, 1] => "856",
    [2, 5, 5, 12, 1] => "102080",
]);

const CT_RECORDS: &[GoldenRecord] = golden!(CT, SRC_CT, [
    [5, 2, 0] => "5",
    [6, 1, 0] => "18",
    [7, 0, 0] => "24",
    [4, 2, 1] => "1",
    [5, 1, 1] => "7",
    [6, 0, 1] => "12",
    [3, 2, 2] => "0",
    [4, 1, 2] => "1",
    [5, 0, 2] => "2",
]);

const E6_RECORDS: &[GoldenRecord] = golden!(E6, SRC_E6, [
    [0] => "147",
    [1] => "33",
    [2] => "3",
]);

/// Every embedded record, in a fixed order.
pub fn golden_records() -> Vec<GoldenRecord> {
    [N_RECORDS, C0_RECORDS, C1_RECORDS, C2_RECORDS, T0_RECORDS, T1_RECORDS, CT_RECORDS, E6_RECORDS]
        .concat()
}

pub fn golden_records_for(family: Family) -> Vec<GoldenRecord> {
    golden_records().into_iter().filter(|r| r.family == family).collect()
}
