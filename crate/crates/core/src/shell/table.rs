//! Reproduction of the list of non-nilpotent B_ψ-groups up to order 2000,
//! restricted to rows buildable from recipes.

use std::path::PathBuf;
use std::time::Instant;

use super::record::VerdictRecord;
use super::spec::parse_spec;
use crate::classify::bpsi_bruteforce_with;
use crate::families::Recipe;
use crate::lattice::LatticeOptions;
use crate::psi::psi_of_mask;
use crate::{Result, SubgroupMask};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tier {
    Core,
    Extended,
}

impl std::str::FromStr for Tier {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "core" => Ok(Tier::Core),
            "extended" => Ok(Tier::Extended),
            _ => Err(format!("unknown tier `{s}` (core | extended)")),
        }
    }
}

/// Rows of order ≤ 504. `FrobSum(2,7,2)` and `FrobSum(2,7,2,3)` are the two
/// inequivalent actions of `C_7` on `C_2^6`.
pub const CORE_ROWS: [&str; 15] = [
    "A4",
    "FrobSum(2,3,2)",
    "Schmidt(2,7)",
    "A5",
    "Schmidt(2,5)",
    "SL(2,5)",
    "PSL(2,7)",
    "FrobSum(2,3,3)",
    "SL(2,7)",
    "Schmidt(3,13)",
    "A6",
    "Schmidt(3,5)",
    "FrobSum(2,7,2)",
    "FrobSum(2,7,2,3)",
    "PSL(2,8)",
];

pub const EXTENDED_ROWS: [&str; 6] = [
    "PSL(2,11)",
    "SL(2,9)",
    "FrobSum(2,3,4)",
    "Schmidt(2,31)",
    "PSL(2,13)",
    "SL(2,11)",
];

/// Rows for a tier, plus any generator files given by the user.
pub fn rows(tier: Tier, files: &[PathBuf]) -> Vec<Recipe> {
    let mut out: Vec<Recipe> = CORE_ROWS
        .iter()
        .map(|s| parse_spec(s).expect("table rows parse"))
        .collect();
    if tier == Tier::Extended {
        out.extend(EXTENDED_ROWS.iter().map(|s| parse_spec(s).expect("table rows parse")));
        out.extend(files.iter().cloned().map(Recipe::File));
    }
    out
}

/// Brute-force verdict for one row. Extended rows use the conjugacy-class
/// enumeration, which yields the same lattice faster.
pub fn run_row(recipe: &Recipe, tier: Tier, budget: usize) -> Result<VerdictRecord> {
    let start = Instant::now();
    let g = recipe.build()?;
    let opts = LatticeOptions {
        budget,
        conjugacy_classes: tier == Tier::Extended,
    };
    let v = bpsi_bruteforce_with(&g, opts)?;
    let psi = psi_of_mask(&g, &SubgroupMask::full(g.order()));
    Ok(VerdictRecord::from_verdict(
        &recipe.to_string(),
        Some(psi),
        &v,
        start.elapsed().as_millis() as u64,
    ))
}

pub const CSV_HEADER: &str = "spec,order,expected,verdict,method,elapsed_ms";

/// Every table row is expected to be a B_ψ-group.
pub fn csv_line(r: &VerdictRecord) -> String {
    let spec = if r.spec.contains([',', '"']) {
        format!("\"{}\"", r.spec.replace('"', "\"\""))
    } else {
        r.spec.clone()
    };
    format!("{spec},{},true,{},{},{}", r.order, r.verdict, r.method, r.elapsed_ms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_have_expected_orders() {
        let orders: Vec<u64> = rows(Tier::Core, &[]).iter().map(|r| r.expected_order().unwrap()).collect();
        assert_eq!(orders, [12, 48, 56, 60, 80, 120, 168, 192, 336, 351, 360, 405, 448, 448, 504]);
        let ext: Vec<u64> = rows(Tier::Extended, &[]).iter().skip(15).map(|r| r.expected_order().unwrap()).collect();
        assert_eq!(ext, [660, 720, 768, 992, 1092, 1320]);
    }

    #[test]
    fn small_rows_are_bpsi() {
        for r in rows(Tier::Core, &[]).iter().take(5) {
            let rec = run_row(r, Tier::Core, 1_000_000).unwrap();
            assert_eq!(rec.verdict, "true", "{r}");
        }
    }

    #[test]
    fn csv_quotes_commas() {
        let rec = VerdictRecord::unknown("SL(2,5)", 120, None, 7);
        assert_eq!(csv_line(&rec), "\"SL(2,5)\",120,true,unknown,none,7");
    }
}
