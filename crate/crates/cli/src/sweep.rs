// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use serde::{Deserialize, Serialize};

use petersen_core::epsilon::bfs_diameters;
use petersen_core::{gpg_diameter, DiameterResult, Params};
use rayon::prelude::*;

/// One output row. Field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: u64,
    pub s: u64,
    pub lambda: u64,
    pub gamma: u64,
    pub d_circulant: u64,
    pub d_gpg: u64,
    pub epsilon: u8,
    pub method: String,
    pub upper_bound: u64,
    /// Checked against BFS in this run, and every check agreed.
    pub verified: bool,
}

pub const CSV_HEADER: &str =
    "n,s,lambda,gamma,d_circulant,d_gpg,epsilon,method,upper_bound,verified";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub n: u64,
    pub s: u64,
    pub check: &'static str,
    pub expected: u64,
    pub found: u64,
}

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "MISMATCH n={} s={} check={} bfs={} computed={}",
            self.n, self.s, self.check, self.expected, self.found
        )
    }
}

#[derive(Debug, Clone)]
pub struct RowOutcome {
    pub row: SweepRow,
    pub result: DiameterResult,
    pub mismatches: Vec<Mismatch>,
}

/// Compare a dispatcher result against BFS diameters.
pub fn check_against_bfs(r: &DiameterResult, bfs_circ: u64, bfs_gpg: u64) -> Vec<Mismatch> {
    let mut out = Vec::new();
    let mut check = |check, expected, found| {
        if expected != found {
            out.push(Mismatch {
                n: r.n,
                s: r.s,
                check,
                expected,
                found,
            });
        }
    };
    check("d_circulant", bfs_circ, r.d_circulant);
    check("d_gpg", bfs_gpg, r.d_gpg);
    if let Some(v) = r.closed_form {
        check("closed_form", bfs_gpg, v);
    }
    out
}

pub fn sweep_row(p: Params, verify: bool) -> RowOutcome {
    let result = gpg_diameter(p);
    let mismatches = if verify {
        let (c, g) = bfs_diameters(p);
        check_against_bfs(&result, c, g)
    } else {
        Vec::new()
    };
    let row = SweepRow {
        n: result.n,
        s: result.s,
        lambda: result.case.derived.lambda,
        gamma: result.case.derived.gamma,
        d_circulant: result.d_circulant,
        d_gpg: result.d_gpg,
        epsilon: result.epsilon.into(),
        method: result.method().to_string(),
        upper_bound: result.upper_bound,
        verified: verify && mismatches.is_empty(),
    };
    RowOutcome {
        row,
        result,
        mismatches,
    }
}

/// Rows for every normalized pair with `n_min <= n <= n_max`, ordered by
/// `n` then `s` regardless of how the work was scheduled.
pub fn run_sweep(n_min: u64, n_max: u64, verify: bool) -> Vec<RowOutcome> {
    let params: Vec<Params> = Params::sweep(n_min, n_max).collect();
    params.par_iter().map(|&p| sweep_row(p, verify)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: u64, s: u64) -> Params {
        Params::new(n, s).unwrap()
    }

    #[test]
    fn row_for_12_5() {
        let o = sweep_row(params(12, 5), true);
        assert_eq!(o.row.method, "Special4p");
        assert_eq!((o.row.d_circulant, o.row.d_gpg, o.row.epsilon), (3, 4, 1));
        assert!(o.row.verified);
        assert!(o.mismatches.is_empty());
    }

    #[test]
    fn unverified_rows_say_so() {
        assert!(!sweep_row(params(12, 5), false).row.verified);
    }

    #[test]
    fn closed_form_disagreement_is_reported() {
        let o = sweep_row(params(14, 4), true);
        assert!(!o.row.verified);
        assert_eq!(o.mismatches.len(), 1);
        assert_eq!(o.mismatches[0].check, "closed_form");
        assert_eq!((o.mismatches[0].expected, o.mismatches[0].found), (5, 4));
    }

    #[test]
    fn sweep_order_is_n_then_s() {
        let rows = run_sweep(5, 20, false);
        let keys: Vec<_> = rows.iter().map(|o| (o.row.n, o.row.s)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(keys.len(), Params::sweep(5, 20).count());
    }

    #[test]
    fn rows_respect_invariants() {
        for o in run_sweep(5, 60, false) {
            let r = &o.row;
            assert_eq!(r.d_gpg, r.d_circulant + r.epsilon as u64);
            assert!(r.d_gpg <= r.upper_bound);
        }
    }
}
