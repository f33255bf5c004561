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

//! Exhaustive verification of the formula engine against BFS.

use std::collections::BTreeMap;

use petersen_core::circulant::{circulant_diameter, d_c};
use petersen_core::epsilon::{epsilon_by_key2, key3_sufficient};
use petersen_core::oracle::{bfs_distances, diameter_over_sources, restricted_bfs, EdgeFilter};
use petersen_core::{build_circulant, build_gpg, gpg_diameter, upper_bound_gpg, CaseTag, Params};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub passed: u64,
    /// One line per failing instance.
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn checked(&self) -> u64 {
        self.passed + self.failures.len() as u64
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub n_max: u64,
    pub instances: usize,
    pub suites: Vec<SuiteResult>,
}

impl VerifySummary {
    pub fn ok(&self) -> bool {
        self.suites.iter().all(SuiteResult::ok)
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteResult> {
        self.suites.iter().find(|s| s.name == name)
    }
}

type Outcome = (String, Result<(), String>);

fn check(name: &str, ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    (name.to_string(), if ok { Ok(()) } else { Err(detail()) })
}

/// Every check for one instance, in a fixed order.
pub fn verify_instance(p: Params) -> Vec<Outcome> {
    let n = p.n() as usize;
    let circ = build_circulant(p);
    let gpg = build_gpg(p);
    let dist = bfs_distances(&circ, 0).expect("source 0 exists");
    let bfs_circ = dist.eccentricity().expect("circulants are connected") as u64;
    let bfs_gpg = diameter_over_sources(&gpg, [0, n])
        .expect("GPG graphs are connected")
        .value as u64;
    let mut out = Vec::new();

    let bad = (0..p.n()).find(|&i| Some(d_c(p, i)) != dist.get(i as usize).map(u64::from));
    out.push(check("distance-formula", bad.is_none(), || {
        let i = bad.unwrap();
        format!(
            "{p}: vertex {i} formula {} bfs {:?}",
            d_c(p, i),
            dist.get(i as usize)
        )
    }));

    let alg = circulant_diameter(p).value as u64;
    out.push(check("circulant-diameter", alg == bfs_circ, || {
        format!("{p}: formula {alg} bfs {bfs_circ}")
    }));

    let r = gpg_diameter(p);
    out.push(check("gpg-diameter", r.d_gpg == bfs_gpg, || {
        format!("{p}: dispatcher {} bfs {bfs_gpg}", r.d_gpg)
    }));

    if let Some(v) = r.closed_form {
        out.push(check(
            &format!("closed-form/{}", r.method()),
            v == bfs_gpg,
            || {
                format!(
                    "{p}: closed form {v} bfs {bfs_gpg} (lambda {}, gamma {})",
                    r.case.derived.lambda, r.case.derived.gamma
                )
            },
        ));
    }

    out.push(check(
        "sandwich",
        bfs_circ < bfs_gpg && bfs_gpg <= bfs_circ + 2,
        || format!("{p}: circulant {bfs_circ} gpg {bfs_gpg}"),
    ));

    let ub = upper_bound_gpg(p);
    out.push(check(
        "upper-bound",
        bfs_circ <= ub.circulant && bfs_gpg <= ub.gpg,
        || {
            format!(
                "{p}: circulant {bfs_circ} <= {} and gpg {bfs_gpg} <= {}",
                ub.circulant, ub.gpg
            )
        },
    ));

    if p.n() >= 8 {
        let gap = bfs_gpg - bfs_circ;
        let verdict = epsilon_by_key2(p).expect("n >= 8");
        out.push(check("key2-iff", verdict.epsilon.value() == gap, || {
            format!("{p}: criterion {} bfs gap {gap}", verdict.epsilon)
        }));

        let outer = restricted_bfs(&circ, 0, EdgeFilter::OUTER).expect("labeled");
        let inner = restricted_bfs(&circ, 0, EdgeFilter::INNER).expect("labeled");
        let d = Some(bfs_circ as u32);
        let bad = verdict.evidence.iter().find(|e| {
            !e.is_consistent()
                || e.outer_only != (outer.get(e.vertex as usize) == d)
                || e.inner_only != (inner.get(e.vertex as usize) == d)
        });
        out.push(check("key2-evidence", bad.is_none(), || {
            format!("{p}: {:?}", bad.unwrap())
        }));

        let sufficient = key3_sufficient(p).expect("n >= 8");
        out.push(check("key3-soundness", !sufficient || gap == 2, || {
            format!("{p}: sufficient condition holds but gap is {gap}")
        }));
    }
    out
}

/// Fixed suite order for reports. Case-formula suites follow the case order.
pub fn suite_names() -> Vec<String> {
    let mut names: Vec<String> = ["distance-formula", "circulant-diameter", "gpg-diameter"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    names.extend(
        CaseTag::ALL
            .iter()
            .filter(|t| **t != CaseTag::Fallback)
            .map(|t| format!("closed-form/{t}")),
    );
    names.extend(
        [
            "sandwich",
            "upper-bound",
            "key2-iff",
            "key2-evidence",
            "key3-soundness",
        ]
        .iter()
        .map(|s| s.to_string()),
    );
    names
}

/// Run every suite over `5 <= n <= n_max`.
pub fn run_verify(n_max: u64) -> VerifySummary {
    let params: Vec<Params> = Params::sweep(5, n_max).collect();
    let per_instance: Vec<Vec<Outcome>> = params.par_iter().map(|&p| verify_instance(p)).collect();
    let mut suites: BTreeMap<String, SuiteResult> = suite_names()
        .into_iter()
        .map(|name| {
            (
                name.clone(),
                SuiteResult {
                    name,
                    passed: 0,
                    failures: Vec::new(),
                },
            )
        })
        .collect();
    for (name, res) in per_instance.into_iter().flatten() {
        let suite = suites
            .get_mut(&name)
            .expect("every check belongs to a listed suite");
        match res {
            Ok(()) => suite.passed += 1,
            Err(msg) => suite.failures.push(msg),
        }
    }
    let suites = suite_names()
        .into_iter()
        .map(|n| suites.remove(&n).unwrap())
        .collect();
    VerifySummary {
        n_max,
        instances: params.len(),
        suites,
    }
}
