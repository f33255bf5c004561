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

//! Shared fixtures for the criterion benchmarks.

use petersen_core::Params;

/// Representative instances: small, mid-sized, and a large coprime pair
/// where the wrap loop in the distance formula is longest.
pub fn instances() -> Vec<Params> {
    [(12, 5), (101, 13), (400, 37), (1_000, 499)]
        .into_iter()
        .map(|(n, s)| Params::new(n, s).expect("fixture parameters are valid"))
        .collect()
}
