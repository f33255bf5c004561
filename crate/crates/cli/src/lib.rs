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

//! Sweeps, verification suites and report rendering behind the `petersen`
//! binary.

#![forbid(unsafe_code)]

pub mod config;
pub mod render;
pub mod sweep;
pub mod verify;

pub use config::Config;
pub use sweep::{run_sweep, sweep_row, Mismatch, RowOutcome, SweepRow};
pub use verify::{run_verify, SuiteResult, VerifySummary};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const MISMATCH: i32 = 2;
}
