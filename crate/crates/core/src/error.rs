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

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n = {n} is too small, need n >= 5")]
    RingTooSmall { n: u64 },
    #[error("s = {s} is out of range for n = {n}, need 2 <= s <= n - 2")]
    SkipOutOfRange { n: u64, s: u64 },
    #[error("s = {s} is n/2 for n = {n}; the resulting graph is not cubic")]
    HalfSkip { n: u64, s: u64 },
    #[error("vertex {vertex} is out of range for a graph on {count} vertices")]
    VertexOutOfRange { vertex: u64, count: u64 },
    #[error("t = {t} is out of range 1..={max}")]
    WrapOutOfRange { t: u64, max: u64 },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph has edges without a known class")]
    UnlabeledEdges,
    #[error("edge filter selects no edge class")]
    EmptyEdgeFilter,
    #[error("precondition violated: {0}")]
    Precondition(String),
}
