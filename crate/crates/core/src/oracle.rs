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

//! Brute-force breadth-first ground truth.
//!
//! Nothing here knows about the distance formulas; it only walks edges. Every
//! closed form in the crate is checked against these functions.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{AdjacencyGraph, EdgeClass};

/// Hop counts from one source. `None` marks an unreachable vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceVector {
    pub source: usize,
    dist: Vec<Option<u32>>,
}

impl DistanceVector {
    pub fn get(&self, v: usize) -> Option<u32> {
        self.dist[v]
    }

    pub fn as_slice(&self) -> &[Option<u32>] {
        &self.dist
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    /// Largest distance, or `None` if some vertex is unreachable.
    pub fn eccentricity(&self) -> Option<u32> {
        self.dist.iter().try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }

    /// Smallest vertex attaining the eccentricity.
    fn farthest(&self) -> Option<(usize, u32)> {
        let ecc = self.eccentricity()?;
        let v = self.dist.iter().position(|&d| d == Some(ecc))?;
        Some((v, ecc))
    }
}

/// A diameter value with the lexicographically smallest pair attaining it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiameterWitness {
    pub value: u32,
    pub endpoints: (usize, usize),
}

/// Subset of edge classes a restricted search may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EdgeFilter {
    pub outer: bool,
    pub inner: bool,
    pub spoke: bool,
}

impl EdgeFilter {
    pub const OUTER: EdgeFilter = EdgeFilter {
        outer: true,
        inner: false,
        spoke: false,
    };
    pub const INNER: EdgeFilter = EdgeFilter {
        outer: false,
        inner: true,
        spoke: false,
    };
    pub const SPOKE: EdgeFilter = EdgeFilter {
        outer: false,
        inner: false,
        spoke: true,
    };
    pub const ALL: EdgeFilter = EdgeFilter {
        outer: true,
        inner: true,
        spoke: true,
    };

    pub fn union(self, other: EdgeFilter) -> EdgeFilter {
        EdgeFilter {
            outer: self.outer || other.outer,
            inner: self.inner || other.inner,
            spoke: self.spoke || other.spoke,
        }
    }

    fn allows(&self, class: EdgeClass) -> bool {
        match class {
            EdgeClass::Outer => self.outer,
            EdgeClass::Inner => self.inner,
            EdgeClass::Spoke => self.spoke,
            EdgeClass::Unlabeled => false,
        }
    }

    fn is_empty(&self) -> bool {
        !(self.outer || self.inner || self.spoke)
    }
}

fn check_source(g: &AdjacencyGraph, source: usize) -> Result<()> {
    if source >= g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: source as u64,
            count: g.vertex_count() as u64,
        });
    }
    Ok(())
}

fn bfs_with<F>(g: &AdjacencyGraph, source: usize, mut allowed: F) -> DistanceVector
where
    F: FnMut(EdgeClass) -> bool,
{
    let mut dist = vec![None; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[source] = Some(0);
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for nb in g.neighbors(u) {
            if dist[nb.vertex].is_none() && allowed(nb.class) {
                dist[nb.vertex] = Some(du + 1);
                queue.push_back(nb.vertex);
            }
        }
    }
    DistanceVector { source, dist }
}

pub fn bfs_distances(g: &AdjacencyGraph, source: usize) -> Result<DistanceVector> {
    check_source(g, source)?;
    Ok(bfs_with(g, source, |_| true))
}

/// BFS over the subgraph formed by the edge classes in `filter`.
pub fn restricted_bfs(
    g: &AdjacencyGraph,
    source: usize,
    filter: EdgeFilter,
) -> Result<DistanceVector> {
    check_source(g, source)?;
    if filter.is_empty() {
        return Err(Error::EmptyEdgeFilter);
    }
    if g.has_unlabeled_edges() {
        return Err(Error::UnlabeledEdges);
    }
    Ok(bfs_with(g, source, |c| filter.allows(c)))
}

pub fn eccentricity(g: &AdjacencyGraph, v: usize) -> Result<u32> {
    bfs_distances(g, v)?
        .eccentricity()
        .ok_or(Error::Disconnected)
}

/// Exact diameter by a BFS from every vertex.
pub fn graph_diameter(g: &AdjacencyGraph) -> Result<DiameterWitness> {
    diameter_over_sources(g, 0..g.vertex_count())
}

/// Largest eccentricity among `sources`.
///
/// Equals [`graph_diameter`] whenever `sources` meets every orbit of the
/// automorphism group: `{0}` for C_n(1, s) and `{0, n}` for GPG(n, s), since
/// rotation `i -> i + 1` is an automorphism of both.
pub fn diameter_over_sources<I>(g: &AdjacencyGraph, sources: I) -> Result<DiameterWitness>
where
    I: IntoIterator<Item = usize>,
{
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut best: Option<DiameterWitness> = None;
    for source in sources {
        let (target, value) = bfs_distances(g, source)?
            .farthest()
            .ok_or(Error::Disconnected)?;
        let candidate = DiameterWitness {
            value,
            endpoints: (source, target),
        };
        best = match best {
            Some(b)
                if b.value > value || (b.value == value && b.endpoints <= candidate.endpoints) =>
            {
                Some(b)
            }
            _ => Some(candidate),
        };
    }
    best.ok_or(Error::EmptyGraph)
}
