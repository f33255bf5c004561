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

//! Explicit GPG(n, s) and C_n(1, s) graphs and the spoke contraction /
//! expansion between them.
//!
//! Vertex indexing is fixed: in GPG(n, s) outer vertex `u_i` is `i` and inner
//! vertex `v_i` is `n + i`; in C_n(1, s) vertex `i` is `i`. Contracting the
//! spoke `u_i v_i` yields circulant vertex `i`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::{CirculantParams, GpgParams};

/// Which part of the graph an edge belongs to.
///
/// Outer edges join ring neighbours (`±1`), inner edges join vertices `s`
/// apart, spokes join `u_i` to `v_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeClass {
    Outer,
    Inner,
    Spoke,
    Unlabeled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Neighbor {
    pub vertex: usize,
    pub class: EdgeClass,
}

/// Simple undirected graph stored as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyGraph {
    adjacency: Vec<Vec<Neighbor>>,
}

impl AdjacencyGraph {
    /// Build from an unlabeled edge list. Duplicate edges are collapsed.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_labeled_edges(
            vertex_count,
            edges.iter().map(|&(u, v)| (u, v, EdgeClass::Unlabeled)),
        )
    }

    /// Build from labeled edges. A repeated edge keeps its first label.
    pub fn from_labeled_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, EdgeClass)>,
    {
        let mut seen = BTreeSet::new();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (u, v, class) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w as u64,
                        count: vertex_count as u64,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if seen.insert((u.min(v), u.max(v))) {
                adjacency[u].push(Neighbor { vertex: v, class });
                adjacency[v].push(Neighbor { vertex: u, class });
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(AdjacencyGraph { adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[Neighbor] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Each edge once as `(min, max, class)`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize, EdgeClass)> {
        let mut out: Vec<_> = self
            .adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| {
                list.iter()
                    .filter(move |nb| nb.vertex > u)
                    .map(move |nb| (u, nb.vertex, nb.class))
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Edge set ignoring classes.
    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.edges().into_iter().map(|(u, v, _)| (u, v)).collect()
    }

    pub fn is_regular(&self, degree: usize) -> bool {
        self.adjacency.iter().all(|l| l.len() == degree)
    }

    pub fn has_unlabeled_edges(&self) -> bool {
        self.adjacency
            .iter()
            .flatten()
            .any(|nb| nb.class == EdgeClass::Unlabeled)
    }
}

#[inline]
fn add_mod(i: u64, k: u64, n: u64) -> usize {
    ((i + k) % n) as usize
}

/// GPG(n, s): outer cycle `u_i u_{i+1}`, inner edges `v_i v_{i+s}`, spokes
/// `u_i v_i`.
pub fn build_gpg(p: GpgParams) -> AdjacencyGraph {
    let (n, s) = (p.n(), p.s());
    let nu = n as usize;
    let edges = (0..n).flat_map(|i| {
        let iu = i as usize;
        [
            (iu, add_mod(i, 1, n), EdgeClass::Outer),
            (nu + iu, nu + add_mod(i, s, n), EdgeClass::Inner),
            (iu, nu + iu, EdgeClass::Spoke),
        ]
    });
    AdjacencyGraph::from_labeled_edges(2 * nu, edges).expect("valid params give a simple graph")
}

/// C_n(1, s): vertex `i` adjacent to `i ± 1` (outer) and `i ± s` (inner).
pub fn build_circulant(p: CirculantParams) -> AdjacencyGraph {
    let (n, s) = (p.n(), p.s());
    let edges = (0..n).flat_map(|i| {
        [
            (i as usize, add_mod(i, 1, n), EdgeClass::Outer),
            (i as usize, add_mod(i, s, n), EdgeClass::Inner),
        ]
    });
    AdjacencyGraph::from_labeled_edges(n as usize, edges).expect("valid params give a simple graph")
}

/// Merge `u_i` and `v_i` into circulant vertex `i`, dropping the spokes.
pub fn contract_spokes(g: &AdjacencyGraph, p: GpgParams) -> Result<AdjacencyGraph> {
    let n = p.n() as usize;
    if g.vertex_count() != 2 * n {
        return Err(Error::Precondition(format!(
            "expected a GPG graph on {} vertices, got {}",
            2 * n,
            g.vertex_count()
        )));
    }
    let merged = g
        .edges()
        .into_iter()
        .filter(|&(_, _, class)| class != EdgeClass::Spoke)
        .map(|(u, v, class)| (u % n, v % n, class));
    AdjacencyGraph::from_labeled_edges(n, merged)
}

/// Expand a circulant graph back into GPG(n, s).
///
/// Each outer edge `(i, i+1)` becomes `u_i u_{i+1}` plus the spokes at both
/// ends; each inner edge `(i, i+s)` becomes `v_i v_{i+s}` plus both spokes.
pub fn expand_circulant(c: &AdjacencyGraph, p: CirculantParams) -> Result<AdjacencyGraph> {
    let n = p.n() as usize;
    if c.vertex_count() != n {
        return Err(Error::Precondition(format!(
            "expected a circulant graph on {n} vertices, got {}",
            c.vertex_count()
        )));
    }
    if c.has_unlabeled_edges() {
        return Err(Error::UnlabeledEdges);
    }
    let mut edges = Vec::with_capacity(3 * n);
    for (i, j, class) in c.edges() {
        match class {
            EdgeClass::Outer => edges.push((i, j, EdgeClass::Outer)),
            EdgeClass::Inner => edges.push((n + i, n + j, EdgeClass::Inner)),
            EdgeClass::Spoke | EdgeClass::Unlabeled => {
                return Err(Error::Precondition(format!(
                    "circulant edge ({i}, {j}) has class {class:?}"
                )))
            }
        }
        edges.push((i, n + i, EdgeClass::Spoke));
        edges.push((j, n + j, EdgeClass::Spoke));
    }
    AdjacencyGraph::from_labeled_edges(2 * n, edges)
}

pub fn expand_to_gpg(p: CirculantParams) -> AdjacencyGraph {
    expand_circulant(&build_circulant(p), p).expect("built circulant is labeled")
}
