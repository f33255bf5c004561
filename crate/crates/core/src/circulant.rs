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

//! Closed-form distances in C_n(1, s).
//!
//! A shortest path from `0` to `i` can always be taken as a block of `alpha`
//! ring steps in one direction followed by `beta` chord steps in one
//! direction. For a target `i` and a wrap count `t` (how many times the chord
//! walk passes vertex 0) the best block split is determined by integer
//! division, which yields six candidate families:
//!
//! | outer | inner | wraps `t`        | endpoint equation         |
//! |-------|-------|------------------|---------------------------|
//! | +     | +     | `0..=t_max`      | `alpha + beta*s = t*n + i` |
//! | -     | +     | `0..=t_max`      | `beta*s - alpha = t*n + i` |
//! | -     | -     | `1..=t_max`      | `alpha + beta*s = t*n - i` |
//! | +     | -     | `1..=t_max`      | `beta*s - alpha = t*n - i` |
//!
//! with `t_max = s / gcd(n, s)`. The distance is the minimum length over all
//! candidates.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::DiameterWitness;
use crate::params::CirculantParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    Clockwise,
    Counterclockwise,
}

impl Direction {
    fn sign(self) -> char {
        match self {
            Direction::Clockwise => '+',
            Direction::Counterclockwise => '-',
        }
    }
}

/// `alpha` ring steps in `outer_dir`, then `beta` chord steps in `inner_dir`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathDescriptor {
    pub outer_steps: u64,
    pub outer_dir: Direction,
    pub inner_steps: u64,
    pub inner_dir: Direction,
}

impl PathDescriptor {
    pub fn new(
        outer_steps: u64,
        outer_dir: Direction,
        inner_steps: u64,
        inner_dir: Direction,
    ) -> Self {
        PathDescriptor {
            outer_steps,
            outer_dir,
            inner_steps,
            inner_dir,
        }
    }

    pub fn len(&self) -> u64 {
        self.outer_steps + self.inner_steps
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Uses ring edges only (and at least one).
    pub fn is_pure_outer(&self) -> bool {
        self.inner_steps == 0 && self.outer_steps > 0
    }

    /// Uses chord edges only (and at least one).
    pub fn is_pure_inner(&self) -> bool {
        self.outer_steps == 0 && self.inner_steps > 0
    }

    pub fn is_mixed(&self) -> bool {
        self.outer_steps > 0 && self.inner_steps > 0
    }

    /// Vertex reached from 0.
    pub fn endpoint(&self, p: CirculantParams) -> u64 {
        let n = p.n();
        let step = |pos: u64, k: u64, dir: Direction| match dir {
            Direction::Clockwise => (pos + k % n) % n,
            Direction::Counterclockwise => (pos + n - k % n) % n,
        };
        let after_outer = step(0, self.outer_steps, self.outer_dir);
        let chord = (self.inner_steps % n) * p.s() % n;
        step(after_outer, chord, self.inner_dir)
    }
}

impl fmt::Display for PathDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}a{}, {}c{})",
            self.outer_steps,
            self.outer_dir.sign(),
            self.inner_steps,
            self.inner_dir.sign()
        )
    }
}

/// Quotients and remainders by `s` of `i`, `t*n + i` and `t*n - i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decomposition {
    pub quotient: u64,
    pub remainder: u64,
    pub forward_quotient: u64,
    pub forward_remainder: u64,
    pub backward_quotient: u64,
    pub backward_remainder: u64,
}

fn check_vertex(p: CirculantParams, i: u64) -> Result<()> {
    if i == 0 || i >= p.n() {
        return Err(Error::VertexOutOfRange {
            vertex: i,
            count: p.n(),
        });
    }
    Ok(())
}

pub fn decompose(p: CirculantParams, i: u64, t: u64) -> Result<Decomposition> {
    check_vertex(p, i)?;
    if t == 0 || t > p.max_wrap() {
        return Err(Error::WrapOutOfRange {
            t,
            max: p.max_wrap(),
        });
    }
    let (n, s) = (p.n(), p.s());
    let (fwd, bwd) = (t * n + i, t * n - i);
    Ok(Decomposition {
        quotient: i / s,
        remainder: i % s,
        forward_quotient: fwd / s,
        forward_remainder: fwd % s,
        backward_quotient: bwd / s,
        backward_remainder: bwd % s,
    })
}

/// One candidate path: its wrap count and descriptor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyEntry {
    pub wraps: u64,
    pub descriptor: PathDescriptor,
}

impl FamilyEntry {
    pub fn len(&self) -> u64 {
        self.descriptor.len()
    }

    pub fn is_empty(&self) -> bool {
        self.descriptor.is_empty()
    }
}

/// Every candidate path to one target vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyLengths {
    pub target: u64,
    pub entries: Vec<FamilyEntry>,
}

impl FamilyLengths {
    pub fn minimum(&self) -> u64 {
        self.entries.iter().map(FamilyEntry::len).min().unwrap_or(0)
    }

    /// Entries whose length equals the minimum.
    pub fn minimal(&self) -> impl Iterator<Item = &FamilyEntry> {
        let m = self.minimum();
        self.entries.iter().filter(move |e| e.len() == m)
    }
}

/// For `value = quotient*s + remainder`, the forward split and the
/// overshoot-and-back split.
#[inline]
fn splits(value: u64, s: u64) -> ((u64, u64), (u64, u64)) {
    let (q, r) = (value / s, value % s);
    ((r, q), (s - r, q + 1))
}

pub fn family_lengths(p: CirculantParams, i: u64) -> Result<FamilyLengths> {
    use Direction::{Clockwise as Cw, Counterclockwise as Ccw};
    check_vertex(p, i)?;
    let (n, s) = (p.n(), p.s());
    let mut entries = Vec::with_capacity(2 + 4 * p.max_wrap() as usize);
    let mut push = |wraps, (outer, inner), od, id| {
        entries.push(FamilyEntry {
            wraps,
            descriptor: PathDescriptor::new(outer, od, inner, id),
        });
    };
    let (direct, overshoot) = splits(i, s);
    push(0, direct, Cw, Cw);
    push(0, overshoot, Ccw, Cw);
    for t in 1..=p.max_wrap() {
        let (direct, overshoot) = splits(t * n + i, s);
        push(t, direct, Cw, Cw);
        push(t, overshoot, Ccw, Cw);
        let (direct, overshoot) = splits(t * n - i, s);
        push(t, direct, Ccw, Ccw);
        push(t, overshoot, Cw, Ccw);
    }
    Ok(FamilyLengths { target: i, entries })
}

/// Distance from 0 to `i` (taken mod n) in C_n(1, s).
pub fn d_c(p: CirculantParams, i: u64) -> u64 {
    let (n, s) = (p.n(), p.s());
    let i = i % n;
    if i == 0 {
        return 0;
    }
    let best_split = |value: u64| {
        let (q, r) = (value / s, value % s);
        (r + q).min(s - r + q + 1)
    };
    let mut best = best_split(i);
    for t in 1..=p.max_wrap() {
        best = best.min(best_split(t * n + i)).min(best_split(t * n - i));
    }
    best
}

/// Distance between two arbitrary vertices, by translating `i` to 0.
pub fn d_c_pair(p: CirculantParams, i: u64, j: u64) -> u64 {
    let n = p.n();
    d_c(p, (j % n + n - i % n) % n)
}

/// Circulant diameter as the largest `d_c(i)` over `2 <= i <= n / 2`; the
/// witness is the smallest maximizing `i`, reported as the pair `(0, i)`.
pub fn circulant_diameter(p: CirculantParams) -> DiameterWitness {
    let mut best = (0u64, 0u64);
    for i in 2..=p.n() / 2 {
        let d = d_c(p, i);
        if d > best.0 {
            best = (d, i);
        }
    }
    DiameterWitness {
        value: best.0 as u32,
        endpoints: (0, best.1 as usize),
    }
}

/// Vertices at maximum distance from 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalSet {
    pub diameter: u64,
    pub vertices: Vec<u64>,
}

pub fn critical_vertices(p: CirculantParams) -> CriticalSet {
    let diameter = circulant_diameter(p).value as u64;
    let vertices = (1..p.n()).filter(|&i| d_c(p, i) == diameter).collect();
    CriticalSet { diameter, vertices }
}

/// Explicit vertex sequence of a descriptor walked from 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub vertices: Vec<u64>,
    /// False when some vertex is visited twice, i.e. the descriptor is a walk.
    pub is_simple: bool,
}

pub fn realize(descriptor: &PathDescriptor, p: CirculantParams) -> Realization {
    let (n, s) = (p.n(), p.s());
    let mut vertices = Vec::with_capacity(descriptor.len() as usize + 1);
    let mut pos = 0u64;
    vertices.push(pos);
    let mut walk = |k: u64, len: u64, dir: Direction| {
        for _ in 0..len {
            pos = match dir {
                Direction::Clockwise => (pos + k) % n,
                Direction::Counterclockwise => (pos + n - k) % n,
            };
            vertices.push(pos);
        }
    };
    walk(1, descriptor.outer_steps, descriptor.outer_dir);
    walk(s, descriptor.inner_steps, descriptor.inner_dir);
    let mut seen = vec![false; n as usize];
    let is_simple = vertices
        .iter()
        .all(|&v| !std::mem::replace(&mut seen[v as usize], true));
    Realization {
        vertices,
        is_simple,
    }
}
