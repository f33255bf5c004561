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

//! Exact distances and diameters of generalized Petersen graphs GPG(n, s) and
//! circulant graphs C_n(1, s).
//!
//! - [`graphs`] builds both families explicitly and converts between them by
//!   contracting or expanding spokes.
//! - [`oracle`] is a plain BFS used as ground truth.
//! - [`circulant`] computes circulant distances and diameters from integer
//!   division alone.
//! - [`epsilon`] decides whether D(GPG) is D(C) + 1 or D(C) + 2.
//! - [`closed_form`] holds the per-case diameter formulas, bounds and the
//!   top-level [`gpg_diameter`].

#![forbid(unsafe_code)]

pub mod circulant;
pub mod closed_form;
pub mod epsilon;
pub mod error;
pub mod graphs;
pub mod oracle;
pub mod params;

pub use circulant::{
    circulant_diameter, critical_vertices, d_c, d_c_pair, decompose, family_lengths, realize,
    CriticalSet, Direction, FamilyEntry, FamilyLengths, PathDescriptor,
};
pub use closed_form::{
    classify_case, gpg_diameter, upper_bound_gpg, CaseTag, Classification, DiameterResult,
    UpperBounds,
};
pub use epsilon::{Epsilon, EpsilonBasis, EpsilonVerdict};
pub use error::{Error, Result};
pub use graphs::{
    build_circulant, build_gpg, contract_spokes, expand_to_gpg, AdjacencyGraph, EdgeClass,
};
pub use oracle::{bfs_distances, graph_diameter, DiameterWitness, DistanceVector};
pub use params::{normalize_s, CirculantParams, DerivedCase, GpgParams, Params};
