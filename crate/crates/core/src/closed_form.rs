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

//! Closed-form diameters of GPG(n, s), case by case, plus general upper
//! bounds.
//!
//! Cases are keyed on `n = lambda*s + gamma` and, when `gamma > 0`,
//! `s = a*gamma + b`. Each formula checks the exact range it was stated for
//! and returns [`Error::Precondition`] outside it. All arithmetic is integer.

use serde::{Deserialize, Serialize};

use crate::circulant::circulant_diameter;
use crate::epsilon::{classify_epsilon, Epsilon, EpsilonBasis};
use crate::error::{Error, Result};
use crate::oracle::DiameterWitness;
use crate::params::{DerivedCase, GpgParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseTag {
    /// `gamma = 0`.
    GammaZero,
    /// `lambda > gamma > 0`, n even, s odd.
    EvenOdd,
    /// `lambda > gamma > 0`, n even, s even.
    EvenEven,
    /// `lambda > gamma > 0`, n odd, s odd.
    OddOdd,
    /// `lambda > gamma > 0`, n odd, s even.
    OddEven,
    /// `lambda <= gamma`, `0 < b <= a*lambda + 1`.
    LambdaLeGamma,
    /// `n = 4k`, `s = 2k - 1`, `k > 2`.
    Special4p,
    Fallback,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::GammaZero => "GammaZero",
            CaseTag::EvenOdd => "EvenOdd",
            CaseTag::EvenEven => "EvenEven",
            CaseTag::OddOdd => "OddOdd",
            CaseTag::OddEven => "OddEven",
            CaseTag::LambdaLeGamma => "LambdaLeGamma",
            CaseTag::Special4p => "Special4p",
            CaseTag::Fallback => "Fallback",
        }
    }

    pub const ALL: [CaseTag; 8] = [
        CaseTag::GammaZero,
        CaseTag::EvenOdd,
        CaseTag::EvenEven,
        CaseTag::OddOdd,
        CaseTag::OddEven,
        CaseTag::LambdaLeGamma,
        CaseTag::Special4p,
        CaseTag::Fallback,
    ];
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub tag: CaseTag,
    pub derived: DerivedCase,
}

#[inline]
fn ceil_half(x: u64) -> u64 {
    x.div_ceil(2)
}

fn special_4p_index(p: GpgParams) -> Option<u64> {
    let n = p.n();
    (n.is_multiple_of(4) && n / 4 > 2 && p.s() == n / 2 - 1).then_some(n / 4)
}

fn even_odd_applies(p: GpgParams, d: &DerivedCase) -> bool {
    p.n().is_multiple_of(2)
        && p.s() % 2 == 1
        && p.n() >= 10
        && p.s() >= 3
        && d.lambda > d.gamma
        && d.gamma > 0
}

fn even_even_applies(p: GpgParams, d: &DerivedCase) -> bool {
    // gamma > 0 with n, s even already forces s >= 4
    p.n().is_multiple_of(2)
        && p.s().is_multiple_of(2)
        && p.n() >= 8
        && p.s() >= 4
        && d.lambda > d.gamma
        && d.gamma > 0
}

fn odd_odd_applies(p: GpgParams, d: &DerivedCase) -> bool {
    p.n() % 2 == 1
        && p.s() % 2 == 1
        && p.n() >= 7
        && p.s() >= 3
        && d.lambda > d.gamma
        && d.gamma > 0
}

fn odd_even_applies(p: GpgParams, d: &DerivedCase) -> bool {
    p.n() % 2 == 1 && p.s().is_multiple_of(2) && p.n() >= 5 && d.lambda > d.gamma && d.gamma > 0
}

fn lambda_le_gamma_applies(d: &DerivedCase) -> bool {
    match (d.a, d.b) {
        (Some(a), Some(b)) => d.lambda <= d.gamma && b > 0 && b <= a * d.lambda + 1,
        _ => false,
    }
}

/// Exactly one tag per pair. Precedence: `GammaZero`, `Special4p`, the four
/// parity cases, `LambdaLeGamma`, `Fallback`.
pub fn classify_case(p: GpgParams) -> Classification {
    let d = p.derived();
    let tag = if d.gamma == 0 {
        CaseTag::GammaZero
    } else if special_4p_index(p).is_some() {
        CaseTag::Special4p
    } else if even_odd_applies(p, &d) {
        CaseTag::EvenOdd
    } else if even_even_applies(p, &d) {
        CaseTag::EvenEven
    } else if odd_odd_applies(p, &d) {
        CaseTag::OddOdd
    } else if odd_even_applies(p, &d) {
        CaseTag::OddEven
    } else if lambda_le_gamma_applies(&d) {
        CaseTag::LambdaLeGamma
    } else {
        CaseTag::Fallback
    };
    Classification { tag, derived: d }
}

fn precondition(ok: bool, what: &str, p: GpgParams) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{what} formula does not apply to {p}"
        )))
    }
}

/// `n = lambda * s`: `floor((lambda + s + 3) / 2)`.
pub fn diameter_gamma0(lambda: u64, s: u64) -> Result<u64> {
    if lambda < 3 || s < 2 {
        return Err(Error::Precondition(format!(
            "gamma = 0 formula needs lambda >= 3 and s >= 2, got lambda = {lambda}, s = {s}"
        )));
    }
    Ok((lambda + s + 3) / 2)
}

pub fn diameter_even_odd(p: GpgParams) -> Result<u64> {
    let d = p.derived();
    precondition(even_odd_applies(p, &d), "even-n odd-s", p)?;
    let s = p.s();
    let m = ceil_half(d.gamma).min(ceil_half(s - d.gamma + 1));
    Ok(ceil_half(d.lambda) + (s - 1) / 2 + 3 - m)
}

pub fn diameter_even_even(p: GpgParams) -> Result<u64> {
    let d = p.derived();
    precondition(even_even_applies(p, &d), "even-n even-s", p)?;
    let s = p.s();
    Ok(if d.gamma <= ceil_half(s - 2) {
        ceil_half(d.lambda) + (s - d.gamma) / 2 + 2
    } else {
        d.lambda / 2 + d.gamma / 2 + 2
    })
}

pub fn diameter_odd_odd(p: GpgParams) -> Result<u64> {
    let d = p.derived();
    precondition(odd_odd_applies(p, &d), "odd-n odd-s", p)?;
    let s = p.s();
    let m = ceil_half(d.gamma + 1).min(ceil_half(s - d.gamma + 2));
    Ok(ceil_half(d.lambda) + (s - 1) / 2 + 3 - m)
}

pub fn diameter_odd_even(p: GpgParams) -> Result<u64> {
    let d = p.derived();
    precondition(odd_even_applies(p, &d), "odd-n even-s", p)?;
    let (s, g) = (p.s(), d.gamma);
    Ok(if g == 1 || g == s - 1 {
        ceil_half(d.lambda) + (s + 2) / 2
    } else if 3 <= g && g < ceil_half(s) {
        d.lambda / 2 + (s - g + 5) / 2
    } else {
        ceil_half(d.lambda) + (g + 3) / 2
    })
}

/// Auxiliary values of the `lambda <= gamma` case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PValues {
    pub p0: u64,
    pub p1: u64,
    pub p2: u64,
    pub p3: u64,
    pub e1: u64,
}

impl PValues {
    pub fn new(p: GpgParams) -> Result<PValues> {
        let d = p.derived();
        let (a, b) = match (d.a, d.b) {
            (Some(a), Some(b)) if b > 0 => (a, b),
            _ => {
                return Err(Error::Precondition(format!(
                    "auxiliary values need gamma > 0 and b > 0 at {p}"
                )))
            }
        };
        let (l, g) = (d.lambda, d.gamma);
        let p0 = (l + g) / 2;
        let p1 = (g - b + (a + 1) * l).div_ceil(2);
        // a >= 1 since gamma < s
        let p2 = (g + b + (a - 1) * l).div_ceil(2);
        let p3 = (b + a * l).div_ceil(2);
        let e1 = p1.max(p3).min(p0.max(p2));
        Ok(PValues { p0, p1, p2, p3, e1 })
    }
}

/// Circulant part of the `lambda <= gamma` formula (the GPG value minus the gap).
fn lambda_le_gamma_base(p: GpgParams) -> Result<u64> {
    let d = p.derived();
    precondition(lambda_le_gamma_applies(&d), "lambda <= gamma", p)?;
    let pv = PValues::new(p)?;
    let (a, b) = (d.a.unwrap(), d.b.unwrap());
    // (gamma + b)(a*lambda - lambda + 1) is odd iff both factors are odd
    let odd = (d.gamma + b) % 2 == 1 && ((a - 1) * d.lambda + 1) % 2 == 1;
    Ok(if pv.p1 == pv.p2 && odd {
        pv.p1 - 1
    } else {
        pv.e1
    })
}

pub fn diameter_lambda_le_gamma(p: GpgParams, epsilon: Epsilon) -> Result<u64> {
    Ok(lambda_le_gamma_base(p)? + epsilon.value())
}

/// GPG(4k, 2k - 1) has diameter `k + 1`.
pub fn diameter_special_4p(k: u64) -> Result<u64> {
    if k <= 2 {
        return Err(Error::Precondition(format!(
            "(4k, 2k - 1) family needs k > 2, got {k}"
        )));
    }
    Ok(k + 1)
}

/// Closed-form GPG diameter for a tagged pair; `None` for `Fallback`.
///
/// `LambdaLeGamma` needs the gap; the other cases ignore it.
pub fn closed_form_value(p: GpgParams, tag: CaseTag, epsilon: Epsilon) -> Option<u64> {
    let d = p.derived();
    let v = match tag {
        CaseTag::GammaZero => diameter_gamma0(d.lambda, p.s()),
        CaseTag::EvenOdd => diameter_even_odd(p),
        CaseTag::EvenEven => diameter_even_even(p),
        CaseTag::OddOdd => diameter_odd_odd(p),
        CaseTag::OddEven => diameter_odd_even(p),
        CaseTag::LambdaLeGamma => diameter_lambda_le_gamma(p, epsilon),
        CaseTag::Special4p => diameter_special_4p(p.n() / 4),
        CaseTag::Fallback => return None,
    };
    Some(v.expect("classification guarantees the formula's range"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpperBounds {
    /// `floor(floor(n/2) / s) + ceil(s/2)` on the circulant diameter.
    pub circulant_half_ring: u64,
    /// Minimum of the three known circulant bounds.
    pub circulant: u64,
    /// `circulant + 2`.
    pub gpg: u64,
}

pub fn upper_bound_gpg(p: GpgParams) -> UpperBounds {
    let (n, s) = (p.n() as i64, p.s() as i64);
    let d = p.derived();
    let (l, g) = (d.lambda as i64, d.gamma as i64);
    let circulant_half_ring = ((n / 2) / s + (s + 1) / 2) as u64;
    let du = (l + 1).max(g - 2).max(s - g - 1);
    let ring = (n + 2) / 4;
    let circulant = du.min(ring).min(circulant_half_ring as i64) as u64;
    UpperBounds {
        circulant_half_ring,
        circulant,
        gpg: circulant + 2,
    }
}

/// Diameter of GPG(n, s) together with its circulant diameter and gap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiameterResult {
    pub n: u64,
    pub s: u64,
    pub case: Classification,
    pub d_circulant: u64,
    pub d_gpg: u64,
    pub epsilon: Epsilon,
    pub epsilon_basis: EpsilonBasis,
    /// Value of the case formula, when the pair has one.
    pub closed_form: Option<u64>,
    /// `(0, i)` with `i` the smallest vertex at maximum circulant distance.
    pub circulant_witness: DiameterWitness,
    pub upper_bound: u64,
}

impl DiameterResult {
    pub fn method(&self) -> CaseTag {
        self.case.tag
    }

    /// False when the case formula disagrees with the computed diameter.
    pub fn closed_form_agrees(&self) -> bool {
        self.closed_form.is_none_or(|v| v == self.d_gpg)
    }
}

/// Diameter of GPG(n, s).
///
/// The circulant diameter comes from the distance formulas and the gap from
/// [`classify_epsilon`]; their sum is the reported diameter. The case formula
/// for the pair, if any, is evaluated alongside and kept in `closed_form`.
/// Some published case formulas are off by one on sub-families (for example
/// GPG(14, 4)), so the constructive value is the one reported.
pub fn gpg_diameter(p: GpgParams) -> DiameterResult {
    let case = classify_case(p);
    let witness = circulant_diameter(p);
    let d_circulant = witness.value as u64;
    let verdict = classify_epsilon(p);
    DiameterResult {
        n: p.n(),
        s: p.s(),
        case,
        d_circulant,
        d_gpg: d_circulant + verdict.epsilon.value(),
        epsilon: verdict.epsilon,
        epsilon_basis: verdict.basis,
        closed_form: closed_form_value(p, case.tag, verdict.epsilon),
        circulant_witness: witness,
        upper_bound: upper_bound_gpg(p).gpg,
    }
}
