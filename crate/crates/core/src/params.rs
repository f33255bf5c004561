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

//! Validated `(n, s)` parameter pairs and the quantities derived from them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Reduce `s` to the canonical range `2 <= s <= (n - 1) / 2`.
///
/// Both GPG(n, s) and C_n(1, s) have literally the same edge set as their
/// `n - s` counterparts, so every public entry point works on the reduced
/// value.
pub fn normalize_s(n: u64, s: u64) -> Result<u64> {
    if n < 5 {
        return Err(Error::RingTooSmall { n });
    }
    if s < 2 || s > n - 2 {
        return Err(Error::SkipOutOfRange { n, s });
    }
    if 2 * s == n {
        return Err(Error::HalfSkip { n, s });
    }
    Ok(if s <= (n - 1) / 2 { s } else { n - s })
}

/// A normalized `(n, s)` pair.
///
/// The same pair parameterizes GPG(n, s) and C_n(1, s); [`GpgParams`] and
/// [`CirculantParams`] name the two readings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    n: u64,
    s: u64,
}

pub type GpgParams = Params;
pub type CirculantParams = Params;

impl Params {
    pub fn new(n: u64, s: u64) -> Result<Self> {
        let s = normalize_s(n, s)?;
        Ok(Params { n, s })
    }

    #[inline]
    pub fn n(&self) -> u64 {
        self.n
    }

    #[inline]
    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn gcd(&self) -> u64 {
        gcd(self.n, self.s)
    }

    /// Upper end of the wrap index `t` in the path families: `s / gcd(n, s)`.
    pub fn max_wrap(&self) -> u64 {
        self.s / self.gcd()
    }

    pub fn derived(&self) -> DerivedCase {
        DerivedCase::new(self.n, self.s)
    }

    /// All normalized pairs for one ring size, in ascending `s`.
    pub fn all_for(n: u64) -> impl Iterator<Item = Params> {
        let top = if n >= 5 { (n - 1) / 2 } else { 0 };
        (2..=top).map(move |s| Params { n, s })
    }

    /// All normalized pairs with `n_min <= n <= n_max`, ordered by `n` then `s`.
    pub fn sweep(n_min: u64, n_max: u64) -> impl Iterator<Item = Params> {
        (n_min.max(5)..=n_max).flat_map(Params::all_for)
    }
}

impl std::fmt::Display for Params {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.n, self.s)
    }
}

/// `n = lambda * s + gamma` and, when `gamma > 0`, `s = a * gamma + b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedCase {
    pub lambda: u64,
    pub gamma: u64,
    pub a: Option<u64>,
    pub b: Option<u64>,
}

impl DerivedCase {
    fn new(n: u64, s: u64) -> Self {
        let (lambda, gamma) = (n / s, n % s);
        let (a, b) = (s.checked_div(gamma), s.checked_rem(gamma));
        DerivedCase {
            lambda,
            gamma,
            a,
            b,
        }
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_s(10, 7), Ok(3));
        assert_eq!(normalize_s(12, 5), Ok(5));
        assert_eq!(normalize_s(10, 5), Err(Error::HalfSkip { n: 10, s: 5 }));
    }

    #[test]
    fn normalize_rejects_out_of_range() {
        assert_eq!(normalize_s(4, 2), Err(Error::RingTooSmall { n: 4 }));
        assert_eq!(
            normalize_s(10, 1),
            Err(Error::SkipOutOfRange { n: 10, s: 1 })
        );
        assert_eq!(
            normalize_s(10, 9),
            Err(Error::SkipOutOfRange { n: 10, s: 9 })
        );
        assert_eq!(normalize_s(10, 8), Ok(2));
    }

    #[test]
    fn normalized_range() {
        for n in 5..60 {
            for s in 2..=n - 2 {
                match normalize_s(n, s) {
                    Ok(r) => assert!((2..=(n - 1) / 2).contains(&r)),
                    Err(e) => assert_eq!(e, Error::HalfSkip { n, s }),
                }
            }
        }
    }

    #[test]
    fn derived_identities() {
        for p in Params::sweep(5, 80) {
            let d = p.derived();
            assert_eq!(d.lambda * p.s() + d.gamma, p.n());
            assert!(d.gamma < p.s());
            // lambda >= 2 always since s <= (n - 1) / 2
            assert!(d.lambda >= 2);
            if d.gamma > 0 {
                let (a, b) = (d.a.unwrap(), d.b.unwrap());
                assert_eq!(a * d.gamma + b, p.s());
                assert!(b < d.gamma);
            } else {
                assert!(d.a.is_none() && d.b.is_none());
            }
        }
    }

    #[test]
    fn sweep_ordering() {
        let v: Vec<_> = Params::sweep(5, 8).map(|p| (p.n(), p.s())).collect();
        assert_eq!(v, vec![(5, 2), (6, 2), (7, 2), (7, 3), (8, 2), (8, 3)]);
    }
}
