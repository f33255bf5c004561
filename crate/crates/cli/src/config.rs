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

//! Optional TOML configuration. Command-line flags override every field.
//!
//! ```toml
//! jobs = 8
//!
//! [sweep]
//! n_min = 5
//! n_max = 200
//! format = "csv"
//! output_dir = "out"
//! ```

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Deserialize;

use crate::render::Format;

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub jobs: Option<usize>,
    #[serde(default)]
    pub sweep: SweepConfig,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub n_min: Option<u64>,
    pub n_max: Option<u64>,
    pub format: Option<Format>,
    pub output_dir: Option<PathBuf>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_full_config() {
        let c: Config = toml::from_str(
            "jobs = 3\n[sweep]\nn_min = 6\nn_max = 9\nformat = \"jsonl\"\noutput_dir = \"o\"\n",
        )
        .unwrap();
        assert_eq!(c.jobs, Some(3));
        assert_eq!(c.sweep.n_min, Some(6));
        assert_eq!(c.sweep.format, Some(Format::Jsonl));
        assert_eq!(c.sweep.output_dir, Some(PathBuf::from("o")));
    }

    #[test]
    fn empty_config_is_default() {
        assert_eq!(toml::from_str::<Config>("").unwrap(), Config::default());
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(toml::from_str::<Config>("colour = 1\n").is_err());
    }
}
