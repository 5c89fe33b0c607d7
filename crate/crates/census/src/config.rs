use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub max_crossings: usize,
    /// Crossings above the start allowed in the reduction search.
    pub headroom: usize,
    pub max_states: usize,
    pub composite_headroom: usize,
    pub composite_merge_headroom: usize,
    pub composite_max_states: usize,
    pub workers: usize,
    /// Group spec for the first KS column (`a4`, `s4`, `file:PATH`, ...).
    pub group_a4: String,
    pub group_a5: String,
    /// Skip the second column and the checks that need it.
    pub a5: bool,
    /// Fixture directory; the compiled-in fixtures when absent.
    pub fixtures: Option<PathBuf>,
    /// Where stage results are kept; a stage whose file matches the config
    /// is loaded instead of rerun.
    pub stage_dir: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_crossings: 6,
            headroom: 2,
            max_states: 5_000_000,
            composite_headroom: 1,
            composite_merge_headroom: 2,
            composite_max_states: 2_000_000,
            workers: 1,
            group_a4: "a4".into(),
            group_a5: "a5".into(),
            a5: true,
            fixtures: None,
            stage_dir: None,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Toml(#[from] toml::de::Error),
}

impl Config {
    pub fn load(path: &Path) -> Result<Config, ConfigError> {
        Ok(toml::from_str(&std::fs::read_to_string(path)?)?)
    }

    /// The settings that change results; worker count and paths excluded.
    pub fn fingerprint(&self) -> String {
        let mut c = self.clone();
        c.workers = 1;
        c.stage_dir = None;
        serde_json::to_string(&c).expect("config serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_toml_fills_defaults() {
        let c: Config = toml::from_str("workers = 4\na5 = false\n").unwrap();
        assert_eq!(c.workers, 4);
        assert!(!c.a5);
        assert_eq!(c.max_crossings, 6);
        assert_eq!(c.fingerprint(), Config { a5: false, ..Config::default() }.fingerprint());
    }

    #[test]
    fn unknown_keys_are_errors() {
        assert!(toml::from_str::<Config>("colour = 1\n").is_err());
    }
}
