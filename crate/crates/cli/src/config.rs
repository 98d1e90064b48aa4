//! Run configuration: a flat key-value config file merged with command-line
//! flags, flags taking precedence.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use zdgamma::BigRational;
use zdgamma::blowup::crosscheck::CheckKind;
use zdgamma::blowup::BlowupSpec;
use zdgamma::{ClosedSetIdeal, GraphFlavor, GroundSet, PeriodicSet, SpaceModel};

pub const DEFAULT_SEED: u64 = 2024;

/// Everything a run needs, after merging defaults, config file and flags.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub ground: GroundSet,
    pub ideal: ClosedSetIdeal,
    pub flavor: GraphFlavor,
    pub window: Option<PeriodicSet>,
    pub alphabet: Vec<BigRational>,
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub only: Option<Vec<CheckKind>>,
    pub mutate: bool,
    /// True when the model was named explicitly (by flag or file) rather
    /// than defaulted; `verify` uses this to pick single-model mode.
    pub model_explicit: bool,
}

/// Raw option strings from one source (file or flags).
#[derive(Clone, Debug, Default)]
pub struct RawConfig {
    pub ground: Option<String>,
    pub ideal: Option<String>,
    pub flavor: Option<String>,
    pub window: Option<String>,
    pub alphabet: Option<String>,
    pub seed: Option<String>,
    pub out: Option<String>,
    pub only: Option<String>,
    pub mutate: Option<String>,
}

impl RawConfig {
    /// Fills unset fields from another source (lower precedence).
    pub fn or(mut self, fallback: RawConfig) -> RawConfig {
        self.ground = self.ground.or(fallback.ground);
        self.ideal = self.ideal.or(fallback.ideal);
        self.flavor = self.flavor.or(fallback.flavor);
        self.window = self.window.or(fallback.window);
        self.alphabet = self.alphabet.or(fallback.alphabet);
        self.seed = self.seed.or(fallback.seed);
        self.out = self.out.or(fallback.out);
        self.only = self.only.or(fallback.only);
        self.mutate = self.mutate.or(fallback.mutate);
        self
    }
}

/// Parses `key = value` lines; `#` starts a comment.
pub fn read_config_file(path: &Path) -> Result<RawConfig, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    let mut map = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key = value", lineno + 1))?;
        map.insert(key.trim().to_string(), value.trim().to_string());
    }
    let mut raw = RawConfig::default();
    for (key, value) in map {
        match key.as_str() {
            "ground" => raw.ground = Some(value),
            "ideal" => raw.ideal = Some(value),
            "flavor" => raw.flavor = Some(value),
            "window" => raw.window = Some(value),
            "alphabet" => raw.alphabet = Some(value),
            "seed" => raw.seed = Some(value),
            "out" => raw.out = Some(value),
            "only" => raw.only = Some(value),
            "mutate" => raw.mutate = Some(value),
            other => return Err(format!("unknown config key {other:?}")),
        }
    }
    Ok(raw)
}

fn parse_window(s: &str) -> Result<PeriodicSet, String> {
    let s = s.trim();
    // A bare count means the first n points.
    if let Ok(n) = s.parse::<u64>() {
        if n == 0 {
            return Err("window must be nonempty".into());
        }
        return PeriodicSet::interval(0, n - 1).map_err(|e| e.to_string());
    }
    let set: PeriodicSet = s.parse().map_err(|e: zdgamma::Error| e.to_string())?;
    if !set.is_finite() {
        return Err("window must be finite".into());
    }
    Ok(set)
}

fn parse_alphabet(s: &str) -> Result<Vec<BigRational>, String> {
    let inner = s
        .trim()
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .unwrap_or(s.trim());
    inner
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<BigRational>()
                .map_err(|_| format!("bad alphabet value {:?}", tok.trim()))
        })
        .collect()
}

impl RunConfig {
    /// Resolves a merged raw configuration against the defaults.
    pub fn resolve(raw: RawConfig) -> Result<RunConfig, String> {
        let model_explicit = raw.ground.is_some() || raw.ideal.is_some();
        let ground: GroundSet = raw
            .ground
            .as_deref()
            .unwrap_or("countable")
            .parse()
            .map_err(|e: zdgamma::Error| e.to_string())?;
        let ideal: ClosedSetIdeal = raw
            .ideal
            .as_deref()
            .unwrap_or("finite")
            .parse()
            .map_err(|e: zdgamma::Error| e.to_string())?;
        let flavor: GraphFlavor = raw
            .flavor
            .as_deref()
            .unwrap_or("cp")
            .parse()
            .map_err(|e: zdgamma::Error| e.to_string())?;
        let window = raw.window.as_deref().map(parse_window).transpose()?;
        let alphabet = match raw.alphabet.as_deref() {
            Some(s) => parse_alphabet(s)?,
            None => vec![
                BigRational::from_integer(1.into()),
                BigRational::from_integer(2.into()),
            ],
        };
        let seed = match raw.seed.as_deref() {
            Some(s) => s.parse::<u64>().map_err(|_| format!("bad seed {s:?}"))?,
            None => DEFAULT_SEED,
        };
        let only = match raw.only.as_deref() {
            Some(s) => Some(
                s.split(',')
                    .map(|tok| tok.trim().parse::<CheckKind>().map_err(|e| e.to_string()))
                    .collect::<Result<Vec<_>, _>>()?,
            ),
            None => None,
        };
        let mutate = match raw.mutate.as_deref() {
            Some("true") | Some("1") => true,
            Some("false") | Some("0") | None => false,
            Some(other) => return Err(format!("bad mutate value {other:?}")),
        };
        Ok(RunConfig {
            ground,
            ideal,
            flavor,
            window,
            alphabet,
            seed,
            out: raw.out.map(PathBuf::from),
            only,
            mutate,
            model_explicit,
        })
    }

    pub fn model(&self) -> Result<SpaceModel, zdgamma::Error> {
        SpaceModel::new(self.ground.clone(), self.ideal.clone())
    }

    /// The window to materialise: the explicit one, else the locality region
    /// when finite, else the first four points of it.
    pub fn effective_window(&self, model: &SpaceModel) -> Result<PeriodicSet, String> {
        if let Some(w) = &self.window {
            return Ok(w.clone());
        }
        let locality = model.locality_region();
        if locality.is_finite() {
            Ok(locality)
        } else {
            Ok(PeriodicSet::from_points(
                locality.sample(4).map_err(|e| e.to_string())?,
            ))
        }
    }

    pub fn blowup_spec(&self) -> Result<BlowupSpec, String> {
        let model = self.model().map_err(|e| e.to_string())?;
        let window = self.effective_window(&model)?;
        BlowupSpec::new(model, self.flavor, window, self.alphabet.clone())
            .map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_resolve() {
        let cfg = RunConfig::resolve(RawConfig::default()).unwrap();
        assert_eq!(cfg.ground, GroundSet::Countable);
        assert_eq!(cfg.ideal, ClosedSetIdeal::FiniteSets);
        assert_eq!(cfg.flavor, GraphFlavor::Cp);
        assert_eq!(cfg.alphabet.len(), 2);
        assert_eq!(cfg.seed, DEFAULT_SEED);
        assert!(!cfg.model_explicit);
    }

    #[test]
    fn window_syntax() {
        assert_eq!(parse_window("3").unwrap(), PeriodicSet::from_points([0, 1, 2]));
        assert_eq!(parse_window("{0,2}").unwrap(), PeriodicSet::from_points([0, 2]));
        assert!(parse_window("evens").is_err());
        assert!(parse_window("0").is_err());
    }

    #[test]
    fn alphabet_syntax() {
        let a = parse_alphabet("{1,2,-1/2}").unwrap();
        assert_eq!(a.len(), 3);
        let b = parse_alphabet("1, 2").unwrap();
        assert_eq!(b.len(), 2);
        assert!(parse_alphabet("{x}").is_err());
    }

    #[test]
    fn flags_override_file() {
        let file = RawConfig { ground: Some("finite:3".into()), seed: Some("7".into()), ..Default::default() };
        let flags = RawConfig { ground: Some("finite:5".into()), ..Default::default() };
        let merged = flags.or(file);
        let cfg = RunConfig::resolve(merged).unwrap();
        assert_eq!(cfg.ground, GroundSet::Finite(5));
        assert_eq!(cfg.seed, 7);
    }
}
