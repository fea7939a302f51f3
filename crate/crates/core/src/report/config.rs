use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::potentials::{HalfInt, PotentialSpec, SpinOrbitCoupling, UnitSystem};

/// Environment variable consulted for the units preset.
pub const UNITS_ENV: &str = "RADIAL_UNITS";

/// Every setting a run may carry, as it appears in a config file.
pub const KNOWN_KEYS: &[&str] = &[
    "bracket",
    "branch",
    "carrier",
    "format",
    "indexing",
    "k",
    "l",
    "n",
    "nodes",
    "omega",
    "out",
    "parity",
    "potential",
    "radius",
    "rmax",
    "samples",
    "signed",
    "units",
    "which",
    "energy",
];

/// Validated run settings: config file entries overlaid by command-line flags.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    values: BTreeMap<String, String>,
}

impl RunConfig {
    pub fn new() -> Self {
        Self::default()
    }

    /// Parses `key = value` lines. Blank lines and lines starting with `#`
    /// are skipped; unknown or repeated keys are rejected.
    pub fn parse(text: &str) -> Result<Self> {
        let mut config = RunConfig::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key = value, got `{line}`", i + 1)))?;
            let key = key.trim();
            if config.values.contains_key(key) {
                return Err(Error::Config(format!("line {}: key `{key}` given twice", i + 1)));
            }
            config.set(key, value.trim())?;
        }
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read config file {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn set(&mut self, key: &str, value: impl Into<String>) -> Result<()> {
        if !KNOWN_KEYS.contains(&key) {
            return Err(Error::Config(format!("unknown config key `{key}`")));
        }
        self.values.insert(key.to_string(), value.into());
        Ok(())
    }

    /// Entries of `other` replace those of `self`.
    pub fn overlay(mut self, other: &RunConfig) -> Self {
        for (k, v) in &other.values {
            self.values.insert(k.clone(), v.clone());
        }
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    pub fn require(&self, key: &str) -> Result<&str> {
        self.get(key)
            .ok_or_else(|| Error::Config(format!("missing setting `{key}`")))
    }

    pub fn parsed<T: FromStr>(&self, key: &str) -> Result<Option<T>>
    where
        T::Err: std::fmt::Display,
    {
        self.get(key)
            .map(|v| {
                v.parse::<T>()
                    .map_err(|e| Error::Config(format!("invalid {key} `{v}`: {e}")))
            })
            .transpose()
    }

    pub fn parsed_or<T: FromStr>(&self, key: &str, default: T) -> Result<T>
    where
        T::Err: std::fmt::Display,
    {
        Ok(self.parsed(key)?.unwrap_or(default))
    }

    pub fn entries(&self) -> &BTreeMap<String, String> {
        &self.values
    }

    /// The unit system: `units` key if present, then the environment value,
    /// then natural units.
    pub fn units(&self, env: Option<&str>) -> Result<UnitSystem> {
        match self.get("units").or(env) {
            Some(name) => UnitSystem::preset(name),
            None => Ok(UnitSystem::natural()),
        }
    }
}

/// Parses `name:key=value,key=value`.
///
/// | name | keys |
/// |---|---|
/// | `hydrogen` | `Z` (default 1), `e` (default: the unit charge) |
/// | `well` | `L` |
/// | `ho` | `omega` |
/// | `hoso` | `omega`, `j`, `s` (default 1/2), `c0` or `mode=relativistic\|relativistic-m2` |
/// | `parabolic` | `a`, `b`, `c` |
/// | `free` | none |
pub fn parse_potential(spec: &str, units: &UnitSystem) -> Result<PotentialSpec> {
    let spec = spec.trim();
    let (name, args) = spec.split_once(':').unwrap_or((spec, ""));
    let mut params: BTreeMap<&str, &str> = BTreeMap::new();
    for part in args.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("potential parameter `{part}` is not key=value")))?;
        if params.insert(k.trim(), v.trim()).is_some() {
            return Err(Error::Config(format!("potential parameter `{}` given twice", k.trim())));
        }
    }
    let allowed: &[&str] = match name {
        "hydrogen" => &["Z", "e"],
        "well" => &["L"],
        "ho" => &["omega"],
        "hoso" => &["omega", "j", "s", "c0", "mode"],
        "parabolic" => &["a", "b", "c"],
        "free" => &[],
        other => {
            return Err(Error::Config(format!(
                "unknown potential `{other}` (hydrogen, well, ho, hoso, parabolic, free)"
            )))
        }
    };
    if let Some(k) = params.keys().find(|k| !allowed.contains(k)) {
        return Err(Error::Config(format!("unknown parameter `{k}` for potential `{name}`")));
    }
    let num = |k: &str| -> Result<Option<f64>> {
        params
            .get(k)
            .map(|v| {
                v.parse::<f64>()
                    .map_err(|_| Error::Config(format!("{name}: `{k}={v}` is not a number")))
            })
            .transpose()
    };
    let need = |k: &str| -> Result<f64> { num(k)?.ok_or_else(|| Error::Config(format!("{name}: missing `{k}`"))) };
    let half = |k: &str| -> Result<Option<HalfInt>> {
        params
            .get(k)
            .map(|v| {
                v.parse::<HalfInt>()
                    .map_err(|e| Error::Config(format!("{name}: {k}: {e}")))
            })
            .transpose()
    };
    let spec = match name {
        "hydrogen" => {
            let z = match params.get("Z") {
                Some(v) => v
                    .parse::<u32>()
                    .map_err(|_| Error::Config(format!("hydrogen: `Z={v}` is not an integer")))?,
                None => 1,
            };
            PotentialSpec::HydrogenLike {
                z,
                e_charge: num("e")?.unwrap_or(units.charge),
            }
        }
        "well" => PotentialSpec::InfiniteSphericalWell { radius: need("L")? },
        "ho" => PotentialSpec::IsotropicHO { omega: need("omega")? },
        "hoso" => {
            let omega = need("omega")?;
            let coupling = match (num("c0")?, params.get("mode")) {
                (Some(_), Some(_)) => return Err(Error::Config("hoso: give either c0 or mode, not both".into())),
                (Some(c0), None) => SpinOrbitCoupling::Parameter {
                    c0: c0 * units.hbar * omega,
                },
                (None, Some(&"relativistic")) => SpinOrbitCoupling::Relativistic,
                (None, Some(&"relativistic-m2")) => SpinOrbitCoupling::RelativisticMassSquared,
                (None, Some(m)) => {
                    return Err(Error::Config(format!(
                        "hoso: unknown mode `{m}` (relativistic, relativistic-m2)"
                    )))
                }
                (None, None) => return Err(Error::Config("hoso: missing `c0` or `mode`".into())),
            };
            PotentialSpec::HOSpinOrbit {
                omega,
                j: half("j")?.ok_or_else(|| Error::Config("hoso: missing `j`".into()))?,
                s: half("s")?.unwrap_or(HalfInt::HALF),
                coupling,
            }
        }
        "parabolic" => PotentialSpec::Parabolic {
            a: need("a")?,
            b: need("b")?,
            c: need("c")?,
        },
        _ => PotentialSpec::FreeParticle,
    };
    Ok(spec)
}

/// `3`, `1..4` (inclusive), `1-4` or `0,2,5`.
pub fn parse_range(text: &str) -> Result<Vec<u32>> {
    let bad = || Error::Config(format!("invalid range `{text}` (forms: 3, 1..4, 1-4, 0,2,5)"));
    let num = |s: &str| s.trim().parse::<u32>().map_err(|_| bad());
    let t = text.trim();
    let (lo, hi) = if let Some((a, b)) = t.split_once("..") {
        (num(a)?, num(b.trim_start_matches('='))?)
    } else if let Some((a, b)) = t.split_once('-') {
        (num(a)?, num(b)?)
    } else {
        return t.split(',').map(num).collect();
    };
    if hi < lo {
        return Err(bad());
    }
    Ok((lo..=hi).collect())
}

/// `lo,hi`
pub fn parse_pair(text: &str) -> Result<(f64, f64)> {
    let bad = || Error::Config(format!("expected `lo,hi`, got `{text}`"));
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn potential_grammar() {
        let u = UnitSystem::natural();
        assert_eq!(
            parse_potential("ho:omega=1", &u).unwrap(),
            PotentialSpec::IsotropicHO { omega: 1.0 }
        );
        assert_eq!(
            parse_potential("well:L=2.5", &u).unwrap(),
            PotentialSpec::InfiniteSphericalWell { radius: 2.5 }
        );
        assert_eq!(
            parse_potential("hydrogen", &u).unwrap(),
            PotentialSpec::HydrogenLike { z: 1, e_charge: 1.0 }
        );
        assert_eq!(parse_potential("free", &u).unwrap(), PotentialSpec::FreeParticle);
        match parse_potential("hoso:omega=1,j=2.5,s=0.5,c0=0.015", &u).unwrap() {
            PotentialSpec::HOSpinOrbit { j, s, coupling, .. } => {
                assert_eq!(j, HalfInt::from_twice(5));
                assert_eq!(s, HalfInt::HALF);
                assert_eq!(coupling, SpinOrbitCoupling::Parameter { c0: 0.015 });
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_potential("hoso:omega=1,j=5/2,mode=relativistic", &u).unwrap(),
            PotentialSpec::HOSpinOrbit {
                coupling: SpinOrbitCoupling::Relativistic,
                ..
            }
        ));
    }

    #[test]
    fn potential_grammar_rejects() {
        let u = UnitSystem::natural();
        for bad in [
            "ho:omega=1,beta=2",
            "ho",
            "ho:omega=x",
            "well:L=1,L=2",
            "square:L=1",
            "hoso:omega=1,j=2.5",
            "hoso:omega=1,j=2.5,c0=1,mode=relativistic",
            "parabolic:a=1,b=1",
            "free:x=1",
        ] {
            assert!(matches!(parse_potential(bad, &u), Err(Error::Config(_))), "{bad}");
        }
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3").unwrap(), vec![3]);
        assert_eq!(parse_range("1..3").unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_range("0-2").unwrap(), vec![0, 1, 2]);
        assert_eq!(parse_range("0,2,5").unwrap(), vec![0, 2, 5]);
        assert!(parse_range("3..1").is_err());
        assert!(parse_range("a").is_err());
        assert_eq!(parse_pair("0.5, 3").unwrap(), (0.5, 3.0));
    }

    #[test]
    fn config_file() {
        let c = RunConfig::parse("# comment\npotential = ho:omega=1\nl = 0..2\n\nformat=csv\n").unwrap();
        assert_eq!(c.get("potential"), Some("ho:omega=1"));
        assert_eq!(c.get("l"), Some("0..2"));
        assert!(matches!(RunConfig::parse("colour = red"), Err(Error::Config(_))));
        assert!(matches!(RunConfig::parse("l = 1\nl = 2"), Err(Error::Config(_))));
        assert!(matches!(RunConfig::parse("just text"), Err(Error::Config(_))));
    }

    #[test]
    fn flags_override_file_and_env_sets_units() {
        let file = RunConfig::parse("l = 1\nformat = csv").unwrap();
        let mut flags = RunConfig::new();
        flags.set("format", "json").unwrap();
        let merged = file.overlay(&flags);
        assert_eq!(merged.get("format"), Some("json"));
        assert_eq!(merged.get("l"), Some("1"));
        assert_eq!(merged.units(Some("ev-nm")).unwrap().label, "ev-nm");
        assert_eq!(merged.units(None).unwrap().label, "natural");
        let mut explicit = merged.clone();
        explicit.set("units", "natural").unwrap();
        assert_eq!(explicit.units(Some("ev-nm")).unwrap().label, "natural");
    }
}
