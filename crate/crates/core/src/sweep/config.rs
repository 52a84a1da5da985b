//! Sweep configuration: `key = value` files merged with command-line overrides.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::zoo::{ChannelPoint, Family, GadParams, NmdParams, PdParams, RtnParams, UnruhParams};

/// Keys accepted in config files; command-line flags use the same names.
pub const KNOWN_KEYS: &[&str] = &[
    "family",
    "b",
    "gamma",
    "alpha",
    "kappa",
    "n",
    "r",
    "a",
    "omega",
    "chi_t",
    "t",
    "p",
    "axis",
    "t_start",
    "t_stop",
    "steps",
    "mc_samples",
    "seed",
];

fn normalize_key(key: &str) -> String {
    key.trim()
        .trim_start_matches("--")
        .replace('-', "_")
        .to_ascii_lowercase()
}

/// Ordered `key -> value` map; later insertions override earlier ones.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ConfigMap {
    entries: BTreeMap<String, String>,
}

impl ConfigMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Parses `key = value` lines. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut map = Self::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::config(
                    format!("line {}", lineno + 1),
                    format!("expected `key = value`, got `{line}`"),
                )
            })?;
            map.set(key, value.trim())?;
        }
        Ok(map)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn set(&mut self, key: &str, value: impl Into<String>) -> Result<()> {
        let key = normalize_key(key);
        if !KNOWN_KEYS.contains(&key.as_str()) {
            return Err(Error::config(key, "unknown key"));
        }
        self.entries.insert(key, value.into());
        Ok(())
    }

    /// Applies every entry of `other` on top of `self`.
    pub fn merge(&mut self, other: &ConfigMap) {
        for (k, v) in &other.entries {
            self.entries.insert(k.clone(), v.clone());
        }
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    fn parse_value<T: FromStr>(&self, key: &str) -> Result<Option<T>> {
        match self.get(key) {
            None => Ok(None),
            Some(raw) => raw
                .parse::<T>()
                .map(Some)
                .map_err(|_| Error::config(key, format!("cannot parse `{raw}`"))),
        }
    }

    pub fn real(&self, key: &str) -> Result<Option<f64>> {
        let value: Option<f64> = self.parse_value(key)?;
        match value {
            Some(v) if !v.is_finite() => Err(Error::config(key, "must be finite")),
            other => Ok(other),
        }
    }

    pub fn count(&self, key: &str) -> Result<Option<u64>> {
        self.parse_value(key)
    }
}

/// Quantity stepped along a sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SweepAxis {
    /// Time `t` (RTN, NMD via κ, GAD, AD).
    Time,
    /// Phase χt (PD).
    ChiT,
    /// Acceleration `a` at fixed ω (Unruh).
    Acceleration,
    /// Unruh angle `r`.
    Angle,
}

impl SweepAxis {
    pub fn default_for(family: Family) -> Self {
        match family {
            Family::Rtn | Family::Nmd | Family::Gad | Family::Ad => SweepAxis::Time,
            Family::Pd => SweepAxis::ChiT,
            Family::Unruh => SweepAxis::Acceleration,
        }
    }

    fn allowed(self, family: Family) -> bool {
        match family {
            Family::Unruh => matches!(self, SweepAxis::Acceleration | SweepAxis::Angle),
            other => self == SweepAxis::default_for(other),
        }
    }

    pub fn key(self) -> &'static str {
        match self {
            SweepAxis::Time => "t",
            SweepAxis::ChiT => "chi_t",
            SweepAxis::Acceleration => "a",
            SweepAxis::Angle => "r",
        }
    }
}

impl fmt::Display for SweepAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for SweepAxis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "t" => Ok(SweepAxis::Time),
            "chi_t" | "chi-t" => Ok(SweepAxis::ChiT),
            "a" => Ok(SweepAxis::Acceleration),
            "r" => Ok(SweepAxis::Angle),
            other => Err(Error::config(
                "axis",
                format!("unknown axis `{other}` (t|chi_t|a|r)"),
            )),
        }
    }
}

/// Fixed family parameters; which ones are required depends on the family.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct FamilyParams {
    pub b: Option<f64>,
    pub gamma: Option<f64>,
    pub alpha: Option<f64>,
    pub kappa: Option<f64>,
    pub p: Option<f64>,
    pub n: Option<f64>,
    pub chi_t: Option<f64>,
    pub r: Option<f64>,
    pub a: Option<f64>,
    pub omega: Option<f64>,
    pub t: Option<f64>,
}

fn required(value: Option<f64>, field: &str, family: Family) -> Result<f64> {
    value.ok_or_else(|| Error::config(field, format!("required for family `{family}`")))
}

/// Range errors from the channel constructors become config errors on the same field.
fn as_config<T>(result: Result<T>) -> Result<T> {
    result.map_err(|e| match e {
        Error::OutOfRange { name, value, range } => {
            Error::config(name, format!("{value} outside {range}"))
        }
        other => other,
    })
}

impl FamilyParams {
    pub fn from_map(map: &ConfigMap) -> Result<Self> {
        Ok(Self {
            b: map.real("b")?,
            gamma: map.real("gamma")?,
            alpha: map.real("alpha")?,
            kappa: map.real("kappa")?,
            p: map.real("p")?,
            n: map.real("n")?,
            chi_t: map.real("chi_t")?,
            r: map.real("r")?,
            a: map.real("a")?,
            omega: map.real("omega")?,
            t: map.real("t")?,
        })
    }

    /// Builds the channel point, with `axis` (if given) overriding the matching field.
    pub fn point(&self, family: Family, axis: Option<(SweepAxis, f64)>) -> Result<ChannelPoint> {
        let mut p = *self;
        if let Some((axis, value)) = axis {
            match axis {
                SweepAxis::Time => {
                    p.t = Some(value);
                    p.p = None;
                }
                SweepAxis::ChiT => p.chi_t = Some(value),
                SweepAxis::Acceleration => {
                    p.a = Some(value);
                    p.r = None;
                }
                SweepAxis::Angle => {
                    p.r = Some(value);
                    p.a = None;
                }
            }
        }
        as_config(p.build(family))
    }

    fn build(&self, family: Family) -> Result<ChannelPoint> {
        match family {
            Family::Rtn => Ok(ChannelPoint::Rtn(RtnParams::new(
                required(self.b, "b", family)?,
                required(self.gamma, "gamma", family)?,
                required(self.t, "t", family)?,
            )?)),
            Family::Nmd => {
                let alpha = required(self.alpha, "alpha", family)?;
                let params = match self.p {
                    Some(p) => NmdParams::new(alpha, p)?,
                    None => NmdParams::from_time(
                        alpha,
                        required(self.kappa, "kappa", family)?,
                        required(self.t, "t", family)?,
                    )?,
                };
                Ok(ChannelPoint::Nmd(params))
            }
            Family::Pd => Ok(ChannelPoint::Pd(PdParams::new(required(
                self.chi_t, "chi_t", family,
            )?)?)),
            Family::Gad => Ok(ChannelPoint::Gad(GadParams::new(
                required(self.n, "n", family)?,
                required(self.gamma, "gamma", family)?,
                required(self.t, "t", family)?,
            )?)),
            Family::Ad => {
                if let Some(n) = self.n {
                    if n != 0.0 {
                        return Err(Error::config("n", "amplitude damping requires n = 0"));
                    }
                }
                Ok(ChannelPoint::Ad(GadParams::amplitude_damping(
                    required(self.gamma, "gamma", family)?,
                    required(self.t, "t", family)?,
                )?))
            }
            Family::Unruh => {
                let params = match (self.r, self.a) {
                    (Some(r), _) => UnruhParams::new(r)?,
                    (None, Some(a)) => {
                        UnruhParams::from_acceleration(a, required(self.omega, "omega", family)?)?
                    }
                    (None, None) => {
                        return Err(Error::config("r", "unruh needs `r` or `a` with `omega`"))
                    }
                };
                Ok(ChannelPoint::Unruh(params))
            }
        }
    }
}

/// Inclusive uniform grid with `steps` points.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl Grid {
    pub fn new(start: f64, stop: f64, steps: usize) -> Result<Self> {
        if !(start.is_finite() && stop.is_finite() && start < stop) {
            return Err(Error::config(
                "t_start",
                format!("need t_start < t_stop, got {start} and {stop}"),
            ));
        }
        if steps < 2 {
            return Err(Error::config(
                "steps",
                format!("need at least 2 steps, got {steps}"),
            ));
        }
        Ok(Self { start, stop, steps })
    }

    pub fn value(&self, k: usize) -> f64 {
        if k + 1 == self.steps {
            self.stop
        } else {
            self.start + (self.stop - self.start) * k as f64 / (self.steps - 1) as f64
        }
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.steps).map(|k| self.value(k)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepConfig {
    pub family: Family,
    pub params: FamilyParams,
    pub axis: SweepAxis,
    pub grid: Grid,
    /// 0 disables the Monte Carlo columns.
    pub mc_samples: u64,
    pub seed: u64,
}

impl SweepConfig {
    /// Validates the whole config, including every family parameter at both grid ends.
    pub fn new(
        family: Family,
        params: FamilyParams,
        axis: SweepAxis,
        grid: Grid,
        mc_samples: u64,
        seed: u64,
    ) -> Result<Self> {
        if !axis.allowed(family) {
            return Err(Error::config(
                "axis",
                format!("family `{family}` cannot sweep `{axis}`"),
            ));
        }
        let cfg = Self {
            family,
            params,
            axis,
            grid,
            mc_samples,
            seed,
        };
        cfg.point_at(grid.start)?;
        cfg.point_at(grid.stop)?;
        Ok(cfg)
    }

    pub fn from_map(map: &ConfigMap) -> Result<Self> {
        let family: Family = map
            .get("family")
            .ok_or_else(|| Error::config("family", "missing"))?
            .parse()?;
        let axis = match map.get("axis") {
            Some(raw) => raw.parse()?,
            None => SweepAxis::default_for(family),
        };
        let start = map
            .real("t_start")?
            .ok_or_else(|| Error::config("t_start", "missing"))?;
        let stop = map
            .real("t_stop")?
            .ok_or_else(|| Error::config("t_stop", "missing"))?;
        let steps = map
            .count("steps")?
            .ok_or_else(|| Error::config("steps", "missing"))?;
        let grid = Grid::new(start, stop, steps as usize)?;
        Self::new(
            family,
            FamilyParams::from_map(map)?,
            axis,
            grid,
            map.count("mc_samples")?.unwrap_or(0),
            map.count("seed")?.unwrap_or(0),
        )
    }

    pub fn point_at(&self, value: f64) -> Result<ChannelPoint> {
        self.params.point(self.family, Some((self.axis, value)))
    }
}
