//! Run configuration, shared by the argument parser and the reports.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sp4kl_core::exact::Scalar;
use sp4kl_core::kloosterman::DEFAULT_BUDGET;
use sp4kl_core::{LatticeDesc, WeylWord};

pub const BUDGET_ENV: &str = "SP4KL_BUDGET";

/// Serialize through `Display` / `FromStr`.
pub(crate) mod as_str {
    use super::*;
    use serde::{de::Error, Deserializer, Serializer};

    pub fn serialize<T: fmt::Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: fmt::Display,
        D: Deserializer<'de>,
    {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

pub(crate) mod as_str_vec {
    use super::*;
    use serde::{de::Error, Deserializer, Serializer};

    pub fn serialize<T: fmt::Display, S: Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<Vec<T>, D::Error>
    where
        T: FromStr,
        T::Err: fmt::Display,
        D: Deserializer<'de>,
    {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| s.parse().map_err(D::Error::custom))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Json,
    Csv,
}

#[derive(
    Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize, clap::ValueEnum,
)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    LemmaRamified,
    Vanishing,
    Admissibility,
    Trivial,
    TrivialBound,
    Classical,
    Factorization,
    Geo,
    Exponents,
    Atlas,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::LemmaRamified,
        Suite::Vanishing,
        Suite::Admissibility,
        Suite::Trivial,
        Suite::TrivialBound,
        Suite::Classical,
        Suite::Factorization,
        Suite::Geo,
        Suite::Exponents,
        Suite::Atlas,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::LemmaRamified => "lemma-ramified",
            Suite::Vanishing => "vanishing",
            Suite::Admissibility => "admissibility",
            Suite::Trivial => "trivial",
            Suite::TrivialBound => "trivial-bound",
            Suite::Classical => "classical",
            Suite::Factorization => "factorization",
            Suite::Geo => "geo",
            Suite::Exponents => "exponents",
            Suite::Atlas => "atlas",
        }
    }
}

/// `N` given explicitly, or resolved from `(w, c, M)`. Serialized as
/// `[n1, n2]` or `"auto"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NSpec {
    Fixed([i64; 2]),
    Auto,
}

impl Serialize for NSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            NSpec::Fixed(n) => n.serialize(s),
            NSpec::Auto => s.serialize_str("auto"),
        }
    }
}

impl<'de> Deserialize<'de> for NSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Pair([i64; 2]),
            Word(String),
        }
        match Raw::deserialize(d)? {
            Raw::Pair(n) => Ok(NSpec::Fixed(n)),
            Raw::Word(w) if w == "auto" => Ok(NSpec::Auto),
            Raw::Word(w) => Err(serde::de::Error::custom(format!(
                "expected \"auto\", got {w:?}"
            ))),
        }
    }
}

impl FromStr for NSpec {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "auto" {
            Ok(NSpec::Auto)
        } else {
            parse_pair(s).map(NSpec::Fixed)
        }
    }
}

pub fn parse_pair<T: FromStr>(s: &str) -> Result<[T; 2], String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected two comma-separated values, got {s:?}"))?;
    let p = |x: &str| {
        x.trim()
            .parse::<T>()
            .map_err(|_| format!("bad value {x:?} in {s:?}"))
    };
    Ok([p(a)?, p(b)?])
}

pub fn parse_modulus(s: &str) -> Result<[u64; 2], String> {
    let c = parse_pair::<u64>(s)?;
    if c[0] == 0 || c[1] == 0 {
        return Err(format!("modulus entries must be positive, got {s:?}"));
    }
    Ok(c)
}

/// A rational such as `9/16` or `2`.
pub fn parse_rational(s: &str) -> Result<Scalar, String> {
    s.trim()
        .parse::<Scalar>()
        .map_err(|_| format!("bad rational {s:?}"))
}

/// Weyl elements for scans: a comma list, `relevant`, or `all`.
pub fn parse_weyl_list(s: &str) -> Result<Vec<WeylWord>, String> {
    match s {
        "all" => Ok(WeylWord::ALL.to_vec()),
        "relevant" => Ok(WeylWord::RELEVANT.to_vec()),
        _ => s
            .split(',')
            .map(|w| w.trim().parse::<WeylWord>().map_err(|e| e.to_string()))
            .collect(),
    }
}

/// What to compute.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum CommandConfig {
    Kl {
        #[serde(with = "as_str")]
        lattice: LatticeDesc,
        #[serde(with = "as_str")]
        w: WeylWord,
        c: [u64; 2],
        m: [i64; 2],
        n: NSpec,
    },
    Enumerate {
        #[serde(with = "as_str")]
        lattice: LatticeDesc,
        #[serde(with = "as_str")]
        w: WeylWord,
        c: [u64; 2],
    },
    Scan {
        #[serde(with = "as_str")]
        lattice: LatticeDesc,
        #[serde(with = "as_str_vec")]
        ws: Vec<WeylWord>,
        c1_max: u64,
        c2_max: u64,
        m: [i64; 2],
        n: NSpec,
    },
    Geo {
        #[serde(with = "as_str")]
        lattice: LatticeDesc,
        #[serde(with = "as_str")]
        w: WeylWord,
        #[serde(with = "as_str")]
        z: Scalar,
    },
    Atlas {
        #[serde(with = "as_str")]
        lattice: LatticeDesc,
        #[serde(with = "as_str")]
        sigma: Scalar,
        #[serde(with = "as_str")]
        m: Scalar,
        general: u64,
        yoshida: u64,
        gl2: u64,
    },
    Verify {
        suite: Suite,
        qmax: u64,
        cmax: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    #[serde(flatten)]
    pub command: CommandConfig,
    pub budget: u64,
    pub format: Format,
    pub output: Option<String>,
    /// Worker threads; 0 means the rayon default. Not part of reports.
    #[serde(skip)]
    pub threads: usize,
}

impl RunConfig {
    pub fn new(command: CommandConfig) -> Self {
        RunConfig {
            command,
            budget: DEFAULT_BUDGET,
            format: Format::Json,
            output: None,
            threads: 0,
        }
    }
}

/// `--budget` if given, else the environment override, else the default.
pub fn resolve_budget(flag: Option<u64>) -> Result<u64, String> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{BUDGET_ENV}={v:?} is not an integer")),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}
