use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ffield::{parse_designation, FieldSpec};
use crate::plane::PointSet;

/// A field designation `p,k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldId {
    pub p: u64,
    pub k: u32,
}

impl FieldId {
    pub fn build(self) -> Result<FieldSpec> {
        FieldSpec::new(self.p, self.k)
    }
}

impl fmt::Display for FieldId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.p, self.k)
    }
}

impl FromStr for FieldId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (p, k) = parse_designation(s)?;
        Ok(FieldId { p, k })
    }
}

impl From<&FieldSpec> for FieldId {
    fn from(spec: &FieldSpec) -> Self {
        FieldId {
            p: spec.p() as u64,
            k: spec.k(),
        }
    }
}

macro_rules! string_serde {
    ($ty:ty) => {
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

string_serde!(FieldId);
string_serde!(SetSize);

/// Set size as a function of `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetSize {
    QPlusOne,
    Q,
    TwoQ,
    Exact(u64),
}

impl SetSize {
    pub fn resolve(self, q: u64) -> u64 {
        match self {
            SetSize::QPlusOne => q + 1,
            SetSize::Q => q,
            SetSize::TwoQ => 2 * q,
            SetSize::Exact(n) => n,
        }
    }
}

impl fmt::Display for SetSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetSize::QPlusOne => f.write_str("q+1"),
            SetSize::Q => f.write_str("q"),
            SetSize::TwoQ => f.write_str("2q"),
            SetSize::Exact(n) => write!(f, "{n}"),
        }
    }
}

impl FromStr for SetSize {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match compact.as_str() {
            "q+1" => Ok(SetSize::QPlusOne),
            "q" => Ok(SetSize::Q),
            "2q" => Ok(SetSize::TwoQ),
            n => n
                .parse()
                .map(SetSize::Exact)
                .map_err(|_| Error::InvalidConfig(format!("unsupported set size {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Identity,
    Theorem,
    Imp,
    Corollary,
    Sharpness,
    Glibichuk,
    Lines,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Identity,
        Check::Theorem,
        Check::Imp,
        Check::Corollary,
        Check::Sharpness,
        Check::Glibichuk,
        Check::Lines,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Identity => "identity",
            Check::Theorem => "theorem",
            Check::Imp => "imp",
            Check::Corollary => "corollary",
            Check::Sharpness => "sharpness",
            Check::Glibichuk => "glibichuk",
            Check::Lines => "lines",
        }
    }

    /// Parses a comma-separated list such as `identity,theorem`.
    pub fn parse_list(s: &str) -> Result<BTreeSet<Check>> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::InvalidConfig(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub fields: Vec<FieldId>,
    pub trials: usize,
    pub set_size: SetSize,
    pub checks: BTreeSet<Check>,
    pub seed: u64,
    /// Use this set for every trial instead of sampling; its field replaces `fields`.
    #[serde(skip)]
    pub fixed_set: Option<PointSet>,
}

impl CampaignConfig {
    pub fn new(fields: impl IntoIterator<Item = FieldId>, checks: impl IntoIterator<Item = Check>) -> Self {
        CampaignConfig {
            fields: fields.into_iter().collect(),
            trials: 100,
            set_size: SetSize::QPlusOne,
            checks: checks.into_iter().collect(),
            seed: 0,
            fixed_set: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.fields.is_empty() && self.fixed_set.is_none() {
            return Err(Error::InvalidConfig("no fields".into()));
        }
        if self.checks.is_empty() {
            return Err(Error::InvalidConfig("no checks".into()));
        }
        if self.trials == 0 {
            return Err(Error::InvalidConfig("trials must be at least 1".into()));
        }
        Ok(())
    }
}
