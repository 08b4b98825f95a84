use std::collections::BTreeMap;
use std::hash::Hasher;
use std::io::Write;

use fnv::FnvHasher;
use serde::Serialize;

use crate::error::Result;
use crate::harness::config::{CampaignConfig, Check};
use crate::incidence::MomentProfile;
use crate::pinned::{PinnedExtremes, PinnedWitness};
use crate::plane::{Direction, Point, PointSet};
use crate::sumsets::{GlibichukReport, ScalarSet};

/// 64-bit FNV-1a over the set's points in canonical order, each point as
/// its `x` then `y` code in 4-byte little-endian form.
pub fn set_digest(e: &PointSet) -> String {
    let mut h = FnvHasher::default();
    for p in e.iter() {
        h.write(&p.x.code().to_le_bytes());
        h.write(&p.y.code().to_le_bytes());
    }
    format!("{:016x}", h.finish())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
}

impl Outcome {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CheckDetail {
    Identity {
        lhs: u64,
        rhs: u64,
        first_moment: u64,
        first_moment_expected: u64,
        profile: MomentProfile,
    },
    Pinned {
        witness: PinnedWitness,
        threshold: usize,
        cauchy_schwarz: bool,
        below_average: bool,
    },
    /// Brute force over all pairs; not backed by the theorem.
    PinnedExhaustive {
        extremes: PinnedExtremes,
        threshold: usize,
    },
    Imp {
        missing: Vec<Direction>,
    },
    Cover {
        x: Point,
        y: Point,
        covered: usize,
    },
    /// Brute force over all pairs; not backed by the theorem.
    CoverExhaustive {
        best_pair: Option<(Point, Point)>,
        best_cover: usize,
    },
    Sharpness {
        p: u64,
        q: u64,
        size: usize,
        pairs: u64,
        min: usize,
        max: usize,
    },
    Glibichuk {
        a: ScalarSet,
        #[serde(flatten)]
        report: GlibichukReport,
    },
    Lines {
        lines: u64,
        distinct: u64,
        points_on_q_plus_one: bool,
        pairs_on_one: bool,
    },
    Error {
        message: String,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub check: Check,
    pub outcome: Outcome,
    /// Whether the hypotheses of a proved statement hold, so a failure is a defect.
    pub theorem_backed: bool,
    pub detail: CheckDetail,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<Point>>,
}

impl CheckRecord {
    pub fn is_defect(&self) -> bool {
        self.theorem_backed && self.outcome == Outcome::Fail
    }

    /// One number summarising the check, for CSV output.
    pub fn headline(&self) -> String {
        match &self.detail {
            CheckDetail::Identity { lhs, .. } => lhs.to_string(),
            CheckDetail::Pinned { witness, .. } => witness.dot_count.to_string(),
            CheckDetail::PinnedExhaustive { extremes, .. } => extremes.max.to_string(),
            CheckDetail::Imp { missing } => missing.len().to_string(),
            CheckDetail::Cover { covered, .. } => covered.to_string(),
            CheckDetail::CoverExhaustive { best_cover, .. } => best_cover.to_string(),
            CheckDetail::Sharpness { max, .. } => max.to_string(),
            CheckDetail::Glibichuk { a, .. } => a.len().to_string(),
            CheckDetail::Lines { distinct, .. } => distinct.to_string(),
            CheckDetail::Error { message } => message.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialRecord {
    pub field: String,
    pub trial: usize,
    pub size: usize,
    pub digest: String,
    pub checks: Vec<CheckRecord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SummaryRow {
    pub field: String,
    pub check: Check,
    pub passed: usize,
    pub failed: usize,
    /// `1.0` when every trial met the hypotheses of a proved statement; `null` for exploratory data.
    pub expected_pass_rate: Option<f64>,
    pub defects: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    #[serde(flatten)]
    pub config: CampaignConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fixed_set: Option<Vec<Point>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub config: ConfigEcho,
    pub trials: Vec<TrialRecord>,
    pub summary: Vec<SummaryRow>,
}

impl Report {
    pub fn new(config: &CampaignConfig, trials: Vec<TrialRecord>) -> Self {
        let mut rows: BTreeMap<(String, Check), SummaryRow> = BTreeMap::new();
        let mut field_order: Vec<String> = Vec::new();
        for t in &trials {
            if !field_order.contains(&t.field) {
                field_order.push(t.field.clone());
            }
            for c in &t.checks {
                let row = rows.entry((t.field.clone(), c.check)).or_insert_with(|| SummaryRow {
                    field: t.field.clone(),
                    check: c.check,
                    passed: 0,
                    failed: 0,
                    expected_pass_rate: Some(1.0),
                    defects: 0,
                });
                match c.outcome {
                    Outcome::Pass => row.passed += 1,
                    Outcome::Fail => row.failed += 1,
                }
                if !c.theorem_backed {
                    row.expected_pass_rate = None;
                }
                if c.is_defect() {
                    row.defects += 1;
                }
            }
        }
        let mut summary = Vec::with_capacity(rows.len());
        for f in &field_order {
            for &c in &config.checks {
                summary.extend(rows.remove(&(f.clone(), c)));
            }
        }
        Report {
            config: ConfigEcho {
                config: config.clone(),
                fixed_set: config.fixed_set.as_ref().map(|e| e.points().to_vec()),
            },
            trials,
            summary,
        }
    }

    pub fn defects(&self) -> usize {
        self.summary.iter().map(|r| r.defects).sum()
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    /// One row per (trial, check).
    pub fn write_csv(&self, w: impl Write) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record([
            "field",
            "trial",
            "size",
            "digest",
            "check",
            "outcome",
            "theorem_backed",
            "value",
        ])?;
        for t in &self.trials {
            for c in &t.checks {
                out.write_record([
                    t.field.as_str(),
                    &t.trial.to_string(),
                    &t.size.to_string(),
                    &t.digest,
                    c.check.name(),
                    match c.outcome {
                        Outcome::Pass => "pass",
                        Outcome::Fail => "fail",
                    },
                    if c.theorem_backed { "true" } else { "false" },
                    &c.headline(),
                ])?;
            }
        }
        out.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(String::from_utf8(buf).expect("csv output is utf-8"))
    }
}
