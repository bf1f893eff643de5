//! Serializable records and table rendering.

use serde::{Deserialize, Serialize};

use crate::bruhat::CosetContext;
use crate::classify::{Classification, ExtremalEntry, Family};
use crate::criteria::{PairVerdict, RichardsonPair, Semistability};
use crate::error::{Error, Result};
use crate::rootsys::{LieType, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryRecord {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub n: usize,
    pub r: usize,
    pub family: Family,
    pub tuple: Vec<usize>,
    pub window: Vec<i32>,
    pub weight_root_basis: Weight,
}

impl EntryRecord {
    pub fn new(ctx: &CosetContext, e: &ExtremalEntry) -> Self {
        EntryRecord {
            lie_type: ctx.rs.lie_type(),
            n: ctx.n(),
            r: ctx.r,
            family: e.label.family,
            tuple: e.label.tuple.entries.clone(),
            window: e.element.window().to_vec(),
            weight_root_basis: e.weight.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowRecord {
    pub label: String,
    pub v: EntryRecord,
    pub w: EntryRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub n: usize,
    pub r: usize,
    pub omega: Weight,
    pub rows: Vec<RowRecord>,
}

impl ClassifyReport {
    pub fn new(cls: &Classification) -> Self {
        let ctx = &cls.ctx;
        ClassifyReport {
            lie_type: ctx.rs.lie_type(),
            n: ctx.n(),
            r: ctx.r,
            omega: ctx.omega(),
            rows: cls
                .pairs
                .iter()
                .map(|p| RowRecord {
                    label: p.v.label.to_string(),
                    v: EntryRecord::new(ctx, &p.v),
                    w: EntryRecord::new(ctx, &p.w),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }

    pub fn to_markdown(&self) -> String {
        let mut s = format!(
            "{}{}, ω_{} = {}\n\n| label | v | v(ω_{r}) | w(ω_{r}) | w |\n|---|---|---|---|---|\n",
            self.lie_type,
            self.n,
            self.r,
            self.omega,
            r = self.r
        );
        for row in &self.rows {
            s.push_str(&format!(
                "| {} | {} | {} | {} | {} |\n",
                row.label,
                fmt_window(&row.v.window),
                row.v.weight_root_basis,
                row.w.weight_root_basis,
                fmt_window(&row.w.window)
            ));
        }
        s
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut wtr = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Parse(e.to_string());
        wtr.write_record(["label", "v", "v_weight", "w_weight", "w"])
            .map_err(io)?;
        for row in &self.rows {
            wtr.write_record([
                row.label.clone(),
                fmt_window(&row.v.window),
                row.v.weight_root_basis.to_string(),
                row.w.weight_root_basis.to_string(),
                fmt_window(&row.w.window),
            ])
            .map_err(io)?;
        }
        let bytes = wtr.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

pub fn fmt_window(w: &[i32]) -> String {
    let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub n: usize,
    pub r: usize,
    pub v: Vec<i32>,
    pub w: Vec<i32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub pair: PairRecord,
    pub richardson_nonempty: bool,
    pub semistable: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<crate::criteria::NoReason>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<Vec<Vec<i32>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate_weights: Option<Vec<Weight>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub extremal_pair: Option<(String, String)>,
    pub monotone_extension: bool,
}

impl VerdictRecord {
    pub fn new(pair: &RichardsonPair, verdict: &PairVerdict) -> Self {
        let (semistable, reason, certificate, certificate_weights) = match &verdict.semistable {
            Semistability::Yes(c) => (
                "yes".to_string(),
                None,
                Some(c.chain.iter().map(|u| u.window().to_vec()).collect()),
                Some(c.weights.clone()),
            ),
            Semistability::No(r) => ("no".to_string(), Some(*r), None, None),
        };
        VerdictRecord {
            pair: PairRecord {
                lie_type: pair.ctx.rs.lie_type(),
                n: pair.ctx.n(),
                r: pair.ctx.r,
                v: pair.v.window().to_vec(),
                w: pair.w.window().to_vec(),
            },
            richardson_nonempty: verdict.richardson_nonempty,
            semistable,
            reason,
            certificate,
            certificate_weights,
            extremal_pair: verdict
                .witness
                .as_ref()
                .map(|(a, b)| (a.to_string(), b.to_string())),
            monotone_extension: verdict.monotone_extension,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }
}
