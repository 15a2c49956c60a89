//! Machine-readable verification reports: one schema for every command,
//! serialized as JSON, CSV or text. Reports are deterministic: canonical
//! member order everywhere, integer counts, no timestamps.

use crate::clustercat::ClusterCat;
use crate::quiver::Quiver;
use crate::quotient::{CheckOutcome, GlobalDim};
use crate::tiltlab::{BijectionReport, HypothesisLedger, TheoremReport};
use serde::Serialize;
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct QuiverInfo {
    pub vertices: usize,
    pub arrows: Vec<String>,
    pub type_a: bool,
}

impl QuiverInfo {
    pub fn of(q: &Quiver) -> QuiverInfo {
        QuiverInfo {
            vertices: q.vertex_count(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| format!("{}: {} -> {}", a.label, a.source, a.target))
                .collect(),
            type_a: q.is_type_a(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Hypotheses {
    pub u_members: Vec<String>,
    pub u_is_cluster_tilting: bool,
    pub global_dimension: String,
    pub notes: Vec<String>,
}

impl Hypotheses {
    pub fn of(ledger: &HypothesisLedger) -> Hypotheses {
        Hypotheses {
            u_members: ledger.u_members.clone(),
            u_is_cluster_tilting: ledger.u_is_cluster_tilting,
            global_dimension: ledger
                .global_dimension
                .map(|g| g.to_string())
                .unwrap_or_else(|| "not computed".into()),
            notes: ledger.notes.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceRow {
    pub subject: String,
    pub outcome: String,
    pub witness: String,
    pub detail: String,
}

/// The overall verdict of a run, also determining the exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
    Ok,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass | Verdict::Ok => 0,
            Verdict::Fail => 1,
            Verdict::Skipped => 2,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub quiver: QuiverInfo,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypotheses: Option<Hypotheses>,
    pub counts: BTreeMap<String, u64>,
    pub instances: Vec<InstanceRow>,
    pub overall: Verdict,
}

impl Report {
    pub fn new(command: &str, q: &Quiver) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            quiver: QuiverInfo::of(q),
            hypotheses: None,
            counts: BTreeMap::new(),
            instances: Vec::new(),
            overall: Verdict::Ok,
        }
    }

    /// Verdict from the instance outcomes: any fail wins, else skipped-only,
    /// else pass.
    pub fn settle(&mut self) {
        let mut any_fail = false;
        let mut any_pass = false;
        let mut any_skip = false;
        for i in &self.instances {
            match i.outcome.as_str() {
                "fail" => any_fail = true,
                "pass" => any_pass = true,
                "skipped" => any_skip = true,
                _ => {}
            }
        }
        self.overall = if any_fail {
            Verdict::Fail
        } else if any_skip && !any_pass {
            Verdict::Skipped
        } else if any_pass {
            Verdict::Pass
        } else {
            Verdict::Ok
        };
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("subject,outcome,witness,detail\n");
        for i in &self.instances {
            out.push_str(&format!(
                "{},{},{},{}\n",
                csv_field(&i.subject),
                csv_field(&i.outcome),
                csv_field(&i.witness),
                csv_field(&i.detail)
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# {} (schema {})\n", self.command, self.schema_version));
        out.push_str(&format!(
            "quiver: {} vertices, arrows: {}\n",
            self.quiver.vertices,
            self.quiver.arrows.join(", ")
        ));
        if let Some(h) = &self.hypotheses {
            out.push_str(&format!(
                "U = {{{}}} (cluster tilting: {}), global dimension: {}\n",
                h.u_members.join(", "),
                h.u_is_cluster_tilting,
                h.global_dimension
            ));
            for n in &h.notes {
                out.push_str(&format!("note: {}\n", n));
            }
        }
        for (k, v) in &self.counts {
            out.push_str(&format!("{}: {}\n", k, v));
        }
        for i in &self.instances {
            out.push_str(&format!("[{}] {}", i.outcome, i.subject));
            if !i.witness.is_empty() {
                out.push_str(&format!(" -- {}", i.witness));
            }
            if !i.detail.is_empty() {
                out.push_str(&format!(" ({})", i.detail));
            }
            out.push('\n');
        }
        out.push_str(&format!("overall: {:?}\n", self.overall));
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn outcome_row(subject: String, outcome: &CheckOutcome, detail: String) -> InstanceRow {
    let (o, w) = match outcome {
        CheckOutcome::Pass => ("pass".to_string(), String::new()),
        CheckOutcome::Fail(w) => ("fail".to_string(), w.clone()),
        CheckOutcome::Skipped(w) => ("skipped".to_string(), w.clone()),
    };
    InstanceRow { subject, outcome: o, witness: w, detail }
}

/// Report from a theorem verification.
pub fn theorem_report(command: &str, cat: &ClusterCat, tr: &TheoremReport) -> Report {
    let mut r = Report::new(command, cat.quiver());
    r.hypotheses = Some(Hypotheses::of(&tr.hypotheses));
    let (pass, fail, skipped) = tr.counts();
    r.counts.insert("pass".into(), pass as u64);
    r.counts.insert("fail".into(), fail as u64);
    r.counts.insert("skipped".into(), skipped as u64);
    r.counts.insert("instances".into(), tr.instances.len() as u64);
    for i in &tr.instances {
        r.instances.push(outcome_row(
            format!("{{{}}}", i.subject.join(", ")),
            &i.outcome,
            i.detail.clone(),
        ));
    }
    r.settle();
    r
}

/// Report from a bijection verification.
pub fn bijection_report(cat: &ClusterCat, br: &BijectionReport) -> Report {
    let mut r = Report::new("bijection", cat.quiver());
    r.hypotheses = Some(Hypotheses::of(&br.hypotheses));
    r.counts.insert("ct_count".into(), br.cluster_tilting.len() as u64);
    r.counts.insert("st_count".into(), br.support_tilting.len() as u64);
    r.counts
        .insert("round_trip_ok".into(), u64::from(br.round_trip_ok));
    for (i, v) in br.cluster_tilting.iter().enumerate() {
        let outcome = match br.pi_map[i] {
            Some(j) if br.lambda_map[j] == Some(i) => CheckOutcome::Pass,
            Some(_) => CheckOutcome::Fail("round trip is not the identity".into()),
            None => CheckOutcome::Fail("projection is not support tilting".into()),
        };
        let target = br.pi_map[i]
            .map(|j| format!("{{{}}}", br.support_tilting[j].ids(cat).join(", ")))
            .unwrap_or_else(|| "-".into());
        r.instances.push(outcome_row(
            format!("{{{}}}", v.ids(cat).join(", ")),
            &outcome,
            format!("pi -> {}", target),
        ));
    }
    r.settle();
    if !br.round_trip_ok {
        r.overall = Verdict::Fail;
    }
    r
}

/// Report for a global-dimension query.
pub fn gldim_report(cat: &ClusterCat, ledger: &HypothesisLedger, value: GlobalDim) -> Report {
    let mut r = Report::new("gldim", cat.quiver());
    r.hypotheses = Some(Hypotheses::of(ledger));
    r.instances.push(InstanceRow {
        subject: "global dimension".into(),
        outcome: "ok".into(),
        witness: String::new(),
        detail: value.to_string(),
    });
    r.overall = Verdict::Ok;
    r
}
