//! Reports, their JSON shape and their text rendering.

use std::fmt::Write as _;

use fsz_core::fsz::{FszVerdict, FszWitness};
use fsz_core::notation::format_perm;
use fsz_core::PermGroup;
use serde::Serialize;

pub const EXIT_FSZ: u8 = 0;
pub const EXIT_NOT_FSZ: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_INCONCLUSIVE: u8 = 3;
pub const EXIT_BUDGET: u8 = 4;

#[derive(Serialize, Debug)]
pub struct GroupSummary {
    pub source: String,
    pub degree: usize,
    /// Decimal string, since orders can exceed 64 bits.
    pub order: String,
}

impl GroupSummary {
    pub fn new(source: &str, group: &PermGroup) -> Self {
        GroupSummary {
            source: source.to_string(),
            degree: group.degree(),
            order: group.order().to_string(),
        }
    }
}

#[derive(Serialize, Debug)]
pub struct SylowOrder {
    pub p: u64,
    pub order: String,
}

#[derive(Serialize, Debug)]
pub struct InfoReport {
    pub command: &'static str,
    pub group: GroupSummary,
    pub exponent: u64,
    pub center_order: String,
    pub classes: usize,
    pub rational_classes: usize,
    pub sylow: Vec<SylowOrder>,
}

#[derive(Serialize, Debug, Clone)]
pub struct WitnessJson {
    pub g: String,
    pub u: String,
    pub m: u64,
    pub n: u64,
    pub count_g: u64,
    pub count_gn: u64,
}

impl From<&FszWitness> for WitnessJson {
    fn from(w: &FszWitness) -> Self {
        WitnessJson {
            g: format_perm(&w.g),
            u: format_perm(&w.u),
            m: w.m,
            n: w.n,
            count_g: w.count_g,
            count_gn: w.count_gn,
        }
    }
}

#[derive(Serialize, Debug)]
pub struct TestReport {
    pub command: &'static str,
    pub group: GroupSummary,
    pub mode: &'static str,
    pub verdict: &'static str,
    pub provenance: String,
    pub m_filter: Option<Vec<u64>>,
    pub tested_m: Vec<u64>,
    pub comparisons: u64,
    pub witness: Option<WitnessJson>,
}

impl TestReport {
    pub fn new(
        group: GroupSummary,
        mode: &'static str,
        m_filter: Option<Vec<u64>>,
        v: &FszVerdict,
    ) -> Self {
        TestReport {
            command: "test",
            group,
            mode,
            verdict: v.status.label(),
            provenance: v.provenance.to_string(),
            m_filter,
            tested_m: v.tested_m.iter().copied().collect(),
            comparisons: v.comparisons,
            witness: v.witness().map(WitnessJson::from),
        }
    }

    pub fn exit_code(&self) -> u8 {
        verdict_exit(self.verdict)
    }
}

#[derive(Serialize, Debug)]
pub struct CountsReport {
    pub command: &'static str,
    pub group: GroupSummary,
    pub g: String,
    pub u: String,
    pub m: u64,
    pub n: u64,
    pub count_g: u64,
    pub count_gn: u64,
}

#[derive(Serialize, Debug)]
pub struct WitnessReport {
    pub command: &'static str,
    pub group: GroupSummary,
    pub mode: &'static str,
    pub m: Option<Vec<u64>>,
    pub verdict: &'static str,
    pub witness: Option<WitnessJson>,
}

impl WitnessReport {
    pub fn exit_code(&self) -> u8 {
        verdict_exit(self.verdict)
    }
}

#[derive(Serialize, Debug)]
pub struct ErrorReport {
    pub command: &'static str,
    pub error: ErrorBody,
}

#[derive(Serialize, Debug)]
pub struct ErrorBody {
    pub kind: &'static str,
    pub message: String,
    pub exit_code: u8,
}

pub fn verdict_exit(label: &str) -> u8 {
    match label {
        "FSZ" => EXIT_FSZ,
        "NOT_FSZ" => EXIT_NOT_FSZ,
        _ => EXIT_INCONCLUSIVE,
    }
}

fn push_witness(out: &mut String, w: &WitnessJson) {
    let _ = writeln!(out, "g           {}", w.g);
    let _ = writeln!(out, "u           {}", w.u);
    let _ = writeln!(out, "m           {}", w.m);
    let _ = writeln!(out, "n           {}", w.n);
    let _ = writeln!(out, "counts      ({}, {})", w.count_g, w.count_gn);
}

fn push_group(out: &mut String, g: &GroupSummary) {
    let _ = writeln!(out, "group       {}", g.source);
    let _ = writeln!(out, "degree      {}", g.degree);
    let _ = writeln!(out, "order       {}", g.order);
}

fn join(values: &[u64]) -> String {
    if values.is_empty() {
        return "none".to_string();
    }
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub trait Render {
    fn text(&self) -> String;
}

impl Render for InfoReport {
    fn text(&self) -> String {
        let mut out = String::new();
        push_group(&mut out, &self.group);
        let _ = writeln!(out, "exponent    {}", self.exponent);
        let _ = writeln!(out, "centre      {}", self.center_order);
        let _ = writeln!(out, "classes     {}", self.classes);
        let _ = writeln!(out, "rational    {}", self.rational_classes);
        for s in &self.sylow {
            let _ = writeln!(out, "sylow {:<5} {}", s.p, s.order);
        }
        out
    }
}

impl Render for TestReport {
    fn text(&self) -> String {
        let mut out = String::new();
        push_group(&mut out, &self.group);
        let _ = writeln!(out, "verdict     {}", self.verdict);
        let _ = writeln!(out, "decided by  {}", self.provenance);
        if let Some(f) = &self.m_filter {
            let _ = writeln!(out, "m filter    {}", join(f));
        }
        let _ = writeln!(out, "tested m    {}", join(&self.tested_m));
        let _ = writeln!(out, "comparisons {}", self.comparisons);
        if let Some(w) = &self.witness {
            push_witness(&mut out, w);
        }
        out
    }
}

impl Render for CountsReport {
    fn text(&self) -> String {
        format!("({}, {})\n", self.count_g, self.count_gn)
    }
}

impl Render for WitnessReport {
    fn text(&self) -> String {
        match &self.witness {
            Some(w) => {
                let mut out = format!("({}, {})\n", w.u, w.n);
                push_witness(&mut out, w);
                out
            }
            None => "none\n".to_string(),
        }
    }
}
