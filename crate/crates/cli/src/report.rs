//! The report document and its text rendering.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::problem::ProblemFile;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    /// SHA-256 of the raw input bytes
    pub sha256: String,
    /// the problem as parsed, after command-line overrides
    pub problem: ProblemFile,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OverlapDim {
    /// 1-based
    pub pair: [usize; 2],
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringSection {
    pub ideals: Vec<String>,
    pub algebra_dim: usize,
    pub patch_dims: Vec<usize>,
    pub overlap_dims: Vec<OverlapDim>,
    pub is_covering: bool,
    pub intersection_dim: usize,
    pub exact_at_a: bool,
    pub exact_at_b: bool,
    pub image_pi_dim: usize,
    pub kernel_tau_dim: usize,
    pub tau_rank: usize,
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CechSection {
    pub functor: String,
    pub n: usize,
    /// `dim S^0, ..., dim S^N`
    pub dims: Vec<usize>,
    /// `Ȟ^0, Ȟ^1, ...`
    pub cohomology: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmitsurSection {
    pub n_max: usize,
    /// `dim C^0, ..., dim C^{n_max}`
    pub dims: Vec<usize>,
    /// `[dim ker π, H^0, ..., H^{n_max-1}]` of the augmented complex
    pub homology_augmented: Vec<usize>,
    pub homology: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySection {
    pub passed: bool,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSection {
    pub n: usize,
    /// 1-based tuples of length at least two
    pub overlaps: Vec<Vec<usize>>,
    pub nerve: Vec<usize>,
    pub cech: Vec<usize>,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub input: InputEcho,
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub covering: Option<CoveringSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cech: Option<CechSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub amitsur: Option<AmitsurSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verify: Option<VerifySection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSection>,
    pub timing: Timing,
}

fn list(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        let _ = writeln!(w, "{} {} {}", self.tool, self.version, self.command);
        let _ = writeln!(w, "  input sha256       {}", self.input.sha256);
        let _ = writeln!(w, "  field              {}", self.field);
        if let Some(c) = &self.covering {
            let _ = writeln!(w, "covering");
            let _ = writeln!(w, "  ideals             {}", c.ideals.join(", "));
            let _ = writeln!(w, "  dim A              {}", c.algebra_dim);
            let _ = writeln!(w, "  dim A_i            {}", list(&c.patch_dims));
            for o in &c.overlap_dims {
                let key = format!("dim A_{}{}", o.pair[0], o.pair[1]);
                let _ = writeln!(w, "  {key:<18} {}", o.dim);
            }
            let _ = writeln!(w, "  is covering        {}", c.is_covering);
            let _ = writeln!(w, "  dim ∩ I_i          {}", c.intersection_dim);
            let _ = writeln!(w, "  exact at A         {}", c.exact_at_a);
            let _ = writeln!(w, "  exact at ⊕A_i      {}", c.exact_at_b);
            let _ = writeln!(w, "  dim im π           {}", c.image_pi_dim);
            let _ = writeln!(w, "  dim ker τ          {}", c.kernel_tau_dim);
            let _ = writeln!(w, "  rank τ             {}", c.tau_rank);
            let _ = writeln!(w, "  complete           {}", c.complete);
        }
        if let Some(c) = &self.cech {
            let _ = writeln!(w, "cech ({}, N = {})", c.functor, c.n);
            let _ = writeln!(w, "  dim S^n            {}", list(&c.dims));
            let _ = writeln!(w, "  cohomology         {}", list(&c.cohomology));
        }
        if let Some(a) = &self.amitsur {
            let _ = writeln!(w, "amitsur (n_max = {})", a.n_max);
            let _ = writeln!(w, "  dim C^n            {}", list(&a.dims));
            let _ = writeln!(w, "  augmented          {}", list(&a.homology_augmented));
            let _ = writeln!(w, "  unaugmented        {}", list(&a.homology));
        }
        if let Some(o) = &self.oracle {
            let _ = writeln!(w, "oracle (N = {})", o.n);
            let _ = writeln!(w, "  nerve              {}", list(&o.nerve));
            let _ = writeln!(w, "  cech               {}", list(&o.cech));
            let _ = writeln!(w, "  agree              {}", o.agree);
        }
        if let Some(v) = &self.verify {
            let _ = writeln!(w, "verify");
            for c in &v.checks {
                let status = match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Skipped => "skip",
                };
                let _ = writeln!(w, "  {:<18} {status}  {}", c.name, c.detail);
            }
            let _ = writeln!(w, "  passed             {}", v.passed);
        }
        let _ = writeln!(w, "elapsed {} ms", self.timing.elapsed_ms);
        out
    }
}
