//! The `check` command: run a manifest of axiom checks and compare each
//! outcome against its declared expectation.

use anyhow::{anyhow, Context, Result};
use npl_operads::axioms::{AxiomName, Bounds, CheckReport};
use npl_operads::registry::{run_named_check, Composition, NamedCheck};
use serde::Deserialize;
use serde_json::json;
use std::str::FromStr;

#[derive(Debug, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct ManifestDefaults {
    pub max_total: Option<usize>,
    pub max_part: Option<usize>,
    pub max_instances: Option<usize>,
    pub naturality_samples: Option<usize>,
    pub seed: Option<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestCheck {
    pub axiom: String,
    pub structure: String,
    #[serde(default)]
    pub composition: Option<String>,
    #[serde(default)]
    pub product: Option<String>,
    #[serde(default)]
    pub dim: Option<usize>,
    #[serde(default)]
    pub z_single_block: Option<bool>,
    /// "pass" or "fail".
    pub expect: String,
    #[serde(default)]
    pub max_total: Option<usize>,
    #[serde(default)]
    pub max_part: Option<usize>,
    #[serde(default)]
    pub mu_max_outer: Option<usize>,
    #[serde(default)]
    pub mu_max_inner: Option<usize>,
    #[serde(default)]
    pub mu_max_blocks: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    #[serde(default)]
    pub defaults: ManifestDefaults,
    #[serde(default, rename = "check")]
    pub checks: Vec<ManifestCheck>,
}

pub fn load_manifest(text: &str) -> Result<Manifest> {
    toml::from_str(text).context("manifest does not parse")
}

pub struct CheckOutcome {
    pub report: CheckReport,
    pub expected_pass: bool,
}

impl CheckOutcome {
    pub fn matches(&self) -> bool {
        self.report.passed() == self.expected_pass
    }
}

fn to_named(check: &ManifestCheck, defaults: &ManifestDefaults, cap: Option<usize>) -> Result<NamedCheck> {
    let axiom = AxiomName::from_str(&check.axiom)?;
    let mut named = NamedCheck::new(axiom, check.structure.clone());
    if let Some(c) = &check.composition {
        named.composition = Composition::from_str(c)?;
    }
    named.product = check.product.clone();
    named.dim = check.dim.unwrap_or(1);
    named.z_single_block = check.z_single_block.unwrap_or(false);
    let mut bounds = Bounds::default();
    if let Some(v) = defaults.max_total {
        bounds.max_total = v;
    }
    if let Some(v) = defaults.max_part {
        bounds.max_part = Some(v);
    }
    if let Some(v) = defaults.max_instances {
        bounds.cap = v;
    }
    if let Some(v) = defaults.naturality_samples {
        bounds.naturality_samples = v;
    }
    if let Some(v) = defaults.seed {
        bounds.seed = v;
    }
    if let Some(v) = check.max_total {
        bounds.max_total = v;
    }
    if let Some(v) = check.max_part {
        bounds.max_part = Some(v);
    }
    if let Some(v) = check.mu_max_outer {
        bounds.mu_max_outer = v;
    }
    if let Some(v) = check.mu_max_inner {
        bounds.mu_max_inner = v;
    }
    if let Some(v) = check.mu_max_blocks {
        bounds.mu_max_blocks = v;
    }
    if let Some(v) = cap {
        bounds.cap = v;
    }
    named.bounds = bounds;
    Ok(named)
}

/// Runs every check in the manifest; returns outcomes in manifest order.
pub fn run_manifest(manifest: &Manifest, cap: Option<usize>) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::with_capacity(manifest.checks.len());
    for check in &manifest.checks {
        let expected_pass = match check.expect.as_str() {
            "pass" => true,
            "fail" => false,
            other => return Err(anyhow!("expect must be \"pass\" or \"fail\", found {other:?}")),
        };
        let named = to_named(check, &manifest.defaults, cap)?;
        let report = run_named_check(&named)?;
        out.push(CheckOutcome { report, expected_pass });
    }
    Ok(out)
}

pub fn render_text(outcomes: &[CheckOutcome]) -> (String, bool) {
    let mut all_match = true;
    let mut lines = Vec::new();
    for o in outcomes {
        let verdict = if o.matches() {
            "[ok]      "
        } else {
            all_match = false;
            "[MISMATCH]"
        };
        let expected = if o.expected_pass { "pass" } else { "fail" };
        lines.push(format!("{verdict} expected {expected}: {}", o.report.summary_line()));
    }
    let matched = outcomes.iter().filter(|o| o.matches()).count();
    lines.push(format!("{matched}/{} checks matched expectations", outcomes.len()));
    (lines.join("\n"), all_match)
}

pub fn render_json(outcomes: &[CheckOutcome]) -> (String, bool) {
    let mut all_match = true;
    let records: Vec<serde_json::Value> = outcomes
        .iter()
        .map(|o| {
            if !o.matches() {
                all_match = false;
            }
            let minimal = o.report.minimal_counterexample().ok().map(|f| {
                json!({
                    "total_size": f.total_size,
                    "instance": f.description,
                    "lhs": f.lhs,
                    "rhs": f.rhs,
                    "difference": f.difference,
                })
            });
            json!({
                "axiom": o.report.axiom.to_string(),
                "target": o.report.target,
                "instances": o.report.instances,
                "truncated": o.report.truncated,
                "passed": o.report.passed(),
                "expected_pass": o.expected_pass,
                "matches_expectation": o.matches(),
                "failures": o.report.failures.len(),
                "minimal_counterexample": minimal,
            })
        })
        .collect();
    let doc = json!({
        "checks": records,
        "all_match": all_match,
    });
    (serde_json::to_string_pretty(&doc).expect("serializable"), all_match)
}
