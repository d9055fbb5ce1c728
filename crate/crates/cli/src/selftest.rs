//! Runs the library's checks on a fixture set and compares them with the
//! recorded expectations.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use tropic_core::degeneration::{certify, verify_certificate};
use tropic_core::{defspace, fixtures, wellspaced, TropicalCurve};

const BUILTIN_EXPECTATIONS: &str = include_str!("../../../fixtures/expectations.json");

#[derive(Clone, Debug, Deserialize)]
struct Expectation {
    balanced: bool,
    genus: usize,
    excess: i64,
    #[serde(default)]
    well_spaced: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureResult {
    pub name: String,
    pub passed: bool,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SelftestReport {
    pub source: String,
    pub passed: bool,
    pub fixtures: Vec<FixtureResult>,
}

fn builtin_curve(name: &str) -> Option<TropicalCurve> {
    fixtures::all_curves()
        .into_iter()
        .chain(fixtures::extra_curves())
        .find(|(n, _)| *n == name)
        .map(|(_, c)| c)
}

fn check(name: &str, c: &TropicalCurve, want: &Expectation) -> Vec<String> {
    let mut failures = Vec::new();
    if let Err(e) = c.require_valid() {
        return vec![e.to_string()];
    }
    match c.is_balanced() {
        Ok(b) if b == want.balanced => {}
        Ok(b) => failures.push(format!("balanced: got {b}, expected {}", want.balanced)),
        Err(e) => failures.push(e.to_string()),
    }
    if c.genus() != want.genus {
        failures.push(format!("genus: got {}, expected {}", c.genus(), want.genus));
    }
    match defspace::is_superabundant(c) {
        Ok(s) if s.excess == want.excess => {}
        Ok(s) => failures.push(format!("excess: got {}, expected {}", s.excess, want.excess)),
        Err(e) => failures.push(e.to_string()),
    }
    if let Some(ws) = want.well_spaced {
        match wellspaced::well_spaced(c) {
            Ok(w) if w.well_spaced == ws => {}
            Ok(w) => failures.push(format!("well_spaced: got {}, expected {ws}", w.well_spaced)),
            Err(e) => failures.push(e.to_string()),
        }
    }
    if want.balanced {
        if let Some(fan) = fixtures::compatible_fan(name) {
            match certify(c, &fan) {
                Ok(cert) => {
                    let r = verify_certificate(&cert);
                    failures.extend(r.violations.into_iter().map(|v| format!("certificate: {v}")));
                }
                Err(e) => failures.push(format!("certify: {e}")),
            }
        }
    }
    failures
}

/// Reads `<dir>/expectations.json` and the curves it names, or uses the
/// built-in fixtures when `dir` is `None`.
pub fn run(dir: Option<&Path>) -> Result<SelftestReport, String> {
    let expectations_text = match dir {
        Some(d) => {
            let p = d.join("expectations.json");
            std::fs::read_to_string(&p).map_err(|e| format!("{}: {e}", p.display()))?
        }
        None => BUILTIN_EXPECTATIONS.to_string(),
    };
    let expectations: BTreeMap<String, Expectation> =
        serde_json::from_str(&expectations_text).map_err(|e| format!("expectations: {e}"))?;

    let mut results = Vec::new();
    for (name, want) in &expectations {
        let curve = match dir {
            Some(d) => {
                let p = d.join(format!("{name}.json"));
                let text = std::fs::read_to_string(&p).map_err(|e| format!("{}: {e}", p.display()))?;
                serde_json::from_str(&text).map_err(|e| format!("{}: {e}", p.display()))?
            }
            None => builtin_curve(name).ok_or_else(|| format!("no built-in fixture {name:?}"))?,
        };
        let failures = check(name, &curve, want);
        results.push(FixtureResult {
            name: name.clone(),
            passed: failures.is_empty(),
            failures,
        });
    }
    Ok(SelftestReport {
        source: dir.map_or_else(|| "built-in".to_string(), |d| d.display().to_string()),
        passed: results.iter().all(|r| r.passed),
        fixtures: results,
    })
}
