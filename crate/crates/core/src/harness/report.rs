use serde::Serialize;

use super::{Format, SuiteConfig};

#[derive(Debug, Clone, PartialEq)]
pub struct CaseResult {
    pub name: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// First error raised by a trial, if any.
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportConfig {
    pub trials: usize,
    pub tol: String,
    pub n_set: Vec<i32>,
    pub grid_h: String,
    pub format: Format,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub config: ReportConfig,
    pub cases: Vec<CaseResult>,
    pub pass: bool,
    pub elapsed: f64,
}

fn sci(x: f64) -> String {
    format!("{x:.6e}")
}

#[derive(Serialize)]
struct CaseJson<'a> {
    name: &'a str,
    max_residual: String,
    tolerance: String,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    suite: &'a str,
    seed: u64,
    config: &'a ReportConfig,
    cases: Vec<CaseJson<'a>>,
    pass: bool,
    elapsed: f64,
}

impl VerificationReport {
    pub fn new(cfg: &SuiteConfig, cases: Vec<CaseResult>, elapsed: f64) -> Self {
        VerificationReport {
            suite: cfg.suite.clone(),
            seed: cfg.seed,
            config: ReportConfig {
                trials: cfg.trials,
                tol: sci(cfg.tol),
                n_set: cfg.n_set.clone(),
                grid_h: sci(cfg.grid_h),
                format: cfg.format,
            },
            pass: cases.iter().all(|c| c.pass),
            cases,
            elapsed,
        }
    }

    pub fn case(&self, name: &str) -> Option<&CaseResult> {
        self.cases.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        let cases = self
            .cases
            .iter()
            .map(|c| CaseJson {
                name: &c.name,
                max_residual: sci(c.max_residual),
                tolerance: sci(c.tolerance),
                pass: c.pass,
                note: c.note.as_deref(),
            })
            .collect();
        let out = ReportJson {
            suite: &self.suite,
            seed: self.seed,
            config: &self.config,
            cases,
            pass: self.pass,
            elapsed: self.elapsed,
        };
        serde_json::to_string_pretty(&out).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let width = self.cases.iter().map(|c| c.name.chars().count()).max().unwrap_or(4).max(4);
        let mut s = format!("suite {}  seed {}  trials {}  tol {}\n", self.suite, self.seed, self.config.trials, self.config.tol);
        s += &format!("{:<width$}  {:>13}  {:>13}  result\n", "case", "max_residual", "tolerance");
        for c in &self.cases {
            let verdict = if c.pass { "pass" } else { "FAIL" };
            s += &format!("{:<width$}  {:>13}  {:>13}  {verdict}", c.name, sci(c.max_residual), sci(c.tolerance));
            if let Some(n) = &c.note {
                s += &format!("  ({n})");
            }
            s.push('\n');
        }
        let passed = self.cases.iter().filter(|c| c.pass).count();
        s += &format!(
            "{}: {passed}/{} cases passed in {:.2}s\n",
            if self.pass { "PASS" } else { "FAIL" },
            self.cases.len(),
            self.elapsed
        );
        s
    }
}

pub fn emit_report(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn case(pass: bool) -> CaseResult {
        CaseResult { name: "c".into(), max_residual: 1.5e-13, tolerance: 1e-12, pass, note: None }
    }

    #[test]
    fn empty_report_passes() {
        let r = VerificationReport::new(&SuiteConfig::default(), vec![], 0.0);
        assert!(r.pass);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["cases"], serde_json::json!([]));
        assert_eq!(v["pass"], serde_json::json!(true));
    }

    #[test]
    fn json_shape() {
        let r = VerificationReport::new(&SuiteConfig::default(), vec![case(true), case(false)], 0.25);
        assert!(!r.pass);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["cases"][0]["max_residual"], "1.500000e-13");
        assert_eq!(v["config"]["tol"], "1.000000e-10");
        assert_eq!(v["config"]["format"], "text");
        assert_eq!(v["cases"][1]["pass"], false);
        assert!(r.to_text().contains("FAIL"));
    }
}
