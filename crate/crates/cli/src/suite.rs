//! The verification-suite driver: parameter sweeps over the family claims,
//! fanned out with rayon and collected into a [`ReportDoc`].

use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;
use uqsl2_core::algebra::RelationMode;
use uqsl2_core::drinfeld::{
    verify_claim, BracketParams, Claim, ClaimParams, Convention, DrinfeldError, FamilyParams, Sign, Verdict,
    VerdictReport,
};

use crate::print::Format;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("unknown claim `{0}` (expected ep, em, commc, omega, reflect, display1 or display2)")]
    UnknownClaim(String),
    #[error("malformed range `{0}` (expected a:b with a <= b)")]
    MalformedRange(String),
    #[error("{0} must be nonnegative")]
    NegativeIndex(&'static str),
    #[error("both --{0}-max and --{0}-range given")]
    ConflictingRange(&'static str),
    #[error("no claims requested")]
    NoClaims,
    #[error("{claim}: no parameter tuple in range satisfies {rule}")]
    EmptySweep { claim: &'static str, rule: &'static str },
    #[error("{0}")]
    Mode(String),
    #[error("cannot read config file {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid config file: {0}")]
    Toml(#[from] toml::de::Error),
    #[error(transparent)]
    Claim(#[from] DrinfeldError),
}

pub const DEFAULT_CLAIMS: [Claim; 5] = [Claim::Ep, Claim::Em, Claim::Commc, Claim::OmegaE, Claim::Reflect];

pub fn parse_claim(name: &str) -> Result<Claim, ConfigError> {
    Ok(match name.trim().to_ascii_lowercase().as_str() {
        "ep" => Claim::Ep,
        "em" => Claim::Em,
        "commc" => Claim::Commc,
        "omega" | "omega_e" => Claim::OmegaE,
        "reflect" => Claim::Reflect,
        "display1" | "proof_display_1" => Claim::ProofDisplay1,
        "display2" | "proof_display_2" => Claim::ProofDisplay2,
        _ => return Err(ConfigError::UnknownClaim(name.trim().to_string())),
    })
}

/// An inclusive integer range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Range {
    pub lo: i64,
    pub hi: i64,
}

impl Range {
    pub fn new(lo: i64, hi: i64) -> Self {
        Range { lo, hi }
    }

    /// Parses `a:b` or a single integer `a`.
    pub fn parse(text: &str) -> Result<Range, ConfigError> {
        let bad = || ConfigError::MalformedRange(text.to_string());
        let (lo, hi) = match text.split_once(':') {
            Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
            None => {
                let a = text.trim().parse().map_err(|_| bad())?;
                (a, a)
            }
        };
        if lo > hi {
            return Err(bad());
        }
        Ok(Range { lo, hi })
    }

    pub fn iter(self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }
}

impl std::fmt::Display for Range {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.lo, self.hi)
    }
}

/// Sweep settings as given on the command line or in a config file.
#[derive(Clone, Debug, Default, PartialEq, Eq, clap::Args)]
pub struct SweepOptions {
    /// Comma-separated claims: ep, em, commc, omega, reflect, display1, display2
    #[arg(long)]
    pub claims: Option<String>,
    /// Sweep n over 0..=N [default: 4]
    #[arg(long, value_name = "N")]
    pub n_max: Option<i64>,
    /// Sweep k over 0..=K [default: 4]
    #[arg(long, value_name = "K")]
    pub k_max: Option<i64>,
    /// Sweep n over A..=B
    #[arg(long, value_name = "A:B", allow_hyphen_values = true)]
    pub n_range: Option<String>,
    /// Sweep k over A..=B
    #[arg(long, value_name = "A:B", allow_hyphen_values = true)]
    pub k_range: Option<String>,
    /// Sweep m over A..=B [default: -2:2]
    #[arg(long, value_name = "A:B", allow_hyphen_values = true)]
    pub m_range: Option<String>,
    /// Sweep p over A..=B [default: -2:2]
    #[arg(long, value_name = "A:B", allow_hyphen_values = true)]
    pub p_range: Option<String>,
}

impl SweepOptions {
    /// Takes each setting from `self` when present, otherwise from `fallback`.
    /// A `max` and a `range` for the same index count as one setting.
    pub fn or(self, fallback: SweepOptions) -> SweepOptions {
        let pick = |a: (Option<i64>, Option<String>), b: (Option<i64>, Option<String>)| {
            if a.0.is_some() || a.1.is_some() {
                a
            } else {
                b
            }
        };
        let (n_max, n_range) = pick((self.n_max, self.n_range), (fallback.n_max, fallback.n_range));
        let (k_max, k_range) = pick((self.k_max, self.k_range), (fallback.k_max, fallback.k_range));
        SweepOptions {
            claims: self.claims.or(fallback.claims),
            n_max,
            k_max,
            n_range,
            k_range,
            m_range: self.m_range.or(fallback.m_range),
            p_range: self.p_range.or(fallback.p_range),
        }
    }
}

/// Config file contents. Keys are the long flag names.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct FileConfig {
    pub mode: Option<String>,
    pub format: Option<Format>,
    pub claims: Option<String>,
    pub n_max: Option<i64>,
    pub k_max: Option<i64>,
    pub n_range: Option<String>,
    pub k_range: Option<String>,
    pub m_range: Option<String>,
    pub p_range: Option<String>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<FileConfig, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| ConfigError::Io { path: path.display().to_string(), source })?;
        Ok(toml::from_str(&text)?)
    }

    pub fn sweep(&self) -> SweepOptions {
        SweepOptions {
            claims: self.claims.clone(),
            n_max: self.n_max,
            k_max: self.k_max,
            n_range: self.n_range.clone(),
            k_range: self.k_range.clone(),
            m_range: self.m_range.clone(),
            p_range: self.p_range.clone(),
        }
    }
}

pub fn parse_mode(text: &str) -> Result<RelationMode, ConfigError> {
    text.parse().map_err(ConfigError::Mode)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub claims: Vec<Claim>,
    pub n_range: Range,
    pub k_range: Range,
    pub m_range: Range,
    pub p_range: Range,
    pub mode: RelationMode,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            claims: DEFAULT_CLAIMS.to_vec(),
            n_range: Range::new(0, 4),
            k_range: Range::new(0, 4),
            m_range: Range::new(-2, 2),
            p_range: Range::new(-2, 2),
            mode: RelationMode::Strict,
        }
    }
}

impl SuiteConfig {
    pub fn from_options(opts: &SweepOptions, mode: RelationMode) -> Result<SuiteConfig, ConfigError> {
        let defaults = SuiteConfig::default();
        let index = |name: &'static str, max: Option<i64>, range: &Option<String>, default: Range| {
            let r = match (max, range) {
                (Some(_), Some(_)) => return Err(ConfigError::ConflictingRange(name)),
                (Some(hi), None) if hi < 0 => return Err(ConfigError::NegativeIndex(name)),
                (Some(hi), None) => Range::new(0, hi),
                (None, Some(text)) => Range::parse(text)?,
                (None, None) => default,
            };
            if r.lo < 0 {
                return Err(ConfigError::NegativeIndex(name));
            }
            Ok(r)
        };
        let plain = |range: &Option<String>, default: Range| range.as_deref().map_or(Ok(default), Range::parse);
        let claims = match &opts.claims {
            Some(list) => {
                let mut claims = list.split(',').map(parse_claim).collect::<Result<Vec<_>, _>>()?;
                claims.sort();
                claims.dedup();
                claims
            }
            None => defaults.claims,
        };
        if claims.is_empty() {
            return Err(ConfigError::NoClaims);
        }
        Ok(SuiteConfig {
            claims,
            n_range: index("n", opts.n_max, &opts.n_range, defaults.n_range)?,
            k_range: index("k", opts.k_max, &opts.k_range, defaults.k_range)?,
            m_range: plain(&opts.m_range, defaults.m_range)?,
            p_range: plain(&opts.p_range, defaults.p_range)?,
            mode,
        })
    }

    /// Every `(claim, params)` tuple of the sweep, in report order.
    pub fn tuples(&self) -> Result<Vec<(Claim, ClaimParams)>, ConfigError> {
        let mut out = Vec::new();
        for &claim in &self.claims {
            let before = out.len();
            self.claim_tuples(claim, &mut out);
            if out.len() == before {
                let rule = match claim {
                    Claim::Ep => "n < k",
                    Claim::Em => "n > k",
                    _ => "the ranges",
                };
                return Err(ConfigError::EmptySweep { claim: claim.name(), rule });
            }
        }
        Ok(out)
    }

    fn claim_tuples(&self, claim: Claim, out: &mut Vec<(Claim, ClaimParams)>) {
        let (n, k, m, p) = (self.n_range, self.k_range, self.m_range, self.p_range);
        let grid = |sign: Sign, keep: fn(i64, i64) -> bool, out: &mut Vec<_>| {
            for n in n.iter() {
                for k in k.iter().filter(|&k| keep(n, k)) {
                    for m in m.iter() {
                        for p in p.iter() {
                            out.push((n, k, m, p, sign));
                        }
                    }
                }
            }
        };
        let mut family = Vec::new();
        match claim {
            Claim::Ep => grid(Sign::Plus, |n, k| n < k, &mut family),
            Claim::Em => grid(Sign::Minus, |n, k| n > k, &mut family),
            Claim::ProofDisplay1 | Claim::ProofDisplay2 => {
                for sign in Sign::BOTH {
                    grid(sign, |_, _| true, &mut family);
                }
            }
            Claim::Commc => {
                for sign in Sign::BOTH {
                    for convention in Convention::BOTH {
                        for n in n.iter() {
                            for m in m.iter() {
                                out.push((claim, ClaimParams::commc(sign, n, m, convention)));
                            }
                        }
                    }
                }
            }
            Claim::OmegaE | Claim::Reflect => {
                for sign in Sign::BOTH {
                    for n in n.iter() {
                        for m in m.iter() {
                            for p in p.iter() {
                                let params = match claim {
                                    Claim::OmegaE => ClaimParams::omega(FamilyParams::new(sign, p, m, n)),
                                    _ => ClaimParams::reflect(sign, n, m, -m - 2 * p),
                                };
                                out.push((claim, params));
                            }
                        }
                    }
                }
            }
        }
        out.extend(family.into_iter().map(|(n, k, m, p, sign)| {
            let params = match claim {
                Claim::ProofDisplay1 => ClaimParams::general(&BracketParams::family(n, k, m, p, sign)),
                _ => ClaimParams::family(sign, n, k, m, p),
            };
            (claim, params)
        }));
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct Summary {
    pub total: usize,
    pub exact_zero: usize,
    pub central: usize,
    pub residual: usize,
    pub paper_mismatch: usize,
}

impl Summary {
    pub fn tally(reports: &[VerdictReport]) -> Summary {
        let mut s = Summary { total: reports.len(), ..Summary::default() };
        for r in reports {
            match r.verdict {
                Verdict::ExactZero => s.exact_zero += 1,
                Verdict::CentralValue(_) => s.central += 1,
                Verdict::Residual(_) => s.residual += 1,
            }
            if !r.paper_match {
                s.paper_mismatch += 1;
            }
        }
        s
    }
}

#[derive(Clone, Debug)]
pub struct ReportDoc {
    pub version: &'static str,
    pub config: SuiteConfig,
    pub reports: Vec<VerdictReport>,
    pub summary: Summary,
}

pub fn run_verify_suite(config: &SuiteConfig) -> Result<ReportDoc, ConfigError> {
    let tuples = config.tuples()?;
    let mode = config.mode;
    let reports =
        tuples.par_iter().map(|(claim, params)| verify_claim(*claim, params, mode)).collect::<Result<Vec<_>, _>>()?;
    Ok(ReportDoc {
        version: env!("CARGO_PKG_VERSION"),
        config: config.clone(),
        summary: Summary::tally(&reports),
        reports,
    })
}

/// The parameters a claim actually depends on.
fn params_fields(claim: Claim, p: &ClaimParams) -> Vec<(&'static str, String)> {
    let mut f = vec![("sign", p.sign.to_string()), ("n", p.n.to_string())];
    let mut int = |name, v: i64| f.push((name, v.to_string()));
    match claim {
        Claim::Ep | Claim::Em | Claim::ProofDisplay2 => {
            int("k", p.k);
            int("m", p.m);
            int("p", p.p);
        }
        Claim::ProofDisplay1 => {
            for (name, v) in [("k", p.k), ("m", p.m), ("l", p.l), ("eta", p.eta), ("theta", p.theta), ("p", p.p)] {
                int(name, v);
            }
        }
        Claim::Commc => {
            int("m", p.m);
            int("bracket", p.bracket);
        }
        Claim::OmegaE => {
            int("m", p.m);
            int("p", p.p);
        }
        Claim::Reflect => {
            int("m", p.m);
            int("eta", p.eta);
        }
    }
    if let Some(c) = p.convention {
        f.push(("convention", c.name().to_string()));
    }
    f
}

#[derive(Serialize)]
struct JsonReport {
    claim: &'static str,
    params: serde_json::Map<String, serde_json::Value>,
    verdict: &'static str,
    value: String,
    paper_match: bool,
    paper_expected: String,
    discrepancy: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    matched_sign: Option<String>,
}

#[derive(Serialize)]
struct JsonDoc {
    version: &'static str,
    mode: &'static str,
    claims: Vec<&'static str>,
    ranges: serde_json::Map<String, serde_json::Value>,
    summary: Summary,
    reports: Vec<JsonReport>,
}

impl ReportDoc {
    /// 0 when every report matches its printed value, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.summary.paper_mismatch == 0 {
            crate::exit::OK
        } else {
            crate::exit::DISCREPANCY
        }
    }

    fn ranges(&self) -> [(&'static str, Range); 4] {
        let c = &self.config;
        [("n", c.n_range), ("k", c.k_range), ("m", c.m_range), ("p", c.p_range)]
    }

    pub fn to_json(&self) -> String {
        let reports = self
            .reports
            .iter()
            .map(|r| JsonReport {
                claim: r.claim.name(),
                params: params_fields(r.claim, &r.params)
                    .into_iter()
                    .map(|(k, v)| {
                        let value = v.parse::<i64>().map_or(serde_json::Value::from(v), serde_json::Value::from);
                        (k.to_string(), value)
                    })
                    .collect(),
                verdict: r.verdict.label(),
                value: r.verdict.value().to_string(),
                paper_match: r.paper_match,
                paper_expected: r.paper_expected.to_string(),
                discrepancy: r.discrepancy.to_string(),
                matched_sign: r.matched_sign.map(|s| s.to_string()),
            })
            .collect();
        let doc = JsonDoc {
            version: self.version,
            mode: self.config.mode.name(),
            claims: self.config.claims.iter().map(|c| c.name()).collect(),
            ranges: self.ranges().into_iter().map(|(k, r)| (k.to_string(), serde_json::json!([r.lo, r.hi]))).collect(),
            summary: self.summary,
            reports,
        };
        serde_json::to_string_pretty(&doc).expect("report JSON is always serializable")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let claims: Vec<_> = self.config.claims.iter().map(|c| c.name()).collect();
        let ranges: Vec<_> = self.ranges().iter().map(|(k, r)| format!("{k}={r}")).collect();
        out.push_str(&format!(
            "uqsl2 {} verify  mode={}  claims={}  {}\n",
            self.version,
            self.config.mode.name(),
            claims.join(","),
            ranges.join(" ")
        ));
        for r in &self.reports {
            let params: Vec<_> = params_fields(r.claim, &r.params).iter().map(|(k, v)| format!("{k}={v}")).collect();
            let status = if r.paper_match { "match" } else { "MISMATCH" };
            out.push_str(&format!(
                "{:<16} {:<48} {:<10} {}",
                r.claim.name(),
                params.join(" "),
                r.verdict.label(),
                status
            ));
            if let Some(s) = r.matched_sign {
                out.push_str(&format!("  matched-sign={s}"));
            }
            if !matches!(r.verdict, Verdict::ExactZero) && r.claim == Claim::Commc {
                out.push_str(&format!("  value={}", r.verdict.value()));
            }
            out.push('\n');
        }
        let s = self.summary;
        out.push_str(&format!(
            "summary: {} reports, {} exact-zero, {} central, {} residual, {} paper-mismatch\n",
            s.total, s.exact_zero, s.central, s.residual, s.paper_mismatch
        ));
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Text | Format::Latex => self.to_text(),
        }
    }
}
