//! Level-by-level cross-verification of graphs, counters and formulas.
//!
//! For every level `N` up to the configured maximum, [`run_verify`] builds
//! `G_N` (when it fits under the vertex cap), counts its non-edges and
//! induced 4-cycles with every affordable counter, evaluates all formulas,
//! and records an explicit flag for each comparison. A value that was not
//! computed is carried as `"skipped: <reason>"` and every comparison that
//! touches it is flagged skipped as well, never matched.
//!
//! Mismatches of the stated-theorem closed forms are findings, not failures:
//! they do not affect [`VerificationReport::passed`].

use std::collections::BTreeMap;
use std::fmt::{self, Display};
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::count::{self, four_subsets, DEFAULT_SUBSET_CAP};
use crate::error::{CountError, VerifyError};
use crate::formulas::{self, ExactInt, ExactRational, Family, FormulaVariant, TermBreakdown};
use crate::graph::{nested_blowup, BaseGraph, BlowupSpec, DEFAULT_VERTEX_CAP};

/// Default largest graph the diagonal counter is run on during `verify`.
pub const DEFAULT_DIAGONAL_CAP: usize = 1024;

pub const SKIP_CAP: &str = "cap";
pub const SKIP_NOT_REQUESTED: &str = "not requested";
pub const SKIP_NO_FORMULA: &str = "no formula";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyChoice {
    C4,
    Theta222,
    Custom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodChoice {
    Enum,
    Diagonal,
    Both,
}

impl MethodChoice {
    pub fn wants_enum(self) -> bool {
        matches!(self, MethodChoice::Enum | MethodChoice::Both)
    }

    pub fn wants_diagonal(self) -> bool {
        matches!(self, MethodChoice::Diagonal | MethodChoice::Both)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub family: FamilyChoice,
    /// Edge list of the base graph for the custom family.
    pub input: Option<PathBuf>,
    pub max_level: u32,
    pub methods: MethodChoice,
    pub vertex_cap: usize,
    pub subset_cap: u128,
    pub diagonal_cap: usize,
    /// `0` uses the default pool size.
    pub workers: usize,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
}

impl RunConfig {
    pub fn new(family: FamilyChoice, max_level: u32) -> Self {
        RunConfig {
            family,
            input: None,
            max_level,
            methods: MethodChoice::Both,
            vertex_cap: DEFAULT_VERTEX_CAP,
            subset_cap: DEFAULT_SUBSET_CAP,
            diagonal_cap: DEFAULT_DIAGONAL_CAP,
            workers: 0,
            out: None,
            format: OutputFormat::Text,
        }
    }

    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.vertex_cap == 0 || self.subset_cap == 0 || self.diagonal_cap == 0 {
            return Err(VerifyError::Config("caps must be positive".into()));
        }
        Ok(())
    }
}

/// A value that was either computed or deliberately not computed.
///
/// Serialized as the value's decimal/display string, or as
/// `"skipped: <reason>"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Slot<T> {
    Value(T),
    Skipped(String),
}

impl<T> Slot<T> {
    pub fn skipped(reason: &str) -> Self {
        Slot::Skipped(reason.to_owned())
    }

    pub fn value(&self) -> Option<&T> {
        match self {
            Slot::Value(v) => Some(v),
            Slot::Skipped(_) => None,
        }
    }

    fn reason(&self) -> Option<&str> {
        match self {
            Slot::Value(_) => None,
            Slot::Skipped(r) => Some(r),
        }
    }
}

impl<T: Display> Display for Slot<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slot::Value(v) => v.fmt(f),
            Slot::Skipped(r) => write!(f, "skipped: {r}"),
        }
    }
}

impl<T: Display> Serialize for Slot<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de, T> Deserialize<'de> for Slot<T>
where
    T: FromStr,
    T::Err: Display,
{
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        match s.strip_prefix("skipped: ") {
            Some(reason) => Ok(Slot::Skipped(reason.to_owned())),
            None => s.parse().map(Slot::Value).map_err(D::Error::custom),
        }
    }
}

/// Outcome of one comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Flag {
    Match,
    Mismatch,
    Skipped(String),
}

impl Flag {
    fn of(equal: bool) -> Flag {
        if equal {
            Flag::Match
        } else {
            Flag::Mismatch
        }
    }

    fn compare<A, B>(a: &Slot<A>, b: &Slot<B>, eq: impl Fn(&A, &B) -> bool) -> Flag {
        match (a, b) {
            (Slot::Value(x), Slot::Value(y)) => Flag::of(eq(x, y)),
            _ => Flag::Skipped(a.reason().or(b.reason()).unwrap_or_default().to_owned()),
        }
    }
}

impl Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flag::Match => f.write_str("match"),
            Flag::Mismatch => f.write_str("mismatch"),
            Flag::Skipped(r) => write!(f, "skipped: {r}"),
        }
    }
}

impl Serialize for Flag {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Flag {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        match s.as_str() {
            "match" => Ok(Flag::Match),
            "mismatch" => Ok(Flag::Mismatch),
            other => other
                .strip_prefix("skipped: ")
                .map(|r| Flag::Skipped(r.to_owned()))
                .ok_or_else(|| D::Error::custom(format!("unknown flag {other:?}"))),
        }
    }
}

mod decimal {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

/// [`TermBreakdown`] in report form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BreakdownRecord {
    #[serde(with = "decimal")]
    pub copies_term: ExactInt,
    #[serde(with = "decimal")]
    pub all_blob_term: ExactInt,
    #[serde(with = "decimal")]
    pub one_nonedge_term: ExactInt,
    #[serde(with = "decimal")]
    pub two_nonedge_term: ExactInt,
}

impl From<TermBreakdown> for BreakdownRecord {
    fn from(b: TermBreakdown) -> Self {
        BreakdownRecord {
            copies_term: b.copies_term,
            all_blob_term: b.all_blob_term,
            one_nonedge_term: b.one_nonedge_term,
            two_nonedge_term: b.two_nonedge_term,
        }
    }
}

pub mod flags {
    pub const NON_EDGES: &str = "non_edges_formula_vs_graph";
    pub const EDGES: &str = "edges_formula_vs_graph";
    pub const ENUM_VS_DIAGONAL: &str = "enum_vs_diagonal";
    pub const RECURRENCE_VS_ORACLE: &str = "recurrence_vs_oracle";
    pub const PARTIAL_SUMS: &str = "partial_sums_vs_recurrence";
    pub const DERIVED_VS_RECURRENCE: &str = "derived_vs_recurrence";
    pub const DERIVED_VS_ORACLE: &str = "derived_vs_oracle";
    pub const STATED_VS_RECURRENCE: &str = "stated_vs_recurrence";
    pub const STATED_VS_ORACLE: &str = "stated_vs_oracle";

    /// Comparisons whose mismatch is an expected finding rather than a failure.
    pub fn is_finding_only(name: &str) -> bool {
        name.starts_with("stated_")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelRecord {
    #[serde(rename = "N")]
    pub level: u32,
    pub vertices: Slot<ExactInt>,
    pub edges: Slot<ExactInt>,
    pub edges_formula: Slot<ExactInt>,
    pub non_edges_graph: Slot<ExactInt>,
    pub non_edges_formula: Slot<ExactInt>,
    #[serde(rename = "T_enum")]
    pub t_enum: Slot<ExactInt>,
    #[serde(rename = "T_diagonal")]
    pub t_diagonal: Slot<ExactInt>,
    #[serde(rename = "T_recurrence")]
    pub t_recurrence: Slot<ExactInt>,
    #[serde(rename = "T_closed_stated")]
    pub t_closed_stated: Slot<ExactRational>,
    #[serde(rename = "T_closed_derived")]
    pub t_closed_derived: Slot<ExactRational>,
    pub breakdown: Option<BreakdownRecord>,
    pub match_flags: BTreeMap<String, Flag>,
    /// Seconds per stage.
    pub timings: BTreeMap<String, f64>,
}

impl LevelRecord {
    /// Names of comparisons that mismatched and are not finding-only.
    pub fn failures(&self) -> impl Iterator<Item = &str> {
        self.match_flags
            .iter()
            .filter(|(name, flag)| **flag == Flag::Mismatch && !flags::is_finding_only(name))
            .map(|(name, _)| name.as_str())
    }

    pub fn flag(&self, name: &str) -> Option<&Flag> {
        self.match_flags.get(name)
    }

    /// The graph-level count, from whichever counter ran.
    pub fn oracle(&self) -> Slot<ExactInt> {
        match (&self.t_enum, &self.t_diagonal) {
            (Slot::Value(v), _) | (_, Slot::Value(v)) => Slot::Value(v.clone()),
            (Slot::Skipped(r), _) => Slot::Skipped(r.clone()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FindingKind {
    /// A stated-theorem closed form disagrees with the computed count.
    StatedTheoremDiscrepancy,
    VerificationFailure,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    #[serde(rename = "N")]
    pub level: u32,
    pub kind: FindingKind,
    pub comparison: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub tool: String,
    pub version: String,
    pub target: String,
    /// RFC 3339.
    pub timestamp: String,
}

impl Meta {
    fn current() -> Self {
        Meta {
            tool: "c4-blowup".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            target: format!("{}-{}", std::env::consts::ARCH, std::env::consts::OS),
            timestamp: chrono::Utc::now().to_rfc3339(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub family: FamilyChoice,
    pub config: RunConfig,
    pub levels: Vec<LevelRecord>,
    pub findings: Vec<Finding>,
    pub meta: Meta,
}

impl VerificationReport {
    /// True iff no comparison other than the finding-only ones mismatched.
    pub fn passed(&self) -> bool {
        self.levels.iter().all(|l| l.failures().next().is_none())
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Human-readable per-level table followed by the findings.
    pub fn summary_table(&self) -> String {
        let headers = [
            "N", "vertices", "non_edges", "m_formula", "T_enum", "T_diagonal", "T_recurrence",
            "T_derived", "T_stated", "status",
        ];
        let rows = self
            .levels
            .iter()
            .map(|l| {
                let failures: Vec<_> = l.failures().collect();
                let status = if failures.is_empty() {
                    "ok".to_owned()
                } else {
                    format!("FAIL ({})", failures.join(", "))
                };
                vec![
                    l.level.to_string(),
                    l.vertices.to_string(),
                    l.non_edges_graph.to_string(),
                    l.non_edges_formula.to_string(),
                    l.t_enum.to_string(),
                    l.t_diagonal.to_string(),
                    l.t_recurrence.to_string(),
                    l.t_closed_derived.to_string(),
                    l.t_closed_stated.to_string(),
                    status,
                ]
            })
            .collect();
        let table = crate::tables::Table {
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows,
        };
        let mut out = table.to_text();
        if !self.findings.is_empty() {
            out.push_str("\nfindings:\n");
            for f in &self.findings {
                let kind = match f.kind {
                    FindingKind::StatedTheoremDiscrepancy => "stated theorem",
                    FindingKind::VerificationFailure => "FAILURE",
                };
                out.push_str(&format!("  N={} [{kind}] {}: {}\n", f.level, f.comparison, f.detail));
            }
        }
        out.push_str(if self.passed() { "\nresult: PASS\n" } else { "\nresult: FAIL\n" });
        out
    }
}

fn int(v: impl Into<ExactInt>) -> Slot<ExactInt> {
    Slot::Value(v.into())
}

/// Runs the full verification for `base` as described by `config`.
///
/// Returns an error only for invalid configuration or when the two counters
/// disagree on the same graph, which indicates a bug in a counter.
pub fn run_verify(base: &BaseGraph, config: &RunConfig) -> Result<VerificationReport, VerifyError> {
    config.validate()?;
    let family = match base {
        BaseGraph::C4 => Some(Family::C4),
        BaseGraph::Theta222 => Some(Family::Theta222),
        BaseGraph::Custom(_) => None,
    };
    let expected_choice = match family {
        Some(Family::C4) => FamilyChoice::C4,
        Some(Family::Theta222) => FamilyChoice::Theta222,
        None => FamilyChoice::Custom,
    };
    if config.family != expected_choice {
        return Err(VerifyError::Config(format!(
            "config family {:?} does not match base graph {}",
            config.family,
            base.name()
        )));
    }

    let levels = count::with_workers(config.workers, || {
        (0..=config.max_level)
            .map(|level| verify_level(base, family, level, config))
            .collect::<Result<Vec<_>, VerifyError>>()
    })?;

    let findings = levels.iter().flat_map(findings_for).collect();
    Ok(VerificationReport {
        family: config.family,
        config: config.clone(),
        levels,
        findings,
        meta: Meta::current(),
    })
}

fn verify_level(
    base: &BaseGraph,
    family: Option<Family>,
    level: u32,
    config: &RunConfig,
) -> Result<LevelRecord, VerifyError> {
    let mut timings = BTreeMap::new();
    let vertices = match BlowupSpec::new(base.clone(), level) {
        Ok(spec) => (Some(spec.clone()), int(spec.total_order())),
        Err(_) => (None, Slot::skipped(SKIP_CAP)),
    };
    let (spec, vertices) = vertices;

    let graph = match &spec {
        Some(spec) if spec.total_order() <= config.vertex_cap as u128 => {
            let start = Instant::now();
            let g = nested_blowup(spec, config.vertex_cap)?;
            timings.insert("build".to_owned(), start.elapsed().as_secs_f64());
            Some(g)
        }
        _ => None,
    };

    let (edges, non_edges_graph) = match &graph {
        Some(g) => (int(g.edge_count() as u64), int(g.non_edge_count() as u64)),
        None => (Slot::skipped(SKIP_CAP), Slot::skipped(SKIP_CAP)),
    };

    let t_enum = match &graph {
        _ if !config.methods.wants_enum() => Slot::skipped(SKIP_NOT_REQUESTED),
        Some(g) if four_subsets(g.order()) <= config.subset_cap => {
            let r = count::count_induced_c4_enum(g, config.subset_cap)?;
            timings.insert("enum".to_owned(), r.elapsed.as_secs_f64());
            int(r.value)
        }
        _ => Slot::skipped(SKIP_CAP),
    };
    let t_diagonal = match &graph {
        _ if !config.methods.wants_diagonal() => Slot::skipped(SKIP_NOT_REQUESTED),
        Some(g) if g.order() <= config.diagonal_cap => {
            let r = count::count_induced_c4_diagonal(g);
            timings.insert("diagonal".to_owned(), r.elapsed.as_secs_f64());
            int(r.value)
        }
        _ => Slot::skipped(SKIP_CAP),
    };
    if let (Slot::Value(e), Slot::Value(d)) = (&t_enum, &t_diagonal) {
        if e != d {
            return Err(CountError::Disagreement {
                enumeration: u128::try_from(e).unwrap_or(u128::MAX),
                diagonal: u128::try_from(d).unwrap_or(u128::MAX),
            }
            .into());
        }
    }

    let start = Instant::now();
    fn no_formula<T>() -> Slot<T> {
        Slot::skipped(SKIP_NO_FORMULA)
    }
    let (non_edges_formula, edges_formula, t_recurrence, breakdown, stated, derived, partial) =
        match family {
            Some(f) => {
                let (t, b) = formulas::recurrence_with_breakdown(f, level);
                let partial = formulas::partial_sums(f, level)?;
                (
                    Slot::Value(formulas::nonedges_closed(f, level)),
                    Slot::Value(formulas::edges_closed(f, level)),
                    Slot::Value(t),
                    b.map(BreakdownRecord::from),
                    Slot::Value(formulas::closed_t(f, level, FormulaVariant::StatedTheorem)),
                    Slot::Value(formulas::closed_t(f, level, FormulaVariant::DerivedProof)),
                    Some(partial),
                )
            }
            None => (no_formula(), no_formula(), no_formula(), None, no_formula(), no_formula(), None),
        };
    timings.insert("formulas".to_owned(), start.elapsed().as_secs_f64());

    let oracle = match (&t_enum, &t_diagonal) {
        (Slot::Value(v), _) | (_, Slot::Value(v)) => Slot::Value(v.clone()),
        (Slot::Skipped(r), _) => Slot::Skipped(r.clone()),
    };

    let same = |a: &ExactInt, b: &ExactInt| a == b;
    let closed_eq = |c: &ExactRational, t: &ExactInt| c.equals_int(t);
    let mut match_flags = BTreeMap::new();
    let mut put = |name: &str, flag: Flag| {
        match_flags.insert(name.to_owned(), flag);
    };
    put(flags::NON_EDGES, Flag::compare(&non_edges_formula, &non_edges_graph, same));
    put(flags::EDGES, Flag::compare(&edges_formula, &edges, same));
    put(flags::ENUM_VS_DIAGONAL, Flag::compare(&t_enum, &t_diagonal, same));
    put(flags::RECURRENCE_VS_ORACLE, Flag::compare(&t_recurrence, &oracle, same));
    put(
        flags::PARTIAL_SUMS,
        match (&partial, t_recurrence.value()) {
            (Some(p), Some(t)) => Flag::of(p.all_agree() && &p.total() == t),
            _ => Flag::Skipped(SKIP_NO_FORMULA.to_owned()),
        },
    );
    put(flags::DERIVED_VS_RECURRENCE, Flag::compare(&derived, &t_recurrence, closed_eq));
    put(flags::DERIVED_VS_ORACLE, Flag::compare(&derived, &oracle, closed_eq));
    put(flags::STATED_VS_RECURRENCE, Flag::compare(&stated, &t_recurrence, closed_eq));
    put(flags::STATED_VS_ORACLE, Flag::compare(&stated, &oracle, closed_eq));

    Ok(LevelRecord {
        level,
        vertices,
        edges,
        edges_formula,
        non_edges_graph,
        non_edges_formula,
        t_enum,
        t_diagonal,
        t_recurrence,
        t_closed_stated: stated,
        t_closed_derived: derived,
        breakdown,
        match_flags,
        timings,
    })
}

fn findings_for(level: &LevelRecord) -> Vec<Finding> {
    let mut out = Vec::new();
    for (name, flag) in &level.match_flags {
        if *flag != Flag::Mismatch {
            continue;
        }
        let finding_only = flags::is_finding_only(name);
        let detail = if finding_only {
            let stated = level.t_closed_stated.value().expect("compared, so present");
            let mut notes = Vec::new();
            if !stated.is_integer() {
                notes.push("non-integer");
            }
            if stated.is_negative() {
                notes.push("negative");
            }
            let reference = if name == flags::STATED_VS_ORACLE {
                level.oracle()
            } else {
                level.t_recurrence.clone()
            };
            let notes = if notes.is_empty() {
                String::new()
            } else {
                format!(" ({})", notes.join(", "))
            };
            format!("stated closed form gives {stated}{notes}, expected {reference}")
        } else {
            format!("{name} mismatched")
        };
        out.push(Finding {
            level: level.level,
            kind: if finding_only {
                FindingKind::StatedTheoremDiscrepancy
            } else {
                FindingKind::VerificationFailure
            },
            comparison: name.clone(),
            detail,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle_graph;

    #[test]
    fn slot_serialization() {
        let v: Slot<ExactInt> = int(404u32);
        assert_eq!(serde_json::to_string(&v).unwrap(), "\"404\"");
        let s: Slot<ExactInt> = Slot::skipped(SKIP_CAP);
        assert_eq!(serde_json::to_string(&s).unwrap(), "\"skipped: cap\"");
        let back: Slot<ExactInt> = serde_json::from_str("\"skipped: cap\"").unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<Slot<ExactInt>>("\"12x\"").is_err());
    }

    #[test]
    fn flag_serialization() {
        for f in [Flag::Match, Flag::Mismatch, Flag::Skipped("cap".into())] {
            let text = serde_json::to_string(&f).unwrap();
            assert_eq!(serde_json::from_str::<Flag>(&text).unwrap(), f);
        }
        assert!(serde_json::from_str::<Flag>("\"maybe\"").is_err());
    }

    #[test]
    fn skipped_values_never_match() {
        let a: Slot<ExactInt> = int(1u32);
        let b: Slot<ExactInt> = Slot::skipped(SKIP_CAP);
        assert_eq!(Flag::compare(&a, &b, |x, y| x == y), Flag::Skipped("cap".into()));
        assert_eq!(Flag::compare(&b, &a, |x, y| x == y), Flag::Skipped("cap".into()));
    }

    #[test]
    fn c4_level_zero() {
        let report = run_verify(&BaseGraph::C4, &RunConfig::new(FamilyChoice::C4, 0)).unwrap();
        let l = &report.levels[0];
        for slot in [&l.t_enum, &l.t_diagonal, &l.t_recurrence] {
            assert_eq!(slot, &int(1u32));
        }
        assert!(l.t_closed_derived.value().unwrap().equals_int(&1u32.into()));
        assert_eq!(l.flag(flags::STATED_VS_RECURRENCE), Some(&Flag::Mismatch));
        assert!(l.breakdown.is_none());
        assert!(report.passed());
        assert_eq!(report.findings.len(), 2);
        assert!(report.findings.iter().all(|f| f.kind == FindingKind::StatedTheoremDiscrepancy));
    }

    #[test]
    fn family_mismatch_is_config_error() {
        let err = run_verify(&BaseGraph::Theta222, &RunConfig::new(FamilyChoice::C4, 0)).unwrap_err();
        assert!(matches!(err, VerifyError::Config(_)));
        let mut cfg = RunConfig::new(FamilyChoice::C4, 0);
        cfg.subset_cap = 0;
        assert!(run_verify(&BaseGraph::C4, &cfg).is_err());
    }

    #[test]
    fn caps_mark_values_skipped() {
        let mut cfg = RunConfig::new(FamilyChoice::C4, 2);
        cfg.subset_cap = 2000;
        cfg.diagonal_cap = 16;
        cfg.vertex_cap = 16;
        let report = run_verify(&BaseGraph::C4, &cfg).unwrap();
        let top = &report.levels[2];
        assert_eq!(top.non_edges_graph, Slot::skipped(SKIP_CAP));
        assert_eq!(top.t_enum, Slot::skipped(SKIP_CAP));
        assert_eq!(top.flag(flags::NON_EDGES), Some(&Flag::Skipped(SKIP_CAP.into())));
        assert_eq!(top.flag(flags::DERIVED_VS_ORACLE), Some(&Flag::Skipped(SKIP_CAP.into())));
        assert_eq!(top.flag(flags::DERIVED_VS_RECURRENCE), Some(&Flag::Match));
        assert_eq!(report.levels[1].t_enum, int(404u32));
        assert!(report.passed());
    }

    #[test]
    fn custom_family_has_no_formulas() {
        let base = BaseGraph::Custom(cycle_graph(5).unwrap());
        let mut cfg = RunConfig::new(FamilyChoice::Custom, 1);
        cfg.methods = MethodChoice::Diagonal;
        let report = run_verify(&base, &cfg).unwrap();
        let l1 = &report.levels[1];
        assert_eq!(l1.t_recurrence, Slot::skipped(SKIP_NO_FORMULA));
        assert_eq!(l1.t_enum, Slot::skipped(SKIP_NOT_REQUESTED));
        assert!(l1.t_diagonal.value().is_some());
        assert_eq!(report.levels[0].t_diagonal, int(0u32));
        assert!(report.passed());
    }
}
