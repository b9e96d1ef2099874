//! JSON documents emitted by the CLI.
//!
//! Every document is serialized through `serde_json::Value`, whose maps are
//! ordered, so keys always come out sorted.

use quasiforest::chordal::QuasiForestDecomposition;
use quasiforest::linres::{self, betti_from_numerator, hilbert_from_decomposition, BettiTable};
use quasiforest::{ConjectureReport, OracleBettiTable, VertexSet};
use serde::Serialize;
use serde_json::Value;

/// An integer that falls back to a decimal string outside the `i64` range.
#[derive(Serialize)]
#[serde(untagged)]
pub enum Int {
    Small(i64),
    Big(String),
}

impl From<i128> for Int {
    fn from(x: i128) -> Self {
        i64::try_from(x).map_or_else(|_| Int::Big(x.to_string()), Int::Small)
    }
}

#[derive(Serialize)]
pub struct WitnessOut {
    pub facet: Vec<usize>,
    pub vertex: usize,
}

#[derive(Serialize)]
pub struct AnalyzeOutput {
    pub input: String,
    pub n: usize,
    pub complement_chordal: bool,
    pub chordless_cycle: Option<Vec<usize>>,
    pub facets: Option<Vec<Vec<usize>>>,
    pub d: Option<Vec<usize>>,
    pub r: Option<Vec<i32>>,
    pub r_min: Option<i32>,
    pub hilbert_numerator: Option<Vec<Int>>,
    pub betti: Option<Vec<[u64; 3]>>,
    pub pd: Option<usize>,
    pub depth: Option<usize>,
    pub dim: Option<usize>,
    pub cm: Option<bool>,
    pub d_tree: Option<Vec<usize>>,
    pub max_deg: usize,
    pub conjecture_holds: Option<bool>,
    pub gap: Option<i64>,
    pub witness: Option<WitnessOut>,
    pub notes: Vec<String>,
}

pub fn facet_lists(q: &QuasiForestDecomposition) -> Vec<Vec<usize>> {
    q.facets().iter().map(|f| f.to_vec()).collect()
}

pub fn betti_triples(t: &BettiTable) -> Vec<[u64; 3]> {
    t.triples().into_iter().map(|(i, j, v)| [i as u64, j as u64, v]).collect()
}

pub fn analyze(report: &ConjectureReport) -> anyhow::Result<AnalyzeOutput> {
    let mut out = AnalyzeOutput {
        input: report.graph6.clone(),
        n: report.n,
        complement_chordal: report.has_2linear,
        chordless_cycle: report.chordless_cycle.clone(),
        facets: None,
        d: None,
        r: None,
        r_min: report.r_min,
        hilbert_numerator: None,
        betti: None,
        pd: report.pd,
        depth: None,
        dim: None,
        cm: None,
        d_tree: None,
        max_deg: report.max_deg,
        conjecture_holds: report.holds,
        gap: report.gap,
        witness: report.witness.map(|w| WitnessOut { facet: w.facet.to_vec(), vertex: w.vertex }),
        notes: report.notes.clone(),
    };
    let Some(q) = &report.decomposition else {
        out.notes.push("complement is not chordal: the resolution is not 2-linear".into());
        return Ok(out);
    };
    let h = hilbert_from_decomposition(q)?;
    out.facets = Some(facet_lists(q));
    out.d = Some(q.dims().to_vec());
    out.r = Some(q.attach_dims().to_vec());
    out.betti = Some(betti_triples(&betti_from_numerator(&h)?));
    out.hilbert_numerator = Some(h.numerator().iter().map(|&c| Int::from(c)).collect());
    out.depth = Some(linres::depth(q));
    out.dim = Some(linres::krull_dim(q));
    out.cm = Some(linres::is_cm(q));
    match linres::d_tree_signature(q) {
        Ok(sig) => out.d_tree = sig,
        Err(e) => out.notes.push(format!("d-tree search skipped: {e}")),
    }
    if report.single_facet {
        out.notes.push("single facet: the edge ring is a polynomial ring".into());
    }
    Ok(out)
}

/// One line of survey output.
#[derive(Serialize)]
pub struct SurveyLine {
    pub input: String,
    pub n: usize,
    pub complement_chordal: bool,
    pub r_min: Option<i32>,
    pub pd: Option<usize>,
    pub max_deg: usize,
    pub conjecture_holds: Option<bool>,
    pub gap: Option<i64>,
    pub witness: bool,
}

impl From<&ConjectureReport> for SurveyLine {
    fn from(r: &ConjectureReport) -> Self {
        SurveyLine {
            input: r.graph6.clone(),
            n: r.n,
            complement_chordal: r.has_2linear,
            r_min: r.r_min,
            pd: r.pd,
            max_deg: r.max_deg,
            conjecture_holds: r.holds,
            gap: r.gap,
            witness: r.witness.is_some(),
        }
    }
}

#[derive(Serialize, Default)]
pub struct SurveySummary {
    pub total: u64,
    #[serde(rename = "2linear")]
    pub two_linear: u64,
    pub holds: u64,
    pub fails: u64,
    pub skipped: u64,
    pub counterexamples: Vec<String>,
}

impl SurveySummary {
    pub fn record(&mut self, line: &SurveyLine) {
        self.total += 1;
        if line.complement_chordal {
            self.two_linear += 1;
        }
        match line.conjecture_holds {
            Some(true) => self.holds += 1,
            Some(false) => {
                self.fails += 1;
                self.counterexamples.push(line.input.clone());
            }
            None => {}
        }
    }
}

#[derive(Serialize)]
pub struct SummaryLine<'a> {
    pub summary: &'a SurveySummary,
}

#[derive(Serialize)]
pub struct OracleOutput {
    pub input: Option<String>,
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
    pub betti: Vec<[u64; 3]>,
    pub pd: usize,
    #[serde(rename = "2linear")]
    pub two_linear: bool,
    pub subsets_examined: u64,
    #[serde(rename = "match")]
    pub matches: Option<bool>,
}

impl OracleOutput {
    pub fn new(
        input: Option<String>,
        facets: &[VertexSet],
        table: &OracleBettiTable,
        formula: Option<&BettiTable>,
    ) -> Self {
        OracleOutput {
            input,
            n: table.n,
            facets: facets.iter().map(|f| f.to_vec()).collect(),
            betti: betti_triples(&table.table),
            pd: quasiforest::oracle_pd(table),
            two_linear: quasiforest::oracle_is_2linear(table),
            subsets_examined: table.subsets_examined,
            matches: formula.map(|f| *f == table.table),
        }
    }
}

#[derive(Serialize)]
pub struct DecomposeOutput {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
    pub d: Vec<usize>,
    pub r: Vec<i32>,
    pub r_min: Option<i32>,
}

impl From<&QuasiForestDecomposition> for DecomposeOutput {
    fn from(q: &QuasiForestDecomposition) -> Self {
        DecomposeOutput {
            n: q.n(),
            facets: facet_lists(q),
            d: q.dims().to_vec(),
            r: q.attach_dims().to_vec(),
            r_min: q.r_min(),
        }
    }
}

#[derive(Serialize)]
pub struct DecomposeError {
    pub error: &'static str,
    pub reason: &'static str,
    pub chordless_cycle: Option<Vec<usize>>,
}

#[derive(Serialize)]
pub struct GapOutput {
    pub family: String,
    pub r: usize,
    pub input: String,
    pub pd: Option<usize>,
    pub max_deg: usize,
    pub gap: i64,
    pub notes: Vec<String>,
}

/// Compact JSON with sorted keys.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let v: Value = serde_json::to_value(value).expect("output types serialize");
    v.to_string()
}

/// `key  value` lines for terminal reading.
pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let v: Value = serde_json::to_value(value).expect("output types serialize");
    let Value::Object(map) = v else {
        return v.to_string();
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in &map {
        let shown = match v {
            Value::Null => "-".to_string(),
            Value::String(s) => s.clone(),
            Value::Array(items) if items.iter().all(Value::is_string) => {
                items.iter().filter_map(Value::as_str).collect::<Vec<_>>().join("; ")
            }
            other => other.to_string(),
        };
        out.push_str(&format!("{k:<width$}  {shown}\n"));
    }
    out
}
