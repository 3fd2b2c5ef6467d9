//! Table rendering and the command implementations behind the `hollab`
//! binary. All numeric output is exact; torsion renders as "Z/8" tokens and
//! free parts as "Z^k". CSV and JSON outputs parse back to the same table.

use crate::error::{Error, Result};
use crate::graded::{apply_d2, dickson_algebra, dickson_coefficient, D2Rule};
use crate::homology::{computed_homology_unchecked, AbelianInvariants};
use crate::report::SuiteReport;
use crate::suites::run_suite;
use crate::tables::{closed_form_homology, closed_form_supported, mod_p_cohomology_rank};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Markdown,
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "markdown" | "md" => Ok(OutputFormat::Markdown),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::InvalidArgument(format!("unknown format {other}"))),
        }
    }
}

/// A rectangular table of strings; formats render it losslessly.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: Vec<&str>) -> Self {
        Table {
            headers: headers.into_iter().map(String::from).collect(),
            rows: vec![],
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        assert_eq!(row.len(), self.headers.len(), "ragged table row");
        self.rows.push(row);
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Markdown => self.render_markdown(),
            OutputFormat::Csv => self.render_csv(),
            OutputFormat::Json => serde_json::to_string_pretty(self).expect("table serializes"),
        }
    }

    pub fn render_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("| {} |\n", self.headers.join(" | ")));
        out.push_str(&format!(
            "|{}|\n",
            self.headers
                .iter()
                .map(|_| " --- ")
                .collect::<Vec<_>>()
                .join("|")
        ));
        for row in &self.rows {
            out.push_str(&format!("| {} |\n", row.join(" | ")));
        }
        out
    }

    pub fn render_csv(&self) -> String {
        let mut wtr = csv::Writer::from_writer(vec![]);
        wtr.write_record(&self.headers).expect("csv write");
        for row in &self.rows {
            wtr.write_record(row).expect("csv write");
        }
        String::from_utf8(wtr.into_inner().expect("csv flush")).expect("utf8")
    }

    pub fn parse_csv(s: &str) -> Result<Table> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(true)
            .from_reader(s.as_bytes());
        let headers = rdr
            .headers()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?
            .iter()
            .map(String::from)
            .collect();
        let mut rows = Vec::new();
        for record in rdr.records() {
            let record = record.map_err(|e| Error::InvalidArgument(e.to_string()))?;
            rows.push(record.iter().map(String::from).collect());
        }
        Ok(Table { headers, rows })
    }

    pub fn parse_json(s: &str) -> Result<Table> {
        serde_json::from_str(s).map_err(|e| Error::InvalidArgument(e.to_string()))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HomologyMode {
    Computed,
    Closed,
    Both,
}

impl std::str::FromStr for HomologyMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "computed" => Ok(HomologyMode::Computed),
            "closed" => Ok(HomologyMode::Closed),
            "both" => Ok(HomologyMode::Both),
            other => Err(Error::InvalidArgument(format!("unknown mode {other}"))),
        }
    }
}

/// The homology table command: integer homology of Hol(Z_{p^r}) per degree.
/// Returns the table plus an all-agree flag (always true unless mode=both
/// finds a discrepancy).
pub fn cmd_homology(p: u64, r: u32, qmax: usize, mode: HomologyMode) -> Result<(Table, bool)> {
    if !closed_form_supported(p, r) {
        return Err(Error::NoClosedForm(format!("p = {p}, r = {r}")));
    }
    let computed = match mode {
        HomologyMode::Closed => None,
        _ => Some(computed_homology_unchecked(p, r, qmax)?),
    };
    let closed: Option<Vec<AbelianInvariants>> = match mode {
        HomologyMode::Computed => None,
        _ => Some(
            (0..=qmax)
                .map(|q| closed_form_homology(p, r, q))
                .collect::<Result<_>>()?,
        ),
    };
    let mut all_agree = true;
    let mut table = match mode {
        HomologyMode::Computed => Table::new(vec!["q", "H_q (computed)"]),
        HomologyMode::Closed => Table::new(vec!["q", "H_q (closed form)"]),
        HomologyMode::Both => Table::new(vec![
            "q",
            "H_q (computed)",
            "H_q (closed form)",
            "agreement",
        ]),
    };
    for q in 0..=qmax {
        let row = match mode {
            HomologyMode::Computed => {
                vec![q.to_string(), computed.as_ref().unwrap()[q].to_string()]
            }
            HomologyMode::Closed => {
                vec![q.to_string(), closed.as_ref().unwrap()[q].to_string()]
            }
            HomologyMode::Both => {
                let a = &computed.as_ref().unwrap()[q];
                let b = &closed.as_ref().unwrap()[q];
                let agree = a == b;
                all_agree &= agree;
                vec![
                    q.to_string(),
                    a.to_string(),
                    b.to_string(),
                    if agree { "agree" } else { "DISAGREE" }.to_string(),
                ]
            }
        };
        table.push(row);
    }
    Ok((table, all_agree))
}

/// Mod-p cohomology ranks per degree from the closed formulas.
pub fn cmd_cohomology_ranks(p: u64, r: u32, qmax: usize) -> Result<Table> {
    let mut table = Table::new(vec!["q", "dim H^q"]);
    for q in 0..=qmax {
        table.push(vec![
            q.to_string(),
            mod_p_cohomology_rank(p, r, q)?.to_string(),
        ]);
    }
    Ok(table)
}

/// The Dickson coefficient and its transgression image for the given mode.
pub fn cmd_dickson(n: usize, p: u64, mode: &str) -> Result<String> {
    let rule = match (mode, p) {
        ("r3", 2) => D2Rule::UX2,
        ("rgt3", 2) => D2Rule::UZ,
        ("odd", _) if p % 2 == 1 => D2Rule::UZ,
        _ => {
            return Err(Error::InvalidArgument(format!(
                "mode {mode} does not apply at p = {p} (use r3/rgt3 for p = 2, odd otherwise)"
            )))
        }
    };
    let alg = dickson_algebra(n, p);
    let d = dickson_coefficient(n, p)?;
    let image = apply_d2(&d, n, p, rule)?;
    let mut out = String::new();
    out.push_str(&format!(
        "coefficient of t over GL({n}, F_{p}): {}\n",
        alg.render(&d)
    ));
    out.push_str(&format!("d2 image ({mode}): {}\n", alg.render(&image)));
    out.push_str(&format!(
        "nonzero: {}\n",
        if image.is_zero() { "no" } else { "yes" }
    ));
    Ok(out)
}

/// Congruence-subgroup checks; `which` is one of
/// all | orders | omega1 | ppower | bracket | structure | bockstein | mike | powerful.
pub fn cmd_congruence(n: usize, k: u32, p: u64, which: &str) -> Result<(Table, bool)> {
    use crate::congruence::*;
    let params = GammaParams { n, k, p };
    let mut table = Table::new(vec!["check", "status", "detail"]);
    let mut all_ok = true;
    let push = |table: &mut Table, name: &str, ok: bool, detail: String| {
        table.push(vec![
            name.to_string(),
            if ok { "pass" } else { "fail" }.to_string(),
            detail,
        ]);
    };
    let want = |w: &str| which == "all" || which == w;
    if want("orders") {
        let formula = params.order();
        let enumerated = gamma_enumerate(&params).map(|e| e.len());
        let ok = matches!(&enumerated, Ok(c) if num_bigint::BigInt::from(*c) == formula);
        all_ok &= ok;
        push(
            &mut table,
            "orders",
            ok,
            format!("formula {formula}, enumerated {enumerated:?}"),
        );
    }
    if want("omega1") {
        let ok = omega1_and_kernel_check(&params)?;
        all_ok &= ok;
        push(
            &mut table,
            "omega1",
            ok,
            "exponent-p = kernel = central".into(),
        );
    }
    if want("ppower") && k >= 1 {
        use crate::holomorph::HolElement;
        let id = HolElement::identity(n, params.modulus());
        let pow = |g: &HolElement| {
            let mut acc = HolElement::identity(n, g.modulus());
            for _ in 0..p {
                acc = acc.mul(g);
            }
            acc
        };
        let omega: Vec<HolElement> = gamma_enumerate(&params)?
            .into_iter()
            .filter(|g| pow(g) == id)
            .collect();
        let images: std::collections::HashSet<_> = omega
            .iter()
            .map(|g| p_power_map(&params, g))
            .collect::<Result<_>>()?;
        let ok = images.len() == omega.len();
        all_ok &= ok;
        push(
            &mut table,
            "ppower",
            ok,
            format!(
                "{} exponent-p elements, {} images",
                omega.len(),
                images.len()
            ),
        );
    }
    if want("bracket") {
        let basis = lie_basis(n, p);
        let mut ok = true;
        for a in &basis {
            for b in &basis {
                ok &= bracket(a, b) == bracket_via_commutator(a, b);
            }
        }
        all_ok &= ok;
        push(
            &mut table,
            "bracket",
            ok,
            "basis pairs vs commutators".into(),
        );
    }
    if want("structure") {
        let ok = structure_constants(n, p).is_ok();
        all_ok &= ok;
        push(&mut table, "structure", ok, "delta table vs bracket".into());
    }
    if want("bockstein") {
        let sc = structure_constants(n, p)?;
        let (ea, pa) = bockstein_on_generators(n, p);
        let (eb, pb) = bockstein_on_generators_generic(&sc);
        let alg = bockstein_algebra(n, p);
        let mut square_zero = true;
        for idx in 0..alg.exterior.len() {
            square_zero &= bockstein(&bockstein(&alg.exterior_gen(idx), n, p), n, p).is_zero();
        }
        for idx in 0..alg.polynomial.len() {
            square_zero &= bockstein(&bockstein(&alg.polynomial_gen(idx), n, p), n, p).is_zero();
        }
        let ok = ea == eb && pa == pb && square_zero;
        all_ok &= ok;
        push(
            &mut table,
            "bockstein",
            ok,
            "two routes agree and beta^2 = 0 on generators".into(),
        );
    }
    if want("mike") {
        let mut ok = true;
        if p % 2 == 1 {
            let modulus = crate::util::pow_u64(p, k + 1, u64::MAX);
            for a in 0..modulus / (p * p).max(1) {
                ok &= mike_lemma_solve(p, k, a, PowerShape::PthPower).is_ok();
            }
        } else if k >= 2 {
            let modulus = 1u64 << (k + 1);
            for a in 0..modulus / 8 {
                ok &= mike_lemma_solve(2, k, a, PowerShape::Square).is_ok();
            }
            for a in 0..(modulus / 16).max(1) {
                ok &= mike_lemma_solve(2, k, a, PowerShape::FourthPower).is_ok();
            }
        }
        all_ok &= ok;
        push(&mut table, "mike", ok, "power congruences solvable".into());
    }
    if want("powerful") {
        let ok = almost_powerfully_embedded_check(&params)?;
        all_ok &= ok;
        push(
            &mut table,
            "powerful",
            ok,
            "commutators inside power subgroups".into(),
        );
    }
    if table.rows.is_empty() {
        return Err(Error::InvalidArgument(format!("unknown check {which}")));
    }
    Ok((table, all_ok))
}

/// Runs one suite (or all) and renders per the format.
pub fn cmd_verify(suite: &str, seed: u64, format: OutputFormat) -> Result<(String, bool)> {
    let reports: Vec<SuiteReport> = if suite == "all" {
        crate::suites::run_all_suites(seed)?
    } else {
        vec![run_suite(suite, seed)?]
    };
    let all_pass = reports.iter().all(SuiteReport::all_pass);
    let rendered = match format {
        OutputFormat::Json => {
            let values: Vec<serde_json::Value> = reports
                .iter()
                .map(|r| serde_json::to_value(r).expect("report serializes"))
                .collect();
            serde_json::to_string_pretty(&values).expect("reports serialize")
        }
        _ => reports
            .iter()
            .map(SuiteReport::render_text)
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Ok((rendered, all_pass))
}
