//! Batch front end: parse JSON inputs, dispatch to the library, print
//! deterministic tables or JSON reports.
//!
//! Exit codes: 0 success, 1 domain error (bad input data, failed
//! precondition), 2 usage error (unknown verb or flag).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num::BigInt;
use serde_json::{json, Value};

use quillen::algebra::poly::Poly;
use quillen::algebra::rational::Rational;
use quillen::genus::{evaluate_genus, l_polynomial, ManifoldDescriptor};
use quillen::ledger::{
    det_line_chern, holonomy_group, spectral_cover, twisted_det_chern, AnomalyLedger,
    SpectralCoverData,
};
use quillen::modular::{analytic_torsion, ModuliPoint, TruncationPolicy};
use quillen::surface::{WeierstrassModel, ORD_INFINITE};

#[derive(Parser)]
#[command(name = "quillen", version, about = "Signature genera, Kodaira fibers, analytic torsion, and determinant-line anomaly ledgers")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Print the weight-k signature polynomial over a common denominator
    Lgenus {
        /// Weight: the polynomial lives on 4k-manifolds
        #[arg(long)]
        k: u32,
    },
    /// Signature of a manifold given by its Pontrjagin numbers (JSON file)
    Signature {
        /// Manifold descriptor: {"k":2,"pontrjagin":{"1,1":"18","2":"9"}}
        #[arg(long)]
        input: PathBuf,
    },
    /// Fiber table, surface type, and anomaly ledger of a Weierstrass model
    SurfaceAnalyze {
        /// Model file: {"n":1,"g2":["0","-27",...],"g3":[...]}
        #[arg(long)]
        input: PathBuf,
        /// Emit a JSON report instead of the table
        #[arg(long)]
        json: bool,
    },
    /// Quadratic twist of a Weierstrass model; prints the twisted model JSON
    SurfaceTwist {
        #[arg(long)]
        input: PathBuf,
        /// Twisting polynomial, ascending coefficients: "-5,1" is t - 5
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Analytic torsion of the flat two-torus family at a moduli point
    Torsion {
        /// Point of the upper half plane, e.g. "i", "2i", "-0.4+1.2i"
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
    },
    /// Twisted determinant-line ledger and the cancellation report
    Anomaly {
        #[arg(long)]
        input: PathBuf,
        /// Rank of the twisting bundle
        #[arg(long)]
        rank: u32,
        /// Degree of the twisting bundle
        #[arg(long = "degR")]
        deg_r: u32,
        /// Emit the ledger JSON instead of the report
        #[arg(long)]
        json: bool,
    },
    /// Spectral double cover cut out by sections (a0, a2)
    Spectral {
        #[arg(long)]
        input: PathBuf,
        /// Section a0, ascending coefficients
        #[arg(long, allow_hyphen_values = true)]
        a0: String,
        /// Section a2, ascending coefficients
        #[arg(long, allow_hyphen_values = true)]
        a2: String,
        /// Degree of the twisting bundle
        #[arg(long = "degR")]
        deg_r: u32,
        /// Emit a JSON report instead of the table
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.verb) {
        Ok(report) => {
            println!("{report}");
            ExitCode::SUCCESS
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(verb: Verb) -> Result<String, String> {
    match verb {
        Verb::Lgenus { k } => Ok(lgenus_report(k)),
        Verb::Signature { input } => signature_report(&input),
        Verb::SurfaceAnalyze { input, json } => surface_report(&input, json),
        Verb::SurfaceTwist { input, q } => twist_report(&input, &q),
        Verb::Torsion { tau } => torsion_report(&tau),
        Verb::Anomaly { input, rank, deg_r, json } => anomaly_report(&input, rank, deg_r, json),
        Verb::Spectral { input, a0, a2, deg_r, json } => {
            spectral_report(&input, &a0, &a2, deg_r, json)
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn read_model(path: &PathBuf) -> Result<WeierstrassModel, String> {
    serde_json::from_str(&read_file(path)?).map_err(|e| format!("invalid model JSON: {e}"))
}

fn parse_poly(text: &str) -> Result<Poly, String> {
    let coeffs: Result<Vec<Rational>, _> = text
        .split(',')
        .map(|c| c.trim().parse::<Rational>())
        .collect();
    coeffs
        .map(Poly::new)
        .map_err(|e| format!("cannot parse polynomial \"{text}\": {e}"))
}

fn ord_text(o: u32) -> String {
    if o == ORD_INFINITE {
        "inf".to_string()
    } else {
        o.to_string()
    }
}

fn ord_json(o: u32) -> Value {
    if o == ORD_INFINITE {
        Value::Null
    } else {
        json!(o)
    }
}

fn lgenus_report(k: u32) -> String {
    let poly = l_polynomial(k);
    let mut denom = BigInt::from(1);
    for (_, c) in poly.terms() {
        denom = num::integer::lcm(denom, c.denominator().clone());
    }
    let cleared = poly.scale(&Rational::new(denom.clone(), 1));
    format!("L_{k} = ({cleared})/{denom}")
}

fn signature_report(input: &PathBuf) -> Result<String, String> {
    let manifold: ManifoldDescriptor =
        serde_json::from_str(&read_file(input)?).map_err(|e| format!("invalid manifold JSON: {e}"))?;
    let value = evaluate_genus(&manifold, &l_polynomial(manifold.dim4k()))
        .map_err(|e| e.to_string())?;
    Ok(format!("signature = {value}"))
}

/// Currents printed one per line, places sorted by their display string.
fn current_lines(ledger: &AnomalyLedger) -> Vec<String> {
    let mut lines: Vec<String> = ledger
        .currents()
        .iter()
        .map(|(place, coeff)| format!("  {coeff} [{place}]"))
        .collect();
    lines.sort();
    lines
}

fn surface_report(input: &PathBuf, json_out: bool) -> Result<String, String> {
    let m = read_model(input)?;
    let surface = m.surface_type().map_err(|e| e.to_string())?;
    let mut fibers = m.kodaira_classify().map_err(|e| e.to_string())?;
    fibers.sort_by_key(|(data, _)| data.place.to_string());
    let ledger = det_line_chern(&m).map_err(|e| e.to_string())?;

    if json_out {
        let rows: Vec<Value> = fibers
            .iter()
            .map(|(data, ty)| {
                json!({
                    "place": data.place.to_string(),
                    "ord_g2": ord_json(data.ord_g2),
                    "ord_g3": ord_json(data.ord_g3),
                    "ord_delta": data.ord_delta,
                    "fiber": ty.to_string(),
                })
            })
            .collect();
        let report = json!({
            "surface_type": surface.to_string(),
            "n": m.n(),
            "fibers": rows,
            "ledger": serde_json::to_value(&ledger).expect("ledger serializes"),
        });
        return Ok(report.to_string());
    }

    let place_width = fibers
        .iter()
        .map(|(data, _)| data.place.to_string().len())
        .chain(std::iter::once("place".len()))
        .max()
        .unwrap_or(5);
    let mut out = Vec::new();
    out.push(format!("surface type: {surface} (n = {})", m.n()));
    out.push(String::new());
    out.push(format!(
        "{:<place_width$}  ord(g2)  ord(g3)  ord(Delta)  fiber",
        "place"
    ));
    let mut degree_sum = 0u32;
    for (data, ty) in &fibers {
        degree_sum += data.ord_delta * data.place.degree();
        out.push(format!(
            "{:<place_width$}  {:>7}  {:>7}  {:>10}  {ty}",
            data.place.to_string(),
            ord_text(data.ord_g2),
            ord_text(data.ord_g3),
            data.ord_delta,
        ));
    }
    out.push(String::new());
    out.push(format!("sum of ord(Delta) * deg(place): {degree_sum}"));
    out.push("ledger currents:".to_string());
    out.extend(current_lines(&ledger));
    out.push(format!("continuous degree: {}", ledger.continuous_degree()));
    out.push(format!("total degree: {}", ledger.total_degree()));
    out.push(format!("holonomy order: {}", holonomy_group(&ledger)));
    Ok(out.join("\n"))
}

fn twist_report(input: &PathBuf, q_text: &str) -> Result<String, String> {
    let m = read_model(input)?;
    let q = parse_poly(q_text)?;
    let twisted = m.quadratic_twist(&q).map_err(|e| e.to_string())?;
    serde_json::to_string(&twisted).map_err(|e| e.to_string())
}

fn torsion_report(tau_text: &str) -> Result<String, String> {
    let tau: ModuliPoint = tau_text.parse().map_err(|e| format!("{e}"))?;
    let value = analytic_torsion(&tau, &TruncationPolicy::default()).map_err(|e| e.to_string())?;
    Ok(format!("torsion = {value:.11e}"))
}

fn anomaly_report(input: &PathBuf, rank: u32, deg_r: u32, json_out: bool) -> Result<String, String> {
    let m = read_model(input)?;
    let ledger = twisted_det_chern(&m, rank, deg_r).map_err(|e| e.to_string())?;
    if json_out {
        return serde_json::to_string(&ledger).map_err(|e| e.to_string());
    }
    let mut out = Vec::new();
    out.push(format!(
        "twisted determinant ledger (rank {rank}, twisting degree {deg_r})"
    ));
    out.push("currents:".to_string());
    out.extend(current_lines(&ledger));
    let cancellation = if ledger.continuous_degree() == 0 {
        "canceled"
    } else {
        "not canceled"
    };
    out.push(format!(
        "continuous part: {}; local anomaly {cancellation}",
        ledger.continuous_degree()
    ));
    out.push(format!("total degree: {}", ledger.total_degree()));
    out.push(format!("holonomy order: {}", holonomy_group(&ledger)));
    let angle = if rank == 1 {
        "ord/12".to_string()
    } else {
        format!("{rank}*ord/12")
    };
    out.push(format!(
        "holonomy phases: exp(2*pi*i*{angle}); reversed orientation: exp(-2*pi*i*{angle})"
    ));
    Ok(out.join("\n"))
}

fn spectral_report(
    input: &PathBuf,
    a0_text: &str,
    a2_text: &str,
    deg_r: u32,
    json_out: bool,
) -> Result<String, String> {
    let m = read_model(input)?;
    let sections = SpectralCoverData::new(deg_r, parse_poly(a0_text)?, parse_poly(a2_text)?)
        .map_err(|e| e.to_string())?;
    let report = spectral_cover(&m, &sections).map_err(|e| e.to_string())?;
    if json_out {
        let value = json!({
            "x_num": serde_json::to_value(&report.x.0).expect("poly serializes"),
            "x_den": serde_json::to_value(&report.x.1).expect("poly serializes"),
            "branch": serde_json::to_value(&report.branch).expect("poly serializes"),
            "branch_degree": report.branch.degree().map(|d| d as u64),
            "branch_degree_bound": report.branch_degree_bound,
        });
        return Ok(value.to_string());
    }
    let degree = report
        .branch
        .degree()
        .map_or("none".to_string(), |d| d.to_string());
    Ok([
        format!("x = ({}) / ({})", report.x.0, report.x.1),
        format!("branch = {}", report.branch),
        format!("branch degree: {degree} (bound: {})", report.branch_degree_bound),
    ]
    .join("\n"))
}
