//! `dedekind`: prime splitting, index divisors and order arithmetic from the
//! command line.
//!
//! Exit status: 0 on success, 1 when a verification check fails, 2 for
//! unusable input (parse errors, composite moduli, exceeded bounds).

use std::io::IsTerminal;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dedekind::examples::{maximal_cubic_order, run_paper_checks};
use dedekind::ideals::{factor_p_in_order_with_bound, factorization_shape};
use dedekind::indexform::{common_value_divisor, index_form};
use dedekind::orders::{maximal_order_with, order_from_polynomial, MaximalOrder, MaximalOrderBounds, Order};
use dedekind::{
    assign_prime_functions, common_index_divisor, cubic_family, factor_prime_via_polynomial,
    index_divisible, Error, PrimeModulus, SplittingShape, ZPoly,
};
use serde::Serialize;
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(name = "dedekind", version, about = "Prime splitting and index divisors in number fields")]
struct Cli {
    /// Print a JSON report instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the randomized factorization step (results do not depend on it)
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Trial-division bound for discriminants
    #[arg(long, global = true, default_value_t = 1_000_000)]
    bound: u64,
    /// Largest p^n searched when enumerating ideals or enlarging orders
    #[arg(long, global = true, default_value_t = 10_000)]
    enum_bound: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Factor a polynomial modulo p and report the cofactor M
    FactorModP {
        poly: String,
        p: u64,
        /// Integer lifts of the factors, comma separated (default: coefficients in [0, p))
        #[arg(long, value_delimiter = ',')]
        lifts: Vec<String>,
    },
    /// Discriminant of an integer polynomial
    Discriminant { poly: String },
    /// Decide whether p divides the index of a root
    DedekindCriterion { poly: String, p: u64 },
    /// Prime ideals above p in the field of a root
    SplitPrime { poly: String, p: u64 },
    /// Whether a splitting shape forces p to divide every index
    CommonIndexDivisor {
        p: u64,
        /// Shape parts written f:e, e.g. 1:1 1:1 1:1
        parts: Vec<String>,
        /// Take the shape from the field of this polynomial instead
        #[arg(long, conflicts_with = "parts")]
        poly: Option<String>,
    },
    /// Integral basis and field discriminant
    MaximalOrder { poly: String },
    /// Index form of the maximal order (or of a cubic family order)
    IndexForm {
        #[arg(required_unless_present = "family")]
        poly: Option<String>,
        /// Use the cubic family order with parameters a,b,a',b'
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "poly")]
        family: Option<Vec<i64>>,
        /// Use the power-basis order instead of the maximal order
        #[arg(long)]
        power_basis: bool,
    },
    /// Recompute the worked examples and check every tabulated value
    PaperExamples {
        /// Replace the cubic multiplication table by a wrong one
        #[arg(long, hide = true)]
        perturb_table: bool,
    },
}

#[derive(Serialize)]
struct RunReport {
    command: String,
    inputs: Map<String, Value>,
    results: Value,
    exit_status: u8,
}

/// Results plus their text rendering.
struct Outcome {
    results: Value,
    lines: Vec<String>,
    status: u8,
}

impl Outcome {
    fn ok(results: Value, lines: Vec<String>) -> Self {
        Outcome { results, lines, status: 0 }
    }
}

fn prime(p: u64) -> Result<PrimeModulus, Error> {
    PrimeModulus::new(p)
}

fn parse_poly(s: &str) -> Result<ZPoly, Error> {
    s.parse()
}

fn bounds(cli: &Cli) -> MaximalOrderBounds {
    MaximalOrderBounds { trial_division: cli.bound, enlarge_candidates: cli.enum_bound.max(1_000_000) }
}

fn shape_json(shape: &SplittingShape) -> Value {
    serde_json::to_value(shape).expect("serializable")
}

fn table_lines(order: &Order) -> Vec<String> {
    let n = order.rank();
    let labels = order.labels();
    let mut out = Vec::new();
    for i in 1..n {
        for j in i..n {
            out.push(format!("{}*{} = {}", labels[i], labels[j], order.format_coords(&order.table()[i][j])));
        }
    }
    out
}

fn factor_mod_p(poly: &str, p: u64, lifts: &[String], seed: u64) -> Result<Outcome, Error> {
    let f = parse_poly(poly)?;
    let p = prime(p)?;
    let fbar = f.reduce_mod(p);
    let factors = fbar.factor(seed)?;
    let lifted: Vec<(ZPoly, usize)> = if lifts.is_empty() {
        factors.iter().map(|(g, e)| (ZPoly::lift(g), *e)).collect()
    } else {
        if lifts.len() != factors.len() {
            return Err(Error::Parse(format!("expected {} lifts, got {}", factors.len(), lifts.len())));
        }
        let parsed: Vec<ZPoly> = lifts.iter().map(|s| parse_poly(s)).collect::<Result<_, _>>()?;
        factors
            .iter()
            .map(|(g, e)| {
                parsed
                    .iter()
                    .find(|l| l.is_monic() && &l.reduce_mod(p) == g)
                    .map(|l| (l.clone(), *e))
                    .ok_or_else(|| Error::Parse(format!("no monic lift given for the factor {g}")))
            })
            .collect::<Result<_, _>>()?
    };
    let m = if f.is_monic() && f.degree().unwrap_or(0) > 0 { Some(f.cofactor_m(p, &lifted)?) } else { None };
    let mut lines = vec![format!("{f} mod {p}")];
    for (g, e) in &factors {
        lines.push(format!("  factor {g}  exponent {e}"));
    }
    let lift_text: Vec<String> = lifted.iter().map(|(l, _)| l.to_string()).collect();
    lines.push(format!("lifts: {}", lift_text.join(", ")));
    if let Some(m) = &m {
        lines.push(format!("M = {m}"));
    }
    let results = json!({
        "leading": fbar.leading(),
        "factors": factors.iter().map(|(g, e)| json!({"poly": g.to_string(), "e": e})).collect::<Vec<_>>(),
        "lifts": lift_text,
        "cofactor_m": m.map(|m| m.to_string()),
    });
    Ok(Outcome::ok(results, lines))
}

fn discriminant(poly: &str) -> Result<Outcome, Error> {
    let f = parse_poly(poly)?;
    let d = f.discriminant()?;
    Ok(Outcome::ok(json!({"discriminant": d.to_string()}), vec![format!("disc({f}) = {d}")]))
}

fn criterion(poly: &str, p: u64) -> Result<Outcome, Error> {
    let f = parse_poly(poly)?;
    let p = prime(p)?;
    let v = index_divisible(&f, p)?;
    let mut lines = vec![format!("{f} at p = {p}")];
    let parts: Vec<String> = v.factors.iter().map(|(g, e)| format!("({g})^{e}")).collect();
    lines.push(format!("F = {} mod {p}", parts.join(" ")));
    lines.push(format!("M = {}", v.m));
    match &v.witness {
        Some((g, e)) => lines.push(format!("{p} divides the index: {g} (exponent {e}) divides M mod {p}")),
        None => lines.push(format!("{p} does not divide the index")),
    }
    let results = json!({"verdict": serde_json::to_value(&v).expect("serializable"), "cofactor_m": v.m.to_string()});
    Ok(Outcome::ok(results, lines))
}

fn split_prime(cli: &Cli, poly: &str, p: u64) -> Result<Outcome, Error> {
    let f = parse_poly(poly)?;
    let pm = prime(p)?;
    match factor_prime_via_polynomial(&f, pm, cli.seed) {
        Ok((shape, symbols)) => {
            let cid = common_index_divisor(pm, &shape);
            let gens: Vec<String> = symbols.iter().map(|s| s.to_string()).collect();
            let mut lines = vec![format!("{p} does not divide the index of a root of {f}"), format!("shape {shape}")];
            for s in &symbols {
                lines.push(format!("  prime {s}  e={} f={}", s.e, s.f));
            }
            lines.push(format!("common index divisor: {}", cid.common_index_divisor));
            let results = json!({
                "path": "polynomial",
                "shape": shape_json(&shape),
                "generators": gens,
                "common_index_divisor": cid.common_index_divisor,
            });
            Ok(Outcome::ok(results, lines))
        }
        Err(Error::IndexDivisible(_)) => {
            let m = maximal_order_with(&f, bounds(cli))?;
            let fs = factor_p_in_order_with_bound(&m.order, pm, cli.enum_bound)?;
            let shape = factorization_shape(pm, &fs)?;
            let cid = common_index_divisor(pm, &shape);
            let mut lines = vec![
                format!("{p} divides the index of a root of {f}; factoring in the maximal order"),
                format!("basis: {}", basis_labels(&m).join(", ")),
                format!("shape {shape}"),
            ];
            for q in &fs {
                lines.push(format!("  prime {}  e={} f={}", q.ideal, q.e, q.f));
            }
            lines.push(format!("common index divisor: {}", cid.common_index_divisor));
            let results = json!({
                "path": "maximal-order",
                "basis": basis_labels(&m),
                "shape": shape_json(&shape),
                "ideals": fs.iter().map(|q| json!({
                    "basis": q.ideal.to_string(),
                    "rows": q.ideal.basis().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "e": q.e,
                    "f": q.f,
                })).collect::<Vec<_>>(),
                "common_index_divisor": cid.common_index_divisor,
            });
            Ok(Outcome::ok(results, lines))
        }
        Err(e) => Err(e),
    }
}

fn basis_labels(m: &MaximalOrder) -> Vec<String> {
    let over_root = m.order.basis_in_root_text();
    m.order.labels().iter().zip(over_root).map(|(l, r)| if l == &r { r } else { format!("{l} = {r}") }).collect()
}

fn parse_parts(p: PrimeModulus, parts: &[String]) -> Result<SplittingShape, Error> {
    let pairs: Vec<(usize, usize)> = parts
        .iter()
        .map(|s| {
            let (f, e) = s.split_once(':').unwrap_or((s.as_str(), "1"));
            match (f.trim().parse(), e.trim().parse()) {
                (Ok(f), Ok(e)) => Ok((f, e)),
                _ => Err(Error::Parse(format!("shape part {s:?} is not f:e"))),
            }
        })
        .collect::<Result<_, _>>()?;
    if pairs.is_empty() {
        return Err(Error::Parse("no shape parts given".into()));
    }
    SplittingShape::from_pairs(p, &pairs)
}

fn common_index(cli: &Cli, p: u64, parts: &[String], poly: Option<&str>) -> Result<Outcome, Error> {
    let pm = prime(p)?;
    let shape = match poly {
        Some(poly) => {
            let m = maximal_order_with(&parse_poly(poly)?, bounds(cli))?;
            factorization_shape(pm, &factor_p_in_order_with_bound(&m.order, pm, cli.enum_bound)?)?
        }
        None => parse_parts(pm, parts)?,
    };
    let report = common_index_divisor(pm, &shape);
    let assignment = assign_prime_functions(pm, &shape);
    let mut lines = vec![format!("shape {shape} at p = {p}")];
    for s in &report.supply {
        lines.push(format!("  degree {}: need {}, have {}", s.degree, s.required, s.available));
    }
    lines.push(format!("common index divisor: {}", report.common_index_divisor));
    if let Some(a) = &assignment {
        let shown: Vec<String> = a.iter().map(|g| g.to_string()).collect();
        lines.push(format!("prime functions: {}", shown.join(", ")));
    }
    let results = json!({
        "shape": shape_json(&shape),
        "report": serde_json::to_value(&report).expect("serializable"),
        "prime_functions": assignment.map(|a| a.iter().map(|g| g.to_string()).collect::<Vec<_>>()),
    });
    Ok(Outcome::ok(results, lines))
}

fn maximal(cli: &Cli, poly: &str) -> Result<Outcome, Error> {
    let f = parse_poly(poly)?;
    let m = maximal_order_with(&f, bounds(cli))?;
    let basis = basis_labels(&m);
    let table = table_lines(&m.order);
    let mut lines = vec![
        format!("polynomial discriminant {}", m.polynomial_discriminant),
        format!("field discriminant {}", m.discriminant),
        format!("index of a root {}", m.index),
        format!("basis: {}", basis.join(", ")),
    ];
    lines.extend(table.iter().map(|l| format!("  {l}")));
    let results = json!({
        "polynomial_discriminant": m.polynomial_discriminant.to_string(),
        "field_discriminant": m.discriminant.to_string(),
        "index": m.index.to_string(),
        "basis": basis,
        "table": table,
    });
    Ok(Outcome::ok(results, lines))
}

fn index_form_cmd(cli: &Cli, poly: Option<&str>, family: Option<&[i64]>, power_basis: bool) -> Result<Outcome, Error> {
    let order = match (poly, family) {
        (_, Some(&[a, b, a1, b1])) => cubic_family(a, b, a1, b1)?.order,
        (Some(poly), _) if power_basis => order_from_polynomial(&parse_poly(poly)?)?,
        (Some(poly), _) => maximal_order_with(&parse_poly(poly)?, bounds(cli))?.order,
        (_, Some(other)) => return Err(Error::Parse(format!("--family takes 4 parameters, got {}", other.len()))),
        _ => return Err(Error::Parse("give a polynomial or --family a,b,a',b'".into())),
    };
    let form = index_form(&order)?;
    let mut divisors = Vec::new();
    for p in [2u64, 3, 5, 7] {
        match common_value_divisor(&form, prime(p)?) {
            Ok(true) => divisors.push(p),
            Ok(false) | Err(Error::BoundExceeded(_)) => {}
            Err(e) => return Err(e),
        }
    }
    let lines = vec![
        format!("basis: {}", order.labels().join(", ")),
        format!("index form: {form}"),
        format!("primes below 10 dividing every value: {divisors:?}"),
    ];
    let results = json!({
        "basis": order.labels(),
        "form": form.to_string(),
        "degree": form.total_degree(),
        "common_value_divisors": divisors,
    });
    Ok(Outcome::ok(results, lines))
}

fn paper_examples(perturb: bool, color: bool) -> Result<Outcome, Error> {
    let order = if perturb { cubic_family(2, 2, 3, -1)?.order } else { maximal_cubic_order() };
    let checks = run_paper_checks(&order);
    let failed = checks.iter().filter(|c| !c.passed).count();
    let (ok, bad) = if color { ("\x1b[32mok\x1b[0m  ", "\x1b[31mFAIL\x1b[0m") } else { ("ok  ", "FAIL") };
    let mut lines: Vec<String> = checks
        .iter()
        .map(|c| {
            if c.passed {
                format!("{ok} {}: {}", c.name, c.got)
            } else {
                format!("{bad} {}: expected {}, got {}", c.name, c.expected, c.got)
            }
        })
        .collect();
    lines.push(format!("{} checks, {} failed", checks.len(), failed));
    let results = json!({
        "checks": serde_json::to_value(&checks).expect("serializable"),
        "failed": checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect::<Vec<_>>(),
    });
    Ok(Outcome { results, lines, status: if failed == 0 { 0 } else { 1 } })
}

fn inputs(cli: &Cli) -> (String, Map<String, Value>) {
    let mut m = Map::new();
    let name = match &cli.command {
        Command::FactorModP { poly, p, lifts } => {
            m.insert("poly".into(), json!(poly));
            m.insert("p".into(), json!(p));
            if !lifts.is_empty() {
                m.insert("lifts".into(), json!(lifts));
            }
            "factor-mod-p"
        }
        Command::Discriminant { poly } => {
            m.insert("poly".into(), json!(poly));
            "discriminant"
        }
        Command::DedekindCriterion { poly, p } => {
            m.insert("poly".into(), json!(poly));
            m.insert("p".into(), json!(p));
            "dedekind-criterion"
        }
        Command::SplitPrime { poly, p } => {
            m.insert("poly".into(), json!(poly));
            m.insert("p".into(), json!(p));
            "split-prime"
        }
        Command::CommonIndexDivisor { p, parts, poly } => {
            m.insert("p".into(), json!(p));
            match poly {
                Some(poly) => m.insert("poly".into(), json!(poly)),
                None => m.insert("parts".into(), json!(parts)),
            };
            "common-index-divisor"
        }
        Command::MaximalOrder { poly } => {
            m.insert("poly".into(), json!(poly));
            "maximal-order"
        }
        Command::IndexForm { poly, family, power_basis } => {
            if let Some(poly) = poly {
                m.insert("poly".into(), json!(poly));
            }
            if let Some(f) = family {
                m.insert("family".into(), json!(f));
            }
            m.insert("power_basis".into(), json!(power_basis));
            "index-form"
        }
        Command::PaperExamples { perturb_table } => {
            if *perturb_table {
                m.insert("perturb_table".into(), json!(true));
            }
            "paper-examples"
        }
    };
    m.insert("seed".into(), json!(cli.seed));
    (name.to_string(), m)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let color = std::env::var_os("PLAIN_OUTPUT").is_none() && std::io::stdout().is_terminal();
    let outcome = match &cli.command {
        Command::FactorModP { poly, p, lifts } => factor_mod_p(poly, *p, lifts, cli.seed),
        Command::Discriminant { poly } => discriminant(poly),
        Command::DedekindCriterion { poly, p } => criterion(poly, *p),
        Command::SplitPrime { poly, p } => split_prime(&cli, poly, *p),
        Command::CommonIndexDivisor { p, parts, poly } => common_index(&cli, *p, parts, poly.as_deref()),
        Command::MaximalOrder { poly } => maximal(&cli, poly),
        Command::IndexForm { poly, family, power_basis } => {
            index_form_cmd(&cli, poly.as_deref(), family.as_deref(), *power_basis)
        }
        Command::PaperExamples { perturb_table } => paper_examples(*perturb_table, color && !cli.json),
    };
    let (command, inputs) = inputs(&cli);
    let (results, lines, status) = match outcome {
        Ok(o) => (o.results, o.lines, o.status),
        Err(e) => (json!({"error": e.to_string()}), vec![format!("error: {e}")], 2),
    };
    if cli.json {
        let report = RunReport { command, inputs, results, exit_status: status };
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    } else if status == 2 {
        for l in lines {
            eprintln!("{l}");
        }
    } else {
        for l in lines {
            println!("{l}");
        }
    }
    ExitCode::from(status)
}
