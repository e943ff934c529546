//! The `kl`, `enumerate`, `scan`, `geo` and `atlas` commands.

use serde::Serialize;
use sp4kl_core::arith::is_prime;
use sp4kl_core::exact::PhaseSum;
use sp4kl_core::geometric::{geometric_term, GeometricSumSpec, GeometricTotal};
use sp4kl_core::kloosterman::{
    closed_form_exponent, is_admissible, paramodular_closed_form, resolve_n, sum_over,
    EnumerationConfig, KlError,
};
use sp4kl_core::lattice::LatticeKind;
use sp4kl_core::spectral::{assemble_counting, CountingInputs};
use sp4kl_core::{CharacterPair, KloostermanSetElement, LatticeDesc, Modulus, WeylWord};

use crate::config::{CommandConfig, Format, NSpec, RunConfig};
use crate::driver::{enumerate, ordered_map};
use crate::report::{Check, ExactValue, Numeric, Report};
use crate::CliError;

/// Rendered output of a command.
pub struct Output {
    pub text: String,
    pub passed: bool,
}

fn enum_cfg(cfg: &RunConfig) -> EnumerationConfig {
    EnumerationConfig::with_budget(cfg.budget)
}

/// `N` for a query; `auto` takes the forced coordinates from the
/// admissibility condition and copies `M` elsewhere.
pub fn resolve(w: WeylWord, c: Modulus, m: [i64; 2], n: NSpec) -> [i64; 2] {
    match n {
        NSpec::Fixed(n) => n,
        NSpec::Auto => resolve_n(w, c, (m[0], m[1])).map_or(m, |(a, b)| [a, b]),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QueryJson {
    pub lattice: String,
    pub w: String,
    pub c: [u64; 2],
    pub m: [i64; 2],
    pub n: [i64; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KlResult {
    pub query: QueryJson,
    pub admissible: bool,
    pub set_size: usize,
    pub exact_value: ExactValue,
    pub numeric_value: Numeric,
    pub closed_form_match: Option<bool>,
}

/// The closed-form value for `(Γ_pa(q), w, c)` when one is tabulated.
pub fn closed_form_for(
    lattice: LatticeDesc,
    w: WeylWord,
    c: Modulus,
    n: [i64; 2],
) -> Option<PhaseSum> {
    if lattice.kind != LatticeKind::Paramodular || !is_prime(lattice.q) {
        return None;
    }
    let k = closed_form_exponent(w, lattice.q, c)?;
    paramodular_closed_form(w, lattice.q, k, (n[0], n[1])).ok()
}

pub fn kl_result(
    lattice: LatticeDesc,
    w: WeylWord,
    c: Modulus,
    m: [i64; 2],
    n: [i64; 2],
    set: &[KloostermanSetElement],
) -> KlResult {
    let chars = CharacterPair::new((m[0], m[1]), (n[0], n[1]));
    let admissible = is_admissible(w, c, chars);
    let value = if admissible {
        sum_over(set, &chars)
    } else {
        PhaseSum::zero()
    };
    let closed_form_match = if m == [1, 1] && admissible {
        closed_form_for(lattice, w, c, n).map(|cf| cf.value_eq(&value))
    } else {
        None
    };
    KlResult {
        query: QueryJson {
            lattice: lattice.to_string(),
            w: w.to_string(),
            c: [c.c1, c.c2],
            m,
            n,
        },
        admissible,
        set_size: set.len(),
        exact_value: ExactValue::of(&value),
        numeric_value: Numeric::of(&value),
        closed_form_match,
    }
}

fn trivial_bound_holds(r: &KlResult) -> bool {
    let re: f64 = r.numeric_value.re.parse().unwrap_or(f64::INFINITY);
    let im: f64 = r.numeric_value.im.parse().unwrap_or(f64::INFINITY);
    re.hypot(im) <= r.set_size as f64 + 1e-9
}

const CSV_HEADER: [&str; 14] = [
    "w",
    "c1",
    "c2",
    "m1",
    "m2",
    "n1",
    "n2",
    "admissible",
    "set_size",
    "exact_value",
    "numeric_re",
    "numeric_im",
    "trivial_bound_slack",
    "status",
];

fn csv_row(r: &KlResult) -> Vec<String> {
    let re: f64 = r.numeric_value.re.parse().unwrap_or(f64::NAN);
    let im: f64 = r.numeric_value.im.parse().unwrap_or(f64::NAN);
    vec![
        r.query.w.clone(),
        r.query.c[0].to_string(),
        r.query.c[1].to_string(),
        r.query.m[0].to_string(),
        r.query.m[1].to_string(),
        r.query.n[0].to_string(),
        r.query.n[1].to_string(),
        r.admissible.to_string(),
        r.set_size.to_string(),
        r.exact_value.compact(),
        r.numeric_value.re.clone(),
        r.numeric_value.im.clone(),
        format!("{:.12}", r.set_size as f64 - re.hypot(im)),
        "ok".into(),
    ]
}

fn budget_row(w: WeylWord, c: Modulus, m: [i64; 2], n: [i64; 2]) -> Vec<String> {
    let mut row = vec![
        w.to_string(),
        c.c1.to_string(),
        c.c2.to_string(),
        m[0].to_string(),
        m[1].to_string(),
        n[0].to_string(),
        n[1].to_string(),
    ];
    row.extend(std::iter::repeat_n(String::new(), 6));
    row.push("budget_exceeded".into());
    row
}

fn write_csv(rows: &[Vec<String>]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record(r)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv is utf-8"))
}

pub fn cmd_kl(cfg: &RunConfig) -> Result<Output, CliError> {
    let CommandConfig::Kl {
        lattice,
        w,
        c,
        m,
        n,
    } = cfg.command.clone()
    else {
        unreachable!()
    };
    let c = Modulus::new(c[0], c[1]);
    let n = resolve(w, c, m, n);
    let set = enumerate(lattice, w, c, &enum_cfg(cfg))?;
    let r = kl_result(lattice, w, c, m, n, &set);
    let mut checks = vec![Check::new(
        "trivial-bound",
        trivial_bound_holds(&r),
        format!("set size {}", r.set_size),
    )];
    if let Some(ok) = r.closed_form_match {
        checks.push(Check::new("closed-form", ok, "paramodular closed form"));
    }
    let text = match cfg.format {
        Format::Json => Report::new(cfg.clone(), &r, checks.clone()).to_json(),
        Format::Csv => write_csv(&[csv_row(&r)])?,
    };
    Ok(Output {
        text,
        passed: checks.iter().all(|c| c.passed),
    })
}

#[derive(Serialize)]
struct ElementJson {
    x: [String; 4],
    xp: [String; 4],
    gamma: Vec<Vec<String>>,
}

pub fn cmd_enumerate(cfg: &RunConfig) -> Result<Output, CliError> {
    let CommandConfig::Enumerate { lattice, w, c } = cfg.command.clone() else {
        unreachable!()
    };
    let set = enumerate(lattice, w, Modulus::new(c[0], c[1]), &enum_cfg(cfg))?;
    let coords = |u: &sp4kl_core::UnipotentCoords| {
        [
            u.x.to_string(),
            u.a.to_string(),
            u.b.to_string(),
            u.c.to_string(),
        ]
    };
    let elements: Vec<ElementJson> = set
        .iter()
        .map(|e| ElementJson {
            x: coords(&e.x),
            xp: coords(&e.xp),
            gamma: e
                .gamma
                .matrix()
                .0
                .iter()
                .map(|row| row.iter().map(|v| v.to_string()).collect())
                .collect(),
        })
        .collect();
    let checks = vec![Check::new(
        "membership",
        set.iter().all(|e| lattice.contains(&e.gamma)),
        format!("{} elements", set.len()),
    )];
    let passed = checks[0].passed;
    Ok(Output {
        text: Report::new(cfg.clone(), elements, checks).to_json(),
        passed,
    })
}

pub fn cmd_scan(cfg: &RunConfig) -> Result<Output, CliError> {
    let CommandConfig::Scan {
        lattice,
        ws,
        c1_max,
        c2_max,
        m,
        n,
    } = cfg.command.clone()
    else {
        unreachable!()
    };
    let mut ws = ws;
    ws.sort();
    ws.dedup();
    let jobs: Vec<(WeylWord, Modulus)> = ws
        .iter()
        .flat_map(|&w| {
            (1..=c1_max).flat_map(move |c1| (1..=c2_max).map(move |c2| (w, Modulus::new(c1, c2))))
        })
        .collect();
    let ecfg = enum_cfg(cfg);
    let results = ordered_map(&jobs, |&(w, c)| {
        let n = resolve(w, c, m, n);
        let r = sp4kl_core::kloosterman::enumerate_kloosterman_set(lattice, w, c, &ecfg)
            .map(|set| kl_result(lattice, w, c, m, n, &set));
        (w, c, n, r)
    });
    let mut rows = Vec::new();
    let mut json = Vec::new();
    let mut bound_ok = true;
    let mut exceeded = 0;
    for (w, c, n, r) in results {
        match r {
            Ok(r) => {
                bound_ok &= trivial_bound_holds(&r);
                rows.push(csv_row(&r));
                json.push(Some(r));
            }
            Err(KlError::BudgetExceeded { .. }) => {
                exceeded += 1;
                rows.push(budget_row(w, c, m, n));
                json.push(None);
            }
            Err(e) => return Err(e.into()),
        }
    }
    let checks = vec![
        Check::new("trivial-bound", bound_ok, format!("{} rows", rows.len())),
        Check::new(
            "budget",
            exceeded == 0,
            format!("{exceeded} rows over budget"),
        ),
    ];
    let passed = bound_ok;
    let text = match cfg.format {
        Format::Csv => write_csv(&rows)?,
        Format::Json => Report::new(cfg.clone(), json, checks).to_json(),
    };
    Ok(Output { text, passed })
}

#[derive(Serialize)]
struct GeoTermJson {
    c: [u64; 2],
    admissible: bool,
    set_size: usize,
    kl: ExactValue,
    weight: u64,
}

#[derive(Serialize)]
struct GeoJson {
    numerator: ExactValue,
    denominator: u64,
    value: Option<String>,
    numeric_numerator: Numeric,
    terms: Vec<GeoTermJson>,
}

pub fn geometric_total(
    spec: &GeometricSumSpec,
    ecfg: &EnumerationConfig,
) -> Result<GeometricTotal, KlError> {
    let chars = CharacterPair::new((1, 1), (1, 1));
    let moduli = spec.moduli();
    let terms = ordered_map(&moduli, |&c| geometric_term(spec, chars, c, ecfg))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GeometricTotal::from_terms(spec.clone(), terms))
}

pub fn cmd_geo(cfg: &RunConfig) -> Result<Output, CliError> {
    let CommandConfig::Geo { lattice, w, z } = cfg.command.clone() else {
        unreachable!()
    };
    let spec = GeometricSumSpec::new(lattice, w, z).map_err(|e| CliError::Usage(e.to_string()))?;
    let total = geometric_total(&spec, &enum_cfg(cfg))?;
    let result = GeoJson {
        numerator: ExactValue::of(&total.numerator),
        denominator: total.denominator,
        value: total.as_rational().map(|v| v.to_string()),
        numeric_numerator: Numeric::of(&total.numerator),
        terms: total
            .terms
            .iter()
            .map(|t| GeoTermJson {
                c: [t.c.c1, t.c.c2],
                admissible: t.admissible,
                set_size: t.set_size,
                kl: ExactValue::of(&t.kl),
                weight: t.weight,
            })
            .collect(),
    };
    Ok(Output {
        text: Report::new(cfg.clone(), result, Vec::new()).to_json(),
        passed: true,
    })
}

#[derive(Serialize)]
struct AtlasColumn {
    tag: char,
    count: u64,
    provenance: String,
}

#[derive(Serialize)]
struct AtlasJson {
    sigma: String,
    columns: Vec<AtlasColumn>,
    total: u64,
}

pub fn cmd_atlas(cfg: &RunConfig) -> Result<Output, CliError> {
    let CommandConfig::Atlas {
        lattice,
        sigma,
        m,
        general,
        yoshida,
        gl2,
    } = cfg.command.clone()
    else {
        unreachable!()
    };
    let inputs = CountingInputs {
        general,
        yoshida,
        gl2,
    };
    let a =
        assemble_counting(lattice, sigma, m, inputs).map_err(|e| CliError::Usage(e.to_string()))?;
    let result = AtlasJson {
        sigma: a.sigma.to_string(),
        columns: a
            .columns
            .iter()
            .map(|c| AtlasColumn {
                tag: c.tag.letter(),
                count: c.count,
                provenance: format!("{:?}", c.provenance),
            })
            .collect(),
        total: a.total,
    };
    Ok(Output {
        text: Report::new(cfg.clone(), result, Vec::new()).to_json(),
        passed: true,
    })
}
