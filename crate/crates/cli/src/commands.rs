use std::fmt::Write as _;
use std::fs;

use critgroup::brauer::{brauer_tensor_rich, eigen_check, gaetz_cardinality, BrauerTable};
use critgroup::catalog::{all_group_algebras, group_algebra, radford, taft, CatalogEntry};
use critgroup::chipfire::{
    burning_config, burning_config_for_matrix, is_avalanche_finite, is_recurrent_with,
    stabilize_with, ChipConfig, StabilizeOptions,
};
use critgroup::critical::{critical_group, eigenvalue_cardinality, rank_one_update, regular_closed_form};
use critgroup::linalg::smith_normal_form;
use critgroup::rep::{mckay_matrix, regular_class, validate, ModuleClass, RepDatum, ValidationReport};
use critgroup::richness::{finiteness_report, reduced_laplacian};
use critgroup::schema::{class_from_json, parse_input};
use critgroup::{Error, Int};
use serde_json::{json, Value};

use crate::output::{self, indent, join};
use crate::{Format, ModuleArg, Source};

pub const EXIT_VALIDATION: u8 = 1;
pub const EXIT_MALFORMED: u8 = 2;
pub const EXIT_DISAGREEMENT: u8 = 3;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
    /// Partial output printed before the error.
    pub report: Option<String>,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
            report: None,
        }
    }

    fn malformed(message: impl Into<String>) -> Self {
        Self::new(EXIT_MALFORMED, message)
    }

    fn disagreement(message: impl Into<String>) -> Self {
        Self::new(EXIT_DISAGREEMENT, message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::InternalConsistency(_) | Error::EquivalenceViolation(_) => EXIT_DISAGREEMENT,
            Error::Json(_)
            | Error::InvalidInput(_)
            | Error::InvalidParameters(_)
            | Error::UnknownKey(_)
            | Error::UnknownModule(_)
            | Error::LengthMismatch { .. }
            | Error::DimensionMismatch(_)
            | Error::NotSquare { .. }
            | Error::EmptyMatrix
            | Error::BrauerTable(_)
            | Error::NonIntegralFusion { .. }
            | Error::NegativeMultiplicity { .. }
            | Error::MissingCartan => EXIT_MALFORMED,
            _ => EXIT_VALIDATION,
        };
        Failure::new(code, e.to_string())
    }
}

type Outcome = Result<String, Failure>;

struct Loaded {
    rep: RepDatum,
    brauer: Option<BrauerTable>,
}

fn builtin_entry(key: &str, n: Option<usize>, m: Option<usize>) -> Result<CatalogEntry, Failure> {
    let need = |name: &str, v: Option<usize>| {
        v.ok_or_else(|| Failure::malformed(format!("--builtin {key} needs --{name}")))
    };
    Ok(match key {
        "taft" => taft(need("n", n)?, need("m", m)?)?,
        "radford" => radford(need("n", n)?, need("m", m)?)?,
        _ => group_algebra(key)?,
    })
}

/// Loads the datum; files are validated unless `check` is false. Bundled
/// data is validated when it is built.
fn load(source: &Source, check: bool) -> Result<Loaded, Failure> {
    match (&source.builtin, &source.input) {
        (Some(key), None) => {
            let entry = builtin_entry(key, source.n, source.m)?;
            Ok(Loaded {
                rep: entry.datum,
                brauer: entry.brauer,
            })
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::malformed(format!("reading {}: {e}", path.display())))?;
            let (rep, brauer) = parse_input(&text)?;
            if check {
                let report = validate(&rep);
                if !report.all_passed() {
                    return Err(Failure {
                        report: Some(report.to_string()),
                        ..Failure::new(EXIT_VALIDATION, format!("{} failed validation", rep.label))
                    });
                }
            }
            Ok(Loaded { rep, brauer })
        }
        _ => Err(Failure::malformed("give exactly one of --builtin or --input")),
    }
}

fn parse_ints(text: &str) -> Result<Vec<Int>, Failure> {
    text.split(',')
        .map(|x| {
            x.trim()
                .parse::<Int>()
                .map_err(|_| Failure::malformed(format!("`{}` is not an integer", x.trim())))
        })
        .collect()
}

fn select_module(rep: &RepDatum, arg: &ModuleArg) -> Result<(String, ModuleClass), Failure> {
    let v = match (&arg.module, &arg.class) {
        (Some(name), None) => (name.clone(), rep.module_by_label(name)?),
        (None, Some(text)) if text.trim_start().starts_with('{') => {
            ("V".to_string(), class_from_json(text)?)
        }
        (None, Some(text)) => ("V".to_string(), ModuleClass::new(parse_ints(text)?)?),
        _ => return Err(Failure::malformed("give exactly one of --module or --class")),
    };
    v.1.check_for(rep)?;
    Ok(v)
}

fn describe_cardinality(x: &Option<Int>) -> String {
    x.as_ref().map_or_else(|| "infinite".to_string(), Int::to_string)
}

pub fn compute(source: &Source, module: &ModuleArg, format: Format) -> Outcome {
    let Loaded { rep, brauer } = load(source, true)?;
    let (name, v) = select_module(&rep, module)?;
    let res = critical_group(&rep, &v)?;
    let m = &mckay_matrix(&rep, &v)?;
    let eigen = if res.finite {
        Some(eigenvalue_cardinality(&rep, &v)?)
    } else {
        None
    };
    let gaetz = match &brauer {
        Some(table) => Some(match gaetz_cardinality(table, &v) {
            Ok(x) => Some(x),
            Err(Error::KInfinite(_)) => None,
            Err(e) => return Err(e.into()),
        }),
        None => None,
    };
    let mut disagreements = Vec::new();
    if eigen != res.cardinality {
        disagreements.push(format!(
            "Smith form gives {}, eigenvalues give {}",
            describe_cardinality(&res.cardinality),
            describe_cardinality(&eigen)
        ));
    }
    if let Some(g) = &gaetz {
        if *g != res.cardinality {
            disagreements.push(format!(
                "Smith form gives {}, Brauer characters give {}",
                describe_cardinality(&res.cardinality),
                describe_cardinality(g)
            ));
        }
    }

    let text = match format {
        Format::Json => output::pretty(&json!({
            "datum": rep.label,
            "module": name,
            "class": output::ints(v.multiplicities()),
            "dimension": output::int(&v.dimension(&rep)?),
            "mckay_matrix": output::matrix(m),
            "laplacian": output::matrix(&res.laplacian),
            "smith_invariants": output::ints(&res.smith_diagonal),
            "nullity": res.nullity,
            "finite": res.finite,
            "critical_group": output::group(&res.group),
            "cardinality": {
                "smith": output::opt_int(&res.cardinality),
                "eigenvalues": output::opt_int(&eigen),
                "brauer": gaetz.as_ref().map_or(Value::Null, output::opt_int),
            },
            "consistent": disagreements.is_empty(),
        })),
        Format::Text => {
            let mut t = String::new();
            writeln!(t, "datum: {}", rep.label).unwrap();
            writeln!(t, "module {name}: class {v}, dimension {}", v.dimension(&rep)?).unwrap();
            writeln!(t, "M_V:\n{}", indent(&m.to_string())).unwrap();
            writeln!(t, "L_V = nI - M_V:\n{}", indent(&res.laplacian.to_string())).unwrap();
            writeln!(t, "Smith invariants of L_V: {}", join(&res.smith_diagonal)).unwrap();
            let suffix = if res.finite { "" } else { " (infinite)" };
            writeln!(t, "K(V) ≅ {}{suffix}", res.group).unwrap();
            writeln!(t, "|K(V)| by Smith form: {}", describe_cardinality(&res.cardinality)).unwrap();
            writeln!(t, "|K(V)| by eigenvalues of L_V: {}", describe_cardinality(&eigen)).unwrap();
            if let Some(g) = &gaetz {
                writeln!(t, "|K(V)| by Brauer characters: {}", describe_cardinality(g)).unwrap();
            }
            t
        }
    };
    if disagreements.is_empty() {
        Ok(text)
    } else {
        Err(Failure {
            report: Some(text),
            ..Failure::disagreement(disagreements.join("; "))
        })
    }
}

pub fn regular(source: &Source, format: Format) -> Outcome {
    let Loaded { rep, .. } = load(source, true)?;
    let gamma = rep.gamma();
    let d = rep.s_dot_p();
    let closed = regular_closed_form(&gamma, &d, rep.num_simples())?;
    let via_fusion = critical_group(&rep, &regular_class(&rep))?.group;
    let via_rank_one = smith_normal_form(&rank_one_update(&rep.s, &rep.p)?)?
        .cokernel()
        .without_free_summand()
        .ok_or_else(|| Failure::disagreement("cokernel of dI - p s^T has no free summand"))?;
    let agree = closed == via_fusion && closed == via_rank_one;
    let text = match format {
        Format::Json => output::pretty(&json!({
            "datum": rep.label,
            "gamma": output::int(&gamma),
            "d": output::int(&d),
            "num_simples": rep.num_simples(),
            "closed_form": output::group(&closed),
            "smith_regular_laplacian": output::group(&via_fusion),
            "smith_rank_one": output::group(&via_rank_one),
            "consistent": agree,
        })),
        Format::Text => {
            let mut t = String::new();
            writeln!(t, "datum: {}", rep.label).unwrap();
            writeln!(t, "gcd(p) = {gamma}, d = s^T p = {d}, simples: {}", rep.num_simples()).unwrap();
            writeln!(t, "closed form: {closed}").unwrap();
            writeln!(t, "Smith form of L_A: {via_fusion}").unwrap();
            writeln!(t, "Smith form of dI - p s^T: {via_rank_one}").unwrap();
            writeln!(t, "K(A) ≅ {closed}").unwrap();
            t
        }
    };
    if agree {
        Ok(text)
    } else {
        Err(Failure {
            report: Some(text),
            ..Failure::disagreement("closed form and Smith form disagree")
        })
    }
}

fn brauer_checks(rep: &RepDatum, table: &BrauerTable) -> Result<ValidationReport, Failure> {
    let mut report = ValidationReport::default();
    report.push("Brauer identity column = s", table.identity_column() == rep.s, None);
    let sizes_match = table.num_classes() == rep.num_simples();
    report.push("Brauer table size = number of simples", sizes_match, None);
    if !sizes_match {
        return Ok(report);
    }
    report.push(
        "gcd(p) = Sylow order",
        critgroup::brauer::sylow_gcd_check(table, rep),
        Some(format!("gcd(p) = {}, Sylow order {}", rep.gamma(), table.sylow_order)),
    );
    if rep.cartan.is_some() {
        for i in 0..rep.num_simples() {
            let v = ModuleClass::unit(rep.num_simples(), i);
            let eig = eigen_check(table, rep, &v)?;
            report.push(
                format!("eigenvectors of M_{}", rep.simple_label(i)),
                eig.all_passed(),
                None,
            );
        }
    }
    Ok(report)
}

pub fn verify(source: &Source, format: Format) -> Outcome {
    let Loaded { rep, brauer } = load(source, false)?;
    let mut report = validate(&rep);
    if let Some(table) = &brauer {
        report.extend(brauer_checks(&rep, table)?);
    }
    let text = match format {
        Format::Json => output::pretty(&json!({
            "datum": rep.label,
            "passed": report.all_passed(),
            "checks": report.checks.iter().map(|c| json!({
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let verdict = if report.all_passed() { "all checks passed" } else { "some checks failed" };
            format!("datum: {}\n{report}{verdict}\n", rep.label)
        }
    };
    if report.all_passed() {
        Ok(text)
    } else {
        Err(Failure {
            report: Some(text),
            ..Failure::new(EXIT_VALIDATION, format!("{} failed validation", rep.label))
        })
    }
}

pub fn finiteness(source: &Source, module: &ModuleArg, format: Format) -> Outcome {
    let Loaded { rep, brauer } = load(source, true)?;
    let (name, v) = select_module(&rep, module)?;
    let report = finiteness_report(&rep, &v)?;
    let by_brauer = brauer
        .as_ref()
        .map(|t| brauer_tensor_rich(t, &v))
        .transpose()?;
    let agree = by_brauer.is_none_or(|b| b == report.tensor_rich);
    let text = match format {
        Format::Json => output::pretty(&json!({
            "datum": rep.label,
            "module": name,
            "class": output::ints(v.multiplicities()),
            "nonsingular_m_matrix": report.nonsingular_m_matrix,
            "reduced_nonsingular": report.reduced_nonsingular,
            "nullity_one": report.nullity_one,
            "k_finite": report.k_finite,
            "tensor_rich": report.tensor_rich,
            "witness_t": report.witness_t,
            "brauer_tensor_rich": by_brauer,
            "consistent": agree,
        })),
        Format::Text => {
            let mut t = String::new();
            writeln!(t, "datum: {}", rep.label).unwrap();
            writeln!(t, "module {name}: class {v}").unwrap();
            let rows = [
                ("reduced Laplacian is a nonsingular M-matrix", report.nonsingular_m_matrix),
                ("reduced Laplacian is nonsingular", report.reduced_nonsingular),
                ("L_V has nullity one", report.nullity_one),
                ("K(V) is finite", report.k_finite),
                ("V is tensor-rich", report.tensor_rich),
            ];
            for (label, value) in rows {
                writeln!(t, "  {label}: {value}").unwrap();
            }
            if let Some(w) = report.witness_t {
                writeln!(t, "  least t with V^0 ⊕ ... ⊕ V^t rich: {w}").unwrap();
            }
            if let Some(b) = by_brauer {
                writeln!(t, "  tensor-rich by Brauer characters: {b}").unwrap();
            }
            t
        }
    };
    if agree {
        Ok(text)
    } else {
        Err(Failure {
            report: Some(text),
            ..Failure::disagreement("Brauer character test disagrees with reachability")
        })
    }
}

fn step_limit() -> Result<u64, Failure> {
    match std::env::var("CRITGROUP_STEP_LIMIT") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::malformed(format!("CRITGROUP_STEP_LIMIT=`{s}` is not a count"))),
        Err(_) => Ok(StabilizeOptions::default().step_limit),
    }
}

pub fn chipfire(source: &Source, module: &ModuleArg, config: Option<&str>, format: Format) -> Outcome {
    let Loaded { rep, .. } = load(source, true)?;
    let (name, v) = select_module(&rep, module)?;
    let l = reduced_laplacian(&rep, &v)?;
    if !is_avalanche_finite(&l) {
        return Err(Failure::new(
            EXIT_VALIDATION,
            format!("reduced Laplacian of {name} is not avalanche-finite ({name} is not tensor-rich)"),
        ));
    }
    let (burning, burning_source) = if rep.is_semisimple() {
        (burning_config(&rep, &v)?, "trivial column of M_V")
    } else {
        (burning_config_for_matrix(&l)?, "L applied to a scaled positive solution of Lx = 1")
    };
    let initial = match config {
        Some(text) => ChipConfig::new(parse_ints(text)?)?,
        None => ChipConfig::new(
            (0..l.rows())
                .map(|i| &l[(i, i)] - Int::from(1))
                .collect(),
        )?,
    };
    let opts = StabilizeOptions {
        step_limit: step_limit()?,
        check_avalanche_finite: false,
    };
    let record = stabilize_with(&l, &initial, &opts)?;
    let recurrent = is_recurrent_with(&l, &burning, &record.stable, &opts)?;
    let total: Int = record.firings.iter().sum();
    Ok(match format {
        Format::Json => output::pretty(&json!({
            "datum": rep.label,
            "module": name,
            "reduced_laplacian": output::matrix(&l),
            "burning_config": output::ints(burning.chips()),
            "initial": output::ints(initial.chips()),
            "stable": output::ints(record.stable.chips()),
            "firings": output::ints(&record.firings),
            "total_firings": output::int(&total),
            "stable_is_recurrent": recurrent,
            "semisimple": rep.is_semisimple(),
        })),
        Format::Text => {
            let mut t = String::new();
            writeln!(t, "datum: {}", rep.label).unwrap();
            writeln!(t, "module {name}: class {v}").unwrap();
            writeln!(t, "reduced Laplacian:\n{}", indent(&l.to_string())).unwrap();
            writeln!(t, "burning configuration ({burning_source}): {burning}").unwrap();
            writeln!(t, "initial: {initial}").unwrap();
            writeln!(t, "stable: {}", record.stable).unwrap();
            writeln!(t, "firings: ({}), total {total}", join(&record.firings)).unwrap();
            writeln!(t, "stable configuration is recurrent: {recurrent}").unwrap();
            if !rep.is_semisimple() {
                writeln!(
                    t,
                    "note: these dynamics model the cokernel of the reduced Laplacian, which can differ from K(V) for non-semisimple data"
                )
                .unwrap();
            }
            t
        }
    })
}

fn parse_family(spec: &str) -> Option<(&str, usize, usize)> {
    let (family, params) = spec.split_once(':')?;
    let (n, m) = params.split_once(',')?;
    Some((family, n.trim().parse().ok()?, m.trim().parse().ok()?))
}

pub fn catalog(export: Option<&str>, format: Format) -> Outcome {
    if let Some(key) = export {
        let entry = match parse_family(key) {
            Some((family @ ("taft" | "radford"), n, m)) => builtin_entry(family, Some(n), Some(m))?,
            _ => group_algebra(key)?,
        };
        let value = serde_json::to_value(entry.to_json()).map_err(Error::from)?;
        return Ok(output::pretty(&value));
    }
    let entries = all_group_algebras()?;
    Ok(match format {
        Format::Json => output::pretty(&json!({
            "group_algebras": entries.iter().map(|e| json!({
                "key": e.key,
                "label": e.datum.label,
                "num_simples": e.datum.num_simples(),
                "dim": output::int(&e.datum.dim),
                "gamma": output::int(&e.datum.gamma()),
                "provenance": e.provenance,
            })).collect::<Vec<_>>(),
            "families": [
                {"key": "taft:<n>,<m>", "requires": "m divides n"},
                {"key": "radford:<n>,<m>", "requires": "n even, n >= 2"},
            ],
        })),
        Format::Text => {
            let mut t = String::new();
            writeln!(t, "{:<16} {:>7} {:>5} {:>6}  label", "key", "simples", "dim", "gcd(p)").unwrap();
            for e in &entries {
                writeln!(
                    t,
                    "{:<16} {:>7} {:>5} {:>6}  {}",
                    e.key,
                    e.datum.num_simples(),
                    e.datum.dim,
                    e.datum.gamma(),
                    e.datum.label
                )
                .unwrap();
            }
            writeln!(t, "{:<16} Taft algebra H(n,m), m divides n", "taft:<n>,<m>").unwrap();
            writeln!(t, "{:<16} Radford algebra, n even", "radford:<n>,<m>").unwrap();
            t
        }
    })
}
