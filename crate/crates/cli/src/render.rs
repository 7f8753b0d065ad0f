//! Text, JSON, CSV and Markdown renderings of command results.

use serde_json::{json, Value};

use isospec_core::isospectral_search::{family_report, NoncyclicReport, TableReport};
use isospec_core::spectrum::SpectralGeneratingFunction;
use isospec_core::weight_lattice::full_s;
use isospec_core::{CongruenceLattice, FamilyKind, Format, GroupFamily, RationalForm, SpectrumDescriptor};

use crate::SpaceArgs;

pub struct Out {
    pub text: String,
    pub success: bool,
}

impl Out {
    pub fn ok(text: String) -> Self {
        Self { text, success: true }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn join<T: std::fmt::Display>(items: &[T], sep: &str) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn list(items: &[i64]) -> String {
    format!("[{}]", join(items, ", "))
}

fn csv_rows(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn md_rows(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut out = format!("| {} |\n|{}\n", header.join(" | "), "---|".repeat(header.len()));
    for r in rows {
        out.push_str(&format!("| {} |\n", r.join(" | ")));
    }
    out
}

fn table(format: Option<Format>, header: &[&str], rows: Vec<Vec<String>>, json: Value, text: String) -> String {
    match format {
        None => text,
        Some(Format::Json) => pretty(&json),
        Some(Format::Csv) => csv_rows(header, rows),
        Some(Format::Markdown) => md_rows(header, rows),
    }
}

pub fn theta(l: &CongruenceLattice, coeffs: &[u128], format: Option<Format>) -> Out {
    let index = if l.family().kind() == FamilyKind::A { "norm 2k" } else { "norm k" };
    let rows = coeffs.iter().enumerate().map(|(k, c)| vec![k.to_string(), c.to_string()]).collect();
    let json = json!({
        "family": l.family().to_string(),
        "q": l.q(),
        "s": l.params().s(),
        "u": l.u(),
        "even_sublattice": l.is_even_sublattice(),
        "indexing": index,
        "coeffs": coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    });
    Out::ok(table(format, &["k", "count"], rows, json, format!("{}\n", join(coeffs, ","))))
}

pub fn rational(form: &RationalForm, format: Option<Format>) -> Out {
    let num = form.numerator();
    let rows = num.iter().enumerate().map(|(j, h)| vec![j.to_string(), h.to_string()]).collect();
    let json = json!({
        "q": form.q(),
        "n": form.rank(),
        "numerator": num.iter().map(|h| h.to_string()).collect::<Vec<_>>(),
        "denominator": format!("(1 - z^{})^{}", form.q(), form.rank() + 1),
    });
    let text = format!(
        "theta(z) = (1 - z) p(z) / (1 - z^{})^{}\np = {}\n",
        form.q(),
        form.rank() + 1,
        join(num, ",")
    );
    Out::ok(table(format, &["j", "h_j"], rows, json, text))
}

pub fn spectrum(args: &SpaceArgs, t: &SpectrumDescriptor, zeta: Option<(String, String)>, format: Option<Format>) -> Out {
    let rows: Vec<Vec<String>> = t
        .entries
        .iter()
        .map(|e| vec![e.k.to_string(), e.eigenvalue.to_string(), e.multiplicity.to_string()])
        .collect();
    let mut json = json!({
        "space": t.space.to_string(),
        "q": args.q,
        "s": args.s,
        "u": args.u,
        "entries": t.entries.iter().map(|e| json!({
            "k": e.k,
            "eigenvalue": e.eigenvalue.to_string(),
            "multiplicity": e.multiplicity.to_string(),
        })).collect::<Vec<_>>(),
    });
    let mut text: String = rows.iter().map(|r| format!("{}\n", r.join(" "))).collect();
    if let Some((exp, value)) = &zeta {
        json["zeta"] = json!({ "exponent": exp, "levels": t.entries.len(), "value": value });
        text.push_str(&format!("zeta({exp}) ~ {value}\n"));
    }
    let mut out = table(format, &["k", "eigenvalue", "multiplicity"], rows, json, text);
    if let (Some((exp, value)), Some(Format::Csv | Format::Markdown)) = (&zeta, format) {
        out.push_str(&format!("\nzeta({exp}) ~ {value}\n"));
    }
    Out::ok(out)
}

pub fn genfun(exact: Option<&SpectralGeneratingFunction>, series: &[num_bigint::BigUint], format: Option<Format>) -> Out {
    let rows = series.iter().enumerate().map(|(k, c)| vec![k.to_string(), c.to_string()]).collect();
    let mut json = json!({ "series": series.iter().map(|c| c.to_string()).collect::<Vec<_>>() });
    let mut text = format!("series = {}\n", join(series, ","));
    if let Some(f) = exact {
        json["numerator"] = json!(f.numerator.iter().map(|c| c.to_string()).collect::<Vec<_>>());
        json["denominator"] = json!(f.denominator.iter().map(|c| c.to_string()).collect::<Vec<_>>());
        text.push_str(&format!("numerator = {}\ndenominator = {}\n", join(&f.numerator, ","), join(&f.denominator, ",")));
    }
    Out::ok(table(format, &["k", "multiplicity"], rows, json, text))
}

pub fn conjugate(answer: bool, cs: &[i64], ct: &[i64], format: Option<Format>) -> Out {
    let rows = vec![vec![answer.to_string(), list(cs), list(ct)]];
    let json = json!({ "conjugate": answer, "canonical_s": cs, "canonical_t": ct });
    let text = format!("{answer}\ncanonical s = {}\ncanonical t = {}\n", list(cs), list(ct));
    Out::ok(table(format, &["conjugate", "canonical_s", "canonical_t"], rows, json, text))
}

pub fn representatives(family: GroupFamily, q: i64, reps: &[Vec<i64>], format: Option<Format>) -> Out {
    let shown: Vec<Vec<i64>> = reps
        .iter()
        .map(|s| if family.kind() == FamilyKind::A { full_s(family, q, s) } else { s.clone() })
        .collect();
    let rows = shown.iter().map(|s| vec![list(s)]).collect();
    let json = json!({ "family": family.to_string(), "q": q, "representatives": shown });
    let text: String = shown.iter().map(|s| format!("{}\n", list(s))).collect();
    Out::ok(table(format, &["s"], rows, json, text))
}

pub fn verify(reports: &[TableReport], format: Option<Format>) -> Out {
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut json_sections = Vec::new();
    for r in reports {
        for s in &r.sections {
            let status = if s.passed() { "pass" } else { "FAIL" };
            rows.push(vec![
                r.id.to_string(),
                s.space.to_string(),
                format!("{:?}", s.mode).to_lowercase(),
                s.q_max.to_string(),
                s.expected.to_string(),
                s.found.to_string(),
                s.missing.len().to_string(),
                s.extra.len().to_string(),
                status.to_string(),
            ]);
            text.push_str(&format!(
                "table {} {} {:?} q<={}: {status} (expected {}, found {}, missing {}, extra {})\n",
                r.id,
                s.space,
                s.mode,
                s.q_max,
                s.expected,
                s.found,
                s.missing.len(),
                s.extra.len()
            ));
            for (label, fams) in [("missing", &s.missing), ("extra", &s.extra)] {
                if !fams.is_empty() {
                    text.push_str(&format!("  {label}:\n"));
                    for line in family_report(fams, Format::Markdown).expect("markdown never fails").lines() {
                        text.push_str(&format!("    {line}\n"));
                    }
                }
            }
            json_sections.push(json!({
                "table": r.id,
                "space": s.space.to_string(),
                "mode": format!("{:?}", s.mode).to_lowercase(),
                "qmax": s.q_max,
                "expected": s.expected,
                "found": s.found,
                "missing": s.missing.iter().map(|f| f.members.iter().map(|m| json!({"q": f.q, "s": m.s, "u": m.u})).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "extra": s.extra.iter().map(|f| f.members.iter().map(|m| json!({"q": f.q, "s": m.s, "u": m.u})).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "passed": s.passed(),
            }));
        }
    }
    let success = reports.iter().all(TableReport::passed);
    let header = ["table", "space", "mode", "qmax", "expected", "found", "missing", "extra", "status"];
    Out { text: table(format, &header, rows, Value::Array(json_sections), text), success }
}

pub fn noncyclic(report: &NoncyclicReport, format: Option<Format>) -> Out {
    let rows: Vec<Vec<String>> = report
        .checks
        .iter()
        .map(|c| vec![c.name.clone(), if c.passed { "pass" } else { "FAIL" }.to_string()])
        .collect();
    let json = json!({
        "checks": report.checks.iter().map(|c| json!({"name": c.name, "passed": c.passed})).collect::<Vec<_>>(),
        "passed": report.all_passed(),
    });
    let text: String = rows.iter().map(|r| format!("{}: {}\n", r[1], r[0])).collect();
    Out { text: table(format, &["check", "status"], rows, json, text), success: report.all_passed() }
}
