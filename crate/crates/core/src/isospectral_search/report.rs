//! Rendering of isospectral families as JSON, CSV or Markdown tables.

use std::str::FromStr;

use serde::Serialize;

use super::{IsospectralFamily, Member};
use crate::error::{Error, Result};
use crate::weight_lattice::{full_s, is_manifold, singularity_profile, FamilyKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        match text.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" | "markdown" => Ok(Format::Markdown),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Serialize)]
struct MemberRow {
    s: Vec<i64>,
    u: i64,
    manifold: bool,
    singularity_profile: Vec<i64>,
}

#[derive(Serialize)]
struct FamilyRow {
    members: Vec<MemberRow>,
}

#[derive(Serialize)]
struct QGroup {
    space: String,
    q: i64,
    families: Vec<FamilyRow>,
}

// `s` as the tables print it: with the implicit last entry for SU(n+1).
fn displayed_s(f: &IsospectralFamily, m: &Member) -> Vec<i64> {
    let family = f.space.family();
    if family.kind() == FamilyKind::A {
        full_s(family, f.q, &m.s)
    } else {
        m.s.clone()
    }
}

fn member_row(f: &IsospectralFamily, m: &Member) -> MemberRow {
    let s = displayed_s(f, m);
    MemberRow {
        manifold: is_manifold(f.space.family(), f.q, &m.s),
        singularity_profile: singularity_profile(f.q, &s),
        s,
        u: m.u,
    }
}

fn list(s: &[i64]) -> String {
    let inner: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("[{}]", inner.join(", "))
}

fn to_json(families: &[IsospectralFamily]) -> Result<String> {
    let mut groups: Vec<QGroup> = Vec::new();
    for f in families {
        let space = f.space.to_string();
        let row = FamilyRow { members: f.members.iter().map(|m| member_row(f, m)).collect() };
        match groups.last_mut() {
            Some(g) if g.q == f.q && g.space == space => g.families.push(row),
            _ => groups.push(QGroup { space, q: f.q, families: vec![row] }),
        }
    }
    serde_json::to_string_pretty(&groups).map_err(|e| Error::InvalidParameter(e.to_string()))
}

fn to_csv(families: &[IsospectralFamily]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::InvalidParameter(e.to_string());
    w.write_record(["space", "family", "q", "s", "u", "manifold", "singularity_profile"])
        .map_err(io)?;
    for (i, f) in families.iter().enumerate() {
        for m in &f.members {
            let row = member_row(f, m);
            w.write_record([
                f.space.to_string(),
                i.to_string(),
                f.q.to_string(),
                list(&row.s),
                row.u.to_string(),
                row.manifold.to_string(),
                list(&row.singularity_profile),
            ])
            .map_err(io)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::InvalidParameter(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn to_markdown(families: &[IsospectralFamily]) -> String {
    let mut out = String::from("| q | s | u |\n|---|---|---|\n");
    for (i, f) in families.iter().enumerate() {
        if i > 0 {
            out.push_str("|   |   |   |\n");
        }
        for m in &f.members {
            out.push_str(&format!("| {} | {} | {} |\n", f.q, list(&displayed_s(f, m)), m.u));
        }
    }
    out
}

/// Renders families in the given format. Families are printed in the order
/// given; in Markdown consecutive families are separated by an empty row.
pub fn family_report(families: &[IsospectralFamily], format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(families),
        Format::Csv => to_csv(families),
        Format::Markdown => Ok(to_markdown(families)),
    }
}
