//! Reference isospectral families for six searches, and a verifier that
//! reruns each search and compares canonicalized families.
//!
//! Rows are written as they are usually published, with arbitrary
//! representatives of each conjugacy class (and `n+1` entries of `s` for
//! `Pⁿ(ℂ)`); they are canonicalized before comparison.

use std::collections::BTreeSet;

use super::{canonical_row, search, IsospectralFamily, Member, SearchConfig, UMode};
use crate::error::{Error, Result};
use crate::spectrum::SpaceKind;

pub const TABLE_IDS: [u8; 6] = [1, 2, 3, 4, 5, 6];

// Section header: `@<sphere|cp|hp1> <n> <twisted|untwisted> <qmax>`.
// Family line: `<q>: <s>[/<u>] ...` with `s` comma-separated and u = 0 if omitted.
const TABLE_1: &str = "
@sphere 2 twisted 7
4: 0,1/1 1,2/1
5: 0,1/1 1,2/1 1,2/2
7: 1,2/1 1,2/2
@sphere 3 twisted 7
4: 0,0,1/1 0,1,2/1 1,2,2/1
4: 0,1,1/1 1,1,2/1
5: 0,0,1/1 0,1,2/1 0,1,2/2
7: 0,1,2/1 0,1,2/2 1,2,3/1 1,2,3/2 1,2,3/3
@sphere 4 twisted 7
4: 0,0,0,1/1 0,0,1,2/1 0,1,2,2/1 1,2,2,2/1
4: 0,0,1,1/1 0,1,1,2/1 1,1,2,2/1
4: 0,1,1,1/1 1,1,1,2/1
5: 0,0,0,1/1 0,0,1,2/1 0,0,1,2/2
5: 0,1,1,2/1 1,1,2,2/1 1,1,2,2/2
7: 1,1,2,2/1 1,1,2,3/1
7: 0,0,1,2/1 0,0,1,2/2 0,1,2,3/1 0,1,2,3/2 0,1,2,3/3
";

const TABLE_2: &str = "
@sphere 2 untwisted 15
@sphere 3 untwisted 15
11: 1,2,3 1,2,4
13: 1,2,3 1,2,4
13: 1,2,5 1,3,4
15: 1,2,6 1,3,4
@sphere 4 untwisted 15
11: 0,1,2,3 0,1,2,4
13: 0,1,2,3 0,1,2,4
13: 0,1,2,5 0,1,3,4
13: 1,2,3,4 1,2,3,5
15: 0,1,2,6 0,1,3,4
15: 1,2,5,6 1,3,4,5
@sphere 5 untwisted 15
11: 0,0,1,2,3 0,0,1,2,4
13: 0,0,1,2,3 0,0,1,2,4
13: 0,0,1,2,5 0,0,1,3,4
13: 0,1,2,3,4 0,1,2,3,5
15: 0,0,1,2,6 0,0,1,3,4
15: 0,1,2,5,6 0,1,3,4,5
15: 1,2,5,5,6 1,3,4,5,5
15: 1,2,3,6,6 1,3,3,4,6
";

const TABLE_3: &str = "
@cp 2 twisted 6
4: 0,1,3/1 1,1,2/1
6: 0,1,5/1 1,2,3/1
6: 0,1,5/2 1,2,3/2
6: 0,1,5/3 1,2,3/3
6: 1,1,4/1 1,1,4/2
@cp 3 twisted 6
4: 0,0,1,3/1 0,1,1,2/1 1,2,2,3/1
4: 0,0,1,3/2 0,1,1,2/2 1,2,2,3/2
4: 1,1,1,1/1 1,1,1,1/2 1,1,3,3/1
5: 1,2,3,4/1 1,2,3,4/2
6: 0,0,1,5/1 2,3,3,4/1
6: 0,0,1,5/2 2,3,3,4/2
6: 0,0,1,5/3 2,3,3,4/3
6: 1,1,1,3/1 1,1,1,3/3 1,1,5,5/1 1,1,5,5/3 1,3,3,5/1 1,3,3,5/3
";

const TABLE_4: &str = "
@cp 2 untwisted 10
6: 0,1,5 1,2,3
9: 0,1,8 1,2,6
@cp 3 untwisted 10
4: 0,0,1,3 0,1,1,2 1,2,2,3
6: 0,0,1,5 2,3,3,4
7: 0,1,2,4 1,2,5,6
8: 0,0,1,7 1,2,2,3 1,4,4,7
8: 0,1,1,6 1,1,2,4
8: 1,1,3,3 1,1,7,7
10: 0,0,1,9 2,5,5,8
10: 0,1,1,8 1,2,2,5
";

const TABLE_5: &str = "
@hp1 2 twisted 9
4: 0,1/1 1,2/1
4: 0,1/2 1,2/2
5: 1,1/2 1,2/1 1,2/2
6: 0,1/1 2,3/1
6: 0,1/2 2,3/2
6: 0,1/3 2,3/3
6: 1,1/1 1,1/3 1,3/1 1,3/3
7: 1,2/1 1,2/3
8: 0,1/1 1,4/3
8: 0,1/2 1,2/2 1,4/2
8: 0,1/3 1,4/1
8: 0,1/4 1,4/4
8: 1,1/1 1,1/3 1,3/1 1,3/3
8: 1,1/2 1,3/2
8: 1,2/1 1,2/3
9: 1,1/4 1,2/4
9: 1,3/2 1,3/4
";

const TABLE_6: &str = "
@hp1 2 untwisted 20
4: 0,1 1,2
6: 0,1 2,3
8: 0,1 1,4
10: 0,1 2,5
12: 0,1 1,6
12: 1,2 1,4
12: 2,3 3,4
14: 0,1 2,7
14: 1,2 1,4
16: 0,1 1,8
16: 1,2 1,6
18: 0,1 2,9
18: 1,2 1,4
18: 1,6 2,3
";

/// A published family: `q` and rows `(s, u)` exactly as printed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenFamily {
    pub q: i64,
    pub rows: Vec<(Vec<i64>, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenSection {
    /// Spaces the families apply to (both spheres of a given `n` share one).
    pub spaces: Vec<SpaceKind>,
    pub mode: UMode,
    pub q_max: i64,
    pub families: Vec<GoldenFamily>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenTable {
    pub id: u8,
    pub sections: Vec<GoldenSection>,
}

fn parse_table(id: u8, text: &str) -> GoldenTable {
    let mut sections: Vec<GoldenSection> = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        if let Some(header) = line.strip_prefix('@') {
            let f: Vec<&str> = header.split_whitespace().collect();
            let n: usize = f[1].parse().expect("rank");
            let spaces = match f[0] {
                "sphere" => vec![SpaceKind::OddSphere(n), SpaceKind::EvenSphere(n)],
                "cp" => vec![SpaceKind::CPn(n)],
                "hp1" => vec![SpaceKind::HP1],
                other => panic!("unknown space {other}"),
            };
            sections.push(GoldenSection {
                spaces,
                mode: f[2].parse().expect("mode"),
                q_max: f[3].parse().expect("qmax"),
                families: Vec::new(),
            });
            continue;
        }
        let (q, rows) = line.split_once(':').expect("family line");
        let rows = rows
            .split_whitespace()
            .map(|row| {
                let (s, u) = row.split_once('/').unwrap_or((row, "0"));
                let s = s.split(',').map(|x| x.parse().expect("s entry")).collect();
                (s, u.parse().expect("u"))
            })
            .collect();
        sections
            .last_mut()
            .expect("section header first")
            .families
            .push(GoldenFamily { q: q.trim().parse().expect("q"), rows });
    }
    GoldenTable { id, sections }
}

/// Embedded reference data for table `id` (1 to 6).
pub fn golden_table(id: u8) -> Result<GoldenTable> {
    let text = match id {
        1 => TABLE_1,
        2 => TABLE_2,
        3 => TABLE_3,
        4 => TABLE_4,
        5 => TABLE_5,
        6 => TABLE_6,
        other => return Err(Error::InvalidParameter(format!("no table {other}; expected 1 to 6"))),
    };
    Ok(parse_table(id, text))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSection {
    pub space: SpaceKind,
    pub mode: UMode,
    pub q_max: i64,
    pub expected: usize,
    pub found: usize,
    pub missing: Vec<IsospectralFamily>,
    pub extra: Vec<IsospectralFamily>,
}

impl TableSection {
    pub fn passed(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableReport {
    pub id: u8,
    pub sections: Vec<TableSection>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.sections.iter().all(TableSection::passed)
    }
}

fn canonical_family(space: SpaceKind, f: &GoldenFamily) -> Result<IsospectralFamily> {
    let mut members: Vec<Member> = f
        .rows
        .iter()
        .map(|(s, u)| canonical_row(space, f.q, s, *u))
        .collect::<Result<_>>()?;
    members.sort();
    members.dedup();
    Ok(IsospectralFamily { q: f.q, members, space })
}

/// Reruns the searches behind table `id`, restricted to `q ≤ q_max` when
/// given (never beyond the table's own range), and reports missing and
/// extra families.
pub fn verify_table(id: u8, q_max: Option<i64>, threads: usize) -> Result<TableReport> {
    let table = golden_table(id)?;
    let mut sections = Vec::new();
    for sec in &table.sections {
        let limit = q_max.map_or(sec.q_max, |q| q.min(sec.q_max));
        for &space in &sec.spaces {
            let expected: BTreeSet<IsospectralFamily> = sec
                .families
                .iter()
                .filter(|f| f.q <= limit)
                .map(|f| canonical_family(space, f))
                .collect::<Result<_>>()?;
            let mut config = SearchConfig::new(space, 1, limit, sec.mode)?;
            config.threads = threads;
            let found: BTreeSet<IsospectralFamily> = search(&config)?.into_iter().collect();
            sections.push(TableSection {
                space,
                mode: sec.mode,
                q_max: limit,
                expected: expected.len(),
                found: found.len(),
                missing: expected.difference(&found).cloned().collect(),
                extra: found.difference(&expected).cloned().collect(),
            });
        }
    }
    Ok(TableReport { id, sections })
}
