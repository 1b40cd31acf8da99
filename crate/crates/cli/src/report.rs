//! The wall report and its JSON, CSV and table renderings.

use std::io::Write;

use serde::Serialize;
use walllab_core::{
    degenerate_c0, enumerate_with, innermost_chamber, max_alpha0_of, CandidateStatus, ChernCharacter,
    DegenerateCandidate, EnumerateOptions, InnermostChamber, Rational, WallFamily,
};

use crate::decimal::sig6;
use crate::CliError;

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct MemberEntry {
    pub sub: ChernCharacter,
    pub quot: ChernCharacter,
    pub rank_range: [i64; 2],
    pub status: CandidateStatus,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct FamilyEntry {
    pub wall_constant: Rational,
    pub alpha0_squared: Rational,
    pub members: Vec<MemberEntry>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct DegenerateEntry {
    pub sub: ChernCharacter,
    pub quot: ChernCharacter,
    pub note: &'static str,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct WallReport {
    pub v: ChernCharacter,
    #[serde(rename = "R")]
    pub rank: i64,
    #[serde(rename = "D")]
    pub degree: Rational,
    pub families: Vec<FamilyEntry>,
    pub degenerate: Vec<DegenerateEntry>,
    pub innermost_chamber: InnermostChamber,
    pub max_alpha0_squared: Option<Rational>,
    pub hom_vanishing_from: i64,
    pub below_innermost_cutoff: usize,
    pub version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

impl WallReport {
    pub fn build(rank: i64, degree: &Rational, opts: &EnumerateOptions) -> Result<(WallReport, Vec<WallFamily>), CliError> {
        let enumeration = enumerate_with(rank, degree, opts)?;
        let families = enumeration.families;
        check_consistency(rank, degree, &opts.k, &families)?;
        let degenerate = degenerate_c0(rank, degree)?;
        let hom = max_alpha0_of(&families);
        let report = WallReport {
            v: ChernCharacter::v(rank, degree),
            rank,
            degree: degree.clone(),
            families: families.iter().map(family_entry).collect(),
            degenerate: degenerate.iter().map(degenerate_entry).collect(),
            innermost_chamber: innermost_chamber(rank, degree),
            max_alpha0_squared: hom.max_alpha0_sq,
            hom_vanishing_from: hom.n_min,
            below_innermost_cutoff: enumeration.below_cutoff.len(),
            version: walllab_core::VERSION,
            timestamp: None,
        };
        Ok((report, families))
    }

    pub fn write_json(&self, out: &mut dyn Write) -> Result<(), CliError> {
        serde_json::to_writer_pretty(&mut *out, self).map_err(|e| CliError::Internal(e.to_string()))?;
        writeln!(out)?;
        Ok(())
    }

    pub fn write_csv(&self, out: &mut dyn Write) -> Result<(), CliError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "wall_constant", "alpha0_sq", "r", "c", "d", "e", "quot_r", "quot_c", "quot_d", "quot_e",
        ])
        .map_err(csv_err)?;
        for f in &self.families {
            for m in &f.members {
                let mut row = vec![f.wall_constant.to_string(), f.alpha0_squared.to_string()];
                row.extend(m.sub.components().iter().map(|x| x.to_string()));
                row.extend(m.quot.components().iter().map(|x| x.to_string()));
                w.write_record(&row).map_err(csv_err)?;
            }
        }
        w.flush()?;
        Ok(())
    }

    /// One row per `(c, d, e)` class, in the layout of a wall table.
    pub fn write_table(&self, families: &[WallFamily], out: &mut dyn Write) -> Result<(), CliError> {
        writeln!(out, "v = {}   R = {}   D = {}", self.v, self.rank, self.degree)?;
        writeln!(out, "all rows are numerical candidates")?;
        writeln!(out)?;
        let header = ["ch(A)", "ch(B)", "rank range", "α₀²", "α₀"];
        let mut rows: Vec<[String; 5]> = Vec::new();
        let quot_rank = if self.rank == 0 { "-r".to_string() } else { format!("-{}-r", self.rank) };
        for f in families {
            let a0 = f.alpha0_sq();
            for g in f.groups() {
                rows.push([
                    format!("(r,{},{},{})", g.c, g.d, g.e),
                    format!("({},{},{},{})", quot_rank, -&g.c, &self.degree - &g.d, -&g.e),
                    format!("{} ≤ r ≤ {}", g.rank_range.0, g.rank_range.1),
                    a0.to_string(),
                    sig6(a0.to_f64().sqrt()),
                ]);
            }
        }
        let mut widths = header.map(|h| h.chars().count());
        for r in &rows {
            for (w, cell) in widths.iter_mut().zip(r.iter()) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &[&str]| {
            let mut s = String::new();
            for (i, (c, w)) in cells.iter().zip(widths.iter()).enumerate() {
                if i > 0 {
                    s.push_str("  ");
                }
                s.push_str(c);
                if i + 1 < cells.len() {
                    s.push_str(&" ".repeat(w - c.chars().count()));
                }
            }
            s
        };
        writeln!(out, "{}", line(&header))?;
        for r in &rows {
            let cells: Vec<&str> = r.iter().map(String::as_str).collect();
            writeln!(out, "{}", line(&cells))?;
        }
        if rows.is_empty() {
            writeln!(out, "(no walls)")?;
        }
        writeln!(out)?;
        match &self.max_alpha0_squared {
            Some(m) => writeln!(
                out,
                "max α₀² = {m} (α₀ ≈ {}); Hom(O(n), E) = 0 for n ≥ {}",
                sig6(m.to_f64().sqrt()),
                self.hom_vanishing_from
            )?,
            None => writeln!(out, "max α₀²: none (no walls)")?,
        }
        let ic = &self.innermost_chamber;
        writeln!(out, "innermost chamber {}: {}", ic.region, ic.verdict)?;
        if self.below_innermost_cutoff > 0 {
            writeln!(
                out,
                "{} candidates with wall constant below 1/6 lie in the quiver region and were dropped",
                self.below_innermost_cutoff
            )?;
        }
        if !self.degenerate.is_empty() {
            writeln!(out)?;
            writeln!(out, "ch1 = 0 candidates, each {}:", DegenerateCandidate::NOTE)?;
            for d in &self.degenerate {
                writeln!(out, "  {}", d.sub)?;
            }
        }
        Ok(())
    }
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Internal(format!("csv: {e}"))
}

fn family_entry(f: &WallFamily) -> FamilyEntry {
    FamilyEntry {
        wall_constant: f.wall_constant.clone(),
        alpha0_squared: f.alpha0_sq(),
        members: f
            .members
            .iter()
            .map(|m| MemberEntry {
                sub: m.sub.clone(),
                quot: m.quot.clone(),
                rank_range: [m.rank_range.0, m.rank_range.1],
                status: m.status,
            })
            .collect(),
    }
}

fn degenerate_entry(d: &DegenerateCandidate) -> DegenerateEntry {
    DegenerateEntry {
        sub: d.sub.clone(),
        quot: d.quot.clone(),
        note: DegenerateCandidate::NOTE,
    }
}

/// Re-checks invariants of the enumeration before anything is written.
fn check_consistency(rank: i64, degree: &Rational, k: &Rational, families: &[WallFamily]) -> Result<(), CliError> {
    let v = ChernCharacter::v(rank, degree);
    for f in families {
        for m in &f.members {
            if &m.sub + &m.quot != v {
                return Err(CliError::Internal(format!("{} + {} differs from v", m.sub, m.quot)));
            }
            if !walllab_core::walls::passes_filters(rank, degree, &m.sub, k) {
                return Err(CliError::Internal(format!("{} fails a filter", m.sub)));
            }
        }
    }
    Ok(())
}
