//! Regeneration of the dimension, parabolic, margin and homotopy tables.
//!
//! Output is byte-stable: rows come from fixed type orders and nothing
//! depends on the locale or the clock. The checked-in copies under
//! `golden/` are compiled in so the audit can compare against them.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homotopy::family_rows;
use crate::lie_core::{dimension_of, RootSystem, SimpleType};
use crate::parabolic::{levi_decomposition, NodeSet};
use crate::search::{certificate, exceptional_levi, levi_polynomial, margin_audit, standard_node, predicted_margin};

/// Largest classical rank in the generated tables.
pub const TABLE_RANK: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableId {
    Dims,
    ParabolicClassical,
    ParabolicExceptional,
    Homotopy,
    Margins,
}

impl TableId {
    pub const ALL: [TableId; 5] = [
        TableId::Dims,
        TableId::ParabolicClassical,
        TableId::ParabolicExceptional,
        TableId::Homotopy,
        TableId::Margins,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableId::Dims => "dims",
            TableId::ParabolicClassical => "parabolic-classical",
            TableId::ParabolicExceptional => "parabolic-exceptional",
            TableId::Homotopy => "homotopy",
            TableId::Margins => "margins",
        }
    }

    /// Checked-in TSV rendering.
    pub fn golden(self) -> &'static str {
        match self {
            TableId::Dims => include_str!("../golden/dims.tsv"),
            TableId::ParabolicClassical => include_str!("../golden/parabolic-classical.tsv"),
            TableId::ParabolicExceptional => include_str!("../golden/parabolic-exceptional.tsv"),
            TableId::Homotopy => include_str!("../golden/homotopy.tsv"),
            TableId::Margins => include_str!("../golden/margins.tsv"),
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TableId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownTable(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Int(i64),
    Text(String),
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Int(v) => write!(f, "{v}"),
            Cell::Text(s) => f.write_str(s),
        }
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Text(if v { "yes" } else { "no" }.into())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.into())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub table: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Report {
    pub fn to_tsv(&self) -> String {
        let mut out = self.columns.join("\t");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::to_string).collect();
            out.push_str(&cells.join("\t"));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }
}

fn classical_types(max_rank: usize) -> impl Iterator<Item = SimpleType> {
    SimpleType::all_up_to(max_rank)
        .into_iter()
        .filter(|t| t.is_classical())
}

pub fn emit_table(id: TableId) -> Result<Report> {
    match id {
        TableId::Dims => dims_table(),
        TableId::ParabolicClassical => parabolic_classical_table(),
        TableId::ParabolicExceptional => parabolic_exceptional_table(),
        TableId::Homotopy => homotopy_table(),
        TableId::Margins => margins_table(),
    }
}

fn dims_table() -> Result<Report> {
    let mut rows = Vec::new();
    for ty in SimpleType::all_up_to(TABLE_RANK) {
        let rs = RootSystem::new(ty);
        let dims = dimension_of(&rs)?;
        rows.push(vec![
            ty.subscripted().into(),
            ty.rank().into(),
            dims.dim.into(),
            rs.positive_roots().len().into(),
            rs.dim_from_roots().into(),
        ]);
    }
    Ok(Report {
        table: "dims",
        columns: vec!["type", "rank", "dim", "positive_roots", "rank_plus_2_roots"],
        rows,
    })
}

fn parabolic_classical_table() -> Result<Report> {
    let mut rows = Vec::new();
    for ty in classical_types(TABLE_RANK) {
        let rs = RootSystem::new(ty);
        let s = standard_node(ty);
        let cert = certificate(&rs, s)?;
        let levi = levi_decomposition(&rs, &NodeSet::maximal(ty.rank(), s)?)?;
        let p = &cert.profile;
        rows.push(vec![
            ty.subscripted().into(),
            s.into(),
            levi.to_string().into(),
            p.dim_levi_ss.into(),
            levi_polynomial(ty, s)?.into(),
            p.dim_unip_rad.into(),
            p.dim_p.into(),
            p.dim_pu.into(),
            cert.satisfies_3ru.into(),
        ]);
    }
    Ok(Report {
        table: "parabolic-classical",
        columns: vec![
            "type",
            "s",
            "levi",
            "dim_levi_ss",
            "closed_form",
            "dim_unip_rad",
            "dim_p",
            "dim_pu",
            "pu_le_3ru",
        ],
        rows,
    })
}

fn parabolic_exceptional_table() -> Result<Report> {
    let mut rows = Vec::new();
    for ty in SimpleType::exceptional() {
        let rs = RootSystem::new(ty);
        let s = standard_node(ty);
        let cert = certificate(&rs, s)?;
        let levi = levi_decomposition(&rs, &NodeSet::maximal(ty.rank(), s)?)?;
        let (label, dim) = exceptional_levi(ty).expect("exceptional");
        if levi.to_string() != label || cert.profile.dim_levi_ss != dim {
            return Err(Error::Consistency(format!(
                "{ty}: node {s} gives {levi} = {}, expected {label} = {dim}",
                cert.profile.dim_levi_ss
            )));
        }
        rows.push(vec![
            ty.subscripted().into(),
            cert.profile.dim_g.into(),
            s.into(),
            levi.to_string().into(),
            cert.profile.dim_levi_ss.into(),
            cert.profile.dim_unip_rad.into(),
            cert.profile.dim_pu.into(),
            cert.satisfies_3ru.into(),
        ]);
    }
    Ok(Report {
        table: "parabolic-exceptional",
        columns: vec![
            "type",
            "dim_g",
            "deleted_node",
            "levi",
            "dim_levi_ss",
            "dim_unip_rad",
            "dim_pu",
            "pu_le_3ru",
        ],
        rows,
    })
}

fn homotopy_table() -> Result<Report> {
    let rows = family_rows(TABLE_RANK)?
        .into_iter()
        .map(|r| vec![r.label.into(), r.dim.into(), r.pattern.into()])
        .collect();
    Ok(Report {
        table: "homotopy",
        columns: vec!["type", "dim", "rational_homotopy_type"],
        rows,
    })
}

fn margins_table() -> Result<Report> {
    let mut rows = Vec::new();
    for ty in SimpleType::all_up_to(TABLE_RANK) {
        let rs = RootSystem::new(ty);
        let s = standard_node(ty);
        let margin = margin_audit(&rs)?;
        let cert = certificate(&rs, s)?;
        let predicted: Cell = match predicted_margin(ty) {
            Some(v) => v.into(),
            None => "-".into(),
        };
        rows.push(vec![
            ty.subscripted().into(),
            s.into(),
            cert.profile.dim_g.into(),
            cert.profile.dim_levi_ss.into(),
            margin.into(),
            predicted,
        ]);
    }
    Ok(Report {
        table: "margins",
        columns: vec!["type", "s", "dim_g", "dim_levi_ss", "margin", "predicted"],
        rows,
    })
}
