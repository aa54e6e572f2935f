//! Rational homotopy types of simply connected simple groups.
//!
//! The type is the multiset `{2 d_i - 1}` built from the degrees of the
//! fundamental Weyl group invariants. Degrees are tabulated per family;
//! `sum (2 d_i - 1) = dim G` is checked on every call.

use std::fmt;

use serde::Serialize;

use crate::error::{ensure_consistent, Error, Result};
use crate::lie_core::{Family, SimpleType};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeylDegrees(pub Vec<u64>);

pub fn weyl_degrees(ty: SimpleType) -> WeylDegrees {
    let n = ty.rank() as u64;
    let mut degrees: Vec<u64> = match (ty.family(), ty.rank()) {
        (Family::A, _) => (2..=n + 1).collect(),
        (Family::B, _) | (Family::C, _) => (1..=n).map(|i| 2 * i).collect(),
        (Family::D, _) => (1..n).map(|i| 2 * i).chain([n]).collect(),
        (Family::E, 6) => vec![2, 5, 6, 8, 9, 12],
        (Family::E, 7) => vec![2, 6, 8, 10, 12, 14, 18],
        (Family::E, 8) => vec![2, 8, 12, 14, 18, 20, 24, 30],
        (Family::F, _) => vec![2, 6, 8, 12],
        (Family::G, _) => vec![2, 6],
        (Family::E, _) => unreachable!("validated at construction"),
    };
    degrees.sort_unstable();
    WeylDegrees(degrees)
}

/// Sorted multiset of odd sphere dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HomotopyType(pub Vec<u64>);

impl HomotopyType {
    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn multiplicity(&self, k: u64) -> usize {
        self.0.iter().filter(|&&e| e == k).count()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for HomotopyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn rational_homotopy_type(ty: SimpleType) -> Result<HomotopyType> {
    let degrees = weyl_degrees(ty);
    ensure_consistent!(
        degrees.0.len() == ty.rank() && degrees.0.first() == Some(&2),
        "{ty}: malformed degree list {:?}",
        degrees.0
    );
    let mut entries: Vec<u64> = degrees.0.iter().map(|d| 2 * d - 1).collect();
    entries.sort_unstable();
    let ht = HomotopyType(entries);
    ensure_consistent!(
        ht.sum() == ty.dim(),
        "{ty}: homotopy type {ht} sums to {}, dimension is {}",
        ht.sum(),
        ty.dim()
    );
    Ok(ht)
}

/// `pi_3 (x) Q = Q`: the entry 3 occurs exactly once.
pub fn pi3_audit(ty: SimpleType) -> Result<bool> {
    Ok(rational_homotopy_type(ty)?.multiplicity(3) == 1)
}

/// All unordered pairs of distinct types (classical ranks up to `max_rank`,
/// plus the exceptional types) with equal rational homotopy type. Each pair
/// is ordered by type, and the list is sorted.
pub fn coincidence_audit(max_rank: usize) -> Result<Vec<(SimpleType, SimpleType)>> {
    if max_rank < 4 {
        return Err(Error::InvalidArgument(format!(
            "coincidence audit needs max_rank >= 4, got {max_rank}"
        )));
    }
    let types = SimpleType::all_up_to(max_rank);
    let mut keyed = Vec::with_capacity(types.len());
    for ty in types {
        keyed.push((rational_homotopy_type(ty)?, ty));
    }
    keyed.sort();
    let mut pairs = Vec::new();
    for (i, (hi, ti)) in keyed.iter().enumerate() {
        for (hj, tj) in &keyed[i + 1..] {
            if hi != hj {
                break;
            }
            pairs.push(((*ti).min(*tj), (*ti).max(*tj)));
        }
    }
    pairs.sort();
    Ok(pairs)
}

/// Symbolic description of a row of the homotopy table for a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyRow {
    pub label: String,
    pub dim: String,
    pub pattern: String,
    /// Ranks the row is checked at.
    pub ranks: Vec<usize>,
    family: Family,
}

impl FamilyRow {
    /// The homotopy type the symbolic row denotes at rank `m`.
    pub fn expand(&self, m: usize) -> (u64, Vec<u64>) {
        let m = m as u64;
        match self.family {
            Family::A => (m * m + 2 * m, (1..=m).map(|i| 2 * i + 1).collect()),
            Family::B | Family::C => (2 * m * m + m, (0..m).map(|i| 3 + 4 * i).collect()),
            Family::D => {
                let mut v: Vec<u64> = (0..m - 1).map(|i| 3 + 4 * i).chain([2 * m - 1]).collect();
                v.sort_unstable();
                (2 * m * m - m, v)
            }
            _ => {
                let ty = SimpleType::new(self.family, m as usize).unwrap();
                (ty.dim(), rational_homotopy_type(ty).unwrap().0)
            }
        }
    }
}

/// The nine family rows of the homotopy table. Each classical pattern is
/// expanded at every rank up to `check_rank` and compared with the
/// degree-based computation before being returned.
pub fn family_rows(check_rank: usize) -> Result<Vec<FamilyRow>> {
    let classical = [
        (Family::A, "m^2 + 2m", "{3, 5, ..., 2m+1}"),
        (Family::B, "2m^2 + m", "{3, 7, ..., 4m-1}"),
        (Family::C, "2m^2 + m", "{3, 7, ..., 4m-1}"),
        (Family::D, "2m^2 - m", "{3, 7, ..., 4m-5} u {2m-1}"),
    ];
    let mut rows = Vec::new();
    for (family, dim, pattern) in classical {
        let min = family.min_rank();
        rows.push(FamilyRow {
            label: format!("{family}_m, m >= {min}"),
            dim: dim.to_string(),
            pattern: pattern.to_string(),
            ranks: (min..=check_rank.max(min)).collect(),
            family,
        });
    }
    for ty in SimpleType::exceptional() {
        let ht = rational_homotopy_type(ty)?;
        rows.push(FamilyRow {
            label: ty.subscripted(),
            dim: ty.dim().to_string(),
            pattern: ht.to_string(),
            ranks: vec![ty.rank()],
            family: ty.family(),
        });
    }
    for row in &rows {
        for &m in &row.ranks {
            let ty = SimpleType::new(row.family, m)?;
            let (dim, entries) = row.expand(m);
            let computed = rational_homotopy_type(ty)?;
            ensure_consistent!(
                dim == ty.dim() && entries == computed.0,
                "row `{}` at m = {m} gives {entries:?}, computed {computed}",
                row.label
            );
        }
    }
    Ok(rows)
}
