//! Decision rules for "does every smooth affine variety of dimension `d`
//! embed into `G x A^k`?".
//!
//! Each embedding rule is a sufficient condition from a theorem; the
//! non-embeddability rule says some `d`-dimensional smooth irreducible affine
//! variety has no embedding once `2d >= dim`. Every embedding rule implies
//! `2d + 1 <= dim`, so the two sides never both fire.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie_core::{Family, RootSystem, SimpleType};
use crate::parabolic::{parabolic_profile, NodeSet};

/// Semisimple part as `(type, multiplicity)` pairs times `A^affine_dim`.
/// Factors are kept sorted by type with multiplicities merged.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupExpr {
    factors: Vec<(SimpleType, u32)>,
    affine_dim: u64,
}

impl GroupExpr {
    pub fn new(factors: impl IntoIterator<Item = (SimpleType, u32)>, affine_dim: u64) -> Result<GroupExpr> {
        let mut merged: Vec<(SimpleType, u32)> = Vec::new();
        let mut all: Vec<(SimpleType, u32)> = factors.into_iter().collect();
        all.sort();
        for (ty, mult) in all {
            if mult == 0 {
                return Err(Error::InvalidArgument(format!("multiplicity 0 for {ty}")));
            }
            match merged.last_mut() {
                Some((last, m)) if *last == ty => {
                    *m = m.checked_add(mult).ok_or_else(|| Error::InvalidArgument("multiplicity overflow".into()))?
                }
                _ => merged.push((ty, mult)),
            }
        }
        if merged.is_empty() && affine_dim == 0 {
            return Err(Error::EmptyExpression);
        }
        Ok(GroupExpr {
            factors: merged,
            affine_dim,
        })
    }

    pub fn simple(ty: SimpleType) -> GroupExpr {
        GroupExpr {
            factors: vec![(ty, 1)],
            affine_dim: 0,
        }
    }

    pub fn affine(k: u64) -> Result<GroupExpr> {
        GroupExpr::new([], k)
    }

    pub fn with_affine(mut self, k: u64) -> GroupExpr {
        self.affine_dim = k;
        self
    }

    pub fn factors(&self) -> &[(SimpleType, u32)] {
        &self.factors
    }

    pub fn affine_dim(&self) -> u64 {
        self.affine_dim
    }

    /// Number of simple factors counted with multiplicity.
    pub fn simple_count(&self) -> u64 {
        self.factors.iter().map(|&(_, m)| m as u64).sum()
    }

    pub fn semisimple_dim(&self) -> u64 {
        self.factors.iter().map(|&(t, m)| m as u64 * t.dim()).sum()
    }

    pub fn total_dim(&self) -> u64 {
        self.semisimple_dim() + self.affine_dim
    }

    /// The single simple factor, if the semisimple part is simple.
    pub fn as_simple(&self) -> Option<SimpleType> {
        match self.factors.as_slice() {
            [(t, 1)] => Some(*t),
            _ => None,
        }
    }

    /// Number of `A_1` factors if every simple factor is `A_1`.
    pub fn sl2_count(&self) -> Option<u64> {
        match self.factors.as_slice() {
            [] => Some(0),
            [(t, m)] if t.family() == Family::A && t.rank() == 1 => Some(*m as u64),
            _ => None,
        }
    }

    /// `sl_2^3` or `sl_3 x k`.
    pub fn is_lowdim_exception(&self) -> bool {
        let a1 = SimpleType::new(Family::A, 1).unwrap();
        let a2 = SimpleType::new(Family::A, 2).unwrap();
        (self.factors == [(a1, 3)] && self.affine_dim == 0) || (self.factors == [(a2, 1)] && self.affine_dim == 1)
    }
}

impl fmt::Display for GroupExpr {
    /// Canonical text form, e.g. `A1^3 x B4 x Aff2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = self
            .factors
            .iter()
            .map(|(t, m)| if *m == 1 { t.to_string() } else { format!("{t}^{m}") })
            .collect();
        if self.affine_dim > 0 {
            terms.push(format!("Aff{}", self.affine_dim));
        }
        write!(f, "{}", terms.join(" x "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EmbedQuery {
    pub target: GroupExpr,
    /// Dimension of the variety to embed.
    pub d: u64,
}

impl EmbedQuery {
    pub fn new(target: GroupExpr, d: u64) -> EmbedQuery {
        EmbedQuery { target, d }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    Lowdim,
    Simple,
    Semisimple,
    ProductAffine,
    Sl2Products,
}

impl Rule {
    /// Witness order.
    pub const ORDER: [Rule; 5] = [
        Rule::Lowdim,
        Rule::Simple,
        Rule::Semisimple,
        Rule::ProductAffine,
        Rule::Sl2Products,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Lowdim => "lowdim",
            Rule::Simple => "simple",
            Rule::Semisimple => "semisimple",
            Rule::ProductAffine => "product_affine",
            Rule::Sl2Products => "sl2_products",
        }
    }

    pub fn fires(self, q: &EmbedQuery) -> bool {
        match self {
            Rule::Lowdim => rule_lowdim(q),
            Rule::Simple => rule_simple(q),
            Rule::Semisimple => rule_semisimple(q),
            Rule::ProductAffine => rule_product_affine(q),
            Rule::Sl2Products => rule_sl2_products(q),
        }
    }

    /// The rule's inequality with the query's numbers substituted.
    pub fn instantiate(self, q: &EmbedQuery) -> String {
        let g = &q.target;
        let d = q.d;
        let k = g.affine_dim();
        let h = g.semisimple_dim();
        let total = g.total_dim();
        match self {
            Rule::Lowdim => format!(
                "dim G <= 10 and 2d + 1 <= dim G: {total} <= 10 and 2*{d} + 1 = {} <= {total}",
                2 * d + 1
            ),
            Rule::Simple => format!("dim G + k > 2d + 1: {h} + {k} = {total} > 2*{d} + 1 = {}", 2 * d + 1),
            Rule::Semisimple => {
                let r = g.simple_count();
                format!("dim G + k > 2d + r: {h} + {k} = {total} > 2*{d} + {r} = {}", 2 * d + r)
            }
            Rule::ProductAffine => format!(
                "2d + 1 <= m + dim H and d <= m: 2*{d} + 1 = {} <= {k} + {h} = {total} and {d} <= {k}",
                2 * d + 1
            ),
            Rule::Sl2Products => {
                let s = g.sl2_count().unwrap_or(0);
                let m = k;
                let base = format!("2d + 1 <= m + 3s: 2*{d} + 1 = {} <= {m} + 3*{s} = {}", 2 * d + 1, m + 3 * s);
                if d <= m + s {
                    format!("{base} and d <= m + s: {d} <= {}", m + s)
                } else if (m + 3 * s) % 2 == 1 {
                    format!("{base} and m + 3s odd with s - 1 <= m: {} <= {m}", s as i64 - 1)
                } else {
                    format!("{base} and m + 3s even with s - 2 <= m: {} <= {m}", s as i64 - 2)
                }
            }
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `dim G + k > 2d + 1` for a simple `G`.
pub fn rule_simple(q: &EmbedQuery) -> bool {
    q.target.as_simple().is_some() && q.target.total_dim() > 2 * q.d + 1
}

/// `dim G + k > 2d + r`, `r` the number of simple factors.
pub fn rule_semisimple(q: &EmbedQuery) -> bool {
    let r = q.target.simple_count();
    r >= 1 && q.target.total_dim() > 2 * q.d + r
}

/// `2d + 1 <= m + dim H` and `d <= m`, with `H` the semisimple part and `m = k`.
pub fn rule_product_affine(q: &EmbedQuery) -> bool {
    2 * q.d + 1 <= q.target.total_dim() && q.d <= q.target.affine_dim()
}

/// `A^m x SL_2^s`: `2d + 1 <= m + 3s` and `d <= m + s`, where the second
/// condition may be replaced by `s - 1 <= m` (`m + 3s` odd) or `s - 2 <= m`
/// (`m + 3s` even).
pub fn rule_sl2_products(q: &EmbedQuery) -> bool {
    let Some(s) = q.target.sl2_count() else {
        return false;
    };
    let m = q.target.affine_dim();
    let d = q.d;
    let bound = m + 3 * s;
    if 2 * d + 1 > bound {
        return false;
    }
    d <= m + s || (bound % 2 == 1 && s <= m + 1) || (bound % 2 == 0 && s <= m + 2)
}

/// Characterless groups of dimension at most 10 other than `sl_2^3` and
/// `sl_3 x k`: `2d + 1 <= dim G`.
pub fn rule_lowdim(q: &EmbedQuery) -> bool {
    let total = q.target.total_dim();
    total <= 10 && 2 * q.d + 1 <= total && !q.target.is_lowdim_exception()
}

/// `2d >= dim G`: some smooth irreducible affine variety of dimension `d`
/// does not embed.
pub fn rule_nonembed(q: &EmbedQuery) -> bool {
    let total = q.target.total_dim();
    total >= 1 && 2 * q.d >= total
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum VerdictKind {
    Embeds,
    ExistsNonEmbeddable,
    Unknown,
}

impl VerdictKind {
    pub fn name(self) -> &'static str {
        match self {
            VerdictKind::Embeds => "Embeds",
            VerdictKind::ExistsNonEmbeddable => "ExistsNonEmbeddable",
            VerdictKind::Unknown => "Unknown",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            VerdictKind::Embeds => 0,
            VerdictKind::ExistsNonEmbeddable => 1,
            VerdictKind::Unknown => 2,
        }
    }
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub kind: VerdictKind,
    /// Set exactly when `kind` is `Embeds`.
    pub witness: Option<Rule>,
    /// Instantiated inequality behind the verdict.
    pub inequality: String,
    pub total_dim: u64,
    pub d: u64,
}

impl Verdict {
    /// Quantifier reading of the verdict.
    pub fn semantics(&self) -> String {
        let d = self.d;
        match self.kind {
            VerdictKind::Embeds => {
                format!("every smooth affine variety of dimension {d} admits an embedding into the target")
            }
            VerdictKind::ExistsNonEmbeddable => format!(
                "some smooth irreducible affine variety of dimension {d} admits no embedding into the target"
            ),
            VerdictKind::Unknown => format!(
                "undecided: no rule shows that every smooth affine variety of dimension {d} embeds, \
                 and none produces one that does not"
            ),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "verdict": self.kind.name(),
            "rule": self.witness.map(Rule::name),
            "inequality": self.inequality,
            "total_dim": self.total_dim,
            "d": self.d,
            "semantics": self.semantics(),
        })
    }
}

pub fn firing_rules(q: &EmbedQuery) -> Vec<Rule> {
    Rule::ORDER.into_iter().filter(|r| r.fires(q)).collect()
}

pub fn verdict(q: &EmbedQuery) -> Result<Verdict> {
    let fired = firing_rules(q);
    let nonembed = rule_nonembed(q);
    let total = q.target.total_dim();
    if let (Some(rule), true) = (fired.first(), nonembed) {
        return Err(Error::Consistency(format!(
            "{} with d = {}: rule {rule} and the non-embeddability bound both fire",
            q.target, q.d
        )));
    }
    let (kind, witness, inequality) = match fired.first() {
        Some(&rule) => (VerdictKind::Embeds, Some(rule), rule.instantiate(q)),
        None if nonembed => (
            VerdictKind::ExistsNonEmbeddable,
            None,
            format!("2d >= dim G: 2*{} = {} >= {total}", q.d, 2 * q.d),
        ),
        None => (
            VerdictKind::Unknown,
            None,
            format!(
                "2d < dim G but no embedding rule applies: 2*{} = {} < {total}",
                q.d,
                2 * q.d
            ),
        ),
    };
    Ok(Verdict {
        kind,
        witness,
        inequality,
        total_dim: total,
        d: q.d,
    })
}

/// Per-factor choice in a parabolic certificate: the deleted nodes of the
/// standard parabolic in that factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorParabolic {
    pub ty: SimpleType,
    pub deleted: Vec<usize>,
    pub dim_unip_rad: u64,
    pub dim_pu: u64,
}

/// Parabolic `P` of the semisimple part for the general criterion
/// `2d + dim P - dim P^u < dim G + k`, valid when
/// `dim P^u - 1 <= 3 dim R_u(P)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneralCertificate {
    pub factors: Vec<FactorParabolic>,
    /// `dim P - dim P^u`, the total number of deleted nodes.
    pub codim: u64,
    pub dim_unip_rad: u64,
    pub dim_pu: u64,
    pub certifies: bool,
    pub inequality: String,
}

/// Ranks up to this bound are searched over every node subset; larger ranks
/// only over the empty, maximal and Borel deletions.
const EXHAUSTIVE_RANK: usize = 10;

/// For one simple factor: for each number `c` of deleted nodes, the deletion
/// maximising `3 dim R_u - dim P^u`.
fn best_by_codim(ty: SimpleType) -> Result<Vec<Option<(i64, FactorParabolic)>>> {
    let rs = RootSystem::new(ty);
    let n = ty.rank();
    let mut best: Vec<Option<(i64, FactorParabolic)>> = vec![None; n + 1];
    let candidates: Vec<NodeSet> = if n <= EXHAUSTIVE_RANK {
        (0..1u64 << n).map(|m| NodeSet::from_mask(n, m)).collect()
    } else {
        let mut v = vec![NodeSet::full(n), NodeSet::empty(n)];
        for s in 1..=n {
            v.push(NodeSet::maximal(n, s)?);
        }
        v
    };
    for set in candidates {
        let p = parabolic_profile(&rs, &set)?;
        let slack = 3 * p.dim_unip_rad as i64 - p.dim_pu as i64;
        let c = p.codim_count as usize;
        if best[c].as_ref().map_or(true, |(b, _)| slack > *b) {
            best[c] = Some((
                slack,
                FactorParabolic {
                    ty,
                    deleted: set.deleted().collect(),
                    dim_unip_rad: p.dim_unip_rad,
                    dim_pu: p.dim_pu,
                },
            ));
        }
    }
    Ok(best)
}

/// Smallest `dim P - dim P^u` over products of standard parabolics with
/// `dim P^u - 1 <= 3 dim R_u(P)`, and whether it certifies the query.
/// Diagnostic only; never consulted by [`verdict`].
pub fn general_parabolic_certificate(q: &EmbedQuery) -> Result<Option<GeneralCertificate>> {
    let g = &q.target;
    if g.simple_count() == 0 {
        return Ok(None);
    }
    // dp[c] = best (slack, choices) using exactly c deleted nodes so far
    let mut dp: Vec<Option<(i64, Vec<FactorParabolic>)>> = vec![Some((0, Vec::new()))];
    for &(ty, mult) in g.factors() {
        let options = best_by_codim(ty)?;
        for _ in 0..mult {
            let mut next: Vec<Option<(i64, Vec<FactorParabolic>)>> = vec![None; dp.len() + ty.rank()];
            for (c0, entry) in dp.iter().enumerate() {
                let Some((s0, chosen)) = entry else { continue };
                for (c1, opt) in options.iter().enumerate() {
                    let Some((s1, fp)) = opt else { continue };
                    let total = s0 + s1;
                    let slot = &mut next[c0 + c1];
                    if slot.as_ref().map_or(true, |(b, _)| total > *b) {
                        let mut v = chosen.clone();
                        v.push(fp.clone());
                        *slot = Some((total, v));
                    }
                }
            }
            dp = next;
        }
    }
    let Some((codim, (_, factors))) = dp
        .into_iter()
        .enumerate()
        .find_map(|(c, e)| e.filter(|(slack, _)| *slack >= -1).map(|e| (c, e)))
    else {
        return Ok(None);
    };
    let codim = codim as u64;
    let dim_unip_rad = factors.iter().map(|f| f.dim_unip_rad).sum();
    let dim_pu = factors.iter().map(|f| f.dim_pu).sum();
    let total = g.total_dim();
    let lhs = 2 * q.d + codim;
    Ok(Some(GeneralCertificate {
        certifies: lhs < total,
        inequality: format!(
            "2d + dim P - dim P^u < dim G + k: 2*{} + {codim} = {lhs} < {total}",
            q.d
        ),
        factors,
        codim,
        dim_unip_rad,
        dim_pu,
    }))
}
