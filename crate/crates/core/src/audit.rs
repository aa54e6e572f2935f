//! Full self-check run by `liebound verify`.
//!
//! Each check reports one line. Randomised checks use a fixed seed so the
//! run is reproducible.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::{firing_rules, rule_nonembed, verdict, EmbedQuery, GroupExpr, VerdictKind};
use crate::error::Result;
use crate::expr::{format_expr, parse_expr};
use crate::homotopy::{coincidence_audit, pi3_audit, rational_homotopy_type};
use crate::lie_core::{dimension_of, Family, RootSystem, SimpleType};
use crate::parabolic::{parabolic_profile, NodeSet};
use crate::search::{good_nodes, margin_audit, standard_node};
use crate::tables::{emit_table, TableId};

pub const SEED: u64 = 0x5eed_1e5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn from_result(name: &'static str, r: Result<String>) -> CheckOutcome {
        match r {
            Ok(detail) => CheckOutcome { name, passed: true, detail },
            Err(e) => CheckOutcome {
                name,
                passed: false,
                detail: e.to_string(),
            },
        }
    }

    fn fail(name: &'static str, detail: String) -> CheckOutcome {
        CheckOutcome { name, passed: false, detail }
    }
}

/// Random target built from types of rank at most 8, at most three distinct
/// factors, multiplicity at most 3 and `k <= 20`.
pub fn random_expr<R: Rng>(rng: &mut R) -> GroupExpr {
    let pool = SimpleType::all_up_to(8);
    loop {
        let n = rng.gen_range(0..=3);
        let factors: Vec<(SimpleType, u32)> = (0..n)
            .map(|_| (*pool.choose(rng).unwrap(), rng.gen_range(1..=3)))
            .collect();
        let k = rng.gen_range(0..=20);
        if let Ok(e) = GroupExpr::new(factors, k) {
            return e;
        }
    }
}

pub fn check_dimensions() -> Result<String> {
    let types = SimpleType::all_up_to(12);
    for &ty in &types {
        dimension_of(&RootSystem::new(ty))?;
    }
    Ok(format!("{} types agree", types.len()))
}

/// Dimension identities for every node subset of every type of rank <= 8,
/// `dim P - dim P^u = 1` for maximal parabolics, and monotonicity along
/// inclusions.
pub fn check_parabolic_identities() -> Result<String> {
    let mut profiles = 0usize;
    for ty in SimpleType::all_up_to(8) {
        let rs = RootSystem::new(ty);
        let n = ty.rank();
        let mut levi = Vec::with_capacity(1 << n);
        let mut unip = Vec::with_capacity(1 << n);
        for mask in 0..1u64 << n {
            let p = parabolic_profile(&rs, &NodeSet::from_mask(n, mask))?;
            p.check()?;
            if mask.count_ones() as usize == n - 1 && p.dim_p - p.dim_pu != 1 {
                return Err(crate::Error::Consistency(format!("{ty}: maximal parabolic {mask:b} has dim P - dim P^u != 1")));
            }
            levi.push(p.dim_levi_ss);
            unip.push(p.dim_unip_rad);
            profiles += 1;
        }
        for i in 0..1usize << n {
            // supersets of i
            let free = !i & ((1 << n) - 1);
            let mut sub = free;
            loop {
                let j = i | sub;
                if levi[i] > levi[j] || unip[i] < unip[j] {
                    return Err(crate::Error::Consistency(format!("{ty}: monotonicity fails for {i:b} in {j:b}")));
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & free;
            }
        }
    }
    Ok(format!("{profiles} parabolics"))
}

pub fn check_good_nodes() -> Result<String> {
    let types = SimpleType::all_up_to(12);
    for &ty in &types {
        let rs = RootSystem::new(ty);
        let good = good_nodes(&rs)?;
        if !good.contains(&standard_node(ty)) {
            return Err(crate::Error::Consistency(format!(
                "{ty}: node {} not among {good:?}",
                standard_node(ty)
            )));
        }
    }
    Ok(format!("{} types", types.len()))
}

pub fn check_margins(max_rank: usize) -> Result<String> {
    let types = SimpleType::all_up_to(max_rank);
    for &ty in &types {
        margin_audit(&RootSystem::new(ty))?;
    }
    Ok(format!("{} types up to rank {max_rank}", types.len()))
}

pub fn check_homotopy() -> Result<String> {
    for ty in SimpleType::all_up_to(12) {
        rational_homotopy_type(ty)?;
        if !pi3_audit(ty)? {
            return Err(crate::Error::Consistency(format!("{ty}: pi_3 is not Q")));
        }
    }
    let pairs = coincidence_audit(12)?;
    let expected: Vec<(SimpleType, SimpleType)> = (3..=12)
        .map(|m| {
            (
                SimpleType::new(Family::B, m).unwrap(),
                SimpleType::new(Family::C, m).unwrap(),
            )
        })
        .collect();
    if pairs != expected {
        return Err(crate::Error::Consistency(format!("unexpected coincidences {pairs:?}")));
    }
    Ok(format!("{} coincident pairs, all (B_m, C_m)", pairs.len()))
}

/// Exclusivity and monotonicity over random queries.
pub fn check_verdict_fuzz(count: usize, seed: u64) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let target = random_expr(&mut rng);
        let d = rng.gen_range(0..=40);
        let q = EmbedQuery::new(target.clone(), d);
        if !firing_rules(&q).is_empty() && rule_nonembed(&q) {
            return Err(crate::Error::Consistency(format!("{target}, d = {d}: both sides fire")));
        }
        let v = verdict(&q)?;
        if v.kind == VerdictKind::Embeds {
            let up = target.clone().with_affine(target.affine_dim() + 1);
            if verdict(&EmbedQuery::new(up, d))?.kind != VerdictKind::Embeds {
                return Err(crate::Error::Consistency(format!("{target}, d = {d}: not monotone in k")));
            }
        }
        if v.kind == VerdictKind::ExistsNonEmbeddable
            && verdict(&EmbedQuery::new(target.clone(), d + 1))?.kind != VerdictKind::ExistsNonEmbeddable
        {
            return Err(crate::Error::Consistency(format!("{target}, d = {d}: not anti-monotone in d")));
        }
    }
    Ok(format!("{count} queries"))
}

/// Every simple group of rank <= 8 receives every `d` with `2d + 1 < dim G`.
pub fn check_simple_rule() -> Result<String> {
    let mut n = 0;
    for ty in SimpleType::all_up_to(8) {
        let dim = ty.dim();
        for d in 0.. {
            if 2 * d + 1 >= dim {
                break;
            }
            let v = verdict(&EmbedQuery::new(GroupExpr::simple(ty), d))?;
            if v.kind != VerdictKind::Embeds {
                return Err(crate::Error::Consistency(format!("{ty}, d = {d}: {}", v.kind)));
            }
            n += 1;
        }
    }
    Ok(format!("{n} queries"))
}

/// The fixed verdict fixtures, as `(expression, d, expected)`.
pub const VERDICT_FIXTURES: [(&str, u64, VerdictKind); 7] = [
    ("G2", 6, VerdictKind::Embeds),
    ("G2", 7, VerdictKind::ExistsNonEmbeddable),
    ("A3", 7, VerdictKind::Unknown),
    ("A1^3", 4, VerdictKind::Unknown),
    ("A2 x Aff1", 4, VerdictKind::Unknown),
    ("B2", 4, VerdictKind::Embeds),
    ("B2", 5, VerdictKind::ExistsNonEmbeddable),
];

pub fn check_fixtures() -> Result<String> {
    for (text, d, want) in VERDICT_FIXTURES {
        let got = verdict(&EmbedQuery::new(parse_expr(text)?, d))?.kind;
        if got != want {
            return Err(crate::Error::Consistency(format!("{text}, d = {d}: {got}, expected {want}")));
        }
    }
    Ok(format!("{} fixtures", VERDICT_FIXTURES.len()))
}

pub fn check_round_trip(count: usize, seed: u64) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let e = random_expr(&mut rng);
        let text = format_expr(&e);
        let back = parse_expr(&text)?;
        if back != e {
            return Err(crate::Error::Consistency(format!("`{text}` parsed to `{back}`")));
        }
    }
    Ok(format!("{count} expressions"))
}

pub fn check_golden_tables() -> Result<String> {
    for id in TableId::ALL {
        let tsv = emit_table(id)?.to_tsv();
        if tsv != id.golden() {
            return Err(crate::Error::Consistency(format!("table {id} differs from its golden copy")));
        }
    }
    Ok(format!("{} tables", TableId::ALL.len()))
}

/// Runs every check; never stops early.
pub fn run_all() -> Vec<CheckOutcome> {
    let checks: Vec<(&'static str, Box<dyn Fn() -> Result<String>>)> = vec![
        ("dimensions", Box::new(check_dimensions)),
        ("parabolic-identities", Box::new(check_parabolic_identities)),
        ("good-nodes", Box::new(check_good_nodes)),
        ("margins", Box::new(|| check_margins(50))),
        ("homotopy", Box::new(check_homotopy)),
        ("verdict-fixtures", Box::new(check_fixtures)),
        ("simple-rule", Box::new(check_simple_rule)),
        ("verdict-fuzz", Box::new(|| check_verdict_fuzz(10_000, SEED))),
        ("round-trip", Box::new(|| check_round_trip(1_000, SEED))),
        ("golden-tables", Box::new(check_golden_tables)),
    ];
    checks
        .into_iter()
        .map(|(name, f)| match std::panic::catch_unwind(std::panic::AssertUnwindSafe(&f)) {
            Ok(r) => CheckOutcome::from_result(name, r),
            Err(_) => CheckOutcome::fail(name, "panicked".into()),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fuzz_and_round_trip() {
        check_verdict_fuzz(500, 7).unwrap();
        check_round_trip(200, 7).unwrap();
    }

    #[test]
    fn fixtures_hold() {
        check_fixtures().unwrap();
    }

    #[test]
    fn random_exprs_stay_in_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let e = random_expr(&mut rng);
            assert!(e.affine_dim() <= 20);
            assert!(e.factors().iter().all(|(t, _)| t.rank() <= 8));
        }
    }
}
