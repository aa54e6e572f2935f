//! Acceptance suite. Prints one PASS/FAIL line per criterion; run with
//! `cargo test -p liebound-cli --test acceptance -- --nocapture`.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use liebound::audit::{check_round_trip, check_verdict_fuzz, SEED};
use liebound::homotopy::{coincidence_audit, rational_homotopy_type};
use liebound::parabolic::{levi_ss_dim, parabolic_profile, NodeSet};
use liebound::search::{certificate, good_nodes, margin_audit, standard_node};
use liebound::tables::{emit_table, TableId};
use liebound::{parse_expr, verdict, EmbedQuery, Family, RootSystem, SimpleType, VerdictKind};

type Outcome = Result<String, String>;

const CRIT1_LIMIT: Duration = Duration::from_secs(1);
const CRIT4_LIMIT: Duration = Duration::from_secs(5);
const VERIFY_LIMIT: Duration = Duration::from_secs(10);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    check(took < limit, || format!("{what} took {took:?}, limit {limit:?}"))
}

fn ty(f: Family, n: usize) -> SimpleType {
    SimpleType::new(f, n).unwrap()
}

/// Dimension of a simple type from the family formulas alone.
fn textbook_dim(t: SimpleType) -> u64 {
    let n = t.rank() as u64;
    match t.family() {
        Family::A => n * n + 2 * n,
        Family::B | Family::C => 2 * n * n + n,
        Family::D => 2 * n * n - n,
        Family::E => [78, 133, 248][t.rank() - 6],
        Family::F => 52,
        Family::G => 14,
    }
}

fn crit1() -> Outcome {
    let start = Instant::now();
    let types = SimpleType::all_up_to(12);
    for &t in &types {
        let rs = RootSystem::new(t);
        let from_roots = t.rank() as u64 + 2 * rs.positive_roots().len() as u64;
        check(textbook_dim(t) == from_roots, || format!("{t}: {} vs {from_roots}", textbook_dim(t)))?;
        check(t.dim() == from_roots, || format!("{t}: library closed form {}", t.dim()))?;
    }
    within(CRIT1_LIMIT, start, "dimension check")?;
    Ok(format!("{} types in {:?}", types.len(), start.elapsed()))
}

fn crit2() -> Outcome {
    let rs = RootSystem::new(ty(Family::B, 4));
    let set = NodeSet::maximal(4, 2).unwrap();
    let levi = levi_ss_dim(&rs, &set).map_err(|e| e.to_string())?;
    check(levi == 13, || format!("levi_ss_dim = {levi}"))?;
    let p = parabolic_profile(&rs, &set).map_err(|e| e.to_string())?;
    let got = [p.dim_g, p.dim_levi_ss, p.dim_unip_rad, p.dim_p, p.dim_pu];
    check(got == [36, 13, 11, 25, 24], || format!("profile {got:?}"))?;
    Ok(format!("profile {got:?}"))
}

fn crit3() -> Outcome {
    let expect = [
        (ty(Family::E, 6), 19),
        (ty(Family::E, 7), 26),
        (ty(Family::E, 8), 35),
        (ty(Family::F, 4), 21),
        (ty(Family::G, 2), 3),
    ];
    for (t, dim) in expect {
        let rs = RootSystem::new(t);
        let got = certificate(&rs, standard_node(t)).map_err(|e| e.to_string())?.profile.dim_levi_ss;
        check(got == dim, || format!("{t}: dim L^u = {got}, want {dim}"))?;
    }
    let types = SimpleType::all_up_to(12);
    for &t in &types {
        let good: BTreeSet<usize> = good_nodes(&RootSystem::new(t)).map_err(|e| e.to_string())?;
        check(good.contains(&standard_node(t)), || format!("{t}: node {} not in {good:?}", standard_node(t)))?;
    }
    Ok(format!("levi dims (19, 26, 35, 21, 3); standard node good for {} types", types.len()))
}

fn crit4() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for t in SimpleType::all_up_to(8) {
        let rs = RootSystem::new(t);
        for s in 1..=t.rank() {
            let p = parabolic_profile(&rs, &NodeSet::maximal(t.rank(), s).unwrap()).map_err(|e| e.to_string())?;
            check(p.dim_p - p.dim_pu == 1, || format!("{t} node {s}: dim P - dim P^u = {}", p.dim_p as i64 - p.dim_pu as i64))?;
            check(p.dim_g == p.dim_unip_rad + p.dim_p, || format!("{t} node {s}: dim G != dim R_u + dim P"))?;
            count += 1;
        }
    }
    within(CRIT4_LIMIT, start, "identity check")?;
    Ok(format!("{count} maximal parabolics in {:?}", start.elapsed()))
}

/// Semisimple Levi dimension at a classical node from the shape of the
/// remaining diagram: an `A_{s-1}` chain plus a tail of the same family.
fn classical_levi(t: SimpleType, s: usize) -> u64 {
    let n = t.rank();
    let a = |m: usize| textbook_dim(ty(Family::A, m.max(1))) * (m > 0) as u64;
    let m = (n - s) as u64;
    let tail = match t.family() {
        Family::A => a(n - s),
        Family::B | Family::C => 2 * m * m + m,
        Family::D => 2 * m * m - m,
        _ => unreachable!(),
    };
    a(s - 1) + tail
}

fn crit5() -> Outcome {
    let mut count = 0;
    for t in SimpleType::all_up_to(50).into_iter().filter(|t| t.is_classical()) {
        let rs = RootSystem::new(t);
        let margin = margin_audit(&rs).map_err(|e| e.to_string())?;
        let oracle = textbook_dim(t) as i64 - 2 * classical_levi(t, standard_node(t)) as i64 - 1;
        check(margin == oracle, || format!("{t}: margin {margin}, oracle {oracle}"))?;
        if t.family() == Family::A {
            let want = if t.rank() % 2 == 1 { 2 } else { 1 };
            check(margin == want, || format!("{t}: margin {margin}, want {want}"))?;
        } else {
            check(margin >= 0, || format!("{t}: margin {margin}"))?;
        }
        count += 1;
    }
    Ok(format!("{count} classical types up to rank 50"))
}

fn crit6() -> Outcome {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/golden/homotopy.tsv");
    let golden = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    let got = emit_table(TableId::Homotopy).map_err(|e| e.to_string())?.to_tsv();
    check(got == golden, || "homotopy table differs from golden file".into())?;
    check(golden.lines().count() == 10, || "golden file does not have 9 rows".into())?;
    for t in SimpleType::all_up_to(12) {
        let h = rational_homotopy_type(t).map_err(|e| e.to_string())?;
        check(h.sum() == textbook_dim(t), || format!("{t}: sum {} != dim", h.sum()))?;
    }
    let pairs = coincidence_audit(12).map_err(|e| e.to_string())?;
    let want: Vec<_> = (3..=12).map(|m| (ty(Family::B, m), ty(Family::C, m))).collect();
    check(pairs == want, || format!("coincidences {pairs:?}"))?;
    Ok(format!("9 rows byte-exact; {} coincident pairs (B_m, C_m)", pairs.len()))
}

fn crit7() -> Outcome {
    let fixtures = [
        ("G2", 6, VerdictKind::Embeds),
        ("G2", 7, VerdictKind::ExistsNonEmbeddable),
        ("A3", 7, VerdictKind::Unknown),
        ("A1^3", 4, VerdictKind::Unknown),
        ("A2 x Aff1", 4, VerdictKind::Unknown),
        ("B2", 4, VerdictKind::Embeds),
        ("B2", 5, VerdictKind::ExistsNonEmbeddable),
    ];
    for (text, d, want) in fixtures {
        let got = verdict(&EmbedQuery::new(parse_expr(text).map_err(|e| e.to_string())?, d))
            .map_err(|e| e.to_string())?
            .kind;
        check(got == want, || format!("{text}, d = {d}: {got}, want {want}"))?;
    }
    Ok(format!("{} fixtures", fixtures.len()))
}

fn crit8() -> Outcome {
    check_verdict_fuzz(10_000, SEED).map_err(|e| e.to_string())?;
    check_round_trip(1_000, SEED).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_liebound"))
        .arg("verify")
        .output()
        .map_err(|e| e.to_string())?;
    let took = start.elapsed();
    check(out.status.success(), || {
        format!("verify exited with {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stdout))
    })?;
    within(VERIFY_LIMIT, start, "verify")?;
    Ok(format!("10000 fuzz queries, 1000 round trips, verify in {took:?}"))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("dimension cross-check", crit1),
        ("B4 parabolic fixture", crit2),
        ("exceptional parabolic table", crit3),
        ("maximal parabolic identities", crit4),
        ("margin formulas", crit5),
        ("rational homotopy table", crit6),
        ("verdict fixtures", crit7),
        ("property suites and verify", crit8),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                println!("FAIL {} {name}: {detail}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
