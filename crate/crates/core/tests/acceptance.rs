//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use domino_ideals::betti::{
    betti_hochster, betti_koszul, char_independence, gamma_complement, projective_dimension, regularity,
    verify_sphere_claims, GradedBettiTable,
};
use domino_ideals::homology::{reduced_homology_field, reduced_homology_z, rp2, FieldSpec};
use domino_ideals::ideal::{split_domino, split_intersection, verify_splitting};
use domino_ideals::recursion::{betti_recursive, reconcile, relations_check, splitting_identity_check, BaseCaseTable};
use domino_ideals::tiling::{domino_ideal, enumerate_tilings};
use domino_ideals::{MonomialIdeal, SimplicialComplex, Universe, VariableId};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed <= limit, || format!("{what} took {elapsed:?}, limit {limit:?}"))
}

/// Tables from a separate prototype implementation, ideal indexing.
fn frozen_table(n: usize) -> Vec<((usize, usize), u64)> {
    match n {
        1 => vec![((0, 1), 1)],
        2 => vec![((0, 2), 2), ((1, 4), 1)],
        3 => vec![((0, 3), 3), ((1, 5), 2), ((1, 6), 1), ((2, 7), 1)],
        4 => vec![((0, 4), 5), ((1, 6), 5), ((1, 7), 2), ((1, 8), 1), ((2, 8), 3), ((2, 9), 2), ((3, 10), 1)],
        5 => vec![
            ((0, 5), 8),
            ((1, 7), 10),
            ((1, 8), 5),
            ((1, 9), 2),
            ((1, 10), 1),
            ((2, 9), 8),
            ((2, 10), 6),
            ((2, 11), 3),
            ((3, 11), 4),
            ((3, 12), 3),
            ((4, 13), 1),
        ],
        6 => vec![
            ((0, 6), 13),
            ((1, 8), 20),
            ((1, 9), 10),
            ((1, 10), 5),
            ((1, 11), 2),
            ((1, 12), 1),
            ((2, 10), 19),
            ((2, 11), 16),
            ((2, 12), 9),
            ((2, 13), 4),
            ((3, 12), 12),
            ((3, 13), 12),
            ((3, 14), 6),
            ((4, 14), 5),
            ((4, 15), 4),
            ((5, 16), 1),
        ],
        _ => unreachable!(),
    }
}

/// `Σ_i (−1)^i β_{i,j}` from the Taylor complex: signed count of generator
/// subsets by the degree of their lcm.
fn taylor_euler(ideal: &MonomialIdeal) -> BTreeMap<usize, i64> {
    let gens: Vec<u64> = ideal.generators().iter().map(|g| g.mask()).collect();
    let mut out = BTreeMap::new();
    for s in 1u64..1 << gens.len() {
        let lcm = (0..gens.len()).filter(|k| s >> k & 1 == 1).fold(0, |acc, k| acc | gens[k]);
        let sign = if s.count_ones() % 2 == 1 { 1 } else { -1 };
        *out.entry(lcm.count_ones() as usize).or_insert(0) += sign;
    }
    out.retain(|_, v| *v != 0);
    out
}

fn table_euler(t: &GradedBettiTable) -> BTreeMap<usize, i64> {
    let mut out = BTreeMap::new();
    for ((i, j), v) in t.entries() {
        *out.entry(j).or_insert(0) += if i % 2 == 0 { v as i64 } else { -(v as i64) };
    }
    out.retain(|_, v| *v != 0);
    out
}

fn show(c: &SimplicialComplex) -> String {
    format!("<{}>", c.facet_names().join(", "))
}

/// Printed facets, rewritten in canonical order.
fn canonical(universe: Universe, facets: &[&str]) -> String {
    show(&SimplicialComplex::parse(universe, facets).unwrap())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let counts: Vec<usize> = (1..=12).map(|n| enumerate_tilings(n).unwrap().len()).collect();
    let elapsed = start.elapsed();
    ensure(counts == [1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233], || format!("counts {counts:?}"))?;
    within(elapsed, Duration::from_secs(1), "enumeration")?;
    Ok(format!("|T_1..12| = {counts:?}"))
}

fn criterion_2() -> Outcome {
    let i3 = domino_ideal(3).unwrap().to_string();
    ensure(i3 == "(x1x3y3, x2x4y1, y1y2y3)", || format!("I_3 = {i3}"))?;
    let i4 = domino_ideal(4).unwrap().to_string();
    ensure(i4 == "(x1x3x4x6, x1x4y3y4, x2x5y1y4, x3x6y1y2, y1y2y3y4)", || format!("I_4 = {i4}"))?;

    let (b3, b4) = (Universe::board(3).unwrap(), Universe::board(4).unwrap());
    let g3 = gamma_complement(3).unwrap();
    let g4 = gamma_complement(4).unwrap();
    let cases = [
        ("Γ_3^c", show(&g3), canonical(b3, &["x2x4y1y2", "x1x3y2y3", "x1x2x3x4"])),
        ("del_3(y2)", show(&g3.deletion(VariableId::y(2)).unwrap()), canonical(b3, &["x2x4y1", "x1x3y3", "x1x2x3x4"])),
        ("lk_3(y2)", show(&g3.link(VariableId::y(2)).unwrap()), canonical(b3, &["x2x4y1", "x1x3y3"])),
        (
            "Γ_4^c",
            show(&g4),
            canonical(b4, &["x2x5y1y2y3y4", "x2x3x5x6y1y2", "x1x3x4x6y2y3", "x1x2x4x5y3y4", "x1x2x3x4x5x6"]),
        ),
        (
            "del_4(y3)",
            show(&g4.deletion(VariableId::y(3)).unwrap()),
            canonical(b4, &["x2x5y1y2y4", "x2x3x5x6y1y2", "x1x3x4x6y2", "x1x2x4x5y4", "x1x2x3x4x5x6"]),
        ),
        (
            "lk_4(y3)",
            show(&g4.link(VariableId::y(3)).unwrap()),
            canonical(b4, &["x2x5y1y2y4", "x1x3x4x6y2", "x1x2x4x5y4"]),
        ),
    ];
    for (name, got, expected) in &cases {
        ensure(got == expected, || format!("{name}: got {got}, expected {expected}"))?;
    }
    Ok(format!("I_3, I_4 and {} complexes match", cases.len()))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut summary = Vec::new();
    for n in 3..=6 {
        let r = verify_sphere_claims(n).unwrap();
        ensure(r.passed(), || format!("n = {n}: {} | {} | {}", r.complement, r.link, r.deletion))?;
        let torsion = r.complement.has_torsion() || r.link.has_torsion() || r.deletion.has_torsion();
        ensure(!torsion, || format!("n = {n}: torsion present"))?;
        summary.push(format!("n={n}: {} / {}", r.complement, r.link));
    }
    within(start.elapsed(), Duration::from_secs(60), "sphere checks")?;
    Ok(summary.join("; "))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    for n in 3..=6 {
        let ideal = domino_ideal(n).unwrap();
        for field in [FieldSpec::Rationals, FieldSpec::PrimeField(2)] {
            let h = betti_hochster(&ideal, field).unwrap();
            let k = betti_koszul(&ideal, field).graded;
            ensure(h == k, || format!("n = {n} over {field}: {:?}", h.differences(&k)))?;
            let frozen = GradedBettiTable::from_entries(field, frozen_table(n));
            ensure(k == frozen, || format!("n = {n} over {field}: prototype differs {:?}", k.differences(&frozen)))?;
            ensure(table_euler(&k) == taylor_euler(&ideal), || format!("n = {n}: Taylor Euler characteristic"))?;
        }
    }
    within(start.elapsed(), Duration::from_secs(300), "cross-method tables")?;
    Ok("hochster = koszul = prototype tables, Taylor Euler characteristic agrees, n = 3..6 over Q, F2".into())
}

fn criterion_5() -> Outcome {
    let mut scanned = 0;
    for n in 3..=6 {
        let r = char_independence(&domino_ideal(n).unwrap(), &[2, 3, 5]).unwrap();
        ensure(r.all_equal(), || format!("n = {n}: {:?}", r.mismatches))?;
        ensure(r.torsion_free(), || format!("n = {n}: torsion at {:?}", r.torsion[0].source))?;
        let complements = r.complements_scanned.ok_or_else(|| format!("n = {n}: complements not scanned"))?;
        scanned += complements + r.koszul_scanned;
    }
    Ok(format!("Q = F2 = F3 = F5 for n = 3..6; {scanned} complexes scanned over Z, no torsion"))
}

fn criterion_6() -> Outcome {
    for n in 3..=6 {
        let t = betti_koszul(&domino_ideal(n).unwrap(), FieldSpec::Rationals).graded;
        let (pd, reg, corner) = (projective_dimension(&t).unwrap(), regularity(&t).unwrap(), t.get(n - 1, 3 * n - 2));
        ensure(pd == n - 1 && reg == 2 * n as i64 - 1 && corner == 1, || {
            format!("n = {n}: pd {pd}, reg {reg}, beta({},{}) = {corner}", n - 1, 3 * n - 2)
        })?;
    }
    Ok("pd = n-1, reg = 2n-1, beta(n-1,3n-2) = 1 for n = 3..6".into())
}

fn criterion_7() -> Outcome {
    for n in 3..=6 {
        let r = splitting_identity_check(n, FieldSpec::Rationals).unwrap();
        ensure(r.passed(), || format!("identity n = {n}: {:?}", r.mismatches))?;
        let outer = verify_splitting(&split_domino(n).unwrap()).unwrap();
        ensure(outer.passed() && outer.exhaustive, || format!("V+U split n = {n}: {outer:?}"))?;
    }
    for n in 4..=6 {
        let inner = verify_splitting(&split_intersection(n).unwrap()).unwrap();
        ensure(inner.passed() && inner.exhaustive, || format!("intersection split n = {n}: {inner:?}"))?;
    }
    for n in 5..=6 {
        let r = relations_check(n, FieldSpec::Rationals).unwrap();
        ensure(r.passed(), || format!("relations n = {n}: {r:?}"))?;
    }
    Ok("identity n = 3..6, relations n = 5..6, (S1)/(S2) exhaustive n = 3..6".into())
}

fn criterion_8() -> Outcome {
    let report = reconcile(4, 6).unwrap();
    print!("{report}");
    let unique = report.unique_shift().ok_or("no unique shift")?;
    ensure(unique == BaseCaseTable::ideal_indexed(), || format!("unexpected shift {unique}"))?;
    for n in 4..=6 {
        let rec = betti_recursive(n, unique).unwrap();
        let direct = betti_koszul(&domino_ideal(n).unwrap(), FieldSpec::Rationals).graded;
        ensure(rec == direct, || format!("n = {n}: {:?}", direct.differences(&rec)))?;
    }
    Ok(format!("unique base-case setting {unique}; recursion = direct for n = 4..6"))
}

fn criterion_9() -> Outcome {
    let complex = rp2();
    let q = reduced_homology_field(&complex, FieldSpec::Rationals);
    let f2 = reduced_homology_field(&complex, FieldSpec::PrimeField(2));
    ensure(q != f2, || "F2 and Q dimensions agree".into())?;
    let z = reduced_homology_z(&complex);
    let h1 = z.group(1).ok_or("no H~1")?;
    ensure(h1.free_rank == 0 && h1.torsion.len() == 1 && h1.torsion[0] == 2.into(), || format!("H~1 = {h1}"))?;
    Ok(format!("Q dims {q:?}, F2 dims {f2:?}, {z}"))
}

fn criterion_10() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_domino");
    let commands: [&[&str]; 6] = [
        &["compute", "--n", "5", "--format", "table"],
        &["compute", "--min-n", "1", "--max-n", "5", "--method", "all", "--format", "json"],
        &["compute", "--n", "4", "--field", "F3", "--format", "csv"],
        &["verify", "--max-n", "5"],
        &["export", "--n", "4"],
        &["compute", "--n", "0"],
    ];
    for args in commands {
        let runs: Vec<_> = (0..2).map(|_| Command::new(bin).args(args).output().unwrap()).collect();
        ensure(runs[0] == runs[1], || format!("`domino {}` differs between runs", args.join(" ")))?;
    }
    let a = betti_koszul(&domino_ideal(5).unwrap(), FieldSpec::Rationals).graded.to_json(5);
    let b = betti_koszul(&domino_ideal(5).unwrap(), FieldSpec::Rationals).graded.to_json(5);
    ensure(a == b, || "library JSON differs".into())?;
    Ok(format!("{} commands byte-identical across runs", commands.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("tiling counts", criterion_1),
        ("printed objects", criterion_2),
        ("sphere and acyclicity homology", criterion_3),
        ("cross-method Betti agreement", criterion_4),
        ("characteristic independence", criterion_5),
        ("pd, reg and corner entry", criterion_6),
        ("splittings and relations", criterion_7),
        ("recursion reconciliation", criterion_8),
        ("torsion detector", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} ({elapsed:.2?}): {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({elapsed:.2?}): {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
