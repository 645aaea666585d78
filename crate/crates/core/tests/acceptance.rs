//! Acceptance checks, one line per criterion.
//!
//! Run with `cargo test -p pgdesign --test acceptance`.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use pgdesign::catalog::{catalog_search, RankedDesign, Rational};
use pgdesign::collineation::Collineation;
use pgdesign::fixtures;
use pgdesign::geometry::{check_spread, check_star, cyclic_spread, nucleus_of, Design, PrimitivePoly, Spread};
use pgdesign::gf2::{Gf2Matrix, Point};
use pgdesign::isomorphism::{
    check_spread_isomorphism, check_star_isomorphism, star_to_spread, Mismatch, SearchOptions,
};
use pgdesign::signature::{check_spread_equivalence, check_star_equivalence, equivalence_class_size};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const AC1_LIMIT: Duration = Duration::from_secs(10);
const AC3_LIMIT: Duration = Duration::from_secs(300);
const AC10_LIMIT: Duration = Duration::from_secs(120);
const AC11_LIMIT: Duration = Duration::from_secs(60);

const P4_IEC: [[u8; 4]; 4] = [[0, 1, 0, 0], [1, 0, 0, 0], [1, 1, 1, 1], [1, 0, 0, 1]];
const P6_IEC: [[u8; 6]; 6] = [
    [1, 0, 0, 1, 1, 0],
    [0, 1, 0, 1, 0, 0],
    [1, 1, 0, 0, 0, 1],
    [1, 1, 1, 0, 0, 1],
    [0, 1, 0, 1, 0, 1],
    [1, 1, 1, 1, 1, 0],
];
const STAR_REDUCED_IEC: [[u8; 4]; 4] = [[1, 1, 1, 1], [1, 0, 0, 1], [0, 0, 1, 1], [1, 1, 1, 0]];
const STAR_IEC: [[u8; 5]; 5] = [
    [1, 0, 1, 1, 1],
    [1, 1, 1, 0, 0],
    [1, 0, 0, 0, 0],
    [0, 1, 0, 0, 1],
    [0, 1, 1, 1, 1],
];
const STAR_RELABEL: [[u8; 5]; 5] = [
    [0, 0, 0, 0, 1],
    [0, 0, 0, 1, 0],
    [0, 1, 1, 0, 0],
    [1, 0, 1, 0, 0],
    [0, 0, 1, 0, 0],
];

type Check = fn() -> Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn spread(name: &str) -> Spread {
    fixtures::spread(name).unwrap()
}

fn labels(sets: &[&[&str]], n: usize) -> Vec<Vec<Point>> {
    sets.iter()
        .map(|s| s.iter().map(|l| Point::parse(l, n).unwrap()).collect())
        .collect()
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let took = start.elapsed();
    if took < limit {
        Ok(took)
    } else {
        Err(format!("took {took:.2?}, limit {limit:?}"))
    }
}

fn ac1() -> Result<String, String> {
    let start = Instant::now();
    let r = check_spread_isomorphism(&spread("spreadn4t2a"), &spread("spreadn4t2b"), &SearchOptions::find_all())
        .map_err(|e| e.to_string())?;
    let took = within(start, AC1_LIMIT)?;
    ensure!(r.result, "not isomorphic");
    ensure!(r.iecs.len() == 360, "{} IECs, expected 360", r.iecs.len());
    let reference = Collineation::from_rows(&P4_IEC).unwrap();
    ensure!(r.iecs.contains(&reference), "reference IEC missing");
    Ok(format!("360 IECs in {took:.2?}"))
}

fn ac2() -> Result<String, String> {
    let c = Collineation::from_rows(&P4_IEC).unwrap();
    let image = c.apply_spread(&spread("spreadn4t2a")).unwrap();
    ensure!(check_spread_equivalence(&image, &spread("spreadn4t2b")), "image not equivalent");
    Ok("image equivalent".into())
}

fn ac3() -> Result<String, String> {
    let a = spread("spreadn6t3a");
    let b = spread("spreadn6t3b");
    ensure!(!check_spread_equivalence(&a, &b), "unexpectedly equivalent");
    let reference = Collineation::from_rows(&P6_IEC).unwrap();
    ensure!(
        check_spread_equivalence(&reference.apply_spread(&a).unwrap(), &b),
        "reference IEC does not verify"
    );
    let start = Instant::now();
    let r = check_spread_isomorphism(&a, &b, &SearchOptions::find_first()).map_err(|e| e.to_string())?;
    let took = within(start, AC3_LIMIT)?;
    ensure!(r.result && r.iecs.len() == 1, "result {} with {} IECs", r.result, r.iecs.len());
    ensure!(
        check_spread_equivalence(&r.iecs[0].apply_spread(&a).unwrap(), &b),
        "found IEC does not verify"
    );
    Ok(format!("first IEC after {} candidates in {took:.2?}", r.stats.candidates))
}

fn ac4() -> Result<String, String> {
    let r = check_spread_isomorphism(&spread("spread_IC1"), &spread("spread_IC2"), &SearchOptions::find_first())
        .map_err(|e| e.to_string())?;
    ensure!(r.result, "not isomorphic");
    Ok("isomorphic".into())
}

fn ac5() -> Result<String, String> {
    let s1 = fixtures::star("starn5t3a").unwrap();
    let s2 = fixtures::star("starn5t3b").unwrap();
    ensure!(!check_star_equivalence(&s1, &s2), "stars unexpectedly equivalent");
    let r = check_star_isomorphism(&s1, &s2, &SearchOptions::find_first()).map_err(|e| e.to_string())?;
    ensure!(r.result, "stars not isomorphic");

    let psi1 = Spread::from_sets(
        4,
        2,
        labels(
            &[
                &["A", "ABC", "BC"],
                &["B", "CD", "BCD"],
                &["C", "ABD", "ABCD"],
                &["D", "ACD", "AC"],
                &["AB", "BD", "AD"],
            ],
            4,
        ),
    )
    .unwrap();
    let psi2 = Spread::from_sets(
        4,
        2,
        labels(
            &[
                &["C", "ABCD", "ABD"],
                &["AD", "AB", "BD"],
                &["B", "CD", "BCD"],
                &["A", "BC", "ABC"],
                &["D", "AC", "ACD"],
            ],
            4,
        ),
    )
    .unwrap();
    let d1 = star_to_spread(&s1).unwrap();
    let d2 = star_to_spread(&s2).unwrap();
    ensure!(check_spread_equivalence(&d1.spread, &psi1), "psi_1 differs");
    ensure!(check_spread_equivalence(&d2.spread, &psi2), "psi_2 differs");
    ensure!(
        d2.collineation == Collineation::from_rows(&STAR_RELABEL).unwrap(),
        "relabelling collineation differs:\n{}",
        d2.collineation
    );
    let reduced = Collineation::from_rows(&STAR_REDUCED_IEC).unwrap();
    ensure!(
        check_spread_equivalence(&reduced.apply_spread(&psi1).unwrap(), &psi2),
        "reduced IEC does not verify"
    );
    let full = Collineation::from_rows(&STAR_IEC).unwrap();
    ensure!(
        check_star_equivalence(&full.apply_star(&s1).unwrap(), &s2),
        "star IEC does not verify"
    );
    Ok("decomposition and IECs match".into())
}

fn ac6() -> Result<String, String> {
    let pa1 = fixtures::star("star_PA1").unwrap();
    let pa2 = fixtures::star("star_PA2").unwrap();
    let r = check_star_isomorphism(&pa1, &pa2, &SearchOptions::find_first()).map_err(|e| e.to_string())?;
    ensure!(!r.result, "reported isomorphic");
    ensure!(matches!(r.mismatch, Some(Mismatch::Star { .. })), "no dimension mismatch reason");
    let n1 = nucleus_of(pa1.rays()).unwrap();
    ensure!(n1.points() == [Point::parse("ABCDE", 5).unwrap()], "nucleus of PA1 is {n1}");
    let n2 = nucleus_of(pa2.rays()).unwrap();
    let want: BTreeSet<Point> = ["DE", "ACD", "AB", "ACE", "ABDE", "BCD", "BCE"]
        .iter()
        .map(|l| Point::parse(l, 5).unwrap())
        .collect();
    ensure!(n2.points().iter().copied().collect::<BTreeSet<_>>() == want, "nucleus of PA2 is {n2}");
    Ok(r.mismatch.unwrap().to_string())
}

fn ac7() -> Result<String, String> {
    let poly = PrimitivePoly::from_coefficients(&[1, 1, 0, 0, 1]).unwrap();
    let s = cyclic_spread(4, 2, &poly).unwrap();
    let table = Spread::from_sets(
        4,
        2,
        labels(
            &[
                &["D", "BC", "BCD"],
                &["C", "AB", "ABC"],
                &["B", "ACD", "ABCD"],
                &["A", "BD", "ABD"],
                &["CD", "AC", "AD"],
            ],
            4,
        ),
    )
    .unwrap();
    ensure!(check_spread_equivalence(&s, &table), "not equivalent");
    ensure!(s == table, "flat order differs from the table");
    Ok(format!("{poly}"))
}

fn ac8() -> Result<String, String> {
    let size = equivalence_class_size(5, 2).map_err(|e| e.to_string())?;
    ensure!(size == 933_120, "got {size}");
    Ok(size.to_string())
}

fn ac9() -> Result<String, String> {
    let r = |a, b| Rational::new(a, b);
    let a = RankedDesign::new(fixtures::load("spreadn4t2a").unwrap()).unwrap();
    ensure!(a.v_value == r(2, 9), "V = {}", a.v_value);
    ensure!(
        a.p_values == vec![r(2, 3), r(2, 3), r(1, 3), r(2, 3), r(1, 1)],
        "p = {:?}",
        a.p_values
    );
    let c = RankedDesign::new(fixtures::load("spreadn4t2c").unwrap()).unwrap();
    ensure!(c.v_value == r(4, 9), "V = {}", c.v_value);
    ensure!(
        c.p_values == vec![r(1, 3), r(2, 3), r(1, 1), r(1, 3), r(1, 1)],
        "p = {:?}",
        c.p_values
    );
    Ok(format!("{} and {}", a.v_decimal(), c.v_decimal()))
}

fn ac10() -> Result<String, String> {
    let start = Instant::now();
    let cat = catalog_search(&spread("spreadn4t2a"), 100_000, 2024).map_err(|e| e.to_string())?;
    let took = within(start, AC10_LIMIT)?;
    ensure!(cat.entries.len() == 1, "{} classes", cat.entries.len());
    ensure!(cat.spread_hits > 0, "no spread hits");
    Ok(format!("1 class, {} hits in {took:.2?}", cat.spread_hits))
}

/// All invertible `n x n` matrices over GF(2), by exhaustive rank test.
fn all_collineations(n: usize) -> Vec<Collineation> {
    let cells = n * n;
    (0u64..1 << cells)
        .filter_map(|bits| {
            let rows: Vec<u32> = (0..n).map(|r| ((bits >> (r * n)) & ((1 << n) - 1)) as u32).collect();
            Collineation::new(Gf2Matrix::from_packed_rows(rows, n).ok()?).ok()
        })
        .collect()
}

/// Equivalence by matching each flat against the other design's flats.
fn brute_equivalent(a: &Design, b: &Design) -> bool {
    let set = |d: &Design| -> BTreeSet<BTreeSet<Point>> {
        d.flats().iter().map(|f| f.points().iter().copied().collect()).collect()
    };
    a.flats().len() == b.flats().len() && set(a) == set(b)
}

fn ac11() -> Result<String, String> {
    let start = Instant::now();
    let a = spread("spreadn4t2a");
    let b = spread("spreadn4t2b");
    let all = all_collineations(4);
    ensure!(all.len() == 20160, "{} invertible matrices", all.len());
    let oracle: BTreeSet<Collineation> = all
        .into_iter()
        .filter(|c| brute_equivalent(&c.apply_spread(&a).unwrap().into(), &b.clone().into()))
        .collect();
    let r = check_spread_isomorphism(&a, &b, &SearchOptions::find_all()).map_err(|e| e.to_string())?;
    let found: BTreeSet<Collineation> = r.iecs.into_iter().collect();
    let took = within(start, AC11_LIMIT)?;
    ensure!(found == oracle, "search {} vs brute force {}", found.len(), oracle.len());
    Ok(format!("{} IECs agree in {took:.2?}", oracle.len()))
}

fn ac12() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for name in fixtures::NAMES {
        let d = fixtures::load(name).unwrap();
        for _ in 0..100 {
            let c = Collineation::random(d.n(), &mut rng);
            match &d {
                Design::Spread(s) => {
                    let img = c.apply_spread(s).map_err(|e| format!("{name}: {e}"))?;
                    ensure!(check_spread(img.flats(), s.n(), s.t()).is_ok(), "{name}: image not a spread");
                    if s.n() <= 4 {
                        ensure!(
                            check_spread_equivalence(&img, s) == brute_equivalent(&img.clone().into(), &d),
                            "{name}: equivalence disagrees with flat matching"
                        );
                    }
                }
                Design::Star(s) => {
                    let img = c.apply_star(s).map_err(|e| format!("{name}: {e}"))?;
                    if s.is_covering() {
                        ensure!(check_star(img.rays(), s.n()).is_ok(), "{name}: image not a star");
                    }
                    ensure!(img.params() == s.params(), "{name}: parameters changed");
                }
            }
        }
    }

    let opts = SearchOptions::find_first();
    let spreads = ["spreadn4t2a", "spreadn4t2b", "spreadn4t2c"];
    for x in spreads {
        let sx = spread(x);
        let own = check_spread_isomorphism(&sx, &sx, &opts).unwrap();
        ensure!(own.result, "{x} not self-isomorphic");
        for y in spreads {
            let sy = spread(y);
            let fwd = check_spread_isomorphism(&sx, &sy, &SearchOptions::find_all()).unwrap();
            let back = check_spread_isomorphism(&sy, &sx, &opts).unwrap();
            ensure!(fwd.result == back.result, "{x}/{y} not symmetric");
            for c in &fwd.iecs {
                ensure!(
                    check_spread_equivalence(&c.apply_spread(&sx).unwrap(), &sy),
                    "{x}/{y}: IEC fails re-verification"
                );
            }
        }
    }
    for (x, y) in [("spreadn6t3a", "spreadn6t3b"), ("spread_IC1", "spread_IC2")] {
        let fwd = check_spread_isomorphism(&spread(x), &spread(y), &opts).unwrap();
        let back = check_spread_isomorphism(&spread(y), &spread(x), &opts).unwrap();
        ensure!(fwd.result && back.result, "{x}/{y} not symmetric");
        ensure!(
            check_spread_equivalence(&back.iecs[0].apply_spread(&spread(y)).unwrap(), &spread(x)),
            "{y}/{x}: IEC fails re-verification"
        );
    }
    for name in ["starn5t3a", "starn5t3b"] {
        let s = fixtures::star(name).unwrap();
        let r = check_star_isomorphism(&s, &s, &opts).unwrap();
        ensure!(r.result, "{name} not self-isomorphic");
    }
    let s1 = fixtures::star("starn5t3a").unwrap();
    let s2 = fixtures::star("starn5t3b").unwrap();
    let back = check_star_isomorphism(&s2, &s1, &SearchOptions::find_all()).unwrap();
    ensure!(back.result, "stars not symmetric");
    for c in &back.iecs {
        ensure!(check_star_equivalence(&c.apply_star(&s2).unwrap(), &s1), "star IEC fails re-verification");
    }
    Ok(format!("{} fixtures x 100 collineations", fixtures::NAMES.len()))
}

fn main() -> ExitCode {
    let checks: [(&str, Check); 12] = [
        ("AC1 all IECs between the two 1-spreads of P_4", ac1),
        ("AC2 reference 4x4 IEC verifies", ac2),
        ("AC3 2-spreads of P_6 isomorphic, not equivalent", ac3),
        ("AC4 split-lot spreads IC1 and IC2 isomorphic", ac4),
        ("AC5 star decomposition and star IECs", ac5),
        ("AC6 stars of different dimension", ac6),
        ("AC7 cyclic 1-spread of P_4", ac7),
        ("AC8 equivalence class size", ac8),
        ("AC9 V-criterion values", ac9),
        ("AC10 catalog of 1-spreads of P_4", ac10),
        ("AC11 search agrees with brute force", ac11),
        ("AC12 property suites", ac12),
    ];
    let mut failed = 0;
    for (name, check) in checks {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    println!("{} passed, {failed} failed", checks.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
