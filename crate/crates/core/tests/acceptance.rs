//! End-to-end acceptance checks. Runs as a plain binary so every criterion
//! reports a line even when an earlier one fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use numsg_core::analysis::{analyze, AnalysisReport, DEFAULT_MATRIX_CAP};
use numsg_core::census::{census, CensusQuery, ParityFilter};
use numsg_core::construct::{build_type3, family_sn, BuildError, BuildOptions};
use numsg_core::structure::{
    is_complete_intersection, type3_params, ClassLabel, ParityCase, UfCase,
};
use numsg_core::verify::{verify, Suite};
use numsg_core::NumericalSemigroup;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::BruteForce;

#[derive(Default)]
struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn expect_eq<T: PartialEq + std::fmt::Debug>(&mut self, label: &str, got: T, want: T) {
        if got != want {
            self.failures
                .push(format!("{label}: got {got:?}, expected {want:?}"));
        }
    }
}

fn odd_query(max_gen: u64, edims: &[usize]) -> CensusQuery {
    CensusQuery::new(max_gen, edims.iter().copied(), ParityFilter::Odd).unwrap()
}

fn workers() -> usize {
    std::thread::available_parallelism()
        .map_or(4, |n| n.get())
        .max(2)
}

fn census_e34() -> Outcome {
    let mut out = Outcome::default();
    let t = census(&odd_query(100, &[3, 4]), workers());
    let cells = [
        ("e=3 t=1", t.count(3, ClassLabel::SymmetricCi), 2302),
        ("e=3 t=2", t.count(3, ClassLabel::PseudoSymmetric), 139),
        (
            "e=4 t=1 not CI",
            t.count(4, ClassLabel::SymmetricNonCi),
            1927,
        ),
        ("e=4 CI", t.count(4, ClassLabel::SymmetricCi), 596),
        ("e=4 t=2", t.count(4, ClassLabel::PseudoSymmetric), 595),
        ("e=4 t=3", t.count(4, ClassLabel::AlmostSymmetric(3)), 9),
    ];
    for (label, got, want) in cells {
        out.expect_eq(label, got, want);
    }
    out
}

fn census_e5() -> Outcome {
    let mut out = Outcome::default();
    let t = census(&odd_query(100, &[5]), workers());
    let cells = [
        (
            "e=5 t=1 not CI",
            t.count(5, ClassLabel::SymmetricNonCi),
            3451,
        ),
        ("e=5 CI", t.count(5, ClassLabel::SymmetricCi), 0),
        ("e=5 t=2", t.count(5, ClassLabel::PseudoSymmetric), 1254),
        ("e=5 t=3", t.count(5, ClassLabel::AlmostSymmetric(3)), 988),
        ("e=5 t=4", t.count(5, ClassLabel::AlmostSymmetric(4)), 359),
        ("e=5 t=5", t.count(5, ClassLabel::AlmostSymmetric(5)), 2),
    ];
    for (label, got, want) in cells {
        out.expect_eq(label, got, want);
    }
    out
}

fn report(gens: &[u64]) -> AnalysisReport {
    analyze(&NumericalSemigroup::new(gens).unwrap(), DEFAULT_MATRIX_CAP)
}

fn rows(m: [[i64; 4]; 4]) -> Vec<Vec<i64>> {
    m.iter().map(|r| r.to_vec()).collect()
}

fn rf_of(out: &mut Outcome, r: &AnalysisReport, f: i64) -> Option<usize> {
    let k = r.rf.iter().position(|x| x.f == f);
    out.check(k.is_some(), || format!("{:?}: no RF entry for {f}", r.gens));
    k
}

fn expect_unique_rf(out: &mut Outcome, r: &AnalysisReport, f: i64, want: [[i64; 4]; 4]) {
    if let Some(k) = rf_of(out, r, f) {
        let rf = &r.rf[k];
        out.check(rf.unique && rf.total == 1, || {
            format!("{:?}: RF({f}) not unique", r.gens)
        });
        out.expect_eq(
            &format!("{:?} RF({f})", r.gens),
            rf.matrices.first(),
            Some(&rows(want)),
        );
    }
}

fn expect_ideal(out: &mut Outcome, r: &AnalysisReport, order: [u64; 4], want: [&str; 5]) {
    let Some(ideal) = &r.ideal else {
        out.failures
            .push(format!("{:?}: no defining ideal", r.gens));
        return;
    };
    out.expect_eq(
        &format!("{:?} labeling", r.gens),
        ideal.gens.clone(),
        order.to_vec(),
    );
    let got: Vec<String> = ideal.relations.iter().map(ToString::to_string).collect();
    out.expect_eq(
        &format!("{:?} relations", r.gens),
        got,
        want.map(String::from).to_vec(),
    );
}

fn expect_bresinsky(
    out: &mut Outcome,
    gens: [u64; 4],
    alpha: [u64; 4],
    a: Option<[u64; 4]>,
    case: ParityCase,
    ideal: [&str; 5],
) {
    let r = report(&gens);
    out.expect_eq(
        &format!("{gens:?} class"),
        r.class.label,
        ClassLabel::SymmetricNonCi,
    );
    match &r.bresinsky {
        Some(b) => {
            out.expect_eq(&format!("{gens:?} alpha"), b.alpha, alpha);
            if let Some(a) = a {
                out.expect_eq(&format!("{gens:?} a"), b.a, a);
            }
        }
        None => out
            .failures
            .push(format!("{gens:?}: no Bresinsky parameters")),
    }
    out.expect_eq(&format!("{gens:?} parity case"), r.parity_case, Some(case));
    expect_ideal(out, &r, gens, ideal);
}

fn golden_examples() -> Outcome {
    let mut out = Outcome::default();

    let r = report(&[8, 10, 11, 13]);
    out.expect_eq("<8,10,11,13> F", r.frobenius, 25);
    out.expect_eq("<8,10,11,13> PF", r.pseudo_frobenius.clone(), vec![25]);
    if let Some(k) = rf_of(&mut out, &r, 25) {
        let emitted = &r.rf[k].matrices;
        out.check(!r.rf[k].truncated, || {
            "<8,10,11,13> RF(25) truncated".into()
        });
        for m in [
            [[-1, 0, 3, 0], [3, -1, 1, 0], [2, 2, -1, 0], [1, 3, 0, -1]],
            [[-1, 2, 0, 1], [0, -1, 2, 1], [0, 1, -1, 2], [2, 0, 2, -1]],
        ] {
            out.check(emitted.contains(&rows(m)), || {
                format!("<8,10,11,13> missing {m:?}")
            });
        }
    }

    expect_bresinsky(
        &mut out,
        [13, 17, 23, 19],
        [5, 3, 3, 3],
        Some([1, 1, 1, 1]),
        ParityCase::A,
        [
            "x1^5 - x3^2*x4",
            "x2^3 - x1*x4^2",
            "x3^3 - x1^4*x2",
            "x4^3 - x2^2*x3",
            "x1*x3 - x2*x4",
        ],
    );
    expect_bresinsky(
        &mut out,
        [13, 17, 33, 25],
        [7, 3, 3, 2],
        Some([2, 2, 1, 1]),
        ParityCase::B,
        [
            "x1^7 - x3^2*x4",
            "x2^3 - x1^2*x4",
            "x3^3 - x1^5*x2^2",
            "x4^2 - x2*x3",
            "x1^2*x3 - x2^2*x4",
        ],
    );
    expect_bresinsky(
        &mut out,
        [5, 7, 11, 9],
        [4, 2, 2, 2],
        Some([1, 1, 1, 1]),
        ParityCase::C,
        [
            "x1^4 - x3*x4",
            "x2^2 - x1*x4",
            "x3^2 - x1^3*x2",
            "x4^2 - x2*x3",
            "x1*x3 - x2*x4",
        ],
    );
    expect_bresinsky(
        &mut out,
        [90, 91, 97, 93],
        [15, 3, 13, 3],
        None,
        ParityCase::None,
        [
            "x1^15 - x3^12*x4^2",
            "x2^3 - x1^2*x4",
            "x3^13 - x1^13*x2",
            "x4^3 - x2^2*x3",
            "x1^2*x3 - x2*x4^2",
        ],
    );
    expect_bresinsky(
        &mut out,
        [22, 57, 29, 23],
        [5, 2, 5, 5],
        None,
        ParityCase::None,
        [
            "x1^5 - x3^3*x4",
            "x2^2 - x1*x4^4",
            "x3^5 - x1^4*x2",
            "x4^5 - x2*x3^2",
            "x1*x3^2 - x2*x4",
        ],
    );
    expect_bresinsky(
        &mut out,
        [5, 14, 22, 18],
        [8, 2, 2, 2],
        None,
        ParityCase::None,
        [
            "x1^8 - x3*x4",
            "x2^2 - x1^2*x4",
            "x3^2 - x1^6*x2",
            "x4^2 - x2*x3",
            "x1^2*x3 - x2*x4",
        ],
    );
    let r = report(&[15, 17, 35, 43]);
    out.expect_eq(
        "<15,17,35,43> PF",
        r.pseudo_frobenius.clone(),
        vec![53, 106],
    );
    out.expect_eq(
        "<15,17,35,43> class",
        r.class.label,
        ClassLabel::PseudoSymmetric,
    );
    expect_unique_rf(
        &mut out,
        &r,
        53,
        [[-1, 4, 0, 0], [0, -1, 2, 0], [3, 0, -1, 1], [3, 3, 0, -1]],
    );

    let r = report(&[57, 61, 123, 163]);
    out.expect_eq(
        "<57,61,123,163> PF",
        r.pseudo_frobenius.clone(),
        vec![431, 862],
    );
    out.expect_eq(
        "<57,61,123,163> class",
        r.class.label,
        ClassLabel::PseudoSymmetric,
    );
    expect_unique_rf(
        &mut out,
        &r,
        431,
        [[-1, 8, 0, 0], [0, -1, 4, 0], [4, 0, -1, 2], [4, 6, 0, -1]],
    );

    let r = report(&[15, 23, 27, 29]);
    out.expect_eq(
        "<15,23,27,29> PF",
        r.pseudo_frobenius.clone(),
        vec![31, 62, 93],
    );
    out.expect_eq(
        "<15,23,27,29> class",
        r.class.label,
        ClassLabel::AlmostSymmetric(3),
    );
    out.expect_eq("<15,23,27,29> alpha", r.alpha.clone(), vec![5, 3, 3, 3]);
    out.expect_eq("<15,23,27,29> case", r.uf_case, Some(UfCase::NUf2));
    expect_unique_rf(
        &mut out,
        &r,
        31,
        [[-1, 2, 0, 0], [0, -1, 2, 0], [0, 0, -1, 2], [4, 0, 0, -1]],
    );
    expect_unique_rf(
        &mut out,
        &r,
        62,
        [[-1, 1, 2, 0], [0, -1, 1, 2], [4, 0, -1, 1], [3, 2, 0, -1]],
    );

    let r = report(&[4, 7, 10, 13]);
    out.expect_eq("<4,7,10,13> PF", r.pseudo_frobenius.clone(), vec![3, 6, 9]);
    out.expect_eq("<4,7,10,13> case", r.uf_case, Some(UfCase::NUf2));
    expect_unique_rf(
        &mut out,
        &r,
        3,
        [[-1, 1, 0, 0], [0, -1, 1, 0], [0, 0, -1, 1], [4, 0, 0, -1]],
    );
    expect_unique_rf(
        &mut out,
        &r,
        6,
        [[-1, 0, 1, 0], [0, -1, 0, 1], [4, 0, -1, 0], [3, 1, 0, -1]],
    );

    let r = report(&[29, 33, 61, 65, 73, 81, 85]);
    out.expect_eq(
        "<29,...,85> class",
        r.class.label,
        ClassLabel::AlmostSymmetric(12),
    );
    out.expect_eq("<29,...,85> type", r.semigroup_type, 12);
    out.expect_eq(
        "<29,...,85> PF",
        r.pseudo_frobenius.clone(),
        vec![69, 77, 89, 93, 97, 101, 105, 109, 113, 125, 133, 202],
    );
    out
}

fn theorem_suites() -> Outcome {
    let mut out = Outcome::default();
    let report = verify(100, workers()).unwrap();
    for s in &report.suites {
        out.check(s.passed(), || {
            format!(
                "{}: {} of {} failed, e.g. {:?}",
                s.suite.name(),
                s.failed,
                s.checked,
                s.counterexamples
            )
        });
    }
    for suite in [
        Suite::BresinskyBiconditional,
        Suite::BresinskyParity,
        Suite::PseudoSymmetricParity,
        Suite::Type3Odd,
        Suite::AlphaBelowGenerators,
    ] {
        out.check(report.suite(suite).checked > 0, || {
            format!("{} checked nothing", suite.name())
        });
    }
    out.notes.push(format!(
        "{} suites, {:.2?}",
        report.suites.len(),
        report.elapsed
    ));
    out
}

fn cyclic_shifts(alpha: [u64; 4]) -> Vec<[u64; 4]> {
    (0..4)
        .map(|k| std::array::from_fn(|i| alpha[(i + k) % 4]))
        .collect()
}

fn construction_round_trip() -> Outcome {
    let mut out = Outcome::default();
    let odd = [3u64, 5, 7, 9];
    let (mut built, mut rejected) = (0, 0);
    for &a1 in &odd {
        for &a2 in &odd {
            for &a3 in &odd {
                for &a4 in &odd {
                    let alpha = [a1, a2, a3, a4];
                    let n: [u64; 4] = std::array::from_fn(|i| {
                        let [p, q, r] =
                            [alpha[(i + 1) % 4], alpha[(i + 2) % 4], alpha[(i + 3) % 4]];
                        (p - 1) * (q - 1) * r + p
                    });
                    let g = common::gcd_all(&n);
                    match build_type3(alpha, BuildOptions::default()) {
                        Err(BuildError::GcdNotOne(d)) => {
                            rejected += 1;
                            out.expect_eq(&format!("{alpha:?} gcd"), d, g);
                        }
                        Err(e) => out.failures.push(format!("{alpha:?}: {e}")),
                        Ok(b) => {
                            built += 1;
                            out.check(g == 1, || format!("{alpha:?}: built despite gcd {g}"));
                            let s = &b.semigroup;
                            let ok = s.embedding_dimension() == 4
                                && s.is_almost_symmetric()
                                && s.semigroup_type() == 3
                                && s.all_generators_odd();
                            out.check(ok, || {
                                format!("{alpha:?}: {:?} is not odd AS type 3", s.generators())
                            });
                            match type3_params(s) {
                                Ok(t) => out.check(cyclic_shifts(alpha).contains(&t.alpha), || {
                                    format!("{alpha:?}: recovered {:?}", t.alpha)
                                }),
                                Err(e) => out.failures.push(format!("{alpha:?}: {e}")),
                            }
                        }
                    }
                }
            }
        }
    }
    for n in 1..=6u32 {
        let f = 15 + (1i64 << (n + 3));
        match family_sn(n, BuildOptions::default()) {
            Ok(b) => out.expect_eq(
                &format!("S_{n} PF"),
                b.semigroup.pseudo_frobenius().to_vec(),
                vec![f, 2 * f, 3 * f],
            ),
            Err(e) => out.failures.push(format!("S_{n}: {e}")),
        }
    }
    out.notes
        .push(format!("{built} built, {rejected} rejected on gcd"));
    out
}

fn tuples(lo: u64, hi: u64, len: usize, prefix: &mut Vec<u64>, visit: &mut impl FnMut(&[u64])) {
    if prefix.len() == len {
        visit(prefix);
        return;
    }
    let start = prefix.last().map_or(lo, |&x| x + 1);
    for x in start..=hi {
        prefix.push(x);
        tuples(lo, hi, len, prefix, visit);
        prefix.pop();
    }
}

fn oracle_suites() -> Outcome {
    let mut out = Outcome::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for _ in 0..500 {
        let gens = common::random_semigroup(&mut rng, 1000);
        let s = NumericalSemigroup::new(&gens).unwrap();
        let bf = BruteForce::new(&gens);
        out.expect_eq(&format!("{gens:?} genus"), s.genus(), bf.gaps.len() as u64);
        out.expect_eq(&format!("{gens:?} F"), s.frobenius(), bf.frobenius);
        out.expect_eq(
            &format!("{gens:?} PF"),
            s.pseudo_frobenius().to_vec(),
            bf.pseudo_frobenius.clone(),
        );
    }

    let mut corpus = 0u64;
    for e in 2..=4 {
        tuples(2, 50, e, &mut Vec::new(), &mut |t| {
            if common::gcd_all(t) != 1 || common::minimal_generators(t).len() != e {
                return;
            }
            corpus += 1;
            let s = NumericalSemigroup::new(t).unwrap();
            let ci = common::minimal_presentation_size(t) == e - 1;
            out.check(is_complete_intersection(&s) == ci, || {
                format!("{t:?}: gluing says {}", !ci)
            });
        });
    }
    out.notes.push(format!("500 random, {corpus} with e<=4"));
    out
}

fn determinism() -> Outcome {
    let mut out = Outcome::default();
    let q = odd_query(100, &[3, 4]);
    let serial = census(&q, 1).to_csv();
    let parallel = census(&q, workers()).to_csv();
    out.check(serial == parallel, || {
        format!("1 worker:\n{serial}\n{} workers:\n{parallel}", workers())
    });
    out.notes.push(format!("1 vs {} workers", workers()));
    out
}

type Criterion = fn() -> Outcome;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 7] = [
        (
            "census of odd semigroups, e=3,4, generators <= 100",
            census_e34,
        ),
        (
            "census of odd semigroups, e=5, generators <= 100",
            census_e5,
        ),
        ("golden examples", golden_examples),
        ("structure theorem suites up to 100", theorem_suites),
        (
            "type-three construction round trip",
            construction_round_trip,
        ),
        ("brute-force oracles", oracle_suites),
        ("serial and parallel census agree", determinism),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let status = if outcome.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        let mut notes = outcome.notes.clone();
        notes.push(format!("{:.2?}", start.elapsed()));
        println!(
            "{status} criterion {}: {name} [{}]",
            k + 1,
            notes.join("; ")
        );
        for f in &outcome.failures {
            println!("    {f}");
        }
        if !outcome.failures.is_empty() {
            failed += 1;
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
