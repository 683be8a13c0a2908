//! The acceptance suite: twelve criteria covering the worked examples,
//! the golden monomial expansions, membership, the combinatorial
//! counts, exact round trips, realization equivalence, series and
//! matrix identities, the wall and brick-tabloid theorems, duality, and
//! the binomial lemma. Every comparison is exact; each test prints one
//! pass/fail line with its runtime.

use std::time::{Duration, Instant};

use num::{One, Zero};

use nsymkit::compositions::{
    binomial_partial_sum, enumerate_compositions, Composition, Partition,
};
use nsymkit::nsym::verify_series;
use nsymkit::polyreal::{CAlgebra, Membership, NcAlgebra, NcGenerator, NcPoly};
use nsymkit::qsym::{pair, z_of, QSymBasis, QSymElem};
use nsymkit::rational::{rat, ratio, Rat};
use nsymkit::transmat::check_identities;
use nsymkit::verify::realize_qsym_via_monomials;
use nsymkit::walls::{
    brick_tabloids, indexed_wall_count, ordered_tabloid_count, tabloid_weight_sum,
    verify_brick_theorems, verify_wall_theorems, Wall, WallStat,
};
use nsymkit::{NSymBasis, NSymElem};

fn comp(parts: &[u32]) -> Composition {
    Composition::new(parts.to_vec()).unwrap()
}

fn finish(number: u32, name: &str, started: Instant, budget: Duration, passed: bool) {
    let elapsed = started.elapsed();
    println!(
        "criterion {number:02} {}: {name} ({elapsed:.2?}, budget {budget:.0?})",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "criterion {number:02} failed: {name}");
    assert!(
        elapsed <= budget,
        "criterion {number:02} exceeded its time budget: {elapsed:.2?} > {budget:.0?}"
    );
}

#[test]
fn criterion_01_involution_worked_example() {
    let started = Instant::now();
    let a = comp(&[2, 3, 2, 1]);
    let passed = a.reverse() == comp(&[1, 2, 3, 2])
        && a.complement() == comp(&[1, 2, 1, 2, 2])
        && a.transpose() == comp(&[2, 2, 1, 2, 1])
        && a.len() + a.complement().len() - 1 == 8;
    finish(
        1,
        "reverse, complement, transpose, and the length law on [2,3,2,1]",
        started,
        Duration::from_millis(1),
        passed,
    );
}

#[test]
fn criterion_02_golden_power_sum_expansions() {
    let started = Instant::now();
    let alg = NcAlgebra::with_cap(3, 3).unwrap();
    let psi3 = alg.power_sum_first(3).unwrap();
    let phi3 = alg.power_sum_second(3).unwrap();

    let word = |s: &str| -> Vec<u8> { s.bytes().map(|b| b - b'0').collect() };
    let psi_expected: Vec<(&str, i64)> = vec![
        ("111", 1), ("112", 1), ("113", 1), ("122", 1), ("123", 1), ("133", 1),
        ("211", -1), ("212", -1), ("213", -1),
        ("222", 1), ("223", 1), ("233", 1),
        ("311", -1), ("312", -1), ("313", -1),
        ("321", 1), ("322", -1), ("323", -1), ("333", 1),
    ];
    let expected =
        NcPoly::from_terms(3, psi_expected.iter().map(|(w, c)| (word(w), rat(*c)))).unwrap();
    let mut passed = psi3 == expected;

    let h = ratio(-1, 2);
    let phi_expected: Vec<(&str, Rat)> = vec![
        ("111", rat(1)), ("112", rat(1)), ("113", rat(1)),
        ("121", h.clone()), ("122", rat(1)), ("123", rat(1)),
        ("131", h.clone()), ("132", h.clone()), ("133", rat(1)),
        ("211", h.clone()), ("212", h.clone()), ("213", h.clone()),
        ("221", h.clone()), ("222", rat(1)), ("223", rat(1)),
        ("231", h.clone()), ("232", h.clone()), ("233", rat(1)),
        ("311", h.clone()), ("312", h.clone()), ("313", h.clone()),
        ("321", rat(1)), ("322", h.clone()), ("323", h.clone()),
        ("331", h.clone()), ("332", h.clone()), ("333", rat(1)),
    ];
    let expected =
        NcPoly::from_terms(3, phi_expected.into_iter().map(|(w, c)| (word(w), c))).unwrap();
    passed &= phi3 == expected;
    passed &= psi3.coeff(&word("212")) == rat(-1) && phi3.coeff(&word("121")) == ratio(-1, 2);
    finish(
        2,
        "degree-3 power sums over three variables match the golden term lists",
        started,
        Duration::from_secs(1),
        passed,
    );
}

#[test]
fn criterion_03_membership() {
    let started = Instant::now();
    // The sum of squares fails with a valid witness.
    let alg2 = NcAlgebra::with_cap(2, 2).unwrap();
    let squares =
        NcPoly::from_terms(2, [(vec![1, 1], rat(1)), (vec![2, 2], rat(1))]).unwrap();
    let mut passed = match alg2.is_nsym(&squares, 2).unwrap() {
        Membership::Member => false,
        Membership::NotMember { witness: (a, b) } => {
            a.len() == 2
                && b.len() == 2
                && (a[0] > a[1]) == (b[0] > b[1])
                && squares.coeff(&a) != squares.coeff(&b)
        }
    };
    // Every realized basis element of degree up to 6 passes.
    for n in 1..=6u32 {
        let m = n as usize;
        let alg = NcAlgebra::with_cap(m, m).unwrap();
        for alpha in enumerate_compositions(n) {
            for basis in NSymBasis::ALL {
                let p = match basis {
                    NSymBasis::Ribbon => alg.ribbon(&alpha).unwrap(),
                    _ => {
                        let mut acc = NcPoly::one(m);
                        for &part in alpha.parts() {
                            let gen = match basis {
                                NSymBasis::Complete => NcGenerator::Complete(part),
                                NSymBasis::Elementary => NcGenerator::Elementary(part),
                                NSymBasis::PowerSumFirst => NcGenerator::PowerSumFirst(part),
                                NSymBasis::PowerSumSecond => NcGenerator::PowerSumSecond(part),
                                NSymBasis::Ribbon => unreachable!(),
                            };
                            acc = alg.mul(&acc, &alg.realize(&gen).unwrap()).unwrap();
                        }
                        acc
                    }
                };
                passed &= alg.is_nsym(&p, m).unwrap().is_member();
            }
        }
    }
    finish(
        3,
        "membership rejects the sum of squares and accepts all basis elements to degree 6",
        started,
        Duration::from_secs(10),
        passed,
    );
}

#[test]
fn criterion_04_brick_tabloid_numbers() {
    let started = Instant::now();
    let shape = Partition::new(vec![6, 3]).unwrap();
    let ty = Partition::new(vec![3, 3, 2, 1]).unwrap();
    let passed = brick_tabloids(&shape, &ty).unwrap().len() == 8
        && tabloid_weight_sum(&shape, &ty).unwrap() == rat(45)
        && ordered_tabloid_count(&shape, &ty).unwrap() == rat(3);
    finish(
        4,
        "eight fillings of (6,3) by {3,3,2,1}, total weight 45, three ordered fillings",
        started,
        Duration::from_secs(1),
        passed,
    );
}

#[test]
fn criterion_05_wall_numbers() {
    let started = Instant::now();
    let w = Wall::new(&comp(&[1, 6, 2, 4]), &comp(&[1, 1, 3, 2, 2, 3, 1])).unwrap();
    let passed = w.stat(WallStat::BrickCounts) == rat(6)
        && w.stat(WallStat::BrickCountFactorials) == rat(12)
        && indexed_wall_count(&comp(&[2, 4, 3]), &comp(&[2, 2, 1, 1, 3])).unwrap() == rat(4);
    finish(
        5,
        "brick-count product 6, factorial product 12, four indexed walls",
        started,
        Duration::from_millis(1),
        passed,
    );
}

#[test]
fn criterion_06_round_trips() {
    let started = Instant::now();
    let mut passed = true;
    for n in 1..=8u32 {
        for alpha in enumerate_compositions(n) {
            for a in NSymBasis::ALL {
                let x = NSymElem::basis_vector(a, alpha.clone());
                for b in NSymBasis::ALL {
                    passed &= x.convert(b).convert(a) == x;
                }
            }
            for a in QSymBasis::ALL {
                let x = QSymElem::basis_vector(a, alpha.clone());
                for b in QSymBasis::ALL {
                    passed &= x.convert(b).convert(a) == x;
                }
            }
        }
    }
    finish(
        6,
        "all basis round trips are exact identities to degree 8 in both spaces",
        started,
        Duration::from_secs(60),
        passed,
    );
}

#[test]
fn criterion_07_realization_equivalence() {
    let started = Instant::now();
    let mut passed = true;
    for n in 1..=6u32 {
        let m = 6usize;
        let nc = NcAlgebra::with_cap(m, m).unwrap();
        let c = CAlgebra::with_cap(m, m).unwrap();
        // Cache the realized ribbons of this degree.
        let ribbons: Vec<NcPoly> = enumerate_compositions(n)
            .iter()
            .map(|a| nc.ribbon(a).unwrap())
            .collect();
        let realize_ribbon_combination = |elem: &NSymElem| -> NcPoly {
            let mut acc = NcPoly::zero(m);
            for (beta, coeff) in elem.convert(NSymBasis::Ribbon).iter() {
                acc = acc
                    .add(&ribbons[beta.canonical_index()].scale(coeff))
                    .unwrap();
            }
            acc
        };
        for alpha in enumerate_compositions(n) {
            for a in NSymBasis::ALL {
                // The product realization of the basis vector.
                let direct = match a {
                    NSymBasis::Ribbon => nc.ribbon(&alpha).unwrap(),
                    _ => {
                        let mut acc = NcPoly::one(m);
                        for &part in alpha.parts() {
                            let gen = match a {
                                NSymBasis::Complete => NcGenerator::Complete(part),
                                NSymBasis::Elementary => NcGenerator::Elementary(part),
                                NSymBasis::PowerSumFirst => NcGenerator::PowerSumFirst(part),
                                NSymBasis::PowerSumSecond => NcGenerator::PowerSumSecond(part),
                                NSymBasis::Ribbon => unreachable!(),
                            };
                            acc = nc.mul(&acc, &nc.realize(&gen).unwrap()).unwrap();
                        }
                        acc
                    }
                };
                // Every conversion out of this basis realizes back to it.
                for b in NSymBasis::ALL {
                    let converted = NSymElem::basis_vector(a, alpha.clone()).convert(b);
                    passed &= realize_ribbon_combination(&converted) == direct;
                }
            }
            // Quasisymmetric side: conversions between the monomial and
            // fundamental bases match direct realizations.
            let f_direct = c.fundamental(&alpha).unwrap();
            let f_via_m = realize_qsym_via_monomials(
                &c,
                &QSymElem::basis_vector(QSymBasis::Fundamental, alpha.clone()),
            )
            .unwrap();
            passed &= f_direct == f_via_m;
            let m_via_f = realize_qsym_via_monomials(
                &c,
                &QSymElem::basis_vector(QSymBasis::Monomial, alpha.clone())
                    .convert(QSymBasis::Fundamental),
            )
            .unwrap();
            passed &= m_via_f == c.monomial_qsym(&alpha).unwrap();
        }
    }
    finish(
        7,
        "abstract conversions agree with monomial realizations to degree 6 over 6 variables",
        started,
        Duration::from_secs(120),
        passed,
    );
}

#[test]
fn criterion_08_series_identities() {
    let started = Instant::now();
    let report = verify_series(8);
    let passed = report.passed();
    if !passed {
        eprintln!("{}", report.summary());
    }
    finish(
        8,
        "generating-series identities hold coefficientwise to degree 8",
        started,
        Duration::from_secs(30),
        passed,
    );
}

#[test]
fn criterion_09_matrix_identity_suite() {
    let started = Instant::now();
    let mut passed = true;
    for n in 1..=7u32 {
        let report = check_identities(n);
        if !report.passed() {
            eprintln!("{}", report.summary());
            passed = false;
        }
    }
    finish(
        9,
        "the transition-matrix identity suite passes for degrees 1 through 7",
        started,
        Duration::from_secs(60),
        passed,
    );
}

#[test]
fn criterion_10_wall_and_brick_theorems() {
    let started = Instant::now();
    let mut passed = true;
    for n in 1..=8u32 {
        let report = verify_wall_theorems(n);
        if !report.passed() {
            eprintln!("{}", report.summary());
            passed = false;
        }
    }
    for n in 1..=7u32 {
        let report = verify_brick_theorems(n);
        if !report.passed() {
            eprintln!("{}", report.summary());
            passed = false;
        }
    }
    finish(
        10,
        "wall expansions to degree 8 and brick-tabloid expansions to degree 7 verify",
        started,
        Duration::from_secs(120),
        passed,
    );
}

#[test]
fn criterion_11_duality() {
    let started = Instant::now();
    let mut passed = true;
    for n in 1..=6u32 {
        let comps = enumerate_compositions(n);
        for a in &comps {
            for b in &comps {
                let delta = if a == b { Rat::one() } else { Rat::zero() };
                let z_delta = if a == b { z_of(a) } else { Rat::zero() };
                passed &= pair(
                    &QSymElem::basis_vector(QSymBasis::PowerSumFirst, a.clone()),
                    &NSymElem::basis_vector(NSymBasis::PowerSumFirst, b.clone()),
                ) == z_delta;
                passed &= pair(
                    &QSymElem::basis_vector(QSymBasis::PowerSumSecond, a.clone()),
                    &NSymElem::basis_vector(NSymBasis::PowerSumSecond, b.clone()),
                ) == z_delta;
                passed &= pair(
                    &QSymElem::basis_vector(QSymBasis::Monomial, a.clone()),
                    &NSymElem::basis_vector(NSymBasis::Complete, b.clone()),
                ) == delta;
                passed &= pair(
                    &QSymElem::basis_vector(QSymBasis::Fundamental, a.clone()),
                    &NSymElem::basis_vector(NSymBasis::Ribbon, b.clone()),
                ) == delta;
            }
        }
    }
    finish(
        11,
        "power-sum pairings are z-scaled identities and the unit dual pairs are exact, degree 6",
        started,
        Duration::from_secs(30),
        passed,
    );
}

#[test]
fn criterion_12_binomial_lemma() {
    let started = Instant::now();
    let mut passed = true;
    for n in 0..=25u32 {
        for c in 0..=25u32 {
            passed &= binomial_partial_sum(n, c)
                == Rat::new(i64::from(n + c + 1).into(), i64::from(c + 1).into());
        }
    }
    finish(
        12,
        "binomial partial sums collapse to (n+c+1)/(c+1) for all n, c up to 25",
        started,
        Duration::from_secs(1),
        passed,
    );
}
