//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! All comparisons are exact; the stated wall-clock budgets are asserted.

use std::time::Instant;

use sochar::partitions::{generalized_partitions, partitions_up_to};
use sochar::verify::{run_suite, Grid, Suite};
use sochar::{
    bd_epsilon_expansion, o_char, s_bc, s_bd, s_cd, so_bialternant, so_jt, so_skew_dual_jt,
    so_skew_gt, so_skew_jt, sp_char, GeneralizedPartition,
};

fn finish(criterion: &str, label: &str, instances: usize, started: Instant, budget_s: u64) {
    let ms = started.elapsed().as_millis();
    println!("[{criterion}] {label}: PASS ({instances} instances, {ms} ms)");
    assert!(
        started.elapsed().as_secs() < budget_s,
        "{criterion} exceeded its {budget_s}s budget ({ms} ms)"
    );
}

#[test]
fn criterion_01_formula_cross_agreement() {
    let t = Instant::now();
    let empty = GeneralizedPartition::empty();
    let mut instances = 0;
    for n in 1..=3usize {
        for lambda in partitions_up_to(6, n) {
            let reference = so_bialternant(&lambda, n).unwrap();
            assert_eq!(
                so_jt(&lambda, n).unwrap(),
                reference,
                "jt at {lambda}, n={n}"
            );
            assert_eq!(
                so_skew_jt(&lambda, &empty, n).unwrap(),
                reference,
                "skew jt at {lambda}, n={n}"
            );
            assert_eq!(
                so_skew_gt(&lambda, &empty, n).unwrap(),
                reference,
                "gt at {lambda}, n={n}"
            );
            let s = lambda.part_int(0).max(0) as usize;
            assert_eq!(
                so_skew_dual_jt(&lambda, &empty, s, n).unwrap(),
                reference,
                "dual jt at {lambda}, n={n}"
            );
            instances += 1;
        }
    }
    finish("criterion 01", "formula cross-agreement", instances, t, 60);
}

#[test]
fn criterion_02_skew_agreement() {
    let t = Instant::now();
    let mut instances = 0;
    for n in 1..=2usize {
        for l in 0..=2usize {
            for mu in generalized_partitions(5, l) {
                for lambda in partitions_up_to(5, l + n) {
                    if !lambda.contains(&mu) {
                        continue;
                    }
                    let jt = so_skew_jt(&lambda, &mu, n).unwrap();
                    let gt = so_skew_gt(&lambda, &mu, n).unwrap();
                    assert_eq!(jt, gt, "gt vs jt at {lambda}/{mu}, n={n}");
                    let s = lambda.part_int(0).max(0) as usize;
                    let dual = so_skew_dual_jt(&lambda, &mu, s, n).unwrap();
                    assert_eq!(jt, dual, "dual vs jt at {lambda}/{mu}, n={n}");
                    instances += 1;
                }
            }
        }
    }
    finish("criterion 02", "skew agreement", instances, t, 60);
}

#[test]
fn criterion_03_orthogonality_tables() {
    let t = Instant::now();
    let grid = Grid {
        deg: Some(5),
        len: Some(4),
        ..Grid::default()
    };
    for r in run_suite(Suite::Orthogonality, &grid, false, 1) {
        assert!(r.pass, "orthogonality table: {:?}", r.detail);
    }
    let grid = Grid {
        deg: Some(5),
        ..Grid::default()
    };
    for r in run_suite(Suite::DualPairing, &grid, false, 1) {
        assert!(r.pass, "dual pairing table: {:?}", r.detail);
    }
    finish("criterion 03", "orthogonality tables", 2, t, 30);
}

#[test]
fn criterion_04_cauchy_truncated() {
    let t = Instant::now();
    let grid = Grid {
        deg: Some(6),
        ..Grid::default()
    };
    let reports = run_suite(Suite::CauchySo, &grid, false, 1);
    let instances = reports.len();
    for r in &reports {
        assert!(
            r.pass,
            "cauchy instance {} failed: {:?}",
            r.instance, r.detail
        );
    }
    finish("criterion 04", "cauchy identity, cap 6", instances, t, 60);
}

#[test]
fn criterion_05_skew_cauchy() {
    let t = Instant::now();
    let grid = Grid {
        deg: Some(5),
        ..Grid::default()
    };
    let reports = run_suite(Suite::SkewCauchySo, &grid, false, 1);
    let instances = reports.len();
    for r in &reports {
        assert!(
            r.pass,
            "skew cauchy instance {} failed: {:?}",
            r.instance, r.detail
        );
    }
    finish("criterion 05", "skew cauchy, cap 5", instances, t, 120);
}

#[test]
fn criterion_06_toeplitz_hankel() {
    let t = Instant::now();
    let grid = Grid {
        deg: Some(8),
        ..Grid::default()
    };
    let reports = run_suite(Suite::ToeplitzHankel, &grid, false, 1);
    let instances = reports.len();
    for r in &reports {
        assert!(
            r.pass,
            "toeplitz-hankel instance {} failed: {:?}",
            r.instance, r.detail
        );
    }
    finish(
        "criterion 06",
        "toeplitz-hankel determinants, cap 8",
        instances,
        t,
        120,
    );
}

#[test]
fn criterion_07_transitions() {
    let t = Instant::now();
    let grid = Grid {
        deg: Some(5),
        ..Grid::default()
    };
    let reports = run_suite(Suite::Transitions, &grid, false, 1);
    let instances = reports.len();
    for r in &reports {
        assert!(
            r.pass,
            "transition instance {} failed: {:?}",
            r.instance, r.detail
        );
    }
    finish("criterion 07", "transition round trips", instances, t, 30);
}

#[test]
fn criterion_08_interpolation() {
    let t = Instant::now();
    let zero = num_bigint::BigInt::from(0);
    let one = num_bigint::BigInt::from(1);
    let minus_one = num_bigint::BigInt::from(-1);
    let mut instances = 0;
    for n in 1..=3usize {
        for lambda in partitions_up_to(5, n) {
            let so = so_jt(&lambda, n).unwrap();
            let sp = sp_char(&lambda, n).unwrap();
            let o = o_char(&lambda, n).unwrap();
            let bd = s_bd(&lambda, n).unwrap();
            let bc = s_bc(&lambda, n).unwrap();
            let cd = s_cd(&lambda, n).unwrap();
            assert_eq!(bd.substitute_alpha(&zero), so, "bd(0) at {lambda}, n={n}");
            assert_eq!(bd.substitute_alpha(&one), o, "bd(1) at {lambda}, n={n}");
            assert_eq!(bc.substitute_alpha(&zero), so, "bc(0) at {lambda}, n={n}");
            assert_eq!(
                bc.substitute_alpha(&minus_one),
                sp,
                "bc(-1) at {lambda}, n={n}"
            );
            assert_eq!(cd.substitute_alpha(&zero), sp, "cd(0) at {lambda}, n={n}");
            assert_eq!(cd.substitute_alpha(&one), o, "cd(1) at {lambda}, n={n}");
            assert_eq!(
                bd,
                bd_epsilon_expansion(&lambda, n).unwrap(),
                "bd expansion at {lambda}, n={n}"
            );
            instances += 1;
        }
    }
    finish(
        "criterion 08",
        "interpolation endpoints and expansion",
        instances,
        t,
        60,
    );
}

#[test]
fn criterion_09_branching() {
    let t = Instant::now();
    let reports = run_suite(Suite::Branching, &Grid::default(), false, 1);
    let instances = reports.len();
    for r in &reports {
        assert!(
            r.pass,
            "branching instance {} failed: {:?}",
            r.instance, r.detail
        );
    }
    finish(
        "criterion 09",
        "branching rule at one variable",
        instances,
        t,
        30,
    );
}

#[test]
fn criterion_10_mutation_sensitivity() {
    let t = Instant::now();
    let bin = env!("CARGO_BIN_EXE_sochar");
    let cases: &[&[&str]] = &[
        &[
            "verify",
            "--suite",
            "cauchy_so",
            "--n",
            "1",
            "--deg",
            "3",
            "--mutate",
        ],
        &[
            "verify",
            "--suite",
            "cauchy_reduced",
            "--kind",
            "so",
            "--n",
            "1",
            "--deg",
            "3",
            "--mutate",
        ],
        &[
            "verify",
            "--suite",
            "skew_cauchy_so",
            "--lambda",
            "1",
            "--mu",
            "1",
            "--deg",
            "3",
            "--mutate",
        ],
        &[
            "verify",
            "--suite",
            "toeplitz_hankel",
            "--len",
            "1",
            "--lambda",
            "1",
            "--deg",
            "4",
            "--mutate",
        ],
        &[
            "verify",
            "--suite",
            "littlewood",
            "--len",
            "2",
            "--deg",
            "3",
            "--mutate",
        ],
        &[
            "verify",
            "--suite",
            "transitions",
            "--n",
            "1",
            "--deg",
            "2",
            "--mutate",
        ],
        &[
            "verify",
            "--suite",
            "branching",
            "--lambda",
            "1",
            "--mutate",
        ],
        &["verify", "--suite", "vandermonde", "--n", "1", "--mutate"],
        &[
            "verify",
            "--suite",
            "orthogonality",
            "--deg",
            "2",
            "--len",
            "2",
            "--mutate",
        ],
        &[
            "verify",
            "--suite",
            "dual_pairing",
            "--deg",
            "2",
            "--mutate",
        ],
    ];
    for args in cases {
        let out = std::process::Command::new(bin)
            .args(*args)
            .output()
            .expect("run mutated suite");
        assert_eq!(
            out.status.code(),
            Some(1),
            "mutated run {:?} should exit 1; stdout: {}",
            args,
            String::from_utf8_lossy(&out.stdout)
        );
    }
    // and one clean run per comparator family exits 0
    let clean: &[&[&str]] = &[
        &["verify", "--suite", "cauchy_so", "--n", "1", "--deg", "3"],
        &["verify", "--suite", "vandermonde", "--n", "1"],
    ];
    for args in clean {
        let out = std::process::Command::new(bin)
            .args(*args)
            .output()
            .expect("run suite");
        assert_eq!(
            out.status.code(),
            Some(0),
            "clean run {:?} should exit 0",
            args
        );
    }
    finish("criterion 10", "mutation sensitivity", cases.len(), t, 120);
}
