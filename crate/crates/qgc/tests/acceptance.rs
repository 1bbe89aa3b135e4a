//! Acceptance suite: one test per criterion, each printing a pass line
//! (visible with `--nocapture`). Time limits are asserted in release builds
//! and reported otherwise.
//!
//! Environment knobs:
//! - QGC_ACCEPT_STRETCH=1 runs the full information-set termination for the
//!   [110,40] code (30-minute budget) instead of the staged 60-second pass.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qgc::config::JobConfig;
use qgc::{
    concat_distance_bound_for_parts, exhaustive_selfdual_search, from_free_action, griesmer_max_d,
    selfdual_construct, selfdual_exists, verify_module, BlockRing, DistanceOptions, Field,
    FieldElement, FiniteGroup, GroupAlgebra, LinearCode, Part, Permutation, Strategy,
};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn load_fixture(name: &str) -> qgc::config::ResolvedJob {
    let job = JobConfig::from_path(&fixture(name)).expect("fixture parses");
    job.resolve().expect("fixture resolves")
}

fn assert_runtime(name: &str, elapsed: Duration, limit: Duration) {
    println!("    {} took {:.3}s (limit {:?})", name, elapsed.as_secs_f64(), limit);
    if !cfg!(debug_assertions) {
        assert!(
            elapsed <= limit,
            "{} exceeded its runtime limit: {:.3}s > {:?}",
            name,
            elapsed.as_secs_f64(),
            limit
        );
    }
}

/// The published 12x24 generator matrix of the dihedral construction
/// (identity block left, redundancy right).
const GOLAY_PRINTED: [&str; 12] = [
    "100000000000110001111010",
    "010000000000011010111100",
    "001000000000101100111001",
    "000100000000001110010111",
    "000010000000010011100111",
    "000001000000100101001111",
    "000000100000010111011001",
    "000000010000001111101010",
    "000000001000100111110100",
    "000000000100111010001011",
    "000000000010111001010101",
    "000000000001111100100110",
];

fn bits_row(f: &Field, s: &str) -> Vec<FieldElement> {
    s.chars()
        .map(|c| f.element(c.to_digit(10).unwrap() as u64).unwrap())
        .collect()
}

fn printed_golay(f: &Field) -> LinearCode {
    LinearCode::from_rows(
        f.clone(),
        24,
        GOLAY_PRINTED.iter().map(|s| bits_row(f, s)).collect(),
    )
}

#[test]
fn acceptance_1_golay_reproduction() {
    let start = Instant::now();
    let job = load_fixture("golay_d6.toml");
    let code = job.assemble().expect("assembly");
    let f = code.algebra.field.clone();
    assert_eq!(code.length(), 24);
    assert_eq!(code.dim(), 12);
    // RREF equality with the printed matrix, exactly
    let printed = printed_golay(&f);
    assert_eq!(code.code, printed, "RREF differs from the printed matrix");
    // exhaustive distance over the 4095 nonzero codewords
    let report = code
        .code
        .min_distance(&DistanceOptions {
            strategy: Strategy::Exhaustive,
            ..Default::default()
        })
        .unwrap();
    assert_eq!(report.distance(), Some(8));
    assert!(code.is_self_dual());
    let elapsed = start.elapsed();
    assert_runtime("criterion 1", elapsed, Duration::from_secs(1));
    println!("criterion 1 (Golay reproduction, [24,12,8] self-dual, printed RREF): PASS");
}

#[test]
fn acceptance_2a_example_54_8_24_parameters() {
    let start = Instant::now();
    let job = load_fixture("s3c3_54_8_24.toml");
    let code = job.assemble().expect("assembly");
    assert_eq!(code.length(), 54);
    assert_eq!(code.dim(), 8);
    let report = code
        .code
        .min_distance(&DistanceOptions {
            strategy: Strategy::Exhaustive,
            ..Default::default()
        })
        .unwrap();
    assert_eq!(report.distance(), Some(24));
    let elapsed = start.elapsed();
    assert_runtime("criterion 2a", elapsed, Duration::from_secs(1));
    println!("criterion 2 ([54,8,24] exact, exhaustive over 255 codewords): PASS");
}

#[test]
fn acceptance_2b_example_54_8_24_griesmer_equality() {
    // The distance 24 is optimal per the published code tables, but the
    // Griesmer bound itself admits d = 25 for [54,8] over GF(2):
    // 25+13+7+4+2+1+1+1 = 54. The equality asserted here therefore cannot
    // hold; the test is kept to record the discrepancy rather than silently
    // weakening the check.
    let job = load_fixture("s3c3_54_8_24.toml");
    let code = job.assemble().expect("assembly");
    let report = code
        .code
        .min_distance(&DistanceOptions {
            strategy: Strategy::Exhaustive,
            ..Default::default()
        })
        .unwrap();
    let d = report.distance().unwrap();
    let cap = griesmer_max_d(54, 8, 2);
    println!(
        "criterion 2 (Griesmer equality): d = {}, griesmer_max_d(54,8,2) = {}",
        d, cap
    );
    assert_eq!(
        d, cap,
        "the [54,8] code's distance (24, optimal per code tables) does not meet \
         the Griesmer bound, which admits 25; recorded as a known discrepancy"
    );
}

#[test]
fn acceptance_3_example_110_40_staged() {
    let start = Instant::now();
    let job = load_fixture("d22_110_40.toml");
    let code = job.assemble().expect("assembly");
    assert_eq!(code.length(), 110);
    assert_eq!(code.dim(), 40, "dimension must be exactly 40");

    let idems = code.algebra.central_primitive_idempotents();
    let bound =
        concat_distance_bound_for_parts(&code.algebra, &idems, code.index, &job.parts).unwrap();
    println!("    blockwise distance bound: {}", bound);

    let stretch = std::env::var("QGC_ACCEPT_STRETCH").is_ok_and(|v| v == "1");
    let budget = if stretch {
        Duration::from_secs(30 * 60)
    } else {
        Duration::from_secs(60)
    };
    let report = code
        .code
        .min_distance(&DistanceOptions {
            strategy: Strategy::InformationSet,
            threads: 0,
            seed: 0,
            budget: Some(budget),
            samples: 0,
        })
        .unwrap();
    println!(
        "    information-set search: lower {}, upper {}, exact: {}",
        report.lower, report.upper, report.exact
    );
    assert!(
        report.upper <= 22,
        "a weight-22 codeword must be found within the budget (got upper bound {})",
        report.upper
    );
    assert!(
        report.lower >= bound,
        "the proven lower bound must dominate the blockwise bound"
    );
    if stretch {
        assert!(report.exact, "stretch run must terminate");
        assert_eq!(report.upper, 22);
        assert_runtime("criterion 3 (stretch)", start.elapsed(), Duration::from_secs(30 * 60));
        println!("criterion 3 ([110,40,22], exact distance via full termination): PASS");
    } else if report.exact {
        assert_eq!(report.upper, 22);
        println!("criterion 3 ([110,40,22], exact within the staged budget): PASS");
    } else {
        println!(
            "criterion 3 ([110,40], dim 40, d <= 22, lower bound {} >= blockwise bound {}): PASS (staged)",
            report.lower, bound
        );
    }
}

#[test]
fn acceptance_4_idempotent_ground_truth() {
    let f2 = Field::prime(2).unwrap();

    let check = |group: FiniteGroup, expected: Vec<&str>, label: &str| {
        let start = Instant::now();
        let alg = GroupAlgebra::new(f2.clone(), group);
        let idems = alg.central_primitive_idempotents();
        let got: Vec<Vec<FieldElement>> = idems.iter().map(|e| e.coeffs.clone()).collect();
        let want: Vec<Vec<FieldElement>> = expected
            .iter()
            .map(|s| s.split_whitespace().map(|t| f2.element(t.parse().unwrap()).unwrap()).collect())
            .collect();
        assert_eq!(got, want, "{}", label);
        assert_runtime(label, start.elapsed(), Duration::from_secs(1));
    };

    check(
        FiniteGroup::dihedral(6).unwrap(),
        vec!["1 1 1 0 0 0", "0 1 1 0 0 0"],
        "F2 D6",
    );
    check(
        FiniteGroup::parse_spec("product:(dihedral:6,cyclic:3)").unwrap(),
        vec![
            "1 1 1 1 1 1 1 1 1 0 0 0 0 0 0 0 0 0",
            "0 0 0 1 1 1 1 1 1 0 0 0 0 0 0 0 0 0",
            "0 1 1 0 1 1 0 1 1 0 0 0 0 0 0 0 0 0",
            "0 0 0 0 1 1 0 1 1 0 0 0 0 0 0 0 0 0",
        ],
        "F2 S3xC3",
    );
    check(
        FiniteGroup::dihedral(22).unwrap(),
        vec![
            "1 1 1 1 1 1 1 1 1 1 1 0 0 0 0 0 0 0 0 0 0 0",
            "0 1 1 1 1 1 1 1 1 1 1 0 0 0 0 0 0 0 0 0 0 0",
        ],
        "F2 D22",
    );
    println!("criterion 4 (printed idempotents for F2D6, F2[S3xC3], F2D22): PASS");
}

#[test]
fn acceptance_5_selfduality_grid() {
    let start = Instant::now();
    let fields: Vec<Field> = [2u64, 3, 4, 5, 7, 9]
        .iter()
        .map(|&q| Field::parse_spec(&q.to_string()).unwrap())
        .collect();
    let groups: Vec<FiniteGroup> = vec![
        FiniteGroup::cyclic(1),
        FiniteGroup::cyclic(2),
        FiniteGroup::cyclic(3),
        FiniteGroup::cyclic(4),
        FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)),
        FiniteGroup::dihedral(6).unwrap(),
    ];
    let mut constructed = 0usize;
    let mut confirmed_absent = 0usize;
    let mut skipped = 0usize;
    for field in &fields {
        for group in &groups {
            for index in 1..=4usize {
                let n = group.order() * index;
                if selfdual_exists(field, group, index) {
                    let code = selfdual_construct(field, group, index).unwrap_or_else(|e| {
                        panic!(
                            "construction failed at q={} |G|={} l={}: {}",
                            field.q(),
                            group.order(),
                            index,
                            e
                        )
                    });
                    // exact subspace equality C = C-perp
                    assert_eq!(code.code, code.code.dual());
                    constructed += 1;
                } else {
                    let space = (n as f64) * (field.q() as f64).log2();
                    if space <= (1e7f64).log2() {
                        let found = exhaustive_selfdual_search(field, group, index, 1e7)
                            .expect("within cap");
                        assert!(
                            found.is_none(),
                            "criterion predicts nonexistence at q={} |G|={} l={}",
                            field.q(),
                            group.order(),
                            index
                        );
                        confirmed_absent += 1;
                    } else {
                        skipped += 1;
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    assert_runtime("criterion 5", elapsed, Duration::from_secs(300));
    println!(
        "criterion 5 (self-duality grid: {} constructed and verified, {} nonexistence confirmed, {} beyond the search cap): PASS",
        constructed, confirmed_absent, skipped
    );
}

#[test]
fn acceptance_6_hamming_witness() {
    let f2 = Field::prime(2).unwrap();
    let group = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(4));
    let alg = GroupAlgebra::new(f2.clone(), group.clone());
    let n = group.order();
    let mut found = None;
    for mask in 1u32..(1 << n) {
        let coeffs: Vec<FieldElement> = (0..n)
            .map(|i| FieldElement((mask >> i) & 1))
            .collect();
        let a = alg.from_coeffs(coeffs).unwrap();
        let rows: Vec<Vec<FieldElement>> = (0..n)
            .map(|g| alg.mul(&a, &alg.basis_element(g)).coeffs)
            .collect();
        let code = LinearCode::from_rows(f2.clone(), n, rows);
        if code.dim() != 4 {
            continue;
        }
        let d = code
            .min_distance(&DistanceOptions {
                strategy: Strategy::Exhaustive,
                ..Default::default()
            })
            .unwrap();
        if d.distance() == Some(4) {
            found = Some(code);
            break;
        }
    }
    let code = found.expect("an [8,4,4] principal right ideal of F2[C2xC4] exists");
    // wrap with the regular action witness
    let perms: Vec<Permutation> = (0..n).map(|g| group.regular_rep(g)).collect();
    let q = from_free_action(&code, &f2, &group, &perms).expect("free action wraps");
    assert_eq!(q.index, 1);
    assert!(verify_module(&q.code, &q.algebra, q.index, &q.coord_of).is_ok());
    println!("criterion 6 ([8,4,4] principal ideal of F2[C2xC4] + free-action wrap): PASS");
}

// ----- criterion 7: property suites, >= 100 seeded instances each -----

struct InstancePool {
    algebras: Vec<GroupAlgebra>,
}

impl InstancePool {
    fn new() -> InstancePool {
        let fields: Vec<Field> = [2u64, 3, 4, 5]
            .iter()
            .map(|&q| Field::parse_spec(&q.to_string()).unwrap())
            .collect();
        let groups = vec![
            FiniteGroup::cyclic(2),
            FiniteGroup::cyclic(3),
            FiniteGroup::cyclic(4),
            FiniteGroup::cyclic(6),
            FiniteGroup::dihedral(6).unwrap(),
            FiniteGroup::dihedral(8).unwrap(),
            FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)),
        ];
        let mut algebras = Vec::new();
        for f in &fields {
            for g in &groups {
                algebras.push(GroupAlgebra::new(f.clone(), g.clone()));
            }
        }
        InstancePool { algebras }
    }

    /// A random assembled quasi code with N <= 48, plus its parts.
    fn random_assembled(
        &self,
        rng: &mut ChaCha8Rng,
    ) -> (GroupAlgebra, usize, Vec<Part>, qgc::QuasiGroupCode) {
        loop {
            let alg = &self.algebras[rng.gen_range(0..self.algebras.len())];
            let n = alg.dim();
            let max_index = (48 / n).min(4).max(1);
            let index = rng.gen_range(1..=max_index);
            let idems = alg.central_primitive_idempotents();
            let mut parts = Vec::new();
            for f in &idems {
                if rng.gen_bool(0.6) {
                    continue;
                }
                let block = BlockRing::new(alg, f).unwrap();
                let rows = (0..rng.gen_range(1..=2))
                    .map(|_| {
                        (0..index)
                            .map(|_| {
                                // random K-combination of the block basis
                                let mut e = alg.zero();
                                for b in block.basis() {
                                    let c = FieldElement(
                                        rng.gen_range(0..alg.field.q()) as u32
                                    );
                                    e = alg.add(&e, &alg.scalar_mul(c, b));
                                }
                                e
                            })
                            .collect::<Vec<_>>()
                    })
                    .collect::<Vec<_>>();
                parts.push(Part::Direct { block, rows });
            }
            if parts.is_empty() {
                continue;
            }
            let Ok(code) = qgc::assemble(alg, index, &parts) else {
                continue;
            };
            if code.dim() == 0 {
                continue;
            }
            return (alg.clone(), index, parts, code);
        }
    }
}

#[test]
fn acceptance_7a_decompose_assemble_round_trip() {
    let pool = InstancePool::new();
    let mut rng = ChaCha8Rng::seed_from_u64(701);
    for _ in 0..100 {
        let (alg, index, _parts, code) = pool.random_assembled(&mut rng);
        let idems = alg.central_primitive_idempotents();
        let parts = code.decompose(&idems).expect("decompose");
        let mut dim_sum = 0;
        for p in &parts {
            if let Part::Direct { rows, .. } = p {
                dim_sum += rows.len();
            }
        }
        assert_eq!(dim_sum, code.dim(), "K-dimensions of the parts must add up");
        let rebuilt = qgc::assemble(&alg, index, &parts).expect("reassemble");
        assert_eq!(rebuilt.code, code.code, "round trip must reproduce the code");
    }
    println!("criterion 7a (decompose-assemble round trip, 100 instances): PASS");
}

#[test]
fn acceptance_7b_dual_of_dual() {
    let mut rng = ChaCha8Rng::seed_from_u64(702);
    let fields: Vec<Field> = [2u64, 3, 4, 5, 7, 9]
        .iter()
        .map(|&q| Field::parse_spec(&q.to_string()).unwrap())
        .collect();
    for _ in 0..120 {
        let f = &fields[rng.gen_range(0..fields.len())];
        let n = rng.gen_range(2..=16);
        let k = rng.gen_range(1..=n);
        let rows: Vec<Vec<FieldElement>> = (0..k)
            .map(|_| {
                (0..n)
                    .map(|_| FieldElement(rng.gen_range(0..f.q()) as u32))
                    .collect()
            })
            .collect();
        let c = LinearCode::from_rows(f.clone(), n, rows);
        assert_eq!(c.dual().dual(), c);
        assert_eq!(c.dim() + c.dual().dim(), n);
    }
    println!("criterion 7b (dual of dual identity, 120 instances): PASS");
}

#[test]
fn acceptance_7c_distance_bound_below_exhaustive() {
    let pool = InstancePool::new();
    let mut rng = ChaCha8Rng::seed_from_u64(703);
    let mut checked = 0;
    while checked < 100 {
        let (alg, index, parts, code) = pool.random_assembled(&mut rng);
        let qk = (code.dim() as f64) * (alg.field.q() as f64).log2();
        if qk > 20.0 {
            continue;
        }
        let idems = alg.central_primitive_idempotents();
        let bound =
            concat_distance_bound_for_parts(&alg, &idems, index, &parts).expect("bound");
        let d = code
            .code
            .min_distance(&DistanceOptions {
                strategy: Strategy::Exhaustive,
                ..Default::default()
            })
            .unwrap()
            .distance()
            .unwrap();
        assert!(
            bound <= d,
            "bound {} exceeds the exact distance {} (q={}, |G|={}, l={})",
            bound,
            d,
            alg.field.q(),
            alg.dim(),
            index
        );
        checked += 1;
    }
    println!("criterion 7c (blockwise bound <= exhaustive distance, 100 instances): PASS");
}

#[test]
fn acceptance_7d_information_set_equals_exhaustive() {
    let mut rng = ChaCha8Rng::seed_from_u64(704);
    let fields: Vec<Field> = [2u64, 3, 4, 5]
        .iter()
        .map(|&q| Field::parse_spec(&q.to_string()).unwrap())
        .collect();
    let mut checked = 0;
    while checked < 100 {
        let f = &fields[rng.gen_range(0..fields.len())];
        let n = rng.gen_range(6..=20);
        let k = rng.gen_range(2..=n.min(10));
        if (k as f64) * (f.q() as f64).log2() > 16.0 {
            continue;
        }
        let rows: Vec<Vec<FieldElement>> = (0..k)
            .map(|_| {
                (0..n)
                    .map(|_| FieldElement(rng.gen_range(0..f.q()) as u32))
                    .collect()
            })
            .collect();
        let c = LinearCode::from_rows(f.clone(), n, rows);
        if c.dim() == 0 {
            continue;
        }
        let ex = c
            .min_distance(&DistanceOptions {
                strategy: Strategy::Exhaustive,
                ..Default::default()
            })
            .unwrap();
        let is = c
            .min_distance(&DistanceOptions {
                strategy: Strategy::InformationSet,
                seed: rng.gen(),
                ..Default::default()
            })
            .unwrap();
        assert!(is.exact);
        assert_eq!(is.distance(), ex.distance());
        checked += 1;
    }
    println!("criterion 7d (information-set = exhaustive, 100 instances): PASS");
}

#[test]
fn acceptance_7e_subgroup_restriction() {
    let pool = InstancePool::new();
    let mut rng = ChaCha8Rng::seed_from_u64(705);
    for _ in 0..100 {
        let (alg, _index, _parts, code) = pool.random_assembled(&mut rng);
        let n = alg.dim();
        // random subgroup from one or two random generators
        let gens: Vec<usize> = (0..rng.gen_range(1..=2))
            .map(|_| rng.gen_range(0..n))
            .collect();
        let restricted = code.restrict_to_subgroup(&gens).expect("restriction");
        // the underlying code is untouched
        assert_eq!(restricted.code, code.code);
        // index times subgroup order is the length
        assert_eq!(
            restricted.index * restricted.algebra.dim(),
            code.length()
        );
        // and the restriction passes module verification (done inside, but
        // assert explicitly for the report)
        assert!(verify_module(
            &restricted.code,
            &restricted.algebra,
            restricted.index,
            &restricted.coord_of
        )
        .is_ok());
    }
    println!("criterion 7e (subgroup restriction preserves the code, 100 instances): PASS");
}

#[test]
fn acceptance_7f_dual_is_a_module() {
    let pool = InstancePool::new();
    let mut rng = ChaCha8Rng::seed_from_u64(706);
    for _ in 0..100 {
        let (_alg, _index, _parts, code) = pool.random_assembled(&mut rng);
        let dual = code.quasi_dual().expect("dual of a module is a module");
        assert_eq!(code.dim() + dual.dim(), code.length());
        let dd = dual.quasi_dual().expect("double dual");
        assert_eq!(dd.code, code.code);
    }
    println!("criterion 7f (quasi dual passes module verification, 100 instances): PASS");
}

#[test]
fn acceptance_8_convolution_oracle_and_weight_isometry() {
    let mut rng = ChaCha8Rng::seed_from_u64(800);
    let fields: Vec<Field> = [2u64, 3, 4, 5]
        .iter()
        .map(|&q| Field::parse_spec(&q.to_string()).unwrap())
        .collect();
    let mut pairs = 0;
    while pairs < 1000 {
        let f = &fields[rng.gen_range(0..fields.len())];
        let n = rng.gen_range(1..=12);
        let alg = GroupAlgebra::new(f.clone(), FiniteGroup::cyclic(n));
        let rand_elem = |rng: &mut ChaCha8Rng| {
            alg.from_coeffs(
                (0..n)
                    .map(|_| FieldElement(rng.gen_range(0..f.q()) as u32))
                    .collect(),
            )
            .unwrap()
        };
        let a = rand_elem(&mut rng);
        let b = rand_elem(&mut rng);
        let prod = alg.mul(&a, &b);
        // independent oracle: multiplication in K[x]/(x^n - 1)
        let mut oracle = vec![FieldElement::ZERO; n];
        for i in 0..n {
            for j in 0..n {
                let k = (i + j) % n;
                oracle[k] = f.add(oracle[k], f.mul(a.coeffs[i], b.coeffs[j]));
            }
        }
        assert_eq!(prod.coeffs, oracle);
        // weight isometry
        assert_eq!(
            prod.weight(),
            alg.phi(&prod).iter().filter(|c| !c.is_zero()).count()
        );
        pairs += 1;
    }
    println!("criterion 8 (cyclic convolution = polynomial ring product, 1000 pairs; wt = wt o phi): PASS");
}
