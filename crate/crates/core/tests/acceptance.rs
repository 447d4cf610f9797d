//! Acceptance gate for the library: twelve criteria, one test (and one
//! pass/fail line from the harness) per criterion.
//!
//! Golden data is re-declared locally rather than imported, so the gate
//! stays an independent statement of what the library must produce. All
//! arithmetic is exact; every criterion also enforces its time budget.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use waring::rational::rat;
use waring::{
    act, aronhold_invariant, build_a, build_a_deleting, build_aprime, build_b, build_block,
    build_bprime, build_c, det_b, in_sigma7, is_clebsch, p_invariant, parse_form, polar_contract,
    random_form, random_linear, random_powers_sum, random_sl, scorza_map, segre_degree, Form,
    Integer, Matrix, MultiIndex, Rational,
};

fn assert_budget(start: Instant, secs: u64, what: &str) {
    let elapsed = start.elapsed();
    assert!(
        elapsed <= Duration::from_secs(secs),
        "{what} took {elapsed:?}, budget {secs} s"
    );
}

/// The 9x9 matrix of the plane-cubic pencil as (sign, tensor index) per
/// entry; sign 0 marks a structural zero.
const APRIME_GOLDEN: [[(i8, [u8; 3]); 9]; 9] = [
    [(0,[0,0,0]), ( 1,[2,2,2]), (-1,[1,2,2]), (0,[0,0,0]), (-1,[1,2,2]), ( 1,[1,1,2]), (0,[0,0,0]), ( 1,[0,2,2]), (-1,[0,1,2])],
    [(-1,[2,2,2]), (0,[0,0,0]), ( 1,[0,2,2]), ( 1,[1,2,2]), (0,[0,0,0]), (-1,[0,1,2]), (-1,[0,2,2]), (0,[0,0,0]), ( 1,[0,0,2])],
    [( 1,[1,2,2]), (-1,[0,2,2]), (0,[0,0,0]), (-1,[1,1,2]), ( 1,[0,1,2]), (0,[0,0,0]), ( 1,[0,1,2]), (-1,[0,0,2]), (0,[0,0,0])],
    [(0,[0,0,0]), (-1,[1,2,2]), ( 1,[1,1,2]), (0,[0,0,0]), ( 1,[1,1,2]), (-1,[1,1,1]), (0,[0,0,0]), (-1,[0,1,2]), ( 1,[0,1,1])],
    [( 1,[1,2,2]), (0,[0,0,0]), (-1,[0,1,2]), (-1,[1,1,2]), (0,[0,0,0]), ( 1,[0,1,1]), ( 1,[0,1,2]), (0,[0,0,0]), (-1,[0,0,1])],
    [(-1,[1,1,2]), ( 1,[0,1,2]), (0,[0,0,0]), ( 1,[1,1,1]), (-1,[0,1,1]), (0,[0,0,0]), (-1,[0,1,1]), ( 1,[0,0,1]), (0,[0,0,0])],
    [(0,[0,0,0]), ( 1,[0,2,2]), (-1,[0,1,2]), (0,[0,0,0]), (-1,[0,1,2]), ( 1,[0,1,1]), (0,[0,0,0]), ( 1,[0,0,2]), (-1,[0,0,1])],
    [(-1,[0,2,2]), (0,[0,0,0]), ( 1,[0,0,2]), ( 1,[0,1,2]), (0,[0,0,0]), (-1,[0,0,1]), (-1,[0,0,2]), (0,[0,0,0]), ( 1,[0,0,0])],
    [( 1,[0,1,2]), (-1,[0,0,2]), (0,[0,0,0]), (-1,[0,1,1]), ( 1,[0,0,1]), (0,[0,0,0]), ( 1,[0,0,1]), (-1,[0,0,0]), (0,[0,0,0])],
];

#[test]
fn criterion_01_golden_9x9_on_basis_cubics() {
    let start = Instant::now();
    let basis: Vec<MultiIndex> = MultiIndex::all(3, 3).collect();
    assert_eq!(basis.len(), 10);
    for alpha in &basis {
        let f = Form::from_pairs(3, 3, &[(alpha.as_slice(), rat(1))]).unwrap();
        let m = build_aprime(&f).unwrap();
        for (i, golden_row) in APRIME_GOLDEN.iter().enumerate() {
            for (j, &(s, ids)) in golden_row.iter().enumerate() {
                let expected = if s != 0 && &MultiIndex::from_ids(&ids) == alpha {
                    rat(s as i64)
                } else {
                    rat(0)
                };
                assert_eq!(m.get(i, j), &expected, "basis {alpha}, entry ({i}, {j})");
            }
        }
    }
    assert_budget(start, 1, "criterion 1");
}

#[test]
fn criterion_02_aronhold_values_and_cube_rank() {
    let start = Instant::now();
    let triangle = parse_form("x0*x1*x2", 3, 3).unwrap();
    assert_ne!(aronhold_invariant(&triangle).unwrap(), rat(0));
    let fermat = parse_form("x0^3+x1^3+x2^3", 3, 3).unwrap();
    assert_eq!(aronhold_invariant(&fermat).unwrap(), rat(0));
    for seed in 0..25 {
        let w = random_linear(3, seed, 5);
        let cube = Form::power_of_linear(&w, 3).unwrap();
        assert_eq!(build_a(&cube).unwrap().a.rank(), 2, "seed {seed}");
    }
    assert_budget(start, 2, "criterion 2");
}

#[test]
fn criterion_03_deletion_independence() {
    let start = Instant::now();
    // Deleting row/column 3, 5 or 7 must change the Pfaffian by at most a
    // sign that is one fixed constant per choice, across all cubics.
    let mut sign5: Option<Rational> = None;
    let mut sign7: Option<Rational> = None;
    for seed in 0..10 {
        let f = random_form(3, 3, seed, 4);
        let p3 = build_a_deleting(&f, 3).unwrap().pfaffian().unwrap();
        let p5 = build_a_deleting(&f, 5).unwrap().pfaffian().unwrap();
        let p7 = build_a_deleting(&f, 7).unwrap().pfaffian().unwrap();
        if p3 == rat(0) {
            assert_eq!(p5, rat(0), "seed {seed}");
            assert_eq!(p7, rat(0), "seed {seed}");
            continue;
        }
        let s5 = &p5 / &p3;
        let s7 = &p7 / &p3;
        assert!(s5 == rat(1) || s5 == rat(-1), "seed {seed}: ratio {s5}");
        assert!(s7 == rat(1) || s7 == rat(-1), "seed {seed}: ratio {s7}");
        match &sign5 {
            None => sign5 = Some(s5),
            Some(prev) => assert_eq!(prev, &s5, "seed {seed}"),
        }
        match &sign7 {
            None => sign7 = Some(s7),
            Some(prev) => assert_eq!(prev, &s7, "seed {seed}"),
        }
    }
    assert!(sign5.is_some(), "every sample was degenerate");
    assert_budget(start, 2, "criterion 3");
}

/// Corrected five-variable block A4 as (sign, tensor index) per entry.
const A4_GOLDEN: [[(i8, [u8; 3]); 5]; 5] = [
    [( 1,[4,4,4]), (-1,[3,4,4]), ( 1,[2,4,4]), (-1,[1,4,4]), ( 1,[0,4,4])],
    [(-1,[3,4,4]), ( 1,[3,3,4]), (-1,[2,3,4]), ( 1,[1,3,4]), (-1,[0,3,4])],
    [( 1,[2,4,4]), (-1,[2,3,4]), ( 1,[2,2,4]), (-1,[1,2,4]), ( 1,[0,2,4])],
    [(-1,[1,4,4]), ( 1,[1,3,4]), (-1,[1,2,4]), ( 1,[1,1,4]), (-1,[0,1,4])],
    [( 1,[0,4,4]), (-1,[0,3,4]), ( 1,[0,2,4]), (-1,[0,1,4]), ( 1,[0,0,4])],
];

/// Nonzero blocks of the 50x50 matrix, upper triangle, as
/// (block row, block column, sign, block index).
const BLOCK_LAYOUT: [(usize, usize, i8, usize); 15] = [
    (0, 7, 1, 4), (0, 8, -1, 3), (0, 9, 1, 2),
    (1, 5, -1, 4), (1, 6, 1, 3), (1, 9, -1, 1),
    (2, 4, 1, 4), (2, 6, -1, 2), (2, 8, 1, 1),
    (3, 4, -1, 3), (3, 5, 1, 2), (3, 7, -1, 1),
    (4, 9, 1, 0), (5, 8, -1, 0), (6, 7, 1, 0),
];

#[test]
fn criterion_04_golden_a4_and_block_form() {
    let start = Instant::now();
    for seed in 0..10 {
        let f = random_form(5, 3, seed, 4);
        let a4 = build_block(&f, 4).unwrap();
        for (r, golden_row) in A4_GOLDEN.iter().enumerate() {
            for (c, &(s, ids)) in golden_row.iter().enumerate() {
                let expected = f.coeff_ids(&ids).scale_sign(s);
                assert_eq!(a4.get(r, c), &expected, "seed {seed}, A4 entry ({r}, {c})");
            }
        }
        // build_bprime internally recomputes every entry by the contraction
        // formula and fails if the two constructions disagree, so Ok here
        // certifies the cross-check as well as the layout below.
        let bp = build_bprime(&f).unwrap();
        let blocks: Vec<Matrix<Rational>> =
            (0..5).map(|i| build_block(&f, i).unwrap()).collect();
        let mut expected = Matrix::zeros(50, 50);
        for &(br, bc, s, m) in &BLOCK_LAYOUT {
            for r in 0..5 {
                for c in 0..5 {
                    let v = blocks[m].get(r, c).scale_sign(s);
                    expected.set(5 * br + r, 5 * bc + c, v.clone());
                    expected.set(5 * bc + c, 5 * br + r, v);
                }
            }
        }
        assert!(bp == expected, "seed {seed}: block layout mismatch");
    }
    assert_budget(start, 5, "criterion 4");
}

trait ScaleSign {
    fn scale_sign(&self, s: i8) -> Self;
}

impl ScaleSign for Rational {
    fn scale_sign(&self, s: i8) -> Rational {
        if s < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

#[test]
fn criterion_05_determinant_identities() {
    let start = Instant::now();
    // The standard example of a quinary cubic outside the seven-secant
    // hypersurface, with its written coefficients as tensor coordinates.
    let pentagram = Form::from_pairs(
        5,
        3,
        &[
            (&[0, 0, 1], rat(1)),
            (&[0, 2, 2], rat(1)),
            (&[1, 1, 3], rat(1)),
            (&[2, 4, 4], rat(1)),
            (&[3, 3, 4], rat(1)),
        ],
    )
    .unwrap();
    assert_eq!(det_b(&pentagram).unwrap(), rat(-2));

    // Six-coefficient specialization: only v000, v012, v111, v223, v334,
    // v144 nonzero gives det B = 2 (a^2 b^3 c d^3 e^3 f^3)^3.
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    for trial in 0..20 {
        let q: Vec<i64> = (0..6).map(|_| rng.random_range(-3..=3)).collect();
        let (a, b, c, d, e, f) = (q[0], q[1], q[2], q[3], q[4], q[5]);
        let form = Form::from_pairs(
            5,
            3,
            &[
                (&[0, 0, 0], rat(a)),
                (&[0, 1, 2], rat(b)),
                (&[1, 1, 1], rat(c)),
                (&[2, 2, 3], rat(d)),
                (&[3, 3, 4], rat(e)),
                (&[1, 4, 4], rat(f)),
            ],
        )
        .unwrap();
        let inner = rat(a * a * b * b * b * c) * rat(d * d * d) * rat(e * e * e) * rat(f * f * f);
        let expected = rat(2) * &inner * &inner * &inner;
        assert_eq!(det_b(&form).unwrap(), expected, "trial {trial}: {q:?}");
    }
    assert_budget(start, 30, "criterion 5");
}

#[test]
fn criterion_06_rank_lemmas() {
    let start = Instant::now();
    for seed in 0..25 {
        let v = random_linear(5, seed, 3);
        let cube = Form::power_of_linear(&v, 3).unwrap();
        assert_eq!(build_b(&cube).unwrap().b.rank(), 6, "seed {seed}");
    }
    for seed in 0..25 {
        let (_, seven) = random_powers_sum(5, 3, 7, seed, 3);
        assert_eq!(det_b(&seven).unwrap(), rat(0), "seed {seed}");
        let profile = in_sigma7(&seven).unwrap();
        assert!(profile.member, "seed {seed}");
        assert!(profile.rank_b <= 42, "seed {seed}: rank {}", profile.rank_b);
    }
    let mut full_rank = 0;
    for seed in 0..25 {
        let (_, eight) = random_powers_sum(5, 3, 8, seed, 3);
        if in_sigma7(&eight).unwrap().rank_b == 45 {
            full_rank += 1;
        }
    }
    assert!(full_rank >= 24, "only {full_rank}/25 sums of 8 cubes had full rank");
    assert_budget(start, 60, "criterion 6");
}

#[test]
fn criterion_07_cube_structure() {
    let start = Instant::now();
    let two_15 = rat(1 << 15);
    let two_45 = rat(1i64 << 45);
    for seed in 0..50 {
        let f = random_form(5, 3, seed, 3);
        // p_invariant fails loudly whenever det/2 is not a perfect cube.
        let p = p_invariant(&f).unwrap();
        let d = det_b(&f).unwrap();
        assert_eq!(rat(2) * &p * &p * &p, d, "seed {seed}");
        let doubled = f.scale(&rat(2));
        assert_eq!(p_invariant(&doubled).unwrap(), &two_15 * &p, "seed {seed}");
        assert_eq!(det_b(&doubled).unwrap(), &two_45 * &d, "seed {seed}");
    }
    assert_budget(start, 60, "criterion 7");
}

#[test]
fn criterion_08_sl_invariance() {
    let start = Instant::now();
    let phi = random_form(5, 3, 808, 2);
    let d = det_b(&phi).unwrap();
    for seed in 0..10 {
        let g = random_sl(5, seed, 1);
        assert_eq!(det_b(&act(&g, &phi).unwrap()).unwrap(), d, "seed {seed}");
    }
    let psi = random_form(3, 3, 809, 3);
    let s = aronhold_invariant(&psi).unwrap();
    for seed in 0..10 {
        let g = random_sl(3, seed, 2);
        assert_eq!(
            aronhold_invariant(&act(&g, &psi).unwrap()).unwrap(),
            s,
            "seed {seed}"
        );
    }
    assert_budget(start, 30, "criterion 8");
}

/// Catalecticant layout: tensor index of each entry of the 6x6 matrix in
/// the basis 00, 01, 11, 02, 12, 22.
const CATALECTICANT_GOLDEN: [[&str; 6]; 6] = [
    ["0000", "0001", "0011", "0002", "0012", "0022"],
    ["0001", "0011", "0111", "0012", "0112", "0122"],
    ["0011", "0111", "1111", "0112", "1112", "1122"],
    ["0002", "0012", "0112", "0022", "0122", "0222"],
    ["0012", "0112", "1112", "0122", "1122", "1222"],
    ["0022", "0122", "1122", "0222", "1222", "2222"],
];

#[test]
fn criterion_09_catalecticant() {
    let start = Instant::now();
    let f = random_form(3, 4, 909, 5);
    let c = build_c(&f).unwrap();
    for (i, golden_row) in CATALECTICANT_GOLDEN.iter().enumerate() {
        for (j, key) in golden_row.iter().enumerate() {
            let mi = MultiIndex::from_key(key).unwrap();
            assert_eq!(c.matrix.get(i, j), &f.coeff(&mi), "entry ({i}, {j})");
        }
    }
    for seed in 0..25 {
        let v = random_linear(3, seed, 4);
        let fourth = Form::power_of_linear(&v, 4).unwrap();
        assert_eq!(build_c(&fourth).unwrap().matrix.rank(), 1, "seed {seed}");
    }
    for seed in 0..25 {
        let (_, five) = random_powers_sum(3, 4, 5, seed, 3);
        let profile = is_clebsch(&five).unwrap();
        assert!(profile.clebsch, "seed {seed}: det {}", profile.det);
    }
    let mut nonzero = 0;
    for seed in 0..25 {
        // A slightly wider coefficient range keeps accidental collisions
        // between the six sample points rare.
        let (_, six) = random_powers_sum(3, 4, 6, seed, 4);
        if !is_clebsch(&six).unwrap().clebsch {
            nonzero += 1;
        }
    }
    assert!(nonzero >= 24, "only {nonzero}/25 sums of 6 fourth powers were non-Clebsch");
    assert_budget(start, 5, "criterion 9");
}

#[test]
fn criterion_10_scorza() {
    let start = Instant::now();
    let fermat = parse_form("x0^4+x1^4+x2^4", 3, 4).unwrap();
    assert!(scorza_map(&fermat).unwrap().is_zero());
    for seed in 0..25 {
        let f = random_form(3, 4, seed, 3);
        let s = scorza_map(&f).unwrap();
        let x = random_linear(3, 100 + seed, 3);
        let polar = polar_contract(&f, &x).unwrap();
        assert_eq!(s.eval(&x), aronhold_invariant(&polar).unwrap(), "seed {seed}");
    }
    let f = random_form(3, 4, 1010, 2);
    let s = scorza_map(&f).unwrap();
    for seed in 0..5 {
        let g = random_sl(3, seed, 1);
        assert_eq!(
            scorza_map(&act(&g, &f).unwrap()).unwrap(),
            act(&g, &s).unwrap(),
            "seed {seed}"
        );
    }
    assert_budget(start, 10, "criterion 10");
}

fn laplace_det(m: &Matrix<Rational>) -> Rational {
    let n = m.nrows();
    if n == 0 {
        return rat(1);
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = rat(0);
    for j in 0..n {
        if m.get(0, j) == &rat(0) {
            continue;
        }
        let rows: Vec<Vec<Rational>> = (1..n)
            .map(|i| (0..n).filter(|&c| c != j).map(|c| m.get(i, c).clone()).collect())
            .collect();
        let term = m.get(0, j) * &laplace_det(&Matrix::from_rows(rows).unwrap());
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix<Rational> {
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|_| (0..n).map(|_| rat(rng.random_range(-9..=9))).collect())
        .collect();
    Matrix::from_rows(rows).unwrap()
}

fn random_skew(rng: &mut ChaCha8Rng, n: usize) -> Matrix<Rational> {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let v = rat(rng.random_range(-9..=9));
            m.set(i, j, v.clone());
            m.set(j, i, -v);
        }
    }
    m
}

#[test]
fn criterion_11_linear_algebra_oracles() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1111);
    for trial in 0..50 {
        let n = 1 + trial % 6;
        let m = random_matrix(&mut rng, n);
        assert_eq!(m.det().unwrap(), laplace_det(&m), "det trial {trial}, order {n}");
    }
    for trial in 0..50 {
        let n = 2 * (1 + trial % 4);
        let m = random_skew(&mut rng, n);
        let pf = m.pfaffian().unwrap();
        assert_eq!(&pf * &pf, m.det().unwrap(), "pfaffian trial {trial}, order {n}");
    }
    for trial in 0..25 {
        let m = random_skew(&mut rng, 8);
        assert_eq!(
            m.pfaffian_expansion().unwrap(),
            m.pfaffian().unwrap(),
            "matching-sum trial {trial}"
        );
    }
    assert_budget(start, 5, "criterion 11");
}

#[test]
fn criterion_12_segre_degrees() {
    let start = Instant::now();
    for n in 1..=8u64 {
        assert_eq!(segre_degree(n, n).unwrap(), Integer::from(n + 1), "n = {n}");
    }
    for n in 1..=8u64 {
        for k in 1..=n {
            let d = segre_degree(n, k).unwrap();
            assert!(d >= Integer::from(1), "({n}, {k}) gave {d}");
        }
    }
    assert_budget(start, 1, "criterion 12");
}
