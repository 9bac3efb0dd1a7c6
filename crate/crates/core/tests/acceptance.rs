//! Acceptance suite: reproduces every integer-valued example claim and
//! runs the randomized property checks, one test per criterion, printing
//! one PASS line each (visible with `cargo test --test acceptance -- --nocapture`).

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use mcalc::dsl;
use mcalc::factorization::{
    chiral_split, replay_certificate, Factorization, SignedTwist, TwistSign,
};
use mcalc::invariants::{
    binding_surgery, fibration_report, folded_invariants, intersection_form, matches,
    openbook_first_homology, FibrationOverDisk, FoldedAssembly, HomologyClass, SurgeryDirection,
};
use mcalc::linalg::{signature_symmetric, smith_normal_form, Matrix};
use mcalc::surface::{CurveClass, Surface, SurfaceError};
use mcalc::{Int, IntMatrix};

const TRIALS: usize = 200;

fn torus() -> Surface {
    Surface::new(1, 1)
}

fn tw(s: Surface, coords: &[i64], sign: i8) -> SignedTwist {
    let curve = CurveClass::from_i64(s, coords).unwrap();
    if sign > 0 {
        SignedTwist::positive(curve)
    } else {
        SignedTwist::negative(curve)
    }
}

fn word(s: Surface, letters: Vec<SignedTwist>) -> Factorization {
    Factorization::new(s, letters).unwrap()
}

/// The printed 18-letter first-handlebody monodromy.
fn mu1(s: Surface) -> Factorization {
    let mut letters = vec![tw(s, &[1, 0], -1), tw(s, &[0, 1], -1)];
    for _ in 0..4 {
        letters.push(tw(s, &[0, 1], 1));
        letters.push(tw(s, &[1, 0], 1));
    }
    for _ in 0..4 {
        letters.push(tw(s, &[1, 0], -1));
        letters.push(tw(s, &[0, 1], -1));
    }
    word(s, letters)
}

/// The printed two-letter second-handlebody monodromy.
fn mu2(s: Surface) -> Factorization {
    word(s, vec![tw(s, &[0, 1], 1), tw(s, &[1, 0], 1)])
}

fn ba_power(s: Surface, reps: usize) -> Factorization {
    let mut letters = Vec::new();
    for _ in 0..reps {
        letters.push(tw(s, &[0, 1], 1));
        letters.push(tw(s, &[1, 0], 1));
    }
    word(s, letters)
}

fn assert_e8_class(form: &mcalc::invariants::IntersectionForm, expected_signature: i64) {
    assert_eq!(form.b2, 8, "rank");
    assert!(form.even, "parity");
    assert_eq!(form.inertia.signature().abs(), 8);
    assert_eq!(form.inertia.signature(), expected_signature);
    assert_eq!(form.determinant.clone().abs(), Int::from(1), "unimodular");
    assert!(form.definiteness.is_definite(), "definiteness");
}

#[test]
fn criterion_1_e8_splitting_pipeline() {
    let s = torus();
    let mu1 = mu1(s);
    let mu2 = mu2(s);
    assert_eq!(mu1.len(), 18);
    assert_eq!(mu2.len(), 2);

    // the same words through the DSL, exactly as printed
    let doc = dsl::parse(
        "surface g=1 m=1\ncurve a = [1,0]\ncurve b = [0,1]\n\
         word mu1 = -a -b b a b a b a b a (-a -b)^4\nword mu2 = b a\n",
    )
    .unwrap();
    assert_eq!(doc.word("mu1").unwrap().factorization, mu1);
    assert_eq!(doc.word("mu2").unwrap().factorization, mu2);

    let total = mu1.concat(&mu2).unwrap();
    assert_eq!(total.len(), 20);
    let split = chiral_split(&total);
    assert_eq!(split.positive.len(), 10, "ten positive letters");
    assert_eq!(split.negative.len(), 10, "ten negative letters");

    let pos = fibration_report(&FibrationOverDisk::new(split.positive.clone()));
    assert_eq!(pos.euler, 9);
    assert!(pos.h1.is_trivial());
    assert_e8_class(pos.form.as_ref().unwrap(), -8);

    let neg = fibration_report(&FibrationOverDisk::new(split.negative.clone()));
    assert_eq!(
        neg.form.as_ref().unwrap().inertia.signature(),
        -pos.form.as_ref().unwrap().inertia.signature(),
        "mirrored signature"
    );
    assert_e8_class(neg.form.as_ref().unwrap(), 8);

    println!("criterion 1 (E8 splitting pipeline): PASS");
}

#[test]
fn criterion_2_closed_assembly() {
    let s = torus();
    let split = chiral_split(&mu1(s).concat(&mu2(s)).unwrap());
    let fa = FoldedAssembly::new(
        FibrationOverDisk::new(split.positive),
        FibrationOverDisk::new(split.negative),
    )
    .unwrap();
    let report = folded_invariants(&fa);
    assert_eq!(report.euler, 18);
    assert_eq!(report.signature, 0);
    assert!(report.h1.is_trivial());
    println!("criterion 2 (closed assembly, chi=18 sigma=0 H1=0): PASS");
}

#[test]
fn criterion_3_fold_three_manifold() {
    let s = torus();
    let ob = FibrationOverDisk::new(ba_power(s, 5)).boundary_open_book();
    let h1 = openbook_first_homology(&ob).unwrap();
    assert!(h1.is_empty(), "trivial first homology, got {h1:?}");
    println!("criterion 3 (fold is a homology sphere): PASS");
}

#[test]
fn criterion_4_surgery_bookkeeping() {
    let s = torus();
    // the four-letter model word
    let w = word(
        s,
        vec![
            tw(s, &[1, 0], -1),
            tw(s, &[0, 1], -1),
            tw(s, &[0, 1], 1),
            tw(s, &[1, 0], 1),
        ],
    );
    let split = chiral_split(&w);
    let fa = FoldedAssembly::new(
        FibrationOverDisk::new(split.positive),
        FibrationOverDisk::new(split.negative),
    )
    .unwrap();
    let sphere = folded_invariants(&fa);
    assert_eq!(sphere.euler, 2);
    assert_eq!(sphere.signature, 0);
    assert!(sphere.h1.is_trivial());
    let after = binding_surgery(&sphere, SurgeryDirection::CircleToSphere, None);
    assert_eq!(after.euler, 4);
    assert_eq!(after.signature, 0);

    // chi 18 -> 20 on the big assembly
    let split = chiral_split(&mu1(s).concat(&mu2(s)).unwrap());
    let fa = FoldedAssembly::new(
        FibrationOverDisk::new(split.positive),
        FibrationOverDisk::new(split.negative),
    )
    .unwrap();
    let big = folded_invariants(&fa);
    let after = binding_surgery(&big, SurgeryDirection::CircleToSphere, None);
    assert_eq!(big.euler, 18);
    assert_eq!(after.euler, 20);
    assert_eq!(after.signature, 0);
    println!("criterion 4 (surgery bookkeeping, chi 2->4 and 18->20): PASS");
}

#[test]
fn criterion_5_oracle_micro_fixtures() {
    let s = torus();
    let a1 = intersection_form(&FibrationOverDisk::new(word(
        s,
        vec![tw(s, &[1, 0], 1), tw(s, &[1, 0], 1)],
    )));
    assert_eq!(a1.gram, IntMatrix::from_i64_rows(&[&[-2]]));

    let cancel = intersection_form(&FibrationOverDisk::new(word(
        s,
        vec![tw(s, &[1, 0], 1), tw(s, &[1, 0], -1)],
    )));
    assert_eq!(cancel.gram, IntMatrix::from_i64_rows(&[&[0]]));

    let disk = Surface::new(0, 1);
    let fa = FoldedAssembly::new(
        FibrationOverDisk::new(Factorization::empty(disk)),
        FibrationOverDisk::new(Factorization::empty(disk)),
    )
    .unwrap();
    let report = folded_invariants(&fa);
    assert_eq!(report.euler, 2);
    assert_eq!(report.signature, 0);
    assert!(report.h1.is_trivial());
    println!("criterion 5 (oracle micro-fixtures): PASS");
}

// ---------------------------------------------------------------------
// criterion 6: randomized property suites, >= 200 trials each
// ---------------------------------------------------------------------

fn random_surface(rng: &mut impl Rng) -> Surface {
    loop {
        let s = Surface::new(rng.gen_range(0..=3), rng.gen_range(1..=2));
        if s.rank() > 0 {
            return s;
        }
    }
}

fn random_curve(rng: &mut impl Rng, s: Surface) -> CurveClass {
    loop {
        let coords: Vec<Int> = (0..s.rank())
            .map(|_| Int::from(rng.gen_range(-3i64..=3)))
            .collect();
        let gcd = coords.iter().fold(Int::zero(), |acc, c| {
            num_integer::Integer::gcd(&acc, &c.abs())
        });
        if gcd.is_zero() {
            continue;
        }
        let primitive: Vec<Int> = coords.iter().map(|c| c / gcd.clone()).collect();
        match CurveClass::new(s, primitive) {
            Ok(c) => return c,
            Err(SurfaceError::ZeroClass) => continue,
            Err(e) => panic!("unexpected: {e}"),
        }
    }
}

fn random_word(rng: &mut impl Rng, s: Surface, max_len: usize) -> Factorization {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| SignedTwist {
            curve: random_curve(rng, s),
            sign: if rng.gen_bool(0.5) {
                TwistSign::Positive
            } else {
                TwistSign::Negative
            },
        })
        .collect();
    Factorization::new(s, letters).unwrap()
}

#[test]
fn criterion_6a_hurwitz_moves_preserve_action() {
    let mut rng = ChaCha12Rng::seed_from_u64(0x6a);
    for _ in 0..TRIALS {
        let s = random_surface(&mut rng);
        let mut w = random_word(&mut rng, s, 12);
        while w.len() < 2 {
            w = random_word(&mut rng, s, 12);
        }
        let action = w.word_action();
        let mut current = w.clone();
        for _ in 0..rng.gen_range(1..=12) {
            let i = rng.gen_range(0..current.len() - 1);
            current = if rng.gen_bool(0.5) {
                current.hurwitz_left(i).unwrap()
            } else {
                current.hurwitz_right(i).unwrap()
            };
        }
        assert_eq!(current.word_action(), action);
    }
    println!("criterion 6a (Hurwitz moves preserve the action, {TRIALS} trials): PASS");
}

#[test]
fn criterion_6b_actions_preserve_pairing_and_are_unimodular() {
    let mut rng = ChaCha12Rng::seed_from_u64(0x6b);
    for _ in 0..TRIALS {
        let s = random_surface(&mut rng);
        let w = random_word(&mut rng, s, 12);
        let j = s.pairing_matrix();
        for m in w
            .letters()
            .iter()
            .map(|l| l.action())
            .chain(std::iter::once(w.word_action()))
        {
            let mt_j_m = &(&m.matrix().transpose() * &j) * m.matrix();
            assert_eq!(mt_j_m, j, "M^T J M = J violated");
            assert_eq!(
                m.matrix().determinant().unwrap().abs(),
                Int::from(1),
                "determinant must be +-1"
            );
        }
    }
    println!("criterion 6b (pairing preserved, det = +-1, {TRIALS} trials): PASS");
}

#[test]
fn criterion_6c_split_properties() {
    let mut rng = ChaCha12Rng::seed_from_u64(0x6c);
    for _ in 0..TRIALS {
        let s = random_surface(&mut rng);
        let w = random_word(&mut rng, s, 12);
        let split = chiral_split(&w);
        assert!(split.positive.is_all_positive());
        assert!(split.negative.is_all_negative());
        assert_eq!(split.positive.len(), w.positive_count());
        assert_eq!(split.negative.len(), w.negative_count());
        assert_eq!(split.sorted_word().word_action(), w.word_action());
        assert!(split.certificate.len() <= w.positive_count() * w.negative_count());
        let replayed = replay_certificate(&w, &split.certificate).unwrap();
        assert_eq!(replayed, split.sorted_word());
    }
    println!(
        "criterion 6c (split sorts, preserves action, certificate replays, {TRIALS} trials): PASS"
    );
}

#[test]
fn criterion_6d_reverse_inverse_doubles() {
    let mut rng = ChaCha12Rng::seed_from_u64(0x6d);
    for _ in 0..TRIALS {
        let s = random_surface(&mut rng);
        let mut letters = Vec::new();
        for _ in 0..rng.gen_range(0..=8) {
            letters.push(SignedTwist::positive(random_curve(&mut rng, s)));
        }
        let pos = Factorization::new(s, letters).unwrap();
        let neg = pos.reverse_inverse();
        let m = matches(
            &FibrationOverDisk::new(pos.clone()),
            &FibrationOverDisk::new(neg.clone()),
        )
        .unwrap();
        assert!(m.matched, "double must match");
        let fa = FoldedAssembly::new(
            FibrationOverDisk::new(pos.clone()),
            FibrationOverDisk::new(neg.clone()),
        )
        .unwrap();
        let report = folded_invariants(&fa);
        assert_eq!(report.signature, 0, "doubles have zero signature");
        assert_eq!(
            report.euler,
            2 * fibration_report(&FibrationOverDisk::new(pos)).euler,
            "chi additivity"
        );
    }
    println!("criterion 6d (doubles: sigma = 0, sides match, {TRIALS} trials): PASS");
}

#[test]
fn criterion_6e_snf_transforms() {
    let mut rng = ChaCha12Rng::seed_from_u64(0x6e);
    for _ in 0..TRIALS {
        let rows = rng.gen_range(1..=6);
        let cols = rng.gen_range(1..=6);
        let a: Matrix<Int> = Matrix::from_rows(
            (0..rows)
                .map(|_| {
                    (0..cols)
                        .map(|_| Int::from(rng.gen_range(-5i64..=5)))
                        .collect()
                })
                .collect(),
        );
        let snf = smith_normal_form(&a);
        assert!(snf.left_transform.is_unimodular());
        assert!(snf.right_transform.is_unimodular());
        let d = &(&snf.left_transform * &a) * &snf.right_transform;
        assert_eq!(d, snf.diagonal(rows, cols));
        let f = &snf.invariant_factors;
        for i in 0..f.len().saturating_sub(1) {
            if !f[i].is_zero() {
                assert!((f[i + 1].clone() % f[i].clone()).is_zero());
            } else {
                assert!(f[i + 1].is_zero());
            }
        }
    }
    println!("criterion 6e (SNF transforms unimodular and diagonalize, {TRIALS} trials): PASS");
}

#[test]
fn criterion_6f_signature_congruence_invariance() {
    let mut rng = ChaCha12Rng::seed_from_u64(0x6f);
    for _ in 0..TRIALS {
        let n = rng.gen_range(1..=6);
        let mut q: Matrix<Int> = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = Int::from(rng.gen_range(-4i64..=4));
                q[(i, j)] = v.clone();
                q[(j, i)] = v;
            }
        }
        let mut u: Matrix<Int> = Matrix::identity(n);
        for _ in 0..8 {
            let i = rng.gen_range(0..n);
            let j = rng.gen_range(0..n);
            if i != j {
                u.add_row_multiple(i, j, &Int::from(rng.gen_range(-2i64..=2)));
            }
            if rng.gen_bool(0.3) {
                let (r, s) = (rng.gen_range(0..n), rng.gen_range(0..n));
                u.swap_rows(r, s);
            }
        }
        assert!(u.is_unimodular());
        let conj = &(&u.transpose() * &q) * &u;
        assert_eq!(
            signature_symmetric(&q).unwrap(),
            signature_symmetric(&conj).unwrap()
        );
    }
    println!("criterion 6f (signature congruence-invariant, {TRIALS} trials): PASS");
}

#[test]
fn verify_paper_fixtures_all_pass() {
    for name in dsl::fixture_names() {
        let outcome = dsl::verify_paper(name).unwrap();
        for check in &outcome.checks {
            assert!(
                check.pass,
                "fixture {name}, key {}: expected {}, got {:?}",
                check.key, check.expected, check.actual
            );
        }
        println!("fixture {name}: PASS ({} checks)", outcome.checks.len());
    }
}

#[test]
fn chi_additivity_on_random_matching_assemblies() {
    // chi additivity for every assembly we can build from random doubles
    let mut rng = ChaCha12Rng::seed_from_u64(0xadd);
    for _ in 0..TRIALS {
        let s = random_surface(&mut rng);
        let mut letters = Vec::new();
        for _ in 0..rng.gen_range(0..=6) {
            letters.push(SignedTwist::positive(random_curve(&mut rng, s)));
        }
        let pos = Factorization::new(s, letters).unwrap();
        let neg = pos.reverse_inverse();
        let fa = FoldedAssembly::new(
            FibrationOverDisk::new(pos.clone()),
            FibrationOverDisk::new(neg.clone()),
        )
        .unwrap();
        let whole = folded_invariants(&fa);
        let p = fibration_report(&FibrationOverDisk::new(pos));
        let n = fibration_report(&FibrationOverDisk::new(neg));
        assert_eq!(whole.euler, p.euler + n.euler);
        assert_eq!(whole.signature, p.signature + n.signature);
    }
    println!("chi and sigma additivity ({TRIALS} trials): PASS");
}

#[test]
fn hurwitz_moves_preserve_the_intersection_form_class() {
    // the kernel-restricted form is an invariant of the fibration, so a
    // Hurwitz move must not change (inertia, |det|, parity)
    let mut rng = ChaCha12Rng::seed_from_u64(0xf0);
    for _ in 0..TRIALS {
        let s = random_surface(&mut rng);
        let mut w = random_word(&mut rng, s, 8);
        while w.len() < 2 {
            w = random_word(&mut rng, s, 8);
        }
        let before = intersection_form(&FibrationOverDisk::new(w.clone()));
        let i = rng.gen_range(0..w.len() - 1);
        let moved = w.hurwitz_left(i).unwrap();
        let after = intersection_form(&FibrationOverDisk::new(moved));
        assert_eq!(before.b2, after.b2);
        assert_eq!(before.inertia, after.inertia);
        assert_eq!(before.determinant.abs(), after.determinant.abs());
        assert_eq!(before.even, after.even);
    }
    println!("Hurwitz invariance of the intersection form class ({TRIALS} trials): PASS");
}

#[test]
fn homological_h1_is_hurwitz_invariant() {
    let mut rng = ChaCha12Rng::seed_from_u64(0xf1);
    for _ in 0..TRIALS {
        let s = random_surface(&mut rng);
        let mut w = random_word(&mut rng, s, 8);
        while w.len() < 2 {
            w = random_word(&mut rng, s, 8);
        }
        let f = FibrationOverDisk::new(w.clone());
        let i = rng.gen_range(0..w.len() - 1);
        let g = FibrationOverDisk::new(w.hurwitz_left(i).unwrap());
        assert_eq!(
            mcalc::invariants::fibration_first_homology(&f),
            mcalc::invariants::fibration_first_homology(&g)
        );
    }
    println!("Hurwitz invariance of fibration H1 ({TRIALS} trials): PASS");
}

#[test]
fn doubles_h1_sanity() {
    // identity-monodromy page doubles keep the page lattice
    for g in 1..=2 {
        let s = Surface::new(g, 1);
        let fa = FoldedAssembly::new(
            FibrationOverDisk::new(Factorization::empty(s)),
            FibrationOverDisk::new(Factorization::empty(s)),
        )
        .unwrap();
        let report = folded_invariants(&fa);
        assert_eq!(report.h1, HomologyClass::Known(vec![Int::zero(); 2 * g]));
    }
    println!("page-double H1 sanity: PASS");
}
