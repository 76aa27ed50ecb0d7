mod common;

use common::{random_combination, random_matrix};
use dialgebra::action::{dialgebra_semidirect, DialgebraAction};
use dialgebra::bracket::{check_bihom_leibniz, check_bihom_lie, lr_bracket, lr_bracket_conditions, BracketAlgebra, BracketKind};
use dialgebra::cohomology::{central_extension, coboundary, extension_isomorphism, BiHomModule, CochainPair};
use dialgebra::corpus::{corpus_build_in, corpus_list, Profile};
use dialgebra::dialgebra::{
    center, graph_is_subalgebra, is_morphism, left_annihilator_left, right_annihilator_right, transport,
};
use dialgebra::fleet::{identity_matrix_algebra, regular_fleet, unit_algebra};
use dialgebra::format::{parse_dialgebra, write_dialgebra};
use dialgebra::linalg::{invert, nullspace, solve};
use dialgebra::operators::{
    bimodule_dialgebra, centroid_dialgebra_from_associative, yau_twist, BiHomBimodule,
};
use dialgebra::scalar::{qi, Gf2, Gf3, Scalar, Q};
use dialgebra::{
    check_axioms, check_morphism, direct_sum, is_ideal, quotient, Dialgebra, Matrix, Side, Subspace, Tensor3,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn valid_corpus<S: Scalar>() -> Vec<Dialgebra<S>> {
    corpus_list()
        .iter()
        .map(|e| corpus_build_in::<S>(e.id, Profile::Default).unwrap())
        .filter(|d| check_axioms(d).passed())
        .collect()
}

#[test]
fn alg3_by_hand_matches_transcription() {
    for (a, b, c, d) in [(1, 1, 1, 1), (2, 3, 5, 7)] {
        let mut l = Tensor3::square(2);
        let mut r = Tensor3::square(2);
        l.set(0, 1, 0, qi(a));
        r.set(0, 1, 0, qi(b));
        r.set(1, 0, 0, qi(c));
        r.set(1, 1, 0, qi(d));
        let m = Matrix::from_rows(vec![vec![qi(0), qi(1)], vec![qi(0), qi(0)]]);
        let hand = Dialgebra::new("alg3", l, r, m.clone(), m).unwrap();
        let params = [("a", a), ("b", b), ("c", c), ("d", d)].into_iter().map(|(k, v)| (k.to_string(), qi(v))).collect();
        let built = dialgebra::corpus::corpus_build("dim2/Alg3", &params).unwrap();
        assert_eq!(built.left(), hand.left());
        assert_eq!(built.right(), hand.right());
        assert_eq!(built.alpha(), hand.alpha());
        assert!(check_axioms(&hand).passed());
    }
}

#[test]
fn structure_maps_are_morphisms() {
    for d in valid_corpus::<Q>() {
        assert!(is_morphism(d.alpha(), &d, &d), "{}", d.label());
        assert!(is_morphism(d.beta(), &d, &d), "{}", d.label());
    }
}

#[test]
fn obvious_and_kernel_ideals() {
    for d in valid_corpus::<Q>() {
        let n = d.dim();
        assert!(is_ideal(&Subspace::zero(n), &d, Side::TwoSided));
        assert!(is_ideal(&Subspace::full(n), &d, Side::TwoSided));
        let k = Subspace::kernel(d.alpha());
        assert!(is_ideal(&k, &d, Side::TwoSided), "{}", d.label());
    }
}

fn ideal_candidates(d: &Dialgebra<Q>) -> Vec<Subspace<Q>> {
    let n = d.dim();
    let mut out = vec![
        Subspace::kernel(d.alpha()),
        Subspace::image(d.alpha()),
        Subspace::image(&d.alpha().mul(d.beta())),
        left_annihilator_left(d),
        right_annihilator_right(d),
        center(d),
    ];
    for i in 0..n {
        for j in i..n {
            let e = |k: usize| (0..n).map(|t| if t == k { qi(1) } else { qi(0) }).collect::<Vec<_>>();
            out.push(Subspace::span(n, &[e(i), e(j)]));
        }
    }
    out
}

#[test]
fn quotients_by_ideals_pass() {
    let mut seen = 0;
    for d in valid_corpus::<Q>() {
        for i in ideal_candidates(&d) {
            if is_ideal(&i, &d, Side::TwoSided) {
                let qd = quotient(&d, &i).unwrap();
                assert_eq!(qd.dim(), d.dim() - i.dim());
                assert!(check_axioms(&qd).passed(), "{}", d.label());
                seen += 1;
            }
        }
    }
    assert!(seen > 20);
}

#[test]
fn graph_subalgebra_iff_morphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let algebras = valid_corpus::<Gf2>();
    let mut hits = 0;
    for a in &algebras {
        for b in &algebras {
            for _ in 0..20 {
                let xi = random_matrix(&mut rng, b.dim(), a.dim());
                let morphism = check_morphism(&xi, a, b).unwrap().passed();
                assert_eq!(graph_is_subalgebra(&xi, a, b).unwrap(), morphism);
                hits += morphism as usize;
            }
            let zero = Matrix::zeros(b.dim(), a.dim());
            assert!(graph_is_subalgebra(&zero, a, b).unwrap());
        }
        assert!(graph_is_subalgebra(a.alpha(), a, a).unwrap());
    }
    assert!(hits > 0);
}

#[test]
fn power_twists_shift_the_maps() {
    for d in valid_corpus::<Q>() {
        for k in 1..=3u32 {
            let (ak, bk) = (d.alpha().pow(k), d.beta().pow(k));
            let tw = yau_twist(&d, &ak, &bk).unwrap();
            assert_eq!(tw.alpha(), &d.alpha().pow(k + 1));
            assert_eq!(tw.beta(), &d.beta().pow(k + 1));
            let n = d.dim();
            for i in 0..n {
                for j in 0..n {
                    let x = ak.column(i);
                    let y = bk.column(j);
                    assert_eq!(tw.left().row(i, j), d.left().contract(&x, &y).as_slice());
                }
            }
        }
    }
}

#[test]
fn untwist_roundtrip() {
    for d in regular_fleet::<Q>(3).unwrap() {
        let (ai, bi) = (invert(d.alpha()).unwrap(), invert(d.beta()).unwrap());
        let plain = yau_twist(&d, &ai, &bi).unwrap();
        assert!(plain.alpha().is_identity() && plain.beta().is_identity());
        let back = yau_twist(&plain, d.alpha(), d.beta()).unwrap();
        assert_eq!(back.left(), d.left());
        assert_eq!(back.right(), d.right());
        assert_eq!(back.alpha(), d.alpha());
        assert_eq!(back.beta(), d.beta());
    }
}

#[test]
fn two_dimensional_leibniz_example() {
    for (a, b) in [(1, 1), (2, -3)] {
        let mut t = Tensor3::square(2);
        t.set(0, 1, 0, qi(a));
        t.set(1, 1, 0, qi(b));
        let m = Matrix::from_rows(vec![vec![qi(0), qi(1)], vec![qi(0), qi(0)]]);
        let l = BracketAlgebra::new("L2", BracketKind::Leibniz, t, m.clone(), m).unwrap();
        assert!(check_bihom_leibniz(&l).passed());
    }
}

#[test]
fn lr_conditions_are_sufficient_but_not_necessary() {
    let mut outcomes = Vec::new();
    for d in regular_fleet::<Gf3>(3).unwrap() {
        let cond = lr_bracket_conditions(&d).unwrap();
        let lie = check_bihom_lie(&lr_bracket(&d).unwrap()).passed();
        if cond {
            assert!(lie, "{}", d.label());
        }
        outcomes.push((d.label().to_string(), cond, lie));
    }
    let has = |c: bool, l: bool| outcomes.iter().any(|o| o.1 == c && o.2 == l);
    assert!(has(true, true));
    // M2(T2perm) breaks both sides.
    assert!(outcomes.iter().any(|o| o.0 == "M2(T2perm)" && !o.1 && !o.2));
    // T2perm itself breaks (dil1) yet its bracket is BiHom-Lie.
    assert!(outcomes.iter().any(|o| o.0 == "T2perm" && !o.1 && o.2));
}

#[test]
fn trivial_action_gives_direct_sum() {
    let l = identity_matrix_algebra::<Q>(2).unwrap();
    for d in regular_fleet::<Q>(2).unwrap() {
        let act = DialgebraAction::trivial(l.clone(), d.clone()).unwrap();
        let semi = dialgebra_semidirect(&act).unwrap();
        let sum = direct_sum(&l, &d);
        assert_eq!(semi.left(), sum.left());
        assert_eq!(semi.right(), sum.right());
        assert_eq!(semi.alpha(), sum.alpha());
    }
}

#[test]
fn coboundary_extension_is_trivial() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let module = BiHomModule::new(Matrix::zeros(1, 1), Matrix::zeros(1, 1)).unwrap();
    for d in valid_corpus::<Gf3>() {
        let n = d.dim();
        // ν must kill Im α + Im β to intertwine with the zero module maps.
        let cols: Vec<Vec<Gf3>> = (0..n)
            .map(|c| {
                let mut v = d.alpha().row(c).to_vec();
                v.extend(d.beta().row(c).iter().cloned());
                v
            })
            .collect();
        let inter = nullspace(&Matrix::from_columns(2 * n, &cols));
        for _ in 0..5 {
            let v = random_combination(&mut rng, &inter, n);
            let nu = Matrix::from_fn(1, n, |_, j| v[j]);
            let trivial = central_extension(&d, &module, &CochainPair::zero(n, 1)).unwrap();
            let ext = central_extension(&d, &module, &coboundary(&nu, &d).unwrap()).unwrap();
            assert!(check_axioms(&ext).passed());
            assert!(check_morphism(&extension_isomorphism(&nu), &trivial, &ext).unwrap().passed());
        }
    }
}

#[test]
fn centroid_bimodule_remark() {
    // The sliding identities force θ(x)·y = θ(x)·θ(y), so central idempotents.
    let m2 = identity_matrix_algebra::<Q>(2).unwrap();
    let sum = direct_sum(&m2, &unit_algebra());
    let cases = [
        (m2.clone(), Matrix::identity(4)),
        (sum.clone(), Matrix::diagonal(&[qi(1), qi(1), qi(1), qi(1), qi(0)])),
        (sum, Matrix::diagonal(&[qi(0), qi(0), qi(0), qi(0), qi(1)])),
        (transport(&m2, &Matrix::diagonal(&[qi(1), qi(2), qi(3), qi(1)])).unwrap(), Matrix::identity(4)),
    ];
    for (a, theta) in cases {
        let module = BiHomBimodule::regular(&a).unwrap();
        let via_module = bimodule_dialgebra(&a, &module, &theta).unwrap();
        let direct = centroid_dialgebra_from_associative(&a, &theta).unwrap();
        assert_eq!(via_module.left(), direct.left());
        assert_eq!(via_module.right(), direct.right());
        assert!(check_axioms(&via_module).passed());
    }
}

#[test]
fn text_format_roundtrip() {
    for e in corpus_list() {
        for profile in Profile::ALL {
            let d = e.build_profile(profile).unwrap();
            let back = parse_dialgebra(&write_dialgebra(&d)).unwrap();
            assert_eq!(back.left(), d.left());
            assert_eq!(back.right(), d.right());
            assert_eq!(back.alpha(), d.alpha());
            assert_eq!(back.beta(), d.beta());
        }
    }
}

fn q_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Q>> {
    proptest::collection::vec(-3i64..=3, rows * cols)
        .prop_map(move |v| Matrix::from_fn(rows, cols, |i, j| qi(v[i * cols + j])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(m in q_matrix(3, 5)) {
        let ns = nullspace(&m);
        prop_assert_eq!(m.rank() + ns.len(), 5);
        for v in &ns {
            prop_assert!(m.apply(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn solve_recovers_consistent_systems(m in q_matrix(4, 3), x in proptest::collection::vec(-4i64..=4, 3)) {
        let x: Vec<Q> = x.into_iter().map(qi).collect();
        let b = m.apply(&x);
        let sol = solve(&m, &b).unwrap().expect("consistent");
        prop_assert_eq!(m.apply(&sol), b);
    }

    #[test]
    fn inverse_is_two_sided(m in q_matrix(3, 3)) {
        match invert(&m) {
            Ok(inv) => {
                prop_assert!(m.mul(&inv).is_identity());
                prop_assert!(inv.mul(&m).is_identity());
            }
            Err(_) => prop_assert!(m.rank() < 3),
        }
    }

    #[test]
    fn transport_is_an_isomorphism(entry in 0usize..10, s in q_matrix(3, 3)) {
        let d = &valid_corpus::<Q>()[entry];
        let n = d.dim();
        let sigma = Matrix::from_fn(n, n, |i, j| s.get(i, j).clone() + if i == j { qi(7) } else { qi(0) });
        prop_assume!(invert(&sigma).is_ok());
        let t = transport(d, &sigma).unwrap();
        prop_assert!(check_morphism(&sigma, d, &t).unwrap().passed());
        prop_assert!(check_axioms(&t).passed());
    }
}
