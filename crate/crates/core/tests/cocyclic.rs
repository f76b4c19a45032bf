use hopfgal::actions::examples::{gaussian, graded, swap, trivial_c2};
use hopfgal::actions::{HopfModule, ModuleAlgebra};
use hopfgal::cocyclic::{
    bar_complex, bar_shift_check, comodule_to_module, group_like, module_to_comodule,
    t_shift_check, AydModule, Bounds, Comodule, ComoduleAlgebra, CyclicModule, RelativeHopfModule,
    SmashModule,
};
use hopfgal::hopf::builtins::{group_algebra, sweedler};
use hopfgal::hopf::groups::cyclic;
use hopfgal::hopf::HopfAlgebra;
use hopfgal::linalg::{Domain, Scalar};
use hopfgal::Error;
use proptest::prelude::*;

fn q() -> Domain {
    Domain::Rational
}

fn ints(d: Domain, v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| d.from_i64(x)).collect()
}

fn c2(d: Domain) -> HopfAlgebra {
    group_algebra(&cyclic(2), d, None).unwrap()
}

/// `K ⊕ Kx`, `x² = c`, graded by `C2` as a comodule algebra over `KC2`.
fn graded_comodule(d: Domain, c: i64) -> ComoduleAlgebra {
    ComoduleAlgebra::from_module_algebra(&graded(d, d.from_i64(c)).unwrap()).unwrap()
}

#[test]
fn dictionary_roundtrips() {
    let modules = [
        gaussian(q()).unwrap().module().clone(),
        HopfModule::regular(sweedler(q()).unwrap()),
        swap(Domain::prime(3).unwrap()).unwrap().module().clone(),
    ];
    for m in modules {
        let c = module_to_comodule(&m).unwrap();
        assert!(c.verify().all_passed());
        let back = comodule_to_module(&c).unwrap();
        assert!(back.hopf().same_structure(m.hopf()));
        assert_eq!(back.actions(), m.actions());
    }
}

#[test]
fn regular_module_gives_multiplication_coaction() {
    // ρ(e_m) = Σ_i (e_i e_m) ⊗ e_i*, so the coefficient of e_k ⊗ e_i* is μ(i, m)_k
    let h = sweedler(q()).unwrap();
    let c = module_to_comodule(&HopfModule::regular(h.clone())).unwrap();
    let n = h.dim();
    for m in 0..n {
        let mut expected = Vec::new();
        for i in 0..n {
            let prod = h.mul(&h.basis_vector(i), &h.basis_vector(m));
            for (k, coef) in prod.into_iter().enumerate() {
                if !coef.is_zero() {
                    expected.push((k, i, coef));
                }
            }
        }
        let mut terms = c.terms(m);
        terms.sort_by_key(|t| (t.0, t.1));
        expected.sort_by_key(|t| (t.0, t.1));
        assert_eq!(terms, expected, "m = {m}");
    }
}

#[test]
fn trivial_module_gives_trivial_coaction() {
    let h = c2(q());
    let c = module_to_comodule(&HopfModule::trivial(h.clone(), 1)).unwrap();
    let dual = h.dual().unwrap();
    // 1_{H*} = δ_1 + δ_σ
    assert_eq!(c.coaction().column(0), dual.algebra().unit().to_vec());
    let back = comodule_to_module(&Comodule::trivial(h.clone(), 2)).unwrap();
    assert_eq!(back.actions(), HopfModule::trivial(dual, 2).actions());
}

#[test]
fn grading_coaction_gives_projections() {
    let s = graded_comodule(q(), 1);
    let m = comodule_to_module(s.comodule()).unwrap();
    assert_eq!(m.hopf().labels(), ["δ_1", "δ_σ"]);
    assert_eq!(m.action(0).column(0), ints(q(), &[1, 0]));
    assert_eq!(m.action(0).column(1), ints(q(), &[0, 0]));
    assert_eq!(m.action(1).column(1), ints(q(), &[0, 1]));
}

#[test]
fn coinvariants() {
    let s = graded_comodule(q(), 1);
    assert_eq!(s.coinvariants().unwrap().basis(), &[ints(q(), &[1, 0])]);
    assert_eq!(
        Comodule::trivial(c2(q()), 3).coinvariants().unwrap().dim(),
        3
    );
    // ρ(z) = z ⊗ 1 inside Δ forces z ∈ K·1
    let regular = Comodule::regular(c2(q()));
    assert_eq!(
        regular.coinvariants().unwrap().basis(),
        &[ints(q(), &[1, 0])]
    );
}

#[test]
fn comodule_homology() {
    let h = c2(q());
    assert_eq!(
        Comodule::regular(h.clone())
            .hopfological_homology()
            .unwrap()
            .homology_dim,
        0
    );
    let f2 = Domain::prime(2).unwrap();
    let dual = c2(f2).dual().unwrap();
    assert_eq!(
        Comodule::trivial(dual, 1)
            .hopfological_homology()
            .unwrap()
            .homology_dim,
        1
    );
    assert_eq!(
        Comodule::trivial(h, 0)
            .hopfological_homology()
            .unwrap()
            .homology_dim,
        0
    );
}

#[test]
fn invalid_coactions_are_rejected() {
    let h = c2(q());
    assert!(matches!(
        Comodule::from_triples(h.clone(), 1, Vec::new()),
        Err(Error::Axiom(_))
    ));
    // ρ(m) = m ⊗ 1 + m ⊗ σ breaks the counit
    let two = vec![(0, 0, 0, q().one()), (0, 0, 1, q().one())];
    assert!(matches!(
        Comodule::from_triples(h, 1, two),
        Err(Error::Axiom(_))
    ));
}

#[test]
fn ayd_checks() {
    let h = c2(q());
    let gl = group_like(&h, false).unwrap();
    assert!(gl.ayd_check().unwrap().passed);
    assert!(gl.stability_check().unwrap().passed);
    let point = AydModule::new(
        HopfModule::trivial(h.clone(), 1),
        Comodule::trivial(h.clone(), 1),
    )
    .unwrap();
    assert!(point.is_stable_ayd().unwrap());
    let swapped = group_like(&h, true).unwrap().ayd_check().unwrap();
    assert!(!swapped.passed);
    assert_eq!(swapped.witness, Some(vec![1, 0]));
}

#[test]
fn cotensor_of_one_slot() {
    let s = graded_comodule(q(), 1);
    let h = s.hopf().clone();
    let point = AydModule::new(
        HopfModule::trivial(h.clone(), 1),
        Comodule::trivial(h.clone(), 1),
    )
    .unwrap();
    let t = CyclicModule::new(s.clone(), point, Bounds::default()).unwrap();
    assert_eq!(t.cotensor(0).unwrap().basis(), &[ints(q(), &[1, 0])]);
    // index a·2 + g: span{1⊗e, x⊗σ}
    let t = CyclicModule::new(s, group_like(&h, false).unwrap(), Bounds::default()).unwrap();
    assert_eq!(
        t.cotensor(0).unwrap().basis(),
        &[ints(q(), &[1, 0, 0, 0]), ints(q(), &[0, 0, 0, 1])]
    );
    assert_eq!(t.format_basis(0, 3), "[x]m1");
}

#[test]
fn cyclic_identities_for_stable_coefficients() {
    for d in [q(), Domain::prime(3).unwrap()] {
        let s = graded_comodule(d, 1);
        let h = s.hopf().clone();
        let t = CyclicModule::new(s, group_like(&h, false).unwrap(), Bounds::default()).unwrap();
        for n in 0..=3 {
            let c = t.check_level(n).unwrap();
            assert!(
                c.simplicial.passed && c.face_cyclic.passed && c.cyclicity.passed,
                "{c:?}"
            );
            assert_eq!(c.dim, 2usize.pow(n as u32 + 1) * 2);
            let level = t.level(n).unwrap();
            for s in &level.degeneracies {
                assert_eq!(s.rank().unwrap(), s.cols());
            }
        }
    }
}

#[test]
fn cyclicity_fails_without_ayd() {
    let s = graded_comodule(q(), 1);
    let h = s.hopf().clone();
    let t = CyclicModule::new(s, group_like(&h, true).unwrap(), Bounds::default()).unwrap();
    for n in 0..=2 {
        let c = t.check_level(n).unwrap();
        assert!(c.simplicial.passed && c.face_cyclic.passed);
        assert!(!c.cyclicity.passed);
        assert!(c.cyclicity.failure.is_some());
    }
}

#[test]
fn level_bound_is_enforced() {
    let s = graded_comodule(q(), 1);
    let h = s.hopf().clone();
    let bounds = Bounds {
        max_level: 2,
        ..Bounds::default()
    };
    let t = CyclicModule::new(s.clone(), group_like(&h, false).unwrap(), bounds).unwrap();
    assert!(matches!(t.check_level(3), Err(Error::Resource(_))));
    let tiny = Bounds {
        max_dim: 10,
        ..Bounds::default()
    };
    let t = CyclicModule::new(s, group_like(&h, false).unwrap(), tiny).unwrap();
    assert!(matches!(t.check_level(2), Err(Error::Resource(_))));
}

#[test]
fn hochschild_complex_squares_to_zero() {
    let s = graded_comodule(q(), 1);
    let h = s.hopf().clone();
    let t = CyclicModule::new(s, group_like(&h, false).unwrap(), Bounds::default()).unwrap();
    assert!(t.hochschild_complex(3).unwrap().square_zero());
}

#[test]
fn bar_complex_of_free_module() {
    let ma = gaussian(q()).unwrap();
    let m = SmashModule::base(&ma);
    let b = bar_complex(ma.algebra(), m.s_action(), 4, &Bounds::default()).unwrap();
    assert!(b.square_zero());
    assert_eq!(b.dims(), [2, 4, 8, 16, 32]);
    // b_1(s ⊗ m) = −s·m is onto, and the extra degeneracy kills the rest
    assert_eq!(b.homology_dims().unwrap(), [0, 0, 0, 0]);
}

#[test]
fn morita_decomposition() {
    let ma = gaussian(q()).unwrap();
    let base = SmashModule::base(&ma);
    let regular = SmashModule::regular(&ma).unwrap();
    let sum = base.direct_sum(&regular).unwrap();
    for (m, dim, fixed) in [(&regular, 4, 2), (&base, 2, 1), (&sum, 6, 3)] {
        assert!(m.verify().all_passed());
        let r = m.morita_decomposition().unwrap();
        assert_eq!((r.dim_m, r.fixed_dim), (dim, fixed));
        assert!(r.bijective);
        assert_eq!(r.dim_m, r.dim_s * r.fixed_dim);
    }
    assert_eq!(base.fixed_points().unwrap().basis(), &[ints(q(), &[1, 0])]);
}

#[test]
fn morita_needs_hopf_galois() {
    let s = gaussian(q()).unwrap().algebra().clone();
    let ma = trivial_c2(q(), s).unwrap();
    let m = SmashModule::base(&ma);
    assert!(matches!(
        m.morita_decomposition(),
        Err(Error::Precondition(_))
    ));
    assert!(matches!(
        bar_shift_check(&m, 2, &Bounds::default()),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn bar_shift() {
    let ma = gaussian(q()).unwrap();
    let base = SmashModule::base(&ma);
    let regular = SmashModule::regular(&ma).unwrap();
    let sum = base.direct_sum(&regular).unwrap();
    for (m, dm) in [(&base, 2usize), (&regular, 4), (&sum, 6)] {
        let r = bar_shift_check(m, 4, &Bounds::default()).unwrap();
        assert!(r.passed());
        let dims: Vec<usize> = r.rows.iter().map(|row| row.dim).collect();
        let expected: Vec<usize> = (0..=4).map(|n| 2usize.pow(n) * dm).collect();
        assert_eq!(dims, expected);
        let shifted: Vec<usize> = r.rows.iter().map(|row| row.shifted_dim).collect();
        assert_eq!(shifted, expected);
        assert_eq!(r.rows[0].differential_compatible, None);
    }
}

#[test]
fn t_shift() {
    let s = graded_comodule(q(), 1);
    let base = RelativeHopfModule::base(&s);
    assert!(base.verify().all_passed());
    let r = t_shift_check(&base, 3, &Bounds::default()).unwrap();
    assert!(r.passed());
    assert_eq!((r.dim_m, r.coinvariants_dim), (2, 1));
    assert!(r.faithfully_flat);
    let cofree = RelativeHopfModule::cofree(&s, 2).unwrap();
    assert!(cofree.verify().all_passed());
    let r = t_shift_check(&cofree, 3, &Bounds::default()).unwrap();
    assert!(r.passed());
    assert_eq!((r.dim_m, r.coinvariants_dim), (4, 2));
    let dims: Vec<usize> = r.rows.iter().map(|row| row.dim).collect();
    assert_eq!(dims, [8, 16, 32, 64]);
}

#[test]
fn t_shift_rejects_degenerate_grading() {
    let s = graded_comodule(q(), 0);
    let m = RelativeHopfModule::base(&s);
    match t_shift_check(&m, 2, &Bounds::default()) {
        Err(Error::Precondition(msg)) => assert!(msg.contains("rank 3"), "{msg}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn comodule_algebra_from_modules() {
    let s = graded_comodule(q(), 1);
    assert!(s.converted());
    assert!(s.verify().all_passed());
    let ma: ModuleAlgebra = gaussian(q()).unwrap();
    let c = ComoduleAlgebra::from_module_algebra(&ma).unwrap();
    assert!(c.verify().all_passed());
    assert_eq!(c.galois_map().rank().unwrap(), 4);
}

/// Independent coassociativity and counit check for a coaction over `KC2`
/// with integer coefficients: `Δg = g⊗g`, `ε(g) = 1`.
fn is_kc2_comodule(dim: usize, coef: &[i64]) -> bool {
    let c = |m: usize, mp: usize, h: usize| coef[(m * dim + mp) * 2 + h];
    for m in 0..dim {
        for mpp in 0..dim {
            if (0..2).map(|h| c(m, mpp, h)).sum::<i64>() != i64::from(m == mpp) {
                return false;
            }
            for k in 0..2 {
                for h in 0..2 {
                    let lhs: i64 = (0..dim).map(|mp| c(m, mp, h) * c(mp, mpp, k)).sum();
                    let rhs = if h == k { c(m, mpp, h) } else { 0 };
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

proptest! {
    #[test]
    fn random_coactions(coef in proptest::collection::vec(-1i64..=1, 8)) {
        let dim = 2;
        let h = c2(q());
        let mut triples = Vec::new();
        for m in 0..dim {
            for mp in 0..dim {
                for g in 0..2 {
                    let v = coef[(m * dim + mp) * 2 + g];
                    if v != 0 {
                        triples.push((m, mp, g, q().from_i64(v)));
                    }
                }
            }
        }
        let built = Comodule::from_triples(h, dim, triples);
        prop_assert_eq!(built.is_ok(), is_kc2_comodule(dim, &coef));
        if let Err(e) = built {
            prop_assert!(matches!(e, Error::Axiom(_)));
        }
    }

    #[test]
    fn dictionary_roundtrip_on_random_gradings(grades in proptest::collection::vec(0usize..2, 1..4)) {
        // V graded by C2: ρ(e_m) = e_m ⊗ g_m
        let h = c2(q());
        let triples = grades.iter().enumerate().map(|(m, &g)| (m, m, g, q().one()));
        let c = Comodule::from_triples(h, grades.len(), triples).unwrap();
        let back = module_to_comodule(&comodule_to_module(&c).unwrap()).unwrap();
        prop_assert!(back.hopf().same_structure(c.hopf()));
        prop_assert_eq!(back.coaction(), c.coaction());
    }
}
