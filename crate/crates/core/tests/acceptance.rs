//! Acceptance suite. Each criterion prints one pass/fail line; the test
//! fails if any criterion does.

use hopfgal::actions::examples::{
    eisenstein, frobenius_f4, gaussian, graded, swap, truncated_derivation,
};
use hopfgal::actions::{HopfModule, ModuleAlgebra, TotalIntegral};
use hopfgal::cocyclic::{
    bar_complex, bar_shift_check, comodule_to_module, group_like, module_to_comodule,
    t_shift_check, Bounds, ComoduleAlgebra, CyclicModule, RelativeHopfModule, SmashModule,
};
use hopfgal::hopf::builtins::{group_algebra, sweedler, taft, trivial, truncated_primitive};
use hopfgal::hopf::groups::{cyclic, small_groups};
use hopfgal::hopf::HopfAlgebra;
use hopfgal::lattices::examples::{
    eisenstein_integers, gaussian_integers, group_ring_c2, half_trace_order,
};
use hopfgal::lattices::{
    associated_order, free_rank_one_generator, tame_check_integral, Lattice, ModuleLattice, Order,
};
use hopfgal::linalg::{Domain, Scalar, Subspace, Vector};
use hopfgal::Error;
use num_rational::BigRational;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Debug>(r: std::result::Result<T, E>) -> Result<T, String> {
    r.map_err(|e| format!("{e:?}"))
}

fn q() -> Domain {
    Domain::Rational
}

fn fp(p: u64) -> Domain {
    Domain::prime(p).unwrap()
}

fn c2(d: Domain) -> HopfAlgebra {
    group_algebra(&cyclic(2), d, None).unwrap()
}

fn ints(v: &[i64]) -> Vector {
    v.iter().map(|&x| q().from_i64(x)).collect()
}

fn frac(n: i64, d: i64) -> Scalar {
    Scalar::Rational(BigRational::new(n.into(), d.into()))
}

/// `hλ = ε(h)λ` on every basis element, and the mirror condition.
fn integral_oracle(h: &HopfAlgebra, lambda: &[Scalar], left: bool) -> bool {
    (0..h.dim()).all(|i| {
        let e = h.basis_vector(i);
        let prod = if left {
            h.mul(&e, lambda)
        } else {
            h.mul(lambda, &e)
        };
        let eps = h.counit_of(&e);
        prod == lambda.iter().map(|x| x * &eps).collect::<Vector>()
    })
}

fn larson_sweedler() -> Outcome {
    let instances = [
        ("ℚC2", c2(q())),
        ("𝔽2C2", c2(fp(2))),
        ("(ℚC2)*", ok(c2(q()).dual())?),
        ("sweedler(ℚ)", ok(sweedler(q()))?),
        ("sweedler(𝔽5)", ok(sweedler(fp(5)))?),
        ("taft(3, 2, 𝔽7)", ok(taft(3, &fp(7).from_i64(2)))?),
    ];
    for (name, h) in &instances {
        let left = ok(h.left_integrals())?;
        let right = ok(h.right_integrals())?;
        ensure!(
            left.basis.len() == 1 && right.basis.len() == 1,
            "{name}: integral dimensions"
        );
        ensure!(
            integral_oracle(h, left.generator(), true),
            "{name}: left integral"
        );
        ensure!(
            integral_oracle(h, right.generator(), false),
            "{name}: right integral"
        );
    }
    // basis 1, g, x, gx
    let s = ok(sweedler(q()))?;
    let expected = ok(Subspace::span(q(), 4, &[ints(&[0, 0, 1, 1])]))?;
    let left = ok(s.left_integrals())?;
    ensure!(
        ok(Subspace::span(q(), 4, &left.basis))? == expected,
        "sweedler integral {}",
        s.format_vector(left.generator())
    );
    Ok(())
}

fn field_case_equivalence() -> Outcome {
    for (name, ma) in [
        ("𝔽4/𝔽2", ok(frobenius_f4())?),
        ("𝔽2[t]/(t²)", ok(truncated_derivation(fp(2)))?),
    ] {
        let r = ok(ma.classify())?;
        ensure!(
            r.tame && r.hopf_galois,
            "{name}: {}",
            r.classification.as_str()
        );
        ensure!(r.homology_dim == 0, "{name}: homology {}", r.homology_dim);
        ensure!(r.j_bijective && r.gamma_bijective, "{name}: Galois maps");
        ensure!(
            r.equivalence_holds == Some(true),
            "{name}: verdicts disagree"
        );
    }
    // every field instance where the equivalence applies
    for ma in field_instances()? {
        let r = ok(ma.classify())?;
        if r.equivalence_applies {
            ensure!(
                r.tame == r.hopf_galois && r.tame == (r.homology_dim == 0),
                "verdicts disagree on {:?}",
                ma.algebra().labels()
            );
        }
    }
    Ok(())
}

fn field_instances() -> Result<Vec<ModuleAlgebra>, String> {
    let mut out = vec![
        ok(frobenius_f4())?,
        ok(truncated_derivation(fp(2)))?,
        ok(truncated_derivation(fp(3)))?,
    ];
    for d in [q(), fp(3), fp(5)] {
        out.push(ok(gaussian(d))?);
        out.push(ok(eisenstein(d))?);
        out.push(ok(swap(d))?);
        out.push(ok(graded(d, d.one()))?);
        out.push(ok(graded(d, d.zero()))?);
    }
    out.push(ok(gaussian(fp(2)))?);
    Ok(out)
}

fn lattice_instances() -> Result<Vec<(Order, ModuleLattice)>, String> {
    let zi = ok(gaussian_integers())?;
    let z3 = ok(eisenstein_integers())?;
    Ok(vec![
        (ok(group_ring_c2())?, zi.clone()),
        (ok(group_ring_c2())?, z3.clone()),
        (ok(half_trace_order())?, zi.clone()),
        (ok(associated_order(&zi))?, zi),
        (ok(associated_order(&z3))?, z3),
    ])
}

fn integral_tameness() -> Outcome {
    let zc2 = ok(group_ring_c2())?;
    let wild = ok(tame_check_integral(&zc2, &ok(gaussian_integers())?))?;
    ensure!(
        !wild.tame && wild.invariant_factors == ["2"],
        "ℤ[i]: {wild:?}"
    );
    let tame = ok(tame_check_integral(&zc2, &ok(eisenstein_integers())?))?;
    ensure!(
        tame.tame && tame.invariant_factors.is_empty(),
        "ℤ[ζ3]: {tame:?}"
    );
    for (o, s) in lattice_instances()? {
        let t = ok(tame_check_integral(&o, &s))?;
        ensure!(
            t.hypotheses_hold,
            "hypotheses fail on {:?}",
            o.format_basis()
        );
        ensure!(
            t.tame == t.invariant_factors.is_empty(),
            "tame verdict disagrees with the factors on {:?}",
            o.format_basis()
        );
    }
    Ok(())
}

fn associated_order_pipeline() -> Outcome {
    let zi = ok(gaussian_integers())?;
    let order = ok(associated_order(&zi))?;
    // a + bσ preserves ℤ[i] iff a ± b ∈ ℤ; Hermite basis (1/2, 1/2), (0, 1)
    let hand = vec![vec![frac(1, 2), frac(1, 2)], ints(&[0, 1])];
    ensure!(
        order.lattice().basis() == hand.as_slice(),
        "basis {:?}",
        order.format_basis()
    );
    let span = ok(Lattice::from_generators(
        2,
        &[ints(&[1, 0]), vec![frac(1, 2), frac(1, 2)]],
    ))?;
    ensure!(order.lattice() == &span, "not ℤ⟨1, (1+σ)/2⟩");
    ensure!(ok(order.is_hopf_order())?.all_passed(), "not a Hopf order");
    let j = ok(order.integrals())?;
    ensure!(
        j.basis() == [vec![frac(1, 2), frac(1, 2)]],
        "integral {:?}",
        j.basis()
    );
    let t = ok(tame_check_integral(&order, &zi))?;
    ensure!(t.tame, "not tame");
    let candidates = [ints(&[1, 0]), ints(&[0, 1]), ints(&[1, 1])];
    let g = ok(free_rank_one_generator(&order, &zi, &candidates))?;
    ensure!(g == Some(ints(&[1, 1])), "generator {g:?}");
    // 𝒜·(1+i) has basis images 1 and 1+i, of determinant 1
    let images: Vec<Vector> = order
        .lattice()
        .basis()
        .iter()
        .map(|a| zi.module().act(a, &ints(&[1, 1])))
        .collect();
    ensure!(
        ok(Lattice::from_generators(2, &images))? == Lattice::standard(2),
        "images {images:?}"
    );
    Ok(())
}

fn total_integrals() -> Outcome {
    let mut seen = 0;
    for ma in field_instances()? {
        let r = ok(ma.classify())?;
        if !(r.invariants_are_scalars && r.faithful && r.ranks_equal) {
            continue;
        }
        seen += 1;
        let hopf = ma.hopf();
        let n = hopf.dim();
        match ok(ma.total_integral_map())? {
            TotalIntegral::Present { map, .. } => {
                ensure!(r.tame, "total integral without tameness");
                let one = ok(hopf.dual())?.algebra().unit().to_vec();
                ensure!(map.apply(&one) == ma.algebra().unit(), "g(1) ≠ 1");
                // (h⇀f)(k) = f(kh)
                for h in 0..n {
                    let hit = hopf
                        .algebra()
                        .right_mul_matrix(&hopf.basis_vector(h))
                        .transpose();
                    ensure!(
                        ok(map.compose(&hit))? == ok(ma.action(h).compose(&map))?,
                        "g is not H-linear at {h}"
                    );
                }
            }
            TotalIntegral::Absent { .. } => ensure!(!r.tame, "tame without total integral"),
        }
    }
    ensure!(seen >= 8, "only {seen} instances satisfied the hypotheses");
    Ok(())
}

fn graded_comodule(d: Domain, c: Scalar) -> Result<ComoduleAlgebra, String> {
    ok(ComoduleAlgebra::from_module_algebra(&ok(graded(d, c))?))
}

fn cyclic_identities() -> Outcome {
    for d in [q(), fp(3)] {
        let s = graded_comodule(d, d.one())?;
        let m = ok(group_like(s.hopf(), false))?;
        ensure!(
            ok(m.ayd_check())?.passed && ok(m.stability_check())?.passed,
            "{d}: coefficients"
        );
        let t = ok(CyclicModule::new(s, m, Bounds::default()))?;
        for n in 0..=3 {
            let c = ok(t.check_level(n))?;
            ensure!(
                c.simplicial.passed,
                "{d} level {n}: {:?}",
                c.simplicial.failure
            );
            ensure!(
                c.face_cyclic.passed,
                "{d} level {n}: {:?}",
                c.face_cyclic.failure
            );
            ensure!(
                c.cyclicity.passed,
                "{d} level {n}: {:?}",
                c.cyclicity.failure
            );
        }
    }
    Ok(())
}

fn bar_shift() -> Outcome {
    let ma = ok(gaussian(q()))?;
    let base = SmashModule::base(&ma);
    let regular = ok(SmashModule::regular(&ma))?;
    let sum = ok(base.direct_sum(&regular))?;
    for (name, m) in [("S", base), ("S#H", regular), ("S ⊕ S#H", sum)] {
        let morita = ok(m.morita_decomposition())?;
        ensure!(morita.bijective, "{name}: S ⊗ M^H → M");
        ensure!(
            morita.dim_m == morita.dim_s * morita.fixed_dim,
            "{name}: Morita dimensions"
        );
        let r = ok(bar_shift_check(&m, 4, &Bounds::default()))?;
        ensure!(r.rows.len() == 5, "{name}: {} rows", r.rows.len());
        for row in &r.rows {
            ensure!(
                row.dim == row.shifted_dim && row.isomorphism,
                "{name} degree {}: {} vs {}",
                row.degree,
                row.dim,
                row.shifted_dim
            );
        }
    }
    Ok(())
}

fn fundamental_theorem() -> Outcome {
    for d in [fp(3), fp(2)] {
        let s = graded_comodule(d, d.one())?;
        ensure!(
            s.galois_map().is_invertible().unwrap_or(false),
            "{d}: γ singular"
        );
        for m in [
            RelativeHopfModule::base(&s),
            ok(RelativeHopfModule::cofree(&s, 2))?,
        ] {
            let r = ok(t_shift_check(&m, 3, &Bounds::default()))?;
            ensure!(r.evaluation_bijective, "{d}: evaluation on dim {}", r.dim_m);
            ensure!(r.passed(), "{d}: shift on dim {}", r.dim_m);
        }
        let nil = graded_comodule(d, d.zero())?;
        match t_shift_check(&RelativeHopfModule::base(&nil), 3, &Bounds::default()) {
            Err(Error::Precondition(msg)) if msg.contains("singular") => {}
            other => return Err(format!("{d}: x² = 0 gave {other:?}")),
        }
    }
    Ok(())
}

fn builtins() -> Result<Vec<HopfAlgebra>, String> {
    let mut out = Vec::new();
    for d in [q(), fp(2), fp(3), fp(5), fp(7)] {
        for (_, g) in small_groups() {
            out.push(ok(group_algebra(&g, d, None))?);
        }
        if d != fp(2) {
            out.push(ok(sweedler(d))?);
        }
        out.push(ok(trivial(d))?);
    }
    out.push(ok(taft(3, &fp(7).from_i64(2)))?);
    out.push(ok(taft(4, &fp(5).from_i64(2)))?);
    out.push(ok(truncated_primitive(fp(2)))?);
    out.push(ok(truncated_primitive(fp(3)))?);
    Ok(out)
}

fn structural_soundness() -> Outcome {
    let bounds = Bounds::default();
    // b∘b = 0
    for d in [q(), fp(3)] {
        let s = graded_comodule(d, d.one())?;
        for regular in [false, true] {
            let t = ok(CyclicModule::new(
                s.clone(),
                ok(group_like(s.hopf(), regular))?,
                bounds,
            ))?;
            ensure!(
                ok(t.hochschild_complex(3))?.square_zero(),
                "Hochschild complex over {d}"
            );
        }
    }
    let ma = ok(gaussian(q()))?;
    for m in [SmashModule::base(&ma), ok(SmashModule::regular(&ma))?] {
        let c = ok(bar_complex(ma.algebra(), m.s_action(), 4, &bounds))?;
        ensure!(c.square_zero(), "bar complex");
    }
    // dual(dual(H)) = H
    for h in builtins()? {
        let back = ok(ok(h.dual())?.dual())?;
        ensure!(back == h, "dual(dual) differs for {:?}", h.labels());
    }
    // module ↔ comodule
    let mut modules: Vec<HopfModule> = field_instances()?
        .into_iter()
        .map(|ma| ma.module().clone())
        .collect();
    for h in builtins()? {
        modules.push(HopfModule::regular(h.clone()));
        modules.push(HopfModule::trivial(h, 2));
    }
    for m in &modules {
        let back = ok(comodule_to_module(&ok(module_to_comodule(m))?))?;
        ensure!(back.hopf() == m.hopf(), "roundtrip changes H");
        ensure!(
            back.actions() == m.actions(),
            "roundtrip changes the action"
        );
        // I·V ⊆ V^H
        ensure!(
            ok(ok(m.integral_image())?.is_subspace_of(&ok(m.invariants())?))?,
            "I·V ⊄ V^H"
        );
    }
    // J·S ⊆ S^𝒜
    for (o, s) in lattice_instances()? {
        let lambda = ok(o.integrals())?.basis()[0].clone();
        for v in s.lattice().basis() {
            let w = s.module().act(&lambda, v);
            ensure!(ok(s.lattice().contains(&w))?, "J·S leaves S");
            for a in o.lattice().basis() {
                let eps = o.hopf().counit_of(a);
                let fixed: Vector = w.iter().map(|x| x * &eps).collect();
                ensure!(s.module().act(a, &w) == fixed, "J·S not fixed by 𝒜");
            }
        }
    }
    Ok(())
}

const COMMANDS: &[&str] = &[
    "verify fixtures/qc2.json",
    "verify fixtures/sweedler.json",
    "verify fixtures/taft3_f7.json",
    "verify fixtures/qc2_dual.json",
    "verify fixtures/qc2_explicit.json",
    "verify fixtures/corrupted_antipode.json",
    "verify fixtures/malformed.json",
    "integrals fixtures/qc2.json",
    "integrals fixtures/sweedler.json",
    "integrals fixtures/f2c2.json",
    "galois fixtures/gaussian.json",
    "galois fixtures/trivial_action.json",
    "tame fixtures/f4_frobenius.json --expect tame",
    "tame fixtures/truncated_derivation.json",
    "tame fixtures/graded_q.json",
    "homology fixtures/f2c2_trivial.json",
    "homology fixtures/qc2_regular.json",
    "homology fixtures/gaussian_integers.json",
    "homology fixtures/eisenstein_integers.json",
    "cyclic fixtures/graded_q.json --module fixtures/group_like.json --levels 2",
    "cyclic fixtures/graded_f3.json --module fixtures/group_like_f3.json --levels 2",
    "cyclic fixtures/graded_q.json --module fixtures/group_like_swap.json --levels 1",
    "cyclic fixtures/graded_coaction.json --module fixtures/group_like.json --levels 1",
    "bar-shift fixtures/gaussian.json --module sum --levels 3",
    "bar-shift fixtures/trivial_action.json",
    "t-shift fixtures/graded_f3.json --module cofree:2",
    "t-shift fixtures/graded_nilpotent.json",
    "assoc-order fixtures/gaussian_integers.json",
    "assoc-order fixtures/gaussian_integers.json --order group-ring",
    "assoc-order fixtures/eisenstein_integers.json --order group-ring",
];

fn determinism() -> Outcome {
    for cmd in COMMANDS {
        let args = || {
            std::iter::once("hopfgal")
                .chain(cmd.split_whitespace())
                .chain(std::iter::once("--json"))
        };
        let (first, code) = hopfgal::cli::run(args());
        let (second, again) = hopfgal::cli::run(args());
        ensure!(
            first == second && code == again,
            "`{cmd}` is not reproducible"
        );
        ensure!(
            first.contains("\"schema_version\": \"1\""),
            "`{cmd}` has no schema version"
        );
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        (
            "integrals are one-dimensional on both sides",
            larson_sweedler,
        ),
        (
            "tame, Hopf-Galois and vanishing homology agree over a field",
            field_case_equivalence,
        ),
        (
            "tameness over ℤ is read off the invariant factors",
            integral_tameness,
        ),
        (
            "associated order of ℤ[i] and its free generator",
            associated_order_pipeline,
        ),
        (
            "total integrals exist exactly for tame extensions",
            total_integrals,
        ),
        ("cyclic operator identities on T(S, M)", cyclic_identities),
        ("bar complex shift for ℚ[x]/(x²+1)", bar_shift),
        (
            "fundamental theorem for strongly graded algebras",
            fundamental_theorem,
        ),
        ("structural soundness", structural_soundness),
        ("deterministic JSON reports", determinism),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {:>2}: pass  {name}", i + 1),
            Err(why) => {
                println!("criterion {:>2}: FAIL  {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
