//! Builtin Hopf algebras: group algebras, Sweedler's 4-dimensional algebra,
//! Taft algebras and truncated primitive algebras in positive characteristic.

use crate::error::{Error, Result};
use crate::hopf::groups::{self, GroupTable};
use crate::hopf::{tensor_product_mul, Algebra, HopfAlgebra};
use crate::linalg::{unit_vector, vec_kron, Domain, LinearMap, Scalar, Vector};

/// Group algebra `K[G]` with `Δ(g) = g ⊗ g`, `ε(g) = 1`, `α(g) = g⁻¹`.
pub fn group_algebra(
    table: &GroupTable,
    domain: Domain,
    labels: Option<Vec<String>>,
) -> Result<HopfAlgebra> {
    groups::validate(table)?;
    let n = table.len();
    let labels = match labels {
        Some(l) if l.len() == n => l,
        Some(l) => {
            return Err(Error::Format(format!(
                "{} labels for a group of order {n}",
                l.len()
            )))
        }
        None => default_group_labels(n),
    };
    let mult = (0..n).flat_map(|a| (0..n).map(move |b| (a, b, table[a][b], domain.one())));
    let algebra = Algebra::from_triples(domain, labels, mult, unit_vector(domain, n, 0))?;
    let comult = (0..n).map(|g| (g, g, g, domain.one()));
    let antipode = LinearMap::from_triples(
        domain,
        n,
        n,
        (0..n).map(|g| {
            (
                groups::inverse(table, g).expect("validated"),
                g,
                domain.one(),
            )
        }),
    )?;
    HopfAlgebra::from_parts(algebra, comult, vec![domain.one(); n], antipode)
}

fn default_group_labels(n: usize) -> Vec<String> {
    match n {
        2 => vec!["1".into(), "σ".into()],
        _ => std::iter::once("1".to_string())
            .chain((1..n).map(|i| format!("g{i}")))
            .collect(),
    }
}

/// Sweedler's algebra on the basis `{1, g, x, g·x}`.
pub fn sweedler(domain: Domain) -> Result<HopfAlgebra> {
    if domain.characteristic() == 2 {
        return Err(Error::Unsupported(
            "Sweedler's algebra needs characteristic different from 2".into(),
        ));
    }
    let one = domain.one();
    let neg = domain.from_i64(-1);
    let labels = ["1", "g", "x", "g·x"].map(String::from).to_vec();
    let (e, g, x, gx) = (0, 1, 2, 3);
    let mult = vec![
        (e, e, e, one.clone()),
        (e, g, g, one.clone()),
        (e, x, x, one.clone()),
        (e, gx, gx, one.clone()),
        (g, e, g, one.clone()),
        (g, g, e, one.clone()),
        (g, x, gx, one.clone()),
        (g, gx, x, one.clone()),
        (x, e, x, one.clone()),
        (x, g, gx, neg.clone()),
        (gx, e, gx, one.clone()),
        (gx, g, x, neg.clone()),
    ];
    let algebra = Algebra::from_triples(domain, labels, mult, unit_vector(domain, 4, 0))?;
    let comult = vec![
        (e, e, e, one.clone()),
        (g, g, g, one.clone()),
        (x, x, e, one.clone()),
        (x, g, x, one.clone()),
        (gx, gx, g, one.clone()),
        (gx, e, gx, one.clone()),
    ];
    let counit = vec![one.clone(), one.clone(), domain.zero(), domain.zero()];
    let antipode = LinearMap::from_triples(
        domain,
        4,
        4,
        vec![
            (e, e, one.clone()),
            (g, g, one.clone()),
            (gx, x, neg),
            (x, gx, one),
        ],
    )?;
    HopfAlgebra::from_parts(algebra, comult, counit, antipode)
}

/// Taft algebra of dimension `n²`: `g^n = 1`, `x^n = 0`, `xg = q·gx`,
/// `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`. The basis element `g^a x^b` sits at
/// index `b·n + a`, so `taft(2, -1)` reproduces [`sweedler`] exactly.
pub fn taft(n: usize, q: &Scalar) -> Result<HopfAlgebra> {
    if n < 2 {
        return Err(Error::Format("Taft algebras need n ≥ 2".into()));
    }
    let domain = q.domain();
    for k in 1..=n as u64 {
        let is_one = q.pow(k).is_one();
        if (k < n as u64 && is_one) || (k == n as u64 && !is_one) {
            return Err(Error::NotPrimitive(q.to_string(), k));
        }
    }
    let dim = n * n;
    let index = |a: usize, b: usize| b * n + a;
    let labels = (0..dim).map(|i| taft_label(i % n, i / n)).collect();
    let algebra = Algebra::from_fn(domain, labels, unit_vector(domain, dim, 0), |i, j| {
        let (a, b) = (i % n, i / n);
        let (c, d) = (j % n, j / n);
        let mut v = vec![domain.zero(); dim];
        if b + d < n {
            v[index((a + c) % n, b + d)] = q.pow((b * c) as u64);
        }
        v
    })?;
    let tensor = |x: &Vector, y: &Vector| tensor_product_mul(&[&algebra, &algebra], x, y);
    let basis = |i: usize| unit_vector(domain, dim, i);
    let g = basis(index(1, 0));
    let x = basis(index(0, 1));
    let one = basis(0);
    let delta_g = vec_kron(&g, &g);
    let delta_x: Vector = vec_kron(&x, &one)
        .iter()
        .zip(vec_kron(&g, &x))
        .map(|(a, b)| a + &b)
        .collect();
    let g_inv = basis(index(n - 1, 0));
    let anti_x: Vector = algebra.mul(&g_inv, &x).iter().map(|c| -c).collect();

    let mut coproducts = Vec::with_capacity(dim);
    let mut antipode_cols = Vec::with_capacity(dim);
    let mut counit = Vec::with_capacity(dim);
    for i in 0..dim {
        let (a, b) = (i % n, i / n);
        let mut d = vec_kron(&one, &one);
        for _ in 0..a {
            d = tensor(&d, &delta_g);
        }
        for _ in 0..b {
            d = tensor(&d, &delta_x);
        }
        coproducts.push(d);
        // α is an anti-homomorphism: α(g^a x^b) = α(x)^b α(g)^a
        let mut s = one.clone();
        for _ in 0..b {
            s = algebra.mul(&s, &anti_x);
        }
        for _ in 0..a {
            s = algebra.mul(&s, &g_inv);
        }
        antipode_cols.push(s);
        counit.push(if b == 0 { domain.one() } else { domain.zero() });
    }
    let antipode = LinearMap::from_columns(domain, dim, &antipode_cols)?;
    HopfAlgebra::from_dense(algebra, coproducts, counit, antipode)
}

fn taft_label(a: usize, b: usize) -> String {
    let g = match a {
        0 => String::new(),
        1 => "g".into(),
        _ => format!("g^{a}"),
    };
    let x = match b {
        0 => String::new(),
        1 => "x".into(),
        _ => format!("x^{b}"),
    };
    match (g.is_empty(), x.is_empty()) {
        (true, true) => "1".into(),
        (false, true) => g,
        (true, false) => x,
        (false, false) => format!("{g}·{x}"),
    }
}

/// `𝔽p[δ]/(δ^p)` with `δ` primitive: `Δ(δ) = δ⊗1 + 1⊗δ`. This is the
/// restricted enveloping algebra of the one-dimensional abelian Lie algebra
/// with zero p-map; it acts on `𝔽p[t]/(t^p)` by `d/dt`.
pub fn truncated_primitive(domain: Domain) -> Result<HopfAlgebra> {
    let p = domain.characteristic() as usize;
    if p == 0 {
        return Err(Error::Unsupported(
            "truncated primitive algebras need positive characteristic".into(),
        ));
    }
    let labels = (0..p)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "δ".to_string(),
            _ => format!("δ^{k}"),
        })
        .collect();
    let mult = (0..p).flat_map(|a| {
        (0..p)
            .filter(move |b| a + b < p)
            .map(move |b| (a, b, a + b, domain.one()))
    });
    let algebra = Algebra::from_triples(domain, labels, mult, unit_vector(domain, p, 0))?;
    let mut comult = Vec::new();
    for k in 0..p {
        let mut binom = 1u64;
        for i in 0..=k {
            comult.push((k, i, k - i, domain.from_i64(binom as i64)));
            binom = binom * (k - i) as u64 / (i + 1) as u64;
        }
    }
    let counit = unit_vector(domain, p, 0);
    let antipode = LinearMap::from_triples(
        domain,
        p,
        p,
        (0..p).map(|k| (k, k, domain.from_i64(if k % 2 == 0 { 1 } else { -1 }))),
    )?;
    HopfAlgebra::from_parts(algebra, comult, counit, antipode)
}

/// The one-dimensional Hopf algebra `K`.
pub fn trivial(domain: Domain) -> Result<HopfAlgebra> {
    group_algebra(&groups::cyclic(1), domain, None)
}
