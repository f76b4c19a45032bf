//! Small module algebras used throughout the tests, fixtures and CLI.

use crate::actions::ModuleAlgebra;
use crate::error::{Error, Result};
use crate::hopf::builtins::{group_algebra, truncated_primitive};
use crate::hopf::groups::cyclic;
use crate::hopf::{Algebra, HopfAlgebra};
use crate::linalg::{unit_vector, Domain, Scalar, Vector};

/// `K[x]/(x^n − Σ c_i x^i)` on the basis `1, x, …, x^{n−1}`.
pub fn polynomial_quotient(domain: Domain, var: &str, relation: &[Scalar]) -> Result<Algebra> {
    let n = relation.len();
    if n == 0 {
        return Err(Error::Format("empty relation".into()));
    }
    let labels = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        })
        .collect();
    // powers[k] = x^k reduced
    let mut powers: Vec<Vector> = (0..n).map(|k| unit_vector(domain, n, k)).collect();
    for _ in n..2 * n - 1 {
        let prev = powers.last().expect("nonempty").clone();
        let mut next = vec![domain.zero(); n];
        next[1..].clone_from_slice(&prev[..n - 1]);
        for (k, c) in relation.iter().enumerate() {
            next[k] = &next[k] + &(&prev[n - 1] * c);
        }
        powers.push(next);
    }
    Algebra::from_fn(domain, labels, unit_vector(domain, n, 0), |i, j| {
        powers[i + j].clone()
    })
}

/// `K × ⋯ × K` on its primitive idempotents `e1, …, en`.
pub fn diagonal_algebra(domain: Domain, n: usize) -> Result<Algebra> {
    let labels = (1..=n).map(|i| format!("e{i}")).collect();
    let mult = (0..n).map(|i| (i, i, i, domain.one()));
    Algebra::from_triples(domain, labels, mult, vec![domain.one(); n])
}

fn c2(domain: Domain) -> Result<HopfAlgebra> {
    group_algebra(&cyclic(2), domain, None)
}

/// `K[x]/(x²+1)` with `σ(x) = −x`.
pub fn gaussian(domain: Domain) -> Result<ModuleAlgebra> {
    let s = polynomial_quotient(domain, "x", &[domain.from_i64(-1), domain.zero()])?;
    let one = domain.one();
    ModuleAlgebra::from_triples(
        c2(domain)?,
        s,
        vec![
            (0, 0, 0, one.clone()),
            (0, 1, 1, one.clone()),
            (1, 0, 0, one.clone()),
            (1, 1, 1, -&one),
        ],
    )
}

/// `K[ζ]/(ζ²+ζ+1)` with `σ(ζ) = ζ² = −1 − ζ`.
pub fn eisenstein(domain: Domain) -> Result<ModuleAlgebra> {
    let minus = domain.from_i64(-1);
    let s = polynomial_quotient(domain, "ζ", &[minus.clone(), minus.clone()])?;
    let one = domain.one();
    ModuleAlgebra::from_triples(
        c2(domain)?,
        s,
        vec![
            (0, 0, 0, one.clone()),
            (0, 1, 1, one.clone()),
            (1, 0, 0, one),
            (1, 1, 0, minus.clone()),
            (1, 1, 1, minus),
        ],
    )
}

/// `K[x]/(x²+1)` with the non-multiplicative `σ(x) = x + 1`.
pub fn gaussian_shifted(domain: Domain) -> Result<ModuleAlgebra> {
    let s = polynomial_quotient(domain, "x", &[domain.from_i64(-1), domain.zero()])?;
    let one = domain.one();
    ModuleAlgebra::from_triples(
        c2(domain)?,
        s,
        vec![
            (0, 0, 0, one.clone()),
            (0, 1, 1, one.clone()),
            (1, 0, 0, one.clone()),
            (1, 1, 1, one.clone()),
            (1, 1, 0, one),
        ],
    )
}

/// `𝔽4 = 𝔽2[y]/(y²+y+1)` with Frobenius `y ↦ y + 1`.
pub fn frobenius_f4() -> Result<ModuleAlgebra> {
    let f2 = Domain::prime(2)?;
    let s = polynomial_quotient(f2, "y", &[f2.one(), f2.one()])?;
    let one = f2.one();
    ModuleAlgebra::from_triples(
        c2(f2)?,
        s,
        vec![
            (0, 0, 0, one.clone()),
            (0, 1, 1, one.clone()),
            (1, 0, 0, one.clone()),
            (1, 1, 1, one.clone()),
            (1, 1, 0, one),
        ],
    )
}

/// `𝔽p[t]/(t^p)` acted on by `𝔽p[δ]/(δ^p)` with `δ = d/dt`.
pub fn truncated_derivation(domain: Domain) -> Result<ModuleAlgebra> {
    let h = truncated_primitive(domain)?;
    let p = h.dim();
    let mut relation = vec![domain.zero(); p];
    relation[0] = domain.zero();
    let s = polynomial_quotient(domain, "t", &relation)?;
    let mut action = Vec::new();
    for k in 0..p {
        for m in k..p {
            // δ^k t^m = m!/(m−k)! t^{m−k}
            let coeff =
                ((m - k + 1)..=m).fold(domain.one(), |acc, f| &acc * &domain.from_i64(f as i64));
            if !coeff.is_zero() {
                action.push((k, m, m - k, coeff));
            }
        }
    }
    ModuleAlgebra::from_triples(h, s, action)
}

/// `K ⊕ Kx` with `x² = c`, graded by `C2` with `x` in degree `σ`, as a
/// module algebra over `(KC2)*` acting by the degree projections.
/// Strongly graded exactly when `c ≠ 0`.
pub fn graded(domain: Domain, c: Scalar) -> Result<ModuleAlgebra> {
    let s = polynomial_quotient(domain, "x", &[c, domain.zero()])?;
    let h = c2(domain)?.dual()?;
    let one = domain.one();
    ModuleAlgebra::from_triples(h, s, vec![(0, 0, 0, one.clone()), (1, 1, 1, one)])
}

/// `K × K` with `σ` swapping the two factors.
pub fn swap(domain: Domain) -> Result<ModuleAlgebra> {
    let s = diagonal_algebra(domain, 2)?;
    let one = domain.one();
    ModuleAlgebra::from_triples(
        c2(domain)?,
        s,
        vec![
            (0, 0, 0, one.clone()),
            (0, 1, 1, one.clone()),
            (1, 0, 1, one.clone()),
            (1, 1, 0, one),
        ],
    )
}

/// `KC2` acting trivially on `S`.
pub fn trivial_c2(domain: Domain, s: Algebra) -> Result<ModuleAlgebra> {
    ModuleAlgebra::trivial(c2(domain)?, s)
}
