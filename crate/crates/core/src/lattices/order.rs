use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::actions::HopfModule;
use crate::error::{Error, Result};
use crate::hopf::{AxiomCheck, HopfAlgebra, VerificationReport};
use crate::lattices::Lattice;
use crate::linalg::{integer_kernel, smith_normal_form, Domain, LinearMap, Scalar, Vector};

/// A full-rank lattice in a ℚ-vector space carrying an `H`-action.
#[derive(Clone, Debug)]
pub struct ModuleLattice {
    module: HopfModule,
    lattice: Lattice,
}

impl ModuleLattice {
    pub fn new(module: HopfModule, lattice: Lattice) -> Result<Self> {
        if module.domain() != Domain::Rational {
            return Err(Error::UnsupportedDomain {
                operation: "lattice computations".into(),
                domain: module.domain(),
            });
        }
        if module.dim() != lattice.ambient() {
            return Err(Error::Dimension(format!(
                "the action is on a {}-dimensional space but the lattice lives in ℚ^{}",
                module.dim(),
                lattice.ambient()
            )));
        }
        if !lattice.is_full_rank() {
            return Err(Error::Precondition(
                "the module lattice is not of full rank".into(),
            ));
        }
        Ok(ModuleLattice { module, lattice })
    }

    /// `ℤ^n` inside the module.
    pub fn standard(module: HopfModule) -> Result<Self> {
        let n = module.dim();
        Self::new(module, Lattice::standard(n))
    }

    pub fn module(&self) -> &HopfModule {
        &self.module
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    /// The action of `h` in lattice coordinates, `B⁻¹ ρ(h) B`.
    pub fn action_in_coordinates(&self, h: &[Scalar]) -> Result<LinearMap> {
        let b = self.lattice.basis_matrix()?;
        b.invert()?.compose(&self.module.action_of(h).compose(&b)?)
    }
}

/// A full-rank lattice inside a Hopf algebra over ℚ.
#[derive(Clone, Debug)]
pub struct Order {
    hopf: HopfAlgebra,
    lattice: Lattice,
}

fn is_integral(v: &[Scalar]) -> bool {
    v.iter().all(|x| x.to_rational().is_integer())
}

impl Order {
    pub fn new(hopf: HopfAlgebra, lattice: Lattice) -> Result<Self> {
        if hopf.domain() != Domain::Rational {
            return Err(Error::UnsupportedDomain {
                operation: "orders".into(),
                domain: hopf.domain(),
            });
        }
        if lattice.ambient() != hopf.dim() || !lattice.is_full_rank() {
            return Err(Error::Precondition(
                "an order must be a full-rank lattice in the Hopf algebra".into(),
            ));
        }
        Ok(Order { hopf, lattice })
    }

    /// The lattice spanned by the structure basis, e.g. `ℤG ⊂ ℚG`.
    pub fn standard(hopf: HopfAlgebra) -> Result<Self> {
        let n = hopf.dim();
        Self::new(hopf, Lattice::standard(n))
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn format_basis(&self) -> Vec<String> {
        self.lattice
            .basis()
            .iter()
            .map(|b| self.hopf.format_vector(b))
            .collect()
    }

    /// `1 ∈ 𝒜`, `𝒜·𝒜 ⊆ 𝒜`, `Δ(𝒜) ⊆ 𝒜⊗𝒜`, `ε(𝒜) ⊆ ℤ`, `α(𝒜) ⊆ 𝒜`, with
    /// witnesses in lattice basis indices.
    pub fn is_hopf_order(&self) -> Result<VerificationReport> {
        let basis = self.lattice.basis();
        let h = &self.hopf;
        let mut report = VerificationReport::default();
        let one = self.lattice.contains(h.unit())?;
        report
            .checks
            .push(AxiomCheck::from_result("contains 1", (!one).then(Vec::new)));
        let mut closed = None;
        'outer: for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                if !self.lattice.contains(&h.mul(a, b))? {
                    closed = Some(vec![i, j]);
                    break 'outer;
                }
            }
        }
        report
            .checks
            .push(AxiomCheck::from_result("multiplicatively closed", closed));
        let square = self.lattice.tensor(&self.lattice)?;
        let mut coproduct = None;
        let mut counit = None;
        let mut antipode = None;
        for (i, a) in basis.iter().enumerate() {
            if coproduct.is_none() && !square.contains(&h.comultiply(a))? {
                coproduct = Some(vec![i]);
            }
            if counit.is_none() && !is_integral(&[h.counit_of(a)]) {
                counit = Some(vec![i]);
            }
            if antipode.is_none() && !self.lattice.contains(&h.apply_antipode(a))? {
                antipode = Some(vec![i]);
            }
        }
        report
            .checks
            .push(AxiomCheck::from_result("coproduct stable", coproduct));
        report
            .checks
            .push(AxiomCheck::from_result("counit integral", counit));
        report
            .checks
            .push(AxiomCheck::from_result("antipode stable", antipode));
        Ok(report)
    }

    fn require_hopf_order(&self) -> Result<()> {
        let report = self.is_hopf_order()?;
        match report.first_failure() {
            None => Ok(()),
            Some(c) => Err(Error::Precondition(format!(
                "the lattice is not a Hopf order: {}",
                crate::hopf::describe_failure(c, &self.format_basis())
            ))),
        }
    }

    /// `J = 𝒜^𝒜`: the left integral line of `H` met with the lattice.
    pub fn integrals(&self) -> Result<Lattice> {
        self.require_hopf_order()?;
        let line = self.hopf.left_integrals()?;
        self.lattice.intersect_line(line.generator())
    }

    /// Whether every basis element maps the module lattice into itself.
    pub fn acts_integrally(&self, s: &ModuleLattice) -> Result<bool> {
        for a in self.lattice.basis() {
            if !is_integral(s.action_in_coordinates(a)?.entries()) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `{h ∈ H : h·S ⊆ S}`. Writing `h = Σ x_k e_k`, the conditions are
/// `C x ∈ ℤ^m` for the rows of `C` listing coordinates of `e_k·b_j`, so
/// the order is the dual of the row lattice of `C`.
pub fn associated_order(s: &ModuleLattice) -> Result<Order> {
    let hopf = s.module().hopf().clone();
    let nh = hopf.dim();
    let n = s.rank();
    let blocks = (0..nh)
        .map(|k| s.action_in_coordinates(&hopf.basis_vector(k)))
        .collect::<Result<Vec<_>>>()?;
    let rows: Vec<Vector> = (0..n)
        .flat_map(|j| (0..n).map(move |r| (j, r)))
        .map(|(j, r)| blocks.iter().map(|m| m.get(r, j).clone()).collect())
        .collect();
    let conditions = Lattice::from_generators(nh, &rows)?;
    if !conditions.is_full_rank() {
        return Err(Error::Precondition(
            "the action is not faithful, so the associated order is not a lattice".into(),
        ));
    }
    // x with L x ∈ ℤ^nh: the columns of L⁻¹
    let l = LinearMap::from_rows(Domain::Rational, nh, conditions.basis())?;
    let dual = l.invert()?.columns();
    Order::new(hopf, Lattice::from_generators(nh, &dual)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeTameReport {
    pub rank_s: usize,
    pub rank_order: usize,
    pub fixed_rank: usize,
    pub faithful: bool,
    /// Generator of the integral lattice `J`.
    pub integral: String,
    pub image_rank: usize,
    /// Invariant factors greater than 1 of `S^𝒜 / J·S`.
    pub invariant_factors: Vec<String>,
    pub free_quotient_rank: usize,
    /// Primes dividing the torsion of the quotient.
    pub obstructed_primes: Vec<String>,
    pub homology_vanishes: bool,
    /// Rank equality, faithfulness and `S^𝒜` of rank one.
    pub hypotheses_hold: bool,
    pub tame: bool,
}

fn prime_factors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        if n.is_multiple_of(&p) {
            out.push(p.clone());
            while n.is_multiple_of(&p) {
                n /= &p;
            }
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push(n);
    }
    out
}

/// Hopfological homology over ℤ: `S^𝒜 / J·S` with its invariant factors.
pub fn tame_check_integral(order: &Order, s: &ModuleLattice) -> Result<LatticeTameReport> {
    if !s.module().hopf().same_structure(order.hopf()) {
        return Err(Error::Precondition(
            "the order and the module are over different Hopf algebras".into(),
        ));
    }
    let j = order.integrals()?;
    if !order.acts_integrally(s)? {
        return Err(Error::Precondition(
            "the order does not map the module lattice into itself".into(),
        ));
    }
    let hopf = order.hopf();
    let n = s.rank();
    let lambda = j.basis()[0].clone();
    // S^𝒜 = S ∩ V^H in lattice coordinates
    let mut rows = Vec::new();
    for k in 0..hopf.dim() {
        let e = hopf.basis_vector(k);
        let m = s.action_in_coordinates(&e)?;
        for r in 0..n {
            let mut row = m.row(r).to_vec();
            row[r] = &row[r] - &hopf.counit()[k];
            rows.push(row);
        }
    }
    let stacked = LinearMap::from_rows(Domain::Rational, n, &rows)?;
    let den = stacked
        .entries()
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.to_rational().denom()));
    let scaled = LinearMap::from_fn(Domain::Integer, stacked.rows(), n, |r, c| {
        Scalar::Integer((stacked.get(r, c).to_rational() * &den).to_integer())
    });
    let fixed_basis: Vec<Vector> = integer_kernel(&scaled)?
        .iter()
        .map(|v| v.iter().map(|x| Domain::Rational.from_bigint(x)).collect())
        .collect();
    let fixed = Lattice::new(n, &fixed_basis)?;
    let image = s.action_in_coordinates(&lambda)?;
    let image_gens = image.columns();
    let mut coords = Vec::with_capacity(n);
    for g in &image_gens {
        match fixed.coordinates(g)? {
            Some(c) if is_integral(&c) => coords.push(c),
            _ => {
                return Err(Error::Inconsistent(
                    "the integral image J·S is not inside S^𝒜".into(),
                ))
            }
        }
    }
    let f = fixed.rank();
    let image_rank = Lattice::from_generators(n, &image_gens)?.rank();
    let (factors, free_quotient_rank) = if f == 0 {
        (Vec::new(), 0)
    } else {
        let m = LinearMap::from_fn(Domain::Integer, f, n, |r, c| {
            Scalar::Integer(coords[c][r].to_rational().to_integer())
        });
        let snf = smith_normal_form(&m)?;
        let nonzero = snf.iter().filter(|d| !d.is_zero()).count();
        let torsion: Vec<BigInt> = snf.into_iter().filter(|d| d > &BigInt::one()).collect();
        (torsion, f - nonzero)
    };
    let mut primes: Vec<BigInt> = factors.iter().flat_map(prime_factors).collect();
    primes.sort();
    primes.dedup();
    let faithful = s.module().is_faithful()?;
    let homology_vanishes = factors.is_empty() && free_quotient_rank == 0;
    let hypotheses_hold = faithful && n == order.rank() && f == 1;
    Ok(LatticeTameReport {
        rank_s: n,
        rank_order: order.rank(),
        fixed_rank: f,
        faithful,
        integral: hopf.format_vector(&lambda),
        image_rank,
        invariant_factors: factors.iter().map(BigInt::to_string).collect(),
        free_quotient_rank,
        obstructed_primes: primes.iter().map(BigInt::to_string).collect(),
        homology_vanishes,
        hypotheses_hold,
        tame: homology_vanishes && hypotheses_hold,
    })
}

/// The first candidate `z` (ambient coordinates) with `𝒜·z = S`.
/// `None` is inconclusive: no candidate worked.
pub fn free_rank_one_generator(
    order: &Order,
    s: &ModuleLattice,
    candidates: &[Vector],
) -> Result<Option<Vector>> {
    let report = tame_check_integral(order, s)?;
    if !report.tame {
        return Err(Error::Precondition(format!(
            "the extension is not tame over ℤ (invariant factors {:?})",
            report.invariant_factors
        )));
    }
    let n = s.module().dim();
    for z in candidates {
        if z.len() != n {
            return Err(Error::Dimension(format!(
                "candidate of length {} in a module of dimension {n}",
                z.len()
            )));
        }
        let gens: Vec<Vector> = order
            .lattice()
            .basis()
            .iter()
            .map(|a| s.module().act(a, z))
            .collect();
        if &Lattice::from_generators(n, &gens)? == s.lattice() {
            return Ok(Some(z.clone()));
        }
    }
    Ok(None)
}
