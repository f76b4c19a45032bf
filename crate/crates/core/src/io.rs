//! JSON input formats. Scalars are always strings such as `"3"` or `"-1/2"`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::actions::examples::{
    diagonal_algebra, eisenstein, frobenius_f4, gaussian, graded, polynomial_quotient, swap,
    truncated_derivation,
};
use crate::actions::{HopfModule, ModuleAlgebra};
use crate::cocyclic::{group_like, AydModule, Comodule, ComoduleAlgebra, SmashModule};
use crate::error::{Error, Result};
use crate::hopf::builtins::{group_algebra, sweedler, taft, trivial, truncated_primitive};
use crate::hopf::groups::{cyclic, small_groups, GroupTable};
use crate::hopf::{Algebra, HopfAlgebra};
use crate::lattices::Lattice;
use crate::linalg::{unit_vector, Domain, LinearMap, Scalar, Vector};

pub type Triple4 = (usize, usize, usize, String);
pub type Triple3 = (usize, usize, String);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldSpec {
    Q,
    Fp { p: u64 },
    Z,
}

impl FieldSpec {
    pub fn domain(self) -> Result<Domain> {
        match self {
            FieldSpec::Q => Ok(Domain::Rational),
            FieldSpec::Fp { p } => Domain::prime(p),
            FieldSpec::Z => Ok(Domain::Integer),
        }
    }
}

/// A Hopf algebra: a builtin, or explicit structure constants where
/// `mult` holds `(i, j, k, c)` for `e_i e_j += c e_k`, `comult` holds
/// `(i, j, k, c)` for `Δ(e_i) += c e_j ⊗ e_k` and `antipode` holds
/// `(i, k, c)` for `α(e_i) += c e_k`.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct HopfSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<HopfBuiltin>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Vec<Triple4>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comult: Option<Vec<Triple4>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Triple3>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum HopfBuiltin {
    GroupAlgebra {
        #[serde(default)]
        table: Option<GroupTable>,
        #[serde(default)]
        group: Option<String>,
        #[serde(default)]
        labels: Option<Vec<String>>,
    },
    Sweedler,
    Taft {
        n: usize,
        q: String,
    },
    Dual {
        of: Box<HopfSpec>,
    },
    TruncatedPrimitive,
    Trivial,
}

/// `{"field": …, <hopf spec>}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HopfFile {
    pub field: FieldSpec,
    #[serde(flatten)]
    pub hopf: HopfSpec,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct AlgebraSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<AlgebraBuiltin>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Vec<Triple4>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum AlgebraBuiltin {
    /// `K[var]/(var^n − Σ relation_i var^i)`.
    Polynomial {
        #[serde(default)]
        var: Option<String>,
        relation: Vec<String>,
    },
    Diagonal {
        n: usize,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum ExtensionBuiltin {
    Gaussian,
    Eisenstein,
    FrobeniusF4,
    TruncatedDerivation,
    Graded { c: String },
    Swap,
}

/// An algebra `S` with either an `H`-action `(h, s, t, c)`: `h·e_s += c e_t`
/// or an `H`-coaction `(s, t, h, c)`: `ρ(e_s) += c e_t ⊗ e_h`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExtensionFile {
    pub field: FieldSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<ExtensionBuiltin>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hopf: Option<HopfSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Triple4>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction: Option<Vec<Triple4>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModulePreset {
    Regular,
    Trivial,
    GroupLike,
    GroupLikeRegular,
}

/// A module, comodule or both over `hopf`, optionally with a ℤ-lattice
/// (basis rows), an order in `H` and free-generator candidates.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleFile {
    pub field: FieldSpec,
    pub hopf: HopfSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<ModulePreset>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Triple4>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction: Option<Vec<Triple4>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub candidates: Option<Vec<Vec<String>>>,
}

/// A module over `S # H` for an extension given separately:
/// `s_action` holds `(s, m, m', c)`: `e_s·e_m += c e_{m'}`, and
/// `h_action` the same for `H`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SmashModuleFile {
    pub dim: usize,
    pub s_action: Vec<Triple4>,
    pub h_action: Vec<Triple4>,
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Format(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
}

pub fn parse_vector(domain: Domain, v: &[String]) -> Result<Vector> {
    v.iter().map(|s| domain.parse_scalar(s)).collect()
}

fn parse_triples4(domain: Domain, t: &[Triple4]) -> Result<Vec<(usize, usize, usize, Scalar)>> {
    t.iter()
        .map(|(a, b, c, s)| Ok((*a, *b, *c, domain.parse_scalar(s)?)))
        .collect()
}

fn missing(what: &str) -> Error {
    Error::Format(format!("missing field `{what}`"))
}

fn group_table(name: &str) -> Result<GroupTable> {
    if let Some((_, t)) = small_groups().into_iter().find(|(n, _)| *n == name) {
        return Ok(t);
    }
    name.strip_prefix('C')
        .and_then(|n| n.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .map(cyclic)
        .ok_or_else(|| Error::Format(format!("unknown group `{name}`")))
}

/// Builds the Hopf algebra without checking its axioms.
pub fn build_hopf(spec: &HopfSpec, domain: Domain) -> Result<HopfAlgebra> {
    if let Some(b) = &spec.builtin {
        return match b {
            HopfBuiltin::GroupAlgebra {
                table,
                group,
                labels,
            } => {
                let table = match (table, group) {
                    (Some(t), None) => t.clone(),
                    (None, Some(g)) => group_table(g)?,
                    _ => {
                        return Err(Error::Format(
                            "group_algebra needs exactly one of `table` and `group`".into(),
                        ))
                    }
                };
                group_algebra(&table, domain, labels.clone())
            }
            HopfBuiltin::Sweedler => sweedler(domain),
            HopfBuiltin::Taft { n, q } => taft(*n, &domain.parse_scalar(q)?),
            HopfBuiltin::Dual { of } => build_hopf(of, domain)?.verified()?.dual(),
            HopfBuiltin::TruncatedPrimitive => truncated_primitive(domain),
            HopfBuiltin::Trivial => trivial(domain),
        };
    }
    let basis = spec.basis.clone().ok_or_else(|| missing("basis"))?;
    let n = basis.len();
    if spec.dim.is_some_and(|d| d != n) {
        return Err(Error::Format(format!(
            "dim disagrees with {n} basis labels"
        )));
    }
    let unit = match &spec.unit {
        Some(u) => parse_vector(domain, u)?,
        None => unit_vector(domain, n, 0),
    };
    let mult = parse_triples4(domain, spec.mult.as_deref().ok_or_else(|| missing("mult"))?)?;
    let algebra = Algebra::from_triples(domain, basis, mult, unit)?;
    let comult = parse_triples4(
        domain,
        spec.comult.as_deref().ok_or_else(|| missing("comult"))?,
    )?;
    let counit = parse_vector(
        domain,
        spec.counit.as_deref().ok_or_else(|| missing("counit"))?,
    )?;
    let antipode = spec
        .antipode
        .as_deref()
        .ok_or_else(|| missing("antipode"))?
        .iter()
        .map(|(i, k, c)| Ok((*k, *i, domain.parse_scalar(c)?)))
        .collect::<Result<Vec<_>>>()?;
    let antipode = LinearMap::from_triples(domain, n, n, antipode)?;
    HopfAlgebra::from_parts(algebra, comult, counit, antipode)
}

pub fn load_hopf_unverified(path: &Path) -> Result<HopfAlgebra> {
    let file: HopfFile = read_json(path)?;
    build_hopf(&file.hopf, file.field.domain()?)
}

pub fn hopf_from_str(text: &str) -> Result<HopfAlgebra> {
    let file: HopfFile = parse_json(text)?;
    build_hopf(&file.hopf, file.field.domain()?)?.verified()
}

pub fn build_algebra(spec: &AlgebraSpec, domain: Domain) -> Result<Algebra> {
    let algebra = match &spec.builtin {
        Some(AlgebraBuiltin::Polynomial { var, relation }) => polynomial_quotient(
            domain,
            var.as_deref().unwrap_or("x"),
            &parse_vector(domain, relation)?,
        )?,
        Some(AlgebraBuiltin::Diagonal { n }) => diagonal_algebra(domain, *n)?,
        None => {
            let basis = spec.basis.clone().ok_or_else(|| missing("algebra.basis"))?;
            let n = basis.len();
            let unit = match &spec.unit {
                Some(u) => parse_vector(domain, u)?,
                None => unit_vector(domain, n, 0),
            };
            let mult = parse_triples4(
                domain,
                spec.mult
                    .as_deref()
                    .ok_or_else(|| missing("algebra.mult"))?,
            )?;
            Algebra::from_triples(domain, basis, mult, unit)?
        }
    };
    algebra.verify().into_result(algebra.labels())?;
    Ok(algebra)
}

/// An extension given by an action or by a coaction.
#[derive(Clone, Debug)]
pub enum Extension {
    Module(ModuleAlgebra),
    Comodule(ComoduleAlgebra),
}

impl Extension {
    pub fn module_algebra(&self) -> Result<&ModuleAlgebra> {
        match self {
            Extension::Module(m) => Ok(m),
            Extension::Comodule(_) => Err(Error::Unsupported(
                "this command needs an extension given by an action".into(),
            )),
        }
    }

    /// The comodule algebra, converting an action through the dual.
    pub fn comodule_algebra(&self) -> Result<ComoduleAlgebra> {
        match self {
            Extension::Module(m) => ComoduleAlgebra::from_module_algebra(m),
            Extension::Comodule(c) => Ok(c.clone()),
        }
    }
}

pub fn load_extension(path: &Path) -> Result<Extension> {
    let file: ExtensionFile = read_json(path)?;
    build_extension(&file)
}

pub fn extension_from_str(text: &str) -> Result<Extension> {
    build_extension(&parse_json(text)?)
}

pub fn build_extension(file: &ExtensionFile) -> Result<Extension> {
    let domain = file.field.domain()?;
    if let Some(b) = &file.builtin {
        let ma = match b {
            ExtensionBuiltin::Gaussian => gaussian(domain)?,
            ExtensionBuiltin::Eisenstein => eisenstein(domain)?,
            ExtensionBuiltin::FrobeniusF4 => {
                if domain != Domain::prime(2)? {
                    return Err(Error::Format("frobenius_f4 is defined over F2".into()));
                }
                frobenius_f4()?
            }
            ExtensionBuiltin::TruncatedDerivation => truncated_derivation(domain)?,
            ExtensionBuiltin::Graded { c } => graded(domain, domain.parse_scalar(c)?)?,
            ExtensionBuiltin::Swap => swap(domain)?,
        };
        ma.verify().into_result(&[])?;
        return Ok(Extension::Module(ma));
    }
    let hopf =
        build_hopf(file.hopf.as_ref().ok_or_else(|| missing("hopf"))?, domain)?.verified()?;
    let algebra = build_algebra(
        file.algebra.as_ref().ok_or_else(|| missing("algebra"))?,
        domain,
    )?;
    match (&file.action, &file.coaction) {
        (Some(a), None) => {
            let ma = ModuleAlgebra::from_triples(hopf, algebra, parse_triples4(domain, a)?)?;
            ma.verify().into_result(&[])?;
            Ok(Extension::Module(ma))
        }
        (None, Some(c)) => {
            let n = algebra.dim();
            let comodule = Comodule::from_triples(hopf, n, parse_triples4(domain, c)?)?;
            Ok(Extension::Comodule(
                ComoduleAlgebra::new(algebra, comodule)?.verified()?,
            ))
        }
        _ => Err(Error::Format(
            "an extension needs exactly one of `action` and `coaction`".into(),
        )),
    }
}

/// The contents of a module file after validation.
#[derive(Clone, Debug)]
pub struct LoadedModule {
    pub hopf: HopfAlgebra,
    /// Basis labels of the module, `m0, m1, …` unless given.
    pub labels: Vec<String>,
    pub action: Option<HopfModule>,
    pub coaction: Option<Comodule>,
    pub lattice: Option<Lattice>,
    pub order: Option<Lattice>,
    pub candidates: Vec<Vector>,
}

impl LoadedModule {
    pub fn require_action(&self) -> Result<&HopfModule> {
        self.action
            .as_ref()
            .ok_or_else(|| Error::Format("the module file has no action".into()))
    }

    pub fn ayd(&self) -> Result<AydModule> {
        match (&self.action, &self.coaction) {
            (Some(a), Some(c)) => AydModule::new(a.clone(), c.clone()),
            _ => Err(Error::Format(
                "coefficients need both an action and a coaction".into(),
            )),
        }
    }
}

fn parse_rows(domain: Domain, rows: &[Vec<String>]) -> Result<Vec<Vector>> {
    rows.iter().map(|r| parse_vector(domain, r)).collect()
}

pub fn load_module(path: &Path) -> Result<LoadedModule> {
    let file: ModuleFile = read_json(path)?;
    build_module(&file)
}

pub fn build_module(file: &ModuleFile) -> Result<LoadedModule> {
    let domain = file.field.domain()?;
    let hopf = build_hopf(&file.hopf, domain)?.verified()?;
    let (mut action, mut coaction) = (None, None);
    match file.preset {
        Some(ModulePreset::Regular) => action = Some(HopfModule::regular(hopf.clone())),
        Some(ModulePreset::Trivial) => {
            action = Some(HopfModule::trivial(hopf.clone(), file.dim.unwrap_or(1)))
        }
        Some(p @ (ModulePreset::GroupLike | ModulePreset::GroupLikeRegular)) => {
            let m = group_like(&hopf, p == ModulePreset::GroupLikeRegular)?;
            action = Some(m.action().clone());
            coaction = Some(m.coaction().clone());
        }
        None => {}
    }
    if let Some(a) = &file.action {
        let dim = file.dim.ok_or_else(|| missing("dim"))?;
        action = Some(
            HopfModule::from_triples(hopf.clone(), dim, parse_triples4(domain, a)?)?.verified()?,
        );
    }
    if let Some(c) = &file.coaction {
        let dim = file.dim.ok_or_else(|| missing("dim"))?;
        coaction = Some(Comodule::from_triples(
            hopf.clone(),
            dim,
            parse_triples4(domain, c)?,
        )?);
    }
    if action.is_none() && coaction.is_none() {
        return Err(Error::Format(
            "a module file needs a preset, an action or a coaction".into(),
        ));
    }
    let lattice = match &file.lattice {
        Some(rows) => {
            let basis = parse_rows(Domain::Rational, rows)?;
            let n = basis.first().map_or(0, Vec::len);
            Some(Lattice::new(n, &basis)?)
        }
        None => None,
    };
    let order = match &file.order {
        Some(rows) => Some(Lattice::new(
            hopf.dim(),
            &parse_rows(Domain::Rational, rows)?,
        )?),
        None => None,
    };
    let candidates = match &file.candidates {
        Some(rows) => parse_rows(Domain::Rational, rows)?,
        None => Vec::new(),
    };
    let dim = action
        .as_ref()
        .map(HopfModule::dim)
        .or(coaction.as_ref().map(Comodule::dim))
        .unwrap_or(0);
    let labels = match &file.labels {
        Some(l) if l.len() == dim => l.clone(),
        Some(l) => {
            return Err(Error::Format(format!(
                "{} labels for a {dim}-dimensional module",
                l.len()
            )))
        }
        None => (0..dim).map(|i| format!("m{i}")).collect(),
    };
    Ok(LoadedModule {
        hopf,
        labels,
        action,
        coaction,
        lattice,
        order,
        candidates,
    })
}

pub fn load_smash_module(path: &Path, ma: &ModuleAlgebra) -> Result<SmashModule> {
    let file: SmashModuleFile = read_json(path)?;
    let d = ma.domain();
    SmashModule::from_triples(
        ma.clone(),
        file.dim,
        parse_triples4(d, &file.s_action)?,
        parse_triples4(d, &file.h_action)?,
    )
}

/// `"1,0;0,1"` into vectors.
pub fn parse_candidates(domain: Domain, text: &str) -> Result<Vec<Vector>> {
    text.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|v| {
            v.split(',')
                .map(|x| domain.parse_scalar(x.trim()))
                .collect()
        })
        .collect()
}
