//! Command-line interface. Every command builds one [`Report`], printed as
//! text or JSON. Exit codes: 0 success, 1 mismatch, 2 input error,
//! 3 resource bound.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::actions::TotalIntegral;
use crate::cocyclic::{
    bar_shift_check, t_shift_check, Bounds, CyclicModule, LevelCheck, RelativeHopfModule, ShiftRow,
    SmashModule,
};
use crate::error::{Error, Result};
use crate::hopf::{describe_failure, format_combination};
use crate::io::{self, LoadedModule};
use crate::lattices::{
    associated_order, free_rank_one_generator, tame_check_integral, ModuleLattice, Order,
};
use crate::linalg::Domain;
use crate::report::Report;

#[derive(Parser, Debug)]
#[command(
    name = "hopfgal",
    version,
    about = "Exact checks for finite-dimensional Hopf algebras and their extensions"
)]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,
    /// Highest cyclic or bar level allowed.
    #[arg(long, global = true)]
    pub max_level: Option<usize>,
    /// Largest space dimension allowed; overrides HOPFGAL_MAX_DIM.
    #[arg(long, global = true)]
    pub max_dim: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Expectation {
    Tame,
    HopfGalois,
    TameHopfGalois,
    Neither,
    NotAnExtension,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderChoice {
    /// The associated order of the lattice.
    Associated,
    /// The lattice spanned by the structure basis of H.
    GroupRing,
    /// The `order` given in the file.
    File,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the Hopf algebra axioms.
    Verify { path: PathBuf },
    /// Left and right integrals and semisimplicity.
    Integrals { path: PathBuf },
    /// Hopf-Galois verdicts for an extension.
    Galois {
        path: PathBuf,
        #[arg(long, value_enum)]
        expect: Option<Expectation>,
    },
    /// Tameness, Hopfological homology and the total integral.
    Tame {
        path: PathBuf,
        #[arg(long, value_enum)]
        expect: Option<Expectation>,
    },
    /// Hopfological homology of a module, comodule or lattice.
    Homology { path: PathBuf },
    /// Identities of the cyclic operators on the levels of T(S, M).
    Cyclic {
        path: PathBuf,
        #[arg(long)]
        module: PathBuf,
        #[arg(long, default_value_t = 3)]
        levels: usize,
    },
    /// Degreewise B_n(S, M) ≅ B_{n+1}(S, M^H).
    BarShift {
        path: PathBuf,
        /// `base`, `regular`, `sum` or a module file.
        #[arg(long, default_value = "base")]
        module: String,
        #[arg(long, default_value_t = 4)]
        levels: usize,
    },
    /// S ⊗ M^co ≅ M and degreewise T_n(S, M) ≅ T_{n+1}(S, M^co).
    TShift {
        path: PathBuf,
        /// `base` or `cofree:N`.
        #[arg(long, default_value = "base")]
        module: String,
        #[arg(long, default_value_t = 3)]
        levels: usize,
    },
    /// Associated order, Hopf-order test, integral and tameness over ℤ.
    AssocOrder {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "associated")]
        order: OrderChoice,
        /// Generator candidates such as `1,0;0,1;1,1`.
        #[arg(long)]
        candidates: Option<String>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Verify { .. } => "verify",
            Command::Integrals { .. } => "integrals",
            Command::Galois { .. } => "galois",
            Command::Tame { .. } => "tame",
            Command::Homology { .. } => "homology",
            Command::Cyclic { .. } => "cyclic",
            Command::BarShift { .. } => "bar-shift",
            Command::TShift { .. } => "t-shift",
            Command::AssocOrder { .. } => "assoc-order",
        }
    }

    fn input(&self) -> String {
        let p = match self {
            Command::Verify { path }
            | Command::Integrals { path }
            | Command::Galois { path, .. }
            | Command::Tame { path, .. }
            | Command::Homology { path }
            | Command::Cyclic { path, .. }
            | Command::BarShift { path, .. }
            | Command::TShift { path, .. }
            | Command::AssocOrder { path, .. } => path,
        };
        p.display().to_string()
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Resource(_) => 3,
        Error::Precondition(_) | Error::Singular { .. } | Error::Inconsistent(_) => 1,
        _ => 2,
    }
}

/// Parses `args` (program name first) and returns the rendered output and
/// exit code.
pub fn run<I, T>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (e.to_string(), code);
        }
    };
    let report = execute(&cli);
    let out = if cli.json {
        report.render_json()
    } else {
        report.render_text()
    };
    (out, report.exit_code)
}

pub fn execute(cli: &Cli) -> Report {
    let mut bounds = Bounds::from_env();
    if let Some(l) = cli.max_level {
        bounds.max_level = l;
    }
    if let Some(d) = cli.max_dim {
        bounds.max_dim = d;
    }
    let start = Instant::now();
    let name = cli.command.name();
    let input = cli.command.input();
    let mut report = match dispatch(&cli.command, &bounds) {
        Ok(r) => r,
        Err(e) => Report::error(name, &input, &e.to_string(), exit_code(&e)),
    };
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    report
}

fn dispatch(cmd: &Command, bounds: &Bounds) -> Result<Report> {
    let mut r = Report::new(cmd.name(), &cmd.input());
    match cmd {
        Command::Verify { path } => verify(&mut r, path)?,
        Command::Integrals { path } => integrals(&mut r, path)?,
        Command::Galois { path, expect } => extension(&mut r, path, *expect, false)?,
        Command::Tame { path, expect } => extension(&mut r, path, *expect, true)?,
        Command::Homology { path } => homology(&mut r, path)?,
        Command::Cyclic {
            path,
            module,
            levels,
        } => cyclic(&mut r, path, module, *levels, bounds)?,
        Command::BarShift {
            path,
            module,
            levels,
        } => bar_shift(&mut r, path, module, *levels, bounds)?,
        Command::TShift {
            path,
            module,
            levels,
        } => t_shift(&mut r, path, module, *levels, bounds)?,
        Command::AssocOrder {
            path,
            order,
            candidates,
        } => assoc_order(&mut r, path, *order, candidates.as_deref())?,
    }
    Ok(r)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn verify(r: &mut Report, path: &Path) -> Result<()> {
    let hopf = io::load_hopf_unverified(path)?;
    let v = hopf.verify();
    r.line("dimension", hopf.dim());
    r.line("field", hopf.domain());
    for c in &v.checks {
        let detail = (!c.passed).then(|| describe_failure(c, hopf.labels()));
        r.check(&c.axiom, c.passed, detail);
    }
    r.set_data(&v);
    if !v.all_passed() {
        r.fail(1);
    }
    Ok(())
}

#[derive(Serialize)]
struct IntegralsData {
    left_integral: String,
    right_integral: String,
    semisimple: bool,
    unimodular: bool,
}

fn integrals(r: &mut Report, path: &Path) -> Result<()> {
    let hopf = io::load_hopf_unverified(path)?.verified()?;
    let left = hopf.left_integrals()?;
    let right = hopf.right_integrals()?;
    let data = IntegralsData {
        left_integral: hopf.format_vector(left.generator()),
        right_integral: hopf.format_vector(right.generator()),
        semisimple: hopf.is_semisimple()?,
        unimodular: crate::linalg::Subspace::span(hopf.domain(), hopf.dim(), &left.basis)?
            == crate::linalg::Subspace::span(hopf.domain(), hopf.dim(), &right.basis)?,
    };
    r.line("dimension", hopf.dim());
    r.line("left integral", &data.left_integral);
    r.line("right integral", &data.right_integral);
    r.line("semisimple", data.semisimple);
    r.line("unimodular", data.unimodular);
    r.set_data(&data);
    Ok(())
}

#[derive(Serialize)]
struct ExtensionData {
    report: crate::actions::ExtensionReport,
    gamma_multiplicative: Option<bool>,
    total_integral: Option<TotalIntegralData>,
}

#[derive(Serialize)]
struct TotalIntegralData {
    present: bool,
    generator: Option<String>,
    z: Option<String>,
    unit_preserved: Option<bool>,
    integral_image_dim: Option<usize>,
}

fn matches_expectation(e: Expectation, rep: &crate::actions::ExtensionReport) -> bool {
    use crate::actions::Classification as C;
    match e {
        Expectation::Tame => rep.tame,
        Expectation::HopfGalois => rep.hopf_galois,
        Expectation::TameHopfGalois => rep.tame && rep.hopf_galois,
        Expectation::Neither => {
            !rep.tame && !rep.hopf_galois && rep.classification != C::NotAnExtension
        }
        Expectation::NotAnExtension => rep.classification == C::NotAnExtension,
    }
}

fn extension(r: &mut Report, path: &Path, expect: Option<Expectation>, tame: bool) -> Result<()> {
    let ext = io::load_extension(path)?;
    let ma = ext.module_algebra()?;
    let rep = ma.classify()?;
    r.line("dim S", rep.dim_s);
    r.line("dim H", rep.dim_h);
    r.line("classification", rep.classification.as_str());
    r.line("left integral", &rep.integral);
    r.line("dim S^H", rep.invariants_dim);
    r.line("dim I·S", rep.integral_image_dim);
    r.line("H_0 dimension", rep.homology_dim);
    r.line(
        "rank j",
        format!("{} of {}", rep.j_rank, rep.dim_s * rep.dim_s),
    );
    r.line(
        "rank γ",
        format!("{} of {}", rep.gamma_rank, rep.dim_s * rep.dim_s),
    );
    r.check("S^H = K", rep.invariants_are_scalars, None);
    r.check("faithful", rep.faithful, None);
    r.check("rank S = rank H", rep.ranks_equal, None);
    r.check("j bijective", rep.j_bijective, None);
    r.check("γ bijective", rep.gamma_bijective, None);
    r.check("I·S = K", rep.trace_surjective, None);
    let mut gamma_multiplicative = None;
    if rep.gamma_bijective {
        let c = ma.gamma_is_algebra_map()?;
        r.check("γ multiplicative", c.passed, None);
        gamma_multiplicative = Some(c.passed);
        if !c.passed {
            r.fail(1);
        }
    }
    if let Some(holds) = rep.equivalence_holds {
        r.check("tame ⇔ Hopf-Galois ⇔ H_0 = 0", holds, None);
        if !holds {
            r.fail(1);
        }
    }
    let mut total = None;
    if tame && rep.invariants_are_scalars {
        let t = ma.total_integral_map()?;
        let data = match &t {
            TotalIntegral::Present { t, z, map } => {
                let dual = ma.hopf().dual()?;
                let one = dual.algebra().unit();
                let unit_preserved = map.apply(one) == ma.algebra().unit();
                TotalIntegralData {
                    present: true,
                    generator: Some(dual.format_vector(t)),
                    z: Some(ma.format_vector(z)),
                    unit_preserved: Some(unit_preserved),
                    integral_image_dim: None,
                }
            }
            TotalIntegral::Absent { integral_image_dim } => TotalIntegralData {
                present: false,
                generator: None,
                z: None,
                unit_preserved: None,
                integral_image_dim: Some(*integral_image_dim),
            },
        };
        r.line(
            "total integral",
            match &data.z {
                Some(z) => format!("present, Λ·z = 1 at z = {z}"),
                None => "absent".into(),
            },
        );
        let agrees = data.present == rep.tame;
        r.check("total integral ⇔ tame", agrees, None);
        if !agrees || data.unit_preserved == Some(false) {
            r.fail(1);
        }
        total = Some(data);
    }
    if let Some(e) = expect {
        let ok = matches_expectation(e, &rep);
        r.check(
            "expectation",
            ok,
            Some(format!(
                "expected {}, found {}",
                e.to_possible_value().expect("named").get_name(),
                rep.classification.as_str()
            )),
        );
        if !ok {
            r.fail(1);
        }
    }
    r.set_data(&ExtensionData {
        report: rep,
        gamma_multiplicative,
        total_integral: total,
    });
    Ok(())
}

fn homology(r: &mut Report, path: &Path) -> Result<()> {
    let m = io::load_module(path)?;
    if m.lattice.is_some() || m.order.is_some() {
        return lattice_homology(r, &m);
    }
    let h = match (&m.action, &m.coaction) {
        (Some(a), _) => {
            r.line("kind", "module");
            a.hopfological_homology()?
        }
        (None, Some(c)) => {
            r.line("kind", "comodule");
            c.hopfological_homology()?
        }
        (None, None) => unreachable!("load_module requires one of them"),
    };
    let fixed = if m.action.is_some() {
        "dim V^H"
    } else {
        "dim M^coH"
    };
    r.line(fixed, h.invariants_dim);
    r.line("dim I·V", h.integral_image_dim);
    r.line("H_0 dimension", h.homology_dim);
    r.check("I·V ⊆ V^H", true, None);
    r.set_data(&h);
    Ok(())
}

fn module_lattice(m: &LoadedModule) -> Result<ModuleLattice> {
    let action = m.require_action()?.clone();
    match &m.lattice {
        Some(l) => ModuleLattice::new(action, l.clone()),
        None => ModuleLattice::standard(action),
    }
}

fn lattice_homology(r: &mut Report, m: &LoadedModule) -> Result<()> {
    let s = module_lattice(m)?;
    let order = match &m.order {
        Some(l) => Order::new(m.hopf.clone(), l.clone())?,
        None => Order::standard(m.hopf.clone())?,
    };
    let t = tame_check_integral(&order, &s)?;
    r.line("kind", "lattice");
    r.line("integral", &t.integral);
    r.line("rank S^𝒜", t.fixed_rank);
    r.line(
        "invariant factors",
        format!("[{}]", t.invariant_factors.join(", ")),
    );
    r.line("free rank of quotient", t.free_quotient_rank);
    r.line("H_0 vanishes", t.homology_vanishes);
    r.check("J·S ⊆ S^𝒜", true, None);
    r.set_data(&t);
    Ok(())
}

#[derive(Serialize)]
struct CyclicData {
    converted: bool,
    ayd: bool,
    stable: bool,
    levels: Vec<LevelCheck>,
}

fn cyclic(
    r: &mut Report,
    path: &Path,
    module: &Path,
    levels: usize,
    bounds: &Bounds,
) -> Result<()> {
    bounds.check_level(levels)?;
    let s = io::load_extension(path)?.comodule_algebra()?;
    let m = io::load_module(module)?.ayd()?;
    let ayd = m.ayd_check()?;
    let stable = ayd.passed && m.stability_check()?.passed;
    let t = CyclicModule::new(s.clone(), m, *bounds)?;
    r.line("converted from an action", s.converted());
    r.check(
        "anti-Yetter-Drinfeld",
        ayd.passed,
        ayd.witness.as_ref().map(|w| format!("{w:?}")),
    );
    r.check("stable", stable, None);
    let mut out = Vec::new();
    let mut broken = false;
    for n in 0..=levels {
        let c = t.check_level(n)?;
        r.line(
            &format!("level {n}"),
            format!(
                "dim {}, cotensor {}, (a) {}, (b) {}, (c) {}",
                c.dim,
                c.cotensor_dim,
                verdict(c.simplicial.passed),
                verdict(c.face_cyclic.passed),
                verdict(c.cyclicity.passed)
            ),
        );
        if !c.simplicial.passed || !c.face_cyclic.passed {
            broken = true;
        }
        if !c.cyclicity.passed {
            if stable {
                broken = true;
            } else {
                r.warn(format!(
                    "level {n}: t_n^(n+1) ≠ id on the cotensor for non-AYD coefficients ({})",
                    c.cyclicity.failure.clone().unwrap_or_default()
                ));
            }
        }
        out.push(c);
    }
    let complex = t.hochschild_complex(levels)?;
    r.check("b∘b = 0", complex.square_zero(), None);
    if broken || !complex.square_zero() {
        r.fail(1);
    }
    r.set_data(&CyclicData {
        converted: s.converted(),
        ayd: ayd.passed,
        stable,
        levels: out,
    });
    Ok(())
}

fn verdict(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "fail"
    }
}

fn shift_lines(r: &mut Report, rows: &[ShiftRow]) {
    for row in rows {
        let compat = match row.differential_compatible {
            Some(b) => yes_no(b),
            None => "-",
        };
        r.line(
            &format!("degree {}", row.degree),
            format!(
                "{} vs {}, isomorphism {}, differential compatible {compat}",
                row.dim,
                row.shifted_dim,
                yes_no(row.isomorphism)
            ),
        );
    }
}

fn bar_shift(
    r: &mut Report,
    path: &Path,
    module: &str,
    levels: usize,
    bounds: &Bounds,
) -> Result<()> {
    bounds.check_level(levels)?;
    let ext = io::load_extension(path)?;
    let ma = ext.module_algebra()?;
    let m = match module {
        "base" => SmashModule::base(ma),
        "regular" => SmashModule::regular(ma)?,
        "sum" => SmashModule::base(ma).direct_sum(&SmashModule::regular(ma)?)?,
        p => io::load_smash_module(Path::new(p), ma)?,
    };
    m.verify().into_result(&[])?;
    let rep = bar_shift_check(&m, levels, bounds)?;
    r.line("module", module);
    r.line("dim M", rep.dim_m);
    r.line("dim M^H", rep.fixed_dim);
    r.check(
        "dim M = dim S · dim M^H",
        rep.dim_m == rep.dim_s * rep.fixed_dim,
        None,
    );
    r.check("S ⊗ M^H → M bijective", rep.morita_bijective, None);
    shift_lines(r, &rep.rows);
    r.check("degreewise isomorphism", rep.passed(), None);
    if !rep.passed() {
        r.fail(1);
    }
    r.set_data(&rep);
    Ok(())
}

fn t_shift(
    r: &mut Report,
    path: &Path,
    module: &str,
    levels: usize,
    bounds: &Bounds,
) -> Result<()> {
    let s = io::load_extension(path)?.comodule_algebra()?;
    let m = match module {
        "base" => RelativeHopfModule::base(&s),
        other => {
            let n = other
                .strip_prefix("cofree:")
                .and_then(|n| n.parse().ok())
                .ok_or_else(|| Error::Format(format!("unknown module `{other}`")))?;
            RelativeHopfModule::cofree(&s, n)?
        }
    };
    let rep = t_shift_check(&m, levels, bounds)?;
    r.line("module", module);
    r.line("dim M", rep.dim_m);
    r.line("dim M^co", rep.coinvariants_dim);
    r.line("rank of the Galois map", rep.galois_rank);
    r.line("faithfully flat", "yes (automatic over a field)");
    r.check("S ⊗ M^co → M bijective", rep.evaluation_bijective, None);
    shift_lines(r, &rep.rows);
    r.check("degreewise isomorphism", rep.passed(), None);
    if !rep.passed() {
        r.fail(1);
    }
    r.set_data(&rep);
    Ok(())
}

#[derive(Serialize)]
struct OrderData {
    order: Vec<String>,
    hopf_order: bool,
    hopf_order_failure: Option<String>,
    tame: Option<crate::lattices::LatticeTameReport>,
    generator: Option<String>,
    generator_search: &'static str,
}

fn assoc_order(r: &mut Report, path: &Path, choice: OrderChoice, cand: Option<&str>) -> Result<()> {
    let m = io::load_module(path)?;
    let s = module_lattice(&m)?;
    let order = match choice {
        OrderChoice::Associated => associated_order(&s)?,
        OrderChoice::GroupRing => Order::standard(m.hopf.clone())?,
        OrderChoice::File => Order::new(
            m.hopf.clone(),
            m.order
                .clone()
                .ok_or_else(|| Error::Format("the file has no `order`".into()))?,
        )?,
    };
    let basis = order.format_basis();
    r.line("order", format!("ℤ⟨{}⟩", basis.join(", ")));
    let hopf_report = order.is_hopf_order()?;
    let failure = hopf_report
        .first_failure()
        .map(|c| describe_failure(c, &basis));
    r.line("Hopf order", yes_no(failure.is_none()));
    let candidates = match cand {
        Some(text) => io::parse_candidates(Domain::Rational, text)?,
        None => m.candidates.clone(),
    };
    let mut data = OrderData {
        order: basis,
        hopf_order: failure.is_none(),
        hopf_order_failure: failure.clone(),
        tame: None,
        generator: None,
        generator_search: "not run",
    };
    if let Some(f) = failure {
        r.warn(format!("not a Hopf order: {f}"));
        r.set_data(&data);
        return Ok(());
    }
    let t = tame_check_integral(&order, &s)?;
    r.line("integral", &t.integral);
    r.line("tame", yes_no(t.tame));
    r.line(
        "invariant factors",
        format!("[{}]", t.invariant_factors.join(", ")),
    );
    if !t.obstructed_primes.is_empty() {
        r.line("obstructed primes", t.obstructed_primes.join(", "));
    }
    r.check(
        "tame ⇔ S^𝒜/J·S = 0",
        t.tame == (t.homology_vanishes && t.hypotheses_hold),
        None,
    );
    if t.tame && !candidates.is_empty() {
        match free_rank_one_generator(&order, &s, &candidates)? {
            Some(g) => {
                let shown = format_combination(&m.labels, &g);
                r.line("generator", &shown);
                data.generator = Some(shown);
                data.generator_search = "found";
            }
            None => {
                r.line("generator", "none among the candidates (inconclusive)");
                data.generator_search = "inconclusive";
            }
        }
    }
    data.tame = Some(t);
    r.set_data(&data);
    Ok(())
}
