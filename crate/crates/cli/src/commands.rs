use std::time::Instant;

use nccech::amitsur::{
    amitsur_homology, block_formula_dim, build_amitsur, build_coring, AmitsurConfig,
};
use nccech::cech::{build_cech, cech_cohomology, verify_chain_map, SignPolicy};
use nccech::covering::{completeness_check, Covering};
use nccech::oracle::nerve_cohomology;
use sha2::{Digest, Sha256};

use crate::error::{CliError, EXIT_OK, EXIT_VIOLATION};
use crate::problem::{BuiltFunctor, FieldSpec, FunctorSpec, Problem, ProblemFile};
use crate::report::{
    AmitsurSection, CechSection, Check, CoveringSection, InputEcho, OracleSection, OverlapDim,
    Report, Status, Timing, VerifySection,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Check,
    Cech,
    Amitsur,
    Verify,
    Oracle,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Cech => "cech",
            Command::Amitsur => "amitsur",
            Command::Verify => "verify",
            Command::Oracle => "oracle",
        }
    }
}

/// Command-line overrides applied to the problem before it is built.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub field: Option<String>,
    pub n_max: Option<usize>,
    pub dim_cap: Option<usize>,
}

/// Parses `input`, runs `command` and returns the report with its exit code.
pub fn run(
    command: Command,
    input: &[u8],
    overrides: &Overrides,
) -> Result<(Report, u8), CliError> {
    let start = Instant::now();
    let text = std::str::from_utf8(input)
        .map_err(|e| CliError::schema("", format!("input is not UTF-8: {e}")))?;
    let mut file = ProblemFile::from_json(text)?;
    if let Some(f) = &overrides.field {
        file.field = FieldSpec::parse(f)?;
    }
    if let Some(n) = overrides.n_max {
        file.options.n_max = Some(n);
    }
    if let Some(c) = overrides.dim_cap {
        file.options.dim_cap = Some(c);
    }
    let problem = Problem::build(&file)?;
    let mut report = Report {
        tool: "nccech".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        command: command.name().into(),
        input: InputEcho {
            sha256: format!("{:x}", Sha256::digest(input)),
            problem: file,
        },
        field: problem.field.to_string(),
        covering: None,
        cech: None,
        amitsur: None,
        verify: None,
        oracle: None,
        timing: Timing { elapsed_ms: 0 },
    };
    let mut code = EXIT_OK;
    match command {
        Command::Check => {
            report.covering = Some(covering_section(&problem, problem.require_covering()?)?);
        }
        Command::Cech => {
            report.cech = Some(cech_section(&problem.functor()?, &problem)?);
        }
        Command::Amitsur => {
            let c = problem.require_covering()?;
            report.covering = Some(covering_section(&problem, c)?);
            report.amitsur = Some(amitsur_section(&problem, c)?);
        }
        Command::Oracle => {
            let built = problem.functor()?;
            let BuiltFunctor::Cover { description, .. } = &built else {
                return Err(CliError::schema(
                    "functor",
                    "the oracle needs a `cover` functor".into(),
                ));
            };
            let cech = cech_section(&built, &problem)?;
            let nerve = nerve_cohomology(description);
            let agree = nerve == cech.cohomology;
            if !agree {
                code = EXIT_VIOLATION;
            }
            report.oracle = Some(OracleSection {
                n: description.n(),
                overlaps: description
                    .overlaps()
                    .iter()
                    .filter(|t| t.len() >= 2)
                    .map(|t| t.one_based())
                    .collect(),
                nerve,
                cech: cech.cohomology.clone(),
                agree,
            });
            report.cech = Some(cech);
        }
        Command::Verify => {
            let v = verify_section(&problem)?;
            if !v.passed {
                code = EXIT_VIOLATION;
            }
            report.verify = Some(v);
        }
    }
    report.timing.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok((report, code))
}

fn covering_section(problem: &Problem, c: &Covering) -> Result<CoveringSection, CliError> {
    let r = completeness_check(c);
    let mut overlap_dims = Vec::new();
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            let dim = c.overlap(i, j).map_or(0, |o| o.quotient.algebra.dim());
            overlap_dims.push(OverlapDim {
                pair: [i + 1, j + 1],
                dim,
            });
        }
    }
    Ok(CoveringSection {
        ideals: problem.ideal_names.clone(),
        algebra_dim: c.algebra().dim(),
        patch_dims: c.patches().iter().map(|p| p.algebra.dim()).collect(),
        overlap_dims,
        is_covering: r.is_covering,
        intersection_dim: r.intersection_dim,
        exact_at_a: r.exact_at_a,
        exact_at_b: r.exact_at_b,
        image_pi_dim: r.image_pi_dim,
        kernel_tau_dim: r.kernel_tau_dim,
        tau_rank: c.tau().rank(),
        complete: r.complete,
    })
}

fn functor_kind(problem: &Problem) -> &'static str {
    match problem.functor_spec {
        None | Some(FunctorSpec::RingedDefault) => "ringed_default",
        Some(FunctorSpec::RingedDiagonal { .. }) => "ringed_diagonal",
        Some(FunctorSpec::Constant { .. }) => "constant",
        Some(FunctorSpec::Cover { .. }) => "cover",
        Some(FunctorSpec::Explicit { .. }) => "explicit",
    }
}

fn cech_section(built: &BuiltFunctor, problem: &Problem) -> Result<CechSection, CliError> {
    let f = built.functor();
    let cx = build_cech(f)?;
    Ok(CechSection {
        functor: functor_kind(problem).into(),
        n: f.n(),
        dims: cx.dims(),
        cohomology: cech_cohomology(&cx),
    })
}

fn amitsur_section(problem: &Problem, c: &Covering) -> Result<AmitsurSection, CliError> {
    let config = AmitsurConfig {
        n_max: problem.n_max,
        dim_cap: problem.dim_cap,
    };
    let cx = build_amitsur(c, &config)?;
    Ok(AmitsurSection {
        n_max: problem.n_max,
        dims: cx.dims(),
        homology_augmented: amitsur_homology(&cx, true),
        homology: amitsur_homology(&cx, false),
    })
}

fn check(name: &str, ok: bool, detail: String) -> Check {
    Check {
        name: name.into(),
        status: if ok { Status::Pass } else { Status::Fail },
        detail,
    }
}

fn skipped(name: &str, detail: &str) -> Check {
    Check {
        name: name.into(),
        status: Status::Skipped,
        detail: detail.into(),
    }
}

/// A computation error that is itself the answer to a verification.
fn violation(e: &nccech::Error) -> bool {
    use nccech::Error::*;
    matches!(
        e,
        NotAComplex { .. }
            | NonCommuting { .. }
            | Naturality { .. }
            | MissingRing { .. }
            | MissingRestriction { .. }
            | RestrictionMismatch { .. }
            | NotMultiplicative { .. }
            | NotUnital
    )
}

fn verify_section(problem: &Problem) -> Result<VerifySection, CliError> {
    let mut checks = Vec::new();
    let covering = problem.covering.as_ref();
    let config = AmitsurConfig {
        n_max: problem.n_max,
        dim_cap: problem.dim_cap,
    };

    match covering {
        Some(c) => {
            match build_amitsur(c, &config) {
                Ok(cx) => {
                    let dims = cx.dims();
                    checks.push(check("amitsur_d_squared", true, format!("dims {dims:?}")));
                    let mut mismatch = None;
                    for (k, &d) in dims.iter().enumerate() {
                        let expected = block_formula_dim(c, k + 1)?;
                        if expected != d {
                            mismatch =
                                Some(format!("power {}: {d} vs block formula {expected}", k + 1));
                            break;
                        }
                    }
                    let ok = mismatch.is_none();
                    checks.push(check(
                        "block_formula",
                        ok,
                        mismatch.unwrap_or_else(|| "all powers agree".into()),
                    ));
                }
                Err(e) if violation(&e) => {
                    checks.push(check("amitsur_d_squared", false, e.to_string()))
                }
                Err(e) => return Err(e.into()),
            }
            let report = build_coring(c, problem.dim_cap)?.check();
            checks.push(check(
                "coring_laws",
                report.all_hold(),
                format!("{report:?}"),
            ));
        }
        None => {
            checks.push(skipped("amitsur_d_squared", "no covering"));
            checks.push(skipped("block_formula", "no covering"));
            checks.push(skipped("coring_laws", "no covering"));
        }
    }

    let built = match problem.functor() {
        Ok(b) => {
            checks.push(check(
                "functor_validation",
                true,
                "all squares commute".into(),
            ));
            Some(b)
        }
        Err(e @ CliError::Invalid { .. }) if matches!(&e, CliError::Invalid { source, .. } if violation(source)) =>
        {
            checks.push(check("functor_validation", false, e.to_string()));
            None
        }
        Err(e) => return Err(e),
    };

    if let Some(b) = &built {
        match build_cech(b.functor()) {
            Ok(cx) => checks.push(check(
                "cech_d_squared",
                true,
                format!("dims {:?}", cx.dims()),
            )),
            Err(e) if violation(&e) => checks.push(check("cech_d_squared", false, e.to_string())),
            Err(e) => return Err(e.into()),
        }
        match (b, covering) {
            (BuiltFunctor::Ringed { functor, choice }, Some(c)) => {
                let r = verify_chain_map(
                    functor,
                    choice,
                    c,
                    problem.n_max,
                    SignPolicy::IncreasingOnly,
                    problem.dim_cap,
                )?;
                let detail = if r.passed() {
                    format!("degrees 1..={} and relations", problem.n_max)
                } else {
                    let bad = r.degrees.iter().find(|d| !(d.matrix_ok && d.ambient_ok));
                    format!(
                        "augmentation {:?}; first failing degree {:?}; relation witness {:?}",
                        r.augmentation_ok, bad, r.relation_witness
                    )
                };
                checks.push(check("chain_map", r.passed(), detail));
            }
            _ => checks.push(skipped(
                "chain_map",
                "needs a ringed functor on the covering",
            )),
        }
        if let BuiltFunctor::Cover {
            description,
            functor,
        } = b
        {
            let nerve = nerve_cohomology(description);
            let cech = cech_cohomology(&build_cech(functor)?);
            checks.push(check(
                "oracle_agreement",
                nerve == cech,
                format!("nerve {nerve:?}, cech {cech:?}"),
            ));
        }
    } else {
        checks.push(skipped("cech_d_squared", "functor invalid"));
        checks.push(skipped("chain_map", "functor invalid"));
    }

    let passed = checks.iter().all(|c| c.status != Status::Fail);
    Ok(VerifySection { passed, checks })
}
