//! The problem file: a self-contained JSON description of an algebra, its
//! ideals, a covering and optionally a poset functor.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use nccech::algebra::{ideal_closure, make_algebra, Algebra, AlgebraHom, Ideal};
use nccech::amitsur::DEFAULT_DIM_CAP;
use nccech::cech::{
    functor_from_ringed_covering, DefaultRinged, DiagonalRinged, IndexTuple, PhiChoice,
    PosetFunctor,
};
use nccech::covering::Covering;
use nccech::exactla::{Field, Matrix, Scalar};
use nccech::oracle::{functor_from_cover, CoverDescription};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldSpec {
    Q,
    Fp(u64),
}

impl FieldSpec {
    pub fn to_field(self) -> Result<Field, CliError> {
        match self {
            FieldSpec::Q => Ok(Field::Rational),
            FieldSpec::Fp(p) => Field::prime(p).map_err(|e| CliError::invalid("field", e)),
        }
    }

    /// `Q`, `F5` or `Fp:5`.
    pub fn parse(s: &str) -> Result<Self, CliError> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldSpec::Q);
        }
        let digits = s.strip_prefix("Fp:").or_else(|| s.strip_prefix('F'));
        digits
            .and_then(|d| d.parse().ok())
            .map(FieldSpec::Fp)
            .ok_or_else(|| {
                CliError::Usage(format!(
                    "unrecognized field `{s}` (expected Q, F<p> or Fp:<p>)"
                ))
            })
    }
}

/// An integer or a string such as `"-3/2"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Text(String),
}

impl Coeff {
    fn to_scalar(&self, field: Field, at: &str) -> Result<Scalar, CliError> {
        match self {
            Coeff::Int(v) => Ok(field.from_i64(*v)),
            Coeff::Text(s) => field.parse(s).map_err(|e| CliError::invalid(at, e)),
        }
    }
}

fn scalars(v: &[Coeff], field: Field, at: &str) -> Result<Vec<Scalar>, CliError> {
    v.iter()
        .enumerate()
        .map(|(k, c)| c.to_scalar(field, &format!("{at}[{k}]")))
        .collect()
}

/// Either explicit structure constants or a named preset.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    /// `ground`, `zero`, `split`, `matrix`, `upper_triangular`,
    /// `truncated_polynomial` or `product`
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<AlgebraSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    /// `[i, j, k, c]`: `b_i b_j` has coefficient `c` on `b_k`
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure: Option<Vec<(usize, usize, usize, Coeff)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<Coeff>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl AlgebraSpec {
    pub fn build(&self, field: Field, at: &str) -> Result<Algebra, CliError> {
        if let Some(preset) = &self.preset {
            let n = || {
                self.n
                    .ok_or_else(|| CliError::schema(at, format!("preset `{preset}` needs `n`")))
            };
            let a = match preset.as_str() {
                "ground" => Algebra::ground(field),
                "zero" => Algebra::zero(field),
                "split" => Algebra::split(field, n()?),
                "matrix" => Algebra::matrix(field, n()?),
                "upper_triangular" => Algebra::upper_triangular(field, n()?),
                "truncated_polynomial" => Algebra::truncated_polynomial(field, n()?),
                "product" => {
                    let specs = self.factors.as_ref().ok_or_else(|| {
                        CliError::schema(at, "preset `product` needs `factors`".into())
                    })?;
                    let built = specs
                        .iter()
                        .enumerate()
                        .map(|(k, s)| s.build(field, &format!("{at}.factors[{k}]")))
                        .collect::<Result<Vec<_>, _>>()?;
                    let refs: Vec<&Algebra> = built.iter().collect();
                    Algebra::direct_product(field, &refs).map_err(|e| CliError::invalid(at, e))?
                }
                other => {
                    return Err(CliError::schema(
                        &format!("{at}.preset"),
                        format!("unknown preset `{other}`"),
                    ))
                }
            };
            return Ok(a);
        }
        let dim = self.dim.ok_or_else(|| {
            CliError::schema(at, "explicit algebra needs `dim` (or use `preset`)".into())
        })?;
        let structure = self
            .structure
            .as_ref()
            .ok_or_else(|| CliError::schema(at, "explicit algebra needs `structure`".into()))?;
        let unit = self
            .unit
            .as_ref()
            .ok_or_else(|| CliError::schema(at, "explicit algebra needs `unit`".into()))?;
        let triples = structure
            .iter()
            .enumerate()
            .map(|(k, (i, j, l, c))| {
                Ok((
                    *i,
                    *j,
                    *l,
                    c.to_scalar(field, &format!("{at}.structure[{k}]"))?,
                ))
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        let unit = scalars(unit, field, &format!("{at}.unit"))?;
        let a = make_algebra(field, dim, triples, unit).map_err(|e| CliError::invalid(at, e))?;
        Ok(match &self.labels {
            Some(l) if l.len() == dim => a.with_labels(l.clone()),
            Some(l) => {
                return Err(CliError::schema(
                    &format!("{at}.labels"),
                    format!("{} labels for dimension {dim}", l.len()),
                ))
            }
            None => a,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingEntry {
    /// 1-based indices
    pub tuple: Vec<usize>,
    pub algebra: AlgebraSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RestrictionEntry {
    pub from: Vec<usize>,
    pub to: Vec<usize>,
    /// rows of the matrix `𝓡(to) x 𝓡(from)`
    pub matrix: Vec<Vec<Coeff>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctorSpec {
    RingedDefault,
    RingedDiagonal {
        copies: usize,
    },
    Constant {
        n: usize,
        ring: AlgebraSpec,
    },
    /// 1-based overlap tuples of length at least two; singletons are implied
    Cover {
        n: usize,
        overlaps: Vec<Vec<usize>>,
    },
    Explicit {
        n: usize,
        rings: Vec<RingEntry>,
        restrictions: Vec<RestrictionEntry>,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim_cap: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub field: FieldSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraSpec>,
    /// ideal name -> generators, each a coordinate vector
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub ideals: BTreeMap<String, Vec<Vec<Coeff>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub covering: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub functor: Option<FunctorSpec>,
    #[serde(default)]
    pub options: Options,
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            CliError::Schema {
                location: path,
                message: e.into_inner().to_string(),
            }
        })
    }
}

/// A functor built from a problem file, with the chain map data when it
/// comes from a ringed structure.
pub enum BuiltFunctor {
    Ringed {
        functor: PosetFunctor,
        choice: PhiChoice,
    },
    Plain(PosetFunctor),
    Cover {
        functor: PosetFunctor,
        description: CoverDescription,
    },
}

impl BuiltFunctor {
    pub fn functor(&self) -> &PosetFunctor {
        match self {
            BuiltFunctor::Ringed { functor, .. }
            | BuiltFunctor::Plain(functor)
            | BuiltFunctor::Cover { functor, .. } => functor,
        }
    }
}

pub struct Problem {
    pub field: Field,
    pub algebra: Option<Arc<Algebra>>,
    pub ideal_names: Vec<String>,
    pub covering: Option<Covering>,
    pub functor_spec: Option<FunctorSpec>,
    pub n_max: usize,
    pub dim_cap: usize,
}

pub const DEFAULT_N_MAX: usize = 2;

impl Problem {
    pub fn build(file: &ProblemFile) -> Result<Self, CliError> {
        let field = file.field.to_field()?;
        let algebra = match &file.algebra {
            Some(spec) => Some(Arc::new(spec.build(field, "algebra")?)),
            None => None,
        };
        let mut ideals = BTreeMap::new();
        for (name, gens) in &file.ideals {
            let a = algebra
                .as_ref()
                .ok_or_else(|| CliError::schema("ideals", "ideals need an `algebra`".into()))?;
            ideals.insert(
                name.clone(),
                build_ideal(a, field, gens, &format!("ideals.{name}"))?,
            );
        }
        let covering = if file.covering.is_empty() {
            None
        } else {
            let a = algebra.clone().ok_or_else(|| {
                CliError::schema("covering", "a covering needs an `algebra`".into())
            })?;
            let chosen = file
                .covering
                .iter()
                .enumerate()
                .map(|(k, name)| {
                    ideals.get(name).cloned().ok_or_else(|| {
                        CliError::schema(
                            &format!("covering[{k}]"),
                            format!("unknown ideal `{name}`"),
                        )
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            Some(Covering::new(a, chosen).map_err(|e| CliError::invalid("covering", e))?)
        };
        if let Some(n) = file.options.n_max {
            if n == 0 {
                return Err(CliError::schema(
                    "options.n_max",
                    "must be at least 1".into(),
                ));
            }
        }
        Ok(Problem {
            field,
            algebra,
            ideal_names: file.covering.clone(),
            covering,
            functor_spec: file.functor.clone(),
            n_max: file.options.n_max.unwrap_or(DEFAULT_N_MAX),
            dim_cap: file.options.dim_cap.unwrap_or(DEFAULT_DIM_CAP),
        })
    }

    pub fn require_covering(&self) -> Result<&Covering, CliError> {
        self.covering.as_ref().ok_or_else(|| {
            CliError::schema(
                "covering",
                "this command needs an algebra and a covering".into(),
            )
        })
    }

    /// The functor section, defaulting to the default ringed structure when a
    /// covering is present.
    pub fn functor(&self) -> Result<BuiltFunctor, CliError> {
        let spec = match (&self.functor_spec, &self.covering) {
            (Some(s), _) => s.clone(),
            (None, Some(_)) => FunctorSpec::RingedDefault,
            (None, None) => {
                return Err(CliError::schema(
                    "functor",
                    "needs a `functor` section or a covering".into(),
                ));
            }
        };
        let field = self.field;
        let core = |e: nccech::Error| CliError::invalid("functor", e);
        Ok(match spec {
            FunctorSpec::RingedDefault => {
                let (functor, choice) =
                    functor_from_ringed_covering(self.require_covering()?, &DefaultRinged)
                        .map_err(core)?;
                BuiltFunctor::Ringed { functor, choice }
            }
            FunctorSpec::RingedDiagonal { copies } => {
                let rs = DiagonalRinged { copies };
                let (functor, choice) =
                    functor_from_ringed_covering(self.require_covering()?, &rs).map_err(core)?;
                BuiltFunctor::Ringed { functor, choice }
            }
            FunctorSpec::Constant { n, ring } => {
                let r = Arc::new(ring.build(field, "functor.constant.ring")?);
                BuiltFunctor::Plain(nccech::cech::constant_functor(n, r).map_err(core)?)
            }
            FunctorSpec::Cover { n, overlaps } => {
                let mut set: BTreeSet<IndexTuple> = (0..n).map(IndexTuple::singleton).collect();
                for (k, t) in overlaps.iter().enumerate() {
                    let t = IndexTuple::from_one_based(t, n).map_err(|e| {
                        CliError::invalid(&format!("functor.cover.overlaps[{k}]"), e)
                    })?;
                    set.insert(t);
                }
                let description = CoverDescription::new(n, set, field)
                    .map_err(|e| CliError::invalid("functor.cover", e))?;
                let functor = functor_from_cover(&description).map_err(core)?;
                BuiltFunctor::Cover {
                    functor,
                    description,
                }
            }
            FunctorSpec::Explicit {
                n,
                rings,
                restrictions,
            } => BuiltFunctor::Plain(explicit_functor(field, n, &rings, &restrictions)?),
        })
    }
}

fn build_ideal(
    a: &Arc<Algebra>,
    field: Field,
    gens: &[Vec<Coeff>],
    at: &str,
) -> Result<Ideal, CliError> {
    let gens = gens
        .iter()
        .enumerate()
        .map(|(g, v)| {
            let at = format!("{at}[{g}]");
            if v.len() != a.dim() {
                let msg = format!(
                    "generator has {} coordinates, the algebra has dimension {}",
                    v.len(),
                    a.dim()
                );
                return Err(CliError::schema(&at, msg));
            }
            scalars(v, field, &at)
        })
        .collect::<Result<Vec<_>, _>>()?;
    if gens.is_empty() {
        return Ok(Ideal::zero(a.clone()));
    }
    ideal_closure(a, &gens).map_err(|e| CliError::invalid(at, e))
}

fn explicit_functor(
    field: Field,
    n: usize,
    rings: &[RingEntry],
    restrictions: &[RestrictionEntry],
) -> Result<PosetFunctor, CliError> {
    let mut ring_map = BTreeMap::new();
    for (k, entry) in rings.iter().enumerate() {
        let at = format!("functor.explicit.rings[{k}]");
        let t =
            IndexTuple::from_one_based(&entry.tuple, n).map_err(|e| CliError::invalid(&at, e))?;
        ring_map.insert(
            t,
            Arc::new(entry.algebra.build(field, &format!("{at}.algebra"))?),
        );
    }
    let mut maps = BTreeMap::new();
    for (k, entry) in restrictions.iter().enumerate() {
        let at = format!("functor.explicit.restrictions[{k}]");
        let from =
            IndexTuple::from_one_based(&entry.from, n).map_err(|e| CliError::invalid(&at, e))?;
        let to = IndexTuple::from_one_based(&entry.to, n).map_err(|e| CliError::invalid(&at, e))?;
        let (Some(src), Some(dst)) = (ring_map.get(&from), ring_map.get(&to)) else {
            return Err(CliError::schema(
                &at,
                "restriction between tuples without rings".into(),
            ));
        };
        let rows = entry
            .matrix
            .iter()
            .enumerate()
            .map(|(r, row)| scalars(row, field, &format!("{at}.matrix[{r}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let m = Matrix::from_rows(field, src.dim(), rows).map_err(|e| CliError::invalid(&at, e))?;
        let hom =
            AlgebraHom::new(src.clone(), dst.clone(), m).map_err(|e| CliError::invalid(&at, e))?;
        maps.insert((from, to), hom);
    }
    PosetFunctor::new(n, field, ring_map, maps)
        .map_err(|e| CliError::invalid("functor.explicit", e))
}
