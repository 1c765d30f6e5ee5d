//! Instance generation and re-verification of instance files.

use rand::Rng;

use osdrazin::drazin::drazin_index;
use osdrazin::gen::{quad, trial_rng, QuadFamily};
use osdrazin::intertwine::{pair_idempotent_family, pair_planted_family, IntertwinePair};
use osdrazin::io::Instance;
use osdrazin::ringlab::FiniteRingSpec;
use osdrazin::spectra::{jordan_realize, point_index, random_jordan_spec, JordanSpec};
use osdrazin::transfer::JacobsonQuad;
use osdrazin::ScalarKind;

use crate::{CliError, CliResult};

pub const FAMILIES: &[&str] = &[
    "classical-quad",
    "solved-quad",
    "case-II-quad",
    "idempotent-pair",
    "planted-pair",
    "planted-jordan",
    "planted-index",
    "exhaustive-ring",
];

#[derive(Debug, Clone)]
pub struct GenParams {
    pub dim: usize,
    pub scalar: ScalarKind,
    /// Pair exponent.
    pub n: usize,
    /// Idempotent rank for `idempotent-pair`; random when unset.
    pub rank: Option<usize>,
    /// Drazin index for `planted-pair` and `planted-index`; random when unset.
    pub index: Option<usize>,
    /// Jordan blocks for `planted-jordan`; random when unset.
    pub spec: Option<JordanSpec>,
}

impl GenParams {
    pub fn new(dim: usize, scalar: ScalarKind) -> Self {
        GenParams { dim, scalar, n: 1, rank: None, index: None, spec: None }
    }
}

/// Generates an instance of `family` and re-verifies it before returning.
pub fn gen_instance(family: &str, params: &GenParams, seed: u64) -> CliResult<Instance> {
    let mut rng = trial_rng(seed, 0);
    let (dim, kind) = (params.dim, params.scalar);
    if dim == 0 {
        return Err(CliError::Usage("--dim must be at least 1".into()));
    }
    let needs_field = || -> CliResult<()> {
        if kind.is_field() {
            Ok(())
        } else {
            Err(CliError::Usage(format!("{family} needs a field, got {kind}")))
        }
    };
    let instance = match family {
        "classical-quad" | "solved-quad" | "case-II-quad" => {
            needs_field()?;
            let f: QuadFamily = family.parse()?;
            let [a, b, c, d] = quad(&mut rng, f, dim, kind).into_parts();
            Instance::Quad { a, b, c, d }
        }
        "idempotent-pair" => {
            let r = params.rank.unwrap_or_else(|| rng.gen_range(0..=dim));
            let p = pair_idempotent_family(&mut rng, r, dim, kind)?;
            Instance::Pair { a: p.a().clone(), b: p.b().clone(), n: p.n() }
        }
        "planted-pair" => {
            if matches!(kind, ScalarKind::Mod(_)) {
                return Err(CliError::Usage("planted-pair needs rational or gaussian scalars".into()));
            }
            let k = params.index.unwrap_or_else(|| rng.gen_range(0..=dim));
            let p = pair_planted_family(&mut rng, dim, k, params.n, kind)?;
            Instance::Pair { a: p.a().clone(), b: p.b().clone(), n: p.n() }
        }
        "planted-jordan" => {
            if matches!(kind, ScalarKind::Mod(_)) {
                return Err(CliError::Usage("planted-jordan needs rational or gaussian scalars".into()));
            }
            let spec = params.spec.clone().unwrap_or_else(|| random_jordan_spec(&mut rng, dim, kind));
            let a = jordan_realize(&spec, &mut rng);
            for lambda in spec.eigenvalues() {
                if point_index(&a, &lambda)? != spec.largest_block(&lambda) {
                    return Err(osdrazin::Error::InvariantViolation(format!("point index at {lambda} disagrees with {spec}")).into());
                }
            }
            Instance::Matrix { a }
        }
        "planted-index" => {
            needs_field()?;
            let k = params.index.unwrap_or_else(|| rng.gen_range(0..=dim));
            if k > dim {
                return Err(CliError::Usage(format!("index {k} exceeds dimension {dim}")));
            }
            let a = crate::registry::planted(&mut rng, dim, kind, k);
            if drazin_index(&a)? != k {
                return Err(osdrazin::Error::InvariantViolation(format!("planted index {k} not realized")).into());
            }
            Instance::Matrix { a }
        }
        "exhaustive-ring" => {
            let ScalarKind::Mod(m) = kind else {
                return Err(CliError::Usage("exhaustive-ring needs --scalar mod:m".into()));
            };
            Instance::Ring { dim, modulus: m }
        }
        _ => {
            return Err(CliError::Usage(format!("unknown family `{family}` (expected one of {})", FAMILIES.join(", "))));
        }
    };
    verify_instance(&instance)?;
    Ok(instance)
}

/// Re-checks the invariants of the typed wrapper behind an instance and
/// describes what was verified.
pub fn verify_instance(instance: &Instance) -> CliResult<String> {
    Ok(match instance {
        Instance::Quad { a, b, c, d } => {
            let q = JacobsonQuad::new(a.clone(), b.clone(), c.clone(), d.clone())?;
            format!("quad of dimension {} satisfies acd = dbd and dba = aca", q.dim())
        }
        Instance::Pair { a, b, n } => {
            let p = IntertwinePair::new(a.clone(), b.clone(), *n)?;
            format!("pair of dimension {} satisfies ab^{n} = b^{n}+1 and ba^{n} = a^{n}+1", p.a().dim(), n = p.n())
        }
        Instance::Matrix { a } => match a.kind() {
            k if k.is_field() => format!("matrix of dimension {} with Drazin index {}", a.dim(), drazin_index(a)?),
            _ => format!("matrix of dimension {} over {}", a.dim(), a.kind()),
        },
        Instance::Ring { dim, modulus } => {
            let ring = FiniteRingSpec::new(*dim, *modulus)?;
            format!("ring M{dim}(Z{modulus}) with {} elements", ring.element_count())
        }
    })
}
