use balprod::algebra::{is_prime, legendre};
use balprod::classical::{CodeRecipe, GvParams};
use serde::Serialize;

use crate::error::CliError;

/// Largest |PGL(2, q)| = q(q² − 1) accepted by `build`.
pub const MAX_VERTICES: u64 = 5000;
/// Largest degree s = p + 1 accepted by `build`.
pub const MAX_DEGREE: u64 = 32;
/// GV+ trials before giving up.
pub const GV_MAX_TRIALS: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Labeling {
    Canonical,
    Search,
}

#[derive(Clone, Debug, Serialize)]
pub struct Recipe {
    pub p: u64,
    pub q: u64,
    pub ell: u64,
    pub local: CodeRecipe,
    pub labeling: Labeling,
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::RecipeInvalid(msg.into())
}

/// hamming7 | bch:S,T | goppa:M,G0.G1...  | gv:DELTA,SEED | check:ROW,ROW,...
pub fn parse_local(text: &str, s: usize) -> Result<CodeRecipe, CliError> {
    let (name, args) = text.split_once(':').unwrap_or((text, ""));
    let nums = |a: &str| -> Result<Vec<String>, CliError> {
        let v: Vec<String> = a.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect();
        Ok(v)
    };
    let int = |x: &str| x.parse::<usize>().map_err(|_| bad(format!("bad integer {x:?} in --local {text}")));
    let parts = nums(args)?;
    match (name, parts.len()) {
        ("hamming7", 0) => Ok(CodeRecipe::Hamming74),
        ("bch", 2) => Ok(CodeRecipe::Bch { s: int(&parts[0])?, t: int(&parts[1])? }),
        ("goppa", 2) => {
            let m = int(&parts[0])? as u32;
            let g = parts[1].split('.').map(|c| int(c).map(|v| v as u16)).collect::<Result<_, _>>()?;
            Ok(CodeRecipe::Goppa { m, g, locators: None })
        }
        ("gv", 2) => {
            let delta = parts[0].parse::<f64>().map_err(|_| bad(format!("bad δ {:?}", parts[0])))?;
            let seed = parts[1].parse::<u64>().map_err(|_| bad(format!("bad seed {:?}", parts[1])))?;
            Ok(CodeRecipe::Gv(GvParams { s, delta, rate_floor: 0.0, seed, max_trials: GV_MAX_TRIALS }))
        }
        ("check", n) if n > 0 => Ok(CodeRecipe::Check { rows: parts }),
        _ => Err(bad(format!("unknown local code {text:?}; expected hamming7, bch:S,T, goppa:M,G, gv:DELTA,SEED or check:ROWS"))),
    }
}

impl Recipe {
    /// Checks the preconditions of the explicit family before anything is
    /// built: distinct odd primes, (p/q) = −1, q > 2√p, ℓ = q odd, and the
    /// desk-scale envelope.
    pub fn new(p: u64, q: u64, ell: Option<u64>, local: &str, labeling: Labeling) -> Result<Self, CliError> {
        if !(is_prime(p) && is_prime(q) && p != q && p > 2 && q > 2) {
            return Err(bad(format!("p = {p}, q = {q} must be distinct odd primes")));
        }
        let vertices = q * (q * q - 1);
        if vertices > MAX_VERTICES || p + 1 > MAX_DEGREE {
            return Err(bad(format!(
                "X_{{{p},{q}}} has {vertices} vertices of degree {}; the supported envelope is ≤ {MAX_VERTICES} vertices and \
                 degree ≤ {MAX_DEGREE} (the reference choice p = 401 is far outside it)",
                p + 1
            )));
        }
        let leg = legendre(p as i64, q).map_err(|e| bad(e.to_string()))?;
        if leg != -1 {
            return Err(bad(format!("(p/q) = ({p}/{q}) = {leg}; need −1 so that X_{{p,q}} is a Cayley graph of PGL(2,q)")));
        }
        if (q * q) as f64 <= 4.0 * p as f64 {
            return Err(bad(format!("q = {q} must exceed 2√p = {:.3}", 2.0 * (p as f64).sqrt())));
        }
        let ell = ell.unwrap_or(q);
        if ell % 2 == 0 {
            return Err(bad(format!("ℓ = {ell} must be odd")));
        }
        if ell != q {
            return Err(bad(format!("ℓ = {ell}: the unipotent subgroup has order q = {q}, so ℓ must equal q")));
        }
        let local = parse_local(local, (p + 1) as usize)?;
        Ok(Self { p, q, ell, local, labeling })
    }
}
