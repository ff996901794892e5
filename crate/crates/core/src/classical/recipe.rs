use serde::{Deserialize, Serialize};

use super::gv::{gv_plus_search, GvParams};
use super::{bch_code, full_space, goppa_code, hamming_7_4, non_roots, repetition_code, ClassicalError, LinearCode};
use crate::algebra::{Gf2m, Poly};
use crate::f2la::F2Matrix;

/// How to construct a local code; the CLI's code registry maps names to
/// these.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CodeRecipe {
    Hamming74,
    Repetition { n: usize },
    FullSpace { n: usize },
    Bch { s: usize, t: usize },
    /// `g` lists coefficients lowest degree first as field bit patterns;
    /// without `locators` all non-roots of g are used in increasing order.
    Goppa { m: u32, g: Vec<u16>, locators: Option<Vec<u16>> },
    Gv(GvParams),
    /// Parity-check rows as strings of '0'/'1'.
    Check { rows: Vec<String> },
}

impl CodeRecipe {
    pub fn build(&self) -> Result<LinearCode, ClassicalError> {
        match self {
            CodeRecipe::Hamming74 => Ok(hamming_7_4()),
            CodeRecipe::Repetition { n } => Ok(repetition_code(*n)),
            CodeRecipe::FullSpace { n } => Ok(full_space(*n)),
            CodeRecipe::Bch { s, t } => bch_code(*s, *t),
            CodeRecipe::Goppa { m, g, locators } => {
                let f = Gf2m::new(*m)?;
                let g = Poly::new(g.clone());
                let locs = locators.clone().unwrap_or_else(|| non_roots(&f, &g));
                goppa_code(&f, &g, &locs)
            }
            CodeRecipe::Gv(p) => Ok(gv_plus_search(p)?.code),
            CodeRecipe::Check { rows } => {
                let parsed: Vec<Vec<u8>> = rows
                    .iter()
                    .map(|r| {
                        r.chars()
                            .map(|ch| match ch {
                                '0' => Ok(0),
                                '1' => Ok(1),
                                _ => Err(ClassicalError::DomainError(format!("bad bit {ch:?} in check row"))),
                            })
                            .collect()
                    })
                    .collect::<Result<_, _>>()?;
                let n = parsed.first().map_or(0, Vec::len);
                if parsed.iter().any(|r| r.len() != n) {
                    return Err(ClassicalError::DomainError("check rows have different lengths".into()));
                }
                Ok(LinearCode::from_check(F2Matrix::from_rows(&parsed)))
            }
        }
    }
}
