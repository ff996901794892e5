use std::io::Write;

use balprod::algebra::FiniteGroup;
use balprod::graphs::{cayley_graph, complete_graph, cycle_graph, klein_quartic_graph, lps_graph, petersen_graph, second_eigenvalue, LabeledGraph};
use serde::Serialize;

use crate::error::{construction, CliError};

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumRow {
    pub graph: String,
    pub n: usize,
    pub s: usize,
    pub lambda2: f64,
    pub ramanujan_bound: f64,
}

fn ints(text: &str, args: &str, count: Option<usize>) -> Result<Vec<usize>, CliError> {
    let v: Vec<usize> = args
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| CliError::RecipeInvalid(format!("bad integer {x:?} in --graph {text}"))))
        .collect::<Result<_, _>>()?;
    match count {
        Some(c) if v.len() != c => Err(CliError::RecipeInvalid(format!("--graph {text} needs {c} numbers"))),
        _ => Ok(v),
    }
}

/// lps:P,Q | cycle:N | complete:N | petersen | klein | cayley-z:N,G1,G2,...
pub fn parse_graph(text: &str) -> Result<LabeledGraph, CliError> {
    let (name, args) = text.split_once(':').unwrap_or((text, ""));
    match name {
        "lps" => {
            let v = ints(text, args, Some(2))?;
            Ok(lps_graph(v[0] as u64, v[1] as u64).map_err(|e| CliError::RecipeInvalid(e.to_string()))?.graph)
        }
        "cycle" => cycle_graph(ints(text, args, Some(1))?[0]).map_err(|e| CliError::RecipeInvalid(e.to_string())),
        "complete" => Ok(complete_graph(ints(text, args, Some(1))?[0])),
        "petersen" => Ok(petersen_graph()),
        "klein" => Ok(klein_quartic_graph().map_err(construction)?.1),
        "cayley-z" => {
            let v = ints(text, args, None)?;
            if v.len() < 2 || v[0] == 0 {
                return Err(CliError::RecipeInvalid(format!("--graph {text} needs N and at least one generator")));
            }
            cayley_graph(&FiniteGroup::cyclic(v[0]), &v[1..]).map_err(|e| CliError::RecipeInvalid(e.to_string()))
        }
        _ => Err(CliError::RecipeInvalid(format!("unknown graph {text:?}"))),
    }
}

pub fn row(text: &str) -> Result<SpectrumRow, CliError> {
    let x = parse_graph(text)?;
    let lambda2 = second_eigenvalue(&x).map_err(construction)?;
    let s = x.degree();
    Ok(SpectrumRow { graph: text.to_string(), n: x.num_vertices(), s, lambda2, ramanujan_bound: 2.0 * ((s.max(1) - 1) as f64).sqrt() })
}

pub fn write_csv<W: Write>(rows: &[SpectrumRow], w: W) -> Result<(), CliError> {
    let mut out = csv::Writer::from_writer(w);
    for r in rows {
        out.serialize(r)?;
    }
    out.flush()?;
    Ok(())
}
