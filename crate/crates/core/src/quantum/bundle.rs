use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{ldpc_check, CssCode, Distance, LdpcReport, QuantumError, SubsystemCssCode};
use crate::f2la::io::{from_alist, to_alist};
use crate::f2la::{BitVec, F2Matrix};

const FILES: [&str; 4] = ["hx.alist", "hz.alist", "logicals_z.txt", "gauge_z.txt"];

/// Contents of params.json.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BundleParams {
    pub n: usize,
    /// dim H₁, logical plus gauge.
    pub k: usize,
    /// Logical qubits K.
    pub logical_k: usize,
    pub gauge: usize,
    pub hx_rows: usize,
    pub hz_rows: usize,
    pub dx: Option<Distance>,
    pub dz: Option<Distance>,
    pub ldpc: LdpcReport,
    /// SHA-256 over the four data files, in a fixed order.
    pub sha256: String,
    /// Construction details supplied by the caller.
    pub details: serde_json::Value,
}

#[derive(Clone, Debug)]
pub struct CodeBundle {
    pub code: SubsystemCssCode,
    pub params: BundleParams,
}

fn rows_to_text(m: &F2Matrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let sup: Vec<String> = m.row_support(i).iter().map(|j| j.to_string()).collect();
        out.push_str(&sup.join(" "));
        out.push('\n');
    }
    out
}

fn rows_from_text(text: &str, n: usize) -> Result<Vec<BitVec>, QuantumError> {
    text.lines()
        .map(|line| {
            let sup: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| QuantumError::BundleInvalid(format!("bad index {t:?}"))))
                .collect::<Result<_, _>>()?;
            if let Some(&j) = sup.iter().find(|&&j| j >= n) {
                return Err(QuantumError::BundleInvalid(format!("index {j} ≥ n = {n}")));
            }
            Ok(BitVec::from_support(n, sup))
        })
        .collect()
}

fn digest(contents: &[String]) -> String {
    let mut h = Sha256::new();
    for (name, c) in FILES.iter().zip(contents) {
        h.update(name.as_bytes());
        h.update((c.len() as u64).to_le_bytes());
        h.update(c.as_bytes());
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// Writes hx.alist, hz.alist, logicals_z.txt, gauge_z.txt and params.json.
/// Logical and gauge rows are cycle supports, one per line.
pub fn write_bundle(
    dir: &Path,
    code: &SubsystemCssCode,
    dx: Option<Distance>,
    dz: Option<Distance>,
    details: serde_json::Value,
) -> Result<BundleParams, QuantumError> {
    fs::create_dir_all(dir)?;
    let q = code.base();
    let contents =
        [to_alist(q.hx()), to_alist(q.hz()), rows_to_text(code.logical_z()), rows_to_text(code.gauge_z())];
    for (name, c) in FILES.iter().zip(&contents) {
        fs::write(dir.join(name), c)?;
    }
    let params = BundleParams {
        n: q.n(),
        k: q.k(),
        logical_k: code.k(),
        gauge: code.gauge_count(),
        hx_rows: q.hx().rows(),
        hz_rows: q.hz().rows(),
        dx,
        dz,
        ldpc: ldpc_check(q),
        sha256: digest(&contents),
        details,
    };
    fs::write(dir.join("params.json"), serde_json::to_string_pretty(&params)? + "\n")?;
    Ok(params)
}

/// Loads a bundle and re-validates it: commuting stabilizers, shapes and k
/// against params.json, and the file digest.
pub fn read_bundle(dir: &Path) -> Result<CodeBundle, QuantumError> {
    let params: BundleParams = serde_json::from_str(&fs::read_to_string(dir.join("params.json"))?)?;
    let contents: Vec<String> = FILES.iter().map(|f| fs::read_to_string(dir.join(f))).collect::<Result<_, _>>()?;
    let bad = |m: String| QuantumError::BundleInvalid(m);
    if digest(&contents) != params.sha256 {
        return Err(bad("digest does not match params.json".into()));
    }
    let hx = from_alist(&contents[0])?;
    let hz = from_alist(&contents[1])?;
    if (hx.cols(), hz.cols(), hx.rows(), hz.rows()) != (params.n, params.n, params.hx_rows, params.hz_rows) {
        return Err(bad(format!(
            "shapes {}×{} and {}×{} disagree with params.json",
            hx.rows(),
            hx.cols(),
            hz.rows(),
            hz.cols()
        )));
    }
    let q = CssCode::new(hx, hz)?;
    if q.k() != params.k {
        return Err(bad(format!("recomputed k = {} but params.json says {}", q.k(), params.k)));
    }
    let logical = rows_from_text(&contents[2], params.n)?;
    let gauge = rows_from_text(&contents[3], params.n)?;
    if (logical.len(), gauge.len()) != (params.logical_k, params.gauge) {
        return Err(bad("logical/gauge counts disagree with params.json".into()));
    }
    let code = SubsystemCssCode::new(q, &logical, &gauge)?;
    Ok(CodeBundle { code, params })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::torus_complex;
    use crate::quantum::css_from_complex;

    fn toric() -> SubsystemCssCode {
        let q = css_from_complex(&torus_complex(3).unwrap(), 1).unwrap();
        let reps: Vec<BitVec> = (0..2).map(|i| q.z_logicals().row(i)).collect();
        SubsystemCssCode::new(q, &reps[..1], &reps[1..]).unwrap()
    }

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let s = toric();
        let p = write_bundle(dir.path(), &s, None, Some(Distance::Exact { value: 3 }), serde_json::json!({"ell": 3})).unwrap();
        let b = read_bundle(dir.path()).unwrap();
        assert_eq!(b.params, p);
        assert_eq!(b.code.base().hx(), s.base().hx());
        assert_eq!(b.code.logical_z(), s.logical_z());
        assert_eq!((p.n, p.k, p.logical_k, p.gauge), (18, 2, 1, 1));
        // identical inputs give an identical digest
        let dir2 = tempfile::tempdir().unwrap();
        let p2 = write_bundle(dir2.path(), &s, None, Some(Distance::Exact { value: 3 }), serde_json::json!({"ell": 3})).unwrap();
        assert_eq!(p.sha256, p2.sha256);
    }

    #[test]
    fn tampering_is_detected() {
        let dir = tempfile::tempdir().unwrap();
        write_bundle(dir.path(), &toric(), None, None, serde_json::Value::Null).unwrap();
        fs::write(dir.path().join("gauge_z.txt"), "0 1\n").unwrap();
        assert!(matches!(read_bundle(dir.path()), Err(QuantumError::BundleInvalid(_))));
    }
}
