//! Knot records and the JSON database.

use crate::error::{KnotError, Result};
use crate::presentation::{parse_presentation, parse_word, GroupPresentation};
use crate::word::Word;
use algebra_core::gcd::is_squarefree;
use algebra_core::{Poly, Scalar};
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

/// Sparse term list `[[e_x, e_y, num, den], …]` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TermList(pub Vec<[i64; 4]>);

impl TermList {
    pub fn to_poly(&self) -> Result<Poly> {
        let mut terms = vec![];
        for t in &self.0 {
            if t[3] == 0 {
                return Err(KnotError::InvalidRecord {
                    name: String::new(),
                    msg: "zero denominator in term list".into(),
                });
            }
            terms.push((vec![t[0] as i32, t[1] as i32], Scalar::frac(t[2], t[3])));
        }
        Ok(Poly::from_terms(&["x", "y"], terms))
    }

    /// Fails on coefficients outside the rationals or too large for `i64`.
    pub fn from_poly(p: &Poly) -> Result<TermList> {
        let bad = || KnotError::InvalidRecord { name: String::new(), msg: format!("cannot serialize {p}") };
        for v in p.used_vars() {
            if v != "x" && v != "y" {
                return Err(bad());
            }
        }
        let p = p.aligned(&["x".to_string(), "y".to_string()]);
        let mut out = vec![];
        for (e, c) in p.terms() {
            let q = c.as_rational().ok_or_else(bad)?;
            let n: i64 = i64::try_from(q.numer().clone()).map_err(|_| bad())?;
            let d: i64 = i64::try_from(q.denom().clone()).map_err(|_| bad())?;
            out.push([e[0] as i64, e[1] as i64, n, d]);
        }
        out.sort_by(|a, b| (b[0], b[1]).cmp(&(a[0], a[1])));
        Ok(TermList(out))
    }
}

/// An incompressible surface: Euler characteristic and its ideal points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Surface {
    pub chi: i64,
    pub ideal_points: Vec<String>,
}

/// How the stored `tau_mu` relates to the value printed in the literature.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TauOrientation {
    /// The stored polynomial is the printed quantity.
    #[default]
    Tau,
    /// The printed quantity is the reciprocal of the stored polynomial.
    Inverse,
}

/// Which representation family builds `ρ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Template {
    /// Upper/lower triangular meridian pair over `Z[α^{±1}][y]`.
    #[default]
    TwoBridge,
    /// `ρ(a) = (t 1; −(t²+1) −t)`, `ρ(b) = diag(−j, −j²)`.
    Trefoil,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotRecord {
    pub name: String,
    pub generators: Vec<String>,
    /// Defining relation `<word> = <word>`.
    pub relator: String,
    pub meridian: String,
    pub longitude: String,
    #[serde(rename = "P")]
    pub p: TermList,
    pub tau_mu: TermList,
    #[serde(rename = "Y_mu")]
    pub y_mu: TermList,
    pub surfaces: Vec<Surface>,
    #[serde(default)]
    pub template: Template,
    /// Peripheral word used as `μ` in the torsion form; defaults to the
    /// longitude.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<String>,
    #[serde(default)]
    pub tau_orientation: TauOrientation,
    /// `"printed"` or `"derived"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau_source: Option<String>,
    #[serde(rename = "Y_mu_printed", default, skip_serializing_if = "Option::is_none")]
    pub y_mu_printed: Option<TermList>,
}

impl KnotRecord {
    pub fn from_json(text: &str) -> Result<KnotRecord> {
        let r: KnotRecord = serde_json::from_str(text)
            .map_err(|e| KnotError::InvalidRecord { name: "<json>".into(), msg: e.to_string() })?;
        r.validate()?;
        Ok(r)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }

    fn invalid(&self, msg: impl Into<String>) -> KnotError {
        KnotError::InvalidRecord { name: self.name.clone(), msg: msg.into() }
    }

    /// Checks the record invariants: parsable words, squarefree `P`, and
    /// surfaces with `χ ≤ −1` (an annulus, `χ = 0`, is accepted and reported
    /// downstream as outside the theorem's hypotheses).
    pub fn validate(&self) -> Result<()> {
        let pres = self.presentation()?;
        self.meridian_word(&pres)?;
        self.longitude_word(&pres)?;
        self.mu_word(&pres)?;
        let p = self.p.to_poly().map_err(|_| self.invalid("bad P"))?;
        if p.is_constant() {
            return Err(self.invalid("P is constant"));
        }
        if !is_squarefree(&p) {
            return Err(self.invalid("P is not squarefree"));
        }
        self.tau_mu.to_poly().map_err(|_| self.invalid("bad tau_mu"))?;
        self.y_mu.to_poly().map_err(|_| self.invalid("bad Y_mu"))?;
        for s in &self.surfaces {
            if s.chi > 0 {
                return Err(self.invalid(format!("surface with χ = {} > 0", s.chi)));
            }
        }
        Ok(())
    }

    pub fn presentation(&self) -> Result<GroupPresentation> {
        parse_presentation(&format!("{} | {}", self.generators.join(","), self.relator))
    }

    fn gens(&self, p: &GroupPresentation) -> Vec<char> {
        p.generators().to_vec()
    }

    pub fn meridian_word(&self, p: &GroupPresentation) -> Result<Word> {
        parse_word(&self.meridian, &self.gens(p))
    }

    pub fn longitude_word(&self, p: &GroupPresentation) -> Result<Word> {
        parse_word(&self.longitude, &self.gens(p))
    }

    /// The peripheral word `μ` of the torsion form.
    pub fn mu_word(&self, p: &GroupPresentation) -> Result<Word> {
        parse_word(self.mu.as_deref().unwrap_or(&self.longitude), &self.gens(p))
    }

    pub fn polynomial_p(&self) -> Poly {
        self.p.to_poly().expect("validated")
    }

    pub fn tau(&self) -> Poly {
        self.tau_mu.to_poly().expect("validated")
    }

    pub fn y_mu_poly(&self) -> Poly {
        self.y_mu.to_poly().expect("validated")
    }

    /// `χ` of the surface assigned to an ideal-point label.
    pub fn surface_for(&self, label: &str) -> Option<i64> {
        self.surfaces.iter().find(|s| s.ideal_points.iter().any(|l| l == label)).map(|s| s.chi)
    }
}

/// Reads records from a directory of `<name>.json` files.
#[derive(Clone, Debug)]
pub struct Database {
    dir: PathBuf,
}

/// File stem for a knot name: `"5.2"` and `"5_2"` both map to `5_2`.
pub fn canonical_name(name: &str) -> String {
    name.trim().to_ascii_lowercase().replace('.', "_")
}

impl Database {
    pub fn new(dir: impl Into<PathBuf>) -> Database {
        Database { dir: dir.into() }
    }

    /// The `data/` directory shipped at the workspace root.
    pub fn bundled() -> Database {
        Database::new(Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data"))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Loads a record by name, or from an explicit `.json` path.
    pub fn load(&self, name: &str) -> Result<KnotRecord> {
        let path = if name.ends_with(".json") {
            PathBuf::from(name)
        } else {
            self.dir.join(format!("{}.json", canonical_name(name)))
        };
        let text =
            std::fs::read_to_string(&path).map_err(|_| KnotError::RecordNotFound(name.to_string()))?;
        KnotRecord::from_json(&text)
    }

    /// Names of all records, sorted.
    pub fn names(&self) -> Vec<String> {
        let mut out: Vec<String> = std::fs::read_dir(&self.dir)
            .map(|rd| {
                rd.filter_map(|e| e.ok())
                    .filter_map(|e| {
                        let p = e.path();
                        (p.extension()? == "json").then(|| p.file_stem()?.to_str().map(String::from))?
                    })
                    .collect()
            })
            .unwrap_or_default();
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn term_list_round_trip() {
        let p = Poly::parse("-x^2*y + 2*x^2 + y^2 - y/3 - 1").unwrap();
        let t = TermList::from_poly(&p).unwrap();
        assert_eq!(t.to_poly().unwrap(), p);
        assert_eq!(t.0[0], [2, 1, -1, 1]);
    }

    #[test]
    fn canonical_names() {
        assert_eq!(canonical_name("5.2"), "5_2");
        assert_eq!(canonical_name("Figure-Eight"), "figure-eight");
    }

    #[test]
    fn missing_record() {
        let db = Database::new("/nonexistent");
        assert!(matches!(db.load("nosuchknot"), Err(KnotError::RecordNotFound(_))));
    }
}
