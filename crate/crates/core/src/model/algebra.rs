//! Structure constants and their validation.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exact::{format_rational, parse_rational, GaussianRational};

use super::ModelError;

/// Dimensions and structure constants of a 2-step nilpotent Lie algebra with
/// an abelian complex structure.
///
/// `n` is the complex dimension of the tangent part `t^{1,0}`, `m` the
/// complex dimension of the (declared) center part `c^{1,0}`. The constants
/// `E^ℓ_{kj}` determine the bracket of a conjugate tangent vector with a
/// tangent vector; any array defines a valid algebra: 2-step nilpotency and
/// the abelian property hold automatically because double brackets vanish.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraSpec {
    name: String,
    n: usize,
    m: usize,
    /// Sparse constants keyed by 0-based `(l, k, j)`.
    e: BTreeMap<(usize, usize, usize), GaussianRational>,
}

impl AlgebraSpec {
    /// Builds a spec from 0-based `(l, k, j, value)` entries.
    pub fn new(
        name: &str,
        n: usize,
        m: usize,
        entries: Vec<(usize, usize, usize, GaussianRational)>,
    ) -> Result<Self, ModelError> {
        let mut e = BTreeMap::new();
        for (l, k, j, v) in entries {
            if l >= m || k >= n || j >= n {
                return Err(ModelError::ConstantOutOfRange {
                    l: l + 1,
                    k: k + 1,
                    j: j + 1,
                    n,
                    m,
                });
            }
            if !v.is_zero() {
                use std::collections::btree_map::Entry;
                match e.entry((l, k, j)) {
                    Entry::Vacant(slot) => {
                        slot.insert(v);
                    }
                    Entry::Occupied(mut slot) => {
                        *slot.get_mut() += &v;
                        if slot.get().is_zero() {
                            slot.remove();
                        }
                    }
                }
            }
        }
        Ok(AlgebraSpec {
            name: name.to_string(),
            n,
            m,
            e,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `E^ℓ_{kj}` with 0-based indices; zero when absent.
    pub fn e(&self, l: usize, k: usize, j: usize) -> GaussianRational {
        self.e
            .get(&(l, k, j))
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn e_entries(&self) -> impl Iterator<Item = (&(usize, usize, usize), &GaussianRational)> {
        self.e.iter()
    }

    /// Structural diagnostics. Every well-formed spec is accepted; the
    /// report flags whether the declared center can be the true center and
    /// whether the one-dimensional-center hypothesis of the degeneracy
    /// theorems holds.
    pub fn validate(&self) -> ValidationReport {
        let mut warnings = vec![];

        // The derived algebra only reaches the W_l that occur among the
        // bracket values: the span of the coefficient vectors (E^•_{kj}).
        if self.m > 0 {
            use crate::exact::{SparseVector, Subspace};
            let mut rows = vec![];
            for k in 0..self.n {
                for j in 0..self.n {
                    let row = SparseVector::from_pairs(
                        (0..self.m).map(|l| (l, self.e(l, k, j))),
                    );
                    if !row.is_zero() {
                        rows.push(row);
                    }
                }
            }
            let span = Subspace::from_spanning(self.m, rows);
            if span.dim() < self.m {
                // Identify which basis directions are missed for the report.
                let missed: Vec<usize> = (0..self.m)
                    .filter(|l| !span.pivots().contains(l))
                    .collect();
                warnings.push(CenterWarning::CenterExceedsDerived { missed });
            }
        }

        // A tangent generator whose row and column vanish identically
        // brackets trivially with everything, so it is secretly central.
        let mut central_t = vec![];
        for j in 0..self.n {
            let trivial = (0..self.m).all(|l| {
                (0..self.n).all(|k| self.e(l, k, j).is_zero() && self.e(l, j, k).is_zero())
            });
            if trivial {
                central_t.push(j);
            }
        }
        if !central_t.is_empty() {
            warnings.push(CenterWarning::TangentGeneratorsCentral { indices: central_t });
        }

        ValidationReport {
            n: self.n,
            m: self.m,
            m_is_one: self.m == 1,
            warnings,
        }
    }
}

/// A reason the declared center may differ from the true center.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CenterWarning {
    /// Declared center strictly contains the derived algebra: the listed
    /// `W` directions (0-based) never occur in a bracket value.
    CenterExceedsDerived { missed: Vec<usize> },
    /// The listed tangent generators (0-based) bracket trivially with
    /// everything, so the true center is larger than declared.
    TangentGeneratorsCentral { indices: Vec<usize> },
}

impl fmt::Display for CenterWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CenterWarning::CenterExceedsDerived { missed } => {
                let names: Vec<String> = missed.iter().map(|l| format!("W{}", l + 1)).collect();
                write!(
                    f,
                    "declared center strictly contains derived algebra ({} outside the bracket span)",
                    names.join(", ")
                )
            }
            CenterWarning::TangentGeneratorsCentral { indices } => {
                let names: Vec<String> = indices.iter().map(|j| format!("T{}", j + 1)).collect();
                write!(
                    f,
                    "{} bracket trivially with everything; declared center is not the true center",
                    names.join(", ")
                )
            }
        }
    }
}

/// Outcome of [`AlgebraSpec::validate`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValidationReport {
    pub n: usize,
    pub m: usize,
    /// The degeneracy theorems require a one-complex-dimensional center.
    pub m_is_one: bool,
    pub warnings: Vec<CenterWarning>,
}

impl ValidationReport {
    pub fn center_is_true_center(&self) -> bool {
        self.warnings.is_empty()
    }
}

// File format: {"name": str, "n": int, "m": int,
//               "E": [{"l","k","j","re","im"}, ...]} with 1-based indices;
// omitted entries are zero.
#[derive(Serialize, Deserialize)]
struct ConstantEntry {
    l: usize,
    k: usize,
    j: usize,
    re: String,
    im: String,
}

#[derive(Serialize, Deserialize)]
struct AlgebraSpecFile {
    name: String,
    n: usize,
    m: usize,
    #[serde(rename = "E")]
    e: Vec<ConstantEntry>,
}

impl Serialize for AlgebraSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let file = AlgebraSpecFile {
            name: self.name.clone(),
            n: self.n,
            m: self.m,
            e: self
                .e
                .iter()
                .map(|(&(l, k, j), v)| ConstantEntry {
                    l: l + 1,
                    k: k + 1,
                    j: j + 1,
                    re: format_rational(v.re()),
                    im: format_rational(v.im()),
                })
                .collect(),
        };
        file.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AlgebraSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let file = AlgebraSpecFile::deserialize(deserializer)?;
        let mut entries = vec![];
        for c in file.e {
            if c.l == 0 || c.k == 0 || c.j == 0 {
                return Err(D::Error::custom("constant indices are 1-based"));
            }
            let re = parse_rational(&c.re).map_err(D::Error::custom)?;
            let im = parse_rational(&c.im).map_err(D::Error::custom)?;
            entries.push((c.l - 1, c.k - 1, c.j - 1, GaussianRational::new(re, im)));
        }
        AlgebraSpec::new(&file.name, file.n, file.m, entries).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(p: i64, q: i64) -> GaussianRational {
        GaussianRational::from_ratio(p, q)
    }

    #[test]
    fn zero_constants_warn_about_center() {
        let spec = AlgebraSpec::new("abelian", 2, 1, vec![]).unwrap();
        let report = spec.validate();
        assert!(report.m_is_one);
        assert!(!report.center_is_true_center());
        assert!(report
            .warnings
            .iter()
            .any(|w| matches!(w, CenterWarning::CenterExceedsDerived { missed } if missed == &[0])));
        assert!(report
            .warnings
            .iter()
            .any(|w| matches!(w, CenterWarning::TangentGeneratorsCentral { indices } if indices == &[0, 1])));
    }

    #[test]
    fn heisenberg_extension_is_clean() {
        // E_11 = -i/2: the extension of the 3-dimensional Heisenberg algebra.
        let spec = AlgebraSpec::new(
            "heis_ext",
            1,
            1,
            vec![(0, 0, 0, GaussianRational::from_parts(0, 1, -1, 2))],
        )
        .unwrap();
        let report = spec.validate();
        assert!(report.m_is_one);
        assert!(report.center_is_true_center());
    }

    #[test]
    fn unproduced_center_direction_warns() {
        let spec = AlgebraSpec::new("w2-dead", 1, 2, vec![(0, 0, 0, gr(1, 1))]).unwrap();
        let report = spec.validate();
        assert!(!report.m_is_one);
        assert!(report.warnings.iter().any(
            |w| matches!(w, CenterWarning::CenterExceedsDerived { missed } if missed == &[1])
        ));
    }

    #[test]
    fn out_of_range_constant_rejected() {
        let err = AlgebraSpec::new("bad", 1, 1, vec![(0, 1, 0, gr(1, 1))]).unwrap_err();
        assert!(matches!(err, ModelError::ConstantOutOfRange { .. }));
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let spec = AlgebraSpec::new(
            "sample",
            2,
            1,
            vec![
                (0, 0, 0, GaussianRational::from_parts(0, 1, -1, 2)),
                (0, 0, 1, gr(-1, 4)),
            ],
        )
        .unwrap();
        let text = serde_json::to_string(&spec).unwrap();
        let back: AlgebraSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back, spec);
        let text2 = serde_json::to_string(&back).unwrap();
        assert_eq!(text, text2);
    }
}
