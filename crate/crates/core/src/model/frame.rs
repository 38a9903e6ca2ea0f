//! Real frames and their complexification.
//!
//! A real frame describes the algebra the way the examples are usually
//! given: a named real basis, an antisymmetric bracket table landing in the
//! center span, and the complex structure as a signed permutation of the
//! basis. Complexification reads off the structure constants of the complex
//! frame `T_j = ½(A_j − i·JA_j)`, `W_ℓ = ½(C_ℓ − i·JC_ℓ)` built over chosen
//! primary generators.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exact::{format_rational, parse_rational, GaussianRational};

use super::algebra::AlgebraSpec;
use super::ModelError;

/// A 2-step nilpotent Lie algebra given by a real basis with a compatible
/// almost complex structure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RealFrameSpec {
    name: String,
    generators: Vec<String>,
    /// `J(generator i) = sign · generator target`.
    j_map: Vec<(usize, i8)>,
    /// Antisymmetric table, stored with `a < b`; values are real combinations
    /// of center generators.
    brackets: BTreeMap<(usize, usize), Vec<(usize, BigRational)>>,
    /// Ordered primaries spanning the tangent part: `T_j = ½(A_j − i·JA_j)`.
    t_primaries: Vec<usize>,
    /// Ordered primaries spanning the center part: `W_ℓ = ½(C_ℓ − i·JC_ℓ)`.
    c_primaries: Vec<usize>,
}

impl RealFrameSpec {
    pub fn new(
        name: &str,
        generators: Vec<String>,
        j_map: Vec<(usize, i8)>,
        bracket_entries: Vec<(usize, usize, Vec<(usize, BigRational)>)>,
        t_primaries: Vec<usize>,
        c_primaries: Vec<usize>,
    ) -> Result<Self, ModelError> {
        let mut brackets = BTreeMap::new();
        for (a, b, value) in bracket_entries {
            if a == b {
                return Err(ModelError::BadFrame(format!(
                    "bracket of {} with itself declared",
                    generators[a]
                )));
            }
            let (key, flip) = if a < b { ((a, b), false) } else { ((b, a), true) };
            let mut value: Vec<(usize, BigRational)> = value
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(g, c)| (g, if flip { -c } else { c }))
                .collect();
            value.sort_by_key(|(g, _)| *g);
            if brackets.insert(key, value).is_some() {
                return Err(ModelError::BadFrame(format!(
                    "bracket of {} and {} declared twice",
                    generators[key.0], generators[key.1]
                )));
            }
        }
        let frame = RealFrameSpec {
            name: name.to_string(),
            generators,
            j_map,
            brackets,
            t_primaries,
            c_primaries,
        };
        frame.check()?;
        Ok(frame)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn t_dim(&self) -> usize {
        self.t_primaries.len()
    }

    pub fn c_dim(&self) -> usize {
        self.c_primaries.len()
    }

    fn gen_index(&self, name: &str) -> Result<usize, ModelError> {
        self.generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| ModelError::UnknownGenerator(name.to_string()))
    }

    /// `[gen a, gen b]` as a real combination of center generators.
    fn bracket(&self, a: usize, b: usize) -> Vec<(usize, BigRational)> {
        if a == b {
            return vec![];
        }
        let (key, flip) = if a < b { ((a, b), false) } else { ((b, a), true) };
        match self.brackets.get(&key) {
            None => vec![],
            Some(v) if !flip => v.clone(),
            Some(v) => v.iter().map(|(g, c)| (*g, -c)).collect(),
        }
    }

    /// The generators spanning the declared center (primaries and their
    /// J-images).
    fn center_generators(&self) -> Vec<usize> {
        let mut out = vec![];
        for &c in &self.c_primaries {
            out.push(c);
            out.push(self.j_map[c].0);
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    fn check(&self) -> Result<(), ModelError> {
        let count = self.generators.len();
        if self.j_map.len() != count {
            return Err(ModelError::BadFrame(
                "J table must cover every generator".to_string(),
            ));
        }
        for (i, &(target, sign)) in self.j_map.iter().enumerate() {
            if target >= count || sign.abs() != 1 {
                return Err(ModelError::BadFrame(format!(
                    "J entry for {} is malformed",
                    self.generators[i]
                )));
            }
            let (t2, s2) = self.j_map[target];
            if t2 != i || sign * s2 != -1 {
                return Err(ModelError::BadFrame(format!(
                    "J∘J ≠ −identity at {}",
                    self.generators[i]
                )));
            }
        }

        // Primaries and their J-images partition the basis.
        let mut seen = vec![false; count];
        for &p in self.t_primaries.iter().chain(&self.c_primaries) {
            if p >= count {
                return Err(ModelError::BadFrame("primary index out of range".into()));
            }
            let partner = self.j_map[p].0;
            for idx in [p, partner] {
                if seen[idx] {
                    return Err(ModelError::BadFrame(format!(
                        "generator {} claimed by two complex pairs",
                        self.generators[idx]
                    )));
                }
                seen[idx] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(ModelError::BadFrame(
                "primaries and their J-images must cover the basis".to_string(),
            ));
        }

        // Brackets land in the center span and never involve center
        // generators as arguments.
        let center = self.center_generators();
        for (&(a, b), value) in &self.brackets {
            if value.is_empty() {
                continue;
            }
            if center.binary_search(&a).is_ok() || center.binary_search(&b).is_ok() {
                return Err(ModelError::BadFrame(format!(
                    "declared center generator occurs in a nonzero bracket [{}, {}]",
                    self.generators[a], self.generators[b]
                )));
            }
            for (g, _) in value {
                if center.binary_search(g).is_err() {
                    return Err(ModelError::BracketOutsideCenter {
                        a: self.generators[a].clone(),
                        b: self.generators[b].clone(),
                    });
                }
            }
        }

        // Abelian complex structure: [JA, JB] = [A, B] for all pairs.
        for a in 0..count {
            for b in (a + 1)..count {
                let (ja, sa) = self.j_map[a];
                let (jb, sb) = self.j_map[b];
                let mut lhs = self.bracket(ja, jb);
                if sa * sb == -1 {
                    for (_, c) in lhs.iter_mut() {
                        *c = -c.clone();
                    }
                }
                let rhs = self.bracket(a, b);
                if normalise(lhs) != normalise(rhs) {
                    return Err(ModelError::BadFrame(format!(
                        "complex structure is not abelian: [J{0}, J{1}] ≠ [{0}, {1}]",
                        self.generators[a], self.generators[b]
                    )));
                }
            }
        }
        Ok(())
    }
}

fn normalise(mut v: Vec<(usize, BigRational)>) -> Vec<(usize, BigRational)> {
    v.retain(|(_, c)| !c.is_zero());
    v.sort_by_key(|(g, _)| *g);
    v
}

/// Reads off the structure constants of the complexified frame.
///
/// Fails if a computed bracket has a component outside the span of the
/// `W_ℓ, W̄_ℓ` (impossible for frames that pass their invariants, kept as a
/// hard check).
pub fn complexify(frame: &RealFrameSpec) -> Result<AlgebraSpec, ModelError> {
    let n = frame.t_dim();
    let m = frame.c_dim();
    // Position of each center generator inside the (C_ℓ, JC_ℓ) coordinates.
    let mut center_coord: BTreeMap<usize, (usize, bool)> = BTreeMap::new();
    for (l, &c) in frame.c_primaries.iter().enumerate() {
        center_coord.insert(c, (l, false));
        center_coord.insert(frame.j_map[c].0, (l, true));
    }

    let i_unit = GaussianRational::i();
    let quarter = GaussianRational::from_ratio(1, 4);
    let mut entries = vec![];
    let mut w_bar: BTreeMap<(usize, usize, usize), GaussianRational> = BTreeMap::new();

    for (k, &ak) in frame.t_primaries.iter().enumerate() {
        let (jak, sk) = frame.j_map[ak];
        for (j, &aj) in frame.t_primaries.iter().enumerate() {
            let (jaj, sj) = frame.j_map[aj];
            // [T̄_k, T_j] = ¼([A_k,A_j] + i·[JA_k,A_j] − i·[A_k,JA_j] + [JA_k,JA_j])
            // with JA = sign·(target generator).
            let mut acc: BTreeMap<usize, GaussianRational> = BTreeMap::new();
            let mut add = |terms: Vec<(usize, BigRational)>, factor: GaussianRational| {
                for (g, c) in terms {
                    let contrib = &factor
                        * &GaussianRational::new(c, BigRational::zero());
                    let slot = acc.entry(g).or_insert_with(GaussianRational::zero);
                    *slot += &contrib;
                }
            };
            add(frame.bracket(ak, aj), GaussianRational::one());
            add(frame.bracket(jak, aj), signed(i_unit.clone(), sk));
            add(frame.bracket(ak, jaj), signed(-i_unit.clone(), sj));
            add(
                frame.bracket(jak, jaj),
                signed(GaussianRational::one(), sk * sj),
            );

            // Convert center coordinates to W / W̄: C_ℓ = W_ℓ + W̄_ℓ and
            // JC_ℓ = i·s_ℓ·(W_ℓ − W̄_ℓ) where J C_ℓ = s_ℓ·D_ℓ.
            let mut w_coeff = vec![GaussianRational::zero(); m];
            let mut wbar_coeff = vec![GaussianRational::zero(); m];
            for (g, c) in acc {
                if c.is_zero() {
                    continue;
                }
                let c = (&c) * &quarter;
                match center_coord.get(&g) {
                    None => {
                        return Err(ModelError::BracketOutsideCenter {
                            a: frame.generators[ak].clone(),
                            b: frame.generators[aj].clone(),
                        })
                    }
                    Some(&(l, false)) => {
                        w_coeff[l] += &c;
                        wbar_coeff[l] += &c;
                    }
                    Some(&(l, true)) => {
                        // g is the J-image D_ℓ with J C_ℓ = s·D_ℓ, so
                        // D_ℓ = i·s·(W_ℓ − W̄_ℓ).
                        let s = frame.j_map[frame.c_primaries[l]].1;
                        let factor = signed(i_unit.clone(), s);
                        let term = (&c) * &factor;
                        w_coeff[l] += &term;
                        wbar_coeff[l] -= &term;
                    }
                }
            }
            for (l, c) in w_coeff.into_iter().enumerate() {
                if !c.is_zero() {
                    entries.push((l, k, j, c));
                }
            }
            for (l, c) in wbar_coeff.into_iter().enumerate() {
                if !c.is_zero() {
                    w_bar.insert((l, k, j), c);
                }
            }
        }
    }

    let spec = AlgebraSpec::new(frame.name(), n, m, entries)?;
    // Structural cross-check: the W̄ part must read −Ē^ℓ_{jk}.
    for l in 0..m {
        for k in 0..n {
            for j in 0..n {
                let got = w_bar
                    .get(&(l, k, j))
                    .cloned()
                    .unwrap_or_else(GaussianRational::zero);
                let expected = -spec.e(l, j, k).conj();
                if got != expected {
                    return Err(ModelError::BadFrame(format!(
                        "conjugate part of [T̄_{}, T_{}] is inconsistent",
                        k + 1,
                        j + 1
                    )));
                }
            }
        }
    }
    Ok(spec)
}

fn signed(v: GaussianRational, sign: i8) -> GaussianRational {
    if sign >= 0 {
        v
    } else {
        -v
    }
}

// File format mirrors the algebra-spec format with "brackets" and "J" tables.
#[derive(Serialize, Deserialize)]
struct JEntry {
    from: String,
    to: String,
    sign: i8,
}

#[derive(Serialize, Deserialize)]
struct BracketValue {
    gen: String,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct BracketEntry {
    a: String,
    b: String,
    value: Vec<BracketValue>,
}

#[derive(Serialize, Deserialize)]
struct RealFrameFile {
    name: String,
    generators: Vec<String>,
    #[serde(rename = "J")]
    j: Vec<JEntry>,
    brackets: Vec<BracketEntry>,
    t_primaries: Vec<String>,
    c_primaries: Vec<String>,
}

impl Serialize for RealFrameSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let file = RealFrameFile {
            name: self.name.clone(),
            generators: self.generators.clone(),
            j: self
                .j_map
                .iter()
                .enumerate()
                .map(|(i, &(t, s))| JEntry {
                    from: self.generators[i].clone(),
                    to: self.generators[t].clone(),
                    sign: s,
                })
                .collect(),
            brackets: self
                .brackets
                .iter()
                .filter(|(_, v)| !v.is_empty())
                .map(|(&(a, b), value)| BracketEntry {
                    a: self.generators[a].clone(),
                    b: self.generators[b].clone(),
                    value: value
                        .iter()
                        .map(|(g, c)| BracketValue {
                            gen: self.generators[*g].clone(),
                            coeff: format_rational(c),
                        })
                        .collect(),
                })
                .collect(),
            t_primaries: self
                .t_primaries
                .iter()
                .map(|&i| self.generators[i].clone())
                .collect(),
            c_primaries: self
                .c_primaries
                .iter()
                .map(|&i| self.generators[i].clone())
                .collect(),
        };
        file.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RealFrameSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let file = RealFrameFile::deserialize(deserializer)?;
        let lookup = |name: &str| -> Result<usize, D::Error> {
            file.generators
                .iter()
                .position(|g| g == name)
                .ok_or_else(|| D::Error::custom(format!("unknown generator {name:?}")))
        };
        if file.j.len() != file.generators.len() {
            return Err(D::Error::custom("J table must cover every generator"));
        }
        let mut j_map = vec![(usize::MAX, 0i8); file.generators.len()];
        for entry in &file.j {
            let from = lookup(&entry.from)?;
            let to = lookup(&entry.to)?;
            if j_map[from].0 != usize::MAX {
                return Err(D::Error::custom(format!(
                    "duplicate J entry for {:?}",
                    entry.from
                )));
            }
            j_map[from] = (to, entry.sign);
        }
        let mut bracket_entries = vec![];
        for b in &file.brackets {
            let a_idx = lookup(&b.a)?;
            let b_idx = lookup(&b.b)?;
            let mut value = vec![];
            for v in &b.value {
                value.push((
                    lookup(&v.gen)?,
                    parse_rational(&v.coeff).map_err(D::Error::custom)?,
                ));
            }
            bracket_entries.push((a_idx, b_idx, value));
        }
        let t_primaries = file
            .t_primaries
            .iter()
            .map(|g| lookup(g))
            .collect::<Result<Vec<_>, _>>()?;
        let c_primaries = file
            .c_primaries
            .iter()
            .map(|g| lookup(g))
            .collect::<Result<Vec<_>, _>>()?;
        RealFrameSpec::new(
            &file.name,
            file.generators,
            j_map,
            bracket_entries,
            t_primaries,
            c_primaries,
        )
        .map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::examples::{builtin_example, builtin_frame, ExampleChoice};

    #[test]
    fn heisenberg_extension_complexifies() {
        let frame = builtin_frame(&ExampleChoice::HeisExt { n: 2 }).unwrap();
        let spec = complexify(&frame).unwrap();
        assert_eq!(spec.n(), 2);
        assert_eq!(spec.m(), 1);
        let expected = GaussianRational::from_parts(0, 1, -1, 2);
        assert_eq!(spec.e(0, 0, 0), expected);
        assert_eq!(spec.e(0, 1, 1), expected);
        assert!(spec.e(0, 0, 1).is_zero());
    }

    #[test]
    fn all_families_match_their_hardcoded_constants() {
        let choices = [
            ExampleChoice::HeisExt { n: 1 },
            ExampleChoice::HeisExt { n: 3 },
            ExampleChoice::HeisSum { m: 1, n: 1 },
            ExampleChoice::HeisSum { m: 2, n: 1 },
            ExampleChoice::HeisSum { m: 1, n: 2 },
            ExampleChoice::W4n6 { k_max: 0 },
            ExampleChoice::W4n6 { k_max: 2 },
            ExampleChoice::P4n2 { k_max: 0 },
            ExampleChoice::P4n2 { k_max: 2 },
        ];
        for choice in choices {
            let frame = builtin_frame(&choice).unwrap();
            let derived = complexify(&frame).unwrap();
            let hardcoded = builtin_example(&choice).unwrap();
            assert_eq!(derived, hardcoded, "family {choice:?}");
        }
    }

    #[test]
    fn non_abelian_frame_rejected() {
        // J maps X1 ↦ X2 but [X1, X3] ≠ [X2, X4]-compatible data: build a
        // frame violating [JA, JB] = [A, B].
        let gens: Vec<String> = ["X1", "X2", "X3", "X4", "Z", "A"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let j = vec![(1, 1), (0, -1), (3, 1), (2, -1), (5, 1), (4, -1)];
        let one = BigRational::from_integer(1.into());
        // [X1, X3] = Z with no compensating [X2, X4] bracket.
        let brackets = vec![(0usize, 2usize, vec![(4usize, one)])];
        let err = RealFrameSpec::new("bad", gens, j, brackets, vec![0, 2], vec![4]).unwrap_err();
        assert!(matches!(err, ModelError::BadFrame(_)));
    }

    #[test]
    fn frame_json_round_trip() {
        let frame = builtin_frame(&ExampleChoice::W4n6 { k_max: 1 }).unwrap();
        let text = serde_json::to_string_pretty(&frame).unwrap();
        let back: RealFrameSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back, frame);
        assert_eq!(serde_json::to_string_pretty(&back).unwrap(), text);
    }
}
