//! Built-in algebra families, given both as real frames and as hardcoded
//! structure constants; the two must agree (tested).

use num_rational::BigRational;

use crate::exact::GaussianRational;

use super::algebra::AlgebraSpec;
use super::frame::{complexify, RealFrameSpec};
use super::ModelError;

/// A built-in family instantiated at a concrete size.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExampleChoice {
    /// One-dimensional central extension of the real Heisenberg algebra
    /// `h_{2n+1}`: `n` complex tangent directions, center `Z, A`.
    HeisExt { n: usize },
    /// Direct sum of two Heisenberg algebras `h_{2m+1} ⊕ h_{2n+1}` with the
    /// two real center directions paired into one complex one.
    HeisSum { m: usize, n: usize },
    /// The 4k+6-dimensional family with transversal `dρ` / `dρ̄` images;
    /// block index `k` ranges over `0..=k_max`.
    W4n6 { k_max: usize },
    /// The companion family with nondegenerate `dρ`; same block layout.
    P4n2 { k_max: usize },
}

impl ExampleChoice {
    pub fn family_name(&self) -> &'static str {
        match self {
            ExampleChoice::HeisExt { .. } => "heis_ext",
            ExampleChoice::HeisSum { .. } => "heis_sum",
            ExampleChoice::W4n6 { .. } => "W4n6",
            ExampleChoice::P4n2 { .. } => "P4n2",
        }
    }

    fn instance_name(&self) -> String {
        match self {
            ExampleChoice::HeisExt { n } => format!("heis_ext(n={n})"),
            ExampleChoice::HeisSum { m, n } => format!("heis_sum(m={m},n={n})"),
            ExampleChoice::W4n6 { k_max } => format!("W4n6(k=0..{k_max})"),
            ExampleChoice::P4n2 { k_max } => format!("P4n2(k=0..{k_max})"),
        }
    }
}

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

/// The family instance as hardcoded structure constants.
pub fn builtin_example(choice: &ExampleChoice) -> Result<AlgebraSpec, ModelError> {
    let name = choice.instance_name();
    match *choice {
        ExampleChoice::HeisExt { n } => {
            if n == 0 {
                return Err(ModelError::BadExampleParams(
                    "heis_ext needs n ≥ 1".to_string(),
                ));
            }
            let e = GaussianRational::from_parts(0, 1, -1, 2);
            let entries = (0..n).map(|j| (0, j, j, e.clone())).collect();
            AlgebraSpec::new(&name, n, 1, entries)
        }
        ExampleChoice::HeisSum { m, n } => {
            if m == 0 || n == 0 {
                return Err(ModelError::BadExampleParams(
                    "heis_sum needs m ≥ 1 and n ≥ 1".to_string(),
                ));
            }
            let s_block = GaussianRational::from_parts(0, 1, -1, 2);
            let t_block = GaussianRational::from_ratio(1, 2);
            let mut entries: Vec<_> = (0..m).map(|j| (0, j, j, s_block.clone())).collect();
            entries.extend((m..m + n).map(|k| (0, k, k, t_block.clone())));
            AlgebraSpec::new(&name, m + n, 1, entries)
        }
        ExampleChoice::W4n6 { k_max } => {
            let e = GaussianRational::from_ratio(-1, 2);
            let entries = (0..=k_max)
                .map(|k| (0, 2 * k, 2 * k + 1, e.clone()))
                .collect();
            AlgebraSpec::new(&name, 2 * (k_max + 1), 1, entries)
        }
        ExampleChoice::P4n2 { k_max } => {
            let diag = GaussianRational::from_parts(0, 1, 1, 4);
            let off = GaussianRational::from_ratio(-1, 4);
            let mut entries = vec![];
            for k in 0..=k_max {
                entries.push((0, 2 * k, 2 * k, diag.clone()));
                entries.push((0, 2 * k, 2 * k + 1, off.clone()));
                entries.push((0, 2 * k + 1, 2 * k, off.clone()));
            }
            AlgebraSpec::new(&name, 2 * (k_max + 1), 1, entries)
        }
    }
}

/// The family instance as a real frame; `complexify` of this frame must
/// reproduce [`builtin_example`] exactly.
pub fn builtin_frame(choice: &ExampleChoice) -> Result<RealFrameSpec, ModelError> {
    let name = choice.instance_name();
    match *choice {
        ExampleChoice::HeisExt { n } => {
            if n == 0 {
                return Err(ModelError::BadExampleParams(
                    "heis_ext needs n ≥ 1".to_string(),
                ));
            }
            let mut gens: Vec<String> = vec![];
            for j in 1..=n {
                gens.push(format!("X{j}"));
                gens.push(format!("Y{j}"));
            }
            gens.push("Z".to_string());
            gens.push("A".to_string());
            let z = 2 * n;
            let a = 2 * n + 1;
            let mut j_map = vec![];
            for j in 0..n {
                j_map.push((2 * j + 1, 1)); // J X_j = Y_j
                j_map.push((2 * j, -1)); // J Y_j = −X_j
            }
            j_map.push((a, 1)); // J Z = A
            j_map.push((z, -1)); // J A = −Z
            let brackets = (0..n)
                .map(|j| (2 * j, 2 * j + 1, vec![(z, BigRational::from_integer(1.into()))]))
                .collect();
            let t_primaries = (0..n).map(|j| 2 * j).collect();
            RealFrameSpec::new(&name, gens, j_map, brackets, t_primaries, vec![z])
        }
        ExampleChoice::HeisSum { m, n } => {
            if m == 0 || n == 0 {
                return Err(ModelError::BadExampleParams(
                    "heis_sum needs m ≥ 1 and n ≥ 1".to_string(),
                ));
            }
            let mut gens: Vec<String> = vec![];
            for j in 1..=m {
                gens.push(format!("X{j}"));
                gens.push(format!("Y{j}"));
            }
            gens.push("Z".to_string());
            for k in 1..=n {
                gens.push(format!("A{k}"));
                gens.push(format!("B{k}"));
            }
            gens.push("C".to_string());
            let z = 2 * m;
            let c = 2 * m + 1 + 2 * n;
            let mut j_map = vec![(0usize, 0i8); gens.len()];
            for j in 0..m {
                j_map[2 * j] = (2 * j + 1, 1);
                j_map[2 * j + 1] = (2 * j, -1);
            }
            j_map[z] = (c, 1); // J Z = C
            j_map[c] = (z, -1);
            for k in 0..n {
                let a = z + 1 + 2 * k;
                j_map[a] = (a + 1, 1); // J A_k = B_k
                j_map[a + 1] = (a, -1);
            }
            let one = BigRational::from_integer(1.into());
            let mut brackets = vec![];
            for j in 0..m {
                brackets.push((2 * j, 2 * j + 1, vec![(z, one.clone())]));
            }
            for k in 0..n {
                let a = z + 1 + 2 * k;
                brackets.push((a, a + 1, vec![(c, one.clone())]));
            }
            let mut t_primaries: Vec<usize> = (0..m).map(|j| 2 * j).collect();
            t_primaries.extend((0..n).map(|k| z + 1 + 2 * k));
            RealFrameSpec::new(&name, gens, j_map, brackets, t_primaries, vec![z])
        }
        ExampleChoice::W4n6 { k_max } | ExampleChoice::P4n2 { k_max } => {
            let blocks = k_max + 1;
            let mut gens: Vec<String> = vec![];
            for k in 0..blocks {
                for r in 1..=4 {
                    gens.push(format!("X{}", 4 * k + r));
                }
            }
            gens.push("Z1".to_string());
            gens.push("Z2".to_string());
            let z1 = 4 * blocks;
            let z2 = 4 * blocks + 1;
            let mut j_map = vec![(0usize, 0i8); gens.len()];
            for k in 0..blocks {
                let x = 4 * k;
                j_map[x] = (x + 1, 1); // J X_{4k+1} = X_{4k+2}
                j_map[x + 1] = (x, -1);
                j_map[x + 2] = (x + 3, -1); // J X_{4k+3} = −X_{4k+4}
                j_map[x + 3] = (x + 2, 1);
            }
            j_map[z1] = (z2, -1); // J Z1 = −Z2
            j_map[z2] = (z1, 1);
            let mh = -half();
            let ph = half();
            let mut brackets = vec![];
            for k in 0..blocks {
                let x = 4 * k;
                match choice {
                    ExampleChoice::W4n6 { .. } => {
                        brackets.push((x, x + 2, vec![(z1, mh.clone())]));
                        brackets.push((x, x + 3, vec![(z2, mh.clone())]));
                        brackets.push((x + 1, x + 2, vec![(z2, mh.clone())]));
                        brackets.push((x + 1, x + 3, vec![(z1, ph.clone())]));
                    }
                    ExampleChoice::P4n2 { .. } => {
                        brackets.push((x, x + 1, vec![(z1, mh.clone())]));
                        brackets.push((x, x + 3, vec![(z2, mh.clone())]));
                        brackets.push((x + 1, x + 2, vec![(z2, mh.clone())]));
                    }
                    _ => unreachable!(),
                }
            }
            let mut t_primaries = vec![];
            for k in 0..blocks {
                t_primaries.push(4 * k); // T_{2k+1} from X_{4k+1}
                t_primaries.push(4 * k + 2); // T_{2k+2} from X_{4k+3}
            }
            RealFrameSpec::new(&name, gens, j_map, brackets, t_primaries, vec![z1])
        }
    }
}

/// Catalog entry: the family, its parameters, and the smallest instance's
/// frame data and derived constants.
#[derive(Clone, Debug)]
pub struct ExampleInfo {
    pub name: &'static str,
    pub parameters: &'static str,
    pub description: &'static str,
    /// Smallest instance, for display.
    pub smallest: ExampleChoice,
    /// Derived constants of the smallest instance (from the real frame).
    pub smallest_spec: AlgebraSpec,
}

/// The four built-in families.
pub fn example_catalog() -> Vec<ExampleInfo> {
    let entries: [(&'static str, &'static str, &'static str, ExampleChoice); 4] = [
        (
            "heis_ext",
            "--n <tangent pairs, ≥ 1>",
            "one-dimensional central extension of the real Heisenberg algebra h_{2n+1}; \
             [X_j, Y_j] = Z, J: X_j↦Y_j, Z↦A",
            ExampleChoice::HeisExt { n: 1 },
        ),
        (
            "heis_sum",
            "--m <first block, ≥ 1> --n <second block, ≥ 1>",
            "direct sum of Heisenberg algebras h_{2m+1} ⊕ h_{2n+1}; [X_j, Y_j] = Z, \
             [A_k, B_k] = C, J: X_j↦Y_j, A_k↦B_k, Z↦C",
            ExampleChoice::HeisSum { m: 1, n: 1 },
        ),
        (
            "W4n6",
            "--k <max block index, ≥ 0>",
            "4(k+1)+2 real dimensions; per block [X1,X3] = −Z1/2, [X1,X4] = [X2,X3] = −Z2/2, \
             [X2,X4] = Z1/2, J: X1↦X2, X3↦−X4, Z1↦−Z2 (degenerate dρ̄)",
            ExampleChoice::W4n6 { k_max: 0 },
        ),
        (
            "P4n2",
            "--k <max block index, ≥ 0>",
            "4(k+1)+2 real dimensions; per block [X1,X2] = −Z1/2, [X1,X4] = [X2,X3] = −Z2/2, \
             J: X1↦X2, X3↦−X4, Z1↦−Z2 (nondegenerate dρ)",
            ExampleChoice::P4n2 { k_max: 0 },
        ),
    ];
    entries
        .into_iter()
        .map(|(name, parameters, description, smallest)| {
            let frame = builtin_frame(&smallest).expect("catalog sizes are valid");
            let smallest_spec = complexify(&frame).expect("catalog frames complexify");
            ExampleInfo {
                name,
                parameters,
                description,
                smallest,
                smallest_spec,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heis_ext_constants() {
        let spec = builtin_example(&ExampleChoice::HeisExt { n: 1 }).unwrap();
        assert_eq!(spec.n(), 1);
        assert_eq!(spec.m(), 1);
        assert_eq!(spec.e(0, 0, 0), GaussianRational::from_parts(0, 1, -1, 2));
    }

    #[test]
    fn heis_sum_constants_diag() {
        let spec = builtin_example(&ExampleChoice::HeisSum { m: 1, n: 1 }).unwrap();
        assert_eq!(spec.n(), 2);
        assert_eq!(spec.e(0, 0, 0), GaussianRational::from_parts(0, 1, -1, 2));
        assert_eq!(spec.e(0, 1, 1), GaussianRational::from_ratio(1, 2));
        assert!(spec.e(0, 0, 1).is_zero());
    }

    #[test]
    fn p4n2_block_constants() {
        let spec = builtin_example(&ExampleChoice::P4n2 { k_max: 0 }).unwrap();
        assert_eq!(spec.n(), 2);
        assert_eq!(spec.e(0, 0, 0), GaussianRational::from_parts(0, 1, 1, 4));
        assert_eq!(spec.e(0, 0, 1), GaussianRational::from_ratio(-1, 4));
        assert_eq!(spec.e(0, 1, 0), GaussianRational::from_ratio(-1, 4));
        assert!(spec.e(0, 1, 1).is_zero());
    }

    #[test]
    fn w4n6_block_constants() {
        let spec = builtin_example(&ExampleChoice::W4n6 { k_max: 1 }).unwrap();
        assert_eq!(spec.n(), 4);
        let e = GaussianRational::from_ratio(-1, 2);
        assert_eq!(spec.e(0, 0, 1), e);
        assert_eq!(spec.e(0, 2, 3), e);
        assert!(spec.e(0, 1, 0).is_zero());
    }

    #[test]
    fn catalog_has_four_families() {
        let catalog = example_catalog();
        assert_eq!(catalog.len(), 4);
        let names: Vec<&str> = catalog.iter().map(|e| e.name).collect();
        assert_eq!(names, vec!["heis_ext", "heis_sum", "W4n6", "P4n2"]);
    }

    #[test]
    fn invalid_sizes_rejected() {
        assert!(builtin_example(&ExampleChoice::HeisExt { n: 0 }).is_err());
        assert!(builtin_example(&ExampleChoice::HeisSum { m: 0, n: 1 }).is_err());
    }
}
