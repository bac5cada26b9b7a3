//! Laplace spectra of homogeneous spaces G/H with a biinvariant metric.
//!
//! The λ-isotypic component of L²(G/H) contributes the Casimir eigenvalue
//! with multiplicity dim V_λ · dim V_λ^H, so the truncated spectrum is a
//! regrouping of the truncated dimension datum — and can be rebuilt from a
//! serialized datum vector without touching the subgroup again. Eigenvalues
//! are exact rationals; isospectrality stays an equality question.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::datum::DatumVector;
use crate::error::{Error, Result};
use crate::irreps::{enumerate_irreps, weyl_dimension, DominantWeight};
use crate::lie::{GroupSpec, RootDatum};
use crate::rational::Rational;
use crate::subgroups::{invariant_dim, SubgroupDescriptor};
use num_traits::Zero;

/// Fixed metric scale: the Casimir value is 2⟨λ, λ+2ρ⟩, so the round
/// 3-sphere (A1 with the trivial subgroup) has eigenvalues m(m+2).
pub const SPECTRUM_NORMALIZATION: &str =
    "eigenvalue = 2<lambda, lambda+2rho>; A1 level m maps to m(m+2)";

/// Casimir eigenvalue of the irrep with highest weight λ.
pub fn casimir_value(datum: &RootDatum, lam: &DominantWeight) -> Rational {
    datum.casimir(lam.coords())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    #[serde(with = "crate::rational::serde_rational")]
    pub eigenvalue: Rational,
    pub multiplicity: u64,
}

/// Truncated Laplace spectrum: strictly increasing eigenvalues with positive
/// multiplicities, headed by the constants at eigenvalue zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumMultiset {
    pub group: GroupSpec,
    pub subgroup: String,
    pub truncation: u32,
    pub normalization: String,
    pub entries: Vec<SpectrumEntry>,
}

impl SpectrumMultiset {
    pub fn total_multiplicity(&self) -> u64 {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn multiplicity_at(&self, eigenvalue: &Rational) -> u64 {
        self.entries
            .iter()
            .find(|e| &e.eigenvalue == eigenvalue)
            .map(|e| e.multiplicity)
            .unwrap_or(0)
    }
}

fn aggregate(
    datum: &RootDatum,
    subgroup_name: &str,
    truncation: u32,
    cells: impl Iterator<Item = (DominantWeight, u64)>,
) -> SpectrumMultiset {
    let mut grouped: BTreeMap<Rational, u64> = BTreeMap::new();
    for (lam, inv) in cells {
        let eigenvalue = casimir_value(datum, &lam);
        let dim = weyl_dimension(datum, &lam);
        let entry = grouped.entry(eigenvalue).or_insert(0);
        *entry += dim * inv;
    }
    let entries: Vec<SpectrumEntry> = grouped
        .into_iter()
        .filter(|(eig, mult)| *mult > 0 || eig.is_zero())
        .map(|(eigenvalue, multiplicity)| SpectrumEntry {
            eigenvalue,
            multiplicity,
        })
        .collect();
    debug_assert!(entries
        .first()
        .map(|e| e.eigenvalue.is_zero() && e.multiplicity >= 1)
        .unwrap_or(false));
    SpectrumMultiset {
        group: datum.group_spec(),
        subgroup: subgroup_name.to_string(),
        truncation,
        normalization: SPECTRUM_NORMALIZATION.to_string(),
        entries,
    }
}

/// Spectrum of G/H up to the Casimir truncation: multiplicity
/// dim V_λ · dim V_λ^H at each eigenvalue, zero-multiplicity eigenvalues
/// dropped (eigenvalue 0 always stays, carried by the constants).
pub fn homogeneous_spectrum(
    datum: &RootDatum,
    subgroup: &SubgroupDescriptor,
    truncation: u32,
) -> Result<SpectrumMultiset> {
    let cells: Vec<(DominantWeight, u64)> = enumerate_irreps(datum, truncation)
        .into_iter()
        .map(|lam| {
            let inv = invariant_dim(datum, &lam, subgroup)?;
            Ok((lam, inv))
        })
        .collect::<Result<_>>()?;
    Ok(aggregate(
        datum,
        subgroup.name(),
        truncation,
        cells.into_iter(),
    ))
}

/// Rebuild the spectrum from a serialized datum vector alone; bit-identical
/// to the directly computed spectrum of the same subgroup.
pub fn spectrum_from_datum(vector: &DatumVector) -> Result<SpectrumMultiset> {
    let datum = vector.validate()?;
    let cells: Vec<(DominantWeight, u64)> = vector
        .values
        .iter()
        .map(|entry| {
            let lam = DominantWeight::new(&datum, entry.weight.clone())?;
            Ok((lam, entry.value))
        })
        .collect::<Result<_>>()?;
    Ok(aggregate(
        &datum,
        &vector.subgroup,
        vector.truncation,
        cells.into_iter(),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum SpectrumComparison {
    Equal,
    FirstDifference {
        #[serde(with = "crate::rational::serde_rational")]
        eigenvalue: Rational,
        mult_a: u64,
        mult_b: u64,
    },
}

/// Exact multiset comparison in eigenvalue order; a missing eigenvalue
/// counts as multiplicity zero.
pub fn isospectral_compare(
    a: &SpectrumMultiset,
    b: &SpectrumMultiset,
) -> Result<SpectrumComparison> {
    if a.group != b.group {
        return Err(Error::GroupMismatch(format!(
            "`{}` and `{}` live in different groups",
            a.subgroup, b.subgroup
        )));
    }
    if a.truncation != b.truncation {
        return Err(Error::TruncationMismatch {
            a: a.truncation,
            b: b.truncation,
        });
    }
    let mut ia = a.entries.iter().peekable();
    let mut ib = b.entries.iter().peekable();
    loop {
        match (ia.peek(), ib.peek()) {
            (None, None) => return Ok(SpectrumComparison::Equal),
            (Some(ea), None) => {
                return Ok(SpectrumComparison::FirstDifference {
                    eigenvalue: ea.eigenvalue.clone(),
                    mult_a: ea.multiplicity,
                    mult_b: 0,
                })
            }
            (None, Some(eb)) => {
                return Ok(SpectrumComparison::FirstDifference {
                    eigenvalue: eb.eigenvalue.clone(),
                    mult_a: 0,
                    mult_b: eb.multiplicity,
                })
            }
            (Some(ea), Some(eb)) => {
                if ea.eigenvalue < eb.eigenvalue {
                    return Ok(SpectrumComparison::FirstDifference {
                        eigenvalue: ea.eigenvalue.clone(),
                        mult_a: ea.multiplicity,
                        mult_b: 0,
                    });
                }
                if eb.eigenvalue < ea.eigenvalue {
                    return Ok(SpectrumComparison::FirstDifference {
                        eigenvalue: eb.eigenvalue.clone(),
                        mult_a: 0,
                        mult_b: eb.multiplicity,
                    });
                }
                if ea.multiplicity != eb.multiplicity {
                    return Ok(SpectrumComparison::FirstDifference {
                        eigenvalue: ea.eigenvalue.clone(),
                        mult_a: ea.multiplicity,
                        mult_b: eb.multiplicity,
                    });
                }
                ia.next();
                ib.next();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datum::dimension_datum;
    use crate::lie::{build_root_datum, FactorDescriptor};
    use crate::rational::rat_int;
    use crate::subgroups::catalog_lookup;

    fn a1() -> RootDatum {
        build_root_datum(&[FactorDescriptor {
            kind: "A".into(),
            rank: 1,
        }])
        .unwrap()
    }

    fn entries(s: &SpectrumMultiset) -> Vec<(Rational, u64)> {
        s.entries
            .iter()
            .map(|e| (e.eigenvalue.clone(), e.multiplicity))
            .collect()
    }

    #[test]
    fn casimir_examples() {
        let d = a1();
        for m in 0..5i64 {
            let lam = DominantWeight::new(&d, vec![m]).unwrap();
            assert_eq!(casimir_value(&d, &lam), rat_int(m * (m + 2)));
        }
    }

    #[test]
    fn round_three_sphere() {
        let d = a1();
        let trivial = catalog_lookup(&d, "trivial", None).unwrap();
        let s = homogeneous_spectrum(&d, &trivial, 8).unwrap();
        assert_eq!(
            entries(&s),
            vec![(rat_int(0), 1), (rat_int(3), 4), (rat_int(8), 9)]
        );
    }

    #[test]
    fn real_projective_space_kills_odd_levels() {
        let d = a1();
        let z2 = catalog_lookup(&d, "cyclic", Some(2)).unwrap();
        let s = homogeneous_spectrum(&d, &z2, 8).unwrap();
        assert_eq!(entries(&s), vec![(rat_int(0), 1), (rat_int(8), 9)]);
    }

    #[test]
    fn round_two_sphere_from_the_torus() {
        let d = a1();
        let t = catalog_lookup(&d, "maximal_torus", None).unwrap();
        let s = homogeneous_spectrum(&d, &t, 8).unwrap();
        assert_eq!(entries(&s), vec![(rat_int(0), 1), (rat_int(8), 3)]);
    }

    #[test]
    fn comparison_examples() {
        let d = a1();
        let trivial = catalog_lookup(&d, "trivial", None).unwrap();
        let z2 = catalog_lookup(&d, "cyclic", Some(2)).unwrap();
        let sphere = homogeneous_spectrum(&d, &trivial, 8).unwrap();
        let projective = homogeneous_spectrum(&d, &z2, 8).unwrap();
        assert_eq!(
            isospectral_compare(&sphere, &sphere).unwrap(),
            SpectrumComparison::Equal
        );
        assert_eq!(
            isospectral_compare(&sphere, &projective).unwrap(),
            SpectrumComparison::FirstDifference {
                eigenvalue: rat_int(3),
                mult_a: 4,
                mult_b: 0,
            }
        );
    }

    #[test]
    fn lens_spaces_first_difference() {
        let d = a1();
        let z3 = catalog_lookup(&d, "cyclic", Some(3)).unwrap();
        let z4 = catalog_lookup(&d, "cyclic", Some(4)).unwrap();
        let s3 = homogeneous_spectrum(&d, &z3, 24).unwrap();
        let s4 = homogeneous_spectrum(&d, &z4, 24).unwrap();
        // Equal at eigenvalue 8 (both keep one invariant line); the lens
        // spaces part ways at level 3.
        assert_eq!(s3.multiplicity_at(&rat_int(8)), 3);
        assert_eq!(s4.multiplicity_at(&rat_int(8)), 3);
        assert_eq!(
            isospectral_compare(&s3, &s4).unwrap(),
            SpectrumComparison::FirstDifference {
                eigenvalue: rat_int(15),
                mult_a: 8,
                mult_b: 0,
            }
        );
    }

    #[test]
    fn truncation_mismatch_rejected() {
        let d = a1();
        let trivial = catalog_lookup(&d, "trivial", None).unwrap();
        let a = homogeneous_spectrum(&d, &trivial, 8).unwrap();
        let b = homogeneous_spectrum(&d, &trivial, 24).unwrap();
        assert!(isospectral_compare(&a, &b).is_err());
    }

    #[test]
    fn rebuild_from_datum_is_identical() {
        let d = a1();
        for (name, parameter) in [
            ("trivial", None),
            ("maximal_torus", None),
            ("cyclic", Some(4)),
            ("binary_tetrahedral", None),
        ] {
            let h = catalog_lookup(&d, name, parameter).unwrap();
            let direct = homogeneous_spectrum(&d, &h, 24).unwrap();
            let vector = dimension_datum(&d, &h, 24).unwrap();
            let json = serde_json::to_string(&vector).unwrap();
            let parsed: DatumVector = serde_json::from_str(&json).unwrap();
            let rebuilt = spectrum_from_datum(&parsed).unwrap();
            assert_eq!(
                serde_json::to_string(&rebuilt).unwrap(),
                serde_json::to_string(&direct).unwrap(),
                "{name}"
            );
        }
    }

    #[test]
    fn peter_weyl_total_for_the_full_group() {
        let d = a1();
        let trivial = catalog_lookup(&d, "trivial", None).unwrap();
        for n in [8u32, 24, 48] {
            let s = homogeneous_spectrum(&d, &trivial, n).unwrap();
            let expected: u64 = enumerate_irreps(&d, n)
                .iter()
                .map(|lam| {
                    let dim = weyl_dimension(&d, lam);
                    dim * dim
                })
                .sum();
            assert_eq!(s.total_multiplicity(), expected);
        }
    }

    #[test]
    fn spectrum_serialization_shape() {
        let d = a1();
        let t = catalog_lookup(&d, "maximal_torus", None).unwrap();
        let s = homogeneous_spectrum(&d, &t, 8).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert!(json.contains(
            r#""entries":[{"eigenvalue":"0","multiplicity":1},{"eigenvalue":"8","multiplicity":3}]"#
        ));
        let back: SpectrumMultiset = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }
}
