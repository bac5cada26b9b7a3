//! Truncated dimension-datum vectors and the experiments built on them:
//! family stabilization, pointwise comparison, and separating-irrep search.
//!
//! A datum vector records dim V_λ^H for every dominant λ up to a Casimir
//! truncation, in the canonical enumeration order. Stabilization of a family
//! is always reported with finite index witnesses — the truncated lists say
//! nothing about the infinite tail, and the report never pretends otherwise.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::irreps::{enumerate_irreps, weyl_dimension};
use crate::lie::{GroupSpec, RootDatum};
use crate::subgroups::{invariant_dim, SubgroupDescriptor};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumEntry {
    pub weight: Vec<i64>,
    pub value: u64,
}

/// The truncated dimension datum of one subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumVector {
    pub group: GroupSpec,
    pub subgroup: String,
    pub truncation: u32,
    pub values: Vec<DatumEntry>,
}

impl DatumVector {
    pub fn value_at(&self, weight: &[i64]) -> Option<u64> {
        self.values
            .iter()
            .find(|e| e.weight == weight)
            .map(|e| e.value)
    }

    /// Check the defining invariants against a rebuilt datum: the domain is
    /// exactly the canonical enumeration, values sit inside the dimension
    /// box, and the trivial representation has a one-dimensional invariant
    /// space.
    pub fn validate(&self) -> Result<RootDatum> {
        let datum = self.group.build()?;
        let expected = enumerate_irreps(&datum, self.truncation);
        if expected.len() != self.values.len()
            || expected
                .iter()
                .zip(&self.values)
                .any(|(l, e)| l.coords() != e.weight.as_slice())
        {
            return Err(Error::InvalidInput(format!(
                "datum vector for `{}` does not enumerate truncation {} canonically",
                self.subgroup, self.truncation
            )));
        }
        for (lam, entry) in expected.iter().zip(&self.values) {
            let dim = weyl_dimension(&datum, lam);
            if entry.value > dim {
                return Err(Error::InvalidInput(format!(
                    "value {} at weight {:?} exceeds the dimension {}",
                    entry.value, entry.weight, dim
                )));
            }
            if lam.is_zero() && entry.value != 1 {
                return Err(Error::InvalidInput(format!(
                    "trivial representation has invariant dimension {}, expected 1",
                    entry.value
                )));
            }
        }
        Ok(datum)
    }
}

/// Evaluate dim V_λ^H over the canonical truncated enumeration.
pub fn dimension_datum(
    datum: &RootDatum,
    subgroup: &SubgroupDescriptor,
    truncation: u32,
) -> Result<DatumVector> {
    let weights = enumerate_irreps(datum, truncation);
    let values: Vec<DatumEntry> = weights
        .par_iter()
        .map(|lam| {
            invariant_dim(datum, lam, subgroup).map(|value| DatumEntry {
                weight: lam.coords().to_vec(),
                value,
            })
        })
        .collect::<Result<_>>()?;
    Ok(DatumVector {
        group: datum.group_spec(),
        subgroup: subgroup.name().to_string(),
        truncation,
        values,
    })
}

/// Pointwise comparison of two datum vectors over the same truncation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "relation", rename_all = "snake_case")]
pub enum DatumComparison {
    Equal,
    ADominates {
        witness: Vec<i64>,
    },
    BDominates {
        witness: Vec<i64>,
    },
    Incomparable {
        a_witness: Vec<i64>,
        b_witness: Vec<i64>,
    },
}

pub fn compare_data(a: &DatumVector, b: &DatumVector) -> Result<DatumComparison> {
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
    let mut a_gt: Option<Vec<i64>> = None;
    let mut b_gt: Option<Vec<i64>> = None;
    for (ea, eb) in a.values.iter().zip(&b.values) {
        debug_assert_eq!(ea.weight, eb.weight);
        if ea.value > eb.value && a_gt.is_none() {
            a_gt = Some(ea.weight.clone());
        }
        if eb.value > ea.value && b_gt.is_none() {
            b_gt = Some(ea.weight.clone());
        }
    }
    Ok(match (a_gt, b_gt) {
        (None, None) => DatumComparison::Equal,
        (Some(w), None) => DatumComparison::ADominates { witness: w },
        (None, Some(w)) => DatumComparison::BDominates { witness: w },
        (Some(wa), Some(wb)) => DatumComparison::Incomparable {
            a_witness: wa,
            b_witness: wb,
        },
    })
}

/// Stabilization evidence for one weight across a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightStabilization {
    pub weight: Vec<i64>,
    pub final_value: u64,
    /// 1-based index from which the family's values are constant, or None
    /// when only the last member carries the final value.
    pub stable_from: Option<usize>,
}

/// Finite-prefix stabilization report for a subgroup family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizationReport {
    pub group: GroupSpec,
    pub truncation: u32,
    pub family: Vec<String>,
    pub per_weight: Vec<WeightStabilization>,
    pub stabilized: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub limit: Option<DatumVector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matched_candidate: Option<String>,
}

/// Scan a family of subgroups for pointwise stabilization of their dimension
/// data at the given truncation. A weight stabilizes when a tail of length
/// at least two is constant; the report carries the earliest such index.
/// When a candidate limit is supplied and every weight stabilizes, the
/// stabilized values are compared against the candidate's datum exactly.
pub fn family_limit(
    datum: &RootDatum,
    family: &[SubgroupDescriptor],
    truncation: u32,
    candidate: Option<&SubgroupDescriptor>,
) -> Result<StabilizationReport> {
    if family.len() < 2 {
        return Err(Error::InvalidInput(
            "a family needs at least two members".into(),
        ));
    }
    let vectors: Vec<DatumVector> = family
        .par_iter()
        .map(|h| dimension_datum(datum, h, truncation))
        .collect::<Result<_>>()?;

    let weights = enumerate_irreps(datum, truncation);
    let mut per_weight = Vec::with_capacity(weights.len());
    let mut stabilized = true;
    for (idx, lam) in weights.iter().enumerate() {
        let series: Vec<u64> = vectors.iter().map(|v| v.values[idx].value).collect();
        let last = *series.last().unwrap();
        let mut from = series.len();
        while from > 1 && series[from - 2] == last {
            from -= 1;
        }
        let stable_from = if from < series.len() {
            Some(from)
        } else {
            None
        };
        if stable_from.is_none() {
            stabilized = false;
        }
        per_weight.push(WeightStabilization {
            weight: lam.coords().to_vec(),
            final_value: last,
            stable_from,
        });
    }

    let limit = if stabilized {
        Some(DatumVector {
            group: datum.group_spec(),
            subgroup: "limit".to_string(),
            truncation,
            values: per_weight
                .iter()
                .map(|w| DatumEntry {
                    weight: w.weight.clone(),
                    value: w.final_value,
                })
                .collect(),
        })
    } else {
        None
    };

    let matched_candidate = match (&limit, candidate) {
        (Some(limit_vector), Some(cand)) => {
            let cand_vector = dimension_datum(datum, cand, truncation)?;
            if cand_vector.values == limit_vector.values {
                Some(cand.name().to_string())
            } else {
                None
            }
        }
        _ => None,
    };

    Ok(StabilizationReport {
        group: datum.group_spec(),
        truncation,
        family: family.iter().map(|h| h.name().to_string()).collect(),
        per_weight,
        stabilized,
        limit,
        matched_candidate,
    })
}

/// A weight separating a nested pair of subgroups, with both values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationWitness {
    pub weight: Vec<i64>,
    pub value_sub: u64,
    pub value_super: u64,
}

/// First weight in enumeration order where the smaller subgroup of an
/// asserted inclusion H ⊂ H′ keeps strictly more invariants. Inclusion is a
/// caller obligation; for a genuine proper inclusion a witness exists at
/// some finite level, though not necessarily within the given truncation.
pub fn find_separating_irrep(
    datum: &RootDatum,
    sub: &SubgroupDescriptor,
    superset: &SubgroupDescriptor,
    max_truncation: u32,
) -> Result<Option<SeparationWitness>> {
    for lam in enumerate_irreps(datum, max_truncation) {
        let d_sub = invariant_dim(datum, &lam, sub)?;
        let d_super = invariant_dim(datum, &lam, superset)?;
        if d_sub > d_super {
            return Ok(Some(SeparationWitness {
                weight: lam.coords().to_vec(),
                value_sub: d_sub,
                value_super: d_super,
            }));
        }
    }
    Ok(None)
}
