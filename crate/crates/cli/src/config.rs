//! Job configuration: one self-describing JSON file per invocation.
//!
//! The file names the group, a truncation, subgroups (inline descriptors or
//! catalog references), and families (lists of subgroup names or catalog
//! generators with parameter ranges). Families expand deterministically so
//! convergence experiments with dozens of members stay reproducible.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use dimdatum_core::subgroups::{catalog_lookup, SubgroupDescriptor, SubgroupSpec};
use dimdatum_core::{GroupSpec, RootDatum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum, Default)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FamilyMember {
    Named(String),
    Generator { catalog: String, range: [u32; 2] },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub members: Vec<FamilyMember>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub candidate: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JobConfig {
    pub group: GroupSpec,
    pub truncation: u32,
    #[serde(default)]
    pub output: OutputFormat,
    #[serde(default)]
    pub subgroups: BTreeMap<String, SubgroupSpec>,
    #[serde(default)]
    pub families: BTreeMap<String, FamilySpec>,
}

impl JobConfig {
    pub fn build_group(&self) -> dimdatum_core::Result<RootDatum> {
        self.group.build()
    }

    /// A named subgroup: a config entry, or a parameterless catalog entry as
    /// a fallback so `maximal_torus` works without boilerplate.
    pub fn resolve_subgroup(
        &self,
        datum: &RootDatum,
        name: &str,
    ) -> dimdatum_core::Result<SubgroupDescriptor> {
        match self.subgroups.get(name) {
            Some(spec) => SubgroupDescriptor::from_spec(datum, name, spec),
            None => catalog_lookup(datum, name, None).map_err(|_| {
                dimdatum_core::Error::InvalidInput(format!(
                    "subgroup `{name}` is not defined in the config and is not a \
                     parameterless catalog entry"
                ))
            }),
        }
    }

    /// Expand a named family into descriptors, in declaration order.
    pub fn resolve_family(
        &self,
        datum: &RootDatum,
        name: &str,
    ) -> dimdatum_core::Result<(Vec<SubgroupDescriptor>, Option<SubgroupDescriptor>)> {
        let spec = self.families.get(name).ok_or_else(|| {
            dimdatum_core::Error::InvalidInput(format!("family `{name}` is not defined"))
        })?;
        let mut members = Vec::new();
        for member in &spec.members {
            match member {
                FamilyMember::Named(n) => members.push(self.resolve_subgroup(datum, n)?),
                FamilyMember::Generator { catalog, range } => {
                    let [lo, hi] = *range;
                    if lo > hi {
                        return Err(dimdatum_core::Error::InvalidInput(format!(
                            "family `{name}`: empty range [{lo}, {hi}]"
                        )));
                    }
                    for p in lo..=hi {
                        members.push(catalog_lookup(datum, catalog, Some(p))?);
                    }
                }
            }
        }
        let candidate = spec
            .candidate
            .as_ref()
            .map(|c| self.resolve_subgroup(datum, c))
            .transpose()?;
        Ok((members, candidate))
    }
}

/// Parse a config, reporting the byte offset of the first error.
pub fn parse_config(source: &str) -> Result<JobConfig, String> {
    serde_json::from_str(source).map_err(|e| {
        let offset = byte_offset(source, e.line(), e.column());
        format!(
            "config parse failure at line {}, column {} (byte offset {offset}): {e}",
            e.line(),
            e.column()
        )
    })
}

fn byte_offset(source: &str, line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let mut remaining = line - 1;
    let mut offset = 0;
    for (i, b) in source.bytes().enumerate() {
        if remaining == 0 {
            return i + column.saturating_sub(1);
        }
        if b == b'\n' {
            remaining -= 1;
            offset = i + 1;
        }
    }
    offset + column.saturating_sub(1)
}
