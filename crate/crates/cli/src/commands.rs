//! Command implementations and their table/JSON renderings.
//!
//! Exit codes are a stable scripting contract: 0 for success or an
//! affirmative verdict, 1 for a negative verdict (not stabilized, spectra
//! differ, no separating witness), 2 for input errors, 3 for internal
//! consistency failures inside the engine.

use serde::Serialize;

use dimdatum_core::datum::{dimension_datum, family_limit, find_separating_irrep};
use dimdatum_core::spectral::{homogeneous_spectrum, isospectral_compare, SpectrumComparison};
use dimdatum_core::subgroups::{catalog_lookup, catalog_names};
use dimdatum_core::{weyl_dimension, DominantWeight, Error as CoreError, RootDatum};

use crate::config::{JobConfig, OutputFormat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_ENGINE: i32 = 3;

/// A failure with the exit code it maps to.
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let code = match &e {
            CoreError::Integrality { .. } | CoreError::CatalogValidation { .. } => EXIT_ENGINE,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

pub type CmdResult = Result<i32, Failure>;

fn emit_json<T: Serialize>(value: &T) {
    let line = serde_json::to_string(value).expect("serialization cannot fail");
    println!("{line}");
}

fn weight_label(coords: &[i64]) -> String {
    coords
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn cmd_datum(
    config: &JobConfig,
    name: &str,
    truncation: u32,
    format: OutputFormat,
) -> CmdResult {
    let datum = config.build_group()?;
    let subgroup = config.resolve_subgroup(&datum, name)?;
    let vector = dimension_datum(&datum, &subgroup, truncation)?;
    match format {
        OutputFormat::Json => emit_json(&vector),
        OutputFormat::Table => {
            println!("# group {datum}, subgroup {name}, truncation {truncation}");
            println!("{:<16} {:>8} {:>10}", "weight", "dim V", "dim V^H");
            for entry in &vector.values {
                let lam = DominantWeight::new(&datum, entry.weight.clone()).expect("enumerated");
                println!(
                    "{:<16} {:>8} {:>10}",
                    weight_label(&entry.weight),
                    weyl_dimension(&datum, &lam),
                    entry.value
                );
            }
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_limit(
    config: &JobConfig,
    name: &str,
    truncation: u32,
    format: OutputFormat,
) -> CmdResult {
    let datum = config.build_group()?;
    let (members, candidate) = config.resolve_family(&datum, name)?;
    let report = family_limit(&datum, &members, truncation, candidate.as_ref())?;
    let affirmative =
        report.stabilized && (candidate.is_none() || report.matched_candidate.is_some());
    match format {
        OutputFormat::Json => emit_json(&report),
        OutputFormat::Table => {
            println!(
                "# group {datum}, family {name} ({} members), truncation {truncation}",
                report.family.len()
            );
            println!(
                "{:<16} {:>12} {:>14}",
                "weight", "final value", "stable from"
            );
            for w in &report.per_weight {
                let from = w
                    .stable_from
                    .map(|i| i.to_string())
                    .unwrap_or_else(|| "not stabilized".to_string());
                println!(
                    "{:<16} {:>12} {:>14}",
                    weight_label(&w.weight),
                    w.final_value,
                    from
                );
            }
            if report.stabilized {
                match &report.matched_candidate {
                    Some(c) => println!("stabilized; matches {c}"),
                    None if candidate.is_some() => {
                        println!("stabilized; does not match the candidate")
                    }
                    None => println!("stabilized"),
                }
            } else {
                let first = report
                    .per_weight
                    .iter()
                    .find(|w| w.stable_from.is_none())
                    .expect("some weight failed to stabilize");
                println!("not stabilized at {}", weight_label(&first.weight));
            }
        }
    }
    Ok(if affirmative { EXIT_OK } else { EXIT_NEGATIVE })
}

pub fn cmd_separate(
    config: &JobConfig,
    sub_name: &str,
    super_name: &str,
    truncation: u32,
    format: OutputFormat,
) -> CmdResult {
    let datum = config.build_group()?;
    let sub = config.resolve_subgroup(&datum, sub_name)?;
    let superset = config.resolve_subgroup(&datum, super_name)?;
    let witness = find_separating_irrep(&datum, &sub, &superset, truncation)?;
    match format {
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct SeparateReport<'a> {
                sub: &'a str,
                superset: &'a str,
                truncation: u32,
                witness: &'a Option<dimdatum_core::SeparationWitness>,
            }
            emit_json(&SeparateReport {
                sub: sub_name,
                superset: super_name,
                truncation,
                witness: &witness,
            });
        }
        OutputFormat::Table => match &witness {
            Some(w) => println!(
                "{}: {} > {}",
                weight_label(&w.weight),
                w.value_sub,
                w.value_super
            ),
            None => println!("none found within truncation {truncation}"),
        },
    }
    Ok(if witness.is_some() {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

pub fn cmd_spectrum(
    config: &JobConfig,
    name: &str,
    truncation: u32,
    format: OutputFormat,
) -> CmdResult {
    let datum = config.build_group()?;
    let subgroup = config.resolve_subgroup(&datum, name)?;
    let spectrum = homogeneous_spectrum(&datum, &subgroup, truncation)?;
    match format {
        OutputFormat::Json => emit_json(&spectrum),
        OutputFormat::Table => {
            println!(
                "# group {datum}, subgroup {name}, truncation {truncation}, {}",
                spectrum.normalization
            );
            println!("{:<16} {:>14}", "eigenvalue", "multiplicity");
            for entry in &spectrum.entries {
                println!(
                    "{:<16} {:>14}",
                    entry.eigenvalue.to_string(),
                    entry.multiplicity
                );
            }
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_isospec(
    config: &JobConfig,
    name_a: &str,
    name_b: &str,
    truncation: u32,
    format: OutputFormat,
) -> CmdResult {
    let datum = config.build_group()?;
    let a = config.resolve_subgroup(&datum, name_a)?;
    let b = config.resolve_subgroup(&datum, name_b)?;
    let spec_a = homogeneous_spectrum(&datum, &a, truncation)?;
    let spec_b = homogeneous_spectrum(&datum, &b, truncation)?;
    let verdict = isospectral_compare(&spec_a, &spec_b)?;
    let equal = verdict == SpectrumComparison::Equal;
    match format {
        OutputFormat::Json => emit_json(&verdict),
        OutputFormat::Table => match &verdict {
            SpectrumComparison::Equal => println!("isospectral at truncation {truncation}"),
            SpectrumComparison::FirstDifference {
                eigenvalue,
                mult_a,
                mult_b,
            } => println!("differ at eigenvalue {eigenvalue}: {mult_a} vs {mult_b}"),
        },
    }
    Ok(if equal { EXIT_OK } else { EXIT_NEGATIVE })
}

pub fn cmd_catalog(config: &JobConfig, format: OutputFormat) -> CmdResult {
    let datum: RootDatum = config.build_group()?;
    #[derive(Serialize)]
    struct CatalogRow {
        name: &'static str,
        ambient: &'static str,
        status: String,
    }
    let rows: Vec<CatalogRow> = catalog_names()
        .iter()
        .map(|&(name, ambient)| {
            // Parameterized entries are probed at their smallest parameter.
            let parameter = match name {
                "cyclic" => Some(1),
                "binary_dihedral" => Some(2),
                _ => None,
            };
            let status = match catalog_lookup(&datum, name, parameter) {
                Ok(_) => "ok".to_string(),
                Err(e) => e.to_string(),
            };
            CatalogRow {
                name,
                ambient,
                status,
            }
        })
        .collect();
    match format {
        OutputFormat::Json => emit_json(&rows),
        OutputFormat::Table => {
            println!("{:<22} {:<26} {}", "name", "ambient", "status");
            for row in &rows {
                println!("{:<22} {:<26} {}", row.name, row.ambient, row.status);
            }
        }
    }
    Ok(EXIT_OK)
}
