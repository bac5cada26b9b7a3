//! Subgroup descriptors and the invariant-dimension kernels.
//!
//! A subgroup enters the engine through the distribution of its normalized
//! Haar measure over conjugacy classes of the ambient group: finitely many
//! point atoms plus translated-subtorus pieces, all with rational masses.
//! dim V^H = ∫_H χ_V dμ_H depends on nothing else, so descriptors never
//! carry matrix generators. Connected reductive subgroups instead carry a
//! weight-restriction map and are handled by an alternating Weyl sum.
//!
//! Three kernels compute dim V^H exactly:
//!   * class-measure averaging (finite subgroups and quasi-tori),
//!   * kernel-lattice counting (subtori: weights restricting trivially),
//!   * branching-to-trivial (connected embeddings).
//! Every cyclotomic average must reduce to a nonnegative integer; a failed
//! reduction is reported as a corrupted descriptor, never rounded away.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};
use crate::irreps::{enumerate_irreps, freudenthal_multiplicities, DominantWeight};
use crate::lie::{
    build_root_datum, cyclotomic_eval, Factor, FactorDescriptor, FactorKind, RootDatum,
    TorusElement,
};
use crate::linalg;
use crate::rational::{as_nonneg_integer, rat, rat_int, Rational};
use crate::weyl::weyl_group;

/// One piece of a class measure.
#[derive(Clone, Debug, PartialEq)]
pub enum MeasurePiece {
    /// A conjugacy class meeting the maximal torus in `at`.
    Atom { at: TorusElement, mass: Rational },
    /// A translated subtorus offset·S, with S cut out by the rows of
    /// `embedding` (G-weights map to S-weights; the kernel rows integrate
    /// to their value at the offset, everything else to zero).
    TorusCoset {
        embedding: Vec<Vec<i64>>,
        offset: TorusElement,
        mass: Rational,
    },
}

impl MeasurePiece {
    pub fn mass(&self) -> &Rational {
        match self {
            MeasurePiece::Atom { mass, .. } | MeasurePiece::TorusCoset { mass, .. } => mass,
        }
    }
}

/// The conjugacy-class distribution of the subgroup's Haar measure.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassMeasure {
    pieces: Vec<MeasurePiece>,
    component_count: u64,
}

impl ClassMeasure {
    /// Measure of a finite subgroup: point atoms only. Atoms at equal torus
    /// points are merged; the group order is recovered as the lcm of the
    /// mass denominators.
    pub fn from_atoms(rank: usize, atoms: Vec<(TorusElement, Rational)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::InvalidInput(
                "a class measure needs at least one atom".into(),
            ));
        }
        let mut merged: BTreeMap<TorusElement, Rational> = BTreeMap::new();
        for (at, mass) in atoms {
            if at.rank() != rank {
                return Err(Error::InvalidInput(format!(
                    "atom angle vector {:?} has rank {}, expected {rank}",
                    at.angles(),
                    at.rank()
                )));
            }
            *merged.entry(at).or_insert_with(Rational::zero) += mass;
        }
        let mut total = Rational::zero();
        for mass in merged.values() {
            if !mass.is_positive() {
                return Err(Error::InvalidInput(
                    "every class mass must be positive".into(),
                ));
            }
            total += mass;
        }
        if total != Rational::one() {
            return Err(Error::InvalidInput(format!(
                "class masses sum to {total}, expected 1"
            )));
        }
        let order = merged
            .values()
            .map(|m| m.denom().to_u64().expect("mass denominator fits u64"))
            .fold(1u64, |acc, d| acc.lcm(&d));
        let pieces = merged
            .into_iter()
            .map(|(at, mass)| MeasurePiece::Atom { at, mass })
            .collect();
        Ok(ClassMeasure {
            pieces,
            component_count: order,
        })
    }

    /// Measure of a quasi-torus: one subtorus piece at offset zero carrying
    /// whatever mass the coset atoms leave over.
    pub fn quasi_torus(
        rank: usize,
        embedding: Vec<Vec<i64>>,
        cosets: Vec<(TorusElement, Rational)>,
    ) -> Result<Self> {
        for row in &embedding {
            if row.len() != rank {
                return Err(Error::InvalidInput(format!(
                    "embedding row {row:?} has length {}, expected {rank}",
                    row.len()
                )));
            }
        }
        if linalg::integer_row_rank(&embedding) != embedding.len() {
            return Err(Error::InvalidInput(
                "subtorus embedding matrix must have full row rank".into(),
            ));
        }
        let mut merged: BTreeMap<TorusElement, Rational> = BTreeMap::new();
        let mut coset_mass = Rational::zero();
        for (at, mass) in cosets {
            if at.rank() != rank {
                return Err(Error::InvalidInput(format!(
                    "coset angle vector {:?} has rank {}, expected {rank}",
                    at.angles(),
                    at.rank()
                )));
            }
            if !mass.is_positive() {
                return Err(Error::InvalidInput(
                    "every coset mass must be positive".into(),
                ));
            }
            coset_mass += &mass;
            *merged.entry(at).or_insert_with(Rational::zero) += mass;
        }
        let torus_mass = Rational::one() - coset_mass;
        if !torus_mass.is_positive() {
            return Err(Error::InvalidInput(
                "coset masses must leave positive mass for the subtorus piece".into(),
            ));
        }
        let component_count = 1 + merged.len() as u64;
        let mut pieces = vec![MeasurePiece::TorusCoset {
            embedding,
            offset: TorusElement::zero(rank),
            mass: torus_mass,
        }];
        pieces.extend(
            merged
                .into_iter()
                .map(|(at, mass)| MeasurePiece::Atom { at, mass }),
        );
        Ok(ClassMeasure {
            pieces,
            component_count,
        })
    }

    pub fn pieces(&self) -> &[MeasurePiece] {
        &self.pieces
    }

    /// Order of H/H₀ for a quasi-torus, the group order for a finite H.
    pub fn component_count(&self) -> u64 {
        self.component_count
    }

    pub fn total_mass(&self) -> Rational {
        self.pieces
            .iter()
            .map(MeasurePiece::mass)
            .fold(Rational::zero(), |acc, m| acc + m)
    }
}

/// Wire form of one measure atom: `{"angles": ["1/4"], "mass": "1/2"}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AtomSpec {
    #[serde(with = "crate::rational::serde_rational_vec")]
    pub angles: Vec<Rational>,
    #[serde(with = "crate::rational::serde_rational")]
    pub mass: Rational,
}

/// Wire form of a subgroup, as it appears in configuration files.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SubgroupSpec {
    FiniteClasses {
        atoms: Vec<AtomSpec>,
    },
    Subtorus {
        embedding: Vec<Vec<i64>>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        cosets: Vec<AtomSpec>,
    },
    Connected {
        h_factors: Vec<FactorDescriptor>,
        restriction: Vec<Vec<i64>>,
    },
    Catalog {
        name: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        parameter: Option<u32>,
    },
}

#[derive(Clone, Debug)]
pub enum DescriptorBody {
    FiniteClasses {
        measure: ClassMeasure,
    },
    Subtorus {
        embedding: Vec<Vec<i64>>,
        coset_count: usize,
        measure: ClassMeasure,
    },
    Connected {
        h_datum: RootDatum,
        restriction: Vec<Vec<i64>>,
    },
}

/// A validated subgroup of a fixed ambient datum.
#[derive(Clone, Debug)]
pub struct SubgroupDescriptor {
    name: String,
    body: DescriptorBody,
}

impl SubgroupDescriptor {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn body(&self) -> &DescriptorBody {
        &self.body
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn measure(&self) -> Option<&ClassMeasure> {
        match &self.body {
            DescriptorBody::FiniteClasses { measure }
            | DescriptorBody::Subtorus { measure, .. } => Some(measure),
            DescriptorBody::Connected { .. } => None,
        }
    }

    pub fn finite_classes(
        datum: &RootDatum,
        name: &str,
        atoms: Vec<(TorusElement, Rational)>,
    ) -> Result<Self> {
        let measure =
            ClassMeasure::from_atoms(datum.rank(), atoms).map_err(|e| descriptor_error(name, e))?;
        Ok(SubgroupDescriptor {
            name: name.to_string(),
            body: DescriptorBody::FiniteClasses { measure },
        })
    }

    pub fn subtorus(
        datum: &RootDatum,
        name: &str,
        embedding: Vec<Vec<i64>>,
        cosets: Vec<(TorusElement, Rational)>,
    ) -> Result<Self> {
        let coset_count = cosets.len();
        let measure = ClassMeasure::quasi_torus(datum.rank(), embedding.clone(), cosets)
            .map_err(|e| descriptor_error(name, e))?;
        Ok(SubgroupDescriptor {
            name: name.to_string(),
            body: DescriptorBody::Subtorus {
                embedding,
                coset_count,
                measure,
            },
        })
    }

    pub fn connected(
        datum: &RootDatum,
        name: &str,
        h_factors: &[FactorDescriptor],
        restriction: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let h_datum = build_root_datum(h_factors)?;
        if restriction.len() != h_datum.rank() {
            return Err(Error::InvalidDescriptor {
                name: name.to_string(),
                reason: format!(
                    "restriction has {} rows, expected the subgroup rank {}",
                    restriction.len(),
                    h_datum.rank()
                ),
            });
        }
        for row in &restriction {
            if row.len() != datum.rank() {
                return Err(Error::InvalidDescriptor {
                    name: name.to_string(),
                    reason: format!(
                        "restriction row {row:?} has length {}, expected the ambient rank {}",
                        row.len(),
                        datum.rank()
                    ),
                });
            }
        }
        Ok(SubgroupDescriptor {
            name: name.to_string(),
            body: DescriptorBody::Connected {
                h_datum,
                restriction,
            },
        })
    }

    /// Resolve a wire-format spec against the ambient datum.
    pub fn from_spec(datum: &RootDatum, name: &str, spec: &SubgroupSpec) -> Result<Self> {
        match spec {
            SubgroupSpec::FiniteClasses { atoms } => {
                let atoms = atoms
                    .iter()
                    .map(|a| (TorusElement::new(a.angles.clone()), a.mass.clone()))
                    .collect();
                Self::finite_classes(datum, name, atoms)
            }
            SubgroupSpec::Subtorus { embedding, cosets } => {
                let cosets = cosets
                    .iter()
                    .map(|a| (TorusElement::new(a.angles.clone()), a.mass.clone()))
                    .collect();
                Self::subtorus(datum, name, embedding.clone(), cosets)
            }
            SubgroupSpec::Connected {
                h_factors,
                restriction,
            } => Self::connected(datum, name, h_factors, restriction.clone()),
            SubgroupSpec::Catalog {
                name: cname,
                parameter,
            } => Ok(catalog_lookup(datum, cname, *parameter)?.with_name(name)),
        }
    }
}

fn descriptor_error(name: &str, e: Error) -> Error {
    Error::InvalidDescriptor {
        name: name.to_string(),
        reason: e.to_string(),
    }
}

/// Exact dim V_λ^H.
///
/// Measure descriptors integrate the character against the class measure:
/// point atoms contribute χ_V at the atom, subtorus pieces the sum of
/// multiplicities of weights killed by the embedding, each evaluated at the
/// piece's offset. The cyclotomic total must reduce to a nonnegative
/// integer. Connected embeddings take the trivial-isotypic multiplicity of
/// the restricted weight multiset via the alternating Weyl sum
/// Σ_w sign(w) · m(w(ρ_H) − ρ_H).
pub fn invariant_dim(
    datum: &RootDatum,
    lam: &DominantWeight,
    subgroup: &SubgroupDescriptor,
) -> Result<u64> {
    match &subgroup.body {
        DescriptorBody::FiniteClasses { measure } | DescriptorBody::Subtorus { measure, .. } => {
            let weights = freudenthal_multiplicities(datum, lam);
            let mut acc = CyclotomicNumber::zero();
            for piece in measure.pieces() {
                match piece {
                    MeasurePiece::Atom { at, mass } => {
                        let mut chi = CyclotomicNumber::zero();
                        for (w, m) in weights.entries() {
                            chi = chi.add(&cyclotomic_eval(w, at).scale(&rat_int(*m as i64)));
                        }
                        acc = acc.add(&chi.scale(mass));
                    }
                    MeasurePiece::TorusCoset {
                        embedding,
                        offset,
                        mass,
                    } => {
                        let mut s = CyclotomicNumber::zero();
                        for (w, m) in weights.entries() {
                            let restricted = linalg::mat_vec_i64(embedding, w);
                            if restricted.iter().all(|&x| x == 0) {
                                s = s.add(&cyclotomic_eval(w, offset).scale(&rat_int(*m as i64)));
                            }
                        }
                        acc = acc.add(&s.scale(mass));
                    }
                }
            }
            let value = acc.as_rational().and_then(|r| as_nonneg_integer(&r));
            value.ok_or_else(|| Error::Integrality {
                subgroup: subgroup.name.clone(),
                weight: lam.coords().to_vec(),
                value: acc.to_string(),
            })
        }
        DescriptorBody::Connected {
            h_datum,
            restriction,
        } => {
            let pushed = freudenthal_multiplicities(datum, lam).pushforward(restriction);
            let wh = weyl_group(h_datum);
            let matrices: Vec<Vec<Vec<i64>>> = wh.iter().map(|e| e.matrix().to_vec()).collect();
            if !pushed.invariant_under(&matrices) {
                return Err(Error::InvalidDescriptor {
                    name: subgroup.name.clone(),
                    reason: format!(
                        "restricted multiset of {:?} is not invariant under the subgroup Weyl group",
                        lam.coords()
                    ),
                });
            }
            let rho = h_datum.weyl_vector();
            let mut total: i64 = 0;
            for e in wh.iter() {
                let shifted: Vec<i64> = e.apply(rho).iter().zip(rho).map(|(a, b)| a - b).collect();
                total += e.sign() * pushed.multiplicity(&shifted) as i64;
            }
            if total < 0 {
                return Err(Error::Integrality {
                    subgroup: subgroup.name.clone(),
                    weight: lam.coords().to_vec(),
                    value: total.to_string(),
                });
            }
            Ok(total as u64)
        }
    }
}

/// The sublattice of torus characters vanishing on a subtorus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterLattice {
    basis: Vec<Vec<i64>>,
    embedding: Vec<Vec<i64>>,
}

impl CharacterLattice {
    /// Basis rows of the lattice; the zero lattice has no rows.
    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, weight: &[i64]) -> bool {
        weight.len()
            == self
                .embedding
                .first()
                .map(|r| r.len())
                .unwrap_or(weight.len())
            && linalg::mat_vec_i64(&self.embedding, weight)
                .iter()
                .all(|&x| x == 0)
    }
}

/// Integer basis of {μ : μ restricts trivially to the subtorus}, via
/// unimodular column elimination of the embedding matrix.
pub fn kernel_character_lattice(
    datum: &RootDatum,
    subgroup: &SubgroupDescriptor,
) -> Result<CharacterLattice> {
    match &subgroup.body {
        DescriptorBody::Subtorus {
            embedding,
            coset_count: 0,
            ..
        } => Ok(CharacterLattice {
            basis: linalg::integer_kernel(embedding, datum.rank()),
            embedding: embedding.clone(),
        }),
        DescriptorBody::Subtorus { .. } => Err(Error::InvalidDescriptor {
            name: subgroup.name.clone(),
            reason: "kernel lattice needs a subtorus without coset atoms".into(),
        }),
        _ => Err(Error::InvalidDescriptor {
            name: subgroup.name.clone(),
            reason: "kernel lattice is defined for subtorus descriptors".into(),
        }),
    }
}

// --- catalog ------------------------------------------------------------

/// Names understood by `catalog_lookup`, with the ambient group they need.
pub fn catalog_names() -> &'static [(&'static str, &'static str)] {
    &[
        ("trivial", "any"),
        ("maximal_torus", "any"),
        ("cyclic", "A1 (parameter n >= 1)"),
        ("binary_dihedral", "A1 (parameter n >= 2)"),
        ("binary_tetrahedral", "A1"),
        ("binary_octahedral", "A1"),
        ("binary_icosahedral", "A1"),
        ("torus_normalizer", "A1"),
        ("principal_a1_in_a2", "A2"),
    ]
}

fn require_ambient(datum: &RootDatum, name: &str, expect: &[Factor]) -> Result<()> {
    if datum.factors() == expect {
        Ok(())
    } else {
        Err(Error::CatalogValidation {
            name: name.to_string(),
            reason: format!("needs ambient group {:?}, got {datum}", expect),
        })
    }
}

fn a1_factor() -> Vec<Factor> {
    vec![Factor::Simple {
        kind: FactorKind::A,
        rank: 1,
    }]
}

fn no_parameter(name: &str, parameter: Option<u32>) -> Result<()> {
    match parameter {
        None => Ok(()),
        Some(p) => Err(Error::InvalidInput(format!(
            "catalog entry `{name}` takes no parameter (got {p})"
        ))),
    }
}

/// Conjugacy classes of the cyclic subgroup of order n inside SU(2):
/// angles k/n with k and n−k merged into one class.
fn cyclic_atoms(n: u32) -> Vec<(TorusElement, Rational)> {
    let n = i64::from(n);
    let mut atoms = Vec::new();
    for k in 0..=(n / 2) {
        let mass = if k == 0 || 2 * k == n {
            rat(1, n)
        } else {
            rat(2, n)
        };
        atoms.push((TorusElement::new(vec![rat(k, n)]), mass));
    }
    atoms
}

/// Class data of the exceptional finite subgroups of SU(2), shipped as
/// literature constants (angle numerator, angle denominator, class size)
/// and validated at load time.
fn exceptional_atoms(name: &str) -> Option<(u32, &'static [(i64, i64, i64)])> {
    // Angles identify SU(2) classes via the trace 2cos(2π·angle); sizes
    // count group elements with that trace.
    const TETRAHEDRAL: &[(i64, i64, i64)] = &[
        (0, 1, 1), // identity
        (1, 2, 1), // central -1
        (1, 6, 8), // order 6
        (1, 3, 8), // order 3
        (1, 4, 6), // order 4
    ];
    const OCTAHEDRAL: &[(i64, i64, i64)] = &[
        (0, 1, 1),
        (1, 2, 1),
        (1, 8, 6), // order 8
        (3, 8, 6), // order 8, other trace
        (1, 6, 8),
        (1, 3, 8),
        (1, 4, 18), // order 4: both 180-degree rotation classes
    ];
    const ICOSAHEDRAL: &[(i64, i64, i64)] = &[
        (0, 1, 1),
        (1, 2, 1),
        (1, 10, 12), // order 10
        (2, 5, 12),  // order 5
        (1, 5, 12),  // order 5
        (3, 10, 12), // order 10
        (1, 6, 20),
        (1, 3, 20),
        (1, 4, 30),
    ];
    match name {
        "binary_tetrahedral" => Some((24, TETRAHEDRAL)),
        "binary_octahedral" => Some((48, OCTAHEDRAL)),
        "binary_icosahedral" => Some((120, ICOSAHEDRAL)),
        _ => None,
    }
}

/// Build a validated catalog subgroup for the given ambient datum.
///
/// Shipped class data is re-validated on every lookup: masses must sum
/// to one, the trivial representation must have a one-dimensional
/// invariant space, and for the exceptional entries every invariant
/// dimension with Casimir value at most 48 must reduce to a nonnegative
/// integer. A failure rejects the entry.
pub fn catalog_lookup(
    datum: &RootDatum,
    name: &str,
    parameter: Option<u32>,
) -> Result<SubgroupDescriptor> {
    let descriptor = match name {
        "trivial" => {
            no_parameter(name, parameter)?;
            SubgroupDescriptor::finite_classes(
                datum,
                "trivial",
                vec![(TorusElement::zero(datum.rank()), Rational::one())],
            )?
        }
        "maximal_torus" => {
            no_parameter(name, parameter)?;
            SubgroupDescriptor::subtorus(
                datum,
                "maximal_torus",
                linalg::identity_i64(datum.rank()),
                Vec::new(),
            )?
        }
        "cyclic" => {
            require_ambient(datum, name, &a1_factor())?;
            let n = parameter.ok_or_else(|| {
                Error::InvalidInput("catalog entry `cyclic` needs a parameter n >= 1".into())
            })?;
            if n == 0 {
                return Err(Error::InvalidInput("cyclic(0) is not a group".into()));
            }
            SubgroupDescriptor::finite_classes(datum, &format!("cyclic({n})"), cyclic_atoms(n))?
        }
        "binary_dihedral" => {
            require_ambient(datum, name, &a1_factor())?;
            let n = parameter.ok_or_else(|| {
                Error::InvalidInput(
                    "catalog entry `binary_dihedral` needs a parameter n >= 2".into(),
                )
            })?;
            if n < 2 {
                return Err(Error::InvalidInput(format!(
                    "binary_dihedral({n}) is degenerate: the dicyclic group of order {} is \
                     cyclic; use cyclic({}) instead",
                    4 * n,
                    4 * n
                )));
            }
            // Half the mass sits on the cyclic subgroup of order 2n, half on
            // the single class of the other component (trace zero).
            let mut atoms: Vec<(TorusElement, Rational)> = cyclic_atoms(2 * n)
                .into_iter()
                .map(|(at, mass)| (at, mass * rat(1, 2)))
                .collect();
            atoms.push((TorusElement::new(vec![rat(1, 4)]), rat(1, 2)));
            SubgroupDescriptor::finite_classes(datum, &format!("binary_dihedral({n})"), atoms)?
        }
        "torus_normalizer" => {
            require_ambient(datum, name, &a1_factor())?;
            no_parameter(name, parameter)?;
            SubgroupDescriptor::subtorus(
                datum,
                "torus_normalizer",
                linalg::identity_i64(1),
                vec![(TorusElement::new(vec![rat(1, 4)]), rat(1, 2))],
            )?
        }
        "principal_a1_in_a2" => {
            no_parameter(name, parameter)?;
            require_ambient(
                datum,
                name,
                &[Factor::Simple {
                    kind: FactorKind::A,
                    rank: 2,
                }],
            )?;
            SubgroupDescriptor::connected(
                datum,
                "principal_a1_in_a2",
                &[FactorDescriptor {
                    kind: "A".to_string(),
                    rank: 1,
                }],
                vec![vec![2, 2]],
            )?
        }
        _ => {
            let Some((order, rows)) = exceptional_atoms(name) else {
                return Err(Error::UnknownCatalog {
                    name: name.to_string(),
                });
            };
            require_ambient(datum, name, &a1_factor())?;
            no_parameter(name, parameter)?;
            let atoms: Vec<(TorusElement, Rational)> = rows
                .iter()
                .map(|&(num, den, size)| {
                    (
                        TorusElement::new(vec![rat(num, den)]),
                        rat(size, order as i64),
                    )
                })
                .collect();
            let descriptor =
                SubgroupDescriptor::finite_classes(datum, name, atoms).map_err(|e| {
                    Error::CatalogValidation {
                        name: name.to_string(),
                        reason: e.to_string(),
                    }
                })?;
            // Integrality sweep for the shipped constants.
            for lam in enumerate_irreps(datum, 48) {
                invariant_dim(datum, &lam, &descriptor).map_err(|e| Error::CatalogValidation {
                    name: name.to_string(),
                    reason: e.to_string(),
                })?;
            }
            descriptor
        }
    };

    // Every entry must give the trivial representation a one-dimensional
    // invariant space.
    let trivial = DominantWeight::zero(datum);
    match invariant_dim(datum, &trivial, &descriptor) {
        Ok(1) => Ok(descriptor),
        Ok(v) => Err(Error::CatalogValidation {
            name: name.to_string(),
            reason: format!("invariant dimension of the trivial representation is {v}, not 1"),
        }),
        Err(e) => Err(Error::CatalogValidation {
            name: name.to_string(),
            reason: e.to_string(),
        }),
    }
}
