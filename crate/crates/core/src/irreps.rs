//! Irreducible representations by dominant highest weight: canonical
//! enumeration, the Weyl dimension formula, Freudenthal weight
//! multiplicities, and exact character values at rational torus points.
//!
//! Multiplicities are computed per simple factor with the Freudenthal
//! recursion, restricted to dominant weights and spread over Weyl orbits;
//! factor tables are combined multiplicatively and memoized by value, so a
//! datum sweep reuses the same tables across many subgroups.

use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};
use crate::lie::{cyclotomic_eval, Factor, FactorData, FactorKind, RootDatum, TorusElement};
use crate::rational::{rat_int, Rational};

/// Highest-weight label: nonnegative integers on simple-factor coordinates,
/// arbitrary integers on torus coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominantWeight {
    coords: Vec<i64>,
}

impl DominantWeight {
    pub fn new(datum: &RootDatum, coords: Vec<i64>) -> Result<Self> {
        if coords.len() != datum.rank() {
            return Err(Error::InvalidInput(format!(
                "weight {:?} has length {}, expected {}",
                coords,
                coords.len(),
                datum.rank()
            )));
        }
        if !datum.is_dominant(&coords) {
            return Err(Error::InvalidInput(format!(
                "weight {coords:?} is not dominant"
            )));
        }
        Ok(DominantWeight { coords })
    }

    pub fn zero(datum: &RootDatum) -> Self {
        DominantWeight {
            coords: vec![0; datum.rank()],
        }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The weights of an irreducible representation with their multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMultiset {
    entries: BTreeMap<Vec<i64>, u64>,
}

impl WeightMultiset {
    pub fn entries(&self) -> &BTreeMap<Vec<i64>, u64> {
        &self.entries
    }

    pub fn multiplicity(&self, weight: &[i64]) -> u64 {
        self.entries.get(weight).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Weight multiset of the tensor product (convolution); used as the
    /// test oracle for character multiplicativity.
    pub fn convolve(&self, other: &Self) -> Self {
        let mut entries = BTreeMap::new();
        for (u, m) in &self.entries {
            for (v, n) in &other.entries {
                let sum: Vec<i64> = u.iter().zip(v).map(|(a, b)| a + b).collect();
                *entries.entry(sum).or_insert(0) += m * n;
            }
        }
        WeightMultiset { entries }
    }

    /// Image under an integer linear map (rows act on weight coordinates);
    /// multiplicities of merged fibers add up.
    pub fn pushforward(&self, matrix: &[Vec<i64>]) -> Self {
        let mut entries = BTreeMap::new();
        for (w, m) in &self.entries {
            let image: Vec<i64> = matrix
                .iter()
                .map(|row| row.iter().zip(w).map(|(a, b)| a * b).sum())
                .collect();
            *entries.entry(image).or_insert(0) += m;
        }
        WeightMultiset { entries }
    }

    /// True when every listed linear map permutes the multiset.
    pub fn invariant_under(&self, matrices: &[Vec<Vec<i64>>]) -> bool {
        matrices.iter().all(|m| {
            self.entries.iter().all(|(w, mult)| {
                let image = crate::linalg::mat_vec_i64(m, w);
                self.multiplicity(&image) == *mult
            })
        })
    }
}

fn isqrt_u64(n: u64) -> u64 {
    n.isqrt()
}

/// Floor of a nonnegative rational.
fn floor_u64(r: &Rational) -> u64 {
    debug_assert!(!r.is_negative());
    r.floor().numer().to_u64().expect("bound fits u64")
}

type FactorTable = Arc<BTreeMap<Vec<i64>, u64>>;

/// Freudenthal multiplicities of one simple-factor irrep, memoized by value.
fn factor_multiplicities(data: &Arc<FactorData>, lam: &[i64]) -> FactorTable {
    static CACHE: OnceLock<Mutex<HashMap<(FactorKind, usize, Vec<i64>), FactorTable>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (data.kind, data.rank, lam.to_vec());
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return Arc::clone(hit);
    }

    let rank = data.rank;
    let rho = vec![1i64; rank];
    let lam_norm = data.inner(lam, lam);

    // Candidate dominant weights: μ ≥ 0 with ⟨μ,μ⟩ ≤ ⟨λ,λ⟩ and λ − μ in the
    // nonnegative root cone. These are exactly the dominant weights of the
    // irrep, so the recursion below must give a positive multiplicity for
    // each one.
    let bounds: Vec<u64> = (0..rank)
        .map(|i| {
            isqrt_u64(floor_u64(
                &(&lam_norm * rat_int(2) / rat_int(data.half_lengths[i])),
            ))
        })
        .collect();
    let mut candidates: Vec<(Vec<i64>, Vec<i64>, i64)> = Vec::new();
    let mut cursor = vec![0i64; rank];
    'grid: loop {
        let mu = cursor.clone();
        if data.inner(&mu, &mu) <= lam_norm {
            let diff: Vec<i64> = lam.iter().zip(&mu).map(|(a, b)| a - b).collect();
            if let Some(alpha) = data.alpha_coords(&diff) {
                if alpha.iter().all(|&c| c >= 0) {
                    let level = alpha.iter().sum();
                    candidates.push((mu, alpha, level));
                }
            }
        }
        for i in 0..rank {
            cursor[i] += 1;
            if cursor[i] as u64 <= bounds[i] {
                continue 'grid;
            }
            cursor[i] = 0;
        }
        break;
    }
    candidates.sort_by_key(|(mu, _, level)| (*level, mu.clone()));

    let add = |u: &[i64], v: &[i64], k: i64| -> Vec<i64> {
        u.iter().zip(v).map(|(a, b)| a + k * b).collect()
    };

    let shifted_norm = |v: &[i64]| -> Rational {
        let s = add(v, &rho, 1);
        data.inner(&s, &s)
    };
    let lam_shifted = shifted_norm(lam);

    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    for (mu, mu_alpha, level) in &candidates {
        if *level == 0 {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mut sum = Rational::zero();
        for (root, root_alpha) in data.positive_roots.iter().zip(&data.positive_roots_alpha) {
            let mut k = 1i64;
            loop {
                // μ + kα must stay inside the root cone below λ.
                if mu_alpha.iter().zip(root_alpha).any(|(c, a)| c - k * a < 0) {
                    break;
                }
                let v = add(mu, root, k);
                let dom = data.dominant_representative(&v);
                if let Some(&m) = mult.get(&dom) {
                    sum += data.inner(&v, root) * rat_int(m as i64);
                }
                k += 1;
            }
        }
        let denom = &lam_shifted - shifted_norm(mu);
        let value = sum * rat_int(2) / denom;
        assert!(
            value.is_integer() && value.numer().to_i64().map(|v| v > 0).unwrap_or(false),
            "Freudenthal recursion produced {value} at {mu:?} below {lam:?}"
        );
        mult.insert(mu.clone(), value.numer().to_u64().unwrap());
    }

    // Spread dominant multiplicities over Weyl orbits.
    let mut table = BTreeMap::new();
    for (mu, m) in &mult {
        for (w, _) in &data.weyl {
            let image = crate::linalg::mat_vec_i64(w, mu);
            table.insert(image, *m);
        }
    }

    let arc: FactorTable = Arc::new(table);
    cache.lock().unwrap().insert(key, Arc::clone(&arc));
    arc
}

/// Exact multiplicity of every weight of the irrep with highest weight λ.
pub fn freudenthal_multiplicities(datum: &RootDatum, lam: &DominantWeight) -> WeightMultiset {
    let mut partial: Vec<(Vec<i64>, u64)> = vec![(Vec::new(), 1)];
    for fi in 0..datum.factors().len() {
        let span = datum.spans()[fi].clone();
        let chunk = &lam.coords()[span];
        let parts: Vec<(Vec<i64>, u64)> = match datum.factor_data(fi) {
            Some(data) => factor_multiplicities(data, chunk)
                .iter()
                .map(|(w, m)| (w.clone(), *m))
                .collect(),
            None => vec![(chunk.to_vec(), 1)],
        };
        let mut next = Vec::with_capacity(partial.len() * parts.len());
        for (prefix, m) in &partial {
            for (w, n) in &parts {
                let mut coords = prefix.clone();
                coords.extend_from_slice(w);
                next.push((coords, m * n));
            }
        }
        partial = next;
    }
    WeightMultiset {
        entries: partial.into_iter().collect(),
    }
}

/// dim V_λ = Π_{α>0} ⟨λ+ρ, α⟩ / ⟨ρ, α⟩, exactly.
pub fn weyl_dimension(datum: &RootDatum, lam: &DominantWeight) -> u64 {
    let mut dim = Rational::one();
    for fi in 0..datum.factors().len() {
        let Some(data) = datum.factor_data(fi) else {
            continue;
        };
        let span = datum.spans()[fi].clone();
        let chunk = &lam.coords()[span];
        let rho = vec![1i64; data.rank];
        let shifted: Vec<i64> = chunk.iter().map(|c| c + 1).collect();
        for root in &data.positive_roots {
            dim *= data.inner(&shifted, root) / data.inner(&rho, root);
        }
    }
    assert!(dim.is_integer(), "Weyl dimension must be an integer");
    dim.numer().to_u64().expect("dimension fits u64")
}

/// All dominant weights with Casimir value at most `truncation`, ordered by
/// (Casimir value, lexicographic coordinates). The list for a smaller
/// truncation is a prefix of the list for a larger one.
pub fn enumerate_irreps(datum: &RootDatum, truncation: u32) -> Vec<DominantWeight> {
    let budget = rat_int(truncation as i64);
    let mut chunk_lists: Vec<Vec<(Vec<i64>, Rational)>> = Vec::new();
    for (fi, factor) in datum.factors().iter().enumerate() {
        let mut chunks: Vec<(Vec<i64>, Rational)> = Vec::new();
        match factor {
            Factor::Simple { rank, .. } => {
                let data = datum.factor_data(fi).unwrap();
                let bounds: Vec<u64> = (0..*rank)
                    .map(|i| isqrt_u64(truncation as u64 / data.half_lengths[i] as u64))
                    .collect();
                let rho = vec![1i64; *rank];
                let mut cursor = vec![0i64; *rank];
                'grid: loop {
                    let mu = cursor.clone();
                    let contribution =
                        (data.inner(&mu, &mu) + data.inner(&mu, &rho) * rat_int(2)) * rat_int(2);
                    if contribution <= budget {
                        chunks.push((mu, contribution));
                    }
                    for i in 0..*rank {
                        cursor[i] += 1;
                        if cursor[i] as u64 <= bounds[i] {
                            continue 'grid;
                        }
                        cursor[i] = 0;
                    }
                    break;
                }
            }
            Factor::Torus { rank } => {
                // Spiral per coordinate: 0, 1, −1, 2, −2, … capped by the
                // Casimir budget.
                let bound = isqrt_u64(truncation as u64 / 2) as i64;
                let spiral: Vec<i64> = std::iter::once(0)
                    .chain((1..=bound).flat_map(|v| [v, -v]))
                    .collect();
                let mut stack: Vec<Vec<i64>> = vec![Vec::new()];
                for _ in 0..*rank {
                    let mut next = Vec::new();
                    for prefix in &stack {
                        for &v in &spiral {
                            let mut t = prefix.clone();
                            t.push(v);
                            next.push(t);
                        }
                    }
                    stack = next;
                }
                for t in stack {
                    let contribution = rat_int(2 * t.iter().map(|&x| x * x).sum::<i64>());
                    if contribution <= budget {
                        chunks.push((t, contribution));
                    }
                }
            }
        }
        chunk_lists.push(chunks);
    }

    // Cartesian product across factors, pruned by the remaining budget.
    let mut assembled: Vec<(Rational, Vec<i64>)> = Vec::new();
    let mut prefix: Vec<(Vec<i64>, Rational)> = vec![(Vec::new(), Rational::zero())];
    for chunks in &chunk_lists {
        let mut next = Vec::new();
        for (coords, used) in &prefix {
            for (chunk, contribution) in chunks {
                let total = used + contribution;
                if total <= budget {
                    let mut c = coords.clone();
                    c.extend_from_slice(chunk);
                    next.push((c, total));
                }
            }
        }
        prefix = next;
    }
    for (coords, casimir) in prefix {
        assembled.push((casimir, coords));
    }
    assembled.sort();
    assembled
        .into_iter()
        .map(|(_, coords)| DominantWeight { coords })
        .collect()
}

/// χ_λ(t) = Σ_μ m_μ · μ(t), an exact cyclotomic number.
pub fn character_value(
    datum: &RootDatum,
    lam: &DominantWeight,
    t: &TorusElement,
) -> CyclotomicNumber {
    assert_eq!(t.rank(), datum.rank());
    let weights = freudenthal_multiplicities(datum, lam);
    let mut acc = CyclotomicNumber::zero();
    for (w, m) in weights.entries() {
        let term = cyclotomic_eval(w, t).scale(&rat_int(*m as i64));
        acc = acc.add(&term);
    }
    acc
}
