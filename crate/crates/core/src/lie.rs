//! Root data for products of classical simple factors (A–D, rank ≤ 4) and
//! torus factors.
//!
//! Weights are integer vectors in the fundamental-weight basis on each simple
//! factor and the standard character basis on each torus factor. The inner
//! product is the basic one, normalized so the short roots of every simple
//! factor have squared length 2; torus directions carry the identity form.
//! With that normalization the A1 string with label m has
//! 2⟨λ, λ+2ρ⟩ = m(m+2), which fixes the spectral scale used everywhere.

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::ops::Range;
use std::sync::{Arc, Mutex, OnceLock};

use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{rat_int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FactorKind {
    A,
    B,
    C,
    D,
}

impl FactorKind {
    fn letter(self) -> &'static str {
        match self {
            FactorKind::A => "A",
            FactorKind::B => "B",
            FactorKind::C => "C",
            FactorKind::D => "D",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    Simple { kind: FactorKind, rank: usize },
    Torus { rank: usize },
}

impl Factor {
    pub fn rank(&self) -> usize {
        match self {
            Factor::Simple { rank, .. } | Factor::Torus { rank } => *rank,
        }
    }

    pub fn is_torus(&self) -> bool {
        matches!(self, Factor::Torus { .. })
    }

    pub fn descriptor(&self) -> FactorDescriptor {
        match self {
            Factor::Simple { kind, rank } => FactorDescriptor {
                kind: kind.letter().to_string(),
                rank: *rank,
            },
            Factor::Torus { rank } => FactorDescriptor {
                kind: "torus".to_string(),
                rank: *rank,
            },
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Simple { kind, rank } => write!(f, "{}{}", kind.letter(), rank),
            Factor::Torus { rank } => write!(f, "T{rank}"),
        }
    }
}

/// Wire form of one factor: `{"type": "A", "rank": 1}` or
/// `{"type": "torus", "rank": 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDescriptor {
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
}

/// Wire form of a group: `{"factors": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub factors: Vec<FactorDescriptor>,
}

impl GroupSpec {
    pub fn build(&self) -> Result<RootDatum> {
        build_root_datum(&self.factors)
    }
}

/// Precomputed combinatorics of one simple factor, shared across data.
#[derive(Debug)]
pub(crate) struct FactorData {
    pub kind: FactorKind,
    pub rank: usize,
    /// Row i is the simple root α_i in fundamental-weight coordinates,
    /// i.e. the Cartan matrix with entries 2⟨α_i,α_j⟩/⟨α_j,α_j⟩.
    pub cartan: Vec<Vec<i64>>,
    pub cartan_inv: Vec<Vec<Rational>>,
    /// ⟨ω_i, ω_j⟩ in the basic normalization.
    pub gram: Vec<Vec<Rational>>,
    /// d_j = ⟨α_j, α_j⟩ / 2 (1 for short roots, 2 for long ones).
    pub half_lengths: Vec<i64>,
    /// Positive roots in fundamental-weight coordinates.
    pub positive_roots: Vec<Vec<i64>>,
    /// The same roots in simple-root coordinates (nonnegative integers).
    pub positive_roots_alpha: Vec<Vec<i64>>,
    /// Full element list with determinant signs.
    pub weyl: Vec<(Vec<Vec<i64>>, i64)>,
}

impl FactorData {
    pub fn inner(&self, u: &[i64], v: &[i64]) -> Rational {
        inner_with_gram(&self.gram, u, v)
    }

    /// Simple-root coordinates of a weight-lattice vector, if it lies in the
    /// root lattice.
    pub fn alpha_coords(&self, v: &[i64]) -> Option<Vec<i64>> {
        let r = self.rank;
        let mut out = Vec::with_capacity(r);
        for k in 0..r {
            let mut acc = Rational::zero();
            for j in 0..r {
                if v[j] != 0 {
                    acc += &self.cartan_inv[j][k] * rat_int(v[j]);
                }
            }
            if !acc.is_integer() {
                return None;
            }
            out.push(acc.numer().to_i64().expect("alpha coordinate overflow"));
        }
        Some(out)
    }

    /// Dominant representative of the Weyl orbit of `v`.
    pub fn dominant_representative(&self, v: &[i64]) -> Vec<i64> {
        let mut w = v.to_vec();
        loop {
            match (0..self.rank).find(|&i| w[i] < 0) {
                None => return w,
                Some(i) => {
                    let c = w[i];
                    for j in 0..self.rank {
                        w[j] -= c * self.cartan[i][j];
                    }
                }
            }
        }
    }
}

fn inner_with_gram(gram: &[Vec<Rational>], u: &[i64], v: &[i64]) -> Rational {
    let mut acc = Rational::zero();
    for (i, &ui) in u.iter().enumerate() {
        if ui == 0 {
            continue;
        }
        for (j, &vj) in v.iter().enumerate() {
            if vj != 0 && !gram[i][j].is_zero() {
                acc += &gram[i][j] * rat_int(ui * vj);
            }
        }
    }
    acc
}

/// Simple roots of the standard realization, plus the scale factor that turns
/// the Euclidean form into the basic one (2 for type B, 1 otherwise).
fn euclidean_simple_roots(kind: FactorKind, rank: usize) -> (Vec<Vec<i64>>, i64) {
    let e = |dim: usize, entries: &[(usize, i64)]| -> Vec<i64> {
        let mut v = vec![0i64; dim];
        for &(i, x) in entries {
            v[i] = x;
        }
        v
    };
    match kind {
        FactorKind::A => {
            let dim = rank + 1;
            let roots = (0..rank).map(|i| e(dim, &[(i, 1), (i + 1, -1)])).collect();
            (roots, 1)
        }
        FactorKind::B => {
            let mut roots: Vec<Vec<i64>> = (0..rank - 1)
                .map(|i| e(rank, &[(i, 1), (i + 1, -1)]))
                .collect();
            roots.push(e(rank, &[(rank - 1, 1)]));
            (roots, 2)
        }
        FactorKind::C => {
            let mut roots: Vec<Vec<i64>> = (0..rank - 1)
                .map(|i| e(rank, &[(i, 1), (i + 1, -1)]))
                .collect();
            roots.push(e(rank, &[(rank - 1, 2)]));
            (roots, 1)
        }
        FactorKind::D => {
            let mut roots: Vec<Vec<i64>> = (0..rank - 1)
                .map(|i| e(rank, &[(i, 1), (i + 1, -1)]))
                .collect();
            roots.push(e(rank, &[(rank - 2, 1), (rank - 1, 1)]));
            (roots, 1)
        }
    }
}

fn expected_weyl_order(kind: FactorKind, rank: usize) -> u64 {
    let fact = |n: u64| (1..=n).product::<u64>();
    let r = rank as u64;
    match kind {
        FactorKind::A => fact(r + 1),
        FactorKind::B | FactorKind::C => (1u64 << r) * fact(r),
        FactorKind::D => (1u64 << (r - 1)) * fact(r),
    }
}

fn build_factor_data(kind: FactorKind, rank: usize) -> Arc<FactorData> {
    static CACHE: OnceLock<Mutex<HashMap<(FactorKind, usize), Arc<FactorData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&(kind, rank)) {
        return Arc::clone(hit);
    }

    let (roots_e, scale) = euclidean_simple_roots(kind, rank);
    let dot = |u: &[i64], v: &[i64]| -> i64 { u.iter().zip(v).map(|(a, b)| a * b).sum() };

    let mut cartan = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        for j in 0..rank {
            let num = 2 * dot(&roots_e[i], &roots_e[j]);
            let den = dot(&roots_e[j], &roots_e[j]);
            debug_assert_eq!(num % den, 0);
            cartan[i][j] = num / den;
        }
    }
    let half_lengths: Vec<i64> = (0..rank)
        .map(|j| scale * dot(&roots_e[j], &roots_e[j]) / 2)
        .collect();

    let cartan_rat: Vec<Vec<Rational>> = cartan
        .iter()
        .map(|row| row.iter().map(|&x| rat_int(x)).collect())
        .collect();
    let cartan_inv = linalg::invert_rational(&cartan_rat).expect("Cartan matrix is invertible");
    let gram: Vec<Vec<Rational>> = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| &cartan_inv[i][j] * rat_int(half_lengths[j]))
                .collect()
        })
        .collect();

    // Simple reflections s_i(μ) = μ − μ_i α_i as matrices.
    let mut reflections = Vec::with_capacity(rank);
    for i in 0..rank {
        let mut s = linalg::identity_i64(rank);
        for j in 0..rank {
            s[j][i] -= cartan[i][j];
        }
        reflections.push(s);
    }

    // Close the generators into the full Weyl group.
    let mut weyl: Vec<(Vec<Vec<i64>>, i64)> = Vec::new();
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let id = linalg::identity_i64(rank);
    let key = |m: &Vec<Vec<i64>>| -> Vec<i64> { m.iter().flatten().copied().collect() };
    seen.insert(key(&id), ());
    weyl.push((id, 1));
    let mut frontier = 0;
    while frontier < weyl.len() {
        let (m, sign) = weyl[frontier].clone();
        frontier += 1;
        for s in &reflections {
            let next = linalg::mat_mul_i64(s, &m);
            let k = key(&next);
            if !seen.contains_key(&k) {
                seen.insert(k, ());
                weyl.push((next, -sign));
            }
        }
    }
    assert_eq!(
        weyl.len() as u64,
        expected_weyl_order(kind, rank),
        "Weyl closure of {}{} has wrong order",
        kind.letter(),
        rank
    );

    // All roots form the orbit of the simple roots; keep the positive half.
    let mut all_roots: Vec<Vec<i64>> = Vec::new();
    let mut root_seen: HashMap<Vec<i64>, ()> = HashMap::new();
    for (m, _) in &weyl {
        for i in 0..rank {
            let root = linalg::mat_vec_i64(m, &cartan[i]);
            if root_seen.insert(root.clone(), ()).is_none() {
                all_roots.push(root);
            }
        }
    }
    let data_stub = FactorData {
        kind,
        rank,
        cartan: cartan.clone(),
        cartan_inv,
        gram,
        half_lengths,
        positive_roots: Vec::new(),
        positive_roots_alpha: Vec::new(),
        weyl,
    };
    let mut positive = Vec::new();
    for root in &all_roots {
        let alpha = data_stub
            .alpha_coords(root)
            .expect("roots lie in the root lattice");
        if alpha.iter().all(|&c| c >= 0) {
            positive.push((root.clone(), alpha));
        }
    }
    assert_eq!(2 * positive.len(), all_roots.len());
    positive.sort();
    let mut data = data_stub;
    data.positive_roots = positive.iter().map(|(r, _)| r.clone()).collect();
    data.positive_roots_alpha = positive.into_iter().map(|(_, a)| a).collect();

    let arc = Arc::new(data);
    cache.lock().unwrap().insert((kind, rank), Arc::clone(&arc));
    arc
}

/// A compact connected group presented as a product of simply connected
/// classical simple factors and torus factors.
#[derive(Clone, Debug)]
pub struct RootDatum {
    factors: Vec<Factor>,
    spans: Vec<Range<usize>>,
    factor_data: Vec<Option<Arc<FactorData>>>,
    rank: usize,
    gram: Vec<Vec<Rational>>,
    simple_roots: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    weyl_vector: Vec<i64>,
    coordinate_labels: Vec<String>,
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors
    }
}

impl Eq for RootDatum {}

impl fmt::Display for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", names.join(" x "))
    }
}

/// Validate factor descriptors and materialize the datum: simple roots,
/// fundamental-weight labels, basic inner product, and the Weyl vector.
pub fn build_root_datum(spec: &[FactorDescriptor]) -> Result<RootDatum> {
    if spec.is_empty() {
        return Err(Error::InvalidInput(
            "a group needs at least one factor".into(),
        ));
    }
    let mut factors = Vec::with_capacity(spec.len());
    for (index, desc) in spec.iter().enumerate() {
        let reject = |reason: &str| Error::UnsupportedFactor {
            index,
            kind: desc.kind.clone(),
            rank: desc.rank,
            reason: reason.to_string(),
        };
        let factor = match desc.kind.as_str() {
            "torus" => {
                if desc.rank == 0 {
                    return Err(reject("torus factors need rank >= 1"));
                }
                Factor::Torus { rank: desc.rank }
            }
            "A" | "B" | "C" | "D" => {
                let kind = match desc.kind.as_str() {
                    "A" => FactorKind::A,
                    "B" => FactorKind::B,
                    "C" => FactorKind::C,
                    _ => FactorKind::D,
                };
                if desc.rank > 4 {
                    return Err(reject("simple factors are capped at rank 4"));
                }
                match (kind, desc.rank) {
                    (_, 0) => return Err(reject("simple factors need rank >= 1")),
                    (FactorKind::A, 1..=4)
                    | (FactorKind::B, 2..=4)
                    | (FactorKind::C, 2..=4)
                    | (FactorKind::D, 3..=4) => Factor::Simple {
                        kind,
                        rank: desc.rank,
                    },
                    (FactorKind::B, 1) => return Err(reject("B1 coincides with A1; use type A")),
                    (FactorKind::C, 1) => return Err(reject("C1 coincides with A1; use type A")),
                    (FactorKind::D, 1) => {
                        return Err(reject("D1 is a circle, not simple; use a torus factor"))
                    }
                    (FactorKind::D, 2) => {
                        return Err(reject("D2 is not simple; use two A1 factors"))
                    }
                    _ => unreachable!(),
                }
            }
            other => {
                return Err(Error::UnsupportedFactor {
                    index,
                    kind: other.to_string(),
                    rank: desc.rank,
                    reason: "supported types are A, B, C, D and torus".to_string(),
                })
            }
        };
        factors.push(factor);
    }

    let rank = factors.iter().map(Factor::rank).sum();
    let mut spans = Vec::with_capacity(factors.len());
    let mut factor_data = Vec::with_capacity(factors.len());
    let mut gram = vec![vec![Rational::zero(); rank]; rank];
    let mut simple_roots = Vec::new();
    let mut positive_roots = Vec::new();
    let mut weyl_vector = vec![0i64; rank];
    let mut coordinate_labels = Vec::with_capacity(rank);

    let mut offset = 0usize;
    for (fi, factor) in factors.iter().enumerate() {
        let r = factor.rank();
        let span = offset..offset + r;
        match factor {
            Factor::Simple { kind, rank: fr } => {
                let data = build_factor_data(*kind, *fr);
                for i in 0..r {
                    for j in 0..r {
                        gram[offset + i][offset + j] = data.gram[i][j].clone();
                    }
                    weyl_vector[offset + i] = 1;
                    coordinate_labels.push(format!("f{fi}.w{}", i + 1));
                }
                let embed = |local: &[i64]| -> Vec<i64> {
                    let mut v = vec![0i64; rank];
                    v[span.clone()].copy_from_slice(local);
                    v
                };
                for row in &data.cartan {
                    simple_roots.push(embed(row));
                }
                for root in &data.positive_roots {
                    positive_roots.push(embed(root));
                }
                factor_data.push(Some(data));
            }
            Factor::Torus { .. } => {
                for i in 0..r {
                    gram[offset + i][offset + i] = Rational::one();
                    coordinate_labels.push(format!("f{fi}.t{}", i + 1));
                }
                factor_data.push(None);
            }
        }
        spans.push(span);
        offset += r;
    }

    Ok(RootDatum {
        factors,
        spans,
        factor_data,
        rank,
        gram,
        simple_roots,
        positive_roots,
        weyl_vector,
        coordinate_labels,
    })
}

impl RootDatum {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn spans(&self) -> &[Range<usize>] {
        &self.spans
    }

    pub(crate) fn factor_data(&self, i: usize) -> Option<&Arc<FactorData>> {
        self.factor_data[i].as_ref()
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn weyl_vector(&self) -> &[i64] {
        &self.weyl_vector
    }

    pub fn coordinate_labels(&self) -> &[String] {
        &self.coordinate_labels
    }

    pub fn group_spec(&self) -> GroupSpec {
        GroupSpec {
            factors: self.factors.iter().map(Factor::descriptor).collect(),
        }
    }

    pub fn inner(&self, u: &[i64], v: &[i64]) -> Rational {
        assert_eq!(u.len(), self.rank);
        assert_eq!(v.len(), self.rank);
        inner_with_gram(&self.gram, u, v)
    }

    /// 2⟨v, v + 2ρ⟩ — the Laplace eigenvalue scale with A1 giving m(m+2).
    pub fn casimir(&self, v: &[i64]) -> Rational {
        let mut shifted: Vec<i64> = v.to_vec();
        for (s, r) in shifted.iter_mut().zip(self.weyl_vector.iter()) {
            *s += 2 * r;
        }
        self.inner(v, &shifted) * rat_int(2)
    }

    pub fn is_dominant(&self, v: &[i64]) -> bool {
        if v.len() != self.rank {
            return false;
        }
        self.factors
            .iter()
            .zip(&self.spans)
            .all(|(factor, span)| factor.is_torus() || v[span.clone()].iter().all(|&c| c >= 0))
    }

    /// Cartan matrix recomputed from the stored simple roots and inner
    /// product; block diagonal across simple factors.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.simple_roots.len();
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let num = self.inner(&self.simple_roots[i], &self.simple_roots[j]) * rat_int(2);
                let den = self.inner(&self.simple_roots[j], &self.simple_roots[j]);
                let q = num / den;
                assert!(q.is_integer());
                m[i][j] = q.numer().to_i64().expect("Cartan entry fits i64");
            }
        }
        m
    }

    /// Split a full coordinate vector into per-factor slices.
    pub fn split<'a>(&self, v: &'a [i64]) -> Vec<&'a [i64]> {
        self.spans.iter().map(|s| &v[s.clone()]).collect()
    }
}

/// A point of the maximal torus with rational angles: exp(2πi·angles) in the
/// coordinates dual to the weight basis. Angles are turn fractions in [0, 1).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TorusElement {
    angles: Vec<Rational>,
}

impl TorusElement {
    pub fn new(angles: Vec<Rational>) -> Self {
        let reduced = angles
            .into_iter()
            .map(|a| {
                let f = a.floor();
                a - f
            })
            .collect();
        TorusElement { angles: reduced }
    }

    pub fn zero(rank: usize) -> Self {
        TorusElement {
            angles: vec![Rational::zero(); rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.angles.len()
    }

    pub fn angles(&self) -> &[Rational] {
        &self.angles
    }

    pub fn is_zero(&self) -> bool {
        self.angles.iter().all(|a| a.is_zero())
    }

    /// lcm of the angle denominators: the order of the cyclotomic field in
    /// which every character value of this element lives.
    pub fn denominator_lcm(&self) -> u64 {
        self.angles
            .iter()
            .map(|a| a.denom().to_u64().expect("angle denominator fits u64"))
            .fold(1u64, |acc, d| acc.lcm(&d))
    }
}

/// μ(t) as an exact root of unity: ζ_N^k with N the lcm of the angle
/// denominators and k = N·(μ·angles) mod N.
pub fn cyclotomic_eval(weight: &[i64], t: &TorusElement) -> CyclotomicNumber {
    assert_eq!(
        weight.len(),
        t.rank(),
        "weight length must match torus rank"
    );
    let n = t.denominator_lcm();
    let mut pairing = Rational::zero();
    for (&w, a) in weight.iter().zip(t.angles()) {
        if w != 0 {
            pairing += a * rat_int(w);
        }
    }
    let scaled = pairing * rat_int(n as i64);
    debug_assert!(scaled.is_integer());
    let k = scaled
        .numer()
        .mod_floor(&num_bigint::BigInt::from(n))
        .to_i64()
        .expect("exponent fits i64");
    CyclotomicNumber::root_of_unity(n, k)
}
