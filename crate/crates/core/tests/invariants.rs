//! Cross-module invariants: the dimension box, monotonicity along nested
//! chains, truncated-compactness pigeonholes, kernel-lattice closure, and
//! the cyclotomic ring laws under randomized inputs.

use dimdatum_core::cyclotomic::{cyclotomic_polynomial, divisors, CyclotomicNumber};
use dimdatum_core::datum::{compare_data, dimension_datum, DatumComparison};
use dimdatum_core::irreps::{enumerate_irreps, weyl_dimension};
use dimdatum_core::lie::{build_root_datum, cyclotomic_eval, FactorDescriptor, TorusElement};
use dimdatum_core::rational::{rat, Rational};
use dimdatum_core::spectral::homogeneous_spectrum;
use dimdatum_core::subgroups::{
    catalog_lookup, invariant_dim, kernel_character_lattice, SubgroupDescriptor,
};
use dimdatum_core::RootDatum;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn a1() -> RootDatum {
    build_root_datum(&[FactorDescriptor {
        kind: "A".into(),
        rank: 1,
    }])
    .unwrap()
}

fn a1_catalog(datum: &RootDatum) -> Vec<SubgroupDescriptor> {
    let mut subgroups = vec![
        catalog_lookup(datum, "trivial", None).unwrap(),
        catalog_lookup(datum, "maximal_torus", None).unwrap(),
        catalog_lookup(datum, "torus_normalizer", None).unwrap(),
        catalog_lookup(datum, "binary_tetrahedral", None).unwrap(),
        catalog_lookup(datum, "binary_octahedral", None).unwrap(),
        catalog_lookup(datum, "binary_icosahedral", None).unwrap(),
    ];
    for n in 1..=12 {
        subgroups.push(catalog_lookup(datum, "cyclic", Some(n)).unwrap());
    }
    for n in 2..=12 {
        subgroups.push(catalog_lookup(datum, "binary_dihedral", Some(n)).unwrap());
    }
    subgroups
}

#[test]
fn cyclotomic_product_formula_through_64() {
    // Π_{d|N} Φ_d = x^N − 1, checked with an independent integer
    // polynomial multiplication.
    fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }
    for n in 1..=64u64 {
        let mut product = vec![BigInt::one()];
        for d in divisors(n) {
            product = mul(&product, &cyclotomic_polynomial(d));
        }
        let mut expected = vec![BigInt::zero(); (n + 1) as usize];
        expected[0] = BigInt::from(-1);
        expected[n as usize] = BigInt::one();
        assert_eq!(product, expected, "N = {n}");
    }
}

#[test]
fn dimension_box_over_the_catalog() {
    // 0 ≤ dim V^H ≤ dim V for every catalog subgroup and every label with
    // Casimir value at most 48.
    let d = a1();
    for h in a1_catalog(&d) {
        for lam in enumerate_irreps(&d, 48) {
            let inv = invariant_dim(&d, &lam, &h).unwrap();
            assert!(
                inv <= weyl_dimension(&d, &lam),
                "{} at {:?}",
                h.name(),
                lam.coords()
            );
        }
    }
}

#[test]
fn monotone_along_nested_chains() {
    // ℤ/n ⊂ ℤ/2n ⊂ T ⊂ N(T) and ℤ/2n ⊂ BD(n) ⊂ N(T): invariant
    // dimensions are pointwise non-increasing along each chain.
    let d = a1();
    let torus = catalog_lookup(&d, "maximal_torus", None).unwrap();
    let normalizer = catalog_lookup(&d, "torus_normalizer", None).unwrap();
    for n in 2..=8u32 {
        let zn = catalog_lookup(&d, "cyclic", Some(n)).unwrap();
        let z2n = catalog_lookup(&d, "cyclic", Some(2 * n)).unwrap();
        let bd = catalog_lookup(&d, "binary_dihedral", Some(n)).unwrap();
        for lam in enumerate_irreps(&d, 48) {
            let v_zn = invariant_dim(&d, &lam, &zn).unwrap();
            let v_z2n = invariant_dim(&d, &lam, &z2n).unwrap();
            let v_t = invariant_dim(&d, &lam, &torus).unwrap();
            let v_nt = invariant_dim(&d, &lam, &normalizer).unwrap();
            let v_bd = invariant_dim(&d, &lam, &bd).unwrap();
            assert!(
                v_zn >= v_z2n && v_z2n >= v_t && v_t >= v_nt,
                "n={n} {:?}",
                lam.coords()
            );
            assert!(v_z2n >= v_bd && v_bd >= v_nt, "n={n} {:?}", lam.coords());
        }
    }
}

#[test]
fn truncated_compactness_pigeonhole() {
    // At truncation 3 only the labels 0 and 1 survive, so datum vectors take
    // at most (1+1)·(2+1) = 6 distinct values; any longer family of catalog
    // subgroups must repeat.
    let d = a1();
    let bound: u64 = enumerate_irreps(&d, 3)
        .iter()
        .map(|lam| weyl_dimension(&d, lam) + 1)
        .product();
    assert_eq!(bound, 6);
    let subgroups = a1_catalog(&d);
    assert!(subgroups.len() as u64 > bound);
    let mut seen = std::collections::BTreeSet::new();
    let mut repeated = false;
    for h in &subgroups {
        let v = dimension_datum(&d, h, 3).unwrap();
        let key: Vec<u64> = v.values.iter().map(|e| e.value).collect();
        if !seen.insert(key) {
            repeated = true;
        }
    }
    assert!(seen.len() as u64 <= bound);
    assert!(repeated);
}

#[test]
fn distinct_data_at_a_sufficient_truncation() {
    // The full shipped catalog separates once the truncation clears the
    // slowest pair: binary_dihedral(12) and the torus normalizer first
    // differ at label 24, Casimir 624.
    let d = a1();
    let subgroups: Vec<SubgroupDescriptor> = a1_catalog(&d)
        .into_iter()
        .filter(|h| h.name() != "trivial")
        .collect();
    let vectors: Vec<(String, Vec<u64>)> = subgroups
        .iter()
        .map(|h| {
            let v = dimension_datum(&d, h, 624).unwrap();
            (
                h.name().to_string(),
                v.values.iter().map(|e| e.value).collect(),
            )
        })
        .collect();
    for i in 0..vectors.len() {
        for j in i + 1..vectors.len() {
            assert_ne!(
                vectors[i].1, vectors[j].1,
                "{} and {} share a datum at truncation 624",
                vectors[i].0, vectors[j].0
            );
        }
    }
}

#[test]
fn separating_witness_appears_at_the_cyclic_order() {
    // For ℤ/n ⊂ T the first separating label is m = n (no smaller string
    // carries a nonzero weight divisible by n), so the witness exists as
    // soon as the truncation reaches n(n+2).
    let d = a1();
    let torus = catalog_lookup(&d, "maximal_torus", None).unwrap();
    for n in 2..=12u32 {
        let zn = catalog_lookup(&d, "cyclic", Some(n)).unwrap();
        let needed = n * (n + 2);
        let witness = dimdatum_core::find_separating_irrep(&d, &zn, &torus, needed)
            .unwrap()
            .unwrap_or_else(|| panic!("no witness for n={n}"));
        assert_eq!(witness.weight, vec![n as i64]);
        if needed > n {
            let too_small =
                dimdatum_core::find_separating_irrep(&d, &zn, &torus, needed - 1).unwrap();
            assert!(too_small.is_none(), "premature witness for n={n}");
        }
    }
}

#[test]
fn spectra_dominate_along_inclusions() {
    // Larger subgroups keep fewer invariants, so G/H′ multiplicities are
    // pointwise below G/H multiplicities at every shared eigenvalue.
    let d = a1();
    let chains = [
        ("cyclic", Some(3), "cyclic", Some(6)),
        ("cyclic", Some(4), "maximal_torus", None),
        ("maximal_torus", None, "torus_normalizer", None),
    ];
    for (sub, sub_p, sup, sup_p) in chains {
        let h = catalog_lookup(&d, sub, sub_p).unwrap();
        let hp = catalog_lookup(&d, sup, sup_p).unwrap();
        let s_h = homogeneous_spectrum(&d, &h, 48).unwrap();
        let s_hp = homogeneous_spectrum(&d, &hp, 48).unwrap();
        for entry in &s_hp.entries {
            assert!(
                entry.multiplicity <= s_h.multiplicity_at(&entry.eigenvalue),
                "{sub:?} vs {sup:?} at {}",
                entry.eigenvalue
            );
        }
    }
}

#[test]
fn eigenvalue_zero_is_simple_across_the_catalog() {
    let d = a1();
    for h in a1_catalog(&d) {
        let s = homogeneous_spectrum(&d, &h, 24).unwrap();
        assert_eq!(s.entries[0].eigenvalue, Rational::zero());
        assert_eq!(s.entries[0].multiplicity, 1, "{}", h.name());
    }
}

#[test]
fn datum_comparisons_along_chain_are_dominations() {
    let d = a1();
    let torus = catalog_lookup(&d, "maximal_torus", None).unwrap();
    let normalizer = catalog_lookup(&d, "torus_normalizer", None).unwrap();
    let t_vec = dimension_datum(&d, &torus, 48).unwrap();
    let nt_vec = dimension_datum(&d, &normalizer, 48).unwrap();
    assert!(matches!(
        compare_data(&t_vec, &nt_vec).unwrap(),
        DatumComparison::ADominates { .. }
    ));
}

#[test]
fn kernel_lattice_closure() {
    // The kernel lattice is closed under addition and negation: integer
    // combinations of basis rows still pair to zero with the embedding.
    let t3 = build_root_datum(&[FactorDescriptor {
        kind: "torus".into(),
        rank: 3,
    }])
    .unwrap();
    let h = SubgroupDescriptor::subtorus(&t3, "line", vec![vec![1, 2, 3]], Vec::new()).unwrap();
    let lattice = kernel_character_lattice(&t3, &h).unwrap();
    assert_eq!(lattice.rank(), 2);
    let basis = lattice.basis().to_vec();
    for a in -3i64..=3 {
        for b in -3i64..=3 {
            let combo: Vec<i64> = (0..3).map(|i| a * basis[0][i] + b * basis[1][i]).collect();
            assert!(lattice.contains(&combo), "combo {combo:?}");
            let neg: Vec<i64> = combo.iter().map(|x| -x).collect();
            assert!(lattice.contains(&neg));
        }
    }
}

// --- randomized properties ----------------------------------------------

fn cyclotomic_strategy() -> impl Strategy<Value = CyclotomicNumber> {
    // Orders drawn from divisors of 24 so mixed-order products stay in
    // ℚ(ζ_24); φ(24) = 8 keeps the coordinate vectors small while still
    // exercising every lifting path.
    let order = prop::sample::select(vec![1u64, 2, 3, 4, 6, 8, 12, 24]);
    let term = (order, 0i64..24, -3i64..=3, 1i64..=4);
    proptest::collection::vec(term, 1..=3).prop_map(|terms| {
        let mut acc = CyclotomicNumber::zero();
        for (order, exp, num, den) in terms {
            let root = CyclotomicNumber::root_of_unity(order, exp);
            acc = acc.add(&root.scale(&rat(num, den)));
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_ring_axioms(
        a in cyclotomic_strategy(),
        b in cyclotomic_strategy(),
        c in cyclotomic_strategy(),
    ) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), CyclotomicNumber::zero());
        prop_assert_eq!(a.mul(&CyclotomicNumber::one()), a.clone());
    }

    #[test]
    fn conjugation_is_a_ring_map(
        a in cyclotomic_strategy(),
        b in cyclotomic_strategy(),
    ) {
        prop_assert_eq!(a.add(&b).conjugate(), a.conjugate().add(&b.conjugate()));
        prop_assert_eq!(a.mul(&b).conjugate(), a.conjugate().mul(&b.conjugate()));
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
    }

    #[test]
    fn eval_turns_weight_sums_into_products(
        u in proptest::collection::vec(-6i64..=6, 2),
        v in proptest::collection::vec(-6i64..=6, 2),
        num1 in 0i64..12, den1 in prop::sample::select(vec![1i64, 2, 3, 4, 6, 12]),
        num2 in 0i64..12, den2 in prop::sample::select(vec![1i64, 2, 3, 4, 6, 12]),
    ) {
        let t = TorusElement::new(vec![rat(num1, den1), rat(num2, den2)]);
        let sum: Vec<i64> = u.iter().zip(&v).map(|(a, b)| a + b).collect();
        prop_assert_eq!(
            cyclotomic_eval(&sum, &t),
            cyclotomic_eval(&u, &t).mul(&cyclotomic_eval(&v, &t))
        );
    }

    #[test]
    fn datum_values_stay_in_the_box(n in 1u32..=10, truncation in 1u32..=24) {
        let d = a1();
        let h = catalog_lookup(&d, "cyclic", Some(n)).unwrap();
        let v = dimension_datum(&d, &h, truncation).unwrap();
        for (lam, entry) in enumerate_irreps(&d, truncation).iter().zip(&v.values) {
            prop_assert!(entry.value <= weyl_dimension(&d, lam));
        }
        prop_assert_eq!(v.values[0].value, 1);
    }
}
