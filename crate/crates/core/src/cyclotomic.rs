//! Exact arithmetic in cyclotomic fields.
//!
//! A value of order N lives in ℚ[x]/(Φ_N(x)) with rational coordinates in the
//! power basis 1, x, …, x^{φ(N)−1}. Working modulo the cyclotomic polynomial
//! (rather than x^N − 1) makes equality and rationality coordinate checks.
//! Mixed orders are handled by lifting both operands into ℚ(ζ_L) for
//! L = lcm of the orders, via ζ_d ↦ ζ_L^{L/d}.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::rational::Rational;

pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n > 0);
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

pub fn euler_phi(n: u64) -> u64 {
    assert!(n > 0);
    let mut phi = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            phi = phi / p * (p - 1);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        phi = phi / m * (m - 1);
    }
    phi
}

fn trim_int(coeffs: &mut Vec<BigInt>) {
    while coeffs.len() > 1 && coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
}

/// Exact division of integer polynomials; the divisor must be monic.
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    debug_assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        assert!(
            rem.iter().all(|c| c.is_zero()),
            "inexact polynomial division"
        );
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
        }
        quot[k] = c;
    }
    assert!(
        rem.iter().all(|c| c.is_zero()),
        "inexact polynomial division"
    );
    trim_int(&mut quot);
    quot
}

/// The N-th cyclotomic polynomial, coefficients low to high, computed by
/// recursive division of x^N − 1 by Φ_d for every proper divisor d.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return Arc::clone(hit);
    }
    let poly = if n == 1 {
        vec![BigInt::from(-1), BigInt::one()]
    } else {
        let mut acc = vec![BigInt::zero(); (n + 1) as usize];
        acc[0] = BigInt::from(-1);
        acc[n as usize] = BigInt::one();
        for d in divisors(n) {
            if d < n {
                let phi_d = cyclotomic_polynomial(d);
                acc = int_poly_div_exact(&acc, &phi_d);
            }
        }
        acc
    };
    debug_assert_eq!(poly.len() as u64 - 1, euler_phi(n));
    let arc = Arc::new(poly);
    cache.lock().unwrap().insert(n, Arc::clone(&arc));
    arc
}

fn reduce_mod_cyclotomic(mut poly: Vec<Rational>, order: u64) -> Vec<Rational> {
    let modulus = cyclotomic_polynomial(order);
    let deg = modulus.len() - 1;
    while poly.len() > deg {
        let lead = poly.pop().unwrap();
        if !lead.is_zero() {
            let k = poly.len() - deg;
            for (i, c) in modulus.iter().take(deg).enumerate() {
                let delta = &lead * Rational::from(c.clone());
                poly[k + i] -= delta;
            }
        }
    }
    poly.resize(deg, Rational::zero());
    poly
}

/// An exact element of ℚ(ζ_order).
#[derive(Clone, Debug)]
pub struct CyclotomicNumber {
    order: u64,
    coords: Vec<Rational>,
}

impl CyclotomicNumber {
    pub fn from_rational(r: Rational) -> Self {
        CyclotomicNumber {
            order: 1,
            coords: vec![r],
        }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    /// ζ_n^k.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n > 0);
        let k = k.rem_euclid(n as i64) as usize;
        let mut poly = vec![Rational::zero(); k + 1];
        poly[k] = Rational::one();
        CyclotomicNumber {
            order: n,
            coords: reduce_mod_cyclotomic(poly, n),
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// Rewrite in ℚ(ζ_target); `order` must divide `target`.
    pub fn lifted(&self, target: u64) -> Self {
        assert_eq!(
            target % self.order,
            0,
            "lift target must be a multiple of the order"
        );
        if target == self.order {
            return self.clone();
        }
        let step = (target / self.order) as usize;
        let mut poly = vec![Rational::zero(); (self.coords.len() - 1) * step + 1];
        for (j, c) in self.coords.iter().enumerate() {
            poly[j * step] = c.clone();
        }
        CyclotomicNumber {
            order: target,
            coords: reduce_mod_cyclotomic(poly, target),
        }
    }

    fn common_order(&self, other: &Self) -> u64 {
        num_integer::lcm(self.order, other.order)
    }

    pub fn add(&self, other: &Self) -> Self {
        let l = self.common_order(other);
        let mut a = self.lifted(l);
        let b = other.lifted(l);
        for (x, y) in a.coords.iter_mut().zip(b.coords.iter()) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CyclotomicNumber {
            order: self.order,
            coords: self.coords.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let l = self.common_order(other);
        let a = self.lifted(l);
        let b = other.lifted(l);
        let mut prod = vec![Rational::zero(); a.coords.len() + b.coords.len() - 1];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        CyclotomicNumber {
            order: l,
            coords: reduce_mod_cyclotomic(prod, l),
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        CyclotomicNumber {
            order: self.order,
            coords: self.coords.iter().map(|c| c * factor).collect(),
        }
    }

    /// Complex conjugation, ζ_N ↦ ζ_N^{N−1}.
    pub fn conjugate(&self) -> Self {
        let n = self.order;
        let mut poly = vec![Rational::zero(); n as usize];
        for (j, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                let e = ((n - j as u64) % n) as usize;
                poly[e] += c;
            }
        }
        CyclotomicNumber {
            order: n,
            coords: reduce_mod_cyclotomic(poly, n),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// True iff every coordinate beyond the constant term vanishes.
    pub fn is_rational(&self) -> bool {
        self.coords.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        let l = self.common_order(other);
        self.lifted(l).coords == other.lifted(l).coords
    }
}

impl Eq for CyclotomicNumber {}

impl std::fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let terms: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                if j == 0 {
                    format!("{c}")
                } else {
                    format!("({c})*z{}^{j}", self.order)
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn phi_values() {
        for (n, expected) in [(1, 1), (2, 1), (3, 2), (4, 2), (6, 2), (12, 4), (60, 16)] {
            assert_eq!(euler_phi(n), expected);
        }
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        let as_i64 = |n: u64| -> Vec<i64> {
            cyclotomic_polynomial(n)
                .iter()
                .map(|c| i64::try_from(c).unwrap())
                .collect()
        };
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(2), vec![1, 1]);
        assert_eq!(as_i64(3), vec![1, 1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
        // First index with a coefficient outside {−1, 0, 1}.
        assert_eq!(as_i64(105)[7], -2);
    }

    #[test]
    fn fourth_root_squares_to_minus_one() {
        let i = CyclotomicNumber::root_of_unity(4, 1);
        assert_eq!(i.mul(&i), CyclotomicNumber::from_rational(rat_int(-1)));
        assert_eq!(
            CyclotomicNumber::root_of_unity(4, 2),
            CyclotomicNumber::from_rational(rat_int(-1))
        );
    }

    #[test]
    fn primitive_root_sum_is_minus_one() {
        // 1 + ζ_p + … + ζ_p^{p−1} = 0 for prime p.
        for p in [2u64, 3, 5, 7, 11] {
            let mut acc = CyclotomicNumber::zero();
            for k in 0..p {
                acc = acc.add(&CyclotomicNumber::root_of_unity(p, k as i64));
            }
            assert!(acc.is_zero(), "order {p}");
        }
    }

    #[test]
    fn mixed_order_equality() {
        // ζ_6^3 = −1 = ζ_2.
        assert_eq!(
            CyclotomicNumber::root_of_unity(6, 3),
            CyclotomicNumber::root_of_unity(2, 1)
        );
        // ζ_4^2 computed at order 12.
        assert_eq!(
            CyclotomicNumber::root_of_unity(12, 6),
            CyclotomicNumber::from_rational(rat_int(-1))
        );
    }

    #[test]
    fn conjugation_inverts_roots() {
        for n in [3u64, 4, 5, 8, 12] {
            for k in 0..n {
                let z = CyclotomicNumber::root_of_unity(n, k as i64);
                assert_eq!(
                    z.conjugate(),
                    CyclotomicNumber::root_of_unity(n, -(k as i64))
                );
                // z * conj(z) = 1 on the unit circle.
                assert_eq!(z.mul(&z.conjugate()), CyclotomicNumber::one());
            }
        }
    }

    #[test]
    fn golden_ratio_combination_is_rational() {
        // ζ_5 + ζ_5^4 + ζ_5^2 + ζ_5^3 = −1.
        let z = |k| CyclotomicNumber::root_of_unity(5, k);
        let s = z(1).add(&z(4)).add(&z(2)).add(&z(3));
        assert_eq!(s.as_rational(), Some(rat_int(-1)));
        // ζ_5 + ζ_5^4 alone is irrational.
        assert!(!z(1).add(&z(4)).is_rational());
    }

    #[test]
    fn scaling() {
        let z = CyclotomicNumber::root_of_unity(8, 1);
        let s = z.scale(&rat(3, 2)).add(&z.scale(&rat(-3, 2)));
        assert!(s.is_zero());
    }
}
