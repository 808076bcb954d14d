//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients of the `n`-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_poly(n: usize) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Φ_d with d | n, d < n.
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = div_monic(&num, &cyclotomic_poly(d));
        }
    }
    cache.lock().unwrap().insert(n, num.clone());
    num
}

fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let qd = r.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = r[k + dd];
        q[k] = c;
        for (t, &dc) in den.iter().enumerate() {
            r[k + t] -= c * dc;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

pub fn euler_phi(n: usize) -> usize {
    cyclotomic_poly(n).len() - 1
}

/// Reduces a polynomial in `ζ_n` (any length) to the canonical basis
/// `1, ζ, .., ζ^{φ(n)-1}`.
fn reduce(n: usize, poly: &[BigRational]) -> Vec<BigRational> {
    let mut a = vec![BigRational::zero(); n];
    for (k, c) in poly.iter().enumerate() {
        if !c.is_zero() {
            a[k % n] += c;
        }
    }
    let phi = cyclotomic_poly(n);
    let f = phi.len() - 1;
    for deg in (f..n).rev() {
        if a[deg].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut a[deg], BigRational::zero());
        for (t, &pc) in phi.iter().enumerate().take(f) {
            if pc != 0 {
                a[deg - f + t] -= &c * BigRational::from_integer(BigInt::from(pc));
            }
        }
    }
    a.truncate(f);
    a
}

/// An element of `Q(ζ_N)` in canonical form.
#[derive(Clone, Debug)]
pub struct CycValue {
    conductor: usize,
    coeffs: Vec<BigRational>,
}

impl CycValue {
    pub fn from_rational(q: BigRational) -> Self {
        CycValue { conductor: 1, coeffs: vec![q] }
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(k)))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// `ζ_n^k`.
    pub fn zeta(n: usize, k: usize) -> Self {
        let mut poly = vec![BigRational::zero(); n];
        poly[k % n] = BigRational::one();
        CycValue { conductor: n, coeffs: reduce(n, &poly) }
    }

    /// `Σ_k poly[k] ζ_n^k`.
    pub fn from_poly(n: usize, poly: &[BigRational]) -> Self {
        CycValue { conductor: n, coeffs: reduce(n, poly) }
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Re-expresses the value over `Q(ζ_m)` for a multiple `m` of the conductor.
    pub fn lift(&self, m: usize) -> CycValue {
        assert!(m % self.conductor == 0, "lift target must be a multiple of the conductor");
        if m == self.conductor {
            return self.clone();
        }
        let step = m / self.conductor;
        let mut poly = vec![BigRational::zero(); m];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[k * step] = c.clone();
        }
        CycValue { conductor: m, coeffs: reduce(m, &poly) }
    }

    fn common(&self, other: &CycValue) -> (CycValue, CycValue) {
        let m = self.conductor.lcm(&other.conductor);
        (self.lift(m), other.lift(m))
    }

    pub fn add(&self, other: &CycValue) -> CycValue {
        let (a, b) = self.common(other);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        CycValue { conductor: a.conductor, coeffs }
    }

    pub fn neg(&self) -> CycValue {
        CycValue { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &CycValue) -> CycValue {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &CycValue) -> CycValue {
        let (a, b) = self.common(other);
        let n = a.conductor;
        let mut poly = vec![BigRational::zero(); 2 * a.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    poly[i + j] += x * y;
                }
            }
        }
        CycValue { conductor: n, coeffs: reduce(n, &poly) }
    }

    pub fn scale(&self, q: &BigRational) -> CycValue {
        CycValue { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Complex conjugation, `ζ^k -> ζ^{-k}`.
    pub fn conj(&self) -> CycValue {
        let n = self.conductor;
        let mut poly = vec![BigRational::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[(n - k) % n] = c.clone();
        }
        CycValue { conductor: n, coeffs: reduce(n, &poly) }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Lexicographic comparison of coefficient vectors over a common
    /// conductor. Agrees with numeric order on rationals.
    pub fn lex_cmp(&self, other: &CycValue) -> std::cmp::Ordering {
        let (a, b) = self.common(other);
        a.coeffs.cmp(&b.coeffs)
    }

    /// Coefficients over the basis `1, ζ_N, ..` rendered as strings.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl PartialEq for CycValue {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycValue {}

impl fmt::Display for CycValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let abs = c.abs();
            let mag = if abs.is_one() && k > 0 { String::new() } else { abs.to_string() };
            let sep = if mag.is_empty() || k == 0 { "" } else { "*" };
            let z = match k {
                0 => String::new(),
                1 => format!("z{}", self.conductor),
                _ => format!("z{}^{k}", self.conductor),
            };
            write!(f, "{sign}{mag}{sep}{z}")?;
            first = false;
        }
        Ok(())
    }
}
