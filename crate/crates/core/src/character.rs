//! Ordinary character tables via Dixon–Schneider, with exact values.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::cyclotomic::CycValue;
use crate::error::{Error, Result};
use crate::perm::{CayleyGroup, Subgroup};

/// Conjugacy classes, numbered by their smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassData {
    pub class_of: Vec<usize>,
    pub representatives: Vec<usize>,
    pub sizes: Vec<usize>,
    /// Class containing the inverses of each class.
    pub inverse_class: Vec<usize>,
    /// Element order on each class.
    pub orders: Vec<usize>,
}

pub fn conjugacy_classes(g: &CayleyGroup) -> ClassData {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    let mut sizes = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let c = representatives.len();
        representatives.push(x);
        let mut size = 0;
        for y in 0..n {
            let z = g.conj(y, x);
            if class_of[z] == usize::MAX {
                class_of[z] = c;
                size += 1;
            }
        }
        sizes.push(size);
    }
    let inverse_class = representatives.iter().map(|&r| class_of[g.inv(r)]).collect();
    let orders = representatives.iter().map(|&r| g.element_order(r)).collect();
    ClassData { class_of, representatives, sizes, inverse_class, orders }
}

impl ClassData {
    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    pub fn group_order(&self) -> usize {
        self.class_of.len()
    }

    /// Classes sorted by (element order, size, smallest member).
    pub fn display_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by_key(|&c| (self.orders[c], self.sizes[c], self.representatives[c]));
        idx
    }

    /// Number of elements of `h` in each class.
    pub fn fusion_counts(&self, h: &Subgroup) -> Vec<usize> {
        let mut counts = vec![0; self.len()];
        for &x in h.members() {
            counts[self.class_of[x]] += 1;
        }
        counts
    }
}

/// Irreducible characters of a finite group with values in `Q(ζ_e)`,
/// `e` the exponent.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub classes: ClassData,
    pub rows: Vec<Vec<CycValue>>,
    pub degrees: Vec<usize>,
    pub exponent: usize,
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn value(&self, r: usize, g: usize) -> &CycValue {
        &self.rows[r][self.classes.class_of[g]]
    }

    /// Reorders rows so that new row `k` is old row `perm[k]`.
    pub fn permute_rows(&mut self, perm: &[usize]) {
        self.rows = perm.iter().map(|&k| self.rows[k].clone()).collect();
        self.degrees = perm.iter().map(|&k| self.degrees[k]).collect();
    }

    /// Row index of the conjugate of row `r`.
    pub fn conjugate_row(&self, r: usize) -> usize {
        let c = conjugate_character(&self.rows[r]);
        self.rows.iter().position(|row| *row == c).expect("conjugate of an irreducible is irreducible")
    }

    /// Both orthogonality relations and `Σ deg² = |G|`, exactly.
    pub fn verify(&self) -> Result<()> {
        let cd = &self.classes;
        let n = cd.group_order();
        let k = cd.len();
        if self.rows.len() != k {
            return Err(Error::Consistency(format!("{} characters for {k} classes", self.rows.len())));
        }
        let sq: usize = self.degrees.iter().map(|d| d * d).sum();
        if sq != n || self.degrees.iter().any(|d| n % d != 0) {
            return Err(Error::Consistency("character degrees inconsistent with group order".into()));
        }
        for a in 0..k {
            for b in a..k {
                let ip = inner_product(cd, &self.rows[a], &self.rows[b])?;
                let want = if a == b { 1 } else { 0 };
                if ip != BigRational::from_integer(BigInt::from(want)) {
                    return Err(Error::Consistency(format!("rows {a},{b} have inner product {ip}")));
                }
            }
        }
        for c in 0..k {
            for d in c..k {
                let s = (0..k).fold(CycValue::zero(), |acc, r| {
                    acc.add(&self.rows[r][c].mul(&self.rows[r][d].conj()))
                });
                let want = if c == d { (n / cd.sizes[c]) as i64 } else { 0 };
                if s != CycValue::from_int(want) {
                    return Err(Error::Consistency(format!("columns {c},{d} not orthogonal")));
                }
            }
        }
        Ok(())
    }
}

/// `(1/|G|) Σ_g a(g)·conj(b(g))`.
pub fn inner_product(cd: &ClassData, a: &[CycValue], b: &[CycValue]) -> Result<BigRational> {
    let mut s = CycValue::zero();
    for c in 0..cd.len() {
        let size = CycValue::from_int(cd.sizes[c] as i64);
        s = s.add(&size.mul(&a[c]).mul(&b[c].conj()));
    }
    let q = s
        .to_rational()
        .ok_or_else(|| Error::Consistency("inner product is not rational".into()))?;
    Ok(q / BigRational::from_integer(BigInt::from(cd.group_order())))
}

/// Multiplicity of `χ` in the permutation character on the cosets of `h`,
/// i.e. `(1/|H|) Σ_{h∈H} χ(h)`.
pub fn perm_character_multiplicity(cd: &ClassData, h: &Subgroup, chi: &[CycValue]) -> Result<u64> {
    let counts = cd.fusion_counts(h);
    let mut s = CycValue::zero();
    for (c, &m) in counts.iter().enumerate() {
        if m > 0 {
            s = s.add(&chi[c].scale(&BigRational::from_integer(BigInt::from(m))));
        }
    }
    integral_average(&s, h.order())
}

/// `s / denom` as a non-negative integer.
pub(crate) fn integral_average(s: &CycValue, denom: usize) -> Result<u64> {
    let q = s
        .to_rational()
        .ok_or_else(|| Error::Consistency("multiplicity is not rational".into()))?
        / BigRational::from_integer(BigInt::from(denom));
    if !q.is_integer() || q < BigRational::zero() {
        return Err(Error::Consistency(format!("multiplicity {q} is not a non-negative integer")));
    }
    Ok(q.to_integer().to_u64().expect("small multiplicity"))
}

pub fn kernel_contains(cd: &ClassData, chi: &[CycValue], n: &Subgroup) -> bool {
    let one = &chi[0];
    n.members().iter().all(|&x| chi[cd.class_of[x]] == *one)
}

/// Elements of `G` on which `χ` takes the value `χ(1)`.
pub fn kernel(cd: &ClassData, chi: &[CycValue]) -> Subgroup {
    Subgroup::from_members(
        (0..cd.group_order()).filter(|&x| chi[cd.class_of[x]] == chi[0]).collect(),
    )
}

pub fn conjugate_character(chi: &[CycValue]) -> Vec<CycValue> {
    chi.iter().map(CycValue::conj).collect()
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Smallest prime `p ≡ 1 (mod e)` with `p > 2√n`.
pub fn dixon_prime(exponent: usize, n: usize) -> u64 {
    let e = exponent as u64;
    let mut p = e + 1;
    while !(is_prime(p) && (p as f64) > 2.0 * (n as f64).sqrt() && p * p > 4 * n as u64) {
        p += e;
    }
    p
}

fn primitive_root(p: u64) -> u64 {
    let m = p - 1;
    let mut factors = Vec::new();
    let mut r = m;
    let mut d = 2;
    while d * d <= r {
        if r % d == 0 {
            factors.push(d);
            while r % d == 0 {
                r /= d;
            }
        }
        d += 1;
    }
    if r > 1 {
        factors.push(r);
    }
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, m / q, p) != 1))
        .unwrap_or(1)
}

/// Reduced row echelon form over `F_p`; returns the nonzero rows.
fn rref(mut rows: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let width = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..width {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, piv);
        let inv = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for t in 0..width {
                    rows[i][t] = (rows[i][t] + p - f * rows[r][t] % p) % p;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    rows
}

/// Basis of the null space `{x : M x = 0}` of a square matrix.
fn null_space(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let d = m.len();
    let red = rref(m.to_vec(), p);
    let pivots: Vec<usize> = red.iter().map(|row| row.iter().position(|&x| x != 0).unwrap()).collect();
    let mut basis = Vec::new();
    for free in (0..d).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; d];
        v[free] = 1;
        for (row, &pc) in red.iter().zip(&pivots) {
            v[pc] = (p - row[free]) % p;
        }
        basis.push(v);
    }
    basis
}

/// Splits `F_p^k` into common eigenlines of the commuting class matrices.
fn common_eigenvectors(mats: &[Vec<Vec<u64>>], k: usize, p: u64) -> Result<Vec<Vec<u64>>> {
    let identity: Vec<Vec<u64>> = (0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect();
    let mut work = vec![identity];
    let mut lines = Vec::new();
    while let Some(basis) = work.pop() {
        if basis.len() == 1 {
            lines.push(basis.into_iter().next().unwrap());
            continue;
        }
        let d = basis.len();
        let pivots: Vec<usize> = basis.iter().map(|row| row.iter().position(|&x| x != 0).unwrap()).collect();
        let mut split = false;
        for a in mats {
            // Restriction R with A·E_t = Σ_s R[s][t] E_s.
            let images: Vec<Vec<u64>> = basis
                .iter()
                .map(|e| (0..k).map(|r| (0..k).fold(0, |acc, c| (acc + a[r][c] * e[c]) % p)).collect())
                .collect();
            let restricted: Vec<Vec<u64>> =
                (0..d).map(|s| (0..d).map(|t| images[t][pivots[s]]).collect()).collect();
            let mut spaces = Vec::new();
            let mut total = 0;
            for lambda in 0..p {
                let shifted: Vec<Vec<u64>> = (0..d)
                    .map(|s| (0..d).map(|t| (restricted[s][t] + if s == t { p - lambda } else { 0 }) % p).collect())
                    .collect();
                let ns = null_space(&shifted, p);
                if !ns.is_empty() {
                    total += ns.len();
                    spaces.push(ns);
                }
                if total == d {
                    break;
                }
            }
            if total != d {
                return Err(Error::Consistency("class matrix is not diagonalisable mod p".into()));
            }
            if spaces.len() > 1 {
                for ns in spaces {
                    let vecs: Vec<Vec<u64>> = ns
                        .iter()
                        .map(|c| (0..k).map(|x| (0..d).fold(0, |acc, t| (acc + c[t] * basis[t][x]) % p)).collect())
                        .collect();
                    work.push(rref(vecs, p));
                }
                split = true;
                break;
            }
        }
        if !split {
            return Err(Error::Consistency("class matrices fail to separate characters".into()));
        }
    }
    Ok(lines)
}

/// The irreducible characters of `g`, rows in canonical order: by degree,
/// trivial character first, then by values on the classes in
/// [`ClassData::display_order`], lexicographically descending.
pub fn character_table(g: &CayleyGroup) -> Result<CharacterTable> {
    let cd = conjugacy_classes(g);
    let n = g.order();
    let k = cd.len();
    let e = g.exponent();
    let p = dixon_prime(e, n);

    // (A_j)[c][i] = #{x ∈ C_j : x^{-1} g_i ∈ C_c}
    let mut mats = vec![vec![vec![0u64; k]; k]; k];
    for (i, &gi) in cd.representatives.iter().enumerate() {
        for x in 0..n {
            let j = cd.class_of[x];
            let c = cd.class_of[g.mul(g.inv(x), gi)];
            mats[j][c][i] += 1;
        }
    }
    for m in mats.iter_mut() {
        for row in m.iter_mut() {
            for x in row.iter_mut() {
                *x %= p;
            }
        }
    }
    let lines = if k == 1 { vec![vec![1]] } else { common_eigenvectors(&mats[1..], k, p)? };

    let w = primitive_root(p);
    let z = pow_mod(w, (p - 1) / e as u64, p);
    let power_class: Vec<Vec<usize>> = cd
        .representatives
        .iter()
        .map(|&r| (0..e).map(|t| cd.class_of[g.pow(r, t)]).collect())
        .collect();

    let mut rows = Vec::with_capacity(k);
    let mut degrees = Vec::with_capacity(k);
    for v in lines {
        let s = inv_mod(v[0], p);
        let omega: Vec<u64> = v.iter().map(|&x| x * s % p).collect();
        let denom = (0..k).fold(0, |acc, c| {
            (acc + omega[c] * omega[cd.inverse_class[c]] % p * inv_mod(cd.sizes[c] as u64 % p, p)) % p
        });
        let d2 = (n as u64 % p) * inv_mod(denom, p) % p;
        let deg = (1..=n as u64)
            .take_while(|d| d * d <= n as u64)
            .find(|d| d * d % p == d2)
            .ok_or_else(|| Error::Consistency("no integral degree for eigenvector".into()))?;
        let modp: Vec<u64> = (0..k)
            .map(|c| omega[c] * deg % p * inv_mod(cd.sizes[c] as u64 % p, p) % p)
            .collect();
        let inv_e = inv_mod(e as u64 % p, p);
        let row: Vec<CycValue> = (0..k)
            .map(|c| {
                let poly: Vec<BigRational> = (0..e)
                    .map(|l| {
                        let m = (0..e).fold(0, |acc, t| {
                            let zt = pow_mod(z, ((e - (l * t) % e) % e) as u64, p);
                            (acc + modp[power_class[c][t]] * zt) % p
                        }) * inv_e
                            % p;
                        BigRational::from_integer(BigInt::from(m))
                    })
                    .collect();
                CycValue::from_poly(e, &poly)
            })
            .collect();
        rows.push(row);
        degrees.push(deg as usize);
    }

    let order = cd.display_order();
    let mut idx: Vec<usize> = (0..k).collect();
    idx.sort_by(|&a, &b| {
        let trivial = |r: usize| rows[r].iter().all(|v| *v == CycValue::one());
        degrees[a]
            .cmp(&degrees[b])
            .then_with(|| trivial(b).cmp(&trivial(a)))
            .then_with(|| {
                order
                    .iter()
                    .map(|&c| rows[b][c].lex_cmp(&rows[a][c]))
                    .find(|o| o.is_ne())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
    });
    let mut table = CharacterTable { classes: cd, rows, degrees, exponent: e };
    table.permute_rows(&idx);
    table.verify()?;
    Ok(table)
}
