//! Brauer diagrams, the Brauer monoid's J-classes, and the label orders of
//! the Brauer algebra.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::relation::OrderRelation;
use crate::symmetric::{add_horizontal_2_strips, partitions_of, MnCache, Partition};

/// A perfect matching on `2n` nodes: north `0..n`, south `n..2n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BrauerDiagram {
    n: usize,
    partner: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComposeResult {
    pub diagram: BrauerDiagram,
    /// Closed loops removed from the middle row.
    pub cycles: usize,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl BrauerDiagram {
    pub fn from_partner(partner: Vec<usize>) -> Result<Self> {
        let m = partner.len();
        if m % 2 != 0 || partner.iter().enumerate().any(|(x, &y)| y >= m || y == x || partner[y] != x) {
            return Err(Error::InvalidPermutation(format!("not a perfect matching: {partner:?}")));
        }
        Ok(BrauerDiagram { n: m / 2, partner })
    }

    /// Builds a diagram from node pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![usize::MAX; 2 * n];
        for &(a, b) in pairs {
            if a >= 2 * n || b >= 2 * n || partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(Error::InvalidPermutation(format!("bad pairs {pairs:?}")));
            }
            partner[a] = b;
            partner[b] = a;
        }
        Self::from_partner(partner)
    }

    pub fn identity(n: usize) -> Self {
        let mut partner = vec![0; 2 * n];
        for q in 0..n {
            partner[q] = n + q;
            partner[n + q] = q;
        }
        BrauerDiagram { n, partner }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn partner(&self, x: usize) -> usize {
        self.partner[x]
    }

    pub fn partners(&self) -> &[usize] {
        &self.partner
    }

    /// Edges `(a, b)` with `a < b`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..2 * self.n).filter(|&x| x < self.partner[x]).map(|x| (x, self.partner[x])).collect()
    }

    pub fn propagating_lines(&self) -> usize {
        (0..self.n).filter(|&x| self.partner[x] >= self.n).count()
    }

    /// J-class index `i` with `n_i` propagating lines.
    pub fn j_class_index(&self) -> usize {
        let d = self.n / 2;
        (self.propagating_lines() - (self.n - 2 * d)) / 2 + 1
    }

    /// Flip about the horizontal axis.
    pub fn reflect(&self) -> BrauerDiagram {
        let n = self.n;
        let swap = |x: usize| if x < n { x + n } else { x - n };
        let partner = (0..2 * n).map(|x| swap(self.partner[swap(x)])).collect();
        BrauerDiagram { n, partner }
    }
}

impl fmt::Debug for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        let node = |x: usize| if x < n { format!("{}", x + 1) } else { format!("{}'", x - n + 1) };
        let parts: Vec<String> = self.edges().iter().map(|&(a, b)| format!("{{{},{}}}", node(a), node(b))).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `t` stacked above `u`: the north of `t` and the south of `u` survive,
/// loops in the middle row are counted and dropped.
pub fn compose(t: &BrauerDiagram, u: &BrauerDiagram) -> ComposeResult {
    let n = t.n;
    assert_eq!(n, u.n, "degree mismatch");
    // Rows: top 0..n, middle n..2n, bottom 2n..3n.
    let mut uf = UnionFind::new(3 * n);
    for (a, b) in t.edges() {
        uf.union(a, b);
    }
    for (a, b) in u.edges() {
        uf.union(a + n, b + n);
    }
    let mut ends: HashMap<usize, Vec<usize>> = HashMap::new();
    for x in (0..n).chain(2 * n..3 * n) {
        ends.entry(uf.find(x)).or_default().push(x);
    }
    let mut partner = vec![0; 2 * n];
    let out = |x: usize| if x < n { x } else { x - n };
    for nodes in ends.values() {
        let (a, b) = (out(nodes[0]), out(nodes[1]));
        partner[a] = b;
        partner[b] = a;
    }
    // Union keeps the smallest index as root, so a pure middle-row loop is
    // rooted in the middle row and owns no outer endpoint.
    let mut loops = 0;
    for x in n..2 * n {
        let r = uf.find(x);
        if r == x && !ends.contains_key(&r) {
            loops += 1;
        }
    }
    ComposeResult { diagram: BrauerDiagram { n, partner }, cycles: loops }
}

/// `d = ⌊n/2⌋` and `n_i = n − 2(d − i + 1)`.
pub fn n_i(n: usize, i: usize) -> usize {
    let d = n / 2;
    assert!(i >= 1 && i <= d + 1, "J-class index out of range");
    n - 2 * (d + 1 - i)
}

/// Lines on the first `n_i` columns, adjacent arcs on both rows after.
pub fn e_idempotent(n: usize, i: usize) -> BrauerDiagram {
    perm_to_diagram(&Perm::identity(n_i(n, i)), n, i)
}

/// `t_σ`: lines `{σ(q), q'}` for `q < n_i`, with the arcs of `e_i`.
pub fn perm_to_diagram(sigma: &Perm, n: usize, i: usize) -> BrauerDiagram {
    let ni = n_i(n, i);
    assert_eq!(sigma.degree(), ni, "permutation degree must be n_i");
    let mut partner = vec![0; 2 * n];
    for q in 0..ni {
        partner[sigma.apply(q)] = n + q;
        partner[n + q] = sigma.apply(q);
    }
    let mut q = ni;
    while q + 1 < n {
        for base in [0, n] {
            partner[base + q] = base + q + 1;
            partner[base + q + 1] = base + q;
        }
        q += 2;
    }
    BrauerDiagram { n, partner }
}

pub fn diagram_to_perm(t: &BrauerDiagram, i: usize) -> Result<Perm> {
    let n = t.n;
    let ni = n_i(n, i);
    let e = e_idempotent(n, i);
    let bad = Error::NotInMaximalSubgroup { class: i };
    for x in (ni..n).chain(n + ni..2 * n) {
        if t.partner[x] != e.partner[x] {
            return Err(bad);
        }
    }
    let mut images = vec![0; ni];
    for (q, img) in images.iter_mut().enumerate() {
        let p = t.partner[n + q];
        if p >= ni {
            return Err(bad);
        }
        *img = p;
    }
    Perm::new(images).map_err(|_| bad)
}

/// Every diagram of degree `n`, in lexicographic order of partner arrays.
pub fn all_diagrams(n: usize) -> Vec<BrauerDiagram> {
    fn rec(partner: &mut Vec<usize>, n: usize, out: &mut Vec<BrauerDiagram>) {
        let Some(a) = partner.iter().position(|&p| p == usize::MAX) else {
            out.push(BrauerDiagram { n, partner: partner.clone() });
            return;
        };
        for b in a + 1..2 * n {
            if partner[b] == usize::MAX {
                partner[a] = b;
                partner[b] = a;
                rec(partner, n, out);
                partner[a] = usize::MAX;
                partner[b] = usize::MAX;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![usize::MAX; 2 * n], n, &mut out);
    out.sort();
    out
}

pub fn random_diagram(n: usize, rng: &mut impl Rng) -> BrauerDiagram {
    let mut nodes: Vec<usize> = (0..2 * n).collect();
    nodes.shuffle(rng);
    let pairs: Vec<(usize, usize)> = nodes.chunks(2).map(|c| (c[0], c[1])).collect();
    BrauerDiagram::from_pairs(n, &pairs).expect("shuffled pairing is a matching")
}

/// All permutations of `0..m`.
pub fn all_perms(m: usize) -> Vec<Perm> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        if cur.len() == used.len() {
            out.push(Perm::new(cur.clone()).unwrap());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

/// Embeds a permutation of `0..a` into `0..b` fixing the rest.
fn extend(p: &Perm, b: usize) -> Perm {
    let mut images: Vec<usize> = (0..b).collect();
    images[..p.degree()].copy_from_slice(p.images());
    Perm::new(images).unwrap()
}

/// `W_{i,j} ≅ S_2 ≀ S_{i−j}`: permutations of `0..n_i` fixing the first
/// `n_j` points and preserving the pairing `{n_j, n_j+1}, {n_j+2, n_j+3}, ..`.
pub fn wreath_w(n: usize, i: usize, j: usize) -> Vec<Perm> {
    let (ni, nj) = (n_i(n, i), n_i(n, j));
    let k = i - j;
    let mut out = Vec::new();
    for block in all_perms(k) {
        for flips in 0..(1usize << k) {
            let mut images: Vec<usize> = (0..ni).collect();
            for b in 0..k {
                let target = block.apply(b);
                let f = (flips >> b) & 1;
                images[nj + 2 * b] = nj + 2 * target + f;
                images[nj + 2 * b + 1] = nj + 2 * target + 1 - f;
            }
            out.push(Perm::new(images).unwrap());
        }
    }
    out.sort();
    out
}

/// `L_{i,j} = {(τ·w, τ) : τ ∈ S_{n_j}, w ∈ W_{i,j}} ≤ S_{n_i} × S_{n_j}`.
pub fn stab_subgroup_l(n: usize, i: usize, j: usize) -> Vec<(Perm, Perm)> {
    assert!(j < i, "requires j < i");
    let ni = n_i(n, i);
    let ws = wreath_w(n, i, j);
    let mut out = Vec::new();
    for tau in all_perms(n_i(n, j)) {
        let big = extend(&tau, ni);
        for w in &ws {
            out.push((big.compose(w), tau.clone()));
        }
    }
    out.sort();
    out
}

/// Diagrams of class `j` fixed by `e_i ∘ - ∘ e_j`.
pub fn connecting_diagrams(n: usize, i: usize, j: usize) -> Vec<BrauerDiagram> {
    let (ei, ej) = (e_idempotent(n, i), e_idempotent(n, j));
    all_diagrams(n)
        .into_iter()
        .filter(|s| s.j_class_index() == j && compose(&compose(&ei, s).diagram, &ej).diagram == *s)
        .collect()
}

/// Stabilizer of `e_j` under `(σ, τ)·s = t_σ ∘ s ∘ t_τ^{-1}`, and the size
/// of its orbit.
pub fn diagram_stabilizer(n: usize, i: usize, j: usize) -> (Vec<(Perm, Perm)>, usize) {
    let ej = e_idempotent(n, j);
    let mut stab = Vec::new();
    let mut orbit = std::collections::HashSet::new();
    let rights: Vec<(Perm, BrauerDiagram)> = all_perms(n_i(n, j))
        .into_iter()
        .map(|t| {
            let d = perm_to_diagram(&t.inverse(), n, j);
            (t, d)
        })
        .collect();
    for sigma in all_perms(n_i(n, i)) {
        let left = compose(&perm_to_diagram(&sigma, n, i), &ej).diagram;
        for (tau, right) in &rights {
            let img = compose(&left, right).diagram;
            if img == ej {
                stab.push((sigma.clone(), tau.clone()));
            }
            orbit.insert(img);
        }
    }
    stab.sort();
    (stab, orbit.len())
}

/// A label `(i, λ)` with `λ ⊢ n_i`; `r` is the position of `λ` in
/// [`partitions_of`], from 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BrauerLabel {
    pub i: usize,
    pub r: usize,
    pub lambda: Partition,
}

impl BrauerLabel {
    pub fn new(i: usize, lambda: Partition) -> Self {
        let r = partitions_of(lambda.n()).iter().position(|p| *p == lambda).unwrap() + 1;
        BrauerLabel { i, r, lambda }
    }
}

impl fmt::Display for BrauerLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.lambda)
    }
}

pub fn brauer_labels(n: usize) -> Vec<BrauerLabel> {
    (1..=n / 2 + 1)
        .flat_map(|i| partitions_of(n_i(n, i)).into_iter().map(move |l| BrauerLabel::new(i, l)))
        .collect()
}

/// Counts of `L_{i,j}` elements by pair of cycle types.
fn cycle_type_counts(n: usize, i: usize, j: usize) -> BTreeMap<(Partition, Partition), u64> {
    let mut counts = BTreeMap::new();
    for (s, t) in stab_subgroup_l(n, i, j) {
        *counts.entry((Partition::new(s.cycle_type()), Partition::new(t.cycle_type()))).or_insert(0) += 1;
    }
    counts
}

fn multiplicity(counts: &BTreeMap<(Partition, Partition), u64>, la: &Partition, lb: &Partition, cache: &mut MnCache) -> i64 {
    let total: i64 = counts
        .iter()
        .map(|((cs, ct), &m)| m as i64 * cache.value(la, cs) * cache.value(lb, ct))
        .sum();
    let order: u64 = counts.values().sum();
    assert_eq!(total % order as i64, 0, "multiplicity must be integral");
    total / order as i64
}

/// `a ⊑ b`: `j < i` and `S^{λ_a} ⊠ S^{λ_b}` is a constituent of
/// `Ind_{L_{i,j}}(triv)`.
pub fn sqsubset_brauer(n: usize, a: &BrauerLabel, b: &BrauerLabel) -> bool {
    if a == b {
        return true;
    }
    if b.i >= a.i {
        return false;
    }
    let counts = cycle_type_counts(n, a.i, b.i);
    multiplicity(&counts, &a.lambda, &b.lambda, &mut MnCache::new()) > 0
}

/// Closed form: `j < i` and `λ_a` occurs after adding `i − j` horizontal
/// 2-strips to `λ_b`.
pub fn unlhd_brauer(a: &BrauerLabel, b: &BrauerLabel) -> bool {
    a == b || (b.i < a.i && add_horizontal_2_strips(&b.lambda, a.i - b.i).contains_key(&a.lambda))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrauerOrder {
    pub n: usize,
    pub delta: String,
    pub relation: OrderRelation<BrauerLabel>,
}

/// Checks that the cocycle restricted to each `Γ_{e_i}` is the constant
/// `δ^{d−i+1}`, which makes the orders independent of `δ`.
fn check_constant_cocycle(n: usize, delta: &BigRational) -> Result<()> {
    let d = n / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 1..=d + 1 {
        let perms = all_perms(n_i(n, i));
        let sample: Vec<&Perm> = if perms.len() <= 24 {
            perms.iter().collect()
        } else {
            (0..24).map(|_| &perms[rng.gen_range(0..perms.len())]).collect()
        };
        for s in &perms {
            for &t in &sample {
                let c = compose(&perm_to_diagram(s, n, i), &perm_to_diagram(t, n, i));
                let value = num_traits::pow(delta.clone(), c.cycles);
                let want = num_traits::pow(delta.clone(), d + 1 - i);
                if c.cycles != d + 1 - i || value != want || c.diagram != perm_to_diagram(&s.compose(t), n, i) {
                    return Err(Error::Consistency(format!("cocycle on class {i} is not constant")));
                }
            }
        }
    }
    Ok(())
}

pub fn build_brauer_order(n: usize, delta: &BigRational) -> Result<BrauerOrder> {
    if delta.is_zero() {
        return Err(Error::ZeroDelta);
    }
    check_constant_cocycle(n, delta)?;
    let labels = brauer_labels(n);
    let d = n / 2;
    let pairs: Vec<(usize, usize)> = (1..=d + 1).flat_map(|i| (1..i).map(move |j| (i, j))).collect();
    let counts: HashMap<(usize, usize), BTreeMap<(Partition, Partition), u64>> =
        pairs.par_iter().map(|&(i, j)| ((i, j), cycle_type_counts(n, i, j))).collect();
    let mut cache = MnCache::new();
    let m = labels.len();
    let mut sq = vec![vec![false; m]; m];
    for (x, a) in labels.iter().enumerate() {
        for (y, b) in labels.iter().enumerate() {
            sq[x][y] = x == y || (b.i < a.i && multiplicity(&counts[&(a.i, b.i)], &a.lambda, &b.lambda, &mut cache) > 0);
        }
    }
    let leq = labels.iter().map(|a| labels.iter().map(|b| a == b || b.i < a.i).collect()).collect();
    let relation = OrderRelation::from_parts(labels, sq, leq)?;
    for (x, a) in relation.labels.iter().enumerate() {
        for (y, b) in relation.labels.iter().enumerate() {
            if relation.unlhd[x][y] != unlhd_brauer(a, b) {
                return Err(Error::Consistency(format!("closure of sq disagrees with Pieri at {a}, {b}")));
            }
        }
    }
    Ok(BrauerOrder { n, delta: delta.to_string(), relation })
}

/// Associativity and the loop-count cocycle identity on `count` random
/// triples of diagrams.
pub fn random_cocycle_check(n: usize, count: usize, seed: u64) -> Result<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let (t, u, v) = (random_diagram(n, &mut rng), random_diagram(n, &mut rng), random_diagram(n, &mut rng));
        let (tu, uv) = (compose(&t, &u), compose(&u, &v));
        let (left, right) = (compose(&tu.diagram, &v), compose(&t, &uv.diagram));
        if left.diagram != right.diagram || left.cycles + tu.cycles != right.cycles + uv.cycles {
            return Err(Error::Consistency(format!("cocycle fails on {t:?}, {u:?}, {v:?}")));
        }
    }
    Ok(count)
}
