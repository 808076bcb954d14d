//! Finite groups as Cayley tables.
//!
//! Every group in the crate (objects, automorphism groups, quotients, direct
//! products) is a [`CayleyGroup`] whose element 0 is the identity.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_SIZE_BOUND: usize = 10_000;

/// A bijection of `{0, .., m-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(m: usize) -> Self {
        Perm { images: (0..m).collect() }
    }

    /// Builds a permutation of degree `m` from disjoint cycles.
    pub fn from_cycles(m: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..m).collect();
        let mut touched = vec![false; m];
        for cyc in cycles {
            for (k, &x) in cyc.iter().enumerate() {
                if x >= m || touched[x] {
                    return Err(Error::InvalidPermutation(format!("{cycles:?}")));
                }
                touched[x] = true;
                images[x] = cyc[(k + 1) % cyc.len()];
            }
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Parses cycle notation such as `(0 1 2)(3 4)`; `()` is the identity.
    pub fn parse_cycles(s: &str, m: usize) -> Result<Self> {
        let bad = || Error::InvalidPermutation(s.to_string());
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let end = body.find(')').ok_or_else(bad)?;
            let cyc = body[..end]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            if !cyc.is_empty() {
                cycles.push(cyc);
            }
            rest = body[end + 1..].trim_start();
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Self::from_cycles(m, &refs)
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self * other`, acting as `x -> self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// Cycle lengths in decreasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lens = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut wrote = false;
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut x = start;
            write!(f, "(")?;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.images[x];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A finite group given by its full multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyGroup {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    element_orders: Vec<usize>,
    perms: Option<Vec<Perm>>,
}

impl CayleyGroup {
    /// Builds a group from a row-major multiplication table, checking the
    /// group axioms.
    pub fn from_table(order: usize, mul: Vec<usize>) -> Result<Self> {
        let g = Self::from_table_unchecked(order, mul)?;
        g.verify_axioms()?;
        Ok(g)
    }

    fn from_table_unchecked(order: usize, mul: Vec<usize>) -> Result<Self> {
        if order == 0 || mul.len() != order * order || mul.iter().any(|&x| x >= order) {
            return Err(Error::Consistency("malformed multiplication table".into()));
        }
        let mut inv = vec![usize::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if mul[a * order + b] == 0 {
                    inv[a] = b;
                    break;
                }
            }
            if inv[a] == usize::MAX {
                return Err(Error::Consistency(format!("element {a} has no inverse")));
            }
        }
        let mut element_orders = vec![0; order];
        for a in 0..order {
            let mut x = a;
            let mut k = 1;
            while x != 0 {
                x = mul[x * order + a];
                k += 1;
                if k > order {
                    return Err(Error::Consistency(format!("element {a} has no finite order")));
                }
            }
            element_orders[a] = k;
        }
        Ok(CayleyGroup { order, mul, inv, element_orders, perms: None })
    }

    pub fn trivial() -> Self {
        CayleyGroup {
            order: 1,
            mul: vec![0],
            inv: vec![0],
            element_orders: vec![1],
            perms: Some(vec![Perm::identity(1)]),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_orders[a]
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.element_orders
    }

    /// `g x g^{-1}`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv[g])
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut x = 0;
        for _ in 0..(k % self.element_orders[a]) {
            x = self.mul(x, a);
        }
        x
    }

    /// Permutation realisation, present for groups built from generators.
    pub fn perms(&self) -> Option<&[Perm]> {
        self.perms.as_deref()
    }

    pub fn exponent(&self) -> usize {
        self.element_orders
            .iter()
            .fold(1, |acc, &o| num_integer::lcm(acc, o))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Associativity on every triple for small groups, on 1000 seeded random
    /// triples above 64 elements.
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::Consistency("element 0 is not the identity".into()));
            }
            if self.mul(a, self.inv[a]) != 0 || self.mul(self.inv[a], a) != 0 {
                return Err(Error::Consistency(format!("bad inverse for {a}")));
            }
        }
        let check = |a: usize, b: usize, c: usize| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c));
        if n <= 64 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !check(a, b, c) {
                            return Err(Error::Consistency(format!("associativity fails at ({a},{b},{c})")));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..1000 {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !check(a, b, c) {
                    return Err(Error::Consistency(format!("associativity fails at ({a},{b},{c})")));
                }
            }
        }
        Ok(())
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup { members: (0..self.order).collect() }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { members: vec![0] }
    }

    /// Subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Subgroup {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut members = vec![0];
        let mut k = 0;
        while k < members.len() {
            let x = members[k];
            k += 1;
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        Subgroup { members }
    }

    pub fn center(&self) -> Subgroup {
        let members = (0..self.order)
            .filter(|&z| (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect();
        Subgroup { members }
    }

    /// Checks that `h` is normal in `p` (both subgroups of `self`).
    pub fn is_normal_in(&self, h: &Subgroup, p: &Subgroup) -> bool {
        let mask = h.mask(self.order);
        p.members
            .iter()
            .all(|&g| h.members.iter().all(|&x| mask[self.conj(g, x)]))
    }

    /// A small generating set found greedily: repeatedly add the element
    /// that enlarges the current closure the most.
    pub fn generating_set(&self, sub: &Subgroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = self.trivial_subgroup();
        while current.order() < sub.order() {
            let mut best: Option<(usize, Subgroup)> = None;
            for &x in &sub.members {
                if current.contains(x) {
                    continue;
                }
                let mut trial = gens.clone();
                trial.push(x);
                let c = self.closure(&trial);
                if best.as_ref().map_or(true, |(_, b)| c.order() > b.order()) {
                    let full = c.order() == sub.order();
                    best = Some((x, c));
                    if full {
                        break;
                    }
                }
            }
            let (x, c) = best.expect("subgroup strictly larger than its proper closure");
            gens.push(x);
            current = c;
        }
        gens
    }

    /// Every subgroup exactly once, sorted by (order, member set).
    ///
    /// Layered closure: start from the cyclic subgroups and repeatedly join
    /// a known subgroup with one outside element.
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        let mut found: HashSet<Vec<usize>> = HashSet::new();
        let mut layer: Vec<(Vec<usize>, Subgroup)> = Vec::new();
        for x in 0..self.order {
            let s = self.closure(&[x]);
            if found.insert(s.members.clone()) {
                layer.push((vec![x], s));
            }
        }
        let mut all: Vec<Subgroup> = layer.iter().map(|(_, s)| s.clone()).collect();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for (gens, s) in &layer {
                let mask = s.mask(self.order);
                for x in 0..self.order {
                    if mask[x] {
                        continue;
                    }
                    let mut g2 = gens.clone();
                    g2.push(x);
                    let t = self.closure(&g2);
                    if found.insert(t.members.clone()) {
                        all.push(t.clone());
                        next.push((g2, t));
                    }
                }
            }
            layer = next;
        }
        all.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
        all
    }
}

/// Builds the group generated by `gens`, indexing elements breadth-first
/// from the identity with generators applied in the given order.
pub fn group_from_generators(gens: &[Perm]) -> Result<CayleyGroup> {
    group_from_generators_bounded(gens, DEFAULT_SIZE_BOUND)
}

pub fn group_from_generators_bounded(gens: &[Perm], bound: usize) -> Result<CayleyGroup> {
    let m = gens
        .first()
        .ok_or_else(|| Error::InvalidPermutation("empty generator list".into()))?
        .degree();
    if gens.iter().any(|g| g.degree() != m) {
        return Err(Error::InvalidPermutation("generators act on different point sets".into()));
    }
    let mut elems = vec![Perm::identity(m)];
    let mut index: HashMap<Perm, usize> = HashMap::new();
    index.insert(elems[0].clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for s in gens {
            let y = elems[k].compose(s);
            if !index.contains_key(&y) {
                if elems.len() == bound {
                    return Err(Error::SizeLimit { bound });
                }
                index.insert(y.clone(), elems.len());
                queue.push_back(elems.len());
                elems.push(y);
            }
        }
    }
    let n = elems.len();
    let mut mul = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            mul[a * n + b] = index[&elems[a].compose(&elems[b])];
        }
    }
    let mut g = CayleyGroup::from_table_unchecked(n, mul)?;
    g.perms = Some(elems);
    Ok(g)
}

/// A subgroup as a sorted set of element indices of its parent group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    /// Wraps a member list; the caller guarantees closure.
    pub fn from_members(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Subgroup { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            members: self.members.iter().copied().filter(|&x| other.contains(x)).collect(),
        }
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &x in &self.members {
            m[x] = true;
        }
        m
    }

    pub fn is_closed_in(&self, g: &CayleyGroup) -> bool {
        let mask = self.mask(g.order());
        self.contains(0)
            && self
                .members
                .iter()
                .all(|&a| mask[g.inv(a)] && self.members.iter().all(|&b| mask[g.mul(a, b)]))
    }

    pub fn conjugate(&self, g: &CayleyGroup, x: usize) -> Subgroup {
        Subgroup::from_members(self.members.iter().map(|&m| g.conj(x, m)).collect())
    }
}

/// A pair `K ⊴ P ≤ G`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Section {
    pub p: Subgroup,
    pub k: Subgroup,
}

/// A map between the element indices of two groups.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupHom {
    pub map: Vec<usize>,
}

impl GroupHom {
    pub fn identity(n: usize) -> Self {
        GroupHom { map: (0..n).collect() }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_homomorphism(&self, source: &CayleyGroup, target: &CayleyGroup) -> bool {
        self.map.len() == source.order()
            && self.map[0] == 0
            && (0..source.order()).all(|a| {
                (0..source.order())
                    .all(|b| self.map[source.mul(a, b)] == target.mul(self.map[a], self.map[b]))
            })
    }

    pub fn is_bijective(&self, target_order: usize) -> bool {
        let mut seen = vec![false; target_order];
        self.map.len() == target_order
            && self.map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &GroupHom) -> GroupHom {
        GroupHom { map: other.map.iter().map(|&x| self.map[x]).collect() }
    }

    pub fn inverse(&self) -> GroupHom {
        let mut map = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            map[y] = x;
        }
        GroupHom { map }
    }
}

/// `P/K` as a Cayley group on cosets, together with the projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: CayleyGroup,
    /// Coset index of each element of the parent group, `None` outside `P`.
    pub coset_of: Vec<Option<usize>>,
    /// Smallest member of each coset.
    pub reps: Vec<usize>,
}

impl Quotient {
    pub fn project(&self, g: usize) -> Option<usize> {
        self.coset_of[g]
    }
}

/// Cosets are numbered by their smallest member, so `K` itself is coset 0.
pub fn quotient_group(g: &CayleyGroup, s: &Section) -> Quotient {
    let mut coset_of = vec![None; g.order()];
    let mut reps = Vec::new();
    for &x in s.p.members() {
        if coset_of[x].is_some() {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for &k in s.k.members() {
            coset_of[g.mul(x, k)] = Some(c);
        }
    }
    let q = reps.len();
    let mut mul = vec![0; q * q];
    for a in 0..q {
        for b in 0..q {
            mul[a * q + b] = coset_of[g.mul(reps[a], reps[b])].expect("P is closed");
        }
    }
    let group = CayleyGroup::from_table_unchecked(q, mul).expect("coset table is a group");
    Quotient { group, coset_of, reps }
}

/// Spanning tree of `g` over `gens`: each non-identity element `x` is
/// `parent[x] * gens[gen_of[x]]`, listed in breadth-first order.
struct WordTree {
    gens: Vec<usize>,
    order: Vec<usize>,
    parent: Vec<usize>,
    gen_of: Vec<usize>,
}

impl WordTree {
    fn new(g: &CayleyGroup, gens: Vec<usize>) -> Self {
        let n = g.order();
        let mut parent = vec![usize::MAX; n];
        let mut gen_of = vec![usize::MAX; n];
        parent[0] = 0;
        let mut order = vec![0];
        let mut k = 0;
        while k < order.len() {
            let x = order[k];
            k += 1;
            for (i, &s) in gens.iter().enumerate() {
                let y = g.mul(x, s);
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    gen_of[y] = i;
                    order.push(y);
                }
            }
        }
        WordTree { gens, order, parent, gen_of }
    }

    /// Extends generator images to a map and checks it is a homomorphism.
    fn extend(&self, g: &CayleyGroup, t: &CayleyGroup, images: &[usize]) -> Option<GroupHom> {
        let mut map = vec![0; g.order()];
        for &x in &self.order[1..] {
            map[x] = t.mul(map[self.parent[x]], images[self.gen_of[x]]);
        }
        for &x in &self.order {
            for (i, &s) in self.gens.iter().enumerate() {
                if map[g.mul(x, s)] != t.mul(map[x], images[i]) {
                    return None;
                }
            }
        }
        Some(GroupHom { map })
    }
}

/// All isomorphisms `source -> target`, sorted by their maps.
pub fn isomorphisms(source: &CayleyGroup, target: &CayleyGroup) -> Vec<GroupHom> {
    if source.order() != target.order() {
        return Vec::new();
    }
    let mut so = source.element_orders().to_vec();
    let mut to = target.element_orders().to_vec();
    so.sort_unstable();
    to.sort_unstable();
    if so != to {
        return Vec::new();
    }
    let gens = source.generating_set(&source.whole());
    let tree = WordTree::new(source, gens.clone());
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            (0..target.order())
                .filter(|&y| target.element_order(y) == source.element_order(s))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut images = vec![0; gens.len()];
    fn rec(
        depth: usize,
        images: &mut Vec<usize>,
        candidates: &[Vec<usize>],
        tree: &WordTree,
        source: &CayleyGroup,
        target: &CayleyGroup,
        out: &mut Vec<GroupHom>,
    ) {
        if depth == images.len() {
            if let Some(h) = tree.extend(source, target, images) {
                if h.is_bijective(target.order()) {
                    out.push(h);
                }
            }
            return;
        }
        for &y in &candidates[depth] {
            images[depth] = y;
            rec(depth + 1, images, candidates, tree, source, target, out);
        }
    }
    rec(0, &mut images, &candidates, &tree, source, target, &mut out);
    out.sort();
    out
}

pub fn are_isomorphic(a: &CayleyGroup, b: &CayleyGroup) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let gens = a.generating_set(&a.whole());
    let tree = WordTree::new(a, gens.clone());
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| (0..b.order()).filter(|&y| b.element_order(y) == a.element_order(s)).collect())
        .collect();
    let mut images = vec![0; gens.len()];
    fn rec(depth: usize, images: &mut Vec<usize>, c: &[Vec<usize>], tree: &WordTree, a: &CayleyGroup, b: &CayleyGroup) -> bool {
        if depth == images.len() {
            return tree.extend(a, b, images).is_some_and(|h| h.is_bijective(b.order()));
        }
        for &y in &c[depth] {
            images[depth] = y;
            if rec(depth + 1, images, c, tree, a, b) {
                return true;
            }
        }
        false
    }
    rec(0, &mut images, &candidates, &tree, a, b)
}

/// A section of `G` with quotient isomorphic to a fixed group `Q`, and every
/// isomorphism `Q -> P/K`.
#[derive(Clone, Debug)]
pub struct SectionIsos {
    pub section: Section,
    pub quotient: Quotient,
    pub isos: Vec<GroupHom>,
}

pub fn sections_with_quotient_iso(g: &CayleyGroup, q: &CayleyGroup) -> Vec<SectionIsos> {
    let subs = g.all_subgroups();
    sections_with_quotient_iso_among(g, &subs, q)
}

pub fn sections_with_quotient_iso_among(
    g: &CayleyGroup,
    subs: &[Subgroup],
    q: &CayleyGroup,
) -> Vec<SectionIsos> {
    let mut out = Vec::new();
    for p in subs {
        if p.order() % q.order() != 0 {
            continue;
        }
        let k_order = p.order() / q.order();
        for k in subs {
            if k.order() != k_order || !k.is_subset(p) || !g.is_normal_in(k, p) {
                continue;
            }
            let section = Section { p: p.clone(), k: k.clone() };
            let quotient = quotient_group(g, &section);
            let isos = isomorphisms(q, &quotient.group);
            if !isos.is_empty() {
                out.push(SectionIsos { section, quotient, isos });
            }
        }
    }
    out
}

/// `Aut(G)` with its elements realised as maps, and `Inn(G)` inside it.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    pub group: CayleyGroup,
    pub maps: Vec<GroupHom>,
    pub inn: Subgroup,
    /// Index in `maps` of conjugation by each element of `G`.
    pub conj_index: Vec<usize>,
}

/// Elements are composed as functions: `a * b` applies `b` first.
pub fn automorphism_group(g: &CayleyGroup) -> AutomorphismGroup {
    let maps = isomorphisms(g, g);
    let index: HashMap<&[usize], usize> =
        maps.iter().enumerate().map(|(i, m)| (m.map.as_slice(), i)).collect();
    let n = maps.len();
    let mut mul = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            mul[a * n + b] = index[maps[a].after(&maps[b]).map.as_slice()];
        }
    }
    let group = CayleyGroup::from_table_unchecked(n, mul).expect("automorphisms form a group");
    let conj_index: Vec<usize> = (0..g.order())
        .map(|x| {
            let c: Vec<usize> = (0..g.order()).map(|y| g.conj(x, y)).collect();
            index[c.as_slice()]
        })
        .collect();
    let inn = Subgroup::from_members(conj_index.clone());
    AutomorphismGroup { group, maps, inn, conj_index }
}

/// `G × H` with `(g, h)` stored at index `g·|H| + h`.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    pub group: CayleyGroup,
    pub left_order: usize,
    pub right_order: usize,
}

impl DirectProduct {
    pub fn pair(&self, g: usize, h: usize) -> usize {
        g * self.right_order + h
    }

    pub fn p1(&self, x: usize) -> usize {
        x / self.right_order
    }

    pub fn p2(&self, x: usize) -> usize {
        x % self.right_order
    }
}

pub fn direct_product(g: &CayleyGroup, h: &CayleyGroup) -> Result<DirectProduct> {
    direct_product_bounded(g, h, DEFAULT_SIZE_BOUND)
}

pub fn direct_product_bounded(g: &CayleyGroup, h: &CayleyGroup, bound: usize) -> Result<DirectProduct> {
    let (a, b) = (g.order(), h.order());
    let n = a * b;
    if n > bound {
        return Err(Error::SizeLimit { bound });
    }
    let mut mul = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            mul[x * n + y] = g.mul(x / b, y / b) * b + h.mul(x % b, y % b);
        }
    }
    let group = CayleyGroup::from_table_unchecked(n, mul)?;
    Ok(DirectProduct { group, left_order: a, right_order: b })
}

/// Names accepted by [`builtin_group`].
pub const BUILTIN_NAMES: [&str; 10] = ["1", "C2", "C3", "C4", "V4", "S3", "D8", "A4", "S4", "C5"];

/// The catalog used throughout: `1, C2, C3, C4, V4, S3, D8, A4, S4`.
pub const S4_FAMILY: [&str; 9] = ["1", "C2", "C3", "C4", "V4", "S3", "D8", "A4", "S4"];

pub fn builtin_generators(name: &str) -> Result<Vec<Perm>> {
    let c = |m: usize, cycles: &[&[usize]]| Perm::from_cycles(m, cycles).expect("valid builtin");
    Ok(match name {
        "1" => vec![Perm::identity(1)],
        "C2" => vec![c(2, &[&[0, 1]])],
        "C3" => vec![c(3, &[&[0, 1, 2]])],
        "C4" => vec![c(4, &[&[0, 1, 2, 3]])],
        "C5" => vec![c(5, &[&[0, 1, 2, 3, 4]])],
        "V4" => vec![c(4, &[&[0, 1]]), c(4, &[&[2, 3]])],
        "S3" => vec![c(3, &[&[0, 1, 2]]), c(3, &[&[0, 1]])],
        "D8" => vec![c(4, &[&[0, 1]]), c(4, &[&[0, 2], &[1, 3]])],
        "A4" => vec![c(4, &[&[0, 1, 2]]), c(4, &[&[0, 1], &[2, 3]])],
        "S4" => vec![c(4, &[&[0, 1, 2, 3]]), c(4, &[&[0, 1]])],
        other => return Err(Error::UnknownGroup(other.to_string())),
    })
}

pub fn builtin_group(name: &str) -> Result<CayleyGroup> {
    group_from_generators(&builtin_generators(name)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(m: usize, cycles: &[&[usize]]) -> Perm {
        Perm::from_cycles(m, cycles).unwrap()
    }


    #[test]
    fn cycle_notation() {
        let p = Perm::parse_cycles("(0 1 2)(3 4)", 5).unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 4, 3]);
        assert!(Perm::parse_cycles("()", 3).unwrap().is_identity());
        assert!(Perm::parse_cycles("(0 1)(1 2)", 3).is_err());
        assert!(Perm::parse_cycles("(0 5)", 3).is_err());
        assert!(Perm::parse_cycles("0 1", 3).is_err());
    }
    #[test]
    fn perm_compose_is_right_to_left() {
        let a = cyc(3, &[&[0, 1]]);
        let b = cyc(3, &[&[1, 2]]);
        // a(b(1)) = a(2) = 2
        assert_eq!(a.compose(&b).apply(1), 2);
        assert_eq!(a.compose(&a.inverse()), Perm::identity(3));
    }

    #[test]
    fn invalid_perm_rejected() {
        assert!(Perm::new(vec![0, 0, 1]).is_err());
        assert!(Perm::from_cycles(3, &[&[0, 1], &[1, 2]]).is_err());
    }

    #[test]
    fn closure_orders() {
        assert_eq!(group_from_generators(&[cyc(2, &[&[0, 1]])]).unwrap().order(), 2);
        let s4 = group_from_generators(&[cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 1]])]).unwrap();
        assert_eq!(s4.order(), 24);
        s4.verify_axioms().unwrap();
        let diag = group_from_generators(&[cyc(5, &[&[0, 1, 2]]), cyc(5, &[&[0, 1], &[3, 4]])]).unwrap();
        assert_eq!(diag.order(), 6);
    }

    #[test]
    fn size_bound_enforced() {
        let gens = [cyc(8, &[&[0, 1, 2, 3, 4, 5, 6, 7]]), cyc(8, &[&[0, 1]])];
        assert_eq!(group_from_generators_bounded(&gens, 100), Err(Error::SizeLimit { bound: 100 }));
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(CayleyGroup::trivial().all_subgroups().len(), 1);
        assert_eq!(builtin_group("V4").unwrap().all_subgroups().len(), 5);
        let s4 = builtin_group("S4").unwrap();
        let subs = s4.all_subgroups();
        assert_eq!(subs.len(), 30);
        for s in &subs {
            assert!(s.is_closed_in(&s4));
            for x in 0..24 {
                assert!(subs.contains(&s.conjugate(&s4, x)));
            }
        }
    }

    #[test]
    fn quotients() {
        let s4 = builtin_group("S4").unwrap();
        let subs = s4.all_subgroups();
        let v4 = subs
            .iter()
            .find(|s| s.order() == 4 && s4.is_normal_in(s, &s4.whole()))
            .unwrap()
            .clone();
        let q = quotient_group(&s4, &Section { p: s4.whole(), k: v4 });
        assert!(are_isomorphic(&q.group, &builtin_group("S3").unwrap()));
        let whole = quotient_group(&s4, &Section { p: s4.whole(), k: s4.whole() });
        assert_eq!(whole.group.order(), 1);
    }

    #[test]
    fn automorphism_orders() {
        let cases = [("C2", 1, 1), ("V4", 6, 1), ("S3", 6, 6), ("D8", 8, 4), ("A4", 24, 12), ("S4", 24, 24)];
        for (name, aut, inn) in cases {
            let g = builtin_group(name).unwrap();
            let a = automorphism_group(&g);
            assert_eq!(a.group.order(), aut, "{name}");
            assert_eq!(a.inn.order(), inn, "{name}");
            assert_eq!(a.inn.order(), g.order() / g.center().order());
            assert!(a.group.is_normal_in(&a.inn, &a.group.whole()));
            assert!(a.maps.iter().all(|m| m.is_homomorphism(&g, &g)));
            assert_eq!(a.maps[0], GroupHom::identity(g.order()));
        }
    }

    #[test]
    fn direct_product_projections() {
        let c2 = builtin_group("C2").unwrap();
        let c3 = builtin_group("C3").unwrap();
        let p = direct_product(&c2, &c3).unwrap();
        assert_eq!(p.group.order(), 6);
        let mut orders: Vec<_> = p.group.element_orders().to_vec();
        orders.sort_unstable();
        orders.dedup();
        assert_eq!(orders, vec![1, 2, 3, 6]);
        for g in 0..2 {
            for h in 0..3 {
                let x = p.pair(g, h);
                assert_eq!((p.p1(x), p.p2(x)), (g, h));
            }
        }
    }
}
