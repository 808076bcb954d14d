//! The biset category on a finite section-closed set of groups.
//!
//! Morphisms `G_j -> G_i` are subgroups of `G_i × G_j`, stored as sorted
//! index sets with `(g, h)` at `g·|G_j| + h`.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::character::{character_table, integral_average, kernel, CharacterTable};
use crate::cyclotomic::CycValue;
use crate::error::{Error, Result};
use crate::perm::{
    are_isomorphic, automorphism_group, builtin_group, direct_product, isomorphisms, quotient_group, AutomorphismGroup,
    CayleyGroup, GroupHom, Quotient, Section, Subgroup, S4_FAMILY,
};
use crate::relation::OrderRelation;

/// A label `(i, r)`: object `i` and irreducible character `r` of `Aut(G_i)`,
/// both counted from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Label {
    pub i: usize,
    pub r: usize,
}

impl Label {
    pub fn new(i: usize, r: usize) -> Self {
        Label { i, r }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.r)
    }
}

/// One object `G_i` with everything the order computation needs.
#[derive(Clone, Debug)]
pub struct BisetObject {
    pub name: String,
    pub group: CayleyGroup,
    pub subgroups: Vec<Subgroup>,
    /// Every section of `G_i` with the index of the object its quotient is
    /// isomorphic to.
    pub sections: Vec<(Section, usize)>,
    pub aut: AutomorphismGroup,
    /// Irreducible characters of `Aut(G_i)` in label order.
    pub table: CharacterTable,
    pub survives: Vec<bool>,
}

/// Objects sorted by order, pairwise non-isomorphic and section-closed.
#[derive(Clone, Debug)]
pub struct ObjectList {
    pub objects: Vec<BisetObject>,
    /// `below[a][b]`: `G_a` is isomorphic to a subquotient of `G_b`.
    below: Vec<Vec<bool>>,
}

/// Orders rows of `Aut(G)`'s table: degree, trivial first, then linear
/// characters by kernel (cyclic, containing `Inn(G)`, other), then values.
fn label_order(table: &CharacterTable, aut: &AutomorphismGroup) -> Vec<usize> {
    let rank = |r: usize| -> u8 {
        if r == 0 || table.degrees[r] != 1 {
            return 0;
        }
        let ker = kernel(&table.classes, &table.rows[r]);
        if is_cyclic(&aut.group, &ker) {
            0
        } else if aut.inn.is_subset(&ker) {
            1
        } else {
            2
        }
    };
    let mut idx: Vec<usize> = (0..table.len()).collect();
    idx.sort_by_key(|&r| (table.degrees[r], u8::from(r != 0), rank(r)));
    idx
}

fn is_cyclic(g: &CayleyGroup, h: &Subgroup) -> bool {
    h.members().iter().any(|&x| g.element_order(x) == h.order())
}

impl ObjectList {
    pub fn from_builtin(names: &[&str]) -> Result<Self> {
        let groups = names
            .iter()
            .map(|&n| Ok((n.to_string(), builtin_group(n)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::load(groups)
    }

    /// `1, C2, C3, C4, V4, S3, D8, A4, S4`.
    pub fn s4_family() -> Self {
        Self::from_builtin(&S4_FAMILY).expect("builtin catalog is section-closed")
    }

    pub fn load(mut groups: Vec<(String, CayleyGroup)>) -> Result<Self> {
        groups.sort_by_key(|(_, g)| g.order());
        for a in 0..groups.len() {
            for b in 0..a {
                if are_isomorphic(&groups[a].1, &groups[b].1) {
                    return Err(Error::DuplicateGroup(groups[b].0.clone(), groups[a].0.clone()));
                }
            }
        }
        let n = groups.len();
        let mut objects = Vec::with_capacity(n);
        let mut below = vec![vec![false; n]; n];
        for (b, (name, g)) in groups.iter().enumerate() {
            let subgroups = g.all_subgroups();
            let mut sections = Vec::new();
            for p in &subgroups {
                for k in subgroups.iter().filter(|k| k.is_subset(p) && g.is_normal_in(k, p)) {
                    let s = Section { p: p.clone(), k: k.clone() };
                    let q = quotient_group(g, &s).group;
                    let a = groups
                        .iter()
                        .position(|(_, h)| h.order() == q.order() && are_isomorphic(h, &q))
                        .ok_or_else(|| Error::NotSectionClosed { group: name.clone(), order: q.order() })?;
                    below[a][b] = true;
                    sections.push((s, a));
                }
            }
            let aut = automorphism_group(g);
            let mut table = character_table(&aut.group)?;
            let perm = label_order(&table, &aut);
            table.permute_rows(&perm);
            let survives = (0..table.len())
                .map(|r| crate::character::kernel_contains(&table.classes, &table.rows[r], &aut.inn))
                .collect();
            objects.push(BisetObject { name: name.clone(), group: g.clone(), subgroups, sections, aut, table, survives });
        }
        Ok(ObjectList { objects, below })
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn object(&self, i: usize) -> &BisetObject {
        &self.objects[i - 1]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o.name == name).map(|k| k + 1)
    }

    /// `G_i` is isomorphic to a subquotient of `G_j` (1-based indices).
    pub fn j_leq(&self, i: usize, j: usize) -> bool {
        self.below[i - 1][j - 1]
    }

    /// `G_j` is a proper subquotient of `G_i`.
    pub fn strictly_below(&self, j: usize, i: usize) -> bool {
        i != j && self.j_leq(j, i)
    }

    pub fn labels(&self) -> Vec<Label> {
        self.objects
            .iter()
            .enumerate()
            .flat_map(|(k, o)| (1..=o.table.len()).map(move |r| Label::new(k + 1, r)))
            .collect()
    }

    fn chi(&self, a: Label) -> &[CycValue] {
        &self.object(a.i).table.rows[a.r - 1]
    }

    pub fn epsilon_survives(&self, a: Label) -> bool {
        self.object(a.i).survives[a.r - 1]
    }

    pub fn dual_label(&self, a: Label) -> Label {
        Label::new(a.i, self.object(a.i).table.conjugate_row(a.r - 1) + 1)
    }
}

/// A subgroup of `G_i × G_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GoursatSubgroup {
    pub i: usize,
    pub j: usize,
    pub members: Subgroup,
}

/// Goursat data `(p1, k1, η, p2, k2)` with `η: p2/k2 -> p1/k1`.
#[derive(Clone, Debug)]
pub struct Quintuple {
    pub p1: Subgroup,
    pub k1: Subgroup,
    pub p2: Subgroup,
    pub k2: Subgroup,
    pub q1: Quotient,
    pub q2: Quotient,
    pub eta: GroupHom,
}

impl GoursatSubgroup {
    pub fn new(i: usize, j: usize, members: Vec<usize>) -> Self {
        GoursatSubgroup { i, j, members: Subgroup::from_members(members) }
    }

    pub fn order(&self) -> usize {
        self.members.order()
    }

    /// `Δ(G) = {(g, g)}`.
    pub fn diagonal(i: usize, order: usize) -> Self {
        Self::new(i, i, (0..order).map(|g| g * order + g).collect())
    }

    /// `{(h, g) : (g, h) ∈ L}`.
    pub fn opposite(&self, right_order: usize, left_order: usize) -> Self {
        let members = self
            .members
            .members()
            .iter()
            .map(|&x| (x % right_order) * left_order + x / right_order)
            .collect();
        Self::new(self.j, self.i, members)
    }

    pub fn pairs(&self, right_order: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.members.members().iter().map(move |&x| (x / right_order, x % right_order))
    }

    pub fn quintuple(&self, gi: &CayleyGroup, gj: &CayleyGroup) -> Quintuple {
        let nj = gj.order();
        let pairs: Vec<(usize, usize)> = self.pairs(nj).collect();
        let p1 = Subgroup::from_members(pairs.iter().map(|p| p.0).collect());
        let p2 = Subgroup::from_members(pairs.iter().map(|p| p.1).collect());
        let k1 = Subgroup::from_members(pairs.iter().filter(|p| p.1 == 0).map(|p| p.0).collect());
        let k2 = Subgroup::from_members(pairs.iter().filter(|p| p.0 == 0).map(|p| p.1).collect());
        let q1 = quotient_group(gi, &Section { p: p1.clone(), k: k1.clone() });
        let q2 = quotient_group(gj, &Section { p: p2.clone(), k: k2.clone() });
        let mut map = vec![0; q2.group.order()];
        for &(g, h) in &pairs {
            map[q2.project(h).unwrap()] = q1.project(g).unwrap();
        }
        Quintuple { p1, k1, p2, k2, q1, q2, eta: GroupHom { map } }
    }
}

/// `L*M = {(g, k) : ∃h (g, h) ∈ L, (h, k) ∈ M}` for `L ≤ G×H`, `M ≤ H×K`.
pub fn star_compose(l: &GoursatSubgroup, m: &GoursatSubgroup, h_order: usize, k_order: usize) -> GoursatSubgroup {
    debug_assert_eq!(l.j, m.i);
    let mut by_h: Vec<Vec<usize>> = vec![Vec::new(); h_order];
    for (h, k) in m.pairs(k_order) {
        by_h[h].push(k);
    }
    let mut members = Vec::new();
    for (g, h) in l.pairs(h_order) {
        for &k in &by_h[h] {
            members.push(g * k_order + k);
        }
    }
    GoursatSubgroup::new(l.i, m.j, members)
}

/// `κ(L, M) = |k2(L) ∩ k1(M)| / |H|`.
pub fn kappa(l: &GoursatSubgroup, m: &GoursatSubgroup, h_order: usize, k_order: usize) -> BigRational {
    let k2l: Vec<usize> = l.pairs(h_order).filter(|p| p.0 == 0).map(|p| p.1).collect();
    let mut in_k1m = vec![false; h_order];
    for (h, k) in m.pairs(k_order) {
        if k == 0 {
            in_k1m[h] = true;
        }
    }
    let inter = k2l.iter().filter(|&&h| in_k1m[h]).count();
    BigRational::new(BigInt::from(inter), BigInt::from(h_order))
}

/// An orbit of `Aut(G_i) × Aut(G_j)` on connecting morphisms.
#[derive(Clone, Debug)]
pub struct ConnectingOrbit {
    pub rep: GoursatSubgroup,
    /// Subgroup of `Aut(G_i) × Aut(G_j)`, pair `(α, β)` at `α·|Aut(G_j)| + β`.
    pub stabilizer: Subgroup,
    pub orbit_size: usize,
}

/// The morphisms `(P, K, η, G_j, 1)`: sections of `G_i` with quotient
/// identified with `G_j`.
pub fn connecting_morphisms(objs: &ObjectList, i: usize, j: usize) -> Vec<GoursatSubgroup> {
    let oi = objs.object(i);
    let gj = &objs.object(j).group;
    let nj = gj.order();
    let mut out = Vec::new();
    for (s, _) in oi.sections.iter().filter(|(_, q)| *q == j - 1) {
        let quo = quotient_group(&oi.group, s);
        for eta in isomorphisms(gj, &quo.group) {
            let mut members = Vec::with_capacity(s.p.order() / quo.group.order() * nj);
            for &g in s.p.members() {
                let c = quo.project(g).unwrap();
                for h in 0..nj {
                    if eta.apply(h) == c {
                        members.push(g * nj + h);
                    }
                }
            }
            out.push(GoursatSubgroup::new(i, j, members));
        }
    }
    out
}

/// Orbits of `Aut(G_a) × Aut(G_b)` acting by `(α, β)·L = (α×β)(L)` on
/// subgroups of `G_a × G_b`, each with its full stabilizer.
pub fn orbits_under_automorphisms(
    morphisms: &[GoursatSubgroup],
    aut_a: &AutomorphismGroup,
    aut_b: &AutomorphismGroup,
    nb: usize,
) -> Result<Vec<ConnectingOrbit>> {
    let index: HashMap<&[usize], usize> =
        morphisms.iter().enumerate().map(|(k, l)| (l.members.members(), k)).collect();
    let (na, nbaut) = (aut_a.group.order(), aut_b.group.order());
    let mut seen = vec![false; morphisms.len()];
    let mut out = Vec::new();
    for (k, l) in morphisms.iter().enumerate() {
        if seen[k] {
            continue;
        }
        let mut stab = Vec::new();
        let mut orbit = 0;
        for a in 0..na {
            let alpha = &aut_a.maps[a];
            for b in 0..nbaut {
                let beta = &aut_b.maps[b];
                let mut img: Vec<usize> = l
                    .pairs(nb)
                    .map(|(g, h)| alpha.apply(g) * nb + beta.apply(h))
                    .collect();
                img.sort_unstable();
                let t = *index
                    .get(img.as_slice())
                    .ok_or_else(|| Error::Consistency("morphism set not closed under automorphisms".into()))?;
                if !seen[t] {
                    seen[t] = true;
                    orbit += 1;
                }
                if t == k {
                    stab.push(a * nbaut + b);
                }
            }
        }
        let stabilizer = Subgroup::from_members(stab);
        if orbit * stabilizer.order() != na * nbaut {
            return Err(Error::Consistency("orbit-stabilizer count mismatch".into()));
        }
        out.push(ConnectingOrbit { rep: l.clone(), stabilizer, orbit_size: orbit });
    }
    Ok(out)
}

pub fn connecting_orbits(objs: &ObjectList, i: usize, j: usize) -> Result<Vec<ConnectingOrbit>> {
    let ms = connecting_morphisms(objs, i, j);
    orbits_under_automorphisms(&ms, &objs.object(i).aut, &objs.object(j).aut, objs.object(j).group.order())
}

/// Orbits on the opposite morphisms `(G_j, 1, η^{-1}, P, K) ≤ G_j × G_i`.
pub fn connecting_orbits_mirrored(objs: &ObjectList, i: usize, j: usize) -> Result<Vec<ConnectingOrbit>> {
    let (ni, nj) = (objs.object(i).group.order(), objs.object(j).group.order());
    let ms: Vec<GoursatSubgroup> = connecting_morphisms(objs, i, j).iter().map(|l| l.opposite(nj, ni)).collect();
    orbits_under_automorphisms(&ms, &objs.object(j).aut, &objs.object(i).aut, ni)
}

/// `(1/|S|) Σ_{(α,β)∈S} χ(α)·conj(ψ(β))` for `S ≤ A × B`.
pub fn product_multiplicity(
    ta: &CharacterTable,
    tb: &CharacterTable,
    stab: &Subgroup,
    chi: &[CycValue],
    psi: &[CycValue],
) -> Result<u64> {
    let counts = fusion_counts_product(ta, tb, stab);
    multiplicity_from_counts(&counts, chi, psi, stab.order())
}

/// Number of stabilizer elements in each pair of classes.
fn fusion_counts_product(ta: &CharacterTable, tb: &CharacterTable, stab: &Subgroup) -> Vec<Vec<usize>> {
    let nb = tb.classes.group_order();
    let mut counts = vec![vec![0; tb.classes.len()]; ta.classes.len()];
    for &x in stab.members() {
        counts[ta.classes.class_of[x / nb]][tb.classes.class_of[x % nb]] += 1;
    }
    counts
}

fn multiplicity_from_counts(counts: &[Vec<usize>], chi: &[CycValue], psi: &[CycValue], order: usize) -> Result<u64> {
    let mut s = CycValue::zero();
    for (c, row) in counts.iter().enumerate() {
        for (d, &m) in row.iter().enumerate() {
            if m > 0 {
                let term = chi[c].mul(&psi[d].conj());
                s = s.add(&term.scale(&BigRational::from_integer(BigInt::from(m))));
            }
        }
    }
    integral_average(&s, order)
}

/// `mult[r][s]`: largest multiplicity of `χ_{(i,r)} × conj χ_{(j,s)}` over
/// the connecting orbits.
fn pair_multiplicities(objs: &ObjectList, i: usize, j: usize, mirrored: bool) -> Result<Vec<Vec<u64>>> {
    let (ti, tj) = (&objs.object(i).table, &objs.object(j).table);
    let mut best = vec![vec![0u64; tj.len()]; ti.len()];
    let orbits = if mirrored { connecting_orbits_mirrored(objs, i, j)? } else { connecting_orbits(objs, i, j)? };
    for orb in &orbits {
        if mirrored {
            let counts = fusion_counts_product(tj, ti, &orb.stabilizer);
            for s in 0..tj.len() {
                for r in 0..ti.len() {
                    let m = multiplicity_from_counts(&counts, &tj.rows[s], &ti.rows[r], orb.stabilizer.order())?;
                    best[r][s] = best[r][s].max(m);
                }
            }
        } else {
            let counts = fusion_counts_product(ti, tj, &orb.stabilizer);
            for r in 0..ti.len() {
                for s in 0..tj.len() {
                    let m = multiplicity_from_counts(&counts, &ti.rows[r], &tj.rows[s], orb.stabilizer.order())?;
                    best[r][s] = best[r][s].max(m);
                }
            }
        }
    }
    Ok(best)
}

/// `a ⊑ b` evaluated directly.
pub fn sqsubset(objs: &ObjectList, a: Label, b: Label) -> Result<bool> {
    if a == b {
        return Ok(true);
    }
    if !objs.strictly_below(b.i, a.i) {
        return Ok(false);
    }
    for orb in connecting_orbits(objs, a.i, b.i)? {
        let m = product_multiplicity(
            &objs.object(a.i).table,
            &objs.object(b.i).table,
            &orb.stabilizer,
            objs.chi(a),
            objs.chi(b),
        )?;
        if m > 0 {
            return Ok(true);
        }
    }
    Ok(false)
}

fn sq_matrix(objs: &ObjectList, mirrored: bool) -> Result<Vec<Vec<bool>>> {
    let labels = objs.labels();
    let n = objs.len();
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| objs.strictly_below(j, i))
        .collect();
    let blocks = pairs
        .par_iter()
        .map(|&(i, j)| pair_multiplicities(objs, i, j, mirrored).map(|m| ((i, j), m)))
        .collect::<Result<Vec<_>>>()?;
    let block_of: HashMap<(usize, usize), Vec<Vec<u64>>> = blocks.into_iter().collect();
    let mut sq = vec![vec![false; labels.len()]; labels.len()];
    for (x, a) in labels.iter().enumerate() {
        for (y, b) in labels.iter().enumerate() {
            sq[x][y] = a == b || block_of.get(&(a.i, b.i)).is_some_and(|m| m[a.r - 1][b.r - 1] > 0);
        }
    }
    Ok(sq)
}

fn leq_matrix(objs: &ObjectList, labels: &[Label]) -> Vec<Vec<bool>> {
    labels
        .iter()
        .map(|a| labels.iter().map(|b| a == b || objs.strictly_below(b.i, a.i)).collect())
        .collect()
}

/// ⊑, its closure ⊴ and the coarse order ≤ on all labels.
pub fn build_order(objs: &ObjectList) -> Result<OrderRelation<Label>> {
    let labels = objs.labels();
    let sq = sq_matrix(objs, false)?;
    let leq = leq_matrix(objs, &labels);
    let rel = OrderRelation::from_parts(labels, sq, leq)?;
    for a in 0..rel.len() {
        for b in 0..rel.len() {
            if a != b && rel.sq[a][b] && !objs.strictly_below(rel.labels[b].i, rel.labels[a].i) {
                return Err(Error::Consistency("sq relates labels without strict J-descent".into()));
            }
        }
    }
    Ok(rel)
}

/// The ⊑ matrix computed from the mirrored morphism sets.
pub fn build_sq_mirrored(objs: &ObjectList) -> Result<Vec<Vec<bool>>> {
    sq_matrix(objs, true)
}

/// Restriction to labels that survive condensation.
pub fn condensed_order(objs: &ObjectList, rel: &OrderRelation<Label>) -> OrderRelation<Label> {
    rel.restrict(|k| objs.epsilon_survives(rel.labels[k]))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonotonicityReport {
    /// Pairs `a ⊴ b` with `a` surviving and `b` not.
    pub unlhd_violations: Vec<(Label, Label)>,
    /// Pairs `a < b` with `a` surviving and `b` not.
    pub leq_violations: Vec<(Label, Label)>,
}

pub fn verify_condensation_monotonic(objs: &ObjectList, rel: &OrderRelation<Label>) -> Result<MonotonicityReport> {
    let mut rep = MonotonicityReport::default();
    for (x, &a) in rel.labels.iter().enumerate() {
        for (y, &b) in rel.labels.iter().enumerate() {
            if x == y || !objs.epsilon_survives(a) || objs.epsilon_survives(b) {
                continue;
            }
            if rel.unlhd[x][y] {
                rep.unlhd_violations.push((a, b));
            }
            if rel.leq[x][y] {
                rep.leq_violations.push((a, b));
            }
        }
    }
    if let Some((a, b)) = rep.unlhd_violations.first() {
        return Err(Error::Consistency(format!("condensation not monotone along {a} ⊴ {b}")));
    }
    Ok(rep)
}

/// The ⊑ matrix laid out with lower labels as rows: the cell in row `y`,
/// column `x` is `1` when `x ⊑ y`. The header marks surviving labels with
/// `*`.
pub fn sq_grid(objs: &ObjectList, rel: &OrderRelation<Label>) -> (String, Vec<String>) {
    let header = rel.labels.iter().map(|&l| if objs.epsilon_survives(l) { '*' } else { '-' }).collect();
    let rows = (0..rel.len())
        .map(|y| (0..rel.len()).map(|x| if rel.sq[x][y] { '1' } else { '.' }).collect())
        .collect();
    (header, rows)
}

/// Associativity of `*` and the cocycle identity for `κ` on `count` random
/// composable triples, each morphism generated by two random pairs.
pub fn random_cocycle_check(objs: &ObjectList, count: usize, seed: u64) -> Result<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut products: HashMap<(usize, usize), CayleyGroup> = HashMap::new();
    let mut random_morphism = |a: usize, b: usize, rng: &mut ChaCha8Rng| -> Result<GoursatSubgroup> {
        let g = match products.entry((a, b)) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => e.insert(direct_product(&objs.objects[a].group, &objs.objects[b].group)?.group),
        };
        let gens = [rng.gen_range(0..g.order()), rng.gen_range(0..g.order())];
        Ok(GoursatSubgroup { i: a + 1, j: b + 1, members: g.closure(&gens) })
    };
    let order = |o: usize| objs.objects[o].group.order();
    for _ in 0..count {
        let o: Vec<usize> = (0..4).map(|_| rng.gen_range(0..objs.len())).collect();
        let l = random_morphism(o[0], o[1], &mut rng)?;
        let m = random_morphism(o[1], o[2], &mut rng)?;
        let n = random_morphism(o[2], o[3], &mut rng)?;
        let (h, k, q) = (order(o[1]), order(o[2]), order(o[3]));
        let lm = star_compose(&l, &m, h, k);
        let mn = star_compose(&m, &n, k, q);
        if star_compose(&lm, &n, k, q) != star_compose(&l, &mn, h, q) {
            return Err(Error::Consistency(format!("star composition not associative on objects {o:?}")));
        }
        if kappa(&lm, &n, k, q) * kappa(&l, &m, h, k) != kappa(&l, &mn, h, q) * kappa(&m, &n, k, q) {
            return Err(Error::Consistency(format!("κ cocycle identity fails on objects {o:?}")));
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4() -> ObjectList {
        ObjectList::s4_family()
    }

    #[test]
    fn catalog_order_and_names() {
        let objs = s4();
        let names: Vec<&str> = objs.objects.iter().map(|o| o.name.as_str()).collect();
        assert_eq!(names, S4_FAMILY);
        let counts: Vec<usize> = objs.objects.iter().map(|o| o.table.len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 2, 3, 3, 5, 5, 5]);
    }

    #[test]
    fn j_order_examples() {
        let objs = s4();
        assert!(objs.j_leq(8, 9));
        assert!(!objs.j_leq(4, 8));
        for i in 1..=9 {
            assert!(objs.j_leq(i, i));
        }
    }

    #[test]
    fn rejects_bad_catalogs() {
        assert!(matches!(ObjectList::from_builtin(&["1", "C4"]), Err(Error::NotSectionClosed { .. })));
        let c2 = builtin_group("C2").unwrap();
        let dup = ObjectList::load(vec![("1".into(), CayleyGroup::trivial()), ("A".into(), c2.clone()), ("B".into(), c2)]);
        assert!(matches!(dup, Err(Error::DuplicateGroup(..))));
    }

    #[test]
    fn star_identities() {
        let objs = ObjectList::from_builtin(&["1", "C2", "V4"]).unwrap();
        let v4 = &objs.object(3).group;
        let d = GoursatSubgroup::diagonal(3, 4);
        assert_eq!(star_compose(&d, &d, 4, 4), d);
        assert_eq!(kappa(&d, &d, 4, 4), BigRational::new(1.into(), 4.into()));
        let prod = crate::perm::direct_product(v4, v4).unwrap();
        for s in prod.group.all_subgroups() {
            let l = GoursatSubgroup { i: 3, j: 3, members: s };
            let lo = l.opposite(4, 4);
            assert_eq!(star_compose(&star_compose(&l, &lo, 4, 4), &l, 4, 4), l);
        }
    }

    #[test]
    fn s4_s3_orbits() {
        let objs = s4();
        let orbits = connecting_orbits(&objs, 9, 6).unwrap();
        assert_eq!(orbits.len(), 2);
        let mut stabs: Vec<usize> = orbits.iter().map(|o| o.stabilizer.order()).collect();
        stabs.sort_unstable();
        assert_eq!(stabs, vec![6, 24]);
        let q = orbits
            .iter()
            .map(|o| o.rep.quintuple(&objs.object(9).group, &objs.object(6).group))
            .map(|q| (q.p1.order(), q.k1.order()))
            .collect::<Vec<_>>();
        assert!(q.contains(&(6, 1)) && q.contains(&(24, 4)));
    }

    #[test]
    fn c2_to_trivial_orbits() {
        let objs = s4();
        // Aut(C2) is trivial, so the two sections (1,1) and (C2,C2) stay apart.
        assert_eq!(connecting_orbits(&objs, 2, 1).unwrap().len(), 2);
    }

    #[test]
    fn a4_over_c3_pairs() {
        let objs = s4();
        let rel = build_order(&objs).unwrap();
        let mut pairs = Vec::new();
        for r in 1..=5 {
            for s in 1..=2 {
                if rel.unlhd_of(&Label::new(8, r), &Label::new(3, s)) {
                    pairs.push((r, s));
                }
            }
        }
        assert_eq!(pairs, vec![(1, 1), (2, 2), (4, 1), (5, 2)]);
    }

    #[test]
    fn survival_pattern() {
        let objs = s4();
        assert!(objs.epsilon_survives(Label::new(9, 1)));
        assert!(!objs.epsilon_survives(Label::new(8, 3)));
        assert!(objs.epsilon_survives(Label::new(7, 3)));
        assert!(!objs.epsilon_survives(Label::new(7, 2)));
    }

    #[test]
    fn self_dual_labels() {
        let objs = s4();
        for a in objs.labels() {
            assert_eq!(objs.dual_label(a), a);
        }
    }

    #[test]
    fn trivial_catalog() {
        let objs = ObjectList::from_builtin(&["1"]).unwrap();
        let rel = build_order(&objs).unwrap();
        assert_eq!(rel.labels, vec![Label::new(1, 1)]);
        assert_eq!(rel.unlhd, vec![vec![true]]);
        let rep = verify_condensation_monotonic(&objs, &rel).unwrap();
        assert!(rep.leq_violations.is_empty());
    }
}
