//! Brute-force validation on tiny instances: the twisted category algebra
//! is built on an explicit morphism basis and the order criterion is
//! evaluated by multiplying block idempotents.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::biset::{kappa, star_compose, GoursatSubgroup, Label, ObjectList};
use crate::brauer::{all_diagrams, all_perms, compose, e_idempotent, n_i, perm_to_diagram, BrauerDiagram};
use crate::character::{kernel_contains, CharacterTable};
use crate::error::{Error, Result};
use crate::perm::direct_product;
use crate::symmetric::{partitions_of, MnCache, Partition};

/// Largest object order accepted by [`enumerate_all_morphisms`].
pub const BISET_ORACLE_BOUND: usize = 6;
/// Largest degree accepted by [`enumerate_brauer_morphisms`].
pub const BRAUER_ORACLE_BOUND: usize = 4;

#[derive(Clone, Debug)]
pub enum Morphism {
    Biset(GoursatSubgroup),
    Brauer(BrauerDiagram),
}

#[derive(Clone, Debug)]
pub enum Species {
    Biset(Box<ObjectList>),
    Brauer { n: usize, delta: BigRational },
}

/// All morphisms of a small category with their twisted composition.
#[derive(Clone, Debug)]
pub struct MorphismTable {
    pub species: Species,
    pub morphisms: Vec<Morphism>,
    /// Object index (from 0) of the codomain and domain.
    pub target: Vec<usize>,
    pub source: Vec<usize>,
    /// Identity morphism of each object.
    pub units: Vec<usize>,
    compose: Vec<Option<(usize, BigRational)>>,
}

impl MorphismTable {
    pub fn len(&self) -> usize {
        self.morphisms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.morphisms.is_empty()
    }

    /// `a ∘ b` with its cocycle value, when `b` ends where `a` starts.
    pub fn compose(&self, a: usize, b: usize) -> Option<(usize, &BigRational)> {
        self.compose[a * self.len() + b].as_ref().map(|(c, v)| (*c, v))
    }

    pub fn mul(&self, x: &TwistedAlgebraElement, y: &TwistedAlgebraElement) -> TwistedAlgebraElement {
        let mut out = TwistedAlgebraElement::zero();
        for (&a, ca) in &x.coeffs {
            for (&b, cb) in &y.coeffs {
                if let Some((c, v)) = self.compose(a, b) {
                    out.add_term(c, ca * cb * v);
                }
            }
        }
        out
    }

    /// Associativity and the 2-cocycle identity on every composable triple.
    pub fn verify(&self) -> Result<usize> {
        let n = self.len();
        let triples: usize = (0..n)
            .into_par_iter()
            .map(|a| {
                let mut count = 0;
                for b in 0..n {
                    let Some((ab, kab)) = self.compose(a, b) else { continue };
                    for c in 0..n {
                        let Some((bc, kbc)) = self.compose(b, c) else { continue };
                        let (l, kl) = self.compose(ab, c).ok_or_else(|| Error::Consistency("composition not closed".into()))?;
                        let (r, kr) = self.compose(a, bc).ok_or_else(|| Error::Consistency("composition not closed".into()))?;
                        if l != r || kl * kab != kr * kbc {
                            return Err(Error::Consistency(format!("associativity or cocycle fails at ({a},{b},{c})")));
                        }
                        count += 1;
                    }
                }
                Ok(count)
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .sum();
        Ok(triples)
    }
}

/// A finitely supported rational combination of morphisms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwistedAlgebraElement {
    pub coeffs: BTreeMap<usize, BigRational>,
}

impl TwistedAlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(m: usize) -> Self {
        Self::term(m, BigRational::one())
    }

    pub fn term(m: usize, c: BigRational) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn add_term(&mut self, m: usize, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(m).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&m, c) in &other.coeffs {
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }
}

pub fn enumerate_all_morphisms(objs: &ObjectList) -> Result<MorphismTable> {
    if let Some(o) = objs.objects.iter().find(|o| o.group.order() > BISET_ORACLE_BOUND) {
        return Err(Error::OracleBound(format!("{} has order {}", o.name, o.group.order())));
    }
    let k = objs.len();
    let mut morphisms = Vec::new();
    let mut target = Vec::new();
    let mut source = Vec::new();
    let mut index: HashMap<(usize, usize, Vec<usize>), usize> = HashMap::new();
    for a in 0..k {
        for b in 0..k {
            let prod = direct_product(&objs.objects[a].group, &objs.objects[b].group)?;
            for s in prod.group.all_subgroups() {
                let l = GoursatSubgroup { i: a + 1, j: b + 1, members: s };
                index.insert((a, b, l.members.members().to_vec()), morphisms.len());
                morphisms.push(Morphism::Biset(l));
                target.push(a);
                source.push(b);
            }
        }
    }
    let units = (0..k)
        .map(|a| {
            let g = objs.objects[a].group.order();
            index[&(a, a, GoursatSubgroup::diagonal(a + 1, g).members.members().to_vec())]
        })
        .collect();
    let n = morphisms.len();
    let order = |o: usize| objs.objects[o].group.order();
    let compose: Vec<Option<(usize, BigRational)>> = (0..n * n)
        .into_par_iter()
        .map(|x| {
            let (a, b) = (x / n, x % n);
            if source[a] != target[b] {
                return None;
            }
            let (Morphism::Biset(l), Morphism::Biset(m)) = (&morphisms[a], &morphisms[b]) else { unreachable!() };
            let (h, kk) = (order(source[a]), order(source[b]));
            let c = star_compose(l, m, h, kk);
            let idx = index[&(target[a], source[b], c.members.members().to_vec())];
            Some((idx, kappa(l, m, h, kk)))
        })
        .collect();
    Ok(MorphismTable {
        species: Species::Biset(Box::new(objs.clone())),
        morphisms,
        target,
        source,
        units,
        compose,
    })
}

pub fn enumerate_brauer_morphisms(n: usize, delta: &BigRational) -> Result<MorphismTable> {
    if n > BRAUER_ORACLE_BOUND {
        return Err(Error::OracleBound(format!("degree {n}")));
    }
    if delta.is_zero() {
        return Err(Error::ZeroDelta);
    }
    let diagrams = all_diagrams(n);
    let index: HashMap<BrauerDiagram, usize> = diagrams.iter().cloned().enumerate().map(|(k, d)| (d, k)).collect();
    let m = diagrams.len();
    let mut compose_tab = Vec::with_capacity(m * m);
    for a in &diagrams {
        for b in &diagrams {
            let c = compose(a, b);
            compose_tab.push(Some((index[&c.diagram], num_traits::pow(delta.clone(), c.cycles))));
        }
    }
    let units = vec![index[&BrauerDiagram::identity(n)]];
    Ok(MorphismTable {
        species: Species::Brauer { n, delta: delta.clone() },
        morphisms: diagrams.into_iter().map(Morphism::Brauer).collect(),
        target: vec![0; m],
        source: vec![0; m],
        units,
        compose: compose_tab,
    })
}

/// Green's J-classes computed from the two-sided ideals `S∘s∘S`.
#[derive(Clone, Debug)]
pub struct JClasses {
    pub class_of: Vec<usize>,
    /// `leq[a][b]`: class `a` lies J-below class `b`.
    pub leq: Vec<Vec<bool>>,
    /// Size of the ideal generated by each class.
    pub ideal_size: Vec<usize>,
}

pub fn green_j_classes(table: &MorphismTable) -> JClasses {
    let n = table.len();
    let ideals: Vec<Vec<bool>> = (0..n)
        .into_par_iter()
        .map(|s| {
            let mut right = vec![false; n];
            for v in 0..n {
                if let Some((c, _)) = table.compose(s, v) {
                    right[c] = true;
                }
            }
            let mut ideal = vec![false; n];
            for w in (0..n).filter(|&w| right[w]) {
                for u in 0..n {
                    if let Some((c, _)) = table.compose(u, w) {
                        ideal[c] = true;
                    }
                }
            }
            ideal
        })
        .collect();
    let mut reps: Vec<usize> = Vec::new();
    let mut class_of = vec![0; n];
    for s in 0..n {
        match reps.iter().position(|&r| ideals[r] == ideals[s]) {
            Some(c) => class_of[s] = c,
            None => {
                class_of[s] = reps.len();
                reps.push(s);
            }
        }
    }
    let leq = reps
        .iter()
        .map(|&a| reps.iter().map(|&b| (0..n).all(|x| !ideals[a][x] || ideals[b][x])).collect())
        .collect();
    let ideal_size = reps.iter().map(|&r| ideals[r].iter().filter(|&&x| x).count()).collect();
    JClasses { class_of, leq, ideal_size }
}

/// Morphisms in `J_j`, i.e. whose class is at most `j` in a fixed linear
/// extension of the J-order.
#[derive(Clone, Debug)]
pub struct IdealFilter {
    pub j: usize,
    members: Vec<bool>,
}

impl IdealFilter {
    pub fn contains(&self, m: usize) -> bool {
        self.members[m]
    }

    /// Closed under composition with every morphism on both sides.
    pub fn is_two_sided(&self, table: &MorphismTable) -> bool {
        (0..table.len()).filter(|&s| self.members[s]).all(|s| {
            (0..table.len()).all(|u| {
                table.compose(u, s).map_or(true, |(c, _)| self.members[c])
                    && table.compose(s, u).map_or(true, |(c, _)| self.members[c])
            })
        })
    }
}

/// J-class structure tied to the labels of the production code.
pub struct Oracle<'a> {
    pub table: &'a MorphismTable,
    pub classes: JClasses,
    /// Position of each J-class in the linear extension.
    rank: Vec<usize>,
    /// J-class of the idempotent `e_i` for each label index `i` (from 1).
    class_of_label_index: Vec<usize>,
    tables: Vec<Option<CharacterTable>>,
}

impl<'a> Oracle<'a> {
    pub fn new(table: &'a MorphismTable) -> Result<Self> {
        let classes = green_j_classes(table);
        let mut order: Vec<usize> = (0..classes.ideal_size.len()).collect();
        order.sort_by_key(|&c| (classes.ideal_size[c], c));
        let mut rank = vec![0; order.len()];
        for (k, &c) in order.iter().enumerate() {
            rank[c] = k;
        }
        let (class_of_label_index, tables) = match &table.species {
            Species::Biset(objs) => (
                table.units.iter().map(|&u| classes.class_of[u]).collect(),
                objs.objects.iter().map(|o| Some(o.table.clone())).collect(),
            ),
            Species::Brauer { n, .. } => {
                let mut idx = Vec::new();
                for i in 1..=n / 2 + 1 {
                    let e = e_idempotent(*n, i);
                    let m = table
                        .morphisms
                        .iter()
                        .position(|x| matches!(x, Morphism::Brauer(d) if *d == e))
                        .expect("idempotent present");
                    idx.push(classes.class_of[m]);
                }
                let k = idx.len();
                (idx, vec![None; k])
            }
        };
        Ok(Oracle { table, classes, rank, class_of_label_index, tables })
    }

    /// `J_j` for the label index `j`.
    pub fn ideal(&self, j: usize) -> IdealFilter {
        let cut = self.rank[self.class_of_label_index[j - 1]];
        let members = (0..self.table.len()).map(|m| self.rank[self.classes.class_of[m]] <= cut).collect();
        IdealFilter { j, members }
    }

    /// `J_{j-1}`: classes strictly before that of `e_j`.
    fn ideal_below(&self, j: usize) -> IdealFilter {
        let cut = self.rank[self.class_of_label_index[j - 1]];
        let members = (0..self.table.len()).map(|m| self.rank[self.classes.class_of[m]] < cut).collect();
        IdealFilter { j, members }
    }

    /// Strict J-order between the classes of `e_j` and `e_i`.
    pub fn strictly_below(&self, j: usize, i: usize) -> bool {
        let (cj, ci) = (self.class_of_label_index[j - 1], self.class_of_label_index[i - 1]);
        cj != ci && self.classes.leq[cj][ci]
    }

    pub fn labels(&self) -> Vec<Label> {
        match &self.table.species {
            Species::Biset(objs) => objs.labels(),
            Species::Brauer { n, .. } => (1..=n / 2 + 1)
                .flat_map(|i| (1..=partitions_of(n_i(*n, i)).len()).map(move |r| Label::new(i, r)))
                .collect(),
        }
    }

    /// The central primitive idempotent of `k_α Γ_{e_i}` for label `a`.
    pub fn block_idempotent(&self, a: Label) -> Result<TwistedAlgebraElement> {
        let mut f = TwistedAlgebraElement::zero();
        match &self.table.species {
            Species::Biset(objs) => {
                let o = objs.object(a.i);
                let t = self.tables[a.i - 1].as_ref().unwrap();
                let g = o.group.order();
                let aut = &o.aut;
                let chi = &t.rows[a.r - 1];
                let scale = BigRational::new(BigInt::from(g * t.degrees[a.r - 1]), BigInt::from(aut.group.order()));
                for (alpha, map) in aut.maps.iter().enumerate() {
                    let value = chi[t.classes.class_of[aut.group.inv(alpha)]]
                        .to_rational()
                        .ok_or_else(|| Error::OracleBound("character is not rational-valued".into()))?;
                    let members: Vec<usize> = (0..g).map(|x| map.apply(x) * g + x).collect();
                    let l = GoursatSubgroup::new(a.i, a.i, members);
                    let m = self.find_biset(&l)?;
                    f.add_term(m, &scale * value);
                }
            }
            Species::Brauer { n, delta } => {
                let ni = n_i(*n, a.i);
                let lambda = &partitions_of(ni)[a.r - 1];
                let perms = all_perms(ni);
                let mut cache = MnCache::new();
                let dim = cache.value(lambda, &Partition::new(vec![1; ni]));
                let loops = n / 2 + 1 - a.i;
                let order: usize = (1..=ni).product();
                let scale = BigRational::new(BigInt::from(dim), BigInt::from(order))
                    / num_traits::pow(delta.clone(), loops);
                for s in perms {
                    let chi = cache.value(lambda, &Partition::new(s.inverse().cycle_type()));
                    let m = self.find_brauer(&perm_to_diagram(&s, *n, a.i));
                    f.add_term(m, &scale * BigRational::from_integer(BigInt::from(chi)));
                }
            }
        }
        Ok(f)
    }

    /// `e_i′`, the identity of `k_α Γ_{e_i}`.
    pub fn unit_of_class(&self, i: usize) -> TwistedAlgebraElement {
        match &self.table.species {
            Species::Biset(objs) => {
                let g = objs.object(i).group.order();
                TwistedAlgebraElement::term(self.table.units[i - 1], BigRational::from_integer(BigInt::from(g)))
            }
            Species::Brauer { n, delta } => {
                let e = e_idempotent(*n, i);
                let c = num_traits::pow(delta.clone(), n / 2 + 1 - i);
                TwistedAlgebraElement::term(self.find_brauer(&e), BigRational::one() / c)
            }
        }
    }

    fn find_biset(&self, l: &GoursatSubgroup) -> Result<usize> {
        self.table
            .morphisms
            .iter()
            .position(|m| matches!(m, Morphism::Biset(x) if x == l))
            .ok_or_else(|| Error::Consistency("morphism missing from table".into()))
    }

    fn find_brauer(&self, d: &BrauerDiagram) -> usize {
        self.table
            .morphisms
            .iter()
            .position(|m| matches!(m, Morphism::Brauer(x) if x == d))
            .expect("every diagram is enumerated")
    }

    /// Literal evaluation of `f_a·J_j·f_b ⊄ J_{j−1}` and the mirrored
    /// `f_b·J_j·f_a ⊄ J_{j−1}`, where `j` is the class of `b`.
    pub fn criterion_both_sides(&self, a: Label, b: Label) -> Result<(bool, bool)> {
        let (fa, fb) = (self.block_idempotent(a)?, self.block_idempotent(b)?);
        let (jj, below) = (self.ideal(b.i), self.ideal_below(b.i));
        let escapes = |x: &TwistedAlgebraElement| x.support().any(|m| !below.contains(m));
        let mut left = false;
        let mut right = false;
        for t in (0..self.table.len()).filter(|&t| jj.contains(t)) {
            let tb = TwistedAlgebraElement::basis(t);
            if !left {
                left = escapes(&self.table.mul(&self.table.mul(&fa, &tb), &fb));
            }
            if !right {
                right = escapes(&self.table.mul(&self.table.mul(&fb, &tb), &fa));
            }
            if left && right {
                break;
            }
        }
        Ok((left, right))
    }

    /// `ε_i·f_a ≠ 0` with `ε_i = Σ_{g∈G_i} Δ_{c_g}(G_i)`.
    pub fn epsilon_product_check(&self, a: Label) -> Result<bool> {
        let Species::Biset(objs) = &self.table.species else {
            return Err(Error::OracleBound("condensation is defined for biset tables".into()));
        };
        let o = objs.object(a.i);
        let g = o.group.order();
        let mut eps = TwistedAlgebraElement::zero();
        for x in 0..g {
            let c = &o.aut.maps[o.aut.conj_index[x]];
            let l = GoursatSubgroup::new(a.i, a.i, (0..g).map(|y| c.apply(y) * g + y).collect());
            eps.add_term(self.find_biset(&l)?, BigRational::one());
        }
        let f = self.block_idempotent(a)?;
        Ok(!self.table.mul(&eps, &f).is_zero())
    }
}

/// ⊑ computed by the oracle, with both one-sided conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleMatrix {
    pub labels: Vec<Label>,
    pub left: Vec<Vec<bool>>,
    pub right: Vec<Vec<bool>>,
    pub sq: Vec<Vec<bool>>,
}

pub fn oracle_sq(oracle: &Oracle) -> Result<OracleMatrix> {
    let labels = oracle.labels();
    let m = labels.len();
    let cells: Vec<(usize, usize, bool, bool)> = (0..m * m)
        .into_par_iter()
        .map(|x| {
            let (p, q) = (x / m, x % m);
            let (a, b) = (labels[p], labels[q]);
            if p == q {
                return Ok((p, q, true, true));
            }
            if !oracle.strictly_below(b.i, a.i) {
                return Ok((p, q, false, false));
            }
            let (l, r) = oracle.criterion_both_sides(a, b)?;
            Ok((p, q, l, r))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut left = vec![vec![false; m]; m];
    let mut right = vec![vec![false; m]; m];
    for (p, q, l, r) in cells {
        left[p][q] = l;
        right[p][q] = r;
    }
    let sq = (0..m).map(|p| (0..m).map(|q| left[p][q] || right[p][q]).collect()).collect();
    Ok(OracleMatrix { labels, left, right, sq })
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> CheckResult {
    CheckResult { name: name.into(), passed, detail: detail.into() }
}

/// Idempotency, orthogonality and completeness of the block idempotents.
fn idempotent_checks(oracle: &Oracle) -> Result<(bool, String)> {
    let labels = oracle.labels();
    let max_i = labels.iter().map(|l| l.i).max().unwrap_or(0);
    for i in 1..=max_i {
        let fs: Vec<TwistedAlgebraElement> = labels
            .iter()
            .filter(|l| l.i == i)
            .map(|&l| oracle.block_idempotent(l))
            .collect::<Result<_>>()?;
        let mut total = TwistedAlgebraElement::zero();
        for (x, f) in fs.iter().enumerate() {
            total = total.add(f);
            for (y, g) in fs.iter().enumerate() {
                let p = oracle.table.mul(f, g);
                let ok = if x == y { p == *f } else { p.is_zero() };
                if !ok {
                    return Ok((false, format!("class {i}: f{x}·f{y} wrong")));
                }
            }
        }
        if total != oracle.unit_of_class(i) {
            return Ok((false, format!("class {i}: idempotents do not sum to the unit")));
        }
    }
    Ok((true, "idempotent, orthogonal, complete".into()))
}

fn matrix_diff(a: &[Vec<bool>], b: &[Vec<bool>], labels: &[Label]) -> Vec<String> {
    let mut out = Vec::new();
    for p in 0..a.len() {
        for q in 0..a.len() {
            if a[p][q] != b[p][q] {
                out.push(format!("{} vs {}: {} / {}", labels[p], labels[q], a[p][q], b[p][q]));
            }
        }
    }
    out
}

/// Full battery for one biset catalog.
pub fn biset_suite(names: &[&str]) -> Result<Vec<CheckResult>> {
    let objs = ObjectList::from_builtin(names)?;
    let tag = format!("biset {{{}}}", names.join(","));
    let table = enumerate_all_morphisms(&objs)?;
    let mut out = Vec::new();
    let triples = table.verify();
    out.push(check(
        format!("{tag}: associativity and κ cocycle"),
        triples.is_ok(),
        match &triples {
            Ok(t) => format!("{} morphisms, {t} composable triples", table.len()),
            Err(e) => e.to_string(),
        },
    ));
    let oracle = Oracle::new(&table)?;

    // J(L) = J(M) exactly when the quotients p1/k1 agree.
    let mut by_quotient: Vec<Option<usize>> = vec![None; objs.len()];
    let mut green_ok = true;
    for (m, mor) in table.morphisms.iter().enumerate() {
        let Morphism::Biset(l) = mor else { unreachable!() };
        let q = l.quintuple(&objs.object(l.i).group, &objs.object(l.j).group).q1.group;
        let obj = objs
            .objects
            .iter()
            .position(|o| o.group.order() == q.order() && crate::perm::are_isomorphic(&o.group, &q))
            .ok_or_else(|| Error::Consistency("quotient outside catalog".into()))?;
        let c = oracle.classes.class_of[m];
        match by_quotient[obj] {
            None => by_quotient[obj] = Some(c),
            Some(prev) => green_ok &= prev == c,
        }
    }
    let distinct = by_quotient.iter().flatten().collect::<std::collections::BTreeSet<_>>().len();
    green_ok &= distinct == objs.len() && oracle.classes.ideal_size.len() == objs.len();
    out.push(check(format!("{tag}: J-classes match quotient types"), green_ok, format!("{distinct} classes")));

    let ideals_ok = (1..=objs.len()).all(|j| oracle.ideal(j).is_two_sided(&table));
    out.push(check(format!("{tag}: ideals J_j two-sided"), ideals_ok, ""));

    let (ok, detail) = idempotent_checks(&oracle)?;
    out.push(check(format!("{tag}: block idempotents"), ok, detail));

    let om = oracle_sq(&oracle)?;
    let rel = crate::biset::build_order(&objs)?;
    let diff = matrix_diff(&om.sq, &rel.sq, &om.labels);
    out.push(check(format!("{tag}: oracle ⊑ equals character criterion"), diff.is_empty(), diff.join("; ")));
    let sides = matrix_diff(&om.left, &om.right, &om.labels);
    out.push(check(format!("{tag}: both one-sided conditions agree"), sides.is_empty(), sides.join("; ")));

    let mut eps_ok = true;
    for a in objs.labels() {
        eps_ok &= oracle.epsilon_product_check(a)? == objs.epsilon_survives(a);
        let o = objs.object(a.i);
        eps_ok &= objs.epsilon_survives(a) == kernel_contains(&o.table.classes, &o.table.rows[a.r - 1], &o.aut.inn);
    }
    out.push(check(format!("{tag}: ε·f ≠ 0 matches survival"), eps_ok, ""));
    Ok(out)
}

/// Full battery for the Brauer algebra of degree `n` at several `δ`.
pub fn brauer_suite(n: usize, deltas: &[i64]) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let mut previous: Option<Vec<Vec<bool>>> = None;
    for &dv in deltas {
        let delta = BigRational::from_integer(BigInt::from(dv));
        let tag = format!("brauer n={n} δ={dv}");
        let table = enumerate_brauer_morphisms(n, &delta)?;
        let triples = table.verify();
        out.push(check(
            format!("{tag}: associativity and δ^m cocycle"),
            triples.is_ok(),
            match &triples {
                Ok(t) => format!("{} diagrams, {t} triples", table.len()),
                Err(e) => e.to_string(),
            },
        ));
        let oracle = Oracle::new(&table)?;
        let green_ok = table.morphisms.iter().enumerate().all(|(a, ma)| {
            table.morphisms.iter().enumerate().all(|(b, mb)| {
                let (Morphism::Brauer(x), Morphism::Brauer(y)) = (ma, mb) else { unreachable!() };
                (oracle.classes.class_of[a] == oracle.classes.class_of[b])
                    == (x.propagating_lines() == y.propagating_lines())
            })
        });
        out.push(check(format!("{tag}: J-classes match propagating lines"), green_ok, ""));
        let ideals_ok = (1..=n / 2 + 1).all(|j| oracle.ideal(j).is_two_sided(&table));
        out.push(check(format!("{tag}: ideals J_j two-sided"), ideals_ok, ""));
        let (ok, detail) = idempotent_checks(&oracle)?;
        out.push(check(format!("{tag}: block idempotents"), ok, detail));

        let om = oracle_sq(&oracle)?;
        let rel = crate::brauer::build_brauer_order(n, &delta)?.relation;
        let labels_match = rel.labels.iter().zip(&om.labels).all(|(b, l)| b.i == l.i && b.r == l.r);
        let diff = matrix_diff(&om.sq, &rel.sq, &om.labels);
        out.push(check(
            format!("{tag}: oracle ⊑ equals character criterion"),
            labels_match && diff.is_empty(),
            diff.join("; "),
        ));
        let sides = matrix_diff(&om.left, &om.right, &om.labels);
        out.push(check(format!("{tag}: both one-sided conditions agree"), sides.is_empty(), sides.join("; ")));
        if let Some(prev) = &previous {
            out.push(check(format!("{tag}: oracle ⊑ independent of δ"), *prev == om.sq, ""));
        }
        previous = Some(om.sq);
    }
    Ok(out)
}

/// Catalogs `{1,C2}`, `{1,C2,C3}`, `{1,C2,C3,S3}` and Brauer `n = 2, 3, 4`
/// at `δ ∈ {1, 7}`.
pub fn run_small_suite() -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for names in [&["1", "C2"][..], &["1", "C2", "C3"], &["1", "C2", "C3", "S3"]] {
        out.extend(biset_suite(names)?);
    }
    for n in 2..=4 {
        out.extend(brauer_suite(n, &[1, 7])?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn morphism_counts() {
        let t = enumerate_all_morphisms(&ObjectList::from_builtin(&["1"]).unwrap()).unwrap();
        assert_eq!(t.len(), 1);
        let t = enumerate_all_morphisms(&ObjectList::from_builtin(&["1", "C2"]).unwrap()).unwrap();
        assert_eq!(t.len(), 10);
        let d = BigRational::one();
        assert_eq!(enumerate_brauer_morphisms(1, &d).unwrap().len(), 1);
        assert_eq!(enumerate_brauer_morphisms(2, &d).unwrap().len(), 3);
        assert_eq!(enumerate_brauer_morphisms(3, &d).unwrap().len(), 15);
        assert!(enumerate_brauer_morphisms(5, &d).is_err());
        assert!(enumerate_all_morphisms(&ObjectList::s4_family()).is_err());
    }

    #[test]
    fn trivial_category_has_one_class() {
        let t = enumerate_all_morphisms(&ObjectList::from_builtin(&["1"]).unwrap()).unwrap();
        let o = Oracle::new(&t).unwrap();
        assert_eq!(o.classes.ideal_size.len(), 1);
        let f = o.block_idempotent(Label::new(1, 1)).unwrap();
        assert_eq!(f, o.unit_of_class(1));
    }

    #[test]
    fn c3_sign_idempotent() {
        let objs = ObjectList::from_builtin(&["1", "C2", "C3"]).unwrap();
        let t = enumerate_all_morphisms(&objs).unwrap();
        let o = Oracle::new(&t).unwrap();
        let f = o.block_idempotent(Label::new(3, 2)).unwrap();
        assert_eq!(t.mul(&f, &f), f);
        assert_eq!(f.coeffs.len(), 2);
    }

    #[test]
    fn brauer_sign_idempotent() {
        let t = enumerate_brauer_morphisms(4, &BigRational::one()).unwrap();
        let o = Oracle::new(&t).unwrap();
        let f = o.block_idempotent(Label::new(2, 2)).unwrap();
        assert_eq!(t.mul(&f, &f), f);
    }

    #[test]
    fn small_biset_suite_passes() {
        for c in biset_suite(&["1", "C2", "C3"]).unwrap() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn small_brauer_suite_passes() {
        for c in brauer_suite(3, &[1, 7]).unwrap() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }
}
