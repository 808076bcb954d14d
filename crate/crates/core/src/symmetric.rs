//! Partitions, Murnaghan–Nakayama and the Pieri rule for horizontal 2-strips.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{group_from_generators, CayleyGroup, Perm};

/// Weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{s}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse(format!("{s} is not a partition")));
        }
        Ok(Partition { parts })
    }
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Memoised Murnaghan–Nakayama evaluation on beta-sets.
#[derive(Default)]
pub struct MnCache {
    memo: HashMap<(Vec<usize>, Vec<usize>), i64>,
}

impl MnCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ^λ` on the class of cycle type `mu`.
    pub fn value(&mut self, lambda: &Partition, mu: &Partition) -> i64 {
        assert_eq!(lambda.n(), mu.n(), "partition sizes differ");
        let k = lambda.len();
        let beta: Vec<usize> = lambda.parts.iter().enumerate().map(|(i, &l)| l + k - 1 - i).collect();
        self.eval(beta, mu.parts.clone())
    }

    fn eval(&mut self, beta: Vec<usize>, mu: Vec<usize>) -> i64 {
        let Some((&r, rest)) = mu.split_first() else { return 1 };
        let key = (beta, mu.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let beta = &key.0;
        let mut total = 0;
        for (idx, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let height = beta.iter().filter(|&&x| x > b - r && x < b).count();
            let mut next = beta.clone();
            next[idx] = b - r;
            next.sort_unstable_by(|x, y| y.cmp(x));
            let sign = if height % 2 == 0 { 1 } else { -1 };
            total += sign * self.eval(next, rest.to_vec());
        }
        self.memo.insert(key, total);
        total
    }
}

pub fn mn_character_value(lambda: &Partition, cycle_type: &Partition) -> i64 {
    MnCache::new().value(lambda, cycle_type)
}

/// Partitions obtained from `lambda` by adding one horizontal strip of two
/// boxes, each with multiplicity one.
fn add_one_strip(lambda: &Partition) -> Vec<Partition> {
    let l = &lambda.parts;
    let rows = l.len() + 1;
    let mut out = Vec::new();
    for a in 0..rows {
        for b in a..rows {
            let mut mu: Vec<usize> = l.clone();
            mu.push(0);
            mu[a] += 1;
            mu[b] += 1;
            // Interlacing: mu_i ≤ lambda_{i-1}.
            let ok = (1..rows).all(|i| mu[i] <= l[i - 1]);
            if ok {
                out.push(Partition::new(mu));
            }
        }
    }
    out
}

/// Multiset of constituents of `Ind(S^λ ⊠ triv_2^{⊗steps})`, by iterated Pieri.
pub fn add_horizontal_2_strips(lambda: &Partition, steps: usize) -> BTreeMap<Partition, u64> {
    let mut cur = BTreeMap::from([(lambda.clone(), 1u64)]);
    for _ in 0..steps {
        let mut next = BTreeMap::new();
        for (p, m) in &cur {
            for q in add_one_strip(p) {
                *next.entry(q).or_insert(0) += m;
            }
        }
        cur = next;
    }
    cur
}

/// `S_n` generated by an `n`-cycle and a transposition.
pub fn symmetric_group(n: usize) -> Result<CayleyGroup> {
    if n <= 1 {
        return group_from_generators(&[Perm::identity(n)]);
    }
    let cycle: Vec<usize> = (0..n).collect();
    let gens = if n == 2 {
        vec![Perm::from_cycles(2, &[&[0, 1]])?]
    } else {
        vec![Perm::from_cycles(n, &[&cycle])?, Perm::from_cycles(n, &[&[0, 1]])?]
    };
    group_from_generators(&gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn partition_orders() {
        assert_eq!(partitions_of(2), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(
            partitions_of(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        let six = partitions_of(6);
        assert_eq!(six.len(), 11);
        assert_eq!(six[3], p(&[4, 1, 1]));
        assert_eq!(six[4], p(&[3, 3]));
        assert_eq!(six[7], p(&[2, 2, 2]));
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
    }

    #[test]
    fn mn_values() {
        assert_eq!(mn_character_value(&p(&[4]), &p(&[3, 1])), 1);
        assert_eq!(mn_character_value(&p(&[1, 1, 1, 1]), &p(&[2, 1, 1])), -1);
        assert_eq!(mn_character_value(&p(&[1, 1, 1, 1]), &p(&[2, 2])), 1);
        assert_eq!(mn_character_value(&p(&[3, 1]), &p(&[2, 1, 1])), 1);
        assert_eq!(mn_character_value(&p(&[2, 2]), &p(&[1, 1, 1, 1])), 2);
        assert_eq!(mn_character_value(&p(&[3, 2, 1]), &p(&[1; 6])), 16);
        assert_eq!(mn_character_value(&Partition::empty(), &Partition::empty()), 1);
    }

    #[test]
    fn pieri_examples() {
        let got: Vec<_> = add_horizontal_2_strips(&p(&[2]), 1).into_keys().collect();
        assert_eq!(got, vec![p(&[2, 2]), p(&[3, 1]), p(&[4])]);
        let got: Vec<_> = add_horizontal_2_strips(&p(&[1, 1]), 1).into_keys().collect();
        assert_eq!(got, vec![p(&[2, 1, 1]), p(&[3, 1])]);
        let got = add_horizontal_2_strips(&Partition::empty(), 1);
        assert_eq!(got, BTreeMap::from([(p(&[2]), 1)]));
    }

    #[test]
    fn parse_round_trip() {
        for q in partitions_of(5) {
            assert_eq!(q.to_string().parse::<Partition>().unwrap(), q);
        }
        assert!("(1,2)".parse::<Partition>().is_err());
    }

    proptest! {
        #[test]
        fn pieri_is_associative(n in 0usize..5, a in 0usize..3, b in 0usize..3) {
            for lambda in partitions_of(n) {
                let direct = add_horizontal_2_strips(&lambda, a + b);
                let mut staged: BTreeMap<Partition, u64> = BTreeMap::new();
                for (mu, m) in add_horizontal_2_strips(&lambda, a) {
                    for (nu, k) in add_horizontal_2_strips(&mu, b) {
                        *staged.entry(nu).or_insert(0) += m * k;
                    }
                }
                prop_assert_eq!(direct, staged);
            }
        }

        #[test]
        fn pieri_preserves_dimension(n in 0usize..6) {
            // dim Ind = C(n+2, 2) · dim S^λ
            let dim = |q: &Partition| mn_character_value(q, &Partition::new(vec![1; q.n()]));
            for lambda in partitions_of(n) {
                let total: i64 = add_horizontal_2_strips(&lambda, 1)
                    .iter()
                    .map(|(q, m)| *m as i64 * dim(q))
                    .sum();
                prop_assert_eq!(total, ((n + 2) * (n + 1) / 2) as i64 * dim(&lambda));
            }
        }
    }
}
