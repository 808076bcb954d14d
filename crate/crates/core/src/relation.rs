//! Boolean relation matrices over a label set.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `sq` (⊑), its reflexive-transitive closure `unlhd` (⊴), and the coarse
/// order `leq` (≤), all indexed by position in `labels`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderRelation<L> {
    pub labels: Vec<L>,
    pub sq: Vec<Vec<bool>>,
    pub unlhd: Vec<Vec<bool>>,
    pub leq: Vec<Vec<bool>>,
}

impl<L: Clone + PartialEq> OrderRelation<L> {
    /// Closes `sq` and validates the result.
    pub fn from_parts(labels: Vec<L>, sq: Vec<Vec<bool>>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let unlhd = warshall(&sq);
        let rel = OrderRelation { labels, sq, unlhd, leq };
        rel.verify()?;
        Ok(rel)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, l: &L) -> Option<usize> {
        self.labels.iter().position(|x| x == l)
    }

    pub fn sq_of(&self, a: &L, b: &L) -> bool {
        self.lookup(&self.sq, a, b)
    }

    pub fn unlhd_of(&self, a: &L, b: &L) -> bool {
        self.lookup(&self.unlhd, a, b)
    }

    pub fn leq_of(&self, a: &L, b: &L) -> bool {
        self.lookup(&self.leq, a, b)
    }

    fn lookup(&self, m: &[Vec<bool>], a: &L, b: &L) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => m[i][j],
            _ => false,
        }
    }

    /// Partial-order axioms for ⊴ and ≤, and ⊴ ⊆ ≤.
    pub fn verify(&self) -> Result<()> {
        for (name, m) in [("unlhd", &self.unlhd), ("leq", &self.leq)] {
            if let Some(msg) = partial_order_violation(m) {
                return Err(Error::Consistency(format!("{name}: {msg}")));
            }
        }
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                if self.unlhd[a][b] && !self.leq[a][b] {
                    return Err(Error::Consistency(format!("leq does not refine unlhd at ({a},{b})")));
                }
            }
        }
        Ok(())
    }

    /// Restriction to the labels whose positions satisfy `keep`.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> OrderRelation<L> {
        let idx: Vec<usize> = (0..self.len()).filter(|&i| keep(i)).collect();
        let sub = |m: &Vec<Vec<bool>>| idx.iter().map(|&a| idx.iter().map(|&b| m[a][b]).collect()).collect();
        OrderRelation {
            labels: idx.iter().map(|&i| self.labels[i].clone()).collect(),
            sq: sub(&self.sq),
            unlhd: sub(&self.unlhd),
            leq: sub(&self.leq),
        }
    }
}

/// Reflexive-transitive closure.
pub fn warshall(m: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = m.len();
    let mut c = m.to_vec();
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if c[i][k] {
                for j in 0..n {
                    if c[k][j] {
                        c[i][j] = true;
                    }
                }
            }
        }
    }
    c
}

pub fn partial_order_violation(m: &[Vec<bool>]) -> Option<String> {
    let n = m.len();
    for a in 0..n {
        if !m[a][a] {
            return Some(format!("not reflexive at {a}"));
        }
        for b in 0..n {
            if a != b && m[a][b] && m[b][a] {
                return Some(format!("not antisymmetric at ({a},{b})"));
            }
            if m[a][b] {
                for c in 0..n {
                    if m[b][c] && !m[a][c] {
                        return Some(format!("not transitive at ({a},{b},{c})"));
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_chain() {
        let sq = vec![vec![true, true, false], vec![false, true, true], vec![false, false, true]];
        let c = warshall(&sq);
        assert!(c[0][2]);
        assert!(partial_order_violation(&c).is_none());
        assert!(partial_order_violation(&sq).is_some());
    }

    #[test]
    fn cycle_rejected() {
        let sq = vec![vec![true, true], vec![true, true]];
        let leq = sq.clone();
        assert!(OrderRelation::from_parts(vec![0, 1], sq, leq).is_err());
    }
}
