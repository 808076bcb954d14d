use std::fmt::Display;

use anyhow::Result;
use qhorder_core::biset::{condensed_order, MonotonicityReport};
use qhorder_core::brauer::{n_i, BrauerOrder};
use qhorder_core::{Label, ObjectList, OrderRelation};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BisetLabelOut {
    pub i: usize,
    pub r: usize,
    pub group: String,
    pub char_degree: usize,
    pub survives: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrauerLabelOut {
    pub i: usize,
    pub r: usize,
    pub lambda: String,
    pub n_i: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condensed {
    pub labels: Vec<usize>,
    pub unlhd: Vec<Vec<u8>>,
    pub leq: Vec<Vec<u8>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BisetOut {
    pub labels: Vec<BisetLabelOut>,
    pub sq: Vec<Vec<u8>>,
    pub unlhd: Vec<Vec<u8>>,
    pub leq: Vec<Vec<u8>>,
    /// Positions of the surviving labels and the orders restricted to them.
    pub condensed: Condensed,
    pub monotonicity: MonotonicityReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrauerOut {
    pub n: usize,
    pub delta: String,
    pub labels: Vec<BrauerLabelOut>,
    pub sq: Vec<Vec<u8>>,
    pub unlhd: Vec<Vec<u8>>,
    pub leq: Vec<Vec<u8>>,
}

fn bits(m: &[Vec<bool>]) -> Vec<Vec<u8>> {
    m.iter().map(|row| row.iter().map(|&b| u8::from(b)).collect()).collect()
}

pub fn biset_out(objs: &ObjectList, rel: &OrderRelation<Label>, report: MonotonicityReport) -> BisetOut {
    let labels = rel
        .labels
        .iter()
        .map(|&l| {
            let o = objs.object(l.i);
            BisetLabelOut {
                i: l.i,
                r: l.r,
                group: o.name.clone(),
                char_degree: o.table.degrees[l.r - 1],
                survives: objs.epsilon_survives(l),
            }
        })
        .collect();
    let cond = condensed_order(objs, rel);
    BisetOut {
        labels,
        sq: bits(&rel.sq),
        unlhd: bits(&rel.unlhd),
        leq: bits(&rel.leq),
        condensed: Condensed {
            labels: cond.labels.iter().map(|l| rel.index_of(l).unwrap()).collect(),
            unlhd: bits(&cond.unlhd),
            leq: bits(&cond.leq),
        },
        monotonicity: report,
    }
}

pub fn brauer_out(order: &BrauerOrder) -> BrauerOut {
    let rel = &order.relation;
    BrauerOut {
        n: order.n,
        delta: order.delta.clone(),
        labels: rel
            .labels
            .iter()
            .map(|l| BrauerLabelOut { i: l.i, r: l.r, lambda: l.lambda.to_string(), n_i: n_i(order.n, l.i) })
            .collect(),
        sq: bits(&rel.sq),
        unlhd: bits(&rel.unlhd),
        leq: bits(&rel.leq),
    }
}

/// One line per ordered pair of labels.
pub fn csv<L>(rel: &OrderRelation<L>, ir: impl Fn(&L) -> (usize, usize)) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["from_i", "from_r", "to_i", "to_r", "sq", "unlhd", "leq"])?;
    for (x, a) in rel.labels.iter().enumerate() {
        for (y, b) in rel.labels.iter().enumerate() {
            let ((ai, ar), (bi, br)) = (ir(a), ir(b));
            w.serialize((ai, ar, bi, br, u8::from(rel.sq[x][y]), u8::from(rel.unlhd[x][y]), u8::from(rel.leq[x][y])))?;
        }
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// ASCII grid in which the cell at row `y`, column `x` shows `x ⊑ y`.
pub fn grid<L: Display>(rel: &OrderRelation<L>, marked: impl Fn(&L) -> bool) -> String {
    let names: Vec<String> = rel
        .labels
        .iter()
        .map(|l| format!("{l}{}", if marked(l) { "*" } else { "" }))
        .collect();
    let width = names.iter().map(|n| n.chars().count()).max().unwrap_or(1) + 1;
    let pad = |s: &str| format!("{s:>width$}");
    let mut out = pad("");
    for n in &names {
        out.push_str(&pad(n));
    }
    out.push('\n');
    for (y, ny) in names.iter().enumerate() {
        out.push_str(&pad(ny));
        for x in 0..rel.labels.len() {
            out.push_str(&pad(if rel.sq[x][y] { "1" } else { "." }));
        }
        out.push('\n');
    }
    out
}
