//! The level-2 crystal graph on bipartitions.
//!
//! For `e >= 2` and `0 <= f <= e/2` the bipartitions carry Kashiwara
//! operators computed by the signature rule: list the addable and removable
//! i-nodes from below to above (component 2 below component 1, higher rows
//! lower), cancel adjacent `+-` pairs, then `f~_i` adds at the leftmost
//! surviving `+` and `e~_i` removes at the rightmost surviving `-`.
//!
//! The connected component of the empty bipartition is the highest-weight
//! crystal; its members are the Kleshchev bipartitions, which label the
//! simple modules. The reading order above is the unique convention that
//! reproduces the crystal-graph and canonical-basis fixtures in the tests.

use crate::partitions::{Bipartition, Node};
use std::collections::BTreeSet;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CrystalError {
    #[error("configuration must satisfy e >= 2 and 0 <= f <= e/2 (got e = {e}, f = {f})")]
    BadConfig { e: u32, f: u32 },
    #[error("the h-involution needs e even and f = e/2")]
    NeedsEvenLevel,
    #[error("{0} is not a Kleshchev bipartition for this configuration")]
    NotKleshchev(Bipartition),
}

/// Quantum characteristic `e` and charge offset `f` of the second component;
/// the highest weight is `Lambda_0 + Lambda_f`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct CrystalConfig {
    e: u32,
    f: u32,
}

impl CrystalConfig {
    pub fn new(e: u32, f: u32) -> Result<Self, CrystalError> {
        if e < 2 || 2 * f > e {
            return Err(CrystalError::BadConfig { e, f });
        }
        Ok(CrystalConfig { e, f })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    /// Canonical representative of an integer residue in `0..e`.
    pub fn res(&self, i: i64) -> u32 {
        i.rem_euclid(self.e as i64) as u32
    }

    pub fn residue_of(&self, node: &Node) -> u32 {
        node.residue(self.e, self.f)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Mark {
    Addable,
    Removable,
}

/// Addable/removable i-nodes in reading order with their marks.
fn signature(lam: &Bipartition, i: u32, cfg: &CrystalConfig) -> Vec<(Node, Mark)> {
    let mut marked: Vec<(Node, Mark)> = lam
        .addable_nodes()
        .into_iter()
        .filter(|n| cfg.residue_of(n) == i)
        .map(|n| (n, Mark::Addable))
        .chain(
            lam.removable_nodes()
                .into_iter()
                .filter(|n| cfg.residue_of(n) == i)
                .map(|n| (n, Mark::Removable)),
        )
        .collect();
    // Below-to-above merge of the two already-ordered lists.
    marked.sort_by(|(a, _), (b, _)| {
        if a.is_below(b) {
            std::cmp::Ordering::Less
        } else if b.is_below(a) {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Equal
        }
    });
    marked
}

/// Reduced signature: indices into `sig` that survive `+-` cancellation.
fn reduced(sig: &[(Node, Mark)]) -> Vec<usize> {
    let mut stack: Vec<usize> = vec![];
    for (idx, (_, mark)) in sig.iter().enumerate() {
        match mark {
            Mark::Addable => stack.push(idx),
            Mark::Removable => {
                if stack.last().is_some_and(|&top| sig[top].1 == Mark::Addable) {
                    stack.pop();
                } else {
                    stack.push(idx);
                }
            }
        }
    }
    stack
}

/// The good addable i-node, if any.
pub fn good_addable_node(lam: &Bipartition, i: u32, cfg: &CrystalConfig) -> Option<Node> {
    let sig = signature(lam, i, cfg);
    reduced(&sig)
        .into_iter()
        .find(|&idx| sig[idx].1 == Mark::Addable)
        .map(|idx| sig[idx].0)
}

/// The good removable i-node, if any.
pub fn good_removable_node(lam: &Bipartition, i: u32, cfg: &CrystalConfig) -> Option<Node> {
    let sig = signature(lam, i, cfg);
    reduced(&sig)
        .into_iter()
        .rev()
        .find(|&idx| sig[idx].1 == Mark::Removable)
        .map(|idx| sig[idx].0)
}

/// Kashiwara lowering operator; `None` when `phi_i = 0`.
pub fn f_tilde(lam: &Bipartition, i: u32, cfg: &CrystalConfig) -> Option<Bipartition> {
    good_addable_node(lam, i, cfg).map(|n| lam.with_node_added(n))
}

/// Kashiwara raising operator, the partial inverse of [`f_tilde`].
pub fn e_tilde(lam: &Bipartition, i: u32, cfg: &CrystalConfig) -> Option<Bipartition> {
    good_removable_node(lam, i, cfg).map(|n| lam.with_node_removed(n))
}

/// Number of surviving `-` signs, i.e. how often `e~_i` applies.
pub fn epsilon(lam: &Bipartition, i: u32, cfg: &CrystalConfig) -> usize {
    let sig = signature(lam, i, cfg);
    reduced(&sig)
        .into_iter()
        .filter(|&idx| sig[idx].1 == Mark::Removable)
        .count()
}

/// Deterministic peeling step: the largest residue with a good removable
/// node. `None` exactly at sources of the crystal.
fn peel_step(lam: &Bipartition, cfg: &CrystalConfig) -> Option<(u32, Bipartition)> {
    for i in (0..cfg.e()).rev() {
        if let Some(prev) = e_tilde(lam, i, cfg) {
            return Some((i, prev));
        }
    }
    None
}

/// Membership in the highest-weight crystal generated by the empty
/// bipartition: peel greedily; components of the Fock crystal have unique
/// sources, so landing on the empty bipartition is path-independent.
pub fn is_kleshchev(lam: &Bipartition, cfg: &CrystalConfig) -> bool {
    let mut cur = lam.clone();
    while let Some((_, prev)) = peel_step(&cur, cfg) {
        cur = prev;
    }
    cur == Bipartition::empty()
}

/// A path `res[0], res[1], ...` with `lam = f~_{res[n-1]} ... f~_{res[0]} {}`,
/// extracted by always removing at the largest residue.
pub fn crystal_path(lam: &Bipartition, cfg: &CrystalConfig) -> Result<Vec<u32>, CrystalError> {
    let mut cur = lam.clone();
    let mut path = vec![];
    while let Some((i, prev)) = peel_step(&cur, cfg) {
        path.push(i);
        cur = prev;
    }
    if cur != Bipartition::empty() {
        return Err(CrystalError::NotKleshchev(lam.clone()));
    }
    path.reverse();
    Ok(path)
}

/// Re-applies a residue path from the empty bipartition.
pub fn apply_path(path: &[u32], cfg: &CrystalConfig) -> Option<Bipartition> {
    let mut cur = Bipartition::empty();
    for &i in path {
        cur = f_tilde(&cur, i, cfg)?;
    }
    Some(cur)
}

/// All Kleshchev bipartitions of size `n`.
pub fn crystal_layer(n: u64, cfg: &CrystalConfig) -> BTreeSet<Bipartition> {
    let mut layer: BTreeSet<Bipartition> = BTreeSet::new();
    layer.insert(Bipartition::empty());
    for _ in 0..n {
        let mut next = BTreeSet::new();
        for lam in &layer {
            for i in 0..cfg.e() {
                if let Some(mu) = f_tilde(lam, i, cfg) {
                    next.insert(mu);
                }
            }
        }
        layer = next;
    }
    layer
}

/// Edges `(source, residue, target)` of the crystal graph up to size `n`.
pub fn crystal_edges(n: u64, cfg: &CrystalConfig) -> Vec<(Bipartition, u32, Bipartition)> {
    let mut edges = vec![];
    let mut layer: BTreeSet<Bipartition> = BTreeSet::new();
    layer.insert(Bipartition::empty());
    for _ in 0..n {
        let mut next = BTreeSet::new();
        for lam in &layer {
            for i in 0..cfg.e() {
                if let Some(mu) = f_tilde(lam, i, cfg) {
                    edges.push((lam.clone(), i, mu.clone()));
                    next.insert(mu);
                }
            }
        }
        layer = next;
    }
    edges
}

/// Hu's involution on Kleshchev bipartitions for even `e` and `f = e/2`:
/// shift every residue of a crystal path by `e/2` and reapply. The result
/// does not depend on the chosen path.
pub fn h_involution(lam: &Bipartition, cfg: &CrystalConfig) -> Result<Bipartition, CrystalError> {
    if !cfg.e().is_multiple_of(2) || cfg.f() != cfg.e() / 2 {
        return Err(CrystalError::NeedsEvenLevel);
    }
    let path = crystal_path(lam, cfg)?;
    let shifted: Vec<u32> = path
        .iter()
        .map(|&i| cfg.res(i as i64 + (cfg.e() / 2) as i64))
        .collect();
    apply_path(&shifted, cfg).ok_or_else(|| CrystalError::NotKleshchev(lam.clone()))
}

/// Counts simple modules of the type-D Hecke algebra at rank `n` for even
/// `e`: h-orbits of size two contribute one simple, h-fixed points split
/// into two.
pub fn count_simples_type_d(n: u64, e: u32) -> Result<u64, CrystalError> {
    if !e.is_multiple_of(2) {
        return Err(CrystalError::NeedsEvenLevel);
    }
    let cfg = CrystalConfig::new(e, e / 2)?;
    let layer = crystal_layer(n, &cfg);
    let mut fixed = 0u64;
    for lam in &layer {
        if h_involution(lam, &cfg)? == *lam {
            fixed += 1;
        }
    }
    let moved = layer.len() as u64 - fixed;
    Ok(moved / 2 + 2 * fixed)
}

/// DOT rendering of the crystal graph truncated at size `n`.
pub fn crystal_dot(n: u64, cfg: &CrystalConfig) -> String {
    let mut out = String::from("digraph crystal {\n");
    for (src, i, dst) in crystal_edges(n, cfg) {
        let _ = writeln!(out, "  \"{src}\" -> \"{dst}\" [label=\"{i}\"];");
    }
    out.push_str("}\n");
    out
}
