//! Finite-dimensional quotients of path algebras by admissible ideals.
//!
//! A presentation is a quiver, a list of relations (integer combinations of
//! parallel paths of length at least 2, in function order: `mu*alpha` means
//! alpha first, then mu), and a nilpotency bound `b` asserting that every
//! path of length `b` lies in the ideal. The quotient basis is computed by
//! exact rational elimination in the path algebra truncated somewhat beyond
//! `b`; the bound is then verified, so a wrong bound surfaces as
//! [`AlgebraError::NotAdmissible`] instead of a wrong dimension. Since
//! admissibility is only semidecidable from generators, the verification is
//! itself relative to the truncation window; all algebras treated here are
//! nilpotent of small index, where the check is conclusive.
//!
//! Longer paths are eliminated first, so the surviving representatives are
//! the shortest paths in their residue classes.

use crate::quiver::Quiver;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("relation mixes non-parallel paths or has a path of length < 2")]
    NonParallelRelation,
    #[error("relation references unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("path `{0}` does not compose")]
    NonComposablePath(String),
    #[error("ideal does not contain all paths of length {bound}: `{witness}` survives")]
    NotAdmissible { bound: usize, witness: String },
    #[error("truncated path algebra too large ({0} paths); lower the nilpotency bound")]
    TooManyPaths(usize),
    #[error("cannot parse relation `{0}`")]
    Parse(String),
}

/// One relation: an integer combination of parallel paths, each path a list
/// of arrow indices in function order (last entry applied first).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    pub terms: Vec<(BigInt, Vec<usize>)>,
}

/// A quiver with relations and a nilpotency bound witnessing admissibility.
#[derive(Clone, Debug)]
pub struct AlgebraPresentation {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    pub nilpotency_bound: usize,
}

/// A path in function order; length 0 paths are the node idempotents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Path {
    /// Arrow indices, leftmost applied last; empty for an idempotent.
    pub arrows: Vec<usize>,
    /// Source node (needed when `arrows` is empty).
    pub source: usize,
}

impl Path {
    pub fn idempotent(node: usize) -> Self {
        Path {
            arrows: vec![],
            source: node,
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn target(&self, q: &Quiver) -> usize {
        self.arrows
            .first()
            .map_or(self.source, |&a| q.arrows()[a].tgt)
    }

    pub fn render(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e_{}", q.node_label(self.source))
        } else {
            self.arrows
                .iter()
                .map(|&a| q.arrows()[a].name.clone())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

fn path_source(q: &Quiver, arrows: &[usize]) -> Option<usize> {
    let mut src = None;
    for pair in arrows.windows(2) {
        // arrows[i+1] is applied before arrows[i].
        if q.arrows()[pair[1]].tgt != q.arrows()[pair[0]].src {
            return None;
        }
    }
    if let Some(&last) = arrows.last() {
        src = Some(q.arrows()[last].src);
    }
    src
}

impl AlgebraPresentation {
    pub fn new(
        quiver: Quiver,
        relations: Vec<Relation>,
        nilpotency_bound: usize,
    ) -> Result<Self, AlgebraError> {
        assert!(nilpotency_bound >= 2);
        for rel in &relations {
            let mut endpoints = None;
            for (_, arrows) in &rel.terms {
                if arrows.len() < 2 {
                    return Err(AlgebraError::NonParallelRelation);
                }
                let src = path_source(&quiver, arrows).ok_or_else(|| {
                    AlgebraError::NonComposablePath(
                        Path {
                            arrows: arrows.clone(),
                            source: 0,
                        }
                        .render(&quiver),
                    )
                })?;
                let tgt = quiver.arrows()[arrows[0]].tgt;
                match endpoints {
                    None => endpoints = Some((src, tgt)),
                    Some(e) => {
                        if e != (src, tgt) {
                            return Err(AlgebraError::NonParallelRelation);
                        }
                    }
                }
            }
        }
        Ok(AlgebraPresentation {
            quiver,
            relations,
            nilpotency_bound,
        })
    }

    /// Monomial relations killing every path of length `k`; the standard
    /// way to present a radical-power truncation.
    pub fn truncation_relations(quiver: &Quiver, k: usize) -> Vec<Relation> {
        assert!(k >= 2);
        enumerate_paths(quiver, k + 1)
            .into_iter()
            .filter(|p| p.len() == k)
            .map(|p| Relation {
                terms: vec![(BigInt::one(), p.arrows)],
            })
            .collect()
    }

    /// Parses the combined quiver-plus-relations file format: arrow lines
    /// `name: src -> dst`, relation lines `rel: c1*p1 + c2*p2 = 0` or
    /// `rel: p1 = p2`, comments after `#`.
    pub fn parse(text: &str, nilpotency_bound: usize) -> Result<Self, AlgebraError> {
        let mut quiver_lines = String::new();
        let mut rel_lines: Vec<String> = vec![];
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("rel:") {
                rel_lines.push(rest.trim().to_string());
            } else {
                quiver_lines.push_str(line);
                quiver_lines.push('\n');
            }
        }
        let quiver =
            Quiver::parse(&quiver_lines).map_err(|e| AlgebraError::Parse(e.to_string()))?;
        let mut relations = vec![];
        for line in rel_lines {
            relations.push(parse_relation(&quiver, &line)?);
        }
        AlgebraPresentation::new(quiver, relations, nilpotency_bound)
    }
}

fn parse_path(q: &Quiver, text: &str) -> Result<Vec<usize>, AlgebraError> {
    let mut arrows = vec![];
    for name in text.split('*') {
        let name = name.trim();
        let (idx, _) = q
            .arrow_by_name(name)
            .ok_or_else(|| AlgebraError::UnknownArrow(name.to_string()))?;
        arrows.push(idx);
    }
    Ok(arrows)
}

/// Parses one relation body (after `rel:`). Terms are `coef*path` or bare
/// paths, joined by `+`; an `= 0` or `= path` tail moves to the left side.
fn parse_relation(q: &Quiver, line: &str) -> Result<Relation, AlgebraError> {
    let (lhs, rhs) = line
        .split_once('=')
        .ok_or_else(|| AlgebraError::Parse(line.to_string()))?;
    let mut terms: Vec<(BigInt, Vec<usize>)> = vec![];
    let mut push_side = |side: &str, sign: i64| -> Result<(), AlgebraError> {
        let side = side.trim();
        if side == "0" {
            return Ok(());
        }
        for term in side.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(AlgebraError::Parse(line.to_string()));
            }
            // A leading integer token is a coefficient.
            let (coeff, path_text) = match term.split_once('*') {
                Some((head, tail)) if head.trim().parse::<i64>().is_ok() => {
                    (head.trim().parse::<i64>().unwrap(), tail)
                }
                _ => (1, term),
            };
            terms.push((BigInt::from(coeff * sign), parse_path(q, path_text)?));
        }
        Ok(())
    };
    push_side(lhs, 1)?;
    push_side(rhs, -1)?;
    Ok(Relation { terms })
}

/// All composable paths of length `< max_len`.
fn enumerate_paths(q: &Quiver, max_len: usize) -> Vec<Path> {
    let mut out: Vec<Path> = (0..q.node_count()).map(Path::idempotent).collect();
    let mut frontier = out.clone();
    for _ in 1..max_len {
        let mut next = vec![];
        for p in &frontier {
            let tgt = p.target(q);
            for (idx, a) in q.arrows().iter().enumerate() {
                if a.src == tgt {
                    // Extending at the target applies the new arrow last,
                    // which in function order puts it at the front.
                    let mut arrows = vec![idx];
                    arrows.extend(&p.arrows);
                    next.push(Path {
                        arrows,
                        source: p.source,
                    });
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

type SparseRow = BTreeMap<usize, BigRational>;

/// Echelonized span with pivots on the largest path rank present; ranks
/// order paths by length then lexicographic arrow sequence, so longer paths
/// are eliminated first.
struct Echelon {
    rows: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    fn new() -> Self {
        Echelon {
            rows: BTreeMap::new(),
        }
    }

    /// Reduces `row` against the span; returns the remainder.
    fn reduce(&self, mut row: SparseRow) -> SparseRow {
        loop {
            let Some((&lead, _)) = row.iter().next_back() else {
                return row;
            };
            let Some(prow) = self.rows.get(&lead) else {
                return row;
            };
            let factor = row[&lead].clone() / prow[&lead].clone();
            for (k, v) in prow {
                let delta = &factor * v;
                let entry = row.entry(*k).or_insert_with(BigRational::zero);
                *entry -= delta;
                if entry.is_zero() {
                    row.remove(k);
                }
            }
        }
    }

    fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }
}

/// Echelonized basis data for a path algebra quotient.
pub struct PathBasis {
    paths: Vec<Path>,
    rank_of: BTreeMap<Path, usize>,
    echelon: Echelon,
    basis_ranks: Vec<usize>,
}

impl PathBasis {
    pub fn dimension(&self) -> usize {
        self.basis_ranks.len()
    }

    /// Basis paths grouped by `(source, target, length)`.
    pub fn paths_by_class(&self, q: &Quiver) -> BTreeMap<(usize, usize, usize), Vec<Path>> {
        let mut out: BTreeMap<(usize, usize, usize), Vec<Path>> = BTreeMap::new();
        for &r in &self.basis_ranks {
            let p = &self.paths[r];
            out.entry((p.source, p.target(q), p.len()))
                .or_default()
                .push(p.clone());
        }
        out
    }

    pub fn basis_paths(&self) -> Vec<&Path> {
        self.basis_ranks.iter().map(|&r| &self.paths[r]).collect()
    }

    /// Is the path's residue class nonzero in the quotient?
    pub fn path_survives(&self, path: &Path) -> bool {
        match self.rank_of.get(path) {
            Some(&r) => {
                let mut row = SparseRow::new();
                row.insert(r, BigRational::one());
                !self.echelon.contains(row)
            }
            // Paths beyond the truncation window are in the ideal.
            None => false,
        }
    }
}

/// Computes the quotient basis, verifying that every path of length
/// `nilpotency_bound` lies in the ideal generated by the relations.
pub fn quotient_basis(p: &AlgebraPresentation) -> Result<PathBasis, AlgebraError> {
    let q = &p.quiver;
    let max_rel_len = p
        .relations
        .iter()
        .flat_map(|r| r.terms.iter().map(|(_, a)| a.len()))
        .max()
        .unwrap_or(2);
    let window = p.nilpotency_bound + max_rel_len.max(2);
    let paths = enumerate_paths(q, window);
    if paths.len() > 500_000 {
        return Err(AlgebraError::TooManyPaths(paths.len()));
    }
    // Rank paths by (length, arrow sequence): pivots prefer longer paths.
    let mut order: Vec<usize> = (0..paths.len()).collect();
    order.sort_by_key(|&i| (paths[i].len(), paths[i].arrows.clone(), paths[i].source));
    let mut ranked = vec![Path::idempotent(0); paths.len()];
    let mut rank_of = BTreeMap::new();
    for (rank, &i) in order.iter().enumerate() {
        ranked[rank] = paths[i].clone();
        rank_of.insert(paths[i].clone(), rank);
    }
    let paths = ranked;

    // Seed the span with the relations and close under arrow multiplication.
    let mut echelon = Echelon::new();
    let mut worklist: Vec<SparseRow> = vec![];
    for rel in &p.relations {
        let mut row = SparseRow::new();
        for (c, arrows) in &rel.terms {
            let source = path_source(q, arrows).expect("validated in new()");
            let path = Path {
                arrows: arrows.clone(),
                source,
            };
            let rank = rank_of[&path];
            let entry = row.entry(rank).or_insert_with(BigRational::zero);
            *entry += BigRational::from_integer(c.clone());
            if entry.is_zero() {
                row.remove(&rank);
            }
        }
        worklist.push(row);
    }
    while let Some(row) = worklist.pop() {
        let rem = echelon.reduce(row);
        if rem.is_empty() {
            continue;
        }
        // Multiply by every arrow on both sides before inserting; products
        // sticking out of the window are dropped, which is sound within the
        // verified truncation.
        for (side_left, _) in [(true, ()), (false, ())] {
            for (a_idx, arrow) in q.arrows().iter().enumerate() {
                let mut prod = SparseRow::new();
                for (&rank, c) in &rem {
                    let base = &paths[rank];
                    let new_path = if side_left {
                        if base.target(q) != arrow.src {
                            continue;
                        }
                        let mut arrows = vec![a_idx];
                        arrows.extend(&base.arrows);
                        Path {
                            arrows,
                            source: base.source,
                        }
                    } else {
                        if arrow.tgt != base.source {
                            continue;
                        }
                        let mut arrows = base.arrows.clone();
                        arrows.push(a_idx);
                        Path {
                            arrows,
                            source: arrow.src,
                        }
                    };
                    if new_path.len() >= window {
                        continue;
                    }
                    let rank = rank_of[&new_path];
                    let entry = prod.entry(rank).or_insert_with(BigRational::zero);
                    *entry += c;
                    if entry.is_zero() {
                        prod.remove(&rank);
                    }
                }
                if !prod.is_empty() {
                    worklist.push(prod);
                }
            }
        }
        echelon.rows.insert(*rem.keys().next_back().unwrap(), rem);
    }

    // Admissibility: every path of length in [bound, window) must reduce
    // to zero.
    for (rank, path) in paths.iter().enumerate() {
        if path.len() >= p.nilpotency_bound {
            let mut row = SparseRow::new();
            row.insert(rank, BigRational::one());
            if !echelon.contains(row) {
                return Err(AlgebraError::NotAdmissible {
                    bound: p.nilpotency_bound,
                    witness: path.render(q),
                });
            }
        }
    }

    let basis_ranks: Vec<usize> = (0..paths.len())
        .filter(|r| !echelon.rows.contains_key(r) && paths[*r].len() < p.nilpotency_bound)
        .collect();
    Ok(PathBasis {
        paths,
        rank_of,
        echelon,
        basis_ranks,
    })
}

/// One violated special-biserial condition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BiserialViolation {
    /// More than two arrows out of the node.
    OutDegree { node: String },
    /// More than two arrows into the node.
    InDegree { node: String },
    /// More than one arrow continues `arrow` on the left (condition on
    /// products `arrow * beta`).
    ForwardBranch {
        arrow: String,
        continuations: Vec<String>,
    },
    /// More than one arrow continues `arrow` on the right (products
    /// `beta * arrow`).
    BackwardBranch {
        arrow: String,
        continuations: Vec<String>,
    },
}

/// Special-biserial check: arrow-count conditions at every node and the
/// at-most-one-surviving-composition conditions at every arrow, decided on
/// the echelonized quotient.
pub fn is_special_biserial(
    p: &AlgebraPresentation,
) -> Result<(bool, Vec<BiserialViolation>), AlgebraError> {
    let basis = quotient_basis(p)?;
    let q = &p.quiver;
    let mut violations = vec![];
    for node in 0..q.node_count() {
        if q.out_degree(node) > 2 {
            violations.push(BiserialViolation::OutDegree {
                node: q.node_label(node).to_string(),
            });
        }
        if q.in_degree(node) > 2 {
            violations.push(BiserialViolation::InDegree {
                node: q.node_label(node).to_string(),
            });
        }
    }
    for (ai, a) in q.arrows().iter().enumerate() {
        // Forward: beta applied first, alpha after (products alpha*beta).
        let mut forward = vec![];
        let mut backward = vec![];
        for (bi, b) in q.arrows().iter().enumerate() {
            if b.tgt == a.src {
                let path = Path {
                    arrows: vec![ai, bi],
                    source: b.src,
                };
                if basis.path_survives(&path) {
                    forward.push(b.name.clone());
                }
            }
            if a.tgt == b.src {
                let path = Path {
                    arrows: vec![bi, ai],
                    source: a.src,
                };
                if basis.path_survives(&path) {
                    backward.push(b.name.clone());
                }
            }
        }
        if forward.len() > 1 {
            violations.push(BiserialViolation::ForwardBranch {
                arrow: a.name.clone(),
                continuations: forward,
            });
        }
        if backward.len() > 1 {
            violations.push(BiserialViolation::BackwardBranch {
                arrow: a.name.clone(),
                continuations: backward,
            });
        }
    }
    Ok((violations.is_empty(), violations))
}

/// String algebras are special biserial with purely monomial relations.
pub fn is_string_algebra(p: &AlgebraPresentation) -> Result<bool, AlgebraError> {
    let monomial = p.relations.iter().all(|r| r.terms.len() == 1);
    if !monomial {
        return Ok(false);
    }
    Ok(is_special_biserial(p)?.0)
}
