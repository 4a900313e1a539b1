//! The v-deformed combinatorial Fock space on bipartitions.
//!
//! Basis vectors are bipartitions; coefficients live in `Z[v, v^-1]`. The
//! operator `f_i` adds one box of residue `i` with exponent given by the
//! number of addable minus removable i-nodes strictly below the new box;
//! `e_i` removes one box with minus the mirror count above. Together with
//! the signature reading order in [`crate::crystal`] this is the unique
//! convention reproducing the printed canonical-basis expansions used as
//! fixtures, and it satisfies the quantum-group commutation relations,
//! which the tests check numerically.
//!
//! Canonical basis elements are computed LLT-style: a bar-invariant first
//! approximation is obtained by applying divided powers `f_i^(m)` along a
//! crystal path of `mu` to the empty bipartition, and multiples of earlier
//! canonical basis elements are subtracted until every non-leading
//! coefficient lies in `v Z[v]`.

use crate::crystal::{self, CrystalConfig};
use crate::exactpoly::LaurentPoly;
use crate::partitions::{bipartitions_of, sort_by_dominance, Bipartition, Node};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FockError {
    #[error("{0} is not a Kleshchev bipartition for this configuration")]
    NotKleshchev(Bipartition),
    #[error("division by the quantum factorial [{m}]! is not exact")]
    NonIntegralQuotient { m: u64 },
    #[error("canonical basis elimination failed to reach unitriangular form at {0}")]
    EliminationFailed(Bipartition),
}

/// Finitely supported vector in the Fock space; all bipartitions in the
/// support have equal size and no zero polynomial is stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FockVector {
    support: BTreeMap<Bipartition, LaurentPoly>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    pub fn unit(lam: Bipartition) -> Self {
        let mut support = BTreeMap::new();
        support.insert(lam, LaurentPoly::one());
        FockVector { support }
    }

    pub fn vacuum() -> Self {
        Self::unit(Bipartition::empty())
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn coeff(&self, lam: &Bipartition) -> LaurentPoly {
        self.support.get(lam).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = (&Bipartition, &LaurentPoly)> {
        self.support.iter()
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn add_term(&mut self, lam: Bipartition, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        debug_assert!(
            self.support
                .keys()
                .next()
                .is_none_or(|k| k.size() == lam.size()),
            "mixed grading in Fock vector"
        );
        let entry = self.support.entry(lam.clone()).or_default();
        *entry = &*entry + c;
        if entry.is_zero() {
            self.support.remove(&lam);
        }
    }

    pub fn sub_scaled(&mut self, other: &FockVector, scale: &LaurentPoly) {
        for (lam, c) in &other.support {
            let prod = c * scale;
            let neg = -&prod;
            self.add_term(lam.clone(), &neg);
        }
    }

}

fn count_below(lam: &Bipartition, node: &Node, i: u32, cfg: &CrystalConfig) -> i64 {
    let mut n = 0i64;
    for a in lam.addable_nodes() {
        if cfg.residue_of(&a) == i && a.is_below(node) {
            n += 1;
        }
    }
    for r in lam.removable_nodes() {
        if cfg.residue_of(&r) == i && r.is_below(node) {
            n -= 1;
        }
    }
    n
}

fn count_above(lam: &Bipartition, node: &Node, i: u32, cfg: &CrystalConfig) -> i64 {
    let mut n = 0i64;
    for a in lam.addable_nodes() {
        if cfg.residue_of(&a) == i && node.is_below(&a) {
            n += 1;
        }
    }
    for r in lam.removable_nodes() {
        if cfg.residue_of(&r) == i && node.is_below(&r) {
            n -= 1;
        }
    }
    n
}

/// The lowering operator `f_i` extended linearly.
pub fn apply_f(x: &FockVector, i: u32, cfg: &CrystalConfig) -> FockVector {
    let mut out = FockVector::zero();
    for (lam, c) in x.support() {
        for node in lam.addable_nodes() {
            if cfg.residue_of(&node) != i {
                continue;
            }
            let exp = count_below(lam, &node, i, cfg);
            let coeff = c * &LaurentPoly::v_power(exp);
            out.add_term(lam.with_node_added(node), &coeff);
        }
    }
    out
}

/// The raising operator `e_i` extended linearly.
pub fn apply_e(x: &FockVector, i: u32, cfg: &CrystalConfig) -> FockVector {
    let mut out = FockVector::zero();
    for (lam, c) in x.support() {
        for node in lam.removable_nodes() {
            if cfg.residue_of(&node) != i {
                continue;
            }
            let exp = -count_above(lam, &node, i, cfg);
            let coeff = c * &LaurentPoly::v_power(exp);
            out.add_term(lam.with_node_removed(node), &coeff);
        }
    }
    out
}

/// Weight count `N_i`: addable minus removable i-nodes; `t_i` acts on the
/// basis vector `lam` by `v^{N_i(lam)}`.
pub fn weight_count(lam: &Bipartition, i: u32, cfg: &CrystalConfig) -> i64 {
    let mut n = 0i64;
    for a in lam.addable_nodes() {
        if cfg.residue_of(&a) == i {
            n += 1;
        }
    }
    for r in lam.removable_nodes() {
        if cfg.residue_of(&r) == i {
            n -= 1;
        }
    }
    n
}

/// Divided power `f_i^(m) = f_i^m / [m]!` with exact division; a failed
/// division signals a convention bug rather than a user error.
pub fn divided_f(
    x: &FockVector,
    i: u32,
    m: u64,
    cfg: &CrystalConfig,
) -> Result<FockVector, FockError> {
    let mut cur = x.clone();
    for _ in 0..m {
        cur = apply_f(&cur, i, cfg);
    }
    if m <= 1 {
        return Ok(cur);
    }
    let fact = LaurentPoly::quantum_factorial(m);
    let mut support = BTreeMap::new();
    for (lam, c) in cur.support() {
        let q = c
            .exact_div(&fact)
            .map_err(|_| FockError::NonIntegralQuotient { m })?;
        if !q.is_zero() {
            support.insert(lam.clone(), q);
        }
    }
    Ok(FockVector { support })
}

/// One factor of a divided-power monomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MonomialFactor {
    pub residue: u32,
    pub power: u64,
}

/// Applies `f_{i_1}^{(m_1)} ... f_{i_k}^{(m_k)}` to the vacuum, rightmost
/// factor first (factors are listed leftmost first, as written).
pub fn monomial_on_vacuum(
    factors: &[MonomialFactor],
    cfg: &CrystalConfig,
) -> Result<FockVector, FockError> {
    let mut x = FockVector::vacuum();
    for factor in factors.iter().rev() {
        x = divided_f(&x, factor.residue, factor.power, cfg)?;
    }
    Ok(x)
}

/// A canonical basis element: bar-invariant, with coefficient 1 on `mu` and
/// all other coefficients in `v Z[v]`, supported on bipartitions dominating
/// `mu`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CanonicalBasisElement {
    pub mu: Bipartition,
    pub expansion: FockVector,
}

/// Which good residue to exhaust first when peeling a crystal path. The
/// canonical basis is independent of this choice, which the tests use as
/// the well-definedness (bar-invariance) check.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum PathRule {
    #[default]
    LargestResidue,
    SmallestResidue,
}

/// Grouped crystal path of `mu`: peel with the first available residue in
/// the rule's order, exhausting it before moving on, so equal consecutive
/// residues become one divided power.
fn grouped_path(
    mu: &Bipartition,
    cfg: &CrystalConfig,
    rule: PathRule,
) -> Result<Vec<MonomialFactor>, FockError> {
    let mut cur = mu.clone();
    // Peeling removes the most recently added boxes first, so the peel
    // order lists monomial factors leftmost first.
    let mut factors: Vec<MonomialFactor> = vec![];
    'outer: while cur != Bipartition::empty() {
        let order: Vec<u32> = match rule {
            PathRule::LargestResidue => (0..cfg.e()).rev().collect(),
            PathRule::SmallestResidue => (0..cfg.e()).collect(),
        };
        for i in order {
            let eps = crystal::epsilon(&cur, i, cfg);
            if eps > 0 {
                for _ in 0..eps {
                    cur = crystal::e_tilde(&cur, i, cfg).expect("epsilon counted a removal");
                }
                factors.push(MonomialFactor {
                    residue: i,
                    power: eps as u64,
                });
                continue 'outer;
            }
        }
        return Err(FockError::NotKleshchev(mu.clone()));
    }
    Ok(factors)
}

/// Computes canonical basis elements for all Kleshchev bipartitions of one
/// size, memoizing across the dominance recursion.
pub struct CanonicalBasis<'a> {
    cfg: &'a CrystalConfig,
    rule: PathRule,
    cache: BTreeMap<Bipartition, FockVector>,
}

impl<'a> CanonicalBasis<'a> {
    pub fn new(cfg: &'a CrystalConfig) -> Self {
        Self::with_rule(cfg, PathRule::default())
    }

    pub fn with_rule(cfg: &'a CrystalConfig, rule: PathRule) -> Self {
        CanonicalBasis {
            cfg,
            rule,
            cache: BTreeMap::new(),
        }
    }

    pub fn config(&self) -> &CrystalConfig {
        self.cfg
    }

    /// The expansion of `G(mu)` in the standard basis.
    pub fn element(&mut self, mu: &Bipartition) -> Result<CanonicalBasisElement, FockError> {
        let expansion = self.expansion(mu)?;
        Ok(CanonicalBasisElement {
            mu: mu.clone(),
            expansion,
        })
    }

    fn expansion(&mut self, mu: &Bipartition) -> Result<FockVector, FockError> {
        if let Some(hit) = self.cache.get(mu) {
            return Ok(hit.clone());
        }
        if !crystal::is_kleshchev(mu, self.cfg) {
            return Err(FockError::NotKleshchev(mu.clone()));
        }
        let path = grouped_path(mu, self.cfg, self.rule)?;
        let mut a = monomial_on_vacuum(&path, self.cfg)?;

        // Subtract earlier canonical basis elements, walking the support in
        // increasing dominance-compatible order; a correction at nu only
        // touches coefficients at bipartitions dominating nu, so one pass
        // suffices.
        let mut candidates: Vec<Bipartition> = a
            .support()
            .map(|(lam, _)| lam.clone())
            .filter(|lam| lam != mu)
            .collect();
        sort_by_dominance(&mut candidates);
        for nu in candidates {
            let c = a.coeff(&nu);
            if c.is_zero() || c.in_v_times_zv() {
                continue;
            }
            if !crystal::is_kleshchev(&nu, self.cfg) {
                return Err(FockError::EliminationFailed(mu.clone()));
            }
            let correction = c.bar_symmetric_excess();
            let g_nu = self.expansion(&nu)?;
            a.sub_scaled(&g_nu, &correction);
        }

        if a.coeff(mu) != LaurentPoly::one() {
            return Err(FockError::EliminationFailed(mu.clone()));
        }
        for (lam, c) in a.support() {
            if lam != mu && !c.in_v_times_zv() {
                return Err(FockError::EliminationFailed(mu.clone()));
            }
        }
        self.cache.insert(mu.clone(), a.clone());
        Ok(a)
    }
}

/// Convenience wrapper computing a single canonical basis element.
pub fn canonical_basis(
    mu: &Bipartition,
    cfg: &CrystalConfig,
) -> Result<CanonicalBasisElement, FockError> {
    CanonicalBasis::new(cfg).element(mu)
}

/// The bar-invariant first approximation: the divided-power monomial along
/// the default grouped crystal path of `mu`. When this already equals
/// `G(mu)`, the column is a pure monomial, which certifies that its
/// decomposition numbers do not depend on the characteristic.
pub fn first_approximation(mu: &Bipartition, cfg: &CrystalConfig) -> Result<FockVector, FockError> {
    let path = grouped_path(mu, cfg, PathRule::default())?;
    monomial_on_vacuum(&path, cfg)
}

/// A decomposition matrix: rows are all bipartitions of `n`, columns the
/// Kleshchev ones, both in the dominance-refining display order; `entries`
/// are the values at `v = 1` and `polys` the graded versions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecompositionMatrix {
    pub rows: Vec<Bipartition>,
    pub cols: Vec<Bipartition>,
    pub entries: Vec<Vec<BigInt>>,
    pub polys: Vec<Vec<LaurentPoly>>,
}

impl DecompositionMatrix {
    pub fn entry(&self, row: &Bipartition, col: &Bipartition) -> Option<&BigInt> {
        let r = self.rows.iter().position(|x| x == row)?;
        let c = self.cols.iter().position(|x| x == col)?;
        Some(&self.entries[r][c])
    }

    /// Restricts to the rows and columns whose residue contents equal those
    /// of `member`, i.e. the block containing it.
    pub fn block_of(&self, member: &Bipartition, cfg: &CrystalConfig) -> DecompositionMatrix {
        let want = member.content_multiset(cfg.e(), cfg.f());
        let row_idx: Vec<usize> = self
            .rows
            .iter()
            .enumerate()
            .filter(|(_, l)| l.content_multiset(cfg.e(), cfg.f()) == want)
            .map(|(i, _)| i)
            .collect();
        let col_idx: Vec<usize> = self
            .cols
            .iter()
            .enumerate()
            .filter(|(_, l)| l.content_multiset(cfg.e(), cfg.f()) == want)
            .map(|(i, _)| i)
            .collect();
        DecompositionMatrix {
            rows: row_idx.iter().map(|&i| self.rows[i].clone()).collect(),
            cols: col_idx.iter().map(|&j| self.cols[j].clone()).collect(),
            entries: row_idx
                .iter()
                .map(|&i| {
                    col_idx
                        .iter()
                        .map(|&j| self.entries[i][j].clone())
                        .collect()
                })
                .collect(),
            polys: row_idx
                .iter()
                .map(|&i| col_idx.iter().map(|&j| self.polys[i][j].clone()).collect())
                .collect(),
        }
    }
}

/// Full decomposition matrix at size `n`: entry `(lam, mu)` is the value at
/// `v = 1` of the coefficient of `lam` in `G(mu)`. The columns are exactly
/// the crystal layer at `n`.
pub fn decomposition_matrix(n: u64, cfg: &CrystalConfig) -> Result<DecompositionMatrix, FockError> {
    let mut rows = bipartitions_of(n);
    sort_by_dominance(&mut rows);
    let mut cols: Vec<Bipartition> = crystal::crystal_layer(n, cfg).into_iter().collect();
    sort_by_dominance(&mut cols);

    let mut basis = CanonicalBasis::new(cfg);
    let mut entries = vec![vec![BigInt::zero(); cols.len()]; rows.len()];
    let mut polys = vec![vec![LaurentPoly::zero(); cols.len()]; rows.len()];
    for (j, mu) in cols.iter().enumerate() {
        let g = basis.expansion(mu)?;
        for (i, lam) in rows.iter().enumerate() {
            let c = g.coeff(lam);
            entries[i][j] = c.eval_one();
            polys[i][j] = c;
        }
    }
    Ok(DecompositionMatrix {
        rows,
        cols,
        entries,
        polys,
    })
}
