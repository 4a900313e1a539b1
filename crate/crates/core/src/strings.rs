//! String combinatorics over a string algebra: updown diagrams, the
//! Auslander-Reiten translate on string modules, dimension orbits, and
//! complexity estimation from resolution growth.
//!
//! A word is a left-to-right list of letters, each an arrow drawn to the
//! southwest or southeast; all arrows point downward, so a southwest letter
//! at position `k` is an arrow from vertex `k+1` down to vertex `k` and a
//! southeast letter runs from vertex `k` down to `k+1`. Maximal
//! same-direction runs must compose to monomials outside the ideal, and the
//! two arrows meeting at any peak or deep must differ. `M(C)` has dimension
//! `letters + 1`.
//!
//! The translate follows the four hook-surgery cases, with "as large as
//! possible" hooks grown greedily; the stated peak properties of each case
//! disambiguate the attachment arrow in the degenerate situations (empty
//! words) where two choices extend validly.

use crate::pathalg::{quotient_basis, AlgebraError, AlgebraPresentation};
use crate::quiver::Quiver;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StringError {
    #[error("the presentation is not a string algebra")]
    NotStringAlgebra,
    #[error("algebra error: {0}")]
    Algebra(#[from] AlgebraError),
    #[error("not a valid string: {0}")]
    InvalidString(String),
    #[error("the translate is undefined on projectives and the arrow-quotient uniserials")]
    ExcludedModule,
    #[error("hook surgery did not produce a unique string (structure outside the four cases)")]
    SurgeryFailed,
    #[error("need at least {need} dimension samples, got {got}")]
    TooFewPoints { need: usize, got: usize },
    #[error("cannot parse string literal `{0}`")]
    Parse(String),
}

/// Drawing direction of one letter.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Dir {
    /// Arrow from the upper-right vertex down to the lower-left one.
    Southwest,
    /// Arrow from the upper-left vertex down to the lower-right one.
    Southeast,
}

impl Dir {
    fn flip(self) -> Dir {
        match self {
            Dir::Southwest => Dir::Southeast,
            Dir::Southeast => Dir::Southwest,
        }
    }
}

/// An updown word over a fixed algebra; `base_node` is the quiver node of
/// the leftmost vertex (needed when there are no letters).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct StringWord {
    pub base_node: usize,
    pub letters: Vec<(usize, Dir)>,
}

impl StringWord {
    pub fn empty(node: usize) -> Self {
        StringWord {
            base_node: node,
            letters: vec![],
        }
    }

    /// Dimension of the string module: vertices of the diagram.
    pub fn dim(&self) -> u64 {
        self.letters.len() as u64 + 1
    }

    /// Node of each diagram vertex, or an inconsistency report.
    pub fn vertex_nodes(&self, q: &Quiver) -> Result<Vec<usize>, StringError> {
        let mut nodes = vec![self.base_node];
        for &(arrow, dir) in &self.letters {
            let a = &q.arrows()[arrow];
            let prev = *nodes.last().unwrap();
            let next = match dir {
                // v_{k+1} -> v_k: the left vertex is the target.
                Dir::Southwest => {
                    if a.tgt != prev {
                        return Err(StringError::InvalidString(format!(
                            "arrow `{}` does not end at node `{}`",
                            a.name,
                            q.node_label(prev)
                        )));
                    }
                    a.src
                }
                // v_k -> v_{k+1}: the left vertex is the source.
                Dir::Southeast => {
                    if a.src != prev {
                        return Err(StringError::InvalidString(format!(
                            "arrow `{}` does not start at node `{}`",
                            a.name,
                            q.node_label(prev)
                        )));
                    }
                    a.tgt
                }
            };
            nodes.push(next);
        }
        Ok(nodes)
    }

    /// Mirror image: the same module read right-to-left.
    pub fn reversed(&self, q: &Quiver) -> StringWord {
        let nodes = self.vertex_nodes(q).expect("reversal of a consistent word");
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|&(a, d)| (a, d.flip()))
            .collect();
        StringWord {
            base_node: *nodes.last().unwrap(),
            letters,
        }
    }

    /// Reversal-invariant normal form: the lexicographically smaller of the
    /// word and its mirror image.
    pub fn canonical(&self, q: &Quiver) -> StringWord {
        let rev = self.reversed(q);
        if rev < *self {
            rev
        } else {
            self.clone()
        }
    }

    pub fn render(&self, q: &Quiver) -> String {
        if self.letters.is_empty() {
            return format!("@{}", q.node_label(self.base_node));
        }
        self.letters
            .iter()
            .map(|&(a, d)| {
                let mark = if d == Dir::Southwest { '<' } else { '>' };
                format!("{mark}{}", q.arrows()[a].name)
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses the `<arrow` / `>arrow` literal; `@node` is the empty word.
    pub fn parse(text: &str, q: &Quiver) -> Result<StringWord, StringError> {
        let text = text.trim();
        if let Some(node) = text.strip_prefix('@') {
            let node = q
                .node_index(node.trim())
                .ok_or_else(|| StringError::Parse(text.to_string()))?;
            return Ok(StringWord::empty(node));
        }
        let mut letters = vec![];
        for tok in text.split_whitespace() {
            let (dir, name) = match tok.split_at(1) {
                ("<", name) => (Dir::Southwest, name),
                (">", name) => (Dir::Southeast, name),
                _ => return Err(StringError::Parse(tok.to_string())),
            };
            let (idx, _) = q
                .arrow_by_name(name)
                .ok_or_else(|| StringError::Parse(tok.to_string()))?;
            letters.push((idx, dir));
        }
        if letters.is_empty() {
            return Err(StringError::Parse(text.to_string()));
        }
        // The base node is forced by the first letter.
        let (a0, d0) = letters[0];
        let base_node = match d0 {
            Dir::Southwest => q.arrows()[a0].tgt,
            Dir::Southeast => q.arrows()[a0].src,
        };
        Ok(StringWord { base_node, letters })
    }
}

/// A string algebra with the derived data the word combinatorics needs:
/// the monomial ideal generators and the excluded words (projective strings
/// and arrow-quotient uniserials).
pub struct StringAlgebra {
    pub presentation: AlgebraPresentation,
    monomials: Vec<Vec<usize>>,
    excluded: BTreeSet<StringWord>,
}

impl StringAlgebra {
    pub fn new(presentation: AlgebraPresentation) -> Result<Self, StringError> {
        if !crate::pathalg::is_string_algebra(&presentation)? {
            return Err(StringError::NotStringAlgebra);
        }
        // Sanity: the presented basis must exist (admissibility witnessed).
        quotient_basis(&presentation)?;
        let monomials: Vec<Vec<usize>> = presentation
            .relations
            .iter()
            .map(|r| r.terms[0].1.clone())
            .collect();
        let mut alg = StringAlgebra {
            presentation,
            monomials,
            excluded: BTreeSet::new(),
        };
        alg.excluded = alg.excluded_words();
        Ok(alg)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.presentation.quiver
    }

    /// Monomial ideal membership: a path is in the ideal iff some relation
    /// monomial occurs as a consecutive factor.
    fn path_in_ideal(&self, arrows: &[usize]) -> bool {
        self.monomials
            .iter()
            .any(|m| arrows.len() >= m.len() && arrows.windows(m.len()).any(|w| w == m.as_slice()))
    }

    /// Maximal direct path starting with `arrow`, in function order (the
    /// starting arrow is rightmost); unique by the string conditions.
    fn maximal_path_from(&self, arrow: usize) -> Vec<usize> {
        let q = self.quiver();
        let mut word = vec![arrow];
        loop {
            let head = word[0];
            let next = (0..q.arrows().len()).find(|&g| {
                q.arrows()[g].src == q.arrows()[head].tgt && {
                    let mut cand = vec![g];
                    cand.extend(&word);
                    !self.path_in_ideal(&cand)
                }
            });
            match next {
                Some(g) => word.insert(0, g),
                None => return word,
            }
        }
    }

    /// Words whose modules the translate excludes: every indecomposable
    /// projective and every quotient of one by the submodule an arrow
    /// generates.
    fn excluded_words(&self) -> BTreeSet<StringWord> {
        let q = self.quiver();
        let mut out = BTreeSet::new();
        let branch_letters_sw = |path: &[usize]| -> Vec<(usize, Dir)> {
            // Function-order path [a_k, ..., a_1]: the sw-run lists the
            // application order reversed, which is exactly this slice.
            path.iter().map(|&a| (a, Dir::Southwest)).collect()
        };
        let branch_letters_se = |path: &[usize]| -> Vec<(usize, Dir)> {
            path.iter().rev().map(|&a| (a, Dir::Southeast)).collect()
        };
        for node in 0..q.node_count() {
            let outs: Vec<usize> = (0..q.arrows().len())
                .filter(|&a| q.arrows()[a].src == node)
                .collect();
            let branch: Vec<Vec<usize>> = outs.iter().map(|&a| self.maximal_path_from(a)).collect();
            // The projective at `node`.
            let proj = match branch.as_slice() {
                [] => StringWord::empty(node),
                [a] => StringWord {
                    base_node: q.arrows()[a[0]].tgt,
                    letters: branch_letters_sw(a),
                },
                [a, b] => {
                    let mut letters = branch_letters_sw(a);
                    letters.extend(branch_letters_se(b));
                    StringWord {
                        base_node: q.arrows()[a[0]].tgt,
                        letters,
                    }
                }
                _ => unreachable!("string algebras have out-degree at most 2"),
            };
            out.insert(proj.canonical(q));
            // The arrow quotients M_alpha: drop one branch.
            for (k, _) in outs.iter().enumerate() {
                let word = if branch.len() == 1 {
                    StringWord::empty(node)
                } else {
                    let other = &branch[1 - k];
                    StringWord {
                        base_node: q.arrows()[other[0]].tgt,
                        letters: branch_letters_sw(other),
                    }
                };
                out.insert(word.canonical(q));
            }
        }
        out
    }

    /// Checks the three string conditions: runs compose to monomials
    /// outside the ideal, adjacent runs share endpoints, and peaks and
    /// deeps carry distinct arrows.
    pub fn validate(&self, c: &StringWord) -> Result<(), StringError> {
        let q = self.quiver();
        if c.base_node >= q.node_count() {
            return Err(StringError::InvalidString("unknown base node".into()));
        }
        c.vertex_nodes(q)?;
        // Peak/deep distinctness.
        for k in 1..c.letters.len() {
            let (a_prev, d_prev) = c.letters[k - 1];
            let (a_here, d_here) = c.letters[k];
            if d_prev != d_here && a_prev == a_here {
                return Err(StringError::InvalidString(format!(
                    "arrow `{}` meets itself at a turn",
                    q.arrows()[a_here].name
                )));
            }
        }
        // Run composites.
        let mut k = 0;
        while k < c.letters.len() {
            let dir = c.letters[k].1;
            let mut end = k;
            while end + 1 < c.letters.len() && c.letters[end + 1].1 == dir {
                end += 1;
            }
            let run: Vec<usize> = match dir {
                // letters[k..=end] is already the function-order word.
                Dir::Southwest => c.letters[k..=end].iter().map(|&(a, _)| a).collect(),
                Dir::Southeast => c.letters[k..=end].iter().rev().map(|&(a, _)| a).collect(),
            };
            if self.path_in_ideal(&run) {
                return Err(StringError::InvalidString(format!(
                    "run `{}` lies in the ideal",
                    run.iter()
                        .map(|&a| q.arrows()[a].name.clone())
                        .collect::<Vec<_>>()
                        .join("*")
                )));
            }
            k = end + 1;
        }
        Ok(())
    }

    pub fn is_valid(&self, c: &StringWord) -> bool {
        self.validate(c).is_ok()
    }

    /// Appends one letter at the right end.
    fn appended(&self, c: &StringWord, arrow: usize, dir: Dir) -> StringWord {
        let mut out = c.clone();
        out.letters.push((arrow, dir));
        out
    }

    /// Prepends one letter at the left end, fixing the base node: a
    /// southwest letter descends into the new leftmost vertex (the arrow's
    /// target), a southeast letter starts there (its source).
    fn prepended(&self, c: &StringWord, arrow: usize, dir: Dir) -> StringWord {
        let a = &self.quiver().arrows()[arrow];
        let base = match dir {
            Dir::Southwest => a.tgt,
            Dir::Southeast => a.src,
        };
        let mut letters = vec![(arrow, dir)];
        letters.extend(c.letters.iter().copied());
        StringWord {
            base_node: base,
            letters,
        }
    }

    fn valid_right_extensions(&self, c: &StringWord, dir: Dir) -> Vec<StringWord> {
        (0..self.quiver().arrows().len())
            .map(|a| self.appended(c, a, dir))
            .filter(|w| self.is_valid(w))
            .collect()
    }

    fn valid_left_extensions(&self, c: &StringWord, dir: Dir) -> Vec<StringWord> {
        (0..self.quiver().arrows().len())
            .map(|a| self.prepended(c, a, dir))
            .filter(|w| self.is_valid(w))
            .collect()
    }

    /// The four boundary flags: starts/ends on a peak, starts/ends in a
    /// deep. "Starts" refers to the right end of the diagram and "ends" to
    /// the left end; each flag holds when the corresponding one-letter
    /// extension always breaks stringhood.
    pub fn peak_deep_flags(&self, c: &StringWord) -> Result<PeakDeepFlags, StringError> {
        self.validate(c)?;
        Ok(PeakDeepFlags {
            starts_on_peak: self.valid_right_extensions(c, Dir::Southwest).is_empty(),
            ends_on_peak: self.valid_left_extensions(c, Dir::Southeast).is_empty(),
            starts_in_deep: self.valid_right_extensions(c, Dir::Southeast).is_empty(),
            ends_in_deep: self.valid_left_extensions(c, Dir::Southwest).is_empty(),
        })
    }

    /// Deletes the leading `[sw-run, se]` segment.
    fn delete_left_hook(&self, c: &StringWord) -> Result<StringWord, StringError> {
        let q = self.quiver();
        let nodes = c.vertex_nodes(q)?;
        let mut a = 0;
        while a < c.letters.len() && c.letters[a].1 == Dir::Southwest {
            a += 1;
        }
        if a >= c.letters.len() || c.letters[a].1 != Dir::Southeast {
            return Err(StringError::SurgeryFailed);
        }
        Ok(StringWord {
            base_node: nodes[a + 1],
            letters: c.letters[a + 1..].to_vec(),
        })
    }

    /// Deletes the trailing `[sw, se-run]` segment.
    fn delete_right_hook(&self, c: &StringWord) -> Result<StringWord, StringError> {
        let len = c.letters.len();
        let mut b = 0;
        while b < len && c.letters[len - 1 - b].1 == Dir::Southeast {
            b += 1;
        }
        if b >= len || c.letters[len - 1 - b].1 != Dir::Southwest {
            return Err(StringError::SurgeryFailed);
        }
        Ok(StringWord {
            base_node: c.base_node,
            letters: c.letters[..len - 1 - b].to_vec(),
        })
    }

    /// All maximal left hooks `[se^j, sw]` prepended to `c`.
    fn with_left_hooks(&self, c: &StringWord) -> Vec<StringWord> {
        let mut out = vec![];
        for base in self.valid_left_extensions(c, Dir::Southwest) {
            let mut cur = base;
            loop {
                let more = self.valid_left_extensions(&cur, Dir::Southeast);
                match more.as_slice() {
                    [] => break,
                    [next] => cur = next.clone(),
                    // Two valid continuations cannot happen over a string
                    // algebra; bail out and let the caller notice.
                    _ => break,
                }
            }
            out.push(cur);
        }
        out
    }

    /// All maximal right hooks `[se, sw^j]` appended to `c`.
    fn with_right_hooks(&self, c: &StringWord) -> Vec<StringWord> {
        let mut out = vec![];
        for base in self.valid_right_extensions(c, Dir::Southeast) {
            let mut cur = base;
            loop {
                let more = self.valid_right_extensions(&cur, Dir::Southwest);
                match more.as_slice() {
                    [] => break,
                    [next] => cur = next.clone(),
                    _ => break,
                }
            }
            out.push(cur);
        }
        out
    }

    /// The Auslander-Reiten translate of a string module, by the four-case
    /// hook surgery. Projectives and the arrow-quotient uniserials are
    /// rejected.
    pub fn ar_translate(&self, c: &StringWord) -> Result<StringWord, StringError> {
        let q = self.quiver();
        self.validate(c)?;
        if self.excluded.contains(&c.canonical(q)) {
            return Err(StringError::ExcludedModule);
        }
        let flags = self.peak_deep_flags(c)?;
        let (candidates, want): (Vec<StringWord>, (bool, bool)) =
            match (flags.starts_in_deep, flags.ends_in_deep) {
                (true, true) => {
                    let trimmed = self.delete_right_hook(&self.delete_left_hook(c)?)?;
                    (vec![trimmed], (false, false))
                }
                (true, false) => {
                    let trimmed = self.delete_right_hook(c)?;
                    (self.with_left_hooks(&trimmed), (false, true))
                }
                (false, true) => {
                    let trimmed = self.delete_left_hook(c)?;
                    (self.with_right_hooks(&trimmed), (true, false))
                }
                (false, false) => {
                    let mut out = vec![];
                    for right in self.with_right_hooks(c) {
                        out.extend(self.with_left_hooks(&right));
                    }
                    (out, (true, true))
                }
            };
        let mut survivors = BTreeSet::new();
        for cand in candidates {
            if !self.is_valid(&cand) {
                continue;
            }
            let f = self.peak_deep_flags(&cand)?;
            if (f.starts_on_peak, f.ends_on_peak) == want {
                survivors.insert(cand.canonical(q));
            }
        }
        match survivors.len() {
            1 => Ok(survivors.into_iter().next().unwrap()),
            _ => Err(StringError::SurgeryFailed),
        }
    }

    /// Dimensions of `c, tau c, ..., tau^k c`.
    pub fn dim_orbit(&self, c: &StringWord, k: usize) -> Result<Vec<u64>, StringError> {
        let mut dims = vec![c.dim()];
        let mut cur = c.clone();
        for _ in 0..k {
            cur = self.ar_translate(&cur)?;
            dims.push(cur.dim());
        }
        Ok(dims)
    }
}

/// Whether a word admits the four one-letter boundary extensions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PeakDeepFlags {
    pub starts_on_peak: bool,
    pub ends_on_peak: bool,
    pub starts_in_deep: bool,
    pub ends_in_deep: bool,
}

/// Least `s` such that the sampled projective-resolution dimensions fit
/// under `C (i+1)^(s-1)`: the samples come from translate orbits, and for
/// symmetric algebras the translate is the square of the syzygy operator,
/// so polynomial growth of degree `d` in the samples means complexity
/// `d + 1`. The degree is read off the growth between a late sample and a
/// parity-matched sample half as far in, compared exactly against
/// half-integer powers of the index ratio. Returns the estimate with a
/// note describing the fit.
pub fn complexity_estimate(dims: &[u64]) -> Result<(u32, String), StringError> {
    if dims.len() < 6 {
        return Err(StringError::TooFewPoints {
            need: 6,
            got: dims.len(),
        });
    }
    let mid = dims.len() / 2;
    if dims[mid..].iter().all(|&d| d == 0) {
        return Ok((0, "resolution dimensions vanish eventually".into()));
    }
    let i = (0..dims.len()).rev().find(|&k| dims[k] != 0).unwrap();
    // Parity-matched inner sample: translate orbits interleave two linear
    // branches, so compare within one phase.
    let mut j = i / 2;
    if j % 2 != i % 2 && j > 0 {
        j -= 1;
    }
    while dims[j] == 0 && j + 2 < i {
        j += 2;
    }
    if dims[j] == 0 || j == i {
        return Ok((
            1,
            format!("degenerate sample pattern over {} entries", dims.len()),
        ));
    }
    // Least d with dims[i]/dims[j] <= ((i+1)/(j+1))^(d + 1/2), exactly:
    // square both sides.
    let (di, dj) = (dims[i] as u128, dims[j] as u128);
    for d in 0u32..=4 {
        let lhs = di * di * ((j + 1) as u128).pow(2 * d + 1);
        let rhs = dj * dj * ((i + 1) as u128).pow(2 * d + 1);
        if lhs <= rhs {
            let note = format!(
                "growth exponent {d} between samples {j} and {i} of {}",
                dims.len()
            );
            return Ok((d + 1, note));
        }
    }
    Ok((
        6,
        format!("growth between samples {j} and {i} exceeds degree 4"),
    ))
}

impl fmt::Display for PeakDeepFlags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "starts_on_peak={} ends_on_peak={} starts_in_deep={} ends_in_deep={}",
            self.starts_on_peak, self.ends_on_peak, self.starts_in_deep, self.ends_in_deep
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pathalg::Relation;
    use num_bigint::BigInt;
    use num_traits::One;

    fn mono(q: &Quiver, names: &[&str]) -> Relation {
        let arrows = names
            .iter()
            .map(|n| q.arrow_by_name(n).unwrap().0)
            .collect();
        Relation {
            terms: vec![(BigInt::one(), arrows)],
        }
    }

    /// mu: 1->2, nu: 2->1, beta: loop on 2; relations nu*beta, beta*mu,
    /// beta^2, (mu*nu)^2, (nu*mu)^2.
    fn lambda() -> StringAlgebra {
        let mut q = Quiver::new();
        q.add_arrow("mu", "1", "2");
        q.add_arrow("nu", "2", "1");
        q.add_arrow("beta", "2", "2");
        let rels = vec![
            mono(&q, &["nu", "beta"]),
            mono(&q, &["beta", "mu"]),
            mono(&q, &["beta", "beta"]),
            mono(&q, &["mu", "nu", "mu", "nu"]),
            mono(&q, &["nu", "mu", "nu", "mu"]),
        ];
        let p = AlgebraPresentation::new(q, rels, 5).unwrap();
        StringAlgebra::new(p).unwrap()
    }

    /// Kronecker quiver path algebra: two arrows 1 -> 2, no relations.
    fn kronecker() -> StringAlgebra {
        let mut q = Quiver::new();
        q.add_arrow("x", "1", "2");
        q.add_arrow("y", "1", "2");
        let p = AlgebraPresentation::new(q, vec![], 2).unwrap();
        StringAlgebra::new(p).unwrap()
    }

    fn word(alg: &StringAlgebra, s: &str) -> StringWord {
        StringWord::parse(s, alg.quiver()).unwrap()
    }

    #[test]
    fn validation_examples() {
        let alg = lambda();
        assert!(alg.is_valid(&word(&alg, "<beta")));
        assert!(alg.is_valid(&word(&alg, "@2")));
        assert!(alg.is_valid(&word(&alg, "@1")));
        // nu*beta is a relation, so that run is forbidden.
        assert!(!alg.is_valid(&word(&alg, "<nu <beta")));
        // A turn with the same arrow on both sides is forbidden.
        assert!(!alg.is_valid(&word(&alg, "<mu >mu")));
        // Composability is enforced.
        assert!(!alg.is_valid(&word(&alg, "<mu <mu")));
    }

    #[test]
    fn parse_and_render_round_trip() {
        let alg = lambda();
        for s in ["<nu >beta <mu <nu <mu", "@2", "<beta", ">mu"] {
            let w = word(&alg, s);
            assert_eq!(w.render(alg.quiver()), s);
        }
        assert!(StringWord::parse("bogus", alg.quiver()).is_err());
    }

    #[test]
    fn flags_of_small_modules() {
        let alg = lambda();
        // The simple at node 2 extends in every direction.
        let s2 = word(&alg, "@2");
        let f = alg.peak_deep_flags(&s2).unwrap();
        assert!(!f.starts_in_deep && !f.ends_in_deep);
        assert!(!f.starts_on_peak && !f.ends_on_peak);
        // The projective at node 1 (maximal uniserial mu*nu*mu) starts and
        // ends in a deep.
        let p1 = word(&alg, "<mu <nu <mu");
        let f = alg.peak_deep_flags(&p1).unwrap();
        assert!(f.starts_in_deep && f.ends_in_deep);
    }

    #[test]
    fn translate_of_the_simple_matches_the_drawn_strings() {
        let alg = lambda();
        let s2 = word(&alg, "@2");
        let t1 = alg.ar_translate(&s2).unwrap();
        let expected = word(&alg, "<nu >beta <mu <nu <mu").canonical(alg.quiver());
        assert_eq!(t1, expected);
        assert_eq!(t1.dim(), 6);
        // The simple sits in no deep, so this is the both-hooks case whose
        // output starts and ends on a peak.
        let f = alg.peak_deep_flags(&t1).unwrap();
        assert!(f.starts_on_peak && f.ends_on_peak);

        // The translate of t1 deletes its right hook and regrows on the
        // left; the output fails exactly one peak flag (up to the mirror
        // symmetry of the normal form).
        let t2 = alg.ar_translate(&t1).unwrap();
        let expected2 = word(&alg, ">beta <mu <nu >beta <mu <nu").canonical(alg.quiver());
        assert_eq!(t2, expected2);
        assert_eq!(t2.dim(), 7);
        let f = alg.peak_deep_flags(&t2).unwrap();
        assert!(f.starts_on_peak != f.ends_on_peak);
    }

    #[test]
    fn dim_orbit_interleaves_the_two_linear_branches() {
        let alg = lambda();
        let s2 = word(&alg, "@2");
        let dims = alg.dim_orbit(&s2, 6).unwrap();
        assert_eq!(dims, vec![1, 6, 7, 12, 13, 18, 19]);
        // The closed form 6n+1 / 6n+6 holds along the longer orbit too.
        let dims = alg.dim_orbit(&s2, 21).unwrap();
        for (k, &d) in dims.iter().enumerate() {
            let n = (k / 2) as u64;
            let expected = if k % 2 == 0 { 6 * n + 1 } else { 6 * n + 6 };
            assert_eq!(d, expected, "step {k}");
        }
    }

    #[test]
    fn excluded_modules_are_rejected() {
        let alg = lambda();
        // The simple at node 1 is an arrow quotient; the projectives and
        // the other uniserial quotients are excluded too.
        for s in [
            "@1",
            "<mu <nu <mu",
            "<nu <mu <nu >beta",
            "<beta",
            "<nu <mu <nu",
        ] {
            let w = word(&alg, s);
            assert_eq!(
                alg.ar_translate(&w),
                Err(StringError::ExcludedModule),
                "{s}"
            );
        }
    }

    #[test]
    fn kronecker_orbits_grow_linearly() {
        let alg = kronecker();
        // The simple at the source is not projective (the sink is); its
        // orbit climbs the preprojective component.
        let s1 = word(&alg, "@1");
        let dims = alg.dim_orbit(&s1, 7).unwrap();
        assert_eq!(dims.len(), 8);
        for w in dims.windows(2) {
            assert!(w[1] > w[0]);
        }
        let (c, _) = complexity_estimate(&dims).unwrap();
        assert_eq!(c, 2, "linear growth");
        // The projective simple at the sink is excluded.
        assert_eq!(
            alg.ar_translate(&word(&alg, "@2")),
            Err(StringError::ExcludedModule)
        );
    }

    #[test]
    fn translate_case_flags_hold_along_orbits() {
        // Every computed translate satisfies the peak assertions of its
        // case; spot-check along the lambda orbit by re-deriving the case
        // from the input flags.
        let alg = lambda();
        let mut cur = word(&alg, "@2");
        for _ in 0..8 {
            let f_in = alg.peak_deep_flags(&cur).unwrap();
            let next = alg.ar_translate(&cur).unwrap();
            let f_out = alg.peak_deep_flags(&next).unwrap();
            let norm = |w: &StringWord, f: PeakDeepFlags| {
                if *w == w.canonical(alg.quiver()) {
                    f
                } else {
                    PeakDeepFlags {
                        starts_on_peak: f.ends_on_peak,
                        ends_on_peak: f.starts_on_peak,
                        starts_in_deep: f.ends_in_deep,
                        ends_in_deep: f.starts_in_deep,
                    }
                }
            };
            let f_out = norm(&next, f_out);
            let want = match (f_in.starts_in_deep, f_in.ends_in_deep) {
                (true, true) => (false, false),
                (true, false) => (false, true),
                (false, true) => (true, false),
                (false, false) => (true, true),
            };
            // Up to overall reversal of the output word.
            let got = (f_out.starts_on_peak, f_out.ends_on_peak);
            let got_rev = (f_out.ends_on_peak, f_out.starts_on_peak);
            assert!(got == want || got_rev == want);
            cur = next;
        }
    }

    #[test]
    fn complexity_estimates() {
        assert_eq!(
            complexity_estimate(&[1, 6, 7, 12, 13, 18, 19]).unwrap().0,
            2
        );
        assert_eq!(complexity_estimate(&[3, 3, 3, 3, 3, 3, 3]).unwrap().0, 1);
        assert_eq!(complexity_estimate(&[5, 3, 1, 0, 0, 0, 0]).unwrap().0, 0);
        assert_eq!(
            complexity_estimate(&[1, 2, 3]),
            Err(StringError::TooFewPoints { need: 6, got: 3 })
        );
        // Quadratic growth lands at 3.
        let quad: Vec<u64> = (0..10).map(|i| (i + 1) * (i + 1)).collect();
        assert_eq!(complexity_estimate(&quad).unwrap().0, 3);
    }

    #[test]
    fn non_string_algebra_is_rejected() {
        let mut q = Quiver::new();
        q.add_arrow("x", "1", "1");
        q.add_arrow("y", "1", "1");
        let rels = vec![Relation {
            terms: vec![(BigInt::one(), vec![0, 1]), (-BigInt::one(), vec![1, 0])],
        }];
        let rels = [rels, vec![mono(&q, &["x", "x"]), mono(&q, &["y", "y"])]].concat();
        let p = AlgebraPresentation::new(q, rels, 3).unwrap();
        assert_eq!(
            StringAlgebra::new(p).err(),
            Some(StringError::NotStringAlgebra)
        );
    }
}
