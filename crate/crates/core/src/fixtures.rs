//! The verification corpus: known decomposition matrices, canonical-basis
//! expansions, crystal graphs, and small algebra presentations that the
//! acceptance suite and the golden CLI tests check against. The corpus
//! digest is embedded in `--version` output so fixture drift is visible.

use crate::partitions::{Bipartition, Partition};
use crate::pathalg::{AlgebraPresentation, Relation};
use crate::quiver::Quiver;
use num_bigint::BigInt;
use num_traits::One;

fn bp(s: &str) -> Bipartition {
    s.parse().expect("fixture bipartition")
}

/// Edges of the crystal graph with highest weight `2 Lambda_0` (e = 2,
/// f = 0) up to size 3, as drawn.
pub const CRYSTAL_EDGES_E2_F0: &[(&str, u32, &str)] = &[
    ("[|]", 0, "[|1]"),
    ("[|1]", 0, "[1|1]"),
    ("[|1]", 1, "[|1,1]"),
    ("[1|1]", 1, "[1|1,1]"),
    ("[|1,1]", 1, "[|2,1]"),
    ("[|1,1]", 0, "[|1,1,1]"),
];

/// Edges of the crystal graph with highest weight `Lambda_0 + Lambda_1`
/// (e = 2, f = 1) up to size 3, as drawn.
pub const CRYSTAL_EDGES_E2_F1: &[(&str, u32, &str)] = &[
    ("[|]", 0, "[1|]"),
    ("[|]", 1, "[|1]"),
    ("[1|]", 1, "[1|1]"),
    ("[|1]", 0, "[|1,1]"),
    ("[1|1]", 1, "[1,1|1]"),
    ("[1|1]", 0, "[1|1,1]"),
    ("[|1,1]", 0, "[|2,1]"),
    ("[|1,1]", 1, "[|1,1,1]"),
];

/// A decomposition-matrix block: column labels, then rows as
/// `(label, entries)`. Entries are the values at `v = 1`.
pub struct DecompTable {
    pub n: u64,
    pub e: u32,
    pub f: u32,
    pub cols: &'static [&'static str],
    pub rows: &'static [(&'static str, &'static [i64])],
}

/// Principal block at n = e = 3 with f = 1: the 8 x 4 table.
pub const DECOMP_E3_F1_N3: DecompTable = DecompTable {
    n: 3,
    e: 3,
    f: 1,
    cols: &["[|1,1,1]", "[|2,1]", "[1|2]", "[1,1|1]"],
    rows: &[
        ("[|1,1,1]", &[1, 0, 0, 0]),
        ("[|2,1]", &[1, 1, 0, 0]),
        ("[|3]", &[0, 1, 0, 0]),
        ("[1|2]", &[1, 1, 1, 0]),
        ("[1,1|1]", &[1, 0, 1, 1]),
        ("[1,1,1|]", &[0, 0, 0, 1]),
        ("[2,1|]", &[0, 0, 1, 1]),
        ("[3|]", &[0, 0, 1, 0]),
    ],
};

/// The whole algebra at n = 2, e = 2, f = 1: one block, 5 x 2.
pub const DECOMP_E2_F1_N2: DecompTable = DecompTable {
    n: 2,
    e: 2,
    f: 1,
    cols: &["[|1,1]", "[1|1]"],
    rows: &[
        ("[|1,1]", &[1, 0]),
        ("[|2]", &[1, 0]),
        ("[1|1]", &[1, 1]),
        ("[1,1|]", &[0, 1]),
        ("[2|]", &[0, 1]),
    ],
};

/// The principal block at n = 3, e = 2, f = 0: 8 x 2.
pub const DECOMP_E2_F0_N3: DecompTable = DecompTable {
    n: 3,
    e: 2,
    f: 0,
    cols: &["[|1,1,1]", "[1|1,1]"],
    rows: &[
        ("[|1,1,1]", &[1, 0]),
        ("[|3]", &[1, 0]),
        ("[1|1,1]", &[1, 1]),
        ("[1|2]", &[1, 1]),
        ("[1,1|1]", &[1, 1]),
        ("[1,1,1|]", &[1, 0]),
        ("[2|1]", &[1, 1]),
        ("[3|]", &[1, 0]),
    ],
};

/// First block at n = 3, e = 2, f = 1: 5 x 2.
pub const DECOMP_E2_F1_N3_FIRST: DecompTable = DecompTable {
    n: 3,
    e: 2,
    f: 1,
    cols: &["[|2,1]", "[1|1,1]"],
    rows: &[
        ("[|2,1]", &[1, 0]),
        ("[1|1,1]", &[1, 1]),
        ("[1|2]", &[1, 1]),
        ("[1,1,1|]", &[0, 1]),
        ("[3|]", &[0, 1]),
    ],
};

/// Second block at n = 3, e = 2, f = 1: 5 x 2.
pub const DECOMP_E2_F1_N3_SECOND: DecompTable = DecompTable {
    n: 3,
    e: 2,
    f: 1,
    cols: &["[|1,1,1]", "[1,1|1]"],
    rows: &[
        ("[|1,1,1]", &[1, 0]),
        ("[|3]", &[1, 0]),
        ("[1,1|1]", &[1, 1]),
        ("[2|1]", &[1, 1]),
        ("[2,1|]", &[0, 1]),
    ],
};

pub const DECOMP_TABLES: &[&DecompTable] = &[
    &DECOMP_E3_F1_N3,
    &DECOMP_E2_F1_N2,
    &DECOMP_E2_F0_N3,
    &DECOMP_E2_F1_N3_FIRST,
    &DECOMP_E2_F1_N3_SECOND,
];

/// The weight-two six-Specht blocks at f = 0 and large e, as triples
/// `(lambda1, lambda2, lambda3)`; the block is completed by the sharps.
/// Two triples at size 7, six at size 8.
pub const WEIGHT2_BLOCK_TRIPLES: &[(&str, &str, &str)] = &[
    ("[1|3,3]", "[2|3,2]", "[3|2,2]"),
    ("[1|2,2,2]", "[1,1|2,2,1]", "[1,1,1|2,2]"),
    ("[1|4,3]", "[2|4,2]", "[2,2|4]"),
    ("[1|3,3,1]", "[2|3,2,1]", "[3|2,2,1]"),
    ("[1|3,2,2]", "[1,1|3,2,1]", "[1,1,1|3,2]"),
    ("[1|2,2,2,1]", "[1,1|2,2,1,1]", "[1,1,1,1|2,2]"),
    ("[2|2,2,2]", "[2,1|2,2,1]", "[2,1,1|2,2]"),
    ("[1,1|3,3]", "[2,1|3,2]", "[2,2|3,1]"),
];

/// The transposed block decomposition matrix shared by all weight-two
/// six-Specht blocks: rows `lambda1, lambda2` against columns
/// `lambda1, lambda2, lambda3, lambda3^s, lambda2^s, lambda1^s`.
pub const WEIGHT2_TRANSPOSED_BLOCK: [[i64; 6]; 2] = [[1, 1, 0, 0, 1, 1], [0, 1, 1, 1, 1, 0]];

/// Second components of the hook-family blocks with empty first component,
/// for sizes 4 through 8 (including the listed transposes); the shape is
/// `(j+1, i+2, 2^(k-1), 1^(l-k))` with `0 <= i < j` and `1 <= k <= l`.
pub const HOOK_FAMILY_SECOND_COMPONENTS: &[&[u32]] = &[
    // size 4
    &[2, 2],
    // size 5
    &[3, 2],
    &[2, 2, 1],
    // size 6
    &[4, 2],
    &[3, 3],
    &[3, 2, 1],
    &[2, 2, 2],
    &[2, 2, 1, 1],
    // size 7
    &[5, 2],
    &[4, 3],
    &[4, 2, 1],
    &[3, 3, 1],
    &[2, 2, 1, 1, 1],
    &[2, 2, 2, 1],
    &[3, 2, 1, 1],
    &[3, 2, 2],
    // size 8
    &[6, 2],
    &[5, 3],
    &[5, 2, 1],
    &[4, 4],
    &[4, 3, 1],
    &[4, 2, 2],
    &[4, 2, 1, 1],
    &[3, 3, 2],
    &[2, 2, 1, 1, 1, 1],
    &[2, 2, 2, 1, 1],
    &[3, 2, 1, 1, 1],
    &[2, 2, 2, 2],
    &[3, 2, 2, 1],
    &[3, 3, 1, 1],
];

/// The hook-family companions of `lambda1 = ([], shape)`: recovers
/// `(i, j, k, l)` from the shape and builds `lambda2` and `lambda3`.
pub fn hook_family_companions(shape: &Partition) -> Option<(Bipartition, Bipartition)> {
    let parts = shape.parts();
    if parts.len() < 2 || parts[1] < 2 {
        return None;
    }
    let j = parts[0] - 1;
    let i = parts[1] - 2;
    if i >= j {
        return None;
    }
    let k = parts.iter().filter(|&&p| p >= 2).count() - 1;
    let l = parts.len() - 1;
    if k < 1 || k > l {
        return None;
    }
    if parts[2..].iter().enumerate().any(|(idx, &p)| {
        let expected = if idx + 2 < k + 1 { 2 } else { 1 };
        p != expected
    }) {
        return None;
    }
    let hook = |arm: u32, leg: usize| -> Partition {
        let mut v = vec![arm];
        v.extend(std::iter::repeat_n(1, leg));
        Partition::new(v).expect("hook shape")
    };
    let lambda2 = Bipartition::new(hook(i + 1, k - 1), hook(j + 1, l));
    let lambda3 = Bipartition::new(hook(j + 1, k - 1), hook(i + 1, l));
    Some((lambda2, lambda3))
}

/// The shape parameters `(i, j, k, l)` of a hook-family second component.
pub fn hook_family_parameters(shape: &Partition) -> Option<(i64, i64, i64, i64)> {
    hook_family_companions(shape)?;
    let parts = shape.parts();
    let j = (parts[0] - 1) as i64;
    let i = (parts[1] - 2) as i64;
    let k = (parts.iter().filter(|&&p| p >= 2).count() - 1) as i64;
    let l = (parts.len() - 1) as i64;
    Some((i, j, k, l))
}

/// Divided-power monomial for the first column of a hook-family block, as
/// `(residue, power)` factors leftmost first.
pub fn hook_family_monomial_first(shape: &Partition) -> Option<Vec<(i64, u64)>> {
    let (i, j, k, l) = hook_family_parameters(shape)?;
    let mut factors: Vec<(i64, u64)> = vec![];
    factors.extend((-k + 1..=-1).map(|r| (r, 1)));
    factors.extend((0..=i).rev().map(|r| (r, 1)));
    factors.extend((-l..=-1).map(|r| (r, 1)));
    factors.extend((0..=j).rev().map(|r| (r, 1)));
    Some(factors)
}

/// Divided-power monomial for the second column of a hook-family block.
pub fn hook_family_monomial_second(shape: &Partition) -> Option<Vec<(i64, u64)>> {
    let (i, j, k, l) = hook_family_parameters(shape)?;
    let mut factors: Vec<(i64, u64)> = vec![];
    factors.extend((-l..=-k).map(|r| (r, 1)));
    factors.extend((i + 1..=j).rev().map(|r| (r, 1)));
    factors.extend((-k + 1..=-1).map(|r| (r, 2)));
    factors.extend((0..=i).rev().map(|r| (r, 2)));
    Some(factors)
}

/// One canonical-basis fixture: the label, then the expansion as pairs of
/// bipartition and coefficient strings.
pub struct GExpansion {
    pub mu: &'static str,
    pub terms: &'static [(&'static str, &'static str)],
}

/// The five printed expansions of the size-9 block at f = 0 and e > 9,
/// with the source text's typographical slips resolved against its own
/// monomial formulas (full sharp-symmetric eight-term patterns).
pub const RANK9_EXPANSIONS: &[GExpansion] = &[
    GExpansion {
        mu: "[|3,3,3]",
        terms: &[
            ("[|3,3,3]", "1"),
            ("[1|3,3,2]", "v"),
            ("[2,1|3,2,1]", "v"),
            ("[2,2|3,1,1]", "v^2"),
            ("[3,1,1|2,2]", "v"),
            ("[3,2,1|2,1]", "v^2"),
            ("[3,3,2|1]", "v^2"),
            ("[3,3,3|]", "v^3"),
        ],
    },
    GExpansion {
        mu: "[1|3,3,2]",
        terms: &[
            ("[1|3,3,2]", "1"),
            ("[1,1|3,3,1]", "v"),
            ("[2|3,2,2]", "v"),
            ("[2,1|3,2,1]", "v^2"),
            ("[3,2,1|2,1]", "v"),
            ("[3,2,2|2]", "v^2"),
            ("[3,3,1|1,1]", "v^2"),
            ("[3,3,2|1]", "v^3"),
        ],
    },
    GExpansion {
        mu: "[1,1|3,3,1]",
        terms: &[
            ("[1,1|3,3,1]", "1"),
            ("[1,1,1|3,3]", "v"),
            ("[2,1|3,2,1]", "v"),
            ("[2,1,1|3,2]", "v^2"),
            ("[3,2|2,1,1]", "v"),
            ("[3,2,1|2,1]", "v^2"),
            ("[3,3|1,1,1]", "v^2"),
            ("[3,3,1|1,1]", "v^3"),
        ],
    },
    GExpansion {
        mu: "[2|3,2,2]",
        terms: &[
            ("[2|3,2,2]", "1"),
            ("[2,1|3,2,1]", "v"),
            ("[2,2,1|3,1]", "v"),
            ("[2,2,2|3]", "v^2"),
            ("[3|2,2,2]", "v"),
            ("[3,1|2,2,1]", "v^2"),
            ("[3,2,1|2,1]", "v^2"),
            ("[3,2,2|2]", "v^3"),
        ],
    },
    GExpansion {
        mu: "[2,1|3,2,1]",
        terms: &[
            ("[2,1|3,2,1]", "1"),
            ("[2,1,1|3,2]", "v"),
            ("[2,2|3,1,1]", "v"),
            ("[2,2,1|3,1]", "v^2"),
            ("[3,1|2,2,1]", "v"),
            ("[3,1,1|2,2]", "v^2"),
            ("[3,2|2,1,1]", "v^2"),
            ("[3,2,1|2,1]", "v^3"),
        ],
    },
];

/// Divided-power monomials printed for the size-9 block (leftmost factor
/// first; residues taken modulo e). The third expansion's printed monomial
/// has a wrong subscript in the source and is omitted.
pub const RANK9_MONOMIALS: &[(&str, &[(i64, u64)])] = &[
    (
        "[|3,3,3]",
        &[
            (0, 1),
            (1, 1),
            (2, 1),
            (-1, 1),
            (0, 1),
            (1, 1),
            (-2, 1),
            (-1, 1),
            (0, 1),
        ],
    ),
    (
        "[1|3,3,2]",
        &[
            (1, 1),
            (2, 1),
            (-1, 1),
            (0, 1),
            (1, 1),
            (-2, 1),
            (-1, 1),
            (0, 2),
        ],
    ),
    (
        "[2|3,2,2]",
        &[(2, 1), (-1, 1), (0, 1), (-2, 1), (-1, 1), (1, 2), (0, 2)],
    ),
    (
        "[2,1|3,2,1]",
        &[(2, 1), (0, 1), (-2, 1), (1, 2), (-1, 2), (0, 2)],
    ),
];

/// The two size-7 weight-two monomials as printed.
pub const RANK7_MONOMIALS: &[(&str, &[(i64, u64)])] = &[
    (
        "[1|3,3]",
        &[(1, 1), (2, 1), (0, 1), (1, 1), (-1, 1), (0, 2)],
    ),
    ("[2|3,2]", &[(2, 1), (0, 1), (-1, 1), (1, 2), (0, 2)]),
];

/// Principal-block bipartitions at n = e: `lambda_k = ([], (k, 1^(e-k)))`.
pub fn principal_lambda_k(e: u32, k: u32) -> Bipartition {
    assert!((1..=e).contains(&k));
    let mut parts = vec![k];
    parts.extend(std::iter::repeat_n(1, (e - k) as usize));
    Bipartition::new(Partition::empty(), Partition::new(parts).unwrap())
}

/// `mu_k = ((k, 1^(e-k)), [])`.
pub fn principal_mu_k(e: u32, k: u32) -> Bipartition {
    principal_lambda_k(e, k).sharp()
}

/// `lambda_{k,l} = ((f-l, 1^(e-f-k)), (k, 1^l))` for `1 <= k <= e-f`,
/// `0 <= l < f`.
pub fn principal_lambda_kl(e: u32, f: u32, k: u32, l: u32) -> Bipartition {
    assert!(k >= 1 && k <= e - f && l < f);
    let mut first = vec![f - l];
    first.extend(std::iter::repeat_n(1, (e - f - k) as usize));
    let mut second = vec![k];
    second.extend(std::iter::repeat_n(1, l as usize));
    Bipartition::new(
        Partition::new(first).unwrap(),
        Partition::new(second).unwrap(),
    )
}

/// The four explicit images of the residue-shift involution at n = e for
/// even e, as pairs `(argument, image)`.
pub fn h_involution_fixtures(e: u32) -> Vec<(Bipartition, Bipartition)> {
    assert!(e.is_multiple_of(2) && e >= 4);
    let f = e / 2;
    vec![
        (
            principal_lambda_k(e, 1),
            principal_lambda_kl(e, f, 1, f - 1),
        ),
        (
            principal_lambda_k(e, 2),
            principal_lambda_kl(e, f, 1, f - 2),
        ),
        (
            principal_lambda_kl(e, f, 2, f - 1),
            principal_lambda_kl(e, f, 2, f - 1),
        ),
        (
            principal_lambda_kl(e, f, 1, f - 1),
            principal_lambda_k(e, 1),
        ),
    ]
}

fn mono(q: &Quiver, names: &[&str]) -> Relation {
    let arrows = names
        .iter()
        .map(|n| q.arrow_by_name(n).unwrap().0)
        .collect();
    Relation {
        terms: vec![(BigInt::one(), arrows)],
    }
}

fn pair(q: &Quiver, lhs: &[&str], rhs: &[&str]) -> Relation {
    let l = lhs.iter().map(|n| q.arrow_by_name(n).unwrap().0).collect();
    let r = rhs.iter().map(|n| q.arrow_by_name(n).unwrap().0).collect();
    Relation {
        terms: vec![(BigInt::one(), l), (-BigInt::one(), r)],
    }
}

/// The 9-dimensional string algebra with arrows mu: 1->2, nu: 2->1 and a
/// loop beta on 2; relations nu beta, beta mu, beta^2, (mu nu)^2,
/// (nu mu)^2.
pub fn lambda_string_presentation() -> AlgebraPresentation {
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
    AlgebraPresentation::new(q, rels, 5).expect("fixture presentation")
}

/// The 8-dimensional special biserial block endomorphism algebra: loops
/// alpha, beta on the two nodes, arrows both ways, socle relations
/// alpha^2 = nu mu and beta^2 = mu nu.
pub fn rank2_tame_block_presentation() -> AlgebraPresentation {
    let mut q = Quiver::new();
    q.add_arrow("alpha", "1", "1");
    q.add_arrow("beta", "2", "2");
    q.add_arrow("mu", "1", "2");
    q.add_arrow("nu", "2", "1");
    let rels = vec![
        mono(&q, &["mu", "alpha"]),
        mono(&q, &["beta", "mu"]),
        mono(&q, &["alpha", "nu"]),
        mono(&q, &["nu", "beta"]),
        pair(&q, &["alpha", "alpha"], &["nu", "mu"]),
        pair(&q, &["beta", "beta"], &["mu", "nu"]),
    ];
    AlgebraPresentation::new(q, rels, 4).expect("fixture presentation")
}

/// The 11-dimensional self-injective endomorphism algebra whose quotient
/// by its socle is the string algebra above: relations nu beta, beta mu,
/// beta^2 = (mu nu)^2.
pub fn socle_extension_presentation() -> AlgebraPresentation {
    let mut q = Quiver::new();
    q.add_arrow("mu", "1", "2");
    q.add_arrow("nu", "2", "1");
    q.add_arrow("beta", "2", "2");
    let rels = vec![
        mono(&q, &["nu", "beta"]),
        mono(&q, &["beta", "mu"]),
        pair(&q, &["beta", "beta"], &["mu", "nu", "mu", "nu"]),
    ];
    AlgebraPresentation::new(q, rels, 6).expect("fixture presentation")
}

/// The 20-dimensional radical-cube truncation of the four-node quiver with
/// arrows both ways between neighbours.
pub fn double_a4_mod_radical_cube() -> AlgebraPresentation {
    let q = Quiver::from_adjacency(&[
        vec![0, 1, 0, 0],
        vec![1, 0, 1, 0],
        vec![0, 1, 0, 1],
        vec![0, 0, 1, 0],
    ]);
    let rels = AlgebraPresentation::truncation_relations(&q, 3);
    AlgebraPresentation::new(q, rels, 3).expect("fixture presentation")
}

/// The five-node two-source-star subquiver read off the weight-block
/// radical computations at n = 2f + 4, drawn with the self-duality
/// back-arrows.
pub fn gabriel_subquiver_two_sources_with_backarrows() -> Quiver {
    let mut q = Quiver::new();
    for (name, s, t) in [
        ("a1", "l5", "l1"),
        ("a2", "l5", "l4"),
        ("a3", "l2", "l1"),
        ("a4", "l2", "l4"),
        ("a5", "l2", "l3"),
    ] {
        q.add_arrow(name, s, t);
        q.add_arrow(&format!("{name}r"), t, s);
    }
    q
}

/// The analogous subquiver arising at n = e = 4, f = 2, as drawn (one
/// orientation).
pub fn gabriel_subquiver_rank4() -> Quiver {
    let mut q = Quiver::new();
    q.add_arrow("a1", "l2", "l1");
    q.add_arrow("a2", "l2", "l3");
    q.add_arrow("a3", "l21", "l1");
    q.add_arrow("a4", "l21", "l3");
    q.add_arrow("a5", "l21", "l20");
    q
}

/// The double-loop-plus-arrow Gabriel quiver of the wild principal block
/// at n = 3, e = 2, f = 0.
pub fn gabriel_subquiver_double_loop() -> Quiver {
    Quiver::from_adjacency(&[vec![2, 1], vec![0, 0]])
}

/// The five-node subquiver of the type-D argument at n = e: the split pair
/// receives from both unsplit simples, with the tail to the second column.
pub fn gabriel_subquiver_type_d() -> Quiver {
    let mut q = Quiver::new();
    q.add_arrow("a1", "l1h", "plus");
    q.add_arrow("a2", "l1h", "minus");
    q.add_arrow("a3", "l1", "plus");
    q.add_arrow("a4", "l1", "minus");
    q.add_arrow("a5", "l1", "l2");
    q
}

/// FNV-1a digest of the corpus, for `--version`.
pub fn corpus_digest() -> String {
    let mut dump = String::new();
    for (a, i, b) in CRYSTAL_EDGES_E2_F0.iter().chain(CRYSTAL_EDGES_E2_F1) {
        dump.push_str(&format!("{a}-{i}-{b};"));
    }
    for t in DECOMP_TABLES {
        dump.push_str(&format!("{}/{}/{}:", t.n, t.e, t.f));
        for c in t.cols {
            dump.push_str(c);
        }
        for (r, entries) in t.rows {
            dump.push_str(r);
            for x in *entries {
                dump.push_str(&format!(",{x}"));
            }
        }
    }
    for g in RANK9_EXPANSIONS {
        dump.push_str(g.mu);
        for (b, c) in g.terms {
            dump.push_str(&format!("{b}={c};"));
        }
    }
    for (l1, l2, l3) in WEIGHT2_BLOCK_TRIPLES {
        dump.push_str(&format!("{l1}{l2}{l3};"));
    }
    let mut hash: u64 = 0xcbf29ce484222325;
    for byte in dump.bytes() {
        hash ^= byte as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    format!("{hash:016x}")
}

/// Convenience: parses one fixture table's labels.
pub fn table_rows(t: &DecompTable) -> Vec<(Bipartition, Vec<i64>)> {
    t.rows.iter().map(|(r, e)| (bp(r), e.to_vec())).collect()
}

pub fn table_cols(t: &DecompTable) -> Vec<Bipartition> {
    t.cols.iter().map(|c| bp(c)).collect()
}
