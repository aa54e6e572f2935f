//! Simple Lie types, Cartan matrices and positive-root enumeration.
//!
//! Nodes follow Bourbaki numbering and are 1-based in every public API.
//! Along the chains of the classical diagrams this is the same as counting
//! nodes from the left: type `D_n` forks only after node `n - 2`, and every
//! node deleted by the parabolic search satisfies `s <= n - 2`.
//!
//! The Cartan matrix uses the convention `cartan[i][j] = <alpha_j, alpha_i^vee>`,
//! so row `i` pairs every simple root with the coroot of `alpha_i`. A row
//! containing `-2` or `-3` therefore belongs to a short simple root.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{ensure_consistent, Error, Result};

/// Upper bound on accepted ranks. Keeps root enumeration fast and lets node
/// sets and root supports fit in a `u128`.
pub const MAX_RANK: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.letter() == c)
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }

    /// Smallest admissible rank for the family.
    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B => 2,
            Family::C => 3,
            Family::D => 4,
            Family::E => 6,
            Family::F => 4,
            Family::G => 2,
        }
    }

    pub fn accepts_rank(self, rank: usize) -> bool {
        match self {
            Family::A | Family::B | Family::C | Family::D => {
                rank >= self.min_rank() && rank <= MAX_RANK
            }
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A simple Lie type such as `A_3` or `E_8`. Construction validates the rank,
/// so the low-rank coincidences `B_1, C_1, C_2, D_2, D_3` never appear.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if family.accepts_rank(rank) {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InvalidRank { family, rank })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn is_classical(self) -> bool {
        self.family.is_classical()
    }

    /// Closed-form dimension: `n^2 + 2n`, `2n^2 + n`, `2n^2 - n`, or the
    /// tabulated exceptional value.
    pub fn dim(self) -> u64 {
        let n = self.rank as u64;
        match (self.family, self.rank) {
            (Family::A, _) => n * n + 2 * n,
            (Family::B, _) | (Family::C, _) => 2 * n * n + n,
            (Family::D, _) => 2 * n * n - n,
            (Family::E, 6) => 78,
            (Family::E, 7) => 133,
            (Family::E, 8) => 248,
            (Family::F, _) => 52,
            (Family::G, _) => 14,
            (Family::E, _) => unreachable!("validated at construction"),
        }
    }

    /// `A_3` style label.
    pub fn subscripted(self) -> String {
        format!("{}_{}", self.family, self.rank)
    }

    /// Every valid type with rank at most `max_rank`, followed by the
    /// exceptional types (always included).
    pub fn all_up_to(max_rank: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for family in [Family::A, Family::B, Family::C, Family::D] {
            for rank in family.min_rank()..=max_rank.min(MAX_RANK) {
                out.push(SimpleType { family, rank });
            }
        }
        out.extend(Self::exceptional());
        out
    }

    pub fn exceptional() -> [SimpleType; 5] {
        [
            SimpleType { family: Family::E, rank: 6 },
            SimpleType { family: Family::E, rank: 7 },
            SimpleType { family: Family::E, rank: 8 },
            SimpleType { family: Family::F, rank: 4 },
            SimpleType { family: Family::G, rank: 2 },
        ]
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    /// Accepts `A3`, `A_3` and surrounding whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| Error::Syntax {
            pos: 0,
            msg: "expected a Lie type".into(),
        })?;
        let family = Family::from_letter(letter).ok_or_else(|| Error::Syntax {
            pos: 0,
            msg: format!("unknown family `{letter}`"),
        })?;
        let digits = chars.as_str().trim_start_matches('_');
        let offset = s.len() - digits.len();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Syntax {
                pos: offset,
                msg: "expected a rank".into(),
            });
        }
        let rank = digits.parse::<usize>().map_err(|_| Error::Syntax {
            pos: offset,
            msg: "rank too large".into(),
        })?;
        SimpleType::new(family, rank)
    }
}

/// Rank, dimension pair of a simple group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GroupDims {
    pub dim: u64,
    pub rank: u64,
}

/// A root written in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coeffs: Vec<i32>,
    /// bit `i` set iff coefficient `i` is nonzero
    support: u128,
}

impl Root {
    pub fn simple(rank: usize, node: usize) -> Root {
        let mut coeffs = vec![0; rank];
        coeffs[node - 1] = 1;
        Root::from(coeffs)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().map(|&c| c as i64).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0) && self.coeffs.iter().any(|&c| c > 0)
    }

    /// 1-based indices of the simple roots occurring in the expansion.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i + 1)
    }

    pub fn support_mask(&self) -> u128 {
        self.support
    }

    /// Whether the support lies inside `kept` (bit `i` is node `i + 1`).
    pub fn supported_in(&self, kept: u128) -> bool {
        self.support & !kept == 0
    }
}

impl From<Vec<i32>> for Root {
    fn from(coeffs: Vec<i32>) -> Self {
        let support = coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .fold(0u128, |m, (i, _)| m | 1 << i);
        Root { coeffs, support }
    }
}

/// Cartan matrix of `ty` (see the module docs for the convention).
pub fn cartan_matrix(ty: SimpleType) -> Vec<Vec<i32>> {
    let n = ty.rank;
    let mut m = vec![vec![0i32; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut bond = |i: usize, j: usize| {
        m[i - 1][j - 1] = -1;
        m[j - 1][i - 1] = -1;
    };
    match ty.family {
        Family::A | Family::B | Family::C => {
            for i in 1..n {
                bond(i, i + 1);
            }
        }
        Family::D => {
            for i in 1..n - 1 {
                bond(i, i + 1);
            }
            bond(n - 2, n);
        }
        Family::E => {
            bond(1, 3);
            bond(2, 4);
            for i in 3..n {
                bond(i, i + 1);
            }
        }
        Family::F => {
            bond(1, 2);
            bond(2, 3);
            bond(3, 4);
        }
        Family::G => bond(1, 2),
    }
    match ty.family {
        // alpha_n short
        Family::B => m[n - 1][n - 2] = -2,
        // alpha_n long
        Family::C => m[n - 2][n - 1] = -2,
        // alpha_3, alpha_4 short
        Family::F => m[2][1] = -2,
        // alpha_1 short
        Family::G => m[0][1] = -3,
        _ => {}
    }
    m
}

/// Cartan matrix together with the canonically ordered positive roots.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: SimpleType,
    cartan: Vec<Vec<i32>>,
    positive_roots: Vec<Root>,
}

impl RootSystem {
    pub fn new(ty: SimpleType) -> RootSystem {
        let cartan = cartan_matrix(ty);
        let positive_roots = enumerate_positive_roots(&cartan);
        RootSystem {
            ty,
            cartan,
            positive_roots,
        }
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn dim_from_roots(&self) -> u64 {
        (self.rank() + 2 * self.positive_roots.len()) as u64
    }
}

/// Positive roots of `ty`, sorted by height and then lexicographically.
pub fn positive_roots(ty: SimpleType) -> Vec<Root> {
    enumerate_positive_roots(&cartan_matrix(ty))
}

/// Breadth-first closure over heights. For a root `beta` and a simple root
/// `alpha_i`, let `p` be the largest `k` with `beta - k alpha_i` a root; the
/// string through `beta` extends upward iff `p - <beta, alpha_i^vee> > 0`.
/// All roots of lower height are known when `beta` is processed, so `p` is
/// exact.
fn enumerate_positive_roots(cartan: &[Vec<i32>]) -> Vec<Root> {
    let n = cartan.len();
    // nonzero entries of each row; at most four per row
    let rows: Vec<Vec<(usize, i32)>> = cartan
        .iter()
        .map(|row| row.iter().copied().enumerate().filter(|&(_, a)| a != 0).collect())
        .collect();
    // coefficients of positive roots never exceed 6, so bytes suffice as keys
    let mut known: HashSet<Vec<u8>> = HashSet::new();
    let mut level: Vec<Vec<u8>> = (0..n)
        .map(|i| {
            let mut v = vec![0u8; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut all = Vec::new();
    while !level.is_empty() {
        level.sort_unstable();
        known.extend(level.iter().cloned());
        let mut next: HashSet<Vec<u8>> = HashSet::new();
        let mut probe = vec![0u8; n];
        for beta in &level {
            for (i, row) in rows.iter().enumerate() {
                let pairing: i32 = row.iter().map(|&(j, a)| beta[j] as i32 * a).sum();
                // p >= 0, so a negative pairing already extends the string
                let extends = pairing < 0 || {
                    probe.copy_from_slice(beta);
                    let mut p = 0;
                    while probe[i] > 0 {
                        probe[i] -= 1;
                        if !known.contains(&probe) {
                            break;
                        }
                        p += 1;
                    }
                    p > pairing
                };
                if extends {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        all.extend(
            level
                .drain(..)
                .map(|v| Root::from(v.into_iter().map(i32::from).collect::<Vec<_>>())),
        );
        level = next.into_iter().collect();
    }
    all
}

/// Dimension of a simple group computed twice: once by closed form or table,
/// once as `rank + 2 |R+|`. Disagreement is reported as a consistency error.
pub fn dimension(ty: SimpleType) -> Result<GroupDims> {
    dimension_of(&RootSystem::new(ty))
}

pub fn dimension_of(rs: &RootSystem) -> Result<GroupDims> {
    let closed = rs.ty.dim();
    let counted = rs.dim_from_roots();
    ensure_consistent!(
        closed == counted,
        "{}: closed form gives {closed}, root count gives {counted}",
        rs.ty
    );
    Ok(GroupDims {
        dim: closed,
        rank: rs.rank() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    /// Positive roots via the Weyl orbit of the simple roots under simple
    /// reflections `s_i(beta) = beta - <beta, alpha_i^vee> alpha_i`.
    fn reflection_closure(cartan: &[Vec<i32>]) -> Vec<Vec<i32>> {
        let n = cartan.len();
        let mut seen: HashSet<Vec<i32>> = HashSet::new();
        let mut stack: Vec<Vec<i32>> = (1..=n).map(|i| Root::simple(n, i).coeffs).collect();
        while let Some(beta) = stack.pop() {
            if !seen.insert(beta.clone()) {
                continue;
            }
            for i in 0..n {
                let pairing: i32 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
                let mut image = beta.clone();
                image[i] -= pairing;
                if !seen.contains(&image) {
                    stack.push(image);
                }
            }
        }
        let mut pos: Vec<Vec<i32>> = seen.into_iter().filter(|r| r.iter().all(|&c| c >= 0)).collect();
        pos.sort();
        pos
    }

    #[test]
    fn cartan_examples() {
        assert_eq!(cartan_matrix(t("A1")), vec![vec![2]]);
        assert_eq!(cartan_matrix(t("A2")), vec![vec![2, -1], vec![-1, 2]]);
        let g2 = cartan_matrix(t("G2"));
        assert_eq!(g2[0][1] * g2[1][0], 3);
    }

    #[test]
    fn cartan_shape_invariants() {
        for ty in SimpleType::all_up_to(12) {
            let m = cartan_matrix(ty);
            for i in 0..ty.rank() {
                assert_eq!(m[i][i], 2);
                for j in 0..ty.rank() {
                    if i != j {
                        assert!((-3..=0).contains(&m[i][j]), "{ty} ({i},{j})");
                        assert_eq!(m[i][j] == 0, m[j][i] == 0, "{ty} ({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn root_counts() {
        assert_eq!(positive_roots(t("A1")).len(), 1);
        assert_eq!(positive_roots(t("A2")).len(), 3);
        assert_eq!(positive_roots(t("B4")).len(), 16);
        assert_eq!(positive_roots(t("G2")).len(), 6);
        assert_eq!(positive_roots(t("F4")).len(), 24);
        assert_eq!(positive_roots(t("E8")).len(), 120);
    }

    #[test]
    fn matches_reflection_closure() {
        for ty in SimpleType::all_up_to(8) {
            let mut ours: Vec<Vec<i32>> = positive_roots(ty).into_iter().map(|r| r.coeffs).collect();
            ours.sort();
            assert_eq!(ours, reflection_closure(&cartan_matrix(ty)), "{ty}");
        }
    }

    #[test]
    fn highest_roots() {
        let last = |s: &str| positive_roots(t(s)).last().unwrap().coeffs.clone();
        assert_eq!(last("G2"), vec![3, 2]);
        assert_eq!(last("F4"), vec![2, 3, 4, 2]);
        assert_eq!(last("E8"), vec![2, 3, 4, 6, 5, 4, 3, 2]);
        assert_eq!(last("B3"), vec![1, 2, 2]);
        assert_eq!(last("C3"), vec![2, 2, 1]);
    }

    #[test]
    fn canonical_order_and_simple_roots() {
        for ty in SimpleType::all_up_to(10) {
            let roots = positive_roots(ty);
            for w in roots.windows(2) {
                assert!((w[0].height(), &w[0].coeffs) < (w[1].height(), &w[1].coeffs));
            }
            assert!(roots.iter().all(Root::is_positive));
            let simple: Vec<_> = roots.iter().filter(|r| r.height() == 1).collect();
            assert_eq!(simple.len(), ty.rank());
            for (i, r) in simple.iter().enumerate() {
                assert_eq!(**r, Root::simple(ty.rank(), ty.rank() - i));
            }
        }
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dimension(t("A3")).unwrap().dim, 15);
        assert_eq!(dimension(t("G2")).unwrap().dim, 14);
        assert_eq!(dimension(t("D4")).unwrap().dim, 28);
        for ty in SimpleType::all_up_to(12) {
            let d = dimension(ty).unwrap();
            assert!(d.dim >= d.rank && (d.dim - d.rank) % 2 == 0);
        }
    }

    #[test]
    fn rejects_degenerate_ranks() {
        for s in ["B1", "C1", "C2", "D2", "D3", "E5", "E9", "F3", "G3", "A0"] {
            assert!(matches!(s.parse::<SimpleType>(), Err(Error::InvalidRank { .. })), "{s}");
        }
        assert!(matches!("H3".parse::<SimpleType>(), Err(Error::Syntax { .. })));
        assert_eq!(t("E_6"), SimpleType::new(Family::E, 6).unwrap());
    }

    #[test]
    fn root_support() {
        let r = Root::from(vec![1, 0, 2]);
        assert_eq!(r.support().collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(r.support_mask(), 0b101);
        assert!(r.supported_in(0b101));
        assert!(!r.supported_in(0b011));
    }
}
