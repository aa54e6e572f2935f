//! Dimension invariants of standard parabolic subgroups `P_I`.
//!
//! `I` is the set of simple roots kept in the Levi factor. All dimensions are
//! root counts: the semisimple part `L^u` of the Levi factor has dimension
//! `|I| + 2 #{beta in R+ : supp(beta) in I}`, and the unipotent radical has one
//! dimension per positive root whose support leaves `I`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{ensure_consistent, Error, Result};
use crate::lie_core::{Family, RootSystem, SimpleType};

/// Subset of the nodes `{1, .., rank}` kept in the Levi factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NodeSet {
    rank: usize,
    /// bit `i` is node `i + 1`
    kept: u128,
}

impl NodeSet {
    pub fn full(rank: usize) -> NodeSet {
        NodeSet {
            rank,
            kept: low_bits(rank),
        }
    }

    /// The Borel case.
    pub fn empty(rank: usize) -> NodeSet {
        NodeSet { rank, kept: 0 }
    }

    pub fn from_kept(rank: usize, kept: impl IntoIterator<Item = usize>) -> Result<NodeSet> {
        let mut set = NodeSet::empty(rank);
        for node in kept {
            check_node(node, rank)?;
            set.kept |= 1 << (node - 1);
        }
        Ok(set)
    }

    /// Everything except `deleted`. This is how the command line names
    /// parabolics.
    pub fn from_deleted(rank: usize, deleted: impl IntoIterator<Item = usize>) -> Result<NodeSet> {
        let mut set = NodeSet::full(rank);
        for node in deleted {
            check_node(node, rank)?;
            set.kept &= !(1 << (node - 1));
        }
        Ok(set)
    }

    /// Maximal parabolic obtained by deleting one node.
    pub fn maximal(rank: usize, deleted: usize) -> Result<NodeSet> {
        NodeSet::from_deleted(rank, [deleted])
    }

    /// Subset encoded by the low `rank` bits of `mask` (bit `i` is node `i + 1`).
    pub fn from_mask(rank: usize, mask: u64) -> NodeSet {
        NodeSet {
            rank,
            kept: mask as u128 & low_bits(rank),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.kept.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.kept == 0
    }

    pub fn contains(&self, node: usize) -> bool {
        node >= 1 && node <= self.rank && self.kept >> (node - 1) & 1 == 1
    }

    pub fn is_subset(&self, other: &NodeSet) -> bool {
        self.kept & !other.kept == 0
    }

    pub fn kept(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.rank).filter(|&n| self.contains(n))
    }

    pub fn deleted(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.rank).filter(|&n| !self.contains(n))
    }

    pub fn mask(&self) -> u128 {
        self.kept
    }
}

fn low_bits(rank: usize) -> u128 {
    if rank >= 128 {
        u128::MAX
    } else {
        (1u128 << rank) - 1
    }
}

fn check_node(node: usize, rank: usize) -> Result<()> {
    if node == 0 || node > rank {
        Err(Error::NodeOutOfRange { node, rank })
    } else {
        Ok(())
    }
}

fn check_rank(rs: &RootSystem, set: &NodeSet) -> Result<()> {
    if set.rank() != rs.rank() {
        return Err(Error::InvalidArgument(format!(
            "node set of rank {} used with {}",
            set.rank(),
            rs.simple_type()
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParabolicData {
    pub ty: SimpleType,
    #[serde(skip)]
    pub kept: NodeSet,
    pub dim_g: u64,
    /// `dim L^u`
    pub dim_levi_ss: u64,
    /// `dim R_u(P)`
    pub dim_unip_rad: u64,
    pub dim_p: u64,
    /// `dim P^u`
    pub dim_pu: u64,
    /// `rank - |I|`
    pub codim_count: u64,
}

fn supported_count(rs: &RootSystem, set: &NodeSet) -> u64 {
    rs.positive_roots()
        .iter()
        .filter(|r| r.supported_in(set.mask()))
        .count() as u64
}

pub fn levi_ss_dim(rs: &RootSystem, set: &NodeSet) -> Result<u64> {
    check_rank(rs, set)?;
    Ok(set.len() as u64 + 2 * supported_count(rs, set))
}

pub fn unipotent_radical_dim(rs: &RootSystem, set: &NodeSet) -> Result<u64> {
    check_rank(rs, set)?;
    Ok(rs.positive_roots().len() as u64 - supported_count(rs, set))
}

/// Full profile of `P_I`, with every structural identity checked.
pub fn parabolic_profile(rs: &RootSystem, set: &NodeSet) -> Result<ParabolicData> {
    check_rank(rs, set)?;
    let ty = rs.simple_type();
    let dim_g = ty.dim();
    let supported = supported_count(rs, set);
    let dim_levi_ss = set.len() as u64 + 2 * supported;
    let dim_unip_rad = rs.positive_roots().len() as u64 - supported;
    let rank = rs.rank() as u64;
    let codim_count = rank - set.len() as u64;

    ensure_consistent!(
        dim_g == rank + 2 * supported + 2 * dim_unip_rad,
        "{ty}: dim G = {dim_g} but rank + 2*{supported} + 2*{dim_unip_rad} differs"
    );
    let dim_p = dim_g - dim_unip_rad;
    let dim_pu = dim_levi_ss + dim_unip_rad;
    ensure_consistent!(
        dim_p >= dim_pu && dim_p - dim_pu == codim_count,
        "{ty}: dim P - dim P^u = {dim_p} - {dim_pu}, expected {codim_count}"
    );
    Ok(ParabolicData {
        ty,
        kept: *set,
        dim_g,
        dim_levi_ss,
        dim_unip_rad,
        dim_p,
        dim_pu,
        codim_count,
    })
}

impl ParabolicData {
    /// Checks the four identities relating the fields; used by audits on
    /// values that did not come out of [`parabolic_profile`].
    pub fn check(&self) -> Result<()> {
        let ty = self.ty;
        ensure_consistent!(
            self.dim_p + self.dim_unip_rad == self.dim_g,
            "{ty}: dim P + dim R_u(P) != dim G"
        );
        ensure_consistent!(
            self.dim_pu == self.dim_levi_ss + self.dim_unip_rad,
            "{ty}: dim P^u != dim L^u + dim R_u(P)"
        );
        ensure_consistent!(
            self.dim_p == self.dim_pu + self.codim_count,
            "{ty}: dim P - dim P^u != rank - |I|"
        );
        let supported = (self.dim_levi_ss - self.kept.len() as u64) / 2;
        ensure_consistent!(
            self.dim_g == ty.rank() as u64 + 2 * supported + 2 * self.dim_unip_rad,
            "{ty}: dim G != rank + 2 #supported + 2 dim R_u(P)"
        );
        Ok(())
    }
}

/// A connected component of a Dynkin subdiagram.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Component {
    pub ty: SimpleType,
    /// Nodes of the ambient diagram, ascending.
    pub nodes: Vec<usize>,
}

/// Levi components as a sorted type list, e.g. `[A1, A2, A2]` for `E_6`
/// minus node 4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviDecomposition(pub Vec<Component>);

impl LeviDecomposition {
    pub fn dim(&self) -> u64 {
        self.0.iter().map(|c| c.ty.dim()).sum()
    }

    pub fn types(&self) -> Vec<SimpleType> {
        self.0.iter().map(|c| c.ty).collect()
    }
}

impl fmt::Display for LeviDecomposition {
    /// `a_1 + b_2`, or `0` for the empty diagram.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|c| {
                format!(
                    "{}_{}",
                    c.ty.family().letter().to_ascii_lowercase(),
                    c.ty.rank()
                )
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Splits the subdiagram on `set` into connected components and names each.
/// Independent of root enumeration; only reads the Cartan matrix.
pub fn classify_subdiagram(cartan: &[Vec<i32>], set: &NodeSet) -> Result<LeviDecomposition> {
    let nodes: Vec<usize> = set.kept().map(|n| n - 1).collect();
    let mut visited = BTreeSet::new();
    let mut comps = Vec::new();
    for &start in &nodes {
        if visited.contains(&start) {
            continue;
        }
        let mut comp = vec![start];
        visited.insert(start);
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            for &w in &nodes {
                if cartan[v][w] != 0 && v != w && visited.insert(w) {
                    comp.push(w);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        let ty = classify_connected(cartan, &comp)?;
        comps.push(Component {
            ty,
            nodes: comp.iter().map(|v| v + 1).collect(),
        });
    }
    comps.sort();
    Ok(LeviDecomposition(comps))
}

fn classify_connected(cartan: &[Vec<i32>], comp: &[usize]) -> Result<SimpleType> {
    let k = comp.len();
    let unknown = || Error::Consistency(format!("unrecognised connected diagram on nodes {comp:?}"));
    let neighbours = |v: usize| -> Vec<usize> {
        comp.iter()
            .copied()
            .filter(|&w| w != v && cartan[v][w] != 0)
            .collect()
    };
    let mut multiple = Vec::new();
    for (a, &v) in comp.iter().enumerate() {
        for &w in &comp[a + 1..] {
            let m = cartan[v][w] * cartan[w][v];
            if m > 1 {
                multiple.push((v, w, m));
            }
        }
    }
    let degrees: Vec<usize> = comp.iter().map(|&v| neighbours(v).len()).collect();
    let edges: usize = degrees.iter().sum::<usize>() / 2;
    if edges + 1 != k {
        return Err(unknown());
    }
    if k == 1 {
        return SimpleType::new(Family::A, 1);
    }

    match multiple.as_slice() {
        [] => {}
        [(_, _, 3)] if k == 2 => return SimpleType::new(Family::G, 2),
        [(v, w, 2)] => {
            if degrees.iter().any(|&d| d > 2) {
                return Err(unknown());
            }
            if k == 2 {
                return SimpleType::new(Family::B, 2);
            }
            let end_of = |x: usize| neighbours(x).len() == 1;
            // the row holding -2 belongs to the short root
            let short = if cartan[*v][*w] == -2 { *v } else { *w };
            let long = if short == *v { *w } else { *v };
            return if end_of(short) {
                SimpleType::new(Family::B, k)
            } else if end_of(long) {
                SimpleType::new(Family::C, k)
            } else if k == 4 {
                SimpleType::new(Family::F, 4)
            } else {
                Err(unknown())
            };
        }
        _ => return Err(unknown()),
    }

    let branches: Vec<usize> = comp
        .iter()
        .zip(&degrees)
        .filter(|(_, &d)| d >= 3)
        .map(|(&v, _)| v)
        .collect();
    match branches.as_slice() {
        [] => SimpleType::new(Family::A, k),
        [b] if neighbours(*b).len() == 3 => {
            let mut arms: Vec<usize> = neighbours(*b)
                .into_iter()
                .map(|start| {
                    let (mut prev, mut cur, mut len) = (*b, start, 1);
                    loop {
                        let next: Vec<usize> =
                            neighbours(cur).into_iter().filter(|&x| x != prev).collect();
                        match next.as_slice() {
                            [n] => {
                                prev = cur;
                                cur = *n;
                                len += 1;
                            }
                            _ => break len,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => SimpleType::new(Family::D, k),
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => SimpleType::new(Family::E, k),
                _ => Err(unknown()),
            }
        }
        _ => Err(unknown()),
    }
}

/// Levi decomposition of `P_I`, cross-checked against the root count.
pub fn levi_decomposition(rs: &RootSystem, set: &NodeSet) -> Result<LeviDecomposition> {
    let decomposition = classify_subdiagram(rs.cartan(), set)?;
    let counted = levi_ss_dim(rs, set)?;
    ensure_consistent!(
        decomposition.dim() == counted,
        "{}: subdiagram {decomposition} has dimension {}, root count gives {counted}",
        rs.simple_type(),
        decomposition.dim()
    );
    Ok(decomposition)
}
