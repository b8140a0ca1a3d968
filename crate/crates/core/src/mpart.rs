//! Partitions, multipartitions, diagram nodes and residues.
//!
//! Multipartitions carry a total order that refines dominance: comparing the
//! cumulative row sums lexicographically, larger first. Sorting ascending with
//! [`Ord`] therefore lists the most dominant multipartition first, and every
//! ordered collection in the crate (Fock vectors, matrices, enumerations)
//! follows it.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Residue class of a node: an integer in `[0, r)`, or any integer when
/// `r` is infinite.
pub type Residue = i64;

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from weakly decreasing rows; trailing zeros are
    /// dropped.
    pub fn new(mut rows: Vec<usize>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0] < w[1]) || rows.contains(&0) {
            return Err(Error::InvalidPartition(format!("{rows:?} is not weakly decreasing")));
        }
        Ok(Self(rows))
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of row `a` (1-based); zero past the last row.
    pub fn row(&self, a: usize) -> usize {
        a.checked_sub(1).and_then(|i| self.0.get(i)).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.0.first().copied().unwrap_or(0);
        Self((1..=cols).map(|b| self.0.iter().take_while(|&&r| r >= b).count()).collect())
    }

    /// Addable cells as `(row, col)`, top to bottom.
    pub fn addable_cells(&self) -> Vec<(usize, usize)> {
        (1..=self.num_rows() + 1)
            .filter(|&a| a == 1 || self.row(a - 1) > self.row(a))
            .map(|a| (a, self.row(a) + 1))
            .collect()
    }

    /// Removable cells as `(row, col)`, top to bottom.
    pub fn removable_cells(&self) -> Vec<(usize, usize)> {
        (1..=self.num_rows())
            .filter(|&a| self.row(a) > self.row(a + 1))
            .map(|a| (a, self.row(a)))
            .collect()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for part in (1..=n.min(max)).rev() {
                prefix.push(part);
                go(n - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let rows: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&rows.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s == "0" {
            return Ok(Self::empty());
        }
        let rows = s
            .split(',')
            .map(|r| r.trim().parse::<usize>().map_err(|e| Error::Parse(format!("row {r:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }
}

/// A diagram position: component `c`, row `a`, column `b`, all 1-based.
///
/// The derived order is the reading order used for A/R words: components
/// first, then rows top to bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeRef {
    pub component: usize,
    pub row: usize,
    pub col: usize,
}

impl NodeRef {
    pub fn new(component: usize, row: usize, col: usize) -> Self {
        Self { component, row, col }
    }
}

impl fmt::Display for NodeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.component, self.row, self.col)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Addable,
    Removable,
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidPartition("a multipartition needs at least one component".into()));
        }
        Ok(Self { components })
    }

    /// The empty multipartition of level `m`.
    pub fn empty(m: usize) -> Self {
        assert!(m >= 1, "level must be positive");
        Self { components: vec![Partition::empty(); m] }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// Component `c` (1-based).
    pub fn component(&self, c: usize) -> &Partition {
        &self.components[c - 1]
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.iter().all(Partition::is_empty)
    }

    /// Componentwise conjugate.
    pub fn transpose(&self) -> Self {
        Self { components: self.components.iter().map(Partition::conjugate).collect() }
    }

    /// Componentwise conjugate with the component order reversed.
    pub fn flip_transpose(&self) -> Self {
        Self { components: self.components.iter().rev().map(Partition::conjugate).collect() }
    }

    /// Dominance: every cumulative row sum of `self` is at least that of
    /// `other`.
    pub fn dominates(&self, other: &Self) -> Result<bool> {
        if self.level() != other.level() || self.size() != other.size() {
            return Err(Error::SizeMismatch(format!("{self} vs {other}")));
        }
        Ok(partial_sum_pairs(self, other).all(|(x, y)| x >= y))
    }

    /// Dominance for callers that already know levels and sizes agree.
    pub(crate) fn dominates_unchecked(&self, other: &Self) -> bool {
        partial_sum_pairs(self, other).all(|(x, y)| x >= y)
    }

    pub fn is_node(&self, node: NodeRef) -> bool {
        node.component >= 1
            && node.component <= self.level()
            && node.row >= 1
            && node.col >= 1
            && node.col <= self.component(node.component).row(node.row)
    }

    /// All addable positions in reading order.
    pub fn addable_positions(&self) -> Vec<NodeRef> {
        self.positions(Partition::addable_cells)
    }

    /// All removable positions in reading order.
    pub fn removable_positions(&self) -> Vec<NodeRef> {
        self.positions(Partition::removable_cells)
    }

    fn positions(&self, cells: fn(&Partition) -> Vec<(usize, usize)>) -> Vec<NodeRef> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(c, p)| cells(p).into_iter().map(move |(a, b)| NodeRef::new(c + 1, a, b)))
            .collect()
    }

    pub fn is_addable(&self, node: NodeRef) -> bool {
        node.component >= 1
            && node.component <= self.level()
            && self.component(node.component).addable_cells().contains(&(node.row, node.col))
    }

    pub fn is_removable(&self, node: NodeRef) -> bool {
        node.component >= 1
            && node.component <= self.level()
            && self.component(node.component).removable_cells().contains(&(node.row, node.col))
    }

    /// `self` with an addable node filled in.
    ///
    /// # Panics
    /// If `node` is not addable.
    pub fn with_node_added(&self, node: NodeRef) -> Self {
        assert!(self.is_addable(node), "{node} is not addable to {self}");
        let mut out = self.clone();
        let rows = &mut out.components[node.component - 1].0;
        if node.row > rows.len() {
            rows.push(1);
        } else {
            rows[node.row - 1] += 1;
        }
        out
    }

    /// `self` with a removable node taken out.
    ///
    /// # Panics
    /// If `node` is not removable.
    pub fn with_node_removed(&self, node: NodeRef) -> Self {
        assert!(self.is_removable(node), "{node} is not removable from {self}");
        let mut out = self.clone();
        let rows = &mut out.components[node.component - 1].0;
        rows[node.row - 1] -= 1;
        if rows[node.row - 1] == 0 {
            rows.pop();
        }
        out
    }

    /// All cells of the diagram.
    pub fn nodes(&self) -> impl Iterator<Item = NodeRef> + '_ {
        self.components.iter().enumerate().flat_map(|(c, p)| {
            p.rows()
                .iter()
                .enumerate()
                .flat_map(move |(a, &len)| (1..=len).map(move |b| NodeRef::new(c + 1, a + 1, b)))
        })
    }
}

/// Cumulative row sums of two multipartitions of the same level, walked in
/// lockstep, component-major. Each component is padded to the longer of the
/// two row counts; padding beyond that cannot change a comparison.
fn partial_sum_pairs<'a>(
    lam: &'a Multipartition,
    mu: &'a Multipartition,
) -> impl Iterator<Item = (usize, usize)> + 'a {
    let mut base = (0usize, 0usize);
    lam.components.iter().zip(&mu.components).flat_map(move |(p, q)| {
        let rows = p.num_rows().max(q.num_rows());
        let start = base;
        base = (start.0 + p.size(), start.1 + q.size());
        let (mut x, mut y) = start;
        (1..=rows).map(move |a| {
            x += p.row(a);
            y += q.row(a);
            (x, y)
        })
    })
}

impl Ord for Multipartition {
    /// Size, then level, then cumulative row sums with larger sums first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then(self.level().cmp(&other.level()))
            .then_with(|| {
                partial_sum_pairs(self, other)
                    .map(|(x, y)| y.cmp(&x))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            })
    }
}

impl PartialOrd for Multipartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Multipartition {
    /// Text form: components separated by `|`, rows by `,`, empty as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, p) in self.components.iter().enumerate() {
            if idx > 0 {
                f.write_str("|")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Multipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(s.split('|').map(str::parse).collect::<Result<_>>()?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Modulus {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Modulus::Finite(r) => write!(f, "{r}"),
            Modulus::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Modulus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" => Ok(Modulus::Infinite),
            t => match t.parse::<u32>() {
                Ok(r) if r >= 2 => Ok(Modulus::Finite(r)),
                _ => Err(Error::InvalidParams(format!("r must be an integer >= 2 or `inf`, got {t:?}"))),
            },
        }
    }
}

/// The charge data `(r, gamma)` fixing the residue of every node.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResidueParams {
    modulus: Modulus,
    gamma: Vec<Residue>,
}

impl ResidueParams {
    pub fn new(modulus: Modulus, gamma: Vec<Residue>) -> Result<Self> {
        if gamma.is_empty() {
            return Err(Error::InvalidParams("gamma needs at least one entry".into()));
        }
        if let Modulus::Finite(r) = modulus {
            if r < 2 {
                return Err(Error::InvalidParams(format!("r = {r} must be at least 2")));
            }
        }
        let mut params = Self { modulus, gamma };
        params.gamma = params.gamma.iter().map(|&g| params.reduce(g)).collect();
        Ok(params)
    }

    /// Finite-`r` shorthand.
    pub fn finite(r: u32, gamma: &[Residue]) -> Result<Self> {
        Self::new(Modulus::Finite(r), gamma.to_vec())
    }

    pub fn infinite(gamma: &[Residue]) -> Result<Self> {
        Self::new(Modulus::Infinite, gamma.to_vec())
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn gamma(&self) -> &[Residue] {
        &self.gamma
    }

    pub fn level(&self) -> usize {
        self.gamma.len()
    }

    pub fn reduce(&self, i: Residue) -> Residue {
        match self.modulus {
            Modulus::Finite(r) => i.rem_euclid(i64::from(r)),
            Modulus::Infinite => i,
        }
    }

    /// The same modulus with every charge negated.
    pub fn negated(&self) -> Self {
        Self::new(self.modulus, self.gamma.iter().map(|g| -g).collect()).expect("valid params")
    }

    /// `-gamma'`: charges negated and their order reversed.
    pub fn flipped(&self) -> Self {
        Self::new(self.modulus, self.gamma.iter().rev().map(|g| -g).collect()).expect("valid params")
    }

    /// Residues at which `lam` has an addable or removable node. For finite
    /// `r` this is simply `0..r`.
    pub fn active_residues(&self, lam: &Multipartition) -> Vec<Residue> {
        match self.modulus {
            Modulus::Finite(r) => (0..i64::from(r)).collect(),
            Modulus::Infinite => lam
                .addable_positions()
                .into_iter()
                .chain(lam.removable_positions())
                .map(|x| residue(self, x))
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect(),
        }
    }

    pub(crate) fn check_level(&self, lam: &Multipartition) -> Result<()> {
        if lam.level() != self.level() {
            return Err(Error::SizeMismatch(format!(
                "{lam} has level {} but gamma has {} entries",
                lam.level(),
                self.level()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for ResidueParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.gamma.iter().map(ToString::to_string).collect();
        write!(f, "r={} gamma=({})", self.modulus, g.join(","))
    }
}

/// `gamma_c + b - a`, reduced mod `r` when finite.
pub fn residue(params: &ResidueParams, node: NodeRef) -> Residue {
    let raw = params.gamma[node.component - 1] + node.col as i64 - node.row as i64;
    params.reduce(raw)
}

/// Addable and removable `i`-nodes of `lam` in reading order.
pub fn i_nodes(params: &ResidueParams, lam: &Multipartition, i: Residue) -> Vec<(NodeKind, NodeRef)> {
    let i = params.reduce(i);
    let mut out: Vec<(NodeKind, NodeRef)> = lam
        .addable_positions()
        .into_iter()
        .map(|x| (NodeKind::Addable, x))
        .chain(lam.removable_positions().into_iter().map(|x| (NodeKind::Removable, x)))
        .filter(|&(_, x)| residue(params, x) == i)
        .collect();
    out.sort_by_key(|&(_, x)| x);
    out
}

pub fn addable_nodes(params: &ResidueParams, lam: &Multipartition, i: Residue) -> Vec<NodeRef> {
    let i = params.reduce(i);
    lam.addable_positions().into_iter().filter(|&x| residue(params, x) == i).collect()
}

pub fn removable_nodes(params: &ResidueParams, lam: &Multipartition, i: Residue) -> Vec<NodeRef> {
    let i = params.reduce(i);
    lam.removable_positions().into_iter().filter(|&x| residue(params, x) == i).collect()
}

/// Multiset of residues of the cells of `lam`, as residue -> multiplicity.
pub fn residue_content(params: &ResidueParams, lam: &Multipartition) -> BTreeMap<Residue, usize> {
    let mut out = BTreeMap::new();
    for x in lam.nodes() {
        *out.entry(residue(params, x)).or_insert(0) += 1;
    }
    out
}

/// All multipartitions of level `m` and size `n`, most dominant first.
pub fn enumerate_multipartitions(m: usize, n: usize) -> Vec<Multipartition> {
    assert!(m >= 1, "level must be positive");
    let by_size: Vec<Vec<Partition>> = (0..=n).map(Partition::all).collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(m);
    fn go(
        m: usize,
        left: usize,
        by_size: &[Vec<Partition>],
        current: &mut Vec<Partition>,
        out: &mut Vec<Multipartition>,
    ) {
        if current.len() == m - 1 {
            for p in &by_size[left] {
                current.push(p.clone());
                out.push(Multipartition { components: current.clone() });
                current.pop();
            }
            return;
        }
        for k in 0..=left {
            for p in &by_size[k] {
                current.push(p.clone());
                go(m, left - k, by_size, current, out);
                current.pop();
            }
        }
    }
    go(m, n, &by_size, &mut current, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn text_form_round_trips() {
        for s in ["2,1|-|1", "-", "3", "-|-", "4,4,1|2"] {
            assert_eq!(mp(s).to_string(), s);
        }
        assert!("2,3".parse::<Multipartition>().is_err());
        assert!("a".parse::<Multipartition>().is_err());
    }

    #[test]
    fn residue_examples() {
        let p1 = ResidueParams::infinite(&[0]).unwrap();
        assert_eq!(residue(&p1, NodeRef::new(1, 1, 1)), 0);
        let p2 = ResidueParams::finite(2, &[0]).unwrap();
        assert_eq!(residue(&p2, NodeRef::new(1, 3, 1)), 0);
        let p3 = ResidueParams::finite(3, &[0, 1]).unwrap();
        assert_eq!(residue(&p3, NodeRef::new(2, 1, 2)), 2);
        assert_eq!(residue(&p1, NodeRef::new(1, 3, 1)), -2);
    }

    #[test]
    fn params_reduce_gamma() {
        let p = ResidueParams::finite(3, &[4, -1]).unwrap();
        assert_eq!(p.gamma(), &[1, 2]);
        assert!(ResidueParams::finite(1, &[0]).is_err());
        assert!(ResidueParams::infinite(&[]).is_err());
        assert_eq!(p.flipped().gamma(), &[1, 2]);
        assert_eq!(ResidueParams::infinite(&[0, 3]).unwrap().flipped().gamma(), &[-3, 0]);
        assert_eq!("inf".parse::<Modulus>().unwrap(), Modulus::Infinite);
        assert!("1".parse::<Modulus>().is_err());
    }

    #[test]
    fn dominance_examples() {
        let lam = mp("2,1|1");
        assert!(lam.dominates(&lam).unwrap());
        assert!(mp("2").dominates(&mp("1,1")).unwrap());
        assert!(!mp("1,1").dominates(&mp("2")).unwrap());
        assert!(mp("1|1").dominates(&mp("-|2")).unwrap());
        assert!(matches!(mp("2").dominates(&mp("1")), Err(Error::SizeMismatch(_))));
        assert!(mp("1|-").dominates(&mp("1")).is_err());
    }

    #[test]
    fn transposes() {
        assert_eq!(mp("-|-").transpose(), mp("-|-"));
        assert_eq!(mp("2|1").transpose(), mp("1,1|1"));
        assert_eq!(mp("2|1").flip_transpose(), mp("1|1,1"));
        assert_eq!(mp("4,2,1").transpose(), mp("3,2,1,1"));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_multipartitions(1, 2), vec![mp("2"), mp("1,1")]);
        assert_eq!(enumerate_multipartitions(2, 1), vec![mp("1|-"), mp("-|1")]);
        assert_eq!(enumerate_multipartitions(2, 2).len(), 5);
        assert_eq!(enumerate_multipartitions(3, 0), vec![Multipartition::empty(3)]);
        // brute-force counts: sum over compositions of n into m parts of products of p(k)
        let p: Vec<usize> = (0..=6).map(|k| Partition::all(k).len()).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11]);
        for n in 0..=6 {
            let expect: usize = (0..=n).map(|k| p[k] * p[n - k]).sum();
            assert_eq!(enumerate_multipartitions(2, n).len(), expect);
        }
    }

    #[test]
    fn addable_and_removable_examples() {
        let p0 = ResidueParams::finite(2, &[0]).unwrap();
        let empty = Multipartition::empty(1);
        assert_eq!(addable_nodes(&p0, &empty, 0), vec![NodeRef::new(1, 1, 1)]);
        assert!(removable_nodes(&p0, &empty, 0).is_empty());
        assert_eq!(
            addable_nodes(&p0, &mp("1"), 1),
            vec![NodeRef::new(1, 1, 2), NodeRef::new(1, 2, 1)]
        );
        assert_eq!(removable_nodes(&p0, &mp("2"), 1), vec![NodeRef::new(1, 1, 2)]);
        assert_eq!(addable_nodes(&p0, &mp("2"), 1), vec![NodeRef::new(1, 2, 1)]);
    }

    #[test]
    fn residue_content_examples() {
        let p0 = ResidueParams::finite(2, &[0]).unwrap();
        assert!(residue_content(&p0, &Multipartition::empty(1)).is_empty());
        assert_eq!(residue_content(&p0, &mp("2,1")), BTreeMap::from([(0, 1), (1, 2)]));
        let p00 = ResidueParams::finite(2, &[0, 0]).unwrap();
        assert_eq!(residue_content(&p00, &mp("1|1")), BTreeMap::from([(0, 2)]));
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for m in 1..=2 {
            for n in 0..=5 {
                let all = enumerate_multipartitions(m, n);
                for a in &all {
                    assert!(a.dominates(a).unwrap());
                    for b in &all {
                        let ab = a.dominates(b).unwrap();
                        if ab && b.dominates(a).unwrap() {
                            assert_eq!(a, b);
                        }
                        // total order refines dominance
                        if ab {
                            assert!(a <= b, "{a} dominates {b} but sorts after it");
                        }
                        for c in &all {
                            if ab && b.dominates(c).unwrap() {
                                assert!(a.dominates(c).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn transposes_are_involutions_and_flip_reverses_dominance() {
        for m in 1..=2 {
            for n in 0..=5 {
                let all = enumerate_multipartitions(m, n);
                for a in &all {
                    assert_eq!(a.transpose().transpose(), *a);
                    assert_eq!(a.flip_transpose().flip_transpose(), *a);
                    for b in &all {
                        assert_eq!(
                            a.dominates(b).unwrap(),
                            b.flip_transpose().dominates(&a.flip_transpose()).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn i_nodes_partition_all_positions() {
        let params = ResidueParams::finite(3, &[0, 1]).unwrap();
        for lam in enumerate_multipartitions(2, 4) {
            let mut add: Vec<_> = (0..3).flat_map(|i| addable_nodes(&params, &lam, i)).collect();
            let mut rem: Vec<_> = (0..3).flat_map(|i| removable_nodes(&params, &lam, i)).collect();
            add.sort();
            rem.sort();
            assert_eq!(add, lam.addable_positions());
            assert_eq!(rem, lam.removable_positions());
        }
    }

    #[test]
    fn node_edits() {
        let lam = mp("2|-");
        assert_eq!(lam.with_node_added(NodeRef::new(2, 1, 1)), mp("2|1"));
        assert_eq!(lam.with_node_added(NodeRef::new(1, 2, 1)), mp("2,1|-"));
        assert_eq!(lam.with_node_removed(NodeRef::new(1, 1, 2)), mp("1|-"));
        assert!(lam.is_node(NodeRef::new(1, 1, 2)));
        assert!(!lam.is_node(NodeRef::new(2, 1, 1)));
        assert_eq!(lam.nodes().count(), 2);
    }
}
