//! A/R words, good nodes and the crystal of Kleshchev multipartitions.
//!
//! For a residue `i` the addable (`A`) and removable (`R`) `i`-nodes of a
//! multipartition are read component by component, rows top to bottom. Every
//! `R` immediately followed by an `A` cancels (repeatedly, as brackets with
//! `R` opening and `A` closing); the survivors have the shape `A..AR..R`.
//! Surviving `R`s are the normal nodes and the leftmost of them is the good
//! node. `e_tilde` removes the good node, `f_tilde` fills the rightmost
//! surviving `A`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::mpart::{i_nodes, Multipartition, NodeKind, NodeRef, Residue, ResidueParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArLetter {
    pub kind: NodeKind,
    pub node: NodeRef,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ArWord {
    pub letters: Vec<ArLetter>,
}

impl ArWord {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn count(&self, kind: NodeKind) -> usize {
        self.letters.iter().filter(|l| l.kind == kind).count()
    }
}

impl fmt::Display for ArWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            f.write_str(match l.kind {
                NodeKind::Addable => "A",
                NodeKind::Removable => "R",
            })?;
        }
        Ok(())
    }
}

impl FromStr for ArWord {
    type Err = Error;

    /// Parses a bare `A`/`R` string. Letter `k` (1-based) is attached to the
    /// placeholder node `(1, k, 1)` so survivors can be traced back to their
    /// original position by their row.
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .enumerate()
            .map(|(idx, ch)| {
                let kind = match ch {
                    'A' => NodeKind::Addable,
                    'R' => NodeKind::Removable,
                    _ => return Err(Error::Parse(format!("unexpected letter {ch:?} in A/R word"))),
                };
                Ok(ArLetter { kind, node: NodeRef::new(1, idx + 1, 1) })
            })
            .collect::<Result<_>>()?;
        Ok(Self { letters })
    }
}

/// The `i`-signature of `lam` in reading order.
pub fn ar_word(params: &ResidueParams, lam: &Multipartition, i: Residue) -> ArWord {
    ArWord {
        letters: i_nodes(params, lam, i)
            .into_iter()
            .map(|(kind, node)| ArLetter { kind, node })
            .collect(),
    }
}

/// Indices of the letters that survive `RA` cancellation.
pub fn surviving_indices(kinds: &[NodeKind]) -> Vec<usize> {
    let mut open: Vec<usize> = Vec::new();
    let mut alive = vec![true; kinds.len()];
    for (idx, kind) in kinds.iter().enumerate() {
        match kind {
            NodeKind::Removable => open.push(idx),
            NodeKind::Addable => {
                if let Some(r) = open.pop() {
                    alive[r] = false;
                    alive[idx] = false;
                }
            }
        }
    }
    (0..kinds.len()).filter(|&idx| alive[idx]).collect()
}

/// Deletes `RA` pairs until none remain; survivors keep their nodes.
pub fn reduce_ar(word: &ArWord) -> ArWord {
    let kinds: Vec<NodeKind> = word.letters.iter().map(|l| l.kind).collect();
    ArWord {
        letters: surviving_indices(&kinds).into_iter().map(|idx| word.letters[idx]).collect(),
    }
}

fn reduced(params: &ResidueParams, lam: &Multipartition, i: Residue) -> ArWord {
    reduce_ar(&ar_word(params, lam, i))
}

/// Normal `i`-nodes: the surviving removable letters, top to bottom.
pub fn normal_nodes(params: &ResidueParams, lam: &Multipartition, i: Residue) -> Vec<NodeRef> {
    reduced(params, lam, i)
        .letters
        .into_iter()
        .filter(|l| l.kind == NodeKind::Removable)
        .map(|l| l.node)
        .collect()
}

pub fn good_node(params: &ResidueParams, lam: &Multipartition, i: Residue) -> Option<NodeRef> {
    normal_nodes(params, lam, i).into_iter().next()
}

/// The surviving addable letters, top to bottom.
pub fn conormal_nodes(params: &ResidueParams, lam: &Multipartition, i: Residue) -> Vec<NodeRef> {
    reduced(params, lam, i)
        .letters
        .into_iter()
        .filter(|l| l.kind == NodeKind::Addable)
        .map(|l| l.node)
        .collect()
}

pub fn e_tilde(params: &ResidueParams, lam: &Multipartition, i: Residue) -> Option<Multipartition> {
    good_node(params, lam, i).map(|x| lam.with_node_removed(x))
}

pub fn f_tilde(params: &ResidueParams, lam: &Multipartition, i: Residue) -> Option<Multipartition> {
    conormal_nodes(params, lam, i).last().map(|&x| lam.with_node_added(x))
}

pub fn epsilon(params: &ResidueParams, lam: &Multipartition, i: Residue) -> usize {
    reduced(params, lam, i).count(NodeKind::Removable)
}

pub fn phi(params: &ResidueParams, lam: &Multipartition, i: Residue) -> usize {
    reduced(params, lam, i).count(NodeKind::Addable)
}

/// Whether some chain of good-node removals leads from `lam` to the empty
/// multipartition.
pub fn is_kleshchev(params: &ResidueParams, lam: &Multipartition) -> bool {
    fn go(params: &ResidueParams, lam: &Multipartition, memo: &mut HashMap<Multipartition, bool>) -> bool {
        if lam.is_empty() {
            return true;
        }
        if let Some(&known) = memo.get(lam) {
            return known;
        }
        let ans = params
            .active_residues(lam)
            .into_iter()
            .filter_map(|i| e_tilde(params, lam, i))
            .any(|mu| go(params, &mu, memo));
        memo.insert(lam.clone(), ans);
        ans
    }
    lam.level() == params.level() && go(params, lam, &mut HashMap::new())
}

/// Kleshchev multipartitions of sizes `0..=max_size`, one sorted list per
/// size, built as the closure of the empty multipartition under `f_tilde`.
pub fn kleshchev_by_size(params: &ResidueParams, max_size: usize) -> Vec<Vec<Multipartition>> {
    let mut levels = vec![vec![Multipartition::empty(params.level())]];
    for _ in 0..max_size {
        let next: BTreeSet<Multipartition> = levels
            .last()
            .expect("at least the empty level")
            .iter()
            .flat_map(|lam| {
                params
                    .active_residues(lam)
                    .into_iter()
                    .filter_map(move |i| f_tilde(params, lam, i))
            })
            .collect();
        levels.push(next.into_iter().collect());
    }
    levels
}

/// The Kleshchev multipartitions of size `n`, most dominant first.
pub fn enumerate_kleshchev(params: &ResidueParams, n: usize) -> Vec<Multipartition> {
    kleshchev_by_size(params, n).pop().unwrap_or_default()
}

/// A recipe `[(i_1, k_1), ..., (i_s, k_s)]` with `lam` reachable from the
/// empty multipartition by `f_tilde_{i_1}^{k_1}` first, then
/// `f_tilde_{i_2}^{k_2}`, and so on.
///
/// Peeling proceeds from `lam` downward. At each step the residue chosen is
/// the one whose lowest normal node comes last in reading order, and all of
/// its `epsilon` normal nodes are removed at once. This choice makes the
/// divided-power monomial of the recipe unitriangular at desk scale; see
/// `canonical::a_basis`, which checks it.
pub fn ladder_sequence(params: &ResidueParams, lam: &Multipartition) -> Result<Vec<(Residue, usize)>> {
    if !is_kleshchev(params, lam) {
        return Err(Error::NotKleshchev(lam.clone()));
    }
    let mut steps = Vec::new();
    let mut cur = lam.clone();
    while !cur.is_empty() {
        let (i, normals) = params
            .active_residues(&cur)
            .into_iter()
            .map(|i| (i, normal_nodes(params, &cur, i)))
            .filter(|(_, normals)| !normals.is_empty())
            .max_by_key(|(_, normals)| *normals.last().expect("nonempty"))
            .ok_or_else(|| Error::NotKleshchev(lam.clone()))?;
        let k = normals.len();
        for _ in 0..k {
            cur = e_tilde(params, &cur, i).expect("normal node present");
        }
        steps.push((i, k));
    }
    steps.reverse();
    Ok(steps)
}

/// The crystal graph on Kleshchev multipartitions up to a given size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalGraph {
    /// Sorted by size, then most dominant first.
    pub vertices: Vec<Multipartition>,
    /// `(source, i, target)` with `target = f_tilde_i(source)`.
    pub edges: Vec<(Multipartition, Residue, Multipartition)>,
}

impl CrystalGraph {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for v in &self.vertices {
            out.push_str(&format!("  \"{v}\";\n"));
        }
        for (s, i, t) in &self.edges {
            out.push_str(&format!("  \"{s}\" -> \"{t}\" [label=\"{i}\"];\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "vertices": self.vertices.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|(s, i, t)| json!({
                "source": s.to_string(),
                "residue": i,
                "target": t.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn crystal_graph(params: &ResidueParams, max_size: usize) -> CrystalGraph {
    let vertices: Vec<Multipartition> = kleshchev_by_size(params, max_size).into_iter().flatten().collect();
    let mut edges = Vec::new();
    for v in vertices.iter().filter(|v| v.size() < max_size) {
        for i in params.active_residues(v) {
            if let Some(t) = f_tilde(params, v, i) {
                edges.push((v.clone(), i, t));
            }
        }
    }
    CrystalGraph { vertices, edges }
}
