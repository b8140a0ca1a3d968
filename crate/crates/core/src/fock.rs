//! The combinatorial Fock space and its two Hayashi actions.
//!
//! A [`FockVector`] is a finitely supported map from multipartitions to
//! Laurent polynomials. The Chevalley generators act on basis vectors by
//! adding or removing a single `i`-node, weighted by a power of `v` that
//! counts the addable minus removable `i`-nodes on one side of the node:
//!
//! | convention | `f_i` weight | `e_i` weight |
//! |------------|--------------|--------------|
//! | `Gamma`    | `v^{N_i^b}`  | `v^{-N_i^a}` |
//! | `Dual`     | `v^{-N_i^r}` | `v^{N_i^l}`  |
//!
//! where `a`/`b` mean above/below (earlier or later component, or the same
//! component in a smaller or larger row) and `l`/`r` mean left/right (earlier
//! or later component, or the same component in a smaller or larger column).

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::mpart::{i_nodes, Multipartition, NodeKind, NodeRef, Partition, Residue, ResidueParams};
use crate::poly::LaurentPoly;

#[derive(Clone, PartialEq, Eq)]
pub struct FockVector {
    params: ResidueParams,
    terms: BTreeMap<Multipartition, LaurentPoly>,
}

impl FockVector {
    pub fn zero(params: &ResidueParams) -> Self {
        Self { params: params.clone(), terms: BTreeMap::new() }
    }

    /// The basis vector `lam`.
    ///
    /// # Panics
    /// If the level of `lam` differs from that of `params`.
    pub fn basis(params: &ResidueParams, lam: &Multipartition) -> Self {
        let mut x = Self::zero(params);
        x.add_term(lam.clone(), &LaurentPoly::one());
        x
    }

    /// The empty multipartition, the highest weight vector.
    pub fn vacuum(params: &ResidueParams) -> Self {
        Self::basis(params, &Multipartition::empty(params.level()))
    }

    pub fn from_terms<I>(params: &ResidueParams, terms: I) -> Self
    where
        I: IntoIterator<Item = (Multipartition, LaurentPoly)>,
    {
        let mut x = Self::zero(params);
        for (lam, c) in terms {
            x.add_term(lam, &c);
        }
        x
    }

    pub fn params(&self) -> &ResidueParams {
        &self.params
    }

    pub fn add_term(&mut self, lam: Multipartition, coeff: &LaurentPoly) {
        assert_eq!(lam.level(), self.params.level(), "level mismatch for {lam}");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lam) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(coeff.clone());
            }
        }
    }

    pub fn coeff(&self, lam: &Multipartition) -> LaurentPoly {
        self.terms.get(lam).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, lam: &Multipartition) -> Option<&LaurentPoly> {
        self.terms.get(lam)
    }

    /// Terms in the multipartition total order (most dominant first).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Multipartition, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn support(&self) -> impl DoubleEndedIterator<Item = &Multipartition> + '_ {
        self.terms.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `self += coeff * other`.
    pub fn add_scaled(&mut self, other: &FockVector, coeff: &LaurentPoly) {
        assert_eq!(self.params, other.params, "vectors over different parameters");
        for (lam, c) in &other.terms {
            self.add_term(lam.clone(), &(c * coeff));
        }
    }

    pub fn scale(&self, coeff: &LaurentPoly) -> Self {
        let mut out = Self::zero(&self.params);
        out.add_scaled(self, coeff);
        out
    }

    /// `self - other`.
    pub fn difference(&self, other: &FockVector) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::from(-1));
        out
    }

    /// Coefficients specialised at `v = 1`.
    pub fn eval_at_one(&self) -> BTreeMap<Multipartition, BigInt> {
        self.terms.iter().map(|(l, c)| (l.clone(), c.eval_at_one())).filter(|(_, c)| *c != BigInt::from(0)).collect()
    }

    /// List of `{"mp": text form, "coeff": [[exp, coeff], ...]}` in total order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(lam, c)| json!({ "mp": lam.to_string(), "coeff": c.to_json() }))
                .collect(),
        )
    }

    pub fn from_json(params: &ResidueParams, value: &Value) -> Result<Self> {
        let entries = value
            .as_array()
            .ok_or_else(|| Error::Parse(format!("expected a list of terms, got {value}")))?;
        let mut x = Self::zero(params);
        for entry in entries {
            let lam: Multipartition = entry["mp"]
                .as_str()
                .ok_or_else(|| Error::Parse(format!("term without \"mp\": {entry}")))?
                .parse()?;
            params.check_level(&lam)?;
            x.add_term(lam, &LaurentPoly::from_json(&entry["coeff"])?);
        }
        Ok(x)
    }
}

impl fmt::Display for FockVector {
    /// Terms as `(coeff)[mp]` joined by ` + `; unit coefficients are elided.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (lam, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "[{lam}]")?;
            } else {
                write!(f, "({c})[{lam}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FockVector({self})")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ActionConvention {
    Gamma,
    Dual,
}

/// Signed counts (addable minus removable `i`-nodes) on each side of a node.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NodeStats {
    pub above: i64,
    pub below: i64,
    pub left: i64,
    pub right: i64,
}

fn stats_against(nodes: &[(NodeKind, NodeRef)], x: NodeRef) -> NodeStats {
    let mut s = NodeStats::default();
    for &(kind, y) in nodes {
        if y == x {
            continue;
        }
        let w = match kind {
            NodeKind::Addable => 1,
            NodeKind::Removable => -1,
        };
        let (before, after) = (y.component < x.component, y.component > x.component);
        let same = y.component == x.component;
        if before || (same && y.row < x.row) {
            s.above += w;
        }
        if after || (same && y.row > x.row) {
            s.below += w;
        }
        if before || (same && y.col < x.col) {
            s.left += w;
        }
        if after || (same && y.col > x.col) {
            s.right += w;
        }
    }
    s
}

/// `(N_i^a, N_i^b, N_i^l, N_i^r)` for an addable or removable position `x`.
pub fn node_stats(params: &ResidueParams, lam: &Multipartition, x: NodeRef, i: Residue) -> Result<NodeStats> {
    if !(lam.is_addable(x) || lam.is_removable(x)) {
        return Err(Error::InvalidNode { lam: lam.clone(), node: x });
    }
    Ok(stats_against(&i_nodes(params, lam, i), x))
}

/// `N_i(lam)`: addable minus removable `i`-nodes; `v^{h_i}` acts by `v^{N_i}`.
pub fn h_weight(params: &ResidueParams, lam: &Multipartition, i: Residue) -> i64 {
    i_nodes(params, lam, i)
        .iter()
        .map(|(kind, _)| match kind {
            NodeKind::Addable => 1,
            NodeKind::Removable => -1,
        })
        .sum()
}

/// Exponent of `v^d`: minus the number of cells of residue 0.
pub fn d_weight(params: &ResidueParams, lam: &Multipartition) -> i64 {
    -(lam.nodes().filter(|&x| crate::mpart::residue(params, x) == 0).count() as i64)
}

/// `f_i` applied to `x`.
pub fn f_op(conv: ActionConvention, x: &FockVector, i: Residue) -> FockVector {
    let params = x.params();
    let mut out = FockVector::zero(params);
    for (lam, c) in x.terms() {
        let nodes = i_nodes(params, lam, i);
        for &(kind, y) in &nodes {
            if kind != NodeKind::Addable {
                continue;
            }
            let s = stats_against(&nodes, y);
            let exp = match conv {
                ActionConvention::Gamma => s.below,
                ActionConvention::Dual => -s.right,
            };
            out.add_term(lam.with_node_added(y), &c.shift(exp));
        }
    }
    out
}

/// `e_i` applied to `x`.
pub fn e_op(conv: ActionConvention, x: &FockVector, i: Residue) -> FockVector {
    let params = x.params();
    let mut out = FockVector::zero(params);
    for (lam, c) in x.terms() {
        let nodes = i_nodes(params, lam, i);
        for &(kind, y) in &nodes {
            if kind != NodeKind::Removable {
                continue;
            }
            let s = stats_against(&nodes, y);
            let exp = match conv {
                ActionConvention::Gamma => -s.above,
                ActionConvention::Dual => s.left,
            };
            out.add_term(lam.with_node_removed(y), &c.shift(exp));
        }
    }
    out
}

/// The divided power `f_i^(k) = f_i^k / [k]!`.
pub fn divided_f(conv: ActionConvention, x: &FockVector, i: Residue, k: u32) -> Result<FockVector> {
    let mut y = x.clone();
    for _ in 0..k {
        y = f_op(conv, &y, i);
    }
    if k < 2 {
        return Ok(y);
    }
    let fact = LaurentPoly::quantum_factorial(k);
    let mut out = FockVector::zero(x.params());
    for (lam, c) in y.terms() {
        out.add_term(lam.clone(), &c.exact_div(&fact)?);
    }
    Ok(out)
}

/// `f_{i_s}^(k_s) ... f_{i_1}^(k_1)` applied to the empty multipartition,
/// with `seq[0]` applied first.
pub fn monomial_apply(conv: ActionConvention, params: &ResidueParams, seq: &[(Residue, usize)]) -> Result<FockVector> {
    seq.iter().try_fold(FockVector::vacuum(params), |x, &(i, k)| {
        divided_f(conv, &x, i, u32::try_from(k).expect("divided power fits in u32"))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorOp {
    E,
    F,
}

/// Level-one `i`-cells of a single partition with charge `charge`, as
/// `(row, col, +1 addable / -1 removable)`.
fn level_one_cells(params: &ResidueParams, p: &Partition, charge: Residue, i: Residue) -> Vec<(usize, usize, i64)> {
    let i = params.reduce(i);
    let res = |a: usize, b: usize| params.reduce(charge + b as i64 - a as i64);
    let mut cells = Vec::new();
    for a in 1..=p.num_rows() + 1 {
        let len = p.row(a);
        let above = if a == 1 { usize::MAX } else { p.row(a - 1) };
        if len < above && res(a, len + 1) == i {
            cells.push((a, len + 1, 1));
        }
        if len > 0 && len > p.row(a + 1) && res(a, len) == i {
            cells.push((a, len, -1));
        }
    }
    cells
}

fn level_one_h(params: &ResidueParams, p: &Partition, charge: Residue, i: Residue) -> i64 {
    level_one_cells(params, p, charge, i).iter().map(|c| c.2).sum()
}

/// Level-one `f_i` (or `e_i`) on a partition: `(result, exponent of v)`.
fn level_one_act(params: &ResidueParams, p: &Partition, charge: Residue, i: Residue, op: TensorOp) -> Vec<(Partition, i64)> {
    let cells = level_one_cells(params, p, charge, i);
    let mut out = Vec::new();
    for &(a, b, sign) in &cells {
        let mut rows = p.rows().to_vec();
        match (op, sign) {
            (TensorOp::F, 1) => {
                if a > rows.len() {
                    rows.push(1);
                } else {
                    rows[a - 1] = b;
                }
                let below: i64 = cells.iter().filter(|c| c.0 > a).map(|c| c.2).sum();
                out.push((Partition::new(rows).expect("adding a cell keeps a partition"), below));
            }
            (TensorOp::E, -1) => {
                rows[a - 1] = b - 1;
                let above: i64 = cells.iter().filter(|c| c.0 < a).map(|c| c.2).sum();
                out.push((Partition::new(rows).expect("removing a cell keeps a partition"), -above));
            }
            _ => {}
        }
    }
    out
}

/// Acts on `F^{g_1} (x) ... (x) F^{g_m}` via the coproduct
/// `f -> 1 (x) f + f (x) v^h`, `e -> v^{-h} (x) e + e (x) 1`, splitting off the
/// first tensor factor each time.
fn tensor_act(
    params: &ResidueParams,
    factors: &[Partition],
    charges: &[Residue],
    i: Residue,
    op: TensorOp,
) -> Vec<(Vec<Partition>, i64)> {
    let (head, rest) = factors.split_first().expect("at least one tensor factor");
    let (g, rest_charges) = charges.split_first().expect("charges match factors");
    let head_moves = level_one_act(params, head, *g, i, op);
    if rest.is_empty() {
        return head_moves.into_iter().map(|(p, e)| (vec![p], e)).collect();
    }
    let mut out = Vec::new();
    match op {
        TensorOp::F => {
            // 1 (x) f
            for (tail, e) in tensor_act(params, rest, rest_charges, i, op) {
                out.push((std::iter::once(head.clone()).chain(tail).collect(), e));
            }
            // f (x) v^h
            let h_rest: i64 = rest.iter().zip(rest_charges).map(|(p, c)| level_one_h(params, p, *c, i)).sum();
            for (p, e) in head_moves {
                out.push((std::iter::once(p).chain(rest.iter().cloned()).collect(), e + h_rest));
            }
        }
        TensorOp::E => {
            // v^{-h} (x) e
            let h_head = level_one_h(params, head, *g, i);
            for (tail, e) in tensor_act(params, rest, rest_charges, i, op) {
                out.push((std::iter::once(head.clone()).chain(tail).collect(), e - h_head));
            }
            // e (x) 1
            for (p, e) in head_moves {
                out.push((std::iter::once(p).chain(rest.iter().cloned()).collect(), e));
            }
        }
    }
    out
}

/// The `Gamma` action computed through the tensor factorisation of the Fock
/// space into level-one pieces. Shares no code with [`f_op`] / [`e_op`].
pub fn tensor_action(x: &FockVector, i: Residue, op: TensorOp) -> FockVector {
    let params = x.params();
    let mut out = FockVector::zero(params);
    for (lam, c) in x.terms() {
        for (factors, e) in tensor_act(params, lam.components(), params.gamma(), i, op) {
            let mu = Multipartition::new(factors).expect("level is positive");
            out.add_term(mu, &c.shift(e));
        }
    }
    out
}

/// `sigma`: relabels each basis vector by its flip transpose. The input lives
/// over `-gamma'`, the output over `gamma`.
pub fn sigma_map(x: &FockVector) -> FockVector {
    FockVector::from_terms(
        &x.params().flipped(),
        x.terms().map(|(lam, c)| (lam.flip_transpose(), c.clone())),
    )
}

/// `xi`: the semilinear map sending `lam` to its transpose and barring every
/// coefficient. The output lives over `-gamma`.
pub fn xi_map(x: &FockVector) -> FockVector {
    FockVector::from_terms(
        &x.params().negated(),
        x.terms().map(|(lam, c)| (lam.transpose(), c.bar())),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpart::enumerate_multipartitions;
    use ActionConvention::{Dual, Gamma};

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    fn r2() -> ResidueParams {
        ResidueParams::finite(2, &[0]).unwrap()
    }

    fn v() -> LaurentPoly {
        LaurentPoly::v()
    }

    fn vec_of(params: &ResidueParams, terms: &[(&str, LaurentPoly)]) -> FockVector {
        FockVector::from_terms(params, terms.iter().map(|(s, c)| (mp(s), c.clone())))
    }

    #[test]
    fn node_stats_examples() {
        let s = node_stats(&r2(), &mp("1"), NodeRef::new(1, 1, 2), 1).unwrap();
        assert_eq!(s.below, 1);
        let s = node_stats(&r2(), &mp("1"), NodeRef::new(1, 2, 1), 1).unwrap();
        assert_eq!(s.below, 0);
        let x = NodeRef::new(1, 1, 1);
        for i in 0..2 {
            assert_eq!(node_stats(&r2(), &mp("-"), x, i).unwrap(), NodeStats::default());
        }
        // at level two the other component's addable node is counted
        let p00 = ResidueParams::finite(2, &[0, 0]).unwrap();
        let s = node_stats(&p00, &mp("-|-"), x, 0).unwrap();
        assert_eq!(s, NodeStats { above: 0, below: 1, left: 0, right: 1 });
        assert!(matches!(
            node_stats(&r2(), &mp("2"), NodeRef::new(1, 3, 3), 0),
            Err(Error::InvalidNode { .. })
        ));
    }

    #[test]
    fn action_examples() {
        let p0 = ResidueParams::finite(2, &[0]).unwrap();
        assert_eq!(f_op(Gamma, &FockVector::vacuum(&p0), 0), vec_of(&p0, &[("1", LaurentPoly::one())]));
        let f1 = f_op(Gamma, &FockVector::basis(&r2(), &mp("1")), 1);
        let expect = vec_of(&r2(), &[("2", v()), ("1,1", LaurentPoly::one())]);
        assert_eq!(f1, expect);
        assert_eq!(
            e_op(Gamma, &expect, 1),
            vec_of(&r2(), &[("1", LaurentPoly::quantum_int(2))])
        );
    }

    #[test]
    fn weight_examples() {
        let p = ResidueParams::finite(3, &[0, 2, 0]).unwrap();
        let empty = Multipartition::empty(3);
        assert_eq!(h_weight(&p, &empty, 0), 2);
        assert_eq!(h_weight(&p, &empty, 2), 1);
        assert_eq!(h_weight(&p, &empty, 1), 0);
        assert_eq!(d_weight(&p, &empty), 0);
        assert_eq!(h_weight(&r2(), &mp("1"), 1), 2);
        assert_eq!(d_weight(&r2(), &mp("2,1")), -1);
    }

    #[test]
    fn divided_power_examples() {
        let vac = FockVector::vacuum(&r2());
        assert_eq!(divided_f(Gamma, &vac, 0, 1).unwrap(), f_op(Gamma, &vac, 0));
        let p00 = ResidueParams::finite(2, &[0, 0]).unwrap();
        let sq = f_op(Gamma, &f_op(Gamma, &FockVector::vacuum(&p00), 0), 0);
        assert_eq!(sq, vec_of(&p00, &[("1|1", LaurentPoly::quantum_int(2))]));
        assert_eq!(
            divided_f(Gamma, &FockVector::vacuum(&p00), 0, 2).unwrap(),
            vec_of(&p00, &[("1|1", LaurentPoly::one())])
        );
        // f_1^2 (1) = v (2,1) + v^-1 (2,1), so the divided square is (2,1)
        let one = FockVector::basis(&r2(), &mp("1"));
        let sq = f_op(Gamma, &f_op(Gamma, &one, 1), 1);
        assert_eq!(sq, vec_of(&r2(), &[("2,1", LaurentPoly::quantum_int(2))]));
        assert_eq!(divided_f(Gamma, &one, 1, 2).unwrap(), vec_of(&r2(), &[("2,1", LaurentPoly::one())]));
    }

    #[test]
    fn monomial_examples() {
        assert_eq!(monomial_apply(Gamma, &r2(), &[]).unwrap(), FockVector::vacuum(&r2()));
        assert_eq!(
            monomial_apply(Gamma, &r2(), &[(0, 1), (1, 1)]).unwrap(),
            vec_of(&r2(), &[("2", v()), ("1,1", LaurentPoly::one())])
        );
        let p00 = ResidueParams::finite(2, &[0, 0]).unwrap();
        assert_eq!(
            monomial_apply(Gamma, &p00, &[(0, 2)]).unwrap(),
            vec_of(&p00, &[("1|1", LaurentPoly::one())])
        );
    }

    #[test]
    fn tensor_examples() {
        let p00 = ResidueParams::finite(2, &[0, 0]).unwrap();
        let got = tensor_action(&FockVector::vacuum(&p00), 0, TensorOp::F);
        assert_eq!(got, vec_of(&p00, &[("1|-", v()), ("-|1", LaurentPoly::one())]));
        for lam in enumerate_multipartitions(1, 4) {
            let x = FockVector::basis(&r2(), &lam);
            for i in 0..2 {
                assert_eq!(tensor_action(&x, i, TensorOp::F), f_op(Gamma, &x, i));
                assert_eq!(tensor_action(&x, i, TensorOp::E), e_op(Gamma, &x, i));
            }
        }
    }

    #[test]
    fn sigma_and_xi() {
        let vac = FockVector::vacuum(&r2());
        assert_eq!(xi_map(&vac), FockVector::vacuum(&r2().negated()));
        let x = vec_of(&r2(), &[("2", v()), ("1,1", LaurentPoly::one())]);
        let neg = r2().negated();
        let expect = vec_of(&neg, &[("1,1", LaurentPoly::monomial(-1, 1)), ("2", LaurentPoly::one())]);
        assert_eq!(xi_map(&x), expect);

        let p = ResidueParams::infinite(&[0, 3]).unwrap();
        let y = vec_of(&p, &[("2|1", v()), ("-|3", LaurentPoly::from(2))]);
        let s = sigma_map(&y);
        assert_eq!(s.params().gamma(), &[-3, 0]);
        assert_eq!(s.coeff(&mp("1|1,1")), v());
        assert_eq!(sigma_map(&s), y);
        assert_eq!(xi_map(&xi_map(&y)), y);
    }

    #[test]
    fn json_round_trip() {
        let x = vec_of(&r2(), &[("2", v()), ("1,1", LaurentPoly::one())]);
        let j = x.to_json();
        assert_eq!(
            serde_json::to_string(&j).unwrap(),
            r#"[{"coeff":[[1,1]],"mp":"2"},{"coeff":[[0,1]],"mp":"1,1"}]"#
        );
        assert_eq!(FockVector::from_json(&r2(), &j).unwrap(), x);
        let two = ResidueParams::finite(2, &[0, 0]).unwrap();
        assert!(FockVector::from_json(&two, &j).is_err());
    }

    #[test]
    fn actions_are_graded_and_content_homogeneous() {
        let params = ResidueParams::finite(3, &[0, 1]).unwrap();
        for lam in enumerate_multipartitions(2, 3) {
            let content = crate::mpart::residue_content(&params, &lam);
            for i in 0..3 {
                for conv in [Gamma, Dual] {
                    for mu in f_op(conv, &FockVector::basis(&params, &lam), i).support() {
                        assert_eq!(mu.size(), lam.size() + 1);
                        let mut expect = content.clone();
                        *expect.entry(i).or_insert(0) += 1;
                        assert_eq!(crate::mpart::residue_content(&params, mu), expect);
                    }
                    for mu in e_op(conv, &FockVector::basis(&params, &lam), i).support() {
                        assert_eq!(mu.size() + 1, lam.size());
                    }
                }
            }
        }
    }
}
