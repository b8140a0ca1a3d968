//! Canonical bases of the highest-weight submodule and decomposition matrices.
//!
//! The computation runs in three stages:
//!
//! 1. [`a_basis`]: for each Kleshchev label `lam` of size `n`, apply the
//!    divided-power monomial of its ladder recipe to the empty
//!    multipartition. Monomials are bar-invariant, and each one is
//!    unitriangular: `lam` is its least dominant term, with coefficient 1.
//! 2. [`bar_expand`]: the bar involution on the span of that family, obtained
//!    by expanding in it and barring the coefficients.
//! 3. [`canonical_basis`]: triangular elimination. Starting from `A(lam)`,
//!    subtract bar-invariant multiples of already computed `G(mu)` until
//!    every coefficient other than the label's lies in `v Z[v]`.
//!
//! The graded decomposition number `d_{lam,mu}(v)` is the coefficient of
//! `lam` in `G(mu)`; its value at `v = 1` is the multiplicity of the simple
//! module `D^mu` in the Specht module `S^lam`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::crystal::{enumerate_kleshchev, is_kleshchev, ladder_sequence};
use crate::error::{Error, Result};
use crate::fock::{monomial_apply, ActionConvention, FockVector};
use crate::mpart::{enumerate_multipartitions, residue_content, Multipartition, Residue, ResidueParams};
use crate::poly::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisEntry {
    pub label: Multipartition,
    pub vector: FockVector,
}

/// A family of vectors indexed by Kleshchev labels, most dominant label
/// first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledBasis {
    params: ResidueParams,
    size: usize,
    entries: Vec<BasisEntry>,
    index: HashMap<Multipartition, usize>,
}

impl LabeledBasis {
    fn new(params: &ResidueParams, size: usize, entries: Vec<BasisEntry>) -> Self {
        let index = entries.iter().enumerate().map(|(k, e)| (e.label.clone(), k)).collect();
        Self { params: params.clone(), size, entries, index }
    }

    pub fn params(&self) -> &ResidueParams {
        &self.params
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entries(&self) -> &[BasisEntry] {
        &self.entries
    }

    pub fn labels(&self) -> impl Iterator<Item = &Multipartition> + '_ {
        self.entries.iter().map(|e| &e.label)
    }

    pub fn get(&self, label: &Multipartition) -> Option<&FockVector> {
        self.index.get(label).map(|&k| &self.entries[k].vector)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// List of `{"label": text form, "vector": fock serialization}`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|e| json!({ "label": e.label.to_string(), "vector": e.vector.to_json() }))
                .collect(),
        )
    }

    pub fn from_json(params: &ResidueParams, size: usize, value: &Value) -> Result<Self> {
        let items = value
            .as_array()
            .ok_or_else(|| Error::Parse(format!("expected a list of basis entries, got {value}")))?;
        let entries = items
            .iter()
            .map(|item| {
                let label: Multipartition = item["label"]
                    .as_str()
                    .ok_or_else(|| Error::Parse(format!("entry without \"label\": {item}")))?
                    .parse()?;
                Ok(BasisEntry { label, vector: FockVector::from_json(params, &item["vector"])? })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(params, size, entries))
    }
}

/// The bar-invariant monomial family.
pub type ABasis = LabeledBasis;
/// The canonical basis `G(lam)`.
pub type CanonicalBasis = LabeledBasis;

/// Why `vector` fails to be unitriangular with respect to `label`.
fn triangularity_defect(label: &Multipartition, vector: &FockVector) -> Option<String> {
    match vector.coeff_ref(label) {
        Some(c) if c.is_one() => {}
        Some(c) => return Some(format!("coefficient of the label is {c}")),
        None => return Some("label is not in the support".into()),
    }
    vector
        .support()
        .find(|mu| *mu != label && !mu.dominates_unchecked(label))
        .map(|mu| format!("support term {mu} does not dominate the label"))
}

pub fn a_basis(params: &ResidueParams, n: usize) -> Result<ABasis> {
    let labels = enumerate_kleshchev(params, n);
    let entries = labels
        .into_par_iter()
        .map(|label| {
            let seq = ladder_sequence(params, &label)?;
            let vector = monomial_apply(ActionConvention::Gamma, params, &seq)?;
            if let Some(reason) = triangularity_defect(&label, &vector) {
                return Err(Error::TriangularityFailure { label, reason });
            }
            Ok(BasisEntry { label, vector })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LabeledBasis::new(params, n, entries))
}

/// Writes `x` as a combination of the monomial family and returns the same
/// combination with barred coefficients.
pub fn bar_expand(x: &FockVector, basis: &ABasis) -> Result<FockVector> {
    if x.params() != basis.params() {
        return Err(Error::SizeMismatch(format!("{} vs {}", x.params(), basis.params())));
    }
    let mut rest = x.clone();
    let mut out = FockVector::zero(x.params());
    // the least dominant surviving term is always a leading label
    loop {
        let last = rest.terms().next_back().map(|(l, c)| (l.clone(), c.clone()));
        let Some((lam, c)) = last else { break };
        let a = basis.get(&lam).ok_or(Error::NotInSpan(lam))?;
        rest.add_scaled(a, &-&c);
        out.add_scaled(a, &c.bar());
    }
    Ok(out)
}

/// How the elimination picks the next coefficient to correct.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OffenderOrder {
    /// The most dominant offending label first. A correction may disturb
    /// more dominant coefficients again; the iteration bound catches any
    /// failure to settle.
    MostDominant,
    /// A uniformly random offending label, from a seeded generator.
    Random(u64),
}

fn offenders<'a>(g: &'a FockVector, label: &Multipartition, done: &HashMap<Multipartition, FockVector>) -> Vec<&'a Multipartition> {
    g.terms()
        .filter(|(mu, c)| *mu != label && done.contains_key(*mu) && !c.in_v_z_v())
        .map(|(mu, _)| mu)
        .collect()
}

fn final_defect(g: &FockVector, label: &Multipartition) -> Option<String> {
    if let Some(reason) = triangularity_defect(label, g) {
        return Some(reason);
    }
    g.terms()
        .find(|(mu, c)| *mu != label && !c.in_v_z_v())
        .map(|(mu, c)| format!("coefficient {c} of {mu} is not in vZ[v]"))
}

/// Eliminates within one block of labels sharing a residue content.
fn eliminate_block(
    basis: &ABasis,
    labels: &[Multipartition],
    order: OffenderOrder,
    bound: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<BasisEntry>> {
    let mut done: HashMap<Multipartition, FockVector> = HashMap::new();
    let mut out = Vec::with_capacity(labels.len());
    for label in labels {
        let mut g = basis.get(label).expect("label from this basis").clone();
        let mut steps = 0;
        loop {
            let bad = offenders(&g, label, &done);
            let pick = match order {
                OffenderOrder::MostDominant => bad.first(),
                OffenderOrder::Random(_) => bad.choose(rng),
            };
            let Some(mu) = pick.map(|m| (*m).clone()) else { break };
            steps += 1;
            if steps > bound {
                return Err(Error::EliminationDivergence { label: label.clone(), bound });
            }
            let correction = g.coeff(&mu).symmetric_completion();
            g.add_scaled(&done[&mu], &-&correction);
        }
        if let Some(reason) = final_defect(&g, label) {
            return Err(Error::CongruenceFailure { label: label.clone(), reason });
        }
        if bar_expand(&g, basis)? != g {
            return Err(Error::CongruenceFailure { label: label.clone(), reason: "not bar-invariant".into() });
        }
        done.insert(label.clone(), g.clone());
        out.push(BasisEntry { label: label.clone(), vector: g });
    }
    Ok(out)
}

/// Runs the elimination on a precomputed monomial family.
///
/// Labels are split into residue-content blocks, which are independent and
/// processed in parallel; the result does not depend on the thread count.
pub fn eliminate(basis: &ABasis, order: OffenderOrder) -> Result<CanonicalBasis> {
    let params = basis.params();
    let bound = 4 * enumerate_multipartitions(params.level(), basis.size()).len();
    let mut blocks: BTreeMap<BTreeMap<Residue, usize>, Vec<Multipartition>> = BTreeMap::new();
    for label in basis.labels() {
        blocks.entry(residue_content(params, label)).or_default().push(label.clone());
    }
    let seed = match order {
        OffenderOrder::MostDominant => 0,
        OffenderOrder::Random(s) => s,
    };
    let blocks: Vec<Vec<Multipartition>> = blocks.into_values().collect();
    let solved = blocks
        .par_iter()
        .enumerate()
        .map(|(k, labels)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
            eliminate_block(basis, labels, order, bound, &mut rng)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut entries: Vec<BasisEntry> = solved.into_iter().flatten().collect();
    entries.sort_by(|a, b| a.label.cmp(&b.label));
    Ok(LabeledBasis::new(params, basis.size(), entries))
}

pub fn canonical_basis(params: &ResidueParams, n: usize) -> Result<CanonicalBasis> {
    eliminate(&a_basis(params, n)?, OffenderOrder::MostDominant)
}

/// Number of randomized reruns made by [`order_independence_check`].
pub const ORDER_TRIALS: u64 = 3;

/// Reruns the elimination with randomly chosen correction order and
/// compares against the deterministic run. Any failure counts as `false`.
pub fn order_independence_check(params: &ResidueParams, n: usize, seed: u64) -> bool {
    let Ok(basis) = a_basis(params, n) else { return false };
    let Ok(reference) = eliminate(&basis, OffenderOrder::MostDominant) else { return false };
    (0..ORDER_TRIALS).all(|t| {
        eliminate(&basis, OffenderOrder::Random(seed.wrapping_mul(1_000_003).wrapping_add(t)))
            .is_ok_and(|other| other == reference)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionMatrix {
    pub params: ResidueParams,
    pub size: usize,
    /// All multipartitions of `size`, most dominant first.
    pub rows: Vec<Multipartition>,
    /// Kleshchev labels, most dominant first.
    pub cols: Vec<Multipartition>,
    /// `graded[r][c]` is the coefficient of `rows[r]` in `G(cols[c])`.
    pub graded: Vec<Vec<LaurentPoly>>,
}

impl DecompositionMatrix {
    pub fn from_canonical(basis: &CanonicalBasis) -> Self {
        let params = basis.params().clone();
        let rows = enumerate_multipartitions(params.level(), basis.size());
        let cols: Vec<Multipartition> = basis.labels().cloned().collect();
        let graded = rows
            .iter()
            .map(|lam| basis.entries().iter().map(|e| e.vector.coeff(lam)).collect())
            .collect();
        Self { params, size: basis.size(), rows, cols, graded }
    }

    pub fn at_one(&self) -> Vec<Vec<BigInt>> {
        self.graded.iter().map(|row| row.iter().map(LaurentPoly::eval_at_one).collect()).collect()
    }

    pub fn entry(&self, row: &Multipartition, col: &Multipartition) -> Option<&LaurentPoly> {
        let r = self.rows.iter().position(|x| x == row)?;
        let c = self.cols.iter().position(|x| x == col)?;
        Some(&self.graded[r][c])
    }

    /// Violations of: unit diagonal, support dominating the column label,
    /// equal residue contents, nonnegative values at `v = 1`.
    pub fn contract_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let at_one = self.at_one();
        for (c, mu) in self.cols.iter().enumerate() {
            let mu_content = residue_content(&self.params, mu);
            for (r, lam) in self.rows.iter().enumerate() {
                let d = &self.graded[r][c];
                if lam == mu && !d.is_one() {
                    out.push(format!("d[{lam}][{mu}] = {d}, expected 1"));
                }
                if d.is_zero() {
                    continue;
                }
                if !lam.dominates_unchecked(mu) {
                    out.push(format!("d[{lam}][{mu}] = {d} but {lam} does not dominate {mu}"));
                }
                if residue_content(&self.params, lam) != mu_content {
                    out.push(format!("d[{lam}][{mu}] = {d} across residue blocks"));
                }
                if at_one[r][c].is_negative() {
                    out.push(format!("d[{lam}][{mu}](1) = {} is negative", at_one[r][c]));
                }
            }
        }
        out
    }

    /// Every graded entry has nonnegative coefficients.
    pub fn is_graded_positive(&self) -> bool {
        self.graded.iter().flatten().all(LaurentPoly::is_nonnegative)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rows": self.rows.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "cols": self.cols.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "graded": self.graded.iter().map(|row| row.iter().map(LaurentPoly::to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "at_one": self.at_one().iter().map(|row| row.iter().map(|x| Value::Number(x.to_string().parse().expect("integer"))).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }

    /// Graded CSV: header row of Kleshchev labels, one row per
    /// multipartition, entries as polynomial strings.
    pub fn to_csv_graded(&self) -> String {
        self.csv_with(|r, c| self.graded[r][c].to_string())
    }

    /// The same table specialised at `v = 1`.
    pub fn to_csv_at_one(&self) -> String {
        let at_one = self.at_one();
        self.csv_with(|r, c| at_one[r][c].to_string())
    }

    fn csv_with(&self, cell: impl Fn(usize, usize) -> String) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let header = std::iter::once(String::new()).chain(self.cols.iter().map(ToString::to_string));
        w.write_record(header).expect("in-memory write");
        for (r, lam) in self.rows.iter().enumerate() {
            let record = std::iter::once(lam.to_string()).chain((0..self.cols.len()).map(|c| cell(r, c)));
            w.write_record(record).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
    }
}

pub fn decomposition_matrix(params: &ResidueParams, n: usize) -> Result<DecompositionMatrix> {
    let m = DecompositionMatrix::from_canonical(&canonical_basis(params, n)?);
    let violations = m.contract_violations();
    if !violations.is_empty() {
        return Err(Error::ContractViolation(violations.join("; ")));
    }
    Ok(m)
}

/// Extremal-term analysis of one canonical basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementReport {
    pub label: Multipartition,
    /// Dominance-minimal elements of the support.
    pub minimal: Vec<Multipartition>,
    /// Coefficient of the (unique) minimal element, when there is one.
    pub minimal_coeff: Option<LaurentPoly>,
}

impl ElementReport {
    pub fn passed(&self) -> bool {
        matches!(self.minimal.as_slice(), [only] if *only == self.label)
            && self.minimal_coeff.as_ref().is_some_and(LaurentPoly::is_one)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainTheoremReport {
    pub params: ResidueParams,
    pub size: usize,
    pub elements: Vec<ElementReport>,
    /// The unique minimal support terms, collected over all elements,
    /// coincide with the Kleshchev multipartitions found by brute force.
    pub labels_match_kleshchev: bool,
    /// Set when the canonical basis could not be computed.
    pub error: Option<String>,
}

impl MainTheoremReport {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.labels_match_kleshchev && self.elements.iter().all(ElementReport::passed)
    }
}

fn dominance_minimal(support: &[&Multipartition]) -> Vec<Multipartition> {
    support
        .iter()
        .filter(|mu| !support.iter().any(|nu| nu != *mu && mu.dominates_unchecked(nu)))
        .map(|mu| (*mu).clone())
        .collect()
}

/// Checks that every canonical basis element has a unique dominance-minimal
/// support term, equal to its label, with coefficient exactly 1, and that
/// these minimal terms are precisely the Kleshchev multipartitions.
pub fn verify_main_theorem(params: &ResidueParams, n: usize) -> MainTheoremReport {
    let mut report = MainTheoremReport {
        params: params.clone(),
        size: n,
        elements: Vec::new(),
        labels_match_kleshchev: false,
        error: None,
    };
    let basis = match canonical_basis(params, n) {
        Ok(b) => b,
        Err(e) => {
            report.error = Some(e.to_string());
            return report;
        }
    };
    for e in basis.entries() {
        let support: Vec<&Multipartition> = e.vector.support().collect();
        let minimal = dominance_minimal(&support);
        let minimal_coeff = match minimal.as_slice() {
            [only] => Some(e.vector.coeff(only)),
            _ => None,
        };
        report.elements.push(ElementReport { label: e.label.clone(), minimal, minimal_coeff });
    }
    let extracted: BTreeSet<Multipartition> = report
        .elements
        .iter()
        .filter_map(|r| match r.minimal.as_slice() {
            [only] => Some(only.clone()),
            _ => None,
        })
        .collect();
    let brute: BTreeSet<Multipartition> = enumerate_multipartitions(params.level(), n)
        .into_iter()
        .filter(|lam| is_kleshchev(params, lam))
        .collect();
    report.labels_match_kleshchev = extracted.len() == report.elements.len() && extracted == brute;
    report
}
