//! Self-checks shared by the `verify` command and the acceptance suite.

use std::collections::BTreeSet;
use std::fmt;

use crate::canonical::{canonical_basis, order_independence_check, verify_main_theorem, DecompositionMatrix};
use crate::crystal::{e_tilde, epsilon, f_tilde, phi};
use crate::fock::{e_op, f_op, h_weight, tensor_action, ActionConvention, FockVector, TensorOp};
use crate::mpart::{addable_nodes, enumerate_multipartitions, removable_nodes, Modulus, Multipartition, Residue, ResidueParams};
use crate::poly::LaurentPoly;

/// Residues worth testing at `lam`: all of them for finite `r`, otherwise
/// the active ones and their neighbours.
pub fn test_residues(params: &ResidueParams, lam: &Multipartition) -> Vec<Residue> {
    match params.modulus() {
        Modulus::Finite(r) => (0..i64::from(r)).collect(),
        Modulus::Infinite => {
            let active = params.active_residues(lam);
            let set: BTreeSet<Residue> = active.iter().flat_map(|&i| [i - 1, i, i + 1]).collect();
            set.into_iter().collect()
        }
    }
}

/// `[e_i, f_j] = delta_ij [N_i]` on the basis vector `lam`, for all test
/// residues `i`, `j`.
pub fn commutator_holds(conv: ActionConvention, params: &ResidueParams, lam: &Multipartition) -> bool {
    let x = FockVector::basis(params, lam);
    let residues = test_residues(params, lam);
    residues.iter().all(|&i| {
        residues.iter().all(|&j| {
            let lhs = e_op(conv, &f_op(conv, &x, j), i).difference(&f_op(conv, &e_op(conv, &x, i), j));
            let rhs = if i == j {
                let n = h_weight(params, lam, i);
                let q = LaurentPoly::quantum_int(u32::try_from(n.unsigned_abs()).expect("small weight"));
                x.scale(&if n < 0 { -q } else { q })
            } else {
                FockVector::zero(params)
            };
            lhs == rhs
        })
    })
}

/// The direct `Gamma` action agrees with the tensor-product computation.
pub fn tensor_agrees(params: &ResidueParams, lam: &Multipartition) -> bool {
    let x = FockVector::basis(params, lam);
    test_residues(params, lam).into_iter().all(|i| {
        tensor_action(&x, i, TensorOp::F) == f_op(ActionConvention::Gamma, &x, i)
            && tensor_action(&x, i, TensorOp::E) == e_op(ActionConvention::Gamma, &x, i)
    })
}

/// Crystal axioms at `lam`: the Kashiwara operators are mutually inverse,
/// move `epsilon` and `phi` by one, `phi - epsilon` is the number of
/// addable minus removable `i`-nodes, and `epsilon` counts how often
/// `e_tilde` applies.
pub fn crystal_axioms_hold(params: &ResidueParams, lam: &Multipartition) -> bool {
    test_residues(params, lam).into_iter().all(|i| {
        let (eps, ph) = (epsilon(params, lam, i), phi(params, lam, i));
        let weight_ok = ph as i64 - eps as i64
            == addable_nodes(params, lam, i).len() as i64 - removable_nodes(params, lam, i).len() as i64;
        let down_ok = match e_tilde(params, lam, i) {
            None => eps == 0,
            Some(mu) => {
                f_tilde(params, &mu, i).as_ref() == Some(lam)
                    && epsilon(params, &mu, i) + 1 == eps
                    && phi(params, &mu, i) == ph + 1
            }
        };
        let up_ok = match f_tilde(params, lam, i) {
            None => ph == 0,
            Some(mu) => e_tilde(params, &mu, i).as_ref() == Some(lam),
        };
        let mut k = 0;
        let mut cur = lam.clone();
        while let Some(next) = e_tilde(params, &cur, i) {
            cur = next;
            k += 1;
        }
        weight_ok && down_ok && up_ok && k == eps
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub checks: Vec<Check>,
    /// Facts reported without being required, e.g. graded positivity.
    pub observations: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "{mark} {}", c.name)?;
            } else {
                writeln!(f, "{mark} {}: {}", c.name, c.detail)?;
            }
        }
        for o in &self.observations {
            writeln!(f, "NOTE {o}")?;
        }
        Ok(())
    }
}

fn first_failure<'a>(
    lams: impl IntoIterator<Item = &'a Multipartition>,
    ok: impl Fn(&Multipartition) -> bool,
) -> Option<&'a Multipartition> {
    lams.into_iter().find(|lam| !ok(lam))
}

/// Runs every self-check for all sizes `0..=max_n`.
pub fn run_suite(params: &ResidueParams, max_n: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::default();
    let all: Vec<Multipartition> =
        (0..=max_n).flat_map(|n| enumerate_multipartitions(params.level(), n)).collect();

    let bad = first_failure(&all, |lam| crystal_axioms_hold(params, lam));
    report.push("crystal axioms", bad.is_none(), bad.map(|l| format!("fails at {l}")).unwrap_or_default());
    for conv in [ActionConvention::Gamma, ActionConvention::Dual] {
        let bad = first_failure(&all, |lam| commutator_holds(conv, params, lam));
        report.push(
            format!("commutator identity ({conv:?})"),
            bad.is_none(),
            bad.map(|l| format!("fails at {l}")).unwrap_or_default(),
        );
    }
    let bad = first_failure(&all, |lam| tensor_agrees(params, lam));
    report.push("tensor agreement", bad.is_none(), bad.map(|l| format!("fails at {l}")).unwrap_or_default());

    for n in 0..=max_n {
        let basis = match canonical_basis(params, n) {
            Ok(b) => b,
            Err(e) => {
                report.push(format!("canonical basis n={n}"), false, e.to_string());
                continue;
            }
        };
        report.push(format!("canonical basis n={n}"), true, format!("{} elements", basis.len()));
        let main = verify_main_theorem(params, n);
        report.push(format!("leading terms are Kleshchev n={n}"), main.passed(), main.error.clone().unwrap_or_default());
        report.push(format!("order independence n={n}"), order_independence_check(params, n, seed), "");
        let d = DecompositionMatrix::from_canonical(&basis);
        let violations = d.contract_violations();
        report.push(format!("decomposition contracts n={n}"), violations.is_empty(), violations.join("; "));
        let positive = if d.is_graded_positive() { "yes" } else { "no" };
        report.observations.push(format!("graded positivity n={n}: {positive}"));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::ActionConvention::{Dual, Gamma};

    #[test]
    fn commutator_small_sweep() {
        for conv in [Gamma, Dual] {
            for params in [
                ResidueParams::finite(2, &[0, 1]).unwrap(),
                ResidueParams::finite(3, &[0]).unwrap(),
                ResidueParams::infinite(&[0, 2]).unwrap(),
            ] {
                for n in 0..=3 {
                    for lam in enumerate_multipartitions(params.level(), n) {
                        assert!(commutator_holds(conv, &params, &lam), "{conv:?} {params} {lam}");
                    }
                }
            }
        }
    }

    #[test]
    fn tensor_and_crystal_small_sweep() {
        for params in [ResidueParams::finite(2, &[0, 1]).unwrap(), ResidueParams::infinite(&[0, 0]).unwrap()] {
            for n in 0..=3 {
                for lam in enumerate_multipartitions(2, n) {
                    assert!(tensor_agrees(&params, &lam), "{params} {lam}");
                    assert!(crystal_axioms_hold(&params, &lam), "{params} {lam}");
                }
            }
        }
    }

    #[test]
    fn suite_passes_small() {
        let rep = run_suite(&ResidueParams::finite(2, &[0, 0]).unwrap(), 3, 1);
        assert!(rep.passed(), "{rep}");
        assert!(rep.to_string().starts_with("PASS crystal axioms\n"));
    }
}
