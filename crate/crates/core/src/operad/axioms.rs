//! Exhaustive verification of the operad axioms on basis elements.

use serde_json::json;

use crate::error::Result;
use crate::linalg::Permutation;
use crate::report::CheckReport;

use super::truncated::TruncatedOperad;

/// Checks unit, sequential, parallel and equivariance identities on every
/// triple of basis elements for which all terms are defined under truncation.
///
/// Equivariance is checked for adjacent transpositions only; they generate
/// each `𝔖_n`, and the action matrices already satisfy the Coxeter relations.
pub fn check_operad_axioms(p: &TruncatedOperad) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    check_units(p, &mut report)?;
    check_sequential(p, &mut report)?;
    check_parallel(p, &mut report)?;
    check_equivariance(p, &mut report)?;
    Ok(report)
}

fn check_units(p: &TruncatedOperad, report: &mut CheckReport) -> Result<()> {
    let n_max = p.max_arity();
    let unit = p.unit().to_vec();
    for n in 0..=n_max {
        for a in 0..p.dim(n) {
            let x = p.basis(n, a);
            let left = p.compose(1, n, 1, &unit, &x)?;
            report.record(left == x, || format!("1 ∘_1 p = p (n={n})"), || json!({"arity": n, "basis": a}));
            for i in 1..=n {
                let right = p.compose(n, 1, i, &x, &unit)?;
                report.record(
                    right == x,
                    || format!("p ∘_{i} 1 = p (n={n})"),
                    || json!({"arity": n, "slot": i, "basis": a}),
                );
            }
        }
    }
    Ok(())
}

fn check_sequential(p: &TruncatedOperad, report: &mut CheckReport) -> Result<()> {
    let n_max = p.max_arity();
    for m in 1..=n_max {
        for n in 1..=n_max + 1 - m {
            for l in 0..=n_max + 2 - m - n {
                for i in 1..=m {
                    for j in 1..=n {
                        for a in 0..p.dim(m) {
                            let f = p.basis(m, a);
                            for b in 0..p.dim(n) {
                                let g = p.basis(n, b);
                                let fg = p.compose(m, n, i, &f, &g)?;
                                for c in 0..p.dim(l) {
                                    let h = p.basis(l, c);
                                    let lhs = p.compose(m + n - 1, l, i + j - 1, &fg, &h)?;
                                    let gh = p.compose(n, l, j, &g, &h)?;
                                    let rhs = p.compose(m, n + l - 1, i, &f, &gh)?;
                                    report.record(
                                        lhs == rhs,
                                        || format!("(f∘_{i}g)∘_{}h = f∘_{i}(g∘_{j}h)", i + j - 1),
                                        || json!({"arities": [m, n, l], "slots": [i, j], "basis": [a, b, c]}),
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_parallel(p: &TruncatedOperad, report: &mut CheckReport) -> Result<()> {
    let n_max = p.max_arity();
    for m in 2..=n_max {
        for n in 0..=n_max + 1 - m {
            for l in 0..=n_max + 2 - m - n {
                if m + l - 1 > n_max {
                    continue;
                }
                for i in 1..m {
                    for k in i + 1..=m {
                        for a in 0..p.dim(m) {
                            let f = p.basis(m, a);
                            for b in 0..p.dim(n) {
                                let g = p.basis(n, b);
                                let fg = p.compose(m, n, i, &f, &g)?;
                                for c in 0..p.dim(l) {
                                    let h = p.basis(l, c);
                                    let lhs = p.compose(m + n - 1, l, k + n - 1, &fg, &h)?;
                                    let fh = p.compose(m, l, k, &f, &h)?;
                                    let rhs = p.compose(m + l - 1, n, i, &fh, &g)?;
                                    report.record(
                                        lhs == rhs,
                                        || format!("(f∘_{i}g)∘_{}h = (f∘_{k}h)∘_{i}g", k + n - 1),
                                        || json!({"arities": [m, n, l], "slots": [i, k], "basis": [a, b, c]}),
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_equivariance(p: &TruncatedOperad, report: &mut CheckReport) -> Result<()> {
    let n_max = p.max_arity();
    for m in 1..=n_max {
        for n in 0..=n_max + 1 - m {
            let out = m + n - 1;
            for i in 1..=m {
                for a in 0..p.dim(m) {
                    let f = p.basis(m, a);
                    for b in 0..p.dim(n) {
                        let g = p.basis(n, b);
                        // (f·s) ∘_i g = (f ∘_{s(i)} g)·s', s' the block permutation
                        for k in 0..m.saturating_sub(1) {
                            let s = Permutation::adjacent(m, k);
                            let fs = p.act_adjacent(m, k, &f)?;
                            let lhs = p.compose(m, n, i, &fs, &g)?;
                            let inner = p.compose(m, n, s.apply(i - 1) + 1, &f, &g)?;
                            let rhs = p.act(out, &s.block_substitute(i - 1, n), &inner)?;
                            report.record(
                                lhs == rhs,
                                || format!("(f·s{k})∘_{i}g = (f∘_{}g)·s'", s.apply(i - 1) + 1),
                                || json!({"arities": [m, n], "slot": i, "transposition": k, "basis": [a, b]}),
                            );
                        }
                        // f ∘_i (g·t) = (f ∘_i g)·t shifted into the block of slot i
                        for k in 0..n.saturating_sub(1) {
                            let t = Permutation::adjacent(n, k);
                            let gt = p.act_adjacent(n, k, &g)?;
                            let lhs = p.compose(m, n, i, &f, &gt)?;
                            let inner = p.compose(m, n, i, &f, &g)?;
                            let rhs = p.act(out, &t.shifted(i - 1, out), &inner)?;
                            report.record(
                                lhs == rhs,
                                || format!("f∘_{i}(g·s{k}) = (f∘_{i}g)·s{}", k + i - 1),
                                || json!({"arities": [m, n], "slot": i, "transposition": k, "basis": [a, b]}),
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(())
}
