//! Exhaustive axiom suites over finite structures.
//!
//! Each checker quantifies an axiom over every tuple of elements and
//! reports the outcome as data: violations are counterexamples, not
//! errors. Errors are reserved for structurally unusable input (missing
//! tables, broken join laws). Counterexample lists are capped at
//! [`MAX_COUNTEREXAMPLES`] entries while the full violation count is
//! retained, and their order is row-major regardless of parallelism.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::scan_rows;
use crate::table::{Algebra, FiniteStructure};

/// Cap on the number of stored counterexamples per axiom.
pub const MAX_COUNTEREXAMPLES: usize = 16;

/// Outcome of checking one axiom over all tuples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    /// Stable axiom id, e.g. `cubic.b`, `mr`, `caret.e.ii`, `thmMR.iii`.
    pub axiom: String,
    pub passed: bool,
    /// First counterexample tuples in scan order, capped.
    pub counterexamples: Vec<Vec<usize>>,
    /// Number of quantified tuples evaluated.
    pub checked: u64,
    /// Total number of violating tuples (may exceed the stored list).
    pub violations: u64,
}

impl AxiomReport {
    fn new(axiom: &str, checked: u64, vios: Vec<Vec<usize>>) -> AxiomReport {
        let violations = vios.len() as u64;
        AxiomReport {
            axiom: axiom.to_string(),
            passed: violations == 0,
            counterexamples: vios.into_iter().take(MAX_COUNTEREXAMPLES).collect(),
            checked,
            violations,
        }
    }
}

/// Per-row scan result: violations plus the number of tuples visited.
type Row = (Vec<Vec<usize>>, u64);

fn sweep<F>(parallel: bool, n: usize, f: F) -> (Vec<Vec<usize>>, u64)
where
    F: Fn(usize) -> Row + Sync,
{
    let rows = scan_rows(parallel, n, |x| vec![f(x)]);
    let mut vios = Vec::new();
    let mut checked = 0;
    for (v, c) in rows {
        vios.extend(v);
        checked += c;
    }
    (vios, checked)
}

/// The product `xy = delta(1, delta(x v y, y)) v y` used by the cubic
/// axioms (e) and (f); `None` when a needed delta entry is missing.
fn xy_product(alg: &Algebra, x: usize, y: usize) -> Option<usize> {
    let j = alg.join(x, y);
    let d = alg.delta(j, y)?;
    let r = alg.delta(alg.one(), d)?;
    Some(alg.join(r, y))
}

/// Check the cubic axioms (a)-(f) against the delta table.
pub fn check_cubic(s: &FiniteStructure) -> Result<Vec<AxiomReport>> {
    check_cubic_on(&Algebra::new(s)?, true)
}

pub fn check_cubic_on(alg: &Algebra, parallel: bool) -> Result<Vec<AxiomReport>> {
    if !alg.structure().has_delta() {
        return Err(Error::MissingTable("delta"));
    }
    let n = alg.size();
    let one = alg.one();

    // (a) x <= y implies delta(y,x) v x = y
    let (vios, checked) = sweep(parallel, n, |x| {
        let mut v = Vec::new();
        let mut c = 0;
        for y in 0..n {
            if !alg.leq(x, y) {
                continue;
            }
            c += 1;
            let ok = alg.delta(y, x).map(|d| alg.join(d, x) == y);
            if ok != Some(true) {
                v.push(vec![x, y]);
            }
        }
        (v, c)
    });
    let mut reports = vec![AxiomReport::new("cubic.a", checked, vios)];

    // (b) x <= y <= z implies delta(z, delta(y,x)) = delta(delta(z,y), delta(z,x))
    let (vios, checked) = sweep(parallel, n, |x| {
        let mut v = Vec::new();
        let mut c = 0;
        for y in 0..n {
            if !alg.leq(x, y) {
                continue;
            }
            for z in 0..n {
                if !alg.leq(y, z) {
                    continue;
                }
                c += 1;
                let holds = (|| {
                    let dyx = alg.delta(y, x)?;
                    if !alg.leq(dyx, z) {
                        return Some(false);
                    }
                    let lhs = alg.delta(z, dyx)?;
                    let dzy = alg.delta(z, y)?;
                    let dzx = alg.delta(z, x)?;
                    if !alg.leq(dzx, dzy) {
                        return Some(false);
                    }
                    Some(lhs == alg.delta(dzy, dzx)?)
                })();
                if holds != Some(true) {
                    v.push(vec![x, y, z]);
                }
            }
        }
        (v, c)
    });
    reports.push(AxiomReport::new("cubic.b", checked, vios));

    // (c) x <= y implies delta(y, delta(y,x)) = x
    let (vios, checked) = sweep(parallel, n, |x| {
        let mut v = Vec::new();
        let mut c = 0;
        for y in 0..n {
            if !alg.leq(x, y) {
                continue;
            }
            c += 1;
            let holds = (|| {
                let d = alg.delta(y, x)?;
                if !alg.leq(d, y) {
                    return Some(false);
                }
                Some(alg.delta(y, d)? == x)
            })();
            if holds != Some(true) {
                v.push(vec![x, y]);
            }
        }
        (v, c)
    });
    reports.push(AxiomReport::new("cubic.c", checked, vios));

    // (d) x <= y <= z implies delta(z,x) <= delta(z,y)
    let (vios, checked) = sweep(parallel, n, |x| {
        let mut v = Vec::new();
        let mut c = 0;
        for y in 0..n {
            if !alg.leq(x, y) {
                continue;
            }
            for z in 0..n {
                if !alg.leq(y, z) {
                    continue;
                }
                c += 1;
                let holds = (|| {
                    let dzx = alg.delta(z, x)?;
                    let dzy = alg.delta(z, y)?;
                    Some(alg.leq(dzx, dzy))
                })();
                if holds != Some(true) {
                    v.push(vec![x, y, z]);
                }
            }
        }
        (v, c)
    });
    reports.push(AxiomReport::new("cubic.d", checked, vios));

    // (e) (xy)y = x v y
    let (vios, checked) = sweep(parallel, n, |x| {
        let mut v = Vec::new();
        for y in 0..n {
            let holds = (|| {
                let p = xy_product(alg, x, y)?;
                Some(xy_product(alg, p, y)? == alg.join(x, y))
            })();
            if holds != Some(true) {
                v.push(vec![x, y]);
            }
        }
        (v, n as u64)
    });
    reports.push(AxiomReport::new("cubic.e", checked, vios));

    // (f) x(yz) = y(xz)
    let (vios, checked) = sweep(parallel, n, |x| {
        let mut v = Vec::new();
        for y in 0..n {
            for z in 0..n {
                let holds = (|| {
                    let yz = xy_product(alg, y, z)?;
                    let xz = xy_product(alg, x, z)?;
                    Some(xy_product(alg, x, yz)? == xy_product(alg, y, xz)?)
                })();
                if holds != Some(true) {
                    v.push(vec![x, y, z]);
                }
            }
        }
        (v, (n * n) as u64)
    });
    reports.push(AxiomReport::new("cubic.f", checked, vios));

    let _ = one;
    Ok(reports)
}

/// Check the MR meet condition: for `a, b < x`,
/// `delta(x,a) v b < x` exactly when `a` and `b` have no meet.
pub fn check_mr_axiom(s: &FiniteStructure) -> Result<AxiomReport> {
    check_mr_axiom_on(&Algebra::new(s)?, true)
}

pub fn check_mr_axiom_on(alg: &Algebra, parallel: bool) -> Result<AxiomReport> {
    if !alg.structure().has_delta() {
        return Err(Error::MissingTable("delta"));
    }
    let n = alg.size();
    let (vios, checked) = sweep(parallel, n, |x| {
        let mut v = Vec::new();
        let mut c = 0;
        for a in 0..n {
            if !alg.lt(a, x) {
                continue;
            }
            for b in 0..n {
                if !alg.lt(b, x) {
                    continue;
                }
                c += 1;
                let holds = (|| {
                    let d = alg.delta(x, a)?;
                    let strictly_below = alg.join(d, b) != x;
                    Some(strictly_below == alg.glb(a, b).is_none())
                })();
                if holds != Some(true) {
                    v.push(vec![a, b, x]);
                }
            }
        }
        (v, c)
    });
    Ok(AxiomReport::new("mr", checked, vios))
}

/// Check the caret/implication axioms (a)-(h), optionally with the
/// extra axiom (i) that pins the caret to `x /\ delta(x v y, y)`.
pub fn check_caret_axioms(s: &FiniteStructure, include_extra: bool) -> Result<Vec<AxiomReport>> {
    check_caret_axioms_on(&Algebra::new(s)?, include_extra, true)
}

pub fn check_caret_axioms_on(
    alg: &Algebra,
    include_extra: bool,
    parallel: bool,
) -> Result<Vec<AxiomReport>> {
    if !alg.structure().has_caret() {
        return Err(Error::MissingTable("caret"));
    }
    let n = alg.size();
    let one = alg.one();
    let ct = |a: usize, b: usize| alg.caret(a, b).expect("caret table present");
    let arr = |x: usize, y: usize| alg.join(y, ct(one, ct(x, y)));
    let mut reports = Vec::new();

    // (a) x v (y ^ x) = x v y
    let (vios, checked) = sweep(parallel, n, |x| {
        let mut v = Vec::new();
        for y in 0..n {
            if alg.join(x, ct(y, x)) != alg.join(x, y) {
                v.push(vec![x, y]);
            }
        }
        (v, n as u64)
    });
    reports.push(AxiomReport::new("caret.a", checked, vios));

    // (b) (1 ^ x) ^ (1 ^ y) = 1 ^ (x ^ y)
    let (vios, checked) = sweep(parallel, n, |x| {
        let mut v = Vec::new();
        for y in 0..n {
            if ct(ct(one, x), ct(one, y)) != ct(one, ct(x, y)) {
                v.push(vec![x, y]);
            }
        }
        (v, n as u64)
    });
    reports.push(AxiomReport::new("caret.b", checked, vios));

    // (c) 1 ^ (1 ^ x) = x
    let (vios, checked) = sweep(parallel, n, |x| {
        let mut v = Vec::new();
        if ct(one, ct(one, x)) != x {
            v.push(vec![x]);
        }
        (v, 1)
    });
    reports.push(AxiomReport::new("caret.c", checked, vios));

    // (d) x <= y implies 1 ^ x <= 1 ^ y
    let (vios, checked) = sweep(parallel, n, |x| {
        let mut v = Vec::new();
        let mut c = 0;
        for y in 0..n {
            if !alg.leq(x, y) {
                continue;
            }
            c += 1;
            if !alg.leq(ct(one, x), ct(one, y)) {
                v.push(vec![x, y]);
            }
        }
        (v, c)
    });
    reports.push(AxiomReport::new("caret.d", checked, vios));

    // (e.i) (x -> y) -> y = x v y
    let (vios, checked) = sweep(parallel, n, |x| {
        let mut v = Vec::new();
        for y in 0..n {
            if arr(arr(x, y), y) != alg.join(x, y) {
                v.push(vec![x, y]);
            }
        }
        (v, n as u64)
    });
    reports.push(AxiomReport::new("caret.e.i", checked, vios));

    // (e.ii) x -> (y -> z) = y -> (x -> z)
    let (vios, checked) = sweep(parallel, n, |x| {
        let mut v = Vec::new();
        for y in 0..n {
            for z in 0..n {
                if arr(x, arr(y, z)) != arr(y, arr(x, z)) {
                    v.push(vec![x, y, z]);
                }
            }
        }
        (v, (n * n) as u64)
    });
    reports.push(AxiomReport::new("caret.e.ii", checked, vios));

    // (f) (x v y) -> ((x v y) ^ y) = 1 ^ (x -> y)
    let (vios, checked) = sweep(parallel, n, |x| {
        let mut v = Vec::new();
        for y in 0..n {
            let j = alg.join(x, y);
            if arr(j, ct(j, y)) != ct(one, arr(x, y)) {
                v.push(vec![x, y]);
            }
        }
        (v, n as u64)
    });
    reports.push(AxiomReport::new("caret.f", checked, vios));

    // (g) x ^ y <= (x v y) ^ y
    let (vios, checked) = sweep(parallel, n, |x| {
        let mut v = Vec::new();
        for y in 0..n {
            if !alg.leq(ct(x, y), ct(alg.join(x, y), y)) {
                v.push(vec![x, y]);
            }
        }
        (v, n as u64)
    });
    reports.push(AxiomReport::new("caret.g", checked, vios));

    // (h) x ^ y <= x
    let (vios, checked) = sweep(parallel, n, |x| {
        let mut v = Vec::new();
        for y in 0..n {
            if !alg.leq(ct(x, y), x) {
                v.push(vec![x, y]);
            }
        }
        (v, n as u64)
    });
    reports.push(AxiomReport::new("caret.h", checked, vios));

    if include_extra {
        // (i) (x v y) ^ y <= x -> (x ^ y)
        let (vios, checked) = sweep(parallel, n, |x| {
            let mut v = Vec::new();
            for y in 0..n {
                if !alg.leq(ct(alg.join(x, y), y), arr(x, ct(x, y))) {
                    v.push(vec![x, y]);
                }
            }
            (v, n as u64)
        });
        reports.push(AxiomReport::new("extra.i", checked, vios));
    }

    Ok(reports)
}

/// Check the bottomed-lattice characterisation. A formal bottom with
/// index `size` is adjoined; for every real `x`, the reflection within
/// `[0, x]` must be monotone (i), involutive (ii), and detect disjointness:
/// `delta_x(a) v b < x` exactly when the bottomed meet `a /\ b` is `0` (iii).
pub fn check_thm_mr_conditions(s: &FiniteStructure) -> Result<Vec<AxiomReport>> {
    check_thm_mr_conditions_on(&Algebra::new(s)?, true)
}

pub fn check_thm_mr_conditions_on(alg: &Algebra, parallel: bool) -> Result<Vec<AxiomReport>> {
    if !alg.structure().has_delta() {
        return Err(Error::MissingTable("delta"));
    }
    let n = alg.size();
    let bot = n; // index of the adjoined bottom in counterexample tuples
    let le0 = |a: usize, b: usize| a == bot || (b != bot && alg.leq(a, b));
    let jn0 = |a: usize, b: usize| {
        if a == bot {
            b
        } else if b == bot {
            a
        } else {
            alg.join(a, b)
        }
    };
    let dx0 = |x: usize, a: usize| -> Option<usize> {
        if a == bot {
            Some(bot)
        } else {
            alg.delta(x, a)
        }
    };
    // Meet in the bottomed lattice; `None` when the bottomed poset is
    // not a lattice at this pair (counts as a violation of (iii)).
    let meet0 = |a: usize, b: usize| -> Option<usize> {
        if a == bot || b == bot {
            return Some(bot);
        }
        match alg.glb(a, b) {
            Some(g) => Some(g),
            None => {
                let has_lb = (0..n).any(|z| alg.leq(z, a) && alg.leq(z, b));
                if has_lb {
                    None
                } else {
                    Some(bot)
                }
            }
        }
    };

    let mut reports = Vec::new();

    // (i) a <= b <= x implies delta_x(a) <= delta_x(b)
    let (vios, checked) = sweep(parallel, n, |x| {
        let mut v = Vec::new();
        let mut c = 0;
        for a in 0..=n {
            for b in 0..=n {
                if !(le0(a, b) && le0(b, x)) {
                    continue;
                }
                c += 1;
                let holds = (|| Some(le0(dx0(x, a)?, dx0(x, b)?)))();
                if holds != Some(true) {
                    v.push(vec![x, a, b]);
                }
            }
        }
        (v, c)
    });
    reports.push(AxiomReport::new("thmMR.i", checked, vios));

    // (ii) delta_x is an involution of [0, x]
    let (vios, checked) = sweep(parallel, n, |x| {
        let mut v = Vec::new();
        let mut c = 0;
        for a in 0..=n {
            if !le0(a, x) {
                continue;
            }
            c += 1;
            let holds = (|| {
                let d = dx0(x, a)?;
                if !le0(d, x) {
                    return Some(false);
                }
                Some(dx0(x, d)? == a)
            })();
            if holds != Some(true) {
                v.push(vec![x, a]);
            }
        }
        (v, c)
    });
    reports.push(AxiomReport::new("thmMR.ii", checked, vios));

    // (iii) for a, b < x: delta_x(a) v b < x iff a /\ b = 0
    let (vios, checked) = sweep(parallel, n, |x| {
        let mut v = Vec::new();
        let mut c = 0;
        for a in 0..=n {
            if !(le0(a, x) && a != x) {
                continue;
            }
            for b in 0..=n {
                if !(le0(b, x) && b != x) {
                    continue;
                }
                c += 1;
                let holds = (|| {
                    let d = dx0(x, a)?;
                    let vjoin = jn0(d, b);
                    let strictly_below = le0(vjoin, x) && vjoin != x;
                    Some(strictly_below == (meet0(a, b)? == bot))
                })();
                if holds != Some(true) {
                    v.push(vec![x, a, b]);
                }
            }
        }
        (v, c)
    });
    reports.push(AxiomReport::new("thmMR.iii", checked, vios));

    Ok(reports)
}

/// Outcome of the caret substitution-freedom check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PFreedom {
    pub report: AxiomReport,
    /// Largest number of admissible substitute values seen at an
    /// incomparable pair.
    pub max_incomparable_choices: usize,
}

/// Check that every admissible caret substitute yields the same derived
/// reflection: for each pair `(x, y)`, a value `p` is admissible when it
/// is pinned to `delta(x,y)` (for `y <= x`) or lies below both `x` and
/// `delta(x v y, y)`; all of them must give the same `y v delta(1, p)`.
///
/// Enumeration is exhaustive, so the structure size is capped at 27.
pub fn check_p_freedom(s: &FiniteStructure) -> Result<PFreedom> {
    check_p_freedom_on(&Algebra::new(s)?, true)
}

pub fn check_p_freedom_on(alg: &Algebra, parallel: bool) -> Result<PFreedom> {
    if !alg.structure().has_delta() {
        return Err(Error::MissingTable("delta"));
    }
    let n = alg.size();
    if n > 27 {
        return Err(Error::SizeOutOfRange { got: n, max: 27 });
    }
    let one = alg.one();

    let rows = scan_rows(parallel, n, |x| {
        let mut vios = Vec::new();
        let mut checked = 0u64;
        let mut max_choices = 0usize;
        for y in 0..n {
            let Some(dj) = alg.delta(alg.join(x, y), y) else {
                vios.push(vec![x, y]);
                continue;
            };
            let admissible: Vec<usize> = if alg.leq(y, x) {
                match alg.delta(x, y) {
                    Some(d) => vec![d],
                    None => {
                        vios.push(vec![x, y]);
                        continue;
                    }
                }
            } else {
                (0..n).filter(|&p| alg.leq(p, x) && alg.leq(p, dj)).collect()
            };
            if !alg.leq(y, x) && !alg.leq(x, y) {
                max_choices = max_choices.max(admissible.len());
            }
            let target = (|| Some(alg.join(y, alg.delta(one, dj)?)))();
            for &p in &admissible {
                checked += 1;
                let got = (|| Some(alg.join(y, alg.delta(one, p)?)))();
                if got.is_none() || got != target {
                    vios.push(vec![x, y, p]);
                }
            }
        }
        vec![(vios, checked, max_choices)]
    });

    let mut vios = Vec::new();
    let mut checked = 0;
    let mut max_choices = 0;
    for (v, c, m) in rows {
        vios.extend(v);
        checked += c;
        max_choices = max_choices.max(m);
    }
    Ok(PFreedom {
        report: AxiomReport::new("p-freedom", checked, vios),
        max_incomparable_choices: max_choices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolean::Universe;
    use crate::table::ABSENT;

    fn u(n: u8) -> Universe {
        Universe::new(n).unwrap()
    }

    fn all_pass(reports: &[AxiomReport]) -> bool {
        reports.iter().all(|r| r.passed)
    }

    /// Diamond minus bottom with identity-compatible delta (see table.rs).
    fn diamond() -> FiniteStructure {
        let n = 4;
        let mut join = vec![0usize; n * n];
        let leq_pairs = [(1usize, 0usize), (2, 0), (3, 0), (2, 1), (3, 1)];
        let leq = |a: usize, b: usize| a == b || leq_pairs.contains(&(a, b));
        for a in 0..n {
            for b in 0..n {
                join[a * n + b] = if leq(a, b) {
                    b
                } else if leq(b, a) {
                    a
                } else {
                    1
                };
            }
        }
        let mut delta = vec![ABSENT; n * n];
        for a in 0..n {
            for b in 0..n {
                if leq(b, a) {
                    delta[a * n + b] = b;
                }
            }
        }
        FiniteStructure::from_tables(n, 0, join, None, Some(delta)).unwrap()
    }

    #[test]
    fn cubic_axioms_hold_on_concrete_models() {
        for n in 0..=2u8 {
            let s = FiniteStructure::of_signed(u(n)).unwrap();
            assert!(all_pass(&check_cubic(&s).unwrap()), "signed n={n}");
            let i = FiniteStructure::of_intervals(u(n)).unwrap();
            assert!(all_pass(&check_cubic(&i).unwrap()), "intervals n={n}");
        }
    }

    #[test]
    fn corrupted_delta_fails_axiom_c_with_witness() {
        let s = FiniteStructure::of_signed(u(1)).unwrap();
        let mut delta = s.delta_table().unwrap().to_vec();
        // Corrupt delta(1, v): reflecting vertex 1 now returns the top.
        delta[s.one() * s.size() + 1] = s.one();
        let bad = FiniteStructure::from_tables(
            s.size(),
            s.one(),
            s.join_table().to_vec(),
            None,
            Some(delta),
        )
        .unwrap();
        let reports = check_cubic(&bad).unwrap();
        let c = reports.iter().find(|r| r.axiom == "cubic.c").unwrap();
        assert!(!c.passed);
        assert!(c.counterexamples.contains(&vec![1, bad.one()]));
        assert_eq!(c.violations as usize, c.counterexamples.len());
    }

    #[test]
    fn mr_axiom_passes_and_fails_where_expected() {
        for n in 0..=3u8 {
            let s = FiniteStructure::of_signed(u(n)).unwrap();
            assert!(check_mr_axiom(&s).unwrap().passed, "signed n={n}");
        }
        let r = check_mr_axiom(&diamond()).unwrap();
        assert!(!r.passed);
        assert!(!r.counterexamples.is_empty());
    }

    #[test]
    fn caret_axioms_hold_with_extra() {
        for n in 0..=2u8 {
            let s = FiniteStructure::of_signed(u(n)).unwrap();
            let reports = check_caret_axioms(&s, true).unwrap();
            assert_eq!(reports.len(), 10);
            assert!(all_pass(&reports), "signed n={n}");
        }
        let one = FiniteStructure::from_tables(1, 0, vec![0], Some(vec![0]), None).unwrap();
        assert!(all_pass(&check_caret_axioms(&one, true).unwrap()));
    }

    /// A caret variant strictly below `x /\ delta(x v y, y)` at one
    /// incomparable orbit keeps (a)-(h) but breaks the extra axiom (i).
    #[test]
    fn substitute_caret_fails_only_extra() {
        let s = FiniteStructure::of_signed(u(2)).unwrap();
        let n = s.size();
        // x = <{1},{}> (3), y = <{},{1}> (6); caret(x,y) = x, and the
        // vertex <{1},{2}> (5) lies strictly below it. The sign-swap
        // orbit partner entry (6,3) gets the swapped value (7).
        let mut caret = s.caret_table().unwrap().to_vec();
        assert_eq!(caret[3 * n + 6], 3);
        caret[3 * n + 6] = 5;
        caret[6 * n + 3] = 7;
        let variant = FiniteStructure::from_tables(
            n,
            s.one(),
            s.join_table().to_vec(),
            Some(caret),
            None,
        )
        .unwrap();
        let reports = check_caret_axioms(&variant, true).unwrap();
        for r in &reports {
            if r.axiom == "extra.i" {
                assert!(!r.passed, "extra axiom should reject the variant");
            } else {
                assert!(r.passed, "{} unexpectedly failed", r.axiom);
            }
        }
    }

    #[test]
    fn thm_mr_conditions() {
        let good = FiniteStructure::of_intervals(u(2)).unwrap();
        assert!(all_pass(&check_thm_mr_conditions(&good).unwrap()));
        let tiny = FiniteStructure::from_tables(1, 0, vec![0], None, Some(vec![0])).unwrap();
        assert!(all_pass(&check_thm_mr_conditions(&tiny).unwrap()));

        let reports = check_thm_mr_conditions(&diamond()).unwrap();
        let by_id = |id: &str| reports.iter().find(|r| r.axiom == id).unwrap();
        assert!(by_id("thmMR.i").passed);
        assert!(by_id("thmMR.ii").passed);
        let iii = by_id("thmMR.iii");
        assert!(!iii.passed);
        assert!(!iii.counterexamples.is_empty());
    }

    #[test]
    fn p_freedom_holds_and_counts_choices() {
        let s1 = FiniteStructure::of_signed(u(1)).unwrap();
        let p1 = check_p_freedom(&s1).unwrap();
        assert!(p1.report.passed);
        // At n = 1 every incomparable pair pins its substitute.
        assert_eq!(p1.max_incomparable_choices, 1);

        let s2 = FiniteStructure::of_signed(u(2)).unwrap();
        let p2 = check_p_freedom(&s2).unwrap();
        assert!(p2.report.passed);
        assert!(p2.max_incomparable_choices >= 2);
    }

    #[test]
    fn p_freedom_rejects_large_structures() {
        let s = FiniteStructure::of_signed(u(4)).unwrap();
        assert!(matches!(
            check_p_freedom(&s),
            Err(Error::SizeOutOfRange { got: 81, max: 27 })
        ));
    }

    #[test]
    fn reports_are_deterministic_across_modes() {
        let s = FiniteStructure::of_signed(u(2)).unwrap();
        let alg = Algebra::new(&s).unwrap();
        let seq = check_caret_axioms_on(&alg, true, false).unwrap();
        let par = check_caret_axioms_on(&alg, true, true).unwrap();
        assert_eq!(seq, par);
        let seq = check_cubic_on(&alg, false).unwrap();
        let par = check_cubic_on(&alg, true).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn report_serialization_shape() {
        let s = FiniteStructure::of_signed(u(1)).unwrap();
        let r = check_mr_axiom(&s).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.starts_with("{\"axiom\":\"mr\",\"passed\":true,"));
        assert!(json.contains("\"counterexamples\":[]"));
        assert!(json.contains("\"checked\":"));
    }
}
