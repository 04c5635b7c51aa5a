//! Similarity collapse of an MR algebra onto an implication lattice.
//!
//! Two elements are similar when each reflects into the other below the
//! join (`a ~ b` iff `delta(a v b, a) <= b` and symmetrically). On an MR
//! algebra the similarity classes carry well-defined meet, join, and
//! arrow operations induced by caret, star, and the implication; the
//! builder verifies that claim over every member pair instead of
//! trusting representatives.

use crate::axioms::AxiomReport;
use crate::error::{Error, Result};
use crate::table::{Algebra, FiniteStructure, ABSENT};

/// Reflection of `y` inside `x` (requires `y <= x`), as a hard error
/// when neither table provides it.
fn refl(alg: &Algebra, x: usize, y: usize) -> Result<usize> {
    alg.refl(x, y).ok_or(Error::DeltaGap(x, y))
}

/// `a` collapses into `b`: `delta(a v b, a) <= b`.
pub fn preceq(alg: &Algebra, a: usize, b: usize) -> Result<bool> {
    let d = refl(alg, alg.join(a, b), a)?;
    Ok(alg.leq(d, b))
}

/// Similarity: `a` and `b` collapse into each other.
pub fn simeq(alg: &Algebra, a: usize, b: usize) -> Result<bool> {
    Ok(preceq(alg, a, b)? && preceq(alg, b, a)?)
}

/// Star composition `a * b = a v delta(a v b, b)`.
pub fn star(alg: &Algebra, a: usize, b: usize) -> Result<usize> {
    let d = refl(alg, alg.join(a, b), b)?;
    Ok(alg.join(a, d))
}

/// Induced implication `a => b = delta(a v b, a) -> b` where
/// `x -> y = y v delta(1, delta(x v y, y))`.
pub fn implies(alg: &Algebra, a: usize, b: usize) -> Result<usize> {
    let d = refl(alg, alg.join(a, b), a)?;
    let j = alg.join(d, b);
    let inner = refl(alg, j, b)?;
    let outer = refl(alg, alg.one(), inner)?;
    Ok(alg.join(b, outer))
}

/// Caret value used for quotient meets: the caret table when present,
/// otherwise the meet `a /\ delta(a v b, b)` derived from delta.
fn caret_op(alg: &Algebra, a: usize, b: usize) -> Result<usize> {
    if let Some(c) = alg.caret(a, b) {
        return Ok(c);
    }
    alg.caret_from_delta(a, b)
        .ok_or_else(|| Error::Unsupported(format!("no caret value derivable at ({a},{b})")))
}

/// The implication lattice obtained by collapsing similarity classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientLattice {
    /// Similarity classes, each sorted, ordered by least member.
    pub classes: Vec<Vec<usize>>,
    /// Element index to class index.
    pub class_of: Vec<usize>,
    /// Class of the top element.
    pub one: usize,
    /// Class-level meet table, flat row-major.
    pub meet: Vec<usize>,
    /// Class-level join table, flat row-major.
    pub join: Vec<usize>,
    /// Class-level arrow table, flat row-major.
    pub arrow: Vec<usize>,
}

impl QuotientLattice {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Least member of class `i`, its canonical representative.
    pub fn rep(&self, i: usize) -> usize {
        self.classes[i][0]
    }

    pub fn meet_at(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.len() + j]
    }

    pub fn join_at(&self, i: usize, j: usize) -> usize {
        self.join[i * self.len() + j]
    }

    pub fn arrow_at(&self, i: usize, j: usize) -> usize {
        self.arrow[i * self.len() + j]
    }

    /// Class order derived from the join table.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.join_at(i, j) == j
    }
}

/// Ensure the algebra carries a delta table, synthesizing one from the
/// caret on comparable pairs when necessary.
fn with_delta(alg: &Algebra) -> Result<Option<Algebra>> {
    if alg.structure().has_delta() {
        return Ok(None);
    }
    if !alg.structure().has_caret() {
        return Err(Error::MissingTable("delta"));
    }
    let n = alg.size();
    let mut delta = vec![ABSENT; n * n];
    for x in 0..n {
        for y in 0..n {
            if alg.leq(y, x) {
                delta[x * n + y] = alg.caret(x, y).expect("caret table present");
            }
        }
    }
    let s = FiniteStructure::from_tables(
        n,
        alg.one(),
        alg.structure().join_table().to_vec(),
        alg.structure().caret_table().map(|t| t.to_vec()),
        Some(delta),
    )?;
    Ok(Some(Algebra::new(&s)?))
}

/// Collapse an MR algebra to its quotient implication lattice.
///
/// Fails with [`Error::NotMr`] when the MR meet condition does not hold,
/// and with [`Error::Congruence`] when any of the three induced
/// operations disagrees across members of a class.
pub fn build_quotient(alg: &Algebra) -> Result<QuotientLattice> {
    let owned;
    let alg = match with_delta(alg)? {
        Some(a) => {
            owned = a;
            &owned
        }
        None => alg,
    };

    let status = alg.is_mr()?;
    if !status.is_mr {
        let (a, b) = status.witness.expect("failing status carries a witness");
        return Err(Error::NotMr(format!(
            "no caret value for the pair ({a},{b}): the meet a /\\ delta(a v b, b) is missing"
        )));
    }

    let n = alg.size();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        if class_of[a] != usize::MAX {
            continue;
        }
        let idx = classes.len();
        let mut members = vec![a];
        class_of[a] = idx;
        for (b, slot) in class_of.iter_mut().enumerate().skip(a + 1) {
            if *slot == usize::MAX && simeq(alg, a, b)? {
                *slot = idx;
                members.push(b);
            }
        }
        classes.push(members);
    }

    // Similarity must be an equivalence for the classes to make sense.
    for a in 0..n {
        for b in 0..n {
            if simeq(alg, a, b)? != (class_of[a] == class_of[b]) {
                return Err(Error::Congruence(format!(
                    "similarity is not an equivalence at ({a},{b})"
                )));
            }
        }
    }

    let k = classes.len();
    let mut meet = vec![0usize; k * k];
    let mut join = vec![0usize; k * k];
    let mut arrow = vec![0usize; k * k];
    for i in 0..k {
        for j in 0..k {
            let (a, b) = (classes[i][0], classes[j][0]);
            meet[i * k + j] = class_of[caret_op(alg, a, b)?];
            join[i * k + j] = class_of[star(alg, a, b)?];
            arrow[i * k + j] = class_of[implies(alg, a, b)?];
        }
    }

    // Re-verify over every member pair, not just representatives.
    for a in 0..n {
        for b in 0..n {
            let (i, j) = (class_of[a], class_of[b]);
            let checks = [
                ("meet", class_of[caret_op(alg, a, b)?], meet[i * k + j]),
                ("join", class_of[star(alg, a, b)?], join[i * k + j]),
                ("arrow", class_of[implies(alg, a, b)?], arrow[i * k + j]),
            ];
            for (op, got, expect) in checks {
                if got != expect {
                    return Err(Error::Congruence(format!(
                        "{op} is not constant on classes: pair ({a},{b}) gives class {got}, representatives give {expect}"
                    )));
                }
            }
        }
    }

    Ok(QuotientLattice {
        one: class_of[alg.one()],
        classes,
        class_of,
        meet,
        join,
        arrow,
    })
}

/// Verify the quotient satisfies the implication-lattice laws.
pub fn check_implication_lattice(q: &QuotientLattice) -> Vec<AxiomReport> {
    let k = q.len();
    let mut reports = Vec::new();
    let cap = crate::axioms::MAX_COUNTEREXAMPLES;
    let report = |axiom: &str, checked: u64, vios: Vec<Vec<usize>>| AxiomReport {
        axiom: axiom.to_string(),
        passed: vios.is_empty(),
        violations: vios.len() as u64,
        counterexamples: vios.into_iter().take(cap).collect(),
        checked,
    };

    // (a) (A -> B) -> A = A
    let mut vios = Vec::new();
    for a in 0..k {
        for b in 0..k {
            if q.arrow_at(q.arrow_at(a, b), a) != a {
                vios.push(vec![a, b]);
            }
        }
    }
    reports.push(report("impl.a", (k * k) as u64, vios));

    // (b) (A -> B) -> B = A v B
    let mut vios = Vec::new();
    for a in 0..k {
        for b in 0..k {
            if q.arrow_at(q.arrow_at(a, b), b) != q.join_at(a, b) {
                vios.push(vec![a, b]);
            }
        }
    }
    reports.push(report("impl.b", (k * k) as u64, vios));

    // (c) A -> (B -> C) = B -> (A -> C)
    let mut vios = Vec::new();
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                if q.arrow_at(a, q.arrow_at(b, c)) != q.arrow_at(b, q.arrow_at(a, c)) {
                    vios.push(vec![a, b, c]);
                }
            }
        }
    }
    reports.push(report("impl.c", (k * k * k) as u64, vios));

    // Top behaves as the unit of the implication.
    let mut vios = Vec::new();
    for a in 0..k {
        let ok = q.arrow_at(a, a) == q.one
            && q.arrow_at(q.one, a) == a
            && q.arrow_at(a, q.one) == q.one
            && q.join_at(a, q.one) == q.one;
        if !ok {
            vios.push(vec![a]);
        }
    }
    reports.push(report("impl.top", k as u64, vios));

    // Join is a least upper bound for the derived order.
    let mut vios = Vec::new();
    let mut checked = 0u64;
    for a in 0..k {
        for b in 0..k {
            checked += 1;
            let j = q.join_at(a, b);
            let mut ok = q.join_at(a, a) == a
                && q.join_at(a, b) == q.join_at(b, a)
                && q.leq(a, j)
                && q.leq(b, j);
            if ok {
                for c in 0..k {
                    if q.leq(a, c) && q.leq(b, c) && !q.leq(j, c) {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                vios.push(vec![a, b]);
            }
        }
    }
    reports.push(report("impl.join-lub", checked, vios));

    // Meet is a greatest lower bound for the derived order.
    let mut vios = Vec::new();
    let mut checked = 0u64;
    for a in 0..k {
        for b in 0..k {
            checked += 1;
            let m = q.meet_at(a, b);
            let mut ok = q.leq(m, a) && q.leq(m, b);
            if ok {
                for c in 0..k {
                    if q.leq(c, a) && q.leq(c, b) && !q.leq(c, m) {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                vios.push(vec![a, b]);
            }
        }
    }
    reports.push(report("impl.meet-glb", checked, vios));

    reports
}

/// Verify the up-set of `a` embeds into the quotient: the class map is
/// injective on `[a, 1]` and carries join, meet, and arrow to the
/// quotient operations.
pub fn local_embedding_check(alg: &Algebra, q: &QuotientLattice, a: usize) -> AxiomReport {
    let n = alg.size();
    let up: Vec<usize> = (0..n).filter(|&x| alg.leq(a, x)).collect();
    let mut vios = Vec::new();
    let mut checked = 0u64;
    for &x in &up {
        for &y in &up {
            checked += 1;
            let (cx, cy) = (q.class_of[x], q.class_of[y]);
            let injective = (cx == cy) == (x == y);
            let join_ok = q.class_of[alg.join(x, y)] == q.join_at(cx, cy);
            let meet_ok = match alg.glb(x, y) {
                Some(m) => q.class_of[m] == q.meet_at(cx, cy),
                None => false,
            };
            let arrow_ok = match alg.arrow(x, y) {
                Some(r) => q.class_of[r] == q.arrow_at(cx, cy),
                None => false,
            };
            if !(injective && join_ok && meet_ok && arrow_ok) {
                vios.push(vec![x, y]);
            }
        }
    }
    AxiomReport {
        axiom: format!("embed[{a}]"),
        passed: vios.is_empty(),
        violations: vios.len() as u64,
        counterexamples: vios
            .into_iter()
            .take(crate::axioms::MAX_COUNTEREXAMPLES)
            .collect(),
        checked,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolean::Universe;
    use crate::signed;

    fn u(n: u8) -> Universe {
        Universe::new(n).unwrap()
    }

    fn signed_alg(n: u8) -> Algebra {
        let s = FiniteStructure::of_signed(u(n)).unwrap();
        Algebra::new(&s).unwrap()
    }

    #[test]
    fn similarity_on_one_element_universe() {
        let alg = signed_alg(1);
        // 0 = top, 1 = <{1},{}>, 2 = <{},{1}>.
        assert!(simeq(&alg, 1, 2).unwrap());
        assert!(!simeq(&alg, 0, 1).unwrap());
        assert!(preceq(&alg, 1, 2).unwrap());
    }

    #[test]
    fn quotient_class_count_is_two_to_the_n() {
        for n in 0..=3u8 {
            let alg = signed_alg(n);
            let q = build_quotient(&alg).unwrap();
            assert_eq!(q.len(), 1usize << n, "n={n}");
            // The top is always alone in its class.
            assert_eq!(q.classes[q.one], vec![alg.one()]);
        }
        let alg = signed_alg(2);
        let q = build_quotient(&alg).unwrap();
        let mut sizes: Vec<usize> = q.classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 2, 4]);
    }

    #[test]
    fn quotient_tables_on_one_element_universe() {
        let alg = signed_alg(1);
        let q = build_quotient(&alg).unwrap();
        assert_eq!(q.len(), 2);
        assert_eq!(q.one, 0);
        assert_eq!(q.classes, vec![vec![0], vec![1, 2]]);
        assert_eq!(q.join, vec![0, 0, 0, 1]);
        assert_eq!(q.meet, vec![0, 1, 1, 1]);
        assert_eq!(q.arrow, vec![0, 1, 0, 0]);
    }

    #[test]
    fn quotient_is_an_implication_lattice() {
        for n in 1..=3u8 {
            let q = build_quotient(&signed_alg(n)).unwrap();
            for r in check_implication_lattice(&q) {
                assert!(r.passed, "n={n}: {} failed", r.axiom);
            }
        }
    }

    #[test]
    fn star_and_implies_examples() {
        let alg = signed_alg(1);
        let members = signed::enumerate(u(1));
        let v = members
            .iter()
            .position(|m| m.to_string() == "<{1},{}>")
            .unwrap();
        let w = members
            .iter()
            .position(|m| m.to_string() == "<{},{1}>")
            .unwrap();
        // v * v = v but w * v = w: star is exact in its right argument
        // only, so similar left arguments may produce distinct results.
        assert_eq!(star(&alg, v, v).unwrap(), v);
        assert_eq!(star(&alg, w, v).unwrap(), w);
        assert_eq!(star(&alg, v, w).unwrap(), v);
        // 1 => a = a and a => a = 1.
        assert_eq!(implies(&alg, 0, v).unwrap(), v);
        assert_eq!(implies(&alg, v, v).unwrap(), 0);
    }

    #[test]
    fn every_up_set_embeds() {
        let alg = signed_alg(2);
        let q = build_quotient(&alg).unwrap();
        for a in 0..alg.size() {
            let r = local_embedding_check(&alg, &q, a);
            assert!(r.passed, "up-set of {a}: {:?}", r.counterexamples);
        }
    }

    #[test]
    fn caret_only_structure_collapses_identically() {
        let full = FiniteStructure::of_signed(u(2)).unwrap();
        let caret_only = FiniteStructure::from_tables(
            full.size(),
            full.one(),
            full.join_table().to_vec(),
            Some(full.caret_table().unwrap().to_vec()),
            None,
        )
        .unwrap();
        let qa = build_quotient(&Algebra::new(&full).unwrap()).unwrap();
        let qb = build_quotient(&Algebra::new(&caret_only).unwrap()).unwrap();
        assert_eq!(qa, qb);
    }

    #[test]
    fn non_mr_structures_are_rejected() {
        let s = crate::table::diamond_minus_bottom();
        let alg = Algebra::new(&s).unwrap();
        assert!(matches!(build_quotient(&alg), Err(Error::NotMr(_))));
    }

    #[test]
    fn broken_caret_breaks_the_congruence() {
        let full = FiniteStructure::of_signed(u(1)).unwrap();
        let n = full.size();
        let mut caret = full.caret_table().unwrap().to_vec();
        // caret(v, w) should be v; pointing it at the top makes the
        // class-level meet depend on the chosen representatives.
        caret[n + 2] = 0;
        let bad = FiniteStructure::from_tables(
            n,
            full.one(),
            full.join_table().to_vec(),
            Some(caret),
            Some(full.delta_table().unwrap().to_vec()),
        )
        .unwrap();
        let alg = Algebra::new(&bad).unwrap();
        assert!(matches!(build_quotient(&alg), Err(Error::Congruence(_))));
    }
}
