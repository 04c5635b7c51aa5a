//! Intervals `[lo, hi]` of a finite Boolean algebra, ordered by inclusion.
//!
//! `I(P(X))` is isomorphic to the signed sets over `X` via
//! `<A,B> -> [A, complement(B)]`; every operation here mirrors one on
//! faces of the cube. The derived operations `length`, `star`, `implies`
//! and `arrow` drive the collapse construction.

use std::fmt;

use crate::boolean::{BoolElem, PrincipalFilter, Universe};
use crate::error::{Error, Result};
use crate::signed::SignedSet;

/// An interval `[lo, hi]` with `lo <= hi` in the subset order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Interval {
    universe: Universe,
    lo: BoolElem,
    hi: BoolElem,
}

impl Interval {
    pub fn new(u: Universe, lo: BoolElem, hi: BoolElem) -> Result<Interval> {
        if !u.contains(lo) || !u.contains(hi) {
            return Err(Error::NotInUniverse);
        }
        if !lo.leq(hi) {
            return Err(Error::EndpointsOutOfOrder);
        }
        Ok(Interval { universe: u, lo, hi })
    }

    /// The top `[empty, X]`: the whole algebra as an interval.
    pub fn top(u: Universe) -> Interval {
        Interval { universe: u, lo: BoolElem::EMPTY, hi: u.full() }
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn lo(&self) -> BoolElem {
        self.lo
    }

    pub fn hi(&self) -> BoolElem {
        self.hi
    }

    fn same_universe(&self, other: &Interval) {
        assert_eq!(
            self.universe, other.universe,
            "intervals over different universes"
        );
    }

    /// `self <= other` is interval containment.
    pub fn leq(&self, other: &Interval) -> bool {
        self.same_universe(other);
        other.lo.leq(self.lo) && self.hi.leq(other.hi)
    }

    /// Join: the smallest interval containing both.
    pub fn join(&self, other: &Interval) -> Interval {
        self.same_universe(other);
        Interval {
            universe: self.universe,
            lo: self.lo.meet(other.lo),
            hi: self.hi.join(other.hi),
        }
    }

    /// Reflection of `other <= self` within `self`:
    /// `[lo v (hi /\ -other.hi), hi /\ (lo v -other.lo)]`.
    pub fn delta(&self, other: &Interval) -> Result<Interval> {
        if !other.leq(self) {
            return Err(Error::DeltaUndefined);
        }
        let u = self.universe;
        Ok(Interval {
            universe: u,
            lo: self.lo.join(self.hi.meet(u.complement(other.hi))),
            hi: self.hi.meet(self.lo.join(u.complement(other.lo))),
        })
    }

    /// Partial meet: interval intersection when nonempty.
    pub fn meet(&self, other: &Interval) -> Option<Interval> {
        self.same_universe(other);
        let lo = self.lo.join(other.lo);
        let hi = self.hi.meet(other.hi);
        if lo.leq(hi) {
            Some(Interval { universe: self.universe, lo, hi })
        } else {
            None
        }
    }

    /// The caret `self /\ delta(self v other, other)`, total on
    /// intervals; computed by its closed form.
    pub fn caret(&self, other: &Interval) -> Interval {
        self.same_universe(other);
        let u = self.universe;
        Interval {
            universe: u,
            lo: self.lo.join(self.hi.meet(u.complement(other.hi))),
            hi: self.hi.meet(self.lo.join(u.complement(other.lo))),
        }
    }

    /// Length `l(x) = lo v -hi`: the set of committed coordinates of the
    /// corresponding face.
    pub fn length(&self) -> BoolElem {
        self.lo.join(self.universe.complement(self.hi))
    }

    /// `self * other = self v delta(self v other, other)`; associative,
    /// with closed form `[lo /\ l(other), hi v -l(other)]`.
    pub fn star(&self, other: &Interval) -> Interval {
        self.same_universe(other);
        let j = self.join(other);
        self.join(&j.delta(other).expect("other <= self v other"))
    }

    /// `self => other = delta(self v other, self) -> other`; closed form
    /// `[other.lo /\ -l(self), other.hi v l(self)]`.
    pub fn implies(&self, other: &Interval) -> Interval {
        self.same_universe(other);
        let j = self.join(other);
        let d = j.delta(self).expect("self <= self v other");
        d.arrow(other)
    }

    /// The cubic implication `self -> other =
    /// other v delta(1, delta(self v other, other))`.
    pub fn arrow(&self, other: &Interval) -> Interval {
        self.same_universe(other);
        let top = Interval::top(self.universe);
        let j = self.join(other);
        let inner = j.delta(other).expect("other <= self v other");
        other.join(&top.delta(&inner).expect("everything is below top"))
    }

    /// Transport a signed set across the isomorphism `<A,B> -> [A, -B]`.
    pub fn from_signed(s: &SignedSet) -> Interval {
        let u = s.universe();
        Interval { universe: u, lo: s.pos(), hi: u.complement(s.neg()) }
    }

    /// Inverse of [`Interval::from_signed`].
    pub fn to_signed(&self) -> SignedSet {
        let u = self.universe;
        SignedSet::new(u, self.lo, u.complement(self.hi))
            .expect("lo <= hi makes the parts disjoint")
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// All `3^n` intervals: lo ascending, then hi ascending.
pub fn enumerate(u: Universe) -> Vec<Interval> {
    let mut out = Vec::new();
    for lo in u.subsets() {
        for hi in u.subsets() {
            if lo.leq(hi) {
                out.push(Interval { universe: u, lo, hi });
            }
        }
    }
    out
}

/// The members of the filter algebra `I(F)`: intervals `[a,b]` with
/// `-a` and `b` in the filter, in enumeration order.
pub fn filter_members(f: &PrincipalFilter) -> Vec<Interval> {
    let u = f.universe();
    enumerate(u)
        .into_iter()
        .filter(|iv| f.contains(u.complement(iv.lo())) && f.contains(iv.hi()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signed;

    fn u(n: u8) -> Universe {
        Universe::new(n).unwrap()
    }

    fn iv(un: Universe, lo: &[u32], hi: &[u32]) -> Interval {
        Interval::new(
            un,
            BoolElem::from_names(un, lo).unwrap(),
            BoolElem::from_names(un, hi).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn construction_orders_endpoints() {
        let u2 = u(2);
        assert!(Interval::new(u2, u2.full(), BoolElem::EMPTY).is_err());
        assert!(Interval::new(u2, BoolElem::EMPTY, BoolElem::EMPTY).is_ok());
    }

    #[test]
    fn join_examples() {
        let u2 = u(2);
        // Two opposite vertices span the whole square.
        assert_eq!(
            iv(u2, &[1], &[1]).join(&iv(u2, &[2], &[2])),
            iv(u2, &[], &[1, 2])
        );
        let x = iv(u2, &[1], &[1, 2]);
        assert_eq!(x.join(&x), x);
        assert_eq!(x.join(&Interval::top(u2)), Interval::top(u2));
    }

    #[test]
    fn delta_examples() {
        let u1 = u(1);
        assert_eq!(
            iv(u1, &[], &[1]).delta(&iv(u1, &[], &[])).unwrap(),
            iv(u1, &[1], &[1])
        );
        let u2 = u(2);
        assert_eq!(
            iv(u2, &[], &[1, 2]).delta(&iv(u2, &[1], &[1, 2])).unwrap(),
            iv(u2, &[], &[2])
        );
        let x = iv(u2, &[2], &[2]);
        assert_eq!(x.delta(&x).unwrap(), x);
        assert!(iv(u2, &[1], &[1]).delta(&iv(u2, &[2], &[2])).is_err());
    }

    #[test]
    fn meet_examples() {
        let u2 = u(2);
        assert_eq!(
            iv(u2, &[], &[1]).meet(&iv(u2, &[1], &[1, 2])),
            Some(iv(u2, &[1], &[1]))
        );
        let u1 = u(1);
        assert_eq!(iv(u1, &[], &[]).meet(&iv(u1, &[1], &[1])), None);
        let x = iv(u2, &[1], &[1]);
        assert_eq!(x.meet(&Interval::top(u2)), Some(x));
    }

    /// Oracle: meet must equal the brute-force greatest lower bound.
    #[test]
    fn meet_matches_brute_force_glb() {
        for n in 0..=3 {
            let un = u(n);
            let all = enumerate(un);
            for x in &all {
                for y in &all {
                    let lower: Vec<&Interval> =
                        all.iter().filter(|z| z.leq(x) && z.leq(y)).collect();
                    let glb = lower
                        .iter()
                        .find(|g| lower.iter().all(|z| z.leq(g)))
                        .copied()
                        .copied();
                    assert_eq!(x.meet(y), glb);
                }
            }
        }
    }

    #[test]
    fn caret_examples() {
        let u2 = u(2);
        let x = iv(u2, &[], &[1]);
        let y = iv(u2, &[2], &[1, 2]);
        assert_eq!(x.caret(&y), x);
        let u1 = u(1);
        assert_eq!(
            iv(u1, &[], &[]).caret(&iv(u1, &[1], &[1])),
            iv(u1, &[], &[])
        );
        let z = iv(u2, &[1], &[1, 2]);
        assert_eq!(z.caret(&Interval::top(u2)), z);
    }

    /// Dual route for the caret, exhaustively over n <= 4.
    #[test]
    fn caret_matches_compositional_route() {
        for n in 0..=4 {
            let un = u(n);
            let all = enumerate(un);
            for x in &all {
                for y in &all {
                    let d = x.join(y).delta(y).unwrap();
                    assert_eq!(x.caret(y), x.meet(&d).unwrap());
                }
            }
        }
    }

    #[test]
    fn length_examples() {
        let u2 = u(2);
        assert_eq!(Interval::top(u2).length(), BoolElem::EMPTY);
        let v = iv(u2, &[1], &[1]);
        assert_eq!(v.length(), u2.full());
        assert_eq!(iv(u2, &[1], &[1, 2]).length(), BoolElem::from_names(u2, &[1]).unwrap());
    }

    #[test]
    fn star_examples() {
        let u1 = u(1);
        let v = iv(u1, &[], &[]);
        let w = iv(u1, &[1], &[1]);
        assert_eq!(v.star(&w), v);
        let u2 = u(2);
        let a = iv(u2, &[1], &[1]);
        assert_eq!(a.star(&a), a);
        assert_eq!(a.star(&Interval::top(u2)), Interval::top(u2));
    }

    /// Dual route: star's closed form `[lo /\ l(b), hi v -l(b)]`.
    #[test]
    fn star_matches_closed_form() {
        for n in 0..=4 {
            let un = u(n);
            let all = enumerate(un);
            for a in &all {
                for b in &all {
                    let l = b.length();
                    let expect = Interval::new(
                        un,
                        a.lo().meet(l),
                        a.hi().join(un.complement(l)),
                    )
                    .unwrap();
                    assert_eq!(a.star(b), expect);
                }
            }
        }
    }

    #[test]
    fn implies_examples() {
        let u1 = u(1);
        let top = Interval::top(u1);
        let v = iv(u1, &[1], &[1]);
        let w = iv(u1, &[], &[]);
        // Opposite vertices imply each other vacuously.
        assert_eq!(v.implies(&w), top);
        assert_eq!(w.implies(&v), top);
        // 1 => a = a (the lemma's corrected form) and a => a = 1.
        for n in 0..=3 {
            let un = u(n);
            for a in enumerate(un) {
                assert_eq!(Interval::top(un).implies(&a), a);
                assert_eq!(a.implies(&a), Interval::top(un));
            }
        }
    }

    /// Dual route: implies' closed form `[b.lo /\ -l(a), b.hi v l(a)]`.
    #[test]
    fn implies_matches_closed_form() {
        for n in 0..=4 {
            let un = u(n);
            let all = enumerate(un);
            for a in &all {
                for b in &all {
                    let l = a.length();
                    let expect = Interval::new(
                        un,
                        b.lo().meet(un.complement(l)),
                        b.hi().join(l),
                    )
                    .unwrap();
                    assert_eq!(a.implies(b), expect);
                }
            }
        }
    }

    #[test]
    fn arrow_examples() {
        for n in 0..=3 {
            let un = u(n);
            let top = Interval::top(un);
            let all = enumerate(un);
            for y in &all {
                assert_eq!(top.arrow(y), *y);
                assert_eq!(y.arrow(y), top);
                for x in &all {
                    if y.leq(x) {
                        assert_eq!(x.arrow(y).arrow(y), *x);
                    }
                }
            }
        }
    }

    #[test]
    fn signed_iso_examples() {
        let u2 = u(2);
        let s = SignedSet::new(
            u2,
            BoolElem::from_names(u2, &[1]).unwrap(),
            BoolElem::from_names(u2, &[2]).unwrap(),
        )
        .unwrap();
        assert_eq!(Interval::from_signed(&s), iv(u2, &[1], &[1]));
        assert_eq!(
            Interval::from_signed(&SignedSet::top(u2)),
            Interval::top(u2)
        );
    }

    /// The signed/interval translation is a bijective homomorphism for
    /// join, delta, meet and caret (n <= 4).
    #[test]
    fn signed_iso_is_an_isomorphism() {
        for n in 0..=4 {
            let un = u(n);
            let faces = signed::enumerate(un);
            for a in &faces {
                let ia = Interval::from_signed(a);
                assert_eq!(ia.to_signed(), *a);
                for b in &faces {
                    let ib = Interval::from_signed(b);
                    assert_eq!(Interval::from_signed(&a.join(b)), ia.join(&ib));
                    assert_eq!(a.leq(b), ia.leq(&ib));
                    assert_eq!(
                        a.meet(b).map(|m| Interval::from_signed(&m)),
                        ia.meet(&ib)
                    );
                    assert_eq!(Interval::from_signed(&a.caret(b)), ia.caret(&ib));
                    if b.leq(a) {
                        assert_eq!(
                            Interval::from_signed(&a.delta(b).unwrap()),
                            ia.delta(&ib).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate(u(0)).len(), 1);
        assert_eq!(enumerate(u(2)).len(), 9);
        assert_eq!(enumerate(u(4)).len(), 81);
    }

    #[test]
    fn filter_members_example() {
        // U = {1,2}, f = {1}: exactly [{},{1}], [{},{1,2}], [{2},{1,2}].
        let u2 = u(2);
        let f = PrincipalFilter::new(u2, BoolElem::from_names(u2, &[1]).unwrap()).unwrap();
        let members = filter_members(&f);
        assert_eq!(members.len(), 3);
        assert!(members.contains(&iv(u2, &[], &[1])));
        assert!(members.contains(&iv(u2, &[], &[1, 2])));
        assert!(members.contains(&iv(u2, &[2], &[1, 2])));
        // The empty generator gives back the full interval algebra.
        let all = PrincipalFilter::new(u2, BoolElem::EMPTY).unwrap();
        assert_eq!(filter_members(&all).len(), 9);
    }

    /// Filter algebras are closed under join, delta and caret (n <= 3).
    #[test]
    fn filter_members_are_closed() {
        for n in 0..=3 {
            let un = u(n);
            for gen in un.subsets() {
                let f = PrincipalFilter::new(un, gen).unwrap();
                let members = filter_members(&f);
                for a in &members {
                    for b in &members {
                        assert!(members.contains(&a.join(b)));
                        assert!(members.contains(&a.caret(b)));
                        if b.leq(a) {
                            assert!(members.contains(&a.delta(b).unwrap()));
                        }
                    }
                }
            }
        }
    }
}
