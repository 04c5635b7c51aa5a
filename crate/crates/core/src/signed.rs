//! Signed subsets of a finite ground set: the faces of the n-cube.
//!
//! A signed set is a pair of disjoint subsets `<pos, neg>`; the face it
//! names leaves every unsigned element free, so the empty signed set is
//! the whole cube and acts as the top. The order is by *reverse*
//! inclusion of signs: committing more elements gives a smaller face.

use std::fmt;

use crate::boolean::{BoolElem, Universe};
use crate::error::{Error, Result};

/// A face `<pos, neg>` of the n-cube, with `pos` and `neg` disjoint.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SignedSet {
    universe: Universe,
    pos: BoolElem,
    neg: BoolElem,
}

impl SignedSet {
    pub fn new(u: Universe, pos: BoolElem, neg: BoolElem) -> Result<SignedSet> {
        if !u.contains(pos) || !u.contains(neg) {
            return Err(Error::NotInUniverse);
        }
        if !pos.disjoint(neg) {
            return Err(Error::NotDisjoint);
        }
        Ok(SignedSet { universe: u, pos, neg })
    }

    /// The top `<{},{}>`: the whole cube.
    pub fn top(u: Universe) -> SignedSet {
        SignedSet { universe: u, pos: BoolElem::EMPTY, neg: BoolElem::EMPTY }
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn pos(&self) -> BoolElem {
        self.pos
    }

    pub fn neg(&self) -> BoolElem {
        self.neg
    }

    fn same_universe(&self, other: &SignedSet) {
        assert_eq!(
            self.universe, other.universe,
            "signed sets from different universes"
        );
    }

    /// `self <= other`: the face `self` is contained in the face `other`,
    /// i.e. `self` carries at least the signs of `other`.
    pub fn leq(&self, other: &SignedSet) -> bool {
        self.same_universe(other);
        other.pos.leq(self.pos) && other.neg.leq(self.neg)
    }

    /// Join: the smallest face containing both, by sign intersection.
    pub fn join(&self, other: &SignedSet) -> SignedSet {
        self.same_universe(other);
        SignedSet {
            universe: self.universe,
            pos: self.pos.meet(other.pos),
            neg: self.neg.meet(other.neg),
        }
    }

    /// The reflection of `other` through the barycenter of `self`;
    /// defined only for `other <= self`.
    pub fn delta(&self, other: &SignedSet) -> Result<SignedSet> {
        if !other.leq(self) {
            return Err(Error::DeltaUndefined);
        }
        Ok(SignedSet {
            universe: self.universe,
            pos: self.pos.join(other.neg.minus(self.neg)),
            neg: self.neg.join(other.pos.minus(self.pos)),
        })
    }

    /// Partial meet: sign union when consistent, otherwise undefined.
    pub fn meet(&self, other: &SignedSet) -> Option<SignedSet> {
        self.same_universe(other);
        let pos = self.pos.join(other.pos);
        let neg = self.neg.join(other.neg);
        if pos.disjoint(neg) {
            Some(SignedSet { universe: self.universe, pos, neg })
        } else {
            None
        }
    }

    /// The caret `self ^ other = self /\ delta(self v other, other)`,
    /// total on signed sets; computed by its closed form.
    pub fn caret(&self, other: &SignedSet) -> SignedSet {
        self.same_universe(other);
        SignedSet {
            universe: self.universe,
            pos: self.pos.join(other.neg.minus(self.neg)),
            neg: self.neg.join(other.pos.minus(self.pos)),
        }
    }

    /// Oriented-matroid style composition: `self` wins on conflicts.
    pub fn compose(&self, other: &SignedSet) -> SignedSet {
        self.same_universe(other);
        SignedSet {
            universe: self.universe,
            pos: self.pos.join(other.pos.minus(self.neg)),
            neg: self.neg.join(other.neg.minus(self.pos)),
        }
    }
}

impl fmt::Display for SignedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{}>", self.pos, self.neg)
    }
}

/// All `3^n` signed sets, ordered lexicographically by the sign tuple of
/// elements `1..n` with `absent < + < -`.
pub fn enumerate(u: Universe) -> Vec<SignedSet> {
    let n = u.n() as u32;
    let total = 3usize.pow(n);
    let mut out = Vec::with_capacity(total);
    for code in 0..total {
        let mut pos = BoolElem::EMPTY;
        let mut neg = BoolElem::EMPTY;
        let mut c = code;
        // Peel digits least significant first: element n, then n-1, ...
        for bit in (0..n).rev() {
            let elem = BoolElem::from_bits(1 << bit);
            match c % 3 {
                1 => pos = pos.join(elem),
                2 => neg = neg.join(elem),
                _ => {}
            }
            c /= 3;
        }
        out.push(SignedSet { universe: u, pos, neg });
    }
    out
}
