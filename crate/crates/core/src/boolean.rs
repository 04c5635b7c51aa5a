//! Finite Boolean algebras: subsets of a small ground set packed into a
//! machine word.
//!
//! The ground set is `{1, ..., n}` with `n <= 16`; element `i` occupies
//! bit `i - 1`. All lattice operations are single bit instructions.

use std::fmt;

use crate::error::{Error, Result};

/// The ground set `{1, ..., n}`, `n <= 16`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Universe {
    n: u8,
}

impl Universe {
    pub const MAX_ELEMENTS: u8 = 16;

    pub fn new(n: u8) -> Result<Universe> {
        if n > Self::MAX_ELEMENTS {
            return Err(Error::UniverseTooLarge(n));
        }
        Ok(Universe { n })
    }

    /// Number of elements of the ground set.
    pub fn n(self) -> u8 {
        self.n
    }

    /// Number of subsets, i.e. the size of the Boolean algebra.
    pub fn subset_count(self) -> usize {
        1usize << self.n
    }

    /// The whole ground set (the top of the Boolean algebra).
    pub fn full(self) -> BoolElem {
        BoolElem(((1u32 << self.n) - 1) as u16)
    }

    pub fn contains(self, x: BoolElem) -> bool {
        x.0 & !self.full().0 == 0
    }

    /// Boolean complement within this ground set.
    pub fn complement(self, x: BoolElem) -> BoolElem {
        BoolElem(!x.0 & self.full().0)
    }

    /// All subsets in ascending bit-pattern order.
    pub fn subsets(self) -> impl Iterator<Item = BoolElem> {
        (0..self.subset_count()).map(|bits| BoolElem(bits as u16))
    }

    /// The singleton `{name}` for a 1-based element name.
    pub fn singleton(self, name: u32) -> Result<BoolElem> {
        if name == 0 || name > u32::from(self.n) {
            return Err(Error::BadElementName(name, self.n));
        }
        Ok(BoolElem(1 << (name - 1)))
    }
}

/// A subset of the ground set, one bit per element.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct BoolElem(u16);

impl BoolElem {
    pub const EMPTY: BoolElem = BoolElem(0);

    pub fn from_bits(bits: u16) -> BoolElem {
        BoolElem(bits)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    /// Intersection.
    pub fn meet(self, other: BoolElem) -> BoolElem {
        BoolElem(self.0 & other.0)
    }

    /// Union.
    pub fn join(self, other: BoolElem) -> BoolElem {
        BoolElem(self.0 | other.0)
    }

    /// Set difference `self \ other`.
    pub fn minus(self, other: BoolElem) -> BoolElem {
        BoolElem(self.0 & !other.0)
    }

    /// Containment `self <= other`.
    pub fn leq(self, other: BoolElem) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn disjoint(self, other: BoolElem) -> bool {
        self.0 & other.0 == 0
    }

    /// Build from 1-based element names; rejects names outside the universe.
    pub fn from_names(u: Universe, names: &[u32]) -> Result<BoolElem> {
        let mut out = BoolElem::EMPTY;
        for &name in names {
            out = out.join(u.singleton(name)?);
        }
        Ok(out)
    }

    /// 1-based element names in ascending order.
    pub fn names(self) -> Vec<u32> {
        (0..16).filter(|i| self.0 >> i & 1 == 1).map(|i| i + 1).collect()
    }
}

impl fmt::Display for BoolElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, name) in self.names().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{name}")?;
        }
        write!(f, "}}")
    }
}

/// The principal filter `{b : f <= b}` of a generator `f`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrincipalFilter {
    universe: Universe,
    generator: BoolElem,
}

impl PrincipalFilter {
    pub fn new(u: Universe, generator: BoolElem) -> Result<PrincipalFilter> {
        if !u.contains(generator) {
            return Err(Error::NotInUniverse);
        }
        Ok(PrincipalFilter { universe: u, generator })
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn generator(&self) -> BoolElem {
        self.generator
    }

    pub fn contains(&self, b: BoolElem) -> bool {
        self.generator.leq(b)
    }

    /// All members in ascending bit-pattern order.
    pub fn members(&self) -> Vec<BoolElem> {
        self.universe.subsets().filter(|&b| self.contains(b)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(n: u8) -> Universe {
        Universe::new(n).unwrap()
    }

    fn b(u: Universe, names: &[u32]) -> BoolElem {
        BoolElem::from_names(u, names).unwrap()
    }

    #[test]
    fn universe_bounds() {
        assert!(Universe::new(16).is_ok());
        assert_eq!(Universe::new(17), Err(Error::UniverseTooLarge(17)));
        assert_eq!(u(0).subset_count(), 1);
        assert_eq!(u(16).subset_count(), 65536);
    }

    #[test]
    fn complement_examples() {
        let u2 = u(2);
        assert_eq!(u2.complement(b(u2, &[1])), b(u2, &[2]));
        assert_eq!(u2.complement(BoolElem::EMPTY), u2.full());
        assert_eq!(u2.complement(u2.full()), BoolElem::EMPTY);
    }

    #[test]
    fn lattice_op_basics() {
        let u3 = u(3);
        let x = b(u3, &[1, 2]);
        let y = b(u3, &[2, 3]);
        assert_eq!(x.meet(y), b(u3, &[2]));
        assert_eq!(x.join(y), u3.full());
        assert_eq!(x.minus(y), b(u3, &[1]));
        assert!(x.meet(y).leq(x));
        assert!(x.leq(x.join(y)));
        assert!(BoolElem::EMPTY.leq(x));
        assert!(x.leq(u3.full()));
    }

    /// De Morgan and double complement, exhaustively for n <= 4.
    #[test]
    fn de_morgan_exhaustive() {
        for n in 0..=4 {
            let un = u(n);
            for x in un.subsets() {
                assert_eq!(un.complement(un.complement(x)), x);
                for y in un.subsets() {
                    assert_eq!(
                        un.complement(x.meet(y)),
                        un.complement(x).join(un.complement(y))
                    );
                    assert_eq!(
                        un.complement(x.join(y)),
                        un.complement(x).meet(un.complement(y))
                    );
                }
            }
        }
    }

    #[test]
    fn names_round_trip() {
        let u4 = u(4);
        let x = b(u4, &[1, 3]);
        assert_eq!(x.names(), vec![1, 3]);
        assert_eq!(BoolElem::from_names(u4, &x.names()).unwrap(), x);
        assert!(BoolElem::from_names(u4, &[5]).is_err());
        assert!(BoolElem::from_names(u4, &[0]).is_err());
        assert_eq!(format!("{x}"), "{1,3}");
        assert_eq!(format!("{}", BoolElem::EMPTY), "{}");
    }

    #[test]
    fn principal_filter_example() {
        // U = {1,2}, f = {1}: members {1} and {1,2}.
        let u2 = u(2);
        let f = PrincipalFilter::new(u2, b(u2, &[1])).unwrap();
        assert_eq!(f.members(), vec![b(u2, &[1]), b(u2, &[1, 2])]);
    }

    #[test]
    fn principal_filter_edges() {
        let u2 = u(2);
        let all = PrincipalFilter::new(u2, BoolElem::EMPTY).unwrap();
        assert_eq!(all.members().len(), 4);
        let top_only = PrincipalFilter::new(u2, u2.full()).unwrap();
        assert_eq!(top_only.members(), vec![u2.full()]);
    }

    /// Filters are upward closed and meet closed (oracle: direct scan), n <= 4.
    #[test]
    fn principal_filter_laws_exhaustive() {
        for n in 0..=4 {
            let un = u(n);
            for gen in un.subsets() {
                let f = PrincipalFilter::new(un, gen).unwrap();
                let members = f.members();
                for &a in &members {
                    for c in un.subsets() {
                        if a.leq(c) {
                            assert!(f.contains(c));
                        }
                    }
                    for &b2 in &members {
                        assert!(f.contains(a.meet(b2)));
                    }
                }
                // Oracle: membership is exactly the superset predicate.
                let expected: Vec<BoolElem> =
                    un.subsets().filter(|s| gen.leq(*s)).collect();
                assert_eq!(members, expected);
            }
        }
    }
}
