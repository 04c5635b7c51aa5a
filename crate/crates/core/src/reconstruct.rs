//! Rebuilding a concrete interval model from bare tables.
//!
//! Any finite cube — a structure whose up-set above a minimal element
//! is a Boolean lattice of the right size — is isomorphic to the
//! algebra of intervals over that Boolean frame. This module finds the
//! frame, certifies it is Boolean (with explicit witnesses on failure),
//! coordinatises it by atoms, and verifies element-by-element that the
//! induced map transports join, delta, caret, and meet-existence.

use crate::boolean::{BoolElem, Universe};
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::table::{Algebra, FiniteStructure};

/// A Boolean up-set `[base, 1]` coordinatised by its atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeFrame {
    /// The minimal element the frame sits on.
    pub base: usize,
    /// Elements of the up-set, ascending.
    pub members: Vec<usize>,
    /// Number of atoms: the cube dimension.
    pub dim: usize,
    /// Frame atoms (covers of `base`), ascending.
    pub atoms: Vec<usize>,
    /// Atom mask of each member, parallel to `members`: bit `i` is set
    /// when `atoms[i]` lies below the member.
    pub masks: Vec<u16>,
    /// Frame complement of each member, parallel to `members`.
    pub complement: Vec<usize>,
    /// Minimal elements of the whole structure, ascending.
    pub vertices: Vec<usize>,
}

impl CubeFrame {
    fn member_index(&self, x: usize) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }

    /// Atom mask of a frame member.
    pub fn mask_of(&self, x: usize) -> Option<u16> {
        self.member_index(x).map(|i| self.masks[i])
    }

    /// Frame complement of a frame member.
    pub fn complement_of(&self, x: usize) -> Option<usize> {
        self.member_index(x).map(|i| self.complement[i])
    }
}

/// Certify that the up-set of `base` is a Boolean lattice and that the
/// whole structure has the matching cube profile: `2^dim` minimal
/// elements and `3^dim` elements in total.
pub fn boolean_frame(alg: &Algebra, base: usize) -> Result<CubeFrame> {
    let fail = |reason: String| Error::NotBoolean { base, reason };
    let members = alg.order().up_set(base);
    let k = members.len();
    let one = alg.one();

    // Every pair of frame members needs a meet (it stays above base).
    for &x in &members {
        for &y in &members {
            if alg.glb(x, y).is_none() {
                return Err(fail(format!("no meet for the pair ({x},{y})")));
            }
        }
    }

    // Unique complements relative to [base, 1].
    let mut complement = Vec::with_capacity(k);
    for &x in &members {
        let mut found = None;
        for &y in &members {
            if alg.join(x, y) == one
                && alg.glb(x, y) == Some(base)
                && found.replace(y).is_some()
            {
                return Err(fail(format!("multiple complements for {x}")));
            }
        }
        match found {
            Some(y) => complement.push(y),
            None => return Err(fail(format!("no complement for {x}"))),
        }
    }

    // Distributivity of meet over join.
    for &x in &members {
        for &y in &members {
            for &z in &members {
                let lhs = alg.glb(x, alg.join(y, z)).expect("meets checked above");
                let xy = alg.glb(x, y).expect("meets checked above");
                let xz = alg.glb(x, z).expect("meets checked above");
                if lhs != alg.join(xy, xz) {
                    return Err(fail(format!("distributivity fails at ({x},{y},{z})")));
                }
            }
        }
    }

    // Atoms: frame members covering the base.
    let atoms: Vec<usize> = members
        .iter()
        .copied()
        .filter(|&a| {
            a != base
                && !members
                    .iter()
                    .any(|&z| z != base && z != a && alg.lt(base, z) && alg.lt(z, a))
        })
        .collect();
    let dim = atoms.len();
    if dim > Universe::MAX_ELEMENTS as usize {
        return Err(Error::UniverseTooLarge(dim.min(u8::MAX as usize) as u8));
    }
    if k != 1usize << dim {
        return Err(fail(format!("{k} members but {dim} atoms (expected 2^{dim})")));
    }

    // Coordinatise by atoms and insist the masks order-embed.
    let mut masks = vec![0u16; k];
    for (i, &m) in members.iter().enumerate() {
        for (j, &a) in atoms.iter().enumerate() {
            if alg.leq(a, m) {
                masks[i] |= 1 << j;
            }
        }
    }
    let mut seen = vec![false; 1usize << dim];
    for &msk in &masks {
        if std::mem::replace(&mut seen[msk as usize], true) {
            return Err(fail(format!("atom mask {msk:#b} occurs twice")));
        }
    }
    for i in 0..k {
        for j in 0..k {
            let subset = masks[i] & !masks[j] == 0;
            if alg.leq(members[i], members[j]) != subset {
                return Err(fail(format!(
                    "atom masks do not order-embed at ({},{})",
                    members[i], members[j]
                )));
            }
        }
    }

    // Cube profile of the whole structure.
    let vertices = alg.order().minimal_elements();
    if vertices.len() != 1usize << dim {
        return Err(fail(format!(
            "{} minimal elements, a {dim}-cube has {}",
            vertices.len(),
            1usize << dim
        )));
    }
    if alg.size() != 3usize.pow(dim as u32) {
        return Err(fail(format!(
            "{} elements in total, a {dim}-cube has {}",
            alg.size(),
            3usize.pow(dim as u32)
        )));
    }

    Ok(CubeFrame { base, members, dim, atoms, masks, complement, vertices })
}

/// A verified isomorphism onto the interval algebra of `dim` atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reconstruction {
    pub dim: usize,
    pub frame: CubeFrame,
    /// Image of each element, indexed like the source structure.
    pub map: Vec<Interval>,
}

/// Reconstruct the interval model over the frame at the least minimal
/// element.
pub fn reconstruct_iso(s: &FiniteStructure) -> Result<Reconstruction> {
    let alg = Algebra::new(s)?;
    let v0 = *alg
        .order()
        .minimal_elements()
        .first()
        .expect("structures are nonempty");
    reconstruct_at(&alg, v0)
}

/// Reconstruct the interval model over the frame at `base`, verifying
/// the map transports the whole structure.
///
/// The element map sends `x` to the interval from the frame complement
/// of `delta(1, x) v base` up to `x v base`, read through atom masks.
pub fn reconstruct_at(alg: &Algebra, base: usize) -> Result<Reconstruction> {
    let frame = boolean_frame(alg, base)?;
    let u = Universe::new(frame.dim as u8)?;
    let n = alg.size();
    let one = alg.one();

    let mut map = Vec::with_capacity(n);
    for x in 0..n {
        let hi_elem = alg.join(x, base);
        let r = alg.refl(one, x).ok_or(Error::DeltaGap(one, x))?;
        let lo_pre = alg.join(r, base);
        let lo_elem = frame
            .complement_of(lo_pre)
            .ok_or_else(|| Error::IsoCheck(format!("reflection of {x} leaves the frame")))?;
        let lo = BoolElem::from_bits(frame.mask_of(lo_elem).expect("complements are members"));
        let hi = BoolElem::from_bits(frame.mask_of(hi_elem).expect("joins stay in the frame"));
        let iv = Interval::new(u, lo, hi)
            .map_err(|_| Error::IsoCheck(format!("element {x} maps to the empty interval")))?;
        map.push(iv);
    }

    let mut images: Vec<(u16, u16)> = map.iter().map(|i| (i.lo().bits(), i.hi().bits())).collect();
    images.sort_unstable();
    images.dedup();
    if images.len() != n {
        return Err(Error::IsoCheck("element map is not injective".to_string()));
    }

    for x in 0..n {
        for y in 0..n {
            if map[alg.join(x, y)] != map[x].join(&map[y]) {
                return Err(Error::IsoCheck(format!("join transport fails at ({x},{y})")));
            }
            match (alg.glb(x, y), map[x].meet(&map[y])) {
                (Some(m), Some(im)) => {
                    if map[m] != im {
                        return Err(Error::IsoCheck(format!("meet transport fails at ({x},{y})")));
                    }
                }
                (None, None) => {}
                _ => {
                    return Err(Error::IsoCheck(format!(
                        "meet existence differs at ({x},{y})"
                    )));
                }
            }
            if let Some(c) = alg.caret(x, y) {
                if map[c] != map[x].caret(&map[y]) {
                    return Err(Error::IsoCheck(format!("caret transport fails at ({x},{y})")));
                }
            }
            if alg.leq(y, x) {
                let d = alg.refl(x, y).ok_or(Error::DeltaGap(x, y))?;
                let id = map[x]
                    .delta(&map[y])
                    .expect("images are comparable after join transport");
                if map[d] != id {
                    return Err(Error::IsoCheck(format!("delta transport fails at ({x},{y})")));
                }
            }
        }
    }

    Ok(Reconstruction { dim: frame.dim, frame, map })
}

/// Reconstruct over every minimal element; a cube admits all of them.
pub fn reconstruct_all_bases(alg: &Algebra) -> Result<Vec<Reconstruction>> {
    alg.order()
        .minimal_elements()
        .into_iter()
        .map(|v0| reconstruct_at(alg, v0))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::ABSENT;

    fn u(n: u8) -> Universe {
        Universe::new(n).unwrap()
    }

    fn signed_alg(n: u8) -> Algebra {
        Algebra::new(&FiniteStructure::of_signed(u(n)).unwrap()).unwrap()
    }

    #[test]
    fn frame_of_the_three_element_cube() {
        let alg = signed_alg(1);
        let frame = boolean_frame(&alg, 1).unwrap();
        assert_eq!(frame.base, 1);
        assert_eq!(frame.members, vec![0, 1]);
        assert_eq!(frame.dim, 1);
        assert_eq!(frame.atoms, vec![0]);
        assert_eq!(frame.masks, vec![0b1, 0b0]);
        assert_eq!(frame.complement, vec![1, 0]);
        assert_eq!(frame.vertices, vec![1, 2]);
    }

    #[test]
    fn one_dimensional_reconstruction_is_frozen() {
        let s = FiniteStructure::of_signed(u(1)).unwrap();
        let r = reconstruct_iso(&s).unwrap();
        assert_eq!(r.dim, 1);
        let iv = |lo: u16, hi: u16| Interval::new(
            u(1),
            BoolElem::from_bits(lo),
            BoolElem::from_bits(hi),
        )
        .unwrap();
        assert_eq!(r.map, vec![iv(0b0, 0b1), iv(0b0, 0b0), iv(0b1, 0b1)]);
    }

    #[test]
    fn signed_and_interval_structures_reconstruct() {
        for n in 0..=3u8 {
            let s = FiniteStructure::of_signed(u(n)).unwrap();
            let r = reconstruct_iso(&s).unwrap();
            assert_eq!(r.dim, n as usize, "signed n={n}");
            assert_eq!(r.map.len(), 3usize.pow(n as u32));
        }
        let s = FiniteStructure::of_intervals(u(2)).unwrap();
        assert_eq!(reconstruct_iso(&s).unwrap().dim, 2);
    }

    #[test]
    fn every_base_vertex_works() {
        let alg = signed_alg(2);
        let all = reconstruct_all_bases(&alg).unwrap();
        assert_eq!(all.len(), 4);
        for r in &all {
            assert_eq!(r.dim, 2);
        }
    }

    #[test]
    fn diamond_fails_on_complements() {
        let s = crate::table::diamond_minus_bottom();
        match reconstruct_iso(&s) {
            Err(Error::NotBoolean { reason, .. }) => {
                assert!(reason.contains("complement"), "reason: {reason}")
            }
            other => panic!("expected NotBoolean, got {other:?}"),
        }
    }

    #[test]
    fn chain_fails_on_the_cube_profile() {
        // A two-chain: the frame [1, 1] is Boolean but the structure has
        // one minimal element instead of two.
        let join = vec![0, 0, 0, 1];
        let mut delta = vec![ABSENT; 4];
        delta[0] = 0;
        delta[1] = 1;
        delta[3] = 1;
        let s = FiniteStructure::from_tables(2, 0, join, None, Some(delta)).unwrap();
        match reconstruct_iso(&s) {
            Err(Error::NotBoolean { reason, .. }) => {
                assert!(reason.contains("minimal"), "reason: {reason}")
            }
            other => panic!("expected NotBoolean, got {other:?}"),
        }
    }
}
