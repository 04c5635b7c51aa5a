//! Exhaustive search for finite models of the caret axioms.
//!
//! The search enumerates join-semilattices with top up to isomorphism,
//! then tries to place a caret table on each. Structure that the axioms
//! force is exploited before any branching:
//!
//! * `u = caret(1, _)` must be an order-preserving involution fixing the
//!   top, with `x v u(x) = 1` everywhere — so `u` is fixed-point-free
//!   off the top and odd-sized structures are the only candidates;
//! * every entry `caret(p, q)` lies in the finite domain
//!   `{c : c <= p and c v q = p v q}`;
//! * entries come in orbit pairs `caret(u p, u q) = u(caret(p, q))`.
//!
//! Remaining freedom is resolved by depth-first assignment with a
//! partial re-scan of the axiom instances after every step, and each
//! completed table is confirmed by the official checker before being
//! admitted to the catalog.

use std::collections::BTreeMap;

use crate::axioms::{check_caret_axioms, check_cubic, check_mr_axiom};
use crate::error::{Error, Result};
use crate::exec::scan_rows;
use crate::table::{Algebra, FiniteStructure, ABSENT};

/// Largest ground size the search and semilattice enumerator accept.
pub const MAX_SEARCH_SIZE: usize = 8;

/// Parameters for [`search_models`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Search all sizes `1..=max_size` (at most [`MAX_SEARCH_SIZE`]).
    pub max_size: usize,
    /// Also enforce the extra axiom that pins the caret to the meet
    /// `x /\ delta(x v y, y)`.
    pub include_extra: bool,
    /// Fan the per-semilattice work out across threads.
    pub parallel: bool,
}

impl Default for SearchConfig {
    fn default() -> SearchConfig {
        SearchConfig { max_size: 6, include_extra: false, parallel: true }
    }
}

/// All join-semilattices with a top on `n` elements, up to isomorphism,
/// as canonical join tables with the top at index 0.
///
/// Enumeration inserts elements in a linear extension descending from
/// the top: each new element is minimal, its strict up-set is an
/// upward-closed subset of the existing elements, and every new pair
/// must acquire a unique least upper bound.
pub fn enumerate_semilattices(n: usize) -> Result<Vec<FiniteStructure>> {
    if n == 0 || n > MAX_SEARCH_SIZE {
        return Err(Error::SizeOutOfRange { got: n, max: MAX_SEARCH_SIZE });
    }

    struct Enumerator {
        n: usize,
        /// Strict up-set of each element as a bitmask over indices.
        up: Vec<u16>,
        out: BTreeMap<Vec<usize>, FiniteStructure>,
    }

    impl Enumerator {
        fn above(&self, j: usize) -> u16 {
            self.up[j] | (1 << j)
        }

        fn least_of(&self, cub: u16) -> Option<usize> {
            (0..self.n)
                .filter(|&m| cub & (1 << m) != 0)
                .find(|&m| cub & !self.above(m) == 0)
        }

        fn step(&mut self, i: usize) {
            if i == self.n {
                self.emit();
                return;
            }
            'mask: for mask in 0..(1u16 << i) {
                if mask & 1 == 0 {
                    continue; // the top is above everything
                }
                for j in 1..i {
                    if mask & (1 << j) != 0 && self.up[j] & !mask != 0 {
                        continue 'mask; // not upward closed
                    }
                }
                for j in 0..i {
                    if mask & (1 << j) != 0 {
                        continue; // i < j, lub is j itself
                    }
                    let cub = mask & self.above(j);
                    if self.least_of(cub).is_none() {
                        continue 'mask; // no unique least upper bound
                    }
                }
                self.up[i] = mask;
                self.step(i + 1);
                self.up[i] = 0;
            }
        }

        fn emit(&mut self) {
            let n = self.n;
            let mut join = vec![0usize; n * n];
            for a in 0..n {
                for b in 0..n {
                    let cub = self.above(a) & self.above(b);
                    join[a * n + b] = self.least_of(cub).expect("checked during construction");
                }
            }
            let s = FiniteStructure::from_tables(n, 0, join, None, None)
                .expect("constructed tables are well-formed");
            let c = canonical_form(&s).expect("join law holds by construction").canonical;
            self.out.entry(c.join_table().to_vec()).or_insert(c);
        }
    }

    let mut e = Enumerator { n, up: vec![0; n], out: BTreeMap::new() };
    e.step(1);
    Ok(e.out.into_values().collect())
}

/// A structure together with the relabelling that canonicalises it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// `perm[old] = new`: applying this to the input yields `canonical`.
    pub perm: Vec<usize>,
    pub canonical: FiniteStructure,
}

/// Four-part refinement key used while canonicalising: row cell,
/// join cell, caret cell, delta cell (sentinel when absent).
type RefineKey = (usize, usize, usize, usize);

/// Canonical relabelling: the top goes to index 0 and the remaining
/// order is fixed by invariant refinement plus minimum-lexicographic
/// choice over the (join, caret, delta) tables. Isomorphic structures
/// produce identical canonical tables.
pub fn canonical_form(s: &FiniteStructure) -> Result<CanonicalForm> {
    let n = s.size();
    let ord = s.order()?;

    // Invariant refinement: split elements into cells by structural
    // keys until stable. Keys are fully deterministic (no hashing).
    let sentinel = usize::MAX;
    let mut cell: Vec<usize> = {
        let mut keys: Vec<RefineKey> = (0..n)
            .map(|i| {
                (
                    usize::from(i != s.one()),
                    ord.down_set(i).len(),
                    ord.up_set(i).len(),
                    0,
                )
            })
            .collect();
        assign_cells(&mut keys)
    };
    loop {
        let keys: Vec<(usize, Vec<RefineKey>)> = (0..n)
            .map(|i| {
                let mut profile: Vec<RefineKey> = (0..n)
                    .map(|j| {
                        (
                            cell[j],
                            cell[s.join_at(i, j)],
                            s.caret_at(i, j).map_or(sentinel, |c| cell[c]),
                            s.delta_at(i, j).map_or(sentinel, |d| cell[d]),
                        )
                    })
                    .collect();
                profile.sort_unstable();
                (cell[i], profile)
            })
            .collect();
        let mut owned = keys;
        let next = assign_cells(&mut owned);
        if next == cell {
            break;
        }
        cell = next;
    }

    // Group elements by cell, in cell order (the top's cell is first by
    // construction of the initial key).
    let cell_count = cell.iter().max().map_or(0, |m| m + 1);
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); cell_count];
    for i in 0..n {
        groups[cell[i]].push(i);
    }

    // Try every within-cell arrangement; keep the lexicographic minimum.
    let mut best: Option<(Vec<Vec<usize>>, Vec<usize>)> = None;
    let mut order = Vec::with_capacity(n);
    explore(&groups, 0, &mut order, &mut |order: &[usize]| {
        let mut perm = vec![0usize; n];
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new;
        }
        let r = s.relabel(&perm);
        let key = vec![
            r.join_table().to_vec(),
            r.caret_table().map(|t| t.to_vec()).unwrap_or_default(),
            r.delta_table().map(|t| t.to_vec()).unwrap_or_default(),
        ];
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            best = Some((key, perm));
        }
    });

    let (_, perm) = best.expect("at least one arrangement exists");
    let canonical = s.relabel(&perm);
    Ok(CanonicalForm { perm, canonical })
}

/// Convert sortable keys into dense cell ids (0 = smallest key).
fn assign_cells<K: Ord + Clone>(keys: &mut [K]) -> Vec<usize> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).expect("key was inserted"))
        .collect()
}

/// Visit every ordering that concatenates a permutation of each group.
fn explore(groups: &[Vec<usize>], g: usize, order: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if g == groups.len() {
        visit(order);
        return;
    }
    let mut items = groups[g].clone();
    permute(&mut items, 0, &mut |p: &[usize]| {
        let len = order.len();
        order.extend_from_slice(p);
        explore(groups, g + 1, order, visit);
        order.truncate(len);
    });
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Candidate involutions for `u = caret(1, _)`: order-preserving,
/// fixing the top, fixed-point-free elsewhere, with `x v u(x) = 1`.
fn u_candidates(alg: &Algebra) -> Vec<Vec<usize>> {
    let n = alg.size();
    let one = alg.one();
    let mut u = vec![usize::MAX; n];
    u[one] = one;
    let mut out = Vec::new();
    pair_up(alg, &mut u, &mut out);
    out
}

fn pair_up(alg: &Algebra, u: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let n = alg.size();
    let Some(a) = (0..n).find(|&x| u[x] == usize::MAX) else {
        let preserves = (0..n)
            .all(|x| (0..n).all(|y| alg.leq(x, y) == alg.leq(u[x], u[y])));
        if preserves {
            out.push(u.clone());
        }
        return;
    };
    for b in a + 1..n {
        if u[b] != usize::MAX || alg.join(a, b) != alg.one() {
            continue;
        }
        u[a] = b;
        u[b] = a;
        pair_up(alg, u, out);
        u[a] = usize::MAX;
        u[b] = usize::MAX;
    }
}

/// Re-scan every axiom instance whose caret entries are all assigned.
/// Structural constraints — the domains, the row of the top, and orbit
/// propagation — are enforced by construction and not re-tested here.
fn partial_ok(alg: &Algebra, u: &[usize], caret: &[usize], include_extra: bool) -> bool {
    let n = alg.size();
    let g = |a: usize, b: usize| -> Option<usize> {
        let v = caret[a * n + b];
        (v != ABSENT).then_some(v)
    };
    let arr = |x: usize, y: usize| -> Option<usize> { Some(alg.join(y, u[g(x, y)?])) };

    for x in 0..n {
        for y in 0..n {
            // (e.i) (x -> y) -> y = x v y
            if let Some(a1) = arr(x, y) {
                if let Some(a2) = arr(a1, y) {
                    if a2 != alg.join(x, y) {
                        return false;
                    }
                }
            }
            // (f) (x v y) -> ((x v y) ^ y) = 1 ^ (x -> y)
            let j = alg.join(x, y);
            if let (Some(cjy), Some(axy)) = (g(j, y), arr(x, y)) {
                if let Some(lhs) = arr(j, cjy) {
                    if lhs != u[axy] {
                        return false;
                    }
                }
            }
            // (g) x ^ y <= (x v y) ^ y
            if let (Some(a), Some(b)) = (g(x, y), g(j, y)) {
                if !alg.leq(a, b) {
                    return false;
                }
            }
            // (i) (x v y) ^ y <= x -> (x ^ y)
            if include_extra {
                if let (Some(cjy), Some(cxy)) = (g(j, y), g(x, y)) {
                    if let Some(a) = arr(x, cxy) {
                        if !alg.leq(cjy, a) {
                            return false;
                        }
                    }
                }
            }
            // (e.ii) x -> (y -> z) = y -> (x -> z)
            for z in 0..n {
                if let (Some(in1), Some(in2)) = (arr(y, z), arr(x, z)) {
                    if let (Some(l), Some(r)) = (arr(x, in1), arr(y, in2)) {
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// All caret tables on one semilattice that pass the axioms.
fn extend_models(sl: &FiniteStructure, include_extra: bool) -> Vec<FiniteStructure> {
    let alg = Algebra::new(sl).expect("enumerated semilattices are valid");
    let n = alg.size();
    let one = alg.one();
    let mut out = Vec::new();

    'cand: for u in u_candidates(&alg) {
        // Finite domain of every entry off the top row.
        let mut dom: Vec<Vec<usize>> = vec![Vec::new(); n * n];
        for p in 0..n {
            if p == one {
                continue;
            }
            for q in 0..n {
                let d: Vec<usize> = (0..n)
                    .filter(|&c| alg.leq(c, p) && alg.join(c, q) == alg.join(p, q))
                    .collect();
                if d.is_empty() {
                    continue 'cand;
                }
                dom[p * n + q] = d;
            }
        }
        let mut caret = vec![ABSENT; n * n];
        for q in 0..n {
            caret[one * n + q] = u[q];
        }
        assign(&alg, &u, &dom, &mut caret, include_extra, &mut out);
    }
    out
}

fn assign(
    alg: &Algebra,
    u: &[usize],
    dom: &[Vec<usize>],
    caret: &mut Vec<usize>,
    include_extra: bool,
    out: &mut Vec<FiniteStructure>,
) {
    let n = alg.size();
    let one = alg.one();

    // Most-constrained unassigned cell first.
    let mut best: Option<(usize, usize, usize)> = None;
    for p in 0..n {
        if p == one {
            continue;
        }
        for q in 0..n {
            if caret[p * n + q] != ABSENT {
                continue;
            }
            let len = dom[p * n + q].len();
            if best.is_none_or(|(l, _, _)| len < l) {
                best = Some((len, p, q));
            }
        }
    }

    let Some((_, p, q)) = best else {
        // Complete table: attach the delta induced on comparable pairs
        // and subject the candidate to the official checkers.
        let mut delta = vec![ABSENT; n * n];
        for x in 0..n {
            for y in 0..n {
                if alg.leq(y, x) {
                    delta[x * n + y] = caret[x * n + y];
                }
            }
        }
        let s = FiniteStructure::from_tables(
            n,
            one,
            alg.structure().join_table().to_vec(),
            Some(caret.clone()),
            Some(delta),
        )
        .expect("assigned entries are in range");
        let caret_ok = check_caret_axioms(&s, include_extra)
            .expect("caret table present")
            .iter()
            .all(|r| r.passed);
        if caret_ok {
            // The caret axioms force a cubic MR-algebra; a failure here
            // would disprove that theorem, so it must never pass silently.
            let cubic_ok = check_cubic(&s)
                .expect("delta table present")
                .iter()
                .all(|r| r.passed);
            let mr_ok = check_mr_axiom(&s).expect("delta table present").passed;
            assert!(
                cubic_ok && mr_ok,
                "caret model of size {n} violates the cubic/MR theorems"
            );
            out.push(s);
        }
        return;
    };

    let (pu, qu) = (u[p], u[q]);
    for &c in &dom[p * n + q] {
        let cu = u[c];
        if !dom[pu * n + qu].contains(&cu) {
            continue;
        }
        caret[p * n + q] = c;
        caret[pu * n + qu] = cu;
        if partial_ok(alg, u, caret, include_extra) {
            assign(alg, u, dom, caret, include_extra, out);
        }
        caret[p * n + q] = ABSENT;
        caret[pu * n + qu] = ABSENT;
    }
}

/// Catalog of caret models found per size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelCatalog {
    /// `(size, canonical models)` for every searched size, ascending.
    pub by_size: Vec<(usize, Vec<FiniteStructure>)>,
}

impl ModelCatalog {
    /// `(size, model count)` pairs.
    pub fn counts(&self) -> Vec<(usize, usize)> {
        self.by_size.iter().map(|(n, ms)| (*n, ms.len())).collect()
    }

    /// Compact rendering such as `1:1 2:0 3:1 4:0`.
    pub fn summary(&self) -> String {
        self.counts()
            .iter()
            .map(|(n, c)| format!("{n}:{c}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Models found at one size, if it was searched.
    pub fn models(&self, size: usize) -> Option<&[FiniteStructure]> {
        self.by_size
            .iter()
            .find(|(n, _)| *n == size)
            .map(|(_, ms)| ms.as_slice())
    }
}

/// Search sizes `1..=cfg.max_size` for models of the caret axioms.
/// Results are canonical, deduplicated, and deterministic regardless of
/// the parallel flag.
pub fn search_models(cfg: &SearchConfig) -> Result<ModelCatalog> {
    if cfg.max_size == 0 || cfg.max_size > MAX_SEARCH_SIZE {
        return Err(Error::SizeOutOfRange { got: cfg.max_size, max: MAX_SEARCH_SIZE });
    }
    let mut by_size = Vec::new();
    for n in 1..=cfg.max_size {
        let sls = enumerate_semilattices(n)?;
        let found: Vec<FiniteStructure> =
            scan_rows(cfg.parallel, sls.len(), |i| extend_models(&sls[i], cfg.include_extra));
        let mut dedup: BTreeMap<(Vec<usize>, Vec<usize>), FiniteStructure> = BTreeMap::new();
        for m in found {
            let c = canonical_form(&m)?.canonical;
            let key = (
                c.join_table().to_vec(),
                c.caret_table().expect("models carry a caret").to_vec(),
            );
            dedup.entry(key).or_insert(c);
        }
        by_size.push((n, dedup.into_values().collect()));
    }
    Ok(ModelCatalog { by_size })
}
