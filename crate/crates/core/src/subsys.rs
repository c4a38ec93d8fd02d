//! Root subsystems: closures, enumeration up to conjugacy, maximal
//! subsystems, completely perpendicular sets, normalizer dimensions and
//! fixed-weight counts.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootset::RootSet;
use crate::rootsys::{Family, Rat, Root, RootSystem, Vector, Weight};
use crate::weyl::canonical_set;

/// A symmetric reflection-closed set of roots with its type label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootSubsystem {
    roots: RootSet,
    label: String,
}

impl RootSubsystem {
    /// Wraps a set assumed to be a subsystem and computes its label.
    pub fn new(rs: &RootSystem, roots: RootSet) -> Self {
        let label = type_label(rs, roots);
        RootSubsystem { roots, label }
    }

    /// Reflection closure of the given root indices.
    pub fn from_roots(rs: &RootSystem, idx: impl IntoIterator<Item = usize>) -> Self {
        Self::new(rs, reflection_closure_set(rs, RootSet::from_indices(idx)))
    }

    pub fn empty() -> Self {
        RootSubsystem {
            roots: RootSet::new(),
            label: "∅".into(),
        }
    }

    pub fn roots(&self) -> RootSet {
        self.roots
    }

    pub fn type_label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn rank(&self, rs: &RootSystem) -> usize {
        simple_system(rs, self.roots).len()
    }

    pub fn root_vectors(&self, rs: &RootSystem) -> Vec<Root> {
        self.roots.iter().map(|i| rs.root(i).clone()).collect()
    }

    pub fn root_strings(&self, rs: &RootSystem) -> Vec<Vec<String>> {
        self.roots.iter().map(|i| rs.root(i).to_strings()).collect()
    }
}

/// Smallest symmetric set containing `s` that is closed under s_α(β).
pub fn reflection_closure_set(rs: &RootSystem, s: RootSet) -> RootSet {
    let mut set = RootSet::new();
    let mut work: Vec<usize> = Vec::new();
    for i in s.iter() {
        if set.insert(i) {
            work.push(i);
        }
    }
    while let Some(g) = work.pop() {
        let members: Vec<usize> = set.iter().collect();
        let sg = rs.reflection_perm(g);
        for d in members {
            let a = sg.apply(d);
            if set.insert(a) {
                work.push(a);
            }
            let b = rs.reflection_perm(d).apply(g);
            if set.insert(b) {
                work.push(b);
            }
        }
    }
    set
}

pub fn reflection_closure(rs: &RootSystem, s: &[Root]) -> Result<RootSubsystem> {
    let idx = s
        .iter()
        .map(|r| rs.require_root(r))
        .collect::<Result<Vec<_>>>()?;
    Ok(RootSubsystem::from_roots(rs, idx))
}

/// Smallest symmetric set containing `s` closed under root sums.
pub fn additive_closure_set(rs: &RootSystem, s: RootSet) -> RootSet {
    let mut set = RootSet::new();
    for i in s.iter() {
        set.insert(i);
        set.insert(rs.neg_index(i));
    }
    loop {
        let members: Vec<usize> = set.iter().collect();
        let mut grew = false;
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                if let Some(s) = rs.sum_index(i, j) {
                    grew |= set.insert(s);
                }
            }
        }
        if !grew {
            return set;
        }
    }
}

pub fn is_additively_closed(rs: &RootSystem, s: RootSet) -> bool {
    let members: Vec<usize> = s.iter().collect();
    members.iter().all(|&i| {
        members
            .iter()
            .all(|&j| rs.sum_index(i, j).is_none_or(|k| s.contains(k)))
    })
}

pub fn is_subsystem(rs: &RootSystem, s: RootSet) -> bool {
    s.iter().all(|i| {
        let p = rs.reflection_perm(i);
        s.iter().all(|j| s.contains(p.apply(j)))
    })
}

/// Simple roots of a subsystem: positive members not a sum of two positive
/// members.
pub fn simple_system(rs: &RootSystem, s: RootSet) -> Vec<usize> {
    let pos: Vec<usize> = s.iter().filter(|&i| rs.is_positive(i)).collect();
    let mut decomposable = RootSet::new();
    for (k, &i) in pos.iter().enumerate() {
        for &j in &pos[k + 1..] {
            if let Some(t) = rs.sum_index(i, j) {
                if s.contains(t) {
                    decomposable.insert(t);
                }
            }
        }
    }
    pos.into_iter()
        .filter(|&i| !decomposable.contains(i))
        .collect()
}

fn classify_component(rs: &RootSystem, nodes: &[usize], cartan: &[Vec<i64>]) -> (char, usize) {
    let n = nodes.len();
    let host = rs.family();
    if n == 1 {
        let class = rs.length_class(nodes[0]);
        let letter = match (host, class) {
            (Family::B, crate::rootsys::LengthClass::Short) => 'B',
            (Family::C, crate::rootsys::LengthClass::Long) => 'C',
            _ => 'A',
        };
        return (letter, 1);
    }
    let mut degree = vec![0usize; n];
    let mut triple = false;
    let mut laced = true;
    for a in 0..n {
        for b in 0..n {
            if a != b && cartan[a][b] != 0 {
                degree[a] += 1;
                let p = cartan[a][b] * cartan[b][a];
                laced &= p == 1;
                triple |= p == 3;
            }
        }
    }
    if triple {
        return ('G', 2);
    }
    if laced {
        let Some(branch) = (0..n).find(|&a| degree[a] == 3) else {
            return ('A', n);
        };
        // Arm lengths from the branch node.
        let mut arms = Vec::new();
        for start in (0..n).filter(|&b| cartan[branch][b] != 0 && b != branch) {
            let (mut prev, mut cur, mut len) = (branch, start, 1);
            loop {
                let next = (0..n).find(|&c| c != prev && c != cur && cartan[cur][c] != 0);
                match next {
                    Some(c) => {
                        prev = cur;
                        cur = c;
                        len += 1;
                    }
                    None => break,
                }
            }
            arms.push(len);
        }
        arms.sort_unstable();
        return if arms[0] == 1 && arms[1] == 1 {
            ('D', n)
        } else {
            ('E', n)
        };
    }
    let lens: Vec<Rat> = nodes.iter().map(|&i| rs.length_sq(i)).collect();
    let max = *lens.iter().max().unwrap();
    let n_long = lens.iter().filter(|&&l| l == max).count();
    let n_short = n - n_long;
    if n == 4 && n_long == 2 && n_short == 2 {
        // F4 has its double bond between the two middle nodes; B4/C4 never
        // have two short and two long simple roots.
        return ('F', 4);
    }
    if n == 2 {
        return match host {
            Family::C => ('C', 2),
            _ => ('B', 2),
        };
    }
    if n_short == 1 {
        ('B', n)
    } else {
        ('C', n)
    }
}

/// Decomposition label such as `"A1×A3"`; `"∅"` for the empty set.
pub fn type_label(rs: &RootSystem, s: RootSet) -> String {
    let simple = simple_system(rs, s);
    if simple.is_empty() {
        return "∅".into();
    }
    let n = simple.len();
    let cartan: Vec<Vec<i64>> = simple
        .iter()
        .map(|&a| {
            simple
                .iter()
                .map(|&b| {
                    let x = rs.pairing_idx(rs.root(a), b);
                    debug_assert!(x.is_integer());
                    x.to_integer()
                })
                .collect()
        })
        .collect();
    let mut comp = vec![usize::MAX; n];
    let mut parts: Vec<(char, usize)> = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut members = vec![start];
        comp[start] = start;
        let mut k = 0;
        while k < members.len() {
            let a = members[k];
            for b in 0..n {
                if comp[b] == usize::MAX && cartan[a][b] != 0 {
                    comp[b] = start;
                    members.push(b);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        let sub: Vec<Vec<i64>> = members
            .iter()
            .map(|&a| members.iter().map(|&b| cartan[a][b]).collect())
            .collect();
        let nodes: Vec<usize> = members.iter().map(|&a| simple[a]).collect();
        parts.push(classify_component(rs, &nodes, &sub));
    }
    parts.sort();
    parts
        .iter()
        .map(|(c, r)| format!("{c}{r}"))
        .collect::<Vec<_>>()
        .join("×")
}

/// Limits for subsystem enumeration.
#[derive(Debug, Clone, Copy)]
pub struct EnumerationLimits {
    pub max_rank: usize,
    pub max_classes: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_rank: 5,
            max_classes: 100_000,
        }
    }
}

pub fn enumerate_subsystems(rs: &RootSystem) -> Result<Vec<RootSubsystem>> {
    enumerate_subsystems_with(rs, EnumerationLimits::default())
}

/// One subsystem per W-conjugacy class, sorted by size then by canonical
/// root list. Each class is represented by its canonical form.
pub fn enumerate_subsystems_with(
    rs: &RootSystem,
    limits: EnumerationLimits,
) -> Result<Vec<RootSubsystem>> {
    if rs.rank() > limits.max_rank {
        return Err(Error::PartialEnumeration {
            frontier: 0,
            reason: format!(
                "rank {} exceeds the enumeration bound {}",
                rs.rank(),
                limits.max_rank
            ),
        });
    }
    let canon = |s: RootSet, level: usize| {
        canonical_set(rs, s).map_err(|e| Error::PartialEnumeration {
            frontier: level,
            reason: e.to_string(),
        })
    };
    let positives = rs.positive_indices();
    let mut classes: BTreeSet<RootSet> = BTreeSet::new();
    let mut raw_seen: HashMap<RootSet, ()> = HashMap::new();
    let empty = RootSet::new();
    classes.insert(empty);
    let mut frontier = vec![empty];
    let mut level = 0;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            for &a in &positives {
                if s.contains(a) {
                    continue;
                }
                let mut t = *s;
                t.insert(a);
                let closed = reflection_closure_set(rs, t);
                if raw_seen.insert(closed, ()).is_some() {
                    continue;
                }
                let c = canon(closed, level)?;
                if classes.insert(c) {
                    if classes.len() > limits.max_classes {
                        return Err(Error::PartialEnumeration {
                            frontier: level,
                            reason: format!("more than {} classes", limits.max_classes),
                        });
                    }
                    next.push(c);
                }
            }
        }
        frontier = next;
        level += 1;
    }
    let mut out: Vec<RootSet> = classes.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    Ok(out.into_iter().map(|s| RootSubsystem::new(rs, s)).collect())
}

/// How a maximal subsystem arises from the (extended) Dynkin diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MaximalKind {
    /// Delete a simple root of mark 1.
    MarkOne,
    /// Delete a node of prime mark from the extended diagram.
    PrimeMark,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalSubsystem {
    pub subsystem: RootSubsystem,
    pub characteristic: u32,
    pub kind: MaximalKind,
    /// 1-based simple root index that was deleted.
    pub deleted_node: usize,
}

fn is_prime(n: u32) -> bool {
    n >= 2
        && (2..n)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Roots whose simple-root coordinate `i` is divisible by `m` (m = 1 means
/// the coordinate must vanish).
fn coordinate_filter(rs: &RootSystem, i: usize, m: u32) -> RootSet {
    RootSet::from_indices((0..rs.len()).filter(|&r| {
        let c = rs.simple_coords(r)[i];
        if m == 1 {
            c == 0
        } else {
            c % m as i64 == 0
        }
    }))
}

/// Maximal proper subsystems from the two Dynkin deletion rules, one per
/// conjugacy class, with characteristic equal to the deleted mark.
pub fn maximal_subsystems(rs: &RootSystem) -> Result<Vec<MaximalSubsystem>> {
    let canon_available = rs.weyl_group().is_ok();
    let mut found: BTreeMap<(u32, RootSet), MaximalSubsystem> = BTreeMap::new();
    for (i, &n) in rs.marks().iter().enumerate() {
        let (set, kind) = if n == 1 {
            (coordinate_filter(rs, i, 1), MaximalKind::MarkOne)
        } else if is_prime(n) {
            (coordinate_filter(rs, i, n), MaximalKind::PrimeMark)
        } else {
            continue;
        };
        let key = if canon_available {
            canonical_set(rs, set)?
        } else {
            set
        };
        found.entry((n, key)).or_insert_with(|| MaximalSubsystem {
            subsystem: RootSubsystem::new(rs, key),
            characteristic: n,
            kind,
            deleted_node: i + 1,
        });
    }
    Ok(found.into_values().collect())
}

/// The subsystem generated by the extended simple system with node `i`
/// (0-based simple index) removed.
pub fn extended_deletion(rs: &RootSystem, i: usize) -> RootSet {
    let mut gens = RootSet::from_indices(
        rs.simple_indices()
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, &r)| r),
    );
    gens.insert(rs.lowest_root_index());
    reflection_closure_set(rs, gens)
}

fn indices_of(rs: &RootSystem, a: &[Root]) -> Result<Vec<usize>> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    a.iter().map(|r| rs.require_root(r)).collect()
}

/// Orthogonal projection of `v` onto the span of pairwise orthogonal roots.
fn project(rs: &RootSystem, a: &[usize], v: &Vector) -> Vector {
    a.iter().fold(Vector::zeros(rs.ambient_dim()), |acc, &i| {
        let r = rs.root(i);
        &acc + &r.scale(v.dot(r) / r.norm_sq())
    })
}

pub fn is_completely_perpendicular_idx(rs: &RootSystem, a: &[usize]) -> Result<bool> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    for (k, &i) in a.iter().enumerate() {
        for &j in &a[k + 1..] {
            if !rs.root(i).dot(rs.root(j)).is_zero() {
                return Ok(false);
            }
        }
    }
    let pm = RootSet::from_indices(a.iter().flat_map(|&i| [i, rs.neg_index(i)]));
    if pm.len() != 2 * a.len() {
        // Repeated or opposite roots are not orthogonal; unreachable after
        // the check above but kept for safety with duplicates.
        return Ok(false);
    }
    Ok((0..rs.len()).all(|b| pm.contains(b) || project(rs, a, rs.root(b)) != *rs.root(b)))
}

pub fn is_completely_perpendicular(rs: &RootSystem, a: &[Root]) -> Result<bool> {
    let idx = indices_of(rs, a)?;
    is_completely_perpendicular_idx(rs, &idx)
}

pub fn normalizer_dim_idx(rs: &RootSystem, a: &[usize]) -> Result<usize> {
    if !is_completely_perpendicular_idx(rs, a)? {
        return Err(Error::NotCompletelyPerpendicular);
    }
    let pm: Vec<usize> = a.iter().flat_map(|&i| [i, rs.neg_index(i)]).collect();
    let pm_set = RootSet::from_indices(pm.iter().copied());
    let count = (0..rs.len())
        .filter(|&b| {
            pm_set.contains(b)
                || pm
                    .iter()
                    .all(|&al| rs.sum_index(b, al).is_none_or(|s| pm_set.contains(s)))
        })
        .count();
    Ok(rs.rank() + count)
}

/// `dim n_g(g^{(A)})`: Cartan plus root spaces normalizing the sum of the
/// sl2's attached to A.
pub fn normalizer_dim(rs: &RootSystem, a: &[Root]) -> Result<usize> {
    let idx = indices_of(rs, a)?;
    normalizer_dim_idx(rs, &idx)
}

fn integral_pairing(rs: &RootSystem, w: &Weight, i: usize) -> Result<i64> {
    let p = rs.pairing_idx(w, i);
    if !p.is_integer() {
        return Err(Error::NonIntegralPairing {
            weight: w.to_string(),
            pairing: p.to_string(),
        });
    }
    Ok(p.to_integer())
}

/// Dimension of the invariants of the commuting sl2's attached to `a` in a
/// module with the given weight multiset.
pub fn fixed_weight_count_idx(
    rs: &RootSystem,
    a: &[usize],
    weights: &[(Weight, u64)],
) -> Result<u64> {
    let mut m: BTreeMap<Weight, i64> = BTreeMap::new();
    for (w, k) in weights {
        if w.dim() != rs.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: rs.ambient_dim(),
                got: w.dim(),
            });
        }
        for &i in a {
            integral_pairing(rs, w, i)?;
        }
        *m.entry(w.clone()).or_insert(0) += *k as i64;
    }
    for &i in a {
        let alpha = rs.root(i);
        let mut next = BTreeMap::new();
        for (w, &k) in &m {
            if integral_pairing(rs, w, i)? != 0 {
                continue;
            }
            let up = m.get(&(w + alpha)).copied().unwrap_or(0);
            let d = k - up;
            if d < 0 {
                return Err(Error::Invariant(format!(
                    "weight multiset is not a module: multiplicity drops along the {alpha} string at {w}"
                )));
            }
            if d > 0 {
                next.insert(w.clone(), d);
            }
        }
        m = next;
    }
    Ok(m.values().map(|&k| k as u64).sum())
}

pub fn fixed_weight_count(rs: &RootSystem, a: &[Root], weights: &[(Weight, u64)]) -> Result<u64> {
    let idx: Vec<usize> = a
        .iter()
        .map(|r| rs.require_root(r))
        .collect::<Result<_>>()?;
    fixed_weight_count_idx(rs, &idx, weights)
}

/// Completely perpendicular sets up to W-conjugacy, each given as a list of
/// positive root indices, sorted by size then canonical order.
pub fn enumerate_perpendicular_sets(rs: &RootSystem, max_size: usize) -> Result<Vec<Vec<usize>>> {
    let positives = rs.positive_indices();
    let sym = |a: &[usize]| RootSet::from_indices(a.iter().flat_map(|&i| [i, rs.neg_index(i)]));
    let mut classes: BTreeMap<RootSet, Vec<usize>> = BTreeMap::new();
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_size {
        let mut next = Vec::new();
        for a in &frontier {
            for &b in &positives {
                if a.contains(&b) || a.iter().any(|&x| !rs.root(x).dot(rs.root(b)).is_zero()) {
                    continue;
                }
                let mut t = a.clone();
                t.push(b);
                if !is_completely_perpendicular_idx(rs, &t)? {
                    continue;
                }
                let c = canonical_set(rs, sym(&t))?;
                if let std::collections::btree_map::Entry::Vacant(e) = classes.entry(c) {
                    let mut rep: Vec<usize> = c.iter().filter(|&i| rs.is_positive(i)).collect();
                    rep.sort_unstable();
                    e.insert(rep.clone());
                    next.push(rep);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    let mut out: Vec<(RootSet, Vec<usize>)> = classes.into_iter().collect();
    out.sort_by(|x, y| x.0.len().cmp(&y.0.len()).then(x.0.cmp(&y.0)));
    Ok(out.into_iter().map(|(_, v)| v).collect())
}

/// Integer vector of pairings, used by callers that need `⟨λ, α^∨⟩` for a
/// list of roots.
pub fn pairings(rs: &RootSystem, w: &Weight, a: &[usize]) -> Vec<Rat> {
    a.iter().map(|&i| rs.pairing_idx(w, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, rat, ratf};
    use crate::weyl::{generate_group_idx, DEFAULT_ELEMENT_CAP};

    fn v(x: &[i64]) -> Vector {
        Vector::from_ints(x)
    }

    fn idx(rs: &RootSystem, x: &[i64]) -> usize {
        rs.index_of(&v(x)).unwrap()
    }

    fn all_subsets_oracle(rs: &RootSystem) -> usize {
        // Brute force over subsets of positive roots: every subsystem is the
        // symmetric closure of its positive part.
        let pos = rs.positive_indices();
        let mut classes = BTreeSet::new();
        for mask in 0u32..(1 << pos.len()) {
            let s = RootSet::from_indices(
                (0..pos.len())
                    .filter(|k| mask >> k & 1 == 1)
                    .flat_map(|k| [pos[k], rs.neg_index(pos[k])]),
            );
            if is_subsystem(rs, s) {
                classes.insert(canonical_set(rs, s).unwrap());
            }
        }
        classes.len()
    }

    #[test]
    fn closure_examples() {
        let a2 = build_root_system(Family::A, 2).unwrap();
        let s = reflection_closure(&a2, &[v(&[1, -1, 0])]).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.type_label(), "A1");
        let full = reflection_closure(&a2, &[v(&[1, -1, 0]), v(&[0, 1, -1])]).unwrap();
        assert_eq!(full.len(), 6);
        assert_eq!(full.type_label(), "A2");
        let b2 = build_root_system(Family::B, 2).unwrap();
        let full = reflection_closure(&b2, &[v(&[1, 0]), v(&[1, -1])]).unwrap();
        assert_eq!(full.len(), 8);
        assert_eq!(full.type_label(), "B2");
    }

    #[test]
    fn closure_matches_group_oracle() {
        for (f, l) in [
            (Family::A, 3),
            (Family::B, 3),
            (Family::C, 3),
            (Family::D, 4),
            (Family::G, 2),
        ] {
            let rs = build_root_system(f, l).unwrap();
            let n = rs.len();
            for i in 0..n {
                for j in (i + 1..n).step_by(3) {
                    let s = RootSet::from_indices([i, j]);
                    let g = generate_group_idx(&rs, &[i, j], DEFAULT_ELEMENT_CAP).unwrap();
                    assert_eq!(
                        reflection_closure_set(&rs, s),
                        g.delta_gamma(),
                        "{f}{l} {i} {j}"
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_counts_match_subset_oracle() {
        for (f, l, expect) in [(Family::A, 1, 2), (Family::A, 2, 3), (Family::B, 2, 6)] {
            let rs = build_root_system(f, l).unwrap();
            let classes = enumerate_subsystems(&rs).unwrap();
            assert_eq!(classes.len(), expect, "{f}{l}");
            assert_eq!(all_subsets_oracle(&rs), expect);
        }
        for (f, l) in [
            (Family::A, 3),
            (Family::B, 3),
            (Family::C, 3),
            (Family::G, 2),
        ] {
            let rs = build_root_system(f, l).unwrap();
            assert_eq!(
                enumerate_subsystems(&rs).unwrap().len(),
                all_subsets_oracle(&rs),
                "{f}{l}"
            );
        }
    }

    #[test]
    fn enumeration_rejects_large_rank() {
        let e6 = build_root_system(Family::E, 6).unwrap();
        assert!(matches!(
            enumerate_subsystems(&e6),
            Err(Error::PartialEnumeration { .. })
        ));
    }

    #[test]
    fn labels() {
        let b2 = build_root_system(Family::B, 2).unwrap();
        let labels: Vec<String> = enumerate_subsystems(&b2)
            .unwrap()
            .iter()
            .map(|s| s.type_label().to_string())
            .collect();
        assert_eq!(labels, ["∅", "A1", "B1", "A1×A1", "B1×B1", "B2"]);
        let d4 = build_root_system(Family::D, 4).unwrap();
        assert_eq!(
            RootSubsystem::new(&d4, RootSet::full(24)).type_label(),
            "D4"
        );
        let e6 = build_root_system(Family::E, 6).unwrap();
        assert_eq!(
            RootSubsystem::new(&e6, RootSet::full(72)).type_label(),
            "E6"
        );
        let f4 = build_root_system(Family::F, 4).unwrap();
        assert_eq!(
            RootSubsystem::new(&f4, RootSet::full(48)).type_label(),
            "F4"
        );
        let c3 = build_root_system(Family::C, 3).unwrap();
        assert_eq!(
            RootSubsystem::new(&c3, RootSet::full(18)).type_label(),
            "C3"
        );
        let b4 = build_root_system(Family::B, 4).unwrap();
        assert_eq!(
            RootSubsystem::new(&b4, RootSet::full(32)).type_label(),
            "B4"
        );
    }

    #[test]
    fn maximal_examples() {
        let a2 = build_root_system(Family::A, 2).unwrap();
        let m = maximal_subsystems(&a2).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].subsystem.type_label(), "A1");
        assert_eq!(m[0].characteristic, 1);
        let d4 = build_root_system(Family::D, 4).unwrap();
        let m = maximal_subsystems(&d4).unwrap();
        assert!(m
            .iter()
            .any(|x| x.characteristic == 2 && x.subsystem.type_label() == "A1×A1×A1×A1"));
        for l in 1..=4 {
            let a = build_root_system(Family::A, l).unwrap();
            assert!(maximal_subsystems(&a)
                .unwrap()
                .iter()
                .all(|x| x.characteristic == 1));
        }
    }

    #[test]
    fn prime_mark_rule_matches_extended_diagram() {
        for (f, l) in [
            (Family::B, 4),
            (Family::C, 4),
            (Family::D, 5),
            (Family::G, 2),
            (Family::F, 4),
            (Family::E, 6),
        ] {
            let rs = build_root_system(f, l).unwrap();
            for (i, &n) in rs.marks().iter().enumerate() {
                if is_prime(n) {
                    assert_eq!(
                        coordinate_filter(&rs, i, n),
                        extended_deletion(&rs, i),
                        "{f}{l} node {i}"
                    );
                }
            }
        }
    }

    #[test]
    fn perpendicular_examples() {
        let b5 = build_root_system(Family::B, 5).unwrap();
        let a = [v(&[1, -1, 0, 0, 0]), v(&[0, 0, 1, -1, 0])];
        assert!(is_completely_perpendicular(&b5, &a).unwrap());
        assert_eq!(normalizer_dim(&b5, &a).unwrap(), 15);
        let b3 = build_root_system(Family::B, 3).unwrap();
        assert!(!is_completely_perpendicular(&b3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap());
        assert!(is_completely_perpendicular(&b3, &[v(&[1, 0, 0])]).unwrap());
        assert_eq!(is_completely_perpendicular(&b3, &[]), Err(Error::EmptySet));
        let a1 = build_root_system(Family::A, 1).unwrap();
        assert_eq!(normalizer_dim(&a1, &[v(&[1, -1])]).unwrap(), 3);
        let a2 = build_root_system(Family::A, 2).unwrap();
        assert_eq!(normalizer_dim(&a2, &[v(&[1, -1, 0])]).unwrap(), 4);
        assert_eq!(
            normalizer_dim(&b3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]),
            Err(Error::NotCompletelyPerpendicular)
        );
    }

    #[test]
    fn normalizer_lower_bound() {
        for (f, l) in [
            (Family::A, 4),
            (Family::B, 4),
            (Family::C, 4),
            (Family::D, 4),
        ] {
            let rs = build_root_system(f, l).unwrap();
            for a in enumerate_perpendicular_sets(&rs, 4).unwrap() {
                assert!(normalizer_dim_idx(&rs, &a).unwrap() >= rs.rank() + 2 * a.len());
            }
        }
    }

    #[test]
    fn fixed_counts() {
        let b5 = build_root_system(Family::B, 5).unwrap();
        let a = [v(&[1, -1, 0, 0, 0]), v(&[0, 0, 1, -1, 0])];
        let mut taut = vec![(Vector::zeros(5), 1)];
        for i in 0..5 {
            taut.push((Vector::unit(5, i), 1));
            taut.push((-&Vector::unit(5, i), 1));
        }
        assert_eq!(fixed_weight_count(&b5, &a, &taut).unwrap(), 3);
        let mut spin = Vec::new();
        for mask in 0..32u32 {
            let w = Vector(
                (0..5)
                    .map(|i| ratf(if mask >> i & 1 == 1 { 1 } else { -1 }, 2))
                    .collect(),
            );
            spin.push((w, 1));
        }
        assert_eq!(fixed_weight_count(&b5, &a, &spin).unwrap(), 8);
        assert_eq!(
            fixed_weight_count(&b5, &a, &[(Vector::zeros(5), 1)]).unwrap(),
            1
        );
        let bad = [(
            Vector(
                (0..5)
                    .map(|i| if i == 0 { ratf(1, 2) } else { rat(0) })
                    .collect(),
            ),
            1,
        )];
        assert!(matches!(
            fixed_weight_count(&b5, &a, &bad),
            Err(Error::NonIntegralPairing { .. })
        ));
    }

    #[test]
    fn perpendicular_enumeration_b3() {
        let b3 = build_root_system(Family::B, 3).unwrap();
        let sets = enumerate_perpendicular_sets(&b3, 3).unwrap();
        // {short}, {long}, {long, orthogonal short}; {ε1−ε2, ε1+ε2} spans ε1.
        let sizes: Vec<usize> = sets.iter().map(Vec::len).collect();
        assert_eq!(sizes, [1, 1, 2]);
        for a in &sets {
            assert!(is_completely_perpendicular_idx(&b3, a).unwrap());
        }
        let pair = [idx(&b3, &[1, -1, 0]), idx(&b3, &[1, 1, 0])];
        assert!(!is_completely_perpendicular_idx(&b3, &pair).unwrap());
    }
}
