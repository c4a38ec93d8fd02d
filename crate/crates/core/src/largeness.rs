//! Large reflection subgroups: the plane-meeting predicate, the additive
//! triple condition for simply-laced systems, classification up to
//! conjugacy, and the stored parametric table of large subsets for the
//! classical types.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::Row;
use crate::rootset::RootSet;
use crate::rootsys::{rat, Family, Rat, RootSystem, Vector};
use crate::subsys::{enumerate_subsystems, is_subsystem, maximal_subsystems, RootSubsystem};
use crate::weyl::{canonical_set, ReflectionSubgroup};

fn gram_det3(a: &Vector, b: &Vector, c: &Vector) -> Rat {
    let v = [a, b, c];
    let g: Vec<Vec<Rat>> = v
        .iter()
        .map(|x| v.iter().map(|y| x.dot(y)).collect())
        .collect();
    g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
        - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
        + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0])
}

/// The irreducible rank-2 planes: Δ ∩ (ℝα + ℝβ) for non-orthogonal,
/// non-proportional α, β.
#[derive(Debug, Clone)]
pub struct PlaneIndex {
    planes: Vec<RootSet>,
}

impl PlaneIndex {
    pub fn new(rs: &RootSystem) -> Self {
        let n = rs.len();
        let mut planes = BTreeSet::new();
        let mut covered: Vec<RootSet> = vec![RootSet::new(); n];
        for i in 0..n {
            for j in i + 1..n {
                if j == rs.neg_index(i)
                    || rs.root(i).dot(rs.root(j)).is_zero()
                    || covered[i].contains(j)
                {
                    continue;
                }
                let (a, b) = (rs.root(i), rs.root(j));
                let plane = RootSet::from_indices(
                    (0..n).filter(|&k| gram_det3(a, b, rs.root(k)).is_zero()),
                );
                for k in plane.iter() {
                    covered[k] = covered[k].union(&plane);
                }
                planes.insert(plane);
            }
        }
        PlaneIndex {
            planes: planes.into_iter().collect(),
        }
    }

    pub fn planes(&self) -> &[RootSet] {
        &self.planes
    }

    /// Large iff every irreducible plane contains a root of `delta_gamma`.
    pub fn is_large(&self, delta_gamma: RootSet) -> bool {
        self.planes.iter().all(|p| p.intersects(&delta_gamma))
    }
}

pub fn is_large_set(rs: &RootSystem, delta_gamma: RootSet) -> bool {
    PlaneIndex::new(rs).is_large(delta_gamma)
}

pub fn is_large(rs: &RootSystem, gamma: &ReflectionSubgroup) -> bool {
    is_large_set(rs, gamma.delta_gamma())
}

/// `{α, β, α+β} ∩ Δ_Γ ≠ ∅` whenever α + β is a root. Simply-laced only.
pub fn satisfies_condition_a(rs: &RootSystem, delta_gamma: RootSet) -> Result<bool> {
    if !rs.is_simply_laced() {
        return Err(Error::NotSimplyLaced(rs.name()));
    }
    let n = rs.len();
    for i in 0..n {
        if delta_gamma.contains(i) {
            continue;
        }
        for j in i + 1..n {
            if delta_gamma.contains(j) {
                continue;
            }
            if let Some(k) = rs.sum_index(i, j) {
                if !delta_gamma.contains(k) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// A conjugacy class of subsystems with its largeness verdict and, when it
/// is maximal, the characteristic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassVerdict {
    pub subsystem: RootSubsystem,
    pub large: bool,
    pub maximal: bool,
    pub characteristic: Option<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassJson {
    pub class: String,
    pub roots: Vec<Vec<String>>,
    pub large: bool,
    pub maximal: bool,
    pub characteristic: Option<u32>,
}

impl ClassVerdict {
    pub fn to_json(&self, rs: &RootSystem) -> ClassJson {
        ClassJson {
            class: self.subsystem.type_label().to_string(),
            roots: self.subsystem.root_strings(rs),
            large: self.large,
            maximal: self.maximal,
            characteristic: self.characteristic,
        }
    }
}

/// Every proper subsystem class with its verdicts, in canonical order.
pub fn class_verdicts(rs: &RootSystem) -> Result<Vec<ClassVerdict>> {
    let planes = PlaneIndex::new(rs);
    let maximal: BTreeMap<RootSet, u32> = maximal_subsystems(rs)?
        .into_iter()
        .map(|m| (m.subsystem.roots(), m.characteristic))
        .collect();
    let full = RootSet::full(rs.len());
    Ok(enumerate_subsystems(rs)?
        .into_iter()
        .filter(|s| s.roots() != full)
        .map(|s| {
            let characteristic = maximal.get(&s.roots()).copied();
            ClassVerdict {
                large: planes.is_large(s.roots()),
                maximal: characteristic.is_some(),
                characteristic,
                subsystem: s,
            }
        })
        .collect())
}

/// Conjugacy classes of proper subsystems whose reflection subgroup is
/// large.
pub fn classify_large(rs: &RootSystem) -> Result<Vec<RootSubsystem>> {
    Ok(class_verdicts(rs)?
        .into_iter()
        .filter(|c| c.large)
        .map(|c| c.subsystem)
        .collect())
}

/// One instantiated entry of the stored large-subset table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    pub row: &'static str,
    /// 1-based index set.
    pub index_set: Vec<usize>,
    pub roots: RootSet,
}

impl TableEntry {
    pub fn describe(&self) -> String {
        let ids: Vec<String> = self.index_set.iter().map(usize::to_string).collect();
        format!("{} I={{{}}}", self.row, ids.join(","))
    }
}

struct Builder<'a> {
    rs: &'a RootSystem,
    n: usize,
}

impl Builder<'_> {
    fn eps(&self, terms: &[(usize, i64)]) -> Vector {
        let mut v = Vector::zeros(self.rs.ambient_dim());
        for &(i, c) in terms {
            v.0[i] += rat(c);
        }
        v
    }

    fn add(&self, set: &mut RootSet, terms: &[(usize, i64)]) {
        let v = self.eps(terms);
        let i = self
            .rs
            .index_of(&v)
            .unwrap_or_else(|| panic!("table entry {v} is not a root of {}", self.rs.name()));
        set.insert(i);
    }

    /// ±ε_i ± ε_j for i ≠ j on the same side of I.
    fn same_side_pm(&self, inside: &[bool], set: &mut RootSet) {
        for i in 0..self.n {
            for j in i + 1..self.n {
                if inside[i] == inside[j] {
                    for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        self.add(set, &[(i, a), (j, b)]);
                    }
                }
            }
        }
    }

    /// ε_i − ε_j on the same side of I, plus ±(ε_i + ε_j) across.
    fn twisted_a(&self, inside: &[bool], set: &mut RootSet) {
        for i in 0..self.n {
            for j in 0..self.n {
                if i == j {
                    continue;
                }
                if inside[i] == inside[j] {
                    self.add(set, &[(i, 1), (j, -1)]);
                } else if inside[i] && !inside[j] {
                    self.add(set, &[(i, 1), (j, 1)]);
                    self.add(set, &[(i, -1), (j, -1)]);
                }
            }
        }
    }

    fn singles(&self, which: impl Iterator<Item = usize>, scale: i64, set: &mut RootSet) {
        for i in which {
            self.add(set, &[(i, scale)]);
            self.add(set, &[(i, -scale)]);
        }
    }
}

/// Instantiates every row of the stored table for a classical system.
pub fn table1_entries(rs: &RootSystem) -> Result<Vec<TableEntry>> {
    let (family, l) = (rs.family(), rs.rank());
    let min_rank = match family {
        Family::A => 2,
        Family::B => 3,
        Family::C => 2,
        Family::D => 3,
        _ => usize::MAX,
    };
    if l < min_rank {
        return Err(Error::InvalidType {
            family: family.to_string(),
            rank: l,
            reason: if min_rank == usize::MAX {
                "no stored large-subset table for exceptional types".into()
            } else {
                format!("the stored table covers rank >= {min_rank}")
            },
        });
    }
    let n = if family == Family::A { l + 1 } else { l };
    let b = Builder { rs, n };
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let inside: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        let index_set: Vec<usize> = (0..n).filter(|&i| inside[i]).map(|i| i + 1).collect();
        let k = index_set.len();
        let proper = k < n;
        let nonempty = k > 0;
        let mut push = |row: &'static str, roots: RootSet| {
            out.push(TableEntry {
                row,
                index_set: index_set.clone(),
                roots,
            })
        };
        match family {
            Family::A => {
                if proper && nonempty {
                    let mut s = RootSet::new();
                    for i in 0..n {
                        for j in 0..n {
                            if i != j && inside[i] == inside[j] {
                                b.add(&mut s, &[(i, 1), (j, -1)]);
                            }
                        }
                    }
                    push("A", s);
                }
            }
            Family::B | Family::C => {
                let scale = if family == Family::B { 1 } else { 2 };
                let (ra, rb, rc) = if family == Family::B {
                    ("B(a)", "B(b)", "B(c)")
                } else {
                    ("C(a)", "C(b)", "C(c)")
                };
                if proper {
                    let mut s = RootSet::new();
                    b.same_side_pm(&inside, &mut s);
                    b.singles((0..n).filter(|&i| inside[i]), scale, &mut s);
                    push(ra, s);
                }
                if proper && nonempty {
                    let mut s = RootSet::new();
                    b.same_side_pm(&inside, &mut s);
                    b.singles(0..n, scale, &mut s);
                    push(rb, s);
                }
                let mut s = RootSet::new();
                b.twisted_a(&inside, &mut s);
                push(rc, s);
            }
            Family::D => {
                if proper && nonempty {
                    let mut s = RootSet::new();
                    b.same_side_pm(&inside, &mut s);
                    push("D(a)", s);
                }
                let mut s = RootSet::new();
                b.twisted_a(&inside, &mut s);
                push("D(b)", s);
            }
            _ => unreachable!(),
        }
    }
    Ok(out)
}

/// Comparison of the brute-force large classes with the stored table.
#[derive(Debug, Clone)]
pub struct Table1Check {
    pub system: String,
    pub rows: Vec<Row>,
    /// Canonical classes reached by more than one table entry.
    pub collapsed: Vec<(String, Vec<String>)>,
}

impl Table1Check {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(|r| r.ok)
    }
}

pub fn verify_table1(rs: &RootSystem) -> Result<Table1Check> {
    let entries = table1_entries(rs)?;
    let mut table: BTreeMap<RootSet, Vec<String>> = BTreeMap::new();
    let mut rows = Vec::new();
    for e in &entries {
        if !is_subsystem(rs, e.roots) {
            rows.push(
                Row::new(e.describe(), false).with("error", "table entry is not a root subsystem"),
            );
            continue;
        }
        table
            .entry(canonical_set(rs, e.roots)?)
            .or_default()
            .push(e.describe());
    }
    let found: BTreeSet<RootSet> = classify_large(rs)?.into_iter().map(|s| s.roots()).collect();
    let mut all: Vec<RootSet> = table
        .keys()
        .chain(found.iter())
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    let mut collapsed = Vec::new();
    for s in all {
        let sub = RootSubsystem::new(rs, s);
        let listed = table.get(&s).cloned().unwrap_or_default();
        let large = found.contains(&s);
        if listed.len() > 1 {
            collapsed.push((sub.type_label().to_string(), listed.clone()));
        }
        rows.push(
            Row::new(
                format!("{} {}", rs.name(), sub.type_label()),
                large == !listed.is_empty(),
            )
            .with("roots", s.len())
            .with("brute_force_large", large)
            .with("in_table", !listed.is_empty())
            .with("table_rows", listed),
        );
    }
    Ok(Table1Check {
        system: rs.name(),
        rows,
        collapsed,
    })
}

/// For each subsystem class of a simply-laced system: large ⟺ maximal of
/// characteristic 1 or 2 ⟺ the additive triple condition.
pub fn prop526_verify(rs: &RootSystem, max_rank: usize) -> Result<Vec<Row>> {
    if !rs.is_simply_laced() {
        return Err(Error::NotSimplyLaced(rs.name()));
    }
    if rs.rank() > max_rank {
        return Err(Error::PartialEnumeration {
            frontier: 0,
            reason: format!("rank {} exceeds the guard {max_rank}", rs.rank()),
        });
    }
    let planes = PlaneIndex::new(rs);
    let maximal: BTreeMap<RootSet, u32> = maximal_subsystems(rs)?
        .into_iter()
        .map(|m| (m.subsystem.roots(), m.characteristic))
        .collect();
    let full = RootSet::full(rs.len());
    let mut rows = Vec::new();
    for s in enumerate_subsystems(rs)? {
        let set = s.roots();
        let large = planes.is_large(set);
        let cond_a = satisfies_condition_a(rs, set)?;
        let characteristic = maximal.get(&set).copied();
        let proper = set != full;
        let small_char = characteristic.is_some_and(|c| c <= 2);
        let ok = large == cond_a && (!proper || large == small_char);
        rows.push(
            Row::new(format!("{} {}", rs.name(), s.type_label()), ok)
                .with("roots", set.len())
                .with("proper", proper)
                .with("large", large)
                .with("condition_a", cond_a)
                .with("maximal_characteristic", characteristic),
        );
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;
    use crate::weyl::generate_group_idx;
    use crate::weyl::DEFAULT_ELEMENT_CAP;

    fn sys(f: Family, l: usize) -> RootSystem {
        build_root_system(f, l).unwrap()
    }

    /// Definition-level oracle: scan all non-orthogonal pairs directly.
    fn large_oracle(rs: &RootSystem, dg: RootSet) -> bool {
        let n = rs.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                j == i
                    || j == rs.neg_index(i)
                    || rs.root(i).dot(rs.root(j)).is_zero()
                    || dg
                        .iter()
                        .any(|g| gram_det3(rs.root(i), rs.root(j), rs.root(g)).is_zero())
            })
        })
    }

    #[test]
    fn basic_examples() {
        let a2 = sys(Family::A, 2);
        let full = generate_group_idx(&a2, a2.simple_indices(), DEFAULT_ELEMENT_CAP).unwrap();
        assert!(is_large(&a2, &full));
        let triv = generate_group_idx(&a2, &[], DEFAULT_ELEMENT_CAP).unwrap();
        assert!(!is_large(&a2, &triv));
        let a5 = sys(Family::A, 5);
        let mut s = RootSet::new();
        for i in 0..6 {
            for j in 0..6 {
                if i != j && ((i < 2) == (j < 2)) {
                    let mut v = Vector::zeros(6);
                    v.0[i] = rat(1);
                    v.0[j] = rat(-1);
                    s.insert(a5.index_of(&v).unwrap());
                }
            }
        }
        assert!(is_large_set(&a5, s));
    }

    #[test]
    fn plane_index_matches_definition() {
        for (f, l) in [
            (Family::A, 3),
            (Family::B, 3),
            (Family::C, 3),
            (Family::G, 2),
        ] {
            let rs = sys(f, l);
            let idx = PlaneIndex::new(&rs);
            for s in enumerate_subsystems(&rs).unwrap() {
                assert_eq!(
                    idx.is_large(s.roots()),
                    large_oracle(&rs, s.roots()),
                    "{f}{l}"
                );
            }
        }
    }

    #[test]
    fn condition_a_examples() {
        let a2 = sys(Family::A, 2);
        assert!(satisfies_condition_a(&a2, RootSet::full(6)).unwrap());
        assert!(!satisfies_condition_a(&a2, RootSet::new()).unwrap());
        let d4 = sys(Family::D, 4);
        let m = maximal_subsystems(&d4).unwrap();
        let a1x4 = m.iter().find(|x| x.characteristic == 2).unwrap();
        assert!(satisfies_condition_a(&d4, a1x4.subsystem.roots()).unwrap());
        let b3 = sys(Family::B, 3);
        assert!(matches!(
            satisfies_condition_a(&b3, RootSet::new()),
            Err(Error::NotSimplyLaced(_))
        ));
    }

    #[test]
    fn classify_small_cases() {
        let a2 = sys(Family::A, 2);
        let l: Vec<String> = classify_large(&a2)
            .unwrap()
            .iter()
            .map(|s| s.type_label().into())
            .collect();
        assert_eq!(l, ["A1"]);
        let c2 = sys(Family::C, 2);
        let large = classify_large(&c2).unwrap();
        assert_eq!(large.len(), 4);
        assert!(large.iter().all(|s| !s.is_empty()));
        let d4 = sys(Family::D, 4);
        let mut l: Vec<String> = classify_large(&d4)
            .unwrap()
            .iter()
            .map(|s| s.type_label().into())
            .collect();
        l.sort();
        assert_eq!(l, ["A1×A1×A1×A1", "A3", "A3", "A3"]);
    }

    #[test]
    fn table_matches_for_small_ranks() {
        for (f, l) in [
            (Family::A, 2),
            (Family::A, 3),
            (Family::B, 3),
            (Family::C, 2),
            (Family::C, 3),
            (Family::D, 4),
        ] {
            let rs = sys(f, l);
            let check = verify_table1(&rs).unwrap();
            assert!(check.ok(), "{f}{l}: {:?}", check.rows);
        }
        assert!(table1_entries(&sys(Family::B, 2)).is_err());
        assert!(table1_entries(&sys(Family::G, 2)).is_err());
    }

    #[test]
    fn prop_equivalence_small() {
        for (f, l) in [(Family::A, 2), (Family::A, 3), (Family::D, 4)] {
            let rows = prop526_verify(&sys(f, l), 4).unwrap();
            assert!(rows.iter().all(|r| r.ok), "{f}{l}");
        }
    }

    #[test]
    fn conjugation_invariance_and_monotonicity() {
        let b3 = sys(Family::B, 3);
        let idx = PlaneIndex::new(&b3);
        let classes = enumerate_subsystems(&b3).unwrap();
        let w = b3.weyl_group().unwrap();
        for s in &classes {
            let large = idx.is_large(s.roots());
            for g in w.elements().iter().step_by(7) {
                assert_eq!(idx.is_large(s.roots().image(g)), large);
            }
            for t in &classes {
                if large && s.roots().is_subset(&t.roots()) {
                    assert!(idx.is_large(t.roots()));
                }
            }
        }
    }
}
