//! Weyl groups and reflection subgroups realized as permutations of the
//! root set.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::rootset::RootSet;
use crate::rootsys::{Root, RootSystem, Vector};
use crate::subsys::RootSubsystem;

pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

/// A permutation of root indices; `apply(i)` is the index of `w(root_i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm(Box<[u16]>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u16).collect())
    }

    pub fn from_vec(v: Vec<usize>) -> Self {
        Perm(v.into_iter().map(|x| x as u16).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Perm(inv.into())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j as usize)
    }
}

/// Closure of `gens` under right multiplication, in BFS order from the
/// identity.
fn enumerate_closure(n: usize, gens: &[Perm], cap: usize) -> std::result::Result<Vec<Perm>, usize> {
    let id = Perm::identity(n);
    let mut elements = vec![id.clone()];
    let mut seen: HashMap<Perm, ()> = HashMap::new();
    seen.insert(id, ());
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for s in gens {
            let h = elements[k].compose(s);
            if !seen.contains_key(&h) {
                if elements.len() >= cap {
                    return Err(elements.len());
                }
                seen.insert(h.clone(), ());
                queue.push_back(elements.len());
                elements.push(h);
            }
        }
    }
    Ok(elements)
}

/// The full Weyl group W(g).
#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

impl WeylGroup {
    pub fn generate(rs: &RootSystem, cap: usize) -> Result<WeylGroup> {
        let order = rs.weyl_order();
        if order > cap as u128 {
            return Err(Error::CapExceeded { cap, order });
        }
        let gens: Vec<Perm> = rs
            .simple_indices()
            .iter()
            .map(|&i| rs.reflection_perm(i).clone())
            .collect();
        let elements = enumerate_closure(rs.len(), &gens, cap)
            .map_err(|_| Error::CapExceeded { cap, order })?;
        let index = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        Ok(WeylGroup { elements, index })
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, w: &Perm) -> bool {
        self.index.contains_key(w)
    }
}

/// A subgroup Γ ⊆ W(g) generated by reflections, with Δ_Γ = {α : s_α ∈ Γ}.
#[derive(Debug, Clone)]
pub struct ReflectionSubgroup {
    generators: Vec<usize>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    delta_gamma: RootSet,
}

impl ReflectionSubgroup {
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, w: &Perm) -> bool {
        self.index.contains_key(w)
    }

    /// Roots whose reflections lie in the subgroup.
    pub fn delta_gamma(&self) -> RootSet {
        self.delta_gamma
    }

    pub fn delta_gamma_subsystem(&self, rs: &RootSystem) -> RootSubsystem {
        RootSubsystem::new(rs, self.delta_gamma)
    }
}

/// `s_α(v) = v − ⟨v, α^∨⟩ α`.
pub fn reflect(rs: &RootSystem, alpha: &Root, v: &Vector) -> Result<Vector> {
    let i = rs.require_root(alpha)?;
    if v.dim() != rs.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: rs.ambient_dim(),
            got: v.dim(),
        });
    }
    Ok(rs.reflect_idx(i, v))
}

pub fn generate_group(rs: &RootSystem, gens: &[Root]) -> Result<ReflectionSubgroup> {
    let idx = gens
        .iter()
        .map(|g| rs.require_root(g))
        .collect::<Result<Vec<_>>>()?;
    generate_group_idx(rs, &idx, DEFAULT_ELEMENT_CAP)
}

pub fn generate_group_idx(
    rs: &RootSystem,
    gens: &[usize],
    cap: usize,
) -> Result<ReflectionSubgroup> {
    let perms: Vec<Perm> = gens
        .iter()
        .map(|&i| rs.reflection_perm(i).clone())
        .collect();
    let elements = enumerate_closure(rs.len(), &perms, cap).map_err(|_| Error::CapExceeded {
        cap,
        order: rs.weyl_order(),
    })?;
    let index: HashMap<Perm, usize> = elements
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let delta_gamma =
        RootSet::from_indices((0..rs.len()).filter(|&i| index.contains_key(rs.reflection_perm(i))));
    Ok(ReflectionSubgroup {
        generators: gens.to_vec(),
        elements,
        index,
        delta_gamma,
    })
}

/// Image `w(S)`, re-canonicalized (sorted).
pub fn conjugate_subsystem(rs: &RootSystem, w: &Perm, s: &RootSubsystem) -> Result<RootSubsystem> {
    if w.len() != rs.len() {
        return Err(Error::DimensionMismatch {
            expected: rs.len(),
            got: w.len(),
        });
    }
    if !rs.weyl_group()?.contains(w) {
        return Err(Error::Invariant(
            "permutation is not an element of W(g)".into(),
        ));
    }
    Ok(RootSubsystem::new(rs, s.roots().image(w)))
}

/// Lexicographically minimal member of the W(g)-orbit of a root set.
pub fn canonical_set(rs: &RootSystem, s: RootSet) -> Result<RootSet> {
    let w = rs.weyl_group()?;
    Ok(w.elements().iter().map(|g| s.image(g)).min().unwrap_or(s))
}

pub fn canonical_form(rs: &RootSystem, s: &RootSubsystem) -> Result<RootSubsystem> {
    Ok(RootSubsystem::new(rs, canonical_set(rs, s.roots())?))
}

pub fn are_conjugate(rs: &RootSystem, a: RootSet, b: RootSet) -> Result<bool> {
    Ok(a.len() == b.len() && canonical_set(rs, a)? == canonical_set(rs, b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, Family};

    fn v(x: &[i64]) -> Vector {
        Vector::from_ints(x)
    }

    #[test]
    fn reflection_examples() {
        let a3 = build_root_system(Family::A, 3).unwrap();
        let a = v(&[1, -1, 0, 0]);
        assert_eq!(reflect(&a3, &a, &a).unwrap(), v(&[-1, 1, 0, 0]));
        assert_eq!(
            reflect(&a3, &a, &v(&[0, 0, 1, -1])).unwrap(),
            v(&[0, 0, 1, -1])
        );
        assert_eq!(
            reflect(&a3, &a, &v(&[0, 1, -1, 0])).unwrap(),
            v(&[1, 0, -1, 0])
        );
        assert!(reflect(&a3, &v(&[1, 1, 0, 0]), &a).is_err());
    }

    #[test]
    fn group_orders() {
        let a2 = build_root_system(Family::A, 2).unwrap();
        let triv = generate_group(&a2, &[]).unwrap();
        assert_eq!(triv.order(), 1);
        assert!(triv.delta_gamma().is_empty());
        let full = generate_group(&a2, &a2.simple_roots()).unwrap();
        assert_eq!(full.order(), 6);
        assert_eq!(full.delta_gamma().len(), 6);
        let b2 = build_root_system(Family::B, 2).unwrap();
        assert_eq!(generate_group(&b2, &b2.simple_roots()).unwrap().order(), 8);
    }

    #[test]
    fn full_group_orders_match_formula() {
        for (f, l) in [
            (Family::A, 4),
            (Family::B, 4),
            (Family::C, 3),
            (Family::D, 4),
            (Family::G, 2),
            (Family::F, 4),
        ] {
            let rs = build_root_system(f, l).unwrap();
            assert_eq!(
                rs.weyl_group().unwrap().order() as u128,
                rs.weyl_order(),
                "{f}{l}"
            );
        }
    }

    #[test]
    fn cap_is_enforced() {
        let e8 = build_root_system(Family::E, 8).unwrap();
        assert!(matches!(e8.weyl_group(), Err(Error::CapExceeded { .. })));
        let b3 = build_root_system(Family::B, 3).unwrap();
        let err = generate_group_idx(&b3, b3.simple_indices(), 10).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { cap: 10, .. }));
    }

    #[test]
    fn conjugation_examples() {
        let a3 = build_root_system(Family::A, 3).unwrap();
        let i = a3.index_of(&v(&[1, -1, 0, 0])).unwrap();
        let j = a3.index_of(&v(&[0, 1, -1, 0])).unwrap();
        let s = RootSubsystem::from_roots(&a3, [j]);
        let w = a3.reflection_perm(i).clone();
        let img = conjugate_subsystem(&a3, &w, &s).unwrap();
        let k = a3.index_of(&v(&[1, 0, -1, 0])).unwrap();
        assert_eq!(img.roots(), RootSubsystem::from_roots(&a3, [k]).roots());
        let id = Perm::identity(a3.len());
        assert_eq!(
            conjugate_subsystem(&a3, &id, &s).unwrap().roots(),
            s.roots()
        );
        let own = RootSubsystem::from_roots(&a3, [i]);
        assert_eq!(
            conjugate_subsystem(&a3, &w, &own).unwrap().roots(),
            own.roots()
        );
    }

    #[test]
    fn canonical_forms() {
        let a2 = build_root_system(Family::A, 2).unwrap();
        let s1 = RootSubsystem::from_roots(&a2, [a2.index_of(&v(&[1, -1, 0])).unwrap()]);
        let s2 = RootSubsystem::from_roots(&a2, [a2.index_of(&v(&[0, 1, -1])).unwrap()]);
        let c1 = canonical_form(&a2, &s1).unwrap();
        assert_eq!(c1.roots(), canonical_form(&a2, &s2).unwrap().roots());
        assert_eq!(canonical_form(&a2, &c1).unwrap().roots(), c1.roots());
        let b3 = build_root_system(Family::B, 3).unwrap();
        let short = RootSubsystem::from_roots(&b3, [b3.index_of(&v(&[1, 0, 0])).unwrap()]);
        let long = RootSubsystem::from_roots(&b3, [b3.index_of(&v(&[1, -1, 0])).unwrap()]);
        assert_ne!(
            canonical_form(&b3, &short).unwrap().roots(),
            canonical_form(&b3, &long).unwrap().roots()
        );
    }

    #[test]
    fn reflection_subgroup_invariants() {
        let b3 = build_root_system(Family::B, 3).unwrap();
        let gens = [
            b3.index_of(&v(&[1, 0, 0])).unwrap(),
            b3.index_of(&v(&[0, 1, -1])).unwrap(),
        ];
        let g = generate_group_idx(&b3, &gens, DEFAULT_ELEMENT_CAP).unwrap();
        for &i in &gens {
            assert!(g.contains(b3.reflection_perm(i)));
        }
        let d = g.delta_gamma();
        for i in d.iter() {
            assert!(d.contains(b3.neg_index(i)));
            for w in g.elements() {
                assert!(d.contains(w.apply(i)));
            }
        }
        assert_eq!(b3.weyl_order() % g.order() as u128, 0);
    }
}
