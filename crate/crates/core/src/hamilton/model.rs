//! Symplectic modules assembled from an expression, with an invariant
//! symplectic form built block by block.

use std::collections::HashMap;

use num_traits::Zero;

use super::algebra::LieAlgebra;
use super::modules::{parse_expression, Atom, Module};
use crate::error::{Error, Result};
use crate::linalg::{clear_denominators, nullspace, rank_int, SparseMatrix, Q};
use crate::rootsys::Weight;

/// One summand copy inside the total module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub label: String,
    pub start: usize,
    pub dim: usize,
}

impl Block {
    pub fn range(&self) -> std::ops::Range<usize> {
        self.start..self.start + self.dim
    }
}

#[derive(Debug, Clone)]
pub struct LinearHamiltonianModel {
    expr: String,
    algebra: LieAlgebra,
    module: Module,
    blocks: Vec<Block>,
    omega: SparseMatrix,
}

/// Antisymmetric invariant forms on the span of the given coordinates.
/// With `split = Some(s)` only pairings between coordinates `< s` and
/// `>= s` are allowed.
fn antisymmetric_invariants(
    mats: &[SparseMatrix],
    weights: &[Weight],
    split: Option<usize>,
) -> Vec<SparseMatrix> {
    let n = weights.len();
    let mut unknowns: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if let Some(s) = split {
                if !(i < s && j >= s) {
                    continue;
                }
            }
            if (&weights[i] + &weights[j]).is_zero() {
                unknowns.push((i, j));
            }
        }
    }
    if unknowns.is_empty() {
        return Vec::new();
    }
    let mut eqs: HashMap<(usize, usize), Vec<Q>> = HashMap::new();
    let nu = unknowns.len();
    let mut add = |key: (usize, usize), p: usize, v: &Q, neg: bool| {
        let row = eqs.entry(key).or_insert_with(|| vec![Q::zero(); nu]);
        if neg {
            row[p] -= v;
        } else {
            row[p] += v;
        }
    };
    for x in mats {
        // (X^T Ω + Ω X)_{ab} with Ω_ij = u, Ω_ji = -u
        for (p, &(i, j)) in unknowns.iter().enumerate() {
            for (a, v) in x.row(i) {
                add((*a, j), p, v, false);
                add((j, *a), p, v, true);
            }
            for (a, v) in x.row(j) {
                add((*a, i), p, v, true);
                add((i, *a), p, v, false);
            }
        }
    }
    let mut keys: Vec<_> = eqs.keys().copied().collect();
    keys.sort_unstable();
    let rows: Vec<Vec<Q>> = keys.iter().map(|k| eqs[k].clone()).collect();
    nullspace(&rows, nu)
        .into_iter()
        .map(|u| {
            let e = unknowns
                .iter()
                .zip(&u)
                .filter(|(_, c)| !c.is_zero())
                .flat_map(|(&(i, j), c)| [(i, j, c.clone()), (j, i, -c.clone())]);
            SparseMatrix::from_entries(n, n, e.collect::<Vec<_>>())
        })
        .collect()
}

fn restrict(
    m: &Module,
    gens: &[usize],
    ranges: &[std::ops::Range<usize>],
) -> (Vec<SparseMatrix>, Vec<Weight>) {
    let mats = gens
        .iter()
        .map(|&k| {
            let blocks: Vec<SparseMatrix> = ranges
                .iter()
                .map(|r| m.action(k).block(r.clone(), r.clone()))
                .collect();
            let refs: Vec<&SparseMatrix> = blocks.iter().collect();
            SparseMatrix::block_diag(&refs)
        })
        .collect();
    let weights = ranges
        .iter()
        .flat_map(|r| m.weights()[r.clone()].iter().cloned())
        .collect();
    (mats, weights)
}

impl LinearHamiltonianModel {
    /// Builds the module described by `expr` (for example
    /// `"sp4:taut+2*pwedge2"`) and an invariant symplectic form on it.
    pub fn build(expr: &str) -> Result<Self> {
        let (alg_name, summands) = parse_expression(expr)?;
        let algebra = LieAlgebra::parse(&alg_name)?;
        let mut cache: HashMap<(Atom, usize), Module> = HashMap::new();
        let mut parts: Vec<Module> = Vec::new();
        for s in &summands {
            if let std::collections::hash_map::Entry::Vacant(e) = cache.entry((s.atom, s.factor)) {
                e.insert(Module::atom(&algebra, s.atom, s.factor)?);
            }
            for _ in 0..s.mult {
                parts.push(cache[&(s.atom, s.factor)].clone());
            }
        }
        let mut blocks = Vec::new();
        let mut start = 0;
        for p in &parts {
            blocks.push(Block {
                label: p.label().to_string(),
                start,
                dim: p.dim(),
            });
            start += p.dim();
        }
        let refs: Vec<&Module> = parts.iter().collect();
        let module = Module::direct_sum(&algebra, expr, &refs)?;
        let omega = Self::assemble_form(&algebra, &module, &blocks)?;
        let model = LinearHamiltonianModel {
            expr: expr.to_string(),
            algebra,
            module,
            blocks,
            omega,
        };
        model.check_form()?;
        Ok(model)
    }

    /// Each block either carries a unique antisymmetric invariant form or is
    /// paired with the next free block admitting a unique invariant pairing.
    fn assemble_form(alg: &LieAlgebra, module: &Module, blocks: &[Block]) -> Result<SparseMatrix> {
        let gens = alg.generators();
        let n = module.dim();
        let mut used = vec![false; blocks.len()];
        let mut entries: Vec<(usize, usize, Q)> = Vec::new();
        for b in 0..blocks.len() {
            if used[b] {
                continue;
            }
            used[b] = true;
            let rb = blocks[b].range();
            let (mats, weights) = restrict(module, &gens, std::slice::from_ref(&rb));
            let own = antisymmetric_invariants(&mats, &weights, None);
            match own.len() {
                1 => {
                    entries.extend(
                        own[0]
                            .entries()
                            .map(|(i, j, v)| (rb.start + i, rb.start + j, v.clone())),
                    );
                    continue;
                }
                0 => {}
                k => {
                    return Err(Error::NoSymplecticForm(format!(
                        "block {} ({}) carries a {k}-dimensional space of invariant forms",
                        b + 1,
                        blocks[b].label
                    )))
                }
            }
            let mut partner = None;
            for c in b + 1..blocks.len() {
                if used[c] {
                    continue;
                }
                let rc = blocks[c].range();
                let (mats, weights) = restrict(module, &gens, &[rb.clone(), rc.clone()]);
                let pair = antisymmetric_invariants(&mats, &weights, Some(rb.len()));
                if pair.len() == 1 {
                    for (i, j, v) in pair[0].entries() {
                        let gi = if i < rb.len() {
                            rb.start + i
                        } else {
                            rc.start + i - rb.len()
                        };
                        let gj = if j < rb.len() {
                            rb.start + j
                        } else {
                            rc.start + j - rb.len()
                        };
                        entries.push((gi, gj, v.clone()));
                    }
                    partner = Some(c);
                    break;
                }
            }
            match partner {
                Some(c) => used[c] = true,
                None => {
                    return Err(Error::NoSymplecticForm(format!(
                        "block {} ({}) has no invariant symplectic form and no dual partner",
                        b + 1,
                        blocks[b].label
                    )))
                }
            }
        }
        Ok(SparseMatrix::from_entries(n, n, entries))
    }

    /// Antisymmetry, invariance under every basis element and nondegeneracy.
    pub fn check_form(&self) -> Result<()> {
        let om = &self.omega;
        if om.transpose() != om.scale(&Q::from_integer((-1).into())) {
            return Err(Error::Invariant("form is not antisymmetric".into()));
        }
        for (k, x) in self.module.actions().iter().enumerate() {
            if !x.transpose().mul(om).add(&om.mul(x)).is_zero() {
                return Err(Error::Invariant(format!(
                    "form is not invariant under basis element {k}"
                )));
            }
        }
        let r = rank_int(clear_denominators(&om.to_dense()));
        if r != self.dim() {
            return Err(Error::NoSymplecticForm(format!(
                "assembled form has rank {r} < {}",
                self.dim()
            )));
        }
        Ok(())
    }

    pub fn expr(&self) -> &str {
        &self.expr
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn module(&self) -> &Module {
        &self.module
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn omega(&self) -> &SparseMatrix {
        &self.omega
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// `ω(x, y) = x^T Ω y`.
    pub fn form(&self, x: &[Q], y: &[Q]) -> Q {
        let oy = self.omega.mul_vec(y);
        x.iter().zip(&oy).fold(Q::zero(), |acc, (a, b)| acc + a * b)
    }

    /// Basis element `k` applied to `v`.
    pub fn act(&self, k: usize, v: &[Q]) -> Vec<Q> {
        self.module.action(k).mul_vec(v)
    }

    /// Multiplicity of the zero weight.
    pub fn zero_weight_multiplicity(&self) -> usize {
        self.module.weights().iter().filter(|w| w.is_zero()).count()
    }

    /// Whether blocks `b` and `c` are paired by the identity matrix.
    pub fn pairs_by_identity(&self, b: usize, c: usize) -> bool {
        let (rb, rc) = (self.blocks[b].range(), self.blocks[c].range());
        rb.len() == rc.len() && self.omega.block(rb.clone(), rc) == SparseMatrix::identity(rb.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cotangent_type_pairs() {
        let m = LinearHamiltonianModel::build("sl3:taut+dual").unwrap();
        assert_eq!(m.dim(), 6);
        assert!(m.pairs_by_identity(0, 1));
    }

    #[test]
    fn self_dual_blocks() {
        let m = LinearHamiltonianModel::build("sp4:taut").unwrap();
        assert_eq!(m.blocks().len(), 1);
        let m = LinearHamiltonianModel::build("so7:2*taut").unwrap();
        assert_eq!(m.dim(), 14);
        let m = LinearHamiltonianModel::build("so11:spin").unwrap();
        assert_eq!(m.dim(), 32);
    }

    #[test]
    fn odd_blocks_fail() {
        assert!(matches!(
            LinearHamiltonianModel::build("sl3:taut"),
            Err(Error::NoSymplecticForm(_))
        ));
        assert!(matches!(
            LinearHamiltonianModel::build("so7:taut"),
            Err(Error::NoSymplecticForm(_))
        ));
        assert!(matches!(
            LinearHamiltonianModel::build("so7:spin"),
            Err(Error::NoSymplecticForm(_))
        ));
        assert_eq!(
            LinearHamiltonianModel::build("so7:2*spin").unwrap().dim(),
            16
        );
    }
}
