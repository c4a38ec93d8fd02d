//! Explicit representations of matrix Lie algebras and a small expression
//! language for direct sums of them.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, ToPrimitive, Zero};

use super::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{inverse, nullspace, q, qf, SparseMatrix, Q};
use crate::rootsys::{Family, Rat, Vector, Weight};

pub(crate) fn q_to_rat(x: &Q) -> Result<Rat> {
    match (x.numer().to_i64(), x.denom().to_i64()) {
        (Some(n), Some(d)) => Ok(Rat::new(n, d)),
        _ => Err(Error::Invariant(format!(
            "coefficient {x} does not fit in 64 bits"
        ))),
    }
}

/// Building blocks of a module expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Atom {
    /// Defining module.
    Taut,
    Dual,
    Wedge(usize),
    Sym(usize),
    /// Kernel of the symplectic contraction on the k-th exterior power.
    PrimitiveWedge(usize),
    Spin,
    Adjoint,
    Trivial,
}

impl std::fmt::Display for Atom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Atom::Taut => f.write_str("taut"),
            Atom::Dual => f.write_str("dual"),
            Atom::Wedge(k) => write!(f, "wedge{k}"),
            Atom::Sym(k) => write!(f, "sym{k}"),
            Atom::PrimitiveWedge(k) => write!(f, "pwedge{k}"),
            Atom::Spin => f.write_str("spin"),
            Atom::Adjoint => f.write_str("adj"),
            Atom::Trivial => f.write_str("triv"),
        }
    }
}

impl std::str::FromStr for Atom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let num =
            |prefix: &str| -> Option<usize> { s.strip_prefix(prefix).and_then(|r| r.parse().ok()) };
        Ok(match s {
            "taut" => Atom::Taut,
            "dual" => Atom::Dual,
            "spin" => Atom::Spin,
            "adj" | "adjoint" => Atom::Adjoint,
            "triv" => Atom::Trivial,
            _ => {
                if let Some(k) = num("pwedge") {
                    Atom::PrimitiveWedge(k)
                } else if let Some(k) = num("wedge") {
                    Atom::Wedge(k)
                } else if let Some(k) = num("sym") {
                    Atom::Sym(k)
                } else {
                    return Err(Error::Parse(format!("unknown module '{s}'")));
                }
            }
        })
    }
}

/// `k*atom@f`: `k` copies of an atom for factor `f` (0-based here).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub mult: usize,
    pub atom: Atom,
    pub factor: usize,
}

/// Splits `"sl6:wedge3+2*taut+2*dual"` into the algebra name and summands.
/// Factor suffixes `@f` are 1-based and required for product algebras.
pub fn parse_expression(expr: &str) -> Result<(String, Vec<Summand>)> {
    let (alg, rest) = expr
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected 'algebra:summands', got '{expr}'")))?;
    let nfactors = alg.split('x').count();
    let mut out = Vec::new();
    for raw in rest.split('+') {
        let s = raw.trim();
        if s.is_empty() {
            return Err(Error::Parse(format!("empty summand in '{expr}'")));
        }
        let (mult, s) = match s.split_once('*') {
            Some((k, a)) => (
                k.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad multiplicity '{k}'")))?,
                a.trim(),
            ),
            None => (1, s),
        };
        if mult == 0 {
            return Err(Error::Parse("multiplicity must be positive".into()));
        }
        let (atom, factor) = match s.split_once('@') {
            Some((a, f)) => {
                let f: usize = f
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad factor '{f}'")))?;
                if f == 0 || f > nfactors {
                    return Err(Error::Parse(format!(
                        "factor {f} out of range 1..={nfactors}"
                    )));
                }
                (a, f - 1)
            }
            None if nfactors == 1 => (s, 0),
            None => {
                return Err(Error::Parse(format!(
                    "summand '{s}' needs a factor suffix @1..@{nfactors}"
                )))
            }
        };
        out.push(Summand {
            mult,
            atom: atom.parse()?,
            factor,
        });
    }
    Ok((alg.trim().to_string(), out))
}

/// A representation: one matrix per basis element of the algebra, with a
/// weight basis.
#[derive(Debug, Clone)]
pub struct Module {
    label: String,
    action: Vec<SparseMatrix>,
    weights: Vec<Weight>,
}

impl Module {
    /// Wraps explicit matrices; the Cartan elements must act diagonally.
    pub fn new(
        alg: &LieAlgebra,
        label: impl Into<String>,
        action: Vec<SparseMatrix>,
    ) -> Result<Self> {
        if action.len() != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                got: action.len(),
            });
        }
        let dim = action.first().map_or(0, SparseMatrix::n_rows);
        let mut weights = vec![Vec::new(); dim];
        for (fi, fac) in alg.factors().iter().enumerate() {
            let o = alg.offset(fi);
            let fw = fac.root_system().fundamental_weights();
            for v in 0..dim {
                let mut w = Vector::zeros(fac.root_system().ambient_dim());
                for i in 0..fac.rank() {
                    let h = &action[o + i];
                    if !h.is_diagonal() {
                        return Err(Error::Invariant(
                            "Cartan element does not act diagonally".into(),
                        ));
                    }
                    let d = q_to_rat(&h.get(v, v))?;
                    w = &w + &fw[i].scale(d);
                }
                weights[v].extend(w.0);
            }
        }
        Ok(Module {
            label: label.into(),
            action,
            weights: weights.into_iter().map(Vector).collect(),
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn action(&self, k: usize) -> &SparseMatrix {
        &self.action[k]
    }

    pub fn actions(&self) -> &[SparseMatrix] {
        &self.action
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// Weights with multiplicities.
    pub fn weight_multiset(&self) -> BTreeMap<Weight, u64> {
        let mut m = BTreeMap::new();
        for w in &self.weights {
            *m.entry(w.clone()).or_insert(0) += 1;
        }
        m
    }

    pub fn direct_sum(
        alg: &LieAlgebra,
        label: impl Into<String>,
        parts: &[&Module],
    ) -> Result<Self> {
        let action = (0..alg.dim())
            .map(|k| {
                let blocks: Vec<&SparseMatrix> = parts.iter().map(|m| &m.action[k]).collect();
                SparseMatrix::block_diag(&blocks)
            })
            .collect();
        Module::new(alg, label, action)
    }

    /// Checks `ρ([b_i, b_j]) = [ρ(b_i), ρ(b_j)]` for all pairs of basis elements.
    pub fn check_representation(&self, alg: &LieAlgebra) -> Result<()> {
        let n = self.dim();
        for i in 0..alg.dim() {
            for j in i + 1..alg.dim() {
                let lhs = alg
                    .bracket(i, j)
                    .iter()
                    .fold(SparseMatrix::zero(n, n), |acc, (k, c)| {
                        acc.lin_comb(&Q::one(), &self.action[*k], c)
                    });
                if lhs != self.action[i].commutator(&self.action[j]) {
                    return Err(Error::Invariant(format!(
                        "{}: bracket relation fails for basis elements {i},{j}",
                        self.label
                    )));
                }
            }
        }
        Ok(())
    }

    /// One atom for factor `factor`, acting trivially through the other factors.
    pub fn atom(alg: &LieAlgebra, atom: Atom, factor: usize) -> Result<Self> {
        let fac = alg
            .factors()
            .get(factor)
            .ok_or_else(|| Error::Parse(format!("no factor {}", factor + 1)))?;
        let family = fac.root_system().family();
        let l = fac.rank();
        let taut: Vec<SparseMatrix> = fac.basis().to_vec();
        let local: Vec<SparseMatrix> = match atom {
            Atom::Taut => taut,
            Atom::Dual => taut.iter().map(|x| x.transpose().scale(&q(-1))).collect(),
            Atom::Wedge(k) => {
                if k == 0 || k > fac.defining_dim() {
                    return Err(Error::Parse(format!(
                        "wedge{k} of a {}-dimensional module",
                        fac.defining_dim()
                    )));
                }
                exterior_power(&taut, k).1
            }
            Atom::Sym(k) => {
                if k == 0 {
                    return Err(Error::Parse("sym0 is not allowed; use triv".into()));
                }
                symmetric_power(&taut, k)
            }
            Atom::PrimitiveWedge(k) => {
                if family != Family::C || k < 2 || k > l {
                    return Err(Error::Parse(format!(
                        "pwedge{k} needs a symplectic algebra of rank at least {k}"
                    )));
                }
                primitive_wedge(
                    &taut,
                    fac.form().expect("symplectic form"),
                    fac.defining_weights(),
                    k,
                )?
            }
            Atom::Spin => {
                if family != Family::B {
                    return Err(Error::Parse(
                        "spin is available for odd orthogonal algebras".into(),
                    ));
                }
                spin_matrices(&taut, fac.form().expect("orthogonal form"), l)?
            }
            Atom::Adjoint => {
                let o = alg.offset(factor);
                let d = fac.dim();
                (0..d)
                    .map(|k| {
                        let e = (0..d).flat_map(|j| {
                            alg.bracket(o + k, o + j)
                                .iter()
                                .map(move |(i, c)| (*i - o, j, c.clone()))
                        });
                        SparseMatrix::from_entries(d, d, e.collect::<Vec<_>>())
                    })
                    .collect()
            }
            Atom::Trivial => (0..fac.dim()).map(|_| SparseMatrix::zero(1, 1)).collect(),
        };
        let d = local.first().map_or(0, SparseMatrix::n_rows);
        let o = alg.offset(factor);
        let action = (0..alg.dim())
            .map(|k| {
                if k >= o && k < o + fac.dim() {
                    local[k - o].clone()
                } else {
                    SparseMatrix::zero(d, d)
                }
            })
            .collect();
        let label = if alg.is_simple() {
            atom.to_string()
        } else {
            format!("{atom}@{}", factor + 1)
        };
        Module::new(alg, label, action)
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Basis (sorted k-subsets) and induced matrices on the k-th exterior power.
pub fn exterior_power(mats: &[SparseMatrix], k: usize) -> (Vec<Vec<usize>>, Vec<SparseMatrix>) {
    let n = mats.first().map_or(0, SparseMatrix::n_rows);
    let basis = combinations(n, k);
    let index: HashMap<&[usize], usize> = basis
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_slice(), i))
        .collect();
    let out = mats
        .iter()
        .map(|x| {
            let xt = x.transpose();
            let mut e = Vec::new();
            for (col, s) in basis.iter().enumerate() {
                for (p, &sp) in s.iter().enumerate() {
                    let rest: Vec<usize> = s.iter().copied().filter(|&u| u != sp).collect();
                    for (t, c) in xt.row(sp) {
                        if rest.contains(t) {
                            continue;
                        }
                        let qpos = rest.iter().filter(|&&u| u < *t).count();
                        let mut target = rest.clone();
                        target.insert(qpos, *t);
                        let sign = if (p + qpos) % 2 == 0 {
                            c.clone()
                        } else {
                            -c.clone()
                        };
                        e.push((index[target.as_slice()], col, sign));
                    }
                }
            }
            SparseMatrix::from_entries(basis.len(), basis.len(), e)
        })
        .collect();
    (basis, out)
}

/// Induced matrices on the k-th symmetric power, basis of sorted multisets.
pub fn symmetric_power(mats: &[SparseMatrix], k: usize) -> Vec<SparseMatrix> {
    let n = mats.first().map_or(0, SparseMatrix::n_rows);
    let basis = multisets(n, k);
    let index: HashMap<&[usize], usize> = basis
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_slice(), i))
        .collect();
    mats.iter()
        .map(|x| {
            let xt = x.transpose();
            let mut e = Vec::new();
            for (col, s) in basis.iter().enumerate() {
                for p in 0..s.len() {
                    for (t, c) in xt.row(s[p]) {
                        let mut target = s.clone();
                        target[p] = *t;
                        target.sort_unstable();
                        e.push((index[target.as_slice()], col, c.clone()));
                    }
                }
            }
            SparseMatrix::from_entries(basis.len(), basis.len(), e)
        })
        .collect()
}

/// Restriction of the k-th exterior power to the kernel of contraction with
/// the form `j`. The kernel is computed one weight space at a time.
fn primitive_wedge(
    mats: &[SparseMatrix],
    j: &SparseMatrix,
    weights: &[Weight],
    k: usize,
) -> Result<Vec<SparseMatrix>> {
    let (basis, ext) = exterior_power(mats, k);
    let lower = combinations(j.n_rows(), k - 2);
    let lower_index: HashMap<&[usize], usize> = lower
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_slice(), i))
        .collect();
    let contraction = |s: &[usize]| -> Vec<(usize, Q)> {
        let mut out = Vec::new();
        for p in 0..s.len() {
            for qq in p + 1..s.len() {
                let jv = j.get(s[p], s[qq]);
                if jv.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = s
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != p && *i != qq)
                    .map(|(_, &u)| u)
                    .collect();
                let val = if (p + qq) % 2 == 0 { jv } else { -jv };
                out.push((lower_index[rest.as_slice()], val));
            }
        }
        out
    };
    let mut groups: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
    for (i, s) in basis.iter().enumerate() {
        let w = s.iter().fold(Vector::zeros(weights[0].dim()), |acc, &u| {
            &acc + &weights[u]
        });
        groups.entry(w).or_default().push(i);
    }
    // kernel vectors, each with a coordinate where it is 1 and all others vanish
    let mut kernel: Vec<(usize, Vec<(usize, Q)>)> = Vec::new();
    for members in groups.values() {
        let mut targets: BTreeMap<usize, usize> = BTreeMap::new();
        let cols: Vec<Vec<(usize, Q)>> = members.iter().map(|&m| contraction(&basis[m])).collect();
        for c in &cols {
            for (t, _) in c {
                let len = targets.len();
                targets.entry(*t).or_insert(len);
            }
        }
        let mut rows = vec![vec![Q::zero(); members.len()]; targets.len()];
        for (ci, c) in cols.iter().enumerate() {
            for (t, v) in c {
                rows[targets[t]][ci] += v;
            }
        }
        let ns = nullspace(&rows, members.len());
        let (_, pivots) = crate::linalg::rref(&rows);
        let free: Vec<usize> = (0..members.len()).filter(|c| !pivots.contains(c)).collect();
        for (v, f) in ns.into_iter().zip(free) {
            let sparse = v
                .into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (members[i], x))
                .collect();
            kernel.push((members[f], sparse));
        }
    }
    let big = basis.len();
    let m = kernel.len();
    let kmat = SparseMatrix::from_entries(
        big,
        m,
        kernel
            .iter()
            .enumerate()
            .flat_map(|(c, (_, v))| v.iter().map(move |(r, x)| (*r, c, x.clone())))
            .collect::<Vec<_>>(),
    );
    ext.iter()
        .map(|x| {
            let xk = x.mul(&kmat);
            let r = SparseMatrix::from_entries(
                m,
                m,
                kernel
                    .iter()
                    .enumerate()
                    .flat_map(|(i, (lead, _))| {
                        let xk = &xk;
                        (0..m).map(move |c| (i, c, xk.get(*lead, c)))
                    })
                    .collect::<Vec<_>>(),
            );
            if kmat.mul(&r) != xk {
                return Err(Error::Invariant(
                    "contraction kernel is not invariant".into(),
                ));
            }
            Ok(r)
        })
        .collect()
}

/// Spin representation of the odd orthogonal algebra preserving `form`,
/// built from a Clifford module on `2^l` occupation states.
fn spin_matrices(
    mats: &[SparseMatrix],
    form: &SparseMatrix,
    l: usize,
) -> Result<Vec<SparseMatrix>> {
    let dim = 1usize << l;
    let n = 2 * l + 1;
    let parity_before = |state: usize, i: usize| (state & ((1 << i) - 1)).count_ones() % 2 == 1;
    let signed = |neg: bool| if neg { q(-1) } else { q(1) };
    let mut gamma: Vec<SparseMatrix> = Vec::with_capacity(n);
    for i in 0..l {
        // creation
        let e = (0..dim)
            .filter(|s| s & (1 << i) == 0)
            .map(|s| (s | (1 << i), s, signed(parity_before(s, i))));
        gamma.push(SparseMatrix::from_entries(dim, dim, e.collect::<Vec<_>>()));
    }
    gamma.push(SparseMatrix::from_entries(
        dim,
        dim,
        (0..dim)
            .map(|s| (s, s, signed(s.count_ones() % 2 == 1)))
            .collect::<Vec<_>>(),
    ));
    for i in 0..l {
        // annihilation
        let e = (0..dim)
            .filter(|s| s & (1 << i) != 0)
            .map(|s| (s & !(1 << i), s, signed(parity_before(s, i))));
        gamma.push(SparseMatrix::from_entries(dim, dim, e.collect::<Vec<_>>()));
    }
    let bd = form.to_dense();
    for a in 0..n {
        for b in 0..n {
            let anti = gamma[a].mul(&gamma[b]).add(&gamma[b].mul(&gamma[a]));
            if anti != SparseMatrix::identity(dim).scale(&bd[a][b]) {
                return Err(Error::Invariant("Clifford relations fail".into()));
            }
        }
    }
    let binv = SparseMatrix::from_dense(
        &inverse(&bd).ok_or_else(|| Error::Invariant("singular form".into()))?,
    );
    let mut products: HashMap<(usize, usize), SparseMatrix> = HashMap::new();
    let half = qf(1, 2);
    mats.iter()
        .map(|x| {
            let y = x.mul(&binv);
            let mut acc = SparseMatrix::zero(dim, dim);
            for (a, b, c) in y.entries() {
                if a >= b {
                    continue;
                }
                let g = products
                    .entry((a, b))
                    .or_insert_with(|| gamma[a].mul(&gamma[b]));
                let shifted = g.sub(&SparseMatrix::identity(dim).scale(&(&half * &bd[a][b])));
                acc = acc.lin_comb(&Q::one(), &shifted, c);
            }
            Ok(acc)
        })
        .collect()
}
