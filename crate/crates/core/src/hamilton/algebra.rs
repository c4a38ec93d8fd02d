//! Classical Lie algebras as explicit matrices on their defining modules,
//! and finite products of them.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{inverse, nullspace, q, qf, SparseMatrix, Q};
use crate::rootsys::{build_root_system, rat, Family, RootSystem, Vector, Weight};

fn to_q(x: &crate::rootsys::Rat) -> Q {
    qf(*x.numer(), *x.denom())
}

/// A simple classical Lie algebra with a weight basis of its defining
/// module. Basis: simple coroots first, then one root vector per root in
/// root order.
#[derive(Debug, Clone)]
pub struct SimpleAlgebra {
    name: String,
    rs: RootSystem,
    n: usize,
    form: Option<SparseMatrix>,
    def_weights: Vec<Weight>,
    basis: Vec<SparseMatrix>,
    /// Cartan block of the trace form, inverted.
    cartan_gram_inv: Vec<Vec<Q>>,
    /// `tr(E_α E_{−α})` per root index.
    root_pairing: Vec<Q>,
}

/// `"sl6"` → (A, 5); `"sp4"` → (C, 2); `"so11"` → (B, 5); `"so8"` → (D, 4).
pub fn parse_algebra_name(name: &str) -> Result<(Family, usize)> {
    let bad = || {
        Error::Parse(format!(
            "unknown Lie algebra '{name}' (expected slN, spN or soN)"
        ))
    };
    let (prefix, num) = name.split_at(name.len().min(2));
    let n: usize = num.parse().map_err(|_| bad())?;
    let (family, rank) = match prefix {
        "sl" if n >= 2 => (Family::A, n - 1),
        "sp" if n >= 4 && n.is_multiple_of(2) => (Family::C, n / 2),
        "so" if n >= 5 && n % 2 == 1 => (Family::B, (n - 1) / 2),
        "so" if n >= 6 && n.is_multiple_of(2) => (Family::D, n / 2),
        _ => return Err(bad()),
    };
    Ok((family, rank))
}

pub fn algebra_name(family: Family, rank: usize) -> String {
    match family {
        Family::A => format!("sl{}", rank + 1),
        Family::B => format!("so{}", 2 * rank + 1),
        Family::C => format!("sp{}", 2 * rank),
        Family::D => format!("so{}", 2 * rank),
        f => format!("{f}{rank}"),
    }
}

impl SimpleAlgebra {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let rs = build_root_system(family, rank)?;
        let l = rank;
        // Defining module: weights and invariant form.
        let (n, def_weights, form): (usize, Vec<Weight>, Option<SparseMatrix>) = match family {
            Family::A => {
                let n = l + 1;
                let mean = crate::rootsys::ratf(1, n as i64);
                let w = (0..n)
                    .map(|i| {
                        Vector(
                            (0..n)
                                .map(|j| if i == j { rat(1) - mean } else { -mean })
                                .collect(),
                        )
                    })
                    .collect();
                (n, w, None)
            }
            Family::B => {
                // e_1..e_l, e_0, e_{-1}..e_{-l}
                let n = 2 * l + 1;
                let mut w: Vec<Weight> = (0..l).map(|i| Vector::unit(l, i)).collect();
                w.push(Vector::zeros(l));
                w.extend((0..l).map(|i| -&Vector::unit(l, i)));
                let mut e: Vec<(usize, usize, Q)> = (0..l)
                    .flat_map(|i| [(i, l + 1 + i, q(1)), (l + 1 + i, i, q(1))])
                    .collect();
                e.push((l, l, q(2)));
                (n, w, Some(SparseMatrix::from_entries(n, n, e)))
            }
            Family::C | Family::D => {
                let n = 2 * l;
                let mut w: Vec<Weight> = (0..l).map(|i| Vector::unit(l, i)).collect();
                w.extend((0..l).map(|i| -&Vector::unit(l, i)));
                let sign = if family == Family::C { -1 } else { 1 };
                let e: Vec<(usize, usize, Q)> = (0..l)
                    .flat_map(|i| [(i, l + i, q(1)), (l + i, i, q(sign))])
                    .collect();
                (n, w, Some(SparseMatrix::from_entries(n, n, e)))
            }
            f => {
                return Err(Error::InvalidType {
                    family: f.to_string(),
                    rank,
                    reason: "matrix realizations exist only for classical types".into(),
                })
            }
        };

        let mut basis = Vec::with_capacity(rs.lie_algebra_dim());
        for &i in rs.simple_indices() {
            let d: Vec<(usize, usize, Q)> = def_weights
                .iter()
                .enumerate()
                .map(|(a, w)| (a, a, to_q(&rs.pairing_idx(w, i))))
                .collect();
            basis.push(SparseMatrix::from_entries(n, n, d));
        }
        for r in 0..rs.len() {
            let alpha = rs.root(r);
            let cands: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .filter(|&(a, b)| &(&def_weights[a] - &def_weights[b]) == alpha)
                .collect();
            if cands.is_empty() {
                return Err(Error::Invariant(format!(
                    "no matrix units of weight {alpha}"
                )));
            }
            let x = match &form {
                None => {
                    if cands.len() != 1 {
                        return Err(Error::Invariant(format!(
                            "ambiguous root vector for {alpha}"
                        )));
                    }
                    vec![Q::one()]
                }
                Some(m) => {
                    // X = Σ x_p E_{a_p b_p} with X^T M + M X = 0.
                    let md = m.to_dense();
                    let mut eqs = vec![vec![Q::zero(); cands.len()]; n * n];
                    for (p, &(a, b)) in cands.iter().enumerate() {
                        for j in 0..n {
                            // (E_ba M)_{bj} = M_aj
                            eqs[b * n + j][p] += &md[a][j];
                        }
                        for i in 0..n {
                            // (M E_ab)_{ib} = M_ia
                            eqs[i * n + b][p] += &md[i][a];
                        }
                    }
                    let ns = nullspace(&eqs, cands.len());
                    if ns.len() != 1 {
                        return Err(Error::Invariant(format!(
                            "root space for {alpha} has dimension {}",
                            ns.len()
                        )));
                    }
                    let v = &ns[0];
                    let lead = v.iter().find(|x| !x.is_zero()).unwrap().clone();
                    v.iter().map(|x| x / &lead).collect()
                }
            };
            let entries: Vec<(usize, usize, Q)> =
                cands.iter().zip(x).map(|(&(a, b), c)| (a, b, c)).collect();
            basis.push(SparseMatrix::from_entries(n, n, entries));
        }

        let cartan_gram: Vec<Vec<Q>> = (0..l)
            .map(|i| (0..l).map(|j| basis[i].trace_product(&basis[j])).collect())
            .collect();
        let cartan_gram_inv = inverse(&cartan_gram)
            .ok_or_else(|| Error::Invariant("trace form degenerate on Cartan".into()))?;
        let root_pairing: Vec<Q> = (0..rs.len())
            .map(|r| basis[l + r].trace_product(&basis[l + rs.neg_index(r)]))
            .collect();
        if root_pairing.iter().any(Zero::is_zero) {
            return Err(Error::Invariant(
                "trace form degenerate on root spaces".into(),
            ));
        }
        Ok(SimpleAlgebra {
            name: algebra_name(family, rank),
            rs,
            n,
            form,
            def_weights,
            basis,
            cartan_gram_inv,
            root_pairing,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn defining_dim(&self) -> usize {
        self.n
    }

    pub fn defining_weights(&self) -> &[Weight] {
        &self.def_weights
    }

    /// Invariant bilinear form of the defining module, if any.
    pub fn form(&self) -> Option<&SparseMatrix> {
        self.form.as_ref()
    }

    pub fn basis(&self) -> &[SparseMatrix] {
        &self.basis
    }

    /// Basis index of the root vector for root `r`.
    pub fn root_basis_index(&self, r: usize) -> usize {
        self.rank() + r
    }

    /// Weight of basis element `k` (zero for Cartan elements).
    pub fn basis_weight(&self, k: usize) -> Weight {
        if k < self.rank() {
            Vector::zeros(self.rs.ambient_dim())
        } else {
            self.rs.root(k - self.rank()).clone()
        }
    }

    /// Cartan elements and simple root vectors of both signs; they generate
    /// the algebra.
    pub fn generators(&self) -> Vec<usize> {
        let mut g: Vec<usize> = (0..self.rank()).collect();
        for &s in self.rs.simple_indices() {
            g.push(self.root_basis_index(s));
            g.push(self.root_basis_index(self.rs.neg_index(s)));
        }
        g
    }

    /// `c` with `Σ_k c_k tr(b_k b_m) = f_m` for every m.
    pub fn coords_from_functional(&self, f: &[Q]) -> Vec<Q> {
        let l = self.rank();
        let mut c = vec![Q::zero(); self.dim()];
        for i in 0..l {
            c[i] = (0..l).fold(Q::zero(), |acc, j| {
                acc + &self.cartan_gram_inv[i][j] * &f[j]
            });
        }
        for r in 0..self.rs.len() {
            c[l + r] = &f[l + self.rs.neg_index(r)] / &self.root_pairing[r];
        }
        c
    }

    /// `(Σ c_k b_k, Σ s_m b_m)` under the trace form.
    pub fn trace_pairing(&self, c: &[Q], s: &[Q]) -> Q {
        let l = self.rank();
        let mut t = Q::zero();
        for i in 0..l {
            for j in 0..l {
                if !c[i].is_zero() && !s[j].is_zero() {
                    t += &c[i] * &s[j] * self.basis[i].trace_product(&self.basis[j]);
                }
            }
        }
        for r in 0..self.rs.len() {
            let m = l + self.rs.neg_index(r);
            if !c[l + r].is_zero() && !s[m].is_zero() {
                t += &c[l + r] * &s[m] * &self.root_pairing[r];
            }
        }
        t
    }

    /// Coordinates of a matrix in the span of the basis, verified exactly.
    pub fn coordinates(&self, x: &SparseMatrix) -> Result<Vec<Q>> {
        let f: Vec<Q> = self.basis.iter().map(|b| b.trace_product(x)).collect();
        let c = self.coords_from_functional(&f);
        let recon = self.combine(&c);
        if recon != *x {
            return Err(Error::Invariant(format!("matrix is not in {}", self.name)));
        }
        Ok(c)
    }

    pub fn combine(&self, c: &[Q]) -> SparseMatrix {
        let mut m = SparseMatrix::zero(self.n, self.n);
        for (k, ck) in c.iter().enumerate() {
            if !ck.is_zero() {
                m = m.lin_comb(&Q::one(), &self.basis[k], ck);
            }
        }
        m
    }
}

/// Sparse brackets `[b_i, b_j] = Σ c_k b_k` as `(k, c_k)` lists.
type StructureConstants = Vec<Vec<Vec<(usize, Q)>>>;

/// A product of simple classical algebras. Basis elements are numbered
/// consecutively factor by factor.
#[derive(Debug, Clone)]
pub struct LieAlgebra {
    factors: Vec<SimpleAlgebra>,
    offsets: Vec<usize>,
    dim: usize,
    /// Sparse structure constants: `brackets[i][j]` lists `(k, c)` with
    /// `[b_i, b_j] = Σ c b_k`.
    brackets: StructureConstants,
}

impl LieAlgebra {
    pub fn new(factors: Vec<SimpleAlgebra>) -> Result<Self> {
        let mut offsets = Vec::with_capacity(factors.len());
        let mut dim = 0;
        for f in &factors {
            offsets.push(dim);
            dim += f.dim();
        }
        let mut alg = LieAlgebra {
            factors,
            offsets,
            dim,
            brackets: Vec::new(),
        };
        alg.brackets = alg.compute_brackets()?;
        Ok(alg)
    }

    pub fn simple(family: Family, rank: usize) -> Result<Self> {
        Self::new(vec![SimpleAlgebra::new(family, rank)?])
    }

    /// `"sl6"` or `"sl2xsl2"`.
    pub fn parse(name: &str) -> Result<Self> {
        let factors = name
            .split('x')
            .map(|f| {
                let (fam, rank) = parse_algebra_name(f.trim())?;
                SimpleAlgebra::new(fam, rank)
            })
            .collect::<Result<Vec<_>>>()?;
        if factors.is_empty() {
            return Err(Error::Parse("empty algebra name".into()));
        }
        Self::new(factors)
    }

    pub fn name(&self) -> String {
        self.factors
            .iter()
            .map(|f| f.name())
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn factors(&self) -> &[SimpleAlgebra] {
        &self.factors
    }

    pub fn offset(&self, f: usize) -> usize {
        self.offsets[f]
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(SimpleAlgebra::rank).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.factors.len() == 1
    }

    /// Factor owning basis element `k` and the local index.
    pub fn locate(&self, k: usize) -> (usize, usize) {
        let f = self
            .offsets
            .iter()
            .rposition(|&o| o <= k)
            .expect("basis index in range");
        (f, k - self.offsets[f])
    }

    /// Global indices of the Cartan elements.
    pub fn cartan_indices(&self) -> Vec<usize> {
        self.factors
            .iter()
            .zip(&self.offsets)
            .flat_map(|(f, &o)| (0..f.rank()).map(move |i| o + i))
            .collect()
    }

    pub fn generators(&self) -> Vec<usize> {
        self.factors
            .iter()
            .zip(&self.offsets)
            .flat_map(|(f, &o)| f.generators().into_iter().map(move |i| o + i))
            .collect()
    }

    /// Basis element `k` acting on the direct sum of the defining modules.
    pub fn defining_matrix(&self, k: usize) -> SparseMatrix {
        let (f, local) = self.locate(k);
        let blocks: Vec<SparseMatrix> = self
            .factors
            .iter()
            .enumerate()
            .map(|(g, fac)| {
                if g == f {
                    fac.basis[local].clone()
                } else {
                    SparseMatrix::zero(fac.n, fac.n)
                }
            })
            .collect();
        let refs: Vec<&SparseMatrix> = blocks.iter().collect();
        SparseMatrix::block_diag(&refs)
    }

    pub fn bracket(&self, i: usize, j: usize) -> &[(usize, Q)] {
        &self.brackets[i][j]
    }

    fn compute_brackets(&self) -> Result<StructureConstants> {
        let mut out = vec![vec![Vec::new(); self.dim]; self.dim];
        for (fi, fac) in self.factors.iter().enumerate() {
            let o = self.offsets[fi];
            let d = fac.dim();
            for i in 0..d {
                for j in i + 1..d {
                    let c = fac.basis[i].commutator(&fac.basis[j]);
                    let coords = fac.coordinates(&c).map_err(|_| {
                        Error::Invariant(format!(
                            "{}: bracket of basis elements {i},{j} leaves the span",
                            fac.name
                        ))
                    })?;
                    let sparse: Vec<(usize, Q)> = coords
                        .into_iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(k, x)| (o + k, x))
                        .collect();
                    out[o + j][o + i] = sparse.iter().map(|(k, x)| (*k, -x.clone())).collect();
                    out[o + i][o + j] = sparse;
                }
            }
        }
        Ok(out)
    }

    /// Coordinates `c` with `(Σ c_k b_k, b_m) = f_m` under the trace form.
    pub fn coords_from_functional(&self, f: &[Q]) -> Vec<Q> {
        let mut c = Vec::with_capacity(self.dim);
        for (fac, &o) in self.factors.iter().zip(&self.offsets) {
            c.extend(fac.coords_from_functional(&f[o..o + fac.dim()]));
        }
        c
    }

    pub fn trace_pairing(&self, c: &[Q], s: &[Q]) -> Q {
        self.factors
            .iter()
            .zip(&self.offsets)
            .fold(Q::zero(), |acc, (fac, &o)| {
                acc + fac.trace_pairing(&c[o..o + fac.dim()], &s[o..o + fac.dim()])
            })
    }

    /// Dense Gram matrix of the trace form.
    pub fn gram(&self) -> Vec<Vec<Q>> {
        (0..self.dim)
            .map(|i| {
                let mi = self.defining_matrix(i);
                (0..self.dim)
                    .map(|j| mi.trace_product(&self.defining_matrix(j)))
                    .collect()
            })
            .collect()
    }

    /// Weight of basis element `k`, with the factor weights concatenated.
    pub fn basis_weight(&self, k: usize) -> Weight {
        let (f, local) = self.locate(k);
        self.embed_weight(f, &self.factors[f].basis_weight(local))
    }

    /// Places a weight of factor `f` into the concatenated ambient space.
    pub fn embed_weight(&self, f: usize, w: &Weight) -> Weight {
        let mut out = Vec::new();
        for (g, fac) in self.factors.iter().enumerate() {
            if g == f {
                out.extend(w.0.iter().copied());
            } else {
                out.extend(std::iter::repeat_n(rat(0), fac.rs.ambient_dim()));
            }
        }
        Vector(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!(parse_algebra_name("sl6").unwrap(), (Family::A, 5));
        assert_eq!(parse_algebra_name("sp4").unwrap(), (Family::C, 2));
        assert_eq!(parse_algebra_name("so11").unwrap(), (Family::B, 5));
        assert_eq!(parse_algebra_name("so8").unwrap(), (Family::D, 4));
        assert!(parse_algebra_name("sp5").is_err());
        assert!(parse_algebra_name("gl3").is_err());
        assert_eq!(algebra_name(Family::B, 6), "so13");
    }

    #[test]
    fn dimensions_and_closure() {
        for (f, l) in [
            (Family::A, 1),
            (Family::A, 3),
            (Family::B, 2),
            (Family::C, 3),
            (Family::D, 4),
        ] {
            let g = LieAlgebra::simple(f, l).unwrap();
            let rs = build_root_system(f, l).unwrap();
            assert_eq!(g.dim(), rs.lie_algebra_dim());
        }
    }

    #[test]
    fn matrices_preserve_form() {
        for (f, l) in [(Family::B, 3), (Family::C, 2), (Family::D, 3)] {
            let g = SimpleAlgebra::new(f, l).unwrap();
            let m = g.form().unwrap();
            for x in g.basis() {
                assert!(x.transpose().mul(m).add(&m.mul(x)).is_zero());
            }
        }
    }

    #[test]
    fn functional_round_trip() {
        let g = LieAlgebra::parse("sp4xsl2").unwrap();
        assert_eq!(g.dim(), 13);
        let c: Vec<Q> = (0..g.dim()).map(|i| q(i as i64 - 4)).collect();
        let gram = g.gram();
        let f: Vec<Q> = (0..g.dim())
            .map(|m| (0..g.dim()).fold(Q::zero(), |acc, k| acc + &c[k] * &gram[k][m]))
            .collect();
        assert_eq!(g.coords_from_functional(&f), c);
        let s: Vec<Q> = (0..g.dim()).map(|i| q((i % 3) as i64)).collect();
        let direct = (0..g.dim()).fold(Q::zero(), |acc, m| acc + &f[m] * &s[m]);
        assert_eq!(g.trace_pairing(&c, &s), direct);
    }

    #[test]
    fn jacobi_identity() {
        let g = LieAlgebra::parse("sp4").unwrap();
        let d = g.dim();
        let br = |x: &[Q], y: &[Q]| {
            let mut z = vec![Q::zero(); d];
            for i in 0..d {
                for j in 0..d {
                    if x[i].is_zero() || y[j].is_zero() {
                        continue;
                    }
                    for (k, c) in g.bracket(i, j) {
                        z[*k] += &x[i] * &y[j] * c;
                    }
                }
            }
            z
        };
        let e = |i: usize| {
            let mut v = vec![Q::zero(); d];
            v[i] = Q::one();
            v
        };
        for i in 0..d {
            for j in 0..d {
                for k in (0..d).step_by(3) {
                    let a = br(&e(i), &br(&e(j), &e(k)));
                    let b = br(&e(j), &br(&e(k), &e(i)));
                    let c = br(&e(k), &br(&e(i), &e(j)));
                    let s: Vec<Q> = (0..d).map(|t| &a[t] + &b[t] + &c[t]).collect();
                    assert!(s.iter().all(Zero::is_zero));
                }
            }
        }
    }
}
