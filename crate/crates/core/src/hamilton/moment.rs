//! Quadratic moment maps of linear symplectic actions and the generic
//! invariants read off from sample points.

use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::algebra::LieAlgebra;
use super::model::LinearHamiltonianModel;
use super::modules::Module;
use crate::error::{Error, Result};
use crate::linalg::{clear_denominators, dot, inverse, q, rank, rank_int, Q};

/// Components `f_k = ½ ω(b_k v, v)` of the moment map against the basis.
pub fn moment_functional(model: &LinearHamiltonianModel, v: &[Q]) -> Vec<Q> {
    let half = Q::new(1.into(), 2.into());
    (0..model.algebra().dim())
        .map(|k| &half * model.form(&model.act(k, v), v))
        .collect()
}

/// The moment map at `v`, identified with an element of the algebra through
/// the trace form of the defining representations.
pub fn moment_map(model: &LinearHamiltonianModel, v: &[Q]) -> Result<Vec<Q>> {
    if v.len() != model.dim() {
        return Err(Error::DimensionMismatch {
            expected: model.dim(),
            got: v.len(),
        });
    }
    Ok(model
        .algebra()
        .coords_from_functional(&moment_functional(model, v)))
}

/// Moment map of the cotangent lift `T*Y = Y ⊕ Y*`: `f_k = p(b_k y)`.
pub fn cotangent_moment(alg: &LieAlgebra, base: &Module, y: &[Q], p: &[Q]) -> Result<Vec<Q>> {
    if y.len() != base.dim() || p.len() != base.dim() {
        return Err(Error::DimensionMismatch {
            expected: base.dim(),
            got: y.len().max(p.len()),
        });
    }
    let f: Vec<Q> = (0..alg.dim())
        .map(|k| dot(p, &base.action(k).mul_vec(y)))
        .collect();
    Ok(alg.coords_from_functional(&f))
}

/// Orthogonal projection of `c` onto the span of `sub` (vectors in algebra
/// coordinates), returned in the coordinates of `sub`.
pub fn restrict_moment(alg: &LieAlgebra, sub: &[Vec<Q>], c: &[Q]) -> Result<Vec<Q>> {
    let d = sub.len();
    let gram: Vec<Vec<Q>> = sub
        .iter()
        .map(|a| sub.iter().map(|b| alg.trace_pairing(a, b)).collect())
        .collect();
    let inv = inverse(&gram).ok_or(Error::DegenerateRestriction {
        rank: rank(&gram),
        dim: d,
    })?;
    let rhs: Vec<Q> = sub.iter().map(|a| alg.trace_pairing(a, c)).collect();
    Ok((0..d)
        .map(|i| (0..d).fold(Q::zero(), |acc, j| acc + &inv[i][j] * &rhs[j]))
        .collect())
}

/// Number of basis pairs checked and whether both identities held.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentCheck {
    pub pairs: usize,
    /// `⟨μ(v), [ξ, η]⟩ = ω(ξv, ηv)`.
    pub bracket_ok: bool,
    /// `ω(ηξv, v) = −⟨μ(v), [ξ, η]⟩`.
    pub equivariance_ok: bool,
    /// The coordinates reproduce the functional under the trace form.
    pub coordinates_ok: bool,
}

impl MomentCheck {
    pub fn ok(&self) -> bool {
        self.bracket_ok && self.equivariance_ok && self.coordinates_ok
    }
}

pub fn check_moment_identities(model: &LinearHamiltonianModel, v: &[Q]) -> Result<MomentCheck> {
    let alg = model.algebra();
    let n = alg.dim();
    let f = moment_functional(model, v);
    let c = alg.coords_from_functional(&f);
    let mut coordinates_ok = true;
    for k in 0..n {
        let mut e = vec![Q::zero(); n];
        e[k] = q(1);
        if alg.trace_pairing(&c, &e) != f[k] {
            coordinates_ok = false;
        }
    }
    let xv: Vec<Vec<Q>> = (0..n).map(|k| model.act(k, v)).collect();
    let (mut bracket_ok, mut equivariance_ok, mut pairs) = (true, true, 0);
    for i in 0..n {
        for j in i + 1..n {
            pairs += 1;
            let mu_bracket = alg
                .bracket(i, j)
                .iter()
                .fold(Q::zero(), |acc, (k, s)| acc + s * &f[*k]);
            if mu_bracket != model.form(&xv[i], &xv[j]) {
                bracket_ok = false;
            }
            if model.form(&model.act(j, &xv[i]), v) != -mu_bracket {
                equivariance_ok = false;
            }
        }
    }
    Ok(MomentCheck {
        pairs,
        bracket_ok,
        equivariance_ok,
        coordinates_ok,
    })
}

/// Generic orbit data of a symplectic module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub dim_v: usize,
    pub dim_g: usize,
    pub rank_g: usize,
    /// Generic orbit dimension.
    pub orbit_dim: usize,
    /// Generic rank of ω restricted to orbit tangent spaces.
    pub form_rank: usize,
    /// Defect: dimension of the kernel of that restriction.
    pub defect: usize,
    /// Corank: `dim V − orbit_dim − defect`.
    pub corank: usize,
    pub samples_used: usize,
    /// `dim V` minus the zero-weight multiplicity, an upper bound for the orbit dimension.
    pub orbit_bound: usize,
}

/// Integer sample points with entries in `[-10, 10]`.
pub fn sample_points(dim: usize, count: usize, seed: u64) -> Vec<Vec<Q>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v: Vec<i64> = (0..dim).map(|_| rng.gen_range(-10..=10)).collect();
        if v.iter().any(|&x| x != 0) {
            out.push(v.into_iter().map(q).collect());
        }
    }
    out
}

/// Maximal ranks over `samples` random points. Exact per point; generic
/// values are attained with high probability.
pub fn invariants(
    model: &LinearHamiltonianModel,
    samples: usize,
    seed: u64,
) -> Result<InvariantReport> {
    if samples == 0 {
        return Err(Error::DegenerateSamples(0));
    }
    let n = model.algebra().dim();
    let (mut orbit_dim, mut form_rank) = (0, 0);
    for v in sample_points(model.dim(), samples, seed) {
        let xv: Vec<Vec<Q>> = (0..n).map(|k| model.act(k, &v)).collect();
        let ov: Vec<Vec<Q>> = xv.iter().map(|x| model.omega().mul_vec(x)).collect();
        let gram: Vec<Vec<Q>> = xv
            .iter()
            .map(|a| ov.iter().map(|b| dot(a, b)).collect())
            .collect();
        orbit_dim = orbit_dim.max(rank_int(clear_denominators(&xv)));
        form_rank = form_rank.max(rank_int(clear_denominators(&gram)));
    }
    if orbit_dim == 0 && model.dim() > 0 && model.module().actions().iter().any(|x| !x.is_zero()) {
        return Err(Error::DegenerateSamples(samples));
    }
    let defect = orbit_dim - form_rank;
    Ok(InvariantReport {
        dim_v: model.dim(),
        dim_g: n,
        rank_g: model.algebra().rank(),
        orbit_dim,
        form_rank,
        defect,
        corank: model.dim() - orbit_dim - defect,
        samples_used: samples,
        orbit_bound: model.dim() - model.zero_weight_multiplicity(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamilton::modules::Atom;

    fn qs(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn identities_hold() {
        for expr in [
            "sl2:taut+dual",
            "sp4:taut+pwedge2+pwedge2",
            "sl2xsl2:taut@1+dual@1+taut@2+dual@2",
        ] {
            let m = LinearHamiltonianModel::build(expr).unwrap();
            for v in sample_points(m.dim(), 3, 11) {
                let c = check_moment_identities(&m, &v).unwrap();
                assert!(c.ok(), "{expr}: {c:?}");
            }
        }
    }

    #[test]
    fn sl2_on_plane() {
        let m = LinearHamiltonianModel::build("sl2:taut").unwrap();
        let mu = moment_map(&m, &qs(&[1, 0])).unwrap();
        assert!(mu.iter().any(|x| !x.is_zero()));
        let inv = invariants(&m, 3, 1).unwrap();
        assert_eq!((inv.orbit_dim, inv.defect, inv.corank), (2, 0, 0));
    }

    #[test]
    fn cotangent_agrees_with_model() {
        let alg = LieAlgebra::parse("sl3").unwrap();
        let base = Module::atom(&alg, Atom::Taut, 0).unwrap();
        let m = LinearHamiltonianModel::build("sl3:taut+dual").unwrap();
        assert!(m.pairs_by_identity(0, 1));
        let y = qs(&[1, -2, 3]);
        let p = qs(&[2, 0, -1]);
        let v: Vec<Q> = y.iter().chain(&p).cloned().collect();
        let from_model = moment_map(&m, &v).unwrap();
        let lift = cotangent_moment(&alg, &base, &y, &p).unwrap();
        assert_eq!(from_model, lift);
    }

    #[test]
    fn restriction_to_cartan() {
        let alg = LieAlgebra::parse("sl3").unwrap();
        let cartan: Vec<Vec<Q>> = alg
            .cartan_indices()
            .into_iter()
            .map(|i| (0..alg.dim()).map(|k| q((k == i) as i64)).collect())
            .collect();
        let c: Vec<Q> = (0..alg.dim()).map(|k| q(k as i64 + 1)).collect();
        assert_eq!(restrict_moment(&alg, &cartan, &c).unwrap(), qs(&[1, 2]));
        let e = alg.factors()[0].root_basis_index(0);
        let nil = vec![(0..alg.dim())
            .map(|k| q((k == e) as i64))
            .collect::<Vec<Q>>()];
        assert!(matches!(
            restrict_moment(&alg, &nil, &c),
            Err(Error::DegenerateRestriction { rank: 0, dim: 1 })
        ));
    }

    #[test]
    fn sampling_is_seeded() {
        assert_eq!(sample_points(5, 2, 3), sample_points(5, 2, 3));
        assert_ne!(sample_points(5, 2, 3), sample_points(5, 2, 4));
    }
}
