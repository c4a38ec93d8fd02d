//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use invmoment::hamilton::{Atom, LieAlgebra, Module};
use invmoment::linalg::{nullspace, q, rank, Q};
use invmoment::repthy::{freudenthal_weights, weyl_dim, WeightedModule};
use invmoment::rootsys::{build_root_system, Family, RootSystem, Weight};
use invmoment::subsys::{fixed_weight_count_idx, is_completely_perpendicular_idx};

pub fn seed() -> u64 {
    std::env::var("INVMOMENT_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0)
}

/// Dimension of the common kernel of `e_α` and `e_{−α}` for all `α` in `a`.
pub fn invariant_dim_by_matrices(
    alg: &LieAlgebra,
    factor: usize,
    module: &Module,
    a: &[usize],
) -> usize {
    let fac = &alg.factors()[factor];
    let rs = fac.root_system();
    let o = alg.offset(factor);
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for &r in a {
        for idx in [r, rs.neg_index(r)] {
            rows.extend(module.action(o + fac.root_basis_index(idx)).to_dense());
        }
    }
    module.dim() - rank(&rows)
}

/// Normalizer of the span of `e_{±α}` and `[e_α, e_{−α}]` (α in `a`) inside
/// a simple algebra, by linear algebra on structure constants.
pub fn normalizer_dim_by_brackets(alg: &LieAlgebra, a: &[usize]) -> usize {
    let fac = &alg.factors()[0];
    let rs = fac.root_system();
    let n = alg.dim();
    let unit = |k: usize| (0..n).map(|i| q((i == k) as i64)).collect::<Vec<Q>>();
    let bracket = |x: &[Q], y: &[Q]| {
        let mut z = vec![q(0); n];
        for i in 0..n {
            for j in 0..n {
                if x[i] == q(0) || y[j] == q(0) {
                    continue;
                }
                for (k, c) in alg.bracket(i, j) {
                    z[*k] += &x[i] * &y[j] * c;
                }
            }
        }
        z
    };
    let mut span: Vec<Vec<Q>> = Vec::new();
    for &r in a {
        let e = unit(fac.root_basis_index(r));
        let f = unit(fac.root_basis_index(rs.neg_index(r)));
        span.push(bracket(&e, &f));
        span.push(e);
        span.push(f);
    }
    let annihilator = nullspace(&span, n);
    let mut eqs = Vec::new();
    for y in &span {
        let images: Vec<Vec<Q>> = (0..n).map(|i| bracket(&unit(i), y)).collect();
        for phi in &annihilator {
            eqs.push(
                images
                    .iter()
                    .map(|img| img.iter().zip(phi).fold(q(0), |acc, (u, v)| acc + u * v))
                    .collect::<Vec<Q>>(),
            );
        }
    }
    n - rank(&eqs)
}

/// Algebras of rank at most four with modules of dimension at most 20.
pub fn small_modules() -> Vec<(&'static str, Atom)> {
    use Atom::*;
    vec![
        ("sl2", Taut),
        ("sl2", Sym(2)),
        ("sl2", Sym(4)),
        ("sl3", Taut),
        ("sl3", Dual),
        ("sl3", Sym(2)),
        ("sl3", Adjoint),
        ("sl4", Wedge(2)),
        ("sl4", Sym(2)),
        ("sl4", Adjoint),
        ("sl5", Taut),
        ("sl5", Wedge(2)),
        ("sl5", Sym(2)),
        ("sp4", Taut),
        ("sp4", PrimitiveWedge(2)),
        ("sp4", Adjoint),
        ("sp6", Taut),
        ("sp6", PrimitiveWedge(2)),
        ("sp8", Taut),
        ("so7", Taut),
        ("so7", Spin),
        ("so9", Taut),
        ("so9", Spin),
        ("so8", Taut),
    ]
}

pub struct FixedCase {
    pub label: String,
    pub oracle: usize,
    pub count: u64,
}

/// Every completely perpendicular set of one or two positive roots, for
/// every module in [`small_modules`].
pub fn fixed_count_cases() -> Vec<FixedCase> {
    let mut out = Vec::new();
    for (name, atom) in small_modules() {
        let alg = LieAlgebra::parse(name).unwrap();
        let module = Module::atom(&alg, atom, 0).unwrap();
        assert!(module.dim() <= 20);
        let rs = alg.factors()[0].root_system();
        let weights: Vec<(Weight, u64)> = module.weight_multiset().into_iter().collect();
        let pos = rs.positive_indices();
        let mut sets: Vec<Vec<usize>> = pos.iter().map(|&p| vec![p]).collect();
        for (i, &p) in pos.iter().enumerate() {
            for &r in &pos[i + 1..] {
                if is_completely_perpendicular_idx(rs, &[p, r]).unwrap() {
                    sets.push(vec![p, r]);
                }
            }
        }
        for a in sets {
            let oracle = invariant_dim_by_matrices(&alg, 0, &module, &a);
            let count = fixed_weight_count_idx(rs, &a, &weights).unwrap();
            let roots: Vec<String> = a.iter().map(|&i| rs.root(i).to_string()).collect();
            out.push(FixedCase {
                label: format!("{name} {atom} {{{}}}", roots.join(", ")),
                oracle,
                count,
            });
        }
    }
    out
}

/// Dominant weights with Dynkin label sum at most `max_sum`.
pub fn dominant_up_to(rs: &RootSystem, max_sum: i64) -> Vec<Weight> {
    let l = rs.rank();
    let mut out = Vec::new();
    let mut cur = vec![0i64; l];
    fn rec(i: usize, left: i64, cur: &mut Vec<i64>, rs: &RootSystem, out: &mut Vec<Weight>) {
        if i == cur.len() {
            out.push(rs.weight_from_fundamental(cur).unwrap());
            return;
        }
        for k in 0..=left {
            cur[i] = k;
            rec(i + 1, left - k, cur, rs, out);
        }
        cur[i] = 0;
    }
    rec(0, max_sum, &mut cur, rs, &mut out);
    out
}

pub struct DimCase {
    pub label: String,
    pub freudenthal: u64,
    pub weyl: u64,
    pub shortcut_agrees: bool,
}

/// Systems of rank at most four (plus E6 on fundamental weights).
pub fn dimension_cases() -> Vec<DimCase> {
    let systems: Vec<(Family, usize, i64)> = vec![
        (Family::A, 1, 4),
        (Family::A, 2, 3),
        (Family::A, 3, 2),
        (Family::A, 4, 2),
        (Family::B, 2, 3),
        (Family::B, 3, 2),
        (Family::B, 4, 2),
        (Family::C, 2, 3),
        (Family::C, 3, 2),
        (Family::C, 4, 2),
        (Family::D, 4, 2),
        (Family::G, 2, 3),
        (Family::F, 4, 1),
        (Family::E, 6, 1),
    ];
    let mut out = Vec::new();
    for (f, l, max_sum) in systems {
        let rs = build_root_system(f, l).unwrap();
        for lambda in dominant_up_to(&rs, max_sum) {
            let fr = freudenthal_weights(&rs, &lambda).unwrap();
            let shortcut = WeightedModule::irreducible(&rs, &lambda).unwrap();
            out.push(DimCase {
                label: format!("{} {}", rs.name(), lambda),
                freudenthal: fr.dim(),
                weyl: weyl_dim(&rs, &lambda).unwrap(),
                shortcut_agrees: shortcut.weights() == fr.weights(),
            });
        }
    }
    out
}

/// Models used for the moment-map identities, besides the stored ones.
pub const EXTRA_MODELS: [&str; 5] = [
    "sl2:taut",
    "sl3:taut+dual",
    "sp4:taut+adj+adj",
    "so7:2*spin",
    "sl2xsp4:taut@1+taut@2+pwedge2@2+pwedge2@2",
];

pub fn system(f: Family, l: usize) -> RootSystem {
    build_root_system(f, l).unwrap()
}
