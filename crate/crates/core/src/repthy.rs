//! Weight systems of finite-dimensional modules, the Weyl dimension formula,
//! traces of squared coroots, and the dimension checks built on them.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::rootsys::{rat, ratf, Family, LengthClass, Rat, Root, RootSystem, Vector, Weight};
use crate::subsys::{fixed_weight_count_idx, normalizer_dim_idx};

fn to_q(x: &Rat) -> Q {
    Q::new(BigInt::from(*x.numer()), BigInt::from(*x.denom()))
}

fn require_dominant(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    if lambda.dim() != rs.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: rs.ambient_dim(),
            got: lambda.dim(),
        });
    }
    if !rs.is_dominant_integral(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    Ok(())
}

/// `∏_{α>0} (λ+ρ, α)/(ρ, α)`.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<u64> {
    require_dominant(rs, lambda)?;
    let rho = rs.rho();
    let lr = lambda + &rho;
    let mut acc = Q::one();
    for i in rs.positive_indices() {
        let a = rs.root(i);
        acc *= to_q(&lr.dot(a)) / to_q(&rho.dot(a));
    }
    if !acc.is_integer() {
        return Err(Error::Invariant(format!(
            "Weyl product {acc} is not an integer"
        )));
    }
    acc.to_integer()
        .to_u64()
        .ok_or_else(|| Error::Invariant("dimension does not fit in u64".into()))
}

/// A module given by highest-weight constituents and its weight multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedModule {
    constituents: Vec<(Weight, u64)>,
    weights: BTreeMap<Weight, u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WeightJson {
    pub weight: Vec<String>,
    pub mult: u64,
}

impl WeightedModule {
    pub fn zero() -> Self {
        WeightedModule {
            constituents: Vec::new(),
            weights: BTreeMap::new(),
        }
    }

    /// The irreducible module of highest weight λ. Spin modules of B_l use
    /// the explicit sign-pattern weight system; everything else goes
    /// through the Freudenthal recursion.
    pub fn irreducible(rs: &RootSystem, lambda: &Weight) -> Result<Self> {
        require_dominant(rs, lambda)?;
        if rs.family() == Family::B && *lambda == rs.fundamental_weights()[rs.rank() - 1] {
            return Ok(spin_weights(rs));
        }
        freudenthal_weights(rs, lambda)
    }

    /// The adjoint module: roots with multiplicity 1 and zero with
    /// multiplicity rank.
    pub fn adjoint(rs: &RootSystem) -> Self {
        let mut weights: BTreeMap<Weight, u64> =
            rs.roots().iter().map(|r| (r.clone(), 1)).collect();
        weights.insert(Vector::zeros(rs.ambient_dim()), rs.rank() as u64);
        let highest = -rs.lowest_root();
        WeightedModule {
            constituents: vec![(highest, 1)],
            weights,
        }
    }

    pub fn trivial(rs: &RootSystem, dim: u64) -> Self {
        let z = Vector::zeros(rs.ambient_dim());
        WeightedModule {
            constituents: vec![(z.clone(), dim)],
            weights: BTreeMap::from([(z, dim)]),
        }
    }

    /// `k` copies of `self`.
    pub fn times(&self, k: u64) -> Self {
        WeightedModule {
            constituents: self
                .constituents
                .iter()
                .map(|(w, m)| (w.clone(), m * k))
                .collect(),
            weights: self
                .weights
                .iter()
                .filter(|_| k > 0)
                .map(|(w, m)| (w.clone(), m * k))
                .collect(),
        }
    }

    pub fn direct_sum(&self, other: &WeightedModule) -> Self {
        let mut out = self.clone();
        out.constituents.extend(other.constituents.iter().cloned());
        for (w, m) in &other.weights {
            *out.weights.entry(w.clone()).or_insert(0) += m;
        }
        out
    }

    /// Sum of irreducibles `Σ k_i V(λ_i)`.
    pub fn from_constituents(rs: &RootSystem, parts: &[(Weight, u64)]) -> Result<Self> {
        let mut out = WeightedModule::zero();
        for (lambda, k) in parts {
            out = out.direct_sum(&WeightedModule::irreducible(rs, lambda)?.times(*k));
        }
        Ok(out)
    }

    pub fn constituents(&self) -> &[(Weight, u64)] {
        &self.constituents
    }

    pub fn weights(&self) -> &BTreeMap<Weight, u64> {
        &self.weights
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.weights.get(w).copied().unwrap_or(0)
    }

    pub fn weight_multiset(&self) -> Vec<(Weight, u64)> {
        self.weights.iter().map(|(w, m)| (w.clone(), *m)).collect()
    }

    pub fn dim(&self) -> u64 {
        self.weights.values().sum()
    }

    pub fn to_json(&self) -> Vec<WeightJson> {
        self.weights
            .iter()
            .map(|(w, m)| WeightJson {
                weight: w.to_strings(),
                mult: *m,
            })
            .collect()
    }
}

/// W-orbit of a weight under the simple reflections.
pub fn weyl_orbit(rs: &RootSystem, mu: &Weight) -> Vec<Weight> {
    let mut seen: HashMap<Weight, ()> = HashMap::from([(mu.clone(), ())]);
    let mut queue = VecDeque::from([mu.clone()]);
    let mut out = Vec::new();
    while let Some(v) = queue.pop_front() {
        for &i in rs.simple_indices() {
            let w = rs.reflect_idx(i, &v);
            if seen.insert(w.clone(), ()).is_none() {
                queue.push_back(w);
            }
        }
        out.push(v);
    }
    out.sort();
    out
}

/// Dominant weights of V(λ), found by saturating root strings from λ.
fn dominant_weights(rs: &RootSystem, lambda: &Weight) -> Vec<Weight> {
    let positives = rs.positive_indices();
    let mut seen: HashMap<Weight, ()> = HashMap::from([(lambda.clone(), ())]);
    let mut queue = VecDeque::from([lambda.clone()]);
    let mut out = Vec::new();
    while let Some(mu) = queue.pop_front() {
        for &i in &positives {
            let p = rs.pairing_idx(&mu, i);
            let steps = p.to_integer();
            for k in 1..=steps {
                let nu = rs.dominant_representative(&(&mu - &rs.root(i).scale(rat(k))));
                if seen.insert(nu.clone(), ()).is_none() {
                    queue.push_back(nu);
                }
            }
        }
        out.push(mu);
    }
    out
}

/// Freudenthal's recursion on dominant weights, expanded over W-orbits.
pub fn freudenthal_weights(rs: &RootSystem, lambda: &Weight) -> Result<WeightedModule> {
    require_dominant(rs, lambda)?;
    let rho = rs.rho();
    let norm = |v: &Weight| (v + &rho).norm_sq();
    let top = norm(lambda);
    let mut dom = dominant_weights(rs, lambda);
    dom.sort_by(|a, b| norm(b).cmp(&norm(a)).then(b.cmp(a)));
    let positives = rs.positive_indices();
    let mut mult: HashMap<Weight, Rat> = HashMap::new();
    for mu in &dom {
        if mu == lambda {
            mult.insert(mu.clone(), Rat::one());
            continue;
        }
        let mut rhs = Rat::zero();
        for &i in &positives {
            let a = rs.root(i);
            let mut k = 1;
            loop {
                let nu = mu + &a.scale(rat(k));
                let d = rs.dominant_representative(&nu);
                match mult.get(&d) {
                    Some(m) => rhs += nu.dot(a) * m,
                    None => break,
                }
                k += 1;
            }
        }
        let denom = top - norm(mu);
        if !denom.is_positive() {
            return Err(Error::Invariant(format!(
                "Freudenthal denominator vanishes at {mu}"
            )));
        }
        let m = rhs * rat(2) / denom;
        if !m.is_integer() || m.is_negative() {
            return Err(Error::Invariant(format!(
                "non-integral multiplicity {m} at {mu}"
            )));
        }
        mult.insert(mu.clone(), m);
    }
    let mut weights = BTreeMap::new();
    for mu in &dom {
        let m = mult[mu].to_integer() as u64;
        if m == 0 {
            continue;
        }
        for w in weyl_orbit(rs, mu) {
            weights.insert(w, m);
        }
    }
    Ok(WeightedModule {
        constituents: vec![(lambda.clone(), 1)],
        weights,
    })
}

/// Weights ±½ε_1 ± … ± ½ε_l of the spin module of B_l, each of
/// multiplicity one.
pub fn spin_weights(rs: &RootSystem) -> WeightedModule {
    let l = rs.rank();
    let mut weights = BTreeMap::new();
    for mask in 0u64..(1 << l) {
        let w = Vector(
            (0..l)
                .map(|i| ratf(if mask >> i & 1 == 1 { -1 } else { 1 }, 2))
                .collect(),
        );
        weights.insert(w, 1);
    }
    WeightedModule {
        constituents: vec![(rs.fundamental_weights()[l - 1].clone(), 1)],
        weights,
    }
}

/// `Σ_λ mult(λ)·⟨λ, α^∨⟩²`.
pub fn trace_h2(rs: &RootSystem, module: &WeightedModule, alpha: &Root) -> Result<Rat> {
    let i = rs.require_root(alpha)?;
    Ok(trace_h2_idx(rs, module, i))
}

pub fn trace_h2_idx(rs: &RootSystem, module: &WeightedModule, i: usize) -> Rat {
    module.weights.iter().fold(Rat::zero(), |acc, (w, &m)| {
        let p = rs.pairing_idx(w, i);
        acc + p * p * rat(m as i64)
    })
}

/// Traces on `module` and on the adjoint module over one length class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceVerdict {
    pub class: String,
    pub module_trace: String,
    pub adjoint_trace: String,
    /// Whether `tr_V(h²) = tr_g(h²) − 4`. Necessary for a reflection of
    /// this class to be missing from the Weyl group; when it fails every
    /// reflection of the class lies in it. When it holds nothing follows.
    pub holds: bool,
}

fn class_constant(rs: &RootSystem, module: &WeightedModule, class: LengthClass) -> Result<Rat> {
    let roots = rs.roots_in_class(class);
    let Some(&first) = roots.first() else {
        return Err(Error::Invariant(format!(
            "{} has no {class} roots",
            rs.name()
        )));
    };
    let t = trace_h2_idx(rs, module, first);
    for &i in &roots[1..] {
        if trace_h2_idx(rs, module, i) != t {
            return Err(Error::Invariant(format!(
                "trace of h² is not constant on the {class} roots of {}",
                rs.name()
            )));
        }
    }
    Ok(t)
}

pub fn trace_verdict(
    rs: &RootSystem,
    module: &WeightedModule,
    class: LengthClass,
) -> Result<TraceVerdict> {
    let tv = class_constant(rs, module, class)?;
    let ta = class_constant(rs, &WeightedModule::adjoint(rs), class)?;
    Ok(TraceVerdict {
        class: class.to_string(),
        module_trace: tv.to_string(),
        adjoint_trace: ta.to_string(),
        holds: tv == ta - rat(4),
    })
}

pub fn trace_criterion_holds(
    rs: &RootSystem,
    module: &WeightedModule,
    class: LengthClass,
) -> Result<bool> {
    Ok(trace_verdict(rs, module, class)?.holds)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratumCheck {
    pub holds: bool,
    pub lhs: i64,
    pub rhs: i64,
    pub fixed_dim: u64,
    /// Fixed dimension of one copy of each constituent, in order.
    pub fixed_per_constituent: Vec<u64>,
    pub normalizer_dim: usize,
}

/// `dim V^{g^{(A)}} + dim g − dim n_g(g^{(A)})` against `dim V − 4|A|`.
pub fn stratum_check(rs: &RootSystem, module: &WeightedModule, a: &[Root]) -> Result<StratumCheck> {
    let idx: Vec<usize> = a
        .iter()
        .map(|r| rs.require_root(r))
        .collect::<Result<_>>()?;
    let normalizer = normalizer_dim_idx(rs, &idx)?;
    let fixed = fixed_weight_count_idx(rs, &idx, &module.weight_multiset())?;
    let mut per = Vec::new();
    for (lambda, _) in &module.constituents {
        let single = WeightedModule::irreducible(rs, lambda)?;
        per.push(fixed_weight_count_idx(rs, &idx, &single.weight_multiset())?);
    }
    let lhs = fixed as i64 + rs.lie_algebra_dim() as i64 - normalizer as i64;
    let rhs = module.dim() as i64 - 4 * a.len() as i64;
    Ok(StratumCheck {
        holds: lhs == rhs,
        lhs,
        rhs,
        fixed_dim: fixed,
        fixed_per_constituent: per,
        normalizer_dim: normalizer,
    })
}

/// One irreducible constituent of a module of SL2^k, as the list of
/// dimensions on each factor (1 for factors acting trivially).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Constituent {
    pub dims: Vec<u32>,
}

/// Parses tags such as `"1"`, `"2@1"` or `"2@1*3@2"` (tensor product of
/// irreducibles of the listed factors, factors numbered from 1).
pub fn parse_sl2_constituent(k: usize, tag: &str) -> Result<Sl2Constituent> {
    let mut dims = vec![1u32; k];
    let tag = tag.trim();
    if tag == "1" {
        return Ok(Sl2Constituent { dims });
    }
    for factor in tag.split('*') {
        let (d, i) = factor.trim().split_once('@').ok_or_else(|| {
            Error::Malformed(format!("constituent factor '{factor}' lacks '@index'"))
        })?;
        let d: u32 = d
            .parse()
            .map_err(|_| Error::Malformed(format!("bad dimension in '{factor}'")))?;
        let i: usize = i
            .parse()
            .map_err(|_| Error::Malformed(format!("bad factor index in '{factor}'")))?;
        if d == 0 || i == 0 || i > k {
            return Err(Error::Malformed(format!(
                "'{factor}' is out of range for {k} factors"
            )));
        }
        if dims[i - 1] != 1 {
            return Err(Error::Malformed(format!("factor {i} repeated in '{tag}'")));
        }
        dims[i - 1] = d;
    }
    Ok(Sl2Constituent { dims })
}

/// True iff the nontrivial part of the module is `V_1 ⊕ … ⊕ V_k` with each
/// `V_i` two copies of the defining module of the i-th SL2 factor.
pub fn trivial_weyl_certificate(k: usize, tags: &[&str]) -> Result<bool> {
    if k == 0 {
        return Err(Error::Malformed("need at least one SL2 factor".into()));
    }
    let parts = tags
        .iter()
        .map(|t| parse_sl2_constituent(k, t))
        .collect::<Result<Vec<_>>>()?;
    let mut copies = vec![0usize; k];
    for p in &parts {
        let nontrivial: Vec<usize> = (0..k).filter(|&i| p.dims[i] != 1).collect();
        match nontrivial.as_slice() {
            [] => {}
            [i] if p.dims[*i] == 2 => copies[*i] += 1,
            _ => return Ok(false),
        }
    }
    Ok(copies.iter().all(|&c| c == 2))
}

/// Parses `"pi:0,0,1"` (fundamental-weight coefficients) or
/// `"eps:1/2,1/2"` (ε-coordinates).
pub fn parse_weight(rs: &RootSystem, s: &str) -> Result<Weight> {
    let (kind, body) = s
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("weight '{s}' must start with 'pi:' or 'eps:'")))?;
    let items: Vec<&str> = if body.trim().is_empty() {
        Vec::new()
    } else {
        body.split(',').map(str::trim).collect()
    };
    match kind.trim() {
        "pi" => {
            let coeffs = items
                .iter()
                .map(|x| {
                    x.parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad coefficient '{x}'")))
                })
                .collect::<Result<Vec<_>>>()?;
            rs.weight_from_fundamental(&coeffs)
        }
        "eps" => {
            let coords = items
                .iter()
                .map(|x| {
                    x.parse::<Rat>()
                        .map_err(|_| Error::Parse(format!("bad coordinate '{x}'")))
                })
                .collect::<Result<Vec<_>>>()?;
            if coords.len() != rs.ambient_dim() {
                return Err(Error::DimensionMismatch {
                    expected: rs.ambient_dim(),
                    got: coords.len(),
                });
            }
            Ok(Vector(coords))
        }
        other => Err(Error::Parse(format!("unknown weight notation '{other}'"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;
    use proptest::prelude::*;

    fn sys(f: Family, l: usize) -> RootSystem {
        build_root_system(f, l).unwrap()
    }

    fn pi(rs: &RootSystem, c: &[i64]) -> Weight {
        rs.weight_from_fundamental(c).unwrap()
    }

    #[test]
    fn weyl_dims() {
        let b5 = sys(Family::B, 5);
        assert_eq!(weyl_dim(&b5, &Vector::zeros(5)).unwrap(), 1);
        assert_eq!(weyl_dim(&b5, &pi(&b5, &[0, 0, 0, 0, 1])).unwrap(), 32);
        let a5 = sys(Family::A, 5);
        assert_eq!(weyl_dim(&a5, &pi(&a5, &[0, 0, 1, 0, 0])).unwrap(), 20);
        assert!(matches!(
            weyl_dim(&a5, &pi(&a5, &[0, -1, 0, 0, 0])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn freudenthal_examples() {
        let a1 = sys(Family::A, 1);
        let adj = freudenthal_weights(&a1, &pi(&a1, &[2])).unwrap();
        let m: Vec<u64> = adj.weights().values().copied().collect();
        assert_eq!(m, [1, 1, 1]);
        assert_eq!(adj.multiplicity(&Vector::from_ints(&[1, -1])), 1);
        assert_eq!(adj.multiplicity(&Vector::zeros(2)), 1);
        let c2 = sys(Family::C, 2);
        let v = freudenthal_weights(&c2, &pi(&c2, &[0, 1])).unwrap();
        assert_eq!(v.dim(), 5);
        assert_eq!(v.multiplicity(&Vector::zeros(2)), 1);
        assert_eq!(v.multiplicity(&Vector::from_ints(&[1, -1])), 1);
        let b5 = sys(Family::B, 5);
        let spin = freudenthal_weights(&b5, &pi(&b5, &[0, 0, 0, 0, 1])).unwrap();
        assert_eq!(spin, spin_weights(&b5));
        assert_eq!(spin.dim(), 32);
    }

    #[test]
    fn adjoint_matches_freudenthal() {
        for (f, l) in [
            (Family::A, 3),
            (Family::B, 3),
            (Family::C, 3),
            (Family::G, 2),
            (Family::D, 4),
        ] {
            let rs = sys(f, l);
            let hr = -rs.lowest_root();
            assert_eq!(
                freudenthal_weights(&rs, &hr).unwrap(),
                WeightedModule::adjoint(&rs),
                "{f}{l}"
            );
        }
    }

    #[test]
    fn traces() {
        let a1 = sys(Family::A, 1);
        let al = Vector::from_ints(&[1, -1]);
        assert_eq!(
            trace_h2(&a1, &WeightedModule::adjoint(&a1), &al).unwrap(),
            rat(8)
        );
        let c2 = sys(Family::C, 2);
        let long = Vector::from_ints(&[2, 0]);
        assert_eq!(
            trace_h2(&c2, &WeightedModule::adjoint(&c2), &long).unwrap(),
            rat(12)
        );
        let v =
            WeightedModule::from_constituents(&c2, &[(pi(&c2, &[1, 0]), 1), (pi(&c2, &[0, 1]), 2)])
                .unwrap();
        assert_eq!(trace_h2(&c2, &v, &long).unwrap(), rat(10));
        assert!(trace_criterion_holds(&c2, &v, LengthClass::Short).unwrap());
        assert!(!trace_criterion_holds(&c2, &v, LengthClass::Long).unwrap());
        let b5 = sys(Family::B, 5);
        let v = WeightedModule::from_constituents(
            &b5,
            &[
                (pi(&b5, &[0, 0, 0, 0, 1]), 1),
                (pi(&b5, &[1, 0, 0, 0, 0]), 4),
            ],
        )
        .unwrap();
        assert!(!trace_criterion_holds(&b5, &v, LengthClass::Short).unwrap());
    }

    #[test]
    fn stratum_examples() {
        let b5 = sys(Family::B, 5);
        let v = WeightedModule::from_constituents(
            &b5,
            &[
                (pi(&b5, &[0, 0, 0, 0, 1]), 1),
                (pi(&b5, &[1, 0, 0, 0, 0]), 4),
            ],
        )
        .unwrap();
        let a = [
            Vector::from_ints(&[1, -1, 0, 0, 0]),
            Vector::from_ints(&[0, 0, 1, -1, 0]),
        ];
        let c = stratum_check(&b5, &v, &a).unwrap();
        assert_eq!((c.holds, c.lhs, c.rhs), (false, 60, 68));
        assert_eq!(c.fixed_per_constituent, [8, 3]);
        assert_eq!(c.normalizer_dim, 15);
        let a1 = sys(Family::A, 1);
        let v = WeightedModule::from_constituents(&a1, &[(pi(&a1, &[1]), 2)]).unwrap();
        let c = stratum_check(&a1, &v, &[Vector::from_ints(&[1, -1])]).unwrap();
        assert_eq!((c.holds, c.lhs, c.rhs), (true, 0, 0));
        let b6 = sys(Family::B, 6);
        let v = WeightedModule::from_constituents(
            &b6,
            &[
                (pi(&b6, &[0, 0, 0, 0, 0, 1]), 1),
                (pi(&b6, &[1, 0, 0, 0, 0, 0]), 2),
            ],
        )
        .unwrap();
        let a = [
            Vector::from_ints(&[1, -1, 0, 0, 0, 0]),
            Vector::from_ints(&[0, 0, 1, -1, 0, 0]),
            Vector::from_ints(&[0, 0, 0, 0, 1, -1]),
        ];
        assert!(!stratum_check(&b6, &v, &a).unwrap().holds);
    }

    #[test]
    fn certificates() {
        assert!(trivial_weyl_certificate(1, &["2@1", "2@1"]).unwrap());
        assert!(trivial_weyl_certificate(1, &["2@1", "2@1", "1"]).unwrap());
        assert!(!trivial_weyl_certificate(1, &["2@1"]).unwrap());
        assert!(trivial_weyl_certificate(2, &["2@1", "2@1", "2@2", "2@2"]).unwrap());
        assert!(!trivial_weyl_certificate(2, &["2@1*2@2", "2@1", "2@2"]).unwrap());
        assert!(!trivial_weyl_certificate(1, &["3@1", "2@1", "2@1"]).unwrap());
        assert!(trivial_weyl_certificate(1, &["2@3"]).is_err());
        assert!(trivial_weyl_certificate(1, &["x"]).is_err());
    }

    #[test]
    fn weight_parsing() {
        let b3 = sys(Family::B, 3);
        assert_eq!(
            parse_weight(&b3, "pi:0,0,1").unwrap(),
            Vector(vec![ratf(1, 2); 3])
        );
        assert_eq!(
            parse_weight(&b3, "eps:1/2,1/2,1/2").unwrap(),
            Vector(vec![ratf(1, 2); 3])
        );
        assert!(parse_weight(&b3, "pi:1,0").is_err());
        assert!(parse_weight(&b3, "omega:1").is_err());
    }

    proptest! {
        #[test]
        fn freudenthal_agrees_with_weyl(c in proptest::collection::vec(0i64..3, 3), fam in 0usize..4) {
            let (f, l) = [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::D, 3)][fam];
            let rs = sys(f, l);
            let lambda = pi(&rs, &c);
            let m = freudenthal_weights(&rs, &lambda).unwrap();
            prop_assert_eq!(m.dim(), weyl_dim(&rs, &lambda).unwrap());
            for (w, k) in m.weights() {
                for &i in rs.simple_indices() {
                    prop_assert_eq!(m.multiplicity(&rs.reflect_idx(i, w)), *k);
                }
            }
            for i in 0..rs.len() {
                let t = trace_h2_idx(&rs, &m, i);
                prop_assert!(t.is_integer() && !t.is_negative());
            }
        }
    }
}
