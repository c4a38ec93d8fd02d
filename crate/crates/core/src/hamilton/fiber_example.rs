//! A four-dimensional symplectic variety with a Hamiltonian C*-action whose
//! moment map has a reducible zero fiber and irreducible generic fibers.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::laurent::{Laurent, NVARS};
use crate::error::{Error, Result};
use crate::linalg::{q, solve, Q};
use crate::report::Row;

type Form = [[Laurent; NVARS]; NVARS];

#[derive(Debug, Clone)]
pub struct ReducibleFiberExample {
    /// The one-form `α = (x1 x2² − x3²/x1) dx1 + x4 dx3`.
    pub alpha: [Laurent; NVARS],
    /// `ω = −dα`, with `ω_ij = ∂_j α_i − ∂_i α_j`.
    pub omega: Form,
    /// Generating vector field `x1 ∂1 − x2 ∂2` of the action `t·x = (t x1, x2/t, x3, x4)`.
    pub xi: [Laurent; NVARS],
    /// Weights of the action on the coordinates.
    pub weights: [i32; NVARS],
    pub mu: Laurent,
}

/// Number of irreducible components of one fiber and its factors.
#[derive(Debug, Clone, PartialEq)]
pub struct Fiber {
    pub level: Q,
    pub factors: Vec<Laurent>,
    pub product_verified: bool,
}

impl Fiber {
    pub fn components(&self) -> usize {
        self.factors.len()
    }
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    if n == 0 {
        return vec![(Vec::new(), false)];
    }
    let mut out = Vec::new();
    for (p, odd) in permutations(n - 1) {
        for pos in 0..n {
            let mut v = p.clone();
            v.insert(pos, n - 1);
            // inserting at pos moves the new element past n-1-pos others
            out.push((v, odd ^ ((n - 1 - pos) % 2 == 1)));
        }
    }
    out
}

impl Default for ReducibleFiberExample {
    fn default() -> Self {
        Self::new()
    }
}

impl ReducibleFiberExample {
    pub fn new() -> Self {
        let alpha = [
            Laurent::from_terms(&[(1, [1, 2, 0, 0]), (-1, [-1, 0, 2, 0])]),
            Laurent::zero(),
            Laurent::from_terms(&[(1, [0, 0, 0, 1])]),
            Laurent::zero(),
        ];
        let omega: Form = std::array::from_fn(|i| {
            std::array::from_fn(|j| alpha[i].derivative(j).sub(&alpha[j].derivative(i)))
        });
        let xi = [
            Laurent::var(0),
            Laurent::var(1).neg(),
            Laurent::zero(),
            Laurent::zero(),
        ];
        let mu = Laurent::from_terms(&[(1, [2, 2, 0, 0]), (-1, [0, 0, 2, 0])]);
        ReducibleFiberExample {
            alpha,
            omega,
            xi,
            weights: [1, -1, 0, 0],
            mu,
        }
    }

    pub fn pfaffian(&self) -> Laurent {
        let w = &self.omega;
        w[0][1]
            .mul(&w[2][3])
            .sub(&w[0][2].mul(&w[1][3]))
            .add(&w[0][3].mul(&w[1][2]))
    }

    pub fn determinant(&self) -> Laurent {
        permutations(NVARS)
            .into_iter()
            .fold(Laurent::zero(), |acc, (p, odd)| {
                let term =
                    (0..NVARS).fold(Laurent::constant(q(1)), |t, i| t.mul(&self.omega[i][p[i]]));
                if odd {
                    acc.sub(&term)
                } else {
                    acc.add(&term)
                }
            })
    }

    /// `dω = 0`.
    pub fn is_closed(&self) -> bool {
        let w = &self.omega;
        (0..NVARS).all(|i| {
            (0..NVARS).all(|j| {
                (0..NVARS).all(|k| {
                    w[j][k]
                        .derivative(i)
                        .add(&w[k][i].derivative(j))
                        .add(&w[i][j].derivative(k))
                        .is_zero()
                })
            })
        })
    }

    /// `ι_ξ ω = dμ`.
    pub fn is_hamiltonian(&self) -> bool {
        (0..NVARS).all(|j| {
            let contraction = (0..NVARS).fold(Laurent::zero(), |acc, i| {
                acc.add(&self.xi[i].mul(&self.omega[i][j]))
            });
            contraction == self.mu.derivative(j)
        })
    }

    /// `μ = α(ξ)`.
    pub fn moment_is_contraction(&self) -> bool {
        let a_xi = (0..NVARS).fold(Laurent::zero(), |acc, i| {
            acc.add(&self.alpha[i].mul(&self.xi[i]))
        });
        a_xi == self.mu
    }

    /// The Lie derivative of `α` along the linear field `ξ` vanishes.
    pub fn alpha_invariant(&self) -> bool {
        (0..NVARS).all(|j| {
            let transport = (0..NVARS).fold(Laurent::zero(), |acc, i| {
                acc.add(&self.xi[i].mul(&self.alpha[j].derivative(i)))
            });
            transport
                .add(&self.alpha[j].scale(&q(self.weights[j] as i64)))
                .is_zero()
        })
    }

    /// Factors `μ − a`, which is `c − x3²` with `c` free of `x3`; it splits
    /// exactly when `c` is a square.
    pub fn fiber(&self, level: &Q) -> Result<Fiber> {
        let g = self.mu.sub(&Laurent::constant(level.clone()));
        let x3 = Laurent::var(2);
        let x3sq = x3.mul(&x3);
        let c = g.add(&x3sq);
        if c.terms().any(|(e, _)| e[2] != 0) {
            return Err(Error::Malformed("fiber is not of the form c - x3^2".into()));
        }
        let Some(s) = c.sqrt() else {
            return Ok(Fiber {
                level: level.clone(),
                factors: vec![g.neg()],
                product_verified: true,
            });
        };
        let (f1, f2) = (x3.sub(&s), x3.add(&s));
        let product_verified = f1.mul(&f2).neg() == g;
        let factors = if s.is_zero() { vec![f1] } else { vec![f1, f2] };
        Ok(Fiber {
            level: level.clone(),
            factors,
            product_verified,
        })
    }

    /// At random integer points off `x1 x2 = 0`: `det ω = 4 x1² x2²` and the
    /// unique solution of `ω^T X = ∇μ` is `ξ`.
    pub fn sample_check(&self, samples: usize, seed: u64) -> bool {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut done = 0;
        while done < samples {
            let x: Vec<Q> = (0..NVARS).map(|_| q(rng.gen_range(-10..=10))).collect();
            if x[0] == q(0) || x[1] == q(0) {
                continue;
            }
            done += 1;
            let eval = |p: &Laurent| p.eval(&x).expect("x1 is nonzero");
            let wt: Vec<Vec<Q>> = (0..NVARS)
                .map(|j| (0..NVARS).map(|i| eval(&self.omega[i][j])).collect())
                .collect();
            let expected_det = q(4) * &x[0] * &x[0] * &x[1] * &x[1];
            if crate::linalg::determinant(&wt) != expected_det {
                return false;
            }
            let grad: Vec<Q> = (0..NVARS).map(|j| eval(&self.mu.derivative(j))).collect();
            let xi: Vec<Q> = self.xi.iter().map(eval).collect();
            if solve(&wt, &grad) != Some(xi) {
                return false;
            }
        }
        true
    }
}

fn omega_entries(ex: &ReducibleFiberExample) -> Vec<String> {
    let mut out = Vec::new();
    for i in 0..NVARS {
        for j in i + 1..NVARS {
            if !ex.omega[i][j].is_zero() {
                out.push(format!("w{}{} = {}", i + 1, j + 1, ex.omega[i][j]));
            }
        }
    }
    out
}

/// Symbolic and sampled checks, then the zero fiber and a generic fiber.
pub fn knop_example_suite(samples: usize, seed: u64) -> Result<Vec<Row>> {
    let ex = ReducibleFiberExample::new();
    let pf = ex.pfaffian();
    let det = ex.determinant();
    let pf_expected = Laurent::from_terms(&[(2, [1, 1, 0, 0])]);
    let mut rows = vec![
        Row::new(
            "symplectic form",
            ex.is_closed() && pf == pf_expected && det == pf.mul(&pf),
        )
        .with("entries", omega_entries(&ex))
        .with("pfaffian", pf.to_string())
        .with("determinant", det.to_string())
        .with("closed", ex.is_closed()),
        Row::new(
            "moment map",
            ex.is_hamiltonian() && ex.moment_is_contraction() && ex.alpha_invariant(),
        )
        .with("mu", ex.mu.to_string())
        .with("hamiltonian", ex.is_hamiltonian())
        .with("equals_alpha_of_xi", ex.moment_is_contraction())
        .with("alpha_invariant", ex.alpha_invariant()),
        Row::new("sampled points", ex.sample_check(samples, seed)).with("samples", samples),
    ];
    for (level, expected) in [(q(0), 2usize), (q(1), 1)] {
        let f = ex.fiber(&level)?;
        rows.push(
            Row::new(
                match f.components() {
                    1 => format!("1 component at a={level}"),
                    n => format!("{n} components at a={level}"),
                },
                f.product_verified && f.components() == expected,
            )
            .with(
                "factors",
                f.factors.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            )
            .with("product_verified", f.product_verified),
        );
    }
    Ok(rows)
}
