//! Laurent polynomials in four variables with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::linalg::{q, Q};

pub const NVARS: usize = 4;
pub type Exponent = [i32; NVARS];

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Laurent(BTreeMap<Exponent, Q>);

impl Laurent {
    pub fn zero() -> Self {
        Laurent(BTreeMap::new())
    }

    pub fn constant(c: Q) -> Self {
        Laurent::term(c, [0; NVARS])
    }

    pub fn term(c: Q, e: Exponent) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(e, c);
        }
        Laurent(m)
    }

    /// The variable `x_{i+1}`.
    pub fn var(i: usize) -> Self {
        let mut e = [0; NVARS];
        e[i] = 1;
        Laurent::term(Q::one(), e)
    }

    pub fn from_terms(terms: &[(i64, Exponent)]) -> Self {
        terms.iter().fold(Laurent::zero(), |acc, &(c, e)| {
            acc.add(&Laurent::term(q(c), e))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Q)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn insert(&mut self, e: Exponent, c: &Q) {
        let slot = self.0.entry(e).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&e);
        }
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in &other.0 {
            out.insert(*e, c);
        }
        out
    }

    pub fn sub(&self, other: &Laurent) -> Laurent {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Laurent {
        self.scale(&q(-1))
    }

    pub fn scale(&self, c: &Q) -> Laurent {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent(self.0.iter().map(|(e, x)| (*e, x * c)).collect())
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (ea, a) in &self.0 {
            for (eb, b) in &other.0 {
                let mut e = *ea;
                for i in 0..NVARS {
                    e[i] += eb[i];
                }
                out.insert(e, &(a * b));
            }
        }
        out
    }

    /// `∂/∂x_{i+1}`.
    pub fn derivative(&self, i: usize) -> Laurent {
        let mut out = Laurent::zero();
        for (e, c) in &self.0 {
            if e[i] != 0 {
                let mut f = *e;
                f[i] -= 1;
                out.insert(f, &(c * q(e[i] as i64)));
            }
        }
        out
    }

    pub fn eval(&self, x: &[Q]) -> Option<Q> {
        let mut total = Q::zero();
        for (e, c) in &self.0 {
            let mut t = c.clone();
            for i in 0..NVARS {
                if e[i] < 0 && x[i].is_zero() {
                    return None;
                }
                t *= x[i].pow(e[i]);
            }
            total += t;
        }
        Some(total)
    }

    pub fn degree_in(&self, i: usize) -> i32 {
        self.0.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    /// Smallest exponent of each variable.
    pub fn min_exponents(&self) -> Exponent {
        let mut m = [0; NVARS];
        for e in self.0.keys() {
            for i in 0..NVARS {
                m[i] = m[i].min(e[i]);
            }
        }
        m
    }

    fn leading(&self) -> Option<(&Exponent, &Q)> {
        self.0.iter().next_back()
    }

    /// A square root, if this is the square of a Laurent polynomial.
    pub fn sqrt(&self) -> Option<Laurent> {
        if self.is_zero() {
            return Some(Laurent::zero());
        }
        // shift by an even monomial so that all exponents are nonnegative
        let shift = self
            .min_exponents()
            .map(|m| if m % 2 == 0 { m } else { m - 1 });
        let poly = self.mul(&Laurent::term(Q::one(), shift.map(|m| -m)));
        let root = poly_sqrt(&poly)?;
        Some(root.mul(&Laurent::term(Q::one(), shift.map(|m| m / 2))))
    }
}

fn rational_sqrt(c: &Q) -> Option<Q> {
    if c.is_negative() {
        return None;
    }
    let (n, d) = (c.numer(), c.denom());
    let (rn, rd): (BigInt, BigInt) = (n.sqrt(), d.sqrt());
    (&rn * &rn == *n && &rd * &rd == *d).then(|| Q::new(rn, rd))
}

/// Square root of a polynomial by peeling off leading terms in lex order.
fn poly_sqrt(p: &Laurent) -> Option<Laurent> {
    let (e0, c0) = p.leading()?;
    if e0.iter().any(|x| x % 2 != 0) {
        return None;
    }
    let mut root = Laurent::term(rational_sqrt(c0)?, e0.map(|x| x / 2));
    let (lead_e, lead_c) = (e0.map(|x| x / 2), rational_sqrt(c0)?);
    let mut rest = p.sub(&root.mul(&root));
    let mut last = lead_e;
    while let Some((e, c)) = rest.leading() {
        let mut t = *e;
        for i in 0..NVARS {
            t[i] -= lead_e[i];
            if t[i] < 0 {
                return None;
            }
        }
        if t >= last {
            return None;
        }
        last = t;
        let tc = c / (q(2) * &lead_c);
        root = root.add(&Laurent::term(tc, t));
        rest = p.sub(&root.mul(&root));
    }
    Some(root)
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.0.iter().rev() {
            let mut factors: Vec<String> = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    k => factors.push(format!("x{}^{k}", i + 1)),
                }
            }
            let neg = c.is_negative();
            let mag = c.abs();
            let sign = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let body = if factors.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                factors.join("*")
            } else {
                format!("{mag}*{}", factors.join("*"))
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn arithmetic_and_display() {
        let x1 = Laurent::var(0);
        let x2 = Laurent::var(1);
        let p = x1
            .mul(&x2)
            .scale(&q(2))
            .sub(&Laurent::term(q(1), [-1, 0, 1, 0]));
        assert_eq!(p.to_string(), "2*x1*x2 - x1^-1*x3");
        assert_eq!(p.derivative(0).to_string(), "2*x2 + x1^-2*x3");
        assert_eq!(p.eval(&[q(1), q(2), q(3), q(0)]), Some(q(1)));
        assert_eq!(p.eval(&[q(0), q(2), q(3), q(0)]), None);
    }

    #[test]
    fn square_roots() {
        let s = Laurent::from_terms(&[(1, [1, 1, 0, 0])]);
        assert_eq!(
            s.mul(&s).sqrt().unwrap().mul(&s.mul(&s).sqrt().unwrap()),
            s.mul(&s)
        );
        let c = Laurent::from_terms(&[(1, [2, 2, 0, 0]), (-1, [0, 0, 0, 0])]);
        assert!(c.sqrt().is_none());
        assert!(Laurent::from_terms(&[(2, [2, 0, 0, 0])]).sqrt().is_none());
        assert!(Laurent::from_terms(&[(1, [1, 0, 0, 0])]).sqrt().is_none());
        let inv = Laurent::from_terms(&[(4, [-2, 0, 0, 0])]);
        assert_eq!(inv.sqrt().unwrap().mul(&inv.sqrt().unwrap()), inv);
    }

    fn arb_laurent() -> impl Strategy<Value = Laurent> {
        proptest::collection::vec((-3i64..=3, proptest::array::uniform4(-2i32..=2)), 1..4)
            .prop_map(|t| Laurent::from_terms(&t))
    }

    proptest! {
        #[test]
        fn squares_have_roots(p in arb_laurent()) {
            let sq = p.mul(&p);
            let r = sq.sqrt().expect("square");
            prop_assert_eq!(r.mul(&r), sq);
            prop_assert!(r == p || r == p.neg());
        }

        #[test]
        fn product_rule(a in arb_laurent(), b in arb_laurent(), i in 0usize..4) {
            let lhs = a.mul(&b).derivative(i);
            let rhs = a.derivative(i).mul(&b).add(&a.mul(&b.derivative(i)));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
