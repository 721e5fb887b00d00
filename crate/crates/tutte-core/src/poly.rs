//! Sparse multivariate polynomials over the rationals.
//!
//! All polynomials live in the fixed variable space `(t, x, y, zeta, s)`;
//! exponent tuples are ordered lexicographically over that global order, so
//! two polynomials are equal exactly when their term maps are equal. Zero
//! coefficients are never stored.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::rational::{rat, Rational};

/// Number of variables in the global space.
pub const NUM_VARS: usize = 5;

/// A variable of the global polynomial space, in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    T,
    X,
    Y,
    Zeta,
    S,
}

impl Var {
    pub const ALL: [Var; NUM_VARS] = [Var::T, Var::X, Var::Y, Var::Zeta, Var::S];

    pub fn index(self) -> usize {
        match self {
            Var::T => 0,
            Var::X => 1,
            Var::Y => 2,
            Var::Zeta => 3,
            Var::S => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::X => "x",
            Var::Y => "y",
            Var::Zeta => "zeta",
            Var::S => "s",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

type Expo = [u16; NUM_VARS];

const ZERO_EXPO: Expo = [0; NUM_VARS];

/// A variable assignment for [`MultiPoly::eval`]; variables may be left unset
/// as long as they do not occur in the polynomial being evaluated.
#[derive(Clone, Debug, Default)]
pub struct Assignment {
    values: [Option<Rational>; NUM_VARS],
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, v: Var, value: Rational) -> Self {
        self.values[v.index()] = Some(value);
        self
    }

    pub fn xy(x: Rational, y: Rational) -> Self {
        Self::new().with(Var::X, x).with(Var::Y, y)
    }

    pub fn get(&self, v: Var) -> Option<&Rational> {
        self.values[v.index()].as_ref()
    }
}

/// Sparse polynomial in `(t, x, y, zeta, s)` with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Expo, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(ZERO_EXPO, c);
        p
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, k: u16) -> Self {
        let mut e = ZERO_EXPO;
        e[v.index()] = k;
        let mut p = Self::zero();
        p.add_term(e, rat(1));
        p
    }

    /// Single-term polynomial `c * t^e0 x^e1 y^e2 zeta^e3 s^e4`.
    pub fn monomial(expo: [u16; NUM_VARS], c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(expo, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &Rational)> {
        self.terms.iter()
    }

    /// `Some(c)` when the polynomial is the constant `c` (zero counts).
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(rat(0)),
            1 => self.terms.get(&ZERO_EXPO).cloned(),
            _ => None,
        }
    }

    /// Variables occurring with a nonzero exponent.
    pub fn vars_present(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|v| self.terms.keys().any(|e| e[v.index()] > 0))
            .collect()
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.keys().map(|e| e[v.index()]).max().unwrap_or(0)
    }

    fn add_term(&mut self, expo: Expo, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(expo) {
            alloc::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    slot.insert(sum);
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (*e, a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: usize) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact value at `assignment`; every variable present in the polynomial
    /// must be assigned.
    pub fn eval(&self, assignment: &Assignment) -> Result<Rational, Error> {
        for v in self.vars_present() {
            if assignment.get(v).is_none() {
                return Err(Error::MissingVariable(v.name()));
            }
        }
        let mut total = rat(0);
        for (expo, coeff) in &self.terms {
            let mut term = coeff.clone();
            for v in Var::ALL {
                let k = expo[v.index()];
                if k > 0 {
                    let base = assignment.get(v).expect("checked above");
                    term *= num_traits::pow::pow(base.clone(), k as usize);
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Exact composition: every occurrence of `v` replaced by `q`.
    pub fn substitute(&self, v: Var, q: &MultiPoly) -> MultiPoly {
        let vi = v.index();
        let max_k = self.degree_in(v) as usize;
        let mut q_pows = Vec::with_capacity(max_k + 1);
        q_pows.push(MultiPoly::one());
        for k in 1..=max_k {
            let next = &q_pows[k - 1] * q;
            q_pows.push(next);
        }
        let mut out = MultiPoly::zero();
        for (expo, coeff) in &self.terms {
            let mut rest = *expo;
            let k = rest[vi] as usize;
            rest[vi] = 0;
            let contrib = q_pows[k].mul_monomial(rest, coeff);
            out = &out + &contrib;
        }
        out
    }

    /// Simultaneous substitution; variables not listed stay themselves.
    pub fn substitute_all(&self, subs: &[(Var, MultiPoly)]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (expo, coeff) in &self.terms {
            let mut rest = *expo;
            let mut factor = MultiPoly::one();
            for (v, q) in subs {
                let k = rest[v.index()] as usize;
                rest[v.index()] = 0;
                if k > 0 {
                    factor = &factor * &q.pow(k);
                }
            }
            out = &out + &factor.mul_monomial(rest, coeff);
        }
        out
    }

    /// Coefficient of `v^k` as a polynomial in the remaining variables.
    pub fn coefficient_of(&self, v: Var, k: u16) -> MultiPoly {
        let vi = v.index();
        let mut out = MultiPoly::zero();
        for (expo, coeff) in &self.terms {
            if expo[vi] == k {
                let mut e = *expo;
                e[vi] = 0;
                out.add_term(e, coeff.clone());
            }
        }
        out
    }

    fn mul_monomial(&self, shift: Expo, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        let mut out = MultiPoly::zero();
        for (expo, coeff) in &self.terms {
            let mut e = *expo;
            for i in 0..NUM_VARS {
                e[i] += shift[i];
            }
            out.add_term(e, coeff.clone() * c.clone());
        }
        out
    }

    /// Terms in the display order: `x`+`y` total degree descending, then
    /// `x` degree descending, then the remaining exponents descending.
    fn sorted_terms(&self) -> Vec<(&Expo, &Rational)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|(ea, _), (eb, _)| {
            let key = |e: &Expo| {
                (
                    e[Var::X.index()] + e[Var::Y.index()],
                    e[Var::X.index()],
                    e[Var::T.index()],
                    e[Var::Zeta.index()],
                    e[Var::S.index()],
                )
            };
            key(eb).cmp(&key(ea))
        });
        ts
    }

    /// Display-ordered `(exponents, coefficient)` pairs, for serialization.
    pub fn ordered_terms(&self) -> Vec<([u16; NUM_VARS], Rational)> {
        self.sorted_terms()
            .into_iter()
            .map(|(e, c)| (*e, c.clone()))
            .collect()
    }
}

fn monomial_string(expo: &Expo) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    for v in Var::ALL {
        let k = expo[v.index()];
        if k == 1 {
            if !s.is_empty() {
                s.push('*');
            }
            s.push_str(v.name());
        } else if k > 1 {
            if !s.is_empty() {
                s.push('*');
            }
            let _ = write!(s, "{}^{}", v.name(), k);
        }
    }
    s
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (expo, coeff)) in self.sorted_terms().into_iter().enumerate() {
            let mono = monomial_string(expo);
            let abs = coeff.abs();
            if i == 0 {
                if coeff.is_negative() {
                    f.write_str("-")?;
                }
            } else if coeff.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = *ea;
                for i in 0..NUM_VARS {
                    e[i] += eb[i];
                }
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl Zero for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
}

impl One for MultiPoly {
    fn one() -> Self {
        MultiPoly::one()
    }
    fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }
}

/// `x - 1` and friends, used all over the splitting formulas.
pub fn var_minus_one(v: Var) -> MultiPoly {
    &MultiPoly::var(v) - &MultiPoly::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn x() -> MultiPoly {
        MultiPoly::var(Var::X)
    }
    fn y() -> MultiPoly {
        MultiPoly::var(Var::Y)
    }
    fn t() -> MultiPoly {
        MultiPoly::var(Var::T)
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x() + &MultiPoly::one()) * &(&x() - &MultiPoly::one());
        let expected = &MultiPoly::var_pow(Var::X, 2) - &MultiPoly::one();
        assert_eq!(p, expected);
    }

    #[test]
    fn additive_identity() {
        let p = &(&x() * &y()) + &MultiPoly::int(3);
        assert_eq!(&p + &MultiPoly::zero(), p);
    }

    #[test]
    fn monomial_product() {
        let ty = &t() * &y();
        let sq = &ty * &ty;
        assert_eq!(
            sq,
            MultiPoly::monomial([2, 0, 2, 0, 0], rat(1)),
            "t^2*y^2 expected"
        );
    }

    #[test]
    fn eval_covers_spec_points() {
        // x^2 + x + y at (2, 3) = 9
        let p = &(&MultiPoly::var_pow(Var::X, 2) + &x()) + &y();
        assert_eq!(p.eval(&Assignment::xy(rat(2), rat(3))).unwrap(), rat(9));
        // x^3 + x^2 + x + y at (2, 3) = 17
        let q = &(&MultiPoly::var_pow(Var::X, 3) + &MultiPoly::var_pow(Var::X, 2)) + &(&x() + &y());
        assert_eq!(q.eval(&Assignment::xy(rat(2), rat(3))).unwrap(), rat(17));
        // all-zero assignment picks out the constant term
        let r = &q + &MultiPoly::int(5);
        assert_eq!(r.eval(&Assignment::xy(rat(0), rat(0))).unwrap(), rat(5));
    }

    #[test]
    fn eval_missing_variable() {
        let p = &x() + &y();
        let a = Assignment::new().with(Var::X, rat(1));
        assert_eq!(p.eval(&a), Err(Error::MissingVariable("y")));
    }

    #[test]
    fn substitution() {
        // t := s*zeta in t^2*zeta gives s^2*zeta^3
        let p = MultiPoly::monomial([2, 0, 0, 1, 0], rat(1));
        let sz = &MultiPoly::var(Var::S) * &MultiPoly::var(Var::Zeta);
        assert_eq!(
            p.substitute(Var::T, &sz),
            MultiPoly::monomial([0, 0, 0, 3, 2], rat(1))
        );
        // y := 1 in x^2 + x + y
        let q = &(&MultiPoly::var_pow(Var::X, 2) + &x()) + &y();
        let expected = &(&MultiPoly::var_pow(Var::X, 2) + &x()) + &MultiPoly::one();
        assert_eq!(q.substitute(Var::Y, &MultiPoly::one()), expected);
    }

    #[test]
    fn substitute_eval_commute() {
        // eval(substitute(p, v, q), a) = eval(p, a with v := eval(q, a))
        let p = &(&(&t() * &x()) + &MultiPoly::var_pow(Var::T, 2)) + &y();
        let q = &(&x() * &y()) - &MultiPoly::int(2);
        let a = Assignment::xy(ratio(3, 2), rat(-2));
        let qa = q.eval(&a).unwrap();
        let lhs = p.substitute(Var::T, &q).eval(&a).unwrap();
        let rhs = p
            .eval(&a.clone().with(Var::T, qa))
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn coefficient_extraction() {
        // coeff of zeta^2 in s^2*zeta^2 + s*zeta^3 is s^2
        let p = &MultiPoly::monomial([0, 0, 0, 2, 2], rat(1))
            + &MultiPoly::monomial([0, 0, 0, 3, 1], rat(1));
        assert_eq!(
            p.coefficient_of(Var::Zeta, 2),
            MultiPoly::var_pow(Var::S, 2)
        );
        // coeff of zeta^5 in a zeta-degree-3 polynomial is 0
        assert!(p.coefficient_of(Var::Zeta, 5).is_zero());
    }

    #[test]
    fn display_order_matches_interface() {
        let tutte_c4 = &(&MultiPoly::var_pow(Var::X, 3) + &MultiPoly::var_pow(Var::X, 2))
            + &(&x() + &y());
        assert_eq!(tutte_c4.to_string(), "x^3 + x^2 + x + y");
        // Negami polynomial of the triangle
        let f = &(&MultiPoly::monomial([1, 3, 0, 0, 0], rat(1))
            + &MultiPoly::monomial([1, 2, 1, 0, 0], rat(3)))
            + &(&MultiPoly::monomial([2, 1, 2, 0, 0], rat(3))
                + &MultiPoly::monomial([3, 0, 3, 0, 0], rat(1)));
        assert_eq!(
            f.to_string(),
            "t*x^3 + 3*t*x^2*y + 3*t^2*x*y^2 + t^3*y^3"
        );
        let signs = &(&-&x()) + &MultiPoly::constant(ratio(-1, 2));
        assert_eq!(signs.to_string(), "-x - 1/2");
        assert_eq!(MultiPoly::zero().to_string(), "0");
    }
}
