//! Sparse multivariate polynomials over an exact scalar field.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::monomial::{Monomial, MonomialOrder};
use crate::poly::scalar::{Scalar, ScalarKind};

/// A multivariate polynomial: an ordered variable list, a scalar kind and
/// a term map with no stored zero coefficients. The zero polynomial is the
/// empty map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    kind: ScalarKind,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero(vars: Vec<String>, kind: ScalarKind) -> Self {
        MultiPoly {
            vars,
            kind,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Vec<String>, c: Scalar) -> Self {
        let mut p = MultiPoly::zero(vars, c.kind());
        if !c.is_zero() {
            p.terms.insert(Monomial::one(p.vars.len()), c);
        }
        p
    }

    pub fn one(vars: Vec<String>, kind: ScalarKind) -> Self {
        let c = Scalar::one(kind);
        MultiPoly::constant(vars, c)
    }

    pub fn var(vars: Vec<String>, kind: ScalarKind, j: usize) -> Result<Self> {
        if j >= vars.len() {
            return Err(Error::IndexOutOfRange(j));
        }
        let n = vars.len();
        let mut p = MultiPoly::zero(vars, kind);
        p.terms.insert(Monomial::var(n, j), Scalar::one(kind));
        Ok(p)
    }

    /// Builds from raw terms, merging duplicates and dropping zeros.
    pub fn from_terms(
        vars: Vec<String>,
        kind: ScalarKind,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Self {
        let mut p = MultiPoly::zero(vars, kind);
        for (m, c) in terms {
            p.add_term(&m, &c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(m, c)| m.is_one() && c.is_one())
    }

    /// True when the polynomial is a nonzero constant.
    pub fn is_unit_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().all(Monomial::is_one)
    }

    /// The single term `(monomial, coefficient)` when there is exactly one.
    pub fn as_single_term(&self) -> Option<(&Monomial, &Scalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.kind))
    }

    fn add_term(&mut self, m: &Monomial, c: &Scalar) {
        debug_assert_eq!(m.len(), self.vars.len());
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(m) {
            Some(existing) => {
                let sum = existing.add(c);
                if sum.is_zero() {
                    self.terms.remove(m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m.clone(), c.clone());
            }
        }
    }

    fn check_compatible(&self, other: &MultiPoly) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VarMismatch);
        }
        if self.kind != other.kind {
            return Err(Error::ScalarKindMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_compatible(other)?;
        let mut out = MultiPoly::zero(self.vars.clone(), self.kind);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(&ma.mul(mb), &ca.mul(cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars.clone(), self.kind);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.mul(c);
        }
        out
    }

    /// Adds `c * m * g` in place; the workhorse of division.
    pub fn add_scaled(&mut self, g: &MultiPoly, m: &Monomial, c: &Scalar) {
        for (mg, cg) in g.terms.clone() {
            self.add_term(&mg.mul(m), &cg.mul(c));
        }
    }

    /// Formal partial derivative in variable `j`; exponent factors reduce
    /// mod p over a prime field.
    pub fn partial_derivative(&self, j: usize) -> Result<MultiPoly> {
        if j >= self.vars.len() {
            return Err(Error::IndexOutOfRange(j));
        }
        let mut out = MultiPoly::zero(self.vars.clone(), self.kind);
        for (m, c) in &self.terms {
            let e = m.0[j];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.0[j] = e - 1;
            out.add_term(&dm, &c.mul_int(e as i64));
        }
        Ok(out)
    }

    /// Leading term under `order`, if nonzero.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Scalar)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    /// Scales so the leading coefficient under `order` is 1.
    pub fn monic(&self, order: &MonomialOrder) -> MultiPoly {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.inv().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Substitutes into a new variable list: variable `j` of `self` maps to
    /// variable `map[j]` of the target. Fails if a dropped variable occurs.
    pub fn rename_vars(&self, new_vars: Vec<String>, map: &[Option<usize>]) -> Result<MultiPoly> {
        let n_new = new_vars.len();
        let mut out = MultiPoly::zero(new_vars, self.kind);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; n_new];
            for (j, &exp) in m.0.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                match map[j] {
                    Some(t) => e[t] += exp,
                    None => return Err(Error::IndexOutOfRange(j)),
                }
            }
            out.add_term(&Monomial(e), c);
        }
        Ok(out)
    }

    /// Renders terms in descending `order`: coefficients as `num` or
    /// `num/den`, `^` powers, explicit `*`.
    pub fn to_string_with_order(&self, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut monos: Vec<&Monomial> = self.terms.keys().collect();
        monos.sort_by(|a, b| order.cmp(b, a));
        let mut out = String::new();
        for (idx, m) in monos.iter().enumerate() {
            let c = &self.terms[*m];
            let neg = c.is_display_negative();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.display_abs();
            let mono_str = render_monomial(m, &self.vars);
            match (mag.is_one(), mono_str.is_empty()) {
                (true, true) => out.push('1'),
                (true, false) => out.push_str(&mono_str),
                (false, true) => out.push_str(&mag.to_string()),
                (false, false) => {
                    out.push_str(&mag.to_string());
                    out.push('*');
                    out.push_str(&mono_str);
                }
            }
        }
        out
    }

    /// Embeds an integer constant.
    pub fn from_int(vars: Vec<String>, kind: ScalarKind, n: i64) -> Self {
        MultiPoly::constant(vars, Scalar::from_int(kind, n))
    }

    /// Embeds a big integer constant.
    pub fn from_bigint(vars: Vec<String>, kind: ScalarKind, n: BigInt) -> Self {
        MultiPoly::constant(vars, Scalar::from_bigint(kind, n))
    }

    /// `self^k` by repeated multiplication.
    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut out = MultiPoly::one(self.vars.clone(), self.kind);
        for _ in 0..k {
            out = out.mul(self).expect("same ring");
        }
        out
    }
}

fn render_monomial(m: &Monomial, vars: &[String]) -> String {
    let mut parts = Vec::new();
    for (j, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars[j].clone()),
            _ => parts.push(format!("{}^{}", vars[j], e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for MultiPoly {
    /// Default rendering uses grevlex with input variable priority.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            self.to_string_with_order(&MonomialOrder::grevlex(self.vars.len()))
        )
    }
}

/// Binary arithmetic dispatch used by the CLI and tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
}

/// Exact ring arithmetic on two compatible polynomials.
pub fn poly_arith(f: &MultiPoly, g: &MultiPoly, kind: ArithKind) -> Result<MultiPoly> {
    match kind {
        ArithKind::Add => f.add(g),
        ArithKind::Sub => f.sub(g),
        ArithKind::Mul => f.mul(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars2() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    fn q(n: i64) -> Scalar {
        Scalar::from_int(ScalarKind::Rat, n)
    }

    /// x + y
    fn x_plus_y() -> MultiPoly {
        MultiPoly::from_terms(
            vars2(),
            ScalarKind::Rat,
            [(mono(&[1, 0]), q(1)), (mono(&[0, 1]), q(1))],
        )
    }

    /// y^2 - x^3
    fn cusp() -> MultiPoly {
        MultiPoly::from_terms(
            vars2(),
            ScalarKind::Rat,
            [(mono(&[0, 2]), q(1)), (mono(&[3, 0]), q(-1))],
        )
    }

    #[test]
    fn binomial_square() {
        let f = x_plus_y();
        let sq = f.mul(&f).unwrap();
        let expected = MultiPoly::from_terms(
            vars2(),
            ScalarKind::Rat,
            [
                (mono(&[2, 0]), q(1)),
                (mono(&[1, 1]), q(2)),
                (mono(&[0, 2]), q(1)),
            ],
        );
        assert_eq!(sq, expected);
    }

    #[test]
    fn additive_identity() {
        let f = cusp();
        let z = MultiPoly::zero(vars2(), ScalarKind::Rat);
        assert_eq!(f.add(&z).unwrap(), f);
    }

    #[test]
    fn difference_of_squares() {
        // (y^2 - x^3)(y^2 + x^3) = y^4 - x^6, against a schoolbook oracle
        let f = cusp();
        let g = MultiPoly::from_terms(
            vars2(),
            ScalarKind::Rat,
            [(mono(&[0, 2]), q(1)), (mono(&[3, 0]), q(1))],
        );
        let prod = f.mul(&g).unwrap();
        let expected = MultiPoly::from_terms(
            vars2(),
            ScalarKind::Rat,
            [(mono(&[0, 4]), q(1)), (mono(&[6, 0]), q(-1))],
        );
        assert_eq!(prod, expected);
        assert_eq!(prod, schoolbook_mul(&f, &g));
    }

    fn schoolbook_mul(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
        // independent route: expand over term lists, then normalize once
        let mut raw: Vec<(Monomial, Scalar)> = Vec::new();
        for (ma, ca) in f.terms() {
            for (mb, cb) in g.terms() {
                raw.push((ma.mul(mb), ca.mul(cb)));
            }
        }
        MultiPoly::from_terms(f.vars().to_vec(), f.kind(), raw)
    }

    #[test]
    fn mismatched_inputs_error() {
        let f = cusp();
        let g = MultiPoly::one(vec!["x".into()], ScalarKind::Rat);
        assert_eq!(f.add(&g), Err(Error::VarMismatch));
        let h = MultiPoly::one(vars2(), ScalarKind::Fp(5));
        assert_eq!(f.add(&h), Err(Error::ScalarKindMismatch));
    }

    #[test]
    fn partial_derivatives_of_cusp() {
        let f = cusp();
        let fx = f.partial_derivative(0).unwrap();
        let fy = f.partial_derivative(1).unwrap();
        assert_eq!(
            fx,
            MultiPoly::from_terms(vars2(), ScalarKind::Rat, [(mono(&[2, 0]), q(-3))])
        );
        assert_eq!(
            fy,
            MultiPoly::from_terms(vars2(), ScalarKind::Rat, [(mono(&[0, 1]), q(2))])
        );
        assert_eq!(f.partial_derivative(2), Err(Error::IndexOutOfRange(2)));
    }

    #[test]
    fn derivative_vanishes_in_char_p() {
        // d/dx x^5 = 0 over F_5
        let k = ScalarKind::Fp(5);
        let f = MultiPoly::from_terms(
            vec!["x".into()],
            k,
            [(mono(&[5]), Scalar::one(k))],
        );
        assert!(f.partial_derivative(0).unwrap().is_zero());
    }

    #[test]
    fn display_canonical_form() {
        let f = cusp();
        // grevlex: x^3 (degree 3) ranks above y^2
        assert_eq!(f.to_string(), "-x^3 + y^2");
        let g = MultiPoly::from_terms(
            vars2(),
            ScalarKind::Rat,
            [
                (
                    mono(&[1, 1]),
                    Scalar::from_fraction(ScalarKind::Rat, BigInt::from(-1), BigInt::from(2))
                        .unwrap(),
                ),
                (mono(&[0, 0]), q(3)),
            ],
        );
        assert_eq!(g.to_string(), "-1/2*x*y + 3");
        assert_eq!(MultiPoly::zero(vars2(), ScalarKind::Rat).to_string(), "0");
    }
}
