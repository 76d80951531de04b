//! Truncated formal power/Laurent series with polynomial coefficients.
//!
//! The formal variable is always a *square* (`τ²`, `z²` or `t²`), so the
//! integer key `k` of a coefficient stands for the power `v^{2k}`. Principal
//! parts are finite; every series carries an explicit truncation order and
//! arithmetic truncates consistently. Asking for a coefficient beyond the
//! order is an error, never a silent approximation.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rat::{binomial_alpha, Rat};
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Which squared formal symbol the series is in (display only; arithmetic
/// refuses to mix them).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeriesVar {
    Tau2,
    Z2,
    T2,
}

impl fmt::Display for SeriesVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesVar::Tau2 => write!(f, "tau^2"),
            SeriesVar::Z2 => write!(f, "z^2"),
            SeriesVar::T2 => write!(f, "t^2"),
        }
    }
}

/// Truncated Laurent series: tracked coefficients for all powers `<= order`,
/// exact; everything above the order is unknown.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    pub var: SeriesVar,
    coeffs: BTreeMap<i64, Poly>,
    pub order: i64,
}

impl TruncSeries {
    pub fn zero(var: SeriesVar, order: i64) -> Self {
        TruncSeries {
            var,
            coeffs: BTreeMap::new(),
            order,
        }
    }

    pub fn one(var: SeriesVar, order: i64) -> Self {
        let mut s = Self::zero(var, order);
        s.set(0, Poly::one());
        s
    }

    pub fn monomial(var: SeriesVar, power: i64, coeff: Poly, order: i64) -> Self {
        let mut s = Self::zero(var, order);
        s.set(power, coeff);
        s
    }

    pub fn set(&mut self, power: i64, coeff: Poly) {
        if power > self.order {
            return;
        }
        if coeff.is_zero() {
            self.coeffs.remove(&power);
        } else {
            self.coeffs.insert(power, coeff);
        }
    }

    pub fn add_to(&mut self, power: i64, coeff: &Poly) {
        if power > self.order || coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(power).or_insert_with(Poly::zero);
        entry.add_assign(coeff);
        if entry.is_zero() {
            self.coeffs.remove(&power);
        }
    }

    /// Exact coefficient of power `k`; an error if `k` exceeds the order.
    pub fn coeff(&self, k: i64) -> Result<Poly> {
        if k > self.order {
            return Err(Error::InsufficientOrder {
                needed: k,
                have: self.order,
            });
        }
        Ok(self.coeffs.get(&k).cloned().unwrap_or_else(Poly::zero))
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&i64, &Poly)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest stored power, if any.
    pub fn min_power(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn truncate(mut self, order: i64) -> Self {
        self.coeffs.retain(|k, _| *k <= order);
        self.order = order.min(self.order);
        self
    }

    fn assert_same_var(&self, other: &TruncSeries) {
        assert!(
            self.var == other.var,
            "series arithmetic across different formal variables"
        );
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        self.assert_same_var(other);
        let order = self.order.min(other.order);
        let mut out = TruncSeries::zero(self.var, order);
        for (k, c) in &self.coeffs {
            out.add_to(*k, c);
        }
        for (k, c) in &other.coeffs {
            out.add_to(*k, c);
        }
        out
    }

    pub fn sub(&self, other: &TruncSeries) -> TruncSeries {
        self.add(&other.scale_poly(&Poly::one().neg()))
    }

    pub fn scale(&self, s: &Rat) -> TruncSeries {
        TruncSeries {
            var: self.var,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, c)| (*k, c.scale(s)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
            order: self.order,
        }
    }

    pub fn scale_poly(&self, p: &Poly) -> TruncSeries {
        TruncSeries {
            var: self.var,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, c)| (*k, c.mul(p)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
            order: self.order,
        }
    }

    /// Multiply by `v^{2k}` (shift all powers by `k`).
    pub fn shift(&self, k: i64) -> TruncSeries {
        TruncSeries {
            var: self.var,
            coeffs: self.coeffs.iter().map(|(p, c)| (p + k, c.clone())).collect(),
            order: self.order + k,
        }
    }

    /// Truncated product. The result order is the best exact bound available
    /// from the operands' orders and supports.
    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        self.assert_same_var(other);
        // A zero series carries no support information beyond its order: use
        // order+1 as its effective minimal power.
        let m_self = self.min_power().unwrap_or(self.order + 1);
        let m_other = other.min_power().unwrap_or(other.order + 1);
        let order = (self.order + m_other).min(other.order + m_self);
        let mut out = TruncSeries::zero(self.var, order);
        for (k1, c1) in &self.coeffs {
            for (k2, c2) in &other.coeffs {
                if k1 + k2 <= order {
                    out.add_to(k1 + k2, &c1.mul(c2));
                }
            }
        }
        out
    }

    /// `(1 + T)^alpha` where `self = 1 + T`, `T` with strictly positive
    /// support. Agrees with repeated multiplication for non-negative integer
    /// `alpha`.
    pub fn pow_alpha(&self, alpha: &Rat) -> Result<TruncSeries> {
        if self.order < 0 {
            return Err(Error::InsufficientOrder {
                needed: 0,
                have: self.order,
            });
        }
        let c0 = self.coeff(0)?;
        if !(c0.is_constant() && c0.constant_part() == Rat::from_integer(1.into())) {
            return Err(Error::NonUnitConstantTerm);
        }
        if self.min_power().map(|m| m < 0).unwrap_or(false) {
            return Err(Error::NonUnitConstantTerm);
        }
        let mut t = self.clone();
        t.coeffs.remove(&0);
        // T has support >= 1, so T^n only matters for n <= order.
        let mut out = TruncSeries::one(self.var, self.order);
        let mut t_pow = TruncSeries::one(self.var, self.order);
        let nmax = self.order.max(0) as u64;
        for n in 1..=nmax {
            t_pow = t_pow.mul(&t).truncate(self.order);
            t_pow.order = self.order;
            let b = binomial_alpha(alpha, n);
            out = out.add(&t_pow.scale(&b));
            out.order = self.order;
        }
        Ok(out)
    }

    /// Coefficient of the zeroth power (the residue of `f · v^{-1} dv` in the
    /// squared variable). Errors if the truncation cannot pin it down.
    pub fn residue(&self) -> Result<Poly> {
        self.coeff(0)
    }

    pub fn to_canonical_string(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        let mut first = true;
        for (k, c) in &self.coeffs {
            if !first {
                s.push_str(" + ");
            }
            first = false;
            let _ = write!(s, "({})*{}^{}", c.to_canonical_string(), self.var, k);
        }
        if first {
            s.push('0');
        }
        let _ = write!(s, " + O({}^{})", self.var, self.order + 1);
        s
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

/// Evaluates `zeta(v^{-2}) = sum_j zeta_j v^{-2j}` as a Laurent series with
/// the given coefficients.
pub fn zeta_laurent(var: SeriesVar, zeta: &[Poly], order: i64) -> TruncSeries {
    let mut s = TruncSeries::zero(var, order);
    for (j, z) in zeta.iter().enumerate() {
        s.set(-(j as i64), z.clone());
    }
    s
}

/// Forward substitution for a lower-triangular rational system with
/// polynomial right-hand side.
pub fn solve_lower_triangular(l: &[Vec<Rat>], rhs: &[Poly]) -> Result<Vec<Poly>> {
    use num_traits::Zero;
    let n = l.len();
    assert!(l.iter().all(|row| row.len() == n) && rhs.len() == n);
    let mut x: Vec<Poly> = Vec::with_capacity(n);
    for i in 0..n {
        if l[i][i].is_zero() {
            return Err(Error::SingularDiagonal { index: i });
        }
        let mut acc = rhs[i].clone();
        for (j, xj) in x.iter().enumerate() {
            acc = acc.sub(&xj.scale(&l[i][j]));
        }
        x.push(acc.scale(&l[i][i].clone().recip()));
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};
    use crate::vars::Var;

    #[test]
    fn pow_half_order2() {
        // (1 + c tau^2)^(-1/2) to order tau^2 = 1 - (c/2) tau^2
        let c = Poly::var(Var::So(1, 2));
        let mut base = TruncSeries::one(SeriesVar::Tau2, 1);
        base.set(1, c.clone());
        let out = base.pow_alpha(&ratio(-1, 2)).unwrap();
        assert_eq!(out.coeff(0).unwrap(), Poly::one());
        assert_eq!(out.coeff(1).unwrap(), c.scale(&ratio(-1, 2)));
    }

    #[test]
    fn pow_integer_matches_mul() {
        // (1+T)^2 with T = tau^2, order 2 (powers of tau^2): 1 + 2tau^2 + tau^4
        let mut base = TruncSeries::one(SeriesVar::Tau2, 2);
        base.set(1, Poly::one());
        let sq = base.pow_alpha(&rat(2)).unwrap();
        let direct = base.mul(&base);
        assert_eq!(sq.coeff(0).unwrap(), direct.coeff(0).unwrap());
        assert_eq!(sq.coeff(1).unwrap(), direct.coeff(1).unwrap());
        assert_eq!(sq.coeff(2).unwrap(), direct.coeff(2).unwrap());
    }

    #[test]
    fn non_unit_constant_rejected() {
        let mut base = TruncSeries::one(SeriesVar::Z2, 3);
        base.set(0, Poly::constant(rat(2)));
        assert_eq!(
            base.pow_alpha(&ratio(1, 2)),
            Err(Error::NonUnitConstantTerm)
        );
    }

    #[test]
    fn residue_examples() {
        // f = z0 + z1 z^{-2}(1 - z^2) -> z0 - z1
        let z0 = Poly::var(Var::Zeta(0));
        let z1 = Poly::var(Var::Zeta(1));
        let mut f = TruncSeries::zero(SeriesVar::Z2, 2);
        f.set(0, z0.clone());
        f.add_to(-1, &z1);
        f.add_to(0, &z1.neg());
        assert_eq!(f.residue().unwrap(), z0.sub(&z1));

        // f = z^{-4} (1 + z^2 + z^4) -> 1
        let mut g = TruncSeries::zero(SeriesVar::Z2, 1);
        g.set(-2, Poly::one());
        g.set(-1, Poly::one());
        g.set(0, Poly::one());
        assert_eq!(g.residue().unwrap(), Poly::one());

        // order shortfall is loud
        let h = TruncSeries::zero(SeriesVar::Z2, -1);
        assert!(matches!(
            h.residue(),
            Err(Error::InsufficientOrder { .. })
        ));
    }

    #[test]
    fn lower_triangular_solve() {
        let l = alloc::vec![
            alloc::vec![rat(2), rat(0)],
            alloc::vec![rat(3), rat(4)],
        ];
        let rhs = alloc::vec![Poly::constant(rat(2)), Poly::constant(rat(10))];
        let x = solve_lower_triangular(&l, &rhs).unwrap();
        assert_eq!(x[0], Poly::one());
        assert_eq!(x[1], Poly::constant(ratio(7, 4)));

        let sing = alloc::vec![alloc::vec![rat(0)]];
        assert_eq!(
            solve_lower_triangular(&sing, &[Poly::one()]),
            Err(Error::SingularDiagonal { index: 0 })
        );
    }
}
