//! Sparse multivariate polynomials over exact rationals.
//!
//! Terms live in a hash map keyed by monomials (sorted variable/exponent
//! lists). No zero coefficient is ever stored, so structural equality is
//! mathematical equality. Iteration order of the map never influences any
//! arithmetic result; canonical ordering is applied only at serialization.

use crate::rat::{rat_to_string, Rat};
use crate::vars::Var;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use hashbrown::HashMap;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

/// A monomial: sorted list of `(variable, exponent)` with positive exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Mono(pub SmallVec<[(Var, u32); 4]>);

impl Mono {
    pub fn unit() -> Self {
        Mono(SmallVec::new())
    }

    pub fn var(v: Var) -> Self {
        Mono(smallvec::smallvec![(v, 1)])
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| *e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .iter()
            .find(|(w, _)| *w == v)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    /// Merge-multiply two sorted monomials.
    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out: SmallVec<[(Var, u32); 4]> = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (va, ea) = self.0[i];
            let (vb, eb) = other.0[j];
            match va.cmp(&vb) {
                core::cmp::Ordering::Less => {
                    out.push((va, ea));
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push((vb, eb));
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    out.push((va, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Mono(out)
    }

    pub fn weighted_degree(&self, weight: impl Fn(Var) -> i64) -> i64 {
        self.0
            .iter()
            .map(|(v, e)| weight(*v) * (*e as i64))
            .sum()
    }
}

/// Sparse multivariate polynomial over `Rat`.
#[derive(Clone, Debug, Default)]
pub struct Poly {
    terms: HashMap<Mono, Rat>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}
impl Eq for Poly {}

impl Poly {
    pub fn zero() -> Self {
        Poly {
            terms: HashMap::new(),
        }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(Mono::unit(), c);
        }
        p
    }

    pub fn var(v: Var) -> Self {
        let mut p = Poly::zero();
        p.terms.insert(Mono::var(v), Rat::one());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Mono, Rat)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    /// Constant term.
    pub fn constant_part(&self) -> Rat {
        self.terms.get(&Mono::unit()).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(Mono::is_unit)
    }

    pub fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            hashbrown::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            hashbrown::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &Poly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Poly, s: &Rat) {
        if s.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * s);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(other, &-Rat::one());
        out
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-Rat::one())
    }

    pub fn scale(&self, s: &Rat) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (m1, c1) in &small.terms {
            for (m2, c2) in &big.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_var(&self, v: Var) -> Poly {
        let m = Mono::var(v);
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(mm, c)| (mm.mul(&m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let mut reduced: SmallVec<[(Var, u32); 4]> = SmallVec::new();
            for &(w, ew) in &m.0 {
                if w == v {
                    if ew > 1 {
                        reduced.push((w, ew - 1));
                    }
                } else {
                    reduced.push((w, ew));
                }
            }
            out.add_term(Mono(reduced), c * Rat::from_integer(e.into()));
        }
        out
    }

    /// Substitute `v := p` (general polynomial substitution).
    pub fn substitute(&self, v: Var, p: &Poly) -> Poly {
        let mut out = Poly::zero();
        let mut pow_cache: Vec<Poly> = alloc::vec![Poly::one()];
        for (m, c) in &self.terms {
            let e = m.exponent(v) as usize;
            while pow_cache.len() <= e {
                let next = pow_cache.last().unwrap().mul(p);
                pow_cache.push(next);
            }
            let mut rest: SmallVec<[(Var, u32); 4]> = SmallVec::new();
            for &(w, ew) in &m.0 {
                if w != v {
                    rest.push((w, ew));
                }
            }
            let mut contrib = pow_cache[e].scale(c);
            if !rest.is_empty() {
                let rest_poly = Poly::from_terms([(Mono(rest), Rat::one())]);
                contrib = contrib.mul(&rest_poly);
            }
            out.add_assign(&contrib);
        }
        out
    }

    /// Substitute many variables by rationals at once (others untouched).
    pub fn eval_partial(&self, assign: &dyn Fn(Var) -> Option<Rat>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest: SmallVec<[(Var, u32); 4]> = SmallVec::new();
            for &(w, ew) in &m.0 {
                match assign(w) {
                    Some(val) => {
                        for _ in 0..ew {
                            coeff *= &val;
                        }
                    }
                    None => rest.push((w, ew)),
                }
            }
            out.add_term(Mono(rest), coeff);
        }
        out
    }

    /// Full evaluation; panics if a variable has no assignment.
    pub fn eval(&self, assign: &dyn Fn(Var) -> Rat) -> Rat {
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut val = c.clone();
            for &(w, ew) in &m.0 {
                let a = assign(w);
                for _ in 0..ew {
                    val *= &a;
                }
            }
            total += val;
        }
        total
    }

    /// Rewrites even powers of `from` as powers of `to` (`from^2 == to`).
    /// Fails if any term has odd degree in `from`.
    pub fn even_square_rewrite(&self, from: Var, to: Var) -> Option<Poly> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut repl: SmallVec<[(Var, u32); 4]> = SmallVec::new();
            for &(w, ew) in &m.0 {
                if w == from {
                    if ew % 2 != 0 {
                        return None;
                    }
                    repl.push((to, ew / 2));
                } else {
                    repl.push((w, ew));
                }
            }
            repl.sort_unstable_by(|a, b| a.0.cmp(&b.0));
            out.add_term(Mono(repl), c.clone());
        }
        Some(out)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Mono::degree).max().unwrap_or(0)
    }

    /// True when every term has the given weighted degree (zero counts as
    /// homogeneous of any weight).
    pub fn is_weight_homogeneous(&self, expected: i64, weight: impl Fn(Var) -> i64) -> bool {
        self.terms
            .keys()
            .all(|m| m.weighted_degree(&weight) == expected)
    }

    /// The set of distinct variables appearing.
    pub fn vars_used(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = Vec::new();
        for m in self.terms.keys() {
            for (v, _) in &m.0 {
                if !vs.contains(v) {
                    vs.push(*v);
                }
            }
        }
        vs.sort_unstable();
        vs
    }

    /// Collects the polynomial as coefficients of powers of one variable.
    pub fn coefficients_of(&self, v: Var) -> HashMap<u32, Poly> {
        let mut out: HashMap<u32, Poly> = HashMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let mut rest: SmallVec<[(Var, u32); 4]> = SmallVec::new();
            for &(w, ew) in &m.0 {
                if w != v {
                    rest.push((w, ew));
                }
            }
            out.entry(e).or_default().add_term(Mono(rest), c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// Canonical text form with terms sorted by the global variable order.
    pub fn to_canonical_string(&self) -> String {
        use core::fmt::Write;
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut sorted: Vec<(&Mono, &Rat)> = self.terms.iter().collect();
        sorted.sort_by(|a, b| a.0.cmp(b.0));
        let mut s = String::new();
        for (idx, (m, c)) in sorted.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else if neg {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            let coeff_one = mag.is_one();
            if m.is_unit() {
                s.push_str(&rat_to_string(&mag));
            } else {
                if !coeff_one {
                    s.push_str(&rat_to_string(&mag));
                    s.push('*');
                }
                for (k, (v, e)) in m.0.iter().enumerate() {
                    if k > 0 {
                        s.push('*');
                    }
                    let _ = write!(s, "{v}");
                    if *e > 1 {
                        let _ = write!(s, "^{e}");
                    }
                }
            }
        }
        s
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    fn a() -> Poly {
        Poly::var(Var::So(1, 2))
    }
    fn x() -> Poly {
        Poly::var(Var::V(3))
    }

    #[test]
    fn canonical_display_matches_declared_format() {
        // 3/2*a_1_2^2*x_3 - z0*x_1
        let p = a()
            .mul(&a())
            .mul(&x())
            .scale(&ratio(3, 2))
            .sub(&Poly::var(Var::Zeta(0)).mul(&Poly::var(Var::V(1))));
        assert_eq!(p.to_canonical_string(), "3/2*a_1_2^2*x_3 - z0*x_1");
    }

    #[test]
    fn derivative_and_substitute() {
        let p = a().pow(3).add(&x().scale(&rat(5)));
        let d = p.derivative(Var::So(1, 2));
        assert_eq!(d, a().pow(2).scale(&rat(3)));
        let q = p.substitute(Var::So(1, 2), &Poly::one());
        assert_eq!(q, Poly::one().add(&x().scale(&rat(5))));
    }

    #[test]
    fn even_square_rewrite_works() {
        let l = Var::Lambda(1);
        let u = Var::LambdaSq(1);
        let p = Poly::var(l).pow(4).add(&Poly::var(l).pow(2).scale(&rat(2)));
        let q = p.even_square_rewrite(l, u).unwrap();
        assert_eq!(
            q,
            Poly::var(u).pow(2).add(&Poly::var(u).scale(&rat(2)))
        );
        let odd = Poly::var(l).pow(3);
        assert!(odd.even_square_rewrite(l, u).is_none());
    }
}
