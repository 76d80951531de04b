//! PBW normal forms in the smash product `U(so_N) ⋉ T(V_N)[ζ]` and the
//! symmetrization map `S(so_N) → U(so_N)`.
//!
//! Words are sequences of letters: Lie letters (basis indices) sort before
//! vector letters, and a word is normal iff its letter sequence is
//! nondecreasing (Lie block ascending, then vector block ascending). The
//! rewriting rules are
//!
//! - `e_b e_a -> e_a e_b + [e_b, e_a]` for `b > a`,
//! - `x e_a  -> e_a x - (e_a x)` (the action term; `A x = x A + A(x)`),
//! - `x_j x_i -> x_i x_j - κ(x_i, x_j)` for `j > i`, only when a pairing is
//!   installed; without one the vector letters generate the free tensor
//!   algebra and are never reordered.
//!
//! Each rewrite lowers the (vector-degree, disorder) pair, so exhaustive
//! reduction terminates; results are memoized by word.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rat::Rat;
use crate::so_lie::SoBasis;
use crate::vars::Var;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use hashbrown::HashMap;
use num_traits::Zero;
use smallvec::SmallVec;

/// A letter: Lie basis index, or `V_FLAG | i` for the `i`-th vector letter
/// (0-based). The flag bit makes plain `u16` order agree with normal order.
pub type Letter = u16;
pub const V_FLAG: Letter = 0x8000;

pub fn lie_letter(a: usize) -> Letter {
    debug_assert!(a < V_FLAG as usize);
    a as Letter
}

pub fn v_letter(i: usize) -> Letter {
    V_FLAG | i as Letter
}

pub fn is_v(l: Letter) -> bool {
    l & V_FLAG != 0
}

pub fn v_index(l: Letter) -> usize {
    (l & !V_FLAG) as usize
}

pub type Word = SmallVec<[Letter; 8]>;

/// Element of `U(so_N) ⋉ T(V_N)[ζ]` as a map from words to `ζ`-polynomial
/// coefficients. Only normal words appear in outputs of the rewriting
/// machinery.
#[derive(Clone, Debug, Default)]
pub struct PbwElement {
    pub terms: HashMap<Word, Poly>,
}

impl PartialEq for PbwElement {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}
impl Eq for PbwElement {}

impl PbwElement {
    pub fn zero() -> Self {
        PbwElement {
            terms: HashMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_word(&[])
    }

    pub fn from_word(w: &[Letter]) -> Self {
        let mut el = Self::zero();
        el.terms.insert(Word::from_slice(w), Poly::one());
        el
    }

    pub fn single(w: Word, c: Poly) -> Self {
        let mut el = Self::zero();
        if !c.is_zero() {
            el.terms.insert(w, c);
        }
        el
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_word(&mut self, w: Word, c: &Poly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            hashbrown::hash_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign(c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
            hashbrown::hash_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &PbwElement, s: &Poly) {
        if s.is_zero() {
            return;
        }
        for (w, c) in &other.terms {
            self.add_word(w.clone(), &c.mul(s));
        }
    }

    pub fn add_assign(&mut self, other: &PbwElement) {
        for (w, c) in &other.terms {
            self.add_word(w.clone(), c);
        }
    }

    pub fn sub(&self, other: &PbwElement) -> PbwElement {
        let mut out = self.clone();
        out.add_scaled(other, &Poly::one().neg());
        out
    }

    pub fn scale(&self, s: &Poly) -> PbwElement {
        let mut out = PbwElement::zero();
        out.add_scaled(self, s);
        out
    }

    pub fn neg(&self) -> PbwElement {
        self.scale(&Poly::one().neg())
    }

    /// Maximal Lie-word length over the support (0 for scalars).
    pub fn max_lie_length(&self) -> usize {
        self.terms
            .keys()
            .map(|w| w.iter().filter(|&&l| !is_v(l)).count())
            .max()
            .unwrap_or(0)
    }

    pub fn max_v_length(&self) -> usize {
        self.terms
            .keys()
            .map(|w| w.iter().filter(|&&l| is_v(l)).count())
            .max()
            .unwrap_or(0)
    }

    /// Canonical text form: terms sorted by word, `coeff * e_1.e_3.x_2`.
    pub fn to_canonical_string(&self) -> String {
        use core::fmt::Write;
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut keys: Vec<&Word> = self.terms.keys().collect();
        keys.sort();
        let mut s = String::new();
        for (n, w) in keys.into_iter().enumerate() {
            if n > 0 {
                s.push_str(" + ");
            }
            let c = &self.terms[w];
            let _ = write!(s, "({})", c.to_canonical_string());
            for &l in w.iter() {
                if is_v(l) {
                    let _ = write!(s, ".x_{}", v_index(l) + 1);
                } else {
                    let _ = write!(s, ".e_{}", l + 1);
                }
            }
        }
        s
    }
}

impl fmt::Display for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

/// An `so_N`-equivariant skew pairing `∧²V_N → U(so_N)[ζ]`, stored as images
/// of basis pairs `i < j` (0-based indices).
#[derive(Clone, Debug, Default)]
pub struct KappaPairing {
    pub n: usize,
    pub images: HashMap<(u16, u16), PbwElement>,
}

impl KappaPairing {
    pub fn zero(n: usize) -> Self {
        KappaPairing {
            n,
            images: HashMap::new(),
        }
    }

    /// `κ(x_i, x_j)` for any `i, j` (0-based), with skewness built in.
    pub fn get(&self, i: usize, j: usize) -> PbwElement {
        if i == j {
            return PbwElement::zero();
        }
        let (a, b, sign) = if i < j { (i, j, false) } else { (j, i, true) };
        let el = self
            .images
            .get(&(a as u16, b as u16))
            .cloned()
            .unwrap_or_else(PbwElement::zero);
        if sign {
            el.neg()
        } else {
            el
        }
    }

    pub fn set(&mut self, i: usize, j: usize, el: PbwElement) {
        assert!(i < j);
        if !el.is_zero() {
            self.images.insert((i as u16, j as u16), el);
        }
    }
}

/// Rewriting context: a fixed `so` realization, an optional pairing for the
/// `x`-`x` relation, and memo tables. Deterministic; per-thread (the caches
/// use `Rc`).
pub struct RewriteCtx<'a> {
    pub so: &'a SoBasis,
    pub kappa: Option<KappaPairing>,
    memo: HashMap<Word, Rc<PbwElement>>,
    sym_memo: HashMap<SmallVec<[u16; 8]>, Rc<PbwElement>>,
}

impl<'a> RewriteCtx<'a> {
    pub fn new(so: &'a SoBasis, kappa: Option<KappaPairing>) -> Self {
        RewriteCtx {
            so,
            kappa,
            memo: HashMap::new(),
            sym_memo: HashMap::new(),
        }
    }

    fn find_rewrite(&self, w: &[Letter]) -> Option<usize> {
        let with_kappa = self.kappa.is_some();
        for t in 0..w.len().saturating_sub(1) {
            let (b, a) = (w[t], w[t + 1]);
            match (is_v(b), is_v(a)) {
                (true, false) => return Some(t),
                (false, false) if b > a => return Some(t),
                (true, true) if b > a && with_kappa => return Some(t),
                _ => {}
            }
        }
        None
    }

    /// Normal form of a single word, memoized.
    pub fn normal_form_word(&mut self, w: &[Letter]) -> Rc<PbwElement> {
        if let Some(hit) = self.memo.get(w) {
            return hit.clone();
        }
        let result = match self.find_rewrite(w) {
            None => PbwElement::from_word(w),
            Some(t) => {
                let (b, a) = (w[t], w[t + 1]);
                let mut acc = PbwElement::zero();
                let mut swapped: Word = Word::from_slice(w);
                swapped.swap(t, t + 1);
                let main = self.normal_form_word(&swapped);
                acc.add_assign(&main);
                let glue = |mid: &[Letter]| -> Word {
                    let mut nw = Word::from_slice(&w[..t]);
                    nw.extend_from_slice(mid);
                    nw.extend_from_slice(&w[t + 2..]);
                    nw
                };
                match (is_v(b), is_v(a)) {
                    (false, false) => {
                        // e_b e_a = e_a e_b + [e_b, e_a]
                        let combos: Vec<(usize, Rat)> =
                            self.so.bracket(b as usize, a as usize).to_vec();
                        for (g, c) in combos {
                            let piece = self.normal_form_word(&glue(&[lie_letter(g)]));
                            acc.add_scaled(&piece, &Poly::constant(c));
                        }
                    }
                    (true, false) => {
                        // x_i e_a = e_a x_i - (e_a x_i)
                        let i = v_index(b);
                        let col = self.so.action_col(a as usize, i);
                        for (k, c) in col.into_iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            let piece = self.normal_form_word(&glue(&[v_letter(k)]));
                            acc.add_scaled(&piece, &Poly::constant(-c));
                        }
                    }
                    (true, true) => {
                        // x_j x_i = x_i x_j - κ(x_i, x_j)
                        let (j, i) = (v_index(b), v_index(a));
                        let image = self
                            .kappa
                            .as_ref()
                            .expect("x-x rewrite only fires with a pairing")
                            .get(i, j);
                        for (iw, ic) in &image.terms {
                            let piece = self.normal_form_word(&glue(iw));
                            acc.add_scaled(&piece, &ic.neg());
                        }
                    }
                    (false, true) => unreachable!("Lie letters never sort after vector letters"),
                }
                acc
            }
        };
        let rc = Rc::new(result);
        self.memo.insert(Word::from_slice(w), rc.clone());
        rc
    }

    pub fn normal_form(&mut self, el: &PbwElement) -> PbwElement {
        let mut out = PbwElement::zero();
        for (w, c) in &el.terms {
            let nf = self.normal_form_word(w);
            out.add_scaled(&nf, c);
        }
        out
    }

    pub fn mul(&mut self, a: &PbwElement, b: &PbwElement) -> PbwElement {
        let mut out = PbwElement::zero();
        for (w1, c1) in &a.terms {
            for (w2, c2) in &b.terms {
                let mut w: Word = w1.clone();
                w.extend_from_slice(w2);
                let nf = self.normal_form_word(&w);
                out.add_scaled(&nf, &c1.mul(c2));
            }
        }
        out
    }

    pub fn commutator(&mut self, a: &PbwElement, b: &PbwElement) -> PbwElement {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    /// Symmetrization of a polynomial in `so`-coordinates: each coordinate
    /// maps to its half-trace dual basis element, and every degree-`k`
    /// monomial becomes the average of its `k!` orderings in `U(so_N)`,
    /// normal-ordered.
    pub fn symmetrize(&mut self, p: &Poly) -> Result<PbwElement> {
        for v in p.vars_used() {
            if !matches!(v, Var::So(_, _)) {
                return Err(Error::ForbiddenVariables {
                    context: "symmetrize",
                });
            }
        }
        let so_index: HashMap<Var, usize> = (0..self.so.dim())
            .map(|idx| (self.so.coord_var(idx), idx))
            .collect();
        let mut out = PbwElement::zero();
        for (mono, coeff) in p.terms() {
            // Expand the product of dual linear combinations into letter
            // multisets.
            let mut multisets: HashMap<SmallVec<[u16; 8]>, Rat> = HashMap::new();
            multisets.insert(SmallVec::new(), coeff.clone());
            for (v, e) in mono.0.iter() {
                let idx = *so_index.get(v).expect("so coordinate of this basis");
                let combo = self.so.dual_combo(idx);
                for _ in 0..*e {
                    let mut next: HashMap<SmallVec<[u16; 8]>, Rat> = HashMap::new();
                    for (ms, c) in &multisets {
                        for (g, gc) in &combo {
                            let mut ms2 = ms.clone();
                            let pos = ms2.partition_point(|&x| x <= *g as u16);
                            ms2.insert(pos, *g as u16);
                            let add = c * gc;
                            let entry = next.entry(ms2).or_insert_with(Rat::zero);
                            *entry += add;
                        }
                    }
                    next.retain(|_, c| !c.is_zero());
                    multisets = next;
                }
            }
            for (ms, c) in multisets {
                let sym = self.symmetrize_multiset(&ms);
                out.add_scaled(&sym, &Poly::constant(c));
            }
        }
        Ok(out)
    }

    /// `sym(ℓ_1 ... ℓ_k) = (1/k) Σ_ℓ mult(ℓ) · ℓ · sym(rest)`, memoized by
    /// sorted multiset.
    fn symmetrize_multiset(&mut self, ms: &SmallVec<[u16; 8]>) -> Rc<PbwElement> {
        if let Some(hit) = self.sym_memo.get(ms) {
            return hit.clone();
        }
        let result = if ms.is_empty() {
            PbwElement::one()
        } else {
            let k = ms.len() as i64;
            let mut acc = PbwElement::zero();
            let mut pos = 0;
            while pos < ms.len() {
                let letter = ms[pos];
                let mult = ms[pos..].iter().take_while(|&&x| x == letter).count();
                let mut rest = ms.clone();
                rest.remove(pos);
                let sub = self.symmetrize_multiset(&rest);
                let weight = Poly::constant(Rat::new((mult as i64).into(), k.into()));
                // prepend the letter and re-normalize
                let mut prepended = PbwElement::zero();
                for (w, c) in &sub.terms {
                    let mut nw: Word = Word::new();
                    nw.push(lie_letter(letter as usize));
                    nw.extend_from_slice(w);
                    let nf = self.normal_form_word(&nw);
                    prepended.add_scaled(&nf, c);
                }
                acc.add_scaled(&prepended, &weight);
                pos += mult;
            }
            acc
        };
        let rc = Rc::new(result);
        self.sym_memo.insert(ms.clone(), rc.clone());
        rc
    }

    /// Reads the top-degree (longest Lie word) part of an element of
    /// `U(so_N)` back as a coordinate polynomial on `so_N`.
    pub fn top_symbol_as_coords(&self, el: &PbwElement) -> Poly {
        let top = el.max_lie_length();
        let mut out = Poly::zero();
        for (w, c) in &el.terms {
            if w.len() != top || w.iter().any(|&l| is_v(l)) {
                continue;
            }
            let mut prod = Poly::constant(Rat::from_integer(1.into()));
            for &l in w.iter() {
                let lin = self.so.elem_as_coord_poly(&[(l as usize, Rat::from_integer(1.into()))]);
                prod = prod.mul(&lin);
            }
            let mut scaled = Poly::zero();
            scaled.add_assign(&prod);
            out.add_assign(&scaled.mul(c));
        }
        out
    }

    /// `[e_a, u]` in normal form.
    pub fn adjoint(&mut self, a: usize, u: &PbwElement) -> PbwElement {
        let e = PbwElement::from_word(&[lie_letter(a)]);
        self.commutator(&e, u)
    }

    pub fn cache_size(&self) -> usize {
        self.memo.len()
    }
}

/// Outcome of a centrality sweep: `Ok` or the first offending generator with
/// its nonzero commutator.
pub struct CenterWitness {
    pub generator: String,
    pub commutator: PbwElement,
}

/// Checks `[u, g] = 0` for every Lie generator and every vector generator.
pub fn center_check(ctx: &mut RewriteCtx<'_>, u: &PbwElement) -> Option<CenterWitness> {
    use alloc::format;
    for a in 0..ctx.so.dim() {
        let g = PbwElement::from_word(&[lie_letter(a)]);
        let c = ctx.commutator(u, &g);
        if !c.is_zero() {
            return Some(CenterWitness {
                generator: format!("e_{}", a + 1),
                commutator: c,
            });
        }
    }
    for i in 0..ctx.so.n {
        let g = PbwElement::from_word(&[v_letter(i)]);
        let c = ctx.commutator(u, &g);
        if !c.is_zero() {
            return Some(CenterWitness {
                generator: format!("x_{}", i + 1),
                commutator: c,
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};
    use crate::so_lie::FormFlavor;

    fn so4() -> SoBasis {
        SoBasis::new(FormFlavor::Orthonormal, 4).unwrap()
    }

    #[test]
    fn free_mode_keeps_vector_order() {
        let so = so4();
        let mut ctx = RewriteCtx::new(&so, None);
        let w: Word = Word::from_slice(&[v_letter(1), v_letter(0)]);
        let nf = ctx.normal_form_word(&w);
        assert_eq!(*nf, PbwElement::from_word(&[v_letter(1), v_letter(0)]));
    }

    #[test]
    fn kappa_zero_sorts_vectors() {
        let so = so4();
        let mut ctx = RewriteCtx::new(&so, Some(KappaPairing::zero(4)));
        let w: Word = Word::from_slice(&[v_letter(1), v_letter(0)]);
        let nf = ctx.normal_form_word(&w);
        assert_eq!(*nf, PbwElement::from_word(&[v_letter(0), v_letter(1)]));
    }

    #[test]
    fn action_rewrite_convention() {
        // x e_a -> e_a x - e_a(x): check on so_4, e = e_{(1,2)}, x = x_1:
        // e x_1 = column 1 of e = -x_2... with e = E_12 - E_21: e x_1 = -e_2
        // means e_a(x_1) = -x_2, so x_1 e = e x_1 + x_2.
        let so = so4();
        let mut ctx = RewriteCtx::new(&so, None);
        let alpha = 0; // rep (1,2)
        let w: Word = Word::from_slice(&[v_letter(0), lie_letter(alpha)]);
        let nf = ctx.normal_form_word(&w);
        let mut expected = PbwElement::from_word(&[lie_letter(alpha), v_letter(0)]);
        expected.add_word(Word::from_slice(&[v_letter(1)]), &Poly::one());
        assert_eq!(*nf, expected);
    }

    #[test]
    fn normal_form_is_idempotent() {
        let so = so4();
        let mut ctx = RewriteCtx::new(&so, Some(KappaPairing::zero(4)));
        let w: Word = Word::from_slice(&[
            lie_letter(3),
            lie_letter(1),
            v_letter(2),
            lie_letter(0),
            v_letter(1),
        ]);
        let nf = ctx.normal_form_word(&w);
        let again = ctx.normal_form(&nf);
        assert_eq!(*nf, again);
    }

    #[test]
    fn symmetrize_degree_one_and_two() {
        let so = so4();
        let mut ctx = RewriteCtx::new(&so, None);
        // Degree 1: a_1_2 -> dual element. Orthonormal dual of a_{ij} under
        // tr/2 is -e_{ij}.
        let p = Poly::var(Var::So(1, 2));
        let s = ctx.symmetrize(&p).unwrap();
        let mut expected = PbwElement::zero();
        expected.add_word(Word::from_slice(&[lie_letter(0)]), &Poly::constant(rat(-1)));
        assert_eq!(s, expected);

        // Degree 2, distinct letters: sym(ab) = (1/2)(ab + ba) = ab - (1/2)[a,b]
        // in normal order; check against direct averaging.
        let p2 = Poly::var(Var::So(1, 2)).mul(&Poly::var(Var::So(1, 3)));
        let s2 = ctx.symmetrize(&p2).unwrap();
        let ab = ctx.normal_form_word(&[lie_letter(0), lie_letter(1)]);
        let ba = ctx.normal_form_word(&[lie_letter(1), lie_letter(0)]);
        let mut avg = PbwElement::zero();
        avg.add_scaled(&ab, &Poly::constant(ratio(1, 2)));
        avg.add_scaled(&ba, &Poly::constant(ratio(1, 2)));
        assert_eq!(s2, avg);
    }

    #[test]
    fn symmetrize_rejects_v_vars() {
        let so = so4();
        let mut ctx = RewriteCtx::new(&so, None);
        let p = Poly::var(Var::V(1));
        assert!(matches!(
            ctx.symmetrize(&p),
            Err(Error::ForbiddenVariables { .. })
        ));
    }

    #[test]
    fn top_symbol_reads_back() {
        let so = so4();
        let mut ctx = RewriteCtx::new(&so, None);
        let p = Poly::var(Var::So(1, 2))
            .mul(&Poly::var(Var::So(2, 3)))
            .add(&Poly::var(Var::So(1, 4)).pow(2).scale(&ratio(3, 2)));
        let s = ctx.symmetrize(&p).unwrap();
        let back = ctx.top_symbol_as_coords(&s);
        assert_eq!(back, p);
    }

    #[test]
    fn casimir_of_so3_commutes_with_lie_letters() {
        let so = SoBasis::new(FormFlavor::Orthonormal, 3).unwrap();
        let mut ctx = RewriteCtx::new(&so, Some(KappaPairing::zero(3)));
        // sum of squares of the trace-orthogonal basis
        let mut cas = PbwElement::zero();
        for a in 0..3 {
            cas.add_word(Word::from_slice(&[lie_letter(a), lie_letter(a)]), &Poly::one());
        }
        for a in 0..3 {
            let c = ctx.adjoint(a, &cas);
            assert!(c.is_zero(), "[Casimir, e_{}] != 0", a);
        }
        // but it does NOT commute with vector letters when kappa = 0
        let x0 = PbwElement::from_word(&[v_letter(0)]);
        let c = ctx.commutator(&cas, &x0);
        assert!(!c.is_zero());
        // t_1 = sum x_i^2 is central for kappa = 0
        let mut t1 = PbwElement::zero();
        for i in 0..3 {
            t1.add_word(Word::from_slice(&[v_letter(i), v_letter(i)]), &Poly::one());
        }
        assert!(center_check(&mut ctx, &t1).is_none());
    }
}
