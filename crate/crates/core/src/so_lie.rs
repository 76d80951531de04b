//! Concrete realizations of `so(V_N, B)` for configurable symmetric forms.
//!
//! Three forms occur: the orthonormal one (`B = I`, elements are plainly
//! skew), the antidiagonal one (`B_{ij} = δ_{N+1-i,j}`, diagonal Cartan), and
//! block slice forms used by the nilpotent-slice machinery. The basis, its
//! structure constants, the half-trace Gram matrix and its inverse are
//! precomputed once per context.
//!
//! The pairing used to identify coordinate functions on `so_N` with Lie
//! elements is `<X,Y> = tr(XY)/2` throughout the crate; the Poisson-center
//! identities pin this normalization down exactly (the plain trace fails them
//! by a factor of two).

use crate::error::{Error, Result};
use crate::matrix::{char_coefficients, complete_homogeneous, invert, mat_vec, Mat, Ring};
use crate::poly::Poly;
use crate::rat::{rat, Rat};
use crate::vars::Var;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};
use smallvec::SmallVec;

/// Which named symmetric form a context uses.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FormFlavor {
    Orthonormal,
    Antidiagonal,
}

impl FormFlavor {
    pub fn name(&self) -> &'static str {
        match self {
            FormFlavor::Orthonormal => "orthonormal",
            FormFlavor::Antidiagonal => "antidiagonal",
        }
    }
}

/// Gram matrix of the symmetric bilinear form on `V_N`.
pub fn gram(flavor: FormFlavor, n: usize) -> Mat<Rat> {
    match flavor {
        FormFlavor::Orthonormal => Mat::identity(n),
        FormFlavor::Antidiagonal => {
            Mat::from_fn(n, n, |i, j| if i + j == n - 1 { Rat::one() } else { Rat::zero() })
        }
    }
}

/// `A^t B + B A == 0`, exactly.
pub fn in_so<T: Ring>(a: &Mat<T>, b: &Mat<Rat>) -> bool {
    let bt = b.map(|r| {
        let mut p = T::zero();
        p = p.add(&T::one().scale(r));
        p
    });
    a.transpose().mul(&bt).add(&bt.mul(a)).is_zero()
}

/// `g^t B g == B`, exactly.
pub fn is_orthogonal(g: &Mat<Rat>, b: &Mat<Rat>) -> bool {
    g.transpose().mul(b).mul(g) == *b
}

/// A realization of `so_N` with ordered basis, structure constants and the
/// half-trace Gram data.
pub struct SoBasis {
    pub n: usize,
    pub flavor: FormFlavor,
    pub gram: Mat<Rat>,
    /// Representative entry `(i, j)` (1-based) naming each basis element.
    pub reps: Vec<(u16, u16)>,
    pub elems: Vec<Mat<Rat>>,
    /// `[e_a, e_b] = sum_c bracket[a][b] e_c` as `(index, coefficient)`.
    bracket: Vec<Vec<SmallVec<[(usize, Rat); 4]>>>,
    /// `G_{ab} = tr(e_a e_b) / 2`.
    pub gram_half: Mat<Rat>,
    /// `G^{-1}`: the coordinate function `a_b` corresponds to the element
    /// `sum_c dual[b][c] e_c`.
    pub dual: Mat<Rat>,
}

impl SoBasis {
    pub fn new(flavor: FormFlavor, n: usize) -> Result<SoBasis> {
        if n < 3 {
            return Err(Error::UnsupportedRank { n });
        }
        let b = gram(flavor, n);
        let mut reps: Vec<(u16, u16)> = Vec::new();
        let mut elems: Vec<Mat<Rat>> = Vec::new();
        match flavor {
            FormFlavor::Orthonormal => {
                for i in 1..=n {
                    for j in i + 1..=n {
                        reps.push((i as u16, j as u16));
                        let mut m = Mat::zero(n, n);
                        m[(i - 1, j - 1)] = Rat::one();
                        m[(j - 1, i - 1)] = -Rat::one();
                        elems.push(m);
                    }
                }
            }
            FormFlavor::Antidiagonal => {
                // e_(i,j) = E_ij - E_{N+1-j,N+1-i}; e_(i,N+1-i) = 0; the pair
                // (i,j), (N+1-j,N+1-i) spans the same line, keep the smaller.
                for i in 1..=n {
                    for j in 1..=n {
                        if j == n + 1 - i {
                            continue;
                        }
                        let partner = ((n + 1 - j) as u16, (n + 1 - i) as u16);
                        if (i as u16, j as u16) > partner {
                            continue;
                        }
                        reps.push((i as u16, j as u16));
                        let mut m = Mat::zero(n, n);
                        m[(i - 1, j - 1)] = Rat::one();
                        let (pi, pj) = (n - j, n - i); // 0-based (N+1-j, N+1-i)
                        m[(pi, pj)] = &m[(pi, pj)] - &Rat::one();
                        elems.push(m);
                    }
                }
            }
        }
        let dim = n * (n - 1) / 2;
        assert_eq!(elems.len(), dim);
        for e in &elems {
            assert!(in_so(e, &b));
        }
        let mut basis = SoBasis {
            n,
            flavor,
            gram: b,
            reps,
            elems,
            bracket: Vec::new(),
            gram_half: Mat::zero(0, 0),
            dual: Mat::zero(0, 0),
        };
        let mut table = Vec::with_capacity(dim);
        for a in 0..dim {
            let mut row = Vec::with_capacity(dim);
            for c in 0..dim {
                let comm = basis.elems[a].commutator(&basis.elems[c]);
                row.push(basis.decompose(&comm));
            }
            table.push(row);
        }
        basis.bracket = table;
        let g = Mat::from_fn(dim, dim, |a, c| {
            basis.elems[a].mul(&basis.elems[c]).trace().scale(&Rat::new(1.into(), 2.into()))
        });
        basis.dual = invert(&g).expect("half-trace Gram matrix is nonsingular");
        basis.gram_half = g;
        Ok(basis)
    }

    pub fn dim(&self) -> usize {
        self.elems.len()
    }

    /// Expands a matrix known to lie in this `so` realization.
    pub fn decompose(&self, m: &Mat<Rat>) -> SmallVec<[(usize, Rat); 4]> {
        let mut out = SmallVec::new();
        let mut check = Mat::zero(self.n, self.n);
        for (idx, &(i, j)) in self.reps.iter().enumerate() {
            let c = m[(i as usize - 1, j as usize - 1)].clone();
            if !c.is_zero() {
                check = check.add(&self.elems[idx].scale(&c));
                out.push((idx, c));
            }
        }
        debug_assert!(check == *m, "matrix not in the span of this so basis");
        out
    }

    pub fn bracket(&self, a: usize, b: usize) -> &[(usize, Rat)] {
        &self.bracket[a][b]
    }

    /// Action of basis element `a` on the `i`-th coordinate vector (0-based):
    /// the `i`-th column of its matrix.
    pub fn action_col(&self, a: usize, i: usize) -> Vec<Rat> {
        self.elems[a].col(i)
    }

    pub fn coord_var(&self, idx: usize) -> Var {
        let (i, j) = self.reps[idx];
        Var::So(i, j)
    }

    /// The generic `so`-matrix with coordinate-variable entries.
    pub fn generic_matrix(&self) -> Mat<Poly> {
        let mut m = Mat::<Poly>::zero(self.n, self.n);
        for (idx, e) in self.elems.iter().enumerate() {
            let v = Poly::var(self.coord_var(idx));
            for r in 0..self.n {
                for c in 0..self.n {
                    if !e[(r, c)].is_zero() {
                        m[(r, c)] = m[(r, c)].add(&v.scale(&e[(r, c)]));
                    }
                }
            }
        }
        m
    }

    /// Linear combination of basis elements corresponding to the coordinate
    /// function `a_idx` under the half-trace pairing.
    pub fn dual_combo(&self, idx: usize) -> Vec<(usize, Rat)> {
        (0..self.dim())
            .filter(|&c| !self.dual[(idx, c)].is_zero())
            .map(|c| (c, self.dual[(idx, c)].clone()))
            .collect()
    }

    /// Reads a Lie element (as basis combination) back as the linear
    /// coordinate polynomial `A -> tr(e A)/2`.
    pub fn elem_as_coord_poly(&self, combo: &[(usize, Rat)]) -> Poly {
        let mut p = Poly::zero();
        for &(c, ref coef) in combo {
            for b in 0..self.dim() {
                let g = &self.gram_half[(c, b)];
                if !g.is_zero() {
                    p.add_term(
                        crate::poly::Mono::var(self.coord_var(b)),
                        coef * g,
                    );
                }
            }
        }
        p
    }

    /// Converts an arbitrary matrix-valued linear function `A -> tr(M A)/2`
    /// into a coordinate polynomial, projecting `M` onto `so` first.
    pub fn matrix_pairing_as_coord_poly(&self, m: &Mat<Rat>) -> Poly {
        let mut p = Poly::zero();
        for b in 0..self.dim() {
            let val = self.elems[b]
                .mul(m)
                .trace()
                .scale(&Rat::new(1.into(), 2.into()));
            if !val.is_zero() {
                p.add_term(crate::poly::Mono::var(self.coord_var(b)), val);
            }
        }
        p
    }
}

/// Basis of `{ M : M^t B + B M = 0 }` for an arbitrary nonsingular symmetric
/// `B`, by exact nullspace computation on flattened matrices.
pub fn so_space_basis(b: &Mat<Rat>) -> Vec<Mat<Rat>> {
    let n = b.rows;
    // Constraint rows: for each (r,c), sum_k M_{k r} B_{k c} + B_{r k} M_{k c} = 0.
    let mut sys = Mat::<Rat>::zero(n * n, n * n);
    for r in 0..n {
        for c in 0..n {
            let row = r * n + c;
            for k in 0..n {
                // coefficient of M_{k r} from (A^t B)_{r c}
                let e1 = b[(k, c)].clone();
                if !e1.is_zero() {
                    sys[(row, k * n + r)] = &sys[(row, k * n + r)] + &e1;
                }
                // coefficient of M_{k c} from (B A)_{r c}
                let e2 = b[(r, k)].clone();
                if !e2.is_zero() {
                    sys[(row, k * n + c)] = &sys[(row, k * n + c)] + &e2;
                }
            }
        }
    }
    crate::matrix::kernel_basis(&sys)
        .into_iter()
        .map(|v| Mat::from_fn(n, n, |i, j| v[i * n + j].clone()))
        .collect()
}

// ---------------------------------------------------------------------------
// Characteristic data.
// ---------------------------------------------------------------------------

/// `p_j`, `b_k` and symmetric-power traces of a (generic) `so` matrix.
pub struct CharData {
    /// `det(I + tA) = sum p_j t^j`, indices `0..=N`.
    pub p: Vec<Poly>,
    /// `b_k = sum_{j<=k} (-1)^j p_j A^{k-j}`, indices `0..=2n`.
    pub b: Vec<Mat<Poly>>,
}

pub fn char_data(a: &Mat<Poly>, b_form: &Mat<Rat>) -> Result<CharData> {
    if !in_so(a, b_form) {
        return Err(Error::NotInSo);
    }
    let n = a.rows;
    let p = char_coefficients(a, n);
    let nn = n / 2;
    let mut powers: Vec<Mat<Poly>> = vec![Mat::identity(n)];
    for _ in 1..=2 * nn {
        powers.push(powers.last().unwrap().mul(a));
    }
    let mut b = Vec::with_capacity(2 * nn + 1);
    for k in 0..=2 * nn {
        let mut acc = Mat::<Poly>::zero(n, n);
        for j in 0..=k.min(n) {
            let term = powers[k - j].map(|q| q.clone());
            let signed = if j % 2 == 0 { term } else { term.neg() };
            acc = acc.add(&signed.map(|q| q.mul(&p[j])));
        }
        b.push(acc);
    }
    Ok(CharData { p, b })
}

/// `tr S^m A`: trace of `A` on the `m`-th symmetric power, i.e. the complete
/// homogeneous symmetric function of the eigenvalues.
pub fn tr_sym(a: &Mat<Poly>, m: usize) -> Poly {
    complete_homogeneous(a, m).pop().unwrap()
}

// ---------------------------------------------------------------------------
// Pfaffians.
// ---------------------------------------------------------------------------

fn pfaffian_rec<T: Ring>(m: &Mat<T>, active: &[usize]) -> T {
    if active.is_empty() {
        return T::one();
    }
    let first = active[0];
    let mut acc = T::zero();
    for (k, &j) in active[1..].iter().enumerate() {
        let a = &m[(first, j)];
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = active[1..]
            .iter()
            .copied()
            .filter(|&c| c != j)
            .collect();
        let sub = pfaffian_rec(m, &rest);
        let term = a.mul(&sub);
        acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Total Pfaffian, normalized so the standard block `diag([[0,1],[-1,0]],..)`
/// has Pfaffian `+1`.
pub fn pfaffian<T: Ring>(m: &Mat<T>) -> Result<T> {
    if m.rows != m.cols || m.rows % 2 != 0 {
        return Err(Error::OddPfaffian { n: m.rows });
    }
    if !m.transpose().add(m).is_zero() {
        return Err(Error::NotSkew);
    }
    let active: Vec<usize> = (0..m.rows).collect();
    Ok(pfaffian_rec(m, &active))
}

/// Pfaffian of the principal minor on the (0-based, ascending) index set.
pub fn pfaffian_principal<T: Ring>(m: &Mat<T>, idx: &[usize]) -> Result<T> {
    pfaffian(&m.submatrix(idx, idx))
}

/// 3x3 (or any) minor determinant on given rows/columns (0-based).
pub fn minor_det(m: &Mat<Poly>, rows: &[usize], cols: &[usize]) -> Poly {
    let sub = m.submatrix(rows, cols);
    let n = sub.rows;
    assert_eq!(n, sub.cols);
    // Leibniz expansion; only used for tiny minors.
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = Poly::zero();
    permute(&mut perm, 0, &mut |p, sign| {
        let mut prod = Poly::one();
        for (i, &pi) in p.iter().enumerate() {
            prod = prod.mul(&sub[(i, pi)]);
        }
        out.add_assign(&if sign { prod } else { prod.neg() });
    });
    out
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize], bool)) {
    fn go(p: &mut Vec<usize>, k: usize, even: bool, f: &mut impl FnMut(&[usize], bool)) {
        if k == p.len() {
            f(p, even);
            return;
        }
        let mut even = even;
        for i in k..p.len() {
            p.swap(k, i);
            let flipped = if i != k { !even } else { even };
            go(p, k + 1, flipped, f);
            p.swap(k, i);
        }
    }
    go(p, k, true, f)
}

// ---------------------------------------------------------------------------
// Group-level h-function.
// ---------------------------------------------------------------------------

/// Rational plane rotation in coordinates `(p, q)` (0-based) with
/// `cos = (1-t^2)/(1+t^2)`, `sin = 2t/(1+t^2)`.
pub fn plane_rotation(n: usize, p: usize, q: usize, t: &Rat) -> Mat<Rat> {
    assert!(p < q && q < n);
    let denom = Rat::one() + t * t;
    let c = (Rat::one() - t * t) / denom.clone();
    let s = (rat(2) * t) / denom;
    let mut g = Mat::identity(n);
    g[(p, p)] = c.clone();
    g[(q, q)] = c;
    g[(p, q)] = -s.clone();
    g[(q, p)] = s;
    g
}

/// Signed permutation matrix: column `j` is `signs[j] * e_{perm[j]}`.
pub fn signed_permutation(perm: &[usize], signs: &[i64]) -> Mat<Rat> {
    let n = perm.len();
    let mut g = Mat::zero(n, n);
    for j in 0..n {
        g[(perm[j], j)] = rat(signs[j]);
    }
    g
}

/// `h(x,y,z;g)`: the vector
/// `(z - z^g)(x^g - x^{g^{-1}}, y) + (y - y^g)(z^g - z^{g^{-1}}, x) + (x - x^g)(y^g - y^{g^{-1}}, z)`
/// with `x^g = g x` and pairing `(u,v) = u^t B v`. Vanishes identically when
/// `rank(1 - g) <= 2`.
pub fn h_vector(
    x: &[Rat],
    y: &[Rat],
    z: &[Rat],
    g: &Mat<Rat>,
    b: &Mat<Rat>,
) -> Result<Vec<Rat>> {
    if !is_orthogonal(g, b) {
        return Err(Error::NotOrthogonal);
    }
    // g^t B g = B gives g^{-1} = B^{-1} g^t B.
    let ginv = invert(b)
        .expect("form is nonsingular")
        .mul(&g.transpose())
        .mul(b);
    debug_assert!(g.mul(&ginv) == Mat::identity(g.rows));
    let pair = |u: &[Rat], v: &[Rat]| -> Rat {
        let bv = mat_vec(b, v);
        u.iter().zip(bv.iter()).map(|(a, c)| a * c).sum()
    };
    let act = |m: &Mat<Rat>, v: &[Rat]| mat_vec(m, v);
    let sub = |u: &[Rat], v: &[Rat]| -> Vec<Rat> {
        u.iter().zip(v.iter()).map(|(a, c)| a - c).collect()
    };
    let xg = act(g, x);
    let yg = act(g, y);
    let zg = act(g, z);
    let xgi = act(&ginv, x);
    let ygi = act(&ginv, y);
    let zgi = act(&ginv, z);
    let c1 = pair(&sub(&xg, &xgi), y);
    let c2 = pair(&sub(&zg, &zgi), x);
    let c3 = pair(&sub(&yg, &ygi), z);
    let mut out = vec![Rat::zero(); x.len()];
    for i in 0..x.len() {
        out[i] = (&z[i] - &zg[i]) * &c1 + (&y[i] - &yg[i]) * &c2 + (&x[i] - &xg[i]) * &c3;
    }
    Ok(out)
}

/// Scalar certificate: sum of squared coordinates of `h` (zero iff the vector
/// vanishes, since everything is rational).
pub fn h_certificate(
    x: &[Rat],
    y: &[Rat],
    z: &[Rat],
    g: &Mat<Rat>,
    b: &Mat<Rat>,
) -> Result<Rat> {
    let h = h_vector(x, y, z, g, b)?;
    Ok(h.iter().map(|c| c * c).sum())
}

/// `rank(1 - g)`.
pub fn fixed_space_defect(g: &Mat<Rat>) -> usize {
    crate::matrix::rank(&Mat::identity(g.rows).sub(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    #[test]
    fn orthonormal_so3_structure() {
        let so3 = SoBasis::new(FormFlavor::Orthonormal, 3).unwrap();
        assert_eq!(so3.dim(), 3);
        // [e12, e13] = -e23 etc.: verify Jacobi and closure numerically below.
        for a in 0..3 {
            for b in 0..3 {
                let m = so3.elems[a].commutator(&so3.elems[b]);
                let dec = so3.decompose(&m);
                let mut rebuilt = Mat::zero(3, 3);
                for (idx, c) in dec {
                    rebuilt = rebuilt.add(&so3.elems[idx].scale(&c));
                }
                assert_eq!(rebuilt, m);
            }
        }
    }

    #[test]
    fn antidiagonal_zero_elements_excluded() {
        // e_(i, N+1-i) = 0 is excluded from the basis: dim must be N(N-1)/2.
        for n in [3usize, 4, 5, 6] {
            let so = SoBasis::new(FormFlavor::Antidiagonal, n).unwrap();
            assert_eq!(so.dim(), n * (n - 1) / 2);
            let a = so.generic_matrix();
            assert!(in_so(&a, &so.gram));
        }
    }

    #[test]
    fn jacobi_identity_so5_both_forms() {
        for flavor in [FormFlavor::Orthonormal, FormFlavor::Antidiagonal] {
            let so = SoBasis::new(flavor, 5).unwrap();
            let d = so.dim();
            for a in 0..d {
                for b in 0..d {
                    for c in 0..d {
                        let m = so.elems[a]
                            .commutator(&so.elems[b])
                            .commutator(&so.elems[c])
                            .add(
                                &so.elems[b]
                                    .commutator(&so.elems[c])
                                    .commutator(&so.elems[a]),
                            )
                            .add(
                                &so.elems[c]
                                    .commutator(&so.elems[a])
                                    .commutator(&so.elems[b]),
                            );
                        assert!(m.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn pfaffian_n4_matchings() {
        let so4 = SoBasis::new(FormFlavor::Orthonormal, 4).unwrap();
        let a = so4.generic_matrix();
        let pf = pfaffian(&a).unwrap();
        // a12 a34 - a13 a24 + a14 a23
        let v = |i, j| Poly::var(Var::So(i, j));
        let expected = v(1, 2)
            .mul(&v(3, 4))
            .sub(&v(1, 3).mul(&v(2, 4)))
            .add(&v(1, 4).mul(&v(2, 3)));
        assert_eq!(pf, expected);
    }

    #[test]
    fn pfaffian_standard_block_is_one() {
        let mut m = Mat::<Rat>::zero(6, 6);
        for k in 0..3 {
            m[(2 * k, 2 * k + 1)] = Rat::one();
            m[(2 * k + 1, 2 * k)] = -Rat::one();
        }
        assert_eq!(pfaffian(&m).unwrap(), Rat::one());
    }

    #[test]
    fn rotations_are_orthogonal_and_rank2() {
        let b = gram(FormFlavor::Orthonormal, 5);
        let g = plane_rotation(5, 1, 3, &ratio(2, 3));
        assert!(is_orthogonal(&g, &b));
        assert_eq!(fixed_space_defect(&g), 2);
    }
}
