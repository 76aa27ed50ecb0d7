//! BiHom-associative dialgebras given by structure constants.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{
    concat, in_span, invert, span_basis, sub_vectors, unit_vector, Matrix,
    Tensor3, Vector,
};
use crate::report::{check_indexed, AxiomResult, CheckReport};
use crate::scalar::Scalar;

/// Which of the two products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Product {
    /// `⊣`
    Left,
    /// `⊢`
    Right,
}

/// An identity `(x p1 y) p2 β(z) = α(x) p3 (y p4 z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AssocAxiom {
    pub id: &'static str,
    pub p1: Product,
    pub p2: Product,
    pub p3: Product,
    pub p4: Product,
}

use Product::{Left as L, Right as R};

pub const ASSOC_AXIOMS: [AssocAxiom; 5] = [
    AssocAxiom { id: "eq4", p1: L, p2: L, p3: L, p4: L },
    AssocAxiom { id: "eq5", p1: L, p2: L, p3: L, p4: R },
    AssocAxiom { id: "eq6", p1: R, p2: L, p3: R, p4: L },
    AssocAxiom { id: "eq7", p1: L, p2: R, p3: R, p4: R },
    AssocAxiom { id: "eq8", p1: R, p2: R, p3: R, p4: R },
];

#[derive(Clone, PartialEq, Eq)]
pub struct Dialgebra<S> {
    label: String,
    left: Tensor3<S>,
    right: Tensor3<S>,
    alpha: Matrix<S>,
    beta: Matrix<S>,
}

fn check_shapes<S: Scalar>(
    left: &Tensor3<S>,
    right: &Tensor3<S>,
    alpha: &Matrix<S>,
    beta: &Matrix<S>,
) -> Result<usize> {
    let n = alpha.rows();
    let cube = (n, n, n);
    if !alpha.is_square() || beta.rows() != n || !beta.is_square() {
        return Err(Error::dims("structure maps must be n×n"));
    }
    if left.dims() != cube || right.dims() != cube {
        return Err(Error::dims(format!(
            "product tensors {:?}, {:?} for dimension {n}",
            left.dims(),
            right.dims()
        )));
    }
    Ok(n)
}

impl<S: Scalar> Dialgebra<S> {
    /// Validated constructor; rejects non-commuting structure maps.
    pub fn new(
        label: impl Into<String>,
        left: Tensor3<S>,
        right: Tensor3<S>,
        alpha: Matrix<S>,
        beta: Matrix<S>,
    ) -> Result<Self> {
        check_shapes(&left, &right, &alpha, &beta)?;
        if !alpha.commutes_with(&beta) {
            return Err(Error::MapsDoNotCommute(format!(
                "αβ − βα = {:?}",
                alpha.commutator(&beta)
            )));
        }
        Ok(Dialgebra {
            label: label.into(),
            left,
            right,
            alpha,
            beta,
        })
    }

    /// Shape-checked only. Used for transcribed data whose `commute`
    /// status must be reported rather than refused.
    pub fn new_unchecked(
        label: impl Into<String>,
        left: Tensor3<S>,
        right: Tensor3<S>,
        alpha: Matrix<S>,
        beta: Matrix<S>,
    ) -> Result<Self> {
        check_shapes(&left, &right, &alpha, &beta)?;
        Ok(Dialgebra {
            label: label.into(),
            left,
            right,
            alpha,
            beta,
        })
    }

    /// A single product used for both `⊣` and `⊢`.
    pub fn from_single_product(
        label: impl Into<String>,
        product: Tensor3<S>,
        alpha: Matrix<S>,
        beta: Matrix<S>,
    ) -> Result<Self> {
        Self::new(label, product.clone(), product, alpha, beta)
    }

    /// Zero products with identity structure maps.
    pub fn trivial(n: usize) -> Self {
        Self::zero_with_maps(Matrix::identity(n), Matrix::identity(n)).expect("identity maps commute")
    }

    pub fn zero_with_maps(alpha: Matrix<S>, beta: Matrix<S>) -> Result<Self> {
        let n = alpha.rows();
        Self::new(
            format!("zero{n}"),
            Tensor3::square(n),
            Tensor3::square(n),
            alpha,
            beta,
        )
    }

    pub fn dim(&self) -> usize {
        self.alpha.rows()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn left(&self) -> &Tensor3<S> {
        &self.left
    }

    pub fn right(&self) -> &Tensor3<S> {
        &self.right
    }

    pub fn product(&self, p: Product) -> &Tensor3<S> {
        match p {
            Product::Left => &self.left,
            Product::Right => &self.right,
        }
    }

    pub fn alpha(&self) -> &Matrix<S> {
        &self.alpha
    }

    pub fn beta(&self) -> &Matrix<S> {
        &self.beta
    }

    pub fn mul(&self, p: Product, x: &[S], y: &[S]) -> Vector<S> {
        self.product(p).contract(x, y)
    }

    pub fn mul_left(&self, x: &[S], y: &[S]) -> Vector<S> {
        self.left.contract(x, y)
    }

    pub fn mul_right(&self, x: &[S], y: &[S]) -> Vector<S> {
        self.right.contract(x, y)
    }

    pub fn has_equal_products(&self) -> bool {
        self.left == self.right
    }

    pub fn maps_commute(&self) -> bool {
        self.alpha.commutes_with(&self.beta)
    }

    /// Same products, new structure maps (validated).
    pub fn with_maps(&self, alpha: Matrix<S>, beta: Matrix<S>) -> Result<Self> {
        Self::new(self.label.clone(), self.left.clone(), self.right.clone(), alpha, beta)
    }

    /// `α^k β^l`, allowing negative exponents through exact inverses.
    pub fn map_power(&self, k: i32, l: i32) -> Result<Matrix<S>> {
        let a = self
            .alpha
            .pow_signed(k)
            .map_err(|_| Error::NegativePowerOnSingularMap)?;
        let b = self
            .beta
            .pow_signed(l)
            .map_err(|_| Error::NegativePowerOnSingularMap)?;
        Ok(a.mul(&b))
    }

    /// Reduces every coefficient into another field.
    pub fn convert<T: Scalar>(&self, f: impl Fn(&S) -> Option<T>) -> Option<Dialgebra<T>> {
        Some(Dialgebra {
            label: self.label.clone(),
            left: self.left.try_map(&f)?,
            right: self.right.try_map(&f)?,
            alpha: self.alpha.try_map(&f)?,
            beta: self.beta.try_map(&f)?,
        })
    }
}

impl<S: Scalar> fmt::Debug for Dialgebra<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Dialgebra")
            .field("label", &self.label)
            .field("left", &self.left)
            .field("right", &self.right)
            .field("alpha", &self.alpha)
            .field("beta", &self.beta)
            .finish()
    }
}

/// Residual of one associativity identity on basis triple `(i, j, k)`, given
/// the two products, `α` and `β`. Shared by every "dialgebra-shaped" checker.
pub(crate) fn assoc_residual<S: Scalar>(
    ax: &AssocAxiom,
    left: &Tensor3<S>,
    right: &Tensor3<S>,
    alpha_cols: &[Vector<S>],
    beta_cols: &[Vector<S>],
    t: &[usize],
) -> Vector<S> {
    let prod = |p: Product| match p {
        Product::Left => left,
        Product::Right => right,
    };
    let (i, j, k) = (t[0], t[1], t[2]);
    let xy = prod(ax.p1).row(i, j);
    let lhs = prod(ax.p2).contract(xy, &beta_cols[k]);
    let yz = prod(ax.p4).row(j, k);
    let rhs = prod(ax.p3).contract(&alpha_cols[i], yz);
    sub_vectors(&lhs, &rhs)
}

fn commute_result<S: Scalar>(alpha: &Matrix<S>, beta: &Matrix<S>) -> AxiomResult<S> {
    let ab = alpha.mul(beta);
    let ba = beta.mul(alpha);
    check_indexed("commute", &[alpha.rows()], |t| {
        sub_vectors(&ab.column(t[0]), &ba.column(t[0]))
    })
}

/// Evaluates the commutation identity and the five associativity identities
/// on every basis triple.
pub fn check_axioms<S: Scalar>(d: &Dialgebra<S>) -> CheckReport<S> {
    let n = d.dim();
    let ac = d.alpha.columns();
    let bc = d.beta.columns();
    let mut rep = CheckReport::new(d.label.clone());
    rep.push(commute_result(&d.alpha, &d.beta));
    for ax in &ASSOC_AXIOMS {
        rep.push(check_indexed(ax.id, &[n, n, n], |t| {
            assoc_residual(ax, &d.left, &d.right, &ac, &bc, t)
        }));
    }
    rep
}

/// `f(x∗y) = f(x)∗f(y)` for both products, as one residual of length `2n`.
fn endo_result<S: Scalar>(id: &str, d: &Dialgebra<S>, f: &Matrix<S>) -> AxiomResult<S> {
    let n = d.dim();
    let fc = f.columns();
    check_indexed(id, &[n, n], |t| {
        let (i, j) = (t[0], t[1]);
        let l = sub_vectors(&f.apply(d.left.row(i, j)), &d.left.contract(&fc[i], &fc[j]));
        let r = sub_vectors(&f.apply(d.right.row(i, j)), &d.right.contract(&fc[i], &fc[j]));
        concat(&l, &r)
    })
}

/// Whether `α` and `β` are endomorphisms of both products.
pub fn check_multiplicative<S: Scalar>(d: &Dialgebra<S>) -> CheckReport<S> {
    let mut rep = CheckReport::new(d.label.clone());
    rep.push(endo_result("mult-α", d, &d.alpha));
    rep.push(endo_result("mult-β", d, &d.beta));
    rep
}

pub fn is_multiplicative<S: Scalar>(d: &Dialgebra<S>) -> bool {
    check_multiplicative(d).passed()
}

/// Multiplicative with invertible structure maps.
pub fn is_regular<S: Scalar>(d: &Dialgebra<S>) -> bool {
    d.alpha.rank() == d.dim() && d.beta.rank() == d.dim() && is_multiplicative(d)
}

pub(crate) fn require_regular<S: Scalar>(d: &Dialgebra<S>) -> Result<(Matrix<S>, Matrix<S>)> {
    if !is_regular(d) {
        return Err(Error::NotRegular);
    }
    Ok((invert(&d.alpha)?, invert(&d.beta)?))
}

/// Checks `f∘α = α′∘f`, `f∘β = β′∘f` and both product conditions.
pub fn check_morphism<S: Scalar>(
    f: &Matrix<S>,
    source: &Dialgebra<S>,
    target: &Dialgebra<S>,
) -> Result<CheckReport<S>> {
    let (n, m) = (source.dim(), target.dim());
    if f.rows() != m || f.cols() != n {
        return Err(Error::dims(format!(
            "map is {}x{}, expected {m}x{n}",
            f.rows(),
            f.cols()
        )));
    }
    let fa = f.mul(&source.alpha);
    let af = target.alpha.mul(f);
    let fb = f.mul(&source.beta);
    let bf = target.beta.mul(f);
    let fc = f.columns();
    let mut rep = CheckReport::new(format!("{} -> {}", source.label, target.label));
    rep.push(check_indexed("map-α", &[n], |t| {
        sub_vectors(&fa.column(t[0]), &af.column(t[0]))
    }));
    rep.push(check_indexed("map-β", &[n], |t| {
        sub_vectors(&fb.column(t[0]), &bf.column(t[0]))
    }));
    for (id, p) in [("hom-⊣", Product::Left), ("hom-⊢", Product::Right)] {
        rep.push(check_indexed(id, &[n, n], |t| {
            let (i, j) = (t[0], t[1]);
            sub_vectors(
                &f.apply(source.product(p).row(i, j)),
                &target.product(p).contract(&fc[i], &fc[j]),
            )
        }));
    }
    Ok(rep)
}

pub fn is_morphism<S: Scalar>(f: &Matrix<S>, source: &Dialgebra<S>, target: &Dialgebra<S>) -> bool {
    check_morphism(f, source, target).is_ok_and(|r| r.passed())
}

/// A linear subspace with an independent spanning set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<S> {
    ambient: usize,
    basis: Vec<Vector<S>>,
}

impl<S: Scalar> Subspace<S> {
    /// Span of arbitrary vectors; dependent ones are dropped.
    pub fn span(ambient: usize, vectors: &[Vector<S>]) -> Self {
        assert!(vectors.iter().all(|v| v.len() == ambient), "vector length");
        Subspace {
            ambient,
            basis: span_basis(vectors, ambient),
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| unit_vector(ambient, i)).collect(),
        }
    }

    /// Kernel of a linear map out of this space's ambient.
    pub fn kernel(f: &Matrix<S>) -> Self {
        Subspace {
            ambient: f.cols(),
            basis: crate::linalg::nullspace(f),
        }
    }

    pub fn image(f: &Matrix<S>) -> Self {
        Self::span(f.rows(), &f.columns())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector<S>] {
        &self.basis
    }

    pub fn contains(&self, v: &[S]) -> bool {
        in_span(&self.basis, v)
    }

    pub fn contains_subspace(&self, other: &Subspace<S>) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn is_invariant(&self, f: &Matrix<S>) -> bool {
        self.basis.iter().all(|v| self.contains(&f.apply(v)))
    }

    pub fn sum(&self, other: &Subspace<S>) -> Subspace<S> {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &all)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `D ∗ I ⊂ I`
    Left,
    /// `I ∗ D ⊂ I`
    Right,
    TwoSided,
}

/// Closure data behind [`is_ideal`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealCheck {
    pub alpha_stable: bool,
    /// Not in the printed definition; needed for the quotient maps.
    pub beta_stable: bool,
    pub absorbs_left: bool,
    pub absorbs_right: bool,
}

impl IdealCheck {
    pub fn is_ideal(&self, side: Side) -> bool {
        let absorbs = match side {
            Side::Left => self.absorbs_left,
            Side::Right => self.absorbs_right,
            Side::TwoSided => self.absorbs_left && self.absorbs_right,
        };
        self.alpha_stable && self.beta_stable && absorbs
    }
}

pub fn ideal_check<S: Scalar>(s: &Subspace<S>, d: &Dialgebra<S>) -> IdealCheck {
    assert_eq!(s.ambient(), d.dim(), "subspace ambient dimension");
    let n = d.dim();
    let absorbs = |inside_right: bool| {
        s.basis().iter().all(|y| {
            (0..n).all(|i| {
                let x = unit_vector::<S>(n, i);
                [Product::Left, Product::Right].iter().all(|&p| {
                    let v = if inside_right {
                        d.mul(p, &x, y)
                    } else {
                        d.mul(p, y, &x)
                    };
                    s.contains(&v)
                })
            })
        })
    };
    IdealCheck {
        alpha_stable: s.is_invariant(d.alpha()),
        beta_stable: s.is_invariant(d.beta()),
        absorbs_left: absorbs(true),
        absorbs_right: absorbs(false),
    }
}

pub fn is_ideal<S: Scalar>(s: &Subspace<S>, d: &Dialgebra<S>, side: Side) -> bool {
    ideal_check(s, d).is_ideal(side)
}

/// Stable under both maps and closed under both products.
pub fn is_subalgebra<S: Scalar>(s: &Subspace<S>, d: &Dialgebra<S>) -> bool {
    assert_eq!(s.ambient(), d.dim(), "subspace ambient dimension");
    s.is_invariant(d.alpha())
        && s.is_invariant(d.beta())
        && s.basis().iter().all(|x| {
            s.basis().iter().all(|y| {
                s.contains(&d.mul_left(x, y)) && s.contains(&d.mul_right(x, y))
            })
        })
}

/// Coordinates modulo a subspace: returns the complement index set and the
/// projection matrix `D → D/I` onto it.
pub(crate) fn quotient_projection<S: Scalar>(i: &Subspace<S>) -> (Vec<usize>, Matrix<S>) {
    let n = i.ambient();
    let mut cols = i.basis().to_vec();
    let mut complement = Vec::new();
    for k in 0..n {
        let e = unit_vector::<S>(n, k);
        if !in_span(&cols, &e) {
            cols.push(e);
            complement.push(k);
        }
    }
    let r = i.dim();
    let change = Matrix::from_columns(n, &cols);
    let inv = invert(&change).expect("basis of the ambient space");
    let proj = Matrix::from_fn(n - r, n, |a, b| inv.get(r + a, b).clone());
    (complement, proj)
}

/// The quotient by a two-sided ideal stable under both maps, on the basis
/// given by the images of the standard vectors outside `I`.
pub fn quotient<S: Scalar>(d: &Dialgebra<S>, i: &Subspace<S>) -> Result<Dialgebra<S>> {
    if i.ambient() != d.dim() {
        return Err(Error::dims("subspace ambient dimension"));
    }
    if !is_ideal(i, d, Side::TwoSided) {
        return Err(Error::NotAnIdeal);
    }
    let (comp, proj) = quotient_projection(i);
    let q = comp.len();
    let pick = |f: &Matrix<S>| Matrix::from_fn(q, q, |a, b| proj.apply(&f.column(comp[b]))[a].clone());
    let prod = |t: &Tensor3<S>| Tensor3::from_pairs(q, q, q, |a, b| proj.apply(t.row(comp[a], comp[b])));
    Dialgebra::new(
        format!("{}/I", d.label),
        prod(&d.left),
        prod(&d.right),
        pick(&d.alpha),
        pick(&d.beta),
    )
}

pub(crate) fn tensor_block_sum<S: Scalar>(a: &Tensor3<S>, b: &Tensor3<S>) -> Tensor3<S> {
    let (n, _, _) = a.dims();
    let (m, _, _) = b.dims();
    let mut t = Tensor3::square(n + m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                t.set(i, j, k, a.get(i, j, k).clone());
            }
        }
    }
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                t.set(n + i, n + j, n + k, b.get(i, j, k).clone());
            }
        }
    }
    t
}

/// `A ⊕ B` with componentwise products and block-diagonal maps.
pub fn direct_sum<S: Scalar>(a: &Dialgebra<S>, b: &Dialgebra<S>) -> Dialgebra<S> {
    Dialgebra {
        label: format!("{}+{}", a.label, b.label),
        left: tensor_block_sum(&a.left, &b.left),
        right: tensor_block_sum(&a.right, &b.right),
        alpha: a.alpha.block_diag(&b.alpha),
        beta: a.beta.block_diag(&b.beta),
    }
}

/// The graph `{(x, ξx)}` inside `A ⊕ B`.
pub fn graph<S: Scalar>(xi: &Matrix<S>, a: &Dialgebra<S>, b: &Dialgebra<S>) -> Result<Subspace<S>> {
    if xi.rows() != b.dim() || xi.cols() != a.dim() {
        return Err(Error::dims("graph map shape"));
    }
    let n = a.dim();
    let vs: Vec<Vector<S>> = (0..n)
        .map(|i| concat(&unit_vector(n, i), &xi.column(i)))
        .collect();
    Ok(Subspace::span(n + b.dim(), &vs))
}

pub fn graph_is_subalgebra<S: Scalar>(xi: &Matrix<S>, a: &Dialgebra<S>, b: &Dialgebra<S>) -> Result<bool> {
    let g = graph(xi, a, b)?;
    Ok(is_subalgebra(&g, &direct_sum(a, b)))
}

/// `M_k(D)`: basis `E_ab ⊗ e_p` at index `(a·k + b)·n + p`.
pub fn matrix_dialgebra<S: Scalar>(d: &Dialgebra<S>, k: usize) -> Result<Dialgebra<S>> {
    if k == 0 {
        return Err(Error::InvalidArgument("matrix size must be at least 1".into()));
    }
    let n = d.dim();
    let big = k * k * n;
    let idx = |a: usize, b: usize, p: usize| (a * k + b) * n + p;
    let lift = |t: &Tensor3<S>| {
        let mut out = Tensor3::square(big);
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    for p in 0..n {
                        for q in 0..n {
                            for r in 0..n {
                                let v = t.get(p, q, r);
                                if !v.is_zero() {
                                    out.set(idx(a, b, p), idx(b, c, q), idx(a, c, r), v.clone());
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    };
    let lift_map = |f: &Matrix<S>| {
        let mut out = Matrix::zeros(big, big);
        for a in 0..k {
            for b in 0..k {
                for p in 0..n {
                    for r in 0..n {
                        out.set(idx(a, b, r), idx(a, b, p), f.get(r, p).clone());
                    }
                }
            }
        }
        out
    };
    Dialgebra::new(
        format!("M{k}({})", d.label),
        lift(&d.left),
        lift(&d.right),
        lift_map(&d.alpha),
        lift_map(&d.beta),
    )
}

/// Transports the structure along an invertible `σ`, so that `σ` becomes an
/// isomorphism `D → σ(D)`.
pub fn transport<S: Scalar>(d: &Dialgebra<S>, sigma: &Matrix<S>) -> Result<Dialgebra<S>> {
    let inv = invert(sigma)?;
    let n = d.dim();
    if sigma.rows() != n {
        return Err(Error::dims("transport map shape"));
    }
    let ic = inv.columns();
    let prod = |t: &Tensor3<S>| Tensor3::from_pairs(n, n, n, |i, j| sigma.apply(&t.contract(&ic[i], &ic[j])));
    Dialgebra::new(
        format!("σ({})", d.label),
        prod(&d.left),
        prod(&d.right),
        sigma.mul(&d.alpha).mul(&inv),
        sigma.mul(&d.beta).mul(&inv),
    )
}

/// Left annihilator of `⊣`: `{x : x ⊣ y = 0 ∀y}`.
pub fn left_annihilator_left<S: Scalar>(d: &Dialgebra<S>) -> Subspace<S> {
    annihilator(d, &[(Product::Left, true)])
}

/// Right annihilator of `⊢`: `{x : y ⊢ x = 0 ∀y}`.
pub fn right_annihilator_right<S: Scalar>(d: &Dialgebra<S>) -> Subspace<S> {
    annihilator(d, &[(Product::Right, false)])
}

/// `{z : z⊣x = x⊣z = z⊢x = x⊢z = 0 ∀x}`.
pub fn center<S: Scalar>(d: &Dialgebra<S>) -> Subspace<S> {
    annihilator(
        d,
        &[
            (Product::Left, true),
            (Product::Left, false),
            (Product::Right, true),
            (Product::Right, false),
        ],
    )
}

/// Common kernel of `z ↦ z∗e_i` (`z_on_left`) or `z ↦ e_i∗z` over all `i`.
fn annihilator<S: Scalar>(d: &Dialgebra<S>, conds: &[(Product, bool)]) -> Subspace<S> {
    let n = d.dim();
    let mut rows: Vec<Vec<S>> = Vec::new();
    for &(p, z_on_left) in conds {
        let t = d.product(p);
        for i in 0..n {
            for k in 0..n {
                rows.push(
                    (0..n)
                        .map(|z| {
                            if z_on_left {
                                t.get(z, i, k).clone()
                            } else {
                                t.get(i, z, k).clone()
                            }
                        })
                        .collect(),
                );
            }
        }
    }
    if rows.is_empty() {
        return Subspace::full(n);
    }
    Subspace::kernel(&Matrix::from_rows(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{qi, Gf2, Q};

    /// e1⊣e2 = e1, e1⊢e2 = e1, e2⊢e1 = e1, e2⊢e2 = e1, α(e2) = β(e2) = e1.
    fn alg3() -> Dialgebra<Q> {
        let mut l = Tensor3::square(2);
        let mut r = Tensor3::square(2);
        l.set(0, 1, 0, qi(1));
        r.set(0, 1, 0, qi(1));
        r.set(1, 0, 0, qi(1));
        r.set(1, 1, 0, qi(1));
        let mut a = Matrix::zeros(2, 2);
        a.set(0, 1, qi(1));
        Dialgebra::new("alg3", l, r, a.clone(), a).unwrap()
    }

    #[test]
    fn trivial_passes_everything() {
        let d = Dialgebra::<Q>::trivial(3);
        assert!(check_axioms(&d).passed());
        assert!(is_regular(&d));
    }

    #[test]
    fn alg3_passes_and_mutation_fails_eq4() {
        let d = alg3();
        assert!(check_axioms(&d).passed());
        assert!(is_multiplicative(&d));
        assert!(!is_regular(&d));
        let mut l = d.left().clone();
        l.set(0, 0, 0, qi(1));
        let m = Dialgebra::new("mut", l, d.right().clone(), d.alpha().clone(), d.beta().clone()).unwrap();
        let rep = check_axioms(&m);
        let eq4 = rep.get("eq4").unwrap();
        assert!(!eq4.pass);
        assert_eq!(eq4.witness, Some(vec![1, 1, 2]));
        assert_eq!(eq4.residual, Some(vec![qi(1), qi(0)]));
    }

    #[test]
    fn constructor_rejects_noncommuting_maps() {
        let a = Matrix::from_rows(vec![vec![qi(0), qi(1)], vec![qi(0), qi(0)]]);
        let b = Matrix::from_rows(vec![vec![qi(0), qi(0)], vec![qi(1), qi(0)]]);
        let r = Dialgebra::zero_with_maps(a, b);
        assert!(matches!(r, Err(Error::MapsDoNotCommute(_))));
    }

    #[test]
    fn regular_diagonal_zero() {
        let d = Dialgebra::zero_with_maps(Matrix::diagonal(&[qi(1), qi(2)]), Matrix::diagonal(&[qi(1), qi(2)])).unwrap();
        assert!(is_regular(&d));
    }

    #[test]
    fn ideals_and_quotient() {
        let d = alg3();
        assert!(is_ideal(&Subspace::zero(2), &d, Side::TwoSided));
        assert!(is_ideal(&Subspace::full(2), &d, Side::TwoSided));
        let e1 = Subspace::span(2, &[vec![qi(1), qi(0)]]);
        assert!(is_ideal(&e1, &d, Side::TwoSided));
        let q = quotient(&d, &e1).unwrap();
        assert_eq!(q.dim(), 1);
        assert!(q.left().is_zero() && q.right().is_zero());
        assert!(check_axioms(&q).passed());
        let e2 = Subspace::span(2, &[vec![qi(0), qi(1)]]);
        assert_eq!(quotient(&d, &e2), Err(Error::NotAnIdeal));
        assert_eq!(quotient(&d, &Subspace::full(2)).unwrap().dim(), 0);
        assert_eq!(quotient(&d, &Subspace::zero(2)).unwrap().left(), d.left());
    }

    #[test]
    fn direct_sums_and_graphs() {
        let d = alg3();
        let s = direct_sum(&d, &d);
        assert_eq!(s.dim(), 4);
        assert!(check_axioms(&s).passed());
        let t0 = Dialgebra::<Q>::trivial(0);
        assert_eq!(direct_sum(&d, &t0).left(), d.left());
        let z = Dialgebra::<Q>::trivial(2);
        let xi = Matrix::zeros(2, 2);
        assert!(graph_is_subalgebra(&xi, &d, &z).unwrap());
        assert!(is_morphism(&xi, &d, &z));
    }

    #[test]
    fn matrix_dialgebra_checks() {
        let d = alg3();
        let m1 = matrix_dialgebra(&d, 1).unwrap();
        assert_eq!(m1.left(), d.left());
        let m2 = matrix_dialgebra(&d, 2).unwrap();
        assert_eq!(m2.dim(), 8);
        assert!(check_axioms(&m2).passed());
        let z = matrix_dialgebra(&Dialgebra::<Q>::trivial(1), 2).unwrap();
        assert!(z.left().is_zero() && z.dim() == 4);
    }

    #[test]
    fn alpha_is_a_morphism_of_alg3() {
        let d = alg3();
        assert!(is_morphism(d.alpha(), &d, &d));
        let kernel = Subspace::kernel(d.alpha());
        assert!(is_ideal(&kernel, &d, Side::TwoSided));
    }

    #[test]
    fn field_conversion() {
        let d = alg3();
        let g: Dialgebra<Gf2> = d.convert(Gf2::from_rational).unwrap();
        assert!(check_axioms(&g).passed());
    }

}
