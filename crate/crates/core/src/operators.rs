//! Constructions "dialgebra + operator → dialgebra": Yau twists, centroid
//! twists, bimodule dialgebras, Rota-Baxter, Nijenhuis and averaging twists.
//!
//! Predicates and constructions are separate. Every construction re-checks
//! its output and returns [`Error::ResultFailsAxioms`] instead of an
//! unverified algebra.

use rayon::prelude::*;

use crate::bracket::{lie_from_associative, BracketAlgebra};
use crate::dialgebra::{
    check_axioms, check_morphism, left_annihilator_left, right_annihilator_right,
    Dialgebra, Product, Subspace,
};
use crate::error::{Error, Result};
use crate::linalg::{add_vectors, concat, sub_vectors, Matrix, Tensor3, Vector};
use crate::report::{check_indexed, CheckReport};
use crate::scalar::Scalar;

/// A labelled square (or rectangular, for module maps) matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearOperator<S> {
    pub label: String,
    pub matrix: Matrix<S>,
}

impl<S: Scalar> std::fmt::Debug for LinearOperator<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LinearOperator")
            .field("label", &self.label)
            .field("matrix", &self.matrix)
            .finish()
    }
}

impl<S: Scalar> LinearOperator<S> {
    pub fn new(label: impl Into<String>, matrix: Matrix<S>) -> Self {
        LinearOperator {
            label: label.into(),
            matrix,
        }
    }
}

pub(crate) fn verified<S: Scalar>(construction: &str, d: Dialgebra<S>) -> Result<Dialgebra<S>> {
    let rep = check_axioms(&d);
    match rep.first_failure() {
        None => Ok(d),
        Some(f) => Err(Error::ResultFailsAxioms {
            construction: construction.to_string(),
            axiom: f.axiom.clone(),
            witness: f.witness.clone().unwrap_or_default(),
        }),
    }
}

/// Ensures `f` commutes with both structure maps.
fn commutes_with_maps<S: Scalar>(f: &Matrix<S>, d: &Dialgebra<S>) -> bool {
    f.commutes_with(d.alpha()) && f.commutes_with(d.beta())
}

fn require_square<S: Scalar>(f: &Matrix<S>, d: &Dialgebra<S>) -> Result<()> {
    if f.rows() != d.dim() || f.cols() != d.dim() {
        return Err(Error::dims(format!(
            "operator is {}x{}, algebra has dimension {}",
            f.rows(),
            f.cols(),
            d.dim()
        )));
    }
    Ok(())
}

/// Product tensor `(x, y) ↦ f(x) ∗ g(y)`.
pub(crate) fn precompose<S: Scalar>(t: &Tensor3<S>, f: &Matrix<S>, g: &Matrix<S>) -> Tensor3<S> {
    let n = f.rows();
    let fc = f.columns();
    let gc = g.columns();
    Tensor3::from_pairs(n, n, n, |i, j| t.contract(&fc[i], &gc[j]))
}

/// Product tensor `(x, y) ↦ h(x ∗ y)`.
pub(crate) fn postcompose<S: Scalar>(t: &Tensor3<S>, h: &Matrix<S>) -> Tensor3<S> {
    let n = h.rows();
    Tensor3::from_pairs(n, n, n, |i, j| h.apply(t.row(i, j)))
}

/// `D_(α′,β′)` without verification.
pub fn yau_twist_unchecked<S: Scalar>(d: &Dialgebra<S>, a2: &Matrix<S>, b2: &Matrix<S>) -> Result<Dialgebra<S>> {
    Dialgebra::new_unchecked(
        format!("{}_tw", d.label()),
        precompose(d.left(), a2, b2),
        precompose(d.right(), a2, b2),
        d.alpha().mul(a2),
        d.beta().mul(b2),
    )
}

/// Twists both products by `α′ ⊗ β′` and multiplies the structure maps.
pub fn yau_twist<S: Scalar>(d: &Dialgebra<S>, a2: &Matrix<S>, b2: &Matrix<S>) -> Result<Dialgebra<S>> {
    require_square(a2, d)?;
    require_square(b2, d)?;
    for (name, f) in [("α′", a2), ("β′", b2)] {
        if let Some(fail) = check_morphism(f, d, d)?.first_failure() {
            return Err(Error::NotAMorphism(format!("{name} fails {}", fail.axiom)));
        }
    }
    let maps = [d.alpha(), a2, d.beta(), b2];
    for (i, f) in maps.iter().enumerate() {
        for g in &maps[i + 1..] {
            if !f.commutes_with(g) {
                return Err(Error::MapsDoNotCommute("α, α′, β, β′ must commute pairwise".into()));
            }
        }
    }
    verified("yau_twist", yau_twist_unchecked(d, a2, b2)?)
}

/// Fully checked `(α^k, β^l)`-centroid report: commutation with the maps and
/// the four sliding identities.
pub fn centroid_report<S: Scalar>(t: &Matrix<S>, k: i32, l: i32, d: &Dialgebra<S>) -> Result<CheckReport<S>> {
    require_square(t, d)?;
    let n = d.dim();
    let g = d.map_power(k, l)?;
    let tc = t.columns();
    let gc = g.columns();
    let mut rep = CheckReport::new(format!("centroid({})", d.label()));
    rep.push(check_indexed("commute-α", &[n], |c| {
        sub_vectors(&t.mul(d.alpha()).column(c[0]), &d.alpha().mul(t).column(c[0]))
    }));
    rep.push(check_indexed("commute-β", &[n], |c| {
        sub_vectors(&t.mul(d.beta()).column(c[0]), &d.beta().mul(t).column(c[0]))
    }));
    for (id, p) in [("centroid-⊣", Product::Left), ("centroid-⊢", Product::Right)] {
        let prod = d.product(p);
        rep.push(check_indexed(id, &[n, n], |c| {
            let (i, j) = (c[0], c[1]);
            let mid = prod.contract(&tc[i], &tc[j]);
            let a = prod.contract(&tc[i], &gc[j]);
            let b = prod.contract(&gc[i], &tc[j]);
            concat(&sub_vectors(&a, &mid), &sub_vectors(&b, &mid))
        }));
    }
    Ok(rep)
}

pub fn is_centroid_element<S: Scalar>(t: &Matrix<S>, k: i32, l: i32, d: &Dialgebra<S>) -> Result<bool> {
    Ok(centroid_report(t, k, l, d)?.passed())
}

/// `Im(φ − ψ) ⊂ Z_⊣(A) ∩ Z_⊢(A)`.
pub fn centroid_image_condition<S: Scalar>(d: &Dialgebra<S>, phi: &Matrix<S>, psi: &Matrix<S>) -> bool {
    let im = Subspace::image(&phi.sub(psi));
    left_annihilator_left(d).contains_subspace(&im) && right_annihilator_right(d).contains_subspace(&im)
}

/// `x ◁ y = φ(x) ⊣ y`, `x ▷ y = ψ(x) ⊢ y`, built without any check.
pub fn centroid_pair_unchecked<S: Scalar>(d: &Dialgebra<S>, phi: &Matrix<S>, psi: &Matrix<S>) -> Result<Dialgebra<S>> {
    let id = Matrix::identity(d.dim());
    Dialgebra::new_unchecked(
        format!("{}_φψ", d.label()),
        precompose(d.left(), phi, &id),
        precompose(d.right(), psi, &id),
        d.alpha().clone(),
        d.beta().clone(),
    )
}

pub fn centroid_twist_pair<S: Scalar>(d: &Dialgebra<S>, phi: &Matrix<S>, psi: &Matrix<S>) -> Result<Dialgebra<S>> {
    if !is_centroid_element(phi, 0, 0, d)? || !is_centroid_element(psi, 0, 0, d)? {
        return Err(Error::NotCentroid);
    }
    if !phi.commutes_with(psi) {
        return Err(Error::MapsDoNotCommute("φψ ≠ ψφ".into()));
    }
    if !centroid_image_condition(d, phi, psi) {
        let forced = centroid_pair_unchecked(d, phi, psi)?;
        let diag = match check_axioms(&forced).first_failure() {
            Some(f) => format!("the twisted algebra fails {}", f.axiom),
            None => "the twisted algebra still passes every axiom".to_string(),
        };
        return Err(Error::ImageConditionFails(diag));
    }
    verified("centroid_twist_pair", centroid_pair_unchecked(d, phi, psi)?)
}

/// `x ◁ y = θ(x)·y`, `x ▷ y = x·θ(y)` on an algebra with a single product.
pub fn centroid_dialgebra_from_associative<S: Scalar>(a: &Dialgebra<S>, theta: &Matrix<S>) -> Result<Dialgebra<S>> {
    if !a.has_equal_products() {
        return Err(Error::ProductsDiffer);
    }
    if !is_centroid_element(theta, 0, 0, a)? {
        return Err(Error::NotCentroid);
    }
    let id = Matrix::identity(a.dim());
    let d = Dialgebra::new(
        format!("{}_θ", a.label()),
        precompose(a.left(), theta, &id),
        precompose(a.left(), &id, theta),
        a.alpha().clone(),
        a.beta().clone(),
    )?;
    verified("centroid_dialgebra_from_associative", d)
}

/// A bimodule over an algebra with a single product `·`.
#[derive(Clone, PartialEq, Eq)]
pub struct BiHomBimodule<S> {
    alpha_m: Matrix<S>,
    beta_m: Matrix<S>,
    /// `x ∗_L m`, shape `(n, m, m)`.
    left_act: Tensor3<S>,
    /// `m ∗_R x`, shape `(m, n, m)`.
    right_act: Tensor3<S>,
}

impl<S: Scalar> std::fmt::Debug for BiHomBimodule<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BiHomBimodule")
            .field("alpha_m", &self.alpha_m)
            .field("beta_m", &self.beta_m)
            .field("left_act", &self.left_act)
            .field("right_act", &self.right_act)
            .finish()
    }
}

impl<S: Scalar> BiHomBimodule<S> {
    /// Checks commutation and the three bimodule identities over `a`.
    pub fn new(
        a: &Dialgebra<S>,
        alpha_m: Matrix<S>,
        beta_m: Matrix<S>,
        left_act: Tensor3<S>,
        right_act: Tensor3<S>,
    ) -> Result<Self> {
        if !a.has_equal_products() {
            return Err(Error::ProductsDiffer);
        }
        let (n, m) = (a.dim(), alpha_m.rows());
        if left_act.dims() != (n, m, m) || right_act.dims() != (m, n, m) || beta_m.rows() != m {
            return Err(Error::dims("bimodule shapes"));
        }
        if !alpha_m.commutes_with(&beta_m) {
            return Err(Error::NotABimodule("α_M β_M ≠ β_M α_M".into()));
        }
        let module = BiHomBimodule {
            alpha_m,
            beta_m,
            left_act,
            right_act,
        };
        if let Some(f) = module.check(a).first_failure() {
            return Err(Error::NotABimodule(format!(
                "{} fails at {:?}",
                f.axiom,
                f.witness.clone().unwrap_or_default()
            )));
        }
        Ok(module)
    }

    /// The algebra acting on itself by its product.
    pub fn regular(a: &Dialgebra<S>) -> Result<Self> {
        Self::new(
            a,
            a.alpha().clone(),
            a.beta().clone(),
            a.left().clone(),
            a.left().clone(),
        )
    }

    pub fn dim(&self) -> usize {
        self.alpha_m.rows()
    }

    pub fn alpha_m(&self) -> &Matrix<S> {
        &self.alpha_m
    }

    pub fn beta_m(&self) -> &Matrix<S> {
        &self.beta_m
    }

    pub fn left_act(&self) -> &Tensor3<S> {
        &self.left_act
    }

    pub fn right_act(&self) -> &Tensor3<S> {
        &self.right_act
    }

    fn check(&self, a: &Dialgebra<S>) -> CheckReport<S> {
        let (n, m) = (a.dim(), self.dim());
        let ac = a.alpha().columns();
        let bc = a.beta().columns();
        let amc = self.alpha_m.columns();
        let bmc = self.beta_m.columns();
        let dot = a.left();
        let (la, ra) = (&self.left_act, &self.right_act);
        let mut rep = CheckReport::new("bimodule");
        // α(x) ∗L (y ∗L m) = (x·y) ∗L β_M(m)
        rep.push(check_indexed("bimod-1", &[n, n, m], |t| {
            sub_vectors(
                &la.contract(&ac[t[0]], la.row(t[1], t[2])),
                &la.contract(dot.row(t[0], t[1]), &bmc[t[2]]),
            )
        }));
        // α(x) ∗L (m ∗R y) = (x ∗L m) ∗R β(y)
        rep.push(check_indexed("bimod-2", &[n, m, n], |t| {
            sub_vectors(
                &la.contract(&ac[t[0]], ra.row(t[1], t[2])),
                &ra.contract(la.row(t[0], t[1]), &bc[t[2]]),
            )
        }));
        // α_M(m) ∗R (x·y) = (m ∗R x) ∗R β(y)
        rep.push(check_indexed("bimod-3", &[m, n, n], |t| {
            sub_vectors(
                &ra.contract(&amc[t[0]], dot.row(t[1], t[2])),
                &ra.contract(ra.row(t[0], t[1]), &bc[t[2]]),
            )
        }));
        rep
    }
}

/// Whether `f: M → A` intertwines the maps and both actions.
pub fn is_bimodule_morphism<S: Scalar>(a: &Dialgebra<S>, module: &BiHomBimodule<S>, f: &Matrix<S>) -> Result<bool> {
    let (n, m) = (a.dim(), module.dim());
    if f.rows() != n || f.cols() != m {
        return Err(Error::dims("module map must be n×m"));
    }
    if a.alpha().mul(f) != f.mul(&module.alpha_m) || a.beta().mul(f) != f.mul(&module.beta_m) {
        return Ok(false);
    }
    let fc = f.columns();
    let dot = a.left();
    let ok = (0..n).all(|x| {
        (0..m).all(|mm| {
            let ex = crate::linalg::unit_vector::<S>(n, x);
            f.apply(module.left_act.row(x, mm)) == dot.contract(&ex, &fc[mm])
                && f.apply(module.right_act.row(mm, x)) == dot.contract(&fc[mm], &ex)
        })
    });
    Ok(ok)
}

/// Dialgebra on `M` with `m ◁ n = f(m) ∗_L n` and `m ▷ n = m ∗_R f(n)`.
pub fn bimodule_dialgebra<S: Scalar>(a: &Dialgebra<S>, module: &BiHomBimodule<S>, f: &Matrix<S>) -> Result<Dialgebra<S>> {
    if !a.has_equal_products() {
        return Err(Error::ProductsDiffer);
    }
    if !is_bimodule_morphism(a, module, f)? {
        return Err(Error::NotAModuleMorphism("f does not intertwine maps and actions".into()));
    }
    let m = module.dim();
    let fc = f.columns();
    let left = Tensor3::from_pairs(m, m, m, |i, j| {
        module.left_act.contract(&fc[i], &crate::linalg::unit_vector(m, j))
    });
    let right = Tensor3::from_pairs(m, m, m, |i, j| {
        module.right_act.contract(&crate::linalg::unit_vector(m, i), &fc[j])
    });
    let d = Dialgebra::new(
        format!("{}_M", a.label()),
        left,
        right,
        module.alpha_m.clone(),
        module.beta_m.clone(),
    )?;
    verified("bimodule_dialgebra", d)
}

/// Residual of `O(x)∗O(y) − O(inner(x, y))` for one product.
fn operator_identity<S: Scalar>(
    id: &str,
    r: &Matrix<S>,
    prod: &Tensor3<S>,
    inner: impl Fn(usize, usize) -> Vector<S> + Sync,
) -> crate::report::AxiomResult<S> {
    let n = r.rows();
    let rc = r.columns();
    check_indexed(id, &[n, n], |t| {
        sub_vectors(&prod.contract(&rc[t[0]], &rc[t[1]]), &r.apply(&inner(t[0], t[1])))
    })
}

/// `R(x)∗R(y) = R(R(x)∗y + x∗R(y))` for both products.
pub fn rota_baxter_report<S: Scalar>(r: &Matrix<S>, d: &Dialgebra<S>) -> Result<CheckReport<S>> {
    require_square(r, d)?;
    if !commutes_with_maps(r, d) {
        return Err(Error::DoesNotCommuteWithStructureMaps);
    }
    let n = d.dim();
    let rc = r.columns();
    let mut rep = CheckReport::new(format!("rota-baxter({})", d.label()));
    for (id, p) in [("rb-⊣", Product::Left), ("rb-⊢", Product::Right)] {
        let prod = d.product(p);
        rep.push(operator_identity(id, r, prod, |i, j| {
            add_vectors(
                &prod.contract(&rc[i], &crate::linalg::unit_vector(n, j)),
                &prod.contract(&crate::linalg::unit_vector(n, i), &rc[j]),
            )
        }));
    }
    Ok(rep)
}

pub fn is_rota_baxter<S: Scalar>(r: &Matrix<S>, d: &Dialgebra<S>) -> Result<bool> {
    Ok(rota_baxter_report(r, d)?.passed())
}

/// `x ∗ y ↦ R(x) ∗ y + x ∗ R(y)`.
fn rb_product<S: Scalar>(t: &Tensor3<S>, r: &Matrix<S>) -> Tensor3<S> {
    let id = Matrix::identity(r.rows());
    precompose(t, r, &id).add(&precompose(t, &id, r))
}

pub fn rota_baxter_twist_unchecked<S: Scalar>(r: &Matrix<S>, d: &Dialgebra<S>) -> Result<Dialgebra<S>> {
    Dialgebra::new_unchecked(
        format!("{}_R", d.label()),
        rb_product(d.left(), r),
        rb_product(d.right(), r),
        d.alpha().clone(),
        d.beta().clone(),
    )
}

pub fn rota_baxter_twist<S: Scalar>(r: &Matrix<S>, d: &Dialgebra<S>) -> Result<Dialgebra<S>> {
    if !is_rota_baxter(r, d)? {
        return Err(Error::NotRotaBaxter);
    }
    verified("rota_baxter_twist", rota_baxter_twist_unchecked(r, d)?)
}

/// The single product `x ◁ y + x ▷ y`, embedded with `⊣ = ⊢`, unchecked.
pub fn rb_sum_product_unchecked<S: Scalar>(d: &Dialgebra<S>, r: &Matrix<S>) -> Result<Dialgebra<S>> {
    let sum = rb_product(d.left(), r).add(&rb_product(d.right(), r));
    Dialgebra::new_unchecked(
        format!("{}_R*", d.label()),
        sum.clone(),
        sum,
        d.alpha().clone(),
        d.beta().clone(),
    )
}

/// Sum product of the Rota-Baxter twist; refuses when it is not
/// BiHom-associative.
pub fn rb_sum_product<S: Scalar>(d: &Dialgebra<S>, r: &Matrix<S>) -> Result<Dialgebra<S>> {
    if !is_rota_baxter(r, d)? {
        return Err(Error::NotRotaBaxter);
    }
    verified("rb_sum_product", rb_sum_product_unchecked(d, r)?)
}

/// `[x, y] = x∗y − α⁻¹β(y) ∗ αβ⁻¹(x)` for the sum product.
pub fn rb_lie_bracket<S: Scalar>(d: &Dialgebra<S>, r: &Matrix<S>) -> Result<BracketAlgebra<S>> {
    let a = rb_sum_product(d, r)?;
    lie_from_associative(&a)
}

/// `N(x)∗N(y) = N(N(x)∗y + x∗N(y) − N(x∗y))`, the inner product matching
/// the outer one.
pub fn nijenhuis_report<S: Scalar>(nop: &Matrix<S>, d: &Dialgebra<S>) -> Result<CheckReport<S>> {
    require_square(nop, d)?;
    if !commutes_with_maps(nop, d) {
        return Err(Error::DoesNotCommuteWithStructureMaps);
    }
    let nt_l = nijenhuis_product(d.left(), nop);
    let nt_r = nijenhuis_product(d.right(), nop);
    let mut rep = CheckReport::new(format!("nijenhuis({})", d.label()));
    rep.push(operator_identity("n1", nop, d.left(), |i, j| nt_l.row(i, j).to_vec()));
    rep.push(operator_identity("n2", nop, d.right(), |i, j| nt_r.row(i, j).to_vec()));
    Ok(rep)
}

pub fn is_nijenhuis<S: Scalar>(nop: &Matrix<S>, d: &Dialgebra<S>) -> Result<bool> {
    Ok(nijenhuis_report(nop, d)?.passed())
}

/// `x ∗_N y = N(x)∗y + x∗N(y) − N(x∗y)`.
pub(crate) fn nijenhuis_product<S: Scalar>(t: &Tensor3<S>, nop: &Matrix<S>) -> Tensor3<S> {
    rb_product(t, nop).sub(&postcompose(t, nop))
}

pub fn nijenhuis_twist_unchecked<S: Scalar>(nop: &Matrix<S>, d: &Dialgebra<S>) -> Result<Dialgebra<S>> {
    Dialgebra::new_unchecked(
        format!("{}_N", d.label()),
        nijenhuis_product(d.left(), nop),
        nijenhuis_product(d.right(), nop),
        d.alpha().clone(),
        d.beta().clone(),
    )
}

pub fn nijenhuis_twist<S: Scalar>(nop: &Matrix<S>, d: &Dialgebra<S>) -> Result<Dialgebra<S>> {
    if !is_nijenhuis(nop, d)? {
        return Err(Error::NotNijenhuis);
    }
    verified("nijenhuis_twist", nijenhuis_twist_unchecked(nop, d)?)
}

/// Identities (c1), (c2): `θx∗θy = θ(g(x)∗θy) = θ(θx∗g(y))` with `g = α^kβ^l`.
pub fn averaging_report<S: Scalar>(theta: &Matrix<S>, k: i32, l: i32, d: &Dialgebra<S>) -> Result<CheckReport<S>> {
    require_square(theta, d)?;
    if !commutes_with_maps(theta, d) {
        return Err(Error::DoesNotCommuteWithStructureMaps);
    }
    let g = d.map_power(k, l)?;
    let n = d.dim();
    let tc = theta.columns();
    let gc = g.columns();
    let mut rep = CheckReport::new(format!("averaging({})", d.label()));
    for (id, p) in [("c1", Product::Left), ("c2", Product::Right)] {
        let prod = d.product(p);
        rep.push(check_indexed(id, &[n, n], |t| {
            let (i, j) = (t[0], t[1]);
            let base = prod.contract(&tc[i], &tc[j]);
            let a = theta.apply(&prod.contract(&gc[i], &tc[j]));
            let b = theta.apply(&prod.contract(&tc[i], &gc[j]));
            concat(&sub_vectors(&base, &a), &sub_vectors(&base, &b))
        }));
    }
    Ok(rep)
}

pub fn is_averaging<S: Scalar>(theta: &Matrix<S>, k: i32, l: i32, d: &Dialgebra<S>) -> Result<bool> {
    Ok(averaging_report(theta, k, l, d)?.passed())
}

pub fn averaging_twist_unchecked<S: Scalar>(theta: &Matrix<S>, k: i32, l: i32, d: &Dialgebra<S>) -> Result<Dialgebra<S>> {
    let g = d.map_power(k, l)?;
    Dialgebra::new_unchecked(
        format!("{}_θ", d.label()),
        precompose(d.left(), theta, &g),
        precompose(d.right(), &g, theta),
        d.alpha().clone(),
        d.beta().clone(),
    )
}

/// `x ◁ y = θ(x) ⊣ α^kβ^l(y)`, `x ▷ y = α^kβ^l(x) ⊢ θ(y)`.
pub fn averaging_twist<S: Scalar>(theta: &Matrix<S>, k: i32, l: i32, d: &Dialgebra<S>) -> Result<Dialgebra<S>> {
    require_square(theta, d)?;
    if theta.rank() < d.dim() {
        return Err(Error::NotInjective);
    }
    if !is_averaging(theta, k, l, d)? {
        return Err(Error::NotAveraging);
    }
    verified("averaging_twist", averaging_twist_unchecked(theta, k, l, d)?)
}

/// Decodes `index` into an `n×n` matrix, row-major, base `|F|` digits.
fn matrix_from_index<S: Scalar>(elements: &[S], n: usize, mut index: u64) -> Matrix<S> {
    let p = elements.len() as u64;
    let mut data = Vec::with_capacity(n * n);
    for _ in 0..n * n {
        data.push(elements[(index % p) as usize].clone());
        index /= p;
    }
    Matrix::from_fn(n, n, |i, j| data[i * n + j].clone())
}

/// Every `n×n` matrix over a finite field accepted by `keep`, in a fixed
/// order. Refuses `n > max_n`.
pub fn enumerate_matrices<S, F>(n: usize, max_n: usize, keep: F) -> Result<Vec<Matrix<S>>>
where
    S: Scalar,
    F: Fn(&Matrix<S>) -> bool + Sync,
{
    let elements = S::elements()
        .ok_or_else(|| Error::InvalidArgument("exhaustive search needs a finite field".into()))?;
    if n > max_n {
        return Err(Error::InvalidArgument(format!(
            "exhaustive search capped at n ≤ {max_n}, got {n}"
        )));
    }
    let total = (elements.len() as u64).pow((n * n) as u32);
    let hits: Vec<Option<Matrix<S>>> = (0..total)
        .into_par_iter()
        .map(|idx| {
            let m = matrix_from_index(&elements, n, idx);
            keep(&m).then_some(m)
        })
        .collect();
    Ok(hits.into_iter().flatten().collect())
}

/// Search cap for operator hunts.
pub const SEARCH_MAX_DIM: usize = 3;

pub fn find_rota_baxter<S: Scalar>(d: &Dialgebra<S>) -> Result<Vec<Matrix<S>>> {
    enumerate_matrices(d.dim(), SEARCH_MAX_DIM, |r| {
        commutes_with_maps(r, d) && is_rota_baxter(r, d).unwrap_or(false)
    })
}

pub fn find_nijenhuis<S: Scalar>(d: &Dialgebra<S>) -> Result<Vec<Matrix<S>>> {
    enumerate_matrices(d.dim(), SEARCH_MAX_DIM, |r| {
        commutes_with_maps(r, d) && is_nijenhuis(r, d).unwrap_or(false)
    })
}

pub fn find_averaging<S: Scalar>(d: &Dialgebra<S>, k: i32, l: i32) -> Result<Vec<Matrix<S>>> {
    enumerate_matrices(d.dim(), SEARCH_MAX_DIM, |t| {
        t.rank() == d.dim() && commutes_with_maps(t, d) && is_averaging(t, k, l, d).unwrap_or(false)
    })
}

pub fn find_centroid<S: Scalar>(d: &Dialgebra<S>, k: i32, l: i32) -> Result<Vec<Matrix<S>>> {
    enumerate_matrices(d.dim(), SEARCH_MAX_DIM, |t| {
        commutes_with_maps(t, d) && is_centroid_element(t, k, l, d).unwrap_or(false)
    })
}
