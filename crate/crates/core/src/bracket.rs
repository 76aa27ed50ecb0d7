//! BiHom-Lie and BiHom-Leibniz brackets, the functors producing them from
//! dialgebras, and BiHom-Poisson dialgebras.

use std::fmt;

use crate::dialgebra::{check_axioms, check_morphism, require_regular, Dialgebra};
use crate::error::{Error, Result};
use crate::linalg::{add_vectors, sub_vectors, unit_vector, Matrix, Tensor3};
use crate::operators::{enumerate_matrices, nijenhuis_product, precompose};
use crate::report::{check_indexed, AxiomResult, CheckReport};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BracketKind {
    Lie,
    Leibniz,
}

impl BracketKind {
    pub fn name(self) -> &'static str {
        match self {
            BracketKind::Lie => "lie",
            BracketKind::Leibniz => "leibniz",
        }
    }
}

impl fmt::Display for BracketKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A bilinear bracket with two commuting structure maps. The kind records
/// which identities it is meant to satisfy; it is not enforced here.
#[derive(Clone, PartialEq, Eq)]
pub struct BracketAlgebra<S> {
    label: String,
    kind: BracketKind,
    bracket: Tensor3<S>,
    alpha: Matrix<S>,
    beta: Matrix<S>,
}

impl<S: Scalar> std::fmt::Debug for BracketAlgebra<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BracketAlgebra")
            .field("label", &self.label)
            .field("kind", &self.kind)
            .field("bracket", &self.bracket)
            .field("alpha", &self.alpha)
            .field("beta", &self.beta)
            .finish()
    }
}

impl<S: Scalar> BracketAlgebra<S> {
    pub fn new(
        label: impl Into<String>,
        kind: BracketKind,
        bracket: Tensor3<S>,
        alpha: Matrix<S>,
        beta: Matrix<S>,
    ) -> Result<Self> {
        let n = alpha.rows();
        if bracket.dims() != (n, n, n) || !alpha.is_square() || beta.rows() != n || !beta.is_square() {
            return Err(Error::dims("bracket tensor and maps must share one dimension"));
        }
        if !alpha.commutes_with(&beta) {
            return Err(Error::MapsDoNotCommute("αβ ≠ βα".into()));
        }
        Ok(BracketAlgebra {
            label: label.into(),
            kind,
            bracket,
            alpha,
            beta,
        })
    }

    pub fn dim(&self) -> usize {
        self.alpha.rows()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn kind(&self) -> BracketKind {
        self.kind
    }

    pub fn with_kind(mut self, kind: BracketKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn tensor(&self) -> &Tensor3<S> {
        &self.bracket
    }

    pub fn alpha(&self) -> &Matrix<S> {
        &self.alpha
    }

    pub fn beta(&self) -> &Matrix<S> {
        &self.beta
    }

    pub fn bracket(&self, x: &[S], y: &[S]) -> Vec<S> {
        self.bracket.contract(x, y)
    }

    pub fn convert<T: Scalar>(&self, f: impl Fn(&S) -> Option<T>) -> Option<BracketAlgebra<T>> {
        Some(BracketAlgebra {
            label: self.label.clone(),
            kind: self.kind,
            bracket: self.bracket.try_map(&f)?,
            alpha: self.alpha.try_map(&f)?,
            beta: self.beta.try_map(&f)?,
        })
    }
}

fn endo_result<S: Scalar>(id: &str, l: &BracketAlgebra<S>, f: &Matrix<S>) -> AxiomResult<S> {
    let n = l.dim();
    let fc = f.columns();
    check_indexed(id, &[n, n], |t| {
        sub_vectors(&f.apply(l.bracket.row(t[0], t[1])), &l.bracket.contract(&fc[t[0]], &fc[t[1]]))
    })
}

/// `[[x,y], αβz] = [[x,βz], αy] + [αx, [y,αz]]` on basis triples.
pub fn leibniz_result<S: Scalar>(l: &BracketAlgebra<S>) -> AxiomResult<S> {
    let n = l.dim();
    let b = &l.bracket;
    let ac = l.alpha.columns();
    let bc = l.beta.columns();
    let abc = l.alpha.mul(&l.beta).columns();
    check_indexed("leibniz", &[n, n, n], |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let lhs = b.contract(b.row(x, y), &abc[z]);
        let r1 = b.contract(&b.contract(&unit_vector(n, x), &bc[z]), &ac[y]);
        let r2 = b.contract(&ac[x], &b.contract(&unit_vector(n, y), &ac[z]));
        sub_vectors(&lhs, &add_vectors(&r1, &r2))
    })
}

pub fn check_bihom_leibniz<S: Scalar>(l: &BracketAlgebra<S>) -> CheckReport<S> {
    let mut rep = CheckReport::new(l.label.clone());
    rep.push(leibniz_result(l));
    rep
}

/// Multiplicativity, skew-symmetry `[βx, αy] = −[βy, αx]` and the cyclic
/// Jacobi identity `[β²x, [βy, αz]] + ⟲ = 0`.
pub fn check_bihom_lie<S: Scalar>(l: &BracketAlgebra<S>) -> CheckReport<S> {
    let n = l.dim();
    let b = &l.bracket;
    let ac = l.alpha.columns();
    let bc = l.beta.columns();
    let b2c = l.beta.pow(2).columns();
    let mut rep = CheckReport::new(l.label.clone());
    rep.push(endo_result("mult-α", l, &l.alpha));
    rep.push(endo_result("mult-β", l, &l.beta));
    rep.push(check_indexed("skew", &[n, n], |t| {
        add_vectors(&b.contract(&bc[t[0]], &ac[t[1]]), &b.contract(&bc[t[1]], &ac[t[0]]))
    }));
    rep.push(check_indexed("jacobi", &[n, n, n], |t| {
        let term = |x: usize, y: usize, z: usize| b.contract(&b2c[x], &b.contract(&bc[y], &ac[z]));
        let (x, y, z) = (t[0], t[1], t[2]);
        add_vectors(&add_vectors(&term(x, y, z), &term(y, z, x)), &term(z, x, y))
    }));
    rep
}

/// Identities matching the algebra's kind.
pub fn check_bracket<S: Scalar>(l: &BracketAlgebra<S>) -> CheckReport<S> {
    match l.kind {
        BracketKind::Lie => check_bihom_lie(l),
        BracketKind::Leibniz => check_bihom_leibniz(l),
    }
}

fn verified_bracket<S: Scalar>(construction: &str, l: BracketAlgebra<S>) -> Result<BracketAlgebra<S>> {
    match check_bracket(&l).first_failure() {
        None => Ok(l),
        Some(f) => Err(Error::ResultFailsAxioms {
            construction: construction.to_string(),
            axiom: f.axiom.clone(),
            witness: f.witness.clone().unwrap_or_default(),
        }),
    }
}

/// `x p y − α⁻¹β(y) q αβ⁻¹(x)` on a regular algebra.
pub(crate) fn twisted_commutator<S: Scalar>(d: &Dialgebra<S>, p: &Tensor3<S>, q: &Tensor3<S>) -> Result<Tensor3<S>> {
    let (ai, bi) = require_regular(d)?;
    let u = ai.mul(d.beta());
    let v = d.alpha().mul(&bi);
    let n = d.dim();
    let uc = u.columns();
    let vc = v.columns();
    Ok(Tensor3::from_pairs(n, n, n, |i, j| sub_vectors(p.row(i, j), &q.contract(&uc[j], &vc[i]))))
}

/// The commutator bracket of a regular algebra with a single product.
pub fn lie_from_associative<S: Scalar>(a: &Dialgebra<S>) -> Result<BracketAlgebra<S>> {
    if !a.has_equal_products() {
        return Err(Error::ProductsDiffer);
    }
    let t = twisted_commutator(a, a.left(), a.left())?;
    let l = BracketAlgebra::new(
        format!("L({})", a.label()),
        BracketKind::Lie,
        t,
        a.alpha().clone(),
        a.beta().clone(),
    )?;
    verified_bracket("lie_from_associative", l)
}

/// `[x, y] = x ⊣ y − α⁻¹β(y) ⊢ αβ⁻¹(x)`.
pub fn lb_functor<S: Scalar>(d: &Dialgebra<S>) -> Result<BracketAlgebra<S>> {
    let t = twisted_commutator(d, d.left(), d.right())?;
    let l = BracketAlgebra::new(
        format!("Lb({})", d.label()),
        BracketKind::Leibniz,
        t,
        d.alpha().clone(),
        d.beta().clone(),
    )?;
    verified_bracket("lb_functor", l)
}

/// `[Nx, Ny] = N([Nx, y] + [x, Ny] − N[x, y])`.
pub fn is_lie_nijenhuis<S: Scalar>(l: &BracketAlgebra<S>, nop: &Matrix<S>) -> bool {
    let n = l.dim();
    if nop.rows() != n || !nop.is_square() {
        return false;
    }
    if !nop.commutes_with(&l.alpha) || !nop.commutes_with(&l.beta) {
        return false;
    }
    let nb = nijenhuis_product(&l.bracket, nop);
    let nc = nop.columns();
    check_indexed("nijenhuis", &[n, n], |t| {
        sub_vectors(&l.bracket.contract(&nc[t[0]], &nc[t[1]]), &nop.apply(nb.row(t[0], t[1])))
    })
    .pass
}

/// `[x, y]_N = [Nx, y] + [x, Ny] − N[x, y]`, re-checked against the kind.
pub fn nijenhuis_bracket<S: Scalar>(l: &BracketAlgebra<S>, nop: &Matrix<S>) -> Result<BracketAlgebra<S>> {
    if nop.rows() != l.dim() || !nop.is_square() {
        return Err(Error::dims("operator size"));
    }
    if !nop.commutes_with(&l.alpha) || !nop.commutes_with(&l.beta) {
        return Err(Error::DoesNotCommuteWithStructureMaps);
    }
    if !is_lie_nijenhuis(l, nop) {
        return Err(Error::NotNijenhuis);
    }
    let out = BracketAlgebra::new(
        format!("{}_N", l.label),
        l.kind,
        nijenhuis_product(&l.bracket, nop),
        l.alpha.clone(),
        l.beta.clone(),
    )?;
    verified_bracket("nijenhuis_bracket", out)
}

/// Compares the two routes from a regular single-product algebra `A` and a
/// commuting `N`: the N-deformed bracket of `L(A)`, and the commutator
/// bracket of the N-deformed product. Nothing is verified beyond regularity.
pub fn nijenhuis_routes_agree<S: Scalar>(a: &Dialgebra<S>, nop: &Matrix<S>) -> Result<bool> {
    if !a.has_equal_products() {
        return Err(Error::ProductsDiffer);
    }
    if !nop.commutes_with(a.alpha()) || !nop.commutes_with(a.beta()) {
        return Err(Error::DoesNotCommuteWithStructureMaps);
    }
    let lie = twisted_commutator(a, a.left(), a.left())?;
    let route1 = nijenhuis_product(&lie, nop);
    let deformed = nijenhuis_product(a.left(), nop);
    let route2 = twisted_commutator(a, &deformed, &deformed)?;
    Ok(route1 == route2)
}

/// Every Nijenhuis operator of a bracket over a finite field, up to `max_n`.
pub fn find_lie_nijenhuis<S: Scalar>(l: &BracketAlgebra<S>, max_n: usize) -> Result<Vec<Matrix<S>>> {
    enumerate_matrices(l.dim(), max_n, |m| is_lie_nijenhuis(l, m))
}

/// (dil1) `α(x) ⊣ (y ⊢ z) = (x ⊣ y) ⊢ β(z)` and
/// (dil2) `α(x) ⊣ (y ⊣ z) = (x ⊢ y) ⊢ β(z)`.
pub fn check_lr_conditions<S: Scalar>(d: &Dialgebra<S>) -> CheckReport<S> {
    let n = d.dim();
    let (l, r) = (d.left(), d.right());
    let ac = d.alpha().columns();
    let bc = d.beta().columns();
    let mut rep = CheckReport::new(format!("lr({})", d.label()));
    rep.push(check_indexed("dil1", &[n, n, n], |t| {
        sub_vectors(&l.contract(&ac[t[0]], r.row(t[1], t[2])), &r.contract(l.row(t[0], t[1]), &bc[t[2]]))
    }));
    rep.push(check_indexed("dil2", &[n, n, n], |t| {
        sub_vectors(&l.contract(&ac[t[0]], l.row(t[1], t[2])), &r.contract(r.row(t[0], t[1]), &bc[t[2]]))
    }));
    rep
}

pub fn lr_bracket_conditions<S: Scalar>(d: &Dialgebra<S>) -> Result<bool> {
    require_regular(d)?;
    Ok(check_lr_conditions(d).passed())
}

/// `[x, y]_L + [x, y]_R`, the sum of the commutator brackets of both
/// products. Returned unverified: [`check_bihom_lie`] decides.
pub fn lr_bracket<S: Scalar>(d: &Dialgebra<S>) -> Result<BracketAlgebra<S>> {
    let t = twisted_commutator(d, d.left(), d.left())?.add(&twisted_commutator(d, d.right(), d.right())?);
    BracketAlgebra::new(
        format!("LR({})", d.label()),
        BracketKind::Lie,
        t,
        d.alpha().clone(),
        d.beta().clone(),
    )
}

/// A dialgebra and a bracket sharing structure maps.
#[derive(Clone, PartialEq, Eq)]
pub struct PoissonDialgebra<S> {
    dialgebra: Dialgebra<S>,
    bracket: BracketAlgebra<S>,
}

impl<S: Scalar> std::fmt::Debug for PoissonDialgebra<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PoissonDialgebra")
            .field("dialgebra", &self.dialgebra)
            .field("bracket", &self.bracket)
            .finish()
    }
}

impl<S: Scalar> PoissonDialgebra<S> {
    pub fn new(dialgebra: Dialgebra<S>, bracket: BracketAlgebra<S>) -> Result<Self> {
        if dialgebra.alpha() != bracket.alpha() || dialgebra.beta() != bracket.beta() {
            return Err(Error::InvalidArgument("dialgebra and bracket must share α and β".into()));
        }
        Ok(PoissonDialgebra { dialgebra, bracket })
    }

    pub fn dialgebra(&self) -> &Dialgebra<S> {
        &self.dialgebra
    }

    pub fn bracket(&self) -> &BracketAlgebra<S> {
        &self.bracket
    }

    pub fn dim(&self) -> usize {
        self.dialgebra.dim()
    }
}

/// Dialgebra axioms, Leibniz identity and the compatibilities
/// `pois1`, `pois2` (derivation of each product from the right) and
/// `pois3a`, `pois3b` (from the left, through `⊣` and `⊢`).
pub fn check_poisson<S: Scalar>(p: &PoissonDialgebra<S>) -> CheckReport<S> {
    let d = &p.dialgebra;
    let n = d.dim();
    let br = &p.bracket.bracket;
    let (l, r) = (d.left(), d.right());
    let ac = d.alpha().columns();
    let bc = d.beta().columns();
    let abc = d.alpha().mul(d.beta()).columns();
    let e = |i: usize| unit_vector::<S>(n, i);
    let mut rep = check_axioms(d);
    rep.subject = format!("poisson({})", d.label());
    rep.push(leibniz_result(&p.bracket));
    // [x∗y, αβz] = αx ∗ [y, αz] + [x, βz] ∗ αy
    for (id, prod) in [("pois1", l), ("pois2", r)] {
        rep.push(check_indexed(id, &[n, n, n], |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            let lhs = br.contract(prod.row(x, y), &abc[z]);
            let r1 = prod.contract(&ac[x], &br.contract(&e(y), &ac[z]));
            let r2 = prod.contract(&br.contract(&e(x), &bc[z]), &ac[y]);
            sub_vectors(&lhs, &add_vectors(&r1, &r2))
        }));
    }
    // middle = βy ⊢ [αx, z] + [βx, y] ⊣ βz
    let middle = |x: usize, y: usize, z: usize| {
        add_vectors(
            &r.contract(&bc[y], &br.contract(&ac[x], &e(z))),
            &l.contract(&br.contract(&bc[x], &e(y)), &bc[z]),
        )
    };
    rep.push(check_indexed("pois3a", &[n, n, n], |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        sub_vectors(&br.contract(&abc[x], l.row(y, z)), &middle(x, y, z))
    }));
    rep.push(check_indexed("pois3b", &[n, n, n], |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        sub_vectors(&middle(x, y, z), &br.contract(&abc[x], r.row(y, z)))
    }));
    rep
}

fn verified_poisson<S: Scalar>(construction: &str, p: PoissonDialgebra<S>) -> Result<PoissonDialgebra<S>> {
    match check_poisson(&p).first_failure() {
        None => Ok(p),
        Some(f) => Err(Error::ResultFailsAxioms {
            construction: construction.to_string(),
            axiom: f.axiom.clone(),
            witness: f.witness.clone().unwrap_or_default(),
        }),
    }
}

/// A regular dialgebra with the bracket `x ⊣ y − α⁻¹β(y) ⊢ αβ⁻¹(x)`.
pub fn poisson_functor<S: Scalar>(d: &Dialgebra<S>) -> Result<PoissonDialgebra<S>> {
    let t = twisted_commutator(d, d.left(), d.right())?;
    let b = BracketAlgebra::new(
        format!("Lb({})", d.label()),
        BracketKind::Leibniz,
        t,
        d.alpha().clone(),
        d.beta().clone(),
    )?;
    verified_poisson("poisson_functor", PoissonDialgebra::new(d.clone(), b)?)
}

/// The bracket `x ⊣ y − y ⊢ x` without structure-map corrections. Returned
/// unverified for experiments.
pub fn plain_commutator_poisson<S: Scalar>(d: &Dialgebra<S>) -> Result<PoissonDialgebra<S>> {
    let n = d.dim();
    let t = Tensor3::from_pairs(n, n, n, |i, j| sub_vectors(d.left().row(i, j), d.right().row(j, i)));
    let b = BracketAlgebra::new(
        format!("plain({})", d.label()),
        BracketKind::Leibniz,
        t,
        d.alpha().clone(),
        d.beta().clone(),
    )?;
    PoissonDialgebra::new(d.clone(), b)
}

/// Twists both products and the bracket by `α′ ⊗ β′`.
pub fn poisson_yau_twist<S: Scalar>(p: &PoissonDialgebra<S>, a2: &Matrix<S>, b2: &Matrix<S>) -> Result<PoissonDialgebra<S>> {
    let d = &p.dialgebra;
    let n = d.dim();
    for (name, f) in [("α′", a2), ("β′", b2)] {
        if f.rows() != n || !f.is_square() {
            return Err(Error::dims(format!("{name} has the wrong size")));
        }
        if let Some(fail) = check_morphism(f, d, d)?.first_failure() {
            return Err(Error::NotAMorphism(format!("{name} fails {}", fail.axiom)));
        }
        let fc = f.columns();
        let br = &p.bracket.bracket;
        let hom = check_indexed("hom-[,]", &[n, n], |t| {
            sub_vectors(&f.apply(br.row(t[0], t[1])), &br.contract(&fc[t[0]], &fc[t[1]]))
        });
        if !hom.pass {
            return Err(Error::NotAMorphism(format!("{name} does not preserve the bracket")));
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
    let alpha = d.alpha().mul(a2);
    let beta = d.beta().mul(b2);
    let twisted = Dialgebra::new_unchecked(
        format!("{}_tw", d.label()),
        precompose(d.left(), a2, b2),
        precompose(d.right(), a2, b2),
        alpha.clone(),
        beta.clone(),
    )?;
    let b = BracketAlgebra::new(
        format!("{}_tw", p.bracket.label),
        p.bracket.kind,
        precompose(&p.bracket.bracket, a2, b2),
        alpha,
        beta,
    )?;
    verified_poisson("poisson_yau_twist", PoissonDialgebra::new(twisted, b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dialgebra::matrix_dialgebra;
    use crate::scalar::{qi, Gf2, Q};

    fn m2() -> Dialgebra<Q> {
        let mut t = Tensor3::square(1);
        t.set(0, 0, 0, qi(1));
        let k = Dialgebra::from_single_product("k", t, Matrix::identity(1), Matrix::identity(1)).unwrap();
        matrix_dialgebra(&k, 2).unwrap()
    }

    #[test]
    fn gl2_is_lie() {
        let l = lie_from_associative(&m2()).unwrap();
        assert!(check_bihom_lie(&l).passed());
        // [E11, E12] = E12 with basis index a·2 + b
        assert_eq!(l.bracket(&unit_vector(4, 0), &unit_vector(4, 1)), unit_vector(4, 1));
    }

    #[test]
    fn identity_is_nijenhuis_on_gl2() {
        let l = lie_from_associative(&m2()).unwrap();
        let id = Matrix::identity(4);
        let n = nijenhuis_bracket(&l, &id).unwrap();
        assert_eq!(n.tensor(), l.tensor());
        assert!(nijenhuis_routes_agree(&m2(), &Matrix::diagonal(&[qi(1), qi(2), qi(3), qi(4)])).unwrap());
    }

    #[test]
    fn gl2_nijenhuis_search_over_gf2() {
        let l = lie_from_associative(&m2()).unwrap().convert(Gf2::from_rational).unwrap();
        let hits = find_lie_nijenhuis(&l, 4).unwrap();
        assert!(hits.contains(&Matrix::identity(4)));
        for h in &hits {
            assert!(check_bihom_lie(&nijenhuis_bracket(&l, h).unwrap()).passed());
        }
    }

    #[test]
    fn matrix_dialgebra_functors() {
        let d = m2();
        let lb = lb_functor(&d).unwrap();
        assert!(check_bihom_leibniz(&lb).passed());
        let p = poisson_functor(&d).unwrap();
        assert!(check_poisson(&p).passed());
        assert!(lr_bracket_conditions(&d).unwrap());
        assert!(check_bihom_lie(&lr_bracket(&d).unwrap()).passed());
    }

    #[test]
    fn singular_maps_refused() {
        let d = Dialgebra::<Q>::zero_with_maps(Matrix::zeros(2, 2), Matrix::identity(2)).unwrap();
        assert_eq!(lb_functor(&d), Err(Error::NotRegular));
    }
}
