//! Actions of one dialgebra (or Leibniz algebra) on another, checked through
//! the semidirect product on `L ⊕ D`.
//!
//! Coordinates of `L` come first. The thirty dialgebra action equalities are
//! the five associativity axioms restricted to one triple type each, in the
//! type order DLL, LDL, LLD, LDD, DLD, DDL. The six Leibniz equalities
//! follow the same type order.

use crate::bracket::{twisted_commutator, BracketAlgebra, BracketKind};
use crate::dialgebra::{assoc_residual, check_morphism, require_regular, Dialgebra, ASSOC_AXIOMS};
use crate::error::{Error, Result};
use crate::linalg::{add_vectors, sub_vectors, unit_vector, zero_vector, Matrix, Tensor3};
use crate::report::{check_indexed_filtered, AxiomResult, CheckReport};
use crate::scalar::Scalar;

/// Triple types in equation order; `true` marks an `L` slot.
pub const TRIPLE_TYPES: [(&str, [bool; 3]); 6] = [
    ("DLL", [false, true, true]),
    ("LDL", [true, false, true]),
    ("LLD", [true, true, false]),
    ("LDD", [true, false, false]),
    ("DLD", [false, true, false]),
    ("DDL", [false, false, true]),
];

/// `(x, a) ↦ x ∗ a` with shape `(n, m, m)`, `(a, x) ↦ a ∗ x` with shape
/// `(m, n, m)`, for the two products.
#[derive(Clone, PartialEq, Eq)]
pub struct DialgebraAction<S> {
    l: Dialgebra<S>,
    d: Dialgebra<S>,
    dl_left: Tensor3<S>,
    ld_left: Tensor3<S>,
    dl_right: Tensor3<S>,
    ld_right: Tensor3<S>,
}

impl<S: Scalar> std::fmt::Debug for DialgebraAction<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DialgebraAction")
            .field("l", &self.l)
            .field("d", &self.d)
            .field("dl_left", &self.dl_left)
            .field("ld_left", &self.ld_left)
            .field("dl_right", &self.dl_right)
            .field("ld_right", &self.ld_right)
            .finish()
    }
}

/// Block tensor on `L ⊕ D`: `L × L → L`, mixed pairs `→ L`, `D × D → D`.
fn semidirect_tensor<S: Scalar>(
    lt: &Tensor3<S>,
    dt: &Tensor3<S>,
    dl: &Tensor3<S>,
    ld: &Tensor3<S>,
    m: usize,
    n: usize,
) -> Tensor3<S> {
    let size = m + n;
    Tensor3::from_pairs(size, size, size, |i, j| {
        let mut out = zero_vector(size);
        let (src, off) = match (i < m, j < m) {
            (true, true) => (lt.row(i, j), 0),
            (true, false) => (ld.row(i, j - m), 0),
            (false, true) => (dl.row(i - m, j), 0),
            (false, false) => (dt.row(i - m, j - m), m),
        };
        for (k, v) in src.iter().enumerate() {
            out[off + k] = v.clone();
        }
        out
    })
}

fn type_filter(m: usize, pattern: [bool; 3]) -> impl Fn(&[usize]) -> bool + Sync {
    move |t: &[usize]| (0..3).all(|s| (t[s] < m) == pattern[s])
}

/// Equation label `(NN)`.
pub fn equation_label(number: usize) -> String {
    format!("({number:02})")
}

impl<S: Scalar> DialgebraAction<S> {
    /// Validated: all thirty equalities must hold.
    pub fn new(
        l: Dialgebra<S>,
        d: Dialgebra<S>,
        dl_left: Tensor3<S>,
        ld_left: Tensor3<S>,
        dl_right: Tensor3<S>,
        ld_right: Tensor3<S>,
    ) -> Result<Self> {
        let act = Self::new_unchecked(l, d, dl_left, ld_left, dl_right, ld_right)?;
        if let Some(f) = check_action(&act).first_failure() {
            return Err(Error::ActionAxiomFails {
                equation: f.axiom.clone(),
                witness: f.witness.clone().unwrap_or_default(),
            });
        }
        Ok(act)
    }

    pub fn new_unchecked(
        l: Dialgebra<S>,
        d: Dialgebra<S>,
        dl_left: Tensor3<S>,
        ld_left: Tensor3<S>,
        dl_right: Tensor3<S>,
        ld_right: Tensor3<S>,
    ) -> Result<Self> {
        let (m, n) = (l.dim(), d.dim());
        for (t, shape) in [
            (&dl_left, (n, m, m)),
            (&ld_left, (m, n, m)),
            (&dl_right, (n, m, m)),
            (&ld_right, (m, n, m)),
        ] {
            if t.dims() != shape {
                return Err(Error::dims(format!("action tensor {:?}, expected {shape:?}", t.dims())));
            }
        }
        Ok(DialgebraAction {
            l,
            d,
            dl_left,
            ld_left,
            dl_right,
            ld_right,
        })
    }

    /// Zero action.
    pub fn trivial(l: Dialgebra<S>, d: Dialgebra<S>) -> Result<Self> {
        let (m, n) = (l.dim(), d.dim());
        Self::new(
            l,
            d,
            Tensor3::zeros(n, m, m),
            Tensor3::zeros(m, n, m),
            Tensor3::zeros(n, m, m),
            Tensor3::zeros(m, n, m),
        )
    }

    /// `D` acting on itself by its products.
    pub fn regular(d: Dialgebra<S>) -> Result<Self> {
        let (l, r) = (d.left().clone(), d.right().clone());
        Self::new(d.clone(), d, l.clone(), l, r.clone(), r)
    }

    /// Through a morphism `φ: D → L`: `x ∗ a = φ(x) ∗ a`, `a ∗ x = a ∗ φ(x)`.
    pub fn from_morphism(phi: &Matrix<S>, d: Dialgebra<S>, l: Dialgebra<S>) -> Result<Self> {
        if let Some(f) = check_morphism(phi, &d, &l)?.first_failure() {
            return Err(Error::NotAMorphism(f.axiom.clone()));
        }
        let (m, n) = (l.dim(), d.dim());
        let pc = phi.columns();
        let via_left = |t: &Tensor3<S>| Tensor3::from_pairs(n, m, m, |x, a| t.contract(&pc[x], &unit_vector(m, a)));
        let via_right = |t: &Tensor3<S>| Tensor3::from_pairs(m, n, m, |a, x| t.contract(&unit_vector(m, a), &pc[x]));
        let (dl_left, ld_left) = (via_left(l.left()), via_right(l.left()));
        let (dl_right, ld_right) = (via_left(l.right()), via_right(l.right()));
        Self::new(l, d, dl_left, ld_left, dl_right, ld_right)
    }

    pub fn acted_on(&self) -> &Dialgebra<S> {
        &self.l
    }

    pub fn acting(&self) -> &Dialgebra<S> {
        &self.d
    }

    pub fn dl_left(&self) -> &Tensor3<S> {
        &self.dl_left
    }

    pub fn ld_left(&self) -> &Tensor3<S> {
        &self.ld_left
    }

    pub fn dl_right(&self) -> &Tensor3<S> {
        &self.dl_right
    }

    pub fn ld_right(&self) -> &Tensor3<S> {
        &self.ld_right
    }
}

/// `L ⋊ D` without checks beyond shapes and commuting maps.
pub fn dialgebra_semidirect<S: Scalar>(act: &DialgebraAction<S>) -> Result<Dialgebra<S>> {
    let (m, n) = (act.l.dim(), act.d.dim());
    Dialgebra::new(
        format!("{}⋊{}", act.l.label(), act.d.label()),
        semidirect_tensor(act.l.left(), act.d.left(), &act.dl_left, &act.ld_left, m, n),
        semidirect_tensor(act.l.right(), act.d.right(), &act.dl_right, &act.ld_right, m, n),
        act.l.alpha().block_diag(act.d.alpha()),
        act.l.beta().block_diag(act.d.beta()),
    )
}

/// The thirty equalities, labelled `(01)` to `(30)`. Witnesses are 1-based
/// indices into `L ⊕ D`.
pub fn check_action<S: Scalar>(act: &DialgebraAction<S>) -> CheckReport<S> {
    let (m, n) = (act.l.dim(), act.d.dim());
    let size = m + n;
    let mut rep = CheckReport::new(format!("action({} on {})", act.d.label(), act.l.label()));
    let alpha = act.l.alpha().block_diag(act.d.alpha());
    let beta = act.l.beta().block_diag(act.d.beta());
    if !alpha.commutes_with(&beta) {
        rep.push(AxiomResult {
            axiom: "commute".into(),
            pass: false,
            witness: Some(vec![]),
            residual: None,
            violations: 1,
        });
        return rep;
    }
    let left = semidirect_tensor(act.l.left(), act.d.left(), &act.dl_left, &act.ld_left, m, n);
    let right = semidirect_tensor(act.l.right(), act.d.right(), &act.dl_right, &act.ld_right, m, n);
    let ac = alpha.columns();
    let bc = beta.columns();
    for (g, (_, pattern)) in TRIPLE_TYPES.iter().enumerate() {
        for (a, ax) in ASSOC_AXIOMS.iter().enumerate() {
            let label = equation_label(g * 5 + a + 1);
            rep.push(check_indexed_filtered(&label, &[size; 3], type_filter(m, *pattern), |t| {
                assoc_residual(ax, &left, &right, &ac, &bc, t)
            }));
        }
    }
    rep
}

pub fn is_action<S: Scalar>(act: &DialgebraAction<S>) -> bool {
    check_action(act).passed()
}

/// `[x, a]` of shape `(n, m, m)` and `[a, x]` of shape `(m, n, m)`.
#[derive(Clone, PartialEq, Eq)]
pub struct LeibnizAction<S> {
    l: BracketAlgebra<S>,
    g: BracketAlgebra<S>,
    xa: Tensor3<S>,
    ax: Tensor3<S>,
}

impl<S: Scalar> std::fmt::Debug for LeibnizAction<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LeibnizAction")
            .field("l", &self.l)
            .field("g", &self.g)
            .field("xa", &self.xa)
            .field("ax", &self.ax)
            .finish()
    }
}

impl<S: Scalar> LeibnizAction<S> {
    pub fn new(l: BracketAlgebra<S>, g: BracketAlgebra<S>, xa: Tensor3<S>, ax: Tensor3<S>) -> Result<Self> {
        let act = Self::new_unchecked(l, g, xa, ax)?;
        if let Some(f) = check_leibniz_action(&act).first_failure() {
            return Err(Error::ActionAxiomFails {
                equation: f.axiom.clone(),
                witness: f.witness.clone().unwrap_or_default(),
            });
        }
        Ok(act)
    }

    pub fn new_unchecked(l: BracketAlgebra<S>, g: BracketAlgebra<S>, xa: Tensor3<S>, ax: Tensor3<S>) -> Result<Self> {
        let (m, n) = (l.dim(), g.dim());
        if xa.dims() != (n, m, m) || ax.dims() != (m, n, m) {
            return Err(Error::dims("Leibniz action tensor shapes"));
        }
        Ok(LeibnizAction { l, g, xa, ax })
    }

    pub fn acted_on(&self) -> &BracketAlgebra<S> {
        &self.l
    }

    pub fn acting(&self) -> &BracketAlgebra<S> {
        &self.g
    }

    pub fn xa(&self) -> &Tensor3<S> {
        &self.xa
    }

    pub fn ax(&self) -> &Tensor3<S> {
        &self.ax
    }
}

/// Bracket `([a,b] + [x,b] + [a,y], [x,y])` on `L ⊕ D`.
pub fn leibniz_semidirect<S: Scalar>(act: &LeibnizAction<S>) -> Result<BracketAlgebra<S>> {
    let (m, n) = (act.l.dim(), act.g.dim());
    BracketAlgebra::new(
        format!("{}⋊{}", act.l.label(), act.g.label()),
        BracketKind::Leibniz,
        semidirect_tensor(act.l.tensor(), act.g.tensor(), &act.xa, &act.ax, m, n),
        act.l.alpha().block_diag(act.g.alpha()),
        act.l.beta().block_diag(act.g.beta()),
    )
}

/// Leibniz identity of the semidirect bracket on each mixed triple type,
/// labelled `la1` to `la6`.
pub fn check_leibniz_action<S: Scalar>(act: &LeibnizAction<S>) -> CheckReport<S> {
    let m = act.l.dim();
    let mut rep = CheckReport::new(format!("leibniz-action({} on {})", act.g.label(), act.l.label()));
    let semi = match leibniz_semidirect(act) {
        Ok(s) => s,
        Err(_) => {
            rep.push(AxiomResult {
                axiom: "commute".into(),
                pass: false,
                witness: Some(vec![]),
                residual: None,
                violations: 1,
            });
            return rep;
        }
    };
    let size = semi.dim();
    for (g, (_, pattern)) in TRIPLE_TYPES.iter().enumerate() {
        let label = format!("la{}", g + 1);
        rep.push(check_indexed_filtered(&label, &[size; 3], type_filter(m, *pattern), |t| {
            leibniz_residual(&semi, t[0], t[1], t[2])
        }));
    }
    rep
}

fn leibniz_residual<S: Scalar>(l: &BracketAlgebra<S>, x: usize, y: usize, z: usize) -> Vec<S> {
    let n = l.dim();
    let b = l.tensor();
    let (a, be) = (l.alpha(), l.beta());
    let lhs = b.contract(b.row(x, y), &a.mul(be).column(z));
    let r1 = b.contract(&b.contract(&unit_vector(n, x), &be.column(z)), &a.column(y));
    let r2 = b.contract(&a.column(x), &b.contract(&unit_vector(n, y), &a.column(z)));
    sub_vectors(&lhs, &add_vectors(&r1, &r2))
}

pub fn is_leibniz_action<S: Scalar>(act: &LeibnizAction<S>) -> bool {
    check_leibniz_action(act).passed()
}

/// Raw mixed brackets `x ⊣ a − α⁻¹β(a) ⊢ αβ⁻¹(x)` and
/// `a ⊣ x − α⁻¹β(x) ⊢ αβ⁻¹(a)`, with `Lb` on `L` and `D`.
fn induced_leibniz<S: Scalar>(act: &DialgebraAction<S>) -> Result<LeibnizAction<S>> {
    let (l, d) = (&act.l, &act.d);
    let (m, n) = (l.dim(), d.dim());
    let (lai, lbi) = require_regular(l)?;
    let (dai, dbi) = require_regular(d)?;
    let lu = lai.mul(l.beta()).columns();
    let lv = l.alpha().mul(&lbi).columns();
    let du = dai.mul(d.beta()).columns();
    let dv = d.alpha().mul(&dbi).columns();
    let xa = Tensor3::from_pairs(n, m, m, |x, a| {
        sub_vectors(act.dl_left.row(x, a), &act.ld_right.contract(&lu[a], &dv[x]))
    });
    let ax = Tensor3::from_pairs(m, n, m, |a, x| {
        sub_vectors(act.ld_left.row(a, x), &act.dl_right.contract(&du[x], &lv[a]))
    });
    let lb = |alg: &Dialgebra<S>| -> Result<BracketAlgebra<S>> {
        BracketAlgebra::new(
            format!("Lb({})", alg.label()),
            BracketKind::Leibniz,
            twisted_commutator(alg, alg.left(), alg.right())?,
            alg.alpha().clone(),
            alg.beta().clone(),
        )
    };
    LeibnizAction::new_unchecked(lb(l)?, lb(d)?, xa, ax)
}

/// Leibniz action induced by a dialgebra action between regular algebras.
pub fn action_to_leibniz_action<S: Scalar>(act: &DialgebraAction<S>) -> Result<LeibnizAction<S>> {
    let out = induced_leibniz(act)?;
    if let Some(f) = check_leibniz_action(&out).first_failure() {
        return Err(Error::ActionAxiomFails {
            equation: f.axiom.clone(),
            witness: f.witness.clone().unwrap_or_default(),
        });
    }
    Ok(out)
}

/// `Lb(L ⋊ D)` equals the semidirect bracket of the induced Leibniz action.
pub fn functor_commutes<S: Scalar>(act: &DialgebraAction<S>) -> Result<bool> {
    let semi = dialgebra_semidirect(act)?;
    let lhs = twisted_commutator(&semi, semi.left(), semi.right())?;
    let rhs = leibniz_semidirect(&induced_leibniz(act)?)?;
    Ok(&lhs == rhs.tensor())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dialgebra::check_axioms;
    use crate::scalar::{qi, Q};

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
    fn regular_and_trivial_actions() {
        let d = alg3();
        let reg = DialgebraAction::regular(d.clone()).unwrap();
        assert_eq!(check_action(&reg).results.len(), 30);
        assert!(check_axioms(&dialgebra_semidirect(&reg).unwrap()).passed());
        let triv = DialgebraAction::trivial(d.clone(), d).unwrap();
        assert!(is_action(&triv));
    }

    #[test]
    fn broken_action_names_equation() {
        let d = alg3();
        let mut dl = d.left().clone();
        dl.set(1, 1, 1, qi(1));
        let err = DialgebraAction::new(
            d.clone(),
            d.clone(),
            dl,
            d.left().clone(),
            d.right().clone(),
            d.right().clone(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::ActionAxiomFails { .. }));
    }

    #[test]
    fn identity_morphism_gives_regular_action() {
        let d = alg3();
        let via = DialgebraAction::from_morphism(&Matrix::identity(2), d.clone(), d.clone()).unwrap();
        assert_eq!(via, DialgebraAction::regular(d).unwrap());
    }
}
