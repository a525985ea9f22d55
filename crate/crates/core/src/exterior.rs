//! Exterior forms on the dual of a Lie algebra with polynomial coefficients.
//!
//! A wedge monomial `w_{i1} ^ ... ^ w_{ik}` (indices increasing) is stored as
//! a bit mask, so ambient dimensions are limited to 64. Terms iterate in
//! increasing mask order, which is colexicographic order on index tuples:
//! `w2^w3` comes before `w1^w4`.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::LieAlgebra;
use crate::linalg::{QMatrix, Rational};
use crate::poly::{fmt_rational, PolyError, PolyMatrix, Polynomial, Vars};

pub const MAX_AMBIENT: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormError {
    #[error("forms live on spaces of different dimension ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("forms of different degree ({0} vs {1}) cannot be added")]
    DegreeMismatch(usize, usize),
    #[error("expected a 2-form, got degree {0}")]
    NotTwoForm(usize),
    #[error("interior product of a 0-form")]
    DegreeZero,
    #[error("vector of length {got} on a space of dimension {expected}")]
    VectorLength { expected: usize, got: usize },
    #[error("index tuple {0:?} is invalid for this form")]
    BadIndices(Vec<usize>),
    #[error("ambient dimension {0} exceeds the supported maximum of 64")]
    TooLarge(usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn indices_of(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

/// Sign of the permutation sorting the concatenation `a ++ b` of two
/// disjoint increasing index sets.
fn merge_sign(a: u64, b: u64) -> bool {
    let mut parity = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        parity += (a >> j).count_ones();
        rest &= rest - 1;
    }
    parity % 2 == 1
}

/// An exterior form of fixed degree with polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    degree: usize,
    ambient: usize,
    vars: Vars,
    coeffs: BTreeMap<u64, Polynomial>,
}

impl Form {
    pub fn zero(degree: usize, ambient: usize, vars: &Vars) -> Self {
        assert!(ambient <= MAX_AMBIENT, "ambient dimension above 64");
        Form {
            degree,
            ambient,
            vars: vars.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    /// The 0-form `1`.
    pub fn unit(ambient: usize, vars: &Vars) -> Self {
        let mut f = Self::zero(0, ambient, vars);
        f.coeffs.insert(0, Polynomial::one(vars));
        f
    }

    /// The basic 1-form `w_i` (0-based `i`).
    pub fn basis(ambient: usize, i: usize) -> Self {
        Self::monomial(ambient, &[i], Polynomial::from_rational(Rational::one())).expect("valid index")
    }

    /// `coeff * w_{i1} ^ ... ^ w_{ik}` for any ordering of distinct indices;
    /// the sign of the sorting permutation is applied.
    pub fn monomial(ambient: usize, indices: &[usize], coeff: Polynomial) -> Result<Self, FormError> {
        if ambient > MAX_AMBIENT {
            return Err(FormError::TooLarge(ambient));
        }
        let mut f = Self::zero(indices.len(), ambient, coeff.vars());
        let mut mask = 0u64;
        let mut negate = false;
        for &i in indices {
            if i >= ambient || mask & (1 << i) != 0 {
                if i < ambient {
                    // repeated factor: the form is zero
                    return Ok(f);
                }
                return Err(FormError::BadIndices(indices.to_vec()));
            }
            negate ^= merge_sign(mask, 1 << i);
            mask |= 1 << i;
        }
        if !coeff.is_zero() {
            f.coeffs.insert(mask, if negate { -coeff } else { coeff });
        }
        Ok(f)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.coeffs.len()
    }

    /// `(indices, coefficient)` pairs in colexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &Polynomial)> {
        self.coeffs.iter().map(|(&m, p)| (indices_of(m), p))
    }

    /// Coefficient on the monomial with the given increasing indices.
    pub fn coefficient(&self, indices: &[usize]) -> Polynomial {
        let mask = indices.iter().fold(0u64, |m, &i| m | (1 << i));
        self.coeffs.get(&mask).cloned().unwrap_or_else(|| Polynomial::zero(&self.vars))
    }

    /// First nonzero coefficient in term order.
    pub fn first_term(&self) -> Option<(Vec<usize>, &Polynomial)> {
        self.terms().next()
    }

    /// Whether any term involves `w_i`.
    pub fn involves(&self, i: usize) -> bool {
        self.coeffs.keys().any(|m| m & (1 << i) != 0)
    }

    fn check_compatible(&self, other: &Form) -> Result<(), FormError> {
        if self.ambient != other.ambient {
            return Err(FormError::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    fn unified_vars(&self, other: &Form) -> Result<Vars, FormError> {
        Ok(Polynomial::zero(&self.vars).checked_add(&Polynomial::zero(&other.vars))?.vars().clone())
    }

    pub fn add(&self, other: &Form) -> Result<Form, FormError> {
        self.check_compatible(other)?;
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(FormError::DegreeMismatch(self.degree, other.degree));
        }
        let degree = if self.is_zero() { other.degree } else { self.degree };
        let mut out = Form::zero(degree, self.ambient, &self.unified_vars(other)?);
        out.coeffs = self.coeffs.clone();
        for (&m, p) in &other.coeffs {
            out.accumulate(m, p, false)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Form {
        Form {
            degree: self.degree,
            ambient: self.ambient,
            vars: self.vars.clone(),
            coeffs: self.coeffs.iter().map(|(&m, p)| (m, -p)).collect(),
        }
    }

    pub fn sub(&self, other: &Form) -> Result<Form, FormError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Form {
        let mut out = Form::zero(self.degree, self.ambient, &self.vars);
        if !c.is_zero() {
            out.coeffs = self.coeffs.iter().map(|(&m, p)| (m, p.scale(c))).collect();
        }
        out
    }

    pub fn scale_poly(&self, c: &Polynomial) -> Result<Form, FormError> {
        let vars = self.unified_vars(&Form::zero(0, self.ambient, c.vars()))?;
        let mut out = Form::zero(self.degree, self.ambient, &vars);
        for (&m, p) in &self.coeffs {
            let v = p.checked_mul(c)?;
            if !v.is_zero() {
                out.coeffs.insert(m, v);
            }
        }
        Ok(out)
    }

    fn accumulate(&mut self, mask: u64, p: &Polynomial, negate: bool) -> Result<(), FormError> {
        let c = if negate { -Rational::one() } else { Rational::one() };
        match self.coeffs.get_mut(&mask) {
            Some(acc) => {
                acc.add_scaled(&c, p)?;
                if acc.is_zero() {
                    self.coeffs.remove(&mask);
                }
            }
            None => {
                if !p.is_zero() {
                    self.coeffs.insert(mask, p.scale(&c).with_vars(&self.vars)?);
                }
            }
        }
        Ok(())
    }

    /// Graded-commutative exterior product.
    pub fn wedge(&self, other: &Form) -> Result<Form, FormError> {
        self.check_compatible(other)?;
        let vars = self.unified_vars(other)?;
        let mut out = Form::zero(self.degree + other.degree, self.ambient, &vars);
        if out.degree > self.ambient {
            return Ok(out);
        }
        for (&ma, pa) in &self.coeffs {
            for (&mb, pb) in &other.coeffs {
                if ma & mb != 0 {
                    continue;
                }
                let prod = pa.checked_mul(pb)?;
                out.accumulate(ma | mb, &prod, merge_sign(ma, mb))?;
            }
        }
        Ok(out)
    }

    /// `a ^ a ^ ... ^ a` with `j` factors; `j = 0` gives the unit 0-form.
    pub fn wedge_power(&self, j: usize) -> Result<Form, FormError> {
        if self.degree != 2 {
            return Err(FormError::NotTwoForm(self.degree));
        }
        let mut acc = Form::unit(self.ambient, &self.vars);
        for _ in 0..j {
            acc = acc.wedge(self)?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }

    /// Contraction `v ⌟ a` in the first slot: `X_i ⌟ w_j = delta_ij`.
    pub fn interior(&self, v: &[Rational]) -> Result<Form, FormError> {
        if v.len() != self.ambient {
            return Err(FormError::VectorLength {
                expected: self.ambient,
                got: v.len(),
            });
        }
        if self.degree == 0 {
            return Err(FormError::DegreeZero);
        }
        let mut out = Form::zero(self.degree - 1, self.ambient, &self.vars);
        for (&m, p) in &self.coeffs {
            for i in indices_of(m) {
                if v[i].is_zero() {
                    continue;
                }
                let slot = (m & ((1u64 << i) - 1)).count_ones();
                let c = if slot % 2 == 1 { -v[i].clone() } else { v[i].clone() };
                out.accumulate(m & !(1 << i), &p.scale(&c), false)?;
            }
        }
        Ok(out)
    }

    /// Substitutes rationals for the coefficient variables.
    pub fn specialize(&self, point: &[Rational]) -> Result<Form, FormError> {
        let consts = Vars::constants();
        let mut out = Form::zero(self.degree, self.ambient, &consts);
        for (&m, p) in &self.coeffs {
            let c = p.eval(point)?;
            if !c.is_zero() {
                out.coeffs.insert(m, Polynomial::constant(&consts, c));
            }
        }
        Ok(out)
    }

    /// The skew matrix `M` of a 2-form `sum_{i<j} M_ij w_i ^ w_j`.
    pub fn to_poly_matrix(&self) -> Result<PolyMatrix, FormError> {
        if self.degree != 2 {
            return Err(FormError::NotTwoForm(self.degree));
        }
        let mut m = PolyMatrix::zeros(self.ambient, self.ambient, &self.vars);
        for (idx, p) in self.terms() {
            m.set(idx[0], idx[1], p.clone())?;
            m.set(idx[1], idx[0], -p)?;
        }
        Ok(m)
    }

    /// Skew matrix of a 2-form with constant coefficients.
    pub fn to_matrix(&self) -> Result<Option<QMatrix>, FormError> {
        if self.degree != 2 {
            return Err(FormError::NotTwoForm(self.degree));
        }
        let mut m = QMatrix::zeros(self.ambient, self.ambient);
        for (idx, p) in self.terms() {
            let Some(c) = p.as_constant() else {
                return Ok(None);
            };
            m.set(idx[1], idx[0], -c.clone());
            m.set(idx[0], idx[1], c);
        }
        Ok(Some(m))
    }

    /// Largest `j` with `a^j != 0`, by repeated wedging.
    pub fn j0(&self) -> Result<usize, FormError> {
        if self.degree != 2 {
            return Err(FormError::NotTwoForm(self.degree));
        }
        let mut acc = self.clone();
        let mut j = 0;
        while !acc.is_zero() {
            j += 1;
            acc = acc.wedge(self)?;
        }
        Ok(j)
    }

    /// Renders the form with the given names for the basic 1-forms.
    pub fn format_with(&self, names: &[String], style: FormStyle) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (n, (idx, p)) in self.terms().enumerate() {
            let blade = if idx.is_empty() {
                String::new()
            } else {
                idx.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join(style.wedge())
            };
            let (neg, coef) = match p.as_constant() {
                Some(c) => (c.is_negative(), (!c.abs().is_one() || blade.is_empty()).then(|| fmt_rational(&c.abs()))),
                None if p.nterms() == 1 => {
                    let (_, c) = p.leading_term().unwrap();
                    let s = if c.is_negative() { (-p).to_string() } else { p.to_string() };
                    (c.is_negative(), Some(s))
                }
                None => (false, Some(format!("({p})"))),
            };
            out.push_str(match (n, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            match (coef, blade.is_empty()) {
                (Some(c), true) => out.push_str(&c),
                (Some(c), false) => {
                    out.push_str(&c);
                    out.push('*');
                    out.push_str(&blade);
                }
                (None, _) => out.push_str(&blade),
            }
        }
        out
    }
}

/// Output alphabet for forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormStyle {
    /// `w1^w2`, `eta1`.
    Ascii,
    /// `ω1∧ω2`, `η1`.
    Unicode,
}

impl FormStyle {
    fn wedge(self) -> &'static str {
        match self {
            FormStyle::Ascii => "^",
            FormStyle::Unicode => "∧",
        }
    }
}

/// Name of the 1-form dual to a basis label: `X<s>` becomes `w<s>`,
/// `Z<s>` becomes `eta<s>`, anything else `w(<label>)`.
pub fn dual_name(label: &str, style: FormStyle) -> String {
    let (w, eta) = match style {
        FormStyle::Ascii => ("w", "eta"),
        FormStyle::Unicode => ("ω", "η"),
    };
    if let Some(rest) = label.strip_prefix('X').filter(|r| !r.is_empty()) {
        format!("{w}{rest}")
    } else if let Some(rest) = label.strip_prefix('Z').filter(|r| !r.is_empty()) {
        format!("{eta}{rest}")
    } else {
        format!("{w}({label})")
    }
}

pub fn dual_names(g: &LieAlgebra, style: FormStyle) -> Vec<String> {
    g.labels().iter().map(|l| dual_name(l, style)).collect()
}

/// Differentials of the dual basis: `dw_k = -sum_{i<j} C_ij^k w_i ^ w_j`.
pub fn maurer_cartan(g: &LieAlgebra) -> Vec<Form> {
    let n = g.dim();
    let consts = Vars::constants();
    let mut forms: Vec<Form> = (0..n).map(|_| Form::zero(2, n, &consts)).collect();
    for (&(i, j), v) in g.constants() {
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                forms[k]
                    .coeffs
                    .insert((1 << i) | (1 << j), Polynomial::constant(&consts, -c.clone()));
            }
        }
    }
    forms
}

/// The generic element `sum_i a_i dw_i` of the span of the differentials,
/// over variables `a1..an`.
pub fn generic_differential(g: &LieAlgebra) -> Form {
    let n = g.dim();
    let vars = Vars::indexed("a", n);
    let mut theta = Form::zero(2, n, &vars);
    for (&(i, j), v) in g.constants() {
        let mut p = Polynomial::zero(&vars);
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                p = &p - &Polynomial::var(&vars, k).scale(c);
            }
        }
        if !p.is_zero() {
            theta.coeffs.insert((1 << i) | (1 << j), p);
        }
    }
    theta
}

/// `sum_i c_i dw_i` for rational coefficients.
pub fn combine_differentials(mc: &[Form], coeffs: &[Rational]) -> Form {
    let n = mc.first().map_or(0, Form::ambient);
    let mut acc = Form::zero(2, n, &Vars::constants());
    for (f, c) in mc.iter().zip(coeffs) {
        if !c.is_zero() {
            acc = acc.add(&f.scale(c)).expect("same ambient space");
        }
    }
    acc
}

/// One line per differential in the style `dω1 = ω2∧ω3 + ω1∧ω4`; runs of
/// consecutive vanishing differentials share a line, `dω4 = dω5 = 0`.
pub fn format_mc_system(g: &LieAlgebra, style: FormStyle) -> Vec<String> {
    let names = dual_names(g, style);
    let forms = maurer_cartan(g);
    let mut lines = Vec::new();
    let mut zero_run: Vec<String> = Vec::new();
    for (k, f) in forms.iter().enumerate() {
        let lhs = format!("d{}", names[k]);
        if f.is_zero() {
            zero_run.push(lhs);
            continue;
        }
        if !zero_run.is_empty() {
            lines.push(format!("{} = 0", zero_run.join(" = ")));
            zero_run.clear();
        }
        lines.push(format!("{lhs} = {}", f.format_with(&names, style)));
    }
    if !zero_run.is_empty() {
        lines.push(format!("{} = 0", zero_run.join(" = ")));
    }
    lines
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::{q, unit_vec};
    use proptest::prelude::*;

    fn w(n: usize, i: usize) -> Form {
        Form::basis(n, i)
    }

    fn w2(n: usize, i: usize, j: usize) -> Form {
        w(n, i).wedge(&w(n, j)).unwrap()
    }

    #[test]
    fn wedge_examples() {
        assert!(w2(4, 0, 1).wedge(&w(4, 0)).unwrap().is_zero());
        assert_eq!(w2(4, 1, 0), w2(4, 0, 1).neg());
        let vol = w2(4, 0, 1).wedge(&w2(4, 2, 3)).unwrap();
        assert_eq!(vol, Form::monomial(4, &[0, 1, 2, 3], Polynomial::from_rational(q(1))).unwrap());
        assert_eq!(
            w(3, 0).wedge(&w(4, 1)),
            Err(FormError::AmbientMismatch(3, 4))
        );
    }

    #[test]
    fn wedge_power_examples() {
        let a = w2(4, 0, 1).add(&w2(4, 2, 3)).unwrap();
        let sq = a.wedge_power(2).unwrap();
        assert_eq!(sq, Form::monomial(4, &[0, 1, 2, 3], Polynomial::from_rational(q(2))).unwrap());
        let b = w2(3, 0, 1).add(&w2(3, 1, 2)).unwrap().add(&w2(3, 0, 2)).unwrap();
        assert!(b.wedge_power(2).unwrap().is_zero());
        assert_eq!(w(3, 0).wedge_power(2), Err(FormError::NotTwoForm(1)));
    }

    #[test]
    fn interior_examples() {
        let f = w2(3, 0, 1);
        assert_eq!(f.interior(&unit_vec(3, 0)).unwrap(), w(3, 1));
        assert!(f.interior(&unit_vec(3, 2)).unwrap().is_zero());
        assert_eq!(f.interior(&unit_vec(3, 1)).unwrap(), w(3, 0).neg());
        let unit = Form::unit(3, &Vars::constants());
        assert_eq!(unit.interior(&unit_vec(3, 0)), Err(FormError::DegreeZero));
    }

    #[test]
    fn heisenberg_and_abelian_mc() {
        let mc = maurer_cartan(&catalog::heisenberg_h1());
        assert!(mc[0].is_zero() && mc[1].is_zero());
        assert_eq!(mc[2], w2(3, 0, 1).neg());
        assert!(maurer_cartan(&LieAlgebra::abelian(4)).iter().all(Form::is_zero));
    }

    #[test]
    fn remark_system_prints_verbatim() {
        let lines = format_mc_system(&catalog::remark_5d(), FormStyle::Unicode);
        assert_eq!(
            lines,
            vec![
                "dω1 = ω2∧ω3 + ω1∧ω4",
                "dω2 = ω2∧ω4 - ω2∧ω5",
                "dω3 = ω3∧ω5",
                "dω4 = dω5 = 0",
            ]
        );
        let ascii = format_mc_system(&catalog::remark_5d(), FormStyle::Ascii);
        assert_eq!(ascii[0], "dw1 = w2^w3 + w1^w4");
    }

    #[test]
    fn dual_naming() {
        assert_eq!(dual_name("X1'", FormStyle::Unicode), "ω1'");
        assert_eq!(dual_name("Z4", FormStyle::Ascii), "eta4");
        assert_eq!(dual_name("e2", FormStyle::Ascii), "w(e2)");
    }

    #[test]
    fn generic_form_coefficients() {
        let theta = generic_differential(&catalog::heisenberg_h1());
        assert_eq!(theta.nterms(), 1);
        assert_eq!(theta.coefficient(&[0, 1]).to_string(), "-a3");
        assert_eq!(theta.j0().unwrap(), 1);
        assert_eq!(theta.format_with(&dual_names(&catalog::heisenberg_h1(), FormStyle::Ascii), FormStyle::Ascii), "-a3*w(e1)^w(e2)");
    }

    fn random_form(n: usize, degree: usize) -> impl Strategy<Value = Form> {
        let vars = Vars::indexed("t", 2);
        proptest::collection::vec(
            (proptest::sample::subsequence((0..n).collect::<Vec<_>>(), degree), -3i64..=3, 0usize..3),
            0..4,
        )
        .prop_map(move |terms| {
            let mut f = Form::zero(degree, n, &vars);
            for (idx, c, v) in terms {
                let p = if v < 2 {
                    Polynomial::var(&vars, v).scale(&q(c))
                } else {
                    Polynomial::constant(&vars, q(c))
                };
                f = f.add(&Form::monomial(n, &idx, p).unwrap()).unwrap();
            }
            f
        })
    }

    proptest! {
        #[test]
        fn wedge_associative_and_graded_commutative(
            a in random_form(6, 1), b in random_form(6, 2), c in random_form(6, 2)
        ) {
            let left = a.wedge(&b).unwrap().wedge(&c).unwrap();
            let right = a.wedge(&b.wedge(&c).unwrap()).unwrap();
            prop_assert_eq!(&left, &right);
            // deg a = 1, deg b = 2: a^b = b^a
            prop_assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap());
            let d = random_form(6, 1);
            let _ = d;
        }

        #[test]
        fn odd_forms_anticommute(a in random_form(5, 1), b in random_form(5, 3)) {
            prop_assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap().neg());
        }

        #[test]
        fn interior_is_an_antiderivation(
            a in random_form(6, 2), b in random_form(6, 1), v in proptest::collection::vec(-3i64..=3, 6)
        ) {
            let v: Vec<Rational> = v.into_iter().map(q).collect();
            let lhs = a.wedge(&b).unwrap().interior(&v).unwrap();
            let rhs = a.interior(&v).unwrap().wedge(&b).unwrap()
                .add(&a.wedge(&b.interior(&v).unwrap()).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn wedge_power_vanishes_past_half_dimension(a in random_form(5, 2)) {
            prop_assert!(a.wedge_power(3).unwrap().is_zero());
        }
    }
}
