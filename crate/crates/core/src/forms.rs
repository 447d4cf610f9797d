//! Homogeneous forms stored in tensor coordinates.
//!
//! A degree-`d` form in variables `x0..x{n-1}` is kept as the map
//! `MultiIndex -> Rational` of its symmetric-tensor coordinates `v_alpha`:
//! the monomial coefficient of `x^alpha` is `multinomial(d; alpha) * v_alpha`.
//! Every invariant matrix built downstream has entries that are literally
//! `±v_alpha`, which is why the tensor coordinates are the stored form and
//! monomial coefficients are derived.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::rational::{factorial, parse_rational, Integer, Rational, Ring};

/// Sorted multiset of variable indices; the subscript of a tensor coordinate
/// such as `v_{012}`. Length equals the degree of the form it indexes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<u8>);

impl MultiIndex {
    /// Builds a multi-index from indices in any order.
    pub fn new(mut indices: Vec<u8>) -> Self {
        indices.sort_unstable();
        MultiIndex(indices)
    }

    pub fn from_ids(ids: &[u8]) -> Self {
        Self::new(ids.to_vec())
    }

    /// Converts an exponent vector (one entry per variable) to the index
    /// multiset, e.g. `[2, 0, 1]` -> `002`.
    pub fn from_exponents(exponents: &[u32]) -> Self {
        let mut ids = Vec::new();
        for (i, &e) in exponents.iter().enumerate() {
            for _ in 0..e {
                ids.push(i as u8);
            }
        }
        MultiIndex(ids)
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn max_index(&self) -> Option<u8> {
        self.0.last().copied()
    }

    /// The multi-index with `i` merged in (degree grows by one).
    pub fn insert(&self, i: u8) -> MultiIndex {
        let pos = self.0.partition_point(|&x| x <= i);
        let mut ids = self.0.clone();
        ids.insert(pos, i);
        MultiIndex(ids)
    }

    /// Concatenation as multisets (degrees add).
    pub fn union(&self, other: &MultiIndex) -> MultiIndex {
        let mut ids = self.0.clone();
        ids.extend_from_slice(&other.0);
        ids.sort_unstable();
        MultiIndex(ids)
    }

    /// `multinomial(d; alpha)`: the number of distinct orderings of the
    /// multiset, i.e. `d! / prod(multiplicity!)`.
    pub fn multinomial(&self) -> Integer {
        let mut result = factorial(self.0.len());
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            result /= factorial(j - i);
            i = j;
        }
        result
    }

    /// All distinct orderings of the multiset, each as an index vector.
    pub fn distinct_orderings(&self) -> Vec<Vec<u8>> {
        let d = self.0.len();
        let mut all: Vec<Vec<u8>> = self
            .0
            .iter()
            .copied()
            .permutations(d)
            .collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    /// Concatenated-digit key, e.g. `"012"`; only valid for indices <= 9.
    pub fn key(&self) -> String {
        self.0.iter().map(|i| char::from(b'0' + i)).collect()
    }

    /// Parses a concatenated-digit key; must already be sorted (canonical).
    pub fn from_key(s: &str) -> Result<Self> {
        let mut ids = Vec::with_capacity(s.len());
        for c in s.chars() {
            let d = c
                .to_digit(10)
                .ok_or_else(|| Error::shape(format!("coefficient key {s:?}: non-digit {c:?}")))?;
            ids.push(d as u8);
        }
        if ids.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::shape(format!(
                "coefficient key {s:?} is not in sorted (canonical) order"
            )));
        }
        Ok(MultiIndex(ids))
    }

    /// All multi-indexes of the given degree over `nvars` variables, in
    /// lexicographic order.
    pub fn all(nvars: u8, degree: usize) -> impl Iterator<Item = MultiIndex> {
        (0..nvars)
            .combinations_with_replacement(degree)
            .map(MultiIndex)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.0 {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

/// Homogeneous form with coefficients in an arbitrary ring `R`.
///
/// `R = Rational` is the everyday case ([`Form`]); `R = Poly` appears when a
/// form's coefficients are themselves polynomials in auxiliary variables
/// (the symbolic polar cubic of the Scorza construction).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GForm<R: Ring> {
    nvars: u8,
    degree: usize,
    coeffs: BTreeMap<MultiIndex, R>,
}

/// Homogeneous form over the rationals, in tensor coordinates.
pub type Form = GForm<Rational>;

impl<R: Ring> GForm<R> {
    /// The zero form of the given shape.
    pub fn zero_form(nvars: u8, degree: usize) -> Self {
        GForm {
            nvars,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> u8 {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_index(&self, mi: &MultiIndex) -> Result<()> {
        if mi.degree() != self.degree {
            return Err(Error::shape(format!(
                "index {mi} has degree {}, form has degree {}",
                mi.degree(),
                self.degree
            )));
        }
        if let Some(m) = mi.max_index() {
            if m >= self.nvars {
                return Err(Error::shape(format!(
                    "index {mi} mentions variable x{m}, form has {} variables",
                    self.nvars
                )));
            }
        }
        Ok(())
    }

    /// Tensor coordinate `v_mi` (zero when absent).
    pub fn coeff(&self, mi: &MultiIndex) -> R {
        self.coeffs.get(mi).cloned().unwrap_or_else(R::zero)
    }

    /// Tensor coordinate by raw (unsorted is fine) indices.
    pub fn coeff_ids(&self, ids: &[u8]) -> R {
        self.coeff(&MultiIndex::from_ids(ids))
    }

    /// Sets `v_mi`, validating the index shape; zero values delete the key.
    pub fn set_coeff(&mut self, mi: MultiIndex, value: R) -> Result<()> {
        self.check_index(&mi)?;
        if value.is_zero() {
            self.coeffs.remove(&mi);
        } else {
            self.coeffs.insert(mi, value);
        }
        Ok(())
    }

    /// Adds to `v_mi` in place.
    pub fn add_coeff(&mut self, mi: MultiIndex, value: R) -> Result<()> {
        let updated = self.coeff(&mi) + value;
        self.set_coeff(mi, updated)
    }

    /// Iterates the nonzero tensor coordinates in lexicographic index order.
    pub fn iter(&self) -> impl Iterator<Item = (&MultiIndex, &R)> {
        self.coeffs.iter()
    }

    /// Applies `f` to every coefficient (zero results are dropped).
    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> GForm<S> {
        let mut coeffs = BTreeMap::new();
        for (mi, c) in &self.coeffs {
            let v = f(c);
            if !v.is_zero() {
                coeffs.insert(mi.clone(), v);
            }
        }
        GForm {
            nvars: self.nvars,
            degree: self.degree,
            coeffs,
        }
    }

    /// Coefficient-wise scaling.
    pub fn scale(&self, c: &R) -> GForm<R> {
        self.map_coeffs(|v| v.clone() * c.clone())
    }

    /// Coefficient-wise sum; the shapes must match.
    pub fn add(&self, other: &GForm<R>) -> Result<GForm<R>> {
        if self.nvars != other.nvars || self.degree != other.degree {
            return Err(Error::shape(format!(
                "cannot add forms of shape ({}, {}) and ({}, {})",
                self.nvars, self.degree, other.nvars, other.degree
            )));
        }
        let mut out = self.clone();
        for (mi, c) in &other.coeffs {
            out.add_coeff(mi.clone(), c.clone())?;
        }
        Ok(out)
    }

    /// Builds a form from `(indices, coefficient)` pairs.
    pub fn from_pairs(nvars: u8, degree: usize, pairs: &[(&[u8], R)]) -> Result<Self> {
        let mut f = GForm::zero_form(nvars, degree);
        for (ids, c) in pairs {
            f.add_coeff(MultiIndex::from_ids(ids), c.clone())?;
        }
        Ok(f)
    }
}

impl Form {
    /// Monomial coefficient of `x^mi`, i.e. `multinomial(d; mi) * v_mi`.
    pub fn monomial_coeff(&self, mi: &MultiIndex) -> Rational {
        self.coeff(mi) * Rational::from_integer(mi.multinomial())
    }

    /// Adds the monomial `c * x^mi` (converting to tensor coordinates).
    pub fn add_monomial(&mut self, mi: MultiIndex, c: &Rational) -> Result<()> {
        let v = c / Rational::from_integer(mi.multinomial());
        self.add_coeff(mi, v)
    }

    /// Evaluates the form at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars as usize, "dimension mismatch");
        let mut acc = Rational::zero();
        for (mi, v) in &self.coeffs {
            let mut term = v * Rational::from_integer(mi.multinomial());
            for &i in mi.as_slice() {
                term *= &point[i as usize];
            }
            acc += term;
        }
        acc
    }

    /// `(sum_i l_i x_i)^degree` in tensor coordinates: `v_alpha = prod_{i in alpha} l_i`.
    pub fn power_of_linear(l: &[Rational], degree: usize) -> Result<Form> {
        if l.len() > u8::MAX as usize {
            return Err(Error::shape("too many variables"));
        }
        let nvars = l.len() as u8;
        let mut f = Form::zero_form(nvars, degree);
        for mi in MultiIndex::all(nvars, degree) {
            let mut v = Rational::one();
            for &i in mi.as_slice() {
                v *= &l[i as usize];
            }
            f.set_coeff(mi, v)?;
        }
        Ok(f)
    }

    /// `sum_i g_i^degree` for linear forms `g_i` of a common arity.
    pub fn sum_of_powers(ls: &[Vec<Rational>], degree: usize, nvars: u8) -> Result<Form> {
        let mut acc = Form::zero_form(nvars, degree);
        for l in ls {
            if l.len() != nvars as usize {
                return Err(Error::shape(format!(
                    "linear form arity {} does not match nvars {}",
                    l.len(),
                    nvars
                )));
            }
            acc = acc.add(&Form::power_of_linear(l, degree)?)?;
        }
        Ok(acc)
    }
}

impl GForm<Poly> {
    /// Substitutes rational values for the polynomial coefficients'
    /// variables, collapsing to an ordinary form.
    pub fn eval_coeffs(&self, point: &[Rational]) -> Form {
        self.map_coeffs(|p| p.eval(point))
    }
}

/// Square rational matrix acting on forms by linear substitution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearChange {
    mat: Matrix<Rational>,
}

impl LinearChange {
    pub fn new(mat: Matrix<Rational>) -> Result<Self> {
        if !mat.is_square() {
            return Err(Error::NotSquare {
                rows: mat.nrows(),
                cols: mat.ncols(),
            });
        }
        Ok(LinearChange { mat })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        Self::new(Matrix::from_rows(rows)?)
    }

    pub fn identity(n: u8) -> Self {
        let mut mat = Matrix::zeros(n as usize, n as usize);
        for i in 0..n as usize {
            mat.set(i, i, Rational::one());
        }
        LinearChange { mat }
    }

    pub fn size(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &Matrix<Rational> {
        &self.mat
    }

    pub fn determinant(&self) -> Rational {
        self.mat.det().expect("square by construction")
    }

    /// Matrix product `self * rhs` (so that `act(g, act(h, f)) = act(h.compose(g), f)`).
    pub fn compose(&self, rhs: &LinearChange) -> Result<LinearChange> {
        let n = self.size();
        if rhs.size() != n {
            return Err(Error::shape("size mismatch in composition"));
        }
        let mut mat = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut s = Rational::zero();
                for k in 0..n {
                    s += self.mat.get(i, k) * rhs.mat.get(k, j);
                }
                mat.set(i, j, s);
            }
        }
        Ok(LinearChange { mat })
    }
}

/// Substitution action `act(g, f) = f o g`, i.e. `x -> f(g x)`.
///
/// In tensor coordinates: `v'_beta = sum_alpha v_alpha * sum_{orderings pi of
/// alpha} prod_k g[pi_k][beta_k]`, the pushforward of the symmetric tensor.
pub fn act(g: &LinearChange, f: &Form) -> Result<Form> {
    if g.size() != f.nvars() as usize {
        return Err(Error::shape(format!(
            "substitution size {} does not match nvars {}",
            g.size(),
            f.nvars()
        )));
    }
    let mut out = Form::zero_form(f.nvars(), f.degree());
    let source: Vec<(Vec<Vec<u8>>, Rational)> = f
        .iter()
        .map(|(mi, v)| (mi.distinct_orderings(), v.clone()))
        .collect();
    for beta in MultiIndex::all(f.nvars(), f.degree()) {
        let b = beta.as_slice().to_vec();
        let mut acc = Rational::zero();
        for (orderings, v) in &source {
            let mut weight = Rational::zero();
            for pi in orderings {
                let mut prod = Rational::one();
                for (k, &ik) in pi.iter().enumerate() {
                    prod *= g.mat.get(ik as usize, b[k] as usize);
                    if prod.is_zero() {
                        break;
                    }
                }
                weight += prod;
            }
            acc += v * weight;
        }
        out.set_coeff(beta, acc)?;
    }
    Ok(out)
}

/// Polar contraction of `f` by a vector `x` with entries in any ring:
/// `(P_x f)_beta = sum_i x_i * v_{i beta}`, a form of degree `d - 1`.
///
/// With `x` symbolic (polynomial entries) this is the classical first
/// polar; with concrete rational `x` it degenerates to an ordinary form.
pub fn polar_contract<R: Ring>(f: &Form, x: &[R]) -> Result<GForm<R>> {
    if x.len() != f.nvars() as usize {
        return Err(Error::shape(format!(
            "contraction vector has arity {}, form has {} variables",
            x.len(),
            f.nvars()
        )));
    }
    if f.degree() == 0 {
        return Err(Error::shape("cannot polarize a degree-0 form"));
    }
    let mut out = GForm::<R>::zero_form(f.nvars(), f.degree() - 1);
    for beta in MultiIndex::all(f.nvars(), f.degree() - 1) {
        let mut acc = R::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let v = f.coeff(&beta.insert(i as u8));
            if !v.is_zero() {
                acc = acc + xi.clone() * R::from_rational(&v);
            }
        }
        out.set_coeff(beta, acc)?;
    }
    Ok(out)
}

/// The symbolic vector `(x0, ..., x{n-1})` as polynomials.
pub fn symbolic_vector(n: u8) -> Vec<Poly> {
    (0..n).map(Poly::var).collect()
}

// ---------------------------------------------------------------------------
// JSON encoding: {"nvars": 5, "degree": 3, "coeffs": {"012": "1", ...}}
// with concatenated sorted digit keys and exact rational string values.
// ---------------------------------------------------------------------------

impl Serialize for Form {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.nvars > 10 {
            return Err(serde::ser::Error::custom(
                "digit-keyed JSON encoding requires nvars <= 10",
            ));
        }
        let coeffs: BTreeMap<String, String> = self
            .coeffs
            .iter()
            .map(|(mi, v)| (mi.key(), v.to_string()))
            .collect();
        let mut st = serializer.serialize_struct("Form", 3)?;
        st.serialize_field("nvars", &self.nvars)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Form {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Repr {
            nvars: u8,
            degree: usize,
            coeffs: BTreeMap<String, String>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.nvars > 10 {
            return Err(serde::de::Error::custom(
                "digit-keyed JSON encoding requires nvars <= 10",
            ));
        }
        let mut f = Form::zero_form(repr.nvars, repr.degree);
        for (key, value) in &repr.coeffs {
            let mi = MultiIndex::from_key(key).map_err(serde::de::Error::custom)?;
            let v = parse_rational(value)
                .map_err(|e| serde::de::Error::custom(format!("coefficient {key:?}: {e}")))?;
            f.set_coeff(mi, v).map_err(serde::de::Error::custom)?;
        }
        Ok(f)
    }
}

impl Form {
    /// Canonical JSON text (sorted keys, exact rational strings).
    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string(self).map_err(|e| Error::shape(e.to_string()))
    }

    /// Parses the JSON form format.
    pub fn from_json(text: &str) -> Result<Form> {
        serde_json::from_str(text).map_err(|e| Error::syntax(0, format!("JSON form: {e}")))
    }
}
