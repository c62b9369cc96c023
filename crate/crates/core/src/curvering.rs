//! Miura-Kamiya plane curves `y^a + sum c_ij x^i y^j + d x^b = 0`, their
//! coordinate rings, and the monomial arithmetic of the semigroup `<a, b>`.
//!
//! Ring elements are kept fully reduced: every stored monomial `x^i y^j`
//! has `j < a`. Monomials are in bijection with the nongaps of `<a, b>`
//! through their weighted degree `ai + bj`, so a ring element is stored as
//! a sparse map from nongap to coefficient and its order `delta` is simply
//! the largest key.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::gf::{Elem, Field, GfError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("weights a={a}, b={b} are not coprime positive integers")]
    NotCoprime { a: u32, b: u32 },
    #[error("leading coefficient d of x^b must be nonzero")]
    ZeroLeading,
    #[error("coefficient index ({i}, {j}) outside the region ai+bj < ab, j < a")]
    CoefficientOutOfRange { i: u32, j: u32 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("operands belong to different curves")]
    MixedCurves,
    #[error("{0} is a gap of the semigroup")]
    Gap(u32),
    #[error("the footprint of an empty monomial set is infinite")]
    EmptyFootprint,
    #[error(transparent)]
    Field(#[from] GfError),
}

/// Order of a ring element at the point at infinity. The zero function
/// has order [`Degree::Bottom`], which compares below every finite order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    Bottom,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::Bottom => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Bottom => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A monomial `x^i y^j` of the coordinate ring (`j < a`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub i: u32,
    pub j: u32,
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.i {
            0 => {}
            1 => parts.push("x".to_string()),
            i => parts.push(format!("x^{i}")),
        }
        match self.j {
            0 => {}
            1 => parts.push("y".to_string()),
            j => parts.push(format!("y^{j}")),
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// The numerical semigroup `<a, b>` with `gcd(a, b) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Semigroup {
    a: u32,
    b: u32,
    /// b' with b' * b = 1 (mod a)
    b_inv: u32,
}

fn gcd(mut x: u32, mut y: u32) -> u32 {
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

impl Semigroup {
    pub fn new(a: u32, b: u32) -> Result<Semigroup, CurveError> {
        if a == 0 || b == 0 || gcd(a, b) != 1 {
            return Err(CurveError::NotCoprime { a, b });
        }
        let b_inv = (0..a)
            .find(|&k| (k as u64 * b as u64) % a as u64 == 1 % a as u64)
            .unwrap();
        Ok(Semigroup { a, b, b_inv })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn degree(&self, m: Monomial) -> u32 {
        self.a * m.i + self.b * m.j
    }

    /// `phi_s`, the unique monomial of weighted degree `s`, if `s` is a nongap.
    pub fn monomial(&self, s: u32) -> Option<Monomial> {
        let j = ((self.b_inv as u64 * s as u64) % self.a as u64) as u32;
        let bj = self.b * j;
        (s >= bj).then(|| Monomial {
            i: (s - bj) / self.a,
            j,
        })
    }

    pub fn phi(&self, s: u32) -> Result<Monomial, CurveError> {
        self.monomial(s).ok_or(CurveError::Gap(s))
    }

    pub fn is_nongap(&self, s: u32) -> bool {
        self.monomial(s).is_some()
    }

    /// Every gap; all of them lie below the conductor `(a-1)(b-1)`.
    pub fn gaps(&self) -> Vec<u32> {
        let conductor = (self.a - 1) * (self.b - 1);
        (0..conductor).filter(|&s| !self.is_nongap(s)).collect()
    }

    pub fn gaps_below(&self, s: u32) -> Vec<u32> {
        (0..s).filter(|&t| !self.is_nongap(t)).collect()
    }

    /// Nongaps in increasing order, starting at 0.
    pub fn nongaps(&self) -> impl Iterator<Item = u32> + '_ {
        (0u32..).filter(move |&s| self.is_nongap(s))
    }

    /// Lattice divisibility: `x^r.i y^r.j` divides `x^t.i y^t.j` when
    /// the exponent difference is a monomial, allowing for one wrap of
    /// `y^a` into `x^b`.
    pub fn monomial_divides(&self, r: Monomial, t: Monomial) -> bool {
        if t.j >= r.j {
            t.i >= r.i
        } else {
            t.i >= r.i + self.b
        }
    }

    /// If `s` divides `t`, the quotient `t - s` (so `phi_t / phi_s = phi_{t-s}`).
    pub fn divides(&self, s: u32, t: u32) -> Option<u32> {
        let (r, m) = (self.monomial(s)?, self.monomial(t)?);
        self.monomial_divides(r, m).then(|| t - s)
    }

    /// The one or two lcms of two nongaps: every common multiple is
    /// divisible by one of them.
    pub fn lcms(&self, s: u32, t: u32) -> Result<Vec<u32>, CurveError> {
        let ms = self.phi(s)?;
        let mt = self.phi(t)?;
        if self.monomial_divides(ms, mt) {
            return Ok(vec![t]);
        }
        if self.monomial_divides(mt, ms) {
            return Ok(vec![s]);
        }
        // normalize to s.i < t.i, s.j > t.j
        let (ms, mt) = if ms.i < mt.i { (ms, mt) } else { (mt, ms) };
        let l1 = self.a * mt.i + self.b * ms.j;
        let l2 = self.a * (ms.i + self.b) + self.b * mt.j;
        Ok(vec![l1, l2])
    }

    /// Number of monomials in row `j` not divisible by any generator.
    fn row_limit(&self, gens: &[Monomial], j: u32) -> u32 {
        gens.iter()
            .map(|r| if j >= r.j { r.i } else { r.i + self.b })
            .min()
            .unwrap_or(u32::MAX)
    }

    /// The footprint: all monomials divisible by none of `gens`, as
    /// nongaps in increasing order.
    pub fn footprint(&self, gens: &[u32]) -> Result<Vec<u32>, CurveError> {
        if gens.is_empty() {
            return Err(CurveError::EmptyFootprint);
        }
        let gens = gens
            .iter()
            .map(|&g| self.phi(g))
            .collect::<Result<Vec<_>, _>>()?;
        let mut out = Vec::new();
        for j in 0..self.a {
            for i in 0..self.row_limit(&gens, j) {
                out.push(self.degree(Monomial { i, j }));
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Size of the footprint without materializing it.
    pub fn footprint_size(&self, gens: &[u32]) -> Result<usize, CurveError> {
        if gens.is_empty() {
            return Err(CurveError::EmptyFootprint);
        }
        let gens = gens
            .iter()
            .map(|&g| self.phi(g))
            .collect::<Result<Vec<_>, _>>()?;
        Ok((0..self.a).map(|j| self.row_limit(&gens, j) as usize).sum())
    }
}

#[derive(Debug)]
struct CurveInner {
    field: Field,
    sg: Semigroup,
    d: Elem,
    coeffs: BTreeMap<(u32, u32), Elem>,
    /// y^a rewritten as -(d x^b + sum c_ij x^i y^j), as (i, j, coefficient).
    y_pow_a: Vec<(u32, u32, Elem)>,
}

/// A Miura-Kamiya curve. Cloning is cheap; clones share the definition.
#[derive(Clone, Debug)]
pub struct Curve {
    inner: Arc<CurveInner>,
}

impl PartialEq for Curve {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.field == other.inner.field
                && self.inner.sg == other.inner.sg
                && self.inner.d == other.inner.d
                && self.inner.coeffs == other.inner.coeffs)
    }
}

impl Eq for Curve {}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut v, mut m) = (q, 0);
    while v % p == 0 {
        v /= p;
        m += 1;
    }
    (v == 1).then_some((p, m))
}

impl Curve {
    /// `coeffs` lists the lower-order terms `c_ij x^i y^j`; zero entries are dropped.
    pub fn new(
        field: Field,
        a: u32,
        b: u32,
        d: Elem,
        coeffs: impl IntoIterator<Item = ((u32, u32), Elem)>,
    ) -> Result<Curve, CurveError> {
        let sg = Semigroup::new(a, b)?;
        if d.is_zero() {
            return Err(CurveError::ZeroLeading);
        }
        let mut map = BTreeMap::new();
        for ((i, j), c) in coeffs {
            if j >= a || a * i + b * j >= a * b {
                return Err(CurveError::CoefficientOutOfRange { i, j });
            }
            if !c.is_zero() {
                map.insert((i, j), c);
            }
        }
        let mut y_pow_a = vec![(b, 0, field.neg(d))];
        y_pow_a.extend(map.iter().map(|(&(i, j), &c)| (i, j, field.neg(c))));
        Ok(Curve {
            inner: Arc::new(CurveInner {
                field,
                sg,
                d,
                coeffs: map,
                y_pow_a,
            }),
        })
    }

    /// The Hermitian curve `y^q + y - x^(q+1)` over GF(q^2).
    pub fn hermitian(q: u32) -> Result<Curve, CurveError> {
        let (p, m) = prime_power(q).ok_or(CurveError::NotPrimePower(q))?;
        let field = Field::new(p, 2 * m, None)?;
        let minus_one = field.neg(field.one());
        let one = field.one();
        Curve::new(field, q, q + 1, minus_one, [((0, 1), one)])
    }

    pub fn field(&self) -> &Field {
        &self.inner.field
    }

    pub fn semigroup(&self) -> &Semigroup {
        &self.inner.sg
    }

    pub fn a(&self) -> u32 {
        self.inner.sg.a
    }

    pub fn b(&self) -> u32 {
        self.inner.sg.b
    }

    pub fn d(&self) -> Elem {
        self.inner.d
    }

    pub fn coeffs(&self) -> &BTreeMap<(u32, u32), Elem> {
        &self.inner.coeffs
    }

    /// Value of the defining polynomial at `(x, y)`.
    pub fn equation_at(&self, x: Elem, y: Elem) -> Elem {
        let f = self.field();
        let term = |c: Elem, i: u32, j: u32| {
            f.mul(
                c,
                f.mul(f.pow(x, i as i64).unwrap(), f.pow(y, j as i64).unwrap()),
            )
        };
        let mut acc = term(f.one(), 0, self.a());
        acc = f.add(acc, term(self.d(), self.b(), 0));
        for (&(i, j), &c) in self.coeffs() {
            acc = f.add(acc, term(c, i, j));
        }
        acc
    }

    /// Both formal partial derivatives at `(x, y)`.
    pub fn gradient_at(&self, x: Elem, y: Elem) -> (Elem, Elem) {
        let f = self.field();
        // n * c * x^i * y^j, with n an integer multiplier
        let term = |n: u32, c: Elem, i: u32, j: u32| {
            let base = f.mul(
                c,
                f.mul(f.pow(x, i as i64).unwrap(), f.pow(y, j as i64).unwrap()),
            );
            f.mul_int(base, n as u64)
        };
        let (a, b) = (self.a(), self.b());
        let mut dx = term(b, self.d(), b - 1, 0);
        let mut dy = term(a, f.one(), 0, a - 1);
        for (&(i, j), &c) in self.coeffs() {
            if i > 0 {
                dx = f.add(dx, term(i, c, i - 1, j));
            }
            if j > 0 {
                dy = f.add(dy, term(j, c, i, j - 1));
            }
        }
        (dx, dy)
    }

    /// Reduces `x^i y^j` for arbitrary `j` into the monomial basis,
    /// accumulating `coef` times it into `out` (keyed by nongap).
    fn accumulate_reduced(&self, i: u32, j: u32, coef: Elem, out: &mut BTreeMap<u32, Elem>) {
        let f = self.field();
        let a = self.a();
        if j < a {
            let s = self.inner.sg.degree(Monomial { i, j });
            add_term(f, out, s, coef);
            return;
        }
        for &(ti, tj, tc) in &self.inner.y_pow_a {
            self.accumulate_reduced(i + ti, j - a + tj, f.mul(coef, tc), out);
        }
    }

    /// Rewrites an arbitrary bivariate polynomial, given as `(i, j) -> c`,
    /// into the reduced monomial basis.
    pub fn reduce(&self, raw: impl IntoIterator<Item = ((u32, u32), Elem)>) -> RingElement {
        let mut terms = BTreeMap::new();
        for ((i, j), c) in raw {
            if !c.is_zero() {
                self.accumulate_reduced(i, j, c, &mut terms);
            }
        }
        RingElement {
            curve: self.clone(),
            terms,
        }
    }

    /// `phi_s * phi_t` as a reduced element, stored as (nongap, coefficient) pairs.
    fn monomial_product(&self, s: u32, t: u32) -> BTreeMap<u32, Elem> {
        let sg = &self.inner.sg;
        let (ms, mt) = (sg.monomial(s).unwrap(), sg.monomial(t).unwrap());
        let mut out = BTreeMap::new();
        self.accumulate_reduced(ms.i + mt.i, ms.j + mt.j, Elem::ONE, &mut out);
        out
    }
}

fn add_term(f: &Field, map: &mut BTreeMap<u32, Elem>, s: u32, c: Elem) {
    if c.is_zero() {
        return;
    }
    match map.entry(s) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let v = f.add(*e.get(), c);
            if v.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = v;
            }
        }
    }
}

/// An element of the coordinate ring, in the reduced monomial basis.
#[derive(Clone)]
pub struct RingElement {
    curve: Curve,
    /// nongap -> nonzero coefficient
    terms: BTreeMap<u32, Elem>,
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.curve == other.curve && self.terms == other.terms
    }
}

impl Eq for RingElement {}

impl RingElement {
    pub fn zero(curve: &Curve) -> RingElement {
        RingElement {
            curve: curve.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(curve: &Curve, c: Elem) -> RingElement {
        RingElement::term(curve, 0, c).expect("0 is a nongap")
    }

    pub fn one(curve: &Curve) -> RingElement {
        RingElement::constant(curve, Elem::ONE)
    }

    /// `c * phi_s`.
    pub fn term(curve: &Curve, s: u32, c: Elem) -> Result<RingElement, CurveError> {
        curve.semigroup().phi(s)?;
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(s, c);
        }
        Ok(RingElement {
            curve: curve.clone(),
            terms,
        })
    }

    pub fn x(curve: &Curve) -> RingElement {
        RingElement::term(curve, curve.a(), Elem::ONE).unwrap()
    }

    pub fn y(curve: &Curve) -> RingElement {
        RingElement::term(curve, curve.b(), Elem::ONE).unwrap()
    }

    /// Builds from `(nongap, coefficient)` pairs already in the monomial basis.
    pub fn from_terms(
        curve: &Curve,
        terms: impl IntoIterator<Item = (u32, Elem)>,
    ) -> Result<RingElement, CurveError> {
        let mut map = BTreeMap::new();
        for (s, c) in terms {
            curve.semigroup().phi(s)?;
            add_term(curve.field(), &mut map, s, c);
        }
        Ok(RingElement {
            curve: curve.clone(),
            terms: map,
        })
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn delta(&self) -> Degree {
        match self.terms.keys().next_back() {
            None => Degree::Bottom,
            Some(&s) => Degree::Finite(s),
        }
    }

    /// Leading nongap and coefficient.
    pub fn leading(&self) -> Option<(u32, Elem)> {
        self.terms.iter().next_back().map(|(&s, &c)| (s, c))
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.leading()
            .map(|(s, _)| self.curve.semigroup().monomial(s).unwrap())
    }

    /// Coefficient of `phi_s` (zero when absent).
    pub fn coeff(&self, s: u32) -> Elem {
        self.terms.get(&s).copied().unwrap_or(Elem::ZERO)
    }

    /// Terms as `(nongap, coefficient)` in increasing order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, Elem)> + '_ {
        self.terms.iter().map(|(&s, &c)| (s, c))
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.keys().copied()
    }

    fn check(&self, other: &RingElement) -> Result<(), CurveError> {
        if self.curve == other.curve {
            Ok(())
        } else {
            Err(CurveError::MixedCurves)
        }
    }

    pub fn checked_add(&self, other: &RingElement) -> Result<RingElement, CurveError> {
        self.check(other)?;
        let f = self.curve.field();
        let mut terms = self.terms.clone();
        for (&s, &c) in &other.terms {
            add_term(f, &mut terms, s, c);
        }
        Ok(RingElement {
            curve: self.curve.clone(),
            terms,
        })
    }

    pub fn checked_sub(&self, other: &RingElement) -> Result<RingElement, CurveError> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &RingElement) -> Result<RingElement, CurveError> {
        self.check(other)?;
        let f = self.curve.field();
        let mut terms = BTreeMap::new();
        for (&s, &c) in &self.terms {
            for (&t, &e) in &other.terms {
                let coef = f.mul(c, e);
                for (u, k) in self.curve.monomial_product(s, t) {
                    add_term(f, &mut terms, u, f.mul(coef, k));
                }
            }
        }
        Ok(RingElement {
            curve: self.curve.clone(),
            terms,
        })
    }

    pub fn neg(&self) -> RingElement {
        self.scale(self.curve.field().neg(Elem::ONE))
    }

    pub fn scale(&self, c: Elem) -> RingElement {
        let f = self.curve.field();
        let terms = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.terms.iter().map(|(&s, &e)| (s, f.mul(c, e))).collect()
        };
        RingElement {
            curve: self.curve.clone(),
            terms,
        }
    }

    /// `c * phi_s * self`.
    pub fn mul_term(&self, s: u32, c: Elem) -> Result<RingElement, CurveError> {
        self.curve.semigroup().phi(s)?;
        let f = self.curve.field();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            for (&t, &e) in &self.terms {
                let coef = f.mul(c, e);
                for (u, k) in self.curve.monomial_product(s, t) {
                    add_term(f, &mut terms, u, f.mul(coef, k));
                }
            }
        }
        Ok(RingElement {
            curve: self.curve.clone(),
            terms,
        })
    }

    /// Value at the point `(x, y)`.
    pub fn evaluate(&self, x: Elem, y: Elem) -> Elem {
        let f = self.curve.field();
        let sg = self.curve.semigroup();
        self.terms.iter().fold(Elem::ZERO, |acc, (&s, &c)| {
            let m = sg.monomial(s).unwrap();
            let v = f.mul(
                c,
                f.mul(f.pow(x, m.i as i64).unwrap(), f.pow(y, m.j as i64).unwrap()),
            );
            f.add(acc, v)
        })
    }

    /// Leading term as text, e.g. `a^7*x^8*y^2`; `0` for zero.
    pub fn leading_term_string(&self) -> String {
        match self.leading() {
            None => "0".to_string(),
            Some((s, c)) => format_term(&self.curve, s, c),
        }
    }
}

/// Formats `c * phi_s` in the `coef*x^i*y^j` grammar, omitting unit factors.
pub fn format_term(curve: &Curve, s: u32, c: Elem) -> String {
    let m = curve.semigroup().monomial(s).expect("nongap");
    let coef = curve.field().format(c);
    match (coef.as_str(), m.i + m.j) {
        (_, 0) => coef,
        ("1", _) => m.to_string(),
        _ => format!("{coef}*{m}"),
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<_> = self
            .terms
            .iter()
            .rev()
            .map(|(&s, &c)| format_term(&self.curve, s, c))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElement({self})")
    }
}

macro_rules! ring_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&RingElement> for &RingElement {
            type Output = RingElement;

            /// Panics if the operands live on different curves; use the
            /// `checked_` variant to get an error instead.
            fn $method(self, rhs: &RingElement) -> RingElement {
                self.$checked(rhs)
                    .expect("ring operands on different curves")
            }
        }
    };
}

ring_binop!(Add, add, checked_add);
ring_binop!(Sub, sub, checked_sub);
ring_binop!(Mul, mul, checked_mul);
