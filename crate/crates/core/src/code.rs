//! One-point evaluation codes `C_u = ev(L_u)` on a Miura-Kamiya curve.
//!
//! Construction runs one incremental Gaussian elimination over the
//! evaluation vectors `ev(phi_s)` in increasing order of `s`. Monomials
//! whose vectors are independent of the earlier ones form the footprint
//! `Delta(J)` of the vanishing ideal `J` of the point set; the first
//! dependent monomial of each footprint row yields a reduced Groebner basis
//! element of `J`. The same elimination, carried to reduced echelon form,
//! gives the interpolation matrix used by [`Code::lagrange`].

use std::collections::BTreeSet;

use thiserror::Error;

use crate::curvering::{Curve, CurveError, Monomial, RingElement};
use crate::gf::{Elem, Field};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error("point {index} is not on the curve")]
    NotOnCurve { index: usize },
    #[error("point {index} is singular")]
    Singular { index: usize },
    #[error("points {first} and {second} coincide")]
    DuplicatePoint { first: usize, second: usize },
    #[error("the point set is empty")]
    NoPoints,
    #[error("u = {u} must satisfy 0 < u < n = {n}")]
    BadU { u: u32, n: usize },
    #[error("evaluation is not injective on L_u: rank {rank} < dimension {k}")]
    NotInjective { rank: usize, k: usize },
    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("footprint scan gave up at degree {0}")]
    ScanLimit(u32),
}

pub type Point = (Elem, Elem);

/// Every nonsingular affine rational point of the curve, ordered by the
/// canonical element order of `x`, then of `y`.
pub fn rational_points(curve: &Curve) -> Vec<Point> {
    let f = curve.field();
    let mut out = Vec::new();
    for x in f.elements() {
        for y in f.elements() {
            if curve.equation_at(x, y).is_zero() {
                let (dx, dy) = curve.gradient_at(x, y);
                if !(dx.is_zero() && dy.is_zero()) {
                    out.push((x, y));
                }
            }
        }
    }
    out
}

/// The code `C_u` over an ordered point list.
#[derive(Clone, Debug)]
pub struct Code {
    curve: Curve,
    points: Vec<Point>,
    u: u32,
    message_index: Vec<u32>,
    eta: Vec<RingElement>,
    delta_j: Vec<u32>,
    /// interp[k][i]: weight of v_i in the coefficient of phi_{delta_j[k]}
    interp: Vec<Vec<Elem>>,
}

/// Reduced echelon elimination state over GF(q)^n, tracking each row as a
/// combination of the footprint monomials.
struct Eliminator<'a> {
    field: &'a Field,
    /// (pivot column, row vector, combination over footprint indices)
    rows: Vec<(usize, Vec<Elem>, Vec<Elem>)>,
}

impl<'a> Eliminator<'a> {
    /// Reduces `v` by the current rows. Returns the residual and the
    /// combination `c` such that `residual = v + sum_k c_k ev(delta_k)`.
    fn reduce(&self, mut v: Vec<Elem>) -> (Vec<Elem>, Vec<Elem>) {
        let f = self.field;
        let mut combo = vec![Elem::ZERO; self.rows.len()];
        for (pivot, row, row_combo) in &self.rows {
            let c = v[*pivot];
            if c.is_zero() {
                continue;
            }
            let nc = f.neg(c);
            for (x, &r) in v.iter_mut().zip(row) {
                *x = f.add(*x, f.mul(nc, r));
            }
            for (x, &r) in combo.iter_mut().zip(row_combo) {
                *x = f.add(*x, f.mul(nc, r));
            }
        }
        (v, combo)
    }

    /// Adds an independent residual as a new footprint element.
    fn push(&mut self, residual: Vec<Elem>, mut combo: Vec<Elem>) {
        let f = self.field;
        let pivot = residual.iter().position(|e| !e.is_zero()).unwrap();
        let inv = f.inv(residual[pivot]).unwrap();
        let k = self.rows.len();
        combo.push(Elem::ONE);
        let row: Vec<Elem> = residual.iter().map(|&x| f.mul(x, inv)).collect();
        let combo: Vec<Elem> = combo.iter().map(|&x| f.mul(x, inv)).collect();
        for (_, r, rc) in &mut self.rows {
            rc.push(Elem::ZERO);
            let c = r[pivot];
            if c.is_zero() {
                continue;
            }
            let nc = f.neg(c);
            for (x, &y) in r.iter_mut().zip(&row) {
                *x = f.add(*x, f.mul(nc, y));
            }
            for (x, &y) in rc.iter_mut().zip(&combo) {
                *x = f.add(*x, f.mul(nc, y));
            }
        }
        debug_assert_eq!(combo.len(), k + 1);
        self.rows.push((pivot, row, combo));
    }
}

impl Code {
    /// Builds `C_u` over the given ordered points.
    pub fn new(curve: Curve, points: Vec<Point>, u: u32) -> Result<Code, CodeError> {
        let n = points.len();
        if n == 0 {
            return Err(CodeError::NoPoints);
        }
        for (index, &(x, y)) in points.iter().enumerate() {
            if !curve.field().contains(x) || !curve.field().contains(y) {
                return Err(CodeError::NotOnCurve { index });
            }
            if !curve.equation_at(x, y).is_zero() {
                return Err(CodeError::NotOnCurve { index });
            }
            let (dx, dy) = curve.gradient_at(x, y);
            if dx.is_zero() && dy.is_zero() {
                return Err(CodeError::Singular { index });
            }
        }
        for first in 0..n {
            for second in first + 1..n {
                if points[first] == points[second] {
                    return Err(CodeError::DuplicatePoint { first, second });
                }
            }
        }
        if u == 0 || u as usize >= n {
            return Err(CodeError::BadU { u, n });
        }

        let (eta, delta_j, interp) = Self::ideal_data(&curve, &points)?;
        let sg = curve.semigroup();
        let message_index: Vec<u32> = sg.nongaps().take_while(|&s| s <= u).collect();

        // ev is injective on L_u iff every nongap <= u was independent
        let rank = message_index
            .iter()
            .filter(|s| delta_j.binary_search(s).is_ok())
            .count();
        if rank < message_index.len() {
            return Err(CodeError::NotInjective {
                rank,
                k: message_index.len(),
            });
        }

        Ok(Code {
            curve,
            points,
            u,
            message_index,
            eta,
            delta_j,
            interp,
        })
    }

    /// The Hermitian code over GF(q^2) on all `q^3` affine points, in
    /// canonical point order.
    pub fn hermitian(q: u32, u: u32) -> Result<Code, CodeError> {
        let curve = Curve::hermitian(q)?;
        let points = rational_points(&curve);
        Code::new(curve, points, u)
    }

    #[allow(clippy::type_complexity)]
    fn ideal_data(
        curve: &Curve,
        points: &[Point],
    ) -> Result<(Vec<RingElement>, Vec<u32>, Vec<Vec<Elem>>), CodeError> {
        let n = points.len();
        let field = curve.field();
        let sg = curve.semigroup();
        let ev_mono = |s: u32| -> Vec<Elem> {
            let m = sg.monomial(s).unwrap();
            points
                .iter()
                .map(|&(x, y)| {
                    field.mul(
                        field.pow(x, m.i as i64).unwrap(),
                        field.pow(y, m.j as i64).unwrap(),
                    )
                })
                .collect()
        };

        let mut elim = Eliminator {
            field,
            rows: Vec::new(),
        };
        let mut delta_j = Vec::new();
        // every point function is a polynomial in x of degree < |F| times y^j, j < a
        let limit = sg.degree(Monomial {
            i: field.order() * (n as u32 + 1),
            j: sg.a() - 1,
        });
        let mut s = 0u32;
        while delta_j.len() < n {
            if s > limit {
                return Err(CodeError::ScanLimit(s));
            }
            if sg.is_nongap(s) {
                let (residual, combo) = elim.reduce(ev_mono(s));
                if residual.iter().any(|e| !e.is_zero()) {
                    elim.push(residual, combo);
                    delta_j.push(s);
                }
            }
            s += 1;
        }

        // rows of the footprint are prefixes; the first monomial past each
        // row is a candidate leading monomial, kept if minimal
        let mut row_len = vec![0u32; sg.a() as usize];
        for &t in &delta_j {
            row_len[sg.monomial(t).unwrap().j as usize] += 1;
        }
        let candidates: Vec<Monomial> = (0..sg.a())
            .map(|j| Monomial {
                i: row_len[j as usize],
                j,
            })
            .collect();
        let minimal: Vec<Monomial> = candidates
            .iter()
            .copied()
            .filter(|&c| {
                !candidates
                    .iter()
                    .any(|&o| o != c && sg.monomial_divides(o, c))
            })
            .collect();

        let mut eta = Vec::with_capacity(minimal.len());
        for m in minimal {
            let s = sg.degree(m);
            let (residual, combo) = elim.reduce(ev_mono(s));
            debug_assert!(residual.iter().all(|e| e.is_zero()));
            let terms = std::iter::once((s, Elem::ONE))
                .chain(delta_j.iter().zip(combo).map(|(&t, c)| (t, c)));
            eta.push(RingElement::from_terms(curve, terms)?);
        }
        eta.sort_by_key(|e| e.leading().map(|(s, _)| s));

        let mut interp = vec![vec![Elem::ZERO; n]; n];
        for (pivot, _, combo) in &elim.rows {
            for (k, &c) in combo.iter().enumerate() {
                interp[k][*pivot] = c;
            }
        }
        Ok((eta, delta_j, interp))
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn field(&self) -> &Field {
        self.curve.field()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn u(&self) -> u32 {
        self.u
    }

    /// Dimension `k`.
    pub fn dimension(&self) -> usize {
        self.message_index.len()
    }

    /// The nongaps `s <= u`, in increasing order; message coordinates follow this order.
    pub fn message_index(&self) -> &[u32] {
        &self.message_index
    }

    /// Reduced Groebner basis of the vanishing ideal `J`, by increasing leading monomial.
    pub fn ideal_basis(&self) -> &[RingElement] {
        &self.eta
    }

    /// Footprint of `J` as nongaps in increasing order; always `n` of them.
    pub fn ideal_footprint(&self) -> &[u32] {
        &self.delta_j
    }

    pub fn in_ideal_footprint(&self, s: u32) -> bool {
        self.delta_j.binary_search(&s).is_ok()
    }

    /// `ev(f)`.
    pub fn ev(&self, f: &RingElement) -> Vec<Elem> {
        self.points.iter().map(|&(x, y)| f.evaluate(x, y)).collect()
    }

    /// `mu = sum omega_s phi_s` for a message in [`Code::message_index`] order.
    pub fn message_function(&self, msg: &[Elem]) -> Result<RingElement, CodeError> {
        if msg.len() != self.dimension() {
            return Err(CodeError::LengthMismatch {
                expected: self.dimension(),
                got: msg.len(),
            });
        }
        Ok(RingElement::from_terms(
            &self.curve,
            self.message_index.iter().copied().zip(msg.iter().copied()),
        )?)
    }

    pub fn encode(&self, msg: &[Elem]) -> Result<Vec<Elem>, CodeError> {
        Ok(self.ev(&self.message_function(msg)?))
    }

    /// The interpolant of `v` supported on the footprint of `J`.
    pub fn lagrange(&self, v: &[Elem]) -> Result<RingElement, CodeError> {
        let n = self.len();
        if v.len() != n {
            return Err(CodeError::LengthMismatch {
                expected: n,
                got: v.len(),
            });
        }
        let f = self.field();
        let terms = self.delta_j.iter().zip(&self.interp).map(|(&s, row)| {
            let c = row
                .iter()
                .zip(v)
                .fold(Elem::ZERO, |acc, (&w, &x)| f.add(acc, f.mul(w, x)));
            (s, c)
        });
        Ok(RingElement::from_terms(&self.curve, terms)?)
    }

    /// `nu(s) = |Delta(J) u Delta(R phi_s)| - s`.
    pub fn nu(&self, s: u32) -> Result<i64, CodeError> {
        let sg = self.curve.semigroup();
        let outside = sg
            .footprint(&[s])?
            .into_iter()
            .filter(|t| !self.in_ideal_footprint(*t))
            .count();
        Ok((self.len() + outside) as i64 - s as i64)
    }

    /// `d_u = min nu(s)` over nongaps `s <= u`.
    pub fn d_u(&self) -> i64 {
        self.radius_at(self.u)
    }

    /// `d_u` for another `u` over the same points (the code's own `u` is ignored).
    pub fn radius_at(&self, u: u32) -> i64 {
        self.curve
            .semigroup()
            .nongaps()
            .take_while(|&s| s <= u)
            .map(|s| self.nu(s).expect("nongap"))
            .min()
            .expect("0 is always a nongap")
    }

    /// Number of errors the decoder is guaranteed to correct.
    pub fn correction_radius(&self) -> usize {
        ((self.d_u() - 1).max(0) / 2) as usize
    }

    /// Hamming distance.
    pub fn distance(a: &[Elem], b: &[Elem]) -> usize {
        a.iter().zip(b).filter(|(x, y)| x != y).count()
    }

    /// Footprint of the ideal as a set, for set algebra in tests and diagnostics.
    pub fn ideal_footprint_set(&self) -> BTreeSet<u32> {
        self.delta_j.iter().copied().collect()
    }
}

/// Closed-form `d_u` of the Hermitian code of length `q^3`, for a nongap
/// `u < q^3`: with `u = aq + b`, `0 <= b < q`, it is `q^3 - aq` when
/// `b <= a + q - q^2` and `q^3 - u` otherwise.
pub fn hermitian_d_u(q: u32, u: u32) -> Result<i64, CodeError> {
    let sg = crate::curvering::Semigroup::new(q, q + 1)?;
    let n = q.pow(3);
    if !sg.is_nongap(u) {
        return Err(CurveError::Gap(u).into());
    }
    if u >= n {
        return Err(CodeError::BadU { u, n: n as usize });
    }
    let (q, u) = (q as i64, u as i64);
    let (a, b) = (u / q, u % q);
    Ok(if b <= a + q - q * q {
        q.pow(3) - a * q
    } else {
        q.pow(3) - u
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The 27 points of y^3 + y = x^4 over GF(9) in the reference order.
    pub(crate) fn reference_points_q3(curve: &Curve) -> Vec<Point> {
        const PTS: [(&str, &str); 27] = [
            ("0", "0"),
            ("0", "a^2"),
            ("0", "a^6"),
            ("1", "2"),
            ("1", "a"),
            ("1", "a^3"),
            ("2", "2"),
            ("2", "a"),
            ("2", "a^3"),
            ("a", "1"),
            ("a", "a^7"),
            ("a", "a^5"),
            ("a^2", "2"),
            ("a^2", "a"),
            ("a^2", "a^3"),
            ("a^7", "1"),
            ("a^7", "a^7"),
            ("a^7", "a^5"),
            ("a^5", "1"),
            ("a^5", "a^7"),
            ("a^5", "a^5"),
            ("a^3", "1"),
            ("a^3", "a^7"),
            ("a^3", "a^5"),
            ("a^6", "2"),
            ("a^6", "a"),
            ("a^6", "a^3"),
        ];
        let f = curve.field();
        PTS.iter()
            .map(|(x, y)| (f.parse(x).unwrap(), f.parse(y).unwrap()))
            .collect()
    }

    #[test]
    fn point_counts() {
        let c3 = Curve::hermitian(3).unwrap();
        let pts = rational_points(&c3);
        assert_eq!(pts.len(), 27);
        assert!(pts.contains(&(Elem::ZERO, Elem::ZERO)));
        let mut reference = reference_points_q3(&c3);
        let mut sorted = pts.clone();
        let key = |p: &Point| {
            (
                c3.field().canonical_rank(p.0),
                c3.field().canonical_rank(p.1),
            )
        };
        reference.sort_by_key(key);
        sorted.sort_by_key(key);
        assert_eq!(reference, sorted);
        assert_eq!(rational_points(&Curve::hermitian(2).unwrap()).len(), 8);
    }

    #[test]
    fn ideal_basis_full_hermitian() {
        for (q, n) in [(2u32, 8usize), (3, 27)] {
            let code = Code::hermitian(q, 1).unwrap();
            let c = code.curve();
            let eta = code.ideal_basis();
            assert_eq!(eta.len(), 1);
            let x = RingElement::x(c);
            let xq2 = RingElement::term(c, q * q * q, Elem::ONE).unwrap();
            assert_eq!(eta[0], &xq2 - &x);
            assert_eq!(code.ideal_footprint().len(), n);
        }
    }

    #[test]
    fn ideal_basis_single_point() {
        let c = Curve::hermitian(3).unwrap();
        let origin = (Elem::ZERO, Elem::ZERO);
        let eta = Code::ideal_data(&c, &[origin]).unwrap().0;
        assert_eq!(eta, [RingElement::x(&c), RingElement::y(&c)]);
    }

    #[test]
    fn eta_vanish_and_are_reduced() {
        let c = Curve::hermitian(3).unwrap();
        let pts = rational_points(&c);
        // a subset exercises a nontrivial staircase
        let subset: Vec<Point> = pts.iter().copied().step_by(2).collect();
        let code = Code::new(c.clone(), subset.clone(), 5).unwrap();
        assert_eq!(code.ideal_footprint().len(), subset.len());
        let lead: Vec<u32> = code
            .ideal_basis()
            .iter()
            .map(|e| e.leading().unwrap().0)
            .collect();
        for e in code.ideal_basis() {
            assert!(code.ev(e).iter().all(|v| v.is_zero()));
            // tails lie in the footprint
            for (s, _) in e.terms().rev().skip(1) {
                assert!(code.in_ideal_footprint(s));
            }
        }
        let sg = c.semigroup();
        for &l in &lead {
            for &m in &lead {
                if l != m {
                    assert!(sg.divides(l, m).is_none());
                }
            }
        }
        assert_eq!(sg.footprint(&lead).unwrap(), code.ideal_footprint());
    }

    #[test]
    fn construction_errors() {
        let c = Curve::hermitian(3).unwrap();
        let pts = rational_points(&c);
        let mut dup = pts.clone();
        dup[3] = dup[1];
        assert_eq!(
            Code::new(c.clone(), dup, 10).unwrap_err(),
            CodeError::DuplicatePoint {
                first: 1,
                second: 3
            }
        );
        let mut off = pts.clone();
        off[0] = (Elem::ONE, Elem::ONE);
        assert_eq!(
            Code::new(c.clone(), off, 10).unwrap_err(),
            CodeError::NotOnCurve { index: 0 }
        );
        assert!(matches!(
            Code::new(c.clone(), pts.clone(), 27),
            Err(CodeError::BadU { .. })
        ));
        assert!(matches!(
            Code::new(c.clone(), vec![], 1),
            Err(CodeError::NoPoints)
        ));
        assert!(matches!(Code::new(c, pts, 0), Err(CodeError::BadU { .. })));
    }

    #[test]
    fn subsets_of_points() {
        let c = Curve::hermitian(3).unwrap();
        let pts = rational_points(&c);
        // the three points over x = 0 give footprint {1, y, y^2}
        let line: Vec<Point> = pts.iter().copied().filter(|p| p.0.is_zero()).collect();
        let code = Code::new(c.clone(), line, 2).unwrap();
        assert_eq!(code.ideal_footprint(), [0, 4, 8]);
        // y^3 + y = x^4 on the curve, so J is generated by x alone
        assert_eq!(code.ideal_basis(), [RingElement::x(&c)]);
        assert_eq!(code.dimension(), 1);
    }

    #[test]
    fn evaluation_basics() {
        let code = Code::hermitian(3, 16).unwrap();
        let c = code.curve();
        assert!(code.ev(&RingElement::zero(c)).iter().all(|e| e.is_zero()));
        assert!(code
            .ev(&RingElement::one(c))
            .iter()
            .all(|&e| e == Elem::ONE));
        let xs: Vec<Elem> = code.points().iter().map(|p| p.0).collect();
        assert_eq!(code.ev(&RingElement::x(c)), xs);
        let k = code.dimension();
        assert_eq!(k, 14);
        assert!(code
            .encode(&vec![Elem::ZERO; k])
            .unwrap()
            .iter()
            .all(|e| e.is_zero()));
        let mut unit = vec![Elem::ZERO; k];
        unit[0] = Elem::ONE;
        assert!(code.encode(&unit).unwrap().iter().all(|&e| e == Elem::ONE));
        assert!(matches!(
            code.encode(&unit[1..]),
            Err(CodeError::LengthMismatch {
                expected: 14,
                got: 13
            })
        ));
    }

    #[test]
    fn lagrange_basics() {
        let code = Code::hermitian(3, 16).unwrap();
        let c = code.curve();
        assert!(code.lagrange(&[Elem::ZERO; 27]).unwrap().is_zero());
        let x = RingElement::x(c);
        assert_eq!(code.lagrange(&code.ev(&x)).unwrap(), x);
        assert!(code.lagrange(&[Elem::ZERO; 3]).is_err());
    }

    #[test]
    fn evaluation_matrix_rank_equals_dimension() {
        for q in [2u32, 3] {
            let n = q.pow(3);
            let sg = crate::curvering::Semigroup::new(q, q + 1).unwrap();
            for u in 1..n {
                if !sg.is_nongap(u) {
                    continue;
                }
                let code = Code::hermitian(q, u).unwrap();
                let f = code.field();
                // rank of the n x k matrix by plain elimination
                let mut rows: Vec<Vec<Elem>> = code
                    .message_index()
                    .iter()
                    .map(|&s| code.ev(&RingElement::term(code.curve(), s, Elem::ONE).unwrap()))
                    .collect();
                let mut rank = 0;
                for col in 0..n as usize {
                    let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                        continue;
                    };
                    rows.swap(rank, p);
                    let inv = f.inv(rows[rank][col]).unwrap();
                    let pivot_row: Vec<Elem> = rows[rank].iter().map(|&x| f.mul(x, inv)).collect();
                    for (r, row) in rows.iter_mut().enumerate() {
                        if r != rank && !row[col].is_zero() {
                            let c = row[col];
                            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                                *x = f.sub(*x, f.mul(c, y));
                            }
                        }
                    }
                    rank += 1;
                }
                assert_eq!(rank, code.dimension(), "q={q} u={u}");
            }
        }
    }

    #[test]
    fn d_u_examples() {
        let code = Code::hermitian(3, 16).unwrap();
        assert_eq!(code.d_u(), 11);
        assert_eq!(code.correction_radius(), 5);
        assert_eq!(hermitian_d_u(3, 16).unwrap(), 11);
        assert_eq!(hermitian_d_u(3, 24).unwrap(), 3);
        assert_eq!(hermitian_d_u(3, 15).unwrap(), 12);
        assert!(hermitian_d_u(3, 5).is_err());
        assert!(hermitian_d_u(3, 27).is_err());
        assert!(code.nu(5).is_err());
        assert_eq!(Code::hermitian(2, 4).unwrap().d_u(), 4);
    }

    #[test]
    fn nu_matches_hermitian_intermediate_formula() {
        for q in [2u32, 3, 4] {
            let code = Code::hermitian(q, 1).unwrap();
            let n = q.pow(3);
            let sg = code.curve().semigroup();
            for s in (0..n).filter(|&s| sg.is_nongap(s)) {
                let (qi, si) = (q as i64, s as i64);
                let (s1, s2) = (si / qi, si % qi);
                let want = s2 * (s1 - s2 + qi + 1 - qi * qi).max(0) + qi.pow(3) - si;
                assert_eq!(code.nu(s).unwrap(), want, "q={q} s={s}");
            }
        }
    }

    #[test]
    fn closed_form_matches_generic_d_u() {
        for q in [2u32, 3, 4] {
            let n = q.pow(3);
            let sg = crate::curvering::Semigroup::new(q, q + 1).unwrap();
            let base = Code::hermitian(q, 1).unwrap();
            for u in (1..n).filter(|&u| sg.is_nongap(u)) {
                let generic = sg
                    .nongaps()
                    .take_while(|&s| s <= u)
                    .map(|s| base.nu(s).unwrap())
                    .min()
                    .unwrap();
                assert_eq!(hermitian_d_u(q, u).unwrap(), generic, "q={q} u={u}");
                assert!(generic >= n as i64 - u as i64);
            }
        }
    }
}
