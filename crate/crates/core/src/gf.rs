//! Small finite fields GF(p^m) in discrete-log representation.
//!
//! Every nonzero element is stored as its exponent with respect to a fixed
//! primitive element `a` (a root of the field modulus). Multiplication is
//! exponent addition; addition goes through a Zech-logarithm table, so both
//! are O(1) table lookups.
//!
//! The textual form of an element is `0`, a decimal integer for elements of
//! the prime subfield, or `a^k` for everything else. `a` alone is accepted
//! on input as a synonym for `a^1`.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest supported field order.
pub const FIELD_ORDER_CAP: u32 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be positive")]
    ZeroDegree,
    #[error("field order {p}^{m} exceeds the cap {cap}")]
    OrderTooLarge { p: u32, m: u32, cap: u32 },
    #[error("modulus must be monic of degree {expected}, got {got:?}")]
    BadModulus { expected: u32, got: Vec<u32> },
    #[error("modulus {0:?} is reducible")]
    Reducible(Vec<u32>),
    #[error(
        "modulus {0:?} is irreducible but its root does not generate the multiplicative group"
    )]
    NotPrimitive(Vec<u32>),
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed field element {token:?}: {reason}")]
    Parse { token: String, reason: String },
}

/// An element of some [`Field`].
///
/// Elements are plain values; the owning field supplies the arithmetic.
/// Internally `0` encodes zero and `k + 1` encodes `a^k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Discrete logarithm, `None` for zero.
    #[inline]
    pub fn log(self) -> Option<u32> {
        self.0.checked_sub(1)
    }
}

#[derive(Debug)]
struct Tables {
    p: u32,
    m: u32,
    order: u32,
    modulus: Vec<u32>,
    /// exp[k] = vector encoding (base-p digits) of a^k.
    exp: Vec<u32>,
    /// log[v] = k with a^k encoded as v; log[0] unused.
    log: Vec<u32>,
    /// zech[k] = 1 + a^k as an element.
    zech: Vec<Elem>,
    neg_one: Elem,
    canonical: Vec<Elem>,
    /// rank[raw] = position of the element in `canonical`.
    rank: Vec<u32>,
}

/// A finite field GF(p^m). Cloning is cheap; clones share tables.
#[derive(Clone)]
pub struct Field {
    t: Arc<Tables>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.t, &other.t)
            || (self.t.p == other.t.p && self.t.modulus == other.t.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}^{}; modulus {:?})",
            self.t.p, self.t.m, self.t.modulus
        )
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Default moduli, coefficients low to high. These are the Conway
/// polynomials for the listed orders; for GF(9) this is x^2 - x - 1.
const DEFAULT_MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (7, 2, &[3, 6, 1]),
];

// Polynomials over GF(p), coefficient vectors low to high, no trailing zeros.

fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = poly_trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr] * lead_inv % p;
        for (i, &bi) in b.iter().enumerate() {
            let idx = dr - db + i;
            r[idx] = (r[idx] + p - c * bi % p) % p;
        }
        r = poly_trim(r);
    }
    r
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let deg = modulus.len() as u32 - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d);
        for low in 0..count {
            let mut divisor = Vec::with_capacity(d as usize + 1);
            let mut v = low;
            for _ in 0..d {
                divisor.push(v % p);
                v /= p;
            }
            divisor.push(1);
            if poly_rem(modulus, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn smallest_primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    (2..p)
        .find(|&g| {
            let mut x = 1u64;
            for k in 1..p - 1 {
                x = x * g as u64 % p as u64;
                if x == 1 && k < p - 1 {
                    return false;
                }
            }
            true
        })
        .expect("every prime field has a primitive root")
}

impl Field {
    /// Builds GF(p^m). `modulus` is a monic coefficient list of length
    /// `m + 1`, lowest degree first. When omitted, a Conway polynomial is
    /// used where tabulated, and otherwise the first primitive polynomial in
    /// lexicographic order of its coefficients (low to high).
    pub fn new(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<Field, GfError> {
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        if m == 0 {
            return Err(GfError::ZeroDegree);
        }
        let order = (p as u64)
            .checked_pow(m)
            .filter(|&o| o <= FIELD_ORDER_CAP as u64)
            .ok_or(GfError::OrderTooLarge {
                p,
                m,
                cap: FIELD_ORDER_CAP,
            })? as u32;

        let modulus = match modulus {
            Some(c) => {
                if c.len() != m as usize + 1 || c[m as usize] != 1 || c.iter().any(|&x| x >= p) {
                    return Err(GfError::BadModulus {
                        expected: m,
                        got: c.to_vec(),
                    });
                }
                if !is_irreducible(c, p) {
                    return Err(GfError::Reducible(c.to_vec()));
                }
                c.to_vec()
            }
            None => Self::default_modulus(p, m),
        };

        Self::from_modulus(p, m, order, modulus.clone()).ok_or(GfError::NotPrimitive(modulus))
    }

    /// The modulus used when none is given.
    pub fn default_modulus(p: u32, m: u32) -> Vec<u32> {
        if m == 1 {
            return vec![(p - smallest_primitive_root(p)) % p, 1];
        }
        if let Some((_, _, c)) = DEFAULT_MODULI
            .iter()
            .find(|(pp, mm, _)| *pp == p && *mm == m)
        {
            return c.to_vec();
        }
        let order = p.pow(m);
        for low in 0..order {
            let mut c = Vec::with_capacity(m as usize + 1);
            let mut v = low;
            for _ in 0..m {
                c.push(v % p);
                v /= p;
            }
            c.push(1);
            if c[0] != 0
                && is_irreducible(&c, p)
                && Self::from_modulus(p, m, order, c.clone()).is_some()
            {
                return c;
            }
        }
        unreachable!("a primitive polynomial exists for every (p, m)")
    }

    /// Builds the tables; `None` if x is not primitive modulo `modulus`.
    fn from_modulus(p: u32, m: u32, order: u32, modulus: Vec<u32>) -> Option<Field> {
        let group = (order - 1) as usize;
        let mut exp = Vec::with_capacity(group);
        let mut log = vec![u32::MAX; order as usize];

        // digits of the current power, low to high
        let mut cur = vec![0u32; m as usize];
        cur[0] = 1;
        let encode = |d: &[u32]| d.iter().rev().fold(0u32, |acc, &x| acc * p + x);
        for k in 0..group {
            let v = encode(&cur);
            if log[v as usize] != u32::MAX {
                return None;
            }
            log[v as usize] = k as u32;
            exp.push(v);
            // multiply by x
            if m == 1 {
                // x = -modulus[0] in GF(p)
                let root = (p - modulus[0]) % p;
                cur[0] = cur[0] * root % p;
            } else {
                let top = cur[m as usize - 1];
                for i in (1..m as usize).rev() {
                    cur[i] = cur[i - 1];
                }
                cur[0] = 0;
                for i in 0..m as usize {
                    cur[i] = (cur[i] + p - top * modulus[i] % p) % p;
                }
            }
        }
        if encode(&cur) != 1 {
            return None;
        }

        let add_vec = |x: u32, y: u32| -> u32 {
            let (mut x, mut y) = (x, y);
            let mut out = 0u32;
            let mut place = 1u32;
            for _ in 0..m {
                out += ((x % p + y % p) % p) * place;
                x /= p;
                y /= p;
                place *= p;
            }
            out
        };
        let zech = (0..group)
            .map(|k| {
                let v = add_vec(1, exp[k]);
                if v == 0 {
                    Elem::ZERO
                } else {
                    Elem(log[v as usize] + 1)
                }
            })
            .collect::<Vec<_>>();
        let neg_one = Elem(log[(p - 1) as usize] + 1);

        // canonical order: 0, prime subfield 1..p-1, then remaining by exponent
        let mut canonical = vec![Elem::ZERO];
        for v in 1..p {
            canonical.push(Elem(log[v as usize] + 1));
        }
        for (k, &v) in exp.iter().enumerate() {
            if v >= p {
                canonical.push(Elem(k as u32 + 1));
            }
        }
        let mut rank = vec![0u32; order as usize];
        for (i, e) in canonical.iter().enumerate() {
            rank[e.0 as usize] = i as u32;
        }

        Some(Field {
            t: Arc::new(Tables {
                p,
                m,
                order,
                modulus,
                exp,
                log,
                zech,
                neg_one,
                canonical,
                rank,
            }),
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.t.p
    }

    pub fn degree(&self) -> u32 {
        self.t.m
    }

    pub fn order(&self) -> u32 {
        self.t.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.t.modulus
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// The primitive element `a`.
    pub fn generator(&self) -> Elem {
        self.alpha_pow(1)
    }

    /// `a^k` for any integer `k`.
    pub fn alpha_pow(&self, k: i64) -> Elem {
        let g = (self.t.order - 1) as i64;
        Elem(k.rem_euclid(g) as u32 + 1)
    }

    /// Element of the prime subfield with integer value `n mod p`.
    pub fn from_int(&self, n: i64) -> Elem {
        let v = n.rem_euclid(self.t.p as i64) as u32;
        if v == 0 {
            Elem::ZERO
        } else {
            Elem(self.t.log[v as usize] + 1)
        }
    }

    /// True when `e` lies in the prime subfield GF(p).
    pub fn in_prime_subfield(&self, e: Elem) -> bool {
        match e.log() {
            None => true,
            Some(k) => self.t.exp[k as usize] < self.t.p,
        }
    }

    /// Position of `e` in the canonical enumeration order.
    pub fn canonical_rank(&self, e: Elem) -> u32 {
        self.t.rank[e.0 as usize]
    }

    /// All elements in canonical order: `0, 1, ..., p-1`, then the
    /// remaining elements by increasing exponent.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.t.canonical.iter().copied()
    }

    /// Elements must have been produced by this field.
    pub fn contains(&self, e: Elem) -> bool {
        e.0 < self.t.order
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let (Some(i), Some(j)) = (a.log(), b.log()) else {
            return if a.is_zero() { b } else { a };
        };
        let g = self.t.order - 1;
        let d = if j >= i { j - i } else { j + g - i };
        match self.t.zech[d as usize].log() {
            None => Elem::ZERO,
            Some(z) => Elem((i + z) % g + 1),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.mul(a, self.t.neg_one)
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match (a.log(), b.log()) {
            (Some(i), Some(j)) => Elem((i + j) % (self.t.order - 1) + 1),
            _ => Elem::ZERO,
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem, GfError> {
        let k = a.log().ok_or(GfError::DivisionByZero)?;
        let g = self.t.order - 1;
        Ok(Elem((g - k) % g + 1))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem, GfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`; negative exponents require `a != 0`, and `0^0 = 1`.
    pub fn pow(&self, a: Elem, e: i64) -> Result<Elem, GfError> {
        match a.log() {
            None if e < 0 => Err(GfError::DivisionByZero),
            None if e == 0 => Ok(Elem::ONE),
            None => Ok(Elem::ZERO),
            Some(k) => {
                let g = (self.t.order - 1) as i64;
                Ok(Elem(((k as i64 * e.rem_euclid(g)) % g) as u32 + 1))
            }
        }
    }

    /// Multiplies by a nonnegative integer (repeated addition).
    pub fn mul_int(&self, a: Elem, n: u64) -> Elem {
        self.mul(a, self.from_int((n % self.t.p as u64) as i64))
    }

    /// Vector coordinates of `e` over GF(p), lowest power of `a` first.
    pub fn coordinates(&self, e: Elem) -> Vec<u32> {
        let mut v = match e.log() {
            None => 0,
            Some(k) => self.t.exp[k as usize],
        };
        (0..self.t.m)
            .map(|_| {
                let d = v % self.t.p;
                v /= self.t.p;
                d
            })
            .collect()
    }

    pub fn parse(&self, text: &str) -> Result<Elem, GfError> {
        let token = text.trim();
        let err = |reason: &str| GfError::Parse {
            token: token.to_string(),
            reason: reason.to_string(),
        };
        if token.is_empty() {
            return Err(err("empty token"));
        }
        if token == "a" {
            return Ok(self.alpha_pow(1));
        }
        if let Some(exp) = token.strip_prefix("a^") {
            if exp.is_empty() || !exp.bytes().all(|c| c.is_ascii_digit()) {
                return Err(err("exponent must be a decimal integer"));
            }
            let k: u64 = exp.parse().map_err(|_| err("exponent out of range"))?;
            let g = (self.t.order - 1) as u64;
            return Ok(Elem((k % g) as u32 + 1));
        }
        if token.bytes().all(|c| c.is_ascii_digit()) {
            let v: u64 = token.parse().map_err(|_| err("integer out of range"))?;
            if v >= self.t.p as u64 {
                return Err(err(&format!(
                    "integer must lie in the prime subfield 0..{}",
                    self.t.p - 1
                )));
            }
            return Ok(self.from_int(v as i64));
        }
        Err(err("expected 0, a prime-subfield integer, a, or a^k"))
    }

    pub fn format(&self, e: Elem) -> String {
        match e.log() {
            None => "0".to_string(),
            Some(k) => {
                let v = self.t.exp[k as usize];
                if v < self.t.p {
                    v.to_string()
                } else {
                    format!("a^{k}")
                }
            }
        }
    }

    /// Display adapter for an element.
    pub fn display(&self, e: Elem) -> ElemDisplay<'_> {
        ElemDisplay {
            field: self,
            elem: e,
        }
    }
}

pub struct ElemDisplay<'a> {
    field: &'a Field,
    elem: Elem,
}

impl fmt::Display for ElemDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format(self.elem))
    }
}
