//! Arithmetic in GF(q²), q = p^e, with the involutory conjugation x ↦ x^q.
//!
//! Elements are encoded as integers `0..p^{2e}`: the element
//! `c_0 + c_1 x + ... + c_{2e-1} x^{2e-1}` (coefficients in GF(p), taken
//! modulo the field's defining polynomial) has the code `Σ c_i p^i`. Hence
//! `0` is the additive identity, `1` the multiplicative identity and `p`
//! the class of `x`. The defining polynomial is the lexicographically least
//! primitive monic polynomial of degree `2e` (least by the same base-`p`
//! code of its lower coefficients), so `x` generates the multiplicative
//! group and the log/exp tables come for free.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest field that will be tabulated.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("extension degree must be positive")]
    ZeroDegree,
    #[error("GF({p}^{degree}) exceeds the table cap of {MAX_FIELD_ORDER} elements")]
    TooLarge { p: u64, degree: u64 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
}

/// An element of a [`Field`], identified by its integer code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    p: u32,
    e: u32,
    order: u32,
    /// Coefficients of the defining polynomial, constant term first, monic.
    modulus: Vec<u32>,
    /// `exp[i] = x^i`, doubled in length so sums of two logs need no reduction.
    exp: Vec<u32>,
    /// `log[a]` for `a != 0`; `log[0]` is unused.
    log: Vec<u32>,
    /// Digit-wise addition table, present for small fields.
    add: Option<Vec<u32>>,
}

/// The finite field GF(q²) with q = p^e.
///
/// Cloning is cheap; the tables are shared and immutable.
#[derive(Clone)]
pub struct Field {
    t: Arc<Tables>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.t.p)
            .field("e", &self.t.e)
            .field("modulus", &self.modulus_string())
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.t.p == other.t.p && self.t.e == other.t.e
    }
}

impl Eq for Field {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits a prime power `q = p^e` into `(p, e)`.
pub fn prime_power(q: u64) -> Result<(u64, u32), FieldError> {
    if q < 2 {
        return Err(FieldError::NotPrimePower(q));
    }
    let mut p = 2;
    while !q.is_multiple_of(p) {
        p += 1;
    }
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    if rest == 1 {
        Ok((p, e))
    } else {
        Err(FieldError::NotPrimePower(q))
    }
}

fn digits(mut a: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(a % p);
        a /= p;
    }
    out
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn digit_add(a: u32, b: u32, p: u32) -> u32 {
    if p == 2 {
        return a ^ b;
    }
    let (mut a, mut b) = (a, b);
    let mut out = 0;
    let mut place = 1;
    while a > 0 || b > 0 {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

/// Builds the exp table of `x` modulo `modulus` if `x` is primitive.
fn primitive_exp_table(modulus: &[u32], p: u32, order: u32) -> Option<Vec<u32>> {
    let degree = modulus.len() - 1;
    if modulus[0] == 0 {
        return None;
    }
    let mut exp = Vec::with_capacity(order as usize - 1);
    let mut cur = vec![0u32; degree];
    cur[0] = 1;
    for i in 0..order - 1 {
        let code = undigits(&cur, p);
        if i > 0 && code == 1 {
            return None;
        }
        exp.push(code);
        // multiply by x, then reduce x^degree = -Σ m_i x^i
        let top = cur[degree - 1];
        for j in (1..degree).rev() {
            cur[j] = cur[j - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for j in 0..degree {
                cur[j] = (cur[j] + (p - (top * modulus[j]) % p)) % p;
            }
        }
    }
    if undigits(&cur, p) != 1 {
        return None;
    }
    Some(exp)
}

impl Field {
    /// Builds GF(p^{2e}), the quadratic extension of GF(p^e).
    pub fn new(p: u64, e: u32) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if e == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let degree = 2 * e as u64;
        let order = p
            .checked_pow(degree as u32)
            .filter(|&o| o <= MAX_FIELD_ORDER)
            .ok_or(FieldError::TooLarge { p, degree })?;
        let p = p as u32;
        let order = order as u32;
        let d = degree as usize;

        let mut found = None;
        for low in 0..order {
            let mut modulus = digits(low, p, d);
            modulus.push(1);
            if let Some(exp) = primitive_exp_table(&modulus, p, order) {
                found = Some((modulus, exp));
                break;
            }
        }
        let (modulus, mut exp) = found.expect("a primitive polynomial exists for every finite field");

        let mut log = vec![0u32; order as usize];
        for (i, &a) in exp.iter().enumerate() {
            log[a as usize] = i as u32;
        }
        let cycle = exp.clone();
        exp.extend_from_slice(&cycle);

        let add = (order <= 256).then(|| {
            let n = order as usize;
            let mut table = vec![0u32; n * n];
            for a in 0..order {
                for b in 0..order {
                    table[a as usize * n + b as usize] = digit_add(a, b, p);
                }
            }
            table
        });

        Ok(Field {
            t: Arc::new(Tables {
                p,
                e,
                order,
                modulus,
                exp,
                log,
                add,
            }),
        })
    }

    /// The field GF(q²) for a prime power `q`.
    pub fn for_q(q: u64) -> Result<Field, FieldError> {
        let (p, e) = prime_power(q)?;
        Field::new(p, e)
    }

    pub fn characteristic(&self) -> u32 {
        self.t.p
    }

    /// `e` in q = p^e.
    pub fn e(&self) -> u32 {
        self.t.e
    }

    /// Order of the subfield GF(q).
    pub fn q(&self) -> u32 {
        self.t.p.pow(self.t.e)
    }

    /// Number of elements, q².
    pub fn order(&self) -> u32 {
        self.t.order
    }

    /// Degree of GF(q²) over its prime field, 2e.
    pub fn degree(&self) -> u32 {
        2 * self.t.e
    }

    pub fn modulus(&self) -> &[u32] {
        &self.t.modulus
    }

    /// Defining polynomial in human-readable form, e.g. `x^2 + x + 1`.
    pub fn modulus_string(&self) -> String {
        let mut terms = Vec::new();
        for (i, &c) in self.t.modulus.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coeff = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            let term = match i {
                0 => format!("{c}"),
                1 => format!("{coeff}x"),
                _ => format!("{coeff}x^{i}"),
            };
            terms.push(term);
        }
        terms.join(" + ")
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.t.order).map(FieldElement)
    }

    /// The primitive element `x` of the defining polynomial.
    pub fn generator(&self) -> FieldElement {
        FieldElement(self.t.exp[1])
    }

    pub fn element(&self, code: u32) -> FieldElement {
        assert!(code < self.t.order, "element code {code} out of range");
        FieldElement(code)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.t.add {
            Some(table) => FieldElement(table[a.index() * self.t.order as usize + b.index()]),
            None => FieldElement(digit_add(a.0, b.0, self.t.p)),
        }
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.t.p;
        if p == 2 {
            return a;
        }
        let d: Vec<u32> = digits(a.0, p, self.degree() as usize)
            .into_iter()
            .map(|c| (p - c) % p)
            .collect();
        FieldElement(undigits(&d, p))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let t = &*self.t;
        FieldElement(t.exp[(t.log[a.index()] + t.log[b.index()]) as usize])
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        if a.is_zero() {
            return None;
        }
        let t = &*self.t;
        let n = t.order - 1;
        Some(FieldElement(t.exp[((n - t.log[a.index()]) % n) as usize]))
    }

    pub fn pow(&self, a: FieldElement, k: u64) -> FieldElement {
        if k == 0 {
            return FieldElement::ONE;
        }
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        let t = &*self.t;
        let n = (t.order - 1) as u64;
        let l = (t.log[a.index()] as u64 * (k % n)) % n;
        FieldElement(t.exp[l as usize])
    }

    /// Discrete logarithm to the base [`Field::generator`].
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        (!a.is_zero()).then(|| self.t.log[a.index()])
    }

    /// The field automorphism x ↦ x^{p^i}.
    pub fn frobenius(&self, a: FieldElement, i: u32) -> FieldElement {
        self.pow(a, (self.t.p as u64).pow(i % self.degree()))
    }

    /// Conjugation x ↦ x^q, the involution fixing GF(q).
    #[inline]
    pub fn conj(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.q() as u64)
    }

    /// Norm to the subfield, x^{q+1} = x·conj(x).
    #[inline]
    pub fn norm(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.q() as u64 + 1)
    }

    pub fn in_subfield(&self, a: FieldElement) -> bool {
        self.conj(a) == a
    }

    /// Elements of the subfield GF(q), in code order.
    pub fn subfield(&self) -> Vec<FieldElement> {
        self.elements().filter(|&a| self.in_subfield(a)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(Field::new(2, 1).unwrap().order(), 4);
        assert_eq!(Field::new(3, 1).unwrap().order(), 9);
        assert_eq!(Field::new(2, 2).unwrap().order(), 16);
        assert_eq!(Field::new(5, 1).unwrap().order(), 25);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Field::new(4, 1).unwrap_err(), FieldError::NotPrime(4));
        assert_eq!(Field::new(2, 0).unwrap_err(), FieldError::ZeroDegree);
        assert!(matches!(Field::new(2, 9), Err(FieldError::TooLarge { .. })));
        assert!(matches!(Field::new(257, 1), Err(FieldError::TooLarge { .. })));
        assert!(Field::new(2, 8).is_ok());
        assert_eq!(prime_power(12), Err(FieldError::NotPrimePower(12)));
        assert_eq!(prime_power(8), Ok((2, 3)));
    }

    #[test]
    fn moduli_are_least_primitive() {
        assert_eq!(Field::new(2, 1).unwrap().modulus_string(), "x^2 + x + 1");
        assert_eq!(Field::new(3, 1).unwrap().modulus_string(), "x^2 + x + 2");
        assert_eq!(Field::new(2, 2).unwrap().modulus_string(), "x^4 + x + 1");
    }

    #[test]
    fn gf4_conjugation() {
        let f = Field::new(2, 1).unwrap();
        let w = f.generator();
        assert_eq!(f.conj(FieldElement::ZERO), FieldElement::ZERO);
        assert_eq!(f.conj(FieldElement::ONE), FieldElement::ONE);
        assert_eq!(f.conj(w), f.mul(w, w));
        assert_eq!(f.conj(f.conj(w)), w);
        assert_eq!(f.norm(w), FieldElement::ONE);
        assert_eq!(f.norm(FieldElement::ZERO), FieldElement::ZERO);
    }

    #[test]
    fn gf9_norm_one_fiber() {
        let f = Field::new(3, 1).unwrap();
        let count = f.elements().filter(|&a| f.norm(a) == FieldElement::ONE).count();
        assert_eq!(count, 4);
    }

    #[test]
    fn subfield_size() {
        for (p, e) in [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3)] {
            let f = Field::new(p, e).unwrap();
            assert_eq!(f.subfield().len() as u32, f.q());
        }
    }

    #[test]
    fn frobenius_generates_galois_group() {
        let f = Field::new(2, 2).unwrap();
        let w = f.generator();
        assert_eq!(f.frobenius(w, 0), w);
        assert_eq!(f.frobenius(w, 2), f.conj(w));
        assert_eq!(f.frobenius(f.frobenius(w, 1), 3), w);
    }
}
