//! Exact arithmetic in finite fields GF(p^n).
//!
//! A [`Field`] is a cheap handle on a field description (characteristic,
//! extension degree, defining modulus). Elements are plain coefficient
//! vectors in the polynomial basis; all arithmetic goes through the field
//! handle, which keeps the hot loops free of per-element bookkeeping.

pub mod poly;

use smallvec::SmallVec;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

use poly::Poly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("prime {0} too large (must fit in 31 bits)")]
    PrimeTooLarge(u64),
    #[error("modulus is reducible over the prime field")]
    ReducibleModulus,
    #[error("modulus degree does not match extension degree")]
    DegreeMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("element does not belong to this field")]
    FieldMismatch,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("source field does not embed into the target")]
    NotASubfield,
    #[error("cannot parse field literal: {0}")]
    BadLiteral(String),
}

/// Description of GF(p^n): characteristic, degree and defining modulus.
///
/// The modulus is a monic irreducible polynomial of degree `n` over GF(p),
/// stored low-to-high with `n + 1` coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldDesc {
    pub p: u64,
    pub n: usize,
    pub modulus: Vec<u64>,
}

/// Handle on a field description; clones share the descriptor.
#[derive(Clone)]
pub struct Field(Arc<FieldDesc>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.literal())
    }
}

/// Element of GF(p^n): `n` coefficients in `[0, p)`, low-to-high.
///
/// An element does not carry its field; it is interpreted through the
/// [`Field`] handle of the container (matrix, polynomial, ...) using it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    pub(crate) coeffs: SmallVec<[u64; 4]>,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// Constructs GF(p^n). When `modulus` is absent the lexicographically
    /// smallest monic irreducible of degree `n` is selected (coefficients
    /// compared low-degree-first), so equal `(p, n)` always yield the same
    /// field across runs.
    pub fn make(p: u64, n: usize, modulus: Option<&[u64]>) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NonPrime(p));
        }
        if p >= 1 << 31 {
            return Err(FieldError::PrimeTooLarge(p));
        }
        assert!(n >= 1, "extension degree must be at least 1");
        let modulus = match modulus {
            Some(m) => {
                if m.len() != n + 1 {
                    return Err(FieldError::DegreeMismatch);
                }
                let m: Vec<u64> = m.iter().map(|c| c % p).collect();
                if m[n] != 1 {
                    return Err(FieldError::DegreeMismatch);
                }
                if !modulus_irreducible(p, &m) {
                    return Err(FieldError::ReducibleModulus);
                }
                m
            }
            None => smallest_irreducible(p, n),
        };
        Ok(Field(Arc::new(FieldDesc { p, n, modulus })))
    }

    pub fn prime(p: u64) -> Result<Field, FieldError> {
        Field::make(p, 1, None)
    }

    pub fn desc(&self) -> &FieldDesc {
        &self.0
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> usize {
        self.0.n
    }

    /// q = p^n. Panics on overflow; desk-scale fields are tiny.
    pub fn order(&self) -> u64 {
        let mut q = 1u64;
        for _ in 0..self.0.n {
            q = q.checked_mul(self.0.p).expect("field order overflow");
        }
        q
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: SmallVec::from_elem(0, self.0.n),
        }
    }

    pub fn one(&self) -> FieldElement {
        let mut coeffs = SmallVec::from_elem(0, self.0.n);
        coeffs[0] = 1;
        FieldElement { coeffs }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, k: i64) -> FieldElement {
        let p = self.0.p as i64;
        let mut coeffs = SmallVec::from_elem(0, self.0.n);
        coeffs[0] = k.rem_euclid(p) as u64;
        FieldElement { coeffs }
    }

    /// Element from explicit coefficients (low-to-high, at most `n` of them).
    pub fn element(&self, coeffs: &[u64]) -> Result<FieldElement, FieldError> {
        if coeffs.len() > self.0.n {
            return Err(FieldError::FieldMismatch);
        }
        let mut c = SmallVec::from_elem(0, self.0.n);
        for (i, &v) in coeffs.iter().enumerate() {
            c[i] = v % self.0.p;
        }
        Ok(FieldElement { coeffs: c })
    }

    /// The class of x, the generator of the polynomial basis.
    pub fn gen(&self) -> FieldElement {
        if self.0.n == 1 {
            // x reduces to a constant modulo a linear modulus
            let c = (self.0.p - self.0.modulus[0] % self.0.p) % self.0.p;
            return self.from_int(c as i64);
        }
        let mut coeffs = SmallVec::from_elem(0, self.0.n);
        coeffs[1] = 1;
        FieldElement { coeffs }
    }

    pub fn is_zero(&self, a: &FieldElement) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self, a: &FieldElement) -> bool {
        a.coeffs[0] == 1 && a.coeffs[1..].iter().all(|&c| c == 0)
    }

    fn check(&self, a: &FieldElement) {
        debug_assert_eq!(a.coeffs.len(), self.0.n, "element/field degree mismatch");
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        let p = self.0.p;
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(&x, &y)| {
                let s = x + y;
                if s >= p {
                    s - p
                } else {
                    s
                }
            })
            .collect();
        FieldElement { coeffs }
    }

    pub fn add_assign(&self, a: &mut FieldElement, b: &FieldElement) {
        let p = self.0.p;
        for (x, &y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            let s = *x + y;
            *x = if s >= p { s - p } else { s };
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        let p = self.0.p;
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(&x, &y)| if x >= y { x - y } else { x + p - y })
            .collect();
        FieldElement { coeffs }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let p = self.0.p;
        let coeffs = a
            .coeffs
            .iter()
            .map(|&x| if x == 0 { 0 } else { p - x })
            .collect();
        FieldElement { coeffs }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        let n = self.0.n;
        let p = self.0.p;
        if n == 1 {
            return FieldElement {
                coeffs: SmallVec::from_elem(a.coeffs[0] * b.coeffs[0] % p, 1),
            };
        }
        // schoolbook product then reduction by the monic modulus
        let mut prod: SmallVec<[u64; 8]> = SmallVec::from_elem(0, 2 * n - 1);
        for i in 0..n {
            let ai = a.coeffs[i];
            if ai == 0 {
                continue;
            }
            for j in 0..n {
                prod[i + j] = (prod[i + j] + ai * b.coeffs[j]) % p;
            }
        }
        for k in (n..2 * n - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for j in 0..n {
                let m = self.0.modulus[j];
                if m != 0 {
                    let idx = k - n + j;
                    prod[idx] = (prod[idx] + c * (p - m)) % p;
                }
            }
        }
        prod.truncate(n);
        FieldElement { coeffs: prod }
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        if self.is_zero(a) {
            return Err(FieldError::DivisionByZero);
        }
        if self.0.n == 1 {
            return Ok(self.pow_prime_scalar(a.coeffs[0]));
        }
        // extended Euclid in GF(p)[x] against the modulus
        let prime = Field::prime(self.0.p).expect("prime field");
        let fx = Poly::from_ints(&prime, &self.0.modulus.iter().map(|&c| c as i64).collect::<Vec<_>>());
        let ax = Poly::from_ints(
            &prime,
            &a.coeffs.iter().map(|&c| c as i64).collect::<Vec<_>>(),
        );
        let (g, _, t) = fx.extended_gcd(&ax);
        assert_eq!(g.degree(), Some(0), "modulus must be coprime to nonzero element");
        let ginv = prime.inv(&g.coeffs()[0]).expect("nonzero gcd");
        let inv_poly = t.scale(&ginv).rem(&fx);
        let mut coeffs = SmallVec::from_elem(0, self.0.n);
        for (i, c) in inv_poly.coeffs().iter().enumerate() {
            coeffs[i] = c.coeffs[0];
        }
        Ok(FieldElement { coeffs })
    }

    fn pow_prime_scalar(&self, a: u64) -> FieldElement {
        // a^(p-2) mod p
        let p = self.0.p;
        let mut result = 1u64;
        let mut base = a % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        FieldElement {
            coeffs: SmallVec::from_elem(result, 1),
        }
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &FieldElement, k: i64) -> Result<FieldElement, FieldError> {
        let (base, mut e) = if k < 0 {
            (self.inv(a)?, (-k) as u64)
        } else {
            (a.clone(), k as u64)
        };
        let mut result = self.one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        Ok(result)
    }

    pub fn frobenius(&self, a: &FieldElement) -> FieldElement {
        self.pow(a, self.0.p as i64).expect("positive power")
    }

    /// All q elements, in lexicographic coefficient order. Intended for
    /// exhaustive checks on small fields.
    pub fn elements(&self) -> Vec<FieldElement> {
        let q = self.order();
        assert!(q <= 1 << 20, "element enumeration is for small fields");
        let p = self.0.p;
        let n = self.0.n;
        let mut out = Vec::with_capacity(q as usize);
        let mut current = vec![0u64; n];
        loop {
            out.push(FieldElement {
                coeffs: SmallVec::from_slice(&current),
            });
            let mut i = 0;
            loop {
                if i == n {
                    return out;
                }
                current[i] += 1;
                if current[i] < p {
                    break;
                }
                current[i] = 0;
                i += 1;
            }
        }
    }

    /// Checked arithmetic entry point mirroring the scenario surface.
    pub fn arith(
        &self,
        a: &FieldElement,
        b: Option<&FieldElement>,
        op: ArithOp,
    ) -> Result<FieldElement, FieldError> {
        if a.coeffs.len() != self.0.n || b.map_or(false, |b| b.coeffs.len() != self.0.n) {
            return Err(FieldError::FieldMismatch);
        }
        let b_req = || b.ok_or(FieldError::FieldMismatch);
        match op {
            ArithOp::Add => Ok(self.add(a, b_req()?)),
            ArithOp::Sub => Ok(self.sub(a, b_req()?)),
            ArithOp::Mul => Ok(self.mul(a, b_req()?)),
            ArithOp::Div => self.div(a, b_req()?),
            ArithOp::Inv => self.inv(a),
            ArithOp::Pow(k) => self.pow(a, k),
        }
    }

    /// Formats an element as a polynomial in `x`, low-degree terms first.
    pub fn format_element(&self, a: &FieldElement) -> String {
        let mut terms = Vec::new();
        for (i, &c) in a.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let t = match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }

    /// Parses the output of [`Field::format_element`] (also accepts `*` and
    /// spaces between coefficient and `x`).
    pub fn parse_element(&self, s: &str) -> Result<FieldElement, FieldError> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        if cleaned.is_empty() {
            return Err(FieldError::BadLiteral(s.to_string()));
        }
        let mut coeffs = vec![0u64; self.0.n];
        for term in cleaned.split('+') {
            if term.is_empty() {
                return Err(FieldError::BadLiteral(s.to_string()));
            }
            let (coef_str, pow) = match term.find('x') {
                None => (term, 0usize),
                Some(ix) => {
                    let rest = &term[ix + 1..];
                    let pow = if rest.is_empty() {
                        1
                    } else {
                        let stripped = rest
                            .strip_prefix('^')
                            .ok_or_else(|| FieldError::BadLiteral(s.to_string()))?;
                        stripped
                            .parse::<usize>()
                            .map_err(|_| FieldError::BadLiteral(s.to_string()))?
                    };
                    (&term[..ix], pow)
                }
            };
            let coef = if coef_str.is_empty() {
                1
            } else {
                coef_str
                    .parse::<u64>()
                    .map_err(|_| FieldError::BadLiteral(s.to_string()))?
            };
            if pow >= self.0.n && coef % self.0.p != 0 {
                return Err(FieldError::BadLiteral(format!(
                    "term of degree {pow} outside field of degree {}",
                    self.0.n
                )));
            }
            if pow < self.0.n {
                coeffs[pow] = (coeffs[pow] + coef) % self.0.p;
            }
        }
        self.element(&coeffs)
    }

    /// Field literal: `gf(p)` or `gf(p^n; modulus=c0,c1,...,cn)`.
    pub fn literal(&self) -> String {
        if self.0.n == 1 {
            format!("gf({})", self.0.p)
        } else {
            let mods: Vec<String> = self.0.modulus.iter().map(|c| c.to_string()).collect();
            format!("gf({}^{}; modulus={})", self.0.p, self.0.n, mods.join(","))
        }
    }

    pub fn parse_literal(s: &str) -> Result<Field, FieldError> {
        let t = s.trim();
        let inner = t
            .strip_prefix("gf(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| FieldError::BadLiteral(s.to_string()))?;
        let (head, modulus) = match inner.split_once(';') {
            None => (inner.trim(), None),
            Some((h, m)) => {
                let m = m.trim();
                let list = m
                    .strip_prefix("modulus=")
                    .ok_or_else(|| FieldError::BadLiteral(s.to_string()))?;
                let coeffs: Result<Vec<u64>, _> =
                    list.split(',').map(|c| c.trim().parse::<u64>()).collect();
                (
                    h.trim(),
                    Some(coeffs.map_err(|_| FieldError::BadLiteral(s.to_string()))?),
                )
            }
        };
        let (p, n) = match head.split_once('^') {
            None => (
                head.parse::<u64>()
                    .map_err(|_| FieldError::BadLiteral(s.to_string()))?,
                1,
            ),
            Some((p, n)) => (
                p.trim()
                    .parse::<u64>()
                    .map_err(|_| FieldError::BadLiteral(s.to_string()))?,
                n.trim()
                    .parse::<usize>()
                    .map_err(|_| FieldError::BadLiteral(s.to_string()))?,
            ),
        };
        Field::make(p, n, modulus.as_deref())
    }
}

/// Lexicographically smallest monic irreducible of degree n over GF(p),
/// coefficients compared low-degree-first.
fn smallest_irreducible(p: u64, n: usize) -> Vec<u64> {
    if n == 1 {
        return vec![0, 1]; // x itself
    }
    let mut coeffs = vec![0u64; n + 1];
    coeffs[n] = 1;
    loop {
        if modulus_irreducible(p, &coeffs) {
            return coeffs;
        }
        let mut i = 0;
        loop {
            assert!(i < n, "no irreducible of degree {n} found over GF({p})");
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

fn modulus_irreducible(p: u64, coeffs: &[u64]) -> bool {
    let n = coeffs.len() - 1;
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let prime = Field::prime(p).expect("prime field");
    let f = Poly::from_ints(&prime, &coeffs.iter().map(|&c| c as i64).collect::<Vec<_>>());
    f.is_irreducible()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Inv,
    Pow(i64),
}

/// Field embedding GF(p^m) -> GF(p^{mk}), computed once per pair by finding
/// the lexicographically smallest root of the source modulus in the target.
#[derive(Debug, Clone)]
pub struct Embedding {
    src: Field,
    dst: Field,
    /// powers theta^0 .. theta^{m-1} of the chosen root, as target elements
    powers: Vec<FieldElement>,
}

impl Embedding {
    pub fn new(src: &Field, dst: &Field) -> Result<Embedding, FieldError> {
        if src.p() != dst.p() || dst.degree() % src.degree() != 0 {
            return Err(FieldError::NotASubfield);
        }
        if src == dst {
            let powers = (0..src.degree())
                .map(|i| {
                    let mut c = vec![0u64; src.degree()];
                    c[i] = 1;
                    dst.element(&c).unwrap()
                })
                .collect();
            return Ok(Embedding {
                src: src.clone(),
                dst: dst.clone(),
                powers,
            });
        }
        let lifted = Poly::new(
            dst.clone(),
            src.desc()
                .modulus
                .iter()
                .map(|&c| dst.from_int(c as i64))
                .collect(),
        );
        let mut roots = lifted.roots();
        if roots.is_empty() {
            return Err(FieldError::NotASubfield);
        }
        roots.sort_by(|a, b| a.coeffs.as_slice().cmp(b.coeffs.as_slice()));
        let theta = roots[0].clone();
        let mut powers = Vec::with_capacity(src.degree());
        let mut cur = dst.one();
        for _ in 0..src.degree() {
            powers.push(cur.clone());
            cur = dst.mul(&cur, &theta);
        }
        Ok(Embedding {
            src: src.clone(),
            dst: dst.clone(),
            powers,
        })
    }

    pub fn source(&self) -> &Field {
        &self.src
    }

    pub fn target(&self) -> &Field {
        &self.dst
    }

    pub fn apply(&self, a: &FieldElement) -> FieldElement {
        assert_eq!(a.coeffs.len(), self.src.degree(), "element/source mismatch");
        let mut acc = self.dst.zero();
        for (i, pw) in self.powers.iter().enumerate() {
            let c = a.coeffs[i];
            if c == 0 {
                continue;
            }
            let term = self.dst.mul(&self.dst.from_int(c as i64), pw);
            acc = self.dst.add(&acc, &term);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_prime_field() {
        let f = Field::make(3, 1, None).unwrap();
        assert_eq!(f.order(), 3);
        assert_eq!(f.desc().modulus, vec![0, 1]);
    }

    #[test]
    fn make_gf9_default_modulus() {
        // exhaustive search over monic quadratics: x^2+1 is the first with no
        // root in {0,1,2}
        let f = Field::make(3, 2, None).unwrap();
        assert_eq!(f.desc().modulus, vec![1, 0, 1]);
        assert_eq!(f.order(), 9);
    }

    #[test]
    fn make_nonprime_rejected() {
        assert_eq!(Field::make(4, 1, None).unwrap_err(), FieldError::NonPrime(4));
    }

    #[test]
    fn make_reducible_modulus_rejected() {
        // x^2 - 1 = (x-1)(x+1) over GF(3)
        assert_eq!(
            Field::make(3, 2, Some(&[2, 0, 1])).unwrap_err(),
            FieldError::ReducibleModulus
        );
    }

    #[test]
    fn gf3_add() {
        let f = Field::prime(3).unwrap();
        assert_eq!(f.add(&f.from_int(1), &f.from_int(2)), f.zero());
    }

    #[test]
    fn gf9_generator_square() {
        // x^2 = -1 = 2 under modulus x^2 + 1
        let f = Field::make(3, 2, None).unwrap();
        let x = f.gen();
        assert_eq!(f.mul(&x, &x), f.from_int(2));
    }

    #[test]
    fn gf9_inverse_of_generator() {
        // x * 2x = 2x^2 = 4 = 1
        let f = Field::make(3, 2, None).unwrap();
        let x = f.gen();
        let inv = f.inv(&x).unwrap();
        assert_eq!(inv, f.element(&[0, 2]).unwrap());
        assert!(f.is_one(&f.mul(&x, &inv)));
    }

    #[test]
    fn inverse_exhaustive_small_fields() {
        for (p, n) in [(2, 1), (3, 1), (2, 2), (3, 2), (5, 1), (2, 4), (3, 4)] {
            let f = Field::make(p, n, None).unwrap();
            for a in f.elements() {
                if f.is_zero(&a) {
                    assert_eq!(f.inv(&a).unwrap_err(), FieldError::DivisionByZero);
                    continue;
                }
                let inv = f.inv(&a).unwrap();
                assert!(f.is_one(&f.mul(&a, &inv)));
                assert!(f.is_one(&f.mul(&inv, &a)));
            }
        }
    }

    #[test]
    fn frobenius_fixes_exactly_prime_field() {
        for (p, n) in [(3, 2), (2, 2), (3, 4), (2, 4)] {
            let f = Field::make(p, n, None).unwrap();
            let mut fixed = 0u64;
            for a in f.elements() {
                let fa = f.frobenius(&a);
                // automorphism checks on a sample pair
                if fa == a {
                    fixed += 1;
                }
            }
            assert_eq!(fixed, p);
            // additivity / multiplicativity, exhaustive over pairs for q <= 16
            if f.order() <= 16 {
                for a in f.elements() {
                    for b in f.elements() {
                        assert_eq!(
                            f.frobenius(&f.add(&a, &b)),
                            f.add(&f.frobenius(&a), &f.frobenius(&b))
                        );
                        assert_eq!(
                            f.frobenius(&f.mul(&a, &b)),
                            f.mul(&f.frobenius(&a), &f.frobenius(&b))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn embed_prime_subfield_fixed() {
        let gf3 = Field::prime(3).unwrap();
        let gf9 = Field::make(3, 2, None).unwrap();
        let emb = Embedding::new(&gf3, &gf9).unwrap();
        assert_eq!(emb.apply(&gf3.from_int(2)), gf9.from_int(2));
        assert_eq!(emb.apply(&gf3.zero()), gf9.zero());
    }

    #[test]
    fn embed_gf9_in_gf81_is_ring_hom() {
        let gf9 = Field::make(3, 2, None).unwrap();
        let gf81 = Field::make(3, 4, None).unwrap();
        let emb = Embedding::new(&gf9, &gf81).unwrap();
        // embedded generator is a root of x^2 + 1
        let th = emb.apply(&gf9.gen());
        let sq = gf81.mul(&th, &th);
        assert_eq!(gf81.add(&sq, &gf81.one()), gf81.zero());
        for a in gf9.elements() {
            for b in gf9.elements() {
                assert_eq!(
                    emb.apply(&gf9.add(&a, &b)),
                    gf81.add(&emb.apply(&a), &emb.apply(&b))
                );
                assert_eq!(
                    emb.apply(&gf9.mul(&a, &b)),
                    gf81.mul(&emb.apply(&a), &emb.apply(&b))
                );
            }
        }
        assert!(gf81.is_one(&emb.apply(&gf9.one())));
    }

    #[test]
    fn embed_not_a_subfield() {
        let gf9 = Field::make(3, 2, None).unwrap();
        let gf27 = Field::make(3, 3, None).unwrap();
        assert_eq!(Embedding::new(&gf9, &gf27).unwrap_err(), FieldError::NotASubfield);
        let gf4 = Field::make(2, 2, None).unwrap();
        assert_eq!(Embedding::new(&gf4, &gf9).unwrap_err(), FieldError::NotASubfield);
    }

    #[test]
    fn literal_roundtrip() {
        for lit in ["gf(3)", "gf(3^2; modulus=1,0,1)", "gf(2^4; modulus=1,1,0,0,1)"] {
            let f = Field::parse_literal(lit).unwrap();
            assert_eq!(f.literal(), lit);
        }
        let f = Field::parse_literal("gf(3^2)").unwrap();
        assert_eq!(f.desc().modulus, vec![1, 0, 1]);
    }

    #[test]
    fn element_format_parse_roundtrip() {
        let f = Field::make(3, 4, None).unwrap();
        for a in f.elements() {
            let s = f.format_element(&a);
            assert_eq!(f.parse_element(&s).unwrap(), a);
        }
    }

    #[test]
    fn checked_arith_surface() {
        let gf9 = Field::make(3, 2, None).unwrap();
        let gf3 = Field::prime(3).unwrap();
        let a = gf3.from_int(2);
        // wrong-degree element is rejected
        assert_eq!(
            gf9.arith(&a, Some(&a), ArithOp::Add).unwrap_err(),
            FieldError::FieldMismatch
        );
        let x = gf9.gen();
        assert_eq!(gf9.arith(&x, None, ArithOp::Pow(2)).unwrap(), gf9.from_int(2));
        assert_eq!(
            gf9.arith(&gf9.zero(), None, ArithOp::Inv).unwrap_err(),
            FieldError::DivisionByZero
        );
    }
}
