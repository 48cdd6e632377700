//! Univariate polynomials over a finite field, with complete factorization
//! (squarefree decomposition, distinct-degree splitting, then equal-degree
//! Cantor-Zassenhaus with a fixed seed so runs are reproducible).

use super::{Field, FieldElement, FieldError};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const FACTOR_SEED: u64 = 0x6d6f_7269_7461_0001;

/// Dense polynomial, coefficients low-to-high with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<FieldElement>) -> Poly {
        while coeffs.last().map_or(false, |c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: &Field) -> Poly {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Field) -> Poly {
        Poly {
            field: field.clone(),
            coeffs: vec![field.one()],
        }
    }

    pub fn constant(field: &Field, c: FieldElement) -> Poly {
        Poly::new(field.clone(), vec![c])
    }

    pub fn x(field: &Field) -> Poly {
        Poly::new(field.clone(), vec![field.zero(), field.one()])
    }

    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Poly {
        Poly::new(
            field.clone(),
            coeffs.iter().map(|&c| field.from_int(c)).collect(),
        )
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(f.add(&self.coeff(i), &other.coeff(i)));
        }
        Poly::new(f.clone(), out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(f.sub(&self.coeff(i), &other.coeff(i)));
        }
        Poly::new(f.clone(), out)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = f.mul(a, b);
                out[i + j] = f.add(&out[i + j], &t);
            }
        }
        Poly::new(f.clone(), out)
    }

    pub fn scale(&self, c: &FieldElement) -> Poly {
        let f = &self.field;
        Poly::new(f.clone(), self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        let f = &self.field;
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        if self.degree().map_or(true, |d| d < dd) {
            return (Poly::zero(f), self.clone());
        }
        let lead_inv = f.inv(divisor.leading().unwrap()).expect("nonzero leading");
        let mut rem = self.coeffs.clone();
        let qd = rem.len() - 1 - dd;
        let mut quot = vec![f.zero(); qd + 1];
        for i in (0..=qd).rev() {
            let c = f.mul(&rem[i + dd], &lead_inv);
            if f.is_zero(&c) {
                continue;
            }
            quot[i] = c.clone();
            for (j, dcoef) in divisor.coeffs.iter().enumerate() {
                let t = f.mul(&c, dcoef);
                rem[i + j] = f.sub(&rem[i + j], &t);
            }
        }
        (Poly::new(f.clone(), quot), Poly::new(f.clone(), rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.divrem(divisor).1
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns (g, s, t) with g = s*self + t*other and g monic (or zero).
    pub fn extended_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lead_inv = f.inv(r0.leading().unwrap()).unwrap();
        (r0.scale(&lead_inv), s0.scale(&lead_inv), t0.scale(&lead_inv))
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) if self.field.is_one(l) => self.clone(),
            Some(l) => self.scale(&self.field.inv(l).unwrap()),
        }
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        if self.coeffs.len() <= 1 {
            return Poly::zero(f);
        }
        let out = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let k = f.from_int((i + 1) as i64);
                f.mul(c, &k)
            })
            .collect();
        Poly::new(f.clone(), out)
    }

    pub fn eval(&self, at: &FieldElement) -> FieldElement {
        let f = &self.field;
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, at), c);
        }
        acc
    }

    pub fn pow_mod(&self, mut e: u64, modulus: &Poly) -> Poly {
        let f = &self.field;
        let mut result = Poly::one(f);
        let mut base = self.rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            e >>= 1;
        }
        result
    }

    /// Complete factorization into monic irreducibles with multiplicities,
    /// ordered by (degree, coefficient tuple). The product of the factors
    /// times the returned unit equals the input.
    pub fn factor(&self) -> Result<(Vec<(Poly, usize)>, FieldElement), FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroPolynomial);
        }
        let f = &self.field;
        let unit = self.leading().unwrap().clone();
        let mut factors: Vec<(Poly, usize)> = Vec::new();
        collect_factors(&self.monic(), 1, &mut factors);
        factors.sort_by(|a, b| {
            let da = a.0.degree().unwrap();
            let db = b.0.degree().unwrap();
            da.cmp(&db).then_with(|| cmp_coeffs(&a.0, &b.0))
        });
        // merge equal factors
        let mut merged: Vec<(Poly, usize)> = Vec::new();
        for (p, m) in factors {
            if let Some(last) = merged.last_mut() {
                if last.0 == p {
                    last.1 += m;
                    continue;
                }
            }
            merged.push((p, m));
        }
        debug_assert!({
            let mut prod = Poly::constant(f, unit.clone());
            for (p, m) in &merged {
                for _ in 0..*m {
                    prod = prod.mul(p);
                }
            }
            prod == *self
        });
        Ok((merged, unit))
    }

    /// Irreducibility certificate: f of degree n is irreducible iff
    /// x^{q^n} = x mod f and gcd(f, x^{q^d} - x) is trivial for d < n.
    pub fn is_irreducible(&self) -> bool {
        let f = &self.field;
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(n) => n,
        };
        let me = self.monic();
        let q = f.order();
        let x = Poly::x(f);
        let mut xq = x.clone();
        for d in 1..=n {
            xq = xq.pow_mod(q, &me);
            let diff = xq.sub(&x);
            if d < n {
                let g = me.gcd(&diff);
                if g.degree() != Some(0) {
                    return false;
                }
            } else if !diff.is_zero() {
                return false;
            }
        }
        true
    }

    /// Roots in the coefficient field, each listed once.
    pub fn roots(&self) -> Vec<FieldElement> {
        let f = &self.field;
        if self.is_zero() {
            return Vec::new();
        }
        let (factors, _) = self.factor().expect("nonzero");
        let mut out = Vec::new();
        for (p, _) in factors {
            if p.degree() == Some(1) {
                // monic x + c has root -c
                out.push(f.neg(&p.coeff(0)));
            }
        }
        out
    }
}

fn cmp_coeffs(a: &Poly, b: &Poly) -> std::cmp::Ordering {
    for (x, y) in a.coeffs().iter().zip(b.coeffs().iter()) {
        match x.coeffs.as_slice().cmp(y.coeffs.as_slice()) {
            std::cmp::Ordering::Equal => continue,
            ord => return ord,
        }
    }
    std::cmp::Ordering::Equal
}

fn collect_factors(f: &Poly, mult: usize, out: &mut Vec<(Poly, usize)>) {
    let field = f.field().clone();
    if f.degree() == Some(0) || f.is_zero() {
        return;
    }
    if f.degree() == Some(1) {
        out.push((f.clone(), mult));
        return;
    }
    let deriv = f.derivative();
    if deriv.is_zero() {
        // f = g(x^p); take the p-th root coefficient-wise (q/p power inverts
        // the Frobenius on coefficients)
        let p = field.characteristic() as usize;
        let q = field.order();
        let root_exp = (q / p as u64) as i64;
        let mut g_coeffs = Vec::new();
        for i in (0..f.coeffs().len()).step_by(p) {
            g_coeffs.push(field.pow(&f.coeff(i), root_exp).unwrap());
        }
        let g = Poly::new(field, g_coeffs);
        collect_factors(&g, mult * p, out);
        return;
    }
    let g = f.gcd(&deriv);
    if g.degree() != Some(0) {
        let squarefree = f.divrem(&g).0;
        // factor the squarefree part, then recurse on the cofactor with the
        // same multiplicity bookkeeping
        let mut part = Vec::new();
        factor_squarefree(&squarefree, &mut part);
        let mut rest = f.clone();
        for (p, _) in &part {
            let mut m = 0;
            loop {
                let (q, r) = rest.divrem(p);
                if r.is_zero() {
                    rest = q;
                    m += 1;
                } else {
                    break;
                }
            }
            out.push((p.clone(), mult * m));
        }
        if rest.degree().map_or(false, |d| d > 0) {
            collect_factors(&rest, mult, out);
        }
        return;
    }
    let mut part = Vec::new();
    factor_squarefree(f, &mut part);
    for (p, _) in part {
        out.push((p, mult));
    }
}

fn factor_squarefree(f: &Poly, out: &mut Vec<(Poly, usize)>) {
    let field = f.field().clone();
    let q = field.order();
    let x = Poly::x(&field);
    let mut h = f.monic();
    let mut xq = x.clone();
    let mut d = 0usize;
    while h.degree().map_or(false, |deg| deg > 0) {
        d += 1;
        if h.degree().unwrap() < 2 * d {
            out.push((h.monic(), 1));
            break;
        }
        xq = xq.pow_mod(q, &h);
        let g = h.gcd(&xq.sub(&x));
        if g.degree().map_or(false, |deg| deg > 0) {
            let mut rng = ChaCha8Rng::seed_from_u64(FACTOR_SEED ^ (d as u64));
            equal_degree_split(&g, d, &mut rng, out);
            h = h.divrem(&g).0;
            if h.degree().map_or(true, |deg| deg == 0) {
                break;
            }
            xq = xq.rem(&h);
        }
    }
}

/// Cantor-Zassenhaus equal-degree splitting: f is a product of distinct
/// irreducibles all of degree d.
fn equal_degree_split(f: &Poly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<(Poly, usize)>) {
    let field = f.field().clone();
    let n = f.degree().unwrap();
    if n == d {
        out.push((f.monic(), 1));
        return;
    }
    let q = field.order();
    loop {
        let mut coeffs = Vec::with_capacity(n);
        for _ in 0..n {
            let v = rng.gen_range(0..q);
            coeffs.push(int_to_elem(&field, v));
        }
        let a = Poly::new(field.clone(), coeffs);
        if a.degree().map_or(true, |deg| deg == 0) {
            continue;
        }
        let g0 = f.gcd(&a);
        if g0.degree().map_or(false, |deg| deg > 0 && deg < n) {
            let rest = f.divrem(&g0).0;
            equal_degree_split(&g0, d, rng, out);
            equal_degree_split(&rest, d, rng, out);
            return;
        }
        let b = if field.characteristic() == 2 {
            // trace map over GF(2): a + a^2 + a^4 + ... within GF(q^d)
            let bits = (q.trailing_zeros() as usize) * d;
            let mut tr = a.rem(f);
            let mut cur = a.rem(f);
            for _ in 1..bits {
                cur = cur.mul(&cur).rem(f);
                tr = tr.add(&cur);
            }
            tr
        } else {
            // a^((q^d - 1)/2) - 1 without forming q^d: first the norm-like
            // exponent (q^d - 1)/(q - 1) = 1 + q + ... + q^{d-1} by iterated
            // q-th powers, then the remaining (q - 1)/2
            let mut c = a.rem(f);
            for _ in 1..d {
                c = c.pow_mod(q, f).mul(&a).rem(f);
            }
            c.pow_mod((q - 1) / 2, f).sub(&Poly::one(&field))
        };
        let g = f.gcd(&b);
        if g.degree().map_or(false, |deg| deg > 0 && deg < n) {
            let rest = f.divrem(&g).0;
            equal_degree_split(&g, d, rng, out);
            equal_degree_split(&rest, d, rng, out);
            return;
        }
    }
}

fn int_to_elem(field: &Field, mut v: u64) -> FieldElement {
    let p = field.characteristic();
    let mut coeffs = vec![0u64; field.degree()];
    for c in coeffs.iter_mut() {
        *c = v % p;
        v /= p;
    }
    field.element(&coeffs).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf3() -> Field {
        Field::prime(3).unwrap()
    }

    #[test]
    fn x_squared_minus_two_irreducible_over_gf3() {
        // squares mod 3 are {0,1}, so 2 has no square root
        let f = Poly::from_ints(&gf3(), &[-2, 0, 1]);
        let (factors, unit) = f.factor().unwrap();
        assert!(gf3().is_one(&unit));
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].1, 1);
        assert!(factors[0].0.is_irreducible());
    }

    #[test]
    fn x_squared_minus_one_splits() {
        let k = gf3();
        let f = Poly::from_ints(&k, &[-1, 0, 1]);
        let (factors, _) = f.factor().unwrap();
        let expect = vec![Poly::from_ints(&k, &[1, 1]), Poly::from_ints(&k, &[2, 1])];
        let got: Vec<Poly> = factors.iter().map(|(p, _)| p.clone()).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn x_cubed_minus_x_splits_completely() {
        let k = gf3();
        let f = Poly::from_ints(&k, &[0, -1, 0, 1]);
        let (factors, _) = f.factor().unwrap();
        assert_eq!(factors.len(), 3);
        for (p, m) in &factors {
            assert_eq!(*m, 1);
            assert_eq!(p.degree(), Some(1));
        }
    }

    #[test]
    fn factor_zero_rejected() {
        assert_eq!(
            Poly::zero(&gf3()).factor().unwrap_err(),
            FieldError::ZeroPolynomial
        );
    }

    #[test]
    fn factor_remultiplies_exhaustive_deg4_gf3() {
        // every monic polynomial of degree <= 4 over GF(3)
        let k = gf3();
        for deg in 1..=4usize {
            let total = 3u64.pow(deg as u32);
            for code in 0..total {
                let mut v = code;
                let mut coeffs: Vec<i64> = Vec::new();
                for _ in 0..deg {
                    coeffs.push((v % 3) as i64);
                    v /= 3;
                }
                coeffs.push(1);
                let f = Poly::from_ints(&k, &coeffs);
                let (factors, unit) = f.factor().unwrap();
                let mut prod = Poly::constant(&k, unit);
                for (p, m) in &factors {
                    assert!(p.is_irreducible(), "reducible factor for {coeffs:?}");
                    for _ in 0..*m {
                        prod = prod.mul(p);
                    }
                }
                assert_eq!(prod, f);
            }
        }
    }

    #[test]
    fn factor_with_multiplicity_char2() {
        let k = Field::prime(2).unwrap();
        // (x+1)^4 * (x^2+x+1)
        let xp1 = Poly::from_ints(&k, &[1, 1]);
        let quad = Poly::from_ints(&k, &[1, 1, 1]);
        let f = xp1.mul(&xp1).mul(&xp1).mul(&xp1).mul(&quad);
        let (factors, _) = f.factor().unwrap();
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0], (xp1, 4));
        assert_eq!(factors[1], (quad, 1));
    }

    #[test]
    fn factor_over_extension_field() {
        let gf9 = Field::make(3, 2, None).unwrap();
        // x^2 + 1 splits over GF(9): roots are the generator and its negation
        let f = Poly::from_ints(&gf9, &[1, 0, 1]);
        let (factors, _) = f.factor().unwrap();
        assert_eq!(factors.len(), 2);
        let mut roots = f.roots();
        roots.sort_by(|a, b| a.coeffs.as_slice().cmp(b.coeffs.as_slice()));
        assert_eq!(roots.len(), 2);
        let x = gf9.gen();
        assert!(roots.contains(&x));
        assert!(roots.contains(&gf9.neg(&x)));
    }

    #[test]
    fn quintic_cyclotomic_over_gf3() {
        // x^5 - 1 = (x - 1) * (irreducible quartic); the order of 3 mod 5 is 4
        let k = gf3();
        let f = Poly::from_ints(&k, &[-1, 0, 0, 0, 0, 1]);
        let (factors, _) = f.factor().unwrap();
        let degs: Vec<usize> = factors.iter().map(|(p, _)| p.degree().unwrap()).collect();
        assert_eq!(degs, vec![1, 4]);
    }
}
