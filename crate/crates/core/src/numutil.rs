//! Integer helpers shared by the ring and ideal arithmetic.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Extended gcd: returns `(g, x, y)` with `g = gcd(a, b) >= 0` and
/// `g = x*a + y*b`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut x0, mut x1) = (BigInt::one(), BigInt::zero());
    let (mut y0, mut y1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r);
        let x = &x0 - &q * &x1;
        x0 = std::mem::replace(&mut x1, x);
        let y = &y0 - &q * &y1;
        y0 = std::mem::replace(&mut y1, y);
    }
    if r0.is_negative() {
        (-r0, -x0, -y0)
    } else {
        (r0, x0, y0)
    }
}

/// Extended gcd of a list: `(g, cs)` with `g = sum cs[i]*xs[i]`, `g >= 0`.
/// The gcd of the empty list is `0`.
pub fn ext_gcd_list(xs: &[BigInt]) -> (BigInt, Vec<BigInt>) {
    let mut g = BigInt::zero();
    let mut cs: Vec<BigInt> = Vec::with_capacity(xs.len());
    for x in xs {
        let (g2, u, v) = ext_gcd(&g, x);
        for c in cs.iter_mut() {
            *c *= &u;
        }
        cs.push(v);
        g = g2;
    }
    (g, cs)
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    let (g, x, _) = ext_gcd(&BigInt::from(a.clone()), &BigInt::from(m.clone()));
    if !g.is_one() {
        return None;
    }
    let m_int = BigInt::from(m.clone());
    let x = ((x % &m_int) + &m_int) % &m_int;
    Some(x.to_biguint().unwrap())
}

/// Product of the distinct prime factors of `n` (trial division; callers only
/// pass desk-scale moduli).
pub fn radical_of(n: &BigUint) -> BigUint {
    let mut n = n.clone();
    let mut rad = BigUint::one();
    let mut p = BigUint::from(2u32);
    while &p * &p <= n {
        if (&n % &p).is_zero() {
            rad *= &p;
            while (&n % &p).is_zero() {
                n /= &p;
            }
        }
        p += 1u32;
    }
    if n > BigUint::one() {
        rad *= &n;
    }
    rad
}

pub fn is_squarefree(n: &BigUint) -> bool {
    &radical_of(n) == n
}

pub fn is_prime(n: &BigUint) -> bool {
    if *n < BigUint::from(2u32) {
        return false;
    }
    let mut p = BigUint::from(2u32);
    while &p * &p <= *n {
        if (n % &p).is_zero() {
            return false;
        }
        p += 1u32;
    }
    true
}

/// Stabilized `gcd(n, f^∞)`: the largest divisor of `n` whose prime factors
/// all divide `f`.
pub fn gcd_saturation(n: &BigUint, f: &BigUint) -> BigUint {
    if n.is_zero() {
        return f.clone();
    }
    let mut s = n.gcd(f);
    loop {
        let next = n.gcd(&(&s * &s));
        if next == s {
            return s;
        }
        s = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn ext_gcd_bezout() {
        for (a, b) in [(12, 18), (-4, 6), (0, 5), (7, 0), (0, 0), (35, 64)] {
            let (g, x, y) = ext_gcd(&bi(a), &bi(b));
            assert_eq!(g, bi(a).gcd(&bi(b)));
            assert_eq!(g, x * bi(a) + y * bi(b));
        }
    }

    #[test]
    fn ext_gcd_list_combination() {
        let xs = vec![bi(6), bi(10), bi(15)];
        let (g, cs) = ext_gcd_list(&xs);
        assert_eq!(g, bi(1));
        let sum: BigInt = xs.iter().zip(&cs).map(|(x, c)| x * c).sum();
        assert_eq!(sum, bi(1));
    }

    #[test]
    fn radical_and_squarefree() {
        assert_eq!(radical_of(&BigUint::from(12u32)), BigUint::from(6u32));
        assert_eq!(radical_of(&BigUint::from(1u32)), BigUint::from(1u32));
        assert!(is_squarefree(&BigUint::from(30u32)));
        assert!(!is_squarefree(&BigUint::from(12u32)));
    }

    #[test]
    fn saturation_examples() {
        // gcd(12, 2^∞) = 4, gcd(12, 6^∞) = 12, gcd(12, 5^∞) = 1
        assert_eq!(
            gcd_saturation(&BigUint::from(12u32), &BigUint::from(2u32)),
            BigUint::from(4u32)
        );
        assert_eq!(
            gcd_saturation(&BigUint::from(12u32), &BigUint::from(6u32)),
            BigUint::from(12u32)
        );
        assert_eq!(
            gcd_saturation(&BigUint::from(12u32), &BigUint::from(5u32)),
            BigUint::from(1u32)
        );
    }
}
