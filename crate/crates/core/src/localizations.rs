//! Elements of `A[f⁻¹]` with decidable (semantic) equality.
//!
//! No canonical form is attempted for fractions: `num / f^k` is compared by
//! cross-multiplying and asking whether some power of `f` kills the
//! difference, which reduces to radical membership in an annihilator.

use crate::error::{Error, Result};
use crate::ideals::{annihilator, radical_membership, MembershipCertificate};
use crate::rings::{Ring, RingElem};
use std::fmt;

/// `numerator / base^exponent` in the localization away from `base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizedElem {
    ring: Ring,
    base: RingElem,
    numerator: RingElem,
    exponent: u32,
}

impl LocalizedElem {
    pub fn new(base: RingElem, numerator: RingElem, exponent: u32) -> Result<LocalizedElem> {
        if base.ring() != numerator.ring() {
            return Err(Error::MixedRings);
        }
        Ok(LocalizedElem {
            ring: base.ring().clone(),
            base,
            numerator,
            exponent,
        })
    }

    /// The image of a ring element under `A -> A[base⁻¹]`.
    pub fn over(base: &RingElem, numerator: &RingElem) -> Result<LocalizedElem> {
        LocalizedElem::new(base.clone(), numerator.clone(), 0)
    }

    pub fn one(base: &RingElem) -> LocalizedElem {
        LocalizedElem {
            ring: base.ring().clone(),
            base: base.clone(),
            numerator: base.ring().one(),
            exponent: 0,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn base(&self) -> &RingElem {
        &self.base
    }

    pub fn numerator(&self) -> &RingElem {
        &self.numerator
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn mul(&self, other: &LocalizedElem) -> Result<LocalizedElem> {
        if self.base != other.base {
            return Err(Error::MismatchedBase);
        }
        Ok(LocalizedElem {
            ring: self.ring.clone(),
            base: self.base.clone(),
            numerator: self.ring.mul(&self.numerator, &other.numerator)?,
            exponent: self.exponent + other.exponent,
        })
    }
}

impl fmt::Display for LocalizedElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}^{}", self.numerator, self.base, self.exponent)
    }
}

/// Equality in `A[f⁻¹]`: true iff `f^N`(cross-multiplied difference)` = 0`
/// for some `N`, returned as the witness. The search is radical membership of
/// `f` in the annihilator of the difference.
pub fn loc_equal(a: &LocalizedElem, b: &LocalizedElem) -> Result<Option<u32>> {
    if a.base != b.base {
        return Err(Error::MismatchedBase);
    }
    let ring = &a.ring;
    let f = &a.base;
    let lhs = ring.mul(&a.numerator, &ring.pow(f, b.exponent)?)?;
    let rhs = ring.mul(&b.numerator, &ring.pow(f, a.exponent)?)?;
    let d = ring.sub(&lhs, &rhs)?;
    if d.is_zero() {
        return Ok(Some(0));
    }
    let ann = annihilator(ring, &d)?;
    match radical_membership(ring, &ann, f)? {
        None => Ok(None),
        Some(cert) => {
            debug_assert!(ring
                .mul(&ring.pow(f, cert.exponent)?, &d)?
                .is_zero());
            Ok(Some(cert.exponent))
        }
    }
}

/// Invertibility of `x` in `A[f⁻¹]`: true iff `f ∈ √((numerator))`. The
/// returned certificate doubles as the inverse construction: from
/// `f^n = u·num`, the inverse of `num/f^k` is `u·f^k / f^n`.
pub fn loc_invertible(x: &LocalizedElem) -> Result<Option<MembershipCertificate>> {
    let ring = &x.ring;
    let ideal = crate::ideals::Ideal::principal(&x.numerator);
    radical_membership(ring, &ideal, &x.base)
}

/// Build the inverse promised by a `loc_invertible` certificate.
pub fn inverse_from_certificate(
    x: &LocalizedElem,
    cert: &MembershipCertificate,
) -> Result<LocalizedElem> {
    let ring = &x.ring;
    let mut u = ring.zero();
    for (c, _) in &cert.cofactors {
        u = ring.add(&u, c)?;
    }
    let numerator = ring.mul(&u, &ring.pow(&x.base, x.exponent)?)?;
    LocalizedElem::new(x.base.clone(), numerator, cert.exponent)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equality_examples() {
        // Z/12, base 2: 3/1 = 0/1 with witness 2 since 2²·3 = 0.
        let z12 = Ring::parse("Z/12").unwrap();
        let two = z12.int(2);
        let a = LocalizedElem::over(&two, &z12.int(3)).unwrap();
        let b = LocalizedElem::over(&two, &z12.zero()).unwrap();
        assert_eq!(loc_equal(&a, &b).unwrap(), Some(2));

        // Z, base 5: 3/1 ≠ 0/1 (domain).
        let z = Ring::integers();
        let five = z.int(5);
        let a = LocalizedElem::over(&five, &z.int(3)).unwrap();
        let b = LocalizedElem::over(&five, &z.zero()).unwrap();
        assert_eq!(loc_equal(&a, &b).unwrap(), None);

        // Z/4, base 2: 1/1 = 0/1 because 2 is nilpotent.
        let z4 = Ring::parse("Z/4").unwrap();
        let two = z4.int(2);
        let a = LocalizedElem::over(&two, &z4.one()).unwrap();
        let b = LocalizedElem::over(&two, &z4.zero()).unwrap();
        assert!(loc_equal(&a, &b).unwrap().is_some());
    }

    #[test]
    fn invertibility_examples() {
        // Z/12, base 2: 2/1 inverts itself.
        let z12 = Ring::parse("Z/12").unwrap();
        let x = LocalizedElem::over(&z12.int(2), &z12.int(2)).unwrap();
        assert!(loc_invertible(&x).unwrap().is_some());

        // Z/6, base 1: 5 is a unit (5·5 = 25 = 1).
        let z6 = Ring::parse("Z/6").unwrap();
        let x = LocalizedElem::over(&z6.one(), &z6.int(5)).unwrap();
        assert!(loc_invertible(&x).unwrap().is_some());

        // Z, base 1: 2 is not a unit.
        let z = Ring::integers();
        let x = LocalizedElem::over(&z.one(), &z.int(2)).unwrap();
        assert!(loc_invertible(&x).unwrap().is_none());
    }

    #[test]
    fn inverse_round_trip() {
        let cases = [
            ("Z/12", 2i64, 2i64, 0u32),
            ("Z/6", 1, 5, 0),
            ("Z/12", 6, 5, 1),
            ("Z/30", 10, 4, 2),
        ];
        for (spec, base, num, exp) in cases {
            let ring = Ring::parse(spec).unwrap();
            let x = LocalizedElem::new(ring.int(base), ring.int(num), exp).unwrap();
            if let Some(cert) = loc_invertible(&x).unwrap() {
                let y = inverse_from_certificate(&x, &cert).unwrap();
                let prod = x.mul(&y).unwrap();
                let one = LocalizedElem::one(&x.base);
                assert!(
                    loc_equal(&prod, &one).unwrap().is_some(),
                    "inverse of {x} in {spec}[{base}⁻¹]"
                );
            }
        }
    }

    #[test]
    fn equivalence_relation_on_samples() {
        let z12 = Ring::parse("Z/12").unwrap();
        let base = z12.int(6);
        let elems: Vec<LocalizedElem> = (0..12)
            .flat_map(|n| {
                (0..3).map(move |e| (n, e))
            })
            .map(|(n, e)| LocalizedElem::new(base.clone(), z12.int(n), e).unwrap())
            .collect();
        for a in &elems {
            assert!(loc_equal(a, a).unwrap().is_some());
            for b in &elems {
                let ab = loc_equal(a, b).unwrap().is_some();
                let ba = loc_equal(b, a).unwrap().is_some();
                assert_eq!(ab, ba);
                for c in &elems {
                    if ab && loc_equal(b, c).unwrap().is_some() {
                        assert!(loc_equal(a, c).unwrap().is_some());
                    }
                }
            }
        }
    }

    #[test]
    fn brute_force_agreement_on_finite_rings() {
        // loc_equal agrees with enumerating N up to the ring's nilpotency bound.
        for n in [4u64, 6, 12, 18] {
            let ring = Ring::modular_u64(n);
            for f in 0..n as i64 {
                let base = ring.int(f);
                for a in 0..n as i64 {
                    let x = LocalizedElem::over(&base, &ring.int(a)).unwrap();
                    let zero = LocalizedElem::over(&base, &ring.zero()).unwrap();
                    let bits = 64 - n.leading_zeros();
                    let brute = (0..=bits).any(|k| {
                        ring.mul(&ring.pow(&base, k).unwrap(), &ring.int(a))
                            .unwrap()
                            .is_zero()
                    });
                    assert_eq!(
                        loc_equal(&x, &zero).unwrap().is_some(),
                        brute,
                        "n={n} f={f} a={a}"
                    );
                }
            }
        }
    }
}
