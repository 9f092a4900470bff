//! The frame `Rad(A)` of radical ideals, i.e. the opens of `Spec(A)`.
//!
//! An `Open` carries a finite generator list `G` and denotes `√(G)`; all
//! comparisons are extensional, certificate-producing semantic tests rather
//! than normal forms. `D(g1, ..., gk)` is the join of the basic opens.

use crate::error::{Error, Result};
use crate::ideals::{
    ideal_quotient, radical_membership, Ideal, MembershipCertificate,
};
use crate::numutil::radical_of;
use crate::rings::{Reducedness, Ring, RingElem, RingKind};
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Open {
    support: Ideal,
}

impl Open {
    pub fn from_support(support: Ideal) -> Open {
        Open { support }
    }

    pub fn ring(&self) -> &Ring {
        self.support.ring()
    }

    pub fn support(&self) -> &Ideal {
        &self.support
    }

    pub fn generators(&self) -> &[RingElem] {
        self.support.generators()
    }
}

impl fmt::Display for Open {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D(")?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// `D(f) = √((f))`.
pub fn basic_open(ring: &Ring, f: &RingElem) -> Open {
    Open {
        support: Ideal::principal(f),
    }
}

pub fn top(ring: &Ring) -> Open {
    Open {
        support: Ideal::unit(ring),
    }
}

/// `√(0)`; in a non-reduced ring the support is the zero ideal but the open
/// it denotes is the nilradical.
pub fn bottom(ring: &Ring) -> Open {
    Open {
        support: Ideal::zero(ring.clone()),
    }
}

/// `U ≤ V` in `Rad(A)`, with one radical-membership certificate per
/// generator of `U` on success.
pub fn leq(u: &Open, v: &Open) -> Result<Option<Vec<MembershipCertificate>>> {
    if u.ring() != v.ring() {
        return Err(Error::MixedRings);
    }
    let ring = u.ring();
    let mut certs = Vec::with_capacity(u.generators().len());
    for g in u.generators() {
        match radical_membership(ring, v.support(), g)? {
            Some(c) => certs.push(c),
            None => return Ok(None),
        }
    }
    Ok(Some(certs))
}

/// Extensional equality of opens: mutual `leq`.
pub fn ext_eq(u: &Open, v: &Open) -> Result<bool> {
    Ok(leq(u, v)?.is_some() && leq(v, u)?.is_some())
}

/// Join: concatenated generators (deduplicated by normal form).
pub fn join(u: &Open, v: &Open) -> Result<Open> {
    if u.ring() != v.ring() {
        return Err(Error::MixedRings);
    }
    let mut gens: Vec<RingElem> = u.generators().to_vec();
    for g in v.generators() {
        if !gens.contains(g) {
            gens.push(g.clone());
        }
    }
    Ok(Open {
        support: Ideal::new(u.ring().clone(), gens)?,
    })
}

/// Meet: all pairwise products of generators (`√(f) ∩ √(g) = √(fg)`).
pub fn meet(u: &Open, v: &Open) -> Result<Open> {
    if u.ring() != v.ring() {
        return Err(Error::MixedRings);
    }
    let ring = u.ring();
    let mut gens: Vec<RingElem> = Vec::new();
    for a in u.generators() {
        for b in v.generators() {
            let p = ring.mul(a, b)?;
            if !gens.contains(&p) {
                gens.push(p);
            }
        }
    }
    Ok(Open {
        support: Ideal::new(ring.clone(), gens)?,
    })
}

/// Generators of `√(support)` where that radical is computable: always for
/// `Z` and `Z/n` (via factorization of the principal generator), and for
/// polynomial quotients only in the cases where the support is radical by
/// construction (the unit ideal, or the zero ideal of a known-reduced ring).
fn radical_support(v: &Open) -> Result<Ideal> {
    let ring = v.ring();
    match ring.kind() {
        RingKind::Integers => {
            let d = v.support().principal_gen();
            if d.is_zero() {
                return Ok(Ideal::zero(ring.clone()));
            }
            let r = radical_of(&d);
            Ideal::new(ring.clone(), vec![ring.from_bigint(&BigInt::from(r))])
        }
        RingKind::Modular(_) => {
            let d = v.support().principal_gen(); // divisor of n, with n = zero ideal
            let r = radical_of(&d);
            Ideal::new(ring.clone(), vec![ring.from_bigint(&BigInt::from(r))])
        }
        RingKind::PolyQuotient { .. } => {
            if crate::ideals::ideal_membership(ring, v.support(), &ring.one())?.is_some() {
                return Ok(Ideal::unit(ring));
            }
            if v.generators().iter().all(|g| g.is_zero()) || v.generators().is_empty() {
                if ring.reducedness() == Reducedness::KnownReduced {
                    return Ok(Ideal::zero(ring.clone()));
                }
            }
            Err(Error::unsupported(
                "ring with computable radicals (Z, Z/n, or a radical-by-construction support)",
                ring.spec_text(),
            ))
        }
    }
}

/// Heyting implication: the largest `C` with `C ∧ U ≤ V`, computed as the
/// ideal quotient `(√(support V) : support U)`, which is automatically
/// radical.
pub fn heyting(u: &Open, v: &Open) -> Result<Open> {
    if u.ring() != v.ring() {
        return Err(Error::MixedRings);
    }
    let ring = u.ring();
    let rad_v = radical_support(v)?;
    let support = ideal_quotient(ring, &rad_v, u.support())?;
    Ok(Open { support })
}

/// `¬U = (U ⇒ ⊥)`.
pub fn negation(u: &Open) -> Result<Open> {
    heyting(u, &bottom(u.ring()))
}

/// Dense iff `¬U = ⊥`.
pub fn is_dense(u: &Open) -> Result<bool> {
    ext_eq(&negation(u)?, &bottom(u.ring()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::verify_membership;

    fn open(ring: &Ring, gens: &[i64]) -> Open {
        Open::from_support(
            Ideal::new(ring.clone(), gens.iter().map(|&g| ring.int(g)).collect()).unwrap(),
        )
    }

    #[test]
    fn basic_open_examples() {
        let z4 = Ring::parse("Z/4").unwrap();
        let u = basic_open(&z4, &z4.int(2));
        assert!(ext_eq(&u, &bottom(&z4)).unwrap());

        let z = Ring::integers();
        assert!(ext_eq(&basic_open(&z, &z.one()), &top(&z)).unwrap());
    }

    #[test]
    fn leq_examples_with_certificates() {
        let z = Ring::integers();
        let u = open(&z, &[6]);
        let v = open(&z, &[2]);
        let certs = leq(&u, &v).unwrap().unwrap();
        assert_eq!(certs.len(), 1);
        assert!(verify_membership(&z, v.support(), &z.int(6), &certs[0]));

        let z6 = Ring::parse("Z/6").unwrap();
        let certs = leq(&top(&z6), &open(&z6, &[2, 3])).unwrap().unwrap();
        assert!(verify_membership(
            &z6,
            open(&z6, &[2, 3]).support(),
            &z6.one(),
            &certs[0]
        ));

        assert!(leq(&open(&z, &[2]), &open(&z, &[6])).unwrap().is_none());
    }

    #[test]
    fn join_meet_examples() {
        let z = Ring::integers();
        assert!(ext_eq(&join(&open(&z, &[2]), &open(&z, &[3])).unwrap(), &top(&z)).unwrap());
        assert!(ext_eq(&meet(&open(&z, &[2]), &open(&z, &[3])).unwrap(), &open(&z, &[6])).unwrap());
        let u = open(&z, &[10, 15]);
        assert!(ext_eq(&meet(&u, &top(&z)).unwrap(), &u).unwrap());
    }

    #[test]
    fn heyting_examples() {
        let z6 = Ring::parse("Z/6").unwrap();
        let h = heyting(&basic_open(&z6, &z6.int(2)), &bottom(&z6)).unwrap();
        assert!(ext_eq(&h, &open(&z6, &[3])).unwrap());

        let z = Ring::integers();
        let h = heyting(&basic_open(&z, &z.int(2)), &basic_open(&z, &z.int(6))).unwrap();
        assert!(ext_eq(&h, &open(&z, &[3])).unwrap());

        for ring in [Ring::integers(), Ring::parse("Z/12").unwrap()] {
            let v = open(&ring, &[5]);
            assert!(ext_eq(&heyting(&bottom(&ring), &v).unwrap(), &top(&ring)).unwrap());
        }
    }

    #[test]
    fn density_examples() {
        let z = Ring::integers();
        assert!(is_dense(&basic_open(&z, &z.int(2))).unwrap());
        let z6 = Ring::parse("Z/6").unwrap();
        assert!(!is_dense(&basic_open(&z6, &z6.int(2))).unwrap());
        assert!(ext_eq(
            &negation(&basic_open(&z6, &z6.int(2))).unwrap(),
            &open(&z6, &[3])
        )
        .unwrap());
        assert!(is_dense(&top(&z6)).unwrap());
    }

    #[test]
    fn triviality_is_top_leq_bottom() {
        for (spec, trivial) in [("Z/1", true), ("Z/6", false), ("Z", false)] {
            let ring = Ring::parse(spec).unwrap();
            let collapsed = leq(&top(&ring), &bottom(&ring)).unwrap().is_some();
            assert_eq!(collapsed, trivial, "{spec}");
        }
    }

    #[test]
    fn nilpotent_iff_basic_open_bottom() {
        for n in [4u64, 6, 12, 30] {
            let ring = Ring::modular_u64(n);
            for f in 0..n as i64 {
                let e = ring.int(f);
                assert_eq!(
                    ext_eq(&basic_open(&ring, &e), &bottom(&ring)).unwrap(),
                    ring.is_nilpotent(&e).is_some()
                );
            }
        }
    }

    #[test]
    fn heyting_unsupported_for_general_polynomial_support() {
        let r = Ring::parse("Q[x,y]/(x^2 - y)").unwrap();
        let u = basic_open(&r, &r.generator("x").unwrap());
        let v = basic_open(&r, &r.generator("y").unwrap());
        assert!(matches!(heyting(&u, &v), Err(Error::UnsupportedRing { .. })));
        // The radical-by-construction cases still work.
        assert!(heyting(&u, &top(&r)).is_ok());
        assert!(heyting(&u, &bottom(&r.assuming_reduced())).is_ok());
    }
}
