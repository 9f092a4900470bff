//! Finitely generated ideals and certificate-producing membership tests.
//!
//! Every positive answer carries a `MembershipCertificate`: cofactors and an
//! exponent witnessing `f^n = u_1·g_{i_1} + ⋯ + u_m·g_{i_m}`. Verification is
//! plain ring arithmetic, implemented independently of the searches that
//! produce certificates.

use crate::bounds::exponent_bound;
use crate::error::{Error, Result};
use crate::numutil::ext_gcd_list;
use crate::poly::{express, groebner_tracked, MonomialOrder, Poly};
use crate::rings::{poly_exact_div, Ring, RingElem, RingKind};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

const ORD: MonomialOrder = MonomialOrder::Grevlex;

/// A finitely generated ideal; the empty generator list is the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<RingElem>,
}

impl Ideal {
    pub fn new(ring: Ring, generators: Vec<RingElem>) -> Result<Ideal> {
        for g in &generators {
            if *g.ring() != ring {
                return Err(Error::MixedRings);
            }
        }
        Ok(Ideal { ring, generators })
    }

    pub fn zero(ring: Ring) -> Ideal {
        Ideal {
            ring,
            generators: Vec::new(),
        }
    }

    pub fn principal(f: &RingElem) -> Ideal {
        Ideal {
            ring: f.ring().clone(),
            generators: vec![f.clone()],
        }
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal {
            ring: ring.clone(),
            generators: vec![ring.one()],
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[RingElem] {
        &self.generators
    }

    /// In `Z/n` an ideal is `(gcd(generators, n))`; this returns that single
    /// normalized generator `d | n` (with `d = n` for the zero ideal). For
    /// `Z`, the nonnegative gcd of the generators.
    pub(crate) fn principal_gen(&self) -> BigUint {
        match self.ring.kind() {
            RingKind::Integers => {
                let mut g = BigInt::zero();
                for x in &self.generators {
                    g = g.gcd(x.as_int());
                }
                g.to_biguint().unwrap()
            }
            RingKind::Modular(n) => {
                let mut g = n.clone();
                for x in &self.generators {
                    if !x.as_residue().is_zero() {
                        g = g.gcd(x.as_residue());
                    }
                }
                g
            }
            _ => panic!("principal_gen only for Z and Z/n"),
        }
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Witness of `f^exponent = sum cofactor_k * generators[index_k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipCertificate {
    pub exponent: u32,
    pub cofactors: Vec<(RingElem, usize)>,
}

/// Serializable form: canonical element printing, generator indices.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub exponent: u32,
    pub cofactors: Vec<(String, usize)>,
}

impl MembershipCertificate {
    pub fn to_record(&self) -> CertificateRecord {
        CertificateRecord {
            exponent: self.exponent,
            cofactors: self
                .cofactors
                .iter()
                .map(|(u, i)| (u.to_string(), *i))
                .collect(),
        }
    }

    pub fn from_record(ring: &Ring, rec: &CertificateRecord) -> Result<MembershipCertificate> {
        Ok(MembershipCertificate {
            exponent: rec.exponent,
            cofactors: rec
                .cofactors
                .iter()
                .map(|(s, i)| Ok((ring.parse_elem(s)?, *i)))
                .collect::<Result<Vec<_>>>()?,
        })
    }
}

/// Independent re-verification by ring arithmetic: checks that
/// `f^n - sum u_k*g_{i_k}` normalizes to zero. This is the only trusted path;
/// it shares no code with certificate production.
pub fn verify_membership(ring: &Ring, ideal: &Ideal, f: &RingElem, cert: &MembershipCertificate) -> bool {
    if cert.exponent == 0 {
        return false;
    }
    let Ok(mut acc) = ring.pow(f, cert.exponent) else {
        return false;
    };
    for (u, idx) in &cert.cofactors {
        let Some(g) = ideal.generators().get(*idx) else {
            return false;
        };
        let Ok(prod) = ring.mul(u, g) else {
            return false;
        };
        let Ok(next) = ring.sub(&acc, &prod) else {
            return false;
        };
        acc = next;
    }
    acc.is_zero()
}

/// Gröbner basis with cofactor tracking for ideals in polynomial rings (the
/// quotient's relation ideal is folded in, so the transformation is exact in
/// the quotient). Returns the basis and one cofactor row per basis element,
/// expressing it over the input generators.
pub fn groebner_basis(ring: &Ring, ideal: &Ideal) -> Result<(Ideal, Vec<Vec<RingElem>>)> {
    let Some((field, _, ring_gb)) = ring.poly_context() else {
        return Err(Error::unsupported("polynomial ring", ring.spec_text()));
    };
    if ideal.generators().is_empty() {
        return Ok((Ideal::zero(ring.clone()), Vec::new()));
    }
    let n_inputs = ideal.generators().len();
    let mut inputs: Vec<Poly> = ideal.generators().iter().map(|g| g.as_poly().clone()).collect();
    inputs.extend(ring_gb.iter().cloned());
    let gb = groebner_tracked(&inputs, field, ORD);
    let mut basis = Vec::new();
    let mut transform = Vec::new();
    for (k, b) in gb.basis.iter().enumerate() {
        let elem = ring.from_poly(b.clone());
        if elem.is_zero() {
            continue; // relation-ideal content, invisible in the quotient
        }
        basis.push(elem);
        transform.push(
            gb.transform[k][..n_inputs]
                .iter()
                .map(|p| ring.from_poly(p.clone()))
                .collect(),
        );
    }
    Ok((Ideal::new(ring.clone(), basis)?, transform))
}

/// Exact membership `f ∈ I` with an exponent-1 certificate.
pub fn ideal_membership(ring: &Ring, ideal: &Ideal, f: &RingElem) -> Result<Option<MembershipCertificate>> {
    if *ideal.ring() != *ring || *f.ring() != *ring {
        return Err(Error::MixedRings);
    }
    match ring.kind() {
        RingKind::Integers => {
            let xs: Vec<BigInt> = ideal.generators().iter().map(|g| g.as_int().clone()).collect();
            let (g, cs) = ext_gcd_list(&xs);
            let fv = f.as_int();
            if g.is_zero() {
                return Ok(fv.is_zero().then(|| MembershipCertificate {
                    exponent: 1,
                    cofactors: Vec::new(),
                }));
            }
            if !(fv % &g).is_zero() {
                return Ok(None);
            }
            let q = fv / &g;
            let cofactors = cs
                .iter()
                .enumerate()
                .filter_map(|(i, c)| {
                    let u = c * &q;
                    (!u.is_zero()).then(|| (ring.from_bigint(&u), i))
                })
                .collect();
            Ok(Some(MembershipCertificate { exponent: 1, cofactors }))
        }
        RingKind::Modular(n) => {
            let mut xs: Vec<BigInt> = ideal
                .generators()
                .iter()
                .map(|g| BigInt::from(g.as_residue().clone()))
                .collect();
            xs.push(BigInt::from(n.clone()));
            let (g, cs) = ext_gcd_list(&xs);
            let fv = BigInt::from(f.as_residue().clone());
            if g.is_zero() {
                // Only in the trivial ring Z/1... never: g >= gcd includes n >= 1.
                unreachable!("gcd with modulus cannot vanish");
            }
            if !(&fv % &g).is_zero() {
                return Ok(None);
            }
            let q = &fv / &g;
            let cofactors = cs[..ideal.generators().len()]
                .iter()
                .enumerate()
                .filter_map(|(i, c)| {
                    let u = ring.from_bigint(&(c * &q));
                    (!u.is_zero()).then_some((u, i))
                })
                .collect();
            Ok(Some(MembershipCertificate { exponent: 1, cofactors }))
        }
        RingKind::PolyQuotient { .. } => {
            let (field, _, ring_gb) = ring.poly_context().unwrap();
            let n_inputs = ideal.generators().len();
            let mut inputs: Vec<Poly> =
                ideal.generators().iter().map(|g| g.as_poly().clone()).collect();
            inputs.extend(ring_gb.iter().cloned());
            if inputs.is_empty() {
                return Ok(f.is_zero().then(|| MembershipCertificate {
                    exponent: 1,
                    cofactors: Vec::new(),
                }));
            }
            let gb = groebner_tracked(&inputs, field, ORD);
            let Some(rows) = express(f.as_poly(), &gb, n_inputs, field, ORD) else {
                return Ok(None);
            };
            let cofactors = rows
                .into_iter()
                .enumerate()
                .filter_map(|(i, p)| {
                    let u = ring.from_poly(p);
                    (!u.is_zero()).then_some((u, i))
                })
                .collect();
            Ok(Some(MembershipCertificate { exponent: 1, cofactors }))
        }
    }
}

/// Radical membership `f ∈ √I` with certificate `f^n = sum u_k g_k`.
///
/// Over `Z` and `Z/n` this is a bounded exponent search (complete because
/// prime multiplicities are bounded by the bit length); over polynomial
/// rings, the Rabinowitsch trick in one extra variable, with the exponent and
/// cofactors extracted by clearing `t = 1/f` denominators.
pub fn radical_membership(ring: &Ring, ideal: &Ideal, f: &RingElem) -> Result<Option<MembershipCertificate>> {
    if *ideal.ring() != *ring || *f.ring() != *ring {
        return Err(Error::MixedRings);
    }
    match ring.kind() {
        RingKind::Integers | RingKind::Modular(_) => {
            let bound = match ring.kind() {
                RingKind::Modular(n) => exponent_bound(n),
                RingKind::Integers => {
                    let d = ideal.principal_gen();
                    if d.is_zero() {
                        1
                    } else {
                        exponent_bound(&d)
                    }
                }
                _ => unreachable!(),
            };
            let mut power = ring.one();
            for k in 1..=bound {
                power = ring.mul(&power, f)?;
                if let Some(base) = ideal_membership(ring, ideal, &power)? {
                    debug_assert_eq!(base.exponent, 1);
                    return Ok(Some(MembershipCertificate {
                        exponent: k,
                        cofactors: base.cofactors,
                    }));
                }
            }
            Ok(None)
        }
        RingKind::PolyQuotient { .. } => rabinowitsch(ring, ideal, f),
    }
}

/// `1 ∈ I + J + (1 - t·f)` in one more variable, then substitute `t = 1/f`
/// and clear denominators.
fn rabinowitsch(ring: &Ring, ideal: &Ideal, f: &RingElem) -> Result<Option<MembershipCertificate>> {
    let (field, _, ring_gb) = ring.poly_context().unwrap();
    let n_inputs = ideal.generators().len();
    let f_ext = f.as_poly().pad_var();
    let nvars_ext = f_ext.nvars;

    let mut inputs: Vec<Poly> = ideal
        .generators()
        .iter()
        .map(|g| g.as_poly().pad_var())
        .collect();
    inputs.extend(ring_gb.iter().map(|p| p.pad_var()));
    let t = Poly::var(nvars_ext, nvars_ext - 1, field);
    let one = Poly::one(nvars_ext, field);
    inputs.push(one.sub(&t.mul(&f_ext, field, ORD), field, ORD));

    let gb = groebner_tracked(&inputs, field, ORD);
    let Some(rows) = express(&one, &gb, inputs.len(), field, ORD) else {
        return Ok(None);
    };

    // N must dominate the t-degrees so that t^d ↦ f^(N-d) clears every
    // denominator; the 1 - t·f row needs one more.
    let mut exponent = 1u32;
    for (i, u) in rows.iter().enumerate() {
        let d = u.degree_in_last() + if i == inputs.len() - 1 { 1 } else { 0 };
        exponent = exponent.max(d);
    }

    let mut cofactors = Vec::new();
    for (i, u) in rows.iter().take(n_inputs).enumerate() {
        let mut acc = Poly::zero(nvars_ext);
        for (d, coeff_poly) in u.coeffs_of_last(field, ORD).into_iter().enumerate() {
            if coeff_poly.is_zero() {
                continue;
            }
            let fp = f_ext.pow(exponent - d as u32, field, ORD);
            acc = acc.add(&coeff_poly.mul(&fp, field, ORD), field, ORD);
        }
        let elem = ring.from_poly(acc.unpad_var());
        if !elem.is_zero() {
            cofactors.push((elem, i));
        }
    }
    let cert = MembershipCertificate { exponent, cofactors };
    debug_assert!(verify_membership(ring, ideal, f, &cert));
    Ok(Some(cert))
}

/// The ideal quotient `(I : J) = {x : xJ ⊆ I}`.
pub fn ideal_quotient(ring: &Ring, num: &Ideal, den: &Ideal) -> Result<Ideal> {
    if *num.ring() != *ring || *den.ring() != *ring {
        return Err(Error::MixedRings);
    }
    match ring.kind() {
        RingKind::Integers => {
            let a = BigInt::from(num.principal_gen());
            let mut result: Option<BigInt> = None; // None = unit ideal so far
            for b in den.generators() {
                let b = b.as_int();
                if b.is_zero() {
                    continue;
                }
                let q = if a.is_zero() {
                    BigInt::zero()
                } else {
                    &a / a.gcd(b)
                };
                result = Some(match result {
                    None => q,
                    Some(r) => r.lcm(&q),
                });
            }
            let gens = match result {
                None => vec![ring.one()],
                Some(r) if r.is_zero() => Vec::new(),
                Some(r) => vec![ring.from_bigint(&r.abs())],
            };
            Ideal::new(ring.clone(), gens)
        }
        RingKind::Modular(n) => {
            let di = num.principal_gen(); // divisor of n; n itself = zero ideal
            let mut result: Option<BigUint> = None;
            for b in den.generators() {
                let b = b.as_residue();
                if b.is_zero() {
                    continue;
                }
                let q = &di / di.gcd(b);
                result = Some(match result {
                    None => q,
                    Some(r) => {
                        let l = r.lcm(&q);
                        l.gcd(n)
                    }
                });
            }
            let gens = match result {
                None => vec![ring.one()],
                Some(r) => {
                    let r = r % n;
                    if r.is_zero() {
                        Vec::new()
                    } else {
                        vec![ring.from_bigint(&BigInt::from(r))]
                    }
                }
            };
            Ideal::new(ring.clone(), gens)
        }
        RingKind::PolyQuotient { .. } => {
            let (field, _, ring_gb) = ring.poly_context().unwrap();
            let mut num_polys: Vec<Poly> =
                num.generators().iter().map(|g| g.as_poly().clone()).collect();
            num_polys.extend(ring_gb.iter().cloned());
            let mut result: Option<Vec<Poly>> = None;
            for b in den.generators() {
                if b.is_zero() {
                    continue;
                }
                let quotient_gens = poly_colon_principal(&num_polys, b.as_poly(), field)?;
                result = Some(match result {
                    None => quotient_gens,
                    Some(r) => poly_intersect(&r, &quotient_gens, field),
                });
            }
            let gens = match result {
                None => vec![ring.one()],
                Some(polys) => {
                    let mut elems: Vec<RingElem> = Vec::new();
                    for p in polys {
                        let e = ring.from_poly(p);
                        if !e.is_zero() && !elems.contains(&e) {
                            elems.push(e);
                        }
                    }
                    elems
                }
            };
            Ideal::new(ring.clone(), gens)
        }
    }
}

/// `(I : b)` for a single nonzero `b` in a polynomial ring: compute `I ∩ (b)`
/// by elimination, then divide each generator exactly by `b`.
fn poly_colon_principal(i_gens: &[Poly], b: &Poly, field: &crate::poly::CoeffField) -> Result<Vec<Poly>> {
    let inter = poly_intersect(i_gens, std::slice::from_ref(b), field);
    let mut out = Vec::new();
    for g in inter {
        let q = poly_exact_div(&g, b, field)
            .expect("members of I ∩ (b) are divisible by b");
        if !q.is_zero() {
            out.push(q);
        }
    }
    Ok(out)
}

/// Ideal intersection via the standard tag-variable elimination: the t-free
/// part of a Gröbner basis of `t·I + (1-t)·J` under an order where `t`
/// dominates.
fn poly_intersect(i_gens: &[Poly], j_gens: &[Poly], field: &crate::poly::CoeffField) -> Vec<Poly> {
    if i_gens.is_empty() || j_gens.is_empty() {
        return Vec::new();
    }
    let nvars_ext = i_gens[0].nvars + 1;
    let t = Poly::var(nvars_ext, nvars_ext - 1, field);
    let one_minus_t = Poly::one(nvars_ext, field).sub(&t, field, MonomialOrder::ElimLast);
    let mut inputs: Vec<Poly> = Vec::new();
    for g in i_gens {
        let g = g.pad_var().resort(field, MonomialOrder::ElimLast);
        inputs.push(g.mul(&t, field, MonomialOrder::ElimLast));
    }
    for g in j_gens {
        let g = g.pad_var().resort(field, MonomialOrder::ElimLast);
        inputs.push(g.mul(&one_minus_t, field, MonomialOrder::ElimLast));
    }
    let gb = groebner_tracked(&inputs, field, MonomialOrder::ElimLast);
    gb.basis
        .iter()
        .filter(|p| p.degree_in_last() == 0)
        .map(|p| p.unpad_var().resort(field, ORD))
        .collect()
}

/// Equality of ideals by mutual generator membership.
pub fn ideal_equal(ring: &Ring, a: &Ideal, b: &Ideal) -> Result<bool> {
    for g in a.generators() {
        if ideal_membership(ring, b, g)?.is_none() {
            return Ok(false);
        }
    }
    for g in b.generators() {
        if ideal_membership(ring, a, g)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The stabilized saturation `(0 : x^∞)`, detected by ideal equality of
/// successive iterates `(0 : x^k)`.
pub fn annihilator_saturation(ring: &Ring, x: &RingElem) -> Result<Ideal> {
    let zero = Ideal::zero(ring.clone());
    let mut power = x.clone();
    let mut current = ideal_quotient(ring, &zero, &Ideal::principal(&power))?;
    loop {
        power = ring.mul(&power, x)?;
        let next = ideal_quotient(ring, &zero, &Ideal::principal(&power))?;
        if ideal_equal(ring, &current, &next)? {
            return Ok(current);
        }
        current = next;
    }
}

/// The plain annihilator `(0 : x)`.
pub fn annihilator(ring: &Ring, x: &RingElem) -> Result<Ideal> {
    ideal_quotient(ring, &Ideal::zero(ring.clone()), &Ideal::principal(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(ring: &Ring, gens: &[i64]) -> Ideal {
        Ideal::new(ring.clone(), gens.iter().map(|&g| ring.int(g)).collect()).unwrap()
    }

    #[test]
    fn groebner_examples() {
        let qxy = Ring::parse("Q[x,y]").unwrap();
        let i = Ideal::new(
            qxy.clone(),
            vec![
                qxy.parse_elem("x^2 - y").unwrap(),
                qxy.parse_elem("y^2").unwrap(),
            ],
        )
        .unwrap();
        let (basis, transform) = groebner_basis(&qxy, &i).unwrap();
        assert_eq!(basis.generators().len(), 2);
        for (k, b) in basis.generators().iter().enumerate() {
            let mut acc = qxy.zero();
            for (t, g) in transform[k].iter().zip(i.generators()) {
                acc = qxy.add(&acc, &qxy.mul(t, g).unwrap()).unwrap();
            }
            assert_eq!(&acc, b);
        }

        let qx = Ring::parse("Q[x]").unwrap();
        let i = Ideal::new(
            qx.clone(),
            vec![qx.parse_elem("x^2 + x").unwrap(), qx.parse_elem("x^2").unwrap()],
        )
        .unwrap();
        let (basis, transform) = groebner_basis(&qx, &i).unwrap();
        assert_eq!(basis.generators().len(), 1);
        assert_eq!(basis.generators()[0], qx.parse_elem("x").unwrap());
        assert_eq!(transform[0][0], qx.one());
        assert_eq!(transform[0][1], qx.int(-1));

        let (basis, transform) = groebner_basis(&qx, &Ideal::zero(qx.clone())).unwrap();
        assert!(basis.generators().is_empty() && transform.is_empty());
    }

    #[test]
    fn membership_examples() {
        let z = Ring::integers();
        let i = ideal(&z, &[2, 3]);
        let cert = ideal_membership(&z, &i, &z.one()).unwrap().unwrap();
        assert!(verify_membership(&z, &i, &z.one(), &cert));

        let qxy = Ring::parse("Q[x,y]").unwrap();
        let i = Ideal::new(
            qxy.clone(),
            vec![
                qxy.parse_elem("x^2 - y").unwrap(),
                qxy.parse_elem("y^2").unwrap(),
            ],
        )
        .unwrap();
        let f = qxy.parse_elem("x^4").unwrap();
        let cert = ideal_membership(&qxy, &i, &f).unwrap().unwrap();
        assert_eq!(cert.exponent, 1);
        assert!(verify_membership(&qxy, &i, &f, &cert));

        let z6 = Ring::parse("Z/6").unwrap();
        let i = ideal(&z6, &[2]);
        assert!(ideal_membership(&z6, &i, &z6.int(3)).unwrap().is_none());
        // Cross-check by enumerating (2) = {0, 2, 4} in Z/6.
        let members: Vec<i64> = (0..6)
            .filter(|&x| ideal_membership(&z6, &i, &z6.int(x)).unwrap().is_some())
            .collect();
        assert_eq!(members, vec![0, 2, 4]);
    }

    #[test]
    fn radical_membership_examples() {
        let qx = Ring::parse("Q[x]").unwrap();
        let i = Ideal::new(qx.clone(), vec![qx.parse_elem("x^2").unwrap()]).unwrap();
        let x = qx.parse_elem("x").unwrap();
        let cert = radical_membership(&qx, &i, &x).unwrap().unwrap();
        assert_eq!(cert.exponent, 2);
        assert!(verify_membership(&qx, &i, &x, &cert));

        let z = Ring::integers();
        let i = ideal(&z, &[2, 3]);
        let cert = radical_membership(&z, &i, &z.one()).unwrap().unwrap();
        assert_eq!(cert.exponent, 1);
        assert!(verify_membership(&z, &i, &z.one(), &cert));

        let z12 = Ring::parse("Z/12").unwrap();
        let i = ideal(&z12, &[4]);
        let cert = radical_membership(&z12, &i, &z12.int(2)).unwrap().unwrap();
        assert_eq!(cert.exponent, 2);
        assert!(verify_membership(&z12, &i, &z12.int(2), &cert));

        // 2 ∉ √(6) over Z: no power of 2 is divisible by 3.
        let i = ideal(&z, &[6]);
        assert!(radical_membership(&z, &i, &z.int(2)).unwrap().is_none());
    }

    #[test]
    fn quotient_examples() {
        let z6 = Ring::parse("Z/6").unwrap();
        let q = ideal_quotient(&z6, &Ideal::zero(z6.clone()), &ideal(&z6, &[2])).unwrap();
        assert!(ideal_equal(&z6, &q, &ideal(&z6, &[3])).unwrap());

        let z = Ring::integers();
        let q = ideal_quotient(&z, &ideal(&z, &[6]), &ideal(&z, &[2])).unwrap();
        assert!(ideal_equal(&z, &q, &ideal(&z, &[3])).unwrap());

        for ring in [Ring::integers(), Ring::parse("Z/12").unwrap()] {
            let i = ideal(&ring, &[4, 6]);
            let q = ideal_quotient(&ring, &i, &Ideal::unit(&ring)).unwrap();
            assert!(ideal_equal(&ring, &q, &i).unwrap());
        }
    }

    #[test]
    fn quotient_polynomial() {
        // In Q[x,y]: ((x*y) : (y)) = (x).
        let qxy = Ring::parse("Q[x,y]").unwrap();
        let num = Ideal::new(qxy.clone(), vec![qxy.parse_elem("x*y").unwrap()]).unwrap();
        let den = Ideal::new(qxy.clone(), vec![qxy.parse_elem("y").unwrap()]).unwrap();
        let q = ideal_quotient(&qxy, &num, &den).unwrap();
        let expected = Ideal::new(qxy.clone(), vec![qxy.parse_elem("x").unwrap()]).unwrap();
        assert!(ideal_equal(&qxy, &q, &expected).unwrap());
    }

    #[test]
    fn saturation_examples() {
        let z12 = Ring::parse("Z/12").unwrap();
        let s = annihilator_saturation(&z12, &z12.int(3)).unwrap();
        assert!(ideal_equal(&z12, &s, &ideal(&z12, &[4])).unwrap());

        let z4 = Ring::parse("Z/4").unwrap();
        let s = annihilator_saturation(&z4, &z4.int(2)).unwrap();
        assert!(ideal_equal(&z4, &s, &ideal(&z4, &[1])).unwrap());
        // First step is (0:2) = (2), saturation climbs to (1).
        let first = annihilator(&z4, &z4.int(2)).unwrap();
        assert!(ideal_equal(&z4, &first, &ideal(&z4, &[2])).unwrap());

        let z = Ring::integers();
        let s = annihilator_saturation(&z, &z.int(5)).unwrap();
        assert!(ideal_equal(&z, &s, &Ideal::zero(z.clone())).unwrap());
    }

    #[test]
    fn quotient_agrees_with_enumeration_on_finite_rings() {
        for n in 2u64..=60 {
            let ring = Ring::modular_u64(n);
            for (gi, gj, h) in [(0i64, 2, 3), (4, 6, 2), (3, 0, 5)] {
                let i = ideal(&ring, &[gi, gj]);
                let j = ideal(&ring, &[h]);
                let q = ideal_quotient(&ring, &i, &j).unwrap();
                for x in 0..n as i64 {
                    let xe = ring.int(x);
                    let in_q = ideal_membership(&ring, &q, &xe).unwrap().is_some();
                    let belongs = j.generators().iter().all(|b| {
                        let prod = ring.mul(&xe, b).unwrap();
                        ideal_membership(&ring, &i, &prod).unwrap().is_some()
                    });
                    assert_eq!(in_q, belongs, "n={n} I=({gi},{gj}) J=({h}) x={x}");
                }
            }
        }
    }

    #[test]
    fn rabinowitsch_consistency() {
        // f ∈ √I iff 1 ∈ I + (1 - t f) in one more variable.
        let qxy = Ring::parse("Q[x,y]").unwrap();
        let cases = [
            (vec!["x^2 - y", "y^2"], "x", true),
            (vec!["x^2"], "x + 1", false),
            (vec!["x*y"], "x", false),
            (vec!["x^2 + y^2", "x*y"], "x + y", true),
        ];
        for (gens, f, expect) in cases {
            let i = Ideal::new(
                qxy.clone(),
                gens.iter().map(|g| qxy.parse_elem(g).unwrap()).collect(),
            )
            .unwrap();
            let f = qxy.parse_elem(f).unwrap();
            let got = radical_membership(&qxy, &i, &f).unwrap();
            assert_eq!(got.is_some(), expect, "radical membership of {f}");
            if let Some(cert) = got {
                assert!(verify_membership(&qxy, &i, &f, &cert));
            }
        }
    }

    #[test]
    fn membership_in_quotient_ring() {
        // In Q[x,y]/(x^2 - y): y ∈ (x) since y = x·x.
        let r = Ring::parse("Q[x,y]/(x^2 - y)").unwrap();
        let i = Ideal::new(r.clone(), vec![r.generator("x").unwrap()]).unwrap();
        let y = r.generator("y").unwrap();
        let cert = ideal_membership(&r, &i, &y).unwrap().unwrap();
        assert!(verify_membership(&r, &i, &y, &cert));
    }

    #[test]
    fn certificate_record_roundtrip() {
        let z = Ring::integers();
        let i = ideal(&z, &[2, 3]);
        let cert = radical_membership(&z, &i, &z.int(5)).unwrap().unwrap();
        let rec = cert.to_record();
        let json = serde_json::to_string(&rec).unwrap();
        let back: CertificateRecord = serde_json::from_str(&json).unwrap();
        let cert2 = MembershipCertificate::from_record(&z, &back).unwrap();
        assert!(verify_membership(&z, &i, &z.int(5), &cert2));
    }
}
