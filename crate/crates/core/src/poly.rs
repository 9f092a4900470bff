//! Exact multivariate polynomial arithmetic over `Q` and `F_p`, with the
//! Buchberger algorithm tracking cofactors so that every basis element is
//! expressed over the input generators.

use crate::error::{Error, Result};
use crate::numutil::mod_inverse;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt::Write as _;

/// Coefficient field of a polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CoeffField {
    Rationals,
    /// `F_p` for a prime `p`.
    PrimeField(BigUint),
}

/// A coefficient; which variant is legal is determined by the ambient field.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coeff {
    Rat(BigRational),
    Fp(BigUint),
}

impl CoeffField {
    pub fn zero(&self) -> Coeff {
        match self {
            CoeffField::Rationals => Coeff::Rat(BigRational::zero()),
            CoeffField::PrimeField(_) => Coeff::Fp(BigUint::zero()),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            CoeffField::Rationals => Coeff::Rat(BigRational::one()),
            CoeffField::PrimeField(_) => Coeff::Fp(BigUint::one()),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match self {
            CoeffField::Rationals => Coeff::Rat(BigRational::from(n.clone())),
            CoeffField::PrimeField(p) => {
                let p_int = BigInt::from(p.clone());
                let r = ((n % &p_int) + &p_int) % &p_int;
                Coeff::Fp(r.to_biguint().unwrap())
            }
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (CoeffField::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            (CoeffField::PrimeField(p), Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp((x + y) % p),
            _ => unreachable!("coefficient does not match field"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (CoeffField::Rationals, Coeff::Rat(x)) => Coeff::Rat(-x),
            (CoeffField::PrimeField(p), Coeff::Fp(x)) => {
                if x.is_zero() {
                    Coeff::Fp(BigUint::zero())
                } else {
                    Coeff::Fp(p - x)
                }
            }
            _ => unreachable!("coefficient does not match field"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (CoeffField::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            (CoeffField::PrimeField(p), Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp((x * y) % p),
            _ => unreachable!("coefficient does not match field"),
        }
    }

    pub fn inv(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (CoeffField::Rationals, Coeff::Rat(x)) => {
                assert!(!x.is_zero(), "division by zero");
                Coeff::Rat(x.recip())
            }
            (CoeffField::PrimeField(p), Coeff::Fp(x)) => {
                Coeff::Fp(mod_inverse(x, p).expect("division by zero"))
            }
            _ => unreachable!("coefficient does not match field"),
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rat(x) => x.is_zero(),
            Coeff::Fp(x) => x.is_zero(),
        }
    }
}

pub type Monomial = Vec<u32>;

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn mono_div(a: &Monomial, b: &Monomial) -> Option<Monomial> {
    let mut out = Vec::with_capacity(a.len());
    for (x, y) in a.iter().zip(b) {
        if x < y {
            return None;
        }
        out.push(x - y);
    }
    Some(out)
}

fn mono_lcm(a: &Monomial, b: &Monomial) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn mono_coprime(a: &Monomial, b: &Monomial) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

fn mono_deg(a: &Monomial) -> u64 {
    a.iter().map(|&e| e as u64).sum()
}

/// Monomial orders. `Grevlex` is the fixed order for normal forms; `ElimLast`
/// is a block order making the last variable dominant so that discarding
/// polynomials whose leading term involves it computes elimination ideals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    Grevlex,
    ElimLast,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => grevlex_cmp(a, b),
            MonomialOrder::ElimLast => {
                let (ta, tb) = (*a.last().unwrap_or(&0), *b.last().unwrap_or(&0));
                ta.cmp(&tb).then_with(|| {
                    grevlex_cmp(&a[..a.len() - 1].to_vec(), &b[..b.len() - 1].to_vec())
                })
            }
        }
    }
}

fn grevlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    match mono_deg(a).cmp(&mono_deg(b)) {
        Ordering::Equal => {
            // Same degree: the monomial whose last differing exponent is
            // smaller is the larger one.
            for (x, y) in a.iter().zip(b).rev() {
                match x.cmp(y) {
                    Ordering::Equal => continue,
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
            Ordering::Equal
        }
        other => other,
    }
}

/// A multivariate polynomial: terms sorted descending in the order `ord`
/// passed to each operation. Callers keep the order consistent per
/// computation; normal forms in ring presentations always use grevlex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    pub nvars: usize,
    pub terms: Vec<(Monomial, Coeff)>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, field: &CoeffField, c: Coeff) -> Self {
        if field.is_zero(&c) {
            return Poly::zero(nvars);
        }
        Poly {
            nvars,
            terms: vec![(vec![0; nvars], c)],
        }
    }

    pub fn one(nvars: usize, field: &CoeffField) -> Self {
        Poly::constant(nvars, field, field.one())
    }

    pub fn var(nvars: usize, idx: usize, field: &CoeffField) -> Self {
        let mut m = vec![0; nvars];
        m[idx] = 1;
        Poly {
            nvars,
            terms: vec![(m, field.one())],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && mono_deg(&self.terms[0].0) == 0)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    fn from_unsorted(
        nvars: usize,
        field: &CoeffField,
        mut terms: Vec<(Monomial, Coeff)>,
        ord: MonomialOrder,
    ) -> Self {
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !field.is_zero(c));
        Poly { nvars, terms: out }
    }

    pub fn resort(&self, field: &CoeffField, ord: MonomialOrder) -> Poly {
        Poly::from_unsorted(self.nvars, field, self.terms.clone(), ord)
    }

    pub fn add(&self, other: &Poly, field: &CoeffField, ord: MonomialOrder) -> Poly {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Poly::from_unsorted(self.nvars, field, terms, ord)
    }

    pub fn neg(&self, field: &CoeffField) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Poly, field: &CoeffField, ord: MonomialOrder) -> Poly {
        self.add(&other.neg(field), field, ord)
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff, field: &CoeffField) -> Poly {
        if field.is_zero(c) {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (mono_mul(tm, m), field.mul(tc, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly, field: &CoeffField, ord: MonomialOrder) -> Poly {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push((mono_mul(ma, mb), field.mul(ca, cb)));
            }
        }
        Poly::from_unsorted(self.nvars, field, terms, ord)
    }

    pub fn pow(&self, e: u32, field: &CoeffField, ord: MonomialOrder) -> Poly {
        let mut out = Poly::one(self.nvars, field);
        for _ in 0..e {
            out = out.mul(self, field, ord);
        }
        out
    }

    pub fn scale(&self, c: &Coeff, field: &CoeffField) -> Poly {
        self.mul_term(&vec![0; self.nvars], c, field)
    }

    /// Make the leading coefficient 1. Returns the scaled polynomial.
    pub fn monic(&self, field: &CoeffField) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&field.inv(c), field),
        }
    }

    /// Total degree in the last variable.
    pub fn degree_in_last(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| *m.last().unwrap_or(&0))
            .max()
            .unwrap_or(0)
    }

    /// Add a variable at the end (exponent 0 everywhere).
    pub fn pad_var(&self) -> Poly {
        Poly {
            nvars: self.nvars + 1,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.push(0);
                    (m, c.clone())
                })
                .collect(),
        }
    }

    /// Drop the last variable; all its exponents must be zero.
    pub fn unpad_var(&self) -> Poly {
        Poly {
            nvars: self.nvars - 1,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    debug_assert_eq!(*m.last().unwrap(), 0);
                    (m[..m.len() - 1].to_vec(), c.clone())
                })
                .collect(),
        }
    }

    /// Collect coefficients-by-exponent of the last variable: index `d` holds
    /// the polynomial (in all variables, last exponent zeroed) at `t^d`.
    pub fn coeffs_of_last(&self, field: &CoeffField, ord: MonomialOrder) -> Vec<Poly> {
        let deg = self.degree_in_last() as usize;
        let mut out = vec![Poly::zero(self.nvars); deg + 1];
        for (m, c) in &self.terms {
            let d = *m.last().unwrap() as usize;
            let mut m2 = m.clone();
            *m2.last_mut().unwrap() = 0;
            out[d] = out[d].add(
                &Poly {
                    nvars: self.nvars,
                    terms: vec![(m2, c.clone())],
                },
                field,
                ord,
            );
        }
        out
    }
}

/// Result of multivariate division: `f = sum_i quotients[i]*divisors[i] + remainder`,
/// no remainder term divisible by any divisor's leading term.
pub struct DivisionResult {
    pub quotients: Vec<Poly>,
    pub remainder: Poly,
}

pub fn divide(f: &Poly, divisors: &[Poly], field: &CoeffField, ord: MonomialOrder) -> DivisionResult {
    let nvars = f.nvars;
    let mut quotients = vec![Poly::zero(nvars); divisors.len()];
    let mut remainder: Vec<(Monomial, Coeff)> = Vec::new();
    let mut work = f.clone();
    'outer: while let Some((lm, lc)) = work.leading().map(|(m, c)| (m.clone(), c.clone())) {
        for (i, d) in divisors.iter().enumerate() {
            let Some((dm, dc)) = d.leading() else { continue };
            if let Some(q) = mono_div(&lm, dm) {
                let qc = field.mul(&lc, &field.inv(dc));
                quotients[i] = quotients[i].add(
                    &Poly {
                        nvars,
                        terms: vec![(q.clone(), qc.clone())],
                    },
                    field,
                    ord,
                );
                work = work.sub(&d.mul_term(&q, &qc, field), field, ord);
                continue 'outer;
            }
        }
        // Leading term irreducible: move it to the remainder.
        remainder.push((lm, lc));
        work.terms.remove(0);
    }
    DivisionResult {
        quotients,
        remainder: Poly::from_unsorted(nvars, field, remainder, ord),
    }
}

/// A Gröbner basis with, for each basis element, its cofactor row over the
/// input generators: `basis[k] = sum_i transform[k][i] * input[i]`.
pub struct TrackedBasis {
    pub basis: Vec<Poly>,
    pub transform: Vec<Vec<Poly>>,
}

/// Buchberger with coprimality and chain criteria, pairs processed in sugar
/// order, followed by minimalization and tail reduction. Cofactors are
/// carried through every reduction.
pub fn groebner_tracked(inputs: &[Poly], field: &CoeffField, ord: MonomialOrder) -> TrackedBasis {
    let nvars = inputs.first().map(|p| p.nvars).unwrap_or(0);
    let unit_row = |i: usize, len: usize| -> Vec<Poly> {
        let mut row = vec![Poly::zero(nvars); len];
        row[i] = Poly::one(nvars, field);
        row
    };

    let mut basis: Vec<Poly> = Vec::new();
    let mut rows: Vec<Vec<Poly>> = Vec::new();
    for (i, p) in inputs.iter().enumerate() {
        if !p.is_zero() {
            basis.push(p.clone());
            rows.push(unit_row(i, inputs.len()));
        }
    }

    // Pair queue ordered by sugar degree (degree of the S-polynomial bound).
    let sugar = |i: usize, j: usize, basis: &[Poly]| -> u64 {
        let l = mono_lcm(basis[i].leading().unwrap().0, basis[j].leading().unwrap().0);
        mono_deg(&l)
    };
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }

    while !pairs.is_empty() {
        pairs.sort_by_key(|&(i, j)| std::cmp::Reverse(sugar(i, j, &basis)));
        let (i, j) = pairs.pop().unwrap();
        let (lmi, _) = basis[i].leading().unwrap();
        let (lmj, _) = basis[j].leading().unwrap();
        if mono_coprime(lmi, lmj) {
            continue; // Buchberger's first criterion
        }
        let lcm_ij = mono_lcm(lmi, lmj);
        // Chain criterion: some other basis element divides the lcm and both
        // pairs with it are no longer pending.
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && mono_div(&lcm_ij, basis[k].leading().unwrap().0).is_some()
                && !pairs.contains(&(i.min(k), i.max(k)))
                && !pairs.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }

        let (mi, ci) = basis[i].leading().unwrap();
        let (mj, cj) = basis[j].leading().unwrap();
        let qi = mono_div(&lcm_ij, mi).unwrap();
        let qj = mono_div(&lcm_ij, mj).unwrap();
        let inv_ci = field.inv(ci);
        let inv_cj = field.inv(cj);
        let s = basis[i]
            .mul_term(&qi, &inv_ci, field)
            .sub(&basis[j].mul_term(&qj, &inv_cj, field), field, ord);
        let mut s_row: Vec<Poly> = Vec::with_capacity(inputs.len());
        for t in 0..inputs.len() {
            let a = rows[i][t].mul_term(&qi, &inv_ci, field);
            let b = rows[j][t].mul_term(&qj, &inv_cj, field);
            s_row.push(a.sub(&b, field, ord));
        }

        let (red, red_row) = reduce_tracked(&s, &s_row, &basis, &rows, field, ord);
        if !red.is_zero() {
            for k in 0..basis.len() {
                pairs.push((k, basis.len()));
            }
            basis.push(red);
            rows.push(red_row);
        }
    }

    // Minimalize: drop elements whose leading term is divisible by another's.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i != j && keep[j] && keep[i] {
                let (mi, _) = basis[i].leading().unwrap();
                let (mj, _) = basis[j].leading().unwrap();
                if mono_div(&mi.clone(), mj).is_some() && (mi != mj || j < i) {
                    keep[i] = false;
                }
            }
        }
    }
    let mut min_basis: Vec<Poly> = Vec::new();
    let mut min_rows: Vec<Vec<Poly>> = Vec::new();
    for (k, b) in basis.into_iter().enumerate() {
        if keep[k] {
            min_basis.push(b);
            min_rows.push(rows[k].clone());
        }
    }

    // Tail-reduce each element against the others and normalize monic.
    let mut out_basis = min_basis.clone();
    let mut out_rows = min_rows.clone();
    for k in 0..out_basis.len() {
        let others: Vec<Poly> = out_basis
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, p)| p.clone())
            .collect();
        let other_rows: Vec<Vec<Poly>> = out_rows
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, r)| r.clone())
            .collect();
        let (red, red_row) =
            reduce_tracked(&out_basis[k], &out_rows[k], &others, &other_rows, field, ord);
        let (red, red_row) = if let Some((_, c)) = red.leading() {
            let inv = field.inv(c);
            (
                red.scale(&inv, field),
                red_row.iter().map(|p| p.scale(&inv, field)).collect(),
            )
        } else {
            (red, red_row)
        };
        out_basis[k] = red;
        out_rows[k] = red_row;
    }
    // Deterministic presentation: sort by leading monomial ascending.
    let mut idx: Vec<usize> = (0..out_basis.len()).collect();
    idx.sort_by(|&a, &b| ord.cmp(out_basis[a].leading().unwrap().0, out_basis[b].leading().unwrap().0));
    TrackedBasis {
        basis: idx.iter().map(|&k| out_basis[k].clone()).collect(),
        transform: idx.iter().map(|&k| out_rows[k].clone()).collect(),
    }
}

/// Fully reduce `f` (with cofactor row `f_row` over the original inputs) by
/// `basis`, combining in the reducers' rows.
fn reduce_tracked(
    f: &Poly,
    f_row: &[Poly],
    basis: &[Poly],
    rows: &[Vec<Poly>],
    field: &CoeffField,
    ord: MonomialOrder,
) -> (Poly, Vec<Poly>) {
    let div = divide(f, basis, field, ord);
    let mut row = f_row.to_vec();
    for (k, q) in div.quotients.iter().enumerate() {
        if q.is_zero() {
            continue;
        }
        for t in 0..row.len() {
            let delta = q.mul(&rows[k][t], field, ord);
            row[t] = row[t].sub(&delta, field, ord);
        }
    }
    (div.remainder, row)
}

/// Normal form of `f` modulo an (already computed) Gröbner basis.
pub fn normal_form(f: &Poly, basis: &[Poly], field: &CoeffField, ord: MonomialOrder) -> Poly {
    divide(f, basis, field, ord).remainder
}

/// Express `f` over the inputs of a tracked basis: returns cofactors `c` with
/// `f = sum_i c[i] * input[i]`, or `None` if `f` is not in the ideal.
pub fn express(
    f: &Poly,
    gb: &TrackedBasis,
    n_inputs: usize,
    field: &CoeffField,
    ord: MonomialOrder,
) -> Option<Vec<Poly>> {
    let nvars = f.nvars;
    let div = divide(f, &gb.basis, field, ord);
    if !div.remainder.is_zero() {
        return None;
    }
    let mut out = vec![Poly::zero(nvars); n_inputs];
    for (k, q) in div.quotients.iter().enumerate() {
        if q.is_zero() {
            continue;
        }
        for i in 0..n_inputs {
            let delta = q.mul(&gb.transform[k][i], field, ord);
            out[i] = out[i].add(&delta, field, ord);
        }
    }
    Some(out)
}

/// Render with the given variable names: terms in descending grevlex order,
/// coefficients in lowest terms.
pub fn render(p: &Poly, vars: &[String]) -> String {
    if p.terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms.iter().enumerate() {
        let (neg, mag) = coeff_magnitude(c);
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono_str = render_monomial(m, vars);
        if mono_str.is_empty() {
            out.push_str(&mag);
        } else if mag == "1" {
            out.push_str(&mono_str);
        } else {
            let _ = write!(out, "{}*{}", mag, mono_str);
        }
    }
    out
}

fn coeff_magnitude(c: &Coeff) -> (bool, String) {
    match c {
        Coeff::Rat(r) => {
            let neg = r.is_negative();
            let a = if neg { -r } else { r.clone() };
            if a.is_integer() {
                (neg, a.numer().to_string())
            } else {
                (neg, format!("{}/{}", a.numer(), a.denom()))
            }
        }
        Coeff::Fp(x) => (false, x.to_string()),
    }
}

fn render_monomial(m: &Monomial, vars: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.iter().enumerate() {
        if e == 1 {
            parts.push(vars[i].clone());
        } else if e > 1 {
            parts.push(format!("{}^{}", vars[i], e));
        }
    }
    parts.join("*")
}
