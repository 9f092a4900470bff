//! Presentations of computable commutative rings and exact element
//! arithmetic with unique normal forms.
//!
//! Supported kinds: `Z`, `Z/n` (any `n >= 1`; the trivial ring is a
//! first-class citizen), and `F[vars]/(relations)` for `F` one of `Q`, `F_p`.
//! Element payloads are canonical: integers, residues in `[0, n)`, or
//! polynomials reduced modulo a fixed grevlex Gröbner basis of the relation
//! ideal, so two elements are equal in the ring iff their payloads are
//! identical.

use crate::bounds::exponent_bound;
use crate::error::{Error, Result};
use crate::numutil::{is_prime, is_squarefree};
use crate::poly::{render, divide, Coeff, CoeffField, MonomialOrder, Poly};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reducedness {
    KnownReduced,
    KnownNonReduced,
    Unknown,
}

#[derive(Debug)]
pub enum RingKind {
    Integers,
    Modular(BigUint),
    PolyQuotient {
        field: CoeffField,
        vars: Vec<String>,
        relations: Vec<Poly>,
        /// Reduced grevlex Gröbner basis of the relation ideal, fixed at
        /// construction; all normal forms reduce against it.
        groebner: Vec<Poly>,
    },
}

#[derive(Debug)]
pub struct RingRepr {
    pub kind: RingKind,
    pub reducedness: Reducedness,
    spec: String,
}

/// A ring presentation. Cheap to clone; equality is structural on the kind.
#[derive(Debug, Clone)]
pub struct Ring(Arc<RingRepr>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        match (&self.0.kind, &other.0.kind) {
            (RingKind::Integers, RingKind::Integers) => true,
            (RingKind::Modular(n), RingKind::Modular(m)) => n == m,
            (
                RingKind::PolyQuotient {
                    field: f1,
                    vars: v1,
                    groebner: g1,
                    ..
                },
                RingKind::PolyQuotient {
                    field: f2,
                    vars: v2,
                    groebner: g2,
                    ..
                },
            ) => f1 == f2 && v1 == v2 && g1 == g2,
            _ => false,
        }
    }
}

impl Eq for Ring {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Int(BigInt),
    Residue(BigUint),
    Poly(Poly),
}

/// An element in canonical normal form, tied to its owning ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElem {
    ring: Ring,
    payload: Payload,
}

const ORD: MonomialOrder = MonomialOrder::Grevlex;

impl Ring {
    /// Parse a ring description: `Z` | `Z/<n>` | `<field>[<vars>]` |
    /// `<field>[<vars>]/(<g1>, ..., <gk>)` with `<field>` in `{Q, F<p>}`.
    pub fn parse(spec: &str) -> Result<Ring> {
        let s = spec.trim();
        if s == "Z" {
            return Ok(Ring::integers());
        }
        if let Some(rest) = s.strip_prefix("Z/") {
            let n: BigUint = rest
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad modulus in {s:?}")))?;
            if n.is_zero() {
                return Err(Error::Parse("modulus must be >= 1".to_string()));
            }
            return Ok(Ring::modular(n));
        }
        let bracket = s
            .find('[')
            .ok_or_else(|| Error::Parse(format!("unrecognized ring {s:?}")))?;
        let field_txt = s[..bracket].trim();
        let field = if field_txt == "Q" {
            CoeffField::Rationals
        } else if let Some(p_txt) = field_txt.strip_prefix('F') {
            let p: BigUint = p_txt
                .trim()
                .parse()
                .map_err(|_| Error::UnsupportedField(field_txt.to_string()))?;
            if !is_prime(&p) {
                return Err(Error::UnsupportedField(format!("F{p} (p not prime)")));
            }
            CoeffField::PrimeField(p)
        } else {
            return Err(Error::UnsupportedField(field_txt.to_string()));
        };
        let close = s
            .find(']')
            .ok_or_else(|| Error::Parse("missing ] in ring spec".to_string()))?;
        let vars: Vec<String> = s[bracket + 1..close]
            .split(',')
            .map(|v| v.trim().to_string())
            .filter(|v| !v.is_empty())
            .collect();
        if vars.is_empty() {
            return Err(Error::Parse("no variables declared".to_string()));
        }
        for v in &vars {
            if !v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                || !v.chars().next().unwrap().is_ascii_alphabetic()
            {
                return Err(Error::Parse(format!("bad variable name {v:?}")));
            }
        }
        let mut sorted = vars.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != vars.len() {
            return Err(Error::Parse("variable names must be distinct".to_string()));
        }
        let tail = s[close + 1..].trim();
        let relations = if tail.is_empty() {
            Vec::new()
        } else {
            let inner = tail
                .strip_prefix('/')
                .map(str::trim)
                .and_then(|t| t.strip_prefix('('))
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| Error::Parse(format!("bad relation list {tail:?}")))?;
            split_top_level(inner)
                .into_iter()
                .map(|g| parse_poly_expr(g.trim(), &field, &vars))
                .collect::<Result<Vec<_>>>()?
        };
        Ok(Ring::poly_quotient(field, vars, relations, spec))
    }

    pub fn integers() -> Ring {
        Ring(Arc::new(RingRepr {
            kind: RingKind::Integers,
            reducedness: Reducedness::KnownReduced,
            spec: "Z".to_string(),
        }))
    }

    pub fn modular(n: BigUint) -> Ring {
        assert!(!n.is_zero(), "modulus must be >= 1");
        let reducedness = if is_squarefree(&n) {
            Reducedness::KnownReduced
        } else {
            Reducedness::KnownNonReduced
        };
        let spec = format!("Z/{n}");
        Ring(Arc::new(RingRepr {
            kind: RingKind::Modular(n),
            reducedness,
            spec,
        }))
    }

    pub fn modular_u64(n: u64) -> Ring {
        Ring::modular(BigUint::from(n))
    }

    fn poly_quotient(field: CoeffField, vars: Vec<String>, relations: Vec<Poly>, spec: &str) -> Ring {
        let groebner = if relations.iter().all(|r| r.is_zero()) {
            Vec::new()
        } else {
            crate::poly::groebner_tracked(&relations, &field, ORD).basis
        };
        let trivial = groebner.iter().any(|g| g.is_constant() && !g.is_zero());
        let reducedness = if trivial || relations.is_empty() {
            // The trivial ring is reduced, and a polynomial ring over a field
            // is a domain.
            Reducedness::KnownReduced
        } else {
            Reducedness::Unknown
        };
        Ring(Arc::new(RingRepr {
            kind: RingKind::PolyQuotient {
                field,
                vars,
                relations,
                groebner,
            },
            reducedness,
            spec: spec.trim().to_string(),
        }))
    }

    /// The same presentation with reducedness asserted by the caller. Only
    /// meaningful for polynomial quotients whose reducedness is undecided;
    /// operations that rely on the assertion re-check what they use of it and
    /// report contradictions instead of trusting silently.
    pub fn assuming_reduced(&self) -> Ring {
        if self.reducedness() == Reducedness::KnownReduced {
            return self.clone();
        }
        let kind = match &self.0.kind {
            RingKind::Integers => RingKind::Integers,
            RingKind::Modular(n) => RingKind::Modular(n.clone()),
            RingKind::PolyQuotient {
                field,
                vars,
                relations,
                groebner,
            } => RingKind::PolyQuotient {
                field: field.clone(),
                vars: vars.clone(),
                relations: relations.clone(),
                groebner: groebner.clone(),
            },
        };
        Ring(Arc::new(RingRepr {
            kind,
            reducedness: Reducedness::KnownReduced,
            spec: self.0.spec.clone(),
        }))
    }

    pub fn kind(&self) -> &RingKind {
        &self.0.kind
    }

    pub fn reducedness(&self) -> Reducedness {
        self.0.reducedness
    }

    pub fn spec_text(&self) -> &str {
        &self.0.spec
    }

    pub fn modulus(&self) -> Option<&BigUint> {
        match &self.0.kind {
            RingKind::Modular(n) => Some(n),
            _ => None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.one() == self.zero()
    }

    pub(crate) fn poly_context(&self) -> Option<(&CoeffField, &[String], &[Poly])> {
        match &self.0.kind {
            RingKind::PolyQuotient {
                field,
                vars,
                groebner,
                ..
            } => Some((field, vars, groebner)),
            _ => None,
        }
    }

    pub fn zero(&self) -> RingElem {
        self.from_bigint(&BigInt::zero())
    }

    pub fn one(&self) -> RingElem {
        self.from_bigint(&BigInt::one())
    }

    pub fn int(&self, n: i64) -> RingElem {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> RingElem {
        let payload = match &self.0.kind {
            RingKind::Integers => Payload::Int(n.clone()),
            RingKind::Modular(m) => {
                let m_int = BigInt::from(m.clone());
                let r = ((n % &m_int) + &m_int) % &m_int;
                Payload::Residue(r.to_biguint().unwrap())
            }
            RingKind::PolyQuotient { field, vars, .. } => {
                let p = Poly::constant(vars.len(), field, field.from_bigint(n));
                Payload::Poly(self.reduce_poly(p))
            }
        };
        RingElem {
            ring: self.clone(),
            payload,
        }
    }

    /// The ring generator with the given name, for polynomial quotients.
    pub fn generator(&self, name: &str) -> Option<RingElem> {
        let (field, vars, _) = self.poly_context()?;
        let idx = vars.iter().position(|v| v == name)?;
        let p = Poly::var(vars.len(), idx, field);
        Some(RingElem {
            ring: self.clone(),
            payload: Payload::Poly(self.reduce_poly(p)),
        })
    }

    /// Parse an element literal in this ring's grammar.
    pub fn parse_elem(&self, text: &str) -> Result<RingElem> {
        match &self.0.kind {
            RingKind::Integers | RingKind::Modular(_) => {
                let n: BigInt = text
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad integer literal {text:?}")))?;
                Ok(self.from_bigint(&n))
            }
            RingKind::PolyQuotient { field, vars, .. } => {
                let p = parse_poly_expr(text, field, vars)?;
                Ok(RingElem {
                    ring: self.clone(),
                    payload: Payload::Poly(self.reduce_poly(p)),
                })
            }
        }
    }

    fn reduce_poly(&self, p: Poly) -> Poly {
        let (field, _, groebner) = self.poly_context().expect("polynomial ring");
        if groebner.is_empty() {
            p
        } else {
            crate::poly::normal_form(&p, groebner, field, ORD)
        }
    }

    pub(crate) fn from_poly(&self, p: Poly) -> RingElem {
        RingElem {
            ring: self.clone(),
            payload: Payload::Poly(self.reduce_poly(p)),
        }
    }

    fn check_same(&self, e: &RingElem) -> Result<()> {
        if *self == e.ring {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }

    pub fn add(&self, a: &RingElem, b: &RingElem) -> Result<RingElem> {
        self.check_same(a)?;
        self.check_same(b)?;
        let payload = match (&self.0.kind, &a.payload, &b.payload) {
            (RingKind::Integers, Payload::Int(x), Payload::Int(y)) => Payload::Int(x + y),
            (RingKind::Modular(n), Payload::Residue(x), Payload::Residue(y)) => {
                Payload::Residue((x + y) % n)
            }
            (RingKind::PolyQuotient { field, .. }, Payload::Poly(x), Payload::Poly(y)) => {
                Payload::Poly(self.reduce_poly(x.add(y, field, ORD)))
            }
            _ => unreachable!("payload mismatch"),
        };
        Ok(RingElem {
            ring: self.clone(),
            payload,
        })
    }

    pub fn neg(&self, a: &RingElem) -> Result<RingElem> {
        self.check_same(a)?;
        let payload = match (&self.0.kind, &a.payload) {
            (RingKind::Integers, Payload::Int(x)) => Payload::Int(-x),
            (RingKind::Modular(n), Payload::Residue(x)) => {
                if x.is_zero() {
                    Payload::Residue(BigUint::zero())
                } else {
                    Payload::Residue(n - x)
                }
            }
            (RingKind::PolyQuotient { field, .. }, Payload::Poly(x)) => {
                Payload::Poly(x.neg(field))
            }
            _ => unreachable!("payload mismatch"),
        };
        Ok(RingElem {
            ring: self.clone(),
            payload,
        })
    }

    pub fn sub(&self, a: &RingElem, b: &RingElem) -> Result<RingElem> {
        let nb = self.neg(b)?;
        self.add(a, &nb)
    }

    pub fn mul(&self, a: &RingElem, b: &RingElem) -> Result<RingElem> {
        self.check_same(a)?;
        self.check_same(b)?;
        let payload = match (&self.0.kind, &a.payload, &b.payload) {
            (RingKind::Integers, Payload::Int(x), Payload::Int(y)) => Payload::Int(x * y),
            (RingKind::Modular(n), Payload::Residue(x), Payload::Residue(y)) => {
                Payload::Residue((x * y) % n)
            }
            (RingKind::PolyQuotient { field, .. }, Payload::Poly(x), Payload::Poly(y)) => {
                Payload::Poly(self.reduce_poly(x.mul(y, field, ORD)))
            }
            _ => unreachable!("payload mismatch"),
        };
        Ok(RingElem {
            ring: self.clone(),
            payload,
        })
    }

    pub fn pow(&self, a: &RingElem, e: u32) -> Result<RingElem> {
        self.check_same(a)?;
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// Least-found exponent `k` with `f^k = 0`, or `None` if `f` is not
    /// nilpotent. Exact for every supported kind: searches up to the
    /// bit-length bound in `Z/n`, and reduces to radical membership in `√(0)`
    /// for polynomial quotients.
    pub fn is_nilpotent(&self, f: &RingElem) -> Option<u32> {
        match (&self.0.kind, &f.payload) {
            (RingKind::Integers, Payload::Int(x)) => x.is_zero().then_some(1),
            (RingKind::Modular(n), Payload::Residue(x)) => {
                let bound = exponent_bound(n);
                let mut pow = BigUint::one() % n;
                for k in 1..=bound {
                    pow = (&pow * x) % n;
                    if pow.is_zero() {
                        return Some(k);
                    }
                }
                None
            }
            (RingKind::PolyQuotient { .. }, Payload::Poly(p)) => {
                if p.is_zero() {
                    return Some(1);
                }
                let zero = crate::ideals::Ideal::new(self.clone(), vec![]).ok()?;
                crate::ideals::radical_membership(self, &zero, f)
                    .ok()
                    .flatten()
                    .map(|cert| cert.exponent)
            }
            _ => unreachable!("payload mismatch"),
        }
    }

    /// All elements of a finite ring.
    pub fn elements(&self) -> Result<Vec<RingElem>> {
        match &self.0.kind {
            RingKind::Modular(n) => {
                let n = n
                    .to_u64()
                    .ok_or_else(|| Error::unsupported("small finite ring", self.spec_text()))?;
                Ok((0..n).map(|i| self.from_bigint(&BigInt::from(i))).collect())
            }
            _ => Err(Error::unsupported("finite ring", self.spec_text())),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.spec)
    }
}

impl RingElem {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn payload(&self) -> &Payload {
        &self.payload
    }

    pub fn is_zero(&self) -> bool {
        match &self.payload {
            Payload::Int(x) => x.is_zero(),
            Payload::Residue(x) => x.is_zero(),
            Payload::Poly(p) => p.is_zero(),
        }
    }

    pub(crate) fn as_int(&self) -> &BigInt {
        match &self.payload {
            Payload::Int(x) => x,
            _ => panic!("not an integer payload"),
        }
    }

    pub(crate) fn as_residue(&self) -> &BigUint {
        match &self.payload {
            Payload::Residue(x) => x,
            _ => panic!("not a residue payload"),
        }
    }

    pub(crate) fn as_poly(&self) -> &Poly {
        match &self.payload {
            Payload::Poly(p) => p,
            _ => panic!("not a polynomial payload"),
        }
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.payload {
            Payload::Int(x) => write!(f, "{x}"),
            Payload::Residue(x) => write!(f, "{x}"),
            Payload::Poly(p) => {
                let (_, vars, _) = self.ring.poly_context().expect("polynomial ring");
                f.write_str(&render(p, vars))
            }
        }
    }
}

/// Split on top-level commas (not inside parentheses).
fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if !s[start..].trim().is_empty() {
        parts.push(&s[start..]);
    }
    parts
}

// ---- polynomial expression parser -----------------------------------------

struct ExprParser<'a> {
    chars: Vec<char>,
    pos: usize,
    field: &'a CoeffField,
    vars: &'a [String],
}

/// Parse `+ - * ^` expressions with integer/rational coefficients over the
/// declared variables.
pub(crate) fn parse_poly_expr(text: &str, field: &CoeffField, vars: &[String]) -> Result<Poly> {
    let mut p = ExprParser {
        chars: text.chars().collect(),
        pos: 0,
        field,
        vars,
    };
    let poly = p.sum()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(Error::Parse(format!(
            "unexpected input at offset {} in {text:?}",
            p.pos
        )));
    }
    Ok(poly)
}

impl<'a> ExprParser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<Poly> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    let rhs = self.product()?;
                    acc = acc.add(&rhs, self.field, ORD);
                }
                Some('-') => {
                    self.pos += 1;
                    let rhs = self.product()?;
                    acc = acc.sub(&rhs, self.field, ORD);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Poly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let rhs = self.power()?;
                    acc = acc.mul(&rhs, self.field, ORD);
                }
                Some('/') => {
                    self.pos += 1;
                    let rhs = self.power()?;
                    if !rhs.is_constant() || rhs.is_zero() {
                        return Err(Error::Parse(
                            "division only by nonzero constants".to_string(),
                        ));
                    }
                    let c = rhs.leading().unwrap().1.clone();
                    acc = acc.scale(&self.field.inv(&c), self.field);
                }
                // Juxtaposition like `2x` or `x y`.
                Some(c) if c.is_ascii_alphabetic() || c == '(' => {
                    let rhs = self.power()?;
                    acc = acc.mul(&rhs, self.field, ORD);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(Error::Parse("expected exponent".to_string()));
            }
            let e: u32 = self.chars[start..self.pos]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| Error::Parse("exponent too large".to_string()))?;
            return Ok(base.pow(e, self.field, ORD));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(Error::Parse("missing )".to_string()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('-') => {
                self.pos += 1;
                let inner = self.power()?;
                Ok(inner.neg(self.field))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = self.chars[start..self.pos]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .unwrap();
                Ok(Poly::constant(
                    self.vars.len(),
                    self.field,
                    self.field.from_bigint(&n),
                ))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let idx = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| Error::UnboundVariable(name.clone()))?;
                Ok(Poly::var(self.vars.len(), idx, self.field))
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Exact division `a / b` when `b` divides `a` in the polynomial ring
/// (coefficient field, so single-divisor division is exact iff membership
/// holds). Used by the ideal quotient computation.
pub(crate) fn poly_exact_div(a: &Poly, b: &Poly, field: &CoeffField) -> Option<Poly> {
    let res = divide(a, std::slice::from_ref(b), field, ORD);
    res.remainder.is_zero().then(|| res.quotients[0].clone())
}
