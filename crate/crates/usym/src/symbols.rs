//! Candidate symbols F: R -> C as small expression trees.
//!
//! The grammar is infix with an `i` literal, `exp()`, `conj()` and `^`;
//! see [`parse_symbol`]. The parser folds aggressively (polynomial sums and
//! products merge, characters multiply into a single `CExp`) so canonical
//! printed forms reparse to structurally identical trees.

use crate::scalar::{cis, Real, C};
use num_complex::Complex;
use thiserror::Error;

/// Expression tree for a symbol F.
///
/// `Poly` coefficients are dense, ascending in degree. `CExp(c, a)` is the
/// character family `c * exp(i a x)` with real frequency `a`. `Affine` is
/// precomposition: `Affine(f, a, b)` evaluates `f(a x + b)`.
#[derive(Debug, Clone, PartialEq)]
pub enum SymbolExpr<T> {
    Const(C<T>),
    Poly(Vec<C<T>>),
    CExp(C<T>, T),
    Conj(Box<SymbolExpr<T>>),
    Sum(Box<SymbolExpr<T>>, Box<SymbolExpr<T>>),
    Prod(Box<SymbolExpr<T>>, Box<SymbolExpr<T>>),
    Pow(Box<SymbolExpr<T>>, u32),
    Affine(Box<SymbolExpr<T>>, T, T),
}

/// Polynomial degree above which the parser stops folding products/powers.
pub const FOLD_DEGREE_CAP: usize = 32;

#[derive(Debug, Error, PartialEq)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("exp() argument at position {pos} must be linear in x with purely imaginary slope")]
    BadExponent { pos: usize },
    #[error("number at position {pos} is not finite")]
    NotFinite { pos: usize },
}

impl<T: Real> SymbolExpr<T> {
    pub fn var() -> Self {
        SymbolExpr::Poly(vec![Complex::new(T::zero(), T::zero()), Complex::new(T::one(), T::zero())])
    }

    pub fn constant(re: f64, im: f64) -> Self {
        SymbolExpr::Const(Complex::new(T::of(re), T::of(im)))
    }

    /// Value of F at the real point x.
    pub fn eval(&self, x: T) -> C<T> {
        match self {
            SymbolExpr::Const(c) => *c,
            SymbolExpr::Poly(coeffs) => {
                let mut acc = Complex::new(T::zero(), T::zero());
                for c in coeffs.iter().rev() {
                    acc = acc * Complex::new(x, T::zero()) + c;
                }
                acc
            }
            SymbolExpr::CExp(c, alpha) => *c * cis(*alpha * x),
            SymbolExpr::Conj(inner) => inner.eval(x).conj(),
            SymbolExpr::Sum(l, r) => l.eval(x) + r.eval(x),
            SymbolExpr::Prod(l, r) => l.eval(x) * r.eval(x),
            SymbolExpr::Pow(inner, n) => inner.eval(x).powu(*n),
            SymbolExpr::Affine(inner, a, b) => inner.eval(*a * x + *b),
        }
    }

    pub fn abs_at(&self, x: T) -> T {
        self.eval(x).norm()
    }

    /// Dense ascending coefficients when F is a polynomial in x, within the
    /// degree cap; `None` for genuinely transcendental trees.
    pub fn to_polynomial(&self) -> Option<Vec<C<T>>> {
        const CAP: usize = 64;
        fn trim<T: Real>(mut v: Vec<C<T>>) -> Vec<C<T>> {
            while v.len() > 1 && v.last().map_or(false, |c| c.norm() == T::zero()) {
                v.pop();
            }
            v
        }
        match self {
            SymbolExpr::Const(c) => Some(vec![*c]),
            SymbolExpr::Poly(coeffs) => Some(trim(coeffs.clone())),
            SymbolExpr::CExp(c, alpha) => {
                if *alpha == T::zero() {
                    Some(vec![*c])
                } else {
                    None
                }
            }
            SymbolExpr::Conj(inner) => {
                let p = inner.to_polynomial()?;
                Some(p.into_iter().map(|c| c.conj()).collect())
            }
            SymbolExpr::Sum(l, r) => {
                let (a, b) = (l.to_polynomial()?, r.to_polynomial()?);
                let n = a.len().max(b.len());
                let mut out = vec![Complex::new(T::zero(), T::zero()); n];
                for (i, c) in a.iter().enumerate() {
                    out[i] = out[i] + c;
                }
                for (i, c) in b.iter().enumerate() {
                    out[i] = out[i] + c;
                }
                Some(trim(out))
            }
            SymbolExpr::Prod(l, r) => {
                let (a, b) = (l.to_polynomial()?, r.to_polynomial()?);
                if a.len() + b.len() > CAP + 1 {
                    return None;
                }
                let mut out = vec![Complex::new(T::zero(), T::zero()); a.len() + b.len() - 1];
                for (i, x) in a.iter().enumerate() {
                    for (j, y) in b.iter().enumerate() {
                        out[i + j] = out[i + j] + x * y;
                    }
                }
                Some(trim(out))
            }
            SymbolExpr::Pow(inner, n) => {
                let base = inner.to_polynomial()?;
                if (base.len() - 1) * (*n as usize) > CAP {
                    return None;
                }
                let mut out = vec![Complex::new(T::one(), T::zero())];
                for _ in 0..*n {
                    let mut next =
                        vec![Complex::new(T::zero(), T::zero()); out.len() + base.len() - 1];
                    for (i, x) in out.iter().enumerate() {
                        for (j, y) in base.iter().enumerate() {
                            next[i + j] = next[i + j] + x * y;
                        }
                    }
                    out = next;
                }
                Some(trim(out))
            }
            SymbolExpr::Affine(inner, a, b) => {
                let p = inner.to_polynomial()?;
                // compose with a x + b by Horner in the affine argument
                let mut out = vec![Complex::new(T::zero(), T::zero())];
                let lin = [Complex::new(*b, T::zero()), Complex::new(*a, T::zero())];
                for c in p.iter().rev() {
                    let mut next = vec![Complex::new(T::zero(), T::zero()); out.len() + 1];
                    for (i, x) in out.iter().enumerate() {
                        for (j, y) in lin.iter().enumerate() {
                            next[i + j] = next[i + j] + x * y;
                        }
                    }
                    next[0] = next[0] + c;
                    out = trim(next);
                }
                Some(out)
            }
        }
    }

    /// Reads the tree as a character `c * exp(i a x)` when it is one.
    pub fn as_character(&self) -> Option<(C<T>, T)> {
        match self {
            SymbolExpr::Const(c) => Some((*c, T::zero())),
            SymbolExpr::CExp(c, alpha) => Some((*c, *alpha)),
            SymbolExpr::Poly(coeffs) => {
                let p = self.to_polynomial()?;
                let _ = coeffs;
                if p.len() == 1 {
                    Some((p[0], T::zero()))
                } else {
                    None
                }
            }
            SymbolExpr::Conj(inner) => {
                let (c, a) = inner.as_character()?;
                Some((c.conj(), -a))
            }
            SymbolExpr::Sum(l, r) => {
                let (cl, al) = l.as_character()?;
                let (cr, ar) = r.as_character()?;
                if cl.norm() == T::zero() {
                    Some((cr, ar))
                } else if cr.norm() == T::zero() {
                    Some((cl, al))
                } else if al == ar {
                    Some((cl + cr, al))
                } else {
                    None
                }
            }
            SymbolExpr::Prod(l, r) => {
                let (cl, al) = l.as_character()?;
                let (cr, ar) = r.as_character()?;
                Some((cl * cr, al + ar))
            }
            SymbolExpr::Pow(inner, n) => {
                let (c, a) = inner.as_character()?;
                Some((c.powu(*n), a * T::of(*n as f64)))
            }
            SymbolExpr::Affine(inner, sa, sb) => {
                let (c, a) = inner.as_character()?;
                Some((c * cis(a * *sb), a * *sa))
            }
        }
    }

    /// Rejects trees with non-finite numeric fields.
    pub fn is_finite(&self) -> bool {
        let fin = |c: &C<T>| c.re.is_finite() && c.im.is_finite();
        match self {
            SymbolExpr::Const(c) => fin(c),
            SymbolExpr::Poly(coeffs) => coeffs.iter().all(fin),
            SymbolExpr::CExp(c, a) => fin(c) && a.is_finite(),
            SymbolExpr::Conj(inner) => inner.is_finite(),
            SymbolExpr::Sum(l, r) | SymbolExpr::Prod(l, r) => l.is_finite() && r.is_finite(),
            SymbolExpr::Pow(inner, _) => inner.is_finite(),
            SymbolExpr::Affine(inner, a, b) => inner.is_finite() && a.is_finite() && b.is_finite(),
        }
    }
}

/// The transforms that preserve universality: conjugate, n-th power,
/// |F|^(2n), scalar multiple, and affine precomposition.
pub fn closure_variants<T: Real>(
    expr: &SymbolExpr<T>,
    n: u32,
    c: C<T>,
    alpha: T,
    beta: T,
) -> Vec<SymbolExpr<T>> {
    assert!(n >= 1);
    let f = || Box::new(expr.clone());
    vec![
        SymbolExpr::Conj(f()),
        SymbolExpr::Pow(f(), n),
        SymbolExpr::Pow(Box::new(SymbolExpr::Prod(f(), Box::new(SymbolExpr::Conj(f())))), n),
        SymbolExpr::Prod(Box::new(SymbolExpr::Const(c)), f()),
        SymbolExpr::Affine(f(), alpha, beta),
    ]
}

// ---------------------------------------------------------------------------
// folding constructors (shared by the parser)
// ---------------------------------------------------------------------------

fn poly_of<T: Real>(e: &SymbolExpr<T>) -> Option<Vec<C<T>>> {
    match e {
        SymbolExpr::Const(c) => Some(vec![*c]),
        SymbolExpr::Poly(p) => Some(p.clone()),
        _ => None,
    }
}

fn mk_poly<T: Real>(mut coeffs: Vec<C<T>>) -> SymbolExpr<T> {
    while coeffs.len() > 1 && coeffs.last().map_or(false, |c| c.norm() == T::zero()) {
        coeffs.pop();
    }
    if coeffs.len() == 1 {
        SymbolExpr::Const(coeffs[0])
    } else {
        SymbolExpr::Poly(coeffs)
    }
}

pub(crate) fn fold_add<T: Real>(l: SymbolExpr<T>, r: SymbolExpr<T>) -> SymbolExpr<T> {
    if let (Some(a), Some(b)) = (poly_of(&l), poly_of(&r)) {
        let n = a.len().max(b.len());
        let mut out = vec![Complex::new(T::zero(), T::zero()); n];
        for (i, c) in a.iter().enumerate() {
            out[i] = out[i] + c;
        }
        for (i, c) in b.iter().enumerate() {
            out[i] = out[i] + c;
        }
        return mk_poly(out);
    }
    SymbolExpr::Sum(Box::new(l), Box::new(r))
}

pub(crate) fn fold_mul<T: Real>(l: SymbolExpr<T>, r: SymbolExpr<T>) -> SymbolExpr<T> {
    match (&l, &r) {
        (SymbolExpr::Const(c), SymbolExpr::CExp(d, a)) => {
            return SymbolExpr::CExp(*c * *d, *a);
        }
        (SymbolExpr::CExp(d, a), SymbolExpr::Const(c)) => {
            return SymbolExpr::CExp(*c * *d, *a);
        }
        (SymbolExpr::CExp(c, a), SymbolExpr::CExp(d, b)) => {
            return SymbolExpr::CExp(*c * *d, *a + *b);
        }
        _ => {}
    }
    if let (Some(a), Some(b)) = (poly_of(&l), poly_of(&r)) {
        if a.len() + b.len() <= FOLD_DEGREE_CAP + 2 {
            let mut out = vec![Complex::new(T::zero(), T::zero()); a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    out[i + j] = out[i + j] + x * y;
                }
            }
            return mk_poly(out);
        }
    }
    SymbolExpr::Prod(Box::new(l), Box::new(r))
}

pub(crate) fn fold_pow<T: Real>(base: SymbolExpr<T>, n: u32) -> SymbolExpr<T> {
    if n == 0 {
        return SymbolExpr::Const(Complex::new(T::one(), T::zero()));
    }
    if n == 1 {
        return base;
    }
    match &base {
        SymbolExpr::Const(c) => return SymbolExpr::Const(c.powu(n)),
        SymbolExpr::CExp(c, a) => return SymbolExpr::CExp(c.powu(n), *a * T::of(n as f64)),
        _ => {}
    }
    if let Some(p) = poly_of(&base) {
        if (p.len() - 1) * n as usize <= FOLD_DEGREE_CAP {
            let mut acc = SymbolExpr::Const(Complex::new(T::one(), T::zero()));
            for _ in 0..n {
                acc = fold_mul(acc, mk_poly(p.clone()));
            }
            return acc;
        }
    }
    SymbolExpr::Pow(Box::new(base), n)
}

// ---------------------------------------------------------------------------
// parser
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64, bool), // value, imaginary suffix
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let ch = bytes[pos] as char;
        match ch {
            ' ' | '\t' | '\n' | '\r' => pos += 1,
            '+' => {
                toks.push((Tok::Plus, pos));
                pos += 1;
            }
            '-' => {
                toks.push((Tok::Minus, pos));
                pos += 1;
            }
            '*' => {
                toks.push((Tok::Star, pos));
                pos += 1;
            }
            '^' => {
                toks.push((Tok::Caret, pos));
                pos += 1;
            }
            '(' => {
                toks.push((Tok::LParen, pos));
                pos += 1;
            }
            ')' => {
                toks.push((Tok::RParen, pos));
                pos += 1;
            }
            '0'..='9' | '.' => {
                let start = pos;
                while pos < bytes.len() {
                    let c = bytes[pos] as char;
                    if c.is_ascii_digit() || c == '.' {
                        pos += 1;
                    } else if (c == 'e' || c == 'E')
                        && pos + 1 < bytes.len()
                        && ((bytes[pos + 1] as char).is_ascii_digit()
                            || ((bytes[pos + 1] as char == '+' || bytes[pos + 1] as char == '-')
                                && pos + 2 < bytes.len()
                                && (bytes[pos + 2] as char).is_ascii_digit()))
                    {
                        pos += 2; // consume 'e' and sign-or-digit
                    } else {
                        break;
                    }
                }
                let lit = &text[start..pos];
                let val: f64 = lit.parse().map_err(|_| ParseError::Syntax {
                    pos: start,
                    msg: format!("bad number literal '{lit}'"),
                })?;
                if !val.is_finite() {
                    return Err(ParseError::NotFinite { pos: start });
                }
                let imag = pos < bytes.len() && bytes[pos] as char == 'i' && {
                    // 'i' suffix only when not starting a longer identifier
                    let next = pos + 1;
                    next >= bytes.len() || !(bytes[next] as char).is_ascii_alphanumeric()
                };
                if imag {
                    pos += 1;
                }
                toks.push((Tok::Num(val, imag), start));
            }
            c if c.is_ascii_alphabetic() => {
                let start = pos;
                while pos < bytes.len() && (bytes[pos] as char).is_ascii_alphanumeric() {
                    pos += 1;
                }
                toks.push((Tok::Ident(text[start..pos].to_string()), start));
            }
            _ => {
                return Err(ParseError::Syntax { pos, msg: format!("unexpected character '{ch}'") })
            }
        }
    }
    Ok(toks)
}

struct Parser<'a, T> {
    toks: &'a [(Tok, usize)],
    idx: usize,
    end: usize,
    _marker: std::marker::PhantomData<T>,
}

impl<'a, T: Real> Parser<'a, T> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map_or(self.end, |(_, p)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(t, _)| t.clone());
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            _ => Err(ParseError::Syntax { pos, msg: format!("expected {what}") }),
        }
    }

    fn expr(&mut self) -> Result<SymbolExpr<T>, ParseError> {
        let neg = matches!(self.peek(), Some(Tok::Minus));
        if neg || matches!(self.peek(), Some(Tok::Plus)) {
            self.bump();
        }
        let mut acc = self.term()?;
        if neg {
            acc = fold_mul(SymbolExpr::Const(Complex::new(-T::one(), T::zero())), acc);
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = fold_add(acc, t);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    let neg_t = fold_mul(SymbolExpr::Const(Complex::new(-T::one(), T::zero())), t);
                    acc = fold_add(acc, neg_t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<SymbolExpr<T>, ParseError> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.bump();
            let f = self.factor()?;
            acc = fold_mul(acc, f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<SymbolExpr<T>, ParseError> {
        let base = self.base()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Some(Tok::Num(v, false)) if v >= 0.0 && v.fract() == 0.0 && v <= u32::MAX as f64 => {
                    Ok(fold_pow(base, v as u32))
                }
                _ => Err(ParseError::Syntax {
                    pos,
                    msg: "exponent must be a nonnegative integer".into(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<SymbolExpr<T>, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Num(v, imag)) => Ok(SymbolExpr::Const(if imag {
                Complex::new(T::zero(), T::of(v))
            } else {
                Complex::new(T::of(v), T::zero())
            })),
            Some(Tok::Ident(name)) => match name.as_str() {
                "x" => Ok(SymbolExpr::var()),
                "i" => Ok(SymbolExpr::Const(Complex::new(T::zero(), T::one()))),
                "exp" => {
                    self.expect(Tok::LParen, "'(' after exp")?;
                    let arg_pos = self.pos();
                    let inner: SymbolExpr<T> = self.expr()?;
                    self.expect(Tok::RParen, "')' closing exp")?;
                    let p = inner
                        .to_polynomial()
                        .ok_or(ParseError::BadExponent { pos: arg_pos })?;
                    if p.len() > 2 {
                        return Err(ParseError::BadExponent { pos: arg_pos });
                    }
                    let c0 = p[0];
                    let c1 = p.get(1).copied().unwrap_or(Complex::new(T::zero(), T::zero()));
                    if c1.re != T::zero() {
                        return Err(ParseError::BadExponent { pos: arg_pos });
                    }
                    let amp = Complex::new(c0.re.exp(), T::zero()) * cis(c0.im);
                    Ok(SymbolExpr::CExp(amp, c1.im))
                }
                "conj" => {
                    self.expect(Tok::LParen, "'(' after conj")?;
                    let inner = self.expr()?;
                    self.expect(Tok::RParen, "')' closing conj")?;
                    match inner {
                        SymbolExpr::Const(c) => Ok(SymbolExpr::Const(c.conj())),
                        other => Ok(SymbolExpr::Conj(Box::new(other))),
                    }
                }
                other => Err(ParseError::Syntax {
                    pos,
                    msg: format!("unknown identifier '{other}'"),
                }),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(ParseError::Syntax { pos, msg: "expected a value".into() }),
        }
    }
}

/// Parses the infix symbol grammar into a folded [`SymbolExpr`].
pub fn parse_symbol<T: Real>(text: &str) -> Result<SymbolExpr<T>, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser::<T> { toks: &toks, idx: 0, end: text.len(), _marker: std::marker::PhantomData };
    let e = p.expr()?;
    if p.idx != toks.len() {
        return Err(ParseError::Syntax { pos: p.pos(), msg: "trailing input".into() });
    }
    if !e.is_finite() {
        return Err(ParseError::NotFinite { pos: 0 });
    }
    Ok(e)
}

// ---------------------------------------------------------------------------
// printer
// ---------------------------------------------------------------------------

fn fmt_real<T: Real>(v: T) -> String {
    let f = v.to_f64().unwrap_or(f64::NAN);
    if f == f.trunc() && f.abs() < 1e15 {
        format!("{}", f as i64)
    } else {
        format!("{f:?}")
    }
}

fn fmt_complex<T: Real>(c: &C<T>) -> String {
    if c.im == T::zero() {
        if c.re < T::zero() {
            format!("(0-{})", fmt_real(-c.re))
        } else {
            fmt_real(c.re)
        }
    } else if c.re == T::zero() {
        if c.im < T::zero() {
            format!("(0-{}i)", fmt_real(-c.im))
        } else {
            format!("{}i", fmt_real(c.im))
        }
    } else {
        let sign = if c.im < T::zero() { "-" } else { "+" };
        let im = if c.im < T::zero() { -c.im } else { c.im };
        let re = if c.re < T::zero() {
            format!("0-{}", fmt_real(-c.re))
        } else {
            fmt_real(c.re)
        };
        format!("({re}{sign}{im}i)", im = fmt_real(im))
    }
}

fn print_with_var<T: Real>(e: &SymbolExpr<T>, var: &str) -> String {
    match e {
        SymbolExpr::Const(c) => fmt_complex(c),
        SymbolExpr::Poly(coeffs) => {
            let mut parts = Vec::new();
            for (k, c) in coeffs.iter().enumerate().rev() {
                if c.norm() == T::zero() {
                    continue;
                }
                let coeff = fmt_complex(c);
                let part = match k {
                    0 => coeff,
                    1 if coeff == "1" => var.to_string(),
                    1 => format!("{coeff}*{var}"),
                    _ if coeff == "1" => format!("{var}^{k}"),
                    _ => format!("{coeff}*{var}^{k}"),
                };
                parts.push(part);
            }
            if parts.is_empty() {
                "0".to_string()
            } else {
                parts.join("+")
            }
        }
        SymbolExpr::CExp(c, alpha) => {
            let arg = if *alpha == T::zero() {
                "0*x".replace('x', var)
            } else {
                format!("{}i*{var}", fmt_real(*alpha))
            };
            if *c == Complex::new(T::one(), T::zero()) {
                format!("exp({arg})")
            } else {
                format!("{}*exp({arg})", fmt_complex(c))
            }
        }
        SymbolExpr::Conj(inner) => format!("conj({})", print_with_var(inner, var)),
        SymbolExpr::Sum(l, r) => {
            let rs = print_with_var(r, var);
            let rs = if matches!(**r, SymbolExpr::Sum(_, _)) {
                format!("({rs})")
            } else {
                rs
            };
            format!("{}+{}", print_with_var(l, var), rs)
        }
        SymbolExpr::Prod(l, r) => {
            let wrap = |e: &SymbolExpr<T>, s: String| {
                if matches!(e, SymbolExpr::Sum(_, _) | SymbolExpr::Poly(_)) {
                    format!("({s})")
                } else {
                    s
                }
            };
            let ls = wrap(l, print_with_var(l, var));
            let rs = wrap(r, print_with_var(r, var));
            format!("{ls}*{rs}")
        }
        SymbolExpr::Pow(inner, n) => format!("({})^{n}", print_with_var(inner, var)),
        SymbolExpr::Affine(inner, a, b) => {
            let sub = format!("({}*{var}+{})", fmt_real(*a), fmt_real(*b));
            print_with_var(inner, &sub)
        }
    }
}

/// Canonical textual form; reparsing yields a structurally equal tree for
/// every grammar-expressible variant (`Affine` prints by substitution and
/// reparses to the composed polynomial instead).
pub fn print_symbol<T: Real>(e: &SymbolExpr<T>) -> String {
    print_with_var(e, "x")
}

impl<T: Real> std::fmt::Display for SymbolExpr<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&print_symbol(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    type S = SymbolExpr<f64>;

    fn c(re: f64, im: f64) -> C<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn eval_fixtures() {
        // constant term of the quadratic family at t = 1
        let f = S::Poly(vec![c(1.0, 0.0), c(0.0, 2.0), c(-1.0, 0.0)]);
        assert_eq!(f.eval(0.0), c(1.0, 0.0));
        // full period of a character
        let g = S::CExp(c(1.0, 0.0), 2.0);
        let v = g.eval(std::f64::consts::PI);
        assert_abs_diff_eq!(v.re, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(v.im, 0.0, epsilon = 1e-14);
        // conjugation identity
        let h = S::Conj(Box::new(S::CExp(c(1.0, 0.0), 1.0)));
        let v = h.eval(std::f64::consts::FRAC_PI_2);
        assert_abs_diff_eq!(v.re, 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(v.im, -1.0, epsilon = 1e-14);
    }

    #[test]
    fn parse_fixtures() {
        assert_eq!(
            parse_symbol::<f64>("x^2+1").unwrap(),
            S::Poly(vec![c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)])
        );
        assert_eq!(parse_symbol::<f64>("exp(2i*x)").unwrap(), S::CExp(c(1.0, 0.0), 2.0));
        let e = parse_symbol::<f64>("conj(x^3)").unwrap();
        assert_eq!(e.eval(2.0), c(8.0, 0.0));
        // the quadratic family with leading minus
        assert_eq!(
            parse_symbol::<f64>("-x^2+2i*x+1.99").unwrap(),
            S::Poly(vec![c(1.99, 0.0), c(0.0, 2.0), c(-1.0, 0.0)])
        );
        assert_eq!(parse_symbol::<f64>("3*exp(2i*x)").unwrap(), S::CExp(c(3.0, 0.0), 2.0));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_symbol::<f64>("x^-2"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_symbol::<f64>("exp(x)"), Err(ParseError::BadExponent { .. })));
        assert!(matches!(parse_symbol::<f64>("exp(i*x^2)"), Err(ParseError::BadExponent { .. })));
        assert!(matches!(parse_symbol::<f64>("y+1"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_symbol::<f64>("(x+1"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn closure_family_shapes() {
        let f = S::var();
        let fam = closure_variants(&f, 2, c(3.0, 0.0), 2.0, 0.0);
        assert_eq!(fam.len(), 5);
        // F^2 at x=3 is 9; |F|^4 at x=-2 is 16; cF at x=1 is 3; affine at x=1 is 2
        assert_eq!(fam[1].eval(3.0), c(9.0, 0.0));
        assert_eq!(fam[2].eval(-2.0), c(16.0, 0.0));
        assert_eq!(fam[3].eval(1.0), c(3.0, 0.0));
        assert_eq!(fam[4].eval(1.0), c(2.0, 0.0));
        assert!(matches!(fam[0], S::Conj(_)));
    }

    #[test]
    fn character_and_polynomial_views() {
        let f = parse_symbol::<f64>("3*exp(2i*x)").unwrap();
        let (amp, alpha) = f.as_character().unwrap();
        assert_eq!((amp, alpha), (c(3.0, 0.0), 2.0));
        assert!(parse_symbol::<f64>("x^2+1").unwrap().as_character().is_none());

        let p = parse_symbol::<f64>("(x+1)*(x-1)").unwrap().to_polynomial().unwrap();
        assert_eq!(p, vec![c(-1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        let aff = S::Affine(Box::new(S::Poly(vec![c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)])), 2.0, 0.0);
        // (2x)^2 + 1
        assert_eq!(aff.to_polynomial().unwrap(), vec![c(1.0, 0.0), c(0.0, 0.0), c(4.0, 0.0)]);
        assert_eq!(aff.eval(1.0), c(5.0, 0.0));
    }

    fn grid() -> Vec<f64> {
        (0..100).map(|k| -5.0 + 0.101 * k as f64).collect()
    }

    #[test]
    fn pow_matches_scalar_power() {
        let f = parse_symbol::<f64>("x^2+2i*x+0.5").unwrap();
        for n in 1..=8u32 {
            let p = S::Pow(Box::new(f.clone()), n);
            for &x in &grid() {
                let lhs = p.eval(x);
                let rhs = f.eval(x).powu(n);
                let scale = rhs.norm().max(1e-30);
                assert!((lhs - rhs).norm() <= 1e-12 * scale, "n={n} x={x}");
            }
        }
    }

    fn arb_canonical() -> impl Strategy<Value = String> {
        prop_oneof![
            Just("x^2+1".to_string()),
            Just("x^2-1".to_string()),
            Just("-x^2+2i*x+1".to_string()),
            Just("3*exp(2i*x)".to_string()),
            Just("exp(-1i*x)".to_string()),
            Just("conj(x^3+2i*x)".to_string()),
            Just("x^2+exp(1i*x)".to_string()),
            Just("(x^2+exp(1i*x))^2".to_string()),
            Just("conj(exp(2i*x))*(x^2+1)".to_string()),
            (0u32..7, 0u32..7).prop_map(|(a, b)| format!("{a}*x^2+{b}i*x+1")),
            (0u32..7, 0u32..7).prop_map(|(a, b)| format!("-{a}*x^2-{b}i*x+1")),
        ]
    }

    proptest! {
        #[test]
        fn print_parse_roundtrip(src in arb_canonical()) {
            let e = parse_symbol::<f64>(&src).unwrap();
            let printed = print_symbol(&e);
            let e2 = parse_symbol::<f64>(&printed).unwrap_or_else(|err| {
                panic!("reparse of '{printed}' failed: {err}")
            });
            prop_assert_eq!(e, e2);
        }

        #[test]
        fn conj_is_pointwise_conjugate(a in -3.0f64..3.0, b in -3.0f64..3.0, x in -8.0f64..8.0) {
            let f = SymbolExpr::<f64>::Sum(
                Box::new(S::Poly(vec![c(a, b), c(0.0, 1.0)])),
                Box::new(S::CExp(c(b, a), 1.5)),
            );
            let lhs = S::Conj(Box::new(f.clone())).eval(x);
            let rhs = f.eval(x).conj();
            prop_assert!((lhs - rhs).norm() < 1e-12);
        }
    }
}
