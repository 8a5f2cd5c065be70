//! The bundle expression language.
//!
//! ```text
//! space  := nat ("," nat)*
//! bundle := term ("+" term)*
//! term   := [nat "*"] atom
//! atom   := "O" "(" int ("," int)* ")"
//!         | "box" "(" factor ("," factor)* ")"
//! factor := "O" "(" int ")"
//!         | "Om" "(" nat "," int ")"          -- Omega^p(t)
//! ```
//!
//! Whitespace is insignificant. The grammar is LL(1) and parsed by recursive
//! descent over a token stream. Printing produces the canonical form: summands
//! in canonical order, equal atoms merged, line-bundle atoms written `O(...)`.

use std::fmt;

use crate::sheaf::{Atom, Bundle, FactorSheaf};
use crate::space::Space;

/// Largest accepted magnitude of an integer literal. Keeps every derived
/// twist, window bound and offset far from `i64` overflow.
pub const MAX_LITERAL: i64 = i32::MAX as i64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagnosticKind {
    /// The text is not in the grammar.
    Syntax,
    /// The text parses but does not describe a valid value on the given space.
    Semantic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDiagnostic {
    pub kind: DiagnosticKind,
    /// Byte offset of the offending token; for errors at end of input, the
    /// offset of the last byte.
    pub offset: usize,
    pub message: String,
    pub expected: Vec<&'static str>,
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.offset, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(" or "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseDiagnostic {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok<'a> {
    Int(&'a str),
    Ident(&'a str),
    LParen,
    RParen,
    Comma,
    Plus,
    Star,
    Minus,
    End,
}

impl Tok<'_> {
    fn describe(&self) -> String {
        match self {
            Tok::Int(s) => format!("integer `{s}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Star => "`*`".into(),
            Tok::Minus => "`-`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok<'a>, usize)>,
    pos: usize,
}

fn lex(src: &str) -> Result<Vec<(Tok<'_>, usize)>, ParseDiagnostic> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b'+' => Tok::Plus,
            b'*' => Tok::Star,
            b'-' => Tok::Minus,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(&src[start..i]), start));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push((Tok::Ident(&src[start..i]), start));
                continue;
            }
            _ => {
                let ch = src[start..].chars().next().unwrap_or('?');
                return Err(ParseDiagnostic {
                    kind: DiagnosticKind::Syntax,
                    offset: start,
                    message: format!("unexpected character `{ch}`"),
                    expected: Vec::new(),
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self, ParseDiagnostic> {
        let toks = lex(src)?;
        if toks.is_empty() {
            return Err(ParseDiagnostic {
                kind: DiagnosticKind::Syntax,
                offset: 0,
                message: "empty input".into(),
                expected: Vec::new(),
            });
        }
        Ok(Self { src, toks, pos: 0 })
    }

    fn peek(&self) -> (Tok<'a>, usize) {
        self.toks
            .get(self.pos)
            .copied()
            .unwrap_or((Tok::End, self.src.len().saturating_sub(1)))
    }

    fn bump(&mut self) -> (Tok<'a>, usize) {
        let t = self.peek();
        self.pos += 1;
        t
    }

    fn error(&self, offset: usize, message: String, expected: &[&'static str]) -> ParseDiagnostic {
        ParseDiagnostic {
            kind: DiagnosticKind::Syntax,
            offset,
            message,
            expected: expected.to_vec(),
        }
    }

    fn semantic(&self, offset: usize, message: String) -> ParseDiagnostic {
        ParseDiagnostic {
            kind: DiagnosticKind::Semantic,
            offset,
            message,
            expected: Vec::new(),
        }
    }

    fn unexpected(&self, expected: &[&'static str]) -> ParseDiagnostic {
        let (tok, at) = self.peek();
        self.error(at, format!("unexpected {}", tok.describe()), expected)
    }

    fn expect(&mut self, want: Tok<'static>, name: &'static str) -> Result<usize, ParseDiagnostic> {
        let (tok, at) = self.peek();
        if std::mem::discriminant(&tok) == std::mem::discriminant(&want) {
            self.pos += 1;
            Ok(at)
        } else {
            Err(self.unexpected(&[name]))
        }
    }

    fn nat(&mut self) -> Result<(u64, usize), ParseDiagnostic> {
        match self.peek() {
            (Tok::Int(s), at) => {
                self.pos += 1;
                let v: u64 = s
                    .parse()
                    .ok()
                    .filter(|&v| v <= MAX_LITERAL as u64)
                    .ok_or_else(|| self.semantic(at, format!("integer `{s}` out of range")))?;
                Ok((v, at))
            }
            _ => Err(self.unexpected(&["natural number"])),
        }
    }

    fn int(&mut self) -> Result<(i64, usize), ParseDiagnostic> {
        let (tok, at) = self.peek();
        let negative = tok == Tok::Minus;
        if negative {
            self.pos += 1;
        }
        match self.peek() {
            (Tok::Int(_), _) => {
                let (v, _) = self.nat()?;
                let v = v as i64;
                Ok((if negative { -v } else { v }, at))
            }
            _ => Err(self.unexpected(&["integer"])),
        }
    }

    fn end(&mut self) -> Result<(), ParseDiagnostic> {
        match self.peek() {
            (Tok::End, _) => Ok(()),
            _ => Err(self.unexpected(&["end of input"])),
        }
    }

    fn space(&mut self) -> Result<Space, ParseDiagnostic> {
        let mut dims = Vec::new();
        loop {
            let (n, at) = self.nat()?;
            if n == 0 {
                return Err(self.semantic(at, "factor dimensions must be at least 1".into()));
            }
            dims.push(n as usize);
            match self.peek().0 {
                Tok::Comma => {
                    self.bump();
                }
                Tok::End => break,
                _ => return Err(self.unexpected(&["`,`", "end of input"])),
            }
        }
        Ok(Space::new(dims).expect("dimensions checked"))
    }

    fn bundle(&mut self, space: &Space) -> Result<Bundle, ParseDiagnostic> {
        let mut summands = Vec::new();
        loop {
            summands.push(self.term(space)?);
            match self.peek().0 {
                Tok::Plus => {
                    self.bump();
                }
                Tok::End => break,
                _ => return Err(self.unexpected(&["`+`", "end of input"])),
            }
        }
        Bundle::new(space.clone(), summands).map_err(|e| self.semantic(0, e.to_string()))
    }

    fn term(&mut self, space: &Space) -> Result<(Atom, u64), ParseDiagnostic> {
        let mult = match self.peek() {
            (Tok::Int(_), _) => {
                let (m, at) = self.nat()?;
                if m == 0 {
                    return Err(self.semantic(at, "multiplicity must be positive".into()));
                }
                self.expect(Tok::Star, "`*`")?;
                m
            }
            _ => 1,
        };
        Ok((self.atom(space)?, mult))
    }

    fn atom(&mut self, space: &Space) -> Result<Atom, ParseDiagnostic> {
        match self.peek() {
            (Tok::Ident("O"), _) => {
                self.bump();
                self.expect(Tok::LParen, "`(`")?;
                let mut factors = vec![FactorSheaf::Line(self.int()?.0)];
                while self.peek().0 == Tok::Comma {
                    self.bump();
                    factors.push(FactorSheaf::Line(self.int()?.0));
                }
                self.close_atom(space, factors)
            }
            (Tok::Ident("box"), _) => {
                self.bump();
                self.expect(Tok::LParen, "`(`")?;
                let mut factors = vec![self.factor(space, 0)?];
                while self.peek().0 == Tok::Comma {
                    self.bump();
                    factors.push(self.factor(space, factors.len())?);
                }
                self.close_atom(space, factors)
            }
            _ => Err(self.unexpected(&["`O`", "`box`", "multiplicity"])),
        }
    }

    fn close_atom(
        &mut self,
        space: &Space,
        factors: Vec<FactorSheaf>,
    ) -> Result<Atom, ParseDiagnostic> {
        let (tok, at) = self.peek();
        if tok != Tok::RParen {
            return Err(self.unexpected(&["`,`", "`)`"]));
        }
        if factors.len() != space.factors() {
            return Err(self.semantic(
                at,
                format!(
                    "atom has {} factors but the space has {}",
                    factors.len(),
                    space.factors()
                ),
            ));
        }
        self.bump();
        Ok(Atom::new(space, factors).expect("arity and powers checked"))
    }

    fn factor(&mut self, space: &Space, slot: usize) -> Result<FactorSheaf, ParseDiagnostic> {
        let n = space.dims().get(slot).copied();
        match self.peek() {
            (Tok::Ident("O"), _) => {
                self.bump();
                self.expect(Tok::LParen, "`(`")?;
                let (a, _) = self.int()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(FactorSheaf::Line(a))
            }
            (Tok::Ident("Om"), _) => {
                self.bump();
                self.expect(Tok::LParen, "`(`")?;
                let (p, at) = self.nat()?;
                self.expect(Tok::Comma, "`,`")?;
                let (t, _) = self.int()?;
                self.expect(Tok::RParen, "`)`")?;
                match n {
                    // Arity is reported once the atom closes.
                    None => Ok(FactorSheaf::Line(t)),
                    Some(n) if p as usize > n => Err(self.semantic(
                        at,
                        format!(
                            "exterior power {p} exceeds dimension {n} of factor {}",
                            slot + 1
                        ),
                    )),
                    Some(n) => Ok(FactorSheaf::diff(n, p as usize, t).expect("power checked")),
                }
            }
            _ => Err(self.unexpected(&["`O`", "`Om`"])),
        }
    }
}

/// Parses `n_1,...,n_s`.
pub fn parse_space(text: &str) -> Result<Space, ParseDiagnostic> {
    let mut p = Parser::new(text)?;
    let space = p.space()?;
    p.end()?;
    Ok(space)
}

/// Parses a sum of atoms on `space`, normalizing `Om(0,t)` and `Om(n,t)` to
/// line bundles.
pub fn parse_bundle(text: &str, space: &Space) -> Result<Bundle, ParseDiagnostic> {
    let mut p = Parser::new(text)?;
    let bundle = p.bundle(space)?;
    p.end()?;
    Ok(bundle)
}

/// Canonical text of an atom.
pub fn format_atom(atom: &Atom) -> String {
    match atom.as_line() {
        Some(a) => format!("O{a}"),
        None => {
            let parts: Vec<String> = atom
                .factors()
                .iter()
                .map(|f| match *f {
                    FactorSheaf::Line(a) => format!("O({a})"),
                    FactorSheaf::Diff { p, t } => format!("Om({p},{t})"),
                })
                .collect();
            format!("box({})", parts.join(","))
        }
    }
}

/// Canonical text of a bundle; `0` for the zero bundle (which has no
/// expression in the language).
pub fn format_bundle(bundle: &Bundle) -> String {
    if bundle.is_empty() {
        return "0".into();
    }
    bundle
        .summands()
        .iter()
        .map(|(a, m)| {
            if *m == 1 {
                format_atom(a)
            } else {
                format!("{m}*{}", format_atom(a))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn format_space(space: &Space) -> String {
    space
        .dims()
        .iter()
        .map(|n| n.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::Multidegree;

    #[test]
    fn space_examples() {
        assert_eq!(parse_space("1,2").unwrap().dims(), &[1, 2]);
        assert_eq!(parse_space(" 3 , 3,3 ").unwrap().dims(), &[3, 3, 3]);
        let e = parse_space("1,0").unwrap_err();
        assert_eq!((e.kind, e.offset), (DiagnosticKind::Semantic, 2));
        assert_eq!(
            parse_space("1,,2").unwrap_err().kind,
            DiagnosticKind::Syntax
        );
        assert_eq!(parse_space("").unwrap_err().offset, 0);
        assert!(parse_space("1,-2").is_err());
    }

    #[test]
    fn bundle_examples() {
        let x = parse_space("1,2").unwrap();
        let e = parse_bundle("O(1,-5) + 2*box(O(0), Om(1,2))", &x).unwrap();
        let omega = Atom::new(
            &x,
            vec![FactorSheaf::Line(0), FactorSheaf::Diff { p: 1, t: 2 }],
        )
        .unwrap();
        let expected = Bundle::new(
            x.clone(),
            [(Atom::line(&Multidegree(vec![1, -5])), 1), (omega, 2)],
        )
        .unwrap();
        assert_eq!(e, expected);

        let e = parse_bundle("box(O(0), Om(2,3))", &x).unwrap();
        assert_eq!(e, Bundle::line(x.clone(), vec![0, 0]).unwrap());

        let err = parse_bundle("O(1)", &x).unwrap_err();
        assert_eq!((err.kind, err.offset), (DiagnosticKind::Semantic, 3));
    }

    #[test]
    fn diagnostics() {
        let x = parse_space("1,2").unwrap();
        let err = parse_bundle("box(O(0), Om(3,1))", &x).unwrap_err();
        assert_eq!((err.kind, err.offset), (DiagnosticKind::Semantic, 13));
        let err = parse_bundle("", &x).unwrap_err();
        assert_eq!(err.message, "empty input");
        let err = parse_bundle("O(1,2) +", &x).unwrap_err();
        assert_eq!(err.kind, DiagnosticKind::Syntax);
        assert_eq!(err.offset, 7);
        let err = parse_bundle("O(1,2) O(0,0)", &x).unwrap_err();
        assert_eq!(err.offset, 7);
        assert!(err.expected.contains(&"`+`"));
        let err = parse_bundle("Q(1,2)", &x).unwrap_err();
        assert_eq!(err.offset, 0);
        let err = parse_bundle("O(1,2) $", &x).unwrap_err();
        assert_eq!(err.offset, 7);
        let err = parse_bundle("0*O(1,2)", &x).unwrap_err();
        assert_eq!(err.kind, DiagnosticKind::Semantic);
        let err = parse_bundle("O(99999999999,0)", &x).unwrap_err();
        assert_eq!(err.kind, DiagnosticKind::Semantic);
    }

    #[test]
    fn canonical_printing() {
        let x = parse_space("1,2").unwrap();
        let e = parse_bundle("box(O(0),Om(1,2)) + O(1,-5) + O( 1 , -5 )", &x).unwrap();
        assert_eq!(format_bundle(&e), "box(O(0),Om(1,2)) + 2*O(1,-5)");
        assert_eq!(parse_bundle(&format_bundle(&e), &x).unwrap(), e);
        assert_eq!(format_bundle(&Bundle::zero(x.clone())), "0");
        assert_eq!(format_space(&x), "1,2");
    }
}
