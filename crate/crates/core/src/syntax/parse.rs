use std::rc::Rc;

use thiserror::Error;

use super::{Dim, Name, Side, Term, Tube};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: duplicate tube {extent}={side}")]
    DuplicateTube {
        line: usize,
        col: usize,
        extent: Dim,
        side: Side,
    },
}

/// A top-level declaration of a `.cube` file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decl {
    Point { name: Name, ty: Term },
    Dim { name: Name },
    Def { name: Name, term: Term, ty: Term },
    Check { term: Term, ty: Term },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(Name),
    Zero,
    One,
    LAngle,
    RAngle,
    LParen,
    RParen,
    LBrack,
    RBrack,
    At,
    Dot,
    Colon,
    Eq,
    Bar,
    Squiggle,
    Arrow,
    Backslash,
    Eof,
}

const KEYWORDS: &[&str] = &[
    "hcom", "coe", "com", "Id", "U", "Pi", "point", "dim", "def", "check",
];

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn bump(&mut self) -> u8 {
        let c = self.src[self.pos];
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        c
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn peek2(&self) -> Option<u8> {
        self.src.get(self.pos + 1).copied()
    }

    fn tokens(mut self) -> Result<Vec<Spanned>, ParseError> {
        let mut out = Vec::new();
        loop {
            // whitespace and `--` comments
            while let Some(c) = self.peek() {
                if c.is_ascii_whitespace() {
                    self.bump();
                } else if c == b'-' && self.peek2() == Some(b'-') {
                    while self.peek().is_some_and(|c| c != b'\n') {
                        self.bump();
                    }
                } else {
                    break;
                }
            }
            let (line, col) = (self.line, self.col);
            let Some(c) = self.peek() else {
                out.push(Spanned {
                    tok: Tok::Eof,
                    line,
                    col,
                });
                return Ok(out);
            };
            let tok = match c {
                b'<' => {
                    self.bump();
                    Tok::LAngle
                }
                b'>' => {
                    self.bump();
                    Tok::RAngle
                }
                b'(' => {
                    self.bump();
                    Tok::LParen
                }
                b')' => {
                    self.bump();
                    Tok::RParen
                }
                b'[' => {
                    self.bump();
                    Tok::LBrack
                }
                b']' => {
                    self.bump();
                    Tok::RBrack
                }
                b'@' => {
                    self.bump();
                    Tok::At
                }
                b'.' => {
                    self.bump();
                    Tok::Dot
                }
                b':' => {
                    self.bump();
                    Tok::Colon
                }
                b'=' => {
                    self.bump();
                    Tok::Eq
                }
                b'|' => {
                    self.bump();
                    Tok::Bar
                }
                b'\\' => {
                    self.bump();
                    Tok::Backslash
                }
                b'~' if self.peek2() == Some(b'>') => {
                    self.bump();
                    self.bump();
                    Tok::Squiggle
                }
                b'-' if self.peek2() == Some(b'>') => {
                    self.bump();
                    self.bump();
                    Tok::Arrow
                }
                b'0' if !self.ident_continues_at(1) => {
                    self.bump();
                    Tok::Zero
                }
                b'1' if !self.ident_continues_at(1) => {
                    self.bump();
                    Tok::One
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    let start = self.pos;
                    while self
                        .peek()
                        .is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_' || c == b'\'')
                    {
                        self.bump();
                    }
                    let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                    Tok::Ident(s.into())
                }
                other => {
                    return Err(ParseError::Syntax {
                        line,
                        col,
                        msg: format!("unexpected character {:?}", other as char),
                    })
                }
            };
            out.push(Spanned { tok, line, col });
        }
    }

    fn ident_continues_at(&self, off: usize) -> bool {
        self.src
            .get(self.pos + off)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
    }
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> PResult<T> {
        let s = &self.toks[self.pos];
        Err(ParseError::Syntax {
            line: s.line,
            col: s.col,
            msg: msg.into(),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> PResult<()> {
        if *self.peek() == tok {
            self.next();
            Ok(())
        } else {
            self.err(format!("expected {what}, found {:?}", self.peek()))
        }
    }

    fn is_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(n) if &**n == kw)
    }

    fn ident(&mut self) -> PResult<Name> {
        match self.peek().clone() {
            Tok::Ident(n) if !KEYWORDS.contains(&&*n) => {
                self.next();
                Ok(n)
            }
            other => self.err(format!("expected identifier, found {other:?}")),
        }
    }

    fn dim(&mut self) -> PResult<Dim> {
        match self.peek().clone() {
            Tok::Zero => {
                self.next();
                Ok(Dim::Zero)
            }
            Tok::One => {
                self.next();
                Ok(Dim::One)
            }
            _ => Ok(Dim::Name(self.ident()?)),
        }
    }

    fn side(&mut self) -> PResult<Side> {
        match self.next() {
            Tok::Zero => Ok(Side::Zero),
            Tok::One => Ok(Side::One),
            other => {
                self.pos -= 1;
                self.err(format!("expected 0 or 1, found {other:?}"))
            }
        }
    }

    fn term(&mut self) -> PResult<Term> {
        match self.peek() {
            Tok::LAngle => {
                self.next();
                let x = self.ident()?;
                self.expect(Tok::RAngle, "`>`")?;
                let body = self.term()?;
                Ok(Term::DimAbs(x, Rc::new(body)))
            }
            Tok::Backslash => {
                self.next();
                let v = self.ident()?;
                self.expect(Tok::Dot, "`.`")?;
                let body = self.term()?;
                Ok(Term::Lam(v, Rc::new(body)))
            }
            _ if self.is_keyword("Pi") => {
                self.next();
                self.expect(Tok::LParen, "`(`")?;
                let v = self.ident()?;
                self.expect(Tok::Colon, "`:`")?;
                let dom = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                self.expect(Tok::Arrow, "`->`")?;
                let cod = self.term()?;
                Ok(Term::Pi(v, Rc::new(dom), Rc::new(cod)))
            }
            _ => self.spine(),
        }
    }

    fn spine(&mut self) -> PResult<Term> {
        let mut head = self.spine_head()?;
        loop {
            if *self.peek() == Tok::At {
                self.next();
                let r = self.dim()?;
                head = Term::DimApp(Rc::new(head), r);
            } else if self.starts_atom() {
                let arg = self.atom()?;
                head = Term::App(Rc::new(head), Rc::new(arg));
            } else {
                return Ok(head);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        match self.peek() {
            Tok::LParen => true,
            Tok::Ident(n) => &**n == "U" || !KEYWORDS.contains(&&**n),
            _ => false,
        }
    }

    fn family(&mut self) -> PResult<(Name, Term)> {
        self.expect(Tok::LParen, "`(`")?;
        let x = self.ident()?;
        self.expect(Tok::Dot, "`.`")?;
        let fam = self.term()?;
        self.expect(Tok::RParen, "`)`")?;
        Ok((x, fam))
    }

    fn endpoints(&mut self) -> PResult<(Dim, Dim)> {
        let r = self.dim()?;
        self.expect(Tok::Squiggle, "`~>`")?;
        let s = self.dim()?;
        Ok((r, s))
    }

    fn spine_head(&mut self) -> PResult<Term> {
        if self.is_keyword("Id") {
            self.next();
            let (x, family) = self.family()?;
            let left = self.atom()?;
            let right = self.atom()?;
            return Ok(Term::Id {
                binder: x,
                family: Rc::new(family),
                left: Rc::new(left),
                right: Rc::new(right),
            });
        }
        if self.is_keyword("hcom") {
            self.next();
            let (from, to) = self.endpoints()?;
            let ty = self.atom()?;
            let cap = self.atom()?;
            let tubes = self.tubes()?;
            return Ok(Term::HCom {
                ty: Rc::new(ty),
                from,
                to,
                cap: Rc::new(cap),
                tubes,
            });
        }
        if self.is_keyword("coe") {
            self.next();
            let (from, to) = self.endpoints()?;
            let (x, family) = self.family()?;
            let arg = self.atom()?;
            return Ok(Term::Coe {
                binder: x,
                family: Rc::new(family),
                from,
                to,
                arg: Rc::new(arg),
            });
        }
        if self.is_keyword("com") {
            self.next();
            let (from, to) = self.endpoints()?;
            let (y, family) = self.family()?;
            let cap = self.atom()?;
            let tubes = self.tubes()?;
            return Ok(Term::Com {
                binder: y,
                family: Rc::new(family),
                from,
                to,
                cap: Rc::new(cap),
                tubes,
            });
        }
        self.atom()
    }

    fn atom(&mut self) -> PResult<Term> {
        match self.peek().clone() {
            Tok::LParen => {
                self.next();
                let t = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            Tok::Ident(n) if &*n == "U" => {
                self.next();
                Ok(Term::Univ)
            }
            _ => Ok(Term::Var(self.ident()?)),
        }
    }

    fn tubes(&mut self) -> PResult<Vec<Tube>> {
        self.expect(Tok::LBrack, "`[`")?;
        let mut tubes: Vec<Tube> = Vec::new();
        if *self.peek() == Tok::RBrack {
            self.next();
            return Ok(tubes);
        }
        loop {
            let at = self.toks[self.pos].clone();
            let extent = self.dim()?;
            self.expect(Tok::Eq, "`=`")?;
            let side = self.side()?;
            let binder = self.ident()?;
            self.expect(Tok::Dot, "`.`")?;
            let wall = self.term()?;
            if tubes.iter().any(|t| t.extent == extent && t.side == side) {
                return Err(ParseError::DuplicateTube {
                    line: at.line,
                    col: at.col,
                    extent,
                    side,
                });
            }
            tubes.push(Tube {
                extent,
                side,
                binder,
                wall: Rc::new(wall),
            });
            match self.next() {
                Tok::Bar => continue,
                Tok::RBrack => return Ok(tubes),
                other => {
                    self.pos -= 1;
                    return self.err(format!("expected `|` or `]`, found {other:?}"));
                }
            }
        }
    }

    fn decl(&mut self) -> PResult<Decl> {
        if self.is_keyword("point") {
            self.next();
            let name = self.ident()?;
            self.expect(Tok::Colon, "`:`")?;
            let ty = self.term()?;
            Ok(Decl::Point { name, ty })
        } else if self.is_keyword("dim") {
            self.next();
            Ok(Decl::Dim { name: self.ident()? })
        } else if self.is_keyword("def") {
            self.next();
            let name = self.ident()?;
            self.expect(Tok::Eq, "`=`")?;
            let term = self.term()?;
            self.expect(Tok::Colon, "`:`")?;
            let ty = self.term()?;
            Ok(Decl::Def { name, term, ty })
        } else if self.is_keyword("check") {
            self.next();
            let term = self.term()?;
            self.expect(Tok::Colon, "`:`")?;
            let ty = self.term()?;
            Ok(Decl::Check { term, ty })
        } else {
            self.err(format!(
                "expected `point`, `dim`, `def` or `check`, found {:?}",
                self.peek()
            ))
        }
    }
}

fn parser(src: &str) -> PResult<Parser> {
    Ok(Parser {
        toks: Lexer::new(src).tokens()?,
        pos: 0,
    })
}

/// Parses a single term, rejecting trailing input.
pub fn parse_term(src: &str) -> Result<Term, ParseError> {
    let mut p = parser(src)?;
    let t = p.term()?;
    if *p.peek() != Tok::Eof {
        return p.err(format!("unexpected trailing {:?}", p.peek()));
    }
    Ok(t)
}

/// Parses a whole `.cube` file into its declarations.
pub fn parse_file(src: &str) -> Result<Vec<Decl>, ParseError> {
    let mut p = parser(src)?;
    let mut decls = Vec::new();
    while *p.peek() != Tok::Eof {
        decls.push(p.decl()?);
    }
    Ok(decls)
}
