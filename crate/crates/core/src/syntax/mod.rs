//! Terms, dimension terms and their concrete ASCII syntax.
//!
//! Dimension names and point variables live in separate namespaces: a name
//! in dimension position (after `@`, in `hcom r~>s`, as a tube extent or a
//! `<x>` binder) is a dimension name, everything else is a point variable.

mod parse;
mod print;

use std::fmt;
use std::rc::Rc;

pub use parse::{parse_file, parse_term, Decl, ParseError};

pub type Name = Rc<str>;

/// A dimension term: one of the interval endpoints or a dimension name.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dim {
    Zero,
    One,
    Name(Name),
}

impl Dim {
    pub fn name(n: &str) -> Dim {
        Dim::Name(n.into())
    }

    pub fn as_name(&self) -> Option<&Name> {
        match self {
            Dim::Name(n) => Some(n),
            _ => None,
        }
    }

    pub fn as_side(&self) -> Option<Side> {
        match self {
            Dim::Zero => Some(Side::Zero),
            Dim::One => Some(Side::One),
            Dim::Name(_) => None,
        }
    }

    pub fn is_const(&self) -> bool {
        !matches!(self, Dim::Name(_))
    }
}

impl From<Side> for Dim {
    fn from(side: Side) -> Dim {
        match side {
            Side::Zero => Dim::Zero,
            Side::One => Dim::One,
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Zero => f.write_str("0"),
            Dim::One => f.write_str("1"),
            Dim::Name(n) => f.write_str(n),
        }
    }
}

/// One of the two endpoints of the interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Zero,
    One,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Zero, Side::One];

    pub fn flip(self) -> Side {
        match self {
            Side::Zero => Side::One,
            Side::One => Side::Zero,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Zero => f.write_str("0"),
            Side::One => f.write_str("1"),
        }
    }
}

/// A wall of an open box: on the face `extent = side`, the line `binder. wall`
/// in the fill direction.
///
/// The extent is a [`Dim`] rather than a bare name because substituting an
/// endpoint for it is how a wall gets selected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tube {
    pub extent: Dim,
    pub side: Side,
    pub binder: Name,
    pub wall: Rc<Term>,
}

impl Tube {
    pub fn new(extent: &str, side: Side, binder: &str, wall: Term) -> Tube {
        Tube {
            extent: Dim::name(extent),
            side,
            binder: binder.into(),
            wall: Rc::new(wall),
        }
    }

    pub fn new_dim(extent: Dim, side: Side, binder: &str, wall: Term) -> Tube {
        Tube {
            extent,
            side,
            binder: binder.into(),
            wall: Rc::new(wall),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Var(Name),
    /// `<x> M`
    DimAbs(Name, Rc<Term>),
    /// `M @ r`
    DimApp(Rc<Term>, Dim),
    /// `Id (x. A) M N`; the binder scopes over the family only.
    Id {
        binder: Name,
        family: Rc<Term>,
        left: Rc<Term>,
        right: Rc<Term>,
    },
    HCom {
        ty: Rc<Term>,
        from: Dim,
        to: Dim,
        cap: Rc<Term>,
        tubes: Vec<Tube>,
    },
    Coe {
        binder: Name,
        family: Rc<Term>,
        from: Dim,
        to: Dim,
        arg: Rc<Term>,
    },
    /// Heterogeneous composition; the family binder is the fill direction.
    Com {
        binder: Name,
        family: Rc<Term>,
        from: Dim,
        to: Dim,
        cap: Rc<Term>,
        tubes: Vec<Tube>,
    },
    Univ,
    Pi(Name, Rc<Term>, Rc<Term>),
    Lam(Name, Rc<Term>),
    App(Rc<Term>, Rc<Term>),
}

impl Term {
    pub fn var(n: &str) -> Term {
        Term::Var(n.into())
    }

    pub fn dim_abs(x: &str, body: Term) -> Term {
        Term::DimAbs(x.into(), Rc::new(body))
    }

    pub fn at(self, r: Dim) -> Term {
        Term::DimApp(Rc::new(self), r)
    }

    /// `self @ x` for a dimension name `x`.
    pub fn at_name(self, x: &str) -> Term {
        self.at(Dim::name(x))
    }

    pub fn id(x: &str, family: Term, left: Term, right: Term) -> Term {
        Term::Id {
            binder: x.into(),
            family: Rc::new(family),
            left: Rc::new(left),
            right: Rc::new(right),
        }
    }

    pub fn hcom(ty: Term, from: Dim, to: Dim, cap: Term, tubes: Vec<Tube>) -> Term {
        Term::HCom {
            ty: Rc::new(ty),
            from,
            to,
            cap: Rc::new(cap),
            tubes,
        }
    }

    pub fn coe(x: &str, family: Term, from: Dim, to: Dim, arg: Term) -> Term {
        Term::Coe {
            binder: x.into(),
            family: Rc::new(family),
            from,
            to,
            arg: Rc::new(arg),
        }
    }

    pub fn com(y: &str, family: Term, from: Dim, to: Dim, cap: Term, tubes: Vec<Tube>) -> Term {
        Term::Com {
            binder: y.into(),
            family: Rc::new(family),
            from,
            to,
            cap: Rc::new(cap),
            tubes,
        }
    }

    pub fn pi(v: &str, dom: Term, cod: Term) -> Term {
        Term::Pi(v.into(), Rc::new(dom), Rc::new(cod))
    }

    pub fn lam(v: &str, body: Term) -> Term {
        Term::Lam(v.into(), Rc::new(body))
    }

    pub fn app(self, arg: Term) -> Term {
        Term::App(Rc::new(self), Rc::new(arg))
    }

    /// The head and dimension arguments of an iterated dimension application.
    pub fn strip_dim_apps(&self) -> (&Term, Vec<&Dim>) {
        let mut args = Vec::new();
        let mut head = self;
        while let Term::DimApp(f, r) = head {
            args.push(r);
            head = f;
        }
        args.reverse();
        (head, args)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        print::write_term(f, self)
    }
}
