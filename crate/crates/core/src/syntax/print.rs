use std::fmt::{self, Write};

use super::{Term, Tube};

pub(super) fn write_term(f: &mut fmt::Formatter<'_>, t: &Term) -> fmt::Result {
    loose(f, t)
}

fn loose(f: &mut fmt::Formatter<'_>, t: &Term) -> fmt::Result {
    match t {
        Term::DimAbs(x, body) => {
            write!(f, "<{x}> ")?;
            match &**body {
                Term::DimAbs(..) | Term::Var(_) | Term::Univ => loose(f, body),
                _ => {
                    f.write_char('(')?;
                    loose(f, body)?;
                    f.write_char(')')
                }
            }
        }
        Term::Lam(v, body) => {
            write!(f, "\\{v}. ")?;
            loose(f, body)
        }
        Term::Pi(v, dom, cod) => {
            write!(f, "Pi ({v} : ")?;
            loose(f, dom)?;
            f.write_str(") -> ")?;
            loose(f, cod)
        }
        _ => app(f, t),
    }
}

fn app(f: &mut fmt::Formatter<'_>, t: &Term) -> fmt::Result {
    match t {
        Term::DimApp(head, r) => {
            spine_head(f, head)?;
            write!(f, " @ {r}")
        }
        Term::App(head, arg) => {
            spine_head(f, head)?;
            f.write_char(' ')?;
            atom(f, arg)
        }
        Term::Id {
            binder,
            family,
            left,
            right,
        } => {
            write!(f, "Id ({binder}. ")?;
            loose(f, family)?;
            f.write_str(") ")?;
            atom(f, left)?;
            f.write_char(' ')?;
            atom(f, right)
        }
        Term::HCom {
            ty,
            from,
            to,
            cap,
            tubes,
        } => {
            write!(f, "hcom {from}~>{to} ")?;
            atom(f, ty)?;
            f.write_char(' ')?;
            atom(f, cap)?;
            f.write_char(' ')?;
            tube_list(f, tubes)
        }
        Term::Coe {
            binder,
            family,
            from,
            to,
            arg,
        } => {
            write!(f, "coe {from}~>{to} ({binder}. ")?;
            loose(f, family)?;
            f.write_str(") ")?;
            atom(f, arg)
        }
        Term::Com {
            binder,
            family,
            from,
            to,
            cap,
            tubes,
        } => {
            write!(f, "com {from}~>{to} ({binder}. ")?;
            loose(f, family)?;
            f.write_str(") ")?;
            atom(f, cap)?;
            f.write_char(' ')?;
            tube_list(f, tubes)
        }
        _ => atom(f, t),
    }
}

/// Heads of an application spine: nested spines print flat, every other
/// application-level form gets parenthesised.
fn spine_head(f: &mut fmt::Formatter<'_>, t: &Term) -> fmt::Result {
    match t {
        Term::DimApp(..) | Term::App(..) => app(f, t),
        _ => atom(f, t),
    }
}

fn atom(f: &mut fmt::Formatter<'_>, t: &Term) -> fmt::Result {
    match t {
        Term::Var(n) => f.write_str(n),
        Term::Univ => f.write_char('U'),
        _ => {
            f.write_char('(')?;
            loose(f, t)?;
            f.write_char(')')
        }
    }
}

fn tube_list(f: &mut fmt::Formatter<'_>, tubes: &[Tube]) -> fmt::Result {
    f.write_char('[')?;
    for (i, tube) in tubes.iter().enumerate() {
        if i > 0 {
            f.write_str(" | ")?;
        }
        write!(f, "{}={} {}. ", tube.extent, tube.side, tube.binder)?;
        loose(f, &tube.wall)?;
    }
    f.write_char(']')
}
