//! Typing contexts: declared points, definitions and dimension names in scope.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;

use crate::syntax::{Name, Term};

#[derive(Clone, Debug)]
pub struct Entry {
    pub ty: Term,
    /// Body of a definition; `None` for an assumed point.
    pub def: Option<Term>,
}

#[derive(Debug, Default)]
struct Globals {
    entries: Vec<(Name, Entry)>,
    index: HashMap<Name, usize>,
    /// Normal forms of definition bodies, filled lazily by the evaluator.
    normal_defs: RefCell<HashMap<Name, Term>>,
}

impl Clone for Globals {
    fn clone(&self) -> Self {
        Globals {
            entries: self.entries.clone(),
            index: self.index.clone(),
            normal_defs: RefCell::new(self.normal_defs.borrow().clone()),
        }
    }
}

/// A typing context.
///
/// Top-level points and definitions are shared behind an `Rc`; variables
/// bound while checking under a binder live in `locals`.
#[derive(Clone, Debug, Default)]
pub struct Context {
    globals: Rc<Globals>,
    locals: Vec<(Name, Term)>,
    dims: BTreeSet<Name>,
}

impl Context {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declares a point `name : ty`, replacing any earlier entry of that name.
    pub fn declare_point(&mut self, name: &str, ty: Term) {
        self.insert(name.into(), Entry { ty, def: None });
    }

    pub fn define(&mut self, name: &str, term: Term, ty: Term) {
        self.insert(
            name.into(),
            Entry {
                ty,
                def: Some(term),
            },
        );
    }

    fn insert(&mut self, name: Name, entry: Entry) {
        let g = Rc::make_mut(&mut self.globals);
        g.normal_defs.borrow_mut().remove(&name);
        match g.index.get(&name) {
            Some(&i) => g.entries[i].1 = entry,
            None => {
                g.index.insert(name.clone(), g.entries.len());
                g.entries.push((name, entry));
            }
        }
    }

    pub fn declare_dim(&mut self, name: &str) {
        self.dims.insert(name.into());
    }

    pub fn with_dim(&self, name: &str) -> Context {
        let mut c = self.clone();
        c.declare_dim(name);
        c
    }

    pub fn with_local(&self, name: &Name, ty: Term) -> Context {
        let mut c = self.clone();
        c.locals.push((name.clone(), ty));
        c
    }

    /// The same globals with no locals or dimension names.
    pub fn globals_only(&self) -> Context {
        Context {
            globals: self.globals.clone(),
            locals: Vec::new(),
            dims: BTreeSet::new(),
        }
    }

    pub fn has_dim(&self, name: &str) -> bool {
        self.dims.contains(name)
    }

    pub fn dims(&self) -> &BTreeSet<Name> {
        &self.dims
    }

    /// The type of a point variable, local or global.
    pub fn type_of(&self, name: &str) -> Option<&Term> {
        if let Some((_, ty)) = self.locals.iter().rev().find(|(n, _)| &**n == name) {
            return Some(ty);
        }
        self.global(name).map(|e| &e.ty)
    }

    /// The body of a definition, unless shadowed by a local.
    pub fn definition(&self, name: &str) -> Option<&Term> {
        if self.is_local(name) {
            return None;
        }
        self.global(name).and_then(|e| e.def.as_ref())
    }

    pub fn is_local(&self, name: &str) -> bool {
        self.locals.iter().any(|(n, _)| &**n == name)
    }

    pub fn global(&self, name: &str) -> Option<&Entry> {
        self.globals
            .index
            .get(name)
            .map(|&i| &self.globals.entries[i].1)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.is_local(name) || self.globals.index.contains_key(name)
    }

    /// Global entries in declaration order.
    pub fn entries(&self) -> impl Iterator<Item = (&Name, &Entry)> {
        self.globals.entries.iter().map(|(n, e)| (n, e))
    }

    pub(crate) fn cached_normal_def(&self, name: &str) -> Option<Term> {
        self.globals.normal_defs.borrow().get(name).cloned()
    }

    pub(crate) fn cache_normal_def(&self, name: &Name, t: &Term) {
        self.globals
            .normal_defs
            .borrow_mut()
            .insert(name.clone(), t.clone());
    }
}
