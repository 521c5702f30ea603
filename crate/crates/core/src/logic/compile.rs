//! Bottom-up translation of formulas into automata.
//!
//! Linear atoms are first split into primitive constraints on fresh variables
//! (`#0`, `#1`, ...), which are projected away as soon as they are no longer needed.
//! Every intermediate automaton is minimal.

use super::ast::{Formula, Rel, SeqRef, Term};
use super::base;
use super::store::PredicateStore;
use crate::automata::{BoolOp, MultiTrackDfa, DEFAULT_STATE_CAP};
use crate::error::{Error, Result};

pub struct Compiler<'s> {
    store: &'s PredicateStore,
    fresh: usize,
    cap: usize,
}

enum Piece<'a> {
    Var(&'a str),
    Const(u64),
}

impl<'s> Compiler<'s> {
    pub fn new(store: &'s PredicateStore) -> Self {
        Self::with_cap(store, DEFAULT_STATE_CAP)
    }

    pub fn with_cap(store: &'s PredicateStore, cap: usize) -> Self {
        Compiler {
            store,
            fresh: 0,
            cap,
        }
    }

    fn fresh(&mut self) -> String {
        self.fresh += 1;
        format!("#{}", self.fresh)
    }

    fn combine(&self, op: BoolOp, a: &MultiTrackDfa, b: &MultiTrackDfa) -> Result<MultiTrackDfa> {
        let mut tracks: Vec<String> = a.tracks().iter().chain(b.tracks()).cloned().collect();
        tracks.sort();
        tracks.dedup();
        let a = a.align(&tracks)?;
        let b = b.align(&tracks)?;
        a.product_capped(&b, op, self.cap)
    }

    fn and(&self, a: &MultiTrackDfa, b: &MultiTrackDfa) -> Result<MultiTrackDfa> {
        self.combine(BoolOp::And, a, b)
    }

    fn exists(&self, a: MultiTrackDfa, var: &str) -> Result<MultiTrackDfa> {
        if a.tracks().iter().any(|t| t == var) {
            a.project_capped(var, self.cap)
        } else {
            Ok(a)
        }
    }

    /// Binds the tracks of `a` (in order) to `names`; repeated names are identified through
    /// an equality on a fresh track.
    fn instantiate(&mut self, a: &MultiTrackDfa, names: &[&str]) -> Result<MultiTrackDfa> {
        let mut map = Vec::new();
        let mut repeats = Vec::new();
        for (i, name) in names.iter().enumerate() {
            let target = if names[..i].contains(name) {
                let f = self.fresh();
                repeats.push((f.clone(), name.to_string()));
                f
            } else {
                name.to_string()
            };
            map.push((a.tracks()[i].clone(), target));
        }
        let mut out = a.rename(&map)?;
        for (f, name) in repeats {
            out = self.and(&out, &base::equal(&f, &name)?)?;
            out = self.exists(out, &f)?;
        }
        Ok(out)
    }

    /// Base automaton built with placeholder tracks, then bound to `names`.
    fn base_atom(
        &mut self,
        build: impl FnOnce(&[&str]) -> Result<MultiTrackDfa>,
        names: &[&str],
    ) -> Result<MultiTrackDfa> {
        let placeholders = ["_00", "_01", "_02"];
        let raw = build(&placeholders[..names.len()])?;
        self.instantiate(&raw, names)
    }

    /// Automaton over `vars(term) + {target}` asserting `target = term`.
    fn term_into(&mut self, term: &Term, target: &str) -> Result<MultiTrackDfa> {
        let mut pieces: Vec<Piece> = Vec::new();
        for (v, &c) in &term.coefficients {
            pieces.extend((0..c).map(|_| Piece::Var(v)));
        }
        if term.constant > 0 || pieces.is_empty() {
            pieces.push(Piece::Const(term.constant));
        }
        if pieces.len() == 1 {
            return match pieces[0] {
                Piece::Const(c) => base::constant(target, c),
                Piece::Var(v) if v == target => {
                    MultiTrackDfa::valid_universe(vec![target.to_string()])
                }
                Piece::Var(v) => self.base_atom(|t| base::equal(t[0], t[1]), &[v, target]),
            };
        }
        let mut acc: Option<MultiTrackDfa> = None;
        let mut acc_name = String::new();
        let mut acc_fresh = false;
        let last = pieces.len() - 1;
        for (i, piece) in pieces.iter().enumerate() {
            let (name, fresh_piece, def) = match *piece {
                Piece::Var(v) => (v.to_string(), false, None),
                Piece::Const(c) => {
                    let f = self.fresh();
                    let def = base::constant(&f, c)?;
                    (f, true, Some(def))
                }
            };
            if i == 0 {
                acc = def;
                acc_name = name;
                acc_fresh = fresh_piece;
                continue;
            }
            let out = if i == last {
                target.to_string()
            } else {
                self.fresh()
            };
            let sum = self.base_atom(
                |t| base::adder(t[0], t[1], t[2]),
                &[acc_name.as_str(), name.as_str(), out.as_str()],
            )?;
            let mut step = match acc.take() {
                Some(prev) => self.and(&prev, &sum)?,
                None => sum,
            };
            if let Some(d) = def {
                step = self.and(&step, &d)?;
                step = self.exists(step, &name)?;
            }
            if acc_fresh {
                step = self.exists(step, &acc_name)?;
            }
            acc = Some(step);
            acc_name = out;
            acc_fresh = i != last;
        }
        Ok(acc.expect("at least two pieces"))
    }

    /// A variable naming `term`'s value plus the constraint defining it, if fresh.
    fn name_term(&mut self, term: &Term) -> Result<(String, Option<MultiTrackDfa>)> {
        match term.as_var() {
            Some(v) => Ok((v.to_string(), None)),
            None => {
                let f = self.fresh();
                let c = self.term_into(term, &f)?;
                Ok((f, Some(c)))
            }
        }
    }

    /// Conjoins `defs` onto `a` and projects the fresh variables they define.
    fn close_over(
        &self,
        mut a: MultiTrackDfa,
        defs: Vec<(String, Option<MultiTrackDfa>)>,
    ) -> Result<MultiTrackDfa> {
        for (name, def) in defs {
            if let Some(d) = def {
                a = self.and(&a, &d)?;
                a = self.exists(a, &name)?;
            }
        }
        Ok(a)
    }

    fn compare(&mut self, lhs: &Term, rel: Rel, rhs: &Term) -> Result<MultiTrackDfa> {
        match rel {
            Rel::Eq => {
                if let Some(v) = rhs.as_var() {
                    self.term_into(lhs, v)
                } else if let Some(v) = lhs.as_var() {
                    self.term_into(rhs, v)
                } else {
                    let s = self.fresh();
                    let a = self.term_into(lhs, &s)?;
                    let b = self.term_into(rhs, &s)?;
                    let both = self.and(&a, &b)?;
                    self.exists(both, &s)
                }
            }
            Rel::Ne => self.compare(lhs, Rel::Eq, rhs)?.complement(),
            Rel::Gt => self.compare(rhs, Rel::Lt, lhs),
            Rel::Ge => self.compare(rhs, Rel::Le, lhs),
            Rel::Lt | Rel::Le => {
                let strict = rel == Rel::Lt;
                let (a, da) = self.name_term(lhs)?;
                let (b, db) = self.name_term(rhs)?;
                let core = self.base_atom(|t| base::less(t[0], t[1], strict), &[&a, &b])?;
                self.close_over(core, vec![(a, da), (b, db)])
            }
        }
    }

    fn seq_value(&mut self, seq: &SeqRef, value: u64) -> Result<MultiTrackDfa> {
        let m = self.store.word(&seq.name)?;
        let (x, def) = self.name_term(&seq.index)?;
        let core = base::dfao_value(m, &x, value)?;
        self.close_over(core, vec![(x, def)])
    }

    pub fn compile(&mut self, f: &Formula) -> Result<MultiTrackDfa> {
        match f {
            Formula::Bool(true) => MultiTrackDfa::valid_universe(Vec::new()),
            Formula::Bool(false) => MultiTrackDfa::empty(Vec::new()),
            Formula::Compare(a, rel, b) => self.compare(a, *rel, b),
            Formula::SeqValue { seq, value, equal } => {
                let a = self.seq_value(seq, *value)?;
                if *equal {
                    Ok(a)
                } else {
                    a.complement()
                }
            }
            Formula::SeqCompare { left, right, equal } => {
                let la = self.store.word(&left.name)?.output_alphabet();
                let ra = self.store.word(&right.name)?.output_alphabet();
                let mut acc: Option<MultiTrackDfa> = None;
                for v in la.iter().filter(|v| ra.contains(v)) {
                    let l = self.seq_value(left, *v)?;
                    let r = self.seq_value(right, *v)?;
                    let both = self.and(&l, &r)?;
                    acc = Some(match acc {
                        Some(prev) => self.combine(BoolOp::Or, &prev, &both)?,
                        None => both,
                    });
                }
                let a = match acc {
                    Some(a) => a,
                    None => {
                        // no common output value: never equal
                        let mut vars: Vec<String> = left
                            .index
                            .vars()
                            .chain(right.index.vars())
                            .cloned()
                            .collect();
                        vars.sort();
                        vars.dedup();
                        MultiTrackDfa::empty(vars)?
                    }
                };
                if *equal {
                    Ok(a)
                } else {
                    a.complement()
                }
            }
            Formula::Call { name, args } => {
                let pred = self.store.predicate(name)?.clone();
                if pred.arity() != args.len() {
                    return Err(Error::Arity {
                        name: name.clone(),
                        expected: pred.arity(),
                        got: args.len(),
                    });
                }
                let named: Vec<(String, Option<MultiTrackDfa>)> = args
                    .iter()
                    .map(|t| self.name_term(t))
                    .collect::<Result<_>>()?;
                let names: Vec<&str> = named.iter().map(|(n, _)| n.as_str()).collect();
                let core = self.instantiate(&pred.automaton, &names)?;
                self.close_over(core, named)
            }
            Formula::Not(g) => self.compile(g)?.complement(),
            Formula::Binary(op, a, b) => {
                let a = self.compile(a)?;
                let b = self.compile(b)?;
                self.combine(*op, &a, &b)
            }
            Formula::Exists(v, g) => {
                let a = self.compile(g)?;
                self.exists(a, v)
            }
            Formula::Forall(v, g) => {
                let a = self.compile(g)?.complement()?;
                self.exists(a, v)?.complement()
            }
        }
    }
}

/// Compiles `f` to an automaton over its free variables, in alphabetical track order.
pub fn compile(f: &Formula, store: &PredicateStore) -> Result<MultiTrackDfa> {
    Compiler::with_cap(store, store.cap()).compile(f)
}

/// Decides a closed formula.
pub fn decide(f: &Formula, store: &PredicateStore) -> Result<bool> {
    let free = f.free_vars();
    if !free.is_empty() {
        return Err(Error::FreeVariables(free.into_iter().collect()));
    }
    let a = compile(f, store)?;
    Ok(a.is_accepting(a.initial()))
}
