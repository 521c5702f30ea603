use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::automata::BoolOp;

/// A linear term: a sum of variables with natural coefficients plus a constant.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Term {
    pub coefficients: BTreeMap<String, u64>,
    pub constant: u64,
}

impl Term {
    pub fn var(name: impl Into<String>) -> Self {
        let mut coefficients = BTreeMap::new();
        coefficients.insert(name.into(), 1);
        Term {
            coefficients,
            constant: 0,
        }
    }

    pub fn constant(c: u64) -> Self {
        Term {
            coefficients: BTreeMap::new(),
            constant: c,
        }
    }

    /// `Some(name)` when the term is exactly one variable.
    pub fn as_var(&self) -> Option<&str> {
        match (self.coefficients.len(), self.constant) {
            (1, 0) => {
                let (name, &c) = self.coefficients.iter().next().unwrap();
                (c == 1).then_some(name.as_str())
            }
            _ => None,
        }
    }

    pub fn checked_add(mut self, other: Term) -> Option<Term> {
        for (v, c) in other.coefficients {
            let e = self.coefficients.entry(v).or_insert(0);
            *e = e.checked_add(c)?;
        }
        self.constant = self.constant.checked_add(other.constant)?;
        Some(self)
    }

    pub fn scale(mut self, k: u64) -> Option<Term> {
        for c in self.coefficients.values_mut() {
            *c = c.checked_mul(k)?;
        }
        self.coefficients.retain(|_, c| *c > 0);
        self.constant = self.constant.checked_mul(k)?;
        Some(self)
    }

    pub fn vars(&self) -> impl Iterator<Item = &String> {
        self.coefficients.keys()
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .coefficients
            .iter()
            .map(|(v, &c)| {
                if c == 1 {
                    v.clone()
                } else {
                    format!("{c}*{v}")
                }
            })
            .collect();
        if self.constant > 0 || parts.is_empty() {
            parts.push(self.constant.to_string());
        }
        write!(f, "{}", parts.join("+"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rel {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

impl Rel {
    pub fn holds(self, a: u64, b: u64) -> bool {
        match self {
            Rel::Eq => a == b,
            Rel::Ne => a != b,
            Rel::Lt => a < b,
            Rel::Le => a <= b,
            Rel::Gt => a > b,
            Rel::Ge => a >= b,
        }
    }
}

/// `NAME[index]`: the value of a stored DFAO at a term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqRef {
    pub name: String,
    pub index: Term,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    Bool(bool),
    Compare(Term, Rel, Term),
    /// `NAME[t] = @value`, or `!=` when `equal` is false.
    SeqValue {
        seq: SeqRef,
        value: u64,
        equal: bool,
    },
    /// `NAME[t] = NAME2[u]`, or `!=` when `equal` is false.
    SeqCompare {
        left: SeqRef,
        right: SeqRef,
        equal: bool,
    },
    Call {
        name: String,
        args: Vec<Term>,
    },
    Not(Box<Formula>),
    Binary(BoolOp, Box<Formula>, Box<Formula>),
    Exists(String, Box<Formula>),
    Forall(String, Box<Formula>),
}

impl Formula {
    pub fn negate(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn binary(op: BoolOp, a: Formula, b: Formula) -> Formula {
        Formula::Binary(op, Box::new(a), Box::new(b))
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        let mut add_term = |t: &Term, bound: &Vec<String>| {
            for v in t.vars() {
                if !bound.contains(v) {
                    out.insert(v.clone());
                }
            }
        };
        match self {
            Formula::Bool(_) => {}
            Formula::Compare(a, _, b) => {
                add_term(a, bound);
                add_term(b, bound);
            }
            Formula::SeqValue { seq, .. } => add_term(&seq.index, bound),
            Formula::SeqCompare { left, right, .. } => {
                add_term(&left.index, bound);
                add_term(&right.index, bound);
            }
            Formula::Call { args, .. } => args.iter().for_each(|t| add_term(t, bound)),
            Formula::Not(f) => f.collect_free(bound, out),
            Formula::Binary(_, a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Exists(v, f) | Formula::Forall(v, f) => {
                bound.push(v.clone());
                f.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// Every variable bound by some quantifier, with multiplicity.
    pub(crate) fn bound_vars(&self, out: &mut Vec<String>) {
        match self {
            Formula::Not(f) => f.bound_vars(out),
            Formula::Binary(_, a, b) => {
                a.bound_vars(out);
                b.bound_vars(out);
            }
            Formula::Exists(v, f) | Formula::Forall(v, f) => {
                out.push(v.clone());
                f.bound_vars(out);
            }
            _ => {}
        }
    }
}
