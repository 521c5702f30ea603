//! Recursive-descent parser for predicate text such as
//! `?msd_fib At,u (t>=i & t<i+n & i+u=t+j) => FTM[t]=FTM[u]`.
//!
//! Precedence from loosest: quantifier bodies (extend as far right as possible),
//! `<=>`, `=>` (right associative), `^`, `|`, `&`, `~`.

use super::ast::{Formula, Rel, SeqRef, Term};
use crate::automata::{BoolOp, NUMERATION_TAG};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Var(String),
    Name(String),
    Num(u64),
    Call(String),
    At(u64),
    Quant(bool, String),
    Directive(String),
    And,
    Or,
    Xor,
    Not,
    Implies,
    Iff,
    Rel(Rel),
    Plus,
    Star,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

fn syntax(pos: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        pos,
        message: message.into(),
    }
}

fn ident_end(b: &[u8], mut i: usize) -> usize {
    while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
        i += 1;
    }
    i
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let b = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let two = if i + 1 < b.len() {
            &b[i..i + 2]
        } else {
            &b[i..]
        };
        let tok = match c {
            b'&' => {
                i += 1;
                Tok::And
            }
            b'|' => {
                i += 1;
                Tok::Or
            }
            b'^' => {
                i += 1;
                Tok::Xor
            }
            b'~' => {
                i += 1;
                Tok::Not
            }
            b'+' => {
                i += 1;
                Tok::Plus
            }
            b'*' => {
                i += 1;
                Tok::Star
            }
            b'(' => {
                i += 1;
                Tok::LParen
            }
            b')' => {
                i += 1;
                Tok::RParen
            }
            b'[' => {
                i += 1;
                Tok::LBracket
            }
            b']' => {
                i += 1;
                Tok::RBracket
            }
            b',' => {
                i += 1;
                Tok::Comma
            }
            b'=' if two == b"=>" => {
                i += 2;
                Tok::Implies
            }
            b'=' => {
                i += 1;
                Tok::Rel(Rel::Eq)
            }
            b'!' if two == b"!=" => {
                i += 2;
                Tok::Rel(Rel::Ne)
            }
            b'<' if b[i..].starts_with(b"<=>") => {
                i += 3;
                Tok::Iff
            }
            b'<' if two == b"<=" => {
                i += 2;
                Tok::Rel(Rel::Le)
            }
            b'<' => {
                i += 1;
                Tok::Rel(Rel::Lt)
            }
            b'>' if two == b">=" => {
                i += 2;
                Tok::Rel(Rel::Ge)
            }
            b'>' => {
                i += 1;
                Tok::Rel(Rel::Gt)
            }
            b'0'..=b'9' => {
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                Tok::Num(parse_num(&text[start..i], start)?)
            }
            b'@' => {
                i += 1;
                let s = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                if s == i {
                    return Err(syntax(start, "`@` must be followed by a natural literal"));
                }
                Tok::At(parse_num(&text[s..i], s)?)
            }
            b'$' => {
                i = ident_end(b, i + 1);
                if i == start + 1 {
                    return Err(syntax(start, "`$` must be followed by a predicate name"));
                }
                Tok::Call(text[start + 1..i].to_string())
            }
            b'?' => {
                i = ident_end(b, i + 1);
                Tok::Directive(text[start + 1..i].to_string())
            }
            b'A' | b'E' if i + 1 < b.len() && b[i + 1].is_ascii_lowercase() => {
                i = ident_end(b, i + 1);
                Tok::Quant(c == b'A', text[start + 1..i].to_string())
            }
            b'a'..=b'z' => {
                i = ident_end(b, i);
                Tok::Var(text[start..i].to_string())
            }
            b'A'..=b'Z' => {
                i = ident_end(b, i);
                Tok::Name(text[start..i].to_string())
            }
            other => {
                return Err(syntax(
                    start,
                    format!("unexpected character `{}`", other as char),
                ))
            }
        };
        out.push((tok, start));
    }
    Ok(out)
}

fn parse_num(s: &str, pos: usize) -> Result<u64> {
    s.parse()
        .map_err(|_| syntax(pos, format!("literal `{s}` does not fit in 64 bits")))
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |&(_, p)| p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(syntax(self.offset(), format!("expected {what}")))
        }
    }

    fn formula(&mut self) -> Result<Formula> {
        let mut lhs = self.implies()?;
        while self.eat(&Tok::Iff) {
            let rhs = self.implies()?;
            lhs = Formula::binary(BoolOp::Iff, lhs, rhs);
        }
        Ok(lhs)
    }

    fn implies(&mut self) -> Result<Formula> {
        let lhs = self.xor()?;
        if self.eat(&Tok::Implies) {
            let rhs = self.implies()?;
            return Ok(Formula::binary(BoolOp::Implies, lhs, rhs));
        }
        Ok(lhs)
    }

    fn xor(&mut self) -> Result<Formula> {
        let mut lhs = self.or()?;
        while self.eat(&Tok::Xor) {
            let rhs = self.or()?;
            lhs = Formula::binary(BoolOp::Xor, lhs, rhs);
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula> {
        let mut lhs = self.and()?;
        while self.eat(&Tok::Or) {
            let rhs = self.and()?;
            lhs = Formula::binary(BoolOp::Or, lhs, rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::And) {
            let rhs = self.unary()?;
            lhs = Formula::binary(BoolOp::And, lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula> {
        match self.peek() {
            Some(Tok::Not) => {
                self.bump();
                Ok(Formula::negate(self.unary()?))
            }
            Some(Tok::Quant(..)) => {
                let Some(Tok::Quant(universal, first)) = self.bump() else {
                    unreachable!()
                };
                let mut vars = vec![first];
                while self.eat(&Tok::Comma) {
                    match self.bump() {
                        Some(Tok::Var(v)) => vars.push(v),
                        _ => {
                            self.pos -= 1;
                            return Err(syntax(self.offset(), "expected a variable name"));
                        }
                    }
                }
                let mut body = self.formula()?;
                for v in vars.into_iter().rev() {
                    body = if universal {
                        Formula::Forall(v, Box::new(body))
                    } else {
                        Formula::Exists(v, Box::new(body))
                    };
                }
                Ok(body)
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Formula> {
        match self.peek() {
            Some(Tok::LParen) => {
                // either a parenthesised formula or an atom whose first term is parenthesised
                let save = self.pos;
                if let Ok(atom) = self.atom() {
                    return Ok(atom);
                }
                self.pos = save;
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(f)
            }
            Some(Tok::Call(_)) => {
                let Some(Tok::Call(name)) = self.bump() else {
                    unreachable!()
                };
                self.expect(Tok::LParen, "`(` after predicate name")?;
                let mut args = Vec::new();
                if !self.eat(&Tok::RParen) {
                    loop {
                        args.push(self.term()?);
                        if self.eat(&Tok::RParen) {
                            break;
                        }
                        self.expect(Tok::Comma, "`,` or `)`")?;
                    }
                }
                Ok(Formula::Call { name, args })
            }
            Some(Tok::Var(v)) if v == "true" || v == "false" => {
                let value = v == "true";
                self.bump();
                Ok(Formula::Bool(value))
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula> {
        let lhs = self.operand()?;
        let at = self.offset();
        let rel = match self.bump() {
            Some(Tok::Rel(r)) => r,
            _ => return Err(syntax(at, "expected a relation")),
        };
        let rhs = self.operand()?;
        let equality = match rel {
            Rel::Eq => Some(true),
            Rel::Ne => Some(false),
            _ => None,
        };
        match (lhs, rhs) {
            (Operand::Term(a), Operand::Term(b)) => Ok(Formula::Compare(a, rel, b)),
            (Operand::Seq(seq), Operand::Value(value))
            | (Operand::Value(value), Operand::Seq(seq)) => {
                let equal =
                    equality.ok_or_else(|| syntax(at, "sequence values only support = and !="))?;
                Ok(Formula::SeqValue { seq, value, equal })
            }
            (Operand::Seq(left), Operand::Seq(right)) => {
                let equal =
                    equality.ok_or_else(|| syntax(at, "sequence values only support = and !="))?;
                Ok(Formula::SeqCompare { left, right, equal })
            }
            _ => Err(syntax(at, "mismatched operands")),
        }
    }

    fn operand(&mut self) -> Result<Operand> {
        match self.peek() {
            Some(Tok::At(_)) => {
                let Some(Tok::At(v)) = self.bump() else {
                    unreachable!()
                };
                Ok(Operand::Value(v))
            }
            Some(Tok::Name(_)) => {
                let Some(Tok::Name(name)) = self.bump() else {
                    unreachable!()
                };
                self.expect(Tok::LBracket, "`[` after sequence name")?;
                let index = self.term()?;
                self.expect(Tok::RBracket, "`]`")?;
                Ok(Operand::Seq(SeqRef { name, index }))
            }
            _ => Ok(Operand::Term(self.term()?)),
        }
    }

    fn term(&mut self) -> Result<Term> {
        let at = self.offset();
        let mut t = self.product()?;
        while self.eat(&Tok::Plus) {
            t = t
                .checked_add(self.product()?)
                .ok_or_else(|| syntax(at, "term overflows 64 bits"))?;
        }
        Ok(t)
    }

    fn product(&mut self) -> Result<Term> {
        let at = self.offset();
        let mut t = self.factor()?;
        while self.eat(&Tok::Star) {
            let rhs = self.factor()?;
            t = match (t.coefficients.is_empty(), rhs.coefficients.is_empty()) {
                (true, _) => rhs.scale(t.constant),
                (_, true) => t.scale(rhs.constant),
                _ => return Err(Error::NonLinear(format!("product of {t} and {rhs}"))),
            }
            .ok_or_else(|| syntax(at, "term overflows 64 bits"))?;
        }
        Ok(t)
    }

    fn factor(&mut self) -> Result<Term> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::Num(n)) => Ok(Term::constant(n)),
            Some(Tok::Var(v)) => Ok(Term::var(v)),
            Some(Tok::LParen) => {
                let t = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            _ => Err(syntax(at, "expected a term")),
        }
    }
}

enum Operand {
    Term(Term),
    Seq(SeqRef),
    Value(u64),
}

/// Parses predicate text. A leading `?msd_fib` directive is accepted; any other
/// numeration tag is rejected.
pub fn parse(text: &str) -> Result<Formula> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    if let Some(Tok::Directive(tag)) = p.peek() {
        if tag != NUMERATION_TAG {
            return Err(Error::Numeration(tag.clone()));
        }
        p.bump();
    }
    let f = p.formula()?;
    if p.pos < p.toks.len() {
        return Err(syntax(p.offset(), "unexpected trailing input"));
    }
    check_scopes(&f)?;
    Ok(f)
}

/// Every variable is free or bound by exactly one quantifier.
fn check_scopes(f: &Formula) -> Result<()> {
    let mut bound = Vec::new();
    f.bound_vars(&mut bound);
    let free = f.free_vars();
    for (i, v) in bound.iter().enumerate() {
        if bound[..i].contains(v) {
            return Err(syntax(
                0,
                format!("variable `{v}` is quantified more than once"),
            ));
        }
        if free.contains(v) {
            return Err(syntax(
                0,
                format!("variable `{v}` occurs both free and bound"),
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(f: &Formula) -> Vec<String> {
        f.free_vars().into_iter().collect()
    }

    #[test]
    fn factor_equality_command() {
        let f = parse("?msd_fib At,u (t>=i & t<i+n & i+u=t+j) => FTM[t]=FTM[u]").unwrap();
        assert_eq!(vars(&f), ["i", "j", "n"]);
        let Formula::Forall(t, body) = &f else {
            panic!("expected a universal quantifier, got {f:?}")
        };
        assert_eq!(t, "t");
        let Formula::Forall(u, body) = body.as_ref() else {
            panic!()
        };
        assert_eq!(u, "u");
        assert!(matches!(
            body.as_ref(),
            Formula::Binary(BoolOp::Implies, _, _)
        ));
    }

    #[test]
    fn right_special_command() {
        let f =
            parse("?msd_fib Ej,k $ftmfactoreq(i,j,n) & $ftmfactoreq(i,k,n) & FTM[j+n] != FTM[k+n]")
                .unwrap();
        assert_eq!(vars(&f), ["i", "n"]);
        let mut calls = 0;
        fn walk(f: &Formula, calls: &mut usize) {
            match f {
                Formula::Call { name, args } => {
                    assert_eq!(name, "ftmfactoreq");
                    assert_eq!(args.len(), 3);
                    *calls += 1;
                }
                Formula::Not(g) | Formula::Exists(_, g) | Formula::Forall(_, g) => walk(g, calls),
                Formula::Binary(_, a, b) => {
                    walk(a, calls);
                    walk(b, calls);
                }
                _ => {}
            }
        }
        walk(&f, &mut calls);
        assert_eq!(calls, 2);
    }

    #[test]
    fn quantifier_inside_conjunction_extends_right() {
        let f = parse("$isftmrs(i,n) & Aj (j<i) => ~$ftmfactoreq(i,j,n)").unwrap();
        let Formula::Binary(BoolOp::And, _, rhs) = f else {
            panic!()
        };
        assert!(matches!(*rhs, Formula::Forall(..)));
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(
            parse("x = y y"),
            Err(Error::Syntax { pos: 6, .. })
        ));
        assert!(matches!(parse("x = "), Err(Error::Syntax { .. })));
        assert!(matches!(parse("(x = y"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("x # y"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse("x*y = 1"), Err(Error::NonLinear(_))));
        assert!(matches!(parse("?msd_2 x = 1"), Err(Error::Numeration(_))));
        assert!(parse("Ex Ex x = 1").is_err());
        assert!(parse("x = 1 & Ex x = 2").is_err());
        assert!(parse("FTM[n] < @1").is_err());
    }

    #[test]
    fn terms_and_constants() {
        let f = parse("2*x + (y+3) <= 7").unwrap();
        let Formula::Compare(lhs, Rel::Le, rhs) = f else {
            panic!()
        };
        assert_eq!(lhs.coefficients["x"], 2);
        assert_eq!(lhs.constant, 3);
        assert_eq!(rhs, Term::constant(7));
        assert!(matches!(parse("(t<u)").unwrap(), Formula::Compare(..)));
        assert!(matches!(
            parse("FTMD[n]=@8").unwrap(),
            Formula::SeqValue {
                value: 8,
                equal: true,
                ..
            }
        ));
        assert_eq!(parse("true").unwrap(), Formula::Bool(true));
    }

    #[test]
    fn precedence() {
        let f = parse("a=0 | b=0 & c=0 => d=0 <=> e=0").unwrap();
        let Formula::Binary(BoolOp::Iff, lhs, _) = f else {
            panic!()
        };
        let Formula::Binary(BoolOp::Implies, lhs, _) = *lhs else {
            panic!()
        };
        let Formula::Binary(BoolOp::Or, _, rhs) = *lhs else {
            panic!()
        };
        assert!(matches!(*rhs, Formula::Binary(BoolOp::And, _, _)));
    }
}
