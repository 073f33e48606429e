//! Integer expressions for table parameters: `(-1)^(a-i)`, `e-a-1`,
//! `a>3 && e-a>=1`. Comparisons and `&&` evaluate to 0 or 1.

use std::collections::BTreeMap;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("unexpected character {0:?} in {1:?}")]
    BadChar(char, String),
    #[error("unexpected end of expression {0:?}")]
    UnexpectedEnd(String),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("trailing input in {0:?}")]
    Trailing(String),
    #[error("negative exponent in {0:?}")]
    NegativeExponent(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(i64),
    Var(String),
    Op(&'static str),
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<Tok>, ExprError> {
    const OPS: [&str; 11] = ["&&", "<=", ">=", "==", "!=", "<", ">", "+", "-", "*", "^"];
    let mut out = Vec::new();
    let mut rest = s.trim_start();
    while let Some(c) = rest.chars().next() {
        if c.is_ascii_digit() {
            let end = rest.find(|ch: char| !ch.is_ascii_digit()).unwrap_or(rest.len());
            out.push(Tok::Num(rest[..end].parse().map_err(|_| ExprError::BadChar(c, s.into()))?));
            rest = &rest[end..];
        } else if c.is_ascii_alphabetic() {
            let end = rest.find(|ch: char| !ch.is_ascii_alphanumeric()).unwrap_or(rest.len());
            out.push(Tok::Var(rest[..end].to_string()));
            rest = &rest[end..];
        } else if c == '(' || c == ')' {
            out.push(if c == '(' { Tok::Open } else { Tok::Close });
            rest = &rest[1..];
        } else if let Some(op) = OPS.iter().find(|op| rest.starts_with(**op)) {
            out.push(Tok::Op(op));
            rest = &rest[op.len()..];
        } else {
            return Err(ExprError::BadChar(c, s.into()));
        }
        rest = rest.trim_start();
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a BTreeMap<String, i64>,
    src: &'a str,
}

impl Parser<'_> {
    fn peek_op(&self) -> Option<&'static str> {
        match self.toks.get(self.pos) {
            Some(Tok::Op(op)) => Some(op),
            _ => None,
        }
    }

    fn and(&mut self) -> Result<i64, ExprError> {
        let mut v = self.cmp()?;
        while self.peek_op() == Some("&&") {
            self.pos += 1;
            let rhs = self.cmp()?;
            v = i64::from(v != 0 && rhs != 0);
        }
        Ok(v)
    }

    fn cmp(&mut self) -> Result<i64, ExprError> {
        let lhs = self.sum()?;
        let Some(op) = self.peek_op().filter(|op| ["<", "<=", ">", ">=", "==", "!="].contains(op)) else {
            return Ok(lhs);
        };
        self.pos += 1;
        let rhs = self.sum()?;
        let holds = match op {
            "<" => lhs < rhs,
            "<=" => lhs <= rhs,
            ">" => lhs > rhs,
            ">=" => lhs >= rhs,
            "==" => lhs == rhs,
            _ => lhs != rhs,
        };
        Ok(i64::from(holds))
    }

    fn sum(&mut self) -> Result<i64, ExprError> {
        let mut v = self.product()?;
        while let Some(op) = self.peek_op().filter(|op| *op == "+" || *op == "-") {
            self.pos += 1;
            let rhs = self.product()?;
            v = if op == "+" { v + rhs } else { v - rhs };
        }
        Ok(v)
    }

    fn product(&mut self) -> Result<i64, ExprError> {
        let mut v = self.unary()?;
        while self.peek_op() == Some("*") {
            self.pos += 1;
            v *= self.unary()?;
        }
        Ok(v)
    }

    fn unary(&mut self) -> Result<i64, ExprError> {
        if self.peek_op() == Some("-") {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<i64, ExprError> {
        let base = self.atom()?;
        if self.peek_op() != Some("^") {
            return Ok(base);
        }
        self.pos += 1;
        let exp = self.unary()?;
        let exp = u32::try_from(exp).map_err(|_| ExprError::NegativeExponent(self.src.into()))?;
        Ok(base.pow(exp))
    }

    fn atom(&mut self) -> Result<i64, ExprError> {
        let tok = self.toks.get(self.pos).cloned().ok_or_else(|| ExprError::UnexpectedEnd(self.src.into()))?;
        self.pos += 1;
        match tok {
            Tok::Num(n) => Ok(n),
            Tok::Var(name) => self.vars.get(&name).copied().ok_or(ExprError::UnknownVariable(name)),
            Tok::Open => {
                let v = self.and()?;
                match self.toks.get(self.pos) {
                    Some(Tok::Close) => {
                        self.pos += 1;
                        Ok(v)
                    }
                    _ => Err(ExprError::UnexpectedEnd(self.src.into())),
                }
            }
            Tok::Close | Tok::Op(_) => Err(ExprError::UnexpectedEnd(self.src.into())),
        }
    }
}

/// Evaluates `src` with the given variable bindings.
pub fn eval(src: &str, vars: &BTreeMap<String, i64>) -> Result<i64, ExprError> {
    let mut p = Parser { toks: tokenize(src)?, pos: 0, vars, src };
    let v = p.and()?;
    if p.pos != p.toks.len() {
        return Err(ExprError::Trailing(src.into()));
    }
    Ok(v)
}

/// Replaces every `[expr]` in `text` by its value.
pub fn substitute(text: &str, vars: &BTreeMap<String, i64>) -> Result<String, ExprError> {
    let mut out = String::with_capacity(text.len());
    let mut rest = text;
    while let Some(start) = rest.find('[') {
        out.push_str(&rest[..start]);
        let end = rest[start..].find(']').ok_or_else(|| ExprError::UnexpectedEnd(text.into()))? + start;
        out.push_str(&eval(&rest[start + 1..end], vars)?.to_string());
        rest = &rest[end + 1..];
    }
    out.push_str(rest);
    Ok(out)
}
