//! Construction terms: variables, the constants `alpha`, `beta`, `gamma`,
//! and the Skolem symbols `ext`/4, `ip`/5, `ilc`/6 and `rootN`/N (N odd).

use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Constant {
    Alpha,
    Beta,
    Gamma,
}

impl Constant {
    pub fn name(self) -> &'static str {
        match self {
            Constant::Alpha => "alpha",
            Constant::Beta => "beta",
            Constant::Gamma => "gamma",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    Const(Constant),
    Ext(Box<[Term; 4]>),
    Ip(Box<[Term; 5]>),
    Ilc(Box<[Term; 6]>),
    Root(Vec<Term>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("{symbol} expects {expected} arguments, got {got}")]
    Arity {
        symbol: String,
        expected: usize,
        got: usize,
    },
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn ext(a: Term, b: Term, p: Term, q: Term) -> Term {
        Term::Ext(Box::new([a, b, p, q]))
    }

    pub fn ip(a: Term, p: Term, c: Term, b: Term, q: Term) -> Term {
        Term::Ip(Box::new([a, p, c, b, q]))
    }

    pub fn ilc(p: Term, q: Term, a: Term, b: Term, x: Term, y: Term) -> Term {
        Term::Ilc(Box::new([p, q, a, b, x, y]))
    }

    /// `rootN` with `N = args.len()`; `None` unless `N` is odd.
    pub fn root(args: Vec<Term>) -> Option<Term> {
        (args.len() % 2 == 1).then_some(Term::Root(args))
    }

    /// Builds an application from a symbol name and children, checking arity.
    pub fn apply(symbol: &str, args: Vec<Term>) -> Result<Term, ParseError> {
        let arity_err = |expected| ParseError::Arity {
            symbol: symbol.to_string(),
            expected,
            got: args.len(),
        };
        match symbol {
            "ext" => <[Term; 4]>::try_from(args.clone())
                .map(|a| Term::Ext(Box::new(a)))
                .map_err(|_| arity_err(4)),
            "ip" => <[Term; 5]>::try_from(args.clone())
                .map(|a| Term::Ip(Box::new(a)))
                .map_err(|_| arity_err(5)),
            "ilc" => <[Term; 6]>::try_from(args.clone())
                .map(|a| Term::Ilc(Box::new(a)))
                .map_err(|_| arity_err(6)),
            _ => {
                let n = root_arity(symbol).ok_or_else(|| ParseError::Syntax {
                    pos: 0,
                    msg: format!("unknown function symbol {symbol}"),
                })?;
                if n != args.len() {
                    return Err(arity_err(n));
                }
                Ok(Term::Root(args))
            }
        }
    }

    pub fn symbol(&self) -> Option<String> {
        match self {
            Term::Var(_) | Term::Const(_) => None,
            Term::Ext(_) => Some("ext".into()),
            Term::Ip(_) => Some("ip".into()),
            Term::Ilc(_) => Some("ilc".into()),
            Term::Root(cs) => Some(format!("root{}", cs.len())),
        }
    }

    pub fn children(&self) -> &[Term] {
        match self {
            Term::Var(_) | Term::Const(_) => &[],
            Term::Ext(cs) => &cs[..],
            Term::Ip(cs) => &cs[..],
            Term::Ilc(cs) => &cs[..],
            Term::Root(cs) => cs,
        }
    }

    fn children_mut(&mut self) -> &mut [Term] {
        match self {
            Term::Var(_) | Term::Const(_) => &mut [],
            Term::Ext(cs) => &mut cs[..],
            Term::Ip(cs) => &mut cs[..],
            Term::Ilc(cs) => &mut cs[..],
            Term::Root(cs) => cs,
        }
    }

    /// Number of function-symbol nodes.
    pub fn symbol_count(&self) -> usize {
        match self {
            Term::Var(_) | Term::Const(_) => 0,
            _ => 1 + self.children().iter().map(Term::symbol_count).sum::<usize>(),
        }
    }

    pub fn has_root(&self) -> bool {
        matches!(self, Term::Root(_)) || self.children().iter().any(Term::has_root)
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        if let Term::Var(v) = self {
            out.insert(v.clone());
        }
        for c in self.children() {
            c.collect_vars(out);
        }
    }

    /// Replaces every occurrence of the variable `name` with `by`.
    pub fn substitute(&self, name: &str, by: &Term) -> Term {
        if let Term::Var(v) = self {
            return if v == name { by.clone() } else { self.clone() };
        }
        let mut out = self.clone();
        for c in out.children_mut() {
            *c = c.substitute(name, by);
        }
        out
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

fn root_arity(symbol: &str) -> Option<usize> {
    let digits = symbol.strip_prefix("root")?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
        return None;
    }
    let n: usize = digits.parse().ok()?;
    (n % 2 == 1).then_some(n)
}

fn is_function_name(name: &str) -> bool {
    matches!(name, "ext" | "ip" | "ilc") || name.strip_prefix("root").is_some_and(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Const(c) => f.write_str(c.name()),
            _ => {
                write!(f, "{}(", self.symbol().unwrap())?;
                for (i, c) in self.children().iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn syntax<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.as_bytes().get(self.pos).copied()
    }

    fn ident(&mut self) -> Result<(usize, &str), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        if !bytes.get(start).is_some_and(u8::is_ascii_lowercase) {
            return self.syntax(start, "expected an identifier");
        }
        let mut end = start + 1;
        while bytes.get(end).is_some_and(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || *b == b'_') {
            end += 1;
        }
        self.pos = end;
        Ok((start, &self.src[start..end]))
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let (start, name) = self.ident()?;
        let name = name.to_string();
        if self.peek() != Some(b'(') {
            return match name.as_str() {
                "alpha" => Ok(Term::Const(Constant::Alpha)),
                "beta" => Ok(Term::Const(Constant::Beta)),
                "gamma" => Ok(Term::Const(Constant::Gamma)),
                n if is_function_name(n) => self.syntax(self.pos, format!("expected '(' after {n}")),
                _ => Ok(Term::Var(name)),
            };
        }
        if !is_function_name(&name) {
            return self.syntax(start, format!("unknown function symbol {name}"));
        }
        if name.starts_with("root") && root_arity(&name).is_none() {
            return self.syntax(start, format!("{name}: root arity must be odd"));
        }
        self.pos += 1;
        let mut args = vec![self.term()?];
        loop {
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                    args.push(self.term()?);
                }
                Some(b')') => {
                    self.pos += 1;
                    break;
                }
                _ => return self.syntax(self.pos, "expected ',' or ')'"),
            }
        }
        Term::apply(&name, args)
    }
}

pub fn parse(text: &str) -> Result<Term, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let t = p.term()?;
    if p.peek().is_some() {
        return p.syntax(p.pos, "trailing input");
    }
    Ok(t)
}

/// Strips a `#` comment and surrounding whitespace.
pub fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// One term per line; blank lines and `#` comments are ignored. Errors
/// carry the 1-based line number.
pub fn parse_term_file(text: &str) -> Result<Vec<Term>, (usize, ParseError)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !strip_comment(l).is_empty())
        .map(|(i, l)| parse(strip_comment(l)).map_err(|e| (i + 1, e)))
        .collect()
}
