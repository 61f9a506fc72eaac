//! Modal formulas over atoms, falsum, implication and box.
//!
//! Negation, diamond, conjunction and disjunction exist only as surface
//! syntax: the parser desugars them and the printer can put them back.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String),
    Falsum,
    Implies(Box<Formula>, Box<Formula>),
    Box(Box<Formula>),
}

impl Formula {
    /// Builds an atom without checking the name; used for schema metavariables.
    pub fn atom(name: impl Into<String>) -> Formula {
        Formula::Atom(name.into())
    }

    /// Builds an atom whose name must be a valid object-language identifier.
    pub fn checked_atom(name: &str) -> Result<Formula> {
        if name == "bot" {
            return Err(Error::ReservedAtom { position: 0 });
        }
        let mut chars = name.chars();
        let valid = matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid {
            return Err(Error::Syntax {
                position: 0,
                message: format!("`{name}` is not a valid atom name"),
            });
        }
        Ok(Formula::Atom(name.to_string()))
    }

    pub fn implies(left: Formula, right: Formula) -> Formula {
        Formula::Implies(Box::new(left), Box::new(right))
    }

    pub fn boxed(operand: Formula) -> Formula {
        Formula::Box(Box::new(operand))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(operand: Formula) -> Formula {
        Formula::implies(operand, Formula::Falsum)
    }

    pub fn dia(operand: Formula) -> Formula {
        Formula::not(Formula::boxed(Formula::not(operand)))
    }

    pub fn and(left: Formula, right: Formula) -> Formula {
        Formula::not(Formula::implies(left, Formula::not(right)))
    }

    pub fn or(left: Formula, right: Formula) -> Formula {
        Formula::implies(Formula::not(left), right)
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Falsum => 1,
            Formula::Implies(l, r) => 1 + l.size() + r.size(),
            Formula::Box(x) => 1 + x.size(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Falsum => 0,
            Formula::Implies(l, r) => 1 + l.depth().max(r.depth()),
            Formula::Box(x) => 1 + x.depth(),
        }
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(name) => {
                out.insert(name.clone());
            }
            Formula::Falsum => {}
            Formula::Implies(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
            Formula::Box(x) => x.collect_atoms(out),
        }
    }

    /// Immediate subformulas.
    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::Atom(_) | Formula::Falsum => Vec::new(),
            Formula::Implies(l, r) => vec![l, r],
            Formula::Box(x) => vec![x],
        }
    }

    pub fn is_subformula_of(&self, other: &Formula) -> bool {
        self == other
            || other
                .children()
                .into_iter()
                .any(|c| self.is_subformula_of(c))
    }

    /// Prints the formula, optionally recognizing the derived connectives.
    pub fn print(&self, resugar: bool) -> String {
        let mut out = String::new();
        write_formula(self, 0, resugar, &mut out);
        out
    }

    /// Uniform substitution of atoms by formulas.
    pub fn instantiate(&self, binding: &HashMap<String, Formula>) -> Result<Formula> {
        Ok(match self {
            Formula::Atom(name) => binding
                .get(name)
                .cloned()
                .ok_or_else(|| Error::UnboundMetavariable(name.clone()))?,
            Formula::Falsum => Formula::Falsum,
            Formula::Implies(l, r) => {
                Formula::implies(l.instantiate(binding)?, r.instantiate(binding)?)
            }
            Formula::Box(x) => Formula::boxed(x.instantiate(binding)?),
        })
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.print(false))
    }
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

/// Free-function form of [`Formula::print`].
pub fn print(f: &Formula, resugar: bool) -> String {
    f.print(resugar)
}

/// Free-function form of [`Formula::instantiate`].
pub fn instantiate(schema: &Formula, binding: &HashMap<String, Formula>) -> Result<Formula> {
    schema.instantiate(binding)
}

// Binding strength, loosest first.
const IMP: u8 = 0;
const OR: u8 = 1;
const AND: u8 = 2;
const PREFIX: u8 = 3;

enum View<'a> {
    Leaf(&'a str),
    Prefix(&'static str, &'a Formula),
    Binary(&'static str, u8, &'a Formula, &'a Formula),
}

fn negated(f: &Formula) -> Option<&Formula> {
    match f {
        Formula::Implies(x, r) if **r == Formula::Falsum => Some(x),
        _ => None,
    }
}

fn view(f: &Formula, resugar: bool) -> View<'_> {
    match f {
        Formula::Atom(name) => View::Leaf(name),
        Formula::Falsum => View::Leaf("bot"),
        Formula::Box(x) => View::Prefix("[]", x),
        Formula::Implies(l, r) => {
            if resugar {
                if let Some(inner) = negated(f) {
                    if let Formula::Box(b) = inner {
                        if let Some(x) = negated(b) {
                            return View::Prefix("<>", x);
                        }
                    }
                    if let Formula::Implies(a, nb) = inner {
                        if let Some(b) = negated(nb) {
                            return View::Binary(" & ", AND, a, b);
                        }
                    }
                    return View::Prefix("!", inner);
                }
                // `<>a -> r` stays an implication.
                let diamond = matches!(view(l, true), View::Prefix("<>", _));
                if let (Some(a), false) = (negated(l), diamond) {
                    return View::Binary(" | ", OR, a, r);
                }
            }
            View::Binary(" -> ", IMP, l, r)
        }
    }
}

fn write_formula(f: &Formula, min_level: u8, resugar: bool, out: &mut String) {
    match view(f, resugar) {
        View::Leaf(text) => out.push_str(text),
        View::Prefix(op, x) => {
            out.push_str(op);
            write_formula(x, PREFIX, resugar, out);
        }
        View::Binary(op, level, l, r) => {
            let paren = level < min_level;
            if paren {
                out.push('(');
            }
            // `->` is right-associative, `&` and `|` are left-associative.
            let (left_min, right_min) = if level == IMP {
                (OR, IMP)
            } else {
                (level, level + 1)
            };
            write_formula(l, left_min, resugar, out);
            out.push_str(op);
            write_formula(r, right_min, resugar, out);
            if paren {
                out.push(')');
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    LParen,
    RParen,
    Not,
    Box,
    Dia,
    And,
    Or,
    Arrow,
    Bot,
    Ident(String),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let two = |s: &[u8]| bytes.get(i..i + 2) == Some(s);
        let token = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'!' => Token::Not,
            b'&' => Token::And,
            b'|' => Token::Or,
            b'[' if two(b"[]") => Token::Box,
            b'<' if two(b"<>") => Token::Dia,
            b'-' if two(b"->") => Token::Arrow,
            b'a'..=b'z' => {
                let mut end = i + 1;
                while end < bytes.len()
                    && (bytes[end].is_ascii_alphanumeric() || bytes[end] == b'_')
                {
                    end += 1;
                }
                let word = &text[i..end];
                i = end;
                tokens.push((
                    start,
                    if word == "bot" {
                        Token::Bot
                    } else {
                        Token::Ident(word.to_string())
                    },
                ));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(Error::Syntax {
                    position: i,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        i += match token {
            Token::Box | Token::Dia | Token::Arrow => 2,
            _ => 1,
        };
        tokens.push((start, token));
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, token: &Token) -> bool {
        if self.peek() == Some(token) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.position(),
            message: message.into(),
        })
    }

    fn formula(&mut self) -> Result<Formula> {
        let left = self.or()?;
        if self.eat(&Token::Arrow) {
            let right = self.formula()?;
            return Ok(Formula::implies(left, right));
        }
        Ok(left)
    }

    fn or(&mut self) -> Result<Formula> {
        let mut acc = self.and()?;
        while self.eat(&Token::Or) {
            acc = Formula::or(acc, self.and()?);
        }
        Ok(acc)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut acc = self.unary()?;
        while self.eat(&Token::And) {
            acc = Formula::and(acc, self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula> {
        let Some(token) = self.peek().cloned() else {
            return self.error("unexpected end of input");
        };
        self.pos += 1;
        match token {
            Token::Not => Ok(Formula::not(self.unary()?)),
            Token::Box => Ok(Formula::boxed(self.unary()?)),
            Token::Dia => Ok(Formula::dia(self.unary()?)),
            Token::Bot => Ok(Formula::Falsum),
            Token::Ident(name) => Ok(Formula::Atom(name)),
            Token::LParen => {
                let inner = self.formula()?;
                if !self.eat(&Token::RParen) {
                    return self.error("expected `)`");
                }
                Ok(inner)
            }
            other => {
                self.pos -= 1;
                self.error(format!("unexpected token {other:?}"))
            }
        }
    }
}

/// Parses the ASCII surface syntax into the core AST.
pub fn parse(text: &str) -> Result<Formula> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        pos: 0,
        end: text.len(),
    };
    let f = parser.formula()?;
    if parser.pos != parser.tokens.len() {
        return parser.error("unexpected trailing input");
    }
    Ok(f)
}

/// How a closure member is built from earlier members.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    Atom(String),
    Falsum,
    Implies(usize, usize),
    Box(usize),
}

/// A subformula-closed set of formulas in a fixed topological order.
#[derive(Clone, Debug)]
pub struct Closure {
    formulas: Vec<Formula>,
    nodes: Vec<Node>,
    index: HashMap<Formula, usize>,
}

impl PartialEq for Closure {
    fn eq(&self, other: &Self) -> bool {
        self.formulas == other.formulas
    }
}

impl Eq for Closure {}

fn kind_rank(f: &Formula) -> u8 {
    match f {
        Formula::Atom(_) => 0,
        Formula::Falsum => 1,
        Formula::Implies(..) => 2,
        Formula::Box(_) => 3,
    }
}

impl Closure {
    /// Smallest subformula-closed superset of `roots`, ordered by size, then
    /// node kind (atoms before `bot`), then printed form.
    pub fn of<'a>(roots: impl IntoIterator<Item = &'a Formula>) -> Closure {
        let mut seen = BTreeSet::new();
        let mut stack: Vec<&Formula> = roots.into_iter().collect();
        while let Some(f) = stack.pop() {
            if seen.insert(f) {
                stack.extend(f.children());
            }
        }
        let mut keyed: Vec<_> = seen
            .into_iter()
            .map(|f| ((f.size(), kind_rank(f), f.to_string()), f.clone()))
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        Closure::from_ordered(keyed.into_iter().map(|(_, f)| f).collect())
            .expect("sorted subformula set is topologically ordered")
    }

    /// Wraps an already ordered, closed list. Fails if some member's
    /// immediate subformula does not occur earlier.
    pub fn from_ordered(formulas: Vec<Formula>) -> Result<Closure> {
        let mut index = HashMap::with_capacity(formulas.len());
        let mut nodes = Vec::with_capacity(formulas.len());
        for (i, f) in formulas.iter().enumerate() {
            let lookup = |g: &Formula| {
                index
                    .get(g)
                    .copied()
                    .ok_or_else(|| Error::MissingSubformula(f.to_string()))
            };
            let node = match f {
                Formula::Atom(name) => Node::Atom(name.clone()),
                Formula::Falsum => Node::Falsum,
                Formula::Implies(l, r) => Node::Implies(lookup(l)?, lookup(r)?),
                Formula::Box(x) => Node::Box(lookup(x)?),
            };
            if index.insert(f.clone(), i).is_some() {
                return Err(Error::DuplicateFormula(f.to_string()));
            }
            nodes.push(node);
        }
        Ok(Closure {
            formulas,
            nodes,
            index,
        })
    }

    /// This closure followed by `f`, whose immediate subformulas must already be members.
    pub fn extended(&self, f: Formula) -> Result<Closure> {
        if self.index.contains_key(&f) {
            return Err(Error::DuplicateFormula(f.to_string()));
        }
        let mut formulas = self.formulas.clone();
        formulas.push(f);
        Closure::from_ordered(formulas)
    }

    /// The first `len` members, which are again subformula-closed.
    pub fn prefix(&self, len: usize) -> Closure {
        Closure::from_ordered(self.formulas[..len].to_vec())
            .expect("prefix of a topological order is closed")
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }

    pub fn position(&self, f: &Formula) -> Option<usize> {
        self.index.get(f).copied()
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.index.contains_key(f)
    }

    pub fn atoms(&self) -> Vec<(usize, &str)> {
        self.nodes
            .iter()
            .enumerate()
            .filter_map(|(i, n)| match n {
                Node::Atom(name) => Some((i, name.as_str())),
                _ => None,
            })
            .collect()
    }
}

/// Free-function form of [`Closure::of`].
pub fn closure<'a>(roots: impl IntoIterator<Item = &'a Formula>) -> Closure {
    Closure::of(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Formula {
        Formula::atom("p")
    }

    fn q() -> Formula {
        Formula::atom("q")
    }

    #[test]
    fn parses_core_syntax() {
        assert_eq!(
            parse("[]p -> p").unwrap(),
            Formula::implies(Formula::boxed(p()), p())
        );
        assert_eq!(parse("bot").unwrap(), Formula::Falsum);
    }

    #[test]
    fn desugars_diamond_and_conjunction() {
        let not_p = Formula::implies(p(), Formula::Falsum);
        assert_eq!(
            parse("<>p").unwrap(),
            Formula::implies(Formula::boxed(not_p), Formula::Falsum)
        );
        assert_eq!(
            parse("p & q").unwrap(),
            Formula::implies(
                Formula::implies(p(), Formula::implies(q(), Formula::Falsum)),
                Formula::Falsum
            )
        );
        assert_eq!(
            parse("p | q").unwrap(),
            Formula::implies(Formula::implies(p(), Formula::Falsum), q())
        );
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            parse("p -> q -> p").unwrap(),
            Formula::implies(p(), Formula::implies(q(), p()))
        );
        assert_eq!(
            parse("p | q & p").unwrap(),
            Formula::or(p(), Formula::and(q(), p()))
        );
        assert_eq!(
            parse("p & q & p").unwrap(),
            Formula::and(Formula::and(p(), q()), p())
        );
        assert_eq!(
            parse("![]p -> p").unwrap(),
            Formula::implies(Formula::not(Formula::boxed(p())), p())
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse("p -> ") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {other:?}"),
        }
        match parse("p $ q") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse("(p -> q").is_err());
        assert!(parse("p q").is_err());
        assert!(parse("P").is_err());
        assert!(parse("[p").is_err());
    }

    #[test]
    fn reserved_atom_name() {
        assert_eq!(
            Formula::checked_atom("bot"),
            Err(Error::ReservedAtom { position: 0 })
        );
        assert!(Formula::checked_atom("bottom").is_ok());
        assert!(Formula::checked_atom("Bad").is_err());
        // `bot` prefixes an ordinary identifier
        assert_eq!(parse("bottom").unwrap(), Formula::atom("bottom"));
    }

    #[test]
    fn prints_core_and_sugared() {
        assert_eq!(parse("[]p -> p").unwrap().print(false), "[]p -> p");
        assert_eq!(Formula::Falsum.print(false), "bot");
        assert_eq!(Formula::not(p()).print(true), "!p");
        assert_eq!(Formula::not(p()).print(false), "p -> bot");
        assert_eq!(parse("<>p").unwrap().print(true), "<>p");
        assert_eq!(
            parse("(p -> q) -> p").unwrap().print(false),
            "(p -> q) -> p"
        );
        assert_eq!(parse("[](p -> q)").unwrap().print(false), "[](p -> q)");
        assert_eq!(parse("p & (q & p)").unwrap().print(true), "p & (q & p)");
        assert_eq!(parse("!(p | q)").unwrap().print(true), "!(p | q)");
        assert_eq!(parse("<>p -> []<>p").unwrap().print(true), "<>p -> []<>p");
        assert_eq!(parse("!p -> q").unwrap().print(true), "p | q");
    }

    #[test]
    fn closure_examples() {
        let c = Closure::of([&parse("[]p -> p").unwrap()]);
        let printed: Vec<_> = c.formulas().iter().map(|f| f.to_string()).collect();
        assert_eq!(printed, ["p", "[]p", "[]p -> p"]);

        let c = Closure::of([&p()]);
        assert_eq!(c.formulas(), &[p()]);

        let c = Closure::of([&parse("<>p").unwrap()]);
        let printed: Vec<_> = c.formulas().iter().map(|f| f.to_string()).collect();
        assert_eq!(
            printed,
            [
                "p",
                "bot",
                "p -> bot",
                "[](p -> bot)",
                "[](p -> bot) -> bot"
            ]
        );
    }

    #[test]
    fn closure_nodes_point_backwards() {
        let c = Closure::of([&parse("[](p -> q) -> []p -> []q").unwrap()]);
        for (i, node) in c.nodes().iter().enumerate() {
            match node {
                Node::Implies(l, r) => assert!(*l < i && *r < i),
                Node::Box(x) => assert!(*x < i),
                _ => {}
            }
        }
        assert_eq!(c.atoms().len(), 2);
    }

    #[test]
    fn extending_requires_subformulas() {
        let c = Closure::of([&p()]);
        assert!(c.extended(Formula::boxed(p())).is_ok());
        assert!(matches!(
            c.extended(Formula::boxed(q())),
            Err(Error::MissingSubformula(_))
        ));
        assert!(matches!(c.extended(p()), Err(Error::DuplicateFormula(_))));
    }

    #[test]
    fn instantiate_examples() {
        let a = Formula::atom("A");
        let b = Formula::atom("B");
        let t_schema = Formula::implies(Formula::boxed(a.clone()), a.clone());
        let mut binding = HashMap::new();
        binding.insert("A".to_string(), parse("p | q").unwrap());
        assert_eq!(
            t_schema.instantiate(&binding).unwrap(),
            parse("[](p | q) -> (p | q)").unwrap()
        );

        let mut binding = HashMap::new();
        binding.insert("A".to_string(), Formula::Falsum);
        assert_eq!(a.instantiate(&binding).unwrap(), Formula::Falsum);

        let k = Formula::implies(
            Formula::boxed(Formula::implies(a.clone(), b.clone())),
            Formula::implies(Formula::boxed(a), Formula::boxed(b)),
        );
        let mut binding = HashMap::new();
        binding.insert("A".to_string(), p());
        binding.insert("B".to_string(), p());
        assert_eq!(
            k.instantiate(&binding).unwrap(),
            parse("[](p -> p) -> ([]p -> []p)").unwrap()
        );
        binding.remove("B");
        assert_eq!(
            k.instantiate(&binding),
            Err(Error::UnboundMetavariable("B".into()))
        );
    }
}
