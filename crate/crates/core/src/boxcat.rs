//! The box category `□` with faces, degeneracies and both kinds of
//! connections.
//!
//! An operator `[1]^m → [1]^n` is stored in a canonical coordinate form: each
//! output coordinate is either a constant or a read-once min/max formula in a
//! contiguous block of input coordinates, blocks appearing in order.  Two
//! operators are equal exactly when their vertex functions agree, and the
//! normal-form word (faces, connections, degeneracies) is read off this form.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::operator::Operator;

/// A vertex of `[1]^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex(pub Vec<bool>);

impl Vertex {
    pub fn from_bits(bits: &[u8]) -> Self {
        Vertex(bits.iter().map(|&b| b != 0).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// All vertices of `[1]^n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Vertex> {
        (0..1usize << n)
            .map(|mask| Vertex((0..n).map(|i| mask >> (n - 1 - i) & 1 == 1).collect()))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Term {
    Const(bool),
    Var(usize),
    Max(Vec<Term>),
    Min(Vec<Term>),
}

impl Term {
    fn eval(&self, v: &[bool]) -> bool {
        match self {
            Term::Const(b) => *b,
            Term::Var(i) => v[*i],
            Term::Max(ch) => ch.iter().any(|t| t.eval(v)),
            Term::Min(ch) => ch.iter().all(|t| t.eval(v)),
        }
    }

    /// Lattice join (`is_max`) or meet of already canonical terms.
    fn combine(is_max: bool, children: Vec<Term>) -> Term {
        let mut out = Vec::with_capacity(children.len());
        for c in children {
            match c {
                Term::Const(b) if b == is_max => return Term::Const(b),
                Term::Const(_) => {}
                Term::Max(cs) if is_max => out.extend(cs),
                Term::Min(cs) if !is_max => out.extend(cs),
                other => out.push(other),
            }
        }
        match out.len() {
            0 => Term::Const(!is_max),
            1 => out.pop().unwrap(),
            _ if is_max => Term::Max(out),
            _ => Term::Min(out),
        }
    }

    fn subst(&self, inner: &[Term]) -> Term {
        match self {
            Term::Const(b) => Term::Const(*b),
            Term::Var(i) => inner[*i].clone(),
            Term::Max(ch) => Term::combine(true, ch.iter().map(|t| t.subst(inner)).collect()),
            Term::Min(ch) => Term::combine(false, ch.iter().map(|t| t.subst(inner)).collect()),
        }
    }

    fn first_var(&self) -> Option<usize> {
        match self {
            Term::Const(_) => None,
            Term::Var(i) => Some(*i),
            Term::Max(ch) | Term::Min(ch) => ch[0].first_var(),
        }
    }

    fn collect_vars(&self, out: &mut Vec<usize>) {
        match self {
            Term::Const(_) => {}
            Term::Var(i) => out.push(*i),
            Term::Max(ch) | Term::Min(ch) => ch.iter().for_each(|t| t.collect_vars(out)),
        }
    }

    fn shift(&self, by: usize) -> Term {
        match self {
            Term::Const(b) => Term::Const(*b),
            Term::Var(i) => Term::Var(i + by),
            Term::Max(ch) => Term::Max(ch.iter().map(|t| t.shift(by)).collect()),
            Term::Min(ch) => Term::Min(ch.iter().map(|t| t.shift(by)).collect()),
        }
    }

    /// Relabel variables by `i ↦ top - i`, keeping children in increasing order.
    fn reverse(&self, top: usize) -> Term {
        match self {
            Term::Const(b) => Term::Const(*b),
            Term::Var(i) => Term::Var(top - i),
            Term::Max(ch) => Term::Max(ch.iter().rev().map(|t| t.reverse(top)).collect()),
            Term::Min(ch) => Term::Min(ch.iter().rev().map(|t| t.reverse(top)).collect()),
        }
    }

    fn complement(&self) -> Term {
        match self {
            Term::Const(b) => Term::Const(!b),
            Term::Var(i) => Term::Var(*i),
            Term::Max(ch) => Term::Min(ch.iter().map(Term::complement).collect()),
            Term::Min(ch) => Term::Max(ch.iter().map(Term::complement).collect()),
        }
    }

    /// Assign input coordinates so that this term reduces to output variable `out`.
    fn section_into(&self, out: usize, assign: &mut [Term]) {
        match self {
            Term::Const(_) => {}
            Term::Var(i) => assign[*i] = Term::Var(out),
            Term::Max(ch) | Term::Min(ch) => {
                let neutral = matches!(self, Term::Min(_));
                ch[0].section_into(out, assign);
                for c in &ch[1..] {
                    let mut vars = Vec::new();
                    c.collect_vars(&mut vars);
                    for v in vars {
                        assign[v] = Term::Const(neutral);
                    }
                }
            }
        }
    }

    /// The left spine of a formula: connections at the index of its first
    /// variable, recorded in the order they are applied.
    fn spine(&self, rank: &HashMap<usize, usize>, ops: &mut Vec<u8>, per_index: &mut BTreeMap<usize, Vec<u8>>) {
        let (is_max, ch) = match self {
            Term::Max(ch) => (true, ch),
            Term::Min(ch) => (false, ch),
            _ => return,
        };
        ch[0].spine(rank, ops, per_index);
        let rest = if ch.len() == 2 {
            ch[1].clone()
        } else if is_max {
            Term::Max(ch[1..].to_vec())
        } else {
            Term::Min(ch[1..].to_vec())
        };
        rest.record(rank, per_index);
        ops.push(u8::from(is_max));
    }

    fn record(&self, rank: &HashMap<usize, usize>, per_index: &mut BTreeMap<usize, Vec<u8>>) {
        if let Some(first) = self.first_var() {
            let mut ops = Vec::new();
            self.spine(rank, &mut ops, per_index);
            if !ops.is_empty() {
                per_index.insert(rank[&first], ops);
            }
        }
    }
}

/// A morphism `[1]^src → [1]^tgt` of the box category.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxOperator {
    src: usize,
    coords: Vec<Term>,
}

/// Name of a generator of the box category, used to spell words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `∂_{i,ε}`, inserting `ε` at coordinate `i`.
    Face(usize, u8),
    /// `σ_i`, dropping coordinate `i`.
    Degeneracy(usize),
    /// `γ_{i,ε}`, merging coordinates `i, i+1` by max (`ε = 1`) or min (`ε = 0`).
    Connection(usize, u8),
}

impl Generator {
    /// Target dimension when applied to a cube of dimension `src`, if admissible.
    pub fn tgt_dim(self, src: usize) -> Option<usize> {
        match self {
            Generator::Face(i, e) => (i >= 1 && i <= src + 1 && e <= 1).then_some(src + 1),
            Generator::Degeneracy(i) => (i >= 1 && i <= src).then(|| src - 1),
            Generator::Connection(i, e) => (i >= 1 && i < src && e <= 1).then(|| src - 1),
        }
    }

    /// The generator as an operator with the given source dimension.
    pub fn at(self, src: usize) -> Result<BoxOperator> {
        let tgt = self.tgt_dim(src).ok_or_else(|| {
            Error::Dimension(format!("{self} is not defined on a cube of dimension {src}"))
        })?;
        Ok(match self {
            Generator::Face(i, e) => BoxOperator::face(tgt, i, e),
            Generator::Degeneracy(i) => BoxOperator::degeneracy(src, i),
            Generator::Connection(i, e) => BoxOperator::connection(src, i, e),
        })
    }

    fn parse(token: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad generator `{token}`"));
        let pair = |body: &str| -> Result<(usize, u8)> {
            let (i, e) = body.split_once(',').ok_or_else(bad)?;
            let i = i.trim().parse().map_err(|_| bad())?;
            let e = e.trim().parse().map_err(|_| bad())?;
            if e > 1 {
                return Err(bad());
            }
            Ok((i, e))
        };
        let token = token.trim();
        if let Some(body) = token.strip_prefix('d') {
            let (i, e) = pair(body)?;
            Ok(Generator::Face(i, e))
        } else if let Some(body) = token.strip_prefix('g') {
            let (i, e) = pair(body)?;
            Ok(Generator::Connection(i, e))
        } else if let Some(body) = token.strip_prefix('s') {
            Ok(Generator::Degeneracy(body.trim().parse().map_err(|_| bad())?))
        } else {
            Err(bad())
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Face(i, e) => write!(f, "d{i},{e}"),
            Generator::Degeneracy(i) => write!(f, "s{i}"),
            Generator::Connection(i, e) => write!(f, "g{i},{e}"),
        }
    }
}

/// The three dualities of the box category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Duality {
    /// Reverse the coordinate order.
    Co,
    /// Complement every bit.
    Coop,
    /// Both.
    Op,
}

impl std::str::FromStr for Duality {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "co" => Ok(Duality::Co),
            "coop" => Ok(Duality::Coop),
            "op" => Ok(Duality::Op),
            _ => Err(Error::Parse(format!("unknown duality `{s}`"))),
        }
    }
}

impl BoxOperator {
    /// `∂ⁿ_{i,ε}: [1]^{n-1} → [1]^n`.
    pub fn face(n: usize, i: usize, e: u8) -> Self {
        assert!(n >= 1 && (1..=n).contains(&i) && e <= 1, "face ∂^{n}_{{{i},{e}}} out of range");
        let coords = (1..=n)
            .map(|t| match t.cmp(&i) {
                std::cmp::Ordering::Less => Term::Var(t - 1),
                std::cmp::Ordering::Equal => Term::Const(e == 1),
                std::cmp::Ordering::Greater => Term::Var(t - 2),
            })
            .collect();
        BoxOperator { src: n - 1, coords }
    }

    /// `σⁿ_i: [1]^n → [1]^{n-1}`.
    pub fn degeneracy(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i), "degeneracy σ^{n}_{i} out of range");
        let coords = (0..n).filter(|&t| t != i - 1).map(Term::Var).collect();
        BoxOperator { src: n, coords }
    }

    /// `γⁿ_{i,ε}: [1]^n → [1]^{n-1}`, max for `ε = 1`, min for `ε = 0`.
    pub fn connection(n: usize, i: usize, e: u8) -> Self {
        assert!(i >= 1 && i < n && e <= 1, "connection γ^{n}_{{{i},{e}}} out of range");
        let mut coords: Vec<Term> = (0..i - 1).map(Term::Var).collect();
        let pair = vec![Term::Var(i - 1), Term::Var(i)];
        coords.push(if e == 1 { Term::Max(pair) } else { Term::Min(pair) });
        coords.extend((i + 1..n).map(Term::Var));
        BoxOperator { src: n, coords }
    }

    pub fn src_dim(&self) -> usize {
        self.src
    }

    pub fn tgt_dim(&self) -> usize {
        self.coords.len()
    }

    /// Compose a word written in `∘` order: `word[0] ∘ word[1] ∘ …`.
    pub fn compose(word: &[BoxOperator]) -> Result<BoxOperator> {
        let (last, rest) = word.split_last().ok_or_else(|| Error::Composition {
            position: 0,
            message: "empty word".into(),
        })?;
        let mut acc = last.clone();
        for (pos, op) in rest.iter().enumerate().rev() {
            if op.src != acc.tgt_dim() {
                return Err(Error::Composition {
                    position: pos,
                    message: format!(
                        "operator with source dimension {} cannot follow one with target dimension {}",
                        op.src,
                        acc.tgt_dim()
                    ),
                });
            }
            acc = op.after(&acc);
        }
        Ok(acc)
    }

    /// Apply `self` after `first`, checking dimensions.
    pub fn try_after(&self, first: &BoxOperator) -> Result<BoxOperator> {
        BoxOperator::compose(&[self.clone(), first.clone()])
    }

    /// Apply `self`, then `next`.
    pub fn then(&self, next: &BoxOperator) -> Result<BoxOperator> {
        next.try_after(self)
    }

    pub fn evaluate(&self, v: &Vertex) -> Result<Vertex> {
        if v.dim() != self.src {
            return Err(Error::Arity { expected: self.src, got: v.dim() });
        }
        Ok(Vertex(self.coords.iter().map(|t| t.eval(&v.0)).collect()))
    }

    /// The full vertex function, indexed like [`Vertex::all`].
    pub fn vertex_function(&self) -> Vec<Vertex> {
        Vertex::all(self.src).iter().map(|v| self.evaluate(v).unwrap()).collect()
    }

    /// Faces of the normal form, `(k, ε)` with `k` strictly decreasing.
    pub fn faces(&self) -> Vec<(usize, u8)> {
        let mut out: Vec<(usize, u8)> = self
            .coords
            .iter()
            .enumerate()
            .filter_map(|(t, c)| match c {
                Term::Const(b) => Some((t + 1, u8::from(*b))),
                _ => None,
            })
            .collect();
        out.reverse();
        out
    }

    fn used_vars(&self) -> Vec<usize> {
        let mut vars = Vec::new();
        self.coords.iter().for_each(|t| t.collect_vars(&mut vars));
        vars
    }

    /// Degeneracies of the normal form, strictly increasing.
    pub fn degeneracies(&self) -> Vec<usize> {
        let used: BTreeSet<usize> = self.used_vars().into_iter().collect();
        (0..self.src).filter(|i| !used.contains(i)).map(|i| i + 1).collect()
    }

    /// Connections of the normal form, indices non-decreasing, with
    /// alternating signs on repeated indices.
    pub fn connections(&self) -> Vec<(usize, u8)> {
        let rank: HashMap<usize, usize> =
            self.used_vars().into_iter().enumerate().map(|(r, v)| (v, r + 1)).collect();
        let mut per_index = BTreeMap::new();
        for t in &self.coords {
            t.record(&rank, &mut per_index);
        }
        per_index
            .into_iter()
            .flat_map(|(j, ops)| ops.into_iter().rev().map(move |e| (j, e)))
            .collect()
    }

    /// The normal form as a word of generators in application order.
    pub fn word(&self) -> Vec<Generator> {
        let mut word: Vec<Generator> =
            self.degeneracies().into_iter().rev().map(Generator::Degeneracy).collect();
        word.extend(self.connections().into_iter().rev().map(|(j, e)| Generator::Connection(j, e)));
        word.extend(self.faces().into_iter().rev().map(|(k, e)| Generator::Face(k, e)));
        word
    }

    /// Build an operator from a word of generators in application order.
    pub fn from_word(word: &[Generator], src: usize) -> Result<BoxOperator> {
        let mut acc = BoxOperator::identity(src);
        for (pos, g) in word.iter().enumerate() {
            let step = g.at(acc.tgt_dim()).map_err(|e| Error::Composition {
                position: pos,
                message: e.to_string(),
            })?;
            acc = step.after(&acc);
        }
        Ok(acc)
    }

    /// Build an operator from normal-form data (faces, connections,
    /// degeneracies), validating the normal-form conditions.
    pub fn from_normal_form(
        src: usize,
        faces: &[(usize, u8)],
        connections: &[(usize, u8)],
        degeneracies: &[usize],
    ) -> Result<BoxOperator> {
        if !faces.windows(2).all(|w| w[0].0 > w[1].0) {
            return Err(Error::Parameter("face indices must strictly decrease".into()));
        }
        if !connections.windows(2).all(|w| w[0].0 < w[1].0 || (w[0].0 == w[1].0 && w[0].1 != w[1].1)) {
            return Err(Error::Parameter(
                "connection indices must be non-decreasing with alternating signs on ties".into(),
            ));
        }
        if !degeneracies.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Parameter("degeneracy indices must strictly increase".into()));
        }
        let mut word: Vec<Generator> = degeneracies.iter().rev().map(|&i| Generator::Degeneracy(i)).collect();
        word.extend(connections.iter().rev().map(|&(j, e)| Generator::Connection(j, e)));
        word.extend(faces.iter().rev().map(|&(k, e)| Generator::Face(k, e)));
        BoxOperator::from_word(&word, src)
    }

    /// `(down, up)` with `self = up ∘ down`.
    pub fn ez_factor(&self) -> (BoxOperator, BoxOperator) {
        let down: Vec<Term> = self.coords.iter().filter(|t| !matches!(t, Term::Const(_))).cloned().collect();
        let mut next = 0;
        let up = self
            .coords
            .iter()
            .map(|t| match t {
                Term::Const(b) => Term::Const(*b),
                _ => {
                    next += 1;
                    Term::Var(next - 1)
                }
            })
            .collect();
        let p = down.len();
        (BoxOperator { src: self.src, coords: down }, BoxOperator { src: p, coords: up })
    }

    pub fn dual(&self, which: Duality) -> BoxOperator {
        match which {
            Duality::Co => {
                let top = self.src.saturating_sub(1);
                BoxOperator { src: self.src, coords: self.coords.iter().rev().map(|t| t.reverse(top)).collect() }
            }
            Duality::Coop => BoxOperator { src: self.src, coords: self.coords.iter().map(Term::complement).collect() },
            Duality::Op => self.dual(Duality::Co).dual(Duality::Coop),
        }
    }

    /// The monoidal product `a ⊗ b: [1]^{m+m'} → [1]^{n+n'}`.
    pub fn tensor(a: &BoxOperator, b: &BoxOperator) -> BoxOperator {
        let mut coords = a.coords.clone();
        coords.extend(b.coords.iter().map(|t| t.shift(a.src)));
        BoxOperator { src: a.src + b.src, coords }
    }

    /// Where the face `∂_{i,ε}` of an `n`-cube goes under a duality.
    pub fn dual_face(n: usize, i: usize, e: u8, which: Duality) -> (usize, u8) {
        match which {
            Duality::Co => (n + 1 - i, e),
            Duality::Coop => (i, 1 - e),
            Duality::Op => (n + 1 - i, 1 - e),
        }
    }
}

impl fmt::Display for BoxOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = self.word();
        if word.is_empty() {
            return write!(f, "id");
        }
        for (p, g) in word.iter().enumerate() {
            if p > 0 {
                write!(f, ";")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BoxOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}→{}] {}", self.src, self.tgt_dim(), self)
    }
}

fn downs_cache() -> &'static Mutex<HashMap<usize, Arc<Vec<BoxOperator>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<BoxOperator>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

impl Operator for BoxOperator {
    fn src_dim(&self) -> usize {
        self.src
    }

    fn tgt_dim(&self) -> usize {
        self.coords.len()
    }

    fn identity(n: usize) -> Self {
        BoxOperator { src: n, coords: (0..n).map(Term::Var).collect() }
    }

    fn is_identity(&self) -> bool {
        self.src == self.coords.len() && self.coords.iter().enumerate().all(|(i, t)| *t == Term::Var(i))
    }

    fn after(&self, first: &Self) -> Self {
        debug_assert_eq!(self.src, first.tgt_dim(), "composing {self:?} after {first:?}");
        BoxOperator { src: first.src, coords: self.coords.iter().map(|t| t.subst(&first.coords)).collect() }
    }

    fn split(&self) -> (Self, Self) {
        self.ez_factor()
    }

    fn is_down(&self) -> bool {
        self.coords.iter().all(|t| !matches!(t, Term::Const(_)))
    }

    fn is_up(&self) -> bool {
        let vars: Vec<usize> = self.coords.iter().filter_map(|t| if let Term::Var(i) = t { Some(*i) } else { None }).collect();
        self.coords.iter().all(|t| matches!(t, Term::Const(_) | Term::Var(_))) && vars == (0..self.src).collect::<Vec<_>>()
    }

    fn face_count(n: usize) -> usize {
        2 * n
    }

    fn face(n: usize, g: usize) -> Self {
        BoxOperator::face(n, g / 2 + 1, (g % 2) as u8)
    }

    fn peel_face(&self) -> Option<(usize, Self)> {
        let k = self.coords.iter().rposition(|t| matches!(t, Term::Const(_)))?;
        let Term::Const(b) = self.coords[k] else { unreachable!() };
        let mut rest = self.coords.clone();
        rest.remove(k);
        Some((2 * k + usize::from(b), BoxOperator { src: self.src, coords: rest }))
    }

    fn face_key(g: usize) -> String {
        format!("{},{}", g / 2 + 1, g % 2)
    }

    fn parse_face_key(key: &str, n: usize) -> Option<usize> {
        let (i, e) = key.split_once(',')?;
        let i: usize = i.trim().parse().ok()?;
        let e: usize = e.trim().parse().ok()?;
        (i >= 1 && i <= n && e <= 1).then(|| 2 * (i - 1) + e)
    }

    fn downs(n: usize) -> Arc<Vec<Self>> {
        if let Some(v) = downs_cache().lock().unwrap().get(&n) {
            return v.clone();
        }
        let mut seen: BTreeSet<BoxOperator> = BTreeSet::new();
        let mut frontier = vec![BoxOperator::identity(n)];
        seen.insert(BoxOperator::identity(n));
        while let Some(op) = frontier.pop() {
            for g in BoxOperator::generator_downs(op.tgt_dim()) {
                let next = g.after(&op);
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        let mut all: Vec<BoxOperator> = seen.into_iter().collect();
        all.sort_by(|a, b| b.tgt_dim().cmp(&a.tgt_dim()).then_with(|| a.cmp(b)));
        let all = Arc::new(all);
        downs_cache().lock().unwrap().insert(n, all.clone());
        all
    }

    fn generator_downs(n: usize) -> Vec<Self> {
        let mut out: Vec<BoxOperator> = (1..=n).map(|i| BoxOperator::degeneracy(n, i)).collect();
        for i in 1..n {
            out.push(BoxOperator::connection(n, i, 0));
            out.push(BoxOperator::connection(n, i, 1));
        }
        out
    }

    fn section(&self) -> Self {
        let mut assign = vec![Term::Const(false); self.src];
        for (out, t) in self.coords.iter().enumerate() {
            t.section_into(out, &mut assign);
        }
        BoxOperator { src: self.coords.len(), coords: assign }
    }

    fn parse(text: &str, src: Option<usize>) -> Result<Self> {
        let text = text.trim();
        let tokens: Vec<&str> = if text.is_empty() || text == "id" {
            Vec::new()
        } else {
            text.split(';').map(str::trim).filter(|t| *t != "id").collect()
        };
        let word = tokens.iter().map(|t| Generator::parse(t)).collect::<Result<Vec<_>>>()?;
        // least source dimension making every step admissible
        let mut delta: isize = 0;
        let mut need: isize = 0;
        for g in &word {
            let (req, step) = match *g {
                Generator::Face(i, _) => (i as isize - 1, 1),
                Generator::Degeneracy(i) => (i as isize, -1),
                Generator::Connection(i, _) => (i as isize + 1, -1),
            };
            need = need.max(req - delta);
            delta += step;
        }
        let src = match src {
            Some(s) => s,
            None => need.max(0) as usize,
        };
        BoxOperator::from_word(&word, src).map_err(|e| Error::Parse(format!("`{text}`: {e}")))
    }

    fn reversed(&self) -> Self {
        self.dual(Duality::Co)
    }

    fn reversed_face(n: usize, g: usize) -> usize {
        let (i, e) = BoxOperator::dual_face(n, g / 2 + 1, (g % 2) as u8, Duality::Co);
        2 * (i - 1) + e as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(s: &str) -> BoxOperator {
        BoxOperator::parse(s, None).unwrap()
    }

    #[test]
    fn degeneracy_after_face_is_identity() {
        let c = BoxOperator::compose(&[BoxOperator::degeneracy(1, 1), BoxOperator::face(1, 1, 0)]).unwrap();
        assert!(c.is_identity());
        assert_eq!(c.src_dim(), 0);
    }

    #[test]
    fn max_connection_after_zero_face_is_identity() {
        let c = BoxOperator::compose(&[BoxOperator::connection(2, 1, 1), BoxOperator::face(2, 1, 0)]).unwrap();
        assert!(c.is_identity());
        let c = BoxOperator::compose(&[BoxOperator::connection(2, 1, 1), BoxOperator::face(2, 1, 1)]).unwrap();
        assert_eq!(c.to_string(), "s1;d1,1");
    }

    #[test]
    fn two_degeneracies() {
        let c = BoxOperator::compose(&[BoxOperator::degeneracy(1, 1), BoxOperator::degeneracy(2, 1)]).unwrap();
        assert_eq!(c.degeneracies(), vec![1, 2]);
        assert!(c.faces().is_empty() && c.connections().is_empty());
    }

    #[test]
    fn composition_reports_position() {
        let err = BoxOperator::compose(&[BoxOperator::degeneracy(3, 1), BoxOperator::face(1, 1, 0)]).unwrap_err();
        assert!(matches!(err, Error::Composition { position: 0, .. }));
    }

    #[test]
    fn evaluate_generators() {
        let v = BoxOperator::face(2, 2, 1).evaluate(&Vertex::from_bits(&[0])).unwrap();
        assert_eq!(v, Vertex::from_bits(&[0, 1]));
        let v = BoxOperator::connection(2, 1, 1).evaluate(&Vertex::from_bits(&[0, 1])).unwrap();
        assert_eq!(v, Vertex::from_bits(&[1]));
        let v = BoxOperator::degeneracy(1, 1).evaluate(&Vertex::from_bits(&[1])).unwrap();
        assert_eq!(v.dim(), 0);
        assert!(matches!(
            BoxOperator::degeneracy(1, 1).evaluate(&Vertex::from_bits(&[1, 0])),
            Err(Error::Arity { expected: 1, got: 2 })
        ));
    }

    #[test]
    fn ez_factor_examples() {
        let id = BoxOperator::identity(2);
        let (d, u) = id.ez_factor();
        assert!(d.is_identity() && u.is_identity());
        let x = BoxOperator::from_normal_form(1, &[(1, 0)], &[], &[1]).unwrap();
        let (d, u) = x.ez_factor();
        assert_eq!(d, BoxOperator::degeneracy(1, 1));
        assert_eq!(u, BoxOperator::face(1, 1, 0));
        let g = BoxOperator::connection(2, 1, 0);
        let (d, u) = g.ez_factor();
        assert_eq!(d, g);
        assert!(u.is_identity());
    }

    #[test]
    fn duals() {
        assert_eq!(BoxOperator::face(3, 1, 0).dual(Duality::Co), BoxOperator::face(3, 3, 0));
        assert_eq!(BoxOperator::connection(2, 1, 0).dual(Duality::Coop), BoxOperator::connection(2, 1, 1));
        assert_eq!(BoxOperator::degeneracy(2, 1).dual(Duality::Op), BoxOperator::degeneracy(2, 2));
        assert_eq!(BoxOperator::connection(3, 1, 1).dual(Duality::Co), BoxOperator::connection(3, 2, 1));
    }

    #[test]
    fn tensor_examples() {
        let id1 = BoxOperator::identity(1);
        let d = BoxOperator::face(1, 1, 0);
        assert_eq!(BoxOperator::tensor(&d, &id1), BoxOperator::face(2, 1, 0));
        assert_eq!(BoxOperator::tensor(&id1, &d), BoxOperator::face(2, 2, 0));
        let s = BoxOperator::degeneracy(1, 1);
        assert_eq!(BoxOperator::tensor(&s, &s).degeneracies(), vec![1, 2]);
    }

    #[test]
    fn parse_and_print() {
        let x = op("s1;g1,0");
        assert_eq!(x.src_dim(), 3);
        assert_eq!(x.to_string(), "s1;g1,0");
        assert_eq!(op("id").to_string(), "id");
        assert_eq!(op("d1,0;s1").to_string(), "id");
        assert!(BoxOperator::parse("q3", None).is_err());
        assert!(BoxOperator::parse("g1,0", Some(1)).is_err());
        let y = op("g2,1;g1,1");
        assert_eq!(y.connections(), vec![(1, 1), (2, 1)]);
        assert_eq!(y.to_string(), "g2,1;g1,1");
        // γ1,1 γ1,1 rewrites to γ1,1 γ2,1
        assert_eq!(op("g1,1;g1,1"), y);
    }

    #[test]
    fn sections_split_downs() {
        for n in 0..=4 {
            for d in BoxOperator::downs(n).iter() {
                let s = d.section();
                assert!(s.is_up(), "{d:?} -> {s:?}");
                assert!(d.after(&s).is_identity(), "{d:?} -> {s:?}");
            }
        }
    }

    #[test]
    fn peel_face_roundtrip() {
        let up = BoxOperator::from_normal_form(1, &[(3, 1), (1, 0)], &[], &[]).unwrap();
        let (g, rest) = up.peel_face().unwrap();
        assert_eq!(g, 2 * 2 + 1);
        assert_eq!(<BoxOperator as Operator>::face(3, g).after(&rest), up);
    }
}
