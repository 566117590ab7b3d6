//! Box-operator normal forms against an independent vertex-function model,
//! and the cubical identities.

use std::collections::HashMap;

use super::{Recorder, SuiteParams};
use crate::boxcat::{BoxOperator, Generator, Vertex};
use crate::operator::Operator;

const WORD_LENGTH: usize = 4;

/// Direct model of a generator on bit vectors.
fn apply(g: Generator, v: &[bool]) -> Vec<bool> {
    let mut out = v.to_vec();
    match g {
        Generator::Face(i, e) => out.insert(i - 1, e == 1),
        Generator::Degeneracy(i) => {
            out.remove(i - 1);
        }
        Generator::Connection(i, e) => {
            let (a, b) = (out[i - 1], out[i]);
            out[i - 1] = if e == 1 { a || b } else { a && b };
            out.remove(i);
        }
    }
    out
}

fn model(word: &[Generator], src: usize) -> Vec<Vertex> {
    Vertex::all(src).into_iter().map(|v| Vertex(word.iter().fold(v.0, |acc, &g| apply(g, &acc)))).collect()
}

fn generators(dim: usize, max: usize) -> Vec<Generator> {
    let mut out = Vec::new();
    if dim < max {
        for i in 1..=dim + 1 {
            out.extend([Generator::Face(i, 0), Generator::Face(i, 1)]);
        }
    }
    for i in 1..=dim {
        out.push(Generator::Degeneracy(i));
    }
    for i in 1..dim {
        out.extend([Generator::Connection(i, 0), Generator::Connection(i, 1)]);
    }
    out
}

fn words(src: usize, max: usize, len: usize) -> Vec<Vec<Generator>> {
    let mut out = Vec::new();
    let mut frontier = vec![(Vec::new(), src)];
    for _ in 0..len {
        let mut next = Vec::new();
        for (w, d) in frontier {
            for g in generators(d, max) {
                let mut w2: Vec<Generator> = w.clone();
                w2.push(g);
                next.push((w2, g.tgt_dim(d).unwrap()));
            }
        }
        out.extend(next.iter().map(|(w, _)| w.clone()));
        frontier = next;
    }
    out
}

pub(super) fn oracle(rec: &mut Recorder, params: &SuiteParams) {
    let max = params.dim(4);
    let mut total = 0usize;
    let mut compose_bad = None;
    let mut roundtrip_bad = None;
    // (src, tgt) -> normal form text -> vertex function
    let mut forms: HashMap<(usize, usize), HashMap<String, Vec<Vertex>>> = HashMap::new();
    for src in 0..=max {
        for w in words(src, max, WORD_LENGTH) {
            total += 1;
            let expected = model(&w, src);
            let steps: Vec<BoxOperator> = {
                let mut d = src;
                let mut ops: Vec<BoxOperator> = w
                    .iter()
                    .map(|g| {
                        let op = g.at(d).unwrap();
                        d = op.tgt_dim();
                        op
                    })
                    .collect();
                ops.reverse();
                ops
            };
            let op = match BoxOperator::compose(&steps) {
                Ok(op) => op,
                Err(e) => {
                    compose_bad.get_or_insert_with(|| format!("{w:?}: {e}"));
                    continue;
                }
            };
            if op.vertex_function() != expected || BoxOperator::from_word(&w, src).ok().as_ref() != Some(&op) {
                compose_bad.get_or_insert_with(|| format!("{} from dimension {src}", fmt_word(&w)));
            }
            let nf = op.word();
            let reparsed = BoxOperator::parse(&op.to_string(), Some(src));
            if BoxOperator::from_word(&nf, src).ok().as_ref() != Some(&op) || reparsed.ok().as_ref() != Some(&op) {
                roundtrip_bad.get_or_insert_with(|| format!("{op} from dimension {src}"));
            }
            forms.entry((src, op.tgt_dim())).or_default().insert(op.to_string(), expected);
        }
    }
    rec.check(format!("compose agrees with the vertex model on {total} words"), compose_bad.is_none(), || {
        compose_bad.clone().unwrap()
    });
    rec.check("normal forms rebuild and reparse to the same operator", roundtrip_bad.is_none(), || roundtrip_bad.clone().unwrap());
    let mut keys: Vec<_> = forms.keys().copied().collect();
    keys.sort();
    let mut bad = Vec::new();
    let mut pairs = 0;
    for k in keys {
        let per = &forms[&k];
        let mut seen: HashMap<&Vec<Vertex>, &String> = HashMap::new();
        for (nf, vf) in per {
            if let Some(other) = seen.insert(vf, nf) {
                bad.push(format!("{k:?}: {nf} and {other}"));
            }
        }
        pairs += 1;
    }
    rec.check(format!("distinct normal forms have distinct vertex functions ({pairs} dimension pairs)"), bad.is_empty(), || {
        bad.join("; ")
    });
}

fn fmt_word(w: &[Generator]) -> String {
    w.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(";")
}

/// The composite of a word written in `∘` order, if every step is defined.
fn comp(word_circ: &[Generator], src: usize) -> Option<BoxOperator> {
    let mut w = word_circ.to_vec();
    w.reverse();
    BoxOperator::from_word(&w, src).ok()
}

struct Family {
    name: &'static str,
    instances: usize,
    failure: Option<String>,
}

impl Family {
    fn new(name: &'static str) -> Self {
        Family { name, instances: 0, failure: None }
    }

    fn expect(&mut self, src: usize, lhs: &[Generator], rhs: &[Generator]) {
        let (l, r) = (comp(lhs, src), comp(rhs, src));
        self.instances += 1;
        let ok = match (&l, &r) {
            (Some(a), Some(b)) => a.vertex_function() == b.vertex_function() && a == b,
            _ => false,
        };
        if !ok && self.failure.is_none() {
            self.failure = Some(format!("{} = {} from dimension {src}", fmt_circ(lhs), fmt_circ(rhs)));
        }
    }

    fn record(self, rec: &mut Recorder) {
        let name = format!("{} ({} instances)", self.name, self.instances);
        let failure = self.failure;
        rec.check(name, failure.is_none() && self.instances > 0, || failure.unwrap_or_else(|| "no instances".into()));
    }
}

fn fmt_circ(w: &[Generator]) -> String {
    if w.is_empty() {
        "id".into()
    } else {
        w.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ∘ ")
    }
}

pub(super) fn identities(rec: &mut Recorder, params: &SuiteParams) {
    use Generator::{Connection as G, Degeneracy as S, Face as D};
    let max = params.dim(4);
    let signs = [0u8, 1];

    let mut f = Family::new("faces commute past faces");
    for n in 2..=max {
        for i in 1..n {
            for j in 1..=i {
                for e in signs {
                    for d in signs {
                        f.expect(n - 2, &[D(j, e), D(i, d)], &[D(i + 1, d), D(j, e)]);
                    }
                }
            }
        }
    }
    f.record(rec);

    let mut f = Family::new("degeneracies commute past degeneracies");
    for n in 2..=max {
        for i in 1..n {
            for j in 1..=i {
                f.expect(n, &[S(i), S(j)], &[S(j), S(i + 1)]);
            }
        }
    }
    f.record(rec);

    let mut f = Family::new("degeneracies after faces");
    for n in 1..=max {
        for i in 1..=n {
            for j in 1..=n {
                for e in signs {
                    let rhs: Vec<Generator> = match j.cmp(&i) {
                        std::cmp::Ordering::Less => vec![D(i - 1, e), S(j)],
                        std::cmp::Ordering::Equal => vec![],
                        std::cmp::Ordering::Greater => vec![D(i, e), S(j - 1)],
                    };
                    f.expect(n - 1, &[S(j), D(i, e)], &rhs);
                }
            }
        }
    }
    f.record(rec);

    let mut f = Family::new("connections after connections");
    for n in 3..=max {
        for i in 1..n {
            for j in 1..n - 1 {
                for e in signs {
                    for d in signs {
                        if j > i {
                            f.expect(n, &[G(j, e), G(i, d)], &[G(i, d), G(j + 1, e)]);
                        } else if j == i && d == e {
                            f.expect(n, &[G(i, e), G(i, d)], &[G(i, d), G(i + 1, d)]);
                        }
                    }
                }
            }
        }
    }
    f.record(rec);

    let mut f = Family::new("connections after faces");
    for n in 2..=max {
        for i in 1..=n {
            for j in 1..n {
                for e in signs {
                    for d in signs {
                        let rhs: Vec<Generator> = if j + 1 < i {
                            vec![D(i - 1, d), G(j, e)]
                        } else if j + 1 == i || j == i {
                            if d != e {
                                vec![]
                            } else {
                                vec![D(j, d), S(j)]
                            }
                        } else {
                            vec![D(i, d), G(j - 1, e)]
                        };
                        f.expect(n - 1, &[G(j, e), D(i, d)], &rhs);
                    }
                }
            }
        }
    }
    f.record(rec);

    let mut f = Family::new("degeneracies after connections");
    for n in 2..=max {
        for i in 1..n {
            for j in 1..n {
                for d in signs {
                    let rhs: Vec<Generator> = match j.cmp(&i) {
                        std::cmp::Ordering::Less => vec![G(i - 1, d), S(j)],
                        std::cmp::Ordering::Equal => vec![S(i), S(i)],
                        std::cmp::Ordering::Greater => vec![G(i, d), S(j + 1)],
                    };
                    f.expect(n, &[S(j), G(i, d)], &rhs);
                }
            }
        }
    }
    f.record(rec);
}
