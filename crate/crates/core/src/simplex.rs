//! The simplex category: monotone maps `[m] → [n]`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::operator::Operator;

/// A monotone map `[m] → [n]`, stored as its list of values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplicialOperator {
    tgt: usize,
    values: Vec<usize>,
}

impl SimplicialOperator {
    pub fn new(tgt: usize, values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Parameter("a simplicial operator needs a non-empty source".into()));
        }
        if !values.windows(2).all(|w| w[0] <= w[1]) || values.iter().any(|&v| v > tgt) {
            return Err(Error::Parameter(format!("{values:?} is not a monotone map into [{tgt}]")));
        }
        Ok(SimplicialOperator { tgt, values })
    }

    /// `δ_j: [n-1] → [n]`, skipping `j`.
    pub fn face(n: usize, j: usize) -> Self {
        assert!(n >= 1 && j <= n, "face δ^{n}_{j} out of range");
        SimplicialOperator { tgt: n, values: (0..=n).filter(|&v| v != j).collect() }
    }

    /// `σ_j: [n+1] → [n]`, repeating `j`.
    pub fn degeneracy(n: usize, j: usize) -> Self {
        assert!(j <= n, "degeneracy σ^{n}_{j} out of range");
        let mut values: Vec<usize> = (0..=n).collect();
        values.insert(j, j);
        SimplicialOperator { tgt: n, values }
    }

    /// The front face `[p] → [p+q]`, `i ↦ i`.
    pub fn front(p: usize, q: usize) -> Self {
        SimplicialOperator { tgt: p + q, values: (0..=p).collect() }
    }

    /// The back face `[q] → [p+q]`, `i ↦ p + i`.
    pub fn back(p: usize, q: usize) -> Self {
        SimplicialOperator { tgt: p + q, values: (p..=p + q).collect() }
    }

    /// The vertex `[0] → [n]` at `i`.
    pub fn vertex(n: usize, i: usize) -> Self {
        SimplicialOperator { tgt: n, values: vec![i] }
    }

    /// The join `α ⋆ id_{[k]}: [m + k + 1] → [n + k + 1]`.
    pub fn join_identity(&self, k: usize) -> Self {
        let mut values = self.values.clone();
        values.extend((0..=k).map(|i| self.tgt + 1 + i));
        SimplicialOperator { tgt: self.tgt + k + 1, values }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.values[0] == 0 && *self.values.last().unwrap() == self.tgt && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// Indices `j` with `values[j] = values[j+1]`, increasing.
    pub fn degeneracies(&self) -> Vec<usize> {
        (0..self.values.len() - 1).filter(|&j| self.values[j] == self.values[j + 1]).collect()
    }

    /// Vertices of the target missed by the image, increasing.
    pub fn faces(&self) -> Vec<usize> {
        (0..=self.tgt).filter(|v| !self.values.contains(v)).collect()
    }

    /// All monotone surjections out of `[n]`.
    pub fn surjections(n: usize) -> Vec<SimplicialOperator> {
        (0..1usize << n)
            .map(|mask| {
                let mut values = vec![0];
                for j in 0..n {
                    let last = *values.last().unwrap();
                    values.push(if mask >> j & 1 == 1 { last } else { last + 1 });
                }
                let tgt = *values.last().unwrap();
                SimplicialOperator { tgt, values }
            })
            .collect()
    }

    /// All monotone injections `[m] → [n]`.
    pub fn injections(m: usize, n: usize) -> Vec<SimplicialOperator> {
        fn go(start: usize, left: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<SimplicialOperator>) {
            if left == 0 {
                out.push(SimplicialOperator { tgt: n, values: cur.clone() });
                return;
            }
            for v in start..=n {
                if n - v + 1 < left {
                    break;
                }
                cur.push(v);
                go(v + 1, left - 1, n, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if m <= n {
            go(0, m + 1, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

fn surjection_cache() -> &'static Mutex<HashMap<usize, Arc<Vec<SimplicialOperator>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<SimplicialOperator>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

impl Operator for SimplicialOperator {
    fn src_dim(&self) -> usize {
        self.values.len() - 1
    }

    fn tgt_dim(&self) -> usize {
        self.tgt
    }

    fn identity(n: usize) -> Self {
        SimplicialOperator { tgt: n, values: (0..=n).collect() }
    }

    fn is_identity(&self) -> bool {
        self.values.len() == self.tgt + 1 && self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    fn after(&self, first: &Self) -> Self {
        debug_assert_eq!(self.src_dim(), first.tgt);
        SimplicialOperator { tgt: self.tgt, values: first.values.iter().map(|&v| self.values[v]).collect() }
    }

    fn split(&self) -> (Self, Self) {
        let mut image = self.values.clone();
        image.dedup();
        let mut down = Vec::with_capacity(self.values.len());
        let mut rank = 0;
        for (i, &v) in self.values.iter().enumerate() {
            if i > 0 && v != self.values[i - 1] {
                rank += 1;
            }
            down.push(rank);
        }
        let k = image.len() - 1;
        (SimplicialOperator { tgt: k, values: down }, SimplicialOperator { tgt: self.tgt, values: image })
    }

    fn is_down(&self) -> bool {
        self.is_surjective()
    }

    fn is_up(&self) -> bool {
        self.is_injective()
    }

    fn face_count(n: usize) -> usize {
        if n == 0 {
            0
        } else {
            n + 1
        }
    }

    fn face(n: usize, g: usize) -> Self {
        SimplicialOperator::face(n, g)
    }

    fn peel_face(&self) -> Option<(usize, Self)> {
        let j = (0..=self.tgt).rev().find(|v| !self.values.contains(v))?;
        let values = self.values.iter().map(|&v| if v > j { v - 1 } else { v }).collect();
        Some((j, SimplicialOperator { tgt: self.tgt - 1, values }))
    }

    fn face_key(g: usize) -> String {
        g.to_string()
    }

    fn parse_face_key(key: &str, n: usize) -> Option<usize> {
        let j: usize = key.trim().parse().ok()?;
        (n >= 1 && j <= n).then_some(j)
    }

    fn downs(n: usize) -> Arc<Vec<Self>> {
        if let Some(v) = surjection_cache().lock().unwrap().get(&n) {
            return v.clone();
        }
        let mut all = SimplicialOperator::surjections(n);
        all.sort_by(|a, b| b.tgt.cmp(&a.tgt).then_with(|| a.cmp(b)));
        let all = Arc::new(all);
        surjection_cache().lock().unwrap().insert(n, all.clone());
        all
    }

    fn generator_downs(n: usize) -> Vec<Self> {
        if n == 0 {
            return Vec::new();
        }
        (0..n).map(|j| SimplicialOperator::degeneracy(n - 1, j)).collect()
    }

    fn section(&self) -> Self {
        let values = (0..=self.tgt).map(|t| self.values.iter().position(|&v| v == t).unwrap_or(0)).collect();
        SimplicialOperator { tgt: self.src_dim(), values }
    }

    fn parse(text: &str, src: Option<usize>) -> Result<Self> {
        let text = text.trim();
        let tokens: Vec<&str> = if text.is_empty() || text == "id" {
            Vec::new()
        } else {
            text.split(';').map(str::trim).filter(|t| *t != "id").collect()
        };
        let bad = |t: &str| Error::Parse(format!("bad simplicial generator `{t}`"));
        let mut word = Vec::new();
        for t in &tokens {
            let (kind, body) = t.split_at(1);
            let j: usize = body.trim().parse().map_err(|_| bad(t))?;
            match kind {
                "d" | "s" => word.push((kind == "d", j)),
                _ => return Err(bad(t)),
            }
        }
        let mut delta: isize = 0;
        let mut need: isize = 0;
        for &(is_face, j) in &word {
            // δ_j on an m-simplex needs j ≤ m + 1; σ_j needs j ≤ m - 1
            let req = if is_face { j as isize - 1 } else { j as isize + 1 };
            need = need.max(req - delta);
            delta += if is_face { 1 } else { -1 };
        }
        let src = src.unwrap_or(need.max(0) as usize);
        let mut acc = SimplicialOperator::identity(src);
        for (pos, &(is_face, j)) in word.iter().enumerate() {
            let cur = acc.tgt;
            let step = if is_face {
                if j > cur + 1 {
                    return Err(Error::Composition { position: pos, message: format!("δ_{j} undefined on dimension {cur}") });
                }
                SimplicialOperator::face(cur + 1, j)
            } else {
                if cur == 0 || j >= cur {
                    return Err(Error::Composition { position: pos, message: format!("σ_{j} undefined on dimension {cur}") });
                }
                SimplicialOperator::degeneracy(cur - 1, j)
            };
            acc = step.after(&acc);
        }
        Ok(acc)
    }

    fn reversed(&self) -> Self {
        let m = self.src_dim();
        let values = (0..=m).map(|i| self.tgt - self.values[m - i]).collect();
        SimplicialOperator { tgt: self.tgt, values }
    }

    fn reversed_face(n: usize, g: usize) -> usize {
        n - g
    }
}

impl fmt::Display for SimplicialOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut word: Vec<String> = self.degeneracies().into_iter().rev().map(|j| format!("s{j}")).collect();
        word.extend(self.faces().into_iter().map(|j| format!("d{j}")));
        if word.is_empty() {
            write!(f, "id")
        } else {
            write!(f, "{}", word.join(";"))
        }
    }
}

impl fmt::Debug for SimplicialOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}→{}] {:?}", self.src_dim(), self.tgt, self.values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_roundtrip() {
        for n in 0..=3 {
            for s in SimplicialOperator::surjections(n) {
                for i in SimplicialOperator::injections(s.tgt, s.tgt + 2) {
                    let op = i.after(&s);
                    let parsed = SimplicialOperator::parse(&op.to_string(), Some(op.src_dim())).unwrap();
                    assert_eq!(parsed, op, "{op}");
                }
            }
        }
    }

    #[test]
    fn split_recomposes() {
        let op = SimplicialOperator::new(4, vec![0, 0, 2, 3, 3]).unwrap();
        let (d, u) = op.split();
        assert!(d.is_surjective() && u.is_injective());
        assert_eq!(u.after(&d), op);
    }

    #[test]
    fn sections_and_faces() {
        for n in 0..=4 {
            for d in SimplicialOperator::downs(n).iter() {
                assert!(d.after(&d.section()).is_identity());
            }
        }
        let up = SimplicialOperator::new(4, vec![0, 2, 4]).unwrap();
        let (j, rest) = up.peel_face().unwrap();
        assert_eq!(j, 3);
        assert_eq!(SimplicialOperator::face(4, j).after(&rest), up);
    }

    #[test]
    fn front_back_and_join() {
        assert_eq!(SimplicialOperator::front(1, 2).values(), &[0, 1]);
        assert_eq!(SimplicialOperator::back(1, 2).values(), &[1, 2, 3]);
        let a = SimplicialOperator::face(1, 0);
        assert_eq!(a.join_identity(0).values(), &[1, 2]);
    }
}
