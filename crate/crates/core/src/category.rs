//! Finite categories given by explicit composition tables.

use std::collections::HashMap;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowData {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite category.  `compose[(g, f)] = g ∘ f` for composable `f`, `g`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FiniteCategory {
    pub objects: Vec<String>,
    pub arrows: Vec<ArrowData>,
    pub identities: Vec<usize>,
    pub compose: HashMap<(usize, usize), usize>,
}

impl FiniteCategory {
    pub fn new() -> Self {
        Self::default()
    }

    /// Add an object together with its identity arrow.
    pub fn add_object(&mut self, name: impl Into<String>) -> usize {
        let name = name.into();
        let a = self.objects.len();
        let id = self.arrows.len();
        self.arrows.push(ArrowData { name: format!("id_{name}"), src: a, tgt: a });
        self.objects.push(name);
        self.identities.push(id);
        self.compose.insert((id, id), id);
        a
    }

    /// Add a non-identity arrow; composites with identities are filled in.
    pub fn add_arrow(&mut self, name: impl Into<String>, src: usize, tgt: usize) -> usize {
        let f = self.arrows.len();
        self.arrows.push(ArrowData { name: name.into(), src, tgt });
        self.compose.insert((f, self.identities[src]), f);
        self.compose.insert((self.identities[tgt], f), f);
        f
    }

    pub fn set_composite(&mut self, g: usize, f: usize, h: usize) {
        self.compose.insert((g, f), h);
    }

    pub fn src(&self, f: usize) -> usize {
        self.arrows[f].src
    }

    pub fn tgt(&self, f: usize) -> usize {
        self.arrows[f].tgt
    }

    /// `g ∘ f`, if composable and defined.
    pub fn comp(&self, g: usize, f: usize) -> Option<usize> {
        self.compose.get(&(g, f)).copied()
    }

    pub fn hom(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&f| self.arrows[f].src == a && self.arrows[f].tgt == b).collect()
    }

    pub fn is_invertible(&self, f: usize) -> bool {
        let (a, b) = (self.src(f), self.tgt(f));
        self.hom(b, a).into_iter().any(|g| {
            self.comp(g, f) == Some(self.identities[a]) && self.comp(f, g) == Some(self.identities[b])
        })
    }

    /// Check the category axioms.
    pub fn validate(&self) -> Result<()> {
        let n = self.arrows.len();
        for (a, &id) in self.identities.iter().enumerate() {
            if self.src(id) != a || self.tgt(id) != a {
                return Err(Error::Integrity(format!("identity of `{}` has wrong endpoints", self.objects[a])));
            }
        }
        for f in 0..n {
            for g in 0..n {
                let composable = self.tgt(f) == self.src(g);
                match (composable, self.comp(g, f)) {
                    (true, None) => {
                        return Err(Error::Integrity(format!(
                            "missing composite of `{}` then `{}`",
                            self.arrows[f].name, self.arrows[g].name
                        )))
                    }
                    (false, Some(_)) => {
                        return Err(Error::Integrity(format!(
                            "composite of non-composable `{}` and `{}`",
                            self.arrows[f].name, self.arrows[g].name
                        )))
                    }
                    (true, Some(h)) if self.src(h) != self.src(f) || self.tgt(h) != self.tgt(g) => {
                        return Err(Error::Integrity(format!(
                            "composite of `{}` then `{}` has the wrong endpoints",
                            self.arrows[f].name, self.arrows[g].name
                        )))
                    }
                    _ => {}
                }
            }
            if self.comp(f, self.identities[self.src(f)]) != Some(f) || self.comp(self.identities[self.tgt(f)], f) != Some(f) {
                return Err(Error::Integrity(format!("unit law fails for `{}`", self.arrows[f].name)));
            }
        }
        for f in 0..n {
            for g in self.hom_from(self.tgt(f)) {
                for h in self.hom_from(self.tgt(g)) {
                    let left = self.comp(h, self.comp(g, f).unwrap());
                    let right = self.comp(self.comp(h, g).unwrap(), f);
                    if left != right {
                        return Err(Error::Integrity(format!(
                            "associativity fails for `{}`, `{}`, `{}`",
                            self.arrows[f].name, self.arrows[g].name, self.arrows[h].name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn hom_from(&self, a: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&f| self.arrows[f].src == a).collect()
    }

    /// The poset on `0..n` generated by the given relations `i ≤ j`.
    pub fn poset(n: usize, relations: &[(usize, usize)]) -> Result<Self> {
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in relations {
            if i >= n || j >= n {
                return Err(Error::Parameter(format!("relation {i} ≤ {j} outside 0..{n}")));
            }
            le[i][j] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if le[i][k] && le[k][j] {
                        le[i][j] = true;
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && le[i][j] && le[j][i] {
                    return Err(Error::Parameter(format!("relations identify {i} and {j}")));
                }
            }
        }
        let mut c = FiniteCategory::new();
        for i in 0..n {
            c.add_object(i.to_string());
        }
        let mut arrow = HashMap::new();
        for i in 0..n {
            arrow.insert((i, i), c.identities[i]);
            for j in 0..n {
                if i != j && le[i][j] {
                    arrow.insert((i, j), c.add_arrow(format!("{i}<{j}"), i, j));
                }
            }
        }
        for (&(i, j), &f) in &arrow {
            for (&(j2, k), &g) in &arrow {
                if j == j2 {
                    c.set_composite(g, f, arrow[&(i, k)]);
                }
            }
        }
        Ok(c)
    }

    /// The chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Self {
        let rel: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        FiniteCategory::poset(n, &rel).expect("a chain is a poset")
    }

    /// Two objects and a pair of mutually inverse arrows.
    pub fn free_isomorphism() -> Self {
        let mut c = FiniteCategory::new();
        let a = c.add_object("a");
        let b = c.add_object("b");
        let f = c.add_arrow("f", a, b);
        let g = c.add_arrow("g", b, a);
        c.set_composite(g, f, c.identities[a]);
        c.set_composite(f, g, c.identities[b]);
        c
    }

    /// The category freely generated by a commuting square.
    pub fn commuting_square() -> Self {
        FiniteCategory::poset(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).expect("the square is a poset")
    }

    pub fn opposite(&self) -> Self {
        let mut c = self.clone();
        for a in c.arrows.iter_mut() {
            std::mem::swap(&mut a.src, &mut a.tgt);
        }
        c.compose = self.compose.iter().map(|(&(g, f), &h)| ((f, g), h)).collect();
        c
    }

    /// Whether there is an isomorphism of categories `self → other`.
    pub fn is_isomorphic(&self, other: &FiniteCategory) -> bool {
        self.find_isomorphism(other).is_some()
    }

    /// An isomorphism as (object map, arrow map).
    pub fn find_isomorphism(&self, other: &FiniteCategory) -> Option<(Vec<usize>, Vec<usize>)> {
        if self.objects.len() != other.objects.len() || self.arrows.len() != other.arrows.len() {
            return None;
        }
        let n = self.objects.len();
        let mut obj = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.iso_objects(other, 0, &mut obj, &mut used)
    }

    fn iso_objects(&self, other: &FiniteCategory, a: usize, obj: &mut Vec<usize>, used: &mut Vec<bool>) -> Option<(Vec<usize>, Vec<usize>)> {
        if a == obj.len() {
            for x in 0..obj.len() {
                for y in 0..obj.len() {
                    if self.hom(x, y).len() != other.hom(obj[x], obj[y]).len() {
                        return None;
                    }
                }
            }
            let mut arr = vec![usize::MAX; self.arrows.len()];
            let pairs: Vec<(usize, usize)> = (0..obj.len()).flat_map(|x| (0..obj.len()).map(move |y| (x, y))).collect();
            return self.iso_arrows(other, obj, &pairs, 0, &mut arr).map(|arr| (obj.clone(), arr));
        }
        for b in 0..obj.len() {
            if !used[b] {
                used[b] = true;
                obj[a] = b;
                if let Some(r) = self.iso_objects(other, a + 1, obj, used) {
                    return Some(r);
                }
                used[b] = false;
            }
        }
        None
    }

    fn iso_arrows(&self, other: &FiniteCategory, obj: &[usize], pairs: &[(usize, usize)], p: usize, arr: &mut Vec<usize>) -> Option<Vec<usize>> {
        if p == pairs.len() {
            let functorial = self.compose.iter().all(|(&(g, f), &h)| other.comp(arr[g], arr[f]) == Some(arr[h]));
            let ids = self.identities.iter().enumerate().all(|(a, &i)| arr[i] == other.identities[obj[a]]);
            return (functorial && ids).then(|| arr.clone());
        }
        let (x, y) = pairs[p];
        let src = self.hom(x, y);
        let dst = other.hom(obj[x], obj[y]);
        let mut perm: Vec<usize> = (0..dst.len()).collect();
        loop {
            for (i, &f) in src.iter().enumerate() {
                arr[f] = dst[perm[i]];
            }
            if let Some(r) = self.iso_arrows(other, obj, pairs, p + 1, arr) {
                return Some(r);
            }
            if !next_permutation(&mut perm) {
                return None;
            }
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_categories() {
        FiniteCategory::chain(4).validate().unwrap();
        FiniteCategory::free_isomorphism().validate().unwrap();
        FiniteCategory::commuting_square().validate().unwrap();
        FiniteCategory::commuting_square().opposite().validate().unwrap();
    }

    #[test]
    fn isomorphism_search() {
        let c = FiniteCategory::chain(3);
        assert!(c.is_isomorphic(&c.opposite()));
        let v = FiniteCategory::poset(3, &[(0, 1), (0, 2)]).unwrap();
        assert!(!v.is_isomorphic(&v.opposite()));
        assert!(!c.is_isomorphic(&v));
        let iso = FiniteCategory::free_isomorphism();
        assert!(iso.is_invertible(2));
        assert!(!c.is_invertible(c.hom(0, 1)[0]));
    }
}
