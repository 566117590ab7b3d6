//! Triangulation of marked cubical sets: the simplices of the cubes
//! `(Δ¹)ⁿ`, the functor `T` to marked simplicial sets, its monoidal
//! comparison maps and the pivot construction used to study them.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::boxcat::{BoxOperator, Vertex};
use crate::cubeset::{pattern_operator, CubicalArrow, MarkedCubicalSet, Pattern};
use crate::error::{Error, Result};
use crate::gray::{tensor, TensorMode};
use crate::operator::Operator;
use crate::presheaf::{Arrow, Cube, PresheafMap};
use crate::simplex::SimplicialOperator;
use crate::simpset::{pair_product, precomplicial_reflect, MarkedSimplicialSet, ProductKind, Simplex, SimplicialArrow};

/// The level at which a coordinate switches from 0 to 1 along a simplex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    /// Already 1 at the first vertex.
    NegInf,
    Fin(usize),
    /// Still 0 at the last vertex.
    PosInf,
}

impl Level {
    pub fn is_finite(self) -> bool {
        matches!(self, Level::Fin(_))
    }
}

/// An `r`-simplex of `(Δ¹)ⁿ`, written as a function `{1..n} → {1..r, ±∞}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeSimplex {
    r: usize,
    phi: Vec<Level>,
}

impl CubeSimplex {
    pub fn new(r: usize, phi: Vec<Level>) -> Result<Self> {
        if let Some(bad) = phi.iter().find(|l| matches!(l, Level::Fin(p) if *p == 0 || *p > r)) {
            return Err(Error::Parameter(format!("level {bad:?} outside 1..={r}")));
        }
        Ok(CubeSimplex { r, phi })
    }

    /// `ιₙ`, the identity regarded as an `n`-simplex.
    pub fn iota(n: usize) -> Self {
        CubeSimplex { r: n, phi: (1..=n).map(Level::Fin).collect() }
    }

    /// The cube dimension `n`.
    pub fn n(&self) -> usize {
        self.phi.len()
    }

    /// The simplex dimension `r`.
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn phi(&self) -> &[Level] {
        &self.phi
    }

    /// `φ(i)` for `1 ≤ i ≤ n`.
    pub fn at(&self, i: usize) -> Level {
        self.phi[i - 1]
    }

    pub fn is_nondegenerate(&self) -> bool {
        (1..=self.r).all(|p| self.phi.contains(&Level::Fin(p)))
    }

    pub fn is_identity(&self) -> bool {
        *self == CubeSimplex::iota(self.n())
    }

    /// The `t`-th vertex, as a vertex of `[1]ⁿ`.
    pub fn vertex(&self, t: usize) -> Vertex {
        Vertex(
            self.phi
                .iter()
                .map(|l| match *l {
                    Level::NegInf => true,
                    Level::Fin(p) => p <= t,
                    Level::PosInf => false,
                })
                .collect(),
        )
    }

    /// The simplex through a monotone chain of vertices of `[1]ⁿ`.
    pub fn from_vertices(chain: &[Vertex]) -> Result<Self> {
        let r = chain.len().checked_sub(1).ok_or_else(|| Error::Parameter("empty vertex chain".into()))?;
        let n = chain[0].dim();
        let mut phi = Vec::with_capacity(n);
        for i in 0..n {
            let first = chain.iter().position(|v| v.0[i]);
            if let Some(t) = first {
                if chain[t..].iter().any(|v| !v.0[i]) {
                    return Err(Error::Parameter("vertex chain is not monotone".into()));
                }
            }
            phi.push(match first {
                Some(0) => Level::NegInf,
                Some(t) => Level::Fin(t),
                None => Level::PosInf,
            });
        }
        Ok(CubeSimplex { r, phi })
    }

    /// `φ · α` for a simplicial operator `α: [q] → [r]`.
    pub fn act(&self, alpha: &SimplicialOperator) -> Self {
        assert_eq!(alpha.tgt_dim(), self.r, "operator target must match the simplex dimension");
        let a = alpha.values();
        let q = alpha.src_dim();
        let phi = self
            .phi
            .iter()
            .map(|&l| match l {
                Level::NegInf => Level::NegInf,
                Level::PosInf => Level::PosInf,
                Level::Fin(v) if v <= a[0] => Level::NegInf,
                Level::Fin(v) if v > a[q] => Level::PosInf,
                Level::Fin(v) => Level::Fin((1..=q).find(|&p| a[p - 1] < v && v <= a[p]).unwrap()),
            })
            .collect();
        CubeSimplex { r: q, phi }
    }

    /// The image under the simplicial map `(Δ¹)ᵐ → (Δ¹)ⁿ` induced by a box operator `[1]ᵐ → [1]ⁿ`.
    pub fn push_forward(&self, op: &BoxOperator) -> Self {
        assert_eq!(op.src_dim(), self.n(), "operator source must match the cube dimension");
        let chain: Vec<Vertex> = (0..=self.r).map(|t| op.evaluate(&self.vertex(t)).unwrap()).collect();
        CubeSimplex::from_vertices(&chain).expect("box operators are monotone")
    }

    /// Factor `φ = φ' · s` with `s` a degeneracy operator and `φ'` non-degenerate.
    pub fn collapse(&self) -> (SimplicialOperator, CubeSimplex) {
        let used: BTreeSet<usize> = self.phi.iter().filter_map(|l| if let Level::Fin(p) = l { Some(*p) } else { None }).collect();
        let rank: HashMap<usize, usize> = used.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
        let values = (0..=self.r).map(|t| used.iter().filter(|&&p| p <= t).count()).collect();
        let s = SimplicialOperator::new(used.len(), values).expect("counting is monotone");
        let phi = self.phi.iter().map(|&l| if let Level::Fin(p) = l { Level::Fin(rank[&p]) } else { l }).collect();
        (s, CubeSimplex { r: used.len(), phi })
    }

    /// Keep the coordinates in `range` (1-based, inclusive on both ends).
    pub fn restrict(&self, from: usize, to: usize) -> Self {
        CubeSimplex { r: self.r, phi: self.phi[from - 1..to].to_vec() }
    }

    /// All non-degenerate `r`-simplices of `(Δ¹)ⁿ` with every coordinate finite.
    pub fn interior(n: usize, r: usize) -> Vec<CubeSimplex> {
        if r > n || (r == 0 && n > 0) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut cur = vec![1usize; n];
        loop {
            let s = CubeSimplex { r, phi: cur.iter().map(|&p| Level::Fin(p)).collect() };
            if s.is_nondegenerate() {
                out.push(s);
            }
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < r {
                    cur[i] += 1;
                    cur[i + 1..].iter_mut().for_each(|c| *c = 1);
                    break;
                }
            }
        }
    }

    /// All non-degenerate simplices of `(Δ¹)ⁿ`.
    pub fn all_nondegenerate(n: usize) -> Vec<CubeSimplex> {
        let mut out = Vec::new();
        let mut cur = vec![0usize; n];
        for r in 0..=n {
            // 0 = -∞, 1..=r finite, r+1 = +∞
            cur.iter_mut().for_each(|c| *c = 0);
            loop {
                let phi = cur
                    .iter()
                    .map(|&c| if c == 0 { Level::NegInf } else if c == r + 1 { Level::PosInf } else { Level::Fin(c) })
                    .collect();
                let s = CubeSimplex { r, phi };
                if s.is_nondegenerate() {
                    out.push(s);
                }
                let mut i = n;
                let mut done = true;
                while i > 0 {
                    i -= 1;
                    if cur[i] < r + 1 {
                        cur[i] += 1;
                        cur[i + 1..].iter_mut().for_each(|c| *c = 0);
                        done = false;
                        break;
                    }
                }
                if done {
                    break;
                }
            }
        }
        out
    }
}

impl fmt::Display for CubeSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = self.r >= 10;
        for (i, l) in self.phi.iter().enumerate() {
            if sep && i > 0 {
                write!(f, ",")?;
            }
            match l {
                Level::NegInf => write!(f, "-")?,
                Level::PosInf => write!(f, "+")?,
                Level::Fin(p) => write!(f, "{p}")?,
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for CubeSimplex {
    type Err = Error;

    /// Parse the compact form `21+` (`-` or `−` for `-∞`, `+` for `+∞`);
    /// the dimension is the largest level present.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<String> =
            if s.contains(',') { s.split(',').map(str::to_string).collect() } else { s.chars().map(String::from).collect() };
        let mut phi = Vec::new();
        for p in parts {
            phi.push(match p.trim() {
                "-" | "−" => Level::NegInf,
                "+" => Level::PosInf,
                d => Level::Fin(d.parse().map_err(|_| Error::Parse(format!("bad level `{d}` in `{s}`")))?),
            });
        }
        let r = phi.iter().filter_map(|l| if let Level::Fin(p) = l { Some(*p) } else { None }).max().unwrap_or(0);
        CubeSimplex::new(r, phi)
    }
}

/// Whether a simplex is marked in the Gray tensor power `(Δ¹)^{⊗n}`:
/// unmarked iff some `i₁ < … < i_r` has `φ(i_p) = p`.  Degenerate simplices
/// are marked and 0-simplices never are.
pub fn is_marked_tp(phi: &CubeSimplex) -> bool {
    if !phi.is_nondegenerate() {
        return true;
    }
    if phi.r == 0 {
        return false;
    }
    let mut p = 1;
    for &l in &phi.phi {
        if p <= phi.r && l == Level::Fin(p) {
            p += 1;
        }
    }
    p <= phi.r
}

/// `D(φ) = |φ⁻¹{1..r}| - r`.
pub fn diagonality(phi: &CubeSimplex) -> isize {
    phi.phi.iter().filter(|l| l.is_finite()).count() as isize - phi.r as isize
}

/// `O(φ)`: pairs `i < j` (1-based) with `φ(i) < φ(j)`.
pub fn disorder(phi: &CubeSimplex) -> Vec<(usize, usize)> {
    let n = phi.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if phi.at(i) < phi.at(j) {
                out.push((i, j));
            }
        }
    }
    out
}

/// The pivot data of a simplex with a repeated level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategyState {
    pub phi: CubeSimplex,
    /// The least level `p` with `|φ⁻¹(p)| ≥ 2`.
    pub p: usize,
    /// `min φ⁻¹(p)`.
    pub i: usize,
    /// `φ̃`, with `φ̃ · δ_p = φ`.
    pub lifted: CubeSimplex,
}

impl StrategyState {
    /// `χ = φ̃ · δ_{p-1}`.
    pub fn chi(&self) -> CubeSimplex {
        self.lifted.act(&SimplicialOperator::face(self.phi.r + 1, self.p - 1))
    }

    /// `ψ = φ̃ · δ_{p+1}`.
    pub fn psi(&self) -> CubeSimplex {
        self.lifted.act(&SimplicialOperator::face(self.phi.r + 1, self.p + 1))
    }
}

pub fn strategy_lift(phi: &CubeSimplex) -> Result<StrategyState> {
    let p = (1..=phi.r).find(|&p| phi.phi.iter().filter(|&&l| l == Level::Fin(p)).count() >= 2).ok_or(Error::NoPivot)?;
    let i = phi.phi.iter().position(|&l| l == Level::Fin(p)).unwrap() + 1;
    let lifted = CubeSimplex {
        r: phi.r + 1,
        phi: phi
            .phi
            .iter()
            .enumerate()
            .map(|(j, &l)| match l {
                Level::Fin(v) if v > p || j + 1 == i => Level::Fin(v + 1),
                Level::PosInf => Level::PosInf,
                other => other,
            })
            .collect(),
    };
    Ok(StrategyState { phi: phi.clone(), p, i, lifted })
}

/// `T(X)`, with the table of pairs `(x, φ)` behind each simplex.
#[derive(Clone, Debug)]
pub struct Triangulation {
    pub object: MarkedSimplicialSet,
    /// `simplices[s] = (x, φ)`: the cell `x` of `X` and an interior simplex of its cube.
    pub simplices: Vec<(usize, CubeSimplex)>,
    index: HashMap<(usize, CubeSimplex), usize>,
}

impl Triangulation {
    pub fn find(&self, x: usize, phi: &CubeSimplex) -> Option<usize> {
        self.index.get(&(x, phi.clone())).copied()
    }

    /// The simplex of `T(X)` given by `φ` in the cube `c` of `X`.
    pub fn normalize(&self, x: &MarkedCubicalSet, c: &Cube<BoxOperator>, phi: &CubeSimplex) -> Simplex {
        let mut cube = c.clone();
        let mut phi = phi.clone();
        loop {
            let psi = phi.push_forward(&cube.op);
            if psi.phi.iter().all(|l| l.is_finite()) {
                let (s, core) = psi.collapse();
                return Cube { op: s, cell: self.index[&(cube.cell, core)] };
            }
            let pattern: Pattern = psi
                .phi
                .iter()
                .map(|l| match l {
                    Level::NegInf => Some(true),
                    Level::PosInf => Some(false),
                    Level::Fin(_) => None,
                })
                .collect();
            cube = x.act(cube.cell, &pattern_operator(&pattern));
            phi = CubeSimplex { r: psi.r, phi: psi.phi.into_iter().filter(|l| l.is_finite()).collect() };
        }
    }
}

/// `T(X)`; with `reflect` the pre-complicial reflection is applied.
pub fn triangulate(x: &MarkedCubicalSet, reflect: bool) -> Triangulation {
    let top = x.max_dim().unwrap_or(0);
    let mut simplices = Vec::new();
    for r in 0..=top {
        for c in 0..x.len() {
            for phi in CubeSimplex::interior(x.dim(c), r) {
                simplices.push((c, phi));
            }
        }
    }
    let index = simplices.iter().cloned().enumerate().map(|(s, p)| (p, s)).collect();
    let mut t = Triangulation { object: MarkedSimplicialSet::new(), simplices: Vec::new(), index };
    for (c, phi) in &simplices {
        let r = phi.r();
        let faces = (0..SimplicialOperator::face_count(r))
            .map(|j| t.normalize(x, &x.top(*c), &phi.act(&SimplicialOperator::face(r, j))))
            .collect();
        let marked = is_marked_tp(phi) || (x.is_marked(*c) && phi.is_identity());
        let id = if phi.n() == 0 { x.id(*c).to_string() } else { format!("{}:{}", x.id(*c), phi) };
        t.object.add_cell(id, r, r > 0 && marked, faces).expect("simplex ids are distinct");
    }
    t.simplices = simplices;
    if reflect {
        t.object = precomplicial_reflect(&t.object);
    }
    t
}

/// `T(f)` between triangulations already computed.
pub fn triangulate_map_between(f: &CubicalArrow, src: &Triangulation, tgt: &Triangulation) -> PresheafMap<SimplicialOperator> {
    PresheafMap { assign: src.simplices.iter().map(|(c, phi)| tgt.normalize(&f.tgt, &f.map.assign[*c], phi)).collect() }
}

pub fn triangulate_map(f: &CubicalArrow, reflect: bool) -> Result<SimplicialArrow> {
    let src = triangulate(&f.src, reflect);
    let tgt = triangulate(&f.tgt, reflect);
    let map = triangulate_map_between(f, &src, &tgt);
    Arrow::new(src.object, tgt.object, map)
}

/// The comparison `T(X ⊙ Y) → T(X) ⊙ T(Y)`.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub arrow: SimplicialArrow,
    pub iso: bool,
    /// A simplex of the source witnessing failure, when `iso` is false.
    pub mismatch: Option<String>,
}

/// Compare `T(X ⊗ Y)` with `T(X) ⊗ T(Y)` (lax) or `T(X ⊛ Y)` with
/// `T(X) ⊛ T(Y)` (pseudo), both sides reflected.
pub fn monoidal_comparison(x: &MarkedCubicalSet, y: &MarkedCubicalSet, mode: TensorMode) -> Result<Comparison> {
    let kind = match mode {
        TensorMode::Lax => ProductKind::Gray,
        TensorMode::Pseudo => ProductKind::Cartesian,
        TensorMode::Geometric => return Err(Error::Unsupported("the comparison needs a lax or pseudo tensor".into())),
    };
    let p = tensor(x, y, mode);
    let tp = triangulate(&p.object, true);
    let (tx, ty) = (triangulate(x, true), triangulate(y, true));
    let q = pair_product(&tx.object, &ty.object, kind);
    let qr = precomplicial_reflect(&q.object);
    let assign: Vec<Simplex> = tp
        .simplices
        .iter()
        .map(|(c, phi)| {
            let (a, b) = p.pairs[*c];
            let k = x.dim(a);
            let u = tx.normalize(x, &x.top(a), &phi.restrict(1, k));
            let v = ty.normalize(y, &y.top(b), &phi.restrict(k + 1, phi.n()));
            q.normalize(&u, &v)
        })
        .collect();
    let map = PresheafMap { assign };
    let mut mismatch = None;
    let mut hit = vec![false; qr.len()];
    for (s, img) in map.assign.iter().enumerate() {
        let bad = if img.is_degenerate() {
            Some("is sent to a degenerate simplex")
        } else if hit[img.cell] {
            Some("shares its image with another simplex")
        } else if tp.object.is_marked(s) != qr.is_marked(img.cell) {
            Some("has a different marking on the two sides")
        } else {
            None
        };
        if let Some(why) = bad {
            mismatch = Some(format!("{} {}", tp.object.id(s), why));
            break;
        }
        hit[img.cell] = true;
    }
    if mismatch.is_none() {
        if let Some(missed) = hit.iter().position(|h| !h) {
            mismatch = Some(format!("{} is not in the image", qr.id(missed)));
        }
    }
    let arrow = Arrow::new(tp.object, qr, map)?;
    let iso = mismatch.is_none() && arrow.is_iso();
    Ok(Comparison { arrow, iso, mismatch })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boxcat::Duality;
    use crate::cubeset::{cube, dual, marked_cube};
    use crate::presheaf::find_iso;
    use crate::simpset::{dual_op, is_precomplicial, verity_gray};

    fn cs(s: &str) -> CubeSimplex {
        s.parse().unwrap()
    }

    #[test]
    fn simplicial_action() {
        let d1 = SimplicialOperator::face(2, 1);
        assert_eq!(CubeSimplex::iota(2).act(&d1), cs("11"));
        let phi = cs("312");
        assert_eq!(phi.act(&SimplicialOperator::front(1, 2)), cs("+1+"));
        assert_eq!(phi.act(&SimplicialOperator::back(1, 2)), cs("2-1"));
        assert_eq!(phi.act(&SimplicialOperator::identity(3)), phi);
        assert_eq!(cs("21-").to_string(), "21-");
    }

    #[test]
    fn action_is_functorial() {
        for phi in CubeSimplex::all_nondegenerate(3) {
            let r = phi.r();
            for m in 0..=r {
                for a in SimplicialOperator::injections(m, r) {
                    for b in SimplicialOperator::surjections(m + 1).into_iter().filter(|b| b.tgt_dim() == m) {
                        assert_eq!(phi.act(&a).act(&b), phi.act(&a.after(&b)));
                    }
                }
            }
        }
    }

    #[test]
    fn vertices_round_trip() {
        for phi in CubeSimplex::all_nondegenerate(3) {
            let chain: Vec<Vertex> = (0..=phi.r()).map(|t| phi.vertex(t)).collect();
            assert_eq!(CubeSimplex::from_vertices(&chain).unwrap(), phi);
        }
    }

    #[test]
    fn pattern_operators_insert_constants() {
        let p: Pattern = vec![Some(true), None, Some(false), None];
        let op = pattern_operator(&p);
        assert_eq!(op.src_dim(), 2);
        assert_eq!(op.evaluate(&Vertex(vec![false, true])).unwrap(), Vertex(vec![true, false, false, true]));
    }

    #[test]
    fn tensor_power_marking() {
        assert!(!is_marked_tp(&CubeSimplex::iota(3)));
        assert!(is_marked_tp(&cs("21")));
        assert!(!is_marked_tp(&cs("12")));
        assert!(is_marked_tp(&cs("11").act(&SimplicialOperator::degeneracy(1, 0))));
        for n in 1..=4 {
            let top: Vec<CubeSimplex> = CubeSimplex::interior(n, n).into_iter().filter(|p| !is_marked_tp(p)).collect();
            assert_eq!(top, vec![CubeSimplex::iota(n)]);
        }
    }

    #[test]
    fn strategy() {
        assert_eq!(diagonality(&CubeSimplex::iota(3)), 0);
        assert_eq!(disorder(&CubeSimplex::iota(2)), vec![(1, 2)]);
        let st = strategy_lift(&cs("11")).unwrap();
        assert_eq!((st.p, st.i), (1, 1));
        assert_eq!(st.lifted, cs("21"));
        assert_eq!(st.lifted.act(&SimplicialOperator::face(2, 1)), cs("11"));
        assert_eq!(strategy_lift(&CubeSimplex::iota(2)), Err(Error::NoPivot));
    }

    #[test]
    fn triangulated_cubes() {
        let fact = [1, 1, 2, 6, 24];
        for n in 0..=3 {
            let t = triangulate(&cube(n), false);
            t.object.validate().unwrap();
            assert_eq!(t.object.cells_of_dim(n).len(), fact[n]);
            assert!(is_precomplicial(&t.object));
            let m = triangulate(&cube(n).truncate(n.saturating_sub(1)), true);
            let unmarked = m.object.cells_of_dim(n).iter().filter(|&&s| !m.object.is_marked(s)).count();
            assert_eq!(unmarked, if n == 0 { 1 } else { 0 });
        }
        assert_eq!(triangulate(&cube(0), true).object.len(), 1);
        let m2 = triangulate(&marked_cube(2), true);
        assert_eq!(m2.object.counts(), vec![4, 5, 2]);
        assert!(m2.object.cells_of_dim(2).iter().all(|&s| m2.object.is_marked(s)));
        assert!(m2.object.cells_of_dim(1).iter().all(|&s| !m2.object.is_marked(s)));
    }

    #[test]
    fn tensor_power_is_gray_power() {
        let i = crate::simpset::simplex(1);
        let g = verity_gray(&i, &i);
        let t = triangulate(&cube(2), false);
        assert!(find_iso(&g.object, &t.object).is_some());
    }

    #[test]
    fn op_compatibility() {
        for x in [cube(2), marked_cube(2), crate::cubeset::comical_cube(3, 2, 0).unwrap()] {
            let lhs = triangulate(&dual(&x, Duality::Op), true).object;
            let rhs = dual_op(&triangulate(&x, true).object);
            assert!(find_iso(&lhs, &rhs).is_some());
        }
    }

    #[test]
    fn maps() {
        let f = Arrow::identity(&cube(2));
        let t = triangulate_map(&f, true).unwrap();
        assert_eq!(t.map, PresheafMap::identity(&t.src));
        let face = Arrow::new(cube(1), cube(2), PresheafMap {
            assign: (0..3).map(|c| cube(2).top(cube(2).find(["0*", "1*", "**"][c]).unwrap())).collect(),
        });
        assert!(face.is_err());
        let c2 = cube(2);
        let incl = Arrow::inclusion(&c2, |x| c2.id(x).starts_with('0')).unwrap();
        let t = triangulate_map(&incl, true).unwrap();
        assert!(t.is_mono() && t.is_regular());
        let m = triangulate_map(&crate::cubeset::marker(1), true).unwrap();
        assert!(m.is_entire());
        let gained: Vec<usize> = (0..m.tgt.len()).filter(|&s| m.tgt.is_marked(s) && !m.src.is_marked(s)).collect();
        assert_eq!(gained.len(), 1);
    }

    #[test]
    fn comparisons() {
        for mode in [TensorMode::Lax, TensorMode::Pseudo] {
            let c = monoidal_comparison(&cube(1), &cube(1), mode).unwrap();
            assert!(c.iso, "{mode:?}: {:?}", c.mismatch);
            let c = monoidal_comparison(&marked_cube(1), &cube(1), mode).unwrap();
            assert!(c.iso, "{mode:?}: {:?}", c.mismatch);
            let c = monoidal_comparison(&cube(0), &marked_cube(2), mode).unwrap();
            assert!(c.iso, "{mode:?}: {:?}", c.mismatch);
        }
    }
}
