//! Finite marked simplicial sets: standard complicial objects, the
//! cartesian product, the Gray tensor product and pre-complicial reflection.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::gray::{leibniz_with, Leibniz};
use crate::operator::Operator;
use crate::presheaf::{Arrow, Cube, Presheaf, PresheafMap};
use crate::simplex::SimplicialOperator;

pub type MarkedSimplicialSet = Presheaf<SimplicialOperator>;
pub type SimplicialMap = PresheafMap<SimplicialOperator>;
pub type SimplicialArrow = Arrow<SimplicialOperator>;
pub type Simplex = Cube<SimplicialOperator>;

fn subset_id(s: u32) -> String {
    (0..32).filter(|i| s >> i & 1 == 1).map(|i| char::from_digit(i, 36).unwrap()).collect()
}

/// A regular subobject of `Δⁿ` on the vertex sets satisfying `keep`.
fn simplex_subobject(n: usize, keep: impl Fn(u32) -> bool, marked: impl Fn(u32) -> bool) -> MarkedSimplicialSet {
    let mut sets: Vec<u32> = (1..1u32 << (n + 1)).filter(|&s| keep(s)).collect();
    sets.sort_by_key(|&s| (s.count_ones(), subset_id(s)));
    let index: HashMap<u32, usize> = sets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut x = Presheaf::new();
    for &s in &sets {
        let elems: Vec<u32> = (0..32).filter(|i| s >> i & 1 == 1).collect();
        let d = elems.len() - 1;
        let faces = if d == 0 {
            Vec::new()
        } else {
            elems.iter().map(|&v| Cube::cell(index[&(s & !(1 << v))], d - 1)).collect()
        };
        x.add_cell(subset_id(s), d, d > 0 && marked(s), faces).expect("subset ids are distinct");
    }
    x
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if n == 0 || k > n || n > 30 {
        return Err(Error::Parameter(format!("(n, k) = ({n}, {k}) needs 1 ≤ n and 0 ≤ k ≤ n")));
    }
    Ok(())
}

/// Whether a face of `Δⁿ`, given by its vertex set, contains `{k-1, k, k+1} ∩ [n]`.
pub fn admissible(s: u32, n: usize, k: usize) -> bool {
    let need: u32 = [k.wrapping_sub(1), k, k + 1].iter().filter(|&&v| v <= n).map(|&v| 1u32 << v).sum();
    s & need == need && s.count_ones() > 1
}

fn full(n: usize) -> u32 {
    (1u32 << (n + 1)) - 1
}

fn in_horn(s: u32, n: usize, k: usize) -> bool {
    s != full(n) && s != full(n) & !(1 << k)
}

pub fn simplex(n: usize) -> MarkedSimplicialSet {
    simplex_subobject(n, |_| true, |_| false)
}

/// `mΔⁿ`, the top simplex marked.
pub fn marker_object(n: usize) -> MarkedSimplicialSet {
    simplex_subobject(n, |_| true, |s| s == full(n))
}

/// The entire inclusion `Δⁿ → mΔⁿ`.
pub fn marker(n: usize) -> SimplicialArrow {
    Arrow::entire_identity(&simplex(n), &marker_object(n)).expect("markers are entire")
}

/// The boundary inclusion `∂Δⁿ ↪ Δⁿ`.
pub fn boundary_inclusion(n: usize) -> SimplicialArrow {
    let d = simplex(n);
    Arrow::inclusion(&d, |x| d.dim(x) < n).expect("the boundary is a subobject")
}

/// The complicial simplex `Δⁿₖ`.
pub fn complicial(n: usize, k: usize) -> Result<MarkedSimplicialSet> {
    check_nk(n, k)?;
    Ok(simplex_subobject(n, |_| true, |s| admissible(s, n, k)))
}

/// The complicial horn `Λⁿₖ` with the restricted marking.
pub fn horn(n: usize, k: usize) -> Result<MarkedSimplicialSet> {
    check_nk(n, k)?;
    Ok(simplex_subobject(n, |s| in_horn(s, n, k), |s| admissible(s, n, k)))
}

/// The complicial horn inclusion `Λⁿₖ ↪ Δⁿₖ`.
pub fn horn_inclusion(n: usize, k: usize) -> Result<SimplicialArrow> {
    let d = complicial(n, k)?;
    let h = horn(n, k)?;
    Arrow::inclusion(&d, |x| h.find(d.id(x)).is_some())
}

/// `Δ'ⁿₖ`: the complicial simplex with the horn's cells of dimension `≥ n-1` marked.
pub fn prime(n: usize, k: usize) -> Result<MarkedSimplicialSet> {
    check_nk(n, k)?;
    Ok(simplex_subobject(
        n,
        |_| true,
        |s| admissible(s, n, k) || (in_horn(s, n, k) && s.count_ones() as usize >= n),
    ))
}

/// `Δ''ⁿₖ = trunc_{n-2} Δⁿₖ`.
pub fn double_prime(n: usize, k: usize) -> Result<MarkedSimplicialSet> {
    check_nk(n, k)?;
    Ok(simplex_subobject(n, |_| true, |s| admissible(s, n, k) || s.count_ones() as usize >= n))
}

/// The elementary complicial marking extension `Δ'ⁿₖ → Δ''ⁿₖ`.
pub fn marking_extension(n: usize, k: usize) -> Result<SimplicialArrow> {
    Arrow::entire_identity(&prime(n, k)?, &double_prime(n, k)?)
}

/// The reversal `S^op`.
pub fn dual_op(s: &MarkedSimplicialSet) -> MarkedSimplicialSet {
    s.reversed()
}

/// A product-shaped object `S × T` with the marking given by a rule, and
/// its table of simplex pairs.
#[derive(Clone, Debug)]
pub struct PairProduct {
    pub object: MarkedSimplicialSet,
    pub pairs: Vec<(Simplex, Simplex)>,
    index: HashMap<(Simplex, Simplex), usize>,
}

/// Whether two degeneracy operators of the same source share a collapsed index.
fn jointly_degenerate(a: &SimplicialOperator, b: &SimplicialOperator) -> bool {
    let (va, vb) = (a.values(), b.values());
    (0..va.len().saturating_sub(1)).any(|i| va[i] == va[i + 1] && vb[i] == vb[i + 1])
}

/// Factor `(α, β) = (α', β') ∘ γ` with `γ` the joint collapse.
fn joint_collapse(a: &SimplicialOperator, b: &SimplicialOperator) -> (SimplicialOperator, SimplicialOperator, SimplicialOperator) {
    let (va, vb) = (a.values(), b.values());
    let mut gamma = vec![0usize];
    let (mut ra, mut rb) = (vec![va[0]], vec![vb[0]]);
    for i in 1..va.len() {
        if va[i] == va[i - 1] && vb[i] == vb[i - 1] {
            gamma.push(*gamma.last().unwrap());
        } else {
            gamma.push(gamma.last().unwrap() + 1);
            ra.push(va[i]);
            rb.push(vb[i]);
        }
    }
    let q = *gamma.last().unwrap();
    (
        SimplicialOperator::new(a.tgt_dim(), ra).expect("collapsed values stay monotone"),
        SimplicialOperator::new(b.tgt_dim(), rb).expect("collapsed values stay monotone"),
        SimplicialOperator::new(q, gamma).expect("the collapse is monotone"),
    )
}

impl PairProduct {
    /// Build `S × T`; `marked(u, v)` decides the marking of each
    /// non-degenerate pair of equal-dimensional simplices.
    pub fn build(
        s: &MarkedSimplicialSet,
        t: &MarkedSimplicialSet,
        marked: impl Fn(&Simplex, &Simplex) -> bool,
    ) -> PairProduct {
        let top = s.max_dim().unwrap_or(0) + t.max_dim().unwrap_or(0);
        let mut pairs = Vec::new();
        if !s.is_empty() && !t.is_empty() {
            for r in 0..=top {
                let (us, vs) = (s.all_cubes(r), t.all_cubes(r));
                for u in &us {
                    for v in &vs {
                        if !jointly_degenerate(&u.op, &v.op) {
                            pairs.push((u.clone(), v.clone()));
                        }
                    }
                }
            }
        }
        let index: HashMap<(Simplex, Simplex), usize> = pairs.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut prod = PairProduct { object: Presheaf::new(), pairs: Vec::new(), index };
        let label = |x: &MarkedSimplicialSet, c: &Simplex| crate::cubeset::cube_label(x, c);
        for (u, v) in &pairs {
            let r = u.dim();
            let faces = (0..SimplicialOperator::face_count(r))
                .map(|j| {
                    let d = SimplicialOperator::face(r, j);
                    prod.normalize(&s.act_cube(u, &d), &t.act_cube(v, &d))
                })
                .collect();
            let m = r > 0 && marked(u, v);
            prod.object.add_cell(format!("({},{})", label(s, u), label(t, v)), r, m, faces).expect("pair labels are distinct");
        }
        prod.pairs = pairs;
        prod
    }

    /// The EZ form of the pair `(u, v)` of equal-dimensional simplices.
    pub fn normalize(&self, u: &Simplex, v: &Simplex) -> Simplex {
        let (a, b, gamma) = joint_collapse(&u.op, &v.op);
        let key = (Cube { op: a, cell: u.cell }, Cube { op: b, cell: v.cell });
        Cube { op: gamma, cell: self.index[&key] }
    }

    pub fn cell(&self, u: &Simplex, v: &Simplex) -> Option<usize> {
        self.index.get(&(u.clone(), v.clone())).copied()
    }
}

/// The cartesian product `S ⊛ T`: a pair is marked iff both parts are.
pub fn product(s: &MarkedSimplicialSet, t: &MarkedSimplicialSet) -> PairProduct {
    PairProduct::build(s, t, |u, v| s.cube_marked(u) && t.cube_marked(v))
}

/// Whether `(u, v)` is `i`-cloven for every `0 ≤ i ≤ r`.
pub fn fully_cloven(s: &MarkedSimplicialSet, u: &Simplex, t: &MarkedSimplicialSet, v: &Simplex) -> bool {
    let r = u.dim();
    (0..=r).all(|i| {
        s.cube_marked(&s.act_cube(u, &SimplicialOperator::front(i, r - i)))
            || t.cube_marked(&t.act_cube(v, &SimplicialOperator::back(i, r - i)))
    })
}

/// The Gray tensor product `S ⊗ T`.
pub fn verity_gray(s: &MarkedSimplicialSet, t: &MarkedSimplicialSet) -> PairProduct {
    PairProduct::build(s, t, |u, v| fully_cloven(s, u, t, v))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductKind {
    /// The cartesian product `⊛`.
    Cartesian,
    /// The Gray tensor `⊗`.
    Gray,
}

impl std::str::FromStr for ProductKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cartesian" | "product" | "pseudo" => Ok(ProductKind::Cartesian),
            "gray" | "lax" => Ok(ProductKind::Gray),
            _ => Err(Error::Parse(format!("unknown product `{s}`"))),
        }
    }
}

pub fn pair_product(s: &MarkedSimplicialSet, t: &MarkedSimplicialSet, kind: ProductKind) -> PairProduct {
    match kind {
        ProductKind::Cartesian => product(s, t),
        ProductKind::Gray => verity_gray(s, t),
    }
}

/// `f × g` between products already computed.
pub fn product_map_between(
    f: &SimplicialArrow,
    g: &SimplicialArrow,
    src: &PairProduct,
    tgt: &PairProduct,
) -> SimplicialMap {
    PresheafMap {
        assign: src.pairs.iter().map(|(u, v)| tgt.normalize(&f.map.apply(u, &f.tgt), &g.map.apply(v, &g.tgt))).collect(),
    }
}

pub fn product_map(f: &SimplicialArrow, g: &SimplicialArrow, kind: ProductKind) -> Result<SimplicialArrow> {
    let src = pair_product(&f.src, &g.src, kind);
    let tgt = pair_product(&f.tgt, &g.tgt, kind);
    let map = product_map_between(f, g, &src, &tgt);
    Arrow::new(src.object, tgt.object, map)
}

/// The Leibniz product of monomorphisms for `⊛` or `⊗`.
pub fn leibniz_s(f: &SimplicialArrow, g: &SimplicialArrow, kind: ProductKind) -> Result<Leibniz<SimplicialOperator>> {
    leibniz_with(f, g, |a, b| product_map(a, b, kind))
}

/// The face operators of `[n]` whose image contains `{k-1, k, k+1} ∩ [n]`.
fn admissible_faces(n: usize, k: usize) -> Vec<SimplicialOperator> {
    (1..=n)
        .flat_map(|m| SimplicialOperator::injections(m, n))
        .filter(|a| admissible(a.values().iter().map(|&v| 1u32 << v).sum(), n, k))
        .collect()
}

/// The least marking extension of `S` with the right lifting property
/// against all elementary complicial marking extensions.
pub fn precomplicial_reflect(s: &MarkedSimplicialSet) -> MarkedSimplicialSet {
    let mut out = s.clone();
    let top = s.max_dim().unwrap_or(0);
    let patterns: Vec<(usize, usize, Vec<SimplicialOperator>)> = (2..=top)
        .flat_map(|n| (0..=n).map(move |k| (n, k, admissible_faces(n, k))))
        .collect();
    loop {
        let mut changed = false;
        for (n, k, adm) in &patterns {
            let (n, k) = (*n, *k);
            for z in out.cells_of_dim(n) {
                let target = out.act(z, &SimplicialOperator::face(n, k));
                if out.cube_marked(&target) {
                    continue;
                }
                let fires = (0..=n).filter(|&j| j != k).all(|j| out.cube_marked(&out.act(z, &SimplicialOperator::face(n, j))))
                    && adm.iter().all(|a| out.cube_marked(&out.act(z, a)));
                if fires {
                    out.set_marked(target.cell, true);
                    changed = true;
                }
            }
        }
        if !changed {
            return out;
        }
    }
}

pub fn is_precomplicial(s: &MarkedSimplicialSet) -> bool {
    precomplicial_reflect(s) == *s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presheaf::{find_iso, has_rlp, SearchOptions};

    fn marked_ids(s: &MarkedSimplicialSet) -> Vec<&str> {
        let mut v: Vec<&str> = s.marked_cells().into_iter().map(|x| s.id(x)).collect();
        v.sort();
        v
    }

    #[test]
    fn standard_objects() {
        for n in 0..=4 {
            let d = simplex(n);
            d.validate().unwrap();
            assert_eq!(d.len(), (1 << (n + 1)) - 1);
        }
        assert_eq!(marked_ids(&complicial(2, 1).unwrap()), vec!["012"]);
        assert_eq!(marked_ids(&double_prime(2, 1).unwrap()), vec!["01", "012", "02", "12"]);
        assert_eq!(marked_ids(&prime(2, 1).unwrap()), vec!["01", "012", "12"]);
        assert_eq!(marked_ids(&marker_object(3)), vec!["0123"]);
        assert_eq!(horn(3, 1).unwrap().cells_of_dim(2).len(), 3);
        assert!(simplex(2).truncate(1) == marker_object(2));
    }

    #[test]
    fn prime_and_double_prime_differ_in_one_face() {
        for n in 2..=4 {
            for k in 0..=n {
                let p = prime(n, k).unwrap();
                let d = double_prime(n, k).unwrap();
                let diff: Vec<usize> = (0..p.len()).filter(|&x| p.is_marked(x) != d.is_marked(x)).collect();
                assert_eq!(diff.len(), 1);
                assert_eq!(p.dim(diff[0]), n - 1);
                assert!(!p.id(diff[0]).contains(char::from_digit(k as u32, 10).unwrap()));
            }
        }
    }

    #[test]
    fn products() {
        let i = simplex(1);
        let p = product(&i, &i);
        p.object.validate().unwrap();
        assert_eq!(p.object.counts(), vec![4, 5, 2]);
        // both components of a 2-simplex of Δ¹ × Δ¹ are degenerate
        assert!(p.object.cells_of_dim(2).iter().all(|&x| p.object.is_marked(x)));
        assert!(p.object.cells_of_dim(1).iter().all(|&x| !p.object.is_marked(x)));
        let m = marker_object(1);
        let pm = product(&m, &m);
        // the diagonal and the four sides, each side pairing a marked edge with a degenerate one
        let marked = pm.object.cells_of_dim(1).into_iter().filter(|&x| pm.object.is_marked(x)).count();
        assert_eq!(marked, 5);
        let pt = simplex(0);
        assert!(find_iso(&product(&complicial(2, 1).unwrap(), &pt).object, &complicial(2, 1).unwrap()).is_some());
        assert!(find_iso(&verity_gray(&complicial(2, 1).unwrap(), &pt).object, &complicial(2, 1).unwrap()).is_some());
    }

    #[test]
    fn gray_of_intervals() {
        let i = simplex(1);
        let g = verity_gray(&i, &i);
        g.object.validate().unwrap();
        assert!(g.object.cells_of_dim(1).iter().all(|&x| !g.object.is_marked(x)));
        let marked: Vec<usize> = g.object.cells_of_dim(2).into_iter().filter(|&x| g.object.is_marked(x)).collect();
        assert_eq!(marked.len(), 1);
        // the marked triangle moves in the second coordinate first
        let (u, _) = &g.pairs[marked[0]];
        let first_edge = i.act_cube(u, &SimplicialOperator::new(2, vec![0, 1]).unwrap());
        assert!(first_edge.is_degenerate());
    }

    #[test]
    fn reflection() {
        for n in 2..=4 {
            for k in 0..=n {
                let r = precomplicial_reflect(&prime(n, k).unwrap());
                assert!(r == double_prime(n, k).unwrap(), "n = {n}, k = {k}");
                let ext = marking_extension(n, k).unwrap();
                assert!(has_rlp(&r, &ext, &SearchOptions::default()).holds);
            }
        }
        let c = complicial(3, 1).unwrap();
        assert!(is_precomplicial(&c));
    }

    #[test]
    fn op_duals() {
        for n in 1..=3 {
            for k in 0..=n {
                let d = dual_op(&complicial(n, k).unwrap());
                d.validate().unwrap();
                assert!(find_iso(&d, &complicial(n, n - k).unwrap()).is_some());
            }
        }
    }
}
