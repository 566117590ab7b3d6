//! Finite marked cubical sets: standard objects, duals, nerves and comical
//! lifting checks.

use std::collections::HashMap;

use crate::boxcat::{BoxOperator, Duality, Vertex};
use crate::category::FiniteCategory;
use crate::error::{Error, Result};
use crate::gray::{leibniz, TensorMode};
use crate::operator::Operator;
use crate::presheaf::{has_rlp, pushout, Arrow, Cube, Presheaf, PresheafMap, SearchOptions};

pub type MarkedCubicalSet = Presheaf<BoxOperator>;
pub type CubicalMap = PresheafMap<BoxOperator>;
pub type CubicalArrow = Arrow<BoxOperator>;

/// A face of `□ⁿ`: each coordinate fixed to a bit or left free.
pub type Pattern = Vec<Option<bool>>;

/// The id of a face of `□ⁿ`: `0`, `1` or `*` per coordinate, `pt` when `n = 0`.
pub fn pattern_id(p: &[Option<bool>]) -> String {
    if p.is_empty() {
        return "pt".into();
    }
    p.iter().map(|c| match c {
        Some(false) => '0',
        Some(true) => '1',
        None => '*',
    }).collect()
}

/// All faces of `□ⁿ`, by increasing dimension.
pub fn patterns(n: usize) -> Vec<Pattern> {
    let mut all: Vec<Pattern> = vec![Vec::new()];
    for _ in 0..n {
        all = all
            .into_iter()
            .flat_map(|p| {
                [Some(false), Some(true), None].into_iter().map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    all.sort_by_key(|p| (p.iter().filter(|c| c.is_none()).count(), pattern_id(p)));
    all
}

/// The face operator `[1]^k → [1]^n` picking out a pattern.
pub fn pattern_operator(p: &[Option<bool>]) -> BoxOperator {
    let k = p.iter().filter(|c| c.is_none()).count();
    let mut faces: Vec<(usize, u8)> =
        p.iter().enumerate().filter_map(|(i, c)| c.map(|b| (i + 1, u8::from(b)))).collect();
    faces.reverse();
    BoxOperator::from_normal_form(k, &faces, &[], &[]).expect("patterns give normal forms")
}

fn dim_of(p: &[Option<bool>]) -> usize {
    p.iter().filter(|c| c.is_none()).count()
}

/// The `g`-th face of a pattern: its `(g/2 + 1)`-th free coordinate set to `g % 2`.
fn pattern_face(p: &[Option<bool>], g: usize) -> Pattern {
    let mut q = p.to_vec();
    let pos = p.iter().enumerate().filter(|(_, c)| c.is_none()).nth(g / 2).unwrap().0;
    q[pos] = Some(g % 2 == 1);
    q
}

/// A regular subobject of `□ⁿ` on the faces satisfying `keep`, with marking `marked`.
fn cube_subobject(
    n: usize,
    keep: impl Fn(&[Option<bool>]) -> bool,
    marked: impl Fn(&[Option<bool>]) -> bool,
) -> MarkedCubicalSet {
    let pats: Vec<Pattern> = patterns(n).into_iter().filter(|p| keep(p)).collect();
    let index: HashMap<Pattern, usize> = pats.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut x = Presheaf::new();
    for p in &pats {
        let k = dim_of(p);
        let faces = (0..2 * k)
            .map(|g| {
                let q = pattern_face(p, g);
                Cube::cell(index[&q], k - 1)
            })
            .collect();
        x.add_cell(pattern_id(p), k, k > 0 && marked(p), faces).expect("pattern ids are distinct");
    }
    x
}

fn check_box(n: usize, k: usize, e: u8) -> Result<()> {
    if n == 0 || k == 0 || k > n || e > 1 {
        return Err(Error::Parameter(format!("(n, k, ε) = ({n}, {k}, {e}) needs 1 ≤ k ≤ n and ε ∈ {{0,1}}")));
    }
    Ok(())
}

fn is_top(p: &[Option<bool>]) -> bool {
    p.iter().all(|c| c.is_none())
}

fn is_box_face(p: &[Option<bool>], k: usize, e: u8) -> bool {
    p.iter().enumerate().all(|(i, c)| if i + 1 == k { *c == Some(e == 1) } else { c.is_none() })
}

/// Whether a face of `□ⁿ` is marked in the comical cube `(n, k, ε)`: its
/// normal form avoids `∂_{k-1,ε}`, `∂_{k,0}`, `∂_{k,1}` and `∂_{k+1,ε}`.
pub fn comical_marked(p: &[Option<bool>], k: usize, e: u8) -> bool {
    let eps = Some(e == 1);
    let at = |i: usize| if i >= 1 && i <= p.len() { p[i - 1] } else { None };
    dim_of(p) > 0 && at(k - 1) != eps && at(k).is_none() && (k + 1 > p.len() || at(k + 1) != eps)
}

/// `□ⁿ`, unmarked.
pub fn cube(n: usize) -> MarkedCubicalSet {
    cube_subobject(n, |_| true, |_| false)
}

/// `∂□ⁿ`.
pub fn boundary(n: usize) -> MarkedCubicalSet {
    cube_subobject(n, |p| !is_top(p), |_| false)
}

/// `⊓ⁿ_{k,ε}` with flat marking.
pub fn open_box(n: usize, k: usize, e: u8) -> Result<MarkedCubicalSet> {
    check_box(n, k, e)?;
    Ok(cube_subobject(n, |p| !is_top(p) && !is_box_face(p, k, e), |_| false))
}

/// `□ⁿ` with its top cell marked.
pub fn marked_cube(n: usize) -> MarkedCubicalSet {
    cube_subobject(n, |_| true, is_top)
}

/// The comical cube `□ⁿ_{k,ε}`.
pub fn comical_cube(n: usize, k: usize, e: u8) -> Result<MarkedCubicalSet> {
    check_box(n, k, e)?;
    Ok(cube_subobject(n, |_| true, |p| comical_marked(p, k, e)))
}

/// The comical open box, with the marking restricted from the comical cube.
pub fn comical_open_box(n: usize, k: usize, e: u8) -> Result<MarkedCubicalSet> {
    check_box(n, k, e)?;
    Ok(cube_subobject(n, |p| !is_top(p) && !is_box_face(p, k, e), |p| comical_marked(p, k, e)))
}

/// The inclusion `⊓ⁿ_{k,ε} ↪ □ⁿ_{k,ε}` of comical objects.
pub fn comical_box_inclusion(n: usize, k: usize, e: u8) -> Result<CubicalArrow> {
    let c = comical_cube(n, k, e)?;
    Arrow::inclusion(&c, |x| c.dim(x) < n && !is_box_face(&parse_pattern(c.id(x)), k, e))
}

/// The inclusion `∂□ⁿ ↪ □ⁿ`.
pub fn boundary_inclusion(n: usize) -> CubicalArrow {
    let c = cube(n);
    Arrow::inclusion(&c, |x| c.dim(x) < n).expect("the boundary is a subobject")
}

/// The marker `□ⁿ ↪ m□ⁿ`, for `n ≥ 1`.
pub fn marker(n: usize) -> CubicalArrow {
    Arrow::entire_identity(&cube(n), &marked_cube(n)).expect("markers are entire")
}

/// The elementary marking extension `Λ'ⁿ_{k,ε} ↪ Λ''ⁿ_{k,ε}`: the comical
/// cube with all open-box cells of dimension `≥ n-1` marked, included in
/// the comical cube with all cells of dimension `≥ n-1` marked.
pub fn marking_extension_pair(n: usize, k: usize, e: u8) -> Result<CubicalArrow> {
    check_box(n, k, e)?;
    let low = |p: &[Option<bool>]| dim_of(p) + 1 >= n;
    let prime = cube_subobject(n, |_| true, |p| comical_marked(p, k, e) || (!is_top(p) && !is_box_face(p, k, e) && low(p)));
    let double = cube_subobject(n, |_| true, |p| comical_marked(p, k, e) || low(p));
    Arrow::entire_identity(&prime, &double)
}

/// Inverse of [`pattern_id`]; any character other than `0`/`1` reads as free.
pub fn parse_pattern(id: &str) -> Pattern {
    if id == "pt" {
        return Vec::new();
    }
    id.chars()
        .map(|c| match c {
            '0' => Some(false),
            '1' => Some(true),
            _ => None,
        })
        .collect()
}

/// Orientation of a marked square in a Rezk object.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Diagonal {
    /// `↗`
    Up,
    /// `↙`, the transposed square
    Down,
}

impl std::str::FromStr for Diagonal {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "up" | "ne" | "↗" => Ok(Diagonal::Up),
            "down" | "sw" | "↙" => Ok(Diagonal::Down),
            _ => Err(Error::Parse(format!("unknown diagonal `{s}`"))),
        }
    }
}

/// Face indices (as `g = 2(i-1)+ε`) of the picture edges left, top, right,
/// bottom of a square drawn with the given diagonal.
fn square_sides(d: Diagonal) -> [usize; 4] {
    match d {
        // ∂1,0  ∂2,0  ∂1,1  ∂2,1
        Diagonal::Up => [0, 2, 1, 3],
        // ∂2,0  ∂1,0  ∂2,1  ∂1,1
        Diagonal::Down => [2, 0, 3, 1],
    }
}

fn side_pattern(g: usize) -> Pattern {
    pattern_face(&[None, None], g)
}

/// The basic Rezk map `L^{xy} ↪ K^{xy}`: two marked squares glued along a
/// shared edge, the left one with its left and bottom sides marked, the
/// right one with its top and right sides marked; `K = trunc₀ L`.
pub fn rezk_pair(x: Diagonal, y: Diagonal) -> Result<CubicalArrow> {
    let [l_left, _, l_right, l_bottom] = square_sides(x);
    let [r_left, r_top, r_right, _] = square_sides(y);
    let left_sq = cube_subobject(2, |_| true, |p| is_top(p) || *p == side_pattern(l_left)[..] || *p == side_pattern(l_bottom)[..])
        .renamed(|_, id| format!("l{id}"))?;
    let right_sq = cube_subobject(2, |_| true, |p| is_top(p) || *p == side_pattern(r_top)[..] || *p == side_pattern(r_right)[..])
        .renamed(|_, id| format!("r{id}"))?;
    let edge = cube(1);
    let into = |sq: &MarkedCubicalSet, prefix: &str, g: usize| -> Result<CubicalArrow> {
        let p = side_pattern(g);
        let map = PresheafMap {
            assign: patterns(1)
                .iter()
                .map(|q| {
                    // the edge's own pattern, pushed into the chosen side
                    let mut full = p.clone();
                    let free = full.iter().position(|c| c.is_none()).unwrap();
                    full[free] = q[0];
                    let id = format!("{prefix}{}", pattern_id(&full));
                    sq.top(sq.find(&id).unwrap())
                })
                .collect(),
        };
        Arrow::new(edge.clone(), sq.clone(), map)
    };
    let f = into(&left_sq, "l", l_right)?;
    let g = into(&right_sq, "r", r_left)?;
    let po = pushout(&f, &g.map, &right_sq)?;
    let l = po.object;
    let k = l.truncate(0);
    Arrow::entire_identity(&l, &k)
}

/// A cubical set `X^co`, `X^coop` or `X^op`.
pub fn dual(x: &MarkedCubicalSet, which: Duality) -> MarkedCubicalSet {
    x.dual_with(
        |op| op.dual(which),
        |n, g| {
            let (i, e) = BoxOperator::dual_face(n, g / 2 + 1, (g % 2) as u8, which);
            2 * (i - 1) + e as usize
        },
    )
}

/// An `n`-cube of the nerve: a functor `[1]ⁿ → C`.  Vertices are bit masks
/// (bit `i` is coordinate `i + 1`); `edges[v * n + i]` is the arrow into
/// vertex `v` along coordinate `i + 1` (only for `v` with bit `i` set).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Functor {
    n: usize,
    objs: Vec<usize>,
    edges: Vec<usize>,
}

const NONE: usize = usize::MAX;

fn mask_to_vertex(mask: usize, n: usize) -> Vertex {
    Vertex((0..n).map(|i| mask >> i & 1 == 1).collect())
}

fn vertex_to_mask(v: &Vertex) -> usize {
    v.0.iter().enumerate().map(|(i, &b)| usize::from(b) << i).sum()
}

impl Functor {
    /// The arrow `F(a ≤ b)`.
    fn arrow(&self, c: &FiniteCategory, a: usize, b: usize) -> usize {
        let mut cur = a;
        let mut f = c.identities[self.objs[a]];
        for i in 0..self.n {
            if b >> i & 1 == 1 && cur >> i & 1 == 0 {
                cur |= 1 << i;
                f = c.comp(self.edges[cur * self.n + i], f).expect("functor values compose");
            }
        }
        f
    }

    fn act(&self, c: &FiniteCategory, op: &BoxOperator) -> Functor {
        let m = op.src_dim();
        let image: Vec<usize> = (0..1usize << m)
            .map(|u| vertex_to_mask(&op.evaluate(&mask_to_vertex(u, m)).unwrap()))
            .collect();
        let objs = image.iter().map(|&v| self.objs[v]).collect();
        let mut edges = vec![NONE; (1 << m) * m];
        for u in 0..1usize << m {
            for i in 0..m {
                if u >> i & 1 == 1 {
                    edges[u * m + i] = self.arrow(c, image[u & !(1 << i)], image[u]);
                }
            }
        }
        Functor { n: m, objs, edges }
    }
}

fn functors(c: &FiniteCategory, n: usize) -> Vec<Functor> {
    fn go(c: &FiniteCategory, n: usize, v: usize, f: &mut Functor, out: &mut Vec<Functor>) {
        if v == 1 << n {
            out.push(f.clone());
            return;
        }
        let bits: Vec<usize> = (0..n).filter(|i| v >> i & 1 == 1).collect();
        assign(c, n, v, &bits, 0, f, out);
    }
    fn assign(c: &FiniteCategory, n: usize, v: usize, bits: &[usize], t: usize, f: &mut Functor, out: &mut Vec<Functor>) {
        if t == bits.len() {
            go(c, n, v + 1, f, out);
            return;
        }
        let i = bits[t];
        let from = f.objs[v & !(1 << i)];
        for a in 0..c.arrows.len() {
            if c.src(a) != from || (t > 0 && c.tgt(a) != f.objs[v]) {
                continue;
            }
            // squares with earlier incoming edges at v
            let ok = bits[..t].iter().all(|&j| {
                let via_i = c.comp(a, f.edges[(v & !(1 << i)) * n + j]);
                let via_j = c.comp(f.edges[v * n + j], f.edges[(v & !(1 << j)) * n + i]);
                via_i.is_some() && via_i == via_j
            });
            if !ok {
                continue;
            }
            let saved = f.objs[v];
            f.objs[v] = c.tgt(a);
            f.edges[v * n + i] = a;
            assign(c, n, v, bits, t + 1, f, out);
            f.edges[v * n + i] = NONE;
            f.objs[v] = saved;
        }
    }
    let mut out = Vec::new();
    for a in 0..c.objects.len() {
        let mut f = Functor { n, objs: vec![NONE; 1 << n], edges: vec![NONE; (1 << n) * n] };
        f.objs[0] = a;
        go(c, n, 1, &mut f, &mut out);
    }
    out
}

/// The cubical nerve of a finite category up to dimension `max_dim`.
/// Cubes of dimension ≥ 2 are marked; a 1-cube is marked iff its arrow is
/// invertible.
pub fn cubical_nerve(c: &FiniteCategory, max_dim: usize) -> Result<MarkedCubicalSet> {
    c.validate()?;
    let levels: Vec<Vec<Functor>> = (0..=max_dim).map(|n| functors(c, n)).collect();
    let name = |f: &Functor| -> String {
        if f.n == 0 {
            return c.objects[f.objs[0]].clone();
        }
        let mut parts = Vec::new();
        for v in 0..1usize << f.n {
            for i in 0..f.n {
                if v >> i & 1 == 1 {
                    parts.push(c.arrows[f.edges[v * f.n + i]].name.clone());
                }
            }
        }
        format!("[{}]", parts.join(","))
    };
    let (x, _) = Presheaf::from_levels(
        &levels,
        |f, op| f.act(c, op),
        |f, n| n >= 2 || c.is_invertible(f.edges[f.n]),
        name,
    )?;
    Ok(x)
}

/// Result of one generator in a comical check.
#[derive(Clone, Debug)]
pub struct GeneratorCheck {
    pub name: String,
    pub holds: bool,
    pub overflow: bool,
    /// The offending map, as `source cell id ↦ target cube` pairs.
    pub counterexample: Option<Vec<(String, String)>>,
}

#[derive(Clone, Debug, Default)]
pub struct ComicalReport {
    pub checks: Vec<GeneratorCheck>,
}

impl ComicalReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &GeneratorCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

/// Describe a cube of `x` as text.
pub fn cube_label<O: Operator>(x: &Presheaf<O>, c: &Cube<O>) -> String {
    if c.op.is_identity() {
        x.id(c.cell).to_string()
    } else {
        format!("{}·{}", x.id(c.cell), c.op)
    }
}

fn run_check(x: &MarkedCubicalSet, name: String, f: &CubicalArrow, opts: &SearchOptions) -> GeneratorCheck {
    let r = has_rlp(x, f, opts);
    GeneratorCheck {
        name,
        holds: r.holds,
        overflow: r.overflow,
        counterexample: r.counterexample.map(|u| {
            u.assign.iter().enumerate().map(|(a, c)| (f.src.id(a).to_string(), cube_label(x, c))).collect()
        }),
    }
}

/// The generating monomorphisms of the comical model structure up to
/// dimension `max_dim`: open box inclusions, elementary marking extensions
/// and, when `saturated`, the Rezk maps.
pub fn comical_generators(max_dim: usize, saturated: bool) -> Result<Vec<(String, CubicalArrow)>> {
    let mut out = Vec::new();
    for n in 1..=max_dim {
        for k in 1..=n {
            for e in 0..=1u8 {
                out.push((format!("box({n},{k},{e})"), comical_box_inclusion(n, k, e)?));
            }
        }
    }
    for n in 2..=max_dim {
        for k in 1..=n {
            for e in 0..=1u8 {
                out.push((format!("marking-ext({n},{k},{e})"), marking_extension_pair(n, k, e)?));
            }
        }
    }
    if saturated {
        let diags = [Diagonal::Up, Diagonal::Down];
        for m in 0..=max_dim.saturating_sub(2) {
            for n in 0..=max_dim.saturating_sub(2 + m) {
                for &dx in &diags {
                    for &dy in &diags {
                        let r = rezk_pair(dx, dy)?;
                        let left = leibniz(&boundary_inclusion(m), &r, TensorMode::Lax)?.arrow;
                        let full = leibniz(&left, &boundary_inclusion(n), TensorMode::Lax)?.arrow;
                        out.push((format!("rezk({m},{dx:?},{dy:?},{n})"), full));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Right lifting against the comical generators of dimension ≤ `max_dim`.
pub fn is_comical(x: &MarkedCubicalSet, max_dim: usize, saturated: bool, opts: &SearchOptions) -> Result<ComicalReport> {
    let mut report = ComicalReport::default();
    for (name, f) in comical_generators(max_dim, saturated)? {
        report.checks.push(run_check(x, name, &f, opts));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presheaf::{enumerate_maps, find_iso};

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn standard_counts() {
        for n in 0..=4 {
            let c = cube(n);
            c.validate().unwrap();
            let expect: Vec<usize> = (0..=n).map(|j| binom(n, j) * (1 << (n - j))).collect();
            assert_eq!(c.counts(), expect);
            if n >= 1 {
                let b = boundary(n);
                b.validate().unwrap();
                assert_eq!(b.len(), c.len() - 1);
                for k in 1..=n {
                    for e in 0..=1 {
                        let ob = open_box(n, k, e).unwrap();
                        ob.validate().unwrap();
                        assert_eq!(ob.len(), c.len() - 2);
                    }
                }
            }
        }
    }

    #[test]
    fn comical_cube_320() {
        let c = comical_cube(3, 2, 0).unwrap();
        let marked: Vec<&str> = c.marked_cells().into_iter().filter(|&x| c.dim(x) >= 2).map(|x| c.id(x)).collect();
        assert!(marked.contains(&"***"));
        let mut codim1: Vec<&str> = marked.into_iter().filter(|id| id.len() == 3 && *id != "***").collect();
        codim1.sort();
        // ∂1,1 = "1**", ∂3,1 = "**1"
        assert_eq!(codim1, vec!["**1", "1**"]);
    }

    #[test]
    fn marked_cube_and_open_box() {
        let m = marked_cube(2);
        assert_eq!(m.marked_cells().len(), 1);
        let ob = open_box(2, 1, 0).unwrap();
        assert!(ob.find("0*").is_none() && ob.find("**").is_none());
        assert!(ob.marked_cells().is_empty());
    }

    #[test]
    fn regular_open_box_inclusion() {
        for n in 1..=3 {
            for k in 1..=n {
                for e in 0..=1 {
                    let f = comical_box_inclusion(n, k, e).unwrap();
                    assert!(f.is_mono() && f.is_regular());
                }
            }
        }
    }

    #[test]
    fn truncate_and_core() {
        let t = cube(2).truncate(1);
        assert!(t.same_as(&marked_cube(2)));
        let (core, _) = marked_cube(2).core(0);
        assert_eq!(core.counts(), vec![4]);
        let m = marked_cube(2);
        assert!(m.truncate(1).same_as(&m));
    }

    #[test]
    fn pushouts() {
        // ∂□¹ ↪ □¹ against ∂□¹ → point
        let f = boundary_inclusion(1);
        let pt = Presheaf::point();
        let to_pt = PresheafMap { assign: vec![pt.top(0), pt.top(0)] };
        let p = crate::presheaf::pushout(&f, &to_pt, &pt).unwrap();
        p.object.validate().unwrap();
        assert_eq!(p.object.counts(), vec![1, 1]);
        // two intervals glued end to end
        let c1 = cube(1);
        let end = Arrow::new(cube(0), c1.clone(), PresheafMap { assign: vec![c1.top(c1.find("1").unwrap())] }).unwrap();
        let start = PresheafMap { assign: vec![c1.top(c1.find("0").unwrap())] };
        let p = crate::presheaf::pushout(&end, &start, &c1).unwrap();
        p.object.validate().unwrap();
        assert_eq!(p.object.counts(), vec![3, 2]);
    }

    #[test]
    fn rezk_objects() {
        for &x in &[Diagonal::Up, Diagonal::Down] {
            for &y in &[Diagonal::Up, Diagonal::Down] {
                let r = rezk_pair(x, y).unwrap();
                r.src.validate().unwrap();
                assert_eq!(r.src.counts(), vec![6, 7, 2]);
                assert_eq!(r.src.marked_cells().len(), 2 + 4);
                assert!(r.is_entire());
            }
        }
    }

    #[test]
    fn map_enumeration() {
        let c1 = cube(1);
        let opts = SearchOptions::default();
        assert_eq!(enumerate_maps(&cube(0), &cube(2), &opts).maps.len(), 4);
        assert_eq!(enumerate_maps(&c1, &c1, &opts).maps.len(), 3);
        assert_eq!(enumerate_maps(&marked_cube(1), &c1, &opts).maps.len(), 2);
    }

    #[test]
    fn duals() {
        let c = comical_cube(2, 1, 0).unwrap();
        let d = dual(&c, Duality::Coop);
        d.validate().unwrap();
        assert!(find_iso(&d, &comical_cube(2, 1, 1).unwrap()).is_some());
        let x = comical_cube(3, 2, 1).unwrap();
        assert!(dual(&x, Duality::Op).same_as(&dual(&dual(&x, Duality::Co), Duality::Coop)));
        for w in [Duality::Co, Duality::Coop, Duality::Op] {
            assert!(dual(&dual(&x, w), w).same_as(&x));
            dual(&x, w).validate().unwrap();
        }
        let pt = cube(0);
        assert!(dual(&pt, Duality::Co).same_as(&pt));
    }

    #[test]
    fn flat_interval_first_fails_in_dimension_three() {
        let opts = SearchOptions::default();
        assert!(is_comical(&cube(1), 2, false, &opts).unwrap().passed());
        let r = is_comical(&cube(1), 3, false, &opts).unwrap();
        let failing: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
        assert!(failing.contains(&"box(3,1,0)"), "{failing:?}");
        assert!(r.failures().all(|c| c.counterexample.is_some()));
        assert!(is_comical(&Presheaf::point(), 3, true, &opts).unwrap().passed());
        assert!(is_comical(&cubical_nerve(&FiniteCategory::chain(3), 3).unwrap(), 3, false, &opts).unwrap().passed());
    }

    #[test]
    fn nerves() {
        let n1 = cubical_nerve(&FiniteCategory::chain(2), 3).unwrap();
        n1.validate().unwrap();
        assert_eq!(n1.counts()[..3], [2, 1, 0]);
        let iso = cubical_nerve(&FiniteCategory::free_isomorphism(), 2).unwrap();
        iso.validate().unwrap();
        let edges = iso.cells_of_dim(1);
        assert_eq!(edges.len(), 2);
        assert!(edges.iter().all(|&e| iso.is_marked(e)));
    }
}
