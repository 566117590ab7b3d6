//! Homotopies between 1-cubes, composites, and the homotopy 1-category of a
//! comical set.
//!
//! A square is read with vertex `(a, b)` at column `a`, row `b`: its top
//! edge is `∂_{2,0}`, its bottom `∂_{2,1}`, its left `∂_{1,0}` and its right
//! `∂_{1,1}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use petgraph::unionfind::UnionFind;

use crate::boxcat::BoxOperator;
use crate::category::FiniteCategory;
use crate::cubeset::{cube_label, MarkedCubicalSet};
use crate::error::{Error, Result};
use crate::presheaf::Cube;

pub type OneCube = Cube<BoxOperator>;

/// The role an edge of a square plays in a homotopy or composite pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Role {
    /// A degenerate edge.
    Deg,
    F,
    G,
    /// The composite being witnessed.
    Out,
}

use Role::{Deg, Out, F, G};

/// Edges in the order top, right, left, bottom.
const EDGES: [(usize, u8); 4] = [(2, 0), (1, 1), (1, 0), (2, 1)];

/// The eight boundary conditions for a homotopy `f ∼ g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HomotopyKind {
    Phi,
    PhiPrime,
    Chi,
    ChiPrime,
    Psi,
    PsiPrime,
    Omega,
    OmegaPrime,
}

impl HomotopyKind {
    pub const ALL: [HomotopyKind; 8] = [
        HomotopyKind::Phi,
        HomotopyKind::PhiPrime,
        HomotopyKind::Chi,
        HomotopyKind::ChiPrime,
        HomotopyKind::Psi,
        HomotopyKind::PsiPrime,
        HomotopyKind::Omega,
        HomotopyKind::OmegaPrime,
    ];

    fn roles(self) -> [Role; 4] {
        match self {
            HomotopyKind::Phi => [F, Deg, G, Deg],
            HomotopyKind::PhiPrime => [G, Deg, F, Deg],
            HomotopyKind::Chi => [Deg, G, F, Deg],
            HomotopyKind::ChiPrime => [Deg, F, G, Deg],
            HomotopyKind::Psi => [F, Deg, Deg, G],
            HomotopyKind::PsiPrime => [G, Deg, Deg, F],
            HomotopyKind::Omega => [Deg, F, Deg, G],
            HomotopyKind::OmegaPrime => [Deg, G, Deg, F],
        }
    }
}

impl fmt::Display for HomotopyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            HomotopyKind::Phi => "phi",
            HomotopyKind::PhiPrime => "phi'",
            HomotopyKind::Chi => "chi",
            HomotopyKind::ChiPrime => "chi'",
            HomotopyKind::Psi => "psi",
            HomotopyKind::PsiPrime => "psi'",
            HomotopyKind::Omega => "omega",
            HomotopyKind::OmegaPrime => "omega'",
        };
        f.write_str(s)
    }
}

/// The four ways of composing `f: x → y` and `g: y → z` by filling a 2-box,
/// named by the missing face `(k, ε)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompositeKind {
    pub k: usize,
    pub e: u8,
}

impl CompositeKind {
    pub const ALL: [CompositeKind; 4] =
        [CompositeKind { k: 1, e: 0 }, CompositeKind { k: 1, e: 1 }, CompositeKind { k: 2, e: 0 }, CompositeKind { k: 2, e: 1 }];

    fn roles(self) -> [Role; 4] {
        match (self.k, self.e) {
            (1, 0) => [F, G, Out, Deg],
            (1, 1) => [Deg, Out, F, G],
            (2, 0) => [Out, Deg, F, G],
            _ => [F, G, Deg, Out],
        }
    }
}

impl fmt::Display for CompositeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyWitness {
    pub kind: HomotopyKind,
    pub square: Cube<BoxOperator>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositeWitness {
    pub kind: CompositeKind,
    pub square: Cube<BoxOperator>,
    pub result: OneCube,
}

/// A marked 2-cube together with its four edges.
struct Square {
    cube: Cube<BoxOperator>,
    edges: [OneCube; 4],
}

fn marked_squares(x: &MarkedCubicalSet) -> Vec<Square> {
    x.all_cubes(2)
        .into_iter()
        .filter(|c| x.cube_marked(c))
        .map(|c| {
            let edges = EDGES.map(|(i, e)| x.act_cube(&c, &BoxOperator::face(2, i, e)));
            Square { cube: c, edges }
        })
        .collect()
}

/// Assign the F, G and Out roles of a pattern, when the degenerate edges are degenerate.
fn read(sq: &Square, roles: [Role; 4]) -> Option<(OneCube, OneCube, Option<OneCube>)> {
    let mut f = None;
    let mut g = None;
    let mut out = None;
    for (edge, role) in sq.edges.iter().zip(roles) {
        match role {
            Deg if !edge.is_degenerate() => return None,
            Deg => {}
            F => f = Some(edge.clone()),
            G => g = Some(edge.clone()),
            Out => out = Some(edge.clone()),
        }
    }
    Some((f?, g?, out))
}

fn endpoint(x: &MarkedCubicalSet, c: &OneCube, e: u8) -> usize {
    x.act_cube(c, &BoxOperator::face(1, 1, e)).cell
}

fn endpoints(x: &MarkedCubicalSet, c: &OneCube) -> Result<(usize, usize)> {
    if c.dim() != 1 {
        return Err(Error::Precondition(format!("{} is not a 1-cube", cube_label(x, c))));
    }
    Ok((endpoint(x, c, 0), endpoint(x, c, 1)))
}

/// Every 1-cube of `x`, degenerate ones included.
pub fn one_cubes(x: &MarkedCubicalSet) -> Vec<OneCube> {
    x.all_cubes(1)
}

/// The 1-cube named by a cell id, or `v.s1` for the degenerate edge at a 0-cell `v`.
pub fn one_cube_by_name(x: &MarkedCubicalSet, name: &str) -> Result<OneCube> {
    let lookup = |id: &str| x.find(id).ok_or_else(|| Error::Parameter(format!("no cell `{id}`")));
    if let Some(v) = name.strip_suffix(".s1") {
        let v = lookup(v)?;
        if x.dim(v) != 0 {
            return Err(Error::Precondition(format!("{name}: only 0-cells have a degenerate edge by this name")));
        }
        return Ok(Cube { op: BoxOperator::degeneracy(1, 1), cell: v });
    }
    let c = lookup(name)?;
    Ok(x.top(c))
}

/// All witnesses of a given kind for `f ∼ g`.
pub fn homotopy_witnesses(x: &MarkedCubicalSet, f: &OneCube, g: &OneCube, kind: HomotopyKind) -> Result<Vec<HomotopyWitness>> {
    check_parallel(x, f, g)?;
    Ok(marked_squares(x)
        .into_iter()
        .filter(|sq| matches!(read(sq, kind.roles()), Some((a, b, _)) if a == *f && b == *g))
        .map(|sq| HomotopyWitness { kind, square: sq.cube })
        .collect())
}

fn check_parallel(x: &MarkedCubicalSet, f: &OneCube, g: &OneCube) -> Result<()> {
    let (ef, eg) = (endpoints(x, f)?, endpoints(x, g)?);
    if ef != eg {
        return Err(Error::Precondition(format!(
            "{} and {} do not share endpoints",
            cube_label(x, f),
            cube_label(x, g)
        )));
    }
    Ok(())
}

/// The first witness of `f ∼ g` over all eight patterns.
pub fn are_homotopic(x: &MarkedCubicalSet, f: &OneCube, g: &OneCube) -> Result<Option<HomotopyWitness>> {
    check_parallel(x, f, g)?;
    for sq in marked_squares(x) {
        for kind in HomotopyKind::ALL {
            if matches!(read(&sq, kind.roles()), Some((a, b, _)) if a == *f && b == *g) {
                return Ok(Some(HomotopyWitness { kind, square: sq.cube }));
            }
        }
    }
    Ok(None)
}

/// All composite witnesses of `f` and `g` present in `x`.
pub fn composites(x: &MarkedCubicalSet, f: &OneCube, g: &OneCube) -> Result<Vec<CompositeWitness>> {
    let (_, y) = endpoints(x, f)?;
    let (y2, _) = endpoints(x, g)?;
    if y != y2 {
        return Err(Error::Precondition(format!("{} and {} are not composable", cube_label(x, f), cube_label(x, g))));
    }
    let mut out = Vec::new();
    for sq in marked_squares(x) {
        for kind in CompositeKind::ALL {
            if let Some((a, b, Some(h))) = read(&sq, kind.roles()) {
                if a == *f && b == *g {
                    out.push(CompositeWitness { kind, square: sq.cube.clone(), result: h });
                }
            }
        }
    }
    Ok(out)
}

/// The homotopy 1-category, with the 1-cubes in each arrow class.
#[derive(Clone, Debug)]
pub struct Ho1 {
    pub category: FiniteCategory,
    /// `members[a]`: the 1-cubes in the class of arrow `a`.
    pub members: Vec<Vec<OneCube>>,
}

/// The category of 0-cubes and homotopy classes of 1-cubes.  Witnesses are
/// read off the input; a composable pair without a composite, or composites
/// landing in different classes, is reported as [`Error::Incomplete`].
pub fn ho1(x: &MarkedCubicalSet) -> Result<Ho1> {
    let edges = one_cubes(x);
    let index: HashMap<OneCube, usize> = edges.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let ends: Vec<(usize, usize)> = edges.iter().map(|c| endpoints(x, c)).collect::<Result<_>>()?;
    let squares = marked_squares(x);

    let mut uf = UnionFind::<usize>::new(edges.len());
    for sq in &squares {
        for kind in HomotopyKind::ALL {
            if let Some((f, g, _)) = read(sq, kind.roles()) {
                uf.union(index[&f], index[&g]);
            }
        }
    }

    // classes in order of their first member, identities first
    let objects = x.cells_of_dim(0);
    let mut category = FiniteCategory::new();
    let mut obj_of = HashMap::new();
    for &v in &objects {
        obj_of.insert(v, category.add_object(x.id(v)));
    }
    let mut arrow_of_root: BTreeMap<usize, usize> = BTreeMap::new();
    for &v in &objects {
        let d = index[&Cube { op: BoxOperator::degeneracy(1, 1), cell: v }];
        arrow_of_root.insert(uf.find(d), category.identities[obj_of[&v]]);
    }
    for (i, c) in edges.iter().enumerate() {
        let root = uf.find(i);
        if !arrow_of_root.contains_key(&root) {
            let (s, t) = ends[i];
            let a = category.add_arrow(cube_label(x, c), obj_of[&s], obj_of[&t]);
            arrow_of_root.insert(root, a);
        }
    }
    let arrow_of = |i: usize| arrow_of_root[&uf.find(i)];
    let mut members = vec![Vec::new(); category.arrows.len()];
    for (i, c) in edges.iter().enumerate() {
        members[arrow_of(i)].push(c.clone());
    }

    let mut table: HashMap<(usize, usize), usize> = HashMap::new();
    for sq in &squares {
        for kind in CompositeKind::ALL {
            if let Some((f, g, Some(h))) = read(sq, kind.roles()) {
                let (af, ag, ah) = (arrow_of(index[&f]), arrow_of(index[&g]), arrow_of(index[&h]));
                match table.insert((ag, af), ah) {
                    Some(prev) if prev != ah => {
                        return Err(Error::Incomplete(format!(
                            "composites of {} and {} fall in different classes ({} and {})",
                            cube_label(x, &f),
                            cube_label(x, &g),
                            category.arrows[prev].name,
                            category.arrows[ah].name
                        )))
                    }
                    _ => {}
                }
            }
        }
    }
    let n = category.arrows.len();
    for f in 0..n {
        for g in 0..n {
            if category.tgt(f) != category.src(g) {
                continue;
            }
            match table.get(&(g, f)) {
                Some(&h) => category.set_composite(g, f, h),
                None => {
                    return Err(Error::Incomplete(format!(
                        "no composite of {} and {}",
                        category.arrows[f].name, category.arrows[g].name
                    )))
                }
            }
        }
    }
    category.validate().map_err(|e| Error::Incomplete(format!("the extracted structure is not a category: {e}")))?;
    Ok(Ho1 { category, members })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boxcat::Duality;
    use crate::cubeset::{cubical_nerve, dual};

    fn nerve(c: &FiniteCategory) -> MarkedCubicalSet {
        cubical_nerve(c, 3).unwrap()
    }

    #[test]
    fn poset_nerves() {
        for n in 1..=3 {
            let p = FiniteCategory::chain(n);
            let x = nerve(&p);
            let h = ho1(&x).unwrap();
            assert!(h.category.is_isomorphic(&p));
            for f in one_cubes(&x) {
                assert!(are_homotopic(&x, &f, &f).unwrap().is_some());
            }
        }
    }

    #[test]
    fn point() {
        let x = MarkedCubicalSet::point();
        let h = ho1(&x).unwrap();
        assert_eq!((h.category.objects.len(), h.category.arrows.len()), (1, 1));
    }

    #[test]
    fn degenerate_square_composites() {
        let x = nerve(&FiniteCategory::chain(2));
        let f = x.top(x.cells_of_dim(1)[0]);
        let (a, b) = endpoints(&x, &f).unwrap();
        let ida = Cube { op: BoxOperator::degeneracy(1, 1), cell: a };
        let idb = Cube { op: BoxOperator::degeneracy(1, 1), cell: b };
        let left = composites(&x, &ida, &f).unwrap();
        assert!(left.iter().any(|w| w.kind == CompositeKind { k: 1, e: 0 } && w.result == f));
        let right = composites(&x, &f, &idb).unwrap();
        assert!(right.iter().any(|w| w.kind == CompositeKind { k: 1, e: 1 } && w.result == f));
        assert!(right.iter().all(|w| w.result == f));
    }

    #[test]
    fn no_marked_squares() {
        let x = crate::cubeset::cube(1);
        let f = x.top(2);
        let ida = one_cube_by_name(&x, "0.s1").unwrap();
        let c = composites(&x, &ida, &f).unwrap();
        // only degenerate squares are marked
        assert!(c.iter().all(|w| w.square.is_degenerate()));
        let flat = crate::cubeset::cube(2).with_marking(|_| false);
        let g = flat.top(flat.find("0*").unwrap());
        let h = flat.top(flat.find("*1").unwrap());
        let ida0 = one_cube_by_name(&flat, "00.s1").unwrap();
        assert!(composites(&flat, &ida0, &g).unwrap().iter().all(|w| w.result == g));
        assert!(composites(&flat, &g, &h).unwrap().is_empty());
        assert!(matches!(ho1(&flat), Err(Error::Incomplete(_))));
    }

    #[test]
    fn endpoint_mismatch() {
        let x = nerve(&FiniteCategory::chain(3));
        let e = x.cells_of_dim(1);
        let (f, g) = (x.top(e[0]), x.top(e[1]));
        assert!(matches!(are_homotopic(&x, &f, &g), Err(Error::Precondition(_))));
    }

    #[test]
    fn opposite_and_isomorphism() {
        for c in [FiniteCategory::free_isomorphism(), FiniteCategory::commuting_square(), FiniteCategory::chain(3)] {
            let x = nerve(&c);
            let h = ho1(&x).unwrap();
            assert!(h.category.is_isomorphic(&c));
            let hop = ho1(&dual(&x, Duality::Op)).unwrap();
            assert!(hop.category.is_isomorphic(&h.category.opposite()));
        }
    }

    #[test]
    fn witness_patterns_agree_on_nerves() {
        let x = nerve(&FiniteCategory::free_isomorphism());
        let cubes = one_cubes(&x);
        for f in &cubes {
            for g in &cubes {
                if endpoints(&x, f).unwrap() != endpoints(&x, g).unwrap() {
                    continue;
                }
                let hits: Vec<bool> =
                    HomotopyKind::ALL.iter().map(|&k| !homotopy_witnesses(&x, f, g, k).unwrap().is_empty()).collect();
                assert!(hits.iter().all(|&h| h == hits[0]), "{f:?} {g:?} {hits:?}");
            }
        }
    }
}
