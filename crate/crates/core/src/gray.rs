//! The geometric product of cubical sets and the lax and pseudo Gray tensor
//! products of marked cubical sets, with tensors of maps and Leibniz products.

use std::collections::HashMap;

use crate::boxcat::BoxOperator;
use crate::cubeset::{CubicalArrow, CubicalMap, MarkedCubicalSet};
use crate::error::{Error, Result};
use crate::operator::Operator;
use crate::presheaf::{pushout, Arrow, Cube, Presheaf, PresheafMap, Pushout};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TensorMode {
    /// The geometric product; the result carries no marking.
    Geometric,
    Lax,
    Pseudo,
}

impl std::str::FromStr for TensorMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "geom" | "geometric" => Ok(TensorMode::Geometric),
            "lax" => Ok(TensorMode::Lax),
            "pseudo" => Ok(TensorMode::Pseudo),
            _ => Err(Error::Parse(format!("unknown tensor mode `{s}`"))),
        }
    }
}

impl TensorMode {
    /// Whether `x ⊗ y` is marked, given dimensions and markings of `x` and `y`.
    pub fn marks(self, (dx, mx): (usize, bool), (dy, my): (usize, bool)) -> bool {
        match self {
            TensorMode::Geometric => false,
            TensorMode::Lax => mx || my,
            TensorMode::Pseudo => dx + dy > 0 && !((dx == 0 && !my) || (!mx && dy == 0)),
        }
    }
}

/// `X ⊗ Y` together with its cell-pair table.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    pub object: MarkedCubicalSet,
    pub mode: TensorMode,
    /// `pairs[c] = (x, y)` for the cell `c = x ⊗ y`.
    pub pairs: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

impl TensorProduct {
    pub fn cell(&self, x: usize, y: usize) -> usize {
        self.index[&(x, y)]
    }

    /// The cube `u ⊗ v`.
    pub fn cube(&self, u: &Cube<BoxOperator>, v: &Cube<BoxOperator>) -> Cube<BoxOperator> {
        Cube { op: BoxOperator::tensor(&u.op, &v.op), cell: self.cell(u.cell, v.cell) }
    }
}

fn pair_id(a: &str, b: &str) -> String {
    let wrap = |s: &str| if s.contains('⊗') { format!("({s})") } else { s.to_string() };
    format!("{}⊗{}", wrap(a), wrap(b))
}

/// The tensor product `X ⊗ Y` in the given mode.
pub fn tensor(x: &MarkedCubicalSet, y: &MarkedCubicalSet, mode: TensorMode) -> TensorProduct {
    let mut pairs: Vec<(usize, usize)> = (0..x.len()).flat_map(|a| (0..y.len()).map(move |b| (a, b))).collect();
    pairs.sort_by_key(|&(a, b)| (x.dim(a) + y.dim(b), a, b));
    let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(c, &p)| (p, c)).collect();
    let mut object = Presheaf::new();
    for &(a, b) in &pairs {
        let (k, l) = (x.dim(a), y.dim(b));
        let mut faces = Vec::with_capacity(2 * (k + l));
        for e in &x.cell(a).faces {
            faces.push(Cube { op: BoxOperator::tensor(&e.op, &BoxOperator::identity(l)), cell: index[&(e.cell, b)] });
        }
        for e in &y.cell(b).faces {
            faces.push(Cube { op: BoxOperator::tensor(&BoxOperator::identity(k), &e.op), cell: index[&(a, e.cell)] });
        }
        let marked = mode.marks((k, x.is_marked(a)), (l, y.is_marked(b)));
        object
            .add_cell(pair_id(x.id(a), y.id(b)), k + l, marked, faces)
            .expect("pair ids are distinct when factor ids are");
    }
    TensorProduct { object, mode, pairs, index }
}

/// `f ⊗ g` between tensors already computed.
pub fn tensor_map_between(f: &CubicalMap, g: &CubicalMap, src: &TensorProduct, tgt: &TensorProduct) -> CubicalMap {
    PresheafMap { assign: src.pairs.iter().map(|&(a, b)| tgt.cube(&f.assign[a], &g.assign[b])).collect() }
}

/// The arrow `f ⊗ g`.
pub fn tensor_map(f: &CubicalArrow, g: &CubicalArrow, mode: TensorMode) -> Result<CubicalArrow> {
    let src = tensor(&f.src, &g.src, mode);
    let tgt = tensor(&f.tgt, &g.tgt, mode);
    let map = tensor_map_between(&f.map, &g.map, &src, &tgt);
    Arrow::new(src.object, tgt.object, map)
}

/// The comparison `μ: X ⊗ Y → X ⊛ Y`, the identity on cells.
pub fn mu(x: &MarkedCubicalSet, y: &MarkedCubicalSet) -> Result<CubicalArrow> {
    let lax = tensor(x, y, TensorMode::Lax);
    let pseudo = tensor(x, y, TensorMode::Pseudo);
    Arrow::entire_identity(&lax.object, &pseudo.object)
}

/// A Leibniz product `f ⊙̂ g: (A ⊙ Y) ⊔_{A ⊙ B} (X ⊙ B) → X ⊙ Y`.
#[derive(Clone, Debug)]
pub struct Leibniz<O> {
    pub arrow: Arrow<O>,
    /// The defining pushout; its `left` leg is `X ⊙ B → dom`, its `right` leg `A ⊙ Y → dom`.
    pub pushout: Pushout<O>,
}

/// Leibniz construction from a bifunctor given on arrows.
pub fn leibniz_with<O: Operator>(
    f: &Arrow<O>,
    g: &Arrow<O>,
    tmap: impl Fn(&Arrow<O>, &Arrow<O>) -> Result<Arrow<O>>,
) -> Result<Leibniz<O>> {
    if !f.is_mono() || !g.is_mono() {
        return Err(Error::Unsupported("Leibniz products are only formed for monomorphisms".into()));
    }
    let f_b = tmap(f, &Arrow::identity(&g.src))?;
    let a_g = tmap(&Arrow::identity(&f.src), g)?;
    let x_g = tmap(&Arrow::identity(&f.tgt), g)?;
    let f_y = tmap(f, &Arrow::identity(&g.tgt))?;
    let po = pushout(&f_b, &a_g.map, &a_g.tgt)?;
    let map = po.induced(&x_g.map, &f_y.map);
    let arrow = Arrow::new(po.object.clone(), x_g.tgt.clone(), map)?;
    Ok(Leibniz { arrow, pushout: po })
}

/// The Leibniz tensor `f ⊗̂ g` of monomorphisms.
pub fn leibniz(f: &CubicalArrow, g: &CubicalArrow, mode: TensorMode) -> Result<Leibniz<BoxOperator>> {
    leibniz_with(f, g, |a, b| tensor_map(a, b, mode))
}

/// The associator `(X ⊗ Y) ⊗ Z → X ⊗ (Y ⊗ Z)` on cells.
pub fn associator(x: &MarkedCubicalSet, y: &MarkedCubicalSet, z: &MarkedCubicalSet, mode: TensorMode) -> Result<CubicalArrow> {
    let xy = tensor(x, y, mode);
    let left = tensor(&xy.object, z, mode);
    let yz = tensor(y, z, mode);
    let right = tensor(x, &yz.object, mode);
    let assign = left
        .pairs
        .iter()
        .map(|&(p, c)| {
            let (a, b) = xy.pairs[p];
            right.object.top(right.cell(a, yz.cell(b, c)))
        })
        .collect();
    Arrow::new(left.object, right.object, PresheafMap { assign })
}

/// The unitors `□⁰ ⊗ X → X` and `X ⊗ □⁰ → X`.
pub fn unitors(x: &MarkedCubicalSet, mode: TensorMode) -> Result<(CubicalArrow, CubicalArrow)> {
    let pt = crate::cubeset::cube(0);
    let l = tensor(&pt, x, mode);
    let r = tensor(x, &pt, mode);
    let left = PresheafMap { assign: l.pairs.iter().map(|&(_, b)| x.top(b)).collect() };
    let right = PresheafMap { assign: r.pairs.iter().map(|&(a, _)| x.top(a)).collect() };
    Ok((Arrow::new(l.object, x.clone(), left)?, Arrow::new(r.object, x.clone(), right)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boxcat::Duality;
    use crate::cubeset::{boundary_inclusion, comical_box_inclusion, cube, dual, marked_cube, marker, open_box};
    use crate::presheaf::{find_arrow_iso, find_iso};

    #[test]
    fn tensor_of_cubes_is_a_cube() {
        for m in 0..=3 {
            for n in 0..=(4 - m) {
                let t = tensor(&cube(m), &cube(n), TensorMode::Geometric);
                t.object.validate().unwrap();
                assert!(find_iso(&t.object, &cube(m + n)).is_some(), "□{m} ⊗ □{n}");
            }
        }
    }

    #[test]
    fn markings() {
        let e = marked_cube(1);
        let f = cube(1);
        let lax = tensor(&e, &f, TensorMode::Lax);
        let top = lax.cell(2, 2);
        assert!(lax.object.is_marked(top));
        let pseudo = tensor(&f, &f, TensorMode::Pseudo);
        assert!(pseudo.object.is_marked(pseudo.cell(2, 2)));
        assert!(!pseudo.object.is_marked(pseudo.cell(0, 2)));
        assert!(!tensor(&f, &f, TensorMode::Lax).object.is_marked(top));
    }

    #[test]
    fn mu_on_intervals() {
        let m = mu(&cube(1), &cube(1)).unwrap();
        let gained: Vec<usize> = (0..m.tgt.len()).filter(|&c| m.tgt.is_marked(c) && !m.src.is_marked(c)).collect();
        assert_eq!(gained.len(), 1);
        assert_eq!(m.tgt.dim(gained[0]), 2);
        assert!(mu(&cube(0), &marked_cube(2)).unwrap().is_iso());
        assert!(mu(&cube(2).truncate(0), &cube(1)).unwrap().is_iso());
    }

    #[test]
    fn tensor_maps_are_functorial() {
        let id = Arrow::identity(&cube(1));
        let t = tensor_map(&id, &id, TensorMode::Lax).unwrap();
        assert_eq!(t.map, PresheafMap::identity(&t.src));
        let m = tensor_map(&marker(1), &id, TensorMode::Lax).unwrap();
        assert!(m.is_entire());
        let b = boundary_inclusion(1);
        let composite = tensor_map(&b.then(&marker(1)), &id, TensorMode::Pseudo).unwrap();
        let stepwise = tensor_map(&b, &id, TensorMode::Pseudo).unwrap().then(&tensor_map(&marker(1), &id, TensorMode::Pseudo).unwrap());
        assert_eq!(composite.map, stepwise.map);
    }

    #[test]
    fn leibniz_of_boundaries() {
        let b1 = boundary_inclusion(1);
        let l = leibniz(&b1, &b1, TensorMode::Geometric).unwrap();
        l.arrow.src.validate().unwrap();
        assert!(find_arrow_iso(&l.arrow, &boundary_inclusion(2)).is_some());
        let o = Arrow::inclusion(&cube(1), |x| x == 1).unwrap();
        let l = leibniz(&o, &b1, TensorMode::Geometric).unwrap();
        let box_incl = Arrow::inclusion(&cube(2), |x| open_box(2, 1, 0).unwrap().find(cube(2).id(x)).is_some()).unwrap();
        assert!(find_arrow_iso(&l.arrow, &box_incl).is_some());
        let l = leibniz(&Arrow::identity(&cube(1)), &b1, TensorMode::Lax).unwrap();
        assert!(l.arrow.is_iso());
        assert!(comical_box_inclusion(2, 1, 0).is_ok());
    }

    #[test]
    fn associativity_and_units() {
        let objs = [cube(1), marked_cube(1), cube(0)];
        for mode in [TensorMode::Lax, TensorMode::Pseudo] {
            for x in &objs {
                for y in &objs {
                    for z in &objs {
                        assert!(associator(x, y, z, mode).unwrap().is_iso());
                    }
                }
                let (l, r) = unitors(x, mode).unwrap();
                assert!(l.is_iso() && r.is_iso());
            }
        }
    }

    #[test]
    fn duals_are_anti_monoidal() {
        let x = marked_cube(1);
        let y = cube(2);
        for mode in [TensorMode::Lax, TensorMode::Pseudo] {
            let co = dual(&tensor(&x, &y, mode).object, Duality::Co);
            let swapped = tensor(&dual(&y, Duality::Co), &dual(&x, Duality::Co), mode).object;
            assert!(find_iso(&co, &swapped).is_some());
            let coop = dual(&tensor(&x, &y, mode).object, Duality::Coop);
            let same = tensor(&dual(&x, Duality::Coop), &dual(&y, Duality::Coop), mode).object;
            assert!(find_iso(&coop, &same).is_some());
        }
    }
}
