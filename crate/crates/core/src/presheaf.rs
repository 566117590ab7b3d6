//! Finite marked presheaves on an EZ shape category.
//!
//! A presheaf is stored by its non-degenerate cells.  Each `n`-cell records,
//! for every codimension-one face, the face as a pair `(down, cell)` meaning
//! `cell · down` with `down` a degeneracy-type operator and `cell`
//! non-degenerate.  Degenerate cubes are never stored; they are always marked.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::operator::Operator;

/// An EZ-normalized cube `cell · op`, with `op` a down operator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cube<O> {
    pub op: O,
    pub cell: usize,
}

impl<O: Operator> Cube<O> {
    pub fn cell(cell: usize, dim: usize) -> Self {
        Cube { op: O::identity(dim), cell }
    }

    pub fn dim(&self) -> usize {
        self.op.src_dim()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.op.is_identity()
    }
}

impl<O: fmt::Debug> fmt::Debug for Cube<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}·({:?})", self.cell, self.op)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell<O> {
    pub id: String,
    pub dim: usize,
    pub marked: bool,
    pub faces: Vec<Cube<O>>,
}

/// A finite marked presheaf.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presheaf<O> {
    cells: Vec<Cell<O>>,
    index: HashMap<String, usize>,
}

impl<O: Operator> Default for Presheaf<O> {
    fn default() -> Self {
        Presheaf { cells: Vec::new(), index: HashMap::new() }
    }
}

impl<O: Operator> Presheaf<O> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Add a cell; faces may refer to cells added later, so integrity is
    /// only checked by [`Presheaf::validate`].
    pub fn add_cell(&mut self, id: impl Into<String>, dim: usize, marked: bool, faces: Vec<Cube<O>>) -> Result<usize> {
        let id = id.into();
        if self.index.contains_key(&id) {
            return Err(Error::Integrity(format!("duplicate cell id `{id}`")));
        }
        let x = self.cells.len();
        self.index.insert(id.clone(), x);
        self.cells.push(Cell { id, dim, marked, faces });
        Ok(x)
    }

    pub(crate) fn set_faces(&mut self, x: usize, faces: Vec<Cube<O>>) {
        self.cells[x].faces = faces;
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cell(&self, x: usize) -> &Cell<O> {
        &self.cells[x]
    }

    pub fn cells(&self) -> &[Cell<O>] {
        &self.cells
    }

    pub fn id(&self, x: usize) -> &str {
        &self.cells[x].id
    }

    pub fn find(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn dim(&self, x: usize) -> usize {
        self.cells[x].dim
    }

    pub fn is_marked(&self, x: usize) -> bool {
        self.cells[x].marked
    }

    pub fn set_marked(&mut self, x: usize, marked: bool) {
        self.cells[x].marked = marked;
    }

    pub fn max_dim(&self) -> Option<usize> {
        self.cells.iter().map(|c| c.dim).max()
    }

    pub fn cells_of_dim(&self, n: usize) -> Vec<usize> {
        (0..self.cells.len()).filter(|&x| self.cells[x].dim == n).collect()
    }

    /// Number of non-degenerate cells in each dimension.
    pub fn counts(&self) -> Vec<usize> {
        let mut out = vec![0; self.max_dim().map_or(0, |d| d + 1)];
        for c in &self.cells {
            out[c.dim] += 1;
        }
        out
    }

    pub fn marked_cells(&self) -> Vec<usize> {
        (0..self.cells.len()).filter(|&x| self.cells[x].marked).collect()
    }

    /// The `g`-th codimension-one face of `x`.
    pub fn face(&self, x: usize, g: usize) -> &Cube<O> {
        &self.cells[x].faces[g]
    }

    pub fn top(&self, x: usize) -> Cube<O> {
        Cube::cell(x, self.cells[x].dim)
    }

    /// The EZ-normalized cube `x · op`.
    pub fn act(&self, x: usize, op: &O) -> Cube<O> {
        debug_assert_eq!(op.tgt_dim(), self.cells[x].dim, "acting on {} by {:?}", self.cells[x].id, op);
        let (mut acc, mut pending) = op.split();
        let mut cell = x;
        while let Some((g, rest)) = pending.peel_face() {
            let entry = &self.cells[cell].faces[g];
            let (down, up) = entry.op.after(&rest).split();
            cell = entry.cell;
            pending = up;
            acc = down.after(&acc);
        }
        Cube { op: acc, cell }
    }

    /// The EZ-normalized cube `c · op`.
    pub fn act_cube(&self, c: &Cube<O>, op: &O) -> Cube<O> {
        self.act(c.cell, &c.op.after(op))
    }

    /// Degenerate cubes count as marked.
    pub fn cube_marked(&self, c: &Cube<O>) -> bool {
        !c.op.is_identity() || self.cells[c.cell].marked
    }

    /// Every `n`-cube, degenerate ones included.
    pub fn all_cubes(&self, n: usize) -> Vec<Cube<O>> {
        let mut by_dim: HashMap<usize, Vec<usize>> = HashMap::new();
        for (x, c) in self.cells.iter().enumerate() {
            by_dim.entry(c.dim).or_default().push(x);
        }
        let mut out = Vec::new();
        for d in O::downs(n).iter() {
            if let Some(cells) = by_dim.get(&d.tgt_dim()) {
                out.extend(cells.iter().map(|&cell| Cube { op: d.clone(), cell }));
            }
        }
        out
    }

    /// Check face-table shapes, EZ normalization, marking dimensions and
    /// action coherence on all words of length two.
    pub fn validate(&self) -> Result<()> {
        for c in &self.cells {
            if c.marked && c.dim == 0 {
                return Err(Error::Integrity(format!("0-cell `{}` is marked", c.id)));
            }
            if c.faces.len() != O::face_count(c.dim) {
                return Err(Error::Integrity(format!(
                    "cell `{}` of dimension {} has {} faces, expected {}",
                    c.id,
                    c.dim,
                    c.faces.len(),
                    O::face_count(c.dim)
                )));
            }
            for (g, e) in c.faces.iter().enumerate() {
                if e.cell >= self.cells.len() {
                    return Err(Error::Integrity(format!("cell `{}` face {} points outside the set", c.id, O::face_key(g))));
                }
                if !e.op.is_down() || e.op.src_dim() + 1 != c.dim || e.op.tgt_dim() != self.cells[e.cell].dim {
                    return Err(Error::Integrity(format!(
                        "cell `{}` face {} is not EZ-normalized: {:?} on `{}`",
                        c.id,
                        O::face_key(g),
                        e.op,
                        self.cells[e.cell].id
                    )));
                }
            }
        }
        for (x, c) in self.cells.iter().enumerate() {
            let n = c.dim;
            if n < 2 {
                continue;
            }
            for g1 in 0..O::face_count(n) {
                let outer = O::face(n, g1);
                for g2 in 0..O::face_count(n - 1) {
                    let inner = O::face(n - 1, g2);
                    let lhs = self.act_cube(&c.faces[g1], &inner);
                    let rhs = self.act(x, &outer.after(&inner));
                    if lhs != rhs {
                        return Err(Error::Integrity(format!(
                            "cell `{}`: faces {} then {} give {:?}, composite gives {:?}",
                            c.id,
                            O::face_key(g1),
                            O::face_key(g2),
                            lhs,
                            rhs
                        )));
                    }
                }
                for d in O::generator_downs(n) {
                    let lhs = self.act_cube(&c.faces[g1], &d);
                    let rhs = self.act(x, &outer.after(&d));
                    if lhs != rhs {
                        return Err(Error::Integrity(format!(
                            "cell `{}`: face {} then {} disagrees with the composite",
                            c.id,
                            O::face_key(g1),
                            d
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The same cells with the marking replaced by `marked`.
    pub fn with_marking(&self, marked: impl Fn(usize) -> bool) -> Self {
        let mut out = self.clone();
        for x in 0..out.cells.len() {
            out.cells[x].marked = out.cells[x].dim > 0 && marked(x);
        }
        out
    }

    /// Mark every cell of dimension greater than `n`.
    pub fn truncate(&self, n: usize) -> Self {
        self.with_marking(|x| self.cells[x].marked || self.cells[x].dim > n)
    }

    /// Non-degenerate cells that are faces of `x`, `x` included.
    pub fn face_closure(&self, x: usize) -> Vec<usize> {
        let mut seen = HashSet::from([x]);
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            for e in &self.cells[y].faces {
                if seen.insert(e.cell) {
                    stack.push(e.cell);
                }
            }
        }
        let mut out: Vec<usize> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// The maximal regular subobject in which every cube of dimension
    /// greater than `n` is marked.
    pub fn core(&self, n: usize) -> (Self, PresheafMap<O>) {
        let keep: Vec<bool> = (0..self.cells.len())
            .map(|x| self.face_closure(x).iter().all(|&y| self.cells[y].dim <= n || self.cells[y].marked))
            .collect();
        self.subobject(&keep).expect("the core is closed under faces")
    }

    /// The regular subobject on the cells flagged in `keep`, with its inclusion.
    pub fn subobject(&self, keep: &[bool]) -> Result<(Self, PresheafMap<O>)> {
        let mut new_index = vec![usize::MAX; self.cells.len()];
        let mut out = Presheaf::new();
        let mut incl = Vec::new();
        for (x, c) in self.cells.iter().enumerate() {
            if keep[x] {
                new_index[x] = out.add_cell(c.id.clone(), c.dim, c.marked, Vec::new())?;
                incl.push(self.top(x));
            }
        }
        for (x, c) in self.cells.iter().enumerate() {
            if !keep[x] {
                continue;
            }
            let mut faces = Vec::with_capacity(c.faces.len());
            for e in &c.faces {
                if !keep[e.cell] {
                    return Err(Error::Integrity(format!("`{}` is kept but its face `{}` is not", c.id, self.cells[e.cell].id)));
                }
                faces.push(Cube { op: e.op.clone(), cell: new_index[e.cell] });
            }
            out.set_faces(new_index[x], faces);
        }
        Ok((out, PresheafMap { assign: incl }))
    }

    /// Precompose the action with an involution of the shape category.
    pub fn dual_with(&self, op_map: impl Fn(&O) -> O, face_map: impl Fn(usize, usize) -> usize) -> Self {
        let mut out = self.clone();
        for c in out.cells.iter_mut() {
            let old = std::mem::take(&mut c.faces);
            let mut faces = old.clone();
            for (g, e) in old.iter().enumerate() {
                faces[face_map(c.dim, g)] = Cube { op: op_map(&e.op), cell: e.cell };
            }
            c.faces = faces;
        }
        out
    }

    /// Reverse the orientation of every cell.
    pub fn reversed(&self) -> Self {
        self.dual_with(O::reversed, O::reversed_face)
    }

    /// Rename cells, keeping structure.
    pub fn renamed(&self, name: impl Fn(usize, &str) -> String) -> Result<Self> {
        let mut out = Presheaf::new();
        for (x, c) in self.cells.iter().enumerate() {
            out.add_cell(name(x, &c.id), c.dim, c.marked, c.faces.clone())?;
        }
        Ok(out)
    }

    /// Equality after matching cells by identifier.
    pub fn same_as(&self, other: &Self) -> bool {
        if self.cells.len() != other.cells.len() {
            return false;
        }
        let to_other: Option<Vec<usize>> = self.cells.iter().map(|c| other.find(&c.id)).collect();
        let Some(to_other) = to_other else { return false };
        self.cells.iter().zip(&to_other).all(|(c, &y)| {
            let d = &other.cells[y];
            c.dim == d.dim
                && c.marked == d.marked
                && c.faces.iter().zip(&d.faces).all(|(e, f)| e.op == f.op && to_other[e.cell] == f.cell)
        })
    }

    /// Build a presheaf from all of its cubes, listed by dimension
    /// (`levels[n]` holds every `n`-cube, degenerate ones included).
    /// Returns the presheaf and the EZ normal form of every listed cube.
    pub fn from_levels<T: Clone + Eq + std::hash::Hash>(
        levels: &[Vec<T>],
        act: impl Fn(&T, &O) -> T,
        marked: impl Fn(&T, usize) -> bool,
        name: impl Fn(&T) -> String,
    ) -> Result<(Self, HashMap<T, Cube<O>>)> {
        let mut out = Presheaf::new();
        let mut normal: HashMap<T, Cube<O>> = HashMap::new();
        for (n, level) in levels.iter().enumerate() {
            let gens = O::generator_downs(n);
            for z in level {
                if normal.contains_key(z) {
                    continue;
                }
                let mut degenerate = None;
                for d in &gens {
                    let lower = act(z, &d.section());
                    if act(&lower, d) == *z {
                        let base = normal.get(&lower).ok_or_else(|| {
                            Error::Integrity(format!("cube `{}` has a face outside the listed cubes", name(z)))
                        })?;
                        degenerate = Some(Cube { op: base.op.after(d), cell: base.cell });
                        break;
                    }
                }
                let cube = match degenerate {
                    Some(c) => c,
                    None => {
                        let mut faces = Vec::with_capacity(O::face_count(n));
                        for g in 0..O::face_count(n) {
                            let w = act(z, &O::face(n, g));
                            faces.push(normal.get(&w).cloned().ok_or_else(|| {
                                Error::Integrity(format!("face of `{}` is not among the listed cubes", name(z)))
                            })?);
                        }
                        let x = out.add_cell(name(z), n, n > 0 && marked(z, n), faces)?;
                        out.top(x)
                    }
                };
                normal.insert(z.clone(), cube);
            }
        }
        Ok((out, normal))
    }

    /// The terminal object restricted to dimension zero: one vertex.
    pub fn point() -> Self {
        let mut p = Presheaf::new();
        p.add_cell("*", 0, false, Vec::new()).unwrap();
        p
    }
}

/// A map of marked presheaves, given on non-degenerate source cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresheafMap<O> {
    pub assign: Vec<Cube<O>>,
}

impl<O: Operator> PresheafMap<O> {
    pub fn identity(x: &Presheaf<O>) -> Self {
        PresheafMap { assign: (0..x.len()).map(|c| x.top(c)).collect() }
    }

    /// Image of a source cube.
    pub fn apply(&self, c: &Cube<O>, tgt: &Presheaf<O>) -> Cube<O> {
        tgt.act_cube(&self.assign[c.cell], &c.op)
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &PresheafMap<O>, next_tgt: &Presheaf<O>) -> PresheafMap<O> {
        PresheafMap { assign: self.assign.iter().map(|c| next.apply(c, next_tgt)).collect() }
    }

    pub fn validate(&self, src: &Presheaf<O>, tgt: &Presheaf<O>) -> Result<()> {
        if self.assign.len() != src.len() {
            return Err(Error::Integrity(format!("map assigns {} cells, source has {}", self.assign.len(), src.len())));
        }
        for (a, v) in self.assign.iter().enumerate() {
            let n = src.dim(a);
            if v.cell >= tgt.len() || v.op.src_dim() != n || v.op.tgt_dim() != tgt.dim(v.cell) || !v.op.is_down() {
                return Err(Error::Integrity(format!("`{}` is sent to an ill-formed cube", src.id(a))));
            }
            if src.is_marked(a) && !tgt.cube_marked(v) {
                return Err(Error::Integrity(format!("marked `{}` is sent to an unmarked cube", src.id(a))));
            }
            for g in 0..O::face_count(n) {
                let lhs = tgt.act_cube(v, &O::face(n, g));
                let rhs = self.apply(src.face(a, g), tgt);
                if lhs != rhs {
                    return Err(Error::Integrity(format!(
                        "map does not commute with face {} of `{}`",
                        O::face_key(g),
                        src.id(a)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Injective on cubes (for a valid map).
    pub fn is_mono(&self) -> bool {
        let mut seen = HashSet::new();
        self.assign.iter().all(|c| c.op.is_identity() && seen.insert(c.cell))
    }

    /// Bijective on cubes (for a valid map).
    pub fn is_entire(&self, tgt: &Presheaf<O>) -> bool {
        self.is_mono() && self.assign.len() == tgt.len()
    }

    /// Marking-creating: a source cube is marked iff its image is.
    pub fn is_regular(&self, src: &Presheaf<O>, tgt: &Presheaf<O>) -> bool {
        self.assign.iter().enumerate().all(|(a, c)| src.is_marked(a) == tgt.cube_marked(c))
    }

    pub fn is_iso(&self, src: &Presheaf<O>, tgt: &Presheaf<O>) -> bool {
        self.is_entire(tgt) && self.is_regular(src, tgt)
    }

    /// For a mono: target cell ↦ source cell.
    pub fn preimage(&self, tgt_len: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; tgt_len];
        for (a, c) in self.assign.iter().enumerate() {
            if c.op.is_identity() {
                out[c.cell] = Some(a);
            }
        }
        out
    }

    /// For an entire map, its inverse on underlying presheaves.
    pub fn inverse(&self, src: &Presheaf<O>, tgt: &Presheaf<O>) -> Option<PresheafMap<O>> {
        if !self.is_entire(tgt) {
            return None;
        }
        let pre = self.preimage(tgt.len());
        Some(PresheafMap { assign: pre.into_iter().map(|a| src.top(a.unwrap())).collect() })
    }
}

/// A map together with its source and target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow<O> {
    pub src: Presheaf<O>,
    pub tgt: Presheaf<O>,
    pub map: PresheafMap<O>,
}

impl<O: Operator> Arrow<O> {
    pub fn new(src: Presheaf<O>, tgt: Presheaf<O>, map: PresheafMap<O>) -> Result<Self> {
        map.validate(&src, &tgt)?;
        Ok(Arrow { src, tgt, map })
    }

    pub fn identity(x: &Presheaf<O>) -> Self {
        Arrow { src: x.clone(), tgt: x.clone(), map: PresheafMap::identity(x) }
    }

    /// The inclusion of a regular subobject given by a cell predicate.
    pub fn inclusion(x: &Presheaf<O>, keep: impl Fn(usize) -> bool) -> Result<Self> {
        let flags: Vec<bool> = (0..x.len()).map(keep).collect();
        let (sub, map) = x.subobject(&flags)?;
        Ok(Arrow { src: sub, tgt: x.clone(), map })
    }

    /// The identity of the underlying presheaf from `src` to `tgt`, which
    /// must share cells and differ only in marking.
    pub fn entire_identity(src: &Presheaf<O>, tgt: &Presheaf<O>) -> Result<Self> {
        Arrow::new(src.clone(), tgt.clone(), PresheafMap::identity(src))
    }

    pub fn is_mono(&self) -> bool {
        self.map.is_mono()
    }

    pub fn is_entire(&self) -> bool {
        self.map.is_entire(&self.tgt)
    }

    pub fn is_regular(&self) -> bool {
        self.map.is_regular(&self.src, &self.tgt)
    }

    pub fn is_iso(&self) -> bool {
        self.map.is_iso(&self.src, &self.tgt)
    }

    pub fn then(&self, next: &Arrow<O>) -> Arrow<O> {
        Arrow { src: self.src.clone(), tgt: next.tgt.clone(), map: self.map.then(&next.map, &next.tgt) }
    }
}

/// Where a cell of a pushout comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    Left(usize),
    Right(usize),
}

/// The pushout of a mono `f: A → X` along `g: A → Y`.
#[derive(Clone, Debug)]
pub struct Pushout<O> {
    pub object: Presheaf<O>,
    /// `X → P`
    pub left: PresheafMap<O>,
    /// `Y → P`
    pub right: PresheafMap<O>,
    pub origin: Vec<Origin>,
}

impl<O: Operator> Pushout<O> {
    /// The map `P → Z` induced by `X → Z` and `Y → Z`.
    pub fn induced(&self, from_left: &PresheafMap<O>, from_right: &PresheafMap<O>) -> PresheafMap<O> {
        PresheafMap {
            assign: self
                .origin
                .iter()
                .map(|o| match *o {
                    Origin::Left(x) => from_left.assign[x].clone(),
                    Origin::Right(y) => from_right.assign[y].clone(),
                })
                .collect(),
        }
    }
}

/// Pushout of `f: A → X` (a monomorphism) and `g: A → Y`.  The cells of the
/// result are those of `Y` followed by the cells of `X` outside the image of
/// `f`; a cube is marked iff it is the image of a marked cube.
pub fn pushout<O: Operator>(f: &Arrow<O>, g: &PresheafMap<O>, y: &Presheaf<O>) -> Result<Pushout<O>> {
    if !f.is_mono() {
        return Err(Error::Unsupported("pushout along a non-monomorphism".into()));
    }
    let x = &f.tgt;
    let pre = f.map.preimage(x.len());
    let mut p = y.clone();
    let mut origin: Vec<Origin> = (0..y.len()).map(Origin::Right).collect();
    let mut left: Vec<Option<Cube<O>>> = vec![None; x.len()];
    for xc in 0..x.len() {
        match pre[xc] {
            Some(a) => left[xc] = Some(g.assign[a].clone()),
            None => {
                let mut id = x.id(xc).to_string();
                while p.find(&id).is_some() {
                    id.push('\'');
                }
                let new = p.add_cell(id, x.dim(xc), x.is_marked(xc), Vec::new())?;
                origin.push(Origin::Left(xc));
                left[xc] = Some(p.top(new));
            }
        }
    }
    let left: Vec<Cube<O>> = left.into_iter().map(Option::unwrap).collect();
    for xc in 0..x.len() {
        if pre[xc].is_some() {
            if x.is_marked(xc) {
                let img = &left[xc];
                if img.op.is_identity() {
                    p.set_marked(img.cell, true);
                }
            }
            continue;
        }
        let faces = x
            .cell(xc)
            .faces
            .iter()
            .map(|e| {
                let img = &left[e.cell];
                Cube { op: img.op.after(&e.op), cell: img.cell }
            })
            .collect();
        p.set_faces(left[xc].cell, faces);
    }
    let right = PresheafMap::identity(y);
    Ok(Pushout { object: p, left: PresheafMap { assign: left }, right, origin })
}

/// Options for [`enumerate_maps`].
#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Cap on explored partial assignments.
    pub node_limit: u64,
    /// Stop after this many complete maps.
    pub max_maps: usize,
    /// Only injective maps (non-degenerate cells to distinct non-degenerate cells).
    pub injective: bool,
    /// Only marking-creating maps.
    pub regular: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { node_limit: default_node_limit(), max_maps: usize::MAX, injective: false, regular: false }
    }
}

/// The default search budget: `COMICAL_SUITE_BUDGET` if set, else 10⁶.
pub fn default_node_limit() -> u64 {
    std::env::var("COMICAL_SUITE_BUDGET").ok().and_then(|v| v.parse().ok()).unwrap_or(1_000_000)
}

#[derive(Clone, Debug)]
pub struct SearchResult<O> {
    pub maps: Vec<PresheafMap<O>>,
    pub overflow: bool,
    pub nodes: u64,
}

struct Searcher<'a, O: Operator> {
    a: &'a Presheaf<O>,
    x: &'a Presheaf<O>,
    opts: &'a SearchOptions,
    order: Vec<usize>,
    candidates: HashMap<usize, Vec<Cube<O>>>,
    assign: Vec<Option<Cube<O>>>,
    used: Vec<bool>,
    trail: Vec<usize>,
    found: Vec<PresheafMap<O>>,
    nodes: u64,
    overflow: bool,
}

impl<'a, O: Operator> Searcher<'a, O> {
    fn new(a: &'a Presheaf<O>, x: &'a Presheaf<O>, opts: &'a SearchOptions) -> Self {
        let mut order: Vec<usize> = (0..a.len()).collect();
        order.sort_by(|&p, &q| a.dim(q).cmp(&a.dim(p)).then(p.cmp(&q)));
        let mut candidates = HashMap::new();
        for n in order.iter().map(|&c| a.dim(c)) {
            candidates.entry(n).or_insert_with(|| {
                if opts.injective {
                    x.cells_of_dim(n).into_iter().map(|c| x.top(c)).collect()
                } else {
                    x.all_cubes(n)
                }
            });
        }
        Searcher {
            a,
            x,
            opts,
            order,
            candidates,
            assign: vec![None; a.len()],
            used: vec![false; x.len()],
            trail: Vec::new(),
            found: Vec::new(),
            nodes: 0,
            overflow: false,
        }
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let c = self.trail.pop().unwrap();
            if let Some(v) = self.assign[c].take() {
                if self.opts.injective {
                    self.used[v.cell] = false;
                }
            }
        }
    }

    /// Assign `a ↦ v` and everything it forces; false on a conflict.
    fn set(&mut self, a: usize, v: Cube<O>) -> bool {
        let mut stack = vec![(a, v)];
        while let Some((a, v)) = stack.pop() {
            if let Some(cur) = &self.assign[a] {
                if *cur != v {
                    return false;
                }
                continue;
            }
            let n = self.a.dim(a);
            if v.op.src_dim() != n {
                return false;
            }
            let marked = self.x.cube_marked(&v);
            if self.a.is_marked(a) && !marked {
                return false;
            }
            if self.opts.regular && !self.a.is_marked(a) && marked {
                return false;
            }
            if self.opts.injective {
                if !v.op.is_identity() || self.used[v.cell] {
                    return false;
                }
                self.used[v.cell] = true;
            }
            self.assign[a] = Some(v.clone());
            self.trail.push(a);
            for g in 0..O::face_count(n) {
                let entry = self.a.face(a, g);
                let image = self.x.act_cube(&v, &O::face(n, g));
                if entry.op.is_identity() {
                    stack.push((entry.cell, image));
                } else {
                    let lifted = self.x.act_cube(&image, &entry.op.section());
                    if self.x.act_cube(&lifted, &entry.op) != image {
                        return false;
                    }
                    stack.push((entry.cell, lifted));
                }
            }
        }
        true
    }

    fn done(&self) -> bool {
        self.overflow || self.found.len() >= self.opts.max_maps
    }

    fn search(&mut self, mut pos: usize) {
        while pos < self.order.len() && self.assign[self.order[pos]].is_some() {
            pos += 1;
        }
        if pos == self.order.len() {
            self.found.push(PresheafMap { assign: self.assign.iter().map(|c| c.clone().unwrap()).collect() });
            return;
        }
        let a = self.order[pos];
        let cands = self.candidates[&self.a.dim(a)].clone();
        for v in cands {
            self.nodes += 1;
            if self.nodes > self.opts.node_limit {
                self.overflow = true;
                return;
            }
            let mark = self.trail.len();
            if self.set(a, v) {
                self.search(pos + 1);
            }
            self.undo(mark);
            if self.done() {
                return;
            }
        }
    }
}

/// All maps `A → X`, by backtracking over cells in descending dimension.
pub fn enumerate_maps<O: Operator>(a: &Presheaf<O>, x: &Presheaf<O>, opts: &SearchOptions) -> SearchResult<O> {
    extend_map(a, x, &vec![None; a.len()], opts).expect("an empty partial map is consistent")
}

/// All maps `A → X` agreeing with a partial assignment; `None` when the
/// partial assignment is itself inconsistent.
pub fn extend_map<O: Operator>(
    a: &Presheaf<O>,
    x: &Presheaf<O>,
    partial: &[Option<Cube<O>>],
    opts: &SearchOptions,
) -> Option<SearchResult<O>> {
    let mut s = Searcher::new(a, x, opts);
    for (c, v) in partial.iter().enumerate() {
        if let Some(v) = v {
            if !s.set(c, v.clone()) {
                return None;
            }
        }
    }
    s.search(0);
    Some(SearchResult { maps: s.found, overflow: s.overflow, nodes: s.nodes })
}

/// Outcome of a lifting-property check.
#[derive(Clone, Debug)]
pub struct LiftReport<O> {
    pub holds: bool,
    /// A map `A → X` with no extension along `f`, when one was found.
    pub counterexample: Option<PresheafMap<O>>,
    /// The search budget ran out before a verdict.
    pub overflow: bool,
}

/// Whether every map `A → X` extends along the monomorphism `f: A → B`.
pub fn has_rlp<O: Operator>(x: &Presheaf<O>, f: &Arrow<O>, opts: &SearchOptions) -> LiftReport<O> {
    assert!(f.is_mono(), "lifting checks need a monomorphism");
    let maps = enumerate_maps(&f.src, x, opts);
    let mut overflow = maps.overflow;
    for u in maps.maps {
        let mut partial = vec![None; f.tgt.len()];
        for (a, img) in f.map.assign.iter().enumerate() {
            partial[img.cell] = Some(u.assign[a].clone());
        }
        let ext_opts = SearchOptions { max_maps: 1, ..opts.clone() };
        match extend_map(&f.tgt, x, &partial, &ext_opts) {
            Some(r) if !r.maps.is_empty() => {}
            Some(r) if r.overflow => overflow = true,
            _ => return LiftReport { holds: false, counterexample: Some(u), overflow },
        }
    }
    LiftReport { holds: !overflow, counterexample: None, overflow }
}

/// An isomorphism `X → Y` of marked presheaves, if one exists.
pub fn find_iso<O: Operator>(x: &Presheaf<O>, y: &Presheaf<O>) -> Option<PresheafMap<O>> {
    find_isos(x, y, 1).into_iter().next()
}

/// Up to `limit` isomorphisms `X → Y`.
pub fn find_isos<O: Operator>(x: &Presheaf<O>, y: &Presheaf<O>, limit: usize) -> Vec<PresheafMap<O>> {
    let profile = |p: &Presheaf<O>| {
        let mut v: Vec<(usize, bool)> = p.cells().iter().map(|c| (c.dim, c.marked)).collect();
        v.sort_unstable();
        v
    };
    if profile(x) != profile(y) {
        return Vec::new();
    }
    let opts = SearchOptions { max_maps: limit, injective: true, regular: true, ..SearchOptions::default() };
    enumerate_maps(x, y, &opts).maps
}

/// Isomorphisms of arrows between monomorphisms: a codomain isomorphism
/// carrying the image of `f` onto the image of `g`, with the induced
/// bijection of domains marking-creating.  Returns `(domain iso, codomain iso)`.
pub fn find_arrow_iso<O: Operator>(f: &Arrow<O>, g: &Arrow<O>) -> Option<(PresheafMap<O>, PresheafMap<O>)> {
    if !f.is_mono() || !g.is_mono() || f.src.len() != g.src.len() {
        return None;
    }
    let g_pre = g.map.preimage(g.tgt.len());
    'outer: for iso in find_isos(&f.tgt, &g.tgt, 64) {
        let mut dom = Vec::with_capacity(f.src.len());
        let mut hit = vec![false; g.src.len()];
        for (a, img) in f.map.assign.iter().enumerate() {
            let target = &iso.assign[img.cell];
            let Some(b) = g_pre[target.cell] else { continue 'outer };
            if hit[b] || f.src.is_marked(a) != g.src.is_marked(b) {
                continue 'outer;
            }
            hit[b] = true;
            dom.push(g.src.top(b));
        }
        return Some((PresheafMap { assign: dom }, iso));
    }
    None
}

/// Whether a commutative square
/// ```text
///   A --top--> B
///   |          |
/// left       right
///   v          v
///   C -bottom-> D
/// ```
/// with `left` a monomorphism is a pushout.
pub fn is_pushout_square<O: Operator>(top: &Arrow<O>, left: &Arrow<O>, right: &Arrow<O>, bottom: &Arrow<O>) -> Result<bool> {
    let via_right = top.map.then(&right.map, &right.tgt);
    let via_bottom = left.map.then(&bottom.map, &bottom.tgt);
    if via_right != via_bottom {
        return Err(Error::Integrity("square does not commute".into()));
    }
    let p = pushout(left, &top.map, &top.tgt)?;
    let induced = p.induced(&bottom.map, &right.map);
    induced.validate(&p.object, &right.tgt)?;
    Ok(induced.is_iso(&p.object, &right.tgt))
}

/// Factor `h: A → D` through the monomorphism `m: B → D`.
pub fn factor_through_mono<O: Operator>(h: &PresheafMap<O>, m: &Arrow<O>) -> Option<PresheafMap<O>> {
    let pre = m.map.preimage(m.tgt.len());
    let mut assign = Vec::with_capacity(h.assign.len());
    for c in &h.assign {
        assign.push(Cube { op: c.op.clone(), cell: pre[c.cell]? });
    }
    Some(PresheafMap { assign })
}
