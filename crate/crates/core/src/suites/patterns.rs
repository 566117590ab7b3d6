//! Cells of subobjects of cubes, and of their tensor products, labelled by
//! the face of `□ᴺ` they sit over.  Comparison maps between such objects
//! send a cell to the cell with the same pattern.

use std::collections::HashMap;

use crate::cubeset::{parse_pattern, pattern_id, CubicalArrow, CubicalMap, MarkedCubicalSet, Pattern};
use crate::error::{Error, Result};
use crate::gray::TensorProduct;
use crate::presheaf::{Arrow, PresheafMap};

/// Patterns of an object whose ids are pattern ids.
pub fn cell_patterns(x: &MarkedCubicalSet) -> Vec<Pattern> {
    (0..x.len()).map(|c| parse_pattern(x.id(c))).collect()
}

/// Patterns of `X ⊗ Y` by concatenation.
pub fn tensor_patterns(p: &TensorProduct, px: &[Pattern], py: &[Pattern]) -> Vec<Pattern> {
    p.pairs.iter().map(|&(a, b)| px[a].iter().chain(&py[b]).copied().collect()).collect()
}

/// Patterns of the source of a monomorphism, read off its image.
pub(crate) fn pulled_back(f: &CubicalMap, tgt: &[Pattern]) -> Vec<Pattern> {
    f.assign.iter().map(|c| tgt[c.cell].clone()).collect()
}

/// The map sending each cell to the cell of `tgt` with the same pattern.
pub fn pattern_map(src: &MarkedCubicalSet, ps: &[Pattern], tgt: &MarkedCubicalSet, pt: &[Pattern]) -> Result<CubicalMap> {
    let index: HashMap<&Pattern, usize> = pt.iter().enumerate().map(|(c, p)| (p, c)).collect();
    let assign = (0..src.len())
        .map(|c| {
            index
                .get(&ps[c])
                .map(|&t| tgt.top(t))
                .ok_or_else(|| Error::Integrity(format!("no cell over {} in the target", pattern_id(&ps[c]))))
        })
        .collect::<Result<_>>()?;
    Ok(PresheafMap { assign })
}

pub(crate) fn pattern_arrow(
    src: &MarkedCubicalSet,
    ps: &[Pattern],
    tgt: &MarkedCubicalSet,
    pt: &[Pattern],
) -> Result<CubicalArrow> {
    let map = pattern_map(src, ps, tgt, pt)?;
    Arrow::new(src.clone(), tgt.clone(), map)
}

/// Check that the pattern map is an isomorphism of marked objects; on
/// failure, name a cell where the two sides differ.
pub(crate) fn pattern_iso(
    src: &MarkedCubicalSet,
    ps: &[Pattern],
    tgt: &MarkedCubicalSet,
    pt: &[Pattern],
) -> Result<std::result::Result<(), String>> {
    if src.len() != tgt.len() {
        return Ok(Err(format!("{} cells against {}", src.len(), tgt.len())));
    }
    let map = match pattern_map(src, ps, tgt, pt) {
        Ok(m) => m,
        Err(e) => return Ok(Err(e.to_string())),
    };
    if let Err(e) = map.validate(src, tgt) {
        return Ok(Err(format!("not a map: {e}")));
    }
    for (c, img) in map.assign.iter().enumerate() {
        if src.is_marked(c) != tgt.is_marked(img.cell) {
            return Ok(Err(format!(
                "{} is {} but its counterpart is {}",
                pattern_id(&ps[c]),
                if src.is_marked(c) { "marked" } else { "unmarked" },
                if tgt.is_marked(img.cell) { "marked" } else { "unmarked" }
            )));
        }
    }
    Ok(super::ensure(map.is_iso(src, tgt), || "the pattern map is not bijective".into()))
}

/// Compare an arrow `f: D → C` with patterns on `C` against a standard
/// inclusion `S ↪ T` of pattern-named objects: both comparison maps must
/// be isomorphisms.  (They commute with the arrows by construction.)
pub(crate) fn compare_arrows(
    f: &CubicalArrow,
    cod_patterns: &[Pattern],
    std: &CubicalArrow,
) -> Result<std::result::Result<(), String>> {
    let dom_patterns = pulled_back(&f.map, cod_patterns);
    let std_cod = cell_patterns(&std.tgt);
    let std_dom = pulled_back(&std.map, &std_cod);
    if let Err(why) = pattern_iso(&f.tgt, cod_patterns, &std.tgt, &std_cod)? {
        return Ok(Err(format!("codomains: {why}")));
    }
    if let Err(why) = pattern_iso(&f.src, &dom_patterns, &std.src, &std_dom)? {
        return Ok(Err(format!("domains: {why}")));
    }
    Ok(Ok(()))
}
