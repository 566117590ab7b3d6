//! Homotopies, composites and the homotopy category on nerves of small
//! categories.

use super::{ensure, Recorder, SuiteParams};
use crate::boxcat::Duality;
use crate::category::FiniteCategory;
use crate::cubeset::{cube_label, cubical_nerve, dual, MarkedCubicalSet};
use crate::error::Result;
use crate::homotopy::{are_homotopic, composites, ho1, homotopy_witnesses, one_cubes, HomotopyKind, OneCube};

/// Posets on `0..n` whose order extends the order of labels.
fn labelled_posets(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u32..1 << pairs.len())
        .map(|mask| pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &p)| p).collect::<Vec<_>>())
        .filter(|rel| {
            rel.iter().all(|&(i, j)| rel.iter().filter(|&&(a, _)| a == j).all(|&(_, k)| rel.contains(&(i, k))))
        })
        .collect()
}

fn fixtures(max_elements: usize) -> Result<Vec<(String, FiniteCategory)>> {
    let mut out = Vec::new();
    for n in 1..=max_elements {
        for rel in labelled_posets(n) {
            let name = format!("poset {n} {rel:?}");
            out.push((name, FiniteCategory::poset(n, &rel)?));
        }
    }
    out.push(("free isomorphism".into(), FiniteCategory::free_isomorphism()));
    out.push(("commuting square".into(), FiniteCategory::commuting_square()));
    Ok(out)
}

fn ends(x: &MarkedCubicalSet, c: &OneCube) -> (usize, usize) {
    let at = |g: usize| x.act_cube(c, &crate::operator::Operator::face(1, g)).cell;
    (at(0), at(1))
}

/// All the homotopy and composite checks on one nerve.
fn check_nerve(x: &MarkedCubicalSet) -> Result<std::result::Result<(), String>> {
    let cubes = one_cubes(x);
    let label = |c: &OneCube| cube_label(x, c);
    let n = cubes.len();
    let mut rel = vec![vec![false; n]; n];
    for (a, f) in cubes.iter().enumerate() {
        for (b, g) in cubes.iter().enumerate() {
            if ends(x, f) != ends(x, g) {
                continue;
            }
            let hits: Vec<bool> = HomotopyKind::ALL
                .iter()
                .map(|&k| homotopy_witnesses(x, f, g, k).map(|w| !w.is_empty()))
                .collect::<Result<_>>()?;
            if hits.iter().any(|&h| h != hits[0]) {
                return Ok(Err(format!("patterns disagree on {} ∼ {}: {hits:?}", label(f), label(g))));
            }
            rel[a][b] = hits[0];
            if are_homotopic(x, f, g)?.is_some() != hits[0] {
                return Ok(Err(format!("are_homotopic disagrees on {} ∼ {}", label(f), label(g))));
            }
        }
    }
    for a in 0..n {
        if !rel[a][a] {
            return Ok(Err(format!("{} is not homotopic to itself", label(&cubes[a]))));
        }
        for b in 0..n {
            if rel[a][b] != rel[b][a] {
                return Ok(Err(format!("not symmetric on {}, {}", label(&cubes[a]), label(&cubes[b]))));
            }
            for c in 0..n {
                if rel[a][b] && rel[b][c] && !rel[a][c] {
                    return Ok(Err(format!("not transitive through {}", label(&cubes[b]))));
                }
            }
        }
    }
    let index = |c: &OneCube| cubes.iter().position(|d| d == c).expect("composites are 1-cubes");
    for (a, f) in cubes.iter().enumerate() {
        for (b, g) in cubes.iter().enumerate() {
            if ends(x, f).1 != ends(x, g).0 {
                continue;
            }
            let comp = composites(x, f, g)?;
            let Some(first) = comp.first() else {
                return Ok(Err(format!("{} and {} have no composite", label(f), label(g))));
            };
            let h = index(&first.result);
            if let Some(w) = comp.iter().find(|w| !rel[h][index(&w.result)]) {
                return Ok(Err(format!("composites of {} and {} of kind {} disagree", label(f), label(g), w.kind)));
            }
            for (a2, f2) in cubes.iter().enumerate().filter(|&(a2, _)| rel[a][a2]) {
                for g2 in cubes.iter().enumerate().filter(|&(b2, _)| rel[b][b2]).map(|(_, g2)| g2) {
                    let c2 = composites(x, f2, g2)?;
                    if c2.iter().any(|w| !rel[h][index(&w.result)]) {
                        return Ok(Err(format!(
                            "composition does not respect homotopy at {} ∼ {}",
                            label(&cubes[a2]),
                            label(f)
                        )));
                    }
                }
            }
        }
    }
    Ok(Ok(()))
}

pub(super) fn suite(rec: &mut Recorder, params: &SuiteParams) {
    let fixtures = match fixtures(params.dim(4)) {
        Ok(f) => f,
        Err(e) => {
            rec.outcome("fixtures", Err(e));
            return;
        }
    };
    for (name, c) in &fixtures {
        let x = match cubical_nerve(c, 2) {
            Ok(x) => x,
            Err(e) => {
                rec.outcome(format!("{name}: nerve"), Err(e));
                continue;
            }
        };
        rec.outcome(format!("{name}: homotopy relation, composites and congruence"), check_nerve(&x));
        let r = ho1(&x).and_then(|h| {
            let hop = ho1(&dual(&x, Duality::Op))?;
            Ok(ensure(h.category.is_isomorphic(c), || "ho1 of the nerve differs from the category".into())
                .and_then(|_| ensure(hop.category.is_isomorphic(&h.category.opposite()), || "ho1 does not commute with op".into())))
        });
        rec.outcome(format!("{name}: ho1 recovers the category and its opposite"), r);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_naturally_labelled_posets() {
        let counts: Vec<usize> = (1..=4).map(|n| labelled_posets(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 7, 40]);
    }
}
