//! Leibniz products of boundary and box inclusions, the elementary box
//! decomposition, the squares behind the monoidal model structure, and the
//! Gray tensor of generating monomorphisms.

use super::patterns::{cell_patterns, compare_arrows, pattern_arrow, pulled_back, tensor_patterns};
use super::{ensure, Recorder, SuiteParams};
use crate::cubeset::{
    boundary_inclusion, comical_box_inclusion, cube, marker, marking_extension_pair, open_box, pattern_id, CubicalArrow, Pattern,
};
use crate::error::Result;
use crate::gray::{leibniz, mu, tensor, TensorMode};
use crate::presheaf::{is_pushout_square, pushout, Arrow};

/// A Leibniz product together with the patterns of its codomain.
struct Patterned {
    arrow: CubicalArrow,
    cod: Vec<Pattern>,
}

impl Patterned {
    fn base(f: CubicalArrow) -> Self {
        let cod = cell_patterns(&f.tgt);
        Patterned { arrow: f, cod }
    }

    fn dom(&self) -> Vec<Pattern> {
        pulled_back(&self.arrow.map, &self.cod)
    }
}

fn leibniz_patterned(f: &Patterned, g: &Patterned, mode: TensorMode) -> Result<Patterned> {
    let l = leibniz(&f.arrow, &g.arrow, mode)?;
    let p = tensor(&f.arrow.tgt, &g.arrow.tgt, mode);
    let cod = tensor_patterns(&p, &f.cod, &g.cod);
    Ok(Patterned { arrow: l.arrow, cod })
}

fn flat_box_inclusion(n: usize, k: usize, e: u8) -> Result<CubicalArrow> {
    let c = cube(n);
    let b = open_box(n, k, e)?;
    Arrow::inclusion(&c, |x| b.find(c.id(x)).is_some())
}

pub(super) fn boundary_products(rec: &mut Recorder, params: &SuiteParams) {
    let max = params.dim(5);
    let geo = TensorMode::Geometric;
    let bd = |n: usize| Patterned::base(boundary_inclusion(n));
    let mut run = |name: String, f: Result<Patterned>, std: Result<CubicalArrow>| {
        let r = f.and_then(|f| std.and_then(|s| compare_arrows(&f.arrow, &f.cod, &s)));
        rec.outcome(name, r);
    };
    for total in 0..=max {
        for m in 0..=total {
            let n = total - m;
            run(
                format!("∂□{m} ⊗̂ ∂□{n} is ∂□{total}"),
                leibniz_patterned(&bd(m), &bd(n), geo),
                Ok(boundary_inclusion(total)),
            );
            for e in 0..=1u8 {
                for k in 1..=m {
                    run(
                        format!("⊓{m}({k},{e}) ⊗̂ ∂□{n} is ⊓{total}({k},{e})"),
                        flat_box_inclusion(m, k, e).and_then(|b| leibniz_patterned(&Patterned::base(b), &bd(n), geo)),
                        flat_box_inclusion(total, k, e),
                    );
                }
                for k in 1..=n {
                    run(
                        format!("∂□{m} ⊗̂ ⊓{n}({k},{e}) is ⊓{total}({},{e})", m + k),
                        flat_box_inclusion(n, k, e).and_then(|b| leibniz_patterned(&bd(m), &Patterned::base(b), geo)),
                        flat_box_inclusion(total, m + k, e),
                    );
                }
            }
        }
    }
}

/// The Leibniz expression for `⊓ⁿ_{k,ε} ↪ □ⁿ_{k,ε}` built from boxes of dimension 2 or 3.
fn elementary_expression(n: usize, k: usize, e: u8) -> Result<Patterned> {
    let lax = TensorMode::Lax;
    let bd = |d: usize| Patterned::base(boundary_inclusion(d));
    let comical = |d: usize, k: usize| comical_box_inclusion(d, k, e).map(Patterned::base);
    if k == 1 {
        leibniz_patterned(&comical(2, 1)?, &bd(n - 2), lax)
    } else if k == n {
        leibniz_patterned(&bd(n - 2), &comical(2, 2)?, lax)
    } else {
        let left = leibniz_patterned(&bd(k - 2), &comical(3, 2)?, lax)?;
        leibniz_patterned(&left, &bd(n - k - 1), lax)
    }
}

pub(super) fn elementary_boxes(rec: &mut Recorder, params: &SuiteParams) {
    let max = params.dim(4);
    for n in 2..=max {
        for k in 1..=n {
            for e in 0..=1u8 {
                let r = elementary_expression(n, k, e)
                    .and_then(|f| comical_box_inclusion(n, k, e).and_then(|std| compare_arrows(&f.arrow, &f.cod, &std)));
                rec.outcome(format!("⊓{n}({k},{e}) ↪ □{n}({k},{e}) decomposes"), r);
            }
        }
    }
}

/// The square with `left` on the left, the Leibniz map on the right and
/// pattern maps along the top and bottom.
fn pattern_square(left: &CubicalArrow, right: &Patterned) -> Result<std::result::Result<(), String>> {
    let top = pattern_arrow(&left.src, &pulled_back(&left.map, &cell_patterns(&left.tgt)), &right.arrow.src, &right.dom());
    let bottom = pattern_arrow(&left.tgt, &cell_patterns(&left.tgt), &right.arrow.tgt, &right.cod);
    let (top, bottom) = match (top, bottom) {
        (Ok(t), Ok(b)) => (t, b),
        (Err(e), _) => return Ok(Err(format!("top: {e}"))),
        (_, Err(e)) => return Ok(Err(format!("bottom: {e}"))),
    };
    if is_pushout_square(&top, left, &right.arrow, &bottom)? {
        return Ok(Ok(()));
    }
    let po = pushout(left, &top.map, &top.tgt)?;
    let induced = po.induced(&bottom.map, &right.arrow.map);
    let cod = &right.arrow.tgt;
    let why = (0..po.object.len())
        .find(|&c| po.object.is_marked(c) != cod.is_marked(induced.assign[c].cell))
        .map(|c| {
            let p = &right.cod[induced.assign[c].cell];
            format!("{} is marked in the codomain but not in the pushout", pattern_id(p))
        });
    Ok(Err(why.unwrap_or_else(|| "the induced map is not invertible".into())))
}

pub(super) fn monoidal_model_squares(rec: &mut Recorder, params: &SuiteParams) {
    let max_m = params.dim(3);
    for mode in [TensorMode::Lax, TensorMode::Pseudo] {
        for m in 1..=max_m {
            for n in 0..=2 {
                for k in 1..=m {
                    for e in 0..=1u8 {
                        let tag = format!("{mode:?} m={m} n={n} (k,ε)=({k},{e})").to_lowercase();
                        let bd = Patterned::base(boundary_inclusion(n));
                        let f = comical_box_inclusion(m, k, e).map(Patterned::base).and_then(|b| {
                            let f = leibniz_patterned(&b, &bd, mode)?;
                            pattern_square(&comical_box_inclusion(m + n, k, e)?, &f)
                        });
                        rec.outcome(format!("square f, {tag}"), f);
                        if n >= 1 {
                            let g = comical_box_inclusion(m, k, e).map(Patterned::base).and_then(|b| {
                                let g = leibniz_patterned(&b, &Patterned::base(marker(n)), mode)?;
                                pattern_square(&marking_extension_pair(m + n, k, e)?, &g)
                            });
                            rec.outcome(format!("square g, {tag}"), g);
                        }
                        let h = marking_extension_pair(m, k, e).map(Patterned::base).and_then(|x| {
                            let h = leibniz_patterned(&x, &bd, mode)?;
                            pattern_square(&marking_extension_pair(m + n, k, e)?, &h)
                        });
                        rec.outcome(format!("square h, {tag}"), h);
                    }
                }
            }
        }
    }
}

fn generating_monos(max: usize) -> Vec<(String, usize, CubicalArrow)> {
    let mut out: Vec<(String, usize, CubicalArrow)> =
        (0..=max).map(|n| (format!("∂□{n}"), n, boundary_inclusion(n))).collect();
    out.extend((1..=max).map(|n| (format!("□{n}→m□{n}"), n, marker(n))));
    out
}

pub(super) fn gray_monos(rec: &mut Recorder, params: &SuiteParams) {
    let max = params.dim(3);
    let monos = generating_monos(max);
    for (fname, fd, f) in &monos {
        for (gname, gd, g) in &monos {
            if fd + gd > max {
                continue;
            }
            for mode in [TensorMode::Lax, TensorMode::Pseudo] {
                let tag = format!("{fname} ⊗̂ {gname} ({mode:?})").to_lowercase();
                let l = match leibniz(f, g, mode) {
                    Ok(l) => l.arrow,
                    Err(e) => {
                        rec.outcome(format!("{tag} exists"), Err(e));
                        continue;
                    }
                };
                rec.check(format!("{tag} is mono"), l.is_mono(), || "not injective".into());
                if f.is_regular() && g.is_regular() {
                    rec.check(format!("{tag} is regular"), l.is_regular(), || "a marked cube is not reflected".into());
                }
                if f.is_entire() || g.is_entire() {
                    rec.check(format!("{tag} is entire"), l.is_entire(), || "misses a cell".into());
                }
                if f.is_entire() && g.is_entire() {
                    rec.check(format!("{tag} is invertible"), l.is_iso(), || "not an isomorphism".into());
                }
            }
            if f.is_entire() || g.is_entire() {
                let name = format!("{fname} ⊗̂ {gname}: the μ square is a pushout");
                let r = (|| {
                    let lax = leibniz(f, g, TensorMode::Lax)?.arrow;
                    let pseudo = leibniz(f, g, TensorMode::Pseudo)?.arrow;
                    let top = Arrow::entire_identity(&lax.src, &pseudo.src)?;
                    let bottom = mu(&f.tgt, &g.tgt)?;
                    Ok(ensure(is_pushout_square(&top, &lax, &pseudo, &bottom)?, || "the induced map is not invertible".into()))
                })();
                rec.outcome(name, r);
            }
        }
    }
}
