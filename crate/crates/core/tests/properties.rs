use proptest::prelude::*;

use comical::boxcat::{BoxOperator, Duality, Generator, Vertex};
use comical::cubeset::{cube, MarkedCubicalSet};
use comical::gray::{tensor, TensorMode};
use comical::io::{object_to_json, parse_object};
use comical::operator::Operator;
use comical::simplex::SimplicialOperator;
use comical::simpset::{precomplicial_reflect, simplex, MarkedSimplicialSet};
use comical::triangulate::{strategy_lift, triangulate, CubeSimplex};

const MAX_DIM: usize = 5;

fn generators(dim: usize) -> Vec<Generator> {
    let mut out = Vec::new();
    if dim < MAX_DIM {
        for i in 1..=dim + 1 {
            out.extend([Generator::Face(i, 0), Generator::Face(i, 1)]);
        }
    }
    out.extend((1..=dim).map(Generator::Degeneracy));
    for i in 1..dim {
        out.extend([Generator::Connection(i, 0), Generator::Connection(i, 1)]);
    }
    out
}

/// A word in application order, chosen step by step from admissible generators.
fn word(src: usize, choices: &[usize]) -> (Vec<Generator>, usize) {
    let mut d = src;
    let mut w = Vec::new();
    for &c in choices {
        let gens = generators(d);
        if gens.is_empty() {
            break;
        }
        let g = gens[c % gens.len()];
        d = g.tgt_dim(d).unwrap();
        w.push(g);
    }
    (w, d)
}

fn apply(g: Generator, v: &[bool]) -> Vec<bool> {
    let mut out = v.to_vec();
    match g {
        Generator::Face(i, e) => out.insert(i - 1, e == 1),
        Generator::Degeneracy(i) => {
            out.remove(i - 1);
        }
        Generator::Connection(i, e) => {
            out[i - 1] = if e == 1 { out[i - 1] || out[i] } else { out[i - 1] && out[i] };
            out.remove(i);
        }
    }
    out
}

/// A random subobject of `x` generated by the flagged cells, with a random marking.
fn random_sub<O: Operator>(x: &comical::presheaf::Presheaf<O>, gens: &[bool], marks: &[bool]) -> comical::presheaf::Presheaf<O> {
    let mut keep = vec![false; x.len()];
    for c in (0..x.len()).filter(|&c| gens[c % gens.len()]) {
        for f in x.face_closure(c) {
            keep[f] = true;
        }
    }
    let (sub, _) = x.subobject(&keep).unwrap();
    sub.with_marking(|c| marks[c % marks.len()])
}

proptest! {
    #[test]
    fn words_agree_with_the_vertex_model(src in 0..=4usize, choices in prop::collection::vec(0..64usize, 0..6)) {
        let (w, _) = word(src, &choices);
        let op = BoxOperator::from_word(&w, src).unwrap();
        let expected: Vec<Vertex> =
            Vertex::all(src).into_iter().map(|v| Vertex(w.iter().fold(v.0, |acc, &g| apply(g, &acc)))).collect();
        prop_assert_eq!(op.vertex_function(), expected);
        prop_assert_eq!(BoxOperator::parse(&op.to_string(), Some(src)).unwrap(), op.clone());
        prop_assert_eq!(BoxOperator::from_word(&op.word(), src).unwrap(), op);
    }

    #[test]
    fn composition_is_associative(src in 0..=3usize, a in prop::collection::vec(0..64usize, 0..4),
                                  b in prop::collection::vec(0..64usize, 0..4), c in prop::collection::vec(0..64usize, 0..4)) {
        let (wa, da) = word(src, &a);
        let (wb, db) = word(da, &b);
        let (wc, _) = word(db, &c);
        let (fa, fb, fc) = (
            BoxOperator::from_word(&wa, src).unwrap(),
            BoxOperator::from_word(&wb, da).unwrap(),
            BoxOperator::from_word(&wc, db).unwrap(),
        );
        let left = fa.then(&fb).unwrap().then(&fc).unwrap();
        let right = fa.then(&fb.then(&fc).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn dualities_are_involutions(src in 0..=4usize, choices in prop::collection::vec(0..64usize, 0..5)) {
        let (w, _) = word(src, &choices);
        let op = BoxOperator::from_word(&w, src).unwrap();
        for d in [Duality::Co, Duality::Op, Duality::Coop] {
            prop_assert_eq!(op.dual(d).dual(d), op.clone());
        }
    }

    #[test]
    fn cube_simplices_are_their_vertex_chains(n in 1..=4usize, pick in 0..10_000usize) {
        let all = CubeSimplex::all_nondegenerate(n);
        let phi = &all[pick % all.len()];
        let chain: Vec<Vertex> = (0..=phi.r()).map(|t| phi.vertex(t)).collect();
        prop_assert_eq!(&CubeSimplex::from_vertices(&chain).unwrap(), phi);
    }

    #[test]
    fn strategy_lift_restricts_back(n in 2..=4usize, pick in 0..10_000usize) {
        let repeated: Vec<CubeSimplex> =
            CubeSimplex::all_nondegenerate(n).into_iter().filter(|p| strategy_lift(p).is_ok()).collect();
        let phi = &repeated[pick % repeated.len()];
        let s = strategy_lift(phi).unwrap();
        let back = s.lifted.act(&SimplicialOperator::face(phi.r() + 1, s.p));
        prop_assert_eq!(&back, phi);
        prop_assert_eq!(s.chi().r(), phi.r());
        prop_assert_eq!(s.psi().r(), phi.r());
    }

    #[test]
    fn reflected_triangulation_is_reflection_of_raw(n in 1..=3usize, gens in prop::collection::vec(any::<bool>(), 1..30),
                                                     marks in prop::collection::vec(any::<bool>(), 1..30)) {
        let x: MarkedCubicalSet = random_sub(&cube(n), &gens, &marks);
        let raw = triangulate(&x, false).object;
        let reflected = triangulate(&x, true).object;
        prop_assert!(reflected.same_as(&precomplicial_reflect(&raw)));
    }

    #[test]
    fn reflection_is_idempotent(n in 1..=3usize, gens in prop::collection::vec(any::<bool>(), 1..16),
                                marks in prop::collection::vec(any::<bool>(), 1..16)) {
        let s: MarkedSimplicialSet = random_sub(&simplex(n), &gens, &marks);
        let once = precomplicial_reflect(&s);
        prop_assert!(precomplicial_reflect(&once).same_as(&once));
        prop_assert!((0..s.len()).all(|c| !s.is_marked(c) || once.is_marked(c)));
    }

    #[test]
    fn objects_round_trip_through_json(n in 0..=3usize, gens in prop::collection::vec(any::<bool>(), 1..30),
                                       marks in prop::collection::vec(any::<bool>(), 1..30)) {
        let x: MarkedCubicalSet = random_sub(&cube(n), &gens, &marks);
        let back: MarkedCubicalSet = parse_object(&object_to_json(&x).to_string()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn tensor_cells_are_pairs(m in 0..=2usize, n in 0..=2usize, gx in prop::collection::vec(any::<bool>(), 1..10),
                              gy in prop::collection::vec(any::<bool>(), 1..10), marks in prop::collection::vec(any::<bool>(), 1..10)) {
        let x: MarkedCubicalSet = random_sub(&cube(m), &gx, &marks);
        let y: MarkedCubicalSet = random_sub(&cube(n), &gy, &marks);
        for mode in [TensorMode::Geometric, TensorMode::Lax, TensorMode::Pseudo] {
            let p = tensor(&x, &y, mode);
            prop_assert_eq!(p.object.len(), x.len() * y.len());
            prop_assert!(p.object.validate().is_ok());
            for (c, &(a, b)) in p.pairs.iter().enumerate() {
                prop_assert_eq!(p.object.dim(c), x.dim(a) + y.dim(b));
            }
        }
    }
}
