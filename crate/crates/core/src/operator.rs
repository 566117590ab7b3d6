use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use crate::error::Result;

/// Operators of a shape category (the box category or the simplex category)
/// acting on the right of a presheaf.
///
/// Every operator factors uniquely as a "down" part (degeneracies and, for
/// cubes, connections) followed by an "up" part (faces).
pub trait Operator:
    Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn src_dim(&self) -> usize;
    fn tgt_dim(&self) -> usize;
    fn identity(n: usize) -> Self;
    fn is_identity(&self) -> bool {
        self.src_dim() == self.tgt_dim() && *self == Self::identity(self.src_dim())
    }
    /// `self ∘ first`: apply `first`, then `self`.
    fn after(&self, first: &Self) -> Self;
    /// Factor as `(down, up)` with `self = up ∘ down`.
    fn split(&self) -> (Self, Self);
    /// True when the operator lies in the wide subcategory of degeneracies
    /// (and connections).
    fn is_down(&self) -> bool;
    /// True when the operator is a (possibly iterated) face.
    fn is_up(&self) -> bool;
    /// Number of codimension-one faces of an `n`-dimensional cell.
    fn face_count(n: usize) -> usize;
    /// The `g`-th codimension-one face operator into dimension `n`.
    fn face(n: usize, g: usize) -> Self;
    /// For a non-identity face operator, split off its leading generator:
    /// returns `(g, rest)` with `self = face(tgt, g) ∘ rest`.
    fn peel_face(&self) -> Option<(usize, Self)>;
    /// Textual key of the `g`-th face, as used by the object file format.
    fn face_key(g: usize) -> String;
    fn parse_face_key(key: &str, n: usize) -> Option<usize>;
    /// All down operators with source dimension `n`, identity included.
    fn downs(n: usize) -> Arc<Vec<Self>>;
    /// The generating down operators with source dimension `n`.
    fn generator_downs(n: usize) -> Vec<Self>;
    /// A face operator `s` with `self ∘ s = id`; only meaningful for down operators.
    fn section(&self) -> Self;
    /// Parse the textual word syntax; `src` fixes the source dimension,
    /// otherwise the least admissible one is used.
    fn parse(text: &str, src: Option<usize>) -> Result<Self>;
    /// Reverse the orientation (vertex order / coordinate order).
    fn reversed(&self) -> Self;
    /// Where the `g`-th face of an `n`-cell goes under [`Operator::reversed`].
    fn reversed_face(n: usize, g: usize) -> usize;
}
