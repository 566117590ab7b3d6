//! Marked cubical sets with connections, their Gray tensor products,
//! comical lifting checks, and triangulation to marked simplicial sets.

pub mod boxcat;
pub mod category;
pub mod cubeset;
pub mod error;
pub mod gray;
pub mod homotopy;
pub mod io;
pub mod operator;
pub mod presheaf;
pub mod simplex;
pub mod simpset;
pub mod suites;
pub mod triangulate;

pub use error::{Error, Result};
