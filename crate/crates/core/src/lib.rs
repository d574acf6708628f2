//! Centered Hardy–Littlewood maximal operators on finite graphs and on the
//! integers.
//!
//! * [`graph`]: simple connected graphs with their hop metric and balls.
//! * [`maximal`]: exact `M_G f`, `p`-norms and `p`-variations.
//! * [`search`]: grid oracles, coordinate ascent and structured searches
//!   for `||M_G||_p` and `C_{G,p}`.
//! * [`constants`]: closed-form sharp constants, bounds and `p -> infinity`
//!   limits for stars and complete graphs.
//! * [`atlas`]: enumeration of small connected graphs up to isomorphism.
//! * [`zline`]: centered and uncentered maximal operators on `Z`, with
//!   rigorously bounded series.

pub mod atlas;
pub mod constants;
pub mod error;
pub mod graph;
pub mod maximal;
pub mod optimize;
pub mod search;
pub mod zline;

pub use error::{Error, Result};
pub use graph::{Family, Geometry, Graph, VertexSet};
pub use maximal::{graph_maximal, p_norm, p_variation, MaximalProfile, VertexFunction};
pub use search::{Objective, SearchConfig, SearchResult};
pub use zline::{LatticeFunction, TailBound};
