//! Exact real-root machinery: interval arithmetic, Sturm-chain counting,
//! root isolation, and bisection refinement.

pub mod interval;
pub mod sturm;

pub use interval::{eval_poly_interval, eval_rational_interval, RatInterval};
pub use sturm::{
    count_roots, isolate_roots, isolate_roots_in, refine, refine_to_width, Bound, IsolatedRoot,
    SturmChain,
};
