//! Exact kernel-method machinery for walks in the quarter plane.

pub mod report;
pub mod gessel;
pub mod kernel;
pub mod multistep;
pub mod series;
pub mod walks;

// mdbook cannot link this crate into its snippets, so rustdoc runs the
// book's code blocks instead.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    struct Readme;
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/series.md")]
    struct Series;
    #[doc = include_str!("../../../book/src/walks.md")]
    struct Walks;
    #[doc = include_str!("../../../book/src/kernel.md")]
    struct Kernel;
    #[doc = include_str!("../../../book/src/gessel.md")]
    struct Gessel;
    #[doc = include_str!("../../../book/src/multistep.md")]
    struct Multistep;
}
