// The book's snippets run as doctests: each chapter is pulled in as the docs
// of an empty module, so `cargo test` compiles and runs every code block.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}
#[doc = include_str!("../../../book/src/streams.md")]
pub mod streams {}
#[doc = include_str!("../../../book/src/greedy.md")]
pub mod greedy {}
#[doc = include_str!("../../../book/src/two_pass.md")]
pub mod two_pass {}
#[doc = include_str!("../../../book/src/factor.md")]
pub mod factor {}
#[doc = include_str!("../../../book/src/hard_instance.md")]
pub mod hard_instance {}
#[doc = include_str!("../../../book/src/rs_graphs.md")]
pub mod rs_graphs {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
