//! Local rewrite rules on ZX diagrams with star edges, the partial
//! simplification strategy, NOT pushing and the two-stack normal form.

mod nots;
mod rules;
mod simplify;
mod stack;

pub use nots::push_nots_to_boundary;
pub use rules::{apply_in_place, apply_rewrite, find_matches, is_leaf, RewriteError, RewriteKind, Site};
pub use simplify::{partial_simplify, partial_simplify_in_place, remove_self_loops, SimplifyConfig};
pub use stack::{linked_pairs, to_stack_form, StackPair};
