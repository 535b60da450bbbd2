//! Linear-time construction of suffix trees, DAWGs, affix trees, compact
//! DAWGs, linear-size suffix tries and minimal absent words over integer
//! alphabets.
//!
//! The suffix tree is the hub: the reversed DAWG is read off its Weiner
//! links, the forward DAWG off its augmented form, and every other structure
//! off those two.

pub mod affix;
pub mod cdawg;
pub mod check;
pub mod dawg;
pub mod error;
pub mod export;
pub mod forward;
pub mod gen;
pub mod lstrie;
pub mod maw;
pub mod oracle;
pub mod pipeline;
pub mod suffix_array;
pub mod suffix_tree;
pub mod text;
pub mod weiner;

pub use affix::{AffixTree, ModifiedWeinerLink, ModifiedWeinerLinks};
pub use cdawg::{Cdawg, CompactEdge, SymmetricCdawg};
pub use dawg::{Dawg, DawgId};
pub use error::{Error, Result};
pub use forward::{Ast, ForwardDawg};
pub use lstrie::LsTrie;
pub use maw::{MawSet, MawTriple};
pub use pipeline::{build, Built, StructureKind, StructureStats};
pub use suffix_tree::{NodeId, SuffixTree};
pub use text::{Code, Symbol, SymbolKind, Text};
