//! Extractive single-document summarization driven by lexical chains.
//!
//! The pipeline turns raw text into a [`text::Document`], resolves word
//! senses against a WordNet knowledge base by depth-limited graph
//! traversal, threads the resolved words into lexical chains extended
//! with a bigram-augmented gloss-overlap scorer, clusters the chains by
//! the cosine of their sentence-occurrence vectors, extracts and scores
//! contiguous sentence sequences per cluster, and finally selects a
//! word-budgeted extractive summary. An evaluation harness computes
//! precision/recall/F1 and ROUGE-N against reference summaries.

pub mod chains;
pub mod cluster;
pub mod config;
pub mod eval;
pub mod kb;
pub mod summarize;
pub mod text;
pub mod wsd;

pub use config::SummarizerConfig;
pub use kb::KnowledgeBase;
pub use summarize::{summarize, Summary};
pub use text::Document;
