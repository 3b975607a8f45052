pub mod circulant;
pub mod cli;
pub mod closed_form;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod spectrum;
