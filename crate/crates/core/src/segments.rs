//! placeholder
pub struct Segment;
pub struct NormStats;
#[derive(Debug, Clone, Copy)]
pub enum NormMode { Global, PerBand }
