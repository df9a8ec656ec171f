//! placeholder
pub struct Filterbank;
pub struct FrontendParams;
pub struct Representation;
#[derive(Debug, Clone, Copy)]
pub enum RepKind { Envelope, FineStructure, StftLogMag }
