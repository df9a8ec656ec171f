//! placeholder
pub struct Model;
#[derive(Debug, Clone, Copy)]
pub enum ArchTag { A1, A2, Tefs }
