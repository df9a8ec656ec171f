//! placeholder
pub struct TrainConfig;
pub struct TrainLog;
