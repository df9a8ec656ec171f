//! placeholder
pub struct EvalReport;
pub struct FoldPlan;
pub struct SpeakerScore;
pub struct SystemId;
