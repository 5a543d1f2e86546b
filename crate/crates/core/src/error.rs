use crate::kernel::KernelError;
use crate::report::LawReport;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("precondition violated: {what}")]
    Precondition { what: String, report: LawReport },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("search budget exceeded: {required} candidates required, budget is {budget}")]
    Budget { required: String, budget: u64 },
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn precondition(what: impl Into<String>, report: LawReport) -> Self {
        Error::Precondition {
            what: what.into(),
            report,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
