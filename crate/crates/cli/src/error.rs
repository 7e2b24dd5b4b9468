//! Failures and their exit statuses.

use fsz_core::notation::NotationError;
use fsz_core::{CatalogError, FszError, GroupError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Notation {
        path: String,
        #[source]
        source: NotationError,
    },
    #[error("--{flag}: {source}")]
    Element {
        flag: &'static str,
        #[source]
        source: NotationError,
    },
    #[error("group order {order} exceeds --max-order {cap}")]
    OrderCap { order: String, cap: u64 },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Fsz(#[from] FszError),
    #[error("failed to write output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Fsz(FszError::BudgetExceeded { .. }) => crate::report::EXIT_BUDGET,
            _ => crate::report::EXIT_INVALID,
        }
    }

    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io",
            CliError::Notation { .. } | CliError::Element { .. } => "syntax",
            CliError::OrderCap { .. } => "order_cap",
            CliError::Catalog(_) => "catalog",
            CliError::Group(_) | CliError::Fsz(FszError::Group(_)) => "group",
            CliError::Fsz(FszError::BudgetExceeded { .. }) => "budget",
            CliError::Fsz(_) => "query",
            CliError::Output(_) => "io",
        }
    }
}
