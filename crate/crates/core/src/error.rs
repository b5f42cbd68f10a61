use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("work budget of {0} steps exhausted")]
    BudgetExhausted(u64),
    #[error("graph contains an induced P4")]
    NotP4Free,
    #[error("graph on {n} vertices exceeds the limit of {limit} for this routine")]
    TooLarge { n: usize, limit: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("class assumption violated: {0}")]
    ClassAssumptionViolated(String),
    #[error("no suture structure found")]
    StructureNotFound,
    #[error("malformed expression: {0}")]
    Expression(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Step counter that turns runaway searches into a distinct error.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
}

/// Environment variable overriding every default work budget.
pub const BUDGET_ENV: &str = "INDMINOR_BUDGET";

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    /// `default` unless `INDMINOR_BUDGET` holds a positive integer.
    pub fn from_env(default: u64) -> Self {
        let limit = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<u64>().ok())
            .filter(|&l| l > 0)
            .unwrap_or(default);
        Budget::new(limit)
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.charge(1)
    }

    #[inline]
    pub fn charge(&mut self, steps: u64) -> Result<()> {
        self.used = self.used.saturating_add(steps);
        if self.used > self.limit {
            Err(Error::BudgetExhausted(self.limit))
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}
