//! Bounded-checking parameters.

use std::time::Duration;

use crate::model_dsl::domain::ElementDomain;

/// Search bounds: `model_size` is the maximum model-list length explored,
/// `domain_size` is the number of element values. The domain must hold at
/// least `model_size + 1` values so that every order type of a potential
/// counterexample (up to `model_size` list elements plus one auxiliary
/// input) is representable.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct CheckConfig {
    pub model_size: usize,
    pub domain_size: usize,
    pub budget: Duration,
}

pub const DEFAULT_MODEL_SIZE: usize = 3;
pub const DEFAULT_DOMAIN_SIZE: usize = 4;
pub const DEFAULT_BUDGET: Duration = Duration::from_secs(30);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("domain size {domain_size} is too small for model size {model_size}: need at least {} values", model_size + 1)]
    DomainTooSmall {
        model_size: usize,
        domain_size: usize,
    },
    #[error("model size and domain size must be positive")]
    Zero,
}

impl CheckConfig {
    pub fn new(
        model_size: usize,
        domain_size: usize,
        budget: Duration,
    ) -> Result<CheckConfig, ConfigError> {
        if domain_size == 0 {
            return Err(ConfigError::Zero);
        }
        if domain_size < model_size + 1 {
            return Err(ConfigError::DomainTooSmall {
                model_size,
                domain_size,
            });
        }
        Ok(CheckConfig {
            model_size,
            domain_size,
            budget,
        })
    }

    pub fn domain(&self) -> ElementDomain {
        ElementDomain::of_size(self.domain_size)
    }
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            model_size: DEFAULT_MODEL_SIZE,
            domain_size: DEFAULT_DOMAIN_SIZE,
            budget: DEFAULT_BUDGET,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn domain_must_cover_model_size_plus_aux() {
        assert!(CheckConfig::new(3, 4, DEFAULT_BUDGET).is_ok());
        assert!(matches!(
            CheckConfig::new(3, 3, DEFAULT_BUDGET),
            Err(ConfigError::DomainTooSmall { .. })
        ));
        assert!(matches!(
            CheckConfig::new(0, 0, DEFAULT_BUDGET),
            Err(ConfigError::Zero)
        ));
    }
}
