use alloc::format;
use alloc::string::String;

use super::{EngineError, OutputRule};
use crate::{Bit, Error, Template};

/// A complete single-cut full-open protocol.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Protocol {
    name: String,
    template: Template,
    rule: OutputRule,
}

impl Protocol {
    pub fn new(
        name: impl Into<String>,
        template: Template,
        rule: OutputRule,
    ) -> Result<Protocol, EngineError> {
        if rule.len() != template.len() {
            return Err(Error::LengthMismatch {
                expected: template.len(),
                found: rule.len(),
            }
            .into());
        }
        Ok(Protocol {
            name: name.into(),
            template,
            rule,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn template(&self) -> &Template {
        &self.template
    }

    pub fn rule(&self) -> &OutputRule {
        &self.rule
    }

    pub fn arity(&self) -> usize {
        self.template.arity()
    }

    /// Card count.
    pub fn len(&self) -> usize {
        self.template.len()
    }

    pub fn is_empty(&self) -> bool {
        self.template.is_empty()
    }

    pub fn renamed(self, name: impl Into<String>) -> Protocol {
        Protocol {
            name: name.into(),
            ..self
        }
    }

    pub fn with_rule(&self, rule: OutputRule) -> Result<Protocol, EngineError> {
        Protocol::new(self.name.clone(), self.template.clone(), rule)
    }
}

/// Fixes variable `var` to `value`; the rule is kept and the remaining
/// variables are re-indexed in order.
pub fn restrict(p: &Protocol, var: usize, value: Bit) -> Result<Protocol, Error> {
    Ok(Protocol {
        name: format!("{}[{}={}]", p.name, var, value),
        template: p.template.restrict(var, value)?,
        rule: p.rule.clone(),
    })
}
