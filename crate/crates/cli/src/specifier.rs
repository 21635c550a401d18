//! Module specifiers: a base module optionally preceded by operators, read
//! right to left. `omega^3 tau string:epsilon` is the third syzygy of the AR
//! translate of the string module of `epsilon`.

use anyhow::{bail, Result};
use quiverkit::module::{Algebra, Module};

use crate::Invalid;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Base {
    Simple(String),
    Projective(String),
    Injective(String),
    String(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Operator {
    Tau,
    Omega(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleSpec {
    pub operators: Vec<Operator>,
    pub base: Base,
}

impl ModuleSpec {
    pub fn parse(text: &str) -> Result<ModuleSpec> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let Some((last, ops)) = tokens.split_last() else {
            bail!(Invalid(format!("empty module specifier {text:?}")));
        };
        let base = match last.split_once(':') {
            Some(("simple", x)) => Base::Simple(x.to_string()),
            Some(("proj", x)) => Base::Projective(x.to_string()),
            Some(("inj", x)) => Base::Injective(x.to_string()),
            Some(("string", w)) => Base::String(w.to_string()),
            _ => bail!(Invalid(format!(
                "module specifier must end in simple:X, proj:X, inj:X or string:W, got {last:?}"
            ))),
        };
        let operators = ops
            .iter()
            .map(|&op| match op {
                "tau" => Ok(Operator::Tau),
                "omega" => Ok(Operator::Omega(1)),
                _ => match op.strip_prefix("omega^").and_then(|k| k.parse().ok()) {
                    Some(k) => Ok(Operator::Omega(k)),
                    None => Err(Invalid(format!("unknown operator {op:?}"))),
                },
            })
            .collect::<Result<_, _>>()?;
        Ok(ModuleSpec { operators, base })
    }

    pub fn build(&self, alg: &Algebra) -> Result<Module> {
        let mut m = match &self.base {
            Base::Simple(x) => alg.simple(vertex(alg, x)?),
            Base::Projective(x) => alg.projective(vertex(alg, x)?),
            Base::Injective(x) => alg.injective(vertex(alg, x)?),
            Base::String(w) => {
                let walk = alg.parse_walk(w).map_err(|e| Invalid(e.to_string()))?;
                alg.string_module(&walk)
            }
        };
        for op in self.operators.iter().rev() {
            m = match op {
                Operator::Tau => alg.tau_unchecked(&m),
                Operator::Omega(k) => alg.syzygy_power(&m, *k),
            };
        }
        Ok(m)
    }
}

fn vertex(alg: &Algebra, label: &str) -> Result<usize> {
    alg.vertex(label).map_err(|e| Invalid(e.to_string()).into())
}
