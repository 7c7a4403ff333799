//! Argument types shared by the subcommands: which graph family to build,
//! which property or parameter to evaluate, and the output format. Everything
//! parses from plain strings so usage errors can be reported uniformly.

use std::str::FromStr;

use prismdim_core::{
    build_cycle, build_path, explicit_cylinder, explicit_prism, global_index, parse_label_list,
    Error, LabeledGraph, Result,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Cycle,
    Path,
    Cylinder,
    Prism,
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cycle" => Ok(FamilyKind::Cycle),
            "path" => Ok(FamilyKind::Path),
            "cylinder" => Ok(FamilyKind::Cylinder),
            "prism" => Ok(FamilyKind::Prism),
            other => Err(Error::Domain(format!(
                "unknown family '{other}' (expected cycle, path, cylinder, or prism)"
            ))),
        }
    }
}

/// A fully parameterized graph family instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    Cycle { n: usize },
    Path { k: usize },
    Cylinder { n: usize, k: usize },
    Prism { n: usize, k: usize, m: usize },
}

impl FamilySpec {
    /// Combines the family kind with the numeric flags, insisting that
    /// exactly the parameters the family uses are present.
    pub fn assemble(
        kind: FamilyKind,
        n: Option<usize>,
        k: Option<usize>,
        m: Option<usize>,
    ) -> Result<FamilySpec> {
        let take = |value: Option<usize>, name: &str, family: &str| {
            value.ok_or_else(|| Error::Domain(format!("family {family} needs --{name}")))
        };
        let forbid = |value: Option<usize>, name: &str, family: &str| {
            if value.is_some() {
                Err(Error::Domain(format!(
                    "family {family} does not take --{name}"
                )))
            } else {
                Ok(())
            }
        };
        match kind {
            FamilyKind::Cycle => {
                forbid(k, "k", "cycle")?;
                forbid(m, "m", "cycle")?;
                Ok(FamilySpec::Cycle {
                    n: take(n, "n", "cycle")?,
                })
            }
            FamilyKind::Path => {
                forbid(n, "n", "path")?;
                forbid(m, "m", "path")?;
                Ok(FamilySpec::Path {
                    k: take(k, "k", "path")?,
                })
            }
            FamilyKind::Cylinder => {
                forbid(m, "m", "cylinder")?;
                Ok(FamilySpec::Cylinder {
                    n: take(n, "n", "cylinder")?,
                    k: take(k, "k", "cylinder")?,
                })
            }
            FamilyKind::Prism => Ok(FamilySpec::Prism {
                n: take(n, "n", "prism")?,
                k: take(k, "k", "prism")?,
                m: take(m, "m", "prism")?,
            }),
        }
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cylinder { .. } => "cylinder",
            FamilySpec::Prism { .. } => "prism",
        }
    }

    /// The numeric parameters in display order.
    pub fn parameters(&self) -> Vec<(&'static str, usize)> {
        match *self {
            FamilySpec::Cycle { n } => vec![("n", n)],
            FamilySpec::Path { k } => vec![("k", k)],
            FamilySpec::Cylinder { n, k } => vec![("n", n), ("k", k)],
            FamilySpec::Prism { n, k, m } => vec![("n", n), ("k", k), ("m", m)],
        }
    }

    pub fn build_graph(&self) -> Result<LabeledGraph> {
        match *self {
            FamilySpec::Cycle { n } => build_cycle(n),
            FamilySpec::Path { k } => build_path(k),
            FamilySpec::Cylinder { n, k } => Ok(explicit_cylinder(n, k)?.into_graph()),
            FamilySpec::Prism { n, k, m } => Ok(explicit_prism(n, k, m)?.into_graph()),
        }
    }

    /// (vertices per copy, number of copies) for label arithmetic; everything
    /// except a prism is a single copy.
    pub fn copy_shape(&self) -> (usize, usize) {
        match *self {
            FamilySpec::Cycle { n } => (n, 1),
            FamilySpec::Path { k } => (k, 1),
            FamilySpec::Cylinder { n, k } => (n * k, 1),
            FamilySpec::Prism { n, k, m } => (n * k, m),
        }
    }

    /// `x5` or, on a prism, `x5^2`.
    pub fn compact_label(&self, global: usize) -> Result<String> {
        match self {
            FamilySpec::Prism { .. } => {
                let (per_copy, _) = self.copy_shape();
                prismdim_core::compact_prism_label(global, per_copy)
            }
            _ => Ok(prismdim_core::compact_cylinder_label(global)),
        }
    }

    /// `x_5` or, on a prism, `x_5^(2)`.
    pub fn pretty_label(&self, global: usize) -> Result<String> {
        match self {
            FamilySpec::Prism { .. } => {
                let (per_copy, _) = self.copy_shape();
                prismdim_core::pretty_prism_label(global, per_copy)
            }
            _ => Ok(prismdim_core::pretty_cylinder_label(global)),
        }
    }

    /// Parses a comma-separated label list into global indices, preserving
    /// input order; callers build a VertexSet where set semantics matter.
    pub fn parse_set_globals(&self, set: &str) -> Result<Vec<usize>> {
        let (per_copy, copies) = self.copy_shape();
        parse_label_list(set)?
            .into_iter()
            .map(|label| global_index(label, per_copy, copies))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    Resolving,
    Doubly,
    Strong,
}

impl Property {
    /// Name used in human-readable output.
    pub fn long_name(&self) -> &'static str {
        match self {
            Property::Resolving => "resolving",
            Property::Doubly => "doubly resolving",
            Property::Strong => "strong resolving",
        }
    }

    /// Name used in machine-readable echoes (matches the flag value).
    pub fn flag_name(&self) -> &'static str {
        match self {
            Property::Resolving => "resolving",
            Property::Doubly => "doubly",
            Property::Strong => "strong",
        }
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "resolving" => Ok(Property::Resolving),
            "doubly" => Ok(Property::Doubly),
            "strong" => Ok(Property::Strong),
            other => Err(Error::Domain(format!(
                "unknown property '{other}' (expected resolving, doubly, or strong)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parameter {
    Beta,
    Psi,
    Sdim,
}

impl Parameter {
    pub fn flag_name(&self) -> &'static str {
        match self {
            Parameter::Beta => "beta",
            Parameter::Psi => "psi",
            Parameter::Sdim => "sdim",
        }
    }
}

impl FromStr for Parameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "beta" => Ok(Parameter::Beta),
            "psi" => Ok(Parameter::Psi),
            "sdim" => Ok(Parameter::Sdim),
            other => Err(Error::Domain(format!(
                "unknown parameter '{other}' (expected beta, psi, or sdim)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
    Dot,
    Edges,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            "dot" => Ok(Format::Dot),
            "edges" => Ok(Format::Edges),
            other => Err(Error::Domain(format!(
                "unknown format '{other}' (expected json, text, dot, or edges)"
            ))),
        }
    }
}
