//! The five subcommands. Each returns the complete document destined for
//! standard output plus, for verify, whether the property held; process
//! concerns (writing files, exit codes, timing diagnostics) stay in main.

use serde_json::{json, Map, Value};

use prismdim_core::{
    all_pairs_distances, is_doubly_resolving, is_resolving, is_strong_resolving, make_a, make_a1,
    make_b, make_b1, make_c, make_d, make_e, make_e3_1, make_e4, make_m, make_n, make_t,
    min_doubly_resolving, min_resolving, min_strong_resolving, representation,
    DoubleResolvability, Error, FamilyId, LabeledGraph, Resolvability, Result,
    StrongResolvability, TargetGraph, VertexSet, WitnessFamily,
};

use crate::edgefmt;
use crate::family::{FamilySpec, Format, Parameter, Property};
use crate::output::{json_document, text_document, CommandOutput};

fn format_name(format: Format) -> &'static str {
    match format {
        Format::Json => "json",
        Format::Text => "text",
        Format::Dot => "dot",
        Format::Edges => "edges",
    }
}

fn unsupported(command: &str, format: Format) -> Error {
    Error::Domain(format!(
        "command {command} does not support --format {}",
        format_name(format)
    ))
}

fn family_parameters(spec: &FamilySpec) -> Map<String, Value> {
    let mut map = Map::new();
    map.insert("family".into(), spec.family_name().into());
    for (name, value) in spec.parameters() {
        map.insert(name.into(), value.into());
    }
    map
}

fn compact_labels(spec: &FamilySpec, globals: &[usize]) -> Result<Vec<String>> {
    globals.iter().map(|&g| spec.compact_label(g)).collect()
}

fn pretty_set(spec: &FamilySpec, set: &VertexSet) -> Result<String> {
    let labels: Vec<String> = set
        .indices()
        .iter()
        .map(|&g| spec.pretty_label(g))
        .collect::<Result<_>>()?;
    Ok(format!("{{{}}}", labels.join(", ")))
}

fn render_dot(spec: &FamilySpec, graph: &LabeledGraph) -> String {
    let suffix: Vec<String> = spec
        .parameters()
        .iter()
        .map(|(name, value)| format!("{name}{value}"))
        .collect();
    let mut lines = vec![format!(
        "graph {}_{} {{",
        spec.family_name(),
        suffix.join("_")
    )];
    let node = |global: usize| -> String {
        match spec {
            FamilySpec::Prism { .. } => {
                let (per_copy, _) = spec.copy_shape();
                let t = (global - 1) % per_copy + 1;
                let copy = (global - 1) / per_copy + 1;
                format!("x{t}_{copy}")
            }
            _ => format!("x{global}"),
        }
    };
    for (u, v) in graph.edges() {
        lines.push(format!("  {} -- {};", node(u.index()), node(v.index())));
    }
    lines.push("}".into());
    text_document(&lines)
}

/// Emits the graph itself: canonical JSON, the edge-list format, or DOT.
pub fn cmd_build(spec: &FamilySpec, format: Format) -> Result<CommandOutput> {
    let graph = spec.build_graph()?;
    let stdout = match format {
        Format::Json => {
            let edges: Vec<Value> = graph
                .edges()
                .iter()
                .map(|(u, v)| json!([u.index(), v.index()]))
                .collect();
            json_document(
                "build",
                Value::Object(family_parameters(spec)),
                json!({
                    "vertex_count": graph.vertex_count(),
                    "edge_count": graph.edge_count(),
                    "edges": edges,
                }),
            )
        }
        Format::Edges => edgefmt::render(spec, &graph),
        Format::Dot => render_dot(spec, &graph),
        Format::Text => return Err(unsupported("build", format)),
    };
    Ok(CommandOutput::document(stdout))
}

/// Checks one property of one set; exit status 1 (via `holds`) on failure.
pub fn cmd_verify(
    spec: &FamilySpec,
    set: &str,
    property: Property,
    format: Format,
) -> Result<CommandOutput> {
    let graph = spec.build_graph()?;
    let d = all_pairs_distances(&graph)?;
    let q = VertexSet::from_indices(&spec.parse_set_globals(set)?)?;

    // witness pair (global indices) and λ for the failing cases
    let (holds, witness): (bool, Option<(usize, usize, Option<i64>)>) = match property {
        Property::Resolving => match is_resolving(&q, &d)? {
            Resolvability::Resolving => (true, None),
            Resolvability::Unresolved { first, second } => {
                (false, Some((first.index(), second.index(), None)))
            }
        },
        Property::Doubly => match is_doubly_resolving(&q, &d)? {
            DoubleResolvability::DoublyResolving => (true, None),
            DoubleResolvability::ConstantDifference {
                first,
                second,
                lambda,
            } => (false, Some((first.index(), second.index(), Some(lambda)))),
        },
        Property::Strong => match is_strong_resolving(&q, &graph, &d)? {
            StrongResolvability::StrongResolving => (true, None),
            StrongResolvability::Uncovered { first, second } => {
                (false, Some((first.index(), second.index(), None)))
            }
        },
    };

    let mut parameters = family_parameters(spec);
    parameters.insert("property".into(), property.flag_name().into());
    parameters.insert(
        "set".into(),
        compact_labels(spec, &q.indices())?.into(),
    );

    let stdout = match format {
        Format::Json => {
            let result = match witness {
                None => json!({ "holds": true }),
                Some((first, second, lambda)) => {
                    let mut w = Map::new();
                    w.insert("first".into(), spec.compact_label(first)?.into());
                    w.insert("second".into(), spec.compact_label(second)?.into());
                    if let Some(lambda) = lambda {
                        w.insert("lambda".into(), lambda.into());
                    }
                    json!({ "holds": false, "witness": Value::Object(w) })
                }
            };
            json_document("verify", Value::Object(parameters), result)
        }
        Format::Text => {
            let mut lines = vec![format!(
                "{} {}",
                if holds { "PASS" } else { "FAIL" },
                property.long_name()
            )];
            if let Some((first, second, lambda)) = witness {
                let first = spec.pretty_label(first)?;
                let second = spec.pretty_label(second)?;
                match lambda {
                    Some(lambda) => lines.push(format!("pair ({first}, {second}) lambda={lambda}")),
                    None => lines.push(format!("pair ({first}, {second})")),
                }
            }
            text_document(&lines)
        }
        other => return Err(unsupported("verify", other)),
    };
    Ok(CommandOutput::verdict(stdout, holds))
}

/// Exact minimum search for one of the three parameters.
pub fn cmd_search(
    spec: &FamilySpec,
    parameter: Parameter,
    cap: Option<usize>,
    format: Format,
) -> Result<CommandOutput> {
    let graph = spec.build_graph()?;
    let d = all_pairs_distances(&graph)?;
    let result = match parameter {
        Parameter::Beta => min_resolving(&graph, &d, cap)?,
        Parameter::Psi => min_doubly_resolving(&graph, &d, cap)?,
        Parameter::Sdim => min_strong_resolving(&graph, &d, cap)?,
    };

    let mut parameters = family_parameters(spec);
    parameters.insert("parameter".into(), parameter.flag_name().into());
    if let Some(cap) = cap {
        parameters.insert("cap".into(), cap.into());
    }

    let stdout = match format {
        Format::Json => json_document(
            "search",
            Value::Object(parameters),
            json!({
                "value": result.value,
                "witness": compact_labels(spec, &result.witness.indices())?,
                "exhausted_sizes": result.exhausted_sizes,
                "subsets_examined": result.subsets_examined,
            }),
        ),
        Format::Text => {
            let exhausted = if result.exhausted_sizes.is_empty() {
                "none".to_string()
            } else {
                result
                    .exhausted_sizes
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            text_document(&[
                format!("{} = {}", parameter.flag_name(), result.value),
                format!("witness {}", pretty_set(spec, &result.witness)?),
                format!("exhausted sizes: {exhausted}"),
                format!("subsets examined: {}", result.subsets_examined),
            ])
        }
        other => return Err(unsupported("search", other)),
    };
    Ok(CommandOutput::document(stdout))
}

/// Representation of every vertex against the given set, in index order.
pub fn cmd_table(spec: &FamilySpec, set: &str, format: Format) -> Result<CommandOutput> {
    let graph = spec.build_graph()?;
    let d = all_pairs_distances(&graph)?;
    let q = VertexSet::from_indices(&spec.parse_set_globals(set)?)?;
    let rows: Vec<(usize, Vec<u32>)> = graph
        .vertices()
        .map(|v| Ok((v.index(), representation(v, &q, &d)?.coords().to_vec())))
        .collect::<Result<_>>()?;

    let mut parameters = family_parameters(spec);
    let set_labels = compact_labels(spec, &q.indices())?;
    parameters.insert("set".into(), set_labels.clone().into());

    let stdout = match format {
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(v, coords)| {
                    Ok(json!({
                        "vertex": spec.compact_label(*v)?,
                        "r": coords,
                    }))
                })
                .collect::<Result<_>>()?;
            json_document(
                "table",
                Value::Object(parameters),
                json!({ "rows": rows }),
            )
        }
        Format::Text => {
            let mut header = format!("# table family={}", spec.family_name());
            for (name, value) in spec.parameters() {
                header.push_str(&format!(" {name}={value}"));
            }
            header.push_str(&format!(" set={}", set_labels.join(",")));

            let labels: Vec<String> = rows
                .iter()
                .map(|(v, _)| spec.pretty_label(*v))
                .collect::<Result<_>>()?;
            let width = labels.iter().map(String::len).max().unwrap_or(0);
            let mut lines = vec![header];
            for (label, (_, coords)) in labels.iter().zip(&rows) {
                let tuple = coords
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                lines.push(format!("{label:width$}  ({tuple})"));
            }
            text_document(&lines)
        }
        other => return Err(unsupported("table", other)),
    };
    Ok(CommandOutput::document(stdout))
}

fn parse_family_id(s: &str) -> Result<FamilyId> {
    match s.to_ascii_uppercase().as_str() {
        "M" => Ok(FamilyId::M),
        "N" => Ok(FamilyId::N),
        "A" => Ok(FamilyId::A),
        "B" => Ok(FamilyId::B),
        "A1" => Ok(FamilyId::A1),
        "B1" => Ok(FamilyId::B1),
        "C" => Ok(FamilyId::C),
        "D" => Ok(FamilyId::D),
        "E1" => Ok(FamilyId::E1),
        "E2" => Ok(FamilyId::E2),
        "E3" => Ok(FamilyId::E3),
        "E3_1" => Ok(FamilyId::E31),
        "E4" => Ok(FamilyId::E4),
        "T" => Ok(FamilyId::T),
        other => Err(Error::Domain(format!(
            "unknown family id '{other}' (catalog: M N A B A1 B1 C D E1 E2 E3 E3_1 E4 T)"
        ))),
    }
}

fn spec_for_target(target: TargetGraph) -> FamilySpec {
    match target {
        TargetGraph::Cylinder { n, k } => FamilySpec::Cylinder { n, k },
        TargetGraph::Prism { n, k, m } => FamilySpec::Prism { n, k, m },
    }
}

/// Generates a catalog witness family and emits it in both notations with
/// its claimed properties. The cylinder families take n and k; the prism
/// families also take m, except C, which fixes m = 2.
pub fn cmd_construct(
    family_id: &str,
    index: Option<usize>,
    n: Option<usize>,
    k: Option<usize>,
    m: Option<usize>,
    format: Format,
) -> Result<CommandOutput> {
    let id = parse_family_id(family_id)?;
    let need = |value: Option<usize>, name: &str| -> Result<usize> {
        value.ok_or_else(|| Error::Domain(format!("family {id} needs --{name}")))
    };
    let forbid = |value: Option<usize>, name: &str| -> Result<()> {
        if value.is_some() {
            Err(Error::Domain(format!("family {id} does not take --{name}")))
        } else {
            Ok(())
        }
    };

    let family: WitnessFamily = match id {
        FamilyId::M => {
            forbid(m, "m")?;
            make_m(need(index, "index")?, need(n, "n")?, need(k, "k")?)?
        }
        FamilyId::N => {
            forbid(m, "m")?;
            make_n(need(index, "index")?, need(n, "n")?, need(k, "k")?)?
        }
        FamilyId::A => {
            forbid(m, "m")?;
            make_a(need(index, "index")?, need(n, "n")?, need(k, "k")?)?
        }
        FamilyId::B => {
            forbid(m, "m")?;
            make_b(need(index, "index")?, need(n, "n")?, need(k, "k")?)?
        }
        FamilyId::A1 => make_a1(
            need(index, "index")?,
            need(n, "n")?,
            need(k, "k")?,
            need(m, "m")?,
        )?,
        FamilyId::B1 => make_b1(
            need(index, "index")?,
            need(n, "n")?,
            need(k, "k")?,
            need(m, "m")?,
        )?,
        FamilyId::C => {
            forbid(m, "m")?; // C always lives on the two-copy prism
            make_c(need(index, "index")?, need(n, "n")?, need(k, "k")?)?
        }
        FamilyId::D => make_d(
            need(index, "index")?,
            need(n, "n")?,
            need(k, "k")?,
            need(m, "m")?,
        )?,
        FamilyId::E1 | FamilyId::E2 | FamilyId::E3 => {
            forbid(index, "index")?;
            forbid(m, "m")?;
            let variant = match id {
                FamilyId::E1 => 1,
                FamilyId::E2 => 2,
                _ => 3,
            };
            make_e(variant, need(n, "n")?, need(k, "k")?)?
        }
        FamilyId::E31 => {
            forbid(index, "index")?;
            make_e3_1(need(n, "n")?, need(k, "k")?, need(m, "m")?)?
        }
        FamilyId::E4 => {
            forbid(index, "index")?;
            make_e4(need(n, "n")?, need(k, "k")?, need(m, "m")?)?
        }
        FamilyId::T => {
            forbid(index, "index")?;
            make_t(need(n, "n")?, need(k, "k")?, need(m, "m")?)?
        }
    };

    let target_spec = spec_for_target(family.target);
    let globals = family.set.indices();
    let labels = compact_labels(&target_spec, &globals)?;
    let claims: Vec<String> = family.claimed.iter().map(|c| c.to_string()).collect();

    let mut parameters = Map::new();
    parameters.insert("family_id".into(), id.to_string().into());
    if let Some(index) = family.index {
        parameters.insert("index".into(), index.into());
    }
    for (name, value) in [("n", n), ("k", k), ("m", m)] {
        if let Some(value) = value {
            parameters.insert(name.into(), value.into());
        }
    }

    let stdout = match format {
        Format::Json => json_document(
            "construct",
            Value::Object(parameters),
            json!({
                "global_indices": globals,
                "labels": labels,
                "claims": claims,
                "target": Value::Object(family_parameters(&target_spec)),
            }),
        ),
        Format::Text => {
            let name = match family.index {
                Some(index) => format!("{id}_{index}"),
                None => id.to_string(),
            };
            let target_desc: Vec<String> = target_spec
                .parameters()
                .iter()
                .map(|(p, v)| format!("{p}={v}"))
                .collect();
            text_document(&[
                format!(
                    "{name} on {} {}",
                    target_spec.family_name(),
                    target_desc.join(" ")
                ),
                format!("set {}", pretty_set(&target_spec, &family.set)?),
                format!(
                    "global indices {{{}}}",
                    globals
                        .iter()
                        .map(|g| g.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
                format!("claims: {}", claims.join("; ")),
            ])
        }
        other => return Err(unsupported("construct", other)),
    };
    Ok(CommandOutput::document(stdout))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_json_counts() {
        let spec = FamilySpec::Cylinder { n: 4, k: 3 };
        let out = cmd_build(&spec, Format::Json).unwrap();
        let doc: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(doc["result"]["vertex_count"], 12);
        assert_eq!(doc["result"]["edge_count"], 20);
        assert_eq!(doc["parameters"]["family"], "cylinder");
        assert!(out.stdout.ends_with('\n'));
        assert_eq!(out.holds, None);
    }

    #[test]
    fn build_rejects_text_format() {
        let spec = FamilySpec::Cycle { n: 5 };
        assert!(cmd_build(&spec, Format::Text).is_err());
    }

    #[test]
    fn dot_output_is_plain_edges() {
        let spec = FamilySpec::Cycle { n: 3 };
        let out = cmd_build(&spec, Format::Dot).unwrap();
        assert_eq!(
            out.stdout,
            "graph cycle_n3 {\n  x1 -- x2;\n  x1 -- x3;\n  x2 -- x3;\n}\n"
        );
        let spec = FamilySpec::Prism { n: 3, k: 3, m: 2 };
        let out = cmd_build(&spec, Format::Dot).unwrap();
        assert!(out.stdout.starts_with("graph prism_n3_k3_m2 {\n"));
        assert!(out.stdout.contains("  x1_1 -- x1_2;\n"));
    }

    #[test]
    fn verify_passes_and_fails() {
        let spec = FamilySpec::Prism { n: 5, k: 4, m: 4 };
        let out = cmd_verify(&spec, "x1^1,x3^1,x16^1,x16^4", Property::Doubly, Format::Json)
            .unwrap();
        assert_eq!(out.holds, Some(true));
        let doc: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(doc["result"]["holds"], true);

        let spec = FamilySpec::Cylinder { n: 5, k: 4 };
        let out = cmd_verify(&spec, "x1,x3", Property::Doubly, Format::Json).unwrap();
        assert_eq!(out.holds, Some(false));
        let doc: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(doc["result"]["witness"]["lambda"], -1);

        let out = cmd_verify(&spec, "x1,x3", Property::Doubly, Format::Text).unwrap();
        assert!(out.stdout.starts_with("FAIL doubly resolving\n"));
    }

    #[test]
    fn full_vertex_set_resolves_anything() {
        let spec = FamilySpec::Cycle { n: 6 };
        let set = (1..=6).map(|i| format!("x{i}")).collect::<Vec<_>>().join(",");
        let out = cmd_verify(&spec, &set, Property::Resolving, Format::Json).unwrap();
        assert_eq!(out.holds, Some(true));
    }

    #[test]
    fn search_reports_value_and_witness() {
        let spec = FamilySpec::Cylinder { n: 3, k: 3 };
        let out = cmd_search(&spec, Parameter::Beta, None, Format::Json).unwrap();
        let doc: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(doc["result"]["value"], 2);
        assert_eq!(doc["result"]["witness"], json!(["x1", "x2"]));

        let out = cmd_search(&spec, Parameter::Psi, None, Format::Text).unwrap();
        assert!(out.stdout.starts_with("psi = 3\n"));
        assert!(out.stdout.contains("witness {x_1, x_2, x_7}\n"));
    }

    #[test]
    fn table_first_rows_match_the_known_representations() {
        let spec = FamilySpec::Prism { n: 5, k: 4, m: 4 };
        let out = cmd_table(&spec, "x1^1,x3^1,x16^1,x16^4", Format::Json).unwrap();
        let doc: Value = serde_json::from_str(&out.stdout).unwrap();
        let rows = doc["result"]["rows"].as_array().unwrap();
        assert_eq!(rows.len(), 80);
        assert_eq!(rows[0], json!({"r": [0, 2, 3, 6], "vertex": "x1^1"}));
    }

    #[test]
    fn construct_emits_both_notations() {
        let out = cmd_construct("D", Some(1), Some(5), Some(4), Some(4), Format::Json).unwrap();
        let doc: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(doc["result"]["global_indices"], json!([1, 3, 16, 76]));
        assert_eq!(
            doc["result"]["labels"],
            json!(["x1^1", "x3^1", "x16^1", "x16^4"])
        );
        assert_eq!(doc["result"]["claims"], json!(["doubly resolving"]));
        assert_eq!(doc["result"]["target"]["m"], 4);

        let out = cmd_construct("T", None, Some(4), Some(3), Some(2), Format::Json).unwrap();
        let doc: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(doc["result"]["global_indices"].as_array().unwrap().len(), 8);

        let out = cmd_construct("A", Some(1), Some(3), Some(3), None, Format::Text).unwrap();
        assert!(out.stdout.starts_with("A_1 on cylinder n=3 k=3\n"));
        assert!(out.stdout.contains("set {x_1, x_2, x_7}\n"));
    }

    #[test]
    fn construct_validates_flags() {
        assert!(cmd_construct("Z", None, Some(3), Some(3), None, Format::Json).is_err());
        // index where none belongs / missing where required
        assert!(cmd_construct("T", Some(1), Some(3), Some(3), Some(2), Format::Json).is_err());
        assert!(cmd_construct("M", None, Some(3), Some(3), None, Format::Json).is_err());
        // C fixes the copy count
        assert!(cmd_construct("C", Some(1), Some(3), Some(3), Some(2), Format::Json).is_err());
        // parity violations surface as domain errors
        assert!(cmd_construct("E3", None, Some(5), Some(3), None, Format::Json).is_err());
    }
}
