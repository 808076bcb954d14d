use std::path::Path;

use anyhow::{bail, Context, Result};
use qhorder_core::perm::builtin_group;
use qhorder_core::{ObjectList, Perm};
use serde::Deserialize;

#[derive(Deserialize)]
struct CatalogFile {
    groups: Vec<GroupEntry>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GroupEntry {
    Builtin(String),
    Custom { name: String, generators: Vec<String> },
}

/// `builtin:s4family`, `builtin:1,C2,C3`, or a path to a JSON catalog.
pub fn load(source: &str) -> Result<ObjectList> {
    if let Some(rest) = source.strip_prefix("builtin:") {
        if rest == "s4family" {
            return Ok(ObjectList::s4_family());
        }
        let names: Vec<&str> = rest.split(',').map(str::trim).collect();
        return Ok(ObjectList::from_builtin(&names)?);
    }
    let text = std::fs::read_to_string(Path::new(source)).with_context(|| format!("reading catalog {source}"))?;
    parse(&text)
}

pub fn parse(text: &str) -> Result<ObjectList> {
    let file: CatalogFile = serde_json::from_str(text).context("parsing catalog JSON")?;
    if file.groups.is_empty() {
        bail!("catalog lists no groups");
    }
    let mut groups = Vec::new();
    for g in file.groups {
        match g {
            GroupEntry::Builtin(name) => {
                let group = builtin_group(&name)?;
                groups.push((name, group));
            }
            GroupEntry::Custom { name, generators } => {
                let degree = generators.iter().map(|s| max_point(s)).max().flatten().map_or(1, |m| m + 1);
                let perms = generators
                    .iter()
                    .map(|s| Perm::parse_cycles(s, degree))
                    .collect::<qhorder_core::Result<Vec<_>>>()
                    .with_context(|| format!("generators of {name}"))?;
                let perms = if perms.is_empty() { vec![Perm::identity(1)] } else { perms };
                let group = qhorder_core::perm::group_from_generators(&perms)?;
                groups.push((name, group));
            }
        }
    }
    Ok(ObjectList::load(groups)?)
}

fn max_point(s: &str) -> Option<usize> {
    s.split(|c: char| !c.is_ascii_digit()).filter_map(|t| t.parse().ok()).max()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_specs() {
        assert_eq!(load("builtin:s4family").unwrap().len(), 9);
        assert_eq!(load("builtin:1,C2").unwrap().len(), 2);
        assert!(load("builtin:1,Q8").is_err());
    }

    #[test]
    fn mixed_json() {
        let objs = parse(r#"{"groups": ["1", {"name": "Z2", "generators": ["(0 1)"]}]}"#).unwrap();
        assert_eq!(objs.len(), 2);
        assert_eq!(objs.object(2).name, "Z2");
        assert!(parse(r#"{"groups": ["C2"]}"#).is_err());
        assert!(parse(r#"{"groups": []}"#).is_err());
    }
}
