//! Group-specification documents (TOML).
//!
//! ```toml
//! format = 1
//! kind = "semidirect"
//! prime = 5
//! dim = 2
//!
//! [acting]
//! kind = "named"
//! name = "Q8<GL(2,5)"
//! ```
//!
//! Kinds:
//!
//! * `named`: `name` as accepted by [`named_group`].
//! * `permutation`: `degree`, `generators` as image arrays on `0..degree`,
//!   optional `convention` (`right-action`, the default, or `left-action`).
//! * `matrix`: `prime`, `generators` as arrays of row arrays; entries are reduced mod `prime`.
//! * `direct-product`: `factors`, an array of nested specs.
//! * `semidirect`: `GF(prime)^dim ⋊ acting`; `acting` acts through its own
//!   matrices unless `images` gives one matrix per generator of `acting`.
//!
//! Only the top-level document carries `format`.

use std::sync::Arc;

use serde::Deserialize;
use thiserror::Error;

use crate::construct::{direct_product_with_cap, named_group, semidirect_product_with_cap};
use crate::element::{Convention, GroupElement, MulRule};
use crate::error::Result;
use crate::fp::FpMatrix;
use crate::group::FiniteGroup;
use crate::module::ModuleAction;
use crate::numtheory::is_prime;
use crate::perm::Perm;

pub const FORMAT_VERSION: i64 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("missing `format` field (expected format = {FORMAT_VERSION})")]
    MissingFormat,
    #[error("unsupported format {0} (expected {FORMAT_VERSION})")]
    UnsupportedFormat(i64),
    #[error("at `{path}`: {message}")]
    Invalid { path: String, message: String },
    #[error("cannot read `{path}`: {message}")]
    Io { path: String, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GroupSpec {
    Named {
        name: String,
    },
    Permutation {
        degree: usize,
        generators: Vec<Vec<i64>>,
        #[serde(default)]
        convention: Convention,
    },
    Matrix {
        prime: u32,
        generators: Vec<Vec<Vec<i64>>>,
    },
    DirectProduct {
        factors: Vec<GroupSpec>,
    },
    Semidirect {
        prime: u32,
        dim: usize,
        acting: Box<GroupSpec>,
        images: Option<Vec<Vec<Vec<i64>>>>,
    },
}

fn invalid(path: &str, message: impl Into<String>) -> SpecError {
    SpecError::Invalid {
        path: path.to_string(),
        message: message.into(),
    }
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    (line, column)
}

/// Parses and validates a document; does not build the group.
pub fn parse_group_spec(text: &str) -> std::result::Result<GroupSpec, SpecError> {
    let syntax = |e: toml::de::Error| {
        let (line, column) = e.span().map_or((1, 1), |s| line_col(text, s.start));
        SpecError::Syntax {
            line,
            column,
            message: e.message().to_string(),
        }
    };
    let mut table: toml::Table = text.parse().map_err(syntax)?;
    match table.remove("format") {
        None => return Err(SpecError::MissingFormat),
        Some(toml::Value::Integer(FORMAT_VERSION)) => {}
        Some(toml::Value::Integer(n)) => return Err(SpecError::UnsupportedFormat(n)),
        Some(_) => return Err(invalid("format", "must be an integer")),
    }
    let spec = GroupSpec::deserialize(toml::Value::Table(table)).map_err(|e| invalid("", e.to_string()))?;
    spec.validate("")?;
    Ok(spec)
}

pub fn load_group_spec(path: &std::path::Path) -> std::result::Result<GroupSpec, SpecError> {
    let text = std::fs::read_to_string(path).map_err(|e| SpecError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_group_spec(&text)
}

fn join(path: &str, field: &str) -> String {
    if path.is_empty() {
        field.to_string()
    } else {
        format!("{path}.{field}")
    }
}

fn matrices(
    path: &str,
    prime: u32,
    raw: &[Vec<Vec<i64>>],
    dim: Option<usize>,
) -> std::result::Result<Vec<FpMatrix>, SpecError> {
    let mut expected = dim;
    raw.iter()
        .enumerate()
        .map(|(k, rows)| {
            let here = format!("{path}[{k}]");
            let n = rows.len();
            if n == 0 {
                return Err(invalid(&here, "empty matrix"));
            }
            if let Some((r, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != n) {
                return Err(invalid(&format!("{here}[{r}]"), format!("row has {} entries, expected {n}", row.len())));
            }
            match expected {
                Some(d) if d != n => return Err(invalid(&here, format!("dimension mismatch: expected {d}, got {n}"))),
                _ => expected = Some(n),
            }
            let reduced: Vec<Vec<u32>> = rows
                .iter()
                .map(|row| row.iter().map(|&x| x.rem_euclid(prime as i64) as u32).collect())
                .collect();
            let m = FpMatrix::from_rows(prime, &reduced).map_err(|e| invalid(&here, e.to_string()))?;
            if !m.is_invertible() {
                return Err(invalid(&here, format!("matrix is not invertible mod {prime}")));
            }
            Ok(m)
        })
        .collect()
}

fn check_prime(path: &str, prime: u32) -> std::result::Result<(), SpecError> {
    if is_prime(prime as u64) {
        Ok(())
    } else {
        Err(invalid(&join(path, "prime"), format!("{prime} is not prime")))
    }
}

impl GroupSpec {
    fn validate(&self, path: &str) -> std::result::Result<(), SpecError> {
        match self {
            GroupSpec::Named { name } => named_group(name)
                .map(|_| ())
                .map_err(|e| invalid(&join(path, "name"), e.to_string())),
            GroupSpec::Permutation { degree, generators, .. } => {
                if *degree == 0 {
                    return Err(invalid(&join(path, "degree"), "degree must be positive"));
                }
                for (k, g) in generators.iter().enumerate() {
                    let here = format!("{}[{k}]", join(path, "generators"));
                    if g.len() != *degree {
                        return Err(invalid(&here, format!("image array has length {}, expected {degree}", g.len())));
                    }
                    let mut seen = vec![false; *degree];
                    for &x in g {
                        if x < 0 || x as usize >= *degree || std::mem::replace(&mut seen[x as usize], true) {
                            return Err(invalid(&here, format!("not a permutation of 0..{degree}")));
                        }
                    }
                }
                Ok(())
            }
            GroupSpec::Matrix { prime, generators } => {
                check_prime(path, *prime)?;
                if generators.is_empty() {
                    return Err(invalid(&join(path, "generators"), "at least one generator is needed"));
                }
                matrices(&join(path, "generators"), *prime, generators, None).map(|_| ())
            }
            GroupSpec::DirectProduct { factors } => {
                if factors.is_empty() {
                    return Err(invalid(&join(path, "factors"), "at least one factor is needed"));
                }
                for (k, f) in factors.iter().enumerate() {
                    f.validate(&format!("{}[{k}]", join(path, "factors")))?;
                }
                Ok(())
            }
            GroupSpec::Semidirect { prime, dim, acting, images } => {
                check_prime(path, *prime)?;
                if *dim == 0 {
                    return Err(invalid(&join(path, "dim"), "dimension must be positive"));
                }
                acting.validate(&join(path, "acting"))?;
                if let Some(images) = images {
                    matrices(&join(path, "images"), *prime, images, Some(*dim))?;
                }
                Ok(())
            }
        }
    }

    /// Realizes the group, refusing orders above `cap`.
    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        self.build_at("", cap)
    }

    fn build_at(&self, path: &str, cap: usize) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Named { name } => named_group(name),
            GroupSpec::Permutation {
                degree,
                generators,
                convention,
            } => {
                let gens = generators
                    .iter()
                    .map(|g| Ok(GroupElement::Perm(Perm::new(g.iter().map(|&x| x as u32).collect())?)))
                    .collect::<Result<Vec<_>>>()?;
                FiniteGroup::generate_from(
                    GroupElement::Perm(Perm::identity(*degree)),
                    gens,
                    MulRule::Perm(*convention),
                    cap,
                )
            }
            GroupSpec::Matrix { prime, generators } => {
                let ms = matrices(&join(path, "generators"), *prime, generators, None)?;
                FiniteGroup::generate_with_cap(ms.into_iter().map(GroupElement::Matrix).collect(), MulRule::Matrix, cap)
            }
            GroupSpec::DirectProduct { factors } => {
                let mut g = factors[0].build_at(&format!("{}[0]", join(path, "factors")), cap)?;
                for (k, f) in factors.iter().enumerate().skip(1) {
                    let h = f.build_at(&format!("{}[{k}]", join(path, "factors")), cap)?;
                    g = direct_product_with_cap(&g, &h, cap)?;
                }
                Ok(g)
            }
            GroupSpec::Semidirect { prime, dim, acting, images } => {
                let s = Arc::new(acting.build_at(&join(path, "acting"), cap)?);
                let action = match images {
                    Some(images) => {
                        let ms = matrices(&join(path, "images"), *prime, images, Some(*dim))?;
                        ModuleAction::from_generator_images(s, &ms)?
                    }
                    None => {
                        let a = ModuleAction::natural(s)?;
                        if a.prime() != *prime || a.dim() != *dim {
                            return Err(invalid(
                                &join(path, "acting"),
                                format!(
                                    "acting group lives in GL({}, {}), expected GL({dim}, {prime}); give `images`",
                                    a.dim(),
                                    a.prime()
                                ),
                            )
                            .into());
                        }
                        a
                    }
                };
                semidirect_product_with_cap(Arc::new(action), cap)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn named_s3() {
        let spec = parse_group_spec("format = 1\nkind = \"named\"\nname = \"S3\"\n").unwrap();
        assert_eq!(spec.build(1000).unwrap().order(), 6);
    }

    #[test]
    fn permutation_and_errors() {
        let ok = "format = 1\nkind = \"permutation\"\ndegree = 3\ngenerators = [[1, 2, 0], [1, 0, 2]]\n";
        assert_eq!(parse_group_spec(ok).unwrap().build(100).unwrap().order(), 6);
        let bad = "format = 1\nkind = \"permutation\"\ndegree = 3\ngenerators = [[1, 1, 0]]\n";
        assert_eq!(
            parse_group_spec(bad).unwrap_err(),
            SpecError::Invalid {
                path: "generators[0]".into(),
                message: "not a permutation of 0..3".into()
            }
        );
        assert_eq!(parse_group_spec("kind = \"named\"\nname = \"S3\"").unwrap_err(), SpecError::MissingFormat);
        assert_eq!(
            parse_group_spec("format = 2\nkind = \"named\"\nname = \"S3\"").unwrap_err(),
            SpecError::UnsupportedFormat(2)
        );
        assert!(matches!(
            parse_group_spec("format = 1\nkind = \"cube\"").unwrap_err(),
            SpecError::Invalid { .. }
        ));
        assert!(matches!(
            parse_group_spec("format = 1\nkind = [").unwrap_err(),
            SpecError::Syntax { line: 2, .. }
        ));
    }

    #[test]
    fn matrix_dimension_mismatch_is_located() {
        let doc = "format = 1\nkind = \"matrix\"\nprime = 5\ngenerators = [[[1, 0], [0, 1]], [[1, 0, 0], [0, 1, 0], [0, 0, 1]]]\n";
        assert_eq!(
            parse_group_spec(doc).unwrap_err(),
            SpecError::Invalid {
                path: "generators[1]".into(),
                message: "dimension mismatch: expected 2, got 3".into()
            }
        );
    }

    #[test]
    fn semidirect_with_images_and_cap() {
        let doc = r#"
format = 1
kind = "semidirect"
prime = 5
dim = 1
images = [[[4]]]
[acting]
kind = "named"
name = "C2"
"#;
        let spec = parse_group_spec(doc).unwrap();
        assert_eq!(spec.build(100).unwrap().order(), 10);
        assert_eq!(spec.build(5).unwrap_err(), Error::CapExceeded { cap: 5 });
    }
}
