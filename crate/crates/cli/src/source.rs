//! Turning a command-line group argument into a group.

use std::path::Path;

use fsz_core::catalog::{make, CatalogSpec};
use fsz_core::notation::parse_generators;
use fsz_core::PermGroup;

use crate::error::CliError;

/// Reads `source` as a generator file when such a file exists, and as a
/// catalog spec otherwise.
pub fn parse_group(source: &str, max_order: u64) -> Result<PermGroup, CliError> {
    let path = Path::new(source);
    let group = if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
            path: source.to_string(),
            source: e,
        })?;
        let file = parse_generators(&text).map_err(|e| CliError::Notation {
            path: source.to_string(),
            source: e,
        })?;
        file.into_group()?
    } else {
        match source.parse::<CatalogSpec>() {
            Ok(spec) => {
                if spec.expected_order() > u128::from(max_order) {
                    return Err(CliError::OrderCap {
                        order: spec.expected_order().to_string(),
                        cap: max_order,
                    });
                }
                make(&spec)?
            }
            Err(e) if source.contains(':') => return Err(e.into()),
            Err(_) => {
                return Err(CliError::Io {
                    path: source.to_string(),
                    source: std::io::Error::new(
                        std::io::ErrorKind::NotFound,
                        "no such file or catalog spec",
                    ),
                })
            }
        }
    };
    if group.order_u64().is_none_or(|o| o > max_order) {
        return Err(CliError::OrderCap {
            order: group.order().to_string(),
            cap: max_order,
        });
    }
    Ok(group)
}
