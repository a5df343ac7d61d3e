use std::path::Path;

use serde::de::DeserializeOwned;
use serde_json::Value;

/// Resolves a descriptor reference: inline JSON, a path to a JSON file, or a
/// bare catalog name. Error messages are prefixed with `field`.
pub(crate) fn load<T: DeserializeOwned>(field: &str, reference: &str) -> Result<T, String> {
    let trimmed = reference.trim_start();
    let parsed = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        serde_json::from_str(trimmed).map_err(|e| e.to_string())
    } else if Path::new(reference).is_file() {
        let text = std::fs::read_to_string(reference)
            .map_err(|e| format!("cannot read {reference}: {e}"))?;
        serde_json::from_str(&text).map_err(|e| format!("{reference}: {e}"))
    } else {
        serde_json::from_value(Value::String(reference.to_string())).map_err(|e| e.to_string())
    };
    parsed.map_err(|e| format!("{field}: {e}"))
}
