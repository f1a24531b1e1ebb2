use serde::Serialize;
use serde_json::{Map, Value};

/// The JSON document every command emits with `--json`.
///
/// The five top-level keys are fixed; anything command-specific goes in
/// `extra`.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub width: usize,
    pub levels: Vec<Value>,
    pub boxes: Vec<Value>,
    pub moves: Vec<Value>,
    pub certificate: Option<Value>,
    pub extra: Map<String, Value>,
}

/// Serializes any value that is known to be representable in JSON.
pub fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

impl Report {
    pub fn new(width: usize) -> Self {
        Report { width, ..Default::default() }
    }

    pub fn with_extra<T: Serialize>(mut self, key: &str, value: &T) -> Self {
        self.extra.insert(key.to_string(), to_value(value));
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Checks a JSON text against the report layout.
pub fn validate_report_json(text: &str) -> Result<(), String> {
    let v: Value = serde_json::from_str(text).map_err(|e| format!("not JSON: {e}"))?;
    let obj = v.as_object().ok_or("report is not an object")?;
    let want = |key: &str, ok: fn(&Value) -> bool, what: &str| match obj.get(key) {
        Some(x) if ok(x) => Ok(()),
        Some(_) => Err(format!("`{key}` is not {what}")),
        None => Err(format!("missing `{key}`")),
    };
    want("width", |x| x.is_u64(), "a nonnegative integer")?;
    want("levels", Value::is_array, "an array")?;
    want("boxes", Value::is_array, "an array")?;
    want("moves", Value::is_array, "an array")?;
    want("certificate", |x| x.is_object() || x.is_null(), "an object or null")?;
    if let Some(extra) = obj.get("extra") {
        if !extra.is_object() {
            return Err("`extra` is not an object".into());
        }
    }
    if let Some(k) = obj.keys().find(|k| {
        !["width", "levels", "boxes", "moves", "certificate", "extra"].contains(&k.as_str())
    }) {
        return Err(format!("unknown key `{k}`"));
    }
    Ok(())
}
