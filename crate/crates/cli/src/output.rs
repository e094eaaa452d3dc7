use serde_json::{json, Value};

/// What a subcommand produced: text lines, the same content as JSON, and
/// whether a verification failed.
pub struct Report {
    lines: Vec<String>,
    json: Value,
    failed: bool,
}

impl Report {
    pub fn new(json: Value) -> Self {
        Report {
            lines: Vec::new(),
            json,
            failed: false,
        }
    }

    pub fn line(mut self, text: impl Into<String>) -> Self {
        self.lines.push(text.into());
        self
    }

    pub fn lines(mut self, text: impl IntoIterator<Item = String>) -> Self {
        self.lines.extend(text);
        self
    }

    pub fn fail_if(mut self, failed: bool) -> Self {
        self.failed |= failed;
        self
    }

    pub fn failed(&self) -> bool {
        self.failed
    }

    pub fn print(&self, as_json: bool) {
        if as_json {
            let mut v = self.json.clone();
            if let Value::Object(map) = &mut v {
                map.insert("ok".into(), json!(!self.failed));
            }
            println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
        } else {
            for l in &self.lines {
                println!("{l}");
            }
        }
    }
}

/// The label used for every verdict about an infinite sequence read through a
/// finite prefix.
pub fn prefix_label(violation: Option<usize>) -> String {
    match violation {
        None => "consistent-on-prefix: true".to_string(),
        Some(n) => format!("violation-found at {n}"),
    }
}
