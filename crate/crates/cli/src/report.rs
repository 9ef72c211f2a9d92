use std::fmt::Display;
use std::time::Instant;

use sha2::{Digest, Sha256};

/// Ordered `key: value` lines, printed once the command finishes.
pub struct Report {
    lines: Vec<(String, String)>,
    started: Instant,
}

impl Report {
    pub fn new(command: &str, seed: u64) -> Self {
        let mut r = Report {
            lines: Vec::new(),
            started: Instant::now(),
        };
        r.put("command", command);
        r.put("seed", seed);
        r
    }

    pub fn put(&mut self, key: &str, value: impl Display) {
        self.lines.push((key.to_string(), value.to_string()));
    }

    pub fn list<T: Display>(&mut self, key: &str, items: impl IntoIterator<Item = T>) {
        let body: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
        self.put(key, format!("[{}]", body.join(",")));
    }

    pub fn instance(&mut self, canonical_text: &str) {
        self.put("instance_hash", hex::encode(Sha256::digest(canonical_text.as_bytes())));
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.lines {
            out.push_str(&format!("{k}: {v}\n"));
        }
        out.push_str(&format!("elapsed_ms: {}\n", self.started.elapsed().as_millis()));
        out
    }
}
