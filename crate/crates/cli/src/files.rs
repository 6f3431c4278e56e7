use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{Context, Result};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

#[derive(Debug, Serialize)]
pub struct FileDigest {
    pub path: PathBuf,
    pub sha256: String,
}

fn digest(path: &Path, bytes: &[u8]) -> FileDigest {
    FileDigest { path: path.to_path_buf(), sha256: hex::encode(Sha256::digest(bytes)) }
}

/// What a command read and wrote. Written with `--manifest`.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub inputs: Vec<FileDigest>,
    pub params: Map<String, Value>,
    pub outputs: Vec<FileDigest>,
    pub wall_time_ms: u128,
}

/// File access for one command run; records every file for the manifest.
pub struct Session {
    started: Instant,
    manifest: RunManifest,
}

impl Session {
    pub fn new(command: &str) -> Self {
        Session {
            started: Instant::now(),
            manifest: RunManifest {
                command: command.to_string(),
                inputs: Vec::new(),
                params: Map::new(),
                outputs: Vec::new(),
                wall_time_ms: 0,
            },
        }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("parameters serialize");
        self.manifest.params.insert(key.to_string(), value);
    }

    pub fn read<T: DeserializeOwned>(&mut self, path: &Path) -> Result<T> {
        let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
        self.manifest.inputs.push(digest(path, &bytes));
        serde_json::from_slice(&bytes).with_context(|| format!("parsing {}", path.display()))
    }

    pub fn write_text(&mut self, path: &Path, text: &str) -> Result<()> {
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
        self.manifest.outputs.push(digest(path, text.as_bytes()));
        Ok(())
    }

    pub fn write_json(&mut self, path: &Path, value: &impl Serialize) -> Result<()> {
        let mut text = serde_json::to_string(value)?;
        text.push('\n');
        self.write_text(path, &text)
    }

    pub fn finish(mut self, manifest_path: Option<&Path>) -> Result<()> {
        let Some(path) = manifest_path else { return Ok(()) };
        self.manifest.wall_time_ms = self.started.elapsed().as_millis();
        let text = serde_json::to_string_pretty(&self.manifest)? + "\n";
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))
    }
}
