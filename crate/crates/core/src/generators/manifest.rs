//! On-disk dataset layout: `graphs/<id>.el` edge lists plus `manifest.json`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{CellStats, Dataset, DatasetError, DatasetSpec, GraphModel};
use crate::graph::io::{parse_edge_list, write_edge_list};
use crate::graph::{canonical_key, SimpleGraph};

pub const MANIFEST_FILE: &str = "manifest.json";
const FORMAT: &str = "vrel-dataset/1";

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub id: String,
    pub file: String,
    pub model: GraphModel,
    pub order: usize,
    pub edges: usize,
    pub attempt: u64,
    pub seed: u64,
    pub canonical_key_sha256: String,
    pub edges_sha256: String,
}

/// Everything covered by the manifest hash.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManifestBody {
    pub format: String,
    pub spec: DatasetSpec,
    pub stats: Vec<CellStats>,
    pub graphs: Vec<ManifestEntry>,
}

impl ManifestBody {
    pub fn hash(&self) -> String {
        sha256_hex(&serde_json::to_vec(self).expect("manifest body serializes"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    #[serde(flatten)]
    pub body: ManifestBody,
    pub manifest_hash: String,
}

#[derive(Debug, Clone)]
pub struct LoadedDataset {
    pub manifest: Manifest,
    /// Graphs in manifest order, paired with their entries.
    pub graphs: Vec<(ManifestEntry, SimpleGraph)>,
}

impl LoadedDataset {
    pub fn manifest_hash(&self) -> &str {
        &self.manifest.manifest_hash
    }
}

/// Writes the dataset into `dir` (created if missing) and returns the manifest.
pub fn write_dataset(dataset: &Dataset, dir: &Path) -> Result<Manifest, DatasetError> {
    fs::create_dir_all(dir.join("graphs"))?;
    let mut entries = Vec::with_capacity(dataset.graphs.len());
    for e in &dataset.graphs {
        let text = write_edge_list(&e.graph);
        let file = format!("graphs/{}.el", e.id);
        fs::write(dir.join(&file), &text)?;
        entries.push(ManifestEntry {
            id: e.id.clone(),
            file,
            model: e.model,
            order: e.order,
            edges: e.graph.m(),
            attempt: e.attempt,
            seed: e.seed,
            canonical_key_sha256: sha256_hex(&e.key),
            edges_sha256: sha256_hex(text.as_bytes()),
        });
    }
    let body = ManifestBody {
        format: FORMAT.into(),
        spec: dataset.spec.clone(),
        stats: dataset.stats.clone(),
        graphs: entries,
    };
    let manifest = Manifest { manifest_hash: body.hash(), body };
    let mut json = serde_json::to_string_pretty(&manifest)?;
    json.push('\n');
    fs::write(dir.join(MANIFEST_FILE), json)?;
    Ok(manifest)
}

/// Reads a dataset back, refusing it if any hash disagrees with the content.
pub fn load_dataset(dir: &Path) -> Result<LoadedDataset, DatasetError> {
    let manifest: Manifest = serde_json::from_str(&fs::read_to_string(dir.join(MANIFEST_FILE))?)?;
    if manifest.body.format != FORMAT {
        return Err(DatasetError::Integrity(format!("unsupported format '{}'", manifest.body.format)));
    }
    let recomputed = manifest.body.hash();
    if recomputed != manifest.manifest_hash {
        return Err(DatasetError::Integrity(format!(
            "manifest hash {} does not match content hash {recomputed}",
            manifest.manifest_hash
        )));
    }
    let mut graphs = Vec::with_capacity(manifest.body.graphs.len());
    for entry in &manifest.body.graphs {
        let bytes = fs::read(dir.join(&entry.file))?;
        if sha256_hex(&bytes) != entry.edges_sha256 {
            return Err(DatasetError::Integrity(format!("{} was modified", entry.file)));
        }
        let text = String::from_utf8(bytes).map_err(|_| DatasetError::Integrity(format!("{} is not UTF-8", entry.file)))?;
        let g = parse_edge_list(&text)?;
        if g.n() != entry.order || sha256_hex(&canonical_key(&g)) != entry.canonical_key_sha256 {
            return Err(DatasetError::Integrity(format!("{} does not match its canonical key", entry.file)));
        }
        graphs.push((entry.clone(), g));
    }
    Ok(LoadedDataset { manifest, graphs })
}
