//! Content-addressed store of Graver bases, keyed by the hash of the input
//! matrix's canonical text form.

use std::fs;
use std::path::{Path, PathBuf};

use super::matrix_file::{parse_matrix, write_matrix};
use super::report::matrix_hash;
use crate::error::Result;
use crate::graver::{graver_basis_with, CompletionMode, GraverBasis};
use crate::lattice::IntMatrix;

pub struct GraverCache {
    dir: Option<PathBuf>,
}

impl GraverCache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        GraverCache { dir }
    }

    pub fn disabled() -> Self {
        GraverCache { dir: None }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    fn path_for(&self, a: &IntMatrix) -> Option<PathBuf> {
        let key = matrix_hash(a);
        let hex = key.trim_start_matches("sha256:");
        self.dir.as_ref().map(|d| d.join(format!("{hex}.gra")))
    }

    /// A stored entry that fails to parse or validate counts as a miss.
    pub fn load(&self, a: &IntMatrix) -> Option<GraverBasis> {
        let path = self.path_for(a)?;
        let text = fs::read_to_string(path).ok()?;
        let m = parse_matrix(&text).ok()?;
        if m.rows() > 0 && m.cols() != a.cols() {
            return None;
        }
        let rows = (0..m.rows()).map(|r| m.row(r)).collect();
        GraverBasis::from_stored(a.clone(), rows).ok()
    }

    pub fn store(&self, gr: &GraverBasis) -> Result<()> {
        let Some(path) = self.path_for(gr.source()) else {
            return Ok(());
        };
        let dir = path.parent().expect("cache file has a parent");
        fs::create_dir_all(dir)?;
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, write_matrix(&gr.to_matrix()))?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    pub fn graver(&self, a: &IntMatrix) -> Result<GraverBasis> {
        if let Some(gr) = self.load(a) {
            return Ok(gr);
        }
        let gr = graver_basis_with(a, CompletionMode::default())?;
        self.store(&gr)?;
        Ok(gr)
    }
}
