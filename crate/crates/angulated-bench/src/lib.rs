//! Shared fixtures for the benchmark targets.

use angulated::{build_ar_line, GalleryEntry};

/// The strip the closure and evaluation benchmarks walk over.
pub fn strip(d: u32) -> GalleryEntry {
    build_ar_line(d, 3).expect("builtin strip")
}
