//! CSV files for data grids and coefficient tables, with a JSON sidecar that
//! records how a grid was sampled.

use serde::{Deserialize, Serialize};
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use sphrange::harmonics::sphere_quadrature;
use sphrange::{DataGrid, Dimension, RadialGrid};

use crate::CliError;

/// Absolute tolerance when matching node coordinates and radii read back from CSV.
const NODE_TOLERANCE: f64 = 1e-12;

pub const FORMAT: &str = "sphrange-grid";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridMetadata {
    pub format: String,
    pub version: u32,
    pub dimension: usize,
    pub sphere_resolution: usize,
    pub t_points: usize,
    /// Description of the rule used for sphere averages.
    pub mean_rule: String,
    pub seed: u64,
    /// `max |g|` over the grid before perturbations were added.
    pub range_max_abs: f64,
}

pub fn format_value(v: f64) -> String {
    format!("{v:.16e}")
}

/// The sidecar sits next to the grid: `grid.csv` → `grid.meta.json`.
pub fn sidecar_path(grid: &Path) -> PathBuf {
    grid.with_extension("meta.json")
}

pub fn write_grid(path: &Path, grid: &DataGrid, meta: &GridMetadata) -> Result<(), CliError> {
    let file = File::create(path).map_err(|e| CliError::io(path, e))?;
    let mut w = csv::Writer::from_writer(BufWriter::new(file));
    let dims = grid.dimension().get();
    let mut header = vec!["node".to_string()];
    header.extend((0..dims).map(|d| format!("x{d}")));
    header.extend(["t".to_string(), "g".to_string()]);
    let csv_err = |e: csv::Error| CliError::Io(format!("{}: {e}", path.display()));
    w.write_record(&header).map_err(csv_err)?;
    let t = grid.radial().t();
    for (i, x) in grid.centers().nodes().iter().enumerate() {
        let coords: Vec<String> = x[..dims].iter().map(|&c| format_value(c)).collect();
        for (tj, g) in t.iter().zip(grid.row(i)) {
            let mut record = Vec::with_capacity(dims + 3);
            record.push(i.to_string());
            record.extend(coords.iter().cloned());
            record.push(format_value(*tj));
            record.push(format_value(*g));
            w.write_record(&record).map_err(csv_err)?;
        }
    }
    w.flush().map_err(|e| CliError::io(path, e))?;
    write_json(&sidecar_path(path), meta)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("value serializes");
    write_text(path, &(text + "\n"))
}

pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    let mut f = BufWriter::new(File::create(path).map_err(|e| CliError::io(path, e))?);
    f.write_all(text.as_bytes()).map_err(|e| CliError::io(path, e))?;
    f.flush().map_err(|e| CliError::io(path, e))
}

pub fn read_metadata(grid_path: &Path) -> Result<GridMetadata, CliError> {
    let path = sidecar_path(grid_path);
    let text = std::fs::read_to_string(&path).map_err(|e| CliError::io(&path, e))?;
    let meta: GridMetadata =
        serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}:{}: {e}", path.display(), e.line())))?;
    if meta.format != FORMAT {
        return Err(CliError::Parse(format!("{}: unknown format {:?}", path.display(), meta.format)));
    }
    Ok(meta)
}

/// Reads a grid written by [`write_grid`], rebuilding the quadrature from the
/// sidecar and checking every row against it.
pub fn read_grid(path: &Path) -> Result<(DataGrid, GridMetadata), CliError> {
    let meta = read_metadata(path)?;
    let n = Dimension::new(meta.dimension)?;
    let centers = sphere_quadrature(n, meta.sphere_resolution)?;
    let radial = Arc::new(RadialGrid::uniform(meta.t_points)?);
    let dims = n.get();
    let expected_rows = centers.len() * radial.len();

    let file = File::open(path).map_err(|e| CliError::io(path, e))?;
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(file);
    let at = |line: u64, msg: String| CliError::Parse(format!("{}:{line}: {msg}", path.display()));
    let header = reader.headers().map_err(|e| at(1, e.to_string()))?.clone();
    if header.len() != dims + 3 {
        return Err(at(1, format!("expected {} columns, found {}", dims + 3, header.len())));
    }

    let mut values = Vec::with_capacity(expected_rows);
    for (row, record) in reader.records().enumerate() {
        let line = row as u64 + 2;
        let record = record.map_err(|e| at(e.position().map_or(line, |p| p.line()), e.to_string()))?;
        if row >= expected_rows {
            return Err(at(line, format!("more than the {expected_rows} rows announced by the sidecar")));
        }
        if record.len() != dims + 3 {
            return Err(at(line, format!("expected {} fields, found {}", dims + 3, record.len())));
        }
        let (node, tj) = (row / radial.len(), row % radial.len());
        let field = |k: usize| -> Result<f64, CliError> {
            record[k].trim().parse::<f64>().map_err(|e| at(line, format!("column {}: {:?}: {e}", &header[k], &record[k])))
        };
        let index: usize = record[0].trim().parse().map_err(|e| at(line, format!("node index {:?}: {e}", &record[0])))?;
        if index != node {
            return Err(at(line, format!("node index {index}, expected {node}")));
        }
        let x = centers.nodes()[node];
        for (d, &xd) in x.iter().enumerate().take(dims) {
            if (field(1 + d)? - xd).abs() > NODE_TOLERANCE {
                return Err(at(line, format!("coordinate x{d} does not match sphere node {node}")));
            }
        }
        if (field(dims + 1)? - radial.t()[tj]).abs() > NODE_TOLERANCE {
            return Err(at(line, format!("radius does not match grid point {tj}")));
        }
        let g = field(dims + 2)?;
        if !g.is_finite() {
            return Err(at(line, "non-finite value".into()));
        }
        values.push(g);
    }
    if values.len() != expected_rows {
        return Err(CliError::Parse(format!(
            "{}: {} data rows, sidecar announces {expected_rows}",
            path.display(),
            values.len()
        )));
    }
    Ok((DataGrid::new(centers, radial, values)?, meta))
}

/// Writes `(m, l, t_or_lambda, value)` rows.
pub fn write_rows(path: &Path, column: &str, rows: &[(usize, usize, f64, f64)]) -> Result<(), CliError> {
    let file = File::create(path).map_err(|e| CliError::io(path, e))?;
    let mut w = csv::Writer::from_writer(BufWriter::new(file));
    let csv_err = |e: csv::Error| CliError::Io(format!("{}: {e}", path.display()));
    w.write_record(["m", "l", column, "value"]).map_err(csv_err)?;
    for &(m, l, s, v) in rows {
        w.write_record([m.to_string(), l.to_string(), format_value(s), format_value(v)]).map_err(csv_err)?;
    }
    w.flush().map_err(|e| CliError::io(path, e))
}
