//! The single-node Einstein gradations of kinds 3 and 4 on exceptional
//! restricted root systems, with their eigenvalue types.

use crate::catalog::Catalog;
use crate::curvature::{einstein_verdict, EigenvalueType};
use crate::error::Result;
use crate::gradation::{make_gradation, CharacteristicElement};

/// `(algebra, node)` with nodes in Bourbaki numbering, 1-based.
pub const TABLE_ROWS: [(&str, usize); 14] = [
    ("g2(2)", 1),
    ("g2^C", 1),
    ("f4(4)", 2),
    ("f4^C", 2),
    ("e6(2)", 2),
    ("e7(-5)", 2),
    ("e8(-24)", 2),
    ("e6(6)", 4),
    ("e6^C", 4),
    ("f4(4)", 3),
    ("f4^C", 3),
    ("e6(2)", 3),
    ("e7(-5)", 3),
    ("e8(-24)", 3),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub algebra: String,
    pub system: String,
    pub node: usize,
    pub kind: u32,
    pub dims: Vec<u64>,
    pub einstein: bool,
    pub eigenvalue_type: EigenvalueType,
}

impl TableRow {
    /// `g2(2), G2, H^1, (1<2<3; 2,1,2)`
    pub fn line(&self) -> String {
        format!(
            "{}, {}, H^{}, {}",
            self.algebra, self.system, self.node, self.eigenvalue_type
        )
    }
}

/// Computes every row from the catalog entry and node.
pub fn exceptional_table(catalog: &Catalog) -> Result<Vec<TableRow>> {
    TABLE_ROWS
        .iter()
        .map(|&(name, node)| {
            let entry = catalog.lookup(name)?;
            let rrd = entry.to_root_data()?;
            let z = CharacteristicElement::from_support(rrd.rank(), &[node - 1])?;
            let g = make_gradation(&rrd, z.coeffs())?;
            let report = einstein_verdict(&g)?;
            Ok(TableRow {
                algebra: entry.name.clone(),
                system: entry.label(),
                node,
                kind: report.kind,
                dims: report.dims.clone(),
                einstein: report.is_einstein(),
                eigenvalue_type: report.eigenvalue_type,
            })
        })
        .collect()
}
