//! Serializable documents and their text / JSON / CSV renderings.
//!
//! Rationals are written as `[numerator, denominator]` in JSON and as
//! `p/q` strings in text and CSV; no decimal formatting is used anywhere.

use std::fmt::Write as _;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::catalog::CatalogEntry;
use crate::curvature::CurvatureReport;
use crate::oracle::OracleReport;
use crate::rational::{self, Q};
use crate::rootsys::RestrictedRootData;
use crate::table::TableRow;

pub const SCHEMA: &str = "nilrad/1";

/// Exact rational serialized as `[num, den]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rational(pub Q);

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [*self.0.numer(), *self.0.denom()].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [n, den] = <[i128; 2]>::deserialize(d)?;
        if den == 0 {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(Rational(Q::new(n, den)))
    }
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&rational::format(&self.0))
    }
}

fn rats(v: &[Q]) -> Vec<Rational> {
    v.iter().copied().map(Rational).collect()
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

/// Ricci data on one class of roots of `n` sharing level and `α(H₀)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RicciEntry {
    pub level: u32,
    pub h0_value: Rational,
    pub dim: u64,
    pub nil_ricci: Rational,
    pub solv_ricci: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisDocument {
    pub schema: String,
    pub algebra: String,
    pub system: String,
    /// Characteristic coefficients as given.
    pub coefficients: Vec<u32>,
    pub alpha0: bool,
    /// Type-α₀ reduction used for all curvature data.
    pub reduced_coefficients: Vec<u32>,
    pub kind: u32,
    pub dims: Vec<u64>,
    /// `Z_k` in the basis `H_{α_i}` of simple-root vectors.
    pub z_k: Vec<Vec<Rational>>,
    /// `Z_k` in the dual basis `H^i`.
    pub z_k_dual: Vec<Vec<Rational>>,
    pub h0: Vec<Rational>,
    pub h0_dual: Vec<Rational>,
    pub ricci: Vec<RicciEntry>,
    pub ric_h0: Rational,
    pub einstein: bool,
    pub einstein_constant: Option<Rational>,
    pub eigenvalue_type: String,
    pub eigenvalues: Vec<u64>,
    pub eigenvalue_mults: Vec<u64>,
    pub carnot_step: u64,
}

impl AnalysisDocument {
    pub fn new(rrd: &RestrictedRootData, report: &CurvatureReport) -> Self {
        let mc = &report.mean_curvature;
        AnalysisDocument {
            schema: SCHEMA.to_string(),
            algebra: rrd.name().to_string(),
            system: rrd.root_system().label(),
            coefficients: report.nominal.coeffs().to_vec(),
            alpha0: report.nominal.is_alpha0(),
            reduced_coefficients: report.characteristic.coeffs().to_vec(),
            kind: report.kind,
            dims: report.dims.clone(),
            z_k: mc.all_zk().iter().map(|z| rats(z.coords())).collect(),
            z_k_dual: mc
                .all_zk()
                .iter()
                .map(|z| rats(&rrd.dual_coords(z)))
                .collect(),
            h0: rats(mc.h0().coords()),
            h0_dual: rats(&rrd.dual_coords(mc.h0())),
            ricci: report
                .classes
                .iter()
                .map(|c| RicciEntry {
                    level: c.level,
                    h0_value: Rational(c.h0_value),
                    dim: c.dim,
                    nil_ricci: Rational(c.nil_ricci),
                    solv_ricci: Rational(c.solv_ricci),
                })
                .collect(),
            ric_h0: Rational(report.ric_h0),
            einstein: report.is_einstein(),
            einstein_constant: report.einstein_constant.map(Rational),
            eigenvalue_type: report.eigenvalue_type.to_string(),
            eigenvalues: report.eigenvalue_type.values.clone(),
            eigenvalue_mults: report.eigenvalue_type.mults.clone(),
            carnot_step: report.carnot_step,
        }
    }

    /// Characteristic element in `H^i` notation.
    pub fn characteristic(&self) -> String {
        characteristic_label(&self.coefficients)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let rv = |v: &[Rational]| format!("({})", join(v, ", "));
        let _ = writeln!(s, "algebra:          {} ({})", self.algebra, self.system);
        let _ = writeln!(
            s,
            "characteristic:   {} = ({})",
            self.characteristic(),
            join(&self.coefficients, ",")
        );
        if !self.alpha0 {
            let _ = writeln!(
                s,
                "reduced to:       {} = ({})",
                characteristic_label(&self.reduced_coefficients),
                join(&self.reduced_coefficients, ",")
            );
        }
        let _ = writeln!(s, "kind:             {}", self.kind);
        let _ = writeln!(s, "dims:             ({})", join(&self.dims, ","));
        for (k, (z, zd)) in self.z_k.iter().zip(&self.z_k_dual).enumerate() {
            let _ = writeln!(s, "Z_{:<2}              {} [dual {}]", k + 1, rv(z), rv(zd));
        }
        let _ = writeln!(
            s,
            "H0:               {} [dual {}]",
            rv(&self.h0),
            rv(&self.h0_dual)
        );
        let _ = writeln!(s, "ricci (level, alpha(H0), dim: nil, solv):");
        for r in &self.ricci {
            let _ = writeln!(
                s,
                "  {}, {}, {}: {}, {}",
                r.level, r.h0_value, r.dim, r.nil_ricci, r.solv_ricci
            );
        }
        let _ = writeln!(s, "ric(H0):          {}", self.ric_h0);
        let verdict = match &self.einstein_constant {
            Some(c) => format!("yes, constant {c}"),
            None => "no".to_string(),
        };
        let _ = writeln!(s, "einstein:         {verdict}");
        let _ = writeln!(s, "eigenvalue type:  {}", self.eigenvalue_type);
        let _ = writeln!(s, "carnot step:      {}", self.carnot_step);
        s
    }
}

/// `H^1 + 2H^3` from coefficients; `0` for the zero vector.
pub fn characteristic_label(coeffs: &[u32]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(i, &c)| {
            if c == 1 {
                format!("H^{}", i + 1)
            } else {
                format!("{c}H^{}", i + 1)
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

fn write_csv<R: Serialize>(records: &[R]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in records {
        w.serialize(r).expect("records serialize to CSV");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("CSV is UTF-8")
}

/// Flat CSV form of an analysis: one row per Ricci class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisCsvRow {
    pub algebra: String,
    pub coefficients: String,
    pub kind: u32,
    pub dims: String,
    pub einstein: bool,
    pub eigenvalue_type: String,
    pub carnot_step: u64,
    pub level: u32,
    pub h0_value: String,
    pub dim: u64,
    pub nil_ricci: String,
    pub solv_ricci: String,
}

pub fn analysis_csv(doc: &AnalysisDocument) -> String {
    let rows: Vec<AnalysisCsvRow> = doc
        .ricci
        .iter()
        .map(|r| AnalysisCsvRow {
            algebra: doc.algebra.clone(),
            coefficients: join(&doc.coefficients, ","),
            kind: doc.kind,
            dims: join(&doc.dims, ","),
            einstein: doc.einstein,
            eigenvalue_type: doc.eigenvalue_type.clone(),
            carnot_step: doc.carnot_step,
            level: r.level,
            h0_value: r.h0_value.to_string(),
            dim: r.dim,
            nil_ricci: r.nil_ricci.to_string(),
            solv_ricci: r.solv_ricci.to_string(),
        })
        .collect();
    write_csv(&rows)
}

/// One row of an enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationRow {
    pub support: String,
    pub coefficients: String,
    pub kind: u32,
    pub dims: String,
    pub einstein: bool,
    pub eigenvalue_type: String,
    pub carnot_step: u64,
}

impl From<&AnalysisDocument> for EnumerationRow {
    fn from(doc: &AnalysisDocument) -> Self {
        EnumerationRow {
            support: doc.characteristic(),
            coefficients: join(&doc.coefficients, ","),
            kind: doc.kind,
            dims: join(&doc.dims, ","),
            einstein: doc.einstein,
            eigenvalue_type: doc.eigenvalue_type.clone(),
            carnot_step: doc.carnot_step,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationDocument {
    pub schema: String,
    pub algebra: String,
    pub system: String,
    pub gradations: Vec<AnalysisDocument>,
}

impl EnumerationDocument {
    pub fn rows(&self) -> Vec<EnumerationRow> {
        self.gradations.iter().map(EnumerationRow::from).collect()
    }

    pub fn to_text(&self) -> String {
        let rows = self.rows();
        let mut table = vec![[
            "Z".to_string(),
            "kind".into(),
            "dims".into(),
            "Einstein".into(),
            "eigenvalue type".into(),
        ]];
        for r in &rows {
            table.push([
                r.support.clone(),
                r.kind.to_string(),
                format!("({})", r.dims),
                if r.einstein { "yes" } else { "no" }.to_string(),
                r.eigenvalue_type.clone(),
            ]);
        }
        format!(
            "{} ({}), {} gradations\n{}",
            self.algebra,
            self.system,
            rows.len(),
            align(&table)
        )
    }

    pub fn to_csv(&self) -> String {
        write_csv(&self.rows())
    }
}

fn align<const N: usize>(rows: &[[String; N]]) -> String {
    let widths: Vec<usize> = (0..N)
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell}{}", " ".repeat(w - cell.chars().count())))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// One line of the exceptional kind-3/4 table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRecord {
    pub algebra: String,
    pub system: String,
    pub node: usize,
    pub characteristic: String,
    pub kind: u32,
    pub dims: String,
    pub einstein: bool,
    pub eigenvalue_type: String,
}

impl From<&TableRow> for TableRecord {
    fn from(r: &TableRow) -> Self {
        TableRecord {
            algebra: r.algebra.clone(),
            system: r.system.clone(),
            node: r.node,
            characteristic: format!("H^{}", r.node),
            kind: r.kind,
            dims: join(&r.dims, ","),
            einstein: r.einstein,
            eigenvalue_type: r.eigenvalue_type.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub schema: String,
    pub rows: Vec<TableRecord>,
}

impl TableDocument {
    pub fn new(rows: &[TableRow]) -> Self {
        TableDocument {
            schema: SCHEMA.to_string(),
            rows: rows.iter().map(TableRecord::from).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        self.rows
            .iter()
            .map(|r| {
                format!(
                    "{}, {}, {}, {}\n",
                    r.algebra, r.system, r.characteristic, r.eigenvalue_type
                )
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        write_csv(&self.rows)
    }

    pub fn from_csv(text: &str) -> Result<Vec<TableRecord>, csv::Error> {
        csv::Reader::from_reader(text.as_bytes())
            .deserialize()
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraListing {
    pub name: String,
    pub system: String,
    pub mult_long: u32,
    pub mult_short: u32,
    pub mult_doubled: Option<u32>,
    pub parameters: String,
    pub aliases: String,
}

impl From<&CatalogEntry> for AlgebraListing {
    fn from(e: &CatalogEntry) -> Self {
        AlgebraListing {
            name: e.name.clone(),
            system: e.label(),
            mult_long: e.mult_long,
            mult_short: e.mult_short_or_long(),
            mult_doubled: e.mult_doubled,
            parameters: e
                .parameters
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(","),
            aliases: e.aliases.join(","),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListingDocument {
    pub schema: String,
    pub algebras: Vec<AlgebraListing>,
    pub parametric: Vec<String>,
}

impl ListingDocument {
    pub fn new(entries: &[CatalogEntry]) -> Self {
        ListingDocument {
            schema: SCHEMA.to_string(),
            algebras: entries.iter().map(AlgebraListing::from).collect(),
            parametric: vec![
                "sl(n,R)".into(),
                "sl(n,C)".into(),
                "su*(2n)".into(),
                "so(2,q)".into(),
            ],
        }
    }

    pub fn to_text(&self) -> String {
        let mut table = vec![[
            "name".to_string(),
            "system".into(),
            "multiplicities".into(),
            "parameters".into(),
        ]];
        for a in &self.algebras {
            let mut mults = if a.mult_short == a.mult_long {
                a.mult_long.to_string()
            } else {
                format!("long {}, short {}", a.mult_long, a.mult_short)
            };
            if let Some(d) = a.mult_doubled {
                mults = format!("long {}, short {}, doubled {d}", a.mult_long, a.mult_short);
            }
            table.push([
                a.name.clone(),
                a.system.clone(),
                mults,
                a.parameters.clone(),
            ]);
        }
        format!(
            "{}parametric: {}\n",
            align(&table),
            self.parametric.join(", ")
        )
    }

    pub fn to_csv(&self) -> String {
        write_csv(&self.algebras)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRecord {
    pub unit: String,
    pub root: String,
    pub level: u32,
    pub symbolic_nil: String,
    pub brute_nil: String,
    pub symbolic_solv: String,
    pub brute_solv: String,
    pub status: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleDocument {
    pub schema: String,
    pub n: usize,
    pub blocks: Vec<usize>,
    pub mean_curvature: String,
    pub ric_h: [String; 2],
    pub passed: bool,
    pub rows: Vec<OracleRecord>,
}

fn status(ok: bool) -> String {
    if ok { "PASS" } else { "FAIL" }.to_string()
}

impl OracleDocument {
    pub fn new(report: &OracleReport) -> Self {
        let rows = report
            .rows
            .iter()
            .map(|r| OracleRecord {
                unit: format!("E{}{}", r.unit.0 + 1, r.unit.1 + 1),
                root: r.root.iter().map(i32::to_string).collect(),
                level: r.level,
                symbolic_nil: rational::format(&r.symbolic_nil),
                brute_nil: rational::format(&r.brute_nil),
                symbolic_solv: rational::format(&r.symbolic_solv),
                brute_solv: rational::format(&r.brute_solv),
                status: status(r.passed()),
            })
            .collect();
        OracleDocument {
            schema: SCHEMA.to_string(),
            n: report.blocks.iter().sum(),
            blocks: report.blocks.clone(),
            mean_curvature: status(report.mean_curvature_agrees),
            ric_h: [
                rational::format(&report.symbolic_ric_h),
                rational::format(&report.brute_ric_h),
            ],
            passed: report.passed(),
            rows,
        }
    }

    pub fn to_text(&self) -> String {
        let mut table = vec![[
            "unit".to_string(),
            "root".into(),
            "level".into(),
            "nil (sym/brute)".into(),
            "solv (sym/brute)".into(),
            "".into(),
        ]];
        for r in &self.rows {
            table.push([
                r.unit.clone(),
                r.root.clone(),
                r.level.to_string(),
                format!("{} / {}", r.symbolic_nil, r.brute_nil),
                format!("{} / {}", r.symbolic_solv, r.brute_solv),
                r.status.clone(),
            ]);
        }
        let mut s = format!("sl({}) blocks ({})\n", self.n, join(&self.blocks, ","));
        s.push_str(&align(&table));
        let ric_ok = self.ric_h[0] == self.ric_h[1];
        let _ = writeln!(s, "mean curvature: {}", self.mean_curvature);
        let _ = writeln!(
            s,
            "ric(H0): {} / {} {}",
            self.ric_h[0],
            self.ric_h[1],
            status(ric_ok)
        );
        let _ = writeln!(s, "{}", status(self.passed));
        s
    }

    pub fn to_csv(&self) -> String {
        write_csv(&self.rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn rational_json_pairs() {
        let r = Rational(frac(-3, 6));
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, "[-1,2]");
        assert_eq!(serde_json::from_str::<Rational>(&s).unwrap(), r);
        assert!(serde_json::from_str::<Rational>("[1,0]").is_err());
    }

    #[test]
    fn labels() {
        assert_eq!(characteristic_label(&[1, 0, 2]), "H^1 + 2H^3");
        assert_eq!(characteristic_label(&[0, 0]), "0");
    }
}
