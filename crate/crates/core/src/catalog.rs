//! Named real forms as (restricted root system, multiplicities) pairs.
//!
//! Catalog files are TOML with one `[[algebra]]` table per entry:
//!
//! ```toml
//! [[algebra]]
//! name = "e6(2)"
//! family = "F4"
//! rank = 4
//! mult_long = 1
//! mult_short = 2
//! ```
//!
//! Fields: `name`, `family` (`A`..`G2` or `BC`), `rank`, `mult_long`,
//! `mult_short` (defaults to `mult_long`), `mult_doubled` (BC only, where it
//! is required), `parameters` (table of integers, informational), and
//! `aliases` (list of alternative names). Anything else is rejected.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{
    killing_normalize, Family, LengthClass, MultiplicityProfile, RestrictedRootData, RootSystem,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub name: String,
    #[serde(with = "family_serde")]
    pub family: Family,
    pub rank: usize,
    pub mult_long: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult_short: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult_doubled: Option<u32>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub parameters: BTreeMap<String, i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub aliases: Vec<String>,
}

mod family_serde {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::rootsys::Family;

    pub fn serialize<S: Serializer>(f: &Family, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&f.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Family, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl CatalogEntry {
    fn new(name: &str, family: Family, rank: usize, mult_long: u32) -> Self {
        CatalogEntry {
            name: name.to_string(),
            family,
            rank,
            mult_long,
            mult_short: None,
            mult_doubled: None,
            parameters: BTreeMap::new(),
            aliases: Vec::new(),
        }
    }

    fn short(mut self, m: u32) -> Self {
        self.mult_short = Some(m);
        self
    }

    fn doubled(mut self, m: u32) -> Self {
        self.mult_doubled = Some(m);
        self
    }

    fn param(mut self, key: &str, value: i64) -> Self {
        self.parameters.insert(key.to_string(), value);
        self
    }

    fn alias(mut self, a: impl Into<String>) -> Self {
        self.aliases.push(a.into());
        self
    }

    pub fn mult_short_or_long(&self) -> u32 {
        self.mult_short.unwrap_or(self.mult_long)
    }

    /// Restricted root system label, e.g. `F4` or `BC2`.
    pub fn label(&self) -> String {
        self.family.label(self.rank)
    }

    /// Checks the entry and builds its multiplicity profile.
    pub fn validate(&self) -> Result<(RootSystem, MultiplicityProfile)> {
        if self.name.trim().is_empty() {
            return Err(Error::Schema("empty name".into()));
        }
        let rs = RootSystem::new(self.family, self.rank)?;
        let short = self.mult_short_or_long();
        if self.mult_long == 0 || short == 0 || self.mult_doubled == Some(0) {
            return Err(Error::ZeroMultiplicity);
        }
        let doubled = match (self.family, self.mult_doubled) {
            (Family::BC, Some(m)) => m,
            (Family::BC, None) => {
                return Err(Error::Schema(format!(
                    "{}: BC entries need mult_doubled",
                    self.name
                )))
            }
            (_, Some(_)) => {
                return Err(Error::Schema(format!(
                    "{}: mult_doubled is only meaningful for BC",
                    self.name
                )))
            }
            (_, None) => 0,
        };
        if self.family.is_simply_laced() && short != self.mult_long {
            return Err(Error::NotWeylInvariant(format!(
                "{}: {} has a single root length, but mult_short {} ≠ mult_long {}",
                self.name,
                self.label(),
                short,
                self.mult_long
            )));
        }
        let profile = MultiplicityProfile::from_classes(&rs, |class| match class.length {
            LengthClass::Long => self.mult_long,
            LengthClass::Short => short,
            LengthClass::Doubled => doubled,
        });
        profile.check_weyl_invariant(&rs)?;
        Ok((rs, profile))
    }

    pub fn to_root_data(&self) -> Result<RestrictedRootData> {
        let (rs, profile) = self.validate()?;
        killing_normalize(self.name.clone(), rs, profile)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CatalogFile {
    #[serde(default)]
    algebra: Vec<CatalogEntry>,
}

/// Parses and validates a single entry given as a TOML table.
pub fn load_entry(document: &str) -> Result<CatalogEntry> {
    let entry: CatalogEntry = toml::from_str(document).map_err(|e| schema_error(&e))?;
    entry.validate()?;
    Ok(entry)
}

/// Parses and validates a catalog file of `[[algebra]]` tables.
pub fn load_catalog(document: &str) -> Result<Vec<CatalogEntry>> {
    let file: CatalogFile = toml::from_str(document).map_err(|e| schema_error(&e))?;
    for e in &file.algebra {
        e.validate()?;
    }
    Ok(file.algebra)
}

fn schema_error(e: &toml::de::Error) -> Error {
    // A family name that fails to parse surfaces as a custom serde error.
    let msg = e.message().to_string();
    if msg.starts_with("unknown root-system family") {
        let name = msg.split('`').nth(1).unwrap_or_default().to_string();
        return Error::UnknownFamily(name);
    }
    Error::Schema(msg)
}

/// Largest `n` accepted for the parametric families `sl(n,·)` and `su*(2n)`.
pub const MAX_PARAMETRIC_RANK: usize = 24;

/// The built-in entries, in listing order.
pub fn builtin_entries() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for n in 2..=8usize {
        out.push(
            CatalogEntry::new(&format!("sl({n},R)"), Family::A, n - 1, 1)
                .param("n", n as i64)
                .alias(format!("sl({n})"))
                .alias(format!("sl{n}(R)")),
        );
    }
    for n in 2..=8usize {
        out.push(
            CatalogEntry::new(&format!("sl({n},C)"), Family::A, n - 1, 2)
                .param("n", n as i64)
                .alias(format!("sl{n}(C)")),
        );
    }
    for n in [3usize, 4] {
        out.push(
            CatalogEntry::new(&format!("su*({})", 2 * n), Family::A, n - 1, 4).param("n", n as i64),
        );
    }
    out.push(CatalogEntry::new("e6(-26)", Family::A, 2, 8));
    for n in 1..=3i64 {
        out.push(
            CatalogEntry::new(&format!("so(2,{})", n + 2), Family::B, 2, 1)
                .short(n as u32)
                .param("n", n),
        );
    }
    out.push(CatalogEntry::new("so(5,C)", Family::B, 2, 2));
    out.push(CatalogEntry::new("so(3,4)", Family::B, 3, 1));
    out.push(CatalogEntry::new("sp(3,R)", Family::C, 3, 1));
    out.push(CatalogEntry::new("so(4,4)", Family::D, 4, 1));
    out.push(
        CatalogEntry::new("su(1,2)", Family::BC, 1, 2)
            .short(2)
            .doubled(1)
            .alias("su(2,1)"),
    );
    out.push(
        CatalogEntry::new("su(2,3)", Family::BC, 2, 2)
            .short(2)
            .doubled(1)
            .alias("su(3,2)"),
    );
    out.push(CatalogEntry::new("g2(2)", Family::G2, 2, 1));
    out.push(CatalogEntry::new("g2^C", Family::G2, 2, 2));
    out.push(CatalogEntry::new("f4(4)", Family::F4, 4, 1));
    out.push(CatalogEntry::new("f4^C", Family::F4, 4, 2));
    out.push(CatalogEntry::new("e6(2)", Family::F4, 4, 1).short(2));
    out.push(CatalogEntry::new("e7(-5)", Family::F4, 4, 1).short(4));
    out.push(CatalogEntry::new("e8(-24)", Family::F4, 4, 1).short(8));
    out.push(CatalogEntry::new("e6(6)", Family::E6, 6, 1));
    out.push(CatalogEntry::new("e6^C", Family::E6, 6, 2));
    out.push(CatalogEntry::new("e7(7)", Family::E7, 7, 1));
    out.push(CatalogEntry::new("e7^C", Family::E7, 7, 2));
    out.push(CatalogEntry::new("e8(8)", Family::E8, 8, 1));
    out.push(CatalogEntry::new("e8^C", Family::E8, 8, 2));
    out
}

/// Canonical form used for name comparison: lowercase ASCII with `ℝ`, `ℂ`,
/// subscript digits and the minus sign folded, whitespace and `_` dropped.
pub fn normalize_name(name: &str) -> String {
    let mut s = String::new();
    for ch in name.chars() {
        match ch {
            'ℝ' => s.push('r'),
            'ℂ' => s.push('c'),
            '−' | '–' => s.push('-'),
            '₀'..='₉' => s.push(char::from_digit(ch as u32 - '₀' as u32, 10).unwrap()),
            '⁎' | '∗' => s.push('*'),
            c if c.is_whitespace() || c == '_' => {}
            c => s.extend(c.to_lowercase()),
        }
    }
    s
}

/// Entries constructed on demand from a parametric name:
/// `sl(n,R)`, `sl(n,C)`, `su*(2n)`, `so(2,q)`.
fn parametric(norm: &str) -> Option<CatalogEntry> {
    let num = |s: &str| s.parse::<usize>().ok();
    if let Some(rest) = norm.strip_prefix("sl") {
        // sl(n), sl(n,r), sl(n,c), sln(r), sln(c), sln
        let (n, field) =
            if let Some(inner) = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
                match inner.split_once(',') {
                    Some((n, f)) => (num(n)?, f.to_string()),
                    None => (num(inner)?, "r".to_string()),
                }
            } else if let Some(idx) = rest.find('(') {
                let f = rest[idx..].strip_prefix('(')?.strip_suffix(')')?;
                (num(&rest[..idx])?, f.to_string())
            } else {
                (num(rest)?, "r".to_string())
            };
        if !(2..=MAX_PARAMETRIC_RANK + 1).contains(&n) {
            return None;
        }
        let mult = match field.as_str() {
            "r" => 1,
            "c" => 2,
            _ => return None,
        };
        let field = if mult == 1 { "R" } else { "C" };
        return Some(
            CatalogEntry::new(&format!("sl({n},{field})"), Family::A, n - 1, mult)
                .param("n", n as i64),
        );
    }
    if let Some(inner) = norm.strip_prefix("su*(").and_then(|r| r.strip_suffix(')')) {
        let m = num(inner)?;
        if m < 4 || m % 2 != 0 || m / 2 > MAX_PARAMETRIC_RANK + 1 {
            return None;
        }
        return Some(
            CatalogEntry::new(&format!("su*({m})"), Family::A, m / 2 - 1, 4)
                .param("n", (m / 2) as i64),
        );
    }
    if let Some(inner) = norm.strip_prefix("so(2,").and_then(|r| r.strip_suffix(')')) {
        let q = num(inner)?;
        if !(3..=1000).contains(&q) {
            return None;
        }
        let n = q - 2;
        return Some(
            CatalogEntry::new(&format!("so(2,{q})"), Family::B, 2, 1)
                .short(n as u32)
                .param("n", n as i64),
        );
    }
    None
}

/// Built-in entries plus any user-supplied ones.
#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Default for Catalog {
    fn default() -> Self {
        Catalog {
            entries: builtin_entries(),
        }
    }
}

impl Catalog {
    pub fn builtin() -> Self {
        Self::default()
    }

    /// Adds entries, rejecting any name or alias already present.
    pub fn extend(&mut self, extra: Vec<CatalogEntry>) -> Result<()> {
        for e in extra {
            e.validate()?;
            for n in std::iter::once(&e.name).chain(&e.aliases) {
                if self.find(&normalize_name(n)).is_some() {
                    return Err(Error::DuplicateName(n.clone()));
                }
            }
            self.entries.push(e);
        }
        Ok(())
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    fn find(&self, norm: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| {
            normalize_name(&e.name) == norm || e.aliases.iter().any(|a| normalize_name(a) == norm)
        })
    }

    /// Looks an algebra up by name or alias; parametric families are
    /// instantiated on demand.
    pub fn lookup(&self, name: &str) -> Result<CatalogEntry> {
        let norm = normalize_name(name);
        if let Some(e) = self.find(&norm) {
            return Ok(e.clone());
        }
        if let Some(e) = parametric(&norm) {
            if let Some(known) = self.find(&normalize_name(&e.name)) {
                return Ok(known.clone());
            }
            return Ok(e);
        }
        Err(Error::UnknownAlgebra(name.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradation::make_gradation;

    fn dims(name: &str, coeffs: &[u32]) -> Vec<u64> {
        let rrd = Catalog::builtin()
            .lookup(name)
            .unwrap()
            .to_root_data()
            .unwrap();
        make_gradation(&rrd, coeffs).unwrap().dims()
    }

    #[test]
    fn table_dims() {
        assert_eq!(dims("e6(2)", &[0, 1, 0, 0]), vec![18, 9, 2]);
        assert_eq!(dims("e7(−5)", &[0, 0, 1, 0]), vec![24, 18, 8, 3]);
        assert_eq!(dims("f4^C", &[0, 1, 0, 0]), vec![24, 12, 4]);
        assert_eq!(dims("e8(-24)", &[0, 1, 0, 0]), vec![54, 27, 2]);
        assert_eq!(dims("e6(6)", &[0, 0, 0, 1, 0, 0]), vec![18, 9, 2]);
    }

    #[test]
    fn builtins_validate_and_are_unique() {
        let cat = Catalog::builtin();
        let mut seen = std::collections::BTreeSet::new();
        for e in cat.entries() {
            let rrd = e.to_root_data().unwrap();
            assert_eq!(rrd.killing_defect(), None, "{}", e.name);
            for n in std::iter::once(&e.name).chain(&e.aliases) {
                assert!(seen.insert(normalize_name(n)), "duplicate {n}");
            }
        }
        for name in ["g2(2)", "f4(4)", "e6(2)", "su*(8)", "so(5,C)"] {
            assert!(cat.entries().iter().any(|e| e.name == name));
        }
    }

    #[test]
    fn name_variants() {
        let cat = Catalog::builtin();
        for (alias, name) in [
            ("sl(4)", "sl(4,R)"),
            ("sl₄(ℝ)", "sl(4,R)"),
            ("sl_4(R)", "sl(4,R)"),
            ("SL3(C)", "sl(3,C)"),
            ("e7(−5)", "e7(-5)"),
            ("su(2,1)", "su(1,2)"),
            ("g2^ℂ", "g2^C"),
        ] {
            assert_eq!(cat.lookup(alias).unwrap().name, name, "{alias}");
        }
        let big = cat.lookup("sl(12,C)").unwrap();
        assert_eq!((big.rank, big.mult_long), (11, 2));
        let so = cat.lookup("so(2,9)").unwrap();
        assert_eq!((so.mult_long, so.mult_short), (1, Some(7)));
        assert_eq!(cat.lookup("su*(10)").unwrap().rank, 4);
        assert!(matches!(cat.lookup("e9"), Err(Error::UnknownAlgebra(_))));
        assert!(matches!(
            cat.lookup("su*(7)"),
            Err(Error::UnknownAlgebra(_))
        ));
    }

    #[test]
    fn loader_accepts_valid_entries() {
        let e = load_entry(
            "name = \"my-e6(2)\"\nfamily = \"F4\"\nrank = 4\nmult_long = 1\nmult_short = 2\n",
        )
        .unwrap();
        let rrd = e.to_root_data().unwrap();
        assert_eq!(
            make_gradation(&rrd, &[0, 1, 0, 0]).unwrap().dims(),
            vec![18, 9, 2]
        );
        let all = load_catalog(
            "[[algebra]]\nname = \"x\"\nfamily = \"BC\"\nrank = 2\nmult_long = 2\nmult_short = 4\nmult_doubled = 1\n\
             parameters = { p = 2, q = 4 }\n",
        )
        .unwrap();
        assert_eq!(all[0].parameters["q"], 4);
    }

    #[test]
    fn loader_rejects_bad_entries() {
        let base = "name = \"x\"\nrank = 4\n";
        let zero = format!("{base}family = \"F4\"\nmult_long = 0\n");
        assert!(matches!(load_entry(&zero), Err(Error::ZeroMultiplicity)));
        let uneven = format!("{base}family = \"D\"\nmult_long = 1\nmult_short = 2\n");
        assert!(matches!(
            load_entry(&uneven),
            Err(Error::NotWeylInvariant(_))
        ));
        let unknown = format!("{base}family = \"H4\"\nmult_long = 1\n");
        assert!(matches!(load_entry(&unknown), Err(Error::UnknownFamily(_))));
        let extra = format!("{base}family = \"F4\"\nmult_long = 1\ncolor = \"red\"\n");
        assert!(matches!(load_entry(&extra), Err(Error::Schema(_))));
        let missing = "name = \"x\"\nfamily = \"F4\"\nrank = 4\n";
        assert!(matches!(load_entry(missing), Err(Error::Schema(_))));
        let no_doubled = "name = \"x\"\nfamily = \"BC\"\nrank = 2\nmult_long = 1\n";
        assert!(matches!(load_entry(no_doubled), Err(Error::Schema(_))));
        let bad_rank = "name = \"x\"\nfamily = \"E6\"\nrank = 5\nmult_long = 1\n";
        assert!(matches!(
            load_entry(bad_rank),
            Err(Error::InvalidRank { .. })
        ));
    }

    #[test]
    fn duplicates_rejected() {
        let mut cat = Catalog::builtin();
        let dup = CatalogEntry::new("G2(2)", Family::G2, 2, 1);
        assert!(matches!(
            cat.extend(vec![dup]),
            Err(Error::DuplicateName(_))
        ));
        cat.extend(vec![CatalogEntry::new("fresh", Family::G2, 2, 3)])
            .unwrap();
        assert_eq!(cat.lookup("FRESH").unwrap().mult_long, 3);
    }
}
