//! Distribution tables: the multiset of statistic tuples over a class.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::class::ClassId;
use crate::enumerate::{for_each, prefixes, Limits};
use crate::error::{Error, Result};
use crate::stats::StatName;

/// Environment variable naming the table cache directory.
pub const CACHE_DIR_ENV: &str = "ASCENT_CACHE_DIR";

/// Counts of each statistic tuple over the members of `class` of length `n`.
/// The counts sum to the class cardinality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistTable {
    pub class: ClassId,
    pub n: usize,
    pub stats: Vec<StatName>,
    pub counts: BTreeMap<Vec<u32>, BigUint>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableJson {
    class: String,
    n: usize,
    stats: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    version: Option<String>,
    counts: Vec<(Vec<u32>, String)>,
}

impl DistTable {
    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    pub fn get(&self, tuple: &[u32]) -> BigUint {
        self.counts.get(tuple).cloned().unwrap_or_default()
    }

    /// Re-keys the table by `stats`, each of which must already be a
    /// column. Dropped columns are summed out.
    pub fn project(&self, stats: &[StatName]) -> Result<DistTable> {
        let cols: Vec<usize> = stats
            .iter()
            .map(|s| {
                self.stats
                    .iter()
                    .position(|t| t == s)
                    .ok_or_else(|| Error::Usage(format!("table has no column {s}")))
            })
            .collect::<Result<_>>()?;
        let mut counts: BTreeMap<Vec<u32>, BigUint> = BTreeMap::new();
        for (k, v) in &self.counts {
            *counts.entry(cols.iter().map(|&c| k[c]).collect()).or_default() += v;
        }
        Ok(DistTable {
            class: self.class,
            n: self.n,
            stats: stats.to_vec(),
            counts,
        })
    }

    /// Whether the two tables hold the same multiset of tuples, ignoring
    /// class and column names.
    pub fn same_counts(&self, other: &DistTable) -> bool {
        self.n == other.n && self.counts == other.counts
    }

    fn to_json_value(&self, version: Option<&str>) -> TableJson {
        TableJson {
            class: self.class.name().to_string(),
            n: self.n,
            stats: self.stats.iter().map(|s| s.name().to_string()).collect(),
            version: version.map(str::to_string),
            counts: self.counts.iter().map(|(k, v)| (k.clone(), v.to_string())).collect(),
        }
    }

    /// Serializes with counts as decimal strings.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value(None)).expect("table serializes")
    }

    /// Parses and validates a serialized table.
    pub fn from_json(text: &str) -> Result<DistTable> {
        Ok(Self::from_json_versioned(text)?.0)
    }

    fn from_json_versioned(text: &str) -> Result<(DistTable, Option<String>)> {
        let raw: TableJson = serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad table json: {e}")))?;
        let class: ClassId = raw.class.parse().map_err(|e| Error::Parse(format!("{e}")))?;
        if raw.n == 0 {
            return Err(Error::Parse("table length must be positive".into()));
        }
        let stats = raw
            .stats
            .iter()
            .map(|s| s.parse::<StatName>().map_err(|e| Error::Parse(format!("{e}"))))
            .collect::<Result<Vec<_>>>()?;
        if let Some(s) = stats.iter().find(|s| !s.applies_to(class)) {
            return Err(Error::Parse(format!("statistic {s} does not apply to {class}")));
        }
        let mut counts = BTreeMap::new();
        for (k, v) in raw.counts {
            if k.len() != stats.len() {
                return Err(Error::Parse(format!("tuple {k:?} does not have {} entries", stats.len())));
            }
            let c: BigUint = v.parse().map_err(|_| Error::Parse(format!("bad count {v:?}")))?;
            if c.is_zero() {
                return Err(Error::Parse(format!("zero count for {k:?}")));
            }
            if counts.insert(k.clone(), c).is_some() {
                return Err(Error::Parse(format!("duplicate tuple {k:?}")));
            }
        }
        Ok((
            DistTable {
                class,
                n: raw.n,
                stats,
                counts,
            },
            raw.version,
        ))
    }
}

/// Builds the table by exhaustive enumeration under the default limits.
pub fn dist_table(class: ClassId, n: usize, stats: &[StatName]) -> Result<DistTable> {
    dist_table_with(class, n, stats, &Limits::default())
}

/// Builds the table, splitting the enumeration across prefixes in parallel.
pub fn dist_table_with(class: ClassId, n: usize, stats: &[StatName], limits: &Limits) -> Result<DistTable> {
    limits.check(class, n)?;
    if let Some(s) = stats.iter().find(|s| !s.applies_to(class)) {
        return Err(Error::Usage(format!("statistic {s} does not apply to class {class}")));
    }
    let depth = n.min(4);
    let parts: Vec<BTreeMap<Vec<u32>, u64>> = prefixes(class, n, depth)
        .into_par_iter()
        .map(|prefix| {
            let mut local: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
            let mut failure = None;
            for_each(class, n, &prefix, limits, |s| {
                if failure.is_some() {
                    return;
                }
                match stats.iter().map(|st| st.eval(s)).collect::<Result<Vec<u32>>>() {
                    Ok(key) => *local.entry(key).or_insert(0) += 1,
                    Err(e) => failure = Some(e),
                }
            })?;
            match failure {
                Some(e) => Err(e),
                None => Ok(local),
            }
        })
        .collect::<Result<_>>()?;
    let mut counts: BTreeMap<Vec<u32>, BigUint> = BTreeMap::new();
    for part in parts {
        for (k, v) in part {
            *counts.entry(k).or_default() += v;
        }
    }
    Ok(DistTable {
        class,
        n,
        stats: stats.to_vec(),
        counts,
    })
}

/// Hash of the sources that determine table contents; cached tables from
/// other versions are ignored.
pub fn code_version() -> &'static str {
    static VERSION: OnceLock<String> = OnceLock::new();
    VERSION.get_or_init(|| {
        let mut h = Sha256::new();
        for src in [
            include_str!("class.rs"),
            include_str!("enumerate.rs"),
            include_str!("stats.rs"),
            include_str!("table.rs"),
        ] {
            h.update(src.as_bytes());
        }
        hex::encode(h.finalize())
    })
}

/// On-disk cache of tables, one JSON file per `(class, n, stats)`.
#[derive(Clone, Debug)]
pub struct TableCache {
    dir: PathBuf,
}

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        TableCache { dir: dir.into() }
    }

    /// Uses `$ASCENT_CACHE_DIR`, else a directory under the system temp dir.
    pub fn from_env() -> Self {
        match std::env::var_os(CACHE_DIR_ENV) {
            Some(d) if !d.is_empty() => Self::new(d),
            _ => Self::new(std::env::temp_dir().join("ascent-cache")),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, class: ClassId, n: usize, stats: &[StatName]) -> PathBuf {
        let names: Vec<&str> = stats.iter().map(|s| s.name()).collect();
        let mut h = Sha256::new();
        h.update(code_version().as_bytes());
        h.update(format!("{class}/{n}/{}", names.join(",")).as_bytes());
        let key = hex::encode(&h.finalize()[..8]);
        self.dir.join(format!("{class}-{n}-{}-{key}.json", names.join("_")))
    }

    /// The cached table, if present, readable and from this code version.
    pub fn load(&self, class: ClassId, n: usize, stats: &[StatName]) -> Option<DistTable> {
        let text = fs::read_to_string(self.path_for(class, n, stats)).ok()?;
        let (table, version) = DistTable::from_json_versioned(&text).ok()?;
        let matches = version.as_deref() == Some(code_version())
            && table.class == class
            && table.n == n
            && table.stats == stats;
        matches.then_some(table)
    }

    /// Writes through a temporary file and renames, so readers never see a
    /// partial table.
    pub fn store(&self, table: &DistTable) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path_for(table.class, table.n, &table.stats);
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, &table.to_json_value(Some(code_version())))?;
        tmp.flush()?;
        tmp.persist(&path).map_err(|e| Error::Io(e.error))?;
        Ok(path)
    }

    /// Cached table, computing and storing it on a miss. Storage failures
    /// are not fatal; the computed table is still returned.
    pub fn get_or_compute(&self, class: ClassId, n: usize, stats: &[StatName]) -> Result<DistTable> {
        if let Some(t) = self.load(class, n, stats) {
            return Ok(t);
        }
        let t = dist_table(class, n, stats)?;
        let _ = self.store(&t);
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(pairs: &[(&[u32], u32)]) -> BTreeMap<Vec<u32>, BigUint> {
        pairs.iter().map(|(k, v)| (k.to_vec(), BigUint::from(*v))).collect()
    }

    #[test]
    fn rep_max_on_length_three() {
        let expected = table(&[(&[0, 3], 1), (&[1, 1], 1), (&[1, 2], 2), (&[2, 1], 1)]);
        let stats = [StatName::Rep, StatName::Max];
        assert_eq!(dist_table(ClassId::Asc, 3, &stats).unwrap().counts, expected);
        assert_eq!(dist_table(ClassId::T21, 3, &stats).unwrap().counts, expected);
    }

    #[test]
    fn length_one_is_a_single_tuple() {
        let t = dist_table(ClassId::Asc, 1, &[StatName::Asc, StatName::Zero]).unwrap();
        assert_eq!(t.counts.len(), 1);
        assert_eq!(t.total(), BigUint::from(1u32));
    }

    #[test]
    fn inapplicable_statistic_is_a_usage_error() {
        assert!(matches!(dist_table(ClassId::Asc, 3, &[StatName::Mpair]), Err(Error::Usage(_))));
        assert!(matches!(dist_table(ClassId::PermAll, 3, &[StatName::Asc]), Err(Error::Usage(_))));
    }

    #[test]
    fn projection_sums_out_columns() {
        let t = dist_table(ClassId::Asc, 5, &[StatName::Asc, StatName::Rep, StatName::Max]).unwrap();
        let direct = dist_table(ClassId::Asc, 5, &[StatName::Max, StatName::Asc]).unwrap();
        assert_eq!(t.project(&[StatName::Max, StatName::Asc]).unwrap(), direct);
        assert_eq!(t.total(), BigUint::from(53u32));
    }

    #[test]
    fn json_round_trip() {
        let t = dist_table(ClassId::PermAvoidA, 4, &[StatName::Des, StatName::Lmax]).unwrap();
        assert_eq!(DistTable::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn json_validation() {
        let bad = [
            r#"{"class":"ASC","n":0,"stats":[],"counts":[]}"#,
            r#"{"class":"XYZ","n":1,"stats":[],"counts":[]}"#,
            r#"{"class":"ASC","n":2,"stats":["mpair"],"counts":[]}"#,
            r#"{"class":"ASC","n":2,"stats":["asc"],"counts":[[[0,1],"1"]]}"#,
            r#"{"class":"ASC","n":2,"stats":["asc"],"counts":[[[0],"x"]]}"#,
            r#"{"class":"ASC","n":2,"stats":["asc"],"counts":[[[0],"1"],[[0],"1"]]}"#,
        ];
        for b in bad {
            assert!(matches!(DistTable::from_json(b), Err(Error::Parse(_))), "{b}");
        }
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = TableCache::new(dir.path());
        let stats = [StatName::Zero, StatName::Max];
        assert!(cache.load(ClassId::Asc, 5, &stats).is_none());
        let fresh = cache.get_or_compute(ClassId::Asc, 5, &stats).unwrap();
        assert_eq!(cache.load(ClassId::Asc, 5, &stats), Some(fresh.clone()));
        assert_eq!(fresh, dist_table(ClassId::Asc, 5, &stats).unwrap());
    }
}
