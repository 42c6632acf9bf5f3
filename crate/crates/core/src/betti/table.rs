use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::FieldSpec;

/// Graded Betti numbers `β_{i,j}` of an ideal, indexed so that `β_{0,j}`
/// counts the minimal generators of degree `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBettiTable {
    entries: BTreeMap<(usize, usize), u64>,
    field: FieldSpec,
}

impl GradedBettiTable {
    pub fn new(field: FieldSpec) -> Self {
        GradedBettiTable { entries: BTreeMap::new(), field }
    }

    pub fn from_entries(field: FieldSpec, entries: impl IntoIterator<Item = ((usize, usize), u64)>) -> Self {
        let mut t = Self::new(field);
        for ((i, j), v) in entries {
            t.add(i, j, v);
        }
        t
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Lookup with possibly negative indices (zero outside the table).
    pub fn get_signed(&self, i: i64, j: i64) -> u64 {
        match (usize::try_from(i), usize::try_from(j)) {
            (Ok(i), Ok(j)) => self.get(i, j),
            _ => 0,
        }
    }

    pub fn add(&mut self, i: usize, j: usize, value: u64) {
        if value > 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    /// Nonzero entries sorted by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries.range((i, 0)..=(i, usize::MAX)).map(|(_, v)| v).sum()
    }

    /// Same counts compared without regard to the coefficient field.
    pub fn same_numbers(&self, other: &Self) -> bool {
        self.entries == other.entries
    }

    /// Entries that differ between two tables: `((i, j), self, other)`.
    pub fn differences(&self, other: &Self) -> Vec<((usize, usize), u64, u64)> {
        let mut keys: Vec<(usize, usize)> = self.entries.keys().chain(other.entries.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .filter_map(|(i, j)| {
                let (a, b) = (self.get(i, j), other.get(i, j));
                (a != b).then_some(((i, j), a, b))
            })
            .collect()
    }

    /// Keeps only entries inside the given index windows.
    pub fn filtered(&self, i_range: Option<(usize, usize)>, j_range: Option<(usize, usize)>) -> Self {
        let inside = |r: Option<(usize, usize)>, x: usize| r.is_none_or(|(lo, hi)| (lo..=hi).contains(&x));
        GradedBettiTable {
            entries: self
                .entries
                .iter()
                .filter(|((i, j), _)| inside(i_range, *i) && inside(j_range, *j))
                .map(|(&k, &v)| (k, v))
                .collect(),
            field: self.field,
        }
    }

    pub fn to_document(&self, n: usize) -> TableDocument {
        TableDocument {
            n,
            field: self.field,
            indexing: "ideal".to_string(),
            entries: self.entries().map(|((i, j), value)| TableEntry { i, j, value }).collect(),
        }
    }

    pub fn to_json(&self, n: usize) -> String {
        serde_json::to_string_pretty(&self.to_document(n)).expect("table serializes")
    }

    /// Parses a JSON table; returns the board width it was recorded for.
    pub fn from_json(text: &str) -> Result<(usize, Self)> {
        let doc: TableDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        doc.into_table()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,value\n");
        for ((i, j), v) in self.entries() {
            out.push_str(&format!("{i},{j},{v}\n"));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub i: usize,
    pub j: usize,
    pub value: u64,
}

/// JSON form of a table: `{"n", "field", "indexing": "ideal", "entries"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub n: usize,
    pub field: FieldSpec,
    pub indexing: String,
    pub entries: Vec<TableEntry>,
}

impl TableDocument {
    pub fn into_table(self) -> Result<(usize, GradedBettiTable)> {
        if self.indexing != "ideal" {
            return Err(Error::Parse(format!("unsupported indexing {:?}", self.indexing)));
        }
        let table = GradedBettiTable::from_entries(self.field, self.entries.into_iter().map(|e| ((e.i, e.j), e.value)));
        Ok((self.n, table))
    }
}

/// The usual Betti diagram: columns `i`, rows `j − i`, dots for zeros.
impl fmt::Display for GradedBettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "(zero table over {})", self.field);
        }
        let max_i = self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let rows: Vec<usize> = {
            let mut r: Vec<usize> = self.entries.keys().map(|&(i, j)| j - i).collect();
            r.sort_unstable();
            r.dedup();
            (r[0]..=*r.last().expect("nonempty")).collect()
        };
        let mut cells: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend((0..=max_i).map(|i| i.to_string()));
        cells.push(header);
        let mut totals = vec!["total:".to_string()];
        totals.extend((0..=max_i).map(|i| self.total(i).to_string()));
        cells.push(totals);
        for &row in &rows {
            let mut line = vec![format!("{row}:")];
            line.extend((0..=max_i).map(|i| match self.get(i, i + row) {
                0 => ".".to_string(),
                v => v.to_string(),
            }));
            cells.push(line);
        }
        let widths: Vec<usize> =
            (0..=max_i + 1).map(|c| cells.iter().map(|line| line[c].chars().count()).max().unwrap_or(0)).collect();
        for line in &cells {
            let rendered: Vec<String> = line.iter().zip(&widths).map(|(cell, &w)| format!("{cell:>w$}")).collect();
            writeln!(f, "{}", rendered.join(" ").trim_end())?;
        }
        Ok(())
    }
}
