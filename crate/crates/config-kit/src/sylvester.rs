use std::collections::BTreeSet;

use crate::config::AbstractConfig;
use crate::error::ConfigError;

/// Pair {i,j} of letters 1..6 with i < j.
pub type Duad = (u8, u8);
/// Three disjoint duads, sorted.
pub type Syntheme = [Duad; 3];
/// Five synthemes covering all fifteen duads, sorted.
pub type Total = [Syntheme; 5];

pub fn duads() -> Vec<Duad> {
    (1..=6).flat_map(|i| (i + 1..=6).map(move |j| (i, j))).collect()
}

pub fn synthemes() -> Vec<Syntheme> {
    let mut out = Vec::new();
    for b in 2..=6 {
        let rest: Vec<u8> = (2..=6).filter(|&k| k != b).collect();
        let first = rest[0];
        for &c in &rest[1..] {
            let last: Vec<u8> = rest.iter().copied().filter(|&k| k != first && k != c).collect();
            out.push([(1, b), (first, c), (last[0], last[1])]);
        }
    }
    out.sort();
    out
}

pub fn fmt_duad(d: &Duad) -> String {
    format!("{}{}", d.0, d.1)
}

pub fn fmt_syntheme(s: &Syntheme) -> String {
    s.iter().map(fmt_duad).collect::<Vec<_>>().join(".")
}

pub fn parse_syntheme(s: &str) -> Option<Syntheme> {
    let mut ds: Vec<Duad> = s
        .split('.')
        .map(|d| {
            let b = d.as_bytes();
            (b.len() == 2).then(|| {
                let (x, y) = (b[0] - b'0', b[1] - b'0');
                (x.min(y), x.max(y))
            })
        })
        .collect::<Option<_>>()?;
    ds.sort();
    let letters: BTreeSet<u8> = ds.iter().flat_map(|&(a, b)| [a, b]).collect();
    (ds.len() == 3 && letters.len() == 6 && letters.iter().all(|&l| (1..=6).contains(&l))).then(|| [ds[0], ds[1], ds[2]])
}

pub fn totals() -> Vec<Total> {
    let syn = synthemes();
    let mut out = Vec::new();
    let disjoint = |a: &Syntheme, b: &Syntheme| a.iter().all(|d| !b.contains(d));
    let n = syn.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    for m in l + 1..n {
                        let t = [syn[i], syn[j], syn[k], syn[l], syn[m]];
                        if (0..5).all(|x| (x + 1..5).all(|y| disjoint(&t[x], &t[y]))) {
                            out.push(t);
                        }
                    }
                }
            }
        }
    }
    out
}

/// The printed table of totals: entry (i,j) is the syntheme shared by T_i and T_j.
pub const PRINTED_TOTALS_TABLE: [[&str; 6]; 6] = [
    ["", "14.25.36", "16.24.35", "13.26.45", "12.34.56", "15.23.46"],
    ["14.25.36", "", "15.26.34", "12.35.46", "16.23.45", "13.24.56"],
    ["16.24.35", "15.26.34", "", "14.23.56", "13.25.46", "12.36.45"],
    ["13.26.45", "12.35.46", "14.23.56", "", "15.24.36", "16.25.34"],
    ["12.34.56", "16.23.45", "13.25.46", "15.24.36", "", "14.26.35"],
    ["15.23.46", "13.24.56", "12.36.45", "16.25.34", "14.26.35", ""],
];

#[derive(Clone, Debug)]
pub struct DuadSynthemeSystem {
    pub duads: Vec<Duad>,
    pub synthemes: Vec<Syntheme>,
    /// T_1..T_6, numbered as in the printed table.
    pub totals: Vec<Total>,
    pub table: [[String; 6]; 6],
    pub config: AbstractConfig,
}

impl DuadSynthemeSystem {
    /// Rows of the table with a leading header row, tab separated.
    pub fn render_table(&self) -> String {
        let mut s = String::from("\tT1\tT2\tT3\tT4\tT5\tT6\n");
        for (i, row) in self.table.iter().enumerate() {
            s.push_str(&format!("T{}\t{}\n", i + 1, row.join("\t")));
        }
        s
    }

    pub fn total_index(&self, t: &Total) -> Option<usize> {
        self.totals.iter().position(|x| x == t)
    }
}

pub fn render_printed_table() -> String {
    let mut s = String::from("\tT1\tT2\tT3\tT4\tT5\tT6\n");
    for (i, row) in PRINTED_TOTALS_TABLE.iter().enumerate() {
        s.push_str(&format!("T{}\t{}\n", i + 1, row.join("\t")));
    }
    s
}

/// Builds duads, synthemes and totals from scratch, numbers the totals by
/// matching the rows of the printed table, and recomputes every table entry as
/// the intersection of two totals.
pub fn duad_syntheme_system() -> Result<DuadSynthemeSystem, ConfigError> {
    let duads = duads();
    let synthemes = synthemes();
    let computed = totals();
    if computed.len() != 6 {
        return Err(ConfigError::Table(format!("{} totals", computed.len())));
    }
    for t in &computed {
        let covered: BTreeSet<Duad> = t.iter().flatten().copied().collect();
        if covered.len() != 15 {
            return Err(ConfigError::Table("a total misses a duad".into()));
        }
    }
    let mut ordered = Vec::new();
    for (i, row) in PRINTED_TOTALS_TABLE.iter().enumerate() {
        let mut want: Vec<Syntheme> = row
            .iter()
            .filter(|e| !e.is_empty())
            .map(|e| parse_syntheme(e).ok_or_else(|| ConfigError::Table(format!("bad entry {e}"))))
            .collect::<Result<_, _>>()?;
        want.sort();
        let t = computed
            .iter()
            .find(|t| t.as_slice() == want.as_slice())
            .ok_or_else(|| ConfigError::Table(format!("row T{} is not a total", i + 1)))?;
        ordered.push(*t);
    }
    let mut table: [[String; 6]; 6] = Default::default();
    for i in 0..6 {
        for j in 0..6 {
            if i == j {
                continue;
            }
            let common: Vec<&Syntheme> = ordered[i].iter().filter(|s| ordered[j].contains(s)).collect();
            if common.len() != 1 {
                return Err(ConfigError::Table(format!("T{} and T{} share {} synthemes", i + 1, j + 1, common.len())));
            }
            table[i][j] = fmt_syntheme(common[0]);
        }
    }
    let config = AbstractConfig::new(
        "duads/synthemes",
        duads.iter().map(fmt_duad).collect(),
        synthemes.iter().map(fmt_syntheme).collect(),
        synthemes.iter().map(|s| s.iter().map(|d| duads.iter().position(|x| x == d).unwrap()).collect()).collect(),
    )?;
    Ok(DuadSynthemeSystem { duads, synthemes, totals: ordered, table, config })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(duads().len(), 15);
        assert_eq!(synthemes().len(), 15);
        assert_eq!(totals().len(), 6);
    }

    #[test]
    fn printed_table_reproduced() {
        let s = duad_syntheme_system().unwrap();
        assert_eq!(s.table[0][1], "14.25.36");
        assert_eq!(s.render_table(), render_printed_table());
        assert_eq!(s.config.config_type().to_string(), "(15_3)");
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(s.table[i][j], s.table[j][i]);
            }
        }
    }

    #[test]
    fn syntheme_parsing() {
        assert_eq!(parse_syntheme("56.12.43"), parse_syntheme("12.34.56"));
        assert_eq!(parse_syntheme("12.13.45"), None);
    }
}
