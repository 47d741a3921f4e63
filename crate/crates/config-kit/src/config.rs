use std::fmt;

use crate::error::ConfigError;

/// (a_c, b_d): a points each on c blocks, b blocks each with d points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ConfigType {
    pub points: usize,
    pub point_degree: usize,
    pub blocks: usize,
    pub block_size: usize,
}

impl ConfigType {
    pub const fn new(points: usize, point_degree: usize, blocks: usize, block_size: usize) -> Self {
        ConfigType { points, point_degree, blocks, block_size }
    }
}

impl fmt::Display for ConfigType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.points == self.blocks && self.point_degree == self.block_size {
            write!(f, "({}_{})", self.points, self.point_degree)
        } else {
            write!(f, "({}_{},{}_{})", self.points, self.point_degree, self.blocks, self.block_size)
        }
    }
}

/// Incidence structure with labelled points and blocks. Blocks are stored as
/// sorted point index lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractConfig {
    name: String,
    points: Vec<String>,
    blocks: Vec<String>,
    incidence: Vec<Vec<usize>>,
    ty: ConfigType,
}

impl AbstractConfig {
    pub fn new(
        name: impl Into<String>,
        points: Vec<String>,
        blocks: Vec<String>,
        mut incidence: Vec<Vec<usize>>,
    ) -> Result<Self, ConfigError> {
        let name = name.into();
        let bad = |what: String| ConfigError::Irregular { name: name.clone(), what };
        if incidence.len() != blocks.len() {
            return Err(bad(format!("{} blocks but {} incidence rows", blocks.len(), incidence.len())));
        }
        for (b, row) in incidence.iter_mut().enumerate() {
            row.sort_unstable();
            if row.windows(2).any(|w| w[0] == w[1]) {
                return Err(bad(format!("block {} repeats a point", blocks[b])));
            }
            if let Some(&p) = row.iter().find(|&&p| p >= points.len()) {
                return Err(bad(format!("block {} names point index {p}", blocks[b])));
            }
        }
        let mut degree = vec![0usize; points.len()];
        for row in &incidence {
            for &p in row {
                degree[p] += 1;
            }
        }
        let d = incidence.first().map_or(0, Vec::len);
        if let Some(b) = incidence.iter().position(|r| r.len() != d) {
            return Err(bad(format!("block {} has {} points, expected {d}", blocks[b], incidence[b].len())));
        }
        let c = degree.first().copied().unwrap_or(0);
        if let Some(p) = degree.iter().position(|&k| k != c) {
            return Err(bad(format!("point {} lies on {} blocks, expected {c}", points[p], degree[p])));
        }
        let ty = ConfigType::new(points.len(), c, blocks.len(), d);
        Ok(AbstractConfig { name, points, blocks, incidence, ty })
    }

    /// Builds from block contents given by point labels.
    pub fn from_labelled_blocks(
        name: impl Into<String>,
        points: Vec<String>,
        blocks: Vec<(String, Vec<String>)>,
    ) -> Result<Self, ConfigError> {
        let name = name.into();
        let index = |l: &str| {
            points.iter().position(|p| p == l).ok_or_else(|| ConfigError::Irregular {
                name: name.clone(),
                what: format!("unknown point {l}"),
            })
        };
        let mut labels = Vec::new();
        let mut inc = Vec::new();
        for (b, pts) in blocks {
            inc.push(pts.iter().map(|p| index(p)).collect::<Result<Vec<_>, _>>()?);
            labels.push(b);
        }
        AbstractConfig::new(name, points, labels, inc)
    }

    pub fn expect_type(self, ty: ConfigType) -> Result<Self, ConfigError> {
        if self.ty == ty {
            Ok(self)
        } else {
            Err(ConfigError::TypeMismatch(self.ty.to_string(), ty.to_string()))
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn config_type(&self) -> ConfigType {
        self.ty
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn blocks(&self) -> &[String] {
        &self.blocks
    }

    pub fn block(&self, b: usize) -> &[usize] {
        &self.incidence[b]
    }

    pub fn incidence(&self) -> &[Vec<usize>] {
        &self.incidence
    }

    pub fn incident(&self, p: usize, b: usize) -> bool {
        self.incidence[b].binary_search(&p).is_ok()
    }

    pub fn point_index(&self, label: &str) -> Option<usize> {
        self.points.iter().position(|p| p == label)
    }

    pub fn block_index(&self, label: &str) -> Option<usize> {
        self.blocks.iter().position(|b| b == label)
    }

    pub fn blocks_through(&self, p: usize) -> Vec<usize> {
        (0..self.blocks.len()).filter(|&b| self.incident(p, b)).collect()
    }

    /// Points and blocks exchanged.
    pub fn dual(&self) -> AbstractConfig {
        let inc = (0..self.points.len()).map(|p| self.blocks_through(p)).collect();
        AbstractConfig::new(format!("{} (dual)", self.name), self.blocks.clone(), self.points.clone(), inc)
            .expect("dual of a regular configuration is regular")
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

#[cfg(test)]
pub(crate) fn labels<I: IntoIterator<Item = S>, S: ToString>(it: I) -> Vec<String> {
    it.into_iter().map(|s| s.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fano_plane_type() {
        let lines = [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];
        let c = AbstractConfig::new(
            "fano",
            labels(1..=7),
            labels(1..=7),
            lines.iter().map(|l| l.to_vec()).collect(),
        )
        .unwrap();
        assert_eq!(c.config_type().to_string(), "(7_3)");
        assert_eq!(c.dual().config_type(), c.config_type());
    }

    #[test]
    fn irregular_rejected() {
        let r = AbstractConfig::new("x", labels(0..3), labels(0..2), vec![vec![0, 1], vec![0, 2]]);
        assert!(matches!(r, Err(ConfigError::Irregular { .. })));
        let r = AbstractConfig::new("x", labels(0..3), labels(0..2), vec![vec![0, 1], vec![2]]);
        assert!(matches!(r, Err(ConfigError::Irregular { .. })));
    }
}
