//! Strict partitions (distinct positive parts) and their super-representation
//! type labels.

/// A strict partition: strictly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrictPartition {
    parts: Vec<usize>,
}

/// The two types of irreducible supermodules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IrrType {
    M,
    Q,
}

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] > w[1]) && parts.iter().all(|&p| p > 0),
            "parts must be strictly decreasing and positive"
        );
        StrictPartition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The parity delta = length mod 2 deciding the representation type.
    pub fn delta(&self) -> u8 {
        (self.parts.len() % 2) as u8
    }

    /// Type M when delta = 0, type Q when delta = 1.
    pub fn irr_type(&self) -> IrrType {
        if self.delta() == 0 {
            IrrType::M
        } else {
            IrrType::Q
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        map.insert(
            "parts".to_string(),
            serde_json::Value::Array(
                self.parts
                    .iter()
                    .map(|&p| serde_json::Value::Number(p.into()))
                    .collect(),
            ),
        );
        map.insert("delta".to_string(), serde_json::Value::Number(self.delta().into()));
        map.insert(
            "type".to_string(),
            serde_json::Value::String(
                match self.irr_type() {
                    IrrType::M => "M",
                    IrrType::Q => "Q",
                }
                .to_string(),
            ),
        );
        serde_json::Value::Object(map)
    }
}

impl std::fmt::Display for IrrType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IrrType::M => write!(f, "M"),
            IrrType::Q => write!(f, "Q"),
        }
    }
}

impl std::fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All strict partitions of r with at most `max_len` parts, in descending
/// lexicographic order (largest first part first).
///
/// `strict_partitions(r, None)` enumerates all strict partitions of r.
pub fn strict_partitions(r: usize, max_len: Option<usize>) -> Vec<StrictPartition> {
    let cap = max_len.unwrap_or(r);
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(rest: usize, max_part: usize, cap: usize, current: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
        if rest == 0 {
            out.push(StrictPartition::new(current.clone()));
            return;
        }
        if current.len() == cap {
            return;
        }
        // next part: strictly smaller than the previous, at most rest
        let hi = max_part.min(rest);
        for p in (1..=hi).rev() {
            current.push(p);
            rec(rest - p, p.saturating_sub(1), cap, current, out);
            current.pop();
        }
    }
    rec(r, r, cap, &mut current, &mut out);
    out
}
