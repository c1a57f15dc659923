use serde::{Deserialize, Serialize};

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl std::fmt::Debug for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Self {
        let parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "parts must be weakly decreasing");
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// i-th part, 1-based, zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Prefix sum of the first i parts.
    pub fn prefix(&self, i: usize) -> usize {
        self.parts.iter().take(i).sum()
    }
}

/// All partitions of n, in reverse lexicographic order ((n) first).
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::new(cur.clone()));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// An ordered pair of partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl std::fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?},{:?})", self.first, self.second)
    }
}

impl Bipartition {
    pub fn new(first: Vec<usize>, second: Vec<usize>) -> Self {
        Bipartition { first: Partition::new(first), second: Partition::new(second) }
    }

    pub fn from_parts(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }

    /// Componentwise conjugate.
    pub fn conjugate(&self) -> Bipartition {
        Bipartition { first: self.first.conjugate(), second: self.second.conjugate() }
    }

    /// Swapped components (nu^o).
    pub fn swapped(&self) -> Bipartition {
        Bipartition { first: self.second.clone(), second: self.first.clone() }
    }
}

/// All bipartitions of n: first component of size a for a = n down to 0,
/// components in reverse lexicographic order.
pub fn enumerate_bipartitions(n: usize) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        for p in enumerate_partitions(a) {
            for q in enumerate_partitions(n - a) {
                out.push(Bipartition::from_parts(p.clone(), q));
            }
        }
    }
    out
}

/// Dominance order on bipartitions of equal size: lambda <= mu iff for
/// each component level, all prefix sums (counting the full first
/// component before the second) satisfy the inequality.
pub fn dominance_leq(lambda: &Bipartition, mu: &Bipartition) -> bool {
    assert_eq!(lambda.size(), mu.size());
    let rows = lambda
        .first
        .len()
        .max(mu.first.len())
        .max(lambda.second.len())
        .max(mu.second.len())
        + 1;
    for i in 1..=rows {
        if lambda.first.prefix(i) > mu.first.prefix(i) {
            return false;
        }
        if lambda.first.size() + lambda.second.prefix(i) > mu.first.size() + mu.second.prefix(i) {
            return false;
        }
    }
    true
}
