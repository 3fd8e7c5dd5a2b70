use std::fmt;

/// Ordered tensor factors. Basis vector `e_{i1}⊗…⊗e_{ik}` has mixed-radix
/// index with the leftmost factor most significant. The empty shape is the
/// ground field `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(factors: Vec<usize>) -> Self {
        Shape(factors)
    }

    /// The ground field, dimension 1.
    pub fn scalar() -> Self {
        Shape(Vec::new())
    }

    pub fn flat(dim: usize) -> Self {
        Shape(vec![dim])
    }

    pub fn factors(&self) -> &[usize] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.iter().product()
    }

    pub fn concat(&self, other: &Shape) -> Shape {
        let mut f = self.0.clone();
        f.extend_from_slice(&other.0);
        Shape(f)
    }

    pub fn encode(&self, multi: &[usize]) -> usize {
        assert_eq!(multi.len(), self.0.len());
        multi.iter().zip(&self.0).fold(0, |acc, (&i, &d)| {
            debug_assert!(i < d);
            acc * d + i
        })
    }

    pub fn decode(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.0.len()];
        for (slot, &d) in out.iter_mut().zip(&self.0).rev() {
            *slot = index % d;
            index /= d;
        }
        out
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "k");
        }
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join("⊗"))
    }
}
