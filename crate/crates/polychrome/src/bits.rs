//! Row-major adjacency bitsets shared by the search modules.

pub(crate) struct BitAdjacency {
    words: usize,
    rows: Vec<u64>,
}

impl BitAdjacency {
    pub fn new(n: usize, edges: impl Iterator<Item = (u32, u32)>) -> Self {
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        for (i, j) in edges {
            let (i, j) = (i as usize, j as usize);
            rows[i * words + j / 64] |= 1 << (j % 64);
            rows[j * words + i / 64] |= 1 << (i % 64);
        }
        BitAdjacency { words, rows }
    }

    pub fn words(&self) -> usize {
        self.words
    }

    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    pub fn contains(&self, v: usize, u: usize) -> bool {
        self.row(v)[u / 64] & (1 << (u % 64)) != 0
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.row(v).iter().map(|w| w.count_ones()).sum()
    }
}

/// Iterates the set bit positions of a word slice.
pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &bits)| {
        let mut bits = bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + b)
            }
        })
    })
}
