/// Max-priority queue over integer ranks whose extracted ranks never increase.
///
/// Pushing above the current cursor is a logic error and panics.
#[derive(Debug, Clone)]
pub struct MonotoneBuckets {
    buckets: Vec<Vec<usize>>,
    cursor: usize,
    extracted: Option<usize>,
}

impl MonotoneBuckets {
    pub fn new(ranks: usize) -> Self {
        MonotoneBuckets {
            buckets: vec![Vec::new(); ranks],
            cursor: ranks.saturating_sub(1),
            extracted: None,
        }
    }

    /// Highest rank an item may currently be pushed at.
    pub fn cursor(&self) -> usize {
        self.cursor
    }

    pub fn push(&mut self, rank: usize, item: usize) {
        assert!(
            rank <= self.cursor,
            "bucket push at rank {rank} above cursor {}",
            self.cursor
        );
        self.buckets[rank].push(item);
    }

    pub fn pop_max(&mut self) -> Option<(usize, usize)> {
        if self.buckets.is_empty() {
            return None;
        }
        loop {
            if let Some(item) = self.buckets[self.cursor].pop() {
                if let Some(prev) = self.extracted {
                    assert!(self.cursor <= prev, "bucket extraction went upward");
                }
                self.extracted = Some(self.cursor);
                return Some((self.cursor, item));
            }
            if self.cursor == 0 {
                return None;
            }
            self.cursor -= 1;
        }
    }
}
