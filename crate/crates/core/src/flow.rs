//! Dinic's algorithm specialized to unit capacities.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
pub struct UnitFlow {
    head: Vec<usize>,
    cap: Vec<u8>,
    adj: Vec<Vec<usize>>,
}

impl UnitFlow {
    pub fn new(vertices: usize) -> Self {
        UnitFlow {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); vertices],
        }
    }

    /// Adds a unit-capacity arc; its residual twin is the next edge id.
    pub fn add_arc(&mut self, from: usize, to: usize) {
        let id = self.head.len();
        self.head.push(to);
        self.cap.push(1);
        self.adj[from].push(id);
        self.head.push(from);
        self.cap.push(0);
        self.adj[to].push(id + 1);
    }

    /// Maximum number of arc-disjoint `s`-`t` paths, capped at `limit`.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let n = self.adj.len();
        let mut flow = 0;
        let mut level = vec![usize::MAX; n];
        let mut next = vec![0usize; n];
        while flow < limit && self.levels(s, t, &mut level) {
            next.iter_mut().for_each(|x| *x = 0);
            // blocking flow: one augmenting path per iteration
            while flow < limit {
                match self.augment(s, t, &level, &mut next) {
                    true => flow += 1,
                    false => break,
                }
            }
        }
        flow
    }

    fn levels(&self, s: usize, t: usize, level: &mut [usize]) -> bool {
        level.iter_mut().for_each(|l| *l = usize::MAX);
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.head[e];
                if self.cap[e] > 0 && level[v] == usize::MAX {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        level[t] != usize::MAX
    }

    /// Finds one path in the level graph with an explicit stack and
    /// advances the per-vertex arc pointers past dead ends.
    fn augment(&mut self, s: usize, t: usize, level: &[usize], next: &mut [usize]) -> bool {
        let mut path: Vec<usize> = Vec::new();
        let mut u = s;
        loop {
            if u == t {
                for &e in &path {
                    self.cap[e] -= 1;
                    self.cap[e ^ 1] += 1;
                }
                return true;
            }
            let mut advanced = false;
            while next[u] < self.adj[u].len() {
                let e = self.adj[u][next[u]];
                let v = self.head[e];
                if self.cap[e] > 0 && level[v] == level[u] + 1 {
                    path.push(e);
                    u = v;
                    advanced = true;
                    break;
                }
                next[u] += 1;
            }
            if !advanced {
                // dead end: retreat and skip the arc that led here
                match path.pop() {
                    None => return false,
                    Some(e) => {
                        u = self.head[e ^ 1];
                        next[u] += 1;
                    }
                }
            }
        }
    }
}
