use super::LabeledGraph;

/// Returns a claw `[center, a, b, c]` if one exists: a vertex with three
/// pairwise non-adjacent neighbors. Centers and leaves are reported in
/// lowest-id order.
pub fn find_claw(g: &LabeledGraph) -> Option<[usize; 4]> {
    for v in 0..g.n() {
        let ns = g.neighbors(v);
        if ns.len() < 3 {
            continue;
        }
        for (i, &a) in ns.iter().enumerate() {
            for (j, &b) in ns.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &c in &ns[j + 1..] {
                    if !g.has_edge(a, c) && !g.has_edge(b, c) {
                        return Some([v, a, b, c]);
                    }
                }
            }
        }
    }
    None
}

pub fn is_claw_free(g: &LabeledGraph) -> bool {
    find_claw(g).is_none()
}

/// Outcome of an induced-path search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathSearch {
    /// No induced path on `k` vertices exists.
    Free,
    /// An induced path on `k` vertices, in path order.
    Found(Vec<usize>),
    /// The search tree grew past the node budget; nothing is known.
    BudgetExceeded,
}

/// Decides whether `g` is `P_k`-free by depth-first extension of induced
/// paths. A vertex may extend the path only if its sole neighbor on the
/// path is the current endpoint.
///
/// `budget` bounds the number of extension steps. Exceeding it yields
/// [`PathSearch::BudgetExceeded`], never a guess.
pub fn is_pk_free(g: &LabeledGraph, k: usize, budget: u64) -> PathSearch {
    assert!(k >= 1, "k must be positive");
    if g.n() < k {
        return PathSearch::Free;
    }
    if k == 1 {
        return PathSearch::Found(vec![0]);
    }
    let mut search = PathDfs {
        g,
        k,
        budget,
        steps: 0,
        path: Vec::with_capacity(k),
        on_path: vec![false; g.n()],
        touch: vec![0; g.n()],
    };
    for start in 0..g.n() {
        match search.grow_from(start) {
            Some(true) => return PathSearch::Found(search.path),
            Some(false) => {}
            None => return PathSearch::BudgetExceeded,
        }
    }
    PathSearch::Free
}

struct PathDfs<'a> {
    g: &'a LabeledGraph,
    k: usize,
    budget: u64,
    steps: u64,
    path: Vec<usize>,
    on_path: Vec<bool>,
    // number of path vertices adjacent to each vertex
    touch: Vec<u32>,
}

impl PathDfs<'_> {
    fn push(&mut self, v: usize) {
        self.path.push(v);
        self.on_path[v] = true;
        for &w in self.g.neighbors(v) {
            self.touch[w] += 1;
        }
    }

    fn pop(&mut self) {
        let v = self.path.pop().expect("non-empty path");
        self.on_path[v] = false;
        for &w in self.g.neighbors(v) {
            self.touch[w] -= 1;
        }
    }

    /// `Some(true)` leaves the witness in `self.path`.
    fn grow_from(&mut self, start: usize) -> Option<bool> {
        self.push(start);
        let found = self.extend()?;
        if !found {
            self.pop();
        }
        Some(found)
    }

    fn extend(&mut self) -> Option<bool> {
        self.steps += 1;
        if self.steps > self.budget {
            return None;
        }
        if self.path.len() == self.k {
            return Some(true);
        }
        let last = *self.path.last().expect("non-empty path");
        let g = self.g;
        for &w in g.neighbors(last) {
            if self.on_path[w] || self.touch[w] != 1 {
                continue;
            }
            // Each path is found from both ends; keep only the direction
            // that starts at the smaller endpoint.
            if self.path.len() + 1 == self.k && w < self.path[0] {
                continue;
            }
            self.push(w);
            if self.extend()? {
                return Some(true);
            }
            self.pop();
        }
        Some(false)
    }
}
