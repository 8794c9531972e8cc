//! Lexicographic enumeration of dominating sets of a fixed size.
//!
//! Vertices are decided in increasing id order, include before exclude, so
//! leaves appear in lexicographic order of their sorted member lists.
//! Forced inclusions (a needy vertex with one live dominator) do not
//! disturb that order. Every node is checked for feasibility with the
//! exact cover search, so no subtree without a solution is explored.

use std::ops::ControlFlow;

use super::closed_neighborhoods;
use super::cover::{CoverSearch, OutOfBudget};
use crate::bits::Bits;
use crate::graph::{LabeledGraph, VertexSet};

pub(super) fn run<F>(g: &LabeledGraph, size: usize, budget: u64, mut visit: F) -> Result<ControlFlow<()>, OutOfBudget>
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    let closed = closed_neighborhoods(g);
    let mut walker = Walker {
        search: CoverSearch::new(&closed, budget),
        n: g.n(),
        chosen: Vec::with_capacity(size),
        visit: &mut visit,
    };
    let all = Bits::full(g.n());
    walker.descend(all.clone(), all, size)
}

struct Walker<'a, F> {
    search: CoverSearch<'a>,
    n: usize,
    chosen: Vec<usize>,
    visit: &'a mut F,
}

impl<F> Walker<'_, F>
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    fn descend(&mut self, need: Bits, undecided: Bits, k: usize) -> Result<ControlFlow<()>, OutOfBudget> {
        let mark = self.chosen.len();
        let flow = self.descend_inner(need, undecided, k);
        self.chosen.truncate(mark);
        flow
    }

    fn descend_inner(
        &mut self,
        mut need: Bits,
        mut undecided: Bits,
        mut k: usize,
    ) -> Result<ControlFlow<()>, OutOfBudget> {
        self.search.tick()?;
        let prune = Ok(ControlFlow::Continue(()));

        // forced inclusions
        loop {
            let mut forced = None;
            for u in need.iter() {
                match self.search.closed(u).and_count(&undecided) {
                    0 => return prune,
                    1 => {
                        forced = self.search.closed(u).and(&undecided).first();
                        break;
                    }
                    _ => {}
                }
            }
            let Some(a) = forced else { break };
            if k == 0 {
                return prune;
            }
            k -= 1;
            self.chosen.push(a);
            undecided.remove(a);
            need.difference_with(self.search.closed(a));
        }

        if need.is_empty() {
            // A smaller dominating set cannot exist when `size` is minimum;
            // for larger sizes only exact-size leaves are reported.
            if k == 0 {
                let mut members = self.chosen.clone();
                members.sort_unstable();
                let set = VertexSet::from_members(self.n, members).expect("chosen are vertices");
                return Ok((self.visit)(&set));
            }
            return self.pad(undecided, k);
        }
        if k == 0 || self.search.solve(need.clone(), undecided.clone(), k)?.is_none() {
            return prune;
        }

        let t = undecided.first().expect("feasible instance has candidates");
        undecided.remove(t);
        let mut with_t = need.clone();
        with_t.difference_with(self.search.closed(t));
        self.chosen.push(t);
        if self.descend(with_t, undecided.clone(), k - 1)?.is_break() {
            return Ok(ControlFlow::Break(()));
        }
        self.chosen.pop();
        self.descend(need, undecided, k)
    }

    /// Everything is dominated but `k` more vertices are required: emit
    /// every way of adding `k` undecided vertices, in lexicographic order.
    fn pad(&mut self, undecided: Bits, k: usize) -> Result<ControlFlow<()>, OutOfBudget> {
        let pool: Vec<usize> = undecided.iter().collect();
        let mut idx: Vec<usize> = (0..k).collect();
        if k > pool.len() {
            return Ok(ControlFlow::Continue(()));
        }
        loop {
            self.search.tick()?;
            let mut members = self.chosen.clone();
            members.extend(idx.iter().map(|&i| pool[i]));
            members.sort_unstable();
            let set = VertexSet::from_members(self.n, members).expect("chosen are vertices");
            if (self.visit)(&set).is_break() {
                return Ok(ControlFlow::Break(()));
            }
            // next k-combination of pool indices
            let Some(i) = (0..k).rev().find(|&i| idx[i] != i + pool.len() - k) else {
                return Ok(ControlFlow::Continue(()));
            };
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
}
