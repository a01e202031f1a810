use alloc::vec;
use alloc::vec::Vec;

use crate::{BoundKind, ElementSet, Error};

/// Index of a lattice element, always below the element count of the
/// lattice it refers to.
pub type ElementId = usize;

/// Construction refuses lattices larger than this; meet and join tables
/// take O(n^2) memory.
pub const MAX_ELEMENTS: usize = 4096;

/// A finite lattice: a validated partial order together with precomputed
/// meet and join tables and its cover (Hasse) relation.
///
/// Elements are dense indices `0..n`. Bottom and top are computed, not
/// positional: input orders need not be topologically sorted.
#[derive(Clone, PartialEq, Eq)]
pub struct Lattice {
    n: usize,
    /// `below[a]` = the principal ideal of `a`, including `a`.
    below: Vec<ElementSet>,
    /// `above[a]` = the principal filter of `a`, including `a`.
    above: Vec<ElementSet>,
    meet_table: Vec<u16>,
    join_table: Vec<u16>,
    covers: Vec<(ElementId, ElementId)>,
    lower_covers: Vec<Vec<ElementId>>,
    upper_covers: Vec<Vec<ElementId>>,
    /// Longest cover-path length from bottom, per element.
    height: Vec<usize>,
    bottom: ElementId,
    top: ElementId,
}

impl Lattice {
    /// Builds a lattice from an element count and cover pairs `(lower, upper)`.
    ///
    /// The order is the reflexive-transitive closure of the pairs; redundant
    /// input pairs are allowed and reduced away. Fails with `CycleDetected`
    /// if the pairs are not acyclic, and with `NotALattice` naming an
    /// offending pair if some pair of elements lacks a unique meet or join.
    pub fn from_covers(n: usize, cover_pairs: &[(ElementId, ElementId)]) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::Empty);
        }
        if n > MAX_ELEMENTS {
            return Err(Error::Overbudget {
                what: "lattice elements",
                limit: MAX_ELEMENTS,
                actual: n,
            });
        }
        for &(a, b) in cover_pairs {
            for e in [a, b] {
                if e >= n {
                    return Err(Error::ElementOutOfRange {
                        element: e,
                        count: n,
                    });
                }
            }
            if a == b {
                return Err(Error::CycleDetected { lower: a, upper: b });
            }
        }

        let mut succ: Vec<Vec<ElementId>> = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(a, b) in cover_pairs {
            if !succ[a].contains(&b) {
                succ[a].push(b);
                indegree[b] += 1;
            }
        }

        // Kahn's algorithm; leftover nodes witness a cycle.
        let mut topo: Vec<ElementId> = Vec::with_capacity(n);
        let mut queue: Vec<ElementId> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut remaining = indegree.clone();
        while let Some(v) = queue.pop() {
            topo.push(v);
            for &w in &succ[v] {
                remaining[w] -= 1;
                if remaining[w] == 0 {
                    queue.push(w);
                }
            }
        }
        if topo.len() < n {
            let on_cycle: Vec<ElementId> = (0..n).filter(|&v| remaining[v] > 0).collect();
            let a = on_cycle[0];
            let b = succ[a]
                .iter()
                .copied()
                .find(|w| remaining[*w] > 0)
                .unwrap_or(a);
            return Err(Error::CycleDetected { lower: a, upper: b });
        }

        // Reflexive-transitive closure along the topological order.
        let mut below: Vec<ElementSet> = (0..n).map(|v| ElementSet::singleton(n, v)).collect();
        for &v in &topo {
            for w in 0..succ[v].len() {
                let w = succ[v][w];
                let add = below[v].clone();
                below[w].union_with(&add);
            }
        }
        let mut above: Vec<ElementSet> = (0..n).map(|v| ElementSet::singleton(n, v)).collect();
        for &v in topo.iter().rev() {
            for w in 0..succ[v].len() {
                let w = succ[v][w];
                let add = above[w].clone();
                above[v].union_with(&add);
            }
        }

        let minimals: Vec<ElementId> = (0..n).filter(|&v| below[v].len() == 1).collect();
        if minimals.len() > 1 {
            return Err(Error::NotALattice {
                kind: BoundKind::Meet,
                a: minimals[0],
                b: minimals[1],
            });
        }
        let maximals: Vec<ElementId> = (0..n).filter(|&v| above[v].len() == 1).collect();
        if maximals.len() > 1 {
            return Err(Error::NotALattice {
                kind: BoundKind::Join,
                a: maximals[0],
                b: maximals[1],
            });
        }
        let bottom = minimals[0];
        let top = maximals[0];

        // Heights are strictly monotone along <, which pins the meet of a
        // pair down to the unique maximum-height common lower bound.
        let mut height = vec![0usize; n];
        for &v in &topo {
            for &w in &succ[v] {
                height[w] = height[w].max(height[v] + 1);
            }
        }

        let mut meet_table = vec![0u16; n * n];
        let mut join_table = vec![0u16; n * n];
        let mut scratch = ElementSet::empty(n);
        for a in 0..n {
            for b in a..n {
                let m = Self::bound_of_pair(&below, &height, &mut scratch, a, b, true)?;
                meet_table[a * n + b] = m as u16;
                meet_table[b * n + a] = m as u16;
                let j = Self::bound_of_pair(&above, &height, &mut scratch, a, b, false)?;
                join_table[a * n + b] = j as u16;
                join_table[b * n + a] = j as u16;
            }
        }

        // Transitive reduction: a ⋖ b iff nothing sits strictly between.
        let mut covers = Vec::new();
        let mut lower_covers: Vec<Vec<ElementId>> = vec![Vec::new(); n];
        let mut upper_covers: Vec<Vec<ElementId>> = vec![Vec::new(); n];
        for a in 0..n {
            for b in above[a].iter() {
                if b == a {
                    continue;
                }
                let mut between = above[a].intersection(&below[b]);
                between.remove(a);
                between.remove(b);
                if between.is_empty() {
                    covers.push((a, b));
                    lower_covers[b].push(a);
                    upper_covers[a].push(b);
                }
            }
        }
        covers.sort_unstable();

        Ok(Lattice {
            n,
            below,
            above,
            meet_table,
            join_table,
            covers,
            lower_covers,
            upper_covers,
            height,
            bottom,
            top,
        })
    }

    /// Greatest (for meets) or least (for joins) element of the common
    /// bound set of `a` and `b`, or `NotALattice` if it is not unique.
    fn bound_of_pair(
        cones: &[ElementSet],
        height: &[usize],
        scratch: &mut ElementSet,
        a: ElementId,
        b: ElementId,
        greatest: bool,
    ) -> Result<ElementId, Error> {
        let kind = if greatest {
            BoundKind::Meet
        } else {
            BoundKind::Join
        };
        scratch.clone_from(&cones[a]);
        scratch.intersect_with(&cones[b]);
        let mut best: Option<ElementId> = None;
        let mut tie = false;
        for x in scratch.iter() {
            match best {
                None => best = Some(x),
                Some(c) => {
                    let better = if greatest {
                        height[x] > height[c]
                    } else {
                        height[x] < height[c]
                    };
                    if better {
                        best = Some(x);
                        tie = false;
                    } else if height[x] == height[c] {
                        tie = true;
                    }
                }
            }
        }
        let best = best.ok_or(Error::NotALattice { kind, a, b })?;
        if tie || !scratch.is_subset(&cones[best]) {
            return Err(Error::NotALattice { kind, a, b });
        }
        Ok(best)
    }

    pub fn element_count(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> core::ops::Range<ElementId> {
        0..self.n
    }

    pub fn bottom(&self) -> ElementId {
        self.bottom
    }

    pub fn top(&self) -> ElementId {
        self.top
    }

    pub fn leq(&self, a: ElementId, b: ElementId) -> bool {
        self.below[b].contains(a)
    }

    pub fn lt(&self, a: ElementId, b: ElementId) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: ElementId, b: ElementId) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn meet(&self, a: ElementId, b: ElementId) -> ElementId {
        self.meet_table[a * self.n + b] as ElementId
    }

    pub fn join(&self, a: ElementId, b: ElementId) -> ElementId {
        self.join_table[a * self.n + b] as ElementId
    }

    pub fn meet_of_set(&self, s: &ElementSet) -> Option<ElementId> {
        s.iter().reduce(|acc, x| self.meet(acc, x))
    }

    pub fn join_of_set(&self, s: &ElementSet) -> Option<ElementId> {
        s.iter().reduce(|acc, x| self.join(acc, x))
    }

    /// Cover pairs `(lower, upper)`, the transitive reduction of the order.
    pub fn cover_pairs(&self) -> &[(ElementId, ElementId)] {
        &self.covers
    }

    pub fn lower_covers(&self, x: ElementId) -> &[ElementId] {
        &self.lower_covers[x]
    }

    pub fn upper_covers(&self, x: ElementId) -> &[ElementId] {
        &self.upper_covers[x]
    }

    pub fn covers_pair(&self, a: ElementId, b: ElementId) -> bool {
        self.upper_covers[a].contains(&b)
    }

    pub fn atoms(&self) -> Vec<ElementId> {
        self.upper_covers[self.bottom].clone()
    }

    pub fn coatoms(&self) -> Vec<ElementId> {
        self.lower_covers[self.top].clone()
    }

    /// Length of the lattice: the longest chain from bottom to top.
    pub fn length(&self) -> usize {
        self.height[self.top]
    }

    /// Longest chain length within the interval `[u, v]`.
    pub fn interval_length(&self, u: ElementId, v: ElementId) -> Result<usize, Error> {
        Ok(self
            .subset_length(&self.interval(u, v)?)
            .expect("interval is nonempty"))
    }

    /// `{x : u ≤ x ≤ v}`; errors if `u ≰ v`.
    pub fn interval(&self, u: ElementId, v: ElementId) -> Result<ElementSet, Error> {
        if !self.leq(u, v) {
            return Err(Error::NotComparable { lower: u, upper: v });
        }
        Ok(self.above[u].intersection(&self.below[v]))
    }

    /// The principal ideal `{x : x ≤ a}`.
    pub fn ideal(&self, a: ElementId) -> ElementSet {
        self.below[a].clone()
    }

    /// The principal filter `{x : x ≥ a}`.
    pub fn filter(&self, a: ElementId) -> ElementSet {
        self.above[a].clone()
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    /// Whether `s` is closed under meet and join. The empty set counts as
    /// a sublattice.
    pub fn is_sublattice(&self, s: &ElementSet) -> bool {
        let members = s.to_vec();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                if !s.contains(self.meet(x, y)) || !s.contains(self.join(x, y)) {
                    return false;
                }
            }
        }
        true
    }

    /// Least superset of `x` closed under meet and join, by fixpoint
    /// iteration.
    pub fn sublattice_closure(&self, x: &ElementSet) -> ElementSet {
        let mut closed = x.clone();
        let mut members = closed.to_vec();
        let mut fresh = members.clone();
        while !fresh.is_empty() {
            let mut next = Vec::new();
            for &a in &fresh {
                for &b in &members {
                    for c in [self.meet(a, b), self.join(a, b)] {
                        if !closed.contains(c) {
                            closed.insert(c);
                            next.push(c);
                        }
                    }
                }
            }
            members.extend_from_slice(&next);
            fresh = next;
        }
        closed
    }

    /// Shortest and longest maximal-chain lengths from bottom to `x`.
    /// Maximal chains of `[bottom, x]` are exactly the cover paths.
    pub fn maximal_chain_lengths(&self, x: ElementId) -> (usize, usize) {
        let (shortest, longest) = self.chain_length_tables();
        (shortest[x], longest[x])
    }

    /// Per-element shortest and longest cover-path lengths from bottom.
    pub fn chain_length_tables(&self) -> (Vec<usize>, Vec<usize>) {
        let order = self.topo_order();
        let mut shortest = vec![usize::MAX; self.n];
        let mut longest = vec![0usize; self.n];
        shortest[self.bottom] = 0;
        for &v in &order {
            for &w in &self.upper_covers[v] {
                shortest[w] = shortest[w].min(shortest[v] + 1);
                longest[w] = longest[w].max(longest[v] + 1);
            }
        }
        (shortest, longest)
    }

    /// Elements sorted by height; a linear extension of the order.
    pub fn topo_order(&self) -> Vec<ElementId> {
        let mut order: Vec<ElementId> = (0..self.n).collect();
        order.sort_by_key(|&v| self.height[v]);
        order
    }

    pub fn height_of(&self, x: ElementId) -> usize {
        self.height[x]
    }

    /// Length of `s` viewed as a subposet: its longest chain. `None` for
    /// the empty set, `Some(0)` for singletons.
    pub fn subset_length(&self, s: &ElementSet) -> Option<usize> {
        let mut members = s.to_vec();
        if members.is_empty() {
            return None;
        }
        members.sort_by_key(|&v| self.height[v]);
        let mut len = vec![0usize; members.len()];
        let mut best = 0;
        for i in 0..members.len() {
            for j in 0..i {
                if self.lt(members[j], members[i]) {
                    len[i] = len[i].max(len[j] + 1);
                }
            }
            best = best.max(len[i]);
        }
        Some(best)
    }

    /// One longest chain of `s` as a subposet, listed bottom-up. Empty for
    /// the empty set.
    pub fn longest_chain_in(&self, s: &ElementSet) -> Vec<ElementId> {
        let mut members = s.to_vec();
        if members.is_empty() {
            return Vec::new();
        }
        members.sort_by_key(|&v| self.height[v]);
        let mut len = vec![0usize; members.len()];
        let mut prev = vec![usize::MAX; members.len()];
        let mut best = 0;
        for i in 0..members.len() {
            for j in 0..i {
                if self.lt(members[j], members[i]) && len[j] + 1 > len[i] {
                    len[i] = len[j] + 1;
                    prev[i] = j;
                }
            }
            if len[i] > len[best] {
                best = i;
            }
        }
        let mut chain = Vec::new();
        let mut cur = best;
        loop {
            chain.push(members[cur]);
            if prev[cur] == usize::MAX {
                break;
            }
            cur = prev[cur];
        }
        chain.reverse();
        chain
    }

    /// One longest bottom-to-top chain of the whole lattice.
    pub fn longest_chain(&self) -> Vec<ElementId> {
        self.longest_chain_in(&self.full_set())
    }

    fn check_element(&self, e: ElementId) -> Result<(), Error> {
        if e >= self.n {
            return Err(Error::ElementOutOfRange {
                element: e,
                count: self.n,
            });
        }
        Ok(())
    }

    /// Bounds-checked element validation for callers holding untrusted ids.
    pub fn validate_element(&self, e: ElementId) -> Result<ElementId, Error> {
        self.check_element(e)?;
        Ok(e)
    }
}

impl core::fmt::Debug for Lattice {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "Lattice(n={}, covers={:?}, bottom={}, top={})",
            self.n, self.covers, self.bottom, self.top
        )
    }
}
