//! Compositions and set partitions.
//!
//! Both generators are lazy iterators, so `.count()` walks the sequence
//! without collecting it. Set partitions are produced from restricted-growth
//! strings: element `i` goes to block `a[i]`, where `a[0] = 0` and
//! `a[i] <= 1 + max(a[..i])`.

/// A composition: an ordered list of strictly positive parts.
pub type Composition = Vec<usize>;

/// All compositions of `total` into exactly `parts` positive parts, in
/// lexicographic order.
pub fn compositions(total: usize, parts: usize) -> Compositions {
    Compositions::new(total, parts)
}

#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<usize>>,
    total: usize,
}

impl Compositions {
    fn new(total: usize, parts: usize) -> Self {
        let current = if parts == 0 {
            (total == 0).then(Vec::new)
        } else if total < parts {
            None
        } else {
            let mut first = vec![1; parts];
            first[parts - 1] = total - (parts - 1);
            Some(first)
        };
        Compositions { current, total }
    }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let out = self.current.take()?;
        let k = out.len();
        if k >= 2 {
            // The successor bumps the rightmost position j < k-1 that can still
            // grow, resets everything after it to 1, and puts the slack last.
            let mut next = out.clone();
            let mut j = k - 1;
            while j > 0 {
                j -= 1;
                let prefix: usize = next[..=j].iter().sum();
                if prefix + (k - 1 - j) < self.total {
                    next[j] += 1;
                    for x in next.iter_mut().skip(j + 1) {
                        *x = 1;
                    }
                    let used: usize = next[..k - 1].iter().sum();
                    next[k - 1] = self.total - used;
                    self.current = Some(next);
                    break;
                }
            }
        }
        Some(out)
    }
}

/// Restricted-growth strings of length `n` using at most `max_blocks` values.
/// The empty string is the single string of length 0.
#[derive(Debug, Clone)]
pub struct RestrictedGrowth {
    a: Vec<usize>,
    max_blocks: usize,
    started: bool,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize, max_blocks: usize) -> Self {
        RestrictedGrowth {
            a: vec![0; n],
            max_blocks,
            started: false,
            done: n > 0 && max_blocks == 0,
        }
    }

    /// Advances to the next string in lexicographic order. Returns `false`
    /// once exhausted.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            return true;
        }
        let n = self.a.len();
        // prefix maxima: m[i] = max(a[..i])
        let mut m = vec![0usize; n];
        for i in 1..n {
            m[i] = m[i - 1].max(self.a[i - 1]);
        }
        let mut i = n;
        while i > 1 {
            i -= 1;
            if self.a[i] <= m[i] && self.a[i] + 1 < self.max_blocks {
                self.a[i] += 1;
                for x in self.a.iter_mut().skip(i + 1) {
                    *x = 0;
                }
                return true;
            }
        }
        self.done = true;
        false
    }

    pub fn current(&self) -> &[usize] {
        &self.a
    }

    pub fn blocks(&self) -> usize {
        self.a.iter().max().map_or(0, |m| m + 1)
    }
}

/// Every partition of `elements` into at most `max_blocks` non-empty blocks.
/// Blocks preserve the element order; the partitions come out in
/// restricted-growth lexicographic order, so `{{a,b}}` precedes `{{a},{b}}`.
pub fn set_partitions<T: Clone>(elements: &[T], max_blocks: usize) -> SetPartitions<'_, T> {
    SetPartitions {
        elements,
        rgs: RestrictedGrowth::new(elements.len(), max_blocks),
    }
}

#[derive(Debug, Clone)]
pub struct SetPartitions<'a, T> {
    elements: &'a [T],
    rgs: RestrictedGrowth,
}

impl<T: Clone> Iterator for SetPartitions<'_, T> {
    type Item = Vec<Vec<T>>;

    fn next(&mut self) -> Option<Self::Item> {
        if !self.rgs.advance() {
            return None;
        }
        let mut blocks: Vec<Vec<T>> = vec![Vec::new(); self.rgs.blocks()];
        for (x, &b) in self.elements.iter().zip(self.rgs.current()) {
            blocks[b].push(x.clone());
        }
        Some(blocks)
    }
}

/// Number of partitions of an `n`-set into at most `max_blocks` blocks,
/// counted by walking restricted-growth strings without building blocks.
pub fn count_set_partitions(n: usize, max_blocks: usize) -> u64 {
    let mut rgs = RestrictedGrowth::new(n, max_blocks);
    let mut count = 0;
    while rgs.advance() {
        count += 1;
    }
    count
}

/// Partitions of `elements` into exactly `m` blocks, each of size at least 2.
pub fn nonsingleton_partitions<T: Clone>(
    elements: &[T],
    m: usize,
) -> impl Iterator<Item = Vec<Vec<T>>> + '_ {
    let feasible = 2 * m <= elements.len() && (m >= 1 || elements.is_empty());
    set_partitions(elements, if feasible { m } else { 0 })
        .filter(move |p| p.len() == m && p.iter().all(|b| b.len() >= 2))
}

/// Count-only variant of [`nonsingleton_partitions`].
pub fn count_nonsingleton_partitions(n: usize, m: usize) -> u64 {
    if m == 0 {
        return u64::from(n == 0);
    }
    if 2 * m > n {
        return 0;
    }
    let mut rgs = RestrictedGrowth::new(n, m);
    let mut sizes = vec![0usize; m];
    let mut count = 0;
    while rgs.advance() {
        sizes.iter_mut().for_each(|s| *s = 0);
        for &b in rgs.current() {
            sizes[b] += 1;
        }
        if sizes.iter().all(|&s| s >= 2) {
            count += 1;
        }
    }
    count
}

/// Splits a partition into its singleton blocks and its larger blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionSplit<T> {
    pub singletons: Vec<T>,
    pub rest: Vec<Vec<T>>,
}

impl<T> PartitionSplit<T> {
    pub fn new(partition: Vec<Vec<T>>) -> Self {
        let mut singletons = Vec::new();
        let mut rest = Vec::new();
        for mut block in partition {
            if block.len() == 1 {
                singletons.push(block.pop().expect("len 1"));
            } else {
                rest.push(block);
            }
        }
        PartitionSplit { singletons, rest }
    }
}
