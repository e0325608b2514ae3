//! Trie over leading monomials, used to find every factor `a·lm(g)·b` of a word.

use alloc::vec::Vec;

#[derive(Clone, Debug, Default)]
pub struct LeadIndex {
    nodes: Vec<Node>,
    len: usize,
}

#[derive(Clone, Debug, Default)]
struct Node {
    children: Vec<(u16, u32)>,
    ids: Vec<usize>,
}

impl Node {
    fn child(&self, l: u16) -> Option<u32> {
        self.children.iter().find(|c| c.0 == l).map(|c| c.1)
    }
}

impl LeadIndex {
    pub fn new() -> Self {
        LeadIndex { nodes: alloc::vec![Node::default()], len: 0 }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn insert(&mut self, word: &[u16], id: usize) {
        if self.nodes.is_empty() {
            self.nodes.push(Node::default());
        }
        let mut n = 0usize;
        for &l in word {
            n = match self.nodes[n].child(l) {
                Some(c) => c as usize,
                None => {
                    let c = self.nodes.len();
                    self.nodes.push(Node::default());
                    self.nodes[n].children.push((l, c as u32));
                    c
                }
            };
        }
        let ids = &mut self.nodes[n].ids;
        let pos = ids.partition_point(|&x| x < id);
        ids.insert(pos, id);
        self.len += 1;
    }

    /// Returns whether `id` was present under `word`.
    pub fn remove(&mut self, word: &[u16], id: usize) -> bool {
        let Some(n) = self.find(word) else { return false };
        let ids = &mut self.nodes[n].ids;
        match ids.binary_search(&id) {
            Ok(p) => {
                ids.remove(p);
                self.len -= 1;
                true
            }
            Err(_) => false,
        }
    }

    fn find(&self, word: &[u16]) -> Option<usize> {
        if self.nodes.is_empty() {
            return None;
        }
        let mut n = 0usize;
        for &l in word {
            n = self.nodes[n].child(l)? as usize;
        }
        Some(n)
    }

    /// Ids whose word is exactly `word`.
    pub fn exact(&self, word: &[u16]) -> &[usize] {
        match self.find(word) {
            Some(n) => &self.nodes[n].ids,
            None => &[],
        }
    }

    /// Calls `f(id, start)` for every stored word occurring in `w[lo..hi]`, by
    /// increasing start, then increasing length.
    pub fn for_each_match(&self, w: &[u16], lo: usize, hi: usize, mut f: impl FnMut(usize, usize)) {
        if self.nodes.is_empty() {
            return;
        }
        for &id in &self.nodes[0].ids {
            f(id, lo);
        }
        for start in lo..hi {
            let mut n = 0usize;
            for &l in &w[start..hi] {
                match self.nodes[n].child(l) {
                    Some(c) => n = c as usize,
                    None => break,
                }
                for &id in &self.nodes[n].ids {
                    f(id, start);
                }
            }
        }
    }

    /// Every `(id, start)` occurring in `w`.
    pub fn matches(&self, w: &[u16]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        self.for_each_match(w, 0, w.len(), |id, s| out.push((id, s)));
        out
    }

    /// Whether any stored word is a factor of `w`.
    pub fn divides_any(&self, w: &[u16]) -> bool {
        if self.nodes.is_empty() {
            return false;
        }
        if !self.nodes[0].ids.is_empty() {
            return true;
        }
        for start in 0..w.len() {
            let mut n = 0usize;
            for &l in &w[start..] {
                match self.nodes[n].child(l) {
                    Some(c) => n = c as usize,
                    None => break,
                }
                if !self.nodes[n].ids.is_empty() {
                    return true;
                }
            }
        }
        false
    }
}
