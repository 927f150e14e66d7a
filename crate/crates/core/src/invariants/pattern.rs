use crate::error::{Error, Result};
use crate::graph::SignedGraph;

pub const PATTERN_CAP: usize = 10;

/// Find an induced copy of `pattern` in `g`, up to switching.
///
/// Returns `map` with `map[i]` the vertex of `g` playing pattern vertex `i`:
/// the underlying graphs agree through `map` (induced, not just a subgraph)
/// and the inherited signs are switching equivalent to the pattern's.
pub fn contains_induced_pattern(
    g: &SignedGraph,
    pattern: &SignedGraph,
) -> Result<Option<Vec<usize>>> {
    let k = pattern.order();
    if k > PATTERN_CAP {
        return Err(Error::TooLarge {
            what: "induced pattern search",
            n: k,
            cap: PATTERN_CAP,
        });
    }
    if k > g.order() {
        return Ok(None);
    }
    let search = Search {
        g,
        pattern,
        gdeg: g.degrees(),
        pdeg: pattern.degrees(),
    };
    let mut map = Vec::with_capacity(k);
    let mut used = vec![false; g.order()];
    Ok(search.extend(&mut map, &mut used).then_some(map))
}

struct Search<'a> {
    g: &'a SignedGraph,
    pattern: &'a SignedGraph,
    gdeg: Vec<usize>,
    pdeg: Vec<usize>,
}

impl Search<'_> {
    fn extend(&self, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = map.len();
        if i == self.pattern.order() {
            return self.signs_match(map);
        }
        for w in 0..self.g.order() {
            if used[w] || self.gdeg[w] < self.pdeg[i] {
                continue;
            }
            let consistent = map
                .iter()
                .enumerate()
                .all(|(a, &x)| self.pattern.is_adjacent(a, i) == self.g.is_adjacent(x, w));
            if !consistent {
                continue;
            }
            map.push(w);
            used[w] = true;
            if self.extend(map, used) {
                return true;
            }
            used[w] = false;
            map.pop();
        }
        false
    }

    fn signs_match(&self, map: &[usize]) -> bool {
        let pulled = SignedGraph::from_edge_list(
            self.pattern.order(),
            self.pattern.edges().iter().map(|e| {
                let s = self.g.sign(map[e.u], map[e.v]).expect("induced edge");
                (e.u, e.v, s)
            }),
        )
        .expect("pattern edges are valid");
        pulled.switching_equivalent(self.pattern)
    }
}
