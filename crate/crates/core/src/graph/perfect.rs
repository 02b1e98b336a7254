use super::Graph;

/// An induced cycle of odd length at least 5, listed in cycle order starting
/// from its smallest vertex, if `g` has one.
pub fn find_odd_hole(g: &Graph) -> Option<Vec<usize>> {
    // Grows induced paths s = p0, p1, ..., pk over vertices larger than s.
    // `forbidden` holds the neighbors of p1..p(k-1): a new vertex adjacent to
    // any of them would create a chord. A new vertex adjacent to s closes the
    // cycle and cannot be extended further.
    fn grow(g: &Graph, s: usize, path: &mut Vec<usize>, on_path: u64, forbidden: u64) -> bool {
        let last = *path.last().unwrap();
        let mut cand = g.mask(last) & above(s) & !on_path & !forbidden;
        while cand != 0 {
            let i = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if g.mask(i) & (1u64 << s) != 0 {
                let len = path.len() + 1;
                if len >= 5 && len % 2 == 1 {
                    path.push(i);
                    return true;
                }
                continue;
            }
            path.push(i);
            if grow(g, s, path, on_path | (1u64 << i), forbidden | g.mask(last)) {
                return true;
            }
            path.pop();
        }
        false
    }

    for s in 0..g.n() {
        let mut start = g.mask(s) & above(s);
        while start != 0 {
            let p1 = start.trailing_zeros() as usize;
            start &= start - 1;
            let mut path = vec![s, p1];
            if grow(g, s, &mut path, (1u64 << s) | (1u64 << p1), 0) {
                return Some(path.into_iter().map(|i| i + 1).collect());
            }
        }
    }
    None
}

/// Mask of the 0-indexed vertices strictly above `s`.
fn above(s: usize) -> u64 {
    u64::MAX.checked_shl(s as u32 + 1).unwrap_or(0)
}

/// True iff neither `g` nor its complement contains an odd hole.
pub fn is_perfect(g: &Graph) -> bool {
    find_odd_hole(g).is_none() && find_odd_hole(&g.complement()).is_none()
}
