use super::{CyclicInterval, KSubset, Permutation};
use crate::error::{Error, Result};

/// Cyclic left descents of `word`, a permutation of the totally ordered set
/// `ground` (listed in increasing order).
///
/// A non-maximal letter `a` is a descent when it sits to the right of its
/// successor; the maximum is a descent when the minimum sits to its left.
/// A singleton ground set has no cyclic left descents.
pub fn cyclic_left_descent_set(word: &[usize], ground: &[usize]) -> Result<Vec<usize>> {
    let m = ground.len();
    if m == 0 {
        return Err(Error::invalid("empty ground set"));
    }
    if word.len() != m {
        return Err(Error::invalid(format!(
            "word of length {} over a ground set of size {m}",
            word.len()
        )));
    }
    // pos[rank] = position of the letter with that rank in the ground order
    let mut pos = vec![usize::MAX; m];
    for (p, a) in word.iter().enumerate() {
        let rank = ground
            .iter()
            .position(|g| g == a)
            .ok_or_else(|| Error::invalid(format!("letter {a} not in the ground set")))?;
        if pos[rank] != usize::MAX {
            return Err(Error::invalid(format!("letter {a} repeated")));
        }
        pos[rank] = p;
    }
    if m == 1 {
        return Ok(Vec::new());
    }
    let mut out: Vec<usize> = (0..m - 1)
        .filter(|&r| pos[r] > pos[r + 1])
        .map(|r| ground[r])
        .collect();
    if pos[0] < pos[m - 1] {
        out.push(ground[m - 1]);
    }
    Ok(out)
}

/// Cyclic left descent set of a permutation of `[n]` in the natural order.
pub fn cyclic_left_descents(w: &Permutation) -> KSubset {
    let n = w.n();
    let pos = w.positions();
    let mut set = KSubset::empty(n);
    if n == 1 {
        return set;
    }
    for a in 1..n {
        if pos[a] > pos[a + 1] {
            set.insert(a);
        }
    }
    if pos[1] < pos[n] {
        set.insert(n);
    }
    set
}

/// The subsequence of `w` made of the letters in `interval`, together with
/// the interval's elements in its own order (the ground set for descents).
pub fn restrict(w: &Permutation, interval: &CyclicInterval) -> (Vec<usize>, Vec<usize>) {
    let ground = interval.elements();
    let word = w
        .word()
        .iter()
        .copied()
        .filter(|&a| interval.contains(a))
        .collect();
    (word, ground)
}

/// The circuit `I_{w_1} -> ... -> I_{w_n}` of `(w)`, where `I_a` is the cyclic
/// left descent set of the rotation of `w` ending at `a`.
pub fn circuit_subsets(w: &Permutation) -> Result<Vec<KSubset>> {
    if !w.ends_with_n() {
        return Err(Error::invalid(format!("{w} does not end with {}", w.n())));
    }
    w.word()
        .iter()
        .map(|&a| w.rotation_ending_at(a).map(|r| cyclic_left_descents(&r)))
        .collect()
}

/// Number of positions `p` with `word[p] > word[p+1]`.
pub fn descent_count(word: &[usize]) -> usize {
    word.windows(2).filter(|p| p[0] > p[1]).count()
}
