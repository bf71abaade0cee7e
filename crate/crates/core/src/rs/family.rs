/// All `k`-subsets of `0..m` in lexicographic order.
pub fn k_subsets(m: u32, k: u32) -> impl Iterator<Item = Vec<u32>> {
    let mut cur: Option<Vec<u32>> = (k <= m).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        // Advance to the next combination.
        let k = k as usize;
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if next[i] < m - (k - i) as u32 {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                cur = Some(next);
                break;
            }
        }
        Some(out)
    })
}

fn intersection(a: &[u32], b: &[u32]) -> usize {
    a.iter().filter(|x| b.contains(x)).count()
}

/// Greedily collects `k`-subsets of `0..m`, scanning in lexicographic order,
/// keeping a subset if it meets every kept one in at most `max_intersection`
/// coordinates.
pub fn build_family(m: u32, k: u32, max_intersection: u32) -> Vec<Vec<u32>> {
    let mut family: Vec<Vec<u32>> = Vec::new();
    for cand in k_subsets(m, k) {
        if family.iter().all(|f| intersection(f, &cand) <= max_intersection as usize) {
            family.push(cand);
        }
    }
    family
}
