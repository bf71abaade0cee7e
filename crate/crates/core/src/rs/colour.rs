use super::params::ColouringParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Colour {
    Red,
    Blue,
    White,
}

/// Colour of the layer `L_s`: red on `[jw, jw + m/3)`, white for the next
/// `k`, blue for the next `m/3`, white for the last `k` of each period.
pub fn colour_of_sum(params: &ColouringParams, s: u64) -> Colour {
    let strip = params.strip() as u64;
    let k = params.k() as u64;
    let off = s % params.w() as u64;
    if off < strip {
        Colour::Red
    } else if off < strip + k {
        Colour::White
    } else if off < 2 * strip + k {
        Colour::Blue
    } else {
        Colour::White
    }
}

/// Colour of vector `v` under index set `set`.
pub fn colour_vertex(params: &ColouringParams, v: &[u32], set: &[u32]) -> Colour {
    assert_eq!(v.len(), params.m() as usize, "vector must have m coordinates");
    assert_eq!(set.len(), params.k() as usize, "index set must have k elements");
    assert!(v.iter().all(|&x| (x as u64) < params.radix()), "coordinate out of range");
    let s: u64 = set.iter().map(|&i| v[i as usize] as u64).sum();
    colour_of_sum(params, s)
}

pub fn encode_vector(params: &ColouringParams, v: &[u32]) -> u64 {
    let r = params.radix();
    v.iter().rev().fold(0u64, |acc, &x| acc * r + x as u64)
}

pub fn decode_vector(params: &ColouringParams, mut index: u64) -> Vec<u32> {
    let r = params.radix();
    (0..params.m())
        .map(|_| {
            let x = (index % r) as u32;
            index /= r;
            x
        })
        .collect()
}

/// `Σ_{i∈set} x_i` for the vector encoded as `index`.
pub fn layer_sum(params: &ColouringParams, index: u64, set: &[u32]) -> u64 {
    let r = params.radix();
    set.iter().map(|&i| (index / r.pow(i)) % r).sum()
}
