#![allow(dead_code)]

use jdlat::{PermTuple, Permutation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_1a77;

pub fn fix_a() -> PermTuple {
    PermTuple::from_one_line(&[&[3, 2, 4, 1], &[4, 2, 1, 3]]).unwrap()
}

pub fn fix_b() -> PermTuple {
    PermTuple::from_one_line(&[&[4, 2, 1, 3], &[3, 2, 4, 1]]).unwrap()
}

pub fn fix_c() -> PermTuple {
    PermTuple::from_one_line(&[&[3, 2, 1, 4], &[3, 2, 4, 1]]).unwrap()
}

pub fn random_perm(rng: &mut impl Rng, n: usize) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Permutation::from_images(v).unwrap()
}

/// `count` tuples with `n ∈ {2,…,6}` and `k ∈ {2,3,4}`, reproducible from `seed`.
pub fn random_tuples(seed: u64, count: usize) -> Vec<PermTuple> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=6);
            let k = rng.gen_range(2..=4);
            PermTuple::new((1..k).map(|_| random_perm(&mut rng, n)).collect()).unwrap()
        })
        .collect()
}
