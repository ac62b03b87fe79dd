#![allow(dead_code)]

use airframe_core::{GroupWord, Diagram, GeneratorTable};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const AIRPLANE_LETTERS: [&str; 5] = ["a", "b", "g", "d", "e"];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_word(rng: &mut ChaCha8Rng, letters: &[&str], max_len: usize) -> GroupWord {
    let mut w = GroupWord::new();
    for _ in 0..rng.gen_range(0..=max_len) {
        let l = letters[rng.gen_range(0..letters.len())];
        w.push(l, if rng.gen_bool(0.5) { 1 } else { -1 });
    }
    w
}

/// Words written as space-separated letters with optional `^k`.
pub fn word(s: &str) -> GroupWord {
    let mut w = GroupWord::new();
    for t in s.split_whitespace() {
        match t.split_once('^') {
            Some((n, e)) => w.push(n, e.parse().unwrap()),
            None => w.push(t, 1),
        }
    }
    w
}

pub fn eval(t: &GeneratorTable, s: &str) -> Diagram {
    t.evaluate(&word(s)).unwrap()
}
