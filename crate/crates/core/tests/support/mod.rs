//! Seeded random sequents for the acceptance runs.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use sublam::syntax::{is_bnnc, Config, Formula, Item, Sequent};

const ATOMS: [&str; 3] = ["p", "q", "r"];

pub fn formula(rng: &mut ChaCha8Rng, size: usize) -> Formula {
    if size <= 1 {
        return if rng.gen_ratio(1, 8) {
            Formula::Unit
        } else {
            Formula::atom(*ATOMS.choose(rng).unwrap())
        };
    }
    let pick = if size == 2 { rng.gen_range(0..3) } else { rng.gen_range(0..9) };
    match pick {
        0 => Formula::bang(formula(rng, size - 1)),
        1 => Formula::diamond(formula(rng, size - 1)),
        2 => Formula::box_inv(formula(rng, size - 1)),
        k => {
            let left = rng.gen_range(1..size - 1);
            let (a, b) = (formula(rng, left), formula(rng, size - 1 - left));
            match k % 3 {
                0 => Formula::prod(a, b),
                1 => Formula::under(a, b),
                _ => Formula::over(a, b),
            }
        }
    }
}

pub fn config(rng: &mut ChaCha8Rng, size: usize, depth: usize) -> Config {
    let mut items = Vec::new();
    let mut left = size;
    while left > 0 {
        if depth < 2 && left >= 2 && rng.gen_ratio(1, 5) {
            let inner = rng.gen_range(0..left);
            items.push(Item::Bracket(config(rng, inner, depth + 1)));
            left -= inner + 1;
        } else {
            let s = rng.gen_range(1..=left.min(4));
            items.push(Item::Leaf(formula(rng, s)));
            left -= s;
        }
    }
    Config::new(items)
}

/// The product of the items, brackets read as `<>`.
pub fn mirror(c: &Config) -> Formula {
    let parts: Vec<Formula> = c
        .items
        .iter()
        .map(|it| match it {
            Item::Leaf(f) => f.clone(),
            Item::Bracket(c) => Formula::diamond(mirror(c)),
        })
        .collect();
    Formula::prod_of(&parts).unwrap_or(Formula::Unit)
}

/// A sequent of size at most `max`. A third are fully random, a third have
/// the antecedent's own product as succedent, a third a shuffled product.
pub fn sequent(rng: &mut ChaCha8Rng, max: usize) -> Sequent {
    loop {
        let s = match rng.gen_range(0..3) {
            0 => {
                let n = rng.gen_range(0..max);
                let ant = config(rng, n, 0);
                let k = rng.gen_range(1..=(max - n).max(1));
                let succ = formula(rng, k);
                Sequent::new(ant, succ)
            }
            k => {
                let n = rng.gen_range(1..=max / 2);
                let ant = config(rng, n, 0);
                let mut parts = ant.items.clone();
                if k == 2 {
                    parts.shuffle(rng);
                }
                let succ = mirror(&Config::new(parts));
                Sequent::new(ant, succ)
            }
        };
        if s.size() <= max {
            return s;
        }
    }
}

pub fn bnnc_sequent(rng: &mut ChaCha8Rng, max: usize) -> Sequent {
    loop {
        let s = sequent(rng, max);
        if is_bnnc(&s) {
            return s;
        }
    }
}
