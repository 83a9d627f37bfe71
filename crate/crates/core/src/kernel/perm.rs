//! Permutations of `!`-leaves used by the `PermStar` rule.
//!
//! A permutation of a configuration is stored flat: one block per node of
//! the conclusion in preorder (root first), each block listing, for every
//! child position of the premise node, the conclusion child it came from.
//! Brackets and non-`!` leaves keep their relative order, so both sides
//! share the same node tree and the same preorder.

use crate::syntax::{Config, Item};

pub type Blocks = Vec<Vec<usize>>;

fn node_lengths(c: &Config, out: &mut Vec<usize>) {
    out.push(c.len());
    for it in &c.items {
        if let Item::Bracket(inner) = it {
            node_lengths(inner, out);
        }
    }
}

/// Split a flat map into per-node blocks following the node sizes of `ant`.
pub fn split(ant: &Config, flat: &[usize]) -> Result<Blocks, String> {
    let mut lens = Vec::new();
    node_lengths(ant, &mut lens);
    let total: usize = lens.iter().sum();
    if flat.len() != total {
        return Err(format!(
            "permutation has {} entries, antecedent has {total} child slots",
            flat.len()
        ));
    }
    let mut out = Vec::new();
    let mut at = 0;
    for l in lens {
        out.push(flat[at..at + l].to_vec());
        at += l;
    }
    Ok(out)
}

pub fn flatten(blocks: &Blocks) -> Vec<usize> {
    blocks.iter().flatten().copied().collect()
}

pub fn identity(ant: &Config) -> Blocks {
    let mut lens = Vec::new();
    node_lengths(ant, &mut lens);
    lens.into_iter().map(|l| (0..l).collect()).collect()
}

pub fn is_identity(blocks: &Blocks) -> bool {
    blocks
        .iter()
        .all(|b| b.iter().enumerate().all(|(i, &j)| i == j))
}

fn apply_node(node: &Config, blocks: &Blocks, counter: &mut usize) -> Result<Config, String> {
    let which = *counter;
    let map = blocks
        .get(which)
        .ok_or_else(|| "permutation has too few blocks".to_string())?;
    *counter += 1;
    let mut children = Vec::with_capacity(node.len());
    for it in &node.items {
        children.push(match it {
            Item::Leaf(f) => Item::Leaf(f.clone()),
            Item::Bracket(c) => Item::Bracket(apply_node(c, blocks, counter)?),
        });
    }
    if map.len() != node.len() {
        return Err(format!("block {which} has wrong length"));
    }
    let mut seen = vec![false; map.len()];
    for &j in map {
        if j >= map.len() || seen[j] {
            return Err(format!("block {which} is not a permutation"));
        }
        seen[j] = true;
    }
    let fixed: Vec<usize> = map
        .iter()
        .copied()
        .filter(|&j| !node.items[j].is_bang_leaf())
        .collect();
    if fixed.windows(2).any(|w| w[0] > w[1]) {
        return Err(format!("block {which} reorders an item that is not a `!`-formula"));
    }
    Ok(Config::new(map.iter().map(|&j| children[j].clone()).collect()))
}

/// The premise obtained from conclusion antecedent `ant` under `blocks`.
pub fn apply(ant: &Config, blocks: &Blocks) -> Result<Config, String> {
    let mut counter = 0;
    let out = apply_node(ant, blocks, &mut counter)?;
    if counter != blocks.len() {
        return Err("permutation has too many blocks".into());
    }
    Ok(out)
}

/// `lower` takes the conclusion to a middle configuration and `upper` takes
/// the middle to the top; the result takes the conclusion to the top.
pub fn compose(lower: &Blocks, upper: &Blocks) -> Blocks {
    lower
        .iter()
        .zip(upper)
        .map(|(l, u)| u.iter().map(|&j| l[j]).collect())
        .collect()
}

/// The block map taking `from` to `to` when `to` is a `!`-permutation of
/// `from`. Equal items are matched left to right.
pub fn between(from: &Config, to: &Config) -> Option<Blocks> {
    let mut out = Vec::new();
    between_node(from, to, &mut out)?;
    Some(out)
}

fn between_node(from: &Config, to: &Config, out: &mut Blocks) -> Option<()> {
    if from.len() != to.len() {
        return None;
    }
    let slot = out.len();
    out.push(vec![]);
    // brackets are matched in order; recurse into the conclusion's brackets
    // in its order so blocks land in the conclusion's preorder
    let from_brackets: Vec<usize> = (0..from.len())
        .filter(|&i| matches!(from.items[i], Item::Bracket(_)))
        .collect();
    let to_brackets: Vec<usize> = (0..to.len())
        .filter(|&i| matches!(to.items[i], Item::Bracket(_)))
        .collect();
    if from_brackets.len() != to_brackets.len() {
        return None;
    }
    for (&fi, &ti) in from_brackets.iter().zip(&to_brackets) {
        match (&from.items[fi], &to.items[ti]) {
            (Item::Bracket(a), Item::Bracket(b)) => between_node(a, b, out)?,
            _ => unreachable!(),
        }
    }
    let mut used = vec![false; from.len()];
    let mut map = Vec::with_capacity(to.len());
    let mut next_fixed = 0;
    for it in &to.items {
        let j = match it {
            Item::Leaf(f) if f.is_bang() => (0..from.len())
                .find(|&j| !used[j] && from.items[j] == Item::Leaf(f.clone()))?,
            _ => {
                while next_fixed < from.len() && from.items[next_fixed].is_bang_leaf() {
                    next_fixed += 1;
                }
                let j = next_fixed;
                next_fixed += 1;
                match (from.items.get(j)?, it) {
                    (Item::Leaf(a), Item::Leaf(b)) if a == b => {}
                    (Item::Bracket(_), Item::Bracket(_)) => {}
                    _ => return None,
                }
                j
            }
        };
        used[j] = true;
        map.push(j);
    }
    out[slot] = map;
    Some(())
}
