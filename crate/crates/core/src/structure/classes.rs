use std::collections::HashMap;

use crate::error::Result;
use crate::perm::{PermGroup, Permutation, DEFAULT_CAP};

/// One conjugacy class, represented by its lexicographically smallest element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    pub representative: Permutation,
    pub size: u64,
    pub order_of_rep: u64,
}

pub fn conjugacy_classes(group: &PermGroup) -> Result<Vec<ConjClass>> {
    conjugacy_classes_capped(group, DEFAULT_CAP)
}

/// Partitions the elements into orbits under conjugation by the generators.
///
/// Classes come sorted by `(order_of_rep, size, representative)`.
pub fn conjugacy_classes_capped(group: &PermGroup, cap: u64) -> Result<Vec<ConjClass>> {
    let elements = group.elements(cap)?;
    let index: HashMap<&Permutation, usize> =
        elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let gens: Vec<&Permutation> = group.nontrivial_generators().collect();
    let mut seen = vec![false; elements.len()];
    let mut classes = Vec::new();
    let mut queue = Vec::new();
    // Elements are sorted, so the first unseen element is the smallest in its class.
    for start in 0..elements.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        queue.clear();
        queue.push(start);
        let mut head = 0;
        while head < queue.len() {
            let x = &elements[queue[head]];
            for s in &gens {
                let y = x.conjugate_by(s);
                let j = index[&y];
                if !seen[j] {
                    seen[j] = true;
                    queue.push(j);
                }
            }
            head += 1;
        }
        let representative = elements[start].clone();
        classes.push(ConjClass {
            order_of_rep: representative.order(),
            size: queue.len() as u64,
            representative,
        });
    }
    classes.sort_by(|a, b| {
        (a.order_of_rep, a.size, &a.representative).cmp(&(
            b.order_of_rep,
            b.size,
            &b.representative,
        ))
    });
    Ok(classes)
}
