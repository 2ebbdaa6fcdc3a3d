//! Exhaustive full-homomorphism search, kept independent of the reduction
//! machinery so it can cross-check it.

use crate::error::{Error, Result};
use crate::model::{SimpleGraph, Vertex};

/// Order cap for both graphs in the oracle.
pub const ORACLE_CAP: usize = 8;

fn check_caps(g: &SimpleGraph, h: &SimpleGraph) -> Result<()> {
    for (what, x) in [("oracle domain", g), ("oracle codomain", h)] {
        if x.order() > ORACLE_CAP {
            return Err(Error::TooLarge {
                what,
                n: x.order(),
                cap: ORACLE_CAP,
            });
        }
    }
    Ok(())
}

/// True iff some total map `V_G → V_H` is a full homomorphism.
pub fn brute_force_full_hom(g: &SimpleGraph, h: &SimpleGraph) -> Result<bool> {
    check_caps(g, h)?;
    let mut found = false;
    walk(g, h, &mut Vec::new(), &mut |_| {
        found = true;
        false
    });
    Ok(found)
}

/// Every full homomorphism `G → H`, in lexicographic order of the maps.
pub fn all_full_homs(g: &SimpleGraph, h: &SimpleGraph) -> Result<Vec<Vec<Vertex>>> {
    check_caps(g, h)?;
    let mut out = Vec::new();
    walk(g, h, &mut Vec::new(), &mut |m| {
        out.push(m.to_vec());
        true
    });
    Ok(out)
}

/// Enumerates maps whose every prefix satisfies the biconditional. The visitor
/// returns false to stop; so does `walk`.
fn walk(
    g: &SimpleGraph,
    h: &SimpleGraph,
    map: &mut Vec<Vertex>,
    visit: &mut dyn FnMut(&[Vertex]) -> bool,
) -> bool {
    let i = map.len();
    if i == g.order() {
        return visit(map);
    }
    for x in 0..h.order() {
        if (0..i).all(|j| g.has_edge(i, j) == h.has_edge(x, map[j])) {
            map.push(x);
            let go_on = walk(g, h, map, visit);
            map.pop();
            if !go_on {
                return false;
            }
        }
    }
    true
}
