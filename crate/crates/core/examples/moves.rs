//! Local moves: apply the two-, three- and four-vertex moves repeatedly and
//! compare the result with the orbit closure computed from the order.

use borel_orbits::degeneration::{apply_moves, closure_set, move_closure, MoveTable};
use borel_orbits::olp::OrientedLinkPattern;

fn main() -> borel_orbits::Result<()> {
    println!("{} moves in the table", MoveTable::standard().moves().len());

    let p = OrientedLinkPattern::from_pairs(4, &[(1, 4), (2, 3)])?;
    println!("one step from {p}:");
    for q in apply_moves(&p) {
        println!("  {q}");
    }

    let start = OrientedLinkPattern::from_pairs(5, &[(1, 5), (2, 4)])?;
    let by_moves = move_closure(&start)?;
    let by_order = closure_set(&start)?;
    println!(
        "closure of {start}: {} patterns by moves, {} by the order, equal: {}",
        by_moves.len(),
        by_order.len(),
        by_moves == by_order
    );
    Ok(())
}
