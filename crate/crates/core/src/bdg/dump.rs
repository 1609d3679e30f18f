//! Plain-text dumps of blocks for debugging; one line per entry.

use std::fmt::Write;

use super::{BdGBlocks, Block, QuasiPeriodicState};

fn write_blocks(blocks: &[Block]) -> String {
    let mut out = String::from("theta_index,row,col,re,im\n");
    for (j, b) in blocks.iter().enumerate() {
        for r in 0..b.nrows() {
            for c in 0..b.ncols() {
                let v = b.read(r, c);
                writeln!(out, "{j},{r},{c},{:e},{:e}", v.re, v.im).expect("writing to a String");
            }
        }
    }
    out
}

pub fn dump_blocks(blocks: &BdGBlocks) -> String {
    write_blocks(blocks.blocks())
}

pub fn dump_state(state: &QuasiPeriodicState) -> String {
    write_blocks(state.blocks())
}
