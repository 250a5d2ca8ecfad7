//! Count increasing labellings of an ordered tree three ways.
//!
//! $ cargo run --example labellings -- "(()(()()))"

use hooklen::treeoracle::{self, parse_tree};

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "(()(())())".to_string());
    let tree = match parse_tree(&text) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("invalid tree {text:?}: {e}");
            std::process::exit(2);
        }
    };
    println!("tree         {tree}");
    println!("size         {}", tree.size());
    println!("hook lengths {:?}", treeoracle::hook_lengths(&tree));
    println!("hook formula {}", treeoracle::labellings_hook(&tree));
    println!("recursive    {}", treeoracle::labellings_recursive(&tree));
    match treeoracle::labellings_bruteforce(&tree) {
        Ok(count) => println!("brute force  {count}"),
        Err(e) => println!("brute force  skipped: {e}"),
    }
}
