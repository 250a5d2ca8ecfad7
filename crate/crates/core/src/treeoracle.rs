//! Brute-force ground truth over ordered (plane) trees.
//!
//! Everything here works directly on explicit trees: exhaustive enumeration,
//! hook lengths, weighted sums and three independent counts of increasing
//! labellings. None of it uses generating functions, which is what makes it
//! usable as an oracle for the series identities in [`crate::hookcalc`].

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::families::{weight_with_table, DegreeWeightFamily};
use crate::hookcalc::HookWeightFunction;
use crate::rational::{factorial, Rational};

/// Largest tree accepted by [`labellings_bruteforce`].
pub const BRUTEFORCE_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("unbalanced parentheses at byte {offset}")]
    UnbalancedParens { offset: usize },
    #[error("unexpected character {found:?} at byte {offset}")]
    UnexpectedChar { found: char, offset: usize },
    #[error("trailing input after the root at byte {offset}")]
    TrailingInput { offset: usize },
    #[error("hook length {hook} exceeds the rho table (defined up to {len})")]
    RhoRangeExceeded { hook: usize, len: usize },
    #[error("tree of size {size} exceeds the brute-force limit {limit}")]
    SizeLimitExceeded { size: usize, limit: usize },
}

/// A rooted tree whose children are ordered.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedTree {
    children: Vec<OrderedTree>,
    size: usize,
}

impl OrderedTree {
    pub fn leaf() -> Self {
        Self {
            children: Vec::new(),
            size: 1,
        }
    }

    pub fn node(children: Vec<OrderedTree>) -> Self {
        let size = 1 + children.iter().map(|c| c.size).sum::<usize>();
        Self { children, size }
    }

    /// A chain of `n` vertices.
    pub fn path(n: usize) -> Self {
        assert!(n >= 1);
        (1..n).fold(Self::leaf(), |t, _| Self::node(vec![t]))
    }

    pub fn children(&self) -> &[OrderedTree] {
        &self.children
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn max_out_degree(&self) -> usize {
        self.children
            .iter()
            .map(OrderedTree::max_out_degree)
            .max()
            .unwrap_or(0)
            .max(self.children.len())
    }

    /// Parent index of every vertex in preorder (`None` for the root).
    pub fn parents(&self) -> Vec<Option<usize>> {
        fn walk(t: &OrderedTree, parent: Option<usize>, out: &mut Vec<Option<usize>>) {
            let me = out.len();
            out.push(parent);
            for c in &t.children {
                walk(c, Some(me), out);
            }
        }
        let mut out = Vec::with_capacity(self.size);
        walk(self, None, &mut out);
        out
    }
}

impl fmt::Display for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for c in &self.children {
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrderedTree{self}")
    }
}

impl FromStr for OrderedTree {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_tree(s)
    }
}

/// Parses a balanced-parenthesis word; each matched pair is a vertex and the
/// outermost pair is the root. Whitespace is ignored.
pub fn parse_tree(text: &str) -> Result<OrderedTree, TreeError> {
    // Each open vertex collects its finished children.
    let mut stack: Vec<Vec<OrderedTree>> = Vec::new();
    let mut root: Option<OrderedTree> = None;
    for (offset, ch) in text.char_indices() {
        match ch {
            '(' => {
                if root.is_some() {
                    return Err(TreeError::TrailingInput { offset });
                }
                stack.push(Vec::new());
            }
            ')' => {
                let children = stack.pop().ok_or(TreeError::UnbalancedParens { offset })?;
                let done = OrderedTree::node(children);
                match stack.last_mut() {
                    Some(parent) => parent.push(done),
                    None => root = Some(done),
                }
            }
            c if c.is_whitespace() => {}
            found => return Err(TreeError::UnexpectedChar { found, offset }),
        }
    }
    if !stack.is_empty() {
        return Err(TreeError::UnbalancedParens { offset: text.len() });
    }
    root.ok_or(TreeError::UnbalancedParens { offset: text.len() })
}

pub fn format_tree(t: &OrderedTree) -> String {
    t.to_string()
}

/// Compositions of `total` into exactly `parts` positive parts, lexicographic.
fn compositions(total: usize, parts: usize) -> Box<dyn Iterator<Item = Vec<usize>>> {
    if parts == 0 {
        return if total == 0 {
            Box::new(std::iter::once(Vec::new()))
        } else {
            Box::new(std::iter::empty())
        };
    }
    if total < parts {
        return Box::new(std::iter::empty());
    }
    Box::new((1..=total - (parts - 1)).flat_map(move |first| {
        compositions(total - first, parts - 1).map(move |mut rest| {
            rest.insert(0, first);
            rest
        })
    }))
}

/// Every ordered sequence of trees with the given sizes.
fn forests(sizes: Vec<usize>) -> Box<dyn Iterator<Item = Vec<OrderedTree>>> {
    match sizes.split_first() {
        None => Box::new(std::iter::once(Vec::new())),
        Some((&first, rest)) => {
            let rest = rest.to_vec();
            Box::new(enumerate_trees(first).flat_map(move |t| {
                forests(rest.clone()).map(move |mut f| {
                    f.insert(0, t.clone());
                    f
                })
            }))
        }
    }
}

/// Streams every ordered tree with exactly `n` vertices, each once.
///
/// Trees are produced by root degree `j = 1, 2, ...`, then by compositions of
/// `n - 1` into `j` subtree sizes in lexicographic order, then recursively.
pub fn enumerate_trees(n: usize) -> Box<dyn Iterator<Item = OrderedTree>> {
    match n {
        0 => Box::new(std::iter::empty()),
        1 => Box::new(std::iter::once(OrderedTree::leaf())),
        _ => Box::new(
            (1..n)
                .flat_map(move |j| compositions(n - 1, j))
                .flat_map(forests)
                .map(OrderedTree::node),
        ),
    }
}

/// Subtree sizes, root first, in depth-first preorder.
pub fn hook_lengths(t: &OrderedTree) -> Vec<usize> {
    fn walk(t: &OrderedTree, out: &mut Vec<usize>) {
        out.push(t.size);
        for c in &t.children {
            walk(c, out);
        }
    }
    let mut out = Vec::with_capacity(t.size);
    walk(t, &mut out);
    out
}

/// Number of ancestors of every vertex, itself included, in preorder.
pub fn ancestor_counts(t: &OrderedTree) -> Vec<usize> {
    fn walk(t: &OrderedTree, depth: usize, out: &mut Vec<usize>) {
        out.push(depth);
        for c in &t.children {
            walk(c, depth + 1, out);
        }
    }
    let mut out = Vec::with_capacity(t.size);
    walk(t, 1, &mut out);
    out
}

/// `prod_v rho(h_v)`.
pub fn tree_weight_hook(t: &OrderedTree, rho: &HookWeightFunction) -> Result<Rational, TreeError> {
    let mut acc = Rational::one();
    for h in hook_lengths(t) {
        let r = rho.get(h).ok_or(TreeError::RhoRangeExceeded {
            hook: h,
            len: rho.len(),
        })?;
        acc *= r;
    }
    Ok(acc)
}

/// `sum over ordered trees T with n vertices of w_deg(T) w_hook(T)`.
pub fn weighted_sum(
    n: usize,
    phi: &DegreeWeightFamily,
    rho: &HookWeightFunction,
) -> Result<Rational, TreeError> {
    if n == 0 {
        return Ok(Rational::zero());
    }
    let table = phi.coefficients(n - 1);
    let mut total = Rational::zero();
    for t in enumerate_trees(n) {
        let w = weight_with_table(&table, &t);
        if w.is_zero() {
            continue;
        }
        total += w * tree_weight_hook(&t, rho)?;
    }
    Ok(total)
}

/// `n! / prod_v h_v`, left as a rational so integrality can be checked.
pub fn labellings_hook(t: &OrderedTree) -> Rational {
    let hooks: BigUint = hook_lengths(t).into_iter().map(BigUint::from).product();
    Rational::new(BigInt::from(factorial(t.size)), BigInt::from(hooks))
}

/// `L(T) = (n-1)! / prod_i n_i! * prod_i L(T_i)` over the root subtrees.
pub fn labellings_recursive(t: &OrderedTree) -> BigUint {
    let mut count = factorial(t.size - 1);
    let mut denom = BigUint::one();
    for c in &t.children {
        denom *= factorial(c.size);
        count *= labellings_recursive(c);
    }
    count / denom
}

/// Counts bijections `{1..n} -> vertices` whose labels increase away from the
/// root, by checking every permutation.
pub fn labellings_bruteforce(t: &OrderedTree) -> Result<u64, TreeError> {
    if t.size > BRUTEFORCE_LIMIT {
        return Err(TreeError::SizeLimitExceeded {
            size: t.size,
            limit: BRUTEFORCE_LIMIT,
        });
    }
    let parents = t.parents();
    let n = t.size;
    let count = (1..=n)
        .permutations(n)
        .filter(|labels| {
            parents
                .iter()
                .enumerate()
                .all(|(v, p)| p.is_none_or(|p| labels[p] < labels[v]))
        })
        .count();
    Ok(count as u64)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::families::Builtin;
    use crate::rational::{frac, int};

    fn tree(s: &str) -> OrderedTree {
        s.parse().unwrap()
    }

    fn catalan(n: usize) -> usize {
        (0..n).fold(1usize, |c, k| c * 2 * (2 * k + 1) / (k + 2))
    }

    #[test]
    fn catalan_helper() {
        assert_eq!(
            (0..8).map(catalan).collect::<Vec<_>>(),
            vec![1, 1, 2, 5, 14, 42, 132, 429]
        );
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_trees(1).count(), 1);
        let three: Vec<String> = enumerate_trees(3).map(|t| t.to_string()).collect();
        assert_eq!(three, vec!["((()))", "(()())"]);
        assert_eq!(enumerate_trees(5).count(), 14);
        assert_eq!(enumerate_trees(0).count(), 0);
    }

    #[test]
    fn enumeration_counts_and_uniqueness() {
        for n in 1..=10 {
            let words: Vec<String> = enumerate_trees(n).map(|t| t.to_string()).collect();
            assert_eq!(words.len(), catalan(n - 1), "n = {n}");
            let distinct: HashSet<&String> = words.iter().collect();
            assert_eq!(distinct.len(), words.len(), "duplicates at n = {n}");
            assert!(enumerate_trees(n).all(|t| t.size() == n));
        }
    }

    #[test]
    fn enumeration_is_deterministic_and_ordered_by_root_degree() {
        let a: Vec<_> = enumerate_trees(6).collect();
        let b: Vec<_> = enumerate_trees(6).collect();
        assert_eq!(a, b);
        let degrees: Vec<usize> = a.iter().map(|t| t.children().len()).collect();
        assert!(degrees.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn hook_examples() {
        assert_eq!(hook_lengths(&tree("()")), vec![1]);
        assert_eq!(hook_lengths(&tree("((()))")), vec![3, 2, 1]);
        assert_eq!(hook_lengths(&tree("(()())")), vec![3, 1, 1]);
        assert_eq!(hook_lengths(&tree("((())())")), vec![4, 2, 1, 1]);
    }

    #[test]
    fn hook_sum_counts_ancestor_pairs() {
        for n in 1..=8 {
            for t in enumerate_trees(n) {
                let hooks: usize = hook_lengths(&t).iter().sum();
                let ancestors: usize = ancestor_counts(&t).iter().sum();
                assert_eq!(hooks, ancestors, "{t}");
            }
        }
    }

    #[test]
    fn hook_weight_examples() {
        let c = HookWeightFunction::given(vec![frac(7, 3)]);
        assert_eq!(tree_weight_hook(&tree("()"), &c).unwrap(), frac(7, 3));
        let r = HookWeightFunction::reciprocal(3);
        assert_eq!(tree_weight_hook(&tree("((()))"), &r).unwrap(), frac(1, 6));
        assert_eq!(tree_weight_hook(&tree("(()())"), &r).unwrap(), frac(1, 3));
        let short = HookWeightFunction::one(2);
        assert_eq!(
            tree_weight_hook(&tree("((()))"), &short),
            Err(TreeError::RhoRangeExceeded { hook: 3, len: 2 })
        );
    }

    #[test]
    fn weighted_sum_examples() {
        let binary = DegreeWeightFamily::builtin(Builtin::Binary).unwrap();
        let plane = DegreeWeightFamily::builtin(Builtin::Plane).unwrap();
        for n in 1..=8 {
            let r = HookWeightFunction::reciprocal(n);
            assert_eq!(weighted_sum(n, &binary, &r).unwrap(), int(1), "n = {n}");
            let one = HookWeightFunction::one(n);
            assert_eq!(
                weighted_sum(n, &plane, &one).unwrap(),
                int(catalan(n - 1) as i64)
            );
        }
        let phi = DegreeWeightFamily::parse_expr("5/2 + t^2", Default::default()).unwrap();
        let rho = HookWeightFunction::given(vec![frac(2, 3)]);
        assert_eq!(weighted_sum(1, &phi, &rho).unwrap(), frac(5, 3));
    }

    #[test]
    fn labelling_examples() {
        for (word, expected) in [("((()))", 1u64), ("(()())", 2), ("()", 1), ("((())())", 3)] {
            let t = tree(word);
            assert_eq!(labellings_hook(&t), int(expected as i64), "{word}");
            assert_eq!(labellings_recursive(&t), BigUint::from(expected), "{word}");
            assert_eq!(labellings_bruteforce(&t).unwrap(), expected, "{word}");
        }
        let big = OrderedTree::path(9);
        assert_eq!(
            labellings_bruteforce(&big),
            Err(TreeError::SizeLimitExceeded { size: 9, limit: 8 })
        );
    }

    #[test]
    fn labelling_oracles_agree() {
        for n in 1..=6 {
            for t in enumerate_trees(n) {
                let brute = labellings_bruteforce(&t).unwrap();
                assert_eq!(labellings_hook(&t), int(brute as i64), "{t}");
                assert_eq!(labellings_recursive(&t), BigUint::from(brute), "{t}");
            }
        }
    }

    #[test]
    fn parse_format_examples() {
        assert_eq!(tree("()"), OrderedTree::leaf());
        assert_eq!(
            tree("(()())"),
            OrderedTree::node(vec![OrderedTree::leaf(), OrderedTree::leaf()])
        );
        assert_eq!(tree("((()))"), OrderedTree::path(3));
        assert_eq!(tree(" ( ( ) ) "), OrderedTree::path(2));
        for n in 1..=7 {
            for t in enumerate_trees(n) {
                let word = format_tree(&t);
                assert_eq!(format_tree(&tree(&word)), word);
            }
        }
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            parse_tree("(()"),
            Err(TreeError::UnbalancedParens { offset: 3 })
        );
        assert_eq!(
            parse_tree("())"),
            Err(TreeError::UnbalancedParens { offset: 2 })
        );
        assert_eq!(
            parse_tree(""),
            Err(TreeError::UnbalancedParens { offset: 0 })
        );
        assert_eq!(
            parse_tree("()()"),
            Err(TreeError::TrailingInput { offset: 2 })
        );
        assert_eq!(
            parse_tree("(x)"),
            Err(TreeError::UnexpectedChar {
                found: 'x',
                offset: 1
            })
        );
    }
}
