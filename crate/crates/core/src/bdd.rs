//! Ordered binary decision trees over `nv` variables.
//!
//! Trees are built from a truth table by recursive bit de-interleaving
//! ([`plain_bdd`]), reduced by collapsing nodes whose branches are identical
//! ([`reduce`]) and mapped back to naturals either structurally
//! ([`plain_inverse_bdd`]) or by bitvector evaluation ([`ev`]). There is no
//! node sharing: subtrees are owned.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::natbits::Nat;
use crate::pairing::{bitmerge_pair, bitmerge_unpair};
use crate::truthtab::{check_vars, column, fits, ite_tt, mask};
use crate::DEFAULT_MAX_VARS;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    Leaf(bool),
    Ite {
        var: u32,
        then: Box<Node>,
        els: Box<Node>,
    },
}

impl Node {
    pub fn ite(var: u32, then: Node, els: Node) -> Node {
        Node::Ite {
            var,
            then: Box::new(then),
            els: Box::new(els),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Node::Leaf(_))
    }

    pub fn node_count(&self) -> usize {
        match self {
            Node::Leaf(_) => 1,
            Node::Ite { then, els, .. } => 1 + then.node_count() + els.node_count(),
        }
    }

    // Variables strictly decrease downwards and stay below `bound`.
    fn check_order(&self, bound: u32) -> Result<()> {
        match self {
            Node::Leaf(_) => Ok(()),
            Node::Ite { var, then, els } => {
                if *var >= bound {
                    return Err(Error::MalformedBdd(format!(
                        "variable {var} must be below {bound}"
                    )));
                }
                then.check_order(*var)?;
                els.check_order(*var)
            }
        }
    }

    fn has_redundant_test(&self) -> bool {
        match self {
            Node::Leaf(_) => false,
            Node::Ite { then, els, .. } => {
                then == els || then.has_redundant_test() || els.has_redundant_test()
            }
        }
    }
}

/// A decision tree together with its variable count.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bdd {
    nv: u32,
    root: Node,
}

impl Bdd {
    /// Checks that every variable is below `nv` and that variables strictly
    /// decrease along each path.
    pub fn new(nv: u32, root: Node) -> Result<Bdd> {
        root.check_order(nv)?;
        Ok(Bdd { nv, root })
    }

    pub fn nv(&self) -> u32 {
        self.nv
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    pub fn into_root(self) -> Node {
        self.root
    }

    /// No node tests a variable whose two branches are identical.
    pub fn is_reduced(&self) -> bool {
        !self.root.has_redundant_test()
    }

    /// Complete tree of depth `nv` with the root testing `nv - 1`.
    pub fn is_plain(&self) -> bool {
        fn complete(node: &Node, level: u32) -> bool {
            match node {
                Node::Leaf(_) => level == 0,
                Node::Ite { var, then, els } => {
                    level > 0 && *var == level - 1 && complete(then, level - 1) && complete(els, level - 1)
                }
            }
        }
        complete(&self.root, self.nv)
    }
}

/// Complete tree of depth `nv` for the truth table `tt`. At each level the
/// table is de-interleaved: even-position bits feed the then-branch and
/// odd-position bits the else-branch.
pub fn plain_bdd(nv: u32, tt: &Nat) -> Result<Bdd> {
    plain_bdd_with_limit(nv, tt, DEFAULT_MAX_VARS)
}

pub fn plain_bdd_with_limit(nv: u32, tt: &Nat, max_vars: u32) -> Result<Bdd> {
    check_vars(nv, max_vars)?;
    if !fits(nv, tt) {
        return Err(Error::TruthTableOutOfRange { nv });
    }
    Ok(Bdd {
        nv,
        root: isplit(nv, tt),
    })
}

fn isplit(nv: u32, tt: &Nat) -> Node {
    if nv == 0 {
        return Node::Leaf(!tt.is_zero());
    }
    let (hi, lo) = bitmerge_unpair(tt);
    Node::ite(nv - 1, isplit(nv - 1, &hi), isplit(nv - 1, &lo))
}

/// Replaces, bottom-up, every node whose reduced branches are equal by that
/// branch.
pub fn reduce(b: &Bdd) -> Bdd {
    Bdd {
        nv: b.nv,
        root: reduce_node(&b.root),
    }
}

fn reduce_node(node: &Node) -> Node {
    match node {
        Node::Leaf(bit) => Node::Leaf(*bit),
        Node::Ite { var, then, els } => {
            let then = reduce_node(then);
            let els = reduce_node(els);
            if then == els {
                then
            } else {
                Node::ite(*var, then, els)
            }
        }
    }
}

pub fn reduced_bdd(nv: u32, tt: &Nat) -> Result<Bdd> {
    reduced_bdd_with_limit(nv, tt, DEFAULT_MAX_VARS)
}

pub fn reduced_bdd_with_limit(nv: u32, tt: &Nat, max_vars: u32) -> Result<Bdd> {
    Ok(reduce(&plain_bdd_with_limit(nv, tt, max_vars)?))
}

/// Structural code: leaves are their bit, inner nodes re-interleave the codes
/// of their branches. Inverts [`plain_bdd`] on complete trees only.
pub fn plain_inverse_bdd(b: &Bdd) -> Nat {
    fn code(node: &Node) -> Nat {
        match node {
            Node::Leaf(bit) => Nat::from(*bit as u8),
            Node::Ite { then, els, .. } => bitmerge_pair(&code(then), &code(els)),
        }
    }
    code(&b.root)
}

/// Bitvector evaluation: constants become `0` and the all-ones mask, and each
/// node combines its branches with [`ite_tt`] under its variable's column.
/// Recovers the truth table from both plain and reduced trees.
pub fn ev(b: &Bdd) -> Result<Nat> {
    ev_with_limit(b, DEFAULT_MAX_VARS)
}

pub fn ev_with_limit(b: &Bdd, max_vars: u32) -> Result<Nat> {
    check_vars(b.nv, max_vars)?;
    let all_ones = mask(b.nv);
    let columns: Vec<Nat> = (0..b.nv).map(|k| column(b.nv, &all_ones, k)).collect();
    Ok(eval_with_mask(&b.root, &all_ones, &columns))
}

fn eval_with_mask(node: &Node, all_ones: &Nat, columns: &[Nat]) -> Nat {
    match node {
        Node::Leaf(false) => Nat::zero(),
        Node::Leaf(true) => all_ones.clone(),
        Node::Ite { var, then, els } => {
            let t = eval_with_mask(then, all_ones, columns);
            let e = eval_with_mask(els, all_ones, columns);
            ite_tt(&columns[*var as usize], &t, &e)
        }
    }
}
