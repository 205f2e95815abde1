//! Invariant subspaces of sp(4) under the two maximal Levi subgroups.

use crate::sp4::{BasisVector, Root, Sp4Element};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Levi {
    /// `diag(x·A', A)` with `A ∈ GL(2)`.
    Siegel,
    /// `diag(x, A, det(A)/x)` with `A ∈ GL(2)`.
    Klingen,
}

/// How the Levi acts on a block, in terms of the GL(2) factor `μ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockKind {
    Trivial,
    /// `Ad∘μ` on the traceless part of the Levi.
    Adjoint,
    /// Siegel upper unipotent radical: `Ad∘μ` times the top/bottom ratio.
    UpperAdjoint,
    /// Siegel lower unipotent radical: `Ad∘μ` times the bottom/top ratio.
    LowerAdjoint,
    /// Klingen: `std∘μ`.
    Std,
    /// Klingen: `std∘μ ⊗ det∘μ⁻¹`.
    StdDual,
    /// Klingen: `det∘μ` (the `L_{2e1}` line).
    Det,
    /// Klingen: `det∘μ⁻¹` (the `L_{-2e1}` line).
    DetInv,
}

#[derive(Debug, Clone)]
pub struct LeviBlock {
    pub kind: BlockKind,
    pub label: &'static str,
    pub basis: Vec<Sp4Element>,
}

impl LeviBlock {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Debug, Clone)]
pub struct LeviBlockTable {
    pub levi: Levi,
    pub blocks: Vec<LeviBlock>,
}

impl LeviBlockTable {
    pub fn dimension(&self) -> usize {
        self.blocks.iter().map(LeviBlock::dim).sum()
    }
}

fn h1() -> Sp4Element {
    BasisVector::H1.element()
}

fn h2() -> Sp4Element {
    BasisVector::H2.element()
}

/// Blocks in the order trivial, adjoint, upper, lower.
pub fn siegel_table() -> LeviBlockTable {
    use Root::*;
    LeviBlockTable {
        levi: Levi::Siegel,
        blocks: vec![
            LeviBlock {
                kind: BlockKind::Trivial,
                label: "trivial",
                basis: vec![h1().add(&h2())],
            },
            LeviBlock {
                kind: BlockKind::Adjoint,
                label: "Ad∘μ",
                basis: vec![MinusE1PlusE2.vector(), h1().sub(&h2()), E1MinusE2.vector()],
            },
            LeviBlock {
                kind: BlockKind::UpperAdjoint,
                label: "(det⁻¹⊗Ad)⊗std",
                basis: vec![TwoE2.vector(), E1PlusE2.vector(), TwoE1.vector()],
            },
            LeviBlock {
                kind: BlockKind::LowerAdjoint,
                label: "(det⊗Ad)⊗std⁻¹",
                basis: vec![
                    MinusTwoE1.vector(),
                    MinusE1MinusE2.vector(),
                    MinusTwoE2.vector(),
                ],
            },
        ],
    }
}

/// Blocks in the order trivial, adjoint, std, std⊗det⁻¹, det, det⁻¹.
pub fn klingen_table() -> LeviBlockTable {
    use Root::*;
    LeviBlockTable {
        levi: Levi::Klingen,
        blocks: vec![
            LeviBlock {
                kind: BlockKind::Trivial,
                label: "trivial",
                basis: vec![h1()],
            },
            LeviBlock {
                kind: BlockKind::Adjoint,
                label: "Ad∘μ",
                basis: vec![TwoE2.vector(), h2(), MinusTwoE2.vector()],
            },
            LeviBlock {
                kind: BlockKind::Std,
                label: "std∘μ",
                basis: vec![E1PlusE2.vector(), E1MinusE2.vector()],
            },
            LeviBlock {
                kind: BlockKind::StdDual,
                label: "std∘μ⊗det⁻¹",
                basis: vec![MinusE1PlusE2.vector(), MinusE1MinusE2.vector()],
            },
            LeviBlock {
                kind: BlockKind::Det,
                label: "det∘μ",
                basis: vec![TwoE1.vector()],
            },
            LeviBlock {
                kind: BlockKind::DetInv,
                label: "det∘μ⁻¹",
                basis: vec![MinusTwoE1.vector()],
            },
        ],
    }
}
