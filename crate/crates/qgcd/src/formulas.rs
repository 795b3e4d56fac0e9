//! Closed-form resource expectations for the four library blocks, as
//! functions of the operand width n (defined for n >= 2).

use thiserror::Error;

use crate::resources::ResourceReport;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("unknown block {0:?}; expected one of comparison, conditional-subtraction, conditional-shift, conditional-swap")]
    UnknownBlock(String),
    #[error("formulas are defined for n >= 2, got {0}")]
    WidthTooSmall(usize),
}

/// floor(log2 n) for n >= 1.
pub fn floor_log2(n: usize) -> usize {
    debug_assert!(n >= 1);
    usize::BITS as usize - 1 - n.leading_zeros() as usize
}

/// ceil(log2 n) for n >= 1.
pub fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        floor_log2(n - 1) + 1
    }
}

/// Hamming weight of n.
pub fn popcount(n: usize) -> usize {
    n.count_ones() as usize
}

/// floor(log2(a/b)) with exact rational division, possibly negative.
pub fn floor_log2_ratio(a: usize, b: usize) -> i64 {
    debug_assert!(a >= 1 && b >= 1);
    // Largest t with b * 2^t <= a (t may be negative: smallest |t| with a * 2^|t| >= b).
    if a >= b {
        let mut t = 0i64;
        while b.checked_shl(t as u32 + 1).map_or(false, |v| v <= a) {
            t += 1;
        }
        t
    } else {
        let mut t = -1i64;
        let mut scaled = a * 2;
        while scaled < b {
            scaled *= 2;
            t -= 1;
        }
        t
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockName {
    Comparison,
    ConditionalSubtraction,
    ConditionalShift,
    ConditionalSwap,
}

impl BlockName {
    pub fn parse(name: &str) -> Result<BlockName, FormulaError> {
        match name {
            "comparison" | "comparator" => Ok(BlockName::Comparison),
            "conditional-subtraction" | "conditional-subtract" => Ok(BlockName::ConditionalSubtraction),
            "conditional-shift" => Ok(BlockName::ConditionalShift),
            "conditional-swap" => Ok(BlockName::ConditionalSwap),
            other => Err(FormulaError::UnknownBlock(other.to_string())),
        }
    }

    pub fn all() -> [BlockName; 4] {
        [
            BlockName::Comparison,
            BlockName::ConditionalSubtraction,
            BlockName::ConditionalShift,
            BlockName::ConditionalSwap,
        ]
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            BlockName::Comparison => "comparison",
            BlockName::ConditionalSubtraction => "conditional-subtraction",
            BlockName::ConditionalShift => "conditional-shift",
            BlockName::ConditionalSwap => "conditional-swap",
        }
    }
}

/// Expected census for one block at width n (counts, depth pair, ancillae).
/// NOT gates are unconstrained by the closed forms and reported as zero.
pub fn expected_resources(block: BlockName, n: usize) -> Result<ResourceReport, FormulaError> {
    if n < 2 {
        return Err(FormulaError::WidthTooSmall(n));
    }
    let w1 = popcount(n - 1);
    let l1 = floor_log2(n - 1);
    let report = match block {
        BlockName::Comparison => ResourceReport {
            not_count: 0,
            cnot_count: 2 * n - 2,
            toffoli_count: 6 * n - w1 - 2 * l1 - 7,
            cnot_depth: 2,
            toffoli_depth: 2 * floor_log2(n) + 5,
            total_depth: 0,
            ancillae: 2 * n - l1 - 3,
        },
        BlockName::ConditionalSubtraction => {
            let depth = 3 * l1 as i64 + floor_log2_ratio(n - 1, 3) + 16;
            ResourceReport {
                not_count: 0,
                cnot_count: 2 * n,
                toffoli_count: 14 * n - 11,
                cnot_depth: 2,
                toffoli_depth: depth.max(0) as usize,
                total_depth: 0,
                ancillae: 2 * n - 2,
            }
        }
        BlockName::ConditionalShift | BlockName::ConditionalSwap => ResourceReport {
            not_count: 0,
            cnot_count: 4 * n - 2,
            toffoli_count: n - 1,
            cnot_depth: 2 * ceil_log2(n) + 4,
            toffoli_depth: 2,
            total_depth: 0,
            ancillae: n,
        },
    };
    Ok(report)
}
