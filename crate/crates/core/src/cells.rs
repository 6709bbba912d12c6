//! Which cell `S_C` contains `A^n` as `n` grows.
//!
//! Stabilization observed in a finite window is evidence only; the status
//! values below always mean "within the examined window".

use crate::degree::{canonical_cell, FunctionalIndex, Powers};
use crate::error::{Error, Result};
use crate::IntMatrix;

/// Cell data for one power.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CellStep {
    /// Exponent `n` (1-based).
    pub n: usize,
    /// Lexicographically least attaining functional.
    pub cell: FunctionalIndex,
    /// Number of attaining functionals; above one on a cell boundary.
    pub ties: u64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Status<T> {
    /// Constant label from index `from` to the end of the window.
    Stabilized {
        cell: T,
        from: usize,
    },
    /// Labels repeat with minimal period `period` from index `from` on.
    Periodic {
        period: usize,
        from: usize,
    },
    Unresolved,
}

pub type TraceStatus = Status<FunctionalIndex>;

impl<T> Status<T> {
    pub fn name(&self) -> &'static str {
        match self {
            Status::Stabilized { .. } => "STABILIZED",
            Status::Periodic { .. } => "PERIODIC",
            Status::Unresolved => "UNRESOLVED",
        }
    }

    pub fn is_stabilized(&self) -> bool {
        matches!(self, Status::Stabilized { .. })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CellTrace {
    pub steps: Vec<CellStep>,
    /// Exponents `n >= 2` whose canonical cell differs from that of `n - 1`.
    pub switch_indices: Vec<usize>,
    pub status: TraceStatus,
}

impl CellTrace {
    pub fn window(&self) -> usize {
        self.steps.len()
    }

    pub fn cells(&self) -> Vec<FunctionalIndex> {
        self.steps.iter().map(|s| s.cell.clone()).collect()
    }
}

/// Canonical cells of `A^1 .. A^window` and the detected tail behaviour.
pub fn cell_trace(a: &IntMatrix, window: usize) -> Result<CellTrace> {
    a.require_full_rank()?;
    if window < 2 {
        return Err(Error::InvalidArgument(
            "cell trace window must be at least 2".into(),
        ));
    }
    let steps: Vec<CellStep> = Powers::new(a.clone())
        .take(window)
        .enumerate()
        .map(|(i, m)| {
            let (cell, ties) =
                canonical_cell(&m).expect("powers of a full-rank matrix are nonzero");
            CellStep {
                n: i + 1,
                cell,
                ties,
            }
        })
        .collect();
    let switch_indices = steps
        .windows(2)
        .filter(|w| w[0].cell != w[1].cell)
        .map(|w| w[1].n)
        .collect();
    let cells: Vec<_> = steps.iter().map(|s| s.cell.clone()).collect();
    let status = detect_stabilization(&cells);
    Ok(CellTrace {
        steps,
        switch_indices,
        status,
    })
}

/// Classifies the tail of a label sequence (index 1 is the first label).
///
/// * `Stabilized` when the final `ceil(N/2)` labels agree.
/// * `Periodic` when the final `ceil(N/2)` labels repeat with some minimal
///   period `2 <= p <= floor(N/4)`, so at least two full periods are seen.
/// * `Unresolved` otherwise.
pub fn detect_stabilization<T: Clone + PartialEq>(labels: &[T]) -> Status<T> {
    let n = labels.len();
    if n == 0 {
        return Status::Unresolved;
    }
    let tail_start = n - n.div_ceil(2);
    let holds_from = |p: usize| -> Option<usize> {
        let tail_ok = (tail_start..n - p.min(n)).all(|i| labels[i] == labels[i + p]);
        if !tail_ok {
            return None;
        }
        let mut from = tail_start;
        while from > 0 && labels[from - 1] == labels[from - 1 + p] {
            from -= 1;
        }
        Some(from)
    };
    if let Some(from) = holds_from(1) {
        return Status::Stabilized {
            cell: labels[n - 1].clone(),
            from: from + 1,
        };
    }
    for p in 2..=n / 4 {
        if let Some(from) = holds_from(p) {
            return Status::Periodic {
                period: p,
                from: from + 1,
            };
        }
    }
    Status::Unresolved
}
