//! Run summaries and the two-sided Wilcoxon signed-rank comparison.

mod compare;
mod summary;
mod wilcoxon;

pub use compare::{
    pairwise_compare, ComparisonTable, Counts, PairCsvRow, PairingMode, PairwiseRow,
    ProblemComparison, ProblemCsvRow,
};
pub use summary::{mean, median, quantile, sample_std, summarize, RunSummary};
pub use wilcoxon::{
    two_sided, wilcoxon, wilcoxon_two_sided, Method, SignedRanks, Verdict, WilcoxonResult,
    EXACT_LIMIT, MIN_EFFECTIVE,
};
