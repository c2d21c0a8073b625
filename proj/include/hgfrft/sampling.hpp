#pragma once

#include <vector>

#include "hgfrft/filtering.hpp"
#include "hgfrft/transform.hpp"

namespace hgfrft {

/// Samples W of a bandlimited space together with the selection matrix D
/// (|W| x mn, one unit entry per row) and reconstruction R = U_K (D U_K)^+.
struct SamplingPlan {
    std::vector<Index> w;
    FrequencyRegion support;
    ComplexMatrix d;
    ComplexMatrix r;
    double alpha = 0.0;
    double beta = 0.0;
};

/// sigma_min(D U_K) at or below this is treated as rank deficient.
inline constexpr double kRankTolerance = 1e-10;

/// Joint synthesis vectors of the support pairs, ascending flat order (mn x K).
ComplexMatrix bandlimited_basis(const FractionalOperator& op_h, const FractionalOperator& op_g,
                                const FrequencyRegion& support);

ComplexMatrix selection_matrix(const std::vector<Index>& w, Index total);

/// R = U_K (D U_K)^+; throws RankDeficient when sigma_min(D U_K) <= kRankTolerance
/// or when D has fewer rows than U_K has columns.
ComplexMatrix reconstruction_operator(const ComplexMatrix& d, const ComplexMatrix& u_k);

/// Greedy row selection: each step adds the unused row that maximizes
/// sigma_min of the selected rows. Near-ties (1e-12 relative) keep the
/// smaller row index.
std::vector<Index> greedy_sample(const ComplexMatrix& u_k, Index num_samples);

SamplingPlan make_plan(const FractionalOperator& op_h, const FractionalOperator& op_g,
                       const FrequencyRegion& support, std::vector<Index> w);

/// Greedy plan with |W| = num_samples (default K).
SamplingPlan greedy_plan(const FractionalOperator& op_h, const FractionalOperator& op_g,
                         const FrequencyRegion& support, Index num_samples = -1);

ComplexVector sample(const JointSignal& sig, const std::vector<Index>& w);

JointSignal recover(const ComplexVector& samples, const SamplingPlan& plan);

/// ||f_rec - f||_2 over the vectorized signals.
double recovery_error(const JointSignal& f_rec, const JointSignal& f);

/// The K pairs with the largest spectral magnitude (ties: smaller flat index).
FrequencyRegion top_support(const JointSpectrum& spec, Index k);

struct GridSearchOptions {
    double alpha_lo = -2.0;
    double alpha_hi = 2.0;
    double beta_lo = -2.0;
    double beta_hi = 2.0;
    double coarse_step = 0.25;
    double fine_step = 0.01;
    unsigned threads = 0;  // 0 = hardware concurrency
};

struct GridPoint {
    double alpha;
    double beta;
    double error;  // +inf where the greedy selection was rank deficient
};

struct GridSearchResult {
    double alpha;
    double beta;
    double error;
    std::vector<GridPoint> coarse;
    std::vector<GridPoint> fine;
};

/// Evenly spaced values lo, lo + step, ... up to hi (inclusive within 1e-9 step).
std::vector<double> grid_values(double lo, double hi, double step);

/// ||R noise||_2 for the plan built from the top-K support of `clean` at (alpha, beta).
double grid_point_error(const JointSignal& clean, const ComplexVector& noise, Index support_size,
                        const OperatorFamilyPtr& family_h, const OperatorFamilyPtr& family_g, double alpha,
                        double beta);

/// Coarse sweep over the option ranges, then one refinement pass of
/// +-coarse_step around the coarse optimum at fine_step. The refined optimum
/// replaces the coarse one only when strictly smaller. Ties resolve to the
/// lexicographically smaller (alpha, beta).
GridSearchResult grid_search(const JointSignal& clean, const ComplexVector& noise, Index support_size,
                             const OperatorFamilyPtr& family_h, const OperatorFamilyPtr& family_g,
                             const GridSearchOptions& options = {});

}  // namespace hgfrft
