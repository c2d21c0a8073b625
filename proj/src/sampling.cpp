#include "hgfrft/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

namespace hgfrft {

ComplexMatrix bandlimited_basis(const FractionalOperator& op_h, const FractionalOperator& op_g,
                                const FrequencyRegion& support)
{
    if (support.empty()) {
        throw Error(ErrorCode::InvalidArgument, "bandlimited support is empty");
    }
    const Index n = op_g.dim();
    if (support.m() != op_h.dim() || support.n() != n) {
        throw Error(ErrorCode::IndexOutOfRange, "support grid differs from operator sizes");
    }
    const ComplexMatrix& syn_h = op_h.inverse().mat();
    const ComplexMatrix& syn_g = op_g.inverse().mat();
    const auto flat = support.flat();
    ComplexMatrix u(op_h.dim() * n, static_cast<Index>(flat.size()));
    for (std::size_t c = 0; c < flat.size(); ++c) {
        const Index i = flat[c] / n;
        const Index j = flat[c] % n;
        for (Index a = 0; a < op_h.dim(); ++a) {
            u.col(static_cast<Index>(c)).segment(a * n, n) = syn_h(a, i) * syn_g.col(j);
        }
    }
    return u;
}

ComplexMatrix selection_matrix(const std::vector<Index>& w, Index total)
{
    ComplexMatrix d = ComplexMatrix::Zero(static_cast<Index>(w.size()), total);
    for (std::size_t t = 0; t < w.size(); ++t) {
        if (w[t] < 0 || w[t] >= total) {
            throw Error(ErrorCode::IndexOutOfRange, "sample index " + std::to_string(w[t]) + " outside signal");
        }
        d(static_cast<Index>(t), w[t]) = 1.0;
    }
    return d;
}

ComplexMatrix reconstruction_operator(const ComplexMatrix& d, const ComplexMatrix& u_k)
{
    if (d.cols() != u_k.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "selection width differs from basis height");
    }
    const Index k = u_k.cols();
    if (d.rows() < k) {
        throw Error(ErrorCode::RankDeficient,
                    std::to_string(d.rows()) + " samples cannot determine " + std::to_string(k) + " coefficients");
    }
    const ComplexMatrix du = d * u_k;
    const double smin = linalg::sigma_min(du);
    if (smin <= kRankTolerance) {
        throw Error(ErrorCode::RankDeficient, "sigma_min(D U_K) = " + std::to_string(smin));
    }
    return u_k * linalg::pinv(du);
}

std::vector<Index> greedy_sample(const ComplexMatrix& u_k, Index num_samples)
{
    const Index rows = u_k.rows();
    if (num_samples < 1) {
        throw Error(ErrorCode::InvalidArgument, "need at least one sample");
    }
    if (num_samples > rows) {
        throw Error(ErrorCode::InvalidArgument,
                    "cannot pick " + std::to_string(num_samples) + " of " + std::to_string(rows) + " rows");
    }
    std::vector<Index> chosen;
    std::vector<char> used(static_cast<std::size_t>(rows), 0);
    ComplexMatrix sub(0, u_k.cols());
    for (Index step = 0; step < num_samples; ++step) {
        ComplexMatrix trial(sub.rows() + 1, u_k.cols());
        trial.topRows(sub.rows()) = sub;
        Index best_row = -1;
        double best = -1.0;
        for (Index j = 0; j < rows; ++j) {
            if (used[j]) {
                continue;
            }
            trial.row(sub.rows()) = u_k.row(j);
            const double s = linalg::sigma_min(trial);
            if (best_row < 0 || s > best + 1e-12 * std::max(1.0, best)) {
                best = s;
                best_row = j;
            }
        }
        used[best_row] = 1;
        chosen.push_back(best_row);
        trial.row(sub.rows()) = u_k.row(best_row);
        sub = std::move(trial);
    }
    return chosen;
}

SamplingPlan make_plan(const FractionalOperator& op_h, const FractionalOperator& op_g,
                       const FrequencyRegion& support, std::vector<Index> w)
{
    SamplingPlan plan;
    const ComplexMatrix u = bandlimited_basis(op_h, op_g, support);
    plan.d = selection_matrix(w, u.rows());
    plan.r = reconstruction_operator(plan.d, u);
    plan.w = std::move(w);
    plan.support = support;
    plan.alpha = op_h.order;
    plan.beta = op_g.order;
    return plan;
}

SamplingPlan greedy_plan(const FractionalOperator& op_h, const FractionalOperator& op_g,
                         const FrequencyRegion& support, Index num_samples)
{
    const ComplexMatrix u = bandlimited_basis(op_h, op_g, support);
    const Index count = num_samples < 0 ? u.cols() : num_samples;
    return make_plan(op_h, op_g, support, greedy_sample(u, count));
}

ComplexVector sample(const JointSignal& sig, const std::vector<Index>& w)
{
    const ComplexVector v = sig.vec();
    ComplexVector out(static_cast<Index>(w.size()));
    for (std::size_t t = 0; t < w.size(); ++t) {
        if (w[t] < 0 || w[t] >= v.size()) {
            throw Error(ErrorCode::IndexOutOfRange, "sample index " + std::to_string(w[t]) + " outside signal");
        }
        out[static_cast<Index>(t)] = v[w[t]];
    }
    return out;
}

JointSignal recover(const ComplexVector& samples, const SamplingPlan& plan)
{
    if (samples.size() != static_cast<Index>(plan.w.size())) {
        throw Error(ErrorCode::DimensionMismatch,
                    "got " + std::to_string(samples.size()) + " samples for a plan of " +
                        std::to_string(plan.w.size()));
    }
    return JointSignal::from_vec(plan.support.m(), plan.support.n(), plan.r * samples);
}

double recovery_error(const JointSignal& f_rec, const JointSignal& f)
{
    if (f_rec.m() != f.m() || f_rec.n() != f.n()) {
        throw Error(ErrorCode::DimensionMismatch, "signals differ in shape");
    }
    return (f_rec.x - f.x).norm();
}

FrequencyRegion top_support(const JointSpectrum& spec, Index k)
{
    const ComplexVector c = spec.vec();
    if (k < 1 || k > c.size()) {
        throw Error(ErrorCode::InvalidArgument, "support size outside [1, m*n]");
    }
    std::vector<Index> order(static_cast<std::size_t>(c.size()));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return std::abs(c[a]) > std::abs(c[b]); });
    order.resize(static_cast<std::size_t>(k));
    return FrequencyRegion::from_flat(order, spec.m(), spec.n());
}

std::vector<double> grid_values(double lo, double hi, double step)
{
    if (!(step > 0.0) || hi < lo) {
        throw Error(ErrorCode::InvalidArgument, "grid needs step > 0 and hi >= lo");
    }
    const auto count = static_cast<long long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long long k = 0; k < count; ++k) {
        out.push_back(std::round((lo + static_cast<double>(k) * step) * 1e12) / 1e12);
    }
    return out;
}

double grid_point_error(const JointSignal& clean, const ComplexVector& noise, Index support_size,
                        const OperatorFamilyPtr& family_h, const OperatorFamilyPtr& family_g, double alpha,
                        double beta)
{
    if (noise.size() != support_size) {
        throw Error(ErrorCode::DimensionMismatch, "noise length must equal the number of samples");
    }
    const FractionalOperator op_h = family_h->at_order(alpha);
    const FractionalOperator op_g = family_g->at_order(beta);
    const FrequencyRegion support = top_support(hgfrft(clean, op_h, op_g), support_size);
    try {
        const SamplingPlan plan = greedy_plan(op_h, op_g, support, support_size);
        return (plan.r * noise).norm();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::RankDeficient) {
            return std::numeric_limits<double>::infinity();
        }
        throw;
    }
}

namespace {

std::vector<GridPoint> evaluate(const std::vector<double>& alphas, const std::vector<double>& betas,
                                const JointSignal& clean, const ComplexVector& noise, Index support_size,
                                const OperatorFamilyPtr& family_h, const OperatorFamilyPtr& family_g,
                                unsigned threads)
{
    std::vector<GridPoint> points;
    points.reserve(alphas.size() * betas.size());
    for (double a : alphas) {
        for (double b : betas) {
            points.push_back({a, b, 0.0});
        }
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t idx = next++; idx < points.size(); idx = next++) {
            try {
                points[idx].error = grid_point_error(clean, noise, support_size, family_h, family_g,
                                                     points[idx].alpha, points[idx].beta);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(points.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < count; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return points;
}

// Points are generated in lexicographic (alpha, beta) order, so the first
// strict minimum is also the lexicographically smallest.
const GridPoint& best_of(const std::vector<GridPoint>& points)
{
    const GridPoint* best = &points.front();
    for (const auto& p : points) {
        if (p.error < best->error) {
            best = &p;
        }
    }
    return *best;
}

}  // namespace

GridSearchResult grid_search(const JointSignal& clean, const ComplexVector& noise, Index support_size,
                             const OperatorFamilyPtr& family_h, const OperatorFamilyPtr& family_g,
                             const GridSearchOptions& options)
{
    if (!(options.fine_step > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "fine step must be positive");
    }
    unsigned threads = options.threads;
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    GridSearchResult result;
    result.coarse = evaluate(grid_values(options.alpha_lo, options.alpha_hi, options.coarse_step),
                             grid_values(options.beta_lo, options.beta_hi, options.coarse_step), clean, noise,
                             support_size, family_h, family_g, threads);
    const GridPoint coarse_best = best_of(result.coarse);

    const double radius = options.coarse_step;
    result.fine = evaluate(grid_values(coarse_best.alpha - radius, coarse_best.alpha + radius, options.fine_step),
                           grid_values(coarse_best.beta - radius, coarse_best.beta + radius, options.fine_step),
                           clean, noise, support_size, family_h, family_g, threads);
    const GridPoint fine_best = best_of(result.fine);

    const GridPoint& pick = fine_best.error < coarse_best.error ? fine_best : coarse_best;
    result.alpha = pick.alpha;
    result.beta = pick.beta;
    result.error = pick.error;
    return result;
}

}  // namespace hgfrft
