#include "hgfrft/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "hgfrft/filtering.hpp"
#include "hgfrft/io.hpp"
#include "hgfrft/sampling.hpp"
#include "hgfrft/signals.hpp"
#include "hgfrft/transform.hpp"

namespace hgfrft::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

[[noreturn]] void config_error(const std::string& msg)
{
    throw Error(ErrorCode::ConfigError, msg);
}

/// Per-command view of config.params with a fixed key set.
class Params {
public:
    Params(const ExperimentConfig& cfg, const std::string& command, std::set<std::string> allowed)
        : doc_(cfg.params), base_(cfg.base_dir), where_("params(" + command + ")")
    {
        for (const auto& [key, value] : doc_.items()) {
            if (!allowed.count(key)) {
                config_error("unknown field '" + key + "' in " + where_);
            }
        }
    }

    bool has(const char* key) const { return doc_.contains(key); }
    const json& raw(const char* key) const { return doc_.at(key); }

    fs::path path(const char* key) const
    {
        if (!has(key)) {
            config_error(where_ + "." + key + " is required");
        }
        const fs::path p = as<std::string>(key);
        return p.is_absolute() || base_.empty() ? p : base_ / p;
    }

    template <typename T>
    T as(const char* key) const
    {
        try {
            return doc_.at(key).get<T>();
        } catch (const json::exception&) {
            config_error(where_ + "." + key + " is missing or has the wrong type");
        }
    }

    template <typename T>
    T get_or(const char* key, T fallback) const
    {
        return has(key) ? as<T>(key) : fallback;
    }

    Index count(const char* key, Index fallback) const
    {
        if (!has(key)) {
            return fallback;
        }
        if (!doc_.at(key).is_number_integer()) {
            config_error(where_ + "." + key + " must be an integer");
        }
        return doc_.at(key).get<Index>();
    }

    std::pair<double, double> range(const char* key, std::pair<double, double> fallback) const
    {
        if (!has(key)) {
            return fallback;
        }
        const auto v = as<std::vector<double>>(key);
        if (v.size() != 2 || v[0] > v[1]) {
            config_error(where_ + "." + key + " must be [lo, hi] with lo <= hi");
        }
        return {v[0], v[1]};
    }

    /// Inline JSON value, or a string naming a JSON file.
    json inline_or_file(const char* key) const
    {
        const json& v = raw(key);
        if (v.is_string()) {
            return json::parse(io::read_text(path(key)));
        }
        return v;
    }

private:
    const json& doc_;
    fs::path base_;
    std::string where_;
};

struct Context {
    ExperimentConfig cfg;
    CommandOptions options;
    fs::path out_dir;
    std::ostream& out;
    std::ostream& err;
};

Graph require_graph(const Context& ctx)
{
    if (!ctx.cfg.graph) {
        config_error("this command needs a graph in the config");
    }
    return build_graph(*ctx.cfg.graph, ctx.cfg.seed);
}

void check_joint_size(Index m, Index n)
{
    if (m * n > max_joint_dim()) {
        config_error("joint size " + std::to_string(m * n) + " exceeds HGFRFT_MAX_DIM " +
                     std::to_string(max_joint_dim()));
    }
}

void check_signal_shape(const JointSignal& sig, const Graph& g)
{
    if (sig.n() != g.size()) {
        config_error("signal has " + std::to_string(sig.n()) + " vertex columns but the graph has " +
                     std::to_string(g.size()) + " vertices");
    }
    if (sig.m() < 2) {
        config_error("signal needs at least two Hilbert samples");
    }
    check_joint_size(sig.m(), sig.n());
}

struct Families {
    OperatorFamilyPtr h;
    OperatorFamilyPtr g;
};

Families families_for(const Context& ctx, const Graph& g, Index m)
{
    return {dft_operator(m), gft_operator(g, ctx.cfg.shift)};
}

void emit(const Context& ctx, json summary)
{
    ctx.out << summary.dump() << '\n';
}

std::string rel(const Context& ctx, const fs::path& p)
{
    return p.lexically_relative(ctx.out_dir).generic_string();
}

// transform / inverse / partial-h / partial-g ------------------------------

int cmd_transform(Context& ctx)
{
    Params p(ctx.cfg, "transform", {"signal"});
    const Graph g = require_graph(ctx);
    const JointSignal sig = io::load_signal(p.path("signal"));
    check_signal_shape(sig, g);
    const auto fam = families_for(ctx, g, sig.m());
    const JointSpectrum spec = hgfrft(sig, fam.h->at_order(ctx.cfg.alpha), fam.g->at_order(ctx.cfg.beta));
    const fs::path file = ctx.out_dir / "spectrum.csv";
    io::save_spectrum(file, spec);
    emit(ctx, {{"command", "transform"}, {"output", rel(ctx, file)}, {"alpha", spec.alpha}, {"beta", spec.beta}});
    return kExitOk;
}

int cmd_inverse(Context& ctx)
{
    Params p(ctx.cfg, "inverse", {"spectrum"});
    const Graph g = require_graph(ctx);
    const fs::path src = p.path("spectrum");
    JointSpectrum spec = io::load_spectrum(src);
    if (!fs::exists(io::sidecar_path(src))) {
        spec.alpha = ctx.cfg.alpha;
        spec.beta = ctx.cfg.beta;
    }
    check_signal_shape(JointSignal{spec.coeff}, g);
    const auto fam = families_for(ctx, g, spec.m());
    const JointSignal sig = inverse_hgfrft(spec, fam.h->at_order(-spec.alpha), fam.g->at_order(-spec.beta));
    const fs::path file = ctx.out_dir / "signal.csv";
    io::save_signal(file, sig);
    emit(ctx, {{"command", "inverse"}, {"output", rel(ctx, file)}});
    return kExitOk;
}

int cmd_partial(Context& ctx, bool hilbert_side)
{
    const std::string name = hilbert_side ? "partial-h" : "partial-g";
    Params p(ctx.cfg, name, {"signal"});
    const Graph g = require_graph(ctx);
    const JointSignal sig = io::load_signal(p.path("signal"));
    check_signal_shape(sig, g);
    const auto fam = families_for(ctx, g, sig.m());
    JointSpectrum result;
    if (hilbert_side) {
        result = {partial_h(sig, fam.h->at_order(ctx.cfg.alpha)).x, ctx.cfg.alpha, 0.0};
    } else {
        result = {partial_g(sig, fam.g->at_order(ctx.cfg.beta)).x, 0.0, ctx.cfg.beta};
    }
    const fs::path file = ctx.out_dir / (hilbert_side ? "partial_h.csv" : "partial_g.csv");
    io::save_spectrum(file, result);
    emit(ctx, {{"command", name}, {"output", rel(ctx, file)}});
    return kExitOk;
}

// filtering ----------------------------------------------------------------

int cmd_bandpass(Context& ctx)
{
    Params p(ctx.cfg, "filter-bandpass", {"signal", "region"});
    const Graph g = require_graph(ctx);
    const JointSignal sig = io::load_signal(p.path("signal"));
    check_signal_shape(sig, g);
    if (!p.has("region")) {
        config_error("params(filter-bandpass).region is required");
    }
    const FrequencyRegion region = io::region_from_json(p.inline_or_file("region"), sig.m(), sig.n());
    const auto fam = families_for(ctx, g, sig.m());
    const JointSignal filtered = bandpass(sig, region, fam.h->at_order(ctx.cfg.alpha), fam.g->at_order(ctx.cfg.beta));
    const fs::path file = ctx.out_dir / "bandpass.csv";
    io::save_signal(file, filtered);
    emit(ctx, {{"command", "filter-bandpass"}, {"output", rel(ctx, file)}, {"region_size", region.size()}});
    return kExitOk;
}

int cmd_convolve(Context& ctx)
{
    Params p(ctx.cfg, "convolve", {"signal", "kernel"});
    const Graph g = require_graph(ctx);
    const JointSignal sig = io::load_signal(p.path("signal"));
    const JointSignal kernel = io::load_signal(p.path("kernel"));
    check_signal_shape(sig, g);
    check_signal_shape(kernel, g);
    const auto fam = families_for(ctx, g, sig.m());
    const JointSignal result = convolve(kernel, sig, fam.h->at_order(ctx.cfg.alpha), fam.g->at_order(ctx.cfg.beta));
    const fs::path file = ctx.out_dir / "convolution.csv";
    io::save_signal(file, result);
    emit(ctx, {{"command", "convolve"}, {"output", rel(ctx, file)}});
    return kExitOk;
}

// sampling -----------------------------------------------------------------

int cmd_sample_greedy(Context& ctx)
{
    Params p(ctx.cfg, "sample-greedy", {"signal", "support", "support_size", "samples"});
    const Graph g = require_graph(ctx);
    std::optional<JointSignal> sig;
    Index m = ctx.cfg.m;
    if (p.has("signal")) {
        sig = io::load_signal(p.path("signal"));
        check_signal_shape(*sig, g);
        m = sig->m();
    }
    check_joint_size(m, g.size());
    const auto fam = families_for(ctx, g, m);
    const FractionalOperator op_h = fam.h->at_order(ctx.cfg.alpha);
    const FractionalOperator op_g = fam.g->at_order(ctx.cfg.beta);

    FrequencyRegion support;
    if (p.has("support")) {
        support = io::region_from_json(p.inline_or_file("support"), m, g.size());
    } else if (p.has("support_size")) {
        if (!sig) {
            config_error("params(sample-greedy).support_size needs params.signal");
        }
        support = top_support(hgfrft(*sig, op_h, op_g), p.count("support_size", 1));
    } else {
        config_error("params(sample-greedy) needs support or support_size");
    }
    const Index count = ctx.options.samples.value_or(p.count("samples", static_cast<Index>(support.size())));
    const SamplingPlan plan = greedy_plan(op_h, op_g, support, count);

    const fs::path plan_file = ctx.out_dir / "plan.json";
    io::write_text(plan_file, io::to_json(plan).dump(2) + "\n");
    json summary = {{"command", "sample-greedy"}, {"plan", rel(ctx, plan_file)}, {"w", plan.w}};
    if (sig) {
        const fs::path samples_file = ctx.out_dir / "samples.csv";
        io::save_vector(samples_file, sample(*sig, plan.w));
        summary["samples"] = rel(ctx, samples_file);
    }
    emit(ctx, summary);
    return kExitOk;
}

int cmd_recover(Context& ctx)
{
    Params p(ctx.cfg, "recover", {"plan", "samples"});
    const Graph g = require_graph(ctx);
    const json plan_doc = json::parse(io::read_text(p.path("plan")));
    const io::PlanSpec spec = io::plan_from_json(plan_doc);
    const Index m = plan_doc.value("m", ctx.cfg.m);
    if (plan_doc.contains("n") && plan_doc.at("n").get<Index>() != g.size()) {
        config_error("plan was built for a different vertex count");
    }
    check_joint_size(m, g.size());
    const auto fam = families_for(ctx, g, m);
    const FrequencyRegion support(spec.support, m, g.size());
    const SamplingPlan plan =
        make_plan(fam.h->at_order(spec.alpha), fam.g->at_order(spec.beta), support, spec.w);
    const JointSignal rec = recover(io::load_vector(p.path("samples")), plan);
    const fs::path file = ctx.out_dir / "recovered.csv";
    io::save_signal(file, rec);
    emit(ctx, {{"command", "recover"}, {"output", rel(ctx, file)}});
    return kExitOk;
}

int cmd_grid_search(Context& ctx)
{
    Params p(ctx.cfg, "grid-search",
             {"signal", "support_size", "noise_sigma", "alpha_range", "beta_range", "coarse_step", "fine_step",
              "threads"});
    const Graph g = require_graph(ctx);
    const Index k = ctx.options.samples.value_or(p.count("support_size", 3));
    JointSignal clean;
    Index m = ctx.cfg.m;
    if (p.has("signal")) {
        clean = io::load_signal(p.path("signal"));
        check_signal_shape(clean, g);
        m = clean.m();
    }
    check_joint_size(m, g.size());
    if (k < 1 || k > m * g.size()) {
        config_error("support size must lie in [1, m*n]");
    }
    const auto fam = families_for(ctx, g, m);
    if (!p.has("signal")) {
        // In-span signal at the ordinary transform: random weights on the first K basis vectors.
        const ComplexVector w = gaussian_noise(k, 1.0, ctx.cfg.seed);
        std::map<Index, Complex> coeffs;
        for (Index t = 0; t < k; ++t) {
            coeffs[t] = w[t];
        }
        clean = synthesize_bandlimited(coeffs, fam.h->at_order(1.0), fam.g->at_order(1.0));
    }
    const double sigma = p.get_or("noise_sigma", 0.1);
    if (sigma < 0.0) {
        config_error("noise_sigma must be non-negative");
    }
    const ComplexVector noise = gaussian_noise(k, sigma, ctx.cfg.seed + 1);

    GridSearchOptions opts;
    const auto ar = ctx.options.alpha_range.value_or(p.range("alpha_range", {opts.alpha_lo, opts.alpha_hi}));
    const auto br = ctx.options.beta_range.value_or(p.range("beta_range", {opts.beta_lo, opts.beta_hi}));
    opts.alpha_lo = ar.first;
    opts.alpha_hi = ar.second;
    opts.beta_lo = br.first;
    opts.beta_hi = br.second;
    opts.coarse_step = ctx.options.coarse_step.value_or(p.get_or("coarse_step", opts.coarse_step));
    opts.fine_step = ctx.options.fine_step.value_or(p.get_or("fine_step", opts.fine_step));
    opts.threads = static_cast<unsigned>(p.count("threads", 0));
    if (!(opts.coarse_step > 0.0) || !(opts.fine_step > 0.0)) {
        config_error("grid steps must be positive");
    }

    const GridSearchResult res = grid_search(clean, noise, k, fam.h, fam.g, opts);
    const double at_one = grid_point_error(clean, noise, k, fam.h, fam.g, 1.0, 1.0);

    std::ostringstream table;
    table << "pass,alpha,beta,error\n";
    auto dump = [&](const char* pass, const std::vector<GridPoint>& pts) {
        for (const auto& pt : pts) {
            table << pass << ',' << io::format_double(pt.alpha) << ',' << io::format_double(pt.beta) << ','
                  << (std::isinf(pt.error) ? std::string("inf") : io::format_double(pt.error)) << '\n';
        }
    };
    dump("coarse", res.coarse);
    dump("fine", res.fine);
    const fs::path table_file = ctx.out_dir / "grid.csv";
    io::write_text(table_file, table.str());
    io::save_signal(ctx.out_dir / "grid_signal.csv", clean);

    json result = {{"alpha", res.alpha},
                   {"beta", res.beta},
                   {"error", res.error},
                   {"error_at_1_1", at_one},
                   {"support_size", k},
                   {"coarse_points", res.coarse.size()},
                   {"fine_points", res.fine.size()}};
    io::write_text(ctx.out_dir / "grid_search.json", result.dump(2) + "\n");
    result["command"] = "grid-search";
    result["table"] = rel(ctx, table_file);
    emit(ctx, result);
    return kExitOk;
}

// experiments --------------------------------------------------------------

int cmd_product_demo(Context& ctx)
{
    Params p(ctx.cfg, "product-demo", {"coefficients", "alpha_fraction", "beta_fraction"});
    // Hilbert side: 4-node path; graph side: 4-node ring.
    const Graph path = path_graph(4);
    const Graph ring = cycle_graph(4);
    const Graph product = cartesian_product(path, ring);
    const auto fam_h = gft_operator(path, ctx.cfg.shift);
    const auto fam_g = gft_operator(ring, ctx.cfg.shift);
    const double alpha = p.get_or("alpha_fraction", 0.7);
    const double beta = p.get_or("beta_fraction", 0.5);

    std::map<Index, Complex> coeffs{{0, 1.0}, {1, 0.5}, {2, 2.0}};
    if (p.has("coefficients")) {
        coeffs.clear();
        const auto list = p.as<std::vector<double>>("coefficients");
        for (std::size_t k = 0; k < list.size(); ++k) {
            coeffs[static_cast<Index>(k)] = list[k];
        }
    }
    std::vector<Index> flat;
    for (const auto& [k, c] : coeffs) {
        flat.push_back(k);
    }
    const FrequencyRegion support = FrequencyRegion::from_flat(flat, 4, 4);

    const JointSignal f = synthesize_bandlimited(coeffs, fam_h->at_order(alpha), fam_g->at_order(beta));
    io::save_signal(ctx.out_dir / "product_signal.csv", f);

    auto run_plan = [&](double a, double b, const char* tag) {
        const SamplingPlan plan = greedy_plan(fam_h->at_order(a), fam_g->at_order(b), support);
        const JointSignal rec = recover(sample(f, plan.w), plan);
        io::save_signal(ctx.out_dir / (std::string("recovered_") + tag + ".csv"), rec);
        return json{{"alpha", a}, {"beta", b}, {"w", plan.w}, {"error", recovery_error(rec, f)}};
    };
    json report = {{"graph", {{"hilbert", "path4"}, {"vertex", "ring4"}, {"product_vertices", product.size()},
                              {"product_edges", product.edges().size()}}},
                   {"shift", to_string(ctx.cfg.shift)},
                   {"support", io::to_json(support)},
                   {"hgfrft", run_plan(alpha, beta, "hgfrft")},
                   {"hgft", run_plan(1.0, 1.0, "hgft")}};
    io::write_text(ctx.out_dir / "product_demo.json", report.dump(2) + "\n");
    report["command"] = "product-demo";
    emit(ctx, report);
    return kExitOk;
}

int cmd_chirp_demo(Context& ctx)
{
    Params p(ctx.cfg, "chirp-demo",
             {"f0", "b0", "duration", "samples", "df", "db", "vertices", "n", "alpha_range", "alpha_step"});
    ChirpSpec spec;
    spec.f0 = p.get_or("f0", spec.f0);
    spec.b0 = p.get_or("b0", spec.b0);
    spec.duration = p.get_or("duration", spec.duration);
    spec.samples = p.count("samples", spec.samples);
    spec.df = p.get_or("df", spec.df);
    spec.db = p.get_or("db", spec.db);
    spec.validate();
    const Index n = ctx.cfg.graph ? require_graph(ctx).size() : p.count("n", 48);
    check_joint_size(spec.samples, n);
    const auto labels = p.get_or("vertices", std::vector<Index>{16, 48});
    for (Index label : labels) {
        if (label < 1 || label > n) {
            config_error("chirp vertex labels run from 1 to n");
        }
    }
    const auto range = p.range("alpha_range", {-2.0, 2.0});
    const double step = p.get_or("alpha_step", 0.01);
    const auto alphas = grid_values(range.first, range.second, step);

    const JointSignal field = chirp_field(spec, n);
    io::save_signal(ctx.out_dir / "chirp_signal.csv", field);
    const auto fam = dft_operator(spec.samples);

    std::ostringstream scan;
    scan << "alpha";
    for (Index label : labels) {
        scan << ",ratio_v" << label;
    }
    scan << '\n';
    std::vector<double> best_ratio(labels.size(), -1.0);
    std::vector<double> best_alpha(labels.size(), 0.0);
    for (double a : alphas) {
        const FractionalOperator op = fam->at_order(a);
        scan << io::format_double(a);
        for (std::size_t v = 0; v < labels.size(); ++v) {
            const double r = peak_to_energy(op.mat() * field.x.col(labels[v] - 1));
            scan << ',' << io::format_double(r);
            if (r > best_ratio[v]) {
                best_ratio[v] = r;
                best_alpha[v] = a;
            }
        }
        scan << '\n';
    }
    io::write_text(ctx.out_dir / "chirp_alpha_scan.csv", scan.str());

    std::ostringstream spectra;
    spectra << "k";
    for (Index label : labels) {
        spectra << ",input_v" << label << ",dft_v" << label << ",best_v" << label;
    }
    spectra << '\n';
    std::vector<ComplexVector> cols_dft;
    std::vector<ComplexVector> cols_best;
    for (std::size_t v = 0; v < labels.size(); ++v) {
        cols_dft.push_back(fam->at_order(1.0).mat() * field.x.col(labels[v] - 1));
        cols_best.push_back(fam->at_order(best_alpha[v]).mat() * field.x.col(labels[v] - 1));
    }
    for (Index k = 0; k < spec.samples; ++k) {
        spectra << k;
        for (std::size_t v = 0; v < labels.size(); ++v) {
            spectra << ',' << io::format_double(std::abs(field.x(k, labels[v] - 1))) << ','
                    << io::format_double(std::abs(cols_dft[v][k])) << ','
                    << io::format_double(std::abs(cols_best[v][k]));
        }
        spectra << '\n';
    }
    io::write_text(ctx.out_dir / "chirp_spectra.csv", spectra.str());

    json vertices = json::array();
    for (std::size_t v = 0; v < labels.size(); ++v) {
        const double at_one = peak_to_energy(cols_dft[v]);
        vertices.push_back({{"vertex", labels[v]},
                            {"f0", spec.start_frequency(labels[v])},
                            {"bandwidth", spec.bandwidth(labels[v])},
                            {"best_alpha", best_alpha[v]},
                            {"best_ratio", best_ratio[v]},
                            {"ratio_at_1", at_one}});
    }
    json report = {{"samples", spec.samples}, {"vertices", n}, {"results", vertices}};
    io::write_text(ctx.out_dir / "chirp_demo.json", report.dump(2) + "\n");
    report["command"] = "chirp-demo";
    emit(ctx, report);
    return kExitOk;
}

int cmd_diffusion(Context& ctx, bool heat)
{
    const std::string name = heat ? "heat" : "wave";
    Params p(ctx.cfg, name, {"s", "initial", "impulse", "horizon", "frequencies"});
    const Graph g = require_graph(ctx);
    const Index m = ctx.cfg.m;
    check_joint_size(m, g.size());
    if (!p.has("s")) {
        config_error("params(" + name + ").s is required");
    }
    const double s = p.as<double>("s");
    const Index horizon = p.count("horizon", m);
    if (horizon < 1) {
        config_error("horizon must be >= 1");
    }
    ComplexVector f0 = ComplexVector::Zero(g.size());
    if (p.has("initial")) {
        const auto v = p.as<std::vector<double>>("initial");
        if (static_cast<Index>(v.size()) != g.size()) {
            config_error("initial state needs one value per vertex");
        }
        for (std::size_t k = 0; k < v.size(); ++k) {
            f0[static_cast<Index>(k)] = v[k];
        }
    } else {
        const Index at = p.count("impulse", 0);
        if (at < 0 || at >= g.size()) {
            config_error("impulse vertex outside the graph");
        }
        f0[at] = 1.0;
    }
    RealVector omega = hilbert_frequencies(m);
    if (p.has("frequencies")) {
        const json& fr = p.raw("frequencies");
        if (fr.is_string() && fr.get<std::string>() == "dft") {
            // default
        } else {
            const auto v = p.as<std::vector<double>>("frequencies");
            if (static_cast<Index>(v.size()) != m) {
                config_error("frequencies needs m values or \"dft\"");
            }
            omega = Eigen::Map<const RealVector>(v.data(), m);
        }
    }
    const auto fam_g = gft_operator(g, ctx.cfg.shift);
    const JointSpectrum y = initial_spectrum(f0, fam_g->at_order(ctx.cfg.beta), m, ctx.cfg.alpha);
    const JointSpectrum x = heat ? heat_spectral_solution(y, fam_g->frequencies(), omega, s, horizon)
                                 : wave_spectral_solution(y, fam_g->frequencies(), omega, s, horizon);
    io::save_spectrum(ctx.out_dir / "initial_spectrum.csv", y);
    const fs::path file = ctx.out_dir / (name + "_spectrum.csv");
    io::save_spectrum(file, x);
    emit(ctx, {{"command", name}, {"output", rel(ctx, file)}, {"horizon", horizon}, {"s", s}});
    return kExitOk;
}

int cmd_compactness(Context& ctx)
{
    Params p(ctx.cfg, "compactness", {"signal", "percentiles"});
    const Graph g = require_graph(ctx);
    const JointSignal sig = io::load_signal(p.path("signal"));
    check_signal_shape(sig, g);
    std::vector<double> pct;
    if (p.has("percentiles")) {
        pct = p.as<std::vector<double>>("percentiles");
    } else {
        for (int k = 0; k <= 100; k += 5) {
            pct.push_back(k);
        }
    }
    std::sort(pct.begin(), pct.end());
    const auto fam = families_for(ctx, g, sig.m());
    const FractionalOperator op_h = fam.h->at_order(ctx.cfg.alpha);
    const FractionalOperator op_g = fam.g->at_order(ctx.cfg.beta);
    const auto joint = energy_compactness(hgfrft(sig, op_h, op_g), pct);
    const auto hil = energy_compactness({partial_h(sig, op_h).x, ctx.cfg.alpha, 0.0}, pct);
    const auto gra = energy_compactness({partial_g(sig, op_g).x, 0.0, ctx.cfg.beta}, pct);
    std::ostringstream csv;
    csv << "percentile,error,error_hilbert,error_graph\n";
    for (std::size_t k = 0; k < pct.size(); ++k) {
        csv << io::format_double(joint[k].first) << ',' << io::format_double(joint[k].second) << ','
            << io::format_double(hil[k].second) << ',' << io::format_double(gra[k].second) << '\n';
    }
    const fs::path file = ctx.out_dir / "compactness.csv";
    io::write_text(file, csv.str());
    emit(ctx, {{"command", "compactness"}, {"output", rel(ctx, file)}, {"rows", pct.size()}});
    return kExitOk;
}

int cmd_gen_graph(Context& ctx)
{
    Params p(ctx.cfg, "gen-graph", {});
    const Graph g = require_graph(ctx);
    std::ostringstream csv;
    write_edge_list(g, csv);
    const fs::path file = ctx.out_dir / "graph.csv";
    io::write_text(file, csv.str());
    json info = {{"n", g.size()}, {"edges", g.edges().size()}, {"directed", g.directed()}, {"connected", g.connected()}};
    io::write_text(ctx.out_dir / "graph.json", info.dump(2) + "\n");
    info["command"] = "gen-graph";
    info["output"] = rel(ctx, file);
    emit(ctx, info);
    return kExitOk;
}

using Handler = std::function<int(Context&)>;

const std::map<std::string, Handler>& handlers()
{
    static const std::map<std::string, Handler> table = {
        {"transform", cmd_transform},
        {"inverse", cmd_inverse},
        {"partial-h", [](Context& c) { return cmd_partial(c, true); }},
        {"partial-g", [](Context& c) { return cmd_partial(c, false); }},
        {"filter-bandpass", cmd_bandpass},
        {"convolve", cmd_convolve},
        {"sample-greedy", cmd_sample_greedy},
        {"recover", cmd_recover},
        {"grid-search", cmd_grid_search},
        {"product-demo", cmd_product_demo},
        {"chirp-demo", cmd_chirp_demo},
        {"heat", [](Context& c) { return cmd_diffusion(c, true); }},
        {"wave", [](Context& c) { return cmd_diffusion(c, false); }},
        {"compactness", cmd_compactness},
        {"gen-graph", cmd_gen_graph},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, handler] : handlers()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

int exit_code_for(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::ConfigError:
    case ErrorCode::ParseError:
    case ErrorCode::IoError:
    case ErrorCode::NegativeWeight:
    case ErrorCode::DuplicateEdge:
    case ErrorCode::DirectedInput:
    case ErrorCode::CyclicShiftInvalid:
        return kExitConfig;
    case ErrorCode::UnstableSpeed:
        return kExitStability;
    default:
        return kExitNumeric;
    }
}

int run_command(const std::string& name, const CommandOptions& options, std::ostream& out, std::ostream& err)
{
    const auto it = handlers().find(name);
    if (it == handlers().end()) {
        err << "error: unknown command '" << name << "'\n";
        return kExitConfig;
    }
    try {
        ExperimentConfig cfg = options.config ? load_config(*options.config) : ExperimentConfig{};
        if (!cfg.experiment.empty() && cfg.experiment != name) {
            config_error("config is for experiment '" + cfg.experiment + "', not '" + name + "'");
        }
        if (options.out) cfg.output = *options.out;
        if (options.seed) cfg.seed = *options.seed;
        Context ctx{cfg, options, cfg.output, out, err};
        fs::create_directories(ctx.out_dir);
        return it->second(ctx);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const nlohmann::json::exception& e) {
        err << "error: ConfigError: " << e.what() << '\n';
        return kExitConfig;
    } catch (const fs::filesystem_error& e) {
        err << "error: IoError: " << e.what() << '\n';
        return kExitConfig;
    }
}

}  // namespace hgfrft::cli
