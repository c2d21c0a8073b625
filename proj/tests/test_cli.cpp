#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hgfrft/cli/commands.hpp"
#include "hgfrft/io.hpp"
#include "hgfrft/signals.hpp"
#include "support.hpp"

using namespace hgfrft;
using namespace hgfrft::cli;
using nlohmann::json;
namespace fs = std::filesystem;
using testing::max_diff;

namespace {

fs::path scratch_root()
{
    if (const char* env = std::getenv("HGFRFT_TEST_SCRATCH")) {
        return env;
    }
    return fs::temp_directory_path() / "hgfrft_cli_tests";
}

struct Run {
    int code;
    std::string out;
    std::string err;
    json summary() const { return json::parse(out); }
};

class Workspace {
public:
    explicit Workspace(const std::string& name) : dir_(scratch_root() / name)
    {
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }

    const fs::path& dir() const { return dir_; }

    fs::path config(const json& doc, const std::string& name = "config.json") const
    {
        const fs::path p = dir_ / name;
        io::write_text(p, doc.dump(2));
        return p;
    }

    Run run(const std::string& command, const json& doc, CommandOptions opts = {}) const
    {
        opts.config = config(doc);
        if (!opts.out) opts.out = dir_ / "out";
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_command(command, opts, out, err);
        return {code, out.str(), err.str()};
    }

    fs::path out(const std::string& file) const { return dir_ / "out" / file; }

private:
    fs::path dir_;
};

json ring_config(double alpha, double beta)
{
    return {{"graph", {{"builtin", "cycle"}, {"n", 4}}}, {"shift", "laplacian"}, {"alpha", alpha}, {"beta", beta},
            {"params", {{"signal", "signal.csv"}}}};
}

JointSignal write_random_signal(const Workspace& ws, Index m, Index n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const JointSignal sig{testing::random_complex(m, n, rng)};
    io::save_signal(ws.dir() / "signal.csv", sig);
    return sig;
}

}  // namespace

TEST_CASE("transform at zero order is the identity")
{
    Workspace ws("transform_zero");
    const JointSignal sig = write_random_signal(ws, 4, 4, 1);
    const Run r = ws.run("transform", ring_config(0.0, 0.0));
    REQUIRE(r.code == kExitOk);
    CHECK(io::load_spectrum(ws.out("spectrum.csv")).coeff == sig.x);
    CHECK(r.summary().at("output") == "spectrum.csv");
}

TEST_CASE("transform at (1,1) equals the ordinary joint transform")
{
    Workspace ws("transform_one");
    const JointSignal sig = write_random_signal(ws, 5, 4, 2);
    REQUIRE(ws.run("transform", ring_config(1.0, 1.0)).code == kExitOk);
    const auto fh = dft_operator(5);
    const auto fg = gft_operator(cycle_graph(4), ShiftKind::Laplacian);
    const ComplexMatrix want = fh->base() * sig.x * fg->base().transpose();
    CHECK(max_diff(io::load_spectrum(ws.out("spectrum.csv")).coeff, want) < 1e-12);
}

TEST_CASE("transform then inverse round trips")
{
    Workspace ws("round_trip");
    const JointSignal sig = write_random_signal(ws, 4, 4, 3);
    REQUIRE(ws.run("transform", ring_config(0.7, -0.5)).code == kExitOk);
    json inv = ring_config(0.0, 0.0);
    inv["params"] = {{"spectrum", (ws.dir() / "out" / "spectrum.csv").string()}};
    const Run r = ws.run("inverse", inv);
    REQUIRE(r.code == kExitOk);
    CHECK(max_diff(io::load_signal(ws.out("signal.csv")).x, sig.x) < 1e-9);
}

TEST_CASE("partial transforms and filters")
{
    Workspace ws("partials");
    const JointSignal sig = write_random_signal(ws, 3, 4, 4);
    CHECK(ws.run("partial-h", ring_config(0.5, 0.0)).code == kExitOk);
    CHECK(ws.run("partial-g", ring_config(0.0, 0.5)).code == kExitOk);
    const auto fh = dft_operator(3);
    const auto fg = gft_operator(cycle_graph(4), ShiftKind::Laplacian);
    CHECK(max_diff(io::load_signal(ws.out("partial_h.csv")).x, fh->at_order(0.5).mat() * sig.x) < 1e-12);
    CHECK(max_diff(io::load_signal(ws.out("partial_g.csv")).x, sig.x * fg->at_order(0.5).mat().transpose()) <
          1e-12);

    json bp = ring_config(0.3, 0.6);
    bp["params"]["region"] = json::array({json::array({0, 1}), json::array({2, 3})});
    REQUIRE(ws.run("filter-bandpass", bp).code == kExitOk);
    const JointSignal once = io::load_signal(ws.out("bandpass.csv"));
    io::save_signal(ws.dir() / "signal.csv", once);
    REQUIRE(ws.run("filter-bandpass", bp).code == kExitOk);
    CHECK(max_diff(io::load_signal(ws.out("bandpass.csv")).x, once.x) < 1e-10);

    json conv = ring_config(0.3, 0.6);
    io::save_signal(ws.dir() / "kernel.csv", sig);
    conv["params"]["kernel"] = "kernel.csv";
    CHECK(ws.run("convolve", conv).code == kExitOk);
    CHECK(fs::exists(ws.out("convolution.csv")));
}

TEST_CASE("sample-greedy then recover")
{
    Workspace ws("sampling");
    const auto fh = dft_operator(4);
    const auto fg = gft_operator(cycle_graph(4), ShiftKind::Laplacian);
    const JointSignal f = synthesize_bandlimited({{1, 1.0}, {6, -0.5}, {11, 2.0}}, fh->at_order(0.4), fg->at_order(1.2));
    io::save_signal(ws.dir() / "signal.csv", f);
    json cfg = ring_config(0.4, 1.2);
    cfg["params"]["support_size"] = 3;
    const Run r = ws.run("sample-greedy", cfg);
    REQUIRE(r.code == kExitOk);
    CHECK(r.summary().at("w").size() == 3);

    json rec = ring_config(0.0, 0.0);
    rec["params"] = {{"plan", "out/plan.json"}, {"samples", "out/samples.csv"}};
    REQUIRE(ws.run("recover", rec).code == kExitOk);
    CHECK(max_diff(io::load_signal(ws.out("recovered.csv")).x, f.x) < 1e-10);

    CommandOptions too_few;
    too_few.samples = 2;
    CHECK(ws.run("sample-greedy", cfg, too_few).code == kExitNumeric);
}

TEST_CASE("product demo report")
{
    Workspace ws("product");
    const Run r = ws.run("product-demo", json::object());
    REQUIRE(r.code == kExitOk);
    const json report = json::parse(io::read_text(ws.out("product_demo.json")));
    CHECK(report.at("hgfrft").at("error").get<double>() < 1e-10);
    CHECK(report.at("hgft").at("error").get<double>() > 0.1);
    CHECK(report.at("graph").at("product_edges") == 28);
    CHECK(json::parse(report.dump()) == report);
}

TEST_CASE("grid search table and optimum")
{
    Workspace ws("grid");
    json cfg = {{"graph", {{"builtin", "cycle"}, {"n", 4}}}, {"m", 3}, {"seed", 5},
                {"params", {{"support_size", 3}, {"noise_sigma", 0.1}, {"threads", 2}}}};
    CommandOptions opts;
    opts.alpha_range = {{-1.0, 1.0}};
    opts.beta_range = {{0.0, 1.0}};
    opts.coarse_step = 0.5;
    opts.fine_step = 0.25;
    const Run r = ws.run("grid-search", cfg, opts);
    REQUIRE(r.code == kExitOk);
    const json res = r.summary();
    CHECK(res.at("coarse_points") == 15);
    CHECK(res.at("error").get<double>() <= res.at("error_at_1_1").get<double>());

    std::ifstream table(ws.out("grid.csv"));
    std::string line;
    int coarse = 0;
    while (std::getline(table, line)) {
        if (line.rfind("coarse,", 0) == 0) ++coarse;
    }
    CHECK(coarse == 15);
}

TEST_CASE("chirp demo finds a sharper fractional order")
{
    Workspace ws("chirp");
    json cfg = {{"params", {{"vertices", {16}}, {"alpha_range", {0.5, 1.0}}, {"alpha_step", 0.05}}}};
    const Run r = ws.run("chirp-demo", cfg);
    REQUIRE(r.code == kExitOk);
    const json v = r.summary().at("results").at(0);
    CHECK(v.at("f0") == 130.0);
    CHECK(v.at("bandwidth") == 310.0);
    CHECK(v.at("best_ratio").get<double>() > v.at("ratio_at_1").get<double>());
    CHECK(fs::exists(ws.out("chirp_alpha_scan.csv")));
}

TEST_CASE("heat with zero speed scales by T over sqrt m")
{
    Workspace ws("heat");
    json cfg = {{"graph", {{"builtin", "path"}, {"n", 5}}}, {"m", 4},
                {"params", {{"s", 0.0}, {"horizon", 6}, {"impulse", 2}, {"frequencies", {0, 0, 0, 0}}}}};
    REQUIRE(ws.run("heat", cfg).code == kExitOk);
    const ComplexMatrix y = io::load_spectrum(ws.out("initial_spectrum.csv")).coeff;
    const ComplexMatrix x = io::load_spectrum(ws.out("heat_spectrum.csv")).coeff;
    CHECK(max_diff(x, 3.0 * y) < 1e-14);
}

TEST_CASE("wave instability maps to exit code 4")
{
    Workspace ws("wave");
    json cfg = {{"graph", {{"builtin", "cycle"}, {"n", 4}}}, {"m", 4}, {"params", {{"s", 1.5}}}};
    const Run r = ws.run("wave", cfg);
    CHECK(r.code == kExitStability);
    CHECK(r.err.find("UnstableSpeed") != std::string::npos);
    cfg["params"]["s"] = 0.5;
    CHECK(ws.run("wave", cfg).code == kExitOk);
}

TEST_CASE("compactness curve is monotone")
{
    Workspace ws("compactness");
    write_random_signal(ws, 4, 4, 8);
    REQUIRE(ws.run("compactness", ring_config(0.6, 0.4)).code == kExitOk);
    std::ifstream in(ws.out("compactness.csv"));
    std::string line;
    std::getline(in, line);
    CHECK(line == "percentile,error,error_hilbert,error_graph");
    double prev = -1.0;
    int rows = 0;
    while (std::getline(in, line)) {
        const auto fields = io::split_csv_line(line);
        const double err = io::parse_double(fields[1]);
        CHECK(err >= prev);
        prev = err;
        ++rows;
    }
    CHECK(rows == 21);
}

TEST_CASE("gen-graph writes a loadable edge list")
{
    Workspace ws("gen_graph");
    json cfg = {{"graph", {{"builtin", "geometric"}, {"n", 48}, {"radius", 0.25}, {"seed", 7}}}};
    const Run r = ws.run("gen-graph", cfg);
    REQUIRE(r.code == kExitOk);
    CHECK(r.summary().at("edges") == 174);
    CHECK(from_edge_list(ws.out("graph.csv")).edges().size() == 174u);

    json from_file = {{"graph", {{"edge_list", "out/graph.csv"}}}};
    CommandOptions again;
    again.out = ws.dir() / "again";
    CHECK(ws.run("gen-graph", from_file, again).code == kExitOk);
    CHECK(io::read_text(ws.dir() / "again" / "graph.csv") == io::read_text(ws.out("graph.csv")));
}

TEST_CASE("config validation errors exit with code 2")
{
    Workspace ws("config_errors");
    write_random_signal(ws, 4, 4, 9);
    json unknown = ring_config(1, 1);
    unknown["colour"] = "red";
    CHECK(ws.run("transform", unknown).code == kExitConfig);

    json bad_param = ring_config(1, 1);
    bad_param["params"]["gain"] = 2;
    CHECK(ws.run("transform", bad_param).code == kExitConfig);

    json wrong_type = ring_config(1, 1);
    wrong_type["alpha"] = "one";
    CHECK(ws.run("transform", wrong_type).code == kExitConfig);

    json mismatch = ring_config(1, 1);
    mismatch["experiment"] = "heat";
    CHECK(ws.run("transform", mismatch).code == kExitConfig);

    json no_graph = ring_config(1, 1);
    no_graph.erase("graph");
    CHECK(ws.run("transform", no_graph).code == kExitConfig);

    json wrong_size = ring_config(1, 1);
    wrong_size["graph"]["n"] = 5;
    CHECK(ws.run("transform", wrong_size).code == kExitConfig);

    json missing_file = ring_config(1, 1);
    missing_file["params"]["signal"] = "nope.csv";
    CHECK(ws.run("transform", missing_file).code == kExitConfig);

    io::write_text(ws.dir() / "broken.json", "{not json");
    CommandOptions broken;
    broken.config = ws.dir() / "broken.json";
    std::ostringstream out, err;
    CHECK(run_command("transform", broken, out, err) == kExitConfig);
    CHECK(run_command("no-such-command", {}, out, err) == kExitConfig);
}

TEST_CASE("HGFRFT_MAX_DIM caps the joint size")
{
    Workspace ws("max_dim");
    write_random_signal(ws, 4, 4, 10);
    ::setenv("HGFRFT_MAX_DIM", "15", 1);
    const Run capped = ws.run("transform", ring_config(1, 1));
    ::setenv("HGFRFT_MAX_DIM", "16", 1);
    const Run fits = ws.run("transform", ring_config(1, 1));
    ::unsetenv("HGFRFT_MAX_DIM");
    CHECK(capped.code == kExitConfig);
    CHECK(fits.code == kExitOk);
}

TEST_CASE("exit code mapping")
{
    CHECK(exit_code_for(ErrorCode::ConfigError) == kExitConfig);
    CHECK(exit_code_for(ErrorCode::ParseError) == kExitConfig);
    CHECK(exit_code_for(ErrorCode::UnstableSpeed) == kExitStability);
    CHECK(exit_code_for(ErrorCode::RankDeficient) == kExitNumeric);
    CHECK(exit_code_for(ErrorCode::NotNormal) == kExitNumeric);
    CHECK(command_names().size() == 15u);
}
