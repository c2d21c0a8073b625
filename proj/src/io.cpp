#include "hgfrft/io.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hgfrft::io {
namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::vector<std::string>> read_rows(std::istream& in)
{
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) {
            continue;
        }
        rows.push_back(split_csv_line(line));
    }
    return rows;
}

bool is_header(const std::vector<std::string>& row)
{
    if (row.empty()) {
        return false;
    }
    try {
        parse_double(row.front());
        return false;
    } catch (const Error&) {
        return true;
    }
}

}  // namespace

std::string format_double(double x)
{
    if (x == 0.0) {
        return "0";  // folds -0.0 so outputs stay byte-stable
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

double parse_double(std::string_view s)
{
    s = trim(s);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw Error(ErrorCode::ParseError, "not a number: '" + std::string(s) + "'");
    }
    return value;
}

long long parse_integer(std::string_view s)
{
    s = trim(s);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(s) + "'");
    }
    return value;
}

std::vector<std::string> split_csv_line(std::string_view line)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(',', start);
        out.emplace_back(trim(line.substr(start, pos == std::string_view::npos ? line.npos : pos - start)));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

void write_joint_csv(std::ostream& out, const ComplexMatrix& x)
{
    for (Index i = 0; i < x.rows(); ++i) {
        for (Index j = 0; j < x.cols(); ++j) {
            if (j > 0) {
                out << ',';
            }
            out << format_double(x(i, j).real()) << ',' << format_double(x(i, j).imag());
        }
        out << '\n';
    }
}

ComplexMatrix read_joint_csv(std::istream& in)
{
    auto rows = read_rows(in);
    if (!rows.empty() && is_header(rows.front())) {
        rows.erase(rows.begin());
    }
    if (rows.empty()) {
        throw Error(ErrorCode::ParseError, "joint CSV has no data rows");
    }
    const std::size_t width = rows.front().size();
    if (width == 0 || width % 2 != 0) {
        throw Error(ErrorCode::ParseError, "joint CSV rows need an even number of columns");
    }
    ComplexMatrix x(static_cast<Index>(rows.size()), static_cast<Index>(width / 2));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != width) {
            throw Error(ErrorCode::ParseError, "row " + std::to_string(i + 1) + " has a different width");
        }
        for (std::size_t j = 0; j < width / 2; ++j) {
            x(static_cast<Index>(i), static_cast<Index>(j)) = {parse_double(rows[i][2 * j]),
                                                               parse_double(rows[i][2 * j + 1])};
        }
    }
    return x;
}

nlohmann::json to_json(const JointMetadata& meta)
{
    return {{"m", meta.m}, {"n", meta.n}, {"alpha", meta.alpha}, {"beta", meta.beta}};
}

JointMetadata metadata_from_json(const nlohmann::json& j)
{
    try {
        return {j.at("m").get<Index>(), j.at("n").get<Index>(), j.at("alpha").get<double>(),
                j.at("beta").get<double>()};
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("metadata: ") + e.what());
    }
}

std::filesystem::path sidecar_path(const std::filesystem::path& csv)
{
    auto p = csv;
    p.replace_extension(".json");
    return p;
}

std::string read_text(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text)
{
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot write " + path.string());
    }
    out << text;
}

namespace {

void save_joint(const std::filesystem::path& csv, const ComplexMatrix& x, double alpha, double beta)
{
    std::ostringstream ss;
    write_joint_csv(ss, x);
    write_text(csv, ss.str());
    write_text(sidecar_path(csv), to_json(JointMetadata{x.rows(), x.cols(), alpha, beta}).dump(2) + "\n");
}

}  // namespace

void save_signal(const std::filesystem::path& csv, const JointSignal& sig)
{
    save_joint(csv, sig.x, 0.0, 0.0);
}

void save_spectrum(const std::filesystem::path& csv, const JointSpectrum& spec)
{
    save_joint(csv, spec.coeff, spec.alpha, spec.beta);
}

JointSignal load_signal(const std::filesystem::path& csv)
{
    std::istringstream in(read_text(csv));
    return {read_joint_csv(in)};
}

JointSpectrum load_spectrum(const std::filesystem::path& csv)
{
    std::istringstream in(read_text(csv));
    JointSpectrum spec{read_joint_csv(in)};
    const auto side = sidecar_path(csv);
    if (std::filesystem::exists(side)) {
        const JointMetadata meta = metadata_from_json(nlohmann::json::parse(read_text(side)));
        if (meta.m != spec.m() || meta.n != spec.n()) {
            throw Error(ErrorCode::DimensionMismatch, "sidecar shape differs from CSV shape");
        }
        spec.alpha = meta.alpha;
        spec.beta = meta.beta;
    }
    return spec;
}

void write_vector_csv(std::ostream& out, const ComplexVector& v)
{
    for (Index k = 0; k < v.size(); ++k) {
        out << format_double(v[k].real()) << ',' << format_double(v[k].imag()) << '\n';
    }
}

ComplexVector read_vector_csv(std::istream& in)
{
    auto rows = read_rows(in);
    if (!rows.empty() && is_header(rows.front())) {
        rows.erase(rows.begin());
    }
    ComplexVector v(static_cast<Index>(rows.size()));
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k].size() == 1) {
            v[static_cast<Index>(k)] = parse_double(rows[k][0]);
        } else if (rows[k].size() == 2) {
            v[static_cast<Index>(k)] = {parse_double(rows[k][0]), parse_double(rows[k][1])};
        } else {
            throw Error(ErrorCode::ParseError, "vector row " + std::to_string(k + 1) + " needs re[,im]");
        }
    }
    return v;
}

void save_vector(const std::filesystem::path& csv, const ComplexVector& v)
{
    std::ostringstream ss;
    write_vector_csv(ss, v);
    write_text(csv, ss.str());
}

ComplexVector load_vector(const std::filesystem::path& csv)
{
    std::istringstream in(read_text(csv));
    return read_vector_csv(in);
}

nlohmann::json to_json(const FrequencyRegion& region)
{
    auto arr = nlohmann::json::array();
    for (const auto& [i, j] : region.pairs()) {
        arr.push_back({i, j});
    }
    return arr;
}

FrequencyRegion region_from_json(const nlohmann::json& j, Index m, Index n)
{
    if (!j.is_array()) {
        throw Error(ErrorCode::ParseError, "region must be a JSON array of [i, j] pairs");
    }
    std::vector<FrequencyRegion::Pair> pairs;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer()) {
            throw Error(ErrorCode::ParseError, "region entries must be [i, j] integer pairs");
        }
        pairs.emplace_back(item[0].get<Index>(), item[1].get<Index>());
    }
    return FrequencyRegion(std::move(pairs), m, n);
}

nlohmann::json to_json(const SamplingPlan& plan)
{
    return {{"w", plan.w},
            {"support", to_json(plan.support)},
            {"alpha", plan.alpha},
            {"beta", plan.beta},
            {"m", plan.support.m()},
            {"n", plan.support.n()}};
}

PlanSpec plan_from_json(const nlohmann::json& j)
{
    try {
        PlanSpec spec;
        spec.w = j.at("w").get<std::vector<Index>>();
        for (const auto& item : j.at("support")) {
            spec.support.emplace_back(item.at(0).get<Index>(), item.at(1).get<Index>());
        }
        spec.alpha = j.at("alpha").get<double>();
        spec.beta = j.at("beta").get<double>();
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("sampling plan: ") + e.what());
    }
}

}  // namespace hgfrft::io
