#pragma once

#include "ascheme/generators.hpp"
#include "ascheme/graphs.hpp"
#include "ascheme/io.hpp"
#include "ascheme/report.hpp"
#include "ascheme/schemes.hpp"
#include "ascheme/spherical.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ascheme {

struct Options {
    double tol = kDefaultTol;
    bool json = false;
    std::size_t max_dense = kDefaultMaxDense;
    int seed_set = 0;
    SphereRoute route = SphereRoute::Size;
};

/// Summary, Moore bound, projector entries and the large-graph conclusions.
std::vector<TheoremReport> analyze_graph(const Graph& g, const std::string& subject, const Options& opt);

/// Parameters plus every per-index polynomial check and the spherical
/// embedding of each idempotent.
std::vector<TheoremReport> analyze_scheme(const RelationPartition& rel, const std::string& subject,
                                          const Options& opt);

/// Same checks from intersection numbers alone (no spherical embedding).
std::vector<TheoremReport> analyze_parametric(const TensorFile& tensor, const std::string& subject,
                                              const Options& opt);

std::vector<TheoremReport> analyze_gram(const SymMatrix& gram, const std::string& subject, const Options& opt,
                                        std::optional<int> declared_d = std::nullopt);

struct ScanRow {
    int parameter = 0;
    std::uint64_t points = 0;
    std::int64_t k1 = 0;
    std::uint64_t moore = 0;
    bool p_holds = false;
    std::int64_t m1 = 0;
    std::uint64_t absolute = 0;
    bool q_holds = false;
    std::string error;
};

struct ScanSide {
    std::optional<int> first_true;
    std::optional<int> last_false;
    bool monotone = true;
};

/// Threshold table for `johnson<k>` (parameter n) or `hamming<d>`
/// (parameter q), base index j = 1, using closed-form parameters.
struct ScanResult {
    std::string family;
    std::vector<ScanRow> rows;
    ScanSide p_side;
    ScanSide q_side;
};

ScanResult scan_family(const std::string& family, int lo, int hi, double tol = kDefaultTol);
nlohmann::json to_json(const ScanResult& scan);
std::string render_scan(const ScanResult& scan);

/// Parses "lo..hi".
std::pair<int, int> parse_range(const std::string& text);

/// Entry point shared by the executable and the tests. Returns the exit code:
/// 0 when no check failed, 1 when some check failed, 2 on input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ascheme
