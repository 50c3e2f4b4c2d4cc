/**
 * @file instance.hpp
 * @brief Complete bi-objective graphs: generation with controlled cost
 * correlation, and the line-oriented text format.
 *
 * File format (1-indexed vertices, '#' lines are comments):
 *
 *     p bomst <n> <m>          m = n(n-1)/2
 *     e <u> <v> <c1> <c2>      u < v, one line per unordered pair
 */

#ifndef BOMST_INSTANCE_HPP
#define BOMST_INSTANCE_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "bomst/geometry.hpp"

namespace bomst {

/// Largest accepted edge cost. Keeps every weighted tree value inside int64.
inline constexpr Value kMaxCost = 1'000'000;

/// Undirected edge with 0-based endpoints, u < v.
struct Edge {
  int u = 0;
  int v = 0;
  Value c1 = 1;
  Value c2 = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Instance {
  int n = 0;
  std::vector<Edge> edges;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Throws std::invalid_argument unless @p instance is a complete graph on n
/// vertices with every cost in [1, kMaxCost].
void validate(const Instance& instance);

struct GenParams {
  int n = 0;
  Value range = 100;  ///< upper cost limit r; the lower limit is fixed at 1
  double rho = 0.0;   ///< target correlation in [-1, 1]
  std::uint64_t seed = 0;
};

/**
 * @brief Generates a complete graph with correlated cost pairs.
 *
 * For each edge (u, v), u < v in lexicographic order, two uniforms from
 * std::mt19937_64 (53-bit mantissa, (k + 0.5) * 2^-53) feed a Box-Muller
 * transform giving independent standard normals g1, g2. The pair
 * (g1, rho*g1 + sqrt(1-rho^2)*g2) is mapped through the standard normal CDF
 * and scaled to {1..r} by floor(u*r) + 1, clamped to r.
 *
 * Throws std::invalid_argument for n < 3, r outside [1, kMaxCost] or |rho| > 1.
 */
[[nodiscard]] Instance generate(const GenParams& params);

/// Parse failure carrying the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

[[nodiscard]] Instance parse_instance(std::istream& in);
void write_instance(const Instance& instance, std::ostream& out);

/// Throws std::runtime_error when the file cannot be opened, ParseError on bad content.
[[nodiscard]] Instance read_instance(const std::filesystem::path& path);
void write_instance(const Instance& instance, const std::filesystem::path& path);

/// Sample Pearson correlation of (c1, c2) over all edges.
[[nodiscard]] double cost_correlation(const Instance& instance);

}  // namespace bomst

#endif  // BOMST_INSTANCE_HPP
