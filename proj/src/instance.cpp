#include "bomst/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

namespace bomst {

namespace {

std::size_t edge_count(int n) { return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2; }

// Position of (u, v), u < v, in the lexicographic edge order.
std::size_t pair_index(int n, int u, int v) {
  const auto uu = static_cast<std::size_t>(u);
  return uu * static_cast<std::size_t>(n) - uu * (uu + 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

double open_unit(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

Value to_cost(double u, Value range) {
  const auto c = static_cast<Value>(std::floor(u * static_cast<double>(range))) + 1;
  return std::clamp<Value>(c, 1, range);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

}  // namespace

void validate(const Instance& instance) {
  if (instance.n < 2) throw std::invalid_argument("instance needs at least 2 vertices");
  if (instance.edges.size() != edge_count(instance.n)) throw std::invalid_argument("incomplete graph");
  std::vector<char> seen(instance.edges.size(), 0);
  for (const auto& e : instance.edges) {
    if (e.u < 0 || e.v >= instance.n || e.u >= e.v) throw std::invalid_argument("edge endpoints out of order or range");
    if (e.c1 < 1 || e.c1 > kMaxCost || e.c2 < 1 || e.c2 > kMaxCost) throw std::invalid_argument("cost out of range");
    auto& s = seen[pair_index(instance.n, e.u, e.v)];
    if (s) throw std::invalid_argument("duplicate edge");
    s = 1;
  }
}

Instance generate(const GenParams& params) {
  if (params.n < 3) throw std::invalid_argument("generate: n must be at least 3");
  if (params.range < 1 || params.range > kMaxCost) throw std::invalid_argument("generate: range out of bounds");
  if (!(params.rho >= -1.0 && params.rho <= 1.0)) throw std::invalid_argument("generate: rho must lie in [-1, 1]");

  std::mt19937_64 rng(params.seed);
  const double tail = std::sqrt(1.0 - params.rho * params.rho);
  Instance out;
  out.n = params.n;
  out.edges.reserve(edge_count(params.n));
  for (int u = 0; u < params.n; ++u) {
    for (int v = u + 1; v < params.n; ++v) {
      const double u1 = open_unit(rng);
      const double u2 = open_unit(rng);
      const double radius = std::sqrt(-2.0 * std::log(u1));
      const double g1 = radius * std::cos(2.0 * std::numbers::pi * u2);
      const double g2 = radius * std::sin(2.0 * std::numbers::pi * u2);
      const double h = params.rho * g1 + tail * g2;
      out.edges.push_back({u, v, to_cost(normal_cdf(g1), params.range), to_cost(normal_cdf(h), params.range)});
    }
  }
  return out;
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Instance parse_instance(std::istream& in) {
  Instance out;
  std::string text;
  std::size_t line_no = 0;
  std::size_t expected = 0;
  bool have_header = false;
  std::vector<char> seen;

  while (std::getline(in, text)) {
    ++line_no;
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    std::istringstream ls(text);
    std::string tag;
    ls >> tag;
    if (!have_header) {
      std::string kind;
      long long n = 0;
      long long m = 0;
      if (tag != "p" || !(ls >> kind >> n >> m) || kind != "bomst") throw ParseError(line_no, "malformed header");
      std::string rest;
      if (ls >> rest) throw ParseError(line_no, "malformed header");
      if (n < 2 || n > 100000) throw ParseError(line_no, "malformed header: vertex count out of range");
      out.n = static_cast<int>(n);
      expected = edge_count(out.n);
      if (m < 0 || static_cast<std::size_t>(m) != expected) {
        throw ParseError(line_no, "malformed header: edge count must be n(n-1)/2");
      }
      seen.assign(expected, 0);
      out.edges.reserve(expected);
      have_header = true;
      continue;
    }
    long long u = 0;
    long long v = 0;
    long long c1 = 0;
    long long c2 = 0;
    if (tag != "e" || !(ls >> u >> v >> c1 >> c2)) throw ParseError(line_no, "malformed edge line");
    std::string rest;
    if (ls >> rest) throw ParseError(line_no, "malformed edge line");
    if (u < 1 || v < 1 || u > out.n || v > out.n) throw ParseError(line_no, "vertex out of range");
    if (u >= v) throw ParseError(line_no, "edge endpoints must satisfy u < v");
    if (c1 < 1 || c1 > kMaxCost || c2 < 1 || c2 > kMaxCost) throw ParseError(line_no, "cost out of range");
    auto& s = seen[pair_index(out.n, static_cast<int>(u - 1), static_cast<int>(v - 1))];
    if (s) throw ParseError(line_no, "duplicate edge");
    s = 1;
    out.edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1), c1, c2});
  }
  if (!have_header) throw ParseError(line_no, "malformed header: missing 'p bomst' line");
  if (out.edges.size() != expected) throw ParseError(line_no, "incomplete graph");
  return out;
}

void write_instance(const Instance& instance, std::ostream& out) {
  out << "p bomst " << instance.n << ' ' << instance.edges.size() << '\n';
  for (const auto& e : instance.edges) {
    out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.c1 << ' ' << e.c2 << '\n';
  }
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file " + path.string());
  return parse_instance(in);
}

void write_instance(const Instance& instance, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file " + path.string());
  write_instance(instance, out);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

double cost_correlation(const Instance& instance) {
  const auto k = static_cast<double>(instance.edges.size());
  double m1 = 0;
  double m2 = 0;
  for (const auto& e : instance.edges) {
    m1 += static_cast<double>(e.c1);
    m2 += static_cast<double>(e.c2);
  }
  m1 /= k;
  m2 /= k;
  double s11 = 0;
  double s22 = 0;
  double s12 = 0;
  for (const auto& e : instance.edges) {
    const double d1 = static_cast<double>(e.c1) - m1;
    const double d2 = static_cast<double>(e.c2) - m2;
    s11 += d1 * d1;
    s22 += d2 * d2;
    s12 += d1 * d2;
  }
  if (s11 == 0 || s22 == 0) return 0.0;
  return s12 / std::sqrt(s11 * s22);
}

}  // namespace bomst
