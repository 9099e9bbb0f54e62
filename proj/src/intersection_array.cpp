#include "drg/intersection_array.hpp"

#include <atomic>
#include <charconv>
#include <sstream>

#include "drg/error.hpp"

namespace drg {

IntersectionArray::IntersectionArray(std::vector<long long> b, std::vector<long long> c)
    : b_(std::move(b)), c_(std::move(c)) {
  validate();
}

long long IntersectionArray::b(int i) const {
  if (i < 0 || i > diameter()) throw ArrayError("b index " + std::to_string(i) + " out of range");
  return i == diameter() ? 0 : b_[static_cast<std::size_t>(i)];
}

long long IntersectionArray::c(int i) const {
  if (i < 0 || i > diameter()) throw ArrayError("c index " + std::to_string(i) + " out of range");
  return i == 0 ? 0 : c_[static_cast<std::size_t>(i - 1)];
}

void IntersectionArray::validate() const {
  if (b_.empty()) throw ArrayError("intersection array needs diameter >= 1");
  if (b_.size() != c_.size())
    throw ArrayError("b and c lists differ in length (" + std::to_string(b_.size()) + " vs " +
                     std::to_string(c_.size()) + ")");
  const int d = diameter();
  for (int i = 0; i < d; ++i)
    if (b(i) < 1) throw ArrayError("b_" + std::to_string(i) + " must be >= 1 in " + str());
  for (int i = 1; i <= d; ++i)
    if (c(i) < 1) throw ArrayError("c_" + std::to_string(i) + " must be >= 1 in " + str());
  if (c(1) != 1) throw ArrayError("c_1 must be 1 in " + str());
  for (int i = 0; i <= d; ++i)
    if (a(i) < 0) throw ArrayError("a_" + std::to_string(i) + " is negative in " + str());
  for (int i = 0; i + 1 < d; ++i)
    if (b(i) < b(i + 1)) throw ArrayError("b is not non-increasing at " + std::to_string(i) + " in " + str());
  for (int i = 1; i < d; ++i)
    if (c(i) > c(i + 1)) throw ArrayError("c is not non-decreasing at " + std::to_string(i) + " in " + str());
  (void)k_sequence(*this);
}

IntersectionArray IntersectionArray::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != '{' && ch != '}' && ch != ' ' && ch != '\t') s += ch;
  const auto semi = s.find(';');
  if (semi == std::string::npos || s.find(';', semi + 1) != std::string::npos)
    throw ArrayError("intersection array '" + std::string(text) + "' needs exactly one ';'");
  auto numbers = [&](std::string_view part) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos <= part.size()) {
      const auto comma = std::min(part.find(',', pos), part.size());
      const auto tok = part.substr(pos, comma - pos);
      long long v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size())
        throw ArrayError("bad number '" + std::string(tok) + "' in intersection array '" + std::string(text) + "'");
      out.push_back(v);
      pos = comma + 1;
    }
    return out;
  };
  const std::string_view sv = s;
  return IntersectionArray(numbers(sv.substr(0, semi)), numbers(sv.substr(semi + 1)));
}

std::string IntersectionArray::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < b_.size(); ++i) os << (i ? "," : "") << b_[i];
  os << ';';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << '}';
  return os.str();
}

KSequence k_sequence(const IntersectionArray& a) {
  KSequence ks;
  ks.k.push_back(1);
  for (int i = 0; i < a.diameter(); ++i) {
    long long num = 0;
    if (__builtin_mul_overflow(ks.k.back(), a.b(i), &num))
      throw ArrayError("K_" + std::to_string(i + 1) + " overflows");
    if (num % a.c(i + 1) != 0)
      throw ArrayError("K_" + std::to_string(i + 1) + " = " + std::to_string(num) + "/" +
                       std::to_string(a.c(i + 1)) + " is not an integer");
    ks.k.push_back(num / a.c(i + 1));
  }
  for (auto v : ks.k)
    if (__builtin_add_overflow(ks.n, v, &ks.n)) throw ArrayError("vertex count overflows");
  return ks;
}

SRGParams srg_params(const IntersectionArray& a) {
  if (a.diameter() != 2)
    throw ArrayError("srg_params needs diameter 2, got " + std::to_string(a.diameter()) + " for " + a.str());
  return {k_sequence(a).n, a.valency(), a.a(1), a.c(2)};
}

std::optional<SRGParams> srg_params_of(const Graph& g) {
  const auto k = g.regular_degree();
  if (!k) return std::nullopt;
  std::optional<long long> lambda, mu;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const auto common = static_cast<long long>(g.row(u).intersection_count(g.row(v)));
      auto& slot = g.adjacent(u, v) ? lambda : mu;
      if (!slot) slot = common;
      else if (*slot != common) return std::nullopt;
    }
  return SRGParams{static_cast<long long>(g.order()), static_cast<long long>(*k), lambda.value_or(0),
                   mu.value_or(0)};
}

ArrayClass classify(const IntersectionArray& a) {
  ArrayClass cls;
  const int d = a.diameter();
  cls.bipartite = true;
  for (int i = 0; i <= d; ++i)
    if (a.a(i) != 0) cls.bipartite = false;
  cls.antipodal = d >= 2;
  for (int i = 0; i < d && cls.antipodal; ++i)
    if (i != d / 2 && a.b(i) != a.c(d - i)) cls.antipodal = false;
  if (cls.antipodal) cls.fiber_size = 1 + k_sequence(a).k.back();
  return cls;
}

std::string ArrayMismatch::message() const {
  std::ostringstream os;
  if (what == "b" || what == "c") {
    os << what << '_' << i << ": expected " << expected << ", found " << found << " (x=" << x << ", y=" << y << ")";
  } else {
    os << what << ": expected " << expected << ", found " << found;
  }
  return os.str();
}

namespace {

// Per-root scan: for every x, counts neighbors of x one step further from /
// closer to the root. Writes first-seen values into b/c (−1 = unset) and
// returns false on the first inconsistency.
bool scan_root(const Graph& g, const DistanceTable& t, Vertex root, std::vector<long long>& b,
               std::vector<long long>& c, ArrayMismatch* where, const std::vector<long long>* expect_b,
               const std::vector<long long>* expect_c) {
  auto r = t.row(root);
  for (Vertex x = 0; x < g.order(); ++x) {
    const int i = r[x];
    long long nb = 0, nc = 0;
    for (Vertex w : g.neighbors(x)) {
      if (r[w] == i + 1) ++nb;
      else if (r[w] + 1 == i) ++nc;
    }
    auto check = [&](std::vector<long long>& seen, const std::vector<long long>* expect, long long v,
                     const char* what) {
      long long want = expect ? (*expect)[static_cast<std::size_t>(i)] : seen[static_cast<std::size_t>(i)];
      if (!expect && want < 0) {
        seen[static_cast<std::size_t>(i)] = v;
        return true;
      }
      if (want == v) return true;
      if (where) *where = ArrayMismatch{what, i, want, v, x, root};
      return false;
    };
    if (!check(b, expect_b, nb, "b") || !check(c, expect_c, nc, "c")) return false;
  }
  return true;
}

std::optional<IntersectionArray> assemble(const std::vector<long long>& b, const std::vector<long long>& c,
                                          int d) {
  std::vector<long long> bs(b.begin(), b.begin() + d), cs(c.begin() + 1, c.begin() + d + 1);
  try {
    return IntersectionArray(std::move(bs), std::move(cs));
  } catch (const ArrayError&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<IntersectionArray> verify_intersection_array_serial(const Graph& g, const DistanceTable& t) {
  if (g.order() < 2) return std::nullopt;
  const auto levels = static_cast<std::size_t>(t.diameter) + 1;
  std::vector<long long> b(levels, -1), c(levels, -1);
  for (Vertex y = 0; y < g.order(); ++y)
    if (!scan_root(g, t, y, b, c, nullptr, nullptr, nullptr)) return std::nullopt;
  return assemble(b, c, t.diameter);
}

std::optional<IntersectionArray> verify_intersection_array(const Graph& g, const DistanceTable& t) {
  if (g.order() < 2) return std::nullopt;
  const auto levels = static_cast<std::size_t>(t.diameter) + 1;
  // Root 0 fixes the candidate values; every other root is checked against it.
  std::vector<long long> b(levels, -1), c(levels, -1);
  if (!scan_root(g, t, 0, b, c, nullptr, nullptr, nullptr)) return std::nullopt;
  std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t y = 1; y < static_cast<std::int64_t>(g.order()); ++y) {
    if (!ok.load(std::memory_order_relaxed)) continue;
    std::vector<long long> sb(levels), sc(levels);
    if (!scan_root(g, t, static_cast<Vertex>(y), sb, sc, nullptr, &b, &c)) ok = false;
  }
  if (!ok) return std::nullopt;
  return assemble(b, c, t.diameter);
}

std::optional<IntersectionArray> verify_intersection_array(const Graph& g) {
  if (!is_connected(g)) return std::nullopt;
  return verify_intersection_array(g, distance_table(g));
}

std::optional<ArrayMismatch> check_intersection_array(const Graph& g, const DistanceTable& t,
                                                      const IntersectionArray& a) {
  const auto ks = k_sequence(a);
  if (static_cast<long long>(g.order()) != ks.n)
    return ArrayMismatch{"order", -1, ks.n, static_cast<long long>(g.order())};
  if (t.diameter != a.diameter()) return ArrayMismatch{"diameter", -1, a.diameter(), t.diameter};
  std::vector<long long> eb, ec;
  for (int i = 0; i <= a.diameter(); ++i) {
    eb.push_back(a.b(i));
    ec.push_back(a.c(i));
  }
  std::vector<long long> sb(eb.size()), sc(ec.size());
  ArrayMismatch where;
  for (Vertex y = 0; y < g.order(); ++y)
    if (!scan_root(g, t, y, sb, sc, &where, &eb, &ec)) return where;
  return std::nullopt;
}

IntersectionArray odd_family_array(int n, int d) {
  std::vector<long long> b, c;
  for (int i = 0; i < d; ++i) b.push_back(n - (i + 1) / 2);
  for (int i = 1; i <= d; ++i) c.push_back((i + 1) / 2);
  return {b, c};
}

}  // namespace drg
