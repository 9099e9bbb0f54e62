#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drg/graph.hpp"

namespace drg {

/// {b_0, ..., b_{d-1}; c_1, ..., c_d} of a distance-regular graph.
class IntersectionArray {
 public:
  IntersectionArray() = default;
  /// Throws ArrayError unless the array is well formed (see validate()).
  IntersectionArray(std::vector<long long> b, std::vector<long long> c);

  /// Parses "b0,b1,...;c1,c2,..." with optional surrounding braces.
  static IntersectionArray parse(std::string_view text);

  int diameter() const { return static_cast<int>(b_.size()); }
  long long valency() const { return b_.front(); }
  /// b_i for 0 <= i <= d (b_d = 0).
  long long b(int i) const;
  /// c_i for 0 <= i <= d (c_0 = 0).
  long long c(int i) const;
  /// a_i = k - b_i - c_i.
  long long a(int i) const { return valency() - b(i) - c(i); }

  const std::vector<long long>& bs() const { return b_; }
  const std::vector<long long>& cs() const { return c_; }

  std::string str() const;
  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;

 private:
  void validate() const;

  std::vector<long long> b_;
  std::vector<long long> c_;
};

/// K_0..K_d with K_{i+1} c_{i+1} = K_i b_i.
struct KSequence {
  std::vector<long long> k;
  long long n = 0;
};

/// Throws ArrayError naming the step where a division is inexact.
KSequence k_sequence(const IntersectionArray& a);

struct SRGParams {
  long long n = 0, k = 0, lambda = 0, mu = 0;
  friend bool operator==(const SRGParams&, const SRGParams&) = default;
};

/// Parameters of the strongly regular graph with a diameter-2 array.
SRGParams srg_params(const IntersectionArray& a);

/// SRG parameters of a graph, if it is strongly regular (regular, with
/// constant common-neighbor counts on edges and on non-edges).
std::optional<SRGParams> srg_params_of(const Graph& g);

struct ArrayClass {
  bool bipartite = false;
  bool antipodal = false;
  long long fiber_size = 1;  // 1 + K_d when antipodal
  bool primitive() const { return !bipartite && !antipodal; }
};

/// Array-level classification: bipartite iff all a_i = 0; antipodal iff
/// b_i = c_{d-i} for all i != floor(d/2).
ArrayClass classify(const IntersectionArray& a);

/// {n, n-1, n-1, n-2, n-2, ...; 1, 1, 2, 2, ...} with diameter d:
/// d = n - 1 gives the odd graph O_n, d = 2n - 1 the doubled odd graph DO_n.
IntersectionArray odd_family_array(int n, int d);

/// First place where a graph fails to have a given intersection array.
struct ArrayMismatch {
  std::string what;  // "order", "diameter", "b" or "c"; irregularity shows as b_0
  int i = -1;
  long long expected = 0;
  long long found = 0;
  Vertex x = 0, y = 0;
  std::string message() const;
};

/// The intersection array of g, if g is distance-regular. Parallel over roots.
std::optional<IntersectionArray> verify_intersection_array(const Graph& g);
std::optional<IntersectionArray> verify_intersection_array(const Graph& g, const DistanceTable& t);
/// Single-threaded reference for verify_intersection_array.
std::optional<IntersectionArray> verify_intersection_array_serial(const Graph& g, const DistanceTable& t);

/// Checks g against a registered array; nullopt when it matches.
std::optional<ArrayMismatch> check_intersection_array(const Graph& g, const DistanceTable& t,
                                                      const IntersectionArray& a);

}  // namespace drg
