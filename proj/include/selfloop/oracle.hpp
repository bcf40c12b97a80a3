#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "selfloop/graph.hpp"

namespace selfloop {

// Exact dense integer matrix; every product is overflow checked.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from(const AdjacencyMatrix& a);

  std::size_t size() const noexcept { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  std::int64_t trace() const;
  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);

 private:
  std::size_t n_;
  std::vector<std::int64_t> entries_;
};

struct WalkEnumeration {
  int k = 0;
  std::vector<std::int64_t> per_vertex;
  std::int64_t total = 0;
};

inline constexpr std::size_t kMaxEnumerationVertices = 12;
inline constexpr int kMaxEnumerationLength = 8;

// Brute-force depth-first listing of every closed k-walk; a loop step
// v -> v is allowed exactly when v carries a loop. Throws SizeLimitExceeded
// beyond n = 12 or k = 8.
WalkEnumeration enumerate_closed_walks(const SelfLoopGraph& g, int k);

// A(G_S)^k by repeated multiplication. Throws Overflow.
IntMatrix matrix_power(const SelfLoopGraph& g, int k);

// Tr(A(G_S)^k); k = 0 gives n.
std::int64_t trace_power(const SelfLoopGraph& g, int k);

}  // namespace selfloop
