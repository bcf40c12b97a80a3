#include "selfloop/oracle.hpp"

#include "selfloop/checked.hpp"
#include "selfloop/error.hpp"

namespace selfloop {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from(const AdjacencyMatrix& a) {
  IntMatrix m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = a(i, j);
  return m;
}

std::int64_t IntMatrix::trace() const {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < n_; ++i) t = checked_add(t, (*this)(i, i));
  return t;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  const std::size_t n = x.size();
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      const std::int64_t xil = x(i, l);
      if (xil == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) = checked_add(out(i, j), checked_mul(xil, y(l, j)));
    }
  return out;
}

namespace {

// Counts walks of `remaining` further steps from `at` that end at `start`.
std::int64_t extend(const AdjacencyMatrix& a, std::size_t start, std::size_t at, int remaining) {
  if (remaining == 0) return at == start ? 1 : 0;
  std::int64_t count = 0;
  for (std::size_t next = 0; next < a.size(); ++next)
    if (a(at, next) != 0) count += extend(a, start, next, remaining - 1);
  return count;
}

}  // namespace

WalkEnumeration enumerate_closed_walks(const SelfLoopGraph& g, int k) {
  if (g.order() > kMaxEnumerationVertices || k > kMaxEnumerationLength)
    throw Error(ErrorCode::SizeLimitExceeded, "walk enumeration limited to n <= 12 and k <= 8");
  if (k < 0) throw Error(ErrorCode::IndexOutOfRange, "walk length must be non-negative");

  const AdjacencyMatrix a = adjacency(g);
  WalkEnumeration out;
  out.k = k;
  out.per_vertex.assign(g.order(), 0);
  for (std::size_t v = 0; v < g.order(); ++v) {
    out.per_vertex[v] = extend(a, v, v, k);
    out.total += out.per_vertex[v];
  }
  return out;
}

IntMatrix matrix_power(const SelfLoopGraph& g, int k) {
  if (k < 0) throw Error(ErrorCode::IndexOutOfRange, "matrix power must be non-negative");
  const IntMatrix a = IntMatrix::from(adjacency(g));
  IntMatrix out = IntMatrix::identity(g.order());
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

std::int64_t trace_power(const SelfLoopGraph& g, int k) { return matrix_power(g, k).trace(); }

}  // namespace selfloop
