#include "eventgraph/double_description.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "eventgraph/error.hpp"

namespace eventgraph::dd {

namespace {

struct Overflow {};

// Exact arithmetic policies. The 64-bit policy throws Overflow on any
// intermediate that leaves the representable range.
struct Checked64 {
  using T = std::int64_t;

  static T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T add(T a, T b) {
    T r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  // (a*b - c*d) / e with exact division, 128-bit intermediate.
  static T cross_div(T a, T b, T c, T d, T e) {
    __extension__ using Wide = __int128;
    Wide r = (static_cast<Wide>(a) * b - static_cast<Wide>(c) * d) / e;
    if (r > std::numeric_limits<T>::max() || r < std::numeric_limits<T>::min()) throw Overflow{};
    return static_cast<T>(r);
  }
  static T gcd(T a, T b) {
    if (a == std::numeric_limits<T>::min() || b == std::numeric_limits<T>::min()) throw Overflow{};
    return std::gcd(a, b);
  }
  static T from(const Integer& v) {
    if (v > std::numeric_limits<T>::max() || v < std::numeric_limits<T>::min()) throw Overflow{};
    return v.convert_to<T>();
  }
  static Integer to(T v) { return Integer(v); }
};

struct Arbitrary {
  using T = Integer;

  static T mul(const T& a, const T& b) { return a * b; }
  static T add(const T& a, const T& b) { return a + b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T cross_div(const T& a, const T& b, const T& c, const T& d, const T& e) {
    return T((a * b - c * d) / e);
  }
  static T gcd(const T& a, const T& b) { return boost::multiprecision::gcd(a, b); }
  static T from(const Integer& v) { return v; }
  static Integer to(const T& v) { return v; }
};

using Word = std::uint64_t;

// Rays live in flat arrays: `dim` coefficients and `words` zero-set words
// per ray. Bit k of the zero set means the k-th inserted row is tight.
template <class A>
struct RayStore {
  using T = typename A::T;

  std::size_t dim = 0;
  std::size_t words = 0;
  std::vector<T> coeffs;
  std::vector<Word> zeros;

  std::size_t size() const { return dim == 0 ? 0 : coeffs.size() / dim; }
  const T* ray(std::size_t i) const { return coeffs.data() + i * dim; }
  const Word* zero(std::size_t i) const { return zeros.data() + i * words; }
  Word* zero(std::size_t i) { return zeros.data() + i * words; }

  void append(const T* c, const Word* z) {
    coeffs.insert(coeffs.end(), c, c + dim);
    zeros.insert(zeros.end(), z, z + words);
  }
};

template <class A>
void make_primitive(std::vector<typename A::T>& v) {
  using T = typename A::T;
  T g = 0;
  for (const auto& x : v) g = A::gcd(g, x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

// Rank of the rows selected by `mask` reaches `target`? Fraction-free
// (Bareiss) elimination with early exit.
template <class A>
class RankTester {
 public:
  using T = typename A::T;

  RankTester(const std::vector<std::vector<T>>& rows, std::size_t dim) : rows_(rows), dim_(dim) {}

  bool rank_at_least(const Word* mask, std::size_t words, std::size_t target) {
    if (target == 0) return true;
    scratch_.clear();
    for (std::size_t w = 0; w < words; ++w) {
      Word bits = mask[w];
      while (bits) {
        std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        scratch_.insert(scratch_.end(), rows_[k].begin(), rows_[k].end());
      }
    }
    std::size_t count = scratch_.size() / dim_;
    if (count < target) return false;

    auto at = [&](std::size_t r, std::size_t c) -> T& { return scratch_[r * dim_ + c]; };
    T prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < dim_ && rank < count; ++col) {
      std::size_t pivot = rank;
      while (pivot < count && at(pivot, col) == 0) ++pivot;
      if (pivot == count) continue;
      if (pivot != rank) {
        for (std::size_t c = col; c < dim_; ++c) std::swap(at(pivot, c), at(rank, c));
      }
      const T& p = at(rank, col);
      for (std::size_t r = rank + 1; r < count; ++r) {
        const T factor = at(r, col);
        for (std::size_t c = col + 1; c < dim_; ++c) {
          at(r, c) = A::cross_div(p, at(r, c), factor, at(rank, c), prev);
        }
        at(r, col) = 0;
      }
      prev = p;
      if (++rank >= target) return true;
    }
    return rank >= target;
  }

 private:
  const std::vector<std::vector<T>>& rows_;
  std::size_t dim_;
  std::vector<T> scratch_;
};

// Binary tree over a set of rays. Each node keeps the union of its rays'
// zero sets, so a query skips every subtree whose union shares fewer than
// the required number of tight rows with the query ray.
class PatternTree {
 public:
  PatternTree(const Word* zeros, std::size_t words, std::vector<std::size_t> ids)
      : zeros_(zeros), words_(words), ids_(std::move(ids)) {
    if (!ids_.empty()) build(0, ids_.size());
  }

  template <class F>
  void for_each_candidate(const Word* query, std::size_t needed, F&& visit) const {
    if (nodes_.empty()) return;
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
      const Node& node = nodes_[stack.back()];
      const Word* u = unions_.data() + stack.back() * words_;
      stack.pop_back();
      std::size_t common = 0;
      for (std::size_t w = 0; w < words_; ++w) common += static_cast<std::size_t>(std::popcount(u[w] & query[w]));
      if (common < needed) continue;
      if (node.left == kLeaf) {
        for (std::size_t i = node.begin; i < node.end; ++i) visit(ids_[i]);
      } else {
        stack.push_back(node.right);
        stack.push_back(node.left);
      }
    }
  }

 private:
  static constexpr std::size_t kLeaf = static_cast<std::size_t>(-1);
  static constexpr std::size_t kLeafSize = 8;

  struct Node {
    std::size_t begin, end;
    std::size_t left = kLeaf, right = kLeaf;
  };

  const Word* zero(std::size_t id) const { return zeros_ + id * words_; }

  std::size_t build(std::size_t begin, std::size_t end) {
    std::size_t index = nodes_.size();
    nodes_.push_back({begin, end});
    unions_.resize(unions_.size() + words_, 0);
    for (std::size_t i = begin; i < end; ++i) {
      const Word* z = zero(ids_[i]);
      for (std::size_t w = 0; w < words_; ++w) unions_[index * words_ + w] |= z[w];
    }
    const std::size_t size = end - begin;
    if (size <= kLeafSize) return index;

    // Split on the row whose tight count is closest to half the node.
    counts_.assign(words_ * 64, 0);
    for (std::size_t i = begin; i < end; ++i) {
      const Word* z = zero(ids_[i]);
      for (std::size_t w = 0; w < words_; ++w) {
        for (Word bits = z[w]; bits; bits &= bits - 1) ++counts_[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
      }
    }
    std::size_t best = 0, best_gap = size;
    for (std::size_t b = 0; b < counts_.size(); ++b) {
      if (counts_[b] == 0 || counts_[b] == size) continue;
      std::size_t gap = counts_[b] * 2 > size ? counts_[b] * 2 - size : size - counts_[b] * 2;
      if (gap < best_gap) {
        best_gap = gap;
        best = b;
      }
    }
    if (best_gap == size) return index;  // identical zero sets

    auto mid = std::partition(ids_.begin() + static_cast<std::ptrdiff_t>(begin),
                              ids_.begin() + static_cast<std::ptrdiff_t>(end), [&](std::size_t id) {
                                return (zero(id)[best / 64] >> (best % 64)) & 1U;
                              });
    std::size_t split = static_cast<std::size_t>(mid - ids_.begin());
    std::size_t left = build(begin, split);
    std::size_t right = build(split, end);
    nodes_[index].left = left;
    nodes_[index].right = right;
    return index;
  }

  const Word* zeros_;
  std::size_t words_;
  std::vector<std::size_t> ids_;
  std::vector<Node> nodes_;
  std::vector<Word> unions_;
  std::vector<std::size_t> counts_;
};

// Solves B X = I over the rationals; returns the columns of X scaled to
// primitive integer vectors.
IntegerMatrix inverse_columns(const IntegerMatrix& basis) {
  const std::size_t d = basis.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(2 * d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i][j] = Rational(basis[i][j]);
    m[i][d + i] = 1;
  }
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (m[pivot][col] == 0) ++pivot;
    std::swap(m[pivot], m[col]);
    Rational inv = 1 / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c < 2 * d; ++c) m[r][c] -= f * m[col][c];
    }
  }
  IntegerMatrix out(d, std::vector<Integer>(d));
  for (std::size_t j = 0; j < d; ++j) {
    Integer lcm = 1;
    for (std::size_t i = 0; i < d; ++i) lcm = boost::multiprecision::lcm(lcm, denominator(m[i][d + j]));
    Integer g = 0;
    for (std::size_t i = 0; i < d; ++i) {
      out[j][i] = numerator(m[i][d + j]) * (lcm / denominator(m[i][d + j]));
      g = boost::multiprecision::gcd(g, out[j][i]);
    }
    for (auto& x : out[j]) x /= g;
  }
  return out;
}

template <class A>
IntegerMatrix run(const IntegerMatrix& input, const std::vector<std::size_t>& order,
                  const IntegerMatrix& initial_rays, const Options& options) {
  using T = typename A::T;
  const std::size_t dim = input.front().size();
  const std::size_t total = order.size();

  std::vector<std::vector<T>> rows(total, std::vector<T>(dim));
  for (std::size_t k = 0; k < total; ++k) {
    for (std::size_t j = 0; j < dim; ++j) rows[k][j] = A::from(input[order[k]][j]);
  }

  RayStore<A> store;
  store.dim = dim;
  store.words = (total + 63) / 64;
  {
    std::vector<Word> z(store.words, 0);
    std::vector<T> c(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      std::fill(z.begin(), z.end(), 0);
      for (std::size_t i = 0; i < dim; ++i) {
        if (i != j) z[i / 64] |= Word{1} << (i % 64);
      }
      for (std::size_t i = 0; i < dim; ++i) c[i] = A::from(initial_rays[j][i]);
      store.append(c.data(), z.data());
    }
  }
  if (options.on_step) options.on_step({dim, total, store.size(), 0, 0, 0, 0});

  RankTester<A> tester(rows, dim);
  const std::size_t needed = dim >= 2 ? dim - 2 : 0;
  std::vector<T> values;
  std::vector<std::size_t> pos, neg;
  std::vector<Word> inter(store.words);
  std::vector<T> fresh(dim);

  for (std::size_t k = dim; k < total; ++k) {
    const auto& row = rows[k];
    const std::size_t count = store.size();
    values.assign(count, T(0));
    pos.clear();
    neg.clear();
    RayStore<A> next;
    next.dim = dim;
    next.words = store.words;
    for (std::size_t r = 0; r < count; ++r) {
      const T* y = store.ray(r);
      T s = 0;
      for (std::size_t j = 0; j < dim; ++j) {
        if (row[j] != 0 && y[j] != 0) s = A::add(s, A::mul(row[j], y[j]));
      }
      values[r] = s;
      if (s > 0) {
        pos.push_back(r);
      } else if (s < 0) {
        neg.push_back(r);
      } else {
        store.zero(r)[k / 64] |= Word{1} << (k % 64);
      }
      if (s >= 0) next.append(y, store.zero(r));
    }

    std::size_t candidates = 0, adjacent = 0;
    PatternTree tree(store.zeros.data(), store.words, pos);
    for (std::size_t n : neg) {
      const Word* zn = store.zero(n);
      tree.for_each_candidate(zn, needed, [&](std::size_t p) {
        const Word* zp = store.zero(p);
        std::size_t common = 0;
        for (std::size_t w = 0; w < store.words; ++w) {
          inter[w] = zp[w] & zn[w];
          common += static_cast<std::size_t>(std::popcount(inter[w]));
        }
        if (common < needed) return;
        ++candidates;
        if (!tester.rank_at_least(inter.data(), store.words, needed)) return;
        ++adjacent;

        const T& sp = values[p];
        const T neg_sn = -values[n];
        const T* yp = store.ray(p);
        const T* yn = store.ray(n);
        for (std::size_t j = 0; j < dim; ++j) {
          fresh[j] = A::add(A::mul(sp, yn[j]), A::mul(neg_sn, yp[j]));
        }
        make_primitive<A>(fresh);
        inter[k / 64] |= Word{1} << (k % 64);
        next.append(fresh.data(), inter.data());
      });
    }
    store = std::move(next);
    if (options.on_step) {
      options.on_step({k + 1, total, store.size(), pos.size(), neg.size(), candidates, adjacent});
    }
  }

  IntegerMatrix out(store.size(), std::vector<Integer>(dim));
  for (std::size_t r = 0; r < store.size(); ++r) {
    const T* y = store.ray(r);
    for (std::size_t j = 0; j < dim; ++j) out[r][j] = A::to(y[j]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Row-reduces a copy of the rows; returns pivot row indices (in input order)
// and leaves the reduced echelon form in `reduced`.
std::vector<std::size_t> eliminate(const IntegerMatrix& rows, std::size_t columns,
                                   std::vector<std::vector<Rational>>* reduced) {
  std::vector<std::vector<Rational>> basis;  // reduced rows, pivot at pivots[i]
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> chosen;
  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    std::vector<Rational> v(columns);
    for (std::size_t j = 0; j < columns; ++j) v[j] = Rational(rows[idx][j]);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (v[pivots[b]] == 0) continue;
      Rational f = v[pivots[b]];
      for (std::size_t j = 0; j < columns; ++j) v[j] -= f * basis[b][j];
    }
    std::size_t piv = 0;
    while (piv < columns && v[piv] == 0) ++piv;
    if (piv == columns) continue;
    Rational inv = 1 / v[piv];
    for (auto& x : v) x *= inv;
    for (auto& b : basis) {
      if (b[piv] == 0) continue;
      Rational f = b[piv];
      for (std::size_t j = 0; j < columns; ++j) b[j] -= f * v[j];
    }
    basis.push_back(std::move(v));
    pivots.push_back(piv);
    chosen.push_back(idx);
    if (basis.size() == columns) break;
  }
  if (reduced) *reduced = std::move(basis);
  return chosen;
}

}  // namespace

std::vector<std::size_t> independent_rows(const IntegerMatrix& rows) {
  if (rows.empty()) return {};
  return eliminate(rows, rows.front().size(), nullptr);
}

std::size_t rank(const IntegerMatrix& rows) { return independent_rows(rows).size(); }

IntegerMatrix null_space(const IntegerMatrix& rows, std::size_t columns) {
  std::vector<std::vector<Rational>> reduced;
  if (!rows.empty()) eliminate(rows, columns, &reduced);
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(columns, false);
  for (const auto& r : reduced) {
    std::size_t piv = 0;
    while (r[piv] == 0) ++piv;
    pivot_of_row.push_back(piv);
    is_pivot[piv] = true;
  }
  IntegerMatrix out;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(columns);
    v[free] = 1;
    for (std::size_t b = 0; b < reduced.size(); ++b) v[pivot_of_row[b]] = -reduced[b][free];
    Integer lcm = 1;
    for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, denominator(x));
    std::vector<Integer> iv(columns);
    Integer g = 0;
    for (std::size_t j = 0; j < columns; ++j) {
      iv[j] = numerator(v[j]) * (lcm / denominator(v[j]));
      g = boost::multiprecision::gcd(g, iv[j]);
    }
    for (auto& x : iv) x /= g;
    out.push_back(std::move(iv));
  }
  return out;
}

IntegerMatrix extreme_rays(const IntegerMatrix& rows, const Options& options) {
  if (rows.empty()) throw InvalidArgument("double description needs at least one constraint");
  const std::size_t dim = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != dim) throw InvalidArgument("constraint rows have different lengths");
  }
  if (dim == 0) throw InvalidArgument("double description needs a positive dimension");

  std::vector<std::size_t> basis = independent_rows(rows);
  if (basis.size() < dim) {
    throw InvalidArgument("constraint matrix has rank " + std::to_string(basis.size()) +
                          " < " + std::to_string(dim) + "; the cone is not pointed");
  }
  std::vector<std::size_t> order = basis;
  std::vector<bool> in_basis(rows.size(), false);
  for (auto b : basis) in_basis[b] = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!in_basis[i]) order.push_back(i);
  }

  IntegerMatrix basis_rows;
  for (auto b : basis) basis_rows.push_back(rows[b]);
  IntegerMatrix initial = inverse_columns(basis_rows);

  try {
    return run<Checked64>(rows, order, initial, options);
  } catch (const Overflow&) {
    return run<Arbitrary>(rows, order, initial, options);
  }
}

}  // namespace eventgraph::dd
