#include "mincm/linalg.hpp"

#include <algorithm>
#include <map>
#include <span>
#include <unordered_map>

#include "mincm/kernels.hpp"

namespace mincm {

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

double SparseIntMatrix::density() const {
  if (rows == 0 || cols == 0) return 0.0;
  return static_cast<double>(nonzeros()) /
         (static_cast<double>(rows) * static_cast<double>(cols));
}

int SparseIntMatrix::at(int row, int col) const {
  for (const auto& [r, v] : columns[static_cast<std::size_t>(col)])
    if (r == row) return v;
  return 0;
}

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  SparseIntMatrix out;
  out.rows = a.rows;
  out.cols = b.cols;
  out.columns.resize(static_cast<std::size_t>(b.cols));
  for (int j = 0; j < b.cols; ++j) {
    std::map<int, long long> acc;
    for (const auto& [k, bv] : b.columns[static_cast<std::size_t>(j)])
      for (const auto& [i, av] : a.columns[static_cast<std::size_t>(k)])
        acc[i] += static_cast<long long>(av) * bv;
    for (const auto& [i, v] : acc)
      if (v != 0)
        out.columns[static_cast<std::size_t>(j)].emplace_back(
            i, static_cast<int>(v));
  }
  return out;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2).
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint32_t e = p - 2;
  while (e != 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

namespace {

// Column reduction (pivot = largest row index). The reducer keeps the
// invariant reduced_j = m * v_j when tracking is enabled, so a column that
// reduces to zero yields a kernel vector.

struct ModP {
  using T = std::uint32_t;
  std::uint32_t p;

  T from_int(int v) const {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<T>(r);
  }
  static bool is_zero(const T& v) { return v == 0; }
  // target := target + factor * pivot with factor = -lead_t / lead_p.
  std::pair<T, T> coefficients(const T& lead_target, const T& lead_pivot) const {
    std::uint64_t f = static_cast<std::uint64_t>(lead_target) *
                      inverse_mod(lead_pivot, p) % p;
    return {1U, static_cast<T>((p - f) % p)};
  }
  T combine(const T& a, const T& alpha, const T& b, const T& beta) const {
    return static_cast<T>((static_cast<std::uint64_t>(a) * alpha +
                           static_cast<std::uint64_t>(b) * beta) %
                          p);
  }
  template <class Col>
  void normalize(Col&, Col*) const {}
  mpz_class to_mpz(const T& v) const { return mpz_class(v); }
};

struct FractionFree {
  using T = mpz_class;

  static T from_int(int v) { return T(v); }
  static bool is_zero(const T& v) { return sgn(v) == 0; }
  static std::pair<T, T> coefficients(const T& lead_target,
                                      const T& lead_pivot) {
    return {lead_pivot, -lead_target};
  }
  static T combine(const T& a, const T& alpha, const T& b, const T& beta) {
    return a * alpha + b * beta;
  }
  template <class Col>
  static void normalize(Col& col, Col* track) {
    mpz_class g = 0;
    for (const auto& e : col) g = gcd(g, e.second);
    if (track)
      for (const auto& e : *track) g = gcd(g, e.second);
    if (g == 0 || g == 1) return;
    for (auto& e : col) e.second /= g;
    if (track)
      for (auto& e : *track) e.second /= g;
  }
  static mpz_class to_mpz(const T& v) { return v; }
};

template <class Ops>
class ColumnReducer {
 public:
  using T = typename Ops::T;
  using Col = std::vector<std::pair<int, T>>;

  ColumnReducer(const SparseIntMatrix& m, Ops ops, bool track)
      : ops_(std::move(ops)), track_(track) {
    cols_.resize(m.columns.size());
    for (std::size_t j = 0; j < m.columns.size(); ++j)
      for (const auto& [r, v] : m.columns[j]) {
        T x = ops_.from_int(v);
        if (!Ops::is_zero(x)) cols_[j].emplace_back(r, x);
      }
    if (track_) {
      basis_.resize(m.columns.size());
      for (std::size_t j = 0; j < m.columns.size(); ++j)
        basis_[j].emplace_back(static_cast<int>(j), ops_.from_int(1));
    }
  }

  /// Reduces every column; returns the first zero column, if any, when
  /// `stop_at_kernel` is set.
  std::optional<std::size_t> run(bool stop_at_kernel) {
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      Col& col = cols_[j];
      while (!col.empty()) {
        auto it = pivot_of_.find(col.back().first);
        if (it == pivot_of_.end()) break;
        std::size_t k = it->second;
        auto [alpha, beta] =
            ops_.coefficients(col.back().second, cols_[k].back().second);
        col = axpy(col, alpha, cols_[k], beta);
        if (track_) basis_[j] = axpy(basis_[j], alpha, basis_[k], beta);
        ops_.normalize(col, track_ ? &basis_[j] : nullptr);
      }
      if (col.empty()) {
        if (stop_at_kernel) return j;
      } else {
        pivot_of_.emplace(col.back().first, j);
        ++rank_;
      }
    }
    return std::nullopt;
  }

  std::size_t rank() const { return rank_; }

  std::vector<mpz_class> kernel_column(std::size_t j, std::size_t n) const {
    std::vector<mpz_class> out(n, 0);
    for (const auto& [r, v] : basis_[j])
      out[static_cast<std::size_t>(r)] = ops_.to_mpz(v);
    return out;
  }

 private:
  Col axpy(const Col& a, const T& alpha, const Col& b, const T& beta) const {
    Col out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t k = 0;
    const T zero = ops_.from_int(0);
    while (i < a.size() || k < b.size()) {
      int ra = i < a.size() ? a[i].first : INT32_MAX;
      int rb = k < b.size() ? b[k].first : INT32_MAX;
      T v;
      int r;
      if (ra == rb) {
        v = ops_.combine(a[i].second, alpha, b[k].second, beta);
        r = ra;
        ++i;
        ++k;
      } else if (ra < rb) {
        v = ops_.combine(a[i].second, alpha, zero, beta);
        r = ra;
        ++i;
      } else {
        v = ops_.combine(zero, alpha, b[k].second, beta);
        r = rb;
        ++k;
      }
      if (!Ops::is_zero(v)) out.emplace_back(r, std::move(v));
    }
    return out;
  }

  Ops ops_;
  bool track_;
  std::vector<Col> cols_;
  std::vector<Col> basis_;
  std::unordered_map<int, std::size_t> pivot_of_;
  std::size_t rank_ = 0;
};

std::size_t dense_rank_gf2(const SparseIntMatrix& m) {
  const std::size_t words = (static_cast<std::size_t>(m.cols) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(
      static_cast<std::size_t>(m.rows), std::vector<std::uint64_t>(words, 0));
  for (int j = 0; j < m.cols; ++j)
    for (const auto& [r, v] : m.columns[static_cast<std::size_t>(j)])
      if (v % 2 != 0)
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j) / 64] |=
            std::uint64_t{1} << (j % 64);
  std::size_t rank = 0;
  for (int c = 0; c < m.cols && rank < rows.size(); ++c) {
    const std::size_t w = static_cast<std::size_t>(c) / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < rows.size() && (rows[pivot][w] & bit) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r)
      if (rows[r][w] & bit)
        kernels::xor_row(std::span(rows[r]).subspan(w),
                         std::span<const std::uint64_t>(rows[rank]).subspan(w));
    ++rank;
  }
  return rank;
}

std::size_t dense_rank_gfp(const SparseIntMatrix& m, std::uint32_t p) {
  ModP ops{p};
  const std::size_t width = static_cast<std::size_t>(m.cols);
  std::vector<std::vector<std::uint32_t>> rows(
      static_cast<std::size_t>(m.rows), std::vector<std::uint32_t>(width, 0));
  for (int j = 0; j < m.cols; ++j)
    for (const auto& [r, v] : m.columns[static_cast<std::size_t>(j)])
      rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
          ops.from_int(v);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < width && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint64_t inv = inverse_mod(rows[rank][c], p);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      auto coef = static_cast<std::uint32_t>(
          (p - rows[r][c] * inv % p) % p);
      kernels::axpy_mod(std::span(rows[r]).subspan(c),
                        std::span<const std::uint32_t>(rows[rank]).subspan(c),
                        coef, p);
    }
    ++rank;
  }
  return rank;
}

// Bareiss fraction-free elimination.
std::size_t dense_rank_rational(const SparseIntMatrix& m) {
  const std::size_t width = static_cast<std::size_t>(m.cols);
  std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(m.rows),
                                        std::vector<mpz_class>(width, 0));
  for (int j = 0; j < m.cols; ++j)
    for (const auto& [r, v] : m.columns[static_cast<std::size_t>(j)])
      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = v;
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < width && rank < a.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      for (std::size_t k = c + 1; k < width; ++k) {
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]);
        mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(),
                     prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(const SparseIntMatrix& m, const FieldSpec& field,
                 EliminationRoute route) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (route == EliminationRoute::Auto)
    route = m.density() > kDenseThreshold ? EliminationRoute::Dense
                                          : EliminationRoute::Sparse;
  if (route == EliminationRoute::Dense) {
    if (field.is_rational()) return dense_rank_rational(m);
    if (field.characteristic() == 2) return dense_rank_gf2(m);
    return dense_rank_gfp(m, field.characteristic());
  }
  if (field.is_rational()) {
    ColumnReducer<FractionFree> reducer(m, FractionFree{}, false);
    reducer.run(false);
    return reducer.rank();
  }
  ColumnReducer<ModP> reducer(m, ModP{field.characteristic()}, false);
  reducer.run(false);
  return reducer.rank();
}

std::optional<std::vector<mpz_class>> kernel_vector(const SparseIntMatrix& m,
                                                    const FieldSpec& field) {
  const auto n = static_cast<std::size_t>(m.cols);
  if (field.is_rational()) {
    ColumnReducer<FractionFree> reducer(m, FractionFree{}, true);
    if (auto j = reducer.run(true)) {
      auto v = reducer.kernel_column(*j, n);
      // Sign convention: first nonzero coefficient positive.
      for (const auto& x : v)
        if (x != 0) {
          if (x < 0)
            for (auto& y : v) y = -y;
          break;
        }
      return v;
    }
    return std::nullopt;
  }
  ColumnReducer<ModP> reducer(m, ModP{field.characteristic()}, true);
  if (auto j = reducer.run(true)) return reducer.kernel_column(*j, n);
  return std::nullopt;
}

}  // namespace mincm
