#include "bellows/homology/snf.hpp"

#include <cstdint>
#include <optional>

#include "bellows/errors.hpp"

namespace bellows {

namespace {

struct Overflow {};

// a -= q * b, with overflow detection for the 64-bit path.
inline void mul_sub(Integer& a, const Integer& q, const Integer& b) { a -= q * b; }
inline void mul_sub(std::int64_t& a, std::int64_t q, std::int64_t b) {
  std::int64_t prod;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &a)) throw Overflow{};
}
inline void add_to(Integer& a, const Integer& b) { a += b; }
inline void add_to(std::int64_t& a, std::int64_t b) {
  if (__builtin_add_overflow(a, b, &a)) throw Overflow{};
}
inline Integer magnitude(const Integer& a) { return abs(a); }
inline std::int64_t magnitude(std::int64_t a) {
  if (a == INT64_MIN) throw Overflow{};
  return a < 0 ? -a : a;
}
inline Integer quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline std::int64_t quotient(std::int64_t a, std::int64_t b) { return a / b; }
inline bool divides(const Integer& d, const Integer& a) { return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0; }
inline bool divides(std::int64_t d, std::int64_t a) { return a % d == 0; }

template <class T>
class SmithEliminator {
 public:
  SmithEliminator(Grid<T> d, bool track) : d_(std::move(d)), track_(track) {
    rows_ = d_.size();
    cols_ = rows_ ? d_[0].size() : 0;
    if (track_) {
      u_ = identity_matrix(rows_);
      v_ = identity_matrix(cols_);
    }
  }

  void run() {
    const std::size_t limit = std::min(rows_, cols_);
    for (std::size_t t = 0; t < limit; ++t) {
      auto pivot = smallest(t, rows_, t, cols_);
      if (!pivot) break;
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);
      while (true) {
        bool clean = true;
        for (std::size_t i = t + 1; i < rows_; ++i) {
          if (d_[i][t] == 0) continue;
          row_sub(i, t, quotient(d_[i][t], d_[t][t]));
          clean = clean && d_[i][t] == 0;
        }
        for (std::size_t j = t + 1; j < cols_; ++j) {
          if (d_[t][j] == 0) continue;
          col_sub(j, t, quotient(d_[t][j], d_[t][t]));
          clean = clean && d_[t][j] == 0;
        }
        if (!clean) {
          // A remainder smaller than the pivot survived; promote it.
          auto in_col = smallest(t, rows_, t, t + 1);
          auto in_row = smallest(t, t + 1, t, cols_);
          if (magnitude(d_[in_col->first][t]) <= magnitude(d_[t][in_row->second])) {
            swap_rows(t, in_col->first);
          } else {
            swap_cols(t, in_row->second);
          }
          continue;
        }
        auto bad = non_divisible(t);
        if (!bad) break;
        row_add(t, *bad);
      }
      if (d_[t][t] < 0) negate_row(t);
    }
  }

  Grid<T>& d() { return d_; }
  IntMatrix& u() { return u_; }
  IntMatrix& v() { return v_; }

 private:
  Grid<T> d_;
  bool track_;
  std::size_t rows_ = 0, cols_ = 0;
  IntMatrix u_, v_;

  std::optional<std::pair<std::size_t, std::size_t>> smallest(std::size_t r0, std::size_t r1, std::size_t c0,
                                                              std::size_t c1) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    T best_mag = 0;
    for (std::size_t i = r0; i < r1; ++i) {
      for (std::size_t j = c0; j < c1; ++j) {
        if (d_[i][j] == 0) continue;
        T m = magnitude(d_[i][j]);
        if (!best || m < best_mag) {
          best = std::make_pair(i, j);
          best_mag = m;
          if (best_mag == 1) return best;
        }
      }
    }
    return best;
  }

  std::optional<std::size_t> non_divisible(std::size_t t) const {
    for (std::size_t i = t + 1; i < rows_; ++i) {
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (d_[i][j] != 0 && !divides(d_[t][t], d_[i][j])) return i;
      }
    }
    return std::nullopt;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(d_[a], d_[b]);
    if (track_) std::swap(u_[a], u_[b]);
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : d_) std::swap(row[a], row[b]);
    if (track_) {
      for (auto& row : v_) std::swap(row[a], row[b]);
    }
  }

  void row_sub(std::size_t i, std::size_t t, const T& q) {
    for (std::size_t j = t; j < cols_; ++j) {
      if (d_[t][j] != 0) mul_sub(d_[i][j], q, d_[t][j]);
    }
    if (track_) {
      const Integer qi = to_integer(q);
      for (std::size_t j = 0; j < rows_; ++j) u_[i][j] -= qi * u_[t][j];
    }
  }

  void col_sub(std::size_t j, std::size_t t, const T& q) {
    for (std::size_t i = t; i < rows_; ++i) {
      if (d_[i][t] != 0) mul_sub(d_[i][j], q, d_[i][t]);
    }
    if (track_) {
      const Integer qi = to_integer(q);
      for (std::size_t i = 0; i < cols_; ++i) v_[i][j] -= qi * v_[i][t];
    }
  }

  void row_add(std::size_t t, std::size_t i) {
    for (std::size_t j = t; j < cols_; ++j) add_to(d_[t][j], d_[i][j]);
    if (track_) {
      for (std::size_t j = 0; j < rows_; ++j) u_[t][j] += u_[i][j];
    }
  }

  void negate_row(std::size_t t) {
    for (std::size_t j = t; j < cols_; ++j) d_[t][j] = -d_[t][j];
    if (track_) {
      for (std::size_t j = 0; j < rows_; ++j) u_[t][j] = -u_[t][j];
    }
  }

  static Integer to_integer(const Integer& x) { return x; }
  static Integer to_integer(std::int64_t x) { return Integer(static_cast<long>(x)); }
};

template <class T>
std::vector<Integer> diagonal_of(const Grid<T>& d) {
  std::vector<Integer> out;
  const std::size_t limit = std::min(d.size(), d.empty() ? std::size_t{0} : d[0].size());
  for (std::size_t t = 0; t < limit && d[t][t] != 0; ++t) {
    if constexpr (std::is_same_v<T, Integer>) {
      out.push_back(d[t][t]);
    } else {
      out.emplace_back(static_cast<long>(d[t][t]));
    }
  }
  return out;
}

void check_rectangular(const IntMatrix& a) {
  for (const auto& row : a) {
    if (row.size() != a[0].size()) throw DimensionError("ragged integer matrix");
  }
}

}  // namespace

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  IntMatrix c(n, std::vector<Integer>(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw DimensionError("matrix product shape mismatch");
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  }
  return c;
}

SnfDecomposition smith_normal_form(const IntMatrix& a) {
  check_rectangular(a);
  SmithEliminator<Integer> e(a, true);
  e.run();
  SnfDecomposition out;
  out.U = std::move(e.u());
  out.V = std::move(e.v());
  out.D = std::move(e.d());
  out.invariant_factors = diagonal_of(out.D);
  out.rank = out.invariant_factors.size();
  return out;
}

std::vector<Integer> invariant_factors(const IntMatrix& a) {
  check_rectangular(a);
  bool small = true;
  Grid<std::int64_t> narrow(a.size());
  for (std::size_t i = 0; i < a.size() && small; ++i) {
    narrow[i].reserve(a[i].size());
    for (const auto& x : a[i]) {
      if (!x.fits_slong_p()) {
        small = false;
        break;
      }
      narrow[i].push_back(x.get_si());
    }
  }
  if (small) {
    try {
      SmithEliminator<std::int64_t> e(std::move(narrow), false);
      e.run();
      return diagonal_of(e.d());
    } catch (const Overflow&) {
      // Fall through to arbitrary precision.
    }
  }
  SmithEliminator<Integer> e(a, false);
  e.run();
  return diagonal_of(e.d());
}

}  // namespace bellows
