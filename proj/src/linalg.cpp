#include "cylrig/linalg.hpp"

#include <cstdint>

#include "cylrig/error.hpp"

namespace cylrig {

std::vector<mpq_class> RationalMatrix::multiply(const std::vector<mpq_class>& x) const {
  if (static_cast<int>(x.size()) != cols_) throw InternalError("dimension mismatch");
  std::vector<mpq_class> y(rows_);
  for (int r = 0; r < rows_; ++r) {
    mpq_class s = 0;
    for (int c = 0; c < cols_; ++c) {
      const mpq_class& a = at(r, c);
      if (sgn(a) != 0 && sgn(x[c]) != 0) s += a * x[c];
    }
    y[r] = s;
  }
  return y;
}

namespace {

constexpr std::uint64_t kP = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(z & kP);
  std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
  std::uint64_t s = lo + hi;
  return s >= kP ? s - kP : s;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& z) {
  mpz_class m = z % mpz_class(static_cast<unsigned long>(kP));
  if (m < 0) m += mpz_class(static_cast<unsigned long>(kP));
  return static_cast<std::uint64_t>(m.get_ui());
}

}  // namespace

std::optional<int> modular_rank(const RationalMatrix& m) {
  const int R = m.rows(), C = m.cols();
  std::vector<std::uint64_t> a(static_cast<size_t>(R) * C, 0);
  for (int r = 0; r < R; ++r) {
    for (int c = 0; c < C; ++c) {
      const mpq_class& q = m.at(r, c);
      if (sgn(q) == 0) continue;
      std::uint64_t den = reduce(q.get_den());
      if (den == 0) return std::nullopt;
      a[static_cast<size_t>(r) * C + c] = mulmod(reduce(q.get_num()), powmod(den, kP - 2));
    }
  }
  int rank = 0;
  for (int c = 0; c < C && rank < R; ++c) {
    int piv = -1;
    for (int r = rank; r < R; ++r) {
      if (a[static_cast<size_t>(r) * C + c]) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != rank) {
      for (int j = 0; j < C; ++j) {
        std::swap(a[static_cast<size_t>(piv) * C + j], a[static_cast<size_t>(rank) * C + j]);
      }
    }
    std::uint64_t* prow = &a[static_cast<size_t>(rank) * C];
    std::uint64_t inv = powmod(prow[c], kP - 2);
    for (int r = rank + 1; r < R; ++r) {
      std::uint64_t* row = &a[static_cast<size_t>(r) * C];
      if (!row[c]) continue;
      std::uint64_t f = mulmod(row[c], inv);
      for (int j = c; j < C; ++j) {
        if (!prow[j]) continue;
        std::uint64_t t = mulmod(f, prow[j]);
        row[j] = row[j] >= t ? row[j] - t : row[j] + kP - t;
      }
    }
    ++rank;
  }
  return rank;
}

int bareiss_rank(const RationalMatrix& m) {
  const int R = m.rows(), C = m.cols();
  std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
  for (int r = 0; r < R; ++r) {
    mpz_class l = 1;
    for (int c = 0; c < C; ++c) {
      if (sgn(m.at(r, c)) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den_mpz_t());
    }
    for (int c = 0; c < C; ++c) {
      if (sgn(m.at(r, c)) != 0) a[r][c] = m.at(r, c).get_num() * (l / m.at(r, c).get_den());
    }
  }
  mpz_class prev = 1;
  int rank = 0;
  mpz_class t;
  for (int c = 0; c < C && rank < R; ++c) {
    int piv = -1;
    for (int r = rank; r < R; ++r) {
      if (sgn(a[r][c]) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    const auto& prow = a[rank];
    for (int r = rank + 1; r < R; ++r) {
      auto& row = a[r];
      for (int j = c + 1; j < C; ++j) {
        t = prow[c] * row[j];
        if (sgn(row[c]) != 0 && sgn(prow[j]) != 0) t -= row[c] * prow[j];
        mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = prow[c];
    ++rank;
  }
  return rank;
}

int exact_rank(const RationalMatrix& m, std::optional<int> upper_bound) {
  int bound = std::min(m.rows(), m.cols());
  if (upper_bound && *upper_bound < bound) bound = *upper_bound;
  if (auto r = modular_rank(m); r && *r >= bound) return *r;
  return bareiss_rank(m);
}

std::vector<std::vector<mpq_class>> kernel_basis(const RationalMatrix& m) {
  const int R = m.rows(), C = m.cols();
  std::vector<std::vector<mpq_class>> a(R, std::vector<mpq_class>(C));
  for (int r = 0; r < R; ++r) {
    for (int c = 0; c < C; ++c) a[r][c] = m.at(r, c);
  }
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < C && rank < R; ++c) {
    int piv = -1;
    for (int r = rank; r < R; ++r) {
      if (sgn(a[r][c]) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    mpq_class inv = 1 / a[rank][c];
    for (int j = c; j < C; ++j) a[rank][j] *= inv;
    for (int r = 0; r < R; ++r) {
      if (r == rank || sgn(a[r][c]) == 0) continue;
      mpq_class f = a[r][c];
      for (int j = c; j < C; ++j) {
        if (sgn(a[rank][j]) != 0) a[r][j] -= f * a[rank][j];
      }
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<char> is_pivot(C, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<mpq_class>> basis;
  for (int free = 0; free < C; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> v(C);
    v[free] = 1;
    for (int i = 0; i < rank; ++i) v[pivot_col[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cylrig
