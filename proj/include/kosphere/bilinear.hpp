/**
 * @brief Integer bilinear maps R^a x R^b -> R^c and Hurwitz-Radon matrix families.
 *
 * A map is stored as c coefficient matrices of shape a x b with F_i(x, y) = x^T A_i y.
 * It is normed when ||F(x,y)|| = ||x|| ||y|| identically, which expands to
 *
 *   sum_i (A_i[j][l] A_i[j'][l'] + A_i[j][l'] A_i[j'][l]) = 2 [j = j'] [l = l']
 *
 * for all index quadruples, and nice when F_1(x, y) = x_1 y_1.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kosphere {

struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct capacity_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0)
      throw dimension_error("negative matrix dimension");
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  std::int64_t &operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::int64_t operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        t(c, r) = (*this)(r, c);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
    if (a.cols_ != b.rows_)
      throw dimension_error("matrix product shape mismatch");
    IntMatrix p(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        std::int64_t v = a(i, k);
        if (v == 0)
          continue;
        for (int j = 0; j < b.cols_; ++j)
          p(i, j) += v * b(k, j);
      }
    return p;
  }
  friend IntMatrix operator+(IntMatrix a, const IntMatrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw dimension_error("matrix sum shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      a.data_[i] += b.data_[i];
    return a;
  }
  friend IntMatrix operator-(IntMatrix a) {
    for (auto &v : a.data_)
      v = -v;
    return a;
  }

  bool operator==(const IntMatrix &) const = default;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Kronecker product a (x) b.
inline IntMatrix kronecker(const IntMatrix &a, const IntMatrix &b) {
  IntMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      std::int64_t v = a(i, j);
      if (v == 0)
        continue;
      for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c)
          k(i * b.rows() + r, j * b.cols() + c) = v * b(r, c);
    }
  return k;
}

/// Block matrix [[a, b], [c, d]].
inline IntMatrix block(const IntMatrix &a, const IntMatrix &b, const IntMatrix &c, const IntMatrix &d) {
  int n = a.rows();
  IntMatrix m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m(i, j) = a(i, j);
      m(i, j + n) = b(i, j);
      m(i + n, j) = c(i, j);
      m(i + n, j + n) = d(i, j);
    }
  return m;
}

class BilinearMap {
public:
  BilinearMap() = default;
  BilinearMap(int a, int b, int c, std::vector<IntMatrix> mats) : a_(a), b_(b), c_(c), mats_(std::move(mats)) {
    if (a < 1 || b < 1 || c < 1)
      throw dimension_error("bilinear map dimensions must be positive");
    if (static_cast<int>(mats_.size()) != c)
      throw dimension_error("expected " + std::to_string(c) + " coefficient matrices, got " +
                            std::to_string(mats_.size()));
    for (const auto &m : mats_)
      if (m.rows() != a || m.cols() != b)
        throw dimension_error("coefficient matrix is not " + std::to_string(a) + "x" + std::to_string(b));
  }

  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  int c() const noexcept { return c_; }
  const std::vector<IntMatrix> &mats() const noexcept { return mats_; }
  std::vector<IntMatrix> &mats() noexcept { return mats_; }

  bool operator==(const BilinearMap &) const = default;

private:
  int a_ = 0, b_ = 0, c_ = 0;
  std::vector<IntMatrix> mats_;
};

/// A failing instance of the normed coefficient identity.
struct NormViolation {
  int j = 0, j2 = 0, l = 0, l2 = 0;
  std::int64_t value = 0;
  std::int64_t expected = 0;

  std::string describe() const {
    return "normed identity fails at (j=" + std::to_string(j) + ", j'=" + std::to_string(j2) +
           ", l=" + std::to_string(l) + ", l'=" + std::to_string(l2) + "): sum = " + std::to_string(value) +
           ", expected " + std::to_string(expected);
  }
};

/// First violation of the normed identity in lexicographic order (j <= j', l <= l').
inline std::optional<NormViolation> find_normed_violation(const BilinearMap &f) {
  for (int j = 0; j < f.a(); ++j)
    for (int j2 = j; j2 < f.a(); ++j2)
      for (int l = 0; l < f.b(); ++l)
        for (int l2 = l; l2 < f.b(); ++l2) {
          __int128 sum = 0;
          for (const IntMatrix &m : f.mats())
            sum += static_cast<__int128>(m(j, l)) * m(j2, l2) + static_cast<__int128>(m(j, l2)) * m(j2, l);
          std::int64_t expected = (j == j2 && l == l2) ? 2 : 0;
          if (sum != expected) {
            auto clipped = sum > INT64_MAX ? INT64_MAX : sum < INT64_MIN ? INT64_MIN : static_cast<std::int64_t>(sum);
            return NormViolation{j, j2, l, l2, clipped, expected};
          }
        }
  return std::nullopt;
}

inline bool verify_normed(const BilinearMap &f) { return !find_normed_violation(f).has_value(); }

/// F_1(x, y) = x_1 y_1: the first matrix is the unit at (0, 0).
inline bool verify_nice(const BilinearMap &f) {
  if (f.mats().empty())
    return false;
  const IntMatrix &m = f.mats().front();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m(r, c) != ((r == 0 && c == 0) ? 1 : 0))
        return false;
  return true;
}

/// rho(n) = 8a + 2^b for n = 2^{4a+b} (2c+1), 0 <= b <= 3.
inline int radon_hurwitz(std::int64_t n) {
  if (n <= 0)
    throw std::invalid_argument("radon_hurwitz requires n >= 1");
  int e = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++e;
  }
  return 8 * (e / 4) + (1 << (e % 4));
}

/// binom(n + m, n) is odd iff n and m share no binary digit.
inline bool binom_odd(std::uint64_t n, std::uint64_t m) noexcept { return (n & m) == 0; }

// ---------------------------------------------------------------------------
// Hurwitz-Radon families

/// k x k signed permutation matrices B_0 = I, B_1, ... with B_i^T B_j + B_j^T B_i = 2 delta_ij I.
struct HRFamily {
  int k = 0;
  std::vector<IntMatrix> mats;
};

/// First violated relation (i, j) of a family, if any.
inline std::optional<std::pair<int, int>> find_hr_violation(const HRFamily &fam) {
  IntMatrix id = IntMatrix::identity(fam.k);
  IntMatrix zero(fam.k, fam.k);
  if (fam.mats.empty() || !(fam.mats.front() == id))
    return std::pair{0, 0};
  for (std::size_t i = 0; i < fam.mats.size(); ++i) {
    const IntMatrix &bi = fam.mats[i];
    if (bi.rows() != fam.k || bi.cols() != fam.k)
      return std::pair{static_cast<int>(i), static_cast<int>(i)};
    for (int r = 0; r < fam.k; ++r)
      for (int c = 0; c < fam.k; ++c)
        if (bi(r, c) < -1 || bi(r, c) > 1)
          return std::pair{static_cast<int>(i), static_cast<int>(i)};
    IntMatrix bit = bi.transposed();
    for (std::size_t j = i; j < fam.mats.size(); ++j) {
      IntMatrix s = bit * fam.mats[j] + fam.mats[j].transposed() * bi;
      IntMatrix want = i == j ? IntMatrix::identity(fam.k) + IntMatrix::identity(fam.k) : zero;
      if (!(s == want))
        return std::pair{static_cast<int>(i), static_cast<int>(j)};
    }
  }
  return std::nullopt;
}

inline bool verify_hr(const HRFamily &fam) { return !find_hr_violation(fam).has_value(); }

namespace detail {

/// Cayley-Dickson product on Z^{2^e}: (a, b)(c, d) = (ac - d*b, da + bc*).
inline std::vector<std::int64_t> cd_conj(std::vector<std::int64_t> x) {
  for (std::size_t i = 1; i < x.size(); ++i)
    x[i] = -x[i];
  return x;
}

inline std::vector<std::int64_t> cd_mul(const std::vector<std::int64_t> &x, const std::vector<std::int64_t> &y) {
  std::size_t n = x.size();
  if (n == 1)
    return {x[0] * y[0]};
  std::size_t h = n / 2;
  std::vector<std::int64_t> a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  std::vector<std::int64_t> c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
  auto ac = cd_mul(a, c), db = cd_mul(cd_conj(d), b), da = cd_mul(d, a), bc = cd_mul(b, cd_conj(c));
  std::vector<std::int64_t> out(n);
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = ac[i] - db[i];
    out[i + h] = da[i] + bc[i];
  }
  return out;
}

/// -L(e_u): negated left multiplication by the u-th unit in dimension 2^e (e <= 3).
inline IntMatrix cd_left_mul(int e, int u) {
  int n = 1 << e;
  IntMatrix m(n, n);
  std::vector<std::int64_t> unit(n, 0);
  unit[u] = 1;
  for (int c = 0; c < n; ++c) {
    std::vector<std::int64_t> basis(n, 0);
    basis[c] = 1;
    auto col = cd_mul(unit, basis);
    for (int r = 0; r < n; ++r)
      m(r, c) = -col[r];
  }
  return m;
}

/// Maximal family of size 2^e for e <= 3: I and the 2^e - 1 skew units.
inline std::vector<IntMatrix> base_family(int e) {
  std::vector<IntMatrix> fam{IntMatrix::identity(1 << e)};
  for (int u = 1; u < (1 << e); ++u)
    fam.push_back(cd_left_mul(e, u));
  return fam;
}

/// Maximal family of size 2^e, rho = 8(e/4) + 2^(e%4). Size 16N is built from size N by
/// P_j (x) diag(I, -I) together with I_N (x) C_i, where C_1..C_8 are the skew anticommuting
/// 16x16 matrices [[0, A_i], [A_i, 0]] (A_i octonion units) and [[0, I], [-I, 0]].
inline std::vector<IntMatrix> power_of_two_family(int e) {
  if (e < 4)
    return base_family(e);
  std::vector<IntMatrix> inner = power_of_two_family(e - 4);
  int n = inner.front().rows();
  IntMatrix i8 = IntMatrix::identity(8), z8(8, 8);
  IntMatrix grading = block(i8, z8, z8, -i8);
  std::vector<IntMatrix> c16;
  for (const IntMatrix &a : base_family(3))
    if (!(a == i8))
      c16.push_back(block(z8, a, a, z8));
  c16.push_back(block(z8, i8, -i8, z8));

  IntMatrix in = IntMatrix::identity(n);
  std::vector<IntMatrix> fam{IntMatrix::identity(16 * n)};
  for (const IntMatrix &c : c16)
    fam.push_back(kronecker(in, c));
  for (std::size_t j = 1; j < inner.size(); ++j)
    fam.push_back(kronecker(inner[j], grading));
  return fam;
}

} // namespace detail

/// Hurwitz-Radon family of s <= rho(k) matrices of size k.
inline HRFamily hr_family(int k, int s) {
  if (k < 1 || s < 1)
    throw std::invalid_argument("hr_family requires k, s >= 1");
  int rho = radon_hurwitz(k);
  if (s > rho)
    throw capacity_error("hr_family: s = " + std::to_string(s) + " exceeds rho(" + std::to_string(k) +
                         ") = " + std::to_string(rho));
  int e = 0, odd = k;
  while (odd % 2 == 0) {
    odd /= 2;
    ++e;
  }
  std::vector<IntMatrix> pow2 = detail::power_of_two_family(e);
  IntMatrix id_odd = IntMatrix::identity(odd);
  HRFamily fam{k, {}};
  for (int i = 0; i < s; ++i)
    fam.mats.push_back(odd == 1 ? pow2[i] : kronecker(pow2[i], id_odd));
  return fam;
}

/// H(x, y) = sum_i y_i B_i x, of shape (k, b, k).
inline BilinearMap hr_to_bilinear(const HRFamily &fam, int b) {
  if (b < 1 || b > static_cast<int>(fam.mats.size()))
    throw capacity_error("hr_to_bilinear: b = " + std::to_string(b) + " but the family has " +
                         std::to_string(fam.mats.size()) + " matrices");
  std::vector<IntMatrix> mats(fam.k, IntMatrix(fam.k, b));
  for (int i = 0; i < b; ++i)
    for (int r = 0; r < fam.k; ++r)
      for (int j = 0; j < fam.k; ++j)
        mats[r](j, i) = fam.mats[i](r, j);
  return BilinearMap(fam.k, b, fam.k, std::move(mats));
}

/// F(x, y) = xy on R x R.
inline BilinearMap base_nice() {
  IntMatrix one(1, 1);
  one(0, 0) = 1;
  return BilinearMap(1, 1, 1, {one});
}

/// (x, y) -> (y, x): transposes every coefficient matrix.
inline BilinearMap swap(const BilinearMap &f) {
  std::vector<IntMatrix> mats;
  mats.reserve(f.mats().size());
  for (const auto &m : f.mats())
    mats.push_back(m.transposed());
  return BilinearMap(f.b(), f.a(), f.c(), std::move(mats));
}

/// F(x, y) = (G(x~, y), H(x^, y)) where x = (x~, x^), x~ in R^{n+1}, x^ in R^k.
/// g is nice and normed of shape (n+1, m+1, n+m+1), h normed of shape (k, m+1, k).
inline BilinearMap compose_step(const BilinearMap &g, const BilinearMap &h) {
  if (g.b() != h.b())
    throw dimension_error("compose_step: right dimensions differ (" + std::to_string(g.b()) + " vs " +
                          std::to_string(h.b()) + ")");
  if (g.c() != g.a() + g.b() - 1)
    throw dimension_error("compose_step: g is not of shape (n+1, m+1, n+m+1)");
  if (h.a() != h.c())
    throw dimension_error("compose_step: h is not of shape (k, m+1, k)");
  if (!verify_nice(g) || !verify_normed(g))
    throw std::invalid_argument("compose_step: g must be nice and normed");
  if (!verify_normed(h))
    throw std::invalid_argument("compose_step: h must be normed");

  int a = g.a() + h.a(), b = g.b(), c = g.c() + h.c();
  std::vector<IntMatrix> mats;
  mats.reserve(c);
  for (const IntMatrix &m : g.mats()) {
    IntMatrix out(a, b);
    for (int r = 0; r < g.a(); ++r)
      for (int col = 0; col < b; ++col)
        out(r, col) = m(r, col);
    mats.push_back(std::move(out));
  }
  for (const IntMatrix &m : h.mats()) {
    IntMatrix out(a, b);
    for (int r = 0; r < h.a(); ++r)
      for (int col = 0; col < b; ++col)
        out(g.a() + r, col) = m(r, col);
    mats.push_back(std::move(out));
  }
  BilinearMap f(a, b, c, std::move(mats));
  if (!verify_nice(f) || !verify_normed(f))
    throw std::logic_error("compose_step produced a map failing the exact checks");
  return f;
}

} // namespace kosphere
