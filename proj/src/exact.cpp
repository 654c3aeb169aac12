#include "hcomm/exact.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "hcomm/error.hpp"

namespace hcomm {

namespace mp = boost::multiprecision;

std::string to_string(const ExactInteger& n) { return n.str(); }

std::string to_string(const ExactRational& q) {
  const ExactInteger num = mp::numerator(q);
  const ExactInteger den = mp::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

ExactInteger parse_integer(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!is_digits(text)) fail(ErrorCode::InvalidArgument, "malformed rational '" + std::string(whole) + "'");
  ExactInteger value{std::string(text)};
  return negative ? ExactInteger(-value) : value;
}

}  // namespace

ExactRational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRational(parse_integer(text, text));
  const ExactInteger num = parse_integer(text.substr(0, slash), text);
  const ExactInteger den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  return ExactRational(num, den);
}

ExactInteger pow(const ExactInteger& base, unsigned exponent) { return mp::pow(base, exponent); }

ExactRational pow(const ExactRational& base, unsigned exponent) {
  return ExactRational(mp::pow(mp::numerator(base), exponent), mp::pow(mp::denominator(base), exponent));
}

// --- number theory ----------------------------------------------------------

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "smallest_prime_factor needs n >= 2");
  if (n % 2 == 0) return 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return d;
  }
  return n;
}

bool is_prime(std::uint64_t n) { return n >= 2 && smallest_prime_factor(n) == n; }

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "prime_factors needs n >= 1");
  std::vector<std::uint64_t> primes;
  while (n > 1) {
    const auto p = smallest_prime_factor(n);
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  return primes;
}

int moebius_mu(std::uint64_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "moebius_mu needs n >= 1");
  int mu = 1;
  while (n > 1) {
    const auto p = smallest_prime_factor(n);
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return mu;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "divisors needs n >= 1");
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

ExactInteger jordan_totient(unsigned r, std::uint64_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "jordan_totient needs n >= 1");
  ExactInteger total = 0;
  for (const auto d : divisors(n)) {
    const int mu = moebius_mu(d);
    if (mu == 0) continue;
    const ExactInteger term = pow(ExactInteger(n / d), r);
    if (mu > 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

// --- matrices ---------------------------------------------------------------

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<ExactRational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) fail(ErrorCode::InvalidArgument, "ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<ExactRational> ExactMatrix::operator*(std::span<const ExactRational> x) const {
  if (x.size() != cols_) fail(ErrorCode::InvalidArgument, "matrix-vector size mismatch");
  std::vector<ExactRational> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  }
  return y;
}

namespace {

using IntegerGrid = std::vector<std::vector<ExactInteger>>;

ExactInteger lcm_of_denominators(std::span<const ExactRational> row) {
  ExactInteger l = 1;
  for (const auto& q : row) l = mp::lcm(l, ExactInteger(mp::denominator(q)));
  return l;
}

// Scales every row to integers; `scales[i]` is the factor applied to row i.
IntegerGrid to_integer_rows(const ExactMatrix& m, std::span<const ExactRational> extra_column,
                            std::vector<ExactInteger>& scales) {
  IntegerGrid grid(m.rows());
  scales.assign(m.rows(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<ExactRational> row;
    row.reserve(m.cols() + 1);
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    if (!extra_column.empty()) row.push_back(extra_column[i]);
    const ExactInteger scale = lcm_of_denominators(row);
    scales[i] = scale;
    grid[i].reserve(row.size());
    for (const auto& q : row) grid[i].push_back(mp::numerator(q) * (scale / mp::denominator(q)));
  }
  return grid;
}

struct BareissResult {
  std::size_t rank = 0;
  bool swapped_odd = false;
  std::vector<std::size_t> pivot_cols;
};

// Fraction-free forward elimination over the first `elim_cols` columns; all
// columns of `a` are updated. Every division below is exact (Sylvester).
BareissResult bareiss(IntegerGrid& a, std::size_t elim_cols) {
  BareissResult res;
  const std::size_t rows = a.size();
  if (rows == 0) return res;
  const std::size_t width = a.front().size();
  ExactInteger prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < elim_cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      std::swap(a[pivot], a[r]);
      res.swapped_odd = !res.swapped_odd;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < width; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

}  // namespace

std::size_t rank_exact(const ExactMatrix& m) {
  std::vector<ExactInteger> scales;
  IntegerGrid grid = to_integer_rows(m, {}, scales);
  return bareiss(grid, m.cols()).rank;
}

ExactRational determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<ExactInteger> scales;
  IntegerGrid grid = to_integer_rows(m, {}, scales);
  const auto res = bareiss(grid, n);
  if (res.rank < n) return 0;
  ExactInteger scale_product = 1;
  for (const auto& s : scales) scale_product *= s;
  ExactRational det(grid[n - 1][n - 1], scale_product);
  return res.swapped_odd ? ExactRational(-det) : det;
}

std::vector<ExactRational> solve_linear_exact(const ExactMatrix& m, std::span<const ExactRational> rhs) {
  if (m.rows() != m.cols()) fail(ErrorCode::InvalidArgument, "solve_linear_exact needs a square matrix");
  if (rhs.size() != m.rows()) fail(ErrorCode::InvalidArgument, "right-hand side length mismatch");
  const std::size_t n = m.rows();
  std::vector<ExactInteger> scales;
  IntegerGrid grid = to_integer_rows(m, rhs, scales);
  const auto res = bareiss(grid, n);
  if (res.rank < n) fail(ErrorCode::SingularMatrix, "matrix of size " + std::to_string(n) + " has rank " +
                                                        std::to_string(res.rank));
  std::vector<ExactRational> x(n);
  for (std::size_t k = n; k-- > 0;) {
    ExactRational acc = grid[k][n];
    for (std::size_t j = k + 1; j < n; ++j) acc -= grid[k][j] * x[j];
    x[k] = acc / grid[k][k];
  }
  return x;
}

// --- polynomials ------------------------------------------------------------

IntegerPolynomial primitive_part(std::span<const ExactRational> coeffs) {
  std::size_t degree_plus_one = coeffs.size();
  while (degree_plus_one > 0 && coeffs[degree_plus_one - 1] == 0) --degree_plus_one;
  const auto trimmed = coeffs.first(degree_plus_one);
  if (trimmed.empty()) return {};
  const ExactInteger scale = lcm_of_denominators(trimmed);
  IntegerPolynomial poly;
  poly.reserve(trimmed.size());
  ExactInteger content = 0;
  for (const auto& q : trimmed) {
    poly.push_back(mp::numerator(q) * (scale / mp::denominator(q)));
    content = mp::gcd(content, poly.back());
  }
  if (poly.back() < 0) content = -content;
  for (auto& c : poly) c /= content;
  return poly;
}

ExactRational evaluate(std::span<const ExactInteger> poly, const ExactRational& x) {
  ExactRational acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
  return acc;
}

namespace {

// Positive divisors of |n| (n != 0). Trial division up to 10^6; a larger
// leftover cofactor is treated as prime, which can only drop candidates.
std::vector<ExactInteger> integer_divisors(ExactInteger n) {
  if (n < 0) n = -n;
  std::vector<std::pair<ExactInteger, unsigned>> factors;
  for (std::uint64_t p = 2; p <= 1'000'000 && ExactInteger(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(ExactInteger(p), e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<ExactInteger> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    ExactInteger power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Exact division of poly by (q x - p); requires p/q to be a root.
IntegerPolynomial deflate(const IntegerPolynomial& poly, const ExactInteger& p, const ExactInteger& q) {
  const std::size_t n = poly.size() - 1;
  IntegerPolynomial quotient(n);
  // coefficient of x^{i+1} in (q x - p) * quotient is q*quotient[i] - p*quotient[i+1]
  for (std::size_t i = n; i-- > 0;) {
    const ExactInteger upper = (i + 1 < n) ? quotient[i + 1] : ExactInteger(0);
    quotient[i] = (poly[i + 1] + p * upper) / q;
  }
  return quotient;
}

}  // namespace

std::vector<ExactRational> rational_roots(std::span<const ExactInteger> poly_in) {
  IntegerPolynomial poly(poly_in.begin(), poly_in.end());
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
  if (poly.empty()) fail(ErrorCode::InvalidArgument, "rational_roots of the zero polynomial");
  std::vector<ExactRational> roots;
  while (poly.size() > 1 && poly.front() == 0) {
    roots.emplace_back(0);
    poly.erase(poly.begin());
  }
  if (poly.size() > 1) {
    const auto numerators = integer_divisors(poly.front());
    const auto denominators = integer_divisors(poly.back());
    std::vector<ExactRational> candidates;
    for (const auto& p : numerators) {
      for (const auto& q : denominators) {
        if (mp::gcd(p, q) != 1) continue;
        candidates.emplace_back(p, q);
        candidates.emplace_back(-p, q);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& c : candidates) {
      const ExactInteger p = mp::numerator(c);
      const ExactInteger q = mp::denominator(c);
      while (poly.size() > 1 && evaluate(poly, c) == 0) {
        roots.push_back(c);
        poly = deflate(poly, p, q);
      }
      if (poly.size() <= 1) break;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace hcomm
