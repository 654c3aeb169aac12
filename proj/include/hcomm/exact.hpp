#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hcomm {

using ExactInteger = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

/// Renders a rational as "num/den", or just "num" when the denominator is 1.
std::string to_string(const ExactRational& q);
std::string to_string(const ExactInteger& n);

/// Parses "a", "-a" or "a/b". Throws Error(InvalidArgument) on malformed text
/// or a zero denominator.
ExactRational parse_rational(std::string_view text);

ExactInteger pow(const ExactInteger& base, unsigned exponent);
ExactRational pow(const ExactRational& base, unsigned exponent);

// --- elementary number theory ----------------------------------------------

int moebius_mu(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);  // distinct, ascending
std::uint64_t smallest_prime_factor(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// J_r(n) = sum_{d | n} mu(d) (n/d)^r, the number of r-tuples generating Z/n.
ExactInteger jordan_totient(unsigned r, std::uint64_t n);

// --- exact dense matrices ---------------------------------------------------

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::initializer_list<std::initializer_list<ExactRational>> rows);

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  ExactRational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const ExactRational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<ExactRational> operator*(std::span<const ExactRational> x) const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExactRational> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination on the row-scaled
/// integer matrix.
std::size_t rank_exact(const ExactMatrix& m);

/// Determinant of a square matrix, exact.
ExactRational determinant(const ExactMatrix& m);

/// Unique solution of M x = rhs. Throws Error(SingularMatrix) when det M = 0.
std::vector<ExactRational> solve_linear_exact(const ExactMatrix& m, std::span<const ExactRational> rhs);

// --- polynomials ------------------------------------------------------------

/// Coefficients in ascending degree order: coeffs[i] multiplies x^i.
using IntegerPolynomial = std::vector<ExactInteger>;

/// Clears denominators and content, giving a primitive integer polynomial
/// with a positive leading coefficient.
IntegerPolynomial primitive_part(std::span<const ExactRational> coeffs);

ExactRational evaluate(std::span<const ExactInteger> poly, const ExactRational& x);

/// All rational roots with multiplicity, ascending. Irrational and complex
/// roots are absent from the result.
std::vector<ExactRational> rational_roots(std::span<const ExactInteger> poly);

}  // namespace hcomm
