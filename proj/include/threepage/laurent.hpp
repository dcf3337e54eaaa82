#pragma once
// Integer Laurent polynomials in the bracket variable A.

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace threepage {

/// Dense coefficients from the lowest nonzero exponent upward. No zero
/// coefficient is stored at either end; the zero polynomial is empty.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(std::int64_t coefficient, int exponent);
  static LaurentPoly from_terms(const std::vector<std::pair<int, std::int64_t>>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  int min_exponent() const { return low_; }
  int max_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coefficient(int exponent) const;
  /// (exponent, coefficient) pairs for nonzero coefficients, ascending.
  std::vector<std::pair<int, std::int64_t>> terms() const;

  /// Multiply by A^k.
  LaurentPoly shifted(int k) const;
  /// Substitute A -> A^{-1}.
  LaurentPoly mirrored() const;

  /// *this += k * A^shift * src
  void add_scaled(const LaurentPoly& src, std::int64_t k, int shift = 0);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  LaurentPoly pow(int k) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  friend std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b);

  /// Descending exponents with explicit signs, e.g. `-A^4 - A^-4`.
  std::string to_string() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

/// The loop value -A^2 - A^-2.
const LaurentPoly& loop_value();

}  // namespace threepage
