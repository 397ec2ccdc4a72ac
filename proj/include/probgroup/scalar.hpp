#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace probgroup {

using Complex = std::complex<double>;

/// Malformed input: bad files, bad expressions, bad tensor shapes.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A mathematical verification failed hard enough to stop the computation.
struct CheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two independent computations of the same quantity disagree; indicates a
/// bug in this library rather than bad input.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numerical tolerances threaded through every check.
///   eq       comparisons of floating values that should agree
///   integer  recognizing values that should be (nonnegative) integers
struct Tolerances {
  double eq = 1e-9;
  double integer = 1e-6;
};

/// Exact rational arithmetic on 64-bit numerator/denominator.
/// Operations throw InputError on overflow or division by zero.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num);  // NOLINT: implicit from integers is intended
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool isInteger() const { return den_ == 1; }
  double toDouble() const;
  std::string toString() const;

  friend Rational operator+(const Rational&, const Rational&);
  friend Rational operator-(const Rational&, const Rational&);
  friend Rational operator*(const Rational&, const Rational&);
  friend Rational operator/(const Rational&, const Rational&);
  Rational operator-() const;
  Rational pow(long exponent) const;
  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  void normalize();
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Expression tree for exact scalar constants.  Supported atoms are rational
/// literals, sqrt of a positive rational, and zeta(n,k) = exp(2*pi*i*k/n);
/// these combine under + - * / ^ with integer exponents.  Subtrees built
/// purely from rationals are folded during parsing, so "3/2" and "6/4" both
/// come back as the literal 3/2.
struct ScalarExpr {
  enum class Kind { Rat, Sqrt, Zeta, Neg, Add, Sub, Mul, Div, Pow };

  Kind kind = Kind::Rat;
  Rational rat;                     // Rat value or Sqrt argument
  long n = 0, k = 0;                // Zeta parameters
  long exponent = 0;                // Pow exponent
  std::vector<ScalarExpr> children; // 1 for Neg/Pow, 2 for Add/Sub/Mul/Div
};

/// Parses the expression grammar above; throws InputError with the offending
/// position on syntax errors, zero denominators, or sqrt of a non-positive
/// value.
ScalarExpr parseScalar(std::string_view text);

/// Evaluates to a complex double.  Throws InputError on division by zero or
/// non-finite intermediates.
Complex evalScalar(const ScalarExpr& e);

/// Prints a form that parseScalar accepts and that evaluates to the same
/// value.
std::string printScalar(const ScalarExpr& e);

/// Convenience: parse + evaluate.
Complex evalScalar(std::string_view text);

/// Nearest integer if x is within tol of one (both axes), else nullopt.
std::optional<long long> nearestInteger(Complex x, double tol);

/// Same, additionally requiring the integer to be >= 0.
std::optional<long long> nearestNonnegInteger(Complex x, double tol);

/// Z-span of a small set of complex numbers, used to certify algebraic
/// integrality of computed structure constants.  Membership asks for integer
/// coordinates reproducing x within tol.  Bases that are dependent as plane
/// vectors (for example {1, (1+sqrt(5))/2} on the real line) are handled by a
/// bounded coefficient search; searchBound caps the coefficient magnitude
/// tried per basis element, and membership beyond that bound is reported
/// negative.
struct Lattice {
  std::vector<Complex> basis;
  double tol = 1e-6;
  long long searchBound = 512;
};

/// Integer coordinates of x in the lattice, or nullopt if none are found.
std::optional<std::vector<long long>> latticeCoordinates(Complex x,
                                                         const Lattice& L);

/// Parses a comma-separated basis list such as "1,(1+sqrt(5))/2".
Lattice parseLattice(std::string_view text, double tol);

}  // namespace probgroup
