#include "probgroup/scalar.hpp"

#include <Eigen/Dense>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace probgroup {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

std::int64_t checkedNarrow(__int128 v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw InputError(std::string("rational overflow in ") + what);
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t num) : num_(num), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw InputError("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

double Rational::toDouble() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::toString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
  __int128 d = (__int128)a.den_ * b.den_;
  return Rational(checkedNarrow(n, "+"), checkedNarrow(d, "+"));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  __int128 n = (__int128)a.num_ * b.num_;
  __int128 d = (__int128)a.den_ * b.den_;
  return Rational(checkedNarrow(n, "*"), checkedNarrow(d, "*"));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw InputError("rational division by zero");
  __int128 n = (__int128)a.num_ * b.den_;
  __int128 d = (__int128)a.den_ * b.num_;
  return Rational(checkedNarrow(n, "/"), checkedNarrow(d, "/"));
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::pow(long exponent) const {
  Rational base = *this;
  if (exponent < 0) {
    base = Rational(1) / base;
    exponent = -exponent;
  }
  Rational acc(1);
  while (exponent > 0) {
    if (exponent & 1) acc = acc * base;
    base = base * base;
    exponent >>= 1;
  }
  return acc;
}

namespace {

// --- expression parser -----------------------------------------------------

struct Parser {
  std::string_view text;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "scalar expression error at position " << pos << ": " << msg
       << " in \"" << text << "\"";
    throw InputError(os.str());
  }

  void skipSpace() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  }

  bool peek(char c) {
    skipSpace();
    return pos < text.size() && text[pos] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool atDigit() {
    skipSpace();
    return pos < text.size() && std::isdigit((unsigned char)text[pos]);
  }

  std::int64_t parseUnsigned() {
    skipSpace();
    if (!atDigit()) fail("expected digits");
    __int128 v = 0;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
      v = v * 10 + (text[pos] - '0');
      if (v > std::numeric_limits<std::int64_t>::max())
        fail("integer literal overflow");
      ++pos;
    }
    return static_cast<std::int64_t>(v);
  }

  std::int64_t parseSigned() {
    skipSpace();
    bool neg = accept('-');
    std::int64_t v = parseUnsigned();
    return neg ? -v : v;
  }

  bool acceptWord(std::string_view w) {
    skipSpace();
    if (text.substr(pos, w.size()) != w) return false;
    size_t end = pos + w.size();
    if (end < text.size() &&
        (std::isalnum((unsigned char)text[end]) || text[end] == '_'))
      return false;
    pos = end;
    return true;
  }

  ScalarExpr parseExpr() {
    ScalarExpr lhs = parseTerm();
    for (;;) {
      if (accept('+')) {
        lhs = combine(ScalarExpr::Kind::Add, std::move(lhs), parseTerm());
      } else if (accept('-')) {
        lhs = combine(ScalarExpr::Kind::Sub, std::move(lhs), parseTerm());
      } else {
        return lhs;
      }
    }
  }

  ScalarExpr parseTerm() {
    ScalarExpr lhs = parseFactor();
    for (;;) {
      if (accept('*')) {
        lhs = combine(ScalarExpr::Kind::Mul, std::move(lhs), parseFactor());
      } else if (accept('/')) {
        lhs = combine(ScalarExpr::Kind::Div, std::move(lhs), parseFactor());
      } else {
        return lhs;
      }
    }
  }

  ScalarExpr parseFactor() {
    ScalarExpr base = parseAtom();
    if (accept('^')) {
      long e = static_cast<long>(parseSigned());
      if (base.kind == ScalarExpr::Kind::Rat) {
        if (base.rat.num() == 0 && e < 0) fail("zero to a negative power");
        ScalarExpr folded;
        folded.rat = base.rat.pow(e);
        return folded;
      }
      ScalarExpr p;
      p.kind = ScalarExpr::Kind::Pow;
      p.exponent = e;
      p.children.push_back(std::move(base));
      return p;
    }
    return base;
  }

  ScalarExpr parseAtom() {
    skipSpace();
    if (pos >= text.size()) fail("unexpected end of expression");
    if (accept('-')) {
      ScalarExpr inner = parseFactor();
      if (inner.kind == ScalarExpr::Kind::Rat) {
        inner.rat = -inner.rat;
        return inner;
      }
      ScalarExpr neg;
      neg.kind = ScalarExpr::Kind::Neg;
      neg.children.push_back(std::move(inner));
      return neg;
    }
    if (accept('(')) {
      ScalarExpr inner = parseExpr();
      expect(')');
      return inner;
    }
    if (acceptWord("sqrt")) {
      expect('(');
      ScalarExpr arg = parseExpr();
      expect(')');
      if (arg.kind != ScalarExpr::Kind::Rat)
        fail("sqrt argument must be rational");
      if (arg.rat.num() <= 0) fail("sqrt argument must be positive");
      ScalarExpr s;
      s.kind = ScalarExpr::Kind::Sqrt;
      s.rat = arg.rat;
      return s;
    }
    if (acceptWord("zeta")) {
      expect('(');
      std::int64_t n = parseSigned();
      expect(',');
      std::int64_t k = parseSigned();
      expect(')');
      if (n < 1) fail("zeta order must be >= 1");
      ScalarExpr z;
      z.kind = ScalarExpr::Kind::Zeta;
      z.n = static_cast<long>(n);
      z.k = static_cast<long>(k);
      return z;
    }
    if (atDigit()) {
      std::int64_t num = parseUnsigned();
      // A '/' directly followed by digits is part of the rational literal;
      // anything else is left for the enclosing term.  "3/2^2" keeps the
      // conventional reading because the folded literal is re-split below.
      size_t save = pos;
      skipSpace();
      if (pos < text.size() && text[pos] == '/') {
        size_t slash = pos++;
        if (atDigit()) {
          std::int64_t den = parseUnsigned();
          skipSpace();
          if (pos < text.size() && text[pos] == '^') {
            // exponent binds tighter than the literal's slash
            pos = slash;
          } else {
            if (den == 0) fail("rational with zero denominator");
            ScalarExpr r;
            r.rat = Rational(num, den);
            return r;
          }
        } else {
          pos = save;
        }
      } else {
        pos = save;
      }
      ScalarExpr r;
      r.rat = Rational(num);
      return r;
    }
    fail("expected a number, sqrt, zeta, or parenthesized expression");
  }

  static ScalarExpr combine(ScalarExpr::Kind kind, ScalarExpr a, ScalarExpr b) {
    if (a.kind == ScalarExpr::Kind::Rat && b.kind == ScalarExpr::Kind::Rat) {
      ScalarExpr folded;
      switch (kind) {
        case ScalarExpr::Kind::Add: folded.rat = a.rat + b.rat; break;
        case ScalarExpr::Kind::Sub: folded.rat = a.rat - b.rat; break;
        case ScalarExpr::Kind::Mul: folded.rat = a.rat * b.rat; break;
        case ScalarExpr::Kind::Div: folded.rat = a.rat / b.rat; break;
        default: throw InternalError("combine: not a binary operator");
      }
      return folded;
    }
    ScalarExpr e;
    e.kind = kind;
    e.children.push_back(std::move(a));
    e.children.push_back(std::move(b));
    return e;
  }
};

int precedence(ScalarExpr::Kind k) {
  switch (k) {
    case ScalarExpr::Kind::Add:
    case ScalarExpr::Kind::Sub: return 1;
    case ScalarExpr::Kind::Mul:
    case ScalarExpr::Kind::Div: return 2;
    case ScalarExpr::Kind::Neg: return 3;
    case ScalarExpr::Kind::Pow: return 4;
    default: return 5;
  }
}

void printInto(const ScalarExpr& e, std::string& out, int parentPrec) {
  int prec = precedence(e.kind);
  bool parens = prec < parentPrec;
  if (e.kind == ScalarExpr::Kind::Rat && e.rat.num() < 0) parens = parentPrec > 1;
  if (parens) out += '(';
  switch (e.kind) {
    case ScalarExpr::Kind::Rat:
      out += e.rat.toString();
      break;
    case ScalarExpr::Kind::Sqrt:
      out += "sqrt(" + e.rat.toString() + ")";
      break;
    case ScalarExpr::Kind::Zeta:
      out += "zeta(" + std::to_string(e.n) + "," + std::to_string(e.k) + ")";
      break;
    case ScalarExpr::Kind::Neg:
      out += '-';
      printInto(e.children[0], out, 3 + 1);
      break;
    case ScalarExpr::Kind::Pow:
      printInto(e.children[0], out, 4 + 1);
      out += '^';
      out += std::to_string(e.exponent);
      break;
    case ScalarExpr::Kind::Add:
      printInto(e.children[0], out, 1);
      out += " + ";
      printInto(e.children[1], out, 1 + 1);
      break;
    case ScalarExpr::Kind::Sub:
      printInto(e.children[0], out, 1);
      out += " - ";
      printInto(e.children[1], out, 1 + 1);
      break;
    case ScalarExpr::Kind::Mul:
      printInto(e.children[0], out, 2);
      out += "*";
      printInto(e.children[1], out, 2 + 1);
      break;
    case ScalarExpr::Kind::Div:
      printInto(e.children[0], out, 2);
      out += "/";
      printInto(e.children[1], out, 2 + 1);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

ScalarExpr parseScalar(std::string_view text) {
  Parser p{text};
  ScalarExpr e = p.parseExpr();
  p.skipSpace();
  if (p.pos != text.size()) p.fail("trailing characters");
  return e;
}

Complex evalScalar(const ScalarExpr& e) {
  Complex v;
  switch (e.kind) {
    case ScalarExpr::Kind::Rat:
      v = Complex(e.rat.toDouble(), 0.0);
      break;
    case ScalarExpr::Kind::Sqrt:
      v = Complex(std::sqrt(e.rat.toDouble()), 0.0);
      break;
    case ScalarExpr::Kind::Zeta: {
      long kk = e.k % e.n;
      if (kk < 0) kk += e.n;
      double angle = 2.0 * kPi * static_cast<double>(kk) / e.n;
      v = Complex(std::cos(angle), std::sin(angle));
      break;
    }
    case ScalarExpr::Kind::Neg:
      v = -evalScalar(e.children[0]);
      break;
    case ScalarExpr::Kind::Pow: {
      Complex base = evalScalar(e.children[0]);
      long exp = e.exponent;
      if (exp < 0) {
        if (std::abs(base) < 1e-300) throw InputError("scalar division by zero");
        base = 1.0 / base;
        exp = -exp;
      }
      Complex acc(1.0, 0.0);
      while (exp > 0) {
        if (exp & 1) acc *= base;
        base *= base;
        exp >>= 1;
      }
      v = acc;
      break;
    }
    case ScalarExpr::Kind::Add:
      v = evalScalar(e.children[0]) + evalScalar(e.children[1]);
      break;
    case ScalarExpr::Kind::Sub:
      v = evalScalar(e.children[0]) - evalScalar(e.children[1]);
      break;
    case ScalarExpr::Kind::Mul:
      v = evalScalar(e.children[0]) * evalScalar(e.children[1]);
      break;
    case ScalarExpr::Kind::Div: {
      Complex den = evalScalar(e.children[1]);
      if (std::abs(den) < 1e-300) throw InputError("scalar division by zero");
      v = evalScalar(e.children[0]) / den;
      break;
    }
  }
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw InputError("scalar expression overflow");
  return v;
}

std::string printScalar(const ScalarExpr& e) {
  std::string out;
  printInto(e, out, 0);
  return out;
}

Complex evalScalar(std::string_view text) { return evalScalar(parseScalar(text)); }

std::optional<long long> nearestInteger(Complex x, double tol) {
  if (std::abs(x.imag()) > tol) return std::nullopt;
  double r = std::round(x.real());
  if (std::abs(x.real() - r) > tol) return std::nullopt;
  return static_cast<long long>(r);
}

std::optional<long long> nearestNonnegInteger(Complex x, double tol) {
  auto n = nearestInteger(x, tol);
  if (!n || *n < 0) return std::nullopt;
  return n;
}

namespace {

// Recursive bounded solver: basis elements that stay independent as plane
// vectors are peeled off by a direct linear solve; collinear leftovers are
// scanned by coefficient magnitude so the smallest-height solution wins.
bool solveLattice(Complex x, const std::vector<Complex>& basis, size_t m,
                  const Lattice& L, std::vector<long long>& coords) {
  if (m == 1) {
    Complex t = x / basis[0];
    double r = std::round(t.real());
    if (std::abs(x - r * basis[0]) <= L.tol) {
      coords[0] = static_cast<long long>(r);
      return true;
    }
    return false;
  }
  if (m == 2) {
    Eigen::Matrix2d A;
    A << basis[0].real(), basis[1].real(), basis[0].imag(), basis[1].imag();
    Eigen::JacobiSVD<Eigen::Matrix2d> svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
    double smin = svd.singularValues()(1), smax = svd.singularValues()(0);
    if (smin > smax * 1e-10) {
      if (smax / smin > 1e8)
        throw InputError("ill-conditioned lattice basis");
      Eigen::Vector2d rhs(x.real(), x.imag());
      Eigen::Vector2d t = svd.solve(rhs);
      Eigen::Vector2d r(std::round(t(0)), std::round(t(1)));
      Complex recon = r(0) * basis[0] + r(1) * basis[1];
      if (std::abs(x - recon) <= L.tol) {
        coords[0] = static_cast<long long>(r(0));
        coords[1] = static_cast<long long>(r(1));
        return true;
      }
      return false;
    }
  }
  // scan the last coefficient, nearest zero first
  for (long long s = 0; s <= L.searchBound; ++s) {
    for (int sign = 0; sign < (s == 0 ? 1 : 2); ++sign) {
      long long c = sign == 0 ? s : -s;
      if (solveLattice(x - static_cast<double>(c) * basis[m - 1], basis, m - 1,
                       L, coords)) {
        coords[m - 1] = c;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<long long>> latticeCoordinates(Complex x,
                                                         const Lattice& L) {
  if (L.basis.empty()) throw InputError("empty lattice basis");
  if (L.basis.size() > 6) throw InputError("lattice basis too large (max 6)");
  for (Complex b : L.basis)
    if (std::abs(b) < 1e-12) throw InputError("lattice basis contains zero");
  std::vector<long long> coords(L.basis.size(), 0);
  if (solveLattice(x, L.basis, L.basis.size(), L, coords)) return coords;
  return std::nullopt;
}

Lattice parseLattice(std::string_view text, double tol) {
  Lattice L;
  L.tol = tol;
  size_t start = 0;
  int depth = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      std::string_view piece = text.substr(start, i - start);
      L.basis.push_back(evalScalar(piece));
      start = i + 1;
    }
  }
  if (L.basis.empty()) throw InputError("empty lattice basis");
  return L;
}

}  // namespace probgroup
