#include "fplab/rational.hpp"

#include <algorithm>

#include "fplab/errors.hpp"

namespace fplab {

namespace {

void normalize(std::array<Rational, 3>& c, const char* what) {
  for (auto& v : c) v.canonicalize();
  int last = -1;
  for (int i = 2; i >= 0; --i) {
    if (c[static_cast<std::size_t>(i)] != 0) {
      last = i;
      break;
    }
  }
  if (last < 0) throw ValidationError(std::string(what) + " with all coordinates zero");
  const Rational s = c[static_cast<std::size_t>(last)];
  for (auto& v : c) v /= s;
}

std::array<Rational, 3> cross(const std::array<Rational, 3>& u, const std::array<Rational, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

std::string triple(const std::array<Rational, 3>& c, char open, char sep, char close) {
  std::string s(1, open);
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) s += sep;
    s += format_rational(c[i]);
  }
  s += close;
  return s;
}

}  // namespace

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    if (part.empty()) throw ValidationError("malformed rational: '" + s + "'");
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw ValidationError("malformed rational: '" + s + "'");
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') throw ValidationError("malformed rational: '" + s + "'");
    }
    return Integer(part[0] == '+' ? part.substr(1) : part, 10);
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  Integer num = parse_int(s.substr(0, slash));
  Integer den = parse_int(s.substr(slash + 1));
  if (den == 0) throw ValidationError("zero denominator in '" + s + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

ProjPoint::ProjPoint(Rational x, Rational y, Rational z) : c_{std::move(x), std::move(y), std::move(z)} {
  normalize(c_, "point");
}

ProjPoint::ProjPoint(long x, long y, long z) : ProjPoint(Rational(x), Rational(y), Rational(z)) {}

std::array<Integer, 3> ProjPoint::integer_coords() const {
  Integer l = 1;
  for (const auto& v : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  std::array<Integer, 3> out;
  Integer g = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = c_[i].get_num() * (l / c_[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1) {
    for (auto& v : out) v /= g;
  }
  return out;
}

std::string ProjPoint::to_string() const { return triple(c_, '[', ':', ']'); }

bool operator<(const ProjPoint& a, const ProjPoint& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

LineForm::LineForm(Rational a, Rational b, Rational c) : c_{std::move(a), std::move(b), std::move(c)} {
  normalize(c_, "line");
}

LineForm::LineForm(long a, long b, long c) : LineForm(Rational(a), Rational(b), Rational(c)) {}

LineForm LineForm::through(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw ValidationError("line through a repeated point is undefined");
  auto c = cross(p.coords(), q.coords());
  return LineForm(c[0], c[1], c[2]);
}

Rational LineForm::evaluate(const ProjPoint& p) const {
  const auto& x = p.coords();
  return c_[0] * x[0] + c_[1] * x[1] + c_[2] * x[2];
}

std::string LineForm::to_string() const { return triple(c_, '(', ',', ')'); }

ProjPoint intersect(const LineForm& a, const LineForm& b) {
  if (a == b) throw ValidationError("intersection of a line with itself");
  auto c = cross(a.coeffs(), b.coeffs());
  return ProjPoint(c[0], c[1], c[2]);
}

bool concurrent(const LineForm& a, const LineForm& b, const LineForm& c) {
  if (a == b || b == c || a == c) return true;
  return c.evaluate(intersect(a, b)) == 0;
}

}  // namespace fplab
