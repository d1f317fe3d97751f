#include "peakpoly/poly.hpp"

#include <algorithm>
#include <sstream>

#include "peakpoly/error.hpp"

namespace peakpoly {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly::Poly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return Poly(std::move(v));
}

Poly Poly::from_integers(std::span<const Integer> coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c);
  return Poly(std::move(v));
}

Poly Poly::x() { return Poly{0, 1}; }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Degree Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Poly::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& a : r.coeffs_) a = -a;
  return r;
}

bool Poly::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return is_integer(q); });
}

std::vector<Integer> Poly::integer_coeffs() const {
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& q : coeffs_) out.push_back(q.get_num());
  return out;
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  std::vector<Rational> out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
  return Poly(std::move(out));
}

Poly pow(const Poly& p, unsigned e) {
  Poly result = Poly::constant(1);
  Poly base = p;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Poly compose(const Poly& p, const Poly& q) {
  Poly acc;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc *= q;
    acc += Poly::constant(p.coeffs()[i]);
  }
  return acc;
}

Poly stretch(const Poly& p, unsigned k) {
  if (p.is_zero()) return {};
  std::vector<Rational> out((p.size() - 1) * k + 1);
  for (std::size_t i = 0; i < p.size(); ++i) out[i * k] = p.coeffs()[i];
  return Poly(std::move(out));
}

DivMod divmod(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw Error(Errc::kDivisionByZeroPoly, "division by the zero polynomial");
  std::vector<Rational> rem(p.coeffs().begin(), p.coeffs().end());
  const std::size_t dn = d.size();
  if (rem.size() < dn) return {Poly{}, p};
  std::vector<Rational> quot(rem.size() - dn + 1);
  const Rational& lead = d.leading();
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Rational c = rem[i + dn - 1] / lead;
    quot[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < dn; ++j) rem[i + j] -= c * d.coeffs()[j];
  }
  rem.resize(dn - 1);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& p, const Poly& d) {
  auto [q, r] = divmod(p, d);
  if (!r.is_zero()) {
    throw Error(Errc::kNonzeroRemainder, "(" + to_string(p) + ") / (" + to_string(d) + ") leaves " + to_string(r));
  }
  return q;
}

Poly subst_cleared(const Poly& p, const Poly& num, const Poly& den, std::size_t clear_power) {
  if (!p.is_zero() && *p.degree() > clear_power) {
    throw Error(Errc::kClearPowerTooSmall,
                "clear_power " + std::to_string(clear_power) + " < degree " + std::to_string(*p.degree()));
  }
  Poly acc;
  std::vector<Poly> num_pows{Poly::constant(1)};
  for (std::size_t k = 1; k < p.size(); ++k) num_pows.push_back(num_pows.back() * num);
  std::vector<Poly> den_pows{Poly::constant(1)};
  for (std::size_t k = 1; k <= clear_power; ++k) den_pows.push_back(den_pows.back() * den);
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p.coeffs()[k] == 0) continue;
    acc += p.coeffs()[k] * (num_pows[k] * den_pows[clear_power - k]);
  }
  return acc;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly u = a;
  Poly v = b;
  while (!v.is_zero()) {
    Poly r = divmod(u, v).remainder;
    u = std::move(v);
    v = primitive_part(r);
  }
  if (u.is_zero()) return u;
  return u * (Rational(1) / u.leading());
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  return p * make_rational(den_lcm, num_gcd);
}

std::string to_csv(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += to_string(p.coeffs()[i]);
  }
  return out;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational& c = p.coeffs()[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const Rational mag = abs(c);
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

}  // namespace peakpoly
