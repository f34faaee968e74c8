#include "dominoes/genpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace dominoes {

GenPoly3 GenPoly3::constant(const mpz_class& c) { return monomial({}, c); }

GenPoly3 GenPoly3::monomial(Exponent e, const mpz_class& c) {
  GenPoly3 p;
  p.add_term(e, c);
  return p;
}

GenPoly3 GenPoly3::linear(int i, int j) {
  GenPoly3 p = z();
  p.add_term({0, i, j}, 1);
  return p;
}

void GenPoly3::add_term(Exponent e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class GenPoly3::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int GenPoly3::degree_z() const { return terms_.empty() ? -1 : terms_.begin()->first.z; }

bool GenPoly3::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
}

GenPoly3& GenPoly3::operator+=(const GenPoly3& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

GenPoly3& GenPoly3::operator-=(const GenPoly3& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

GenPoly3 operator*(const GenPoly3& a, const GenPoly3& b) {
  PolyAccumulator acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc.add(ea + eb, ca * cb);
  return acc.to_poly();
}

GenPoly3& GenPoly3::operator*=(const GenPoly3& o) { return *this = *this * o; }

GenPoly3 GenPoly3::swap_qt() const {
  GenPoly3 out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{e.z, e.t, e.q}, c);
  return out;
}

GenPoly3 GenPoly3::scale_z(int dq, int dt) const {
  GenPoly3 out;
  for (const auto& [e, c] : terms_) out.add_term({e.z, e.q + e.z * dq, e.t + e.z * dt}, c);
  return out;
}

namespace {

mpz_class power(long base, int exponent) {
  if (exponent < 0) {
    if (base != 1 && base != -1) throw std::domain_error("negative exponent in integer evaluation");
    exponent = -exponent;
  }
  mpz_class result;
  mpz_class b(base);
  mpz_pow_ui(result.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exponent));
  return result;
}

}  // namespace

mpz_class GenPoly3::eval(long z0, long q0, long t0) const {
  mpz_class total = 0;
  for (const auto& [e, c] : terms_) total += c * power(z0, e.z) * power(q0, e.q) * power(t0, e.t);
  return total;
}

std::optional<GenPoly3> GenPoly3::try_divide_linear(int i, int j) const {
  if (is_zero()) return GenPoly3{};
  int top = degree_z();
  int bottom = std::min(0, std::prev(terms_.end())->first.z);
  // Coefficients of z^a as (q,t) polynomials with z exponent dropped.
  std::map<int, GenPoly3> by_z;
  for (const auto& [e, c] : terms_) by_z[e.z].add_term({0, e.q, e.t}, c);

  const GenPoly3 shift = monomial({0, i, j});
  GenPoly3 carry;  // quotient coefficient of the previous (higher) power
  GenPoly3 quotient;
  for (int a = top; a >= bottom; --a) {
    GenPoly3 coeff = by_z.count(a) ? by_z[a] : GenPoly3{};
    coeff -= shift * carry;
    if (a == bottom) {
      if (!coeff.is_zero()) return std::nullopt;
      break;
    }
    for (const auto& [e, c] : coeff.terms_) quotient.add_term({a - 1, e.q, e.t}, c);
    carry = std::move(coeff);
  }
  return quotient;
}

std::string GenPoly3::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string term;
    auto factor = [&term](char var, int exp) {
      if (exp == 0) return;
      if (!term.empty()) term += '*';
      term += var;
      if (exp != 1) term += '^' + std::to_string(exp);
    };
    factor('z', e.z);
    factor('q', e.q);
    factor('t', e.t);
    if (term.empty()) {
      term = c.get_str();
    } else if (c == -1) {
      term = "-" + term;
    } else if (c != 1) {
      term = c.get_str() + "*" + term;
    }
    out += term;
  }
  return out;
}

std::string GenPoly3::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& [e, c] : terms_) arr.push_back({e.z, e.q, e.t, c.get_str()});
  return arr.dump();
}

GenPoly3 GenPoly3::from_json(const std::string& text) {
  GenPoly3 p;
  for (const auto& term : nlohmann::json::parse(text)) {
    if (!term.is_array() || term.size() != 4) throw std::invalid_argument("polynomial term must be [a, b, c, \"C\"]");
    p.add_term({term[0].get<int>(), term[1].get<int>(), term[2].get<int>()},
               mpz_class(term[3].get<std::string>()));
  }
  return p;
}

void PolyAccumulator::merge(const PolyAccumulator& other) {
  for (const auto& [e, c] : other.counts_) counts_[e] += c;
}

GenPoly3 PolyAccumulator::to_poly() const {
  GenPoly3 p;
  for (const auto& [e, c] : counts_) p.add_term(e, c);
  return p;
}

GenPoly3 pow(const GenPoly3& base, int exponent) {
  GenPoly3 result = GenPoly3::constant(1);
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace dominoes
