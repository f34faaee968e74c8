#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

namespace dominoes {

// Exponents of z, q and t. Signed so that substitutions like z -> z/q stay closed.
struct Exponent {
  int z = 0;
  int q = 0;
  int t = 0;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  Exponent operator+(const Exponent& o) const { return {z + o.z, q + o.q, t + o.t}; }
};

// Canonical term order: descending z, then ascending q+t, then ascending q.
struct CanonicalOrder {
  bool operator()(const Exponent& a, const Exponent& b) const {
    if (a.z != b.z) return a.z > b.z;
    if (a.q + a.t != b.q + b.t) return a.q + a.t < b.q + b.t;
    return a.q < b.q;
  }
};

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept {
    auto h = static_cast<std::size_t>(static_cast<unsigned>(e.z));
    h = h * 1000003u ^ static_cast<unsigned>(e.q);
    h = h * 1000003u ^ static_cast<unsigned>(e.t);
    return h;
  }
};

// Sparse polynomial in z, q, t with arbitrary-precision integer coefficients.
class GenPoly3 {
 public:
  using TermMap = std::map<Exponent, mpz_class, CanonicalOrder>;

  GenPoly3() = default;
  static GenPoly3 constant(const mpz_class& c);
  static GenPoly3 monomial(Exponent e, const mpz_class& c = 1);
  static GenPoly3 z() { return monomial({1, 0, 0}); }
  static GenPoly3 q() { return monomial({0, 1, 0}); }
  static GenPoly3 t() { return monomial({0, 0, 1}); }
  // z + q^i t^j
  static GenPoly3 linear(int i, int j);

  void add_term(Exponent e, const mpz_class& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  mpz_class coefficient(Exponent e) const;
  int degree_z() const;
  bool nonnegative() const;

  GenPoly3& operator+=(const GenPoly3& o);
  GenPoly3& operator-=(const GenPoly3& o);
  GenPoly3& operator*=(const GenPoly3& o);
  friend GenPoly3 operator+(GenPoly3 a, const GenPoly3& b) { return a += b; }
  friend GenPoly3 operator-(GenPoly3 a, const GenPoly3& b) { return a -= b; }
  friend GenPoly3 operator*(const GenPoly3& a, const GenPoly3& b);
  friend bool operator==(const GenPoly3& a, const GenPoly3& b) { return a.terms_ == b.terms_; }

  GenPoly3 swap_qt() const;
  // Multiplies every term by its own z-exponent times the shift: z^a -> z^a q^(a*dq) t^(a*dt).
  GenPoly3 scale_z(int dq, int dt) const;
  mpz_class eval(long z0, long q0, long t0) const;

  // Exact quotient by (z + q^i t^j), or nullopt when the remainder is nonzero.
  std::optional<GenPoly3> try_divide_linear(int i, int j) const;

  // "C*z^a*q^b*t^c" terms joined by " + "; "0" for the zero polynomial.
  std::string to_text() const;
  // [[a, b, c, "C"], ...] in canonical order.
  std::string to_json() const;
  static GenPoly3 from_json(const std::string& text);

 private:
  TermMap terms_;
};

// Hash-based accumulator used by enumerators; converted once at the end.
class PolyAccumulator {
 public:
  void add(Exponent e) { ++counts_[e]; }
  void add(Exponent e, const mpz_class& c) { counts_[e] += c; }
  void merge(const PolyAccumulator& other);
  GenPoly3 to_poly() const;

 private:
  std::unordered_map<Exponent, mpz_class, ExponentHash> counts_;
};

GenPoly3 pow(const GenPoly3& base, int exponent);

}  // namespace dominoes
