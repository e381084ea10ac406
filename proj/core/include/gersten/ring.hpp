#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gersten/error.hpp"

namespace gersten {

/* Dense univariate polynomial over Q, coefficient of t^i at index i.
 * Invariant: no trailing zero coefficients; the zero polynomial is empty. */
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<mpq_class> coeffs);
  static Poly constant(const mpq_class& c);
  static Poly t_power(long k);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  long ord() const;                                                 // lowest nonzero index; -1 for zero
  const mpq_class& coeff(long i) const;
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class eval0() const;  // value at t = 0

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly scaled(const mpq_class& s) const;
  Poly monic() const;               // divide by leading coefficient
  Poly shifted_down(long k) const;  // divide by t^k, requires ord() >= k

  // Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  static Poly gcd(const Poly& a, const Poly& b);  // monic gcd, zero if both zero

 private:
  void trim();
  std::vector<mpq_class> c_;
};

/* Rational function p/q over Q, canonical: q monic, gcd(p, q) = 1, zero is 0/1. */
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly::constant(1)) {}
  RatFunc(Poly num, Poly den);
  static RatFunc constant(const mpq_class& c);
  static RatFunc from_poly(Poly p);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);  // b != 0
  RatFunc operator-() const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  // t-adic valuation ord(num) - ord(den); nullopt for zero.
  std::optional<long> t_valuation() const;

 private:
  void reduce();
  Poly num_, den_;
};

/* A coefficient value: a rational for the arithmetic kind, a rational
 * function for the polynomial kind. Interpretation belongs to Domain. */
class Element {
 public:
  Element() : v_(mpq_class(0)) {}
  explicit Element(mpq_class q) : v_(std::move(q)) {}
  explicit Element(RatFunc f) : v_(std::move(f)) {}

  bool holds_rational() const { return std::holds_alternative<mpq_class>(v_); }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  const RatFunc& ratfunc() const { return std::get<RatFunc>(v_); }

  bool operator==(const Element& o) const { return v_ == o.v_; }

 private:
  std::variant<mpq_class, RatFunc> v_;
};

enum class RingKind {
  LocalizedIntegers,             // Z at a prime p, uniformizer p
  LocalizedRationalPolynomials,  // Q[t] at (t), uniformizer t
};

/* An effective discrete valuation ring, picked by descriptor:
 *   "Z@<prime>"  integers localized at <prime>
 *   "Q[t]@t"     rational polynomials localized at (t) */
class Ring {
 public:
  static std::shared_ptr<const Ring> make(const std::string& descriptor);

  RingKind kind() const { return kind_; }
  const mpz_class& prime() const { return p_; }  // LocalizedIntegers only
  const std::string& descriptor() const { return descriptor_; }

  Ring(RingKind kind, mpz_class p, std::string descriptor)
      : kind_(kind), p_(std::move(p)), descriptor_(std::move(descriptor)) {}

 private:
  RingKind kind_;
  mpz_class p_;
  std::string descriptor_;
};

using RingPtr = std::shared_ptr<const Ring>;

/* Where arithmetic happens: the ring itself or its residue field. */
enum class Tag { Base, Residue };

/* A ring together with a tag; all element arithmetic is dispatched here.
 * Base: exact arithmetic in B (values live in Frac B, membership = valuation >= 0).
 * Residue: the residue field B/gB (F_p resp. Q). */
class Domain {
 public:
  Domain() = default;
  Domain(RingPtr ring, Tag tag) : ring_(std::move(ring)), tag_(tag) {}

  const RingPtr& ring() const { return ring_; }
  Tag tag() const { return tag_; }
  bool is_base() const { return tag_ == Tag::Base; }
  Domain residue_domain() const { return Domain(ring_, Tag::Residue); }
  Domain base_domain() const { return Domain(ring_, Tag::Base); }

  bool operator==(const Domain& o) const;
  std::string describe() const;

  Element zero() const;
  Element one() const;
  Element from_long(long n) const;
  Element g() const;               // uniformizer; Base only
  Element g_pow(long k) const;     // k >= 0

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  /* Division in the ambient field (Base tag: Frac B) or in the residue
   * field itself. For Base the result can fall outside B; callers that
   * need membership check in_domain afterwards. Throws NotInvertible
   * only when b == 0. */
  Element div(const Element& a, const Element& b) const;

  bool eq(const Element& a, const Element& b) const;
  bool is_zero(const Element& a) const;
  bool is_one(const Element& a) const;

  /* g-adic valuation; nullopt for 0. Base tag only. */
  std::optional<long> valuation(const Element& a) const;
  bool is_unit(const Element& a) const;  // Base: valuation 0; Residue: nonzero
  Element inv(const Element& a) const;   // unit/field inverse, throws NotInvertible
  bool in_domain(const Element& a) const;

  Element residue(const Element& a) const;  // B -> B/gB, requires in_domain
  Element lift(const Element& a) const;     // B/gB -> B, canonical representative

  std::string to_string(const Element& a) const;
  Element parse(const std::string& s) const;

 private:
  void require_base(const char* op) const;
  void check_kind(const Element& a) const;
  RingPtr ring_;
  Tag tag_ = Tag::Base;
};

}  // namespace gersten
