#include "gersten/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gersten {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::UnknownRingKind: return "UnknownRingKind";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotAComplex: return "NotAComplex";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotAHomotopy: return "NotAHomotopy";
    case ErrorCode::BlockMismatch: return "BlockMismatch";
    case ErrorCode::NotAMorphismOfC: return "NotAMorphismOfC";
    case ErrorCode::BlockNotInvertible: return "BlockNotInvertible";
    case ErrorCode::NotInC: return "NotInC";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NotAComplexPair: return "NotAComplexPair";
    case ErrorCode::ResidueNotExact: return "ResidueNotExact";
    case ErrorCode::NotFunctorial: return "NotFunctorial";
    case ErrorCode::CoherenceFailure: return "CoherenceFailure";
    case ErrorCode::NotFree: return "NotFree";
    case ErrorCode::ComponentNotEquivalence: return "ComponentNotEquivalence";
    case ErrorCode::LevelIncompatible: return "LevelIncompatible";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotTriangular: return "NotTriangular";
    case ErrorCode::ObjectsNotEqual: return "ObjectsNotEqual";
    case ErrorCode::UnitElement: return "UnitElement";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotTorsion: return "NotTorsion";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/* ---------------- Poly ---------------- */

Poly::Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const mpq_class& c) {
  Poly p;
  if (c != 0) p.c_.push_back(c);
  return p;
}

Poly Poly::t_power(long k) {
  Poly p;
  p.c_.assign(static_cast<size_t>(k) + 1, mpq_class(0));
  p.c_.back() = 1;
  return p;
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

long Poly::ord() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<long>(i);
  return -1;
}

const mpq_class& Poly::coeff(long i) const {
  static const mpq_class zero(0);
  if (i < 0 || i >= static_cast<long>(c_.size())) return zero;
  return c_[static_cast<size_t>(i)];
}

mpq_class Poly::eval0() const { return coeff(0); }

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<mpq_class> r(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<mpq_class> r(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(r));
}

Poly Poly::operator-() const {
  std::vector<mpq_class> r(c_);
  for (auto& x : r) x = -x;
  return Poly(std::move(r));
}

Poly Poly::scaled(const mpq_class& s) const {
  if (s == 0) return Poly();
  std::vector<mpq_class> r(c_);
  for (auto& x : r) x *= s;
  return Poly(std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  mpq_class lead = c_.back();
  return scaled(mpq_class(1) / lead);
}

Poly Poly::shifted_down(long k) const {
  if (k == 0) return *this;
  if (is_zero()) return *this;
  std::vector<mpq_class> r(c_.begin() + k, c_.end());
  return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(ErrorCode::NotInvertible, "polynomial division by zero");
  std::vector<mpq_class> rem(a.c_);
  long db = b.degree();
  std::vector<mpq_class> quo;
  if (static_cast<long>(rem.size()) - 1 >= db)
    quo.assign(rem.size() - static_cast<size_t>(db), mpq_class(0));
  mpq_class lead = b.c_.back();
  for (long i = static_cast<long>(rem.size()) - 1; i >= db; --i) {
    if (rem[static_cast<size_t>(i)] == 0) continue;
    mpq_class q = rem[static_cast<size_t>(i)] / lead;
    quo[static_cast<size_t>(i - db)] = q;
    for (long j = 0; j <= db; ++j) rem[static_cast<size_t>(i - db + j)] -= q * b.c_[static_cast<size_t>(j)];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

namespace {

/* Integer coefficient image: coefficients scaled by the lcm of denominators,
 * then divided by their common content. Zero polynomial maps to {}. */
std::vector<mpz_class> primitive_int(const std::vector<mpq_class>& c) {
  mpz_class lcm(1);
  for (const mpq_class& q : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> r(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    mpq_class s = c[i] * lcm;
    s.canonicalize();
    r[i] = s.get_num();
  }
  mpz_class content(0);
  for (const mpz_class& z : r) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
  if (content > 1)
    for (mpz_class& z : r) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), content.get_mpz_t());
  return r;
}

void strip_content(std::vector<mpz_class>& c) {
  mpz_class content(0);
  for (const mpz_class& z : c) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
  if (content > 1)
    for (mpz_class& z : c) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), content.get_mpz_t());
}

/* Pseudo-remainder of x by y over Z: lead(y)^(deg x - deg y + 1) x mod y. */
std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> x, const std::vector<mpz_class>& y) {
  const mpz_class& lead = y.back();
  size_t dy = y.size() - 1;
  while (x.size() >= y.size()) {
    mpz_class top = x.back();
    if (top != 0) {
      for (size_t i = 0; i + 1 < x.size(); ++i) x[i] *= lead;
      size_t off = x.size() - 1 - dy;
      for (size_t j = 0; j < dy; ++j) x[off + j] -= top * y[j];
    }
    x.pop_back();
    while (!x.empty() && x.back() == 0) x.pop_back();
  }
  return x;
}

}  // namespace

/* Primitive-PRS Euclid over Z: content is stripped after every step, which
 * keeps the coefficients small where plain Euclid over Q explodes. */
Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  std::vector<mpz_class> x = primitive_int(a.c_);
  std::vector<mpz_class> y = primitive_int(b.c_);
  if (x.size() < y.size()) x.swap(y);
  while (!y.empty()) {
    std::vector<mpz_class> r = pseudo_rem(std::move(x), y);
    strip_content(r);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<mpq_class> q(x.size());
  for (size_t i = 0; i < x.size(); ++i) q[i] = mpq_class(x[i]);
  return Poly(std::move(q)).monic();
}

/* ---------------- RatFunc ---------------- */

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorCode::NotInvertible, "rational function with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  if (den_.is_one()) return;
  Poly g = Poly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = Poly::divmod(num_, g).first;
    den_ = Poly::divmod(den_, g).first;
  }
  mpq_class lead = den_.coeffs().back();
  if (lead != 1) {
    mpq_class inv = mpq_class(1) / lead;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::constant(const mpq_class& c) { return from_poly(Poly::constant(c)); }

RatFunc RatFunc::from_poly(Poly p) {
  RatFunc f;
  f.num_ = std::move(p);
  f.den_ = Poly::constant(1);
  return f;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc::from_poly(a.num_ + b.num_);
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  Poly g = Poly::gcd(a.den_, b.den_);
  if (g.is_one()) return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  Poly ra = Poly::divmod(a.den_, g).first;
  Poly rb = Poly::divmod(b.den_, g).first;
  return RatFunc(a.num_ * rb + b.num_ * ra, a.den_ * rb);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc::from_poly(a.num_ * b.num_);
  // cancel across the two fractions first, the factors stay small
  Poly na = a.num_, db = b.den_;
  Poly g1 = Poly::gcd(na, db);
  if (!g1.is_one()) {
    na = Poly::divmod(na, g1).first;
    db = Poly::divmod(db, g1).first;
  }
  Poly nb = b.num_, da = a.den_;
  Poly g2 = Poly::gcd(nb, da);
  if (!g2.is_one()) {
    nb = Poly::divmod(nb, g2).first;
    da = Poly::divmod(da, g2).first;
  }
  return RatFunc(na * nb, da * db);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) fail(ErrorCode::NotInvertible, "division by zero rational function");
  RatFunc inv;
  inv.num_ = b.den_;
  inv.den_ = b.num_;
  return a * inv;
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

std::optional<long> RatFunc::t_valuation() const {
  if (is_zero()) return std::nullopt;
  return num_.ord() - den_.ord();
}

/* ---------------- Ring ---------------- */

RingPtr Ring::make(const std::string& descriptor) {
  if (descriptor == "Q[t]@t")
    return std::make_shared<Ring>(RingKind::LocalizedRationalPolynomials, mpz_class(0), descriptor);
  const std::string prefix = "Z@";
  if (descriptor.rfind(prefix, 0) == 0) {
    std::string tail = descriptor.substr(prefix.size());
    if (tail.empty() || !std::all_of(tail.begin(), tail.end(), [](unsigned char ch) { return std::isdigit(ch); }))
      fail(ErrorCode::UnknownRingKind, "bad ring descriptor '" + descriptor + "'");
    mpz_class p(tail);
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
      fail(ErrorCode::NotPrime, tail + " is not prime");
    return std::make_shared<Ring>(RingKind::LocalizedIntegers, p, descriptor);
  }
  fail(ErrorCode::UnknownRingKind, "bad ring descriptor '" + descriptor + "' (expected Z@<prime> or Q[t]@t)");
}

/* ---------------- Domain ---------------- */

bool Domain::operator==(const Domain& o) const {
  if (tag_ != o.tag_) return false;
  if (!ring_ || !o.ring_) return ring_ == o.ring_;
  return ring_->descriptor() == o.ring_->descriptor();
}

std::string Domain::describe() const {
  std::string s = ring_ ? ring_->descriptor() : "<null>";
  return tag_ == Tag::Base ? s : s + "/g";
}

void Domain::require_base(const char* op) const {
  if (tag_ != Tag::Base) fail(ErrorCode::DomainMismatch, std::string(op) + " needs the base ring, not the residue field");
}

void Domain::check_kind(const Element& a) const {
  bool want_rational = ring_->kind() == RingKind::LocalizedIntegers;
  if (a.holds_rational() != want_rational)
    fail(ErrorCode::DomainMismatch, "element representation does not match " + describe());
}

Element Domain::zero() const {
  return ring_->kind() == RingKind::LocalizedIntegers ? Element(mpq_class(0)) : Element(RatFunc());
}

Element Domain::one() const { return from_long(1); }

Element Domain::from_long(long n) const {
  if (ring_->kind() == RingKind::LocalizedIntegers) {
    mpq_class q(n);
    if (tag_ == Tag::Residue) {
      mpz_class r = q.get_num() % ring_->prime();
      if (r < 0) r += ring_->prime();
      return Element(mpq_class(r));
    }
    return Element(q);
  }
  return Element(RatFunc::constant(mpq_class(n)));
}

Element Domain::g() const {
  require_base("uniformizer");
  if (ring_->kind() == RingKind::LocalizedIntegers) return Element(mpq_class(ring_->prime()));
  return Element(RatFunc::from_poly(Poly::t_power(1)));
}

Element Domain::g_pow(long k) const {
  require_base("uniformizer power");
  if (k < 0) fail(ErrorCode::PreconditionViolated, "negative uniformizer power");
  if (ring_->kind() == RingKind::LocalizedIntegers) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), ring_->prime().get_mpz_t(), static_cast<unsigned long>(k));
    return Element(mpq_class(r));
  }
  return Element(RatFunc::from_poly(Poly::t_power(k)));
}

namespace {
mpq_class mod_p(const mpq_class& q, const mpz_class& p) {
  // q must have denominator invertible mod p
  mpz_class den_inv;
  if (mpz_invert(den_inv.get_mpz_t(), q.get_den().get_mpz_t(), p.get_mpz_t()) == 0)
    fail(ErrorCode::DomainMismatch, "denominator not invertible modulo p");
  mpz_class r = (q.get_num() * den_inv) % p;
  if (r < 0) r += p;
  return mpq_class(r);
}
}  // namespace

Element Domain::add(const Element& a, const Element& b) const {
  check_kind(a);
  check_kind(b);
  if (ring_->kind() == RingKind::LocalizedIntegers) {
    mpq_class r = a.rational() + b.rational();
    if (tag_ == Tag::Residue) r = mod_p(r, ring_->prime());
    return Element(r);
  }
  return Element(a.ratfunc() + b.ratfunc());
}

Element Domain::sub(const Element& a, const Element& b) const {
  check_kind(a);
  check_kind(b);
  if (ring_->kind() == RingKind::LocalizedIntegers) {
    mpq_class r = a.rational() - b.rational();
    if (tag_ == Tag::Residue) r = mod_p(r, ring_->prime());
    return Element(r);
  }
  return Element(a.ratfunc() - b.ratfunc());
}

Element Domain::mul(const Element& a, const Element& b) const {
  check_kind(a);
  check_kind(b);
  if (ring_->kind() == RingKind::LocalizedIntegers) {
    mpq_class r = a.rational() * b.rational();
    if (tag_ == Tag::Residue) r = mod_p(r, ring_->prime());
    return Element(r);
  }
  return Element(a.ratfunc() * b.ratfunc());
}

Element Domain::neg(const Element& a) const {
  check_kind(a);
  if (ring_->kind() == RingKind::LocalizedIntegers) {
    mpq_class r = -a.rational();
    if (tag_ == Tag::Residue && r != 0) r += ring_->prime();
    return Element(r);
  }
  return Element(-a.ratfunc());
}

Element Domain::div(const Element& a, const Element& b) const {
  check_kind(a);
  check_kind(b);
  if (is_zero(b)) fail(ErrorCode::NotInvertible, "division by zero in " + describe());
  if (ring_->kind() == RingKind::LocalizedIntegers) {
    if (tag_ == Tag::Residue) return mul(a, inv(b));
    mpq_class r = a.rational() / b.rational();
    return Element(r);
  }
  return Element(a.ratfunc() / b.ratfunc());
}

bool Domain::eq(const Element& a, const Element& b) const {
  check_kind(a);
  check_kind(b);
  return a == b;
}

bool Domain::is_zero(const Element& a) const {
  check_kind(a);
  if (ring_->kind() == RingKind::LocalizedIntegers) return a.rational() == 0;
  return a.ratfunc().is_zero();
}

bool Domain::is_one(const Element& a) const {
  check_kind(a);
  if (ring_->kind() == RingKind::LocalizedIntegers) return a.rational() == 1;
  return a.ratfunc().is_one();
}

std::optional<long> Domain::valuation(const Element& a) const {
  require_base("valuation");
  check_kind(a);
  if (ring_->kind() == RingKind::LocalizedIntegers) {
    const mpq_class& q = a.rational();
    if (q == 0) return std::nullopt;
    const mpz_class& p = ring_->prime();
    mpz_class tmp;
    long vnum = static_cast<long>(mpz_remove(tmp.get_mpz_t(), q.get_num().get_mpz_t(), p.get_mpz_t()));
    long vden = static_cast<long>(mpz_remove(tmp.get_mpz_t(), q.get_den().get_mpz_t(), p.get_mpz_t()));
    return vnum - vden;
  }
  return a.ratfunc().t_valuation();
}

bool Domain::is_unit(const Element& a) const {
  check_kind(a);
  if (tag_ == Tag::Residue) return !is_zero(a);
  auto v = valuation(a);
  return v.has_value() && *v == 0;
}

Element Domain::inv(const Element& a) const {
  check_kind(a);
  if (!is_unit(a)) fail(ErrorCode::NotInvertible, "not a unit in " + describe() + ": " + to_string(a));
  if (ring_->kind() == RingKind::LocalizedIntegers) {
    if (tag_ == Tag::Residue) {
      mpz_class r;
      if (mpz_invert(r.get_mpz_t(), a.rational().get_num().get_mpz_t(), ring_->prime().get_mpz_t()) == 0)
        fail(ErrorCode::NotInvertible, "no inverse modulo p");
      return Element(mpq_class(r));
    }
    return Element(mpq_class(1 / a.rational()));
  }
  return Element(RatFunc::from_poly(Poly::constant(1)) / a.ratfunc());
}

bool Domain::in_domain(const Element& a) const {
  check_kind(a);
  if (tag_ == Tag::Residue) {
    if (ring_->kind() == RingKind::LocalizedIntegers) {
      const mpq_class& q = a.rational();
      return q.get_den() == 1 && q.get_num() >= 0 && q.get_num() < ring_->prime();
    }
    const RatFunc& f = a.ratfunc();
    return f.den().is_one() && f.num().degree() <= 0;
  }
  if (is_zero(a)) return true;
  auto v = valuation(a);
  return v.has_value() && *v >= 0;
}

Element Domain::residue(const Element& a) const {
  require_base("residue map");
  if (!in_domain(a)) fail(ErrorCode::DomainMismatch, "element outside B has no residue: " + to_string(a));
  if (ring_->kind() == RingKind::LocalizedIntegers) return Element(mod_p(a.rational(), ring_->prime()));
  const RatFunc& f = a.ratfunc();
  return Element(RatFunc::constant(f.num().eval0() / f.den().eval0()));
}

Element Domain::lift(const Element& a) const {
  if (tag_ != Tag::Residue) fail(ErrorCode::DomainMismatch, "lift expects a residue-field element");
  Domain rd = residue_domain();
  if (!rd.in_domain(a)) fail(ErrorCode::DomainMismatch, "not a canonical residue-field element");
  return a;  // canonical representative is already a base element
}

/* ---------------- printing and parsing ---------------- */

namespace {

std::string poly_to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long i = 0; i <= p.degree(); ++i) {
    const mpq_class& c = p.coeff(i);
    if (c == 0) continue;
    mpq_class abs_c = c < 0 ? mpq_class(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit_coeff = abs_c == 1 && i > 0;
    if (!unit_coeff) out << abs_c.get_str();
    if (i > 0) {
      if (!unit_coeff) out << "*";
      out << "t";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

/* Small recursive-descent parser for ring elements:
 *   expr   := term (('+'|'-') term)*
 *   term   := factor (('*'|'/') factor)*
 *   factor := ['-'] (integer | 't' | '(' expr ')') ['^' integer]
 * Values are carried as rational functions; the caller converts/validates. */
struct ElemParser {
  const std::string& s;
  size_t i = 0;

  explicit ElemParser(const std::string& str) : s(str) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool peek(char c) {
    skip();
    return i < s.size() && s[i] == c;
  }

  bool eat(char c) {
    if (peek(c)) {
      ++i;
      return true;
    }
    return false;
  }

  [[noreturn]] void bail(const std::string& why) {
    fail(ErrorCode::ParseError, why + " at position " + std::to_string(i) + " in '" + s + "'");
  }

  RatFunc parse_expr() {
    RatFunc v = parse_term();
    while (true) {
      if (eat('+'))
        v = v + parse_term();
      else if (eat('-'))
        v = v - parse_term();
      else
        return v;
    }
  }

  RatFunc parse_term() {
    RatFunc v = parse_factor();
    while (true) {
      if (eat('*'))
        v = v * parse_factor();
      else if (eat('/')) {
        RatFunc d = parse_factor();
        if (d.is_zero()) bail("division by zero");
        v = v / d;
      } else
        return v;
    }
  }

  RatFunc parse_factor() {
    skip();
    bool negate = false;
    while (eat('-')) negate = !negate;
    skip();
    RatFunc v;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      v = RatFunc::constant(mpq_class(s.substr(i, j - i)));
      i = j;
    } else if (i < s.size() && s[i] == 't') {
      ++i;
      v = RatFunc::from_poly(Poly::t_power(1));
    } else if (eat('(')) {
      v = parse_expr();
      if (!eat(')')) bail("expected ')'");
    } else {
      bail("expected a number, 't' or '('");
    }
    if (eat('^')) {
      skip();
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) bail("expected an exponent");
      long e = std::stol(s.substr(i, j - i));
      i = j;
      RatFunc r = RatFunc::constant(1);
      for (long k = 0; k < e; ++k) r = r * v;
      v = r;
    }
    return negate ? -v : v;
  }
};

}  // namespace

std::string Domain::to_string(const Element& a) const {
  check_kind(a);
  if (ring_->kind() == RingKind::LocalizedIntegers) return a.rational().get_str();
  const RatFunc& f = a.ratfunc();
  if (f.den().is_one()) return poly_to_string(f.num());
  return "(" + poly_to_string(f.num()) + ")/(" + poly_to_string(f.den()) + ")";
}

Element Domain::parse(const std::string& s) const {
  ElemParser p(s);
  RatFunc v = p.parse_expr();
  p.skip();
  if (p.i != s.size()) p.bail("trailing input");
  Element e = [&] {
    if (ring_->kind() == RingKind::LocalizedIntegers) {
      if (v.num().degree() > 0 || v.den().degree() > 0)
        fail(ErrorCode::ParseError, "'t' is not an element of " + describe());
      if (v.is_zero()) return Element(mpq_class(0));
      mpq_class q = v.num().eval0() / v.den().eval0();
      return Element(q);
    }
    return Element(v);
  }();
  if (tag_ == Tag::Residue) {
    Domain base = base_domain();
    if (!base.in_domain(e))
      fail(ErrorCode::ParseError, "'" + s + "' is not in " + describe());
    return base.residue(e);
  }
  if (!in_domain(e)) fail(ErrorCode::ParseError, "'" + s + "' is not in " + describe());
  return e;
}

}  // namespace gersten
