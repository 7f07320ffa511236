#include "nilplab/field.hpp"

#include <charconv>
#include <limits>
#include <cstdlib>

namespace nilplab {

std::size_t max_dimension() {
  static const std::size_t cap = [] {
    const char* env = std::getenv("NILPLAB_MAX_DIM");
    if (env == nullptr) return std::size_t{512};
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || v == 0) return std::size_t{512};
    return static_cast<std::size_t>(v);
  }();
  return cap;
}

void check_dimension_cap(std::size_t dim, const std::string& what) {
  if (dim > max_dimension()) {
    throw LimitError(what + ": dimension " + std::to_string(dim) +
                     " exceeds NILPLAB_MAX_DIM = " +
                     std::to_string(max_dimension()));
  }
}

namespace {

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on (a, p), p prime, 0 < a < p
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p);
  std::int64_t new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

FieldDescriptor FieldDescriptor::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31)) {
    throw Error("prime field characteristic must be < 2^31, got " +
                std::to_string(p));
  }
  if (!is_prime_u64(p)) {
    throw Error("not a prime: " + std::to_string(p));
  }
  return FieldDescriptor(p);
}

std::string FieldDescriptor::str() const {
  return is_rationals() ? "Q" : "F_" + std::to_string(p_);
}

Scalar Scalar::from_integer(long v, const FieldDescriptor& f) {
  Scalar s(f);
  if (f.is_rationals()) {
    s.rat_ = mpq_class(v);
  } else {
    const std::int64_t p = static_cast<std::int64_t>(f.characteristic());
    std::int64_t r = v % p;
    if (r < 0) r += p;
    s.res_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::from_mpz(const mpz_class& v, const FieldDescriptor& f) {
  Scalar s(f);
  if (f.is_rationals()) {
    s.rat_ = mpq_class(v);
  } else {
    mpz_class p(static_cast<unsigned long>(f.characteristic()));
    mpz_class r = v % p;
    if (r < 0) r += p;
    s.res_ = r.get_ui();
  }
  return s;
}

Scalar Scalar::rational(const mpq_class& v) {
  if (v.get_den() == 0) {
    throw NotInvertibleError("rational with zero denominator");
  }
  // The input may be non-canonical (negative or unreduced denominator,
  // e.g. straight from the two-argument mpq_class constructor).  mpq-level
  // copies require canonical operands, so rebuild from the mpz parts and
  // canonicalize before storing.
  mpq_class canonical(v.get_num(), v.get_den());
  canonical.canonicalize();
  Scalar s(FieldDescriptor::rationals());
  s.rat_ = canonical;
  return s;
}

Scalar Scalar::residue(std::uint64_t r, const FieldDescriptor& f) {
  if (!f.is_prime_field()) {
    throw FieldMismatchError("residue scalar requires a prime field");
  }
  Scalar s(f);
  s.res_ = r % f.characteristic();
  return s;
}

Scalar Scalar::parse(std::string_view text, const FieldDescriptor& f) {
  if (text.empty()) throw ParseError("empty scalar literal");
  const std::string str(text);
  if (f.is_rationals()) {
    mpq_class v;
    if (v.set_str(str, 10) != 0) {
      throw ParseError("bad rational literal: '" + str + "'");
    }
    if (v.get_den() == 0) {
      throw ParseError("zero denominator in scalar literal: '" + str + "'");
    }
    return rational(v);
  }
  mpz_class v;
  if (v.set_str(str, 10) != 0) {
    throw ParseError("bad residue literal: '" + str + "'");
  }
  return from_mpz(v, f);
}

bool Scalar::is_zero() const {
  return field_.is_rationals() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rationals() ? rat_ == 1 : res_ == 1;
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (field_ != rhs.field_) {
    throw FieldMismatchError("scalar field mismatch: " + field_.str() +
                             " vs " + rhs.field_.str());
  }
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  require_same_field(rhs);
  Scalar s(field_);
  if (field_.is_rationals()) {
    s.rat_ = rat_ + rhs.rat_;
  } else {
    s.res_ = (res_ + rhs.res_) % field_.characteristic();
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& rhs) const {
  require_same_field(rhs);
  Scalar s(field_);
  if (field_.is_rationals()) {
    s.rat_ = rat_ - rhs.rat_;
  } else {
    const std::uint64_t p = field_.characteristic();
    s.res_ = (res_ + p - rhs.res_) % p;
  }
  return s;
}

Scalar Scalar::operator*(const Scalar& rhs) const {
  require_same_field(rhs);
  Scalar s(field_);
  if (field_.is_rationals()) {
    s.rat_ = rat_ * rhs.rat_;
  } else {
    const unsigned __int128 prod =
        static_cast<unsigned __int128>(res_) * rhs.res_;
    s.res_ = static_cast<std::uint64_t>(prod % field_.characteristic());
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rationals()) {
    s.rat_ = -rat_;
  } else {
    const std::uint64_t p = field_.characteristic();
    s.res_ = (p - res_) % p;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw NotInvertibleError("inverse of zero");
  Scalar s(field_);
  if (field_.is_rationals()) {
    s.rat_ = 1 / rat_;
  } else {
    s.res_ = mod_inverse(res_, field_.characteristic());
  }
  return s;
}

bool Scalar::operator==(const Scalar& rhs) const {
  if (field_ != rhs.field_) return false;
  return field_.is_rationals() ? rat_ == rhs.rat_ : res_ == rhs.res_;
}

std::string Scalar::str() const {
  if (field_.is_rationals()) return rat_.get_str();
  return std::to_string(res_);
}

Scalar binomial_scalar(long top, unsigned long k, const FieldDescriptor& f) {
  mpz_class b;
  if (top >= 0) {
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(top), k);
  } else if (top == std::numeric_limits<long>::min()) {
    throw Error("binomial top argument out of range");
  } else {
    // C(-n, k) = (-1)^k C(n+k-1, k)
    const unsigned long n = static_cast<unsigned long>(-top);
    mpz_bin_uiui(b.get_mpz_t(), n + k - 1, k);
    if (k % 2 == 1) b = -b;
  }
  return Scalar::from_mpz(b, f);
}

}  // namespace nilplab
