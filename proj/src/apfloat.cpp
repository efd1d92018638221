#include "szego/apfloat.hpp"

#include "szego/errors.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace szego {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

// Raise a's precision to at least `bits`, preserving its value.
void widen(mpfr_ptr a, mpfr_prec_t bits) {
  if (mpfr_get_prec(a) < bits) mpfr_prec_round(a, bits, kRnd);
}

}  // namespace

unsigned default_precision_bits(unsigned n) {
  const auto scaled = static_cast<unsigned>(std::ceil(3.5 * static_cast<double>(n)));
  return std::max(kDefaultPrecisionBits, scaled);
}

void require_precision(unsigned bits) {
  if (bits < kMinPrecisionBits)
    throw ConfigError("precision_bits must be >= " + std::to_string(kMinPrecisionBits) + ", got " +
                      std::to_string(bits));
}

ApReal::ApReal(unsigned bits) {
  require_precision(bits);
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

ApReal::ApReal(double value, unsigned bits) : ApReal(bits) { mpfr_set_d(v_, value, kRnd); }

ApReal::ApReal(const ApReal& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, kRnd);
}

ApReal::ApReal(ApReal&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

ApReal& ApReal::operator=(const ApReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, kRnd);
  }
  return *this;
}

ApReal& ApReal::operator=(ApReal&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

ApReal::~ApReal() { mpfr_clear(v_); }

ApReal ApReal::parse(std::string_view text, unsigned bits) {
  ApReal out(bits);
  std::string s(text);
  // trim
  const auto first = s.find_first_not_of(" \t\r\n");
  const auto last = s.find_last_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::invalid_argument("empty number");
  s = s.substr(first, last - first + 1);
  char* end = nullptr;
  if (mpfr_strtofr(out.v_, s.c_str(), &end, 10, kRnd), end == s.c_str() || *end != '\0')
    throw std::invalid_argument("not a number: '" + s + "'");
  if (mpfr_nan_p(out.v_)) throw std::invalid_argument("NaN is not accepted: '" + s + "'");
  return out;
}

ApReal ApReal::pi(unsigned bits) {
  ApReal out(bits);
  mpfr_const_pi(out.v_, kRnd);
  return out;
}

ApReal ApReal::infinity(unsigned bits) {
  ApReal out(bits);
  mpfr_set_inf(out.v_, 1);
  return out;
}

ApReal ApReal::pow2(long e, unsigned bits) {
  ApReal out(bits);
  mpfr_set_ui_2exp(out.v_, 1, e, kRnd);
  return out;
}

ApReal ApReal::with_bits(unsigned bits) const {
  ApReal out(bits);
  mpfr_set(out.v_, v_, kRnd);
  return out;
}

std::string ApReal::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(digits, 1) - 1, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

#define SZEGO_BINOP(op, fn)                            \
  ApReal& ApReal::operator op(const ApReal& rhs) {     \
    widen(v_, mpfr_get_prec(rhs.v_));                  \
    fn(v_, v_, rhs.v_, kRnd);                          \
    return *this;                                      \
  }                                                    \
  ApReal& ApReal::operator op(double rhs) {            \
    fn##_d(v_, v_, rhs, kRnd);                         \
    return *this;                                      \
  }                                                    \
  ApReal& ApReal::operator op(long rhs) {              \
    fn##_si(v_, v_, rhs, kRnd);                        \
    return *this;                                      \
  }

SZEGO_BINOP(+=, mpfr_add)
SZEGO_BINOP(-=, mpfr_sub)
SZEGO_BINOP(*=, mpfr_mul)
SZEGO_BINOP(/=, mpfr_div)

#undef SZEGO_BINOP

ApReal ApReal::operator-() const {
  ApReal out(*this);
  mpfr_neg(out.v_, out.v_, kRnd);
  return out;
}

std::partial_ordering operator<=>(const ApReal& a, const ApReal& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const ApReal& a, double b) {
  if (mpfr_nan_p(a.v_) || std::isnan(b)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_d(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

ApReal operator+(ApReal a, const ApReal& b) { return a += b; }
ApReal operator-(ApReal a, const ApReal& b) { return a -= b; }
ApReal operator*(ApReal a, const ApReal& b) { return a *= b; }
ApReal operator/(ApReal a, const ApReal& b) { return a /= b; }

ApReal operator-(double a, const ApReal& b) {
  ApReal out(b.bits());
  mpfr_d_sub(out.raw(), a, b.raw(), kRnd);
  return out;
}

ApReal operator-(long a, const ApReal& b) {
  ApReal out(b.bits());
  mpfr_si_sub(out.raw(), a, b.raw(), kRnd);
  return out;
}

ApReal operator/(double a, const ApReal& b) {
  ApReal out(b.bits());
  mpfr_d_div(out.raw(), a, b.raw(), kRnd);
  return out;
}

ApReal operator/(long a, const ApReal& b) {
  ApReal out(b.bits());
  mpfr_si_div(out.raw(), a, b.raw(), kRnd);
  return out;
}

#define SZEGO_UNARY(name, fn)               \
  ApReal name(const ApReal& x) {            \
    ApReal out(x.bits());                   \
    fn(out.raw(), x.raw(), kRnd);           \
    return out;                             \
  }

SZEGO_UNARY(abs, mpfr_abs)
SZEGO_UNARY(sqrt, mpfr_sqrt)
SZEGO_UNARY(exp, mpfr_exp)
SZEGO_UNARY(log, mpfr_log)
SZEGO_UNARY(sin, mpfr_sin)
SZEGO_UNARY(cos, mpfr_cos)
SZEGO_UNARY(gamma, mpfr_gamma)

#undef SZEGO_UNARY

ApReal floor(const ApReal& x) {
  ApReal out(x.bits());
  mpfr_floor(out.raw(), x.raw());
  return out;
}

ApReal ceil(const ApReal& x) {
  ApReal out(x.bits());
  mpfr_ceil(out.raw(), x.raw());
  return out;
}

ApReal atan2(const ApReal& y, const ApReal& x) {
  ApReal out(std::max(x.bits(), y.bits()));
  mpfr_atan2(out.raw(), y.raw(), x.raw(), kRnd);
  return out;
}

ApReal hypot(const ApReal& x, const ApReal& y) {
  ApReal out(std::max(x.bits(), y.bits()));
  mpfr_hypot(out.raw(), x.raw(), y.raw(), kRnd);
  return out;
}

ApReal pow(const ApReal& x, const ApReal& y) {
  ApReal out(std::max(x.bits(), y.bits()));
  mpfr_pow(out.raw(), x.raw(), y.raw(), kRnd);
  return out;
}

ApReal pow(const ApReal& x, long k) {
  ApReal out(x.bits());
  mpfr_pow_si(out.raw(), x.raw(), k, kRnd);
  return out;
}

ApReal max(const ApReal& a, const ApReal& b) { return a < b ? b : a; }
ApReal min(const ApReal& a, const ApReal& b) { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, const ApReal& x) {
  return os << x.to_string(static_cast<int>(std::min<std::streamsize>(os.precision(), 60)));
}

// ---------------------------------------------------------------------------

ApComplex::ApComplex(ApReal re, ApReal im) : re_(std::move(re)), im_(std::move(im)) {
  const unsigned b = bits();
  if (re_.bits() < b) re_ = re_.with_bits(b);
  if (im_.bits() < b) im_ = im_.with_bits(b);
}

ApComplex& ApComplex::operator+=(const ApComplex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

ApComplex& ApComplex::operator-=(const ApComplex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

ApComplex& ApComplex::operator*=(const ApComplex& rhs) {
  *this = *this * rhs;
  return *this;
}

ApComplex& ApComplex::operator/=(const ApComplex& rhs) {
  const ApReal den = norm(rhs);
  ApReal re = re_ * rhs.re_ + im_ * rhs.im_;
  ApReal im = im_ * rhs.re_ - re_ * rhs.im_;
  re_ = re / den;
  im_ = im / den;
  return *this;
}

ApComplex& ApComplex::operator*=(const ApReal& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

ApComplex& ApComplex::operator/=(const ApReal& rhs) {
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

ApComplex& ApComplex::operator+=(const ApReal& rhs) {
  re_ += rhs;
  if (im_.bits() < re_.bits()) im_ = im_.with_bits(re_.bits());
  return *this;
}

ApComplex& ApComplex::operator-=(const ApReal& rhs) {
  re_ -= rhs;
  if (im_.bits() < re_.bits()) im_ = im_.with_bits(re_.bits());
  return *this;
}

ApComplex operator+(ApComplex a, const ApComplex& b) { return a += b; }
ApComplex operator-(ApComplex a, const ApComplex& b) { return a -= b; }

ApComplex operator*(const ApComplex& a, const ApComplex& b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

ApComplex operator/(ApComplex a, const ApComplex& b) { return a /= b; }
ApComplex operator*(ApComplex a, const ApReal& b) { return a *= b; }
ApComplex operator*(const ApReal& a, ApComplex b) { return b *= a; }
ApComplex operator/(ApComplex a, const ApReal& b) { return a /= b; }
ApComplex operator+(ApComplex a, const ApReal& b) { return a += b; }
ApComplex operator-(ApComplex a, const ApReal& b) { return a -= b; }
ApComplex operator-(const ApReal& a, const ApComplex& b) { return {a - b.real(), -b.imag()}; }

ApReal abs(const ApComplex& z) { return hypot(z.real(), z.imag()); }
ApReal norm(const ApComplex& z) { return z.real() * z.real() + z.imag() * z.imag(); }
ApReal arg(const ApComplex& z) { return atan2(z.imag(), z.real()); }
ApComplex conj(const ApComplex& z) { return {z.real(), -z.imag()}; }

ApComplex exp(const ApComplex& z) {
  const ApReal m = exp(z.real());
  return {m * cos(z.imag()), m * sin(z.imag())};
}

ApComplex log(const ApComplex& z) { return {log(abs(z)), arg(z)}; }

ApComplex sqrt(const ApComplex& z) {
  const ApReal m = sqrt(abs(z));
  const ApReal half = arg(z) / 2L;
  return {m * cos(half), m * sin(half)};
}

ApComplex pow(const ApComplex& z, long k) {
  ApComplex base = k < 0 ? ApComplex(ApReal(1L, z.bits())) / z : z;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  ApComplex result(ApReal(1L, z.bits()));
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

ApComplex mul_i(const ApComplex& z) { return {-z.imag(), z.real()}; }

ApComplex polar(const ApReal& r, const ApReal& theta) { return {r * cos(theta), r * sin(theta)}; }

std::ostream& operator<<(std::ostream& os, const ApComplex& z) {
  return os << '(' << z.real() << ", " << z.imag() << ')';
}

}  // namespace szego
