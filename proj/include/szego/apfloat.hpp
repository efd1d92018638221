#pragma once
//
// Arbitrary-precision real and complex scalars on top of MPFR.
//
// Every value carries its own precision in bits. Binary operations round to
// the larger of the two operand precisions; operations with a plain double or
// integer keep the precision of the multiprecision operand.
//

#include <mpfr.h>

#include <algorithm>
#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace szego {

inline constexpr unsigned kMinPrecisionBits = 64;
inline constexpr unsigned kDefaultPrecisionBits = 128;

/// Default working precision for degree-n work: max(128, ceil(3.5 n)).
unsigned default_precision_bits(unsigned n);

/// Throws ConfigError when bits < kMinPrecisionBits.
void require_precision(unsigned bits);

namespace detail {
template <typename S>
auto promote_scalar(S s) {
  if constexpr (std::floating_point<S>)
    return static_cast<double>(s);
  else
    return static_cast<long>(s);
}
}  // namespace detail

class ApReal {
 public:
  ApReal() : ApReal(kDefaultPrecisionBits) {}
  explicit ApReal(unsigned bits);
  ApReal(double value, unsigned bits);
  template <std::integral I>
  ApReal(I value, unsigned bits) : ApReal(bits) {
    if constexpr (std::is_signed_v<I>)
      mpfr_set_si(v_, static_cast<long>(value), MPFR_RNDN);
    else
      mpfr_set_ui(v_, static_cast<unsigned long>(value), MPFR_RNDN);
  }

  ApReal(const ApReal& other);
  ApReal(ApReal&& other) noexcept;
  ApReal& operator=(const ApReal& other);
  ApReal& operator=(ApReal&& other) noexcept;
  ~ApReal();

  /// Decimal text ("-60.1", "1e-5", "inf"). Throws std::invalid_argument on junk.
  static ApReal parse(std::string_view text, unsigned bits);
  static ApReal pi(unsigned bits);
  static ApReal infinity(unsigned bits);
  /// 2^e
  static ApReal pow2(long e, unsigned bits);

  [[nodiscard]] unsigned bits() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
  /// Copy rounded (or widened) to the given precision.
  [[nodiscard]] ApReal with_bits(unsigned bits) const;

  [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  [[nodiscard]] long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
  [[nodiscard]] long floor_to_long() const { return mpfr_get_si(v_, MPFR_RNDD); }
  /// Scientific notation with `digits` significant digits, e.g. "-6.0100e+01".
  [[nodiscard]] std::string to_string(int digits) const;
  /// Base-2 exponent e with 0.5 <= |x| / 2^e < 1; meaningless for zero.
  [[nodiscard]] long exponent2() const { return mpfr_get_exp(v_); }

  [[nodiscard]] bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  [[nodiscard]] bool is_finite() const { return mpfr_number_p(v_) != 0; }
  [[nodiscard]] bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  [[nodiscard]] bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  [[nodiscard]] int sign() const { return mpfr_sgn(v_); }

  [[nodiscard]] mpfr_srcptr raw() const { return v_; }
  [[nodiscard]] mpfr_ptr raw() { return v_; }

  ApReal& operator+=(const ApReal& rhs);
  ApReal& operator-=(const ApReal& rhs);
  ApReal& operator*=(const ApReal& rhs);
  ApReal& operator/=(const ApReal& rhs);
  ApReal& operator+=(double rhs);
  ApReal& operator-=(double rhs);
  ApReal& operator*=(double rhs);
  ApReal& operator/=(double rhs);
  ApReal& operator+=(long rhs);
  ApReal& operator-=(long rhs);
  ApReal& operator*=(long rhs);
  ApReal& operator/=(long rhs);
  ApReal& operator+=(int rhs) { return *this += static_cast<long>(rhs); }
  ApReal& operator-=(int rhs) { return *this -= static_cast<long>(rhs); }
  ApReal& operator*=(int rhs) { return *this *= static_cast<long>(rhs); }
  ApReal& operator/=(int rhs) { return *this /= static_cast<long>(rhs); }

  ApReal operator-() const;

  friend bool operator==(const ApReal& a, const ApReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const ApReal& a, const ApReal& b);
  friend bool operator==(const ApReal& a, double b) { return mpfr_cmp_d(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const ApReal& a, double b);

 private:
  mpfr_t v_;
};

ApReal operator+(ApReal a, const ApReal& b);
ApReal operator-(ApReal a, const ApReal& b);
ApReal operator*(ApReal a, const ApReal& b);
ApReal operator/(ApReal a, const ApReal& b);

template <typename S>
  requires std::floating_point<S> || std::integral<S>
ApReal operator+(ApReal a, S b) {
  a += detail::promote_scalar(b);
  return a;
}
template <typename S>
  requires std::floating_point<S> || std::integral<S>
ApReal operator-(ApReal a, S b) {
  a -= detail::promote_scalar(b);
  return a;
}
template <typename S>
  requires std::floating_point<S> || std::integral<S>
ApReal operator*(ApReal a, S b) {
  a *= detail::promote_scalar(b);
  return a;
}
template <typename S>
  requires std::floating_point<S> || std::integral<S>
ApReal operator/(ApReal a, S b) {
  a /= detail::promote_scalar(b);
  return a;
}
template <typename S>
  requires std::floating_point<S> || std::integral<S>
ApReal operator+(S a, ApReal b) {
  b += detail::promote_scalar(a);
  return b;
}
template <typename S>
  requires std::floating_point<S> || std::integral<S>
ApReal operator*(S a, ApReal b) {
  b *= detail::promote_scalar(a);
  return b;
}
ApReal operator-(double a, const ApReal& b);
ApReal operator-(long a, const ApReal& b);
inline ApReal operator-(int a, const ApReal& b) { return static_cast<long>(a) - b; }
ApReal operator/(double a, const ApReal& b);
ApReal operator/(long a, const ApReal& b);
inline ApReal operator/(int a, const ApReal& b) { return static_cast<long>(a) / b; }

ApReal abs(const ApReal& x);
ApReal sqrt(const ApReal& x);
ApReal exp(const ApReal& x);
ApReal log(const ApReal& x);
ApReal sin(const ApReal& x);
ApReal cos(const ApReal& x);
ApReal atan2(const ApReal& y, const ApReal& x);
ApReal pow(const ApReal& x, const ApReal& y);
ApReal pow(const ApReal& x, long k);
ApReal floor(const ApReal& x);
ApReal ceil(const ApReal& x);
ApReal gamma(const ApReal& x);
ApReal hypot(const ApReal& x, const ApReal& y);
ApReal max(const ApReal& a, const ApReal& b);
ApReal min(const ApReal& a, const ApReal& b);

std::ostream& operator<<(std::ostream& os, const ApReal& x);

/// Complex scalar as a pair of ApReal sharing one precision.
class ApComplex {
 public:
  ApComplex() = default;
  explicit ApComplex(unsigned bits) : re_(bits), im_(bits) {}
  ApComplex(ApReal re, ApReal im);
  explicit ApComplex(const ApReal& re) : re_(re), im_(0L, re.bits()) {}
  ApComplex(double re, double im, unsigned bits) : re_(re, bits), im_(im, bits) {}

  [[nodiscard]] const ApReal& real() const { return re_; }
  [[nodiscard]] const ApReal& imag() const { return im_; }
  [[nodiscard]] ApReal& real() { return re_; }
  [[nodiscard]] ApReal& imag() { return im_; }
  [[nodiscard]] unsigned bits() const { return std::max(re_.bits(), im_.bits()); }
  [[nodiscard]] ApComplex with_bits(unsigned bits) const { return {re_.with_bits(bits), im_.with_bits(bits)}; }
  [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  [[nodiscard]] bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

  ApComplex& operator+=(const ApComplex& rhs);
  ApComplex& operator-=(const ApComplex& rhs);
  ApComplex& operator*=(const ApComplex& rhs);
  ApComplex& operator/=(const ApComplex& rhs);
  ApComplex& operator*=(const ApReal& rhs);
  ApComplex& operator/=(const ApReal& rhs);
  ApComplex& operator+=(const ApReal& rhs);
  ApComplex& operator-=(const ApReal& rhs);
  ApComplex operator-() const { return {-re_, -im_}; }

  friend bool operator==(const ApComplex& a, const ApComplex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  ApReal re_;
  ApReal im_;
};

ApComplex operator+(ApComplex a, const ApComplex& b);
ApComplex operator-(ApComplex a, const ApComplex& b);
ApComplex operator*(const ApComplex& a, const ApComplex& b);
ApComplex operator/(ApComplex a, const ApComplex& b);
ApComplex operator*(ApComplex a, const ApReal& b);
ApComplex operator*(const ApReal& a, ApComplex b);
ApComplex operator/(ApComplex a, const ApReal& b);
ApComplex operator+(ApComplex a, const ApReal& b);
ApComplex operator-(ApComplex a, const ApReal& b);
ApComplex operator-(const ApReal& a, const ApComplex& b);

ApReal abs(const ApComplex& z);
/// |z|^2
ApReal norm(const ApComplex& z);
/// Principal argument in (-pi, pi].
ApReal arg(const ApComplex& z);
ApComplex conj(const ApComplex& z);
ApComplex exp(const ApComplex& z);
/// Principal logarithm.
ApComplex log(const ApComplex& z);
ApComplex sqrt(const ApComplex& z);
ApComplex pow(const ApComplex& z, long k);
/// i * z
ApComplex mul_i(const ApComplex& z);
/// r e^{i theta}
ApComplex polar(const ApReal& r, const ApReal& theta);

std::ostream& operator<<(std::ostream& os, const ApComplex& z);

}  // namespace szego
