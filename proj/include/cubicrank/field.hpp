#pragma once
#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

#include "cubicrank/rng.hpp"

namespace cubicrank {

using Rat = mpq_class;
using Cx = std::complex<double>;

inline Rat ratio(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_from_strings(const std::string& num, const std::string& den) {
  Rat r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

// n! / (e1! e2! ... ek!) for |e| = n; used for the coefficient <-> tensor
// entry conversion c_e = multinomial(3; e) * T_e
template <class Vec>
inline mpz_class multinomial(int n, const Vec& e) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  for (auto k : e) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), (unsigned long)k);
    r /= f;
  }
  return r;
}

struct FieldMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scalar in the tower Q  <  Q(sqrt d)  <  approximate C.
// Exact tags are kept canonical by mpq_class; mixing two distinct quadratic
// extensions is an error (one extension per computation).
class FieldElement {
 public:
  enum class Tag { Rational, Quadratic, Approx };

  FieldElement() : tag_(Tag::Rational) {}
  FieldElement(const Rat& r) : tag_(Tag::Rational), a_(r) {}
  FieldElement(long n) : tag_(Tag::Rational), a_(n) {}
  FieldElement(Cx z) : tag_(Tag::Approx), z_(z) {}
  static FieldElement quad(const Rat& a, const Rat& b, long d) {
    if (d == 0 || d == 1) throw FieldMismatch("quadratic(d): d must not be 0 or 1");
    FieldElement e;
    e.tag_ = Tag::Quadratic;
    e.a_ = a;
    e.b_ = b;
    e.d_ = d;
    return e;
  }

  Tag tag() const { return tag_; }
  bool exact() const { return tag_ != Tag::Approx; }
  const Rat& rat_part() const { return a_; }
  const Rat& quad_part() const { return b_; }
  long quad_d() const { return d_; }

  const Rat& as_rat() const {
    if (tag_ == Tag::Rational) return a_;
    if (tag_ == Tag::Quadratic && b_ == 0) return a_;
    throw FieldMismatch("value is not rational");
  }

  bool is_zero() const {
    switch (tag_) {
      case Tag::Rational: return a_ == 0;
      case Tag::Quadratic: return a_ == 0 && b_ == 0;
      default: return z_ == Cx(0.0, 0.0);
    }
  }

  Cx to_complex() const {
    switch (tag_) {
      case Tag::Rational: return Cx(a_.get_d(), 0.0);
      case Tag::Quadratic: {
        double root = std::sqrt(std::abs((double)d_));
        if (d_ > 0) return Cx(a_.get_d() + b_.get_d() * root, 0.0);
        return Cx(a_.get_d(), b_.get_d() * root);
      }
      default: return z_;
    }
  }

  FieldElement conj() const {
    if (tag_ == Tag::Quadratic) return quad(a_, -b_, d_);
    if (tag_ == Tag::Approx) return FieldElement(std::conj(z_));
    return *this;
  }

  friend FieldElement operator-(const FieldElement& x) {
    switch (x.tag_) {
      case Tag::Rational: return FieldElement(Rat(-x.a_));
      case Tag::Quadratic: return quad(-x.a_, -x.b_, x.d_);
      default: return FieldElement(-x.z_);
    }
  }

  friend FieldElement operator+(const FieldElement& x, const FieldElement& y) {
    auto [p, q] = align(x, y);
    switch (p.tag_) {
      case Tag::Rational: return FieldElement(Rat(p.a_ + q.a_));
      case Tag::Quadratic: return quad(p.a_ + q.a_, p.b_ + q.b_, p.d_);
      default: return FieldElement(p.z_ + q.z_);
    }
  }
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y) {
    return x + (-y);
  }
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y) {
    auto [p, q] = align(x, y);
    switch (p.tag_) {
      case Tag::Rational: return FieldElement(Rat(p.a_ * q.a_));
      case Tag::Quadratic:
        // (a + b r)(a' + b' r) with r^2 = d
        return quad(p.a_ * q.a_ + Rat(p.d_) * p.b_ * q.b_,
                    p.a_ * q.b_ + p.b_ * q.a_, p.d_);
      default: return FieldElement(p.z_ * q.z_);
    }
  }
  friend FieldElement operator/(const FieldElement& x, const FieldElement& y) {
    return x * y.inverse();
  }

  FieldElement inverse() const {
    switch (tag_) {
      case Tag::Rational:
        if (a_ == 0) throw std::domain_error("division by zero");
        return FieldElement(Rat(1 / a_));
      case Tag::Quadratic: {
        Rat nrm = a_ * a_ - Rat(d_) * b_ * b_;
        if (nrm == 0) throw std::domain_error("division by zero");
        return quad(a_ / nrm, -b_ / nrm, d_);
      }
      default:
        return FieldElement(1.0 / z_);
    }
  }

  FieldElement& operator+=(const FieldElement& y) { return *this = *this + y; }
  FieldElement& operator-=(const FieldElement& y) { return *this = *this - y; }
  FieldElement& operator*=(const FieldElement& y) { return *this = *this * y; }
  FieldElement& operator/=(const FieldElement& y) { return *this = *this / y; }

  friend bool operator==(const FieldElement& x, const FieldElement& y) {
    if (x.tag_ == Tag::Approx || y.tag_ == Tag::Approx)
      return x.to_complex() == y.to_complex();
    auto [p, q] = align(x, y);
    return p.a_ == q.a_ && p.b_ == q.b_;
  }
  friend bool operator!=(const FieldElement& x, const FieldElement& y) {
    return !(x == y);
  }

  std::string str() const {
    switch (tag_) {
      case Tag::Rational: return a_.get_str();
      case Tag::Quadratic:
        return a_.get_str() + " + (" + b_.get_str() + ")*sqrt(" +
               std::to_string(d_) + ")";
      default:
        return std::to_string(z_.real()) + (z_.imag() < 0 ? "-" : "+") +
               std::to_string(std::abs(z_.imag())) + "i";
    }
  }

 private:
  // promote the pair to a common tag
  static std::pair<FieldElement, FieldElement> align(FieldElement x,
                                                     FieldElement y) {
    if (x.tag_ == y.tag_) {
      if (x.tag_ == Tag::Quadratic && x.d_ != y.d_) {
        if (x.b_ == 0) { x.tag_ = Tag::Rational; x.d_ = 0; }
        else if (y.b_ == 0) { y.tag_ = Tag::Rational; y.d_ = 0; }
        else throw FieldMismatch("mixed quadratic extensions");
        return align(x, y);
      }
      return {x, y};
    }
    auto lift = [](FieldElement e, const FieldElement& model) {
      if (model.tag_ == Tag::Approx) return FieldElement(e.to_complex());
      // model is Quadratic, e is Rational
      return quad(e.a_, Rat(0), model.d_);
    };
    if ((int)x.tag_ < (int)y.tag_) return {lift(x, y), y};
    return {x, lift(y, x)};
  }

  Tag tag_;
  Rat a_, b_;   // exact parts: a + b*sqrt(d)
  long d_ = 0;  // square-free, fixed per computation
  Cx z_{0.0, 0.0};
};

using FE = FieldElement;

inline Rat random_rat(Rng& rng, long bound) {
  return Rat((long)rng.int_in(-bound, bound));
}

}  // namespace cubicrank
