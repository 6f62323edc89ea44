#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace coringlab {

using Rational = boost::multiprecision::cpp_rational;

/// Thrown when fixture data or operation arguments are structurally invalid.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when an operation's mathematical precondition does not hold.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when an instance falls outside the decidable regime of a check.
struct UnsupportedInstance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The ground field: F_p for a prime p, or Q.
class FieldSpec {
public:
    enum class Kind { Prime, Rationals };

    static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }

    static FieldSpec prime(std::int64_t p) {
        if (p < 2 || p >= (std::int64_t(1) << 31) || !is_prime(p))
            throw InputError("field characteristic must be a prime < 2^31, got " + std::to_string(p));
        return FieldSpec(Kind::Prime, p);
    }

    Kind kind() const { return kind_; }
    std::int64_t p() const { return p_; }
    bool is_rationals() const { return kind_ == Kind::Rationals; }
    bool is_prime_field() const { return kind_ == Kind::Prime; }

    bool operator==(const FieldSpec& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string to_string() const {
        return is_rationals() ? "QQ" : "GF(" + std::to_string(p_) + ")";
    }

private:
    FieldSpec(Kind k, std::int64_t p) : kind_(k), p_(p) {}

    static bool is_prime(std::int64_t n) {
        if (n < 2) return false;
        for (std::int64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    Kind kind_;
    std::int64_t p_;
};

/// An element of the ground field. Prime-field values are reduced residues;
/// rationals are arbitrary-precision and always normalized.
class Scalar {
public:
    Scalar() : field_(FieldSpec::rationals()) {}

    static Scalar zero(const FieldSpec& f) { return Scalar(f); }

    static Scalar one(const FieldSpec& f) { return from_int(f, 1); }

    static Scalar from_int(const FieldSpec& f, std::int64_t n) {
        Scalar s(f);
        if (f.is_prime_field()) {
            s.res_ = n % f.p();
            if (s.res_ < 0) s.res_ += f.p();
        } else {
            s.rat_ = n;
        }
        return s;
    }

    static Scalar from_rational(const FieldSpec& f, const Rational& r) {
        if (!f.is_rationals()) throw InputError("rational literal in a prime field");
        Scalar s(f);
        s.rat_ = r;
        return s;
    }

    const FieldSpec& field() const { return field_; }
    bool is_zero() const { return field_.is_prime_field() ? res_ == 0 : rat_.is_zero(); }
    bool is_one() const { return *this == one(field_); }

    Scalar operator+(const Scalar& o) const {
        check(o);
        Scalar s(field_);
        if (field_.is_prime_field()) s.res_ = (res_ + o.res_) % field_.p();
        else s.rat_ = rat_ + o.rat_;
        return s;
    }

    Scalar operator-(const Scalar& o) const {
        check(o);
        Scalar s(field_);
        if (field_.is_prime_field()) s.res_ = ((res_ - o.res_) % field_.p() + field_.p()) % field_.p();
        else s.rat_ = rat_ - o.rat_;
        return s;
    }

    Scalar operator*(const Scalar& o) const {
        check(o);
        Scalar s(field_);
        if (field_.is_prime_field()) s.res_ = (res_ * o.res_) % field_.p();
        else s.rat_ = rat_ * o.rat_;
        return s;
    }

    Scalar operator-() const {
        Scalar s(field_);
        if (field_.is_prime_field()) s.res_ = res_ == 0 ? 0 : field_.p() - res_;
        else s.rat_ = -rat_;
        return s;
    }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("division by zero");
        Scalar s(field_);
        if (field_.is_prime_field()) s.res_ = mod_inverse(res_, field_.p());
        else s.rat_ = Rational(1) / rat_;
        return s;
    }

    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const {
        check(o);
        return field_.is_prime_field() ? res_ == o.res_ : rat_ == o.rat_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const {
        if (field_.is_prime_field()) return std::to_string(res_);
        if (denominator(rat_) == 1) return numerator(rat_).str();
        return numerator(rat_).str() + "/" + denominator(rat_).str();
    }

    /// Prime-field residue in [0, p).
    std::int64_t residue() const { return res_; }
    const Rational& rational() const { return rat_; }

private:
    explicit Scalar(const FieldSpec& f) : field_(f) {}

    void check(const Scalar& o) const {
        if (field_ != o.field_) throw InputError("mixed-field scalar arithmetic");
    }

    static std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
        std::int64_t t = 0, newt = 1, r = p, newr = a;
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt; newt = tmp;
            tmp = r - q * newr;
            r = newr; newr = tmp;
        }
        if (t < 0) t += p;
        return t;
    }

    FieldSpec field_;
    std::int64_t res_ = 0;
    Rational rat_;
};

} // namespace coringlab
