#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "expdeg/errors.hpp"

namespace expdeg {

// Exact rational number, normalized with positive denominator. Fiber
// coordinates on inserted components are stored as these; the stabilizer
// computation only needs equality, negation and ordering, all exact.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
        if (den_ == 0) throw InputError("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    Rational operator-() const { return Rational(-num_, den_); }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "p", "-p" or "p/q".
    static Rational parse(const std::string& text);

private:
    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace expdeg
