#pragma once

#include <cstdint>
#include <vector>

#include "jointkit/errors.hpp"

namespace jointkit {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Prime field F_p with a runtime modulus. Construction runs a deterministic
/// primality check (trial division; moduli stay desk-sized). All element
/// operations work on reduced raw values in [0, p).
class PrimeField {
public:
    explicit PrimeField(u64 p);

    u64 modulus() const { return p_; }

    u64 reduce(u64 x) const { return x % p_; }
    u64 reduce_signed(i64 x) const {
        i64 r = x % static_cast<i64>(p_);
        return static_cast<u64>(r < 0 ? r + static_cast<i64>(p_) : r);
    }

    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
    u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
    u64 mul(u64 a, u64 b) const { return (a * b) % p_; }
    u64 inv(u64 a) const;
    u64 pow(u64 a, u64 e) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

private:
    u64 p_;
};

/// One field element together with its modulus. Mixing moduli throws.
class Fp {
public:
    Fp(const PrimeField& field, u64 value) : p_(field.modulus()), v_(value % p_) {}

    u64 value() const { return v_; }
    u64 modulus() const { return p_; }
    PrimeField field() const { return PrimeField(p_); }

    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        a.check(b);
        u64 s = a.v_ + b.v_;
        return Fp(a.p_, s >= a.p_ ? s - a.p_ : s);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        a.check(b);
        return Fp(a.p_, a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        a.check(b);
        return Fp(a.p_, (a.v_ * b.v_) % a.p_);
    }
    Fp operator-() const { return Fp(p_, v_ == 0 ? 0 : p_ - v_); }

    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

private:
    Fp(u64 p, u64 v) : p_(p), v_(v) {}
    void check(const Fp& o) const {
        if (p_ != o.p_) throw ModulusMismatch();
    }

    u64 p_;
    u64 v_;
};

/// a^{-1} in F_p, as an element-level operation.
Fp field_inverse(const Fp& a);

/// Coordinate vectors are raw reduced values; the owning object carries the field.
using Vec = std::vector<u64>;

bool is_zero_vec(const Vec& v);

} // namespace jointkit
