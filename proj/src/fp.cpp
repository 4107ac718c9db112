#include "jointkit/fp.hpp"

namespace jointkit {

namespace {

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 q = 3; q * q <= n; q += 2) {
        if (n % q == 0) return false;
    }
    return true;
}

} // namespace

PrimeField::PrimeField(u64 p) : p_(p) {
    if (!is_prime(p)) throw NotPrime(p);
    if (p >= (u64{1} << 31)) throw BadParams("modulus too large (need p < 2^31)");
}

u64 PrimeField::inv(u64 a) const {
    if (a % p_ == 0) throw ZeroInverse();
    return pow(a % p_, p_ - 2);
}

u64 PrimeField::pow(u64 a, u64 e) const {
    a %= p_;
    u64 r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Fp field_inverse(const Fp& a) {
    if (a.is_zero()) throw ZeroInverse();
    PrimeField f(a.modulus());
    return Fp(f, f.inv(a.value()));
}

bool is_zero_vec(const Vec& v) {
    for (u64 x : v)
        if (x != 0) return false;
    return true;
}

} // namespace jointkit
