#include "minrank/field.hpp"

#include <string>

namespace minrank {

bool Field::is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field::Field(std::uint32_t order) : q_(order) {
    if (order < 2 || order > 8192)
        throw FieldError("field order " + std::to_string(order) + " out of supported range [2, 8192]");
    if (!is_prime(order))
        throw FieldError("field order " + std::to_string(order) + " is not prime");
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw FieldError("division by zero in F_" + std::to_string(q_));
    // extended Euclid on (a, q)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = q_, new_r = a;
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::int64_t tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += q_;
    return static_cast<std::uint32_t>(t);
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const noexcept {
    std::uint64_t base = a % q_;
    std::uint64_t acc = 1;
    while (e > 0) {
        if (e & 1) acc = (acc * base) % q_;
        base = (base * base) % q_;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

}  // namespace minrank
