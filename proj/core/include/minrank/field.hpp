#pragma once

#include <cstdint>
#include <stdexcept>

namespace minrank {

/// Thrown when an operation mixes elements of different fields or divides by zero.
class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A prime finite field F_q, 2 <= q <= 8192. Element values are canonical
/// representatives in [0, q). The object is a plain value; two Field objects
/// compare equal iff they have the same order.
class Field {
public:
    explicit Field(std::uint32_t order);

    std::uint32_t order() const noexcept { return q_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        std::uint32_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : q_ - a; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg(b)); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % q_);
    }
    /// Multiplicative inverse by extended Euclid. Throws FieldError on zero.
    std::uint32_t inv(std::uint32_t a) const;
    /// a^e by square-and-multiply; inv_pow(a) = a^(q-2) is the cross-check route for inv.
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;

    friend bool operator==(const Field& lhs, const Field& rhs) noexcept { return lhs.q_ == rhs.q_; }
    friend bool operator!=(const Field& lhs, const Field& rhs) noexcept { return lhs.q_ != rhs.q_; }

    static bool is_prime(std::uint32_t n) noexcept;

private:
    std::uint32_t q_;
};

/// An element value tagged with its field order. The arithmetic operators
/// check that both operands live in the same field.
struct FieldElem {
    std::uint32_t value;
    std::uint32_t field_order;

    FieldElem(std::uint32_t v, const Field& f) : value(v), field_order(f.order()) {
        if (v >= field_order) throw FieldError("element value out of range for field");
    }

    friend FieldElem operator+(FieldElem a, FieldElem b) {
        return FieldElem(same_field(a, b).add(a.value, b.value), Field(a.field_order));
    }
    friend FieldElem operator-(FieldElem a, FieldElem b) {
        return FieldElem(same_field(a, b).sub(a.value, b.value), Field(a.field_order));
    }
    friend FieldElem operator*(FieldElem a, FieldElem b) {
        return FieldElem(same_field(a, b).mul(a.value, b.value), Field(a.field_order));
    }
    friend FieldElem operator-(FieldElem a) {
        Field f(a.field_order);
        return FieldElem(f.neg(a.value), f);
    }
    friend bool operator==(FieldElem a, FieldElem b) {
        return a.field_order == b.field_order && a.value == b.value;
    }

    FieldElem inverse() const {
        Field f(field_order);
        return FieldElem(f.inv(value), f);
    }

private:
    static Field same_field(FieldElem a, FieldElem b) {
        if (a.field_order != b.field_order) throw FieldError("field mismatch");
        return Field(a.field_order);
    }
};

}  // namespace minrank
