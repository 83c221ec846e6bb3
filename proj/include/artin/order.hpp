#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>

namespace artin {

/// Value of the total-degree valuation: either a finite integer or +infinity
/// (the order of an exact zero). Infinity is absorbing under addition and
/// greater than every finite value.
class Order {
public:
    static Order finite(long v) { return Order(false, v); }
    static Order infinite() { return Order(true, 0); }

    bool is_infinite() const { return infinite_; }

    long value() const {
        if (infinite_) throw std::logic_error("Order: value() of +infinity");
        return value_;
    }

    /// min(order, cap); infinity collapses to the cap.
    long capped(long cap) const {
        return infinite_ ? cap : std::min(value_, cap);
    }

    Order operator+(const Order& o) const {
        if (infinite_ || o.infinite_) return infinite();
        return finite(value_ + o.value_);
    }

    Order operator+(long v) const {
        if (infinite_) return infinite();
        return finite(value_ + v);
    }

    friend bool operator==(const Order& a, const Order& b) {
        if (a.infinite_ != b.infinite_) return false;
        return a.infinite_ || a.value_ == b.value_;
    }

    friend bool operator!=(const Order& a, const Order& b) { return !(a == b); }

    friend bool operator<(const Order& a, const Order& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }

    friend bool operator<=(const Order& a, const Order& b) {
        return a < b || a == b;
    }
    friend bool operator>(const Order& a, const Order& b) { return b < a; }
    friend bool operator>=(const Order& a, const Order& b) { return b <= a; }

    friend bool operator>=(const Order& a, long v) {
        return a >= Order::finite(v);
    }

    std::string to_string() const {
        return infinite_ ? std::string("inf") : std::to_string(value_);
    }

private:
    Order(bool inf, long v) : infinite_(inf), value_(v) {}

    bool infinite_;
    long value_;
};

}  // namespace artin
