#pragma once

#include <compare>
#include <stdexcept>

namespace cryst {

// Integer extended by -infinity, the bottom element in crystal bookkeeping.
// -inf + n = -inf; adding two -inf is fine; anything else is plain int math.
class MInt {
public:
    constexpr MInt() : val_(0), ninf_(false) {}
    constexpr MInt(int v) : val_(v), ninf_(false) {}

    static constexpr MInt minus_inf() {
        MInt m;
        m.ninf_ = true;
        return m;
    }

    constexpr bool is_minus_inf() const { return ninf_; }

    constexpr int value() const {
        if (ninf_) throw std::logic_error("MInt: value() on -inf");
        return val_;
    }

    friend constexpr MInt operator+(MInt a, MInt b) {
        if (a.ninf_ || b.ninf_) return minus_inf();
        return MInt(a.val_ + b.val_);
    }
    friend constexpr MInt operator-(MInt a, int b) {
        if (a.ninf_) return minus_inf();
        return MInt(a.val_ - b);
    }
    friend constexpr bool operator==(MInt a, MInt b) {
        if (a.ninf_ || b.ninf_) return a.ninf_ == b.ninf_;
        return a.val_ == b.val_;
    }
    friend constexpr bool operator<(MInt a, MInt b) {
        if (a.ninf_) return !b.ninf_;
        if (b.ninf_) return false;
        return a.val_ < b.val_;
    }
    friend constexpr bool operator<=(MInt a, MInt b) { return a < b || a == b; }
    friend constexpr bool operator>(MInt a, MInt b) { return b < a; }
    friend constexpr bool operator>=(MInt a, MInt b) { return b <= a; }

    friend constexpr MInt max(MInt a, MInt b) { return a < b ? b : a; }

private:
    int val_;
    bool ninf_;
};

} // namespace cryst
