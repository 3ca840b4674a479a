#ifndef BCX_ELEMENT_SET_HPP
#define BCX_ELEMENT_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "bcx/errors.hpp"

namespace bcx {

// Ground-set elements are 1-based labels. Sets live in a 64-bit mask, which
// caps ground sets at 64 elements; every paper-scale instance is far below.
class ElementSet {
  public:
    static constexpr int max_elements = 64;

    constexpr ElementSet() = default;
    constexpr explicit ElementSet(std::uint64_t mask) : mask_(mask) {}
    ElementSet(std::initializer_list<int> elems) {
        for (int e : elems) add(e);
    }

    static ElementSet full(int n) {
        check_label(n == 0 ? 1 : n);
        return n == 0 ? ElementSet() : ElementSet(~std::uint64_t(0) >> (64 - n));
    }
    static ElementSet single(int e) {
        check_label(e);
        return ElementSet(std::uint64_t(1) << (e - 1));
    }
    static ElementSet from_vector(const std::vector<int>& elems) {
        ElementSet s;
        for (int e : elems) s.add(e);
        return s;
    }

    void add(int e) {
        check_label(e);
        mask_ |= std::uint64_t(1) << (e - 1);
    }
    void remove(int e) {
        check_label(e);
        mask_ &= ~(std::uint64_t(1) << (e - 1));
    }
    bool contains(int e) const {
        return e >= 1 && e <= 64 && (mask_ >> (e - 1)) & 1;
    }

    int size() const { return std::popcount(mask_); }
    bool empty() const { return mask_ == 0; }
    std::uint64_t mask() const { return mask_; }

    bool subset_of(const ElementSet& b) const { return (mask_ & ~b.mask_) == 0; }
    bool intersects(const ElementSet& b) const { return (mask_ & b.mask_) != 0; }

    friend ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.mask_ | b.mask_); }
    friend ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.mask_ & b.mask_); }
    friend ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.mask_ & ~b.mask_); }
    ElementSet& operator|=(ElementSet b) { mask_ |= b.mask_; return *this; }
    ElementSet& operator&=(ElementSet b) { mask_ &= b.mask_; return *this; }
    ElementSet& operator-=(ElementSet b) { mask_ &= ~b.mask_; return *this; }

    friend bool operator==(ElementSet a, ElementSet b) { return a.mask_ == b.mask_; }
    friend bool operator!=(ElementSet a, ElementSet b) { return a.mask_ != b.mask_; }
    // Size-then-mask order; gives a canonical storage order for circuit families.
    friend bool operator<(ElementSet a, ElementSet b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.mask_ < b.mask_;
    }

    // Smallest label, 0 if empty.
    int min() const { return mask_ ? std::countr_zero(mask_) + 1 : 0; }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(size());
        for (std::uint64_t m = mask_; m;) {
            int b = std::countr_zero(m);
            v.push_back(b + 1);
            m &= m - 1;
        }
        return v;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int e : to_vector()) {
            if (!first) s += ",";
            s += std::to_string(e);
            first = false;
        }
        return s + "}";
    }

  private:
    static void check_label(int e) {
        if (e < 1 || e > max_elements)
            throw invalid_input("element label " + std::to_string(e) + " outside 1.." +
                                std::to_string(max_elements));
    }

    std::uint64_t mask_ = 0;
};

}  // namespace bcx

#endif
