#ifndef BCX_ORDERING_HPP
#define BCX_ORDERING_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "bcx/element_set.hpp"
#include "bcx/errors.hpp"

namespace bcx {

// A linear ordering of the ground set [n]. sequence[0] is the smallest
// element; position(e) is the rank of e (0-based).
class Ordering {
  public:
    Ordering() = default;
    explicit Ordering(std::vector<int> sequence) : seq_(std::move(sequence)) {
        int n = static_cast<int>(seq_.size());
        pos_.assign(n + 1, -1);
        for (int i = 0; i < n; ++i) {
            int e = seq_[i];
            if (e < 1 || e > n || pos_[e] != -1)
                throw invalid_input("ordering is not a permutation of 1.." + std::to_string(n));
            pos_[e] = i;
        }
    }

    static Ordering natural(int n) {
        std::vector<int> s(n);
        std::iota(s.begin(), s.end(), 1);
        return Ordering(std::move(s));
    }
    static Ordering reversed(int n) {
        std::vector<int> s(n);
        std::iota(s.rbegin(), s.rend(), 1);
        return Ordering(std::move(s));
    }

    int n() const { return static_cast<int>(seq_.size()); }
    const std::vector<int>& sequence() const { return seq_; }
    int position(int e) const { return pos_[e]; }
    bool precedes(int a, int b) const { return pos_[a] < pos_[b]; }

    // Smallest element of s; s must be nonempty.
    int min_of(const ElementSet& s) const {
        int best = 0, best_pos = n();
        for (int e : s.to_vector()) {
            if (pos_[e] < best_pos) {
                best_pos = pos_[e];
                best = e;
            }
        }
        if (best == 0) throw internal_error("min_of on empty set");
        return best;
    }

    friend bool operator==(const Ordering& a, const Ordering& b) { return a.seq_ == b.seq_; }

    std::string to_string() const {
        std::string s = "[";
        for (size_t i = 0; i < seq_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(seq_[i]);
        }
        return s + "]";
    }

  private:
    std::vector<int> seq_;
    std::vector<int> pos_;
};

}  // namespace bcx

#endif
