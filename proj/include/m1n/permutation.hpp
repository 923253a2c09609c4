#pragma once

#include "m1n/labels.hpp"

#include <vector>

namespace m1n {

// A bijection of {1..n}, stored as the image array img[i-1] = p(i).
class Permutation {
  public:
    // Validates that the image array is a permutation of 1..n.
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n);
    // Transposition (a b) on {1..n}.
    static Permutation transposition(int n, int a, int b);

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int label) const;
    const std::vector<int>& image() const { return img_; }

    bool is_identity() const;
    Permutation inverse() const;
    // (p * q)(i) = p(q(i))
    Permutation operator*(const Permutation& q) const;
    bool operator==(const Permutation&) const = default;

    Subset apply(Subset s) const;

    // Values move with their position's label: result[p(i)-1] = v[i-1].
    template <typename T>
    std::vector<T> apply(const std::vector<T>& v) const {
        if (static_cast<int>(v.size()) != n())
            fail(errc::dimension_mismatch, "permutation size does not match tuple length");
        std::vector<T> out(v.size());
        for (int i = 1; i <= n(); ++i) out[static_cast<size_t>(img_[i - 1]) - 1] = v[i - 1];
        return out;
    }

  private:
    std::vector<int> img_;
};

} // namespace m1n
