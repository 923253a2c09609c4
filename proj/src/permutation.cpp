#include "m1n/permutation.hpp"

#include <algorithm>

namespace m1n {

Permutation::Permutation(std::vector<int> image) : img_(std::move(image)) {
    if (img_.empty() || img_.size() > kMaxLabels)
        fail(errc::bad_permutation, "image array size must be in 1.." + std::to_string(kMaxLabels));
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 1 || v > n() || seen[static_cast<size_t>(v) - 1])
            fail(errc::bad_permutation, "image array is not a permutation of 1.." + std::to_string(n()));
        seen[static_cast<size_t>(v) - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
    return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int a, int b) {
    auto p = identity(n);
    if (a < 1 || a > n || b < 1 || b > n) fail(errc::invalid_label, "transposition labels outside 1..n");
    std::swap(p.img_[static_cast<size_t>(a) - 1], p.img_[static_cast<size_t>(b) - 1]);
    return p;
}

int Permutation::operator()(int label) const {
    if (label < 1 || label > n()) fail(errc::invalid_label, "label outside 1..n");
    return img_[static_cast<size_t>(label) - 1];
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if (img_[static_cast<size_t>(i) - 1] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> img(img_.size());
    for (int i = 1; i <= n(); ++i) img[static_cast<size_t>(img_[static_cast<size_t>(i) - 1]) - 1] = i;
    return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& q) const {
    if (n() != q.n()) fail(errc::dimension_mismatch, "composing permutations of different sizes");
    std::vector<int> img(img_.size());
    for (int i = 1; i <= n(); ++i) img[static_cast<size_t>(i) - 1] = (*this)(q(i));
    return Permutation(std::move(img));
}

Subset Permutation::apply(Subset s) const {
    Subset out = 0;
    for (int lab : subset_labels(s)) out |= singleton((*this)(lab));
    return out;
}

} // namespace m1n
