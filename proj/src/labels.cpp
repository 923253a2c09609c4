#include "m1n/labels.hpp"

#include <algorithm>

namespace m1n {

std::vector<int> subset_labels(Subset s) {
    std::vector<int> out;
    for (int i = 1; s != 0; ++i, s >>= 1)
        if (s & 1u) out.push_back(i);
    return out;
}

Subset subset_from_labels(const std::vector<int>& labels, int n) {
    Subset s = 0;
    for (int lab : labels) {
        if (lab < 1 || lab > n)
            fail(errc::bad_subset, "label " + std::to_string(lab) + " outside 1.." + std::to_string(n));
        if (subset_contains(s, lab))
            fail(errc::bad_subset, "duplicate label " + std::to_string(lab));
        s |= singleton(lab);
    }
    return s;
}

std::string subset_str(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int lab : subset_labels(s)) {
        if (!first) out += ",";
        out += std::to_string(lab);
        first = false;
    }
    out += "}";
    return out;
}

} // namespace m1n
