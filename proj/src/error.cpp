#include "m1n/error.hpp"

namespace m1n {

const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_dimension: return "invalid-dimension";
        case errc::invalid_label: return "invalid-label";
        case errc::dimension_mismatch: return "dimension-mismatch";
        case errc::bad_subset: return "bad-subset";
        case errc::bad_permutation: return "bad-permutation";
        case errc::not_zero_sum: return "not-zero-sum";
        case errc::degenerate_signature: return "degenerate-signature";
        case errc::zero_entry: return "zero-entry";
        case errc::drop_zeros_first: return "drop-zeros-first";
        case errc::not_primitive: return "not-primitive";
        case errc::unsupported_for_n2: return "unsupported-for-n2";
        case errc::not_symmetric: return "not-symmetric";
        case errc::out_of_range: return "out-of-range";
        case errc::bad_input: return "bad-input";
        case errc::internal: return "internal-inconsistency";
    }
    return "unknown";
}

} // namespace m1n
