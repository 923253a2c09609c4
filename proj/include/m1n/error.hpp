#pragma once

#include <stdexcept>
#include <string>

namespace m1n {

// Error categories surfaced by the library. The CLI maps them to one-line
// diagnostics; tests match on the code rather than the message text.
enum class errc {
    invalid_dimension,
    invalid_label,
    dimension_mismatch,
    bad_subset,
    bad_permutation,
    not_zero_sum,
    degenerate_signature,
    zero_entry,
    drop_zeros_first,
    not_primitive,
    unsupported_for_n2,
    not_symmetric,
    out_of_range,
    bad_input,
    internal,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace m1n
