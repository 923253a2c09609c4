#include "m1n/rational.hpp"

#include "m1n/error.hpp"

#include <cctype>

namespace m1n {

std::string rat_str(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rat_pretty(const Rat& q) {
    if (rat_is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_parse(std::string_view s) {
    auto digits = [](std::string_view t) {
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    std::string_view num_body = num;
    if (!num_body.empty() && (num_body[0] == '-' || num_body[0] == '+')) num_body.remove_prefix(1);
    if (!digits(num_body) || !digits(den))
        fail(errc::bad_input, "malformed rational '" + std::string(s) + "' (expected p/q)");
    Rat q(std::string(num) + "/" + std::string(den));
    if (q.get_den() == 0) fail(errc::bad_input, "zero denominator in '" + std::string(s) + "'");
    q.canonicalize();
    return q;
}

} // namespace m1n
