#ifndef RATCALC_ERRORS_HPP
#define RATCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ratcalc {

// Domain error categories surfaced through the CLI as structured codes.
enum class errc {
    division_by_zero,
    pole,
    invalid_parameters,
    n_below_range,
    formula_ii_inadmissible,
    roots_mismatch,
    parse_error,
    bad_input,
};

inline const char* errc_slug(errc c) {
    switch (c) {
        case errc::division_by_zero: return "division_by_zero";
        case errc::pole: return "pole";
        case errc::invalid_parameters: return "invalid_parameters";
        case errc::n_below_range: return "n_below_range";
        case errc::formula_ii_inadmissible: return "formula_ii_inadmissible";
        case errc::roots_mismatch: return "roots_mismatch";
        case errc::parse_error: return "parse_error";
        case errc::bad_input: return "bad_input";
    }
    return "unknown";
}

inline const char* errc_message(errc c) {
    switch (c) {
        case errc::division_by_zero: return "division by zero";
        case errc::pole: return "pole";
        case errc::invalid_parameters: return "invalid parameters";
        case errc::n_below_range: return "N below admissible range";
        case errc::formula_ii_inadmissible: return "formula II inadmissible";
        case errc::roots_mismatch: return "roots do not expand to q";
        case errc::parse_error: return "parse error";
        case errc::bad_input: return "bad input";
    }
    return "unknown error";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    explicit Error(errc code) : Error(code, errc_message(code)) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code) { throw Error(code); }
[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace ratcalc

#endif
