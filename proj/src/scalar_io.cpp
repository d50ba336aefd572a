#include "ratcalc/scalar_io.hpp"

#include <cctype>

namespace ratcalc {

namespace {

[[noreturn]] void parse_fail(const std::string& text, size_t pos, const std::string& what) {
    fail(errc::parse_error,
         "bad rational \"" + text + "\": " + what + " at position " + std::to_string(pos));
}

size_t scan_digits(const std::string& text, size_t pos) {
    size_t end = pos;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos) parse_fail(text, pos, "expected a digit");
    return end;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    size_t num_end = scan_digits(text, pos);
    Integer num(text.substr(pos, num_end - pos));
    Integer den = 1;
    pos = num_end;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        size_t den_end = scan_digits(text, pos);
        den = Integer(text.substr(pos, den_end - pos));
        pos = den_end;
        if (den == 0) parse_fail(text, pos - 1, "zero denominator");
    }
    if (pos != text.size()) parse_fail(text, pos, "unexpected character");
    if (negative) num = -num;
    return Rational(std::move(num), std::move(den));
}

GaussianRational scalar_from_json(const nlohmann::json& j) {
    if (j.is_string()) return GaussianRational(parse_rational(j.get<std::string>()));
    if (j.is_object()) {
        if (j.size() != 2 || !j.contains("re") || !j.contains("im"))
            fail(errc::parse_error, "scalar object must have exactly the keys re and im");
        if (!j["re"].is_string() || !j["im"].is_string())
            fail(errc::parse_error, "re and im must be rational strings");
        return GaussianRational(parse_rational(j["re"].get<std::string>()),
                                parse_rational(j["im"].get<std::string>()));
    }
    if (j.is_number())
        fail(errc::parse_error, "scalars must be exact rational strings, not JSON numbers");
    fail(errc::parse_error, "scalar must be a rational string or a {re, im} object");
}

nlohmann::json scalar_to_json(const GaussianRational& v) {
    return nlohmann::json{{"re", v.re().to_string()}, {"im", v.im().to_string()}};
}

Polynomial poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) fail(errc::parse_error, "polynomial must be an array of scalars");
    std::vector<GaussianRational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& item : j) coeffs.push_back(scalar_from_json(item));
    return Polynomial(std::move(coeffs));
}

nlohmann::json poly_to_json(const Polynomial& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : p.coefficients()) out.push_back(scalar_to_json(c));
    return out;
}

}  // namespace ratcalc
