#include "unionbound/scalar.hpp"

#include <cstdio>
#include <cstdlib>

namespace unionbound {

std::string scalar_to_string(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string scalar_to_string(const Rational& v) {
    return v.str();  // "num/den" (or plain integer)
}

bool scalar_from_string(const std::string& s, double& out) {
    if (s.empty()) return false;
    // accept "p/q" too, so rational fixtures parse as doubles
    if (const auto slash = s.find('/'); slash != std::string::npos) {
        char* end = nullptr;
        const double num = std::strtod(s.c_str(), &end);
        if (end != s.c_str() + slash) return false;
        const double den = std::strtod(s.c_str() + slash + 1, &end);
        if (*end != '\0' || den == 0.0) return false;
        out = num / den;
        return true;
    }
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

bool scalar_from_string(const std::string& s, Rational& out) {
    if (s.empty()) return false;
    try {
        out = Rational(s);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace unionbound
