#include "planechroma/scalar.hpp"
#include "planechroma/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace planechroma {

namespace {

unsigned g_bits = 0;

unsigned digits10_for(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

struct PrecisionInit {
    PrecisionInit() { set_precision_bits(kDefaultPrecisionBits); }
};
PrecisionInit g_init;

}  // namespace

void set_precision_bits(unsigned bits) {
    if (bits < 100) fail(ErrorCode::InvalidInput, "precision below 100 bits");
    g_bits = bits;
    Scalar::default_precision(digits10_for(bits));
}

unsigned precision_bits() { return g_bits; }

void init_precision_from_env() {
    const char* env = std::getenv("PLANE_CHROMA_PRECISION");
    if (!env || !*env) {
        set_precision_bits(kDefaultPrecisionBits);
        return;
    }
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 100 || v > 100000)
        fail(ErrorCode::InvalidInput, std::string("bad PLANE_CHROMA_PRECISION: ") + env);
    set_precision_bits(static_cast<unsigned>(v));
}

Scalar to_scalar(const Rational& r) {
    return Scalar(boost::multiprecision::numerator(r)) / Scalar(boost::multiprecision::denominator(r));
}

Scalar sqrt_of(const Rational& r) { return boost::multiprecision::sqrt(to_scalar(r)); }

Scalar pi() { return boost::math::constants::pi<Scalar>(); }

std::string to_decimal(const Scalar& s) {
    std::ostringstream os;
    os.precision(digits10_for(g_bits));
    os << s;
    return os.str();
}

Scalar parse_scalar(const std::string& text) {
    Scalar v;
    try {
        v = Scalar(text);
    } catch (const std::runtime_error&) {
        fail(ErrorCode::InvalidInput, "not a number: " + text);
    }
    if (!boost::multiprecision::isfinite(v)) fail(ErrorCode::InvalidInput, "non-finite number: " + text);
    return v;
}

}  // namespace planechroma
