#include "planechroma/bounds.hpp"

#include <algorithm>
#include <sstream>

namespace planechroma {

namespace {

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string endpoint_text(const Scalar& v, const std::string& expr) {
    return expr.empty() ? to_decimal(v) : to_decimal(v) + " [" + expr + "]";
}

const char* kind_name(BoundKind k) { return k == BoundKind::UPPER ? "UPPER" : "LOWER"; }

}  // namespace

std::string rational_str(const Rational& r) {
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

std::string to_csv(const BoundTable& table) {
    std::ostringstream os;
    os << "d_lo,d_hi,lo_closed,hi_closed,kind,value_num,value_den,provenance\n";
    for (const auto& p : table.pieces()) {
        const auto& iv = p.interval;
        std::string prov = p.provenance;
        prov += "; lo=" + endpoint_text(iv.lo, iv.lo_expr);
        prov += "; hi=" + (iv.hi_infinite ? std::string("inf") : endpoint_text(iv.hi, iv.hi_expr));
        for (const auto& n : p.notes) prov += "; note: " + n;
        os << to_decimal(iv.lo) << ',' << (iv.hi_infinite ? std::string("inf") : to_decimal(iv.hi)) << ','
           << (iv.lo_closed ? "true" : "false") << ',' << (iv.hi_closed ? "true" : "false") << ',' << kind_name(p.kind)
           << ',' << boost::multiprecision::numerator(p.value).str() << ','
           << boost::multiprecision::denominator(p.value).str() << ',' << csv_quote(prov) << '\n';
    }
    return os.str();
}

std::string to_svg(const BoundTable& table) {
    // Step plot on d in [0, x_max], value axis [0, 1/2]; unbounded pieces are drawn up to x_max.
    double x_max = 2.5;
    for (const auto& p : table.pieces())
        if (!p.interval.hi_infinite) x_max = std::max(x_max, p.interval.hi.convert_to<double>() * 1.1);
    const double w = 800, h = 400, m = 40;
    auto sx = [&](double x) { return m + (w - 2 * m) * x / x_max; };
    auto sy = [&](double v) { return h - m - (h - 2 * m) * v / 0.5; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
    os << "<line x1=\"" << m << "\" y1=\"" << h - m << "\" x2=\"" << w - m << "\" y2=\"" << h - m
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << m << "\" y1=\"" << m << "\" x2=\"" << m << "\" y2=\"" << h - m << "\" stroke=\"black\"/>\n";
    for (const auto& p : table.pieces()) {
        const double lo = p.interval.lo.convert_to<double>();
        const double hi = p.interval.hi_infinite ? x_max : p.interval.hi.convert_to<double>();
        const double v = p.value.convert_to<double>();
        const char* colour = p.kind == BoundKind::UPPER ? "firebrick" : "steelblue";
        os << "<line x1=\"" << sx(lo) << "\" y1=\"" << sy(v) << "\" x2=\"" << sx(hi) << "\" y2=\"" << sy(v)
           << "\" stroke=\"" << colour << "\" stroke-width=\"2\"><title>" << kind_name(p.kind) << ' '
           << rational_str(p.value) << "</title></line>\n";
    }
    os << "<text x=\"" << w / 2 << "\" y=\"" << h - 8 << "\">d</text>\n";
    os << "<text x=\"4\" y=\"" << m - 10 << "\">p_d</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace planechroma
