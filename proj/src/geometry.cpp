#include "tridist/geometry.hpp"

#include "tridist/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numbers>
#include <vector>

namespace tridist {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMinAngle = 1e-9;      // rad; anything flatter is rejected
constexpr double kAngleSumTol = 1e-9;   // allowed deviation of alpha+beta+gamma from pi
constexpr double kMinAreaRatio = 1e-12; // area must be at least this times a^2

double clamped_acos(double x) { return std::acos(std::clamp(x, -1.0, 1.0)); }

Triangle finish(double a, double b, double c, double alpha, double beta, double gamma,
                double area) {
    if (area < kMinAreaRatio * a * a) {
        throw DegenerateTriangle("triangle is numerically flat (area " +
                                 std::to_string(area) + " for longest side " +
                                 std::to_string(a) + ")");
    }
    if (gamma < kMinAngle) {
        throw DegenerateTriangle("smallest angle is below 1e-9 rad");
    }
    Triangle t;
    t.a = a;
    t.b = b;
    t.c = c;
    t.alpha = alpha;
    t.beta = beta;
    t.gamma = gamma;
    t.u = a + b + c;
    t.area = area;
    t.h_a = 2.0 * area / a;
    t.h_b = 2.0 * area / b;
    t.h_c = 2.0 * area / c;
    return t;
}

} // namespace

Triangle triangle_from_sides(double s1, double s2, double s3) {
    std::array<double, 3> s{s1, s2, s3};
    std::sort(s.begin(), s.end(), std::greater<>());
    const double a = s[0], b = s[1], c = s[2];
    if (!(c > 0.0) || !std::isfinite(a)) {
        throw DegenerateTriangle("side lengths must be positive and finite");
    }
    if (!(b + c > a)) {
        throw DegenerateTriangle("triangle inequality fails: " + std::to_string(b) + " + " +
                                 std::to_string(c) + " <= " + std::to_string(a));
    }
    const double alpha = clamped_acos((b * b + c * c - a * a) / (2.0 * b * c));
    const double beta = clamped_acos((a * a + c * c - b * b) / (2.0 * a * c));
    const double gamma = kPi - alpha - beta;
    // Heron's formula, in the numerically stable sorted form.
    const double area =
        0.25 * std::sqrt(std::max(0.0, (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c))));
    return finish(a, b, c, alpha, beta, gamma, area);
}

Triangle triangle_from_angles(double a1, double a2, double a3, double longest_side) {
    std::array<double, 3> ang{a1, a2, a3};
    std::sort(ang.begin(), ang.end(), std::greater<>());
    if (!(ang[2] >= kMinAngle) || !std::isfinite(ang[0])) {
        throw InvalidAngles("all angles must be at least 1e-9 rad");
    }
    const double sum = ang[0] + ang[1] + ang[2];
    if (std::abs(sum - kPi) > kAngleSumTol) {
        throw InvalidAngles("angles must sum to pi (got " + std::to_string(sum) + ")");
    }
    const double alpha = ang[0];
    const double beta = ang[1];
    // Absorb the (accepted) rounding slack into the smallest angle so the sum
    // is exactly pi.
    const double gamma = kPi - alpha - beta;
    if (gamma < kMinAngle) {
        throw InvalidAngles("smallest angle is below 1e-9 rad after normalization");
    }
    const double a = longest_side;
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw DegenerateTriangle("longest side must be positive and finite");
    }
    const double b = a * std::sin(beta) / std::sin(alpha);
    const double c = a * std::sin(gamma) / std::sin(alpha);
    const double area = 0.5 * b * c * std::sin(alpha);
    return finish(a, b, c, alpha, beta, gamma, area);
}

CaseLabel classify(const Triangle& t) {
    if (t.alpha > kPi / 2.0) {
        return CaseLabel::Obtuse;
    }
    return t.h_c < t.c ? CaseLabel::AcuteLowAltitude : CaseLabel::AcuteHighAltitude;
}

PlacedTriangle place(const Triangle& t) {
    PlacedTriangle p;
    p.C = {0.0, 0.0};
    p.B = {t.a, 0.0};
    p.A = {t.b * std::cos(t.gamma), t.h_a};
    return p;
}

namespace {

std::vector<double> parse_number_list(const std::string& text, std::size_t expected,
                                      const std::string& what) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string tok =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        double value = 0.0;
        const char* first = tok.data();
        const char* last = tok.data() + tok.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last || tok.empty()) {
            throw ParseError("bad number '" + tok + "' in " + what);
        }
        out.push_back(value);
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    if (out.size() != expected) {
        throw ParseError(what + " needs " + std::to_string(expected) + " comma-separated values");
    }
    return out;
}

} // namespace

Triangle parse_triangle_spec(const std::string& spec) {
    constexpr const char* kAnglesPrefix = "angles:";
    constexpr const char* kSidesPrefix = "sides:";
    if (spec.rfind(kAnglesPrefix, 0) == 0) {
        const std::string body = spec.substr(std::string(kAnglesPrefix).size());
        const std::size_t at = body.find("@a=");
        if (at == std::string::npos) {
            throw ParseError("angles form must look like angles:<a>,<b>,<g>@a=<len>");
        }
        const auto degs = parse_number_list(body.substr(0, at), 3, "angle list");
        const auto side = parse_number_list(body.substr(at + 3), 1, "side length");
        const double to_rad = kPi / 180.0;
        return triangle_from_angles(degs[0] * to_rad, degs[1] * to_rad, degs[2] * to_rad, side[0]);
    }
    if (spec.rfind(kSidesPrefix, 0) == 0) {
        const auto s = parse_number_list(spec.substr(std::string(kSidesPrefix).size()), 3, "side list");
        return triangle_from_sides(s[0], s[1], s[2]);
    }
    throw ParseError("triangle spec must start with 'angles:' or 'sides:' (got '" + spec + "')");
}

} // namespace tridist
