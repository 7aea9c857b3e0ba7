#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "rsc/core.hpp"

namespace rsc {

// Fixed scale: 1 coordinate unit = 40px, 1 time unit = 24px.  Colors hash the
// sensor id so reruns are byte-identical.

namespace detail {

inline std::string sensor_color(std::int64_t id) {
    const std::uint64_t hue = (static_cast<std::uint64_t>(id) * 2654435761ULL) % 360;
    return "hsl(" + std::to_string(hue) + ",65%,70%)";
}

inline std::string fmt_px(double v) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << v;
    return os.str();
}

} // namespace detail

/// Draws each scheduled sensor as a rectangle [l, r) x [t, t + d), UNUSED
/// sensors omitted, with a dashed line marking the given duration.
inline std::string render_svg(const Instance& inst, const Schedule& schedule, const Rational& duration) {
    validate_instance(inst);
    const double kx = 40.0, ky = 24.0;
    const std::int64_t x0 = inst.universe_left();
    const std::int64_t x1 = inst.universe_right();
    double top = duration.to_double();
    for (const auto& s : inst.sensors) {
        const auto& t = schedule.starts.at(s.id);
        if (t.has_value()) top = std::max(top, t->to_double() + static_cast<double>(s.duration));
    }
    const double width = static_cast<double>(x1 - x0) * kx + 20.0;
    const double height = top * ky + 20.0;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::fmt_px(width) << "\" height=\""
        << detail::fmt_px(height) << "\">\n";
    auto px = [&](double x) { return 10.0 + (x - static_cast<double>(x0)) * kx; };
    auto py = [&](double y) { return height - 10.0 - y * ky; }; // y axis points up

    for (const auto& s : inst.sensors) {
        const auto& t = schedule.starts.at(s.id);
        if (!t.has_value()) continue;
        const double y_low = t->to_double();
        const double y_high = y_low + static_cast<double>(s.duration);
        svg << "  <rect id=\"sensor-" << s.id << "\" x=\"" << detail::fmt_px(px(static_cast<double>(s.left)))
            << "\" y=\"" << detail::fmt_px(py(y_high)) << "\" width=\""
            << detail::fmt_px(static_cast<double>(s.right - s.left) * kx) << "\" height=\""
            << detail::fmt_px(static_cast<double>(s.duration) * ky) << "\" fill=\"" << detail::sensor_color(s.id)
            << "\" stroke=\"black\"/>\n";
    }
    svg << "  <line x1=\"" << detail::fmt_px(px(static_cast<double>(x0))) << "\" y1=\""
        << detail::fmt_px(py(duration.to_double())) << "\" x2=\"" << detail::fmt_px(px(static_cast<double>(x1)))
        << "\" y2=\"" << detail::fmt_px(py(duration.to_double()))
        << "\" stroke=\"red\" stroke-dasharray=\"6,3\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

/// Text rendering on the unit grid: one column per coordinate unit, one row
/// per time unit (top row = highest), sensors drawn by the letter
/// 'a' + id mod 26, '.' empty, with the duration line '=' appended.
inline std::string render_ascii(const Instance& inst, const Schedule& schedule, const Rational& duration) {
    validate_instance(inst);
    const std::int64_t x0 = inst.universe_left();
    const std::int64_t x1 = inst.universe_right();
    std::int64_t top = duration.ceil();
    for (const auto& s : inst.sensors) {
        const auto& t = schedule.starts.at(s.id);
        if (t.has_value()) top = std::max(top, (*t + Rational(s.duration)).ceil());
    }
    const auto cols = static_cast<std::size_t>(x1 - x0);
    std::vector<std::string> rows(static_cast<std::size_t>(top), std::string(cols, '.'));
    for (const auto& s : inst.sensors) {
        const auto& t = schedule.starts.at(s.id);
        if (!t.has_value()) continue;
        const std::int64_t y_low = t->floor();
        const std::int64_t y_high = std::min<std::int64_t>(top, (*t + Rational(s.duration)).ceil());
        const char ch = static_cast<char>('a' + (s.id % 26));
        for (std::int64_t y = y_low; y < y_high; ++y)
            for (std::int64_t x = s.left; x < s.right; ++x)
                rows[static_cast<std::size_t>(y)][static_cast<std::size_t>(x - x0)] = ch;
    }
    std::ostringstream out;
    for (std::size_t r = rows.size(); r-- > 0;) out << rows[r] << "\n";
    out << std::string(cols, '-') << "\n";
    out << "duration " << duration.to_string() << " (rows above the '-' line, bottom row is time 0)\n";
    return out.str();
}

} // namespace rsc
