#include "functions.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "tolerances.hpp"

namespace hhc {

double ConcaveFunction::eval(const Point& x) const {
    double v = pieces.front().eval(x);
    for (std::size_t i = 1; i < pieces.size(); ++i) v = std::min(v, pieces[i].eval(x));
    return v;
}

ConcaveFunction make_affine(Point gradient, double offset) {
    if (gradient.empty()) throw InvalidArgumentError("affine: empty gradient");
    for (double g : gradient)
        if (!std::isfinite(g)) throw InvalidArgumentError("affine: non-finite gradient");
    if (!std::isfinite(offset)) throw InvalidArgumentError("affine: non-finite offset");
    return ConcaveFunction{{Affine{std::move(gradient), offset}}};
}

ConcaveFunction make_min_affine(std::vector<Affine> pieces) {
    if (pieces.empty()) throw InvalidArgumentError("min-affine: needs at least one piece");
    const std::size_t d = pieces.front().gradient.size();
    for (const auto& p : pieces) {
        if (p.gradient.size() != d)
            throw InvalidArgumentError("min-affine: inconsistent piece dimensions");
        for (double g : p.gradient)
            if (!std::isfinite(g)) throw InvalidArgumentError("min-affine: non-finite gradient");
        if (!std::isfinite(p.offset)) throw InvalidArgumentError("min-affine: non-finite offset");
    }
    return ConcaveFunction{std::move(pieces)};
}

double ConvexGauge::operator()(double s) const {
    switch (kind) {
        case Kind::power:
            if (alpha == 1.0) return s;
            if (alpha == 2.0) return s * s;
            return std::pow(s, alpha);
        case Kind::exp_minus_one:
            return std::expm1(s);
        case Kind::exp_square_minus_one:
            return std::expm1(s * s);
        case Kind::pwl: {
            if (s <= 0.0) return 0.0;
            std::size_t i = 1;
            while (i + 1 < knots.size() && knots[i].first < s) ++i;
            const auto& [ta, ya] = knots[i - 1];
            const auto& [tb, yb] = knots[i];
            double slope = (yb - ya) / (tb - ta);
            return ya + slope * (s - ta);  // extends past the last knot with its slope
        }
    }
    return 0.0;
}

std::vector<double> ConvexGauge::kinks() const {
    if (kind != Kind::pwl) return {};
    std::vector<double> ks;
    for (std::size_t i = 1; i + 1 < knots.size(); ++i) ks.push_back(knots[i].first);
    if (!knots.empty()) ks.push_back(knots.back().first);
    return ks;
}

ConvexGauge power_gauge(double alpha) {
    if (!(alpha >= 1.0)) throw InvalidArgumentError("power gauge: alpha must be >= 1");
    ConvexGauge g;
    g.kind = ConvexGauge::Kind::power;
    g.alpha = alpha;
    return g;
}

ConvexGauge exp_gauge() {
    ConvexGauge g;
    g.kind = ConvexGauge::Kind::exp_minus_one;
    return g;
}

ConvexGauge exp_square_gauge() {
    ConvexGauge g;
    g.kind = ConvexGauge::Kind::exp_square_minus_one;
    return g;
}

ConvexGauge pwl_gauge(std::vector<std::pair<double, double>> knots) {
    if (knots.size() < 2) throw InvalidArgumentError("pwl gauge: needs at least two knots");
    if (std::abs(knots.front().first) > 1e-12 || std::abs(knots.front().second) > 1e-12)
        throw InvalidArgumentError("pwl gauge: first knot must be (0, 0)");
    knots.front() = {0.0, 0.0};
    double prev_slope = -1e300;
    for (std::size_t i = 1; i < knots.size(); ++i) {
        double dt = knots[i].first - knots[i - 1].first;
        if (!(dt > 0.0))
            throw InvalidArgumentError("pwl gauge: abscissae must be strictly increasing");
        double slope = (knots[i].second - knots[i - 1].second) / dt;
        if (slope < prev_slope - tol::gauge_convexity)
            throw InvalidArgumentError("pwl gauge: slopes must be nondecreasing (convexity)");
        prev_slope = std::max(prev_slope, slope);
    }
    if ((knots[1].second - knots[0].second) / (knots[1].first - knots[0].first) < -1e-12)
        throw InvalidArgumentError("pwl gauge: negative values (first slope below zero)");
    ConvexGauge g;
    g.kind = ConvexGauge::Kind::pwl;
    g.knots = std::move(knots);
    return g;
}

}  // namespace hhc
