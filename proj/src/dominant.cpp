#include "splinefit/dominant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "splinefit/errors.hpp"

namespace splinefit {

namespace {

double planar_angle_or_zero(const Point& prev, const Point& cur, const Point& next) {
    if ((prev - cur).squaredNorm() == 0.0 || (next - cur).squaredNorm() == 0.0) return 0.0;
    return turn_angle(prev, cur, next);
}

Point plane_point(const Point& p, const PlaneAxes& axes) {
    Point out(2);
    out << p[static_cast<Eigen::Index>(axes.independent)], p[static_cast<Eigen::Index>(axes.dependent)];
    return out;
}

void check_selection(const PointChain& chain, std::span<const std::size_t> indices) {
    if (chain.size() < 2) throw InputError("chain needs at least 2 points");
    if (indices.size() < 2 || indices.front() != 0 || indices.back() != chain.size() - 1)
        throw InputError("dominant selection must contain both chain endpoints");
    for (std::size_t i = 1; i < indices.size(); ++i)
        if (indices[i] <= indices[i - 1]) throw InputError("dominant indices must be strictly increasing");
}

void recount(DominantSelection& sel) {
    sel.primary_count = static_cast<std::size_t>(std::count(sel.tiers.begin(), sel.tiers.end(), Tier::Primary));
    sel.support_count = static_cast<std::size_t>(std::count(sel.tiers.begin(), sel.tiers.end(), Tier::Support));
}

// Ranked (gap index, value) pairs; ties go to the lower gap.
std::vector<std::size_t> order_gaps(const std::vector<double>& errs, bool descending) {
    std::vector<std::size_t> order(errs.size());
    for (std::size_t g = 0; g < order.size(); ++g) order[g] = g;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return descending ? errs[a] > errs[b] : errs[a] < errs[b];
    });
    return order;
}

}  // namespace

double turn_angle(const Point& prev, const Point& cur, const Point& next) {
    const Point from = prev - cur;
    const Point to = next - cur;
    const double denom = from.norm() * to.norm();
    if (denom == 0.0) throw NumericError("turn angle undefined for a zero-length leg");
    const double c = std::clamp(from.dot(to) / denom, -1.0, 1.0);
    return std::numbers::pi - std::acos(c);
}

std::vector<TurnAngleEntry> turn_angles(const PointChain& chain, std::size_t independent_axis) {
    std::vector<TurnAngleEntry> out;
    if (chain.size() < 3) return out;
    const bool planar = chain.dim() == 2;
    const auto axes = planar ? std::vector<PlaneAxes>{} : plane_axes(chain.dim(), independent_axis);
    for (std::size_t j = 1; j + 1 < chain.size(); ++j) {
        double angle = 0.0;
        if (planar) {
            angle = planar_angle_or_zero(chain[j - 1], chain[j], chain[j + 1]);
        } else {
            for (const auto& a : axes)
                angle += planar_angle_or_zero(plane_point(chain[j - 1], a), plane_point(chain[j], a),
                                              plane_point(chain[j + 1], a));
        }
        out.push_back({j, angle});
    }
    return out;
}

std::vector<TurnAngleEntry> rank_by_turn_angle(std::vector<TurnAngleEntry> entries) {
    std::sort(entries.begin(), entries.end(), [](const TurnAngleEntry& a, const TurnAngleEntry& b) {
        if (a.angle != b.angle) return a.angle > b.angle;
        return a.index < b.index;
    });
    return entries;
}

CurveMapping map_to_curve(const Point& pt, const Point& chord_start, const Point& chord_end,
                          const BezierSegment& piece) {
    const Point chord = chord_end - chord_start;
    const double len2 = chord.squaredNorm();
    if (len2 == 0.0) throw NumericError("coincident dominant points: chord has zero length");
    const double t = std::clamp((pt - chord_start).dot(chord) / len2, 0.0, 1.0);
    return {t, eval_bezier(piece, t)};
}

SquareError square_error(const PointChain& chain, std::span<const std::size_t> indices,
                         const PiecewiseBezier& fitted) {
    check_selection(chain, indices);
    if (fitted.size() != indices.size() - 1)
        throw InputError("fitted curve needs one segment per dominant gap: expected " +
                         std::to_string(indices.size() - 1) + ", got " + std::to_string(fitted.size()));
    SquareError err;
    err.gap_errors.assign(indices.size() - 1, 0.0);
    err.point_errors.assign(chain.size(), 0.0);
    for (std::size_t g = 0; g + 1 < indices.size(); ++g) {
        const auto i = indices[g];
        const auto j = indices[g + 1];
        for (std::size_t k = i + 1; k < j; ++k) {
            const auto m = map_to_curve(chain[k], chain[i], chain[j], fitted.segments[g]);
            const double e = (m.mapped - chain[k]).squaredNorm();
            err.point_errors[k] = e;
            err.gap_errors[g] += e;
        }
        err.total += err.gap_errors[g];
    }
    return err;
}

SquareError selection_error(const PointChain& chain, std::span<const std::size_t> indices,
                            const SubsetFitter& fitter) {
    check_selection(chain, indices);
    return square_error(chain, indices, fitter(chain.subchain({indices.begin(), indices.end()})));
}

std::pair<std::size_t, std::size_t> default_tier_counts(std::size_t m) {
    const std::size_t m1 = (m + 3) / 4;
    return {m1, std::min(2 * m1, m - std::min(m, m1))};
}

DominantSelection initial_guess(const PointChain& chain, std::size_t m, std::size_t m1, std::size_t m2,
                                std::size_t independent_axis) {
    const std::size_t n = chain.size();
    if (m < 2) throw InputError("need at least 2 dominant points, got " + std::to_string(m));
    if (m > n) throw InputError("cannot select " + std::to_string(m) + " dominant points from " + std::to_string(n));
    if (m1 + m2 > m) throw InputError("primary and support counts exceed the dominant point count");

    const auto ranked = rank_by_turn_angle(turn_angles(chain, independent_axis));
    std::vector<std::optional<Tier>> tier(n);
    std::size_t chosen = 2;
    tier[0] = Tier::Endpoint;
    tier[n - 1] = Tier::Endpoint;

    std::vector<std::size_t> primaries;
    std::size_t next_rank = 0;
    for (; next_rank < ranked.size() && primaries.size() < m1 && chosen < m; ++next_rank) {
        tier[ranked[next_rank].index] = Tier::Primary;
        primaries.push_back(ranked[next_rank].index);
        ++chosen;
    }

    std::size_t supports = 0;
    for (auto p : primaries) {
        for (auto q : {p - 1, p + 1}) {
            if (supports >= m2) break;
            if (tier[q] == Tier::Endpoint) {
                tier[q] = Tier::Support;
                ++supports;
            } else if (!tier[q] && chosen < m) {
                tier[q] = Tier::Support;
                ++supports;
                ++chosen;
            }
        }
    }

    for (; next_rank < ranked.size() && chosen < m; ++next_rank) {
        const auto idx = ranked[next_rank].index;
        if (tier[idx]) continue;
        tier[idx] = Tier::Secondary;
        ++chosen;
    }

    DominantSelection sel;
    for (std::size_t i = 0; i < n; ++i) {
        if (!tier[i]) continue;
        sel.indices.push_back(i);
        sel.tiers.push_back(*tier[i]);
    }
    recount(sel);
    return sel;
}

DominantSelection optimize(const PointChain& chain, const DominantSelection& guess, const SubsetFitter& fitter,
                           SearchTrace* trace) {
    DominantSelection sel = guess;
    if (sel.tiers.size() != sel.indices.size()) sel.tiers.assign(sel.indices.size(), Tier::Secondary);
    auto current = selection_error(chain, sel.indices, fitter);
    sel.error = current.total;
    SearchTrace local;
    local.errors.push_back(current.total);

    const std::size_t last = chain.size() - 1;
    bool improved = true;
    while (improved && sel.size() < chain.size()) {
        improved = false;
        for (auto g_add : order_gaps(current.gap_errors, true)) {
            std::vector<std::size_t> skipped;
            for (auto k = sel.indices[g_add] + 1; k < sel.indices[g_add + 1]; ++k) skipped.push_back(k);
            std::stable_sort(skipped.begin(), skipped.end(), [&](std::size_t a, std::size_t b) {
                return current.point_errors[a] > current.point_errors[b];
            });
            for (auto added : skipped) {
                std::vector<std::size_t> grown = sel.indices;
                grown.insert(std::upper_bound(grown.begin(), grown.end(), added), added);
                const auto grown_err = selection_error(chain, grown, fitter);

                for (auto g_drop : order_gaps(grown_err.gap_errors, false)) {
                    std::optional<std::size_t> best_drop;
                    std::optional<SquareError> best_err;
                    for (auto member : {grown[g_drop], grown[g_drop + 1]}) {
                        if (member == 0 || member == last || member == added) continue;
                        std::vector<std::size_t> trial;
                        trial.reserve(grown.size() - 1);
                        for (auto i : grown)
                            if (i != member) trial.push_back(i);
                        auto e = selection_error(chain, trial, fitter);
                        if (!best_err || e.total < best_err->total) {
                            best_err = std::move(e);
                            best_drop = member;
                        }
                    }
                    if (!best_err || !(best_err->total < current.total)) continue;

                    DominantSelection next;
                    for (std::size_t i = 0; i < grown.size(); ++i) {
                        if (grown[i] == *best_drop) continue;
                        next.indices.push_back(grown[i]);
                        if (grown[i] == added) {
                            next.tiers.push_back(Tier::Secondary);
                        } else {
                            const auto pos = std::lower_bound(sel.indices.begin(), sel.indices.end(), grown[i]) -
                                             sel.indices.begin();
                            next.tiers.push_back(sel.tiers[static_cast<std::size_t>(pos)]);
                        }
                    }
                    recount(next);
                    current = std::move(*best_err);
                    next.error = current.total;
                    sel = std::move(next);
                    local.errors.push_back(current.total);
                    ++local.iterations;
                    improved = true;
                    break;
                }
                if (improved) break;
            }
            if (improved) break;
        }
    }
    if (trace) *trace = std::move(local);
    return sel;
}

}  // namespace splinefit
