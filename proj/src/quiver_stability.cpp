#include "fusionstab/quiver_stability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fusionstab {

std::vector<std::pair<int, int>> TypeAQuiver::arrows() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(orientation.size());
    for (size_t e = 0; e < orientation.size(); ++e) {
        const int i = static_cast<int>(e) + 1;
        if (orientation[e] == Arrow::Right)
            out.emplace_back(i, i + 1);
        else
            out.emplace_back(i + 1, i);
    }
    return out;
}

std::vector<std::string> validate_type_a_quiver(const TypeAQuiver& q) {
    std::vector<std::string> report;
    if (q.n < 1) report.push_back("quiver needs at least one vertex");
    if (static_cast<int>(q.orientation.size()) != std::max(0, q.n - 1))
        report.push_back("expected " + std::to_string(std::max(0, q.n - 1)) +
                         " orientation entries, got " + std::to_string(q.orientation.size()));
    return report;
}

TypeAQuiver bipartite_a4() {
    return TypeAQuiver{4, {Arrow::Right, Arrow::Left, Arrow::Right}};
}

std::string IntervalModule::name() const {
    return "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

std::vector<IntervalModule> indecomposables(const TypeAQuiver& q) {
    std::vector<IntervalModule> out;
    for (int a = 1; a <= q.n; ++a)
        for (int b = a; b <= q.n; ++b) out.push_back({a, b});
    return out;
}

IVec dim_vector(const IntervalModule& m, const TypeAQuiver& q) {
    if (m.a < 1 || m.b > q.n || m.a > m.b)
        throw std::invalid_argument("dim_vector: interval " + m.name() + " out of range");
    IVec v = IVec::Zero(q.n);
    for (int i = m.a; i <= m.b; ++i) v[i - 1] = 1;
    return v;
}

std::vector<std::string> validate_stability_function(const StabilityFunction& zf) {
    std::vector<std::string> report;
    for (int v = 0; v < zf.z.size(); ++v) {
        const std::complex<double> w = zf.z[v];
        const bool ok = w.imag() > 0.0 || (w.imag() == 0.0 && w.real() < 0.0);
        if (!ok)
            report.push_back("Z(S" + std::to_string(v + 1) +
                             ") lies outside the upper half plane union the negative reals");
    }
    return report;
}

std::vector<std::vector<int>> submodule_supports(const IntervalModule& m, const TypeAQuiver& q) {
    if (m.a < 1 || m.b > q.n || m.a > m.b)
        throw std::invalid_argument("submodule_supports: interval out of range");
    const auto arrows = q.arrows();
    const int len = m.b - m.a + 1;
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
        bool closed = true;
        for (const auto& [src, dst] : arrows) {
            if (src < m.a || src > m.b || dst < m.a || dst > m.b) continue;
            if ((mask >> (src - m.a)) & 1u)
                if (!((mask >> (dst - m.a)) & 1u)) {
                    closed = false;
                    break;
                }
        }
        if (!closed) continue;
        std::vector<int> support;
        for (int i = 0; i < len; ++i)
            if ((mask >> i) & 1u) support.push_back(m.a + i);
        out.push_back(std::move(support));
    }
    return out;
}

namespace {

std::complex<double> charge_of(const StabilityFunction& zf, const IVec& k0_class) {
    std::complex<double> w = 0.0;
    for (int v = 0; v < k0_class.size(); ++v)
        w += static_cast<double>(k0_class[v]) * zf.z[v];
    return w;
}

double phase_of(std::complex<double> w) {
    // arg in (0, pi]; tiny imaginary parts from cancellation snap to the axis
    constexpr double kAxisTol = 1e-12;
    if (std::abs(w.imag()) <= kAxisTol * std::max(1.0, std::abs(w.real()))) {
        if (w.real() < 0.0) return 1.0;
        throw std::domain_error("phase: charge on the forbidden closed positive real axis");
    }
    return std::atan2(w.imag(), w.real()) / std::numbers::pi;
}

std::complex<double> support_charge(const StabilityFunction& zf, const std::vector<int>& support) {
    std::complex<double> w = 0.0;
    for (int v : support) w += zf.z[v - 1];
    return w;
}

// contiguous runs of a sorted vertex set, as intervals
std::vector<IntervalModule> runs_of(const std::vector<int>& support) {
    std::vector<IntervalModule> out;
    size_t i = 0;
    while (i < support.size()) {
        size_t j = i;
        while (j + 1 < support.size() && support[j + 1] == support[j] + 1) ++j;
        out.push_back({support[i], support[j]});
        i = j + 1;
    }
    return out;
}

// (phase, intervals) pieces of one interval, phases strictly decreasing
void hn_interval(const StabilityFunction& zf, const IntervalModule& m, const TypeAQuiver& q,
                 double tol, std::vector<std::pair<double, std::vector<IntervalModule>>>& out) {
    const auto supports = submodule_supports(m, q);
    double best_phase = 0.0;
    const std::vector<int>* best = nullptr;
    for (const auto& t : supports) {
        if (t.empty()) continue;
        const double p = phase_of(support_charge(zf, t));
        if (best == nullptr || p > best_phase + tol ||
            (p >= best_phase - tol &&
             (t.size() > best->size() || (t.size() == best->size() && t < *best)))) {
            if (best == nullptr || p > best_phase) best_phase = p;
            best = &t;
        }
    }
    const size_t full = static_cast<size_t>(m.b - m.a + 1);
    if (best->size() == full) {
        out.emplace_back(best_phase, std::vector<IntervalModule>{m});
        return;
    }
    out.emplace_back(best_phase, runs_of(*best));
    std::vector<int> complement;
    for (int v = m.a; v <= m.b; ++v)
        if (std::find(best->begin(), best->end(), v) == best->end()) complement.push_back(v);
    for (const IntervalModule& piece : runs_of(complement)) hn_interval(zf, piece, q, tol, out);
}

}  // namespace

double phase(const StabilityFunction& zf, const IVec& k0_class) {
    if (k0_class.size() != zf.z.size())
        throw std::invalid_argument("phase: class length does not match charge");
    if (k0_class.isZero()) throw std::domain_error("phase: zero class has no phase");
    return phase_of(charge_of(zf, k0_class));
}

bool is_semistable(const StabilityFunction& zf, const IntervalModule& m, const TypeAQuiver& q,
                   double tol) {
    const double p = phase(zf, dim_vector(m, q));
    for (const auto& t : submodule_supports(m, q)) {
        if (t.empty() || t.size() == static_cast<size_t>(m.b - m.a + 1)) continue;
        if (phase_of(support_charge(zf, t)) > p + tol) return false;
    }
    return true;
}

bool is_stable(const StabilityFunction& zf, const IntervalModule& m, const TypeAQuiver& q,
               double tol) {
    const double p = phase(zf, dim_vector(m, q));
    for (const auto& t : submodule_supports(m, q)) {
        if (t.empty() || t.size() == static_cast<size_t>(m.b - m.a + 1)) continue;
        if (phase_of(support_charge(zf, t)) >= p - tol) return false;
    }
    return true;
}

std::vector<HNPiece> hn_filtration(const StabilityFunction& zf, const TypeARep& rep,
                                   const TypeAQuiver& q, double tol) {
    if (zf.z.size() != q.n)
        throw std::invalid_argument("hn_filtration: charge length does not match quiver");
    std::vector<std::pair<double, std::vector<IntervalModule>>> pieces;
    for (const IntervalModule& m : rep) {
        if (m.a < 1 || m.b > q.n || m.a > m.b)
            throw std::invalid_argument("hn_filtration: interval " + m.name() + " out of range");
        hn_interval(zf, m, q, tol, pieces);
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });

    std::vector<HNPiece> out;
    size_t i = 0;
    while (i < pieces.size()) {
        size_t j = i;
        std::vector<IntervalModule> group = pieces[i].second;
        while (j + 1 < pieces.size() && pieces[i].first - pieces[j + 1].first <= tol) {
            ++j;
            group.insert(group.end(), pieces[j].second.begin(), pieces[j].second.end());
        }
        std::sort(group.begin(), group.end());
        IVec cls = IVec::Zero(q.n);
        for (const IntervalModule& m : group) cls += dim_vector(m, q);
        const double p = phase(zf, cls);  // canonical representative of the merged phase
        out.push_back(HNPiece{p, std::move(group), std::move(cls)});
        i = j + 1;
    }
    return out;
}

StabilityFunction pentagon_charge() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const std::complex<double> w(std::cos(std::numbers::pi / 5.0),
                                 std::sin(std::numbers::pi / 5.0));
    StabilityFunction zf;
    zf.z.resize(4);
    zf.z[0] = -1.0;
    zf.z[1] = phi * w;
    zf.z[2] = -phi;
    zf.z[3] = w;
    return zf;
}

ObjectActionTable::ObjectActionTable(FusionRing ring_, int simple_, TypeAQuiver quiver_,
                                     std::map<IntervalModule, TypeARep> images_, IMat shadow_)
    : ring(std::move(ring_)),
      simple(simple_),
      quiver(std::move(quiver_)),
      images(std::move(images_)),
      shadow(std::move(shadow_)) {
    if (shadow.rows() != quiver.n || shadow.cols() != quiver.n)
        throw std::invalid_argument("ObjectActionTable: shadow matrix shape mismatch");
    for (const auto& [src, dst] : images) {
        IVec expected = shadow * dim_vector(src, quiver);
        IVec actual = IVec::Zero(quiver.n);
        for (const IntervalModule& m : dst) actual += dim_vector(m, quiver);
        if (actual != expected)
            throw std::invalid_argument("ObjectActionTable: image of " + src.name() +
                                        " does not match the K0 shadow");
    }
}

ObjectActionTable fib_a4_object_action() {
    const K0ModuleAction k0 = fib_on_a4_action();
    std::map<IntervalModule, TypeARep> images;
    const auto pair_up = [&images](IntervalModule shorter, IntervalModule longer) {
        images[shorter] = {longer};
        images[longer] = {std::min(shorter, longer), std::max(shorter, longer)};
    };
    pair_up({1, 1}, {3, 3});
    pair_up({4, 4}, {2, 2});
    pair_up({1, 2}, {2, 4});
    pair_up({2, 3}, {1, 4});
    pair_up({3, 4}, {1, 3});
    return ObjectActionTable(k0.ring, k0.ring.index_of("Pi"), bipartite_a4(), std::move(images),
                             k0.matrices[k0.ring.index_of("Pi")]);
}

std::vector<std::string> transport_counterexamples(const StabilityFunction& zf,
                                                   const ObjectActionTable& table, double tol) {
    std::vector<std::string> out;
    for (const auto& [src, dst] : table.images) {
        const bool src_ss = is_semistable(zf, src, table.quiver, tol);
        bool all_ss = true, any_ss = false;
        IVec image_class = IVec::Zero(table.quiver.n);
        for (const IntervalModule& m : dst) {
            const bool ss = is_semistable(zf, m, table.quiver, tol);
            all_ss = all_ss && ss;
            any_ss = any_ss || ss;
            image_class += dim_vector(m, table.quiver);
        }
        if (src_ss != all_ss || src_ss != any_ss) {
            out.push_back(src.name() + ": semistable=" + (src_ss ? "yes" : "no") +
                          " but image members semistable: all=" + (all_ss ? "yes" : "no") +
                          " any=" + (any_ss ? "yes" : "no"));
            continue;
        }
        const double src_phase = phase(zf, dim_vector(src, table.quiver));
        if (std::abs(phase(zf, image_class) - src_phase) > tol) {
            out.push_back(src.name() + ": image phase differs from source phase by " +
                          std::to_string(std::abs(phase(zf, image_class) - src_phase)));
            continue;
        }
        if (src_ss)
            for (const IntervalModule& m : dst)
                if (std::abs(phase(zf, dim_vector(m, table.quiver)) - src_phase) > tol)
                    out.push_back(src.name() + ": image member " + m.name() +
                                  " has a different phase");
    }
    return out;
}

std::vector<std::string> check_equivariant_semistability(const StabilityFunction& zf,
                                                         const ObjectActionTable& table,
                                                         double tol) {
    // equivariance for the table's K0 shadow, checked through the action
    // consisting of the unit and the acting simple
    const int n = table.quiver.n;
    std::vector<IMat> mats(table.ring.rank(), IMat::Identity(n, n));
    mats[table.simple] = table.shadow;
    for (int k = 0; k < table.ring.rank(); ++k)
        if (k != table.ring.unit() && k != table.simple)
            throw std::invalid_argument(
                "check_equivariant_semistability: table ring has untabulated simples");
    K0ModuleAction action{table.ring, K0Lattice{{}}, std::move(mats)};
    for (int v = 1; v <= n; ++v) action.lattice.labels.push_back("S" + std::to_string(v));
    CentralCharge z{action.lattice, zf.z};
    if (!is_equivariant(z, action, tol))
        throw std::invalid_argument(
            "check_equivariant_semistability: charge is not equivariant for the K0 shadow");
    return transport_counterexamples(zf, table, tol);
}

}  // namespace fusionstab
