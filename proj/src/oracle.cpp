#include "fusionstab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fusionstab {

namespace {

using Mask = std::uint32_t;

// A subspace of F2^m as a reduced row echelon basis of bitmask rows.
struct Subspace {
    std::vector<Mask> rows;   // pivots strictly increasing
    std::vector<int> pivots;

    int rank() const { return static_cast<int>(rows.size()); }
};

Mask reduce(Mask w, const Subspace& s) {
    for (size_t i = 0; i < s.rows.size(); ++i)
        if ((w >> s.pivots[i]) & 1u) w ^= s.rows[i];
    return w;
}

bool contains(const Subspace& s, Mask w) { return reduce(w, s) == 0; }

// All subspaces of F2^m, enumerated as reduced echelon bases: choose the
// pivot columns, then fill the free entries (non-pivot columns to the right
// of each pivot).
void enumerate_subspaces(int m, std::vector<Subspace>& out) {
    out.clear();
    out.push_back(Subspace{});  // the zero subspace
    for (Mask pivot_set = 1; pivot_set < (1u << m); ++pivot_set) {
        std::vector<int> pivots;
        for (int c = 0; c < m; ++c)
            if ((pivot_set >> c) & 1u) pivots.push_back(c);
        const int rk = static_cast<int>(pivots.size());

        std::vector<std::vector<int>> free_cols(rk);
        int total_free = 0;
        for (int i = 0; i < rk; ++i) {
            for (int c = pivots[i] + 1; c < m; ++c)
                if (!((pivot_set >> c) & 1u)) free_cols[i].push_back(c);
            total_free += static_cast<int>(free_cols[i].size());
        }
        for (Mask fill = 0; fill < (1u << total_free); ++fill) {
            Subspace s;
            s.pivots = pivots;
            s.rows.resize(rk);
            int bit = 0;
            for (int i = 0; i < rk; ++i) {
                Mask row = Mask(1) << pivots[i];
                for (int c : free_cols[i]) {
                    if ((fill >> bit) & 1u) row |= Mask(1) << c;
                    ++bit;
                }
                s.rows[i] = row;
            }
            out.push_back(std::move(s));
        }
    }
}

Mask apply_map(const IMat& m01, Mask v) {
    Mask w = 0;
    for (int t = 0; t < m01.rows(); ++t) {
        int parity = 0;
        for (int s = 0; s < m01.cols(); ++s)
            if ((v >> s) & 1u) parity ^= static_cast<int>(m01(t, s) & 1);
        if (parity) w |= Mask(1) << t;
    }
    return w;
}

double local_phase(std::complex<double> w) {
    constexpr double kAxisTol = 1e-12;
    if (std::abs(w.imag()) <= kAxisTol * std::max(1.0, std::abs(w.real()))) {
        if (w.real() < 0.0) return 1.0;
        throw std::domain_error("oracle: charge on the forbidden closed positive real axis");
    }
    return std::atan2(w.imag(), w.real()) / std::numbers::pi;
}

struct OracleContext {
    const TypeAQuiver& quiver;
    const StabilityFunction& zf;
    double tol;
    std::vector<std::pair<int, int>> arrows;  // (src, dst), 1-based
};

double class_phase(const OracleContext& ctx, const IVec& cls) {
    std::complex<double> w = 0.0;
    for (int v = 0; v < cls.size(); ++v) w += static_cast<double>(cls[v]) * ctx.zf.z[v];
    return local_phase(w);
}

// Enumerates the subrepresentations of `rep` (subspace tuples compatible
// with every arrow map) and calls visit(tuple, class).
template <typename Visit>
void for_each_subrep(const OracleContext& ctx, const ExplicitRepF2& rep, Visit&& visit) {
    const int n = ctx.quiver.n;
    std::vector<std::vector<Subspace>> choices(n);
    for (int v = 0; v < n; ++v) enumerate_subspaces(rep.dims[v], choices[v]);

    std::vector<const Subspace*> current(n, nullptr);
    std::vector<size_t> idx(n, 0);
    int v = 0;
    while (v >= 0) {
        if (v == n) {
            bool ok = true;
            for (size_t e = 0; e < ctx.arrows.size() && ok; ++e) {
                const auto [src, dst] = ctx.arrows[e];
                const Subspace& u = *current[src - 1];
                for (Mask row : u.rows)
                    if (!contains(*current[dst - 1], apply_map(rep.edge_maps[e], row))) {
                        ok = false;
                        break;
                    }
            }
            if (ok) {
                IVec cls(n);
                for (int i = 0; i < n; ++i) cls[i] = current[i]->rank();
                visit(current, cls);
            }
            --v;
            continue;
        }
        if (idx[v] < choices[v].size()) {
            current[v] = &choices[v][idx[v]];
            ++idx[v];
            ++v;
        } else {
            idx[v] = 0;
            --v;
        }
    }
}

// Quotient of rep by the subrepresentation `sub`: coordinates are read off
// the non-pivot columns of each vertex subspace.
ExplicitRepF2 quotient_rep(const OracleContext& ctx, const ExplicitRepF2& rep,
                           const std::vector<const Subspace*>& sub) {
    const int n = ctx.quiver.n;
    ExplicitRepF2 q;
    q.dims.resize(n);
    std::vector<std::vector<int>> coords(n);  // non-pivot columns per vertex
    for (int v = 0; v < n; ++v) {
        for (int c = 0; c < rep.dims[v]; ++c)
            if (std::find(sub[v]->pivots.begin(), sub[v]->pivots.end(), c) ==
                sub[v]->pivots.end())
                coords[v].push_back(c);
        q.dims[v] = static_cast<int>(coords[v].size());
    }
    q.edge_maps.resize(ctx.arrows.size());
    for (size_t e = 0; e < ctx.arrows.size(); ++e) {
        const auto [src, dst] = ctx.arrows[e];
        IMat m = IMat::Zero(q.dims[dst - 1], q.dims[src - 1]);
        for (int j = 0; j < q.dims[src - 1]; ++j) {
            const Mask image = reduce(apply_map(rep.edge_maps[e], Mask(1) << coords[src - 1][j]),
                                      *sub[dst - 1]);
            for (int i = 0; i < q.dims[dst - 1]; ++i)
                if ((image >> coords[dst - 1][i]) & 1u) m(i, j) = 1;
        }
        q.edge_maps[e] = std::move(m);
    }
    return q;
}

void hn_recurse(const OracleContext& ctx, const ExplicitRepF2& rep,
                std::vector<OraclePiece>& out) {
    const int n = ctx.quiver.n;
    IVec total = IVec::Zero(n);
    for (int v = 0; v < n; ++v) total[v] += rep.dims[v];
    if (total.isZero()) return;

    double best_phase = 0.0;
    Int best_size = -1;
    IVec best_class;
    std::vector<std::vector<Mask>> best_rows;
    std::vector<std::vector<int>> best_pivots;
    for_each_subrep(ctx, rep, [&](const std::vector<const Subspace*>& tuple, const IVec& cls) {
        if (cls.isZero()) return;
        const double p = class_phase(ctx, cls);
        const Int size = cls.sum();
        if (best_size < 0 || p > best_phase + ctx.tol ||
            (p >= best_phase - ctx.tol && size > best_size)) {
            if (best_size < 0 || p > best_phase) best_phase = p;
            best_size = size;
            best_class = cls;
            best_rows.assign(n, {});
            best_pivots.assign(n, {});
            for (int v = 0; v < n; ++v) {
                best_rows[v] = tuple[v]->rows;
                best_pivots[v] = tuple[v]->pivots;
            }
        }
    });

    out.push_back(OraclePiece{best_phase, best_class});
    if (best_class == total) return;

    std::vector<Subspace> sub_storage(n);
    std::vector<const Subspace*> sub(n);
    for (int v = 0; v < n; ++v) {
        sub_storage[v].rows = best_rows[v];
        sub_storage[v].pivots = best_pivots[v];
        sub[v] = &sub_storage[v];
    }
    hn_recurse(ctx, quotient_rep(ctx, rep, sub), out);
}

}  // namespace

ExplicitRepF2 assemble_rep_f2(const TypeARep& rep, const TypeAQuiver& q) {
    const int n = q.n;
    ExplicitRepF2 out;
    out.dims.assign(n, 0);
    // block index of each interval at each vertex it covers
    std::vector<std::vector<int>> block(rep.size(), std::vector<int>(n, -1));
    for (size_t i = 0; i < rep.size(); ++i) {
        if (rep[i].a < 1 || rep[i].b > n || rep[i].a > rep[i].b)
            throw std::invalid_argument("assemble_rep_f2: interval out of range");
        for (int v = rep[i].a; v <= rep[i].b; ++v) block[i][v - 1] = out.dims[v - 1]++;
    }
    const auto arrows = q.arrows();
    out.edge_maps.resize(arrows.size());
    for (size_t e = 0; e < arrows.size(); ++e) {
        const auto [src, dst] = arrows[e];
        IMat m = IMat::Zero(out.dims[dst - 1], out.dims[src - 1]);
        for (size_t i = 0; i < rep.size(); ++i)
            if (block[i][src - 1] >= 0 && block[i][dst - 1] >= 0)
                m(block[i][dst - 1], block[i][src - 1]) = 1;
        out.edge_maps[e] = std::move(m);
    }
    return out;
}

OracleResult brute_force_oracle(const ExplicitRepF2& rep, const TypeAQuiver& q,
                                const StabilityFunction& zf, double tol) {
    if (static_cast<int>(rep.dims.size()) != q.n)
        throw std::invalid_argument("brute_force_oracle: dimension vector length mismatch");
    if (zf.z.size() != q.n)
        throw std::invalid_argument("brute_force_oracle: charge length mismatch");
    int total = 0;
    for (int d : rep.dims) {
        if (d < 0) throw std::invalid_argument("brute_force_oracle: negative dimension");
        total += d;
    }
    if (total == 0) throw std::invalid_argument("brute_force_oracle: zero representation");
    if (total > 8) throw std::invalid_argument("brute_force_oracle: total dimension above cap 8");

    OracleContext ctx{q, zf, tol, q.arrows()};
    for (size_t e = 0; e < ctx.arrows.size(); ++e) {
        const auto [src, dst] = ctx.arrows[e];
        if (rep.edge_maps[e].rows() != rep.dims[dst - 1] ||
            rep.edge_maps[e].cols() != rep.dims[src - 1])
            throw std::invalid_argument("brute_force_oracle: edge map shape mismatch");
    }

    IVec total_class(q.n);
    for (int v = 0; v < q.n; ++v) total_class[v] = rep.dims[v];
    const double total_phase = class_phase(ctx, total_class);

    bool semistable = true;
    for_each_subrep(ctx, rep, [&](const std::vector<const Subspace*>&, const IVec& cls) {
        if (cls.isZero() || cls == total_class) return;
        if (class_phase(ctx, cls) > total_phase + tol) semistable = false;
    });

    OracleResult result;
    result.semistable = semistable;
    hn_recurse(ctx, rep, result.hn);
    return result;
}

}  // namespace fusionstab
