#include "fusionstab/finite_group.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace fusionstab {

namespace {

using cplx = std::complex<double>;

constexpr double kOrthTol = 1e-9;
constexpr double kIntegerTol = 1e-6;

}  // namespace

std::vector<std::string> validate_group(const FiniteGroup& g) {
    std::vector<std::string> report;
    const int n = g.order;
    if (n <= 0) {
        report.push_back("group order must be positive");
        return report;
    }
    if (static_cast<int>(g.table.size()) != n) {
        report.push_back("multiplication table has wrong number of rows");
        return report;
    }
    for (const auto& row : g.table)
        if (static_cast<int>(row.size()) != n) {
            report.push_back("multiplication table has a row of wrong length");
            return report;
        }
    for (const auto& row : g.table)
        for (int x : row)
            if (x < 0 || x >= n) {
                report.push_back("multiplication table entry out of range");
                return report;
            }
    if (g.identity < 0 || g.identity >= n) {
        report.push_back("identity index out of range");
        return report;
    }

    for (int i = 0; i < n; ++i) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int j = 0; j < n; ++j) {
            seen_row[g.table[i][j]] = true;
            seen_col[g.table[j][i]] = true;
        }
        if (std::find(seen_row.begin(), seen_row.end(), false) != seen_row.end())
            report.push_back("row " + std::to_string(i) + " is not a permutation");
        if (std::find(seen_col.begin(), seen_col.end(), false) != seen_col.end())
            report.push_back("column " + std::to_string(i) + " is not a permutation");
    }
    for (int i = 0; i < n; ++i) {
        if (g.table[g.identity][i] != i)
            report.push_back("identity fails on the left at " + std::to_string(i));
        if (g.table[i][g.identity] != i)
            report.push_back("identity fails on the right at " + std::to_string(i));
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]]) {
                    report.push_back("associativity fails at (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + ")");
                    return report;  // one witness is enough
                }
    return report;
}

int group_inverse(const FiniteGroup& g, int x) {
    for (int y = 0; y < g.order; ++y)
        if (g.table[x][y] == g.identity) return y;
    throw std::invalid_argument("group_inverse: no inverse found; invalid table");
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
    const int n = g.order;
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> classes;
    for (int x = 0; x < n; ++x) {
        if (cls[x] >= 0) continue;
        std::vector<int> orbit;
        const int id = static_cast<int>(classes.size());
        for (int h = 0; h < n; ++h) {
            const int y = g.table[g.table[h][x]][group_inverse(g, h)];
            if (cls[y] < 0) {
                cls[y] = id;
                orbit.push_back(y);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(std::move(orbit));
    }
    // ordered by minimal element, which is the order of first discovery
    return classes;
}

int CharacterTable::irrep_index(const std::string& name) const {
    for (int i = 0; i < num_irreps(); ++i)
        if (irreps[i] == name) return i;
    return -1;
}

Int CharacterTable::dim(int a) const {
    const double d = chars(a, 0).real();
    return static_cast<Int>(std::llround(d));
}

std::vector<std::string> validate_character_table(const CharacterTable& ct) {
    const int nc = ct.num_classes();
    const int ni = ct.num_irreps();
    if (nc == 0 || ni == 0)
        throw std::invalid_argument("character table: empty");
    if (ct.chars.rows() != ni || ct.chars.cols() != nc)
        throw std::invalid_argument("character table: chars matrix shape mismatch");
    if (!ct.class_of_element.empty()) {
        if (static_cast<Int>(ct.class_of_element.size()) != ct.group_order)
            throw std::invalid_argument("character table: class_of_element has wrong length");
        for (int c : ct.class_of_element)
            if (c < 0 || c >= nc)
                throw std::invalid_argument("character table: class_of_element entry out of range");
    }

    std::vector<std::string> report;
    if (ni != nc)
        report.push_back("number of irreducibles (" + std::to_string(ni) +
                         ") differs from number of classes (" + std::to_string(nc) + ")");

    Int size_sum = 0;
    for (Int s : ct.class_sizes) {
        if (s <= 0) report.push_back("non-positive class size");
        size_sum += s;
    }
    if (size_sum != ct.group_order)
        report.push_back("class sizes sum to " + std::to_string(size_sum) + ", expected |G| = " +
                         std::to_string(ct.group_order));

    Int dim_sq = 0;
    for (int a = 0; a < ni; ++a) {
        const cplx d = ct.chars(a, 0);
        if (std::abs(d.imag()) > kIntegerTol ||
            std::abs(d.real() - std::llround(d.real())) > kIntegerTol ||
            std::llround(d.real()) < 1)
            report.push_back("dimension of irrep " + std::to_string(a) +
                             " is not a positive integer");
        else
            dim_sq += ct.dim(a) * ct.dim(a);
    }
    if (dim_sq != ct.group_order)
        report.push_back("sum of squared dimensions is " + std::to_string(dim_sq) +
                         ", expected |G| = " + std::to_string(ct.group_order));

    for (int a = 0; a < ni; ++a)
        for (int b = a; b < ni; ++b) {
            cplx inner = 0.0;
            for (int c = 0; c < nc; ++c)
                inner += static_cast<double>(ct.class_sizes[c]) * ct.chars(a, c) *
                         std::conj(ct.chars(b, c));
            inner /= static_cast<double>(ct.group_order);
            const cplx expect = (a == b) ? cplx(1.0) : cplx(0.0);
            if (std::abs(inner - expect) > kOrthTol)
                report.push_back("row orthogonality fails for irreps (" + std::to_string(a) +
                                 "," + std::to_string(b) + ")");
        }
    return report;
}

IVec tensor_multiplicities(const CharacterTable& ct, int a, int b) {
    const int ni = ct.num_irreps();
    const int nc = ct.num_classes();
    if (a < 0 || a >= ni || b < 0 || b >= ni)
        throw std::out_of_range("tensor_multiplicities: irrep index out of range");
    IVec mult(ni);
    for (int c = 0; c < ni; ++c) {
        cplx inner = 0.0;
        for (int cl = 0; cl < nc; ++cl)
            inner += static_cast<double>(ct.class_sizes[cl]) * ct.chars(a, cl) * ct.chars(b, cl) *
                     std::conj(ct.chars(c, cl));
        inner /= static_cast<double>(ct.group_order);
        const Int rounded = std::llround(inner.real());
        if (std::abs(inner.imag()) > kIntegerTol ||
            std::abs(inner.real() - static_cast<double>(rounded)) > kIntegerTol || rounded < 0)
            throw std::runtime_error("tensor_multiplicities: non-integral multiplicity; invalid table");
        mult[c] = rounded;
    }
    return mult;
}

Quiver mckay_quiver(const CharacterTable& ct, const IVec& v_class) {
    const int ni = ct.num_irreps();
    if (v_class.size() != ni)
        throw std::invalid_argument("mckay_quiver: class vector length mismatch");
    if ((v_class.array() < 0).any())
        throw std::invalid_argument("mckay_quiver: class vector must be non-negative");
    IMat adj = IMat::Zero(ni, ni);
    for (int w = 0; w < ni; ++w) {
        if (v_class[w] == 0) continue;
        for (int i = 0; i < ni; ++i)
            adj.row(i) += v_class[w] * tensor_multiplicities(ct, w, i).transpose();
    }
    return Quiver{ct.irreps, std::move(adj)};
}

Quiver mckay_quiver(const CharacterTable& ct, int v_irrep) {
    IVec v = IVec::Zero(ct.num_irreps());
    v[v_irrep] = 1;
    return mckay_quiver(ct, v);
}

Quiver separated_mckay_quiver(const CharacterTable& ct, const IVec& v_class) {
    const Quiver folded = mckay_quiver(ct, v_class);
    const int ni = ct.num_irreps();
    std::vector<std::string> vertices;
    vertices.reserve(2 * ni);
    for (const std::string& s : ct.irreps) vertices.push_back("L_" + s);
    for (const std::string& s : ct.irreps) vertices.push_back("R_" + s);
    IMat adj = IMat::Zero(2 * ni, 2 * ni);
    adj.block(0, ni, ni, ni) = folded.adj;
    return Quiver{std::move(vertices), std::move(adj)};
}

Quiver separated_mckay_quiver(const CharacterTable& ct, int v_irrep) {
    IVec v = IVec::Zero(ct.num_irreps());
    v[v_irrep] = 1;
    return separated_mckay_quiver(ct, v);
}

namespace {

// ---- builtin groups ----------------------------------------------------

std::vector<int> perm_compose(const std::vector<int>& g, const std::vector<int>& h) {
    std::vector<int> r(g.size());
    for (size_t i = 0; i < g.size(); ++i) r[i] = g[h[i]];
    return r;
}

std::vector<int> cycle_type(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    std::vector<bool> seen(n, false);
    std::vector<int> lens;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = p[j];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return lens;
}

int perm_sign(const std::vector<int>& p) {
    int transpositions = 0;
    for (int len : cycle_type(p)) transpositions += len - 1;
    return transpositions % 2 == 0 ? 1 : -1;
}

int perm_fixed(const std::vector<int>& p) {
    int f = 0;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] == static_cast<int>(i)) ++f;
    return f;
}

// Elements ordered by (cycle type, one-line form), which puts the identity
// first and groups conjugacy classes in the conventional cycle-type order.
std::vector<std::vector<int>> symmetric_group_elements(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(perms.begin(), perms.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  const auto ta = cycle_type(a), tb = cycle_type(b);
                  if (ta != tb) return ta < tb;
                  return a < b;
              });
    return perms;
}

FiniteGroup group_from_elements(const std::vector<std::vector<int>>& elems) {
    const int n = static_cast<int>(elems.size());
    FiniteGroup g;
    g.order = n;
    g.table.assign(n, std::vector<int>(n, -1));
    auto index_of = [&](const std::vector<int>& p) {
        const auto it = std::find(elems.begin(), elems.end(), p);
        return static_cast<int>(it - elems.begin());
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g.table[a][b] = index_of(perm_compose(elems[a], elems[b]));
    g.identity = 0;
    return g;
}

FiniteGroup cyclic_group(int n) {
    FiniteGroup g;
    g.order = n;
    g.identity = 0;
    g.table.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
    return g;
}

// Elements 0..n-1 are r^k, elements n..2n-1 are s*r^k, with s*r*s = r^{-1}.
FiniteGroup dihedral_group(int n) {
    FiniteGroup g;
    g.order = 2 * n;
    g.identity = 0;
    g.table.assign(2 * n, std::vector<int>(2 * n));
    auto mod = [n](int x) { return ((x % n) + n) % n; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            g.table[a][b] = mod(a + b);                  // r^a r^b
            g.table[a][n + b] = n + mod(b - a);          // r^a s r^b = s r^{b-a}
            g.table[n + a][b] = n + mod(a + b);          // s r^a r^b
            g.table[n + a][n + b] = mod(b - a);          // s r^a s r^b = r^{b-a}
        }
    return g;
}

CharacterTable table_from_group(const FiniteGroup& g, std::vector<std::string> irreps,
                                const std::vector<std::function<cplx(int)>>& character_of) {
    const auto classes = conjugacy_classes(g);
    CharacterTable ct;
    ct.group_order = g.order;
    ct.irreps = std::move(irreps);
    ct.class_sizes.reserve(classes.size());
    ct.class_of_element.assign(g.order, -1);
    for (size_t c = 0; c < classes.size(); ++c) {
        ct.class_sizes.push_back(static_cast<Int>(classes[c].size()));
        for (int x : classes[c]) ct.class_of_element[x] = static_cast<int>(c);
    }
    ct.chars.resize(static_cast<int>(ct.irreps.size()), static_cast<int>(classes.size()));
    for (size_t a = 0; a < character_of.size(); ++a)
        for (size_t c = 0; c < classes.size(); ++c)
            ct.chars(static_cast<int>(a), static_cast<int>(c)) = character_of[a](classes[c][0]);
    return ct;
}

CharacterTable cyclic_table(int n) {
    const FiniteGroup g = cyclic_group(n);
    std::vector<std::string> names;
    std::vector<std::function<cplx(int)>> fns;
    for (int k = 0; k < n; ++k) {
        if (k == 0)
            names.push_back("triv");
        else if (n == 2)
            names.push_back("sign");
        else
            names.push_back("chi" + std::to_string(k));
        fns.push_back([n, k](int j) {
            const double t = 2.0 * std::numbers::pi * k * j / n;
            return cplx(std::cos(t), std::sin(t));
        });
    }
    return table_from_group(g, std::move(names), fns);
}

CharacterTable symmetric_table(int n) {
    const auto elems = symmetric_group_elements(n);
    const FiniteGroup g = group_from_elements(elems);
    auto sgn = [&elems](int x) { return cplx(perm_sign(elems[x])); };
    auto std_chi = [&elems](int x) { return cplx(perm_fixed(elems[x]) - 1); };
    if (n == 3) {
        std::vector<std::function<cplx(int)>> fns = {
            [](int) { return cplx(1.0); },
            sgn,
            std_chi,
        };
        return table_from_group(g, {"triv", "sign", "std"}, fns);
    }
    if (n == 4) {
        // the two-dimensional irrep factors through the quotient by the
        // Klein four-group; constant on cycle types
        auto two_chi = [&elems](int x) {
            const auto t = cycle_type(elems[x]);
            if (t == std::vector<int>{1, 1, 1, 1}) return cplx(2.0);
            if (t == std::vector<int>{2, 1, 1}) return cplx(0.0);
            if (t == std::vector<int>{2, 2}) return cplx(2.0);
            if (t == std::vector<int>{3, 1}) return cplx(-1.0);
            return cplx(0.0);  // 4-cycles
        };
        std::vector<std::function<cplx(int)>> fns = {
            [](int) { return cplx(1.0); },
            sgn,
            two_chi,
            std_chi,
            [&elems, sgn, std_chi](int x) { return sgn(x) * std_chi(x); },
        };
        return table_from_group(g, {"triv", "sign", "two", "std3", "std3s"}, fns);
    }
    throw std::invalid_argument("symmetric_table: only S3 and S4 are shipped");
}

CharacterTable dihedral_table(int n) {
    const FiniteGroup g = dihedral_group(n);
    auto rot_exp = [n](int x) { return x < n ? x : x - n; };
    auto is_reflection = [n](int x) { return x >= n; };
    std::vector<std::string> names = {"triv"};
    std::vector<std::function<cplx(int)>> fns = {
        [](int) { return cplx(1.0); },
    };
    if (n % 2 == 0) {
        names.insert(names.end(), {"sgn_s", "sgn_r", "sgn_sr"});
        fns.push_back([is_reflection](int x) { return cplx(is_reflection(x) ? -1.0 : 1.0); });
        fns.push_back([rot_exp](int x) { return cplx(rot_exp(x) % 2 == 0 ? 1.0 : -1.0); });
        fns.push_back([is_reflection, rot_exp](int x) {
            const int e = (is_reflection(x) ? 1 : 0) + rot_exp(x);
            return cplx(e % 2 == 0 ? 1.0 : -1.0);
        });
    } else {
        names.push_back("sgn");
        fns.push_back([is_reflection](int x) { return cplx(is_reflection(x) ? -1.0 : 1.0); });
    }
    const int num_rot = (n % 2 == 0) ? n / 2 - 1 : (n - 1) / 2;
    for (int j = 1; j <= num_rot; ++j) {
        names.push_back(num_rot == 1 ? "rot" : "rot" + std::to_string(j));
        fns.push_back([n, j, is_reflection, rot_exp](int x) {
            if (is_reflection(x)) return cplx(0.0);
            return cplx(2.0 * std::cos(2.0 * std::numbers::pi * j * rot_exp(x) / n));
        });
    }
    return table_from_group(g, std::move(names), fns);
}

}  // namespace

FiniteGroup builtin_group(const std::string& name) {
    if (name.size() >= 2 && name[0] == 'C') {
        const int n = std::stoi(name.substr(1));
        if (n >= 1 && n <= 12) return cyclic_group(n);
    }
    if (name == "S3") return group_from_elements(symmetric_group_elements(3));
    if (name == "S4") return group_from_elements(symmetric_group_elements(4));
    if (name == "D4") return dihedral_group(4);
    if (name == "D5") return dihedral_group(5);
    throw std::invalid_argument("builtin_group: unknown name '" + name + "'");
}

CharacterTable builtin_character_table(const std::string& name) {
    if (name.size() >= 2 && name[0] == 'C') {
        const int n = std::stoi(name.substr(1));
        if (n >= 1 && n <= 12) return cyclic_table(n);
    }
    if (name == "S3") return symmetric_table(3);
    if (name == "S4") return symmetric_table(4);
    if (name == "D4") return dihedral_table(4);
    if (name == "D5") return dihedral_table(5);
    throw std::invalid_argument("builtin_character_table: unknown name '" + name + "'");
}

std::vector<std::string> builtin_group_names() {
    std::vector<std::string> names;
    for (int n = 1; n <= 12; ++n) names.push_back("C" + std::to_string(n));
    names.insert(names.end(), {"S3", "S4", "D4", "D5"});
    return names;
}

FusionRing builtin_vec_g(const FiniteGroup& g) {
    const auto group_report = validate_group(g);
    if (!group_report.empty())
        throw std::invalid_argument("builtin_vec_g: invalid group: " + group_report.front());
    const int n = g.order;
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    std::vector<IMat> tensor(n, IMat::Zero(n, n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) tensor[i](j, g.table[i][j]) = 1;
    FusionRing ring(std::move(labels), g.identity, std::move(tensor));
    if (!validate_fusion_ring(ring).empty())
        throw std::logic_error("builtin_vec_g: construction is broken");
    return ring;
}

FusionRing builtin_rep_g(const CharacterTable& ct) {
    const auto table_report = validate_character_table(ct);
    if (!table_report.empty())
        throw std::invalid_argument("builtin_rep_g: invalid character table: " +
                                    table_report.front());
    const int ni = ct.num_irreps();
    std::vector<IMat> tensor(ni, IMat::Zero(ni, ni));
    for (int a = 0; a < ni; ++a)
        for (int b = 0; b < ni; ++b) tensor[a].row(b) = tensor_multiplicities(ct, a, b).transpose();
    int unit = -1;
    for (int a = 0; a < ni; ++a) {
        bool is_unit = ct.dim(a) == 1;
        for (int c = 0; c < ct.num_classes() && is_unit; ++c)
            if (std::abs(ct.chars(a, c) - cplx(1.0)) > kOrthTol) is_unit = false;
        if (is_unit) {
            unit = a;
            break;
        }
    }
    if (unit < 0)
        throw std::invalid_argument("builtin_rep_g: table has no trivial character row");
    FusionRing ring(ct.irreps, unit, std::move(tensor));
    const auto ring_report = validate_fusion_ring(ring);
    if (!ring_report.empty())
        throw std::runtime_error("builtin_rep_g: resulting ring is invalid: " +
                                 ring_report.front());
    return ring;
}

}  // namespace fusionstab
