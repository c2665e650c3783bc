#include "spinsv/hurwitz_groups.hpp"
#include "spinsv/sergeev.hpp"

namespace spinsv {

namespace {

const PermGroup& perm_group(int d) {
    static std::map<int, PermGroup> cache;
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, PermGroup(d)).first;
    return it->second;
}

uint32_t support_mask(const std::vector<int>& perm) {
    uint32_t m = 0;
    for (size_t x = 0; x < perm.size(); ++x)
        if (perm[x] != (int)x) m |= 1u << x;
    return m;
}

bool transitive(const PermGroup& S, const std::vector<int>& gens) {
    int d = S.d;
    uint32_t reached = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int g : gens)
            for (int x = 0; x < d; ++x)
                if ((reached >> x & 1) && !(reached >> S.perms[g][x] & 1)) {
                    reached |= 1u << S.perms[g][x];
                    grew = true;
                }
    }
    return reached == (1u << d) - 1;
}

struct LevelData {
    std::vector<int> cycle_of;      // point -> cycle id at this level
    std::vector<uint32_t> cycles;   // cycle id -> support mask
    std::vector<int> width;         // cycle id -> length
};

LevelData cycles_of(const PermGroup& S, int perm) {
    LevelData L;
    int d = S.d;
    L.cycle_of.assign(d, -1);
    for (int x = 0; x < d; ++x) {
        if (L.cycle_of[x] >= 0) continue;
        int id = (int)L.cycles.size();
        uint32_t m = 0;
        int len = 0, y = x;
        while (L.cycle_of[y] < 0) {
            L.cycle_of[y] = id;
            m |= 1u << y;
            y = S.perms[perm][y];
            ++len;
        }
        L.cycles.push_back(m);
        L.width.push_back(len);
    }
    return L;
}

} // namespace

CensusReport cylinder_census(const HurwitzProfile& profile) {
    int d = profile.degree;
    int n = (int)profile.entries.size();
    if (n < 1) throw std::domain_error("cylinder_census: need at least one branch point");
    if (d > 6 || (n >= 2 && d > 4)) throw std::domain_error("cylinder_census: degree infeasible");
    const PermGroup& S = perm_group(d);

    std::vector<Partition> types;
    for (const auto& mu : profile.entries) {
        std::vector<int> parts = mu.drop_ones().parts();
        long s = 0;
        for (int p : parts) s += p;
        if (s > d) throw std::domain_error("profile entry larger than degree");
        for (long i = s; i < d; ++i) parts.push_back(1);
        types.emplace_back(parts);
    }
    std::vector<std::vector<char>> in_class(n, std::vector<char>(S.perms.size(), 0));
    for (int i = 0; i < n; ++i)
        for (size_t p = 0; p < S.perms.size(); ++p)
            if (S.cycle_type((int)p) == types[i]) in_class[i][p] = 1;

    CensusReport rep;
    rep.degree = d;
    rep.levels = n;
    rep.f_sum_halved.assign(n, Rational(0));
    rep.boundary_share.assign(n, Rational(0));
    Rational side_total = 0;

    int nperm = (int)S.perms.size();
    std::vector<int> gammas(n);
    auto process_tuple = [&](int alpha, int beta) {
        rep.connected_tuples++;
        // Level monodromies a_j = alpha * gamma_1 * ... * gamma_j.
        std::vector<int> level_perm(n);
        std::vector<uint32_t> gamma_supp(n);
        int acc = alpha;
        level_perm[0] = alpha;
        for (int j = 0; j < n; ++j) {
            gamma_supp[j] = support_mask(S.perms[gammas[j]]);
            if (j + 1 < n) {
                acc = S.mul[acc][gammas[j]];
                level_perm[j + 1] = acc;
            }
        }
        // Wrap relabeling: a cycle c of a_{n-1} gamma_n continues as
        // (alpha beta)^{-1}(c) at level 0.
        int ab = S.mul[alpha][beta];
        int ab_inv = S.inv[ab];

        std::vector<LevelData> levels;
        for (int j = 0; j < n; ++j) levels.push_back(cycles_of(S, level_perm[j]));

        std::vector<std::vector<char>> visited(n);
        for (int j = 0; j < n; ++j) visited[j].assign(levels[j].cycles.size(), 0);

        CensusTuple tuple;
        for (int j0 = 0; j0 < n; ++j0)
            for (size_t c0 = 0; c0 < levels[j0].cycles.size(); ++c0) {
                if (visited[j0][c0]) continue;
                // Walk down to the bottom of this cylinder.
                int j = j0, c = (int)c0;
                int guard = n * d + 1;
                while (guard-- > 0) {
                    // Crossing below level j is blocked by branch j (1-based),
                    // or branch n at the wrap below level 0.
                    int branch = j == 0 ? n - 1 : j - 1; // 0-based branch index
                    uint32_t supp = levels[j].cycles[c];
                    if (supp & gamma_supp[branch]) break; // bottom found
                    if (j == 0) {
                        // Cross the wrap downward: relabel by (alpha beta).
                        uint32_t m = 0;
                        for (int x = 0; x < d; ++x)
                            if (supp >> x & 1) m |= 1u << S.perms[ab][x];
                        j = n - 1;
                        c = levels[j].cycle_of[__builtin_ctz(m)];
                    } else {
                        --j;
                        c = levels[j].cycle_of[__builtin_ctz(supp)];
                    }
                    if (j == j0 && c == (int)c0) break; // closed loop; cannot happen when connected
                }
                if (guard <= 0) throw std::domain_error("cylinder_census: walk did not terminate");
                // Walk up from the bottom, collecting the cylinder.
                CylinderRecord cyl;
                cyl.f.assign(n, 0);
                cyl.width = levels[j].width[c];
                int bottom_branch = j == 0 ? n - 1 : j - 1;
                cyl.f[bottom_branch] += 1;
                int top_branch = -1;
                while (true) {
                    visited[j][c] = 1;
                    cyl.spanned_levels += 1;
                    uint32_t supp = levels[j].cycles[c];
                    int branch = j == n - 1 ? n - 1 : j; // branch above level j (0-based)
                    if (supp & gamma_supp[branch]) {
                        top_branch = branch;
                        break;
                    }
                    if (j == n - 1) {
                        uint32_t m = 0;
                        for (int x = 0; x < d; ++x)
                            if (supp >> x & 1) m |= 1u << S.perms[ab_inv][x];
                        j = 0;
                        c = levels[0].cycle_of[__builtin_ctz(m)];
                    } else {
                        ++j;
                        c = levels[j].cycle_of[__builtin_ctz(supp)];
                    }
                }
                cyl.f[top_branch] += 1;
                tuple.cylinders.push_back(std::move(cyl));
            }

        Rational area = 0;
        for (const auto& cyl : tuple.cylinders) {
            area += Rational(cyl.width) * Rational(cyl.spanned_levels) / Rational(n);
            for (int i = 0; i < n; ++i) {
                rep.f_sum_halved[i] += Rational(cyl.f[i]) / Rational(2);
                rep.boundary_share[i] += Rational(cyl.f[i]);
                side_total += Rational(cyl.f[i]);
            }
        }
        rep.total_area += area;
        rep.tuples.push_back(std::move(tuple));
    };

    std::function<void(int, int, int, std::vector<int>&)> rec_gammas =
        [&](int alpha, int beta, int i, std::vector<int>& gens) {
            if (i == n) {
                // Relation: [alpha,beta] gamma_1 ... gamma_n = 1.
                int prod = S.mul[S.mul[S.mul[alpha][beta]][S.inv[alpha]]][S.inv[beta]];
                for (int j = 0; j < n; ++j) prod = S.mul[prod][gammas[j]];
                if (prod != 0) return;
                if (!transitive(S, gens)) return;
                process_tuple(alpha, beta);
                return;
            }
            if (i == n - 1) {
                // Last gamma is determined by the relation.
                int prod = S.mul[S.mul[S.mul[alpha][beta]][S.inv[alpha]]][S.inv[beta]];
                for (int j = 0; j < n - 1; ++j) prod = S.mul[prod][gammas[j]];
                int g = S.inv[prod];
                if (!in_class[i][g]) return;
                gammas[i] = g;
                gens.push_back(g);
                rec_gammas(alpha, beta, i + 1, gens);
                gens.pop_back();
                return;
            }
            for (int g = 0; g < nperm; ++g) {
                if (!in_class[i][g]) continue;
                gammas[i] = g;
                gens.push_back(g);
                rec_gammas(alpha, beta, i + 1, gens);
                gens.pop_back();
            }
        };

    for (int alpha = 0; alpha < nperm; ++alpha)
        for (int beta = 0; beta < nperm; ++beta) {
            std::vector<int> gens{alpha, beta};
            rec_gammas(alpha, beta, 0, gens);
        }

    if (!side_total.is_zero())
        for (int i = 0; i < n; ++i) rep.boundary_share[i] /= side_total;
    return rep;
}

} // namespace spinsv
