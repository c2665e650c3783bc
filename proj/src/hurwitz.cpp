#include "spinsv/brackets.hpp"
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

Partition padded_type(const Partition& mu, int d) {
    std::vector<int> parts = mu.drop_ones().parts();
    long s = 0;
    for (int p : parts) s += p;
    if (s > d) throw std::domain_error("profile entry larger than degree");
    for (long i = s; i < d; ++i) parts.push_back(1);
    return Partition(parts);
}

using CommutatorDist = std::map<uint32_t, long>;

CommutatorDist commutator_distribution(const LiftGroup& G, int alpha, int beta) {
    CommutatorDist dist;
    for (uint32_t a : G.lifts(alpha))
        for (uint32_t b : G.lifts(beta)) ++dist[G.commutator(a, b)];
    return dist;
}

// Lifts of the tuple with gamma_i constrained to the pure classes.
long count_lifts(const LiftGroup& G, const CommutatorDist& dist, const std::vector<int>& gammas,
                 const std::vector<const std::vector<char>*>& gamma_classes) {
    long total = 0;
    if (gammas.empty()) {
        auto it = dist.find(G.identity());
        return it == dist.end() ? 0 : it->second;
    }
    if (gammas.size() == 1) {
        for (const auto& [c, mult] : dist)
            if ((*gamma_classes[0])[G.inverse(c)]) total += mult;
        return total;
    }
    std::vector<uint32_t> g1s;
    for (uint32_t g : G.lifts(gammas[0]))
        if ((*gamma_classes[0])[g]) g1s.push_back(g);
    for (const auto& [c, mult] : dist) {
        long inner = 0;
        for (uint32_t g1 : g1s)
            if ((*gamma_classes[1])[G.inverse(G.multiply(c, g1))]) ++inner;
        total += mult * inner;
    }
    return total;
}

} // namespace

Rational hurwitz_bruteforce(const HurwitzProfile& profile, const HurwitzWeight& weight) {
    int d = profile.degree;
    if (d > 4) throw std::domain_error("brute force infeasible beyond degree 4");
    if (profile.entries.size() > 2)
        throw std::domain_error("hurwitz_bruteforce: at most 2 branch points supported");
    const PermGroup& S = perm_group(d);
    int chi = profile.euler_chi();
    if (chi % 2) throw std::domain_error("hurwitz_bruteforce: odd Euler characteristic");

    LiftGroup B(S, false, false), B0(S, false, true), Se(S, true, false), Se0(S, true, true);
    const LiftGroup* groups[4] = {&B, &B0, &Se, &Se0};
    const Rational coeff[4] = {Rational(1), Rational(-1), Rational(-1), Rational(1)};

    int n = (int)profile.entries.size();
    std::vector<Partition> types;
    for (const auto& mu : profile.entries) types.push_back(padded_type(mu, d));
    std::vector<std::array<std::vector<char>, 4>> gamma_classes(n);
    for (int i = 0; i < n; ++i) {
        int rep = S.representative(types[i]);
        for (int g = 0; g < 4; ++g)
            gamma_classes[i][g] = groups[g]->class_of(groups[g]->encode(0, 0, rep));
    }
    std::vector<std::vector<char>> in_sd_class(n, std::vector<char>(S.perms.size(), 0));
    for (int i = 0; i < n; ++i)
        for (size_t p = 0; p < S.perms.size(); ++p)
            if (S.cycle_type((int)p) == types[i]) in_sd_class[i][p] = 1;

    Rational pow2chi =
        chi >= 0 ? Rational(int_pow(2, chi / 2)) : Rational(Integer(1), int_pow(2, -chi / 2));
    Rational dfact{factorial(d)};

    Rational total = 0;
    int nperm = (int)S.perms.size();
    for (int alpha = 0; alpha < nperm; ++alpha) {
        Rational w = weight(S.cycle_type(alpha));
        for (int beta = 0; beta < nperm; ++beta) {
            int c = S.mul[S.mul[S.mul[alpha][beta]][S.inv[alpha]]][S.inv[beta]];
            std::vector<std::vector<int>> gamma_tuples;
            if (n == 0) {
                if (c == 0) gamma_tuples.push_back({});
            } else if (n == 1) {
                int g = S.inv[c];
                if (in_sd_class[0][g]) gamma_tuples.push_back({g});
            } else {
                for (int g1 = 0; g1 < nperm; ++g1) {
                    if (!in_sd_class[0][g1]) continue;
                    int g2 = S.inv[S.mul[c][g1]];
                    if (in_sd_class[1][g2]) gamma_tuples.push_back({g1, g2});
                }
            }
            if (gamma_tuples.empty()) continue;

            std::array<CommutatorDist, 4> dists;
            for (int g = 0; g < 4; ++g) dists[g] = commutator_distribution(*groups[g], alpha, beta);

            for (const auto& gt : gamma_tuples) {
                Rational v = 0;
                for (int g = 0; g < 4; ++g) {
                    std::vector<const std::vector<char>*> cls;
                    for (int i = 0; i < n; ++i) cls.push_back(&gamma_classes[i][g]);
                    long cnt = count_lifts(*groups[g], dists[g], gt, cls);
                    v += coeff[g] * Rational(cnt) / Rational(groups[g]->order());
                }
                v *= pow2chi;
                Rational sign = v * dfact; // the lifting formula must produce +-1
                if (sign != Rational(1) && sign != Rational(-1))
                    throw std::domain_error("hurwitz_bruteforce: lifting count is not a sign: " +
                                            sign.str());
                total += v * w;
            }
        }
    }
    return total;
}

Rational weighted_hurwitz_via_bracket(const HurwitzProfile& profile, const HurwitzWeight& weight) {
    int d = profile.degree;
    int chi = profile.euler_chi();
    HurwitzWeight w = weight;
    std::vector<Partition> entries = profile.entries;
    SPFunction f = [entries, w](const Partition& lambda) {
        Rational v = w(lambda);
        for (const auto& mu : entries) {
            Partition core = mu.drop_ones();
            int l = core.empty() ? 1 : core.parts()[0];
            v *= l > (int)lambda.size() ? Rational(0) : f_element(l, lambda);
        }
        return v;
    };
    Rational scale =
        chi >= 0 ? Rational(int_pow(2, chi / 2)) : Rational(Integer(1), int_pow(2, -chi / 2));
    return scale * bracket_direct(f, d)[d];
}

} // namespace spinsv
