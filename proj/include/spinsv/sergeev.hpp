#pragma once

#include "spinsv/exact.hpp"
#include "spinsv/partitions.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace spinsv {

enum class GroupFamily { SpinSym, SpinAlt, Sergeev, SergeevEven };

struct GroupId {
    GroupFamily family;
    int degree;
};

inline std::string family_name(GroupFamily f) {
    switch (f) {
        case GroupFamily::SpinSym: return "spinsym";
        case GroupFamily::SpinAlt: return "spinalt";
        case GroupFamily::Sergeev: return "sergeev";
        case GroupFamily::SergeevEven: return "sergeev0";
    }
    return "?";
}

// One conjugacy class column of a spin character table. Classes with
// C and eps*C merged are omitted; one of each disjoint pair is kept.
struct SpinClass {
    Partition cycle_type;
    bool twisted = false;   // Sergeev C_{lambda,1} classes (xi-degree 1)
    int split_index = 0;    // 0 = unsplit; 1/2 for split pairs ((a)/(b), inverse classes)
    Integer size = 0;
    std::string label;      // rendered like "e", "(123)", "C_(123),1", "C_(123)(a)"
};

struct SpinCharacter {
    Partition lambda;
    int sign = 0; // +1 / -1 for the two members of a split pair, 0 for unsplit rows
    Integer dimension = 0;
    std::vector<AlgebraicValue> values; // indexed like the class list
    std::string label;                  // e.g. "3,1+" or "4"
};

struct CharacterTable {
    GroupId group;
    Integer order = 0;
    std::vector<SpinClass> classes;
    std::vector<SpinCharacter> rows;
};

// Central-character data of the Sergeev supermodules, reconstructed from the
// series formula for f_l and the norm equation fixed by the half/full inner
// products (valid for d <= 5, where odd classes have at most one part > 1).
struct ThetaTable {
    int degree = 0;
    std::vector<Partition> lambdas;          // SP(d), canonical order
    std::vector<Partition> odd_classes;      // OP(d), canonical order
    std::vector<Integer> theta_dim;          // dim theta^lambda
    std::vector<std::vector<Rational>> theta; // theta[l][r] = theta^lambda(rho)
};

// f_rho(lambda) for rho odd with at most one part > 1 (1-padding dropped per
// the central-character extension); all-ones rho gives the class-sum value 1.
Rational class_ratio(const Partition& rho, const Partition& lambda);

ThetaTable theta_table(int d);

CharacterTable character_table(GroupId g);

// Both orthogonality relations, exactly: sums equal |G|/2 * delta.
bool check_orthogonality(const CharacterTable& t, std::string* msg = nullptr);

// ---- Hurwitz numbers ----

enum class WeightKind { One, PPower, PMinusOne };
struct HurwitzWeight {
    WeightKind kind = WeightKind::One;
    int k = 1; // for PPower
    Rational operator()(const Partition& type) const;
    static HurwitzWeight one() { return {WeightKind::One, 0}; }
    static HurwitzWeight p(int k) { return {WeightKind::PPower, k}; }
    static HurwitzWeight pminus1() { return {WeightKind::PMinusOne, -1}; }
};

struct HurwitzProfile {
    int degree = 0;
    std::vector<Partition> entries; // odd partitions, each with at most one part > 1
    // chi = sum_i (l(mu_i) - |mu_i|), independent of 1-padding.
    int euler_chi() const {
        int chi = 0;
        for (const auto& m : entries) chi += m.length() - (int)m.size();
        return chi;
    }
};

// 2^{chi/2} sum_{lambda in SP(d)} (-1)^{l(lambda)} f_Pi(lambda) w(lambda),
// with f_Pi the product of series-convention central characters (f_1 = p_1).
Rational weighted_spin_hurwitz_char(const HurwitzProfile& profile, const HurwitzWeight& weight);

// Brute force over Hurwitz tuples in S_d with the sign computed by counting
// lifts to the four groups B_d, B_d^0, Se_d, Se_d^0. d <= 4.
Rational hurwitz_bruteforce(const HurwitzProfile& profile, const HurwitzWeight& weight);

// The same weighted sum as a q-coefficient of the disconnected product
// bracket 2^{chi/2} [q^d] <w * prod f_{mu_i}> (cross-module consistency).
Rational weighted_hurwitz_via_bracket(const HurwitzProfile& profile, const HurwitzWeight& weight);

// ---- Square-tiled surface census ----

struct CylinderRecord {
    int width = 0;
    int spanned_levels = 0;          // height in units of 1/n
    std::vector<int> f;              // f[i] = sides bounded by branch point i (size n)
};

struct CensusTuple {
    std::vector<CylinderRecord> cylinders;
};

struct CensusReport {
    int degree = 0;
    int levels = 0;
    long connected_tuples = 0;
    std::vector<CensusTuple> tuples;       // per connected tuple
    std::vector<Rational> f_sum_halved;    // aggregate sum f_i(Z)/2 over all cylinders
    Rational total_area = 0;               // sum of width*height over all tuples (d per tuple)
    std::vector<Rational> boundary_share;  // area-weighted share of sides touching x_i
};

// Enumerates connected Hurwitz tuples of the profile and decomposes each
// cover into maximal horizontal cylinders, with branch points placed on
// distinct horizontal levels of the torus.
CensusReport cylinder_census(const HurwitzProfile& profile);

} // namespace spinsv
