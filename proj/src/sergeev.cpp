#include "spinsv/sergeev.hpp"

#include "spinsv/symfun.hpp"

#include <algorithm>
#include <sstream>

namespace spinsv {

Rational class_ratio(const Partition& rho, const Partition& lambda) {
    if (!rho.is_odd()) throw std::domain_error("class_ratio: rho must be odd");
    Partition core = rho.drop_ones();
    if (core.length() > 1) throw std::domain_error("multi-part odd class unsupported");
    if (core.empty()) return Rational(1); // padded identity class sum
    if ((long)core.parts()[0] > lambda.size()) return Rational(0);
    return f_element(core.parts()[0], lambda);
}

namespace {

Integer sergeev_class_size(int d, const Partition& type) {
    // |C_rho| = 2^{d - l(rho)} d! / z_rho (same closed form for twisted classes).
    return int_pow(2, d - type.length()) * factorial(d) / type.z_factor();
}

std::string cycle_label(const Partition& type, bool reversed = false) {
    // Canonical representative in cycle notation, fixed points omitted.
    std::string s;
    int next = 1;
    for (int part : type.parts()) {
        if (part == 1) {
            ++next;
            continue;
        }
        s += "(";
        for (int j = 0; j < part; ++j) {
            int v = reversed ? next + part - 1 - j : next + j;
            s += v >= 10 ? "," + std::to_string(v) : std::to_string(v);
        }
        s += ")";
        next += part;
    }
    return s.empty() ? "e" : s;
}

int parity_d_minus_l(int d, const Partition& p) { return (d - p.length()) & 1; }

Integer exact_sqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("exact_sqrt: negative");
    Integer r = boost::multiprecision::sqrt(n);
    if (r * r != n) throw std::domain_error("exact_sqrt: not a perfect square");
    return r;
}

long parts_product_long(const Partition& p) {
    return p.parts_product().convert_to<long>();
}

std::string row_label(const Partition& lambda, int sign) {
    std::string s;
    for (size_t i = 0; i < lambda.parts().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(lambda.parts()[i]);
    }
    if (sign > 0) s += "+";
    if (sign < 0) s += "-";
    return s;
}

} // namespace

ThetaTable theta_table(int d) {
    if (d < 1 || d > 5) throw std::domain_error("theta_table: degree must be 1..5");
    ThetaTable t;
    t.degree = d;
    t.lambdas = enumerate_partitions(PartitionKind::Strict, d);
    t.odd_classes = enumerate_partitions(PartitionKind::Odd, d);
    Integer group_order = int_pow(2, d + 1) * factorial(d); // |Se_d|

    for (const auto& lambda : t.lambdas) {
        int tt = lambda.length() % 2 ? 2 : 1;
        Rational norm = 0;
        for (const auto& rho : t.odd_classes) {
            Rational f = class_ratio(rho, lambda);
            norm += f * f / Rational(sergeev_class_size(d, rho));
        }
        // dim(chi)^2 * norm = |Se_d| / (2 t), and theta = 2^{delta(lambda)} chi.
        Rational dim2 = Rational(group_order) / (Rational(2 * tt) * norm);
        Integer dim_chi = exact_sqrt(dim2.to_integer());
        Integer dim_theta = dim_chi * (lambda.length() % 2 ? 2 : 1);
        t.theta_dim.push_back(dim_theta);
        std::vector<Rational> row;
        for (const auto& rho : t.odd_classes)
            row.push_back(Rational(dim_theta) * class_ratio(rho, lambda) /
                          Rational(sergeev_class_size(d, rho)));
        t.theta.push_back(std::move(row));
    }
    return t;
}

namespace {

Rational theta_value(const ThetaTable& th, int li, const Partition& rho) {
    for (size_t r = 0; r < th.odd_classes.size(); ++r)
        if (th.odd_classes[r] == rho) return th.theta[li][r];
    return Rational(0); // theta vanishes off the odd classes
}

// phi^lambda(rho) = 2^{-(l(rho)+delta-eps)/2} theta^lambda(rho): the
// supermodule character of the spin symmetric group; the exponent is even.
Rational phi_super(const ThetaTable& th, int li, const Partition& rho) {
    const Partition& lambda = th.lambdas[li];
    int delta = lambda.length() & 1;
    int eps = parity_d_minus_l(th.degree, lambda);
    int expo = rho.length() + delta - eps;
    if (expo % 2) throw std::domain_error("phi_super: odd exponent");
    Rational v = theta_value(th, li, rho);
    return expo >= 0 ? v / Rational(int_pow(2, expo / 2)) : v * Rational(int_pow(2, -expo / 2));
}

void sort_types_canonically(std::vector<Partition>& types, int d) {
    // identity first, then lex-decreasing.
    std::sort(types.begin(), types.end(), [d](const Partition& a, const Partition& b) {
        bool ia = a.multiplicity(1) == d, ib = b.multiplicity(1) == d;
        if (ia != ib) return ia;
        return a < b;
    });
}

CharacterTable table_sergeev(int d) {
    ThetaTable th = theta_table(d);
    CharacterTable T;
    T.group = {GroupFamily::Sergeev, d};
    T.order = int_pow(2, d + 1) * factorial(d);

    std::vector<Partition> pure = th.odd_classes;
    sort_types_canonically(pure, d);
    for (const auto& rho : pure) {
        SpinClass c;
        c.cycle_type = rho;
        c.size = sergeev_class_size(d, rho);
        c.label = cycle_label(rho);
        T.classes.push_back(c);
    }
    for (const auto& lambda : th.lambdas) {
        if (lambda.length() % 2 == 0) continue;
        SpinClass c;
        c.cycle_type = lambda;
        c.twisted = true;
        c.size = sergeev_class_size(d, lambda);
        c.label = "C_" + cycle_label(lambda) + ",1";
        T.classes.push_back(c);
    }

    for (size_t li = 0; li < th.lambdas.size(); ++li) {
        const Partition& lambda = th.lambdas[li];
        bool split = lambda.length() % 2; // (lambda, +-) pairs when l(lambda) is odd
        for (int sgn : split ? std::vector<int>{+1, -1} : std::vector<int>{0}) {
            SpinCharacter row;
            row.lambda = lambda;
            row.sign = sgn;
            row.label = row_label(lambda, sgn);
            for (const auto& c : T.classes) {
                if (!c.twisted) {
                    Rational v = theta_value(th, (int)li, c.cycle_type);
                    if (split) v = v / Rational(2); // chi = 2^{-delta} theta
                    row.values.emplace_back(v);
                } else if (split && c.cycle_type == lambda) {
                    Rational scale = Rational(int_pow(2, (lambda.length() - 1) / 2));
                    row.values.push_back(AlgebraicValue::i_sqrt_term(
                        parts_product_long(lambda), sgn > 0 ? scale : -scale));
                } else {
                    row.values.emplace_back();
                }
            }
            row.dimension = split ? th.theta_dim[li] / 2 : th.theta_dim[li];
            T.rows.push_back(std::move(row));
        }
    }
    return T;
}

CharacterTable table_sergeev_even(int d) {
    ThetaTable th = theta_table(d);
    CharacterTable T;
    T.group = {GroupFamily::SergeevEven, d};
    T.order = int_pow(2, d) * factorial(d);

    // Kept classes: pure-permutation classes of type rho in OP(d), plus type
    // lambda strict of even length. A type serving both roles at once (odd,
    // strict, even length: (3,1) at d = 4) splits into two halves; sizes are
    // cross-checked against the group enumeration in the test suite.
    std::vector<Partition> op_types = th.odd_classes;
    sort_types_canonically(op_types, d);
    std::vector<Partition> extra;
    for (const auto& lambda : th.lambdas)
        if (lambda.length() % 2 == 0 && !lambda.is_odd()) extra.push_back(lambda);
    sort_types_canonically(extra, d);

    auto push_type = [&](const Partition& type) {
        bool is_id = type.multiplicity(1) == d;
        bool splits = !is_id && type.is_odd() && type.is_strict() && type.length() % 2 == 0;
        Integer size = sergeev_class_size(d, type);
        SpinClass c;
        c.cycle_type = type;
        c.label = is_id ? "e" : "C_" + cycle_label(type);
        if (splits) {
            c.size = size / 2;
            c.split_index = 1;
            SpinClass c2 = c;
            c2.split_index = 2;
            c.label += "(a)";
            c2.label += "(b)";
            T.classes.push_back(c);
            T.classes.push_back(c2);
        } else {
            c.size = size;
            T.classes.push_back(c);
        }
    };
    for (const auto& t : op_types) push_type(t);
    for (const auto& t : extra) push_type(t);

    for (size_t li = 0; li < th.lambdas.size(); ++li) {
        const Partition& lambda = th.lambdas[li];
        bool split = lambda.length() % 2 == 0; // (lambda, +-) pairs when l(lambda) even
        for (int sgn : split ? std::vector<int>{+1, -1} : std::vector<int>{0}) {
            SpinCharacter row;
            row.lambda = lambda;
            row.sign = sgn;
            row.label = row_label(lambda, sgn);
            for (const auto& c : T.classes) {
                AlgebraicValue v{theta_value(th, (int)li, c.cycle_type) / Rational(2)};
                if (split && c.cycle_type == lambda) {
                    // += (1/2) 2^{l/2} i sqrt(prod lambda_i); conjugate on (b)
                    Rational scale = Rational(int_pow(2, lambda.length() / 2)) / Rational(2);
                    int s = c.split_index == 2 ? -sgn : sgn;
                    v += AlgebraicValue::i_sqrt_term(parts_product_long(lambda),
                                                     s > 0 ? scale : -scale);
                }
                row.values.push_back(std::move(v));
            }
            row.dimension = th.theta_dim[li] / 2;
            T.rows.push_back(std::move(row));
        }
    }
    return T;
}

CharacterTable table_spin_sym(int d) {
    ThetaTable th = theta_table(d);
    CharacterTable T;
    T.group = {GroupFamily::SpinSym, d};
    T.order = 2 * factorial(d);

    std::vector<Partition> pure = th.odd_classes;
    sort_types_canonically(pure, d);
    for (const auto& rho : pure) {
        SpinClass c;
        c.cycle_type = rho;
        c.size = factorial(d) / rho.z_factor();
        c.label = cycle_label(rho);
        T.classes.push_back(c);
    }
    for (const auto& lambda : th.lambdas) {
        if (parity_d_minus_l(d, lambda) == 0) continue; // case (ii) needs d - l odd
        SpinClass c;
        c.cycle_type = lambda;
        c.twisted = true;
        c.size = factorial(d) / lambda.z_factor();
        c.label = cycle_label(lambda);
        T.classes.push_back(c);
    }

    for (size_t li = 0; li < th.lambdas.size(); ++li) {
        const Partition& lambda = th.lambdas[li];
        bool split = parity_d_minus_l(d, lambda) == 1;
        for (int sgn : split ? std::vector<int>{+1, -1} : std::vector<int>{0}) {
            SpinCharacter row;
            row.lambda = lambda;
            row.sign = sgn;
            row.label = row_label(lambda, sgn);
            for (const auto& c : T.classes) {
                if (!c.twisted) {
                    Rational v = phi_super(th, (int)li, c.cycle_type);
                    if (split) v = v / Rational(2); // phi_+ = phi_- = phi/2 on OP classes
                    row.values.emplace_back(v);
                } else if (split && c.cycle_type == lambda) {
                    // +- (i / sqrt 2) sqrt(prod lambda_i); the product is even here.
                    long prod = parts_product_long(lambda);
                    AlgebraicValue v = AlgebraicValue::i_sqrt_term(prod / 2);
                    if (prod % 2) throw std::domain_error("spin_sym: odd product in case (ii)");
                    if (sgn < 0) v = -v;
                    row.values.push_back(std::move(v));
                } else {
                    row.values.emplace_back();
                }
            }
            Rational dim = phi_super(th, (int)li, Partition(std::vector<int>(d, 1)));
            if (split) dim = dim / Rational(2);
            row.dimension = dim.to_integer();
            T.rows.push_back(std::move(row));
        }
    }
    return T;
}

CharacterTable table_spin_alt(int d) {
    ThetaTable th = theta_table(d);
    CharacterTable T;
    T.group = {GroupFamily::SpinAlt, d};
    T.order = d == 1 ? 2 : factorial(d);

    std::vector<Partition> pure = th.odd_classes;
    sort_types_canonically(pure, d);
    for (const auto& rho : pure) {
        bool is_id = rho.multiplicity(1) == d;
        bool splits = !is_id && rho.is_strict(); // distinct odd parts split in A_d
        Integer base = factorial(d) / rho.z_factor();
        SpinClass c;
        c.cycle_type = rho;
        c.label = is_id ? "e" : cycle_label(rho);
        if (splits) {
            c.size = base / 2;
            c.split_index = 1;
            SpinClass c2 = c;
            c2.split_index = 2;
            c2.label = cycle_label(rho, /*reversed=*/true);
            T.classes.push_back(c);
            T.classes.push_back(c2);
        } else {
            c.size = base;
            T.classes.push_back(c);
        }
    }

    for (size_t li = 0; li < th.lambdas.size(); ++li) {
        const Partition& lambda = th.lambdas[li];
        bool split = parity_d_minus_l(d, lambda) == 0; // even d - l(lambda) splits here
        for (int sgn : split ? std::vector<int>{+1, -1} : std::vector<int>{0}) {
            SpinCharacter row;
            row.lambda = lambda;
            row.sign = sgn;
            row.label = row_label(lambda, sgn);
            for (const auto& c : T.classes) {
                AlgebraicValue v{phi_super(th, (int)li, c.cycle_type) / Rational(2)};
                if (split && c.cycle_type == lambda) {
                    int s = c.split_index == 2 ? -sgn : sgn;
                    v += AlgebraicValue::i_sqrt_term(parts_product_long(lambda),
                                                     Rational(s > 0 ? 1 : -1) / Rational(2));
                }
                row.values.push_back(std::move(v));
            }
            row.dimension =
                (phi_super(th, (int)li, Partition(std::vector<int>(d, 1))) / Rational(2))
                    .to_integer();
            T.rows.push_back(std::move(row));
        }
    }
    return T;
}

} // namespace

CharacterTable character_table(GroupId g) {
    if (g.degree < 1 || g.degree > 5)
        throw std::domain_error("character_table: degree must be 1..5");
    switch (g.family) {
        case GroupFamily::Sergeev: return table_sergeev(g.degree);
        case GroupFamily::SergeevEven: return table_sergeev_even(g.degree);
        case GroupFamily::SpinSym: return table_spin_sym(g.degree);
        case GroupFamily::SpinAlt: return table_spin_alt(g.degree);
    }
    throw std::domain_error("character_table: unknown family");
}

bool check_orthogonality(const CharacterTable& t, std::string* msg) {
    auto fail = [&](const std::string& m) {
        if (msg) *msg = m;
        return false;
    };
    AlgebraicValue half_order{Rational(t.order) / Rational(2)};
    for (size_t i = 0; i < t.rows.size(); ++i)
        for (size_t i2 = i; i2 < t.rows.size(); ++i2) {
            AlgebraicValue s;
            for (size_t j = 0; j < t.classes.size(); ++j)
                s += AlgebraicValue(Rational(t.classes[j].size)) * t.rows[i].values[j] *
                     t.rows[i2].values[j].conj();
            AlgebraicValue expect = i == i2 ? half_order : AlgebraicValue();
            if (s != expect)
                return fail("row orthogonality fails at rows " + std::to_string(i) + "," +
                            std::to_string(i2) + ": got " + s.str());
        }
    for (size_t j = 0; j < t.classes.size(); ++j)
        for (size_t j2 = 0; j2 < t.classes.size(); ++j2) {
            AlgebraicValue s;
            for (const auto& row : t.rows)
                s += AlgebraicValue(Rational(t.classes[j].size)) * row.values[j] *
                     row.values[j2].conj();
            AlgebraicValue expect = j == j2 ? half_order : AlgebraicValue();
            if (s != expect)
                return fail("column orthogonality fails at classes " + std::to_string(j) + "," +
                            std::to_string(j2) + ": got " + s.str());
        }
    return true;
}

Rational HurwitzWeight::operator()(const Partition& type) const {
    switch (kind) {
        case WeightKind::One: return Rational(1);
        case WeightKind::PPower: return p_power(k, type);
        case WeightKind::PMinusOne: return p_power(-1, type);
    }
    return Rational(0);
}

Rational weighted_spin_hurwitz_char(const HurwitzProfile& profile, const HurwitzWeight& weight) {
    int d = profile.degree;
    int chi = profile.euler_chi();
    if (chi % 2) throw std::domain_error("weighted_spin_hurwitz_char: odd Euler characteristic");
    Rational sum = 0;
    for (const auto& lambda : enumerate_partitions(PartitionKind::Strict, d)) {
        Rational term = weight(lambda);
        for (const auto& mu : profile.entries) {
            if (!mu.is_odd()) throw std::domain_error("profile entries must be odd");
            Partition core = mu.drop_ones();
            if (core.length() > 1) throw std::domain_error("multi-part odd class unsupported");
            int l = core.empty() ? 1 : core.parts()[0];
            term *= l > (int)lambda.size() ? Rational(0) : f_element(l, lambda);
        }
        if (lambda.length() % 2) term = -term;
        sum += term;
    }
    Rational scale =
        chi >= 0 ? Rational(int_pow(2, chi / 2)) : Rational(Integer(1), int_pow(2, -chi / 2));
    return scale * sum;
}

} // namespace spinsv
