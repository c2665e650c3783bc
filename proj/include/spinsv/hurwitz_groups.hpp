#pragma once

#include "spinsv/partitions.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace spinsv {

// All permutations of {0..d-1} with an index, multiplication and inverse
// tables. Composition convention: (s*t)(x) = s(t(x)).
struct PermGroup {
    int d = 0;
    std::vector<std::vector<int>> perms;
    std::vector<int> inv;
    std::vector<std::vector<int>> mul;
    std::map<std::vector<int>, int> index_of;

    explicit PermGroup(int d_) : d(d_) {
        std::vector<int> p(d);
        std::iota(p.begin(), p.end(), 0);
        do {
            index_of[p] = (int)perms.size();
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        int n = (int)perms.size();
        mul.assign(n, std::vector<int>(n));
        inv.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            std::vector<int> q(d);
            for (int j = 0; j < n; ++j) {
                for (int x = 0; x < d; ++x) q[x] = perms[i][perms[j][x]];
                mul[i][j] = index_of.at(q);
            }
            for (int x = 0; x < d; ++x) q[perms[i][x]] = x;
            inv[i] = index_of.at(q);
        }
    }

    Partition cycle_type(int idx) const {
        std::vector<int> parts;
        std::vector<bool> seen(d, false);
        for (int x = 0; x < d; ++x) {
            if (seen[x]) continue;
            int len = 0, y = x;
            while (!seen[y]) {
                seen[y] = true;
                y = perms[idx][y];
                ++len;
            }
            parts.push_back(len);
        }
        return Partition(std::move(parts));
    }

    // Index of the canonical representative of a cycle type: consecutive
    // points grouped into cycles of the given lengths.
    int representative(const Partition& type) const {
        std::vector<int> p(d);
        int next = 0;
        for (int part : type.parts()) {
            for (int j = 0; j < part; ++j) p[next + j] = next + (j + 1) % part;
            next += part;
        }
        return index_of.at(p);
    }
};

// Element of one of the four lifting groups over S_d, encoded as
// ((perm_index << d | xi_mask) << 1 | eps). The flags of LiftGroup select
// whether the central element is tracked (Sergeev vs signed permutations)
// and whether odd xi-degree is allowed (full group vs even subgroup).
class LiftGroup {
  public:
    LiftGroup(const PermGroup& sym, bool track_sign, bool even_only)
        : sym_(&sym), track_sign_(track_sign), even_only_(even_only) {}

    const PermGroup& sym() const { return *sym_; }
    int degree() const { return sym_->d; }
    bool track_sign() const { return track_sign_; }
    bool even_only() const { return even_only_; }

    Integer order() const {
        Integer n = factorial(degree()) * int_pow(2, degree());
        if (track_sign_) n *= 2;
        if (even_only_) n /= 2;
        return n;
    }

    uint32_t encode(int eps, uint32_t mask, int perm) const {
        return (((uint32_t)perm << degree() | mask) << 1) | (uint32_t)(eps & 1);
    }
    int eps_of(uint32_t g) const { return (int)(g & 1); }
    uint32_t mask_of(uint32_t g) const { return (g >> 1) & ((1u << degree()) - 1); }
    int perm_of(uint32_t g) const { return (int)(g >> (1 + degree())); }
    uint32_t code_space() const {
        return (uint32_t)sym_->perms.size() << (degree() + 1);
    }

    uint32_t identity() const { return encode(0, 0, 0); }

    uint32_t multiply(uint32_t a, uint32_t b) const {
        int d = degree();
        const auto& s = sym_->perms[perm_of(a)];
        uint32_t B = mask_of(a), D = mask_of(b);
        int sign = eps_of(a) ^ eps_of(b);
        // conjugate D by the permutation of a: word (s(d1), s(d2), ...) with
        // d1 < d2 < ...; count inversions to re-sort.
        uint32_t Dp = 0;
        std::array<int, 8> img{};
        int k = 0;
        for (int i = 0; i < d; ++i)
            if (D >> i & 1) {
                img[k++] = s[i];
                Dp |= 1u << s[i];
            }
        if (track_sign_) {
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (img[i] > img[j]) sign ^= 1;
            // merge xi^B xi^Dp: each x in Dp crosses the elements of B above it
            for (int x = 0; x < d; ++x)
                if (Dp >> x & 1) {
                    uint32_t above = B & ~((2u << x) - 1);
                    sign ^= (int)(__builtin_popcount(above) & 1);
                }
            sign ^= (int)(__builtin_popcount(B & Dp) & 1); // xi_i^2 = eps
        }
        uint32_t mask = B ^ Dp;
        int perm = sym_->mul[perm_of(a)][perm_of(b)];
        return encode(track_sign_ ? sign : 0, mask, perm);
    }

    uint32_t inverse(uint32_t g) const {
        int d = degree();
        uint32_t B = mask_of(g);
        int k = __builtin_popcount(B);
        int s = track_sign_ ? (eps_of(g) + k * (k + 1) / 2) & 1 : 0;
        // g^{-1} = (pure sigma^{-1}) * (eps^{a + k(k+1)/2} xi^B)
        uint32_t left = encode(0, 0, sym_->inv[perm_of(g)]);
        uint32_t right = encode(s, B, 0);
        return multiply(left, right);
    }

    uint32_t commutator(uint32_t a, uint32_t b) const {
        return multiply(multiply(a, b), inverse(multiply(b, a)));
    }

    bool contains(uint32_t g) const {
        if (even_only_ && (__builtin_popcount(mask_of(g)) & 1)) return false;
        return true;
    }

    // Lifts of a permutation index inside this group.
    std::vector<uint32_t> lifts(int perm) const {
        std::vector<uint32_t> out;
        int d = degree();
        for (uint32_t m = 0; m < (1u << d); ++m) {
            if (even_only_ && (__builtin_popcount(m) & 1)) continue;
            out.push_back(encode(0, m, perm));
            if (track_sign_) out.push_back(encode(1, m, perm));
        }
        return out;
    }

    // Conjugacy class of g as a membership bitmap (orbit under conjugation
    // by group generators).
    std::vector<char> class_of(uint32_t g) const {
        std::vector<char> in(code_space(), 0);
        std::vector<uint32_t> gens;
        for (int i = 0; i + 1 < degree(); ++i) {
            std::vector<int> t(degree());
            std::iota(t.begin(), t.end(), 0);
            std::swap(t[i], t[i + 1]);
            gens.push_back(encode(0, 0, sym_->index_of.at(t)));
        }
        if (!even_only_)
            gens.push_back(encode(0, 1u, 0)); // xi_1
        else if (degree() >= 2)
            gens.push_back(encode(0, 3u, 0)); // xi_1 xi_2
        std::vector<uint32_t> stack{g};
        in[g] = 1;
        while (!stack.empty()) {
            uint32_t x = stack.back();
            stack.pop_back();
            for (uint32_t h : gens) {
                uint32_t y = multiply(multiply(h, x), inverse(h));
                if (!in[y]) {
                    in[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        return in;
    }
};

} // namespace spinsv
