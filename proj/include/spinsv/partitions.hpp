#pragma once

#include "spinsv/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

namespace spinsv {

// Integer partition, parts weakly decreasing.
class Partition {
  public:
    Partition() = default;
    Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
        for (int p : parts_)
            if (p <= 0) throw std::domain_error("Partition: parts must be positive");
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return (int)parts_.size(); }
    long size() const {
        long s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    bool empty() const { return parts_.empty(); }
    bool is_strict() const {
        for (size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i] == parts_[i - 1]) return false;
        return true;
    }
    bool is_odd() const {
        for (int p : parts_)
            if (p % 2 == 0) return false;
        return true;
    }
    int multiplicity(int m) const {
        return (int)std::count(parts_.begin(), parts_.end(), m);
    }
    // Product of parts.
    Integer parts_product() const {
        Integer r = 1;
        for (int p : parts_) r *= p;
        return r;
    }
    // z_rho = prod m^{r_m} r_m!
    Integer z_factor() const {
        Integer z = 1;
        int run = 1;
        for (size_t i = 0; i < parts_.size(); ++i) {
            z *= parts_[i];
            if (i + 1 < parts_.size() && parts_[i + 1] == parts_[i])
                z *= ++run;
            else
                run = 1;
        }
        return z;
    }
    // Aut(rho) = prod r_m!
    Integer aut_factor() const {
        Integer a = 1;
        int run = 1;
        for (size_t i = 1; i < parts_.size(); ++i) {
            if (parts_[i] == parts_[i - 1])
                a *= ++run;
            else
                run = 1;
        }
        return a;
    }
    // Partition with all parts equal to 1 removed.
    Partition drop_ones() const {
        std::vector<int> q;
        for (int p : parts_)
            if (p != 1) q.push_back(p);
        return Partition(std::move(q));
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    // Lexicographically decreasing canonical order.
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ > b.parts_; }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

  private:
    std::vector<int> parts_;
};

enum class PartitionKind { Strict, Odd, All };

// All partitions of `size` of the given kind, in lexicographically
// decreasing order. size 0 yields exactly the empty partition.
inline std::vector<Partition> enumerate_partitions(PartitionKind kind, int size) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            if (kind == PartitionKind::Odd && p % 2 == 0) continue;
            cur.push_back(p);
            rec(remaining - p, kind == PartitionKind::Strict ? p - 1 : p);
            cur.pop_back();
        }
    };
    if (size < 0) throw std::domain_error("enumerate_partitions: negative size");
    rec(size, size);
    return out;
}

// All strict partitions of size <= n (used as bracket enumeration domain).
inline const std::vector<Partition>& strict_partitions_up_to(int n) {
    static std::map<int, std::vector<Partition>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Partition> flat;
    for (int k = 0; k <= n; ++k)
        for (auto& p : enumerate_partitions(PartitionKind::Strict, k)) flat.push_back(std::move(p));
    return cache.emplace(n, std::move(flat)).first->second;
}

// Set partition of {0,...,n-1}, as block index per element.
struct SetPartition {
    std::vector<std::vector<int>> blocks;
    int length() const { return (int)blocks.size(); }
};

// All set partitions of {0,...,n-1} paired with their Moebius weight
// mu(alpha) = (-1)^{l(alpha)-1} (l(alpha)-1)!.
inline std::vector<std::pair<SetPartition, Integer>> set_partitions_with_mobius(int n) {
    if (n < 1) throw std::domain_error("set_partitions_with_mobius: n must be positive");
    std::vector<std::pair<SetPartition, Integer>> out;
    std::vector<int> assign(n, 0);
    std::function<void(int, int)> rec = [&](int i, int nblocks) {
        if (i == n) {
            SetPartition sp;
            sp.blocks.resize(nblocks);
            for (int j = 0; j < n; ++j) sp.blocks[assign[j]].push_back(j);
            Integer mu = factorial(nblocks - 1);
            if ((nblocks - 1) % 2) mu = -mu;
            out.emplace_back(std::move(sp), mu);
            return;
        }
        for (int b = 0; b <= nblocks; ++b) {
            assign[i] = b;
            rec(i + 1, std::max(nblocks, b + 1));
        }
    };
    rec(0, 0);
    return out;
}

} // namespace spinsv
