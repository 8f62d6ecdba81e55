#include "torusplit/signedperm.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace torusplit {

SignedPerm SignedPerm::identity(int n) {
    SignedPerm p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 1);
    return p;
}

int SignedPerm::apply(int i) const {
    assert(i != 0 && std::abs(i) <= n());
    return i > 0 ? img[i - 1] : -img[-i - 1];
}

SignedPerm SignedPerm::compose(const SignedPerm& other) const {
    assert(n() == other.n());
    SignedPerm r;
    r.img.resize(img.size());
    for (int i = 1; i <= n(); ++i) r.img[i - 1] = apply(other.apply(i));
    return r;
}

SignedPerm SignedPerm::inverse() const {
    SignedPerm r;
    r.img.resize(img.size());
    for (int i = 1; i <= n(); ++i) {
        int j = img[i - 1];
        if (j > 0)
            r.img[j - 1] = i;
        else
            r.img[-j - 1] = -i;
    }
    return r;
}

bool SignedPerm::is_even() const { return cycle_type(*this).negative_count() % 2 == 0; }

int CycleType::n() const {
    int s = 0;
    for (auto& [len, neg] : entries) s += len;
    return s;
}

int CycleType::negative_count() const {
    int k = 0;
    for (auto& [len, neg] : entries)
        if (neg) ++k;
    return k;
}

void CycleType::canonicalize() {
    std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second;  // negatives first
        return a.first < b.first;
    });
}

std::string CycleType::str() const {
    std::ostringstream os;
    for (auto& [len, neg] : entries) os << '(' << len << (neg ? "-" : "") << ')';
    return os.str();
}

CycleType cycle_type(const SignedPerm& phi) {
    CycleType ct;
    int n = phi.n();
    std::vector<bool> seen(n + 1, false);
    for (int i = 1; i <= n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        bool neg = false;
        int j = i;
        for (;;) {
            seen[std::abs(j)] = true;
            ++len;
            j = phi.apply(j);
            if (std::abs(j) == i) {
                neg = (j == -i);
                break;
            }
        }
        ct.entries.push_back({len, neg});
    }
    ct.canonicalize();
    return ct;
}

std::vector<int> window_offsets(const CycleType& ct) {
    std::vector<int> off;
    int t = 0;
    for (auto& [len, neg] : ct.entries) {
        off.push_back(t);
        t += len;
    }
    return off;
}

SignedPerm standard_element(const CycleType& ct) {
    SignedPerm p = SignedPerm::identity(ct.n());
    int t = 0;
    for (auto& [len, neg] : ct.entries) {
        for (int j = 1; j < len; ++j) p.img[t + j - 1] = t + j + 1;
        p.img[t + len - 1] = neg ? -(t + 1) : (t + 1);
        t += len;
    }
    return p;
}

SignedPerm make_omega(const CycleType& ct, int i) {
    auto off = window_offsets(ct);
    int t = off[i], len = ct.entries[i].first;
    SignedPerm p = SignedPerm::identity(ct.n());
    for (int j = 1; j < len; ++j) p.img[t + j - 1] = t + j + 1;
    p.img[t + len - 1] = t + 1;
    return p;
}

SignedPerm make_varpi(const CycleType& ct, int i) {
    // single 2 len cycle (t+1, ..., t+len, -(t+1), ..., -(t+len))
    auto off = window_offsets(ct);
    int t = off[i], len = ct.entries[i].first;
    SignedPerm p = SignedPerm::identity(ct.n());
    for (int j = 1; j < len; ++j) p.img[t + j - 1] = t + j + 1;
    p.img[t + len - 1] = -(t + 1);
    return p;
}

SignedPerm make_tau(const CycleType& ct, int i) {
    auto off = window_offsets(ct);
    int t = off[i], len = ct.entries[i].first;
    SignedPerm p = SignedPerm::identity(ct.n());
    for (int j = 0; j < len; ++j) p.img[t + j] = -(t + j + 1);
    return p;
}

SignedPerm make_chi(const CycleType& ct, int i) {
    auto off = window_offsets(ct);
    if (ct.entries[i].first != ct.entries[i + 1].first)
        throw std::invalid_argument("chi requires equal adjacent windows");
    int t = off[i], len = ct.entries[i].first;
    SignedPerm p = SignedPerm::identity(ct.n());
    for (int j = 0; j < len; ++j) {
        p.img[t + j] = t + len + j + 1;
        p.img[t + len + j] = t + j + 1;
    }
    return p;
}

std::vector<SignedPerm> centralizer_generators(const CycleType& ct) {
    std::vector<SignedPerm> gens;
    int m = static_cast<int>(ct.entries.size());
    for (int i = 0; i < m; ++i) {
        if (ct.entries[i].second) {
            gens.push_back(make_varpi(ct, i));
        } else {
            if (ct.entries[i].first > 1) gens.push_back(make_omega(ct, i));
            gens.push_back(make_tau(ct, i));
        }
        if (i + 1 < m && ct.entries[i] == ct.entries[i + 1]) gens.push_back(make_chi(ct, i));
    }
    return gens;
}

long long centralizer_order_formula(const CycleType& ct) {
    long long total = 1;
    std::map<std::pair<int, bool>, long long> counts;
    for (auto& e : ct.entries) counts[e]++;
    for (auto& [part, cnt] : counts) {
        for (long long c = 0; c < cnt; ++c) total *= 2LL * part.first;
        for (long long c = 2; c <= cnt; ++c) total *= c;
    }
    return total;
}

std::vector<SignedPerm> all_signed_perms(int n) {
    std::vector<SignedPerm> out;
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 1);
    do {
        for (int mask = 0; mask < (1 << n); ++mask) {
            SignedPerm p;
            p.img.resize(n);
            for (int i = 0; i < n; ++i) p.img[i] = (mask >> i & 1) ? -base[i] : base[i];
            out.push_back(std::move(p));
        }
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

std::vector<SignedPerm> group_closure(const std::vector<SignedPerm>& gens, int n) {
    std::set<SignedPerm> seen;
    std::vector<SignedPerm> queue{SignedPerm::identity(n)};
    seen.insert(queue[0]);
    for (size_t head = 0; head < queue.size(); ++head) {
        SignedPerm cur = queue[head];
        for (const auto& g : gens) {
            SignedPerm next = g.compose(cur);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return queue;
}

SignedPerm random_signed_perm(int n, std::mt19937_64& rng) {
    SignedPerm p = SignedPerm::identity(n);
    for (int i = n - 1; i > 0; --i) {
        std::uniform_int_distribution<int> d(0, i);
        std::swap(p.img[i], p.img[d(rng)]);
    }
    for (int i = 0; i < n; ++i)
        if (rng() & 1) p.img[i] = -p.img[i];
    return p;
}

}  // namespace torusplit
