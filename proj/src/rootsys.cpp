#include "torusplit/rootsys.hpp"

#include <algorithm>

namespace torusplit {

RootSystemType parse_root_system_type(const std::string& label) {
    if (label == "G2") return RootSystemType::G2;
    if (label == "D4") return RootSystemType::D4;
    throw std::invalid_argument("unknown root system: " + label);
}

std::string to_string(RootSystemType t) {
    return t == RootSystemType::G2 ? "G2" : "D4";
}

RootSystem RootSystem::build(RootSystemType type) {
    RootSystem sys;
    sys.type_ = type;
    if (type == RootSystemType::G2) {
        sys.rank_ = 2;
        // r1 short, r2 long
        sys.cartan_ = {{2, -1}, {-3, 2}};
        sys.half_norms_ = {1, 3};
        const std::vector<std::vector<int>> pos = {
            {1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
        for (int i = 0; i < 6; ++i) {
            Root r;
            r.index = i + 1;
            r.coeffs = pos[i];
            sys.positive_.push_back(r);
        }
    } else {
        sys.rank_ = 4;
        // r2 is the central node
        sys.cartan_ = {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
        sys.half_norms_ = {1, 1, 1, 1};
        sys.symmetry_ = {3, 2, 4, 1};  // rho: r1 -> r3 -> r4 -> r1, r2 fixed
        const std::vector<std::vector<int>> pos = {
            {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
            {1, 1, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 1}, {1, 1, 1, 0},
            {1, 1, 0, 1}, {0, 1, 1, 1}, {1, 1, 1, 1}, {1, 2, 1, 1}};
        for (int i = 0; i < 12; ++i) {
            Root r;
            r.index = i + 1;
            r.coeffs = pos[i];
            sys.positive_.push_back(r);
        }
    }
    for (auto& r : sys.positive_) {
        r.is_long = sys.inner_twice(r.coeffs, r.coeffs) / 4 > 1;
        sys.index_by_coeffs_[r.coeffs] = r.index;
    }
    return sys;
}

int RootSystem::inner_twice(const std::vector<int>& a, const std::vector<int>& b) const {
    // 2*(a, b) with (r_i, r_j) = half_norms_[j] * cartan_[i][j]
    // (r_i, r_j) = d_j c_ij, so 2 (a, b) = 2 sum a_i b_j d_j c_ij
    int s = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            s += a[i] * b[j] * half_norms_[j] * cartan_[i][j];
    return 2 * s;
}

const Root& RootSystem::root(int signed_index) const {
    int a = signed_index > 0 ? signed_index : -signed_index;
    if (a < 1 || a > num_positive()) throw std::out_of_range("root index");
    return positive_[a - 1];
}

int RootSystem::find(const std::vector<int>& coeffs) const {
    auto it = index_by_coeffs_.find(coeffs);
    if (it != index_by_coeffs_.end()) return it->second;
    std::vector<int> neg(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) neg[i] = -coeffs[i];
    it = index_by_coeffs_.find(neg);
    if (it != index_by_coeffs_.end()) return -it->second;
    return 0;
}

int RootSystem::half_norm(int r) const {
    const Root& rr = root(r);
    return inner_twice(rr.coeffs, rr.coeffs) / 4;
}

int RootSystem::pairing(int r, int s) const {
    const Root& rr = root(r);
    const Root& ss = root(s);
    int sr = r > 0 ? 1 : -1;
    int sss = s > 0 ? 1 : -1;
    int tw = inner_twice(rr.coeffs, ss.coeffs);  // 2*(|r|,|s|)
    return sr * sss * tw / (2 * half_norm(s));
}

int RootSystem::reflect(int s, int r) const {
    int c = pairing(r, s);
    const Root& rr = root(r);
    const Root& ss = root(s);
    int sr = r > 0 ? 1 : -1;
    int ssg = s > 0 ? 1 : -1;
    std::vector<int> out(rank_);
    for (int i = 0; i < rank_; ++i)
        out[i] = sr * rr.coeffs[i] - c * ssg * ss.coeffs[i];
    int idx = find(out);
    if (idx == 0) throw std::logic_error("reflection left the root system");
    return idx;
}

std::vector<int> RootSystem::coroot_coeffs(int r) const {
    const Root& rr = root(r);
    int sgn = r > 0 ? 1 : -1;
    int dr = half_norm(r);
    std::vector<int> out(rank_);
    for (int i = 0; i < rank_; ++i) {
        int num = sgn * rr.coeffs[i] * half_norms_[i];
        if (num % dr != 0) throw std::logic_error("non-integral coroot coefficient");
        out[i] = num / dr;
    }
    return out;
}

int RootSystem::apply_symmetry(int r) const {
    if (!has_symmetry()) throw std::logic_error("root system has no diagram symmetry");
    const Root& rr = root(r);
    std::vector<int> out(rank_, 0);
    for (int i = 0; i < rank_; ++i) {
        int img = symmetry_[i];  // 1-based
        out[img - 1] += rr.coeffs[i];
    }
    int idx = find(out);
    if (idx == 0) throw std::logic_error("symmetry left the root system");
    return r > 0 ? idx : -idx;
}

int RootSystem::height(int r) const {
    const Root& rr = root(r);
    int h = 0;
    for (int c : rr.coeffs) h += c;
    return r > 0 ? h : -h;
}

int RootSystem::flat(int signed_index) const {
    int n = num_positive();
    if (signed_index > 0) return signed_index - 1;
    return n + (-signed_index) - 1;
}

int RootSystem::unflat(int flat_index) const {
    int n = num_positive();
    if (flat_index < n) return flat_index + 1;
    return -(flat_index - n + 1);
}

}  // namespace torusplit
