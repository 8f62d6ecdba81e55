#include "torusplit/weyl.hpp"

#include <algorithm>
#include <set>

namespace torusplit {

Twist make_twist(const RootSystem& sys, TwistKind kind) {
    Twist tw;
    tw.kind = kind;
    if (kind == TwistKind::None) return tw;
    int n = sys.num_positive();
    tw.root_image.resize(n);
    if (kind == TwistKind::Triality) {
        if (!sys.has_symmetry())
            throw std::invalid_argument("triality needs a diagram symmetry");
        for (int r = 1; r <= n; ++r) tw.root_image[r - 1] = sys.apply_symmetry(r);
    } else {
        if (sys.type() != RootSystemType::G2)
            throw std::invalid_argument("Ree twist is specific to G2");
        // The exceptional symmetry swapping short and long roots.
        tw.root_image = {2, 1, 5, 6, 3, 4};
    }
    for (int i = 0; i < sys.rank(); ++i)
        tw.simple_image.push_back(tw.root_image[i]);
    return tw;
}

WeylGroup::WeylGroup(const RootSystem& sys) : sys_(&sys) {
    int l = sys.rank();
    int m = sys.num_roots();
    std::vector<int16_t> id(m);
    for (int i = 0; i < m; ++i) id[i] = static_cast<int16_t>(i);
    perms_.push_back(id);
    words_.push_back({});
    id_by_perm_[id] = 0;

    std::vector<std::vector<int16_t>> gens;
    for (int i = 0; i < l; ++i) {
        std::vector<int16_t> p(m);
        for (int f = 0; f < m; ++f) {
            int r = sys.unflat(f);
            p[f] = static_cast<int16_t>(sys.flat(sys.reflect(i + 1, r)));
        }
        gens.push_back(p);
    }

    // BFS over right multiplication; first discovery fixes the canonical
    // reduced word (shortest, lexicographically smallest generator choice).
    for (size_t head = 0; head < perms_.size(); ++head) {
        std::vector<int16_t> cur = perms_[head];
        std::vector<int> cw = words_[head];
        for (int i = 0; i < l; ++i) {
            std::vector<int16_t> nxt(m);
            // (w * s_i)(r) = w(s_i(r))
            for (int f = 0; f < m; ++f) nxt[f] = cur[gens[i][f]];
            if (id_by_perm_.count(nxt)) continue;
            id_by_perm_[nxt] = static_cast<int>(perms_.size());
            perms_.push_back(nxt);
            std::vector<int> w = cw;
            w.push_back(i);
            words_.push_back(std::move(w));
        }
    }

    simple_.resize(l);
    for (int i = 0; i < l; ++i) simple_[i] = id_by_perm_.at(gens[i]);

    int n = size();
    mult_table_.assign(n, std::vector<int>(n));
    inv_table_.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            std::vector<int16_t> p(m);
            for (int f = 0; f < m; ++f) p[f] = perms_[a][perms_[b][f]];
            int c = lookup(p);
            mult_table_[a][b] = c;
            if (c == 0) inv_table_[a] = b;
        }
    }
}

int WeylGroup::lookup(const std::vector<int16_t>& p) const {
    auto it = id_by_perm_.find(p);
    if (it == id_by_perm_.end()) throw std::logic_error("permutation not in Weyl group");
    return it->second;
}

int WeylGroup::mult(int a, int b) const { return mult_table_[a][b]; }
int WeylGroup::inverse(int a) const { return inv_table_[a]; }

int WeylGroup::act(int w, int signed_root) const {
    return sys_->unflat(perms_[w][sys_->flat(signed_root)]);
}

int WeylGroup::reflection(int signed_root) const {
    int m = sys_->num_roots();
    std::vector<int16_t> p(m);
    for (int f = 0; f < m; ++f) {
        int r = sys_->unflat(f);
        p[f] = static_cast<int16_t>(sys_->flat(sys_->reflect(signed_root, r)));
    }
    return lookup(p);
}

int WeylGroup::order_of(int w) const {
    int k = 1, x = w;
    while (x != 0) {
        x = mult(x, w);
        ++k;
    }
    return k;
}

int WeylGroup::longest_element() const {
    int best = 0;
    for (int w = 0; w < size(); ++w)
        if (length(w) > length(best)) best = w;
    return best;
}

int WeylGroup::twist_element(const Twist& tw, int w) const {
    if (tw.kind == TwistKind::None) return w;
    int npos = sys_->num_positive();
    std::vector<int> rho_inv(npos + 1);
    for (int r = 1; r <= npos; ++r) rho_inv[tw.root_image[r - 1]] = r;
    int m = sys_->num_roots();
    std::vector<int16_t> p(m);
    for (int f = 0; f < m; ++f) {
        int r = sys_->unflat(f);
        // w^sigma(r) = rho(w(rho^-1(r)))
        int pre = r > 0 ? rho_inv[r] : -rho_inv[-r];
        p[f] = static_cast<int16_t>(sys_->flat(tw.apply(act(w, pre))));
    }
    return lookup(p);
}

std::vector<std::vector<int>> WeylGroup::coroot_action(int w) const {
    int l = sys_->rank();
    std::vector<std::vector<int>> mtx(l, std::vector<int>(l, 0));
    for (int i = 0; i < l; ++i) {
        auto col = sys_->coroot_coeffs(act(w, i + 1));
        for (int j = 0; j < l; ++j) mtx[j][i] = col[j];
    }
    return mtx;
}

std::vector<std::vector<int>> WeylGroup::sigma_classes(const Twist& tw) const {
    int n = size();
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> out;
    for (int w = 0; w < n; ++w) {
        if (cls[w] >= 0) continue;
        std::vector<int> members;
        for (int x = 0; x < n; ++x) {
            int y = mult(mult(inverse(x), w), twist_element(tw, x));
            if (cls[y] < 0) {
                cls[y] = static_cast<int>(out.size());
                members.push_back(y);
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

std::vector<int> WeylGroup::centralizer_sigma(const Twist& tw, int w) const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x)
        if (mult(mult(inverse(x), w), twist_element(tw, x)) == w) out.push_back(x);
    return out;
}

}  // namespace torusplit
