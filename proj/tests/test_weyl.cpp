#include "doctest.h"

#include "torusplit/rootsys.hpp"
#include "torusplit/weyl.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace torusplit;

TEST_CASE("Weyl group orders and longest elements") {
    RootSystem g2 = RootSystem::build(RootSystemType::G2);
    WeylGroup wg(g2);
    CHECK(wg.size() == 12);
    int w0 = wg.longest_element();
    CHECK(wg.length(w0) == 6);
    CHECK(wg.order_of(w0) == 2);
    for (int r = 1; r <= 6; r++) CHECK(wg.act(w0, r) == -r);  // -1 in W(G2)

    RootSystem d4 = RootSystem::build(RootSystemType::D4);
    WeylGroup wd(d4);
    CHECK(wd.size() == 192);
    int v0 = wd.longest_element();
    CHECK(wd.length(v0) == 12);
    for (int r = 1; r <= 12; r++) CHECK(wd.act(v0, r) == -r);
}

TEST_CASE("multiplication, words and reflections") {
    RootSystem g2 = RootSystem::build(RootSystemType::G2);
    WeylGroup wg(g2);
    for (int a = 0; a < wg.size(); a++) {
        CHECK(wg.mult(a, wg.inverse(a)) == wg.identity());
        // the stored word reproduces the element
        int acc = wg.identity();
        for (int gen : wg.word(a)) acc = wg.mult(acc, wg.simple(gen));
        CHECK(acc == a);
        for (int b = 0; b < wg.size(); b++)
            for (int r = 1; r <= 6; r++)
                CHECK(wg.act(wg.mult(a, b), r) == wg.act(a, wg.act(b, r)));
    }
    for (int r = 1; r <= 6; r++) {
        int w = wg.reflection(r);
        CHECK(wg.order_of(w) == 2);
        CHECK(wg.act(w, r) == -r);
        CHECK(wg.reflection(-r) == w);
        for (int s = 1; s <= 6; s++) CHECK(wg.act(w, s) == g2.reflect(r, s));
    }
}

TEST_CASE("coroot action is a homomorphism to GL(l, Z)") {
    RootSystem d4 = RootSystem::build(RootSystemType::D4);
    WeylGroup wd(d4);
    auto matmul = [](const std::vector<std::vector<int>>& x, const std::vector<std::vector<int>>& y) {
        int l = static_cast<int>(x.size());
        std::vector<std::vector<int>> r(l, std::vector<int>(l, 0));
        for (int i = 0; i < l; i++)
            for (int j = 0; j < l; j++)
                for (int k = 0; k < l; k++) r[i][j] += x[i][k] * y[k][j];
        return r;
    };
    std::vector<int> sample = {0, 1, 5, 17, 50, 191};
    for (int a : sample)
        for (int b : sample)
            CHECK(wd.coroot_action(wd.mult(a, b)) == matmul(wd.coroot_action(a), wd.coroot_action(b)));
    // identity maps to I
    std::vector<std::vector<int>> id(4, std::vector<int>(4, 0));
    for (int i = 0; i < 4; i++) id[i][i] = 1;
    CHECK(wd.coroot_action(0) == id);
}

TEST_CASE("twists") {
    RootSystem g2 = RootSystem::build(RootSystemType::G2);
    WeylGroup wg(g2);
    Twist ree = make_twist(g2, TwistKind::Ree);
    // the Ree twist exchanges long and short roots
    for (int r = 1; r <= 6; r++) CHECK(g2.root(ree.apply(r)).is_long != g2.root(r).is_long);
    // sigma is an automorphism of W: order 2 on W(G2)
    for (int w = 0; w < wg.size(); w++) {
        int tw = wg.twist_element(ree, w);
        CHECK(wg.twist_element(ree, tw) == w);
        for (int v = 0; v < wg.size(); v++)
            CHECK(wg.twist_element(ree, wg.mult(w, v)) ==
                  wg.mult(wg.twist_element(ree, w), wg.twist_element(ree, v)));
    }

    RootSystem d4 = RootSystem::build(RootSystemType::D4);
    WeylGroup wd(d4);
    Twist tri = make_twist(d4, TwistKind::Triality);
    for (int w = 0; w < wd.size(); w++) {
        int t1 = wd.twist_element(tri, w);
        int t3 = wd.twist_element(tri, wd.twist_element(tri, t1));
        CHECK(t3 == w);
    }
}

TEST_CASE("sigma-conjugacy classes") {
    RootSystem g2 = RootSystem::build(RootSystemType::G2);
    WeylGroup wg(g2);
    Twist none = make_twist(g2, TwistKind::None);
    auto plain = wg.sigma_classes(none);
    CHECK(plain.size() == 6);
    int total = 0;
    for (auto& c : plain) total += static_cast<int>(c.size());
    CHECK(total == 12);

    Twist ree = make_twist(g2, TwistKind::Ree);
    auto twisted = wg.sigma_classes(ree);
    CHECK(twisted.size() == 4);
    std::vector<int> sizes;
    for (auto& c : twisted) sizes.push_back(static_cast<int>(c.size()));
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{2, 2, 2, 6});

    RootSystem d4 = RootSystem::build(RootSystemType::D4);
    WeylGroup wd(d4);
    Twist tri = make_twist(d4, TwistKind::Triality);
    CHECK(wd.sigma_classes(tri).size() == 7);
}

TEST_CASE("twisted centralizers") {
    RootSystem g2 = RootSystem::build(RootSystemType::G2);
    WeylGroup wg(g2);
    Twist none = make_twist(g2, TwistKind::None);
    auto classes = wg.sigma_classes(none);
    // orbit-stabilizer: |class| * |C| = |W|
    for (auto& c : classes) {
        auto cent = wg.centralizer_sigma(none, c.front());
        CHECK(static_cast<int>(c.size() * cent.size()) == wg.size());
        for (int x : cent)
            CHECK(wg.mult(wg.inverse(x), wg.mult(c.front(), x)) == c.front());
    }
    RootSystem d4 = RootSystem::build(RootSystemType::D4);
    WeylGroup wd(d4);
    Twist tri = make_twist(d4, TwistKind::Triality);
    std::multiset<size_t> cents;
    for (auto& c : wd.sigma_classes(tri)) cents.insert(wd.centralizer_sigma(tri, c.front()).size());
    CHECK(cents == std::multiset<size_t>{12, 4, 4, 24, 24, 4, 12});
}
