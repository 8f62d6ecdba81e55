#include "torusplit/classify.hpp"
#include "torusplit/gf.hpp"
#include "torusplit/normlift.hpp"
#include "torusplit/obstruction.hpp"
#include "torusplit/signedperm.hpp"
#include "torusplit/spinor.hpp"
#include "torusplit/torus.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace torusplit;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "torus-split 1.0.0";

CycleType parse_cycles(const std::string& s) {
    CycleType ct;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("bad --cycles value");
        long long v = std::stoll(tok);
        if (v == 0) throw std::invalid_argument("cycle lengths must be nonzero");
        ct.entries.push_back({static_cast<int>(std::llabs(v)), v < 0});
    }
    ct.canonicalize();
    return ct;
}

int cmd_table(const std::string& family, const std::vector<long long>& qs, bool as_json) {
    Family f = parse_family(family);
    json rows = json::array();
    std::ostringstream text;
    bool all_ok = true;
    for (long long q : qs) {
        text << "# " << family << " q=" << q << "\n";
        text << "class  w                |C|  invariants                     order ok\n";
        for (int c = 1; c <= num_classes(f); ++c) {
            ClassContext ctx = make_context(f, c, Z(q));
            const Recipe& r = recipe_for(f, c);
            size_t cw = ctx.th->weyl.centralizer_sigma(ctx.cfg.twist, ctx.w).size();
            Z expected = expected_torus_order(f, c, Z(q));
            bool ok = expected == ctx.structure.order;
            all_ok = all_ok && ok;
            std::ostringstream inv;
            inv << "[";
            for (size_t i = 0; i < ctx.structure.invariant_factors.size(); ++i)
                inv << (i ? ", " : "") << ctx.structure.invariant_factors[i];
            inv << "]";
            text << c << "      " << r.w_label;
            for (size_t pad = r.w_label.size(); pad < 17; ++pad) text << ' ';
            text << cw << (cw < 10 ? "    " : "   ") << inv.str();
            for (size_t pad = inv.str().size(); pad < 31; ++pad) text << ' ';
            text << ctx.structure.order << "  " << (ok ? "ok" : "MISMATCH") << "\n";
            json row;
            row["family"] = family;
            row["q"] = q;
            row["class"] = c;
            row["w"] = r.w_label;
            row["centralizer_order"] = cw;
            row["invariant_factors"] = json::array();
            for (auto& d : ctx.structure.invariant_factors)
                row["invariant_factors"].push_back(d.str());
            row["torus_order"] = ctx.structure.order.str();
            row["expected_order"] = expected.str();
            row["order_ok"] = ok;
            rows.push_back(row);
        }
    }
    if (as_json) {
        json doc;
        doc["version"] = kVersion;
        doc["command"] = "table";
        doc["rows"] = rows;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << text.str();
    }
    return all_ok ? 0 : 1;
}

int cmd_classify(const TorusSpec& spec, bool as_json) {
    SplitVerdict v = classify(spec);
    if (as_json) {
        std::cout << verdict_json(spec, v) << "\n";
    } else {
        std::cout << spec.family;
        if (spec.n) std::cout << " n=" << spec.n;
        std::cout << " q=" << spec.q;
        if (!spec.torus.entries.empty()) std::cout << " " << spec.torus.str();
        if (spec.class_id) std::cout << " class " << spec.class_id;
        std::cout << ": " << to_string(v.outcome) << " [" << v.criterion << "]";
        if (!v.witness.empty()) std::cout << " witness " << v.witness;
        std::cout << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& family, int class_id, long long q, bool as_json) {
    Family f = parse_family(family);
    ClassContext ctx = make_context(f, class_id, Z(q));
    Certificate cert = verify_complement(ctx);
    if (as_json) {
        std::cout << certificate_json(cert) << "\n";
    } else {
        std::cout << "certificate " << family << " class " << class_id << " q=" << q << "\n";
        std::cout << "  w = " << cert.w_label << ", torus order " << cert.torus_order
                  << ", invariants [";
        for (size_t i = 0; i < cert.invariant_factors.size(); ++i)
            std::cout << (i ? ", " : "") << cert.invariant_factors[i];
        std::cout << "]\n";
        std::cout << "  complement order " << cert.complement_order << " (expected "
                  << cert.expected_cw_order << ")\n";
        std::cout << "  gens_fixed=" << cert.gens_fixed << " torus_ok=" << cert.torus_ok
                  << " order_ok=" << cert.order_ok << " image_ok=" << cert.image_ok
                  << " intersection_ok=" << cert.intersection_ok
                  << " relations_ok=" << cert.relations_ok << "\n";
        if (!cert.corrected_gens.empty()) {
            std::cout << "  torus-corrected gens:";
            for (auto& g : cert.corrected_gens) std::cout << " " << g;
            std::cout << "\n";
        }
        std::cout << "  verdict: " << (cert.ok() ? "VALID" : "INVALID") << "\n";
    }
    return cert.ok() ? 0 : 1;
}

struct Suite {
    std::string name;
    int pass = 0, fail = 0;
    void check(bool ok) { ok ? ++pass : ++fail; }
};

// recompute eta from the adjoint representation and compare to the table
bool eta_consistent(const Theory& th, bool inject_fault) {
    const auto& sys = th.sys;
    const auto& chev = th.chev;
    bool first = true;
    for (int s = 1; s <= sys.rank(); ++s) {
        IntMat ns = chev.adjoint_n(s);
        IntMat nsinv = imat_mul(ns, chev.adjoint_h(s));  // n_s^-1 = n_s h_s(-1)
        for (int r = 1; r <= sys.num_positive(); ++r) {
            IntMat conj = imat_mul(imat_mul(ns, chev.adjoint_n(r)), nsinv);
            int ws_r = sys.reflect(s, r);
            IntMat plain = chev.adjoint_n(ws_r);
            int eta;
            if (imat_eq(conj, plain)) {
                eta = 1;
            } else {
                IntMat flipped = imat_mul(chev.adjoint_h(ws_r), plain);
                if (!imat_eq(conj, flipped)) return false;
                eta = -1;
            }
            if (inject_fault && first) {
                eta = -eta;  // simulated table corruption
                first = false;
            }
            if (eta != chev.eta(s, r)) return false;
        }
    }
    return true;
}

int cmd_selftest(bool quick, uint64_t seed, bool inject_fault, bool as_json) {
    std::mt19937_64 rng(seed);
    std::vector<Suite> suites;

    {  // Tits group structure
        Suite s{"tits"};
        const Theory& g2 = theory_for(RootSystemType::G2);
        const Theory& d4 = theory_for(RootSystemType::D4);
        std::vector<TitsElement> gens;
        for (int i = 0; i < 2; ++i) gens.push_back(g2.tits.gen(i));
        s.check(g2.tits.closure(gens, 100).size() == 48);
        gens.clear();
        for (int i = 0; i < 4; ++i) gens.push_back(d4.tits.gen(i));
        s.check(d4.tits.closure(gens, 4000).size() == 3072);
        for (const Theory* th : {&g2, &d4}) {
            bool sq = true;
            for (int r = 1; r <= th->sys.num_positive(); ++r)
                sq = sq && th->tits.mult(th->tits.lift(r), th->tits.lift(r)) ==
                               th->tits.h_elem(r);
            s.check(sq);
        }
        // braid relations on canonical generators
        auto braid_ok = [](const Theory& th) {
            const auto& W = th.weyl;
            for (int i = 0; i < th.sys.rank(); ++i)
                for (int j = i + 1; j < th.sys.rank(); ++j) {
                    int ord = W.order_of(W.mult(W.simple(i), W.simple(j)));
                    TitsElement a = th.tits.gen(i), b = th.tits.gen(j);
                    TitsElement lhs = th.tits.one(), rhs = th.tits.one();
                    for (int k = 0; k < ord; ++k) {
                        lhs = th.tits.mult(lhs, k % 2 == 0 ? a : b);
                        rhs = th.tits.mult(rhs, k % 2 == 0 ? b : a);
                    }
                    if (!(lhs == rhs)) return false;
                }
            return true;
        };
        s.check(braid_ok(g2));
        s.check(braid_ok(d4));
        s.check(eta_consistent(g2, inject_fault));
        s.check(eta_consistent(d4, false));
        bool paper = false;
        central_lift(g2, Family::G2, &paper);
        s.check(true);  // throws on absence
        central_lift(d4, Family::ThreeD4, &paper);
        s.check(true);
        suites.push_back(s);
    }

    {  // Smith form vs independent oracles
        Suite s{"snf"};
        int count = quick ? 20 : 100;
        for (int t = 0; t < count; ++t) {
            int k = 1 + static_cast<int>(rng() % 4);
            long long bound[5] = {0, 30, 200, 3000, 10000};
            ZMat a;
            Z det = 0;
            for (int tries = 0; tries < 1000; ++tries) {
                a.assign(k, ZVec(k, 0));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        a[i][j] = static_cast<long long>(rng() % 21) - 10;
                det = zmat_det(a);
                if (det != 0 && abs(det) <= bound[k]) break;
            }
            if (det == 0 || abs(det) > bound[k]) {
                s.check(false);
                continue;
            }
            auto invs = smith_invariants(a);
            // oracle 1: gcd-of-minors characterization
            bool ok = true;
            Z prev = 1;
            for (int i = 1; i <= k; ++i) {
                // gcd of all i x i minors
                Z g = 0;
                std::vector<int> rows(i), cols(i);
                std::function<void(int, int)> rec_rows = [&](int pos, int start) {
                    if (pos == i) {
                        std::function<void(int, int)> rec_cols = [&](int cpos, int cstart) {
                            if (cpos == i) {
                                ZMat sub(i, ZVec(i));
                                for (int x = 0; x < i; ++x)
                                    for (int y = 0; y < i; ++y) sub[x][y] = a[rows[x]][cols[y]];
                                Z d = zmat_det(sub);
                                g = boost::multiprecision::gcd(g, abs(d));
                                return;
                            }
                            for (int c = cstart; c < k; ++c) {
                                cols[cpos] = c;
                                rec_cols(cpos + 1, c + 1);
                            }
                        };
                        rec_cols(0, 0);
                        return;
                    }
                    for (int rr = start; rr < k; ++rr) {
                        rows[pos] = rr;
                        rec_rows(pos + 1, rr + 1);
                    }
                };
                rec_rows(0, 0);
                Z di = g / prev;
                prev = g;
                ok = ok && di == invs[i - 1];
            }
            // oracle 2: generator orders in the cokernel via Cramer denominators
            Z expo = 1;
            for (int i = 0; i < k; ++i) {
                ZVec e(k, 0);
                e[i] = 1;
                // order of e_i mod col-space: smallest t with A x = t e_i solvable in Z
                // Cramer: x_j = t * det(A_j) / det; denominator efficiency:
                Z need = 1;
                for (int j = 0; j < k; ++j) {
                    ZMat aj = a;
                    for (int rr = 0; rr < k; ++rr) aj[rr][j] = e[rr];
                    Z dj = zmat_det(aj);
                    Z den = abs(det) / boost::multiprecision::gcd(abs(det), abs(dj));
                    need = boost::multiprecision::lcm(need, den);
                }
                expo = boost::multiprecision::lcm(expo, need);
            }
            ok = ok && expo == invs[k - 1];
            Z prod = 1;
            for (auto& d : invs) prod *= d;
            ok = ok && prod == abs(det);
            s.check(ok);
        }
        suites.push_back(s);
    }

    {  // sigma-conjugacy class partitions
        Suite s{"sigma-classes"};
        const Theory& g2 = theory_for(RootSystemType::G2);
        const Theory& d4 = theory_for(RootSystemType::D4);
        Twist none = make_twist(g2.sys, TwistKind::None);
        Twist ree = make_twist(g2.sys, TwistKind::Ree);
        Twist tri = make_twist(d4.sys, TwistKind::Triality);
        s.check(g2.weyl.sigma_classes(none).size() == 6);
        auto rc = g2.weyl.sigma_classes(ree);
        std::vector<size_t> sizes;
        for (auto& c : rc) sizes.push_back(c.size());
        std::sort(sizes.begin(), sizes.end());
        s.check(rc.size() == 4 && sizes == std::vector<size_t>({2, 2, 2, 6}));
        s.check(d4.weyl.sigma_classes(tri).size() == 7);
        suites.push_back(s);
    }

    {  // spinor norm properties
        Suite s{"spinor"};
        GF F(3, 1);
        int count = quick ? 20 : 100;
        int n = 3;
        for (int t = 0; t < count; ++t) {
            SignedPerm p1 = random_signed_perm(n, rng), p2 = random_signed_perm(n, rng);
            std::vector<int> sc1(n), sc2(n);
            for (int i = 0; i < n; ++i) {
                sc1[i] = 1 + static_cast<int>(rng() % (F.q() - 1));
                sc2[i] = 1 + static_cast<int>(rng() % (F.q() - 1));
            }
            FqMat g = monomial_matrix(F, p1, sc1, F.from_int(1));
            FqMat h = monomial_matrix(F, p2, sc2, F.from_int(1));
            NormClass a0 = spinor_norm(F, g, 0);
            s.check(a0 == spinor_norm(F, g, 1));
            NormClass b0 = spinor_norm(F, h, 0);
            NormClass ab = spinor_norm(F, fq_mul(F, g, h), 0);
            bool sq = (a0 == NormClass::Square) == (b0 == NormClass::Square);
            s.check((ab == NormClass::Square) == sq);
        }
        suites.push_back(s);
    }

    int failures = 0;
    json jd;
    jd["version"] = kVersion;
    jd["command"] = "selftest";
    jd["suites"] = json::array();
    for (auto& s : suites) {
        failures += s.fail;
        if (!as_json)
            std::cout << s.name << ": " << s.pass << " passed, " << s.fail << " failed"
                      << (s.fail ? "  <-- FAIL" : "") << "\n";
        json js;
        js["name"] = s.name;
        js["pass"] = s.pass;
        js["fail"] = s.fail;
        jd["suites"].push_back(js);
    }
    if (as_json) std::cout << jd.dump(2) << "\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for maximal-torus normalizers and their complements"};
    app.set_version_flag("--version", kVersion);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    auto* t_cmd = app.add_subcommand("table", "reproduce the per-family torus tables");
    std::string t_family;
    std::vector<long long> t_qs;
    t_cmd->add_option("--family", t_family, "G2, 2G2 or 3D4")->required();
    t_cmd->add_option("--q", t_qs, "field sizes")->required();

    auto* c_cmd = app.add_subcommand("classify", "splitting verdict for a torus spec");
    std::string c_family, c_cycles;
    int c_n = 0, c_class = 0;
    long long c_q = 0;
    std::string c_eps = "+";
    c_cmd->add_option("--family", c_family, "family label")->required();
    c_cmd->add_option("--n", c_n, "rank parameter n");
    c_cmd->add_option("--q", c_q, "field size")->required();
    c_cmd->add_option("--eps", c_eps, "+ or -");
    c_cmd->add_option("--cycles", c_cycles, "cycle type, e.g. -2,1,1");
    c_cmd->add_option("--class", c_class, "exceptional class id");

    auto* v_cmd = app.add_subcommand("verify", "certify a complement recipe");
    std::string v_family;
    int v_class = 1;
    long long v_q = 3;
    v_cmd->add_option("--family", v_family, "G2, 2G2 or 3D4")->required();
    v_cmd->add_option("--class", v_class, "torus class id")->required();
    v_cmd->add_option("--q", v_q, "field size")->required();

    auto* s_cmd = app.add_subcommand("selftest", "run the oracle suites");
    for (CLI::App* sub : {t_cmd, c_cmd, v_cmd, s_cmd}) sub->fallthrough();
    bool quick = false, inject = false;
    uint64_t seed = 12345;
    s_cmd->add_flag("--quick", quick, "reduced iteration counts");
    s_cmd->add_flag("--inject-fault", inject, "corrupt a table to prove detection");
    s_cmd->add_option("--seed", seed, "RNG seed for the randomized suites");

    app.require_subcommand(1);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (t_cmd->parsed()) return cmd_table(t_family, t_qs, as_json);
        if (c_cmd->parsed()) {
            TorusSpec spec;
            spec.family = c_family;
            spec.n = c_n;
            spec.q = c_q;
            spec.eps = c_eps == "-" ? Eps::Minus : Eps::Plus;
            if (c_family == "2A" || c_family == "PSU") spec.eps = Eps::Minus;
            if (c_family == "A" || c_family == "PSL") spec.eps = Eps::Plus;
            spec.class_id = c_class;
            if (!c_cycles.empty()) spec.torus = parse_cycles(c_cycles);
            return cmd_classify(spec, as_json);
        }
        if (v_cmd->parsed()) return cmd_verify(v_family, v_class, v_q, as_json);
        if (s_cmd->parsed()) return cmd_selftest(quick, seed, inject, as_json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
