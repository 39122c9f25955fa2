#include "asmdpp/verify.hpp"

#include "asmdpp/asm.hpp"
#include "asmdpp/dpp.hpp"
#include "asmdpp/formulas.hpp"
#include "asmdpp/lattice_paths.hpp"
#include "asmdpp/matrices.hpp"
#include "asmdpp/oscillating.hpp"
#include "asmdpp/serialize.hpp"
#include "asmdpp/six_vertex.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <sstream>

namespace asmdpp {

namespace {

// Generating polynomial of ASM(3) as an unordered listing of its seven terms.
constexpr const char* kZ3Listing = "1+x^3z^2+x+x^2z^2+xz+x^2z+xyz";

// A check returns an empty string on success, otherwise what went wrong.
using CheckFn = std::function<std::string()>;

class SuiteBuilder {
public:
    explicit SuiteBuilder(std::string name) { report_.suite = std::move(name); }

    void check(const std::string& name, const std::string& params, const CheckFn& fn) {
        CheckResult r{name, params, false, "", 0};
        auto t0 = std::chrono::steady_clock::now();
        try {
            r.detail = fn();
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        report_.checks.push_back(std::move(r));
    }

    VerifyReport take() { return std::move(report_); }

private:
    VerifyReport report_;
};

std::string np(std::size_t n) { return "n=" + std::to_string(n); }

std::string expect(bool ok, const std::string& what) { return ok ? "" : what; }

std::size_t cap(const VerifyOptions& o, std::size_t dflt) { return o.max_n.value_or(dflt); }

MultiPoly drop_y_terms(const MultiPoly& p) {
    MultiPoly r;
    for (const auto& [e, c] : p.terms())
        if (e[Y] == 0) r.add_term(e, c);
    return r;
}

VerifyReport suite_theorem1(const VerifyOptions& o) {
    SuiteBuilder s("theorem1");
    for (std::size_t n = 1; n <= cap(o, 6); ++n)
        s.check("asm = dpp = det", np(n), [n] {
            MultiPoly za = z_asm_brute(n), zd = z_dpp_brute(n), det = genfunc_det(n);
            if (za != zd) return std::string("ASM and DPP polynomials differ");
            return expect(zd == det, "determinant differs: " + det.to_string());
        });
    if (cap(o, 6) >= 3)
        s.check("n=3 string", np(3), [] {
            std::string got = genfunc_det(3).to_string(), want = MultiPoly::parse(kZ3Listing).to_string();
            return expect(got == want, got + " != " + want);
        });
    return s.take();
}

VerifyReport suite_counting(const VerifyOptions& o) {
    SuiteBuilder s("counting");
    for (std::size_t n = 1; n <= cap(o, 6); ++n) {
        s.check("totals", np(n), [n] {
            Integer a = enumerate_asms(n).size(), d = enumerate_dpps(n).size(), f = asm_total(n);
            return expect(a == f && d == f, "ASM " + a.get_str() + ", DPP " + d.get_str() + ", formula " + f.get_str());
        });
        s.check("refined", np(n), [n] {
            std::vector<Integer> ka(n, 0), kd(n, 0);
            for_each_asm(n, [&](const Asm& a) { ka[std::size_t(asm_stats(a).rho)] += 1; });
            for_each_dpp(n, [&](const Dpp& d) { kd[std::size_t(dpp_stats(d, n).rho)] += 1; });
            for (std::size_t k = 0; k < n; ++k) {
                Integer f = refined_total(n, k);
                if (ka[k] != f || kd[k] != f) return "k=" + std::to_string(k) + " mismatch";
            }
            return std::string();
        });
    }
    return s.take();
}

VerifyReport suite_table(const VerifyOptions& o) {
    SuiteBuilder s("table");
    const std::size_t top = cap(o, 6);
    for (std::size_t n = 1; n <= top; ++n) {
        s.check("cells agree", np(n), [n] {
            for (const TableRow& r : stat_table(n))
                if (!r.equal())
                    return "cell (" + std::to_string(r.p) + "," + std::to_string(r.m) + "," + std::to_string(r.k) + ")";
            return std::string();
        });
        s.check("special families", np(n), [n] {
            auto rows = stat_table(n);
            auto count = [&](int p, int m, int k) {
                for (const TableRow& r : rows)
                    if (r.p == p && r.m == m && r.k == k) return std::make_pair(r.asm_count, r.dpp_count);
                return std::make_pair(Integer(0), Integer(0));
            };
            const int ni = int(n);
            for (int m = 0; m <= ni - 3; ++m) {
                auto [a, d] = count(1, m, 0);
                if (a != ni - m - 2 || d != ni - m - 2) return "p=1 k=0 m=" + std::to_string(m);
            }
            for (int m = 0; m <= ni - 2; ++m) {
                auto [a, d] = count(1, m, 1);
                if (a != 1 || d != 1) return "p=1 k=1 m=" + std::to_string(m);
            }
            for (int k = 0; k <= ni - 1; ++k) {
                auto [a, d] = count(k * (k + 1) / 2, k * (ni - k - 1), k);
                if (a != 1 || d != 1) return "unique cell k=" + std::to_string(k);
            }
            return std::string();
        });
    }
    if (top >= 5)
        s.check("cell (3,1,2)", np(5), [] {
            for (const TableRow& r : stat_table(5))
                if (r.p == 3 && r.m == 1 && r.k == 2)
                    return expect(r.asm_count == 10 && r.dpp_count == 10, "counts " + r.asm_count.get_str());
            return std::string("cell missing");
        });
    if (top >= 3)
        s.check("n=3 cells", np(3), [] {
            auto rows = stat_table(3);
            bool ones = std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.asm_count == 1; });
            return expect(rows.size() == 7 && ones, "expected seven cells of size one");
        });
    if (top >= 4)
        s.check("n=4 repeated cell", np(4), [] {
            auto rows = stat_table(4);
            bool any = std::any_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.asm_count >= 2; });
            return expect(any, "no cell with two or more elements");
        });
    return s.take();
}

VerifyReport suite_sixvertex(const VerifyOptions& o) {
    SuiteBuilder s("sixvertex");
    for (std::size_t n = 1; n <= cap(o, 5); ++n)
        s.check("lemmas and bijection", np(n), [n] {
            std::string err;
            for_each_asm(n, [&](const Asm& a) {
                if (!err.empty()) return;
                SixVertexConfig c = asm_to_6v(a);
                TypeCounts t = type_counts(c), r = first_row_counts(c);
                AsmStats st = asm_stats(a);
                auto at = [](const TypeCounts& tc, VertexType v) { return tc[static_cast<std::size_t>(v)]; };
                bool ok = at(t, VertexType::a1) == st.nu && at(t, VertexType::a2) == st.nu &&
                          at(t, VertexType::c1) - int(n) == st.mu && at(t, VertexType::c2) == st.mu &&
                          at(t, VertexType::b1) == at(t, VertexType::b2) && at(r, VertexType::a1) == st.rho &&
                          six_v_to_asm(c) == a && sixvertex_from_json(to_json(c)) == c;
                if (!ok) err = "fails at " + a.to_compact();
            });
            return err;
        });
    return s.take();
}

VerifyReport suite_ik(const VerifyOptions& o) {
    SuiteBuilder s("ik");
    const std::size_t top = cap(o, 4);
    for (std::size_t n = 2; n <= top; ++n)
        s.check("determinant = partition function", np(n) + " points=20", [n, &o] {
            std::mt19937_64 rng(o.seed * 1000003 + n);
            for (int t = 0; t < 20; ++t) {
                IkPoint p = random_ik_point(n, rng);
                if (partition_function(p) != ik_determinant(p)) return "mismatch at trial " + std::to_string(t);
            }
            return std::string();
        });
    for (std::size_t n = 1; n <= top; ++n)
        s.check("specializations", np(n), [n, &o] {
            MultiPoly z = z_asm_brute(n);
            std::mt19937_64 rng(o.seed * 7919 + n);
            std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
            auto draw = [&] {
                int a = 0;
                while (a == 0) a = num(rng);
                return make_rational(a, den(rng));
            };
            int used = 0;
            for (int t = 0; t < 40 && used < 5; ++t) {
                Rational rho0 = draw(), sigma = draw(), q = draw();
                auto [a, b, c] = homogeneous_weights(rho0, q);
                if (a == 0 || b == 0 || c == 0) continue;
                if (vertex_weight(VertexType::a1, sigma, rho0, q) == 0 || vertex_weight(VertexType::b1, sigma, rho0, q) == 0)
                    continue;
                ++used;
                Rational h = homogeneous_from_generating(n, z, rho0, q);
                if (partition_function(homogeneous_point(n, rho0, q)) != h) return std::string("homogeneous mismatch");
                if (six_vertex_weight_det(n, a, b, c) != h) return std::string("weight determinant mismatch");
                if (partition_function(refined_point(n, sigma, rho0, q)) != refined_from_generating(n, z, sigma, rho0, q))
                    return std::string("refined mismatch");
            }
            return expect(used > 0, "no admissible sample points");
        });
    return s.take();
}

VerifyReport suite_lgv(const VerifyOptions& o) {
    SuiteBuilder s("lgv");
    for (std::size_t n = 1; n <= cap(o, 5); ++n) {
        s.check("path sums", np(n), [n] {
            for (bool refined : {false, true})
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        if (path_weight_sum(n, i, j, refined) != path_weight_sum_direct(n, i, j, refined))
                            return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            return std::string();
        });
        s.check("family sum = det", np(n), [n] {
            for (bool refined : {false, true})
                if (lgv_nilp_sum(n, refined) != nilp_family_sum(n, refined)) return std::string("mismatch");
            return std::string();
        });
        s.check("path bijections", np(n), [n] {
            std::string err;
            for_each_dpp(n, [&](const Dpp& d) {
                if (!err.empty()) return;
                PathFamily f = dpp_to_nilp(d, n), g = dpp_to_nilp_prime(d, n);
                PathStats a = nilp_statistics(f, n), b = nilp_prime_statistics(g, n);
                DppStats st = dpp_stats(d, n);
                bool ok = nilp_to_dpp(f, n) == d && nilp_prime_to_dpp(g, n) == d && a.above == st.nu &&
                          a.below == st.mu && a.top == st.rho && b.paths + b.above == st.nu && b.below == st.mu;
                if (!ok) err = "fails at " + d.to_compact();
            });
            return err;
        });
    }
    for (std::size_t n = 1; n <= cap(o, 6); ++n)
        s.check("det = DPP polynomial", np(n), [n] {
            PolyMatrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    m(i, j) = path_weight_sum(n, i, j, true) - (i == j + 1 ? pconst(1) : MultiPoly());
            return expect(det_poly(m) == z_dpp_brute(n), "mismatch");
        });
    return s.take();
}

VerifyReport suite_omega(const VerifyOptions& o) {
    SuiteBuilder s("omega");
    for (std::size_t n = 1; n <= cap(o, 6); ++n)
        s.check("symbolic relation", np(n), [n] {
            if (!check_omega_relation(n, true)) return std::string("refined relation fails");
            return expect(check_omega_relation(n, false), "unrefined relation fails");
        });
    for (std::size_t n = 2; n <= std::min<std::size_t>(cap(o, 6), 4); ++n)
        s.check("negative control", np(n), [n] {
            OmegaMatrix a = m_asm(n, true);
            a(n - 1, 0) += OmegaPoly(px());
            return expect(!omega_relation_holds(a, m_dpp(n, true)), "perturbed relation still holds");
        });
    for (std::size_t n = 1; n <= cap(o, 5); ++n)
        s.check("rational determinant", np(n) + " trials=20", [n, &o] {
            int bad = check_prop_asmdet_rational(n, 20, o.seed * 31 + n, true);
            bad += check_prop_asmdet_rational(n, 20, o.seed * 37 + n, false);
            return expect(bad == 0, std::to_string(bad) + " failing trials");
        });
    for (std::size_t n = 1; n <= cap(o, 4); ++n)
        s.check("spot check", np(n) + " points=10", [n, &o] {
            int bad = check_omega_spot(n, 10, o.seed * 41 + n);
            return expect(bad == 0, std::to_string(bad) + " failing points");
        });
    return s.take();
}

VerifyReport suite_aux(const VerifyOptions& o) {
    SuiteBuilder s("aux");
    for (std::size_t n = 1; n <= cap(o, 5); ++n) {
        s.check("matrix relations", np(n), [n] {
            for (bool refined : {false, true}) {
                if (!check_relation_prime(n, refined)) return std::string("(I-S)M' relation");
                if (!check_relation_dprime(n, refined)) return std::string("B(y)M'' relation");
                MultiPoly d = det_poly(m_bar(n, refined));
                if (det_poly(m_prime(n, refined)) != d) return std::string("det M'");
                if (det_poly(m_dprime(n, refined)) != d) return std::string("det M''");
            }
            return std::string();
        });
        s.check("w-refined determinant", np(n), [n] {
            return expect(genfunc_det_w(n) == z_dpp_brute_w(n), "mismatch");
        });
    }
    return s.take();
}

VerifyReport suite_oscillating(const VerifyOptions& o) {
    SuiteBuilder s("oscillating");
    const int pmax = 4;
    for (int p = 0; p <= pmax; ++p) {
        std::string pp = "p=" + std::to_string(p);
        s.check("count is (2p-1)!!", pp, [p] {
            Integer dbl = 1;
            for (int k = 1; k < 2 * p; k += 2) dbl *= k;
            return expect(Integer(enumerate_osc({}, std::size_t(2 * p)).size()) == dbl, "wrong count");
        });
        s.check("ascent distributions", pp, [p] {
            return expect(ascent_distribution_empty(p) == ascent_distribution_delta(p), "distributions differ");
        });
        s.check("nu counts", pp, [p, &o] {
            for (std::size_t n = 1; n <= cap(o, 6); ++n) {
                Integer a = 0, d = 0;
                for_each_asm(n, [&](const Asm& x) { a += asm_stats(x).nu == p; });
                for_each_dpp(n, [&](const Dpp& x) { d += dpp_stats(x, n).nu == p; });
                OscCounts c = osc_counts(n, p);
                if (c.asm_side != a || c.dpp_side != d) return "n=" + std::to_string(n);
            }
            return std::string();
        });
    }
    s.check("p=2 closed form", "p=2", [&o] {
        for (long n = 1; n <= long(cap(o, 6)); ++n)
            if (osc_counts(std::size_t(n), 2).asm_side != binom(n, 4) + 2 * binom(n + 1, 4)) return "n=" + std::to_string(n);
        return std::string();
    });
    return s.take();
}

VerifyReport suite_m0(const VerifyOptions& o) {
    SuiteBuilder s("m0");
    for (std::size_t n = 1; n <= cap(o, 6); ++n) {
        s.check("bijection", np(n), [n] {
            std::string err;
            for_each_asm(n, [&](const Asm& a) {
                if (!err.empty() || !a.is_permutation()) return;
                Dpp d = m0_asm_to_dpp(a);
                AsmStats st = asm_stats(a);
                if (!(dpp_stats(d, n) == DppStats{st.nu, st.mu, st.rho}) || !(m0_dpp_to_asm(d, n) == a))
                    err = "fails at " + a.to_compact();
            });
            return err;
        });
        s.check("mu = 0 polynomial", np(n), [n] {
            MultiPoly z0 = z_mu_zero(n);
            if (drop_y_terms(z_asm_brute(n)) != z0) return std::string("ASM side");
            return expect(drop_y_terms(z_dpp_brute(n)) == z0, "DPP side");
        });
    }
    return s.take();
}

VerifyReport suite_symmetry(const VerifyOptions& o) {
    SuiteBuilder s("symmetry");
    for (std::size_t n = 1; n <= cap(o, 5); ++n)
        s.check("reflection statistics", np(n), [n] {
            const int half = int(n * (n - 1) / 2);
            std::string err;
            for_each_asm(n, [&](const Asm& a) {
                if (!err.empty()) return;
                AsmStats st = asm_stats(a), r = asm_stats(a.reflect());
                if (!(r == AsmStats{half - st.nu - st.mu, st.mu, int(n) - 1 - st.rho}) || !(a.reflect().reflect() == a))
                    err = "fails at " + a.to_compact();
            });
            return err;
        });
    for (std::size_t n = 1; n <= cap(o, 6); ++n)
        s.check("DPP statistic multiset", np(n), [n] { return expect(dpp_symmetry_multiset_holds(n), "not symmetric"); });
    for (std::size_t k = 1; 2 * k + 1 <= cap(o, 5); ++k)
        s.check("vertically symmetric count", "order=" + std::to_string(2 * k + 1), [k] {
            Integer c = count_reflection_invariant(2 * k + 1), f = vsasm_total(k);
            bool known = k == 1 ? f == 1 : k == 2 ? f == 3 : true;
            return expect(c == f && known, "enumerated " + c.get_str() + ", formula " + f.get_str());
        });
    return s.take();
}

VerifyReport suite_parity(const VerifyOptions& o) {
    SuiteBuilder s("parity");
    for (std::size_t n = 1; n <= cap(o, 5); ++n) {
        s.check("Stanton identities", np(n), [n] {
            StantonCounts c = stanton_parity(n);
            if (c.even_minus_odd != c.half_turn) return std::string("half-turn identity");
            return expect(c.mod4_gap == c.quarter_turn, "quarter-turn identity");
        });
        s.check("isolated ones", np(n) + " m<=2", [n] {
            for (int m = 0; m <= 2; ++m) {
                Integer lhs = 0;
                for_each_asm(n, [&](const Asm& a) { lhs += asm_stats(a).mu == m; });
                if (lhs != isolated_ones_expansion(n, m)) return "m=" + std::to_string(m);
            }
            return std::string();
        });
    }
    for (std::size_t n = 1; n <= cap(o, 6); ++n)
        s.check("q-product", np(n), [n] { return expect(q_product(n) == q_sum_of_parts(n), "mismatch"); });
    return s.take();
}

VerifyReport suite_boundary(const VerifyOptions& o) {
    SuiteBuilder s("boundary");
    for (std::size_t n = 2; n <= cap(o, 6); ++n)
        s.check("z=0 reduces the order", np(n), [n] {
            if (z_asm_brute(n).specialize(Z, 0) != z_asm_brute(n - 1).specialize(Z, 1)) return std::string("ASM side");
            return expect(z_dpp_brute(n).specialize(Z, 0) == z_dpp_brute(n - 1).specialize(Z, 1), "DPP side");
        });
    return s.take();
}

const std::map<std::string, std::function<VerifyReport(const VerifyOptions&)>>& registry() {
    static const std::map<std::string, std::function<VerifyReport(const VerifyOptions&)>> r = {
        {"theorem1", suite_theorem1}, {"counting", suite_counting},       {"table", suite_table},
        {"sixvertex", suite_sixvertex}, {"ik", suite_ik},                 {"lgv", suite_lgv},
        {"omega", suite_omega},       {"aux", suite_aux},                 {"oscillating", suite_oscillating},
        {"m0", suite_m0},             {"symmetry", suite_symmetry},       {"parity", suite_parity},
        {"boundary", suite_boundary},
    };
    return r;
}

}  // namespace

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"theorem1", "counting", "table",       "sixvertex", "ik",
                                                   "lgv",      "omega",    "aux",         "oscillating", "m0",
                                                   "symmetry", "parity",   "boundary"};
    return names;
}

bool is_suite(const std::string& name) { return registry().count(name) > 0; }

VerifyReport run_suite(const std::string& name, const VerifyOptions& opts) {
    auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown suite '" + name + "'");
    return it->second(opts);
}

std::vector<VerifyReport> run_suites(const std::vector<std::string>& names, const VerifyOptions& opts) {
    std::vector<std::future<VerifyReport>> jobs;
    for (const auto& n : names) {
        if (!is_suite(n)) throw std::invalid_argument("unknown suite '" + n + "'");
        jobs.push_back(std::async(std::launch::async, [n, opts] { return run_suite(n, opts); }));
    }
    std::vector<VerifyReport> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

std::string format_text(const std::vector<VerifyReport>& reports, bool timing) {
    std::ostringstream os;
    std::size_t total = 0, failed = 0;
    for (const auto& r : reports)
        for (const auto& c : r.checks) {
            ++total;
            failed += !c.passed;
            os << (c.passed ? "PASS " : "FAIL ") << r.suite << ": " << c.name << " [" << c.params << "]";
            if (!c.passed) os << " -- " << c.detail;
            if (timing) os << " (" << static_cast<long>(c.elapsed_ms) << " ms)";
            os << '\n';
        }
    os << (failed ? "FAILED " : "OK ") << (total - failed) << "/" << total << " checks passed\n";
    return os.str();
}

std::string format_json(const std::vector<VerifyReport>& reports, bool timing) {
    json out = json::array();
    for (const auto& r : reports) {
        json checks = json::array();
        for (const auto& c : r.checks) {
            json jc = {{"name", c.name}, {"params", c.params}, {"status", c.passed ? "pass" : "fail"}};
            if (!c.passed) jc["detail"] = c.detail;
            if (timing) jc["elapsed_ms"] = c.elapsed_ms;
            checks.push_back(jc);
        }
        out.push_back({{"suite", r.suite}, {"status", r.passed() ? "pass" : "fail"}, {"checks", checks}});
    }
    return out.dump(2) + "\n";
}

}  // namespace asmdpp
