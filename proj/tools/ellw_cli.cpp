// Command-line front end: evaluate core quantities, run the verification
// suites, check the q-KZ equation.  One JSON record per line; exit code 0
// iff every requested check passed, 2 on a parse/config error, 3 on a
// pole/domain error.
#include <CLI11.hpp>
#include <fstream>
#include <atomic>
#include <future>
#include <iostream>
#include <json.hpp>

#include "ellw/properties.hpp"
#include "ellw/rmatrix.hpp"
#include "ellw/qkz.hpp"
#include "ellw/rng.hpp"
#include "ellw/shuffle.hpp"

using namespace ellw;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json cnum(cplx z) {
    return ordered_json::array({z.real(), z.imag()});
}

struct RunConfig {
    double q = 0.6;
    double r = 6.0;
    double rstar = -1.0;  // default r - 1
    int K = 40;
    double tol = 1e-10;
    uint64_t seed = 20240501;
    int jobs = 1;
    int N = 2;
    int n = 2;
    int trials = 10;
    int nodes = 512;
    double kappa = -1.0;  // default: q^kappa = 0.5
    std::string word, word2;
    std::string shape, shape2;
    std::string json_out;
    std::string config_file;
    bool pretty = false;

    EllipticParams params() const {
        return EllipticParams(cplx(q, 0.0), r, rstar, K);
    }
    ordered_json echo() const {
        ordered_json j;
        j["q"] = q;
        j["r"] = r;
        j["rstar"] = rstar < 0 ? r - 1.0 : rstar;
        j["K"] = K;
        j["tol"] = tol;
        j["seed"] = seed;
        j["jobs"] = jobs;
        return j;
    }
};

// canonical serialization: the fields of RunConfig in fixed order
ordered_json config_to_json(const RunConfig& c) {
    ordered_json j = c.echo();
    j["N"] = c.N;
    j["n"] = c.n;
    j["trials"] = c.trials;
    j["nodes"] = c.nodes;
    j["kappa"] = c.kappa;
    if (!c.word.empty()) j["word"] = c.word;
    if (!c.word2.empty()) j["word2"] = c.word2;
    if (!c.shape.empty()) j["shape"] = c.shape;
    if (!c.shape2.empty()) j["shape2"] = c.shape2;
    return j;
}

void load_config_file(RunConfig& c) {
    if (c.config_file.empty()) return;
    std::ifstream in(c.config_file);
    if (!in) throw std::runtime_error("cannot open config " + c.config_file);
    json j = json::parse(in);
    if (j.contains("q")) c.q = j["q"];
    if (j.contains("r")) c.r = j["r"];
    if (j.contains("rstar")) c.rstar = j["rstar"];
    if (j.contains("K")) c.K = j["K"];
    if (j.contains("tol")) c.tol = j["tol"];
    if (j.contains("seed")) c.seed = j["seed"];
    if (j.contains("jobs")) c.jobs = j["jobs"];
    if (j.contains("N")) c.N = j["N"];
    if (j.contains("n")) c.n = j["n"];
    if (j.contains("trials")) c.trials = j["trials"];
    if (j.contains("nodes")) c.nodes = j["nodes"];
    if (j.contains("kappa")) c.kappa = j["kappa"];
    if (j.contains("word")) c.word = j["word"];
    if (j.contains("word2")) c.word2 = j["word2"];
    if (j.contains("shape")) c.shape = j["shape"];
    if (j.contains("shape2")) c.shape2 = j["shape2"];
}

/// evaluate fn over items on `jobs` workers; results keep item order
template <typename Item, typename Fn>
std::vector<double> parallel_map(const std::vector<Item>& items, Fn fn,
                                 int jobs) {
    std::vector<double> out(items.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
        return out;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= items.size()) break;
            out[i] = fn(items[i]);
        }
    };
    std::vector<std::future<void>> pool;
    for (int w = 0; w < jobs; ++w)
        pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
    return out;
}

class Report {
public:
    Report(const std::string& path, bool pretty) : pretty_(pretty) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open " + path);
        }
    }
    void line(const ordered_json& j) {
        std::ostream& os = file_.is_open() ? file_ : std::cout;
        if (!pretty_) {
            os << j.dump() << "\n";
            return;
        }
        // table rendering for check records; everything else indented
        if (j.contains("residual") && j.contains("case")) {
            char buf[256];
            std::snprintf(buf, sizeof(buf), "%-14s %-36s %10.3e %8.1e  %s",
                          j.value("suite", std::string("qkz")).c_str(),
                          j["case"].get<std::string>().c_str(),
                          j["residual"].get<double>(),
                          j["tolerance"].get<double>(),
                          j["pass"].get<bool>() ? "pass" : "FAIL");
            os << buf << "\n";
        } else {
            os << j.dump(2) << "\n";
        }
    }

private:
    std::ofstream file_;
    bool pretty_;
};

DynamicalParams sample_pi(int N, DetRng& rng) {
    std::vector<cplx> a(N);
    for (int j = 0; j < N; ++j)
        a[j] = cplx(1.7 * (N - j), 0.0) + rng.next_cplx(0.4, 0.25);
    return DynamicalParams(a);
}

std::vector<cplx> sample_u(int n, DetRng& rng) {
    std::vector<cplx> u(n);
    for (int a = 0; a < n; ++a)
        u[a] = cplx(0.31 * (a + 1), 0.17 * (a + 1)) + rng.next_cplx(0.05, 0.05);
    return u;
}

std::vector<LambdaShape> shapes_of(int N, int n) {
    std::vector<LambdaShape> out;
    std::function<void(std::vector<int>, int)> gen = [&](std::vector<int> acc,
                                                         int rest) {
        if (static_cast<int>(acc.size()) == N - 1) {
            acc.push_back(rest);
            out.emplace_back(acc);
            return;
        }
        for (int k = 0; k <= rest; ++k) {
            auto a2 = acc;
            a2.push_back(k);
            gen(a2, rest - k);
        }
    };
    gen({}, n);
    return out;
}

VariableAssignment parse_x(const std::string& text) {
    json j = json::parse(text);
    VariableAssignment x;
    for (const auto& e : j.at("u"))
        x.u.emplace_back(double(e.at(0)), double(e.at(1)));
    for (const auto& row : j.at("v")) {
        std::vector<cplx> r;
        for (const auto& e : row)
            r.emplace_back(double(e.at(0)), double(e.at(1)));
        x.v.push_back(std::move(r));
    }
    return x;
}

VariableAssignment sample_x(const LambdaShape& sh, DetRng& rng) {
    VariableAssignment x;
    x.u = sample_u(sh.n(), rng);
    x.v.resize(sh.N() - 1);
    for (int l = 1; l < sh.N(); ++l) {
        x.v[l - 1].resize(sh.cum(l));
        for (auto& z : x.v[l - 1])
            z = rng.next_cplx(0.6, 0.4) + cplx(0.0, 0.9);
    }
    return x;
}

int run_eval(const RunConfig& cfg, const std::string& kind, double u_re,
             double u_im, const std::string& x_json) {
    EllipticParams P = cfg.params();
    DetRng rng(cfg.seed);
    Report rep(cfg.json_out, cfg.pretty);
    cplx u(u_re, u_im);
    ordered_json rec;
    rec["kind"] = kind;
    rec["config"] = config_to_json(cfg);
    rec["inputs"] = {{"u", cnum(u)}};

    if (kind == "theta") {
        rec["value"] = cnum(theta_p(P.z_of_u(u), P.p, P));
    } else if (kind == "bracket") {
        rec["value"] = cnum(bracket(u, P));
    } else if (kind == "rmatrix") {
        DynamicalParams pi = sample_pi(cfg.N, rng);
        LabeledTensor R = rbar(u, pi, P);
        ordered_json rows = ordered_json::array();
        for (int a = 1; a <= cfg.N; ++a)
            for (int b = 1; b <= cfg.N; ++b) {
                ordered_json row = ordered_json::array();
                for (int c = 1; c <= cfg.N; ++c)
                    for (int d = 1; d <= cfg.N; ++d)
                        row.push_back(cnum(R.ent(a, b, c, d)));
                rows.push_back(row);
            }
        rec["value"] = rows;
        rec["inputs"]["a"] = ordered_json::array();
        for (cplx av : pi.a) rec["inputs"]["a"].push_back(cnum(av));
    } else if (kind == "weight" || kind == "omega" || kind == "hlambda" ||
               kind == "phi") {
        Partition I = Partition::parse(
            cfg.word.empty() ? std::string(cfg.n, '1') : cfg.word, cfg.N);
        DynamicalParams pi = sample_pi(cfg.N, rng);
        VariableAssignment x = x_json.empty() ? sample_x(I.shape(), rng)
                                              : parse_x(x_json);
        if (!x.matches(I.shape()))
            throw std::runtime_error("--x does not match the word's shape");
        rec["inputs"]["word"] = I.to_string();
        if (kind == "weight")
            rec["value"] = cnum(w_tilde(I, x, pi, Convention::Shifted, P));
        else if (kind == "omega")
            rec["value"] = cnum(omega(I, x, pi, P));
        else if (kind == "hlambda")
            rec["value"] =
                cnum(h_lambda(I.shape(), x, Convention::Shifted, P));
        else {
            double kappa = cfg.kappa > 0
                               ? cfg.kappa
                               : std::log(0.5) / std::log(std::abs(P.q));
            QKZParams qp(P, kappa, pi);
            rec["value"] = cnum(phi_trace(x, qp));
        }
    } else {
        std::cerr << "unknown eval kind: " << kind << "\n";
        return 2;
    }
    rep.line(rec);
    return 0;
}

struct SuiteResult {
    ordered_json records = ordered_json::array();
    bool all_pass = true;
};

void add_check(SuiteResult& sr, const std::string& suite,
               const std::string& proposition, const std::string& c,
               double residual, double tol) {
    bool pass = residual < tol;
    ordered_json j;
    j["suite"] = suite;
    j["proposition"] = proposition;
    j["case"] = c;
    j["residual"] = residual;
    j["tolerance"] = tol;
    j["pass"] = pass;
    sr.records.push_back(j);
    sr.all_pass = sr.all_pass && pass;
}

/// redraw-and-retry on pole errors, per the generic-u sampling policy
template <typename F>
double with_retry(F f, int max_tries = 5) {
    for (int t = 0; t < max_tries - 1; ++t) {
        try {
            return f();
        } catch (const PoleError&) {
        }
    }
    return f();
}

SuiteResult run_suite(const std::string& suite, const RunConfig& cfg) {
    EllipticParams P = cfg.params();
    DetRng rng(cfg.seed);
    SuiteResult sr;

    if (suite == "dybe") {
        struct Draw { DynamicalParams pi; cplx u1, u2, u3; };
        std::vector<Draw> draws;
        for (int t = 0; t < cfg.trials; ++t)
            draws.push_back({sample_pi(cfg.N, rng), rng.next_cplx(0.4, 0.2),
                             rng.next_cplx(0.4, 0.2), rng.next_cplx(0.4, 0.2)});
        std::vector<double> res = parallel_map(
            draws,
            [&](const Draw& d) {
                return check_dybe(d.u1, d.u2, d.u3, d.pi, P);
            },
            cfg.jobs);
        for (int t = 0; t < cfg.trials; ++t)
            add_check(sr, suite, "dynamical Yang-Baxter equation",
                      "trial " + std::to_string(t), res[t], 1e-9);
    } else if (suite == "unitarity") {
        struct Draw { DynamicalParams pi; cplx u; };
        std::vector<Draw> draws;
        for (int t = 0; t < cfg.trials; ++t)
            draws.push_back({sample_pi(cfg.N, rng), rng.next_cplx(0.4, 0.2)});
        std::vector<double> res = parallel_map(
            draws,
            [&](const Draw& d) { return check_unitarity(d.u, d.pi, P); },
            cfg.jobs);
        for (int t = 0; t < cfg.trials; ++t)
            add_check(sr, suite, "unitarity of R", "trial " + std::to_string(t),
                      res[t], 1e-9);
    } else if (suite == "triangular") {
        for (const auto& sh : shapes_of(cfg.N, cfg.n)) {
            if (sh.multinomial() < 2) continue;
            std::vector<cplx> u = sample_u(cfg.n, rng);
            DynamicalParams pi = sample_pi(cfg.N, rng);
            WMatrix W = w_matrix(identity_perm(cfg.n), sh, u, pi, P);
            double scale = 0.0;
            for (const auto& row : W.m)
                for (cplx v : row) scale = std::max(scale, std::abs(v));
            for (int i = 0; i < W.dim(); ++i)
                for (int j = 0; j < W.dim(); ++j) {
                    if (leq(W.ordering[i], W.ordering[j])) continue;
                    add_check(sr, suite, "triangularity of What_id",
                              "shape " + sh.to_string() + " I=" +
                                  W.ordering[i].to_string() + " J=" +
                                  W.ordering[j].to_string(),
                              std::abs(W.m[i][j]) / scale, 1e-10);
                }
        }
    } else if (suite == "transition") {
        for (const auto& sh : shapes_of(cfg.N, cfg.n))
            for (const Partition& I : enumerate_partitions(sh))
                for (int i = 1; i < cfg.n; ++i)
                    for (int t = 0; t < cfg.trials; ++t) {
                        double res = with_retry([&]() {
                            std::vector<cplx> u = sample_u(cfg.n, rng);
                            DynamicalParams pi = sample_pi(cfg.N, rng);
                            VariableAssignment x{u, sample_x(I.shape(), rng).v};
                            return check_transition(i, I, x, u, pi, P);
                        });
                        add_check(sr, suite, "transition property",
                                  "word " + I.to_string() + " i=" +
                                      std::to_string(i) + " trial " +
                                      std::to_string(t),
                                  res, 1e-9);
                    }
    } else if (suite == "orthogonality") {
        std::vector<int> lam(cfg.N, 1);
        LambdaShape sh(lam);
        std::vector<cplx> u = sample_u(sh.n(), rng);
        DynamicalParams pi = sample_pi(cfg.N, rng);
        auto parts = enumerate_partitions(sh);
        for (const auto& J : parts)
            for (const auto& K : parts) {
                double res = with_retry([&]() {
                    try {
                        return check_orthogonality(J, K, u, pi, P);
                    } catch (const PoleError&) {
                        u = sample_u(sh.n(), rng);  // redraw and rethrow
                        pi = sample_pi(cfg.N, rng);
                        throw;
                    }
                });
                add_check(sr, suite, "orthogonality sum",
                          "J=" + J.to_string() + " K=" + K.to_string(), res,
                          1e-8);
            }
    } else if (suite == "quasiperiod") {
        for (const auto& sh : shapes_of(cfg.N, cfg.n)) {
            if (sh.M() == 0) continue;
            auto parts = enumerate_partitions(sh);
            const Partition& I = parts.front();
            DynamicalParams pi = sample_pi(cfg.N, rng);
            for (int l = 1; l < cfg.N; ++l) {
                if (sh.cum(l) == 0) continue;
                for (int a = 1; a <= sh.cum(l); ++a) {
                    VariableAssignment x = sample_x(sh, rng);
                    cplx w0 = w_entire(I, x, pi, Convention::Shifted, P);
                    cplx wt0 = w_tilde(I, x, pi, Convention::Shifted, P);
                    VariableAssignment xr = x;
                    xr.vref(l, a) += P.r;
                    double res1 =
                        std::abs(w_entire(I, xr, pi, Convention::Shifted, P) -
                                 qp_w_factor_r(sh, l) * w0) /
                        std::abs(w0);
                    VariableAssignment xt = x;
                    xt.vref(l, a) += P.r * P.tau;
                    cplx pred_w = qp_w_factor_rtau(sh, x, pi, l, a, P) * w0;
                    double res2 =
                        std::abs(w_entire(I, xt, pi, Convention::Shifted, P) -
                                 pred_w) /
                        std::abs(pred_w);
                    cplx pred_wt = qp_wtilde_factor_rtau(sh, pi, l, P) * wt0;
                    double res3 =
                        std::abs(w_tilde(I, xt, pi, Convention::Shifted, P) -
                                 pred_wt) /
                        std::abs(pred_wt);
                    std::string label = "word " + I.to_string() + " l=" +
                                        std::to_string(l) + " a=" +
                                        std::to_string(a);
                    add_check(sr, suite, "quasi-periodicity of W",
                              label + " +r", res1, 1e-9);
                    add_check(sr, suite, "quasi-periodicity of W",
                              label + " +rtau", res2, 1e-9);
                    add_check(sr, suite, "quasi-periodicity of Wtilde",
                              label + " +rtau", res3, 1e-9);
                }
            }
        }
    } else if (suite == "rcal") {
        std::vector<cplx> u = sample_u(3, rng);
        DynamicalParams pi = sample_pi(cfg.N, rng);
        MultiSiteOp R1 = rcal_with_word(longest_element(3), identity_perm(3),
                                        {1, 2, 1}, u, pi, P);
        MultiSiteOp R2 = rcal_with_word(longest_element(3), identity_perm(3),
                                        {2, 1, 2}, u, pi, P);
        add_check(sr, suite, "reduced-word independence of Rcal", "s1s2s1 vs s2s1s2",
                  R1.max_abs_diff(R2) / R2.max_abs(), 1e-9);
        for (const auto& sh : shapes_of(cfg.N, 3))
            add_check(sr, suite, "transpose identity of Rcal",
                      "shape " + sh.to_string(),
                      check_rcal_transpose(longest_element(3),
                                           identity_perm(3), sh, u, pi, P),
                      1e-9);
    } else if (suite == "wheel") {
        LambdaShape sh = cfg.shape.empty() ? LambdaShape({2, 1})
                                           : LambdaShape::parse(cfg.shape);
        DynamicalParams pi = sample_pi(cfg.N, rng);
        if (!has_wheel(sh)) {
            add_check(sr, suite, "wheel condition",
                      "shape " + sh.to_string() + " (vacuous)", 0.0, 1e-9);
        } else {
            for (const Partition& I : enumerate_partitions(sh)) {
                auto F = make_wtilde_handle(I, Convention::Shifted, P);
                add_check(sr, suite, "wheel condition of Wtilde",
                          "word " + I.to_string(),
                          check_wheel(F, pi, P, cfg.trials, rng.next_u64()),
                          1e-9);
            }
        }
    } else if (suite == "shuffle") {
        LambdaShape sh = cfg.shape.empty() ? LambdaShape({1, 1})
                                           : LambdaShape::parse(cfg.shape);
        LambdaShape sh2 = cfg.shape2.empty() ? LambdaShape({1, 0})
                                             : LambdaShape::parse(cfg.shape2);
        DynamicalParams pi = sample_pi(cfg.N, rng);
        Partition I = enumerate_partitions(sh).front();
        Partition Ip = enumerate_partitions(sh2).front();
        auto FG = star(make_wtilde_handle(I, Convention::Shifted, P),
                       make_wtilde_handle(Ip, Convention::Shifted, P), P);
        if (has_wheel(FG.shape))
            add_check(sr, suite, "star closure (wheel of star product)",
                      I.to_string() + " * " + Ip.to_string(),
                      check_wheel(FG, pi, P, cfg.trials, rng.next_u64()),
                      1e-9);
        // membership quasi-periodicity of star outputs
        for (int l = 1; l < cfg.N; ++l) {
            if (FG.shape.cum(l) == 0) continue;
            VariableAssignment x = sample_x(FG.shape, rng);
            cplx f0 = FG(x, pi);
            VariableAssignment xr = x;
            xr.vref(l, 1) += P.r;
            add_check(sr, suite, "star membership (+r invariance)",
                      "l=" + std::to_string(l),
                      std::abs(FG(xr, pi) - f0) / std::abs(f0), 1e-9);
            VariableAssignment xt = x;
            xt.vref(l, 1) += P.r * P.tau;
            cplx factor = qp_wtilde_factor_rtau(FG.shape, pi, l, P);
            add_check(sr, suite, "star membership (+rtau factor)",
                      "l=" + std::to_string(l),
                      std::abs(FG(xt, pi) - factor * f0) / std::abs(f0), 1e-9);
        }
    } else if (suite == "omega-shuffle") {
        DynamicalParams pi = sample_pi(cfg.N, rng);
        std::vector<std::vector<int>> words;
        for (int len = 1; len <= 3; ++len)
            for (int code = 0; code < (1 << len); ++code) {
                std::vector<int> w(len);
                for (int i = 0; i < len; ++i) w[i] = ((code >> i) & 1) + 1;
                words.push_back(w);
            }
        for (const auto& wa : words)
            for (const auto& wb : words) {
                if (wa.size() + wb.size() > 4) continue;
                Partition I(wa, 2), Ip(wb, 2);
                VariableAssignment x = sample_x(concat(I, Ip).shape(), rng);
                add_check(sr, suite, "omega star identity",
                          I.to_string() + " * " + Ip.to_string(),
                          check_omega_shuffle(I, Ip, x, pi, P), 1e-9);
            }
    } else {
        throw std::runtime_error("unknown suite: " + suite);
    }
    return sr;
}

int run_verify(const RunConfig& cfg, const std::vector<std::string>& suites) {
    Report rep(cfg.json_out, cfg.pretty);
    ordered_json header;
    header["report"] = "verify";
    header["config"] = config_to_json(cfg);
    rep.line(header);
    bool all = true;
    try {
        for (const auto& s : suites) {
            SuiteResult sr = run_suite(s, cfg);
            for (const auto& r : sr.records) rep.line(r);
            all = all && sr.all_pass;
        }
    } catch (const PoleError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
    return all ? 0 : 1;
}

int run_qkz(const RunConfig& cfg) {
    Report rep(cfg.json_out, cfg.pretty);
    // criterion defaults: p = 0.05 at the configured q unless r was set
    double q = cfg.q;
    double r = cfg.r;
    double kappa =
        cfg.kappa > 0 ? cfg.kappa : std::log(0.5) / std::log(q);
    EllipticParams ell(cplx(q, 0.0), r, cfg.rstar, cfg.K);
    DetRng rng(cfg.seed);
    DynamicalParams pi(
        {cplx(0.9, 0.3) + rng.next_cplx(0.1, 0.1), cplx(-0.4, -0.1)});
    QKZParams qp(ell, kappa, pi);
    ordered_json rec;
    rec["report"] = "qkz-check";
    rec["config"] = config_to_json(cfg);
    rec["kappa"] = kappa;
    try {
        QkzResult res = check_qkz_n2(cplx(0.25, 0.0), cplx(0.10, 0.0), qp,
                                     cfg.nodes);
        rec["residual"] = res.residual;
        rec["quadrature_ladder"] = res.ladder;
        rec["shifted_contour_radius"] = res.radius_shifted;
        bool ladder_ok = res.ladder < 1e-6;
        bool pass = res.residual < 1e-6 && ladder_ok;
        if (!ladder_ok) rec["warning"] = "quadrature ladder above tolerance";
        rec["pass"] = pass;
        rep.line(rec);
        return pass ? 0 : 1;
    } catch (const ContourError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"elliptic weight function toolkit"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--q", cfg.q, "base q in (0,1)");
        sub->add_option("--r", cfg.r, "elliptic parameter r");
        sub->add_option("--rstar", cfg.rstar, "starred parameter (default r-1)");
        sub->add_option("--K", cfg.K, "product truncation order");
        sub->add_option("--tol", cfg.tol, "tolerance");
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--jobs", cfg.jobs, "worker count");
        sub->add_option("--json-out", cfg.json_out, "write records to FILE");
        sub->add_option("--config", cfg.config_file, "JSON config file");
        sub->add_flag("--pretty", cfg.pretty, "indent the JSON records");
        sub->add_option("--N", cfg.N, "rank N");
        sub->add_option("--n", cfg.n, "number of sites");
        sub->add_option("--trials", cfg.trials, "random trials per case");
    };

    std::string kind;
    double u_re = 0.0, u_im = 0.0;
    CLI::App* eval = app.add_subcommand("eval", "evaluate one quantity");
    add_common(eval);
    eval->add_option("kind", kind,
                     "theta|bracket|rmatrix|weight|omega|hlambda|phi")
        ->required();
    eval->add_option("--u", u_re, "additive coordinate u (real part)");
    eval->add_option("--u-imag", u_im, "imaginary part of u");
    eval->add_option("--word", cfg.word, "partition word, e.g. 2132");
    std::string x_json;
    eval->add_option("--x", x_json,
                     "assignment as JSON {\"u\": [[re,im],..], \"v\": "
                     "[[[re,im],..],..]}");

    std::vector<std::string> suites;
    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify);
    verify
        ->add_option("suite", suites,
                     "dybe unitarity triangular transition orthogonality "
                     "quasiperiod rcal wheel shuffle omega-shuffle")
        ->required();
    verify->add_option("--shape", cfg.shape, "shape, e.g. 2,1");
    verify->add_option("--shape2", cfg.shape2, "second shape for star");

    CLI::App* qkz = app.add_subcommand("qkz-check", "q-KZ residual, N=2 n=2");
    add_common(qkz);
    qkz->add_option("--kappa", cfg.kappa, "kappa (default: q^kappa = 0.5)");
    qkz->add_option("--nodes", cfg.nodes, "quadrature nodes");

    // config precedence: flags > config file > defaults
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") cfg.config_file = argv[i + 1];
    try {
        load_config_file(cfg);
    } catch (const std::exception& e) {
        ordered_json err{{"error", "config"}, {"detail", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*eval) return run_eval(cfg, kind, u_re, u_im, x_json);
        if (*verify) return run_verify(cfg, suites);
        if (*qkz) return run_qkz(cfg);
    } catch (const PoleError& e) {
        ordered_json err{{"error", "pole"}, {"detail", e.what()}};
        std::cerr << err.dump() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        ordered_json err{{"error", "domain"}, {"detail", e.what()}};
        std::cerr << err.dump() << "\n";
        return 3;
    } catch (const std::exception& e) {
        ordered_json err{{"error", "config"}, {"detail", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    }
    return 2;
}
