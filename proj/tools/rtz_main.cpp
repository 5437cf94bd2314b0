#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "rtz/analytic.hpp"
#include "rtz/bernoulli.hpp"
#include "rtz/certify.hpp"
#include "rtz/criteria.hpp"
#include "rtz/errors.hpp"
#include "rtz/families.hpp"
#include "rtz/report_json.hpp"

namespace {

using rtz::BigFloat;
using rtz::BigRational;
using rtz::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Range {
    unsigned long lo = 0, hi = 0;
};

/* "a..b" inclusive, or a singleton "a". */
Range parse_range(const std::string& s, const char* name, unsigned long min_allowed,
                  unsigned long cap) {
    const auto dots = s.find("..");
    Range r;
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoul(s);
        } else {
            r.lo = std::stoul(s.substr(0, dots));
            r.hi = std::stoul(s.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw UsageError(std::string("--") + name + ": expected <int> or <int>..<int>, got '" +
                         s + "'");
    }
    if (r.lo > r.hi)
        throw UsageError(std::string("--") + name + ": empty range " + s);
    if (r.lo < min_allowed)
        throw UsageError(std::string("--") + name + ": minimum is " + std::to_string(min_allowed));
    if (r.hi > cap)
        throw UsageError(std::string("--") + name + ": cap is " + std::to_string(cap));
    return r;
}

BigRational parse_rational(const std::string& s, const char* name) {
    try {
        return BigRational::from_string(s);
    } catch (const std::exception&) {
        throw UsageError(std::string("--") + name + ": expected a rational like -3/4, got '" + s +
                         "'");
    }
}

/* Accepts "pi", "2pi", "pi/2", "3pi/4", a plain rational, or a decimal. */
BigFloat parse_angle(const std::string& s, mpfr_prec_t prec) {
    const auto p = s.find("pi");
    if (p != std::string::npos) {
        BigRational scale(1);
        const std::string pre = s.substr(0, p), post = s.substr(p + 2);
        try {
            if (!pre.empty()) scale = scale * BigRational::from_string(pre);
            if (!post.empty()) {
                if (post[0] != '/') throw UsageError("");
                scale = scale / BigRational::from_string(post.substr(1));
            }
        } catch (const std::exception&) {
            throw UsageError("--alpha: cannot parse '" + s + "' (try pi, 2pi, pi/2, 3pi/4)");
        }
        if (scale.sign() <= 0) throw UsageError("--alpha must be positive");
        return BigFloat::pi(prec) * BigFloat::from(scale, prec);
    }
    BigFloat x(prec);
    if (mpfr_set_str(x.raw(), s.c_str(), 10, MPFR_RNDN) != 0) {
        try {
            return BigFloat::from(parse_rational(s, "alpha"), prec);
        } catch (const UsageError&) {
            throw UsageError("--alpha: cannot parse '" + s + "'");
        }
    }
    if (x.sign() <= 0) throw UsageError("--alpha must be positive");
    return x;
}

std::string pad(std::string s, size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
}

/* One computed report, ready for any output format. */
struct Outcome {
    json report;
    bool ok = true;
    std::string csv;     // first nine fixed columns, joined
    std::string table;   // one or more newline-free display lines, '\n'-joined
    std::string witness; // printed to stderr for the first failure
    long elapsed_ms = 0;
};

/* Runs tasks over a small pool; results land at their task's index, so the
 * emission order never depends on --jobs. */
std::vector<Outcome> run_tasks(const std::vector<std::function<Outcome()>>& tasks,
                               unsigned jobs) {
    std::vector<Outcome> out(tasks.size());
    std::atomic<size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr err;

    auto body = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const auto t0 = std::chrono::steady_clock::now();
            try {
                out[i] = tasks[i]();
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
                return;
            }
            const auto t1 = std::chrono::steady_clock::now();
            out[i].elapsed_ms = static_cast<long>(
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
        }
    };

    const size_t want = std::min<size_t>(jobs, tasks.size());
    if (want <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(want);
        for (size_t i = 0; i < want; ++i) pool.emplace_back(body);
        for (auto& t : pool) t.join();
    }
    if (err) std::rethrow_exception(err);
    return out;
}

std::string csv_join(std::initializer_list<std::string> cells) {
    std::string row;
    bool first = true;
    for (const auto& c : cells) {
        if (!first) row += ',';
        row += c;
        first = false;
    }
    return row;
}

constexpr const char* kCsvHeader =
    "variant,k,n,ell,verdict,origin_multiplicity,circle_count,h_at_1,schinzel_min,elapsed_ms";

struct Emit {
    std::string format = "table";
    std::string output_path;
    std::string table_header;
    bool show_roots = false;
};

int emit_all(const std::string& command, const std::vector<Outcome>& outs, const Emit& e) {
    std::ostringstream body;
    if (e.format == "json") {
        json reports = json::array();
        for (const auto& o : outs) reports.push_back(o.report);
        body << rtz::report_envelope(command, std::move(reports)).dump(2) << "\n";
    } else if (e.format == "csv") {
        body << kCsvHeader << "\n";
        for (const auto& o : outs) body << o.csv << "," << o.elapsed_ms << "\n";
    } else {
        if (!e.table_header.empty()) body << e.table_header << "\n";
        for (const auto& o : outs) body << o.table << "\n";
    }

    if (e.output_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(e.output_path, std::ios::binary);
        if (!f) throw UsageError("--output: cannot open '" + e.output_path + "'");
        f << body.str();
    }

    for (const auto& o : outs)
        if (!o.ok) {
            std::cerr << o.witness << "\n";
            return 1;
        }
    return 0;
}

std::string root_lines(const std::optional<rtz::NumericCrossCheck>& c) {
    if (!c) return {};
    std::string s;
    for (const auto& r : c->roots)
        s += "\n    root  re=" + r.re + "  im=" + r.im + "  radius=" + r.radius;
    return s;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const Range& ks, const Range& ns, unsigned precision, unsigned jobs,
               const Emit& e) {
    std::vector<std::function<Outcome()>> tasks;
    for (unsigned long k = ks.lo; k <= ks.hi; ++k)
        for (unsigned long n = ns.lo; n <= ns.hi; ++n)
            tasks.push_back([k, n, precision, &e] {
                rtz::CertifyOptions opt;
                opt.with_numeric = precision > 0;
                opt.precision_digits = precision;
                const rtz::Certificate c = rtz::certify_ramanujan_type(
                    static_cast<unsigned>(k), static_cast<unsigned>(n), opt);

                Outcome o;
                o.ok = c.verdict != rtz::Verdict::Failed;
                o.report = rtz::to_json(c);
                o.csv = csv_join({rtz::variant_name(c.family.variant), std::to_string(k),
                                  std::to_string(n), "", rtz::verdict_name(c.verdict),
                                  std::to_string(c.origin_multiplicity),
                                  std::to_string(c.circle_count), c.h_at_1.to_string(), ""});
                o.table = pad(std::to_string(k), 5) + pad(std::to_string(n), 7) +
                          pad(rtz::verdict_name(c.verdict), 16) +
                          pad(std::to_string(c.origin_multiplicity), 8) +
                          pad(std::to_string(c.circle_count) + "/" +
                                  std::to_string(2 * c.family.k - 2),
                              9) +
                          "h(1)=" + c.h_at_1.to_string() + "  h(-1)=" + c.h_at_minus1.to_string();
                if (!o.ok) {
                    o.table += "  [" + c.failed_stage + "] " + c.witness;
                    o.witness = "verify k=" + std::to_string(k) + " n=" + std::to_string(n) +
                                " failed at " + c.failed_stage + ": " + c.witness;
                }
                if (e.show_roots) o.table += root_lines(c.numeric_crosscheck);
                return o;
            });

    return emit_all("verify",
                    run_tasks(tasks, jobs),
                    e);
}

// ---- classic --------------------------------------------------------------

int cmd_classic(const Range& ks, unsigned precision, unsigned jobs, const Emit& e) {
    std::vector<std::function<Outcome()>> tasks;
    for (unsigned long k = ks.lo; k <= ks.hi; ++k)
        tasks.push_back([k, precision, &e] {
            const rtz::ClassicReport r =
                rtz::certify_classic(static_cast<unsigned>(k), precision);

            Outcome o;
            o.ok = r.partition_ok;
            o.report = rtz::to_json(r);
            o.csv = csv_join({"classic", std::to_string(k), "", "",
                              r.partition_ok ? "theorem_holds" : "failed", "",
                              std::to_string(r.circle_count), r.r_at_1.to_string(), ""});
            o.table = pad(std::to_string(k), 5) + pad("deg " + std::to_string(r.degree), 10) +
                      pad("real " + std::to_string(r.real_count), 10) +
                      pad("circle " + std::to_string(r.circle_count), 12) +
                      pad("overlap " + std::to_string(r.overlap_pm1), 12) +
                      pad("off " + std::to_string(r.off_circle_nonreal_count), 8) +
                      (r.partition_ok ? "ok" : "FAILED");
            if (!o.ok)
                o.witness = "classic k=" + std::to_string(k) + ": off_circle_nonreal_count=" +
                            std::to_string(r.off_circle_nonreal_count);
            if (e.show_roots) o.table += root_lines(r.numeric_crosscheck);
            return o;
        });

    return emit_all("classic", run_tasks(tasks, jobs), e);
}

// ---- conjecture -----------------------------------------------------------

int cmd_conjecture(const Range& ks, const Range& ells, unsigned precision, unsigned jobs,
                   const Emit& e) {
    std::vector<std::function<Outcome()>> tasks;
    for (unsigned long k = ks.lo; k <= ks.hi; ++k)
        for (unsigned long ell = ells.lo; ell <= ells.hi; ++ell)
            tasks.push_back([k, ell, precision, &e] {
                const rtz::ConjectureReport r = rtz::probe_generalized(
                    static_cast<unsigned>(k), static_cast<unsigned>(ell), precision);

                Outcome o;
                o.ok = r.verdict == rtz::ProbeVerdict::ConsistentWithConjecture;
                o.report = rtz::to_json(r);
                o.csv = csv_join({"generalized", std::to_string(k), "", std::to_string(ell),
                                  rtz::probe_verdict_name(r.verdict), "",
                                  std::to_string(r.circle_nonreal_count), "", ""});
                o.table = pad(std::to_string(k), 5) + pad(std::to_string(ell), 7) +
                          pad("deg " + std::to_string(r.degree), 9) +
                          pad(rtz::symmetry_name(r.symmetry), 17) +
                          pad("real " + std::to_string(r.real_count), 9) +
                          pad("circle " + std::to_string(r.circle_nonreal_count), 11) +
                          pad("off " + std::to_string(r.off_circle_nonreal_count), 7) +
                          pad(r.nonreal_all_simple ? "simple" : "REPEATED", 10) +
                          rtz::probe_verdict_name(r.verdict);
                if (!o.ok)
                    o.witness = "conjecture k=" + std::to_string(k) +
                                " ell=" + std::to_string(ell) + ": " + r.witness;
                if (e.show_roots) o.table += root_lines(r.numeric_crosscheck);
                return o;
            });

    return emit_all("conjecture", run_tasks(tasks, jobs), e);
}

// ---- criteria -------------------------------------------------------------

int cmd_criteria(const Range& ks, const Range& ns, unsigned jobs, const Emit& e) {
    std::vector<std::function<Outcome()>> tasks;
    for (unsigned long k = ks.lo; k <= ks.hi; ++k)
        for (unsigned long n = ns.lo; n <= ns.hi; ++n)
            tasks.push_back([k, n] {
                const rtz::HBuild hb =
                    rtz::build_H(static_cast<unsigned>(k), static_cast<unsigned>(n));
                const rtz::CriterionReport r = rtz::schinzel_criterion_check(hb.table);

                Outcome o;
                o.ok = r.schinzel_holds && r.schinzel_strict;
                o.report = rtz::criteria_json(static_cast<unsigned>(k),
                                              static_cast<unsigned>(n), r);
                o.csv = csv_join({"ramanujan_type", std::to_string(k), std::to_string(n), "",
                                  o.ok ? "holds" : "failed", "", "", "",
                                  r.schinzel_min.to_string()});
                o.table = pad(std::to_string(k), 5) + pad(std::to_string(n), 7) +
                          pad(std::string("schinzel ") +
                                  (r.schinzel_holds ? (r.schinzel_strict ? "strict" : "holds")
                                                    : "FAILED"),
                              17) +
                          pad(std::string("lakatos ") +
                                  (r.lakatos_holds ? (r.lakatos_strict ? "strict" : "holds")
                                                   : "no"),
                              16) +
                          "min=" + r.schinzel_min.to_string() +
                          " at c=" + r.schinzel_argmin_c.to_string() +
                          "  c_nk=" + r.c_constant_value.to_string();
                if (!o.ok)
                    o.witness = "criteria k=" + std::to_string(k) + " n=" + std::to_string(n) +
                                ": schinzel_min=" + r.schinzel_min.to_string() +
                                " argmin_c=" + r.schinzel_argmin_c.to_string();
                return o;
            });

    return emit_all("criteria", run_tasks(tasks, jobs), e);
}

// ---- identity -------------------------------------------------------------

int cmd_identity(const std::string& which, const Range& ks, const Range& ms,
                 const std::vector<std::string>& alphas, const std::string& a_str,
                 const std::string& b_str, unsigned long terms, unsigned precision,
                 unsigned jobs, const Emit& e) {
    std::vector<std::function<Outcome()>> tasks;

    if (which == "eq5.15") {
        for (unsigned long k = ks.lo; k <= ks.hi; ++k)
            tasks.push_back([k] {
                const rtz::Identity515 id = rtz::identity_5_15_check(static_cast<unsigned>(k));
                Outcome o;
                o.ok = id.equal;
                o.report = rtz::identity_sum_json(static_cast<unsigned>(k), id);
                o.csv = csv_join({"identity", std::to_string(k), "", "",
                                  id.equal ? "ok" : "failed", "", "", "", ""});
                o.table = "k=" + std::to_string(k) + "  lhs " + id.lhs.to_string() +
                          (id.equal ? " = " : " != ") + "rhs " + id.rhs.to_string() +
                          "  (signed sum " + id.signed_sum.to_string() + ")";
                if (!o.ok)
                    o.witness = "identity eq5.15 k=" + std::to_string(k) + ": lhs " +
                                id.lhs.to_string() + " != rhs " + id.rhs.to_string();
                return o;
            });
    } else if (which == "eq1.2") {
        const mpfr_prec_t aprec =
            static_cast<mpfr_prec_t>(static_cast<double>(precision) * 3.322) + 64;
        for (unsigned long k = ks.lo; k <= ks.hi; ++k)
            for (const auto& alpha_str : alphas)
                tasks.push_back([k, alpha_str, aprec, terms, precision] {
                    const BigFloat alpha = parse_angle(alpha_str, aprec);
                    const rtz::IdentityResidual r = rtz::check_ramanujan_identity(
                        static_cast<unsigned>(k), alpha, terms, precision);
                    Outcome o;
                    o.ok = r.within_bound;
                    o.report = rtz::identity_residual_json(r);
                    o.csv = csv_join({"identity", std::to_string(k), "", "",
                                      r.within_bound ? "ok" : "failed", "", "", "", ""});
                    o.table = "k=" + std::to_string(k) + "  alpha=" + alpha_str +
                              "  residual=" + r.residual.to_string(8) +
                              "  bound=" + r.bound.to_string(8) +
                              "  terms=" + std::to_string(r.terms_used) +
                              (r.within_bound ? "  ok" : "  FAILED");
                    return o;
                });
    } else { // convolution
        const BigRational a = parse_rational(a_str, "a");
        const BigRational b = parse_rational(b_str, "b");
        for (unsigned long m = ms.lo; m <= ms.hi; ++m)
            tasks.push_back([m, a, b] {
                const rtz::ConvolutionCheck c = rtz::convolution_identity_check(m, a, b);
                Outcome o;
                o.ok = c.equal;
                o.report = rtz::convolution_json(m, a, b, c);
                o.csv = csv_join({"identity", std::to_string(m), "", "",
                                  c.equal ? "ok" : "failed", "", "", "", ""});
                o.table = "m=" + std::to_string(m) + "  a=" + a.to_string() +
                          "  b=" + b.to_string() + "  lhs " + c.lhs.to_string() +
                          (c.equal ? " = " : " != ") + "rhs " + c.rhs.to_string();
                if (!o.ok)
                    o.witness = "identity convolution m=" + std::to_string(m) + ": lhs " +
                                c.lhs.to_string() + " != rhs " + c.rhs.to_string();
                return o;
            });
    }

    return emit_all("identity", run_tasks(tasks, jobs), e);
}

// ---- expand ---------------------------------------------------------------

int cmd_expand(const std::string& variant, const Range& ks, const Range& ns, const Range& ells,
               bool have_n, bool have_ell, unsigned jobs, const Emit& e) {
    std::vector<std::function<Outcome()>> tasks;

    auto add = [&tasks](rtz::FamilySpec spec) {
        tasks.push_back([spec] {
            rtz::DensePoly p;
            std::string var = "z";
            switch (spec.variant) {
                case rtz::FamilyVariant::Classic: p = rtz::build_classic(spec.k); break;
                case rtz::FamilyVariant::RamanujanType:
                    p = rtz::build_ramanujan_type(spec.k, *spec.n);
                    break;
                case rtz::FamilyVariant::LalinRogers: p = rtz::build_lalin_rogers(spec.k); break;
                case rtz::FamilyVariant::Generalized:
                    p = rtz::build_generalized(spec.k, *spec.ell);
                    var = "Z";
                    break;
            }
            Outcome o;
            o.report = rtz::expansion_json(spec, p, var);
            o.csv = csv_join({rtz::variant_name(spec.variant), std::to_string(spec.k),
                              spec.n ? std::to_string(*spec.n) : "",
                              spec.ell ? std::to_string(*spec.ell) : "", "ok", "", "", "", ""});
            o.table = spec.label() + ":  " + p.to_string(var);
            return o;
        });
    };

    for (unsigned long k = ks.lo; k <= ks.hi; ++k) {
        if (variant == "classic") {
            add(rtz::FamilySpec::classic(static_cast<unsigned>(k)));
        } else if (variant == "ramanujan_type") {
            if (!have_n) throw UsageError("expand ramanujan_type needs --n");
            for (unsigned long n = ns.lo; n <= ns.hi; ++n)
                add(rtz::FamilySpec::ramanujan_type(static_cast<unsigned>(k),
                                                    static_cast<unsigned>(n)));
        } else if (variant == "lalin_rogers") {
            add(rtz::FamilySpec::lalin_rogers(static_cast<unsigned>(k)));
        } else {
            if (!have_ell) throw UsageError("expand generalized needs --ell");
            for (unsigned long ell = ells.lo; ell <= ells.hi; ++ell)
                add(rtz::FamilySpec::generalized(static_cast<unsigned>(k),
                                                 static_cast<unsigned>(ell)));
        }
    }

    return emit_all("expand", run_tasks(tasks, jobs), e);
}

// ---- bernoulli ------------------------------------------------------------

int cmd_bernoulli(unsigned long max_m, const Emit& e) {
    Outcome o;
    o.report = rtz::bernoulli_table_json(max_m);
    o.csv = csv_join({"bernoulli", "", "", "", "ok", "", "", "", ""});
    std::string t;
    for (unsigned long m = 0; m <= max_m; ++m) {
        if (m) t += "\n";
        t += "B_" + std::to_string(m) + " = " + rtz::bernoulli_number(m).to_string();
    }
    o.table = t;

    return emit_all("bernoulli", {o}, e);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certification of Bernoulli-coefficient polynomial families: "
                 "unit-circle root partitions, coefficient criteria, and identity checks."};
    app.require_subcommand(1);

    // Shared option state; each subcommand binds the subset it uses.
    std::string k_str = "1", n_str = "2", ell_str = "1", m_str = "2..8";
    unsigned precision = 30, jobs = 1;
    std::string format = "table", output_path;
    bool show_roots = false;

    auto add_common = [&](CLI::App* sub, bool with_precision) {
        sub->add_option("--format", format, "table, json, or csv")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        sub->add_option("--jobs", jobs, "worker threads; output is independent of this")
            ->check(CLI::Range(1u, 64u));
        sub->add_option("--output", output_path, "write the report there instead of stdout");
        if (with_precision)
            sub->add_option("--precision", precision,
                            "numeric cross-check digits; 0 disables the cross-check")
                ->envname("RTZ_PRECISION_DIGITS")
                ->check(CLI::Range(0u, 10000u));
    };

    CLI::App* verify = app.add_subcommand(
        "verify", "Certify the non-real roots of the degree-2k family members over (k, n)");
    verify->add_option("--k", k_str, "k or a..b, 1..200")->required();
    verify->add_option("--n", n_str, "n or a..b, 2..1000000")->required();
    verify->add_flag("--roots", show_roots, "list numeric root enclosures in table output");
    add_common(verify, true);

    CLI::App* classic = app.add_subcommand(
        "classic", "Exact real/unit-circle root partition of the degree-(2k+2) family");
    classic->add_option("--k", k_str, "k or a..b, 1..200")->required();
    classic->add_flag("--roots", show_roots, "list numeric root enclosures in table output");
    add_common(classic, true);

    CLI::App* conjecture = app.add_subcommand(
        "conjecture", "Probe the exponent-generalized family for non-real roots off |Z| = 1");
    conjecture->add_option("--k", k_str, "k or a..b, 1..200")->required();
    conjecture->add_option("--ell", ell_str, "ell or a..b, 1..16")->required();
    conjecture->add_flag("--roots", show_roots, "list numeric root enclosures in table output");
    add_common(conjecture, true);

    CLI::App* criteria = app.add_subcommand(
        "criteria", "Coefficient-dominance criteria for the even cofactor over (k, n)");
    criteria->add_option("--k", k_str, "k or a..b, 1..200")->required();
    criteria->add_option("--n", n_str, "n or a..b, 2..1000000")->required();
    add_common(criteria, false);

    std::string which;
    std::vector<std::string> alphas;
    std::string a_str = "1/2", b_str = "1/3";
    unsigned long terms = 300;
    CLI::App* identity = app.add_subcommand("identity", "Run one of the exact/numeric identity checks");
    identity->add_option("--which", which, "eq1.2, eq5.15, or convolution")
        ->required()
        ->check(CLI::IsMember({"eq1.2", "eq5.15", "convolution"}));
    identity->add_option("--k", k_str, "k or a..b (eq1.2, eq5.15)");
    identity->add_option("--m", m_str, "m or a..b (convolution)");
    identity->add_option("--alpha", alphas,
                         "evaluation points for eq1.2 (pi, 2pi, pi/2, rationals, decimals)");
    identity->add_option("--a", a_str, "left argument for convolution");
    identity->add_option("--b", b_str, "right argument for convolution");
    identity->add_option("--terms", terms, "series terms for eq1.2")->check(CLI::Range(1ul, 1000000ul));
    add_common(identity, true);

    std::string variant;
    CLI::App* expand = app.add_subcommand("expand", "Print exact coefficient tables");
    expand->add_option("--variant", variant,
                       "classic, ramanujan_type, lalin_rogers, generalized "
                       "(default inferred: --n -> ramanujan_type, --ell -> generalized)")
        ->check(CLI::IsMember({"classic", "ramanujan_type", "lalin_rogers", "generalized"}));
    expand->add_option("--k", k_str, "k or a..b, 1..200")->required();
    CLI::Option* expand_n = expand->add_option("--n", n_str, "n or a..b (ramanujan_type)");
    CLI::Option* expand_ell = expand->add_option("--ell", ell_str, "ell or a..b (generalized)");
    add_common(expand, false);

    unsigned long max_m = 10;
    CLI::App* bernoulli = app.add_subcommand("bernoulli", "Print B_0..B_max exactly");
    bernoulli->add_option("--max", max_m, "largest index, at most 5000")
        ->required()
        ->check(CLI::Range(0ul, 5000ul));
    add_common(bernoulli, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    Emit emit;
    emit.format = format;
    emit.output_path = output_path;
    emit.show_roots = show_roots;

    try {
        if (app.got_subcommand(verify)) {
            const Range ks = parse_range(k_str, "k", 1, 200);
            const Range ns = parse_range(n_str, "n", 2, 1000000);
            emit.table_header = "k    n      verdict         origin  circle   values";
            return cmd_verify(ks, ns, precision, jobs, emit);
        }
        if (app.got_subcommand(classic)) {
            const Range ks = parse_range(k_str, "k", 1, 200);
            emit.table_header = "k    degree    counts";
            return cmd_classic(ks, precision, jobs, emit);
        }
        if (app.got_subcommand(conjecture)) {
            const Range ks = parse_range(k_str, "k", 1, 200);
            const Range ells = parse_range(ell_str, "ell", 1, 16);
            emit.table_header = "k    ell    counts";
            return cmd_conjecture(ks, ells, precision, jobs, emit);
        }
        if (app.got_subcommand(criteria)) {
            const Range ks = parse_range(k_str, "k", 1, 200);
            const Range ns = parse_range(n_str, "n", 2, 1000000);
            emit.table_header = "k    n      criteria";
            return cmd_criteria(ks, ns, jobs, emit);
        }
        if (app.got_subcommand(identity)) {
            Range ks{1, 1}, ms{2, 8};
            if (which == "convolution") {
                ms = parse_range(m_str, "m", 1, 1000);
            } else {
                ks = parse_range(k_str, "k", 1, 200);
            }
            if (alphas.empty()) alphas = {"pi"};
            if (precision < 2) throw UsageError("--precision: identity checks need at least 2");
            return cmd_identity(which, ks, ms, alphas, a_str, b_str, terms, precision, jobs,
                                emit);
        }
        if (app.got_subcommand(expand)) {
            const Range ks = parse_range(k_str, "k", 1, 200);
            Range ns{2, 2}, ells{1, 1};
            if (*expand_n) ns = parse_range(n_str, "n", 2, 1000000);
            if (*expand_ell) ells = parse_range(ell_str, "ell", 1, 16);
            if (variant.empty())
                variant = *expand_n ? "ramanujan_type" : (*expand_ell ? "generalized" : "classic");
            return cmd_expand(variant, ks, ns, ells, static_cast<bool>(*expand_n),
                              static_cast<bool>(*expand_ell), jobs, emit);
        }
        if (app.got_subcommand(bernoulli)) return cmd_bernoulli(max_m, emit);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const rtz::precision_exhausted& e) {
        std::cerr << "precision exhausted: " << e.what() << "\n";
        return 3;
    } catch (const std::bad_alloc&) {
        std::cerr << "out of memory\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
