#include "rtz/report_json.hpp"

namespace rtz {

namespace {

json opt_str(const std::string& s) { return s.empty() ? json(nullptr) : json(s); }

json opt_numeric(const std::optional<NumericCrossCheck>& c) {
    return c ? to_json(*c) : json(nullptr);
}

// Residual-style floats keep a little headroom past the requested digits so
// a residual sitting just under the bound stays distinguishable.
int float_digits(unsigned precision_digits) { return static_cast<int>(precision_digits) + 5; }

} // namespace

std::string symmetry_name(PolySymmetry s) {
    switch (s) {
        case PolySymmetry::Reciprocal: return "reciprocal";
        case PolySymmetry::AntiReciprocal: return "anti_reciprocal";
        case PolySymmetry::Neither: return "neither";
    }
    return "?";
}

json to_json(const NumericCrossCheck& c) {
    json roots = json::array();
    for (const auto& r : c.roots) {
        json e;
        e["re"] = r.re;
        e["im"] = r.im;
        e["radius"] = r.radius;
        roots.push_back(std::move(e));
    }
    json j;
    j["precision_digits"] = c.precision_digits;
    j["working_digits"] = c.working_digits;
    j["max_modulus_deviation"] = c.max_modulus_deviation;
    j["max_radius"] = c.max_radius;
    j["within"] = c.within;
    j["roots"] = std::move(roots);
    return j;
}

json to_json(const Certificate& c) {
    json j;
    j["kind"] = "certificate";
    j["variant"] = variant_name(c.family.variant);
    j["label"] = c.family.label();
    j["k"] = c.family.k;
    j["n"] = c.family.n ? json(*c.family.n) : json(nullptr);
    j["origin_multiplicity"] = c.origin_multiplicity;
    j["reciprocal"] = c.reciprocal;
    j["sign_pattern_ok"] = c.sign_pattern_ok;
    j["squarefree_h"] = c.squarefree_H;
    j["h_at_1"] = c.h_at_1.to_string();
    j["h_at_minus_1"] = c.h_at_minus1.to_string();
    j["circle_count"] = c.circle_count;
    j["expected_circle_count"] = 2 * c.family.k - 2;
    j["verdict"] = verdict_name(c.verdict);
    j["failed_stage"] = opt_str(c.failed_stage);
    j["witness"] = opt_str(c.witness);
    j["numeric"] = opt_numeric(c.numeric_crosscheck);
    return j;
}

json to_json(const ClassicReport& r) {
    json j;
    j["kind"] = "classic";
    j["k"] = r.k;
    j["degree"] = r.degree;
    j["real_count"] = r.real_count;
    j["circle_count"] = r.circle_count;
    j["overlap_pm1"] = r.overlap_pm1;
    j["off_circle_nonreal_count"] = r.off_circle_nonreal_count;
    j["value_at_1"] = r.r_at_1.to_string();
    j["value_at_minus_1"] = r.r_at_minus1.to_string();
    j["partition_ok"] = r.partition_ok;
    j["numeric"] = opt_numeric(r.numeric_crosscheck);
    return j;
}

json to_json(const ConjectureReport& r) {
    json j;
    j["kind"] = "conjecture";
    j["k"] = r.k;
    j["ell"] = r.ell;
    j["degree"] = r.degree;
    j["symmetry"] = symmetry_name(r.symmetry);
    j["squarefree"] = r.squarefree;
    j["root_at_plus_one"] = r.root_at_plus_one;
    j["root_at_minus_one"] = r.root_at_minus_one;
    j["real_count"] = r.real_count;
    j["circle_nonreal_count"] = r.circle_nonreal_count;
    j["off_circle_nonreal_count"] = r.off_circle_nonreal_count;
    j["nonreal_all_simple"] = r.nonreal_all_simple;
    j["verdict"] = probe_verdict_name(r.verdict);
    j["witness"] = opt_str(r.witness);
    j["numeric"] = opt_numeric(r.numeric_crosscheck);
    return j;
}

json criteria_json(unsigned k, unsigned n, const CriterionReport& r) {
    json chain;
    chain["c"] = r.chain_checks.c.to_string();
    chain["sum_c_abs_a"] = r.chain_checks.sum_c_abs_A.to_string();
    chain["upper_bound"] = r.chain_checks.upper_bound.to_string();
    chain["sum_below_bound"] = r.chain_checks.sum_below_bound;
    chain["dominance_lhs"] = r.chain_checks.lhs_dominance.to_string();
    chain["dominance_holds"] = r.chain_checks.dominance_holds;
    chain["c_nk"] = r.chain_checks.c_nk.to_string();
    chain["c_below_c_nk"] = r.chain_checks.c_below_cnk;

    json j;
    j["kind"] = "criteria";
    j["k"] = k;
    j["n"] = n;
    j["lakatos_holds"] = r.lakatos_holds;
    j["lakatos_strict"] = r.lakatos_strict;
    j["schinzel_min"] = r.schinzel_min.to_string();
    j["schinzel_argmin_c"] = r.schinzel_argmin_c.to_string();
    j["schinzel_holds"] = r.schinzel_holds;
    j["schinzel_strict"] = r.schinzel_strict;
    j["c_constant"] = r.c_constant_value.to_string();
    j["chain"] = chain;
    return j;
}

json identity_sum_json(unsigned k, const Identity515& id) {
    json j;
    j["kind"] = "identity";
    j["which"] = "eq5.15";
    j["k"] = k;
    j["lhs"] = id.lhs.to_string();
    j["rhs"] = id.rhs.to_string();
    j["equal"] = id.equal;
    j["signed_sum"] = id.signed_sum.to_string();
    j["signed_rhs"] = id.signed_rhs.to_string();
    return j;
}

json identity_residual_json(const IdentityResidual& r) {
    const int d = float_digits(r.precision_digits);
    json j;
    j["kind"] = "identity";
    j["which"] = "eq1.2";
    j["k"] = r.k;
    j["alpha"] = r.alpha.to_string(d);
    j["beta"] = r.beta.to_string(d);
    j["terms"] = r.terms_used;
    j["precision_digits"] = r.precision_digits;
    j["lhs"] = r.lhs.to_string(d);
    j["rhs"] = r.rhs.to_string(d);
    j["residual"] = r.residual.to_string(d);
    j["bound"] = r.bound.to_string(d);
    j["within_bound"] = r.within_bound;
    j["series_start"] = 1; // the n = 0 term is singular and excluded
    j["finite_sum_sign"] = "(-1)^j";
    return j;
}

json convolution_json(unsigned long m, const BigRational& a, const BigRational& b,
                      const ConvolutionCheck& c) {
    json j;
    j["kind"] = "identity";
    j["which"] = "convolution";
    j["m"] = m;
    j["a"] = a.to_string();
    j["b"] = b.to_string();
    j["lhs"] = c.lhs.to_string();
    j["rhs"] = c.rhs.to_string();
    j["equal"] = c.equal;
    j["rhs_plus_one_variant"] = c.rhs_plus_one.to_string();
    j["equal_plus_one_variant"] = c.equal_plus_one;
    return j;
}

json expansion_json(const FamilySpec& spec, const DensePoly& p, const std::string& var) {
    json coeffs = json::object();
    for (unsigned long d = p.degree() + 1; d-- > 0;) {
        const BigRational& c = p.coeff(d);
        if (c.is_zero()) continue;
        std::string key = d == 0 ? "1" : (d == 1 ? var : var + "^" + std::to_string(d));
        coeffs[key] = c.to_string();
    }
    json j;
    j["kind"] = "expand";
    j["variant"] = variant_name(spec.variant);
    j["label"] = spec.label();
    j["k"] = spec.k;
    j["n"] = spec.n ? json(*spec.n) : json(nullptr);
    j["ell"] = spec.ell ? json(*spec.ell) : json(nullptr);
    j["degree"] = p.is_zero() ? 0 : p.degree();
    j["var"] = var;
    j["coefficients"] = coeffs;
    return j;
}

json bernoulli_table_json(unsigned long max_m) {
    json values = json::array();
    for (unsigned long m = 0; m <= max_m; ++m) values.push_back(bernoulli_number(m).to_string());
    json j;
    j["kind"] = "bernoulli";
    j["max"] = max_m;
    j["values"] = values;
    return j;
}

json report_envelope(const std::string& command, json reports) {
    json j;
    j["schema"] = "report.v1";
    j["command"] = command;
    j["reports"] = std::move(reports);
    return j;
}

} // namespace rtz
