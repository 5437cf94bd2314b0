#pragma once

#include <string>

#include "json.hpp"
#include "rtz/analytic.hpp"
#include "rtz/bernoulli.hpp"
#include "rtz/certify.hpp"
#include "rtz/criteria.hpp"
#include "rtz/families.hpp"

namespace rtz {

// Insertion-ordered so dumps are byte-stable for a given build order.
using json = nlohmann::ordered_json;

std::string symmetry_name(PolySymmetry s);

/* Every serializer yields an object carrying a "kind" discriminator; the
 * shapes are documented in schemas/report.v1.json. Rationals go out as
 * "numerator/denominator" strings, floats as decimal strings, booleans and
 * small counts natively. No timestamps or other run-dependent fields. */
json to_json(const NumericCrossCheck& c);
json to_json(const Certificate& c);
json to_json(const ClassicReport& r);
json to_json(const ConjectureReport& r);
json criteria_json(unsigned k, unsigned n, const CriterionReport& r);
json identity_sum_json(unsigned k, const Identity515& id);
json identity_residual_json(const IdentityResidual& r);
json convolution_json(unsigned long m, const BigRational& a, const BigRational& b,
                      const ConvolutionCheck& c);
json expansion_json(const FamilySpec& spec, const DensePoly& p, const std::string& var);
json bernoulli_table_json(unsigned long max_m);

/* {"schema": "report.v1", "command": ..., "reports": [...]} */
json report_envelope(const std::string& command, json reports);

} // namespace rtz
