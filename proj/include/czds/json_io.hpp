#ifndef CZDS_JSON_IO_HPP
#define CZDS_JSON_IO_HPP

#include <json.hpp>

#include "czds/bases.hpp"
#include "czds/characterize.hpp"
#include "czds/desolve.hpp"
#include "czds/diffop.hpp"
#include "czds/poly.hpp"
#include "czds/verify.hpp"
#include "czds/zeros.hpp"

namespace czds {

using json = nlohmann::json;

// Rationals travel as strings "p/q" ("p" when the denominator is 1) so no
// JSON reader can lose precision.

// {"coeffs": ["-1/2", "0", "1"]} ascending degree; zero polynomial: [].
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

// {"family": "jacobi", "alpha": "1/2", "beta": "-1/2"} etc.;
// custom: {"family": "custom", "polys": [...]}.
json basis_to_json(const BasisFamily& f);
BasisFamily basis_from_json(const json& j);

// {"terms": [{"order": 1, "coeff": {...}}, ...]} sorted by order.
json diffop_to_json(const DiffOp& op);
DiffOp diffop_from_json(const json& j);

// {"degree": 2 | "zero-poly", "real": .., "nonreal": ..}
json zero_count_to_json(const ZeroCount& zc);

json verify_report_to_json(const VerifyReport& report);

json de_solutions_to_json(const std::vector<DeSolution>& solutions);

json certificate_to_json(const CzdsCertificate& cert);

json sharpness_to_json(const SharpnessWitness& w);

}  // namespace czds

#endif
