#include "czds/json_io.hpp"

#include <stdexcept>

namespace czds {

json poly_to_json(const Poly& p) {
  json coeffs = json::array();
  for (const Rational& c : p.coeffs()) coeffs.push_back(to_string(c));
  return json{{"coeffs", coeffs}};
}

Poly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw std::invalid_argument("polynomial JSON must be {\"coeffs\": [...]}");
  std::vector<Rational> c;
  for (const auto& e : j["coeffs"]) {
    if (!e.is_string()) throw std::invalid_argument("coefficients must be rational strings");
    c.push_back(rational_from_string(e.get<std::string>()));
  }
  return Poly{std::move(c)};
}

json basis_to_json(const BasisFamily& f) {
  using Tag = BasisFamily::Tag;
  switch (f.tag()) {
    case Tag::Standard: return json{{"family", "standard"}};
    case Tag::Hermite: return json{{"family", "hermite"}};
    case Tag::Jacobi:
      return json{{"family", "jacobi"}, {"alpha", to_string(f.alpha())}, {"beta", to_string(f.beta())}};
    case Tag::Ultraspherical:
      return json{{"family", "ultraspherical"}, {"lambda", to_string(f.lambda())}};
    case Tag::Legendre: return json{{"family", "legendre"}};
    case Tag::ChebyshevT: return json{{"family", "chebyshev-t"}};
    case Tag::ChebyshevU: return json{{"family", "chebyshev-u"}};
    case Tag::GenLaguerre:
      return json{{"family", "gen-laguerre"}, {"alpha", to_string(f.alpha())}};
    case Tag::Custom: {
      json polys = json::array();
      for (const Poly& p : f.custom_polys()) polys.push_back(poly_to_json(p));
      return json{{"family", "custom"}, {"polys", polys}};
    }
  }
  throw std::logic_error("unreachable");
}

BasisFamily basis_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family"))
    throw std::invalid_argument("basis JSON must carry a \"family\" tag");
  const std::string family = j["family"].get<std::string>();
  auto param = [&](const char* key) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("missing parameter ") + key);
    return rational_from_string(j[key].get<std::string>());
  };
  if (family == "standard") return BasisFamily::standard();
  if (family == "hermite") return BasisFamily::hermite();
  if (family == "jacobi") return BasisFamily::jacobi(param("alpha"), param("beta"));
  if (family == "ultraspherical") return BasisFamily::ultraspherical(param("lambda"));
  if (family == "legendre") return BasisFamily::legendre();
  if (family == "chebyshev-t") return BasisFamily::chebyshev_t();
  if (family == "chebyshev-u") return BasisFamily::chebyshev_u();
  if (family == "gen-laguerre") return BasisFamily::gen_laguerre(param("alpha"));
  if (family == "custom") {
    if (!j.contains("polys") || !j["polys"].is_array())
      throw std::invalid_argument("custom basis needs \"polys\"");
    std::vector<Poly> polys;
    for (const auto& e : j["polys"]) polys.push_back(poly_from_json(e));
    return BasisFamily::custom(std::move(polys));
  }
  throw std::invalid_argument("unknown basis family: " + family);
}

json diffop_to_json(const DiffOp& op) {
  json terms = json::array();
  for (const auto& [order, coeff] : op.terms())
    terms.push_back(json{{"order", order}, {"coeff", poly_to_json(coeff)}});
  return json{{"terms", terms}};
}

DiffOp diffop_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw std::invalid_argument("operator JSON must be {\"terms\": [...]}");
  DiffOp op;
  for (const auto& t : j["terms"]) {
    unsigned order = t.at("order").get<unsigned>();
    op += DiffOp::term(poly_from_json(t.at("coeff")), order);
  }
  return op;
}

json zero_count_to_json(const ZeroCount& zc) {
  json out;
  if (zc.degree) {
    out["degree"] = *zc.degree;
  } else {
    out["degree"] = "zero-poly";
  }
  out["real"] = zc.real;
  out["nonreal"] = zc.nonreal;
  return out;
}

json verify_report_to_json(const VerifyReport& report) {
  json violations = json::array();
  for (const Violation& v : report.violations) {
    violations.push_back(json{{"index", v.index},
                              {"input", poly_to_json(v.input)},
                              {"output", poly_to_json(v.output)},
                              {"before", zero_count_to_json(v.before)},
                              {"after", zero_count_to_json(v.after)}});
  }
  // Elapsed time is deliberately not serialized: reports with the same seed
  // must be byte-identical.
  return json{{"checked", report.checked},
              {"seed", report.seed},
              {"generator", report.generator},
              {"violations", violations}};
}

json de_solutions_to_json(const std::vector<DeSolution>& solutions) {
  json arr = json::array();
  for (const DeSolution& s : solutions) {
    json basis = json::array();
    for (const Poly& b : s.basis_of_solutions) basis.push_back(poly_to_json(b));
    arr.push_back(json{{"n", s.n},
                       {"gamma", to_string(s.gamma_n)},
                       {"dim", s.solution_dim},
                       {"basis", basis}});
  }
  return json{{"solutions", arr}, {"simple_set", simple_set_exists(solutions)}};
}

json certificate_to_json(const CzdsCertificate& cert) {
  json out;
  out["is_czds"] = cert.is_czds();
  switch (cert.kind) {
    case CzdsCertificate::Kind::AllNegative:
      out["certificate"] = "all-negative-zeros";
      break;
    case CzdsCertificate::Kind::FallingFactorial:
      out["certificate"] = "falling-factorial-prefix";
      out["m"] = cert.m;
      out["residual"] = poly_to_json(cert.residual);
      break;
    case CzdsCertificate::Kind::NotCzds:
      out["certificate"] = "none";
      out["reason"] = cert.reason;
      break;
  }
  return out;
}

json sharpness_to_json(const SharpnessWitness& w) {
  return json{{"n", w.n},
              {"p", poly_to_json(w.p)},
              {"q", poly_to_json(w.q)},
              {"f", poly_to_json(w.f)},
              {"zr_f", w.zr_f},
              {"bound", w.bound}};
}

}  // namespace czds
