#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "czds/json_io.hpp"
#include "czds/sequences.hpp"

namespace {

using czds::json;

json read_json_input(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else if (!path.empty() && path.front() == '{') {
    text = path;
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON input");
  return j;
}

struct BasisOptions {
  std::string family = "standard";
  std::string alpha = "0";
  std::string beta = "0";
  std::string lambda = "0";

  czds::BasisFamily resolve() const {
    if (family == "standard") return czds::BasisFamily::standard();
    if (family == "hermite") return czds::BasisFamily::hermite();
    if (family == "jacobi")
      return czds::BasisFamily::jacobi(czds::rational_from_string(alpha),
                                       czds::rational_from_string(beta));
    if (family == "ultraspherical")
      return czds::BasisFamily::ultraspherical(czds::rational_from_string(lambda));
    if (family == "legendre") return czds::BasisFamily::legendre();
    if (family == "chebyshev-t") return czds::BasisFamily::chebyshev_t();
    if (family == "chebyshev-u") return czds::BasisFamily::chebyshev_u();
    if (family == "gen-laguerre")
      return czds::BasisFamily::gen_laguerre(czds::rational_from_string(alpha));
    throw std::invalid_argument("unknown basis family: " + family);
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--basis,--family", family,
                    "standard|hermite|jacobi|ultraspherical|legendre|chebyshev-t|chebyshev-u|gen-laguerre");
    cmd->add_option("--alpha", alpha, "family parameter (rational)");
    cmd->add_option("--beta", beta, "family parameter (rational)");
    cmd->add_option("--lambda", lambda, "ultraspherical parameter (rational)");
  }
};

czds::SequenceSpec resolve_spec(const std::string& name, const std::string& alpha,
                                const std::string& beta, const std::string& lambda,
                                const std::vector<unsigned>& m, const std::string& h_json) {
  auto exponents = [&]() {
    return m.empty() ? std::vector<unsigned>{1} : m;
  };
  if (name == "affine-shift") return czds::AffineShift{czds::rational_from_string(alpha)};
  if (name == "polynomial-interp") {
    if (h_json.empty()) throw std::invalid_argument("polynomial-interp needs --interp");
    return czds::PolynomialInterp{czds::poly_from_json(read_json_input(h_json))};
  }
  if (name == "jacobi-eigen")
    return czds::JacobiEigen{czds::rational_from_string(alpha), czds::rational_from_string(beta)};
  if (name == "ultra-product")
    return czds::UltraProduct{czds::rational_from_string(lambda), exponents()};
  if (name == "legendre-product") return czds::UltraProduct{czds::Rational(0), exponents()};
  if (name == "cheby-t-product") return czds::ChebyTProduct{exponents()};
  if (name == "cheby-u-product") return czds::ChebyUProduct{exponents()};
  if (name == "laguerre-product") return czds::LaguerreProduct{exponents()};
  throw std::invalid_argument("unknown sequence spec: " + name);
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for complex zero decreasing operators"};
  app.require_subcommand(1);

  // basis
  auto* basis_cmd = app.add_subcommand("basis", "Generate a basis polynomial");
  BasisOptions basis_opts;
  basis_opts.attach(basis_cmd);
  unsigned basis_n = 0;
  basis_cmd->add_option("--n", basis_n, "index")->required();

  // expand
  auto* expand_cmd = app.add_subcommand("expand", "Expand a polynomial in a basis");
  BasisOptions expand_opts;
  expand_opts.attach(expand_cmd);
  std::string expand_input;
  expand_cmd->add_option("--input,-i", expand_input, "polynomial JSON (file, inline, or - for stdin)");

  // zeros
  auto* zeros_cmd = app.add_subcommand("zeros", "Count real and non-real zeros");
  std::string zeros_input;
  zeros_cmd->add_option("--input,-i", zeros_input, "polynomial JSON (file, inline, or - for stdin)");

  // apply
  auto* apply_cmd = app.add_subcommand("apply", "Apply a differential operator");
  std::string apply_input, apply_op_file, apply_phi, apply_psi;
  apply_cmd->add_option("--input,-i", apply_input, "polynomial JSON");
  apply_cmd->add_option("--op", apply_op_file, "operator JSON (file or inline)");
  apply_cmd->add_option("--phi", apply_phi, "use (x^2-1)D + 2(1+a)xI with the given a");
  apply_cmd->add_option("--psi", apply_psi, "use -xD + (x-(a+1))I with the given a");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run a seeded Z_C non-increase campaign");
  BasisOptions verify_basis;
  verify_basis.attach(verify_cmd);
  std::string verify_spec, verify_h, verify_mix = "mixed";
  std::vector<unsigned> verify_m;
  int verify_count = 100, verify_max_degree = 8;
  std::uint64_t verify_seed = 0;
  verify_cmd->add_option("--spec", verify_spec, "sequence family")->required();
  verify_cmd->add_option("--m", verify_m, "product exponents m_0 m_1 ...");
  verify_cmd->add_option("--interp", verify_h, "interpolating polynomial JSON (polynomial-interp)");
  verify_cmd->add_option("--count", verify_count, "corpus size");
  verify_cmd->add_option("--max-degree", verify_max_degree, "corpus degree bound");
  verify_cmd->add_option("--seed", verify_seed, "corpus seed");
  verify_cmd->add_option("--mix", verify_mix, "mixed|real-rooted|nonreal-heavy");

  // counterexample
  auto* cx_cmd = app.add_subcommand("counterexample", "Sharpness witness for negative alpha");
  std::string cx_alpha;
  cx_cmd->add_option("--alpha", cx_alpha, "negative rational")->required();

  // characterize
  auto* char_cmd = app.add_subcommand("characterize", "Decide whether {h(k)} is a standard-basis CZDS");
  std::string char_input;
  char_cmd->add_option("--input,-i", char_input, "polynomial JSON (file, inline, or - for stdin)");

  // solve-de
  auto* de_cmd = app.add_subcommand("solve-de", "Solve the basis-generating differential equation");
  std::string de_q, de_alpha = "0";
  unsigned de_nmax = 8;
  de_cmd->add_option("--q", de_q, "polynomial JSON (file or inline)")->required();
  de_cmd->add_option("--alpha", de_alpha, "non-negative rational");
  de_cmd->add_option("--n-max", de_nmax, "largest index to solve");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*basis_cmd) {
      emit(czds::poly_to_json(czds::basis_poly(basis_opts.resolve(), basis_n)));
      return 0;
    }
    if (*expand_cmd) {
      czds::Poly p = czds::poly_from_json(read_json_input(expand_input));
      json coeffs = json::array();
      for (const auto& c : czds::expand_in_basis(p, expand_opts.resolve()))
        coeffs.push_back(czds::to_string(c));
      emit(json{{"coeffs", coeffs}});
      return 0;
    }
    if (*zeros_cmd) {
      czds::Poly p = czds::poly_from_json(read_json_input(zeros_input));
      emit(czds::zero_count_to_json(czds::zero_counts(p)));
      return 0;
    }
    if (*apply_cmd) {
      czds::Poly p = czds::poly_from_json(read_json_input(apply_input));
      czds::DiffOp op;
      int sources = (!apply_op_file.empty()) + (!apply_phi.empty()) + (!apply_psi.empty());
      if (sources != 1)
        throw std::invalid_argument("apply needs exactly one of --op, --phi, --psi");
      if (!apply_op_file.empty()) {
        op = czds::diffop_from_json(read_json_input(apply_op_file));
      } else if (!apply_phi.empty()) {
        op = czds::phi(czds::rational_from_string(apply_phi));
      } else {
        op = czds::psi(czds::rational_from_string(apply_psi));
      }
      emit(czds::poly_to_json(op.apply(p)));
      return 0;
    }
    if (*verify_cmd) {
      czds::SequenceSpec spec = resolve_spec(verify_spec, verify_basis.alpha, verify_basis.beta,
                                             verify_basis.lambda, verify_m, verify_h);
      czds::BasisFamily family = verify_cmd->count("--basis") ? verify_basis.resolve()
                                                              : czds::default_family(spec);
      czds::CorpusSpec corpus;
      corpus.count = verify_count;
      corpus.max_degree = verify_max_degree;
      corpus.seed = verify_seed;
      if (verify_mix == "mixed") {
        corpus.mix = czds::CorpusSpec::Mix::Mixed;
      } else if (verify_mix == "real-rooted") {
        corpus.mix = czds::CorpusSpec::Mix::RealRooted;
      } else if (verify_mix == "nonreal-heavy") {
        corpus.mix = czds::CorpusSpec::Mix::NonrealHeavy;
      } else {
        throw std::invalid_argument("unknown mix: " + verify_mix);
      }
      auto op = [&](const czds::Poly& p) { return czds::diagonal_apply(spec, family, p); };
      czds::VerifyReport report =
          czds::verify_czdo(op, corpus, czds::nonincrease_budget());
      json out = czds::verify_report_to_json(report);
      out["spec"] = czds::spec_name(spec);
      out["basis"] = czds::basis_to_json(family);
      emit(out);
      std::cerr << "checked " << report.checked << " polynomials in " << report.elapsed.count()
                << " ms, " << report.violations.size() << " violation(s)\n";
      return report.ok() ? 0 : 1;
    }
    if (*cx_cmd) {
      emit(czds::sharpness_to_json(
          czds::sharpness_counterexample(czds::rational_from_string(cx_alpha))));
      return 0;
    }
    if (*char_cmd) {
      czds::Poly h = czds::poly_from_json(read_json_input(char_input));
      emit(czds::certificate_to_json(czds::characterize_standard_czds(h)));
      return 0;
    }
    if (*de_cmd) {
      czds::Poly q = czds::poly_from_json(read_json_input(de_q));
      auto solutions =
          czds::basis_from_de(q, czds::rational_from_string(de_alpha), de_nmax);
      emit(czds::de_solutions_to_json(solutions));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
