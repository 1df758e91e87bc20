// Command-line front door: compute and verify the exact monodromy, invariant,
// Stokes, Euler-pairing, series, Mellin, and numeric-monodromy artifacts.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "hgstokes/verify.hpp"

namespace {

hgs::ReportFormat parse_format(const std::string& f) {
  if (f == "json") return hgs::ReportFormat::json;
  if (f == "text") return hgs::ReportFormat::text;
  if (f == "latex") return hgs::ReportFormat::latex;
  throw CLI::ValidationError("--format must be json, text or latex");
}

int write_output(const std::string& content, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << content;
    return 0;
  }
  std::ofstream os(out_file);
  if (!os) {
    std::cerr << "error: cannot open output file " << out_file << "\n";
    return 2;
  }
  os << content;
  return 0;
}

bool all_pass(const std::vector<hgs::IdentityRecord>& ids) {
  for (const auto& id : ids) {
    if (!id.pass) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Stokes-matrix and hypergeometric-monodromy toolkit"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_file;
  app.add_option("--format", format, "output format: json|text|latex")->capture_default_str();
  app.add_option("--out", out_file, "write output to file");

  long k = 0;
  long terms = 20;
  long k_min = 2, k_max = 8;
  double tol = 1e-10;

  auto* cmd_gen = app.add_subcommand("generators", "emit the monodromy generators");
  cmd_gen->add_option("--k", k, "rank")->required()->check(CLI::Range(2L, 64L));
  auto* cmd_inv = app.add_subcommand("invariant", "emit the quadratic invariant");
  cmd_inv->add_option("--k", k, "rank")->required()->check(CLI::Range(2L, 64L));
  auto* cmd_stokes = app.add_subcommand("stokes", "emit the Stokes matrix");
  cmd_stokes->add_option("--k", k, "rank")->required()->check(CLI::Range(2L, 64L));
  auto* cmd_chi = app.add_subcommand("chi", "emit the Euler pairing matrix");
  cmd_chi->add_option("--k", k, "rank")->required()->check(CLI::Range(2L, 64L));
  auto* cmd_verify = app.add_subcommand("verify", "run the full identity suite over a range of ranks");
  cmd_verify->add_option("--k-min", k_min, "smallest rank")->check(CLI::Range(2L, 64L));
  cmd_verify->add_option("--k-max", k_max, "largest rank")->check(CLI::Range(2L, 64L));
  auto* cmd_series = app.add_subcommand("series", "emit the holomorphic-solution coefficients");
  cmd_series->add_option("--k", k, "rank")->required()->check(CLI::Range(2L, 64L));
  cmd_series->add_option("--terms", terms, "number of coefficients beyond c_0")->capture_default_str();
  auto* cmd_mellin = app.add_subcommand("mellin", "emit the monomial-lattice matrix and exponent forms");
  cmd_mellin->add_option("--k", k, "rank")->required()->check(CLI::Range(2L, 64L));
  auto* cmd_mono = app.add_subcommand("monodromy", "numeric loop-monodromy cross-check");
  cmd_mono->add_option("--k", k, "rank")->required()->check(CLI::Range(2L, 8L));
  cmd_mono->add_option("--tol", tol, "integrator tolerance")->capture_default_str();

  // let --format/--out appear after the subcommand name
  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; })) {
    sc->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  hgs::ReportFormat fmt;
  try {
    fmt = parse_format(format);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    hgs::ReportDocument doc;
    doc.k = k;
    bool failed = false;

    if (cmd_gen->parsed()) {
      doc.section = "generators";
      const auto cc = hgs::cp_char_coeffs(k);
      const hgs::Mat h0 = hgs::companion_h0(cc);
      const hgs::Mat hinf = hgs::companion_hinf(cc);
      doc.matrices.push_back({"h0", h0});
      doc.matrices.push_back({"hinf", hinf});
      const hgs::GroupPresentation g = hgs::cp_generators(k);
      doc.matrices.push_back({"m_1", g.m1});
      for (std::size_t i = 0; i < g.m_omega.size(); ++i) {
        doc.matrices.push_back({"m_omega^" + std::to_string(i + 1), g.m_omega[i]});
      }
      doc.matrices.push_back({"m_inf", g.m_inf});
      doc.identities.push_back({"riemann-fuchs-product", "eq-2.2", hgs::verify_riemann_fuchs(g).holds});
    } else if (cmd_inv->parsed()) {
      doc.section = "invariant";
      const auto inv = hgs::quadratic_invariant_space(hgs::generator_list(hgs::cp_generators(k)), k);
      for (std::size_t i = 0; i < inv.basis.size(); ++i) {
        doc.matrices.push_back({"basis_" + std::to_string(i), inv.basis[i]});
      }
      doc.identities.push_back({"invariant-dimension-one", "lem-2.2", inv.dimension == 1});
      if (inv.dimension == 1) {
        const auto gd = hgs::gram_from_invariant(inv, k);
        doc.matrices.push_back({"gram", gd.g});
        const auto st = hgs::structure_report(gd.g, k);
        const bool struct_ok = (k % 2 != 0)
                                   ? (st.symmetric && st.inverse_toeplitz && st.band_recurrence_holds)
                                   : (st.anti_symmetric && st.bands_match_even_pattern);
        doc.identities.push_back({"invariant-band-structure", "eq-2.6", struct_ok});
      }
    } else if (cmd_stokes->parsed()) {
      doc.section = "stokes";
      const auto sr = hgs::stokes_matrix(k);
      doc.matrices.push_back({"", sr.s});
      doc.identities.push_back({"stokes-binomial-closed-form", "thm-1.2", sr.matches_closed_form});
      if (k % 2 != 0) {
        doc.identities.push_back({"stokes-symmetrization-2g", "thm-1.1", sr.gram_identity});
      } else {
        doc.identities.push_back({"even-degenerate-pairing", "sec-2-even", sr.even_degenerate});
      }
      doc.identities.push_back({"seifert-factorization", "eq-2.12", sr.seifert_identity});
    } else if (cmd_chi->parsed()) {
      doc.section = "chi";
      const auto c = hgs::chi_matrix(k);
      doc.matrices.push_back({"", c.chi});
      const auto rep = hgs::verify_chi_stokes(k, hgs::stokes_matrix(k));
      doc.identities.push_back({"euler-pairing-inverse", "sec-1-chi", rep.chi_inverse_holds});
      doc.identities.push_back({"braid-reordering-identity", "sec-1-braid", rep.braid_identity_holds});
    } else if (cmd_verify->parsed()) {
      std::string out;
      for (long kk = k_min; kk <= k_max; ++kk) {
        hgs::ReportDocument d;
        d.k = kk;
        d.section = "verify";
        d.identities = hgs::identity_suite(kk);
        failed = failed || !all_pass(d.identities);
        out += hgs::emit(d, fmt);
      }
      const int rc = write_output(out, out_file);
      return rc != 0 ? rc : (failed ? 1 : 0);
    } else if (cmd_series->parsed()) {
      doc.section = "series";
      const auto sc = hgs::series_coefficients(k, terms);
      hgs::Mat row(1, static_cast<Eigen::Index>(sc.coeffs.size()));
      for (std::size_t i = 0; i < sc.coeffs.size(); ++i) {
        row(0, static_cast<Eigen::Index>(i)) = hgs::Rational(sc.coeffs[i]);
      }
      doc.matrices.push_back({"coefficients", row});
      bool zero = true;
      for (const auto& r : hgs::apply_hg_operator(k, sc)) zero = zero && (r == 0);
      doc.identities.push_back({"series-operator-annihilation", "eq-3.3", zero});
    } else if (cmd_mellin->parsed()) {
      doc.section = "mellin";
      const auto cm = hgs::cayley_L(k);
      doc.matrices.push_back({"L", cm.l});
      doc.matrices.push_back({"L_inverse", cm.l_inv});
      const auto det = hgs::determinant(cm.l);
      doc.identities.push_back({"cayley-unimodular", "eq-3.8", det == 1 || det == -1});
      bool forms_ok = true;
      try {
        (void)hgs::mellin_exponents(k);
      } catch (const std::logic_error&) {
        forms_ok = false;
      }
      doc.identities.push_back({"mellin-exponent-forms", "eq-3.9", forms_ok});
    } else if (cmd_mono->parsed()) {
      doc.section = "monodromy";
      const auto sys = hgs::companion_system(k, hgs::Plane::zeta);
      const auto cc = hgs::cp_char_coeffs(k);
      const hgs::Mat h0 = hgs::companion_h0(cc);
      const hgs::Mat h1 = hgs::h1_from(h0, hgs::companion_hinf(cc));

      hgs::LoopSpec loop0;
      loop0.center = {0.0, 0.0};
      loop0.radius = 0.5;
      loop0.base_point = {-0.5, 0.0};
      const auto m0 = hgs::loop_monodromy(sys, loop0, tol);
      const auto rep0 = hgs::compare_invariants(m0, h0, 1e-6);

      hgs::LoopSpec loop1;
      loop1.center = {1.0, 0.0};
      loop1.radius = 0.4;
      loop1.base_point = {0.6, 0.0};
      const auto m1 = hgs::loop_monodromy(sys, loop1, tol);
      const auto rep1 = hgs::compare_invariants(m1, h1, 1e-6);

      doc.has_numeric = true;
      doc.numeric_matrix = m0.m;
      doc.estimated_error = std::max(m0.estimated_error, m1.estimated_error);
      doc.identities.push_back({"loop-zero-charpoly", "eq-1.8", rep0.pass});
      doc.identities.push_back({"loop-one-charpoly", "eq-1.9", rep1.pass});
      failed = !(rep0.pass && rep1.pass);
    }

    failed = failed || !all_pass(doc.identities);
    const int rc = write_output(hgs::emit(doc, fmt), out_file);
    return rc != 0 ? rc : (failed ? 1 : 0);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
