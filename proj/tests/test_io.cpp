#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "iga/io.hpp"

using namespace iga;

namespace {

DiscreteSpectrum tiny_spectrum() {
  const auto phi = Reparametrization::identity();
  const FullSymbol sym(1, phi);
  return solve_spectrum(assemble_mass(1, 8, phi),
                        assemble_stiffness(1, 8, phi), 1, 8, sym.max_value());
}

}  // namespace

TEST_CASE("g17 formatting round-trips doubles") {
  for (double v : {1.0, -2.5e-17, 3.141592653589793, 12345.6789e100}) {
    CHECK(std::stod(format_g17(v)) == v);
  }
  CHECK(format_g17(0.25) == "0.25");
}

TEST_CASE("spectrum csv has a header and N rows") {
  const auto spec = tiny_spectrum();
  std::ostringstream os;
  write_spectrum_csv(spec, os);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "k,lambda,normalized_frequency,is_outlier");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == spec.N);
}

TEST_CASE("writers emit byte-identical output on identical input") {
  const auto spec = tiny_spectrum();
  std::ostringstream a, b;
  write_spectrum_csv(spec, a);
  write_spectrum_csv(spec, b);
  CHECK(a.str() == b.str());

  const auto j1 = spectrum_summary_json(spec).dump(2);
  const auto j2 = spectrum_summary_json(spec).dump(2);
  CHECK(j1 == j2);
}

TEST_CASE("summary json carries the documented keys in order") {
  const auto j = spectrum_summary_json(tiny_spectrum());
  const std::vector<std::string> want = {
      "p", "n", "N", "outlier_count", "max_range", "near_degenerate",
      "min_eigenvalue", "max_eigenvalue", "max_normalized_eigenvalue"};
  std::vector<std::string> got;
  for (auto it = j.begin(); it != j.end(); ++it) got.push_back(it.key());
  CHECK(got == want);
}

TEST_CASE("psi and xi tables have the requested row count") {
  const FullSymbol sym(1, make_exp_convex(1.0, 0.5));
  const PsiFunction psi(sym, PsiMethod::explicit_p1);
  std::ostringstream os;
  write_psi_table_csv(psi, 16, os);
  int lines = 0;
  std::string line;
  std::istringstream is(os.str());
  while (std::getline(is, line)) ++lines;
  CHECK(lines == 18);  // header + 17 rows

  const Rearrangement re(psi);
  std::ostringstream xs;
  write_xi_table_csv(re, 8, xs);
  lines = 0;
  std::istringstream xis(xs.str());
  while (std::getline(xis, line)) ++lines;
  CHECK(lines == 10);
}

TEST_CASE("report json builders keep stable key order") {
  OrderingReport rep;
  rep.y_lo = 1.0;
  rep.y_hi = 2.0;
  rep.psi_gap_min = 0.5;
  rep.hypothesis_verified = true;
  rep.pairs_checked = 3;
  const auto j = ordering_json(rep);
  auto it = j.begin();
  CHECK(it.key() == "interval");
  CHECK(j["hypothesis_verified"] == true);

  PackReport pr;
  pr.y0 = 0.0;
  pr.yr = 1.0;
  pr.r = 2;
  pr.counts = {3, 1};
  pr.monotonic = Monotonic::decreasing;
  CHECK(pack_json(pr)["monotonic"] == "decreasing");
}
