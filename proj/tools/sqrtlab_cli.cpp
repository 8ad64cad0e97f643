// Command-line front end: single instances as JSON, sweeps as CSV.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqrtlab/acceptance.hpp"
#include "sqrtlab/bilinear.hpp"
#include "sqrtlab/energy.hpp"
#include "sqrtlab/equidist.hpp"
#include "sqrtlab/errors.hpp"
#include "sqrtlab/exp_sums.hpp"
#include "sqrtlab/kernels.hpp"
#include "sqrtlab/lattice.hpp"
#include "sqrtlab/modular.hpp"
#include "sqrtlab/primes.hpp"
#include "sqrtlab/quad_forms.hpp"
#include "sqrtlab/split_primes.hpp"
#include "sqrtlab/sweeps.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace sqrtlab;

constexpr int kExitUsage = 2;
constexpr int kExitSizeGuard = 3;

struct Flags {
  std::uint64_t q = 0, qmin = 0, qmax = 0;
  std::vector<std::uint64_t> qset;
  std::uint64_t M = 0, N = 0, a = 1, b = 0, h = 1, j = 1, m = 1, n = 1, s = 1;
  double P = 0, R = 0, S = 1, x = 0, width = 0, height = 0;
  std::string weights;
  std::string which;
  std::string kind = "salie";
  std::uint64_t seed = 42;
  double slack = 2.0;
  std::string out;
  unsigned threads = 1;
  bool quick = false;
  bool recalibrate = false;
  std::string calibration;
};

// Writes to --out when given, else stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw DomainError("cannot open --out " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

SweepOptions sweep_options(const Flags& f) {
  SweepOptions o;
  o.slack_exponent = f.slack;
  o.seed = f.seed;
  o.threads = f.threads;
  o.quick = f.quick;
  o.qset = f.qset;
  if (f.q != 0 && o.qset.empty()) o.qset = {f.q};
  if (o.qset.empty() && f.qmax != 0) {
    o.qset = primes_in_range(std::max<std::uint64_t>(f.qmin, 3), f.qmax);
  }
  if (!f.weights.empty()) o.weights = {parse_weight_class(f.weights)};
  return o;
}

PrimeField field_of(const Flags& f) {
  if (f.q < 3 || !is_prime(f.q)) throw DomainError("--q must be an odd prime");
  return PrimeField(f.q);
}

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}, {"abs", std::abs(z)}}; }

json report_json(const BoundCheckReport& r) {
  return json{{"name", r.name}, {"measured", r.measured}, {"envelope", r.envelope}, {"ratio", r.ratio}, {"pass", r.pass}};
}

// Frozen constant for key, or 1 when the calibration file lacks it.
double frozen(const Flags& f, std::string_view key) {
  const std::filesystem::path path = f.calibration.empty() ? Calibration::default_path() : std::filesystem::path(f.calibration);
  const Calibration cal = Calibration::load(path);
  return cal.contains(key) ? cal.constant(key) : 1.0;
}

void emit(const Flags& f, const json& j) {
  Output out(f.out);
  out.stream() << j.dump(2) << '\n';
}

void emit_sweep(const Flags& f, std::string_view name) {
  const SweepOptions o = sweep_options(f);
  const SweepTable t = run_sweep(name, o);
  Output out(f.out);
  write_csv(out.stream(), t, o);
  for (const auto& [key, m] : t.max_ratio) std::cerr << key << " max ratio " << format_double(m) << '\n';
  for (const std::string& msg : t.failures) std::cerr << "failure: " << msg << '\n';
}

WeightVector weight_of(const Flags& f, std::uint64_t start, Rng& rng) {
  return WeightVector::make(f.weights.empty() ? WeightClass::indicator : parse_weight_class(f.weights), f.q, start, rng);
}

void cmd_sums(const Flags& f) {
  const PrimeField field = field_of(f);
  json j{{"q", f.q}, {"kind", f.kind}};
  if (f.kind == "salie") {
    j["m"] = f.m;
    j["n"] = f.n;
    j["direct"] = complex_json(salie_sum(field, f.m, f.n));
    j["closed_form"] = complex_json(salie_closed_form(field, f.m, f.n));
  } else if (f.kind == "gauss") {
    j["a"] = f.a;
    j["b"] = f.b;
    j["direct"] = complex_json(gauss_sum(field, f.a, f.b));
    j["closed_form"] = complex_json(gauss_closed_form(field, f.a, f.b));
  } else if (f.kind == "incomplete") {
    j["a"] = f.a;
    j["h"] = f.h;
    const double qd = static_cast<double>(f.q);
    const double m = incomplete_sqrt_max(field, f.a, f.h);
    j["max_partial"] = m;
    j["envelope"] = std::sqrt(qd) * std::log(qd);
    j["ratio"] = m / (std::sqrt(qd) * std::log(qd));
  } else {
    throw DomainError("--kind must be salie, gauss or incomplete");
  }
  emit(f, j);
}

void cmd_energy(const Flags& f) {
  const PrimeField field = field_of(f);
  if (f.N < 1 || 2 * f.N > f.q) throw DomainError("need 1 <= N and 2N <= q");
  Rng rng(f.seed);
  const WeightVector beta = weight_of(f, f.N, rng);
  const double Nd = static_cast<double>(f.N), qd = static_cast<double>(f.q);
  const double sl = slack_factor(qd, f.slack);
  const Complex E = energy(beta, f.j, field);
  json j{{"q", f.q}, {"j", f.j}, {"N", f.N}, {"seed", f.seed}, {"weights", f.weights.empty() ? "indicator" : f.weights},
         {"energy", complex_json(E)}, {"fourth_moment", q_fourth_moment(beta, f.j, field)}};
  const double e66 = envelope_lemma66(beta.norm_inf(), beta.norm1(), Nd, qd) * sl;
  const double e67 = envelope_lemma67(beta.norm_inf(), beta.norm1(), Nd, qd) * sl;
  j["envelopes"] = json::array({report_json(check_bound("weighted_energy_a", std::abs(E), e66, frozen(f, "lemma66"), f.slack)),
                                report_json(check_bound("weighted_energy_b", std::abs(E), e67, frozen(f, "lemma67"), f.slack))});
  if (beta.is_real() && f.j == 1 && (f.weights.empty() || f.weights == "indicator")) {
    const double u = static_cast<double>(unweighted_energy(f.N, field));
    j["unweighted_energy"] = u;
    j["envelopes"].push_back(report_json(check_bound("unweighted_energy", u, envelope_propA1(Nd, qd), frozen(f, "propA1"))));
  }
  emit(f, j);
}

void cmd_lattice(const Flags& f) {
  if (f.q < 2) throw DomainError("--q must be at least 2");
  const double h = f.width > 0 ? f.width : std::sqrt(static_cast<double>(f.q));
  const double H = f.height > 0 ? f.height : std::sqrt(static_cast<double>(f.q));
  const Lattice2D L = Lattice2D::congruence(static_cast<std::int64_t>(f.s), f.q);
  const Box2D B(h, H);
  const SuccessiveMinima sm = successive_minima(L, B);
  const PointCount pc = lattice_points_in_box(L, B);
  const auto hi = static_cast<std::int64_t>(std::floor(h)), Hi = static_cast<std::int64_t>(std::floor(H));
  const DichotomyMeasure d = dichotomy_measure(static_cast<std::int64_t>(f.s), {1, std::max<std::int64_t>(hi, 1)},
                                               {1, std::max<std::int64_t>(Hi, 1)}, f.q);
  json j{{"q", f.q},
         {"s", f.s},
         {"h", h},
         {"H", H},
         {"lambda1", sm.lambda1},
         {"lambda2", sm.lambda2},
         {"v1", {sm.v1.x, sm.v1.y}},
         {"v2", {sm.v2.x, sm.v2.y}},
         {"minkowski", report_json(minkowski_check(L, B))},
         {"points_in_box", pc.count},
         {"point_bound", report_json(pc.bound)},
         {"congruence_count", d.count},
         {"c_counting", d.c_counting},
         {"c_reconstruction", std::isinf(d.c_reconstruction) ? json(nullptr) : json(d.c_reconstruction)}};
  emit(f, j);
}

void cmd_bilinear(const Flags& f) {
  const PrimeField field = field_of(f);
  if (f.M < 1 || f.N < 1) throw DomainError("need --M and --N at least 1");
  Rng rng(f.seed);
  BilinearInstance inst{f.a, f.h, weight_of(f, f.M, rng), weight_of(f, f.N, rng)};
  const Complex W = bilinear_weyl_sum(field, inst);
  const double qd = static_cast<double>(f.q), Md = static_cast<double>(f.M), Nd = static_cast<double>(f.N);
  json j{{"q", f.q}, {"a", f.a}, {"h", f.h}, {"M", f.M}, {"N", f.N}, {"seed", f.seed}, {"W", complex_json(W)}};
  if (2 * f.M <= f.q && 2 * f.N <= f.q) {
    const double sl = slack_factor(qd, f.slack);
    j["envelopes"] = json::array();
    for (int which : {1, 2}) {
      const double env = theorem14_envelope(which, inst.alpha.norm2(), inst.beta.norm_inf(), inst.beta.norm1(), Md, Nd, qd) * sl;
      j["envelopes"].push_back(report_json(check_bound("bilinear_" + std::to_string(which), std::abs(W), env, frozen(f, "thm14_" + std::to_string(which)), f.slack)));
    }
  }
  emit(f, j);
}

void cmd_forms(const Flags& f) {
  if (f.q <= 3 || f.q % 4 != 3 || !is_prime(f.q)) throw DomainError("--q must be a prime = 3 mod 4 above 3");
  const L1Values L = L1_chi(f.q, 1'000'000);
  const HeegnerFraction hf = heegner_fraction(f.q);
  json forms = json::array();
  for (const BinaryQuadraticForm& b : enumerate_reduced_forms(f.q)) forms.push_back({b.A, b.B, b.C});
  json j{{"q", f.q},
         {"class_number", class_number(f.q)},
         {"forms", forms},
         {"L1_direct", L.direct},
         {"L1_exact", L.exact},
         {"heegner_inside", hf.inside},
         {"heegner_fraction", hf.fraction},
         {"limit", duke_limit()},
         {"coefficient_bound_holds", hf.coefficient_bound_holds}};
  if (f.x >= 1) {
    j["x"] = f.x;
    j["r_sum"] = r_mean_value(f.x, f.q);
  }
  emit(f, j);
}

void cmd_forms_duke(const Flags& f) {
  const std::uint64_t lo = f.qmin ? f.qmin : 100000, hi = f.qmax ? f.qmax : lo + 2000;
  Output out(f.out);
  out.stream() << "# sweep=duke qmin=" << lo << " qmax=" << hi << '\n';
  CsvWriter w(out.stream(), {"q", "class_number", "inside", "fraction", "limit", "coefficient_bound"});
  for (std::uint64_t q : primes_in_range(std::max<std::uint64_t>(lo, 7), hi)) {
    if (q % 4 != 3) continue;
    const HeegnerFraction hf = heegner_fraction(q);
    w.cell(q).cell(hf.total).cell(hf.inside).cell(hf.fraction).cell(duke_limit()).cell(hf.coefficient_bound_holds ? 1 : 0);
    w.end_row();
  }
}

void cmd_split(const Flags& f) {
  if (f.q < 3 || !is_prime(f.q)) throw DomainError("--q must be an odd prime");
  const double P = f.P > 0 ? f.P : static_cast<double>(f.q);
  const SplitCensus c = split_census(P, f.q);
  json j{{"q", f.q}, {"P", P}, {"split", c.split}, {"inert", c.inert}, {"ramified", c.ramified}, {"primes", c.primes}};
  if (f.q > 3) {
    j["least_split_prime"] = least_split_prime(f.q);
    j["least_nonresidue"] = least_nonresidue(f.q);
  }
  emit(f, j);
}

void cmd_split_thm12(const Flags& f) {
  const std::uint64_t lo = std::max<std::uint64_t>(f.qmin, 67), hi = f.qmax ? f.qmax : 10000;
  Output out(f.out);
  out.stream() << "# sweep=thm12 qmin=" << lo << " qmax=" << hi << '\n';
  CsvWriter w(out.stream(), {"q", "t", "omega", "bound", "excluded", "not_split", "all_odd", "pass"});
  for (std::uint64_t q : primes_in_range(lo, hi)) {
    if (q % 16 != 3) continue;
    const Theorem12Report r = theorem12_verify(q);
    w.cell(q).cell(r.t).cell(r.omega).cell(r.bound).cell(static_cast<std::uint64_t>(r.excluded.size()));
    w.cell(static_cast<std::uint64_t>(r.not_split.size())).cell(r.all_odd ? 1 : 0).cell(r.pass ? 1 : 0);
    w.end_row();
  }
}

void cmd_discrepancy(const Flags& f) {
  const PrimeField field = field_of(f);
  const double P = f.P > 0 ? f.P : static_cast<double>(f.q);
  const DiscrepancyReport d = f.R > 0 ? delta_q(P, f.R, field, f.slack) : gamma_q(P, field, f.slack);
  json j{{"q", f.q}, {"P", P}, {"N", d.N}, {"D", d.D}, {"alpha", d.alpha}, {"beta", d.beta},
         {"envelope", d.envelope}, {"ratio", d.ratio}, {"slack_exponent", f.slack}};
  if (f.R > 0) j["R"] = f.R;
  emit(f, j);
}

void cmd_coverage(const Flags& f) {
  const PrimeField field = field_of(f);
  const double qd = static_cast<double>(f.q);
  const CoverageReport c = eos_coverage(field, f.P > 0 ? f.P : qd, f.R > 0 ? f.R : qd, f.S);
  emit(f, json{{"q", f.q}, {"covered", c.covered}, {"missing", c.missing}, {"fraction", c.fraction},
               {"threshold", c.threshold}});
}

int cmd_verify(const Flags& f) {
  SweepOptions o = sweep_options(f);
  o.qset.clear();
  o.weights.clear();
  const std::filesystem::path path = f.calibration.empty() ? Calibration::default_path() : std::filesystem::path(f.calibration);
  if (f.recalibrate) {
    const Calibration cal = recalibrate(o, &std::cerr);
    cal.save(f.out.empty() ? path : std::filesystem::path(f.out));
    std::cout << "calibration written to " << (f.out.empty() ? path.string() : f.out) << '\n';
    return 0;
  }
  const Calibration cal = Calibration::load(path);
  o.slack_exponent = cal.slack_exponent();
  bool ok = true;
  for (int id = 1; id <= kCriteria; ++id) {
    const CriterionResult r = run_criterion(id, o, cal);
    std::cout << format_criterion(r) << std::endl;
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}

void add_common(CLI::App* app, Flags& f) {
  app->add_option("--q", f.q, "prime modulus");
  app->add_option("--qmin", f.qmin, "smallest modulus of a range");
  app->add_option("--qmax", f.qmax, "largest modulus of a range");
  app->add_option("--qset", f.qset, "explicit moduli")->delimiter(',');
  app->add_option("--M", f.M, "first dyadic length");
  app->add_option("--N", f.N, "second dyadic length");
  app->add_option("--P", f.P, "prime bound");
  app->add_option("--R", f.R, "second prime bound");
  app->add_option("--S", f.S, "square bound");
  app->add_option("--weights", f.weights, "indicator, pm1 or phase")
      ->check(CLI::IsMember({"indicator", "pm1", "phase"}));
  app->add_option("--seed", f.seed, "generator seed");
  app->add_option("--slack-exponent", f.slack, "exponent s of the (log q)^s slack");
  app->add_option("--out", f.out, "output file (default stdout)");
  app->add_option("--threads", f.threads, "worker threads")->check(CLI::Range(1u, 256u));
  app->add_flag("--quick", f.quick, "smaller grids");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical experiments on modular square roots"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Print help for every subcommand and exit");
  Flags f;
  std::function<int()> action;
  // Parent callbacks fire after their nested subcommand's, so keep the first.
  const auto run = [&](auto fn) {
    return [&, fn] {
      if (!action) action = [&, fn] { fn(f); return 0; };
    };
  };

  auto* sums = app.add_subcommand("sums", "complete and incomplete exponential sums");
  add_common(sums, f);
  sums->add_option("--kind", f.kind, "salie, gauss or incomplete");
  sums->add_option("--a", f.a, "multiplier");
  sums->add_option("--b", f.b, "linear coefficient of the Gauss sum");
  sums->add_option("--freq", f.h, "frequency h");
  sums->add_option("--m", f.m, "first Salie argument");
  sums->add_option("--n", f.n, "second argument");
  sums->callback(run(cmd_sums));
  auto* sums_sweep = sums->add_subcommand("sweep", "largest partial sums over primes");
  add_common(sums_sweep, f);
  sums_sweep->callback([&] { if (!action) action = [&] { emit_sweep(f, "incomplete_sqrt"); return 0; }; });

  auto* en = app.add_subcommand("energy", "additive energy of squares");
  add_common(en, f);
  en->add_option("--j", f.j, "square multiplier");
  en->add_option("--calibration", f.calibration, "calibration file");
  en->callback(run(cmd_energy));
  auto* en_sweep = en->add_subcommand("sweep", "energy bounds over a grid");
  add_common(en_sweep, f);
  en_sweep->add_option("--which", f.which, "propA1, lemma65 or lemma66_67")
      ->check(CLI::IsMember({"propA1", "lemma65", "lemma66_67"}));
  en_sweep->callback([&] { if (!action) action = [&] { emit_sweep(f, f.which.empty() ? "propA1" : f.which); return 0; }; });

  auto* lat = app.add_subcommand("lattice", "congruence lattices and successive minima");
  add_common(lat, f);
  lat->add_option("--s", f.s, "slope of x = s y mod q");
  lat->add_option("--width", f.width, "box half-width in x");
  lat->add_option("--height", f.height, "box half-width in y");
  lat->callback(run(cmd_lattice));
  auto* lat_sweep = lat->add_subcommand("sweep", "sampled counting/reconstruction dichotomy");
  add_common(lat_sweep, f);
  lat_sweep->callback([&] { if (!action) action = [&] { emit_sweep(f, "lemma63"); return 0; }; });

  auto* bil = app.add_subcommand("bilinear", "bilinear Weyl sums over modular square roots");
  add_common(bil, f);
  bil->add_option("--a", f.a, "multiplier");
  bil->add_option("--freq", f.h, "frequency h");
  bil->add_option("--calibration", f.calibration, "calibration file");
  bil->callback(run(cmd_bilinear));
  auto* bil_sweep = bil->add_subcommand("sweep", "bilinear and related sweeps");
  add_common(bil_sweep, f);
  bil_sweep->add_option("--which", f.which, "thm14, typeI, A4, propB1, trivbd or propC1")
      ->check(CLI::IsMember({"thm14", "typeI", "A4", "propB1", "trivbd", "propC1"}));
  bil_sweep->callback([&] { if (!action) action = [&] { emit_sweep(f, f.which.empty() ? "thm14" : f.which); return 0; }; });

  auto* forms = app.add_subcommand("forms", "reduced forms, class numbers, L(1, chi)");
  add_common(forms, f);
  forms->add_option("--x", f.x, "mean value cutoff");
  forms->callback(run(cmd_forms));
  auto* duke = forms->add_subcommand("duke", "Heegner point fractions over a q range");
  add_common(duke, f);
  duke->callback(run(cmd_forms_duke));

  auto* split = app.add_subcommand("split", "split primes in Q(sqrt(-q))");
  add_common(split, f);
  split->callback(run(cmd_split));
  auto* thm12 = split->add_subcommand("thm12", "prime factors of the principal form");
  add_common(thm12, f);
  thm12->callback(run(cmd_split_thm12));

  auto* disc = app.add_subcommand("discrepancy", "discrepancy of square roots of primes");
  add_common(disc, f);
  disc->callback(run(cmd_discrepancy));
  auto* disc_sweep = disc->add_subcommand("sweep", "discrepancy envelopes over a grid");
  add_common(disc_sweep, f);
  disc_sweep->add_option("--which", f.which, "gamma or delta")->check(CLI::IsMember({"gamma", "delta"}));
  disc_sweep->callback([&] { if (!action) action = [&] { emit_sweep(f, f.which.empty() ? "gamma" : f.which); return 0; }; });
  auto* cov = disc->add_subcommand("coverage", "classes of the form p r s^2");
  add_common(cov, f);
  cov->callback(run(cmd_coverage));

  auto* verify = app.add_subcommand("verify", "acceptance suite");
  add_common(verify, f);
  verify->add_flag("--recalibrate", f.recalibrate, "rerun all sweeps and rewrite the calibration file");
  verify->add_option("--calibration", f.calibration, "calibration file");
  verify->callback([&] { if (!action) action = [&] { return cmd_verify(f); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  try {
    return action ? action() : kExitUsage;
  } catch (const SizeGuardError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitSizeGuard;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
