#include "hypersurf/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "hypersurf/block_search.hpp"
#include "hypersurf/error.hpp"
#include "hypersurf/hyperbolize.hpp"
#include "hypersurf/invariants.hpp"
#include "hypersurf/linalg.hpp"
#include "hypersurf/milnor_fiber.hpp"

namespace hypersurf::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  long d = 0;
  long from = 0;
  long to = 0;
  long r = 1;
  long coeff_bound = 1;
  std::uint64_t node_budget = 100'000'000;
  unsigned threads = 1;
  long b2 = 0;
  std::string which;
  std::string format = "json";
  std::string out_path;
  std::string certificate;
};

void emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw Error(Errc::InvalidArgument, "cannot open output file " + o.out_path);
  file << text;
  if (!file.flush()) throw Error(Errc::InvalidArgument, "cannot write output file " + o.out_path);
}

std::string dump_line(const json& j) { return j.dump() + "\n"; }

BlockCertificate read_certificate(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Parse, "cannot open certificate file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, std::string("certificate file is not JSON: ") + e.what());
  }
  return certificate_from_json(j);
}

// The form a certificate of the given size lives on: θ_d or Θ_d.
std::pair<IntMatrix, std::string> ambient_form(long d, const BlockCertificate& cert) {
  const FiberForms forms = linking_form(d);
  if (cert.ambient_rank == forms.theta.matrix.rows()) return {forms.theta.matrix, "theta"};
  if (cert.ambient_rank == forms.linking.rows()) return {forms.linking, "Theta"};
  throw Error(Errc::InvalidCertificate, "ambient rank matches neither theta_d nor Theta_d");
}

bool certificate_valid(long d, const BlockCertificate& cert, std::string* ambient, std::ostream& err) {
  if (cert.d != 0 && cert.d != d) {
    err << "certificate is for degree " << cert.d << ", not " << d << "\n";
    return false;
  }
  try {
    const auto [form, name] = ambient_form(d, cert);
    if (ambient) *ambient = name;
    return verify_block_certificate(form, cert);
  } catch (const Error& e) {
    if (e.code() == Errc::DegreeTooSmall) throw;
    err << "error: " << e.what() << "\n";
    return false;
  }
}

void check_format(const Options& o, std::initializer_list<const char*> allowed) {
  if (std::none_of(allowed.begin(), allowed.end(), [&](const char* f) { return o.format == f; }))
    throw UsageError("unsupported --format " + o.format);
}

int cmd_report(const Options& o, std::ostream& out) {
  check_format(o, {"json", "csv"});
  const DegreeReport r = degree_report(o.d);
  emit(o.format == "csv" ? report_csv_header() + "\n" + to_csv_row(r) + "\n" : dump_line(to_json(r)), o, out);
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  check_format(o, {"json", "csv"});
  if (o.from > o.to) throw UsageError("--from must not exceed --to");
  std::string text;
  if (o.format == "csv") {
    text = report_csv_header() + "\n";
    for (long d = o.from; d <= o.to; ++d) text += to_csv_row(degree_report(d)) + "\n";
  } else {
    json rows = json::array();
    for (long d = o.from; d <= o.to; ++d) rows.push_back(to_json(degree_report(d)));
    text = dump_line(rows);
  }
  emit(text, o, out);
  return kOk;
}

int cmd_matrix(const Options& o, std::ostream& out) {
  if (o.d < 3) throw Error(Errc::DegreeTooSmall, "forms need d >= 3");
  const FiberForms forms = linking_form(o.d);
  const IntMatrix& m = o.which == "theta" ? forms.theta.matrix : o.which == "Theta" ? forms.linking : forms.intersection;
  emit(dump_line(to_json(m)), o, out);
  return kOk;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.d < 3) throw Error(Errc::DegreeTooSmall, "forms need d >= 3");
  const IntMatrix theta = torus_seifert(o.d - 1, o.d).matrix;
  SearchOptions so;
  so.r = static_cast<std::size_t>(o.r);
  so.coeff_bound = o.coeff_bound;
  so.node_budget = o.node_budget;
  so.threads = o.threads;
  SearchResult res = search_block(theta, so);
  err << "search: " << to_string(res.status) << " after " << res.nodes << " nodes\n";
  if (!res.certificate) return kDomainError;
  res.certificate->d = o.d;
  if (!verify_block_certificate(theta, *res.certificate))
    throw Error(Errc::InvalidCertificate, "search produced an invalid certificate");
  emit(dump_line(to_json(*res.certificate)), o, out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const BlockCertificate cert = read_certificate(o.certificate);
  std::string ambient = "unknown";
  const bool ok = certificate_valid(o.d, cert, &ambient, err);
  emit(dump_line({{"d", o.d}, {"r", cert.r}, {"ambient", ambient}, {"valid", ok}}), o, out);
  return ok ? kOk : kDomainError;
}

int cmd_lift(const Options& o, std::ostream& out, std::ostream& err) {
  const BlockCertificate cert = read_certificate(o.certificate);
  if (!certificate_valid(o.d, cert, nullptr, err)) throw Error(Errc::InvalidCertificate, "certificate does not verify");
  const BlockCertificate lifted = lift_certificate(cert, o.d);
  if (!verify_block_certificate(linking_form(o.d).linking, lifted))
    throw Error(Errc::InvalidCertificate, "lifted certificate does not verify");
  emit(dump_line(to_json(lifted)), o, out);
  return kOk;
}

int cmd_hyperbolize(const Options& o, std::ostream& out, std::ostream& err) {
  const BlockCertificate cert = read_certificate(o.certificate);
  if (!certificate_valid(o.d, cert, nullptr, err)) throw Error(Errc::InvalidCertificate, "certificate does not verify");
  const IntMatrix gram = restricted_intersection_gram(cert, o.d);
  const UnimodularTransform t = hyperbolize(gram, gram.rows() / 2);
  const Integer det = determinant(t.matrix);
  if (t.matrix.transpose() * gram * t.matrix != t.certified_gram || !verify_hyperbolic(t.certified_gram) ||
      abs(det) != 1)
    throw Error(Errc::InvalidCertificate, "hyperbolization failed verification");
  emit(dump_line({{"d", o.d},
                  {"r", gram.rows() / 2},
                  {"gram", to_json(gram)},
                  {"transform", to_json(t.matrix)},
                  {"certified_gram", to_json(t.certified_gram)},
                  {"determinant", det.get_si()},
                  {"hyperbolic", true}}),
       o, out);
  return kOk;
}

int cmd_feasible(const Options& o, std::ostream& out) {
  check_format(o, {"json", "csv", "text"});
  const FeasibilityVerdict v = check_feasibility(o.d, o.b2);
  std::string text;
  if (o.format == "text")
    text = v.verdict + "\n";
  else if (o.format == "csv")
    text = "d,b2,floor,feasible,verdict\n" + std::to_string(v.d) + "," + std::to_string(v.b2) + "," +
           std::to_string(v.floor) + "," + (v.feasible ? "true" : "false") + "," + v.verdict + "\n";
  else
    text = dump_line({{"d", v.d}, {"b2", v.b2}, {"floor", v.floor}, {"feasible", v.feasible}, {"verdict", v.verdict}});
  emit(text, o, out);
  return kOk;
}

int cmd_asymptotic(const Options& o, std::ostream& out) {
  check_format(o, {"json", "csv"});
  const auto rows = asymptotic_report(o.to);
  std::string text;
  if (o.format == "csv") {
    text = "d,r_d,b2_reduced,reduced_ratio,removed_ratio,extrapolated\n";
    for (const auto& r : rows)
      text += std::to_string(r.d) + "," + std::to_string(r.r_d) + "," + std::to_string(r.b2_reduced) + "," +
              json(r.reduced_ratio).dump() + "," + json(r.removed_ratio).dump() + "," +
              (r.extrapolated ? "true" : "false") + "\n";
  } else {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"d", r.d},
                     {"r_d", r.r_d},
                     {"b2_reduced", r.b2_reduced},
                     {"reduced_ratio", r.reduced_ratio},
                     {"removed_ratio", r.removed_ratio},
                     {"extrapolated", r.extrapolated}});
    text = dump_line(arr);
  }
  emit(text, o, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants, forms and block certificates of hypersurfaces in CP^3"};
  app.name("hypersurf-cli");
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto degree = [&](CLI::App* sub, long min) {
    sub->add_option("--d", o.d, "degree")->required()->check(CLI::Range(min, kMaxDegree));
  };
  auto format = [&](CLI::App* sub) { sub->add_option("--format", o.format, "csv or json"); };
  auto output = [&](CLI::App* sub) { sub->add_option("--out", o.out_path, "write the payload to this file"); };
  auto certificate = [&](CLI::App* sub) {
    sub->add_option("--certificate", o.certificate, "certificate JSON file")->required();
  };

  auto* report = app.add_subcommand("report", "invariants and surgery budget of one degree");
  degree(report, 1);
  format(report);
  output(report);
  report->callback([&] { action = [&] { return cmd_report(o, out); }; });

  auto* table = app.add_subcommand("table", "report rows for a range of degrees");
  table->add_option("--from", o.from)->required()->check(CLI::Range(1L, kMaxDegree));
  table->add_option("--to", o.to)->required()->check(CLI::Range(1L, kMaxDegree));
  format(table);
  output(table);
  table->callback([&] { action = [&] { return cmd_table(o, out); }; });

  auto* matrix = app.add_subcommand("matrix", "export theta_d, Theta_d or Q_d as Matrix JSON");
  matrix->add_option("--d", o.d, "degree")->required();
  matrix->add_option("--which", o.which)->required()->check(CLI::IsMember({"theta", "Theta", "Q"}));
  output(matrix);
  matrix->callback([&] { action = [&] { return cmd_matrix(o, out); }; });

  auto* search = app.add_subcommand("search", "search a block certificate on theta_d");
  search->add_option("--d", o.d, "degree")->required();
  search->add_option("--r", o.r, "block rank")->required()->check(CLI::PositiveNumber);
  search->add_option("--coeff-bound", o.coeff_bound)->check(CLI::Range(1L, 127L));
  search->add_option("--node-budget", o.node_budget);
  search->add_option("--threads", o.threads, "worker threads, 0 for all cores");
  output(search);
  search->callback([&] { action = [&] { return cmd_search(o, out, err); }; });

  auto* verify = app.add_subcommand("verify", "check a certificate against theta_d or Theta_d");
  verify->add_option("--d", o.d, "degree")->required();
  certificate(verify);
  output(verify);
  verify->callback([&] { action = [&] { return cmd_verify(o, out, err); }; });

  auto* lift = app.add_subcommand("lift", "lift a theta_d certificate to Theta_d");
  lift->add_option("--d", o.d, "degree")->required();
  certificate(lift);
  output(lift);
  lift->callback([&] { action = [&] { return cmd_lift(o, out, err); }; });

  auto* hyper = app.add_subcommand("hyperbolize", "hyperbolic basis of Q_d on a certificate span");
  hyper->add_option("--d", o.d, "degree")->required();
  certificate(hyper);
  output(hyper);
  hyper->callback([&] { action = [&] { return cmd_hyperbolize(o, out, err); }; });

  auto* feasible = app.add_subcommand("feasible", "test b2 against the floor for degree d");
  degree(feasible, 1);
  feasible->add_option("--b2", o.b2)->required();
  feasible->add_option("--format", o.format, "json, csv or text");
  output(feasible);
  feasible->callback([&] { action = [&] { return cmd_feasible(o, out); }; });

  auto* asym = app.add_subcommand("asymptotic", "surgery budget ratios for d = 5..to");
  asym->add_option("--to", o.to)->required()->check(CLI::Range(5L, kMaxDegree));
  format(asym);
  output(asym);
  asym->callback([&] { action = [&] { return cmd_asymptotic(o, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    return action ? action() : kUsageError;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace hypersurf::cli
