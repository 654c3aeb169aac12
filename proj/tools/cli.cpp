#include "hcomm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "hcomm/counting.hpp"
#include "hcomm/group.hpp"
#include "hcomm/group_spec.hpp"
#include "hcomm/lattice.hpp"
#include "hcomm/spectrum.hpp"
#include "hcomm/split_ext.hpp"
#include "hcomm/verify.hpp"

namespace hcomm {

using Json = nlohmann::ordered_json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::OrderCap:
    case ErrorCode::Infeasible:
      return kExitCap;
    case ErrorCode::InternalInconsistency:
    case ErrorCode::FormulaMismatch:
    case ErrorCode::SpectrumMismatch:
    case ErrorCode::SpectrumStatsMismatch:
      return kExitInternal;
    default:
      return kExitInput;
  }
}

namespace {

struct Options {
  std::string group;
  std::optional<unsigned> r;
  std::string r_range;
  std::string z;
  std::string values;
  std::string format = "json";
  std::string emit_plot;
  std::string route;
  std::optional<std::string> check;
  std::size_t lattice_cap = default_lattice_cap();
  std::size_t order_cap = kMaxGroupOrder;
  unsigned max_r = 0;
  std::uint64_t seed = 0x5eed;
};

struct Input {
  std::string spec;  // canonical
  FiniteGroup group;
};

Input load(const Options& o) {
  if (o.group.empty()) fail(ErrorCode::InvalidArgument, "--group is required");
  const GroupSpec spec = parse_spec(o.group);
  return {to_string(spec), make_group(spec, GroupOptions{.order_cap = o.order_cap, .seed = o.seed})};
}

LatticeOptions lattice(const Options& o) { return LatticeOptions{.order_cap = o.lattice_cap}; }

std::vector<unsigned> r_values(const Options& o, unsigned min_r) {
  std::vector<unsigned> out;
  if (!o.r_range.empty()) {
    const auto dots = o.r_range.find("..");
    if (dots == std::string::npos) fail(ErrorCode::InvalidArgument, "--r-range expects a..b, got '" + o.r_range + "'");
    unsigned from = 0, to = 0;
    try {
      from = static_cast<unsigned>(std::stoul(o.r_range.substr(0, dots)));
      to = static_cast<unsigned>(std::stoul(o.r_range.substr(dots + 2)));
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidArgument, "--r-range expects a..b, got '" + o.r_range + "'");
    }
    if (from > to) fail(ErrorCode::InvalidArgument, "--r-range is empty");
    for (unsigned r = from; r <= to; ++r) out.push_back(r);
  } else if (o.r) {
    out.push_back(*o.r);
  } else {
    fail(ErrorCode::InvalidArgument, "--r or --r-range is required");
  }
  for (auto r : out) {
    if (r < min_r) fail(ErrorCode::InvalidArgument, "r must be >= " + std::to_string(min_r));
  }
  return out;
}

std::vector<ExactRational> parse_values(const std::string& text) {
  std::vector<ExactRational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (!item.empty()) out.push_back(parse_rational(item));
  }
  return out;
}

Json header(const Input& in) { return Json{{"group", in.spec}, {"order", in.group.order()}}; }

Json spectrum_json(const Spectrum& s) {
  Json arr = Json::array();
  for (const auto& e : s.entries) arr.push_back(Json{{"m", e.m}, {"c", e.c}});
  return arr;
}

Json rationals_json(const std::vector<ExactRational>& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

// Either a single {"r": .., key: ..} merged into doc or a "values" table.
template <class F>
void per_r(Json& doc, const std::vector<unsigned>& rs, const std::string& key, F&& value) {
  if (rs.size() == 1) {
    doc["r"] = rs.front();
    doc[key] = value(rs.front());
    return;
  }
  Json table = Json::array();
  for (auto r : rs) table.push_back(Json{{"r", r}, {key, value(r)}});
  doc["values"] = std::move(table);
}

std::vector<std::string> emit_plot(const Options& o, const Input& in, const HomCounter& counter,
                                   const Spectrum* spectrum) {
  std::vector<std::string> files;
  if (o.emit_plot.empty()) return files;
  const unsigned top = o.max_r ? o.max_r : 12;
  const std::string pr_path = o.emit_plot + "_pr.csv";
  std::ofstream pr(pr_path);
  if (!pr) fail(ErrorCode::InvalidArgument, "cannot write " + pr_path);
  pr << "r,P_r,P_r_float\n";
  for (unsigned r = 1; r <= top; ++r) {
    const ExactRational p(counter.count(r), pow(ExactInteger(in.group.order()), r));
    pr << r << "," << to_string(p) << "," << static_cast<double>(p) << "\n";
  }
  files.push_back(pr_path);
  if (spectrum != nullptr) {
    const std::string sp_path = o.emit_plot + "_spectrum.csv";
    std::ofstream sp(sp_path);
    if (!sp) fail(ErrorCode::InvalidArgument, "cannot write " + sp_path);
    sp << "m,c_m\n";
    for (const auto& e : spectrum->entries) sp << e.m << "," << e.c << "\n";
    files.push_back(sp_path);
  }
  return files;
}

void attach_plot(Json& doc, const std::vector<std::string>& files) {
  if (!files.empty()) doc["plot_files"] = files;
}

// --- verbs ------------------------------------------------------------------

Json do_count(const Options& o) {
  const Input in = load(o);
  Json doc = header(in);
  const std::string route = o.route.empty() ? "recursion" : o.route;
  doc["route"] = route;
  std::optional<SplitExtension> ext;
  if (route == "split" || route == "cyclic") ext.emplace(in.group, lattice(o));
  else if (route != "recursion" && route != "bruteforce") {
    fail(ErrorCode::InvalidArgument, "count --route must be recursion, bruteforce, split, or cyclic");
  }
  const HomCounter counter(in.group);
  per_r(doc, r_values(o, 0), "hom", [&](unsigned r) {
    if (route == "bruteforce") return to_string(hom_count_bruteforce(in.group, r));
    if (route == "split") return to_string(hom_count_split(*ext, r));
    if (route == "cyclic") return to_string(hom_count_cyclic(*ext, r));
    return to_string(counter.count(r));
  });
  return doc;
}

Json do_prob(const Options& o) {
  const Input in = load(o);
  Json doc = header(in);
  const HomCounter counter(in.group);
  per_r(doc, r_values(o, 1), "P_r", [&](unsigned r) {
    return to_string(ExactRational(counter.count(r), pow(ExactInteger(in.group.order()), r)));
  });
  attach_plot(doc, emit_plot(o, in, counter, nullptr));
  return doc;
}

Json do_kappa(const Options& o) {
  const Input in = load(o);
  Json doc = header(in);
  const std::string route = o.route.empty() ? "burnside" : o.route;
  if (route != "burnside" && route != "orbits") fail(ErrorCode::InvalidArgument, "kappa --route must be burnside or orbits");
  doc["route"] = route;
  const HomCounter counter(in.group);
  per_r(doc, r_values(o, 0), "kappa", [&](unsigned r) {
    return to_string(route == "orbits" ? kappa_orbits_bruteforce(in.group, r) : kappa(counter, r));
  });
  return doc;
}

Json do_stats(const Options& o) {
  const Input in = load(o);
  const AbelianPoset poset = enumerate_abelian_subgroups(in.group, lattice(o));
  const AbelianStats s = abelian_stats(poset);
  Json doc = header(in);
  doc["abelian"] = in.group.is_abelian();
  doc["m"] = s.m;
  doc["N_max"] = s.n_max;
  doc["b"] = s.b;
  doc["M"] = s.maximal_count;
  doc["abelian_subgroups"] = poset.size();
  doc["center_order"] = center(in.group).order();
  doc["classes"] = conjugacy_classes(in.group).size();
  return doc;
}

Spectrum spectrum_by_route(const Options& o, const Input& in) {
  const std::string route = o.route.empty() ? "moebius" : o.route;
  if (route == "moebius") return spectrum_from_moebius(in.group, lattice(o));
  if (route == "strata") return spectrum_explicit(SplitExtension(in.group, lattice(o)));
  fail(ErrorCode::InvalidArgument, "spectrum --route must be moebius or strata");
}

Json do_spectrum(const Options& o) {
  const Input in = load(o);
  Json doc = header(in);
  const Spectrum s = spectrum_by_route(o, in);
  doc["route"] = o.route.empty() ? "moebius" : o.route;
  doc["spectrum"] = spectrum_json(s);
  const FirstPole pole = first_pole(s, abelian_stats(in.group, lattice(o)), in.group.order());
  doc["m_star"] = pole.m_star;
  doc["pole_coeff"] = to_string(pole.coefficient);
  attach_plot(doc, emit_plot(o, in, HomCounter(in.group), &s));
  return doc;
}

Json do_series(const Options& o) {
  const Input in = load(o);
  Json doc = header(in);
  if (in.group.is_abelian()) {
    doc["abelian"] = true;
    doc["series"] = "1/(1-z)";
    if (!o.z.empty()) {
      const ExactRational z = parse_rational(o.z);
      if (z == 1) fail(ErrorCode::PoleHit, "z = 1 is the pole of 1/(1-z)");
      doc["z"] = to_string(z);
      doc["value"] = to_string(ExactRational(1) / (ExactRational(1) - z));
    }
    attach_plot(doc, emit_plot(o, in, HomCounter(in.group), nullptr));
    return doc;
  }
  const SeriesReport r = series_report(in.group, lattice(o));
  doc["abelian"] = false;
  doc["spectrum"] = spectrum_json(r.spectrum);
  doc["m_star"] = r.m_star;
  doc["pole_coeff"] = to_string(r.pole_coefficient);
  doc["radius"] = r.m_star;
  doc["Sigma"] = to_string(r.specials.sigma);
  doc["Alt"] = to_string(r.specials.alt);
  doc["dirichlet_value"] = to_string(r.specials.dirichlet);
  doc["sigma"] = rationals_json(r.sigma);
  doc["hankel_rank"] = r.hankel_rank;
  doc["lambda_prob"] = to_string(r.entropy.lambda_prob);
  doc["lambda_orb"] = r.entropy.lambda_orb;
  doc["index"] = r.entropy.index;
  doc["h_prob"] = r.entropy.h_prob;
  doc["h_orb"] = r.entropy.h_orb;
  if (!o.z.empty()) {
    const ExactRational z = parse_rational(o.z);
    doc["z"] = to_string(z);
    doc["value"] = to_string(eval_series(r.spectrum, z));
  }
  attach_plot(doc, emit_plot(o, in, HomCounter(in.group), &r.spectrum));
  return doc;
}

Json do_recurrence(const Options& o) {
  if (!o.values.empty()) {
    const auto values = parse_values(o.values);
    return Json{{"values", values.size()}, {"hankel_rank", hankel_rank_of_sequence(values)}};
  }
  const Input in = load(o);
  Json doc = header(in);
  const Spectrum s = spectrum_from_moebius(in.group, lattice(o));
  const auto sigma = recurrence_from_spectrum(s);
  const unsigned top = std::max<unsigned>(o.max_r ? o.max_r : 12, static_cast<unsigned>(2 * s.size() + 1));
  const HomCounter counter(in.group);
  std::vector<ExactRational> values;
  for (unsigned r = 2; r <= top; ++r) values.emplace_back(counter.count(r), pow(ExactInteger(in.group.order()), r));
  doc["t"] = sigma.size();
  doc["sigma"] = rationals_json(sigma);
  doc["checked"] = "r=2.." + std::to_string(top);
  doc["holds"] = recurrence_holds(sigma, values);
  doc["hankel_det"] = to_string(determinant(hankel_matrix(values, s.size())));
  doc["hankel_rank"] = hankel_rank_of_sequence(values);
  return doc;
}

Json do_invert(const Options& o) {
  std::vector<ExactRational> values;
  Json doc;
  if (!o.values.empty()) {
    values = parse_values(o.values);
  } else {
    const Input in = load(o);
    doc = header(in);
    const unsigned top = o.max_r ? o.max_r : 13;
    const HomCounter counter(in.group);
    for (unsigned r = 2; r <= top; ++r) values.emplace_back(counter.count(r), pow(ExactInteger(in.group.order()), r));
  }
  const Spectrum s = inverse_spectrum(values);
  doc["values_used"] = values.size();
  doc["t"] = s.size();
  doc["spectrum"] = spectrum_json(s);
  return doc;
}

Json verify_json(const VerifyReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json rows = Json::array();
    for (const auto& r : c.rows) {
      rows.push_back(Json{{"group", r.group}, {"params", r.params}, {"status", r.passed ? "pass" : "fail"},
                          {"detail", r.detail}});
    }
    checks.push_back(Json{{"name", c.name},
                          {"criterion", c.criterion},
                          {"expected", c.expected_pass ? "pass" : "fail"},
                          {"ok", c.ok},
                          {"description", c.description},
                          {"rows", std::move(rows)}});
  }
  return Json{{"verb", "verify"}, {"ok", report.ok()}, {"checks", std::move(checks)}};
}

Json do_report(const Options& o) {
  const Input in = load(o);
  Json doc = do_stats(o);
  const unsigned top = o.max_r ? o.max_r : 8;
  const HomCounter counter(in.group);
  Json table = Json::array();
  for (unsigned r = 1; r <= top; ++r) {
    table.push_back(Json{{"r", r},
                         {"hom", to_string(counter.count(r))},
                         {"P_r", to_string(ExactRational(counter.count(r), pow(ExactInteger(in.group.order()), r)))},
                         {"kappa", to_string(kappa(counter, r))}});
  }
  doc["values"] = std::move(table);
  std::optional<Spectrum> spectrum;
  if (!in.group.is_abelian()) {
    const SeriesReport r = series_report(in.group, lattice(o));
    spectrum = r.spectrum;
    doc["spectrum"] = spectrum_json(r.spectrum);
    doc["m_star"] = r.m_star;
    doc["pole_coeff"] = to_string(r.pole_coefficient);
    doc["Sigma"] = to_string(r.specials.sigma);
    doc["Alt"] = to_string(r.specials.alt);
    doc["dirichlet_value"] = to_string(r.specials.dirichlet);
    doc["sigma"] = rationals_json(r.sigma);
    doc["lambda_prob"] = to_string(r.entropy.lambda_prob);
    doc["h_prob"] = r.entropy.h_prob;
    doc["h_orb"] = r.entropy.h_orb;
  } else {
    doc["series"] = "1/(1-z)";
  }
  attach_plot(doc, emit_plot(o, in, counter, spectrum ? &*spectrum : nullptr));
  return doc;
}

// --- output -------------------------------------------------------------------

std::string csv_field(const Json& v) {
  std::string s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_array()) {
    for (const auto& x : v) s += (s.empty() ? "" : ";") + (x.is_string() ? x.get<std::string>() : x.dump());
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char ch : s) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return quoted + "\"";
  }
  return s;
}

std::string join_row(const std::vector<Json>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) line += (i ? "," : "") + csv_field(fields[i]);
  return line + "\n";
}

// Flattens a document: scalar fields repeat on every row of its first table
// (an array of objects); without a table the document is one row.
std::string to_csv(const Json& doc) {
  if (doc.contains("verb") && doc["verb"] == "verify") {
    std::string out = "check,criterion,expected,check_ok,group,params,status,detail\n";
    for (const auto& c : doc["checks"]) {
      for (const auto& r : c["rows"]) {
        out += join_row({c["name"], c["criterion"], c["expected"], c["ok"], r["group"], r["params"], r["status"],
                         r["detail"]});
      }
    }
    return out;
  }
  std::vector<std::string> scalar_keys;
  const Json* table = nullptr;
  std::string table_key;
  for (const auto& [key, value] : doc.items()) {
    const bool is_table = value.is_array() && !value.empty() && value.front().is_object();
    if (is_table) {
      if (table == nullptr) {
        table = &value;
        table_key = key;
      }
    } else if (!(value.is_array() && !value.empty() && value.front().is_object())) {
      scalar_keys.push_back(key);
    }
  }
  std::vector<std::string> header = scalar_keys;
  std::vector<std::string> table_keys;
  if (table != nullptr) {
    for (const auto& [key, _] : table->front().items()) table_keys.push_back(key);
    header.insert(header.end(), table_keys.begin(), table_keys.end());
  }
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
  out += "\n";
  std::vector<Json> base;
  for (const auto& k : scalar_keys) base.push_back(doc[k]);
  if (table == nullptr) return out + join_row(base);
  for (const auto& row : *table) {
    std::vector<Json> fields = base;
    for (const auto& k : table_keys) fields.push_back(row.contains(k) ? row[k] : Json());
    out += join_row(fields);
  }
  return out;
}

std::string render(const Json& doc, const std::string& format) {
  return format == "csv" ? to_csv(doc) : doc.dump(2) + "\n";
}

Json error_json(const std::string& error, int code, const std::string& detail) {
  return Json{{"error", error}, {"code", code}, {"detail", detail}};
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Exact commuting-probability toolkit for finite groups", "hcomm"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  const auto group_opt = [&](CLI::App* sub) {
    sub->add_option("--group,-g", o.group, "group spec, e.g. \"dihedral(6)\"")->required();
  };
  const auto format_opt = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  const auto caps = [&](CLI::App* sub) {
    sub->add_option("--lattice-cap", o.lattice_cap, "largest |G| for abelian subgroup enumeration");
    sub->add_option("--order-cap", o.order_cap, "largest group order to construct");
    sub->add_option("--seed", o.seed, "seed for the associativity sampler");
  };
  const auto r_opts = [&](CLI::App* sub) {
    auto* r = sub->add_option("--r", o.r, "tuple length");
    auto* range = sub->add_option("--r-range", o.r_range, "inclusive range a..b");
    r->excludes(range);
  };

  auto* count = app.add_subcommand("count", "|Hom(Z^r, G)|");
  auto* prob = app.add_subcommand("prob", "P_r(G)");
  auto* kap = app.add_subcommand("kappa", "orbit counts kappa_r(G)");
  auto* stats = app.add_subcommand("stats", "abelian subgroup statistics m, N_max, b, M");
  auto* spectrum = app.add_subcommand("spectrum", "finite Dirichlet spectrum");
  auto* series = app.add_subcommand("series", "generating series, special values, entropy");
  auto* recurrence = app.add_subcommand("recurrence", "linear recurrence and Hankel rank");
  auto* invert = app.add_subcommand("invert", "recover a spectrum from P_2, P_3, ...");
  auto* verify = app.add_subcommand("verify", "run the corpus verification suite");
  auto* report = app.add_subcommand("report", "combined report for one group");

  for (auto* sub : {count, prob, kap}) {
    group_opt(sub);
    r_opts(sub);
  }
  for (auto* sub : {stats, spectrum, series, report}) group_opt(sub);
  for (auto* sub : {recurrence, invert}) {
    sub->add_option("--group,-g", o.group, "group spec");
    sub->add_option("--values", o.values, "comma-separated exact values P_2, P_3, ...");
  }
  for (auto* sub : {count, prob, kap, stats, spectrum, series, recurrence, invert, verify, report}) {
    format_opt(sub);
    caps(sub);
  }
  for (auto* sub : {count, kap, spectrum}) sub->add_option("--route", o.route, "computation route");
  series->add_option("--z", o.z, "evaluation point (exact rational)");
  for (auto* sub : {prob, spectrum, series, report}) {
    sub->add_option("--emit-plot", o.emit_plot, "write <prefix>_pr.csv and <prefix>_spectrum.csv");
  }
  for (auto* sub : {recurrence, invert, verify, report, prob, spectrum, series}) {
    sub->add_option("--max-r", o.max_r, "largest r used");
  }
  verify->add_option("--check", o.check, "run a single check")->check(CLI::IsMember(verify_check_names()));

  CliResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? kExitOk : kExitInput;
    if (code != 0) result.out = render(error_json("ParseError", kExitInput, e.what()), "json");
    return result;
  }

  try {
    Json doc;
    if (count->parsed()) doc = do_count(o);
    else if (prob->parsed()) doc = do_prob(o);
    else if (kap->parsed()) doc = do_kappa(o);
    else if (stats->parsed()) doc = do_stats(o);
    else if (spectrum->parsed()) doc = do_spectrum(o);
    else if (series->parsed()) doc = do_series(o);
    else if (recurrence->parsed()) doc = do_recurrence(o);
    else if (invert->parsed()) doc = do_invert(o);
    else if (report->parsed()) doc = do_report(o);
    else if (verify->parsed()) {
      const VerifyReport rep = verify_corpus(VerifyOptions{.check = o.check, .max_r = o.max_r, .seed = o.seed});
      result.out = render(verify_json(rep), o.format);
      result.exit_code = rep.ok() ? kExitOk : kExitVerification;
      return result;
    }
    result.out = render(doc, o.format);
  } catch (const Error& e) {
    result.exit_code = exit_code_for(e.code());
    result.out = render(error_json(std::string(to_string(e.code())), result.exit_code, e.detail()), o.format);
  }
  return result;
}

}  // namespace hcomm
