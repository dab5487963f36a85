// multisep: Hilbert functions, separator degrees and P^1 x P^1 resolutions
// of finite point sets from the command line.
//
// Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 shape error,
// 4 point index out of range, 5 unmet precondition.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "multisep/error.hpp"
#include "multisep/hilbert.hpp"
#include "multisep/p1p1.hpp"
#include "multisep/report.hpp"
#include "multisep/separators.hpp"

using json = nlohmann::ordered_json;
using namespace multisep;

namespace {

enum Exit { Ok = 0, VerifyFailed = 1, ParseFailed = 2, BadShape = 3, BadIndex = 4, Precondition = 5 };

int exit_code(Errc e) {
  switch (e) {
    case Errc::ParseError:
    case Errc::DuplicatePoint:
    case Errc::ZeroVector:
      return ParseFailed;
    case Errc::ShapeMismatch:
    case Errc::LengthMismatch:
      return BadShape;
    case Errc::PointNotFound:
      return BadIndex;
    default:
      return Precondition;
  }
}

PointSet read_points(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    ss << in.rdbuf();
  }
  return parse_points_any(ss.str());
}

std::optional<DegreeBox> parse_box(const std::string& text, const SpaceShape& shape) {
  if (text.empty()) return std::nullopt;
  std::vector<unsigned> parts;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      std::size_t used = 0;
      const long v = std::stol(tok, &used);
      if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
      parts.push_back(static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "bad --box entry '" + tok + "'");
    }
  }
  if (parts.size() != shape.factors())
    throw Error(Errc::ShapeMismatch, "--box has " + std::to_string(parts.size()) + " entries for " + shape.str());
  return DegreeBox(MultiDegree(parts));
}

const ProjPoint& point_at(const PointSet& x, long k) {
  if (k < 1 || static_cast<std::size_t>(k) > x.size())
    throw Error(Errc::PointNotFound, "point index " + std::to_string(k) + " outside 1.." + std::to_string(x.size()));
  return x[static_cast<std::size_t>(k - 1)];
}

json degree_json(const MultiDegree& d) { return d.components(); }

json degrees_json(const std::vector<MultiDegree>& ds) {
  json a = json::array();
  for (const auto& d : ds) a.push_back(degree_json(d));
  return a;
}

std::string scalar_text(const Scalar& q) { return q.get_str(); }

json form_json(const SpaceShape& shape, const MultiForm& f) {
  json coeffs = json::array();
  const auto exps = monomial_basis(shape, f.degree);
  for (std::size_t k = 0; k < exps.size(); ++k)
    if (sgn(f.coeffs[k]) != 0) coeffs.push_back({{"exponents", exps[k]}, {"value", scalar_text(f.coeffs[k])}});
  return {{"degree", degree_json(f.degree)}, {"coefficients", coeffs}};
}

// Monomial in x{k}_{l} notation, factors numbered from 1.
std::string monomial_text(const SpaceShape& shape, const Exponents& e) {
  std::string s;
  std::size_t v = 0;
  for (std::size_t k = 0; k < shape.factors(); ++k)
    for (unsigned l = 0; l <= shape.dim(k); ++l, ++v) {
      if (e[v] == 0) continue;
      if (!s.empty()) s += '*';
      s += "x" + std::to_string(k + 1) + std::to_string(l);
      if (e[v] > 1) s += '^' + std::to_string(e[v]);
    }
  return s.empty() ? "1" : s;
}

std::string form_text(const SpaceShape& shape, const MultiForm& f) {
  std::string s;
  const auto exps = monomial_basis(shape, f.degree);
  for (std::size_t k = 0; k < exps.size(); ++k) {
    if (sgn(f.coeffs[k]) == 0) continue;
    s += "    " + monomial_text(shape, exps[k]) + "  " + scalar_text(f.coeffs[k]) + "\n";
  }
  return s;
}

json betti_json(const BettiTable& t) {
  json out = json::object();
  for (std::size_t j = 0; j <= t.length(); ++j) {
    json a = json::array();
    for (const auto& [d, m] : t.at(j)) a.push_back({{"shift", degree_json(d)}, {"mult", m}});
    out[std::to_string(j)] = a;
  }
  return out;
}

std::string betti_text(const BettiTable& t) {
  std::string s;
  std::istringstream in(t.str());
  for (std::string line; std::getline(in, line);) s += "  F" + line + "\n";
  return s;
}

json table_json(const HilbertTable& h) {
  json out;
  out["box"] = degree_json(h.box().upper());
  if (h.box().factors() == 2) {
    const unsigned cols = h.box().upper()[1] + 1;
    json rows = json::array();
    for (std::size_t k = 0; k < h.values().size(); k += cols)
      rows.push_back(std::vector<std::size_t>(h.values().begin() + static_cast<long>(k),
                                              h.values().begin() + static_cast<long>(k + cols)));
    out["rows"] = rows;
  } else {
    json vals = json::array();
    const auto degs = h.box().degrees();
    for (std::size_t k = 0; k < degs.size(); ++k) vals.push_back({{"degree", degree_json(degs[k])}, {"value", h.values()[k]}});
    out["values"] = vals;
  }
  return out;
}

int cmd_hilbert(const std::string& file, const std::string& box_text, bool as_json) {
  const PointSet x = read_points(file);
  const DegreeBox box = parse_box(box_text, x.shape()).value_or(default_box(x));
  const HilbertTable h = hilbert_table(x, box);
  if (as_json) {
    json out{{"shape", x.shape().dims()}, {"points", x.size()}};
    out["hilbert"] = table_json(h);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "H_X for " << x.size() << " points in " << x.shape().str() << ", box " << box.upper() << "\n"
              << h.str();
  }
  return Ok;
}

int cmd_sepdeg(const std::string& file, long k, const std::string& box_text, bool as_json) {
  const PointSet x = read_points(file);
  const ProjPoint& p = point_at(x, k);
  const auto box = parse_box(box_text, x.shape());
  const DegreeSet d = degree_set(x, p, box);
  std::vector<MultiForm> seps;
  for (const auto& a : d.elements) seps.push_back(minimal_separator(x, p, a));
  if (as_json) {
    json out{{"point", k}, {"coords", p.str()}, {"degree_set", degrees_json(d.elements)}};
    json fs = json::array();
    for (const auto& f : seps) fs.push_back(form_json(x.shape(), f));
    out["separators"] = fs;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "deg_X(P" << k << ") for P" << k << " = " << p.str() << ":";
    for (const auto& a : d.elements) std::cout << ' ' << a;
    std::cout << '\n';
    for (const auto& f : seps) std::cout << "  separator of degree " << f.degree << ":\n" << form_text(x.shape(), f);
  }
  return Ok;
}

std::vector<MultiDegree> generator_degrees(const std::vector<MultiForm>& gens) {
  std::vector<MultiDegree> out;
  for (const auto& g : gens) out.push_back(g.degree);
  return out;
}

int cmd_acm(const std::string& file, bool as_json) {
  const PointSet x = read_points(file);
  if (!(x.shape() == SpaceShape{1, 1}))
    throw Error(Errc::ShapeMismatch, "acm needs points of P^1 x P^1, got " + x.shape().str());
  if (x.empty()) throw Error(Errc::ParseError, "no points");
  const StarResult st = star_property(x);
  json out{{"acm", st.holds}};
  if (st.holds) {
    const Partition lambda = partition_of(x);
    const BettiTable t = acm_resolution(lambda);
    const auto gens = generator_degrees(acm_generators(x));
    const LabeledGrid grid = labeled_grid(x);
    if (as_json) {
      out["partition"] = lambda.parts();
      out["conjugate"] = conjugate(lambda).parts();
      out["betti"] = betti_json(t);
      out["generator_degrees"] = degrees_json(gens);
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << "ACM\n"
                << "lambda  = " << lambda.str() << "\n"
                << "lambda* = " << conjugate(lambda).str() << "\n"
                << grid.ascii() << "resolution shifts:\n"
                << betti_text(t) << "generator degrees:";
      for (const auto& g : gens) std::cout << ' ' << g;
      std::cout << '\n';
    }
  } else {
    if (as_json) {
      out["witness"] = {st.witness->first.str(), st.witness->second.str()};
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << "NOT ACM\nproperty (*) fails for " << st.witness->first.str() << " and " << st.witness->second.str()
                << "\n";
    }
  }
  return Ok;
}

int cmd_remove(const std::string& file, long k, bool as_json) {
  const PointSet x = read_points(file);
  if (!(x.shape() == SpaceShape{1, 1}))
    throw Error(Errc::ShapeMismatch, "remove needs points of P^1 x P^1, got " + x.shape().str());
  const ProjPoint& p = point_at(x, k);
  if (!is_acm(x)) throw Error(Errc::NotACM, "X does not satisfy property (*)");
  const Removal cls = removal_classification(x, p);
  const MultiDegree alpha = point_degree_acm(x, p);
  const BettiTable predicted = removed_resolution(x, p);
  const PointSet y = remove_point(x, p);
  const DegreeBox box(MultiDegree::constant(2, static_cast<unsigned>(x.size())));
  const GeneratorCount nux = nu_bruteforce(x, box);
  const GeneratorCount nuy = nu_bruteforce(y, box);
  const bool kpoly = kpoly_check(y, predicted, box);
  std::vector<MultiDegree> brute;
  for (const auto& [d, m] : nuy.per_degree)
    for (std::size_t j = 0; j < m; ++j) brute.push_back(d);
  std::vector<MultiDegree> index1;
  for (const auto& [d, m] : predicted.at(1))
    for (unsigned j = 0; j < m; ++j) index1.push_back(d);
  const bool nu_ok = cls == Removal::AcmLost ? nuy.total == nux.total + 1 : true;
  const bool gens_ok = brute == index1;
  const bool ok = nu_ok && gens_ok && kpoly;

  if (as_json) {
    json out{{"point", k},
             {"coords", p.str()},
             {"classification", removal_name(cls)},
             {"point_degree", degree_json(alpha)},
             {"predicted", betti_json(predicted)},
             {"nu_x", nux.total},
             {"nu_y", nuy.total},
             {"generator_degrees_y", degrees_json(brute)},
             {"box", degree_json(box.upper())},
             {"nu_check", nu_ok},
             {"generators_match", gens_ok},
             {"kpoly_check", kpoly}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << removal_name(cls) << " removing P" << k << " = " << p.str() << ", deg_X(P" << k << ") = " << alpha
              << "\npredicted resolution of Y:\n"
              << betti_text(predicted) << "minimal generators on box " << box.upper() << ": nu(I_X) = " << nux.total
              << ", nu(I_Y) = " << nuy.total << (nu_ok ? "" : "  MISMATCH") << "\n"
              << "generator degrees of Y " << (gens_ok ? "match" : "DO NOT match") << " index 1\n"
              << "Hilbert function of Y " << (kpoly ? "matches" : "DOES NOT match") << " the predicted table\n";
  }
  return ok ? Ok : VerifyFailed;
}

int cmd_verify_paper(const std::string& dir, const std::vector<unsigned>& only, bool as_json) {
  const auto path = dir.empty() ? default_fixture_dir() : std::filesystem::path(dir);
  const ReferenceSets sets = load_reference_sets(path);
  std::vector<CriterionResult> results{check_reference_files(sets)};
  if (!as_json) std::cout << format_result(results.front()) << std::flush;
  for (auto& r : run_acceptance(
           sets, [&](const CriterionResult& r) {
             if (!as_json) std::cout << format_result(r) << std::flush;
           },
           only))
    results.push_back(std::move(r));
  std::size_t failed = 0;
  for (const auto& r : results) failed += !r.pass;
  if (as_json) {
    json out = json::array();
    for (const auto& r : results)
      out.push_back({{"id", r.id},
                     {"title", r.title},
                     {"pass", r.pass},
                     {"cases", r.cases},
                     {"seconds", r.seconds},
                     {"failures", r.failures}});
    std::cout << json{{"criteria", out}, {"failed", failed}}.dump(2) << '\n';
  } else {
    std::cout << (results.size() - failed) << "/" << results.size() << " checks passed\n";
  }
  return failed == 0 ? Ok : VerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separators, Hilbert functions and resolutions of points in multiprojective space"};
  app.require_subcommand(1);
  bool as_json = false;
  std::size_t threads = 0;
  app.add_flag("--json", as_json, "Machine-readable JSON output");
  app.add_option("--threads", threads, "Worker threads (overrides MULTISEP_THREADS)");

  std::string file, box, dir;
  long point = 0;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function on a box of degrees");
  hilbert->add_option("points", file, "Points file (text or JSON, '-' for stdin)")->required();
  hilbert->add_option("--box", box, "Upper corner a,b,... (default s-1 in every factor)");

  auto* sepdeg = app.add_subcommand("sepdeg", "Degree of a point and its minimal separators");
  sepdeg->add_option("points", file, "Points file")->required();
  sepdeg->add_option("--point", point, "1-based point index")->required();
  sepdeg->add_option("--box", box, "Search box (default s-1 in every factor)");

  auto* acm = app.add_subcommand("acm", "ACM test and resolution for points of P^1 x P^1");
  acm->add_option("points", file, "Points file")->required();

  auto* remove = app.add_subcommand("remove", "Effect of removing one point from an ACM set of P^1 x P^1");
  remove->add_option("points", file, "Points file")->required();
  remove->add_option("--point", point, "1-based point index")->required();

  auto* verify = app.add_subcommand("verify-paper", "Run the regression suite over the reference configurations");
  verify->add_option("--fixtures", dir, "Directory holding the reference point files");
  std::vector<unsigned> only;
  verify->add_option("--only", only, "Run only these criteria (the file check always runs)")
      ->delimiter(',')
      ->check(CLI::Range(1u, criterion_count));

  for (auto* sub : {hilbert, sepdeg, acm, remove, verify}) sub->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Ok : ParseFailed;
  }
  if (threads > 0) setenv("MULTISEP_THREADS", std::to_string(threads).c_str(), 1);

  try {
    if (*hilbert) return cmd_hilbert(file, box, as_json);
    if (*sepdeg) return cmd_sepdeg(file, point, box, as_json);
    if (*acm) return cmd_acm(file, as_json);
    if (*remove) return cmd_remove(file, point, as_json);
    if (*verify) return cmd_verify_paper(dir, only, as_json);
  } catch (const Error& e) {
    std::cerr << "multisep: " << e.what() << '\n';
    return exit_code(e.code());
  }
  return Ok;
}
