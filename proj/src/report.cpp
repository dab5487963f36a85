#include "multisep/report.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "multisep/betti.hpp"
#include "multisep/error.hpp"
#include "multisep/fixtures.hpp"
#include "multisep/hilbert.hpp"
#include "multisep/p1p1.hpp"
#include "multisep/separators.hpp"

#ifndef MULTISEP_FIXTURE_DIR
#define MULTISEP_FIXTURE_DIR "fixtures"
#endif

namespace multisep {

namespace {

std::string show(const std::vector<MultiDegree>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].str();
  return s + "}";
}
std::string show(const DegreeSet& d) { return show(d.elements); }
std::string show(const Partition& p) { return p.str(); }
std::string show(std::size_t n) { return std::to_string(n); }
std::string show(bool b) { return b ? "true" : "false"; }
std::string show(const BettiTable& t) {
  std::string s = t.str();
  for (auto& c : s)
    if (c == '\n') c = ';';
  return s;
}

class Check {
 public:
  explicit Check(CriterionResult& r) : r_(r) {}

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    r_.pass = false;
    if (r_.failures.size() < 25) r_.failures.push_back(what);
  }

  template <class T>
  void equal(const T& got, const T& want, const std::string& what) {
    expect(got == want, what + ": expected " + show(want) + ", got " + show(got));
  }

 private:
  CriterionResult& r_;
};

BettiTable table(const std::vector<std::vector<MultiDegree>>& indices) {
  BettiTable t(2);
  for (std::size_t j = 0; j < indices.size(); ++j)
    for (const auto& d : indices[j]) t.add(j + 1, d);
  return t;
}

std::vector<MultiDegree> shifts_at(const BettiTable& t, std::size_t j) {
  std::vector<MultiDegree> out;
  for (const auto& [d, m] : t.at(j))
    for (unsigned c = 0; c < m; ++c) out.push_back(d);
  return out;
}

MultiForm product_of(const SpaceShape& shape, const std::vector<MultiForm>& fs) {
  MultiForm acc{MultiDegree::zero(shape.factors()), Vector{Scalar(1)}};
  for (const auto& f : fs) acc = multiply(shape, acc, f);
  return acc;
}

DegreeBox square_box(const PointSet& x) {
  return DegreeBox(MultiDegree::constant(x.shape().factors(), static_cast<unsigned>(x.size())));
}

struct PropertyCase {
  PointSet x;
  bool ferrers = false;
};

std::vector<PropertyCase> p1p1_cases() {
  std::vector<PropertyCase> out;
  const SpaceShape shape{1, 1};
  std::mt19937_64 rng(20240611);
  for (unsigned n = 0; n < 90; ++n) {
    const std::size_t pool = 2 + n % 3;
    const std::size_t s = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(12, pool * pool))(rng);
    out.push_back({random_grid_subset(shape, pool, s, rng()), false});
  }
  for (unsigned n = 0; n < 70; ++n) out.push_back({random_ferrers(12, rng()), true});
  for (unsigned n = 0; n < 40; ++n) {
    const std::size_t s = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
    out.push_back({random_pointset(shape, s, rng()), false});
  }
  return out;
}

std::vector<PointSet> p1p1p1_cases() {
  std::vector<PointSet> out;
  const SpaceShape shape{1, 1, 1};
  std::mt19937_64 rng(77031);
  for (unsigned n = 0; n < 24; ++n) {
    const std::size_t s = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    out.push_back(n % 2 ? random_pointset(shape, s, rng()) : random_grid_subset(shape, 2, s, rng()));
  }
  return out;
}

// Difference set is an up-set generated by degree_set, separator space
// dimension is 1 exactly on it, and every minimal degree has a separator.
// Returns the size of the degree set.
std::size_t check_point(Check& c, const PointSet& x, std::size_t k, const std::string& tag) {
  const ProjPoint& p = x[k];
  const DegreeBox box = default_box(x);
  const HilbertTable diff = difference_table(x, p, box);
  const DegreeSet d = degree_set(x, p, box);
  const auto degs = box.degrees();
  for (std::size_t n = 0; n < degs.size(); ++n) {
    const std::size_t want = in_upset(degs[n], d.elements) ? 1 : 0;
    c.expect(diff.values()[n] == want, tag + " point " + std::to_string(k + 1) + ": difference at " + degs[n].str() +
                                           " is " + std::to_string(diff.values()[n]) + " but degree set is " + show(d));
    c.expect(separator_space_dim(x, p, degs[n]) == want,
             tag + " point " + std::to_string(k + 1) + ": separator space dimension at " + degs[n].str());
  }
  for (const auto& a : d.elements)
    c.expect(is_separator(x, k, minimal_separator(x, p, a)),
             tag + " point " + std::to_string(k + 1) + ": no separator realised at " + a.str());
  return d.size();
}

void criterion_nineteen(const ReferenceSets& sets, Check& c, CriterionResult& r) {
  const PointSet& x = sets.nineteen;
  const SpaceShape shape{1, 1};
  const ProjPoint p34 = grid_point(3, 4);
  const Partition lambda = partition_of(x);
  c.equal(lambda, Partition{5, 4, 4, 3, 2, 1}, "partition");

  const std::vector<MultiDegree> s1{{6, 0}, {0, 5}, {1, 4}, {3, 3}, {4, 2}, {5, 1}};
  const std::vector<MultiDegree> s2{{6, 1}, {1, 5}, {3, 4}, {4, 3}, {5, 2}};
  const BettiTable fx = acm_resolution(lambda);
  c.equal(fx, table({s1, s2}), "resolution of X");

  c.equal(degree_set(x, p34), DegreeSet{{MultiDegree{2, 3}}}, "deg_X(P34)");

  if (x.contains(p34)) {
    const MultiForm f = minimal_separator(x, p34, MultiDegree{2, 3});
    std::vector<MultiForm> lines;
    for (long i : {1, 2}) lines.push_back(point_linear_form(0, coords({1, i})));
    for (long j : {1, 2, 3}) lines.push_back(point_linear_form(1, coords({1, j})));
    const MultiForm expected = product_of(shape, lines);
    c.expect(proportional(f, expected), "separator of P34 is not proportional to L1 L2 R1 R2 R3");
    c.expect(is_separator(x, x.require_index(p34), f), "extracted form does not separate P34");
    c.expect(is_separator(x, x.require_index(p34), expected), "L1 L2 R1 R2 R3 does not separate P34");

    const std::vector<MultiDegree> s1y{{6, 0}, {0, 5}, {1, 4}, {2, 3}, {4, 2}, {5, 1}};
    const std::vector<MultiDegree> s2y{{6, 1}, {1, 5}, {2, 4}, {4, 3}, {5, 2}};
    c.equal(removed_resolution(x, p34), table({s1y, s2y}), "resolution of X minus P34");
  }

  const BettiTable cone = mapping_cone_table(fx, MultiDegree{2, 3}, shape);
  auto i1 = s1;
  i1.push_back({2, 3});
  auto i2 = s2;
  i2.push_back({3, 3});
  i2.push_back({2, 4});
  c.equal(cone, table({i1, i2, {{3, 4}}}), "mapping cone");
  const BettiTable shortened = cancel(cone, 3, MultiDegree{3, 4});
  c.equal(shortened.length(), std::size_t{2}, "length after cancelling (3,4)");
  c.expect(shortened.multiplicity(1, MultiDegree{3, 3}) == 1 && shortened.multiplicity(2, MultiDegree{3, 3}) == 1,
           "shortened cone lacks the leftover (3,3) pair");
  if (x.contains(p34))
    c.equal(cancel(shortened, 2, MultiDegree{3, 3}), removed_resolution(x, p34), "cone after both cancellations");
  r.cases = 1;
}

void criterion_6531(const ReferenceSets& sets, Check& c, CriterionResult& r) {
  const PointSet& x = sets.partition_6531;
  const Partition lambda = partition_of(x);
  c.equal(conjugate(lambda), Partition{4, 3, 3, 2, 2, 1}, "conjugate partition");
  c.equal(shifts_at(acm_resolution(lambda), 2), std::vector<MultiDegree>{{1, 6}, {2, 5}, {3, 3}, {4, 1}}, "S2");
  const std::set<std::pair<long, long>> preserved{{4, 1}, {3, 2}, {3, 3}, {2, 4}, {2, 5}, {1, 6}};
  std::size_t kept = 0;
  for (const auto& p : x) {
    const Removal got = removal_classification(x, p);
    const auto ic = p.integer_coords();
    const std::pair<long, long> ij{ic[0][1].get_si(), ic[1][1].get_si()};
    const Removal want = preserved.contains(ij) ? Removal::AcmPreserved : Removal::AcmLost;
    c.expect(got == want, "removal of " + p.str() + ": expected " + removal_name(want) + ", got " + removal_name(got));
    kept += got == Removal::AcmPreserved;
  }
  c.equal(kept, std::size_t{6}, "removable points");
  c.equal(x.size() - kept, std::size_t{9}, "non-removable points");
  r.cases = x.size();
}

void criterion_twenty_eight(const ReferenceSets& sets, Check& c, CriterionResult& r) {
  const PointSet& x = sets.twenty_eight;
  c.expect(in_general_position(general_position_p2()), "P^2 points not in general position");
  // the factor coordinates of the fixture must themselves be in general position
  std::vector<Vector> firsts;
  for (const auto& p : x) {
    const Vector v = p.canonical().factor(0);
    if (std::find(firsts.begin(), firsts.end(), v) == firsts.end()) firsts.push_back(v);
  }
  c.equal(firsts.size(), std::size_t{6}, "distinct first coordinates");
  c.expect(in_general_position(firsts), "fixture coordinates not in general position");
  c.equal(x.size(), std::size_t{28}, "number of points");

  const auto p = general_position_p2();
  const ProjPoint q22({p[1], p[1]});
  c.equal(degree_set(x, q22), DegreeSet{{MultiDegree{2, 2}}}, "deg_X(Q22)");
  const DegreeBox box(MultiDegree{4, 4});
  const HilbertTable diff = difference_table(x, q22, box);
  const auto degs = box.degrees();
  const std::vector<MultiDegree> up{{2, 2}};
  for (std::size_t n = 0; n < degs.size(); ++n)
    c.expect(diff.values()[n] == (in_upset(degs[n], up) ? 1u : 0u), "difference indicator at " + degs[n].str());

  // last module of the resolution of X as reported for this configuration
  BettiTable last(2);
  last.add(4, MultiDegree{3, 4}, 4);
  last.add(4, MultiDegree{4, 3}, 4);
  last.add(4, MultiDegree{4, 4}, 1);
  c.expect(last_shift_criterion(last, MultiDegree{2, 2}, x.shape()),
           "(4,4) = deg(Q22) + (2,2) not found among the last shifts");
  r.cases = degs.size();
}

void criterion_eleven(const ReferenceSets& sets, Check& c, CriterionResult& r) {
  const PointSet& x = sets.eleven;
  const StarResult st = star_property(x);
  c.expect(!st.holds, "property (*) holds");
  c.expect(st.witness.has_value(), "no witness returned");
  if (st.witness) {
    const auto& a = st.witness->first;
    const auto& b = st.witness->second;
    const ProjPoint ab({a.factor(0), b.factor(1)});
    const ProjPoint ba({b.factor(0), a.factor(1)});
    c.expect(x.contains(a) && x.contains(b), "witness points not in X");
    c.expect(!(ProjPoint({a.factor(0)}) == ProjPoint({b.factor(0)})) &&
                 !(ProjPoint({a.factor(1)}) == ProjPoint({b.factor(1)})),
             "witness shares a coordinate");
    c.expect(!x.contains(ab) && !x.contains(ba), "witness has a mixed point in X");
  }
  c.equal(nu_bruteforce(x).total, std::size_t{7}, "minimal generators of I_X");
  r.cases = 1;
}

void criterion_properties(Check& c, CriterionResult& r) {
  std::size_t n = 0;
  for (const auto& pc : p1p1_cases()) {
    const std::string tag = "P1xP1 case " + std::to_string(n++) + " (s=" + std::to_string(pc.x.size()) + ")";
    bool all_single = true;
    for (std::size_t k = 0; k < pc.x.size(); ++k) all_single = check_point(c, pc.x, k, tag) == 1 && all_single;
    if (pc.ferrers) c.expect(all_single, tag + ": Ferrers set with a non-singleton degree set");
    c.expect(is_acm(pc.x) == all_single, tag + ": (*) is " + show(is_acm(pc.x)) + " but singleton degrees is " +
                                             show(all_single));
  }
  std::size_t m = 0;
  for (const auto& x : p1p1p1_cases()) {
    const std::string tag = "P1xP1xP1 case " + std::to_string(m++) + " (s=" + std::to_string(x.size()) + ")";
    for (std::size_t k = 0; k < x.size(); ++k) check_point(c, x, k, tag);
  }
  r.cases = n + m;
}

void criterion_ferrers_degrees(Check& c, CriterionResult& r) {
  std::mt19937_64 rng(4401);
  for (unsigned n = 0; n < 100; ++n) {
    const PointSet x = random_ferrers(20, rng());
    for (const auto& p : x) {
      const DegreeSet d = degree_set(x, p);
      c.equal(d, DegreeSet{{point_degree_acm(x, p)}}, "Ferrers case " + std::to_string(n) + " point " + p.str());
    }
  }
  r.cases = 100;
}

void check_lost_removals(Check& c, const PointSet& x, const std::string& tag, std::size_t& count) {
  std::optional<GeneratorCount> nux;
  for (const auto& p : x) {
    if (removal_classification(x, p) != Removal::AcmLost) continue;
    ++count;
    const DegreeBox box = square_box(x);
    if (!nux) nux = nu_bruteforce(x, box);
    const PointSet y = remove_point(x, p);
    const GeneratorCount nuy = nu_bruteforce(y, box);
    c.equal(nuy.total, nux->total + 1, tag + " minus " + p.str() + ": generators of I_Y");
    const BettiTable predicted = removed_resolution(x, p);
    c.expect(kpoly_check(y, predicted, box), tag + " minus " + p.str() + ": predicted table disagrees with H_Y");
    std::vector<MultiDegree> brute;
    for (const auto& [d, k] : nuy.per_degree)
      for (std::size_t j = 0; j < k; ++j) brute.push_back(d);
    c.equal(brute, shifts_at(predicted, 1), tag + " minus " + p.str() + ": generator degrees");
  }
}

void criterion_lost_removals(const ReferenceSets& sets, Check& c, CriterionResult& r) {
  std::size_t count = 0;
  check_lost_removals(c, sets.partition_6531, "(6,5,3,1) set", count);
  std::size_t n = 0;
  for (const auto& pc : p1p1_cases()) {
    if (is_acm(pc.x)) check_lost_removals(c, pc.x, "P1xP1 case " + std::to_string(n), count);
    ++n;
  }
  c.expect(count > 0, "no ACM_LOST removal was exercised");
  r.cases = count;
}

void criterion_koszul(Check& c, CriterionResult& r) {
  for (const SpaceShape& shape : {SpaceShape{1, 1}, SpaceShape{2, 2}, SpaceShape{1, 1, 1}}) {
    const BettiTable t = koszul_point_table(shape);
    const unsigned total = shape.total_dim();
    c.equal(t.length(), std::size_t{total}, shape.str() + " length");
    for (unsigned j = 0; j <= total; ++j)
      c.equal(t.total(j), static_cast<std::size_t>(binomial(total, j)), shape.str() + " beta_" + std::to_string(j));
    c.equal(t.at(total).size(), std::size_t{1}, shape.str() + " distinct top shifts");
    c.expect(t.multiplicity(total, shape.as_degree()) == 1, shape.str() + ": top shift is not " + shape.as_degree().str());
  }
  r.cases = 3;
}

void check_identities(Check& c, const PointSet& x, const ProjPoint& p, const DegreeBox& box, const std::string& tag) {
  const DegreeSet d = degree_set(x, p, box.contains(default_box(x).upper()) ? std::nullopt : std::optional(box));
  std::vector<MultiForm> seps;
  for (const auto& a : d.elements) seps.push_back(minimal_separator(x, p, a));
  c.expect(verify_ideal_sum(x, p, seps, box), tag + ": (I_X, F_1..F_s) != I_Y on " + box.upper().str());
  for (const auto& f : seps)
    c.expect(verify_colon(x, p, f, box), tag + ": (I_X : F) != I_P for F of degree " + f.degree.str());
}

void criterion_identities(const ReferenceSets& sets, Check& c, CriterionResult& r) {
  std::size_t cases = 0;
  for (const auto& [x, tag] : {std::pair{&sets.nineteen, "19-point set"}, std::pair{&sets.partition_6531, "(6,5,3,1) set"},
                               std::pair{&sets.eleven, "11-point set"}, std::pair{&sets.twenty_eight, "28-point set"}}) {
    for (const auto& p : *x) check_identities(c, *x, p, square_box(*x), std::string(tag) + " at " + p.str());
    cases += x->size();
  }
  std::mt19937_64 rng(90210);
  for (unsigned n = 0; n < 50; ++n) {
    const bool triple = n % 5 == 4;
    const SpaceShape shape = triple ? SpaceShape{1, 1, 1} : SpaceShape{1, 1};
    const std::size_t s = std::uniform_int_distribution<std::size_t>(1, triple ? 5 : 8)(rng);
    const PointSet x = n % 2 ? random_pointset(shape, s, rng()) : random_grid_subset(shape, 3, s, rng());
    for (const auto& p : x) check_identities(c, x, p, square_box(x), "random case " + std::to_string(n) + " at " + p.str());
    cases += x.size();
  }
  r.cases = cases;
}

}  // namespace

ReferenceSets builtin_reference_sets() {
  return {nineteen_point_set(), partition_6531_set(), twenty_eight_point_set(), eleven_point_set()};
}

std::filesystem::path default_fixture_dir() { return MULTISEP_FIXTURE_DIR; }

ReferenceSets load_reference_sets(const std::filesystem::path& dir) {
  auto load = [&](const char* name) {
    std::ifstream in(dir / name);
    if (!in) throw Error(Errc::ParseError, "cannot read " + (dir / name).string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_points_any(ss.str());
  };
  return {load("nineteen.pts"), load("partition_6531.pts"), load("twenty_eight.pts"), load("eleven.pts")};
}

std::vector<PointSet> property_cases_p1p1() {
  std::vector<PointSet> out;
  for (auto& pc : p1p1_cases()) out.push_back(std::move(pc.x));
  return out;
}

std::vector<PointSet> property_cases_p1p1p1() { return p1p1p1_cases(); }

std::vector<CriterionResult> run_acceptance(const ReferenceSets& sets,
                                            const std::function<void(const CriterionResult&)>& progress,
                                            const std::vector<unsigned>& only) {
  using Body = std::function<void(Check&, CriterionResult&)>;
  const std::vector<std::pair<std::string, Body>> criteria{
      {"19-point set: partition, resolution, deg(P34), separator, removal, mapping cone",
       [&](Check& c, CriterionResult& r) { criterion_nineteen(sets, c, r); }},
      {"(6,5,3,1) set: conjugate, S2, removal classification of all points",
       [&](Check& c, CriterionResult& r) { criterion_6531(sets, c, r); }},
      {"28-point P2xP2 set: general position, deg(Q22), difference indicator, last shift",
       [&](Check& c, CriterionResult& r) { criterion_twenty_eight(sets, c, r); }},
      {"11-point set: (*) fails with witness, 7 minimal generators",
       [&](Check& c, CriterionResult& r) { criterion_eleven(sets, c, r); }},
      {"random sets: up-set structure, separator dimensions, Ferrers singletons, (*) equivalence",
       [&](Check& c, CriterionResult& r) { criterion_properties(c, r); }},
      {"random Ferrers sets: closed-form point degree equals Hilbert comparison",
       [&](Check& c, CriterionResult& r) { criterion_ferrers_degrees(c, r); }},
      {"ACM-losing removals: one extra generator, predicted table matches H_Y",
       [&](Check& c, CriterionResult& r) { criterion_lost_removals(sets, c, r); }},
      {"Koszul tables of a point for (1,1), (2,2), (1,1,1)", [&](Check& c, CriterionResult& r) { criterion_koszul(c, r); }},
      {"colon and ideal-sum identities on reference and random sets",
       [&](Check& c, CriterionResult& r) { criterion_identities(sets, c, r); }},
  };

  std::vector<CriterionResult> out;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (!only.empty() && std::find(only.begin(), only.end(), k + 1) == only.end()) continue;
    CriterionResult r;
    r.id = static_cast<unsigned>(k + 1);
    r.title = criteria[k].first;
    Check c(r);
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(c, r);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (progress) progress(r);
    out.push_back(std::move(r));
  }
  return out;
}

CriterionResult check_reference_files(const ReferenceSets& loaded) {
  CriterionResult r;
  r.title = "reference files match the built-in configurations";
  Check c(r);
  const auto start = std::chrono::steady_clock::now();
  const ReferenceSets builtin = builtin_reference_sets();
  const std::pair<const char*, std::pair<const PointSet*, const PointSet*>> pairs[] = {
      {"nineteen.pts", {&loaded.nineteen, &builtin.nineteen}},
      {"partition_6531.pts", {&loaded.partition_6531, &builtin.partition_6531}},
      {"twenty_eight.pts", {&loaded.twenty_eight, &builtin.twenty_eight}},
      {"eleven.pts", {&loaded.eleven, &builtin.eleven}},
  };
  for (const auto& [name, sets] : pairs) {
    const auto& [got, want] = sets;
    ++r.cases;
    if (!(got->shape() == want->shape())) {
      c.expect(false, std::string(name) + ": shape " + got->shape().str() + ", expected " + want->shape().str());
      continue;
    }
    for (const auto& p : *want) c.expect(got->contains(p), std::string(name) + ": missing " + p.str());
    for (const auto& p : *got) c.expect(want->contains(p), std::string(name) + ": unexpected " + p.str());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.title << "  (" << r.cases << " cases, " << std::fixed
     << std::setprecision(2) << r.seconds << " s)\n";
  for (const auto& f : r.failures) os << "      " << f << '\n';
  return os.str();
}

}  // namespace multisep
