#include "multisep/points.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "multisep/error.hpp"

namespace multisep {

namespace {

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& q) { return sgn(q) == 0; });
}

bool proportional(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

std::string scalar_str(const Scalar& q) { return q.get_str(); }

Scalar parse_scalar(std::string_view tok, std::size_t line) {
  auto fail = [&](const std::string& why) {
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + why + " '" + std::string(tok) + "'");
  };
  std::string t;
  for (char ch : tok)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) fail("empty coordinate");
  const auto slash = t.find('/');
  auto valid_int = [](std::string_view s) {
    std::size_t k = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (k >= s.size()) return false;
    for (; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    return true;
  };
  auto to_int = [](std::string s) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return Integer(s, 10);
  };
  if (slash == std::string::npos) {
    if (!valid_int(t)) fail("malformed coordinate");
    return Scalar(to_int(t));
  }
  const std::string num = t.substr(0, slash), den = t.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') fail("malformed fraction");
  Integer d = to_int(den);
  if (sgn(d) == 0) fail("zero denominator");
  Scalar q(to_int(num), d);
  q.canonicalize();
  return q;
}

ProjPoint make_point(std::vector<Vector> coords, std::size_t line) {
  for (const auto& f : coords)
    if (is_zero(f)) throw Error(Errc::ZeroVector, "line " + std::to_string(line) + ": zero coordinate vector");
  return ProjPoint(std::move(coords));
}

SpaceShape shape_of(const ProjPoint& p) {
  std::vector<unsigned> dims;
  for (const auto& f : p.coords()) {
    if (f.size() < 2) throw Error(Errc::ParseError, "factor needs at least two homogeneous coordinates");
    dims.push_back(static_cast<unsigned>(f.size() - 1));
  }
  return SpaceShape(dims);
}

Vector random_factor(std::mt19937_64& rng, unsigned n) {
  std::uniform_int_distribution<int> dist(-9, 9);
  Vector v(n + 1);
  do {
    for (auto& c : v) c = dist(rng);
  } while (is_zero(v));
  return v;
}

}  // namespace

ProjPoint::ProjPoint(std::vector<Vector> coords) : coords_(std::move(coords)) {
  for (const auto& f : coords_)
    if (is_zero(f)) throw Error(Errc::ZeroVector, "coordinate vector is zero");
}

bool ProjPoint::matches(const SpaceShape& shape) const {
  if (coords_.size() != shape.factors()) return false;
  for (std::size_t k = 0; k < coords_.size(); ++k)
    if (coords_[k].size() != shape.dim(k) + 1) return false;
  return true;
}

ProjPoint ProjPoint::canonical() const {
  std::vector<Vector> out = coords_;
  for (auto& f : out) {
    const auto lead = std::find_if(f.begin(), f.end(), [](const Scalar& q) { return sgn(q) != 0; });
    const Scalar inv = 1 / *lead;
    for (auto& c : f) c *= inv;
  }
  return ProjPoint(std::move(out));
}

std::vector<std::vector<Integer>> ProjPoint::integer_coords() const {
  std::vector<std::vector<Integer>> out;
  for (const auto& f : canonical().coords_) {
    Integer l = 1;
    for (const auto& q : f) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> v;
    for (const auto& q : f) v.push_back(q.get_num() * (l / q.get_den()));
    out.push_back(std::move(v));
  }
  return out;
}

bool ProjPoint::operator==(const ProjPoint& o) const {
  if (coords_.size() != o.coords_.size()) return false;
  for (std::size_t k = 0; k < coords_.size(); ++k)
    if (!proportional(coords_[k], o.coords_[k])) return false;
  return true;
}

std::string ProjPoint::str() const {
  std::string s;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k) s += " x ";
    s += '[';
    for (std::size_t j = 0; j < coords_[k].size(); ++j) s += (j ? "," : "") + scalar_str(coords_[k][j]);
    s += ']';
  }
  return s;
}

Vector coords(std::initializer_list<long> v) {
  Vector out;
  for (long c : v) out.emplace_back(c);
  return out;
}

PointSet::PointSet(SpaceShape shape, std::vector<ProjPoint> points) : shape_(std::move(shape)) {
  points_.reserve(points.size());
  for (auto& p : points) add(std::move(p));
}

void PointSet::add(ProjPoint p) {
  if (!p.matches(shape_)) throw Error(Errc::ShapeMismatch, "point " + p.str() + " does not lie in " + shape_.str());
  if (contains(p)) throw Error(Errc::DuplicatePoint, "point " + p.str() + " already present");
  points_.push_back(std::move(p));
}

std::optional<std::size_t> PointSet::index_of(const ProjPoint& p) const {
  for (std::size_t k = 0; k < points_.size(); ++k)
    if (points_[k] == p) return k;
  return std::nullopt;
}

std::size_t PointSet::require_index(const ProjPoint& p) const {
  const auto k = index_of(p);
  if (!k) throw Error(Errc::PointNotFound, "point " + p.str() + " is not in the set");
  return *k;
}

bool PointSet::same_set(const PointSet& o) const {
  if (!(shape_ == o.shape_) || size() != o.size()) return false;
  return std::all_of(points_.begin(), points_.end(), [&](const ProjPoint& p) { return o.contains(p); });
}

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] == 0) throw Error(Errc::ParseError, "partition parts must be positive");
    if (k && parts_[k] > parts_[k - 1]) throw Error(Errc::ParseError, "partition must be weakly decreasing");
  }
}

unsigned Partition::total() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0u); }

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) s += (k ? "," : "") + std::to_string(parts_[k]);
  return s + ")";
}

PointSet parse_points(std::string_view text) {
  std::optional<PointSet> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (std::all_of(line.begin(), line.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
      continue;

    std::vector<Vector> factors;
    std::size_t i = 0;
    bool expect_factor = true;
    while (i < line.size()) {
      const char c = line[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '[') {
        if (!expect_factor) throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": missing 'x' between factors");
        const auto close = line.find(']', i);
        if (close == std::string_view::npos)
          throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": unterminated '['");
        std::string_view body = line.substr(i + 1, close - i - 1);
        Vector v;
        std::size_t s = 0;
        while (true) {
          const auto comma = body.find(',', s);
          v.push_back(parse_scalar(body.substr(s, comma == std::string_view::npos ? std::string_view::npos : comma - s), line_no));
          if (comma == std::string_view::npos) break;
          s = comma + 1;
        }
        factors.push_back(std::move(v));
        expect_factor = false;
        i = close + 1;
      } else if (c == 'x' || c == 'X') {
        if (expect_factor) throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": unexpected 'x'");
        expect_factor = true;
        ++i;
      } else {
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": unexpected character '" + std::string(1, c) + "'");
      }
    }
    if (expect_factor) throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": dangling 'x' or empty point");
    ProjPoint p = make_point(std::move(factors), line_no);
    if (!out) out.emplace(shape_of(p));
    if (!p.matches(out->shape()))
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": point does not match shape " + out->shape().str());
    out->add(std::move(p));
  }
  if (!out) throw Error(Errc::ParseError, "no points in input");
  return *out;
}

PointSet parse_points_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("shape") || !doc.contains("points") || !doc["shape"].is_array() ||
      !doc["points"].is_array())
    throw Error(Errc::ParseError, "expected object with array fields 'shape' and 'points'");
  std::vector<unsigned> dims;
  for (const auto& d : doc["shape"]) {
    if (!d.is_number_unsigned()) throw Error(Errc::ParseError, "shape entries must be positive integers");
    dims.push_back(d.get<unsigned>());
  }
  SpaceShape shape = [&] {
    try {
      return SpaceShape(dims);
    } catch (const Error& e) {
      throw Error(Errc::ParseError, e.what());
    }
  }();
  PointSet out(shape);
  std::size_t k = 0;
  for (const auto& jp : doc["points"]) {
    ++k;
    if (!jp.is_array()) throw Error(Errc::ParseError, "point " + std::to_string(k) + " is not an array");
    std::vector<Vector> factors;
    for (const auto& jf : jp) {
      if (!jf.is_array()) throw Error(Errc::ParseError, "point " + std::to_string(k) + ": factor is not an array");
      Vector v;
      for (const auto& jc : jf) {
        if (jc.is_number_integer()) v.emplace_back(Integer(std::to_string(jc.get<long long>())));
        else if (jc.is_string()) v.push_back(parse_scalar(jc.get<std::string>(), k));
        else throw Error(Errc::ParseError, "point " + std::to_string(k) + ": coordinates must be integers or \"p/q\" strings");
      }
      factors.push_back(std::move(v));
    }
    ProjPoint p = make_point(std::move(factors), k);
    if (!p.matches(shape)) throw Error(Errc::ParseError, "point " + std::to_string(k) + " does not match shape " + shape.str());
    out.add(std::move(p));
  }
  return out;
}

PointSet parse_points_any(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_points_json(text);
  return parse_points(text);
}

std::string serialize_points(const PointSet& x) {
  std::string out;
  for (const auto& p : x) out += p.canonical().str() + "\n";
  return out;
}

std::string serialize_points_json(const PointSet& x) {
  using nlohmann::json;
  json doc;
  doc["shape"] = x.shape().dims();
  json pts = json::array();
  for (const auto& p : x) {
    json jp = json::array();
    const ProjPoint c = p.canonical();
    for (const auto& f : c.coords()) {
      json jf = json::array();
      for (const auto& q : f) {
        if (q.get_den() == 1 && q.get_num().fits_slong_p()) jf.push_back(q.get_num().get_si());
        else jf.push_back(q.get_str());
      }
      jp.push_back(jf);
    }
    pts.push_back(jp);
  }
  doc["points"] = pts;
  return doc.dump() + "\n";
}

PointSet ferrers_points(const Partition& lambda, const std::vector<Vector>& first_coords,
                        const std::vector<Vector>& second_coords) {
  if (first_coords.size() < lambda.length())
    throw Error(Errc::InsufficientCoordinates, "need " + std::to_string(lambda.length()) + " first coordinates");
  if (!lambda.empty() && second_coords.size() < lambda[0])
    throw Error(Errc::InsufficientCoordinates, "need " + std::to_string(lambda[0]) + " second coordinates");
  PointSet out(SpaceShape{1, 1});
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (std::size_t j = 0; j < lambda[i]; ++j) out.add(ProjPoint({first_coords[i], second_coords[j]}));
  return out;
}

PointSet ferrers_points(const Partition& lambda) {
  std::vector<Vector> firsts, seconds;
  for (long i = 1; i <= static_cast<long>(lambda.length()); ++i) firsts.push_back(coords({1, i}));
  for (long j = 1; j <= static_cast<long>(lambda.empty() ? 0 : lambda[0]); ++j) seconds.push_back(coords({1, j}));
  return ferrers_points(lambda, firsts, seconds);
}

PointSet remove_point(const PointSet& x, const ProjPoint& p) {
  const std::size_t k = x.require_index(p);
  PointSet out(x.shape());
  for (std::size_t j = 0; j < x.size(); ++j)
    if (j != k) out.add(x[j]);
  return out;
}

PointSet random_pointset(const SpaceShape& shape, std::size_t s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PointSet out(shape);
  while (out.size() < s) {
    std::vector<Vector> f;
    for (std::size_t k = 0; k < shape.factors(); ++k) f.push_back(random_factor(rng, shape.dim(k)));
    ProjPoint p(std::move(f));
    if (!out.contains(p)) out.add(std::move(p));
  }
  return out;
}

PointSet random_grid_subset(const SpaceShape& shape, std::size_t pool, std::size_t s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Vector>> pools(shape.factors());
  for (std::size_t k = 0; k < shape.factors(); ++k) {
    std::vector<ProjPoint> seen;
    while (pools[k].size() < pool) {
      Vector v = random_factor(rng, shape.dim(k));
      ProjPoint p({v});
      if (std::find(seen.begin(), seen.end(), p) != seen.end()) continue;
      seen.push_back(p);
      pools[k].push_back(std::move(v));
    }
  }
  std::size_t combos = 1;
  for (std::size_t k = 0; k < shape.factors(); ++k) combos *= pool;
  if (s > combos) throw Error(Errc::InsufficientCoordinates, "pool product smaller than requested size");
  std::vector<std::size_t> idx(combos);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  PointSet out(shape);
  for (std::size_t n = 0; n < s; ++n) {
    std::size_t code = idx[n];
    std::vector<Vector> f(shape.factors());
    for (std::size_t k = shape.factors(); k-- > 0;) {
      f[k] = pools[k][code % pool];
      code /= pool;
    }
    out.add(ProjPoint(std::move(f)));
  }
  return out;
}

Partition random_partition(unsigned max_total, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const unsigned total = std::uniform_int_distribution<unsigned>(1, std::max(1u, max_total))(rng);
  std::vector<unsigned> parts;
  unsigned rem = total;
  while (rem > 0) {
    const unsigned cap = parts.empty() ? rem : std::min(rem, parts.back());
    parts.push_back(std::uniform_int_distribution<unsigned>(1, cap)(rng));
    rem -= parts.back();
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

PointSet random_ferrers(unsigned max_total, std::uint64_t seed) {
  const Partition lambda = random_partition(max_total, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  auto distinct_p1 = [&](std::size_t n) {
    std::vector<Vector> out;
    std::vector<ProjPoint> seen;
    while (out.size() < n) {
      Vector v = random_factor(rng, 1);
      ProjPoint p({v});
      if (std::find(seen.begin(), seen.end(), p) != seen.end()) continue;
      seen.push_back(p);
      out.push_back(std::move(v));
    }
    return out;
  };
  const auto firsts = distinct_p1(lambda.length());
  const auto seconds = distinct_p1(lambda[0]);
  return ferrers_points(lambda, firsts, seconds);
}

}  // namespace multisep
