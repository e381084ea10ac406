#include "gersten/json_io.hpp"

#include <utility>

#include "gersten/error.hpp"

namespace gersten::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

long integer(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) fail(ErrorCode::ParseError, std::string(key) + " must be an integer");
  return v.get<long>();
}

std::string text(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) fail(ErrorCode::ParseError, std::string(key) + " must be a string");
  return v.get<std::string>();
}

int degree_key(const std::string& s) {
  try {
    std::size_t used = 0;
    int n = std::stoi(s, &used);
    if (used != s.size()) fail(ErrorCode::ParseError, "bad degree key '" + s + "'");
    return n;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "bad degree key '" + s + "'");
  }
}

Element parse_entry(const Domain& d, const Json& v) {
  if (!v.is_string()) fail(ErrorCode::ParseError, "matrix entries must be strings");
  return d.parse(v.get<std::string>());
}

}  // namespace

Json to_json(const Domain& d) {
  return Json{{"ring", d.ring()->descriptor()}, {"tag", d.is_base() ? "base" : "residue"}};
}

Domain domain_from_json(const Json& j) {
  std::string tag = text(j, "tag");
  if (tag != "base" && tag != "residue") fail(ErrorCode::ParseError, "tag must be base|residue");
  return Domain(Ring::make(text(j, "ring")), tag == "base" ? Tag::Base : Tag::Residue);
}

Json to_json(const RMatrix& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) entries.push_back(m.domain().to_string(m.at(i, j)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

RMatrix matrix_from_json(const Domain& d, const Json& j) {
  long rows = integer(j, "rows");
  long cols = integer(j, "cols");
  if (rows < 0 || cols < 0) fail(ErrorCode::ParseError, "negative matrix dimensions");
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows * cols))
    fail(ErrorCode::ParseError, "entries must hold rows*cols strings");
  RMatrix m(d, static_cast<int>(rows), static_cast<int>(cols));
  std::size_t k = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int c = 0; c < m.cols(); ++c) m.set(i, c, parse_entry(d, entries.at(k++)));
  return m;
}

Json to_json(const ChainComplex& x) {
  Json ranks = Json::object();
  for (const auto& [n, r] : x.ranks()) ranks[std::to_string(n)] = r;
  Json d = Json::object();
  for (int n = x.lo() + 1; n <= x.hi(); ++n)
    if (x.rank(n) > 0 && x.rank(n - 1) > 0) d[std::to_string(n)] = to_json(x.boundary(n));
  return Json{{"domain", to_json(x.domain())}, {"ranks", std::move(ranks)}, {"d", std::move(d)}};
}

ChainComplex complex_from_json(const Json& j) {
  Domain dom = domain_from_json(field(j, "domain"));
  const Json& jr = field(j, "ranks");
  if (!jr.is_object()) fail(ErrorCode::ParseError, "ranks must be an object");
  std::map<int, int> ranks;
  for (const auto& [key, v] : jr.items()) {
    if (!v.is_number_integer() || v.get<long>() < 0)
      fail(ErrorCode::ParseError, "ranks must be non-negative integers");
    ranks[degree_key(key)] = v.get<int>();
  }
  const Json& jd = field(j, "d");
  if (!jd.is_object()) fail(ErrorCode::ParseError, "d must be an object");
  std::map<int, RMatrix> boundaries;
  for (const auto& [key, v] : jd.items()) boundaries[degree_key(key)] = matrix_from_json(dom, v);
  return ChainComplex::make(std::move(dom), std::move(ranks), std::move(boundaries));
}

Json to_json(const ChainMap& f) {
  Json comps = Json::object();
  int lo = std::min(f.src().lo(), f.tgt().lo());
  int hi = std::max(f.src().hi(), f.tgt().hi());
  for (int n = lo; n <= hi; ++n)
    if (f.src().rank(n) > 0 && f.tgt().rank(n) > 0)
      comps[std::to_string(n)] = to_json(f.component(n));
  return Json{{"source", to_json(f.src())},
              {"target", to_json(f.tgt())},
              {"components", std::move(comps)}};
}

ChainMap chain_map_from_json(const Json& j) {
  ChainComplex src = complex_from_json(field(j, "source"));
  ChainComplex tgt = complex_from_json(field(j, "target"));
  const Json& jc = field(j, "components");
  if (!jc.is_object()) fail(ErrorCode::ParseError, "components must be an object");
  std::map<int, RMatrix> comps;
  for (const auto& [key, v] : jc.items())
    comps[degree_key(key)] = matrix_from_json(src.domain(), v);
  return ChainMap::make(std::move(src), std::move(tgt), std::move(comps));
}

Json to_json(const ChainHomotopy& h) {
  Json comps = Json::object();
  const ChainComplex& x = h.f.src();
  const ChainComplex& y = h.f.tgt();
  for (int n = x.lo(); n <= x.hi(); ++n)
    if (x.rank(n) > 0 && y.rank(n + 1) > 0) comps[std::to_string(n)] = to_json(h.component(n));
  return Json{{"f", to_json(h.f)}, {"g", to_json(h.g)}, {"h", std::move(comps)}};
}

Json to_json(const HSquare& sq) {
  return Json{{"f", to_json(sq.f())},
              {"g", to_json(sq.g())},
              {"a", to_json(sq.a())},
              {"b", to_json(sq.b())},
              {"H", to_json(sq.H())}};
}

Json to_json(const CObject& x) {
  return Json{{"ring", x.ring->descriptor()}, {"n", x.n}, {"m", x.m}};
}

CObject cobject_from_json(const Json& j) {
  long n = integer(j, "n");
  long m = integer(j, "m");
  if (n < 0 || m < 0) fail(ErrorCode::ParseError, "object dimensions must be non-negative");
  return make_object(Ring::make(text(j, "ring")), static_cast<int>(n), static_cast<int>(m));
}

Json to_json(const CMorphism& m) {
  Json blocks = Json{{"nn", to_json(m.nn())},
                     {"nm", to_json(m.nm())},
                     {"mn", to_json(m.mn())},
                     {"mm", to_json(m.mm())}};
  return Json{{"source", to_json(m.src())},
              {"target", to_json(m.tgt())},
              {"blocks", std::move(blocks)}};
}

CMorphism cmorphism_from_json(const Json& j) {
  CObject src = cobject_from_json(field(j, "source"));
  CObject tgt = cobject_from_json(field(j, "target"));
  Domain d = src.domain();
  const Json& blocks = field(j, "blocks");
  return CMorphism::make(src, tgt, matrix_from_json(d, field(blocks, "nn")),
                         matrix_from_json(d, field(blocks, "nm")),
                         matrix_from_json(d, field(blocks, "mn")),
                         matrix_from_json(d, field(blocks, "mm")));
}

Json to_json(const IsoChain& c) {
  Json objects = Json::array();
  for (const CObject& x : c.objects) objects.push_back(to_json(x));
  Json arrows = Json::array();
  for (const CMorphism& a : c.arrows) arrows.push_back(to_json(a));
  Json flags = Json::array();
  for (bool u : c.upper) flags.push_back(u);
  return Json{{"objects", std::move(objects)},
              {"arrows", std::move(arrows)},
              {"flags", std::move(flags)}};
}

Json to_json(const Classified& c) {
  return Json{{"object", to_json(c.object)}, {"w1", to_json(c.w1)}, {"w0", to_json(c.w0)}};
}

Json to_json(const FiniteCat& cat) {
  Json objects = Json::array();
  for (int i = 0; i < cat.object_count(); ++i) objects.push_back(cat.object_name(i));
  Json arrows = Json::array();
  for (int a = 0; a < cat.arrow_count(); ++a) {
    const CatArrow& ar = cat.arrow(a);
    arrows.push_back(Json{{"name", ar.name}, {"src", ar.src}, {"dst", ar.dst}});
  }
  Json identities = Json::array();
  for (int i = 0; i < cat.object_count(); ++i) identities.push_back(cat.identity(i));
  Json table = Json::array();
  for (int s = 0; s < cat.arrow_count(); ++s)
    for (int f = 0; f < cat.arrow_count(); ++f)
      if (cat.composable(s, f)) table.push_back(Json::array({s, f, cat.compose(s, f)}));
  return Json{{"objects", std::move(objects)},
              {"arrows", std::move(arrows)},
              {"identities", std::move(identities)},
              {"table", std::move(table)}};
}

Json to_json(const FunctorData& F) {
  Json objects = Json::array();
  for (const ChainComplex& x : F.on_objects) objects.push_back(to_json(x));
  Json arrows = Json::array();
  for (const ChainMap& f : F.on_arrows) arrows.push_back(to_json(f));
  return Json{{"objects", std::move(objects)}, {"arrows", std::move(arrows)}};
}

Json to_json(const HNatData& d) {
  Json theta_obj = Json::array();
  for (const ChainMap& t : d.theta_obj) theta_obj.push_back(to_json(t));
  Json theta_arr = Json::array();
  for (const ChainMap& t : d.theta_arr) theta_arr.push_back(to_json(t));
  return Json{{"f", to_json(d.f)},
              {"g", to_json(d.g)},
              {"theta_obj", std::move(theta_obj)},
              {"theta_arr", std::move(theta_arr)}};
}

Json to_json(const FLModule& m) {
  return Json{{"domain", to_json(m.presentation.domain())},
              {"presentation", to_json(m.presentation)},
              {"exponents", m.exponents},
              {"free_rank", m.free_rank},
              {"torsion", m.is_torsion()}};
}

Json to_json(const SESWitness& w) {
  return Json{{"a", to_json(w.a)},
              {"b", to_json(w.b)},
              {"c", to_json(w.c)},
              {"map_ab", to_json(w.map_ab)},
              {"map_bc", to_json(w.map_bc)}};
}

Json to_json(const Decomposition& d) {
  Json chain = Json::array();
  for (const SESWitness& w : d.chain) chain.push_back(to_json(w));
  return Json{{"exponents", d.exponents},
              {"cyclic_multiplicity", d.cyclic_multiplicity},
              {"chain", std::move(chain)}};
}

Json parse_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::ParseError, "malformed JSON");
  return j;
}

}  // namespace gersten::io
