#include "smith/io.hpp"

#include <fstream>
#include <sstream>

namespace smith {

namespace {

std::string key(int n) { return std::to_string(n); }

const Json& field_at(const Json& j, const char* name, const std::string& at) {
  if (!j.is_object()) throw ParseError(at.empty() ? "/" : at, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(at + "/" + name, "missing field");
  return *it;
}

long long integer_at(const Json& j, const std::string& at) {
  if (!j.is_number_integer()) throw ParseError(at, "expected an integer");
  return j.get<long long>();
}

int degree_key(const std::string& k, const std::string& at) {
  try {
    std::size_t used = 0;
    int n = std::stoi(k, &used);
    if (used == k.size()) return n;
  } catch (const std::exception&) {
  }
  throw ParseError(at + "/" + k, "degree keys must be integers");
}

Matrix matrix_from_json(const Json& j, const Field& f, std::size_t rows, std::size_t cols, const std::string& at) {
  if (!j.is_array()) throw ParseError(at, "expected an array of rows");
  if (j.size() != rows) throw ParseError(at, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = j[r];
    const std::string rat = at + "/" + std::to_string(r);
    if (!row.is_array() || row.size() != cols)
      throw ParseError(rat, "expected a row of " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      long long v = integer_at(row[c], rat + "/" + std::to_string(c));
      if (v < 0) throw ParseError(rat + "/" + std::to_string(c), "entries must be nonnegative");
      m(r, c) = f.reduce(v);
    }
  }
  return m;
}

// {"n": matrix} with shapes given by rows(n) x cols(n); absent degrees are zero
template <class Rows, class Cols>
std::map<int, Matrix> graded_matrices(const Json& j, const Field& f, int lo, int hi, Rows rows, Cols cols,
                                      const std::string& at) {
  std::map<int, Matrix> out;
  if (!j.is_object()) throw ParseError(at, "expected an object keyed by degree");
  for (auto& [k, v] : j.items()) {
    int n = degree_key(k, at);
    if (n < lo || n > hi) throw ParseError(at + "/" + k, "degree outside the window");
    out.emplace(n, matrix_from_json(v, f, rows(n), cols(n), at + "/" + k));
  }
  return out;
}

ChainComplex complex_in(const Json& j, const std::string& at, const std::string& base);

Json load_reference(const Json& j, const std::string& at, const std::string& base) {
  if (!j.is_string()) return j;
  std::string path = j.get<std::string>();
  if (!base.empty() && !path.empty() && path[0] != '/') path = base + "/" + path;
  try {
    return parse_json(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(at + " -> " + path + e.where(), e.what());
  }
}

ChainComplex complex_in(const Json& j0, const std::string& at, const std::string& base) {
  Json j = load_reference(j0, at, base);
  long long p = integer_at(field_at(j, "p", at), at + "/p");
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw ParseError(at + "/p", "p must be prime");
  Field f(static_cast<std::uint32_t>(p));
  int lo = static_cast<int>(integer_at(field_at(j, "lo", at), at + "/lo"));
  int hi = static_cast<int>(integer_at(field_at(j, "hi", at), at + "/hi"));
  if (lo > hi) throw ParseError(at, "empty window");
  std::map<int, std::size_t> dims;
  const Json& jd = field_at(j, "dims", at);
  if (!jd.is_object()) throw ParseError(at + "/dims", "expected an object keyed by degree");
  for (auto& [k, v] : jd.items()) {
    int n = degree_key(k, at + "/dims");
    if (n < lo || n > hi) throw ParseError(at + "/dims/" + k, "degree outside the window");
    long long d = integer_at(v, at + "/dims/" + k);
    if (d < 0) throw ParseError(at + "/dims/" + k, "dimension must be nonnegative");
    dims[n] = static_cast<std::size_t>(d);
  }
  auto dim = [&](int n) { auto it = dims.find(n); return it == dims.end() ? std::size_t{0} : it->second; };
  std::map<int, Matrix> diffs;
  if (j.contains("diff"))
    diffs = graded_matrices(j["diff"], f, lo + 1, hi, [&](int n) { return dim(n - 1); }, dim, at + "/diff");
  return ChainComplex::from_maps(f, lo, hi, dims, diffs);
}

ChainMap map_in(const Json& j0, const std::string& at, const std::string& base) {
  Json j = load_reference(j0, at, base);
  ChainComplex a = complex_in(field_at(j, "src", at), at + "/src", base);
  ChainComplex b = complex_in(field_at(j, "dst", at), at + "/dst", base);
  if (a.field() != b.field()) throw ParseError(at, "source and target over different fields");
  std::map<int, Matrix> comps;
  if (j.contains("comps"))
    comps = graded_matrices(j["comps"], a.field(), std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi()),
                            [&](int n) { return b.dim(n); }, [&](int n) { return a.dim(n); }, at + "/comps");
  return ChainMap(a, b, comps);
}

}  // namespace

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const ChainComplex& c) {
  Json j;
  j["p"] = c.field().p();
  j["lo"] = c.lo();
  j["hi"] = c.hi();
  Json dims = Json::object(), diff = Json::object();
  for (int n = c.lo(); n <= c.hi(); ++n) {
    dims[key(n)] = c.dim(n);
    if (n > c.lo() && c.dim(n) && c.dim(n - 1)) diff[key(n)] = to_json(c.diff(n));
  }
  j["dims"] = dims;
  j["diff"] = diff;
  return j;
}

Json to_json(const ChainMap& f) {
  Json j;
  j["src"] = to_json(f.src());
  j["dst"] = to_json(f.dst());
  Json comps = Json::object();
  for (int n = f.lo(); n <= f.hi(); ++n)
    if (f.src().dim(n) && f.dst().dim(n)) comps[key(n)] = to_json(f.comp(n));
  j["comps"] = comps;
  return j;
}

Json arrow_to_json(const ArrowObject& f) { return Json{{"f", to_json(f)}}; }

Json to_json(const ArrowSquare& a) {
  return Json{{"src", arrow_to_json(a.src)}, {"dst", arrow_to_json(a.dst)}, {"a0", to_json(a.a0)}, {"a1", to_json(a.a1)}};
}

Json to_json(const DGAlgebra& r) {
  return Json{{"carrier", to_json(r.carrier)}, {"mult", to_json(r.mult)}, {"unit", to_json(r.unit)}};
}

Json to_json(const SmithIdeal& s) {
  Json ideal{{"carrier", to_json(s.ideal.carrier)}, {"left", to_json(s.ideal.left)}, {"right", to_json(s.ideal.right)}};
  return Json{{"alg", to_json(s.alg)}, {"ideal", ideal}, {"j", to_json(s.j)}};
}

Json to_json(const SmithModule& m) {
  auto mod = [](const RightModule& x) { return Json{{"carrier", to_json(x.carrier)}, {"act", to_json(x.act)}}; };
  return Json{{"over", to_json(m.over)}, {"m0", mod(m.m0)}, {"m1", mod(m.m1)}, {"f", to_json(m.f)}, {"phi", to_json(m.phi)}};
}

ChainComplex complex_from_json(const Json& j, const std::string& at) { return complex_in(j, at, ""); }
ChainMap map_from_json(const Json& j, const std::string& at) { return map_in(j, at, ""); }

ArrowObject arrow_from_json(const Json& j, const std::string& at) {
  return map_from_json(field_at(j, "f", at), at + "/f");
}

ArrowSquare square_from_json(const Json& j, const std::string& at) {
  return {arrow_from_json(field_at(j, "src", at), at + "/src"), arrow_from_json(field_at(j, "dst", at), at + "/dst"),
          map_from_json(field_at(j, "a0", at), at + "/a0"), map_from_json(field_at(j, "a1", at), at + "/a1")};
}

DGAlgebra dga_from_json(const Json& j, const std::string& at) {
  return {complex_from_json(field_at(j, "carrier", at), at + "/carrier"),
          map_from_json(field_at(j, "mult", at), at + "/mult"), map_from_json(field_at(j, "unit", at), at + "/unit")};
}

SmithIdeal smith_from_json(const Json& j, const std::string& at) {
  DGAlgebra alg = dga_from_json(field_at(j, "alg", at), at + "/alg");
  const Json& ideal = field_at(j, "ideal", at);
  const std::string ia = at + "/ideal";
  return {std::move(alg),
          {complex_from_json(field_at(ideal, "carrier", ia), ia + "/carrier"),
           map_from_json(field_at(ideal, "left", ia), ia + "/left"),
           map_from_json(field_at(ideal, "right", ia), ia + "/right")},
          map_from_json(field_at(j, "j", at), at + "/j")};
}

SmithModule module_from_json(const Json& j, const std::string& at) {
  auto mod = [&](const char* name) -> RightModule {
    const Json& x = field_at(j, name, at);
    const std::string ma = at + "/" + name;
    return {complex_from_json(field_at(x, "carrier", ma), ma + "/carrier"),
            map_from_json(field_at(x, "act", ma), ma + "/act")};
  };
  return {smith_from_json(field_at(j, "over", at), at + "/over"), mod("m0"), mod("m1"),
          map_from_json(field_at(j, "f", at), at + "/f"), map_from_json(field_at(j, "phi", at), at + "/phi")};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
  }
}

std::string print_json(const Json& j) { return j.dump() + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot read file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

}  // namespace smith
