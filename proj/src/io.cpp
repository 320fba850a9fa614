#include "specseq/io.hpp"

#include <algorithm>
#include <climits>
#include <fstream>
#include <set>
#include <sstream>

namespace specseq {

namespace {

// ---------------------------------------------------------------- scalars

Json scalar_json(const Scalar& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return x.get_str();
}

Scalar scalar_from(const Ring& R, const Json& j, const std::string& path) {
  try {
    if (j.is_number_integer()) return R.normalize(Scalar(std::to_string(j.get<long long>()), 10));
    if (j.is_string()) return R.parse_scalar(j.get<std::string>());
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
  throw SchemaError(path, "expected an integer or a rational string");
}

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "/" + key, "missing");
  return *it;
}

int int_from(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  const long long v = j.get<long long>();
  if (v < INT_MIN || v > INT_MAX) throw SchemaError(path, "integer out of range");
  return static_cast<int>(v);
}

int key_int(const std::string& key, const std::string& path) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(key, &used);
    if (used == key.size()) return v;
  } catch (const std::exception&) {
  }
  throw SchemaError(path, "key '" + key + "' is not an integer");
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from(const Ring& R, const Json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected a list of rows");
  if (j.size() != rows)
    throw SchemaError(path, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
  Matrix m(R, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rp = path + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != cols)
      throw SchemaError(rp, "expected a row of length " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from(R, j[i][c], rp + "/" + std::to_string(c));
  }
  return m;
}

Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(scalar_json(x));
  return a;
}

Vector vector_from(const Ring& R, const Json& j, std::size_t n, const std::string& path) {
  if (!j.is_array() || j.size() != n) throw SchemaError(path, "expected a vector of length " + std::to_string(n));
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = scalar_from(R, j[i], path + "/" + std::to_string(i));
  return v;
}

void ring_json(Json& j, const Ring& R) {
  if (R.kind() == RingKind::PrimeField) {
    j["ring"] = "F_p";
    j["p"] = R.characteristic();
  } else {
    j["ring"] = R.name();
  }
}

Ring ring_from(const Json& j, const std::string& path) {
  const Json& name = member(j, "ring", path);
  if (!name.is_string()) throw SchemaError(path + "/ring", "expected a string");
  const std::string s = name.get<std::string>();
  try {
    if (s == "F_p" || s == "prime_field") return Ring::prime_field(int_from(member(j, "p", path), path + "/p"));
    return Ring::parse(s);
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(path + "/ring", e.what());
  }
}

void check_header(const Json& j, const std::string& kind) {
  if (!j.is_object()) throw SchemaError("", "expected a JSON object");
  const int v = int_from(member(j, "format_version", ""), "/format_version");
  if (v != kFormatVersion) throw SchemaError("/format_version", "unsupported version " + std::to_string(v));
  const Json& k = member(j, "kind", "");
  if (!k.is_string() || k.get<std::string>() != kind)
    throw SchemaError("/kind", "expected \"" + kind + "\"");
}

std::string module_label(const FgModule& m, const char* sep) {
  if (m.is_zero()) return "0";
  std::string out;
  if (m.free_rank > 0) {
    out = m.ring.kind() == RingKind::PrimeField ? "F" + std::to_string(m.ring.characteristic()) : m.ring.name();
    if (m.free_rank > 1) out += "^" + std::to_string(m.free_rank);
  }
  for (const auto& d : m.invariant_factors) out += (out.empty() ? "" : sep) + std::string("Z/") + d.get_str();
  return out;
}

}  // namespace

// ---------------------------------------------------------------- filtered complexes

Json to_json(const FilteredComplex& F) {
  const ChainComplex& C = F.complex();
  Json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = "filtered_complex";
  ring_json(j, F.ring());
  const int lo = C.empty() ? 0 : C.min_degree(), hi = C.empty() ? -1 : C.max_degree();
  j["degree_range"] = {lo, hi};
  Json ranks = Json::array();
  for (int n = lo; n <= hi; ++n) ranks.push_back(C.rank(n));
  j["ranks"] = ranks;
  Json diffs = Json::object();
  for (int n = lo + 1; n <= hi; ++n) diffs[std::to_string(n)] = matrix_json(C.differential(n));
  j["differentials"] = diffs;
  j["breakpoints"] = F.breakpoints();
  Json steps = Json::object();
  for (const auto& [s, spans] : F.steps()) {
    Json per = Json::object();
    for (std::size_t k = 0; k < spans.size(); ++k) {
      if (spans[k].is_zero()) continue;
      Json gens = Json::array();
      for (const auto& v : spans[k].basis()) gens.push_back(vector_json(v));
      per[std::to_string(lo + static_cast<int>(k))] = gens;
    }
    steps[std::to_string(s)] = per;
  }
  j["steps"] = steps;
  j["tail_high"] = F.tail_high() == TailHigh::Zero ? "zero" : "constant";
  j["saturated"] = F.require_saturated();
  return j;
}

Json to_json(const FilteredComplexFile& f) {
  Json j = to_json(f.filtration);
  if (f.dga) {
    const ChainComplex& C = f.filtration.complex();
    Json products = Json::array();
    for (const auto& [mn, mu] : f.dga->products) {
      if (C.rank(mn.first + mn.second) == 0 || C.rank(mn.first) * C.rank(mn.second) == 0) continue;
      products.push_back({{"degrees", {mn.first, mn.second}}, {"matrix", matrix_json(mu)}});
    }
    Json dga;
    dga["products"] = products;
    dga["unit"] = f.dga->unit ? vector_json(*f.dga->unit) : Json(nullptr);
    dga["commutative"] = f.dga->commutative;
    j["dga"] = dga;
  }
  return j;
}

FilteredComplexFile filtered_complex_file_from_json(const Json& j) {
  check_header(j, "filtered_complex");
  const Ring R = ring_from(j, "");
  const Json& range = member(j, "degree_range", "");
  if (!range.is_array() || range.size() != 2) throw SchemaError("/degree_range", "expected [min, max]");
  const int lo = int_from(range[0], "/degree_range/0"), hi = int_from(range[1], "/degree_range/1");
  if (hi < lo - 1) throw SchemaError("/degree_range", "max < min - 1");
  const Json& rj = member(j, "ranks", "");
  if (!rj.is_array() || static_cast<int>(rj.size()) != hi - lo + 1)
    throw SchemaError("/ranks", "expected " + std::to_string(hi - lo + 1) + " ranks");
  std::vector<std::size_t> ranks;
  for (std::size_t i = 0; i < rj.size(); ++i) {
    const int r = int_from(rj[i], "/ranks/" + std::to_string(i));
    if (r < 0) throw SchemaError("/ranks/" + std::to_string(i), "negative rank");
    ranks.push_back(static_cast<std::size_t>(r));
  }
  auto rank = [&](int n) -> std::size_t { return n < lo || n > hi ? 0 : ranks[n - lo]; };

  std::map<int, Matrix> diffs;
  if (j.contains("differentials")) {
    const Json& dj = j["differentials"];
    if (!dj.is_object()) throw SchemaError("/differentials", "expected an object keyed by degree");
    for (const auto& [key, m] : dj.items()) {
      const std::string path = "/differentials/" + key;
      const int n = key_int(key, path);
      if (n <= lo || n > hi) throw SchemaError(path, "degree outside (min, max]");
      diffs.emplace(n, matrix_from(R, m, rank(n - 1), rank(n), path));
    }
  }
  ChainComplex C;
  try {
    C = ChainComplex(R, lo, ranks, diffs);
  } catch (const Error& e) {
    throw Error(std::string("invalid complex: ") + e.what());
  }

  FilteredComplex::Steps steps;
  const Json& sj = member(j, "steps", "");
  if (!sj.is_object()) throw SchemaError("/steps", "expected an object keyed by weight");
  for (const auto& [key, per] : sj.items()) {
    const std::string path = "/steps/" + key;
    const int s = key_int(key, path);
    if (!per.is_object()) throw SchemaError(path, "expected an object keyed by degree");
    std::vector<std::vector<Vector>> gens(ranks.size());
    for (const auto& [dk, list] : per.items()) {
      const std::string dp = path + "/" + dk;
      const int n = key_int(dk, dp);
      if (n < lo || n > hi) throw SchemaError(dp, "degree outside the range");
      if (!list.is_array()) throw SchemaError(dp, "expected a list of generators");
      for (std::size_t g = 0; g < list.size(); ++g)
        gens[n - lo].push_back(vector_from(R, list[g], rank(n), dp + "/" + std::to_string(g)));
    }
    std::vector<Span> spans;
    // the complex may have trimmed zero ranks at either end
    for (int n = C.empty() ? 1 : C.min_degree(); n <= (C.empty() ? 0 : C.max_degree()); ++n)
      spans.push_back(Span::generated_by(R, rank(n), gens[n - lo]));
    steps.emplace(s, std::move(spans));
  }
  if (j.contains("breakpoints")) {
    std::vector<int> bps;
    for (const auto& [s, _] : steps) bps.push_back(s);
    const Json& bj = j["breakpoints"];
    if (!bj.is_array()) throw SchemaError("/breakpoints", "expected a list");
    std::vector<int> given;
    for (std::size_t i = 0; i < bj.size(); ++i) given.push_back(int_from(bj[i], "/breakpoints/" + std::to_string(i)));
    if (given != bps) throw SchemaError("/breakpoints", "do not match the keys of /steps");
  }
  TailHigh tail = TailHigh::Zero;
  if (j.contains("tail_high")) {
    const Json& t = j["tail_high"];
    if (t == "zero")
      tail = TailHigh::Zero;
    else if (t == "constant")
      tail = TailHigh::Constant;
    else
      throw SchemaError("/tail_high", "expected \"zero\" or \"constant\"");
  }
  bool saturated = true;
  if (j.contains("saturated")) {
    if (!j["saturated"].is_boolean()) throw SchemaError("/saturated", "expected a boolean");
    saturated = j["saturated"].get<bool>();
  }

  FilteredComplexFile out;
  out.filtration = FilteredComplex(C, std::move(steps), tail, saturated);
  auto violations = validate(out.filtration);

  if (j.contains("dga")) {
    const Json& dj = j["dga"];
    FilteredDGA A{out.filtration, {}, std::nullopt, false};
    const Json& pj = member(dj, "products", "/dga");
    if (!pj.is_array()) throw SchemaError("/dga/products", "expected a list");
    for (std::size_t i = 0; i < pj.size(); ++i) {
      const std::string path = "/dga/products/" + std::to_string(i);
      const Json& deg = member(pj[i], "degrees", path);
      if (!deg.is_array() || deg.size() != 2) throw SchemaError(path + "/degrees", "expected [m, n]");
      const int m = int_from(deg[0], path + "/degrees/0"), n = int_from(deg[1], path + "/degrees/1");
      A.products[{m, n}] = matrix_from(R, member(pj[i], "matrix", path), rank(m + n), rank(m) * rank(n), path + "/matrix");
    }
    if (dj.contains("unit") && !dj["unit"].is_null()) A.unit = vector_from(R, dj["unit"], rank(0), "/dga/unit");
    if (dj.contains("commutative")) {
      if (!dj["commutative"].is_boolean()) throw SchemaError("/dga/commutative", "expected a boolean");
      A.commutative = dj["commutative"].get<bool>();
    }
    if (violations.empty()) violations = validate_dga(A);
    out.dga = std::move(A);
  }
  if (!violations.empty()) {
    std::string msg = "filtered complex does not validate:";
    for (const auto& v : violations) msg += "\n  " + to_string(v);
    throw Error(msg);
  }
  return out;
}

// ---------------------------------------------------------------- CW complexes

Json to_json(const CWComplex& X) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = "cw_complex";
  j["name"] = X.name;
  j["cells"] = X.cells;
  Json b = Json::object();
  for (const auto& [k, m] : X.boundary) b[std::to_string(k)] = matrix_json(m);
  j["boundary"] = b;
  return j;
}

CWComplex cw_complex_from_json(const Json& j) {
  check_header(j, "cw_complex");
  CWComplex X;
  if (j.contains("name")) X.name = j["name"].is_string() ? j["name"].get<std::string>() : "";
  const Json& cj = member(j, "cells", "");
  if (!cj.is_array() || cj.empty()) throw SchemaError("/cells", "expected a nonempty list of cell counts");
  for (std::size_t i = 0; i < cj.size(); ++i) {
    const int c = int_from(cj[i], "/cells/" + std::to_string(i));
    if (c < 0) throw SchemaError("/cells/" + std::to_string(i), "negative count");
    X.cells.push_back(static_cast<std::size_t>(c));
  }
  const Ring Z = Ring::integers();
  if (j.contains("boundary")) {
    if (!j["boundary"].is_object()) throw SchemaError("/boundary", "expected an object keyed by dimension");
    for (const auto& [key, m] : j["boundary"].items()) {
      const std::string path = "/boundary/" + key;
      const int k = key_int(key, path);
      if (k < 1 || k > X.dimension()) throw SchemaError(path, "dimension outside 1..d");
      X.boundary.emplace(k, matrix_from(Z, m, X.cells[k - 1], X.cells[k], path));
    }
  }
  auto problems = validate(X);
  if (!problems.empty()) throw Error("CW complex does not validate: " + problems.front());
  return X;
}

// ---------------------------------------------------------------- page reports

PageReport page_report(const Page& P, const Convention& c) {
  PageReport rep;
  rep.r = P.infinite ? 0 : convention_page(P.r, c);
  rep.infinite = P.infinite;
  rep.ring = P.ring.name();
  rep.convention = c;
  for (const auto& x : P.nonzero_positions()) {
    const FgModule m = P.module_at(x);
    PageReportTerm t;
    t.pos = from_internal(x, c);
    t.rank = m.free_rank;
    for (const auto& d : m.invariant_factors) t.invariant_factors.push_back(d.get_str());
    t.target = from_internal(P.target(x), c);
    const Matrix d = P.differential_at(x);
    if (!map_is_zero(d, P.moduli_at(P.target(x))))
      for (std::size_t i = 0; i < d.rows(); ++i) {
        std::vector<std::string> row;
        for (std::size_t k = 0; k < d.cols(); ++k) row.push_back(d(i, k).get_str());
        t.differential.push_back(std::move(row));
      }
    rep.terms.push_back(std::move(t));
  }
  return rep;
}

Json to_json(const PageReport& rep) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = "page_report";
  j["r"] = rep.infinite ? Json("infinity") : Json(rep.r);
  j["ring"] = rep.ring;
  j["convention"] = rep.convention.name();
  Json terms = Json::array();
  for (const auto& t : rep.terms) {
    Json tj;
    tj["s"] = t.pos.s;
    tj["t"] = t.pos.t;
    tj["rank"] = t.rank;
    tj["invariant_factors"] = t.invariant_factors;
    tj["target"] = {t.target.s, t.target.t};
    tj["differential"] = t.differential;
    terms.push_back(std::move(tj));
  }
  j["terms"] = terms;
  return j;
}

PageReport page_report_from_json(const Json& j) {
  check_header(j, "page_report");
  PageReport rep;
  const Json& r = member(j, "r", "");
  if (r == "infinity") {
    rep.infinite = true;
    rep.r = 0;
  } else {
    rep.r = int_from(r, "/r");
  }
  const Json& ring = member(j, "ring", "");
  if (!ring.is_string()) throw SchemaError("/ring", "expected a string");
  rep.ring = ring.get<std::string>();
  const Json& conv = member(j, "convention", "");
  if (!conv.is_string()) throw SchemaError("/convention", "expected a string");
  try {
    rep.convention = Convention::parse(conv.get<std::string>());
  } catch (const Error& e) {
    throw SchemaError("/convention", e.what());
  }
  const Json& terms = member(j, "terms", "");
  if (!terms.is_array()) throw SchemaError("/terms", "expected a list");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string path = "/terms/" + std::to_string(i);
    const Json& tj = terms[i];
    PageReportTerm t;
    t.pos = {int_from(member(tj, "s", path), path + "/s"), int_from(member(tj, "t", path), path + "/t")};
    const int rank = int_from(member(tj, "rank", path), path + "/rank");
    if (rank < 0) throw SchemaError(path + "/rank", "negative rank");
    t.rank = static_cast<std::size_t>(rank);
    const Json& inv = member(tj, "invariant_factors", path);
    if (!inv.is_array()) throw SchemaError(path + "/invariant_factors", "expected a list");
    for (const auto& d : inv) {
      if (!d.is_string()) throw SchemaError(path + "/invariant_factors", "expected strings");
      t.invariant_factors.push_back(d.get<std::string>());
    }
    const Json& tg = member(tj, "target", path);
    if (!tg.is_array() || tg.size() != 2) throw SchemaError(path + "/target", "expected [s, t]");
    t.target = {int_from(tg[0], path + "/target/0"), int_from(tg[1], path + "/target/1")};
    const Json& dj = member(tj, "differential", path);
    if (!dj.is_array()) throw SchemaError(path + "/differential", "expected a list of rows");
    for (const auto& row : dj) {
      if (!row.is_array()) throw SchemaError(path + "/differential", "expected a list of rows");
      std::vector<std::string> r2;
      for (const auto& e : row) {
        if (!e.is_string()) throw SchemaError(path + "/differential", "expected string entries");
        r2.push_back(e.get<std::string>());
      }
      t.differential.push_back(std::move(r2));
    }
    rep.terms.push_back(std::move(t));
  }
  return rep;
}

// ---------------------------------------------------------------- files

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // byte offset -> line:column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SchemaError("line " + std::to_string(line) + ":" + std::to_string(col), "malformed JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

// ---------------------------------------------------------------- charts

namespace {

struct ChartCell {
  Bidegree pos;
  std::string label;
};
struct ChartArrow {
  Bidegree from, to;
};
struct Chart {
  std::string title;
  std::vector<ChartCell> cells;
  std::vector<ChartArrow> arrows;
  int smin = 0, smax = 0, tmin = 0, tmax = 0;
};

Chart layout_chart(const Page& P, const Convention& c, const char* sep) {
  Chart ch;
  ch.title = (P.infinite ? std::string("E^inf") : "E^" + std::to_string(convention_page(P.r, c))) + "  " + c.name();
  bool first = true;
  auto grow = [&](Bidegree y) {
    if (first) {
      ch.smin = ch.smax = y.s;
      ch.tmin = ch.tmax = y.t;
      first = false;
    }
    ch.smin = std::min(ch.smin, y.s);
    ch.smax = std::max(ch.smax, y.s);
    ch.tmin = std::min(ch.tmin, y.t);
    ch.tmax = std::max(ch.tmax, y.t);
  };
  for (const auto& x : P.nonzero_positions()) {
    const Bidegree y = from_internal(x, c);
    grow(y);
    ch.cells.push_back({y, module_label(P.module_at(x), sep)});
    const Matrix d = P.differential_at(x);
    if (!P.infinite && !map_is_zero(d, P.moduli_at(P.target(x)))) {
      const Bidegree z = from_internal(P.target(x), c);
      grow(z);
      ch.arrows.push_back({y, z});
    }
  }
  return ch;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string chart_ascii(const Page& P, const Convention& c) {
  const Chart ch = layout_chart(P, c, "+");
  std::ostringstream os;
  os << ch.title << "\n";
  std::size_t width = 1;
  for (const auto& cell : ch.cells) width = std::max(width, cell.label.size());
  for (int s = ch.smin; s <= ch.smax; ++s) width = std::max(width, std::to_string(s).size());
  std::size_t tw = 1;
  for (int t = ch.tmin; t <= ch.tmax; ++t) tw = std::max(tw, std::to_string(t).size());
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
  std::map<Bidegree, std::string> at;
  for (const auto& cell : ch.cells) at[cell.pos] = cell.label;
  const std::size_t cols = static_cast<std::size_t>(ch.smax - ch.smin + 1);
  const std::string rule = std::string(tw, ' ') + " +" + std::string(cols * (width + 1) + 1, '-') + "+\n";
  os << rule;
  for (int t = ch.tmax; t >= ch.tmin; --t) {
    os << pad(std::to_string(t), tw) << " |";
    for (int s = ch.smin; s <= ch.smax; ++s) {
      auto it = at.find({s, t});
      os << " " << pad(it == at.end() ? "." : it->second, width);
    }
    os << " |\n";
  }
  os << rule << std::string(tw, ' ') << "  ";
  for (int s = ch.smin; s <= ch.smax; ++s) os << " " << pad(std::to_string(s), width);
  os << "\n";
  for (const auto& a : ch.arrows) os << "d: " << a.from.to_string() << " -> " << a.to.to_string() << "\n";
  return os.str();
}

std::string chart_svg(const Page& P, const Convention& c) {
  const Chart ch = layout_chart(P, c, " ⊕ ");
  const int cw = 110, rh = 44, margin = 50;
  const int cols = ch.smax - ch.smin + 1, rows = ch.tmax - ch.tmin + 1;
  const int width = 2 * margin + cols * cw, height = 2 * margin + rows * rh;
  auto cx = [&](int s) { return margin + (s - ch.smin) * cw + cw / 2; };
  auto cy = [&](int t) { return margin + (ch.tmax - t) * rh + rh / 2; };
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
     << "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" orient=\"auto\">"
     << "<path d=\"M0,0 L8,4 L0,8 z\" fill=\"#b22\"/></marker></defs>\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n"
     << "<text x=\"" << margin << "\" y=\"" << margin / 2 << "\" font-family=\"monospace\" font-size=\"14\">"
     << xml_escape(ch.title) << "</text>\n"
     << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << cols * cw << "\" height=\"" << rows * rh
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int s = ch.smin; s <= ch.smax; ++s) {
    const int x = margin + (s - ch.smin) * cw;
    if (s > ch.smin)
      os << "<line x1=\"" << x << "\" y1=\"" << margin << "\" x2=\"" << x << "\" y2=\"" << margin + rows * rh
         << "\" stroke=\"#ddd\"/>\n";
    os << "<text x=\"" << cx(s) << "\" y=\"" << height - margin / 2 << "\" text-anchor=\"middle\" "
       << "font-family=\"monospace\" font-size=\"12\">" << s << "</text>\n";
  }
  for (int t = ch.tmin; t <= ch.tmax; ++t) {
    const int y = margin + (ch.tmax - t) * rh;
    if (t < ch.tmax)
      os << "<line x1=\"" << margin << "\" y1=\"" << y << "\" x2=\"" << margin + cols * cw << "\" y2=\"" << y
         << "\" stroke=\"#ddd\"/>\n";
    os << "<text x=\"" << margin / 2 << "\" y=\"" << cy(t) + 4 << "\" text-anchor=\"middle\" "
       << "font-family=\"monospace\" font-size=\"12\">" << t << "</text>\n";
  }
  os << "<text x=\"" << width - margin / 2 << "\" y=\"" << height - margin / 2
     << "\" font-family=\"monospace\" font-size=\"12\">s</text>\n"
     << "<text x=\"" << margin / 2 << "\" y=\"" << margin - 8 << "\" font-family=\"monospace\" font-size=\"12\">t</text>\n";
  for (const auto& cell : ch.cells)
    os << "<text x=\"" << cx(cell.pos.s) << "\" y=\"" << cy(cell.pos.t) + 4
       << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"13\">" << xml_escape(cell.label)
       << "</text>\n";
  for (const auto& a : ch.arrows)
    os << "<line x1=\"" << cx(a.from.s) << "\" y1=\"" << cy(a.from.t) - 8 << "\" x2=\"" << cx(a.to.s) << "\" y2=\""
       << cy(a.to.t) - 8 << "\" stroke=\"#b22\" stroke-width=\"1.5\" marker-end=\"url(#head)\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace specseq
