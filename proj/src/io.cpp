#include "conirr/io.hpp"

#include <cctype>
#include <iterator>
#include <map>
#include <sstream>

namespace conirr {

namespace {

// ---------------------------------------------------------------------------
// Line lookup: a SAX pass that records the line of every value by JSON pointer.

struct LineCursor {
  std::size_t line = 1;
  std::size_t last_token_line = 1;
};

class CountingIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  CountingIterator(const char* p, LineCursor* cursor) : p_(p), cursor_(cursor) {}
  reference operator*() const { return *p_; }
  CountingIterator& operator++() {
    if (*p_ == '\n')
      ++cursor_->line;
    else if (!std::isspace(static_cast<unsigned char>(*p_)))
      cursor_->last_token_line = cursor_->line;
    ++p_;
    return *this;
  }
  CountingIterator operator++(int) {
    CountingIterator old = *this;
    ++*this;
    return old;
  }
  bool operator==(const CountingIterator& o) const { return p_ == o.p_; }
  bool operator!=(const CountingIterator& o) const { return p_ != o.p_; }

 private:
  const char* p_;
  LineCursor* cursor_;
};

class LineRecorder : public nlohmann::json_sax<Json> {
 public:
  explicit LineRecorder(const LineCursor* cursor) : cursor_(cursor) {}

  bool null() override { return value(); }
  bool boolean(bool) override { return value(); }
  bool number_integer(number_integer_t) override { return value(); }
  bool number_unsigned(number_unsigned_t) override { return value(); }
  bool number_float(number_float_t, const string_t&) override { return value(); }
  bool string(string_t&) override { return value(); }
  bool binary(binary_t&) override { return value(); }
  bool start_object(std::size_t) override { return open(false); }
  bool start_array(std::size_t) override { return open(true); }
  bool key(string_t& k) override {
    frames_.back().key = k;
    return true;
  }
  bool end_object() override { return close(); }
  bool end_array() override { return close(); }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override {
    return false;
  }

  const std::map<std::string, std::size_t>& lines() const { return lines_; }

 private:
  struct Frame {
    bool array;
    std::size_t index = 0;
    std::string key;
  };

  std::string path() const {
    std::string p;
    for (const auto& f : frames_) p += "/" + (f.array ? std::to_string(f.index) : f.key);
    return p;
  }
  void advance() {
    if (!frames_.empty() && frames_.back().array) ++frames_.back().index;
  }
  bool value() {
    lines_.emplace(path(), cursor_->last_token_line);
    advance();
    return true;
  }
  bool open(bool array) {
    lines_.emplace(path(), cursor_->last_token_line);
    frames_.push_back(Frame{array, 0, {}});
    return true;
  }
  bool close() {
    frames_.pop_back();
    advance();
    return true;
  }

  const LineCursor* cursor_;
  std::vector<Frame> frames_;
  std::map<std::string, std::size_t> lines_;
};

std::map<std::string, std::size_t> value_lines(std::string_view text) {
  LineCursor cursor;
  LineRecorder recorder(&cursor);
  Json::sax_parse(CountingIterator(text.data(), &cursor),
                  CountingIterator(text.data() + text.size(), &cursor), &recorder);
  return recorder.lines();
}

// A semantic error located by JSON pointer.
struct PathError {
  std::string path;
  std::string message;
};

const Json& member(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) throw PathError{path, "expected an object"};
  auto it = j.find(key);
  if (it == j.end()) throw PathError{path, std::string("missing key \"") + key + "\""};
  return *it;
}

Rational rational_at(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw PathError{path, "expected a rational string \"p\" or \"p/q\""};
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw PathError{path, e.what()};
  }
}

// Array of equal-length arrays of rationals; `outer` x `inner` entries.
std::vector<std::vector<Rational>> grid_at(const Json& j, const std::string& path) {
  if (!j.is_array()) throw PathError{path, "expected an array of arrays"};
  std::vector<std::vector<Rational>> out;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string rp = path + "/" + std::to_string(r);
    if (!j[r].is_array()) throw PathError{rp, "expected an array"};
    if (!out.empty() && j[r].size() != out.front().size())
      throw PathError{rp, "row length " + std::to_string(j[r].size()) + " differs from " +
                              std::to_string(out.front().size())};
    std::vector<Rational> row;
    for (std::size_t c = 0; c < j[r].size(); ++c)
      row.push_back(rational_at(j[r][c], rp + "/" + std::to_string(c)));
    out.push_back(std::move(row));
  }
  return out;
}

RationalMatrix rows_at(const Json& j, const std::string& path) {
  const auto g = grid_at(j, path);
  const Index cols = g.empty() ? 0 : static_cast<Index>(g.front().size());
  RationalMatrix m(static_cast<Index>(g.size()), cols);
  for (Index i = 0; i < m.rows(); ++i)
    for (Index k = 0; k < cols; ++k) m(i, k) = g[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
  return m;
}

RationalMatrix columns_at(const Json& j, const std::string& path, Index rows) {
  const auto g = grid_at(j, path);
  RationalMatrix m(rows, static_cast<Index>(g.size()));
  for (std::size_t c = 0; c < g.size(); ++c) {
    if (static_cast<Index>(g[c].size()) != rows)
      throw PathError{path + "/" + std::to_string(c),
                      "column length " + std::to_string(g[c].size()) + " differs from " +
                          std::to_string(rows)};
    for (Index i = 0; i < rows; ++i) m(i, static_cast<Index>(c)) = g[c][static_cast<std::size_t>(i)];
  }
  return m;
}

RationalVector vector_at(const Json& j, const std::string& path) {
  if (!j.is_array()) throw PathError{path, "expected an array"};
  RationalVector v(static_cast<Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k)
    v(static_cast<Index>(k)) = rational_at(j[k], path + "/" + std::to_string(k));
  return v;
}

PolyhedralCone cone_at(const Json& j, const std::string& path, std::size_t face_limit) {
  const Json& dim = member(j, path, "ambient_dim");
  if (!dim.is_number_unsigned() || dim.get<long long>() < 1)
    throw PathError{path + "/ambient_dim", "expected a positive integer"};
  const RationalMatrix g =
      columns_at(member(j, path, "generators"), path + "/generators", dim.get<Index>());
  try {
    return PolyhedralCone(g, face_limit);
  } catch (const std::invalid_argument& e) {
    throw PathError{path + "/generators", e.what()};
  }
}

std::vector<Index> index_set_at(const Json& j) {
  std::vector<Index> out;
  for (const auto& x : j) out.push_back(x.get<Index>() - 1);
  return out;
}

Face face_at(const Json& j) {
  Face f;
  f.extremal_index_set = index_set_at(j.at("indices"));
  f.dim = j.at("dim").get<Index>();
  f.trivial = j.value("trivial", false);
  f.support = vector_at(j.at("support"), "/support");
  f.span_basis = columns_at(j.at("span_basis"), "/span_basis", f.support.size());
  return f;
}

QuasipositivityCertificate certificate_at(const Json& j) {
  QuasipositivityCertificate c;
  c.shift = rational_at(j.at("shift"), "/shift");
  const Json& w = j.at("witnesses");
  const Index r = static_cast<Index>(w.size());
  c.witnesses = columns_at(w, "/witnesses", r);
  return c;
}

Corner corner_at(const Json& j) {
  Corner c;
  c.row = j.at("corner").at(0).get<Index>() - 1;
  c.col = j.at("corner").at(1).get<Index>() - 1;
  c.sign = j.at("sign").get<std::string>() == "-" ? -1 : 1;
  return c;
}

void write_rows(std::ostringstream& os, const RationalMatrix& m, bool columns,
                const std::string& indent) {
  const Index outer = columns ? m.cols() : m.rows();
  const Index inner = columns ? m.rows() : m.cols();
  os << "[\n";
  for (Index a = 0; a < outer; ++a) {
    os << indent << "  [";
    for (Index b = 0; b < inner; ++b) {
      if (b) os << ", ";
      os << '"' << to_string(columns ? m(b, a) : m(a, b)) << '"';
    }
    os << "]" << (a + 1 < outer ? "," : "") << "\n";
  }
  os << indent << "]";
}

}  // namespace

ProblemInstance parse_problem(std::string_view text, std::size_t face_limit) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t k = 0; k < e.byte && k < text.size(); ++k) line += text[k] == '\n';
    throw InputError("line " + std::to_string(line) + ": " + e.what(), line);
  }
  try {
    const Json& cone_j = member(doc, "", "cone");
    PolyhedralCone cone = cone_at(cone_j, "/cone", face_limit);
    RationalMatrix a = rows_at(member(doc, "", "A"), "/A");

    const Json& bt = member(doc, "", "Btilde");
    if (!bt.is_array()) throw PathError{"/Btilde", "expected an array of strings"};
    std::vector<std::string> rows;
    for (std::size_t k = 0; k < bt.size(); ++k) {
      if (!bt[k].is_string()) throw PathError{"/Btilde/" + std::to_string(k), "expected a string"};
      rows.push_back(bt[k].get<std::string>());
    }
    SignPattern btilde;
    try {
      btilde = SignPattern::parse(rows);
    } catch (const std::invalid_argument& e) {
      throw PathError{"/Btilde", e.what()};
    }

    std::optional<RationalMatrix> b;
    if (auto it = doc.find("B"); it != doc.end() && !it->is_null()) b = rows_at(*it, "/B");

    if (b && b->rows() == btilde.rows() && b->cols() == btilde.cols())
      for (Index i = 0; i < b->rows(); ++i)
        for (Index j = 0; j < b->cols(); ++j)
          if (const int s = sign((*b)(i, j)); s != 0 && s != btilde(i, j))
            throw PathError{"/B/" + std::to_string(i) + "/" + std::to_string(j),
                            "entry has a sign not allowed by Btilde"};

    ProblemInstance inst{std::move(cone), std::move(a), std::move(btilde), std::move(b)};
    try {
      inst.validate();
    } catch (const DimensionMismatch& e) {
      throw PathError{"/A", e.what()};
    } catch (const std::invalid_argument& e) {
      throw PathError{"/B", e.what()};
    }
    return inst;
  } catch (const PathError& e) {
    const auto lines = value_lines(text);
    std::string p = e.path;
    std::size_t line = 0;
    for (;;) {
      if (auto it = lines.find(p); it != lines.end()) {
        line = it->second;
        break;
      }
      if (p.empty()) break;
      p.erase(p.rfind('/'));
    }
    throw InputError("line " + std::to_string(line) + " (" + (e.path.empty() ? "/" : e.path) +
                         "): " + e.message,
                     line);
  }
}

PolyhedralCone parse_cone(const Json& j, std::size_t face_limit) {
  try {
    return cone_at(j, "", face_limit);
  } catch (const PathError& e) {
    throw InputError(e.path + ": " + e.message);
  }
}

std::string write_problem(const ProblemInstance& inst) {
  std::ostringstream os;
  os << "{\n  \"cone\": {\n    \"ambient_dim\": " << inst.cone.ambient_dim()
     << ",\n    \"generators\": ";
  write_rows(os, inst.cone.generators(), true, "    ");
  os << "\n  },\n  \"A\": ";
  write_rows(os, inst.a, false, "  ");
  os << ",\n  \"Btilde\": [";
  const auto rows = inst.btilde.to_strings();
  for (std::size_t k = 0; k < rows.size(); ++k) os << (k ? ", " : "") << '"' << rows[k] << '"';
  os << "]";
  if (inst.b) {
    os << ",\n  \"B\": ";
    write_rows(os, *inst.b, false, "  ");
  }
  os << "\n}\n";
  return os.str();
}

Json to_json(const Rational& r) { return to_string(r); }

Json matrix_to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

Json columns_to_json(const RationalMatrix& m) {
  return matrix_to_json(RationalMatrix(m.transpose()));
}

Json vector_to_json(const RationalVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

Json index_set_to_json(const std::vector<Index>& s) {
  Json out = Json::array();
  for (Index k : s) out.push_back(k + 1);
  return out;
}

Json face_to_json(const Face& f) {
  return Json{{"indices", index_set_to_json(f.extremal_index_set)},
              {"dim", f.dim},
              {"trivial", f.trivial},
              {"span_basis", columns_to_json(f.span_basis)},
              {"support", vector_to_json(f.support)}};
}

Json faces_to_json(const PolyhedralCone& cone) {
  Json list = Json::array();
  std::size_t nontrivial = 0;
  for (const Face& f : cone.faces()) {
    list.push_back(face_to_json(f));
    nontrivial += !f.trivial;
  }
  return Json{{"ambient_dim", cone.ambient_dim()},
              {"dim", cone.dim()},
              {"extremals", index_set_to_json(cone.extremal_indices())},
              {"facet_normals", matrix_to_json(cone.facet_normals())},
              {"nontrivial_count", nontrivial},
              {"faces", std::move(list)}};
}

Json certificate_to_json(const QuasipositivityCertificate& c) {
  return Json{{"shift", to_string(c.shift)}, {"witnesses", columns_to_json(c.witnesses)}};
}

Json quasipositivity_to_json(const FamilyQuasipositivity& q) {
  Json certs = Json::array();
  for (const CornerCheck& c : q.checks) {
    Json entry{{"corner", {c.corner.row + 1, c.corner.col + 1}},
               {"sign", c.corner.sign > 0 ? "+" : "-"}};
    if (c.certificate)
      entry["certificate"] = certificate_to_json(*c.certificate);
    else
      entry["certificate"] = nullptr;
    certs.push_back(std::move(entry));
  }
  Json out{{"pass", q.holds}, {"corners", std::move(certs)}};
  if (q.failing)
    out["failing_corner"] = Json{{"corner", {q.failing->row + 1, q.failing->col + 1}},
                                 {"sign", q.failing->sign > 0 ? "+" : "-"}};
  return out;
}

Json oracle_to_json(const OracleVerdict& v) {
  Json out{{"verdict", v.irreducible ? "Irreducible" : "Reducible"}};
  if (v.witness) {
    Json w = face_to_json(v.witness->face);
    w["action"] = matrix_to_json(v.witness->action);
    out["witness"] = std::move(w);
  }
  return out;
}

Json report_to_json(const AnalysisReport& r) {
  Json out;
  out["verdict"] = to_string(r.verdict);
  Json imA{{"pass", r.hypothesis_imA.pass}};
  if (r.hypothesis_imA.face) {
    imA["face"] = face_to_json(*r.hypothesis_imA.face);
    imA["coefficients"] = matrix_to_json(r.hypothesis_imA.coefficients);
  }
  out["hypothesis_imA"] = std::move(imA);
  out["hypothesis_quasipos"] = quasipositivity_to_json(r.hypothesis_quasipos);
  out["criterion"] = r.strongly_connected
                         ? Json{{"evaluated", true}, {"strongly_connected", *r.strongly_connected}}
                         : Json{{"evaluated", false}};
  if (r.witness) {
    Json w = face_to_json(*r.witness);
    if (r.witness_action) w["action"] = matrix_to_json(*r.witness_action);
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  if (r.oracle) out["oracle"] = oracle_to_json(*r.oracle);
  return out;
}

Json fuzz_stats_to_json(const FuzzStats& s) {
  Json verdicts = Json::object();
  for (const auto& [v, n] : s.verdicts) verdicts[to_string(v)] = n;
  Json violations = Json::array();
  for (const auto& v : s.violations) violations.push_back({{"trial", v.trial}, {"message", v.message}});
  Json injected = Json::array();
  for (Verdict v : s.injected_verdicts) injected.push_back(to_string(v));
  return Json{{"trials", s.trials},
              {"verdicts", std::move(verdicts)},
              {"oracle_irreducible", s.oracle_irreducible},
              {"oracle_reducible", s.oracle_reducible},
              {"inconclusive_but_irreducible", s.inconclusive_but_irreducible},
              {"injected_verdicts", std::move(injected)},
              {"violations", std::move(violations)}};
}

AnalysisReport report_from_json(const Json& j) {
  try {
    AnalysisReport r;
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    const Json& imA = j.at("hypothesis_imA");
    r.hypothesis_imA.pass = imA.at("pass").get<bool>();
    if (imA.contains("face")) {
      r.hypothesis_imA.face = face_at(imA.at("face"));
      r.hypothesis_imA.coefficients = rows_at(imA.at("coefficients"), "/coefficients");
    }
    const Json& qp = j.at("hypothesis_quasipos");
    r.hypothesis_quasipos.holds = qp.at("pass").get<bool>();
    for (const Json& c : qp.at("corners")) {
      CornerCheck check{corner_at(c), std::nullopt};
      if (!c.at("certificate").is_null()) check.certificate = certificate_at(c.at("certificate"));
      r.hypothesis_quasipos.checks.push_back(std::move(check));
    }
    if (qp.contains("failing_corner")) r.hypothesis_quasipos.failing = corner_at(qp.at("failing_corner"));
    const Json& crit = j.at("criterion");
    if (crit.at("evaluated").get<bool>()) r.strongly_connected = crit.at("strongly_connected").get<bool>();
    if (!j.at("witness").is_null()) {
      r.witness = face_at(j.at("witness"));
      if (j.at("witness").contains("action"))
        r.witness_action = rows_at(j.at("witness").at("action"), "/action");
    }
    if (j.contains("oracle")) {
      OracleVerdict o;
      o.irreducible = j.at("oracle").at("verdict").get<std::string>() == "Irreducible";
      if (j.at("oracle").contains("witness")) {
        const Json& w = j.at("oracle").at("witness");
        o.witness = ReducibilityWitness{face_at(w), rows_at(w.at("action"), "/action")};
      }
      r.oracle = std::move(o);
    }
    return r;
  } catch (const PathError& e) {
    throw InputError("report" + e.path + ": " + e.message);
  } catch (const Json::exception& e) {
    throw InputError(std::string("report: ") + e.what());
  }
}

}  // namespace conirr
