#include "surfbraid/json_io.hpp"

#include <cstdint>
#include <sstream>
#include <utility>
#include <vector>

#include "surfbraid/errors.hpp"

namespace surfbraid {

namespace {

// Rule sides are raw letter strings: cancellation rules like a a^-1 -> 1
// must print as written, so this cannot go through Word, which would reduce
// them away.
std::string lettersToString(const LetterString& s) {
  if (s.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const Letter& l : s) {
    if (!first) out << ' ';
    first = false;
    out << toString(l.sym);
    if (l.sign < 0) out << "^-1";
  }
  return out.str();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object())
    throw ParseError(std::string("expected an object with \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string stringField(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string())
    throw ParseError(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

int intValue(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

Json toJson(const mpz_class& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Json toJson(const ReidemeisterCount& r) {
  if (r.infinite) return "inf";
  return toJson(r.value);
}

Json toJson(const AbelianInvariants& inv) {
  Json torsion = Json::array();
  for (const mpz_class& t : inv.torsion) torsion.push_back(toJson(t));
  return Json{{"free_rank", inv.freeRank}, {"torsion", std::move(torsion)}};
}

Json toJson(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(toJson(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json toJson(const Presentation& p) {
  Json gens = Json::array();
  for (const GeneratorSymbol& g : p.generators) gens.push_back(toString(g));
  Json rels = Json::array();
  for (const Word& w : p.relators) rels.push_back(toString(w));
  return Json{{"generators", std::move(gens)},
              {"relators", std::move(rels)},
              {"provenance", p.provenance}};
}

Json toJson(const FiniteGroup& g) {
  Json table = Json::array();
  for (int a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    table.push_back(std::move(row));
  }
  return Json{{"order", g.order()},
              {"table", std::move(table)},
              {"identity", g.identity()}};
}

Json toJson(const CosetTable& t) {
  Json gens = Json::array();
  for (const GeneratorSymbol& g : t.generators()) gens.push_back(toString(g));
  Json rows = Json::array();
  for (const auto& r : t.rows()) {
    Json row = Json::array();
    for (int v : r) row.push_back(v);
    rows.push_back(std::move(row));
  }
  return Json{{"closed", t.closed()},
              {"cosets", t.cosets()},
              {"generators", std::move(gens)},
              {"action", std::move(rows)}};
}

Json toJson(const CosetOverflow& o) {
  return Json{{"closed", false}, {"max_cosets", o.maxCosets}};
}

Json toJson(const RewriteSystem& rs) {
  Json alphabet = Json::array();
  for (const GeneratorSymbol& g : rs.alphabet()) alphabet.push_back(toString(g));
  Json rules = Json::array();
  for (const RewriteRule& r : rs.rules())
    rules.push_back(Json{{"lhs", lettersToString(r.lhs)},
                         {"rhs", lettersToString(r.rhs)}});
  return Json{{"confluent", rs.confluent()},
              {"alphabet", std::move(alphabet)},
              {"rules", std::move(rules)}};
}

Json toJson(const KbExhausted& e) {
  return Json{{"confluent", false},
              {"exhausted",
               Json{{"dimension", toString(e.dimension)},
                    {"rules", e.rules},
                    {"steps", e.steps}}}};
}

Json toJson(const IsomorphismCertificate& c) {
  auto images = [](const GroupHom& h) {
    Json out = Json::object();
    for (const auto& [sym, w] : h.images) out[toString(sym)] = toString(w);
    return out;
  };
  Json witness;  // null unless Refuted produced one
  if (c.witness) witness = toString(*c.witness);
  return Json{{"surface", c.surface.toString()},
              {"strands", c.strands},
              {"status", toString(c.status)},
              {"reason", c.reason},
              {"witness", std::move(witness)},
              {"checks",
               Json{{"phi_well_defined", c.phiWellDefined},
                    {"psi_well_defined", c.psiWellDefined},
                    {"composites_fix_generators", c.compositesFixGenerators}}},
              {"quotient_abelian", toJson(c.quotientAbelian)},
              {"target_abelian", toJson(c.targetAbelian)},
              {"rewrite_rules", c.rewriteRules},
              {"quotient", toJson(c.quotient)},
              {"target", toJson(c.target)},
              {"phi", images(c.phi)},
              {"psi", images(c.psi)}};
}

Json toJson(const TraceStep& s) {
  Json premises = Json::array();
  for (int p : s.premises) premises.push_back(p);
  return Json{{"kind", toString(s.kind)},
              {"rule", s.rule},
              {"statement", s.statement},
              {"citation", s.citation},
              {"premises", std::move(premises)}};
}

Json toJson(const RinfStatus& s) {
  Json trace = Json::array();
  for (const TraceStep& step : s.trace) trace.push_back(toJson(step));
  return Json{{"verdict", toString(s.verdict)}, {"trace", std::move(trace)}};
}

Json toJson(const std::vector<TableCell>& cells) {
  Json out = Json::array();
  for (const TableCell& c : cells)
    out.push_back(Json{{"surface", c.surface.toString()},
                       {"strands", c.strands},
                       {"pure", toString(c.pure)},
                       {"full", toString(c.full)}});
  return Json{{"cells", std::move(out)}};
}

Json toJson(const CensusResult& c) {
  return Json{{"classes", toJson(c.classes)}, {"words", c.words}};
}

Json toJson(const AbelianizationCertificate& c) {
  return Json{{"certified_infinite", c.certifiedInfinite()},
              {"bound", toJson(c.bound)},
              {"induced", toJson(c.induced)}};
}

mpz_class mpzFromJson(const Json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return mpz_class(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw ParseError("not a decimal integer: \"" + j.get<std::string>() +
                       "\"");
    }
  }
  throw ParseError("expected an integer or a decimal string");
}

Presentation presentationFromJson(const Json& j) {
  const Json& gens = field(j, "generators");
  const Json& rels = field(j, "relators");
  if (!gens.is_array() || !rels.is_array())
    throw ParseError("\"generators\" and \"relators\" must be arrays");
  std::vector<GeneratorSymbol> generators;
  for (const Json& g : gens) {
    if (!g.is_string()) throw ParseError("generators must be strings");
    generators.push_back(parseSymbol(g.get<std::string>()));
  }
  std::vector<Word> relators;
  for (const Json& r : rels) {
    if (!r.is_string()) throw ParseError("relators must be strings");
    relators.push_back(parseWord(r.get<std::string>()));
  }
  std::string provenance = "ad hoc";
  if (j.contains("provenance")) provenance = stringField(j, "provenance");
  return Presentation::make(std::move(generators), std::move(relators),
                            std::move(provenance));
}

FiniteGroup finiteGroupFromJson(const Json& j) {
  const Json& table = field(j, "table");
  if (!table.is_array()) throw ParseError("\"table\" must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const Json& r : table) {
    if (!r.is_array()) throw ParseError("table rows must be arrays");
    std::vector<int> row;
    for (const Json& v : r) row.push_back(intValue(v, "table entry"));
    rows.push_back(std::move(row));
  }
  if (j.contains("order") &&
      intValue(field(j, "order"), "order") != static_cast<int>(rows.size()))
    throw ParseError("\"order\" disagrees with the table size");
  if (j.contains("identity") &&
      intValue(field(j, "identity"), "identity") != 0)
    throw ParseError("tables are normalized so that the identity is 0");
  return FiniteGroup::fromTable(std::move(rows));
}

std::vector<int> endoImageFromJson(const Json& j) {
  const Json& arr = j.is_object() ? field(j, "image") : j;
  if (!arr.is_array())
    throw ParseError("an endomorphism is an array of element images");
  std::vector<int> image;
  for (const Json& v : arr) image.push_back(intValue(v, "image entry"));
  return image;
}

std::map<GeneratorSymbol, Word> wordImagesFromJson(const Json& j) {
  if (!j.is_object())
    throw ParseError("generator images must be an object of generator: word");
  std::map<GeneratorSymbol, Word> images;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw ParseError("images must be word strings");
    images[parseSymbol(key)] = parseWord(value.get<std::string>());
  }
  return images;
}

IntMatrix intMatrixFromJson(const Json& j) {
  if (!j.is_array()) throw ParseError("a matrix is an array of row arrays");
  std::vector<std::vector<mpz_class>> rows;
  std::size_t cols = 0;
  for (const Json& r : j) {
    if (!r.is_array()) throw ParseError("matrix rows must be arrays");
    std::vector<mpz_class> row;
    for (const Json& v : r) row.push_back(mpzFromJson(v));
    if (rows.empty())
      cols = row.size();
    else if (row.size() != cols)
      throw ParseError("matrix rows must all have the same length");
    rows.push_back(std::move(row));
  }
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  return m;
}

std::string dumpJson(const Json& j, int indent) {
  return j.dump(indent < 0 ? -1 : indent) + "\n";
}

}  // namespace surfbraid
