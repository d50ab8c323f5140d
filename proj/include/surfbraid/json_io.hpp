#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "json.hpp"
#include "surfbraid/classify.hpp"
#include "surfbraid/coset.hpp"
#include "surfbraid/finite_group.hpp"
#include "surfbraid/goldberg.hpp"
#include "surfbraid/intmat.hpp"
#include "surfbraid/presentation.hpp"
#include "surfbraid/rewrite.hpp"
#include "surfbraid/twisted.hpp"

namespace surfbraid {

// Ordered JSON everywhere: identical data prints identical bytes, which the
// command line interface promises.  Arbitrary-precision integers become
// plain numbers when they fit in a signed 64-bit word and decimal strings
// otherwise; an infinite Reidemeister count is the string "inf".
using Json = nlohmann::ordered_json;

Json toJson(const mpz_class& v);
Json toJson(const ReidemeisterCount& r);
Json toJson(const AbelianInvariants& inv);
Json toJson(const IntMatrix& m);
Json toJson(const Presentation& p);
Json toJson(const FiniteGroup& g);
Json toJson(const CosetTable& t);
Json toJson(const CosetOverflow& o);
Json toJson(const RewriteSystem& rs);
Json toJson(const KbExhausted& e);
Json toJson(const IsomorphismCertificate& c);
Json toJson(const TraceStep& s);
Json toJson(const RinfStatus& s);
Json toJson(const std::vector<TableCell>& cells);
Json toJson(const CensusResult& c);
Json toJson(const AbelianizationCertificate& c);

// Parsers check shape themselves and throw ParseError with a usable message;
// semantic validation (declared generators, group axioms, matrix squareness)
// stays with the factories they call.
mpz_class mpzFromJson(const Json& j);
Presentation presentationFromJson(const Json& j);
FiniteGroup finiteGroupFromJson(const Json& j);
std::vector<int> endoImageFromJson(const Json& j);
std::map<GeneratorSymbol, Word> wordImagesFromJson(const Json& j);
IntMatrix intMatrixFromJson(const Json& j);

// indent < 0 prints the compact single-line form; otherwise pretty with the
// given width.  Output always ends in a newline.
std::string dumpJson(const Json& j, int indent = -1);

}  // namespace surfbraid
