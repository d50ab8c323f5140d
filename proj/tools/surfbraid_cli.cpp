#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "surfbraid/classify.hpp"
#include "surfbraid/coset.hpp"
#include "surfbraid/errors.hpp"
#include "surfbraid/families.hpp"
#include "surfbraid/finite_group.hpp"
#include "surfbraid/goldberg.hpp"
#include "surfbraid/json_io.hpp"
#include "surfbraid/presentation.hpp"
#include "surfbraid/rewrite.hpp"
#include "surfbraid/twisted.hpp"
#include "surfbraid/word.hpp"

namespace {

using surfbraid::Json;

Json readJsonDocument(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw surfbraid::InvalidParams("cannot open \"" + path + "\"");
    buffer << in.rdbuf();
  }
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw surfbraid::ParseError("invalid JSON in " +
                                (path == "-" ? "standard input" : path) +
                                ": " + e.what());
  }
}

struct Flags {
  int indent = -1;

  std::string surface;
  int strands = 1;
  std::string flavor = "pure";
  bool requireVerified = false;

  int maxGenus = 0, maxPunctures = 0, maxStrands = 0;

  std::string groupPath, endoPath, matrixPath, presentationPath;

  surfbraid::KbBudget budget;
  std::size_t maxCosets = 100000;

  int rank = 1;
  std::vector<std::string> images;
  int maxLen = 0, maxWitness = 0;
};

void emit(const Json& j, const Flags& f) {
  std::cout << surfbraid::dumpJson(j, f.indent);
}

int runPresent(const Flags& f) {
  surfbraid::SurfaceSpec s = surfbraid::SurfaceSpec::parse(f.surface);
  emit(toJson(surfbraid::pureBraid(s, f.strands)), f);
  return 0;
}

int runGoldbergVerify(const Flags& f) {
  surfbraid::SurfaceSpec s = surfbraid::SurfaceSpec::parse(f.surface);
  surfbraid::IsomorphismCertificate cert =
      surfbraid::verifyBandQuotient(s, f.strands, f.budget);
  emit(toJson(cert), f);
  if (f.requireVerified &&
      cert.status != surfbraid::CertificateStatus::Verified)
    return 3;
  return 0;
}

int runClassify(const Flags& f) {
  surfbraid::BraidGroupId id;
  id.surface = surfbraid::SurfaceSpec::parse(f.surface);
  id.strands = f.strands;
  id.flavor = f.flavor == "full" ? surfbraid::Flavor::Full
                                 : surfbraid::Flavor::Pure;
  emit(toJson(surfbraid::classify(id)), f);
  return 0;
}

int runTable(const Flags& f) {
  emit(toJson(surfbraid::classificationTable(f.maxGenus, f.maxPunctures,
                                             f.maxStrands)),
       f);
  return 0;
}

int runReidemeister(const Flags& f) {
  bool orbit = !f.groupPath.empty();
  bool abelian = !f.matrixPath.empty();
  bool certificate = !f.presentationPath.empty();
  if (orbit + abelian + certificate != 1)
    throw surfbraid::InvalidParams(
        "pick exactly one of --group, --matrix, --presentation");

  if (orbit) {
    if (f.endoPath.empty())
      throw surfbraid::InvalidParams("--group needs --endo");
    surfbraid::FiniteGroup g =
        surfbraid::finiteGroupFromJson(readJsonDocument(f.groupPath));
    surfbraid::FiniteEndo endo = surfbraid::makeFiniteEndo(
        g, surfbraid::endoImageFromJson(readJsonDocument(f.endoPath)));
    emit(Json{{"R", toJson(surfbraid::reidemeisterFinite(g, endo))},
              {"method", "orbit"}},
         f);
    return 0;
  }

  if (abelian) {
    surfbraid::IntMatrix m =
        surfbraid::intMatrixFromJson(readJsonDocument(f.matrixPath));
    emit(Json{{"R", toJson(surfbraid::reidemeisterAbelian(m))},
              {"method", "abelian"}},
         f);
    return 0;
  }

  if (f.endoPath.empty())
    throw surfbraid::InvalidParams("--presentation needs --endo");
  surfbraid::Presentation p =
      surfbraid::presentationFromJson(readJsonDocument(f.presentationPath));
  auto byGenerator =
      surfbraid::wordImagesFromJson(readJsonDocument(f.endoPath));
  std::vector<surfbraid::Word> images;
  for (const surfbraid::GeneratorSymbol& g : p.generators) {
    auto it = byGenerator.find(g);
    if (it == byGenerator.end())
      throw surfbraid::InvalidParams("no image for generator " + toString(g));
    images.push_back(it->second);
  }
  if (byGenerator.size() != p.generators.size())
    throw surfbraid::InvalidParams(
        "images name generators outside the presentation");
  surfbraid::AbelianizationCertificate cert =
      surfbraid::abelianizationCertificate(p, images);
  // The certificate only bounds R from below, so a finite bound decides
  // nothing about R itself; "inf" is the one honest exact answer here.
  Json r;  // null unless certified
  if (cert.certifiedInfinite()) r = "inf";
  emit(Json{{"R", std::move(r)},
            {"method", "certificate"},
            {"certificate", toJson(cert)}},
       f);
  return 0;
}

int runAbelianize(const Flags& f) {
  surfbraid::Presentation p =
      surfbraid::presentationFromJson(readJsonDocument(f.presentationPath));
  emit(toJson(surfbraid::abelianInvariants(p)), f);
  return 0;
}

int runKbComplete(const Flags& f) {
  surfbraid::Presentation p =
      surfbraid::presentationFromJson(readJsonDocument(f.presentationPath));
  surfbraid::KbResult result = surfbraid::kbComplete(p, f.budget);
  if (const auto* rs = std::get_if<surfbraid::RewriteSystem>(&result))
    emit(toJson(*rs), f);
  else
    emit(toJson(std::get<surfbraid::KbExhausted>(result)), f);
  return 0;
}

int runEnumerate(const Flags& f) {
  surfbraid::Presentation p =
      surfbraid::presentationFromJson(readJsonDocument(f.presentationPath));
  surfbraid::CosetResult result = surfbraid::toddCoxeter(p, f.maxCosets);
  if (const auto* table = std::get_if<surfbraid::CosetTable>(&result)) {
    Json j = toJson(*table);
    j["group"] = toJson(surfbraid::toFiniteGroup(*table));
    emit(j, f);
  } else {
    emit(toJson(std::get<surfbraid::CosetOverflow>(result)), f);
  }
  return 0;
}

int runCensus(const Flags& f) {
  static const char* names[] = {"x", "y", "z"};
  if (f.rank < 1 || f.rank > 3)
    throw surfbraid::InvalidParams("census rank must be 1, 2 or 3");
  if (static_cast<int>(f.images.size()) != f.rank)
    throw surfbraid::InvalidParams(
        "need exactly one --image per basis generator");
  std::vector<surfbraid::GeneratorSymbol> basis;
  for (int i = 0; i < f.rank; ++i)
    basis.push_back(surfbraid::GeneratorSymbol::plain(names[i]));
  std::vector<surfbraid::Word> images;
  for (const std::string& w : f.images)
    images.push_back(surfbraid::parseWord(w));
  surfbraid::FreeEndo e =
      surfbraid::makeFreeEndo(std::move(basis), std::move(images));
  emit(toJson(surfbraid::boundedCensusFree(e, f.maxLen, f.maxWitness)), f);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"surface pure braid presentations, quotient certificates and "
               "twisted conjugacy counts"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--json-indent", f.indent,
                 "pretty-print JSON with this indent width");

  auto surfaceOpts = [&f](CLI::App* cmd) {
    cmd->add_option("--surface", f.surface, "sphere:p, o:g,p or n:g,p")
        ->required();
    cmd->add_option("--strands", f.strands, "number of strands")->required();
    cmd->fallthrough();
  };

  CLI::App* present =
      app.add_subcommand("present", "emit a pure braid presentation");
  surfaceOpts(present);

  CLI::App* verify = app.add_subcommand(
      "goldberg-verify", "certify the band quotient against a direct power "
                         "of the surface group");
  surfaceOpts(verify);
  verify->add_option("--kb-max-rules", f.budget.maxRules,
                     "completion budget: rule count");
  verify->add_option("--kb-max-steps", f.budget.maxSteps,
                     "completion budget: rewrite steps");
  verify->add_flag("--require-verified", f.requireVerified,
                   "exit 3 unless the certificate says Verified");

  CLI::App* classify =
      app.add_subcommand("classify", "derive the twisted conjugacy verdict "
                                     "for one braid group");
  surfaceOpts(classify);
  classify->add_option("--flavor", f.flavor, "pure or full")
      ->required()
      ->check(CLI::IsMember({"pure", "full"}));

  CLI::App* table =
      app.add_subcommand("table", "verdict grid over a parameter box");
  table->add_option("--max-g", f.maxGenus, "largest genus")->required();
  table->add_option("--max-p", f.maxPunctures, "largest puncture count")
      ->required();
  table->add_option("--max-n", f.maxStrands, "largest strand count")
      ->required();
  table->fallthrough();

  CLI::App* reid = app.add_subcommand(
      "reidemeister", "count twisted conjugacy classes: orbit mode "
                      "(--group + --endo), abelian mode (--matrix) or "
                      "certificate mode (--presentation + --endo)");
  reid->add_option("--group", f.groupPath, "finite group table JSON");
  reid->add_option("--endo", f.endoPath,
                   "element images (orbit) or generator images (certificate)");
  reid->add_option("--matrix", f.matrixPath, "integer matrix JSON");
  reid->add_option("--presentation", f.presentationPath, "presentation JSON");
  reid->fallthrough();

  CLI::App* abelianize =
      app.add_subcommand("abelianize", "abelian invariants of a presentation");
  abelianize->add_option("--presentation", f.presentationPath,
                         "presentation JSON, - for standard input")
      ->required();
  abelianize->fallthrough();

  CLI::App* kb = app.add_subcommand("kb-complete",
                                    "complete a presentation into a "
                                    "confluent rewriting system");
  kb->add_option("--presentation", f.presentationPath,
                 "presentation JSON, - for standard input")
      ->required();
  kb->add_option("--max-rules", f.budget.maxRules, "budget: rule count");
  kb->add_option("--max-rule-length", f.budget.maxRuleLength,
                 "budget: rule length");
  kb->add_option("--max-steps", f.budget.maxSteps, "budget: rewrite steps");
  kb->fallthrough();

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "coset enumeration over the trivial "
                                      "subgroup, with the full group table "
                                      "when it closes");
  enumerate->add_option("--presentation", f.presentationPath,
                        "presentation JSON, - for standard input")
      ->required();
  enumerate->add_option("--max-cosets", f.maxCosets, "table size budget");
  enumerate->fallthrough();

  CLI::App* census = app.add_subcommand(
      "census", "bounded twisted conjugacy census on a free group");
  census->add_option("--rank", f.rank, "free rank, at most 3")->required();
  census->add_option("--image", f.images,
                     "image word of the next basis generator (x, y, z)")
      ->required();
  census->add_option("--max-len", f.maxLen, "census all words up to here")
      ->required();
  census->add_option("--max-witness", f.maxWitness,
                     "witness length bound")
      ->required();
  census->fallthrough();

  try {
    app.parse(argc, argv);
    if (present->parsed()) return runPresent(f);
    if (verify->parsed()) return runGoldbergVerify(f);
    if (classify->parsed()) return runClassify(f);
    if (table->parsed()) return runTable(f);
    if (reid->parsed()) return runReidemeister(f);
    if (abelianize->parsed()) return runAbelianize(f);
    if (kb->parsed()) return runKbComplete(f);
    if (enumerate->parsed()) return runEnumerate(f);
    if (census->parsed()) return runCensus(f);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const surfbraid::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
