#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <random>
#include <string>

#include "semirep/io.hpp"
#include "semirep/verify.hpp"

namespace {

using namespace semirep;

int exitCode(const Error& e) { return e.cls() == ErrorClass::Input ? 2 : 3; }

template <class K>
int runIrreps(const Semigroup& s, const Field& f, std::uint64_t seed) {
  const GreenStructure g = greenStructure(s);
  ChopConfig cfg;
  std::mt19937_64 rng(seed);
  const auto reports = allIrreducibles<K>(s, g, f, cfg, rng);
  std::cout << irrepsReport<K>(s, f, reports).dump(2) << "\n";
  std::cerr << "irreps: " << reports.size() << " simple modules over " << f.name() << "\n";
  return 0;
}

template <class K>
int runChop(const Semigroup& s, const Field& f, std::uint64_t seed) {
  const GreenStructure g = greenStructure(s);
  ChopConfig cfg;
  std::mt19937_64 rng(seed);
  const auto res = chop<K>(regularSModule<K>(s, f), cfg, rng);
  std::cout << chopReport<K>(s, g, f, res).dump(2) << "\n";
  std::cerr << "chop: " << res.distinctSimpleCount() << " distinct simple factors over "
            << f.name() << "\n";
  return 0;
}

template <class K>
int runVerify(const Semigroup& s, const Field& f, std::uint64_t seed) {
  ChopConfig cfg;
  const auto checks = runChecks<K>(s, f, cfg, seed);
  bool anyFail = false, anyInternal = false;
  for (const auto& c : checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.pass && !c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << "\n";
    anyFail = anyFail || !c.pass;
    anyInternal = anyInternal || c.internal;
  }
  std::cout << (anyFail ? "VERDICT: fail" : "VERDICT: pass") << "\n";
  std::cerr << "verify: " << checks.size() << " checks over " << f.name()
            << (anyFail ? ", FAILURES present" : ", all passed") << "\n";
  if (anyInternal) return 3;
  return anyFail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Green's-relations analysis and irreducible representations of finite semigroups"};
  app.require_subcommand(1);

  std::string file;
  std::string fieldText = "Q";
  std::uint64_t seed = 0;
  int jclass = 0;
  std::string side = "right";

  auto* analyze = app.add_subcommand("analyze", "Green structure report");
  analyze->add_option("file", file, "semigroup description")->required();

  auto* irreps = app.add_subcommand("irreps", "all simple modules via the induced/coinduced constructions");
  irreps->add_option("file", file, "semigroup description")->required();
  irreps->add_option("--field", fieldText, "Q or Fp:<prime>");
  irreps->add_option("--seed", seed, "random seed");

  auto* schutz = app.add_subcommand("schutz", "monomial representation tables");
  schutz->add_option("file", file, "semigroup description")->required();
  schutz->add_option("--jclass", jclass, "regular J-class id")->required();
  schutz->add_option("--side", side, "right|left")->check(CLI::IsMember({"right", "left"}));

  auto* chopCmd = app.add_subcommand("chop", "composition factors of the regular module");
  chopCmd->add_option("file", file, "semigroup description")->required();
  chopCmd->add_option("--field", fieldText, "Q or Fp:<prime>");
  chopCmd->add_option("--seed", seed, "random seed");

  auto* verify = app.add_subcommand("verify", "full invariant suite; nonzero exit on failure");
  verify->add_option("file", file, "semigroup description")->required();
  verify->add_option("--field", fieldText, "Q or Fp:<prime>");
  verify->add_option("--seed", seed, "random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    const semirep::Semigroup s = semirep::parseSemigroupFile(file);

    if (analyze->parsed()) {
      const auto g = semirep::greenStructure(s);
      std::cout << semirep::analyzeReport(s, g).dump(2) << "\n";
      std::cerr << "analyze: " << s.n << " elements, " << g.jClasses.size() << " J-classes\n";
      return 0;
    }

    if (schutz->parsed()) {
      const auto g = semirep::greenStructure(s);
      const auto jd = semirep::jclassData(s, g, jclass);
      const auto rep = side == "right" ? semirep::rightSchutzenberger(s, jd)
                                       : semirep::leftSchutzenberger(s, jd);
      semirep::verifyMonomialRep(s, jd, rep);
      std::cout << semirep::schutzReport(s, rep).dump(2) << "\n";
      std::cerr << "schutz: J-class " << jclass << ", " << side << ", size " << rep.size << "\n";
      return 0;
    }

    const semirep::Field f = semirep::parseField(fieldText);
    const bool rational = f.kind == semirep::Field::Kind::Rational;
    if (irreps->parsed())
      return rational ? runIrreps<semirep::Rat>(s, f, seed) : runIrreps<semirep::Fp>(s, f, seed);
    if (chopCmd->parsed())
      return rational ? runChop<semirep::Rat>(s, f, seed) : runChop<semirep::Fp>(s, f, seed);
    if (verify->parsed())
      return rational ? runVerify<semirep::Rat>(s, f, seed) : runVerify<semirep::Fp>(s, f, seed);
  } catch (const semirep::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exitCode(e);
  }
  return 0;
}
