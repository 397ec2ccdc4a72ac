#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "probgroup/pipeline.hpp"
#include "probgroup/report.hpp"
#include "probgroup/scalar.hpp"

namespace {

std::vector<int> parseMembers(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t begin = tok.find_first_not_of(" \t");
    if (begin != std::string::npos) {
      std::size_t last = tok.find_last_not_of(" \t");
      tok = tok.substr(begin, last - begin + 1);
      try {
        std::size_t used = 0;
        int value = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        out.push_back(value);
      } catch (const std::exception&) {
        throw probgroup::InputError("bad member index \"" + tok + "\"");
      }
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int emitReport(const probgroup::Report& rep, const std::string& format,
               const std::string& outPath) {
  std::string rendered = format == "structured"
                             ? probgroup::renderStructured(rep)
                             : probgroup::renderText(rep);
  if (!rendered.empty() && rendered.back() != '\n') rendered += '\n';
  if (outPath.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream f(outPath);
    if (!f) {
      std::cerr << "error: cannot write " << outPath << "\n";
      return 2;
    }
    f << rendered;
  }
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "probgroup: probability groups, character tables, dual hypergroups, "
      "and class-algebra structure constants"};
  app.require_subcommand(1);

  probgroup::RunConfig cfg;
  std::string format = "text";
  std::string outPath;
  std::string latticeText;

  app.add_option("--tol-eq", cfg.tol.eq, "tolerance for values that must agree")
      ->capture_default_str();
  app.add_option("--tol-int", cfg.tol.integer,
                 "tolerance for recognizing integers")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for the separating diagonalization")
      ->capture_default_str();
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("--out", outPath, "write the report to this file");
  app.add_option("--lattice", latticeText,
                 "comma-separated basis for certifying algebraic integers, "
                 "e.g. \"1,(1+sqrt(5))/2\"");
  app.add_option("--workers", cfg.workers, "parallel files in corpus mode")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();

  std::string file, ringFile, modularFile, dir, membersText, emitPrefix;

  CLI::App* validate =
      app.add_subcommand("validate", "check every axiom of one input file");
  validate->add_option("file", file, "input file")->required();

  CLI::App* characters = app.add_subcommand(
      "characters",
      "character table, codegrees, orthogonality, and dual constants");
  characters->add_option("file", file, "fusion, probgroup, or group file")
      ->required();

  CLI::App* burnside = app.add_subcommand(
      "burnside",
      "class sums, their structure constants by two routes, and integrality");
  burnside->add_option("file", file, "fusion or group file")->required();

  CLI::App* quotientCmd = app.add_subcommand(
      "quotient", "quotient by a subhypergroup and the duality cross-check");
  quotientCmd->add_option("file", file, "fusion, probgroup, or group file")
      ->required();
  quotientCmd->add_option(
      "--members", membersText,
      "comma-separated basis indices generating the subhypergroup; "
      "omit to list all subhypergroups");

  CLI::App* selfdual = app.add_subcommand(
      "selfdual", "match a based ring against modular data for it");
  selfdual->add_option("ring", ringFile, "fusion file")->required();
  selfdual->add_option("modular", modularFile, "modular file")->required();

  CLI::App* center =
      app.add_subcommand("center", "run the five-phase center-pair analysis");
  center->add_option("file", file, "centerpair file")->required();

  CLI::App* doubleCmd = app.add_subcommand(
      "double",
      "build the quantum double of a finite group and analyze the pair");
  doubleCmd->add_option("file", file, "group file")->required();
  doubleCmd->add_option("--emit-prefix", emitPrefix,
                        "write <prefix>.rep.fusion.json, "
                        "<prefix>.double.modular.json, and "
                        "<prefix>.double.centerpair.json");

  CLI::App* corpus =
      app.add_subcommand("corpus", "validate every .json file in a directory");
  corpus->add_option("dir", dir, "directory of input files")->required();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (!latticeText.empty())
      cfg.lattice = probgroup::parseLattice(latticeText, cfg.tol.integer);

    probgroup::Report rep;
    if (validate->parsed()) {
      rep = probgroup::runValidate(file, cfg);
    } else if (characters->parsed()) {
      rep = probgroup::runCharacters(file, cfg);
    } else if (burnside->parsed()) {
      rep = probgroup::runBurnside(file, cfg);
    } else if (quotientCmd->parsed()) {
      rep = probgroup::runQuotient(file, parseMembers(membersText), cfg);
    } else if (selfdual->parsed()) {
      rep = probgroup::runSelfDual(ringFile, modularFile, cfg);
    } else if (center->parsed()) {
      rep = probgroup::runCenter(file, cfg);
    } else if (doubleCmd->parsed()) {
      rep = probgroup::runDouble(file, emitPrefix, cfg);
    } else if (corpus->parsed()) {
      rep = probgroup::runCorpus(dir, cfg);
    }
    return emitReport(rep, format, outPath);
  } catch (const probgroup::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const probgroup::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const probgroup::CheckError& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
