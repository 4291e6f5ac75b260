// protolex: batch pipeline for corpus-induced sense inventories.
//
// Stages run one after another over TSV artifacts: feature ingestion, the
// distributional thesaurus, sense induction, hypernym labeling, sense-level
// disambiguation, linking against a reference lexical resource, typing of
// unlinked senses, a Lesk-style disambiguation benchmark, and taxonomy
// cleaning. Identical inputs, config, and seed reproduce identical bytes.

#include <iostream>
#include <string>
#include <vector>

#include "protolex/error.hpp"
#include "protolex/pipeline.hpp"

namespace {

void print_usage(std::ostream& out) {
  out << "usage: protolex <stage> [--config FILE] [--key=value ...]\n"
      << "\n"
      << "stages:\n"
      << "  ingest    corpus -> feature counts (trigram extraction or TSV pass-through)\n"
      << "  dt        feature counts -> distributional thesaurus\n"
      << "  wsi       thesaurus -> induced sense inventory\n"
      << "  label     corpus + inventory -> hypernym database + labeled inventory\n"
      << "  pcz       labeled inventory -> disambiguated entries with context clues\n"
      << "  link      pcz + resource -> sense mapping\n"
      << "  type      mapping -> types for unlinked senses\n"
      << "  wsd       dataset + resource + pcz + mapping -> decisions and scores\n"
      << "  taxonomy  pcz (+resource/mapping) -> cleaned hypernym DAG\n"
      << "  all       every stage in order (wsd only when a dataset is configured)\n"
      << "\n"
      << "options:\n"
      << "  --config FILE   load key=value configuration\n"
      << "  --key=value     override any config key (e.g. --K=200 --seed=7)\n"
      << "  --help          this message\n"
      << "\n"
      << "exit codes: 0 ok, 1 usage, 2 input error, 3 invariant violation\n";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace protolex;
  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty()) {
      throw UsageError("no stage given");
    }
    if (args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
      print_usage(std::cout);
      return 0;
    }
    const std::string stage = args[0];
    if (!known_stage(stage)) {
      throw UsageError("unknown stage '" + stage + "'");
    }

    // First pass picks up --config so later flags override file values.
    PipelineConfig config;
    for (std::size_t i = 1; i < args.size(); ++i) {
      if (args[i] == "--config") {
        if (i + 1 >= args.size()) throw UsageError("--config needs a file argument");
        config = PipelineConfig::from_file(args[++i]);
      }
    }
    for (std::size_t i = 1; i < args.size(); ++i) {
      const std::string& arg = args[i];
      if (arg == "--config") {
        ++i;
        continue;
      }
      if (arg == "--help" || arg == "-h") {
        print_usage(std::cout);
        return 0;
      }
      if (arg.rfind("--", 0) != 0) {
        throw UsageError("unexpected argument '" + arg + "'");
      }
      std::size_t eq = arg.find('=');
      if (eq == std::string::npos) {
        throw UsageError("option '" + arg + "' expects --key=value");
      }
      config.set(arg.substr(2, eq - 2), arg.substr(eq + 1));
    }

    run_stage(stage, config);
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n";
    print_usage(std::cerr);
    return 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
