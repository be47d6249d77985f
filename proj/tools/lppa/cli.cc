// Copyright 2026 The LPPA Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "app_config.h"
#include "json.hpp"
#include "lppa/annotator.h"
#include "lppa/chat.h"
#include "lppa/cost.h"
#include "lppa/deid.h"
#include "lppa/errors.h"
#include "lppa/eval.h"
#include "lppa/mock_transport.h"
#include "lppa/note.h"
#include "lppa/prompts.h"
#include "lppa/rule_tagger.h"
#include "lppa/synth.h"
#include "lppa/synthqual.h"

namespace lppa::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

// Semantic usage problems found after flag parsing (exit 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flags shared by every subcommand. CLI11 lets them appear before or after
// the subcommand name.
struct Common {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string endpoint;
  std::string model;
  std::optional<int> concurrency;
};

// Writes to `path`, or to `out` when path is empty or "-".
void WriteTo(const std::string& path, std::ostream& out,
             const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(out);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write " + path);
  body(file);
  file.flush();
  if (!file) throw IoError("write failed: " + path);
}

std::vector<std::string> ReadScript(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open transport script: " + path.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_array()) {
    throw ParseError("transport script must be a JSON array of strings");
  }
  std::vector<std::string> replies;
  for (const auto& r : j) {
    if (!r.is_string()) {
      throw SchemaError("transport script entries must be strings");
    }
    replies.push_back(r.get<std::string>());
  }
  return replies;
}

std::unique_ptr<ChatTransport> MakeTransport(const AppConfig& config) {
  const std::string& e = config.endpoint;
  if (e == "mock") {
    return std::make_unique<SyntheticTransport>(
        LoadRuleset(config.patterns, config.dictionaries));
  }
  if (e.rfind("script:", 0) == 0) {
    return std::make_unique<ScriptedTransport>(ReadScript(e.substr(7)),
                                               /*cycle=*/true);
  }
  if (e.rfind("http://", 0) == 0 || e.rfind("https://", 0) == 0) {
    EndpointConfig endpoint;
    endpoint.base_url = e;
    endpoint.model = config.model;
    endpoint.api_key = ApiKeyFromEnvironment();
    endpoint.timeout = config.timeout;
    return std::make_unique<HttpTransport>(std::move(endpoint));
  }
  throw UsageError("unknown endpoint '" + e +
                   "' (expected mock, script:<file> or an http(s) URL)");
}

Sleeper SleeperFor(const AppConfig& config) {
  // Local transports answer instantly; waiting between their retries only
  // slows tests down.
  if (config.endpoint.rfind("http", 0) == 0) return RealSleeper();
  return [](std::chrono::milliseconds) {};
}

const PhiDictionary& RequirePhi(const NoteRecord& note) {
  if (!note.phi) throw MissingGold(note.id);
  return *note.phi;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  std::string mode;
  std::size_t count = 0;
  std::string records;
  std::string exemplars;
  bool with_email = false;
  bool rotate = false;
  std::string id_prefix;
  std::string out;
};

int RunGenerate(const GenerateArgs& a, const AppConfig& config,
                std::ostream& out, std::ostream& err) {
  GenerationConfig g;
  g.mode = a.mode == "spi" ? GenerationMode::kSpi : GenerationMode::kAeg;
  g.count = a.count;
  g.master_seed = config.seed;
  g.with_email = a.with_email;
  g.rotate_exemplars = a.rotate;
  g.id_prefix = a.id_prefix;
  g.model = config.model;
  fs::path exemplar_dir = !a.exemplars.empty()            ? fs::path(a.exemplars)
                          : g.mode == GenerationMode::kSpi ? config.spi_exemplars
                                                           : config.aeg_exemplars;
  g.exemplars = LoadExemplars(exemplar_dir);

  std::optional<IdentityPools> pools;
  if (g.mode == GenerationMode::kSpi) {
    if (a.records.empty()) throw UsageError("--mode spi requires --records");
    g.records = ReadRecordsFile(a.records);
    if (g.records.empty()) throw EmptyPool("no records in " + a.records);
    if (g.exemplars.empty()) {
      throw EmptyPool("no exemplars in " + exemplar_dir.string());
    }
    pools = LoadIdentityPools(config.pools);
  }

  std::unique_ptr<ChatTransport> transport = MakeTransport(config);
  std::vector<GenerationOutcome> outcomes =
      GenerateCorpus(g, pools ? &*pools : nullptr, *transport, config.retry,
                     SleeperFor(config), config.concurrency);

  Corpus corpus;
  std::size_t failed = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    GenerationOutcome& o = outcomes[i];
    if (!o.note) {
      ++failed;
      err << "error: note " << i << ": " << o.error << "\n";
      continue;
    }
    for (const std::string& w : o.warnings) {
      err << "warning: " << o.note->id << ": " << w << "\n";
    }
    corpus.push_back(std::move(*o.note));
  }
  WriteTo(a.out, out, [&](std::ostream& s) { WriteCorpus(s, corpus); });
  err << "generated " << corpus.size() << " of " << a.count << " notes\n";
  return failed == 0 ? kExitOk : kExitFailure;
}

// --------------------------------------------------------------------- mix

struct MixArgs {
  std::string a;
  std::string b;
  std::string out;
};

int RunMix(const MixArgs& a, const AppConfig& config, std::ostream& out) {
  Corpus mixed =
      MixCorpora(ReadCorpusFile(a.a), ReadCorpusFile(a.b), config.seed);
  WriteTo(a.out, out, [&](std::ostream& s) { WriteCorpus(s, mixed); });
  return kExitOk;
}

// --------------------------------------------------------------------- tag

struct TagArgs {
  std::string in;
  std::string out;
};

int RunTag(const TagArgs& a, const AppConfig& config, std::ostream& out) {
  Ruleset rules = LoadRuleset(config.patterns, config.dictionaries);
  Corpus corpus = ReadCorpusFile(a.in);
  for (NoteRecord& note : corpus) note.phi = TagNote(note, rules);
  WriteTo(a.out, out, [&](std::ostream& s) { WriteCorpus(s, corpus); });
  return kExitOk;
}

// ---------------------------------------------------------------- annotate

struct AnnotateArgs {
  std::string in;
  std::string out;
};

int RunAnnotate(const AnnotateArgs& a, const AppConfig& config,
                std::ostream& out, std::ostream& err) {
  Corpus corpus = ReadCorpusFile(a.in);
  AuditingTransport audited(MakeTransport(config), &err);
  Annotator annotator(audited, config.retry, config.model,
                      SleeperFor(config));
  std::vector<AnnotationOutcome> outcomes =
      AnnotateCorpus(corpus, annotator, config.concurrency);

  Corpus annotated;
  std::size_t failed = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (!outcomes[i].ok()) {
      ++failed;
      err << "error: " << outcomes[i].id << ": " << outcomes[i].error << "\n";
      continue;
    }
    NoteRecord note = corpus[i];
    note.phi = outcomes[i].annotation->phi;
    for (const std::string& r : outcomes[i].annotation->repairs) {
      err << "repair: " << note.id << ": " << r << "\n";
    }
    annotated.push_back(std::move(note));
  }
  WriteTo(a.out, out, [&](std::ostream& s) { WriteCorpus(s, annotated); });
  return failed == 0 ? kExitOk : kExitFailure;
}

// -------------------------------------------------------------------- deid

struct DeidArgs {
  std::string in;
  std::string out;
  std::string label_format;
  bool verify = false;
};

int RunDeid(const DeidArgs& a, AppConfig config, std::ostream& out,
            std::ostream& err) {
  if (!a.label_format.empty()) config.deid.label_format = a.label_format;
  try {
    config.deid.Validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Corpus corpus = ReadCorpusFile(a.in);
  for (const NoteRecord& note : corpus) RequirePhi(note);

  std::size_t leaks = 0;
  std::ostringstream lines;
  for (const NoteRecord& note : corpus) {
    DeidentifiedNote d = Deidentify(note.text, *note.phi, config.deid);
    ordered_json j;
    j["id"] = note.id;
    j["text"] = d.text;
    ordered_json reps = ordered_json::array();
    for (const Replacement& r : d.replacements) {
      reps.push_back({{"type", EntityTypeName(r.type)},
                      {"original", r.original},
                      {"start", r.start},
                      {"end", r.end}});
    }
    j["replacements"] = std::move(reps);
    ordered_json res = ordered_json::array();
    for (const Residual& r : d.residuals) {
      res.push_back({{"type", EntityTypeName(r.type)}, {"mention", r.mention}});
    }
    j["residuals"] = std::move(res);
    lines << j.dump(-1, ' ', false, json::error_handler_t::replace) << "\n";

    if (a.verify) {
      for (const LeakFinding& f : VerifyClean(d, *note.phi, config.deid)) {
        ++leaks;
        err << "leak: " << note.id << ": " << EntityTypeName(f.type);
        if (f.position) {
          err << " at byte " << *f.position;
        } else {
          err << " (not found in note)";
        }
        err << "\n";
      }
    }
  }
  WriteTo(a.out, out, [&](std::ostream& s) { s << lines.str(); });
  return leaks == 0 ? kExitOk : kExitFailure;
}

// -------------------------------------------------------------------- eval

struct EvalArgs {
  std::string gold;
  std::vector<std::string> preds;
  std::string baseline;
  std::string json_out;
};

int RunEval(const EvalArgs& a, const AppConfig& config, std::ostream& out) {
  Corpus gold = ReadCorpusFile(a.gold);
  if (gold.empty()) throw EmptyCorpus("gold corpus is empty: " + a.gold);
  for (const NoteRecord& note : gold) RequirePhi(note);

  std::vector<NamedReport> reports;
  for (const std::string& spec : a.preds) {
    std::string name;
    std::string path = spec;
    if (auto eq = spec.find('='); eq != std::string::npos) {
      name = spec.substr(0, eq);
      path = spec.substr(eq + 1);
    } else {
      name = fs::path(spec).stem().string();
    }
    for (const NamedReport& r : reports) {
      if (r.name == name) throw UsageError("duplicate system name: " + name);
    }
    std::map<std::string, const NoteRecord*> by_id;
    Corpus pred = ReadCorpusFile(path);
    for (const NoteRecord& note : pred) by_id[note.id] = &note;

    std::vector<GoldPredPair> pairs;
    pairs.reserve(gold.size());
    for (const NoteRecord& g : gold) {
      auto it = by_id.find(g.id);
      if (it == by_id.end()) {
        throw SchemaError(name + ": no prediction for note " + g.id);
      }
      if (!it->second->phi) {
        throw SchemaError(name + ": prediction has no PHI for note " + g.id);
      }
      pairs.emplace_back(*g.phi, *it->second->phi);
    }
    reports.push_back({name, ScoreCorpus(pairs, config.normalization)});
  }

  const std::string baseline =
      a.baseline.empty() ? reports.front().name : a.baseline;
  std::string table = RenderReport(reports, baseline);
  out << table;
  if (!a.json_out.empty()) {
    ordered_json all = ordered_json::object();
    for (const NamedReport& r : reports) {
      all[r.name] = ordered_json::parse(ReportToJson(r.report));
    }
    WriteTo(a.json_out, out, [&](std::ostream& s) { s << all.dump(2) << "\n"; });
  }
  return kExitOk;
}

// --------------------------------------------------------------- synthqual

struct SynthqualArgs {
  std::string in;
  std::string reference;
  std::string ontology;
  int order = NGramLM::kDefaultOrder;
  double k = NGramLM::kDefaultK;
  int bleu_order = kDefaultBleuOrder;
  std::string out;
};

std::vector<std::string> Texts(const Corpus& corpus) {
  std::vector<std::string> texts;
  texts.reserve(corpus.size());
  for (const NoteRecord& note : corpus) texts.push_back(note.text);
  return texts;
}

int RunSynthqual(const SynthqualArgs& a, const AppConfig& config,
                 std::ostream& out) {
  std::vector<std::string> notes = Texts(ReadCorpusFile(a.in));
  std::vector<std::string> reference =
      a.reference.empty() ? notes : Texts(ReadCorpusFile(a.reference));
  std::vector<Tokens> reference_tokens = TokenizeAll(reference);
  NGramPerplexity scorer(NGramLM::Train(reference_tokens, a.order, a.k));
  Ontology ontology =
      LoadOntology(a.ontology.empty() ? config.ontology.string() : a.ontology);
  QualityOptions options;
  options.bleu_order = a.bleu_order;
  options.parallelism = config.concurrency;
  QualityReport report = EvaluateQuality(notes, scorer, ontology, options);
  WriteTo(a.out, out,
          [&](std::ostream& s) { s << QualityReportToJson(report) << "\n"; });
  return kExitOk;
}

// ------------------------------------------------------------ export-train

struct ExportArgs {
  std::string in;
  std::string out;
};

int RunExport(const ExportArgs& a, std::ostream& out, std::ostream& err) {
  Corpus corpus = ReadCorpusFile(a.in);
  // Validate before opening the output so a bad corpus leaves no file.
  for (const NoteRecord& note : corpus) RequirePhi(note);
  std::size_t written = 0;
  WriteTo(a.out, out,
          [&](std::ostream& s) { written = ExportTrainingSet(corpus, s); });
  err << "exported " << written << " training examples\n";
  return kExitOk;
}

// -------------------------------------------------------------------- cost

struct CostArgs {
  std::optional<std::uint64_t> calls;
  std::optional<std::uint64_t> avg_in;
  std::optional<std::uint64_t> avg_out;
  std::string in;
  std::string pricing;
  std::string out;
};

int RunCost(const CostArgs& a, const AppConfig& config, std::ostream& out) {
  std::uint64_t calls = a.calls.value_or(0);
  std::uint64_t avg_in = a.avg_in.value_or(0);
  std::uint64_t avg_out = a.avg_out.value_or(0);
  if (!a.in.empty()) {
    // Averages measured from annotation requests over an existing corpus.
    Corpus corpus = ReadCorpusFile(a.in);
    if (corpus.empty()) throw EmptyCorpus("corpus is empty: " + a.in);
    std::uint64_t in_sum = 0;
    std::uint64_t out_sum = 0;
    for (const NoteRecord& note : corpus) {
      ChatRequest req = BuildTaskPrompt(note.text);
      in_sum += EstimateTokens(req.system) + EstimateTokens(req.user);
      if (note.phi) out_sum += EstimateTokens(SerializePhiDictionary(*note.phi));
    }
    const std::uint64_t n = corpus.size();
    if (!a.calls) calls = n;
    if (!a.avg_in) avg_in = (in_sum + n / 2) / n;
    if (!a.avg_out) avg_out = (out_sum + n / 2) / n;
  } else if (!a.calls || !a.avg_in || !a.avg_out) {
    throw UsageError("cost needs --calls, --avg-in and --avg-out, or --in");
  }
  std::vector<PricingConfig> table =
      LoadPricing(a.pricing.empty() ? config.pricing.string() : a.pricing);
  const std::string model = config.model.empty() ? table.front().model
                                                 : config.model;
  const PricingConfig& pricing = FindPricing(table, model);
  CostEstimate estimate = EstimateCost(calls, avg_in, avg_out, pricing);
  WriteTo(a.out, out, [&](std::ostream& s) {
    s << CostEstimateToJson(estimate, pricing) << "\n";
  });
  return kExitOk;
}

AppConfig ResolveConfig(const Common& common, const fs::path& data_dir) {
  AppConfig config = DefaultConfig(data_dir);
  if (!common.config.empty()) config = LoadConfigFile(common.config, config);
  if (common.seed) config.seed = *common.seed;
  if (!common.endpoint.empty()) config.endpoint = common.endpoint;
  if (!common.model.empty()) config.model = common.model;
  if (common.concurrency) config.concurrency = *common.concurrency;
  return config;
}

}  // namespace

int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err, const fs::path& data_dir) {
  CLI::App app{"Clinical note PHI toolkit", "lppa"};
  app.fallthrough();
  app.require_subcommand(1);

  Common common;
  app.add_option("--config", common.config, "JSON configuration file")
      ->check(CLI::ExistingFile);
  app.add_option("--seed", common.seed, "Seed for all randomness");
  app.add_option("--endpoint", common.endpoint,
                 "mock, script:<replies.json> or an http(s) base URL");
  app.add_option("--model", common.model, "Model name sent to the endpoint");
  app.add_option("--concurrency", common.concurrency,
                 "Maximum requests or workers in flight")
      ->check(CLI::PositiveNumber);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate synthetic notes");
  generate->add_option("--mode", gen.mode)
      ->required()
      ->check(CLI::IsMember({"aeg", "spi"}));
  generate->add_option("--count", gen.count)->required();
  generate->add_option("--records", gen.records, "Structured records (spi)")
      ->check(CLI::ExistingFile);
  generate->add_option("--exemplars", gen.exemplars, "Exemplar directory")
      ->check(CLI::ExistingDirectory);
  generate->add_flag("--with-email", gen.with_email);
  generate->add_flag("--rotate-exemplars", gen.rotate);
  generate->add_option("--id-prefix", gen.id_prefix);
  generate->add_option("--out", gen.out);

  MixArgs mix;
  auto* mix_cmd = app.add_subcommand("mix", "Merge and shuffle two corpora");
  mix_cmd->add_option("--a", mix.a)->required()->check(CLI::ExistingFile);
  mix_cmd->add_option("--b", mix.b)->required()->check(CLI::ExistingFile);
  mix_cmd->add_option("--out", mix.out);

  TagArgs tag;
  auto* tag_cmd = app.add_subcommand("tag", "Tag PHI with the rule tagger");
  tag_cmd->add_option("--in", tag.in)->required()->check(CLI::ExistingFile);
  tag_cmd->add_option("--out", tag.out);

  AnnotateArgs ann;
  auto* annotate = app.add_subcommand("annotate", "Annotate PHI with an LLM");
  annotate->add_option("--in", ann.in)->required()->check(CLI::ExistingFile);
  annotate->add_option("--out", ann.out);

  DeidArgs deid;
  auto* deid_cmd = app.add_subcommand("deid", "Replace PHI with type labels");
  deid_cmd->add_option("--in", deid.in)->required()->check(CLI::ExistingFile);
  deid_cmd->add_option("--out", deid.out);
  deid_cmd->add_option("--label-format", deid.label_format,
                       "Label template containing {TYPE}");
  deid_cmd->add_flag("--verify", deid.verify,
                     "Report leaks and exit 1 if any remain");

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Score predictions against gold");
  eval->add_option("--gold", ev.gold)->required()->check(CLI::ExistingFile);
  eval->add_option("--pred", ev.preds, "[name=]predictions.jsonl")
      ->required();
  eval->add_option("--baseline", ev.baseline, "System for the t-test");
  eval->add_option("--json", ev.json_out, "Write JSON reports here");

  SynthqualArgs sq;
  auto* synthqual = app.add_subcommand("synthqual", "Corpus quality metrics");
  synthqual->add_option("--in", sq.in)->required()->check(CLI::ExistingFile);
  synthqual->add_option("--reference", sq.reference,
                        "Corpus for the language model (default: --in)")
      ->check(CLI::ExistingFile);
  synthqual->add_option("--ontology", sq.ontology)->check(CLI::ExistingFile);
  synthqual->add_option("--order", sq.order)->check(CLI::PositiveNumber);
  synthqual->add_option("--k", sq.k)->check(CLI::PositiveNumber);
  synthqual->add_option("--bleu-order", sq.bleu_order)
      ->check(CLI::PositiveNumber);
  synthqual->add_option("--out", sq.out);

  ExportArgs ex;
  auto* export_cmd =
      app.add_subcommand("export-train", "Write chat-format training data");
  export_cmd->add_option("--in", ex.in)->required()->check(CLI::ExistingFile);
  export_cmd->add_option("--out", ex.out);

  CostArgs cost;
  auto* cost_cmd = app.add_subcommand("cost", "Estimate tokens and cost");
  cost_cmd->add_option("--calls", cost.calls);
  cost_cmd->add_option("--avg-in", cost.avg_in);
  cost_cmd->add_option("--avg-out", cost.avg_out);
  cost_cmd->add_option("--in", cost.in, "Measure averages from a corpus")
      ->check(CLI::ExistingFile);
  cost_cmd->add_option("--pricing", cost.pricing)->check(CLI::ExistingFile);
  cost_cmd->add_option("--out", cost.out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "lppa: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    AppConfig config = ResolveConfig(common, data_dir);
    if (generate->parsed()) return RunGenerate(gen, config, out, err);
    if (mix_cmd->parsed()) return RunMix(mix, config, out);
    if (tag_cmd->parsed()) return RunTag(tag, config, out);
    if (annotate->parsed()) return RunAnnotate(ann, config, out, err);
    if (deid_cmd->parsed()) return RunDeid(deid, config, out, err);
    if (eval->parsed()) return RunEval(ev, config, out);
    if (synthqual->parsed()) return RunSynthqual(sq, config, out);
    if (export_cmd->parsed()) return RunExport(ex, out, err);
    if (cost_cmd->parsed()) return RunCost(cost, config, out);
  } catch (const UsageError& e) {
    err << "lppa: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "lppa: error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace lppa::cli
