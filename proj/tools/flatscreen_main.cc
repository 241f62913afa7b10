// Copyright 2026 The Flatscreen Authors.
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

// Command-line front end: corpus generation, training, tagging, decoding
// and the evaluation experiments.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "flatscreen/correction.h"
#include "flatscreen/decoder.h"
#include "flatscreen/error.h"
#include "flatscreen/fixtures.h"
#include "flatscreen/harness.h"
#include "flatscreen/lexicon.h"
#include "flatscreen/models.h"
#include "flatscreen/ngram.h"
#include "flatscreen/synthetic.h"
#include "flatscreen/tagger.h"
#include "flatscreen/text_util.h"
#include "flatscreen/training.h"
#include "flatscreen/word_graph.h"

namespace fs = std::filesystem;
using flatscreen::Error;
using Json = nlohmann::ordered_json;

namespace {

struct GlobalOptions {
  std::optional<uint64_t> seed;
  std::optional<size_t> beam;
  std::optional<long long> gap;
  std::optional<std::string> ranking;
  std::optional<std::string> knowledge;
  std::optional<size_t> threads;
  std::string config_path;
  std::string lexicon_path;
};

// Config file first, then command-line overrides.
flatscreen::ExperimentConfig ResolveConfig(const GlobalOptions &g) {
  flatscreen::ExperimentConfig config;
  if (!g.config_path.empty()) config = flatscreen::LoadExperimentConfig(g.config_path);
  if (g.seed) {
    config.seed = *g.seed;
    config.training.seed = *g.seed;
  }
  if (g.beam) config.decoder.beam_width = *g.beam;
  if (g.gap) config.decoder.gap = *g.gap;
  if (g.ranking) {
    auto mode = flatscreen::RankingFromName(*g.ranking);
    if (!mode) throw Error("unknown ranking mode '" + *g.ranking + "' (normalized, raw)");
    config.decoder.ranking = *mode;
  }
  if (g.knowledge) {
    auto mode = flatscreen::KnowledgeFromName(*g.knowledge);
    if (!mode) {
      throw Error("unknown knowledge mode '" + *g.knowledge + "' (acoustic, acoustic_syn, full)");
    }
    config.decoder.knowledge = *mode;
  }
  if (g.threads) config.threads = *g.threads;
  config.decoder.threads = config.threads;
  config.Validate();
  return config;
}

flatscreen::Lexicon ResolveLexicon(const GlobalOptions &g) {
  if (g.lexicon_path.empty()) return flatscreen::MeetingLexicon();
  return flatscreen::LoadLexicon(g.lexicon_path);
}

void Emit(const std::string &text, const std::string &out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    flatscreen::WriteFile(out_path, text);
  }
}

std::vector<std::string> ReadLines(const std::string &path) {
  std::string text;
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    text = flatscreen::ReadFile(path);
  }
  std::vector<std::string> lines;
  for (auto line : flatscreen::Split(text, '\n')) {
    line = flatscreen::Trim(line);
    if (!line.empty() && line.front() != '#') lines.emplace_back(line);
  }
  return lines;
}

// Models from a directory, or trained from scratch on the experiment corpus.
flatscreen::Models ObtainModels(const std::string &dir,
                                const flatscreen::ExperimentConfig &config,
                                const flatscreen::Lexicon &lexicon) {
  if (!dir.empty()) return flatscreen::Models::Load(dir);
  std::cerr << "flatscreen: no --models given, training on the experiment corpus\n";
  return flatscreen::PrepareExperiment(config, lexicon).models;
}

int RunGen(const GlobalOptions &g, size_t utterances, size_t repeats, bool no_fixtures,
           const std::string &out, const std::string &lattice_dir, size_t lattice_count) {
  auto config = ResolveConfig(g);
  const auto lexicon = ResolveLexicon(g);
  const auto corpus =
      no_fixtures
          ? flatscreen::GenerateSynthetic(config.grammar, utterances, config.seed)
          : flatscreen::BuildExperimentCorpus(config.grammar, utterances, config.seed, repeats);
  Emit(flatscreen::FormatCorpus(corpus), out);
  if (!lattice_dir.empty()) {
    fs::create_directories(lattice_dir);
    const auto graphs = flatscreen::BuildLattices(corpus, config.grammar.noise, lexicon,
                                                  lattice_count, config.grammar.noise.seed);
    std::string gold = "# lattice\tgold hypothesis indices\n";
    for (size_t i = 0; i < graphs.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "lattice-%04zu.wg", i);
      flatscreen::SaveWordGraph(graphs[i].graph, fs::path(lattice_dir) / name);
      gold += name;
      gold += '\t';
      for (size_t k = 0; k < graphs[i].gold_path.size(); ++k) {
        if (k) gold += ' ';
        gold += std::to_string(graphs[i].gold_path[k]);
      }
      gold += '\n';
    }
    flatscreen::WriteFile(fs::path(lattice_dir) / "gold.tsv", gold);
  }
  return 0;
}

int RunTrain(const GlobalOptions &g, const std::string &corpus_path, const std::string &out,
             const std::string &loss_path) {
  auto config = ResolveConfig(g);
  const auto lexicon = ResolveLexicon(g);
  const auto corpus =
      corpus_path.empty()
          ? flatscreen::BuildExperimentCorpus(config.grammar, config.utterances, config.seed,
                                              config.fixture_repeats)
          : flatscreen::LoadCorpus(corpus_path);
  const auto sets = flatscreen::DeriveTrainingSets(corpus.Subset(flatscreen::SplitKind::kTrain),
                                                   lexicon, {config.unknown_rate, true, config.seed});
  auto result = flatscreen::TrainModels(sets, {config.training, config.threads});
  result.models.Save(out);
  if (!loss_path.empty()) {
    std::string table = "epoch";
    for (auto id : flatscreen::kAllNets) table += "\t" + std::string(flatscreen::NetName(id));
    table += "\n";
    for (int e = 0; e < config.training.epochs; ++e) {
      table += std::to_string(e + 1);
      for (const auto &history : result.loss_history) {
        table += "\t" + flatscreen::FormatDouble(history.at(static_cast<size_t>(e)));
      }
      table += "\n";
    }
    flatscreen::WriteFile(loss_path, table);
  }
  return 0;
}

int RunTag(const GlobalOptions &g, const std::string &models_dir, const std::string &input,
           const std::vector<std::string> &words, bool no_corrections, const std::string &out) {
  auto config = ResolveConfig(g);
  const auto lexicon = ResolveLexicon(g);
  std::vector<std::vector<std::string>> transcripts;
  if (!words.empty()) {
    transcripts.push_back(words);
  } else {
    for (const auto &line : ReadLines(input)) {
      transcripts.push_back(flatscreen::SplitWhitespace(line));
    }
  }
  if (transcripts.empty()) throw Error("no transcript to tag");
  const auto models = ObtainModels(models_dir, config, lexicon);
  Json result = Json::array();
  for (const auto &transcript : transcripts) {
    auto annotations = flatscreen::TagSequence(lexicon, models, transcript);
    Json entry;
    entry["words"] = transcript;
    if (no_corrections) {
      entry["annotations"] = Json::parse(flatscreen::AnnotationsToJson(annotations));
    } else {
      auto corrected = flatscreen::ApplyCorrections(std::move(annotations), lexicon, models);
      entry["annotations"] = Json::parse(flatscreen::AnnotationsToJson(corrected.annotations));
      entry["repairs"] = Json::parse(flatscreen::RepairsToJson(corrected.repairs));
    }
    result.push_back(std::move(entry));
  }
  Emit(result.dump(2) + "\n", out);
  return 0;
}

int RunDecode(const GlobalOptions &g, const std::string &graph_path,
              const std::string &models_dir, bool trace, bool no_corrections,
              const std::string &out) {
  auto config = ResolveConfig(g);
  const auto lexicon = ResolveLexicon(g);
  const auto graph = graph_path == "example"
                         ? flatscreen::ParseWordGraph(flatscreen::ExampleWordGraphText(), "example")
                         : flatscreen::LoadWordGraph(graph_path);
  const auto models = ObtainModels(models_dir, config, lexicon);
  flatscreen::DecoderConfig decoder = config.decoder;
  decoder.record_trace = trace;
  decoder.apply_corrections = !no_corrections;
  const auto result = flatscreen::Decode(graph, lexicon, models, decoder);
  Emit(flatscreen::DecodeResultToJson(result, graph, decoder.ranking, trace), out);
  return result.complete() ? 0 : 3;
}

int RunEval(const GlobalOptions &g, const std::string &out) {
  auto config = ResolveConfig(g);
  const auto lexicon = ResolveLexicon(g);
  const auto experiment = flatscreen::PrepareExperiment(config, lexicon);
  Emit(flatscreen::Evaluate(experiment, config, lexicon).ToJson(), out);
  return 0;
}

int RunAblate(const GlobalOptions &g, const std::string &models_dir,
              const std::string &corpus_path, std::vector<double> fractions,
              std::vector<uint64_t> seeds, const std::string &out) {
  auto config = ResolveConfig(g);
  const auto lexicon = ResolveLexicon(g);
  if (!fractions.empty()) config.ablation_fractions = fractions;
  if (!seeds.empty()) config.ablation_seeds = seeds;
  config.Validate();
  flatscreen::AnnotatedCorpus corpus;
  flatscreen::Models models;
  if (models_dir.empty()) {
    auto experiment = flatscreen::PrepareExperiment(config, lexicon);
    models = std::move(experiment.models);
    corpus = corpus_path.empty() ? std::move(experiment.test)
                                 : flatscreen::LoadCorpus(corpus_path);
  } else {
    if (corpus_path.empty()) throw Error("ablate with --models also needs --corpus");
    models = flatscreen::Models::Load(models_dir);
    corpus = flatscreen::LoadCorpus(corpus_path);
  }
  const auto rows = flatscreen::AblationExperiment(corpus, lexicon, models,
                                                   config.ablation_fractions,
                                                   config.ablation_seeds, config.threads);
  std::string table = "fraction\tseed\tremoved\tphrases\tsyn\tsem\tsyn_drop\tsem_drop\n";
  for (const auto &r : rows) {
    table += flatscreen::FormatDouble(r.fraction) + "\t" + std::to_string(r.seed) + "\t" +
             std::to_string(r.removed) + "\t" + std::to_string(r.score.phrases) + "\t" +
             flatscreen::FormatDouble(r.score.syn()) + "\t" +
             flatscreen::FormatDouble(r.score.sem()) + "\t" +
             flatscreen::FormatDouble(r.syn_drop) + "\t" +
             flatscreen::FormatDouble(r.sem_drop) + "\n";
  }
  Emit(table, out);
  return 0;
}

int RunNgramCompare(const GlobalOptions &g, const std::string &axis_name, bool timing,
                    const std::string &out) {
  auto config = ResolveConfig(g);
  const auto lexicon = ResolveLexicon(g);
  const auto axis = flatscreen::AxisFromName(axis_name);
  if (!axis || (*axis != flatscreen::Axis::kBasicSyn && *axis != flatscreen::Axis::kBasicSem)) {
    throw Error("ngram-compare axis must be a basic axis");
  }
  const auto experiment = flatscreen::PrepareExperiment(config, lexicon);
  const auto &held_out =
      experiment.test.UtteranceCount() > 0 ? experiment.test : experiment.train;
  const auto reports = flatscreen::SrnVsNgramReport(experiment.train, held_out,
                                                    experiment.models, config.threads);
  const auto &report = reports[*axis == flatscreen::Axis::kBasicSyn ? 0 : 1];
  std::string text = flatscreen::FormatCurves(report.names, report.curves);
  text += "mean";
  for (const auto &curve : report.curves) text += "\t" + flatscreen::FormatDouble(curve.Mean());
  text += "\n";
  Emit(text, out);
  if (timing) {
    const auto net = *axis == flatscreen::Axis::kBasicSyn ? flatscreen::NetId::kBasSynPre
                                                          : flatscreen::NetId::kBasSemPre;
    std::cerr << "forward step: "
              << flatscreen::ForwardStepSeconds(experiment.models.net(net), 100000) << " s\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Flat syntactic/semantic analysis of spoken-language word graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--seed", g.seed, "Experiment seed");
  app.add_option("--beam", g.beam, "Decoder beam width")->check(CLI::PositiveNumber);
  app.add_option("--gap", g.gap, "Connection tolerance in centiseconds")
      ->check(CLI::PositiveNumber);
  app.add_option("--ranking", g.ranking, "normalized or raw");
  app.add_option("--knowledge", g.knowledge, "acoustic, acoustic_syn or full");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--config", g.config_path, "Experiment config JSON")->check(CLI::ExistingFile);
  app.add_option("--lexicon", g.lexicon_path, "Lexicon file (default: built-in)")
      ->check(CLI::ExistingFile);

  std::string out;
  auto add_out = [&out](CLI::App *cmd) { cmd->add_option("-o,--out", out, "Output file"); };

  auto *gen = app.add_subcommand("gen", "Write a synthetic annotated corpus and lattices");
  size_t gen_utterances = 400, gen_repeats = 3, lattice_count = 60;
  bool no_fixtures = false;
  std::string lattice_dir;
  gen->add_option("-n,--utterances", gen_utterances, "Synthetic utterances");
  gen->add_option("--fixture-repeats", gen_repeats, "Copies of the fixture utterances");
  gen->add_flag("--no-fixtures", no_fixtures, "Synthetic utterances only");
  gen->add_option("--lattices", lattice_dir, "Directory for word graphs of the utterances");
  gen->add_option("--count", lattice_count, "Number of word graphs");
  add_out(gen);

  auto *train = app.add_subcommand("train", "Train every network and save one file per net");
  std::string train_corpus, train_loss;
  std::string train_dir;
  train->add_option("--corpus", train_corpus, "Annotated corpus (default: experiment corpus)")
      ->check(CLI::ExistingFile);
  train->add_option("-o,--out", train_dir, "Model directory")->required();
  train->add_option("--loss", train_loss, "Write per-epoch losses as TSV");

  std::string models_dir;
  auto *tag = app.add_subcommand("tag", "Tag transcripts, one per input line");
  std::string tag_input;
  std::vector<std::string> tag_words;
  bool no_corrections = false;
  tag->add_option("--models", models_dir, "Model directory")->check(CLI::ExistingDirectory);
  tag->add_option("-i,--input", tag_input, "Transcript file (default: stdin)");
  tag->add_option("words", tag_words, "A single transcript given inline");
  tag->add_flag("--no-corrections", no_corrections, "Skip repair detection");
  add_out(tag);

  auto *decode = app.add_subcommand("decode", "Rank annotated word sequences of a word graph");
  std::string graph_path;
  bool trace = false;
  decode->add_option("graph", graph_path, "Word graph file, or 'example'")->required();
  decode->add_option("--models", models_dir, "Model directory")->check(CLI::ExistingDirectory);
  decode->add_flag("--trace", trace, "Include per-step beam snapshots");
  decode->add_flag("--no-corrections", no_corrections, "Skip repair detection");
  add_out(decode);

  auto *eval = app.add_subcommand("eval", "Run every experiment and print the JSON report");
  add_out(eval);

  auto *ablate = app.add_subcommand("ablate", "Flat accuracy under lexicon ablation");
  std::string ablate_corpus;
  std::vector<double> fractions;
  std::vector<uint64_t> ablation_seeds;
  ablate->add_option("--models", models_dir, "Model directory")->check(CLI::ExistingDirectory);
  ablate->add_option("--corpus", ablate_corpus, "Evaluation corpus")->check(CLI::ExistingFile);
  ablate->add_option("--fractions", fractions, "Ablated fractions")->delimiter(',');
  ablate->add_option("--ablation-seeds", ablation_seeds, "Ablation seeds")->delimiter(',');
  add_out(ablate);

  auto *compare = app.add_subcommand("ngram-compare", "Exclusion curves of SRN and n-grams");
  std::string axis_name = "bsyn";
  bool timing = false;
  compare->add_option("--axis", axis_name, "bsyn or bsem");
  compare->add_flag("--timing", timing, "Report forward-step latency on stderr");
  add_out(compare);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return RunGen(g, gen_utterances, gen_repeats, no_fixtures, out, lattice_dir,
                            lattice_count);
    if (*train) return RunTrain(g, train_corpus, train_dir, train_loss);
    if (*tag) return RunTag(g, models_dir, tag_input, tag_words, no_corrections, out);
    if (*decode) return RunDecode(g, graph_path, models_dir, trace, no_corrections, out);
    if (*eval) return RunEval(g, out);
    if (*ablate) return RunAblate(g, models_dir, ablate_corpus, fractions, ablation_seeds, out);
    if (*compare) return RunNgramCompare(g, axis_name, timing, out);
  } catch (const std::exception &e) {
    std::cerr << "flatscreen: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
