// cli/cli.cc

// Copyright 2026  The Kahako Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "cli/cli.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "base/errors.h"
#include "base/log.h"
#include "base/utf8.h"
#include "decoder/fst-decoder.h"
#include "decoder/hybrid-decoder.h"
#include "decoder/scorers.h"
#include "eval/cerr.h"
#include "eval/corpus.h"
#include "eval/fixtures.h"
#include "fst/fst-algorithms.h"
#include "lm/arpa.h"
#include "lm/ngram-fst.h"
#include "lm/ngram-model.h"
#include "ortho/alphabet.h"
#include "ortho/normalize.h"
#include "ortho/orthography-fst.h"
#include "ortho/rules.h"
#include "rnnlm/lstm-io.h"
#include "rnnlm/lstm-train.h"

namespace kahako {
namespace {

namespace fs = std::filesystem;
using Lines = std::vector<std::u32string>;
using LabelLines = std::vector<std::vector<Label>>;

std::string Fixed(double v, int digits = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

// Modern text for training: the truth column of a .tsv parallel file, or the
// lines of a corpus file or directory.
Lines ReadTrainingText(const std::string &path) {
  if (fs::path(path).extension() == ".tsv") {
    Lines out;
    for (auto &p : ReadParallelFile(path)) out.push_back(std::move(p.truth));
    return out;
  }
  return ReadCorpus(path);
}

// One normalized line per input line, blank lines included.
Lines ReadInputLines(const std::string &path) {
  std::ifstream file;
  std::istream *is = &std::cin;
  if (path != "-") {
    file.open(path, std::ios::binary);
    if (!file) throw IoError("cannot open " + path);
    is = &file;
  }
  Lines lines;
  std::string line;
  while (std::getline(*is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(Normalize(line));
  }
  return lines;
}

void WriteOutput(const std::string &path, const std::string &content) {
  if (path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open " + path + " for writing");
  os << content;
  if (!os) throw IoError("error writing " + path);
}

LabelLines MapLines(const SymbolTable &syms, const Lines &lines) {
  LabelLines out;
  out.reserve(lines.size());
  for (const auto &l : lines) out.push_back(syms.MapText(l));
  return out;
}

std::string SymsPathFor(const std::string &model_path) {
  return fs::path(model_path).replace_extension(".syms").string();
}

std::shared_ptr<const SymbolTable> LoadSyms(const std::string &path) {
  return std::make_shared<const SymbolTable>(SymbolTable::ReadFile(path));
}

// --rules: "c", "c_wb", or a rule file added on top of C (C_wb with
// --word-boundary).
Wfst BuildRules(const std::string &spec, bool word_boundary, double penalty,
                std::shared_ptr<const SymbolTable> syms) {
  OrthographyFstOptions opts;
  opts.insertion_penalty = penalty;
  if (spec == "c") return BuildOrthographyFst(syms, opts);
  if (spec == "c_wb") return BuildWordBoundaryFst(syms, opts);
  opts.extra_rules = ReadRuleSetFile(spec);
  return word_boundary ? BuildWordBoundaryFst(syms, opts)
                       : BuildOrthographyFst(syms, opts);
}

// Runs f(i) for i in [0, n) on `jobs` threads; f must write only to slot i.
template <class F>
void ParallelFor(size_t n, int jobs, F f) {
  const size_t threads = std::max<size_t>(1, std::min<size_t>(jobs, n));
  if (threads <= 1) {
    for (size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (size_t i = t; i < n; i += threads) f(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto &th : pool) th.join();
  for (auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

struct Common {
  uint64_t seed = 1;
  bool quiet = false;
};

// ---- normalize ----
struct NormalizeArgs {
  std::string in = "-", out = "-";
  bool backward = false;
};

void RunNormalize(const NormalizeArgs &a) {
  std::string out;
  for (const auto &line : ReadInputLines(a.in)) {
    out += EncodeUtf8(a.backward ? BackwardMap(line) : line);
    out += '\n';
  }
  WriteOutput(a.out, out);
}

// ---- simulate ----
struct SimulateArgs {
  std::string corpus;
  std::string out_dir;
  double train = 0.8, valid = 0.1, test = 0.1;
};

void RunSimulate(const SimulateArgs &a, const Common &c) {
  const Lines lines = ReadCorpus(a.corpus.empty() ? DataDir() + "/corpus" : a.corpus);
  if (lines.empty()) throw FormatError("corpus has no lines");
  const std::vector<ParallelPair> pairs = MakeSynthetic(lines);
  SplitSpec spec{a.train, a.valid, a.test, c.seed};
  const Split split = SplitLines(pairs.size(), spec);
  fs::create_directories(a.out_dir);
  const std::span<const ParallelPair> all(pairs);
  WriteParallelFile(Select(all, std::span<const size_t>(split.train)),
                    a.out_dir + "/train.tsv");
  WriteParallelFile(Select(all, std::span<const size_t>(split.valid)),
                    a.out_dir + "/valid.tsv");
  WriteParallelFile(Select(all, std::span<const size_t>(split.test)),
                    a.out_dir + "/test.tsv");
  LogInfo("simulate: " + std::to_string(split.train.size()) + " train, " +
          std::to_string(split.valid.size()) + " valid, " +
          std::to_string(split.test.size()) + " test pairs in " + a.out_dir);
}

// ---- train-ngram ----
struct TrainNgramArgs {
  std::string train, valid, syms, out;
  int order = 7;
  std::string smoothing = "kn";
};

void RunTrainNgram(const TrainNgramArgs &a) {
  const Lines text = ReadTrainingText(a.train);
  if (text.empty()) throw FormatError("training text is empty");
  auto syms = a.syms.empty()
                  ? std::make_shared<const SymbolTable>(MakeSymbolTable(text))
                  : LoadSyms(a.syms);
  const Smoothing smoothing = ParseSmoothing(a.smoothing);
  const NgramCounts counts = CountNgrams(MapLines(*syms, text), a.order);
  const NgramModel model = EstimateNgramModel(counts, smoothing, syms);
  WriteArpaFile(model, a.out + ".arpa");
  WriteTextFile(NgramToWfst(model), a.out + ".fst");
  syms->WriteFile(a.out + ".syms");
  LogInfo("train-ngram: order " + std::to_string(a.order) + " " +
          SmoothingName(smoothing) + ", " + std::to_string(model.nodes().size()) +
          " contexts, written to " + a.out + ".{arpa,fst,syms}");
  if (!a.valid.empty()) {
    const double ppl = Perplexity(model, MapLines(*syms, ReadTrainingText(a.valid)));
    LogInfo("train-ngram: valid_ppl=" + Fixed(ppl));
  }
}

// ---- train-rnn ----
struct TrainRnnArgs {
  std::string train, valid, syms, out;
  LstmConfig lstm;
  TrainConfig sgd;
};

void RunTrainRnn(TrainRnnArgs a, const Common &c) {
  const Lines text = ReadTrainingText(a.train);
  if (text.empty()) throw FormatError("training text is empty");
  auto syms = a.syms.empty()
                  ? std::make_shared<const SymbolTable>(MakeSymbolTable(text))
                  : LoadSyms(a.syms);
  a.lstm.vocab = static_cast<int>(syms->size());
  a.sgd.seed = c.seed;
  const LabelLines train = MapLines(*syms, text);
  LabelLines valid;
  if (!a.valid.empty()) valid = MapLines(*syms, ReadTrainingText(a.valid));
  const LstmParams params = TrainLstm(
      train, a.lstm, a.sgd, valid.empty() ? nullptr : &valid,
      [](const EpochStats &s) {
        std::string msg = "epoch=" + std::to_string(s.epoch) +
                          " train_loss=" + Fixed(s.train_loss) +
                          " train_ppl=" + Fixed(std::exp(s.train_loss)) +
                          " lr=" + Fixed(s.lr);
        if (s.valid_ppl) msg += " valid_ppl=" + Fixed(*s.valid_ppl);
        LogInfo(msg);
      });
  WriteLstmFile(params, a.out + ".lstm");
  syms->WriteFile(a.out + ".syms");
  LogInfo("train-rnn: written to " + a.out + ".{lstm,syms}");
}

// ---- build-fst ----
struct BuildFstArgs {
  std::string syms, rules = "c", out = "-";
  bool word_boundary = false;
  double penalty = 0.0;
};

void RunBuildFst(const BuildFstArgs &a) {
  auto syms = LoadSyms(a.syms);
  const Wfst fst = BuildRules(a.rules, a.word_boundary, a.penalty, syms);
  std::ostringstream os;
  WriteText(fst, os);
  WriteOutput(a.out, os.str());
}

// ---- transliterate ----
struct TransliterateArgs {
  std::string model = "fst-ngram";
  std::string lm, lstm, syms;
  std::string rules = "c";
  bool word_boundary = false;
  double penalty = 0.0;
  int beam = 64;
  bool eos = false;
  int jobs = 1;
  std::string in = "-", pairs, fixture, out = "-";
};

void RunTransliterate(const TransliterateArgs &a) {
  const bool hybrid = a.model == "hybrid";
  const std::string &model_path = hybrid ? a.lstm : a.lm;
  if (model_path.empty()) {
    throw std::invalid_argument(hybrid ? "--model hybrid needs --lstm"
                                       : "--model fst-ngram needs --lm");
  }
  if (!a.pairs.empty() && !a.fixture.empty()) {
    throw std::invalid_argument("--pairs and --fixture are exclusive");
  }
  auto syms = LoadSyms(a.syms.empty() ? SymsPathFor(model_path) : a.syms);
  const Wfst rules = BuildRules(a.rules, a.word_boundary, a.penalty, syms);

  std::vector<ParallelPair> pairs;
  const bool tsv = !a.pairs.empty() || !a.fixture.empty();
  if (!a.pairs.empty()) pairs = ReadParallelFile(a.pairs);
  if (!a.fixture.empty()) pairs = LoadFixture(a.fixture);
  Lines inputs;
  if (tsv) {
    for (const auto &p : pairs) inputs.push_back(p.input);
  } else {
    inputs = ReadInputLines(a.in);
  }

  std::vector<std::u32string> outputs(inputs.size());
  if (hybrid) {
    const LstmParams params = ReadLstmFile(a.lstm);
    if (params.config.vocab != static_cast<int>(syms->size())) {
      throw ModelMismatchError("LSTM vocabulary size " +
                               std::to_string(params.config.vocab) +
                               " does not match symbol table size " +
                               std::to_string(syms->size()));
    }
    const LstmScorer scorer(params);
    BeamConfig beam;
    beam.width = a.beam;
    beam.eos_scoring = a.eos;
    ParallelFor(inputs.size(), a.jobs, [&](size_t i) {
      outputs[i] = DecodeHybrid(inputs[i], rules, scorer, beam).text;
    });
  } else {
    const Wfst lm = NgramToWfst(ReadArpaFile(a.lm, syms));
    ParallelFor(inputs.size(), a.jobs, [&](size_t i) {
      outputs[i] = DecodeFst(inputs[i], rules, lm).text;
    });
  }

  std::ostringstream os;
  if (tsv) {
    for (size_t i = 0; i < pairs.size(); ++i) pairs[i].prediction = outputs[i];
    WriteParallel(pairs, os);
  } else {
    for (const auto &o : outputs) os << EncodeUtf8(o) << '\n';
  }
  WriteOutput(a.out, os.str());
}

// ---- perplexity ----
struct PerplexityArgs {
  std::string lm, lstm, syms, in;
};

void RunPerplexity(const PerplexityArgs &a) {
  if (a.lm.empty() == a.lstm.empty()) {
    throw std::invalid_argument("give exactly one of --lm and --lstm");
  }
  const std::string &model_path = a.lm.empty() ? a.lstm : a.lm;
  auto syms = LoadSyms(a.syms.empty() ? SymsPathFor(model_path) : a.syms);
  const LabelLines lines = MapLines(*syms, ReadTrainingText(a.in));
  double ppl;
  if (!a.lm.empty()) {
    ppl = Perplexity(ReadArpaFile(a.lm, syms), lines);
  } else {
    const LstmParams params = ReadLstmFile(a.lstm);
    if (params.config.vocab != static_cast<int>(syms->size())) {
      throw ModelMismatchError("LSTM vocabulary does not match symbol table");
    }
    ppl = Perplexity(params, lines);
  }
  WriteOutput("-", "perplexity=" + Fixed(ppl) + "\n");
}

// ---- evaluate ----
struct EvaluateArgs {
  std::string pairs, predictions, out = "-";
};

void RunEvaluate(const EvaluateArgs &a) {
  std::vector<ParallelPair> pairs = ReadParallelFile(a.pairs);
  if (!a.predictions.empty()) {
    const Lines preds = ReadInputLines(a.predictions);
    if (preds.size() != pairs.size()) {
      throw FormatError("predictions file has " + std::to_string(preds.size()) +
                        " lines but pairs file has " +
                        std::to_string(pairs.size()));
    }
    for (size_t i = 0; i < pairs.size(); ++i) pairs[i].prediction = preds[i];
  }
  WriteOutput(a.out, FormatReport(EvaluateCerr(pairs)));
}

int ExitCodeFor(const std::exception &e) {
  if (dynamic_cast<const IoError *>(&e) || dynamic_cast<const FormatError *>(&e) ||
      dynamic_cast<const EncodingError *>(&e)) {
    return kExitIo;
  }
  if (dynamic_cast<const ModelMismatchError *>(&e)) return kExitModelMismatch;
  if (dynamic_cast<const DecodeError *>(&e)) return kExitDecode;
  if (dynamic_cast<const std::invalid_argument *>(&e) ||
      dynamic_cast<const std::out_of_range *>(&e)) {
    return kExitUsage;
  }
  if (dynamic_cast<const std::filesystem::filesystem_error *>(&e)) return kExitIo;
  return kExitFailure;
}

}  // namespace

int RunCli(int argc, const char *const *argv) {
  CLI::App app{"Missionary-to-modern Hawaiian orthography transliteration"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read options from a key=value file (flags win)");
  app.allow_config_extras(CLI::config_extras_mode::error);
  Common common;
  app.add_option("--seed", common.seed, "Seed for every random choice")
      ->capture_default_str();
  app.add_flag("-q,--quiet", common.quiet, "Only log warnings");

  NormalizeArgs norm;
  auto *normalize = app.add_subcommand("normalize", "NFC-normalize text lines");
  normalize->add_option("--in", norm.in, "Input file, - for stdin")->capture_default_str();
  normalize->add_option("--out", norm.out, "Output file, - for stdout")->capture_default_str();
  normalize->add_flag("--backward", norm.backward,
                      "Also strip okina and macrons (missionary spelling)");

  SimulateArgs sim;
  auto *simulate = app.add_subcommand(
      "simulate", "Make a synthetic parallel corpus and split it");
  simulate->add_option("--corpus", sim.corpus,
                       "Modern text file or directory (default: bundled corpus)");
  simulate->add_option("--out-dir", sim.out_dir, "Directory for train/valid/test.tsv")
      ->required();
  simulate->add_option("--train", sim.train, "Train fraction")->capture_default_str();
  simulate->add_option("--valid", sim.valid, "Validation fraction")->capture_default_str();
  simulate->add_option("--test", sim.test, "Test fraction")->capture_default_str();

  TrainNgramArgs tn;
  auto *train_ngram = app.add_subcommand("train-ngram", "Train a character n-gram LM");
  train_ngram->add_option("--train", tn.train, "Text file/directory or .tsv pairs")
      ->required();
  train_ngram->add_option("--valid", tn.valid, "Held-out text for a perplexity log");
  train_ngram->add_option("--syms", tn.syms, "Existing symbol table (default: built)");
  train_ngram->add_option("--order", tn.order, "N-gram order")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  train_ngram->add_option("--smoothing", tn.smoothing, "katz, kn or kn_backoff")
      ->capture_default_str()
      ->check(CLI::IsMember({"katz", "kn", "kn_interpolated", "kn_backoff"}));
  train_ngram->add_option("--out", tn.out, "Output prefix (.arpa, .fst, .syms)")
      ->required();

  TrainRnnArgs tr;
  auto *train_rnn = app.add_subcommand("train-rnn", "Train an LSTM character LM");
  train_rnn->add_option("--train", tr.train, "Text file/directory or .tsv pairs")
      ->required();
  train_rnn->add_option("--valid", tr.valid, "Held-out text for per-epoch perplexity");
  train_rnn->add_option("--syms", tr.syms, "Existing symbol table (default: built)");
  train_rnn->add_option("--layers", tr.lstm.layers, "LSTM layers")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  train_rnn->add_option("--hidden", tr.lstm.hidden, "Units per layer")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  train_rnn->add_option("--dropout", tr.lstm.dropout, "Dropout probability")
      ->capture_default_str();
  train_rnn->add_option("--batch", tr.sgd.batch, "Parallel streams per step")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  train_rnn->add_option("--lr", tr.sgd.lr, "SGD learning rate")->capture_default_str();
  train_rnn->add_option("--tbptt", tr.sgd.tbptt, "Unroll length")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  train_rnn->add_option("--clip", tr.sgd.clip_norm,
                        "Gradient norm bound, <= 0 disables")
      ->capture_default_str();
  train_rnn->add_option("--epochs", tr.sgd.epochs, "Epochs")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  train_rnn->add_option("--anneal", tr.sgd.anneal,
                        "Divide lr by this when --valid stops improving and "
                        "keep the best epoch; 0 disables")
      ->capture_default_str();
  train_rnn->add_option("--out", tr.out, "Output prefix (.lstm, .syms)")->required();

  BuildFstArgs bf;
  auto *build_fst = app.add_subcommand("build-fst", "Write an orthography FST as text");
  build_fst->add_option("--syms", bf.syms, "Symbol table")->required();
  build_fst->add_option("--rules", bf.rules, "c, c_wb, or a rule file")
      ->capture_default_str();
  build_fst->add_flag("--word-boundary", bf.word_boundary,
                      "With a rule file, start from C_wb instead of C");
  build_fst->add_option("--insertion-penalty", bf.penalty,
                        "Cost per inserted okina or space")
      ->capture_default_str();
  build_fst->add_option("--out", bf.out, "Output file, - for stdout")->capture_default_str();

  TransliterateArgs tl;
  auto *transliterate = app.add_subcommand(
      "transliterate", "Convert missionary spelling to modern orthography");
  transliterate->add_option("--model", tl.model, "fst-ngram or hybrid")
      ->capture_default_str()
      ->check(CLI::IsMember({"fst-ngram", "hybrid"}));
  transliterate->add_option("--lm", tl.lm, "ARPA model for fst-ngram");
  transliterate->add_option("--lstm", tl.lstm, "LSTM model for hybrid");
  transliterate->add_option("--syms", tl.syms,
                            "Symbol table (default: model path with .syms)");
  transliterate->add_option("--rules", tl.rules, "c, c_wb, or a rule file")
      ->capture_default_str();
  transliterate->add_flag("--word-boundary", tl.word_boundary,
                          "With a rule file, start from C_wb instead of C");
  transliterate->add_option("--insertion-penalty", tl.penalty,
                            "Cost per inserted okina or space")
      ->capture_default_str();
  transliterate->add_option("--beam", tl.beam, "Beam width for hybrid")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  transliterate->add_flag("--eos", tl.eos, "Score end of sentence in hybrid");
  transliterate->add_option("--jobs", tl.jobs, "Sentences decoded in parallel")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  transliterate->add_option("--in", tl.in, "Input lines, - for stdin")
      ->capture_default_str();
  transliterate->add_option("--pairs", tl.pairs,
                            "Decode the input column of a .tsv parallel file");
  transliterate->add_option("--fixture", tl.fixture,
                            "Decode a bundled fixture (newspaper1, newspaper2)");
  transliterate->add_option("--out", tl.out, "Output file, - for stdout")
      ->capture_default_str();

  PerplexityArgs pp;
  auto *perplexity = app.add_subcommand("perplexity", "Per-character perplexity");
  perplexity->add_option("--lm", pp.lm, "ARPA model");
  perplexity->add_option("--lstm", pp.lstm, "LSTM model");
  perplexity->add_option("--syms", pp.syms,
                         "Symbol table (default: model path with .syms)");
  perplexity->add_option("--in", pp.in, "Text file/directory or .tsv pairs")
      ->required();

  EvaluateArgs ev;
  auto *evaluate = app.add_subcommand("evaluate", "CERR report of predictions");
  evaluate->add_option("--pairs", ev.pairs,
                       ".tsv pairs, with predictions unless --predictions")
      ->required();
  evaluate->add_option("--predictions", ev.predictions, "One prediction per line");
  evaluate->add_option("--out", ev.out, "Report file, - for stdout")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const LogLevel saved = GetLogLevel();
  if (common.quiet) SetLogLevel(LogLevel::kWarning);
  int code = kExitOk;
  try {
    if (*normalize) RunNormalize(norm);
    if (*simulate) RunSimulate(sim, common);
    if (*train_ngram) RunTrainNgram(tn);
    if (*train_rnn) RunTrainRnn(tr, common);
    if (*build_fst) RunBuildFst(bf);
    if (*transliterate) RunTransliterate(tl);
    if (*perplexity) RunPerplexity(pp);
    if (*evaluate) RunEvaluate(ev);
  } catch (const std::exception &e) {
    std::cerr << "ERROR: " << e.what() << '\n';
    code = ExitCodeFor(e);
  }
  SetLogLevel(saved);
  return code;
}

}  // namespace kahako
