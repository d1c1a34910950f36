// Copyright 2026 The arabtok Authors
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

#include "arabtok/cli.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "arabtok/corpus.h"
#include "arabtok/eval.h"
#include "arabtok/file_util.h"
#include "arabtok/model.h"
#include "arabtok/morphseg.h"
#include "arabtok/normalize.h"
#include "arabtok/tokenizer.h"
#include "arabtok/trainer.h"
#include "json.hpp"

namespace arabtok::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Input problems detected by the driver itself (missing files, bad ids).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string config;
  std::string corpus;
  std::string format = "jsonl";
  std::string output;
  std::string model;
  std::string input;
  std::string text;
  std::string ids;
  std::string clitics;
  std::string normalizer;
  std::vector<std::string> disable;
  int repeat_cap = 0;
  std::string kind = "bpe";
  std::size_t vocab = 16000;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::size_t sample = 10000;
  std::string out_format = "json";
  std::string export_dir;
  std::vector<std::size_t> sizes{kDefaultVocabSizes.begin(),
                                 kDefaultVocabSizes.end()};
  std::vector<std::string> kinds{"bpe", "wordpiece", "wordlevel", "bpe_morph"};
  std::string cache_dir;
  std::string json_out;
  std::string long_out;
  std::string corpus_id;
  bool no_timing = false;
  std::uint64_t min_chars = 50;
  std::uint64_t min_words = 5;
  double min_arabic_ratio = 0.5;
  double max_mean_line_words = 0.0;
  // "normalizer" object taken from the config file, if any.
  std::optional<json> config_normalizer;
};

class Logger {
 public:
  explicit Logger(std::ostream& err) : err_(err) {}
  void operator()(const std::string& message) const {
    err_ << "[arabtok] " << message << '\n';
  }

 private:
  std::ostream& err_;
};

void RequireFile(const std::string& path, const char* what) {
  if (path.empty()) throw DataError(std::string("no ") + what + " given");
  if (path == "-") return;
  if (!fs::is_regular_file(path)) {
    throw DataError(std::string(what) + " not found: " + path);
  }
}

const std::vector<std::string>& TransformNames() {
  static const std::vector<std::string> names = {
      "strip_markup",      "replace_urls", "replace_mentions",
      "replace_emails",    "remove_tatweel", "remove_diacritics",
      "map_digits",        "collapse_repeats"};
  return names;
}

NormalizerConfig BuildNormalizer(const Options& o) {
  NormalizerConfig cfg;
  if (!o.normalizer.empty()) {
    RequireFile(o.normalizer, "normalizer config");
    cfg = json::parse(ReadFile(o.normalizer)).get<NormalizerConfig>();
  } else if (o.config_normalizer) {
    cfg = o.config_normalizer->get<NormalizerConfig>();
  }
  for (const std::string& name : o.disable) {
    const bool all = name == "all";
    if (all || name == "strip_markup") cfg.strip_markup = false;
    if (all || name == "replace_urls") cfg.replace_urls = false;
    if (all || name == "replace_mentions") cfg.replace_mentions = false;
    if (all || name == "replace_emails") cfg.replace_emails = false;
    if (all || name == "remove_tatweel") cfg.remove_tatweel = false;
    if (all || name == "remove_diacritics") cfg.remove_diacritics = false;
    if (all || name == "map_digits") cfg.map_digits = false;
    if (all || name == "collapse_repeats") cfg.collapse_repeats = false;
  }
  if (o.repeat_cap > 0) cfg.repeat_cap = o.repeat_cap;
  cfg.Validate();
  return cfg;
}

CliticTable BuildClitics(const Options& o) {
  if (o.clitics.empty()) return CliticTable::Default();
  RequireFile(o.clitics, "clitic table");
  return LoadCliticTable(o.clitics);
}

std::vector<Document> ReadCorpus(const Options& o, const Logger& log) {
  RequireFile(o.corpus, "corpus");
  LoadResult loaded = LoadDocuments(o.corpus, ParseCorpusFormat(o.format));
  log("read " + std::to_string(loaded.documents.size()) + " documents from " +
      o.corpus + (loaded.skipped ? " (" + std::to_string(loaded.skipped) +
                                       " malformed records skipped)"
                                 : std::string()));
  if (loaded.documents.empty()) throw DataError("corpus is empty: " + o.corpus);
  return std::move(loaded.documents);
}

std::vector<std::string> ReadLines(const std::string& path) {
  std::vector<std::string> lines;
  std::string line;
  if (path == "-") {
    while (std::getline(std::cin, line)) lines.push_back(line);
    return lines;
  }
  std::istringstream in(ReadFile(path));
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

// Writes `content` atomically to `path`, or to `out` when no path was given.
void Emit(const std::string& path, const std::string& content,
          std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    WriteFileAtomic(path, content);
  }
}

unsigned EffectiveThreads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

int CmdPreprocess(const Options& o, std::ostream& out, const Logger& log) {
  FilterConfig filter;
  filter.min_chars = o.min_chars;
  filter.min_words = o.min_words;
  filter.min_arabic_ratio = o.min_arabic_ratio;
  if (o.max_mean_line_words > 0.0) {
    filter.max_mean_line_words = o.max_mean_line_words;
  }
  filter.Validate();
  RequireFile(o.input, "input");
  DocumentReader reader(o.input, ParseCorpusFormat(o.format));
  FilterSummary summary;
  std::string kept;
  Document doc;
  while (reader.Next(&doc)) {
    const FilterVerdict verdict = FilterDocument(doc, filter);
    summary.Record(verdict);
    if (verdict.keep) {
      kept += DocumentToJson(doc).dump();
      kept += '\n';
    }
  }
  summary.skipped_malformed = reader.skipped();
  WriteFileAtomic(o.output, kept);
  log("kept " + std::to_string(summary.kept) + " of " +
      std::to_string(summary.read) + " documents (" +
      std::to_string(kept.size()) + " bytes)");
  json line = summary.ToJson();
  line["command"] = "preprocess";
  line["output"] = o.output;
  line["bytes"] = kept.size();
  out << line.dump() << '\n';
  return kExitOk;
}

int CmdTrain(const Options& o, std::ostream& out, const Logger& log) {
  TrainOptions options;
  options.kind = ParseKind(o.kind);
  options.vocab_size = o.vocab;
  options.normalizer = BuildNormalizer(o);
  options.clitics = BuildClitics(o);
  options.threads = EffectiveThreads(o.threads);
  const std::vector<Document> docs = ReadCorpus(o, log);
  log("training " + o.kind + " with vocabulary " + std::to_string(o.vocab));
  const auto start = std::chrono::steady_clock::now();
  TrainStats stats;
  const TokenizerModel model = Train(docs, options, &stats);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  for (const std::string& w : stats.warnings) log("warning: " + w);
  SaveModel(model, o.output);
  if (!o.export_dir.empty()) {
    fs::create_directories(o.export_dir);
    ExportVocabTxt(model, fs::path(o.export_dir) / "vocab.txt");
    if (UsesMerges(model.kind)) {
      ExportMergesTxt(model, fs::path(o.export_dir) / "merges.txt");
    }
  }
  log("trained in " + std::to_string(seconds) + " s");
  json line = {{"command", "train"},
               {"kind", KindName(model.kind)},
               {"requested_vocab", o.vocab},
               {"vocab_size", model.vocab.size()},
               {"merges", model.merges.size()},
               {"alphabet", stats.alphabet_size},
               {"warnings", stats.warnings},
               {"output", o.output}};
  out << line.dump() << '\n';
  return kExitOk;
}

std::string FormatEncoding(const Encoding& enc, const std::string& format) {
  std::string s;
  if (format == "tokens") {
    for (const std::string& t : enc.tokens) {
      if (!s.empty()) s.push_back(' ');
      s += t;
    }
  } else if (format == "ids") {
    for (TokenId id : enc.ids) {
      if (!s.empty()) s.push_back(' ');
      s += std::to_string(id);
    }
  } else {
    s = json{{"ids", enc.ids}, {"tokens", enc.tokens},
             {"word_count", enc.word_count}}
            .dump();
  }
  return s;
}

int CmdEncode(const Options& o, std::ostream& out, const Logger& log) {
  RequireFile(o.model, "model");
  if (o.text.empty() == o.input.empty()) {
    throw CLI::ValidationError("encode needs exactly one of --text or --input");
  }
  const Tokenizer tokenizer(LoadModel(o.model));
  std::vector<std::string> lines;
  if (!o.input.empty()) {
    RequireFile(o.input, "input");
    lines = ReadLines(o.input);
  } else {
    lines.push_back(o.text);
  }
  std::string result;
  std::uint64_t tokens = 0, words = 0;
  for (const std::string& line : lines) {
    const Encoding enc = tokenizer.Encode(line);
    tokens += enc.ids.size();
    words += enc.word_count;
    result += FormatEncoding(enc, o.out_format);
    result += '\n';
  }
  Emit(o.output, result, out);
  log("encoded " + std::to_string(lines.size()) + " lines, " +
      std::to_string(tokens) + " tokens for " + std::to_string(words) +
      " words");
  if (!o.output.empty()) {
    out << json{{"command", "encode"}, {"lines", lines.size()},
                {"tokens", tokens}, {"words", words}, {"output", o.output}}
               .dump()
        << '\n';
  }
  return kExitOk;
}

std::vector<TokenId> ParseIds(const std::string& line) {
  std::vector<TokenId> ids;
  std::string_view rest = line;
  while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) {
    rest.remove_prefix(1);
  }
  if (!rest.empty() && rest.front() == '{') {
    const json j = json::parse(rest);
    return j.at("ids").get<std::vector<TokenId>>();
  }
  std::istringstream in{std::string(rest)};
  std::string item;
  while (in >> item) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw DataError("not a token id: " + item);
    if (v < 0 || v > 0x7fffffff) throw DataError("token id out of range: " + item);
    ids.push_back(static_cast<TokenId>(v));
  }
  return ids;
}

int CmdDecode(const Options& o, std::ostream& out, const Logger& log) {
  RequireFile(o.model, "model");
  if (o.ids.empty() == o.input.empty()) {
    throw CLI::ValidationError("decode needs exactly one of --ids or --input");
  }
  const Tokenizer tokenizer(LoadModel(o.model));
  std::vector<std::string> lines;
  if (!o.input.empty()) {
    RequireFile(o.input, "input");
    lines = ReadLines(o.input);
  } else {
    lines.push_back(o.ids);
  }
  std::string result;
  for (const std::string& line : lines) {
    result += tokenizer.Decode(ParseIds(line));
    result += '\n';
  }
  Emit(o.output, result, out);
  log("decoded " + std::to_string(lines.size()) + " lines");
  if (!o.output.empty()) {
    out << json{{"command", "decode"}, {"lines", lines.size()},
                {"output", o.output}}
               .dump()
        << '\n';
  }
  return kExitOk;
}

int CmdEval(const Options& o, std::ostream& out, const Logger& log) {
  RequireFile(o.model, "model");
  if (o.sample == 0) throw CLI::ValidationError("--sample must be >= 1");
  const std::vector<Document> docs = ReadCorpus(o, log);
  const Tokenizer tokenizer(LoadModel(o.model));
  const CorpusMetrics m = MeasureCorpus(tokenizer, docs);
  const RoundTripReport audit = RoundTripAudit(tokenizer, docs, o.sample, o.seed);
  const MetricsRow row = MakeRow(tokenizer.model().kind, tokenizer.vocab_size(), m);
  json report = {{"kind", KindName(row.kind)},
                 {"vocab_size", row.vocab_size},
                 {"token_to_word", row.token_to_word},
                 {"unk_rate", row.unk_rate},
                 {"coverage", row.coverage},
                 {"words_per_sec", o.no_timing ? 0.0 : row.words_per_sec},
                 {"corpus_words", row.corpus_words},
                 {"roundtrip", audit.ToJson()}};
  if (!o.output.empty()) WriteFileAtomic(o.output, report.dump(2) + "\n");
  log("round trip: " + std::to_string(audit.exact) + "/" +
      std::to_string(audit.checked) + " exact");
  report.erase("roundtrip");
  report["command"] = "eval";
  report["roundtrip_checked"] = audit.checked;
  report["roundtrip_exact"] = audit.exact;
  report["roundtrip_unk_attributable"] = audit.unk_attributable;
  out << report.dump() << '\n';
  return kExitOk;
}

int CmdCompare(const Options& o, std::ostream& out, const Logger& log) {
  GridConfig grid;
  grid.kinds.clear();
  for (const std::string& k : o.kinds) grid.kinds.push_back(ParseKind(k));
  grid.sizes = o.sizes;
  grid.normalizer = BuildNormalizer(o);
  grid.clitics = BuildClitics(o);
  grid.threads = EffectiveThreads(o.threads);
  if (!o.cache_dir.empty()) grid.cache_dir = o.cache_dir;
  grid.measure_throughput = !o.no_timing;
  grid.corpus_id = o.corpus_id.empty() ? fs::path(o.corpus).filename().string()
                                       : o.corpus_id;
  grid.log = log;
  const std::vector<Document> docs = ReadCorpus(o, log);
  const auto start = std::chrono::steady_clock::now();
  const ComparisonReport report = CompareGrid(docs, grid);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  WriteFileAtomic(o.output, ReportCsv(report));
  if (!o.json_out.empty()) {
    WriteFileAtomic(o.json_out, ReportJson(report).dump(2) + "\n");
  }
  if (!o.long_out.empty()) WriteFileAtomic(o.long_out, ReportLongCsv(report));
  log("compared " + std::to_string(report.rows.size()) + " tokenizers in " +
      std::to_string(seconds) + " s");
  out << json{{"command", "compare"},
              {"rows", report.rows.size()},
              {"spread", report.spread},
              {"output", o.output}}
             .dump()
      << '\n';
  return kExitOk;
}

int CmdDumpClitics(const Options& o, std::ostream& out, const Logger& log) {
  const std::string content = json(CliticTable::Default()).dump(2) + "\n";
  Emit(o.output, content, out);
  if (!o.output.empty()) {
    log("wrote default clitic table to " + o.output);
    out << json{{"command", "dump-clitics"}, {"output", o.output}}.dump() << '\n';
  }
  return kExitOk;
}

void AddConfig(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config,
                  "JSON file of flag defaults; command-line flags win");
}

void AddCorpus(CLI::App* cmd, Options& o, bool required) {
  auto* opt = cmd->add_option("--corpus", o.corpus, "Corpus file")
                  ->envname("ARABTOK_CORPUS");
  if (required) opt->required();
  cmd->add_option("--format", o.format, "Corpus format: jsonl or plain_lines")
      ->check(CLI::IsMember({"jsonl", "plain_lines", "plain"}));
}

void AddNormalizer(CLI::App* cmd, Options& o) {
  cmd->add_option("--normalizer", o.normalizer,
                  "JSON file with a normalizer configuration");
  std::vector<std::string> names = TransformNames();
  names.push_back("all");
  cmd->add_option("--disable", o.disable,
                  "Comma-separated normalization steps to turn off")
      ->delimiter(',')
      ->check(CLI::IsMember(names));
  cmd->add_option("--repeat-cap", o.repeat_cap,
                  "Override the repeat cap (0 keeps the configured value)")
      ->check(CLI::NonNegativeNumber);
}

void AddClitics(CLI::App* cmd, Options& o) {
  cmd->add_option("--clitics", o.clitics,
                  "JSON clitic table (default: built-in table)")
      ->envname("ARABTOK_CLITICS");
}

void AddThreads(CLI::App* cmd, Options& o) {
  cmd->add_option("--threads", o.threads,
                  "Worker threads for counting (0 = all cores)");
}

// Turns the config file into flags placed before the user's own flags so
// that the last occurrence, the user's, wins.
std::vector<std::string> ExpandConfig(CLI::App& app,
                                      std::vector<std::string> args,
                                      Options& o) {
  if (args.empty()) return args;
  CLI::App* cmd = app.get_subcommand_no_throw(args[0]);
  if (cmd == nullptr) return args;
  std::string path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  RequireFile(path, "config file");
  const json config = json::parse(ReadFile(path));
  if (!config.is_object()) throw DataError("config file must hold an object");
  std::vector<std::string> injected;
  for (const auto& [key, value] : config.items()) {
    if (key == "normalizer" && value.is_object()) {
      o.config_normalizer = value;
      continue;
    }
    std::string flag = "--" + key;
    std::replace(flag.begin() + 2, flag.end(), '_', '-');
    CLI::Option* opt = cmd->get_option_no_throw(flag);
    if (opt == nullptr || flag == "--config") {
      throw CLI::ValidationError("config", "unknown key for " + args[0] +
                                               ": " + key);
    }
    if (value.is_boolean()) {
      if (value.get<bool>()) injected.push_back(flag);
      continue;
    }
    std::string text;
    if (value.is_array()) {
      for (const json& item : value) {
        if (!text.empty()) text.push_back(',');
        text += item.is_string() ? item.get<std::string>() : item.dump();
      }
    } else {
      text = value.is_string() ? value.get<std::string>() : value.dump();
    }
    injected.push_back(flag);
    injected.push_back(text);
  }
  args.insert(args.begin() + 1, injected.begin(), injected.end());
  return args;
}

}  // namespace

int Run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  Options o;
  const Logger log(err);
  CLI::App app{"Arabic tokenizer toolkit: corpus filtering, normalization, "
               "clitic segmentation, subword training and evaluation.",
               "arabtok"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default()->multi_option_policy(
      CLI::MultiOptionPolicy::TakeLast);

  auto* pre = app.add_subcommand("preprocess",
                                 "Filter raw documents into clean JSONL");
  AddConfig(pre, o);
  pre->add_option("--input", o.input, "Raw corpus file")->required();
  pre->add_option("--format", o.format, "Input format: jsonl or plain_lines")
      ->check(CLI::IsMember({"jsonl", "plain_lines", "plain"}));
  pre->add_option("--output", o.output, "Filtered JSONL output")
      ->required()
      ->envname("ARABTOK_OUTPUT");
  pre->add_option("--min-chars", o.min_chars, "Minimum characters");
  pre->add_option("--min-words", o.min_words, "Minimum whitespace words");
  pre->add_option("--min-arabic-ratio", o.min_arabic_ratio,
                  "Minimum share of Arabic letters among letters")
      ->check(CLI::Range(0.0, 1.0));
  pre->add_option("--max-mean-line-words", o.max_mean_line_words,
                  "Reject documents whose mean words per line is below this "
                  "(0 = off)")
      ->check(CLI::NonNegativeNumber);

  auto* train = app.add_subcommand("train", "Train one tokenizer");
  AddConfig(train, o);
  AddCorpus(train, o, true);
  train->add_option("--kind", o.kind,
                    "Tokenizer kind: bpe, wordpiece, wordlevel or bpe_morph")
      ->check(CLI::IsMember({"bpe", "wordpiece", "wordlevel", "bpe_morph"}));
  train->add_option("--vocab", o.vocab, "Vocabulary size");
  train->add_option("--output", o.output, "Model bundle (JSON)")
      ->required()
      ->envname("ARABTOK_MODEL");
  train->add_option("--export-dir", o.export_dir,
                    "Also write vocab.txt and merges.txt here");
  train->add_option("--seed", o.seed, "Random seed (training is seed-free)");
  AddNormalizer(train, o);
  AddClitics(train, o);
  AddThreads(train, o);

  auto* encode = app.add_subcommand("encode", "Encode text with a model");
  AddConfig(encode, o);
  encode->add_option("--model", o.model, "Model bundle")
      ->required()
      ->envname("ARABTOK_MODEL");
  encode->add_option("--text", o.text, "Inline text");
  encode->add_option("--input", o.input, "File with one text per line (- = stdin)");
  encode->add_option("--output", o.output, "Output file (default: stdout)");
  encode->add_option("--out-format", o.out_format, "json, tokens or ids")
      ->check(CLI::IsMember({"json", "tokens", "ids"}));

  auto* decode = app.add_subcommand("decode", "Decode token ids");
  AddConfig(decode, o);
  decode->add_option("--model", o.model, "Model bundle")
      ->required()
      ->envname("ARABTOK_MODEL");
  decode->add_option("--ids", o.ids, "Inline space-separated ids");
  decode->add_option("--input", o.input,
                     "File with one id list or encode JSON record per line");
  decode->add_option("--output", o.output, "Output file (default: stdout)");

  auto* eval = app.add_subcommand("eval", "Measure one model on a corpus");
  AddConfig(eval, o);
  eval->add_option("--model", o.model, "Model bundle")
      ->required()
      ->envname("ARABTOK_MODEL");
  AddCorpus(eval, o, true);
  eval->add_option("--sample", o.sample, "Documents sampled for the round-trip audit");
  eval->add_option("--seed", o.seed, "Sampling seed");
  eval->add_option("--output", o.output, "Full JSON report");
  eval->add_flag("--no-timing", o.no_timing, "Report words_per_sec as 0");

  auto* compare = app.add_subcommand(
      "compare", "Train and evaluate every kind at every vocabulary size");
  AddConfig(compare, o);
  AddCorpus(compare, o, true);
  compare->add_option("--kinds", o.kinds, "Comma-separated tokenizer kinds")
      ->delimiter(',')
      ->check(CLI::IsMember({"bpe", "wordpiece", "wordlevel", "bpe_morph"}));
  compare->add_option("--sizes", o.sizes, "Comma-separated vocabulary sizes")
      ->delimiter(',');
  compare->add_option("--output", o.output, "CSV report")
      ->required()
      ->envname("ARABTOK_OUTPUT");
  compare->add_option("--json", o.json_out, "JSON report");
  compare->add_option("--long", o.long_out, "Long-format CSV for plotting");
  compare->add_option("--cache-dir", o.cache_dir, "Reuse trained models from here")
      ->envname("ARABTOK_CACHE_DIR");
  compare->add_option("--corpus-id", o.corpus_id,
                      "Provenance label (default: corpus file name)");
  compare->add_option("--seed", o.seed, "Random seed (the grid is seed-free)");
  compare->add_flag("--no-timing", o.no_timing,
                    "Report words_per_sec as 0 so output is byte-stable");
  AddNormalizer(compare, o);
  AddClitics(compare, o);
  AddThreads(compare, o);

  auto* dump = app.add_subcommand("dump-clitics",
                                  "Print the built-in clitic table as JSON");
  AddConfig(dump, o);
  dump->add_option("--output", o.output, "Output file (default: stdout)");

  try {
    std::vector<std::string> argv =
        ExpandConfig(app, std::vector<std::string>(args.begin(), args.end()), o);
    std::reverse(argv.begin(), argv.end());
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    CLI::App* sub = nullptr;
    for (CLI::App* s : app.get_subcommands()) sub = s;
    err << (sub ? sub->help() : app.help());
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }

  try {
    if (pre->parsed()) return CmdPreprocess(o, out, log);
    if (train->parsed()) return CmdTrain(o, out, log);
    if (encode->parsed()) return CmdEncode(o, out, log);
    if (decode->parsed()) return CmdDecode(o, out, log);
    if (eval->parsed()) return CmdEval(o, out, log);
    if (compare->parsed()) return CmdCompare(o, out, log);
    if (dump->parsed()) return CmdDumpClitics(o, out, log);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

int Main(int argc, char** argv) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return Run(args, std::cout, std::cerr);
}

}  // namespace arabtok::cli
