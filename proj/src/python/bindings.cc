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

// Python bindings for the main operations. Configuration objects cross the
// boundary as dicts using the same field names as the JSON files.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "arabtok/cli.h"
#include "arabtok/corpus.h"
#include "arabtok/eval.h"
#include "arabtok/model.h"
#include "arabtok/morphseg.h"
#include "arabtok/normalize.h"
#include "arabtok/tokenizer.h"
#include "arabtok/trainer.h"

namespace py = pybind11;

namespace {

using arabtok::CliticTable;
using arabtok::Document;
using arabtok::NormalizerConfig;

nlohmann::json ToJson(const py::handle& obj) {
  py::module_ json = py::module_::import("json");
  return nlohmann::json::parse(json.attr("dumps")(obj).cast<std::string>());
}

py::object FromJson(const nlohmann::json& j) {
  py::module_ json = py::module_::import("json");
  return json.attr("loads")(j.dump());
}

NormalizerConfig Normalizer(const py::object& cfg) {
  if (cfg.is_none()) return NormalizerConfig();
  return ToJson(cfg).get<NormalizerConfig>();
}

CliticTable Clitics(const py::object& table) {
  if (table.is_none()) return CliticTable::Default();
  return ToJson(table).get<CliticTable>();
}

std::vector<Document> Documents(const std::vector<std::string>& texts) {
  std::vector<Document> docs;
  docs.reserve(texts.size());
  for (const std::string& t : texts) {
    docs.push_back({std::to_string(docs.size()), t, std::nullopt});
  }
  return docs;
}

}  // namespace

PYBIND11_MODULE(_arabtok, m) {
  m.doc() = "Arabic tokenization toolkit";

  py::register_exception<arabtok::TrainingError>(m, "TrainingError");
  py::register_exception<arabtok::ModelFormatError>(m, "ModelFormatError");
  py::register_exception<arabtok::EvalError>(m, "EvalError");

  m.def("normalize",
        [](const std::string& text, const py::object& config) {
          return arabtok::Normalize(text, Normalizer(config));
        },
        py::arg("text"), py::arg("config") = py::none(),
        "Apply the normalization pipeline; config is a dict of overrides.");
  m.def("default_normalizer", [] { return FromJson(NormalizerConfig()); });
  m.def("default_clitics", [] { return FromJson(CliticTable::Default()); });

  m.def("arabic_ratio", &arabtok::ArabicRatio, py::arg("text"));
  m.def("segment_word",
        [](const std::string& word, const py::object& table) {
          return arabtok::SegmentWord(word, Clitics(table)).segments;
        },
        py::arg("word"), py::arg("clitics") = py::none());
  m.def("segment_text",
        [](const std::string& text, const py::object& table) {
          return arabtok::SegmentText(text, Clitics(table));
        },
        py::arg("text"), py::arg("clitics") = py::none());
  m.def("desegment_text", &arabtok::DesegmentText, py::arg("text"));

  py::class_<arabtok::Tokenizer>(m, "Tokenizer")
      .def_static(
          "load",
          [](const std::filesystem::path& path) {
            return arabtok::Tokenizer(arabtok::LoadModel(path));
          },
          py::arg("path"))
      .def("save",
           [](const arabtok::Tokenizer& t, const std::filesystem::path& path) {
             arabtok::SaveModel(t.model(), path);
           },
           py::arg("path"))
      .def_property_readonly("kind",
                             [](const arabtok::Tokenizer& t) {
                               return std::string(arabtok::KindName(t.model().kind));
                             })
      .def_property_readonly("vocab_size", &arabtok::Tokenizer::vocab_size)
      .def_property_readonly("vocab",
                             [](const arabtok::Tokenizer& t) { return t.model().vocab; })
      .def_property_readonly("merges",
                             [](const arabtok::Tokenizer& t) { return t.model().merges; })
      .def("encode",
           [](const arabtok::Tokenizer& t, const std::string& text) {
             const arabtok::Encoding e = t.Encode(text);
             py::dict d;
             d["ids"] = e.ids;
             d["tokens"] = e.tokens;
             d["word_count"] = e.word_count;
             return d;
           },
           py::arg("text"))
      .def("decode",
           [](const arabtok::Tokenizer& t, const std::vector<arabtok::TokenId>& ids) {
             return t.Decode(ids);
           },
           py::arg("ids"))
      .def("token_to_word_ratio",
           [](const arabtok::Tokenizer& t, const std::vector<std::string>& texts) {
             return arabtok::MeasureCorpus(t, Documents(texts)).token_to_word();
           },
           py::arg("texts"))
      .def("unk_rate",
           [](const arabtok::Tokenizer& t, const std::vector<std::string>& texts) {
             return arabtok::MeasureCorpus(t, Documents(texts)).unk_rate();
           },
           py::arg("texts"));

  m.def(
      "train",
      [](const std::vector<std::string>& texts, const std::string& kind,
         std::size_t vocab_size, const py::object& normalizer,
         const py::object& clitics, unsigned threads) {
        arabtok::TrainOptions opts;
        opts.kind = arabtok::ParseKind(kind);
        opts.vocab_size = vocab_size;
        opts.normalizer = Normalizer(normalizer);
        opts.clitics = Clitics(clitics);
        opts.threads = threads;
        const std::vector<Document> docs = Documents(texts);
        py::gil_scoped_release release;
        return arabtok::Tokenizer(arabtok::Train(docs, opts));
      },
      py::arg("texts"), py::arg("kind") = "bpe", py::arg("vocab_size") = 16000,
      py::arg("normalizer") = py::none(), py::arg("clitics") = py::none(),
      py::arg("threads") = 1);

  m.def(
      "compare",
      [](const std::vector<std::string>& texts, const std::vector<std::string>& kinds,
         const std::vector<std::size_t>& sizes) {
        arabtok::GridConfig grid;
        grid.kinds.clear();
        for (const std::string& k : kinds) grid.kinds.push_back(arabtok::ParseKind(k));
        grid.sizes = sizes;
        grid.measure_throughput = false;
        const std::vector<Document> docs = Documents(texts);
        arabtok::ComparisonReport report;
        {
          py::gil_scoped_release release;
          report = arabtok::CompareGrid(docs, grid);
        }
        return FromJson(arabtok::ReportJson(report));
      },
      py::arg("texts"),
      py::arg("kinds") = std::vector<std::string>{"bpe", "wordpiece", "wordlevel",
                                                  "bpe_morph"},
      py::arg("sizes") = std::vector<std::size_t>{16000, 28000, 44000});

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = arabtok::cli::Run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a CLI command; returns (exit_code, stdout, stderr).");
}
