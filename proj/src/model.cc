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

#include "arabtok/model.h"

#include <unordered_set>

#include "arabtok/file_util.h"
#include "json.hpp"

namespace arabtok {
namespace {

using nlohmann::json;

constexpr std::string_view kChecksumPrefix = "fnv1a64:";

// Everything except the trailing checksum member. One vocab entry or merge
// per line keeps bundles diffable.
std::string SerializeBody(const TokenizerModel& model) {
  std::string out;
  out += "{\n\"format_version\": " + std::to_string(kFormatVersion) + ",\n";
  out += "\"kind\": " + json(KindName(model.kind)).dump() + ",\n";
  out += "\"normalizer\": " + json(model.normalizer).dump() + ",\n";
  if (model.clitic_table) {
    out += "\"clitic_table\": " + json(*model.clitic_table).dump() + ",\n";
  }
  out += "\"specials\": " + json(kSpecialTokens).dump() + ",\n";
  out += "\"vocab\": [";
  for (std::size_t i = 0; i < model.vocab.size(); ++i) {
    out += i == 0 ? "\n" : ",\n";
    out += json(model.vocab[i]).dump();
  }
  out += "\n],\n\"merges\": [";
  for (std::size_t i = 0; i < model.merges.size(); ++i) {
    out += i == 0 ? "\n" : ",\n";
    out += json::array({model.merges[i].first, model.merges[i].second}).dump();
  }
  out += "\n]";
  return out;
}

std::string Checksum(std::string_view body) {
  return std::string(kChecksumPrefix) + Hex64(Fnv1a64(body));
}

}  // namespace

std::string_view KindName(TokenizerKind kind) {
  switch (kind) {
    case TokenizerKind::kBpe: return "bpe";
    case TokenizerKind::kWordPiece: return "wordpiece";
    case TokenizerKind::kWordLevel: return "wordlevel";
    case TokenizerKind::kBpeMorph: return "bpe_morph";
  }
  return "bpe";
}

TokenizerKind ParseKind(std::string_view name) {
  for (TokenizerKind k : kAllKinds) {
    if (KindName(k) == name) return k;
  }
  throw std::invalid_argument("unknown tokenizer kind: " + std::string(name));
}

std::string MergedToken(std::string_view left, std::string_view right) {
  std::string out(left);
  if (right.substr(0, kContinuationPrefix.size()) == kContinuationPrefix) {
    right.remove_prefix(kContinuationPrefix.size());
  }
  out.append(right);
  return out;
}

void TokenizerModel::Validate() const {
  if (vocab.size() < kNumSpecials) {
    throw ModelFormatError("vocabulary smaller than the special tokens");
  }
  for (std::size_t i = 0; i < kNumSpecials; ++i) {
    if (vocab[i] != kSpecialTokens[i]) {
      throw ModelFormatError("special token " + std::string(kSpecialTokens[i]) +
                             " not at id " + std::to_string(i));
    }
  }
  std::unordered_set<std::string_view> seen;
  for (const std::string& token : vocab) {
    if (token.empty()) throw ModelFormatError("empty vocabulary entry");
    if (!seen.insert(token).second) {
      throw ModelFormatError("duplicate vocabulary entry: " + token);
    }
  }
  if (!UsesMerges(kind) && !merges.empty()) {
    throw ModelFormatError("merges present for kind " +
                           std::string(KindName(kind)));
  }
  for (const auto& [left, right] : merges) {
    if (!seen.contains(left) || !seen.contains(right) ||
        !seen.contains(MergedToken(left, right))) {
      throw ModelFormatError("merge (" + left + ", " + right +
                             ") references tokens outside the vocabulary");
    }
  }
  if (kind == TokenizerKind::kBpeMorph && !clitic_table) {
    throw ModelFormatError("bpe_morph model without a clitic table");
  }
  if (kind != TokenizerKind::kBpeMorph && clitic_table) {
    throw ModelFormatError("clitic table on a non-morph model");
  }
}

std::string SerializeModel(const TokenizerModel& model) {
  model.Validate();
  const std::string body = SerializeBody(model);
  return body + ",\n\"checksum\": " + json(Checksum(body)).dump() + "\n}\n";
}

TokenizerModel DeserializeModel(std::string_view bundle) {
  json j;
  try {
    j = json::parse(bundle);
  } catch (const json::exception& e) {
    throw ModelFormatError(std::string("malformed model bundle: ") + e.what());
  }
  if (!j.is_object()) throw ModelFormatError("model bundle must be an object");
  const auto version = j.find("format_version");
  if (version == j.end() || !version->is_number_integer()) {
    throw ModelFormatError("model bundle lacks format_version");
  }
  if (version->get<int>() != kFormatVersion) {
    throw ModelFormatError("unsupported format_version " +
                           std::to_string(version->get<int>()) +
                           " (expected " + std::to_string(kFormatVersion) + ")");
  }
  TokenizerModel model;
  try {
    model.kind = ParseKind(j.at("kind").get<std::string>());
    model.normalizer = j.at("normalizer").get<NormalizerConfig>();
    if (j.contains("clitic_table")) {
      model.clitic_table = j["clitic_table"].get<CliticTable>();
    }
    if (j.at("specials") != json(kSpecialTokens)) {
      throw ModelFormatError("special token list does not match");
    }
    model.vocab = j.at("vocab").get<std::vector<std::string>>();
    if (UsesMerges(model.kind) && !j.contains("merges")) {
      throw ModelFormatError("merges missing for kind " +
                             std::string(KindName(model.kind)));
    }
    if (j.contains("merges")) {
      for (const json& m : j["merges"]) {
        if (!m.is_array() || m.size() != 2) {
          throw ModelFormatError("merge entries must be [left, right] pairs");
        }
        model.merges.emplace_back(m[0].get<std::string>(),
                                  m[1].get<std::string>());
      }
    }
  } catch (const ModelFormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw ModelFormatError(std::string("invalid model bundle: ") + e.what());
  }
  model.Validate();
  if (j.contains("checksum")) {
    if (j["checksum"] != Checksum(SerializeBody(model))) {
      throw ModelFormatError("checksum mismatch");
    }
  }
  return model;
}

void SaveModel(const TokenizerModel& model, const std::filesystem::path& path) {
  WriteFileAtomic(path, SerializeModel(model));
}

TokenizerModel LoadModel(const std::filesystem::path& path) {
  return DeserializeModel(ReadFile(path));
}

void ExportVocabTxt(const TokenizerModel& model,
                    const std::filesystem::path& path) {
  std::string out;
  for (const std::string& token : model.vocab) out += token + "\n";
  WriteFileAtomic(path, out);
}

void ExportMergesTxt(const TokenizerModel& model,
                     const std::filesystem::path& path) {
  std::string out;
  for (const auto& [left, right] : model.merges) {
    out += left + " " + right + "\n";
  }
  WriteFileAtomic(path, out);
}

}  // namespace arabtok
