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

#include "arabtok/synth.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string_view>

#include "arabtok/unicode.h"

namespace arabtok {
namespace {

constexpr std::u32string_view kConsonants =
    U"بتثجحخدذرزسشصضطظعغفقكلمنه";

struct Pattern {
  std::u32string_view shape;  // '1', '2', '3' stand for the root letters
  bool noun;
};

constexpr Pattern kPatterns[] = {
    {U"1ا23", true},    {U"12ا3", true},     {U"12و3", true},
    {U"12ي3", true},    {U"م12و3", true},    {U"م1ا23", true},
    {U"م123", true},    {U"م123ة", true},    {U"1ا23ة", true},
    {U"123ة", true},    {U"ت1ا23", true},    {U"م1ا2ي3", true},
    {U"م12ا3", true},   {U"ت12ي3", true},    {U"123ات", true},
    {U"م123ون", true},  {U"ي123", false},    {U"ت123", false},
    {U"ن123", false},   {U"أ123", false},    {U"است123", false},
    {U"ي1ا23ون", false}, {U"123وا", false},   {U"123ت", false},
    {U"123نا", false},  {U"ي123ون", false},
};

constexpr std::string_view kFunctionWords[] = {
    "في", "من", "على", "إلى", "عن", "أن", "هذا", "هذه", "التي", "الذي",
    "كان", "قد", "لا", "ما", "هو", "هي", "مع", "بين", "كل", "بعد", "قبل",
    "حتى", "إن", "عند", "لم", "لن", "ثم", "أو", "منذ", "خلال", "حيث", "ذلك",
    "تلك", "هناك", "غير", "أكثر", "عام", "أيضا", "جدا", "كانت"};

constexpr std::string_view kEnclitics[] = {"ها", "هم", "ه",  "نا", "ك",
                                           "هما", "كم", "هن", "ي",  "ني"};

constexpr std::string_view kLatinWords[] = {
    "the", "of", "and", "news", "page", "home", "contact", "about", "search",
    "login", "video", "music", "online", "free", "download", "world", "city",
    "report", "market", "sports", "is", "a", "for", "with", "new", "this"};

constexpr std::string_view kMenuWords[] = {
    "الرئيسية", "أخبار", "رياضة", "اقتصاد", "فن", "اتصل بنا", "من نحن",
    "سياسة الخصوصية", "تسجيل الدخول", "فيديو", "صور", "المزيد", "الأرشيف",
    "منوعات", "تكنولوجيا", "صحة", "ثقافة", "آراء"};

constexpr std::u32string_view kHarakat = U"ًٌٍَُِّْ";

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  // Explicit arithmetic keeps the stream identical across standard library
  // implementations.
  double Uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  std::size_t Below(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }
  bool Chance(double p) { return Uniform() < p; }
  std::size_t Between(std::size_t lo, std::size_t hi) { return lo + Below(hi - lo + 1); }

 private:
  std::mt19937_64 gen_;
};

struct Lemma {
  std::string text;
  bool noun = true;
  bool function = false;
};

}  // namespace

struct SynthCorpus::Impl {
  explicit Impl(const SynthConfig& c) : config(c), rng(c.seed) { Build(); }

  void Build() {
    std::vector<std::u32string> roots;
    while (roots.size() < config.roots) {
      std::u32string root;
      for (int i = 0; i < 3; ++i) root.push_back(kConsonants[rng.Below(kConsonants.size())]);
      if (root[0] == root[1]) continue;
      roots.push_back(root);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

    std::vector<Lemma> content;
    for (const std::u32string& root : roots) {
      // Each root realizes a random subset of the patterns.
      for (const Pattern& p : kPatterns) {
        if (!rng.Chance(0.6)) continue;
        std::u32string word;
        for (char32_t c : p.shape) {
          if (c >= U'1' && c <= U'3') {
            word.push_back(root[c - U'1']);
          } else {
            word.push_back(c);
          }
        }
        content.push_back({unicode::FromCodepoints(word), p.noun, false});
      }
    }
    for (std::size_t i = content.size(); i > 1; --i) {
      std::swap(content[i - 1], content[rng.Below(i)]);
    }
    for (std::string_view w : kFunctionWords) {
      lemmas.push_back({std::string(w), false, true});
    }
    lemmas.insert(lemmas.end(), content.begin(), content.end());

    cdf.resize(lemmas.size());
    double total = 0.0;
    for (std::size_t r = 0; r < lemmas.size(); ++r) {
      total += 1.0 / std::pow(static_cast<double>(r + 1), config.zipf_exponent);
      cdf[r] = total;
    }
    for (double& x : cdf) x /= total;
  }

  const Lemma& DrawLemma() {
    const double u = rng.Uniform();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    return lemmas[std::min<std::size_t>(it - cdf.begin(), lemmas.size() - 1)];
  }

  std::string Decorate(const Lemma& lemma) {
    if (lemma.function) {
      return rng.Chance(0.08) ? "و" + lemma.text : lemma.text;
    }
    std::string prefix;
    std::string suffix;
    if (rng.Chance(0.14)) {
      prefix = "و";
    } else if (rng.Chance(0.03)) {
      prefix = "ف";
    }
    bool determiner = false;
    if (lemma.noun) {
      const bool preposition = rng.Chance(0.12);
      determiner = rng.Chance(0.38);
      if (preposition) {
        static constexpr std::string_view kPreps[] = {"ب", "ل", "ك"};
        const std::string_view prep = kPreps[rng.Below(3)];
        if (determiner && prep == "ل") {
          prefix += "لل";
        } else {
          prefix += prep;
          if (determiner) prefix += "ال";
        }
      } else if (determiner) {
        prefix += "ال";
      }
    }
    if (!determiner && rng.Chance(lemma.noun ? 0.22 : 0.30)) {
      suffix = kEnclitics[rng.Below(std::size(kEnclitics))];
    }
    std::string word = prefix + lemma.text + suffix;
    if (!lemma.noun && rng.Chance(0.004)) {
      // Egyptian circumfix negation, e.g. ma-bi-...-sh.
      word = "مب" + lemma.text + suffix + "ش";
    }
    return word;
  }

  std::string Noisy(std::string word) {
    if (rng.Chance(0.03)) {
      std::u32string cps = unicode::ToCodepoints(word);
      std::u32string out;
      for (char32_t c : cps) {
        out.push_back(c);
        if (rng.Chance(0.5)) out.push_back(kHarakat[rng.Below(kHarakat.size())]);
      }
      word = unicode::FromCodepoints(out);
    }
    if (rng.Chance(0.01)) {
      std::u32string cps = unicode::ToCodepoints(word);
      if (cps.size() > 2) {
        cps.insert(cps.begin() + 1 + rng.Below(cps.size() - 2), rng.Between(1, 4), U'ـ');
      }
      word = unicode::FromCodepoints(cps);
    }
    if (rng.Chance(0.005)) {
      std::u32string cps = unicode::ToCodepoints(word);
      const std::size_t at = rng.Below(cps.size());
      cps.insert(cps.begin() + at, rng.Between(2, 5), cps[at]);
      word = unicode::FromCodepoints(cps);
    }
    return word;
  }

  std::string Number() {
    std::string digits = std::to_string(rng.Between(1, 2030));
    if (!rng.Chance(0.5)) return digits;
    std::string out;
    const char32_t base = rng.Chance(0.8) ? U'٠' : U'۰';
    for (char d : digits) unicode::AppendUtf8(base + (d - '0'), &out);
    return out;
  }

  std::string Entity() {
    switch (rng.Below(4)) {
      case 0:
        return "https://www." + std::string(kLatinWords[rng.Below(std::size(kLatinWords))]) +
               ".com/" + std::to_string(rng.Below(100000));
      case 1:
        return "@user" + std::to_string(rng.Below(5000));
      case 2:
        return std::string(kLatinWords[rng.Below(std::size(kLatinWords))]) + "@mail.com";
      default:
        return "&amp;";
    }
  }

  std::string Sentence() {
    std::string s;
    const std::size_t n = rng.Between(6, 18);
    for (std::size_t i = 0; i < n; ++i) {
      std::string word;
      const double u = rng.Uniform();
      if (u < 0.015) {
        word = Number();
      } else if (u < 0.022) {
        word = Entity();
      } else if (u < 0.032) {
        word = std::string(kLatinWords[rng.Below(std::size(kLatinWords))]);
      } else {
        word = Noisy(Decorate(DrawLemma()));
      }
      if (!s.empty()) s.push_back(' ');
      s += word;
    }
    s += rng.Chance(0.2) ? "،" : ".";
    return s;
  }

  std::string RegularDoc() {
    const bool markup = rng.Chance(config.markup_docs);
    std::string text;
    const std::size_t paragraphs = rng.Between(1, 5);
    for (std::size_t p = 0; p < paragraphs; ++p) {
      std::string para;
      const std::size_t sentences = rng.Between(2, 7);
      for (std::size_t i = 0; i < sentences; ++i) {
        if (!para.empty()) para.push_back(' ');
        para += Sentence();
      }
      if (markup) para = "<p>" + para + "</p>";
      if (!text.empty()) text.push_back('\n');
      text += para;
    }
    if (markup) text = "<div class=\"content\">\n" + text + "\n</div>";
    return text;
  }

  std::string EnglishDoc() {
    std::string text;
    const std::size_t n = rng.Between(30, 120);
    for (std::size_t i = 0; i < n; ++i) {
      if (!text.empty()) text.push_back(' ');
      text += kLatinWords[rng.Below(std::size(kLatinWords))];
    }
    return text + ".";
  }

  std::string ShortDoc() {
    std::string text;
    const std::size_t n = rng.Between(1, 4);
    for (std::size_t i = 0; i < n; ++i) {
      if (!text.empty()) text.push_back(' ');
      text += Decorate(DrawLemma());
    }
    return text;
  }

  std::string NavigationDoc() {
    std::string text;
    const std::size_t n = rng.Between(15, 40);
    for (std::size_t i = 0; i < n; ++i) {
      if (!text.empty()) text.push_back('\n');
      text += kMenuWords[rng.Below(std::size(kMenuWords))];
    }
    return text;
  }

  bool Next(Document* doc) {
    if (bytes >= config.target_bytes) return false;
    const double u = rng.Uniform();
    std::string text;
    if (u < config.english_docs) {
      text = EnglishDoc();
    } else if (u < config.english_docs + config.short_docs) {
      text = ShortDoc();
    } else if (u < config.english_docs + config.short_docs + config.navigation_docs) {
      text = NavigationDoc();
    } else {
      text = RegularDoc();
    }
    bytes += text.size();
    doc->id = "synth-" + std::to_string(count++);
    doc->text = std::move(text);
    doc->source = "synthetic";
    return true;
  }

  SynthConfig config;
  Rng rng;
  std::vector<Lemma> lemmas;
  std::vector<double> cdf;
  std::uint64_t bytes = 0;
  std::uint64_t count = 0;
};

SynthCorpus::SynthCorpus(const SynthConfig& config)
    : impl_(std::make_unique<Impl>(config)) {}

SynthCorpus::~SynthCorpus() = default;

bool SynthCorpus::Next(Document* doc) { return impl_->Next(doc); }

std::uint64_t SynthCorpus::bytes() const { return impl_->bytes; }

std::uint64_t WriteSynthJsonl(const SynthConfig& config, std::ostream& out) {
  SynthCorpus corpus(config);
  Document doc;
  std::uint64_t n = 0;
  while (corpus.Next(&doc)) {
    out << DocumentToJson(doc).dump() << '\n';
    ++n;
  }
  return n;
}

std::vector<Document> GenerateSynth(const SynthConfig& config) {
  SynthCorpus corpus(config);
  std::vector<Document> docs;
  Document doc;
  while (corpus.Next(&doc)) docs.push_back(doc);
  return docs;
}

}  // namespace arabtok
