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

#include "arabtok/normalize.h"

#include <random>
#include <string>

#include <gtest/gtest.h>

#include "arabtok/unicode.h"

namespace arabtok {
namespace {

TEST(RemoveTatweelTest, DeletesOnlyTatweel) {
  EXPECT_EQ(RemoveTatweel("كـــتاب"), "كتاب");
  EXPECT_EQ(RemoveTatweel("كتاب"), "كتاب");
  EXPECT_EQ(RemoveTatweel("ـــ"), "");
}

TEST(RemoveDiacriticsTest, StripsHarakat) {
  EXPECT_EQ(RemoveDiacritics("مُحَمَّد"), "محمد");
  EXPECT_EQ(RemoveDiacritics("محمد"), "محمد");
  EXPECT_EQ(RemoveDiacritics("بِسْمِ"), "بسم");
  // Superscript alef is a diacritic too; madda and hamza above are not.
  EXPECT_EQ(RemoveDiacritics("هٰذا"), "هذا");
  EXPECT_EQ(RemoveDiacritics("آ"), "آ");
}

TEST(MapDigitsTest, MapsBothIndicRanges) {
  EXPECT_EQ(MapDigits("٢٠٢٤"), "2024");
  EXPECT_EQ(MapDigits("2024"), "2024");
  EXPECT_EQ(MapDigits("سنة ١٩٩٩م"), "سنة 1999م");
  EXPECT_EQ(MapDigits("۰۱۲۳۴۵۶۷۸۹"), "0123456789");
}

TEST(ReplaceEntitiesTest, Examples) {
  const Placeholders p;
  EXPECT_EQ(ReplaceEntities("see https://x.ye/a now", p), "see [URL] now");
  EXPECT_EQ(ReplaceEntities("ask @user1", p), "ask [USER]");
  EXPECT_EQ(ReplaceEntities("a@b.com and @a", p), "[EMAIL] and [USER]");
  EXPECT_EQ(ReplaceEntities("visit www.example.org today", p),
            "visit [URL] today");
}

TEST(ReplaceEntitiesTest, CustomPlaceholders) {
  Placeholders p;
  p.url = "<<u>>";
  EXPECT_EQ(ReplaceEntities("http://a.b", p), "<<u>>");
}

TEST(CollapseRepeatsTest, Examples) {
  EXPECT_EQ(CollapseRepeats("هههههه", 2), "هه");
  EXPECT_EQ(CollapseRepeats("2000", 2), "2000");
  EXPECT_EQ(CollapseRepeats("راااائع!!!", 2), "راائع!!");
  EXPECT_EQ(CollapseRepeats("aaa", 1), "a");
  EXPECT_EQ(CollapseRepeats("٠٠٠٠", 1), "٠٠٠٠");
}

TEST(StripMarkupTest, Examples) {
  EXPECT_EQ(StripMarkup("<b>نص</b>"), "نص");
  EXPECT_EQ(StripMarkup("a &amp; b"), "a & b");
  EXPECT_EQ(StripMarkup("x < 5"), "x < 5");
  EXPECT_EQ(StripMarkup("&lt; 5 &quot;"), "< 5 \"");
  // A decoded entity that forms a tag is removed as well, so the
  // operation is idempotent.
  EXPECT_EQ(StripMarkup("&lt;q&gt;x"), "x");
}

TEST(NormalizeTest, Examples) {
  const NormalizerConfig cfg;
  EXPECT_EQ(Normalize("<p>مُحَمَّد  ٢٠٢٤</p>", cfg), "محمد 2024");
  EXPECT_EQ(Normalize("", cfg), "");
  EXPECT_EQ(Normalize("  <b>x</b>\t\n y  ", NormalizerConfig::AllOff()),
            "<b>x</b> y");
}

TEST(NormalizeTest, PlaceholdersAreFixedPoints) {
  const NormalizerConfig cfg;
  for (const char* p : {"[URL]", "[USER]", "[EMAIL]"}) {
    EXPECT_EQ(Normalize(p, cfg), p);
  }
}

TEST(NormalizeTest, EntityFormedAfterTatweelRemovalStaysIdempotent) {
  const NormalizerConfig cfg;
  const std::string once = Normalize("&ـamp;lt;", cfg);
  EXPECT_EQ(Normalize(once, cfg), once);
}

TEST(NormalizerConfigTest, JsonRoundTrip) {
  NormalizerConfig cfg;
  cfg.map_digits = false;
  cfg.repeat_cap = 3;
  cfg.placeholders.email = "[MAIL]";
  const nlohmann::json j = cfg;
  EXPECT_EQ(j.get<NormalizerConfig>(), cfg);
  EXPECT_TRUE(j.contains("remove_tatweel"));
}

TEST(NormalizerConfigTest, RejectsBadValues) {
  NormalizerConfig cfg;
  cfg.repeat_cap = 0;
  EXPECT_THROW(cfg.Validate(), std::invalid_argument);
  cfg = NormalizerConfig();
  cfg.placeholders.url = "a b";
  EXPECT_THROW(cfg.Validate(), std::invalid_argument);
  nlohmann::json j = NormalizerConfig();
  j["bogus"] = true;
  EXPECT_THROW(j.get<NormalizerConfig>(), std::invalid_argument);
}

// Random strings over a pool that exercises every transform.
std::string RandomLine(std::mt19937_64& rng) {
  static const std::vector<std::string> pool = {
      "ك", "ت", "ا", "ب", "ـ", "َ", "ُ", "ّ", "ٰ", "٣", "۷", "1", " ", "  ",
      "\t", "<", ">", "<b>", "&amp;", "&lt;", "&", "@", "x", ".", "com",
      "http://", "www.", "ه", "ههه", "!", "a", ";", "lt", "amp", " "};
  std::string s;
  const std::size_t n = rng() % 24;
  for (std::size_t i = 0; i < n; ++i) s += pool[rng() % pool.size()];
  return s;
}

TEST(NormalizeTest, IdempotentOnFuzzedInputForSeveralConfigs) {
  std::mt19937_64 rng(7);
  std::vector<NormalizerConfig> configs = {NormalizerConfig(),
                                           NormalizerConfig::AllOff()};
  NormalizerConfig no_markup;
  no_markup.strip_markup = false;
  configs.push_back(no_markup);
  NormalizerConfig cap1;
  cap1.repeat_cap = 1;
  configs.push_back(cap1);
  for (int i = 0; i < 2000; ++i) {
    const std::string line = RandomLine(rng);
    for (const NormalizerConfig& cfg : configs) {
      const std::string once = Normalize(line, cfg);
      ASSERT_EQ(Normalize(once, cfg), once) << "input: " << line;
      ASSERT_EQ(CanonicalizeWhitespace(once), once);
    }
  }
}

TEST(NormalizeTest, SubOpsLeaveOtherCodepointsAlone) {
  // Latin letters and punctuation outside every declared class.
  const std::string plain = "abc, def; ghi.";
  EXPECT_EQ(RemoveTatweel(plain), plain);
  EXPECT_EQ(RemoveDiacritics(plain), plain);
  EXPECT_EQ(MapDigits(plain), plain);
}

}  // namespace
}  // namespace arabtok
