// Copyright 2026 The lingsteg Authors.
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

#include "lingsteg/codebook.h"

#include <set>

#include <gtest/gtest.h>

#include "lingsteg/errors.h"
#include "test_util.h"

namespace lingsteg {
namespace {

TEST(FrequencyBandTest, Parse) {
  EXPECT_EQ(FrequencyBand::Parse("4-6"), (FrequencyBand{4, 6}));
  EXPECT_EQ(FrequencyBand::Parse("14+"), (FrequencyBand{14, std::nullopt}));
  EXPECT_EQ(FrequencyBand::Parse("14+").ToString(), "14+");
  EXPECT_EQ(FrequencyBand::Parse("8-12").ToString(), "8-12");
  EXPECT_TRUE(FrequencyBand::Parse("14+").Contains(1000000));
  EXPECT_TRUE(FrequencyBand::Parse("4-6").Contains(6));
  EXPECT_FALSE(FrequencyBand::Parse("4-6").Contains(7));
  for (const char* bad : {"", "4", "6-4", "0-3", "a-b", "+", "-3", "4-", "1.5+"}) {
    EXPECT_THROW(FrequencyBand::Parse(bad), ParameterError) << bad;
  }
}

TEST(CodebookTest, PaperMapping) {
  const Codebook cb = testing::PaperCodebook();
  EXPECT_EQ(cb.MapSymbol('2'), "good");
  EXPECT_EQ(cb.MapSymbol('1'), "really");
  EXPECT_EQ(cb.UnmapWord("good"), '2');
  EXPECT_EQ(cb.UnmapWord("really"), '1');
  EXPECT_EQ(cb.UnmapWord("trash"), std::nullopt);
  EXPECT_THROW(cb.MapSymbol('x'), ParameterError);
}

TEST(CodebookTest, RejectsBrokenBijection) {
  EXPECT_THROW(Codebook("12", {{'1', "good"}, {'2', "good"}},
                        FrequencyBand{1, {}}, 0),
               ValidationError);
  EXPECT_THROW(Codebook("12", {{'1', "good"}}, FrequencyBand{1, {}}, 0),
               ValidationError);
  EXPECT_THROW(Codebook("1", {{'1', "good"}, {'2', "bad"}},
                        FrequencyBand{1, {}}, 0),
               ValidationError);
  EXPECT_THROW(Codebook("1", {{'1', "two words"}}, FrequencyBand{1, {}}, 0),
               ValidationError);
  EXPECT_THROW(Codebook("1", {{'1', "Good!"}}, FrequencyBand{1, {}}, 0),
               ValidationError);
  EXPECT_THROW(Codebook("11", {{'1', "good"}}, FrequencyBand{1, {}}, 0),
               ValidationError);
}

TEST(CodebookTest, ParseSecret) {
  const Codebook cb = testing::PaperCodebook();
  EXPECT_EQ(cb.ParseSecret("21").symbols, "21");
  EXPECT_TRUE(cb.ParseSecret("").empty());
  EXPECT_THROW(cb.ParseSecret("2x"), ParameterError);
}

TEST(SelectCodebookTest, ToyBand) {
  const auto model = NGramModel::Build(testing::ToyCorpus(), 2);
  const std::set<std::string> band_words = {"the", "cat", "sat"};
  EXPECT_EQ(WordsInBand(model, FrequencyBand{2, 3}),
            (std::vector<std::string>{"cat", "sat", "the"}));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Codebook cb = SelectCodebook(model, FrequencyBand{2, 3}, "01", seed);
    ASSERT_EQ(cb.size(), 2u);
    ASSERT_NE(cb.MapSymbol('0'), cb.MapSymbol('1'));
    ASSERT_TRUE(band_words.contains(cb.MapSymbol('0')));
    ASSERT_TRUE(band_words.contains(cb.MapSymbol('1')));
  }
}

TEST(SelectCodebookTest, InsufficientBand) {
  const auto model = NGramModel::Build(testing::ToyCorpus(), 2);
  try {
    SelectCodebook(model, FrequencyBand{100, 200}, "01", 1);
    FAIL() << "expected InsufficientBandError";
  } catch (const InsufficientBandError& e) {
    EXPECT_EQ(e.found(), 0u);
    EXPECT_EQ(e.needed(), 2u);
  }
}

TEST(SelectCodebookTest, ForcedChoice) {
  const auto model = NGramModel::Build(testing::ToyCorpus(), 2);
  // Only "cat" occurs exactly 3 times.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_EQ(SelectCodebook(model, FrequencyBand{3, 3}, "7", seed)
                  .MapSymbol('7'),
              "cat");
  }
}

TEST(SelectCodebookTest, BandRespectBijectionAndDeterminism) {
  const auto model = NGramModel::Build(testing::DeskCorpus(), 1);
  for (const char* b : {"4-6", "6-8", "8-12", "14+"}) {
    const auto band = FrequencyBand::Parse(b);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Codebook cb = SelectCodebook(model, band, kDigitAlphabet, seed);
      ASSERT_EQ(cb, SelectCodebook(model, band, kDigitAlphabet, seed));
      for (char s : kDigitAlphabet) {
        const auto& w = cb.MapSymbol(s);
        ASSERT_TRUE(band.Contains(model.Count({w}))) << w;
        ASSERT_EQ(cb.UnmapWord(w), s);
      }
    }
  }
}

TEST(SelectCodebookTest, SeedsVaryTheChoice) {
  const auto model = NGramModel::Build(testing::DeskCorpus(), 1);
  std::set<std::string> first_words;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    first_words.insert(
        SelectCodebook(model, FrequencyBand{4, 6}, kDigitAlphabet, seed)
            .MapSymbol('0'));
  }
  EXPECT_GT(first_words.size(), 10u);
}

TEST(CodebookJsonTest, RoundTrip) {
  const Codebook cb = testing::PaperCodebook();
  testing::TempDir dir;
  cb.Save(dir / "cb.json");
  const Codebook back = Codebook::Load(dir / "cb.json");
  EXPECT_EQ(back, cb);
  EXPECT_EQ(back.forward(), cb.forward());

  const auto model = NGramModel::Build(testing::DeskCorpus(), 1);
  const Codebook sampled =
      SelectCodebook(model, FrequencyBand{4, 6}, kDigitAlphabet, 99);
  EXPECT_EQ(Codebook::FromJson(sampled.ToJson()), sampled);
}

TEST(CodebookJsonTest, Rejects) {
  EXPECT_THROW(Codebook::FromJson(
                   R"({"alphabet":"1","forward":{"1":"good"},)"
                   R"("band":{"lo":1,"hi":null},"seed":0})"),
               FormatError);
  EXPECT_THROW(Codebook::FromJson(
                   R"({"version":1,"alphabet":"12",)"
                   R"("forward":{"1":"good","2":"good"},)"
                   R"("band":{"lo":1,"hi":null},"seed":0})"),
               ValidationError);
  EXPECT_THROW(Codebook::FromJson("[1,2]"), FormatError);
  EXPECT_THROW(Codebook::FromJson("{"), FormatError);
  EXPECT_THROW(Codebook::Load("/nonexistent/cb.json"), IoError);
}

}  // namespace
}  // namespace lingsteg
