#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "adpipe/embedding.hpp"
#include "adpipe/errors.hpp"
#include "adpipe/segmenter.hpp"
#include "doctest.h"
#include "oracles.hpp"

using adpipe::AdType;
using adpipe::TimedText;
using adpipe::TimeInterval;

namespace {

TimedText sub(double start, double end) {
  TimedText t;
  t.start_s = start;
  t.end_s = end;
  t.text = "line";
  return t;
}

adpipe::QueryBank cast_bank(std::vector<std::string> names) {
  adpipe::QueryBank bank;
  bank.movie_id = "demo";
  bank.dim = 2;
  for (std::size_t i = 0; i < names.size(); ++i) {
    bank.entries.push_back(
        {std::move(names[i]), adpipe::Embedding({1.0, double(i)})});
  }
  return bank;
}

}  // namespace

TEST_CASE("gaps are the complement of the subtitle spans") {
  const std::vector<TimedText> subs = {sub(0, 5), sub(10, 12)};
  CHECK(adpipe::find_gaps(subs, 20.0, 1.0) ==
        std::vector<TimeInterval>{{5.0, 10.0}, {12.0, 20.0}});
}

TEST_CASE("overlapping and touching spans coalesce before complementing") {
  const std::vector<TimedText> chained = {sub(0, 5), sub(4, 8), sub(8, 9)};
  CHECK(adpipe::find_gaps(chained, 10.0, 0.5) ==
        std::vector<TimeInterval>{{9.0, 10.0}});

  const std::vector<TimedText> touching = {sub(0, 2), sub(2, 4)};
  CHECK(adpipe::find_gaps(touching, 10.0, 1.0) ==
        std::vector<TimeInterval>{{4.0, 10.0}});

  const std::vector<TimedText> nested = {sub(0, 5), sub(1, 2)};
  CHECK(adpipe::find_gaps(nested, 10.0, 1.0) ==
        std::vector<TimeInterval>{{5.0, 10.0}});
}

TEST_CASE("a movie without dialogue is one single gap") {
  CHECK(adpipe::find_gaps({}, 30.0, 1.0) ==
        std::vector<TimeInterval>{{0.0, 30.0}});
  CHECK(adpipe::find_gaps({}, 0.5, 1.0).empty());
}

TEST_CASE("silences shorter than the minimum are dropped, exact length kept") {
  const std::vector<TimedText> subs = {sub(0, 5), sub(5.5, 8)};
  CHECK(adpipe::find_gaps(subs, 10.0, 1.0) ==
        std::vector<TimeInterval>{{8.0, 10.0}});

  const std::vector<TimedText> exact = {sub(0, 5), sub(6, 10)};
  CHECK(adpipe::find_gaps(exact, 10.0, 1.0) ==
        std::vector<TimeInterval>{{5.0, 6.0}});
}

TEST_CASE("a leading silence counts as a gap") {
  CHECK(adpipe::find_gaps({sub(3, 5)}, 10.0, 1.0) ==
        std::vector<TimeInterval>{{0.0, 3.0}, {5.0, 10.0}});
}

TEST_CASE("unsorted subtitles are rejected unless sorting is requested") {
  const std::vector<TimedText> subs = {sub(10, 12), sub(0, 5)};
  CHECK_THROWS_WITH_AS(adpipe::find_gaps(subs, 20.0, 1.0),
                       doctest::Contains("not sorted"), adpipe::InvariantError);
  CHECK(adpipe::find_gaps(subs, 20.0, 1.0, true) ==
        std::vector<TimeInterval>{{5.0, 10.0}, {12.0, 20.0}});
}

TEST_CASE("find_gaps validates spans and parameters") {
  CHECK_THROWS_AS(adpipe::find_gaps({sub(5, 5)}, 10.0, 1.0),
                  adpipe::InvariantError);
  CHECK_THROWS_AS(adpipe::find_gaps({sub(0, 11)}, 10.0, 1.0),
                  adpipe::InvariantError);
  CHECK_THROWS_AS(adpipe::find_gaps({}, 0.0, 1.0), adpipe::InvariantError);
  CHECK_THROWS_AS(adpipe::find_gaps({}, 10.0, 0.0), adpipe::InvariantError);
}

TEST_CASE("gaps, slivers and speech tile the whole timeline") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const double duration = 20.0 + (rng() % 100) / 10.0;
    std::vector<TimedText> subs;
    const int count = static_cast<int>(rng() % 8);
    for (int i = 0; i < count; ++i) {
      const double start = (rng() % 1800) / 100.0;
      const double length = 0.1 + (rng() % 300) / 100.0;
      subs.push_back(sub(start, std::min(start + length, duration)));
      if (subs.back().end_s <= subs.back().start_s) subs.pop_back();
    }
    const double min_gap = 0.5 + (rng() % 20) / 10.0;
    const oracle::GapLayout want = oracle::gap_layout(subs, duration, min_gap);
    const std::vector<TimeInterval> got =
        adpipe::find_gaps(subs, duration, min_gap, true);

    REQUIRE(got.size() == want.gaps.size());
    double covered = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].start_s == doctest::Approx(want.gaps[i].first));
      CHECK(got[i].end_s == doctest::Approx(want.gaps[i].second));
      CHECK(got[i].end_s - got[i].start_s >= min_gap);
      covered += got[i].end_s - got[i].start_s;
    }
    for (const auto& [a, b] : want.merged) covered += b - a;
    for (const auto& [a, b] : want.slivers) covered += b - a;
    CHECK(covered == doctest::Approx(duration).epsilon(1e-9));
  }
}

TEST_CASE("description types partition by who is named and recognized") {
  const adpipe::QueryBank bank = cast_bank({"Ryan", "Alex", "Natalie"});
  const std::set<std::string> recognized = {"Ryan"};

  CHECK(adpipe::tag_ad_type("Ryan looks around.", bank, recognized) ==
        AdType::kType1);
  CHECK(adpipe::tag_ad_type("Alex hides.", bank, recognized) == AdType::kType2);
  CHECK(adpipe::tag_ad_type("A door closes.", bank, recognized) ==
        AdType::kType3);
  CHECK(adpipe::tag_ad_type("A door closes.", bank, {}) == AdType::kNone);
  // A recognized name beats an unrecognized one when both appear.
  CHECK(adpipe::tag_ad_type("Ryan follows Alex.", bank, recognized) ==
        AdType::kType1);
}

TEST_CASE("name matching is whole-word and case-insensitive") {
  const adpipe::QueryBank bank = cast_bank({"Ann"});
  CHECK(adpipe::tag_ad_type("ANN waves.", bank, {"Ann"}) == AdType::kType1);
  CHECK(adpipe::tag_ad_type("ann, smiling, waves.", bank, {"Ann"}) ==
        AdType::kType1);
  // "Anniversary" must not count as a mention of Ann.
  CHECK(adpipe::tag_ad_type("An anniversary party.", bank, {"Ann"}) ==
        AdType::kType3);
  CHECK(adpipe::tag_ad_type("An anniversary party.", bank, {}) ==
        AdType::kNone);
}

TEST_CASE("tagging needs a non-empty cast") {
  CHECK_THROWS_AS(adpipe::tag_ad_type("text", adpipe::QueryBank{}, {}),
                  adpipe::InvariantError);
}

TEST_CASE("keyframes start at the clip and stop before its end") {
  CHECK(adpipe::keyframe_indices(0.0, 2.0, 30.0, 15) ==
        std::vector<int>{0, 15, 30, 45});
  CHECK(adpipe::keyframe_indices(2.0, 5.0, 30.0, 15) ==
        std::vector<int>{60, 75, 90, 105, 120, 135});
  // The first index is always kept, even when the clip is shorter than one
  // stride.
  CHECK(adpipe::keyframe_indices(1.0, 1.2, 30.0, 15) == std::vector<int>{30});
  CHECK(adpipe::keyframe_indices(0.0, 0.1, 30.0, 15) == std::vector<int>{0});
  CHECK(adpipe::keyframe_indices(0.0, 0.2, 30.0, 1) ==
        std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("keyframe sampling validates its arguments") {
  CHECK_THROWS_AS(adpipe::keyframe_indices(2.0, 2.0, 30.0, 15),
                  adpipe::InvariantError);
  CHECK_THROWS_AS(adpipe::keyframe_indices(0.0, 1.0, 0.0, 15),
                  adpipe::InvariantError);
  CHECK_THROWS_AS(adpipe::keyframe_indices(0.0, 1.0, 30.0, 0),
                  adpipe::InvariantError);
}

TEST_CASE("subrip blocks parse with optional counters and either separator") {
  std::istringstream in(
      "1\r\n"
      "00:00:01,000 --> 00:00:02,500\r\n"
      "First line\r\n"
      "second line\r\n"
      "\r\n"
      "00:01:00.250 --> 00:01:02.000\r\n"
      "No counter here\r\n"
      "\r\n"
      "\r\n"
      "2\r\n"
      "01:02:03,004 --> 01:02:04,000\r\n"
      "Last\r\n");
  const std::vector<TimedText> cues = adpipe::parse_srt(in, "demo.srt");
  REQUIRE(cues.size() == 3);
  CHECK(cues[0].start_s == doctest::Approx(1.0));
  CHECK(cues[0].end_s == doctest::Approx(2.5));
  CHECK(cues[0].text == "First line second line");
  CHECK(cues[0].kind == adpipe::TextKind::kSubtitle);
  CHECK(cues[1].start_s == doctest::Approx(60.25));
  CHECK(cues[1].text == "No counter here");
  CHECK(cues[2].start_s == doctest::Approx(3723.004));
}

TEST_CASE("a byte order mark before the first cue is ignored") {
  std::istringstream in(
      "\xEF\xBB\xBF" "1\n"
      "00:00:00,000 --> 00:00:01,000\n"
      "Hello\n");
  const std::vector<TimedText> cues = adpipe::parse_srt(in, "bom.srt");
  REQUIRE(cues.size() == 1);
  CHECK(cues[0].text == "Hello");
}

TEST_CASE("malformed subtitle files report the source and line") {
  std::istringstream missing_arrow(
      "1\n"
      "00:00:01,000 00:00:02,000\n"
      "text\n");
  CHECK_THROWS_WITH_AS(adpipe::parse_srt(missing_arrow, "bad.srt"),
                       doctest::Contains("bad.srt:2"), adpipe::InputError);

  std::istringstream bad_stamp(
      "00:00:xx,000 --> 00:00:02,000\n"
      "text\n");
  CHECK_THROWS_WITH_AS(adpipe::parse_srt(bad_stamp, "bad.srt"),
                       doctest::Contains("malformed timestamp"),
                       adpipe::InputError);

  std::istringstream inverted(
      "00:00:05,000 --> 00:00:02,000\n"
      "text\n");
  CHECK_THROWS_AS(adpipe::parse_srt(inverted, "bad.srt"), adpipe::InputError);

  std::istringstream no_text("00:00:01,000 --> 00:00:02,000\n\n");
  CHECK_THROWS_WITH_AS(adpipe::parse_srt(no_text, "bad.srt"),
                       doctest::Contains("no text"), adpipe::InputError);

  std::istringstream dangling_counter("7\n");
  CHECK_THROWS_AS(adpipe::parse_srt(dangling_counter, "bad.srt"),
                  adpipe::InputError);
}

TEST_CASE("the bundled subtitle fixture parses to the expected cues") {
  // Keep in sync with tests/fixtures/subtitles.srt.
  std::istringstream in(
      "1\r\n"
      "00:00:00,000 --> 00:00:02,000\r\n"
      "Where were you last night?\r\n"
      "\r\n"
      "2\r\n"
      "00:00:01,200 --> 00:00:01,800\r\n"
      "I was at the station.\r\n"
      "\r\n"
      "3\r\n"
      "00:00:05,000 --> 00:00:06,000\r\n"
      "Don't follow me.\r\n");
  const std::vector<TimedText> cues = adpipe::parse_srt(in, "subtitles.srt");
  REQUIRE(cues.size() == 3);
  CHECK(adpipe::find_gaps(cues, 12.0, 1.0) ==
        std::vector<TimeInterval>{{2.0, 5.0}, {6.0, 12.0}});
}
