#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "adpipe/config.hpp"
#include "adpipe/errors.hpp"
#include "adpipe/io.hpp"
#include "adpipe/pipeline.hpp"
#include "adpipe/prompt.hpp"
#include "adpipe/query_bank.hpp"
#include "adpipe/recognition.hpp"
#include "adpipe/redundancy.hpp"
#include "adpipe/segmenter.hpp"
#include "adpipe/token_merge.hpp"
#include "adpipe/track.hpp"
#include "json.hpp"

namespace {

using adpipe::PipelineConfig;

constexpr const char* kEnvPrefix = "ADPIPE_";

// One option pointer per config field, so post-parse resolution can tell
// which flags were actually given.
struct ConfigFlags {
  PipelineConfig values;
  std::string config_path;
  std::vector<std::pair<std::string, CLI::Option*>> options;
};

std::shared_ptr<ConfigFlags> add_config_flags(CLI::App* cmd) {
  auto flags = std::make_shared<ConfigFlags>();
  cmd->add_option("--config", flags->config_path,
                  "Flat key=value config file applied before env and flags");
  auto track = [&](const std::string& key, CLI::Option* opt) {
    flags->options.emplace_back(key, opt);
  };
  track("u", cmd->add_option("--u", flags->values.u,
                             "Recognition threshold on squared distance"));
  track("theta", cmd->add_option("--theta", flags->values.theta,
                                 "Redundancy similarity cutoff"));
  track("mu", cmd->add_option("--mu", flags->values.mu,
                              "Token budget after merging"));
  track("k_clusters", cmd->add_option("--k_clusters", flags->values.k_clusters,
                                      "Candidate clusters per character"));
  track("K_ctx", cmd->add_option("--K_ctx", flags->values.K_ctx,
                                 "Propagation context FIFO capacity"));
  track("alpha", cmd->add_option("--alpha", flags->values.alpha,
                                 "Propagation embedding weight"));
  track("tau_assoc", cmd->add_option("--tau_assoc", flags->values.tau_assoc,
                                     "Propagation association threshold"));
  track("n_ads", cmd->add_option("--n_ads", flags->values.n_ads,
                                 "Prior descriptions per clip"));
  track("min_gap_s", cmd->add_option("--min_gap_s", flags->values.min_gap_s,
                                     "Minimum dialogue-free clip length"));
  track("seed", cmd->add_option("--seed", flags->values.seed, "Master RNG seed"));
  track("epsilon", cmd->add_option("--epsilon", flags->values.epsilon,
                                   "Bank objective stabilizer"));
  return flags;
}

std::string env_name(const std::string& key) {
  std::string name = kEnvPrefix;
  for (char c : key) name.push_back(static_cast<char>(std::toupper(c)));
  return name;
}

// Precedence: defaults < config file < environment < explicit flags.
PipelineConfig resolve_config(const ConfigFlags& flags) {
  PipelineConfig cfg;
  if (!flags.config_path.empty()) cfg = adpipe::load_config(flags.config_path, cfg);
  for (const auto& [key, option] : flags.options) {
    const std::string variable = env_name(key);
    if (const char* value = std::getenv(variable.c_str())) {
      adpipe::apply_config_entry(cfg, key, value, "environment " + variable);
    }
  }
  for (const auto& [key, option] : flags.options) {
    if (option->count() == 0) continue;
    adpipe::apply_config_entry(cfg, key, option->results().front(),
                               "flag --" + key);
  }
  adpipe::validate_config(cfg);
  std::cerr << "# resolved config\n" << adpipe::echo_config(cfg);
  return cfg;
}

template <typename Fn>
void with_output(const std::string& path, Fn fn) {
  if (path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw adpipe::InputError("cannot open '" + path + "' for writing");
  fn(out);
}

template <typename Loader>
auto load_from(const std::string& path, Loader loader) {
  if (path == "-") return loader(std::cin, std::string("<stdin>"));
  std::ifstream in(path);
  if (!in) throw adpipe::InputError("cannot open '" + path + "' for reading");
  return loader(in, path);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      if (!current.empty()) items.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) items.push_back(std::move(current));
  return items;
}

std::vector<double> parse_threshold_list(const std::string& text) {
  std::vector<double> values;
  for (const std::string& item : split_list(text)) {
    char* end = nullptr;
    const double value = std::strtod(item.c_str(), &end);
    if (end == item.c_str() || *end != '\0') {
      throw adpipe::InputError("threshold '" + item + "' is not a number");
    }
    values.push_back(value);
  }
  return values;
}

const char* ad_type_name(adpipe::AdType type) {
  switch (type) {
    case adpipe::AdType::kType1: return "1";
    case adpipe::AdType::kType2: return "2";
    case adpipe::AdType::kType3: return "3";
    case adpipe::AdType::kNone: return "none";
  }
  return "none";
}

void write_prompt_rows(const adpipe::PipelineResult& result, std::ostream& out) {
  using nlohmann::ordered_json;
  for (const adpipe::ClipResult& clip : result.clips) {
    ordered_json characters = ordered_json::array();
    for (const std::string& name : clip.characters) characters.push_back(name);
    ordered_json row{{"start_s", clip.clip.start_s},
                     {"end_s", clip.clip.end_s},
                     {"characters", std::move(characters)},
                     {"text_prior", clip.text_prior},
                     {"prompt", clip.prompt.text}};
    out << row.dump() << '\n';
  }
}

void write_score_rows(const std::vector<adpipe::ScoreResult>& scores,
                      std::ostream& out) {
  using nlohmann::ordered_json;
  for (const adpipe::ScoreResult& score : scores) {
    ordered_json row{{"id", score.id},
                     {"score", score.score},
                     {"valid_count", score.valid_count}};
    out << row.dump() << '\n';
  }
}

void register_build_bank(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "build-bank", "Cluster portraits and pick one query per character");
  auto flags = add_config_flags(cmd);
  auto portraits = std::make_shared<std::string>();
  auto movie_id = std::make_shared<std::string>();
  auto out = std::make_shared<std::string>("-");
  cmd->add_option("--portraits", *portraits, "Portrait JSONL")->required();
  cmd->add_option("--movie-id", *movie_id, "Movie identifier")->required();
  cmd->add_option("--out", *out, "Output bank JSON ('-' for stdout)");
  cmd->callback([=]() {
    const PipelineConfig cfg = resolve_config(*flags);
    const auto sets = load_from(*portraits, [](std::istream& in, const std::string& name) {
      return adpipe::io::load_portraits(in, name);
    });
    const adpipe::QueryBank bank =
        adpipe::build_bank(*movie_id, sets, cfg.k_clusters,
                           static_cast<std::uint64_t>(cfg.seed), cfg.epsilon);
    with_output(*out, [&](std::ostream& os) { adpipe::io::save_bank(bank, os); });
  });
}

void register_recognize(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "recognize", "Label detections against a query bank, frame by frame");
  auto flags = add_config_flags(cmd);
  auto detections = std::make_shared<std::string>();
  auto bank_path = std::make_shared<std::string>();
  auto out = std::make_shared<std::string>("-");
  cmd->add_option("--detections", *detections, "Detection JSONL")->required();
  cmd->add_option("--bank", *bank_path, "Query bank JSON")->required();
  cmd->add_option("--out", *out, "Output JSONL ('-' for stdout)");
  cmd->callback([=]() {
    const PipelineConfig cfg = resolve_config(*flags);
    const auto dets = load_from(*detections, [](std::istream& in, const std::string& name) {
      return adpipe::io::load_detections(in, name);
    });
    const adpipe::QueryBank bank = adpipe::io::load_bank(*bank_path);
    const adpipe::DetectionTimeline timeline =
        adpipe::io::build_timeline(dets, std::nullopt);
    std::vector<adpipe::io::FrameRecognition> frames;
    for (const adpipe::FrameDetections& frame : timeline.frames) {
      frames.push_back(
          {frame.frame_index, adpipe::recognize_frame(frame.detections, bank, cfg.u)});
    }
    with_output(*out, [&](std::ostream& os) { adpipe::io::save_recognition(frames, os); });
  });
}

void register_sweep(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "sweep", "Accuracy and unknown rate across recognition thresholds");
  auto flags = add_config_flags(cmd);
  auto detections = std::make_shared<std::string>();
  auto bank_path = std::make_shared<std::string>();
  auto thresholds = std::make_shared<std::string>();
  auto out = std::make_shared<std::string>("-");
  cmd->add_option("--detections", *detections, "Labeled detection JSONL")->required();
  cmd->add_option("--bank", *bank_path, "Query bank JSON")->required();
  cmd->add_option("--thresholds", *thresholds, "Comma-separated ascending list")
      ->required();
  cmd->add_option("--out", *out, "Output CSV ('-' for stdout)");
  cmd->callback([=]() {
    resolve_config(*flags);
    const auto dataset = load_from(*detections, [](std::istream& in, const std::string& name) {
      return adpipe::io::load_labeled_detections(in, name);
    });
    const adpipe::QueryBank bank = adpipe::io::load_bank(*bank_path);
    const std::vector<adpipe::SweepPoint> sweep =
        adpipe::sweep_threshold(dataset, bank, parse_threshold_list(*thresholds));
    with_output(*out, [&](std::ostream& os) {
      os << "u,accuracy,unknown_rate\n";
      for (const adpipe::SweepPoint& point : sweep) {
        os << adpipe::io::format_double(point.u) << ','
           << adpipe::io::format_double(point.accuracy) << ','
           << adpipe::io::format_double(point.unknown_rate) << '\n';
      }
    });
  });
}

void register_propagate(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "propagate", "Spread anchored identities across keyframes");
  auto flags = add_config_flags(cmd);
  auto detections = std::make_shared<std::string>();
  auto anchors_path = std::make_shared<std::string>();
  auto out = std::make_shared<std::string>("-");
  auto prompt_capacity = std::make_shared<int>(8);
  cmd->add_option("--detections", *detections, "Detection JSONL")->required();
  cmd->add_option("--anchors", *anchors_path, "Anchor JSONL")->required();
  cmd->add_option("--K_prompt", *prompt_capacity, "Prompt FIFO capacity");
  cmd->add_option("--out", *out, "Output JSONL ('-' for stdout)");
  cmd->callback([=]() {
    const PipelineConfig cfg = resolve_config(*flags);
    const auto dets = load_from(*detections, [](std::istream& in, const std::string& name) {
      return adpipe::io::load_detections(in, name);
    });
    const auto anchors = load_from(*anchors_path, [](std::istream& in, const std::string& name) {
      return adpipe::io::load_anchors(in, name);
    });
    adpipe::PropagationParams params;
    params.context_capacity = cfg.K_ctx;
    params.prompt_capacity = *prompt_capacity;
    params.alpha = cfg.alpha;
    params.tau_assoc = cfg.tau_assoc;
    const adpipe::PropagationResult result = adpipe::propagate(
        adpipe::io::build_timeline(dets, std::nullopt), anchors, params);
    with_output(*out, [&](std::ostream& os) { adpipe::io::save_tracks(result.tracks, os); });
  });
}

void register_segment(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "segment", "Cut dialogue-free clips from subtitles");
  auto flags = add_config_flags(cmd);
  auto subtitles = std::make_shared<std::string>();
  auto history_path = std::make_shared<std::string>();
  auto movie_id = std::make_shared<std::string>("movie");
  auto duration = std::make_shared<double>(0.0);
  auto sort_input = std::make_shared<bool>(false);
  auto out = std::make_shared<std::string>("-");
  cmd->add_option("--subtitles", *subtitles, "Subtitle file (.srt or JSONL)")
      ->required();
  cmd->add_option("--duration", *duration, "Movie duration in seconds")->required();
  cmd->add_option("--movie-id", *movie_id, "Movie identifier");
  cmd->add_option("--history", *history_path,
                  "Timed-text JSONL with prior descriptions");
  cmd->add_flag("--sort", *sort_input, "Sort subtitles instead of rejecting");
  cmd->add_option("--out", *out, "Output clip JSONL ('-' for stdout)");
  cmd->callback([=]() {
    const PipelineConfig cfg = resolve_config(*flags);
    const std::vector<adpipe::TimedText> subs = adpipe::io::load_subtitles(*subtitles);
    std::vector<adpipe::TimedText> history = subs;
    if (!history_path->empty()) {
      const auto extra = adpipe::io::load_timed_text(*history_path);
      history.insert(history.end(), extra.begin(), extra.end());
    }
    std::stable_sort(history.begin(), history.end(),
                     [](const adpipe::TimedText& a, const adpipe::TimedText& b) {
                       return a.start_s < b.start_s;
                     });
    const auto gaps = adpipe::find_gaps(subs, *duration, cfg.min_gap_s, *sort_input);
    std::vector<adpipe::ClipSpec> clips;
    clips.reserve(gaps.size());
    for (const adpipe::TimeInterval& gap : gaps) {
      adpipe::ClipSpec clip;
      clip.movie_id = *movie_id;
      clip.start_s = gap.start_s;
      clip.end_s = gap.end_s;
      const adpipe::TextPriorSelection prior =
          adpipe::select_text_prior(history, gap.start_s, cfg.n_ads);
      clip.prior_ads = prior.ads;
      clip.prior_subtitles = prior.subtitles;
      clips.push_back(std::move(clip));
    }
    with_output(*out, [&](std::ostream& os) { adpipe::io::save_clip_specs(clips, os); });
  });
}

void register_tag_type(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "tag-type", "Classify one description against the cast");
  auto flags = add_config_flags(cmd);
  auto ad_text = std::make_shared<std::string>();
  auto bank_path = std::make_shared<std::string>();
  auto recognized = std::make_shared<std::string>();
  auto out = std::make_shared<std::string>("-");
  cmd->add_option("--ad", *ad_text, "Description text")->required();
  cmd->add_option("--bank", *bank_path, "Query bank JSON")->required();
  cmd->add_option("--recognized", *recognized,
                  "Comma-separated recognized character names");
  cmd->add_option("--out", *out, "Output ('-' for stdout)");
  cmd->callback([=]() {
    resolve_config(*flags);
    const adpipe::QueryBank bank = adpipe::io::load_bank(*bank_path);
    std::set<std::string> names;
    for (const std::string& name : split_list(*recognized)) names.insert(name);
    const adpipe::AdType type = adpipe::tag_ad_type(*ad_text, bank, names);
    with_output(*out, [&](std::ostream& os) { os << ad_type_name(type) << '\n'; });
  });
}

void register_prompt(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "prompt", "Assemble the instruction prompt for a clip");
  auto flags = add_config_flags(cmd);
  auto templates_path = std::make_shared<std::string>();
  auto names_list = std::make_shared<std::string>();
  auto history_path = std::make_shared<std::string>();
  auto current_start = std::make_shared<double>(0.0);
  auto out = std::make_shared<std::string>("-");
  cmd->add_option("--templates", *templates_path, "Template JSON")->required();
  cmd->add_option("--names", *names_list, "Comma-separated character names");
  cmd->add_option("--history", *history_path, "Timed-text JSONL for the prior");
  cmd->add_option("--current-start", *current_start,
                  "Clip start, bounds the prior window");
  cmd->add_option("--out", *out, "Output ('-' for stdout)");
  cmd->callback([=]() {
    const PipelineConfig cfg = resolve_config(*flags);
    const adpipe::PromptTemplateSet templates =
        adpipe::io::load_templates(*templates_path);
    const adpipe::AssembledPrompt prompt =
        adpipe::assemble_prompt(split_list(*names_list), templates);
    std::optional<std::string> prior;
    if (!history_path->empty()) {
      auto history = adpipe::io::load_timed_text(*history_path);
      std::stable_sort(history.begin(), history.end(),
                       [](const adpipe::TimedText& a, const adpipe::TimedText& b) {
                         return a.start_s < b.start_s;
                       });
      prior = adpipe::build_text_prior(history, *current_start, cfg.n_ads);
    }
    with_output(*out, [&](std::ostream& os) {
      if (prior && !prior->empty()) os << *prior << '\n';
      os << prompt.text << '\n';
    });
  });
}

void register_merge_tokens(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "merge-tokens", "Pool similar adjacent tokens down to the budget");
  auto flags = add_config_flags(cmd);
  auto tokens_path = std::make_shared<std::string>();
  auto out = std::make_shared<std::string>("-");
  cmd->add_option("--tokens", *tokens_path, "Token JSONL")->required();
  cmd->add_option("--out", *out, "Output JSONL ('-' for stdout)");
  cmd->callback([=]() {
    const PipelineConfig cfg = resolve_config(*flags);
    const adpipe::TokenSequence seq =
        load_from(*tokens_path, [](std::istream& in, const std::string& name) {
          return adpipe::io::load_tokens(in, name);
        });
    const adpipe::MergeResult merged = adpipe::merge_tokens(seq, cfg.mu);
    with_output(*out, [&](std::ostream& os) {
      adpipe::io::save_tokens(merged.tokens, &merged.runs, os);
    });
  });
}

void register_score(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "score", "Redundancy-score generated captions against ground truth");
  auto flags = add_config_flags(cmd);
  auto pairs_path = std::make_shared<std::string>();
  auto vectors_path = std::make_shared<std::string>();
  auto stopwords_path = std::make_shared<std::string>();
  auto out = std::make_shared<std::string>("-");
  cmd->add_option("--pairs", *pairs_path, "Caption pair JSONL")->required();
  cmd->add_option("--vectors", *vectors_path, "Word vector JSONL")->required();
  cmd->add_option("--stopwords", *stopwords_path, "Stopword list")->required();
  cmd->add_option("--out", *out, "Output JSONL ('-' for stdout)");
  cmd->callback([=]() {
    const PipelineConfig cfg = resolve_config(*flags);
    const auto pairs = load_from(*pairs_path, [](std::istream& in, const std::string& name) {
      return adpipe::io::load_score_pairs(in, name);
    });
    const adpipe::WordVectorLookup lookup =
        adpipe::io::load_lookup(*vectors_path, *stopwords_path);
    std::vector<adpipe::ScoreResult> scores;
    scores.reserve(pairs.size());
    for (const adpipe::io::ScorePair& pair : pairs) {
      const adpipe::RedundancyReport report = adpipe::sentence_redundancy(
          pair.generated, pair.ground_truth, lookup, cfg.theta);
      scores.push_back({pair.id, report.score, report.valid_count});
    }
    with_output(*out, [&](std::ostream& os) { write_score_rows(scores, os); });
  });
}

void register_pipeline(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "pipeline", "Segment, recognize, propagate, prompt and optionally score");
  auto flags = add_config_flags(cmd);
  auto subtitles = std::make_shared<std::string>();
  auto detections = std::make_shared<std::string>();
  auto bank_path = std::make_shared<std::string>();
  auto templates_path = std::make_shared<std::string>();
  auto history_path = std::make_shared<std::string>();
  auto pairs_path = std::make_shared<std::string>();
  auto vectors_path = std::make_shared<std::string>();
  auto stopwords_path = std::make_shared<std::string>();
  auto out_dir = std::make_shared<std::string>();
  auto movie_id = std::make_shared<std::string>("movie");
  auto duration = std::make_shared<double>(0.0);
  auto fps = std::make_shared<double>(30.0);
  auto stride = std::make_shared<int>(15);
  auto threads = std::make_shared<int>(1);
  auto prompt_capacity = std::make_shared<int>(8);
  cmd->add_option("--subtitles", *subtitles, "Subtitle file (.srt or JSONL)")
      ->required();
  cmd->add_option("--duration", *duration, "Movie duration in seconds")->required();
  cmd->add_option("--detections", *detections, "Detection JSONL")->required();
  cmd->add_option("--bank", *bank_path, "Query bank JSON")->required();
  cmd->add_option("--templates", *templates_path, "Template JSON")->required();
  cmd->add_option("--history", *history_path,
                  "Timed-text JSONL with prior descriptions");
  cmd->add_option("--pairs", *pairs_path, "Caption pair JSONL to score");
  cmd->add_option("--vectors", *vectors_path, "Word vector JSONL");
  cmd->add_option("--stopwords", *stopwords_path, "Stopword list");
  cmd->add_option("--out-dir", *out_dir, "Output directory")->required();
  cmd->add_option("--movie-id", *movie_id, "Movie identifier");
  cmd->add_option("--fps", *fps, "Frames per second");
  cmd->add_option("--stride", *stride, "Keyframe stride");
  cmd->add_option("--threads", *threads, "Worker threads (never changes output)");
  cmd->add_option("--K_prompt", *prompt_capacity, "Prompt FIFO capacity");
  cmd->callback([=]() {
    adpipe::PipelineOptions options;
    options.config = resolve_config(*flags);
    options.movie_id = *movie_id;
    options.duration_s = *duration;
    options.fps = *fps;
    options.stride = *stride;
    options.threads = *threads;
    options.prompt_capacity = *prompt_capacity;

    adpipe::PipelineInputs inputs;
    inputs.subtitles = adpipe::io::load_subtitles(*subtitles);
    if (!history_path->empty()) {
      inputs.ad_history = adpipe::io::load_timed_text(*history_path);
    }
    inputs.bank = adpipe::io::load_bank(*bank_path);
    inputs.detections = adpipe::io::load_detections(*detections);
    inputs.templates = adpipe::io::load_templates(*templates_path);
    if (!pairs_path->empty()) {
      if (vectors_path->empty() || stopwords_path->empty()) {
        throw adpipe::InputError(
            "--pairs needs --vectors and --stopwords for scoring");
      }
      inputs.score_pairs = adpipe::io::load_score_pairs(*pairs_path);
      inputs.lookup = adpipe::io::load_lookup(*vectors_path, *stopwords_path);
    }

    const adpipe::PipelineResult result = adpipe::run_pipeline(inputs, options);

    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(*out_dir, ec);
    if (ec) {
      throw adpipe::InputError("cannot create output directory '" + *out_dir +
                               "': " + ec.message());
    }
    auto at = [&](const char* name) { return (fs::path(*out_dir) / name).string(); };

    std::vector<adpipe::ClipSpec> clips;
    std::vector<adpipe::io::FrameRecognition> recognition;
    std::vector<adpipe::Track> tracks;
    for (const adpipe::ClipResult& clip : result.clips) {
      clips.push_back(clip.clip);
      recognition.insert(recognition.end(), clip.recognition.begin(),
                         clip.recognition.end());
      tracks.insert(tracks.end(), clip.tracks.begin(), clip.tracks.end());
    }
    adpipe::io::save_clip_specs(clips, at("clips.jsonl"));
    with_output(at("recognition.jsonl"), [&](std::ostream& os) {
      adpipe::io::save_recognition(recognition, os);
    });
    adpipe::io::save_tracks(tracks, at("tracks.jsonl"));
    with_output(at("prompts.jsonl"),
                [&](std::ostream& os) { write_prompt_rows(result, os); });
    if (inputs.score_pairs) {
      with_output(at("scores.jsonl"),
                  [&](std::ostream& os) { write_score_rows(result.scores, os); });
    }
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic toolkit for character-centric movie "
               "audio-description pipelines"};
  app.require_subcommand(1);
  register_build_bank(app);
  register_recognize(app);
  register_sweep(app);
  register_propagate(app);
  register_segment(app);
  register_tag_type(app);
  register_prompt(app);
  register_merge_tokens(app);
  register_score(app);
  register_pipeline(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const adpipe::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const adpipe::InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
