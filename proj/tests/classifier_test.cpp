#include "guideme/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "guideme/error.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace guideme {
namespace {

namespace fs = std::filesystem;
using testing::SyntheticFixture;

std::vector<std::vector<std::vector<double>>> oracle_refs(const ReferenceIndex& index) {
  std::vector<std::vector<std::vector<double>>> refs;
  for (const auto& group : index.entries()) {
    auto& g = refs.emplace_back();
    for (const auto& e : group) g.emplace_back(e.descriptor.values().begin(), e.descriptor.values().end());
  }
  return refs;
}

std::vector<testing::OracleScore> oracle_scores(const fs::path& image, const ReferenceIndex& index) {
  const auto img = decode_image(read_file_bytes(image));
  return testing::brute_classify(testing::brute_descriptor(img, 4, 8), index.manifest().labels,
                                 oracle_refs(index), index.manifest().descriptor_params.temperature);
}

ImageDescriptor unit(std::vector<double> v) {
  double n = 0;
  for (double x : v) n += x * x;
  for (double& x : v) x /= std::sqrt(n);
  return ImageDescriptor(std::move(v));
}

ReferenceIndex toy_index(std::vector<std::string> labels,
                         std::vector<std::vector<IndexEntry>> entries, double tau = 0.05) {
  ModelManifest m;
  m.labels = std::move(labels);
  m.descriptor_params = {1, 1, tau};  // dimension 6
  return ReferenceIndex(m, std::move(entries));
}

TEST(Classify, SingleLabelHasConfidenceOne) {
  const auto idx = toy_index({"Only"}, {{{"x", unit({1, 0, 0, 0, 0, 0})}}});
  const auto scores = classify(unit({0, 1, 0, 0, 0, 0}), idx);
  ASSERT_EQ(scores.size(), 1u);
  EXPECT_EQ(scores[0].confidence, 1.0);
}

TEST(Classify, EquidistantLabelsSplitEvenly) {
  const auto idx = toy_index({"A", "B"}, {{{"a", unit({1, 0, 0, 0, 0, 0})}},
                                          {{"b", unit({0, 1, 0, 0, 0, 0})}}});
  const auto scores = classify(unit({0, 0, 1, 0, 0, 0}), idx);
  ASSERT_EQ(scores.size(), 2u);
  EXPECT_EQ(scores[0].confidence, 0.5);
  EXPECT_EQ(scores[1].confidence, 0.5);
  EXPECT_EQ(scores[0].label, "A");  // tie broken by label
}

TEST(Classify, ExactMatchApproachesOneAsTemperatureShrinks) {
  const std::vector<std::vector<IndexEntry>> entries = {{{"a", unit({1, 0, 0, 0, 0, 0})}},
                                                        {{"b", unit({1, 1, 0, 0, 0, 0})}}};
  double previous = 0.0;
  for (double tau : {0.5, 0.1, 0.05, 0.01}) {
    const auto scores = classify(unit({1, 0, 0, 0, 0, 0}), toy_index({"A", "B"}, entries, tau));
    EXPECT_EQ(scores[0].label, "A");
    EXPECT_GT(scores[0].confidence, previous);
    previous = scores[0].confidence;
  }
  EXPECT_GT(previous, 1.0 - 1e-12);
}

TEST(Classify, EmptyIndexIsInvalidState) {
  try {
    classify(unit({1, 0, 0, 0, 0, 0}), ReferenceIndex());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidState);
  }
}

TEST(Classify, UndecodableBytesAreDecodeError) {
  const std::vector<std::uint8_t> junk(100, 7);
  try {
    classify(junk, SyntheticFixture::get().index);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDecodeError);
  }
}

TEST(Classify, AgreesWithBruteForceOracle) {
  const auto& fx = SyntheticFixture::get();
  std::vector<fs::path> probes = {fx.layout.noise_probe};
  for (const auto& label : synth::kLabels) {
    for (const auto& f : fs::directory_iterator(fx.layout.test / label)) probes.push_back(f.path());
  }
  for (const auto& probe : probes) {
    const auto got = classify(read_file_bytes(probe), fx.index);
    const auto want = oracle_scores(probe, fx.index);
    double sum = 0.0;
    for (const auto& s : got) {
      EXPECT_GE(s.confidence, 0.0);
      EXPECT_LE(s.confidence, 1.0);
      sum += s.confidence;
      auto it = std::find_if(want.begin(), want.end(),
                             [&](const auto& w) { return w.label == s.label; });
      ASSERT_NE(it, want.end());
      EXPECT_NEAR(s.confidence, it->confidence, 1e-9) << probe;
    }
    EXPECT_NEAR(sum, 1.0, 1e-9);
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end(), [](const auto& a, const auto& b) {
      return a.confidence > b.confidence;
    }));
  }
}

TEST(Classify, TrainingImageIsConfidentlyItsOwnLabel) {
  const auto& fx = SyntheticFixture::get();
  for (const auto& label : synth::kLabels) {
    const auto file = fx.layout.train / label / "000.png";
    const auto scores = classify(read_file_bytes(file), fx.index);
    EXPECT_EQ(scores[0].label, label);
    EXPECT_GT(scores[0].confidence, 0.8);
  }
}

TEST(Classify, NoiseProbeStaysBelowAcceptance) {
  const auto& fx = SyntheticFixture::get();
  const auto oracle = oracle_scores(fx.layout.noise_probe, fx.index);
  for (const auto& s : oracle) EXPECT_LT(s.confidence, 0.8) << s.label;
}

TEST(Classify, JpegInput) {
  const auto scores = classify(read_file_bytes(testing::sample("kaaba.jpg")),
                               load_index(testing::shipped_index()));
  EXPECT_EQ(scores[0].label, "Kaaba");
}

TEST(NearestNeighborClassifier, DelegatesToIndex) {
  auto idx = std::make_shared<const ReferenceIndex>(SyntheticFixture::get().index);
  const NearestNeighborClassifier clf(idx);
  const auto bytes = read_file_bytes(testing::sample("zamzam.png"));
  EXPECT_EQ(clf.classify(bytes), classify(bytes, *idx));
  EXPECT_EQ(clf.manifest().labels.size(), 3u);
  EXPECT_THROW(NearestNeighborClassifier(std::make_shared<const ReferenceIndex>()), Error);
}

TEST(EvaluateIndex, TrainOnTrainIsPerfect) {
  const auto& fx = SyntheticFixture::get();
  const auto report = evaluate_index(fx.index, fx.layout.train);
  EXPECT_EQ(report.accuracy, 1.0);
  EXPECT_EQ(report.total, 96u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(report.confusion[i][i], 32u);
}

TEST(EvaluateIndex, HeldOutMatchesOracleRun) {
  const auto& fx = SyntheticFixture::get();
  const auto report = evaluate_index(fx.index, fx.layout.test);
  std::size_t oracle_correct = 0;
  std::size_t n = 0;
  for (const auto& label : synth::kLabels) {
    for (const auto& f : fs::directory_iterator(fx.layout.test / label)) {
      auto scores = oracle_scores(f.path(), fx.index);
      auto best = std::max_element(scores.begin(), scores.end(), [](const auto& a, const auto& b) {
        return a.confidence < b.confidence;
      });
      oracle_correct += best->label == label;
      ++n;
    }
  }
  EXPECT_EQ(report.total, n);
  EXPECT_EQ(report.correct, oracle_correct);
  EXPECT_EQ(report.accuracy, double(oracle_correct) / double(n));
  std::size_t total = 0;
  for (const auto& row : report.confusion) for (auto c : row) total += c;
  EXPECT_EQ(total, n);
}

TEST(EvaluateIndex, EmptyTestSetIsValidationError) {
  testing::TempDir dir;
  fs::create_directories(dir / "Kaaba");
  try {
    evaluate_index(SyntheticFixture::get().index, dir.path());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kValidationError);
  }
}

TEST(EvaluateIndex, UnknownLabelIsValidationError) {
  testing::TempDir dir;
  fs::create_directories(dir / "Elsewhere");
  fs::copy_file(testing::sample("kaaba.png"), dir / "Elsewhere/x.png");
  try {
    evaluate_index(SyntheticFixture::get().index, dir.path());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kValidationError);
    EXPECT_NE(std::string(e.what()).find("Elsewhere"), std::string::npos);
  }
}

}  // namespace
}  // namespace guideme
