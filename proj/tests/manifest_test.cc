// Copyright 2026 The edit-lens Authors.
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

#include "edit_lens/manifest.h"

#include <unistd.h>

#include <atomic>
#include <fstream>

#include "gtest/gtest.h"

#include "edit_lens/errors.h"

namespace edit_lens {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class ManifestTest : public ::testing::Test {
 protected:
  void SetUp() override {
    static std::atomic<int> counter{0};
    dir_ = fs::temp_directory_path() /
           ("edit_lens_manifest_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(dir_);
    Write("src.txt", "a b c\nd e\nf\n");
    Write("mt.txt", "a c b\nd\nf g\n");
    Write("pe.conllu",
          "1\ta\ta\tX\t_\t_\t0\troot\t_\t_\n2\tb\tb\tX\t_\t_\t1\tdep\t_\t_\n"
          "3\tc\tc\tX\t_\t_\t1\tdep\t_\t_\n\n"
          "1\td\td\tX\t_\t_\t0\troot\t_\t_\n2\te\te\tX\t_\t_\t1\tdep\t_\t_\n\n"
          "1\tf\tf\tX\t_\t_\t0\troot\t_\t_\n");
    Write("ref.txt", "a b c\nd e\nf\n");
    Write("mt.align", "0-0 1-2 2-1\n0-0\n0-0\n");
    Write("pe.align", "0-0 1-1 2-2\n0-0 1-1\n0-0\n");
    manifest_ = {
        {"source", "src.txt"},
        {"reference", "ref.txt"},
        {"systems",
         {{{"name", "sys"},
           {"output", "mt.txt"},
           {"postedit", "pe.conllu"},
           {"align_source_output", "mt.align"},
           {"align_source_postedit", "pe.align"}}}},
        {"additional_references", {"ref.txt"}},
        {"docs", {{{"id", "d1"}, {"first", 0}, {"last", 1}}, {{"id", "d2"}, {"first", 2}, {"last", 2}}}},
    };
  }
  void TearDown() override { fs::remove_all(dir_); }

  void Write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name) << text;
  }
  fs::path Save() {
    std::ofstream(dir_ / "manifest.json") << manifest_.dump(2);
    return dir_ / "manifest.json";
  }
  std::string LoadError(const LoadOptions& options = {}) {
    try {
      LoadManifest(Save(), options);
    } catch (const InputError& e) {
      return e.what();
    }
    return "";
  }

  fs::path dir_;
  json manifest_;
};

TEST_F(ManifestTest, LoadsEverything) {
  const EvalRun run = LoadManifest(Save());
  EXPECT_EQ(run.size(), 3u);
  ASSERT_EQ(run.systems.size(), 1u);
  EXPECT_FALSE(run.systems[0].annotated);
  EXPECT_TRUE(run.refs.targeted_annotated.at("sys"));
  EXPECT_EQ(run.refs.Targeted("sys")[0].tokens[1].pos, "X");
  EXPECT_EQ(run.refs.additional.size(), 1u);
  EXPECT_TRUE(run.HasAllAlignments());
  EXPECT_EQ(run.manifest.docs.size(), 2u);
  EXPECT_EQ(run.System("sys").segments[2].size(), 2u);
  EXPECT_THROW(run.System("other"), InputError);
}

TEST_F(ManifestTest, ExplicitFormatOverridesExtension) {
  Write("pe.data", "1\ta\ta\tX\t_\t_\t0\troot\t_\t_\n\n1\td\td\tX\t_\t_\t0\troot\t_\t_\n\n"
                   "1\tf\tf\tX\t_\t_\t0\troot\t_\t_\n");
  manifest_["systems"][0]["postedit"] = {{"path", "pe.data"}, {"format", "conllu"}};
  manifest_["systems"][0].erase("align_source_postedit");
  const EvalRun run = LoadManifest(Save());
  EXPECT_EQ(run.refs.Targeted("sys")[0].size(), 1u);
  EXPECT_FALSE(run.HasAllAlignments());
}

TEST_F(ManifestTest, SegmentCountMismatchNamesSystem) {
  Write("mt.txt", "a c b\nd\n");
  const std::string err = LoadError();
  EXPECT_NE(err.find("system sys"), std::string::npos) << err;
  EXPECT_NE(err.find("2 segments, expected 3"), std::string::npos) << err;
}

TEST_F(ManifestTest, MissingFileIsReportedBeforeParsing) {
  manifest_["additional_references"] = {"nope.txt"};
  EXPECT_NE(LoadError().find("nope.txt: file not found"), std::string::npos);
}

TEST_F(ManifestTest, UnknownKeysAreRejected) {
  manifest_["sytems"] = json::array();
  EXPECT_NE(LoadError().find("unknown key 'sytems'"), std::string::npos);
}

TEST_F(ManifestTest, AlignmentOutOfBounds) {
  Write("mt.align", "0-0 1-2 2-5\n0-0\n0-0\n");
  const std::string err = LoadError();
  EXPECT_NE(err.find("mt.align:1"), std::string::npos) << err;
}

TEST_F(ManifestTest, RequireAlignments) {
  manifest_["systems"][0].erase("align_source_output");
  LoadOptions options;
  options.require_alignments = true;
  EXPECT_NE(LoadError(options).find("system sys"), std::string::npos);
  EXPECT_EQ(LoadError(), "");
}

TEST_F(ManifestTest, DocRangeErrors) {
  manifest_["docs"][1]["first"] = 1;
  EXPECT_NE(LoadError().find("doc d2: segment 1 claimed twice (also in doc d1)"),
            std::string::npos);
  manifest_["docs"] = {{{"id", "d1"}, {"first", 0}, {"last", 0}}};
  EXPECT_NE(LoadError().find("segment 1 is not covered"), std::string::npos);
}

TEST_F(ManifestTest, ConfigFromManifestAndOverrides) {
  manifest_["config"] = {{"seed", 7}, {"bins", {10, 20}}};
  LoadOptions options;
  options.config_overrides = {{"seed", 9}};
  const EvalRun run = LoadManifest(Save(), options);
  EXPECT_EQ(run.config.seed, 9u);
  EXPECT_EQ(run.config.bin_edges, (std::vector<std::size_t>{10, 20}));
  manifest_["config"] = {{"colour", 1}};
  EXPECT_NE(LoadError().find("unknown key 'colour'"), std::string::npos);
}

TEST(ValidateDocRangesTest, EmptyAndOutOfRange) {
  EXPECT_NO_THROW(ValidateDocRanges({{"a", 0, 4}, {"b", 5, 9}}, 10));
  EXPECT_THROW(ValidateDocRanges({{"a", 3, 2}}, 10), InputError);
  EXPECT_THROW(ValidateDocRanges({{"a", 0, 10}}, 10), InputError);
  EXPECT_THROW(ValidateDocRanges({{"a", 0, 4}, {"a", 5, 9}}, 10), InputError);
}

TEST(ToyCorpusTest, BundledManifestLoads) {
  const EvalRun run = LoadManifest(fs::path(EDIT_LENS_TOY_DIR) / "manifest.json");
  EXPECT_EQ(run.systems.size(), 4u);
  EXPECT_EQ(run.size(), 50u);
  EXPECT_TRUE(run.HasAllAlignments());
  for (const SystemOutput& s : run.systems) EXPECT_TRUE(s.annotated) << s.system_name;
}

}  // namespace
}  // namespace edit_lens
