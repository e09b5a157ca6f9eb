#include "parasense/serialize.h"

#include <gtest/gtest.h>

#include <sstream>

#include "parasense/corpus.h"
#include "parasense/error.h"
#include "test_support.h"

namespace parasense {
namespace {

using testing::TempDir;

SenseModel sample_model() {
  TrainConfig c;
  c.dim = 5;
  c.t_max = 3;
  c.alpha = 0.25;
  c.d_prime = 1;
  c.seed = 4;
  const Vocabulary v({"fr", "zh"}, {{"bank", 9}, {"river", 6}},
                     {{"banque", 0, 5}, {"rive", 0, 4}, {"yinhang", 1, 3}});
  auto m = init_model(v, c);
  Rng rng(8);
  for (auto& x : m.ctx_en.data_mutable()) x = rng.uniform(-1, 1);
  for (auto& x : m.ctx_fg.data_mutable()) x = rng.uniform(-1, 1);
  m.sticks.row(0)[0] = 7.5;
  m.sticks.row(0)[1] = 1.25;
  m.state.epochs_done = 2;
  m.state.tokens_processed = 12345;
  m.state.rng_state = rng.state();
  return m;
}

std::span<const unsigned char> bytes_of(const std::string& s) {
  return {reinterpret_cast<const unsigned char*>(s.data()), s.size()};
}

TEST(Crc64, CheckValue) {
  const std::string s = "123456789";
  EXPECT_EQ(crc64(bytes_of(s)), 0x995DC9BBDF1939FAull);
}

TEST(Serialize, RoundTripIsExact) {
  const auto m = sample_model();
  const auto back = deserialize_model(bytes_of(serialize_model(m)));
  EXPECT_EQ(back, m);
}

TEST(Serialize, FileRoundTrip) {
  TempDir dir;
  const auto m = sample_model();
  save_model(m, dir.file("m.bin"));
  EXPECT_EQ(load_model(dir.file("m.bin")), m);
}

TEST(Serialize, RejectsBadMagic) {
  auto s = serialize_model(sample_model());
  s[0] = 'X';
  EXPECT_THROW(deserialize_model(bytes_of(s)), ModelFormatError);
}

TEST(Serialize, RejectsUnknownVersion) {
  auto s = serialize_model(sample_model());
  s[4] = 2;
  try {
    deserialize_model(bytes_of(s));
    FAIL();
  } catch (const ModelFormatError& e) {
    EXPECT_NE(std::string(e.what()).find("version"), std::string::npos);
  }
}

TEST(Serialize, RejectsTruncation) {
  const auto s = serialize_model(sample_model());
  for (std::size_t len : {std::size_t{3}, std::size_t{10}, s.size() / 2,
                          s.size() - 1}) {
    EXPECT_THROW(deserialize_model(bytes_of(s.substr(0, len))),
                 ModelFormatError)
        << len;
  }
}

TEST(Serialize, RejectsFlippedByte) {
  auto s = serialize_model(sample_model());
  s[s.size() / 2] ^= 0x10;
  EXPECT_THROW(deserialize_model(bytes_of(s)), ModelFormatError);
}

TEST(Serialize, MissingFileIsDataError) {
  EXPECT_THROW(load_model("/nonexistent/model.bin"), DataError);
}

TEST(ExportText, HeaderAndRowsParseBack) {
  const auto m = sample_model();
  std::ostringstream os;
  export_text(m, os);
  std::istringstream is(os.str());
  std::string line;
  ASSERT_TRUE(std::getline(is, line));
  const auto header = split_whitespace(line);
  ASSERT_EQ(header.size(), 2u);
  std::size_t expected_rows = m.vocab.fg_size();
  for (WordId w = 0; w < m.vocab.en_size(); ++w) {
    expected_rows += active_senses(m, w).size();
  }
  EXPECT_EQ(std::stoul(header[0]), expected_rows);
  EXPECT_EQ(header[1], "5");

  std::size_t rows = 0;
  bool saw_bank_1 = false, saw_yinhang = false;
  while (std::getline(is, line)) {
    ++rows;
    const auto f = split_whitespace(line);
    if (f[0].find('#') != std::string::npos) {
      ASSERT_EQ(f.size(), 7u) << line;
      const double p = std::stod(f[1]);
      EXPECT_GT(p, m.config.epsilon);
      EXPECT_LE(p, 1.0);
      if (f[0] == "bank#1") {
        saw_bank_1 = true;
        for (std::size_t i = 0; i < 5; ++i) {
          EXPECT_NEAR(std::stod(f[2 + i]), m.sense(0, 0)[i], 1e-8);
        }
      }
    } else {
      ASSERT_EQ(f.size(), 6u) << line;
      if (f[0] == "yinhang@zh") saw_yinhang = true;
    }
  }
  EXPECT_EQ(rows, expected_rows);
  EXPECT_TRUE(saw_bank_1);
  EXPECT_TRUE(saw_yinhang);
}

}  // namespace
}  // namespace parasense
