#include "parasense/serialize.h"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <ostream>

#include <boost/crc.hpp>

#include "parasense/error.h"

namespace parasense {

namespace {

using Crc64Xz = boost::crc_optimal<64, 0x42F0E1EBA9EA3693ULL,
                                   0xFFFFFFFFFFFFFFFFULL,
                                   0xFFFFFFFFFFFFFFFFULL, true, true>;

class ByteWriter {
 public:
  void u8(std::uint8_t v) { buf_.push_back(static_cast<char>(v)); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
  void str(const std::string& s) {
    u32(static_cast<std::uint32_t>(s.size()));
    buf_.append(s);
  }
  void reals(std::span<const double> v) {
    u64(v.size());
    if constexpr (std::endian::native == std::endian::little) {
      const auto* p = reinterpret_cast<const char*>(v.data());
      buf_.append(p, v.size() * sizeof(double));
    } else {
      for (double x : v) f64(x);
    }
  }
  void raw(const char* p, std::size_t n) { buf_.append(p, n); }

  std::string& buffer() { return buf_; }

 private:
  std::string buf_;
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const unsigned char> b) : b_(b) {}

  std::uint8_t u8() {
    need(1);
    return b_[pos_++];
  }
  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(u8()) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(u8()) << (8 * i);
    return v;
  }
  double f64() { return std::bit_cast<double>(u64()); }
  std::string str() {
    const auto n = u32();
    need(n);
    std::string s(reinterpret_cast<const char*>(b_.data() + pos_), n);
    pos_ += n;
    return s;
  }
  std::vector<double> reals(std::size_t expected) {
    const auto n = u64();
    if (n != expected) {
      throw ModelFormatError("matrix size " + std::to_string(n) +
                             " does not match header (" +
                             std::to_string(expected) + ")");
    }
    need(n * sizeof(double));
    std::vector<double> v(n);
    if constexpr (std::endian::native == std::endian::little) {
      std::memcpy(v.data(), b_.data() + pos_, n * sizeof(double));
      pos_ += n * sizeof(double);
    } else {
      for (auto& x : v) x = f64();
    }
    return v;
  }

  std::size_t pos() const { return pos_; }

 private:
  void need(std::size_t n) const {
    if (b_.size() - pos_ < n) throw ModelFormatError("truncated file");
  }

  std::span<const unsigned char> b_;
  std::size_t pos_ = 0;
};

void write_config(ByteWriter& w, const TrainConfig& c) {
  w.f64(c.alpha);
  w.u32(c.t_max);
  w.u32(c.dim);
  w.u32(c.d);
  w.u32(c.d_prime);
  w.f64(c.epsilon);
  w.f64(c.lr0);
  w.u32(c.iterations);
  w.u32(c.negatives);
  w.f64(c.noise_power);
  w.u32(c.min_count);
  w.u8(static_cast<std::uint8_t>(c.variant));
  w.u64(c.seed);
  w.f64(c.subsample);
  w.f64(c.stick_decay);
}

TrainConfig read_config(ByteReader& r) {
  TrainConfig c;
  c.alpha = r.f64();
  c.t_max = r.u32();
  c.dim = r.u32();
  c.d = r.u32();
  c.d_prime = r.u32();
  c.epsilon = r.f64();
  c.lr0 = r.f64();
  c.iterations = r.u32();
  c.negatives = r.u32();
  c.noise_power = r.f64();
  c.min_count = r.u32();
  const auto v = r.u8();
  if (v > static_cast<std::uint8_t>(Variant::kMono)) {
    throw ModelFormatError("unknown variant code " + std::to_string(v));
  }
  c.variant = static_cast<Variant>(v);
  c.seed = r.u64();
  c.subsample = r.f64();
  c.stick_decay = r.f64();
  try {
    c.validate();
  } catch (const UsageError& e) {
    throw ModelFormatError(std::string("invalid config: ") + e.what());
  }
  return c;
}

void write_matrix(ByteWriter& w, const Matrix& m) {
  w.u64(m.rows());
  w.u64(m.cols());
  w.reals(m.data());
}

Matrix read_matrix(ByteReader& r, std::size_t rows, std::size_t cols) {
  const auto got_rows = r.u64();
  const auto got_cols = r.u64();
  if (got_rows != rows || got_cols != cols) {
    throw ModelFormatError("matrix shape mismatch");
  }
  Matrix m(rows, cols);
  m.data_mutable() = r.reals(rows * cols);
  return m;
}

}  // namespace

std::uint64_t crc64(std::span<const unsigned char> bytes) {
  Crc64Xz crc;
  crc.process_bytes(bytes.data(), bytes.size());
  return crc.checksum();
}

std::string serialize_model(const SenseModel& m) {
  ByteWriter w;
  w.raw(kModelMagic, sizeof(kModelMagic));
  w.u32(kModelFormatVersion);
  write_config(w, m.config);

  const auto& langs = m.vocab.languages();
  w.u32(static_cast<std::uint32_t>(langs.size()));
  for (const auto& l : langs) w.str(l);
  w.u64(m.vocab.en_size());
  for (const auto& e : m.vocab.en_entries()) {
    w.str(e.word);
    w.u64(e.count);
  }
  w.u64(m.vocab.fg_size());
  for (const auto& e : m.vocab.fg_entries()) {
    w.str(e.word);
    w.u32(e.lang);
    w.u64(e.count);
  }

  write_matrix(w, m.in_en);
  write_matrix(w, m.ctx_en);
  write_matrix(w, m.in_fg);
  write_matrix(w, m.ctx_fg);
  w.reals(m.sticks.raw());

  w.u32(m.state.epochs_done);
  w.u64(m.state.tokens_processed);
  w.str(m.state.rng_state);

  auto& buf = w.buffer();
  const auto crc = crc64(std::span(
      reinterpret_cast<const unsigned char*>(buf.data()), buf.size()));
  w.u64(crc);
  return std::move(buf);
}

SenseModel deserialize_model(std::span<const unsigned char> bytes) {
  if (bytes.size() < sizeof(kModelMagic) ||
      std::memcmp(bytes.data(), kModelMagic, sizeof(kModelMagic)) != 0) {
    throw ModelFormatError("bad magic bytes");
  }
  ByteReader r(bytes.subspan(sizeof(kModelMagic)));
  const auto version = r.u32();
  if (version != kModelFormatVersion) {
    throw ModelFormatError("unsupported format version " +
                           std::to_string(version));
  }
  if (bytes.size() < sizeof(kModelMagic) + 4 + 8) {
    throw ModelFormatError("truncated file");
  }
  const auto body = bytes.first(bytes.size() - 8);
  ByteReader trailer(bytes.last(8));
  if (crc64(body) != trailer.u64()) {
    throw ModelFormatError("checksum mismatch (corrupt or truncated file)");
  }

  SenseModel m;
  m.config = read_config(r);

  std::vector<std::string> langs(r.u32());
  for (auto& l : langs) l = r.str();
  std::vector<EnglishEntry> en(r.u64());
  for (auto& e : en) {
    e.word = r.str();
    e.count = r.u64();
  }
  std::vector<ForeignEntry> fg(r.u64());
  for (auto& e : fg) {
    e.word = r.str();
    e.lang = r.u32();
    e.count = r.u64();
  }
  m.vocab = Vocabulary(std::move(langs), std::move(en), std::move(fg));

  const std::size_t ve = m.vocab.en_size();
  const std::size_t vf = m.vocab.fg_size();
  const std::size_t dim = m.config.dim;
  m.in_en = read_matrix(r, ve * m.config.t_max, dim);
  m.ctx_en = read_matrix(r, ve, dim);
  m.in_fg = read_matrix(r, vf, dim);
  m.ctx_fg = read_matrix(r, vf, dim);
  m.sticks = StickStats(ve, m.config.t_max);
  m.sticks.raw_mutable() = r.reals(ve * m.config.t_max);

  m.state.epochs_done = r.u32();
  m.state.tokens_processed = r.u64();
  m.state.rng_state = r.str();

  if (sizeof(kModelMagic) + r.pos() != body.size()) {
    throw ModelFormatError("trailing bytes before checksum");
  }
  return m;
}

void save_model(const SenseModel& model, const std::string& path) {
  const auto bytes = serialize_model(model);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open " + path + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw DataError("write failed: " + path);
}

SenseModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open model file " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  return deserialize_model(bytes);
}

void export_text(const SenseModel& m, std::ostream& out) {
  const std::size_t t = m.config.t_max;
  std::vector<std::vector<std::size_t>> active(m.vocab.en_size());
  std::size_t rows = m.vocab.fg_size();
  for (WordId w = 0; w < m.vocab.en_size(); ++w) {
    active[w] = active_senses(m, w);
    rows += active[w].size();
  }
  const auto old_precision = out.precision(9);
  out << rows << ' ' << m.config.dim << '\n';
  for (WordId w = 0; w < m.vocab.en_size(); ++w) {
    const auto prior = expected_sense_prior(m, w);
    for (auto k : active[w]) {
      out << m.vocab.en(w).word << '#' << (k + 1) << ' ' << prior.probs[k];
      for (Real v : m.in_en.row(w * t + k)) out << ' ' << v;
      out << '\n';
    }
  }
  const auto& langs = m.vocab.languages();
  for (WordId f = 0; f < m.vocab.fg_size(); ++f) {
    const auto& e = m.vocab.fg(f);
    out << e.word << '@' << langs[e.lang];
    for (Real v : m.in_fg.row(f)) out << ' ' << v;
    out << '\n';
  }
  out.precision(old_precision);
}

void export_text(const SenseModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open " + path + " for writing");
  export_text(model, out);
  if (!out) throw DataError("write failed: " + path);
}

}  // namespace parasense
