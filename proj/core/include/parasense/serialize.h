#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "parasense/model.h"

namespace parasense {

inline constexpr char kModelMagic[4] = {'P', 'S', 'N', 'S'};
inline constexpr std::uint32_t kModelFormatVersion = 1;

// CRC-64/XZ (ECMA-182 polynomial, reflected, inverted).
std::uint64_t crc64(std::span<const unsigned char> bytes);

// Little-endian binary layout:
//   "PSNS" | u32 version | config | vocabulary | in_en | ctx_en | in_fg |
//   ctx_fg | stick counts | train state | u64 CRC of all preceding bytes
std::string serialize_model(const SenseModel& model);
SenseModel deserialize_model(std::span<const unsigned char> bytes);

void save_model(const SenseModel& model, const std::string& path);
SenseModel load_model(const std::string& path);

// Header `<rows> <dim>`, then `word#k p_k v...` per active sense (k 1-based)
// and `word@lang v...` per foreign word. Values use 9 significant digits.
void export_text(const SenseModel& model, std::ostream& out);
void export_text(const SenseModel& model, const std::string& path);

}  // namespace parasense
