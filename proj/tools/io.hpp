#ifndef MALIGN_TOOLS_IO_HPP
#define MALIGN_TOOLS_IO_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "malign/types.hpp"

namespace malign::io {

// Binary embedding-file layout (little-endian, bit-exact):
//   bytes 0-3   ASCII "MALN"
//   bytes 4-5   version, u16 (currently 1)
//   bytes 6-9   n_frames, u32
//   bytes 10-13 dim, u32
//   then n_frames * dim IEEE-754 float32 values, frame-major.
inline constexpr char kMagic[4] = {'M', 'A', 'L', 'N'};
inline constexpr std::uint16_t kVersion = 1;
inline constexpr std::size_t kHeaderBytes = 14;

enum class FileFormat { Auto, Binary, Csv };

FileFormat format_from_name(std::string_view name);

// Serialize to the binary layout; components are narrowed to float32.
std::vector<std::uint8_t> encode_embedding(const EmbeddingSequence& seq);

// Parse the binary layout. Errors name the byte offset at which the
// file ended or went wrong.
EmbeddingSequence decode_embedding(const std::vector<std::uint8_t>& bytes,
                                   const std::string& origin);

// CSV fallback: one frame per line, comma-separated decimals, uniform
// column count. Values are parsed to the nearest float32 and widened,
// matching what a binary round-trip would produce.
EmbeddingSequence parse_csv(const std::string& content,
                            const std::string& origin);

// Load a sequence from disk. Auto format sniffs the magic bytes.
EmbeddingSequence load_embedding(const std::filesystem::path& path,
                                 FileFormat format = FileFormat::Auto);

void save_embedding(const std::filesystem::path& path,
                    const EmbeddingSequence& seq);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);

// Atomic write: temp file in the same directory, then rename.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);
void write_file_atomic(const std::filesystem::path& path,
                       const std::vector<std::uint8_t>& content);

}  // namespace malign::io

#endif  // MALIGN_TOOLS_IO_HPP
