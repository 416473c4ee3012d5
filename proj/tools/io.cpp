#include "io.hpp"

#include <bit>
#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <fstream>

#include "malign/errors.hpp"

namespace malign::io {

namespace {

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int b = 0; b < 4; ++b) {
    out.push_back(static_cast<std::uint8_t>((v >> (8 * b)) & 0xFF));
  }
}

std::uint16_t get_u16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t get_u32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

}  // namespace

FileFormat format_from_name(std::string_view name) {
  if (name == "auto") return FileFormat::Auto;
  if (name == "bin") return FileFormat::Binary;
  if (name == "csv") return FileFormat::Csv;
  throw ValidationError("unknown file format: " + std::string(name));
}

std::vector<std::uint8_t> encode_embedding(const EmbeddingSequence& seq) {
  std::vector<std::uint8_t> out;
  out.reserve(kHeaderBytes + seq.data().size() * 4);
  out.insert(out.end(), kMagic, kMagic + 4);
  put_u16(out, kVersion);
  put_u32(out, static_cast<std::uint32_t>(seq.len()));
  put_u32(out, static_cast<std::uint32_t>(seq.dim()));
  for (double x : seq.data()) {
    put_u32(out, std::bit_cast<std::uint32_t>(static_cast<float>(x)));
  }
  return out;
}

EmbeddingSequence decode_embedding(const std::vector<std::uint8_t>& bytes,
                                   const std::string& origin) {
  if (bytes.size() < kHeaderBytes) {
    throw ValidationError(origin + ": truncated header, file ends at byte " +
                          std::to_string(bytes.size()) + " of " +
                          std::to_string(kHeaderBytes));
  }
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw ValidationError(origin + ": bad magic at byte 0, expected 'MALN'");
  }
  std::uint16_t version = get_u16(bytes.data() + 4);
  if (version != kVersion) {
    throw ValidationError(origin + ": unsupported version " +
                          std::to_string(version) + " at byte 4");
  }
  std::uint32_t n = get_u32(bytes.data() + 6);
  std::uint32_t d = get_u32(bytes.data() + 10);
  if (n == 0 || d == 0) {
    throw ValidationError(origin + ": header declares n_frames=" +
                          std::to_string(n) + ", dim=" + std::to_string(d) +
                          "; both must be >= 1");
  }
  std::size_t expected =
      kHeaderBytes + static_cast<std::size_t>(n) * d * 4;
  if (bytes.size() != expected) {
    throw ValidationError(
        origin + ": payload ends at byte " + std::to_string(bytes.size()) +
        ", expected " + std::to_string(expected) + " bytes for " +
        std::to_string(n) + "x" + std::to_string(d) + " float32 values");
  }
  std::vector<double> data;
  data.reserve(static_cast<std::size_t>(n) * d);
  const std::uint8_t* p = bytes.data() + kHeaderBytes;
  for (std::size_t i = 0; i < static_cast<std::size_t>(n) * d; ++i) {
    data.push_back(
        static_cast<double>(std::bit_cast<float>(get_u32(p + 4 * i))));
  }
  return EmbeddingSequence(n, d, std::move(data));
}

EmbeddingSequence parse_csv(const std::string& content,
                            const std::string& origin) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t eol = content.find('\n', pos);
    if (eol == std::string::npos) eol = content.size();
    std::string line = content.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    // Skip blank lines (e.g. trailing newline).
    bool blank = true;
    for (char c : line) {
      if (c != ' ' && c != '\t') blank = false;
    }
    if (blank) continue;

    std::vector<double> row;
    std::size_t field_start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == ',') {
        std::string field = line.substr(field_start, i - field_start);
        field_start = i + 1;
        const char* begin = field.c_str();
        char* end = nullptr;
        errno = 0;
        float value = std::strtof(begin, &end);
        while (end && *end == ' ') ++end;
        if (end == begin || (end && *end != '\0') || errno == ERANGE) {
          throw ValidationError(origin + ":" + std::to_string(line_no) +
                                ": cannot parse '" + field +
                                "' as a decimal value");
        }
        row.push_back(static_cast<double>(value));
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ValidationError(origin + ":" + std::to_string(line_no) +
                            ": row has " + std::to_string(row.size()) +
                            " columns, expected " +
                            std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw ValidationError(origin + ": no frames found");
  }
  return EmbeddingSequence::from_rows(rows);
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot open " + path.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return bytes;
}

EmbeddingSequence load_embedding(const std::filesystem::path& path,
                                 FileFormat format) {
  std::vector<std::uint8_t> bytes = read_file(path);
  bool looks_binary =
      bytes.size() >= 4 && std::memcmp(bytes.data(), kMagic, 4) == 0;
  if (format == FileFormat::Auto) {
    format = looks_binary ? FileFormat::Binary : FileFormat::Csv;
  }
  if (format == FileFormat::Binary) {
    return decode_embedding(bytes, path.string());
  }
  return parse_csv(std::string(bytes.begin(), bytes.end()), path.string());
}

void save_embedding(const std::filesystem::path& path,
                    const EmbeddingSequence& seq) {
  write_file_atomic(path, encode_embedding(seq));
}

namespace {

void write_atomic_impl(const std::filesystem::path& path, const void* data,
                       std::size_t size) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw ValidationError("cannot write " + tmp.string());
    }
    out.write(static_cast<const char*>(data),
              static_cast<std::streamsize>(size));
    if (!out) {
      throw ValidationError("short write to " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content) {
  write_atomic_impl(path, content.data(), content.size());
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::vector<std::uint8_t>& content) {
  write_atomic_impl(path, content.data(), content.size());
}

}  // namespace malign::io
