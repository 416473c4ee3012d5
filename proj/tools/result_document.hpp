#ifndef MALIGN_TOOLS_RESULT_DOCUMENT_HPP
#define MALIGN_TOOLS_RESULT_DOCUMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "malign/types.hpp"

namespace malign::io {

// Self-describing JSON result emitted by the align/grad/synth commands.
// Doubles are serialized with a shortest round-trip representation, so
// parse(serialize(doc)) reproduces every value exactly.
struct ResultDocument {
  int schema_version = 1;
  std::string command;
  std::string solver;
  std::string metric;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t dim = 0;
  double loss = 0.0;
  std::vector<std::size_t> path;
  std::optional<double> elapsed_ms;
  std::optional<Grid> d_audio;
  std::optional<Grid> d_text;
  std::optional<double> noise_sigma;
  std::optional<std::uint64_t> seed;

  std::string serialize() const;
  static ResultDocument parse(const std::string& text);
};

}  // namespace malign::io

#endif  // MALIGN_TOOLS_RESULT_DOCUMENT_HPP
