#pragma once

#include "framecoh/frame.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace framecoh {

/// Malformed FRAME input. line() is 1-based; 0 when the position is unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

enum class FrameEncoding { Text, Binary };

// Text:   "FRAME v1 <M> <N> <real|complex>\n" then M*N column-major entries,
//         whitespace separated, complex entries written as a+bi.
// Binary: "FRAME v1 <M> <N> <real|complex> binary\n" then little-endian
//         IEEE-754 doubles (re, im pairs for complex).
void write_frame(std::ostream& out, const Frame& frame, FrameEncoding encoding = FrameEncoding::Text);
Frame read_frame(std::istream& in);

void save_frame(const std::filesystem::path& path, const Frame& frame,
                FrameEncoding encoding = FrameEncoding::Text);
Frame load_frame(const std::filesystem::path& path);

std::string format_complex(cd value);
/// Accepts "a", "a+bi", "a-bi", "bi". Throws std::invalid_argument.
cd parse_complex(const std::string& token);

}  // namespace framecoh
