#include "framecoh/frame_io.hpp"

#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace framecoh {

namespace {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("not a number: '" + std::string(s) + "'");
  }
  return v;
}

void put_le(std::ostream& out, double v) {
  auto bits = std::bit_cast<std::uint64_t>(v);
  char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((bits >> (8 * i)) & 0xff);
  out.write(bytes, 8);
}

double get_le(std::istream& in) {
  unsigned char bytes[8];
  if (!in.read(reinterpret_cast<char*>(bytes), 8)) throw ParseError(0, "binary payload truncated");
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  return std::bit_cast<double>(bits);
}

struct Header {
  Index rows = 0;
  Index cols = 0;
  ScalarField field = ScalarField::Real;
  bool binary = false;
};

Header parse_header(const std::string& line) {
  std::istringstream ss(line);
  std::string magic, version, field, encoding, extra;
  long long m = 0, n = 0;
  if (!(ss >> magic >> version) || magic != "FRAME") throw ParseError(1, "missing 'FRAME' header");
  if (version != "v1") throw ParseError(1, "unsupported version '" + version + "'");
  if (!(ss >> m >> n) || m < 1 || n < 1) throw ParseError(1, "bad dimensions in header");
  if (!(ss >> field) || (field != "real" && field != "complex")) {
    throw ParseError(1, "scalar field must be 'real' or 'complex'");
  }
  Header h{static_cast<Index>(m), static_cast<Index>(n),
           field == "real" ? ScalarField::Real : ScalarField::Complex, false};
  if (ss >> encoding) {
    if (encoding != "binary") throw ParseError(1, "unknown encoding '" + encoding + "'");
    h.binary = true;
  }
  if (ss >> extra) throw ParseError(1, "trailing header token '" + extra + "'");
  return h;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

std::string format_complex(cd value) {
  std::string s = format_double(value.real());
  const double im = value.imag();
  if (std::signbit(im)) {
    s += '-';
    s += format_double(-im);
  } else {
    s += '+';
    s += format_double(im);
  }
  s += 'i';
  return s;
}

cd parse_complex(const std::string& token) {
  if (token.empty()) throw std::invalid_argument("empty token");
  if (token.back() != 'i') return {parse_double(token), 0.0};
  const std::string_view body(token.data(), token.size() - 1);
  // Split at the last sign that is not leading and not an exponent sign.
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      const double re = parse_double(body.substr(0, k));
      std::string_view im = body.substr(k);
      if (im.front() == '+') im.remove_prefix(1);
      return {re, parse_double(im)};
    }
  }
  return {0.0, parse_double(body)};
}

void write_frame(std::ostream& out, const Frame& frame, FrameEncoding encoding) {
  out << "FRAME v1 " << frame.rows() << ' ' << frame.cols() << ' ' << to_string(frame.field());
  if (encoding == FrameEncoding::Binary) {
    out << " binary\n";
    frame.visit([&](const auto& d) {
      for (Index j = 0; j < d.cols(); ++j) {
        for (Index i = 0; i < d.rows(); ++i) {
          const cd v(d(i, j));
          put_le(out, v.real());
          if (!frame.is_real()) put_le(out, v.imag());
        }
      }
    });
    return;
  }
  out << '\n';
  frame.visit([&](const auto& d) {
    for (Index j = 0; j < d.cols(); ++j) {
      for (Index i = 0; i < d.rows(); ++i) {
        if (i) out << ' ';
        if (frame.is_real()) {
          out << format_double(std::real(d(i, j)));
        } else {
          out << format_complex(cd(d(i, j)));
        }
      }
      out << '\n';
    }
  });
}

Frame read_frame(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "empty input");
  const Header h = parse_header(line);
  const Index total = h.rows * h.cols;

  if (h.binary) {
    if (h.field == ScalarField::Real) {
      Eigen::MatrixXd d(h.rows, h.cols);
      for (Index k = 0; k < total; ++k) d.data()[k] = get_le(in);
      return Frame::from_real(std::move(d));
    }
    Eigen::MatrixXcd d(h.rows, h.cols);
    for (Index k = 0; k < total; ++k) {
      const double re = get_le(in);
      d.data()[k] = cd(re, get_le(in));
    }
    return Frame::from_complex(std::move(d));
  }

  std::vector<cd> values;
  values.reserve(static_cast<std::size_t>(total));
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string token;
    while (ss >> token) {
      if (static_cast<Index>(values.size()) == total) {
        throw ParseError(lineno, "more than " + std::to_string(total) + " entries");
      }
      try {
        const cd v = parse_complex(token);
        if (h.field == ScalarField::Real && token.back() == 'i') {
          throw std::invalid_argument("complex entry '" + token + "' in a real frame");
        }
        values.push_back(v);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
      }
    }
  }
  if (static_cast<Index>(values.size()) != total) {
    throw ParseError(lineno, "expected " + std::to_string(total) + " entries, found " +
                                 std::to_string(values.size()));
  }
  try {
    if (h.field == ScalarField::Real) {
      Eigen::MatrixXd d(h.rows, h.cols);
      for (Index k = 0; k < total; ++k) d.data()[k] = values[static_cast<std::size_t>(k)].real();
      return Frame::from_real(std::move(d));
    }
    Eigen::MatrixXcd d(h.rows, h.cols);
    for (Index k = 0; k < total; ++k) d.data()[k] = values[static_cast<std::size_t>(k)];
    return Frame::from_complex(std::move(d));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

void save_frame(const std::filesystem::path& path, const Frame& frame, FrameEncoding encoding) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_frame(out, frame, encoding);
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

Frame load_frame(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  return read_frame(in);
}

}  // namespace framecoh
