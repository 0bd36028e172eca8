#include "framecoh/constructions.hpp"
#include "framecoh/frame_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace framecoh;

namespace {

Frame round_trip(const Frame& f, FrameEncoding enc) {
  std::stringstream buffer;
  write_frame(buffer, f, enc);
  return read_frame(buffer);
}

std::size_t error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_frame(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 9999;
}

}  // namespace

TEST_CASE("text and binary round trips are bit exact") {
  const Frame real = build_gaussian({7, 13, 99});
  const Frame cplx = build_harmonic({20, 8, 4}).frame;
  for (const auto enc : {FrameEncoding::Text, FrameEncoding::Binary}) {
    const Frame r = round_trip(real, enc);
    REQUIRE(r.is_real());
    CHECK(r.real_matrix() == real.real_matrix());
    const Frame c = round_trip(cplx, enc);
    REQUIRE_FALSE(c.is_real());
    CHECK(c.complex_matrix() == cplx.complex_matrix());
  }
}

TEST_CASE("text layout: header then one column per line") {
  Eigen::MatrixXd d(2, 2);
  d << 1, 0, 0, -1;
  std::stringstream out;
  write_frame(out, Frame::from_real(d));
  CHECK(out.str() == "FRAME v1 2 2 real\n1 0\n0 -1\n");

  Eigen::MatrixXcd c(1, 1);
  c << cd(0.6, -0.8);
  std::stringstream outc;
  write_frame(outc, Frame::from_complex(c));
  CHECK(outc.str() == "FRAME v1 1 1 complex\n0.6-0.8i\n");
}

TEST_CASE("complex tokens") {
  CHECK(parse_complex("1.5") == cd(1.5, 0));
  CHECK(parse_complex("1.5+2i") == cd(1.5, 2));
  CHECK(parse_complex("-1.5-2i") == cd(-1.5, -2));
  CHECK(parse_complex("3i") == cd(0, 3));
  CHECK(parse_complex("-3i") == cd(0, -3));
  CHECK(parse_complex("1e-5+2E+3i") == cd(1e-5, 2e3));
  CHECK(parse_complex("-1e+5-2e-3i") == cd(-1e5, -2e-3));
  CHECK(format_complex(cd(1, -0.0)) == "1-0i");
  CHECK(parse_complex(format_complex(cd(0.1, 1.0 / 3.0))) == cd(0.1, 1.0 / 3.0));
  CHECK_THROWS_AS(parse_complex("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex(""), std::invalid_argument);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_line("") == 1);
  CHECK(error_line("FRAME v2 1 1 real\n1\n") == 1);
  CHECK(error_line("FRAME v1 1 1 quaternion\n1\n") == 1);
  CHECK(error_line("FRAME v1 0 1 real\n") == 1);
  CHECK(error_line("FRAME v1 2 1 real\n1\nbogus\n") == 3);
  CHECK(error_line("FRAME v1 2 1 real\n1 2i\n") == 2);
  CHECK(error_line("FRAME v1 2 1 real\n1 0 5\n") == 2);
  CHECK(error_line("FRAME v1 2 2 real\n1 0\n0\n") == 3);

  std::istringstream short_input("FRAME v1 2 2 real\n1 0\n0\n");
  CHECK_THROWS_WITH_AS(read_frame(short_input), "line 3: expected 4 entries, found 3", ParseError);
}

TEST_CASE("truncated binary payload is an error") {
  std::stringstream buffer;
  write_frame(buffer, Frame::identity(3), FrameEncoding::Binary);
  std::string bytes = buffer.str();
  bytes.resize(bytes.size() - 4);
  std::istringstream in(bytes);
  CHECK_THROWS_AS(read_frame(in), ParseError);
}

TEST_CASE("zero column in a file is rejected") {
  std::istringstream in("FRAME v1 2 2 real\n1 0\n0 0\n");
  CHECK_THROWS_AS(read_frame(in), ParseError);
}

TEST_CASE("files: save, load, missing path") {
  const auto path = std::filesystem::temp_directory_path() / "framecoh_io_test.frame";
  const Frame f = build_gaussian({3, 5, 1});
  save_frame(path, f, FrameEncoding::Binary);
  CHECK(load_frame(path).real_matrix() == f.real_matrix());
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_frame(path), std::runtime_error);
}

TEST_CASE("worked 5x10 fixture loads as a real unit-norm frame") {
  const Frame f = load_frame(FRAMECOH_FIXTURES "/example_5x10.frame");
  CHECK(f.rows() == 5);
  CHECK(f.cols() == 10);
  CHECK(f.is_real());
  CHECK(column_norm_deviation(f) < 1e-15);
  CHECK(f.real_matrix()(4, 0) < 0.0);  // first column reads + + + - -
  CHECK(f.real_matrix()(3, 0) < 0.0);
}
